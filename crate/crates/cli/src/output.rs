//! Text formats written by the CLI.

use num_traits::ToPrimitive;
use serde::Serialize;
use treemaps::count::power;
use treemaps::{rhs_tree_count, BigCount, Error, Partition};

#[derive(Serialize)]
struct CensusRow {
    #[serde(rename = "type")]
    type_: String,
    count: String,
}

/// `[{"type": "1^2", "count": "2"}, ...]`.
pub fn census_json(rows: &[(Partition, BigCount)]) -> String {
    let rows: Vec<_> = rows
        .iter()
        .map(|(l, c)| CensusRow { type_: l.to_string(), count: c.to_string() })
        .collect();
    serde_json::to_string_pretty(&rows).expect("census serializes")
}

/// Header `type,count`. The type field is always quoted since the partition
/// grammar itself uses commas.
pub fn census_csv(rows: &[(Partition, BigCount)]) -> String {
    let mut out = String::from("type,count\n");
    for (l, c) in rows {
        out.push_str(&format!("\"{l}\",{c}\n"));
    }
    out
}

/// Probability that a uniform tree on `[n]` has local type `lambda`.
pub fn type_probability(n: u32, lambda: &Partition) -> Result<f64, Error> {
    if n < 2 {
        return Err(Error::InvalidArgument("sampling needs n >= 2".into()));
    }
    let count = rhs_tree_count(n, lambda)?;
    let total = power(n as u64, n as u64 - 2);
    Ok(ratio(&count, &total))
}

fn ratio(num: &BigCount, den: &BigCount) -> f64 {
    // Both sides can exceed f64 range for large n; scale down together.
    let shift = den.bits().saturating_sub(1000);
    let (num, den) = (num >> shift, den >> shift);
    num.to_f64().unwrap_or(f64::NAN) / den.to_f64().unwrap_or(f64::NAN)
}

#[derive(Serialize)]
struct SampleReport {
    n: u32,
    count: u64,
    seed: u64,
    #[serde(rename = "type")]
    type_: String,
    observed: String,
    empirical_frequency: f64,
    expected_probability: f64,
    expected_count: f64,
    sigma: f64,
    z_score: f64,
    within_5_sigma: bool,
}

pub fn sample_json(
    n: u32,
    count: u64,
    seed: u64,
    lambda: &Partition,
    observed: &BigCount,
    probability: f64,
) -> String {
    let observed_f = observed.to_f64().unwrap_or(f64::NAN);
    let mean = count as f64 * probability;
    let sigma = (count as f64 * probability * (1.0 - probability)).sqrt();
    let z = if sigma > 0.0 { (observed_f - mean) / sigma } else { 0.0 };
    let value = SampleReport {
        n,
        count,
        seed,
        type_: lambda.to_string(),
        observed: observed.to_string(),
        empirical_frequency: observed_f / count.max(1) as f64,
        expected_probability: probability,
        expected_count: mean,
        sigma,
        z_score: z,
        within_5_sigma: (observed_f - mean).abs() <= 5.0 * sigma,
    };
    serde_json::to_string_pretty(&value).expect("sample report serializes")
}
