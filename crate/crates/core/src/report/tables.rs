use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::capability::{theorem2_bound_check, Theorem2Outcome};
use crate::catalog::{build_in, default_epsilons, list_up_to, CatalogKey};
use crate::covers::{diagonal_square_dim, exterior_center, exterior_square, free_nilpotent_dim, tensor_square};
use crate::error::{Error, Result};
use crate::homology::{kunneth_exterior_dim, kunneth_tensor_dim, multiplier_dim};
use crate::lie::LieAlgebra;
use crate::linalg::{Field, Rational};
use crate::par::{self, Execution};
use crate::recognize::{recognize, IsoType};

const EXPECTED: &str = include_str!("../../data/expected.toml");

/// Suite identifiers accepted by [`run_selector`], besides `all`.
pub const SUITES: [&str; 10] = [
    "dim4",
    "multipliers5",
    "exterior5",
    "diagonal5",
    "tensor5",
    "multipliers6",
    "exterior6",
    "census",
    "kunneth",
    "theorem2",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Multiplier,
    Exterior,
    Diagonal,
    Tensor,
    Capability,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EpsilonFilter {
    Zero,
    Nonzero,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedRow {
    pub suite: String,
    pub quantity: Quantity,
    pub keys: Vec<String>,
    #[serde(default)]
    pub epsilon: Option<EpsilonFilter>,
    pub expect: String,
    pub source: String,
}

#[derive(Deserialize)]
struct ExpectedFile {
    version: u32,
    rows: Vec<ExpectedRow>,
}

pub fn expected_rows() -> Result<Vec<ExpectedRow>> {
    let file: ExpectedFile = toml::from_str(EXPECTED).map_err(|e| Error::Parse(e.to_string()))?;
    if file.version != 1 {
        return Err(Error::Parse(format!("unsupported expected-table version {}", file.version)));
    }
    Ok(file.rows)
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub field: Field,
    pub epsilons: Vec<Rational>,
    pub exec: Execution,
    pub kunneth_pairs: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            field: Field::Rationals,
            epsilons: default_epsilons(),
            exec: Execution::Parallel,
            kunneth_pairs: 50,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowResult {
    pub subject: String,
    pub quantity: String,
    pub expected: String,
    pub computed: String,
    pub source: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationSuite {
    pub id: String,
    pub rows: Vec<RowResult>,
}

impl VerificationSuite {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RowResult> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

pub fn run_selector(selector: &str, opts: &VerifyOptions) -> Result<Vec<VerificationSuite>> {
    if selector == "all" {
        SUITES.iter().map(|s| run_suite(s, opts)).collect()
    } else {
        Ok(vec![run_suite(selector, opts)?])
    }
}

pub fn run_suite(id: &str, opts: &VerifyOptions) -> Result<VerificationSuite> {
    let rows = match id {
        "census" => census_rows(opts)?,
        "kunneth" => kunneth_rows(opts)?,
        "theorem2" => theorem2_rows(opts)?,
        _ if SUITES.contains(&id) => table_rows(id, opts)?,
        _ => return Err(Error::Parse(format!("unknown suite `{id}` (expected all or one of {})", SUITES.join(", ")))),
    };
    Ok(VerificationSuite { id: id.to_string(), rows })
}

/// Expands a key without a parameter to the sampled family members.
fn expand(key: &str, filter: Option<EpsilonFilter>, epsilons: &[Rational]) -> Result<Vec<CatalogKey>> {
    let k: CatalogKey = if key.contains('(') { key.parse()? } else { parse_family(key)? };
    if !k.is_parameterized() || k.epsilon().is_some() {
        return Ok(vec![k]);
    }
    let CatalogKey::Indexed { dim, index, .. } = k else { unreachable!() };
    Ok(epsilons
        .iter()
        .filter(|e| match filter {
            None => true,
            Some(EpsilonFilter::Zero) => e.is_zero(),
            Some(EpsilonFilter::Nonzero) => !e.is_zero(),
        })
        .map(|e| CatalogKey::with_epsilon(dim, index, e.clone()))
        .collect())
}

fn parse_family(key: &str) -> Result<CatalogKey> {
    match key.parse::<CatalogKey>() {
        Ok(k) => Ok(k),
        Err(Error::EpsilonRequired(_)) => {
            let (d, i) = key
                .strip_prefix('L')
                .and_then(|r| r.split_once('_'))
                .ok_or_else(|| Error::UnknownKey(key.to_string()))?;
            let parse = |s: &str| s.parse::<usize>().map_err(|_| Error::UnknownKey(key.to_string()));
            Ok(CatalogKey::Indexed { dim: parse(d)?, index: parse(i)?, epsilon: None })
        }
        Err(e) => Err(e),
    }
}

fn compute(q: Quantity, l: &LieAlgebra) -> Result<String> {
    Ok(match q {
        Quantity::Multiplier => IsoType::Abelian(multiplier_dim(l)).to_string(),
        Quantity::Exterior => recognize(&exterior_square(l)?).to_string(),
        Quantity::Diagonal => IsoType::Abelian(diagonal_square_dim(l)).to_string(),
        Quantity::Tensor => recognize(&tensor_square(l)?).to_string(),
        Quantity::Capability => capability_word(exterior_center(l)?.is_zero()).to_string(),
    })
}

fn capability_word(capable: bool) -> &'static str {
    if capable {
        "capable"
    } else {
        "noncapable"
    }
}

fn quantity_name(q: Quantity) -> &'static str {
    match q {
        Quantity::Multiplier => "multiplier",
        Quantity::Exterior => "exterior square",
        Quantity::Diagonal => "diagonal square",
        Quantity::Tensor => "tensor square",
        Quantity::Capability => "capability",
    }
}

struct Task {
    key: CatalogKey,
    quantity: Quantity,
    expected: String,
    source: String,
}

fn run_tasks(tasks: Vec<Task>, opts: &VerifyOptions) -> Result<Vec<RowResult>> {
    par::map(opts.exec, &tasks, |t| {
        let l = build_in(&t.key, opts.field)?.algebra;
        let computed = compute(t.quantity, &l)?;
        Ok(RowResult {
            subject: t.key.to_string(),
            quantity: quantity_name(t.quantity).to_string(),
            pass: computed == t.expected,
            expected: t.expected.clone(),
            computed,
            source: t.source.clone(),
        })
    })
    .into_iter()
    .collect()
}

fn table_rows(id: &str, opts: &VerifyOptions) -> Result<Vec<RowResult>> {
    let mut tasks = Vec::new();
    for row in expected_rows()?.into_iter().filter(|r| r.suite == id) {
        for key in &row.keys {
            for k in expand(key, row.epsilon, &opts.epsilons)? {
                tasks.push(Task {
                    key: k,
                    quantity: row.quantity,
                    expected: row.expect.clone(),
                    source: row.source.clone(),
                });
            }
        }
    }
    let mut results = run_tasks(tasks, opts)?;
    results.sort_by_key(|r| (subject_order(&r.subject), r.quantity.clone()));
    Ok(results)
}

/// Sort key placing `L6_9` before `L6_10`, keeping parameter order stable.
fn subject_order(subject: &str) -> (usize, usize, usize, String) {
    match subject.parse::<CatalogKey>() {
        Ok(CatalogKey::Indexed { dim, index, .. }) => (dim, 1, index, String::new()),
        Ok(CatalogKey::Abelian(n)) => (n, 0, 0, String::new()),
        _ => (usize::MAX, 0, 0, subject.to_string()),
    }
}

fn census_rows(opts: &VerifyOptions) -> Result<Vec<RowResult>> {
    let rows = expected_rows()?;
    let listed = rows.iter().find(|r| r.suite == "census").ok_or_else(|| Error::Parse("no census row".into()))?;
    let mut noncapable = HashSet::new();
    for key in &listed.keys {
        noncapable.extend(expand(key, None, &opts.epsilons)?);
    }
    let tasks = list_up_to(6, &opts.epsilons)?
        .into_iter()
        .map(|k| Task {
            expected: capability_word(!noncapable.contains(&k)).to_string(),
            source: listed.source.clone(),
            quantity: Quantity::Capability,
            key: k,
        })
        .collect();
    run_tasks(tasks, opts)
}

/// Largest free nilpotent algebra the Künneth sampler will build a cover in.
const KUNNETH_FREE_DIM_CAP: u128 = 160;

fn kunneth_rows(opts: &VerifyOptions) -> Result<Vec<RowResult>> {
    let keys = list_up_to(6, &opts.epsilons)?;
    let algebras = keys.iter().map(|k| Ok(build_in(k, opts.field)?.algebra)).collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut pairs = Vec::new();
    while pairs.len() < opts.kunneth_pairs {
        let (a, b) = (rng.gen_range(0..keys.len()), rng.gen_range(0..keys.len()));
        let (h, k) = (&algebras[a], &algebras[b]);
        let d = h.minimal_generator_count()? + k.minimal_generator_count()?;
        let c = h.nilpotency_class()?.max(k.nilpotency_class()?);
        if free_nilpotent_dim(d, c + 1) <= KUNNETH_FREE_DIM_CAP {
            pairs.push((a, b));
        }
    }
    par::map(opts.exec, &pairs, |&(a, b)| {
        let (h, k) = (&algebras[a], &algebras[b]);
        let sum = h.direct_sum(k)?;
        let expected = format!("∧ {}, ⊗ {}", kunneth_exterior_dim(h, k), kunneth_tensor_dim(h, k));
        let computed = format!("∧ {}, ⊗ {}", exterior_square(&sum)?.dim(), tensor_square(&sum)?.dim());
        Ok(RowResult {
            subject: format!("{} + {}", keys[a], keys[b]),
            quantity: "square dimensions".into(),
            pass: expected == computed,
            expected,
            computed,
            source: "Künneth decomposition of exterior and tensor squares".into(),
        })
    })
    .into_iter()
    .collect()
}

fn theorem2_rows(opts: &VerifyOptions) -> Result<Vec<RowResult>> {
    let keys = list_up_to(6, &opts.epsilons)?;
    par::map(opts.exec, &keys, |k| {
        let l = build_in(k, opts.field)?.algebra;
        let outcome = theorem2_bound_check(&l)?;
        let (computed, pass) = match &outcome {
            Theorem2Outcome::Holds { lhs, rhs } => (format!("holds: {lhs} <= {rhs}"), true),
            Theorem2Outcome::Skipped { reason } => (format!("skipped: {reason}"), true),
            Theorem2Outcome::Violated { lhs, rhs } => (format!("violated: {lhs} > {rhs}"), false),
        };
        Ok(RowResult {
            subject: k.to_string(),
            quantity: "exterior center of L∧L".into(),
            expected: "holds or skipped".into(),
            computed,
            source: "bound of the exterior center of the exterior square".into(),
            pass,
        })
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn data_file_loads() {
        let rows = expected_rows().unwrap();
        for r in &rows {
            assert!(SUITES.contains(&r.suite.as_str()), "{}", r.suite);
            for k in &r.keys {
                assert!(!expand(k, r.epsilon, &default_epsilons()).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn table_suites_cover_their_dimension_once() {
        let eps = default_epsilons();
        let rows = expected_rows().unwrap();
        for (suite, dim) in [
            ("multipliers5", 5),
            ("exterior5", 5),
            ("diagonal5", 5),
            ("tensor5", 5),
            ("multipliers6", 6),
            ("exterior6", 6),
        ] {
            let mut seen: Vec<CatalogKey> = Vec::new();
            for r in rows.iter().filter(|r| r.suite == suite) {
                for k in &r.keys {
                    seen.extend(expand(k, r.epsilon, &eps).unwrap());
                }
            }
            let mut all = crate::catalog::list_with_epsilons(dim, &eps).unwrap();
            all.sort_by_key(|k| k.to_string());
            seen.sort_by_key(|k| k.to_string());
            assert_eq!(seen, all, "{suite}");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("bogus", &VerifyOptions::default()), Err(Error::Parse(_))));
    }
}
