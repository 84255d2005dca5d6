//! File formats: JSON encodings of ideals, group algebra elements, Thoma
//! parameters and representations, and the character table CSV. All
//! encodings are canonical, so rebuilding the same object yields identical
//! bytes.

use serde::{Deserialize, Serialize};

use sinfty_core::group_algebra::{GroupAlgebraElement, Perm};
use sinfty_core::ideals::{Exactness, Level, TruncatedIdeal};
use sinfty_core::linalg::Subspace;
use sinfty_core::partitions::{InfPartition, InfRows, Partition};
use sinfty_core::rep::{character_row, RepnAction};
use sinfty_core::scalar::{parse_scalar, FieldKind, Scalar};
use sinfty_core::thoma::ThomaParam;

use num_bigint::BigInt;
use num_rational::BigRational;
use std::str::FromStr;

#[derive(Debug)]
pub struct FormatError(pub String);

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for FormatError {}

fn err(msg: impl Into<String>) -> FormatError {
    FormatError(msg.into())
}

pub fn field_to_string(field: FieldKind) -> String {
    field.to_string()
}

pub fn field_from_string(s: &str) -> Result<FieldKind, FormatError> {
    if s == "Q" || s == "q" {
        return Ok(FieldKind::Rational);
    }
    if let Some(p) = s.strip_prefix("Fp:").or_else(|| s.strip_prefix("fp:")) {
        let p: u32 = p.parse().map_err(|_| err("invalid prime"))?;
        if p < 2 || !is_prime(p) {
            return Err(err(format!("{p} is not prime")));
        }
        return Ok(FieldKind::Prime(p));
    }
    Err(err(format!("unknown field spec: {s}")))
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// ---------------------------------------------------------------------------
// Truncated ideals
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct IdealFile {
    pub field: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub provenance: String,
    pub levels: Vec<LevelFile>,
}

#[derive(Serialize, Deserialize)]
pub struct LevelFile {
    pub n: usize,
    pub exact: bool,
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

pub fn ideal_to_file(ideal: &TruncatedIdeal) -> IdealFile {
    IdealFile {
        field: field_to_string(ideal.field()),
        n: ideal.n_levels(),
        provenance: ideal.provenance().to_string(),
        levels: (1..=ideal.n_levels())
            .map(|n| LevelFile {
                n,
                exact: ideal.level_exactness(n) == Exactness::Exact,
                dim: ideal.level(n).dim(),
                basis: ideal
                    .level(n)
                    .basis()
                    .iter()
                    .map(|row| row.iter().map(|s| s.to_string()).collect())
                    .collect(),
            })
            .collect(),
    }
}

pub fn ideal_from_file(file: &IdealFile) -> Result<TruncatedIdeal, FormatError> {
    let field = field_from_string(&file.field)?;
    if file.levels.len() != file.n {
        return Err(err("level count does not match N"));
    }
    let mut levels = Vec::with_capacity(file.n);
    for (idx, lv) in file.levels.iter().enumerate() {
        let n = idx + 1;
        if lv.n != n {
            return Err(err(format!("level {n} mislabelled as {}", lv.n)));
        }
        let order = sinfty_core::group_algebra::factorial(n);
        let mut rows = Vec::with_capacity(lv.basis.len());
        for row in &lv.basis {
            if row.len() != order {
                return Err(err(format!("level {n} row has wrong width")));
            }
            let parsed: Option<Vec<Scalar>> =
                row.iter().map(|s| parse_scalar(s, field)).collect();
            rows.push(parsed.ok_or_else(|| err(format!("bad scalar at level {n}")))?);
        }
        let subspace = Subspace::from_rows(rows, order, field);
        if subspace.dim() != lv.dim {
            return Err(err(format!(
                "level {n} basis is not reduced: dim {} recorded, {} computed",
                lv.dim,
                subspace.dim()
            )));
        }
        levels.push(Level {
            subspace,
            exactness: if lv.exact {
                Exactness::Exact
            } else {
                Exactness::UpperApprox
            },
        });
    }
    Ok(TruncatedIdeal::from_levels(
        field,
        levels,
        file.provenance.clone(),
    ))
}

pub fn ideal_to_json(ideal: &TruncatedIdeal) -> String {
    let mut s = serde_json::to_string_pretty(&ideal_to_file(ideal)).expect("serialisable");
    s.push('\n');
    s
}

pub fn ideal_from_json(json: &str) -> Result<TruncatedIdeal, FormatError> {
    let file: IdealFile = serde_json::from_str(json).map_err(|e| err(e.to_string()))?;
    ideal_from_file(&file)
}

// ---------------------------------------------------------------------------
// Group algebra elements
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct ElementFile {
    pub degree: usize,
    pub field: String,
    pub terms: Vec<TermFile>,
}

#[derive(Serialize, Deserialize)]
pub struct TermFile {
    pub word: Vec<u32>,
    pub coeff: String,
}

pub fn element_to_file(x: &GroupAlgebraElement) -> ElementFile {
    ElementFile {
        degree: x.degree(),
        field: field_to_string(x.field()),
        terms: x
            .terms()
            .map(|(p, c)| TermFile {
                word: p.one_based(),
                coeff: c.to_string(),
            })
            .collect(),
    }
}

pub fn element_from_file(file: &ElementFile) -> Result<GroupAlgebraElement, FormatError> {
    let field = field_from_string(&file.field)?;
    let mut terms = Vec::with_capacity(file.terms.len());
    for t in &file.terms {
        if t.word.len() != file.degree {
            return Err(err("term word length does not match the degree"));
        }
        let perm = Perm::from_one_based(&t.word);
        let coeff = parse_scalar(&t.coeff, field).ok_or_else(|| err("bad coefficient"))?;
        terms.push((perm, coeff));
    }
    Ok(GroupAlgebraElement::from_terms(file.degree, field, terms))
}

// ---------------------------------------------------------------------------
// Partitions and labels
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub enum InfRowsFile {
    Finite(u32),
    Infinite(String),
}

#[derive(Serialize, Deserialize)]
pub struct InfPartitionFile {
    pub inf_rows: InfRowsFile,
    pub head: Vec<u32>,
    pub tail: u32,
}

pub fn inf_partition_to_file(p: &InfPartition) -> InfPartitionFile {
    InfPartitionFile {
        inf_rows: match p.inf_rows() {
            InfRows::Finite(m) => InfRowsFile::Finite(m),
            InfRows::Infinite => InfRowsFile::Infinite("inf".to_string()),
        },
        head: p.head().to_vec(),
        tail: p.tail(),
    }
}

pub fn inf_partition_from_file(f: &InfPartitionFile) -> Result<InfPartition, FormatError> {
    let rows = match &f.inf_rows {
        InfRowsFile::Finite(m) => InfRows::Finite(*m),
        InfRowsFile::Infinite(s) if s == "inf" => InfRows::Infinite,
        InfRowsFile::Infinite(s) => return Err(err(format!("unknown row count {s}"))),
    };
    Ok(InfPartition::new(rows, f.head.clone(), f.tail))
}

/// Command-line label grammar: comma-separated `inf:<m|inf>`,
/// `head:<a+b+...>`, `tail:<t>` fields, e.g. `inf:1,head:1` for the shape
/// with one infinite row, one head row of length 1 and tail 0.
pub fn parse_inf_partition_spec(spec: &str) -> Result<InfPartition, FormatError> {
    let mut inf: Option<InfRows> = None;
    let mut head: Vec<u32> = Vec::new();
    let mut tail: u32 = 0;
    for part in spec.split(',') {
        let (key, value) = part
            .split_once(':')
            .ok_or_else(|| err(format!("expected key:value, got {part}")))?;
        match key {
            "inf" => {
                inf = Some(if value == "inf" {
                    InfRows::Infinite
                } else {
                    InfRows::Finite(value.parse().map_err(|_| err("bad inf count"))?)
                });
            }
            "head" => {
                head = value
                    .split('+')
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse().map_err(|_| err("bad head part")))
                    .collect::<Result<_, _>>()?;
            }
            "tail" => {
                tail = value.parse().map_err(|_| err("bad tail"))?;
            }
            _ => return Err(err(format!("unknown label field {key}"))),
        }
    }
    let inf = inf.ok_or_else(|| err("label needs an inf:<m> field"))?;
    Ok(InfPartition::new(inf, head, tail))
}

pub fn parse_partition(spec: &str) -> Result<Partition, FormatError> {
    if spec.is_empty() || spec == "()" || spec == "empty" {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<u32>, _> = spec
        .split(',')
        .map(|s| s.trim().parse::<u32>().map_err(|_| err("bad partition part")))
        .collect();
    let parts = parts?;
    if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
        return Err(err("partition parts must be positive and non-increasing"));
    }
    Ok(Partition::new(parts))
}

// ---------------------------------------------------------------------------
// Thoma parameters
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct ThomaFile {
    pub alpha: Vec<String>,
    pub beta: Vec<String>,
}

pub fn thoma_to_file(omega: &ThomaParam) -> ThomaFile {
    let render = |x: &BigRational| {
        if x.denom() == &BigInt::from(1) {
            x.numer().to_string()
        } else {
            format!("{}/{}", x.numer(), x.denom())
        }
    };
    ThomaFile {
        alpha: omega.alpha().iter().map(render).collect(),
        beta: omega.beta().iter().map(render).collect(),
    }
}

pub fn thoma_from_file(f: &ThomaFile) -> Result<ThomaParam, FormatError> {
    let parse = |s: &str| -> Result<BigRational, FormatError> {
        BigRational::from_str(s).map_err(|_| err(format!("bad rational {s}")))
    };
    let alpha: Result<Vec<_>, _> = f.alpha.iter().map(|s| parse(s)).collect();
    let beta: Result<Vec<_>, _> = f.beta.iter().map(|s| parse(s)).collect();
    ThomaParam::new(alpha?, beta?).map_err(|e| err(e.to_string()))
}

// ---------------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct RepnFile {
    pub degree: usize,
    pub dimension: usize,
    pub field: String,
    pub generators: Vec<Vec<Vec<String>>>,
}

pub fn repn_to_file(action: &RepnAction) -> RepnFile {
    RepnFile {
        degree: action.degree(),
        dimension: action.dim(),
        field: field_to_string(action.field()),
        generators: action
            .generators()
            .iter()
            .map(|m| {
                m.data
                    .iter()
                    .map(|row| row.iter().map(|s| s.to_string()).collect())
                    .collect()
            })
            .collect(),
    }
}

// ---------------------------------------------------------------------------
// Inductive systems
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct SystemFile {
    /// One list of partition labels per level, level sizes 1..=N.
    pub levels: Vec<Vec<Vec<u32>>>,
}

pub fn system_to_file(phi: &sinfty_core::ideals::InductiveSystemTrunc) -> SystemFile {
    SystemFile {
        levels: (1..=phi.n_levels())
            .map(|n| {
                phi.level(n)
                    .iter()
                    .map(|lam| lam.parts().to_vec())
                    .collect()
            })
            .collect(),
    }
}

pub fn system_from_file(
    f: &SystemFile,
) -> Result<sinfty_core::ideals::InductiveSystemTrunc, FormatError> {
    let mut levels = Vec::with_capacity(f.levels.len());
    for (idx, labels) in f.levels.iter().enumerate() {
        let mut set = std::collections::BTreeSet::new();
        for parts in labels {
            if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
                return Err(err("labels must be partitions"));
            }
            let lam = Partition::new(parts.clone());
            if lam.size() as usize != idx + 1 {
                return Err(err(format!(
                    "label {lam} has the wrong size for level {}",
                    idx + 1
                )));
            }
            set.insert(lam);
        }
        levels.push(set);
    }
    Ok(sinfty_core::ideals::InductiveSystemTrunc::new(levels))
}

/// Character table CSV: one row per partition label, one column per cycle
/// type, both in the canonical partition order.
pub fn character_table_csv(n: u32) -> String {
    use sinfty_core::partitions::partitions_of;
    let classes = partitions_of(n);
    let mut out = String::from("lambda");
    for c in &classes {
        out.push(',');
        out.push_str(&c.to_string());
    }
    out.push('\n');
    for lam in partitions_of(n) {
        out.push_str(&lam.to_string());
        for v in character_row(&lam) {
            out.push(',');
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use sinfty_core::ideals::ideal_j_plus;

    #[test]
    fn ideal_json_round_trip() {
        for field in [FieldKind::Rational, FieldKind::Prime(3)] {
            let jp = ideal_j_plus(3, field);
            let json = ideal_to_json(&jp);
            let back = ideal_from_json(&json).unwrap();
            assert!(back.same_levels(&jp));
            assert_eq!(ideal_to_json(&back), json, "canonical bytes");
        }
    }

    #[test]
    fn element_round_trip() {
        let x = sinfty_core::group_algebra::antisymmetriser(3, FieldKind::Rational);
        let f = element_to_file(&x);
        let back = element_from_file(&f).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn label_specs() {
        let l = parse_inf_partition_spec("inf:1,head:1").unwrap();
        assert_eq!(l, InfPartition::new(InfRows::Finite(1), vec![1], 0));
        let h = parse_inf_partition_spec("inf:2,tail:1").unwrap();
        assert_eq!(h, InfPartition::hook(2, 1));
        let z = parse_inf_partition_spec("inf:inf").unwrap();
        assert!(z.is_all_infinite());
        assert!(parse_inf_partition_spec("head:1").is_err());
    }

    #[test]
    fn thoma_round_trip() {
        let f = ThomaFile {
            alpha: vec!["1/2".into(), "1/4".into()],
            beta: vec!["1/8".into()],
        };
        let omega = thoma_from_file(&f).unwrap();
        let back = thoma_to_file(&omega);
        assert_eq!(back.alpha, f.alpha);
        assert_eq!(back.beta, f.beta);
        // non-simplex data is rejected
        let bad = ThomaFile {
            alpha: vec!["2/3".into(), "2/3".into()],
            beta: vec![],
        };
        assert!(thoma_from_file(&bad).is_err());
    }

    #[test]
    fn field_specs() {
        assert_eq!(field_from_string("Q").unwrap(), FieldKind::Rational);
        assert_eq!(field_from_string("fp:5").unwrap(), FieldKind::Prime(5));
        assert!(field_from_string("fp:4").is_err());
        assert!(field_from_string("R").is_err());
    }

    #[test]
    fn character_table_has_hook_counts_in_first_column() {
        let csv = character_table_csv(4);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 6); // header + 5 partitions
        assert!(lines[1].starts_with("(4),1,"));
    }
}
