use serde::Serialize;

use super::{Provenance, StringCone};
use crate::crystal::empirical_string_cone;
use crate::error::{Error, Result};
use crate::exactgeom::{rat, ConeH, LatticeEnumerator, Rat};
use crate::rootdata::{CartanType, ReducedWord, RootSystem, Weight};

/// Source of a string cone's inequalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provider {
    /// Gelfand–Tsetlin (type A standard word), C2 or E6 suffix, by word.
    Builtin,
    /// A `STRINGCONE v1` file; unless trusted it must pass [`certify_by_counts`].
    External { path: String, trusted: bool },
    /// Conic hull of crystal strings, certified by lattice counts.
    Empirical { degree: u32 },
}

/// Box bound for certifying untrusted external cones.
pub const EXTERNAL_CERT_BOUND: u32 = 2;

/// Rows `t_a ≥ t_b` (or `t_a ≥ 0` when `b` is `None`) as normals `≤ 0`,
/// with coordinates counted from 1 and optional coefficients.
fn chain_rows(n: usize, pairs: &[((i64, usize), Option<(i64, usize)>)]) -> Vec<Vec<Rat>> {
    pairs
        .iter()
        .map(|&((ca, a), b)| {
            let mut row = vec![rat(0); n];
            row[a - 1] -= rat(ca);
            if let Some((cb, b)) = b {
                row[b - 1] += rat(cb);
            }
            row
        })
        .collect()
}

/// The Gelfand–Tsetlin cone on the standard word of `A_n`: within each block
/// `(b, b−1, …, 1)` the coordinates weakly decrease and the last is `≥ 0`.
pub fn gt_cone(rs: &RootSystem) -> Result<StringCone> {
    if rs.cartan_type() != CartanType::A {
        return Err(Error::ProviderMismatch(format!("GT cone needs type A, got {}", rs.name())));
    }
    let word = rs.standard_word();
    let n = word.len();
    let mut pairs = Vec::new();
    let mut start = 1;
    for b in 1..=rs.rank() {
        for k in start..start + b - 1 {
            pairs.push(((1, k), Some((1, k + 1))));
        }
        pairs.push(((1, start + b - 1), None));
        start += b;
    }
    let cone = ConeH::from_normals(n, chain_rows(n, &pairs))?;
    StringCone::new(rs.clone(), word, 0, cone, Provenance::BuiltinGtA)
}

/// The two C2 string cones: `t1 ≥ 0, 2t2 ≥ t3 ≥ 2t4 ≥ 0` for `1,2,1,2` and
/// `t1 ≥ 0, t2 ≥ t3 ≥ t4 ≥ 0` for `2,1,2,1`.
pub fn c2_cone(rs: &RootSystem, word: &ReducedWord) -> Result<StringCone> {
    if rs.name() != "C2" {
        return Err(Error::ProviderMismatch(format!("C2 cones need C2, got {}", rs.name())));
    }
    let pairs: Vec<((i64, usize), Option<(i64, usize)>)> = match word.letters() {
        [1, 2, 1, 2] => vec![((1, 1), None), ((2, 2), Some((1, 3))), ((1, 3), Some((2, 4))), ((1, 4), None)],
        [2, 1, 2, 1] => vec![((1, 1), None), ((1, 2), Some((1, 3))), ((1, 3), Some((1, 4))), ((1, 4), None)],
        _ => return Err(Error::ProviderMismatch(format!("no builtin C2 cone for word {word}"))),
    };
    let cone = ConeH::from_normals(4, chain_rows(4, &pairs))?;
    StringCone::new(rs.clone(), word.clone(), 0, cone, Provenance::BuiltinC2)
}

/// Dispatches to the requested provider.
pub fn string_cone(rs: &RootSystem, word: &ReducedWord, provider: &Provider) -> Result<StringCone> {
    rs.check_letters(word)?;
    match provider {
        Provider::Builtin => match rs.cartan_type() {
            CartanType::A if *word == rs.standard_word() => gt_cone(rs),
            CartanType::C if rs.rank() == 2 => c2_cone(rs, word),
            CartanType::E if rs.rank() == 6 => super::e6_suffix_cone(rs, word),
            _ => Err(Error::ProviderMismatch(format!("no builtin cone for {} word {word}", rs.name()))),
        },
        Provider::External { path, trusted } => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
            let mut c = super::parse_cone_file(&text, path)?;
            if c.root_system().name() != rs.name() || c.word() != word {
                return Err(Error::ProviderMismatch(format!(
                    "{path} describes {} word {}",
                    c.root_system().name(),
                    c.word()
                )));
            }
            // Untrusted files must pass the lattice-count certificate.
            let certified = !*trusted && c.offset() == 0 && certify_by_counts(&c, EXTERNAL_CERT_BOUND)?.passed();
            if !certified && !*trusted {
                return Err(Error::CertificationFailed(format!(
                    "{path}: lattice counts do not match dim V(λ) for λ in [0, {EXTERNAL_CERT_BOUND}]^{}",
                    rs.rank()
                )));
            }
            c.set_provenance(Provenance::ExternalFile {
                path: path.clone(),
                trusted: *trusted,
                certified,
            });
            Ok(c)
        }
        Provider::Empirical { degree } => {
            if rs.cartan_type() != CartanType::A {
                return Err(Error::ProviderMismatch("empirical cones need type A".into()));
            }
            empirical_string_cone(rs, word, *degree)
        }
    }
}

/// Outcome of comparing lattice-point counts with the Weyl dimension formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountCertificate {
    /// Every dominant λ with coordinates `≤ bound` was checked.
    pub bound: u32,
    pub checked: usize,
    /// `(λ, lattice count, dim V(λ))` for each mismatch.
    pub failures: Vec<(String, u64, u64)>,
}

impl CountCertificate {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Dominant weights with every coordinate in `0..=bound`, lexicographic.
pub fn weight_box(rank: usize, bound: u32) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=bound as i64).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

/// Checks `|Q(λ) ∩ ℤ^N| = dim V(λ)` for every λ in the box `[0, bound]^r`.
pub fn certify_by_counts(cone: &StringCone, bound: u32) -> Result<CountCertificate> {
    if cone.offset() != 0 {
        return Err(Error::ProviderMismatch("counts certify only full-word cones".into()));
    }
    let rs = cone.root_system();
    let big = cone.big_cone();
    let en = LatticeEnumerator::with_parameters(big.as_h(), rs.rank())?;
    let mut failures = Vec::new();
    let lambdas = weight_box(rs.rank(), bound);
    for l in &lambdas {
        let got = en.count_at(l)?;
        let want = rs.weyl_dim(&Weight::from_ints(l))?;
        if got != want {
            failures.push((Weight::from_ints(l).to_string(), got, want));
        }
    }
    Ok(CountCertificate {
        bound,
        checked: lambdas.len(),
        failures,
    })
}
