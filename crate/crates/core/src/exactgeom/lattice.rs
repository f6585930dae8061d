use num_integer::Integer;
use num_traits::ToPrimitive;

use super::ops::eliminate;
use super::reduce::facet_reduce;
use super::types::{HPolyhedron, Halfspace};
use crate::error::{Error, Result};

type IntRow = (Vec<i128>, i128);

fn int_rows(h: &HPolyhedron) -> Result<Vec<IntRow>> {
    let conv = |row: &Halfspace| -> Result<IntRow> {
        let n = row.normalized();
        let a = n
            .a
            .iter()
            .map(|x| x.to_integer().to_i128().ok_or(Error::Overflow("lattice row")))
            .collect::<Result<Vec<i128>>>()?;
        let b = n.b.to_integer().to_i128().ok_or(Error::Overflow("lattice row"))?;
        Ok((a, b))
    };
    let mut out = Vec::new();
    for r in &h.ineqs {
        out.push(conv(r)?);
    }
    for e in &h.eqs {
        out.push(conv(e)?);
        let neg = Halfspace::new(e.a.iter().map(|x| -x).collect(), -&e.b);
        out.push(conv(&neg)?);
    }
    Ok(out)
}

/// Counts and lists lattice points of a polyhedron, optionally with the
/// leading coordinates fixed by the caller (parameters).
///
/// The polyhedron is projected successively onto its leading coordinates;
/// each projection bounds one coordinate given the ones before it, so the
/// search never enters a dead branch.
#[derive(Clone, Debug)]
pub struct LatticeEnumerator {
    params: usize,
    dim: usize,
    empty: bool,
    /// Rows of the projection onto the parameters.
    base: Vec<IntRow>,
    /// `levels[k]`: rows of the projection onto coordinates `0..=params+k`.
    levels: Vec<Vec<IntRow>>,
}

impl LatticeEnumerator {
    pub fn new(h: &HPolyhedron) -> Result<Self> {
        Self::with_parameters(h, 0)
    }

    /// The first `params` coordinates are supplied to [`count_at`] and
    /// [`points_at`]; the polyhedron must be bounded once they are fixed.
    ///
    /// [`count_at`]: LatticeEnumerator::count_at
    /// [`points_at`]: LatticeEnumerator::points_at
    pub fn with_parameters(h: &HPolyhedron, params: usize) -> Result<Self> {
        let dim = h.dim();
        if params > dim {
            return Err(Error::DimMismatch {
                expected: dim,
                found: params,
            });
        }
        let mut cur = match facet_reduce(h) {
            Ok(r) => r,
            Err(Error::EmptyPolyhedron) => {
                return Ok(LatticeEnumerator {
                    params,
                    dim,
                    empty: true,
                    base: Vec::new(),
                    levels: Vec::new(),
                })
            }
            Err(e) => return Err(e),
        };
        let mut levels = Vec::with_capacity(dim - params);
        for k in (params..dim).rev() {
            let rows = int_rows(&cur)?;
            let has_upper = rows.iter().any(|(a, _)| a[k] > 0);
            let has_lower = rows.iter().any(|(a, _)| a[k] < 0);
            if !has_upper || !has_lower {
                return Err(Error::Unbounded);
            }
            levels.push(rows);
            cur = facet_reduce(&eliminate(&cur, k))?;
        }
        levels.reverse();
        Ok(LatticeEnumerator {
            params,
            dim,
            empty: false,
            base: int_rows(&cur)?,
            levels,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> usize {
        self.params
    }

    pub fn count(&self) -> Result<u64> {
        self.count_at(&[])
    }

    /// Number of lattice points whose leading coordinates equal `param`.
    pub fn count_at(&self, param: &[i64]) -> Result<u64> {
        match self.start(param)? {
            Some(mut x) => Ok(self.count_from(0, &mut x)),
            None => Ok(0),
        }
    }

    pub fn points(&self) -> Result<Vec<Vec<i64>>> {
        self.points_at(&[])
    }

    /// Lattice points (all coordinates, parameters included) in lexicographic
    /// order.
    pub fn points_at(&self, param: &[i64]) -> Result<Vec<Vec<i64>>> {
        let mut out = Vec::new();
        if let Some(mut x) = self.start(param)? {
            self.collect_from(0, &mut x, &mut out);
        }
        Ok(out)
    }

    fn start(&self, param: &[i64]) -> Result<Option<Vec<i128>>> {
        if param.len() != self.params {
            return Err(Error::DimMismatch {
                expected: self.params,
                found: param.len(),
            });
        }
        if self.empty {
            return Ok(None);
        }
        let mut x: Vec<i128> = param.iter().map(|&v| v as i128).collect();
        if !self.base.iter().all(|(a, b)| lin(a, &x) <= *b) {
            return Ok(None);
        }
        x.resize(self.dim, 0);
        Ok(Some(x))
    }

    fn count_from(&self, lvl: usize, x: &mut [i128]) -> u64 {
        if lvl == self.levels.len() {
            return 1;
        }
        let k = self.params + lvl;
        let Some((lo, hi)) = bounds(&self.levels[lvl], x, k) else {
            return 0;
        };
        if lvl + 1 == self.levels.len() {
            return (hi - lo + 1) as u64;
        }
        let mut total = 0;
        for v in lo..=hi {
            x[k] = v;
            total += self.count_from(lvl + 1, x);
        }
        x[k] = 0;
        total
    }

    fn collect_from(&self, lvl: usize, x: &mut [i128], out: &mut Vec<Vec<i64>>) {
        if lvl == self.levels.len() {
            out.push(x.iter().map(|&c| c as i64).collect());
            return;
        }
        let k = self.params + lvl;
        let Some((lo, hi)) = bounds(&self.levels[lvl], x, k) else {
            return;
        };
        for v in lo..=hi {
            x[k] = v;
            self.collect_from(lvl + 1, x, out);
        }
        x[k] = 0;
    }
}

/// `a·x` over the common prefix.
fn lin(a: &[i128], x: &[i128]) -> i128 {
    a.iter().zip(x).map(|(p, q)| p * q).sum()
}

/// Integer interval for coordinate `k` given `x[..k]`, or `None` if empty.
fn bounds(rows: &[IntRow], x: &[i128], k: usize) -> Option<(i128, i128)> {
    let mut lo = i128::MIN;
    let mut hi = i128::MAX;
    for (a, b) in rows {
        let s: i128 = a[..k].iter().zip(&x[..k]).map(|(p, q)| p * q).sum();
        let rhs = b - s;
        let c = a[k];
        if c > 0 {
            hi = hi.min(Integer::div_floor(&rhs, &c));
        } else if c < 0 {
            lo = lo.max(Integer::div_ceil(&rhs, &c));
        } else if rhs < 0 {
            return None;
        }
    }
    (lo <= hi).then_some((lo, hi))
}

/// All lattice points of a bounded polyhedron, lexicographically sorted.
pub fn lattice_points(h: &HPolyhedron) -> Result<Vec<Vec<i64>>> {
    LatticeEnumerator::new(h)?.points()
}

impl HPolyhedron {
    /// Number of lattice points of a bounded polyhedron.
    pub fn lattice_count(&self) -> Result<u64> {
        LatticeEnumerator::new(self)?.count()
    }
}

