//! Type-A crystal of semistandard tableaux: Kashiwara operators by the
//! signature rule on the row reading word, string parametrizations, and the
//! oracles built on them.

mod empirical;
mod tableau;

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{ReducedWord, Weight};

pub use empirical::{
    crystal_lattice_check, empirical_string_cone, string_set, LatticeCheckReport,
};
pub use tableau::{semistandard_tableaux, Tableau};

/// The crystal `B(λ)` for `A_n`: tableaux of one shape with `f_i` edges.
#[derive(Clone, Debug, Serialize)]
pub struct CrystalGraph {
    pub n: usize,
    pub shape: Vec<usize>,
    /// Breadth-first from the highest-weight tableau.
    pub elements: Vec<Tableau>,
    /// `(from, i, to)` with `f_i(from) = to`, `i` counted from 1.
    pub edges: Vec<(usize, usize, usize)>,
}

impl CrystalGraph {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements killed by every `e_i`.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&k| (1..=self.n).all(|i| self.elements[k].epsilon(i) == 0))
            .collect()
    }
}

/// Partition of a dominant integral weight of `A_n` (trailing zeros dropped).
pub fn weight_shape(lambda: &Weight) -> Result<Vec<usize>> {
    lambda.require_dominant()?;
    let c = lambda
        .to_ints()
        .ok_or_else(|| Error::NotDominant(lambda.coords.iter().map(|c| c.to_string()).collect()))?;
    let mut shape: Vec<usize> = (0..c.len()).map(|i| c[i..].iter().sum::<i64>() as usize).collect();
    while shape.last() == Some(&0) {
        shape.pop();
    }
    Ok(shape)
}

/// Builds `B(λ)` for a partition `shape` over the letters `1..=n+1`.
pub fn build_crystal(shape: &[usize], n: usize) -> Result<CrystalGraph> {
    let shape: Vec<usize> = shape.iter().copied().filter(|&r| r > 0).collect();
    if shape.len() > n + 1 {
        return Err(Error::ShapeTooTall { max_rows: n + 1 });
    }
    if shape.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::ShapeMismatch("rows must weakly decrease".into()));
    }
    let top = Tableau::highest(&shape);
    let mut index: HashMap<Tableau, usize> = HashMap::new();
    index.insert(top.clone(), 0);
    let mut elements = vec![top];
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for i in 1..=n {
            if let Some(t) = elements[k].f(i) {
                let to = match index.get(&t) {
                    Some(&j) => j,
                    None => {
                        let j = elements.len();
                        index.insert(t.clone(), j);
                        elements.push(t);
                        queue.push_back(j);
                        j
                    }
                };
                edges.push((k, i, to));
            }
        }
    }
    Ok(CrystalGraph {
        n,
        shape,
        elements,
        edges,
    })
}

/// `t_k = ε_{i_k}` of the current element, then raise it all the way.
pub fn string_coords(b: &Tableau, word: &ReducedWord) -> Vec<i64> {
    let mut rw = tableau::reading_word(b.rows());
    let mut out = Vec::with_capacity(word.len());
    tableau::string_of_reading_word(&mut rw, word.letters(), &mut out, &mut Vec::new());
    out
}

/// Number of tableaux of shape λ whose content has weight μ.
pub fn crystal_weight_mult(lambda: &Weight, mu: &Weight) -> Result<u64> {
    let shape = weight_shape(lambda)?;
    let n = lambda.rank();
    let Some(m) = mu.to_ints() else { return Ok(0) };
    if m.len() != n {
        return Err(Error::DimMismatch {
            expected: n,
            found: m.len(),
        });
    }
    // Content c with c_i − c_{i+1} = μ_i and Σ c = |λ|.
    let size: i64 = shape.iter().sum::<usize>() as i64;
    let tail: i64 = (0..n).map(|j| (j as i64 + 1) * m[j]).sum();
    let num = size - tail;
    if num % (n as i64 + 1) != 0 {
        return Ok(0);
    }
    let last = num / (n as i64 + 1);
    let mut content = vec![0i64; n + 1];
    content[n] = last;
    for i in (0..n).rev() {
        content[i] = content[i + 1] + m[i];
    }
    if content.iter().any(|&c| c < 0) {
        return Ok(0);
    }
    let content: Vec<usize> = content.into_iter().map(|c| c as usize).collect();
    Ok(tableau::count_with_content(&shape, &content))
}

/// One tableau with its string coordinates for each word.
#[derive(Clone, Debug, Serialize)]
pub struct DumpEntry {
    pub tableau: Vec<Vec<u8>>,
    pub weight: Vec<i64>,
    pub strings: Vec<(String, Vec<i64>)>,
}

/// All tableaux of `B(λ)` with their strings, for offline inspection.
pub fn crystal_dump(lambda: &Weight, words: &[ReducedWord]) -> Result<Vec<DumpEntry>> {
    let n = lambda.rank();
    let g = build_crystal(&weight_shape(lambda)?, n)?;
    Ok(g.elements
        .iter()
        .map(|b| DumpEntry {
            tableau: b.rows().to_vec(),
            weight: b.weight(n),
            strings: words.iter().map(|w| (w.to_string(), string_coords(b, w))).collect(),
        })
        .collect())
}

#[cfg(test)]
mod tests;
