//! Gelfand–Tsetlin patterns for the standard word of `A_n`.
//!
//! A pattern has rows `0..=n`; row `i` holds `g_{i,1} ≥ … ≥ g_{i,n+1−i}` and
//! row 0 is the partition λ. Patterns are flattened without row 0. The string
//! coordinate `x_{i,j}` sits in block `b = n+1−i` of the word
//! `(1)(2 1)(3 2 1)…`, at the letter `j`.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactgeom::Rat;
use crate::rootdata::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GtDirection {
    StringToPattern,
    PatternToString,
}

/// Position (from 0) of `x_{i,j}` in the string coordinates of the standard
/// word of `A_n`.
pub fn gt_position(n: usize, i: usize, j: usize) -> usize {
    let b = n + 1 - i;
    b * (b - 1) / 2 + (b - j)
}

/// `(position from 1, i, j)` for every string coordinate, by position.
pub fn gt_renaming_table(n: usize) -> Vec<(usize, usize, usize)> {
    let mut t: Vec<(usize, usize, usize)> = (1..=n)
        .flat_map(|i| (1..=n + 1 - i).map(move |j| (gt_position(n, i, j) + 1, i, j)))
        .collect();
    t.sort();
    t
}

fn pattern_index(n: usize, i: usize, j: usize) -> usize {
    (1..i).map(|k| n + 1 - k).sum::<usize>() + (j - 1)
}

/// Partition `(λ_1 ≥ … ≥ λ_n ≥ 0 = λ_{n+1})` of a weight.
pub fn weight_to_partition(lambda: &Weight) -> Vec<Rat> {
    let n = lambda.rank();
    let mut p = vec![Rat::zero(); n + 1];
    for i in (0..n).rev() {
        p[i] = &p[i + 1] + &lambda.coords[i];
    }
    p
}

/// Fundamental coordinates `λ_i − λ_{i+1}` of a partition.
pub fn partition_to_weight(p: &[Rat]) -> Weight {
    Weight::new(p.windows(2).map(|w| &w[0] - &w[1]).collect())
}

/// Converts between string coordinates and flattened patterns for `A_n`
/// with top row `partition` (length `n+1`).
pub fn gt_change_of_coords(
    n: usize,
    direction: GtDirection,
    partition: &[Rat],
    values: &[Rat],
) -> Result<Vec<Rat>> {
    let big_n = n * (n + 1) / 2;
    if partition.len() != n + 1 || values.len() != big_n {
        return Err(Error::ShapeMismatch(format!(
            "A{n} needs a partition of length {} and {big_n} values, got {} and {}",
            n + 1,
            partition.len(),
            values.len()
        )));
    }
    let mut out = vec![Rat::zero(); big_n];
    match direction {
        GtDirection::StringToPattern => {
            let x = |k: usize, j: usize| -> Rat {
                if j == 0 || j > n + 1 - k {
                    Rat::zero()
                } else {
                    values[gt_position(n, k, j)].clone()
                }
            };
            for i in 1..=n {
                for j in 1..=n + 1 - i {
                    let mut g = partition[j - 1].clone();
                    for k in 1..=i {
                        g += x(k, j - 1) - x(k, j);
                    }
                    out[pattern_index(n, i, j)] = g;
                }
            }
        }
        GtDirection::PatternToString => {
            let g = |i: usize, j: usize| -> &Rat {
                if i == 0 {
                    &partition[j - 1]
                } else {
                    &values[pattern_index(n, i, j)]
                }
            };
            for i in 1..=n {
                for j in 1..=n + 1 - i {
                    let mut x = Rat::zero();
                    for k in 1..=j {
                        x += g(i - 1, k) - g(i, k);
                    }
                    out[gt_position(n, i, j)] = x;
                }
            }
        }
    }
    Ok(out)
}

/// Vertices of the GT polytope of a partition, as flattened patterns: the
/// fillings by entries of λ in which every entry is tied, through a chain of
/// equal interlacing neighbours, to the top row.
pub fn gt_vertices(partition: &[Rat]) -> Result<Vec<Vec<Rat>>> {
    if partition.is_empty() || partition.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::ShapeMismatch("partition must be weakly decreasing".into()));
    }
    let n = partition.len() - 1;
    let mut rows: Vec<Vec<Rat>> = (0..=n).map(|i| vec![Rat::zero(); n + 1 - i]).collect();
    rows[0] = partition.to_vec();
    let mut out = BTreeSet::new();
    fill(n, 1, 1, &mut rows, &mut out);
    Ok(out.into_iter().collect())
}

fn fill(n: usize, i: usize, j: usize, rows: &mut [Vec<Rat>], out: &mut BTreeSet<Vec<Rat>>) {
    if i > n {
        if is_vertex(rows) {
            out.insert(rows[1..].iter().flatten().cloned().collect());
        }
        return;
    }
    let (ni, nj) = if j == n + 1 - i { (i + 1, 1) } else { (i, j + 1) };
    let (hi, lo) = (rows[i - 1][j - 1].clone(), rows[i - 1][j].clone());
    let choices: BTreeSet<Rat> = rows[0][j - 1..i + j].iter().filter(|v| **v <= hi && **v >= lo).cloned().collect();
    for v in choices {
        rows[i][j - 1] = v;
        fill(n, ni, nj, rows, out);
    }
}

fn is_vertex(rows: &[Vec<Rat>]) -> bool {
    // Union-find over all entries, joining equal interlacing neighbours.
    let mut ids = Vec::new();
    let mut offset = 0;
    for r in rows {
        ids.push(offset);
        offset += r.len();
    }
    let mut parent: Vec<usize> = (0..offset).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for i in 1..rows.len() {
        for j in 0..rows[i].len() {
            for up in [j, j + 1] {
                if rows[i][j] == rows[i - 1][up] {
                    let (a, b) = (find(&mut parent, ids[i] + j), find(&mut parent, ids[i - 1] + up));
                    parent[a] = b;
                }
            }
        }
    }
    let top: BTreeSet<usize> = (0..rows[0].len()).map(|j| find(&mut parent, j)).collect();
    (rows[0].len()..offset).all(|x| top.contains(&find(&mut parent, x)))
}
