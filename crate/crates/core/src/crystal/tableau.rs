use serde::Serialize;

/// A semistandard tableau in English notation; row `r` is `rows[r]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tableau {
    rows: Vec<Vec<u8>>,
}

/// Unmatched letters of the `i`-signature of a reading word: positions of
/// unmatched `i` (which `f_i` may lower) and of unmatched `i+1`.
struct Signature {
    plus: Vec<(usize, usize)>,
    minus: Vec<(usize, usize)>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u8>>) -> Self {
        Tableau { rows }
    }

    /// Row `r` filled with `r+1`.
    pub fn highest(shape: &[usize]) -> Self {
        Tableau {
            rows: shape.iter().enumerate().map(|(r, &len)| vec![r as u8 + 1; len]).collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|p| {
            p[0].len() >= p[1].len() && p[1].iter().zip(&p[0]).all(|(below, above)| below > above)
        });
        rows_ok && cols_ok
    }

    /// Number of entries equal to each of `1..=n+1`.
    pub fn content(&self, n: usize) -> Vec<i64> {
        let mut c = vec![0i64; n + 1];
        for &x in self.rows.iter().flatten() {
            c[x as usize - 1] += 1;
        }
        c
    }

    /// Weight in fundamental coordinates: `#i − #(i+1)`.
    pub fn weight(&self, n: usize) -> Vec<i64> {
        let c = self.content(n);
        (0..n).map(|i| c[i] - c[i + 1]).collect()
    }

    /// Reading word: rows from bottom to top, each left to right.
    fn signature(&self, i: usize) -> Signature {
        let (lo, hi) = (i as u8, i as u8 + 1);
        let mut plus = Vec::new();
        let mut minus: Vec<(usize, usize)> = Vec::new();
        for r in (0..self.rows.len()).rev() {
            for (c, &x) in self.rows[r].iter().enumerate() {
                if x == hi {
                    minus.push((r, c));
                } else if x == lo {
                    // An i+1 to the left cancels this i.
                    if minus.pop().is_none() {
                        plus.push((r, c));
                    }
                }
            }
        }
        Signature { plus, minus }
    }

    /// `ε_i`: how many times `e_i` applies.
    pub fn epsilon(&self, i: usize) -> usize {
        self.signature(i).minus.len()
    }

    /// `φ_i`: how many times `f_i` applies.
    pub fn phi(&self, i: usize) -> usize {
        self.signature(i).plus.len()
    }

    /// `e_i`: the leftmost unmatched `i+1` becomes `i`.
    pub fn e(&self, i: usize) -> Option<Tableau> {
        let s = self.signature(i);
        let &(r, c) = s.minus.first()?;
        let mut t = self.clone();
        t.rows[r][c] = i as u8;
        Some(t)
    }

    /// `f_i`: the rightmost unmatched `i` becomes `i+1`.
    pub fn f(&self, i: usize) -> Option<Tableau> {
        let s = self.signature(i);
        let &(r, c) = s.plus.last()?;
        let mut t = self.clone();
        t.rows[r][c] = i as u8 + 1;
        Some(t)
    }

    /// `(ε_i, e_i^{ε_i}(self))`.
    pub fn raise_fully(&self, i: usize) -> (usize, Tableau) {
        let s = self.signature(i);
        let mut t = self.clone();
        for &(r, c) in &s.minus {
            t.rows[r][c] = i as u8;
        }
        (s.minus.len(), t)
    }
}

/// Every semistandard tableau of `shape` with entries in `1..=letters`,
/// in lexicographic order of rows.
pub fn semistandard_tableaux(shape: &[usize], letters: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_tableau(shape, letters, &mut |r| out.push(Tableau::new(r.to_vec())));
    out
}

/// Calls `emit` on the rows of every semistandard tableau of `shape`.
pub(crate) fn for_each_tableau(shape: &[usize], letters: usize, emit: &mut dyn FnMut(&[Vec<u8>])) {
    let mut rows: Vec<Vec<u8>> = shape.iter().map(|&l| vec![0; l]).collect();
    fill(shape, letters as u8, 0, 0, &mut rows, emit);
}

/// Rows from bottom to top, each left to right.
pub(crate) fn reading_word(rows: &[Vec<u8>]) -> Vec<u8> {
    rows.iter().rev().flatten().copied().collect()
}

/// String coordinates computed on a reading word, which is consumed.
pub(crate) fn string_of_reading_word(rw: &mut [u8], word: &[usize], out: &mut Vec<i64>, stack: &mut Vec<usize>) {
    out.clear();
    for &i in word {
        let (lo, hi) = (i as u8, i as u8 + 1);
        stack.clear();
        for (k, &x) in rw.iter().enumerate() {
            if x == hi {
                stack.push(k);
            } else if x == lo {
                stack.pop();
            }
        }
        for &k in stack.iter() {
            rw[k] = lo;
        }
        out.push(stack.len() as i64);
    }
}

fn fill(shape: &[usize], letters: u8, r: usize, c: usize, rows: &mut [Vec<u8>], emit: &mut dyn FnMut(&[Vec<u8>])) {
    if r == shape.len() {
        emit(rows);
        return;
    }
    if c == shape[r] {
        fill(shape, letters, r + 1, 0, rows, emit);
        return;
    }
    let left = if c > 0 { rows[r][c - 1] } else { 1 };
    let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    // Entries below this cell need room: row r can hold at most letters − (rows below in this column).
    let below = shape[r + 1..].iter().filter(|&&l| l > c).count() as u8;
    let lo = left.max(above);
    if letters < below {
        return;
    }
    for v in lo..=letters - below {
        rows[r][c] = v;
        fill(shape, letters, r, c + 1, rows, emit);
    }
}

/// Number of semistandard tableaux of `shape` with the given content.
pub(crate) fn count_with_content(shape: &[usize], content: &[usize]) -> u64 {
    let total: usize = shape.iter().sum();
    if content.iter().sum::<usize>() != total {
        return 0;
    }
    // Place letters in increasing order; after placing 1..=k the filled cells
    // form a partition µ^(k) with µ^(k)/µ^(k−1) a horizontal strip.
    fn go(shape: &[usize], content: &[usize], k: usize, cur: &mut Vec<usize>) -> u64 {
        if k == content.len() {
            return (cur.as_slice() == shape) as u64;
        }
        let mut total = 0;
        let mut next = cur.clone();
        strips(shape, cur, content[k], 0, &mut next, &mut |nu| {
            let mut nu = nu.to_vec();
            total += go(shape, content, k + 1, &mut nu);
        });
        total
    }
    // Adds `left` cells as a horizontal strip to `cur`, rows from `r` on.
    fn strips(shape: &[usize], cur: &[usize], left: usize, r: usize, next: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
        if left == 0 {
            emit(next);
            return;
        }
        if r == shape.len() {
            return;
        }
        let cap_shape = shape[r];
        // Horizontal strip: new row length at most the old length of the row above.
        let cap_strip = if r == 0 { usize::MAX } else { cur[r - 1] };
        let max_len = cap_shape.min(cap_strip);
        let max_add = max_len.saturating_sub(cur[r]).min(left);
        for add in (0..=max_add).rev() {
            next[r] = cur[r] + add;
            strips(shape, cur, left - add, r + 1, next, emit);
        }
        next[r] = cur[r];
    }
    let mut cur = vec![0; shape.len()];
    go(shape, content, 0, &mut cur)
}
