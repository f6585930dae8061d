//! Root systems, Weyl group actions by reflection cascades, reduced words and
//! representation-theoretic oracles.
//!
//! Weights are stored in fundamental-weight coordinates (`λ_i = ⟨λ, α_i∨⟩`)
//! and roots in simple-root coordinates. The Cartan matrix follows
//! `C[i][j] = ⟨α_j, α_i∨⟩`.

mod cartan;
mod reps;
mod words;

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactgeom::{parse_rat_vec, rat, Rat};

pub use reps::{cominuscule_weights, minuscule_weights};
pub use words::{ReducedWord, ReducedWords, DEFAULT_WORD_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A weight in fundamental-weight coordinates; coordinates may be rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Rat>,
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Self {
        Weight { coords }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Weight {
            coords: c.iter().map(|&x| rat(x)).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        Weight::from_ints(&vec![0; rank])
    }

    /// `ω_i`, with `i` counted from 1.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i - 1] = 1;
        Weight::from_ints(&c)
    }

    pub fn rho(rank: usize) -> Self {
        Weight::from_ints(&vec![1; rank])
    }

    /// Comma- or space-separated coordinates, e.g. `1,0,2` or `1/2,1`.
    pub fn parse(s: &str) -> Result<Self> {
        Ok(Weight::new(parse_rat_vec(s)?))
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn is_regular_dominant(&self) -> bool {
        self.coords.iter().all(|c| c.is_positive())
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| {
                if c.is_integer() {
                    num_traits::ToPrimitive::to_i64(&c.to_integer())
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn scale(&self, n: &Rat) -> Weight {
        Weight::new(self.coords.iter().map(|c| c * n).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight::new(self.coords.iter().map(|c| -c).collect())
    }

    /// Rejects non-dominant weights with the offending coordinates listed.
    pub fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.coords.iter().map(|c| c.to_string()).collect()))
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Weight::parse(s)
    }
}

/// A root (or any element of the root lattice) in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVec {
    pub coords: Vec<i64>,
}

impl RootVec {
    pub fn new(coords: Vec<i64>) -> Self {
        RootVec { coords }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        RootVec { coords: c }
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn neg(&self) -> RootVec {
        RootVec::new(self.coords.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Cartan data of a simple root system with cached positive roots and
/// coroots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive: Vec<RootVec>,
    /// `⟨·, β∨⟩` for each positive root, as simple-coroot coordinates.
    coroots: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Rat>>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType, rank: usize) -> Result<Self> {
        let cartan = cartan::cartan_matrix(cartan_type, rank)?;
        let symmetrizer = cartan::symmetrizer(&cartan);
        let positive = cartan::positive_roots(&cartan);
        let cartan_inv = cartan::inverse(&cartan);
        let mut rs = RootSystem {
            cartan_type,
            rank,
            cartan,
            symmetrizer,
            positive,
            coroots: Vec::new(),
            cartan_inv,
        };
        let coroots = rs
            .positive
            .iter()
            .map(|b| rs.unwind_coroot(b).expect("positive roots unwind to simple roots"))
            .collect();
        rs.coroots = coroots;
        Ok(rs)
    }

    /// Builds from a Cartan matrix supplied by the caller (used to compare
    /// labeling conventions); the type tag is informational only.
    pub fn from_cartan(cartan_type: CartanType, cartan: Vec<Vec<i64>>) -> Result<Self> {
        cartan::validate(&cartan)?;
        let rank = cartan.len();
        let symmetrizer = cartan::symmetrizer(&cartan);
        let positive = cartan::positive_roots(&cartan);
        let cartan_inv = cartan::inverse(&cartan);
        let mut rs = RootSystem {
            cartan_type,
            rank,
            cartan,
            symmetrizer,
            positive,
            coroots: Vec::new(),
            cartan_inv,
        };
        rs.coroots = rs.positive.iter().map(|b| rs.unwind_coroot(b).unwrap()).collect();
        Ok(rs)
    }

    /// Parses names such as `A3`, `C2`, `E6`.
    pub fn parse(name: &str) -> Result<Self> {
        let name = name.trim();
        let mut chars = name.chars();
        let t = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => CartanType::A,
            Some('B') => CartanType::B,
            Some('C') => CartanType::C,
            Some('D') => CartanType::D,
            Some('E') => CartanType::E,
            Some('F') => CartanType::F,
            Some('G') => CartanType::G,
            _ => return Err(Error::UnknownType(name.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .trim()
            .parse()
            .map_err(|_| Error::UnknownType(name.to_string()))?;
        RootSystem::new(t, rank)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.cartan_type, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[RootVec] {
        &self.positive
    }

    pub fn n_positive(&self) -> usize {
        self.positive.len()
    }

    /// `⟨α_j, α_i∨⟩`.
    pub fn cartan_int(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    /// Fundamental coordinates of an element of the root lattice.
    pub fn root_to_weight(&self, beta: &RootVec) -> Vec<i64> {
        (0..self.rank)
            .map(|k| (0..self.rank).map(|j| self.cartan[k][j] * beta.coords[j]).sum())
            .collect()
    }

    /// Simple-root coordinates of a weight (rational in general).
    pub fn weight_to_root_coords(&self, w: &[Rat]) -> Vec<Rat> {
        self.cartan_inv
            .iter()
            .map(|row| row.iter().zip(w).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `⟨β, α_i∨⟩` for a root-lattice vector.
    fn root_pair_simple(&self, beta: &[i64], i: usize) -> i64 {
        (0..self.rank).map(|j| self.cartan[i][j] * beta[j]).sum()
    }

    /// `s_i(β)` in simple-root coordinates; `i` counted from 0.
    pub fn reflect_root(&self, i: usize, beta: &RootVec) -> RootVec {
        let mut c = beta.coords.clone();
        c[i] -= self.root_pair_simple(&beta.coords, i);
        RootVec::new(c)
    }

    /// `s_i(λ) = λ − ⟨λ,α_i∨⟩ α_i`; `i` counted from 1.
    pub fn simple_reflection(&self, i: usize, lambda: &Weight) -> Weight {
        let mut c = lambda.coords.clone();
        self.reflect_rat(i - 1, &mut c);
        Weight::new(c)
    }

    pub(crate) fn reflect_rat(&self, i: usize, c: &mut [Rat]) {
        let p = c[i].clone();
        if p.is_zero() {
            return;
        }
        for (k, x) in c.iter_mut().enumerate() {
            *x -= &p * rat(self.cartan[k][i]);
        }
    }

    pub(crate) fn reflect_int(&self, i: usize, c: &mut [i64]) {
        let p = c[i];
        if p == 0 {
            return;
        }
        for (k, x) in c.iter_mut().enumerate() {
            *x -= p * self.cartan[k][i];
        }
    }

    /// Coroot of a positive root, found by writing `β = w(α_i)` and
    /// reflecting back: returns `c` with `⟨λ, β∨⟩ = Σ c_k λ_k`.
    fn unwind_coroot(&self, beta: &RootVec) -> Result<Vec<i64>> {
        // Track the images of the fundamental coweights' pairings: the k-th
        // column accumulates w⁻¹ applied to ω_k.
        let mut cur = beta.clone();
        let mut letters = Vec::new();
        loop {
            if !cur.is_positive() {
                return Err(Error::NotARoot(beta.coords.clone()));
            }
            if let Some(i) = (0..self.rank).find(|&i| cur.coords == RootVec::simple(self.rank, i).coords) {
                let mut c = vec![0; self.rank];
                for (k, ck) in c.iter_mut().enumerate() {
                    let mut w = vec![0; self.rank];
                    w[k] = 1;
                    for &j in &letters {
                        self.reflect_int(j, &mut w);
                    }
                    *ck = w[i];
                }
                return Ok(c);
            }
            let j = (0..self.rank)
                .find(|&j| self.root_pair_simple(&cur.coords, j) > 0)
                .ok_or_else(|| Error::NotARoot(beta.coords.clone()))?;
            cur = self.reflect_root(j, &cur);
            letters.push(j);
        }
    }

    fn root_index(&self, beta: &RootVec) -> Option<(usize, bool)> {
        if let Ok(k) = self.positive.binary_search_by(|p| cmp_roots(p, beta)) {
            return Some((k, true));
        }
        let neg = beta.neg();
        self.positive.binary_search_by(|p| cmp_roots(p, &neg)).ok().map(|k| (k, false))
    }

    /// Simple-coroot coordinates of `β∨`.
    pub fn coroot(&self, beta: &RootVec) -> Result<Vec<i64>> {
        match self.root_index(beta) {
            Some((k, true)) => Ok(self.coroots[k].clone()),
            Some((k, false)) => Ok(self.coroots[k].iter().map(|c| -c).collect()),
            None => Err(Error::NotARoot(beta.coords.clone())),
        }
    }

    /// `⟨λ, β∨⟩`.
    pub fn pairing(&self, lambda: &Weight, beta: &RootVec) -> Result<Rat> {
        let c = self.coroot(beta)?;
        Ok(c.iter().zip(&lambda.coords).map(|(a, b)| rat(*a) * b).sum())
    }

    /// Invariant form `(λ, μ)` on weights, normalized so `(α_i, α_i) = 2 d_i`.
    pub fn inner(&self, lambda: &[Rat], mu: &[Rat]) -> Rat {
        let a = self.weight_to_root_coords(lambda);
        (0..self.rank).map(|i| &a[i] * rat(self.symmetrizer[i]) * &mu[i]).sum()
    }

    pub fn longest_word(&self) -> ReducedWord {
        self.parabolic_longest_word(&(1..=self.rank).collect::<Vec<_>>())
    }

    /// Lexicographically first reduced word of the longest element of the
    /// parabolic subgroup generated by `letters` (counted from 1).
    pub fn parabolic_longest_word(&self, letters: &[usize]) -> ReducedWord {
        let mut mu = vec![1i64; self.rank];
        let mut sorted: Vec<usize> = letters.iter().map(|l| l - 1).collect();
        sorted.sort_unstable();
        let mut word = Vec::new();
        while let Some(&i) = sorted.iter().find(|&&i| mu[i] > 0) {
            self.reflect_int(i, &mut mu);
            word.push(i + 1);
        }
        ReducedWord::new(word)
    }

    /// Type A: the Gelfand–Tsetlin word `(1)(2 1)(3 2 1)…(n … 1)`. Other
    /// types: the lexicographically first reduced word of `w0`.
    pub fn standard_word(&self) -> ReducedWord {
        if self.cartan_type != CartanType::A {
            return self.longest_word();
        }
        let mut w = Vec::new();
        for b in 1..=self.rank {
            w.extend((1..=b).rev());
        }
        ReducedWord::new(w)
    }

    pub fn check_letters(&self, word: &ReducedWord) -> Result<()> {
        if let Some(&bad) = word.letters().iter().find(|&&l| l == 0 || l > self.rank) {
            return Err(Error::NotReduced(format!("letter {bad} outside 1..{}", self.rank)));
        }
        Ok(())
    }

    /// `β_k = s_{i_1}…s_{i_{k−1}}(α_{i_k})` for every position of a prefix of
    /// a reduced word; `None` as soon as a root comes out negative.
    fn betas_of(&self, letters: &[usize]) -> Option<Vec<RootVec>> {
        let mut out = Vec::with_capacity(letters.len());
        for k in 0..letters.len() {
            let mut b = RootVec::simple(self.rank, letters[k] - 1);
            for &j in letters[..k].iter().rev() {
                b = self.reflect_root(j - 1, &b);
            }
            if !b.is_positive() {
                return None;
            }
            out.push(b);
        }
        Some(out)
    }

    /// True iff the word is a reduced decomposition of the longest element.
    pub fn is_reduced(&self, word: &ReducedWord) -> bool {
        if self.check_letters(word).is_err() || word.len() != self.n_positive() {
            return false;
        }
        match self.betas_of(word.letters()) {
            Some(mut b) => {
                b.sort();
                b.dedup();
                b.len() == self.n_positive()
            }
            None => false,
        }
    }

    pub fn require_reduced(&self, word: &ReducedWord) -> Result<()> {
        if self.is_reduced(word) {
            Ok(())
        } else {
            Err(Error::NotReduced(word.to_string()))
        }
    }

    /// Positive roots in the order the word enumerates them.
    pub fn beta_sequence(&self, word: &ReducedWord) -> Result<Vec<RootVec>> {
        self.require_reduced(word)?;
        Ok(self.betas_of(word.letters()).expect("reduced word"))
    }

    /// β-sequence of any reduced word of some element (not necessarily the
    /// longest one).
    pub fn partial_beta_sequence(&self, letters: &[usize]) -> Result<Vec<RootVec>> {
        self.check_letters(&ReducedWord::new(letters.to_vec()))?;
        self.betas_of(letters)
            .ok_or_else(|| Error::NotReduced(ReducedWord::new(letters.to_vec()).to_string()))
    }

    /// Every reduced word of the longest element in lexicographic order.
    pub fn all_reduced_words(&self) -> ReducedWords<'_> {
        ReducedWords::new(self, DEFAULT_WORD_BUDGET)
    }

    pub fn all_reduced_words_with_budget(&self, budget: u64) -> ReducedWords<'_> {
        ReducedWords::new(self, budget)
    }

    /// `w0(λ)` for the longest element.
    pub fn apply_longest(&self, lambda: &Weight) -> Weight {
        let w = self.longest_word();
        let mut c = lambda.coords.clone();
        for &l in w.letters().iter().rev() {
            self.reflect_rat(l - 1, &mut c);
        }
        Weight::new(c)
    }

    /// `λ* = −w0(λ)`.
    pub fn dual_weight(&self, lambda: &Weight) -> Weight {
        self.apply_longest(lambda).neg()
    }

    /// Dominant element of the orbit of an integral weight.
    pub fn dominant_conjugate(&self, mu: &[i64]) -> Vec<i64> {
        let mut m = mu.to_vec();
        while let Some(i) = (0..self.rank).find(|&i| m[i] < 0) {
            self.reflect_int(i, &mut m);
        }
        m
    }

    /// True iff `λ − μ` is a nonnegative integer combination of simple roots.
    pub fn dominates(&self, lambda: &[i64], mu: &[i64]) -> bool {
        let diff: Vec<Rat> = lambda.iter().zip(mu).map(|(a, b)| rat(a - b)).collect();
        self.weight_to_root_coords(&diff)
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

fn cmp_roots(a: &RootVec, b: &RootVec) -> std::cmp::Ordering {
    (a.height(), &a.coords).cmp(&(b.height(), &b.coords))
}
