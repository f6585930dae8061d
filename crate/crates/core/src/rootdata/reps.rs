use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, ToPrimitive, Zero};

use super::{CartanType, RootSystem, Weight};
use crate::error::{Error, Result};
use crate::exactgeom::{rat, Rat};

impl RootSystem {
    /// The Weyl group orbit, closed under simple reflections, sorted.
    pub fn weyl_orbit(&self, lambda: &Weight) -> Vec<Weight> {
        let mut seen: BTreeSet<Vec<Rat>> = BTreeSet::new();
        seen.insert(lambda.coords.clone());
        let mut todo = vec![lambda.coords.clone()];
        while let Some(w) = todo.pop() {
            for i in 0..self.rank() {
                if w[i].is_zero() {
                    continue;
                }
                let mut v = w.clone();
                self.reflect_rat(i, &mut v);
                if seen.insert(v.clone()) {
                    todo.push(v);
                }
            }
        }
        seen.into_iter().map(Weight::new).collect()
    }

    /// Order of the Weyl group by the stabilizer chain
    /// `|W_S| = |W_S·ω_s| · |W_{S∖s}|`, peeling off leaf nodes.
    pub fn weyl_group_order(&self) -> u128 {
        let mut nodes: Vec<usize> = (0..self.rank()).collect();
        let mut order: u128 = 1;
        while !nodes.is_empty() {
            let linked = |a: usize, b: usize| a != b && self.cartan[a][b] != 0;
            let leaves: Vec<usize> = nodes
                .iter()
                .copied()
                .filter(|&s| nodes.iter().filter(|&&t| linked(s, t)).count() <= 1)
                .collect();
            let (s, size) = leaves
                .iter()
                .map(|&s| (s, self.parabolic_orbit_size(&nodes, s)))
                .min_by_key(|&(_, n)| n)
                .expect("a forest has leaves");
            order *= size as u128;
            nodes.retain(|&t| t != s);
        }
        order
    }

    /// Size of the orbit of `ω_s` under the reflections in `nodes`.
    fn parabolic_orbit_size(&self, nodes: &[usize], s: usize) -> usize {
        let start: Vec<i64> = nodes.iter().map(|&k| (k == s) as i64).collect();
        let mut seen = std::collections::HashSet::from([start.clone()]);
        let mut todo = vec![start];
        while let Some(w) = todo.pop() {
            for (a, &i) in nodes.iter().enumerate() {
                if w[a] == 0 {
                    continue;
                }
                let v: Vec<i64> = nodes
                    .iter()
                    .enumerate()
                    .map(|(b, &k)| w[b] - w[a] * self.cartan[k][i])
                    .collect();
                if seen.insert(v.clone()) {
                    todo.push(v);
                }
            }
        }
        seen.len()
    }

    /// `dim V(λ) = Π_{β>0} ⟨λ+ρ, β∨⟩ / ⟨ρ, β∨⟩`.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u64> {
        lambda.require_dominant()?;
        let mut num = Rat::from_integer(1.into());
        for c in &self.coroots {
            let lr: Rat = c.iter().zip(&lambda.coords).map(|(a, l)| rat(*a) * (l + rat(1))).sum();
            let r: i64 = c.iter().sum();
            num = num * lr / rat(r);
        }
        if !num.is_integer() {
            return Err(Error::NotDominant(
                lambda.coords.iter().map(|c| c.to_string()).collect(),
            ));
        }
        num.to_integer().to_u64().ok_or(Error::Overflow("weyl_dim"))
    }

    /// Multiplicity of the weight `μ` in `V(λ)` by Freudenthal's recursion.
    pub fn freudenthal_mult(&self, lambda: &Weight, mu: &Weight) -> Result<u64> {
        lambda.require_dominant()?;
        let lam = lambda
            .to_ints()
            .ok_or_else(|| Error::NotDominant(lambda.coords.iter().map(|c| c.to_string()).collect()))?;
        let Some(mu) = mu.to_ints() else { return Ok(0) };
        Ok(Freudenthal::new(self, lam).mult(&mu))
    }

    /// All weights of `V(λ)` with their multiplicities, sorted.
    pub fn weight_multiplicities(&self, lambda: &Weight) -> Result<Vec<(Weight, u64)>> {
        lambda.require_dominant()?;
        let lam = lambda
            .to_ints()
            .ok_or_else(|| Error::NotDominant(lambda.coords.iter().map(|c| c.to_string()).collect()))?;
        let mut f = Freudenthal::new(self, lam.clone());
        // Dominant weights below λ, found by subtracting positive roots.
        let mut dominant: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut todo = vec![lam];
        while let Some(w) = todo.pop() {
            if !dominant.insert(w.clone()) {
                continue;
            }
            for b in self.positive_roots() {
                let bw = self.root_to_weight(b);
                let v: Vec<i64> = w.iter().zip(&bw).map(|(a, c)| a - c).collect();
                if v.iter().all(|&x| x >= 0) && !dominant.contains(&v) {
                    todo.push(v);
                }
            }
        }
        let mut out = Vec::new();
        for d in dominant {
            let m = f.mult(&d);
            if m == 0 {
                continue;
            }
            for w in self.weyl_orbit(&Weight::from_ints(&d)) {
                out.push((w, m));
            }
        }
        out.sort();
        Ok(out)
    }
}

struct Freudenthal<'a> {
    rs: &'a RootSystem,
    lam: Vec<i64>,
    norm_lam_rho: Rat,
    root_weights: Vec<Vec<i64>>,
    memo: HashMap<Vec<i64>, u64>,
}

impl<'a> Freudenthal<'a> {
    fn new(rs: &'a RootSystem, lam: Vec<i64>) -> Self {
        let lr: Vec<Rat> = lam.iter().map(|&x| rat(x + 1)).collect();
        Freudenthal {
            rs,
            norm_lam_rho: rs.inner(&lr, &lr),
            root_weights: rs.positive_roots().iter().map(|b| rs.root_to_weight(b)).collect(),
            lam,
            memo: HashMap::new(),
        }
    }

    fn in_hull(&self, mu: &[i64]) -> bool {
        let d = self.rs.dominant_conjugate(mu);
        self.rs.dominates(&self.lam, &d)
    }

    fn mult(&mut self, mu: &[i64]) -> u64 {
        let d = self.rs.dominant_conjugate(mu);
        if !self.rs.dominates(&self.lam, &d) {
            return 0;
        }
        if d == self.lam {
            return 1;
        }
        if let Some(&m) = self.memo.get(&d) {
            return m;
        }
        let mut sum = Rat::zero();
        for bi in 0..self.root_weights.len() {
            let bw = self.root_weights[bi].clone();
            let bw_rat: Vec<Rat> = bw.iter().map(|&x| rat(x)).collect();
            let mut nu = d.clone();
            loop {
                for (x, y) in nu.iter_mut().zip(&bw) {
                    *x += y;
                }
                if !self.in_hull(&nu) {
                    break;
                }
                let m = self.mult(&nu.clone());
                if m > 0 {
                    let nu_rat: Vec<Rat> = nu.iter().map(|&x| rat(x)).collect();
                    sum += rat(m as i64) * self.rs.inner(&nu_rat, &bw_rat);
                }
            }
        }
        let dr: Vec<Rat> = d.iter().map(|&x| rat(x + 1)).collect();
        let denom = &self.norm_lam_rho - self.rs.inner(&dr, &dr);
        let m = sum * rat(2) / denom;
        debug_assert!(m.is_integer() && !m.is_negative());
        let m = m.to_integer().to_u64().expect("multiplicity fits in u64");
        self.memo.insert(d, m);
        m
    }
}

/// Indices (counted from 1) of the minuscule fundamental weights.
pub fn minuscule_weights(rs: &RootSystem) -> BTreeSet<usize> {
    let n = rs.rank();
    match rs.cartan_type() {
        CartanType::A => (1..=n).collect(),
        CartanType::B => [n].into(),
        CartanType::C => [1].into(),
        CartanType::D => [1, n - 1, n].into(),
        // Ends of the two long arms; in Bourbaki numbering these are ω1, ω6.
        CartanType::E if n == 6 => [5, 6].into(),
        CartanType::E if n == 7 => [7].into(),
        _ => BTreeSet::new(),
    }
}

/// Indices (counted from 1) of the cominuscule fundamental weights.
pub fn cominuscule_weights(rs: &RootSystem) -> BTreeSet<usize> {
    match rs.cartan_type() {
        CartanType::B => [1].into(),
        CartanType::C => [rs.rank()].into(),
        _ => minuscule_weights(rs),
    }
}
