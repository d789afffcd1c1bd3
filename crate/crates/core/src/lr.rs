//! Littlewood–Richardson coefficients and products of Schur-labelled sums.

use std::collections::BTreeMap;
use std::sync::{OnceLock, RwLock};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

type Key = (Partition, Partition, Partition);

fn memo() -> &'static RwLock<FxHashMap<Key, u64>> {
    static MEMO: OnceLock<RwLock<FxHashMap<Key, u64>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// c^λ_{μ,ν}: the multiplicity of {λ} in {μ}·{ν}.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.size() + nu.size() != lambda.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    if mu.is_empty() || nu.is_empty() {
        return 1;
    }
    // Symmetric in μ and ν; fill the skew shape by the smaller content.
    let (outer_cut, content) = if mu.size() >= nu.size() { (mu, nu) } else { (nu, mu) };
    let key = (lambda.clone(), outer_cut.clone(), content.clone());
    if let Some(&v) = memo().read().expect("lr memo poisoned").get(&key) {
        return v;
    }
    let v = count_lr_tableaux(lambda, outer_cut, content);
    memo().write().expect("lr memo poisoned").insert(key, v);
    v
}

/// Counts LR tableaux of shape λ/μ and content ν.
fn count_lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    // Cells in reading order: rows top to bottom, each row right to left.
    let mut cells = Vec::new();
    for r in 0..lambda.len() {
        for c in (mu.part(r)..lambda.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }
    let width = lambda.first() as usize;
    let mut grid = vec![vec![0u32; width]; lambda.len()];
    let mut counts = vec![0u32; nu.len() + 1];

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        mu: &Partition,
        lambda: &Partition,
        nu: &Partition,
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        // Rows weakly increase to the right.
        let right_cap = if (c + 1) < lambda.part(r) as usize { grid[r][c + 1] } else { nu.len() as u32 };
        // Columns strictly increase downward, when the cell above is in the skew shape.
        let above_min = if r > 0 && (c as u32) >= mu.part(r - 1) { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        let hi = right_cap.min(r as u32 + 1);
        for v in above_min..=hi {
            let vi = v as usize;
            if counts[vi] >= nu.part(vi - 1) {
                continue;
            }
            if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
                continue;
            }
            counts[vi] += 1;
            grid[r][c] = v;
            total += rec(idx + 1, cells, mu, lambda, nu, grid, counts);
            counts[vi] -= 1;
        }
        grid[r][c] = 0;
        total
    }
    rec(0, &cells, mu, lambda, nu, &mut grid, &mut counts)
}

/// Σ_β c^λ_{μ,β} over β with even rows or even columns.
pub fn even_branching_coeff(lambda: &Partition, mu: &Partition, mode: EvenMode) -> u64 {
    if !lambda.contains(mu) {
        return 0;
    }
    let size = lambda.size() - mu.size();
    if size % 2 == 1 {
        return 0;
    }
    Partition::all_of_size(size)
        .into_iter()
        .filter(|b| match mode {
            EvenMode::EvenRows => b.all_parts_even(),
            EvenMode::EvenColumns => b.conjugate().all_parts_even(),
        })
        .map(|b| lr_coeff(lambda, mu, &b))
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvenMode {
    EvenRows,
    EvenColumns,
}

/// A non-negative combination of GL-labels {λ}, optionally truncated to ℓ(λ) ≤ cap.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GLFormalSum {
    terms: BTreeMap<Partition, u64>,
    length_cap: Option<usize>,
}

impl GLFormalSum {
    pub fn new(length_cap: Option<usize>) -> Self {
        GLFormalSum { terms: BTreeMap::new(), length_cap }
    }

    pub fn single(lambda: Partition, length_cap: Option<usize>) -> Self {
        let mut s = Self::new(length_cap);
        s.add(lambda, 1);
        s
    }

    pub fn unit(length_cap: Option<usize>) -> Self {
        Self::single(Partition::empty(), length_cap)
    }

    pub fn length_cap(&self) -> Option<usize> {
        self.length_cap
    }

    pub fn terms(&self) -> &BTreeMap<Partition, u64> {
        &self.terms
    }

    pub fn get(&self, lambda: &Partition) -> u64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    /// Adds `mult` copies of {λ}; terms beyond the length cap vanish.
    pub fn add(&mut self, lambda: Partition, mult: u64) {
        if mult == 0 || self.length_cap.is_some_and(|n| lambda.len() > n) {
            return;
        }
        *self.terms.entry(lambda).or_insert(0) += mult;
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().map(|(p, &m)| (p, m))
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.terms.values().copied().max().unwrap_or(0)
    }
}

impl FromIterator<(Partition, u64)> for GLFormalSum {
    fn from_iter<I: IntoIterator<Item = (Partition, u64)>>(iter: I) -> Self {
        let mut s = GLFormalSum::new(None);
        for (p, m) in iter {
            s.add(p, m);
        }
        s
    }
}

/// Bilinear product Σ c^λ_{μν} {λ}, truncated by the common length cap.
pub fn schur_multiply(a: &GLFormalSum, b: &GLFormalSum) -> Result<GLFormalSum> {
    let cap = match (a.length_cap, b.length_cap) {
        (Some(x), Some(y)) if x != y => return Err(Error::Incompatible(format!("length caps {x} and {y} differ"))),
        (x, y) => x.or(y),
    };
    let mut out = GLFormalSum::new(cap);
    for (mu, m1) in a.iter() {
        for (nu, m2) in b.iter() {
            for (lambda, c) in schur_product_pair(mu, nu, cap) {
                out.add(lambda, m1 * m2 * c);
            }
        }
    }
    Ok(out)
}

fn schur_product_pair(mu: &Partition, nu: &Partition, cap: Option<usize>) -> Vec<(Partition, u64)> {
    let n = mu.size() + nu.size();
    let max_len = (mu.len() + nu.len()).min(cap.unwrap_or(usize::MAX));
    let max_part = mu.first() + nu.first();
    Partition::bounded(n, max_len, max_part)
        .into_iter()
        .filter(|l| l.contains(mu) && l.contains(nu))
        .filter_map(|l| {
            let c = lr_coeff(&l, mu, nu);
            (c > 0).then_some((l, c))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &[u32]) -> Partition {
        Partition::of(x)
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coeff(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coeff(&p(&[2, 2]), &p(&[2]), &p(&[2])), 1);
        for lam in Partition::all_of_size(5) {
            assert_eq!(lr_coeff(&lam, &lam, &Partition::empty()), 1);
        }
        assert_eq!(lr_coeff(&p(&[3]), &p(&[1]), &p(&[1])), 0);
        assert_eq!(lr_coeff(&p(&[2, 2]), &p(&[1, 1, 1]), &p(&[1])), 0);
    }

    #[test]
    fn pieri_from_product() {
        let out = schur_multiply(&GLFormalSum::single(p(&[2]), Some(4)), &{
            let mut s = GLFormalSum::new(Some(4));
            s.add(p(&[4, 1, 1]), 1);
            s.add(p(&[3, 3]), 1);
            s
        })
        .unwrap();
        assert_eq!(out.get(&p(&[4, 3, 1])), 2);
    }

    #[test]
    fn three_boxes_at_cap_three() {
        let one = GLFormalSum::single(p(&[1]), Some(3));
        let two = schur_multiply(&one, &one).unwrap();
        let three = schur_multiply(&two, &one).unwrap();
        let expect: Vec<(Partition, u64)> = vec![(p(&[1, 1, 1]), 1), (p(&[2, 1]), 2), (p(&[3]), 1)];
        assert_eq!(three.iter().map(|(a, b)| (a.clone(), b)).collect::<Vec<_>>(), expect);
    }

    #[test]
    fn unit_product() {
        let l = GLFormalSum::single(p(&[3, 1]), None);
        assert_eq!(schur_multiply(&l, &GLFormalSum::unit(None)).unwrap(), l);
    }

    #[test]
    fn incompatible_caps() {
        let a = GLFormalSum::single(p(&[1]), Some(2));
        let b = GLFormalSum::single(p(&[1]), Some(3));
        assert!(schur_multiply(&a, &b).is_err());
    }

    #[test]
    fn even_branching_examples() {
        assert_eq!(even_branching_coeff(&p(&[2, 1]), &p(&[1]), EvenMode::EvenRows), 1);
        assert_eq!(even_branching_coeff(&p(&[2, 1]), &p(&[2, 1]), EvenMode::EvenRows), 1);
        assert_eq!(even_branching_coeff(&p(&[2, 1]), &p(&[2, 1]), EvenMode::EvenColumns), 1);
        assert_eq!(even_branching_coeff(&p(&[2, 2]), &Partition::empty(), EvenMode::EvenRows), 1);
        assert_eq!(even_branching_coeff(&p(&[1, 1]), &Partition::empty(), EvenMode::EvenColumns), 1);
        assert_eq!(even_branching_coeff(&p(&[1, 1]), &Partition::empty(), EvenMode::EvenRows), 0);
    }
}
