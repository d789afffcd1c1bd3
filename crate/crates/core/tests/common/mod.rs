//! A second, deliberately naive character oracle for the integration tests.
//!
//! Characters are Laurent polynomials in ε-coordinates. Irreducible characters
//! come from determinantal formulas (Jacobi–Trudi for GL, the e- and
//! h-determinants for Sp and odd SO), so nothing here touches the engine's
//! Freudenthal code, its weight lattice, or its Newton recursions.

#![allow(dead_code)]

use std::collections::BTreeMap;

use supermf_core::FormalChar;

pub type Poly = BTreeMap<Vec<i32>, i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// GL(n); compared with the engine's SL(n).
    Gl(usize),
    /// Sp(2n).
    Sp(usize),
    /// SO(2n+1).
    SoOdd(usize),
}

impl Kind {
    pub fn coords(self) -> usize {
        match self {
            Kind::Gl(n) | Kind::Sp(n) | Kind::SoOdd(n) => n,
        }
    }

    /// Weights of the defining representation.
    pub fn standard(self) -> Vec<Vec<i32>> {
        let n = self.coords();
        let unit = |i: usize, s: i32| {
            let mut v = vec![0; n];
            v[i] = s;
            v
        };
        let mut out: Vec<Vec<i32>> = (0..n).map(|i| unit(i, 1)).collect();
        if matches!(self, Kind::Sp(_) | Kind::SoOdd(_)) {
            out.extend((0..n).map(|i| unit(i, -1)));
        }
        if matches!(self, Kind::SoOdd(_)) {
            out.push(vec![0; n]);
        }
        out
    }

    /// The irreducible with partition label λ, as a Laurent polynomial.
    pub fn irreducible(self, lambda: &[i32]) -> Poly {
        let vars = self.standard();
        let n = self.coords();
        let l: Vec<i32> = lambda.iter().copied().filter(|&x| x > 0).collect();
        match self {
            Kind::Gl(_) => jacobi_trudi(n, &l, |k| complete(k, &vars), |_| Poly::new()),
            Kind::SoOdd(_) => jacobi_trudi(n, &l, |k| complete(k, &vars), |k| complete(k, &vars)),
            Kind::Sp(_) => {
                let t = conjugate(&l);
                jacobi_trudi(n, &t, |k| elementary(k, &vars), |k| elementary(k, &vars))
            }
        }
    }

    /// Engine coordinates (fundamental weights) of the label λ.
    pub fn fundamental(self, lambda: &[i32]) -> Vec<i32> {
        let n = self.coords();
        let part = |i: usize| lambda.get(i).copied().unwrap_or(0);
        match self {
            Kind::Gl(_) => (0..n - 1).map(|i| part(i) - part(i + 1)).collect(),
            Kind::Sp(_) => (0..n).map(|i| part(i) - part(i + 1)).collect(),
            Kind::SoOdd(_) => (0..n).map(|i| if i + 1 == n { 2 * part(i) } else { part(i) - part(i + 1) }).collect(),
        }
    }
}

pub fn conjugate(l: &[i32]) -> Vec<i32> {
    let first = l.first().copied().unwrap_or(0);
    (1..=first).map(|j| l.iter().filter(|&&x| x >= j).count() as i32).collect()
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (x, c) in a {
        for (y, d) in b {
            let k: Vec<i32> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            *out.entry(k).or_insert(0) += c * d;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn add_scaled(acc: &mut Poly, b: &Poly, s: i64) {
    for (k, c) in b {
        *acc.entry(k.clone()).or_insert(0) += s * c;
    }
    acc.retain(|_, c| *c != 0);
}

/// Outer product: exponent vectors concatenate.
pub fn outer(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (x, c) in a {
        for (y, d) in b {
            let mut k = x.clone();
            k.extend(y);
            *out.entry(k).or_insert(0) += c * d;
        }
    }
    out
}

fn one(n: usize) -> Poly {
    Poly::from([(vec![0; n], 1)])
}

/// h_k over the given monomials.
pub fn complete(k: i32, vars: &[Vec<i32>]) -> Poly {
    let n = vars[0].len();
    if k < 0 {
        return Poly::new();
    }
    let k = k as usize;
    // table[j] = h_j of the variables seen so far
    let mut table: Vec<Poly> = (0..=k).map(|j| if j == 0 { one(n) } else { Poly::new() }).collect();
    for v in vars {
        let x = Poly::from([(v.clone(), 1)]);
        for j in 1..=k {
            let shifted = mul(&table[j - 1], &x);
            add_scaled(&mut table[j], &shifted, 1);
        }
    }
    table.swap_remove(k)
}

/// e_k over the given monomials.
pub fn elementary(k: i32, vars: &[Vec<i32>]) -> Poly {
    let n = vars[0].len();
    if k < 0 || k as usize > vars.len() {
        return Poly::new();
    }
    let k = k as usize;
    let mut table: Vec<Poly> = (0..=k).map(|j| if j == 0 { one(n) } else { Poly::new() }).collect();
    for v in vars {
        let x = Poly::from([(v.clone(), 1)]);
        for j in (1..=k).rev() {
            let shifted = mul(&table[j - 1], &x);
            add_scaled(&mut table[j], &shifted, 1);
        }
    }
    table.swap_remove(k)
}

/// det(f(l_i − i + j) − g(l_i − i − j)), 1-based i, j; the empty label gives 1.
fn jacobi_trudi(coords: usize, l: &[i32], f: impl Fn(i32) -> Poly, g: impl Fn(i32) -> Poly) -> Poly {
    let n = l.len();
    if n == 0 {
        return one(coords);
    }
    let m: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let (i1, j1) = (i as i32 + 1, j as i32 + 1);
                    let mut e = f(l[i] - i1 + j1);
                    add_scaled(&mut e, &g(l[i] - i1 - j1), -1);
                    e
                })
                .collect()
        })
        .collect();
    det(&m)
}

fn det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut out = Poly::new();
    for j in 0..n {
        if m[0][j].is_empty() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = mul(&m[0][j], &det(&minor));
        add_scaled(&mut out, &term, if j % 2 == 0 { 1 } else { -1 });
    }
    out
}

/// Character of a list of weights (with repetition).
pub fn char_of(weights: &[Vec<i32>]) -> Poly {
    let mut out = Poly::new();
    for w in weights {
        *out.entry(w.clone()).or_insert(0) += 1;
    }
    out
}

pub fn weights_of(p: &Poly) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for (w, &c) in p {
        assert!(c >= 0, "virtual character has no weight list");
        for _ in 0..c {
            out.push(w.clone());
        }
    }
    out
}

/// S^k of a weight list, by enumerating multisets.
pub fn sym(weights: &[Vec<i32>], k: usize) -> Poly {
    let n = weights.first().map_or(0, |w| w.len());
    let mut out = Poly::new();
    fn rec(ws: &[Vec<i32>], start: usize, left: usize, acc: &mut Vec<i32>, out: &mut Poly) {
        if left == 0 {
            *out.entry(acc.clone()).or_insert(0) += 1;
            return;
        }
        for i in start..ws.len() {
            for (a, b) in acc.iter_mut().zip(&ws[i]) {
                *a += b;
            }
            rec(ws, i, left - 1, acc, out);
            for (a, b) in acc.iter_mut().zip(&ws[i]) {
                *a -= b;
            }
        }
    }
    rec(weights, 0, k, &mut vec![0; n], &mut out);
    out
}

/// ∧^k of a weight list, by enumerating subsets.
pub fn ext(weights: &[Vec<i32>], k: usize) -> Poly {
    let n = weights.first().map_or(0, |w| w.len());
    let mut out = Poly::new();
    fn rec(ws: &[Vec<i32>], start: usize, left: usize, acc: &mut Vec<i32>, out: &mut Poly) {
        if left == 0 {
            *out.entry(acc.clone()).or_insert(0) += 1;
            return;
        }
        for i in start..ws.len() {
            for (a, b) in acc.iter_mut().zip(&ws[i]) {
                *a += b;
            }
            rec(ws, i + 1, left - 1, acc, out);
            for (a, b) in acc.iter_mut().zip(&ws[i]) {
                *a -= b;
            }
        }
    }
    rec(weights, 0, k, &mut vec![0; n], &mut out);
    out
}

/// All pairs (a, b) of weights, concatenated: the character of A ⊠ B.
pub fn outer_weights(a: &[Vec<i32>], b: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            let mut v = x.clone();
            v.extend(y);
            out.push(v);
        }
    }
    out
}

/// Irreducible of a product group with block labels read off a concatenated vector.
pub fn product_irreducible(blocks: &[Kind], label: &[i32]) -> Poly {
    let mut acc = Poly::from([(Vec::new(), 1)]);
    let mut at = 0;
    for &b in blocks {
        let n = b.coords();
        acc = outer(&acc, &b.irreducible(&label[at..at + n]));
        at += n;
    }
    acc
}

/// Multiplicities of irreducibles, keyed by concatenated partition labels.
pub fn decompose(blocks: &[Kind], mut p: Poly) -> BTreeMap<Vec<i32>, i64> {
    let mut out = BTreeMap::new();
    let mut guard = 0;
    while let Some((top, &c)) = p.iter().next_back() {
        let top = top.clone();
        assert!(c > 0, "negative leading coefficient at {top:?}: not a character");
        add_scaled(&mut p, &product_irreducible(blocks, &top), -c);
        out.insert(top, c);
        guard += 1;
        assert!(guard < 100_000, "decomposition does not terminate");
    }
    out
}

/// A decomposition rewritten in the engine's coordinates.
pub fn to_engine(blocks: &[Kind], d: &BTreeMap<Vec<i32>, i64>) -> BTreeMap<Vec<i32>, u64> {
    let mut out = BTreeMap::new();
    for (label, &c) in d {
        let mut w = Vec::new();
        let mut at = 0;
        for &b in blocks {
            let n = b.coords();
            w.extend(b.fundamental(&label[at..at + n]));
            at += n;
        }
        *out.entry(w).or_insert(0) += c as u64;
    }
    out
}

pub fn engine_terms(c: &FormalChar) -> BTreeMap<Vec<i32>, u64> {
    c.iter().map(|(w, m)| (w.coords().to_vec(), m)).collect()
}

/// Value of a character at the identity.
pub fn dim(p: &Poly) -> i64 {
    p.values().sum()
}

/// Semistandard tableaux of shape λ with entries ≤ n, counted by brute force.
pub fn ssyt_count(lambda: &[u32], n: u32) -> u64 {
    let cells: Vec<(usize, usize)> =
        lambda.iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<u32>> = lambda.iter().map(|&len| vec![0; len as usize]).collect();
    fn fill(cells: &[(usize, usize)], i: usize, grid: &mut Vec<Vec<u32>>, n: u32) -> u64 {
        if i == cells.len() {
            return 1;
        }
        let (r, c) = cells[i];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=n {
            grid[r][c] = v;
            total += fill(cells, i + 1, grid, n);
        }
        total
    }
    fill(&cells, 0, &mut grid, n)
}

/// c^λ_{μν} from the oracle: decompose s_μ·s_ν over GL(|λ|).
pub fn lr_oracle(lambda: &[i32], mu: &[i32], nu: &[i32]) -> i64 {
    let n = (lambda.iter().sum::<i32>().max(1)) as usize;
    let g = Kind::Gl(n);
    let mut key = lambda.to_vec();
    key.resize(n, 0);
    let prod = mul(&g.irreducible(mu), &g.irreducible(nu));
    decompose(&[g], prod).get(&key).copied().unwrap_or(0)
}
