//! Exact characters from weight multiplicities.
//!
//! Irreducible characters come from Freudenthal's recursion. Tensor products are
//! convolutions of weight systems; symmetric and exterior powers use the Newton
//! recursions through Adams operations. Every decomposition is stripped from the
//! top and checked against dimension bookkeeping.

mod character;
mod freudenthal;
mod restrict;

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

pub use character::{adams, product_char, FormalChar, WeightMultiset};
pub use freudenthal::dominant_multiplicities;
pub use restrict::RestrictTarget;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::rootdata::{GroupType, ProductData, ProductGroup, Weight};
use crate::verify::cache::{CacheKey, DiskCache};

/// Dominant part of a W-invariant character, possibly virtual.
pub(crate) type DomChar = FxHashMap<Weight, i64>;

type Table = Arc<Vec<(Weight, i64)>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PowerKind {
    Sym,
    Ext,
}

impl PowerKind {
    pub fn tag(&self) -> &'static str {
        match self {
            PowerKind::Sym => "sym",
            PowerKind::Ext => "ext",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct SeriesKey {
    group: ProductGroup,
    rep: Vec<(Weight, u64)>,
    kind: PowerKind,
}

/// The decomposition engine with its memo tables and optional disk cache.
#[derive(Default)]
pub struct Engine {
    simple_tables: RwLock<FxHashMap<(GroupType, Weight), Table>>,
    product_tables: RwLock<FxHashMap<(ProductGroup, Weight), Table>>,
    full_weights: RwLock<FxHashMap<(ProductGroup, Weight), Table>>,
    tensors: RwLock<FxHashMap<(GroupType, Weight, Weight), Arc<FormalChar>>>,
    series: RwLock<FxHashMap<SeriesKey, Arc<Vec<Arc<DomChar>>>>>,
    powers: RwLock<FxHashMap<(SeriesKey, u32), Arc<FormalChar>>>,
    disk: Option<DiskCache>,
    checks: AtomicU64,
}

fn read<K: std::hash::Hash + Eq, V: Clone>(lock: &RwLock<FxHashMap<K, V>>, k: &K) -> Option<V> {
    lock.read().expect("engine memo poisoned").get(k).cloned()
}

fn write<K: std::hash::Hash + Eq, V: Clone>(lock: &RwLock<FxHashMap<K, V>>, k: K, v: V) -> V {
    lock.write().expect("engine memo poisoned").entry(k).or_insert(v).clone()
}

fn overflow() -> Error {
    Error::Overflow("character arithmetic")
}

/// C(n, k) with overflow detection.
pub fn binomial(n: u128, k: u128) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i).ok_or_else(overflow)? / (i + 1);
    }
    Ok(acc)
}

/// Number of degree-k monomials in n variables.
pub fn multichoose(n: u128, k: u128) -> Result<u128> {
    if n == 0 {
        return Ok(u128::from(k == 0));
    }
    binomial(n + k - 1, k)
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_disk_cache(cache: DiskCache) -> Self {
        Engine { disk: Some(cache), ..Default::default() }
    }

    /// Process-wide engine without a disk cache.
    pub fn global() -> &'static Engine {
        static GLOBAL: OnceLock<Engine> = OnceLock::new();
        GLOBAL.get_or_init(Engine::new)
    }

    pub fn disk_cache(&self) -> Option<&DiskCache> {
        self.disk.as_ref()
    }

    /// How many dimension bookkeeping checks have passed so far.
    pub fn bookkeeping_checks(&self) -> u64 {
        self.checks.load(Ordering::Relaxed)
    }

    /// Fails unless `c` has the expected dimension; counts each passing check.
    pub fn check_dimension(&self, c: &FormalChar, expected: u128, what: impl FnOnce() -> String) -> Result<()> {
        let got = c.dimension();
        if got != expected {
            return Err(Error::Bookkeeping(format!("{}: expected dimension {expected}, got {got}", what())));
        }
        self.checks.fetch_add(1, Ordering::Relaxed);
        Ok(())
    }

    fn simple_table(&self, g: GroupType, w: &Weight) -> Result<Table> {
        let key = (g, w.clone());
        if let Some(t) = read(&self.simple_tables, &key) {
            return Ok(t);
        }
        let t = Arc::new(dominant_multiplicities(&g.root_data(), w)?);
        Ok(write(&self.simple_tables, key, t))
    }

    /// Dominant weights of V(w) with multiplicities, over a product group.
    pub fn dominant_table(&self, g: &ProductGroup, w: &Weight) -> Result<Table> {
        g.check_weight(w)?;
        if g.factors().len() == 1 {
            return self.simple_table(g.factors()[0], w);
        }
        let key = (g.clone(), w.clone());
        if let Some(t) = read(&self.product_tables, &key) {
            return Ok(t);
        }
        let mut acc: Vec<(Weight, i64)> = vec![(Weight::default(), 1)];
        for (gf, part) in g.factors().iter().zip(g.split(w)) {
            let t = self.simple_table(*gf, &part)?;
            let mut next = Vec::with_capacity(acc.len() * t.len());
            for (a, m) in &acc {
                for (b, n) in t.iter() {
                    next.push((Weight::concat(&[a.clone(), b.clone()]), m * n));
                }
            }
            acc = next;
        }
        Ok(write(&self.product_tables, key, Arc::new(acc)))
    }

    /// The full weight system of V(w).
    pub fn full_weights(&self, g: &ProductGroup, w: &Weight) -> Result<Table> {
        let key = (g.clone(), w.clone());
        if let Some(t) = read(&self.full_weights, &key) {
            return Ok(t);
        }
        let mut acc: Vec<(Weight, i64)> = vec![(Weight::default(), 1)];
        for (gf, part) in g.factors().iter().zip(g.split(w)) {
            let rd = gf.root_data();
            let t = self.simple_table(*gf, &part)?;
            let mut factor = Vec::new();
            for (mu, m) in t.iter() {
                for v in rd.orbit(mu) {
                    factor.push((v, *m));
                }
            }
            let mut next = Vec::with_capacity(acc.len() * factor.len());
            for (a, m) in &acc {
                for (b, n) in &factor {
                    next.push((Weight::concat(&[a.clone(), b.clone()]), m * n));
                }
            }
            acc = next;
        }
        Ok(write(&self.full_weights, key, Arc::new(acc)))
    }

    /// Full weight system of an irreducible of a simple group.
    pub fn weight_multiplicities(&self, g: GroupType, w: &Weight) -> Result<WeightMultiset> {
        self.character(&FormalChar::irreducible(ProductGroup::simple(g), w.clone()))
    }

    /// Full weight system of a character.
    pub fn character(&self, c: &FormalChar) -> Result<WeightMultiset> {
        let mut ws = WeightMultiset::new(c.group().clone());
        for (w, m) in c.iter() {
            for (v, n) in self.full_weights(c.group(), w)?.iter() {
                ws.add(v.clone(), m * *n as u64);
            }
        }
        Ok(ws)
    }

    fn full_of_char(&self, c: &FormalChar) -> Result<Vec<(Weight, i64)>> {
        let mut acc: FxHashMap<Weight, i64> = FxHashMap::default();
        for (w, m) in c.iter() {
            for (v, n) in self.full_weights(c.group(), w)?.iter() {
                *acc.entry(v.clone()).or_insert(0) += m as i64 * n;
            }
        }
        let mut v: Vec<_> = acc.into_iter().collect();
        v.sort();
        Ok(v)
    }

    /// Decomposes a full weight system into irreducibles.
    pub fn decompose(&self, ws: &WeightMultiset) -> Result<FormalChar> {
        let dom: DomChar = ws.iter().filter(|(w, _)| w.is_dominant()).map(|(w, m)| (w.clone(), m as i64)).collect();
        let out = self.decompose_dom(ws.group(), dom)?;
        self.check_dimension(&out, ws.total(), || "decompose".into())?;
        Ok(out)
    }

    /// Strips irreducibles from the top: greatest (w, ρ), ties broken lexicographically.
    pub(crate) fn decompose_dom(&self, g: &ProductGroup, mut dom: DomChar) -> Result<FormalChar> {
        let pd = ProductData::new(g);
        dom.retain(|_, m| *m != 0);
        let mut order: Vec<(i64, Weight)> = dom.keys().map(|w| (pd.height(w), w.clone())).collect();
        order.sort_by(|a, b| b.cmp(a));
        let mut out = FormalChar::new(g.clone());
        for (_, top) in order {
            let m = dom.get(&top).copied().unwrap_or(0);
            if m == 0 {
                continue;
            }
            if m < 0 {
                return Err(Error::NotTrueCharacter(format!("coefficient {m} at {top}")));
            }
            for (mu, k) in self.dominant_table(g, &top)?.iter() {
                let e = dom.entry(mu.clone()).or_insert(0);
                *e = e.checked_sub(m.checked_mul(*k).ok_or_else(overflow)?).ok_or_else(overflow)?;
            }
            out.add(top, m as u64);
        }
        if let Some((w, m)) = dom.iter().find(|(_, &m)| m != 0) {
            return Err(Error::NotTrueCharacter(format!("remainder {m} at {w}")));
        }
        Ok(out)
    }

    /// Σ_a m_A(a)·[B shifted by a], for a full weight list A and a W-invariant B.
    fn multiply(pd: &ProductData, a: &[(Weight, i64)], b: &DomChar) -> Result<DomChar> {
        let mut cands: FxHashSet<Weight> = FxHashSet::default();
        for (x, _) in a {
            for mu in b.keys() {
                let mut s = x.add(mu);
                pd.to_dominant_in_place(&mut s);
                cands.insert(s);
            }
        }
        let mut out = DomChar::default();
        for nu in cands {
            let mut acc: i64 = 0;
            for (x, m) in a {
                let mut d = nu.sub(x);
                pd.to_dominant_in_place(&mut d);
                if let Some(&c) = b.get(&d) {
                    acc = acc.checked_add(m.checked_mul(c).ok_or_else(overflow)?).ok_or_else(overflow)?;
                }
            }
            if acc != 0 {
                out.insert(nu, acc);
            }
        }
        Ok(out)
    }

    /// V(w1) ⊗ V(w2) for a simple group.
    pub fn tensor(&self, g: GroupType, w1: &Weight, w2: &Weight) -> Result<FormalChar> {
        Ok((*self.tensor_simple(g, w1, w2)?).clone())
    }

    fn tensor_simple(&self, g: GroupType, w1: &Weight, w2: &Weight) -> Result<Arc<FormalChar>> {
        crate::rootdata::check_weight(g, w1)?;
        crate::rootdata::check_weight(g, w2)?;
        let (a, b) = if w1 <= w2 { (w1, w2) } else { (w2, w1) };
        let key = (g, a.clone(), b.clone());
        if let Some(c) = read(&self.tensors, &key) {
            return Ok(c);
        }
        let pg = ProductGroup::simple(g);
        let rd = g.root_data();
        let (small, large) = if rd.dimension(a) <= rd.dimension(b) { (a, b) } else { (b, a) };
        let cache_key = CacheKey::new(&pg, "tensor", vec![(small.clone(), 1), (large.clone(), 1)], 0);
        let expected = rd.dimension(a) * rd.dimension(b);
        if let Some(c) = self.disk.as_ref().and_then(|d| d.get(&cache_key)) {
            if c.group() == &pg && self.check_dimension(&c, expected, || "cached tensor".into()).is_ok() {
                return Ok(write(&self.tensors, key, Arc::new(c)));
            }
        }
        let out = if small.is_zero() {
            FormalChar::irreducible(pg.clone(), large.clone())
        } else {
            let full = self.full_weights(&pg, small)?;
            let dom: DomChar = self.simple_table(g, large)?.iter().cloned().collect();
            let prod = Self::multiply(&ProductData::new(&pg), &full, &dom)?;
            self.decompose_dom(&pg, prod)?
        };
        self.check_dimension(&out, expected, || format!("{g}: {a} ⊗ {b}"))?;
        if let Some(d) = &self.disk {
            d.put(&cache_key, &out);
        }
        Ok(write(&self.tensors, key, Arc::new(out)))
    }

    /// V(w1) ⊗ V(w2) over a product group, factor by factor.
    pub fn tensor_product(&self, g: &ProductGroup, w1: &Weight, w2: &Weight) -> Result<FormalChar> {
        self.tensor_chars(
            &FormalChar::irreducible(g.clone(), w1.clone()),
            &FormalChar::irreducible(g.clone(), w2.clone()),
        )
    }

    /// Tensor product of two characters of the same group.
    pub fn tensor_chars(&self, a: &FormalChar, b: &FormalChar) -> Result<FormalChar> {
        if a.group() != b.group() {
            return Err(Error::Incompatible(format!("groups {} and {} differ", a.group(), b.group())));
        }
        let g = a.group();
        let mut out = FormalChar::new(g.clone());
        for (la, ma) in a.iter() {
            let pa = g.split(la);
            for (lb, mb) in b.iter() {
                let pb = g.split(lb);
                let mut acc: Vec<(Weight, u64)> = vec![(Weight::default(), ma * mb)];
                for (i, gf) in g.factors().iter().enumerate() {
                    let pieces: Vec<(Weight, u64)> = if pa[i].is_zero() {
                        vec![(pb[i].clone(), 1)]
                    } else if pb[i].is_zero() {
                        vec![(pa[i].clone(), 1)]
                    } else {
                        self.tensor_simple(*gf, &pa[i], &pb[i])?.iter().map(|(w, m)| (w.clone(), m)).collect()
                    };
                    let mut next = Vec::with_capacity(acc.len() * pieces.len());
                    for (w, m) in &acc {
                        for (v, n) in &pieces {
                            next.push((Weight::concat(&[w.clone(), v.clone()]), m * n));
                        }
                    }
                    acc = next;
                }
                for (w, m) in acc {
                    out.add(w, m);
                }
            }
        }
        let expected = a.dimension().checked_mul(b.dimension()).ok_or_else(overflow)?;
        self.check_dimension(&out, expected, || format!("tensor of characters over {g}"))?;
        Ok(out)
    }

    pub fn sym_power(&self, rep: &FormalChar, n: u32) -> Result<FormalChar> {
        self.power(rep, n, PowerKind::Sym)
    }

    pub fn ext_power(&self, rep: &FormalChar, n: u32) -> Result<FormalChar> {
        self.power(rep, n, PowerKind::Ext)
    }

    /// S^n or ∧^n of a character.
    pub fn power(&self, rep: &FormalChar, n: u32, kind: PowerKind) -> Result<FormalChar> {
        Ok((*self.power_arc(rep, n, kind)?).clone())
    }

    pub(crate) fn power_arc(&self, rep: &FormalChar, n: u32, kind: PowerKind) -> Result<Arc<FormalChar>> {
        let g = rep.group().clone();
        for (w, _) in rep.iter() {
            g.check_weight(w)?;
        }
        if n == 0 {
            return Ok(Arc::new(FormalChar::trivial(g)));
        }
        let dim = rep.dimension();
        if kind == PowerKind::Ext && n as u128 > dim {
            return Ok(Arc::new(FormalChar::new(g)));
        }
        let key = SeriesKey { group: g.clone(), rep: rep.iter().map(|(w, m)| (w.clone(), m)).collect(), kind };
        if let Some(c) = read(&self.powers, &(key.clone(), n)) {
            return Ok(c);
        }
        let expected = match kind {
            PowerKind::Sym => multichoose(dim, n as u128)?,
            PowerKind::Ext => binomial(dim, n as u128)?,
        };
        let cache_key = CacheKey::new(&g, kind.tag(), key.rep.clone(), n);
        if let Some(c) = self.disk.as_ref().and_then(|d| d.get(&cache_key)) {
            if c.group() == &g && self.check_dimension(&c, expected, || "cached power".into()).is_ok() {
                return Ok(write(&self.powers, (key, n), Arc::new(c)));
            }
        }
        let series = self.series(&key, rep, n)?;
        let out = self.decompose_dom(&g, (*series[n as usize]).clone())?;
        self.check_dimension(&out, expected, || format!("{}^{n} of {rep} over {g}", kind.tag()))?;
        if let Some(d) = &self.disk {
            d.put(&cache_key, &out);
        }
        Ok(write(&self.powers, (key, n), Arc::new(out)))
    }

    /// h_0..h_n (or e_0..e_n) as dominant characters via Newton's identities.
    fn series(&self, key: &SeriesKey, rep: &FormalChar, n: u32) -> Result<Arc<Vec<Arc<DomChar>>>> {
        let existing = read(&self.series, key);
        if let Some(s) = &existing {
            if s.len() > n as usize {
                return Ok(s.clone());
            }
        }
        let g = rep.group();
        let pd = ProductData::new(g);
        let full = self.full_of_char(rep)?;
        let mut seq: Vec<Arc<DomChar>> = match existing {
            Some(s) => s.as_ref().clone(),
            None => {
                let mut one = DomChar::default();
                one.insert(g.zero(), 1);
                vec![Arc::new(one)]
            }
        };
        let adams: Vec<Vec<(Weight, i64)>> =
            (1..=n as i32).map(|k| full.iter().map(|(w, m)| (w.scale(k), *m)).collect()).collect();
        for j in seq.len()..=n as usize {
            let mut acc = DomChar::default();
            for k in 1..=j {
                let sign = match key.kind {
                    PowerKind::Sym => 1,
                    PowerKind::Ext if k % 2 == 1 => 1,
                    PowerKind::Ext => -1,
                };
                let prod = Self::multiply(&pd, &adams[k - 1], &seq[j - k])?;
                for (w, c) in prod {
                    let e = acc.entry(w).or_insert(0);
                    *e = e.checked_add(sign * c).ok_or_else(overflow)?;
                }
            }
            let mut next = DomChar::default();
            for (w, c) in acc {
                if c == 0 {
                    continue;
                }
                if c % j as i64 != 0 {
                    return Err(Error::Divisibility(format!(
                        "Newton step {j} of {} at {w}: {c} not divisible by {j}",
                        key.kind.tag()
                    )));
                }
                next.insert(w, c / j as i64);
            }
            seq.push(Arc::new(next));
        }
        let seq = Arc::new(seq);
        let mut lock = self.series.write().expect("engine memo poisoned");
        let slot = lock.entry(key.clone()).or_insert_with(|| seq.clone());
        if slot.len() < seq.len() {
            *slot = seq.clone();
        }
        Ok(seq)
    }

    /// Decomposition of the SL(m)-irreducible V(λ) under SO(m) or Sp(m).
    pub fn restrict_classical(&self, m: usize, target: RestrictTarget, lambda: &Partition) -> Result<FormalChar> {
        restrict::restrict_classical(self, m, target, lambda)
    }
}

/// Full weight system of V(w) using the shared engine.
pub fn weight_multiplicities(g: GroupType, w: &Weight) -> Result<WeightMultiset> {
    Engine::global().weight_multiplicities(g, w)
}

/// Decomposition of a weight system using the shared engine.
pub fn decompose(ws: &WeightMultiset) -> Result<FormalChar> {
    Engine::global().decompose(ws)
}

/// V(w1) ⊗ V(w2) using the shared engine.
pub fn tensor(g: GroupType, w1: &Weight, w2: &Weight) -> Result<FormalChar> {
    Engine::global().tensor(g, w1, w2)
}

/// S^n(rep) using the shared engine.
pub fn sym_power(rep: &FormalChar, n: u32) -> Result<FormalChar> {
    Engine::global().sym_power(rep, n)
}

/// ∧^n(rep) using the shared engine.
pub fn ext_power(rep: &FormalChar, n: u32) -> Result<FormalChar> {
    Engine::global().ext_power(rep, n)
}

/// Restriction from SL(m) using the shared engine.
pub fn restrict_classical(m: usize, target: RestrictTarget, lambda: &Partition) -> Result<FormalChar> {
    Engine::global().restrict_classical(m, target, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i32]) -> Weight {
        Weight::from_slice(c)
    }

    fn g(s: &str) -> GroupType {
        s.parse().unwrap()
    }

    fn simple(s: &str) -> ProductGroup {
        ProductGroup::simple(g(s))
    }

    fn chr(group: &ProductGroup, terms: &[(&[i32], u64)]) -> FormalChar {
        let mut c = FormalChar::new(group.clone());
        for (l, m) in terms {
            c.add(w(l), *m);
        }
        c
    }

    #[test]
    fn sl2_strings() {
        for k in 0..6 {
            let ws = weight_multiplicities(g("A1"), &w(&[k])).unwrap();
            let expect: Vec<i32> = (0..=k).map(|j| k - 2 * j).collect();
            let mut got: Vec<i32> = ws
                .iter()
                .map(|(v, m)| {
                    assert_eq!(m, 1);
                    v.0[0]
                })
                .collect();
            got.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn g2_adjoint_weights() {
        let ws = weight_multiplicities(GroupType::g2(), &w(&[0, 1])).unwrap();
        assert_eq!(ws.total(), 14);
        assert_eq!(ws.get(&w(&[0, 0])), 2);
        assert!(ws.is_weyl_symmetric());
    }

    #[test]
    fn spin_seven_weights() {
        let ws = weight_multiplicities(g("B3"), &w(&[0, 0, 1])).unwrap();
        assert_eq!(ws.entries().len(), 8);
        assert!(ws.iter().all(|(_, m)| m == 1));
    }

    #[test]
    fn decompose_examples() {
        let a2 = simple("A2");
        let adj = Engine::global().character(&FormalChar::irreducible(a2.clone(), w(&[1, 1]))).unwrap();
        assert_eq!(decompose(&adj).unwrap(), chr(&a2, &[(&[1, 1], 1)]));

        let a1 = simple("A1");
        let ws = WeightMultiset::from_entries(a1.clone(), [(w(&[2]), 1), (w(&[0]), 2), (w(&[-2]), 1)]).unwrap();
        assert_eq!(decompose(&ws).unwrap(), chr(&a1, &[(&[2], 1), (&[0], 1)]));

        let bad = WeightMultiset::from_entries(a1, [(w(&[2]), 1), (w(&[-2]), 1)]).unwrap();
        assert!(matches!(decompose(&bad), Err(Error::NotTrueCharacter(_))));
    }

    #[test]
    fn c3_standard_squared() {
        let c3 = simple("C3");
        let out = tensor(g("C3"), &w(&[1, 0, 0]), &w(&[1, 0, 0])).unwrap();
        assert_eq!(out, chr(&c3, &[(&[2, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 0], 1)]));
    }

    #[test]
    fn c3_tensor_example() {
        let c3 = simple("C3");
        let out = tensor(g("C3"), &w(&[2, 0, 0]), &w(&[0, 1, 0])).unwrap();
        let expect = chr(&c3, &[(&[2, 1, 0], 1), (&[1, 0, 1], 1), (&[0, 1, 0], 1), (&[2, 0, 0], 1)]);
        assert_eq!(out, expect);
    }

    #[test]
    fn tensor_units_and_clebsch_gordan() {
        let a1 = simple("A1");
        assert_eq!(tensor(g("A1"), &w(&[1]), &w(&[1])).unwrap(), chr(&a1, &[(&[2], 1), (&[0], 1)]));
        let b3 = simple("B3");
        assert_eq!(tensor(g("B3"), &w(&[1, 0, 1]), &w(&[0, 0, 0])).unwrap(), chr(&b3, &[(&[1, 0, 1], 1)]));
    }

    #[test]
    fn adams_examples() {
        let a1 = simple("A1");
        let std = WeightMultiset::from_entries(a1.clone(), [(w(&[1]), 1), (w(&[-1]), 1)]).unwrap();
        assert_eq!(adams(&std, 1), std);
        let two = WeightMultiset::from_entries(a1, [(w(&[2]), 1), (w(&[-2]), 1)]).unwrap();
        assert_eq!(adams(&std, 2), two);
        let a2 = weight_multiplicities(g("A2"), &w(&[1, 0])).unwrap();
        let tripled = adams(&a2, 3);
        assert_eq!(tripled.entries().len(), 3);
        assert!(tripled.iter().all(|(v, m)| m == 1 && v.0.iter().all(|x| x % 3 == 0)));
    }

    #[test]
    fn powers_small() {
        let a1 = simple("A1");
        let s3 = chr(&a1, &[(&[3], 1)]);
        assert_eq!(ext_power(&s3, 2).unwrap(), chr(&a1, &[(&[4], 1), (&[0], 1)]));
        assert_eq!(sym_power(&s3, 0).unwrap(), FormalChar::trivial(a1.clone()));
        assert!(ext_power(&s3, 5).unwrap().is_empty());
        assert_eq!(ext_power(&s3, 4).unwrap(), FormalChar::trivial(a1));

        let a1a1: ProductGroup = "A1xA1".parse().unwrap();
        let std = chr(&a1a1, &[(&[1, 1], 1)]);
        assert_eq!(ext_power(&std, 2).unwrap(), chr(&a1a1, &[(&[2, 0], 1), (&[0, 2], 1)]));
        assert_eq!(sym_power(&std, 2).unwrap(), chr(&a1a1, &[(&[2, 2], 1), (&[0, 0], 1)]));
    }

    #[test]
    fn sym_power_generating_function() {
        let b2 = simple("B2");
        let spin = chr(&b2, &[(&[0, 1], 1)]);
        for n in 0..6u32 {
            let d = sym_power(&spin, n).unwrap().dimension();
            assert_eq!(d, multichoose(4, n as u128).unwrap());
        }
    }

    #[test]
    fn product_char_bilinear() {
        let a1 = simple("A1");
        let a = chr(&a1, &[(&[1], 2)]);
        let b = chr(&a1, &[(&[2], 1), (&[0], 1)]);
        let p = product_char(&[a, b]).unwrap();
        let a1a1: ProductGroup = "A1xA1".parse().unwrap();
        assert_eq!(p, chr(&a1a1, &[(&[1, 2], 2), (&[1, 0], 2)]));
    }

    #[test]
    fn formal_char_json_round_trip() {
        let a1a1: ProductGroup = "A1xA1".parse().unwrap();
        let c = chr(&a1a1, &[(&[1, 2], 2), (&[1, 0], 1)]);
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.contains("\"label\":[[1],[2]]"));
        let back: FormalChar = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
