//! Representation diagrams and the graded pieces of S(V₀) ⊗ ∧(V₁).
//!
//! A diagram lists simple factors and irreducible submodules; each submodule
//! carries one dominant weight per factor, zero where the factor acts trivially.
//! The component of multi-degree `idx` is the tensor product over submodules of
//! `S^k` (even) or `∧^k` (odd), and a diagram is multiplicity-free up to a bound
//! when every such component with total degree at most the bound is.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charengine::{binomial, multichoose, Engine, FormalChar, PowerKind};
use crate::error::{Error, Result};
use crate::formulas::fast_path;
use crate::rootdata::{GroupType, ProductGroup, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn power_kind(self) -> PowerKind {
        match self {
            Parity::Even => PowerKind::Sym,
            Parity::Odd => PowerKind::Ext,
        }
    }

    pub fn flipped(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factor {
    pub name: String,
    pub group: GroupType,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Submodule {
    pub name: String,
    pub parity: Parity,
    /// One dominant weight per factor of the diagram.
    pub weights: Vec<Weight>,
    #[serde(default)]
    pub dual: bool,
}

impl Submodule {
    pub fn new(name: &str, parity: Parity, weights: Vec<Weight>) -> Self {
        Submodule { name: name.to_string(), parity, weights, dual: false }
    }

    pub fn even(name: &str, weights: Vec<Weight>) -> Self {
        Self::new(name, Parity::Even, weights)
    }

    pub fn odd(name: &str, weights: Vec<Weight>) -> Self {
        Self::new(name, Parity::Odd, weights)
    }

    pub fn dualized(mut self) -> Self {
        self.dual = !self.dual;
        self
    }

    /// Indices of the factors acting nontrivially.
    pub fn support(&self) -> Vec<usize> {
        (0..self.weights.len()).filter(|&i| !self.weights[i].is_zero()).collect()
    }
}

/// A diagram up to renaming.
pub type Shape = (Vec<GroupType>, Vec<(Parity, Vec<Weight>, bool)>);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DiagramRepr", into = "DiagramRepr")]
pub struct RepDiagram {
    name: String,
    factors: Vec<Factor>,
    submodules: Vec<Submodule>,
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    name: String,
    factors: Vec<Factor>,
    submodules: Vec<Submodule>,
}

impl TryFrom<DiagramRepr> for RepDiagram {
    type Error = Error;
    fn try_from(r: DiagramRepr) -> Result<Self> {
        RepDiagram::new(&r.name, r.factors, r.submodules)
    }
}

impl From<RepDiagram> for DiagramRepr {
    fn from(d: RepDiagram) -> Self {
        DiagramRepr { name: d.name, factors: d.factors, submodules: d.submodules }
    }
}

impl RepDiagram {
    pub fn new(name: &str, factors: Vec<Factor>, submodules: Vec<Submodule>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidInput("at least one factor required".into()));
        }
        if submodules.is_empty() {
            return Err(Error::InvalidInput("at least one submodule required".into()));
        }
        let mut names = BTreeSet::new();
        for f in &factors {
            if !names.insert(f.name.as_str()) {
                return Err(Error::InvalidInput(format!("duplicate name {}", f.name)));
            }
        }
        for s in &submodules {
            if !names.insert(s.name.as_str()) {
                return Err(Error::InvalidInput(format!("duplicate name {}", s.name)));
            }
            if s.weights.len() != factors.len() {
                return Err(Error::InvalidInput(format!(
                    "submodule {} has {} weights for {} factors",
                    s.name,
                    s.weights.len(),
                    factors.len()
                )));
            }
            for (w, f) in s.weights.iter().zip(&factors) {
                crate::rootdata::check_weight(f.group, w)?;
            }
            if s.weights.iter().all(|w| w.is_zero()) {
                return Err(Error::InvalidInput(format!("submodule {} is trivial on every factor", s.name)));
            }
        }
        Ok(RepDiagram { name: name.to_string(), factors, submodules })
    }

    /// Factors named `G1, G2, …` in order.
    pub fn with_groups(name: &str, groups: &[GroupType], submodules: Vec<Submodule>) -> Result<Self> {
        let factors =
            groups.iter().enumerate().map(|(i, &g)| Factor { name: format!("G{}", i + 1), group: g }).collect();
        Self::new(name, factors, submodules)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn groups(&self) -> Vec<GroupType> {
        self.factors.iter().map(|f| f.group).collect()
    }

    pub fn group(&self) -> ProductGroup {
        ProductGroup::new(self.groups()).expect("diagrams have at least one factor")
    }

    pub fn submodules(&self) -> &[Submodule] {
        &self.submodules
    }

    /// Dimension of one submodule.
    pub fn submodule_dimension(&self, i: usize) -> u128 {
        let s = &self.submodules[i];
        s.weights.iter().zip(&self.factors).map(|(w, f)| crate::rootdata::dimension(f.group, w)).product()
    }

    /// The weights a submodule actually contributes, with duals applied.
    pub fn effective_weights(&self, i: usize) -> Vec<Weight> {
        let s = &self.submodules[i];
        s.weights
            .iter()
            .zip(&self.factors)
            .map(|(w, f)| if s.dual { f.group.root_data().dual(w) } else { w.clone() })
            .collect()
    }

    /// Whether the bipartite factor/submodule graph is connected.
    pub fn is_connected(&self) -> bool {
        let used: Vec<usize> =
            (0..self.factors.len()).filter(|&f| self.submodules.iter().any(|s| !s.weights[f].is_zero())).collect();
        if used.len() != self.factors.len() {
            return false;
        }
        self.components().len() == 1
    }

    /// Connected components as (factor indices, submodule indices).
    fn components(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let nf = self.factors.len();
        let mut parent: Vec<usize> = (0..nf).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for s in &self.submodules {
            let sup = s.support();
            for pair in sup.windows(2) {
                let (a, b) = (find(&mut parent, pair[0]), find(&mut parent, pair[1]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut out: Vec<(usize, Vec<usize>, Vec<usize>)> = Vec::new();
        for (si, s) in self.submodules.iter().enumerate() {
            let root = find(&mut parent, s.support()[0]);
            match out.iter_mut().find(|c| c.0 == root) {
                Some(c) => c.2.push(si),
                None => out.push((root, Vec::new(), vec![si])),
            }
        }
        for c in out.iter_mut() {
            c.1 = (0..nf).filter(|&f| find(&mut parent, f) == c.0).collect();
            c.1.retain(|&f| c.2.iter().any(|&si| !self.submodules[si].weights[f].is_zero()));
        }
        out.sort_by(|a, b| a.1.cmp(&b.1));
        out.into_iter().map(|(_, f, s)| (f, s)).collect()
    }

    /// The diagram on a subset of factors and submodules, if anything survives.
    fn restrict(&self, factors: &[usize], submodules: &[usize]) -> Option<RepDiagram> {
        let subs: Vec<Submodule> = submodules
            .iter()
            .map(|&si| {
                let s = &self.submodules[si];
                Submodule {
                    name: s.name.clone(),
                    parity: s.parity,
                    weights: factors.iter().map(|&f| s.weights[f].clone()).collect(),
                    dual: s.dual,
                }
            })
            .filter(|s| s.weights.iter().any(|w| !w.is_zero()))
            .collect();
        if factors.is_empty() || subs.is_empty() {
            return None;
        }
        let fs = factors.iter().map(|&f| self.factors[f].clone()).collect();
        RepDiagram::new(&self.name, fs, subs).ok()
    }

    /// Splits into connected diagrams, dropping factors that act on nothing.
    pub fn connected_components(&self) -> Vec<RepDiagram> {
        self.components().iter().filter_map(|(f, s)| self.restrict(f, s)).collect()
    }

    /// Everything except names: factor groups and (parity, weights, dual) per submodule.
    pub fn shape(&self) -> Shape {
        (self.groups(), self.submodules.iter().map(|s| (s.parity, s.weights.clone(), s.dual)).collect())
    }
}

/// One degree per submodule, in diagram order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zeros(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `(even degrees | odd degrees)`, each side in diagram order.
    pub fn display_for(&self, d: &RepDiagram) -> String {
        let side = |p: Parity| {
            d.submodules
                .iter()
                .zip(&self.0)
                .filter(|(s, _)| s.parity == p)
                .map(|(_, k)| k.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!("({}|{})", side(Parity::Even), side(Parity::Odd))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MfStatus {
    MfUpToBound,
    NotMf,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub multiindex: MultiIndex,
    /// One dominant weight per factor.
    pub label: Vec<Weight>,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MFVerdict {
    pub status: MfStatus,
    pub bound: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl MFVerdict {
    pub fn is_mf(&self) -> bool {
        self.status == MfStatus::MfUpToBound
    }
}

fn check_index(d: &RepDiagram, idx: &MultiIndex) -> Result<()> {
    if idx.0.len() != d.submodules.len() {
        return Err(Error::InvalidInput(format!(
            "multi-index {idx} has {} entries for {} submodules",
            idx.0.len(),
            d.submodules.len()
        )));
    }
    Ok(())
}

/// S^k or ∧^k of one submodule, as a character of the whole product group.
pub fn submodule_power(engine: &Engine, d: &RepDiagram, i: usize, k: u32) -> Result<FormalChar> {
    let full = d.group();
    if k == 0 {
        return Ok(FormalChar::trivial(full));
    }
    let s = &d.submodules[i];
    let kind = s.parity.power_kind();
    let dim = d.submodule_dimension(i);
    if kind == PowerKind::Ext && k as u128 > dim {
        return Ok(FormalChar::new(full));
    }
    let support = s.support();
    let sub_group = ProductGroup::new(support.iter().map(|&f| d.factors[f].group).collect())?;
    let weights = d.effective_weights(i);
    let rep = FormalChar::irreducible(
        sub_group,
        Weight::concat(&support.iter().map(|&f| weights[f].clone()).collect::<Vec<_>>()),
    );
    let power = match fast_path(&rep, kind, k) {
        Some(r) => r?,
        None => engine.power(&rep, k, kind)?,
    };
    let ranks: Vec<usize> = d.factors.iter().map(|f| f.group.rank()).collect();
    let mut out = FormalChar::new(full);
    for (w, m) in power.iter() {
        let blocks = power.factor_labels(w);
        let mut parts: Vec<Weight> = ranks.iter().map(|&r| Weight::zero(r)).collect();
        for (b, &f) in blocks.into_iter().zip(&support) {
            parts[f] = b;
        }
        out.add(Weight::concat(&parts), m);
    }
    let expected = match kind {
        PowerKind::Sym => multichoose(dim, k as u128)?,
        PowerKind::Ext => binomial(dim, k as u128)?,
    };
    engine.check_dimension(&out, expected, || format!("{}^{k} of submodule {}", kind.tag(), s.name))?;
    Ok(out)
}

fn expected_dimension(d: &RepDiagram, idx: &MultiIndex) -> Result<u128> {
    let mut acc: u128 = 1;
    for (i, (s, &k)) in d.submodules.iter().zip(&idx.0).enumerate() {
        let dim = d.submodule_dimension(i);
        let f = match s.parity {
            Parity::Even => multichoose(dim, k as u128)?,
            Parity::Odd => binomial(dim, k as u128)?,
        };
        acc = acc.checked_mul(f).ok_or(Error::Overflow("component dimension"))?;
    }
    Ok(acc)
}

/// The homogeneous component of multi-degree `idx`.
pub fn graded_component(engine: &Engine, d: &RepDiagram, idx: &MultiIndex) -> Result<FormalChar> {
    check_index(d, idx)?;
    let mut acc = FormalChar::trivial(d.group());
    for (i, &k) in idx.0.iter().enumerate() {
        if k == 0 {
            continue;
        }
        let p = submodule_power(engine, d, i, k)?;
        acc = engine.tensor_chars(&acc, &p)?;
    }
    let expected = expected_dimension(d, idx)?;
    engine.check_dimension(&acc, expected, || format!("component {idx} of {}", d.name))?;
    Ok(acc)
}

/// Highest degree worth checking for each submodule.
fn degree_caps(d: &RepDiagram, bound: u32) -> Vec<u32> {
    (0..d.submodules.len())
        .map(|i| match d.submodules[i].parity {
            Parity::Even => bound,
            Parity::Odd => d.submodule_dimension(i).min(bound as u128) as u32,
        })
        .collect()
}

/// Every multi-index with total at most `bound`, odd degrees capped by dimension, in lexicographic order.
pub fn multi_indices(d: &RepDiagram, bound: u32) -> Vec<MultiIndex> {
    let caps = degree_caps(d, bound);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(caps.len());
    fn rec(caps: &[u32], left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if cur.len() == caps.len() {
            out.push(MultiIndex(cur.clone()));
            return;
        }
        for k in 0..=caps[cur.len()].min(left) {
            cur.push(k);
            rec(caps, left - k, cur, out);
            cur.pop();
        }
    }
    rec(&caps, bound, &mut cur, &mut out);
    out
}

struct Search<'a> {
    engine: &'a Engine,
    diagram: &'a RepDiagram,
    caps: Vec<u32>,
    powers: Vec<Vec<FormalChar>>,
}

impl Search<'_> {
    /// Depth-first in lexicographic order; returns the first witness below `prefix`.
    fn first_witness(&self, idx: &mut Vec<u32>, left: u32, prefix: &FormalChar) -> Result<Option<Witness>> {
        let depth = idx.len();
        if depth == self.caps.len() {
            return Ok(prefix.repeated().into_iter().next().map(|(w, m)| Witness {
                multiindex: MultiIndex(idx.clone()),
                label: prefix.factor_labels(&w),
                multiplicity: m,
            }));
        }
        for k in 0..=self.caps[depth].min(left) {
            let next;
            let here = if k == 0 {
                prefix
            } else {
                next = self.engine.tensor_chars(prefix, &self.powers[depth][k as usize])?;
                &next
            };
            idx.push(k);
            let found = self.first_witness(idx, left - k, here)?;
            idx.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

/// Checks every component of total degree at most `bound`.
///
/// The witness, if any, is the lexicographically first multi-index with a
/// repeated constituent, together with its least repeated label.
pub fn is_super_mf(engine: &Engine, d: &RepDiagram, bound: u32) -> Result<MFVerdict> {
    if bound == 0 {
        return Err(Error::InvalidInput("the degree bound must be at least 1".into()));
    }
    let caps = degree_caps(d, bound);
    let powers = caps
        .iter()
        .enumerate()
        .map(|(i, &c)| (0..=c).map(|k| submodule_power(engine, d, i, k)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let search = Search { engine, diagram: d, caps, powers };
    let results: Vec<Result<Option<Witness>>> = (0..=search.caps[0])
        .into_par_iter()
        .map(|k| {
            let mut idx = vec![k];
            search.first_witness(&mut idx, bound - k, &search.powers[0][k as usize])
        })
        .collect();
    for r in results {
        if let Some(w) = r? {
            return Ok(MFVerdict { status: MfStatus::NotMf, bound, witness: Some(w) });
        }
    }
    log::debug!("{} is multiplicity-free up to degree {bound}", search.diagram.name);
    Ok(MFVerdict { status: MfStatus::MfUpToBound, bound, witness: None })
}

/// Toggles the dual mark of one submodule.
pub fn dual_flip(d: &RepDiagram, index: usize) -> Result<RepDiagram> {
    if index >= d.submodules.len() {
        return Err(Error::IndexOutOfRange(format!("submodule {index} of a diagram with {}", d.submodules.len())));
    }
    let mut out = d.clone();
    out.submodules[index].dual = !out.submodules[index].dual;
    Ok(out)
}

/// All connected diagrams obtained by deleting factors and submodules.
pub fn subdiagrams(d: &RepDiagram) -> Vec<RepDiagram> {
    let nf = d.factors.len();
    let ns = d.submodules.len();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for smask in 1u32..(1 << ns) {
        let subs: Vec<usize> = (0..ns).filter(|i| smask & (1 << i) != 0).collect();
        for fmask in 1u32..(1 << nf) {
            let fs: Vec<usize> = (0..nf).filter(|i| fmask & (1 << i) != 0).collect();
            let Some(r) = d.restrict(&fs, &subs) else { continue };
            for c in r.connected_components() {
                if seen.insert(c.shape()) {
                    out.push(c);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wt(x: &[i32]) -> Weight {
        Weight::from_slice(x)
    }

    fn g(s: &str) -> GroupType {
        s.parse().unwrap()
    }

    #[test]
    fn sp6_double_standard_component() {
        let d = RepDiagram::with_groups(
            "sp6",
            &[g("C3")],
            vec![Submodule::even("U", vec![wt(&[1, 0, 0])]), Submodule::odd("W", vec![wt(&[1, 0, 0])])],
        )
        .unwrap();
        let e = Engine::new();
        let c = graded_component(&e, &d, &MultiIndex(vec![2, 2])).unwrap();
        let mut want = FormalChar::new(d.group());
        want.add(wt(&[2, 0, 0]), 2);
        want.add(wt(&[1, 0, 1]), 1);
        want.add(wt(&[0, 1, 0]), 1);
        want.add(wt(&[2, 1, 0]), 1);
        assert_eq!(c, want);
        assert_eq!(graded_component(&e, &d, &MultiIndex(vec![0, 0])).unwrap(), FormalChar::trivial(d.group()));
    }

    #[test]
    fn g2_double_has_witness_at_one_two() {
        let d = RepDiagram::with_groups(
            "g2",
            &[GroupType::g2()],
            vec![Submodule::even("U", vec![wt(&[1, 0])]), Submodule::odd("W", vec![wt(&[1, 0])])],
        )
        .unwrap();
        let v = is_super_mf(&Engine::new(), &d, 3).unwrap();
        assert_eq!(v.status, MfStatus::NotMf);
        let w = v.witness.unwrap();
        assert_eq!(w.multiindex, MultiIndex(vec![1, 2]));
        assert_eq!(w.label, vec![wt(&[1, 0])]);
        assert_eq!(w.multiplicity, 2);
        assert_eq!(w.multiindex.display_for(&d), "(1|2)");
    }

    #[test]
    fn sl2_pair_is_mf() {
        let d = RepDiagram::with_groups(
            "c1",
            &[g("A1"), g("A1")],
            vec![Submodule::even("U", vec![wt(&[1]), wt(&[1])]), Submodule::odd("W", vec![wt(&[0]), wt(&[1])])],
        )
        .unwrap();
        assert!(is_super_mf(&Engine::new(), &d, 4).unwrap().is_mf());
    }

    #[test]
    fn multi_indices_are_lexicographic() {
        let d = RepDiagram::with_groups(
            "x",
            &[g("A1")],
            vec![Submodule::even("U", vec![wt(&[1])]), Submodule::odd("W", vec![wt(&[1])])],
        )
        .unwrap();
        let idx = multi_indices(&d, 3);
        let mut sorted = idx.clone();
        sorted.sort();
        assert_eq!(idx, sorted);
        assert!(idx.iter().all(|i| i.0[1] <= 2 && i.total() <= 3));
        assert_eq!(idx.len(), 4 + 3 + 2);
    }

    #[test]
    fn subdiagram_enumeration() {
        let d = RepDiagram::with_groups(
            "example",
            &[g("A3"), g("A1"), g("B3")],
            vec![
                Submodule::even("U", vec![wt(&[1, 0, 0]), wt(&[1]), wt(&[0, 0, 0])]),
                Submodule::odd("W", vec![wt(&[0, 0, 0]), wt(&[1]), wt(&[1, 0, 0])]),
            ],
        )
        .unwrap();
        assert!(d.is_connected());
        let subs = subdiagrams(&d);
        let want = RepDiagram::with_groups(
            "example",
            &[g("A1"), g("B3")],
            vec![
                Submodule::even("U", vec![wt(&[1]), wt(&[0, 0, 0])]),
                Submodule::odd("W", vec![wt(&[1]), wt(&[1, 0, 0])]),
            ],
        )
        .unwrap();
        assert!(subs.iter().any(|s| s.shape() == want.shape()));
        assert!(subs.iter().all(|s| s.is_connected()));
        assert!(subs.iter().any(|s| s.shape() == d.shape()));

        let single = RepDiagram::with_groups("s", &[g("A2")], vec![Submodule::odd("W", vec![wt(&[1, 0])])]).unwrap();
        assert_eq!(subdiagrams(&single), vec![single.clone()]);

        let apart = RepDiagram::with_groups(
            "apart",
            &[g("A1"), g("A2")],
            vec![Submodule::even("U", vec![wt(&[1]), wt(&[0, 0])]), Submodule::odd("W", vec![wt(&[0]), wt(&[1, 0])])],
        )
        .unwrap();
        assert!(!apart.is_connected());
        assert_eq!(subdiagrams(&apart).len(), 2);
        assert_eq!(apart.connected_components().len(), 2);
    }

    #[test]
    fn dual_flip_round_trips() {
        let d = RepDiagram::with_groups(
            "sl3",
            &[g("A2")],
            vec![Submodule::even("U", vec![wt(&[1, 0])]), Submodule::odd("W", vec![wt(&[1, 0])])],
        )
        .unwrap();
        let f = dual_flip(&d, 1).unwrap();
        assert_ne!(f, d);
        assert_eq!(f.effective_weights(1), vec![wt(&[0, 1])]);
        assert_eq!(dual_flip(&f, 1).unwrap(), d);
        assert!(dual_flip(&d, 2).is_err());
        let e = Engine::new();
        assert_eq!(is_super_mf(&e, &d, 4).unwrap().status, is_super_mf(&e, &f, 4).unwrap().status);
    }

    #[test]
    fn diagram_json_round_trip() {
        let d = RepDiagram::with_groups(
            "sl3",
            &[g("A2")],
            vec![Submodule::even("U", vec![wt(&[1, 0])]), Submodule::odd("W", vec![wt(&[1, 0])]).dualized()],
        )
        .unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(serde_json::from_str::<RepDiagram>(&s).unwrap(), d);
        let bad = s.replace("[1,0]", "[0,0]");
        assert!(serde_json::from_str::<RepDiagram>(&bad).is_err());
    }
}
