use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootdata::{ProductData, ProductGroup, Weight};

/// A genuine character as a sum of irreducibles with positive multiplicities.
///
/// Labels are concatenated highest weights, one block per factor of the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalChar {
    group: ProductGroup,
    terms: BTreeMap<Weight, u64>,
}

impl FormalChar {
    pub fn new(group: ProductGroup) -> Self {
        FormalChar { group, terms: BTreeMap::new() }
    }

    pub fn irreducible(group: ProductGroup, w: Weight) -> Self {
        let mut c = Self::new(group);
        c.add(w, 1);
        c
    }

    pub fn trivial(group: ProductGroup) -> Self {
        let z = group.zero();
        Self::irreducible(group, z)
    }

    pub fn group(&self) -> &ProductGroup {
        &self.group
    }

    pub fn terms(&self) -> &BTreeMap<Weight, u64> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    pub fn get(&self, w: &Weight) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn add(&mut self, w: Weight, mult: u64) {
        if mult > 0 {
            *self.terms.entry(w).or_insert(0) += mult;
        }
    }

    pub fn add_char(&mut self, other: &FormalChar, times: u64) {
        for (w, m) in other.iter() {
            self.add(w.clone(), m * times);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct irreducible constituents.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Σ multiplicity · dimension.
    pub fn dimension(&self) -> u128 {
        let pd = ProductData::new(&self.group);
        self.terms.iter().map(|(w, &m)| m as u128 * pd.dimension(w)).sum()
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.terms.values().copied().max().unwrap_or(0)
    }

    /// Constituents occurring at least twice, in increasing label order.
    pub fn repeated(&self) -> Vec<(Weight, u64)> {
        self.terms.iter().filter(|(_, &m)| m >= 2).map(|(w, &m)| (w.clone(), m)).collect()
    }

    /// Splits a label into its per-factor blocks.
    pub fn factor_labels(&self, w: &Weight) -> Vec<Weight> {
        self.group.split(w)
    }

    /// One line per constituent: `m x [a] ⊗ [b]`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0\n".into();
        }
        let mut out = String::new();
        for (w, m) in self.iter() {
            let blocks: Vec<String> = self.group.split(w).iter().map(|b| b.to_string()).collect();
            out.push_str(&format!("{m} x {}\n", blocks.join(" ⊗ ")));
        }
        out
    }
}

impl fmt::Display for FormalChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m > 1 {
                write!(f, "{m}·")?;
            }
            let blocks: Vec<String> = self.group.split(w).iter().map(|b| b.to_string()).collect();
            write!(f, "{}", blocks.join("⊗"))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    label: Vec<Weight>,
    multiplicity: u64,
}

#[derive(Serialize, Deserialize)]
struct FormalCharRepr {
    group: ProductGroup,
    terms: Vec<TermRepr>,
}

impl Serialize for FormalChar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FormalCharRepr {
            group: self.group.clone(),
            terms: self.iter().map(|(w, m)| TermRepr { label: self.group.split(w), multiplicity: m }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FormalChar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = FormalCharRepr::deserialize(d)?;
        let mut c = FormalChar::new(r.group);
        for t in r.terms {
            let w = Weight::concat(&t.label);
            c.group.check_weight(&w).map_err(D::Error::custom)?;
            if t.multiplicity == 0 {
                return Err(D::Error::custom("zero multiplicity in character"));
            }
            c.add(w, t.multiplicity);
        }
        Ok(c)
    }
}

/// Outer tensor product: labels concatenate, multiplicities multiply.
pub fn product_char(factor_chars: &[FormalChar]) -> Result<FormalChar> {
    if factor_chars.is_empty() {
        return Err(Error::InvalidInput("product_char needs at least one factor".into()));
    }
    let factors: Vec<_> = factor_chars.iter().flat_map(|c| c.group.factors().to_vec()).collect();
    let group = ProductGroup::new(factors)?;
    let mut acc: Vec<(Weight, u64)> = vec![(Weight::default(), 1)];
    for c in factor_chars {
        let mut next = Vec::with_capacity(acc.len() * c.len());
        for (w, m) in &acc {
            for (v, n) in c.iter() {
                next.push((Weight::concat(&[w.clone(), v.clone()]), m * n));
            }
        }
        acc = next;
    }
    let mut out = FormalChar::new(group);
    for (w, m) in acc {
        out.add(w, m);
    }
    Ok(out)
}

/// The full weight system of a representation: weight ↦ multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMultiset {
    group: ProductGroup,
    entries: BTreeMap<Weight, u64>,
}

impl WeightMultiset {
    pub fn new(group: ProductGroup) -> Self {
        WeightMultiset { group, entries: BTreeMap::new() }
    }

    pub fn from_entries(group: ProductGroup, entries: impl IntoIterator<Item = (Weight, u64)>) -> Result<Self> {
        let mut ws = Self::new(group);
        for (w, m) in entries {
            if w.len() != ws.group.rank() {
                return Err(Error::InvalidWeight(format!("weight {w} has wrong length")));
            }
            ws.add(w, m);
        }
        Ok(ws)
    }

    pub fn group(&self) -> &ProductGroup {
        &self.group
    }

    pub fn entries(&self) -> &BTreeMap<Weight, u64> {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    pub fn add(&mut self, w: Weight, m: u64) {
        if m > 0 {
            *self.entries.entry(w).or_insert(0) += m;
        }
    }

    pub fn get(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    /// Total multiplicity, i.e. the dimension.
    pub fn total(&self) -> u128 {
        self.entries.values().map(|&m| m as u128).sum()
    }

    /// Multiplicity is constant along Weyl orbits (checked through simple reflections).
    pub fn is_weyl_symmetric(&self) -> bool {
        let pd = ProductData::new(&self.group);
        let offsets = self.group.offsets();
        self.entries.iter().all(|(w, &m)| {
            pd.factor_data().iter().zip(&offsets).all(|(rd, &o)| {
                (0..rd.rank()).all(|i| {
                    let mut part = w.slice(o, rd.rank());
                    part = rd.reflect(&part, i);
                    let mut r = w.clone();
                    r.0[o..o + rd.rank()].copy_from_slice(&part.0);
                    self.get(&r) == m
                })
            })
        })
    }

    /// Scales every weight by `k`.
    pub fn adams(&self, k: u32) -> WeightMultiset {
        let mut out = WeightMultiset::new(self.group.clone());
        for (w, m) in self.iter() {
            out.add(w.scale(k as i32), m);
        }
        out
    }
}

/// Scales every weight of `ws` by `k ≥ 1`.
pub fn adams(ws: &WeightMultiset, k: u32) -> WeightMultiset {
    ws.adams(k)
}
