//! Root systems, weights and label dictionaries.
//!
//! Nodes follow Bourbaki numbering. Weights are integer vectors in the basis of
//! fundamental weights; simple roots are stored the same way (rows of the Cartan
//! matrix). See `docs/CONVENTIONS.md` for the ε-coordinate dictionaries.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    E6,
    E7,
}

/// A simple group type: family plus rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupType {
    family: Family,
    rank: usize,
}

/// Which partition dictionary to use for a label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Gl,
    So,
    Sp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    Plus,
    Minus,
    Full,
}

impl GroupType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 3,
            Family::G2 => rank == 2,
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
        };
        if !ok {
            return Err(Error::InvalidGroup(format!("{family:?} does not admit rank {rank}")));
        }
        Ok(GroupType { family, rank })
    }

    /// SL(n), n ≥ 2.
    pub fn sl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGroup(format!("SL({n}) is trivial")));
        }
        Self::new(Family::A, n - 1)
    }

    /// SO(m): B for odd m ≥ 3, D for even m ≥ 6.
    pub fn so(m: usize) -> Result<Self> {
        if m % 2 == 1 && m >= 3 {
            Self::new(Family::B, (m - 1) / 2)
        } else if m.is_multiple_of(2) && m >= 6 {
            Self::new(Family::D, m / 2)
        } else {
            Err(Error::InvalidGroup(format!("SO({m}) is not a supported simple group")))
        }
    }

    /// Sp(2n), n ≥ 1.
    pub fn sp(m: usize) -> Result<Self> {
        if m % 2 == 1 || m < 2 {
            return Err(Error::InvalidGroup(format!("Sp({m}) needs an even dimension ≥ 2")));
        }
        Self::new(Family::C, m / 2)
    }

    pub fn g2() -> Self {
        GroupType { family: Family::G2, rank: 2 }
    }

    pub fn e6() -> Self {
        GroupType { family: Family::E6, rank: 6 }
    }

    pub fn e7() -> Self {
        GroupType { family: Family::E7, rank: 7 }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the defining representation of a classical group.
    pub fn natural_dimension(&self) -> Option<usize> {
        match self.family {
            Family::A => Some(self.rank + 1),
            Family::B => Some(2 * self.rank + 1),
            Family::C | Family::D => Some(2 * self.rank),
            _ => None,
        }
    }

    pub fn flavor(&self) -> Option<Flavor> {
        match self.family {
            Family::A => Some(Flavor::Gl),
            Family::B | Family::D => Some(Flavor::So),
            Family::C => Some(Flavor::Sp),
            _ => None,
        }
    }

    /// The first fundamental weight, except for SO(3) where the vector representation is 2ω₁.
    pub fn standard(&self) -> Weight {
        if self.family == Family::B && self.rank == 1 {
            return Weight::from_slice(&[2]);
        }
        Weight::unit(self.rank, 0)
    }

    pub fn root_data(&self) -> Arc<RootData> {
        static CACHE: OnceLock<RwLock<FxHashMap<GroupType, Arc<RootData>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(rd) = cache.read().expect("root data cache poisoned").get(self) {
            return rd.clone();
        }
        let rd = Arc::new(RootData::build(*self));
        cache.write().expect("root data cache poisoned").entry(*self).or_insert(rd).clone()
    }

    /// Human-oriented name such as SL(4), SO(7), Sp(6).
    pub fn classical_name(&self) -> String {
        match self.family {
            Family::A => format!("SL({})", self.rank + 1),
            Family::B => format!("SO({})", 2 * self.rank + 1),
            Family::C => format!("Sp({})", 2 * self.rank),
            Family::D => format!("SO({})", 2 * self.rank),
            Family::G2 => "G2".into(),
            Family::E6 => "E6".into(),
            Family::E7 => "E7".into(),
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::G2 => write!(f, "G2"),
            Family::E6 => write!(f, "E6"),
            Family::E7 => write!(f, "E7"),
            fam => write!(f, "{:?}{}", fam, self.rank),
        }
    }
}

impl FromStr for GroupType {
    type Err = Error;

    /// Accepts Cartan names (A3, B2, D4, G2, E6) and classical names (SL4, SO(7), Sp6).
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let upper = t.to_ascii_uppercase();
        match upper.as_str() {
            "G2" => return Ok(Self::g2()),
            "E6" => return Ok(Self::e6()),
            "E7" => return Ok(Self::e7()),
            _ => {}
        }
        let number = |rest: &str| -> Result<usize> {
            let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
            inner.parse::<usize>().map_err(|_| Error::InvalidGroup(format!("cannot parse group {s:?}")))
        };
        for (prefix, ctor) in
            [("SL", GroupType::sl as fn(usize) -> Result<GroupType>), ("SO", GroupType::so), ("SP", GroupType::sp)]
        {
            if let Some(rest) = upper.strip_prefix(prefix) {
                return ctor(number(rest)?);
            }
        }
        let (head, rest) = upper.split_at(1.min(upper.len()));
        let family = match head {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            _ => return Err(Error::InvalidGroup(format!("cannot parse group {s:?}"))),
        };
        GroupType::new(family, number(rest)?)
    }
}

impl Serialize for GroupType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub SmallVec<[i32; 12]>);

/// A weight with all coordinates non-negative.
pub type DominantWeight = Weight;

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(SmallVec::from_elem(0, rank))
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn from_slice(c: &[i32]) -> Self {
        Weight(SmallVec::from_slice(c))
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i32) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }

    pub fn slice(&self, start: usize, len: usize) -> Weight {
        Weight::from_slice(&self.0[start..start + len])
    }

    pub fn concat(parts: &[Weight]) -> Weight {
        Weight(parts.iter().flat_map(|p| p.0.iter().copied()).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidWeight(format!("expected \"[a1,...,ar]\", got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Weight::default());
        }
        inner
            .split(',')
            .map(|x| {
                x.trim().parse::<i32>().map_err(|_| Error::InvalidWeight(format!("bad coordinate {x:?} in {s:?}")))
            })
            .collect::<Result<SmallVec<_>>>()
            .map(Weight)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Weight(SmallVec::from_vec(Vec::<i32>::deserialize(d)?)))
    }
}

/// Cached root-system data of one simple group.
#[derive(Debug)]
pub struct RootData {
    group: GroupType,
    /// Row i is the simple root α_i in fundamental coordinates.
    cartan: Vec<Vec<i32>>,
    /// Integer multiple of the invariant form on fundamental weights.
    form: Vec<Vec<i64>>,
    /// Positive roots in fundamental coordinates, sorted by height.
    positive_roots: Vec<Weight>,
    /// For each positive root α, the vector v with (μ, α) ∝ Σ μ_i v_i.
    root_pairing: Vec<Vec<i64>>,
    /// (ω_i, ρ) under the scaled form.
    rho_pairing: Vec<i64>,
}

fn cartan_matrix(g: GroupType) -> Vec<Vec<i32>> {
    let n = g.rank;
    let mut a = vec![vec![0i32; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match g.family {
        Family::A | Family::B | Family::C => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::G2 => link(0, 1),
        Family::E6 | Family::E7 => {
            link(0, 2);
            link(2, 3);
            link(3, 4);
            link(4, 5);
            link(1, 3);
            if g.family == Family::E7 {
                link(5, 6);
            }
        }
    }
    match g.family {
        Family::B if n >= 2 => a[n - 2][n - 1] = -2,
        Family::C if n >= 2 => a[n - 1][n - 2] = -2,
        Family::G2 => a[1][0] = -3,
        _ => {}
    }
    a
}

/// Squared lengths of simple roots, short roots normalised to 2.
fn root_lengths(g: GroupType) -> Vec<i64> {
    let n = g.rank;
    match g.family {
        Family::B => (0..n).map(|i| if i + 1 == n { 2 } else { 4 }).collect(),
        Family::C => (0..n).map(|i| if i + 1 == n { 4 } else { 2 }).collect(),
        Family::G2 => vec![2, 6],
        _ => vec![2; n],
    }
}

fn invert(a: &[Vec<i32>]) -> Vec<Vec<Ratio<i64>>> {
    let n = a.len();
    let mut m: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            let mut row: Vec<Ratio<i64>> = a[i].iter().map(|&x| Ratio::from_integer(x as i64)).collect();
            row.extend((0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("Cartan matrix is invertible");
        m.swap(col, piv);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl RootData {
    fn build(group: GroupType) -> RootData {
        let n = group.rank;
        let cartan = cartan_matrix(group);
        let d = root_lengths(group);
        let inv = invert(&cartan);
        let raw: Vec<Vec<Ratio<i64>>> =
            (0..n).map(|i| (0..n).map(|j| inv[i][j] * Ratio::new(d[j], 2)).collect()).collect();
        let mut scale = 1i64;
        for x in raw.iter().flatten() {
            let den = *x.denom();
            scale = scale / gcd(scale, den) * den;
        }
        let form: Vec<Vec<i64>> =
            raw.iter().map(|row| row.iter().map(|x| (x * scale).to_integer()).collect()).collect();

        // Positive roots by the root-string algorithm, in simple-root coordinates.
        let mut all: Vec<Vec<i32>> = Vec::new();
        let mut seen: FxHashSet<Vec<i32>> = FxHashSet::default();
        let mut layer: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                let mut c = vec![0; n];
                c[i] = 1;
                c
            })
            .collect();
        while !layer.is_empty() {
            for c in &layer {
                seen.insert(c.clone());
            }
            all.extend(layer.iter().cloned());
            let mut next = Vec::new();
            let mut next_seen = FxHashSet::default();
            for c in &layer {
                for i in 0..n {
                    let mut p = 0;
                    let mut down = c.clone();
                    loop {
                        down[i] -= 1;
                        if down[i] < 0 || !seen.contains(&down) {
                            break;
                        }
                        p += 1;
                    }
                    let pairing: i32 = (0..n).map(|j| c[j] * cartan[j][i]).sum();
                    if p - pairing > 0 {
                        let mut up = c.clone();
                        up[i] += 1;
                        if next_seen.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            layer = next;
        }

        let positive_roots: Vec<Weight> =
            all.iter().map(|c| Weight((0..n).map(|k| (0..n).map(|j| c[j] * cartan[j][k]).sum()).collect())).collect();
        let root_pairing: Vec<Vec<i64>> =
            all.iter().map(|c| (0..n).map(|j| c[j] as i64 * d[j] * scale / 2).collect()).collect();
        let rho_pairing: Vec<i64> = (0..n).map(|i| form[i].iter().sum()).collect();
        RootData { group, cartan, form, positive_roots, root_pairing, rho_pairing }
    }

    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn rank(&self) -> usize {
        self.group.rank
    }

    pub fn cartan_row(&self, i: usize) -> &[i32] {
        &self.cartan[i]
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Scaled invariant form on two weights.
    pub fn form(&self, a: &Weight, b: &Weight) -> i64 {
        let n = self.rank();
        let mut s = 0i64;
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            let mut t = 0i64;
            for j in 0..n {
                t += self.form[i][j] * b.0[j] as i64;
            }
            s += a.0[i] as i64 * t;
        }
        s
    }

    /// Scaled pairing (μ, α_k) for the k-th positive root.
    pub fn pair_root(&self, mu: &Weight, k: usize) -> i64 {
        mu.0.iter().zip(&self.root_pairing[k]).map(|(&a, &b)| a as i64 * b).sum()
    }

    /// Scaled (μ, ρ); strictly increases along the dominance order.
    pub fn height(&self, mu: &Weight) -> i64 {
        mu.0.iter().zip(&self.rho_pairing).map(|(&a, &b)| a as i64 * b).sum()
    }

    pub fn rho(&self) -> Weight {
        Weight(SmallVec::from_elem(1, self.rank()))
    }

    /// s_i(w) = w − w_i α_i.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let k = w.0[i];
        Weight(w.0.iter().zip(&self.cartan[i]).map(|(&a, &c)| a - k * c).collect())
    }

    /// The unique dominant weight in the Weyl orbit of w.
    pub fn to_dominant(&self, w: &Weight) -> Weight {
        let mut w = w.clone();
        self.to_dominant_in_place(&mut w);
        w
    }

    pub fn to_dominant_in_place(&self, w: &mut Weight) {
        self.to_dominant_slice(&mut w.0);
    }

    pub fn to_dominant_slice(&self, w: &mut [i32]) {
        while let Some(i) = w.iter().position(|&x| x < 0) {
            let k = w[i];
            for (a, &c) in w.iter_mut().zip(&self.cartan[i]) {
                *a -= k * c;
            }
        }
    }

    /// Weyl orbit of a dominant weight.
    pub fn orbit(&self, dominant: &Weight) -> Vec<Weight> {
        let mut seen = FxHashSet::default();
        seen.insert(dominant.clone());
        let mut out = vec![dominant.clone()];
        let mut i = 0;
        while i < out.len() {
            let w = out[i].clone();
            for j in 0..self.rank() {
                if w.0[j] > 0 {
                    let r = self.reflect(&w, j);
                    if seen.insert(r.clone()) {
                        out.push(r);
                    }
                }
            }
            i += 1;
        }
        out
    }

    /// −w₀λ.
    pub fn dual(&self, w: &Weight) -> Weight {
        self.to_dominant(&w.neg())
    }

    /// Dominant weights μ ≤ λ, highest first.
    pub fn dominant_weights_below(&self, lambda: &Weight) -> Vec<Weight> {
        let mut seen = FxHashSet::default();
        seen.insert(lambda.clone());
        let mut out = vec![lambda.clone()];
        let mut i = 0;
        while i < out.len() {
            let mu = out[i].clone();
            for a in &self.positive_roots {
                let nu = mu.sub(a);
                if nu.is_dominant() && seen.insert(nu.clone()) {
                    out.push(nu);
                }
            }
            i += 1;
        }
        out.sort_by(|a, b| self.height(b).cmp(&self.height(a)).then_with(|| b.cmp(a)));
        out
    }

    /// Weyl dimension formula.
    pub fn dimension(&self, w: &Weight) -> u128 {
        let lr = w.add(&self.rho());
        let rho = self.rho();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for k in 0..self.positive_roots.len() {
            num *= BigInt::from(self.pair_root(&lr, k));
            den *= BigInt::from(self.pair_root(&rho, k));
        }
        let q = num / den;
        debug_assert!(q.is_positive());
        q.to_u128().expect("dimension exceeds u128")
    }
}

/// Weyl dimension of the irreducible with highest weight `w`.
pub fn dimension(g: GroupType, w: &Weight) -> u128 {
    g.root_data().dimension(w)
}

/// Checks that `w` is a dominant weight of the right length for `g`.
pub fn check_weight(g: GroupType, w: &Weight) -> Result<()> {
    if w.len() != g.rank() {
        return Err(Error::InvalidWeight(format!("weight {w} has length {} but {g} has rank {}", w.len(), g.rank())));
    }
    if !w.is_dominant() {
        return Err(Error::InvalidWeight(format!("weight {w} is not dominant")));
    }
    Ok(())
}

/// Highest weight of the irreducible labelled by a partition.
pub fn partition_to_weight(g: GroupType, lambda: &Partition, flavor: Flavor) -> Result<Weight> {
    if g.flavor() != Some(flavor) {
        return Err(Error::InvalidInput(format!("flavor {flavor:?} does not fit {g}")));
    }
    let n = g.rank();
    let max = if g.family == Family::A { n + 1 } else { n };
    if lambda.len() > max {
        return Err(Error::PartitionTooLong { group: g.to_string(), length: lambda.len(), max });
    }
    let l = |i: usize| lambda.part(i) as i32;
    let mut w = Weight::zero(n);
    match g.family {
        Family::A => {
            for i in 0..n {
                w.0[i] = l(i) - l(i + 1);
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                w.0[i] = l(i) - l(i + 1);
            }
            w.0[n - 1] = 2 * l(n - 1);
        }
        Family::C => {
            for i in 0..n {
                w.0[i] = l(i) - l(i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                w.0[i] = l(i) - l(i + 1);
            }
            w.0[n - 2] = l(n - 2) + l(n - 1);
            w.0[n - 1] = l(n - 2) - l(n - 1);
        }
        _ => unreachable!("exceptional groups have no flavor"),
    }
    Ok(w)
}

/// Inverse of [`partition_to_weight`]; `None` when the weight has no partition label.
pub fn weight_to_partition(g: GroupType, w: &Weight, flavor: Flavor) -> Option<Partition> {
    if g.flavor() != Some(flavor) || w.len() != g.rank() || !w.is_dominant() {
        return None;
    }
    let n = g.rank();
    let a = |i: usize| w.0[i];
    let mut parts = vec![0i32; n];
    match g.family {
        Family::A | Family::C => {
            parts[n - 1] = a(n - 1);
        }
        Family::B => {
            if a(n - 1) % 2 != 0 {
                return None;
            }
            parts[n - 1] = a(n - 1) / 2;
        }
        Family::D => {
            let (x, y) = (a(n - 2), a(n - 1));
            if (x + y) % 2 != 0 || x < y {
                return None;
            }
            parts[n - 1] = (x - y) / 2;
            parts[n - 2] = (x + y) / 2;
        }
        _ => return None,
    }
    let top = if g.family == Family::D { n - 2 } else { n - 1 };
    for i in (0..top).rev() {
        parts[i] = parts[i + 1] + a(i);
    }
    Partition::new(parts.into_iter().map(|x| x as u32).collect()).ok()
}

/// Spin representations: B_n full → ω_n; D_n plus → ω_{n−1}, minus → ω_n.
pub fn spin_label(g: GroupType, chirality: Chirality) -> Result<Weight> {
    let n = g.rank();
    match (g.family, chirality) {
        (Family::B, Chirality::Full) => Ok(Weight::unit(n, n - 1)),
        (Family::D, Chirality::Plus) => Ok(Weight::unit(n, n - 2)),
        (Family::D, Chirality::Minus) => Ok(Weight::unit(n, n - 1)),
        _ => Err(Error::InvalidInput(format!("no {chirality:?} spin representation for {g}"))),
    }
}

/// An ordered product of simple groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductGroup {
    factors: Vec<GroupType>,
}

impl ProductGroup {
    pub fn new(factors: Vec<GroupType>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidGroup("a product group needs at least one factor".into()));
        }
        Ok(ProductGroup { factors })
    }

    pub fn simple(g: GroupType) -> Self {
        ProductGroup { factors: vec![g] }
    }

    pub fn factors(&self) -> &[GroupType] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|g| g.rank()).sum()
    }

    /// Start offset of every factor inside a concatenated weight.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.factors.len());
        let mut acc = 0;
        for g in &self.factors {
            off.push(acc);
            acc += g.rank();
        }
        off
    }

    pub fn split(&self, w: &Weight) -> Vec<Weight> {
        self.offsets().into_iter().zip(&self.factors).map(|(o, g)| w.slice(o, g.rank())).collect()
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::InvalidWeight(format!(
                "weight {w} has length {} but {self} has rank {}",
                w.len(),
                self.rank()
            )));
        }
        if !w.is_dominant() {
            return Err(Error::InvalidWeight(format!("weight {w} is not dominant")));
        }
        Ok(())
    }

    pub fn dimension(&self, w: &Weight) -> u128 {
        self.split(w).iter().zip(&self.factors).map(|(p, g)| dimension(*g, p)).product()
    }

    pub fn to_dominant(&self, w: &Weight) -> Weight {
        let mut w = w.clone();
        self.to_dominant_in_place(&mut w);
        w
    }

    pub fn to_dominant_in_place(&self, w: &mut Weight) {
        let mut o = 0;
        for g in &self.factors {
            let rd = g.root_data();
            let r = g.rank();
            let mut part = w.slice(o, r);
            rd.to_dominant_in_place(&mut part);
            w.0[o..o + r].copy_from_slice(&part.0);
            o += r;
        }
    }

    pub fn dual(&self, w: &Weight) -> Weight {
        self.to_dominant(&w.neg())
    }

    pub fn height(&self, w: &Weight) -> i64 {
        self.split(w).iter().zip(&self.factors).map(|(p, g)| g.root_data().height(p)).sum()
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank())
    }
}

/// Root data of every factor of a product group, resolved once.
#[derive(Clone, Debug)]
pub struct ProductData {
    group: ProductGroup,
    factors: Vec<Arc<RootData>>,
    offsets: Vec<usize>,
}

impl ProductData {
    pub fn new(group: &ProductGroup) -> Self {
        ProductData {
            group: group.clone(),
            factors: group.factors.iter().map(|g| g.root_data()).collect(),
            offsets: group.offsets(),
        }
    }

    pub fn group(&self) -> &ProductGroup {
        &self.group
    }

    pub fn factor_data(&self) -> &[Arc<RootData>] {
        &self.factors
    }

    pub fn to_dominant_in_place(&self, w: &mut Weight) {
        for (rd, &o) in self.factors.iter().zip(&self.offsets) {
            rd.to_dominant_slice(&mut w.0[o..o + rd.rank()]);
        }
    }

    pub fn to_dominant(&self, w: &Weight) -> Weight {
        let mut w = w.clone();
        self.to_dominant_in_place(&mut w);
        w
    }

    pub fn height(&self, w: &Weight) -> i64 {
        self.factors.iter().zip(&self.offsets).map(|(rd, &o)| rd.height(&w.slice(o, rd.rank()))).sum()
    }

    pub fn dimension(&self, w: &Weight) -> u128 {
        self.factors.iter().zip(&self.offsets).map(|(rd, &o)| rd.dimension(&w.slice(o, rd.rank()))).product()
    }
}

impl fmt::Display for ProductGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for ProductGroup {
    type Err = Error;

    /// Factors separated by `x` or `×`, e.g. `SL2xSO7` or `A1xB3`.
    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        let mut cur = String::new();
        let chars: Vec<char> = s.trim().chars().collect();
        let mut depth = 0;
        for &c in &chars {
            match c {
                '(' => {
                    depth += 1;
                    cur.push(c)
                }
                ')' => {
                    depth -= 1;
                    cur.push(c)
                }
                'x' | 'X' | '×' if depth == 0 => {
                    factors.push(cur.parse::<GroupType>()?);
                    cur.clear();
                }
                _ => cur.push(c),
            }
        }
        factors.push(cur.parse::<GroupType>()?);
        ProductGroup::new(factors)
    }
}

impl Serialize for ProductGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.factors.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProductGroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let f = Vec::<GroupType>::deserialize(d)?;
        ProductGroup::new(f).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i32]) -> Weight {
        Weight::from_slice(c)
    }

    #[test]
    fn positive_root_counts() {
        let cases = [
            ("A1", 1),
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("D5", 20),
            ("G2", 6),
            ("E6", 36),
            ("E7", 63),
        ];
        for (g, n) in cases {
            let g: GroupType = g.parse().unwrap();
            assert_eq!(g.root_data().positive_roots().len(), n, "{g}");
        }
    }

    #[test]
    fn dimensions() {
        let a1: GroupType = "A1".parse().unwrap();
        for k in 0..6 {
            assert_eq!(dimension(a1, &w(&[k])), k as u128 + 1);
        }
        assert_eq!(dimension("B3".parse().unwrap(), &w(&[0, 0, 1])), 8);
        assert_eq!(dimension(GroupType::g2(), &w(&[1, 0])), 7);
        assert_eq!(dimension(GroupType::g2(), &w(&[0, 1])), 14);
        assert_eq!(dimension(GroupType::e6(), &w(&[1, 0, 0, 0, 0, 0])), 27);
        assert_eq!(dimension(GroupType::e6(), &w(&[0, 1, 0, 0, 0, 0])), 78);
        assert_eq!(dimension(GroupType::e7(), &w(&[0, 0, 0, 0, 0, 0, 1])), 56);
        assert_eq!(dimension(GroupType::e7(), &w(&[1, 0, 0, 0, 0, 0, 0])), 133);
        assert_eq!(dimension("C2".parse().unwrap(), &w(&[0, 1])), 5);
        assert_eq!(dimension("B3".parse().unwrap(), &w(&[0, 0, 2])), 35);
        assert_eq!(dimension("D4".parse().unwrap(), &w(&[0, 1, 0, 0])), 28);
        assert_eq!(dimension("D5".parse().unwrap(), &w(&[0, 0, 0, 1, 0])), 16);
    }

    #[test]
    fn partition_dictionary_examples() {
        let p = Partition::of;
        assert_eq!(partition_to_weight("A3".parse().unwrap(), &p(&[1]), Flavor::Gl).unwrap(), w(&[1, 0, 0]));
        assert_eq!(partition_to_weight("C2".parse().unwrap(), &p(&[1, 1]), Flavor::Sp).unwrap(), w(&[0, 1]));
        assert_eq!(partition_to_weight("B3".parse().unwrap(), &p(&[1, 1, 1]), Flavor::So).unwrap(), w(&[0, 0, 2]));
        assert_eq!(partition_to_weight("A2".parse().unwrap(), &p(&[2, 1, 1]), Flavor::Gl).unwrap(), w(&[1, 0]));
        assert!(matches!(
            partition_to_weight("B2".parse().unwrap(), &p(&[1, 1, 1]), Flavor::So),
            Err(Error::PartitionTooLong { .. })
        ));
        assert!(partition_to_weight("B2".parse().unwrap(), &p(&[1]), Flavor::Sp).is_err());
    }

    #[test]
    fn dictionary_round_trip() {
        for g in ["A3", "B3", "C3", "D4", "D5"] {
            let g: GroupType = g.parse().unwrap();
            let fl = g.flavor().unwrap();
            for n in 0..=6 {
                for lam in Partition::all_of_size(n) {
                    if lam.len() > g.rank() {
                        continue;
                    }
                    let wt = partition_to_weight(g, &lam, fl).unwrap();
                    assert_eq!(weight_to_partition(g, &wt, fl), Some(lam.clone()), "{g} {lam}");
                }
            }
        }
    }

    #[test]
    fn spin_labels() {
        assert_eq!(spin_label("B2".parse().unwrap(), Chirality::Full).unwrap(), w(&[0, 1]));
        assert_eq!(spin_label("D5".parse().unwrap(), Chirality::Plus).unwrap(), w(&[0, 0, 0, 1, 0]));
        assert_eq!(spin_label("D5".parse().unwrap(), Chirality::Minus).unwrap(), w(&[0, 0, 0, 0, 1]));
        assert!(spin_label("C3".parse().unwrap(), Chirality::Full).is_err());
        assert!(spin_label("B3".parse().unwrap(), Chirality::Plus).is_err());
    }

    #[test]
    fn group_validation_and_names() {
        assert!(GroupType::new(Family::D, 2).is_err());
        assert!(GroupType::so(4).is_err());
        assert_eq!(GroupType::so(7).unwrap().to_string(), "B3");
        assert_eq!(GroupType::so(8).unwrap().to_string(), "D4");
        assert_eq!("Sp(6)".parse::<GroupType>().unwrap().to_string(), "C3");
        assert_eq!("SL4".parse::<GroupType>().unwrap().to_string(), "A3");
        let pg: ProductGroup = "SL2xSO(7)".parse().unwrap();
        assert_eq!(pg.to_string(), "A1xB3");
        assert_eq!(pg.rank(), 4);
    }

    #[test]
    fn duals() {
        let a3: GroupType = "A3".parse().unwrap();
        assert_eq!(a3.root_data().dual(&w(&[1, 0, 0])), w(&[0, 0, 1]));
        let d5: GroupType = "D5".parse().unwrap();
        assert_eq!(d5.root_data().dual(&w(&[0, 0, 0, 1, 0])), w(&[0, 0, 0, 0, 1]));
        let d4: GroupType = "D4".parse().unwrap();
        assert_eq!(d4.root_data().dual(&w(&[0, 0, 1, 0])), w(&[0, 0, 1, 0]));
        assert_eq!(GroupType::e6().root_data().dual(&w(&[1, 0, 0, 0, 0, 0])), w(&[0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn orbit_sizes() {
        let b3: GroupType = "B3".parse().unwrap();
        assert_eq!(b3.root_data().orbit(&w(&[0, 0, 1])).len(), 8);
        assert_eq!(GroupType::g2().root_data().orbit(&w(&[0, 1])).len(), 6);
        assert_eq!(GroupType::e7().root_data().orbit(&w(&[0, 0, 0, 0, 0, 0, 1])).len(), 56);
    }
}
