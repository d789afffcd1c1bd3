//! Universal characters {λ}, [λ], ⟨λ⟩ and Littlewood's branching rules.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::charengine::FormalChar;
use crate::error::{Error, Result};
use crate::lr::{even_branching_coeff, EvenMode};
use crate::partitions::Partition;
use crate::rootdata::{partition_to_weight, Flavor, GroupType, ProductGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UniversalKind {
    Gl,
    Orth,
    Symp,
}

/// A finite integer combination of universal characters of one kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalSum {
    kind: UniversalKind,
    terms: BTreeMap<Partition, i64>,
}

impl UniversalSum {
    pub fn new(kind: UniversalKind) -> Self {
        UniversalSum { kind, terms: BTreeMap::new() }
    }

    pub fn kind(&self) -> UniversalKind {
        self.kind
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.terms
    }

    pub fn get(&self, mu: &Partition) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn add(&mut self, mu: Partition, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(mu.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&mu);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }
}

impl fmt::Display for UniversalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close) = match self.kind {
            UniversalKind::Gl => ('{', '}'),
            UniversalKind::Orth => ('[', ']'),
            UniversalKind::Symp => ('⟨', '⟩'),
        };
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, &c)) in self.terms.iter().rev().enumerate() {
            let inner = p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            if i > 0 {
                write!(f, " ")?;
            }
            match c.abs() {
                1 => write!(f, "{sign}{open}{inner}{close}")?,
                k => write!(f, "{sign}{k}{open}{inner}{close}")?,
            }
        }
        Ok(())
    }
}

fn branch(lambda: &Partition, kind: UniversalKind, mode: EvenMode) -> UniversalSum {
    let mut out = UniversalSum::new(kind);
    for mu in lambda.subpartitions() {
        let c = even_branching_coeff(lambda, &mu, mode);
        out.add(mu, c as i64);
    }
    out
}

/// {λ} = Σ_μ (Σ_{β even rows} c^λ_{μβ}) [μ].
pub fn branch_to_orth(lambda: &Partition) -> UniversalSum {
    branch(lambda, UniversalKind::Orth, EvenMode::EvenRows)
}

/// {λ} = Σ_μ (Σ_{β even columns} c^λ_{μβ}) ⟨μ⟩.
pub fn branch_to_symp(lambda: &Partition) -> UniversalSum {
    branch(lambda, UniversalKind::Symp, EvenMode::EvenColumns)
}

fn to_formal(group: GroupType, flavor: Flavor, acc: BTreeMap<Partition, i64>) -> Result<FormalChar> {
    let mut out = FormalChar::new(ProductGroup::simple(group));
    for (mu, c) in acc {
        if c < 0 {
            return Err(Error::NotTrueCharacter(format!("coefficient {c} at {mu} after specialization")));
        }
        out.add(partition_to_weight(group, &mu, flavor)?, c as u64);
    }
    Ok(out)
}

/// Reads every ⟨μ⟩ as the Sp(2n) irreducible; only the stable range is supported.
pub fn specialize_symp(s: &UniversalSum, n: usize) -> Result<FormalChar> {
    if s.kind != UniversalKind::Symp {
        return Err(Error::InvalidInput(format!("expected a symplectic sum, got {:?}", s.kind)));
    }
    let g = GroupType::sp(2 * n)?;
    let mut acc = BTreeMap::new();
    for (mu, c) in s.iter() {
        if mu.len() > n {
            return Err(Error::SymplecticModification(format!("⟨{mu}⟩ at n = {n}")));
        }
        *acc.entry(mu.clone()).or_insert(0) += c;
    }
    acc.retain(|_, c| *c != 0);
    to_formal(g, Flavor::Sp, acc)
}

/// One strip removal on a two-column label for odd m. Returns the sign and the
/// new label, or `None` when the label vanishes.
pub fn modify_two_column(mu: &Partition, m: usize) -> Result<Option<(i64, Partition)>> {
    let (c, d) = mu.two_column().ok_or_else(|| Error::OrthogonalModification(format!("[{mu}] at m = {m}")))?;
    let len = c + d;
    let h = 2 * len as i64 - m as i64;
    if h <= 0 {
        return Ok(Some((1, mu.clone())));
    }
    let h = h as usize;
    let twos = |k: usize, ones: usize| {
        let mut p = vec![2; k];
        p.extend(std::iter::repeat_n(1, ones));
        Partition::new(p).expect("two-column shape")
    };
    if h <= d {
        return Ok(Some((1, twos(c, d - h))));
    }
    if h == d + 1 || c == 0 {
        return Ok(None);
    }
    let up = h - d - 1;
    if up > c {
        return Ok(None);
    }
    Ok(Some((-1, twos(c - up, h - d - 2))))
}

/// Reads every [μ] as an SO(m) irreducible for odd m, modifying two-column labels.
pub fn specialize_orth(s: &UniversalSum, m: usize) -> Result<FormalChar> {
    if s.kind != UniversalKind::Orth {
        return Err(Error::InvalidInput(format!("expected an orthogonal sum, got {:?}", s.kind)));
    }
    if m.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("orthogonal specialization needs odd m, got {m}")));
    }
    let g = GroupType::so(m)?;
    let n = g.rank();
    let mut acc: BTreeMap<Partition, i64> = BTreeMap::new();
    for (mu, c) in s.iter() {
        let mut sign = 1;
        let mut cur = mu.clone();
        let mut alive = true;
        while cur.len() > n {
            match modify_two_column(&cur, m)? {
                Some((s, next)) => {
                    sign *= s;
                    cur = next;
                }
                None => {
                    alive = false;
                    break;
                }
            }
        }
        if alive {
            *acc.entry(cur).or_insert(0) += sign * c;
        }
    }
    acc.retain(|_, c| *c != 0);
    to_formal(g, Flavor::So, acc)
}

/// Σ_{i=0}^{a} [2^{a−i}, 1^b], the branching of {2^a, 1^b} to the orthogonal group.
pub fn restrict_two_column_closed_form(a: usize, b: usize) -> UniversalSum {
    let mut out = UniversalSum::new(UniversalKind::Orth);
    for i in 0..=a {
        let mut p = vec![2u32; a - i];
        p.extend(std::iter::repeat_n(1, b));
        out.add(Partition::new(p).expect("two-column shape"), 1);
    }
    out
}
