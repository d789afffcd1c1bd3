//! Restriction from SL(m) to SO(m) or Sp(m) by folding ε-coordinates.
//!
//! The torus of the subgroup sits in the diagonal torus of SL(m) as
//! diag(t_1, …, t_n, [1,] t_n⁻¹, …, t_1⁻¹), so ε_i restricts to ε_i and
//! ε_{m+1−i} to −ε_i; the middle coordinate of odd m restricts to zero.

use serde::{Deserialize, Serialize};

use super::{DomChar, Engine, FormalChar};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::rootdata::{partition_to_weight, Family, Flavor, GroupType, ProductGroup, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RestrictTarget {
    So,
    Sp,
}

impl RestrictTarget {
    pub fn group(&self, m: usize) -> Result<GroupType> {
        match self {
            RestrictTarget::So => GroupType::so(m),
            RestrictTarget::Sp => GroupType::sp(m),
        }
    }
}

pub(super) fn restrict_classical(
    engine: &Engine,
    m: usize,
    target: RestrictTarget,
    lambda: &Partition,
) -> Result<FormalChar> {
    let sub = target.group(m)?;
    let sl = GroupType::sl(m)?;
    if lambda.len() > m {
        return Err(Error::PartitionTooLong { group: sl.to_string(), length: lambda.len(), max: m });
    }
    let hw = partition_to_weight(sl, lambda, Flavor::Gl)?;
    let source = engine.weight_multiplicities(sl, &hw)?;
    let size = lambda.size() as i64;
    let n = sub.rank();
    let mut dom = DomChar::default();
    for (w, mult) in source.iter() {
        let x = epsilon_coordinates(w, size, m)?;
        let y: Vec<i64> = (0..n).map(|i| x[i] - x[m - 1 - i]).collect();
        let f = fold_to_fundamental(sub, &y);
        if f.is_dominant() {
            *dom.entry(f).or_insert(0) += mult as i64;
        }
    }
    let pg = ProductGroup::simple(sub);
    let out = engine.decompose_dom(&pg, dom)?;
    engine.check_dimension(&out, source.total(), || format!("restriction of {lambda} to {sub}"))?;
    Ok(out)
}

/// ε-coordinates of an SL(m) weight whose coordinates sum to `size`.
fn epsilon_coordinates(w: &Weight, size: i64, m: usize) -> Result<Vec<i64>> {
    let a: Vec<i64> = w.coords().iter().map(|&x| x as i64).collect();
    let weighted: i64 = a.iter().enumerate().map(|(j, &x)| (j as i64 + 1) * x).sum();
    let rest = size - weighted;
    if rest % m as i64 != 0 {
        return Err(Error::InvalidWeight(format!("{w} is not a polynomial weight of degree {size}")));
    }
    let last = rest / m as i64;
    let mut x = vec![last; m];
    for i in (0..m - 1).rev() {
        x[i] = x[i + 1] + a[i];
    }
    Ok(x)
}

fn fold_to_fundamental(g: GroupType, y: &[i64]) -> Weight {
    let n = g.rank();
    let mut c = vec![0i64; n];
    for i in 0..n.saturating_sub(1) {
        c[i] = y[i] - y[i + 1];
    }
    match g.family() {
        Family::B => c[n - 1] = 2 * y[n - 1],
        Family::C => c[n - 1] = y[n - 1],
        Family::D => {
            c[n - 1] = y[n - 2] + y[n - 1];
        }
        _ => unreachable!("restriction targets are classical"),
    }
    Weight(c.into_iter().map(|v| v as i32).collect())
}
