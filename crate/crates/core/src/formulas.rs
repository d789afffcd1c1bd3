//! Closed-form decompositions: (GL_n, GL_m) dualities and small plethysms.

use crate::charengine::{FormalChar, PowerKind};
use crate::error::{Error, Result};
use crate::partitions::{nested_hooks, HookKind, Partition};
use crate::rootdata::{partition_to_weight, Family, Flavor, GroupType, ProductGroup, Weight};

fn sl(n: usize) -> Result<GroupType> {
    GroupType::sl(n)
}

fn gl_label(n: usize, lambda: &Partition) -> Result<Weight> {
    partition_to_weight(sl(n)?, lambda, Flavor::Gl)
}

/// FormalChar over SL(n) from partition labels, dropping those longer than n.
pub fn gl_char(n: usize, labels: impl IntoIterator<Item = Partition>) -> Result<FormalChar> {
    let mut out = FormalChar::new(ProductGroup::simple(sl(n)?));
    for lam in labels {
        if lam.len() <= n {
            out.add(gl_label(n, &lam)?, 1);
        }
    }
    Ok(out)
}

/// S^k(C^n ⊗ C^m) = ⊕_{|λ|=k, ℓ(λ) ≤ min(n,m)} V(λ) ⊠ V(λ).
pub fn duality_sym(n: usize, m: usize, k: u32) -> Result<FormalChar> {
    let g = ProductGroup::new(vec![sl(n)?, sl(m)?])?;
    let mut out = FormalChar::new(g);
    for lam in Partition::bounded(k, n.min(m), k) {
        out.add(Weight::concat(&[gl_label(n, &lam)?, gl_label(m, &lam)?]), 1);
    }
    Ok(out)
}

/// ∧^k(C^n ⊗ C^m) = ⊕_{|λ|=k, ℓ(λ) ≤ n, λ_1 ≤ m} V(λ) ⊠ V(λ^t).
pub fn duality_skew(n: usize, m: usize, k: u32) -> Result<FormalChar> {
    if k as usize > n * m {
        return Err(Error::InvalidInput(format!("degree {k} exceeds {n}·{m}")));
    }
    let g = ProductGroup::new(vec![sl(n)?, sl(m)?])?;
    let mut out = FormalChar::new(g);
    for lam in Partition::bounded(k, n, m as u32) {
        out.add(Weight::concat(&[gl_label(n, &lam)?, gl_label(m, &lam.conjugate())?]), 1);
    }
    Ok(out)
}

fn even_partitions(k: u32) -> impl Iterator<Item = Partition> {
    Partition::all_of_size(2 * k).into_iter().filter(|p| p.all_parts_even())
}

/// S^k(S²C^n): even-part partitions of 2k.
pub fn sym_power_s2(n: usize, k: u32) -> Result<FormalChar> {
    gl_char(n, even_partitions(k))
}

/// S^k(∧²C^n): conjugates of even-part partitions of 2k.
pub fn sym_power_l2(n: usize, k: u32) -> Result<FormalChar> {
    gl_char(n, even_partitions(k).map(|p| p.conjugate()))
}

/// ∧^k(S²C^n): nested (r+1, r−1)-hooks.
pub fn ext_power_s2(n: usize, k: u32) -> Result<FormalChar> {
    gl_char(n, nested_hooks(k, HookKind::SymSkew))
}

/// ∧^k(∧²C^n): nested (r, r)-hooks.
pub fn ext_power_l2(n: usize, k: u32) -> Result<FormalChar> {
    gl_char(n, nested_hooks(k, HookKind::ExtSkew))
}

/// ∧²(S^k C²) = ⊕_j V(2k − 2 − 4j) for SL(2).
pub fn ext2_symk_sl2(k: u32) -> Result<FormalChar> {
    if k == 0 {
        return Err(Error::InvalidInput("ext2_symk_sl2 needs k ≥ 1".into()));
    }
    let mut out = FormalChar::new(ProductGroup::simple(sl(2)?));
    for j in 0..=((k - 1) / 2) {
        out.add(Weight::from_slice(&[(2 * k - 2 - 4 * j) as i32]), 1);
    }
    Ok(out)
}

/// The closed form for S^n or ∧^n of an irreducible, when one is known.
///
/// Recognised inputs: the standard representation of SL, S² and ∧² of it,
/// ∧² of any SL(2) irreducible, and C^a ⊠ C^b over SL(a) × SL(b).
pub fn fast_path(rep: &FormalChar, kind: PowerKind, n: u32) -> Option<Result<FormalChar>> {
    let (w, m) = rep.iter().next()?;
    if rep.len() != 1 || m != 1 {
        return None;
    }
    let factors = rep.group().factors();
    if factors.iter().any(|g| g.family() != Family::A) {
        return None;
    }
    if factors.len() == 2 {
        let (a, b) = (factors[0].rank(), factors[1].rank());
        let std = Weight::concat(&[factors[0].standard(), factors[1].standard()]);
        if *w != std {
            return None;
        }
        return Some(match kind {
            PowerKind::Sym => duality_sym(a + 1, b + 1, n),
            PowerKind::Ext if n as usize > (a + 1) * (b + 1) => Ok(FormalChar::new(rep.group().clone())),
            PowerKind::Ext => duality_skew(a + 1, b + 1, n),
        });
    }
    if factors.len() != 1 {
        return None;
    }
    let r = factors[0].rank();
    let size = r + 1;
    let unit = |i: usize| Weight::unit(r, i);
    if *w == unit(0) {
        return Some(match kind {
            PowerKind::Sym => gl_char(size, [Partition::of(&[n])]),
            PowerKind::Ext => gl_char(size, [Partition::rectangle(1, n as usize)]),
        });
    }
    if *w == unit(0).scale(2) {
        return Some(match kind {
            PowerKind::Sym => sym_power_s2(size, n),
            PowerKind::Ext => ext_power_s2(size, n),
        });
    }
    if r >= 2 && *w == unit(1) {
        return Some(match kind {
            PowerKind::Sym => sym_power_l2(size, n),
            PowerKind::Ext => ext_power_l2(size, n),
        });
    }
    if r == 1 && kind == PowerKind::Ext && n == 2 && w.0[0] >= 1 {
        return Some(ext2_symk_sl2(w.0[0] as u32));
    }
    None
}
