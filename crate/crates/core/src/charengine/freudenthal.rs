use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::rootdata::{RootData, Weight};

/// Multiplicities of the dominant weights of V(λ), highest first.
pub fn dominant_multiplicities(rd: &RootData, lambda: &Weight) -> Result<Vec<(Weight, i64)>> {
    let doms = rd.dominant_weights_below(lambda);
    let rho = rd.rho();
    let lr = lambda.add(&rho);
    let norm_top = rd.form(&lr, &lr);
    let top_height = rd.height(lambda);
    let root_heights: Vec<i64> = rd.positive_roots().iter().map(|a| rd.height(a)).collect();

    let mut mult: FxHashMap<Weight, i64> = FxHashMap::default();
    mult.insert(lambda.clone(), 1);
    let mut out = vec![(lambda.clone(), 1)];
    let overflow = || Error::Overflow("weight multiplicities");

    for mu in doms.iter().skip(1) {
        let mr = mu.add(&rho);
        let den = norm_top - rd.form(&mr, &mr);
        let mut sum: i64 = 0;
        let h_mu = rd.height(mu);
        for (k, alpha) in rd.positive_roots().iter().enumerate() {
            let mut nu = mu.add(alpha);
            let mut h = h_mu + root_heights[k];
            while h <= top_height {
                let d = rd.to_dominant(&nu);
                if let Some(&c) = mult.get(&d) {
                    let term = c.checked_mul(rd.pair_root(&nu, k)).ok_or_else(overflow)?;
                    sum = sum.checked_add(term).ok_or_else(overflow)?;
                }
                nu = nu.add(alpha);
                h += root_heights[k];
            }
        }
        let num = sum.checked_mul(2).ok_or_else(overflow)?;
        if den <= 0 || num % den != 0 {
            return Err(Error::Divisibility(format!("Freudenthal step at {mu} below {lambda}: {num} / {den}")));
        }
        let m = num / den;
        if m > 0 {
            mult.insert(mu.clone(), m);
            out.push((mu.clone(), m));
        }
    }
    Ok(out)
}
