//! Case lists for the built-in suites.

use std::collections::BTreeMap;

use super::corpus::{self, diagram, label, PositiveEntry, WitnessEntry};
use super::{Case, Ctx, Outcome};
use crate::charengine::{FormalChar, RestrictTarget};
use crate::error::{Error, Result};
use crate::formulas::{
    duality_skew, duality_sym, ext2_symk_sl2, ext_power_l2, ext_power_s2, sym_power_l2, sym_power_s2,
};
use crate::lr::{lr_coeff, schur_multiply, GLFormalSum};
use crate::partitions::Partition;
use crate::rootdata::{partition_to_weight, Flavor, GroupType, ProductGroup, Weight};
use crate::superalg::{dual_flip, graded_component, is_super_mf, subdiagrams, MFVerdict, MultiIndex, RepDiagram};
use crate::universal::{
    branch_to_orth, branch_to_symp, restrict_two_column_closed_form, specialize_orth, specialize_symp, UniversalKind,
    UniversalSum,
};

pub(crate) fn cases(name: &str) -> Option<Vec<Case>> {
    Some(match name {
        "dualities-vs-oracle" => dualities(),
        "plethysm-closed-forms" => plethysms(),
        "branching" => branching(),
        "theorem-positives" => positives(),
        "section5-negatives" => simple_negatives(),
        "section6-negatives" => product_negatives(),
        "lemma-big-mama" => big_mama(),
        "lemma-proof1-distinctness" => distinctness(),
        "three-factor" => three_factor(),
        "closure-properties" => closure(),
        _ => return None,
    })
}

fn p(parts: &[u32]) -> Partition {
    Partition::of(parts)
}

fn group(factors: &[GroupType]) -> ProductGroup {
    ProductGroup::new(factors.to_vec()).expect("suite groups are valid")
}

fn sl(n: usize) -> GroupType {
    GroupType::sl(n).expect("rank in range")
}

/// The irreducible with the given per-factor labels.
fn irrep(factors: &[GroupType], labels: &[Weight]) -> FormalChar {
    FormalChar::irreducible(group(factors), Weight::concat(labels))
}

/// C^{a} ⊠ C^{b} ⊠ … over the product of the given factors.
fn standard_product(factors: &[GroupType]) -> FormalChar {
    let labels: Vec<Weight> = factors.iter().map(|g| g.standard()).collect();
    irrep(factors, &labels)
}

fn fmt_label(ws: &[Weight]) -> String {
    ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join("⊗")
}

fn verdict_text(v: &MFVerdict, d: &RepDiagram) -> String {
    match &v.witness {
        None => format!("mf_up_to_bound (bound {})", v.bound),
        Some(w) => format!("not_mf at {}: {} ×{}", w.multiindex.display_for(d), fmt_label(&w.label), w.multiplicity),
    }
}

fn gl_sum_char(n: usize, s: &GLFormalSum) -> Result<FormalChar> {
    let mut out = FormalChar::new(ProductGroup::simple(sl(n)));
    for (lam, m) in s.iter() {
        if lam.len() <= n {
            out.add(partition_to_weight(sl(n), lam, Flavor::Gl)?, m);
        }
    }
    Ok(out)
}

fn dualities() -> Vec<Case> {
    let mut out = Vec::new();
    for n in 2..=4usize {
        for m in 2..=4usize {
            for k in 0..=6u32 {
                out.push(Case::new(
                    format!("sym n={n} m={m} k={k}"),
                    "S^k(C^n⊗C^m) = ⊕_{|λ|=k, ℓ(λ)≤min(n,m)} V(λ)⊠V(λ)",
                    move |ctx: &Ctx| {
                        let rep = standard_product(&[sl(n), sl(m)]);
                        Ok(Outcome::chars(&duality_sym(n, m, k)?, &ctx.oracle.sym_power(&rep, k)?))
                    },
                ));
                out.push(Case::new(
                    format!("skew n={n} m={m} k={k}"),
                    "∧^k(C^n⊗C^m) = ⊕_{|λ|=k, ℓ(λ)≤n, λ₁≤m} V(λ)⊠V(λᵗ)",
                    move |ctx: &Ctx| {
                        if k as usize > n * m {
                            return Ok(Outcome::skip("0", format!("degree {k} exceeds dimension {}", n * m)));
                        }
                        let rep = standard_product(&[sl(n), sl(m)]);
                        Ok(Outcome::chars(&duality_skew(n, m, k)?, &ctx.oracle.ext_power(&rep, k)?))
                    },
                ));
            }
        }
    }
    out
}

fn plethysms() -> Vec<Case> {
    type Closed = fn(usize, u32) -> Result<FormalChar>;
    let forms: [(&str, &str, &[u32], bool, Closed); 4] = [
        ("S2-sym", "S^k(S²C^n) = ⊕ V(λ) over |λ|=2k with even parts", &[2], true, sym_power_s2),
        ("L2-sym", "S^k(∧²C^n) = ⊕ V(λᵗ) over |λ|=2k with even parts", &[1, 1], true, sym_power_l2),
        ("S2-skew", "∧^k(S²C^n) = ⊕ V(λ) over nested (r+1,r−1)-hooks with Σr=k", &[2], false, ext_power_s2),
        ("L2-skew", "∧^k(∧²C^n) = ⊕ V(λ) over nested (r,r)-hooks with Σr=k", &[1, 1], false, ext_power_l2),
    ];
    let mut out = Vec::new();
    for (tag, anchor, shape, sym, f) in forms {
        for n in 2..=5usize {
            for k in 0..=5u32 {
                out.push(Case::new(format!("{tag} n={n} k={k}"), anchor, move |ctx: &Ctx| {
                    let g = sl(n);
                    let rep = irrep(&[g], &[partition_to_weight(g, &p(shape), Flavor::Gl)?]);
                    let oracle = if sym { ctx.oracle.sym_power(&rep, k)? } else { ctx.oracle.ext_power(&rep, k)? };
                    Ok(Outcome::chars(&f(n, k)?, &oracle))
                }));
            }
        }
    }
    for k in 1..=8u32 {
        out.push(Case::new(
            format!("Sk-ext2 k={k}"),
            "∧²(S^k C²) = ⊕_{j=0}^{⌊(k−1)/2⌋} V(2k−2−4j)",
            move |ctx: &Ctx| {
                let rep = irrep(&[sl(2)], &[Weight::from_slice(&[k as i32])]);
                let closed = ext2_symk_sl2(k)?;
                let mut o = Outcome::chars(&closed, &ctx.oracle.ext_power(&rep, 2)?);
                let want = (k as u128 + 1) * k as u128 / 2;
                if closed.dimension() != want {
                    o.status = super::CaseStatus::Fail;
                    o.diff = Some(format!("dimension {} ≠ C(k+1,2) = {want}", closed.dimension()));
                }
                Ok(o)
            },
        ));
    }
    out
}

fn partitions_up_to(size: u32, max_len: usize) -> Vec<Partition> {
    (0..=size).flat_map(|s| Partition::bounded(s, max_len, s.max(1))).collect()
}

fn branching() -> Vec<Case> {
    let mut out = Vec::new();
    for m in [3usize, 5, 7] {
        for lam in partitions_up_to(6, m) {
            out.push(Case::new(
                format!("orth m={m} λ={lam}"),
                "{λ} = Σ_μ (Σ_{β even} c^λ_{μβ}) [μ], then modification of two-column labels",
                move |ctx: &Ctx| {
                    let universal = branch_to_orth(&lam);
                    match specialize_orth(&universal, m) {
                        Ok(c) => Ok(Outcome::chars(&c, &ctx.oracle.restrict_classical(m, RestrictTarget::So, &lam)?)),
                        Err(Error::OrthogonalModification(what)) => Ok(Outcome::skip(
                            universal.to_string(),
                            format!("outside the implemented modification family: {what}"),
                        )),
                        Err(e) => Err(e),
                    }
                },
            ));
        }
    }
    for m in [4usize, 6, 8] {
        for lam in partitions_up_to(6, m) {
            out.push(Case::new(
                format!("symp m={m} λ={lam}"),
                "{λ} = Σ_μ (Σ_{βᵗ even} c^λ_{μβ}) ⟨μ⟩ in the stable range",
                move |ctx: &Ctx| {
                    let universal = branch_to_symp(&lam);
                    match specialize_symp(&universal, m / 2) {
                        Ok(c) => Ok(Outcome::chars(&c, &ctx.oracle.restrict_classical(m, RestrictTarget::Sp, &lam)?)),
                        Err(Error::SymplecticModification(what)) => {
                            Ok(Outcome::skip(universal.to_string(), format!("outside the stable range: {what}")))
                        }
                        Err(e) => Err(e),
                    }
                },
            ));
        }
    }
    for a in 0..=3usize {
        for b in 0..=(6 - 2 * a) {
            out.push(Case::new(
                format!("two-column a={a} b={b}"),
                "{2^a,1^b} = Σ_{i=0}^{a} [2^{a−i},1^b]",
                move |_: &Ctx| {
                    let mut parts = vec![2u32; a];
                    parts.extend(std::iter::repeat_n(1, b));
                    let closed = restrict_two_column_closed_form(a, b);
                    let lr = branch_to_orth(&Partition::new(parts)?);
                    Ok(Outcome::check(closed == lr, closed.to_string(), lr.to_string()))
                },
            ));
        }
    }
    for k in 0..=6u32 {
        for l in 0..=k.min(6 - k) {
            out.push(Case::new(
                format!("symp-two-row k={k} l={l}"),
                "{k,l} = Σ_{i=0}^{l} ⟨k−i,l−i⟩",
                move |_: &Ctx| {
                    let mut closed = UniversalSum::new(UniversalKind::Symp);
                    for i in 0..=l {
                        closed.add(p(&[k - i, l - i]), 1);
                    }
                    let lr = branch_to_symp(&p(&[k, l]));
                    Ok(Outcome::check(closed == lr, closed.to_string(), lr.to_string()))
                },
            ));
        }
    }
    out
}

fn positive_case(e: PositiveEntry, anchor: &str) -> Case {
    let anchor = format!("{anchor}; every component of total degree ≤ {} is multiplicity-free", e.bound);
    Case::new(e.id.clone(), anchor, move |ctx: &Ctx| {
        let v = is_super_mf(ctx.engine, &e.diagram, e.bound)?;
        Ok(Outcome::check(v.is_mf(), format!("mf_up_to_bound (bound {})", e.bound), verdict_text(&v, &e.diagram)))
    })
}

fn positives() -> Vec<Case> {
    let mut out: Vec<Case> = corpus::theorem_positives()
        .into_iter()
        .map(|e| positive_case(e, "proper super space in the classification"))
        .collect();
    out.extend(
        corpus::pure_positives()
            .into_iter()
            .map(|e| positive_case(e, "purely even or purely odd reducible space in the classification")),
    );
    out
}

fn witness_case(e: WitnessEntry) -> Case {
    Case::new(e.id.clone(), e.anchor.clone(), move |ctx: &Ctx| {
        let d = &e.diagram;
        let c = graded_component(ctx.engine, d, &e.index)?;
        let at = e.index.display_for(d);
        let printed = c.get(&Weight::concat(&e.label));
        let repeated = c.repeated();
        let top = repeated.iter().map(|(_, m)| *m).max().unwrap_or(1);
        let expected = format!("{} at {at}: {} with multiplicity ≥ 2", e.printed, fmt_label(&e.label));
        let mut computed = format!(
            "component {at} of dimension {} has {} repeated labels (max multiplicity {top}); {} occurs {printed} times",
            c.dimension(),
            repeated.len(),
            fmt_label(&e.label)
        );
        let mut o = Outcome::check(!repeated.is_empty() && printed >= 2, expected, "");
        if let Some((text, fixed)) = &e.corrected {
            let m = c.get(&Weight::concat(fixed));
            computed.push_str(&format!("; the repeated label is {text} = {} with multiplicity {m}", fmt_label(fixed)));
            if printed < 2 {
                o.diff = Some(format!("printed label is a misprint; {text} repeats instead"));
            }
        }
        o.computed = computed;
        Ok(o)
    })
}

fn mf_case(id: &str, anchor: &str, d: RepDiagram, bound: u32) -> Case {
    positive_case(PositiveEntry { id: id.to_string(), diagram: d, bound }, anchor)
}

fn simple_negatives() -> Vec<Case> {
    let mut out = Vec::new();
    out.push(mf_case(
        "A-1a",
        "even C^n ⊞ odd C^n",
        diagram("A-1a", &["SL(4)"], &["even U = G1:std", "odd W = G1:std"]),
        6,
    ));
    out.push(mf_case(
        "A-2a",
        "even S²C^n ⊞ odd C^n",
        diagram("A-2a", &["SL(3)"], &["even U = G1:part(2)", "odd W = G1:std"]),
        6,
    ));
    for k in 0..=4u32 {
        for l in 0..=3u32 {
            out.push(Case::new(
                format!("A-2a pieri k={k} l={l}"),
                "P^(k|l)(S²C^n ⊞ C^n) = (⊕_{|λ|=2k, λ even} V(λ)) ⊗ V(1^l), summands separated by vertical strips",
                move |ctx: &Ctx| {
                    let n = 3usize;
                    let d = diagram("A-2a", &["SL(3)"], &["even U = G1:part(2)", "odd W = G1:std"]);
                    let mut formula = FormalChar::new(d.group());
                    for lam in Partition::bounded(2 * k, n, 2 * k).into_iter().filter(|x| x.all_parts_even()) {
                        for mu in lam.add_vertical_strip(l, n) {
                            formula.add(partition_to_weight(sl(n), &mu, Flavor::Gl)?, 1);
                        }
                    }
                    let c = graded_component(ctx.engine, &d, &MultiIndex(vec![k, l]))?;
                    let mut o = Outcome::chars(&formula, &c);
                    if c.max_multiplicity() > 1 {
                        o.status = super::CaseStatus::Fail;
                        o.diff = Some("component is not multiplicity-free".into());
                    }
                    Ok(o)
                },
            ));
        }
    }
    out.push(mf_case(
        "C-1b",
        "even C⁴ ⊞ odd ∧²₀C⁴ for Sp(4)",
        diagram("C-1b", &["Sp(4)"], &["even U = G1:std", "odd W = G1:[0,1]"]),
        6,
    ));
    for k in 2..=5u32 {
        for l in 1..=4u32 {
            out.push(Case::new(
                format!("C-1b k={k} l={l}"),
                "P^(k|1) = P^(k|4) = ⟨k+1,1⟩+⟨k−1,1⟩+⟨k⟩; P^(k|2) = P^(k|3) = ⟨k+2⟩+⟨k+1,1⟩+⟨k⟩+⟨k,2⟩+⟨k−1,1⟩+⟨k−2⟩",
                move |ctx: &Ctx| {
                    let d = diagram("C-1b", &["Sp(4)"], &["even U = G1:std", "odd W = G1:[0,1]"]);
                    let terms: Vec<Vec<u32>> = if l == 1 || l == 4 {
                        vec![vec![k + 1, 1], vec![k - 1, 1], vec![k]]
                    } else {
                        vec![vec![k + 2], vec![k + 1, 1], vec![k], vec![k, 2], vec![k - 1, 1], vec![k - 2]]
                    };
                    let g = GroupType::sp(4)?;
                    let mut formula = FormalChar::new(d.group());
                    for t in terms {
                        formula.add(partition_to_weight(g, &Partition::new(t)?, Flavor::Sp)?, 1);
                    }
                    Ok(Outcome::chars(&formula, &graded_component(ctx.engine, &d, &MultiIndex(vec![k, l]))?))
                },
            ));
        }
    }
    out.extend(corpus::simple_witnesses().into_iter().map(witness_case));
    out
}

fn product_negatives() -> Vec<Case> {
    let mut out: Vec<Case> = corpus::product_witnesses().into_iter().map(witness_case).collect();

    let variants: [(&str, [&str; 3]); 4] = [
        ("U,W even; X odd", ["even", "even", "odd"]),
        ("U even; W,X odd", ["even", "odd", "odd"]),
        ("U,W odd; X even", ["odd", "odd", "even"]),
        ("U odd; W,X even", ["odd", "even", "even"]),
    ];
    for (tag, par) in variants {
        for k in 1..=2u32 {
            for l in 1..=2u32 {
                let id = format!("sl-diagrams k={k} l={l} {tag}");
                let subs = [
                    format!("{} U = G1:part({k})", par[0]),
                    format!("{} W = G2:part({l})", par[1]),
                    format!("{} X = G1:std * G2:std", par[2]),
                ];
                let s: Vec<&str> = subs.iter().map(|s| s.as_str()).collect();
                let d = diagram(&id, &["SL(2)", "SL(2)"], &s);
                let lab = label(&d, &[&format!("({},1)", k + 1), &format!("({},1)", l + 1)]);
                out.push(witness_case(WitnessEntry {
                    anchor: "{k}⊗{l}·({2}⊗{1²}+{1²}⊗{2}) contains {k+1,1}⊗{l+1,1} twice".into(),
                    id,
                    diagram: d,
                    index: MultiIndex(vec![1, 1, 2]),
                    printed: format!("2·{{{},1}}⊗{{{},1}}", k + 1, l + 1),
                    label: lab,
                    corrected: None,
                }));
            }
        }
    }

    let two = |n: u32, idx: u32, printed: &str, lab: [&str; 2]| {
        let id = format!("two-factors-on-both n=m={n}");
        let d = diagram(
            &id,
            &[&format!("SL({n})"), &format!("SL({n})")],
            &["even X = G1:std * G2:std", "odd Y = G1:std * G2:std"],
        );
        let label = label(&d, &lab);
        witness_case(WitnessEntry {
            anchor: "C^n⊗C^m ⊞ C^n⊗C^m always has a repeated constituent".into(),
            id,
            diagram: d,
            index: MultiIndex(vec![idx, idx]),
            printed: printed.into(),
            label,
            corrected: None,
        })
    };
    out.push(two(2, 2, "2·{0}⊗{2}", ["()", "(2)"]));
    out.push(two(3, 3, "2·{3,2,1}⊗{3,2,1}", ["(3,2,1)", "(3,2,1)"]));

    for n in 2..=3usize {
        for k in 0..=3u32 {
            for l in 0..=3u32 {
                out.push(Case::new(
                    format!("local n=m={n} k={k} l={l}"),
                    "P^(k|l)(C^n⊗C^m ⊞ C^n⊗C^m) = ⊕_{λ,μ} (V_λ⊗V_μ) ⊠ (V_λ⊗V_{μᵗ})",
                    move |ctx: &Ctx| {
                        let rep = standard_product(&[sl(n), sl(n)]);
                        let formula = ctx.engine.tensor_chars(&duality_sym(n, n, k)?, &duality_skew(n, n, l)?)?;
                        let oracle =
                            ctx.oracle.tensor(&ctx.oracle.sym_power(&rep, k)?, &ctx.oracle.ext_power(&rep, l)?)?;
                        Ok(Outcome::chars(&formula, &oracle))
                    },
                ));
            }
        }
    }
    out
}

fn big_mama() -> Vec<Case> {
    let mut out = Vec::new();
    let chain = ["even U = G1:std * G2:std", "odd W = G2:std * G3:std"];
    for n in 2..=3u32 {
        for m in 2..=3u32 {
            let id = format!("p=2 n={n} m={m}");
            let d = diagram(&id, &[&format!("SL({n})"), "SL(2)", &format!("SL({m})")], &chain);
            out.push(mf_case(&id, "C^n⊗C^p ⊞ C^p⊗C^m with p = 2", d, 6));
        }
    }
    for n in 2..=3usize {
        for m in 2..=3usize {
            for k in 0..=4u32 {
                for l in 0..=4u32 {
                    out.push(Case::new(
                        format!("p=2 formula n={n} m={m} k={k} l={l}"),
                        "P^(k|l) = (⊕_i V(k−i,i)⊗V(k−2i)⊗C) ⊗ (⊕_j C⊗V(l−2j)⊗V(2^j,1^{l−2j}))",
                        move |ctx: &Ctx| {
                            let d = diagram(
                                "p=2",
                                &[&format!("SL({n})"), "SL(2)", &format!("SL({m})")],
                                &["even U = G1:std * G2:std", "odd W = G2:std * G3:std"],
                            );
                            let g = d.groups();
                            let mut left = FormalChar::new(d.group());
                            for i in 0..=k / 2 {
                                let lam = p(&[k - i, i]);
                                if lam.len() > n {
                                    continue;
                                }
                                let w = [
                                    partition_to_weight(g[0], &lam, Flavor::Gl)?,
                                    Weight::from_slice(&[(k - 2 * i) as i32]),
                                    Weight::zero(g[2].rank()),
                                ];
                                left.add(Weight::concat(&w), 1);
                            }
                            let mut right = FormalChar::new(d.group());
                            for j in 0..=l / 2 {
                                if (l - j) as usize > m {
                                    continue;
                                }
                                let mut col = vec![2u32; j as usize];
                                col.extend(std::iter::repeat_n(1, (l - 2 * j) as usize));
                                let w = [
                                    Weight::zero(g[0].rank()),
                                    Weight::from_slice(&[(l - 2 * j) as i32]),
                                    partition_to_weight(g[2], &Partition::new(col)?, Flavor::Gl)?,
                                ];
                                right.add(Weight::concat(&w), 1);
                            }
                            let formula = ctx.engine.tensor_chars(&left, &right)?;
                            let c = graded_component(ctx.engine, &d, &MultiIndex(vec![k, l]))?;
                            let mut o = Outcome::chars(&formula, &c);
                            if c.max_multiplicity() > 1 {
                                o.status = super::CaseStatus::Fail;
                                o.diff = Some("component is not multiplicity-free".into());
                            }
                            Ok(o)
                        },
                    ));
                }
            }
        }
    }
    out.push(Case::new("p=3 lr", "V(2,1)⊗V(2,1) = 2·V(3,2,1) ⊕ …", |_: &Ctx| {
        let c = lr_coeff(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1]));
        Ok(Outcome::check(c == 2, "c^{(3,2,1)}_{(2,1),(2,1)} = 2", format!("{c}")))
    }));
    out.push(Case::new("p=3 first witness", "C²⊗C³ ⊞ C³⊗C² first repeats at (3|3)", |ctx: &Ctx| {
        let d = diagram("p=3", &["SL(2)", "SL(3)", "SL(2)"], &["even U = G1:std * G2:std", "odd W = G2:std * G3:std"]);
        let v = is_super_mf(ctx.engine, &d, 6)?;
        let at = v.witness.as_ref().map(|w| w.multiindex.clone());
        Ok(Outcome::check(
            at == Some(MultiIndex(vec![3, 3])),
            "not_mf with first witness at (3|3)",
            verdict_text(&v, &d),
        ))
    }));
    for (n, m) in [(2u32, 2u32), (3, 3)] {
        let id = format!("p=3 n={n} m={m}");
        let d = diagram(&id, &[&format!("SL({n})"), "SL(3)", &format!("SL({m})")], &chain);
        let lab = label(&d, &["(2,1)", "(3,2,1)", "(2,1)"]);
        out.push(witness_case(WitnessEntry {
            anchor: "(V(2,1)⊗V(2,1)⊗C ⊕ …)⊗(C⊗V(2,1)⊗V(2,1) ⊕ …) contains V(3,2,1) in the middle twice".into(),
            id,
            diagram: d,
            index: MultiIndex(vec![3, 3]),
            printed: "2·{2,1}⊗{3,2,1}⊗{2,1}".into(),
            label: lab,
            corrected: None,
        }));
    }
    out
}

/// Sum of multiplicities per label of one factor.
fn project(c: &FormalChar, factor: usize) -> BTreeMap<Weight, u64> {
    let mut out = BTreeMap::new();
    for (w, m) in c.iter() {
        *out.entry(c.factor_labels(w)[factor].clone()).or_insert(0) += m;
    }
    out
}

fn distinctness() -> Vec<Case> {
    let mut out = Vec::new();
    for n in 2..=3usize {
        for k in 0..=8u32 {
            out.push(Case::new(
                format!("sp-good n={n} k={k}"),
                "S^k(C^{2n}⊗C²) = ⊕_{i≤k/2} ⊕_{j≤i} ⟨k−i−j, i−j⟩ ⊠ {k−2i}, Sp labels pairwise distinct",
                move |ctx: &Ctx| {
                    let g = [GroupType::sp(2 * n)?, sl(2)];
                    let mut formula = FormalChar::new(group(&g));
                    for i in 0..=k / 2 {
                        for j in 0..=i {
                            let spl = partition_to_weight(g[0], &p(&[k - i - j, i - j]), Flavor::Sp)?;
                            formula.add(Weight::concat(&[spl, Weight::from_slice(&[(k - 2 * i) as i32])]), 1);
                        }
                    }
                    let oracle = ctx.oracle.sym_power(&standard_product(&g), k)?;
                    let mut o = Outcome::chars(&formula, &oracle);
                    let dup = project(&oracle, 0).into_iter().find(|(_, m)| *m > 1);
                    if let Some((w, m)) = dup {
                        o.status = super::CaseStatus::Fail;
                        o.diff = Some(format!("Sp label {w} occurs {m} times"));
                    }
                    Ok(o)
                },
            ));
        }
    }
    for n in 1..=3usize {
        let dim = 2 * (2 * n + 1);
        for l in 0..=dim as u32 {
            out.push(Case::new(
                format!("so-good n={n} l={l}"),
                "M_l = ⊕_{λ ∈ P_l} Res V(λᵗ) to SO(2n+1) is multiplicity-free",
                move |ctx: &Ctx| {
                    let m = 2 * n + 1;
                    let so = GroupType::so(m)?;
                    let oracle = ctx.oracle.ext_power(&standard_product(&[sl(2), so]), l)?;
                    let projected = project(&oracle, 1);
                    let mut via_duality: BTreeMap<Weight, u64> = BTreeMap::new();
                    for lam in Partition::bounded(l, 2, m as u32) {
                        let res = ctx.oracle.restrict_classical(m, RestrictTarget::So, &lam.conjugate())?;
                        for (w, c) in res.iter() {
                            *via_duality.entry(w.clone()).or_insert(0) += c;
                        }
                    }
                    let fmt = |x: &BTreeMap<Weight, u64>| {
                        x.iter().map(|(w, c)| format!("{c}·{w}")).collect::<Vec<_>>().join(" + ")
                    };
                    let mf = projected.values().all(|&c| c == 1);
                    let mut o = Outcome::check(mf && projected == via_duality, fmt(&via_duality), fmt(&projected));
                    if !mf {
                        o.diff = Some("an SO label repeats".into());
                    } else if projected != via_duality {
                        o.diff = Some("projection differs from the restricted skew duality".into());
                    }
                    Ok(o)
                },
            ));
        }
    }
    let chain = ["even U = G1:std * G2:std", "odd W = G2:std * G3:std"];
    for n in 2..=3u32 {
        let left = format!("Sp({})", 2 * n);
        let id = format!("verdict c2 [{left},SL(2),SL(2)]");
        out.push(mf_case(&id, "Sp(2n)⊗C² ⊞ C²⊗C^m", diagram(&id, &[&left, "SL(2)", "SL(2)"], &chain), 6));
    }
    for m in 1..=3u32 {
        let right = format!("SO({})", 2 * m + 1);
        let id = format!("verdict c3 [SL(2),SL(2),{right}]");
        out.push(mf_case(&id, "C^n⊗C² ⊞ C²⊗C^{2m+1}", diagram(&id, &["SL(2)", "SL(2)", &right], &chain), 6));
        for n in 2..=3u32 {
            let left = format!("Sp({})", 2 * n);
            let id = format!("verdict c4 [{left},SL(2),{right}]");
            out.push(mf_case(&id, "C^{2n}⊗C² ⊞ C²⊗C^{2m+1}", diagram(&id, &[&left, "SL(2)", &right], &chain), 6));
        }
    }
    out
}

/// {k+l+1} + 2·Σ_{i<l} {k+l−i,i+1} + [l<k]{k,l+1} + Σ_{i=1}^{l} {k+l−i,i,1}.
fn three_tensor_formula(k: u32, l: u32) -> GLFormalSum {
    let mut s = GLFormalSum::new(None);
    s.add(p(&[k + l + 1]), 1);
    for i in 0..l {
        s.add(p(&[k + l - i, i + 1]), 2);
    }
    if l < k {
        s.add(p(&[k, l + 1]), 1);
    }
    for i in 1..=l {
        s.add(p(&[k + l - i, i, 1]), 1);
    }
    s
}

fn three_factor() -> Vec<Case> {
    let mut out = Vec::new();
    for k in 1..=4u32 {
        for l in 1..=k {
            out.push(Case::new(
                format!("three-tensor k={k} l={l}"),
                "{1}·{l}·{k} = {k+l+1} + 2·Σ_{i<l}{k+l−i,i+1} + δ_{l<k}{k,l+1} + Σ_{i=1}^{l}{k+l−i,i,1}",
                move |ctx: &Ctx| {
                    let formula = three_tensor_formula(k, l);
                    let one = GLFormalSum::single(p(&[1]), None);
                    let lr = schur_multiply(
                        &schur_multiply(&one, &GLFormalSum::single(p(&[l]), None))?,
                        &GLFormalSum::single(p(&[k]), None),
                    )?;
                    if lr != formula {
                        return Ok(Outcome::check(
                            false,
                            format!("{:?}", formula.terms()),
                            format!("{:?}", lr.terms()),
                        ));
                    }
                    for n in [2usize, 3] {
                        let g = sl(n);
                        let v = |x: u32| {
                            FormalChar::irreducible(
                                ProductGroup::simple(g),
                                partition_to_weight(g, &p(&[x]), Flavor::Gl).expect("row"),
                            )
                        };
                        let oracle = ctx.oracle.tensor(&ctx.oracle.tensor(&v(1), &v(l))?, &v(k))?;
                        let expected = gl_sum_char(n, &formula)?;
                        let o = Outcome::chars(&expected, &oracle);
                        if o.status != super::CaseStatus::Pass {
                            return Ok(o);
                        }
                    }
                    Ok(Outcome::check(
                        formula.max_multiplicity() == 2,
                        "formula = schur_multiply = oracle on SL(2), SL(3); multiplicity 2 present",
                        "all three agree",
                    ))
                },
            ));
        }
    }
    out.push(Case::new(
        "ext3 of C²⊗C²⊗C²",
        "∧³(C²⊗C²⊗C²) = {1}⊗{1}⊗{1} + {1}⊗{1}⊗{3} + {1}⊗{3}⊗{1} + {3}⊗{1}⊗{1}",
        |ctx: &Ctx| {
            let g = [sl(2), sl(2), sl(2)];
            let mut want = FormalChar::new(group(&g));
            for lab in [[1, 1, 1], [1, 1, 3], [1, 3, 1], [3, 1, 1]] {
                want.add(Weight::from_slice(&lab), 1);
            }
            Ok(Outcome::chars(&want, &ctx.oracle.ext_power(&standard_product(&g), 3)?))
        },
    ));
    for k in 1..=4u32 {
        for (tag, subs, idx) in [
            ("even", ["even U = G1:part(K)", "odd X = G1:std * G2:std * G3:std"], vec![1u32, 3]),
            ("odd", ["odd U = G1:part(K)", "odd X = G1:std * G2:std * G3:std"], vec![1, 3]),
        ] {
            let id = format!("sym{k} {tag} + C²⊗C²⊗C²");
            let subs: Vec<String> = subs.iter().map(|s| s.replace('K', &k.to_string())).collect();
            let s: Vec<&str> = subs.iter().map(|s| s.as_str()).collect();
            let d = diagram(&id, &["SL(2)", "SL(2)", "SL(2)"], &s);
            let (printed, lab) = if k >= 2 {
                (format!("2·{{{}}}⊗{{1}}⊗{{1}}", k - 1), format!("({})", k - 1))
            } else {
                ("2·{2}⊗{1}⊗{1}".to_string(), "(2)".to_string())
            };
            let label = label(&d, &[&lab, "(1)", "(1)"]);
            out.push(witness_case(WitnessEntry {
                anchor: "P^1(S^k C²) ⊗ P^3(C²⊗C²⊗C²) carries multiplicity 2".into(),
                id,
                diagram: d,
                index: MultiIndex(idx),
                printed,
                label,
                corrected: None,
            }));
        }
    }
    let triples: [(&str, &str, [&str; 3]); 7] = [
        ("SL(2) odd std,std,std", "SL(2)", ["odd A = G1:std", "odd B = G1:std", "odd C = G1:std"]),
        ("SL(2) odd std,std,sym2", "SL(2)", ["odd A = G1:std", "odd B = G1:std", "odd C = G1:part(2)"]),
        ("SL(2) odd std,std,sym3", "SL(2)", ["odd A = G1:std", "odd B = G1:std", "odd C = G1:part(3)"]),
        ("SL(3) odd std,std,sym2", "SL(3)", ["odd A = G1:std", "odd B = G1:std", "odd C = G1:part(2)"]),
        ("SO(5) odd std,std,std", "SO(5)", ["odd A = G1:std", "odd B = G1:std", "odd C = G1:std"]),
        ("SL(2) even std; odd std,sym2", "SL(2)", ["even A = G1:std", "odd B = G1:std", "odd C = G1:part(2)"]),
        ("SL(2) even std,std; odd sym2", "SL(2)", ["even A = G1:std", "even B = G1:std", "odd C = G1:part(2)"]),
    ];
    for (id, g, subs) in triples {
        let id = format!("ex-three {id}");
        out.push(Case::new(id.clone(), "P^(1,1,1) = V₁⊗V₂⊗V₃ already repeats", move |ctx: &Ctx| {
            let d = diagram(&id, &[g], &subs);
            let v = is_super_mf(ctx.engine, &d, 3)?;
            let at = v.witness.as_ref().map(|w| w.multiindex.clone());
            Ok(Outcome::check(
                at == Some(MultiIndex(vec![1, 1, 1])),
                "first witness at multi-index (1,1,1)",
                verdict_text(&v, &d),
            ))
        }));
    }
    out
}

fn closure() -> Vec<Case> {
    let bound = 5;
    let mut diagrams: Vec<(String, RepDiagram)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for e in corpus::theorem_positives().into_iter().chain(corpus::pure_positives()) {
        let minimal = e.diagram.groups().iter().all(|g| g.rank() <= 2);
        if minimal && seen.insert(e.diagram.shape()) {
            diagrams.push((e.id, e.diagram));
        }
    }
    let mut out = Vec::new();
    for (id, d) in diagrams {
        let dd = d.clone();
        out.push(Case::new(
            format!("subgraph {id}"),
            "a subdiagram of a multiplicity-free diagram is multiplicity-free",
            move |ctx: &Ctx| {
                let parent = is_super_mf(ctx.engine, &dd, bound)?;
                let subs = subdiagrams(&dd);
                let mut bad = Vec::new();
                for s in &subs {
                    let v = is_super_mf(ctx.engine, s, bound)?;
                    if parent.is_mf() && !v.is_mf() {
                        bad.push(format!(
                            "{}: {}",
                            crate::dsl::render_diagram(s).replace('\n', "; "),
                            verdict_text(&v, s)
                        ));
                    }
                }
                Ok(Outcome::check(
                    parent.is_mf() && bad.is_empty(),
                    format!("parent and all subdiagrams mf_up_to_bound (bound {bound})"),
                    if bad.is_empty() {
                        format!("parent {}; {} subdiagrams all mf_up_to_bound", verdict_text(&parent, &dd), subs.len())
                    } else {
                        bad.join(" | ")
                    },
                ))
            },
        ));
        out.push(Case::new(
            format!("dual-flip {id}"),
            "V ⊕ W is multiplicity-free exactly when V ⊕ W* is",
            move |ctx: &Ctx| {
                let base = is_super_mf(ctx.engine, &d, bound)?;
                let mut diffs = Vec::new();
                let n = d.submodules().len();
                for mask in 1u32..(1 << n) {
                    let mut f = d.clone();
                    for i in (0..n).filter(|i| mask & (1 << i) != 0) {
                        f = dual_flip(&f, i)?;
                    }
                    let v = is_super_mf(ctx.engine, &f, bound)?;
                    if v.status != base.status {
                        diffs.push(format!("flip mask {mask:b}: {}", verdict_text(&v, &f)));
                    }
                }
                Ok(Outcome::check(
                    diffs.is_empty(),
                    format!("every flip agrees with {}", verdict_text(&base, &d)),
                    if diffs.is_empty() { format!("{} flips agree", (1u32 << n) - 1) } else { diffs.join(" | ") },
                ))
            },
        ));
    }
    for (id, g, subs) in [
        ("SL(3) std ⊞ sym2 flips", "SL(3)", ["even U = G1:std", "odd W = G1:part(2)"]),
        ("G2 std ⊞ std flips", "G2", ["even U = G1:std", "odd W = G1:std"]),
    ] {
        out.push(Case::new(
            format!("dual-flip negative {id}"),
            "V ⊕ W is multiplicity-free exactly when V ⊕ W* is",
            move |ctx: &Ctx| {
                let d = diagram(id, &[g], &subs);
                let base = is_super_mf(ctx.engine, &d, bound)?;
                let flipped = is_super_mf(ctx.engine, &dual_flip(&d, 1)?, bound)?;
                Ok(Outcome::check(base.status == flipped.status, verdict_text(&base, &d), verdict_text(&flipped, &d)))
            },
        ));
    }
    out
}
