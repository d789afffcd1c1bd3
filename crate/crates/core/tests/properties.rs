mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use supermf_core::charengine::{binomial, multichoose};
use supermf_core::dsl::{parse_diagram, render_diagram};
use supermf_core::lr::{lr_coeff, schur_multiply, GLFormalSum};
use supermf_core::partitions::{nested_hooks, HookKind};
use supermf_core::rootdata::{dimension, partition_to_weight, weight_to_partition};
use supermf_core::superalg::{
    dual_flip, graded_component, is_super_mf, subdiagrams, submodule_power, Factor, Submodule,
};
use supermf_core::universal::{
    branch_to_orth, branch_to_symp, restrict_two_column_closed_form, specialize_orth, specialize_symp,
};
use supermf_core::{
    Engine, Flavor, FormalChar, GroupType, MultiIndex, Parity, Partition, PowerKind, ProductGroup, RepDiagram,
    RestrictTarget, Weight,
};

fn engine() -> &'static Engine {
    Engine::global()
}

fn partition(max_size: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=5, 0..=5).prop_filter_map("too large", move |mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        (v.iter().sum::<u32>() <= max_size).then(|| Partition::of(&v))
    })
}

fn small_group() -> impl Strategy<Value = GroupType> {
    prop_oneof![
        (2usize..=4).prop_map(|n| GroupType::sl(n).unwrap()),
        Just(GroupType::sp(4).unwrap()),
        Just(GroupType::sp(6).unwrap()),
        Just(GroupType::so(5).unwrap()),
        Just(GroupType::so(7).unwrap()),
        Just(GroupType::so(8).unwrap()),
        Just(GroupType::g2()),
    ]
}

fn group_and_weight(max_coord: i32) -> impl Strategy<Value = (GroupType, Weight)> {
    small_group().prop_flat_map(move |g| {
        prop::collection::vec(0..=max_coord, g.rank())
            .prop_filter("keeps dimensions small", move |c| c.iter().sum::<i32>() <= max_coord)
            .prop_map(move |c| (g, Weight::from_slice(&c)))
    })
}

/// Weights of a diagram entry: trivial, standard, or twice the first fundamental weight.
fn entry(g: GroupType) -> impl Strategy<Value = Weight> {
    let std = g.standard();
    prop_oneof![3 => Just(Weight::zero(g.rank())), 4 => Just(std.clone()), 1 => Just(std.scale(2))]
}

fn diagram(max_factors: usize, max_subs: usize) -> impl Strategy<Value = RepDiagram> {
    let groups = prop::collection::vec(
        prop_oneof![
            Just(GroupType::sl(2).unwrap()),
            Just(GroupType::sl(3).unwrap()),
            Just(GroupType::sp(4).unwrap()),
            Just(GroupType::g2()),
        ],
        1..=max_factors,
    );
    groups.prop_flat_map(move |gs| {
        let sub = (gs.iter().map(|&g| entry(g)).collect::<Vec<_>>(), any::<bool>(), any::<bool>());
        (Just(gs), prop::collection::vec(sub, 1..=max_subs)).prop_filter_map("invalid diagram", |(gs, subs)| {
            let subs = subs
                .into_iter()
                .enumerate()
                .map(|(i, (ws, odd, dual))| {
                    let s = Submodule::new(&format!("M{}", i + 1), if odd { Parity::Odd } else { Parity::Even }, ws);
                    if dual {
                        s.dualized()
                    } else {
                        s
                    }
                })
                .collect();
            RepDiagram::with_groups("random", &gs, subs).ok().filter(|d| d.is_connected())
        })
    })
}

fn conjugate_set(s: &BTreeSet<Partition>) -> BTreeSet<Partition> {
    s.iter().map(|p| p.conjugate()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn conjugate_is_a_size_preserving_involution(l in partition(20)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }

    #[test]
    fn strips_add_exactly_l_boxes(l in partition(10), k in 0u32..=4, cap in 1usize..=6) {
        for s in [l.add_vertical_strip(k, cap), l.add_horizontal_strip(k, cap)] {
            for mu in s {
                prop_assert_eq!(mu.size(), l.size() + k);
                prop_assert!(mu.contains(&l));
                prop_assert!(mu.len() <= cap);
            }
        }
    }

    #[test]
    fn vertical_strips_are_transposed_horizontal_strips(l in partition(10), k in 0u32..=4, cap in 1usize..=6) {
        let wide = 64;
        prop_assert_eq!(l.add_vertical_strip(k, wide), conjugate_set(&l.conjugate().add_horizontal_strip(k, wide)));
        let capped: BTreeSet<Partition> = l.add_vertical_strip(k, wide).into_iter().filter(|m| m.len() <= cap).collect();
        prop_assert_eq!(l.add_vertical_strip(k, cap), capped);
    }

    #[test]
    fn lr_symmetries(lam in partition(7), mu in partition(4), nu in partition(4)) {
        let c = lr_coeff(&lam, &mu, &nu);
        prop_assert_eq!(c, lr_coeff(&lam, &nu, &mu));
        prop_assert_eq!(c, lr_coeff(&lam.conjugate(), &mu.conjugate(), &nu.conjugate()));
        if lam.size() != mu.size() + nu.size() {
            prop_assert_eq!(c, 0);
        }
    }

    #[test]
    fn lr_dimension_identity(mu in partition(4), nu in partition(4), n in 2u32..=4) {
        let dim = |p: &Partition| common::ssyt_count(p.parts(), n) as u128;
        let total: u128 = Partition::all_of_size(mu.size() + nu.size())
            .iter()
            .map(|lam| lr_coeff(lam, &mu, &nu) as u128 * dim(lam))
            .sum();
        prop_assert_eq!(total, dim(&mu) * dim(&nu));
    }

    #[test]
    fn pieri_rules(mu in partition(6), k in 0u32..=4, cap in 1usize..=5) {
        let by = |p: Partition| schur_multiply(&GLFormalSum::single(mu.clone(), Some(cap)), &GLFormalSum::single(p, Some(cap))).unwrap();
        let keys = |s: &GLFormalSum| s.iter().map(|(p, m)| { assert_eq!(m, 1); p.clone() }).collect::<BTreeSet<_>>();
        let row = Partition::new(if k == 0 { vec![] } else { vec![k] }).unwrap();
        let column = Partition::of(&vec![1; k as usize]);
        if mu.len() <= cap {
            prop_assert_eq!(keys(&by(row)), mu.add_horizontal_strip(k, cap));
            if column.len() <= cap {
                prop_assert_eq!(keys(&by(column)), mu.add_vertical_strip(k, cap));
            }
        }
    }

    #[test]
    fn gl_dimension_counts_tableaux(l in partition(6), n in 2usize..=5) {
        prop_assume!(l.len() < n);
        let g = GroupType::sl(n).unwrap();
        let w = partition_to_weight(g, &l, Flavor::Gl).unwrap();
        prop_assert_eq!(dimension(g, &w), common::ssyt_count(l.parts(), n as u32) as u128);
    }

    #[test]
    fn partition_dictionary_round_trips(l in partition(8), pick in 0usize..5) {
        let (g, flavor) = [
            (GroupType::sl(5).unwrap(), Flavor::Gl),
            (GroupType::sp(6).unwrap(), Flavor::Sp),
            (GroupType::so(7).unwrap(), Flavor::So),
            (GroupType::so(9).unwrap(), Flavor::So),
            (GroupType::so(8).unwrap(), Flavor::So),
        ][pick];
        // a full column is the trivial SL(n) weight, so only shorter labels are valid there
        prop_assume!(flavor != Flavor::Gl || l.len() < 5);
        if let Ok(w) = partition_to_weight(g, &l, flavor) {
            prop_assert_eq!(weight_to_partition(g, &w, flavor), Some(l));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weight_systems_are_weyl_symmetric((g, w) in group_and_weight(2)) {
        let ws = engine().weight_multiplicities(g, &w).unwrap();
        prop_assert!(ws.is_weyl_symmetric());
        prop_assert_eq!(ws.total(), dimension(g, &w));
    }

    #[test]
    fn tensor_products_keep_dimension((g, w1) in group_and_weight(2), seed in prop::collection::vec(0..=1i32, 8)) {
        let w2 = Weight::from_slice(&seed[..g.rank()]);
        let t = engine().tensor(g, &w1, &w2).unwrap();
        prop_assert_eq!(t.dimension(), dimension(g, &w1) * dimension(g, &w2));
    }

    #[test]
    fn powers_have_binomial_dimensions((g, w) in group_and_weight(1), k in 0u32..=4) {
        let d = dimension(g, &w);
        prop_assume!(d <= 27);
        let rep = FormalChar::irreducible(ProductGroup::simple(g), w);
        let s = engine().power(&rep, k, PowerKind::Sym).unwrap();
        prop_assert_eq!(s.dimension(), multichoose(d, k as u128).unwrap());
        let e = engine().power(&rep, k, PowerKind::Ext).unwrap();
        prop_assert_eq!(e.dimension(), binomial(d, k as u128).unwrap());
    }

    #[test]
    fn top_exterior_power_is_a_line((g, w) in group_and_weight(1)) {
        let d = dimension(g, &w);
        prop_assume!(d <= 14);
        let rep = FormalChar::irreducible(ProductGroup::simple(g), w);
        let top = engine().ext_power(&rep, d as u32).unwrap();
        prop_assert_eq!(top.dimension(), 1);
        prop_assert!(engine().ext_power(&rep, d as u32 + 1).unwrap().is_empty());
    }

    #[test]
    fn orthogonal_specialization_matches_restriction(l in partition(6), m in prop::sample::select(vec![3usize, 5, 7])) {
        let restricted = engine().restrict_classical(m, RestrictTarget::So, &l).unwrap();
        prop_assert_eq!(restricted.dimension(), common::ssyt_count(l.parts(), m as u32) as u128);
        match specialize_orth(&branch_to_orth(&l), m) {
            Ok(s) => prop_assert_eq!(s, restricted),
            Err(e) => prop_assume!(false, "outside the implemented modification family: {}", e),
        }
    }

    #[test]
    fn symplectic_specialization_matches_restriction(l in partition(6), n in 2usize..=3) {
        prop_assume!(l.len() <= n);
        let restricted = engine().restrict_classical(2 * n, RestrictTarget::Sp, &l).unwrap();
        prop_assert_eq!(specialize_symp(&branch_to_symp(&l), n).unwrap(), restricted);
    }

    #[test]
    fn two_column_closed_form(a in 0usize..=3, b in 0usize..=6) {
        prop_assume!(a + b <= 6);
        let mut parts = vec![2u32; a];
        parts.extend(vec![1; b]);
        prop_assert_eq!(restrict_two_column_closed_form(a, b), branch_to_orth(&Partition::of(&parts)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_inverts_render(d in diagram(3, 3)) {
        let text = render_diagram(&d);
        let back = parse_diagram(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(render_diagram(&back), text);
    }

    #[test]
    fn parse_error_spans_stay_in_bounds(d in diagram(2, 2), at in any::<prop::sample::Index>(), junk in "[\\[\\]:*=()a-z0-9 ,\n]{1,3}") {
        let text = render_diagram(&d);
        let cut = at.index(text.len() + 1);
        let cut = (0..=cut).rev().find(|&i| text.is_char_boundary(i)).unwrap();
        for broken in [format!("{}{}{}", &text[..cut], junk, &text[cut..]), text[..cut].to_string()] {
            if let Err(e) = parse_diagram(&broken) {
                prop_assert!(e.span.start <= e.span.end && e.span.end <= broken.len(), "{:?} in {:?}", e.span, broken);
                prop_assert!(e.span.line >= 1 && e.span.line <= broken.lines().count().max(1) + 1);
            }
        }
    }
}

fn flipped_parity(d: &RepDiagram, j: usize) -> RepDiagram {
    let mut subs = d.submodules().to_vec();
    subs[j].parity = subs[j].parity.flipped();
    let factors: Vec<Factor> = d.factors().to_vec();
    RepDiagram::new(d.name(), factors, subs).unwrap()
}

fn product_of_powers(d: &RepDiagram, idx: &[u32], swap: Option<usize>) -> FormalChar {
    let mut acc = FormalChar::trivial(d.group());
    for (i, &k) in idx.iter().enumerate() {
        let p = if swap == Some(i) {
            submodule_power(engine(), &flipped_parity(d, i), i, k).unwrap()
        } else {
            submodule_power(engine(), d, i, k).unwrap()
        };
        acc = engine().tensor_chars(&acc, &p).unwrap();
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn component_dimension_is_a_product(d in diagram(2, 3), degrees in prop::collection::vec(0u32..=2, 3)) {
        let idx = MultiIndex(degrees[..d.submodules().len()].to_vec());
        let c = graded_component(engine(), &d, &idx).unwrap();
        let expected: u128 = d
            .submodules()
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let dim = d.submodule_dimension(i);
                match s.parity {
                    Parity::Even => multichoose(dim, idx.0[i] as u128).unwrap(),
                    Parity::Odd => binomial(dim, idx.0[i] as u128).unwrap(),
                }
            })
            .product();
        prop_assert_eq!(c.dimension(), expected);
        prop_assert_eq!(&c, &product_of_powers(&d, &idx.0, None));
    }

    #[test]
    fn parity_only_swaps_the_power(d in diagram(2, 2), degrees in prop::collection::vec(0u32..=2, 2), j in 0usize..2) {
        let n = d.submodules().len();
        let j = j % n;
        let idx = MultiIndex(degrees[..n].to_vec());
        let flipped = graded_component(engine(), &flipped_parity(&d, j), &idx).unwrap();
        prop_assert_eq!(flipped, product_of_powers(&d, &idx.0, Some(j)));
    }

    #[test]
    fn dual_flip_is_an_involution_and_keeps_the_verdict(d in diagram(2, 2), j in 0usize..2) {
        let j = j % d.submodules().len();
        let once = dual_flip(&d, j).unwrap();
        prop_assert_eq!(&dual_flip(&once, j).unwrap(), &d);
        let a = is_super_mf(engine(), &d, 3).unwrap();
        let b = is_super_mf(engine(), &once, 3).unwrap();
        prop_assert_eq!(a.status, b.status);
    }

    #[test]
    fn subdiagrams_of_mf_diagrams_are_mf(d in diagram(2, 2)) {
        let bound = 3;
        if is_super_mf(engine(), &d, bound).unwrap().is_mf() {
            for s in subdiagrams(&d) {
                prop_assert!(is_super_mf(engine(), &s, bound).unwrap().is_mf(), "{}", render_diagram(&s));
            }
        }
    }
}

#[test]
fn nested_hooks_have_size_two_n() {
    for n in 0..=7 {
        let d = nested_hooks(n, HookKind::SymSkew);
        let e = nested_hooks(n, HookKind::ExtSkew);
        assert!(d.iter().chain(&e).all(|p| p.size() == 2 * n));
        assert_eq!(conjugate_set(&d), e);
        // an (r, r) hook: first row r, then r rows of length 1 below the diagonal cell
        for p in &e {
            let c = p.conjugate();
            for i in 0..p.parts().iter().enumerate().filter(|&(i, &x)| x as usize > i).count() {
                let arm = p.part(i) as usize - i;
                let leg = c.part(i) as usize - i - 1;
                assert_eq!(arm, leg, "{p}");
            }
        }
    }
}
