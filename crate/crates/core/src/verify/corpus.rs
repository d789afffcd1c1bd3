//! The diagrams the suites run on: known multiplicity-free shapes and the
//! negative cases with their printed witnesses.

use crate::dsl::parse_diagram;
use crate::partitions::Partition;
use crate::rootdata::{partition_to_weight, Weight};
use crate::superalg::{MultiIndex, RepDiagram};

/// Builds a diagram from DSL lines; factors are named G1, G2, … in order.
pub fn diagram(name: &str, groups: &[&str], submodules: &[&str]) -> RepDiagram {
    let mut text = format!("diagram \"{name}\"\n");
    for (i, g) in groups.iter().enumerate() {
        text.push_str(&format!("group G{} = {g}\n", i + 1));
    }
    for s in submodules {
        text.push_str(s);
        text.push('\n');
    }
    parse_diagram(&text).unwrap_or_else(|e| panic!("corpus diagram {name}: {e}"))
}

/// One label per factor: "(4,3,1)" is a partition read in the factor's own
/// convention, "[1,0,1]" a highest weight in fundamental coordinates.
pub fn label(d: &RepDiagram, parts: &[&str]) -> Vec<Weight> {
    assert_eq!(parts.len(), d.factors().len(), "label arity for {}", d.name());
    d.groups()
        .iter()
        .zip(parts)
        .map(|(g, s)| {
            if s.starts_with('[') {
                s.parse::<Weight>().unwrap_or_else(|e| panic!("{s}: {e}"))
            } else {
                let p: Partition = s.parse().unwrap_or_else(|e| panic!("{s}: {e:?}"));
                let flavor = g.flavor().expect("partition labels need a classical factor");
                partition_to_weight(*g, &p, flavor).unwrap_or_else(|e| panic!("{s} on {g}: {e}"))
            }
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct PositiveEntry {
    pub id: String,
    pub diagram: RepDiagram,
    pub bound: u32,
}

fn positive(id: String, groups: &[&str], subs: &[&str], bound: u32) -> PositiveEntry {
    PositiveEntry { diagram: diagram(&id, groups, subs), id, bound }
}

fn sl(n: u32) -> String {
    format!("SL({n})")
}

fn sp(n: u32) -> String {
    format!("Sp({})", 2 * n)
}

fn so_odd(n: u32) -> String {
    format!("SO({})", 2 * n + 1)
}

const RANKS: [u32; 3] = [2, 3, 4];

/// Proper super diagrams that are multiplicity-free, at ranks 2, 3, 4, bound 6.
pub fn theorem_positives() -> Vec<PositiveEntry> {
    let b = 6;
    let mut out = Vec::new();
    let same = ["even U = G1:std", "odd W = G1:std"];
    for n in RANKS {
        out.push(positive(format!("a1[{}]", sl(n)), &[&sl(n)], &same, b));
    }
    out.push(positive("a2[SL(2)]".into(), &["SL(2)"], &["even U = G1:std", "odd W = G1:part(2)"], b));
    out.push(positive("a3[SL(4)]".into(), &["SL(4)"], &["even U = G1:std", "odd W = G1:part(1,1)"], b));
    for n in RANKS {
        out.push(positive(format!("a4[{}]", sl(n)), &[&sl(n)], &["even U = G1:part(2)", "odd W = G1:std"], b));
    }
    out.push(positive("a5[Sp(4)]".into(), &["Sp(4)"], &["even U = G1:std", "odd W = G1:[0,1]"], b));

    let x_odd = ["even U = G1:std", "odd W = G1:std * G2:std"];
    let x_even = ["even U = G1:std * G2:std", "odd W = G1:std"];
    for n in RANKS {
        for m in RANKS {
            out.push(positive(format!("b1[{},{}]", sl(n), sl(m)), &[&sl(n), &sl(m)], &x_odd, b));
        }
    }
    for n in RANKS {
        out.push(positive(format!("b2[SL(2),{}]", so_odd(n)), &["SL(2)", &so_odd(n)], &x_odd, b));
    }
    for n in RANKS {
        for m in RANKS {
            out.push(positive(format!("b3[{},{}]", sl(n), sl(m)), &[&sl(n), &sl(m)], &x_even, b));
        }
    }
    let s2_odd = ["even U = G1:std * G2:std", "odd W = G1:part(2)"];
    for n in RANKS {
        out.push(positive(format!("b4[SL(2),{}]", sl(n)), &["SL(2)", &sl(n)], &s2_odd, b));
    }
    for n in RANKS {
        out.push(positive(format!("b5[SL(2),{}]", sp(n)), &["SL(2)", &sp(n)], &x_even, b));
    }
    for n in RANKS {
        out.push(positive(format!("b6[SL(2),{}]", sp(n)), &["SL(2)", &sp(n)], &s2_odd, b));
    }

    let chain = ["even U = G1:std * G2:std", "odd W = G2:std * G3:std"];
    type Side = fn(u32) -> String;
    let families: [(&str, Side, Side); 4] = [("c1", sl, sl), ("c2", sp, sl), ("c3", sl, so_odd), ("c4", sp, so_odd)];
    for (tag, left, right) in families {
        for n in RANKS {
            for m in RANKS {
                let (l, r) = (left(n), right(m));
                out.push(positive(format!("{tag}[{l},SL(2),{r}]"), &[&l, "SL(2)", &r], &chain, b));
            }
        }
    }
    out
}

/// Purely even and purely odd reducible multiplicity-free diagrams at minimal ranks, bound 5.
pub fn pure_positives() -> Vec<PositiveEntry> {
    let b = 5;
    let mut out = Vec::new();
    let mut add = |id: &str, groups: &[&str], subs: &[&str]| out.push(positive(id.to_string(), groups, subs, b));
    add("sym:std+std[SL(2)]", &["SL(2)"], &["even U = G1:std", "even W = G1:std"]);
    add("sym:std+ext2[SL(4)]", &["SL(4)"], &["even U = G1:std", "even W = G1:part(1,1)"]);
    add("sym:std+std[Sp(4)]", &["Sp(4)"], &["even U = G1:std", "even W = G1:std"]);
    add("sym:std+spin[SO(8)]", &["SO(8)"], &["even U = G1:std", "even W = G1:[0,0,1,0]"]);
    add("sym:std+std*std[SL(2),SL(2)]", &["SL(2)", "SL(2)"], &["even U = G1:std", "even W = G1:std * G2:std"]);
    add("sym:std+std*std[SL(2),Sp(4)]", &["SL(2)", "Sp(4)"], &["even U = G1:std", "even W = G1:std * G2:std"]);
    let chain = ["even U = G1:std * G2:std", "even W = G2:std * G3:std"];
    add("sym:chain[SL(2),SL(2),SL(2)]", &["SL(2)", "SL(2)", "SL(2)"], &chain);
    add("sym:chain[SL(2),SL(2),Sp(4)]", &["SL(2)", "SL(2)", "Sp(4)"], &chain);
    add("sym:chain[Sp(4),SL(2),Sp(4)]", &["Sp(4)", "SL(2)", "Sp(4)"], &chain);

    add("skew:std+std[SL(2)]", &["SL(2)"], &["odd U = G1:std", "odd W = G1:std"]);
    add("skew:std+sym2[SL(3)]", &["SL(3)"], &["odd U = G1:std", "odd W = G1:part(2)"]);
    add("skew:std+sym3[SL(2)]", &["SL(2)"], &["odd U = G1:std", "odd W = G1:part(3)"]);
    add("skew:std+std[SO(5)]", &["SO(5)"], &["odd U = G1:std", "odd W = G1:std"]);
    add("skew:std+std*std[SL(2),SL(2)]", &["SL(2)", "SL(2)"], &["odd U = G1:std", "odd W = G1:std * G2:std"]);
    add("skew:sym2+std*std[SL(2),SL(2)]", &["SL(2)", "SL(2)"], &["odd U = G1:part(2)", "odd W = G1:std * G2:std"]);
    add("skew:std+std*std[SL(2),SO(5)]", &["SL(2)", "SO(5)"], &["odd U = G1:std", "odd W = G1:std * G2:std"]);
    add("skew:sym2+std*std[SL(2),SO(5)]", &["SL(2)", "SO(5)"], &["odd U = G1:part(2)", "odd W = G1:std * G2:std"]);
    let chain = ["odd U = G1:std * G2:std", "odd W = G2:std * G3:std"];
    add("skew:chain[SL(2),SL(2),SL(2)]", &["SL(2)", "SL(2)", "SL(2)"], &chain);
    add("skew:chain[SL(2),SL(2),SO(5)]", &["SL(2)", "SL(2)", "SO(5)"], &chain);
    add("skew:chain[SO(5),SL(2),SO(5)]", &["SO(5)", "SL(2)", "SO(5)"], &chain);
    out
}

/// A component that should contain a label at least twice.
#[derive(Clone, Debug)]
pub struct WitnessEntry {
    pub id: String,
    pub anchor: String,
    pub diagram: RepDiagram,
    pub index: MultiIndex,
    /// The label as printed, in the source's notation.
    pub printed: String,
    pub label: Vec<Weight>,
    /// For known misprints: the label that actually repeats, with its notation.
    pub corrected: Option<(String, Vec<Weight>)>,
}

struct W<'a> {
    id: String,
    groups: &'a [&'a str],
    subs: &'a [&'a str],
    index: &'a [u32],
    printed: String,
    label: &'a [&'a str],
}

fn witness(w: W, corrected: Option<(&str, &[&str])>) -> WitnessEntry {
    let d = diagram(&w.id, w.groups, w.subs);
    let idx = MultiIndex(w.index.to_vec());
    let anchor = format!("{} ∋ {} at {}", d.name(), w.printed, idx.display_for(&d));
    WitnessEntry {
        id: w.id,
        anchor,
        label: label(&d, w.label),
        corrected: corrected.map(|(t, l)| (t.to_string(), label(&d, l))),
        index: idx,
        printed: w.printed,
        diagram: d,
    }
}

fn plain(id: &str, groups: &[&str], subs: &[&str], index: &[u32], printed: &str, lab: &[&str]) -> WitnessEntry {
    witness(W { id: id.into(), groups, subs, index, printed: printed.into(), label: lab }, None)
}

/// Simple groups: every negative cell of the type A, C, B, D tables and the
/// two exceptional doubles, at the smallest admissible rank (plus one more
/// where the row is stated for a range of ranks).
pub fn simple_witnesses() -> Vec<WitnessEntry> {
    let mut out = Vec::new();
    let std_x = |odd: &str| ["even U = G1:std".to_string(), format!("odd W = G1:{odd}")];
    let x_y = |even: &str, odd: &str| [format!("even U = G1:{even}"), format!("odd W = G1:{odd}")];
    let mut add = |id: &str, g: &str, subs: [String; 2], idx: &[u32], printed: &str, lab: &str| {
        let s: Vec<&str> = subs.iter().map(|s| s.as_str()).collect();
        out.push(plain(id, &[g], &s, idx, printed, &[lab]));
    };

    add("A-1b", "SL(4)", std_x("part(2)"), &[2, 3], "2·{4,3,1}", "(4,3,1)");
    add("A-1b/SL(5)", "SL(5)", std_x("part(2)"), &[2, 3], "2·{4,3,1}", "(4,3,1)");
    add("A-1c", "SL(5)", std_x("part(1,1)"), &[2, 5], "2·{4,3,2,2,1}", "(4,3,2,2,1)");
    add("A-1c/SL(6)", "SL(6)", std_x("part(1,1)"), &[2, 5], "2·{4,3,2,2,1}", "(4,3,2,2,1)");
    add("A-1h", "SL(3)", std_x("part(3)"), &[2, 2], "2·{5,3}", "(5,3)");
    add("A-1i", "SL(6)", std_x("part(1,1,1)"), &[2, 5], "2·{3,1,1}", "(3,1,1)");
    add("A-2b", "SL(2)", x_y("part(2)", "part(2)"), &[2, 1], "2·{4,2}", "(4,2)");
    add("A-2b/SL(3)", "SL(3)", x_y("part(2)", "part(2)"), &[2, 1], "2·{4,2}", "(4,2)");
    add("A-2c", "SL(4)", x_y("part(2)", "part(1,1)"), &[2, 2], "2·{4,2,1,1}", "(4,2,1,1)");
    add("A-2c/SL(5)", "SL(5)", x_y("part(2)", "part(1,1)"), &[2, 2], "2·{4,2,1,1}", "(4,2,1,1)");
    add("A-2h", "SL(3)", x_y("part(2)", "part(3)"), &[1, 2], "2·{5,3}", "(5,3)");
    add("A-2i", "SL(6)", x_y("part(2)", "part(1,1,1)"), &[1, 5], "2·{3,1,1}", "(3,1,1)");
    add("A-3a", "SL(4)", x_y("part(1,1)", "std"), &[3, 2], "2·{3,3,1,1}", "(3,3,1,1)");
    add("A-3a/SL(5)", "SL(5)", x_y("part(1,1)", "std"), &[3, 2], "2·{3,3,1,1}", "(3,3,1,1)");
    add("A-3b", "SL(3)", x_y("part(1,1)", "part(2)"), &[5, 3], "2·{8,6,2}", "(8,6,2)");
    add("A-3b/SL(4)", "SL(4)", x_y("part(1,1)", "part(2)"), &[5, 3], "2·{8,6,2}", "(8,6,2)");
    add("A-3c", "SL(4)", x_y("part(1,1)", "part(1,1)"), &[6, 3], "2·{6,5,4,3}", "(6,5,4,3)");
    add("A-3c/SL(5)", "SL(5)", x_y("part(1,1)", "part(1,1)"), &[6, 3], "2·{6,5,4,3}", "(6,5,4,3)");
    add("A-3i", "SL(6)", x_y("part(1,1)", "part(1,1,1)"), &[1, 3], "2·{2,2,1}", "(2,2,1)");

    add("C-1a", "Sp(6)", std_x("std"), &[2, 2], "2·⟨2⟩", "(2)");
    add("C-1a/Sp(8)", "Sp(8)", std_x("std"), &[2, 2], "2·⟨2⟩", "(2)");
    add("C-1c", "Sp(6)", std_x("[0,0,1]"), &[2, 3], "2·⟨3,2⟩", "(3,2)");
    add("C-2a", "Sp(4)", x_y("[0,1]", "std"), &[2, 2], "2·⟨1,1⟩", "(1,1)");
    add("C-2b", "Sp(4)", x_y("[0,1]", "[0,1]"), &[2, 1], "2·⟨1,1⟩", "(1,1)");

    add("B-1a", "SO(5)", std_x("std"), &[2, 2], "2·[1,1]", "(1,1)");
    add("B-1a/SO(7)", "SO(7)", std_x("std"), &[2, 2], "2·[1,1]", "(1,1)");
    add("B-1b", "SO(7)", std_x("[0,0,1]"), &[2, 3], "2·(1,0,1)", "[1,0,1]");
    add("B-1c", "SO(9)", std_x("[0,0,0,1]"), &[2, 3], "2·(1,0,0,1)", "[1,0,0,1]");
    add("B-2a", "SO(7)", x_y("[0,0,1]", "std"), &[3, 2], "2·(0,1,1)", "[0,1,1]");
    add("B-2b", "SO(7)", x_y("[0,0,1]", "[0,0,1]"), &[2, 3], "2·(1,0,1)", "[1,0,1]");
    add("B-3a", "SO(9)", x_y("[0,0,0,1]", "std"), &[3, 2], "2·(0,1,0,1)", "[0,1,0,1]");
    add("B-3c", "SO(9)", x_y("[0,0,0,1]", "[0,0,0,1]"), &[2, 3], "2·(1,0,0,1)", "[1,0,0,1]");

    add("D-1a", "SO(8)", std_x("std"), &[2, 2], "2·[1,1]", "(1,1)");
    add("D-1a/SO(10)", "SO(10)", std_x("std"), &[2, 2], "2·[1,1]", "(1,1)");
    add("D-1b", "SO(8)", std_x("[0,0,1,0]"), &[3, 4], "2·(1,0,0,0)", "[1,0,0,0]");
    add("D-1c", "SO(10)", std_x("[0,0,0,1,0]"), &[2, 5], "2·(1,1,0,0,1)", "[1,1,0,0,1]");
    add("D-1d", "SO(12)", std_x("[0,0,0,0,1,0]"), &[2, 5], "2·(0,1,1,0,0,1)", "[0,1,1,0,0,1]");
    add("D-1e", "SO(12)", std_x("[0,0,0,0,0,1]"), &[2, 5], "2·(0,1,1,0,1,0)", "[0,1,1,0,1,0]");
    add("D-2a", "SO(8)", x_y("[0,0,1,0]", "std"), &[3, 4], "2·(0,0,1,0)", "[0,0,1,0]");
    add(
        "D-2b",
        "SO(8)",
        x_y("[0,0,1,0]", "[0,0,1,0]"),
        &[2, 2],
        "2·(0,1,0,0), the triality image of 2·[1,1]",
        "[0,1,0,0]",
    );
    add("D-3a", "SO(10)", x_y("[0,0,0,1,0]", "std"), &[3, 3], "2·(0,1,0,1,0)", "[0,1,0,1,0]");
    add("D-3b", "SO(10)", x_y("[0,0,0,1,0]", "[0,0,0,1,0]"), &[3, 2], "2·(1,0,0,0,1)", "[1,0,0,0,1]");

    add("G2", "G2", std_x("std"), &[1, 2], "2·(1,0)", "[1,0]");
    add("E6", "E6", std_x("std"), &[2, 1], "2·(1,0,0,0,0,1)", "[1,0,0,0,0,1]");

    for p in 3..=6u32 {
        let letter = (b'd' + (p - 3) as u8) as char;
        let subs1 = ["even U = G1:std".to_string(), format!("odd W = G1:part({p})")];
        let subs2 = ["even U = G1:part(2)".to_string(), format!("odd W = G1:part({p})")];
        for (row, subs, idx) in [(1, subs1, [2u32, 2]), (2, subs2, [1, 2])] {
            let s: Vec<&str> = subs.iter().map(|s| s.as_str()).collect();
            let printed = format!("({})", 2 * p - 2);
            let fixed = format!("({})", 2 * p - 4);
            out.push(witness(
                W {
                    id: format!("A-{row}{letter}"),
                    groups: &["SL(2)"],
                    subs: &s,
                    index: &idx,
                    printed: format!("2·{{{}}}", 2 * p - 2),
                    label: &[&printed],
                },
                Some((&format!("2·{{{}}}", 2 * p - 4), &[&fixed])),
            ));
        }
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

/// Two simple factors: one part acts through both factors, the other through one.
pub fn product_witnesses() -> Vec<WitnessEntry> {
    let mut out = Vec::new();
    let odd_x = |even: &str| [format!("even Y = {even}"), "odd X = G1:std * G2:std".to_string()];
    let mut add = |id: &str, groups: &[&str], subs: &[String], idx: &[u32], printed: &str, lab: &[&str]| {
        let s: Vec<&str> = subs.iter().map(|s| s.as_str()).collect();
        out.push(plain(id, groups, &s, idx, printed, lab));
    };

    add("X-odd-1", &["SL(2)", "SL(2)"], &odd_x("G1:part(2)"), &[5, 2], "2·{8,4}⊗{1,1}", &["(8,4)", "(1,1)"]);
    add(
        "X-odd-1/SL(3),SL(2)",
        &["SL(3)", "SL(2)"],
        &odd_x("G1:part(2)"),
        &[5, 2],
        "2·{8,4}⊗{1,1}",
        &["(8,4)", "(1,1)"],
    );
    let s2 = ["even Y = G2:std".to_string(), "odd X = G1:std * G2:part(2)".to_string()];
    add("X-odd-2/k=2", &["SL(2)", "SL(2)"], &s2, &[2, 3], "2·{1}⊗{4}", &["(1)", "(4)"]);
    add("X-odd-2/k=3", &["SL(3)", "SL(2)"], &s2, &[2, 3], "2·{0}⊗{4}", &["()", "(4)"]);
    let l2 = ["even Y = G2:std".to_string(), "odd X = G1:std * G2:part(1,1)".to_string()];
    add("X-odd-3", &["SL(2)", "SL(4)"], &l2, &[1, 4], "2·{2}⊗{2,2,1}", &["(2)", "(2,2,1)"]);
    add("X-odd-4", &["SL(2)", "Sp(4)"], &odd_x("G1:std"), &[1, 3], "2·{3,1}⊗⟨1⟩", &["(3,1)", "(1)"]);
    add("X-odd-4/SL(3)", &["SL(3)", "Sp(4)"], &odd_x("G1:std"), &[1, 3], "2·{3,1}⊗⟨1⟩", &["(3,1)", "(1)"]);
    add("X-odd-5/SO(6)", &["SL(2)", "SO(6)"], &odd_x("G1:std"), &[2, 4], "2·{4}⊗[1,1]", &["(4)", "(1,1)"]);
    add("X-odd-5/SO(8)", &["SL(2)", "SO(8)"], &odd_x("G1:std"), &[2, 5], "2·{5}⊗[1,1,1]", &["(5)", "(1,1,1)"]);
    add("X-odd-6", &["SL(3)", "SO(5)"], &odd_x("G1:std"), &[1, 3], "2·{1}⊗[1]", &["(1)", "(1)"]);
    add("X-odd-6/SO(7)", &["SL(3)", "SO(7)"], &odd_x("G1:std"), &[1, 3], "2·{1}⊗[1]", &["(1)", "(1)"]);
    add("X-odd-7", &["SL(3)", "SO(5)"], &odd_x("G2:[0,1]"), &[2, 3], "2·{0}⊗(1,2)", &["()", "[1,2]"]);
    add("X-odd-8", &["SL(2)", "SO(5)"], &odd_x("G2:[0,1]"), &[2, 3], "2·{1}⊗(0,2)", &["(1)", "[0,2]"]);

    let even_x = |odd: &str| ["even X = G1:std * G2:std".to_string(), format!("odd Y = {odd}")];
    add(
        "X-even-1",
        &["SL(2)", "SL(4)"],
        &even_x("G2:part(1,1)"),
        &[3, 2],
        "2·{2,1}⊗{3,2,1,1}",
        &["(2,1)", "(3,2,1,1)"],
    );
    add(
        "X-even-1/SL(5)",
        &["SL(2)", "SL(5)"],
        &even_x("G2:part(1,1)"),
        &[3, 2],
        "2·{2,1}⊗{3,2,1,1}",
        &["(2,1)", "(3,2,1,1)"],
    );

    for (suffix, groups) in [("SL(3),Sp(6)", ["SL(3)", "Sp(6)"]), ("SL(4),Sp(4)", ["SL(4)", "Sp(4)"])] {
        let subs = even_x("G1:std");
        let s: Vec<&str> = subs.iter().map(|s| s.as_str()).collect();
        out.push(witness(
            W {
                id: format!("X-even-2/{suffix}"),
                groups: &groups,
                subs: &s,
                index: &[3, 1],
                printed: "2·{2,1}⊗⟨1⟩".into(),
                label: &["(2,1)", "(1)"],
            },
            Some(("2·{2,1,1}⊗⟨1⟩", &["(2,1,1)", "(1)"])),
        ));
    }
    for (suffix, groups) in [("", ["SL(2)", "Sp(4)"]), ("/SL(3)", ["SL(3)", "Sp(4)"])] {
        let subs = even_x("G2:[0,1]");
        let s: Vec<&str> = subs.iter().map(|s| s.as_str()).collect();
        out.push(witness(
            W {
                id: format!("X-even-3{suffix}"),
                groups: &groups,
                subs: &s,
                index: &[3, 2],
                printed: "2·{2,1}⊗⟨1,1⟩".into(),
                label: &["(2,1)", "(1,1)"],
            },
            Some(("3·{2,1}⊗⟨2,1⟩", &["(2,1)", "(2,1)"])),
        ));
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::Parity;

    #[test]
    fn corpus_builds() {
        assert_eq!(theorem_positives().len(), 3 + 1 + 1 + 3 + 1 + 9 + 3 + 9 + 3 + 3 + 3 + 36);
        assert_eq!(pure_positives().len(), 20);
        for e in theorem_positives() {
            assert!(e.diagram.is_connected(), "{}", e.id);
            let parities: Vec<Parity> = e.diagram.submodules().iter().map(|s| s.parity).collect();
            assert_eq!(parities, vec![Parity::Even, Parity::Odd], "{}", e.id);
        }
        let simple = simple_witnesses();
        assert!(simple.iter().any(|w| w.id == "C-1a"));
        assert_eq!(simple.iter().filter(|w| w.corrected.is_some()).count(), 8);
        assert_eq!(product_witnesses().iter().filter(|w| w.corrected.is_some()).count(), 4);
    }

    #[test]
    fn labels_read_partitions_per_factor() {
        let d = diagram("x", &["SL(4)", "SO(5)"], &["even U = G1:std * G2:std"]);
        let l = label(&d, &["(4,3,1)", "(1,1)"]);
        assert_eq!(l, vec![Weight::from_slice(&[1, 2, 1]), Weight::from_slice(&[0, 2])]);
        assert_eq!(label(&d, &["()", "[1,2]"])[1], Weight::from_slice(&[1, 2]));
    }
}
