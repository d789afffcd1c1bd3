//! Fixtures shared by the benchmarks in `benches/`.

use supermf_core::dsl::parse_diagram;
use supermf_core::{FormalChar, GroupType, ProductGroup, RepDiagram, Weight};

/// The irreducible of a simple group as a character.
pub fn irrep(g: GroupType, coords: &[i32]) -> FormalChar {
    FormalChar::irreducible(ProductGroup::simple(g), Weight::from_slice(coords))
}

/// `C^n ⊗ C^m` for SL(n) × SL(m).
pub fn standard_pair(n: usize, m: usize) -> FormalChar {
    let (a, b) = (GroupType::sl(n).unwrap(), GroupType::sl(m).unwrap());
    let g = ProductGroup::new(vec![a, b]).unwrap();
    FormalChar::irreducible(g, Weight::concat(&[a.standard(), b.standard()]))
}

pub fn diagram(text: &str) -> RepDiagram {
    parse_diagram(text).expect("fixture parses")
}

pub const G2_DOUBLE: &str = "diagram \"G2 double\"\ngroup G1 = G2\neven U = G1:std\nodd W = G1:std\n";

pub const SP_CHAIN: &str = "diagram \"chain\"\n\
    group G1 = Sp(4)\n\
    group G2 = SL(2)\n\
    group G3 = SL(3)\n\
    even U = G1:std * G2:std\n\
    odd W = G2:std * G3:std\n";
