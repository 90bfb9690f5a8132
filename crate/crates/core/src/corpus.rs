//! Bundled example diagrams, trees, plumbings and obstruction data.

use crate::linkdiag::parse_pd;
use crate::eqtree::{parse_tree, TreeFile};
use crate::symdiag::parse_sym;
use crate::{LinkDiagram, SymmetricDiagram};

/// Symmetric diagrams, by name.
pub const SYM: &[(&str, &str)] = &[
    ("fig8_tau", include_str!("../corpus/fig8_tau.sym")),
    ("fig8_mirror_tau", include_str!("../corpus/fig8_mirror_tau.sym")),
    ("fig8_other_inversion", include_str!("../corpus/fig8_other_inversion.sym")),
    ("unknot_std", include_str!("../corpus/unknot_std.sym")),
    ("hopf_b_plus", include_str!("../corpus/hopf_b_plus.sym")),
    ("hopf_b_minus", include_str!("../corpus/hopf_b_minus.sym")),
    ("hopf_c", include_str!("../corpus/hopf_c.sym")),
    ("clasp_c1", include_str!("../corpus/clasp_c1.sym")),
    ("clasp_c7", include_str!("../corpus/clasp_c7.sym")),
];

/// Plain PD codes, by name.
pub const PD: &[(&str, &str)] = &[("t25", include_str!("../corpus/t25.pd"))];

/// Trees, by name.
pub const TREE: &[(&str, &str)] = &[
    ("path3_b_plus", include_str!("../corpus/path3_b_plus.tree")),
    ("path3_b_minus", include_str!("../corpus/path3_b_minus.tree")),
    ("caterpillar_c5", include_str!("../corpus/caterpillar_c5.tree")),
];

fn lookup<'a>(table: &[(&str, &'a str)], name: &str) -> Option<&'a str> {
    let stem = name.rsplit('/').next().unwrap_or(name);
    let stem = stem.split('.').next().unwrap_or(stem);
    table.iter().find(|(n, _)| *n == stem).map(|(_, t)| *t)
}

pub fn sym(name: &str) -> Option<SymmetricDiagram> {
    lookup(SYM, name).map(|t| parse_sym(t).expect("bundled diagram parses"))
}

pub fn pd(name: &str) -> Option<LinkDiagram> {
    lookup(PD, name).map(|t| parse_pd(t).expect("bundled PD parses"))
}

pub fn tree(name: &str) -> Option<TreeFile> {
    lookup(TREE, name).map(|t| parse_tree(t).expect("bundled tree parses"))
}

/// Every diagram in the corpus, symmetric bases included.
pub fn all_diagrams() -> Vec<(String, LinkDiagram)> {
    let mut out: Vec<(String, LinkDiagram)> = PD.iter().map(|(n, _)| (n.to_string(), pd(n).expect("listed"))).collect();
    out.extend(SYM.iter().map(|(n, _)| (n.to_string(), sym(n).expect("listed").base)));
    out
}
