use std::fs;
use std::path::Path;

use serde_json::json;

use super::{CliError, Command, Output, TreeOp, EXIT_INCONCLUSIVE, EXIT_NOT_SLICE, EXIT_OK};
use crate::certify::{adjudicate, Conclusion};
use crate::corpus;
use crate::eqtree::{associated_link, associated_si_link, format_tree, parse_tree, tree_to_dot, TreeFile};
use crate::invariants::InvariantReport;
use crate::linkdiag::{format_pd, parse_pd};
use crate::plumbing::{ambient, builtin, format_plumbing, parse_plumbing, plumbing_to_dot, PlumbingError, PlumbingTree};
use crate::symdiag::{equivariant_unknotting_search, format_sym, parse_sym, quotient, SearchOutcome};
use crate::{LinkDiagram, SymmetricDiagram};

fn read(path: &str) -> Result<Option<String>, CliError> {
    if !Path::new(path).exists() {
        return Ok(None);
    }
    fs::read_to_string(path).map(Some).map_err(|source| CliError::Io { path: path.to_string(), source })
}

fn missing(path: &str) -> CliError {
    CliError::Input(format!("no file or bundled example named {path:?}"))
}

fn has_ext(path: &str, ext: &str) -> bool {
    Path::new(path).extension().is_some_and(|e| e == ext)
}

fn load_sym(path: &str) -> Result<SymmetricDiagram, CliError> {
    match read(path)? {
        Some(text) => Ok(parse_sym(&text)?),
        None => corpus::sym(path).ok_or_else(|| missing(path)),
    }
}

/// A PD file, or the underlying diagram of a symmetric one.
fn load_diagram(path: &str) -> Result<LinkDiagram, CliError> {
    match read(path)? {
        Some(text) if has_ext(path, "pd") => Ok(parse_pd(&text)?),
        Some(text) if has_ext(path, "sym") => Ok(parse_sym(&text)?.base),
        Some(text) => parse_sym(&text).map(|sd| sd.base).or_else(|_| Ok(parse_pd(&text)?)),
        None => corpus::pd(path).or_else(|| corpus::sym(path).map(|sd| sd.base)).ok_or_else(|| missing(path)),
    }
}

fn load_tree(path: &str) -> Result<TreeFile, CliError> {
    match read(path)? {
        Some(text) => Ok(parse_tree(&text)?),
        None => corpus::tree(path).ok_or_else(|| missing(path)),
    }
}

/// A builtin such as `three_s2xs2(2)`, or a plumbing file.
fn load_plumbing(spec: &str) -> Result<PlumbingTree, CliError> {
    match builtin(spec) {
        Ok(pt) => Ok(pt),
        Err(e @ PlumbingError::BadParameter { .. }) => Err(e.into()),
        Err(_) => match read(spec)? {
            Some(text) => Ok(parse_plumbing(&text)?),
            None => Err(CliError::Input(format!("no builtin plumbing or file named {spec:?}"))),
        },
    }
}

fn json_of<T: serde::Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn text_only(text: String, json: serde_json::Value) -> Output {
    Output { text, json: vec![json], dot: None, code: EXIT_OK }
}

pub(super) fn execute(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Invariants { file } => {
            let report = InvariantReport::compute(&load_diagram(file)?)?;
            Ok(text_only(report.to_text(), json_of(&report)))
        }
        Command::Quotient { file, half_axis, out } => {
            let q = quotient(&load_sym(file)?, *half_axis)?;
            let report = InvariantReport::compute(&q)?;
            let pd = format!("{}\n", format_pd(&q).trim_end());
            let mut text = format!("half_axis: {half_axis}\n{}", report.to_text());
            if let Some(path) = out {
                fs::write(path, &pd).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
                text.push_str(&format!("pd_file: {}\n", path.display()));
            } else {
                text.push_str(&format!("pd:\n{pd}"));
            }
            let json = json!({ "half_axis": half_axis.to_string(), "report": json_of(&report), "pd": pd });
            Ok(text_only(text, json))
        }
        Command::Classify { file } => {
            let sd = load_sym(file)?;
            sd.check()?;
            let sites = sd.sites();
            let text = sites.iter().map(|(site, kind)| format!("{site} {kind}\n")).collect();
            let json = sites.iter().map(|(site, kind)| json!({ "site": site.to_string(), "type": kind.to_string() })).collect();
            Ok(Output { text, json, dot: None, code: EXIT_OK })
        }
        Command::UnknotSearch { file, max_moves, allow } => {
            let sd = load_sym(file)?;
            sd.check()?;
            Ok(match equivariant_unknotting_search(&sd, *max_moves, allow) {
                SearchOutcome::Found(seq) => {
                    let moves: Vec<String> = seq.moves.iter().map(|m| format!("{} {}", m.site, m.kind)).collect();
                    let text = format!(
                        "found: yes\nk: {}\na_pairs: {}\nb_plus: {}\nb_minus: {}\nc: {}\nmoves: [{}]\n",
                        seq.k_total,
                        seq.k_a_pairs,
                        seq.k_b_plus,
                        seq.k_b_minus,
                        seq.k_c,
                        moves.join(", ")
                    );
                    let mut json = json_of(&seq);
                    json["found"] = true.into();
                    json["moves"] = moves.into();
                    text_only(text, json)
                }
                SearchOutcome::NotFound(stats) => {
                    let text = format!(
                        "found: no\nexplored: {}\nfrontier: {}\ndepth: {}\n",
                        stats.explored, stats.frontier, stats.depth
                    );
                    let mut json = json_of(&stats);
                    json["found"] = false.into();
                    Output { code: EXIT_INCONCLUSIVE, ..text_only(text, json) }
                }
            })
        }
        Command::Tree { op } => tree(op),
        Command::Plumbing { spec } => {
            let pt = load_plumbing(spec)?;
            pt.validate().map_err(CliError::InvalidPlumbing)?;
            let omega = pt.plumbing_type()?;
            let text = format!("{}# type {omega}\n", format_plumbing(&pt));
            let json = json!({ "plumbing": json_of(&pt), "type": omega.to_string() });
            Ok(Output { dot: Some(plumbing_to_dot(&pt)), ..text_only(text, json) })
        }
        Command::Certify { file, ambient: tag, convention, budget } => {
            let amb = ambient(tag).ok_or_else(|| CliError::Input(format!("unknown ambient {tag:?}")))?;
            let verdict = adjudicate(&load_sym(file)?, &amb, *budget, *convention)?;
            let code = match verdict.conclusion {
                Conclusion::Slice(_) => EXIT_OK,
                Conclusion::NotSlice(_) => EXIT_NOT_SLICE,
                Conclusion::Inconclusive(_) => EXIT_INCONCLUSIVE,
            };
            Ok(Output { code, ..text_only(verdict.to_text(), json_of(&verdict)) })
        }
    }
}

fn tree_output(file: TreeFile) -> Output {
    let json = json!({ "tree": format_tree(&file) });
    Output { dot: Some(tree_to_dot(&file)), ..text_only(format_tree(&file), json) }
}

fn tree(op: &TreeOp) -> Result<Output, CliError> {
    match op {
        TreeOp::Validate { file } => {
            let tf = load_tree(file)?;
            let text = match &tf.weights {
                None => {
                    tf.tree.validate().map_err(CliError::InvalidTree)?;
                    format!("valid: yes\nvertices: {}\n", tf.tree.n)
                }
                Some(_) => {
                    let t = tf.to_equivariant()?;
                    t.validate().map_err(CliError::InvalidTree)?;
                    format!("valid: yes\nvertices: {}\ntype: {}\n", t.n(), t.tree_type()?)
                }
            };
            let json = json!({ "valid": true, "vertices": tf.tree.n });
            Ok(Output { dot: Some(tree_to_dot(&tf)), ..text_only(text, json) })
        }
        TreeOp::Assoc { file } => {
            let tf = load_tree(file)?;
            let text = match &tf.weights {
                None => {
                    tf.tree.validate().map_err(CliError::InvalidTree)?;
                    format!("{}\n", format_pd(&associated_link(&tf.tree)?).trim_end())
                }
                Some(_) => {
                    let mut sd = associated_si_link(&tf.to_equivariant()?)?;
                    sd.name = format!("{}_assoc", tf.name);
                    format_sym(&sd)
                }
            };
            let json = json!({ "diagram": text });
            Ok(text_only(text, json))
        }
        TreeOp::Prune { file, k } => {
            let tf = load_tree(file)?;
            let pruned = tf.to_equivariant()?.prune_to_size(*k)?;
            Ok(tree_output(TreeFile::equivariant(format!("{}_pruned{k}", tf.name), pruned)))
        }
        TreeOp::Derive { plumbing } => {
            let pt = load_plumbing(plumbing)?;
            let (t, _) = pt.derive_embedded_tree()?;
            Ok(tree_output(TreeFile::equivariant(format!("{}_tree", pt.name), t)))
        }
    }
}
