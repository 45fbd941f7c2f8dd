use std::fmt::Write as _;
use std::path::Path;

use bs_cayley::{
    cayley_ball, clique_tree, is_chordal, muller_schupp_td, oracle_by_name, treewidth_exact, validate_td, GroupOracle,
    SimpleGraph,
};
use bs_cuts::{
    ball_dot_with_cut, blocks, choose_lambda, corners, cut_from_vertices, enumerate_kcuts, is_nested, optimal_cuts,
    structure_tree, translated_paths, Cut, OptimalCuts, PathWindow, StructureTree, TORSION_CHECK,
};
use bs_gog::{parse_gog, GraphOfGroups};
use bs_lang::{cfg_to_pda, hotz_presentation, nfa_to_dfa, parse_cfg, parse_nfa, parse_pda, pda_to_cfg, reduce_grammar};
use bs_pregroup::{geodesic_reduce, parse_pregroup, pregroup_from_gog, universal_wp, PregroupError};
use bs_rewrite::strategy::{strategy_by_name, strategy_names};
use bs_rewrite::{parse_system, Outcome, StrongVerdict, Verdict};
use serde_json::{json, Value};

use crate::args::*;
use crate::{domain, CliError, Report, RunConfig};

pub fn dispatch(cmd: &Command, cfg: &RunConfig) -> Result<Report, CliError> {
    match cmd {
        Command::Rewrite(c) => rewrite(c, cfg),
        Command::Lang(c) => lang(c),
        Command::Gog(c) => gog(c),
        Command::Wp { gog, word } => gog_wp(gog, word),
        Command::Pregroup(c) => pregroup(c),
        Command::Cayley(c) => cayley(c),
        Command::Cuts(c) => cuts(c),
        Command::StructureTree(p) => {
            let run = Pipeline::new(p)?;
            let tree = structure_tree(&run.opt.cuts).map_err(domain)?;
            let mut text = run.provenance();
            text.push_str(&tree.show());
            let json = json!({
                "provenance": run.provenance_json(),
                "vertices": tree.vertex_count(),
                "edges": tree.edges.iter().map(|e| json!({
                    "source": e.source, "target": e.target, "weight": e.weight,
                    "cut": cut_json(&run.ball, &tree.cuts[e.cut]),
                })).collect::<Vec<_>>(),
            });
            Ok(Report::new("structure-tree", text, json).with_dot(tree.to_dot()))
        }
        Command::Blocks { pipeline, lambda } => blocks_cmd(pipeline, *lambda),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))
}

fn load_gog(path: &Path) -> Result<GraphOfGroups, CliError> {
    parse_gog(&read(path)?, path.parent()).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))
}

fn with_path<E: std::fmt::Display>(path: &Path) -> impl Fn(E) -> CliError + '_ {
    move |e| CliError::Domain(format!("{}: {e}", path.display()))
}

fn rewrite(cmd: &RewriteCmd, cfg: &RunConfig) -> Result<Report, CliError> {
    match cmd {
        RewriteCmd::Normalize { system, word, strategy } => {
            let sys = parse_system(&read(system)?).map_err(with_path(system))?;
            let w = sys.alphabet().parse_word(word).map_err(domain)?;
            let mut s = strategy_by_name(strategy, cfg.seed).ok_or_else(|| {
                let names: Vec<&str> = strategy_names().collect();
                CliError::Usage(format!("unknown strategy `{strategy}`; expected one of {}", names.join(", ")))
            })?;
            match sys.normalize_with(s.as_mut(), &w, cfg.fuel).map_err(domain)? {
                Outcome::Irreducible { word, steps } => {
                    let nf = sys.show(&word);
                    Ok(Report::new("rewrite normalize", nf.clone(), json!({ "normal_form": nf, "steps": steps })))
                }
                Outcome::FuelExhausted { word, steps } => Err(CliError::Domain(format!(
                    "fuel exhausted after {steps} steps at `{}`",
                    sys.show(&word)
                ))),
            }
        }
        RewriteCmd::Confluence { system } => {
            let sys = parse_system(&read(system)?).map_err(with_path(system))?;
            let local = sys.check_local_confluence(cfg.fuel).map_err(domain)?;
            let strong = sys.check_strong_confluence();
            let mut text = String::new();
            let mut ok = true;
            let local_json = match &local {
                Verdict::LocallyConfluent => {
                    text.push_str("locally confluent: yes\n");
                    json!({ "verdict": "confluent" })
                }
                Verdict::CounterexamplePeak { peak, left, right } => {
                    ok = false;
                    let (p, l, r) = (sys.show(peak), sys.show(left), sys.show(right));
                    let _ = writeln!(text, "locally confluent: no; {p} rewrites to {l} and to {r}, which do not join");
                    json!({ "verdict": "counterexample", "peak": p, "left": l, "right": r })
                }
                Verdict::Unknown { fuel } => {
                    ok = false;
                    let _ = writeln!(text, "locally confluent: unknown within fuel {fuel}");
                    json!({ "verdict": "unknown", "fuel": fuel })
                }
            };
            let strong_json = match &strong {
                StrongVerdict::StronglyConfluent => {
                    text.push_str("strongly confluent: yes\n");
                    json!({ "verdict": "confluent" })
                }
                StrongVerdict::Counterexample { peak, left, right } => {
                    let (p, l, r) = (sys.show(peak), sys.show(left), sys.show(right));
                    let _ = writeln!(text, "strongly confluent: no; {p} rewrites to {l} and to {r}");
                    json!({ "verdict": "counterexample", "peak": p, "left": l, "right": r })
                }
                StrongVerdict::Unknown { explored } => {
                    let _ = writeln!(text, "strongly confluent: unknown after {explored} words");
                    json!({ "verdict": "unknown", "explored": explored })
                }
            };
            let report = Report::new("rewrite confluence", text, json!({ "local": local_json, "strong": strong_json }));
            Ok(if ok { report } else { report.failed() })
        }
    }
}

fn lang(cmd: &LangCmd) -> Result<Report, CliError> {
    match cmd {
        LangCmd::Nfa2dfa { nfa } => {
            let n = parse_nfa(&read(nfa)?).map_err(with_path(nfa))?;
            let d = nfa_to_dfa(&n);
            let text = d.as_nfa().to_string();
            Ok(Report::new("lang nfa2dfa", text.clone(), json!({ "states": d.as_nfa().num_states(), "dfa": text })))
        }
        LangCmd::Cfg2pda { cfg } => {
            let g = parse_cfg(&read(cfg)?).map_err(with_path(cfg))?;
            let text = cfg_to_pda(&g).to_string();
            Ok(Report::new("lang cfg2pda", text.clone(), json!({ "pda": text })))
        }
        LangCmd::Pda2cfg { pda } => {
            let m = parse_pda(&read(pda)?).map_err(with_path(pda))?;
            let g = reduce_grammar(&pda_to_cfg(&m));
            let text = g.to_string();
            Ok(Report::new("lang pda2cfg", text.clone(), json!({ "productions": g.productions.len(), "cfg": text })))
        }
        LangCmd::Hotz { cfg } => {
            let g = parse_cfg(&read(cfg)?).map_err(with_path(cfg))?;
            let h = hotz_presentation(&g).map_err(domain)?;
            let text = format!("{h}\nsubstituted: {}\n", h.show_substituted());
            Ok(Report::new(
                "lang hotz",
                text,
                json!({ "presentation": h.to_string(), "substituted": h.show_substituted() }),
            ))
        }
    }
}

fn gog_wp(path: &Path, word: &str) -> Result<Report, CliError> {
    let g = load_gog(path)?;
    let w = g.parse_word(word).map_err(domain)?;
    let trivial = g.word_problem(&w).map_err(domain)?;
    Ok(Report::new("wp", trivial.to_string(), json!({ "trivial": trivial })))
}

fn gog(cmd: &GogCmd) -> Result<Report, CliError> {
    match cmd {
        GogCmd::Wp { gog, word } => {
            let mut r = gog_wp(gog, word)?;
            r.command = "gog wp";
            Ok(r)
        }
        GogCmd::NormalForm { gog, word } => {
            let g = load_gog(gog)?;
            let w = g.parse_word(word).map_err(domain)?;
            let nf = g.show(&g.normal_form(&w).map_err(domain)?);
            Ok(Report::new("gog normal-form", nf.clone(), json!({ "normal_form": nf })))
        }
        GogCmd::Present { gog } => {
            let g = load_gog(gog)?;
            let p = g.pi1_presentation();
            Ok(Report::new(
                "gog present",
                p.to_string(),
                json!({ "generators": p.generators, "relators": p.relators.len(), "presentation": p.to_string() }),
            ))
        }
        GogCmd::Bst { gog, depth } => {
            let g = load_gog(gog)?;
            let ball = g.bst_ball(*depth);
            let name = |n: &bs_gog::BstNode| {
                if n.word.is_empty() {
                    format!("{}", g.vertices()[n.terminal].name)
                } else {
                    format!("{} {}", g.show(&n.word), g.vertices()[n.terminal].name)
                }
            };
            let mut text = format!("{} vertices\n", ball.len());
            let mut dot = String::from("graph BST {\n");
            let mut nodes = Vec::new();
            for (i, b) in ball.iter().enumerate() {
                let parent = b.parent.map_or("-".to_string(), |p| p.to_string());
                let _ = writeln!(text, "{i} parent {parent} depth {} stabilizer {}: {}", b.depth, b.stabilizer, name(&b.node));
                let _ = writeln!(dot, "  n{i} [label=\"{}\"];", name(&b.node).replace('"', "\\\""));
                if let Some(p) = b.parent {
                    let _ = writeln!(dot, "  n{p} -- n{i};");
                }
                nodes.push(json!({ "parent": b.parent, "depth": b.depth, "stabilizer": b.stabilizer, "coset": name(&b.node) }));
            }
            dot.push_str("}\n");
            Ok(Report::new("gog bst", text, json!({ "depth": depth, "nodes": nodes })).with_dot(dot))
        }
        GogCmd::FreeSubgroup { gog } => {
            let g = load_gog(gog)?;
            let d = g.free_subgroup_data().map_err(domain)?;
            Ok(Report::new(
                "gog free-subgroup",
                format!("degree {} index {} rank {}", d.degree, d.index, d.rank),
                json!({ "degree": d.degree, "index": d.index, "rank": d.rank }),
            ))
        }
    }
}

fn pregroup(cmd: &PregroupCmd) -> Result<Report, CliError> {
    match cmd {
        PregroupCmd::Check { pregroup } => match parse_pregroup(&read(pregroup)?) {
            Ok(p) => Ok(Report::new("pregroup check", "pregroup: OK (P1–P4)".into(), json!({ "elements": p.len() }))),
            Err(PregroupError::Axiom(v)) => Ok(Report::new(
                "pregroup check",
                format!("pregroup: FAIL {v}"),
                json!({ "axiom": v.axiom.to_string(), "witnesses": v.witnesses, "detail": v.detail }),
            )
            .failed()),
            Err(e) => Err(with_path(pregroup)(e)),
        },
        PregroupCmd::FromGog { gog } => {
            let g = load_gog(gog)?;
            let gp = pregroup_from_gog(&g).map_err(domain)?;
            let mut text = gp.pregroup.to_string();
            if !text.ends_with('\n') {
                text.push('\n');
            }
            let words: Vec<String> = gp.words.iter().map(|w| g.show(w)).collect();
            for (n, w) in gp.pregroup.names().iter().zip(&words) {
                let _ = writeln!(text, "element {n} = {w}");
            }
            Ok(Report::new(
                "pregroup from-gog",
                text,
                json!({ "carrier": gp.pregroup.names(), "words": words, "table": gp.pregroup.to_string() }),
            ))
        }
        PregroupCmd::Wp { pregroup, word } => {
            let p = parse_pregroup(&read(pregroup)?).map_err(with_path(pregroup))?;
            let w = p.parse_word(word).map_err(domain)?;
            let trivial = universal_wp(&p, &w);
            let reduced = p.show(&geodesic_reduce(&p, &w));
            Ok(Report::new(
                "pregroup wp",
                format!("{trivial}\ngeodesic: {reduced}"),
                json!({ "trivial": trivial, "geodesic": reduced }),
            ))
        }
    }
}

/// Inline source text, or the contents of an existing file.
fn source_text(s: &str) -> Result<String, CliError> {
    let p = Path::new(s);
    if p.is_file() {
        read(p)
    } else {
        Ok(s.to_string())
    }
}

fn oracle(backend: &str, source: &str, generators: &[String]) -> Result<Box<dyn GroupOracle>, CliError> {
    if !bs_cayley::backend_names().any(|b| b == backend) {
        let names: Vec<&str> = bs_cayley::backend_names().collect();
        return Err(CliError::Usage(format!("unknown backend `{backend}`; expected one of {}", names.join(", "))));
    }
    oracle_by_name(backend, &source_text(source)?, generators).map_err(domain)
}

fn group_ball(g: &GroupArgs) -> Result<(Box<dyn GroupOracle>, SimpleGraph), CliError> {
    let o = oracle(&g.backend, &g.source, &g.generators)?;
    let ball = cayley_ball(o.as_ref(), g.radius);
    Ok((o, ball))
}

fn cayley(cmd: &CayleyCmd) -> Result<Report, CliError> {
    match cmd {
        CayleyCmd::Ball(g) => {
            let (_, ball) = group_ball(g)?;
            let json = json!({
                "radius": g.radius,
                "vertices": ball.labels(),
                "edges": ball.edges().iter().map(|&(u, v)| [ball.label(u), ball.label(v)]).collect::<Vec<_>>(),
            });
            Ok(Report::new("cayley ball", ball.to_text(), json).with_dot(ball.to_dot()))
        }
        CayleyCmd::Td { group, method, k } => {
            let (_, ball) = group_ball(group)?;
            match method {
                TdMethod::Ms => {
                    let ms = muller_schupp_td(&ball, *k).map_err(domain)?;
                    let check = match &ms.interior {
                        Ok(()) => "T1–T3 hold on the interior".to_string(),
                        Err(v) => format!("interior violation: {v}"),
                    };
                    let text = format!(
                        "{} bags, bag size {}, {check}\nlargest bag diameter {} (bound {})\n{}",
                        ms.td.len(),
                        ms.td.bag_size(),
                        ms.max_diameter,
                        ms.diameter_bound(),
                        ms.td.show(&ball)
                    );
                    let json = json!({
                        "bags": ms.td.len(), "bag_size": ms.td.bag_size(), "interior_valid": ms.interior.is_ok(),
                        "max_diameter": ms.max_diameter, "diameter_bound": ms.diameter_bound(),
                    });
                    let r = Report::new("cayley td", text, json).with_dot(ms.td.to_dot(&ball));
                    Ok(if ms.interior.is_ok() && ms.within_bound() { r } else { r.failed() })
                }
                TdMethod::Clique => {
                    let (inner, _) = ball.induced(&ball.interior());
                    if !is_chordal(&inner) {
                        return Err(CliError::Domain("the ball's interior is not chordal".into()));
                    }
                    let td = clique_tree(&inner).map_err(domain)?;
                    validate_td(&inner, &td).map_err(domain)?;
                    let text = format!("{} bags, bag size {}\n{}", td.len(), td.bag_size(), td.show(&inner));
                    let json = json!({ "bags": td.len(), "bag_size": td.bag_size() });
                    Ok(Report::new("cayley td", text, json).with_dot(td.to_dot(&inner)))
                }
            }
        }
        CayleyCmd::Treewidth { graph, backend, source, generators, radius } => {
            let g = match (graph, source) {
                (Some(p), _) => SimpleGraph::parse(&read(p)?).map_err(with_path(p))?,
                (None, Some(s)) => cayley_ball(oracle(backend, s, generators)?.as_ref(), *radius),
                (None, None) => return Err(CliError::Usage("give --graph or --source".into())),
            };
            let tw = treewidth_exact(&g).map_err(domain)?;
            Ok(Report::new("cayley treewidth", tw.to_string(), json!({ "vertices": g.len(), "treewidth": tw })))
        }
    }
}

fn resolve(ball: &SimpleGraph, label: &str) -> Result<usize, CliError> {
    ball.vertex(label)
        .or_else(|| ball.vertex(&label.replace('.', "·")))
        .ok_or_else(|| CliError::Domain(format!("no vertex `{label}` in the ball")))
}

fn cut_json(g: &SimpleGraph, c: &Cut) -> Value {
    let boundary: Vec<[&str; 2]> = c
        .delta()
        .iter()
        .map(|&(u, v)| if c.contains(u) { [g.label(u), g.label(v)] } else { [g.label(v), g.label(u)] })
        .collect();
    json!({
        "weight": c.weight(),
        "boundary": boundary,
        "side": c.len(),
        "side_infinite": c.side_infinite(),
        "complement_infinite": c.complement_infinite(),
    })
}

fn cut_line(g: &SimpleGraph, c: &Cut) -> String {
    let flag = |b: bool| if b { "infinite" } else { "finite" };
    format!("{} [{} | {}]", c.show(g), flag(c.side_infinite()), flag(c.complement_infinite()))
}

fn cuts(cmd: &CutsCmd) -> Result<Report, CliError> {
    match cmd {
        CutsCmd::Enum { group, k, around } => {
            let (_, ball) = group_ball(group)?;
            let s = if around.is_empty() {
                vec![0]
            } else {
                around.iter().map(|l| resolve(&ball, l)).collect::<Result<_, _>>()?
            };
            let found = enumerate_kcuts(&ball, &s, *k as usize);
            let mut text = format!("{} cuts of weight ≤ {k}\n", found.len());
            for c in &found {
                let _ = writeln!(text, "{}", cut_line(&ball, c));
            }
            let json = json!({ "k": k, "cuts": found.iter().map(|c| cut_json(&ball, c)).collect::<Vec<_>>() });
            let r = Report::new("cuts enum", text, json);
            Ok(match found.first() {
                Some(c) => r.with_dot(ball_dot_with_cut(&ball, c)),
                None => r,
            })
        }
        CutsCmd::Nested { group, first, second } => {
            let (_, ball) = group_ball(group)?;
            let side = |labels: &[String]| -> Result<Cut, CliError> {
                let vs: Vec<usize> = labels
                    .iter()
                    .flat_map(|l| l.split(',').map(str::trim).filter(|t| !t.is_empty()).map(str::to_string).collect::<Vec<_>>())
                    .map(|l| resolve(&ball, &l))
                    .collect::<Result<_, _>>()?;
                cut_from_vertices(&ball, &vs).map_err(domain)
            };
            let (c, d) = (side(first)?, side(second)?);
            let nested = is_nested(&c, &d);
            let names = ["C∩D", "C∩D̄", "C̄∩D", "C̄∩D̄"];
            let cs = corners(&c, &d);
            let mut text = format!("nested: {}\n", if nested { "yes" } else { "no" });
            for (n, set) in names.iter().zip(&cs) {
                let labels: Vec<&str> = set.iter().map(|&v| ball.label(v)).collect();
                let _ = writeln!(text, "{n}: {{{}}}", labels.join(", "));
            }
            let json = json!({ "nested": nested, "corners": cs.iter().map(Vec::len).collect::<Vec<_>>() });
            Ok(Report::new("cuts nested", text, json))
        }
        CutsCmd::Optimal(p) => {
            let run = Pipeline::new(p)?;
            let mut text = run.provenance();
            for (i, r) in run.opt.per_path.iter().enumerate() {
                let w = r.min_weight.map_or("-".into(), |w| w.to_string());
                let m = r.m.map_or("-".into(), |m| m.to_string());
                let _ = writeln!(text, "path {i}: minimal weight {w}, {} minimal, m {m}, {} optimal", r.minimal, r.optimal);
            }
            let _ = writeln!(text, "{} optimal cuts", run.opt.cuts.len());
            for c in &run.opt.cuts {
                let _ = writeln!(text, "{}", cut_line(&run.ball, c));
            }
            let json = json!({
                "provenance": run.provenance_json(),
                "cuts": run.opt.cuts.iter().map(|c| cut_json(&run.ball, c)).collect::<Vec<_>>(),
            });
            let r = Report::new("cuts optimal", text, json);
            Ok(match run.opt.cuts.first() {
                Some(c) => r.with_dot(ball_dot_with_cut(&run.ball, c)),
                None => r,
            })
        }
    }
}

/// Ball, path family and optimal cuts shared by the cut commands.
struct Pipeline {
    ball: SimpleGraph,
    paths: usize,
    opt: OptimalCuts,
}

impl Pipeline {
    fn new(p: &PipelineArgs) -> Result<Self, CliError> {
        let (o, ball) = group_ball(&p.group)?;
        let r = p.group.radius;
        let margin = p.margin.unwrap_or(r / 4);
        let spread = p.spread.unwrap_or(r / 2);
        let mut periods: Vec<Vec<(usize, bool)>> = Vec::new();
        for i in 0..o.generator_names().len() {
            let mut power = o.identity();
            let finite = (0..TORSION_CHECK).any(|_| {
                power = o.step(&power, i, false);
                power == o.identity()
            });
            if !finite {
                periods.push(vec![(i, false)]);
            }
        }
        for text in &p.period {
            periods.push(o.parse_generator_word(text).map_err(domain)?);
        }
        let windows: Vec<PathWindow> =
            translated_paths(o.as_ref(), &ball, &periods, spread).map_err(domain)?.into_iter().map(|p| p.window).collect();
        let opt = optimal_cuts(&ball, &windows, p.k.map(|k| k as usize), margin).map_err(domain)?;
        Ok(Pipeline { ball, paths: windows.len(), opt })
    }

    fn provenance(&self) -> String {
        format!(
            "radius {}, margin {}, k {}, {} paths\n",
            self.ball.radius().unwrap_or(0),
            self.opt.margin,
            self.opt.k,
            self.paths
        )
    }

    fn provenance_json(&self) -> Value {
        json!({ "radius": self.ball.radius(), "margin": self.opt.margin, "k": self.opt.k, "paths": self.paths })
    }
}

fn blocks_cmd(p: &PipelineArgs, lambda: Option<u64>) -> Result<Report, CliError> {
    let run = Pipeline::new(p)?;
    let tree: StructureTree = structure_tree(&run.opt.cuts).map_err(domain)?;
    let lambda = match lambda {
        Some(l) => l as usize,
        None => choose_lambda(&run.ball, &run.opt.cuts, p.group.radius).map_err(domain)?,
    };
    let bs = blocks(&run.ball, &tree, lambda).map_err(domain)?;
    let mut text = run.provenance();
    let _ = writeln!(text, "λ = {lambda}, {} blocks", bs.len());
    for b in &bs {
        let names: Vec<&str> = b.vertices.iter().map(|&v| run.ball.label(v)).collect();
        let tag = if b.truncated { " (truncated)" } else { "" };
        let _ = writeln!(text, "block {}: {} vertices{tag}: {{{}}}", b.class, b.len(), names.join(", "));
    }
    let json = json!({
        "provenance": run.provenance_json(),
        "lambda": lambda,
        "blocks": bs.iter().map(|b| json!({
            "class": b.class, "size": b.len(), "truncated": b.truncated, "connected": b.connected,
            "vertices": b.vertices.iter().map(|&v| run.ball.label(v)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    let r = Report::new("blocks", text, json);
    Ok(if bs.iter().all(|b| b.connected) { r } else { r.failed() })
}
