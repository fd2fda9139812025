use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use dfa_core::{minimise, parse_dfa, serialize_dfa, to_dot, trim, Dfa, Ext, Mode};
use dfa_distance::build_distance_forest;
use dfa_hardness::{
    build_hyper_colored, build_hyper_instance, build_kmin_colored, build_kmin_instance, parse_coloring, parse_graph,
    verify_hardness, Graph, HardnessError, HardnessInstance, Report,
};
use dfa_kmin::{
    count_symdiff, hyper_minimise, k_minimise, minimal_form, similarity_bound, sizes_for_all_k, Bound, Sweep,
};
use serde::Serialize;

use crate::{Command, DfaFormat, FamilyArg, GraphSource, ModeArg, NamedGraph, Params};

pub struct Failure {
    pub code: u8,
    pub message: String,
}

const IO: u8 = 1;
const VERIFY: u8 = 1;
const PARSE: u8 = 2;
const INFINITE: u8 = 3;
const CONSTRAINT: u8 = 4;

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| fail(IO, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| fail(IO, format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Dfa, Failure> {
    parse_dfa(&read(path)?).map_err(|e| fail(PARSE, format!("{}: {e}", path.display())))
}

fn render(d: &Dfa, format: DfaFormat) -> String {
    match format {
        DfaFormat::Text => serialize_dfa(d),
        DfaFormat::Dot => to_dot(d),
    }
}

fn ext(e: Ext) -> Option<usize> {
    e.finite()
}

fn hardness(e: HardnessError) -> Failure {
    let code = match e {
        HardnessError::Format { .. } => PARSE,
        _ => CONSTRAINT,
    };
    fail(code, e.to_string())
}

/// States before and after, the exact error count and the similarity bound.
fn lossy_summary(before: &Dfa, after: &Dfa) -> Result<String, Failure> {
    let diff = count_symdiff(before, after, Bound::Auto).map_err(|e| fail(INFINITE, e.to_string()))?;
    let bound = similarity_bound(before, after);
    let bound = ext(bound).map_or("inf".to_string(), |b| b.to_string());
    Ok(format!("{} {}\nerrors {}\nsimilarity_bound {bound}", before.num_states(), after.num_states(), diff.count))
}

#[derive(Serialize)]
struct Comparison {
    /// `None` for an unbounded count of an infinite difference.
    errors: Option<String>,
    max_error_len: Option<usize>,
    similarity_bound: Option<usize>,
    finite: bool,
}

fn graph(source: &GraphSource) -> Result<Graph, Failure> {
    match (&source.graph, source.named) {
        (Some(path), _) => parse_graph(&read(path)?).map_err(|e| fail(PARSE, format!("{}: {e}", path.display()))),
        (None, Some(NamedGraph::K3)) => Ok(Graph::k3()),
        (None, Some(NamedGraph::C5)) => Ok(Graph::c5()),
        (None, Some(NamedGraph::Petersen)) => Ok(Graph::petersen()),
        (None, None) => unreachable!("clap requires one graph source"),
    }
}

fn kmin_params(params: &Params) -> Result<(usize, usize), Failure> {
    match (params.s, params.k) {
        (Some(s), Some(k)) => Ok((s, k)),
        _ => Err(fail(CONSTRAINT, "the kmin family needs --s and --k")),
    }
}

fn instance(family: FamilyArg, g: &Graph, params: &Params) -> Result<HardnessInstance, Failure> {
    match family {
        FamilyArg::Hyper => build_hyper_instance(g).map_err(hardness),
        FamilyArg::Kmin => {
            let (s, k) = kmin_params(params)?;
            build_kmin_instance(g, s, k).map_err(hardness)
        }
    }
}

fn report_json(r: &Report) -> String {
    serde_json::to_string_pretty(r).expect("reports serialise") + "\n"
}

pub fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Minimise { input, output, mode, drop_dead, format } => {
            let d = load(&input)?;
            let src = if drop_dead { trim(&d, true) } else { d.clone() };
            let mode = match mode {
                ModeArg::Partial => Mode::Partial,
                ModeArg::Total => Mode::Total,
            };
            let m = minimise(&src, mode);
            write(&output, &render(&m, format))?;
            println!("{} {}", d.num_states(), m.num_states());
        }
        Command::Kmin { input, k, output, format } => {
            let d = load(&input)?;
            let m = k_minimise(&d, k);
            write(&output, &render(&m, format))?;
            println!("{}", lossy_summary(&d, &m)?);
        }
        Command::Hypermin { input, output, format } => {
            let d = load(&input)?;
            let m = hyper_minimise(&d);
            write(&output, &render(&m, format))?;
            println!("{}", lossy_summary(&d, &m)?);
        }
        Command::Sizes { input, output } => {
            let d = load(&input)?;
            let mut csv = String::from("k,size\n");
            for (k, size) in sizes_for_all_k(&d).into_iter().enumerate() {
                writeln!(csv, "{k},{size}").expect("write to string");
            }
            match output {
                Some(path) => write(&path, &csv)?,
                None => print!("{csv}"),
            }
        }
        Command::Sweep { input, dir } => {
            let d = load(&input)?;
            if let Some(dir) = &dir {
                fs::create_dir_all(dir).map_err(|e| fail(IO, format!("{}: {e}", dir.display())))?;
            }
            let mut sweep = Sweep::new(&d);
            let mut last = None;
            println!("k,size,moves");
            loop {
                let size = sweep.num_states();
                println!("{},{size},{}", sweep.k(), sweep.moves());
                if let Some(dir) = &dir {
                    if last != Some(size) {
                        write(&dir.join(format!("k{}.dfa", sweep.k())), &serialize_dfa(&sweep.snapshot()))?;
                    }
                }
                last = Some(size);
                if !sweep.advance() {
                    break;
                }
            }
        }
        Command::Forest { input, output, format } => {
            let d = minimal_form(&load(&input)?);
            let f = build_distance_forest(&d).map_err(|e| fail(CONSTRAINT, e.to_string()))?;
            let text = match format {
                DfaFormat::Text => f.dump(),
                DfaFormat::Dot => f.to_dot(),
            };
            match output {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
        }
        Command::Compare { a, b, max_len } => {
            let (a, b) = (load(&a)?, load(&b)?);
            let bound = max_len.map_or(Bound::Auto, Bound::MaxLen);
            let out = match count_symdiff(&a, &b, bound) {
                Ok(s) => Comparison {
                    errors: Some(s.count.to_string()),
                    max_error_len: s.max_error_len,
                    similarity_bound: ext(similarity_bound(&a, &b)),
                    finite: s.finite,
                },
                Err(_) => Comparison { errors: None, max_error_len: None, similarity_bound: None, finite: false },
            };
            println!("{}", serde_json::to_string(&out).expect("serialisable"));
            if out.errors.is_none() {
                return Err(fail(INFINITE, "the symmetric difference is infinite; use --max-len"));
            }
        }
        Command::Gen { family, source, params, coloring, output, colored_out, report } => {
            let g = graph(&source)?;
            let inst = instance(family, &g, &params)?;
            write(&output, &serialize_dfa(&inst.dfa))?;
            if let Some(path) = coloring {
                let c =
                    parse_coloring(&read(&path)?, &g).map_err(|e| fail(PARSE, format!("{}: {e}", path.display())))?;
                let colored = match family {
                    FamilyArg::Hyper => build_hyper_colored(&g, &c),
                    FamilyArg::Kmin => {
                        let (s, k) = kmin_params(&params)?;
                        build_kmin_colored(&g, &c, s, k)
                    }
                }
                .map_err(hardness)?;
                let colored_path = colored_out.ok_or_else(|| fail(CONSTRAINT, "--coloring needs --colored-out"))?;
                write(&colored_path, &serialize_dfa(&colored))?;
                let r = verify_hardness(&inst, &colored).map_err(hardness)?;
                match report {
                    Some(path) => write(&path, &report_json(&r))?,
                    None => print!("{}", report_json(&r)),
                }
                if !r.pass {
                    return Err(fail(VERIFY, "verification failed"));
                }
            }
        }
        Command::Verify { family, source, params, colored } => {
            let g = graph(&source)?;
            let inst = instance(family, &g, &params)?;
            let r = verify_hardness(&inst, &load(&colored)?).map_err(hardness)?;
            print!("{}", report_json(&r));
            if !r.pass {
                return Err(fail(VERIFY, "verification failed"));
            }
        }
    }
    Ok(())
}
