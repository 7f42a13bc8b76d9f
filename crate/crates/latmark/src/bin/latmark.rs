//! Command line front end.
//!
//! Exit codes: 0 success (and verification true), 1 verification false,
//! 2 malformed input, 3 resource limit exceeded.

use latmark::graded::SynthOptions;
use latmark::io;
use latmark::{Error, Lattice};
use std::process::ExitCode;

const USAGE: &str = "usage: latmark <decompose|markov|verify|fibers|ci|indispensable|hilbert> <latticefile> \
[--set FILE] [--mode generating|markov|pure] [--monomial e1,e2,...] [--json] [--seed N]

The lattice file holds a header line \"n m\" and m rows of n integers.
LATMARK_MAX_FIBER caps fiber enumeration (default 100000).";

struct Args {
    command: String,
    lattice_path: String,
    set_path: Option<String>,
    mode: String,
    monomial: Option<String>,
    json: bool,
    seed: Option<u64>,
}

fn parse_args(argv: &[String]) -> Result<Args, String> {
    if argv.len() < 2 {
        return Err(USAGE.to_string());
    }
    let mut args = Args {
        command: argv[0].clone(),
        lattice_path: argv[1].clone(),
        set_path: None,
        mode: "markov".to_string(),
        monomial: None,
        json: false,
        seed: None,
    };
    let mut i = 2;
    while i < argv.len() {
        let opt = argv[i].as_str();
        if opt == "--json" {
            args.json = true;
            i += 1;
            continue;
        }
        if !matches!(opt, "--set" | "--mode" | "--monomial" | "--seed") {
            return Err(format!("unknown option {opt}\n{USAGE}"));
        }
        let value = argv
            .get(i + 1)
            .ok_or_else(|| format!("{opt} needs a value"))?
            .clone();
        match opt {
            "--set" => args.set_path = Some(value),
            "--mode" => args.mode = value,
            "--monomial" => args.monomial = Some(value),
            "--seed" => {
                args.seed = Some(value.parse().map_err(|_| format!("bad seed {value:?}"))?)
            }
            _ => unreachable!(),
        }
        i += 2;
    }
    Ok(args)
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit { .. } => 3,
        _ => 2,
    }
}

fn run(args: &Args) -> Result<u8, (u8, String)> {
    let max_fiber = match std::env::var("LATMARK_MAX_FIBER") {
        Ok(v) => v
            .parse::<usize>()
            .map_err(|_| (2u8, format!("invalid LATMARK_MAX_FIBER value {v:?}")))?,
        Err(_) => latmark::DEFAULT_MAX_FIBER,
    };
    let opt = SynthOptions { max_fiber, seed: args.seed };
    let fail = |e: Error| (exit_code_for(&e), e.to_string());
    let text = std::fs::read_to_string(&args.lattice_path)
        .map_err(|e| (2u8, format!("cannot read {}: {e}", args.lattice_path)))?;
    let (n, rows) = io::parse_lattice_file(&text).map_err(fail)?;
    let lattice = Lattice::canonicalize(&rows, n).map_err(fail)?;
    match args.command.as_str() {
        "decompose" => {
            let rep = latmark::decomposition_report(&lattice).map_err(fail)?;
            if args.json {
                let json = io::DecompositionJson::from(&rep);
                println!("{}", serde_json::to_string_pretty(&json).unwrap());
            } else {
                print!("{}", io::render_decomposition(&rep));
            }
            Ok(0)
        }
        "markov" => {
            let rep =
                latmark::synthesis::markov_basis_general_opt(&lattice, &opt).map_err(fail)?;
            if args.json {
                let json = io::MarkovJson::from(&rep);
                println!("{}", serde_json::to_string_pretty(&json).unwrap());
            } else {
                print!("{}", io::render_markov(&rep));
            }
            Ok(0)
        }
        "verify" => {
            let set_path = args
                .set_path
                .as_ref()
                .ok_or((2u8, "verify needs --set FILE".to_string()))?;
            let set_text = std::fs::read_to_string(set_path)
                .map_err(|e| (2u8, format!("cannot read {set_path}: {e}")))?;
            let set = io::parse_binomial_file(&set_text, n).map_err(fail)?;
            let outcome = match args.mode.as_str() {
                "markov" => {
                    latmark::synthesis::verify_markov_detailed(&lattice, &set, &opt).map_err(fail)?
                }
                "generating" => {
                    latmark::synthesis::verify_generating_detailed(&lattice, &set, &opt)
                        .map_err(fail)?
                }
                "pure" => {
                    let ok = latmark::verify_pure_markov(&lattice, &set);
                    latmark::synthesis::VerifyOutcome {
                        ok,
                        diagnostics: if ok {
                            Vec::new()
                        } else {
                            vec!["the set is not a Markov basis of the pure lattice ideal"
                                .to_string()]
                        },
                    }
                }
                other => return Err((2, format!("unknown mode {other:?}"))),
            };
            if args.json {
                let json = io::VerifyJson {
                    schema: io::SCHEMA_VERSION,
                    kind: "verify".into(),
                    mode: args.mode.clone(),
                    ok: outcome.ok,
                    diagnostics: outcome.diagnostics.clone(),
                };
                println!("{}", serde_json::to_string_pretty(&json).unwrap());
            } else {
                print!("{}", io::render_verify(&args.mode, outcome.ok, &outcome.diagnostics));
            }
            Ok(if outcome.ok { 0 } else { 1 })
        }
        "fibers" => {
            let arg = args
                .monomial
                .as_ref()
                .ok_or((2u8, "fibers needs --monomial e1,e2,...".to_string()))?;
            let u = io::parse_monomial(arg, n).map_err(fail)?;
            let d = latmark::synthesis::fiber_descriptor_opt(&lattice, &u, &opt).map_err(fail)?;
            if args.json {
                let json = io::FiberJson::from(&d);
                println!("{}", serde_json::to_string_pretty(&json).unwrap());
            } else {
                print!("{}", io::render_fiber(&d));
            }
            Ok(0)
        }
        "ci" => {
            let rep = latmark::ci::is_binomial_ci_opt(&lattice, &opt).map_err(fail)?;
            if args.json {
                let json = io::CiJson::from(&rep);
                println!("{}", serde_json::to_string_pretty(&json).unwrap());
            } else {
                print!("{}", io::render_ci(&rep));
            }
            Ok(0)
        }
        "indispensable" => {
            let (bins, mons) = latmark::indispensables_general(&lattice).map_err(fail)?;
            if args.json {
                let json = io::IndispensableJson {
                    schema: io::SCHEMA_VERSION,
                    kind: "indispensable".into(),
                    binomials: bins.iter().map(io::BinomialJson::from).collect(),
                    monomials: mons
                        .iter()
                        .map(|m| m.iter().map(|x| x.to_string()).collect())
                        .collect(),
                };
                println!("{}", serde_json::to_string_pretty(&json).unwrap());
            } else {
                if bins.is_empty() {
                    println!("binomials: none");
                } else {
                    let list: Vec<String> = bins.iter().map(|b| b.to_string()).collect();
                    println!("binomials: {}", list.join(", "));
                }
                let list: Vec<String> = mons
                    .iter()
                    .map(|m| latmark::binomial::format_monomial(m))
                    .collect();
                println!("monomials: {}", list.join(", "));
            }
            Ok(0)
        }
        "hilbert" => {
            let basis = latmark::hilbert_basis_positive(&lattice).map_err(fail)?;
            if args.json {
                let json = io::HilbertJson {
                    schema: io::SCHEMA_VERSION,
                    kind: "hilbert".into(),
                    basis: basis
                        .iter()
                        .map(|v| v.iter().map(|x| x.to_string()).collect())
                        .collect(),
                };
                println!("{}", serde_json::to_string_pretty(&json).unwrap());
            } else {
                println!("hilbert basis ({} elements):", basis.len());
                for v in &basis {
                    println!("  {}", latmark::ivec::fmt_vec(v));
                }
            }
            Ok(0)
        }
        other => Err((2, format!("unknown command {other:?}\n{USAGE}"))),
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let args = match parse_args(&argv) {
        Ok(a) => a,
        Err(msg) => {
            eprintln!("{msg}");
            return ExitCode::from(2);
        }
    };
    match run(&args) {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("latmark: {msg}");
            ExitCode::from(code)
        }
    }
}
