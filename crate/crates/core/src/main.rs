use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use sgsym::canon::is_sign_symmetric;
use sgsym::census::cycle_census;
use sgsym::construct::{
    construct_f_family, construct_gamma_s, construct_gamma_st, construct_gc_split,
    construct_selfcomp, named_instance, paley_conference, FFamilySpec, NamedInstance,
    SelfCompMode,
};
use sgsym::enumerate::{
    enumerate_complete_classes, ques2_search, report_from_classes, ClassRecord, EnumMode,
    EnumReport,
};
use sgsym::error::SgError;
use sgsym::io::{parse_graph6, parse_sg, serialize_sg};
use sgsym::spectra::{char_poly, eigenvalues, is_symmetric_spectrum};
use sgsym::verify::{all_passed, verify_paper};
use sgsym::{SignedGraph, UGraph};

#[derive(Parser)]
#[command(
    name = "sgsym",
    about = "Signed-graph switching classes: exact spectra, sign-symmetry, enumeration",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact characteristic polynomial of a signed graph
    Charpoly { file: PathBuf },
    /// Print all adjacency eigenvalues (display precision: 6 decimals)
    Spectrum { file: PathBuf },
    /// Decide whether the spectrum is symmetric about the origin (exact)
    SymSpectrum { file: PathBuf },
    /// Decide whether the graph is switching isomorphic to its negation
    SignSymmetric {
        file: PathBuf,
        /// Also print the certifying permutation and switching set
        #[arg(long)]
        witness: bool,
    },
    /// Count positive and negative cycles by length
    Census {
        file: PathBuf,
        /// Longest cycle length to count (default: the order)
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Build a signed graph from one of the known recipes
    Construct {
        #[command(subcommand)]
        recipe: Recipe,
    },
    /// List all switching-isomorphism classes of complete signed graphs
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Keep only the symmetric-spectrum classes
        #[arg(long)]
        sym_spectrum_only: bool,
        /// Allow the minutes-scale order-9 run
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        json: bool,
    },
    /// Search for complete signed graphs with balanced odd cycles but a
    /// non-symmetric spectrum
    Ques2 {
        #[arg(long)]
        order: usize,
    },
    /// Re-run every documented catalog and family check
    VerifyPaper {
        #[arg(long)]
        json: bool,
        /// Include the minutes-scale order-9 catalog check
        #[arg(long)]
        extended: bool,
    },
}

#[derive(Subcommand)]
enum Recipe {
    /// Block construction [[B, C], [C, -B]] from two symmetric matrices
    FFamily {
        /// Matrix B, rows separated by ';', entries by ',' (e.g. "0,1;1,0")
        #[arg(long)]
        b: String,
        /// Matrix C, same format
        #[arg(long)]
        c: String,
        #[command(flatten)]
        out: OutFile,
    },
    /// Complete signed graph whose negative edges induce G and its complement
    /// on two halves
    GcSplit {
        /// The graph G in graph6 notation
        #[arg(long)]
        graph6: String,
        #[command(flatten)]
        out: OutFile,
    },
    /// Complete signed graph over self-complementary negative parts
    Selfcomp {
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// First graph in graph6 notation
        #[arg(long)]
        g: String,
        /// Second graph (join/union modes only)
        #[arg(long)]
        h: Option<String>,
        #[command(flatten)]
        out: OutFile,
    },
    /// Signed hexagon with s pendant-pair attachments
    GammaS {
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        out: OutFile,
    },
    /// Signed hexagon with s and t two-vertex path attachments
    GammaSt {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        out: OutFile,
    },
    /// Conference-matrix graph from the quadratic residues of F_q
    Paley {
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        out: OutFile,
    },
    /// A named reference instance
    Named {
        /// One of: excep8, excep9, non-sign
        #[arg(long)]
        id: String,
        #[command(flatten)]
        out: OutFile,
    },
}

#[derive(Args)]
struct OutFile {
    /// Output file (signed edge-list format)
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Join,
    Union,
    Cone,
}

impl From<ModeArg> for SelfCompMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Join => SelfCompMode::Join,
            ModeArg::Union => SelfCompMode::Union,
            ModeArg::Cone => SelfCompMode::Cone,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type RunResult = Result<ExitCode, Box<dyn std::error::Error>>;

fn load(path: &PathBuf) -> Result<SignedGraph, Box<dyn std::error::Error>> {
    let text = fs::read_to_string(path)?;
    Ok(parse_sg(&text)?)
}

fn run(cli: Cli) -> RunResult {
    match cli.command {
        Command::Charpoly { file } => {
            println!("{}", char_poly(&load(&file)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum { file } => {
            for ev in eigenvalues(&load(&file)?) {
                println!("{ev:.6}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::SymSpectrum { file } => {
            println!("{}", is_symmetric_spectrum(&load(&file)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::SignSymmetric { file, witness } => {
            let g = load(&file)?;
            let (ok, w) = is_sign_symmetric(&g)?;
            println!("{ok}");
            if witness {
                if let Some(w) = w {
                    println!("perm: {:?}", w.perm);
                    println!("switch_set: {:?}", w.switch_set);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { file, max_len } => {
            let g = load(&file)?;
            let max_len = max_len.unwrap_or(g.order());
            let c = cycle_census(&g, max_len)?;
            println!("len positive negative");
            for l in 3..=max_len {
                println!("{l} {} {}", c.plus(l), c.minus(l));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { recipe } => run_construct(recipe),
        Command::Enumerate {
            order,
            sym_spectrum_only,
            extended,
            json,
        } => {
            if order == 9 && !extended {
                return Err(
                    "order 9 takes minutes; pass --extended to confirm".to_string().into(),
                );
            }
            let mode = if sym_spectrum_only {
                EnumMode::SymSpectrumOnly
            } else {
                EnumMode::Full
            };
            let start = std::time::Instant::now();
            let classes = enumerate_complete_classes(order, mode)?;
            let report = report_from_classes(order, &classes, start.elapsed());
            if json {
                println!("{}", enumeration_json(&classes, &report, mode));
            } else {
                print_class_table(&classes);
                print_report(&report, mode);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ques2 { order } => {
            let hits = ques2_search(order)?;
            if hits.is_empty() {
                println!("no class of order {order} has balanced odd cycles and a non-symmetric spectrum");
            } else {
                println!(
                    "{} candidate class(es) with balanced odd cycles but non-symmetric spectrum:",
                    hits.len()
                );
                print_class_table(&hits);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { json, extended } => {
            let checks = verify_paper(extended);
            let ok = all_passed(&checks);
            if json {
                let arr: Vec<_> = checks
                    .iter()
                    .map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"checks": arr, "all_passed": ok}))?
                );
            } else {
                for c in &checks {
                    println!("[{}] {} — {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
                }
                println!(
                    "{}",
                    if ok {
                        "all checks passed"
                    } else {
                        "SOME CHECKS FAILED"
                    }
                );
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn run_construct(recipe: Recipe) -> RunResult {
    let (g, out) = match recipe {
        Recipe::FFamily { b, c, out } => {
            let spec = FFamilySpec {
                b: parse_matrix(&b)?,
                c: parse_matrix(&c)?,
            };
            (construct_f_family(&spec)?, out)
        }
        Recipe::GcSplit { graph6, out } => (construct_gc_split(&parse_graph6(&graph6)?), out),
        Recipe::Selfcomp { mode, g, h, out } => {
            let g = parse_graph6(&g)?;
            let h: Option<UGraph> = h.as_deref().map(parse_graph6).transpose()?;
            (construct_selfcomp(mode.into(), &g, h.as_ref())?, out)
        }
        Recipe::GammaS { s, out } => (construct_gamma_s(s)?, out),
        Recipe::GammaSt { s, t, out } => (construct_gamma_st(s, t)?, out),
        Recipe::Paley { q, out } => (paley_conference(q)?, out),
        Recipe::Named { id, out } => {
            let id: NamedInstance = id.parse()?;
            (named_instance(id), out)
        }
    };
    fs::write(&out.output, serialize_sg(&g))?;
    eprintln!(
        "wrote {} (order {}, {} edges)",
        out.output.display(),
        g.order(),
        g.edge_count()
    );
    Ok(ExitCode::SUCCESS)
}

/// Parse "0,1;1,0" into a matrix over {-1, 0, 1}.
fn parse_matrix(text: &str) -> Result<Vec<Vec<i8>>, SgError> {
    text.split(';')
        .map(|row| {
            row.split(',')
                .map(|cell| {
                    cell.trim()
                        .parse::<i8>()
                        .map_err(|_| SgError::InvalidParameter(format!("bad matrix entry '{cell}'")))
                })
                .collect()
        })
        .collect()
}

fn charpoly_strings(r: &ClassRecord) -> Vec<String> {
    r.charpoly.coeffs().iter().map(|c| c.to_string()).collect()
}

fn class_json(r: &ClassRecord) -> serde_json::Value {
    json!({
        "order": r.order,
        "canonical": r.canonical.to_hex(),
        "negative_edges": r.negative_rep.edges(),
        "charpoly": charpoly_strings(r),
        "sym_spectrum": r.sym_spectrum,
        "sign_symmetric": r.sign_symmetric,
    })
}

fn enumeration_json(classes: &[ClassRecord], report: &EnumReport, mode: EnumMode) -> String {
    let arr: Vec<_> = classes.iter().map(class_json).collect();
    serde_json::to_string_pretty(&json!({
        "order": report.order,
        "mode": if mode == EnumMode::Full { "full" } else { "sym-spectrum-only" },
        "classes": arr,
        "report": {
            "total_classes": report.total_classes,
            "sym_spectrum_classes": report.sym_spectrum_classes,
            "sym_spectrum_classes_mod_negation": report.sym_spectrum_classes_mod_negation,
            "sign_symmetric_classes": report.sign_symmetric_classes,
            "elapsed_ms": report.elapsed.as_millis(),
        },
    }))
    .expect("report serialization")
}

fn print_class_table(classes: &[ClassRecord]) {
    println!("canonical | negative edges | charpoly | sym_spectrum | sign_symmetric");
    for r in classes {
        println!(
            "{} | {:?} | {} | {} | {}",
            r.canonical.to_hex(),
            r.negative_rep.edges(),
            r.charpoly,
            r.sym_spectrum,
            r.sign_symmetric
        );
    }
}

fn print_report(report: &EnumReport, mode: EnumMode) {
    if mode == EnumMode::Full {
        println!("total classes: {}", report.total_classes);
    }
    println!(
        "symmetric-spectrum classes: {} ({} modulo negation)",
        report.sym_spectrum_classes, report.sym_spectrum_classes_mod_negation
    );
    println!("sign-symmetric classes: {}", report.sign_symmetric_classes);
    println!("elapsed: {:.3}s", report.elapsed.as_secs_f64());
}
