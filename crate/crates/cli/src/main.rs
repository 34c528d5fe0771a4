use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use braid3::automaton::{build_geodesic_dfa, build_sl_dfa};
use braid3::cayley;
use braid3::fingerprint::bfs_ball;
use braid3::geodesic::{check, translation_length_witness, ViolationReport};
use braid3::growth::{
    bruteforce_geodesic_counts, geodesic_gf_closed_form, gf_from_dfa, spherical_gf_closed_form,
    to_u64s,
};
use braid3::normal_forms::{element_length, equal, psi1, shortlex, to_cf, to_rg};
use braid3::verify::{self, geodesic_state_report, Bounds};
use braid3::Word;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "braid3",
    version,
    about = "Geodesics, normal forms and growth in B3 = <a, b | aba = bab>"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a word is geodesic and list the conflicts found.
    Geodesic { word: String },
    /// Rewrite a word into one of the normal forms.
    Normalize {
        #[arg(long, value_enum)]
        form: Form,
        word: String,
    },
    /// Decide whether two words represent the same element.
    Equal { first: String, second: String },
    /// Word-metric length of the element.
    Length { word: String },
    /// Translation length of the element.
    TranslationLength {
        word: String,
        /// Also print the cyclically geodesic word it was read from.
        #[arg(long)]
        witness: bool,
    },
    /// Growth series coefficients, or a cross-check of all sources.
    Growth {
        #[arg(long, value_enum, required_unless_present = "verify")]
        kind: Option<Kind>,
        #[arg(long, default_value_t = 12)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = Source::Formula)]
        source: Source,
        /// Compare closed forms, automata and brute force; exit 2 on mismatch.
        #[arg(long)]
        verify: bool,
    },
    /// Export one of the minimal automata.
    Fsa {
        #[arg(long, value_enum)]
        language: Language,
        #[arg(long, value_enum, default_value_t = Export::Json)]
        export: Export,
        /// Print a per-state description instead (geodesic language only).
        #[arg(long, conflicts_with = "export")]
        report: bool,
    },
    /// Ball of the Cayley graph: prints `n,b_n` rows.
    CayleyBall {
        #[arg(long)]
        radius: usize,
        /// Write the graph in DOT format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run every consistency check with lengths capped at `--max-len`.
    Selftest {
        #[arg(long, default_value_t = 10)]
        max_len: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Cf,
    Rg,
    Sl,
    Tf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Geodesic,
    Spherical,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Formula,
    Dfa,
    Bruteforce,
}

#[derive(Clone, Copy, ValueEnum)]
enum Language {
    Geodesic,
    Shortlex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Export {
    Dot,
    Json,
}

type CliResult = Result<ExitCode, Box<dyn std::error::Error>>;

fn parse(text: &str) -> braid3::Result<Word> {
    Word::parse(text)
}

fn describe(report: &ViolationReport) -> Vec<String> {
    let mut lines = Vec::new();
    if !report.reduced {
        lines.push("not freely reduced".to_string());
    }
    if let Some(s) = report.star {
        lines.push(format!(
            "star: positive pair at {}, negative pair at {}",
            s.positive_pair, s.negative_pair
        ));
    }
    if let Some(d) = report.doublestar {
        lines.push(format!(
            "double star: triple at {}, opposite letter at {}",
            d.triple, d.letter
        ));
    }
    lines
}

fn coefficients(kind: Kind, terms: usize, source: Source) -> braid3::Result<Vec<u64>> {
    Ok(match (kind, source) {
        (Kind::Geodesic, Source::Formula) => {
            to_u64s(&geodesic_gf_closed_form().series_coefficients(terms)?)
        }
        (Kind::Geodesic, Source::Dfa) => to_u64s(&build_geodesic_dfa().count_words(terms)),
        (Kind::Geodesic, Source::Bruteforce) => bruteforce_geodesic_counts(terms)?,
        (Kind::Spherical, Source::Formula) => {
            to_u64s(&spherical_gf_closed_form().series_coefficients(terms)?)
        }
        (Kind::Spherical, Source::Dfa) => to_u64s(&build_sl_dfa().count_words(terms)),
        (Kind::Spherical, Source::Bruteforce) => bfs_ball(terms)?.counts().to_vec(),
    })
}

fn verify_growth(terms: usize) -> braid3::Result<bool> {
    let mut ok = true;
    for (kind, name) in [(Kind::Geodesic, "geodesic"), (Kind::Spherical, "spherical")] {
        let sources = [Source::Formula, Source::Dfa, Source::Bruteforce]
            .map(|s| coefficients(kind, terms, s));
        let [formula, dfa, brute] = sources;
        let (formula, dfa, brute) = (formula?, dfa?, brute?);
        let agree = formula == dfa && dfa == brute;
        println!(
            "{name} coefficients: {}",
            if agree { "agree" } else { "MISMATCH" }
        );
        if !agree {
            println!("  formula    {formula:?}\n  dfa        {dfa:?}\n  bruteforce {brute:?}");
        }
        let (dfa, closed) = match kind {
            Kind::Geodesic => (build_geodesic_dfa(), geodesic_gf_closed_form()),
            Kind::Spherical => (build_sl_dfa(), spherical_gf_closed_form()),
        };
        let gf = gf_from_dfa(&dfa)?;
        let same = gf.equals(&closed);
        println!(
            "{name} generating function: {gf} {}",
            if same {
                "equals closed form"
            } else {
                "DIFFERS"
            }
        );
        ok &= agree && same;
    }
    Ok(ok)
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Geodesic { word } => {
            let report = check(&parse(&word)?);
            println!("{}", report.is_geodesic());
            for line in describe(&report) {
                println!("{line}");
            }
        }
        Command::Normalize { form, word } => {
            let w = parse(&word)?;
            let text = match form {
                Form::Cf => to_cf(&w).to_string(),
                Form::Rg => to_rg(&w)?.to_string(),
                Form::Sl => shortlex(&w).to_string(),
                Form::Tf => psi1(&w)?.tf.to_string(),
            };
            println!("{text}");
        }
        Command::Equal { first, second } => {
            println!("{}", equal(&parse(&first)?, &parse(&second)?));
        }
        Command::Length { word } => {
            println!("{}", element_length(&parse(&word)?));
        }
        Command::TranslationLength { word, witness } => {
            let (tau, x) = translation_length_witness(&parse(&word)?);
            println!("{tau}");
            if witness {
                println!("{x}");
            }
        }
        Command::Growth {
            kind,
            terms,
            source,
            verify,
        } => {
            if verify {
                return Ok(if verify_growth(terms)? {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(2)
                });
            }
            let kind = kind.expect("required unless --verify");
            for c in coefficients(kind, terms, source)? {
                println!("{c}");
            }
        }
        Command::Fsa {
            language,
            export,
            report,
        } => {
            if report {
                if !matches!(language, Language::Geodesic) {
                    return Err("--report is only available for the geodesic language".into());
                }
                for line in geodesic_state_report() {
                    println!("{line}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let (dfa, name) = match language {
                Language::Geodesic => (build_geodesic_dfa(), "geodesic"),
                Language::Shortlex => (build_sl_dfa(), "shortlex"),
            };
            match export {
                Export::Json => println!("{}", dfa.to_json()),
                Export::Dot => print!("{}", dfa.to_dot(name)),
            }
        }
        Command::CayleyBall { radius, dot } => {
            let graph = cayley::ball(radius)?;
            println!("n,b_n");
            for (n, c) in graph.layer_counts().iter().enumerate() {
                println!("{n},{c}");
            }
            if let Some(path) = dot {
                fs::write(&path, cayley::export_dot(&graph))?;
            }
        }
        Command::Selftest { max_len } => {
            let mut ok = true;
            for outcome in verify::run_all(&Bounds::capped(max_len)) {
                println!("{outcome}");
                ok &= outcome.passed;
            }
            return Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors share the domain-error code so that 2 always means a failed check.
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
