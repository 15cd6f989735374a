//! Command-line front end: word and tableau transforms on stdin/args,
//! crystal exploration with DOT export, and the verification suites.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use symplactic::alphabet::Letter;
use symplactic::crystal::{self, enumerate_component};
use symplactic::error::Error;
use symplactic::insertion;
use symplactic::io::{
    component_dot, format_word, parse_column, parse_shape_spec, parse_word, render_skew,
    render_tableau, PairJson, TableauJson,
};
use symplactic::oracle::{run_suite, SuiteParams, SUITE_NAMES};
use symplactic::rs;
use symplactic::sjdt::{rectify, sjdt_slide, CornerPolicy};

#[derive(Parser)]
#[command(
    name = "symplactic",
    version,
    about = "crystal/plactic toolkit for the signed alphabet 1..n, n̄..1̄"
)]
struct Cli {
    /// Rank n of the alphabet
    #[arg(long, global = true, default_value_t = 0)]
    rank: u8,

    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Render barred letters with combining overlines
    #[arg(long, global = true)]
    unicode: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WordArg {
    /// Word as whitespace-separated signed integers, e.g. "3 5 -5 -4 -3 -2"
    #[arg(allow_hyphen_values = true)]
    word: String,
}

#[derive(Subcommand)]
enum Command {
    /// Tableau of a word (insertion algorithm)
    P(WordArg),
    /// Shape sequence recorded while inserting a word
    Q(WordArg),
    /// Both halves of the correspondence
    Rs(WordArg),
    /// Invert a (tableau, shape sequence) pair read as JSON
    RsInv {
        /// File with the pair JSON; stdin when omitted
        file: Option<String>,
    },
    /// Insert one letter into a tableau read as JSON
    Insert {
        /// Letter as a signed integer
        #[arg(allow_hyphen_values = true)]
        letter: i64,
        /// File with the tableau JSON; stdin when omitted
        file: Option<String>,
    },
    /// Split an admissible column into its two halves
    Split {
        /// Column as a strictly increasing word
        #[arg(allow_hyphen_values = true)]
        column: String,
    },
    /// Coadmissible companion of an admissible column
    Phi {
        #[arg(allow_hyphen_values = true)]
        column: String,
    },
    /// Admissible column back from a coadmissible one
    PhiInv {
        #[arg(allow_hyphen_values = true)]
        column: String,
    },
    /// Two-cell contraction of a minimal non-admissible column word
    Contract {
        #[arg(allow_hyphen_values = true)]
        column: String,
    },
    /// Crystal operations
    #[command(subcommand)]
    Crystal(CrystalCommand),
    /// Rectify a skew tableau read as JSON
    Rectify { file: Option<String> },
    /// One slide from an inner corner of a skew tableau read as JSON
    Slide {
        /// Corner as `row,column` (1-based)
        #[arg(long)]
        corner: String,
        file: Option<String>,
    },
    /// Run verification suites
    Verify {
        /// Suite names, or "all"
        #[arg(default_value = "all")]
        suites: Vec<String>,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Outer[/inner] shape for the sliding suites, e.g. "3,2,1/1"
        #[arg(long)]
        shape: Option<String>,
        /// Enumeration cap
        #[arg(long, default_value_t = 2_000_000)]
        cap: usize,
        /// Random cases for the sliding suite
        #[arg(long, default_value_t = 200)]
        random_cases: usize,
    },
}

#[derive(Subcommand)]
enum CrystalCommand {
    /// Connected component of a word; `--dot` for graph output
    Component {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        dot: bool,
        /// Vertex cap
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Apply a raising (e) or lowering (f) operator
    Op {
        /// "e" or "f"
        op: String,
        /// Color in 1..=n
        color: u8,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Canonical highest-weight word and the path to it
    Highest {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
}

fn read_input(file: &Option<String>) -> Result<String, Error> {
    match file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {}", path, e))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::InvalidInput(format!("cannot read stdin: {}", e)))?;
            Ok(buf)
        }
    }
}

fn tableau_json_out(t: &symplactic::tableau::SymplecticTableau, cli: &Cli) -> String {
    if cli.json {
        serde_json::to_string(&TableauJson::from_tableau(t)).expect("tableau serializes")
    } else {
        render_tableau(t, cli.unicode)
    }
}

fn need_rank(cli: &Cli) -> Result<u8, Error> {
    if cli.rank == 0 {
        return Err(Error::InvalidInput("--rank is required (n >= 1)".into()));
    }
    Ok(cli.rank)
}

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.command {
        Command::P(arg) => {
            let w = parse_word(&arg.word, need_rank(cli)?)?;
            let t = insertion::p_symbol(&w)?;
            print!("{}", tableau_json_out(&t, cli));
        }
        Command::Q(arg) => {
            let w = parse_word(&arg.word, need_rank(cli)?)?;
            let q = rs::q_symbol(&w)?;
            let shapes: Vec<Vec<usize>> = q.shapes.iter().map(|s| s.heights().to_vec()).collect();
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string(&shapes).expect("shapes serialize")
                );
            } else {
                for s in shapes {
                    println!("{:?}", s);
                }
            }
        }
        Command::Rs(arg) => {
            let w = parse_word(&arg.word, need_rank(cli)?)?;
            let pair = rs::rs_map(&w)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string(&PairJson::from_pair(&pair)).expect("pair serializes")
                );
            } else {
                print!("{}", render_tableau(&pair.p, cli.unicode));
                for s in &pair.q.shapes {
                    println!("{:?}", s.heights());
                }
            }
        }
        Command::RsInv { file } => {
            let rank = need_rank(cli)?;
            let text = read_input(file)?;
            let pair: PairJson = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("pair JSON: {}", e)))?;
            let word = rs::rs_inverse(&pair.to_pair()?, rank)?;
            println!("{}", format_word(&word, cli.unicode));
        }
        Command::Insert { letter, file } => {
            let rank = need_rank(cli)?;
            let text = read_input(file)?;
            let json: TableauJson = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("tableau JSON: {}", e)))?;
            if json.n != rank {
                return Err(Error::RankMismatch(rank, json.n));
            }
            let t = json.to_tableau()?;
            let x = Letter::from_signed(*letter, rank)?;
            let out = insertion::insert_letter_tableau(x, &t)?;
            print!("{}", tableau_json_out(&out, cli));
        }
        Command::Split { column } => {
            let c = parse_column(column, need_rank(cli)?)?;
            let sc = symplactic::column::split(&c)?;
            let half = |v: &[symplactic::column::ExtLetter]| {
                v.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            println!("l: {}", half(&sc.left));
            println!("r: {}", half(&sc.right));
        }
        Command::Phi { column } => {
            let c = parse_column(column, need_rank(cli)?)?;
            let out = symplactic::column::phi_map(&c)?;
            println!("{}", format_word(&out.word(), cli.unicode));
        }
        Command::PhiInv { column } => {
            let c = parse_column(column, need_rank(cli)?)?;
            let out = symplactic::column::phi_inverse(&c)?;
            println!("{}", format_word(&out.word(), cli.unicode));
        }
        Command::Contract { column } => {
            let c = parse_column(column, need_rank(cli)?)?;
            let out = symplactic::column::contract(&c)?;
            println!("{}", format_word(&out.word(), cli.unicode));
        }
        Command::Crystal(cmd) => run_crystal(cmd, cli)?,
        Command::Rectify { file } => {
            let rank = need_rank(cli)?;
            let text = read_input(file)?;
            let json: TableauJson = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("tableau JSON: {}", e)))?;
            if json.n != rank {
                return Err(Error::RankMismatch(rank, json.n));
            }
            let t = json.to_skew()?;
            let out = rectify(&t, &CornerPolicy::TopmostLeftmost)?;
            print!("{}", tableau_json_out(&out, cli));
        }
        Command::Slide { corner, file } => {
            let rank = need_rank(cli)?;
            let text = read_input(file)?;
            let json: TableauJson = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("tableau JSON: {}", e)))?;
            if json.n != rank {
                return Err(Error::RankMismatch(rank, json.n));
            }
            let t = json.to_skew()?;
            let (row, col) = parse_corner(corner)?;
            let out = sjdt_slide(&t, (row, col))?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string(&TableauJson::from_skew(&out)).expect("skew serializes")
                );
            } else {
                print!("{}", render_skew(&out, cli.unicode));
            }
        }
        Command::Verify {
            suites,
            max_len,
            seed,
            shape,
            cap,
            random_cases,
        } => {
            let rank = need_rank(cli)?;
            let shapes = match shape {
                Some(s) => Some(vec![parse_shape_spec(s)?]),
                None => None,
            };
            let params = SuiteParams {
                rank,
                max_len: *max_len,
                seed: *seed,
                cap: *cap,
                random_cases: *random_cases,
                shapes,
            };
            let names: Vec<&str> = if suites.iter().any(|s| s == "all") {
                SUITE_NAMES.to_vec()
            } else {
                suites.iter().map(|s| s.as_str()).collect()
            };
            let mut failed = false;
            for name in names {
                let report = run_suite(name, &params)?;
                print!("{}", report);
                failed |= !report.passed();
            }
            if failed {
                return Err(Error::InvalidInput("verification failed".into()));
            }
        }
    }
    Ok(())
}

fn run_crystal(cmd: &CrystalCommand, cli: &Cli) -> Result<(), Error> {
    let rank = need_rank(cli)?;
    match cmd {
        CrystalCommand::Component { word, dot, cap } => {
            let w = parse_word(word, rank)?;
            let comp = enumerate_component(&w, *cap)?;
            if *dot {
                print!("{}", component_dot(&comp, cli.unicode));
            } else {
                for (i, v) in comp.vertices.iter().enumerate() {
                    println!("{}: {}", i, format_word(v, cli.unicode));
                }
                for &(a, color, b) in &comp.edges {
                    println!("{} -{}-> {}", a, color, b);
                }
            }
        }
        CrystalCommand::Op { op, color, word } => {
            let w = parse_word(word, rank)?;
            if *color < 1 || *color > rank {
                return Err(Error::InvalidInput(format!(
                    "color {} out of range 1..={}",
                    color, rank
                )));
            }
            let out = match op.as_str() {
                "e" => crystal::e_op(&w, *color),
                "f" => crystal::f_op(&w, *color),
                other => {
                    return Err(Error::InvalidInput(format!(
                        "operator {:?} is neither \"e\" nor \"f\"",
                        other
                    )))
                }
            };
            match out {
                Some(v) => println!("{}", format_word(&v, cli.unicode)),
                None => println!("none"),
            }
        }
        CrystalCommand::Highest { word } => {
            let w = parse_word(word, rank)?;
            let (top, path) = crystal::to_highest(&w);
            println!("{}", format_word(&top, cli.unicode));
            println!(
                "path: {}",
                path.colors
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }
    }
    Ok(())
}

fn parse_corner(text: &str) -> Result<(usize, usize), Error> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!("corner {:?} is not row,column", text)));
    }
    let row = parts[0]
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad corner row {:?}", parts[0])))?;
    let col = parts[1]
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad corner column {:?}", parts[1])))?;
    Ok((row, col))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints its own help/version output on stdout with code 0
            if e.use_stderr() {
                eprintln!("{}", e);
                return ExitCode::from(1);
            }
            print!("{}", e);
            return ExitCode::SUCCESS;
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            if e.is_internal() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
