use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use su2abelian::commands;
use su2abelian::report::Report;
use su2abelian::Error;

/// SU(2)-abelian classification of Seifert fibered and Sol 3-manifolds.
#[derive(Parser)]
#[command(name = "su2abelian", version)]
struct Cli {
    /// Print one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide SU(2)-abelianness of `sfs(...)`, `tbundle[a,b;c,d]` or `nun[m,n;p,q]`.
    Classify { manifold: String },

    /// Random-restart search for representations of `<gens | relators>`.
    Search {
        presentation: String,
        #[arg(long, default_value_t = 300)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },

    /// Reduced form cycles of a discriminant, or SL(2,Z) classes of a trace.
    #[command(group(ArgGroup::new("which").required(true).args(["disc", "trace"])))]
    Forms {
        #[arg(long, allow_negative_numbers = true)]
        disc: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        trace: Option<i64>,
    },

    /// Lens-space and graph-manifold fillings of M_g.
    #[command(alias = "mg-table")]
    Mg {
        #[arg(long, allow_negative_numbers = true)]
        g: i64,
        /// Also list the conjectural fillings of M_{-g-1}.
        #[arg(long)]
        unverified: bool,
    },

    /// First homology of a manifold description.
    H1 { manifold: String },

    /// Thurston geometry of a manifold description.
    Geometry { manifold: String },

    /// Evaluate a continued fraction `[a1, a2, ...]`.
    Cfrac { coefficients: String },

    /// Whether L(p1,q1) and L(p2,q2) are homeomorphic.
    LensEq {
        #[arg(allow_negative_numbers = true)]
        p1: i64,
        #[arg(allow_negative_numbers = true)]
        q1: i64,
        #[arg(allow_negative_numbers = true)]
        p2: i64,
        #[arg(allow_negative_numbers = true)]
        q2: i64,
    },

    /// Order of H1 of the splice Y(T_{a,b}, T_{c,d}).
    SpliceH1 {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
        #[arg(allow_negative_numbers = true)]
        c: i64,
        #[arg(allow_negative_numbers = true)]
        d: i64,
    },

    /// Check images `w,x,y,z; ...` against a presentation.
    VerifyRep { presentation: String, images: String },
}

fn run(command: Command) -> Result<Report, Error> {
    match command {
        Command::Classify { manifold } => commands::classify(&manifold),
        Command::Search { presentation, restarts, seed, tol } => commands::search(&presentation, restarts, seed, tol),
        Command::Forms { disc: Some(d), .. } => commands::forms_disc(d),
        Command::Forms { trace: Some(t), .. } => commands::forms_trace(t),
        Command::Forms { .. } => unreachable!("clap requires one of --disc, --trace"),
        Command::Mg { g, unverified } => commands::mg(g, unverified),
        Command::H1 { manifold } => commands::h1(&manifold),
        Command::Geometry { manifold } => commands::geometry_cmd(&manifold),
        Command::Cfrac { coefficients } => commands::cfrac(&coefficients),
        Command::LensEq { p1, q1, p2, q2 } => commands::lens_eq(p1, q1, p2, q2),
        Command::SpliceH1 { a, b, c, d } => commands::splice(a, b, c, d),
        Command::VerifyRep { presentation, images } => commands::verify_rep(&presentation, &images),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{report}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let (kind, code) = if e.is_parse_error() { ("parse", 1) } else { ("precondition", 2) };
            if cli.json {
                println!("{}", serde_json::json!({ "error": e.to_string(), "kind": kind }));
            }
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
