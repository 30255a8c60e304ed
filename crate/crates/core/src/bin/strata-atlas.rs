use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use strata_atlas::orders::{Notation, OrderKind};
use strata_atlas::report::{self, Artifact, Format, ReportRequest};

#[derive(Parser)]
#[command(name = "strata-atlas", version, about = "KR and EKOR stratification combinatorics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Siegel modular varieties: the group GSp(2g).
    Gsp {
        /// Genus.
        #[arg(long)]
        g: usize,
        /// Level as comma-separated indices in {0..g}; defaults to all (Iwahori).
        #[arg(long)]
        level: Option<String>,
        #[arg(value_enum)]
        artifact: ArtifactArg,
        #[arg(long, value_enum, default_value = "md")]
        format: FormatArg,
        #[arg(long, value_enum, default_value = "word")]
        notation: NotationArg,
        /// Order used by hasse-ekor.
        #[arg(long, value_enum, default_value = "ksigma")]
        order: OrderArg,
    },
    /// Print the JSON schema of all outputs.
    Schema,
}

#[derive(Clone, Copy, ValueEnum)]
enum ArtifactArg {
    Adm,
    Ekor,
    Kr,
    HasseEkor,
    HasseKr,
    Newton,
    Zip,
    Summary,
    Selfcheck,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Md,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum NotationArg {
    Word,
    Window,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Bruhat,
    Ksigma,
}

fn cap_from_env() -> Result<Option<u32>, String> {
    match std::env::var("STRATA_ATLAS_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("STRATA_ATLAS_CAP must be a nonnegative integer, got {v:?}")),
        Err(_) => Ok(None),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { report::EXIT_USAGE as u8 } else { 0 });
        }
    };
    let output = match cli.command {
        Command::Schema => report::Output {
            stdout: report::json_schema(),
            stderr: String::new(),
            code: report::EXIT_OK,
        },
        Command::Gsp {
            g,
            level,
            artifact,
            format,
            notation,
            order,
        } => {
            let cap = match cap_from_env() {
                Ok(c) => c,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return ExitCode::from(report::EXIT_USAGE as u8);
                }
            };
            let req = ReportRequest {
                g,
                level,
                artifact: match artifact {
                    ArtifactArg::Adm => Artifact::Adm,
                    ArtifactArg::Ekor => Artifact::Ekor,
                    ArtifactArg::Kr => Artifact::Kr,
                    ArtifactArg::HasseEkor => Artifact::HasseEkor,
                    ArtifactArg::HasseKr => Artifact::HasseKr,
                    ArtifactArg::Newton => Artifact::Newton,
                    ArtifactArg::Zip => Artifact::Zip,
                    ArtifactArg::Summary => Artifact::Summary,
                    ArtifactArg::Selfcheck => Artifact::Selfcheck,
                },
                format: match format {
                    FormatArg::Md => Format::Md,
                    FormatArg::Json => Format::Json,
                    FormatArg::Dot => Format::Dot,
                },
                notation: match notation {
                    NotationArg::Word => Notation::Word,
                    NotationArg::Window => Notation::Window,
                },
                order: match order {
                    OrderArg::Bruhat => OrderKind::Bruhat,
                    OrderArg::Ksigma => OrderKind::KSigma,
                },
                cap,
            };
            report::run(&req)
        }
    };
    let _ = std::io::stdout().write_all(output.stdout.as_bytes());
    let _ = std::io::stderr().write_all(output.stderr.as_bytes());
    ExitCode::from(output.code as u8)
}
