//! Batch verification CLI: witness construction, verification with JSON
//! reports, invariant queries, lattice arithmetic, and a debug basis dump.
//!
//! Exit codes: 0 all requested checks pass, 1 check failure, 2 usage error,
//! 3 engine error.

use clap::{Args, Parser, Subcommand};
use k3cubic::field_poly::field::FieldConfig;
use k3cubic::field_poly::parse;
use k3cubic::numerics::invariants::sectional_invariants;
use k3cubic::numerics::lattice::{
    discriminant_square_free_note, hassett_admissible_divisor, hassett_discriminant,
    RankTwoLattice,
};
use k3cubic::pipeline::construct::{construct_witness, ConstructConfig};
use k3cubic::pipeline::k3gen::construct_genus7_k3;
use k3cubic::pipeline::verify::{run_verification, verify_k3_fixture, VerifyConfig};
use k3cubic::pipeline::witness::{ExpectedInvariants, WitnessBundle};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "k3cubic", version, about = "cubic-fourfold witness toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Prime modulus the engine insists on (witness files carry their own).
    #[arg(long)]
    prime: Option<u32>,
    /// Seed for all randomized choices.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write output (report or bundle) to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Retry cap for randomized draws (centers, smooth cubics).
    #[arg(long, default_value_t = 8)]
    max_retries: usize,
    /// Abort with a partial report after this many seconds.
    #[arg(long, default_value_t = 3600)]
    timeout_secs: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a witness bundle and emit a JSON report.
    Verify {
        #[arg(long)]
        witness: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Construct a fresh witness by double internal projection of the
    /// genus-7 fixture.
    Construct {
        /// Fixture bundle (defaults to the bundled genus-7 model).
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Print dimension, degree, and sectional invariants of a bundle.
    Invariants {
        #[arg(long)]
        witness: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Lattice arithmetic: discriminant and admissibility from S^2 and deg.
    Lattice {
        #[arg(long)]
        s2: i64,
        #[arg(long)]
        deg: i64,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Dump the reduced Gröbner basis of a bundle's ideal (debug).
    Groebner {
        #[arg(long)]
        witness: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Regenerate the genus-7 fixture natively (spinor-variety section).
    MakeK3 {
        #[command(flatten)]
        common: CommonOpts,
        /// Skip the (slow) full smoothness certification.
        #[arg(long)]
        skip_smooth_check: bool,
    },
}

fn emit(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn find_default_fixture() -> Option<PathBuf> {
    for cand in [
        "fixtures/k3_genus7_p7.json",
        "crates/core/fixtures/k3_genus7_p7.json",
        concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures/k3_genus7_p7.json"),
    ] {
        let p = Path::new(cand);
        if p.exists() {
            return Some(p.to_path_buf());
        }
    }
    None
}

fn run(cli: Cli) -> Result<u8, k3cubic::Error> {
    match cli.command {
        Command::Verify { witness, common } => {
            let bundle = WitnessBundle::load(&witness, common.prime)?;
            if bundle.ambient_dim == 7 {
                let report = verify_k3_fixture(&bundle)?;
                let text = serde_json::to_string_pretty(&report)?;
                emit(&common.out, &text)?;
                return Ok(if report.verdict == "pass" { 0 } else { 1 });
            }
            let config = VerifyConfig {
                seed: common.seed,
                max_retries: common.max_retries,
                timeout_secs: common.timeout_secs,
            };
            let report = run_verification(&bundle, &config)?;
            let text = serde_json::to_string_pretty(&report)?;
            emit(&common.out, &text)?;
            Ok(match report.verdict.as_str() {
                "pass" => 0,
                "timeout" => 3,
                _ => 1,
            })
        }
        Command::Construct { fixture, common } => {
            let fixture_path = fixture.or_else(find_default_fixture).ok_or_else(|| {
                k3cubic::Error::InvalidArgument(
                    "no fixture given and the bundled one was not found; pass --fixture".into(),
                )
            })?;
            let k3 = WitnessBundle::load(&fixture_path, common.prime)?;
            let config = ConstructConfig {
                seed: common.seed,
                center_retry_cap: common.max_retries,
                pipeline_retry_cap: 4,
            };
            let bundle = construct_witness(&k3, &config)?;
            let text = serde_json::to_string_pretty(&bundle)?;
            emit(&common.out, &text)?;
            Ok(0)
        }
        Command::Invariants { witness, common } => {
            let bundle = WitnessBundle::load(&witness, common.prime)?;
            let scheme = bundle.to_scheme()?;
            let (dim, deg) = scheme.dim_deg();
            let hp = scheme.hilbert_polynomial();
            let mut body = serde_json::json!({
                "ambient_dim": bundle.ambient_dim,
                "prime": bundle.prime,
                "dim": dim,
                "degree": deg,
                "hilbert_polynomial": hp.to_string(),
                "h0_ideal": {
                    "1": scheme.h0_ideal(1),
                    "2": scheme.h0_ideal(2),
                    "3": scheme.h0_ideal(3),
                },
            });
            if let Ok((d, pi, chi)) = sectional_invariants(hp) {
                body["sectional"] = serde_json::json!({"degree": d, "genus": pi, "chi_o": chi});
            }
            emit(&common.out, &serde_json::to_string_pretty(&body)?)?;
            Ok(0)
        }
        Command::Lattice { s2, deg, common } => {
            let lattice = RankTwoLattice::cubic_fourfold(deg, s2);
            let disc = hassett_discriminant(&lattice);
            let (square_free, note) = discriminant_square_free_note(disc);
            let body = serde_json::json!({
                "gram": [[3, deg], [deg, s2]],
                "discriminant": disc,
                "admissible_divisor": hassett_admissible_divisor(disc),
                "square_free": square_free,
                "note": note,
            });
            emit(&common.out, &serde_json::to_string_pretty(&body)?)?;
            Ok(0)
        }
        Command::Groebner { witness, common } => {
            let bundle = WitnessBundle::load(&witness, common.prime)?;
            let scheme = bundle.to_scheme()?;
            let basis: Vec<String> = scheme.ideal.gb().gens.iter().map(parse::to_string).collect();
            emit(&common.out, &serde_json::to_string_pretty(&basis)?)?;
            Ok(0)
        }
        Command::MakeK3 { common, skip_smooth_check } => {
            let field = match common.prime {
                Some(p) => FieldConfig::new(p)?,
                None => FieldConfig::default(),
            };
            let k3 = construct_genus7_k3(field, common.seed, common.max_retries, !skip_smooth_check)?;
            let expected = ExpectedInvariants {
                degree: 12,
                genus: 7,
                quadrics: 10,
                cubics: 64,
                euler: None,
                h0_normal_in_cubic: None,
            };
            let mut bundle = WitnessBundle::from_scheme(&k3.scheme, Some(expected));
            bundle.seed = Some(common.seed);
            bundle.provenance = Some(format!(
                "genus-7 degree-12 model with an elliptic quintic, built as a linear \
                 section of the pure-spinor tenfold through the span of the quintic; \
                 seed {}, smoothness certified: {}",
                common.seed, k3.smooth_certified
            ));
            let text = serde_json::to_string_pretty(&bundle)?;
            emit(&common.out, &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("engine error: {e}");
            ExitCode::from(3)
        }
    }
}
