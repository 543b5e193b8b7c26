//! hopfkit: exact verification of finite-dimensional Hopf-algebra
//! structures, their actions, and Morita-context certificates.
//!
//! Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or
//! I/O error. Reports are byte-identical across runs with the same
//! inputs and seeds.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hopfkit::actions::Side;
use hopfkit::error::Error;
use hopfkit::hopf::{double_dual_iso, dual};
use hopfkit::io::{
    self, action_by_name, digest_file, digest_name, hopf_by_name, morphism_by_name, ActionFile,
    AlgebraFile, GroupFile, HopfFile, MorphismFile,
};
use hopfkit::localunits::{oracle_by_name, InductionContext, SampleCfg};
use hopfkit::morita::{verify_morita_equivalence, SurjectivityStrategy};
use hopfkit::report::{InputDigest, Report};

#[derive(Parser)]
#[command(
    name = "hopfkit",
    version,
    about = "Exact structure-constant verification for finite-dimensional Hopf algebras, \
             actions, smash products, and Morita-context certificates"
)]
struct Cli {
    /// Report format: text or json.
    #[arg(long, global = true, default_value = "text")]
    format: String,
    /// Seed for all randomized checks.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Sample count for sampled verifications.
    #[arg(long, global = true, default_value_t = 200)]
    samples: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the bialgebra and Hopf axioms of a structure-constant file.
    VerifyHopf { file: String },
    /// Verify the module-algebra axioms of an action file.
    VerifyAction { file: String },
    /// Emit the dual Hopf algebra of a structure-constant file, plus the
    /// canonical double-dual isomorphism as a morphism file.
    Dual {
        file: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Integrals, invariant functionals and unimodularity of a Hopf file.
    Integrals { file: String },
    /// Check the compact-quantum-subgroup predicate of a morphism file.
    SubgroupCheck {
        #[arg(long)]
        pi: String,
    },
    /// Compute the invariant subalgebra of a right action file.
    Invariants {
        #[arg(long)]
        action: String,
    },
    /// Build the smash product of a left action file.
    Smash {
        #[arg(long)]
        action: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Certify the Morita equivalence between A#Û and (A⊗H)^Û#Ĥ.
    Morita {
        /// Action file for the coefficient algebra A over the dual of the subgroup.
        #[arg(long)]
        algebra: String,
        /// Hopf file for H (must match the source of π).
        #[arg(long)]
        hopf: String,
        /// Hopf file for the subgroup target U (must match the target of π).
        #[arg(long)]
        subgroup: String,
        /// Morphism file for π: H → U.
        #[arg(long)]
        pi: String,
        #[arg(long, default_value = "direct")]
        strategy: String,
    },
    /// Sampled certification of the induced context over a group oracle.
    Prop32 {
        /// Oracle name: any catalog group, infinite-dihedral, or free:k.
        #[arg(long)]
        group: String,
        /// Comma-separated subgroup element tokens, e.g. "e,s".
        #[arg(long)]
        subgroup: String,
        /// Action file for the coefficient algebra A over ℂH.
        #[arg(long)]
        coeff: String,
        /// Number of target elements per surjectivity-witness family.
        #[arg(long, default_value_t = 50)]
        targets: usize,
    },
    /// Emit a catalog object: Hopf algebras (sweedler4, group:<g>,
    /// functions:<g>, dual:<name>), group tables (group-table:<g>),
    /// morphisms (restriction:<g>:<element>, sweedler-projection), and
    /// actions (action:...).
    Catalog {
        name: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.format != "text" && cli.format != "json" {
        eprintln!("error: --format must be text or json");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(report) => {
            print_report(&report, &cli.format);
            if report.overall {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn print_report(report: &Report, format: &str) {
    if format == "json" {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
}

/// Loads an input that is either a file path or a catalog name; the
/// digest of whichever was used is recorded.
fn load_hopf_input(
    spec: &str,
) -> Result<(hopfkit::hopf::FiniteDimBialgebra, Option<hopfkit::matrix::Matrix>, InputDigest), Error>
{
    let path = Path::new(spec);
    if path.exists() {
        let file: HopfFile = io::read_json(path)?;
        let (b, s) = file.to_bialgebra()?;
        Ok((b, s, digest_file(path)?))
    } else {
        let h = hopf_by_name(spec)?;
        Ok((
            h.bialgebra.clone(),
            Some(h.antipode.clone()),
            digest_name(spec),
        ))
    }
}

fn load_action_input(spec: &str) -> Result<(hopfkit::actions::ModuleAlgebra, InputDigest), Error> {
    let path = Path::new(spec);
    if path.exists() {
        let file: ActionFile = io::read_json(path)?;
        Ok((file.to_module_algebra()?, digest_file(path)?))
    } else {
        Ok((action_by_name(spec)?, digest_name(spec)))
    }
}

fn load_morphism_input(spec: &str) -> Result<(hopfkit::hopf::HopfMorphism, InputDigest), Error> {
    let path = Path::new(spec);
    if path.exists() {
        let file: MorphismFile = io::read_json(path)?;
        Ok((file.to_morphism()?, digest_file(path)?))
    } else {
        Ok((morphism_by_name(spec)?, digest_name(spec)))
    }
}

fn run(cli: &Cli) -> Result<Report, Error> {
    match &cli.command {
        Command::VerifyHopf { file } => {
            let (b, antipode, digest) = load_hopf_input(file)?;
            let (mut report, _) = hopfkit::suite::verify_hopf_suite(&b, antipode);
            report.inputs.push(digest);
            Ok(report)
        }
        Command::VerifyAction { file } => {
            let (m, digest) = load_action_input(file)?;
            let mut report = hopfkit::suite::verify_action_suite(&m);
            report.inputs.push(digest);
            Ok(report)
        }
        Command::Dual { file, out } => {
            let (b, antipode, digest) = load_hopf_input(file)?;
            let (mut report, hopf) = hopfkit::suite::verify_hopf_suite(&b, antipode);
            report.tool = "dual".into();
            report.inputs.push(digest);
            if let Some(h) = hopf {
                let d = dual(&h)?;
                let file_out = HopfFile::from_hopf(&d);
                match out {
                    Some(path) => {
                        io::write_json(path, &file_out)?;
                        let iso = double_dual_iso(&h)?;
                        let iso_path = path.with_extension("ddiso.json");
                        io::write_json(&iso_path, &MorphismFile::from_morphism(&iso))?;
                        let mut stage = hopfkit::report::CheckReport::new("dual-output");
                        stage.dim("dim", d.dim());
                        stage.note(format!("dual written to {}", path.display()));
                        stage.note(format!(
                            "double-dual isomorphism written to {}",
                            iso_path.display()
                        ));
                        report.push_stage(stage);
                    }
                    None => {
                        let mut stage = hopfkit::report::CheckReport::new("dual-output");
                        stage.dim("dim", d.dim());
                        stage.note(serde_json::to_string(&file_out)?);
                        report.push_stage(stage);
                    }
                }
            }
            Ok(report)
        }
        Command::Integrals { file } => {
            let (b, antipode, digest) = load_hopf_input(file)?;
            let (report, hopf) = hopfkit::suite::verify_hopf_suite(&b, antipode);
            let Some(h) = hopf else {
                return Ok(report);
            };
            let mut out = hopfkit::suite::integrals_suite(&h);
            out.inputs.push(digest);
            Ok(out)
        }
        Command::SubgroupCheck { pi } => {
            let (m, digest) = load_morphism_input(pi)?;
            let mut report = hopfkit::suite::subgroup_suite(&m);
            report.inputs.push(digest);
            Ok(report)
        }
        Command::Invariants { action } => {
            let (m, digest) = load_action_input(action)?;
            let mut report = hopfkit::suite::invariants_suite(&m);
            report.inputs.push(digest);
            Ok(report)
        }
        Command::Smash { action, out } => {
            let (m, digest) = load_action_input(action)?;
            let (mut report, smash) = hopfkit::suite::smash_suite(&m);
            report.inputs.push(digest);
            if let (Some(s), Some(path)) = (smash, out) {
                io::write_json(path, &AlgebraFile::from_algebra(&s.algebra))?;
            }
            Ok(report)
        }
        Command::Morita {
            algebra,
            hopf,
            subgroup,
            pi,
            strategy,
        } => {
            let strategy = SurjectivityStrategy::parse(strategy)?;
            let (a_mod, d1) = load_action_input(algebra)?;
            let (h_b, _, d2) = load_hopf_input(hopf)?;
            let (u_b, _, d3) = load_hopf_input(subgroup)?;
            let (pi_m, d4) = load_morphism_input(pi)?;
            // cross-validate the separately supplied H and U against π
            let mut inputs_stage = hopfkit::report::CheckReport::new("input-consistency");
            inputs_stage.record(
                "π source matches --hopf",
                "pi-source-matches",
                pi_m.source.bialgebra.mult == h_b.mult && pi_m.source.bialgebra.comult == h_b.comult,
                || "supplied H differs from the source of π".into(),
            );
            inputs_stage.record(
                "π target matches --subgroup",
                "pi-target-matches",
                pi_m.target.bialgebra.mult == u_b.mult && pi_m.target.bialgebra.comult == u_b.comult,
                || "supplied U differs from the target of π".into(),
            );
            let expected_dual = dual(&pi_m.target)?;
            inputs_stage.record(
                "coefficient action is over the dual of U",
                "coefficients-over-dual",
                a_mod.hopf.bialgebra.mult == expected_dual.bialgebra.mult
                    && a_mod.hopf.bialgebra.comult == expected_dual.bialgebra.comult
                    && a_mod.side == Side::Left,
                || "action file is not a left module over the dual of the subgroup".into(),
            );
            if !inputs_stage.all_passed() {
                let mut report = Report::new("morita");
                report.inputs.extend([d1, d2, d3, d4]);
                report.push_stage(inputs_stage);
                return Ok(report);
            }
            let mut report = verify_morita_equivalence(&a_mod, &pi_m, cli.seed, strategy)?;
            report.inputs.extend([d1, d2, d3, d4]);
            Ok(report)
        }
        Command::Prop32 {
            group,
            subgroup,
            coeff,
            targets,
        } => {
            let oracle = oracle_by_name(group)?;
            let tokens: Vec<String> = subgroup
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
            let (a_mod, digest) = load_action_input(coeff)?;
            let ctx = InductionContext::new(oracle, &tokens, a_mod)?;
            let cfg = SampleCfg {
                seed: cli.seed,
                samples: cli.samples,
                word_len: 6,
            };
            let mut report = hopfkit::localunits::prop32_compatibility(&ctx, &cfg);
            let witnesses = hopfkit::localunits::prop32_witnesses(&ctx, &cfg, *targets);
            for stage in witnesses.stages {
                report.push_stage(stage);
            }
            report.inputs.push(digest_name(group));
            report.inputs.push(digest_name(subgroup));
            report.inputs.push(digest);
            Ok(report)
        }
        Command::Catalog { name, out } => {
            let mut report = Report::new("catalog");
            report.inputs.push(digest_name(name));
            let json = if let Some(g) = name.strip_prefix("group-table:") {
                let group = hopfkit::catalog::group_by_name(g)?;
                serde_json::to_value(GroupFile::from_group(&group))?
            } else if name.starts_with("restriction:") || name == "sweedler-projection" {
                serde_json::to_value(MorphismFile::from_morphism(&morphism_by_name(name)?))?
            } else if name.starts_with("action:") {
                serde_json::to_value(ActionFile::from_module_algebra(&action_by_name(name)?))?
            } else {
                serde_json::to_value(HopfFile::from_hopf(&hopf_by_name(name)?))?
            };
            let mut stage = hopfkit::report::CheckReport::new("catalog");
            match out {
                Some(path) => {
                    let mut text = serde_json::to_string_pretty(&json)?;
                    text.push('\n');
                    std::fs::write(path, text)?;
                    stage.note(format!("written to {}", path.display()));
                }
                None => {
                    stage.note(serde_json::to_string(&json)?);
                }
            }
            report.push_stage(stage);
            Ok(report)
        }
    }
}
