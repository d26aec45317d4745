//! Command-line surface and JSON reports.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::burnside::{idempotents, table_of_marks};
use crate::catalog::parse_group;
use crate::compat::{self, check_compatibility, lifting_verdict, Method, VerdictTag};
use crate::dot::{lattice_dot, subgroup_name, transfer_systems_dot};
use crate::error::{Error, Result};
use crate::gset::{hset_structures, orbit_label};
use crate::isotropy::{isotropy, Spectrum};
use crate::lattice::{SubgroupId, SubgroupLattice};
use crate::limits::Limits;
use crate::model::{algebraic_model, fixed_point_module, pi0_rank};
use crate::operad::{OperadKind, OperadModel, PermutationUniverse};
use crate::transfer::enumerate_transfer_systems;

#[derive(Debug, Parser)]
#[command(name = "ninfty", version, about = "Combinatorics of N∞-operads and rational G-spectra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(name = "e1")]
    E1,
    #[value(name = "eG", alias = "eg")]
    EG,
    #[value(name = "geometric")]
    Geometric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    #[value(name = "orbit", alias = "orbit-reduction")]
    Orbit,
    #[value(name = "direct")]
    Direct,
}

#[derive(Debug, clap::Args)]
pub struct OperadArgs {
    /// Operad kind.
    #[arg(long = "operad", value_enum)]
    pub kind: KindArg,
    /// Orbits generating the universe of a geometric operad, e.g. C6/C2,C6/1.
    #[arg(long, value_delimiter = ',')]
    pub universe: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of marks.
    Marks {
        group: String,
        /// Write the subgroup lattice Hasse diagram here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Primitive idempotents of the rational Burnside ring.
    Idempotents { group: String },
    /// Weyl group N_G(H)/H of a subgroup class.
    Weyl { group: String, subgroup: String },
    /// H-sets of size n up to isomorphism.
    Hsets { group: String, subgroup: String, n: usize },
    /// Admissible sets and families of an operad.
    Operad {
        group: String,
        #[arg(long, alias = "operad", value_enum)]
        kind: KindArg,
        #[arg(long, value_delimiter = ',')]
        universe: Vec<String>,
        /// Materialize the family of this arity.
        #[arg(long)]
        family: Option<usize>,
    },
    /// Transfer systems on the subgroup lattice.
    TransferSystems {
        group: String,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Geometric isotropy of a spectrum expression.
    Isotropy { group: String, expr: String },
    /// Compatibility of a spectrum with an operad.
    Compatible {
        group: String,
        #[command(flatten)]
        operad: OperadArgs,
        #[arg(long)]
        spectrum: String,
        #[arg(long, value_enum, default_value = "orbit")]
        mode: ModeArg,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
    },
    /// Whether the local model structure lifts to algebras.
    Verdict {
        group: String,
        #[command(flatten)]
        operad: OperadArgs,
        #[arg(long)]
        spectrum: String,
    },
    /// Factors of the algebraic model.
    Model { group: String },
    /// Geometric fixed points of a wedge of orbits.
    Gfp {
        group: String,
        expr: String,
        #[arg(long)]
        class: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub label: String,
    pub order: usize,
    pub degree: usize,
    pub generators: Vec<String>,
    pub subgroups: usize,
    pub classes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub group: GroupSummary,
    pub result: Payload,
    pub citations: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentEntry {
    pub class: String,
    pub coefficients: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub subgroup: String,
    pub orbit: String,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEntry {
    pub subgroup: String,
    pub hset: String,
    pub graph_order: usize,
    pub trivial_sigma_part: bool,
    /// `f(g)` for the generators of the subgroup, in cycle notation.
    pub generator_images: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyPayload {
    pub n: usize,
    pub members: Vec<FamilyEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEntry {
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorEntry {
    pub class: String,
    pub label: String,
    pub weyl_order: usize,
    pub weyl_degree: usize,
    pub weyl_generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleEntry {
    pub class: String,
    pub weyl_order: usize,
    pub dimension: usize,
    pub orbit_count: usize,
    /// Orbits of the Weyl group on the fixed points.
    pub orbits: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verb", rename_all = "kebab-case")]
pub enum Payload {
    Marks {
        classes: Vec<String>,
        orders: Vec<usize>,
        matrix: Vec<Vec<u64>>,
    },
    Idempotents {
        classes: Vec<String>,
        matrix: Vec<Vec<u64>>,
        idempotents: Vec<IdempotentEntry>,
    },
    Weyl {
        subgroup: String,
        normalizer_order: usize,
        order: usize,
        degree: usize,
        generators: Vec<String>,
    },
    Hsets {
        subgroup: String,
        n: usize,
        structures: Vec<String>,
    },
    Operad {
        kind: String,
        admissible_orbits: Vec<OrbitEntry>,
        family: Option<FamilyPayload>,
    },
    TransferSystems {
        count: usize,
        systems: Option<Vec<Vec<PairEntry>>>,
    },
    Isotropy {
        expression: String,
        classes: Vec<String>,
    },
    Compatible {
        operad: String,
        spectrum: String,
        isotropy: Vec<String>,
        compatible: bool,
        method: Method,
        n_checked: Option<usize>,
        violations: Vec<OrbitEntry>,
    },
    Verdict {
        operad: String,
        spectrum: String,
        verdict: VerdictTag,
        citation: String,
        witness: Option<OrbitEntry>,
    },
    Model {
        factors: Vec<FactorEntry>,
    },
    Gfp {
        expression: String,
        modules: Vec<ModuleEntry>,
        rank: Option<usize>,
    },
}

impl Command {
    pub fn group_spec(&self) -> &str {
        match self {
            Command::Marks { group, .. }
            | Command::Idempotents { group }
            | Command::Weyl { group, .. }
            | Command::Hsets { group, .. }
            | Command::Operad { group, .. }
            | Command::TransferSystems { group, .. }
            | Command::Isotropy { group, .. }
            | Command::Compatible { group, .. }
            | Command::Verdict { group, .. }
            | Command::Model { group }
            | Command::Gfp { group, .. } => group,
        }
    }
}

fn orbit_entry(lattice: &SubgroupLattice, h: SubgroupId, k: SubgroupId) -> OrbitEntry {
    OrbitEntry {
        subgroup: lattice.label(h).to_string(),
        orbit: orbit_label(lattice, h, k),
        size: lattice.index(k, h),
    }
}

/// Parses `G/K` (or `Name/K`) into the representative of class `K`.
pub fn parse_orbit(lattice: &SubgroupLattice, spec: &str) -> Result<SubgroupId> {
    let (prefix, k) = spec
        .trim()
        .split_once('/')
        .ok_or_else(|| Error::parse(0, format!("expected G/K, got {spec:?}")))?;
    let group = lattice.group();
    if !(prefix.eq_ignore_ascii_case("G") || group.name().is_some_and(|n| n.eq_ignore_ascii_case(prefix))) {
        return Err(Error::parse(0, format!("orbit of {prefix:?} but the group is {}", group.label())));
    }
    let class = lattice
        .find_class(k)
        .map_err(|e| Error::parse(prefix.len() + 1, e.to_string()))?;
    Ok(lattice.representative(class))
}

pub fn build_operad(
    lattice: &Arc<SubgroupLattice>,
    kind: KindArg,
    universe: &[String],
    limits: &Limits,
) -> Result<OperadModel> {
    let kind = match kind {
        KindArg::E1 => OperadKind::MinimalE,
        KindArg::EG => OperadKind::MaximalE,
        KindArg::Geometric => {
            if universe.is_empty() {
                return Err(Error::parse(0, "--universe is required for geometric operads"));
            }
            let stabilizers = universe
                .iter()
                .map(|u| parse_orbit(lattice, u))
                .collect::<Result<Vec<_>>>()?;
            OperadKind::Geometric(PermutationUniverse::from_orbits(lattice, &stabilizers)?)
        }
    };
    OperadModel::new(lattice.clone(), kind, *limits)
}

fn parse_cli_group(spec: &str, limits: &Limits) -> Result<Arc<SubgroupLattice>> {
    SubgroupLattice::new(parse_group(spec, limits)?, limits)
}

fn write_dot(path: &Option<PathBuf>, contents: impl FnOnce() -> String) -> Result<()> {
    if let Some(path) = path {
        std::fs::write(path, contents())
            .map_err(|e| Error::resource(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

/// Runs one command. `echo` is recorded verbatim in the report.
pub fn execute(command: &Command, echo: String, limits: &Limits) -> Result<Report> {
    let lattice = parse_cli_group(command.group_spec(), limits)?;
    let group = lattice.group();
    let summary = GroupSummary {
        label: group.label().to_string(),
        order: group.order(),
        degree: group.degree(),
        generators: group.generators().iter().map(|g| g.to_string()).collect(),
        subgroups: lattice.len(),
        classes: lattice.classes().len(),
    };
    let class_labels = || -> Vec<String> { lattice.classes().iter().map(|c| c.label.clone()).collect() };
    let mut citations = Vec::new();
    let result = match command {
        Command::Marks { dot, .. } => {
            let tom = table_of_marks(&lattice);
            write_dot(dot, || lattice_dot(&lattice))?;
            Payload::Marks {
                classes: class_labels(),
                orders: tom.orders().to_vec(),
                matrix: tom.matrix().to_vec(),
            }
        }
        Command::Idempotents { .. } => {
            let tom = table_of_marks(&lattice);
            let es = idempotents(&tom);
            Payload::Idempotents {
                classes: class_labels(),
                matrix: tom.matrix().to_vec(),
                idempotents: es
                    .iter()
                    .zip(class_labels())
                    .map(|(e, class)| IdempotentEntry {
                        class,
                        coefficients: e.coefficient_strings(),
                    })
                    .collect(),
            }
        }
        Command::Weyl { subgroup, .. } => {
            let h = lattice.representative(lattice.find_class(subgroup)?);
            let w = lattice.weyl_group(h)?;
            Payload::Weyl {
                subgroup: lattice.label(h).to_string(),
                normalizer_order: lattice.subgroup(w.normalizer).order(),
                order: w.group.order(),
                degree: w.group.degree(),
                generators: w.group.generators().iter().map(|g| g.to_string()).collect(),
            }
        }
        Command::Hsets { subgroup, n, .. } => {
            let h = lattice.representative(lattice.find_class(subgroup)?);
            Payload::Hsets {
                subgroup: lattice.label(h).to_string(),
                n: *n,
                structures: hset_structures(&lattice, h, *n)?
                    .iter()
                    .map(|t| t.label(&lattice))
                    .collect(),
            }
        }
        Command::Operad {
            kind,
            universe,
            family,
            ..
        } => {
            let operad = build_operad(&lattice, *kind, universe, limits)?;
            let mut admissible_orbits = Vec::new();
            for class in lattice.classes() {
                let h = class.representative;
                for k in lattice.classes_within(h).iter().map(|c| c[0]) {
                    if operad.admissible_orbit(h, k) {
                        admissible_orbits.push(orbit_entry(&lattice, h, k));
                    }
                }
            }
            let family = match family {
                Some(n) => {
                    let f = operad.family(*n)?;
                    Some(FamilyPayload {
                        n: *n,
                        members: f
                            .members
                            .iter()
                            .map(|m| FamilyEntry {
                                subgroup: lattice.label(m.subgroup).to_string(),
                                hset: m.hset.label(&lattice),
                                graph_order: m.graph.order(),
                                trivial_sigma_part: m.graph.is_product_with_trivial(),
                                generator_images: lattice
                                    .subgroup(m.subgroup)
                                    .generators()
                                    .iter()
                                    .map(|&x| m.graph.image(x).expect("generator in H").to_string())
                                    .collect(),
                            })
                            .collect(),
                    })
                }
                None => None,
            };
            Payload::Operad {
                kind: operad.kind().name(),
                admissible_orbits,
                family,
            }
        }
        Command::TransferSystems { count_only, dot, .. } => {
            let systems = enumerate_transfer_systems(&lattice, limits)?;
            write_dot(dot, || transfer_systems_dot(&lattice, &systems))?;
            Payload::TransferSystems {
                count: systems.len(),
                systems: (!count_only).then(|| {
                    systems
                        .iter()
                        .map(|s| {
                            s.pairs
                                .iter()
                                .map(|&(k, l)| PairEntry {
                                    from: subgroup_name(&lattice, k),
                                    to: subgroup_name(&lattice, l),
                                })
                                .collect()
                        })
                        .collect()
                }),
            }
        }
        Command::Isotropy { expr, .. } => {
            let e = Spectrum::parse(&lattice, expr)?;
            Payload::Isotropy {
                expression: e.to_string(),
                classes: isotropy(&e).labels(&lattice),
            }
        }
        Command::Compatible {
            operad,
            spectrum,
            mode,
            nmax,
            ..
        } => {
            let o = build_operad(&lattice, operad.kind, &operad.universe, limits)?;
            let e = Spectrum::parse(&lattice, spectrum)?;
            let method = match mode {
                ModeArg::Orbit => Method::OrbitReduction,
                ModeArg::Direct => Method::DirectPerN,
            };
            let report = check_compatibility(&o, &e, method, *nmax)?;
            citations.push(compat::citation::LIFTING.to_string());
            Payload::Compatible {
                operad: o.kind().name(),
                spectrum: e.to_string(),
                isotropy: isotropy(&e).labels(&lattice),
                compatible: report.compatible,
                method: report.method,
                n_checked: report.n_checked,
                violations: report
                    .violations
                    .iter()
                    .map(|v| orbit_entry(&lattice, v.subgroup, v.orbit))
                    .collect(),
            }
        }
        Command::Verdict {
            operad, spectrum, ..
        } => {
            let o = build_operad(&lattice, operad.kind, &operad.universe, limits)?;
            let e = Spectrum::parse(&lattice, spectrum)?;
            let v = lifting_verdict(&o, &e)?;
            citations.push(v.citation.clone());
            Payload::Verdict {
                operad: o.kind().name(),
                spectrum: e.to_string(),
                verdict: v.tag,
                citation: v.citation,
                witness: v
                    .witness
                    .map(|w| orbit_entry(&lattice, w.subgroup, lattice.trivial())),
            }
        }
        Command::Model { .. } => {
            let model = algebraic_model(&lattice)?;
            Payload::Model {
                factors: model
                    .factors
                    .iter()
                    .map(|f| FactorEntry {
                        class: lattice.class(f.class).label.clone(),
                        label: f.label.clone(),
                        weyl_order: f.weyl.group.order(),
                        weyl_degree: f.weyl.group.degree(),
                        weyl_generators: f.weyl.group.generators().iter().map(|g| g.to_string()).collect(),
                    })
                    .collect(),
            }
        }
        Command::Gfp { expr, class, .. } => {
            let e = Spectrum::parse(&lattice, expr)?;
            let classes: Vec<usize> = match class {
                Some(c) => vec![lattice.find_class(c)?],
                None => (0..lattice.classes().len()).collect(),
            };
            let modules = classes
                .iter()
                .map(|&c| {
                    let m = fixed_point_module(&e, c)?;
                    Ok(ModuleEntry {
                        class: lattice.class(c).label.clone(),
                        weyl_order: m.weyl.group.order(),
                        dimension: m.dimension,
                        orbit_count: m.orbit_count,
                        orbits: m.w_set.orbits(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Payload::Gfp {
                expression: e.to_string(),
                rank: class.is_none().then(|| pi0_rank(&e)).transpose()?,
                modules,
            }
        }
    };
    Ok(Report {
        command: echo,
        group: summary,
        result,
        citations,
    })
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code, writing JSON to `out` and errors to `err`.
pub fn run_main(
    args: &[String],
    limits: &Limits,
    out: &mut impl std::io::Write,
    err: &mut impl std::io::Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let echo = args.iter().skip(1).cloned().collect::<Vec<_>>().join(" ");
    match execute(&cli.command, echo, limits) {
        Ok(report) => {
            let _ = writeln!(out, "{}", report.to_json());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
