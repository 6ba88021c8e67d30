use std::path::Path;

use empskit::classify::{classify_emps, Evidence, NoisyFamily};
use empskit::spinchain::{eigen_residual, evaluate_chain};
use empskit::{
    build_hamiltonian, discriminate_noisy, emps_vector, indicator_sweep, polytope_membership_3q,
    slocc_orbit_sample, EmpsVector64, PolygonReport, PolytopeClass, PureState64, StateBuilderSpec,
    StateFile, SweepParameter,
};
use serde::Serialize;

use crate::args::{ChainArgs, ClassArg, Format, OutputArgs, StateArgs};
use crate::input::{load_chain, load_state, LoadedState};
use crate::output::{write_csv, write_json};
use crate::CliError;

const UNITS: &str = "E";

#[derive(Serialize)]
struct EmpsRecord<'a> {
    state_id: &'a str,
    units: &'static str,
    n: usize,
    emps: &'a [f64],
    total: f64,
    /// Absent below three qubits.
    eta: Option<f64>,
    polygon: PolygonReport<f64>,
    geometric_measure: Vec<f64>,
}

#[derive(Serialize)]
struct ClassifyRecord<'a> {
    state: &'a str,
    units: &'static str,
    emps: &'a [f64],
    total: f64,
    eta: f64,
    verdict: String,
    genuinely_entangled: bool,
    evidence: &'a [Evidence<f64>],
}

#[derive(Serialize)]
struct NoisyRecord<'a, R: Serialize> {
    state: &'a str,
    units: &'static str,
    verdict: String,
    genuinely_entangled: bool,
    #[serde(flatten)]
    report: R,
}

#[derive(Serialize)]
struct IsingRecord<'a> {
    hamiltonian: &'a str,
    #[serde(rename = "N")]
    sites: usize,
    #[serde(rename = "J")]
    coupling: f64,
    h: f64,
    units: &'static str,
    ground_energy: f64,
    gap: f64,
    degenerate: bool,
    #[serde(rename = "eta_over_E")]
    eta_over_e: f64,
    entropy_criterion: f64,
    ground_emps: &'a [f64],
    eigen_residual: f64,
}

#[derive(Serialize)]
struct SweepRecord {
    parameter: f64,
    ground_energy: f64,
    gap: f64,
    #[serde(rename = "eta_over_E")]
    eta_over_e: f64,
    entropy_criterion: f64,
    degenerate: bool,
}

fn output_path(out: &OutputArgs) -> Option<&Path> {
    out.output.as_deref()
}

fn pure<'a>(loaded: &'a LoadedState, what: &str) -> Result<&'a PureState64, CliError> {
    loaded.state.as_pure().ok_or_else(|| {
        CliError::Input(format!("{what} needs a pure state, {} is mixed", loaded.id))
    })
}

fn emps_csv(out: &OutputArgs, rows: &[&EmpsVector64], extra: bool) -> Result<(), CliError> {
    let n = rows.first().map_or(0, |v| v.n());
    let mut header: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    if extra {
        header.extend(["total".into(), "eta".into()]);
    }
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|v| {
            let mut row: Vec<String> = v.values().iter().map(f64::to_string).collect();
            if extra {
                row.push(v.total().to_string());
                row.push(v.eta().map(|e| e.to_string()).unwrap_or_default());
            }
            row
        })
        .collect();
    write_csv(output_path(out), &header, &body)
}

pub fn emps(state: &StateArgs, out: &OutputArgs) -> Result<(), CliError> {
    let loaded = load_state(state)?;
    let v = emps_vector(&loaded.state)?;
    match out.format.unwrap_or(Format::Json) {
        Format::Csv => emps_csv(out, &[&v], true),
        Format::Json => write_json(
            output_path(out),
            &EmpsRecord {
                state_id: &loaded.id,
                units: UNITS,
                n: v.n(),
                emps: v.values(),
                total: v.total(),
                eta: v.eta().ok(),
                polygon: v.polygon(),
                geometric_measure: v.geometric_measures(),
            },
        ),
    }
}

fn noisy_family(spec: Option<&StateBuilderSpec>) -> Option<NoisyFamily> {
    match spec? {
        StateBuilderSpec::NoisyW { v } => Some(NoisyFamily::W(*v)),
        StateBuilderSpec::NoisyGhz { v } => Some(NoisyFamily::Ghz(*v)),
        _ => None,
    }
}

pub fn classify(state: &StateArgs, out: &OutputArgs) -> Result<(), CliError> {
    let loaded = load_state(state)?;
    if let (Some(family), Some(rho)) = (noisy_family(loaded.spec.as_ref()), loaded.state.as_mixed())
    {
        // mixed states: compare against the family's closed-form total
        let report = discriminate_noisy(rho, family)?;
        let entangled = family.genuinely_entangled();
        let verdict = if entangled {
            "genuinely entangled (noise below threshold)"
        } else {
            "not genuinely entangled (noise above threshold)"
        };
        return write_json(
            output_path(out),
            &NoisyRecord {
                state: &loaded.id,
                units: UNITS,
                verdict: verdict.into(),
                genuinely_entangled: entangled,
                report,
            },
        );
    }
    let psi = pure(&loaded, "classification")?;
    if psi.n() != 3 {
        return Err(CliError::Input(format!(
            "classification needs 3 qubits, got {}",
            psi.n()
        )));
    }
    let label = classify_emps(emps_vector(psi)?)?;
    write_json(
        output_path(out),
        &ClassifyRecord {
            state: &loaded.id,
            units: UNITS,
            emps: label.emps.values(),
            total: label.total,
            eta: label.eta,
            verdict: label.verdict.to_string(),
            genuinely_entangled: label.verdict.is_genuinely_entangled(),
            evidence: &label.evidence,
        },
    )
}

pub fn polytope(
    point: Option<&[f64]>,
    class: Option<ClassArg>,
    state: &StateArgs,
    out: &OutputArgs,
) -> Result<(), CliError> {
    let (id, v) = match point {
        Some(p) => (
            format!(
                "point({})",
                p.iter().map(f64::to_string).collect::<Vec<_>>().join(",")
            ),
            EmpsVector64::new(p.to_vec())?,
        ),
        None => {
            let loaded = load_state(state)?;
            let v = emps_vector(&loaded.state)?;
            (loaded.id, v)
        }
    };
    let classes = match class {
        Some(ClassArg::W) => vec![PolytopeClass::W],
        Some(ClassArg::Ghz) => vec![PolytopeClass::Ghz],
        None => vec![PolytopeClass::W, PolytopeClass::Ghz],
    };
    let memberships = classes
        .into_iter()
        .map(|c| polytope_membership_3q(&v, c))
        .collect::<Result<Vec<_>, _>>()?;

    #[derive(Serialize)]
    struct Record<'a, M> {
        state_id: &'a str,
        units: &'static str,
        emps: &'a [f64],
        memberships: M,
    }
    write_json(
        output_path(out),
        &Record {
            state_id: &id,
            units: UNITS,
            emps: v.values(),
            memberships,
        },
    )
}

pub fn orbit(samples: usize, state: &StateArgs, out: &OutputArgs) -> Result<(), CliError> {
    let loaded = load_state(state)?;
    let psi = pure(&loaded, "orbit sampling")?;
    let points = slocc_orbit_sample(psi, samples, out.seed)?;
    match out.format.unwrap_or(Format::Csv) {
        Format::Csv => emps_csv(out, &points.iter().collect::<Vec<_>>(), false),
        Format::Json => {
            #[derive(Serialize)]
            struct Record<'a> {
                state_id: &'a str,
                units: &'static str,
                seed: u64,
                samples: Vec<&'a [f64]>,
            }
            write_json(
                output_path(out),
                &Record {
                    state_id: &loaded.id,
                    units: UNITS,
                    seed: out.seed,
                    samples: points.iter().map(|p| p.values()).collect(),
                },
            )
        }
    }
}

pub fn ising(
    chain: &ChainArgs,
    dump_state: Option<&Path>,
    out: &OutputArgs,
) -> Result<(), CliError> {
    let (id, spec) = load_chain(chain)?;
    let (ground, eta, entropy) = evaluate_chain::<f64>(&spec)?;
    let residual = eigen_residual(&build_hamiltonian::<f64>(&spec)?, &ground)?;
    if let Some(path) = dump_state {
        write_json(Some(path), &StateFile::from_pure(&ground.state))?;
    }
    let ground_emps = emps_vector(&ground.state)?;
    let record = IsingRecord {
        hamiltonian: &id,
        sites: spec.sites,
        coupling: spec.coupling,
        h: spec.field,
        units: UNITS,
        ground_energy: ground.energy,
        gap: ground.gap,
        degenerate: ground.degenerate,
        eta_over_e: eta,
        entropy_criterion: entropy,
        ground_emps: ground_emps.values(),
        eigen_residual: residual,
    };
    match out.format.unwrap_or(Format::Json) {
        Format::Json => write_json(output_path(out), &record),
        Format::Csv => write_csv(
            output_path(out),
            &[
                "ground_energy",
                "gap",
                "eta_over_E",
                "entropy_criterion",
                "degenerate",
            ]
            .map(String::from),
            &[vec![
                record.ground_energy.to_string(),
                record.gap.to_string(),
                record.eta_over_e.to_string(),
                record.entropy_criterion.to_string(),
                record.degenerate.to_string(),
            ]],
        ),
    }
}

pub fn sweep_values(
    values: Option<&[f64]>,
    from: f64,
    to: f64,
    steps: usize,
) -> Result<Vec<f64>, CliError> {
    if let Some(v) = values {
        if v.is_empty() {
            return Err(CliError::Input("--values must not be empty".into()));
        }
        return Ok(v.to_vec());
    }
    match steps {
        0 => Err(CliError::Input("--steps must be at least 1".into())),
        1 => Ok(vec![from]),
        _ => Ok((0..steps)
            .map(|k| from + (to - from) * k as f64 / (steps - 1) as f64)
            .collect()),
    }
}

pub fn sweep(
    chain: &ChainArgs,
    param: &str,
    values: &[f64],
    out: &OutputArgs,
) -> Result<(), CliError> {
    let (_, spec) = load_chain(chain)?;
    let parameter: SweepParameter = param.parse()?;
    let rows: Vec<SweepRecord> = indicator_sweep::<f64>(&spec, parameter, values)?
        .into_iter()
        .map(|r| SweepRecord {
            parameter: r.parameter,
            ground_energy: r.ground_energy,
            gap: r.gap,
            eta_over_e: r.eta_over_e,
            entropy_criterion: r.entropy_criterion,
            degenerate: r.degenerate,
        })
        .collect();
    match out.format.unwrap_or(Format::Csv) {
        Format::Json => write_json(output_path(out), &rows),
        Format::Csv => {
            let header = [
                "parameter",
                "ground_energy",
                "gap",
                "eta_over_E",
                "entropy_criterion",
                "degenerate",
            ]
            .map(String::from);
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.parameter.to_string(),
                        r.ground_energy.to_string(),
                        r.gap.to_string(),
                        r.eta_over_e.to_string(),
                        r.entropy_criterion.to_string(),
                        r.degenerate.to_string(),
                    ]
                })
                .collect();
            write_csv(output_path(out), &header, &body)
        }
    }
}
