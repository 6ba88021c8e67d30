use std::fs;
use std::path::Path;

use empskit::{SpinChainSpec, State64, StateBuilderSpec, StateFile};
use serde_json::Value;

use crate::args::{BuilderArg, ChainArgs, HamiltonianArg, StateArgs};
use crate::CliError;

/// A resolved state together with the label used in output records.
pub struct LoadedState {
    pub id: String,
    pub state: State64,
    /// Builder that produced the state, when known.
    pub spec: Option<StateBuilderSpec>,
}

fn required<T>(value: Option<T>, flag: &str, builder: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Input(format!("--{flag} is required for --builder {builder}")))
}

fn builder_spec(args: &StateArgs, builder: BuilderArg) -> Result<StateBuilderSpec, CliError> {
    Ok(match builder {
        BuilderArg::Ghz => StateBuilderSpec::Ghz {
            n: required(args.n, "n", "ghz")?,
            theta: required(args.theta, "theta", "ghz")?,
        },
        BuilderArg::W => StateBuilderSpec::W {
            coeffs: required(args.coeffs.clone(), "coeffs", "w")?,
        },
        BuilderArg::Dicke => StateBuilderSpec::Dicke {
            n: required(args.n, "n", "dicke")?,
            l: required(args.l, "l", "dicke")?,
        },
        BuilderArg::GeneralizedDicke => StateBuilderSpec::GeneralizedDicke {
            n: required(args.n, "n", "generalized-dicke")?,
            l: required(args.l, "l", "generalized-dicke")?,
            coefficients: required(args.coeffs.clone(), "coeffs", "generalized-dicke")?,
        },
        BuilderArg::Biseparable => StateBuilderSpec::Biseparable {
            alpha: required(args.alpha, "alpha", "biseparable")?,
            beta: required(args.beta, "beta", "biseparable")?,
            position: required(args.position, "position", "biseparable")?,
        },
        BuilderArg::NoisyW => StateBuilderSpec::NoisyW {
            v: required(args.v, "v", "noisy-w")?,
        },
        BuilderArg::NoisyGhz => StateBuilderSpec::NoisyGhz {
            v: required(args.v, "v", "noisy-ghz")?,
        },
    })
}

fn join(xs: &[f64]) -> String {
    xs.iter().map(f64::to_string).collect::<Vec<_>>().join(",")
}

pub fn builder_label(spec: &StateBuilderSpec) -> String {
    match spec {
        StateBuilderSpec::Ghz { n, theta } => format!("ghz(n={n},theta={theta})"),
        StateBuilderSpec::W { coeffs } => format!("w(coeffs={})", join(coeffs)),
        StateBuilderSpec::Dicke { n, l } => format!("dicke(n={n},l={l})"),
        StateBuilderSpec::GeneralizedDicke { n, l, coefficients } => {
            format!(
                "generalized_dicke(n={n},l={l},coeffs={})",
                join(coefficients)
            )
        }
        StateBuilderSpec::Biseparable {
            alpha,
            beta,
            position,
        } => {
            format!("biseparable(alpha={alpha},beta={beta},position={position})")
        }
        StateBuilderSpec::NoisyW { v } => format!("noisy_w(v={v})"),
        StateBuilderSpec::NoisyGhz { v } => format!("noisy_ghz(v={v})"),
    }
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{} is not valid JSON: {e}", path.display())))
}

/// Parses a state file, picking the shape from its keys so that serde
/// reports which field is missing or malformed.
pub fn parse_state_file(path: &Path) -> Result<StateFile, CliError> {
    let value = read_json(path)?;
    let obj = value.as_object().ok_or_else(|| {
        CliError::Input(format!(
            "{}: state file must be a JSON object",
            path.display()
        ))
    })?;
    let shape_err = |e: serde_json::Error| CliError::Input(format!("{}: {e}", path.display()));
    if obj.contains_key("amps") {
        let n = obj.get("n").and_then(Value::as_u64);
        let amps: Vec<[f64; 2]> = serde_json::from_value(obj["amps"].clone()).map_err(shape_err)?;
        let n = n.ok_or_else(|| {
            CliError::Input(format!("{}: missing integer field `n`", path.display()))
        })?;
        Ok(StateFile::Amplitudes {
            n: n as usize,
            amps,
        })
    } else if obj.contains_key("entries") {
        let dim = obj.get("dim").and_then(Value::as_u64);
        let entries: Vec<[f64; 2]> =
            serde_json::from_value(obj["entries"].clone()).map_err(shape_err)?;
        let dim = dim.ok_or_else(|| {
            CliError::Input(format!("{}: missing integer field `dim`", path.display()))
        })?;
        Ok(StateFile::Density {
            dim: dim as usize,
            entries,
        })
    } else if obj.contains_key("builder") {
        Ok(StateFile::Builder(
            serde_json::from_value(value.clone()).map_err(shape_err)?,
        ))
    } else {
        Err(CliError::Input(format!(
            "{}: expected one of the keys `amps`, `entries` or `builder`",
            path.display()
        )))
    }
}

pub fn load_state(args: &StateArgs) -> Result<LoadedState, CliError> {
    let loaded = match (&args.state, args.builder) {
        (Some(path), _) => {
            let file = parse_state_file(path)?;
            LoadedState {
                id: path.display().to_string(),
                state: file.into_state()?,
                spec: match file {
                    StateFile::Builder(spec) => Some(spec),
                    _ => None,
                },
            }
        }
        (None, Some(builder)) => {
            let spec = builder_spec(args, builder)?;
            LoadedState {
                id: builder_label(&spec),
                state: empskit::build_state(&spec)?,
                spec: Some(spec),
            }
        }
        (None, None) => {
            return Err(CliError::Input(
                "give either --state <file> or --builder".into(),
            ))
        }
    };
    if let Some(path) = &args.dump_state {
        crate::output::write_json(Some(path), &StateFile::from_state(&loaded.state))?;
    }
    Ok(loaded)
}

pub fn load_chain(args: &ChainArgs) -> Result<(String, SpinChainSpec), CliError> {
    let (id, mut spec) = match &args.spec {
        Some(path) => {
            let spec: SpinChainSpec = serde_json::from_value(read_json(path)?)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            (path.display().to_string(), spec)
        }
        None => match args.hamiltonian {
            HamiltonianArg::H1 => (
                "h1".to_string(),
                SpinChainSpec::nearest_neighbour(5, 1.0, 1.0),
            ),
            HamiltonianArg::H2 => ("h2".to_string(), SpinChainSpec::long_range(1.0, 1.0)),
        },
    };
    if let Some(j) = args.j {
        spec.coupling = j;
    }
    if let Some(h) = args.h {
        spec.field = h;
    }
    spec.validate()?;
    Ok((id, spec))
}
