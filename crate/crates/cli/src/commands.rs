use std::env;

use stirling_kit::domains::{Canonical, RationalAlgebra};
use stirling_kit::egf::{
    exp_minus_one_series, hypergeometric_1f1, identity_series, log1p_series, theorem3_apply,
    theorem4_apply, DEFAULT_ORDER,
};
use stirling_kit::hankel::hankel_transform;
use stirling_kit::sequences;
use stirling_kit::transform::{
    build_from_final, build_from_initial, inverse_stirling_transform, stirling_transform,
};
use stirling_kit::{
    with_values, DomainTag, Error, Module, Rational, SequenceRecord, TruncatedEgf, Values,
};

use crate::args::{
    CheckArgs, Cli, Command, EgfArgs, EgfOp, FromEdge, HankelArgs, Kernel, MatrixArgs,
    MatrixFormat, ReportFormat, SeqArgs, SeqFormat, Source, TransformArgs,
};
use crate::error::{CliError, CliResult};
use crate::file::{MatrixFile, SequenceFile};
use crate::suites::run_suites;

/// Environment variable overriding the default EGF truncation order.
pub const ORDER_ENV: &str = "STIRLING_KIT_ORDER";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    IdentityFailure,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::IdentityFailure => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub status: Status,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            status: Status::Success,
        }
    }
}

/// Rebuild the same `Values` variant from a body generic over the element type.
macro_rules! map_values {
    ($values:expr, $xs:ident => $body:expr) => {
        match $values {
            Values::Int($xs) => Values::Int($body),
            Values::Rational($xs) => Values::Rational($body),
            Values::Surd5($xs) => Values::Surd5($body),
            Values::Poly($xs) => Values::Poly($body),
        }
    };
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Transform(a) => transform(a),
        Command::Matrix(a) => matrix(a),
        Command::Seq(a) => seq(a),
        Command::Egf(a) => egf(a),
        Command::Hankel(a) => hankel(a),
        Command::Check(a) => check(a),
    }
}

fn load(source: &Source, len: usize) -> CliResult<SequenceRecord> {
    match (&source.seq, &source.input) {
        (Some(name), _) => Ok(sequences::generate(name, len)?),
        (None, Some(path)) => SequenceFile::read(path)?.to_record(),
        (None, None) => Err(CliError::Usage(
            "one of --seq or --input is required".into(),
        )),
    }
}

fn render(record: &SequenceRecord, format: SeqFormat) -> String {
    match format {
        SeqFormat::Json => SequenceFile::from_record(record).to_json() + "\n",
        SeqFormat::Csv => record.values().render().join(",") + "\n",
    }
}

fn derived(
    name: String,
    values: Values,
    operation: &str,
    source: &SequenceRecord,
) -> CliResult<SequenceRecord> {
    Ok(SequenceRecord::new(name, values)?
        .with_meta("operation", operation)
        .with_meta("source", source.name()))
}

fn transform(args: &TransformArgs) -> CliResult<Output> {
    let input = load(&args.source, args.len)?;
    let (op, values) = if args.inverse {
        (
            "inverse_stirling_transform",
            map_values!(input.values(), xs => inverse_stirling_transform(xs)?),
        )
    } else {
        (
            "stirling_transform",
            map_values!(input.values(), xs => stirling_transform(xs)?),
        )
    };
    let record = derived(format!("{op}({})", input.name()), values, op, &input)?;
    Ok(Output::ok(render(&record, args.format)))
}

fn render_matrix<T: Module>(xs: &[T], args: &MatrixArgs, domain: DomainTag) -> CliResult<String> {
    let (s, from) = match args.from {
        FromEdge::Initial => (build_from_initial(xs, args.rows, args.cols)?, "initial"),
        FromEdge::Final => (build_from_final(xs, args.rows, args.cols)?, "final"),
    };
    Ok(match args.format {
        MatrixFormat::Table => s.to_table(),
        MatrixFormat::Csv => s.to_csv(),
        MatrixFormat::Json => {
            serde_json::to_string_pretty(&MatrixFile::new(from, domain, &s))? + "\n"
        }
    })
}

fn matrix(args: &MatrixArgs) -> CliResult<Output> {
    let len = args
        .rows
        .checked_add(args.cols)
        .and_then(|n| n.checked_add(1))
        .ok_or_else(|| CliError::Usage("matrix size is too large".into()))?;
    let input = load(&args.source, len)?;
    let domain = input.domain();
    let text = with_values!(input.values(), xs => render_matrix(xs, args, domain))?;
    Ok(Output::ok(text))
}

fn seq(args: &SeqArgs) -> CliResult<Output> {
    let record = sequences::generate(&args.seq, args.len)?;
    Ok(Output::ok(render(&record, args.format)))
}

/// Truncation order from the flag, then the environment, then the default.
pub fn resolve_order(flag: Option<usize>) -> CliResult<usize> {
    if let Some(order) = flag {
        return Ok(order);
    }
    match env::var(ORDER_ENV) {
        Ok(text) => text.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{ORDER_ENV} must be a nonnegative integer, got {text:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_ORDER),
    }
}

fn kernel(kind: Kernel, order: usize) -> TruncatedEgf<Rational> {
    match kind {
        Kernel::ExpMinusOne => exp_minus_one_series(order),
        Kernel::Log1p => log1p_series(order),
        Kernel::Z => identity_series(order),
    }
}

fn egf_apply<T: RationalAlgebra>(xs: &[T], args: &EgfArgs, order: usize) -> CliResult<Vec<T>> {
    let start = match args.op {
        EgfOp::Compose => 0,
        _ => args.r,
    };
    let required = start + order + 1;
    if xs.len() < required {
        return Err(Error::InsufficientLength {
            what: "EGF input",
            required,
            actual: xs.len(),
        }
        .into());
    }
    let series = TruncatedEgf::new(xs[start..required].to_vec())?;
    let result = match args.op {
        EgfOp::Compose => series.compose(&kernel(args.inner, order))?,
        EgfOp::Theorem3 => theorem3_apply(&series, args.r)?,
        EgfOp::Theorem4 => theorem4_apply(&series)?,
        EgfOp::Hypergeometric => unreachable!("1f1 takes no input series"),
    };
    Ok(result.into_coeffs())
}

fn egf(args: &EgfArgs) -> CliResult<Output> {
    let order = resolve_order(args.order)?;
    let record = if args.op == EgfOp::Hypergeometric {
        let param = |flag: &Option<String>, name: &str| -> CliResult<Rational> {
            let text = flag
                .as_deref()
                .ok_or_else(|| CliError::Usage(format!("1f1 needs --{name}")))?;
            Ok(Rational::parse_canonical(text)?)
        };
        let (p, q) = (param(&args.p, "p")?, param(&args.q, "q")?);
        let f = hypergeometric_1f1(&p, &q, args.scale, order)?;
        SequenceRecord::new(
            format!("1F1({p};{q};{}z)", args.scale),
            Values::Rational(f.into_coeffs()),
        )?
        .with_meta("operation", "1f1")
        .with_meta("order", order)
    } else {
        let source = Source {
            seq: args.seq.clone(),
            input: args.input.clone(),
        };
        let len = order + 1 + if args.op == EgfOp::Compose { 0 } else { args.r };
        let input = load(&source, len)?;
        let values = match input.values() {
            Values::Int(xs) => {
                let q: Vec<Rational> = xs
                    .iter()
                    .map(|x| Rational::from_integer(x.clone()))
                    .collect();
                Values::Rational(egf_apply(&q, args, order)?)
            }
            Values::Rational(xs) => Values::Rational(egf_apply(xs, args, order)?),
            Values::Surd5(xs) => Values::Surd5(egf_apply(xs, args, order)?),
            Values::Poly(xs) => Values::Poly(egf_apply(xs, args, order)?),
        };
        let op = match args.op {
            EgfOp::Compose => "compose",
            EgfOp::Theorem3 => "column_egf",
            EgfOp::Theorem4 => "row_egf",
            EgfOp::Hypergeometric => unreachable!(),
        };
        derived(format!("{op}({})", input.name()), values, op, &input)?
            .with_meta("order", order)
            .with_meta("r", args.r)
    };
    Ok(Output::ok(render(&record, args.format)))
}

fn hankel(args: &HankelArgs) -> CliResult<Output> {
    let len = args
        .n
        .checked_mul(2)
        .and_then(|x| x.checked_add(1))
        .ok_or_else(|| CliError::Usage("Hankel order is too large".into()))?;
    let input = load(&args.source, len)?;
    let values = map_values!(input.values(), xs => hankel_transform(xs, args.n)?);
    let record = derived(
        format!("hankel({})", input.name()),
        values,
        "hankel_transform",
        &input,
    )?;
    Ok(Output::ok(render(&record, args.format)))
}

fn check(args: &CheckArgs) -> CliResult<Output> {
    let report = run_suites(args.suite, args.max_n);
    let stdout = match args.format {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Json => report.to_json() + "\n",
    };
    Ok(Output {
        stdout,
        status: if report.passed {
            Status::Success
        } else {
            Status::IdentityFailure
        },
    })
}
