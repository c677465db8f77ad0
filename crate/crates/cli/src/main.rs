//! `cores`: counting, enumeration, statistics and coordinate conversion for
//! simultaneous core partitions.

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use cores::betaset::t_core;
use cores::coords::{a_to_z, u_to_z, z_to_a, z_to_u};
use cores::enumerate::{
    count_sc, count_st, count_triple, enum_sc_st_cores_with, enum_st_cores_with, enum_triple_with,
};
use cores::oracle::{run_verify_suite_with, VerifyConfig, DEFAULT_PARTITION_CAP};
use cores::stats::{attach_stab, average_size, moment_sum, size_from_a};
use cores::{
    ATuple, BetaSet, CoreRecord, EnumOptions, Execution, Partition, Strategy, TripleMethod, UTuple, ZTuple,
};

/// Largest moment exponent accepted by `avg --moment`.
const MOMENT_CAP: u32 = 8;

#[derive(Parser)]
#[command(name = "cores", version, about = "Exact computations with simultaneous core partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of (s,t)-cores, self-conjugate (s,t)-cores, or (m,m+d,m+2d)-cores
    Count(CountArgs),
    /// List cores sorted by z-coordinates
    Enum(EnumArgs),
    /// Exact average size, or a power-moment sum with --moment
    Avg(AvgArgs),
    /// Show one object in every coordinate system that applies to it
    Convert(ConvertArgs),
    /// The t-core of a partition
    Tcore(TcoreArgs),
    /// Run the verification suite
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Jsonl,
    Csv,
    Plain,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Sym,
    Asym,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenStrategy {
    Filter,
    Necklace,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fault {
    Stab,
}

#[derive(Args)]
struct CountArgs {
    /// `<s> <t>` or `triple <m> <d>`
    #[arg(required = true, num_args = 2..=3, value_name = "ARGS")]
    args: Vec<String>,
    #[arg(long)]
    self_conjugate: bool,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct EnumArgs {
    s: Option<u64>,
    t: Option<u64>,
    #[arg(long)]
    self_conjugate: bool,
    /// Enumerate (m,m+d,m+2d)-cores instead
    #[arg(long, num_args = 2, value_names = ["M", "D"])]
    triple: Option<Vec<u64>>,
    #[arg(long, value_enum, default_value = "sym")]
    method: Method,
    #[arg(long, value_enum, default_value = "jsonl")]
    format: Format,
    /// Attach the stabilizer order to each record
    #[arg(long)]
    with_stab: bool,
    #[arg(long, value_enum, default_value = "filter")]
    strategy: GenStrategy,
    /// Run on the calling thread only
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct AvgArgs {
    s: u64,
    t: u64,
    /// Weight each core by its stabilizer order
    #[arg(long)]
    weighted: bool,
    #[arg(long)]
    self_conjugate: bool,
    /// Print the sum of size^e instead of the average
    #[arg(long, value_name = "E")]
    moment: Option<u32>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ConvertInput {
    /// Comma-separated parts, e.g. 5,5
    #[arg(long)]
    partition: Option<String>,
    /// JSON beta-set, e.g. {"members":[0],"gaps":[-2]}
    #[arg(long)]
    beta: Option<String>,
    /// JSON array of a-coordinates, e.g. [0,4,-1]
    #[arg(long)]
    a: Option<String>,
    /// JSON z-coordinates, e.g. {"t":3,"s":2,"z":[2,0,0]}
    #[arg(long)]
    z: Option<String>,
    /// JSON u-coordinates, e.g. {"t":3,"s":2,"u":[1,0]}
    #[arg(long)]
    u: Option<String>,
}

#[derive(Args)]
struct ConvertArgs {
    #[command(flatten)]
    input: ConvertInput,
    /// Modulus for charge and a-coordinates
    #[arg(long)]
    t: Option<u64>,
    /// Parameter coprime to t for z- and u-coordinates
    #[arg(long)]
    s: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct TcoreArgs {
    t: u64,
    #[arg(long)]
    partition: String,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 5)]
    smax: u64,
    #[arg(long, default_value_t = 6)]
    tmax: u64,
    #[arg(long, default_value_t = 20)]
    nmax: u64,
    /// Random draws per parameter point
    #[arg(long, default_value_t = 500)]
    samples: usize,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    #[arg(long, value_enum, hide = true)]
    inject_fault: Option<Fault>,
}

/// What a command produced: the bytes to print and the exit status.
struct Output {
    text: String,
    status: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, status: 0 }
    }
}

type CmdResult = Result<Output, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(raw) = std::env::var("CORES_THREADS") {
        match raw.parse::<usize>() {
            Ok(n) if n > 0 => {
                cores::par::init_threads(n);
            }
            _ => {
                eprintln!("error: CORES_THREADS must be a positive integer (got {raw:?})");
                return ExitCode::from(2);
            }
        }
    }
    let result = match cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Enum(args) => cmd_enum(args),
        Command::Avg(args) => cmd_avg(args),
        Command::Convert(args) => cmd_convert(args),
        Command::Tcore(args) => cmd_tcore(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(out) => match write_stdout(&out.text) {
            Ok(()) => ExitCode::from(out.status),
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::from(out.status),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::FAILURE
            }
        },
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn write_stdout(text: &str) -> io::Result<()> {
    let mut out = BufWriter::new(io::stdout().lock());
    out.write_all(text.as_bytes())?;
    out.flush()
}

fn parse_u64(raw: &str, what: &str) -> Result<u64, String> {
    raw.parse().map_err(|_| format!("{what} must be a non-negative integer (got {raw:?})"))
}

fn parse_partition(raw: &str) -> Result<Partition, String> {
    let raw = raw.trim();
    let mut parts = if raw.is_empty() {
        Vec::new()
    } else {
        raw.split(',')
            .map(|p| parse_u64(p.trim(), "partition part"))
            .collect::<Result<Vec<_>, _>>()?
    };
    parts.retain(|&p| p > 0);
    Partition::from_parts(&parts).map_err(|e| e.to_string())
}

fn parse_json<T: serde::de::DeserializeOwned>(raw: &str, what: &str) -> Result<T, String> {
    serde_json::from_str(raw).map_err(|e| format!("invalid {what}: {e}"))
}

fn scalar(value: String, format: Format) -> String {
    match format {
        Format::Plain => format!("{value}\n"),
        Format::Csv => format!("value\n{value}\n"),
        Format::Json | Format::Jsonl => format!("{}\n", json!({ "value": value })),
    }
}

fn cmd_count(args: CountArgs) -> CmdResult {
    let count = match args.args.as_slice() {
        [kw, m, d] if kw == "triple" => {
            if args.self_conjugate {
                return Err("--self-conjugate does not apply to triple counts".into());
            }
            count_triple(parse_u64(m, "m")?, parse_u64(d, "d")?)
        }
        [s, t] => {
            let (s, t) = (parse_u64(s, "s")?, parse_u64(t, "t")?);
            if args.self_conjugate {
                count_sc(s, t)
            } else {
                count_st(s, t)
            }
        }
        _ => return Err("expected `<s> <t>` or `triple <m> <d>`".into()),
    }
    .map_err(|e| e.to_string())?;
    let value = count.to_string();
    Ok(Output::ok(match args.format {
        Format::Json | Format::Jsonl => format!("{}\n", json!({ "value": count_json(&value) })),
        other => scalar(value, other),
    }))
}

fn count_json(decimal: &str) -> Value {
    match decimal.parse::<u64>() {
        Ok(n) => n.into(),
        Err(_) => decimal.into(),
    }
}

fn cmd_enum(args: EnumArgs) -> CmdResult {
    let execution = if args.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let strategy = match args.strategy {
        GenStrategy::Filter => Strategy::Filter,
        GenStrategy::Necklace => Strategy::Necklace,
    };
    let opts = EnumOptions::new(strategy, execution);
    let mut records = match (&args.triple, args.s, args.t) {
        (Some(md), None, None) => {
            if args.with_stab {
                return Err("--with-stab applies to (s,t)-cores only".into());
            }
            if args.self_conjugate {
                return Err("--self-conjugate cannot be combined with --triple".into());
            }
            let method = match args.method {
                Method::Sym => TripleMethod::Symmetric,
                Method::Asym => TripleMethod::Asymmetric,
            };
            enum_triple_with(md[0], md[1], method, &opts)
        }
        (None, Some(s), Some(t)) => {
            if args.self_conjugate {
                enum_sc_st_cores_with(s, t, &opts)
            } else {
                enum_st_cores_with(s, t, &opts)
            }
        }
        (Some(_), _, _) => return Err("give either `<s> <t>` or `--triple <m> <d>`, not both".into()),
        _ => return Err("expected `<s> <t>` or `--triple <m> <d>`".into()),
    }
    .map_err(|e| e.to_string())?;
    if args.with_stab {
        attach_stab(&mut records, args.self_conjugate).map_err(|e| e.to_string())?;
    }
    Ok(Output::ok(render_records(&records, args.format, args.with_stab)))
}

fn render_records(records: &[CoreRecord], format: Format, with_stab: bool) -> String {
    let mut out = String::new();
    match format {
        Format::Jsonl => {
            for r in records {
                out.push_str(&r.to_json_line());
                out.push('\n');
            }
        }
        Format::Json => {
            let all: Vec<Value> = records.iter().map(CoreRecord::to_json_value).collect();
            out.push_str(&Value::Array(all).to_string());
            out.push('\n');
        }
        Format::Csv => {
            out.push_str(CoreRecord::csv_header(with_stab));
            out.push('\n');
            for r in records {
                out.push_str(&r.to_csv_row());
                out.push('\n');
            }
        }
        Format::Plain => {
            for r in records {
                let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
                out.push_str(&format!(
                    "z=({}) a=({}) partition={} size={}",
                    join(r.z.as_slice()),
                    join(r.a.as_slice()),
                    r.partition,
                    r.size
                ));
                if let Some(stab) = &r.stab {
                    out.push_str(&format!(" stab={stab}"));
                }
                out.push('\n');
            }
        }
    }
    out
}

fn cmd_avg(args: AvgArgs) -> CmdResult {
    let value = match args.moment {
        Some(e) if e > MOMENT_CAP => return Err(format!("--moment is capped at {MOMENT_CAP} (got {e})")),
        Some(e) => moment_sum(args.s, args.t, e, args.weighted, args.self_conjugate),
        None => average_size(args.s, args.t, args.weighted, args.self_conjugate),
    }
    .map_err(|e| e.to_string())?;
    Ok(Output::ok(scalar(value.to_string(), args.format)))
}

fn cmd_convert(args: ConvertArgs) -> CmdResult {
    let input = args.input;
    let mut t = args.t;
    let mut s = args.s;
    let adopt = |slot: &mut Option<u64>, value: u64, name: &str| -> Result<(), String> {
        match *slot {
            Some(given) if given != value => Err(format!("--{name} {given} conflicts with the input ({name} = {value})")),
            _ => {
                *slot = Some(value);
                Ok(())
            }
        }
    };
    let partition = if let Some(raw) = &input.partition {
        parse_partition(raw)?
    } else if let Some(raw) = &input.beta {
        parse_json::<BetaSet>(raw, "beta-set")?.to_partition().map_err(|e| e.to_string())?
    } else if let Some(raw) = &input.a {
        let a = ATuple::new(parse_json(raw, "a-coordinates")?).map_err(|e| e.to_string())?;
        adopt(&mut t, a.modulus(), "t")?;
        a.to_partition()
    } else if let Some(raw) = &input.z {
        let z: ZTuple = parse_json(raw, "z-coordinates")?;
        adopt(&mut t, z.t(), "t")?;
        adopt(&mut s, z.s(), "s")?;
        z_to_a(&z).map_err(|e| e.to_string())?.to_partition()
    } else if let Some(raw) = &input.u {
        let u: UTuple = parse_json(raw, "u-coordinates")?;
        adopt(&mut t, u.t(), "t")?;
        adopt(&mut s, u.s(), "s")?;
        let z = u_to_z(u.as_slice(), u.t(), u.s()).map_err(|e| e.to_string())?;
        z_to_a(&z).map_err(|e| e.to_string())?.to_partition()
    } else {
        unreachable!("clap requires one input")
    };
    if s.is_some() && t.is_none() {
        return Err("--s needs --t".into());
    }

    let beta = BetaSet::from_partition(&partition);
    let mut obj = Map::new();
    obj.insert("parts".into(), json!(partition));
    obj.insert("size".into(), json!(partition.size()));
    obj.insert("self_conjugate".into(), json!(partition.is_self_conjugate()));
    obj.insert("beta".into(), json!(beta));
    if let Some(t) = t {
        obj.insert("t".into(), json!(t));
        let charge = beta.charge(t).map_err(|e| e.to_string())?;
        obj.insert("charge".into(), json!(charge));
        let is_core = beta.is_s_core(t);
        obj.insert("t_core".into(), json!(is_core));
        if is_core {
            let a = beta.a_coords(t).map_err(|e| e.to_string())?;
            debug_assert_eq!(size_from_a(&a), partition.size());
            obj.insert("a".into(), json!(a));
            if let Some(s) = s {
                let z = a_to_z(&a, s).map_err(|e| e.to_string())?;
                obj.insert("s".into(), json!(s));
                obj.insert("st_core".into(), json!(z.is_nonnegative()));
                obj.insert("z".into(), json!(z.as_slice()));
                if z.is_symmetric() {
                    let u = z_to_u(&z).map_err(|e| e.to_string())?;
                    obj.insert("u".into(), json!(u.as_slice()));
                }
            }
        }
    }
    let text = match args.format {
        Format::Json | Format::Jsonl => format!("{}\n", Value::Object(obj)),
        Format::Plain => obj.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
        Format::Csv => {
            let header: Vec<&str> = obj.keys().map(String::as_str).collect();
            let row: Vec<String> = obj.values().map(|v| v.to_string()).collect();
            format!("{}\n{}\n", header.join(";"), row.join(";"))
        }
    };
    Ok(Output::ok(text))
}

fn cmd_tcore(args: TcoreArgs) -> CmdResult {
    let p = parse_partition(&args.partition)?;
    let core = t_core(&p, args.t).map_err(|e| e.to_string())?;
    Ok(Output::ok(match args.format {
        Format::Plain => format!("{core}\n"),
        Format::Csv => format!("parts\n{}\n", core.to_csv_cell()),
        Format::Json | Format::Jsonl => format!("{}\n", json!(core)),
    }))
}

fn wrong_stab(_: &ZTuple) -> num_bigint::BigUint {
    num_bigint::BigUint::from(1u32)
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    if args.nmax > DEFAULT_PARTITION_CAP {
        return Err(format!("--nmax is capped at {DEFAULT_PARTITION_CAP} (got {})", args.nmax));
    }
    let mut cfg = VerifyConfig::new(args.smax, args.tmax, args.nmax);
    cfg.samples = args.samples;
    if let Some(Fault::Stab) = args.inject_fault {
        cfg.stab_override = Some(wrong_stab);
    }
    let reports = run_verify_suite_with(&cfg);
    let failed = reports.iter().filter(|r| !r.pass).count();
    let mut text = String::new();
    match args.format {
        Format::Plain => {
            for r in &reports {
                text.push_str(&format!("{r}\n"));
            }
            text.push_str(&format!("{} checks, {} failed\n", reports.len(), failed));
        }
        Format::Jsonl => {
            for r in &reports {
                text.push_str(&serde_json::to_string(r).map_err(|e| e.to_string())?);
                text.push('\n');
            }
        }
        Format::Json => {
            text.push_str(&serde_json::to_string(&reports).map_err(|e| e.to_string())?);
            text.push('\n');
        }
        Format::Csv => {
            text.push_str("check;params;pass;compared;witness\n");
            for r in &reports {
                let params: Vec<String> = r.params.iter().map(u64::to_string).collect();
                text.push_str(&format!(
                    "{};{};{};{};{}\n",
                    r.check,
                    params.join(","),
                    r.pass,
                    r.compared,
                    r.witness.as_deref().unwrap_or("").replace(';', ",")
                ));
            }
        }
    }
    Ok(Output {
        text,
        status: if failed == 0 { 0 } else { 1 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_parse_from_comma_lists() {
        assert_eq!(parse_partition("5,5").unwrap().parts(), &[5, 5]);
        assert_eq!(parse_partition(" 3, 1 ,0").unwrap().parts(), &[3, 1]);
        assert!(parse_partition("").unwrap().is_empty());
        assert!(parse_partition("1,2").is_err());
        assert!(parse_partition("x").is_err());
    }

    #[test]
    fn large_counts_become_strings_in_json() {
        assert_eq!(count_json("5"), json!(5));
        assert_eq!(count_json("123456789012345678901234567890"), json!("123456789012345678901234567890"));
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
