use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use posetcode::corpus::named;
use posetcode::dispatch::{dispatch, Request, COMMANDS};
use posetcode::io::{parse_list, parse_map, parse_matrix, parse_poset_file, Format};
use posetcode::poset::DEFAULT_IDEAL_CAP;
use posetcode::{Error, Result};

/// Exact computations on poset metric spaces over prime fields.
#[derive(Parser, Debug)]
#[command(name = "posetcode", version)]
struct Cli {
    /// One of: analyze, ie-check, scheme, macwilliams, tree-label,
    /// tree-extend, combine, regularity, orbits, shapes.
    command: String,

    /// Poset file (JSON, bare keys allowed) or `builtin:<name>`, e.g.
    /// `builtin:chain_3`, `builtin:nrt_2_2`, `builtin:lattice`. Repeat for `combine`.
    #[arg(long)]
    poset: Vec<String>,

    /// Prime field size.
    #[arg(long)]
    p: Option<u32>,

    /// Generator matrix, rows separated by `;`: `1,1,0;0,1,1`.
    #[arg(long)]
    gen: Option<String>,

    /// Level-regular tree degree sequence: `2,2`.
    #[arg(long)]
    degrees: Option<String>,

    /// Ideal as 1-based elements `1,2`; repeatable.
    #[arg(long)]
    ideal: Vec<String>,

    /// Ideal isomorphism for tree-extend: `1:1,2:3`.
    #[arg(long)]
    map: Option<String>,

    /// ie or fe.
    #[arg(long)]
    mode: Option<String>,

    /// ordinal-sum, direct-sum, ordinal-product or direct-product.
    #[arg(long)]
    kind: Option<String>,

    /// json, csv or text.
    #[arg(long, default_value = "json")]
    format: String,

    /// Bound on enumerated ideals.
    #[arg(long, env = "POSETCODE_CAP", default_value_t = DEFAULT_IDEAL_CAP)]
    cap: u64,

    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn load_poset(arg: &str) -> Result<(Option<String>, posetcode::Poset)> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        let p = named(name).ok_or_else(|| Error::Usage(format!("no builtin poset named `{name}`")))?;
        return Ok((Some(name.to_string()), p));
    }
    let text = std::fs::read_to_string(arg).map_err(|e| Error::Usage(format!("cannot read `{arg}`: {e}")))?;
    let (file, p) = parse_poset_file(&text)?;
    Ok((file.name, p))
}

fn run(cli: &Cli) -> Result<()> {
    if !COMMANDS.contains(&cli.command.as_str()) {
        return Err(Error::UnknownCommand(cli.command.clone()));
    }
    let format: Format = cli.format.parse()?;
    let mut req = Request::new(&cli.command);
    for arg in &cli.poset {
        req.posets.push(load_poset(arg)?);
    }
    req.p = cli.p;
    req.gen = cli.gen.as_deref().map(parse_matrix).transpose()?;
    req.degrees = cli.degrees.as_deref().map(parse_list).transpose()?;
    req.ideals = cli.ideal.iter().map(|s| parse_list(s)).collect::<Result<_>>()?;
    req.map = cli.map.as_deref().map(parse_map).transpose()?;
    req.mode = cli.mode.as_deref().map(str::parse).transpose()?;
    req.kind = cli.kind.as_deref().map(str::parse).transpose()?;
    req.cap = cli.cap;
    let text = dispatch(&req)?.emit(format);
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Usage(format!("cannot write `{}`: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::UnknownCommand(_) | Error::Usage(_)) {
                eprintln!("commands: {}", COMMANDS.join(", "));
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
