use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use aomt_contract::baselines::Mechanism;
use aomt_contract::contract::design_contract;
use aomt_contract::experiments::{
    format_float, load_scenario, run_feasibility_matrix, sweep_data_size, write_csv, Scenario,
};
use aomt_contract::Error;

#[derive(Parser)]
#[command(
    name = "aomt-contract",
    version,
    about = "AoMT-aware bandwidth contract design"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Design the contract for the scenario's payload and print it.
    Design { scenario: PathBuf },
    /// Print the type-by-item utility matrix and IR/IC verdicts.
    Feasibility { scenario: PathBuf },
    /// Run the payload sweep and write CSV.
    Sweep {
        /// Scenario TOML file
        scenario: PathBuf,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
        /// Comma-separated subset of asymmetric,complete,social.
        #[arg(long, value_delimiter = ',', default_values_t = vec!["asymmetric".to_string(), "complete".to_string(), "social".to_string()])]
        mechanisms: Vec<String>,
    },
}

const EXIT_VALIDATION: u8 = 1;
const EXIT_INFEASIBLE: u8 = 2;

fn solver_failure(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    if e.is_infeasibility() {
        ExitCode::from(EXIT_INFEASIBLE)
    } else {
        ExitCode::from(EXIT_VALIDATION)
    }
}

fn load(path: &PathBuf) -> Result<Scenario, ExitCode> {
    load_scenario(path).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_VALIDATION)
    })
}

fn design(path: &PathBuf) -> Result<(), ExitCode> {
    let scenario = load(path)?;
    let d = design_contract(&scenario.grid, &scenario.spectrum, &scenario.params)
        .map_err(|e| solver_failure(&e))?;
    println!(
        "scenario {} (D = {} bits)",
        scenario.hash, scenario.params.task.data_bits
    );
    println!(
        "{:>4} {:>20} {:>20} {:>20}",
        "type", "theta", "bandwidth_hz", "reward"
    );
    for (n, (item, theta)) in d
        .contract
        .items
        .iter()
        .zip(scenario.spectrum.thetas())
        .enumerate()
    {
        println!(
            "{:>4} {:>20} {:>20} {:>20}",
            n + 1,
            format_float(theta),
            format_float(item.bandwidth_hz),
            format_float(item.reward)
        );
    }
    if d.was_ironed() {
        println!("ironed from raw bandwidths {:?}", d.raw_bandwidths);
    }
    println!("msp_utility {}", format_float(d.msp_utility));
    Ok(())
}

fn feasibility(path: &PathBuf) -> Result<(), ExitCode> {
    let scenario = load(path)?;
    let m = run_feasibility_matrix(&scenario).map_err(|e| solver_failure(&e))?;
    println!("utility of type n (row) choosing item j (column)");
    for (n, row) in m.utilities().iter().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .map(|&u| format!("{:>20}", format_float(u)))
            .collect();
        println!("type {:>2} {}", n + 1, cells.join(" "));
    }
    let verdict = |ok: bool| if ok { "pass" } else { "FAIL" };
    println!("IR (diagonal non-negative): {}", verdict(m.ir_holds()));
    println!("IC (diagonal row-maximal): {}", verdict(m.ic_holds()));
    println!(
        "own-item utility non-decreasing in type: {}",
        verdict(m.own_utilities_nondecreasing())
    );
    Ok(())
}

fn sweep(path: &PathBuf, out: &PathBuf, names: &[String]) -> Result<(), ExitCode> {
    let scenario = load(path)?;
    let mechanisms = names
        .iter()
        .map(|s| s.parse::<Mechanism>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| solver_failure(&e))?;
    if scenario.sweep.is_empty() {
        eprintln!("error: scenario has no [sweep] data_bits");
        return Err(ExitCode::from(EXIT_VALIDATION));
    }
    let rows = sweep_data_size(&scenario, &mechanisms);
    for row in &rows {
        if let Err(e) = &row.values {
            eprintln!("warning: {} at D = {}: {e}", row.mechanism, row.data_bits);
        }
    }
    let file = File::create(out).map_err(|e| {
        eprintln!("error: cannot create {}: {e}", out.display());
        ExitCode::from(EXIT_VALIDATION)
    })?;
    write_csv(&scenario, &rows, BufWriter::new(file)).map_err(|e| {
        eprintln!("error: writing CSV: {e}");
        ExitCode::from(EXIT_VALIDATION)
    })?;
    println!("wrote {} rows to {}", rows.len(), out.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Design { scenario } => design(scenario),
        Command::Feasibility { scenario } => feasibility(scenario),
        Command::Sweep {
            scenario,
            out,
            mechanisms,
        } => sweep(scenario, out, mechanisms),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}
