use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::Parser;
use snk_cli::problem::{OrderChoice, Problem, Task};
use snk_cli::{exit, run, verify, CliError, RunOptions};

#[derive(Parser, Debug)]
#[command(
    name = "snk",
    version,
    about = "Regulous functions, subintegral extensions and Groebner bases"
)]
struct Args {
    /// One of gb, member, radical-member, eliminate, saturate, regulous-check,
    /// subintegral-check, swan-check, swan-scan, conductor, seminormalize,
    /// nullstellensatz, or `verify` to re-check certificates.
    task: String,
    /// Problem files (certificate files for `verify`).
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Certificate path; a directory when several files are given.
    #[arg(long)]
    out: Option<PathBuf>,
    /// S-pair budget per Groebner computation (overrides SNK_BUDGET).
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads for independent files.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Term order for `gb`; other tasks choose their own.
    #[arg(long, value_parser = parse_order)]
    order: Option<OrderChoice>,
}

fn parse_order(s: &str) -> Result<OrderChoice, String> {
    s.parse()
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn cert_path(out: &Option<PathBuf>, file: &Path, many: bool) -> Option<PathBuf> {
    let out = out.as_ref()?;
    if !many {
        return Some(out.clone());
    }
    let stem = file.file_stem().unwrap_or_default().to_string_lossy();
    Some(out.join(format!("{stem}.cert")))
}

fn process(task: Task, file: &Path, args: &Args, opts: &RunOptions, many: bool) -> (String, i32) {
    let result = (|| {
        let problem = Problem::parse(&read(file)?)?;
        if problem.task != task {
            return Err(CliError::Input(format!(
                "the file describes task `{}`, not `{task}`",
                problem.task
            )));
        }
        let out = run(&problem, opts)?;
        if let Some(path) = cert_path(&args.out, file, many) {
            std::fs::write(&path, out.certificate.emit())
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        }
        Ok(out)
    })();
    match result {
        Ok(out) => (format!("{}:\n{}", file.display(), indent(&out.summary())), out.exit),
        Err(e) => (format!("{}: error: {e}\n", file.display()), exit::INPUT_ERROR),
    }
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("  {l}\n")).collect()
}

/// 1 beats 2 beats 0.
fn worst(codes: impl IntoIterator<Item = i32>) -> i32 {
    codes.into_iter().fold(exit::DEFINITIVE, |acc, c| match (acc, c) {
        (exit::INPUT_ERROR, _) | (_, exit::INPUT_ERROR) => exit::INPUT_ERROR,
        (exit::UNDECIDED, _) | (_, exit::UNDECIDED) => exit::UNDECIDED,
        _ => exit::DEFINITIVE,
    })
}

fn parallel<T: Send>(n: usize, jobs: usize, work: impl Fn(usize) -> T + Sync) -> Vec<T> {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<T>>> = Mutex::new((0..n).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..jobs.clamp(1, n.max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n {
                    break;
                }
                let r = work(i);
                slots.lock().unwrap()[i] = Some(r);
            });
        }
    });
    slots.into_inner().unwrap().into_iter().map(Option::unwrap).collect()
}

fn main() -> ExitCode {
    let args = Args::parse();
    let env_budget = std::env::var("SNK_BUDGET").ok().and_then(|v| v.trim().parse().ok());
    let many = args.files.len() > 1;
    let reports: Vec<(String, i32)> = if args.task == "verify" {
        parallel(args.files.len(), args.jobs, |i| {
            let file = &args.files[i];
            match read(file).and_then(|t| verify(&t)) {
                Ok(()) => (format!("{}: accepted\n", file.display()), exit::DEFINITIVE),
                Err(e) => (format!("{}: {e}\n", file.display()), exit::INPUT_ERROR),
            }
        })
    } else {
        let task: Task = match args.task.parse() {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(exit::INPUT_ERROR as u8);
            }
        };
        if many {
            if let Some(dir) = &args.out {
                if let Err(e) = std::fs::create_dir_all(dir) {
                    eprintln!("error: {}: {e}", dir.display());
                    return ExitCode::from(exit::INPUT_ERROR as u8);
                }
            }
        }
        let opts = RunOptions {
            order: args.order,
            budget: args.budget.or(env_budget),
            timestamp: None,
        };
        parallel(args.files.len(), args.jobs, |i| {
            process(task, &args.files[i], &args, &opts, many)
        })
    };
    for (text, _) in &reports {
        print!("{text}");
    }
    ExitCode::from(worst(reports.iter().map(|r| r.1)) as u8)
}
