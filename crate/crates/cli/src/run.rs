//! Task dispatch: validate the problem against the requested task, run the
//! library, assemble the report.

use std::collections::BTreeSet;
use std::time::Instant;

use gangle::angle::{angle_1d, angle_2d, factorization_check, Subspace2};
use gangle::gram::{gram_context, left_gram_schmidt, project};
use gangle::space::semi_inner_product;
use gangle::twonorm::two_norm;
use gangle::{LpVector64, OptimizerConfig64, SpaceConfig64};

use crate::args::{self, CliArgs, Command, USAGE};
use crate::problem::{self, Problem, Task};
use crate::report::Report;

enum Failure {
    Input(String),
    Numerical(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 1,
            Failure::Numerical(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Numerical(m) => m,
        }
    }
}

impl From<gangle::Error> for Failure {
    fn from(e: gangle::Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Numerical(e.to_string())
        }
    }
}

fn input<T>(message: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Input(message.into()))
}

pub fn run(argv: &[String]) -> i32 {
    let cli = match args::parse(argv) {
        Ok(Command::Help) => {
            println!("{USAGE}");
            return 0;
        }
        Ok(Command::Run(cli)) => cli,
        Err(msg) => {
            eprintln!("error: {msg}");
            eprintln!("{USAGE}");
            return 1;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            failure.code()
        }
    }
}

fn execute(cli: &CliArgs) -> Result<(), Failure> {
    let task = Task::from_name(&cli.task)
        .ok_or_else(|| Failure::Input(format!("unknown task '{}'", cli.task)))?;
    let text = std::fs::read_to_string(&cli.input)
        .map_err(|e| Failure::Input(format!("{}: {e}", cli.input)))?;
    let problem = problem::parse(&text)
        .map_err(|msg| Failure::Input(format!("{}: {msg}", cli.input)))?;
    if let Some(file_task) = problem.task {
        if file_task != task {
            return input(format!(
                "task mismatch: command line says '{task}', {} says '{file_task}'",
                cli.input
            ))?;
        }
    }
    let cfg = SpaceConfig64::new(problem.p).map_err(Failure::from)?;
    let opt = OptimizerConfig64 {
        samples: cli.samples.or(problem.samples).unwrap_or(4096),
        refine_iters: cli.refine_iters.or(problem.refine_iters).unwrap_or(200),
        seed: cli.seed.or(problem.seed).unwrap_or(42),
        tol: cli.tol.or(problem.tol).unwrap_or(1e-7),
        oracle_grid: problem.oracle_grid.unwrap_or(720),
    };

    let started = Instant::now();
    let mut report = Report::new(task.name(), problem.p);
    for (name, coords) in &problem.vectors {
        report.echo_input(name, coords);
    }
    let mut used: BTreeSet<String> = BTreeSet::new();
    dispatch(task, &problem, &cfg, &opt, &mut report, &mut used)?;
    if let Some((name, _)) = problem
        .vectors
        .iter()
        .find(|(name, _)| !used.contains(name))
    {
        return input(format!("unexpected vector '{name}' for task '{task}'"))?;
    }
    report.diag("seed", opt.seed);
    report.diag("wall_ms", format!("{:.1}", started.elapsed().as_secs_f64() * 1e3));

    let rendered = report.render(cli.quiet);
    match &cli.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| Failure::Input(format!("{path}: {e}")))?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn dispatch(
    task: Task,
    problem: &Problem,
    cfg: &SpaceConfig64,
    opt: &OptimizerConfig64,
    report: &mut Report,
    used: &mut BTreeSet<String>,
) -> Result<(), Failure> {
    let take = |name: &str, used: &mut BTreeSet<String>| -> Result<LpVector64, Failure> {
        let coords = problem
            .vector(name)
            .ok_or_else(|| Failure::Input(format!("missing required vector '{name}'")))?;
        used.insert(name.to_string());
        LpVector64::from_slice(coords).map_err(Failure::from)
    };
    let take_numbered = |stem: &str, used: &mut BTreeSet<String>| -> Result<Vec<LpVector64>, Failure> {
        let slices = problem.numbered(stem).map_err(Failure::Input)?;
        let mut out = Vec::with_capacity(slices.len());
        for (i, s) in slices.iter().enumerate() {
            used.insert(format!("{stem}{}", i + 1));
            out.push(LpVector64::from_slice(s).map_err(Failure::from)?);
        }
        Ok(out)
    };

    match task {
        Task::G => {
            let x = take("x", used)?;
            let y = take("y", used)?;
            report.result_scalar("value", semi_inner_product(&x, &y, cfg));
        }
        Task::Norm2 => {
            let x1 = take("x1", used)?;
            let x2 = take("x2", used)?;
            let r = two_norm(&x1, &x2, cfg, opt).map_err(Failure::from)?;
            report.result_scalar("value", r.value);
            report.result_vector("argmax_y1", r.argmax_y1.coords());
            report.result_vector("argmax_y2", r.argmax_y2.coords());
            report.diag("evaluations", r.evaluations);
            report.diag("converged", r.converged);
            echo_optimizer(report, opt);
        }
        Task::Project => {
            let u = take("u", used)?;
            let basis = take_numbered("v", used)?;
            let ctx = gram_context(&basis, cfg).map_err(Failure::from)?;
            let r = project(&u, &ctx).map_err(Failure::from)?;
            report.result_vector("projected", r.projected.coords());
            report.result_vector("complement", r.complement.coords());
            report.result_vector("coefficients", &r.coefficients);
        }
        Task::Orthonormalize => {
            let input = take_numbered("v", used)?;
            let stars = left_gram_schmidt(&input, cfg).map_err(Failure::from)?;
            for (i, star) in stars.iter().enumerate() {
                report.result_vector(&format!("out{}", i + 1), star.coords());
            }
        }
        Task::Angle1d => {
            let u = take("u", used)?;
            let basis = take_numbered("v", used)?;
            let r = angle_1d(&u, &basis, cfg).map_err(Failure::from)?;
            report.result_scalar("cos_sq", r.cos_sq);
            report.result_scalar("angle_rad", r.angle_rad);
            report.result_scalar("num", r.num);
            report.result_scalar("den_norm", r.den_norm);
            report.result_scalar("den_sup", r.den_sup);
            report.footer(format!("angle_deg: {}", r.angle_rad.to_degrees()));
        }
        Task::Angle2d => {
            let u = Subspace2::new(take("u1", used)?, take("u2", used)?).map_err(Failure::from)?;
            let v = Subspace2::new(take("v1", used)?, take("v2", used)?).map_err(Failure::from)?;
            let r = angle_2d(&u, &v, cfg, opt).map_err(Failure::from)?;
            report.result_scalar("cos_sq", r.cos_sq);
            report.result_scalar("angle_rad", r.angle_rad);
            report.result_scalar("num", r.num);
            report.result_scalar("den_norm", r.den_norm);
            report.result_scalar("den_sup", r.den_sup);
            let d = &r.diagnostics;
            report.diag("evaluations", d.evaluations);
            report.diag(
                "converged",
                d.num_converged && d.den_converged && d.sup_converged,
            );
            report.diag("sup_skipped", d.sup_skipped);
            echo_optimizer(report, opt);
            report.footer(format!("angle_deg: {}", r.angle_rad.to_degrees()));
        }
        Task::LemmaCheck => {
            let u = Subspace2::new(take("u1", used)?, take("u2", used)?).map_err(Failure::from)?;
            let vstar =
                Subspace2::new(take("v1", used)?, take("v2", used)?).map_err(Failure::from)?;
            let y1 = take("y1", used)?;
            let y2 = take("y2", used)?;
            let (lhs, rhs) = factorization_check(&u, &vstar, &y1, &y2, cfg).map_err(Failure::from)?;
            report.result_scalar("lhs", lhs);
            report.result_scalar("rhs", rhs);
        }
    }
    Ok(())
}

fn echo_optimizer(report: &mut Report, opt: &OptimizerConfig64) {
    report.diag("samples", opt.samples);
    report.diag("refine_iters", opt.refine_iters);
    report.diag("tol", crate::report::fmt_f64(opt.tol));
}
