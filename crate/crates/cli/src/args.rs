//! Command-line parsing. No dependencies; the grammar is one task name
//! followed by flags.

pub const USAGE: &str = "\
usage: gangle <task> --in <problem-file> [options]

tasks:
  g               semi-inner product g(x, y)
  norm2           determinant two-norm of the pair (x1, x2)
  project         g-orthogonal projection of u onto span{v1, .., vm}
  orthonormalize  left orthonormalization of v1, .., vm
  angle1d         angle between span{u} and span{v1, .., vm}
  angle2d         angle between span{u1, u2} and span{v1, v2}
  lemma-check     both sides of the projection determinant factorization

options:
  --in PATH            problem file (required)
  --out PATH           write the report here instead of standard output
  --seed N             override the search seed
  --samples N          override the number of sphere samples
  --refine-iters N     override the number of polish passes
  --tol X              override the relative convergence tolerance
  --quiet              omit the human-readable footer
  --help               print this message

exit codes: 0 success, 1 input error, 2 numerical error";

#[derive(Debug)]
pub struct CliArgs {
    pub task: String,
    pub input: String,
    pub out: Option<String>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub refine_iters: Option<usize>,
    pub tol: Option<f64>,
    pub quiet: bool,
}

pub enum Command {
    Help,
    Run(CliArgs),
}

pub fn parse(argv: &[String]) -> Result<Command, String> {
    if argv.is_empty() || argv[0] == "--help" || argv[0] == "-h" {
        return Ok(Command::Help);
    }
    let task = argv[0].clone();
    if task.starts_with('-') {
        return Err(format!("expected a task name, got '{task}'"));
    }
    let mut input = None;
    let mut out = None;
    let mut seed = None;
    let mut samples = None;
    let mut refine_iters = None;
    let mut tol = None;
    let mut quiet = false;
    let mut it = argv[1..].iter();
    while let Some(flag) = it.next() {
        let mut value_of = |name: &str| -> Result<String, String> {
            it.next()
                .cloned()
                .ok_or_else(|| format!("{name} expects a value"))
        };
        match flag.as_str() {
            "--in" => input = Some(value_of("--in")?),
            "--out" => out = Some(value_of("--out")?),
            "--seed" => {
                seed = Some(
                    value_of("--seed")?
                        .parse()
                        .map_err(|_| "--seed expects an unsigned integer".to_string())?,
                )
            }
            "--samples" => {
                samples = Some(
                    value_of("--samples")?
                        .parse()
                        .map_err(|_| "--samples expects a positive integer".to_string())?,
                )
            }
            "--refine-iters" => {
                refine_iters = Some(
                    value_of("--refine-iters")?
                        .parse()
                        .map_err(|_| "--refine-iters expects a nonnegative integer".to_string())?,
                )
            }
            "--tol" => {
                tol = Some(
                    value_of("--tol")?
                        .parse()
                        .map_err(|_| "--tol expects a real number".to_string())?,
                )
            }
            "--quiet" => quiet = true,
            "--help" | "-h" => return Ok(Command::Help),
            other => return Err(format!("unknown flag '{other}'")),
        }
    }
    let input = input.ok_or_else(|| "--in <problem-file> is required".to_string())?;
    Ok(Command::Run(CliArgs {
        task,
        input,
        out,
        seed,
        samples,
        refine_iters,
        tol,
        quiet,
    }))
}
