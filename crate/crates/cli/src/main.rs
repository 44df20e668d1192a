mod args;
mod problem;
mod report;
mod run;

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(run::run(&argv));
}
