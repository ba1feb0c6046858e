use drinfeld_hecke::cli;

fn main() {
    let outcome = cli::run(std::env::args_os());
    if outcome.exit_code == 2 {
        eprintln!("{}", outcome.summary);
    } else {
        println!("{}", outcome.summary);
    }
    if let Some(details) = &outcome.details {
        println!("{details}");
    }
    std::process::exit(outcome.exit_code);
}
