// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;

use clap::Parser;

fn main() {
    let cli = args::Cli::parse();
    if let Err(failure) = commands::run(cli) {
        eprintln!("spiralbox: {}", failure.message());
        std::process::exit(failure.code());
    }
}
