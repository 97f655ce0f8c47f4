//! Prints a line per checkpoint of one Smith reduction: elapsed time, pass
//! kind and the largest entry size.
//!
//! `cargo run --release -p kbnf-bench --example trace -- MATRIX [kb1|kb2|kb3]`

use std::time::Instant;

use kbnf::smith::Checkpoint;
use kbnf::{smith, ExactMatrix, SmithOptions, Variant};

fn max_bits(m: &ExactMatrix) -> u64 {
    m.iter_row_major()
        .map(|(_, _, v)| v.bits())
        .max()
        .unwrap_or(0)
}

fn main() {
    let mut args = std::env::args().skip(1);
    let path = args.next().expect("matrix path");
    let variant: Variant = args
        .next()
        .as_deref()
        .unwrap_or("kb3")
        .parse()
        .expect("variant");
    let m = kbnf::io::read_matrix_file(path).expect("readable matrix");
    let start = Instant::now();
    let mut obs = |c: Checkpoint<'_>| match c {
        Checkpoint::HermitePass {
            index,
            style,
            rank,
            matrix,
        } => println!(
            "{:>8.2}s pass {index} {style:?} rank {rank} max bits {}",
            start.elapsed().as_secs_f64(),
            max_bits(matrix)
        ),
        Checkpoint::ColumnDone { column, matrix, .. } => {
            if column % 10 == 0 {
                println!(
                    "{:>8.2}s column {column} max bits {}",
                    start.elapsed().as_secs_f64(),
                    max_bits(matrix)
                )
            }
        }
    };
    let dec = smith(
        &m,
        variant,
        SmithOptions {
            observer: Some(&mut obs),
            ..Default::default()
        },
    );
    match dec {
        Ok(d) => println!(
            "{:>8.2}s {} ops {}",
            start.elapsed().as_secs_f64(),
            d.stats.elementary_ops,
            d.run_length
        ),
        Err(e) => println!("{e}"),
    }
}
