//! A small simulation benchmark printed as CSV plus per-method medians.
//!
//! `cargo run --release --example benchmark > rows.csv`

use bmgedit::bench::{run_benchmark, summarize, write_csv, BenchmarkConfig};

fn main() -> bmgedit::Result<()> {
    let cfg = BenchmarkConfig {
        leaves: 20,
        colors: 5,
        instances: 20,
        seed: 2024,
        ..Default::default()
    };
    let rows = run_benchmark(&cfg)?;
    write_csv(&rows, std::io::stdout().lock())?;
    for s in summarize(&rows) {
        eprintln!(
            "{:<13} {:<8} d_orig {:>5.1}  recall {:.3}  precision {:.3}  {:.2} ms",
            s.method, s.variant, s.median_d_orig, s.mean_recall, s.mean_precision, s.median_runtime_ms
        );
    }
    Ok(())
}
