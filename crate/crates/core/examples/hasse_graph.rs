//! Hasse graph statistics for a few small spaces, and DOT for one of them.
//!
//! cargo run --example hasse_graph > hasse.dot

use sawfold::mixedradix::{self, Coordinate, DEFAULT_ENUMERATION_CAP};

fn main() -> sawfold::Result<()> {
    for text in ["2^2,3^2", "3^3", "4^2", "2^4"] {
        let spec = mixedradix::parse_spec(text)?;
        let stats = mixedradix::hasse_stats(&spec, DEFAULT_ENUMERATION_CAP)?;
        eprintln!(
            "{spec:>8}: {:>3} vertices {:>3} edges, degrees {:?}",
            stats.vertex_count, stats.edge_count, stats.degree_histogram
        );
    }

    let spec = mixedradix::parse_spec("2^2,3^2")?;
    let a = Coordinate::parse(&spec, "00.10")?;
    let b = Coordinate::parse(&spec, "01.21")?;
    eprintln!("distance({a}, {b}) = {}", mixedradix::rank_distance(&a, &b)?);

    let label = |c: &Coordinate| format!("deg {}", c.degree());
    print!("{}", mixedradix::hasse_dot(&spec, DEFAULT_ENUMERATION_CAP, Some(&label))?);
    Ok(())
}
