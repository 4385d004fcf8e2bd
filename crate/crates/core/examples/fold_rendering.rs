//! Decode turn strings into lattice folds and draw them.

use sawfold::harness::Conformation;
use sawfold::hpfold::{self, CollisionPenalty};

fn main() -> sawfold::Result<()> {
    let coord_b = "1001001001";
    for coord_t in ["211011011", "200100100", "222222222"] {
        let c = Conformation::new(coord_b, coord_t)?;
        println!("{coord_b}.{coord_t}");
        println!("{}", c.to_ascii());
    }

    // infeasible folds score a positive penalty instead of an energy
    let b = hpfold::parse_digits("11111", 2)?;
    let t = hpfold::parse_digits("0000", 3)?;
    let fold = hpfold::decode_fold(&t)?;
    println!(
        "0000: first collision at bead {:?}, {} collision(s), value {}",
        fold.first_collision,
        fold.collision_count,
        hpfold::objective(&b, &t, &CollisionPenalty)?
    );
    if let Err(e) = Conformation::new("11111", "0000") {
        println!("render: {e}");
    }

    let svg = Conformation::new(coord_b, "211011011")?.to_svg();
    std::fs::write("fold.svg", svg).map_err(|e| sawfold::Error::Io { path: "fold.svg".into(), source: e })?;
    println!("wrote fold.svg");
    Ok(())
}
