//! Knits ZQ for A3, compares mesh hom spaces with module homs, and checks Sigma^2 = tau^-h.

use cluster_frobenius::meshcat::{mesh_hom_dim, DerivedModel, RQVertex};
use cluster_frobenius::rootsys::{Family, RootSystem};

fn main() -> cluster_frobenius::Result<()> {
    let rs = RootSystem::of_type(Family::A, 3)?;
    let q = rs.diagram().orientation(&[(0, 1), (1, 2)])?;
    let mut dm = DerivedModel::new(&rs, &q)?;
    let h = dm.happel().coxeter_number();

    for p in 0..h {
        let row: Vec<String> = (0..3).map(|i| dm.happel().point(RQVertex::new(i, p)).to_string()).collect();
        println!("level {}: {}", p, row.join("  "));
    }

    let window = dm.happel().padded_window(0, h, false)?;
    let x = RQVertex::new(0, 0);
    for p in 0..=h {
        for i in 0..3 {
            let y = RQVertex::new(i, p);
            let mesh = mesh_hom_dim(&window, x, y, false)?.dim;
            let derived = dm.hom_dim_dq(x, y)?;
            if mesh > 0 || derived > 0 {
                println!("Hom({}, {}) = {} (modules: {})", x, y, mesh, derived);
            }
        }
    }

    let (checked, bad) = dm.happel().sigma_squared_check(-h, h);
    println!("Sigma^2 = tau^-{}: {} vertices, {} violations", h, checked, bad.len());
    Ok(())
}
