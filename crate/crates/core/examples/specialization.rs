//! Specializes the A2 universal seed to trivial and to principal coefficients.

use cluster_frobenius::clusteralg::{check_specialization, universal_seed, Seed, DEFAULT_BUDGET};
use cluster_frobenius::quiver::{IceQuiver, Quiver};
use cluster_frobenius::rootsys::{Family, RootSystem};

fn main() -> cluster_frobenius::Result<()> {
    let rs = RootSystem::of_type(Family::A, 2)?;
    let q = rs.diagram().orientation(&[(0, 1)])?;
    let universal = universal_seed(&rs, &q)?;
    let labels = universal.frozen_labels();

    let trivial = Seed::initial(IceQuiver::new(q.clone(), 2)?);
    // principal coefficients: one frozen vertex k' -> k per mutable k
    let principal = Seed::initial(IceQuiver::new(
        Quiver::from_arrows(4, &[(0, 1), (2, 0), (3, 1)])?,
        2,
    )?);

    for (name, target) in [("trivial", trivial), ("principal", principal)] {
        let report = check_specialization(&universal, &target, DEFAULT_BUDGET)?;
        println!("{}: {} seeds, {} conditions", name, report.seeds_checked, report.conditions_checked);
        match (&report.map, &report.failure) {
            (Some(map), None) => {
                for (l, img) in labels.iter().zip(&map.images) {
                    println!("  p[{}] -> {}", l, img.render(&target.frozen_labels()));
                }
            }
            (_, failure) => println!("  no specialization: {:?}", failure),
        }
    }
    Ok(())
}
