//! Almost positive roots of D4 and the orbits of tau = tau_- tau_+.

use cluster_frobenius::rootsys::{Family, RootSystem, SignFunction};

fn main() -> cluster_frobenius::Result<()> {
    let rs = RootSystem::of_type(Family::D, 4)?;
    let q = rs.diagram().bipartite_orientation();
    let signs = SignFunction::from_orientation(&q)?;
    println!("{} has {} positive roots", rs.diagram().name(), rs.positive_roots().len());
    for a in rs.almost_positive() {
        println!("  {:<14} tau_+ {:<14} tau_- {}", a.to_string(), rs.tau_plus(&signs, a)?.to_string(), rs.tau_minus(&signs, a)?);
    }
    for orbit in rs.tau_orbits(&signs)? {
        let names: Vec<String> = orbit.iter().map(|r| r.to_string()).collect();
        println!("orbit of size {}: {}", orbit.len(), names.join(" -> "));
    }
    Ok(())
}
