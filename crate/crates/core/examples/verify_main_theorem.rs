//! Compares the three ice quivers for every bipartite ADE type up to E6.

use cluster_frobenius::categorify::{verify_main_theorem, VerifyOptions};
use cluster_frobenius::rootsys::{Family, RootSystem};
use std::time::Instant;

fn main() -> cluster_frobenius::Result<()> {
    let cases = [(Family::A, 1), (Family::A, 2), (Family::A, 3), (Family::A, 4), (Family::D, 4), (Family::D, 5), (Family::E, 6)];
    for (f, n) in cases {
        let rs = RootSystem::of_type(f, n)?;
        let q = rs.diagram().bipartite_orientation();
        let t = Instant::now();
        let report = verify_main_theorem(&rs, &q, &VerifyOptions::default())?;
        println!("{:<3} {:?} in {:.2?}", report.diagram, report.status, t.elapsed());
        if !report.passed() {
            print!("{}", report.to_text());
        }
    }
    Ok(())
}
