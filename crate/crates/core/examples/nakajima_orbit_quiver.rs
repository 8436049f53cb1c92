//! The orbit quiver of the full configuration for A3, and a smaller configuration.

use cluster_frobenius::categorify::Categorification;
use cluster_frobenius::nakajima::Nakajima;
use cluster_frobenius::rootsys::{Family, RootSystem};

fn main() -> cluster_frobenius::Result<()> {
    let rs = RootSystem::of_type(Family::A, 3)?;
    let q = rs.diagram().bipartite_orientation();

    let cat = Categorification::new(&rs, &q)?;
    let oq = cat.orbit_quiver();
    println!("{} + {} vertices", oq.non_frozen_count(), oq.frozen_count());
    print!("{}", oq.to_text());

    let nak = Nakajima::new(&rs, &q, 1, Some("(2,0)"))?;
    let adm = nak.is_admissible()?;
    let small = nak.orbit_quiver()?;
    println!("C = (2,0): admissible {}, {} frozen orbits", adm.admissible, small.frozen_count());
    print!("{}", small.to_dot());
    Ok(())
}
