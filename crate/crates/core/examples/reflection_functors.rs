//! BGP reflection functors on A3 modules and the Coxeter-type composites.

use cluster_frobenius::repmod::{
    coxeter_composite, reflection_functor, verify_coxeter_lemma, verify_tau_ext, ModuleCategory,
};
use cluster_frobenius::rootsys::{Family, RootSystem, Sign, SignFunction};

fn main() -> cluster_frobenius::Result<()> {
    let rs = RootSystem::of_type(Family::A, 3)?;
    let q = rs.diagram().bipartite_orientation();
    let signs = SignFunction::from_orientation(&q)?;
    let mut cat = ModuleCategory::new(rs.clone(), q)?;

    for alpha in rs.positive_roots() {
        let m = cat.indecomposable(alpha)?;
        let sink = m.quiver().sinks()[0];
        let r = reflection_functor(&m, sink)?;
        let c = coxeter_composite(&m, &signs, Sign::Plus)?;
        println!("M_{:<9} S_{}^+ -> {:?}   C^+ -> {:?}", alpha.to_string(), sink + 1, r.dims(), c.dims());
    }

    for report in [verify_coxeter_lemma(&mut cat)?, verify_tau_ext(&mut cat)?] {
        println!("{} checks, {} violations", report.checks, report.violations.len());
    }
    Ok(())
}
