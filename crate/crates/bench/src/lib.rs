//! Shared fixtures for the route benchmarks: barycentric subdivisions of
//! the minimal finite sphere models.

use finspace_core::samples;
use finspace_core::Poset;

/// The minimal model of the n-sphere, subdivided `subdivisions` times.
pub fn subdivided_sphere(n: usize, subdivisions: usize) -> Poset {
    let mut p = samples::sphere_model(n);
    for _ in 0..subdivisions {
        p = p.barycentric_subdivision();
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use finspace_core::complex::f_complex;
    use finspace_core::morse::{greedy_matching, morse_complex};
    use finspace_core::reduction::{find_quasicellular, quasicellular_complex};

    #[test]
    fn all_routes_agree_on_the_subdivided_sphere() {
        let p = subdivided_sphere(2, 1);
        let h = f_complex(&p, false).homology();
        let qm = find_quasicellular(&p, None).unwrap();
        let qc = quasicellular_complex(&p, &qm).unwrap();
        assert!(qc.homology().same_groups(&h));
        let m = greedy_matching(&p).unwrap();
        let mc = morse_complex(&p, &m).unwrap();
        assert!(mc.homology().same_groups(&h));
        assert!(mc.total_generators() < qc.total_generators());
        assert!(qc.total_generators() < p.chain_count());
    }
}
