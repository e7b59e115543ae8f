//! Named example posets used in tests, benchmarks and the command line
//! interface. The projective-plane model is the 13-point space of Barmak
//! and Minian.

use crate::poset::Poset;

/// Discrete poset (antichain) on `k` points x0..x{k-1}.
pub fn discrete(k: usize) -> Poset {
    let names: Vec<String> = (0..k).map(|i| format!("x{}", i)).collect();
    Poset::build_owned(names, vec![]).unwrap()
}

/// Chain x0 < x1 < ... < x{k-1}.
pub fn chain_poset(k: usize) -> Poset {
    let names: Vec<String> = (0..k).map(|i| format!("x{}", i)).collect();
    let relations = (1..k)
        .map(|i| (format!("x{}", i - 1), format!("x{}", i)))
        .collect();
    Poset::build_owned(names, relations).unwrap()
}

/// Minimal finite model of the n-sphere: the n-fold non-Hausdorff
/// suspension of the two-point discrete space. Has 2n+2 points.
pub fn sphere_model(n: usize) -> Poset {
    let mut p = discrete(2);
    for _ in 0..n {
        p = p.suspension();
    }
    p
}

/// 13-point model of the real projective plane.
pub fn rp2() -> Poset {
    Poset::build(
        &["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m"],
        &[
            ("a", "d"), ("a", "e"), ("a", "f"), ("a", "g"),
            ("b", "d"), ("b", "e"), ("b", "h"), ("b", "i"),
            ("c", "f"), ("c", "g"), ("c", "h"), ("c", "i"),
            ("d", "j"), ("d", "m"),
            ("e", "k"), ("e", "l"),
            ("f", "j"), ("f", "k"),
            ("g", "l"), ("g", "m"),
            ("h", "j"), ("h", "l"),
            ("i", "k"), ("i", "m"),
        ],
    )
    .unwrap()
}

/// The antichain-induced filtration F_a, F_a + {h,i}, X of the projective
/// plane model, as cumulative level lists.
pub fn rp2_filtration() -> Vec<Vec<String>> {
    let p = rp2();
    let x0 = p.up_set("a", false).unwrap();
    let mut x1 = x0.clone();
    x1.push("h".into());
    x1.push("i".into());
    let x1 = p.induced(&x1).unwrap().elements().to_vec();
    let x2 = p.elements().to_vec();
    vec![x0, x1, x2]
}

/// The Z/2-coloring of the projective-plane model whose covering space is
/// the universal cover (a finite model of the 2-sphere). Returned as the
/// list of Hasse edges carrying the generator; all other edges carry the
/// identity.
pub fn rp2_nontrivial_edges() -> Vec<(String, String)> {
    [("b", "d"), ("b", "h"), ("c", "g"), ("h", "l"), ("i", "m")]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

/// 9-point model of S^2 v S^1: two squares glued along the top point `a`,
/// one of them capped by `b`. Not quasicellular (U^_a has homology in two
/// degrees), but (Z, U_a) is a relative quasicellular pair.
pub fn z_wedge() -> Poset {
    Poset::build(
        &["q0", "q1", "p0", "p1", "p2", "p3", "a", "b", "c"],
        &[
            ("q0", "p0"), ("q0", "p1"), ("q1", "p0"), ("q1", "p1"),
            ("p0", "a"), ("p0", "b"), ("p1", "a"), ("p1", "b"),
            ("p2", "a"), ("p2", "c"), ("p3", "a"), ("p3", "c"),
        ],
    )
    .unwrap()
}

/// 8-point model of S^2 with two beat points f, g. Carries the
/// homologically admissible Morse matching {(c,e),(d,h),(f,g)} with
/// critical points {a,b}, showing that admissible matchings alone do not
/// compute homology without the quasicellular hypothesis.
pub fn morse_remark() -> Poset {
    Poset::build(
        &["a", "b", "c", "d", "e", "f", "g", "h"],
        &[
            ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"),
            ("c", "e"), ("c", "f"), ("d", "e"), ("d", "h"),
            ("f", "g"), ("g", "h"),
        ],
    )
    .unwrap()
}

/// The admissible Morse matching on `morse_remark`, as (a, b) cover edges.
pub fn morse_remark_matching() -> Vec<(String, String)> {
    [("c", "e"), ("d", "h"), ("f", "g")]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_sizes() {
        for n in 0..4 {
            assert_eq!(sphere_model(n).len(), 2 * n + 2);
            assert_eq!(sphere_model(n).height(), n as i64);
        }
    }

    #[test]
    fn rp2_filtration_is_filtration() {
        let p = rp2();
        let levels = rp2_filtration();
        assert_eq!(levels[0].len(), 9);
        assert_eq!(levels[1].len(), 11);
        assert_eq!(levels[2].len(), 13);
        for w in levels.windows(2) {
            assert!(w[0].iter().all(|x| w[1].contains(x)));
        }
        // each difference set is an antichain
        let d1: Vec<String> = levels[1]
            .iter()
            .filter(|x| !levels[0].contains(x))
            .cloned()
            .collect();
        assert_eq!(d1, vec!["h", "i"]);
        assert!(p.is_antichain(&d1).unwrap());
    }

    #[test]
    fn rp2_coloring_edges_are_covers() {
        let p = rp2();
        for (a, b) in rp2_nontrivial_edges() {
            assert!(p.is_cover(&a, &b).unwrap());
        }
    }

    #[test]
    fn z_wedge_shape() {
        let z = z_wedge();
        assert_eq!(z.height(), 2);
        let ua = z.down_set("a", true).unwrap();
        assert_eq!(ua.len(), 6);
        let ub = z.down_set("b", true).unwrap();
        assert_eq!(ub.len(), 4);
        let uc = z.down_set("c", true).unwrap();
        assert_eq!(uc, vec!["p2", "p3"]);
    }
}
