//! Mobius function of a finite poset by four independent routes: chain
//! counting, the incidence-algebra recursion, the open-subset formula, and
//! the Bjorner-Walker convex-subset formula. All agree with the reduced
//! Euler characteristic.

use crate::error::{Error, Result};
use crate::poset::Poset;
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusReport {
    pub value: BigInt,
    pub method: &'static str,
    /// Per-term breakdown where the method has one.
    pub decomposition: Option<Vec<(String, BigInt)>>,
}

/// Number of chains of each cardinality (index 0 counts the empty chain).
fn chain_counts(p: &Poset) -> Vec<BigInt> {
    let n = p.len();
    let max_card = (p.height() + 1).max(0) as usize;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| {
        let down = p.down_set(p.name(i), false).unwrap();
        (p.induced(&down).unwrap().height(), i)
    });
    // ending[i][c] = chains of cardinality c with maximum i
    let mut ending = vec![vec![BigInt::zero(); max_card + 1]; n];
    for &i in &order {
        if max_card >= 1 {
            ending[i][1] = BigInt::one();
        }
        for j in 0..n {
            if p.lt(j, i) {
                for c in 1..max_card {
                    let add = ending[j][c].clone();
                    ending[i][c + 1] += add;
                }
            }
        }
    }
    let mut counts = vec![BigInt::zero(); max_card + 1];
    counts[0] = BigInt::one();
    for i in 0..n {
        for c in 1..=max_card {
            counts[c] += ending[i][c].clone();
        }
    }
    counts
}

/// Odd-cardinality chains minus even-cardinality chains, the empty chain
/// counting as even. Exponentially many chains are never enumerated; the
/// counts come from a per-maximum recursion.
pub fn mobius_chains(p: &Poset) -> MobiusReport {
    let counts = chain_counts(p);
    let mut value = BigInt::zero();
    let mut decomposition = Vec::new();
    for (c, count) in counts.iter().enumerate() {
        if c % 2 == 1 {
            value += count;
        } else {
            value -= count;
        }
        decomposition.push((format!("cardinality {}", c), count.clone()));
    }
    MobiusReport { value, method: "chains", decomposition: Some(decomposition) }
}

/// mu(0,1) of the poset with a bottom and a top adjoined, by the standard
/// recursion mu(0,y) = -sum over z < y of mu(0,z).
pub fn mobius_incidence(p: &Poset) -> MobiusReport {
    let n = p.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| {
        let down = p.down_set(p.name(i), false).unwrap();
        (p.induced(&down).unwrap().height(), i)
    });
    let mut mu = vec![BigInt::zero(); n];
    for &i in &order {
        // mu(0,i) = -(mu(0,0) + sum over j < i)
        let mut acc = BigInt::one();
        for j in 0..n {
            if p.lt(j, i) {
                acc += mu[j].clone();
            }
        }
        mu[i] = -acc;
    }
    let mut top = BigInt::one();
    for v in &mu {
        top += v.clone();
    }
    MobiusReport { value: -top, method: "incidence", decomposition: None }
}

/// Default route used by the other formulas.
pub fn mu(p: &Poset) -> BigInt {
    mobius_incidence(p).value
}

fn mu_of_subset(p: &Poset, subset: &[String]) -> Result<BigInt> {
    Ok(mu(&p.induced(subset)?))
}

fn require_open(p: &Poset, v: &[String]) -> Result<()> {
    for x in v {
        for y in p.down_set(x, true)? {
            if !v.contains(&y) {
                return Err(Error::NotOpen(y));
            }
        }
    }
    Ok(())
}

/// The open-subset formula mu(X) = mu(V) - sum over x outside V of
/// mu(strict down-set of x), with the per-element terms reported.
pub fn mobius_open(p: &Poset, v: &[String]) -> Result<MobiusReport> {
    let v = p.induced(v)?.elements().to_vec();
    require_open(p, &v)?;
    let mut decomposition = vec![("V".to_string(), mu_of_subset(p, &v)?)];
    let mut value = decomposition[0].1.clone();
    for x in p.elements() {
        if v.contains(x) {
            continue;
        }
        let term = mu_of_subset(p, &p.down_set(x, true)?)?;
        value -= term.clone();
        decomposition.push((x.clone(), -term));
    }
    Ok(MobiusReport { value, method: "open", decomposition: Some(decomposition) })
}

/// Corollary for an acyclic open subset A: mu(X) = -sum over x outside A.
/// The contractibility hypothesis is checked at the homology level.
pub fn mobius_acyclic_open(p: &Poset, a: &[String]) -> Result<MobiusReport> {
    let a = p.induced(a)?.elements().to_vec();
    require_open(p, &a)?;
    let sub = p.induced(&a)?;
    if !crate::complex::f_complex(&sub, true).homology().support().is_empty() {
        return Err(Error::PreconditionFailed(
            "the open subset is not acyclic".to_string(),
        ));
    }
    let mut report = mobius_open(p, &a)?;
    report.method = "acyclic-open";
    Ok(report)
}

/// Corollary for the minimal points: mu(X) = |X_0| - 1 - sum over the
/// non-minimal x of mu(strict down-set of x).
pub fn mobius_minimal_points(p: &Poset) -> Result<MobiusReport> {
    let minimal = p.minimal_elements();
    let mut value = BigInt::from(minimal.len() as i64) - BigInt::one();
    let mut decomposition = vec![("minimal points".to_string(), value.clone())];
    for x in p.elements() {
        if minimal.contains(x) {
            continue;
        }
        let term = mu_of_subset(p, &p.down_set(x, true)?)?;
        value -= term.clone();
        decomposition.push((x.clone(), -term));
    }
    Ok(MobiusReport { value, method: "minimal-points", decomposition: Some(decomposition) })
}

/// mu of the non-Hausdorff join, directly and through the product
/// identity mu(X join Y) = -mu(X) mu(Y).
pub fn mobius_join(p: &Poset, q: &Poset) -> (BigInt, BigInt) {
    let direct = mu(&p.join(q));
    let product = -(mu(p) * mu(q));
    (direct, product)
}

fn require_convex(p: &Poset, c: &[String]) -> Result<()> {
    for x in c {
        let ix = p.index_of(x)?;
        for z in c {
            let iz = p.index_of(z)?;
            for iy in 0..p.len() {
                if p.lt(ix, iy) && p.lt(iy, iz) && !c.contains(&p.name(iy).to_string()) {
                    return Err(Error::NotConvex(p.name(iy).to_string()));
                }
            }
        }
    }
    Ok(())
}

/// Bjorner-Walker: mu(P) = mu(P - C) + sum over pairs x <= y in C of
/// mu(strict down-set of x) mu(strict up-set of y), for convex C. The
/// auxiliary identity mu(strict up-set of a, minus C) = sum over y in C
/// above a of mu(strict up-set of y) is re-verified on every a in C.
pub fn bjorner_walker(p: &Poset, c: &[String]) -> Result<MobiusReport> {
    let c = p.induced(c)?.elements().to_vec();
    require_convex(p, &c)?;
    let rest = p.complement(&c)?;
    let mut value = mu_of_subset(p, &rest)?;
    let mut decomposition = vec![("P-C".to_string(), value.clone())];
    for x in &c {
        let ix = p.index_of(x)?;
        for y in &c {
            let iy = p.index_of(y)?;
            if !p.leq(ix, iy) {
                continue;
            }
            let term = mu_of_subset(p, &p.down_set(x, true)?)?
                * mu_of_subset(p, &p.up_set(y, true)?)?;
            value += term.clone();
            decomposition.push((format!("{} <= {}", x, y), term));
        }
    }
    for a in &c {
        let ia = p.index_of(a)?;
        let fa: Vec<String> = p
            .up_set(a, true)?
            .into_iter()
            .filter(|z| !c.contains(z))
            .collect();
        let left = mu_of_subset(p, &fa)?;
        let mut right = BigInt::zero();
        for y in &c {
            let iy = p.index_of(y)?;
            if p.leq(ia, iy) {
                right += mu_of_subset(p, &p.up_set(y, true)?)?;
            }
        }
        if left != right {
            return Err(Error::PreconditionFailed(format!(
                "auxiliary identity failed at {}: {} vs {}",
                a, left, right
            )));
        }
    }
    Ok(MobiusReport { value, method: "bjorner-walker", decomposition: Some(decomposition) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::f_complex;
    use crate::samples;

    fn check_all_methods(p: &Poset, expected: i64) {
        let expected = BigInt::from(expected);
        assert_eq!(mobius_chains(p).value, expected);
        assert_eq!(mobius_incidence(p).value, expected);
        assert_eq!(mobius_open(p, p.elements()).unwrap().value, expected);
        assert_eq!(mobius_minimal_points(p).unwrap().value, expected);
        assert_eq!(bjorner_walker(p, &[]).unwrap().value, expected);
    }

    #[test]
    fn basic_values() {
        check_all_methods(&samples::discrete(3), 2);
        check_all_methods(&samples::chain_poset(4), 0);
        check_all_methods(&samples::sphere_model(1), -1);
        check_all_methods(&samples::rp2(), 0);
        check_all_methods(&Poset::empty(), -1);
    }

    #[test]
    fn circle_chain_parities() {
        // 4 odd chains (singletons), 5 even (4 edges + empty)
        let counts = chain_counts(&samples::sphere_model(1));
        assert_eq!(counts[0], BigInt::from(1));
        assert_eq!(counts[1], BigInt::from(4));
        assert_eq!(counts[2], BigInt::from(4));
    }

    #[test]
    fn minimal_points_on_circle() {
        let p = samples::sphere_model(1);
        let report = mobius_minimal_points(&p).unwrap();
        // 2 - 1 - (1 + 1) = -1
        assert_eq!(report.value, BigInt::from(-1));
        let decomposition = report.decomposition.unwrap();
        assert_eq!(decomposition[0].1, BigInt::from(1));
        assert_eq!(decomposition.len(), 3);
    }

    #[test]
    fn open_subset_agreement() {
        let z = samples::z_wedge();
        let ua = z.down_set("a", false).unwrap();
        let report = mobius_open(&z, &ua).unwrap();
        assert_eq!(report.value, mobius_chains(&z).value);
        assert!(matches!(
            mobius_open(&z, &["a".to_string()]),
            Err(Error::NotOpen(_))
        ));
    }

    #[test]
    fn acyclic_open_corollary() {
        let z = samples::z_wedge();
        // U_c is a cone, hence acyclic
        let uc = z.down_set("c", false).unwrap();
        let report = mobius_acyclic_open(&z, &uc).unwrap();
        assert_eq!(report.value, mobius_chains(&z).value);
        // U^_a is not acyclic
        let ua = z.down_set("a", true).unwrap();
        assert!(mobius_acyclic_open(&z, &ua).is_err());
    }

    #[test]
    fn join_identity() {
        let d2 = samples::discrete(2);
        let (direct, product) = mobius_join(&d2, &d2);
        assert_eq!(direct, BigInt::from(-1));
        assert_eq!(direct, product);
        let point = samples::discrete(1);
        let (direct, product) = mobius_join(&samples::rp2(), &point);
        assert_eq!(direct, BigInt::from(0));
        assert_eq!(direct, product);
    }

    #[test]
    fn bjorner_walker_cases() {
        let p = samples::rp2();
        // single element
        let report = bjorner_walker(&p, &["d".to_string()]).unwrap();
        assert_eq!(report.value, BigInt::from(0));
        // the whole middle level is convex
        let middle: Vec<String> =
            ["d", "e", "f", "g", "h", "i"].iter().map(|s| s.to_string()).collect();
        assert_eq!(bjorner_walker(&p, &middle).unwrap().value, BigInt::from(0));
        // a < d < j with d missing
        let bad = vec!["a".to_string(), "j".to_string()];
        assert_eq!(bjorner_walker(&p, &bad).err(), Some(Error::NotConvex("d".into())));
    }

    #[test]
    fn equals_reduced_euler_characteristic() {
        for p in [
            samples::z_wedge(),
            samples::rp2(),
            samples::morse_remark(),
            samples::sphere_model(2),
        ] {
            let h = f_complex(&p, true).homology();
            let chi: i64 = (h.euler_characteristic()) as i64;
            assert_eq!(mu(&p), BigInt::from(chi));
            assert_eq!(mu(&p), mu(&p.opposite()));
        }
    }
}
