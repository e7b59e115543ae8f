//! Quasicellular structures: degree maps whose strict down-sets have
//! homology concentrated in a single degree, the reduced chain complexes
//! they induce, and the stronger cellular (sphere-link) recognition.

use crate::complex::{f_complex, ChainComplex};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::spectral::{d1_paper, e1_paper, Filtration, Mode};
use std::collections::BTreeMap;

/// A degree map ρ on X (or on X − A in relative mode) that is strictly
/// order-preserving on its domain and concentrates the reduced homology of
/// every strict down-set Û_x in degree ρ(x) − 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quasicellular {
    rho: BTreeMap<String, i64>,
    relative_part: Option<Vec<String>>,
}

impl Quasicellular {
    pub fn new(rho: BTreeMap<String, i64>, relative_part: Option<Vec<String>>) -> Self {
        Quasicellular { rho, relative_part }
    }

    pub fn rho(&self, x: &str) -> Option<i64> {
        self.rho.get(x).copied()
    }

    pub fn map(&self) -> &BTreeMap<String, i64> {
        &self.rho
    }

    pub fn relative_part(&self) -> Option<&[String]> {
        self.relative_part.as_deref()
    }

    pub fn max_level(&self) -> i64 {
        self.rho.values().copied().max().unwrap_or(-1)
    }

    /// Level sets J_0, …, J_max in element order.
    pub fn levels(&self, p: &Poset) -> Vec<Vec<String>> {
        let max = self.max_level();
        (0..=max)
            .map(|n| {
                p.elements()
                    .iter()
                    .filter(|x| self.rho(x) == Some(n))
                    .cloned()
                    .collect()
            })
            .collect()
    }

    /// Cumulative filtration levels X_0 = A (or ∅), X_{n+1} = X_n ∪ J_n.
    pub fn filtration_levels(&self, p: &Poset) -> Vec<Vec<String>> {
        let mut acc: Vec<String> = self.relative_part.clone().unwrap_or_default();
        let mut out = vec![acc.clone()];
        for level in self.levels(p) {
            acc.extend(level);
            let sorted = p.induced(&acc).unwrap().elements().to_vec();
            out.push(sorted);
        }
        out
    }
}

/// Degrees in which the reduced homology of the induced subposet does not
/// vanish, ascending.
fn homology_support(p: &Poset, elements: &[String]) -> Result<Vec<i64>> {
    let sub = p.induced(elements)?;
    Ok(f_complex(&sub, true).homology().support())
}

fn check_open(p: &Poset, a: &[String]) -> Result<()> {
    for x in a {
        for y in p.down_set(x, true)? {
            if !a.contains(&y) {
                return Err(Error::NotOpen(y));
            }
        }
    }
    Ok(())
}

/// Searches for a quasicellular degree map, relative to the open subset
/// `a` when given. Elements whose down-set homology sits in a unique
/// degree d are forced to ρ = d + 1; acyclic down-sets take the smallest
/// value compatible with order-preservation. Minimal choices never
/// obstruct later elements, so the greedy pass is complete and the first
/// failing element (in element order) genuinely has no valid degree.
pub fn find_quasicellular(p: &Poset, a: Option<&[String]>) -> Result<Quasicellular> {
    let a: Vec<String> = match a {
        Some(s) => {
            let sorted = p.induced(s)?.elements().to_vec();
            check_open(p, &sorted)?;
            sorted
        }
        None => vec![],
    };
    let domain: Vec<usize> = (0..p.len())
        .filter(|i| !a.contains(&p.name(*i).to_string()))
        .collect();
    let mut rho: BTreeMap<usize, i64> = BTreeMap::new();
    let mut witness: Option<usize> = None;
    // element order is a valid processing order as long as every
    // predecessor is handled first; order the domain topologically with
    // element-index tie-break
    let mut order = domain.clone();
    order.sort_by_key(|&i| {
        let down = p.down_set(p.name(i), false).unwrap();
        (p.induced(&down).unwrap().height(), i)
    });
    for &i in &order {
        let down = p.down_set(p.name(i), true)?;
        let support = homology_support(p, &down)?;
        let lower = domain
            .iter()
            .filter(|&&j| p.lt(j, i))
            .filter_map(|j| rho.get(j))
            .max()
            .map(|m| m + 1)
            .unwrap_or(0);
        let value = match support.as_slice() {
            [] => lower,
            [d] if d + 1 >= lower => d + 1,
            _ => {
                witness = Some(witness.map_or(i, |w| w.min(i)));
                // keep going with the lower bound so later lower bounds
                // stay minimal and the reported witness stays meaningful
                lower
            }
        };
        rho.insert(i, value);
    }
    if let Some(w) = witness {
        return Err(Error::NotQuasicellular(p.name(w).to_string()));
    }
    let rho = rho
        .into_iter()
        .map(|(i, v)| (p.name(i).to_string(), v))
        .collect();
    let relative_part = if a.is_empty() { None } else { Some(a) };
    Ok(Quasicellular { rho, relative_part })
}

/// Checks that `qm` really is quasicellular for `p`: open relative part,
/// domain exactly the complement, strict order-preservation, and
/// concentration of each down-set's homology.
pub fn validate_quasicellular(p: &Poset, qm: &Quasicellular) -> Result<()> {
    let a = qm.relative_part().unwrap_or(&[]);
    check_open(p, a)?;
    for x in p.elements() {
        let in_a = a.contains(x);
        match (in_a, qm.rho(x)) {
            (true, Some(_)) => {
                return Err(Error::PreconditionFailed(format!(
                    "rho is defined on {} inside the relative part",
                    x
                )))
            }
            (false, None) => {
                return Err(Error::PreconditionFailed(format!(
                    "rho is undefined on {}",
                    x
                )))
            }
            _ => {}
        }
    }
    for (x, &n) in qm.map() {
        if n < 0 {
            return Err(Error::NotQuasicellular(x.clone()));
        }
        let ix = p.index_of(x)?;
        for (y, &m) in qm.map() {
            let iy = p.index_of(y)?;
            if p.lt(ix, iy) && n >= m {
                return Err(Error::NotQuasicellular(y.clone()));
            }
        }
        let down = p.down_set(x, true)?;
        let support = homology_support(p, &down)?;
        if support.iter().any(|&d| d != n - 1) {
            return Err(Error::NotQuasicellular(x.clone()));
        }
    }
    Ok(())
}

/// The reduced chain complex of a quasicellular degree map:
/// C_n = ⊕_{ρ(x)=n} reduced H_{n−1}(Û_x), with the differential of the
/// induced antichain filtration. Its homology equals H(X) (absolute) or
/// H(X, A) (relative).
pub fn quasicellular_complex(p: &Poset, qm: &Quasicellular) -> Result<ChainComplex> {
    validate_quasicellular(p, qm)?;
    let mode = if qm.relative_part().is_some() {
        Mode::Relative
    } else {
        Mode::Absolute
    };
    let f = Filtration::validate(p, &qm.filtration_levels(p))?;
    let page = e1_paper(&f, mode)?;
    let page = d1_paper(&f, &page)?;
    page.row_complex(-1)
}

/// Cellularity report: a poset is cellular when it is graded and every
/// strict down-set has the homology of a sphere of dimension deg(x) − 1.
#[derive(Clone, Debug)]
pub struct CellularReport {
    pub cellular: bool,
    /// The grading when the poset is graded.
    pub degree: Option<BTreeMap<String, i64>>,
    /// First element failing the sphere condition, if any.
    pub witness: Option<String>,
}

pub fn is_cellular(p: &Poset) -> CellularReport {
    let grading = match p.grading() {
        Some(g) => g,
        None => {
            return CellularReport { cellular: false, degree: None, witness: None }
        }
    };
    let degree: BTreeMap<String, i64> = grading
        .into_iter()
        .map(|(k, v)| (k, v as i64))
        .collect();
    for x in p.elements() {
        let d = degree[x];
        let down = p.down_set(x, true).unwrap();
        let sub = p.induced(&down).unwrap();
        let h = f_complex(&sub, true).homology();
        let sphere = h.support() == vec![d - 1]
            && h.group(d - 1) == crate::linalg::AbelianGroup::free(1);
        if !sphere {
            return CellularReport {
                cellular: false,
                degree: Some(degree),
                witness: Some(x.clone()),
            };
        }
    }
    CellularReport { cellular: true, degree: Some(degree), witness: None }
}
