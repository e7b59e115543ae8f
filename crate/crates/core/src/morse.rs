//! Discrete Morse theory on Hasse diagrams: matchings, acyclicity of the
//! reoriented cover digraph, homological admissibility of edges, and the
//! critical-point chain complex.

use crate::complex::{f_complex, relative_f_complex, ChainComplex};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::reduction::{find_quasicellular, Quasicellular};
use crate::spectral::condensed_complex;
use std::collections::{BTreeMap, BTreeSet};

pub type Matching = Vec<(String, String)>;

#[derive(Clone, Debug)]
pub struct MatchingReport {
    pub is_matching: bool,
    pub is_morse: bool,
    /// Per edge: does removing the lower endpoint leave the punctured
    /// down-set of the upper endpoint acyclic?
    pub admissible_edges: BTreeMap<(String, String), bool>,
    /// Elements not incident to any edge, in element order.
    pub critical_points: Vec<String>,
}

impl MatchingReport {
    pub fn all_admissible(&self) -> bool {
        self.admissible_edges.values().all(|&b| b)
    }
}

fn check_covers(p: &Poset, m: &Matching) -> Result<()> {
    for (a, b) in m {
        if !p.is_cover(a, b)? {
            return Err(Error::NotACover(a.clone(), b.clone()));
        }
    }
    Ok(())
}

/// Is the punctured down-set of b, with a removed, acyclic? The empty
/// poset is not acyclic (its reduced homology is Z in degree -1), so an
/// edge whose upper endpoint covers nothing else is never admissible.
pub fn edge_admissible(p: &Poset, a: &str, b: &str) -> Result<bool> {
    if !p.is_cover(a, b)? {
        return Err(Error::NotACover(a.to_string(), b.to_string()));
    }
    let mut down = p.down_set(b, true)?;
    down.retain(|x| x != a);
    let sub = p.induced(&down)?;
    Ok(f_complex(&sub, true).homology().support().is_empty())
}

/// Is the digraph with matched covers pointing up and all other covers
/// pointing down acyclic?
fn h_m_acyclic(p: &Poset, m: &Matching) -> bool {
    let n = p.len();
    let mut adj = vec![vec![]; n];
    let matched: BTreeSet<(usize, usize)> = m
        .iter()
        .map(|(a, b)| (p.index_of(a).unwrap(), p.index_of(b).unwrap()))
        .collect();
    for (a, b) in p.covers() {
        let (ia, ib) = (p.index_of(a).unwrap(), p.index_of(b).unwrap());
        if matched.contains(&(ia, ib)) {
            adj[ia].push(ib);
        } else {
            adj[ib].push(ia);
        }
    }
    // 0 = white, 1 = on stack, 2 = done
    let mut color = vec![0u8; n];
    fn dfs(v: usize, adj: &[Vec<usize>], color: &mut [u8]) -> bool {
        color[v] = 1;
        for &w in &adj[v] {
            if color[w] == 1 || (color[w] == 0 && !dfs(w, adj, color)) {
                return false;
            }
        }
        color[v] = 2;
        true
    }
    (0..n).all(|v| color[v] != 0 || dfs(v, &adj, &mut color))
}

pub fn verify_matching(p: &Poset, m: &Matching) -> Result<MatchingReport> {
    check_covers(p, m)?;
    let mut incident: BTreeMap<String, usize> = BTreeMap::new();
    for (a, b) in m {
        *incident.entry(a.clone()).or_default() += 1;
        *incident.entry(b.clone()).or_default() += 1;
    }
    let is_matching = incident.values().all(|&c| c == 1);
    let is_morse = is_matching && h_m_acyclic(p, m);
    let mut admissible_edges = BTreeMap::new();
    for (a, b) in m {
        admissible_edges.insert((a.clone(), b.clone()), edge_admissible(p, a, b)?);
    }
    let critical_points = p
        .elements()
        .iter()
        .filter(|x| !incident.contains_key(*x))
        .cloned()
        .collect();
    Ok(MatchingReport { is_matching, is_morse, admissible_edges, critical_points })
}

/// The Morse filtration of the theorem: X_n contains the elements of
/// degree at most n together with the matched upper endpoints over
/// degree-n elements. Returned cumulatively, starting from the empty set.
fn morse_filtration(
    p: &Poset,
    qm: &Quasicellular,
    m: &Matching,
    critical: &[String],
) -> (Vec<Vec<String>>, Vec<Vec<String>>) {
    let top = qm.max_level();
    let mut cumulative = vec![vec![]];
    let mut points = Vec::new();
    for n in 0..=top {
        let mut level: Vec<String> = p
            .elements()
            .iter()
            .filter(|x| qm.rho(x).map(|r| r <= n).unwrap_or(false))
            .cloned()
            .collect();
        for (a, b) in m {
            if qm.rho(a) == Some(n) && !level.contains(b) {
                level.push(b.clone());
            }
        }
        let level = p.induced(&level).unwrap().elements().to_vec();
        cumulative.push(level);
        points.push(
            critical
                .iter()
                .filter(|x| qm.rho(x) == Some(n))
                .cloned()
                .collect(),
        );
    }
    (cumulative, points)
}

/// The Morse complex of a homologically admissible Morse matching on a
/// quasicellular poset: one summand per critical point, graded by its
/// degree, with homology equal to H(X).
pub fn morse_complex(p: &Poset, m: &Matching) -> Result<ChainComplex> {
    let qm = find_quasicellular(p, None)?;
    let report = verify_matching(p, m)?;
    if !report.is_matching || !report.is_morse {
        return Err(Error::NotAMorseMatching);
    }
    for ((a, b), ok) in &report.admissible_edges {
        if !ok {
            return Err(Error::NotAdmissible(a.clone(), b.clone()));
        }
    }
    for (a, b) in m {
        if qm.rho(b) != qm.rho(a).map(|r| r + 1) {
            return Err(Error::RhoMismatch(a.clone(), b.clone()));
        }
    }
    let (cumulative, points) = morse_filtration(p, &qm, m, &report.critical_points);
    condensed_complex(p, &cumulative, &points)
}

/// Builds the critical-point groups even when the poset is not
/// quasicellular, grading each critical point by the concentration degree
/// of its strict down-set and using zero differentials. The homology of
/// the result need not equal H(X); the construction exists to exhibit
/// exactly that failure.
pub fn morse_complex_forced(p: &Poset, m: &Matching) -> Result<ChainComplex> {
    let report = verify_matching(p, m)?;
    if !report.is_matching || !report.is_morse {
        return Err(Error::NotAMorseMatching);
    }
    for ((a, b), ok) in &report.admissible_edges {
        if !ok {
            return Err(Error::NotAdmissible(a.clone(), b.clone()));
        }
    }
    let mut bases: Vec<Vec<String>> = Vec::new();
    for x in &report.critical_points {
        let down = p.down_set(x, true)?;
        let sub = p.induced(&down)?;
        let h = f_complex(&sub, true).homology();
        let support = h.support();
        let degree = match support.as_slice() {
            [d] => d + 1,
            _ => {
                return Err(Error::PreconditionFailed(format!(
                    "homology below critical point {} is not concentrated",
                    x
                )))
            }
        };
        let count = h.group(degree - 1).rank + h.group(degree - 1).torsion.len();
        while bases.len() <= degree as usize {
            bases.push(vec![]);
        }
        for j in 0..count {
            let label = if count == 1 { x.clone() } else { format!("{}#{}", x, j) };
            bases[degree as usize].push(label);
        }
    }
    if bases.is_empty() {
        bases.push(vec![]);
    }
    let diffs: Vec<crate::linalg::IntMatrix> = (0..bases.len())
        .map(|i| {
            let rows = if i == 0 { 0 } else { bases[i - 1].len() };
            crate::linalg::IntMatrix::zeros(rows, bases[i].len())
        })
        .collect();
    ChainComplex::new(0, bases, diffs, None)
}

/// The single-collapse lemma: for b maximal whose lower endpoint a is
/// covered only by b and whose edge is admissible, the pair (X, X−{a,b})
/// has vanishing homology.
pub fn single_edge_collapse_check(p: &Poset, a: &str, b: &str) -> Result<bool> {
    if !p.up_set(b, true)?.is_empty() {
        return Err(Error::PreconditionFailed(format!("{} is not maximal", b)));
    }
    if p.up_set(a, true)? != vec![b.to_string()] {
        return Err(Error::PreconditionFailed(format!(
            "{} is covered by elements other than {}",
            a, b
        )));
    }
    if !edge_admissible(p, a, b)? {
        return Err(Error::PreconditionFailed(format!(
            "edge ({},{}) is not homologically admissible",
            a, b
        )));
    }
    let rest: Vec<String> = p
        .elements()
        .iter()
        .filter(|x| *x != a && *x != b)
        .cloned()
        .collect();
    let cc = relative_f_complex(p, &rest)?;
    Ok(cc.homology().support().is_empty())
}

/// Greedy matching for benchmarks: scan the cover edges in element order
/// and keep each admissible edge between unmatched endpoints that leaves
/// the reoriented digraph acyclic.
pub fn greedy_matching(p: &Poset) -> Result<Matching> {
    let mut m: Matching = vec![];
    let mut used: BTreeSet<String> = BTreeSet::new();
    let covers: Vec<(String, String)> = p
        .covers()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    for (a, b) in covers {
        if used.contains(&a) || used.contains(&b) || !edge_admissible(p, &a, &b)? {
            continue;
        }
        m.push((a.clone(), b.clone()));
        if h_m_acyclic(p, &m) {
            used.insert(a);
            used.insert(b);
        } else {
            m.pop();
        }
    }
    Ok(m)
}
