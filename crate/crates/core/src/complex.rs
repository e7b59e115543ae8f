//! Chain complexes of chains of a poset ("f-complexes"), absolute,
//! relative and reduced, plus homology with representative cycles.
//!
//! Complexes may carry torsion relations per degree so that reduced
//! complexes whose terms are arbitrary finitely generated groups (as in the
//! quasicellular construction) fit the same machinery.

use crate::error::{Error, Result};
use crate::linalg::{
    presented_homology, solve_matrix, AbelianGroup, IntMatrix, PresentedHomology,
};
use crate::poset::{Chain, Poset};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Sparse integer combination of chains.
pub type Cycle = BTreeMap<Chain, BigInt>;

pub fn cycle_from(terms: &[(Chain, i64)]) -> Cycle {
    let mut c = Cycle::new();
    for (s, a) in terms {
        if *a != 0 {
            let e = c.entry(s.clone()).or_insert_with(BigInt::zero);
            *e += BigInt::from(*a);
        }
    }
    c.retain(|_, v| !v.is_zero());
    c
}

/// Sign of x inside the increasing chain s: (-1)^position.
pub fn chain_sign(s: &Chain, x: &str) -> Result<i64> {
    match s.members.iter().position(|m| m == x) {
        Some(k) if k % 2 == 0 => Ok(1),
        Some(_) => Ok(-1),
        None => Err(Error::ElementNotInChain(x.to_string())),
    }
}

/// Boundary of a sparse combination under the alternating face sum. With
/// `reduced`, vertices bound the empty chain; otherwise their boundary is 0.
pub fn f_boundary(c: &Cycle, reduced: bool) -> Cycle {
    let mut out = Cycle::new();
    for (s, a) in c {
        if s.members.is_empty() || (s.members.len() == 1 && !reduced) {
            continue;
        }
        for k in 0..s.members.len() {
            let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            let e = out.entry(s.face(k)).or_insert_with(BigInt::zero);
            *e += a * sign;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Finitely generated chain complex over a contiguous degree range with
/// labeled generators and optional torsion relations per degree.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    min_degree: i64,
    bases: Vec<Vec<String>>,
    diffs: Vec<IntMatrix>,
    relations: Vec<IntMatrix>,
}

impl ChainComplex {
    /// `diffs[i]` maps degree `min_degree + i` to the degree below; the
    /// first one must have zero rows. Verifies d.d = 0 (modulo the relation
    /// lattice when relations are present) and that relations are carried
    /// into relations.
    pub fn new(
        min_degree: i64,
        bases: Vec<Vec<String>>,
        diffs: Vec<IntMatrix>,
        relations: Option<Vec<IntMatrix>>,
    ) -> Result<ChainComplex> {
        assert_eq!(bases.len(), diffs.len());
        let relations = relations
            .unwrap_or_else(|| bases.iter().map(|b| IntMatrix::zeros(b.len(), 0)).collect());
        assert_eq!(bases.len(), relations.len());
        for i in 0..bases.len() {
            assert_eq!(diffs[i].cols(), bases[i].len());
            let below = if i == 0 { 0 } else { bases[i - 1].len() };
            assert_eq!(diffs[i].rows(), below);
            assert_eq!(relations[i].rows(), bases[i].len());
        }
        for i in 1..bases.len() {
            let dd = diffs[i - 1].mul(&diffs[i]);
            if !lands_in(&dd, if i >= 2 { Some(&relations[i - 2]) } else { None }) {
                return Err(Error::NotAComplex(min_degree + i as i64));
            }
            let dr = diffs[i].mul(&relations[i]);
            if !lands_in(&dr, Some(&relations[i - 1])) {
                return Err(Error::NotAComplex(min_degree + i as i64));
            }
        }
        Ok(ChainComplex { min_degree, bases, diffs, relations })
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.bases.len() as i64 - 1
    }

    fn level(&self, n: i64) -> Option<usize> {
        let i = n - self.min_degree;
        if i >= 0 && (i as usize) < self.bases.len() {
            Some(i as usize)
        } else {
            None
        }
    }

    pub fn basis(&self, n: i64) -> &[String] {
        self.level(n).map(|i| self.bases[i].as_slice()).unwrap_or(&[])
    }

    /// Differential from degree n to n-1 (empty outside the range).
    pub fn diff(&self, n: i64) -> IntMatrix {
        match self.level(n) {
            Some(i) if i > 0 => self.diffs[i].clone(),
            Some(i) => IntMatrix::zeros(0, self.bases[i].len()),
            None => IntMatrix::zeros(self.basis(n - 1).len(), 0),
        }
    }

    pub fn relation(&self, n: i64) -> IntMatrix {
        match self.level(n) {
            Some(i) => self.relations[i].clone(),
            None => IntMatrix::zeros(0, 0),
        }
    }

    /// Rank of the degree-n chain group (generators minus relation rank).
    pub fn group_rank(&self, n: i64) -> usize {
        match self.level(n) {
            Some(i) => self.bases[i].len() - crate::linalg::rank(&self.relations[i]),
            None => 0,
        }
    }

    pub fn total_generators(&self) -> usize {
        self.bases.iter().map(|b| b.len()).sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        let mut chi = 0i64;
        for n in self.min_degree..=self.max_degree() {
            let r = self.group_rank(n) as i64;
            chi += if n.rem_euclid(2) == 0 { r } else { -r };
        }
        chi
    }

    pub fn homology(&self) -> HomologyResult {
        let mut items = BTreeMap::new();
        for (i, base) in self.bases.iter().enumerate() {
            let n = self.min_degree + i as i64;
            let d_out = &self.diffs[i];
            let rel_out = if i > 0 {
                self.relations[i - 1].clone()
            } else {
                IntMatrix::zeros(0, 0)
            };
            let d_in = if i + 1 < self.diffs.len() {
                self.diffs[i + 1].clone()
            } else {
                IntMatrix::zeros(base.len(), 0)
            };
            let h = presented_homology(d_out, &rel_out, &d_in, &self.relations[i]);
            items.insert(n, DegreeHomology::from_presented(n, base, h));
        }
        HomologyResult { items }
    }
}

fn lands_in(m: &IntMatrix, lattice: Option<&IntMatrix>) -> bool {
    if m.is_zero() {
        return true;
    }
    match lattice {
        Some(l) if l.cols() > 0 => solve_matrix(l, m).is_some(),
        _ => false,
    }
}

/// One homology generator as a labeled combination of basis elements.
#[derive(Clone, Debug)]
pub struct LabeledCycle {
    /// None for a free generator, the torsion order otherwise.
    pub order: Option<BigInt>,
    pub terms: Vec<(String, BigInt)>,
}

impl fmt::Display for LabeledCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (label, a)) in self.terms.iter().enumerate() {
            if k == 0 {
                if *a == BigInt::one() {
                    write!(f, "{}", label)?;
                } else if *a == -BigInt::one() {
                    write!(f, "-{}", label)?;
                } else {
                    write!(f, "{}*{}", a, label)?;
                }
            } else if a.sign() == num_bigint::Sign::Minus {
                let m = -a;
                if m == BigInt::one() {
                    write!(f, " - {}", label)?;
                } else {
                    write!(f, " - {}*{}", m, label)?;
                }
            } else if *a == BigInt::one() {
                write!(f, " + {}", label)?;
            } else {
                write!(f, " + {}*{}", a, label)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct DegreeHomology {
    pub degree: i64,
    pub group: AbelianGroup,
    pub generators: Vec<LabeledCycle>,
}

impl DegreeHomology {
    fn from_presented(degree: i64, base: &[String], h: PresentedHomology) -> DegreeHomology {
        let generators = h
            .gens
            .into_iter()
            .map(|g| LabeledCycle {
                order: g.order,
                terms: base
                    .iter()
                    .zip(&g.rep)
                    .filter(|(_, a)| !a.is_zero())
                    .map(|(l, a)| (l.clone(), a.clone()))
                    .collect(),
            })
            .collect();
        DegreeHomology { degree, group: h.group, generators }
    }
}

/// Homology groups per degree with representatives.
#[derive(Clone, Debug)]
pub struct HomologyResult {
    items: BTreeMap<i64, DegreeHomology>,
}

impl HomologyResult {
    pub fn group(&self, n: i64) -> AbelianGroup {
        self.items.get(&n).map(|d| d.group.clone()).unwrap_or_else(AbelianGroup::trivial)
    }

    pub fn betti(&self, n: i64) -> usize {
        self.group(n).rank
    }

    pub fn generators(&self, n: i64) -> &[LabeledCycle] {
        self.items.get(&n).map(|d| d.generators.as_slice()).unwrap_or(&[])
    }

    pub fn degrees(&self) -> impl Iterator<Item = &DegreeHomology> {
        self.items.values()
    }

    /// Degrees with nontrivial homology.
    pub fn support(&self) -> Vec<i64> {
        self.items
            .iter()
            .filter(|(_, d)| !d.group.is_trivial())
            .map(|(n, _)| *n)
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.items
            .iter()
            .map(|(n, d)| {
                let r = d.group.rank as i64;
                if n.rem_euclid(2) == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }

    /// True if all groups agree (ranks and torsion) with `other`.
    pub fn same_groups(&self, other: &HomologyResult) -> bool {
        let lo = self.items.keys().chain(other.items.keys()).min().copied();
        let hi = self.items.keys().chain(other.items.keys()).max().copied();
        match (lo, hi) {
            (Some(lo), Some(hi)) => (lo..=hi).all(|n| self.group(n) == other.group(n)),
            _ => true,
        }
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .items
            .iter()
            .map(|(n, d)| format!("H{}={}", n, d.group))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// The f-chain complex of a poset: basis in degree n is Ch_n(P), the
/// differential is the alternating face sum. Reduced mode appends the
/// empty chain in degree -1.
pub fn f_complex(p: &Poset, reduced: bool) -> ChainComplex {
    let min_degree = if reduced { -1 } else { 0 };
    let mut per_level: Vec<Vec<Chain>> = vec![];
    if reduced {
        per_level.push(vec![Chain::empty()]);
    }
    for n in 0..=p.height().max(if reduced { -1 } else { 0 }) {
        per_level.push(p.chains(n));
    }
    if p.is_empty() && !reduced {
        per_level.clear();
    }
    complex_on_chains(min_degree, per_level)
}

/// The relative f-complex C(X)/C(A): chains not contained in A, faces
/// landing inside A dropped.
pub fn relative_f_complex(p: &Poset, a: &[String]) -> Result<ChainComplex> {
    let mut per_level: Vec<Vec<Chain>> = vec![];
    for n in 0..=p.height().max(0) {
        per_level.push(p.chains_rel(a, n)?);
    }
    while per_level.last().map_or(false, |l| l.is_empty()) {
        per_level.pop();
    }
    Ok(complex_on_chains(0, per_level))
}

fn complex_on_chains(min_degree: i64, per_level: Vec<Vec<Chain>>) -> ChainComplex {
    let mut diffs = Vec::with_capacity(per_level.len());
    for i in 0..per_level.len() {
        let cols = per_level[i].len();
        if i == 0 {
            diffs.push(IntMatrix::zeros(0, cols));
            continue;
        }
        let below: HashMap<&Chain, usize> =
            per_level[i - 1].iter().enumerate().map(|(j, c)| (c, j)).collect();
        let mut m = IntMatrix::zeros(per_level[i - 1].len(), cols);
        for (j, s) in per_level[i].iter().enumerate() {
            for k in 0..s.members.len() {
                let face = s.face(k);
                // absent faces are ones quotiented away (relative complex)
                if let Some(&row) = below.get(&face) {
                    let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                    let v = m.get(row, j) + sign;
                    m.set(row, j, v);
                }
            }
        }
        diffs.push(m);
    }
    let bases = per_level
        .iter()
        .map(|l| l.iter().map(|c| c.to_string()).collect())
        .collect();
    ChainComplex::new(min_degree, bases, diffs, None).expect("face maps square to zero")
}

/// Connecting morphism of the pair (C_x, C^_x): a relative cycle
/// sum(a_i s_i) maps to sum over the terms containing x of
/// a_i sgn_{s_i}(x) (s_i - {x}), a cycle in the reduced complex of C^_x.
pub fn connecting_boundary(p: &Poset, x: &str, sigma: &Cycle) -> Result<Cycle> {
    let star = p.star(x)?;
    for s in sigma.keys() {
        for m in &s.members {
            if !star.contains(m) {
                return Err(Error::PreconditionFailed(format!(
                    "chain {} leaves the star of {}",
                    s, x
                )));
            }
        }
    }
    // relative cycle: the boundary may not contain chains through x
    let boundary = f_boundary(sigma, false);
    if boundary.keys().any(|s| s.contains(x)) {
        return Err(Error::NotARelativeCycle);
    }
    let mut out = Cycle::new();
    for (s, a) in sigma {
        if !s.contains(x) {
            continue;
        }
        let sign = BigInt::from(chain_sign(s, x)?);
        let e = out.entry(s.without(x)).or_insert_with(BigInt::zero);
        *e += a * sign;
    }
    out.retain(|_, v| !v.is_zero());
    debug_assert!(f_boundary(&out, true).is_empty());
    Ok(out)
}
