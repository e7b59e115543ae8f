//! Spectral sequences of filtered chain complexes of posets.
//!
//! Two engines cooperate here. The explicit one assembles the first page
//! from punctured-star homology of the antichain differences together with
//! the sign-formula differential, keeping representative cycles. The
//! generic one computes every page of the filtered f-complex from integer
//! cycle/boundary lattices and is used both as an oracle and for pages
//! beyond the first.

use crate::complex::{f_boundary, f_complex, relative_f_complex, ChainComplex, Cycle, HomologyResult};
use crate::error::{Error, Result};
use crate::linalg::{cokernel, kernel_basis, presented_homology, solve_matrix, AbelianGroup, IntMatrix};
use crate::poset::{Chain, Poset};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Absolute,
    /// X_0 is treated as the subspace A; the sequence converges to H(X,A).
    Relative,
}

/// An increasing sequence of subposets X_0 ⊆ X_1 ⊆ … ⊆ X_N = X whose
/// differences D_p = X_p − X_{p−1} are antichains for p ≥ 1. X_0 itself
/// need not be an antichain.
#[derive(Clone, Debug)]
pub struct Filtration {
    poset: Poset,
    levels: Vec<Vec<String>>,
}

impl Filtration {
    pub fn validate(p: &Poset, levels: &[Vec<String>]) -> Result<Filtration> {
        if levels.is_empty() {
            return Err(Error::NotAFiltration(0));
        }
        let mut normalized = Vec::with_capacity(levels.len());
        for level in levels {
            normalized.push(p.induced(level)?.elements().to_vec());
        }
        for i in 1..normalized.len() {
            if !normalized[i - 1].iter().all(|x| normalized[i].contains(x)) {
                return Err(Error::NotAFiltration(i));
            }
        }
        let last = normalized.last().unwrap();
        if last.len() != p.len() {
            return Err(Error::NotAFiltration(normalized.len() - 1));
        }
        for i in 1..normalized.len() {
            let d: Vec<String> = normalized[i]
                .iter()
                .filter(|x| !normalized[i - 1].contains(*x))
                .cloned()
                .collect();
            if !p.is_antichain(&d)? {
                return Err(Error::NotAntichainInduced(i));
            }
        }
        Ok(Filtration { poset: p.clone(), levels: normalized })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn levels(&self) -> &[Vec<String>] {
        &self.levels
    }

    /// Index N of the top level.
    pub fn top(&self) -> i64 {
        self.levels.len() as i64 - 1
    }

    pub fn level(&self, p: i64) -> &[String] {
        if p < 0 {
            &[]
        } else {
            let i = (p as usize).min(self.levels.len() - 1);
            &self.levels[i]
        }
    }

    /// D_p = X_p − X_{p−1} (D_0 = X_0).
    pub fn difference(&self, p: i64) -> Vec<String> {
        let cur = self.level(p);
        let prev = self.level(p - 1);
        if p < 0 {
            return vec![];
        }
        if p == 0 {
            return cur.to_vec();
        }
        cur.iter().filter(|x| !prev.contains(*x)).cloned().collect()
    }

    /// Smallest p with the chain contained in X_p.
    pub fn level_of_chain(&self, c: &Chain) -> i64 {
        for p in 0..self.levels.len() {
            if c.members.iter().all(|m| self.levels[p].contains(m)) {
                return p as i64;
            }
        }
        self.top()
    }

    /// Every nonempty punctured star has vanishing reduced homology above
    /// the height, so the boundedness condition for convergence holds for
    /// every finite poset.
    pub fn condition_star(&self) -> bool {
        true
    }
}

/// Filtration of a poset by the heights of its elements: X_p contains the
/// elements x with h(U_x) ≤ p. Always induced by antichains, with X_0 the
/// (antichain of) minimal elements.
pub fn height_filtration(p: &Poset) -> Vec<Vec<String>> {
    let mut heights = Vec::with_capacity(p.len());
    for x in p.elements() {
        let ux = p.down_set(x, false).unwrap();
        heights.push(p.induced(&ux).unwrap().height());
    }
    let top = heights.iter().copied().max().unwrap_or(0).max(0);
    (0..=top)
        .map(|h| {
            p.elements()
                .iter()
                .zip(&heights)
                .filter(|(_, hh)| **hh <= h)
                .map(|(x, _)| x.clone())
                .collect()
        })
        .collect()
}

/// One generator of a first-page entry: the carrying point of the
/// antichain (None for the p = 0 column), the torsion order if finite, and
/// a representative cycle in the ambient poset's chains.
#[derive(Clone, Debug)]
pub struct PaperGenerator {
    pub owner: Option<String>,
    pub order: Option<BigInt>,
    pub cycle: Cycle,
}

#[derive(Clone, Debug)]
pub struct PaperEntry {
    pub group: AbelianGroup,
    pub gens: Vec<PaperGenerator>,
}

impl PaperEntry {
    /// Relation lattice of the entry in generator coordinates: order
    /// multiples of the torsion generators.
    pub fn relations(&self) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> = self
            .gens
            .iter()
            .enumerate()
            .filter_map(|(i, g)| {
                g.order.as_ref().map(|m| {
                    let mut v = vec![BigInt::zero(); self.gens.len()];
                    v[i] = m.clone();
                    v
                })
            })
            .collect();
        IntMatrix::from_columns(self.gens.len(), &cols)
    }
}

/// First page of the explicit spectral sequence, with representative
/// cycles and (after `d1_paper`) the differential matrices.
#[derive(Clone, Debug)]
pub struct PaperPage {
    pub mode: Mode,
    pub(crate) top: i64,
    pub(crate) entries: BTreeMap<(i64, i64), PaperEntry>,
    pub(crate) diffs: BTreeMap<(i64, i64), IntMatrix>,
}

impl PaperPage {
    pub fn entry(&self, p: i64, q: i64) -> Option<&PaperEntry> {
        self.entries.get(&(p, q))
    }

    pub fn group(&self, p: i64, q: i64) -> AbelianGroup {
        self.entries
            .get(&(p, q))
            .map(|e| e.group.clone())
            .unwrap_or_else(AbelianGroup::trivial)
    }

    /// d¹ matrix (p,q) → (p−1,q); None before `d1_paper` or where trivial.
    pub fn d1(&self, p: i64, q: i64) -> Option<&IntMatrix> {
        self.diffs.get(&(p, q))
    }

    pub fn bidegrees(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.entries.keys().copied()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.entries
            .iter()
            .map(|((p, q), e)| {
                let r = e.group.rank as i64;
                if (p + q).rem_euclid(2) == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }

    fn gens_len(&self, p: i64, q: i64) -> usize {
        self.entries.get(&(p, q)).map(|e| e.gens.len()).unwrap_or(0)
    }

    fn d1_or_zero(&self, p: i64, q: i64) -> IntMatrix {
        self.diffs
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(|| IntMatrix::zeros(self.gens_len(p - 1, q), self.gens_len(p, q)))
    }

    /// Homology of the rows of (E¹, d¹): the E² groups.
    pub fn e2_groups(&self) -> BTreeMap<(i64, i64), AbelianGroup> {
        let mut out = BTreeMap::new();
        for &(p, q) in self.entries.keys() {
            let d_out = self.d1_or_zero(p, q);
            let d_in = self.d1_or_zero(p + 1, q);
            let rel_mid = self
                .entries
                .get(&(p, q))
                .map(|e| e.relations())
                .unwrap_or_else(|| IntMatrix::zeros(0, 0));
            let rel_out = self
                .entries
                .get(&(p - 1, q))
                .map(|e| e.relations())
                .unwrap_or_else(|| IntMatrix::zeros(d_out.rows(), 0));
            let h = presented_homology(&d_out, &rel_out, &d_in, &rel_mid);
            out.insert((p, q), h.group);
        }
        out
    }

    /// The single row q of the page as a chain complex graded by total
    /// degree n = p + q, with generators labeled by their carrying points.
    pub fn row_complex(&self, q: i64) -> Result<ChainComplex> {
        let mut min_p = 0i64;
        let mut bases = Vec::new();
        let mut diffs = Vec::new();
        let mut relations = Vec::new();
        for p in min_p..=self.top {
            let labels: Vec<String> = match self.entries.get(&(p, q)) {
                Some(e) => e
                    .gens
                    .iter()
                    .enumerate()
                    .map(|(j, g)| summand_label(e, j, g))
                    .collect(),
                None => vec![],
            };
            let d = if p == min_p {
                IntMatrix::zeros(0, labels.len())
            } else {
                self.d1_or_zero(p, q)
            };
            let rel = self
                .entries
                .get(&(p, q))
                .map(|e| e.relations())
                .unwrap_or_else(|| IntMatrix::zeros(0, 0));
            bases.push(labels);
            diffs.push(d);
            relations.push(rel);
        }
        while bases.len() > 1 && bases[0].is_empty() {
            bases.remove(0);
            diffs.remove(0);
            relations.remove(0);
            min_p += 1;
        }
        ChainComplex::new(min_p + q, bases, diffs, Some(relations))
    }
}

fn summand_label(e: &PaperEntry, j: usize, g: &PaperGenerator) -> String {
    match &g.owner {
        Some(x) => {
            let copies = e.gens.iter().filter(|h| h.owner.as_deref() == Some(x)).count();
            if copies == 1 {
                x.clone()
            } else {
                let k = e.gens[..j]
                    .iter()
                    .filter(|h| h.owner.as_deref() == Some(x))
                    .count();
                format!("{}#{}", x, k)
            }
        }
        None => format!("X0:{}", j),
    }
}

/// Punctured star of x inside the subspace S (as a sorted element list).
pub(crate) fn punctured_star_in(p: &Poset, s: &[String], x: &str) -> Result<Vec<String>> {
    let ix = p.index_of(x)?;
    let mut out = vec![];
    for y in s {
        let iy = p.index_of(y)?;
        if iy != ix && p.comparable(ix, iy) {
            out.push(y.clone());
        }
    }
    Ok(out)
}

/// Reduced or absolute homology of the induced subposet, together with the
/// chain complex and a label-to-chain dictionary for decoding
/// representatives.
pub(crate) fn subspace_homology(
    p: &Poset,
    elements: &[String],
    reduced: bool,
) -> Result<(Poset, ChainComplex, HomologyResult, HashMap<String, Chain>)> {
    let sub = p.induced(elements)?;
    let cc = f_complex(&sub, reduced);
    let h = cc.homology();
    let mut dict = HashMap::new();
    for n in cc.min_degree()..=cc.max_degree() {
        for c in if n == -1 { vec![Chain::empty()] } else { sub.chains(n) } {
            dict.insert(c.to_string(), c);
        }
    }
    Ok((sub, cc, h, dict))
}

pub(crate) fn labeled_to_cycle(dict: &HashMap<String, Chain>, terms: &[(String, BigInt)]) -> Cycle {
    terms
        .iter()
        .map(|(l, a)| (dict[l].clone(), a.clone()))
        .collect()
}

fn cycle_vector(basis: &[Chain], c: &Cycle) -> Vec<BigInt> {
    let index: HashMap<&Chain, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut v = vec![BigInt::zero(); basis.len()];
    for (s, a) in c {
        if let Some(&i) = index.get(s) {
            v[i] = a.clone();
        } else if !a.is_zero() {
            panic!("cycle term {} outside the expected chain basis", s);
        }
    }
    v
}

/// Coordinates of the class of `target` in the span of the given
/// representative cycles, modulo the column span of `boundaries`.
pub(crate) fn express_class(
    basis: &[Chain],
    reps: &[Cycle],
    boundaries: &IntMatrix,
    target: &Cycle,
) -> Option<Vec<BigInt>> {
    let rep_cols: Vec<Vec<BigInt>> = reps.iter().map(|r| cycle_vector(basis, r)).collect();
    let m = IntMatrix::from_columns(basis.len(), &rep_cols).hstack(boundaries);
    let sol = crate::linalg::solve(&m, &cycle_vector(basis, target))?;
    Some(sol[..reps.len()].to_vec())
}

/// First page of the theorem: E¹_{0,q} = H_q(X_0) (zero in relative mode),
/// E¹_{p,q} = ⊕_{x∈D_p} reduced H_{p+q−1} of the punctured star of x in
/// X_p, with representative cycles recorded for the differential.
pub fn e1_paper(f: &Filtration, mode: Mode) -> Result<PaperPage> {
    let p0 = f.poset();
    let mut entries: BTreeMap<(i64, i64), Vec<PaperGenerator>> = BTreeMap::new();
    let mut groups: BTreeMap<(i64, i64), AbelianGroup> = BTreeMap::new();

    if mode == Mode::Absolute && !f.level(0).is_empty() {
        let (sub, _, h, dict) = subspace_homology(p0, f.level(0), false)?;
        for q in 0..=sub.height().max(0) {
            let g = h.group(q);
            if g.is_trivial() {
                continue;
            }
            let gens = h
                .generators(q)
                .iter()
                .map(|lc| PaperGenerator {
                    owner: None,
                    order: lc.order.clone(),
                    cycle: labeled_to_cycle(&dict, &lc.terms),
                })
                .collect();
            entries.insert((0, q), gens);
            groups.insert((0, q), g);
        }
    }

    for p in 1..=f.top() {
        for x in f.difference(p) {
            let link = punctured_star_in(p0, f.level(p), &x)?;
            let (sub, _, h, dict) = subspace_homology(p0, &link, true)?;
            for d in (-1)..=sub.height().max(-1) {
                let g = h.group(d);
                if g.is_trivial() {
                    continue;
                }
                let q = d + 1 - p;
                let slot = entries.entry((p, q)).or_default();
                for lc in h.generators(d) {
                    slot.push(PaperGenerator {
                        owner: Some(x.clone()),
                        order: lc.order.clone(),
                        cycle: labeled_to_cycle(&dict, &lc.terms),
                    });
                }
                let acc = groups.entry((p, q)).or_insert_with(AbelianGroup::trivial);
                *acc = acc.direct_sum(&g);
            }
        }
    }

    let entries = entries
        .into_iter()
        .map(|(k, gens)| (k, PaperEntry { group: groups[&k].clone(), gens }))
        .collect();
    Ok(PaperPage { mode, top: f.top(), entries, diffs: BTreeMap::new() })
}

/// Fills in the d¹ matrices by the sign formula: a generator at x maps,
/// for each y of the previous antichain comparable with x, to the class of
/// sum a_i sgn_{s_i}(y) (s_i − {y}) in the summand of y; for p = 1 it maps
/// to its own class in H_q(X_0).
pub fn d1_paper(f: &Filtration, page: &PaperPage) -> Result<PaperPage> {
    let p0 = f.poset();
    let mut out = page.clone();
    let keys: Vec<(i64, i64)> = page.entries.keys().copied().collect();
    for (p, q) in keys {
        if p < 1 || page.gens_len(p - 1, q) == 0 {
            continue;
        }
        let source = &page.entries[&(p, q)];
        let target = &page.entries[&(p - 1, q)];
        let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(source.gens.len());
        if p == 1 {
            if page.mode == Mode::Relative || q < 0 {
                continue;
            }
            // inclusion into H_q(X_0)
            let (sub0, cc0, _, _) = subspace_homology(p0, f.level(0), false)?;
            let basis = sub0.chains(q);
            let reps: Vec<Cycle> = target.gens.iter().map(|g| g.cycle.clone()).collect();
            let boundaries = cc0.diff(q + 1);
            for g in &source.gens {
                let coords = express_class(&basis, &reps, &boundaries, &g.cycle)
                    .ok_or(Error::ClassExpressionFailed)?;
                cols.push(coords);
            }
        } else {
            // per-point routing through the sign formula
            let d_prev: Vec<String> = f.difference(p - 1);
            // target summand layout and per-point expression data
            let mut offset = HashMap::new();
            for (j, g) in target.gens.iter().enumerate() {
                let x = g.owner.clone().expect("p >= 1 entries carry owners");
                offset.entry(x).or_insert_with(Vec::new).push(j);
            }
            let mut per_point: HashMap<String, (Vec<Chain>, Vec<Cycle>, IntMatrix)> =
                HashMap::new();
            for y in &d_prev {
                let link = punctured_star_in(p0, f.level(p - 1), y)?;
                let (sub, cc, _, _) = subspace_homology(p0, &link, true)?;
                let d = p + q - 2;
                let basis = if d == -1 { vec![Chain::empty()] } else { sub.chains(d) };
                let reps: Vec<Cycle> = offset
                    .get(y)
                    .map(|idx| idx.iter().map(|&j| target.gens[j].cycle.clone()).collect())
                    .unwrap_or_default();
                let boundaries = cc.diff(d + 1);
                per_point.insert(y.clone(), (basis, reps, boundaries));
            }
            for g in &source.gens {
                let x = g.owner.as_ref().unwrap();
                let ix = p0.index_of(x)?;
                let mut col = vec![BigInt::zero(); target.gens.len()];
                for y in &d_prev {
                    let iy = p0.index_of(y)?;
                    if !p0.comparable(ix, iy) {
                        continue;
                    }
                    let mut tau = Cycle::new();
                    for (s, a) in &g.cycle {
                        if !s.contains(y) {
                            continue;
                        }
                        let sign = BigInt::from(crate::complex::chain_sign(s, y)?);
                        let e = tau.entry(s.without(y)).or_insert_with(BigInt::zero);
                        *e += a * sign;
                    }
                    tau.retain(|_, v| !v.is_zero());
                    let (basis, reps, boundaries) = &per_point[y];
                    if reps.is_empty() && tau.is_empty() {
                        continue;
                    }
                    let coords = express_class(basis, reps, boundaries, &tau)
                        .ok_or(Error::ClassExpressionFailed)?;
                    for (k, &j) in offset.get(y).map(|v| v.as_slice()).unwrap_or(&[]).iter().enumerate() {
                        col[j] = coords[k].clone();
                    }
                }
                cols.push(col);
            }
        }
        out.diffs
            .insert((p, q), IntMatrix::from_columns(page.gens_len(p - 1, q), &cols));
    }
    Ok(out)
}

/// One page of the generic engine: isomorphism types only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralPage {
    pub r: i64,
    entries: BTreeMap<(i64, i64), AbelianGroup>,
}

impl SpectralPage {
    pub fn entry(&self, p: i64, q: i64) -> AbelianGroup {
        self.entries
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(AbelianGroup::trivial)
    }

    pub fn nontrivial(&self) -> Vec<((i64, i64), AbelianGroup)> {
        self.entries
            .iter()
            .filter(|(_, g)| !g.is_trivial())
            .map(|(k, g)| (*k, g.clone()))
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.entries
            .iter()
            .map(|((p, q), g)| {
                let r = g.rank as i64;
                if (p + q).rem_euclid(2) == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }
}

/// Per-degree accounting of the limit page against the homology oracle:
/// total rank and total torsion order along each antidiagonal.
#[derive(Clone, Debug)]
pub struct DegreeConvergence {
    pub degree: i64,
    pub rank_sum: usize,
    pub torsion_product: BigInt,
    pub homology_rank: usize,
    pub homology_torsion: BigInt,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct SpectralReport {
    /// Pages r = 1, 2, …; the last one is stable (E^∞).
    pub pages: Vec<SpectralPage>,
    /// Homology of the filtered complex, computed directly.
    pub homology: HomologyResult,
    pub convergence: Vec<DegreeConvergence>,
}

impl SpectralReport {
    pub fn infinity(&self) -> &SpectralPage {
        self.pages.last().unwrap()
    }

    pub fn converged(&self) -> bool {
        self.convergence.iter().all(|c| c.ok)
    }
}

/// Generic filtered-complex spectral sequence of the (relative) f-complex
/// of the filtration, over the integers, all pages until stabilization.
pub fn spectral_sequence(f: &Filtration, mode: Mode) -> Result<SpectralReport> {
    let p0 = f.poset();
    let (cc, chains_by_degree) = match mode {
        Mode::Absolute => {
            let cc = f_complex(p0, false);
            let chains: Vec<Vec<Chain>> =
                (0..=cc.max_degree()).map(|n| p0.chains(n)).collect();
            (cc, chains)
        }
        Mode::Relative => {
            let cc = relative_f_complex(p0, f.level(0))?;
            let chains: Vec<Vec<Chain>> = (0..=cc.max_degree())
                .map(|n| p0.chains_rel(f.level(0), n).unwrap())
                .collect();
            (cc, chains)
        }
    };
    let max_degree = cc.max_degree();
    let levels: Vec<Vec<i64>> = chains_by_degree
        .iter()
        .map(|cs| cs.iter().map(|c| f.level_of_chain(c)).collect())
        .collect();

    let level_at = |n: i64| -> &[i64] {
        if n < 0 || n > max_degree {
            &[]
        } else {
            &levels[n as usize]
        }
    };

    // Z^r_{p,q} = { c in F_p C_n : dc in F_{p-r} C_{n-1} }, as a basis
    // matrix over the full chain basis of degree n
    let z_lattice = |n: i64, p: i64, r: i64| -> IntMatrix {
        let full = level_at(n).len();
        if p < 0 || full == 0 {
            return IntMatrix::zeros(full, 0);
        }
        let cols_idx: Vec<usize> = level_at(n)
            .iter()
            .enumerate()
            .filter(|(_, l)| **l <= p)
            .map(|(i, _)| i)
            .collect();
        let rows_idx: Vec<usize> = level_at(n - 1)
            .iter()
            .enumerate()
            .filter(|(_, l)| **l > p - r)
            .map(|(i, _)| i)
            .collect();
        let d = cc.diff(n);
        let restricted = d.select_rows(&rows_idx).select_cols(&cols_idx);
        let k = kernel_basis(&restricted);
        let mut full_cols = Vec::with_capacity(k.cols());
        for j in 0..k.cols() {
            let mut v = vec![BigInt::zero(); full];
            for (local, &global) in cols_idx.iter().enumerate() {
                v[global] = k.get(local, j).clone();
            }
            full_cols.push(v);
        }
        IntMatrix::from_columns(full, &full_cols)
    };

    let top = f.top();
    let r_max = (top + 1).max(2);
    let mut pages = Vec::new();
    for r in 1..=r_max {
        let mut entries = BTreeMap::new();
        for p in 0..=top {
            for n in cc.min_degree()..=max_degree {
                let q = n - p;
                let lattice = z_lattice(n, p, r);
                if lattice.cols() == 0 {
                    continue;
                }
                let below = z_lattice(n, p - 1, r - 1);
                let dsrc = z_lattice(n + 1, p + r - 1, r - 1);
                let dimg = cc.diff(n + 1).mul(&dsrc);
                let denom = below.hstack(&dimg);
                let y = solve_matrix(&lattice, &denom)
                    .expect("denominators lie inside the cycle lattice");
                let g = cokernel_of_quotient(lattice.cols(), &y);
                if !g.is_trivial() {
                    entries.insert((p, q), g);
                }
            }
        }
        pages.push(SpectralPage { r, entries });
    }

    let homology = cc.homology();
    let last = pages.last().unwrap().clone();
    let mut convergence = Vec::new();
    for n in cc.min_degree()..=max_degree {
        let mut rank_sum = 0usize;
        let mut torsion_product = BigInt::from(1);
        for p in 0..=top {
            let g = last.entry(p, n - p);
            rank_sum += g.rank;
            torsion_product *= g.torsion_order();
        }
        let hg = homology.group(n);
        let ok = rank_sum == hg.rank && torsion_product == hg.torsion_order();
        convergence.push(DegreeConvergence {
            degree: n,
            rank_sum,
            torsion_product,
            homology_rank: hg.rank,
            homology_torsion: hg.torsion_order(),
            ok,
        });
    }
    Ok(SpectralReport { pages, homology, convergence })
}

fn cokernel_of_quotient(lattice_cols: usize, y: &IntMatrix) -> AbelianGroup {
    debug_assert_eq!(y.rows(), lattice_cols);
    cokernel(y)
}

/// The condensed one-row complex of a filtration whose quotients have
/// homology concentrated on the carrying points: C_k is the direct sum of
/// reduced H_{k−1} of the strict down-sets of points[k], realized as cones
/// inside the pair (cumulative[k+1], cumulative[k]). The differential
/// takes the boundary of the cone and expresses it against the cones one
/// level down.
pub fn condensed_complex(
    p0: &Poset,
    cumulative: &[Vec<String>],
    points: &[Vec<String>],
) -> Result<ChainComplex> {
    assert_eq!(cumulative.len(), points.len() + 1);
    struct Gen {
        label: String,
        order: Option<BigInt>,
        cone: Cycle,
    }
    let mut per_level: Vec<Vec<Gen>> = Vec::with_capacity(points.len());
    for (k, pts) in points.iter().enumerate() {
        let mut gens = Vec::new();
        for x in pts {
            if cumulative[k].contains(x) || !cumulative[k + 1].contains(x) {
                return Err(Error::PreconditionFailed(format!(
                    "point {} does not enter the filtration at level {}",
                    x, k
                )));
            }
            let down = p0.down_set(x, true)?;
            if let Some(outside) = down.iter().find(|d| !cumulative[k].contains(*d)) {
                return Err(Error::PreconditionFailed(format!(
                    "strict down-set of {} leaves level {} at {}",
                    x, k, outside
                )));
            }
            let (_, _, h, dict) = subspace_homology(p0, &down, true)?;
            if h.support().iter().any(|&d| d != k as i64 - 1) {
                return Err(Error::PreconditionFailed(format!(
                    "homology below {} is not concentrated in degree {}",
                    x,
                    k as i64 - 1
                )));
            }
            let hgens = h.generators(k as i64 - 1);
            for (j, lc) in hgens.iter().enumerate() {
                let sigma = labeled_to_cycle(&dict, &lc.terms);
                let cone: Cycle = sigma
                    .iter()
                    .map(|(s, a)| {
                        let mut members = s.members.clone();
                        members.push(x.clone());
                        // x sits above its strict down-set, hence last
                        (Chain::new(members), a.clone())
                    })
                    .collect();
                let label = if hgens.len() == 1 {
                    x.clone()
                } else {
                    format!("{}#{}", x, j)
                };
                gens.push(Gen { label, order: lc.order.clone(), cone });
            }
        }
        per_level.push(gens);
    }

    let mut bases = Vec::new();
    let mut diffs = Vec::new();
    let mut relations = Vec::new();
    for (k, gens) in per_level.iter().enumerate() {
        bases.push(gens.iter().map(|g| g.label.clone()).collect::<Vec<_>>());
        let rel_cols: Vec<Vec<BigInt>> = gens
            .iter()
            .enumerate()
            .filter_map(|(i, g)| {
                g.order.as_ref().map(|m| {
                    let mut v = vec![BigInt::zero(); gens.len()];
                    v[i] = m.clone();
                    v
                })
            })
            .collect();
        relations.push(IntMatrix::from_columns(gens.len(), &rel_cols));
        if k == 0 {
            diffs.push(IntMatrix::zeros(0, gens.len()));
            continue;
        }
        // express boundaries of the cones in the pair one level down
        let prev = &per_level[k - 1];
        let sub = p0.induced(&cumulative[k])?;
        let rel = relative_f_complex(&sub, &cumulative[k - 1])?;
        let basis: Vec<Chain> = p0.chains_rel(&cumulative[k - 1], k as i64 - 1)?
            .into_iter()
            .filter(|c| c.members.iter().all(|m| cumulative[k].contains(m)))
            .collect();
        let reps: Vec<Cycle> = prev.iter().map(|g| g.cone.clone()).collect();
        let boundaries = rel.diff(k as i64);
        let mut cols = Vec::with_capacity(gens.len());
        for g in gens {
            let mut tau = f_boundary(&g.cone, false);
            tau.retain(|s, _| !s.members.iter().all(|m| cumulative[k - 1].contains(m)));
            let coords = express_class(&basis, &reps, &boundaries, &tau)
                .ok_or(Error::ClassExpressionFailed)?;
            cols.push(coords);
        }
        diffs.push(IntMatrix::from_columns(prev.len(), &cols));
    }
    ChainComplex::new(0, bases, diffs, Some(relations))
}
