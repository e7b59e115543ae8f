//! Regular covers of posets described by group colorings of the Hasse
//! diagram, their homology, the cover spectral sequence, and second
//! homotopy groups read off the universal cover.

use crate::complex::f_complex;
use crate::error::{Error, Result};
use crate::linalg::{AbelianGroup, IntMatrix};
use crate::poset::{Chain, Poset};
use crate::spectral::{
    d1_paper, e1_paper, express_class, spectral_sequence, subspace_homology, Filtration, Mode,
    PaperEntry, PaperGenerator, PaperPage, SpectralReport,
};
use crate::complex::Cycle;
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = names.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty element list".to_string()));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::NotAGroup(format!("duplicate element {}", name)));
            }
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::NotAGroup("table is not square".to_string()));
        }
        if table.iter().flatten().any(|&v| v >= n) {
            return Err(Error::NotAGroup("table entry out of range".to_string()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".to_string()))?;
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", names[a])))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({},{},{})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { names, table, identity, inverse })
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::from_table(vec!["e".to_string()], vec![vec![0]]).unwrap()
    }

    /// Cyclic group of order n with elements g0 (identity), g1, ….
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let names = (0..n).map(|i| format!("g{}", i)).collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroup::from_table(names, table).unwrap()
    }

    /// Symmetric group on {0, …, n−1}; elements named by one-line notation.
    pub fn symmetric(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = vec![];
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let mut ps = perms(n);
        ps.sort();
        let names: Vec<String> = ps
            .iter()
            .map(|p| p.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        let index: BTreeMap<Vec<usize>, usize> =
            ps.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let table = ps
            .iter()
            .map(|a| {
                ps.iter()
                    .map(|b| {
                        let comp: Vec<usize> = (0..n).map(|i| a[b[i]]).collect();
                        index[&comp]
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(names, table).unwrap()
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::NotAGroup(format!("no element named {}", name)))
    }
}

/// An admissible coloring: labels on Hasse edges whose composites along
/// monotone paths are path-independent, i.e. a functor from the poset to
/// the group.
#[derive(Clone, Debug)]
pub struct Coloring {
    poset: Poset,
    group: FiniteGroup,
    /// c(x ≤ y) for every comparable pair, indexed by element indices.
    rel: Vec<Vec<Option<usize>>>,
}

pub fn validate_coloring(
    p: &Poset,
    group: FiniteGroup,
    labels: &[((String, String), String)],
) -> Result<Coloring> {
    let n = p.len();
    let e = group.identity();
    let mut edge: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for ((a, b), g) in labels {
        if !p.is_cover(a, b)? {
            return Err(Error::NotACover(a.clone(), b.clone()));
        }
        edge.insert((p.index_of(a)?, p.index_of(b)?), group.index_of(g)?);
    }
    for (a, b) in p.covers() {
        let key = (p.index_of(a)?, p.index_of(b)?);
        edge.entry(key).or_insert(e);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| {
        let down = p.down_set(p.name(i), false).unwrap();
        (p.induced(&down).unwrap().height(), i)
    });
    let mut rel = vec![vec![None; n]; n];
    for x in 0..n {
        rel[x][x] = Some(e);
        for &y in &order {
            if !p.lt(x, y) {
                continue;
            }
            let mut value: Option<usize> = None;
            for (&(u, v), &t) in &edge {
                if v != y || !(u == x || p.lt(x, u)) {
                    continue;
                }
                let through = group.mul(rel[x][u].expect("processed in order"), t);
                match value {
                    None => value = Some(through),
                    Some(w) if w != through => {
                        return Err(Error::NotAdmissibleColoring(
                            p.name(x).to_string(),
                            p.name(y).to_string(),
                            group.name(w).to_string(),
                            group.name(through).to_string(),
                        ))
                    }
                    _ => {}
                }
            }
            rel[x][y] = value;
        }
    }
    Ok(Coloring { poset: p.clone(), group, rel })
}

impl Coloring {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// c(x ≤ y); inverts the stored label when x > y.
    pub fn label(&self, x: usize, y: usize) -> Option<usize> {
        if let Some(v) = self.rel[x][y] {
            return Some(v);
        }
        self.rel[y][x].map(|v| self.group.inv(v))
    }

    pub fn is_connected(&self) -> Result<bool> {
        Ok(build_cover(self)?.total.components().len() == 1)
    }
}

/// The regular cover E(c): one point x@g per pair, ordered by
/// (x,g) ≤ (y, g·c(x≤y)).
#[derive(Clone, Debug)]
pub struct CoverSpace {
    pub total: Poset,
    pub group: FiniteGroup,
    base: Poset,
}

pub fn point_name(x: &str, g: &str) -> String {
    format!("{}@{}", x, g)
}

pub fn build_cover(c: &Coloring) -> Result<CoverSpace> {
    let p = &c.poset;
    let g = &c.group;
    let mut elements = Vec::with_capacity(p.len() * g.order());
    for x in p.elements() {
        for i in 0..g.order() {
            elements.push(point_name(x, g.name(i)));
        }
    }
    let mut relations = Vec::new();
    for (a, b) in p.covers() {
        let (ia, ib) = (p.index_of(a)?, p.index_of(b)?);
        let t = c.label(ia, ib).expect("cover edges are labeled");
        for i in 0..g.order() {
            relations.push((
                point_name(a, g.name(i)),
                point_name(b, g.name(g.mul(i, t))),
            ));
        }
    }
    Ok(CoverSpace {
        total: Poset::build_owned(elements, relations)?,
        group: g.clone(),
        base: p.clone(),
    })
}

impl CoverSpace {
    /// Splits a cover point back into (base element, group element).
    pub fn project(&self, name: &str) -> Result<(String, String)> {
        let at = name.rfind('@').ok_or_else(|| Error::UnknownElement(name.to_string()))?;
        Ok((name[..at].to_string(), name[at + 1..].to_string()))
    }

    /// The deck transformation of h as point pairs (from, to).
    pub fn deck(&self, h: &str) -> Result<Vec<(String, String)>> {
        let ih = self.group.index_of(h)?;
        let mut out = Vec::new();
        for name in self.total.elements() {
            let (x, g) = self.project(name)?;
            let ig = self.group.index_of(&g)?;
            out.push((name.clone(), point_name(&x, self.group.name(self.group.mul(ih, ig)))));
        }
        Ok(out)
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }
}

/// Lifts filtration levels of the base to the cover.
pub fn lifted_levels(c: &Coloring, f: &Filtration) -> Vec<Vec<String>> {
    f.levels()
        .iter()
        .map(|level| {
            level
                .iter()
                .flat_map(|x| {
                    (0..c.group.order()).map(move |i| point_name(x, c.group.name(i)))
                })
                .collect()
        })
        .collect()
}

/// Sheet reached from x@g along the comparability with v.
fn sheet(c: &Coloring, x: usize, g: usize, v: usize) -> usize {
    if v == x {
        return g;
    }
    let t = c.label(x, v).expect("link elements are comparable");
    c.group.mul(g, t)
}

fn lift_cycle(c: &Coloring, x: usize, g: usize, cycle: &Cycle) -> Cycle {
    let p = &c.poset;
    cycle
        .iter()
        .map(|(s, a)| {
            let members = s
                .members
                .iter()
                .map(|v| {
                    let iv = p.index_of(v).unwrap();
                    point_name(v, c.group.name(sheet(c, x, g, iv)))
                })
                .collect();
            (Chain::new(members), a.clone())
        })
        .collect()
}

/// First page, with differentials, of the cover spectral sequence: |G|
/// copies of every base summand, the differential of a copy at (x,g)
/// routed to the copy at (y, g·c(x≤y)) with the base coefficients, and
/// the p = 1 column expressed in the homology of the lifted X_0.
pub fn cover_spectral(c: &Coloring, f: &Filtration) -> Result<PaperPage> {
    let base_page = d1_paper(f, &e1_paper(f, Mode::Absolute)?)?;
    let cover = build_cover(c)?;
    let p0 = &c.poset;
    let g = &c.group;
    let levels = lifted_levels(c, f);
    let cf = Filtration::validate(&cover.total, &levels)?;

    let mut entries: BTreeMap<(i64, i64), PaperEntry> = BTreeMap::new();
    let mut diffs: BTreeMap<(i64, i64), IntMatrix> = BTreeMap::new();

    // p = 0 column: homology of the lifted X_0, computed directly
    let mut x0_data = None;
    if !cf.level(0).is_empty() {
        let (sub0, cc0, h0, dict0) = subspace_homology(&cover.total, cf.level(0), false)?;
        for q in 0..=sub0.height().max(0) {
            let group = h0.group(q);
            if group.is_trivial() {
                continue;
            }
            let gens = h0
                .generators(q)
                .iter()
                .map(|lc| PaperGenerator {
                    owner: None,
                    order: lc.order.clone(),
                    cycle: crate::spectral::labeled_to_cycle(&dict0, &lc.terms),
                })
                .collect();
            entries.insert((0, q), PaperEntry { group, gens });
        }
        x0_data = Some((sub0, cc0));
    }

    // layout of a lifted entry: for each owner run, |G| copies, each a
    // full copy of the run
    struct Layout {
        owners: Vec<(String, usize, usize)>, // owner, start, len in base gens
    }
    fn layout_of(e: &PaperEntry) -> Layout {
        let mut owners: Vec<(String, usize, usize)> = vec![];
        for (i, gen) in e.gens.iter().enumerate() {
            let x = gen.owner.clone().expect("p >= 1 gens carry owners");
            match owners.last_mut() {
                Some((last, _, len)) if *last == x => *len += 1,
                _ => owners.push((x, i, 1)),
            }
        }
        Layout { owners }
    }
    fn cover_index(l: &Layout, order: usize, base_idx: usize, gi: usize) -> usize {
        let mut offset = 0;
        for (_, start, len) in &l.owners {
            if base_idx >= *start && base_idx < start + len {
                return offset + gi * len + (base_idx - start);
            }
            offset += order * len;
        }
        unreachable!("base generator index outside every owner run");
    }

    let keys: Vec<(i64, i64)> = base_page.entries.keys().copied().collect();
    for &(p, q) in &keys {
        if p < 1 {
            continue;
        }
        let base_entry = &base_page.entries[&(p, q)];
        let l = layout_of(base_entry);
        let mut gens = Vec::with_capacity(base_entry.gens.len() * g.order());
        let mut group = AbelianGroup::trivial();
        for (x, start, len) in &l.owners {
            let ix = p0.index_of(x)?;
            for gi in 0..g.order() {
                for j in *start..start + len {
                    let base_gen = &base_entry.gens[j];
                    gens.push(PaperGenerator {
                        owner: Some(point_name(x, g.name(gi))),
                        order: base_gen.order.clone(),
                        cycle: lift_cycle(c, ix, gi, &base_gen.cycle),
                    });
                    let mut s = AbelianGroup::trivial();
                    match &base_gen.order {
                        Some(m) => s.torsion.push(m.clone()),
                        None => s.rank = 1,
                    }
                    group = group.direct_sum(&s);
                }
            }
        }
        entries.insert((p, q), PaperEntry { group, gens });
    }

    for &(p, q) in &keys {
        let base_d = match base_page.diffs.get(&(p, q)) {
            Some(d) => d,
            None => continue,
        };
        let source = &base_page.entries[&(p, q)];
        let src_layout = layout_of(source);
        let src_rows = source.gens.len();
        if p == 1 {
            let (sub0, cc0) = x0_data.as_ref().expect("p=1 differential needs X0");
            let basis = sub0.chains(q);
            let reps: Vec<Cycle> = entries
                .get(&(0, q))
                .map(|t| t.gens.iter().map(|gen| gen.cycle.clone()).collect())
                .unwrap_or_default();
            let boundaries = cc0.diff(q + 1);
            let mut cols: Vec<Vec<BigInt>> = Vec::new();
            for (x, start, len) in &src_layout.owners {
                let ix = p0.index_of(x)?;
                for gi in 0..g.order() {
                    for j in *start..start + len {
                        let lifted = lift_cycle(c, ix, gi, &source.gens[j].cycle);
                        let coords = express_class(&basis, &reps, &boundaries, &lifted)
                            .ok_or(Error::ClassExpressionFailed)?;
                        cols.push(coords);
                    }
                }
            }
            diffs.insert((p, q), IntMatrix::from_columns(reps.len(), &cols));
            continue;
        }
        let base_target = &base_page.entries[&(p - 1, q)];
        let tgt_layout = layout_of(base_target);
        let rows = base_target.gens.len() * g.order();
        let cols = src_rows * g.order();
        let mut m = IntMatrix::zeros(rows, cols);
        for (x, start, len) in &src_layout.owners {
            let ix = p0.index_of(x)?;
            for gi in 0..g.order() {
                for j in *start..start + len {
                    let col = cover_index(&src_layout, g.order(), j, gi);
                    for k in 0..base_target.gens.len() {
                        let v = base_d.get(k, j);
                        if num_traits::Zero::is_zero(v) {
                            continue;
                        }
                        let y = base_target.gens[k].owner.as_ref().unwrap();
                        let iy = p0.index_of(y)?;
                        let h = sheet(c, ix, gi, iy);
                        let row = cover_index(&tgt_layout, g.order(), k, h);
                        m.set(row, col, v.clone());
                    }
                }
            }
        }
        diffs.insert((p, q), m);
    }

    Ok(PaperPage { mode: Mode::Absolute, top: f.top(), entries, diffs })
}

/// Generic-engine spectral sequence of the lifted filtration on E(c),
/// used as the oracle for `cover_spectral`.
pub fn cover_spectral_generic(c: &Coloring, f: &Filtration) -> Result<SpectralReport> {
    let cover = build_cover(c)?;
    let cf = Filtration::validate(&cover.total, &lifted_levels(c, f))?;
    spectral_sequence(&cf, Mode::Absolute)
}

#[derive(Clone, Debug)]
pub struct Pi2Report {
    /// H_2 of the cover; equals π₂ of the base when the coloring describes
    /// its universal cover.
    pub pi2: AbelianGroup,
    pub cover_homology: crate::complex::HomologyResult,
    /// When a subset with acyclic-enough components is supplied: does
    /// H_2 of the cover equal |G| copies of H_2 of the base?
    pub tensor_check: Option<bool>,
}

pub fn pi2_report(c: &Coloring, a: Option<&[String]>) -> Result<Pi2Report> {
    let cover = build_cover(c)?;
    if cover.total.components().len() != 1 {
        return Err(Error::NotConnectedColoring);
    }
    let h = f_complex(&cover.total, false).homology();
    let h1 = h.group(1);
    if !h1.is_trivial() {
        return Err(Error::NotHomologySimplyConnected(h1.to_string()));
    }
    let pi2 = h.group(2);
    let tensor_check = match a {
        None => None,
        Some(a) => {
            let sub = c.poset.induced(a)?;
            for comp in sub.components() {
                let comp_sub = sub.induced(&comp)?;
                let ch = f_complex(&comp_sub, true).homology();
                if (1..=2).any(|i| !ch.group(i).is_trivial()) {
                    return Err(Error::PreconditionFailed(format!(
                        "component of the subset has homology in degrees 1..2",
                    )));
                }
            }
            let base_h2 = f_complex(&c.poset, false).homology().group(2);
            let mut expected = AbelianGroup::trivial();
            for _ in 0..c.group.order() {
                expected = expected.direct_sum(&base_h2);
            }
            Some(pi2 == expected)
        }
    };
    Ok(Pi2Report { pi2, cover_homology: h, tensor_check })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;
    use num_traits::Zero;

    fn rp2_coloring() -> Coloring {
        let p = samples::rp2();
        let labels: Vec<((String, String), String)> = samples::rp2_nontrivial_edges()
            .into_iter()
            .map(|e| (e, "g1".to_string()))
            .collect();
        validate_coloring(&p, FiniteGroup::cyclic(2), &labels).unwrap()
    }

    #[test]
    fn group_construction() {
        assert_eq!(FiniteGroup::trivial().order(), 1);
        let c4 = FiniteGroup::cyclic(4);
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.mul(3, 2), 1);
        assert_eq!(c4.inv(1), 3);
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.name(s3.identity()), "012");
        // non-associative magma
        let bad = FiniteGroup::from_table(
            vec!["e".into(), "a".into(), "b".into()],
            vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]],
        );
        assert!(matches!(bad, Err(Error::NotAGroup(_))));
    }

    #[test]
    fn rp2_coloring_admissible_and_connected() {
        let c = rp2_coloring();
        assert!(c.is_connected().unwrap());
        // a single labeled edge breaks path-independence
        let p = samples::rp2();
        let labels = vec![(("b".to_string(), "d".to_string()), "g1".to_string())];
        assert!(matches!(
            validate_coloring(&p, FiniteGroup::cyclic(2), &labels),
            Err(Error::NotAdmissibleColoring(..))
        ));
    }

    #[test]
    fn identity_coloring_is_disconnected_copies() {
        let p = samples::sphere_model(1);
        let c = validate_coloring(&p, FiniteGroup::cyclic(2), &[]).unwrap();
        assert!(!c.is_connected().unwrap());
        let cover = build_cover(&c).unwrap();
        assert_eq!(cover.total.components().len(), 2);
        let h = f_complex(&cover.total, false).homology();
        assert_eq!(h.group(0), AbelianGroup::free(2));
        assert_eq!(h.group(1), AbelianGroup::free(2));
    }

    #[test]
    fn trivial_group_cover_is_the_base() {
        let p = samples::z_wedge();
        let c = validate_coloring(&p, FiniteGroup::trivial(), &[]).unwrap();
        let cover = build_cover(&c).unwrap();
        assert_eq!(cover.total.len(), p.len());
        let hb = f_complex(&p, false).homology();
        let hc = f_complex(&cover.total, false).homology();
        assert!(hb.same_groups(&hc));
    }

    #[test]
    fn rp2_universal_cover_is_a_sphere() {
        let c = rp2_coloring();
        let cover = build_cover(&c).unwrap();
        assert_eq!(cover.total.len(), 26);
        let h = f_complex(&cover.total, false).homology();
        assert_eq!(h.group(0), AbelianGroup::free(1));
        assert!(h.group(1).is_trivial());
        assert_eq!(h.group(2), AbelianGroup::free(1));
        // Euler characteristic doubles
        assert_eq!(cover.total.chain_count() % 2, 0);
        let chi_base: i64 = 1;
        assert_eq!(h.euler_characteristic(), 2 * chi_base);
    }

    #[test]
    fn deck_action_is_free_and_order_preserving() {
        let c = rp2_coloring();
        let cover = build_cover(&c).unwrap();
        let deck = cover.deck("g1").unwrap();
        let map: BTreeMap<&String, &String> = deck.iter().map(|(a, b)| (a, b)).collect();
        for (from, to) in &deck {
            assert_ne!(from, to);
            // projection commutes
            let (x, _) = cover.project(from).unwrap();
            let (y, _) = cover.project(to).unwrap();
            assert_eq!(x, y);
        }
        for a in cover.total.elements() {
            for b in cover.total.elements() {
                let (ia, ib) = (
                    cover.total.index_of(a).unwrap(),
                    cover.total.index_of(b).unwrap(),
                );
                if cover.total.lt(ia, ib) {
                    let (ja, jb) = (
                        cover.total.index_of(map[a]).unwrap(),
                        cover.total.index_of(map[b]).unwrap(),
                    );
                    assert!(cover.total.lt(ja, jb));
                }
            }
        }
    }

    #[test]
    fn rp2_cover_spectral_sequence() {
        let c = rp2_coloring();
        let p = samples::rp2();
        let f = Filtration::validate(&p, &samples::rp2_filtration()).unwrap();
        let page = cover_spectral(&c, &f).unwrap();
        assert_eq!(page.group(0, 0), AbelianGroup::free(2));
        assert_eq!(page.group(1, 0), AbelianGroup::free(4));
        assert_eq!(page.group(2, 0), AbelianGroup::free(4));

        // alpha-bar sends each copy of [l]-[j] or [m]-[k] to a difference
        // of the two sheet components of the lifted X_0
        let alpha = page.d1(1, 0).unwrap();
        assert_eq!((alpha.rows(), alpha.cols()), (2, 4));
        for j in 0..4 {
            let col: Vec<BigInt> = (0..2).map(|i| alpha.get(i, j).clone()).collect();
            let mut mags: Vec<String> =
                col.iter().map(|v| v.magnitude().to_string()).collect();
            mags.sort();
            assert_eq!(mags, vec!["1", "1"]);
            assert!((col[0].clone() + col[1].clone()).is_zero());
        }

        // beta-bar: each column hits one h-copy and one i-copy with units
        let beta = page.d1(2, 0).unwrap();
        assert_eq!((beta.rows(), beta.cols()), (4, 4));
        for j in 0..4 {
            let nonzero: Vec<usize> =
                (0..4).filter(|&i| !beta.get(i, j).is_zero()).collect();
            assert_eq!(nonzero.len(), 2);
            assert!(nonzero[0] < 2 && nonzero[1] >= 2, "column {} = {:?}", j, nonzero);
            for &i in &nonzero {
                assert_eq!(beta.get(i, j).magnitude().to_string(), "1");
            }
        }

        let e2 = page.e2_groups();
        assert_eq!(e2[&(0, 0)], AbelianGroup::free(1));
        assert_eq!(e2[&(1, 0)], AbelianGroup::trivial());
        assert_eq!(e2[&(2, 0)], AbelianGroup::free(1));

        let row = page.row_complex(0).unwrap();
        let h = row.homology();
        assert_eq!(h.group(0), AbelianGroup::free(1));
        assert!(h.group(1).is_trivial());
        assert_eq!(h.group(2), AbelianGroup::free(1));

        // generic oracle on the lifted filtration
        let report = cover_spectral_generic(&c, &f).unwrap();
        assert!(report.converged());
        assert_eq!(report.homology.group(2), AbelianGroup::free(1));
        assert_eq!(report.infinity().entry(2, 0), AbelianGroup::free(1));
        assert!(report.infinity().entry(1, 0).is_trivial());
    }

    #[test]
    fn pi2_reports() {
        let c = rp2_coloring();
        let report = pi2_report(&c, None).unwrap();
        assert_eq!(report.pi2, AbelianGroup::free(1));

        // trivial group over a homology sphere: classical Hurewicz case
        let s2 = samples::sphere_model(2);
        let c = validate_coloring(&s2, FiniteGroup::trivial(), &[]).unwrap();
        let ua: Vec<String> = s2.down_set("+", false).unwrap();
        let report = pi2_report(&c, Some(&ua)).unwrap();
        assert_eq!(report.pi2, AbelianGroup::free(1));
        assert_eq!(report.tensor_check, Some(true));

        // trivial group over the projective plane: H_1 obstruction
        let p = samples::rp2();
        let c = validate_coloring(&p, FiniteGroup::trivial(), &[]).unwrap();
        assert!(matches!(
            pi2_report(&c, None),
            Err(Error::NotHomologySimplyConnected(_))
        ));
    }
}
