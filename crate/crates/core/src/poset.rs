//! Finite posets (equivalently finite T0-spaces) and the order-theoretic
//! constructions used throughout the crate: minimal open sets, stars,
//! beat-point cores, suspensions, joins and barycentric subdivision.

use crate::error::{Error, Result};
use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// A chain of a poset: a totally ordered subset, stored in increasing
/// poset order. The empty chain has dimension -1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chain {
    pub members: Vec<String>,
}

impl Chain {
    pub fn empty() -> Self {
        Chain { members: vec![] }
    }

    pub fn new(members: Vec<String>) -> Self {
        Chain { members }
    }

    pub fn dimension(&self) -> i64 {
        self.members.len() as i64 - 1
    }

    pub fn contains(&self, x: &str) -> bool {
        self.members.iter().any(|m| m == x)
    }

    /// The chain with `x` removed.
    pub fn without(&self, x: &str) -> Chain {
        Chain { members: self.members.iter().filter(|m| *m != x).cloned().collect() }
    }

    /// The face with the k-th member removed.
    pub fn face(&self, k: usize) -> Chain {
        let mut members = self.members.clone();
        members.remove(k);
        Chain { members }
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.members.join(","))
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BeatKind {
    Up,
    Down,
}

/// Classification flags for a subset of a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetWitness {
    pub subset: Vec<String>,
    pub open: bool,
    pub closed: bool,
    pub antichain: bool,
    pub convex: bool,
    pub chain: bool,
}

impl SubsetWitness {
    pub fn kinds(&self) -> Vec<&'static str> {
        let mut k = vec![];
        if self.open {
            k.push("open");
        }
        if self.closed {
            k.push("closed");
        }
        if self.antichain {
            k.push("antichain");
        }
        if self.convex {
            k.push("convex");
        }
        if self.chain {
            k.push("chain");
        }
        if k.is_empty() {
            k.push("none");
        }
        k
    }
}

/// Finite poset with named elements. The global element order is the input
/// declaration order; every set-valued result is sorted by it.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    index: HashMap<String, usize>,
    covers: BTreeSet<(usize, usize)>,
    lt: Vec<Vec<bool>>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers
            .iter()
            .map(|&(a, b)| format!("{}<{}", self.elements[a], self.elements[b]))
            .collect();
        write!(f, "Poset({}; {})", self.elements.join(","), covers.join(" "))
    }
}

impl Poset {
    /// Builds a poset from element names and an arbitrary acyclic relation.
    /// The transitive closure and the Hasse covers are computed internally.
    pub fn build(elements: &[&str], relations: &[(&str, &str)]) -> Result<Poset> {
        Self::build_owned(
            elements.iter().map(|s| s.to_string()).collect(),
            relations.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        )
    }

    pub fn build_owned(elements: Vec<String>, relations: Vec<(String, String)>) -> Result<Poset> {
        let n = elements.len();
        let mut index = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::DuplicateName(e.clone()));
            }
        }
        let mut lt = vec![vec![false; n]; n];
        for (a, b) in &relations {
            let ia = *index.get(a).ok_or_else(|| Error::UnknownElement(a.clone()))?;
            let ib = *index.get(b).ok_or_else(|| Error::UnknownElement(b.clone()))?;
            if ia == ib {
                return Err(Error::CycleDetected(a.clone()));
            }
            lt[ia][ib] = true;
        }
        // Floyd-Warshall style transitive closure
        for k in 0..n {
            for i in 0..n {
                if lt[i][k] {
                    for j in 0..n {
                        if lt[k][j] {
                            lt[i][j] = true;
                        }
                    }
                }
            }
        }
        for (i, row) in lt.iter().enumerate() {
            if row[i] {
                return Err(Error::CycleDetected(elements[i].clone()));
            }
        }
        let mut covers = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                if lt[a][b] && !(0..n).any(|c| lt[a][c] && lt[c][b]) {
                    covers.insert((a, b));
                }
            }
        }
        Ok(Poset { elements, index, covers, lt })
    }

    pub fn empty() -> Poset {
        Poset::build(&[], &[]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.lt[a][b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.lt[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a == b || self.lt[a][b] || self.lt[b][a]
    }

    pub fn covers(&self) -> impl Iterator<Item = (&str, &str)> {
        self.covers.iter().map(|&(a, b)| (self.elements[a].as_str(), self.elements[b].as_str()))
    }

    pub fn is_cover(&self, a: &str, b: &str) -> Result<bool> {
        let ia = self.index_of(a)?;
        let ib = self.index_of(b)?;
        Ok(self.covers.contains(&(ia, ib)))
    }

    fn names(&self, idx: impl IntoIterator<Item = usize>) -> Vec<String> {
        let mut v: Vec<usize> = idx.into_iter().collect();
        v.sort_unstable();
        v.into_iter().map(|i| self.elements[i].clone()).collect()
    }

    /// U_x (strict=false) or U^_x (strict=true).
    pub fn down_set(&self, x: &str, strict: bool) -> Result<Vec<String>> {
        let ix = self.index_of(x)?;
        Ok(self.names((0..self.len()).filter(|&a| self.lt[a][ix] || (!strict && a == ix))))
    }

    /// F_x (strict=false) or F^_x (strict=true).
    pub fn up_set(&self, x: &str, strict: bool) -> Result<Vec<String>> {
        let ix = self.index_of(x)?;
        Ok(self.names((0..self.len()).filter(|&a| self.lt[ix][a] || (!strict && a == ix))))
    }

    /// C_x = U_x union F_x.
    pub fn star(&self, x: &str) -> Result<Vec<String>> {
        let ix = self.index_of(x)?;
        Ok(self.names((0..self.len()).filter(|&a| self.comparable(a, ix))))
    }

    /// C^_x = C_x - {x}.
    pub fn punctured_star(&self, x: &str) -> Result<Vec<String>> {
        let ix = self.index_of(x)?;
        Ok(self.names((0..self.len()).filter(|&a| a != ix && self.comparable(a, ix))))
    }

    /// Induced subposet on the given elements, keeping the global order.
    pub fn induced(&self, subset: &[String]) -> Result<Poset> {
        let mut idx: Vec<usize> = Vec::with_capacity(subset.len());
        for s in subset {
            idx.push(self.index_of(s)?);
        }
        idx.sort_unstable();
        idx.dedup();
        let elements: Vec<String> = idx.iter().map(|&i| self.elements[i].clone()).collect();
        let mut relations = vec![];
        for (a, &ia) in idx.iter().enumerate() {
            for (b, &ib) in idx.iter().enumerate() {
                if self.lt[ia][ib] {
                    relations.push((elements[a].clone(), elements[b].clone()));
                }
            }
        }
        Poset::build_owned(elements, relations)
    }

    /// All chains of cardinality n+1, sorted lexicographically by the element
    /// order. For n = -1 this is the single empty chain.
    pub fn chains(&self, n: i64) -> Vec<Chain> {
        if n < -1 {
            return vec![];
        }
        if n == -1 {
            return vec![Chain::empty()];
        }
        let mut out: Vec<Vec<usize>> = vec![];
        let mut stack: Vec<usize> = vec![];
        for start in 0..self.len() {
            stack.push(start);
            self.extend_chains(&mut stack, (n + 1) as usize, &mut out);
            stack.pop();
        }
        out.sort();
        out.into_iter()
            .map(|c| {
                let mut members: Vec<(usize, String)> =
                    c.iter().map(|&i| (i, self.elements[i].clone())).collect();
                // store in increasing poset order
                members.sort_by(|a, b| {
                    if self.lt[a.0][b.0] {
                        std::cmp::Ordering::Less
                    } else {
                        std::cmp::Ordering::Greater
                    }
                });
                Chain::new(members.into_iter().map(|(_, s)| s).collect())
            })
            .collect()
    }

    fn extend_chains(&self, stack: &mut Vec<usize>, target: usize, out: &mut Vec<Vec<usize>>) {
        if stack.len() == target {
            out.push(stack.clone());
            return;
        }
        let last = *stack.last().unwrap();
        for next in 0..self.len() {
            // extend by elements strictly above the current poset-maximum
            if self.lt[last][next] {
                stack.push(next);
                self.extend_chains(stack, target, out);
                stack.pop();
            }
        }
    }

    /// Chains of (X, A): n-chains of X not contained in A.
    pub fn chains_rel(&self, a: &[String], n: i64) -> Result<Vec<Chain>> {
        let mut inside = vec![false; self.len()];
        for s in a {
            inside[self.index_of(s)?] = true;
        }
        Ok(self
            .chains(n)
            .into_iter()
            .filter(|c| {
                c.members.is_empty()
                    || !c.members.iter().all(|m| inside[*self.index.get(m).unwrap()])
            })
            .collect())
    }

    /// The total number of nonempty chains.
    pub fn chain_count(&self) -> usize {
        (0..=self.height().max(0)).map(|n| self.chains(n).len()).sum()
    }

    /// Height: maximum chain cardinality minus one (-1 for the empty poset).
    pub fn height(&self) -> i64 {
        let mut memo = vec![-1i64; self.len()];
        fn depth(p: &Poset, x: usize, memo: &mut Vec<i64>) -> i64 {
            if memo[x] >= 0 {
                return memo[x];
            }
            let mut d = 0;
            for a in 0..p.len() {
                if p.lt[a][x] {
                    d = d.max(depth(p, a, memo) + 1);
                }
            }
            memo[x] = d;
            d
        }
        (0..self.len()).map(|x| depth(self, x, &mut memo)).max().unwrap_or(-1)
    }

    pub fn beat_points(&self) -> Vec<(String, BeatKind)> {
        let mut out = vec![];
        for x in 0..self.len() {
            let above: Vec<usize> = (0..self.len()).filter(|&a| self.lt[x][a]).collect();
            let below: Vec<usize> = (0..self.len()).filter(|&a| self.lt[a][x]).collect();
            if !above.is_empty() && above.iter().any(|&m| above.iter().all(|&a| self.leq(m, a))) {
                out.push((self.elements[x].clone(), BeatKind::Up));
            } else if !below.is_empty()
                && below.iter().any(|&m| below.iter().all(|&a| self.leq(a, m)))
            {
                out.push((self.elements[x].clone(), BeatKind::Down));
            }
        }
        out
    }

    /// Removes beat points (first in element order each round) until none
    /// remain. The result has the same weak homotopy type.
    pub fn core(&self) -> Poset {
        let mut p = self.clone();
        loop {
            let beats = p.beat_points();
            match beats.first() {
                None => return p,
                Some((x, _)) => {
                    let rest: Vec<String> =
                        p.elements.iter().filter(|e| *e != x).cloned().collect();
                    p = p.induced(&rest).unwrap();
                }
            }
        }
    }

    /// Non-Hausdorff suspension: adds two new maximal points above all of X.
    pub fn suspension(&self) -> Poset {
        let plus = self.fresh_name("+");
        let minus = self.fresh_name("-");
        let mut elements = self.elements.clone();
        elements.push(plus.clone());
        elements.push(minus.clone());
        let mut relations: Vec<(String, String)> = self
            .covers
            .iter()
            .map(|&(a, b)| (self.elements[a].clone(), self.elements[b].clone()))
            .collect();
        for e in &self.elements {
            relations.push((e.clone(), plus.clone()));
            relations.push((e.clone(), minus.clone()));
        }
        Poset::build_owned(elements, relations).unwrap()
    }

    fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.index.contains_key(&name) {
            name.push('\'');
        }
        name
    }

    /// Non-Hausdorff join: X then Y, with every x in X below every y in Y.
    /// Clashing names on the Y side are renamed with a trailing quote.
    pub fn join(&self, other: &Poset) -> Poset {
        let mut elements = self.elements.clone();
        let mut rename = HashMap::new();
        for e in &other.elements {
            let mut name = e.clone();
            while elements.contains(&name) {
                name.push('\'');
            }
            rename.insert(e.clone(), name.clone());
            elements.push(name);
        }
        let mut relations: Vec<(String, String)> = self
            .covers
            .iter()
            .map(|&(a, b)| (self.elements[a].clone(), self.elements[b].clone()))
            .collect();
        for &(a, b) in &other.covers {
            relations.push((rename[&other.elements[a]].clone(), rename[&other.elements[b]].clone()));
        }
        for x in &self.elements {
            for y in &other.elements {
                relations.push((x.clone(), rename[y].clone()));
            }
        }
        Poset::build_owned(elements, relations).unwrap()
    }

    pub fn opposite(&self) -> Poset {
        let relations: Vec<(String, String)> = self
            .covers
            .iter()
            .map(|&(a, b)| (self.elements[b].clone(), self.elements[a].clone()))
            .collect();
        Poset::build_owned(self.elements.clone(), relations).unwrap()
    }

    /// Barycentric subdivision: elements are the nonempty chains ordered by
    /// inclusion. New element names are the chain labels.
    pub fn barycentric_subdivision(&self) -> Poset {
        let mut chains: Vec<Chain> = vec![];
        for n in 0..=self.height().max(0) {
            chains.extend(self.chains(n));
        }
        if self.is_empty() {
            chains.clear();
        }
        let elements: Vec<String> = chains.iter().map(|c| c.to_string()).collect();
        let mut relations = vec![];
        for (i, ci) in chains.iter().enumerate() {
            for (j, cj) in chains.iter().enumerate() {
                if i != j
                    && ci.members.len() < cj.members.len()
                    && ci.members.iter().all(|m| cj.contains(m))
                {
                    relations.push((elements[i].clone(), elements[j].clone()));
                }
            }
        }
        Poset::build_owned(elements, relations).unwrap()
    }

    pub fn classify_subset(&self, subset: &[String]) -> Result<SubsetWitness> {
        let mut inside = vec![false; self.len()];
        for s in subset {
            inside[self.index_of(s)?] = true;
        }
        let idx: Vec<usize> = (0..self.len()).filter(|&i| inside[i]).collect();
        let open = idx
            .iter()
            .all(|&b| (0..self.len()).all(|a| !self.lt[a][b] || inside[a]));
        let closed = idx
            .iter()
            .all(|&a| (0..self.len()).all(|b| !self.lt[a][b] || inside[b]));
        let antichain =
            idx.iter().all(|&a| idx.iter().all(|&b| a == b || !self.comparable(a, b)));
        let convex = idx.iter().all(|&a| {
            idx.iter().all(|&c| {
                (0..self.len()).all(|b| !(self.lt[a][b] && self.lt[b][c]) || inside[b])
            })
        });
        let chain = idx.iter().all(|&a| idx.iter().all(|&b| self.comparable(a, b)));
        Ok(SubsetWitness {
            subset: self.names(idx),
            open,
            closed,
            antichain,
            convex,
            chain,
        })
    }

    pub fn is_open(&self, subset: &[String]) -> Result<bool> {
        Ok(self.classify_subset(subset)?.open)
    }

    pub fn is_antichain(&self, subset: &[String]) -> Result<bool> {
        Ok(self.classify_subset(subset)?.antichain)
    }

    /// If the poset is graded, returns the degree map deg(x) = dim U_x.
    pub fn grading(&self) -> Option<HashMap<String, usize>> {
        let mut deg = HashMap::new();
        for x in &self.elements {
            let ux = self.down_set(x, false).ok()?;
            let sub = self.induced(&ux).ok()?;
            let h = sub.height();
            // homogeneous: all maximal chains of U_x have cardinality h+1;
            // every maximal chain ends at x, so check chains through minima
            let maximal_chain_cards: BTreeSet<i64> = sub.maximal_chain_cardinalities();
            if maximal_chain_cards.len() != 1 {
                return None;
            }
            deg.insert(x.clone(), h as usize);
        }
        Some(deg)
    }

    fn maximal_chain_cardinalities(&self) -> BTreeSet<i64> {
        let mut out = BTreeSet::new();
        if self.is_empty() {
            return out;
        }
        for n in 0..=self.height() {
            for c in self.chains(n) {
                let idx: Vec<usize> =
                    c.members.iter().map(|m| self.index[m]).collect();
                let extendable = (0..self.len()).any(|e| {
                    !idx.contains(&e) && idx.iter().all(|&m| self.comparable(e, m))
                });
                if !extendable {
                    out.insert(c.members.len() as i64);
                }
            }
        }
        out
    }

    pub fn is_graded(&self) -> bool {
        self.grading().is_some()
    }

    /// Connected components of the comparability graph, as element sets.
    pub fn components(&self) -> Vec<Vec<String>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(x) = stack.pop() {
                for y in 0..n {
                    if comp[y] == usize::MAX && (self.lt[x][y] || self.lt[y][x]) {
                        comp[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (0..count)
            .map(|c| self.names((0..n).filter(|&i| comp[i] == c)))
            .collect()
    }

    /// Minimal elements in element order.
    pub fn minimal_elements(&self) -> Vec<String> {
        self.names((0..self.len()).filter(|&x| (0..self.len()).all(|a| !self.lt[a][x])))
    }

    pub fn maximal_elements(&self) -> Vec<String> {
        self.names((0..self.len()).filter(|&x| (0..self.len()).all(|a| !self.lt[x][a])))
    }

    /// Complement of a subset, in element order.
    pub fn complement(&self, subset: &[String]) -> Result<Vec<String>> {
        let mut inside = vec![false; self.len()];
        for s in subset {
            inside[self.index_of(s)?] = true;
        }
        Ok(self.names((0..self.len()).filter(|&i| !inside[i])))
    }
}
