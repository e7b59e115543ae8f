//! Exact integer matrix algebra: Smith normal form, kernels, images,
//! cokernels and linear solving over the integers.
//!
//! Everything here is arbitrary precision; no floating point is used
//! anywhere in the crate.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(*v));
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn from_columns(rows: usize, cols: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "hstack: row mismatch");
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Rows of `self` restricted to the given index set.
    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(idx.len(), self.cols);
        for (i, &r) in idx.iter().enumerate() {
            for j in 0..self.cols {
                m.set(i, j, self.get(r, j).clone());
            }
        }
        m
    }

    pub fn select_cols(&self, idx: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.set(i, j, self.get(i, c).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "mul: dimension mismatch");
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = m.get(i, j) + a * other.get(k, j);
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j).clone();
            self.set(r, j, v);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, c).clone();
            self.set(i, c, v);
        }
    }

    /// row_i += c * row_j
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        for k in 0..self.cols {
            let v = self.get(i, k) + c * self.get(j, k);
            self.set(i, k, v);
        }
    }

    /// col_i += c * col_j
    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        for k in 0..self.rows {
            let v = self.get(k, i) + c * self.get(k, j);
            self.set(k, i, v);
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// M = U * S * V with U, V unimodular and S diagonal, d_1 | d_2 | ... , d_i >= 0.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    u_inv: IntMatrix,
    v_inv: IntMatrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        let n = self.s.rows().min(self.s.cols());
        (0..n).filter(|&i| !self.s.get(i, i).is_zero()).count()
    }

    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n)
            .map(|i| self.s.get(i, i).clone())
            .filter(|d| !d.is_zero())
            .collect()
    }

    pub fn u_inv(&self) -> &IntMatrix {
        &self.u_inv
    }

    pub fn v_inv(&self) -> &IntMatrix {
        &self.v_inv
    }
}

/// Smith normal form with a deterministic pivot rule: the entry of smallest
/// nonzero absolute value, ties broken by row then column index.
pub fn smith(m: &IntMatrix) -> SmithDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut u_inv = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    // Row op S <- E*S keeps M = (U E^-1)(E S)V; column ops are symmetric.
    let mut t = 0;
    while t < rows && t < cols {
        let Some((pi, pj)) = pivot(&s, t) else { break };
        if pi != t {
            s.swap_rows(pi, t);
            u.swap_cols(pi, t);
            u_inv.swap_rows(pi, t);
        }
        if pj != t {
            s.swap_cols(pj, t);
            v.swap_rows(pj, t);
            v_inv.swap_cols(pj, t);
        }
        loop {
            let mut dirty = false;
            // clear column t below the pivot
            let mut i = t + 1;
            while i < rows {
                if s.get(i, t).is_zero() {
                    i += 1;
                    continue;
                }
                let q = s.get(i, t) / s.get(t, t);
                if !q.is_zero() {
                    let c = -q;
                    s.add_row(i, t, &c);
                    u.add_col(t, i, &neg(&c)); // U E^-1: col_t -= c*col_i => col_t += (-c)*col_i
                    u_inv.add_row(i, t, &c);
                }
                if !s.get(i, t).is_zero() {
                    // remainder is strictly smaller; promote it to pivot
                    s.swap_rows(i, t);
                    u.swap_cols(i, t);
                    u_inv.swap_rows(i, t);
                    dirty = true;
                } else {
                    i += 1;
                }
            }
            // clear row t to the right of the pivot
            let mut j = t + 1;
            while j < cols {
                if s.get(t, j).is_zero() {
                    j += 1;
                    continue;
                }
                let q = s.get(t, j) / s.get(t, t);
                if !q.is_zero() {
                    let c = -q;
                    s.add_col(j, t, &c);
                    v.add_row(t, j, &neg(&c)); // F^-1 V: row_t -= c*row_j
                    v_inv.add_col(j, t, &c);
                }
                if !s.get(t, j).is_zero() {
                    s.swap_cols(j, t);
                    v.swap_rows(j, t);
                    v_inv.swap_cols(j, t);
                    dirty = true;
                } else {
                    j += 1;
                }
            }
            if dirty || (t + 1..rows).any(|i| !s.get(i, t).is_zero()) {
                continue;
            }
            // enforce divisibility of the remaining block by the pivot
            let d = s.get(t, t).clone();
            let mut fixed = true;
            'outer: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(s.get(i, j) % &d).is_zero() {
                        let one = BigInt::one();
                        s.add_row(t, i, &one);
                        let minus = -&one;
                        u.add_col(i, t, &minus);
                        u_inv.add_row(t, i, &one);
                        fixed = false;
                        break 'outer;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_col(t);
            u_inv.negate_row(t);
        }
        t += 1;
    }
    SmithDecomposition { u, s, v, u_inv, v_inv }
}

fn neg(c: &BigInt) -> BigInt {
    -c.clone()
}

fn pivot(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let a = s.get(i, j).abs();
            if a.is_zero() {
                continue;
            }
            match &best {
                Some((b, _, _)) if *b <= a => {}
                _ => best = Some((a, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Columns form a Z-basis of { x : M x = 0 }.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let d = smith(m);
    let r = d.rank();
    let idx: Vec<usize> = (r..m.cols()).collect();
    d.v_inv().select_cols(&idx)
}

/// Columns form a Z-basis of the column span of M.
pub fn image_basis(m: &IntMatrix) -> IntMatrix {
    let d = smith(m);
    let r = d.rank();
    let mut cols = Vec::with_capacity(r);
    for i in 0..r {
        let di = d.s.get(i, i).clone();
        let col: Vec<BigInt> = d.u.column(i).into_iter().map(|x| x * &di).collect();
        cols.push(col);
    }
    IntMatrix::from_columns(m.rows(), &cols)
}

pub fn rank(m: &IntMatrix) -> usize {
    smith(m).rank()
}

/// Finitely generated abelian group in invariant factor form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup { rank: 0, torsion: vec![] }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { rank, torsion: vec![] }
    }

    pub fn cyclic(n: u64) -> Self {
        if n == 0 {
            Self::free(1)
        } else if n == 1 {
            Self::trivial()
        } else {
            AbelianGroup { rank: 0, torsion: vec![BigInt::from(n)] }
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Product of the torsion orders (1 for torsion-free groups).
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product::<BigInt>().max(BigInt::one())
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        // renormalize the combined torsion list to invariant factor form
        let mut factors: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        let n = factors.len();
        if n > 1 {
            // Smith of a diagonal matrix gives the canonical chain.
            let mut diag = IntMatrix::zeros(n, n);
            for (i, f) in factors.iter().enumerate() {
                diag.set(i, i, f.clone());
            }
            factors = smith(&diag)
                .invariant_factors()
                .into_iter()
                .filter(|d| !d.is_one())
                .collect();
        }
        AbelianGroup { rank: self.rank + other.rank, torsion: factors }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = vec![];
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{}", r)),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{}", t));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Cokernel Z^rows / colspan(M).
pub fn cokernel(m: &IntMatrix) -> AbelianGroup {
    let d = smith(m);
    let r = d.rank();
    let torsion: Vec<BigInt> =
        d.invariant_factors().into_iter().filter(|x| !x.is_one()).collect();
    AbelianGroup { rank: m.rows() - r, torsion }
}

/// Exact solution of M x = b over Z, if one exists.
pub fn solve(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let d = smith(m);
    solve_with(&d, m.cols(), b)
}

fn solve_with(d: &SmithDecomposition, cols: usize, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let c = d.u_inv().mul_vec(b);
    let mut y = vec![BigInt::zero(); cols];
    let r = d.rank();
    for (i, ci) in c.iter().enumerate() {
        if i < r {
            let di = d.s.get(i, i);
            if !(ci % di).is_zero() {
                return None;
            }
            y[i] = ci / di;
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(d.v_inv().mul_vec(&y))
}

/// Columnwise solve M X = B; None if any column has no integer solution.
pub fn solve_matrix(m: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    assert_eq!(m.rows(), b.rows());
    let d = smith(m);
    let mut cols = Vec::with_capacity(b.cols());
    for j in 0..b.cols() {
        cols.push(solve_with(&d, m.cols(), &b.column(j))?);
    }
    Some(IntMatrix::from_columns(m.cols(), &cols))
}

/// Coordinates of v in the column lattice of `basis`, if v belongs to it.
pub fn member_of_subgroup(v: &[BigInt], basis: &IntMatrix) -> Option<Vec<BigInt>> {
    solve(basis, v)
}

/// One generator of a presented homology group, with its representative in
/// ambient coordinates. `order` is None for a free generator.
#[derive(Clone, Debug)]
pub struct HomologyGenerator {
    pub order: Option<BigInt>,
    pub rep: Vec<BigInt>,
}

#[derive(Clone, Debug)]
pub struct PresentedHomology {
    pub group: AbelianGroup,
    pub gens: Vec<HomologyGenerator>,
}

/// Homology of Z^g / col(rel_mid) at the middle of
///
///   . --d_in--> Z^g / col(rel_mid) --d_out--> Z^h / col(rel_out)
///
/// i.e. ker(induced d_out) / (im(d_in) + relations). The maps are given on
/// generators; d_out must carry relations of the middle group into
/// col(rel_out) for the quotient to make sense (not re-checked here).
pub fn presented_homology(
    d_out: &IntMatrix,
    rel_out: &IntMatrix,
    d_in: &IntMatrix,
    rel_mid: &IntMatrix,
) -> PresentedHomology {
    let g = d_out.cols();
    assert_eq!(d_in.rows(), g);
    assert_eq!(rel_mid.rows(), g);

    // lattice L = { v : d_out v lies in col(rel_out) }
    let lattice = if d_out.rows() == 0 {
        IntMatrix::identity(g)
    } else {
        let stacked = d_out.hstack(rel_out);
        let k = kernel_basis(&stacked);
        let first: Vec<usize> = (0..g).collect();
        let gens = k.select_rows(&first);
        image_basis(&gens)
    };

    let denom = d_in.hstack(rel_mid);
    let y = solve_matrix(&lattice, &denom)
        .expect("boundaries and relations must lie in the cycle lattice");
    let d = smith(&y);
    let r = d.rank();
    let mut gens = Vec::new();
    let mut torsion = Vec::new();
    for i in 0..lattice.cols() {
        let order = if i < r {
            let di = d.s.get(i, i).clone();
            if di.is_one() {
                continue;
            }
            torsion.push(di.clone());
            Some(di)
        } else {
            None
        };
        let rep = lattice.mul_vec(&d.u.column(i));
        gens.push(HomologyGenerator { order, rep });
    }
    let rank = lattice.cols() - r;
    PresentedHomology { group: AbelianGroup { rank, torsion }, gens }
}
