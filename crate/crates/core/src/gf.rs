//! GF(2) and GF(4) arithmetic, cut matrices, and rank by Gaussian elimination.
//!
//! A GF(4) element is stored as two bits `b0 + b1·a` over the basis `{1, a}`.
//! From `1 + a + a² = 0` in characteristic two we get `a² = a + 1`, so
//! `0 = 00`, `1 = 01`, `a = 10`, `a² = 11`, and addition is bitwise XOR.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::digraph::{Adjacency, Digraph, UndirectedGraph};
use crate::error::{Error, Result};
use crate::set::VertexSet;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[repr(u8)]
pub enum Gf4 {
    #[serde(rename = "0")]
    Zero = 0,
    #[serde(rename = "1")]
    One = 1,
    #[serde(rename = "a")]
    A = 2,
    #[serde(rename = "a2")]
    A2 = 3,
}

const fn poly_mul(x: u8, y: u8) -> u8 {
    // (x0 + x1 a)(y0 + y1 a) = x0y0 + (x0y1 + x1y0) a + x1y1 a², a² = a + 1
    let (x0, x1, y0, y1) = (x & 1, x >> 1, y & 1, y >> 1);
    let c0 = x0 & y0;
    let c1 = (x0 & y1) ^ (x1 & y0);
    let c2 = x1 & y1;
    (c0 ^ c2) | ((c1 ^ c2) << 1)
}

const fn build_tables() -> ([[u8; 4]; 4], [[u8; 4]; 4]) {
    let mut add = [[0u8; 4]; 4];
    let mut mul = [[0u8; 4]; 4];
    let mut x = 0;
    while x < 4 {
        let mut y = 0;
        while y < 4 {
            add[x][y] = (x ^ y) as u8;
            mul[x][y] = poly_mul(x as u8, y as u8);
            y += 1;
        }
        x += 1;
    }
    (add, mul)
}

const TABLES: ([[u8; 4]; 4], [[u8; 4]; 4]) = build_tables();
const ADD: [[u8; 4]; 4] = TABLES.0;
const MUL: [[u8; 4]; 4] = TABLES.1;

impl Gf4 {
    pub const ALL: [Gf4; 4] = [Gf4::Zero, Gf4::One, Gf4::A, Gf4::A2];

    #[inline]
    pub const fn from_bits(b: u8) -> Gf4 {
        match b & 3 {
            0 => Gf4::Zero,
            1 => Gf4::One,
            2 => Gf4::A,
            _ => Gf4::A2,
        }
    }

    #[inline]
    pub const fn bits(self) -> u8 {
        self as u8
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self == Gf4::Zero
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(self) -> Option<Gf4> {
        match self {
            Gf4::Zero => None,
            Gf4::One => Some(Gf4::One),
            Gf4::A => Some(Gf4::A2),
            Gf4::A2 => Some(Gf4::A),
        }
    }
}

pub fn gf4_add(x: Gf4, y: Gf4) -> Gf4 {
    Gf4::from_bits(ADD[x as usize][y as usize])
}

pub fn gf4_mul(x: Gf4, y: Gf4) -> Gf4 {
    Gf4::from_bits(MUL[x as usize][y as usize])
}

impl std::ops::Add for Gf4 {
    type Output = Gf4;
    fn add(self, rhs: Gf4) -> Gf4 {
        gf4_add(self, rhs)
    }
}

impl std::ops::Mul for Gf4 {
    type Output = Gf4;
    fn mul(self, rhs: Gf4) -> Gf4 {
        gf4_mul(self, rhs)
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gf4::Zero => "0",
            Gf4::One => "1",
            Gf4::A => "a",
            Gf4::A2 => "a2",
        })
    }
}

/// Dense matrix over GF(4).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gf4Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Gf4>,
}

impl Gf4Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf4Matrix {
            rows,
            cols,
            entries: vec![Gf4::Zero; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Gf4>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::input("GF(4) matrix rows have different lengths"));
        }
        Ok(Gf4Matrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Gf4Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Gf4::One);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Gf4 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: Gf4) {
        self.entries[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Gf4] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Rank by Gaussian elimination, pivoting on the first nonzero entry.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Gf4>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = m[rank][col].inverse().expect("pivot is nonzero");
            for x in m[rank].iter_mut() {
                *x = *x * inv;
            }
            for r in 0..m.len() {
                if r != rank && !m[r][col].is_zero() {
                    let f = m[r][col];
                    for c in 0..self.cols {
                        let delta = f * m[rank][c];
                        m[r][c] = m[r][c] + delta;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

impl fmt::Debug for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|r| self.row(r)))
            .finish()
    }
}

pub fn gf4_rank(m: &Gf4Matrix) -> usize {
    m.rank()
}

/// Dense 0/1 matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<bool>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            rows,
            cols,
            entries: vec![false; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<bool>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::input("GF(2) matrix rows have different lengths"));
        }
        Ok(Gf2Matrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: bool) {
        self.entries[r * self.cols + c] = x;
    }

    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<bool>> = (0..self.rows)
            .map(|r| self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..m.len()).find(|&r| m[r][col]) else {
                continue;
            };
            m.swap(rank, p);
            for r in 0..m.len() {
                if r != rank && m[r][col] {
                    for c in 0..self.cols {
                        let x = m[rank][c];
                        m[r][c] ^= x;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|r| {
                (0..self.cols)
                    .map(|c| self.get(r, c) as u8)
                    .collect::<Vec<_>>()
            }))
            .finish()
    }
}

pub fn gf2_rank(m: &Gf2Matrix) -> usize {
    m.rank()
}

fn check_cut(n: usize, a: VertexSet, b: VertexSet) -> Result<()> {
    if !a.is_disjoint(b) {
        return Err(Error::input(format!("cut sides overlap: {a:?} and {b:?}")));
    }
    if !a.union(b).is_subset(VertexSet::full(n)) {
        return Err(Error::input("cut side contains a vertex out of range"));
    }
    Ok(())
}

/// The GF(4) entry encoding the arcs between `u` and `v`.
#[inline]
pub fn arc_entry(g: &Digraph, u: usize, v: usize) -> Gf4 {
    match (g.has_arc(u, v), g.has_arc(v, u)) {
        (false, false) => Gf4::Zero,
        (true, false) => Gf4::A,
        (false, true) => Gf4::A2,
        (true, true) => Gf4::One,
    }
}

/// `M_A^B`: rows are the vertices of `A`, columns those of `B`, both ascending.
pub fn cut_matrix_gf4(g: &Digraph, a: VertexSet, b: VertexSet) -> Result<Gf4Matrix> {
    check_cut(g.order(), a, b)?;
    let cols = b.to_vec();
    let mut m = Gf4Matrix::zeros(a.len(), cols.len());
    for (i, u) in a.iter().enumerate() {
        for (j, &v) in cols.iter().enumerate() {
            m.set(i, j, arc_entry(g, u, v));
        }
    }
    Ok(m)
}

pub fn cut_matrix_gf2(g: &UndirectedGraph, a: VertexSet, b: VertexSet) -> Result<Gf2Matrix> {
    check_cut(g.order(), a, b)?;
    let cols = b.to_vec();
    let mut m = Gf2Matrix::zeros(a.len(), cols.len());
    for (i, u) in a.iter().enumerate() {
        for (j, &v) in cols.iter().enumerate() {
            m.set(i, j, g.has_edge(u, v));
        }
    }
    Ok(m)
}

/// A GF(4) row of length ≤ 64 as two bit planes (`lo` = coefficient of 1,
/// `hi` = coefficient of `a`).
#[derive(Clone, Copy, PartialEq, Eq)]
struct PackedRow {
    lo: u64,
    hi: u64,
}

impl PackedRow {
    #[inline]
    fn is_zero(self) -> bool {
        self.lo | self.hi == 0
    }

    #[inline]
    fn entry(self, c: u32) -> Gf4 {
        Gf4::from_bits(((self.lo >> c & 1) | (self.hi >> c & 1) << 1) as u8)
    }

    #[inline]
    fn scale(self, x: Gf4) -> PackedRow {
        let PackedRow { lo, hi } = self;
        match x {
            Gf4::Zero => PackedRow { lo: 0, hi: 0 },
            Gf4::One => self,
            // (b0 + b1 a)·a = b1 + (b0 + b1) a
            Gf4::A => PackedRow { lo: hi, hi: lo ^ hi },
            Gf4::A2 => PackedRow { lo: lo ^ hi, hi: lo },
        }
    }

    #[inline]
    fn add(self, o: PackedRow) -> PackedRow {
        PackedRow {
            lo: self.lo ^ o.lo,
            hi: self.hi ^ o.hi,
        }
    }
}

fn packed_gf4_rank(rows: impl Iterator<Item = PackedRow>) -> usize {
    // pivots[i] has a 1 in column cols[i] and zeros in all earlier pivot columns
    let mut pivots: Vec<(u32, PackedRow)> = Vec::new();
    for mut r in rows {
        for &(c, p) in &pivots {
            let e = r.entry(c);
            if !e.is_zero() {
                r = r.add(p.scale(e));
            }
        }
        if r.is_zero() {
            continue;
        }
        let c = (r.lo | r.hi).trailing_zeros();
        let inv = r.entry(c).inverse().expect("nonzero entry");
        pivots.push((c, r.scale(inv)));
    }
    pivots.len()
}

/// `rank(M_A^B)` over GF(4) without materialising the matrix.
pub fn cut_rank_gf4(g: &Digraph, a: VertexSet, b: VertexSet) -> usize {
    packed_gf4_rank(a.iter().map(|u| {
        let out = g.out_neighbours(u).intersection(b).0;
        let inn = g.in_neighbours(u).intersection(b).0;
        // both arcs -> 1 (01), out only -> a (10), in only -> a² (11)
        PackedRow { lo: inn, hi: out ^ inn }
    }))
}

/// `rank(N_A^B)` over GF(2).
pub fn cut_rank_gf2<G: Adjacency>(g: &G, a: VertexSet, b: VertexSet) -> usize {
    let mut pivots: Vec<u64> = Vec::new();
    for u in a.iter() {
        let mut r = g.out_set(u).intersection(b).0;
        for &p in &pivots {
            let lead = 1u64 << p.trailing_zeros();
            if r & lead != 0 {
                r ^= p;
            }
        }
        if r != 0 {
            // keep pivots reduced so the leading bits stay distinct
            let lead = 1u64 << r.trailing_zeros();
            for p in pivots.iter_mut() {
                if *p & lead != 0 {
                    *p ^= r;
                }
            }
            pivots.push(r);
        }
    }
    pivots.len()
}
