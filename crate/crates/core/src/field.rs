//! Linear algebra over a prime field F_p.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
}

impl Field {
    pub fn new(p: u32) -> Result<Self> {
        let prime = p >= 2 && (2..).take_while(|d: &u64| d * d <= p as u64).all(|d| p as u64 % d != 0);
        if !prime {
            return Err(Error::NotPrime(p));
        }
        Ok(Field { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn inv(&self, a: u32) -> u32 {
        // a^(p-2)
        let (mut base, mut e, mut acc) = (a as u64, self.p as u64 - 2, 1u64);
        let p = self.p as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc as u32
    }

    /// Scales `v` so its first nonzero entry is 1. Returns false for the zero vector.
    pub fn normalize(&self, v: &mut [u32]) -> bool {
        let Some(&lead) = v.iter().find(|x| **x != 0) else {
            return false;
        };
        let s = self.inv(lead);
        for x in v.iter_mut() {
            *x = self.mul(*x, s);
        }
        true
    }

    /// All nonzero vectors of length `n` with leading entry 1, in lexicographic order.
    pub fn normalized_vectors(&self, n: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for lead in 0..n {
            let free = n - lead - 1;
            let count = (self.p as u64).pow(free as u32);
            for k in 0..count {
                let mut v = vec![0; n];
                v[lead] = 1;
                let mut k = k;
                for slot in v[lead + 1..].iter_mut().rev() {
                    *slot = (k % self.p as u64) as u32;
                    k /= self.p as u64;
                }
                out.push(v);
            }
        }
        out
    }
}

/// Dense row-major matrix with entries in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Grid(format!("matrix data has {} entries, expected {rows}x{cols}", data.len())));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        self.data[i * self.cols + j] = x;
    }

    pub fn apply(&self, f: &Field, v: &[u32]) -> Vec<u32> {
        (0..self.rows)
            .map(|i| (0..self.cols).fold(0, |acc, j| f.add(acc, f.mul(self.get(i, j), v[j]))))
            .collect()
    }

    /// `self * other`.
    pub fn mul(&self, f: &Field, other: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let x = (0..self.cols).fold(0, |acc, k| f.add(acc, f.mul(self.get(i, k), other.get(k, j))));
                out.set(i, j, x);
            }
        }
        out
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|j| (0..self.rows).map(|i| self.get(i, j)).collect()).collect()
    }

    pub fn rank(&self, f: &Field) -> usize {
        let mut s = Subspace::new(self.rows);
        for c in self.columns() {
            s.insert(f, c);
        }
        s.rank()
    }
}

/// Subspace of F_p^n kept in reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient).map(|i| (0..ambient).map(|j| u32::from(i == j)).collect()).collect();
        Subspace { ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Residue of `v` after elimination against the basis.
    pub fn residue(&self, f: &Field, v: &[u32]) -> Vec<u32> {
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let a = v[c];
            if a != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(a, *r));
                }
            }
        }
        v
    }

    pub fn contains(&self, f: &Field, v: &[u32]) -> bool {
        self.residue(f, v).iter().all(|x| *x == 0)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, f: &Field, v: Vec<u32>) -> bool {
        let mut r = self.residue(f, &v);
        if !f.normalize(&mut r) {
            return false;
        }
        let c = r.iter().position(|x| *x != 0).unwrap();
        for row in &mut self.rows {
            let a = row[c];
            if a != 0 {
                for (x, y) in row.iter_mut().zip(&r) {
                    *x = f.sub(*x, f.mul(a, *y));
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < c);
        self.rows.insert(at, r);
        self.pivots.insert(at, c);
        true
    }

    pub fn is_subspace_of(&self, f: &Field, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(f, r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(Field::new(2).is_ok());
        assert!(Field::new(7).is_ok());
        assert_eq!(Field::new(9), Err(Error::NotPrime(9)));
        assert_eq!(Field::new(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn inverses_mod_seven() {
        let f = Field::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn vector_enumeration() {
        let f2 = Field::new(2).unwrap();
        assert_eq!(f2.normalized_vectors(2), vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
        let f3 = Field::new(3).unwrap();
        assert_eq!(f3.normalized_vectors(2).len(), 4);
    }

    #[test]
    fn rank_and_span() {
        let f = Field::new(2).unwrap();
        let m = Matrix::new(2, 3, vec![1, 1, 0, 0, 1, 1]).unwrap();
        assert_eq!(m.rank(&f), 2);
        let mut s = Subspace::new(3);
        assert!(s.insert(&f, vec![1, 1, 0]));
        assert!(s.insert(&f, vec![0, 1, 1]));
        assert!(!s.insert(&f, vec![1, 0, 1]));
        assert!(s.contains(&f, &[1, 0, 1]));
        assert!(!s.contains(&f, &[1, 0, 0]));
    }

    #[test]
    fn products() {
        let f = Field::new(3).unwrap();
        let a = Matrix::new(2, 2, vec![1, 2, 0, 1]).unwrap();
        let b = a.mul(&f, &a);
        assert_eq!(b.data(), &[1, 1, 0, 1]);
        assert_eq!(a.apply(&f, &[1, 1]), vec![0, 1]);
    }
}
