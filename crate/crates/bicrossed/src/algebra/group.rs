//! Finite groups stored as dense multiplication tables with identity at index 0.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty multiplication table")]
    Empty,
    #[error("row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({row}, {col}) = {value} is out of range")]
    OutOfRange { row: usize, col: usize, value: usize },
    #[error("element 0 is not a two-sided identity (fails at {element})")]
    NoIdentity { element: usize },
    #[error("element {element} has no two-sided inverse")]
    NotInvertible { element: usize },
    #[error("associativity fails at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}

/// A finite group on `{0, .., n-1}`; 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    n: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
}

/// Wire format `{ "order": n, "mult": [[..]] }`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub mult: Vec<Vec<usize>>,
}

impl Group {
    /// Validates a multiplication table and computes inverses.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Group, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::NotSquare { row, len: r.len(), expected: n });
            }
            if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupError::OutOfRange { row, col, value });
            }
        }
        let mult: Vec<u32> = table.iter().flatten().map(|&v| v as u32).collect();
        let at = |a: usize, b: usize| mult[a * n + b] as usize;
        for i in 0..n {
            if at(0, i) != i || at(i, 0) != i {
                return Err(GroupError::NoIdentity { element: i });
            }
        }
        let mut inv = vec![0u32; n];
        for (i, slot) in inv.iter_mut().enumerate() {
            match (0..n).find(|&j| at(i, j) == 0 && at(j, i) == 0) {
                Some(j) => *slot = j as u32,
                None => return Err(GroupError::NotInvertible { element: i }),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(Group { n, mult, inv })
    }

    pub fn from_json(j: &GroupJson) -> Result<Group, GroupError> {
        if j.order != j.mult.len() {
            return Err(GroupError::NotSquare { row: 0, len: j.mult.len(), expected: j.order });
        }
        Group::from_table(&j.mult)
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson { order: self.n, mult: self.table() }
    }

    pub fn trivial() -> Group {
        Group { n: 1, mult: vec![0], inv: vec![0] }
    }

    /// Integers mod `n` under addition; element `i` is the residue `i`.
    pub fn cyclic(n: usize) -> Group {
        assert!(n >= 1, "cyclic group needs n >= 1");
        let mult = (0..n)
            .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
            .collect();
        let inv = (0..n).map(|a| ((n - a) % n) as u32).collect();
        Group { n, mult, inv }
    }

    /// `A x B` with the pair `(a, b)` stored at index `a * |B| + b`.
    pub fn direct_product(a: &Group, b: &Group) -> Group {
        let (na, nb) = (a.n, b.n);
        let n = na * nb;
        let mut mult = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let (a1, b1) = (i / nb, i % nb);
                let (a2, b2) = (j / nb, j % nb);
                mult.push((a.mul(a1, a2) * nb + b.mul(b1, b2)) as u32);
            }
        }
        let inv = (0..n)
            .map(|i| (a.inv(i / nb) * nb + b.inv(i % nb)) as u32)
            .collect();
        Group { n, mult, inv }
    }

    /// The symmetric group on `k` points together with its elements as
    /// permutations (image lists). The identity comes first, the rest in
    /// lexicographic order. Products compose right to left: `(s t)(i) = s(t(i))`.
    pub fn symmetric(k: usize) -> (Group, Vec<Vec<usize>>) {
        let mut perms = Vec::new();
        let mut cur: Vec<usize> = (0..k).collect();
        loop {
            perms.push(cur.clone());
            if !next_permutation(&mut cur) {
                break;
            }
        }
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&t.iter().map(|&i| s[i]).collect()))
                    .collect()
            })
            .collect();
        (Group::from_table(&table).expect("symmetric group table"), perms)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Closed under products and contains the identity (finite, so a subgroup).
    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let mut mark = vec![false; self.n];
        for &e in elems {
            if e >= self.n {
                return false;
            }
            mark[e] = true;
        }
        mark[0] && elems.iter().all(|&a| elems.iter().all(|&b| mark[self.mul(a, b)]))
    }

    /// Subgroup generated by `gens`, in order of discovery (identity first).
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut out = vec![0];
        seen[0] = true;
        let mut i = 0;
        while i < out.len() {
            let a = out[i];
            for &g in gens {
                let b = self.mul(a, g);
                if !seen[b] {
                    seen[b] = true;
                    out.push(b);
                }
            }
            i += 1;
        }
        out
    }

    /// A small generating set, picked greedily.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.n];
        span[0] = true;
        for a in 1..self.n {
            if !span[a] {
                gens.push(a);
                for e in self.generated(&gens) {
                    span[e] = true;
                }
            }
        }
        gens
    }

    /// The group induced on a subgroup, re-indexed so that `elems[i]` becomes `i`.
    /// The caller guarantees `elems` is a subgroup listing the identity first.
    pub fn restrict(&self, elems: &[usize]) -> Group {
        let pos = |v: usize| elems.iter().position(|&e| e == v).expect("closed subset");
        let table: Vec<Vec<usize>> = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| pos(self.mul(a, b))).collect())
            .collect();
        Group::from_table(&table).expect("restriction of a group to a subgroup")
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
