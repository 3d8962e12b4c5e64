//! Finite groups given by Cayley tables.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A finite group on `0..order`; `table[a * order + b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl Group {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_cayley(rows: &[Vec<usize>]) -> Result<Group> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if let Some(r) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::NotAGroup(format!("row {r} has the wrong length")));
        }
        let table: Vec<usize> = rows.iter().flatten().copied().collect();
        if let Some(i) = table.iter().position(|&x| x >= n) {
            return Err(Error::NotAGroup(format!("entry ({}, {}) out of range", i / n, i % n)));
        }
        let mul = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAGroup(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
            inverses.push(inv);
        }
        Ok(Group { order: n, table, identity, inverses })
    }

    pub fn cyclic(n: usize) -> Group {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Group::from_cayley(&rows).expect("cyclic group")
    }

    /// Group generated by permutations of `0..degree`, elements listed in
    /// lexicographic order of their images (so the identity comes first).
    pub fn from_permutations(generators: &[Vec<usize>]) -> Group {
        let degree = generators[0].len();
        let id: Vec<usize> = (0..degree).collect();
        let mut elems: BTreeSet<Vec<usize>> = BTreeSet::from([id.clone()]);
        let mut frontier = vec![id];
        while let Some(g) = frontier.pop() {
            for s in generators {
                let h: Vec<usize> = (0..degree).map(|i| s[g[i]]).collect();
                if elems.insert(h.clone()) {
                    frontier.push(h);
                }
            }
        }
        let elems: Vec<Vec<usize>> = elems.into_iter().collect();
        let index = |p: &Vec<usize>| elems.iter().position(|e| e == p).expect("closed");
        let rows: Vec<Vec<usize>> = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| index(&(0..degree).map(|i| a[b[i]]).collect()))
                    .collect()
            })
            .collect();
        Group::from_cayley(&rows).expect("permutation group")
    }

    pub fn symmetric3() -> Group {
        Group::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]])
    }

    /// Symmetries of a square acting on its vertices.
    pub fn dihedral4() -> Group {
        Group::from_permutations(&[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn cayley(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// Conjugacy classes, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for a in 0..self.order {
            if seen[a] {
                continue;
            }
            let class: BTreeSet<usize> = (0..self.order)
                .map(|g| self.mul(self.mul(g, a), self.inverse(g)))
                .collect();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }
}
