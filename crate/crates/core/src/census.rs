//! Exhaustive enumeration of connected diagrams of a given size.
//!
//! Each pointed diagram has exactly one labelling in which arcs are
//! numbered in breadth-first discovery order from the base (generators
//! tried as rotation, inverse rotation, involution). The backtracking
//! search builds exactly those labellings, so every pointed class is
//! produced once without touching the `n!`-sized labelled space. Unpointed
//! classes are then deduplicated by canonical code.
//!
//! This module does not use any generating series; it is the ground truth
//! the series are checked against.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::bigseries::factorial;
use crate::diagram::{canonical_code, is_normal, CanonicalCode, Diagram};
use crate::error::{Error, Result};

/// Largest size accepted for trivalent diagrams.
pub const TRIVALENT_CAP: usize = 16;
/// Largest size accepted for general diagrams (arbitrary rotation).
pub const GENERAL_CAP: usize = 8;
/// Largest size accepted by the naive labelled enumeration.
pub const NAIVE_CAP: usize = 7;

/// Counts of connected diagrams of one size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub size: usize,
    /// Connected structures on a fixed labelled arc set.
    pub labelled_connected: BigInt,
    /// Classes of pointed diagrams: subgroups of index `size`.
    pub pointed_classes: BigInt,
    /// Classes of unpointed diagrams: conjugacy classes of such subgroups.
    pub unpointed_classes: BigInt,
    /// One canonical representative per unpointed class, sorted by code.
    pub class_representatives: Vec<Diagram>,
}

/// Partially built structure: `None` marks an undefined image.
struct Partial {
    n: usize,
    trivalent: bool,
    rot: Vec<Option<usize>>,
    rot_inv: Vec<Option<usize>>,
    inv: Vec<Option<usize>>,
    /// Number of labels handed out so far.
    next: usize,
}

impl Partial {
    fn new(n: usize, trivalent: bool) -> Self {
        Partial {
            n,
            trivalent,
            rot: vec![None; n],
            rot_inv: vec![None; n],
            inv: vec![None; n],
            next: 1,
        }
    }

    /// Candidate images: every labelled arc accepted by `free`, then a fresh
    /// label when one is left.
    fn candidates(&self, free: impl Fn(usize) -> bool) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.next).filter(|&x| free(x)).collect();
        if self.next < self.n {
            out.push(self.next);
        }
        out
    }

    /// Claims `x` as a label, handing out a fresh one when `x == next`.
    fn claim(&mut self, x: usize) -> bool {
        if x == self.next {
            self.next += 1;
            true
        } else {
            false
        }
    }

    fn unclaim(&mut self, fresh: bool) {
        if fresh {
            self.next -= 1;
        }
    }

    fn set_rot(&mut self, a: usize, b: usize) {
        self.rot[a] = Some(b);
        self.rot_inv[b] = Some(a);
    }

    fn clear_rot(&mut self, a: usize, b: usize) {
        self.rot[a] = None;
        self.rot_inv[b] = None;
    }

    fn finish(&self) -> Diagram {
        let rot = self.rot.iter().map(|x| x.expect("complete")).collect();
        let inv = self.inv.iter().map(|x| x.expect("complete")).collect();
        Diagram::new(rot, inv, self.trivalent).expect("search builds valid diagrams")
    }

    /// Processes arc `cur`: rotation images first, then the involution.
    fn extend(&mut self, cur: usize, emit: &mut dyn FnMut(&Partial)) {
        if cur == self.next {
            if cur == self.n {
                emit(self);
            }
            return;
        }
        if self.rot[cur].is_some() && self.rot_inv[cur].is_some() {
            self.extend_inv(cur, emit);
        } else if self.trivalent {
            self.extend_rot_trivalent(cur, emit);
        } else {
            self.extend_rot_general(cur, emit);
        }
    }

    fn extend_rot_trivalent(&mut self, cur: usize, emit: &mut dyn FnMut(&Partial)) {
        // rotation orbits are created whole, so rot undefined <=> free
        self.set_rot(cur, cur);
        self.extend_inv(cur, emit);
        self.clear_rot(cur, cur);

        for b in self.candidates(|x| x != cur && self.rot[x].is_none()) {
            let fresh_b = self.claim(b);
            for c in self.candidates(|x| x != cur && x != b && self.rot[x].is_none()) {
                let fresh_c = self.claim(c);
                self.set_rot(cur, b);
                self.set_rot(b, c);
                self.set_rot(c, cur);
                self.extend_inv(cur, emit);
                self.clear_rot(cur, b);
                self.clear_rot(b, c);
                self.clear_rot(c, cur);
                self.unclaim(fresh_c);
            }
            self.unclaim(fresh_b);
        }
    }

    fn extend_rot_general(&mut self, cur: usize, emit: &mut dyn FnMut(&Partial)) {
        if self.rot[cur].is_none() {
            for x in self.candidates(|x| self.rot_inv[x].is_none()) {
                let fresh = self.claim(x);
                self.set_rot(cur, x);
                self.extend_rot_inverse(cur, emit);
                self.clear_rot(cur, x);
                self.unclaim(fresh);
            }
        } else {
            self.extend_rot_inverse(cur, emit);
        }
    }

    fn extend_rot_inverse(&mut self, cur: usize, emit: &mut dyn FnMut(&Partial)) {
        if self.rot_inv[cur].is_some() {
            return self.extend_inv(cur, emit);
        }
        for y in self.candidates(|y| self.rot[y].is_none()) {
            let fresh = self.claim(y);
            self.set_rot(y, cur);
            self.extend_inv(cur, emit);
            self.clear_rot(y, cur);
            self.unclaim(fresh);
        }
    }

    fn extend_inv(&mut self, cur: usize, emit: &mut dyn FnMut(&Partial)) {
        if self.inv[cur].is_some() {
            return self.extend(cur + 1, emit);
        }
        self.inv[cur] = Some(cur);
        self.extend(cur + 1, emit);
        self.inv[cur] = None;
        for x in self.candidates(|x| x != cur && self.inv[x].is_none()) {
            let fresh = self.claim(x);
            self.inv[cur] = Some(x);
            self.inv[x] = Some(cur);
            self.extend(cur + 1, emit);
            self.inv[cur] = None;
            self.inv[x] = None;
            self.unclaim(fresh);
        }
    }
}

fn check_cap(n: usize, trivalent: bool) -> Result<()> {
    let cap = if trivalent {
        TRIVALENT_CAP
    } else {
        GENERAL_CAP
    };
    if n == 0 {
        return Err(Error::Domain("diagram size must be at least 1".to_string()));
    }
    if n > cap {
        return Err(Error::Resource {
            what: "census size",
            requested: n,
            cap,
        });
    }
    Ok(())
}

/// Calls `visit` on every connected pointed diagram of size `n` (base arc
/// 0), each pointed class exactly once.
pub fn for_each_pointed(n: usize, trivalent: bool, mut visit: impl FnMut(&Diagram)) -> Result<()> {
    check_cap(n, trivalent)?;
    let mut partial = Partial::new(n, trivalent);
    partial.extend(0, &mut |p| visit(&p.finish()));
    Ok(())
}

/// Every connected pointed diagram of size `n`, base arc 0.
pub fn enumerate_pointed(n: usize, trivalent: bool) -> Result<Vec<Diagram>> {
    let mut out = Vec::new();
    for_each_pointed(n, trivalent, |d| out.push(d.clone()))?;
    Ok(out)
}

fn report(n: usize, pointed: usize, classes: BTreeMap<CanonicalCode, Diagram>) -> CensusReport {
    let pointed = BigInt::from(pointed);
    CensusReport {
        size: n,
        labelled_connected: &pointed * factorial(n - 1),
        pointed_classes: pointed,
        unpointed_classes: BigInt::from(classes.len()),
        class_representatives: classes.into_values().collect(),
    }
}

/// Census of connected diagrams with `n` arcs.
///
/// Pointed diagrams are rigid, so each pointed class accounts for
/// `(n - 1)!` labelled structures.
pub fn enumerate_size(n: usize, trivalent: bool) -> Result<CensusReport> {
    let mut pointed = 0usize;
    let mut classes = BTreeMap::new();
    let mut failure = None;
    for_each_pointed(n, trivalent, |d| {
        pointed += 1;
        match canonical_code(d) {
            Ok(code) => {
                classes
                    .entry(code)
                    .or_insert_with_key(|code: &CanonicalCode| code.to_diagram());
            }
            Err(e) => failure = Some(e),
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(report(n, pointed, classes))
}

/// Unpointed trivalent representatives of size `n` whose subgroups are
/// normal.
pub fn enumerate_normal(n: usize) -> Result<Vec<Diagram>> {
    let census = enumerate_size(n, true)?;
    let mut out = Vec::new();
    for d in census.class_representatives {
        if is_normal(&d)? {
            out.push(d);
        }
    }
    Ok(out)
}

/// Result of the naive labelled enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaiveCensus {
    pub size: usize,
    pub labelled_connected: BigInt,
    pub pointed_classes: BigInt,
    pub unpointed_classes: BigInt,
}

fn permutations(n: usize, keep: &dyn Fn(&[usize]) -> bool) -> Vec<Vec<usize>> {
    fn rec(
        cur: &mut Vec<usize>,
        used: &mut [bool],
        keep: &dyn Fn(&[usize]) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == used.len() {
            if keep(cur) {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, keep, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], keep, &mut out);
    out
}

/// Filters every pair (involution, rotation) on `0..n` for transitivity.
/// Only meant to validate [`enumerate_size`] at small `n`.
pub fn naive_census(n: usize, trivalent: bool) -> Result<NaiveCensus> {
    if n == 0 || n > NAIVE_CAP {
        return Err(Error::Resource {
            what: "naive census size",
            requested: n,
            cap: NAIVE_CAP,
        });
    }
    let involutions = permutations(n, &|p| (0..p.len()).all(|i| p[p[i]] == i));
    let rotations = if trivalent {
        permutations(n, &|p| (0..p.len()).all(|i| p[p[p[i]]] == i))
    } else {
        permutations(n, &|_| true)
    };
    let mut labelled = 0u64;
    let mut pointed: BTreeSet<CanonicalCode> = BTreeSet::new();
    let mut unpointed: BTreeSet<CanonicalCode> = BTreeSet::new();
    for rot in &rotations {
        for inv in &involutions {
            let d = Diagram::new(rot.clone(), inv.clone(), false)?;
            if !d.is_connected() {
                continue;
            }
            labelled += 1;
            for base in 0..n {
                pointed
                    .insert(crate::diagram::PointedDiagram::new(d.clone(), base)?.pointed_code());
            }
            unpointed.insert(canonical_code(&d)?);
        }
    }
    Ok(NaiveCensus {
        size: n,
        labelled_connected: BigInt::from(labelled),
        pointed_classes: BigInt::from(pointed.len()),
        unpointed_classes: BigInt::from(unpointed.len()),
    })
}
