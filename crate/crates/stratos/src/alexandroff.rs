//! Finite topological spaces and the equivalence with prosets.
//!
//! Open sets are stored as bitsets over the point list. `Space::from_proset`
//! is the functor sending a proset to the topology of up-closed sets;
//! `specialization_order` is its inverse.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::order::{MonotoneMap, Proset};

/// A finite topological space with an explicit open-set family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Space {
    points: Vec<String>,
    /// Sorted, deduplicated bitsets; always contains 0 and the full set.
    opens: Vec<u64>,
}

impl Space {
    pub const MAX_POINTS: usize = 64;

    /// Validates that `opens` is a topology on `points`.
    pub fn new(points: Vec<String>, opens: Vec<u64>) -> Result<Space> {
        if points.len() > Self::MAX_POINTS {
            return Err(Error::InvalidInput(format!(
                "at most {} points supported, got {}",
                Self::MAX_POINTS,
                points.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for p in &points {
            if !seen.insert(p.clone()) {
                return Err(Error::DuplicateLabel(p.clone()));
            }
        }
        let full = full_set(points.len());
        let mut family: BTreeSet<u64> = opens.into_iter().collect();
        family.insert(0);
        family.insert(full);
        let space = Space {
            points,
            opens: family.into_iter().collect(),
        };
        for &u in &space.opens {
            if u & !full != 0 {
                return Err(Error::PointOutsideSpace(format!("{u:#b}")));
            }
        }
        if let Some(msg) = space.topology_violation() {
            return Err(Error::NotATopology(msg));
        }
        Ok(space)
    }

    /// Alexandroff space of a proset: opens are exactly the up-closed sets.
    /// Materializes the full family, so the proset must be small.
    pub fn from_proset(p: &Proset) -> Space {
        let n = p.len();
        assert!(n <= 22, "open-set family too large to materialize ({n} points)");
        let mut opens = Vec::new();
        // A set is up-closed iff it is a union of minimal opens U_x.
        // Enumerate all subsets for small n, filter up-closed.
        for u in 0u64..(1u64 << n) {
            if (0..n).all(|i| u >> i & 1 == 0 || (0..n).all(|j| !p.leq(i, j) || u >> j & 1 == 1)) {
                opens.push(u);
            }
        }
        Space {
            points: p.elements().to_vec(),
            opens,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn label(&self, i: usize) -> &str {
        &self.points[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|l| l == label)
    }

    pub fn opens(&self) -> &[u64] {
        &self.opens
    }

    pub fn full_set(&self) -> u64 {
        full_set(self.len())
    }

    pub fn is_open(&self, set: u64) -> bool {
        self.opens.binary_search(&set).is_ok()
    }

    pub fn is_closed(&self, set: u64) -> bool {
        self.is_open(!set & self.full_set())
    }

    /// Complement of the union of opens avoiding the set.
    pub fn closure(&self, set: u64) -> u64 {
        let mut avoid = 0u64;
        for &u in &self.opens {
            if u & set == 0 {
                avoid |= u;
            }
        }
        !avoid & self.full_set()
    }

    /// Smallest open containing `i`. Total because the space is finite.
    pub fn minimal_open(&self, i: usize) -> u64 {
        let mut m = self.full_set();
        for &u in &self.opens {
            if u >> i & 1 == 1 {
                m &= u;
            }
        }
        m
    }

    /// First witness that the family is not a topology, if any.
    fn topology_violation(&self) -> Option<String> {
        for (a, &u) in self.opens.iter().enumerate() {
            for &v in &self.opens[a + 1..] {
                if !self.is_open(u | v) {
                    return Some(format!(
                        "union of {} and {} is missing",
                        self.format_set(u),
                        self.format_set(v)
                    ));
                }
                if !self.is_open(u & v) {
                    return Some(format!(
                        "intersection of {} and {} is missing",
                        self.format_set(u),
                        self.format_set(v)
                    ));
                }
            }
        }
        None
    }

    /// Every valid finite topology is Alexandroff; this re-runs the
    /// family validation and reports the first violating pair.
    pub fn is_alexandroff(&self) -> Result<bool> {
        match self.topology_violation() {
            None => Ok(true),
            Some(msg) => Err(Error::NotATopology(msg)),
        }
    }

    /// Specialization order: `x <= y` iff `x` lies in the closure of `{y}`.
    pub fn specialization_order(&self) -> Proset {
        let n = self.len();
        let mut leq = vec![false; n * n];
        for j in 0..n {
            let cl = self.closure(1 << j);
            for i in 0..n {
                if cl >> i & 1 == 1 {
                    leq[i * n + j] = true;
                }
            }
        }
        Proset::from_matrix(self.points.clone(), leq).expect("specialization order is a proset")
    }

    /// A subset is locally closed iff it is open in its closure.
    pub fn is_locally_closed(&self, set: u64) -> Result<bool> {
        if set & !self.full_set() != 0 {
            return Err(Error::PointOutsideSpace(format!("{set:#b}")));
        }
        let cl = self.closure(set);
        Ok(self.opens.iter().any(|&u| u & cl == set))
    }

    /// Preimage-of-opens continuity check.
    pub fn is_continuous(&self, target: &Space, assignment: &[usize]) -> Result<bool> {
        if assignment.len() != self.len() {
            return Err(Error::NotTotal(format!(
                "{} assignments for {} points",
                assignment.len(),
                self.len()
            )));
        }
        for &v in assignment {
            if v >= target.len() {
                return Err(Error::PointOutsideSpace(format!("image index {v}")));
            }
        }
        Ok(self.continuity_witness(target, assignment).is_none())
    }

    /// First open of the target whose preimage is not open, if any.
    pub fn continuity_witness(&self, target: &Space, assignment: &[usize]) -> Option<u64> {
        for &u in &target.opens {
            let mut pre = 0u64;
            for (i, &v) in assignment.iter().enumerate() {
                if u >> v & 1 == 1 {
                    pre |= 1 << i;
                }
            }
            if !self.is_open(pre) {
                return Some(u);
            }
        }
        None
    }

    /// Subspace topology on the points of `set`, keeping their labels.
    pub fn subspace(&self, set: u64) -> Space {
        let idx: Vec<usize> = (0..self.len()).filter(|&i| set >> i & 1 == 1).collect();
        let points: Vec<String> = idx.iter().map(|&i| self.points[i].clone()).collect();
        let mut opens: BTreeSet<u64> = BTreeSet::new();
        for &u in &self.opens {
            let mut r = 0u64;
            for (k, &i) in idx.iter().enumerate() {
                if u >> i & 1 == 1 {
                    r |= 1 << k;
                }
            }
            opens.insert(r);
        }
        Space {
            points,
            opens: opens.into_iter().collect(),
        }
    }

    pub fn format_set(&self, set: u64) -> String {
        let names: Vec<&str> = (0..self.len())
            .filter(|&i| set >> i & 1 == 1)
            .map(|i| self.points[i].as_str())
            .collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn monotone_to_map(&self, target: &Space, assignment: Vec<usize>) -> Result<MonotoneMap> {
        MonotoneMap::new(
            self.specialization_order(),
            target.specialization_order(),
            assignment,
        )
    }
}

fn full_set(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// The 4-point circle model: two minimal points below two maximal ones.
pub fn pseudocircle() -> Proset {
    Proset::from_generating_pairs(
        &["a", "b", "c", "d"],
        &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )
    .unwrap()
}

/// The 2k-point circle model: minimal points `m0..`, maximal points `t0..`
/// arranged in a cycle (`mi < ti` and `mi < t(i-1)`).
pub fn circle_model(k: usize) -> Proset {
    assert!(k >= 2);
    let mins: Vec<String> = (0..k).map(|i| format!("m{i}")).collect();
    let maxs: Vec<String> = (0..k).map(|i| format!("t{i}")).collect();
    let mut labels: Vec<String> = Vec::new();
    labels.extend(mins.iter().cloned());
    labels.extend(maxs.iter().cloned());
    let mut pairs = Vec::new();
    for i in 0..k {
        pairs.push((mins[i].clone(), maxs[i].clone()));
        pairs.push((mins[i].clone(), maxs[(i + k - 1) % k].clone()));
    }
    Proset::from_generating_pairs(&labels, &pairs).unwrap()
}
