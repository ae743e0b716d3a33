//! Finite preordered and partially ordered sets.
//!
//! Relations are dense boolean matrices over an ordered list of string
//! labels. All tie-breaking (class representatives, edge order) is
//! lexicographic on labels so output is reproducible.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A finite set with a reflexive-transitive relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Proset {
    elements: Vec<String>,
    /// Row-major: `leq[i * n + j]` means `elements[i] <= elements[j]`.
    leq: Vec<bool>,
}

/// A proset whose relation is additionally antisymmetric.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset(Proset);

/// A total assignment between prosets, checked to preserve the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneMap {
    pub source: Proset,
    pub target: Proset,
    /// `assignment[i]` is the target index of source element `i`.
    pub assignment: Vec<usize>,
}

impl Proset {
    /// Smallest reflexive-transitive relation containing the given pairs.
    pub fn from_generating_pairs<S: AsRef<str>>(
        elements: &[S],
        pairs: &[(S, S)],
    ) -> Result<Proset> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in pairs {
            let &i = index
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownLabel(a.as_ref().to_owned()))?;
            let &j = index
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownLabel(b.as_ref().to_owned()))?;
            leq[i * n + j] = true;
        }
        warshall(&mut leq, n);
        Ok(Proset {
            elements: labels,
            leq,
        })
    }

    /// Builds from an explicit relation matrix, closing it reflexively
    /// and transitively.
    pub fn from_matrix(elements: Vec<String>, mut leq: Vec<bool>) -> Result<Proset> {
        let n = elements.len();
        if leq.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "relation matrix has {} entries, expected {}",
                leq.len(),
                n * n
            )));
        }
        let mut seen = BTreeMap::new();
        for (i, l) in elements.iter().enumerate() {
            if seen.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        for i in 0..n {
            leq[i * n + i] = true;
        }
        warshall(&mut leq, n);
        Ok(Proset { elements, leq })
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

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|l| l == label)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    /// Antisymmetry check.
    pub fn is_partial_order(&self) -> bool {
        let n = self.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.leq(i, j) && self.leq(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn into_poset(self) -> Result<Poset> {
        let n = self.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.leq(i, j) && self.leq(j, i) {
                    return Err(Error::NotAntisymmetric(
                        self.elements[i].clone(),
                        self.elements[j].clone(),
                    ));
                }
            }
        }
        Ok(Poset(self))
    }

    /// The reversed order.
    pub fn opposite(&self) -> Proset {
        let n = self.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = self.leq(j, i);
            }
        }
        Proset {
            elements: self.elements.clone(),
            leq,
        }
    }

    /// The up-set of `i`: all `j` with `i <= j`.
    pub fn up_set(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.leq(i, j)).collect()
    }

    /// The down-set of `i`: all `j` with `j <= i`.
    pub fn down_set(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.leq(j, i)).collect()
    }

    /// Quotient by mutual comparability. Classes are named after their
    /// lexicographically least member; the class order is induced by
    /// the element order and is always antisymmetric.
    pub fn quotient_by_mutual_leq(&self) -> (Poset, MonotoneMap) {
        let n = self.len();
        let mut class_of = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        // Elements sorted by label so the least label becomes the rep.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| self.elements[a].cmp(&self.elements[b]));
        for &i in &order {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(i);
            for &j in &order {
                if self.leq(i, j) && self.leq(j, i) {
                    class_of[j] = c;
                }
            }
        }
        let k = reps.len();
        let mut leq = vec![false; k * k];
        for a in 0..k {
            for b in 0..k {
                leq[a * k + b] = self.leq(reps[a], reps[b]);
            }
        }
        let elements: Vec<String> = reps.iter().map(|&i| self.elements[i].clone()).collect();
        let quotient = Proset { elements, leq };
        let projection = MonotoneMap {
            source: self.clone(),
            target: quotient.clone(),
            assignment: class_of,
        };
        (Poset(quotient), projection)
    }
}

impl Poset {
    pub fn proset(&self) -> &Proset {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        self.0.elements()
    }

    pub fn label(&self, i: usize) -> &str {
        self.0.label(i)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.index_of(label)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.0.leq(i, j)
    }

    /// Transitive reduction as index pairs, sorted lexicographically by
    /// the labels of the endpoints.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut edges = Vec::new();
        for x in 0..n {
            'pair: for y in 0..n {
                if x == y || !self.leq(x, y) {
                    continue;
                }
                for z in 0..n {
                    if z != x && z != y && self.leq(x, z) && self.leq(z, y) {
                        continue 'pair;
                    }
                }
                edges.push((x, y));
            }
        }
        edges.sort_by(|&(a, b), &(c, d)| {
            (self.label(a), self.label(b)).cmp(&(self.label(c), self.label(d)))
        });
        edges
    }
}

impl MonotoneMap {
    /// Validates totality and order preservation.
    pub fn new(source: Proset, target: Proset, assignment: Vec<usize>) -> Result<MonotoneMap> {
        if assignment.len() != source.len() {
            return Err(Error::NotTotal(format!(
                "{} assignments for {} elements",
                assignment.len(),
                source.len()
            )));
        }
        for (i, &v) in assignment.iter().enumerate() {
            if v >= target.len() {
                return Err(Error::UnknownLabel(format!(
                    "image index {v} of {} out of range",
                    source.label(i)
                )));
            }
        }
        let m = MonotoneMap {
            source,
            target,
            assignment,
        };
        if let Some((i, j)) = m.monotonicity_witness() {
            return Err(Error::NotMonotone(
                m.source.label(i).to_owned(),
                m.source.label(j).to_owned(),
            ));
        }
        Ok(m)
    }

    /// First pair violating order preservation, if any.
    pub fn monotonicity_witness(&self) -> Option<(usize, usize)> {
        let n = self.source.len();
        for i in 0..n {
            for j in 0..n {
                if self.source.leq(i, j)
                    && !self.target.leq(self.assignment[i], self.assignment[j])
                {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_monotone(source: &Proset, target: &Proset, assignment: &[usize]) -> bool {
        let n = source.len();
        assignment.len() == n
            && (0..n).all(|i| {
                (0..n).all(|j| !source.leq(i, j) || target.leq(assignment[i], assignment[j]))
            })
    }

    pub fn apply(&self, i: usize) -> usize {
        self.assignment[i]
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.len()];
        for &v in &self.assignment {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

fn warshall(leq: &mut [bool], n: usize) {
    for k in 0..n {
        for i in 0..n {
            if leq[i * n + k] {
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
    }
}
