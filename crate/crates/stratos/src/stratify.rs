//! Decompositions, stratification conditions, quotient topology, and
//! poset-stratified spaces.

use serde::Serialize;

use crate::alexandroff::Space;
use crate::error::{Error, Result};
use crate::order::{MonotoneMap, Poset, Proset};

/// A space split into disjoint nonempty labeled pieces covering it.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub space: Space,
    pub labels: Vec<String>,
    /// `pieces[k]` is the bitset of points in the piece `labels[k]`.
    pub pieces: Vec<u64>,
}

/// Per-condition verdicts with witnesses, for debugging bad inputs.
#[derive(Debug, Clone, Serialize)]
pub struct StratificationReport {
    pub disjoint: bool,
    pub covering: bool,
    pub locally_closed: bool,
    pub frontier: bool,
    /// Pair of piece labels violating disjointness.
    pub disjoint_witness: Option<(String, String)>,
    /// Points missed by the cover.
    pub covering_witness: Option<String>,
    /// Piece that is not locally closed.
    pub locally_closed_witness: Option<String>,
    /// Pair violating the frontier condition.
    pub frontier_witness: Option<(String, String)>,
    /// Independent facts the theory relates but does not identify:
    /// whether the star order is antisymmetric and whether it matches
    /// the quotient-topology specialization order.
    pub star_order_is_partial: bool,
    pub star_matches_quotient: bool,
}

impl StratificationReport {
    pub fn all_hold(&self) -> bool {
        self.disjoint && self.covering && self.locally_closed && self.frontier
    }
}

/// A space with a continuous projection to a poset carrying the
/// Alexandroff topology.
#[derive(Debug, Clone)]
pub struct StratifiedSpace {
    pub space: Space,
    pub poset: Poset,
    /// `projection[i]` is the poset index of point `i`.
    pub projection: Vec<usize>,
}

/// A commuting square of a continuous map and a monotone map between
/// two stratified spaces.
#[derive(Debug, Clone)]
pub struct StratMorphism {
    pub source: StratifiedSpace,
    pub target: StratifiedSpace,
    /// Point map on the underlying spaces.
    pub space_map: Vec<usize>,
    /// Poset map on the strata.
    pub poset_map: Vec<usize>,
}

impl Decomposition {
    pub fn new(space: Space, labels: Vec<String>, pieces: Vec<u64>) -> Result<Decomposition> {
        if labels.len() != pieces.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} pieces",
                labels.len(),
                pieces.len()
            )));
        }
        for &p in &pieces {
            if p == 0 {
                return Err(Error::InvalidInput("empty piece".into()));
            }
            if p & !space.full_set() != 0 {
                return Err(Error::PointOutsideSpace(format!("{p:#b}")));
            }
        }
        Ok(Decomposition {
            space,
            labels,
            pieces,
        })
    }

    /// The piece containing a point, if any.
    pub fn piece_of(&self, point: usize) -> Option<usize> {
        self.pieces.iter().position(|&p| p >> point & 1 == 1)
    }

    /// The finest topology on the label set making the projection
    /// continuous: a set of labels is open iff the union of its pieces
    /// is open downstairs.
    pub fn quotient_topology(&self) -> Space {
        let k = self.pieces.len();
        assert!(k <= 22, "too many pieces to materialize quotient opens");
        let mut opens = Vec::new();
        for v in 0u64..(1u64 << k) {
            let mut union = 0u64;
            for i in 0..k {
                if v >> i & 1 == 1 {
                    union |= self.pieces[i];
                }
            }
            if self.space.is_open(union) {
                opens.push(v);
            }
        }
        Space::new(self.labels.clone(), opens).expect("quotient family is a topology")
    }

    /// The closure-containment preorder on pieces: lambda <= mu iff the
    /// piece of lambda lies in the closure of the piece of mu, closed
    /// up reflexively and transitively.
    pub fn star_order(&self) -> Proset {
        let k = self.pieces.len();
        let mut leq = vec![false; k * k];
        for mu in 0..k {
            let cl = self.space.closure(self.pieces[mu]);
            for la in 0..k {
                if self.pieces[la] & !cl == 0 {
                    leq[la * k + mu] = true;
                }
            }
        }
        Proset::from_matrix(self.labels.clone(), leq).expect("valid relation")
    }

    /// The frontier condition alone: a piece meeting another's closure
    /// is contained in it.
    pub fn frontier_condition(&self) -> bool {
        self.frontier_witness().is_none()
    }

    fn frontier_witness(&self) -> Option<(usize, usize)> {
        let k = self.pieces.len();
        for mu in 0..k {
            let cl = self.space.closure(self.pieces[mu]);
            for la in 0..k {
                if self.pieces[la] & cl != 0 && self.pieces[la] & !cl != 0 {
                    return Some((la, mu));
                }
            }
        }
        None
    }

    /// Checks the four stratification conditions and reports each
    /// separately, plus the derived order facts.
    pub fn is_stratification(&self) -> StratificationReport {
        let k = self.pieces.len();
        let mut disjoint_witness = None;
        for a in 0..k {
            for b in (a + 1)..k {
                if self.pieces[a] & self.pieces[b] != 0 {
                    disjoint_witness = Some((self.labels[a].clone(), self.labels[b].clone()));
                }
            }
        }
        let union = self.pieces.iter().fold(0u64, |acc, &p| acc | p);
        let missing = !union & self.space.full_set();
        let covering_witness = (missing != 0).then(|| self.space.format_set(missing));
        let locally_closed_witness = self
            .pieces
            .iter()
            .position(|&p| !self.space.is_locally_closed(p).unwrap_or(false))
            .map(|i| self.labels[i].clone());
        let frontier_witness = self
            .frontier_witness()
            .map(|(a, b)| (self.labels[a].clone(), self.labels[b].clone()));

        let star = self.star_order();
        let star_order_is_partial = star.is_partial_order();
        let star_matches_quotient = if disjoint_witness.is_none() && covering_witness.is_none() {
            self.quotient_topology().specialization_order() == star
        } else {
            false
        };

        StratificationReport {
            disjoint: disjoint_witness.is_none(),
            covering: covering_witness.is_none(),
            locally_closed: locally_closed_witness.is_none(),
            frontier: frontier_witness.is_none(),
            disjoint_witness,
            covering_witness,
            locally_closed_witness,
            frontier_witness,
            star_order_is_partial,
            star_matches_quotient,
        }
    }
}

impl StratifiedSpace {
    /// Validates continuity of the projection into the Alexandroff
    /// space of the poset; on failure reports the witness open.
    pub fn new(space: Space, poset: Poset, projection: Vec<usize>) -> Result<StratifiedSpace> {
        if projection.len() != space.len() {
            return Err(Error::NotTotal(format!(
                "{} projections for {} points",
                projection.len(),
                space.len()
            )));
        }
        let target = Space::from_proset(poset.proset());
        if let Some(open) = space.continuity_witness(&target, &projection) {
            return Err(Error::NotContinuous(target.format_set(open)));
        }
        Ok(StratifiedSpace {
            space,
            poset,
            projection,
        })
    }
}

impl StratMorphism {
    /// True iff the space map is continuous, the poset map monotone,
    /// and the projection square commutes pointwise.
    pub fn check(&self) -> Result<bool> {
        let cont = self
            .source
            .space
            .is_continuous(&self.target.space, &self.space_map)?;
        if !cont {
            return Ok(false);
        }
        if !MonotoneMap::is_monotone(
            self.source.poset.proset(),
            self.target.poset.proset(),
            &self.poset_map,
        ) {
            return Ok(false);
        }
        for i in 0..self.source.space.len() {
            if self.target.projection[self.space_map[i]] != self.poset_map[self.source.projection[i]]
            {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexandroff::pseudocircle;

    fn pc_split() -> Decomposition {
        let s = Space::from_proset(&pseudocircle());
        Decomposition::new(s, vec!["1".into(), "2".into()], vec![0b0011, 0b1100]).unwrap()
    }

    #[test]
    fn pseudocircle_split_quotient_is_sierpinski() {
        let q = pc_split().quotient_topology();
        // {2} (the maximals) open, {1} not.
        assert_eq!(q.opens(), &[0b00, 0b10, 0b11]);
    }

    #[test]
    fn discrete_singletons_quotient_discrete() {
        let p = Proset::from_generating_pairs::<&str>(&["a", "b", "c"], &[]).unwrap();
        let s = Space::from_proset(&p);
        let d = Decomposition::new(
            s,
            vec!["x".into(), "y".into(), "z".into()],
            vec![0b001, 0b010, 0b100],
        )
        .unwrap();
        assert_eq!(d.quotient_topology().opens().len(), 8);
    }

    #[test]
    fn indiscrete_quotient_indiscrete() {
        let s = Space::new(vec!["a".into(), "b".into(), "c".into()], vec![]).unwrap();
        let d = Decomposition::new(s, vec!["1".into(), "2".into()], vec![0b011, 0b100]).unwrap();
        assert_eq!(d.quotient_topology().opens(), &[0b00, 0b11]);
    }

    #[test]
    fn pseudocircle_split_frontier_holds() {
        assert!(pc_split().frontier_condition());
    }

    #[test]
    fn three_chain_split_frontier() {
        let p = Proset::from_generating_pairs(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let s = Space::from_proset(&p);
        // cl({b,c}) = {a,b,c} contains {a}.
        let d = Decomposition::new(s, vec!["1".into(), "2".into()], vec![0b001, 0b110]).unwrap();
        assert!(d.frontier_condition());
    }

    #[test]
    fn disjoint_union_split_frontier_fails() {
        // 2-chain a<b plus isolated x; pieces {a,x}, {b}.
        let p = Proset::from_generating_pairs(&["a", "b", "x"], &[("a", "b")]).unwrap();
        let s = Space::from_proset(&p);
        let d = Decomposition::new(s, vec!["1".into(), "2".into()], vec![0b101, 0b010]).unwrap();
        assert!(!d.frontier_condition());
    }

    #[test]
    fn pseudocircle_split_star_order_is_two_chain() {
        let star = pc_split().star_order();
        assert!(star.leq(0, 1));
        assert!(!star.leq(1, 0));
    }

    #[test]
    fn singleton_pieces_star_order_recovers_poset() {
        let p = pseudocircle();
        let s = Space::from_proset(&p);
        let labels: Vec<String> = p.elements().to_vec();
        let pieces: Vec<u64> = (0..4).map(|i| 1 << i).collect();
        let d = Decomposition::new(s, labels, pieces).unwrap();
        let star = d.star_order();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(star.leq(i, j), p.leq(i, j));
            }
        }
    }

    #[test]
    fn discrete_star_order_is_antichain() {
        let p = Proset::from_generating_pairs::<&str>(&["a", "b"], &[]).unwrap();
        let s = Space::from_proset(&p);
        let d = Decomposition::new(s, vec!["1".into(), "2".into()], vec![0b01, 0b10]).unwrap();
        let star = d.star_order();
        assert!(!star.leq(0, 1) && !star.leq(1, 0));
    }

    #[test]
    fn pseudocircle_split_is_stratification() {
        let r = pc_split().is_stratification();
        assert!(r.all_hold(), "{r:?}");
        assert!(r.star_order_is_partial);
        assert!(r.star_matches_quotient);
    }

    #[test]
    fn indiscrete_singletons_fail_locally_closed() {
        let s = Space::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        let d = Decomposition::new(s, vec!["1".into(), "2".into()], vec![0b01, 0b10]).unwrap();
        let r = d.is_stratification();
        assert!(r.disjoint && r.covering);
        assert!(!r.locally_closed);
    }

    #[test]
    fn overlapping_pieces_fail_disjointness() {
        let s = Space::new(vec!["a".into(), "b".into()], vec![0b01, 0b10]).unwrap();
        let d = Decomposition::new(s, vec!["1".into(), "2".into()], vec![0b01, 0b11]).unwrap();
        let r = d.is_stratification();
        assert!(!r.disjoint);
    }

    #[test]
    fn identity_projection_validates() {
        let p = pseudocircle();
        let s = Space::from_proset(&p);
        let poset = p.clone().into_poset().unwrap();
        let strat = StratifiedSpace::new(s, poset, (0..4).collect());
        assert!(strat.is_ok());
    }

    #[test]
    fn order_reversing_projection_fails_continuity() {
        // Sierpinski {a < b} projected to the 2-chain with a,b swapped.
        let p = Proset::from_generating_pairs(&["a", "b"], &[("a", "b")]).unwrap();
        let s = Space::from_proset(&p);
        let poset = p.into_poset().unwrap();
        let r = StratifiedSpace::new(s, poset, vec![1, 0]);
        assert!(matches!(r, Err(Error::NotContinuous(_))));
    }

    #[test]
    fn identity_morphism_checks() {
        let p = pseudocircle();
        let s = Space::from_proset(&p);
        let strat = StratifiedSpace::new(s, p.into_poset().unwrap(), (0..4).collect()).unwrap();
        let m = StratMorphism {
            source: strat.clone(),
            target: strat,
            space_map: (0..4).collect(),
            poset_map: (0..4).collect(),
        };
        assert!(m.check().unwrap());
    }

    #[test]
    fn non_commuting_square_fails() {
        let p = Proset::from_generating_pairs::<&str>(&["a", "b"], &[]).unwrap();
        let s = Space::from_proset(&p);
        let strat =
            StratifiedSpace::new(s, p.into_poset().unwrap(), vec![0, 1]).unwrap();
        let m = StratMorphism {
            source: strat.clone(),
            target: strat,
            space_map: vec![0, 1],
            poset_map: vec![1, 0], // breaks the square at every point
        };
        assert!(!m.check().unwrap());
    }
}
