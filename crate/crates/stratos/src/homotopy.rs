//! Homotopy sets of finite spaces and the preorders on them.
//!
//! Maps between finite spaces are monotone maps between their
//! specialization orders. Two maps are homotopic iff they are joined by
//! a fence of pointwise-comparable monotone maps; classes are computed
//! by flooding one-point moves, which generate the same components as
//! the full comparability graph.

use std::collections::HashMap;

use crate::alexandroff::Space;
use crate::error::{Error, Result};
use crate::order::{MonotoneMap, Poset, Proset};
use crate::stratify::{StratMorphism, StratifiedSpace};

pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Which side of the composition the witness ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// `[f] <= [g]` iff `[f] = [g] o [s]` for some `[s]` in `[X,X]`.
    R,
    /// `[f] <= [g]` iff `[f] = [t] o [g]` for some `[t]` in `[Y,Y]`.
    L,
    /// Both witnesses at once.
    LR,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::R => "R",
            Flavor::L => "L",
            Flavor::LR => "LR",
        }
    }
}

#[derive(Debug, Clone)]
pub struct HomotopyClass {
    /// Lexicographically least member.
    pub representative: Vec<usize>,
    /// Indices into the map table.
    pub members: Vec<usize>,
}

/// The homotopy set `[X,Y]` with its partition into classes.
#[derive(Debug, Clone)]
pub struct HomotopySet {
    pub source: Proset,
    pub target: Proset,
    /// All monotone maps, lexicographically ordered.
    pub maps: Vec<Vec<usize>>,
    /// Map index -> class index.
    pub class_of: Vec<usize>,
    pub classes: Vec<HomotopyClass>,
    index: HashMap<Vec<usize>, usize>,
}

/// The three class preorders of a homotopy set.
#[derive(Debug, Clone)]
pub struct ClassPreorders {
    pub r: Proset,
    pub l: Proset,
    pub lr: Proset,
}

impl ClassPreorders {
    pub fn get(&self, flavor: Flavor) -> &Proset {
        match flavor {
            Flavor::R => &self.r,
            Flavor::L => &self.l,
            Flavor::LR => &self.lr,
        }
    }
}

/// A quotient poset of a homotopy set together with its projection.
#[derive(Debug, Clone)]
pub struct QuotientPoset {
    pub flavor: Flavor,
    pub preorder: Proset,
    pub poset: Poset,
    pub projection: MonotoneMap,
}

/// Enumerates monotone maps `X -> Y` in lexicographic order.
pub fn all_monotone_maps(source: &Proset, target: &Proset, budget: u128) -> Result<Vec<Vec<usize>>> {
    let candidates = (target.len() as u128)
        .checked_pow(source.len() as u32)
        .unwrap_or(u128::MAX);
    if candidates > budget {
        return Err(Error::BudgetExceeded { candidates, budget });
    }
    let mut maps = Vec::new();
    let mut current = vec![0usize; source.len()];
    enumerate(source, target, 0, &mut current, &mut maps);
    Ok(maps)
}

fn enumerate(
    source: &Proset,
    target: &Proset,
    pos: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if pos == source.len() {
        out.push(current.clone());
        return;
    }
    'candidate: for y in 0..target.len() {
        for i in 0..pos {
            if source.leq(i, pos) && !target.leq(current[i], y) {
                continue 'candidate;
            }
            if source.leq(pos, i) && !target.leq(y, current[i]) {
                continue 'candidate;
            }
        }
        current[pos] = y;
        enumerate(source, target, pos + 1, current, out);
    }
    current[pos] = 0;
}

pub fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&x| outer[x]).collect()
}

impl HomotopySet {
    pub fn enumerate(source: &Proset, target: &Proset, budget: u128) -> Result<HomotopySet> {
        let maps = all_monotone_maps(source, target, budget)?;
        let index: HashMap<Vec<usize>, usize> =
            maps.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();

        // Components under one-point comparable moves. Maps are sorted,
        // so scanning in order makes the first member of each class its
        // lexicographically least one.
        let mut class_of = vec![usize::MAX; maps.len()];
        let mut classes: Vec<HomotopyClass> = Vec::new();
        for start in 0..maps.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            let mut members = vec![start];
            class_of[start] = cid;
            let mut frontier = vec![start];
            while let Some(mi) = frontier.pop() {
                let f = maps[mi].clone();
                for x in 0..source.len() {
                    for y in 0..target.len() {
                        if y == f[x] || !(target.leq(y, f[x]) || target.leq(f[x], y)) {
                            continue;
                        }
                        if !one_point_move_ok(source, target, &f, x, y) {
                            continue;
                        }
                        let mut h = f.clone();
                        h[x] = y;
                        let hi = index[&h];
                        if class_of[hi] == usize::MAX {
                            class_of[hi] = cid;
                            members.push(hi);
                            frontier.push(hi);
                        }
                    }
                }
            }
            members.sort_unstable();
            classes.push(HomotopyClass {
                representative: maps[members[0]].clone(),
                members,
            });
        }
        Ok(HomotopySet {
            source: source.clone(),
            target: target.clone(),
            maps,
            class_of,
            classes,
            index,
        })
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Class of an arbitrary monotone map, if it belongs to this set.
    pub fn class_of_map(&self, map: &[usize]) -> Option<usize> {
        self.index.get(map).map(|&i| self.class_of[i])
    }

    /// Printable name of a class: images of the canonical representative.
    pub fn class_label(&self, c: usize) -> String {
        self.classes[c]
            .representative
            .iter()
            .map(|&y| self.target.label(y))
            .collect::<Vec<_>>()
            .join(",")
    }

    fn class_labels(&self) -> Vec<String> {
        (0..self.class_count()).map(|c| self.class_label(c)).collect()
    }

    /// One of the three preorders on classes. Witnesses range over the
    /// class representatives of the endomorphism sets, which is valid
    /// because homotopy is a congruence for composition.
    pub fn preorder(&self, flavor: Flavor, budget: u128) -> Result<Proset> {
        let endo_source = match flavor {
            Flavor::R | Flavor::LR => Some(HomotopySet::enumerate(&self.source, &self.source, budget)?),
            Flavor::L => None,
        };
        let endo_target = match flavor {
            Flavor::L | Flavor::LR => Some(HomotopySet::enumerate(&self.target, &self.target, budget)?),
            Flavor::R => None,
        };
        Ok(self.preorder_with(flavor, endo_source.as_ref(), endo_target.as_ref()))
    }

    /// All three preorders, sharing the endomorphism enumerations.
    pub fn preorders(&self, budget: u128) -> Result<ClassPreorders> {
        let endo_source = HomotopySet::enumerate(&self.source, &self.source, budget)?;
        let endo_target = HomotopySet::enumerate(&self.target, &self.target, budget)?;
        Ok(ClassPreorders {
            r: self.preorder_with(Flavor::R, Some(&endo_source), None),
            l: self.preorder_with(Flavor::L, None, Some(&endo_target)),
            lr: self.preorder_with(Flavor::LR, Some(&endo_source), Some(&endo_target)),
        })
    }

    fn preorder_with(
        &self,
        flavor: Flavor,
        endo_source: Option<&HomotopySet>,
        endo_target: Option<&HomotopySet>,
    ) -> Proset {
        let k = self.class_count();
        let mut leq = vec![false; k * k];
        for g in 0..k {
            let g_rep = &self.classes[g].representative;
            // Collect the classes reachable from [g] by the allowed
            // compositions; each such class [f] satisfies [f] <= [g].
            match flavor {
                Flavor::R => {
                    for s in &endo_source.unwrap().classes {
                        let f = self.class_of_map(&compose(g_rep, &s.representative)).unwrap();
                        leq[f * k + g] = true;
                    }
                }
                Flavor::L => {
                    for t in &endo_target.unwrap().classes {
                        let f = self.class_of_map(&compose(&t.representative, g_rep)).unwrap();
                        leq[f * k + g] = true;
                    }
                }
                Flavor::LR => {
                    for s in &endo_source.unwrap().classes {
                        let gs = compose(g_rep, &s.representative);
                        for t in &endo_target.unwrap().classes {
                            let f = self.class_of_map(&compose(&t.representative, &gs)).unwrap();
                            leq[f * k + g] = true;
                        }
                    }
                }
            }
        }
        Proset::from_matrix(self.class_labels(), leq).expect("valid relation")
    }

    /// Quotient of a preorder to its poset of mutual classes.
    pub fn quotient(&self, flavor: Flavor, budget: u128) -> Result<QuotientPoset> {
        let preorder = self.preorder(flavor, budget)?;
        let (poset, projection) = preorder.quotient_by_mutual_leq();
        Ok(QuotientPoset {
            flavor,
            preorder,
            poset,
            projection,
        })
    }

    /// Packages a quotient as a stratified space over the Alexandroff
    /// topology of the preorder.
    pub fn stratified(&self, flavor: Flavor, budget: u128) -> Result<StratifiedSpace> {
        let q = self.quotient(flavor, budget)?;
        StratifiedSpace::new(
            Space::from_proset(&q.preorder),
            q.poset,
            q.projection.assignment,
        )
    }
}

/// The covariant functor on homotopy sets: for `g: X -> Y`, the square
/// from the stratified `[S,X]` to the stratified `[S,Y]` induced by
/// post-composition.
pub fn pushforward(
    hs_sx: &HomotopySet,
    hs_sy: &HomotopySet,
    g: &MonotoneMap,
    budget: u128,
) -> Result<StratMorphism> {
    if hs_sx.source != hs_sy.source || g.source != hs_sx.target || g.target != hs_sy.target {
        return Err(Error::DimensionMismatch(
            "pushforward endpoints do not line up".into(),
        ));
    }
    let class_map: Vec<usize> = (0..hs_sx.class_count())
        .map(|c| {
            let composite = compose(&g.assignment, &hs_sx.classes[c].representative);
            hs_sx_to(hs_sy, &composite)
        })
        .collect::<Result<_>>()?;
    let source = hs_sx.stratified(Flavor::R, budget)?;
    let target = hs_sy.stratified(Flavor::R, budget)?;
    let poset_map: Vec<usize> = (0..source.poset.len())
        .map(|q| {
            // Any class projecting to q; the class map descends.
            let c = source.projection.iter().position(|&x| x == q).unwrap();
            target.projection[class_map[c]]
        })
        .collect();
    Ok(StratMorphism {
        source,
        target,
        space_map: class_map,
        poset_map,
    })
}

/// The contravariant functor: for `g: X -> Y`, pre-composition from the
/// stratified `[Y,T]` to the stratified `[X,T]`, in the left flavor.
pub fn pullback(
    hs_yt: &HomotopySet,
    hs_xt: &HomotopySet,
    g: &MonotoneMap,
    budget: u128,
) -> Result<StratMorphism> {
    if hs_yt.target != hs_xt.target || g.source != hs_xt.source || g.target != hs_yt.source {
        return Err(Error::DimensionMismatch(
            "pullback endpoints do not line up".into(),
        ));
    }
    let class_map: Vec<usize> = (0..hs_yt.class_count())
        .map(|c| {
            let composite = compose(&hs_yt.classes[c].representative, &g.assignment);
            hs_sx_to(hs_xt, &composite)
        })
        .collect::<Result<_>>()?;
    let source = hs_yt.stratified(Flavor::L, budget)?;
    let target = hs_xt.stratified(Flavor::L, budget)?;
    let poset_map: Vec<usize> = (0..source.poset.len())
        .map(|q| {
            let c = source.projection.iter().position(|&x| x == q).unwrap();
            target.projection[class_map[c]]
        })
        .collect();
    Ok(StratMorphism {
        source,
        target,
        space_map: class_map,
        poset_map,
    })
}

fn hs_sx_to(hs: &HomotopySet, map: &[usize]) -> Result<usize> {
    hs.class_of_map(map)
        .ok_or_else(|| Error::InvalidInput("composite map not monotone".into()))
}

fn one_point_move_ok(source: &Proset, target: &Proset, f: &[usize], x: usize, y: usize) -> bool {
    for z in 0..source.len() {
        if z == x {
            continue;
        }
        if source.leq(z, x) && !target.leq(f[z], y) {
            return false;
        }
        if source.leq(x, z) && !target.leq(y, f[z]) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexandroff::{circle_model, pseudocircle};

    /// Independent oracle: components of the full pairwise
    /// comparability graph on the map table.
    fn fence_components(target: &Proset, maps: &[Vec<usize>]) -> Vec<usize> {
        let n = maps.len();
        let mut comp: Vec<usize> = (0..n).collect();
        fn find(comp: &mut Vec<usize>, i: usize) -> usize {
            if comp[i] != i {
                let r = find(comp, comp[i]);
                comp[i] = r;
            }
            comp[i]
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let le = maps[i].iter().zip(&maps[j]).all(|(&a, &b)| target.leq(a, b));
                let ge = maps[i].iter().zip(&maps[j]).all(|(&a, &b)| target.leq(b, a));
                if le || ge {
                    let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                    comp[a] = b;
                }
            }
        }
        (0..n).map(|i| find(&mut comp, i)).collect()
    }

    fn chain(labels: &[&str]) -> Proset {
        let pairs: Vec<(&str, &str)> = labels.windows(2).map(|w| (w[0], w[1])).collect();
        Proset::from_generating_pairs(labels, &pairs).unwrap()
    }

    #[test]
    fn maps_from_point() {
        let pt = Proset::from_generating_pairs::<&str>(&["p"], &[]).unwrap();
        let y = pseudocircle();
        assert_eq!(all_monotone_maps(&pt, &y, DEFAULT_BUDGET).unwrap().len(), 4);
    }

    #[test]
    fn two_chain_self_maps() {
        let c2 = chain(&["a", "b"]);
        let maps = all_monotone_maps(&c2, &c2, DEFAULT_BUDGET).unwrap();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn pseudocircle_self_maps_match_bruteforce() {
        let p = pseudocircle();
        let maps = all_monotone_maps(&p, &p, DEFAULT_BUDGET).unwrap();
        // brute force over all 4^4 candidates
        let mut count = 0;
        for code in 0..256usize {
            let f: Vec<usize> = (0..4).map(|i| code >> (2 * i) & 0b11).collect();
            if MonotoneMap::is_monotone(&p, &p, &f) {
                count += 1;
                assert!(maps.contains(&f));
            }
        }
        assert_eq!(maps.len(), count);
        // contains the 4 automorphisms and 4 constants
        assert!(maps.contains(&vec![0, 1, 2, 3]));
        assert!(maps.contains(&vec![1, 0, 2, 3]));
        assert!(maps.contains(&vec![0, 1, 3, 2]));
        assert!(maps.contains(&vec![1, 0, 3, 2]));
        for y in 0..4 {
            assert!(maps.contains(&vec![y; 4]));
        }
    }

    #[test]
    fn budget_guard_fires() {
        let big = Proset::from_generating_pairs::<&str>(
            &["a", "b", "c", "d", "e", "f"],
            &[],
        )
        .unwrap();
        let r = all_monotone_maps(&big, &big, 10);
        assert!(matches!(r, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn target_with_maximum_gives_one_class() {
        let x = pseudocircle();
        let y = chain(&["a", "b", "c"]);
        let hs = HomotopySet::enumerate(&x, &y, DEFAULT_BUDGET).unwrap();
        assert_eq!(hs.class_count(), 1);
    }

    #[test]
    fn pseudocircle_five_classes_match_fence_oracle() {
        let p = pseudocircle();
        let hs = HomotopySet::enumerate(&p, &p, DEFAULT_BUDGET).unwrap();
        assert_eq!(hs.class_count(), 5);
        // oracle agreement
        let oracle = fence_components(&p, &hs.maps);
        for i in 0..hs.maps.len() {
            for j in 0..hs.maps.len() {
                assert_eq!(
                    hs.class_of[i] == hs.class_of[j],
                    oracle[i] == oracle[j],
                    "maps {i},{j}"
                );
            }
        }
        // the four automorphisms are isolated
        for auto in [
            vec![0, 1, 2, 3],
            vec![1, 0, 2, 3],
            vec![0, 1, 3, 2],
            vec![1, 0, 3, 2],
        ] {
            let c = hs.class_of_map(&auto).unwrap();
            assert_eq!(hs.classes[c].members.len(), 1);
        }
    }

    #[test]
    fn double_cover_class_exists() {
        let c8 = circle_model(4);
        let c4 = circle_model(2);
        let hs = HomotopySet::enumerate(&c8, &c4, DEFAULT_BUDGET).unwrap();
        // x_i -> y_{i mod 4}: minimal m0..m3 -> m0,m1,m0,m1; t0..t3 -> t0,t1,t0,t1
        let dbl = vec![0, 1, 0, 1, 2, 3, 2, 3];
        assert!(MonotoneMap::is_monotone(&c8, &c4, &dbl));
        assert!(hs.class_of_map(&dbl).is_some());
    }

    #[test]
    fn pseudocircle_preorder_r() {
        let p = pseudocircle();
        let hs = HomotopySet::enumerate(&p, &p, DEFAULT_BUDGET).unwrap();
        let r = hs.preorder(Flavor::R, DEFAULT_BUDGET).unwrap();
        let const_c = hs.class_of_map(&vec![0; 4]).unwrap();
        let id_c = hs.class_of_map(&[0, 1, 2, 3]).unwrap();
        let flip_c = hs.class_of_map(&[0, 1, 3, 2]).unwrap();
        // constants below everything
        for g in 0..hs.class_count() {
            assert!(r.leq(const_c, g));
        }
        // automorphisms mutually comparable, never below the constants
        assert!(r.leq(id_c, flip_c) && r.leq(flip_c, id_c));
        assert!(!r.leq(id_c, const_c));
    }

    #[test]
    fn preorder_l_mirrors_r_on_self_maps() {
        let p = pseudocircle();
        let hs = HomotopySet::enumerate(&p, &p, DEFAULT_BUDGET).unwrap();
        let pre = hs.preorders(DEFAULT_BUDGET).unwrap();
        let const_c = hs.class_of_map(&vec![0; 4]).unwrap();
        let id_c = hs.class_of_map(&[0, 1, 2, 3]).unwrap();
        for g in 0..hs.class_count() {
            assert!(pre.l.leq(const_c, g));
        }
        assert!(!pre.l.leq(id_c, const_c));
        // R and L are contained in LR
        for f in 0..hs.class_count() {
            for g in 0..hs.class_count() {
                if pre.r.leq(f, g) || pre.l.leq(f, g) {
                    assert!(pre.lr.leq(f, g));
                }
            }
        }
    }

    #[test]
    fn pseudocircle_quotients_are_two_chains() {
        let p = pseudocircle();
        let hs = HomotopySet::enumerate(&p, &p, DEFAULT_BUDGET).unwrap();
        for flavor in [Flavor::R, Flavor::L, Flavor::LR] {
            let q = hs.quotient(flavor, DEFAULT_BUDGET).unwrap();
            assert_eq!(q.poset.len(), 2, "{flavor:?}");
            let const_c = hs.class_of_map(&vec![0; 4]).unwrap();
            let id_c = hs.class_of_map(&[0, 1, 2, 3]).unwrap();
            let qc = q.projection.apply(const_c);
            let qi = q.projection.apply(id_c);
            assert_ne!(qc, qi);
            assert!(q.poset.leq(qc, qi));
            assert!(q.projection.is_surjective());
        }
    }

    #[test]
    fn quotient_to_point_target() {
        let p = pseudocircle();
        let pt = Proset::from_generating_pairs::<&str>(&["p"], &[]).unwrap();
        let hs = HomotopySet::enumerate(&p, &pt, DEFAULT_BUDGET).unwrap();
        let q = hs.quotient(Flavor::R, DEFAULT_BUDGET).unwrap();
        assert_eq!(q.poset.len(), 1);
    }

    #[test]
    fn stratified_quotients_validate() {
        let p = pseudocircle();
        let hs = HomotopySet::enumerate(&p, &p, DEFAULT_BUDGET).unwrap();
        for flavor in [Flavor::R, Flavor::L, Flavor::LR] {
            assert!(hs.stratified(flavor, DEFAULT_BUDGET).is_ok(), "{flavor:?}");
        }
    }

    #[test]
    fn pushforward_identity_is_identity() {
        let s = chain(&["a", "b"]);
        let x = pseudocircle();
        let hs = HomotopySet::enumerate(&s, &x, DEFAULT_BUDGET).unwrap();
        let id = MonotoneMap::new(x.clone(), x.clone(), (0..4).collect()).unwrap();
        let m = pushforward(&hs, &hs, &id, DEFAULT_BUDGET).unwrap();
        assert_eq!(m.space_map, (0..hs.class_count()).collect::<Vec<_>>());
        assert!(m.check().unwrap());
    }

    #[test]
    fn pushforward_swap_permutes_automorphism_classes() {
        let p = pseudocircle();
        let hs = HomotopySet::enumerate(&p, &p, DEFAULT_BUDGET).unwrap();
        let swap_cd = MonotoneMap::new(p.clone(), p.clone(), vec![0, 1, 3, 2]).unwrap();
        let m = pushforward(&hs, &hs, &swap_cd, DEFAULT_BUDGET).unwrap();
        assert!(m.check().unwrap());
        let const_c = hs.class_of_map(&vec![0; 4]).unwrap();
        assert_eq!(m.space_map[const_c], const_c);
        let id_c = hs.class_of_map(&[0, 1, 2, 3]).unwrap();
        let flip_c = hs.class_of_map(&[0, 1, 3, 2]).unwrap();
        assert_eq!(m.space_map[id_c], flip_c);
    }

    #[test]
    fn pushforward_constant_collapses() {
        let s = chain(&["a", "b"]);
        let x = pseudocircle();
        let hs = HomotopySet::enumerate(&s, &x, DEFAULT_BUDGET).unwrap();
        let cst = MonotoneMap::new(x.clone(), x.clone(), vec![2; 4]).unwrap();
        let m = pushforward(&hs, &hs, &cst, DEFAULT_BUDGET).unwrap();
        let target_class = hs.class_of_map(&vec![2, 2]).unwrap();
        assert!(m.space_map.iter().all(|&c| c == target_class));
    }

    #[test]
    fn pullback_identity_and_contravariance() {
        let t = pseudocircle();
        let x = chain(&["a", "b"]);
        let y = chain(&["p", "q", "r"]);
        let hs_yt = HomotopySet::enumerate(&y, &t, DEFAULT_BUDGET).unwrap();
        let hs_xt = HomotopySet::enumerate(&x, &t, DEFAULT_BUDGET).unwrap();
        let id = MonotoneMap::new(y.clone(), y.clone(), (0..3).collect()).unwrap();
        let m = pullback(&hs_yt, &hs_yt, &id, DEFAULT_BUDGET).unwrap();
        assert_eq!(m.space_map, (0..hs_yt.class_count()).collect::<Vec<_>>());

        // (h o g)^* = g^* o h^* on a small triple
        let g = MonotoneMap::new(x.clone(), y.clone(), vec![0, 2]).unwrap();
        let h = MonotoneMap::new(y.clone(), y.clone(), vec![0, 0, 2]).unwrap();
        let hg = MonotoneMap::new(x.clone(), y.clone(), compose(&h.assignment, &g.assignment))
            .unwrap();
        let m_hg = pullback(&hs_yt, &hs_xt, &hg, DEFAULT_BUDGET).unwrap();
        let m_h = pullback(&hs_yt, &hs_yt, &h, DEFAULT_BUDGET).unwrap();
        let m_g = pullback(&hs_yt, &hs_xt, &g, DEFAULT_BUDGET).unwrap();
        for c in 0..hs_yt.class_count() {
            assert_eq!(m_hg.space_map[c], m_g.space_map[m_h.space_map[c]]);
        }
        assert!(m_hg.check().unwrap());
    }

    #[test]
    fn homotopy_congruence_small() {
        // g o f classes depend only on the classes of f and g.
        let x = chain(&["a", "b"]);
        let y = pseudocircle();
        let hs_xy = HomotopySet::enumerate(&x, &y, DEFAULT_BUDGET).unwrap();
        let hs_yy = HomotopySet::enumerate(&y, &y, DEFAULT_BUDGET).unwrap();
        for f_class in &hs_xy.classes {
            for &fm in &f_class.members {
                for g_class in &hs_yy.classes {
                    for &gm in &g_class.members {
                        let composite = compose(&hs_yy.maps[gm], &hs_xy.maps[fm]);
                        let expected = compose(&g_class.representative, &f_class.representative);
                        assert_eq!(
                            hs_xy.class_of_map(&composite),
                            hs_xy.class_of_map(&expected)
                        );
                    }
                }
            }
        }
    }
}
