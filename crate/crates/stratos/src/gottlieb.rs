//! Evaluation subgroups and a Lusternik–Schnirelmann-style category for
//! maps of finite spaces.
//!
//! The homotopy class of a map `f` is a subposet of the pointwise order
//! on all monotone maps; evaluating at a basepoint is monotone on that
//! subposet, and its induced image in homology is the abelianized
//! evaluation subgroup. The category of `f` is the least number of open
//! sets, minus one, covering the source with `f` nullhomotopic on each.

use crate::abgrp::Subgroup;
use crate::alexandroff::Space;
use crate::complex::{induced_hom, Homology, Variance};
use crate::error::{Error, Result};
use crate::homotopy::{Flavor, HomotopySet};
use crate::order::{MonotoneMap, Proset};

/// The pointwise-order subposet formed by the members of one homotopy
/// class. Elements are in member order.
pub fn class_proset(hs: &HomotopySet, class: usize) -> Proset {
    let members = &hs.classes[class].members;
    let labels: Vec<String> = members
        .iter()
        .map(|&m| {
            hs.maps[m]
                .iter()
                .map(|&y| hs.target.label(y))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    let k = members.len();
    let mut leq = vec![false; k * k];
    for (ai, &ma) in members.iter().enumerate() {
        for (bi, &mb) in members.iter().enumerate() {
            leq[ai * k + bi] = hs.maps[ma]
                .iter()
                .zip(&hs.maps[mb])
                .all(|(&u, &v)| hs.target.leq(u, v));
        }
    }
    Proset::from_matrix(labels, leq).expect("pointwise order is a proset")
}

/// Image of evaluation at `basepoint` on the class of `f`, taken in the
/// degree-`degree` homology of the target.
pub fn evaluation_subgroup(
    hs: &HomotopySet,
    class: usize,
    basepoint: usize,
    degree: usize,
) -> Result<Subgroup> {
    if class >= hs.class_count() {
        return Err(Error::InvalidInput(format!("no class {class}")));
    }
    if basepoint >= hs.source.len() {
        return Err(Error::PointOutsideSpace(format!(
            "basepoint index {basepoint}"
        )));
    }
    let comp = class_proset(hs, class);
    let (cp, cproj) = comp.quotient_by_mutual_leq();
    let (tp, tproj) = hs.target.quotient_by_mutual_leq();
    let hc = Homology::of_poset(cp.clone(), Variance::Homology);
    let ht = Homology::of_poset(tp, Variance::Homology);
    let members = &hs.classes[class].members;
    let mut ev = vec![0usize; cp.len()];
    for (i, &m) in members.iter().enumerate() {
        ev[cproj.apply(i)] = tproj.apply(hs.maps[m][basepoint]);
    }
    Ok(induced_hom(&hc, &ht, &ev, degree)?.image())
}

/// Evaluation subgroups of every class against one of the preorders.
/// The expected shape is order-reversing: a larger class has a smaller
/// evaluation subgroup. Failures are reported, not assumed away, since
/// the reversal is only guaranteed for witnesses fixing the basepoint.
#[derive(Debug, Clone)]
pub struct EvaluationOrderReport {
    pub flavor: Flavor,
    pub degree: usize,
    pub basepoint: usize,
    pub subgroups: Vec<Subgroup>,
    /// Pairs `[f] <= [g]` where the subgroup of `g` is not contained in
    /// the subgroup of `f`.
    pub violations: Vec<(usize, usize)>,
    pub order_reversing: bool,
}

pub fn evaluation_order(
    hs: &HomotopySet,
    flavor: Flavor,
    basepoint: usize,
    degree: usize,
    budget: u128,
) -> Result<EvaluationOrderReport> {
    let subgroups: Vec<Subgroup> = (0..hs.class_count())
        .map(|c| evaluation_subgroup(hs, c, basepoint, degree))
        .collect::<Result<_>>()?;
    let pre = hs.preorder(flavor, budget)?;
    let mut violations = Vec::new();
    for f in 0..hs.class_count() {
        for g in 0..hs.class_count() {
            if pre.leq(f, g) && !subgroups[g].leq(&subgroups[f])? {
                violations.push((f, g));
            }
        }
    }
    Ok(EvaluationOrderReport {
        flavor,
        degree,
        basepoint,
        order_reversing: violations.is_empty(),
        subgroups,
        violations,
    })
}

/// Restriction of a proset to the points of a bitset, keeping labels.
fn restrict_proset(p: &Proset, set: u64) -> (Proset, Vec<usize>) {
    let idx: Vec<usize> = (0..p.len()).filter(|&i| set >> i & 1 == 1).collect();
    let labels: Vec<String> = idx.iter().map(|&i| p.label(i).to_owned()).collect();
    let k = idx.len();
    let mut leq = vec![false; k * k];
    for (a, &i) in idx.iter().enumerate() {
        for (b, &j) in idx.iter().enumerate() {
            leq[a * k + b] = p.leq(i, j);
        }
    }
    (
        Proset::from_matrix(labels, leq).expect("restriction of a proset"),
        idx,
    )
}

/// Whether the restriction of `f` to the points of `set` is homotopic
/// to a constant map into the target.
pub fn is_nullhomotopic_on(
    source: &Proset,
    target: &Proset,
    f: &[usize],
    set: u64,
    budget: u128,
) -> Result<bool> {
    if set == 0 {
        return Ok(true);
    }
    let (sub, idx) = restrict_proset(source, set);
    let f_sub: Vec<usize> = idx.iter().map(|&i| f[i]).collect();
    let hs = HomotopySet::enumerate(&sub, target, budget)?;
    let c = hs
        .class_of_map(&f_sub)
        .ok_or_else(|| Error::InvalidInput("restricted map is not monotone".into()))?;
    Ok(hs.classes[c]
        .members
        .iter()
        .any(|&m| hs.maps[m].windows(2).all(|w| w[0] == w[1])))
}

/// An optimal categorical cover: `value = cover.len() - 1`.
#[derive(Debug, Clone)]
pub struct CatResult {
    pub value: usize,
    /// Open sets as bitsets, in increasing order.
    pub cover: Vec<u64>,
}

/// Least `n` such that `n + 1` opens cover the source with `f`
/// nullhomotopic on each, by exact search over maximal usable opens.
pub fn cat_of_map(
    source: &Proset,
    target: &Proset,
    f: &[usize],
    budget: u128,
) -> Result<CatResult> {
    if !MonotoneMap::is_monotone(source, target, f) {
        return Err(Error::NotMonotone(
            "map".into(),
            "is not monotone on its source".into(),
        ));
    }
    if source.is_empty() {
        return Ok(CatResult {
            value: 0,
            cover: Vec::new(),
        });
    }
    if source.len() > 22 {
        return Err(Error::InvalidInput(format!(
            "open-set family too large to search ({} points)",
            source.len()
        )));
    }
    let space = Space::from_proset(source);
    let full = space.full_set();
    let mut good: Vec<u64> = Vec::new();
    for &u in space.opens() {
        if u != 0 && is_nullhomotopic_on(source, target, f, u, budget)? {
            good.push(u);
        }
    }
    // Only maximal usable opens matter for an optimal cover.
    let maximal: Vec<u64> = good
        .iter()
        .copied()
        .filter(|&u| !good.iter().any(|&v| v != u && v & u == u))
        .collect();
    debug_assert_eq!(maximal.iter().fold(0, |acc, &u| acc | u), full);

    // Greedy bound first, then exact branch and bound.
    let mut best: Vec<u64> = Vec::new();
    let mut covered = 0u64;
    while covered != full {
        let pick = *maximal
            .iter()
            .max_by_key(|&&u| (u & !covered).count_ones())
            .unwrap();
        covered |= pick;
        best.push(pick);
    }
    let mut chosen: Vec<u64> = Vec::new();
    cover_search(&maximal, full, 0, &mut chosen, &mut best);
    best.sort_unstable();
    Ok(CatResult {
        value: best.len() - 1,
        cover: best,
    })
}

fn cover_search(opens: &[u64], full: u64, covered: u64, chosen: &mut Vec<u64>, best: &mut Vec<u64>) {
    if covered == full {
        if chosen.len() < best.len() {
            *best = chosen.clone();
        }
        return;
    }
    if chosen.len() + 1 >= best.len() {
        return;
    }
    let point = (!covered & full).trailing_zeros();
    for &u in opens {
        if u >> point & 1 == 1 {
            chosen.push(u);
            cover_search(opens, full, covered | u, chosen, best);
            chosen.pop();
        }
    }
}

/// Category of every class, compared against one of the preorders.
#[derive(Debug, Clone)]
pub struct CatDescentReport {
    pub flavor: Flavor,
    pub values: Vec<usize>,
    pub violations: Vec<(usize, usize)>,
    pub descends: bool,
}

pub fn cat_descends(hs: &HomotopySet, flavor: Flavor, budget: u128) -> Result<CatDescentReport> {
    let values: Vec<usize> = (0..hs.class_count())
        .map(|c| {
            cat_of_map(
                &hs.source,
                &hs.target,
                &hs.classes[c].representative,
                budget,
            )
            .map(|r| r.value)
        })
        .collect::<Result<_>>()?;
    let pre = hs.preorder(flavor, budget)?;
    let mut violations = Vec::new();
    for f in 0..hs.class_count() {
        for g in 0..hs.class_count() {
            if pre.leq(f, g) && values[f] > values[g] {
                violations.push((f, g));
            }
        }
    }
    Ok(CatDescentReport {
        flavor,
        values,
        descends: violations.is_empty(),
        violations,
    })
}
