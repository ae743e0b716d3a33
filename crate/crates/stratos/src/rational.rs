//! Parametric map families over the rationals with monomial
//! composition laws, and the complete decision procedure for their
//! right order.
//!
//! A family abstracts a homotopy set whose classes are points of Q^k
//! and where pre-composition with a self-map multiplies coordinates by
//! monomials in the self-map parameters. Whether one point factors
//! through another is decided exactly: zero patterns are enumerated,
//! and the residual multiplicative system over Q* is solved per prime
//! through integer lattice membership.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::order::{MonotoneMap, Poset, Proset};
use crate::snf::{solve, IntMatrix};

/// `coords[i] = (source index, exponents)`: composing a point with
/// parameters sends coordinate `i` to
/// `point[source] * prod_j params[j]^exponents[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialLaw {
    pub params: usize,
    pub coords: Vec<(usize, Vec<u32>)>,
}

impl MonomialLaw {
    pub fn validate(&self, dim: usize) -> Result<()> {
        if self.coords.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "law has {} coordinates, family has {dim}",
                self.coords.len()
            )));
        }
        for (src, exps) in &self.coords {
            if *src >= dim {
                return Err(Error::InvalidInput(format!(
                    "law source index {src} out of range"
                )));
            }
            if exps.len() != self.params {
                return Err(Error::DimensionMismatch(format!(
                    "exponent vector has {} entries, law has {} parameters",
                    exps.len(),
                    self.params
                )));
            }
        }
        Ok(())
    }

    /// Laws that permute nothing act as a monoid via pointwise
    /// multiplication of parameter vectors.
    pub fn is_pointwise_action(&self) -> bool {
        self.coords.iter().enumerate().all(|(i, (s, _))| *s == i)
    }
}

#[derive(Debug, Clone)]
pub struct ParametricFamily {
    pub dim: usize,
    pub right_law: MonomialLaw,
    pub labels: Vec<String>,
    pub representatives: Vec<Vec<BigRational>>,
}

impl ParametricFamily {
    pub fn new(
        dim: usize,
        right_law: MonomialLaw,
        labels: Vec<String>,
        representatives: Vec<Vec<BigRational>>,
    ) -> Result<ParametricFamily> {
        right_law.validate(dim)?;
        if labels.len() != representatives.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} representatives",
                labels.len(),
                representatives.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        for r in &representatives {
            if r.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "representative has {} coordinates, family has {dim}",
                    r.len()
                )));
            }
        }
        Ok(ParametricFamily {
            dim,
            right_law,
            labels,
            representatives,
        })
    }
}

/// Applies the law: coordinate `i` becomes
/// `point[source(i)] * prod params^exponents(i)`.
pub fn compose_right(
    law: &MonomialLaw,
    point: &[BigRational],
    params: &[BigRational],
) -> Vec<BigRational> {
    assert_eq!(params.len(), law.params);
    law.coords
        .iter()
        .map(|(src, exps)| {
            let mut v = point[*src].clone();
            for (j, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    v *= &params[j];
                }
            }
            v
        })
        .collect()
}

/// True iff rational parameters exist with `compose_right(q, params) = p`.
pub fn leq_r(law: &MonomialLaw, p: &[BigRational], q: &[BigRational]) -> bool {
    // Coordinates sourced from a zero stay zero under any parameters.
    for (i, (src, _)) in law.coords.iter().enumerate() {
        if q[*src].is_zero() && !p[i].is_zero() {
            return false;
        }
    }
    // Enumerate which parameters vanish.
    'zero_set: for z in 0u64..(1u64 << law.params) {
        let mut active: Vec<usize> = Vec::new();
        for j in 0..law.params {
            if z >> j & 1 == 0 {
                active.push(j);
            }
        }
        let mut ratios: Vec<BigRational> = Vec::new();
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (i, (src, exps)) in law.coords.iter().enumerate() {
            if q[*src].is_zero() {
                continue; // p[i] is zero too; holds for any parameters
            }
            let killed = exps
                .iter()
                .enumerate()
                .any(|(j, &e)| e > 0 && z >> j & 1 == 1);
            if p[i].is_zero() {
                if !killed {
                    continue 'zero_set; // monomial of nonzeros cannot vanish
                }
            } else {
                if killed {
                    continue 'zero_set; // a zero parameter forces p[i] = 0
                }
                ratios.push(&p[i] / &q[*src]);
                rows.push(active.iter().map(|&j| BigInt::from(exps[j])).collect());
            }
        }
        let e = IntMatrix::from_columns(
            rows.len(),
            (0..active.len())
                .map(|c| rows.iter().map(|r| r[c].clone()).collect())
                .collect(),
        );
        if multiplicative_system_solvable(&e, &ratios) {
            return true;
        }
    }
    false
}

/// Solvability of `prod_j x_j^{e_ij} = r_i` over the nonzero rationals:
/// per prime, the valuation vector must lie in the integer image of the
/// exponent matrix; the sign pattern must be hit modulo 2.
fn multiplicative_system_solvable(e: &IntMatrix, ratios: &[BigRational]) -> bool {
    assert_eq!(e.rows, ratios.len());
    let mut primes: BTreeSet<BigInt> = BTreeSet::new();
    for r in ratios {
        collect_primes(r.numer(), &mut primes);
        collect_primes(r.denom(), &mut primes);
    }
    for prime in &primes {
        let v: Vec<BigInt> = ratios
            .iter()
            .map(|r| valuation(r.numer(), prime) - valuation(r.denom(), prime))
            .collect();
        if solve(e, &v).is_none() {
            return false;
        }
    }
    // Signs: E s + 2 t = bits over the integers iff solvable mod 2.
    let mut aug = IntMatrix::zeros(e.rows, e.cols + e.rows);
    for i in 0..e.rows {
        for j in 0..e.cols {
            aug[(i, j)] = e[(i, j)].clone();
        }
        aug[(i, e.cols + i)] = BigInt::from(2);
    }
    let bits: Vec<BigInt> = ratios
        .iter()
        .map(|r| {
            if r.is_negative() {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    solve(&aug, &bits).is_some()
}

fn collect_primes(n: &BigInt, out: &mut BTreeSet<BigInt>) {
    let mut n = n.abs();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.insert(d.clone());
            while (&n % &d).is_zero() {
                n /= &d;
            }
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.insert(n);
    }
}

fn valuation(n: &BigInt, p: &BigInt) -> BigInt {
    let mut n = n.abs();
    let mut v = BigInt::zero();
    while !n.is_zero() && (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    v
}

/// The right order among the representatives with its quotient poset.
#[derive(Debug, Clone)]
pub struct ClassReport {
    pub proset: Proset,
    pub poset: Poset,
    pub projection: MonotoneMap,
}

pub fn quotient_classes(fam: &ParametricFamily) -> Result<ClassReport> {
    let n = fam.representatives.len();
    let mut leq = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            leq[i * n + j] = leq_r(
                &fam.right_law,
                &fam.representatives[i],
                &fam.representatives[j],
            );
        }
    }
    let proset = Proset::from_matrix(fam.labels.clone(), leq)?;
    let (poset, projection) = proset.quotient_by_mutual_leq();
    Ok(ClassReport {
        proset,
        poset,
        projection,
    })
}

/// Strata of the parameter space: one stratum per quotient class, with
/// its zero pattern and the closure containments read off the order.
#[derive(Debug, Clone)]
pub struct StrataReport {
    pub classes: ClassReport,
    /// Zero pattern of a representative of each quotient class;
    /// `0` marks a zero coordinate, `*` a nonzero one.
    pub patterns: Vec<String>,
    /// `closure_contains[l][m]`: stratum `l` lies in the closure of
    /// stratum `m`, which happens exactly when `l <= m` in the quotient.
    pub closure_contains: Vec<Vec<bool>>,
}

pub fn strata_report(fam: &ParametricFamily) -> Result<StrataReport> {
    let classes = quotient_classes(fam)?;
    let k = classes.poset.len();
    let mut patterns = Vec::with_capacity(k);
    for c in 0..k {
        let rep = classes
            .projection
            .assignment
            .iter()
            .position(|&q| q == c)
            .unwrap();
        let pat: Vec<&str> = fam.representatives[rep]
            .iter()
            .map(|v| if v.is_zero() { "0" } else { "*" })
            .collect();
        patterns.push(format!("({})", pat.join(",")));
    }
    let closure_contains = (0..k)
        .map(|l| (0..k).map(|m| classes.poset.leq(l, m)).collect())
        .collect();
    Ok(StrataReport {
        classes,
        patterns,
        closure_contains,
    })
}

/// A coordinatewise-monomial map between families and its effect on the
/// quotient posets.
#[derive(Debug, Clone)]
pub struct InducedMapReport {
    pub source: ClassReport,
    pub target: ClassReport,
    /// Source quotient class -> target quotient class.
    pub class_assignment: Vec<usize>,
    pub monotone: bool,
}

/// `polymap[i]` are the exponents of the source coordinates in target
/// coordinate `i` (empty product = 1, and 0^0 = 1).
pub fn apply_polymap(polymap: &[Vec<u32>], point: &[BigRational]) -> Vec<BigRational> {
    polymap
        .iter()
        .map(|exps| {
            let mut v = BigRational::one();
            for (j, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    v *= &point[j];
                }
            }
            v
        })
        .collect()
}

pub fn induced_map(
    src: &ParametricFamily,
    dst: &ParametricFamily,
    polymap: &[Vec<u32>],
) -> Result<InducedMapReport> {
    if polymap.len() != dst.dim {
        return Err(Error::DimensionMismatch(format!(
            "polymap has {} coordinates, target family has {}",
            polymap.len(),
            dst.dim
        )));
    }
    for exps in polymap {
        if exps.len() != src.dim {
            return Err(Error::DimensionMismatch(format!(
                "polymap monomial has {} exponents, source family has {}",
                exps.len(),
                src.dim
            )));
        }
    }
    let source = quotient_classes(src)?;
    let target = quotient_classes(dst)?;
    // Locate the class of each image point among the target reps.
    let mut image_class = vec![usize::MAX; src.representatives.len()];
    for (i, rep) in src.representatives.iter().enumerate() {
        let img = apply_polymap(polymap, rep);
        let found = dst.representatives.iter().position(|r| {
            leq_r(&dst.right_law, &img, r) && leq_r(&dst.right_law, r, &img)
        });
        let Some(j) = found else {
            return Err(Error::InvalidInput(format!(
                "image of {} is not equivalent to any target representative",
                src.labels[i]
            )));
        };
        image_class[i] = target.projection.apply(j);
    }
    // Well-defined: equivalent sources must land in one class.
    let k = source.poset.len();
    let mut class_assignment = vec![usize::MAX; k];
    for (i, &cls) in source.projection.assignment.iter().enumerate() {
        if class_assignment[cls] == usize::MAX {
            class_assignment[cls] = image_class[i];
        } else if class_assignment[cls] != image_class[i] {
            let first = source
                .projection
                .assignment
                .iter()
                .position(|&c| c == cls)
                .unwrap();
            return Err(Error::NotWellDefined(
                src.labels[first].clone(),
                src.labels[i].clone(),
            ));
        }
    }
    let mut monotone = true;
    for a in 0..k {
        for b in 0..k {
            if source.poset.leq(a, b) && !target.poset.leq(class_assignment[a], class_assignment[b])
            {
                monotone = false;
            }
        }
    }
    Ok(InducedMapReport {
        source,
        target,
        class_assignment,
        monotone,
    })
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn standard_reps() -> Vec<Vec<BigRational>> {
    vec![
        vec![rat(0), rat(0)],
        vec![rat(1), rat(0)],
        vec![rat(0), rat(1)],
        vec![rat(1), rat(1)],
    ]
}

/// Componentwise law: `(a,b) . (c,d) = (ac, bd)`.
pub fn example_law1() -> ParametricFamily {
    ParametricFamily::new(
        2,
        MonomialLaw {
            params: 2,
            coords: vec![(0, vec![1, 0]), (1, vec![0, 1])],
        },
        vec!["alpha".into(), "beta".into(), "gamma".into(), "delta".into()],
        standard_reps(),
    )
    .unwrap()
}

/// Twisted law: `(a,b) . (c,d) = (ac, bcd)`.
pub fn example_law2() -> ParametricFamily {
    ParametricFamily::new(
        2,
        MonomialLaw {
            params: 2,
            coords: vec![(0, vec![1, 0]), (1, vec![1, 1])],
        },
        vec![
            "alpha'".into(),
            "beta'".into(),
            "gamma'".into(),
            "delta'".into(),
        ],
        standard_reps(),
    )
    .unwrap()
}

/// The map `(a,b) -> (a, ab)` carrying the first family to the second.
pub fn example_polymap() -> Vec<Vec<u32>> {
    vec![vec![1, 0], vec![1, 1]]
}
