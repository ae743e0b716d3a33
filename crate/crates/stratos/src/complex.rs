//! Order complexes of posets and their integral (co)homology.
//!
//! The homology of a finite space is the simplicial homology of the
//! complex whose simplices are the nonempty chains of its quotient
//! poset. Groups are computed from Smith normal forms of the boundary
//! matrices, keeping explicit cycle generators so induced maps come out
//! as honest matrices.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::abgrp::{AbHom, FgAbGroup, Subgroup};
use crate::error::{Error, Result};
use crate::homotopy::{Flavor, HomotopySet};
use crate::order::{Poset, Proset};
use crate::snf::{smith_normal_form, IntMatrix, Snf};

/// Simplices are chains, stored with vertices in increasing poset order.
#[derive(Debug, Clone)]
pub struct OrderComplex {
    pub poset: Poset,
    /// `simplices[d]` lists the d-simplices, lexicographically sorted.
    pub simplices: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl OrderComplex {
    pub fn new(poset: Poset) -> OrderComplex {
        let n = poset.len();
        let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
        let mut frontier: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        while !frontier.is_empty() {
            frontier.sort();
            let mut next = Vec::new();
            for chain in &frontier {
                let top = *chain.last().unwrap();
                for w in 0..n {
                    if w != top && poset.leq(top, w) {
                        let mut ext = chain.clone();
                        ext.push(w);
                        next.push(ext);
                    }
                }
            }
            by_dim.push(frontier);
            frontier = next;
        }
        let index = by_dim
            .iter()
            .map(|level| {
                level
                    .iter()
                    .enumerate()
                    .map(|(i, s)| (s.clone(), i))
                    .collect()
            })
            .collect();
        OrderComplex {
            poset,
            simplices: by_dim,
            index,
        }
    }

    /// Top dimension present.
    pub fn dim(&self) -> usize {
        self.simplices.len().saturating_sub(1)
    }

    pub fn count(&self, d: usize) -> usize {
        self.simplices.get(d).map_or(0, |v| v.len())
    }

    pub fn simplex_index(&self, d: usize, simplex: &[usize]) -> Option<usize> {
        self.index.get(d)?.get(simplex).copied()
    }

    /// Boundary `C_d -> C_(d-1)`; for `d = 0` a `0 x |C_0|` matrix.
    pub fn boundary(&self, d: usize) -> IntMatrix {
        if d == 0 {
            return IntMatrix::zeros(0, self.count(0));
        }
        let mut m = IntMatrix::zeros(self.count(d - 1), self.count(d));
        for (j, simplex) in self.simplices.get(d).into_iter().flatten().enumerate() {
            let mut sign = BigInt::one();
            for omit in 0..simplex.len() {
                let mut face: Vec<usize> = simplex.clone();
                face.remove(omit);
                let i = self.simplex_index(d - 1, &face).unwrap();
                m[(i, j)] += &sign;
                sign = -sign;
            }
        }
        m
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, level)| {
                let c = level.len() as i64;
                if d % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum()
    }

    /// Matrix of the simplicial map induced by a monotone vertex map;
    /// degenerate images collapse to zero.
    pub fn chain_map(&self, target: &OrderComplex, f: &[usize], d: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(target.count(d), self.count(d));
        for (j, simplex) in self.simplices.get(d).into_iter().flatten().enumerate() {
            let image: Vec<usize> = simplex.iter().map(|&v| f[v]).collect();
            if image.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let i = target
                .simplex_index(d, &image)
                .expect("image of a chain is a chain");
            m[(i, j)] = BigInt::one();
        }
        m
    }
}

/// One homology (or cohomology) group with generating cycles and the
/// change of basis needed to read off coordinates of arbitrary cycles.
#[derive(Debug, Clone)]
pub struct GroupAt {
    pub group: FgAbGroup,
    /// Columns are generating cycles in chain coordinates, free
    /// generators first, then torsion generators.
    pub generators: IntMatrix,
    kernel: IntMatrix,
    kernel_snf: Snf,
    um: IntMatrix,
    diag: Vec<BigInt>,
    free_rows: Vec<usize>,
    torsion_rows: Vec<usize>,
}

impl GroupAt {
    /// `out`: the map leaving this degree; `into`: the map landing here.
    fn from_maps(out: &IntMatrix, into: &IntMatrix) -> GroupAt {
        let dim = out.cols;
        assert_eq!(into.rows, dim);
        let out_snf = smith_normal_form(out);
        let rank_out = out_snf.rank();
        let kernel_cols: Vec<Vec<BigInt>> =
            (rank_out..dim).map(|j| out_snf.v.column(j)).collect();
        let kernel = IntMatrix::from_columns(dim, kernel_cols);
        let kernel_snf = smith_normal_form(&kernel);
        let k = kernel.cols;

        // Express the incoming image in kernel coordinates.
        let mut rel_cols: Vec<Vec<BigInt>> = Vec::new();
        for j in 0..into.cols {
            let b = into.column(j);
            let x = solve_full_rank(&kernel_snf, &b)
                .expect("boundary image must lie in the cycle lattice");
            rel_cols.push(x);
        }
        let relations = IntMatrix::from_columns(k, rel_cols);
        let msnf = smith_normal_form(&relations);
        let mut diag: Vec<BigInt> = msnf.diagonal();
        diag.resize(k, BigInt::zero());

        let mut free_rows = Vec::new();
        let mut torsion_rows = Vec::new();
        for (i, d) in diag.iter().enumerate() {
            if d.is_zero() {
                free_rows.push(i);
            } else if !d.is_one() {
                torsion_rows.push(i);
            }
        }
        let torsion: Vec<BigInt> = torsion_rows.iter().map(|&i| diag[i].clone()).collect();
        let group = FgAbGroup::new(free_rows.len(), torsion).expect("chain is ordered");

        // Generators: kernel basis times the inverse change of basis.
        let gen_source = kernel.mul(&msnf.uinv);
        let cols: Vec<Vec<BigInt>> = free_rows
            .iter()
            .chain(torsion_rows.iter())
            .map(|&i| gen_source.column(i))
            .collect();
        let generators = IntMatrix::from_columns(dim, cols);

        GroupAt {
            group,
            generators,
            kernel,
            kernel_snf,
            um: msnf.u,
            diag,
            free_rows,
            torsion_rows,
        }
    }

    fn trivial() -> GroupAt {
        let z = IntMatrix::zeros(0, 0);
        GroupAt {
            group: FgAbGroup::trivial(),
            generators: IntMatrix::zeros(0, 0),
            kernel: z.clone(),
            kernel_snf: smith_normal_form(&z),
            um: IntMatrix::zeros(0, 0),
            diag: Vec::new(),
            free_rows: Vec::new(),
            torsion_rows: Vec::new(),
        }
    }

    /// Coordinates of a cycle in the group presentation; `None` if the
    /// chain is not a cycle.
    pub fn coords_of_cycle(&self, z: &[BigInt]) -> Option<Vec<BigInt>> {
        if self.kernel.cols == 0 {
            return z.iter().all(|v| v.is_zero()).then(Vec::new);
        }
        let x = solve_full_rank(&self.kernel_snf, z)?;
        let y = self.um.mul_vec(&x);
        let mut coords = Vec::with_capacity(self.group.dims());
        for &i in &self.free_rows {
            coords.push(y[i].clone());
        }
        for &i in &self.torsion_rows {
            let d = &self.diag[i];
            let mut r = &y[i] % d;
            if r.is_negative() {
                r += d;
            }
            coords.push(r);
        }
        Some(coords)
    }
}

/// Unique solution of `K x = b` for a full-column-rank `K`, if any.
fn solve_full_rank(ksnf: &Snf, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let ub = ksnf.u.mul_vec(b);
    let cols = ksnf.s.cols;
    let mut y = vec![BigInt::zero(); cols];
    for i in 0..ksnf.s.rows {
        if i < cols && !ksnf.s[(i, i)].is_zero() {
            let q = &ub[i] / &ksnf.s[(i, i)];
            if !(&ub[i] - &q * &ksnf.s[(i, i)]).is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ub[i].is_zero() {
            return None;
        }
    }
    Some(ksnf.v.mul_vec(&y))
}

/// Which differential direction the complex is read in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    Homology,
    Cohomology,
}

/// All (co)homology groups of an order complex.
#[derive(Debug, Clone)]
pub struct Homology {
    pub complex: OrderComplex,
    pub variance: Variance,
    groups: Vec<GroupAt>,
}

impl Homology {
    pub fn of_poset(poset: Poset, variance: Variance) -> Homology {
        let complex = OrderComplex::new(poset);
        let top = complex.dim();
        let boundaries: Vec<IntMatrix> = (0..=top + 1)
            .map(|d| {
                if d <= top {
                    complex.boundary(d)
                } else {
                    IntMatrix::zeros(complex.count(top), 0)
                }
            })
            .collect();
        let groups = (0..=top)
            .map(|d| match variance {
                Variance::Homology => GroupAt::from_maps(&boundaries[d], &boundaries[d + 1]),
                Variance::Cohomology => GroupAt::from_maps(
                    &boundaries[d + 1].transpose(),
                    &boundaries[d].transpose(),
                ),
            })
            .collect();
        Homology {
            complex,
            variance,
            groups,
        }
    }

    /// Quotients a proset to its poset model first.
    pub fn of_proset(p: &Proset, variance: Variance) -> Homology {
        let (poset, _) = p.quotient_by_mutual_leq();
        Homology::of_poset(poset, variance)
    }

    pub fn group(&self, degree: usize) -> FgAbGroup {
        self.groups
            .get(degree)
            .map_or_else(FgAbGroup::trivial, |g| g.group.clone())
    }

    fn at(&self, degree: usize) -> Option<&GroupAt> {
        self.groups.get(degree)
    }
}

/// The induced map in a single degree. For homology the vertex map runs
/// source -> target; for cohomology the same vertex map induces a map
/// the other way, so `domain` is the target's group.
pub fn induced_hom(
    source: &Homology,
    target: &Homology,
    vertex_map: &[usize],
    degree: usize,
) -> Result<AbHom> {
    if source.variance != target.variance {
        return Err(Error::InvalidInput("mixed variance".into()));
    }
    let (dom_h, cod_h) = match source.variance {
        Variance::Homology => (source, target),
        Variance::Cohomology => (target, source),
    };
    let dom = dom_h.group(degree);
    let cod = cod_h.group(degree);
    let trivial = GroupAt::trivial();
    let dom_at = dom_h.at(degree).unwrap_or(&trivial);
    let cod_at = cod_h.at(degree).unwrap_or(&trivial);
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    if !dom.is_trivial() && degree <= source.complex.dim() && degree <= target.complex.dim() {
        let chain = source
            .complex
            .chain_map(&target.complex, vertex_map, degree);
        let chain = match source.variance {
            Variance::Homology => chain,
            Variance::Cohomology => chain.transpose(),
        };
        for j in 0..dom_at.generators.cols {
            let image = chain.mul_vec(&dom_at.generators.column(j));
            let coords = cod_at
                .coords_of_cycle(&image)
                .ok_or_else(|| Error::InvalidInput("image of a cycle is not a cycle".into()))?;
            cols.push(coords);
        }
    } else {
        cols = vec![vec![BigInt::zero(); cod.dims()]; dom.dims()];
    }
    AbHom::new(dom, cod, IntMatrix::from_columns(cod_at.group.dims(), cols))
}

/// Image ordering of a homotopy set through (co)homology in one degree.
#[derive(Debug, Clone)]
pub struct ImageOrderReport {
    pub flavor: Flavor,
    pub degree: usize,
    pub ambient: FgAbGroup,
    /// Image subgroup per homotopy class, in class order.
    pub images: Vec<Subgroup>,
    /// `[f] <= [g]` pairs whose images fail the inclusion; must be
    /// empty by the theory.
    pub violations: Vec<(usize, usize)>,
    pub monotone: bool,
    /// Mutually comparable classes got equal images.
    pub well_defined_on_quotient: bool,
}

/// Assigns each class of `hs` its image subgroup (homology images
/// against the right preorder, cohomology images against the left) and
/// verifies monotonicity.
pub fn image_order(hs: &HomotopySet, flavor: Flavor, degree: usize, budget: u128) -> Result<ImageOrderReport> {
    let variance = match flavor {
        Flavor::R => Variance::Homology,
        Flavor::L => Variance::Cohomology,
        Flavor::LR => {
            return Err(Error::InvalidInput(
                "image ordering is defined for the R and L flavors".into(),
            ))
        }
    };
    let (src_poset, src_proj) = hs.source.quotient_by_mutual_leq();
    let (tgt_poset, tgt_proj) = hs.target.quotient_by_mutual_leq();
    let src_h = Homology::of_poset(src_poset.clone(), variance);
    let tgt_h = Homology::of_poset(tgt_poset.clone(), variance);
    let ambient = match flavor {
        Flavor::R => tgt_h.group(degree),
        Flavor::L => src_h.group(degree),
        Flavor::LR => unreachable!(),
    };
    let mut images = Vec::with_capacity(hs.class_count());
    for c in 0..hs.class_count() {
        let rep = &hs.classes[c].representative;
        // Descend the vertex map to the poset models.
        let mut descended = vec![0usize; src_poset.len()];
        for (i, &img) in rep.iter().enumerate() {
            descended[src_proj.apply(i)] = tgt_proj.apply(img);
        }
        let hom = induced_hom(&src_h, &tgt_h, &descended, degree)?;
        images.push(hom.image());
    }
    let pre = hs.preorder(flavor, budget)?;
    let mut violations = Vec::new();
    for f in 0..hs.class_count() {
        for g in 0..hs.class_count() {
            if pre.leq(f, g) && !images[f].leq(&images[g])? {
                violations.push((f, g));
            }
        }
    }
    let mut well_defined = true;
    for f in 0..hs.class_count() {
        for g in 0..hs.class_count() {
            if pre.leq(f, g) && pre.leq(g, f) && images[f] != images[g] {
                well_defined = false;
            }
        }
    }
    Ok(ImageOrderReport {
        flavor,
        degree,
        ambient,
        images,
        monotone: violations.is_empty(),
        violations,
        well_defined_on_quotient: well_defined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexandroff::{circle_model, pseudocircle};
    use crate::homotopy::DEFAULT_BUDGET;
    use crate::order::MonotoneMap;

    fn poset_of(p: &Proset) -> Poset {
        p.clone().into_poset().unwrap()
    }

    #[test]
    fn order_complex_of_two_chain() {
        let p = Proset::from_generating_pairs(&["a", "b"], &[("a", "b")]).unwrap();
        let c = OrderComplex::new(poset_of(&p));
        assert_eq!(c.count(0), 2);
        assert_eq!(c.count(1), 1);
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn order_complex_of_pseudocircle_is_a_circle() {
        let c = OrderComplex::new(poset_of(&pseudocircle()));
        assert_eq!(c.count(0), 4);
        assert_eq!(c.count(1), 4);
        assert_eq!(c.count(2), 0);
        assert_eq!(c.euler_characteristic(), 0);
    }

    #[test]
    fn order_complex_of_antichain() {
        let p = Proset::from_generating_pairs::<&str>(&["a", "b", "c"], &[]).unwrap();
        let c = OrderComplex::new(poset_of(&p));
        assert_eq!(c.count(0), 3);
        assert_eq!(c.dim(), 0);
    }

    #[test]
    fn homology_of_point() {
        let p = Proset::from_generating_pairs::<&str>(&["x"], &[]).unwrap();
        let h = Homology::of_proset(&p, Variance::Homology);
        assert_eq!(h.group(0), FgAbGroup::free(1));
        assert!(h.group(1).is_trivial());
        assert!(h.group(5).is_trivial());
    }

    #[test]
    fn homology_of_pseudocircle() {
        let h = Homology::of_proset(&pseudocircle(), Variance::Homology);
        assert_eq!(h.group(0), FgAbGroup::free(1));
        assert_eq!(h.group(1), FgAbGroup::free(1));
        assert!(h.group(2).is_trivial());
    }

    #[test]
    fn homology_of_eight_point_circle() {
        let h = Homology::of_proset(&circle_model(4), Variance::Homology);
        assert_eq!(h.group(0), FgAbGroup::free(1));
        assert_eq!(h.group(1), FgAbGroup::free(1));
    }

    #[test]
    fn cohomology_of_pseudocircle() {
        let h = Homology::of_proset(&pseudocircle(), Variance::Cohomology);
        assert_eq!(h.group(0), FgAbGroup::free(1));
        assert_eq!(h.group(1), FgAbGroup::free(1));
    }

    #[test]
    fn identity_induces_identity() {
        let p = pseudocircle();
        let h = Homology::of_proset(&p, Variance::Homology);
        let hom = induced_hom(&h, &h, &[0, 1, 2, 3], 1).unwrap();
        assert_eq!(hom.matrix, IntMatrix::identity(1));
    }

    #[test]
    fn constant_induces_zero_on_h1() {
        let p = pseudocircle();
        let h = Homology::of_proset(&p, Variance::Homology);
        let hom = induced_hom(&h, &h, &[0, 0, 0, 0], 1).unwrap();
        assert!(hom.image().is_trivial());
    }

    #[test]
    fn double_cover_induces_multiplication_by_two() {
        let c8 = circle_model(4);
        let c4 = circle_model(2);
        let h8 = Homology::of_proset(&c8, Variance::Homology);
        let h4 = Homology::of_proset(&c4, Variance::Homology);
        let dbl = vec![0, 1, 0, 1, 2, 3, 2, 3];
        assert!(MonotoneMap::is_monotone(&c8, &c4, &dbl));
        let hom = induced_hom(&h8, &h4, &dbl, 1).unwrap();
        let entry = &hom.matrix[(0, 0)];
        assert!(
            entry == &BigInt::from(2) || entry == &BigInt::from(-2),
            "got {entry}"
        );
        assert_eq!(hom.image(), crate::abgrp::cyclic_subgroup_of_z(2));
    }

    #[test]
    fn functoriality_of_induced_maps() {
        let p = pseudocircle();
        let h = Homology::of_proset(&p, Variance::Homology);
        let swap = vec![0usize, 1, 3, 2];
        let both = vec![1usize, 0, 3, 2];
        let composed: Vec<usize> = (0..4).map(|i| swap[both[i]]).collect();
        let a = induced_hom(&h, &h, &swap, 1).unwrap();
        let b = induced_hom(&h, &h, &both, 1).unwrap();
        let ab = induced_hom(&h, &h, &composed, 1).unwrap();
        assert_eq!(a.compose(&b).unwrap().matrix, ab.matrix);
    }

    #[test]
    fn image_order_on_pseudocircle_self_maps() {
        let p = pseudocircle();
        let hs = HomotopySet::enumerate(&p, &p, DEFAULT_BUDGET).unwrap();
        let report = image_order(&hs, Flavor::R, 1, DEFAULT_BUDGET).unwrap();
        assert!(report.monotone, "{:?}", report.violations);
        assert!(report.well_defined_on_quotient);
        assert_eq!(report.ambient, FgAbGroup::free(1));
        let const_c = hs.class_of_map(&vec![0; 4]).unwrap();
        let id_c = hs.class_of_map(&[0, 1, 2, 3]).unwrap();
        assert!(report.images[const_c].is_trivial());
        assert_eq!(
            report.images[id_c],
            Subgroup::full(FgAbGroup::free(1))
        );
    }

    #[test]
    fn image_order_cohomology_flavor_l() {
        let p = pseudocircle();
        let hs = HomotopySet::enumerate(&p, &p, DEFAULT_BUDGET).unwrap();
        let report = image_order(&hs, Flavor::L, 1, DEFAULT_BUDGET).unwrap();
        assert!(report.monotone);
        assert!(report.well_defined_on_quotient);
    }

    #[test]
    fn euler_characteristic_matches_homology_ranks() {
        let p = pseudocircle();
        let h = Homology::of_proset(&p, Variance::Homology);
        let mut chi = 0i64;
        for d in 0..=h.complex.dim() {
            let r = h.group(d).rank as i64;
            chi += if d % 2 == 0 { r } else { -r };
        }
        assert_eq!(chi, h.complex.euler_characteristic());
    }
}
