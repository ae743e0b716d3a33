//! Dense linear algebra over a prime field, for the fast coefficient
//! mode: homology dimensions and image-subspace comparisons without
//! integer normal forms.

use num_traits::ToPrimitive;

use crate::complex::OrderComplex;
use crate::error::{Error, Result};
use crate::homotopy::{Flavor, HomotopySet};
use crate::snf::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMat {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: p is prime and a nonzero mod p.
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

impl FpMat {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> FpMat {
        FpMat {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_int(p: u64, a: &IntMatrix) -> FpMat {
        let mut m = FpMat::zeros(p, a.rows, a.cols);
        let pi = num_bigint::BigInt::from(p);
        for i in 0..a.rows {
            for j in 0..a.cols {
                let mut r = &a[(i, j)] % &pi;
                if r.sign() == num_bigint::Sign::Minus {
                    r += &pi;
                }
                m[(i, j)] = r.to_u64().unwrap();
            }
        }
        m
    }

    pub fn hstack(&self, other: &FpMat) -> FpMat {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.p, other.p);
        let mut m = FpMat::zeros(self.p, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)];
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)];
            }
        }
        m
    }

    pub fn mul(&self, other: &FpMat) -> FpMat {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let p = self.p as u128;
        let mut out = FpMat::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)] == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = (out[(i, j)] as u128 + self[(i, k)] as u128 * other[(k, j)] as u128 % p)
                        % p;
                    out[(i, j)] = v as u64;
                }
            }
        }
        out
    }

    /// Row echelon in place; returns the pivot columns.
    fn echelon(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(r) = (row..self.rows).find(|&r| self[(r, col)] != 0) else {
                continue;
            };
            for j in 0..self.cols {
                let t = self[(row, j)];
                self[(row, j)] = self[(r, j)];
                self[(r, j)] = t;
            }
            let inv = inv_mod(self[(row, col)], p);
            for j in 0..self.cols {
                self[(row, j)] = (self[(row, j)] as u128 * inv as u128 % p as u128) as u64;
            }
            for r2 in 0..self.rows {
                if r2 != row && self[(r2, col)] != 0 {
                    let f = self[(r2, col)];
                    for j in 0..self.cols {
                        let v = (self[(r2, j)] as u128 + (p as u128 - f as u128)
                            * self[(row, j)] as u128)
                            % p as u128;
                        self[(r2, j)] = v as u64;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().echelon().len()
    }

    /// Basis of the right kernel, as columns.
    pub fn kernel(&self) -> FpMat {
        let mut e = self.clone();
        let pivots = e.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = FpMat::zeros(self.p, self.cols, free.len());
        for (bi, &fc) in free.iter().enumerate() {
            k[(fc, bi)] = 1;
            for (ri, &pc) in pivots.iter().enumerate() {
                let v = e[(ri, fc)];
                if v != 0 {
                    k[(pc, bi)] = self.p - v;
                }
            }
        }
        k
    }

    /// Column-space inclusion: every column of `other` in our span.
    pub fn contains_columns(&self, other: &FpMat) -> bool {
        self.rank() == self.hstack(other).rank()
    }
}

impl std::ops::Index<(usize, usize)> for FpMat {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FpMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Dimension of the degree-`d` homology of an order complex over F_p.
pub fn homology_dim(complex: &OrderComplex, degree: usize, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if degree > complex.dim() {
        return Ok(0);
    }
    let out = FpMat::from_int(p, &complex.boundary(degree));
    let nullity = complex.count(degree) - out.rank();
    let rank_in = if degree + 1 <= complex.dim() {
        FpMat::from_int(p, &complex.boundary(degree + 1)).rank()
    } else {
        0
    };
    Ok(nullity - rank_in)
}

/// Image ordering over F_p. Image subspaces are compared inside the
/// chain space after adjoining the boundaries, which is equivalent to
/// comparing them in homology since both sides contain the boundaries.
#[derive(Debug, Clone)]
pub struct FpImageOrderReport {
    pub flavor: Flavor,
    pub degree: usize,
    pub p: u64,
    pub ambient_dim: usize,
    /// Image dimension in homology, per class.
    pub image_dims: Vec<usize>,
    pub violations: Vec<(usize, usize)>,
    pub monotone: bool,
}

pub fn image_order(
    hs: &HomotopySet,
    flavor: Flavor,
    degree: usize,
    p: u64,
    budget: u128,
) -> Result<FpImageOrderReport> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if flavor == Flavor::LR {
        return Err(Error::InvalidInput(
            "image ordering is defined for the R and L flavors".into(),
        ));
    }
    let (src_poset, src_proj) = hs.source.quotient_by_mutual_leq();
    let (tgt_poset, tgt_proj) = hs.target.quotient_by_mutual_leq();
    let cx = OrderComplex::new(src_poset);
    let cy = OrderComplex::new(tgt_poset);
    // For the left flavor everything is transposed: cocycles of the
    // target map into cochains of the source.
    let (dom, cod) = match flavor {
        Flavor::R => (&cx, &cy),
        _ => (&cy, &cx),
    };
    let boundary_fp = |c: &OrderComplex, d: usize, transpose: bool| -> FpMat {
        let m = if d <= c.dim() {
            c.boundary(d)
        } else {
            IntMatrix::zeros(c.count(d - 1), 0)
        };
        let m = if transpose { m.transpose() } else { m };
        FpMat::from_int(p, &m)
    };
    let transposed = flavor == Flavor::L;
    // Outgoing differential on the domain side, incoming on the codomain.
    let dom_out = if transposed {
        boundary_fp(dom, degree + 1, true)
    } else {
        boundary_fp(dom, degree, false)
    };
    let cod_in = if transposed {
        boundary_fp(cod, degree, true)
    } else {
        boundary_fp(cod, degree + 1, false)
    };
    let cycles = if degree <= dom.dim() {
        dom_out.kernel()
    } else {
        FpMat::zeros(p, 0, 0)
    };
    let cod_dim = if degree <= cod.dim() {
        cod.count(degree)
    } else {
        0
    };
    let cod_out = if transposed {
        boundary_fp(cod, degree + 1, true)
    } else {
        boundary_fp(cod, degree, false)
    };
    let boundary_rank = cod_in.rank();
    let ambient_dim = if degree <= cod.dim() {
        cod_dim - cod_out.rank() - boundary_rank
    } else {
        0
    };

    let mut images: Vec<FpMat> = Vec::with_capacity(hs.class_count());
    for c in 0..hs.class_count() {
        let rep = &hs.classes[c].representative;
        let mut descended = vec![0usize; cx.poset.len()];
        for (i, &img) in rep.iter().enumerate() {
            descended[src_proj.apply(i)] = tgt_proj.apply(img);
        }
        let mapped = if degree <= cx.dim() && degree <= cy.dim() {
            let chain = cx.chain_map(&cy, &descended, degree);
            let chain = if transposed { chain.transpose() } else { chain };
            FpMat::from_int(p, &chain).mul(&cycles)
        } else {
            FpMat::zeros(p, cod_dim, 0)
        };
        // Span of boundaries plus mapped cycles, in echelon form.
        let span = if degree <= cod.dim() {
            cod_in.hstack(&mapped)
        } else {
            FpMat::zeros(p, 0, 0)
        };
        images.push(span);
    }
    let image_dims: Vec<usize> = images
        .iter()
        .map(|m| m.rank().saturating_sub(boundary_rank))
        .collect();
    let pre = hs.preorder(flavor, budget)?;
    let mut violations = Vec::new();
    for f in 0..hs.class_count() {
        for g in 0..hs.class_count() {
            if pre.leq(f, g) && !images[g].contains_columns(&images[f]) {
                violations.push((f, g));
            }
        }
    }
    Ok(FpImageOrderReport {
        flavor,
        degree,
        p,
        ambient_dim,
        image_dims,
        monotone: violations.is_empty(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexandroff::pseudocircle;
    use crate::homotopy::DEFAULT_BUDGET;
    use crate::order::Proset;

    #[test]
    fn rank_and_kernel() {
        let a = FpMat::from_int(5, &IntMatrix::from_rows(vec![vec![1, 2, 3], vec![2, 4, 6]]));
        assert_eq!(a.rank(), 1);
        let k = a.kernel();
        assert_eq!(k.cols, 2);
        let prod = a.mul(&k);
        assert!((0..prod.rows).all(|i| (0..prod.cols).all(|j| prod[(i, j)] == 0)));
    }

    #[test]
    fn inclusion_by_rank() {
        let big = FpMat::from_int(3, &IntMatrix::from_rows(vec![vec![1, 0], vec![0, 1]]));
        let small = FpMat::from_int(3, &IntMatrix::from_rows(vec![vec![1], vec![2]]));
        assert!(big.contains_columns(&small));
        assert!(!small.contains_columns(&big));
    }

    #[test]
    fn fp_homology_of_pseudocircle() {
        let poset = pseudocircle().into_poset().unwrap();
        let c = OrderComplex::new(poset);
        assert_eq!(homology_dim(&c, 0, 2).unwrap(), 1);
        assert_eq!(homology_dim(&c, 1, 2).unwrap(), 1);
        assert_eq!(homology_dim(&c, 2, 7).unwrap(), 0);
    }

    #[test]
    fn fp_homology_of_antichain() {
        let p = Proset::from_generating_pairs::<&str>(&["a", "b", "c"], &[]).unwrap();
        let c = OrderComplex::new(p.into_poset().unwrap());
        assert_eq!(homology_dim(&c, 0, 5).unwrap(), 3);
    }

    #[test]
    fn fp_image_order_on_pseudocircle() {
        let p = pseudocircle();
        let hs = HomotopySet::enumerate(&p, &p, DEFAULT_BUDGET).unwrap();
        for flavor in [Flavor::R, Flavor::L] {
            let r = image_order(&hs, flavor, 1, 3, DEFAULT_BUDGET).unwrap();
            assert!(r.monotone, "{flavor:?}: {:?}", r.violations);
            let const_c = hs.class_of_map(&vec![0; 4]).unwrap();
            let id_c = hs.class_of_map(&[0, 1, 2, 3]).unwrap();
            assert_eq!(r.image_dims[const_c], 0);
            assert_eq!(r.image_dims[id_c], 1);
        }
    }

    #[test]
    fn composite_prime_rejected() {
        let poset = pseudocircle().into_poset().unwrap();
        let c = OrderComplex::new(poset);
        assert!(homology_dim(&c, 0, 6).is_err());
    }
}
