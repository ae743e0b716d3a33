//! Finitely generated abelian groups, subgroups in canonical form, and
//! homomorphisms presented by integer matrices.
//!
//! Elements are coordinate vectors: first the free coordinates, then
//! one coordinate per invariant factor, read modulo that factor.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::snf::{column_hnf, hnf_contains, IntMatrix};

/// `Z^rank + Z/d1 + ... + Z/dt` with `d1 | d2 | ... | dt`, each `di >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FgAbGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn free(rank: usize) -> FgAbGroup {
        FgAbGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn trivial() -> FgAbGroup {
        FgAbGroup::free(0)
    }

    pub fn new(rank: usize, torsion: Vec<BigInt>) -> Result<FgAbGroup> {
        for w in torsion.windows(2) {
            if !(&w[1] % &w[0]).is_zero() {
                return Err(Error::InvalidInput(format!(
                    "torsion coefficients must form a divisibility chain, got {torsion:?}"
                )));
            }
        }
        if torsion.iter().any(|d| d < &BigInt::from(2)) {
            return Err(Error::InvalidInput(
                "torsion coefficients must be >= 2".into(),
            ));
        }
        Ok(FgAbGroup { rank, torsion })
    }

    /// Number of coordinates of an element.
    pub fn dims(&self) -> usize {
        self.rank + self.torsion.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.dims() == 0
    }

    /// Relation columns: `di * e_(rank+i)`.
    fn relation_columns(&self) -> Vec<Vec<BigInt>> {
        self.torsion
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let mut col = vec![BigInt::zero(); self.dims()];
                col[self.rank + i] = d.clone();
                col
            })
            .collect()
    }

    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if self.rank == 1 {
            parts.push("Z".into());
        } else if self.rank > 1 {
            parts.push(format!("Z^{}", self.rank));
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// A subgroup of an `FgAbGroup`, held in canonical Hermite form so
/// equal subgroups compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub ambient: FgAbGroup,
    /// Column HNF of the generators together with the ambient torsion
    /// relations. Zero columns are dropped; the trivial subgroup of a
    /// torsion-free ambient has no columns.
    pub basis: IntMatrix,
}

impl Subgroup {
    pub fn from_generators(ambient: FgAbGroup, generators: Vec<Vec<BigInt>>) -> Result<Subgroup> {
        let dims = ambient.dims();
        for g in &generators {
            if g.len() != dims {
                return Err(Error::DimensionMismatch(format!(
                    "generator has {} coordinates, ambient has {dims}",
                    g.len()
                )));
            }
        }
        let mut cols = generators;
        cols.extend(ambient.relation_columns());
        let basis = column_hnf(&IntMatrix::from_columns(dims, cols));
        Ok(Subgroup { ambient, basis })
    }

    pub fn trivial(ambient: FgAbGroup) -> Subgroup {
        Subgroup::from_generators(ambient, Vec::new()).unwrap()
    }

    pub fn full(ambient: FgAbGroup) -> Subgroup {
        let dims = ambient.dims();
        let gens = (0..dims)
            .map(|i| {
                let mut col = vec![BigInt::zero(); dims];
                col[i] = BigInt::one();
                col
            })
            .collect();
        Subgroup::from_generators(ambient, gens).unwrap()
    }

    pub fn contains(&self, element: &[BigInt]) -> Result<bool> {
        if element.len() != self.ambient.dims() {
            return Err(Error::DimensionMismatch(format!(
                "element has {} coordinates, ambient has {}",
                element.len(),
                self.ambient.dims()
            )));
        }
        if self.basis.cols == 0 {
            return Ok(element.iter().all(|x| x.is_zero()));
        }
        Ok(hnf_contains(&self.basis, element))
    }

    /// Subgroup inclusion: every generator of `self` lies in `other`.
    pub fn leq(&self, other: &Subgroup) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        for j in 0..self.basis.cols {
            if !other.contains(&self.basis.column(j))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_trivial(&self) -> bool {
        // The canonical form of the trivial subgroup keeps only the
        // relation columns, which generate nothing modulo torsion.
        self == &Subgroup::trivial(self.ambient.clone())
    }

    /// Generator columns as a printable matrix.
    pub fn describe(&self) -> String {
        if self.basis.cols == 0 {
            return "0".into();
        }
        let cols: Vec<String> = (0..self.basis.cols)
            .map(|j| {
                let c: Vec<String> = self.basis.column(j).iter().map(|x| x.to_string()).collect();
                format!("({})", c.join(","))
            })
            .collect();
        format!("<{}>", cols.join(", "))
    }
}

/// A homomorphism between presented groups: `matrix` sends domain
/// coordinates to codomain coordinates.
#[derive(Debug, Clone)]
pub struct AbHom {
    pub domain: FgAbGroup,
    pub codomain: FgAbGroup,
    pub matrix: IntMatrix,
}

impl AbHom {
    pub fn new(domain: FgAbGroup, codomain: FgAbGroup, matrix: IntMatrix) -> Result<AbHom> {
        if matrix.rows != codomain.dims() || matrix.cols != domain.dims() {
            return Err(Error::DimensionMismatch(format!(
                "hom matrix is {}x{}, expected {}x{}",
                matrix.rows,
                matrix.cols,
                codomain.dims(),
                domain.dims()
            )));
        }
        // Well-defined on torsion: the image of di * (torsion gen i)
        // must vanish in the codomain.
        let h = AbHom {
            domain,
            codomain,
            matrix,
        };
        for col in h.domain.relation_columns() {
            let img = h.matrix.mul_vec(&col);
            if !h.vanishes(&img) {
                return Err(Error::InvalidInput(
                    "hom does not respect torsion relations".into(),
                ));
            }
        }
        Ok(h)
    }

    fn vanishes(&self, v: &[BigInt]) -> bool {
        for i in 0..self.codomain.rank {
            if !v[i].is_zero() {
                return false;
            }
        }
        for (i, d) in self.codomain.torsion.iter().enumerate() {
            if !(&v[self.codomain.rank + i] % d).is_zero() {
                return false;
            }
        }
        true
    }

    /// The image as a canonical subgroup of the codomain.
    pub fn image(&self) -> Subgroup {
        let gens: Vec<Vec<BigInt>> = (0..self.matrix.cols).map(|j| self.matrix.column(j)).collect();
        Subgroup::from_generators(self.codomain.clone(), gens).unwrap()
    }

    pub fn compose(&self, inner: &AbHom) -> Result<AbHom> {
        if inner.codomain != self.domain {
            return Err(Error::DimensionMismatch(
                "composition endpoints do not line up".into(),
            ));
        }
        AbHom::new(
            inner.domain.clone(),
            self.codomain.clone(),
            self.matrix.mul(&inner.matrix),
        )
    }
}

/// The cyclic subgroup `nZ` of `Z`.
pub fn cyclic_subgroup_of_z(n: i64) -> Subgroup {
    Subgroup::from_generators(FgAbGroup::free(1), vec![vec![BigInt::from(n)]]).unwrap()
}
