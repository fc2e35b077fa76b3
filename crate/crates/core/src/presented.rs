//! Groups given by generators and relations, with explicit elements and
//! homomorphisms.
//!
//! A [`PresentedGroup`] is `Z^n / L` where `L` is spanned by the columns of
//! a relation matrix. Elements are coordinate vectors in `Z^n`, and a
//! [`GroupHom`] is an integer matrix acting on those coordinates. Elements
//! and homomorphisms remember the exact presentation they belong to
//! (by pointer identity); mixing presentations is an error.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{GroupError, MatrixError};
use crate::fgab::FgAbGroup;
use crate::intmat::{cokernel_invariants, hermite_normal_form, smith_normal_form};
use crate::IntMatrix;

#[derive(Clone)]
pub struct PresentedGroup {
    inner: Arc<Presentation>,
}

struct Presentation {
    generators: usize,
    relations: IntMatrix,
    canonical: OnceLock<CanonicalForm>,
}

/// Canonical form of a presented group together with the change of
/// coordinates into it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub group: FgAbGroup,
    /// Unimodular `n x n` matrix; row `i` of `transform * x` is reduced modulo
    /// `moduli[i]`.
    pub transform: IntMatrix,
    /// Per transformed coordinate: `1` (trivial, dropped), `d >= 2`
    /// (torsion residue) or `0` (free).
    pub moduli: Vec<BigInt>,
}

impl CanonicalForm {
    /// Canonical coordinates of a coordinate vector: free coordinates first,
    /// then one residue in `[0, d)` per invariant factor, ascending.
    pub fn coordinates(&self, x: &[BigInt]) -> Result<Vec<BigInt>, MatrixError> {
        let y = self.transform.apply(x)?;
        let mut free = Vec::new();
        let mut torsion = Vec::new();
        for (v, m) in y.into_iter().zip(&self.moduli) {
            if m.is_zero() {
                free.push(v);
            } else if *m > BigInt::from(1) {
                torsion.push(v.mod_floor(m));
            }
        }
        free.extend(torsion);
        Ok(free)
    }

    /// Order of the class of `x`; zero encodes infinite order.
    pub fn order_of(&self, x: &[BigInt]) -> Result<BigInt, MatrixError> {
        let y = self.transform.apply(x)?;
        let mut order = BigInt::from(1);
        for (v, m) in y.iter().zip(&self.moduli) {
            if m.is_zero() {
                if !v.is_zero() {
                    return Ok(BigInt::zero());
                }
            } else {
                let r = v.mod_floor(m);
                order = order.lcm(&(m / m.gcd(&r)));
            }
        }
        Ok(order)
    }
}

impl PresentedGroup {
    /// `Z^generators / (column span of relations)`.
    pub fn new(generators: usize, relations: IntMatrix) -> Result<Self, GroupError> {
        if relations.rows() != generators {
            return Err(MatrixError::DimensionMismatch {
                expected: generators,
                found: relations.rows(),
            }
            .into());
        }
        Ok(PresentedGroup {
            inner: Arc::new(Presentation {
                generators,
                relations,
                canonical: OnceLock::new(),
            }),
        })
    }

    /// Cokernel of `m`: generators are the rows, relations the columns.
    pub fn cokernel(m: IntMatrix) -> Self {
        let n = m.rows();
        Self::new(n, m).expect("rows always match")
    }

    pub fn free(n: usize) -> Self {
        Self::cokernel(IntMatrix::zeros(n, 0))
    }

    pub fn zero() -> Self {
        Self::free(0)
    }

    /// Canonical presentation of a group in invariant-factor form:
    /// free generators first, then one cyclic generator per factor.
    pub fn from_canonical(g: &FgAbGroup) -> Self {
        let r = g.free_rank();
        let n = r + g.invariant_factors().len();
        let rel = IntMatrix::from_fn(n, n, |i, j| {
            if i == j && i >= r {
                g.invariant_factors()[i - r].clone()
            } else {
                BigInt::zero()
            }
        });
        Self::cokernel(rel)
    }

    pub fn generators(&self) -> usize {
        self.inner.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.inner.relations
    }

    pub fn same_as(&self, other: &PresentedGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    pub fn element(&self, coords: Vec<BigInt>) -> Result<GroupElement, GroupError> {
        if coords.len() != self.generators() {
            return Err(MatrixError::DimensionMismatch {
                expected: self.generators(),
                found: coords.len(),
            }
            .into());
        }
        Ok(GroupElement {
            parent: self.clone(),
            coords,
        })
    }

    pub fn element_i64(&self, coords: &[i64]) -> Result<GroupElement, GroupError> {
        self.element(coords.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn identity_element(&self) -> GroupElement {
        GroupElement {
            parent: self.clone(),
            coords: vec![BigInt::zero(); self.generators()],
        }
    }

    /// The `i`-th generator.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut coords = vec![BigInt::zero(); self.generators()];
        coords[i] = BigInt::from(1);
        GroupElement {
            parent: self.clone(),
            coords,
        }
    }

    pub fn canonical(&self) -> &CanonicalForm {
        self.inner.canonical.get_or_init(|| {
            let d = smith_normal_form(self.relations());
            let n = self.generators();
            let diag = d.diagonal();
            let moduli: Vec<BigInt> = (0..n)
                .map(|i| diag.get(i).cloned().unwrap_or_else(BigInt::zero))
                .collect();
            let rank = moduli.iter().filter(|m| !m.is_zero()).count();
            let torsion = moduli
                .iter()
                .filter(|m| **m > BigInt::from(1))
                .cloned()
                .collect();
            CanonicalForm {
                group: FgAbGroup::from_chain(n - rank, torsion),
                transform: d.u,
                moduli,
            }
        })
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.canonical().group
    }

    /// Whether a coordinate vector lies in the relation lattice.
    pub fn is_relation(&self, x: &[BigInt]) -> Result<bool, MatrixError> {
        Ok(self.canonical().order_of(x)? == BigInt::from(1))
    }

    /// `self / <elems>`.
    pub fn quotient_by_elements(&self, elems: &[GroupElement]) -> Result<FgAbGroup, GroupError> {
        let mut cols: Vec<Vec<BigInt>> = self.relations().columns().collect();
        for e in elems {
            self.check_owns(e)?;
            cols.push(e.coords.clone());
        }
        let m = IntMatrix::from_columns(self.generators(), &cols)?;
        Ok(cokernel_invariants(&m))
    }

    fn check_owns(&self, e: &GroupElement) -> Result<(), GroupError> {
        if self.same_as(&e.parent) {
            Ok(())
        } else {
            Err(GroupError::ForeignElement)
        }
    }
}

impl fmt::Debug for PresentedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PresentedGroup")
            .field("generators", &self.generators())
            .field("relations", self.relations())
            .finish()
    }
}

#[derive(Clone, Debug)]
pub struct GroupElement {
    parent: PresentedGroup,
    coords: Vec<BigInt>,
}

impl GroupElement {
    pub fn parent(&self) -> &PresentedGroup {
        &self.parent
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn canonical_coordinates(&self) -> Vec<BigInt> {
        self.parent
            .canonical()
            .coordinates(&self.coords)
            .expect("element length matches its parent")
    }

    /// Zero encodes infinite order.
    pub fn order(&self) -> BigInt {
        self.parent
            .canonical()
            .order_of(&self.coords)
            .expect("element length matches its parent")
    }

    pub fn is_identity(&self) -> bool {
        self.order() == BigInt::from(1)
    }

    pub fn add(&self, other: &GroupElement) -> Result<GroupElement, GroupError> {
        self.parent.check_owns(other)?;
        Ok(GroupElement {
            parent: self.parent.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> GroupElement {
        GroupElement {
            parent: self.parent.clone(),
            coords: self.coords.iter().map(|a| a * k).collect(),
        }
    }

    pub fn neg(&self) -> GroupElement {
        self.scale(&BigInt::from(-1))
    }

    /// Equality in the group: the coordinate difference is a relation.
    pub fn equals(&self, other: &GroupElement) -> Result<bool, GroupError> {
        self.parent.check_owns(other)?;
        let diff: Vec<BigInt> = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(self.parent.is_relation(&diff)?)
    }
}

impl PartialEq for GroupElement {
    /// Elements of different presentations are never equal.
    fn eq(&self, other: &Self) -> bool {
        self.equals(other).unwrap_or(false)
    }
}

/// Homomorphism between presented groups; `matrix` is
/// `target.generators() x source.generators()`.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: PresentedGroup,
    target: PresentedGroup,
    matrix: IntMatrix,
}

/// Kernel of a homomorphism, presented on a basis of its preimage lattice.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub group: PresentedGroup,
    /// Inclusion of the kernel into the source.
    pub inclusion: GroupHom,
}

impl GroupHom {
    pub fn new(
        source: &PresentedGroup,
        target: &PresentedGroup,
        matrix: IntMatrix,
    ) -> Result<Self, GroupError> {
        if matrix.rows() != target.generators() || matrix.cols() != source.generators() {
            return Err(MatrixError::ShapeMismatch {
                op: "hom",
                left_rows: matrix.rows(),
                left_cols: matrix.cols(),
                right_rows: target.generators(),
                right_cols: source.generators(),
            }
            .into());
        }
        Ok(GroupHom {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub fn zero(source: &PresentedGroup, target: &PresentedGroup) -> Self {
        let m = IntMatrix::zeros(target.generators(), source.generators());
        GroupHom::new(source, target, m).expect("shape matches by construction")
    }

    pub fn source(&self) -> &PresentedGroup {
        &self.source
    }

    pub fn target(&self) -> &PresentedGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Every source relation maps into the target relation lattice.
    pub fn is_well_defined(&self) -> bool {
        self.source.relations().columns().all(|r| {
            let image = self.matrix.apply(&r).expect("shape checked");
            self.target.is_relation(&image).expect("shape checked")
        })
    }

    pub fn apply(&self, e: &GroupElement) -> Result<GroupElement, GroupError> {
        self.source.check_owns(e)?;
        let coords = self.matrix.apply(&e.coords)?;
        self.target.element(coords)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom, GroupError> {
        if !self.target.same_as(&other.source) {
            return Err(GroupError::NotComposable);
        }
        GroupHom::new(&self.source, &other.target, other.matrix.multiply(&self.matrix)?)
    }

    pub fn is_zero_map(&self) -> bool {
        self.matrix
            .columns()
            .all(|c| self.target.is_relation(&c).expect("shape checked"))
    }

    /// Generators of the preimage of the image lattice inside the target
    /// coordinates: the images of the source generators followed by the
    /// target relations.
    pub fn image(&self) -> IntMatrix {
        self.matrix
            .hstack(self.target.relations())
            .expect("row counts agree")
    }

    pub fn kernel(&self) -> Result<Kernel, GroupError> {
        if !self.is_well_defined() {
            return Err(GroupError::IllDefined);
        }
        let basis = self.lifted_kernel_basis();
        let t = basis.cols();
        let hnf = hermite_normal_form(&basis);
        let mut rel_cols = Vec::new();
        for r in self.source.relations().columns() {
            let c = hnf
                .solve(&r)?
                .expect("source relations lie in the kernel lattice");
            // `basis` has full column rank, so hnf.u maps solutions back uniquely
            rel_cols.push(c);
        }
        let group = PresentedGroup::new(t, IntMatrix::from_columns(t, &rel_cols)?)?;
        let inclusion = GroupHom::new(&group, &self.source, basis)?;
        Ok(Kernel { group, inclusion })
    }

    /// Basis (as columns) of `{x in Z^n : matrix x in target lattice}`.
    fn lifted_kernel_basis(&self) -> IntMatrix {
        let n = self.source.generators();
        let stacked = self
            .matrix
            .hstack(&self.target.relations().neg())
            .expect("row counts agree");
        let hnf = hermite_normal_form(&stacked);
        let k = hnf.kernel_matrix();
        let projected = IntMatrix::from_fn(n, k.cols(), |i, j| k.get(i, j).clone());
        // Reduce the spanning set to a basis.
        hermite_normal_form(&projected).lattice_basis()
    }
}

/// `ker(g) / im(f)` for `f: P -> Q`, `g: Q -> S` with `g ∘ f = 0`.
pub fn homology_at(f: &GroupHom, g: &GroupHom) -> Result<FgAbGroup, GroupError> {
    check_pair(f, g)?;
    if !f.then(g)?.is_zero_map() {
        return Err(GroupError::IllDefined);
    }
    let basis = g.lifted_kernel_basis();
    let hnf = hermite_normal_form(&basis);
    let mut cols = Vec::new();
    for c in f.image().columns() {
        cols.push(hnf.solve(&c)?.expect("image lies inside the kernel"));
    }
    let m = IntMatrix::from_columns(basis.cols(), &cols)?;
    Ok(cokernel_invariants(&m))
}

/// Exactness of `P -f-> Q -g-> S` at `Q`.
pub fn is_exact_at(f: &GroupHom, g: &GroupHom) -> Result<bool, GroupError> {
    check_pair(f, g)?;
    if !f.then(g)?.is_zero_map() {
        return Ok(false);
    }
    Ok(homology_at(f, g)?.is_trivial())
}

pub fn is_injective(f: &GroupHom) -> Result<bool, GroupError> {
    is_exact_at(&GroupHom::zero(&PresentedGroup::zero(), f.source()), f)
}

pub fn is_surjective(f: &GroupHom) -> Result<bool, GroupError> {
    is_exact_at(f, &GroupHom::zero(f.target(), &PresentedGroup::zero()))
}

fn check_pair(f: &GroupHom, g: &GroupHom) -> Result<(), GroupError> {
    if !f.target.same_as(&g.source) {
        return Err(GroupError::NotComposable);
    }
    if !f.is_well_defined() || !g.is_well_defined() {
        return Err(GroupError::IllDefined);
    }
    Ok(())
}

impl Kernel {
    pub fn canonical(&self) -> &FgAbGroup {
        self.group.group()
    }
}
