//! Group algebras over cyclotomic fields: central idempotents, their Galois
//! and orbit sums, the conjugation action, explicit matrix modules and
//! commutants.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::charkit::{conj_action_unchecked, normal_embedding, Character};
use crate::cyclofield::{galois_group, lcm, phi, Cyclotomic, FieldSpec, GaloisElem, Rational};
use crate::error::{Error, Result};
use crate::groupkit::{Group, Hom};
use crate::linalg;

/// An element `Σ a_x x` of a group algebra, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgElem {
    group: Arc<Group>,
    coeffs: Vec<Cyclotomic>,
}

impl GroupAlgElem {
    pub fn zero(group: &Arc<Group>) -> Self {
        GroupAlgElem { group: group.clone(), coeffs: vec![Cyclotomic::zero(); group.order()] }
    }

    pub fn one(group: &Arc<Group>) -> Self {
        Self::basis(group, 0)
    }

    pub fn basis(group: &Arc<Group>, x: usize) -> Self {
        let mut a = Self::zero(group);
        a.coeffs[x] = Cyclotomic::one();
        a
    }

    pub fn from_coeffs(group: &Arc<Group>, coeffs: Vec<Cyclotomic>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::GroupMismatch(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                group.order()
            )));
        }
        Ok(GroupAlgElem { group: group.clone(), coeffs })
    }

    /// Sum of the given elements, each with coefficient 1.
    pub fn class_sum(group: &Arc<Group>, elems: &[usize]) -> Self {
        let mut a = Self::zero(group);
        for &x in elems {
            a.coeffs[x] = Cyclotomic::one();
        }
        a
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn coeffs(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    pub fn set(&mut self, x: usize, c: Cyclotomic) {
        self.coeffs[x] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Cyclotomic::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_group(self, other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(GroupAlgElem { group: self.group.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_group(self, other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(GroupAlgElem { group: self.group.clone(), coeffs })
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        GroupAlgElem { group: self.group.clone(), coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Coefficient-wise Galois image.
    pub fn galois(&self, sigma: &GaloisElem) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|a| sigma.apply(a)).collect::<Result<_>>()?;
        Ok(GroupAlgElem { group: self.group.clone(), coeffs })
    }

    /// Central iff the coefficients are constant on conjugacy classes.
    pub fn is_central(&self) -> bool {
        let g = &self.group;
        g.elements().all(|x| g.elements().all(|h| self.coeffs[g.conj(x, h)] == self.coeffs[x]))
    }

    /// Least field over `base` containing every coefficient.
    pub fn field(&self, base: &FieldSpec) -> FieldSpec {
        crate::cyclofield::field_of_values(&self.coeffs, base)
    }

    /// Sparse JSON form `{"group": .., "coeffs": {index: value}}`.
    pub fn to_json(&self, group_ref: &str) -> serde_json::Value {
        let sparse: BTreeMap<String, &Cyclotomic> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i.to_string(), c))
            .collect();
        serde_json::json!({ "group": group_ref, "coeffs": sparse })
    }
}

fn same_group(a: &GroupAlgElem, b: &GroupAlgElem) -> Result<()> {
    if Arc::ptr_eq(&a.group, &b.group) || *a.group == *b.group {
        Ok(())
    } else {
        Err(Error::GroupMismatch("group algebra elements over different groups".into()))
    }
}

/// Convolution product.
pub fn alg_mul(a: &GroupAlgElem, b: &GroupAlgElem) -> Result<GroupAlgElem> {
    same_group(a, b)?;
    let g = &a.group;
    let mut out = vec![Cyclotomic::zero(); g.order()];
    for (x, ax) in a.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (y, by) in b.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let xy = g.mul(x, y);
            out[xy] = out[xy].add_ref(&ax.mul_ref(by));
        }
    }
    Ok(GroupAlgElem { group: g.clone(), coeffs: out })
}

/// `e_θ = (θ(1)/|N|) Σ_n θ(n⁻¹) n`.
pub fn idempotent_e(theta: &Character) -> Result<GroupAlgElem> {
    theta.require_irreducible()?;
    let g = theta.group();
    let c = Rational::new(BigInt::from(theta.degree()), BigInt::from(g.order()));
    let coeffs = g.elements().map(|n| theta.value_at(g.inv(n)).scale(&c)).collect();
    Ok(GroupAlgElem { group: g.clone(), coeffs })
}

/// `e_{θ,F} = Σ_{α ∈ Gal(F(θ)/F)} (e_θ)^α`.
pub fn idempotent_e_f(theta: &Character, f: &FieldSpec) -> Result<GroupAlgElem> {
    let e = idempotent_e(theta)?;
    let big = theta.field_of_values(f);
    let mut acc = GroupAlgElem::zero(e.group());
    for sigma in galois_group(&big, f)? {
        acc = acc.add(&e.galois(&sigma)?)?;
    }
    Ok(acc)
}

/// `a^g`: the coefficient of `n` moves to `g⁻¹ n g`. With this convention
/// `(e_θ)^g = e_{θ^g}` for `θ^g(n) = θ(g n g⁻¹)`.
pub fn conj_alg(a: &GroupAlgElem, g: usize, n_in: &Hom) -> Result<GroupAlgElem> {
    if **n_in.src() != *a.group {
        return Err(Error::GroupMismatch("element is not in the kernel's group algebra".into()));
    }
    let back = normal_embedding(n_in)?;
    Ok(conj_alg_unchecked(a, g, n_in, &back))
}

fn conj_alg_unchecked(a: &GroupAlgElem, g: usize, n_in: &Hom, back: &[Option<usize>]) -> GroupAlgElem {
    let big = n_in.dst();
    let mut coeffs = vec![Cyclotomic::zero(); a.coeffs.len()];
    for (n, c) in a.coeffs.iter().enumerate() {
        if !c.is_zero() {
            let m = big.conj(n_in.apply(n), g);
            coeffs[back[m].expect("N is normal")] = c.clone();
        }
    }
    GroupAlgElem { group: a.group.clone(), coeffs }
}

#[derive(Clone, Debug)]
pub struct OrbitIdempotent {
    /// `(e_{θ,F})^G`.
    pub element: GroupAlgElem,
    pub orbit_size: usize,
    /// Elements of `G` fixing `e_{θ,F}`.
    pub stabilizer: Vec<usize>,
    /// The distinct conjugates, in order of first appearance.
    pub conjugates: Vec<GroupAlgElem>,
}

/// Checks that `n_in` is exactly the kernel of `kappa`.
pub(crate) fn check_kernel(kappa: &Hom, n_in: &Hom) -> Result<()> {
    if **n_in.dst() != **kappa.src() {
        return Err(Error::GroupMismatch("kernel embedding lands in another group".into()));
    }
    if !n_in.is_injective() || n_in.image() != kappa.kernel() {
        return Err(Error::NotOnKernel("image of N is not ker kappa".into()));
    }
    Ok(())
}

/// Sum of the distinct `G`-conjugates of `e_{θ,F}`, where `G` acts through
/// lifts along `kappa`.
pub fn orbit_idempotent(theta: &Character, f: &FieldSpec, kappa: &Hom, n_in: &Hom) -> Result<OrbitIdempotent> {
    check_kernel(kappa, n_in)?;
    let back = normal_embedding(n_in)?;
    let e = idempotent_e_f(theta, f)?;
    let g = kappa.dst();
    let mut conjugates: Vec<GroupAlgElem> = Vec::new();
    let mut stabilizer = Vec::new();
    for x in g.elements() {
        let lift = kappa.preimage(x).ok_or_else(|| Error::NotSurjective("kappa".into()))?;
        let c = conj_alg_unchecked(&e, lift, n_in, &back);
        if c == e {
            stabilizer.push(x);
        }
        if !conjugates.contains(&c) {
            conjugates.push(c);
        }
    }
    let mut element = GroupAlgElem::zero(e.group());
    for c in &conjugates {
        element = element.add(c)?;
    }
    Ok(OrbitIdempotent { element, orbit_size: conjugates.len(), stabilizer, conjugates })
}

/// Stabilizer in `G` of `θ` under conjugation through lifts.
pub fn inertia_group(theta: &Character, kappa: &Hom, n_in: &Hom) -> Result<Vec<usize>> {
    check_kernel(kappa, n_in)?;
    let back = normal_embedding(n_in)?;
    let g = kappa.dst();
    Ok(g.elements()
        .filter(|&x| {
            let lift = kappa.preimage(x).expect("kappa is surjective");
            conj_action_unchecked(theta, lift, n_in, &back) == *theta
        })
        .collect())
}

// ---------------------------------------------------------------------------
// Modules and commutants
// ---------------------------------------------------------------------------

pub type CycMatrix = Vec<Vec<Cyclotomic>>;

pub fn mat_mul(a: &CycMatrix, b: &CycMatrix) -> CycMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![Cyclotomic::zero(); m]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] = out[i][j].add_ref(&aik.mul_ref(&b[k][j]));
                }
            }
        }
    }
    out
}

pub fn identity_matrix(d: usize) -> CycMatrix {
    (0..d).map(|i| (0..d).map(|j| if i == j { Cyclotomic::one() } else { Cyclotomic::zero() }).collect()).collect()
}

/// A matrix representation acting on row vectors, so `mats[xy] =
/// mats[x]·mats[y]`.
#[derive(Clone, Debug)]
pub struct ModuleRep {
    group: Arc<Group>,
    dim: usize,
    mats: Vec<CycMatrix>,
}

impl ModuleRep {
    pub fn new(group: &Arc<Group>, mats: Vec<CycMatrix>) -> Result<ModuleRep> {
        if mats.len() != group.order() {
            return Err(Error::GroupMismatch(format!("{} matrices for {} elements", mats.len(), group.order())));
        }
        let dim = mats[0].len();
        if dim == 0 || mats.iter().any(|m| m.len() != dim || m.iter().any(|r| r.len() != dim)) {
            return Err(Error::InvalidAction("matrices must be square of one positive size".into()));
        }
        if mats[0] != identity_matrix(dim) {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        for x in group.elements() {
            for y in group.elements() {
                if mat_mul(&mats[x], &mats[y]) != mats[group.mul(x, y)] {
                    return Err(Error::InvalidAction(format!("M({x})M({y}) != M({x}*{y})")));
                }
            }
        }
        Ok(ModuleRep { group: group.clone(), dim, mats })
    }

    /// The right regular representation: `e_y · x = e_{yx}`.
    pub fn regular(group: &Arc<Group>) -> ModuleRep {
        let n = group.order();
        let mats = group
            .elements()
            .map(|x| {
                let mut m = vec![vec![Cyclotomic::zero(); n]; n];
                for (y, row) in m.iter_mut().enumerate() {
                    row[group.mul(y, x)] = Cyclotomic::one();
                }
                m
            })
            .collect();
        ModuleRep { group: group.clone(), dim: n, mats }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mat(&self, x: usize) -> &CycMatrix {
        &self.mats[x]
    }

    /// The character, as per-element traces.
    pub fn traces(&self) -> Vec<Cyclotomic> {
        self.mats.iter().map(|m| (0..self.dim).map(|i| m[i][i].clone()).sum()).collect()
    }

    /// Pullback along a homomorphism into the acting group.
    pub fn restrict(&self, h: &Hom) -> Result<ModuleRep> {
        if **h.dst() != *self.group {
            return Err(Error::GroupMismatch("restriction along a map into another group".into()));
        }
        Ok(ModuleRep {
            group: h.src().clone(),
            dim: self.dim,
            mats: h.src().elements().map(|x| self.mats[h.apply(x)].clone()).collect(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct EndoBasis {
    /// A basis over `Q` of the commutant.
    pub basis: Vec<CycMatrix>,
    /// Conductor of the coordinate field used for the unknown entries.
    pub conductor: u32,
    pub raw_dim: usize,
    pub base_field: FieldSpec,
    /// `raw_dim / [F:Q]`.
    pub base_dim: usize,
}

/// Multiplication-by-`c` matrix on coordinates of `Q(ζ_m)`, as columns
/// images of the power basis.
fn mult_matrix(c: &Cyclotomic, m: u32) -> Result<Vec<Vec<Rational>>> {
    let k = phi(m);
    let mut cols = Vec::with_capacity(k);
    for j in 0..k {
        let basis = Cyclotomic::root_of_unity(m, j as i64);
        cols.push(basis.mul_ref(c).coords_at(m)?);
    }
    Ok((0..k).map(|r| cols.iter().map(|col| col[r].clone()).collect()).collect())
}

/// `{X : X·M(n) = M(n)·X for all n ∈ N}`, with entries in the field
/// generated by the matrix entries, expressed over `Q`.
pub fn commutant_basis(rep: &ModuleRep, n_in: &Hom, base: &FieldSpec) -> Result<EndoBasis> {
    if **n_in.dst() != *rep.group {
        return Err(Error::GroupMismatch("subgroup embedding lands in another group".into()));
    }
    let d = rep.dim;
    let gens: Vec<usize> = n_in.src().generators().into_iter().map(|x| n_in.apply(x)).collect();
    let m = gens
        .iter()
        .flat_map(|&x| rep.mats[x].iter().flatten())
        .fold(base.conductor(), |acc, c| lcm(acc, c.conductor()));
    let k = phi(m);
    let nvars = d * d * k;
    let var = |i: usize, j: usize| (i * d + j) * k;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for &x in &gens {
        let mx = &rep.mats[x];
        let mults: Vec<Vec<Option<Vec<Vec<Rational>>>>> = mx
            .iter()
            .map(|row| row.iter().map(|c| if c.is_zero() { None } else { mult_matrix(c, m).ok() }).collect())
            .collect();
        // (X M - M X)_{ij} = Σ_l X_il M_lj - M_il X_lj
        for i in 0..d {
            for j in 0..d {
                let mut eq = vec![vec![Rational::zero(); nvars]; k];
                let mut touched = false;
                for l in 0..d {
                    if let Some(mm) = &mults[l][j] {
                        touched = true;
                        for (r, eqr) in eq.iter_mut().enumerate() {
                            for c in 0..k {
                                eqr[var(i, l) + c] += &mm[r][c];
                            }
                        }
                    }
                    if let Some(mm) = &mults[i][l] {
                        touched = true;
                        for (r, eqr) in eq.iter_mut().enumerate() {
                            for c in 0..k {
                                eqr[var(l, j) + c] -= &mm[r][c];
                            }
                        }
                    }
                }
                if touched {
                    rows.extend(eq.into_iter().filter(|r| r.iter().any(|v| !v.is_zero())));
                }
            }
        }
        // keep the system small
        if rows.len() > 4 * nvars {
            linalg::rref(&mut rows, nvars);
        }
    }
    let null = linalg::nullspace(&rows, nvars);
    let basis = null
        .iter()
        .map(|v| {
            (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| Cyclotomic::from_coords(m, v[var(i, j)..var(i, j) + k].to_vec()))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<CycMatrix>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let raw_dim = basis.len();
    let deg = base.degree();
    Ok(EndoBasis { basis, conductor: m, raw_dim, base_field: base.clone(), base_dim: raw_dim / deg })
}

/// Whether `x` is a `Q`-combination of the basis matrices.
pub fn in_span(basis: &[CycMatrix], x: &CycMatrix, m: u32) -> Result<bool> {
    let flat = |mat: &CycMatrix| -> Result<Vec<Rational>> {
        let mut v = Vec::new();
        for c in mat.iter().flatten() {
            v.extend(c.coords_at(m)?);
        }
        Ok(v)
    };
    let cols: Vec<Vec<Rational>> = basis.iter().map(flat).collect::<Result<_>>()?;
    let target = flat(x)?;
    let a: Vec<Vec<Rational>> =
        (0..target.len()).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    if cols.is_empty() {
        return Ok(target.iter().all(Zero::is_zero));
    }
    Ok(linalg::solve(&a, &target).is_some())
}

impl Serialize for GroupAlgElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json(&format!("order {}", self.group.order())).serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charkit::{character_table, ConjClasses};

    fn c3_lambda() -> Character {
        let c3 = Arc::new(Group::cyclic(3).unwrap());
        let cls = ConjClasses::new(&c3);
        Character::new(cls, vec![Cyclotomic::one(), Cyclotomic::root_of_unity(3, 1), Cyclotomic::root_of_unity(3, 2)])
            .unwrap()
    }

    fn q(a: i64, b: i64) -> Cyclotomic {
        Cyclotomic::from_rational(Rational::new(BigInt::from(a), BigInt::from(b)))
    }

    #[test]
    fn idempotent_examples() {
        let lam = c3_lambda();
        let e = idempotent_e(&lam).unwrap();
        let third = q(1, 3);
        assert_eq!(
            e.coeffs(),
            &[
                third.clone(),
                &third * &Cyclotomic::root_of_unity(3, 2),
                &third * &Cyclotomic::root_of_unity(3, 1)
            ]
        );
        assert_eq!(alg_mul(&e, &e).unwrap(), e);
        let ef = idempotent_e_f(&lam, &FieldSpec::rationals()).unwrap();
        assert_eq!(ef.coeffs(), &[q(2, 3), q(-1, 3), q(-1, 3)]);
    }

    #[test]
    fn full_sum_is_left_invariant() {
        let g = Arc::new(Group::from_permutations(3, &["(1 2)", "(1 2 3)"]).unwrap());
        let all: Vec<usize> = g.elements().collect();
        let s = GroupAlgElem::class_sum(&g, &all);
        for x in g.elements() {
            assert_eq!(alg_mul(&s, &GroupAlgElem::basis(&g, x)).unwrap(), s);
        }
        let t = character_table(&g).unwrap();
        let mut total = GroupAlgElem::zero(&g);
        for chi in t.irreducibles() {
            total = total.add(&idempotent_e(chi).unwrap()).unwrap();
        }
        assert_eq!(total, GroupAlgElem::one(&g));
    }

    #[test]
    fn commutant_examples() {
        let c3 = Arc::new(Group::cyclic(3).unwrap());
        let id = Hom::identity(&c3);
        let reg = ModuleRep::regular(&c3);
        let eb = commutant_basis(&reg, &id, &FieldSpec::rationals()).unwrap();
        assert_eq!(eb.raw_dim, 3);
        // Q(ζ3) with the generator multiplying by ζ3: basis 1, ζ3 as rows
        let mats: Vec<CycMatrix> = (0..3)
            .map(|c| {
                (0..2)
                    .map(|i| Cyclotomic::root_of_unity(3, (i + c) as i64).coords_at(3).unwrap())
                    .map(|row| row.into_iter().map(Cyclotomic::from_rational).collect())
                    .collect()
            })
            .collect();
        let v = ModuleRep::new(&c3, mats).unwrap();
        let eb = commutant_basis(&v, &id, &FieldSpec::rationals()).unwrap();
        assert_eq!(eb.raw_dim, 2);
    }
}
