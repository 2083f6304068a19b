//! Conjugacy classes, exact character tables and operations on class
//! functions.
//!
//! Tables are computed with the class-algebra method: the structure constants
//! of the class sums are diagonalized simultaneously over a prime field
//! `F_p` with `p ≡ 1 (mod exp G)`, and the resulting values are lifted to
//! `Q(ζ_e)` through discrete logarithms. Every row is then certified by an
//! exact inner product.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::cyclofield::{field_of_values, Cyclotomic, FieldSpec, GaloisElem, Rational};
use crate::error::{Error, Result};
use crate::groupkit::{DirectProduct, Group, Hom};
use crate::grpalg::GroupAlgElem;

#[derive(Debug)]
pub struct ConjClasses {
    group: Arc<Group>,
    reps: Vec<usize>,
    class_of: Vec<usize>,
    sizes: Vec<usize>,
    inverse_class: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl ConjClasses {
    /// Classes ordered by their least element, so the identity class is 0.
    pub fn new(group: &Arc<Group>) -> Arc<ConjClasses> {
        let n = group.order();
        let mut class_of = vec![usize::MAX; n];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for x in group.elements() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut cls: Vec<usize> = group.elements().map(|g| group.conj(x, g)).collect();
            cls.sort_unstable();
            cls.dedup();
            for &y in &cls {
                class_of[y] = members.len();
            }
            members.push(cls);
        }
        let reps = members.iter().map(|m| m[0]).collect::<Vec<_>>();
        let sizes = members.iter().map(Vec::len).collect();
        let inverse_class = reps.iter().map(|&r| class_of[group.inv(r)]).collect();
        Arc::new(ConjClasses { group: group.clone(), reps, class_of, sizes, inverse_class, members })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse_class[k]
    }

    pub fn members(&self, k: usize) -> &[usize] {
        &self.members[k]
    }

    fn same_group(&self, other: &ConjClasses) -> bool {
        std::ptr::eq(self, other) || *self.group == *other.group
    }
}

/// A character stored by its values on conjugacy classes.
#[derive(Clone, Debug)]
pub struct Character {
    classes: Arc<ConjClasses>,
    values: Vec<Cyclotomic>,
    irreducible: bool,
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.classes.same_group(&other.classes) && self.values == other.values
    }
}

impl Eq for Character {}

impl Character {
    /// Wraps class values; the value at the identity must be a positive
    /// integer. Irreducibility is decided by `⟨χ,χ⟩ = 1`.
    pub fn new(classes: Arc<ConjClasses>, values: Vec<Cyclotomic>) -> Result<Character> {
        if values.len() != classes.len() {
            return Err(Error::ClassMismatch);
        }
        match values[0].to_integer() {
            Some(d) if d > BigInt::zero() => {}
            _ => return Err(Error::Certification(format!("degree {} is not a positive integer", values[0]))),
        }
        let mut chi = Character { classes, values, irreducible: false };
        chi.irreducible = inner_product(&chi, &chi)?.is_one();
        Ok(chi)
    }

    /// Builds a character from per-element values, checking they are class
    /// functions.
    pub fn from_element_values(classes: Arc<ConjClasses>, values: &[Cyclotomic]) -> Result<Character> {
        if values.len() != classes.group().order() {
            return Err(Error::ClassMismatch);
        }
        for x in classes.group().elements() {
            if values[x] != values[classes.reps()[classes.class_of(x)]] {
                return Err(Error::Certification(format!("values are not constant on the class of {x}")));
            }
        }
        let v = classes.reps().iter().map(|&r| values[r].clone()).collect();
        Self::new(classes, v)
    }

    pub fn trivial(classes: Arc<ConjClasses>) -> Character {
        let values = vec![Cyclotomic::one(); classes.len()];
        Character { classes, values, irreducible: true }
    }

    pub fn regular(classes: Arc<ConjClasses>) -> Character {
        let mut values = vec![Cyclotomic::zero(); classes.len()];
        values[0] = Cyclotomic::from_int(classes.group().order() as i64);
        let irreducible = classes.group().order() == 1;
        Character { classes, values, irreducible }
    }

    pub fn classes(&self) -> &Arc<ConjClasses> {
        &self.classes
    }

    pub fn group(&self) -> &Arc<Group> {
        self.classes.group()
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value_at(&self, x: usize) -> &Cyclotomic {
        &self.values[self.classes.class_of(x)]
    }

    pub fn degree(&self) -> usize {
        self.values[0].to_integer().and_then(|d| usize::try_from(d).ok()).expect("degree is a positive integer")
    }

    pub fn is_irreducible(&self) -> bool {
        self.irreducible
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_one)
    }

    pub fn is_linear(&self) -> bool {
        self.degree() == 1
    }

    /// `Q(χ)` joined with `base`.
    pub fn field_of_values(&self, base: &FieldSpec) -> FieldSpec {
        field_of_values(&self.values, base)
    }

    /// Elements on which `χ(x) = χ(1)`.
    pub fn kernel(&self) -> Vec<usize> {
        self.group().elements().filter(|&x| *self.value_at(x) == self.values[0]).collect()
    }

    pub fn conj(&self) -> Character {
        let values = self.classes.inverse_class.iter().map(|&k| self.values[k].clone()).collect();
        Character { classes: self.classes.clone(), values, irreducible: self.irreducible }
    }

    pub fn add(&self, other: &Character) -> Result<Character> {
        if !self.classes.same_group(&other.classes) {
            return Err(Error::ClassMismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Character::new(self.classes.clone(), values)
    }

    /// Pointwise product on the same group.
    pub fn tensor(&self, other: &Character) -> Result<Character> {
        if !self.classes.same_group(&other.classes) {
            return Err(Error::ClassMismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Character::new(self.classes.clone(), values)
    }

    pub fn require_irreducible(&self) -> Result<()> {
        if self.irreducible {
            Ok(())
        } else {
            Err(Error::Reducible(inner_product(self, self)?.to_string()))
        }
    }
}

impl Serialize for Character {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Character", 3)?;
        st.serialize_field("degree", &self.degree())?;
        st.serialize_field("values", &self.values)?;
        st.serialize_field("irreducible", &self.irreducible)?;
        st.end()
    }
}

/// `(1/|G|) Σ_K |K| a(K) b(K̄)`, which may be irrational for class functions
/// that are not characters.
pub fn inner_product_cyc(a: &Character, b: &Character) -> Result<Cyclotomic> {
    if !a.classes.same_group(&b.classes) {
        return Err(Error::ClassMismatch);
    }
    let c = &a.classes;
    let sum: Cyclotomic = (0..c.len())
        .map(|k| {
            let v = a.values[k].mul_ref(&b.values[c.inverse_class[k]]);
            v.scale(&Rational::from_integer(BigInt::from(c.sizes[k])))
        })
        .sum();
    Ok(sum.scale(&Rational::new(BigInt::one(), BigInt::from(c.group.order()))))
}

pub fn inner_product(a: &Character, b: &Character) -> Result<Rational> {
    inner_product_cyc(a, b)?
        .to_rational()
        .ok_or_else(|| Error::Certification("inner product is not rational".into()))
}

// ---------------------------------------------------------------------------
// Character tables
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct CharacterTable {
    classes: Arc<ConjClasses>,
    irreducibles: Vec<Character>,
    prime: u64,
}

impl CharacterTable {
    pub fn classes(&self) -> &Arc<ConjClasses> {
        &self.classes
    }

    pub fn irreducibles(&self) -> &[Character] {
        &self.irreducibles
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.irreducibles.iter().map(Character::degree).collect()
    }

    /// The prime used for the modular diagonalization.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// Row index of `chi`, if it is irreducible.
    pub fn position(&self, chi: &Character) -> Option<usize> {
        self.irreducibles.iter().position(|x| x == chi)
    }

    /// Multiplicities `⟨χ, ψ_i⟩` of each irreducible constituent.
    pub fn decompose(&self, chi: &Character) -> Result<Vec<Rational>> {
        self.irreducibles.iter().map(|psi| inner_product(chi, psi)).collect()
    }
}

impl Serialize for CharacterTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let c = &self.classes;
        let g = c.group();
        let mut st = s.serialize_struct("CharacterTable", 4)?;
        st.serialize_field("order", &g.order())?;
        let classes: Vec<serde_json::Value> = (0..c.len())
            .map(|k| {
                serde_json::json!({
                    "rep": c.reps[k],
                    "label": g.label(c.reps[k]),
                    "size": c.sizes[k],
                    "element_order": g.element_order(c.reps[k]),
                })
            })
            .collect();
        st.serialize_field("classes", &classes)?;
        st.serialize_field("degrees", &self.degrees())?;
        st.serialize_field("rows", &self.irreducibles)?;
        st.end()
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2√n`.
pub fn table_prime(exponent: usize, order: usize) -> u64 {
    let e = exponent as u64;
    let mut p = e + 1;
    loop {
        if is_prime(p) && p * p > 4 * order as u64 {
            return p;
        }
        p += e;
    }
}

fn primitive_root(p: u64) -> u64 {
    let factors = crate::cyclofield::prime_factors((p - 1) as u32);
    (2..p)
        .find(|&r| factors.iter().all(|&q| pow_mod(r, (p - 1) / q as u64, p) != 1))
        .unwrap_or(1)
}

/// Characteristic polynomial over `F_p` (coefficients from the constant term
/// up, monic) via reduction to Hessenberg form.
fn charpoly_mod(mut a: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = a.len();
    let sub = |x: u64, y: u64| (x + p - y) % p;
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| a[i][j] != 0) else { continue };
        if piv != j + 1 {
            a.swap(piv, j + 1);
            for row in a.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = inv_mod(a[j + 1][j], p);
        for i in j + 2..n {
            let f = a[i][j] * inv % p;
            if f == 0 {
                continue;
            }
            // row_i -= f row_{j+1}; col_{j+1} += f col_i
            for c in 0..n {
                let v = a[j + 1][c] * f % p;
                a[i][c] = sub(a[i][c], v);
            }
            for row in a.iter_mut() {
                let v = row[i] * f % p;
                row[j + 1] = (row[j + 1] + v) % p;
            }
        }
    }
    // p_0 = 1, p_m = (x - h_mm) p_{m-1} - Σ_{i<m} h_im (Π_{k=i+1}^{m} h_{k,k-1}) p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![0u64; m + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = sub(next[d], c * a[m][m] % p);
        }
        let mut prod = 1u64;
        for i in (0..m).rev() {
            prod = prod * a[i + 1][i] % p;
            if prod == 0 {
                break;
            }
            let coef = a[i][m] * prod % p;
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = sub(next[d], coef * c % p);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Row-reduces vectors mod p; returns the nonzero rows and pivot columns.
fn echelon_mod(mut rows: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pi) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, pi);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        let pr = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pr) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Null space of a square matrix mod p, as row vectors.
fn nullspace_mod(m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let (rref, pivots) = echelon_mod(m, p);
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &c) in rref.iter().zip(&pivots) {
                v[c] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

/// The complete table of irreducible characters.
pub fn character_table(g: &Arc<Group>) -> Result<CharacterTable> {
    let classes = ConjClasses::new(g);
    let k = classes.len();
    let n = g.order();
    let e = g.exponent();
    let p = table_prime(e, n);

    // (A_j)_{kl} = #{(x,y) ∈ C_j × C_k : xy = z_l}
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for j in 0..k {
        for &x in classes.members(j) {
            for (l, &z) in classes.reps.iter().enumerate() {
                let y = g.mul(g.inv(x), z);
                a[j][classes.class_of[y]][l] += 1;
            }
        }
    }

    // split F_p^k into common eigenspaces; each space is stored in echelon form
    let mut spaces: Vec<(Vec<Vec<u64>>, Vec<usize>)> = vec![echelon_mod(
        (0..k).map(|i| (0..k).map(|c| (i == c) as u64).collect()).collect(),
        p,
    )];
    for aj in a.iter().skip(1) {
        if spaces.iter().all(|s| s.0.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for (basis, pivots) in spaces {
            let d = basis.len();
            if d == 1 {
                next.push((basis, pivots));
                continue;
            }
            // A_j b_i expressed in the basis: coordinates sit at pivot columns
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|b| (0..k).map(|r| (0..k).fold(0, |acc, c| (acc + aj[r][c] * b[c]) % p)).collect())
                .collect();
            let r: Vec<Vec<u64>> =
                (0..d).map(|row| (0..d).map(|col| images[col][pivots[row]]).collect()).collect();
            let cp = charpoly_mod(r.clone(), p);
            let roots: Vec<u64> = (0..p)
                .filter(|&x| cp.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0)
                .collect();
            for lam in roots {
                let shifted: Vec<Vec<u64>> = r
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.iter().enumerate().map(|(c, &v)| if i == c { (v + p - lam) % p } else { v }).collect()
                    })
                    .collect();
                let vecs: Vec<Vec<u64>> = nullspace_mod(shifted, p)
                    .into_iter()
                    .map(|coef| {
                        (0..k)
                            .map(|c| (0..d).fold(0, |acc, i| (acc + coef[i] * basis[i][c]) % p))
                            .collect()
                    })
                    .collect();
                next.push(echelon_mod(vecs, p));
            }
        }
        spaces = next;
    }
    if spaces.len() != k || spaces.iter().any(|s| s.0.len() != 1) {
        return Err(Error::Certification(format!("class algebra did not split over F_{p}")));
    }

    let z_e = pow_mod(primitive_root(p), (p - 1) / e as u64, p);
    let orders: Vec<usize> = classes.reps.iter().map(|&r| g.element_order(r)).collect();
    let max_deg = (1..).take_while(|d| d * d <= n).last().unwrap_or(1) as u64;
    let mut rows = Vec::with_capacity(k);
    for (basis, _) in spaces {
        let w0 = basis[0][0];
        if w0 == 0 {
            return Err(Error::Certification("eigenvector vanishes at the identity class".into()));
        }
        let inv0 = inv_mod(w0, p);
        let w: Vec<u64> = basis[0].iter().map(|&x| x * inv0 % p).collect();
        let s = (0..k).fold(0, |acc, l| {
            (acc + w[l] * w[classes.inverse_class[l]] % p * inv_mod(classes.sizes[l] as u64 % p, p)) % p
        });
        let d2 = n as u64 % p * inv_mod(s, p) % p;
        let deg = (1..=max_deg)
            .find(|&d| d * d % p == d2)
            .ok_or_else(|| Error::Certification("no integral degree".into()))?;
        let vals_mod: Vec<u64> =
            (0..k).map(|l| w[l] * deg % p * inv_mod(classes.sizes[l] as u64 % p, p) % p).collect();
        let mut values = Vec::with_capacity(k);
        for l in 0..k {
            let o = orders[l];
            let z_o = pow_mod(z_e, (e / o) as u64, p);
            let inv_o = inv_mod(o as u64, p);
            let powers: Vec<u64> = {
                let mut x = 0usize;
                (0..o)
                    .map(|_| {
                        let v = vals_mod[classes.class_of[x]];
                        x = g.mul(x, classes.reps[l]);
                        v
                    })
                    .collect()
            };
            let mut exps = vec![Rational::zero(); o];
            for (kk, slot) in exps.iter_mut().enumerate() {
                let zinv = inv_mod(pow_mod(z_o, kk as u64, p), p);
                let m = (0..o).fold(0, |acc, j| (acc + powers[j] * pow_mod(zinv, j as u64, p)) % p) * inv_o % p;
                if m > deg {
                    return Err(Error::Certification(format!("multiplicity {m} exceeds the degree {deg}")));
                }
                *slot = Rational::from_integer(BigInt::from(m));
            }
            values.push(Cyclotomic::from_exponents(o as u32, &exps));
        }
        rows.push(values);
    }
    rows.sort_by(|x, y| compare_rows(x, y));
    let irreducibles = rows
        .into_iter()
        .map(|v| Character::new(classes.clone(), v))
        .collect::<Result<Vec<_>>>()?;
    if let Some(bad) = irreducibles.iter().position(|c| !c.irreducible) {
        return Err(Error::Certification(format!("row {bad} has <chi,chi> != 1")));
    }
    let sum_sq: usize = irreducibles.iter().map(|c| c.degree().pow(2)).sum();
    if sum_sq != n {
        return Err(Error::Certification(format!("squared degrees sum to {sum_sq}, not {n}")));
    }
    Ok(CharacterTable { classes, irreducibles, prime: p })
}

fn compare_rows(x: &[Cyclotomic], y: &[Cyclotomic]) -> Ordering {
    let deg = |v: &[Cyclotomic]| v[0].to_integer().unwrap_or_default();
    deg(x).cmp(&deg(y)).then_with(|| {
        x.iter().zip(y).map(|(a, b)| a.order_key_cmp(b)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
    })
}

// ---------------------------------------------------------------------------
// Induction, restriction and the two actions on Irr N
// ---------------------------------------------------------------------------

fn check_embedding(h_in: &Hom, chi: &Character) -> Result<()> {
    if **h_in.src() != **chi.group() {
        return Err(Error::ClassMismatch);
    }
    if !h_in.is_injective() {
        return Err(Error::NotInjective("subgroup embedding".into()));
    }
    Ok(())
}

/// Induced character `χ^G(g) = (1/|H|) Σ_{x∈G} χ°(x g x⁻¹)`.
pub fn induce(h_in: &Hom, chi: &Character) -> Result<Character> {
    induce_with(&ConjClasses::new(h_in.dst()), h_in, chi)
}

/// As [`induce`], reusing precomputed classes of the big group.
pub fn induce_with(classes: &Arc<ConjClasses>, h_in: &Hom, chi: &Character) -> Result<Character> {
    check_embedding(h_in, chi)?;
    let g = h_in.dst();
    if **classes.group() != **g {
        return Err(Error::ClassMismatch);
    }
    let back = h_in.inverse_lookup()?;
    let scale = Rational::new(BigInt::one(), BigInt::from(h_in.src().order()));
    let values = classes
        .reps
        .iter()
        .map(|&r| {
            let s: Cyclotomic = g
                .elements()
                .filter_map(|x| back[g.mul(g.mul(x, r), g.inv(x))].map(|h| chi.value_at(h).clone()))
                .sum();
            s.scale(&scale)
        })
        .collect();
    Character::new(classes.clone(), values)
}

pub fn restrict(chi: &Character, h_in: &Hom) -> Result<Character> {
    if **h_in.dst() != **chi.group() {
        return Err(Error::ClassMismatch);
    }
    if !h_in.is_injective() {
        return Err(Error::NotInjective("subgroup embedding".into()));
    }
    let classes = ConjClasses::new(h_in.src());
    let values = classes.reps.iter().map(|&r| chi.value_at(h_in.apply(r)).clone()).collect();
    Character::new(classes, values)
}

/// Checks that `n_in` embeds `N` as a normal subgroup and returns the
/// inverse lookup table.
pub(crate) fn normal_embedding(n_in: &Hom) -> Result<Vec<Option<usize>>> {
    let back = n_in.inverse_lookup()?;
    if !n_in.dst().is_normal(&n_in.image()) {
        return Err(Error::NotNormal("image of the kernel embedding".into()));
    }
    Ok(back)
}

/// `θ^g(n) = θ(g n g⁻¹)` for `g` in the group containing `N`.
pub fn conj_action(theta: &Character, g: usize, n_in: &Hom) -> Result<Character> {
    if **n_in.src() != **theta.group() {
        return Err(Error::ClassMismatch);
    }
    let back = normal_embedding(n_in)?;
    Ok(conj_action_unchecked(theta, g, n_in, &back))
}

pub(crate) fn conj_action_unchecked(theta: &Character, g: usize, n_in: &Hom, back: &[Option<usize>]) -> Character {
    let big = n_in.dst();
    let values = theta
        .classes
        .reps
        .iter()
        .map(|&r| {
            let y = big.mul(big.mul(g, n_in.apply(r)), big.inv(g));
            theta.value_at(back[y].expect("N is normal")).clone()
        })
        .collect();
    Character { classes: theta.classes.clone(), values, irreducible: theta.irreducible }
}

/// `θ^σ(n) = σ(θ(n))`.
pub fn galois_twist(theta: &Character, sigma: &GaloisElem) -> Result<Character> {
    let values = theta.values.iter().map(|v| sigma.apply(v)).collect::<Result<Vec<_>>>()?;
    Ok(Character { classes: theta.classes.clone(), values, irreducible: theta.irreducible })
}

/// `(θ₁ × θ₂)(n₁, n₂) = θ₁(n₁) θ₂(n₂)` on a two-factor direct product.
pub fn product_character(t1: &Character, t2: &Character, n: &DirectProduct) -> Result<Character> {
    if n.factors.len() != 2 {
        return Err(Error::GroupMismatch("not a product of two factors".into()));
    }
    product_character_many(&[t1.clone(), t2.clone()], n)
}

/// `×_i θ_i` on a direct product with one factor per character.
pub fn product_character_many(chars: &[Character], n: &DirectProduct) -> Result<Character> {
    if n.factors.len() != chars.len() || n.factors.iter().zip(chars).any(|(f, c)| **f != **c.group()) {
        return Err(Error::GroupMismatch("not the direct product of the characters' groups".into()));
    }
    let classes = ConjClasses::new(&n.group);
    let values = classes
        .reps
        .iter()
        .map(|&x| {
            n.decode(x)
                .iter()
                .zip(chars)
                .fold(Cyclotomic::one(), |acc, (&c, chi)| acc.mul_ref(chi.value_at(c)))
        })
        .collect();
    Character::new(classes, values)
}

/// Moves `chi` along an isomorphism `iso: H → chi.group()`.
pub fn transport(chi: &Character, iso: &Hom) -> Result<Character> {
    if **iso.dst() != **chi.group() || !iso.is_injective() || !iso.is_surjective() {
        return Err(Error::GroupMismatch("transport needs an isomorphism onto the character's group".into()));
    }
    let classes = ConjClasses::new(iso.src());
    let values = classes.reps.iter().map(|&r| chi.value_at(iso.apply(r)).clone()).collect();
    Character::new(classes, values)
}

/// `ω_θ(z) = θ(z)/θ(1)` for `z` central in the group algebra.
pub fn central_character(theta: &Character, z: &GroupAlgElem) -> Result<Cyclotomic> {
    if **z.group() != **theta.group() {
        return Err(Error::ClassMismatch);
    }
    theta.require_irreducible()?;
    let c = &theta.classes;
    for x in z.group().elements() {
        if z.coeffs()[x] != z.coeffs()[c.reps[c.class_of[x]]] {
            return Err(Error::NotCentral);
        }
    }
    let sum: Cyclotomic = z
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(x, a)| a.mul_ref(theta.value_at(x)))
        .sum();
    Ok(sum.scale(&Rational::new(BigInt::one(), BigInt::from(theta.degree()))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<Group> {
        Arc::new(Group::from_permutations(3, &["(1 2)", "(1 2 3)"]).unwrap())
    }

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn table_prime_choice() {
        assert_eq!(table_prime(6, 6), 7);
        assert_eq!(table_prime(2, 4), 5);
        assert_eq!(table_prime(4, 8), 13);
        assert_eq!(charpoly_mod(vec![vec![0, 1], vec![1, 0]], 7), vec![6, 0, 1]);
    }

    #[test]
    fn charpoly_matches_determinant_expansion() {
        // companion matrix of x^3 - 2x - 5 over F_11
        let m = vec![vec![0, 0, 5], vec![1, 0, 2], vec![0, 1, 0]];
        assert_eq!(charpoly_mod(m, 11), vec![6, 9, 0, 1]);
    }

    #[test]
    fn small_tables() {
        let t = character_table(&s3()).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        assert!(t.irreducibles()[0].is_trivial());
        let c3 = Arc::new(Group::cyclic(3).unwrap());
        let t = character_table(&c3).unwrap();
        let rows: Vec<Vec<Cyclotomic>> = t.irreducibles().iter().map(|c| c.values().to_vec()).collect();
        assert_eq!(rows[0], vec![Cyclotomic::one(); 3]);
        let mut rest = vec![rows[1].clone(), rows[2].clone()];
        rest.sort_by(|a, b| compare_rows(a, b));
        assert!(rest.contains(&vec![Cyclotomic::one(), z(3, 1), z(3, 2)]));
        assert!(rest.contains(&vec![Cyclotomic::one(), z(3, 2), z(3, 1)]));
    }

    #[test]
    fn central_character_examples() {
        let c3 = Arc::new(Group::cyclic(3).unwrap());
        let cls = ConjClasses::new(&c3);
        let lam = Character::new(cls.clone(), vec![Cyclotomic::one(), z(3, 1), z(3, 2)]).unwrap();
        let mut zc = GroupAlgElem::zero(&c3);
        zc.set(1, Cyclotomic::one());
        assert_eq!(central_character(&lam, &zc).unwrap(), z(3, 1));
        assert_eq!(central_character(&lam, &GroupAlgElem::one(&c3)).unwrap(), Cyclotomic::one());
        let s3 = s3();
        let t = character_table(&s3).unwrap();
        let chi2 = &t.irreducibles()[2];
        let cls = t.classes();
        let k = (0..cls.len()).find(|&k| cls.sizes()[k] == 3).unwrap();
        let sum = GroupAlgElem::class_sum(&s3, cls.members(k));
        assert!(central_character(chi2, &sum).unwrap().is_zero());
        let mut single = GroupAlgElem::zero(&s3);
        single.set(cls.members(k)[0], Cyclotomic::one());
        assert_eq!(central_character(chi2, &single), Err(Error::NotCentral));
    }
}
