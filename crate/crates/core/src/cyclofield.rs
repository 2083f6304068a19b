//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`, their subfields, and
//! Galois groups.
//!
//! A [`Cyclotomic`] stores coordinates on the power basis `1, ζ_n, …,
//! ζ_n^{φ(n)-1}` of `Q(ζ_n)`, reduced modulo the cyclotomic polynomial `Φ_n`.
//! Every value is kept at its minimal conductor, so equality is a plain
//! coefficient comparison.
//!
//! Subfields are described by [`FieldSpec`]: a conductor `n` together with a
//! subgroup `S` of `(Z/n)*`, denoting the fixed field of `{σ_k : k ∈ S}`.
//! Every abelian number field arises this way, which covers all character
//! fields met here.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;

pub type Rational = BigRational;

// ---------------------------------------------------------------------------
// Elementary number theory
// ---------------------------------------------------------------------------

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

pub fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Euler's totient.
pub fn phi(n: u32) -> usize {
    let mut r = n as usize;
    for p in prime_factors(n) {
        r = r / p as usize * (p as usize - 1);
    }
    r
}

/// Representative of `k mod n` in `1..=n`, with the convention that
/// `(Z/1)*` and `(Z/2)*` are both `{1}`.
pub fn residue(k: i64, n: u32) -> u32 {
    if n <= 2 {
        return 1;
    }
    k.rem_euclid(n as i64) as u32
}

/// The unit group `(Z/n)*` as a sorted list.
pub fn units(n: u32) -> Vec<u32> {
    if n <= 2 {
        return vec![1];
    }
    (1..n).filter(|&k| gcd(k as u64, n as u64) == 1).collect()
}

fn is_unit(k: i64, n: u32) -> bool {
    n <= 2 || gcd(k.rem_euclid(n as i64) as u64, n as u64) == 1
}

// ---------------------------------------------------------------------------
// Cached per-conductor data
// ---------------------------------------------------------------------------

struct CycloData {
    phi: usize,
    /// Coefficients of `Φ_n`, low degree first (monic).
    poly: Vec<i64>,
    /// `powers[j]` is `ζ_n^j` on the power basis, for `j` in `0..n`.
    powers: Vec<Vec<i64>>,
}

struct Descent {
    /// Rows of the embedding matrix forming an invertible square block.
    rows: Vec<usize>,
    block_inverse: Vec<Vec<Rational>>,
    /// Embedding matrix `Q(ζ_d) → Q(ζ_n)`, `phi(n)` rows by `phi(d)` columns.
    embed: Vec<Vec<i64>>,
}

fn cyclo_cache() -> &'static Mutex<HashMap<u32, Arc<CycloData>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloData>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn descent_cache() -> &'static Mutex<HashMap<(u32, u32), Arc<Descent>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<Descent>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = *den.last().unwrap();
    let mut q = vec![0i64; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd] / lead;
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn cyclo_data(n: u32) -> Arc<CycloData> {
    if let Some(d) = cyclo_cache().lock().unwrap().get(&n) {
        return d.clone();
    }
    // Φ_n = (x^n - 1) / ∏_{d | n, d < n} Φ_d
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        poly = poly_div_exact(&poly, &cyclo_data(d).poly);
    }
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        powers.push(cur.clone());
        let top = cur[phi - 1];
        let mut next = vec![0i64; phi];
        next[1..phi].copy_from_slice(&cur[..phi - 1]);
        for i in 0..phi {
            next[i] -= top * poly[i];
        }
        cur = next;
    }
    let data = Arc::new(CycloData { phi, poly, powers });
    cyclo_cache().lock().unwrap().insert(n, data.clone());
    data
}

/// The cyclotomic polynomial `Φ_n`, low degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    cyclo_data(n).poly.clone()
}

fn descent(n: u32, d: u32) -> Arc<Descent> {
    if let Some(x) = descent_cache().lock().unwrap().get(&(n, d)) {
        return x.clone();
    }
    let big = cyclo_data(n);
    let small_phi = phi(d);
    let step = (n / d) as usize;
    let embed: Vec<Vec<i64>> = (0..big.phi)
        .map(|r| (0..small_phi).map(|c| big.powers[(c * step) % n as usize][r]).collect())
        .collect();
    // greedily pick independent rows
    let mut rows = Vec::new();
    let mut chosen: Vec<Vec<Rational>> = Vec::new();
    for (r, row) in embed.iter().enumerate() {
        let qrow: Vec<Rational> = row.iter().map(|&v| Rational::from_integer(v.into())).collect();
        chosen.push(qrow);
        if linalg::rank(&chosen, small_phi) == chosen.len() {
            rows.push(r);
            if rows.len() == small_phi {
                break;
            }
        } else {
            chosen.pop();
        }
    }
    let block_inverse = linalg::inverse(&chosen).expect("embedding has full column rank");
    let out = Arc::new(Descent { rows, block_inverse, embed });
    descent_cache().lock().unwrap().insert((n, d), out.clone());
    out
}

fn try_descend(n: u32, d: u32, coeffs: &[Rational]) -> Option<Vec<Rational>> {
    let ds = descent(n, d);
    let sub: Vec<Rational> = ds.rows.iter().map(|&r| coeffs[r].clone()).collect();
    let y = linalg::mat_vec(&ds.block_inverse, &sub);
    for (row, c) in ds.embed.iter().zip(coeffs) {
        let v = row
            .iter()
            .zip(&y)
            .filter(|(e, _)| **e != 0)
            .fold(Rational::zero(), |acc, (&e, yy)| acc + yy * Rational::from_integer(e.into()));
        if &v != c {
            return None;
        }
    }
    Some(y)
}

/// Reduces an exponent vector `Σ e_j ζ_n^j` (length `n`) to power-basis
/// coordinates.
fn reduce_exponents(n: u32, exps: &[Rational]) -> Vec<Rational> {
    let data = cyclo_data(n);
    let mut out = vec![Rational::zero(); data.phi];
    for (j, e) in exps.iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        for (k, &p) in data.powers[j].iter().enumerate() {
            if p != 0 {
                out[k] += e * Rational::from_integer(p.into());
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Cyclotomic numbers
// ---------------------------------------------------------------------------

/// An exact element of `Q(ζ_n)` at its minimal conductor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Builds a value from power-basis coordinates in `Q(ζ_n)`.
    pub fn new(conductor: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::InvalidField("conductor must be positive".into()));
        }
        let expected = phi(conductor);
        if coeffs.len() != expected {
            return Err(Error::InvalidField(format!(
                "conductor {conductor} needs {expected} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Self::normalized(conductor, coeffs))
    }

    fn normalized(mut n: u32, mut coeffs: Vec<Rational>) -> Self {
        if coeffs.iter().all(Zero::is_zero) {
            return Self::zero();
        }
        'outer: while n > 1 {
            for p in prime_factors(n) {
                let d = n / p;
                if let Some(y) = try_descend(n, d, &coeffs) {
                    n = d;
                    coeffs = y;
                    continue 'outer;
                }
            }
            break;
        }
        Cyclotomic { conductor: n, coeffs }
    }

    /// `Σ_j exps[j] ζ_n^j` with `exps.len() == n`.
    pub fn from_exponents(n: u32, exps: &[Rational]) -> Self {
        assert_eq!(exps.len(), n as usize);
        Self::normalized(n, reduce_exponents(n, exps))
    }

    pub fn zero() -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![Rational::zero()] }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(v.into()))
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![q] }
    }

    /// `ζ_n^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let j = k.rem_euclid(n as i64) as usize;
        let data = cyclo_data(n);
        let coeffs = data.powers[j].iter().map(|&v| Rational::from_integer(v.into())).collect();
        Self::normalized(n, coeffs)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Exponent vector of length `m` representing `self` in `Q(ζ_m)`.
    fn exponents_at(&self, m: u32) -> Vec<Rational> {
        debug_assert_eq!(m % self.conductor, 0);
        let step = (m / self.conductor) as usize;
        let mut out = vec![Rational::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[(i * step) % m as usize] += c;
            }
        }
        out
    }

    /// Power-basis coordinates of `self` in `Q(ζ_m)`; `m` must be a multiple
    /// of the conductor.
    pub fn coords_at(&self, m: u32) -> Result<Vec<Rational>> {
        if m % self.conductor != 0 {
            return Err(Error::IncompatibleConductor { value: self.conductor, ambient: m });
        }
        Ok(reduce_exponents(m, &self.exponents_at(m)))
    }

    /// Inverse of [`Cyclotomic::coords_at`].
    pub fn from_coords(m: u32, coords: Vec<Rational>) -> Result<Self> {
        Self::new(m, coords)
    }

    fn binary_exps(&self, other: &Self) -> (u32, Vec<Rational>, Vec<Rational>) {
        let l = lcm(self.conductor, other.conductor);
        (l, self.exponents_at(l), other.exponents_at(l))
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.conductor == 1 && other.conductor == 1 {
            return Self::from_rational(&self.coeffs[0] + &other.coeffs[0]);
        }
        let (l, mut a, b) = self.binary_exps(other);
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        Self::from_exponents(l, &a)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.conductor == 1 {
            return self.scale(&other.coeffs[0]);
        }
        if self.conductor == 1 {
            return other.scale(&self.coeffs[0]);
        }
        let (l, a, b) = self.binary_exps(other);
        let m = l as usize;
        let mut prod = vec![Rational::zero(); m];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                prod[(i + j) % m] += x * y;
            }
        }
        Self::from_exponents(l, &prod)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Multiplicative inverse, via the multiplication matrix of `self`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        let n = self.conductor;
        let k = self.coeffs.len();
        // column i = coordinates of self * ζ^i
        let cols: Vec<Vec<Rational>> = (0..k)
            .map(|i| {
                let mut exps = self.exponents_at(n);
                exps.rotate_right(i);
                reduce_exponents(n, &exps)
            })
            .collect();
        let mat: Vec<Vec<Rational>> = (0..k).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let mut rhs = vec![Rational::zero(); k];
        rhs[0] = Rational::one();
        let y = linalg::solve(&mat, &rhs).ok_or(Error::DivisionByZero)?;
        Ok(Self::normalized(n, y))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_ref(&other.inverse()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Image under `σ_k: ζ_m ↦ ζ_m^k`, for any `m` divisible by the
    /// conductor; only `k mod conductor` matters.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.conductor;
        if !is_unit(k, n) {
            return Err(Error::InvalidField(format!("{k} is not a unit modulo {n}")));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let kk = k.rem_euclid(n as i64) as usize;
        let mut exps = vec![Rational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                exps[(i * kk) % n as usize] += c;
            }
        }
        Ok(Self::from_exponents(n, &exps))
    }

    /// Complex conjugate, `σ_{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is always a unit")
    }

    /// A deterministic total order used for sorting character-table rows:
    /// smaller conductor first, then larger coefficients first.
    pub fn order_key_cmp(&self, other: &Self) -> Ordering {
        self.conductor
            .cmp(&other.conductor)
            .then_with(|| other.coeffs.cmp(&self.coeffs))
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, abs) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "z{}^{}", self.conductor, i)?,
                (_, false) => write!(f, "{abs}*z{}^{}", self.conductor, i)?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$inner(rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$inner(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.neg_ref()
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.neg_ref()
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

/// Adds, subtracts, multiplies or divides two cyclotomic numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn cyc_arith(a: &Cyclotomic, b: &Cyclotomic, op: ArithOp) -> Result<Cyclotomic> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicRepr {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CyclotomicRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| Rational::from_str(s.trim()).map_err(|e| D::Error::custom(format!("bad rational {s:?}: {e}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Cyclotomic::new(repr.conductor, coeffs).map_err(D::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Fields
// ---------------------------------------------------------------------------

/// The fixed field in `Q(ζ_n)` of the automorphisms `σ_k`, `k ∈ stabilizer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    conductor: u32,
    stabilizer: Vec<u32>,
}

fn close_subgroup(n: u32, gens: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut set: BTreeSet<u32> = BTreeSet::new();
    set.insert(residue(1, n));
    let gens: Vec<u32> = gens.into_iter().map(|g| residue(g as i64, n)).collect();
    let mut frontier: Vec<u32> = set.iter().copied().collect();
    while let Some(x) = frontier.pop() {
        for &g in &gens {
            let y = residue(x as i64 * g as i64, n);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set.into_iter().collect()
}

impl FieldSpec {
    /// Validates and canonicalizes a field description.
    pub fn new(conductor: u32, stabilizer: Vec<u32>) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::InvalidField("conductor must be positive".into()));
        }
        let mut stab: Vec<u32> = stabilizer.iter().map(|&k| residue(k as i64, conductor)).collect();
        stab.sort_unstable();
        stab.dedup();
        if let Some(&k) = stab.iter().find(|&&k| !is_unit(k as i64, conductor)) {
            return Err(Error::InvalidField(format!("{k} is not a unit modulo {conductor}")));
        }
        if !stab.contains(&residue(1, conductor)) {
            return Err(Error::InvalidField("stabilizer must contain 1".into()));
        }
        for &a in &stab {
            for &b in &stab {
                if stab.binary_search(&residue(a as i64 * b as i64, conductor)).is_err() {
                    return Err(Error::InvalidField(format!(
                        "stabilizer {stab:?} is not closed under multiplication mod {conductor}"
                    )));
                }
            }
        }
        Ok(Self::canonical(conductor, stab))
    }

    fn canonical(n: u32, stab: Vec<u32>) -> Self {
        for d in divisors(n) {
            let kernel_inside = units(n)
                .into_iter()
                .filter(|&k| residue(k as i64, d) == residue(1, d))
                .all(|k| stab.binary_search(&k).is_ok());
            if kernel_inside {
                let mut s: Vec<u32> = stab.iter().map(|&k| residue(k as i64, d)).collect();
                s.sort_unstable();
                s.dedup();
                return FieldSpec { conductor: d, stabilizer: s };
            }
        }
        unreachable!("d = n always works")
    }

    pub fn rationals() -> Self {
        FieldSpec { conductor: 1, stabilizer: vec![1] }
    }

    /// `Q(ζ_n)`.
    pub fn cyclotomic(n: u32) -> Self {
        Self::canonical(n, vec![residue(1, n)])
    }

    /// Fixed field of the subgroup of `(Z/n)*` generated by `gens`.
    pub fn fixed_field(n: u32, gens: &[u32]) -> Self {
        Self::canonical(n, close_subgroup(n, gens.iter().copied()))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn stabilizer(&self) -> &[u32] {
        &self.stabilizer
    }

    pub fn is_rationals(&self) -> bool {
        self.conductor == 1
    }

    /// Degree over `Q`.
    pub fn degree(&self) -> usize {
        phi(self.conductor) / self.stabilizer.len()
    }

    /// The stabilizer lifted to `(Z/m)*`, for `m` a multiple of the conductor.
    pub fn stabilizer_at(&self, m: u32) -> Vec<u32> {
        assert_eq!(m % self.conductor, 0, "conductor must divide {m}");
        units(m)
            .into_iter()
            .filter(|&k| self.stabilizer.binary_search(&residue(k as i64, self.conductor)).is_ok())
            .collect()
    }

    pub fn contains(&self, x: &Cyclotomic) -> bool {
        let l = lcm(self.conductor, x.conductor());
        self.stabilizer_at(l)
            .into_iter()
            .all(|k| x.galois(k as i64).map(|y| &y == x).unwrap_or(false))
    }

    pub fn is_subfield_of(&self, other: &FieldSpec) -> bool {
        let l = lcm(self.conductor, other.conductor);
        let mine = self.stabilizer_at(l);
        other.stabilizer_at(l).iter().all(|k| mine.binary_search(k).is_ok())
    }

    /// The smallest field containing both.
    pub fn compositum(&self, other: &FieldSpec) -> FieldSpec {
        let l = lcm(self.conductor, other.conductor);
        let theirs = other.stabilizer_at(l);
        let stab = self.stabilizer_at(l).into_iter().filter(|k| theirs.binary_search(k).is_ok()).collect();
        Self::canonical(l, stab)
    }

    /// Short name for the fields that have one.
    pub fn name(&self) -> Option<String> {
        match (self.conductor, self.stabilizer.as_slice()) {
            (1, _) => Some("Q".into()),
            (n, [1]) => Some(format!("Q(zeta{n})")),
            (8, [1, 7]) => Some("Q(sqrt2)".into()),
            (5, [1, 4]) => Some("Q(sqrt5)".into()),
            _ => None,
        }
    }

    /// Parses `Q`, `Q(zetaN)`, `Q(sqrt2)`, `Q(sqrt5)` and `Q(i)`.
    pub fn parse_shorthand(s: &str) -> Result<FieldSpec> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match t.as_str() {
            "Q" => return Ok(Self::rationals()),
            "Q(sqrt2)" => return Ok(FieldSpec { conductor: 8, stabilizer: vec![1, 7] }),
            "Q(sqrt5)" => return Ok(FieldSpec { conductor: 5, stabilizer: vec![1, 4] }),
            "Q(i)" => return Ok(Self::cyclotomic(4)),
            _ => {}
        }
        if let Some(n) = t.strip_prefix("Q(zeta").and_then(|r| r.strip_suffix(')')) {
            let n: u32 = n.parse().map_err(|_| Error::InvalidField(format!("bad conductor in {s:?}")))?;
            if n == 0 {
                return Err(Error::InvalidField("conductor must be positive".into()));
            }
            return Ok(Self::cyclotomic(n));
        }
        Err(Error::InvalidField(format!(
            "unknown field shorthand {s:?}; give conductor and stabilizer explicitly"
        )))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "Fix(Q(zeta{}); {:?})", self.conductor, self.stabilizer),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct FieldRepr {
    conductor: u32,
    stabilizer: Vec<u32>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FieldInput {
    Name(String),
    Explicit(FieldRepr),
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FieldRepr { conductor: self.conductor, stabilizer: self.stabilizer.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match FieldInput::deserialize(d)? {
            FieldInput::Name(s) => FieldSpec::parse_shorthand(&s).map_err(D::Error::custom),
            FieldInput::Explicit(r) => FieldSpec::new(r.conductor, r.stabilizer).map_err(D::Error::custom),
        }
    }
}

/// The smallest field containing `base` and every value.
pub fn field_of_values<'a>(values: impl IntoIterator<Item = &'a Cyclotomic>, base: &FieldSpec) -> FieldSpec {
    let values: Vec<&Cyclotomic> = values.into_iter().collect();
    let l = values.iter().fold(base.conductor, |acc, v| lcm(acc, v.conductor()));
    let stab = base
        .stabilizer_at(l)
        .into_iter()
        .filter(|&k| values.iter().all(|v| v.galois(k as i64).map(|y| &y == *v).unwrap_or(false)))
        .collect();
    FieldSpec::canonical(l, stab)
}

// ---------------------------------------------------------------------------
// Galois elements
// ---------------------------------------------------------------------------

/// An automorphism `σ_k` of the field `E`, identified modulo the stabilizer
/// of `E`. The stored representative is the least element of its coset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaloisElem {
    field: FieldSpec,
    rep: u32,
}

impl GaloisElem {
    pub fn new(field: &FieldSpec, k: i64) -> Result<Self> {
        let n = field.conductor;
        if !is_unit(k, n) {
            return Err(Error::InvalidField(format!("{k} is not a unit modulo {n}")));
        }
        let k = residue(k, n);
        let rep = field
            .stabilizer
            .iter()
            .map(|&s| residue(k as i64 * s as i64, n))
            .min()
            .expect("stabilizer is never empty");
        Ok(GaloisElem { field: field.clone(), rep })
    }

    pub fn identity(field: &FieldSpec) -> Self {
        GaloisElem { field: field.clone(), rep: residue(1, field.conductor) }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rep(&self) -> u32 {
        self.rep
    }

    pub fn is_identity(&self) -> bool {
        self.rep == residue(1, self.field.conductor)
    }

    /// `x ↦ (x^self)^other`; the groups here are abelian so the order only
    /// matters for bookkeeping.
    pub fn compose(&self, other: &GaloisElem) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::NotSubfield(format!("{} vs {}", self.field, other.field)));
        }
        GaloisElem::new(&self.field, self.rep as i64 * other.rep as i64)
    }

    pub fn inverse(&self) -> Self {
        let n = self.field.conductor;
        let k = (1..=n.max(1))
            .find(|&k| residue(k as i64 * self.rep as i64, n) == residue(1, n))
            .expect("units are invertible");
        GaloisElem::new(&self.field, k as i64).expect("inverse of a unit is a unit")
    }

    /// Applies the automorphism to `x`, whose conductor must divide that of
    /// the ambient field.
    pub fn apply(&self, x: &Cyclotomic) -> Result<Cyclotomic> {
        if self.field.conductor % x.conductor() != 0 {
            return Err(Error::IncompatibleConductor { value: x.conductor(), ambient: self.field.conductor });
        }
        x.galois(self.rep as i64)
    }

    /// Restriction to a subfield of the ambient field.
    pub fn restrict(&self, sub: &FieldSpec) -> Result<Self> {
        if !sub.is_subfield_of(&self.field) {
            return Err(Error::NotSubfield(format!("{sub} is not inside {}", self.field)));
        }
        GaloisElem::new(sub, self.rep as i64)
    }
}

/// Free-standing form of [`GaloisElem::apply`].
pub fn galois_apply(sigma: &GaloisElem, x: &Cyclotomic) -> Result<Cyclotomic> {
    sigma.apply(x)
}

/// All automorphisms of `e` fixing `f`, sorted by representative.
pub fn galois_group(e: &FieldSpec, f: &FieldSpec) -> Result<Vec<GaloisElem>> {
    if !f.is_subfield_of(e) {
        return Err(Error::NotSubfield(format!("{f} is not contained in {e}")));
    }
    let reps: BTreeSet<u32> = f
        .stabilizer_at(e.conductor)
        .into_iter()
        .map(|k| GaloisElem::new(e, k as i64).map(|g| g.rep))
        .collect::<Result<_>>()?;
    Ok(reps.into_iter().map(|rep| GaloisElem { field: e.clone(), rep }).collect())
}

/// `Σ_{σ ∈ Gal(E/F)} x^σ`.
pub fn trace_map(e: &FieldSpec, f: &FieldSpec, x: &Cyclotomic) -> Result<Cyclotomic> {
    if !e.contains(x) {
        return Err(Error::ValueOutsideField(format!("{x} is not in {e}")));
    }
    galois_group(e, f)?.iter().map(|s| s.apply(x)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(15).len(), 9);
    }

    #[test]
    fn basic_arithmetic_examples() {
        assert_eq!(z(3, 1) + z(3, 2), Cyclotomic::from_int(-1));
        assert_eq!(z(4, 1) * z(4, 1), Cyclotomic::from_int(-1));
        let a = Cyclotomic::one() + z(5, 1);
        assert_eq!(a.checked_div(&a).unwrap(), Cyclotomic::one());
        assert_eq!(Cyclotomic::one().checked_div(&Cyclotomic::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_conductor() {
        // ζ_6 = -ζ_3^2 lives in Q(ζ_3)
        assert_eq!(z(6, 1).conductor(), 3);
        assert_eq!(z(6, 1), -z(3, 2));
        // ζ_8 + ζ_8^7 = √2, still conductor 8
        let r2 = z(8, 1) + z(8, 7);
        assert_eq!(r2.conductor(), 8);
        assert_eq!(&r2 * &r2, Cyclotomic::from_int(2));
        // ζ_12^3 = i
        assert_eq!(z(12, 3), z(4, 1));
        assert_eq!(z(2, 1), Cyclotomic::from_int(-1));
    }

    #[test]
    fn galois_examples() {
        let s2 = GaloisElem::new(&FieldSpec::cyclotomic(3), 2).unwrap();
        assert_eq!(s2.apply(&z(3, 1)).unwrap(), z(3, 2));
        let s3 = GaloisElem::new(&FieldSpec::cyclotomic(8), 3).unwrap();
        let r2 = z(8, 1) + z(8, 7);
        // σ_3(ζ_8 + ζ_8^7) = ζ_8^3 + ζ_8^5, expanded on the power basis: ζ^4 = -1
        let expected = z(8, 3) - z(8, 1);
        assert_eq!(s3.apply(&r2).unwrap(), expected);
        assert_eq!(s3.apply(&r2).unwrap(), -r2.clone());
        let id = GaloisElem::identity(&FieldSpec::cyclotomic(8));
        assert_eq!(id.apply(&r2).unwrap(), r2);
        let s = GaloisElem::new(&FieldSpec::cyclotomic(4), 3).unwrap();
        assert_eq!(s.apply(&z(8, 1)), Err(Error::IncompatibleConductor { value: 8, ambient: 4 }));
    }

    #[test]
    fn field_of_values_examples() {
        let q = FieldSpec::rationals();
        let vals = [Cyclotomic::one(), Cyclotomic::from_int(-1)];
        assert_eq!(field_of_values(&vals, &q), q);
        let f = field_of_values(&[z(3, 1)], &q);
        assert_eq!((f.conductor(), f.stabilizer()), (3, &[1][..]));
        let f = field_of_values(&[z(8, 1) + z(8, 7)], &q);
        assert_eq!((f.conductor(), f.stabilizer()), (8, &[1, 7][..]));
        assert_eq!(f.name().as_deref(), Some("Q(sqrt2)"));
        assert_eq!(f.degree(), 2);
        // idempotent on its own output
        assert_eq!(field_of_values(&[z(8, 1) + z(8, 7)], &f), f);
    }

    #[test]
    fn galois_group_examples() {
        let q = FieldSpec::rationals();
        let g = galois_group(&FieldSpec::cyclotomic(5), &q).unwrap();
        assert_eq!(g.iter().map(|s| s.rep()).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        let sqrt2 = FieldSpec::parse_shorthand("Q(sqrt2)").unwrap();
        let g = galois_group(&FieldSpec::cyclotomic(8), &sqrt2).unwrap();
        assert_eq!(g.iter().map(|s| s.rep()).collect::<Vec<_>>(), vec![1, 7]);
        let e = FieldSpec::cyclotomic(7);
        assert_eq!(galois_group(&e, &e).unwrap().len(), 1);
        assert!(galois_group(&q, &e).is_err());
    }

    #[test]
    fn trace_examples() {
        let q = FieldSpec::rationals();
        assert_eq!(trace_map(&FieldSpec::cyclotomic(3), &q, &z(3, 1)).unwrap(), Cyclotomic::from_int(-1));
        assert_eq!(trace_map(&FieldSpec::cyclotomic(5), &q, &Cyclotomic::one()).unwrap(), Cyclotomic::from_int(4));
        let sqrt2 = FieldSpec::parse_shorthand("Q(sqrt2)").unwrap();
        let t = trace_map(&FieldSpec::cyclotomic(8), &sqrt2, &z(8, 1)).unwrap();
        assert_eq!(t, z(8, 1) + z(8, 7));
        assert!(trace_map(&FieldSpec::cyclotomic(3), &q, &z(4, 1)).is_err());
    }

    #[test]
    fn field_spec_canonicalization() {
        assert_eq!(FieldSpec::cyclotomic(6), FieldSpec::cyclotomic(3));
        assert_eq!(FieldSpec::new(12, vec![1, 5, 7, 11]).unwrap(), FieldSpec::rationals());
        // Q(i) inside Q(ζ_12): fixed by k ≡ 1 mod 4
        assert_eq!(FieldSpec::new(12, vec![1, 5]).unwrap(), FieldSpec::cyclotomic(4));
        assert!(FieldSpec::new(8, vec![1, 3, 5]).is_err());
        assert!(FieldSpec::new(8, vec![3]).is_err());
        assert!(FieldSpec::cyclotomic(4).is_subfield_of(&FieldSpec::cyclotomic(12)));
        assert!(!FieldSpec::cyclotomic(4).is_subfield_of(&FieldSpec::cyclotomic(3)));
    }

    #[test]
    fn serde_round_trip() {
        let x = z(8, 1) + z(8, 7).scale(&Rational::new(1.into(), 3.into()));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<Cyclotomic>(&s).unwrap(), x);
        let f: FieldSpec = serde_json::from_str("\"Q(sqrt5)\"").unwrap();
        assert_eq!(f, FieldSpec::new(5, vec![1, 4]).unwrap());
        let back: FieldSpec = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(back, f);
    }
}
