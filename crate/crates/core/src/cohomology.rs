//! `H²(G, Z/m)` with trivial action from normalized bar cochains, and the
//! Schur multiplier `H²(G, C*)` as the quotient of `H²(G, Z/|G|)` by the
//! Bockstein image of `Hom(G, Z/|G|)`.
//!
//! Coordinates: a normalized `k`-cochain is indexed by `k`-tuples of
//! non-identity elements, the element `x` contributing digit `x - 1`, first
//! entry most significant.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupkit::Group;

/// Largest group accepted by the bar-resolution code.
pub const COHOMOLOGY_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    fn add_to(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] += v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// `row_dst += q·row_src`.
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for c in 0..self.cols {
            let v = &self.data[src * self.cols + c];
            if !v.is_zero() {
                let add = v * q;
                self.data[dst * self.cols + c] += add;
            }
        }
    }

    /// `col_dst += q·col_src`.
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for r in 0..self.rows {
            let v = &self.data[r * self.cols + src];
            if !v.is_zero() {
                let add = v * q;
                self.data[r * self.cols + dst] += add;
            }
        }
    }
}

fn cap_check(g: &Group) -> Result<()> {
    if g.order() > COHOMOLOGY_CAP {
        return Err(Error::SizeCap { order: g.order(), cap: COHOMOLOGY_CAP });
    }
    Ok(())
}

/// Coboundaries `d2: C¹ → C²` and `d3: C² → C³` on normalized cochains,
/// acting on column vectors.
pub fn boundary_matrices(g: &Group) -> Result<(IntMatrix, IntMatrix)> {
    cap_check(g)?;
    let n = g.order() - 1;
    let mut d2 = IntMatrix::zeros(n * n, n);
    for a in 1..=n {
        for b in 1..=n {
            let row = (a - 1) * n + (b - 1);
            // δf(a,b) = f(b) - f(ab) + f(a)
            d2.add_to(row, b - 1, 1);
            d2.add_to(row, a - 1, 1);
            let ab = g.mul(a, b);
            if ab != 0 {
                d2.add_to(row, ab - 1, -1);
            }
        }
    }
    let idx2 = |x: usize, y: usize| -> Option<usize> {
        (x != 0 && y != 0).then(|| (x - 1) * n + (y - 1))
    };
    let mut d3 = IntMatrix::zeros(n * n * n, n * n);
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                let row = ((a - 1) * n + (b - 1)) * n + (c - 1);
                // δf(a,b,c) = f(b,c) - f(ab,c) + f(a,bc) - f(a,b)
                for (col, s) in [
                    (idx2(b, c), 1),
                    (idx2(g.mul(a, b), c), -1),
                    (idx2(a, g.mul(b, c)), 1),
                    (idx2(a, b), -1),
                ] {
                    if let Some(col) = col {
                        d3.add_to(row, col, s);
                    }
                }
            }
        }
    }
    Ok((d2, d3))
}

/// Upper-triangular basis of the row module spanned by `rows` together with
/// `m·Z^n`; entries stay reduced modulo `m` and every diagonal divides `m`.
struct ModularHermite {
    m: i64,
    basis: Vec<Vec<i64>>,
}

impl ModularHermite {
    fn new(n: usize, m: i64) -> Self {
        let basis = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = m;
                r
            })
            .collect();
        ModularHermite { m, basis }
    }

    fn insert(&mut self, mut v: Vec<i64>) {
        let m = self.m;
        for x in v.iter_mut() {
            *x = x.rem_euclid(m);
        }
        for j in 0..v.len() {
            if v[j] == 0 {
                continue;
            }
            let h = self.basis[j][j];
            let e = h.extended_gcd(&v[j]);
            let (gcd, a, b) = (e.gcd, e.x, e.y);
            let (hq, vq) = (h / gcd, v[j] / gcd);
            let bj = &self.basis[j];
            let new_pivot: Vec<i64> =
                bj.iter().zip(&v).map(|(&x, &y)| (a as i128 * x as i128 + b as i128 * y as i128).rem_euclid(m as i128) as i64).collect();
            let new_v: Vec<i64> =
                bj.iter().zip(&v).map(|(&x, &y)| (hq as i128 * y as i128 - vq as i128 * x as i128).rem_euclid(m as i128) as i64).collect();
            let mut np = new_pivot;
            // the pivot is gcd(h, v_j), a divisor of m; keep it exact
            np[j] = gcd;
            self.basis[j] = np;
            v = new_v;
            v[j] = 0;
        }
    }

    fn matrix(&self) -> IntMatrix {
        let n = self.basis.len();
        let mut out = IntMatrix::zeros(n, n);
        for (i, r) in self.basis.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                if x != 0 {
                    out.set(i, j, BigInt::from(x));
                }
            }
        }
        out
    }
}

/// Basis matrix `X` (columns) of `{x ∈ Z^n : A x ≡ 0 mod m}`, together with
/// the triangular `B` satisfying `B·X = m·I`.
fn congruence_lattice(a: &IntMatrix, m: i64) -> (IntMatrix, IntMatrix) {
    let mut h = ModularHermite::new(a.cols, m);
    for r in 0..a.rows {
        let row = a.row(r);
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        h.insert(row.iter().map(|x| x.mod_floor(&BigInt::from(m)).to_i64().unwrap()).collect());
    }
    let b = h.matrix();
    let n = a.cols;
    // back substitution for B X = m I
    let mut x = IntMatrix::zeros(n, n);
    for col in 0..n {
        for i in (0..n).rev() {
            let mut rhs = if i == col { BigInt::from(m) } else { BigInt::zero() };
            for k in i + 1..n {
                let bik = b.get(i, k);
                if !bik.is_zero() {
                    rhs -= bik * x.get(k, col);
                }
            }
            let (q, r) = rhs.div_rem(b.get(i, i));
            debug_assert!(r.is_zero(), "m B^-1 is integral");
            x.set(i, col, q);
        }
    }
    (x, b)
}

/// Smith normal form `U·A·V = D`; returns the diagonal and `U⁻¹`.
pub fn smith_normal_form(a: &IntMatrix) -> (Vec<BigInt>, IntMatrix) {
    let mut d = a.clone();
    let mut u_inv = IntMatrix::identity(a.rows);
    let (rows, cols) = (d.rows, d.cols);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let v = d.get(i, j);
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < d.get(bi, bj).abs()) {
                    best = Some((i, j));
                    if v.abs().is_one() {
                        break;
                    }
                }
            }
            if best.is_some_and(|(bi, bj)| d.get(bi, bj).abs().is_one()) {
                break;
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap_rows(t, pi);
        u_inv.swap_cols(t, pi);
        d.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = d.get(i, t).div_floor(d.get(t, t));
                if !q.is_zero() {
                    d.add_row(i, t, &-q.clone());
                    // U ← E U with E = I - q e_it; U⁻¹ ← U⁻¹ E⁻¹
                    u_inv.add_col(t, i, &q);
                }
                if !d.get(i, t).is_zero() {
                    d.swap_rows(t, i);
                    u_inv.swap_cols(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = d.get(t, j).div_floor(d.get(t, t));
                if !q.is_zero() {
                    d.add_col(j, t, &-q);
                }
                if !d.get(t, j).is_zero() {
                    d.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // divisibility of the remaining block
            let p = d.get(t, t).clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d.get(i, j).is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    d.add_row(t, i, &BigInt::one());
                    u_inv.add_col(i, t, &-BigInt::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            let v = -d.get(t, t).clone();
            d.set(t, t, v);
            for r in 0..rows {
                let w = -u_inv.get(r, t).clone();
                u_inv.set(r, t, w);
            }
        }
        diag.push(d.get(t, t).clone());
    }
    (diag, u_inv)
}

/// Smith form of `Z^rows / (span(a) + m·Z^rows)`, computed with entries
/// reduced modulo `m`. Returns the invariant factors (each dividing `m`,
/// trivial ones included) and `U⁻¹` modulo `m`.
fn smith_mod(a: &[Vec<i64>], rows: usize, m: i64) -> (Vec<i64>, Vec<Vec<i64>>) {
    let cols = a.len();
    // d[i][j]: row i, column j
    let mut d: Vec<Vec<i64>> = (0..rows).map(|i| a.iter().map(|c| c[i].rem_euclid(m)).collect()).collect();
    let mut u_inv: Vec<Vec<i64>> = (0..rows).map(|i| (0..rows).map(|j| (i == j) as i64).collect()).collect();
    let add_row = |d: &mut Vec<Vec<i64>>, dst: usize, src: usize, q: i64| {
        for j in 0..cols {
            d[dst][j] = (d[dst][j] + q * d[src][j]).rem_euclid(m);
        }
    };
    // row_dst += q row_src  =>  col_src of U⁻¹ -= q col_dst
    let fix_u = |u: &mut Vec<Vec<i64>>, dst: usize, src: usize, q: i64| {
        for r in u.iter_mut() {
            r[src] = (r[src] - q * r[dst]).rem_euclid(m);
        }
    };
    let mut diag = Vec::new();
    for t in 0..rows {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if d[i][j] != 0 && best.is_none_or(|(bi, bj)| d[i][j] < d[bi][bj]) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                diag.push(m);
                break;
            };
            d.swap(t, pi);
            for r in u_inv.iter_mut() {
                r.swap(t, pi);
            }
            for r in d.iter_mut() {
                r.swap(t, pj);
            }
            let p = d[t][t];
            let mut reduced = true;
            for i in t + 1..rows {
                let q = d[i][t] / p;
                if q != 0 {
                    add_row(&mut d, i, t, -q);
                    fix_u(&mut u_inv, i, t, -q);
                }
                reduced &= d[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = d[t][j] / p;
                for r in d.iter_mut() {
                    r[j] = (r[j] - q * r[t]).rem_euclid(m);
                }
                reduced &= d[t][j] == 0;
            }
            if !reduced {
                continue;
            }
            // column t is p·e_t and m·e_t lies in the lattice
            let g = p.gcd(&m);
            d[t][t] = g;
            match (t + 1..rows).find(|&i| (t + 1..cols).any(|j| d[i][j] % g != 0)) {
                Some(i) => {
                    add_row(&mut d, t, i, 1);
                    fix_u(&mut u_inv, t, i, 1);
                }
                None => {
                    diag.push(g);
                    break;
                }
            }
        }
    }
    (diag, u_inv)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H2Result {
    pub modulus: u64,
    /// Nontrivial invariant factors `d₁ | d₂ | …`.
    pub invariant_factors: Vec<u64>,
    /// One normalized 2-cocycle per invariant factor, as a full table
    /// `f[g][h]` with values in `0..modulus`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<Vec<u64>>>>,
}

impl H2Result {
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.invariant_factors.last().copied().unwrap_or(1)
    }
}

/// `H = L / (relations + m·Z^N)` for the 2-cocycle lattice `L`.
fn quotient_by(g: &Group, m: i64, d3: &IntMatrix, relations: &[Vec<BigInt>]) -> H2Result {
    let n2 = d3.cols;
    let (x, b) = congruence_lattice(d3, m);
    // L-coordinates of v ∈ L are B v / m; m e_j has coordinates B e_j
    let mut rel: Vec<Vec<i64>> = Vec::with_capacity(relations.len());
    for v in relations {
        let col = (0..n2)
            .map(|i| {
                let s: BigInt = (i..n2).filter(|&k| !v[k].is_zero()).map(|k| b.get(i, k) * &v[k]).sum();
                let (q, r) = s.div_rem(&BigInt::from(m));
                debug_assert!(r.is_zero(), "relation lies in the cocycle lattice");
                q.mod_floor(&BigInt::from(m)).to_i64().unwrap()
            })
            .collect();
        rel.push(col);
    }
    // m·e_j has L-coordinates B e_j
    for j in 0..n2 {
        rel.push((0..n2).map(|i| b.get(i, j).mod_floor(&BigInt::from(m)).to_i64().unwrap()).collect());
    }
    let (diag, u_inv) = smith_mod(&rel, n2, m);
    let mut factors = Vec::new();
    let mut gens = Vec::new();
    let n = g.order() - 1;
    for (t, dt) in diag.iter().enumerate() {
        if *dt == 1 {
            continue;
        }
        factors.push(*dt as u64);
        // cocycle = X · (U⁻¹ e_t) mod m
        let coords: Vec<BigInt> = (0..n2).map(|r| BigInt::from(u_inv[r][t])).collect();
        let mut table = vec![vec![0u64; g.order()]; g.order()];
        for a in 1..=n {
            for bb in 1..=n {
                let row = (a - 1) * n + (bb - 1);
                let v: BigInt = (0..n2).filter(|&k| !coords[k].is_zero()).map(|k| x.get(row, k) * &coords[k]).sum();
                table[a][bb] = v.mod_floor(&BigInt::from(m)).to_u64().unwrap();
            }
        }
        gens.push(table);
    }
    H2Result { modulus: m as u64, invariant_factors: factors, generators: Some(gens) }
}

/// `H²(G, Z/m)` with trivial action.
pub fn h2_cyclic(g: &Group, m: u64) -> Result<H2Result> {
    if m == 0 {
        return Err(Error::InvalidGroup("modulus must be positive".into()));
    }
    let (d2, d3) = boundary_matrices(g)?;
    if g.order() == 1 {
        return Ok(H2Result { modulus: m, invariant_factors: vec![], generators: Some(vec![]) });
    }
    let relations: Vec<Vec<BigInt>> =
        (0..d2.cols).map(|c| (0..d2.rows).map(|r| d2.get(r, c).clone()).collect()).collect();
    Ok(quotient_by(g, m as i64, &d3, &relations))
}

/// `H²(G, C*)`, computed inside `H²(G, Z/|G|)`.
pub fn schur_multiplier(g: &Group) -> Result<H2Result> {
    let (d2, d3) = boundary_matrices(g)?;
    if g.order() == 1 {
        return Ok(H2Result { modulus: 1, invariant_factors: vec![], generators: Some(vec![]) });
    }
    let m = g.order() as i64;
    let mut relations: Vec<Vec<BigInt>> =
        (0..d2.cols).map(|c| (0..d2.rows).map(|r| d2.get(r, c).clone()).collect()).collect();
    // Bockstein: f ∈ Hom(G, Z/m) lifted to Z gives the cocycle (d2 f)/m
    let (homs, _) = congruence_lattice(&d2, m);
    for c in 0..homs.cols {
        let f: Vec<BigInt> = (0..homs.rows).map(|r| homs.get(r, c).clone()).collect();
        let img: Vec<BigInt> = (0..d2.rows)
            .map(|r| {
                let s: BigInt = (0..d2.cols).filter(|&k| !d2.get(r, k).is_zero()).map(|k| d2.get(r, k) * &f[k]).sum();
                let (q, rem) = s.div_rem(&BigInt::from(m));
                debug_assert!(rem.is_zero());
                q
            })
            .collect();
        relations.push(img);
    }
    Ok(quotient_by(g, m, &d3, &relations))
}

/// Whether `f` (a full `G × G` table) is a normalized 2-cocycle mod `m`.
pub fn is_normalized_cocycle(g: &Group, f: &[Vec<u64>], m: u64) -> bool {
    let o = g.order();
    if (0..o).any(|x| f[0][x] % m != 0 || f[x][0] % m != 0) {
        return false;
    }
    (0..o).all(|a| {
        (0..o).all(|b| {
            (0..o).all(|c| (f[a][b] + f[g.mul(a, b)][c]) % m == (f[b][c] + f[a][g.mul(b, c)]) % m)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_property() {
        for n in [2, 3, 4] {
            let g = Group::cyclic(n).unwrap();
            let (d2, d3) = boundary_matrices(&g).unwrap();
            assert_eq!(d2.cols, n - 1);
            assert!(d3.mul(&d2).is_zero());
        }
    }

    #[test]
    fn snf_small() {
        let mut a = IntMatrix::zeros(2, 2);
        a.set(0, 0, BigInt::from(2));
        a.set(0, 1, BigInt::from(4));
        a.set(1, 0, BigInt::from(6));
        a.set(1, 1, BigInt::from(8));
        let (d, _) = smith_normal_form(&a);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn cyclic_examples() {
        let c2 = Group::cyclic(2).unwrap();
        let c3 = Group::cyclic(3).unwrap();
        assert_eq!(h2_cyclic(&c2, 2).unwrap().invariant_factors, vec![2]);
        assert!(h2_cyclic(&c3, 2).unwrap().invariant_factors.is_empty());
        let c4 = Group::cyclic(4).unwrap();
        assert_eq!(h2_cyclic(&c4, 8).unwrap().invariant_factors, vec![4]);
        assert!(schur_multiplier(&c4).unwrap().invariant_factors.is_empty());
        let h = h2_cyclic(&c4, 2).unwrap();
        for gen in h.generators.unwrap() {
            assert!(is_normalized_cocycle(&c4, &gen, 2));
        }
    }
}
