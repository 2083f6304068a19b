//! Independent recomputations checked against the library.

use std::collections::BTreeSet;
use std::sync::Arc;

use cliffpair_core::charkit::{character_table, ConjClasses};
use cliffpair_core::cohomology::{h2_cyclic, is_normalized_cocycle, schur_multiplier};
use cliffpair_core::corpus;
use cliffpair_core::cyclofield::{Cyclotomic, Rational};
use cliffpair_core::groupkit::Group;

/// All homomorphisms `G → μ_e` of an abelian group, found by trying every
/// exponent assignment on every element and keeping the multiplicative ones.
fn abelian_characters(g: &Group) -> BTreeSet<Vec<String>> {
    let e = g.exponent();
    let n = g.order();
    // generators: greedily add elements until they generate
    let mut gens = Vec::new();
    let mut span = vec![0usize];
    for x in g.elements() {
        if !span.contains(&x) {
            gens.push(x);
            span = g.generated(&gens);
        }
    }
    let mut out = BTreeSet::new();
    let total = e.pow(gens.len() as u32);
    'assign: for code in 0..total {
        let mut exps = vec![None; n];
        exps[0] = Some(0usize);
        let mut c = code;
        let mut frontier = vec![0usize];
        let gen_exp: Vec<usize> = gens
            .iter()
            .map(|_| {
                let v = c % e;
                c /= e;
                v
            })
            .collect();
        while let Some(x) = frontier.pop() {
            for (gi, &s) in gens.iter().enumerate() {
                let y = g.mul(x, s);
                let v = (exps[x].unwrap() + gen_exp[gi]) % e;
                match exps[y] {
                    None => {
                        exps[y] = Some(v);
                        frontier.push(y);
                    }
                    Some(w) if w != v => continue 'assign,
                    _ => {}
                }
            }
        }
        let row: Vec<String> =
            exps.iter().map(|k| Cyclotomic::root_of_unity(e as u32, k.unwrap() as i64).to_string()).collect();
        out.insert(row);
    }
    out
}

/// Rows keyed by printed values, which are canonical.
fn element_rows(g: &Arc<Group>) -> BTreeSet<Vec<String>> {
    let t = character_table(g).unwrap();
    t.irreducibles().iter().map(|c| g.elements().map(|x| c.value_at(x).to_string()).collect()).collect()
}

#[test]
fn abelian_tables_match_brute_force() {
    for name in ["c2", "c3", "c4", "c5", "c6", "c7", "c8", "v4"] {
        let g = corpus::group(name).unwrap();
        let brute = abelian_characters(&g);
        assert_eq!(brute.len(), g.order(), "{name}");
        assert_eq!(element_rows(&g), brute, "{name}");
    }
}

#[test]
fn nonabelian_degrees() {
    for (name, degrees) in [
        ("s3", vec![1, 1, 2]),
        ("d8", vec![1, 1, 1, 1, 2]),
        ("q8", vec![1, 1, 1, 1, 2]),
        ("d10", vec![1, 1, 2, 2]),
        ("a4", vec![1, 1, 1, 3]),
    ] {
        let t = character_table(&corpus::group(name).unwrap()).unwrap();
        assert_eq!(t.degrees(), degrees, "{name}");
    }
}

/// `ω(K_i) ω(K_j) = Σ_k a_ijk ω(K_k)` with structure constants counted from
/// the Cayley table.
#[test]
fn central_characters_respect_class_multiplication() {
    for &name in corpus::GROUP_NAMES {
        let g = corpus::group(name).unwrap();
        let cls = ConjClasses::new(&g);
        let k = cls.len();
        let members: Vec<Vec<usize>> = (0..k).map(|i| g.elements().filter(|&x| cls.class_of(x) == i).collect()).collect();
        let t = character_table(&g).unwrap();
        for chi in t.irreducibles() {
            let d = Rational::from_integer(chi.degree().into());
            let omega: Vec<Cyclotomic> = (0..k)
                .map(|i| chi.values()[i].scale(&(Rational::from_integer((members[i].len() as i64).into()) / &d)))
                .collect();
            for i in 0..k {
                for j in 0..k {
                    let mut counts = vec![0i64; k];
                    for &x in &members[i] {
                        for &y in &members[j] {
                            counts[cls.class_of(g.mul(x, y))] += 1;
                        }
                    }
                    // a_ijk counts pairs landing on one fixed element of K_k
                    let rhs: Cyclotomic = (0..k)
                        .map(|l| omega[l].scale(&Rational::new(counts[l].into(), (members[l].len() as i64).into())))
                        .sum();
                    assert_eq!(omega[i].mul_ref(&omega[j]), rhs, "{name} classes {i},{j}");
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Cohomology
// ---------------------------------------------------------------------------

fn rank_mod_p(rows: &mut [Vec<u64>], p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] % p != 0) else { continue };
        rows.swap(rank, piv);
        let inv = (1..p).find(|&x| rows[rank][c] * x % p == 1).unwrap();
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] % p != 0 {
                let f = rows[r][c];
                for cc in 0..cols {
                    rows[r][cc] = (rows[r][cc] + (p - f) * rows[rank][cc]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `|H²(G, Z/p)|` from the cocycle identity solved over `F_p` and coboundaries
/// listed exhaustively.
fn h2_order_oracle(g: &Group, p: u64) -> u64 {
    let o = g.order();
    let n = o - 1;
    let var = |a: usize, b: usize| (a - 1) * n + (b - 1);
    let mut eqs = Vec::new();
    for a in 1..o {
        for b in 1..o {
            for c in 1..o {
                let mut row = vec![0u64; n * n];
                let mut add = |x: usize, y: usize, s: u64| {
                    if x != 0 && y != 0 {
                        row[var(x, y)] = (row[var(x, y)] + s) % p;
                    }
                };
                add(a, b, 1);
                add(g.mul(a, b), c, 1);
                add(b, c, p - 1);
                add(a, g.mul(b, c), p - 1);
                eqs.push(row);
            }
        }
    }
    let cocycles = p.pow((n * n - rank_mod_p(&mut eqs, p)) as u32);
    let mut cobs = BTreeSet::new();
    for code in 0..p.pow(n as u32) {
        let f = |a: usize| if a == 0 { 0 } else { (code / p.pow((a - 1) as u32)) % p };
        let t: Vec<u64> = (1..o).flat_map(|a| (1..o).map(move |b| (a, b))).map(|(a, b)| (f(a) + f(b) + p - f(g.mul(a, b))) % p).collect();
        cobs.insert(t);
    }
    cocycles / cobs.len() as u64
}

#[test]
fn h2_orders_match_linear_algebra_oracle() {
    for name in ["c2", "c3", "c4", "c5", "c6", "v4", "s3"] {
        let g = corpus::group(name).unwrap();
        for p in [2u64, 3] {
            let h = h2_cyclic(&g, p).unwrap();
            assert_eq!(h.order(), h2_order_oracle(&g, p), "H2({name}, Z/{p})");
            for f in h.generators.as_ref().unwrap() {
                assert!(is_normalized_cocycle(&g, f, p));
            }
        }
    }
}

#[test]
fn h2_of_cyclic_groups() {
    for n in 1..=8usize {
        let g = Group::cyclic(n).unwrap();
        for m in 1..=12u64 {
            let d = num_integer::gcd(n as u64, m);
            let expect: Vec<u64> = if d > 1 { vec![d] } else { vec![] };
            assert_eq!(h2_cyclic(&g, m).unwrap().invariant_factors, expect, "H2(C{n}, Z/{m})");
        }
    }
}

/// `|H²(G, Z/|G|)| = |M(G)|·|G/G'|` by universal coefficients.
#[test]
fn universal_coefficients() {
    for &name in corpus::GROUP_NAMES {
        let g = corpus::group(name).unwrap();
        let comms: Vec<usize> = g.elements().flat_map(|x| g.elements().map(move |y| (x, y))).map(|(x, y)| {
            g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y))
        }).collect();
        let derived = g.generated(&comms).len();
        let ab = (g.order() / derived) as u64;
        let h = h2_cyclic(&g, g.order() as u64).unwrap();
        let m = schur_multiplier(&g).unwrap();
        assert_eq!(h.order(), m.order() * ab, "{name}");
    }
}
