//! Finite groups as validated Cayley tables, homomorphisms, and the group
//! constructions used by Clifford pairs: quotients, pullbacks, direct and
//! semidirect products, coset transversals, the wreath embedding of a group
//! into `H ≀ Sym(T)`, and the extension `κ^{⊗G}`.
//!
//! Elements are indices `0..order` with `0` the identity. Subgroups are sorted
//! index lists. Products are written left to right and all actions are right
//! actions: conjugation is `x^g = g⁻¹ x g`, permutations compose as "first
//! the left factor, then the right one".

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Upper bound on the order of every materialized group.
pub const ORDER_CAP: usize = 200;

#[derive(Clone)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(order {})", self.order)
    }
}

impl Group {
    /// Validates a multiplication table. The identity is moved to index 0 if
    /// it sits elsewhere.
    pub fn from_cayley(table: &[Vec<usize>]) -> Result<Group> {
        Self::from_cayley_labeled(table, None)
    }

    pub fn from_cayley_labeled(table: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if n > ORDER_CAP {
            return Err(Error::SizeCap { order: n, cap: ORDER_CAP });
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::InvalidGroup(format!("{} labels for {n} elements", l.len())));
            }
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!("row {i} has length {}, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidGroup(format!("entry {bad} in row {i} is out of range")));
            }
        }
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                if std::mem::replace(&mut seen_row[table[i][j]], true) {
                    return Err(Error::InvalidGroup(format!("row {i} repeats an entry; not a Latin square")));
                }
                if std::mem::replace(&mut seen_col[table[j][i]], true) {
                    return Err(Error::InvalidGroup(format!("column {i} repeats an entry; not a Latin square")));
                }
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        // swap e and 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut flat = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                flat[relabel(i) * n + relabel(j)] = relabel(table[i][j]) as u32;
            }
        }
        let labels = labels.map(|mut l| {
            l.swap(0, e);
            l
        });
        Self::from_flat(n, flat, labels)
    }

    /// Assumes a Latin square with identity 0; checks associativity.
    fn from_flat(n: usize, table: Vec<u32>, labels: Option<Vec<String>>) -> Result<Group> {
        if n > ORDER_CAP {
            return Err(Error::SizeCap { order: n, cap: ORDER_CAP });
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b] as usize;
                for c in 0..n {
                    let bc = table[b * n + c] as usize;
                    if table[ab * n + c] != table[a * n + bc] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails for ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inverses = vec![0u32; n];
        for a in 0..n {
            inverses[a] = (0..n)
                .find(|&b| table[a * n + b] == 0)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))? as u32;
        }
        Ok(Group { order: n, table, inverses, labels })
    }

    /// Builds a group from a product closure known to be a group; the table is
    /// still validated.
    fn from_product_fn(n: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Group> {
        if n > ORDER_CAP {
            return Err(Error::SizeCap { order: n, cap: ORDER_CAP });
        }
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
        let g = Self::from_cayley(&rows)?;
        if rows[0].iter().enumerate().any(|(i, &x)| i != x) {
            return Err(Error::InvalidGroup("internal construction lost its identity".into()));
        }
        Ok(g)
    }

    /// Closure of permutations on `1..=degree` given in cycle notation, e.g.
    /// `"(1 2)(3 4)"`. Products apply the left factor first.
    pub fn from_permutations(degree: usize, generators: &[&str]) -> Result<Group> {
        let gens: Vec<Vec<usize>> =
            generators.iter().map(|s| parse_cycles(degree, s)).collect::<Result<_>>()?;
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let p: Vec<usize> = elems[i].iter().map(|&x| g[x]).collect();
                if !index.contains_key(&p) {
                    if elems.len() == ORDER_CAP {
                        return Err(Error::SizeCap { order: ORDER_CAP + 1, cap: ORDER_CAP });
                    }
                    index.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let p: Vec<usize> = elems[a].iter().map(|&x| elems[b][x]).collect();
                table[a * n + b] = index[&p] as u32;
            }
        }
        let labels = elems.iter().map(|p| cycle_string(p)).collect();
        Self::from_flat(n, table, Some(labels))
    }

    pub fn trivial() -> Group {
        Group { order: 1, table: vec![0], inverses: vec![0], labels: None }
    }

    pub fn cyclic(n: usize) -> Result<Group> {
        Self::from_product_fn(n, |a, b| (a + b) % n)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `g⁻¹ x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a))).collect()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Rows of the multiplication table.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| (0..self.order).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn is_subgroup(&self, h: &[usize]) -> bool {
        if h.is_empty() || h.iter().any(|&x| x >= self.order) {
            return false;
        }
        let set: BTreeSet<usize> = h.iter().copied().collect();
        set.contains(&0) && set.iter().all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, self.inv(b)))))
    }

    pub fn is_normal(&self, h: &[usize]) -> bool {
        let set: BTreeSet<usize> = h.iter().copied().collect();
        self.is_subgroup(h) && set.iter().all(|&x| self.elements().all(|g| set.contains(&self.conj(x, g))))
    }

    /// Subgroup generated by `gens`, sorted.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = BTreeSet::from([0usize]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set.into_iter().collect()
    }

    /// A small generating set, found greedily from elements of large order.
    pub fn generators(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = self.elements().collect();
        by_order.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut sub = vec![0usize];
        for a in by_order {
            if sub.len() == self.order {
                break;
            }
            if sub.binary_search(&a).is_err() {
                gens.push(a);
                sub = self.generated(&gens);
            }
        }
        gens
    }

    /// The largest normal subgroup contained in `h`.
    pub fn core(&self, h: &[usize]) -> Vec<usize> {
        let set: BTreeSet<usize> = h.iter().copied().collect();
        h.iter()
            .copied()
            .filter(|&x| self.elements().all(|g| set.contains(&self.conj(x, g))))
            .collect()
    }

    /// Materializes a subgroup as a group in its own right, with elements in
    /// increasing order, and returns it with its inclusion.
    pub fn subgroup(self: &Arc<Self>, h: &[usize]) -> Result<(Arc<Group>, Hom)> {
        let mut elems = h.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if !self.is_subgroup(&elems) {
            return Err(Error::NotSubgroup(format!("{elems:?}")));
        }
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                table[i * n + j] = pos[&self.mul(a, b)] as u32;
            }
        }
        let labels = self.labels.as_ref().map(|l| elems.iter().map(|&x| l[x].clone()).collect());
        let sub = Arc::new(Self::from_flat(n, table, labels)?);
        let inc = Hom::new(sub.clone(), self.clone(), elems)?;
        Ok((sub, inc))
    }
}

fn parse_cycles(degree: usize, s: &str) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..degree).collect();
    let bad = |msg: &str| Error::MalformedPermutation(format!("{s:?}: {msg}"));
    let mut rest = s.trim();
    if rest.is_empty() || rest == "()" {
        return Ok(perm);
    }
    let mut seen = vec![false; degree];
    while !rest.is_empty() {
        rest = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
        let close = rest.find(')').ok_or_else(|| bad("unbalanced parenthesis"))?;
        let points: Vec<usize> = rest[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad("non-numeric point")))
            .collect::<Result<_>>()?;
        for &p in &points {
            if p == 0 || p > degree {
                return Err(bad(&format!("point {p} outside 1..={degree}")));
            }
            if std::mem::replace(&mut seen[p - 1], true) {
                return Err(bad(&format!("point {p} appears twice")));
            }
        }
        for (i, &p) in points.iter().enumerate() {
            perm[p - 1] = points[(i + 1) % points.len()] - 1;
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(perm)
}

fn cycle_string(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = vec![start + 1];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cyc.push(x + 1);
            x = p[x];
        }
        out.push('(');
        out.push_str(&cyc.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

// ---------------------------------------------------------------------------
// Homomorphisms
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct Hom {
    src: Arc<Group>,
    dst: Arc<Group>,
    images: Vec<usize>,
}

impl Hom {
    /// Validates `f(xy) = f(x) f(y)` exhaustively.
    pub fn new(src: Arc<Group>, dst: Arc<Group>, images: Vec<usize>) -> Result<Hom> {
        if images.len() != src.order() {
            return Err(Error::NotHomomorphism(format!(
                "{} images for a group of order {}",
                images.len(),
                src.order()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= dst.order()) {
            return Err(Error::NotHomomorphism(format!("image {bad} out of range")));
        }
        for x in src.elements() {
            for y in src.elements() {
                if images[src.mul(x, y)] != dst.mul(images[x], images[y]) {
                    return Err(Error::NotHomomorphism(format!("f({x}*{y}) != f({x})*f({y})")));
                }
            }
        }
        Ok(Hom { src, dst, images })
    }

    pub fn identity(g: &Arc<Group>) -> Hom {
        Hom { src: g.clone(), dst: g.clone(), images: g.elements().collect() }
    }

    pub fn src(&self) -> &Arc<Group> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<Group> {
        &self.dst
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn kernel(&self) -> Vec<usize> {
        self.src.elements().filter(|&x| self.images[x] == 0).collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.images.iter().copied().collect();
        set.into_iter().collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.dst.order()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().len() == 1
    }

    /// First element mapping to `y`.
    pub fn preimage(&self, y: usize) -> Option<usize> {
        self.images.iter().position(|&x| x == y)
    }

    /// `x ↦ other(self(x))`.
    pub fn then(&self, other: &Hom) -> Result<Hom> {
        if *self.dst != *other.src {
            return Err(Error::GroupMismatch("codomain does not match domain".into()));
        }
        Ok(Hom {
            src: self.src.clone(),
            dst: other.dst.clone(),
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        })
    }

    /// Lookup table from the codomain back to the domain; requires
    /// injectivity.
    pub fn inverse_lookup(&self) -> Result<Vec<Option<usize>>> {
        if !self.is_injective() {
            return Err(Error::NotInjective("inverse lookup of a non-injective map".into()));
        }
        let mut back = vec![None; self.dst.order()];
        for (x, &y) in self.images.iter().enumerate() {
            back[y] = Some(x);
        }
        Ok(back)
    }
}

/// The kernel of `kappa` as a group of its own, with its inclusion.
pub fn kernel_subgroup(kappa: &Hom) -> Result<(Arc<Group>, Hom)> {
    kappa.src().subgroup(&kappa.kernel())
}

// ---------------------------------------------------------------------------
// Quotients, pullbacks, products
// ---------------------------------------------------------------------------

/// `G/N` with cosets ordered by their least element.
pub fn quotient(g: &Arc<Group>, n: &[usize]) -> Result<(Arc<Group>, Hom)> {
    if !g.is_subgroup(n) {
        return Err(Error::NotSubgroup(format!("{n:?}")));
    }
    if !g.is_normal(n) {
        return Err(Error::NotNormal(format!("{n:?}")));
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] == usize::MAX {
            for &m in n {
                coset_of[g.mul(m, x)] = reps.len();
            }
            reps.push(x);
        }
    }
    let k = reps.len();
    let q = Arc::new(Group::from_product_fn(k, |a, b| coset_of[g.mul(reps[a], reps[b])])?);
    let proj = Hom::new(g.clone(), q.clone(), coset_of)?;
    Ok((q, proj))
}

pub struct Pullback {
    pub group: Arc<Group>,
    pub proj1: Hom,
    pub proj2: Hom,
    /// The common map to the base, `proj1` followed by the first map.
    pub kappa: Hom,
    pairs: Vec<(usize, usize)>,
    lookup: HashMap<(usize, usize), usize>,
}

impl Pullback {
    pub fn pair(&self, x: usize) -> (usize, usize) {
        self.pairs[x]
    }

    pub fn index_of(&self, a: usize, b: usize) -> Option<usize> {
        self.lookup.get(&(a, b)).copied()
    }
}

/// `{(g₁, g₂) : g₁k₁ = g₂k₂}`, lexicographically ordered; no surjectivity
/// required.
pub fn fiber_product(k1: &Hom, k2: &Hom) -> Result<Pullback> {
    if *k1.dst() != *k2.dst() {
        return Err(Error::GroupMismatch("maps have different codomains".into()));
    }
    let (g1, g2) = (k1.src().clone(), k2.src().clone());
    let pairs: Vec<(usize, usize)> = g1
        .elements()
        .flat_map(|a| g2.elements().map(move |b| (a, b)))
        .filter(|&(a, b)| k1.apply(a) == k2.apply(b))
        .collect();
    let lookup: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let group = Arc::new(Group::from_product_fn(pairs.len(), |x, y| {
        let (a1, b1) = pairs[x];
        let (a2, b2) = pairs[y];
        lookup[&(g1.mul(a1, a2), g2.mul(b1, b2))]
    })?);
    let proj1 = Hom::new(group.clone(), g1.clone(), pairs.iter().map(|p| p.0).collect())?;
    let proj2 = Hom::new(group.clone(), g2.clone(), pairs.iter().map(|p| p.1).collect())?;
    let kappa = proj1.then(k1)?;
    Ok(Pullback { group, proj1, proj2, kappa, pairs, lookup })
}

/// Pullback of two epimorphisms onto the same group.
pub fn pullback(k1: &Hom, k2: &Hom) -> Result<Pullback> {
    if *k1.dst() != *k2.dst() {
        return Err(Error::GroupMismatch("maps have different codomains".into()));
    }
    for (i, k) in [k1, k2].iter().enumerate() {
        if !k.is_surjective() {
            return Err(Error::NotSurjective(format!("map {}", i + 1)));
        }
    }
    fiber_product(k1, k2)
}

/// An internal direct product with coordinate access. Elements are encoded
/// in mixed radix, first factor most significant.
pub struct DirectProduct {
    pub group: Arc<Group>,
    pub factors: Vec<Arc<Group>>,
    pub embeddings: Vec<Hom>,
    pub projections: Vec<Hom>,
}

impl DirectProduct {
    pub fn new(factors: Vec<Arc<Group>>) -> Result<DirectProduct> {
        let order = factors.iter().try_fold(1usize, |acc, f| acc.checked_mul(f.order()));
        let order = match order {
            Some(o) if o <= ORDER_CAP => o,
            _ => {
                return Err(Error::SizeCap { order: order.unwrap_or(usize::MAX), cap: ORDER_CAP });
            }
        };
        let radix: Vec<usize> = factors.iter().map(|f| f.order()).collect();
        let decode = |mut x: usize| {
            let mut c = vec![0; radix.len()];
            for i in (0..radix.len()).rev() {
                c[i] = x % radix[i];
                x /= radix[i];
            }
            c
        };
        let encode = |c: &[usize]| c.iter().zip(&radix).fold(0, |acc, (&ci, &r)| acc * r + ci);
        let group = Arc::new(Group::from_product_fn(order, |x, y| {
            let (cx, cy) = (decode(x), decode(y));
            let prod: Vec<usize> = factors.iter().enumerate().map(|(i, f)| f.mul(cx[i], cy[i])).collect();
            encode(&prod)
        })?);
        let mut embeddings = Vec::new();
        let mut projections = Vec::new();
        for (i, f) in factors.iter().enumerate() {
            let emb = f
                .elements()
                .map(|a| {
                    let mut c = vec![0; factors.len()];
                    c[i] = a;
                    encode(&c)
                })
                .collect();
            embeddings.push(Hom::new(f.clone(), group.clone(), emb)?);
            projections.push(Hom::new(group.clone(), f.clone(), group.elements().map(|x| decode(x)[i]).collect())?);
        }
        Ok(DirectProduct { group, factors, embeddings, projections })
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.factors).fold(0, |acc, (&c, f)| acc * f.order() + c)
    }

    pub fn decode(&self, mut x: usize) -> Vec<usize> {
        let mut c = vec![0; self.factors.len()];
        for i in (0..self.factors.len()).rev() {
            c[i] = x % self.factors[i].order();
            x /= self.factors[i].order();
        }
        c
    }
}

pub struct Semidirect {
    pub group: Arc<Group>,
    pub u_in: Hom,
    pub c_in: Hom,
    /// Projection onto the acting group.
    pub to_u: Hom,
}

/// `U ⋉ C` where `u` acts on `C` from the right by `c ↦ action[u][c]`.
/// Elements are pairs `u·c` encoded as `u * |C| + c`, and
/// `(u₁c₁)(u₂c₂) = u₁u₂ · c₁^{u₂}c₂`, so that `u⁻¹cu = c^u`.
pub fn semidirect(u: &Arc<Group>, c: &Arc<Group>, action: &[Vec<usize>]) -> Result<Semidirect> {
    if action.len() != u.order() {
        return Err(Error::InvalidAction(format!("{} maps for {} elements", action.len(), u.order())));
    }
    for (i, a) in action.iter().enumerate() {
        let auto = Hom::new(c.clone(), c.clone(), a.clone())
            .map_err(|e| Error::InvalidAction(format!("map of element {i}: {e}")))?;
        if !auto.is_injective() {
            return Err(Error::InvalidAction(format!("map of element {i} is not an automorphism")));
        }
    }
    for a in u.elements() {
        for b in u.elements() {
            for x in c.elements() {
                if action[u.mul(a, b)][x] != action[b][action[a][x]] {
                    return Err(Error::InvalidAction(format!(
                        "action is not a homomorphism at ({a}, {b})"
                    )));
                }
            }
        }
    }
    let cn = c.order();
    let group = Arc::new(Group::from_product_fn(u.order() * cn, |x, y| {
        let (u1, c1) = (x / cn, x % cn);
        let (u2, c2) = (y / cn, y % cn);
        u.mul(u1, u2) * cn + c.mul(action[u2][c1], c2)
    })?);
    let u_in = Hom::new(u.clone(), group.clone(), u.elements().map(|a| a * cn).collect())?;
    let c_in = Hom::new(c.clone(), group.clone(), c.elements().collect())?;
    let to_u = Hom::new(group.clone(), u.clone(), group.elements().map(|x| x / cn).collect())?;
    Ok(Semidirect { group, u_in, c_in, to_u })
}

// ---------------------------------------------------------------------------
// Transversals and wreath products
// ---------------------------------------------------------------------------

/// A right transversal `T` of `H` in `G` with `tg = h(t,g)·(t∘g)`.
#[derive(Clone, Debug)]
pub struct Transversal {
    group: Arc<Group>,
    subgroup: Vec<usize>,
    reps: Vec<usize>,
    coset_of: Vec<usize>,
}

impl Transversal {
    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn subgroup(&self) -> &[usize] {
        &self.subgroup
    }

    /// Representatives; the identity comes first.
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Index of the coset `Hx`.
    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    /// `t∘g` as an index into [`Transversal::reps`].
    pub fn act(&self, t: usize, g: usize) -> usize {
        self.coset_of[self.group.mul(self.reps[t], g)]
    }

    /// `h(t,g) = tg (t∘g)⁻¹ ∈ H`.
    pub fn cofactor(&self, t: usize, g: usize) -> usize {
        let tg = self.group.mul(self.reps[t], g);
        let s = self.reps[self.coset_of[tg]];
        self.group.mul(tg, self.group.inv(s))
    }
}

/// Right transversal made of the least element of each coset.
pub fn coset_transversal(g: &Arc<Group>, h: &[usize]) -> Result<Transversal> {
    let mut sub = h.to_vec();
    sub.sort_unstable();
    sub.dedup();
    if !g.is_subgroup(&sub) {
        return Err(Error::NotSubgroup(format!("{sub:?}")));
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] == usize::MAX {
            for &m in &sub {
                coset_of[g.mul(m, x)] = reps.len();
            }
            reps.push(x);
        }
    }
    Ok(Transversal { group: g.clone(), subgroup: sub, reps, coset_of })
}

/// An element of `B ≀ Sym(T)` acting on `B × T` from the right by
/// `(x, t) ↦ (x·coords[t], perm[t])`. `coords` are element indices of the
/// base group `B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElem {
    pub perm: Vec<usize>,
    pub coords: Vec<usize>,
}

impl WreathElem {
    pub fn identity(len: usize) -> Self {
        WreathElem { perm: (0..len).collect(), coords: vec![0; len] }
    }

    pub fn mul(&self, other: &WreathElem, base: &Group) -> WreathElem {
        let perm = self.perm.iter().map(|&t| other.perm[t]).collect();
        let coords = self
            .coords
            .iter()
            .zip(&self.perm)
            .map(|(&h, &t)| base.mul(h, other.coords[t]))
            .collect();
        WreathElem { perm, coords }
    }

    /// Applies a homomorphism of base groups coordinate-wise (`κ ≀ 1`).
    pub fn map_base(&self, f: &Hom) -> WreathElem {
        WreathElem { perm: self.perm.clone(), coords: self.coords.iter().map(|&h| f.apply(h)).collect() }
    }

    /// Coordinates of the normal form `σ·(d_s)_s`, i.e. with the permutation
    /// written first: `d_s = coords[s∘σ⁻¹]`.
    pub fn post_permutation_coords(&self) -> Vec<usize> {
        let mut d = vec![0; self.coords.len()];
        for (t, &s) in self.perm.iter().enumerate() {
            d[s] = self.coords[t];
        }
        d
    }
}

pub struct WreathEmbedding {
    /// The image of `G` in `H ≀ Sym(T)`, materialized as a group.
    pub image: Arc<Group>,
    pub image_elems: Vec<WreathElem>,
    /// `G → image`.
    pub phi: Hom,
}

impl WreathEmbedding {
    pub fn phi_elem(&self, g: usize) -> &WreathElem {
        &self.image_elems[self.phi.apply(g)]
    }
}

/// `g ↦ (h(t,g))_t σ(g)` with coordinates in `H ⊆ G`, followed by the
/// materialized image.
pub fn wreath_map(trans: &Transversal, g: usize) -> WreathElem {
    let len = trans.len();
    WreathElem {
        perm: (0..len).map(|t| trans.act(t, g)).collect(),
        coords: (0..len).map(|t| trans.cofactor(t, g)).collect(),
    }
}

pub fn wreath_embedding(trans: &Transversal) -> Result<WreathEmbedding> {
    let g = trans.group().clone();
    let mut image_elems: Vec<WreathElem> = Vec::new();
    let mut index: HashMap<WreathElem, usize> = HashMap::new();
    let mut images = Vec::with_capacity(g.order());
    for x in g.elements() {
        let w = wreath_map(trans, x);
        let i = *index.entry(w.clone()).or_insert_with(|| {
            image_elems.push(w);
            image_elems.len() - 1
        });
        images.push(i);
    }
    let k = image_elems.len();
    let image = Arc::new(Group::from_product_fn(k, |a, b| index[&image_elems[a].mul(&image_elems[b], &g)])?);
    let phi = Hom::new(g, image.clone(), images)?;
    Ok(WreathEmbedding { image, image_elems, phi })
}

/// The extension `1 → M^T → Ĝ → G → 1` obtained by pulling back
/// `κ ≀ 1: Ĥ ≀ Sym(T) → H ≀ Sym(T)` along the wreath embedding of `G`.
pub struct ExtensionTensor {
    pub group: Arc<Group>,
    pub kappa_g: Hom,
    /// `M^T`, one factor per transversal element in order.
    pub kernel: DirectProduct,
    pub kernel_in: Hom,
    /// `M = ker κ` inside `Ĥ`.
    pub m_in: Hom,
    pub transversal: Transversal,
    /// Each element of `Ĝ` as an element of `Ĥ ≀ Sym(T)` (coordinates in `Ĥ`).
    pub to_wreath: Vec<WreathElem>,
}

/// Builds `κ^{⊗G}` from `kappa: Ĥ → H` and an inclusion `h_in: H → G`.
pub fn extension_tensor(kappa: &Hom, h_in: &Hom) -> Result<ExtensionTensor> {
    if !kappa.is_surjective() {
        return Err(Error::NotSurjective("kappa".into()));
    }
    if *kappa.dst() != *h_in.src() {
        return Err(Error::GroupMismatch("kappa does not map onto the subgroup".into()));
    }
    if !h_in.is_injective() {
        return Err(Error::NotInjective("H is not a subgroup of G".into()));
    }
    let g = h_in.dst().clone();
    let h_hat = kappa.src().clone();
    let back = h_in.inverse_lookup()?;
    let trans = coset_transversal(&g, &h_in.image())?;
    let tlen = trans.len();
    let (m, m_in) = kernel_subgroup(kappa)?;
    let order = m
        .order()
        .checked_pow(tlen as u32)
        .and_then(|x| x.checked_mul(g.order()))
        .unwrap_or(usize::MAX);
    if order > ORDER_CAP {
        return Err(Error::SizeCap { order, cap: ORDER_CAP });
    }
    let mut fibers = vec![Vec::new(); kappa.dst().order()];
    for x in h_hat.elements() {
        fibers[kappa.apply(x)].push(x);
    }
    // elements: (g, lifts ĥ_t)
    let mut elems: Vec<(usize, Vec<usize>)> = Vec::with_capacity(order);
    for x in g.elements() {
        let fs: Vec<&Vec<usize>> = (0..tlen)
            .map(|t| &fibers[back[trans.cofactor(t, x)].expect("cofactor lies in H")])
            .collect();
        let mut idx = vec![0usize; tlen];
        loop {
            elems.push((x, (0..tlen).map(|t| fs[t][idx[t]]).collect()));
            let mut t = tlen;
            loop {
                if t == 0 {
                    break;
                }
                t -= 1;
                idx[t] += 1;
                if idx[t] < fs[t].len() {
                    break;
                }
                idx[t] = 0;
                if t == 0 {
                    t = usize::MAX;
                    break;
                }
            }
            if t == usize::MAX || tlen == 0 {
                break;
            }
        }
    }
    debug_assert_eq!(elems.len(), order);
    let lookup: HashMap<(usize, Vec<usize>), usize> =
        elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let group = Arc::new(Group::from_product_fn(elems.len(), |a, b| {
        let (g1, h1) = &elems[a];
        let (g2, h2) = &elems[b];
        let lifts: Vec<usize> = (0..tlen).map(|t| h_hat.mul(h1[t], h2[trans.act(t, *g1)])).collect();
        lookup[&(g.mul(*g1, *g2), lifts)]
    })?);
    let kappa_g = Hom::new(group.clone(), g.clone(), elems.iter().map(|e| e.0).collect())?;
    let kernel = DirectProduct::new(vec![m.clone(); tlen])?;
    let kernel_in = Hom::new(
        kernel.group.clone(),
        group.clone(),
        kernel
            .group
            .elements()
            .map(|x| {
                let lifts: Vec<usize> = kernel.decode(x).iter().map(|&c| m_in.apply(c)).collect();
                lookup[&(0, lifts)]
            })
            .collect(),
    )?;
    let to_wreath = elems
        .iter()
        .map(|(x, lifts)| WreathElem { perm: (0..tlen).map(|t| trans.act(t, *x)).collect(), coords: lifts.clone() })
        .collect();
    Ok(ExtensionTensor { group, kappa_g, kernel, kernel_in, m_in, transversal: trans, to_wreath })
}

// ---------------------------------------------------------------------------
// Structure
// ---------------------------------------------------------------------------

/// Invariant factors `d₁ | d₂ | …` of an abelian group; `None` if the group
/// is not abelian.
pub fn abelian_invariants(g: &Group) -> Option<Vec<usize>> {
    if !g.is_abelian() {
        return None;
    }
    let n = g.order();
    let mut per_prime: Vec<Vec<usize>> = Vec::new();
    for p in crate::cyclofield::prime_factors(n as u32) {
        let p = p as usize;
        // a_k = log_p |{x : x^{p^k} = 1}|
        let mut logs = vec![0usize];
        let mut pk = 1;
        loop {
            pk *= p;
            let count = g.elements().filter(|&x| g.pow(x, pk) == 0).count();
            let mut l = 0;
            let mut c = count;
            while c > 1 {
                c /= p;
                l += 1;
            }
            logs.push(l);
            if count == n || logs[logs.len() - 1] == logs[logs.len() - 2] {
                break;
            }
        }
        // number of cyclic factors of order >= p^k is a_k - a_{k-1}
        let mut parts = Vec::new();
        for k in 1..logs.len() {
            let at_least = logs[k] - logs[k - 1];
            let next = if k + 1 < logs.len() { logs[k + 1] - logs[k] } else { 0 };
            for _ in 0..(at_least - next) {
                parts.push(p.pow(k as u32));
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push(parts);
    }
    let len = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut inv: Vec<usize> = (0..len)
        .map(|i| per_prime.iter().map(|parts| parts.get(i).copied().unwrap_or(1)).product())
        .collect();
    inv.reverse();
    Some(inv)
}

/// An isomorphism `a → b`, by backtracking over images of a generating set.
pub fn find_isomorphism(a: &Arc<Group>, b: &Arc<Group>) -> Option<Hom> {
    if a.order() != b.order() {
        return None;
    }
    let mut ord_a: Vec<usize> = a.elements().map(|x| a.element_order(x)).collect();
    let mut ord_b: Vec<usize> = b.elements().map(|x| b.element_order(x)).collect();
    let ord_b_by_elem = ord_b.clone();
    ord_a.sort_unstable();
    ord_b.sort_unstable();
    if ord_a != ord_b {
        return None;
    }
    let gens = a.generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| b.elements().filter(|&y| ord_b_by_elem[y] == a.element_order(x)).collect())
        .collect();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let imgs: Vec<usize> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if let Some(map) = extend_to_hom(a, b, &gens, &imgs) {
            let distinct: BTreeSet<usize> = map.iter().copied().collect();
            if distinct.len() == a.order() {
                return Hom::new(a.clone(), b.clone(), map).ok();
            }
        }
        let mut i = gens.len();
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

fn extend_to_hom(a: &Group, b: &Group, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; a.order()];
    map[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&g, &h) in gens.iter().zip(imgs) {
            let y = a.mul(x, g);
            let fy = b.mul(map[x], h);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

pub fn is_isomorphic(a: &Arc<Group>, b: &Arc<Group>) -> bool {
    find_isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(g: Group) -> Arc<Group> {
        Arc::new(g)
    }

    fn s3() -> Arc<Group> {
        arc(Group::from_permutations(3, &["(1 2)", "(1 2 3)"]).unwrap())
    }

    /// Q8 from its presentation: elements ±1, ±i, ±j, ±k as (sign, unit).
    pub(crate) fn q8_table() -> Vec<Vec<usize>> {
        // unit multiplication: 0=1,1=i,2=j,3=k ; (sign, unit)
        let mul_unit = |a: usize, b: usize| -> (bool, usize) {
            match (a, b) {
                (0, x) | (x, 0) => (false, x),
                (x, y) if x == y => (true, 0),
                (1, 2) => (false, 3),
                (2, 1) => (true, 3),
                (2, 3) => (false, 1),
                (3, 2) => (true, 1),
                (3, 1) => (false, 2),
                (1, 3) => (true, 2),
                _ => unreachable!(),
            }
        };
        let enc = |neg: bool, u: usize| 2 * u + neg as usize;
        (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (n1, u1) = (x % 2 == 1, x / 2);
                        let (n2, u2) = (y % 2 == 1, y / 2);
                        let (n3, u3) = mul_unit(u1, u2);
                        enc(n1 ^ n2 ^ n3, u3)
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn cayley_examples() {
        let c2 = Group::from_cayley(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(c2.order(), 2);
        // C3 with a transposed typo: still Latin but not associative
        let bad = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 0]];
        assert!(Group::from_cayley(&bad).is_err());
        let typo = vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 1, 0], vec![3, 2, 0, 1]];
        // this one is C4 written differently; associativity must hold
        assert!(Group::from_cayley(&typo).is_ok());
        let nonassoc = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(Group::from_cayley(&nonassoc), Err(Error::InvalidGroup(_))));
        let q8 = Group::from_cayley(&q8_table()).unwrap();
        assert_eq!(q8.order(), 8);
        assert!(q8.elements().all(|x| q8.mul(x, q8.inv(x)) == 0));
        assert_eq!(q8.center(), vec![0, 1]);
    }

    #[test]
    fn identity_is_relocated() {
        // C2 with the identity at index 1
        let g = Group::from_cayley(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(s3().order(), 6);
        let v4 = Group::from_permutations(4, &["(1 2)(3 4)", "(1 3)(2 4)"]).unwrap();
        assert_eq!((v4.order(), v4.exponent()), (4, 2));
        assert_eq!(Group::from_permutations(2, &[]).unwrap().order(), 1);
        assert!(matches!(
            Group::from_permutations(3, &["(1 4)"]),
            Err(Error::MalformedPermutation(_))
        ));
        assert!(Group::from_permutations(3, &["(1 2"]).is_err());
        // S6 is too large
        assert!(matches!(
            Group::from_permutations(6, &["(1 2)", "(1 2 3 4 5 6)"]),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn quotient_examples() {
        let q8 = arc(Group::from_cayley(&q8_table()).unwrap());
        let (q, proj) = quotient(&q8, &q8.center()).unwrap();
        assert_eq!((q.order(), q.exponent()), (4, 2));
        assert_eq!(proj.kernel(), q8.center());
        let (q, _) = quotient(&q8, &[0]).unwrap();
        assert!(is_isomorphic(&q, &q8));
        let all: Vec<usize> = q8.elements().collect();
        assert_eq!(quotient(&q8, &all).unwrap().0.order(), 1);
        let s3 = s3();
        let transp = s3.generated(&[s3.elements().find(|&x| s3.element_order(x) == 2).unwrap()]);
        assert!(matches!(quotient(&s3, &transp), Err(Error::NotNormal(_))));
        assert!(matches!(quotient(&s3, &[0, 1]), Err(Error::NotSubgroup(_)) | Err(Error::NotNormal(_))));
    }

    #[test]
    fn pullback_examples() {
        let c4 = arc(Group::cyclic(4).unwrap());
        let c2 = arc(Group::cyclic(2).unwrap());
        let epi = Hom::new(c4.clone(), c2.clone(), vec![0, 1, 0, 1]).unwrap();
        let pb = pullback(&epi, &epi).unwrap();
        assert_eq!(pb.group.order(), 8);
        assert_eq!(abelian_invariants(&pb.group), Some(vec![2, 4]));
        assert_eq!(pb.kappa.kernel().len(), 4);
        let s3 = s3();
        let id = Hom::identity(&s3);
        let diag = pullback(&id, &id).unwrap();
        assert!(is_isomorphic(&diag.group, &s3));
        let sign = Hom::new(
            s3.clone(),
            c2.clone(),
            s3.elements().map(|x| if s3.element_order(x) == 2 { 1 } else { 0 }).collect(),
        )
        .unwrap();
        assert_eq!(pullback(&sign, &epi).unwrap().group.order(), 12);
        let triv = Hom::new(c4.clone(), c2.clone(), vec![0; 4]).unwrap();
        assert!(matches!(pullback(&triv, &epi), Err(Error::NotSurjective(_))));
    }

    #[test]
    fn semidirect_examples() {
        let c2 = arc(Group::cyclic(2).unwrap());
        let c3 = arc(Group::cyclic(3).unwrap());
        let sd = semidirect(&c2, &c3, &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        assert!(!sd.group.is_abelian());
        assert!(is_isomorphic(&sd.group, &s3()));
        let direct = semidirect(&c2, &c3, &[vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
        assert!(direct.group.is_abelian());
        let c4 = arc(Group::cyclic(4).unwrap());
        let c5 = arc(Group::cyclic(5).unwrap());
        let action: Vec<Vec<usize>> =
            (0..4u32).map(|k| (0..5).map(|c| c * 2usize.pow(k) % 5).collect()).collect();
        let f20 = semidirect(&c4, &c5, &action).unwrap();
        assert_eq!(f20.group.order(), 20);
        assert_eq!(f20.group.center(), vec![0]);
        // not a homomorphism into Aut(C5)
        let bad: Vec<Vec<usize>> = vec![vec![0, 1, 2, 3, 4], vec![0, 2, 4, 1, 3], vec![0, 1, 2, 3, 4], vec![0, 1, 2, 3, 4]];
        assert!(matches!(semidirect(&c4, &c5, &bad), Err(Error::InvalidAction(_))));
        let not_auto = vec![vec![0, 0, 0, 0, 0]; 4];
        assert!(matches!(semidirect(&c4, &c5, &not_auto), Err(Error::InvalidAction(_))));
    }

    #[test]
    fn transversal_examples() {
        let s3 = s3();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let h = s3.generated(&[t]);
        let tr = coset_transversal(&s3, &h).unwrap();
        assert_eq!(tr.len(), 3);
        assert_eq!(tr.reps()[0], 0);
        let c = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        // t ↦ t∘c is a 3-cycle
        let p: Vec<usize> = (0..3).map(|i| tr.act(i, c)).collect();
        assert!(p.iter().enumerate().all(|(i, &j)| i != j));
        for i in 0..3 {
            for g in s3.elements() {
                let lhs = s3.mul(tr.reps()[i], g);
                let rhs = s3.mul(tr.cofactor(i, g), tr.reps()[tr.act(i, g)]);
                assert_eq!(lhs, rhs);
                assert!(h.contains(&tr.cofactor(i, g)));
            }
        }
        let all: Vec<usize> = s3.elements().collect();
        let tr = coset_transversal(&s3, &all).unwrap();
        assert_eq!(tr.reps(), &[0]);
        assert!(s3.elements().all(|g| tr.act(0, g) == 0 && tr.cofactor(0, g) == g));
        let tr = coset_transversal(&s3, &[0]).unwrap();
        assert_eq!(tr.len(), 6);
        assert!(s3.elements().all(|g| (0..6).all(|i| tr.cofactor(i, g) == 0)));
        assert!(coset_transversal(&s3, &[0, c]).is_err());
    }

    #[test]
    fn wreath_embedding_examples() {
        let s3 = s3();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let h = s3.generated(&[t]);
        let tr = coset_transversal(&s3, &h).unwrap();
        let we = wreath_embedding(&tr).unwrap();
        assert!(we.phi.is_injective());
        for a in s3.elements() {
            for b in s3.elements() {
                let lhs = wreath_map(&tr, s3.mul(a, b));
                let rhs = wreath_map(&tr, a).mul(&wreath_map(&tr, b), &s3);
                assert_eq!(lhs, rhs);
            }
        }
        // normal form σ(g)·(h(t∘g⁻¹, g))_t
        for g in s3.elements() {
            let d = wreath_map(&tr, g).post_permutation_coords();
            for s in 0..tr.len() {
                let src = tr.act(s, s3.inv(g));
                assert_eq!(d[s], tr.cofactor(src, g));
            }
        }
        let all: Vec<usize> = s3.elements().collect();
        let tr = coset_transversal(&s3, &all).unwrap();
        let we = wreath_embedding(&tr).unwrap();
        for g in s3.elements() {
            assert_eq!(we.phi_elem(g), &WreathElem { perm: vec![0], coords: vec![g] });
        }
    }

    #[test]
    fn extension_tensor_examples() {
        let c2 = arc(Group::cyclic(2).unwrap());
        let triv = arc(Group::trivial());
        // Ĥ = C2 → H = 1 ≤ G = C2
        let kappa = Hom::new(c2.clone(), triv.clone(), vec![0, 0]).unwrap();
        let h_in = Hom::new(triv.clone(), c2.clone(), vec![0]).unwrap();
        let ext = extension_tensor(&kappa, &h_in).unwrap();
        assert_eq!(ext.group.order(), 8);
        assert_eq!(ext.kappa_g.kernel().len(), 4);
        assert_eq!(abelian_invariants(&ext.kernel.group), Some(vec![2, 2]));
        // H = G gives back κ
        let c4 = arc(Group::cyclic(4).unwrap());
        let epi = Hom::new(c4.clone(), c2.clone(), vec![0, 1, 0, 1]).unwrap();
        let ext = extension_tensor(&epi, &Hom::identity(&c2)).unwrap();
        assert!(is_isomorphic(&ext.group, &c4));
        // κ: C4 → C2 with C2 ≤ V4
        let v4 = arc(Group::from_permutations(4, &["(1 2)(3 4)", "(1 3)(2 4)"]).unwrap());
        let inc = Hom::new(c2.clone(), v4.clone(), vec![0, 1]).unwrap();
        let ext = extension_tensor(&epi, &inc).unwrap();
        assert_eq!(ext.group.order(), 16);
        assert_eq!(abelian_invariants(&ext.kernel.group), Some(vec![2, 2]));
        assert_eq!(ext.kappa_g.image().len(), 4);
    }

    #[test]
    fn isomorphism_and_invariants() {
        let c6 = arc(Group::cyclic(6).unwrap());
        let c2 = arc(Group::cyclic(2).unwrap());
        let c3 = arc(Group::cyclic(3).unwrap());
        let p = DirectProduct::new(vec![c2, c3]).unwrap();
        assert!(is_isomorphic(&p.group, &c6));
        assert!(!is_isomorphic(&c6, &s3()));
        assert_eq!(abelian_invariants(&c6), Some(vec![6]));
        assert_eq!(abelian_invariants(&s3()), None);
    }
}
