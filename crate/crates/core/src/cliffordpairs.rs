//! Clifford pairs `(θ, κ)`: a surjection `κ: Ĝ → G` together with an
//! irreducible character `θ` of `N = ker κ`.
//!
//! This module decides semi-invariance, computes the center algebra data
//! `(F(θ), r, stabilizer, action)` and implements the pair constructions:
//! conjugate, product, identity, cyclic reduction, restriction, induction and
//! corestriction.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::charkit::{
    conj_action_unchecked, galois_twist, induce, normal_embedding, product_character, product_character_many,
    transport, Character, ConjClasses,
};
use crate::corpus::{parse_hom, GroupFile, GroupRef, HomFile};
use crate::cyclofield::{galois_group, Cyclotomic, FieldSpec, GaloisElem};
use crate::error::{Error, Result};
use crate::groupkit::{
    abelian_invariants, extension_tensor, fiber_product, kernel_subgroup, pullback, quotient, semidirect,
    DirectProduct, ExtensionTensor, Group, Hom,
};
use crate::grpalg::{check_kernel, conj_alg, idempotent_e_f, orbit_idempotent, CycMatrix, GroupAlgElem, ModuleRep};

#[derive(Clone, Debug)]
pub struct CliffordPair {
    kappa: Hom,
    n_in: Hom,
    theta: Character,
}

impl CliffordPair {
    /// Validates `κ` surjective, `image(n_in) = ker κ` and `⟨θ,θ⟩ = 1`.
    pub fn new(kappa: Hom, n_in: Hom, theta: Character) -> Result<CliffordPair> {
        if !kappa.is_surjective() {
            return Err(Error::NotSurjective("kappa".into()));
        }
        check_kernel(&kappa, &n_in)?;
        if **theta.group() != **n_in.src() {
            return Err(Error::NotOnKernel("theta is a character of another group".into()));
        }
        theta.require_irreducible()?;
        Ok(CliffordPair { kappa, n_in, theta })
    }

    /// `Ĝ`.
    pub fn cover(&self) -> &Arc<Group> {
        self.kappa.src()
    }

    /// `G`.
    pub fn target(&self) -> &Arc<Group> {
        self.kappa.dst()
    }

    pub fn kernel(&self) -> &Arc<Group> {
        self.n_in.src()
    }

    pub fn kappa(&self) -> &Hom {
        &self.kappa
    }

    pub fn n_in(&self) -> &Hom {
        &self.n_in
    }

    pub fn theta(&self) -> &Character {
        &self.theta
    }

    /// `θ^ĝ` for `ĝ ∈ Ĝ`.
    pub fn conj_theta(&self, g_hat: usize) -> Character {
        let back = self.n_in.inverse_lookup().expect("kernel embedding is injective");
        conj_action_unchecked(&self.theta, g_hat, &self.n_in, &back)
    }

    /// JSON form with `κ` spelled out as a homomorphism file, the kernel as
    /// elements of `Ĝ` and `θ` given on each of them.
    pub fn to_json(&self, field: &FieldSpec) -> serde_json::Value {
        let kappa = HomFile {
            name: None,
            src: GroupRef::Inline(GroupFile::from_group(None, self.cover())),
            dst: GroupRef::Inline(GroupFile::from_group(None, self.target())),
            images: self.kappa.images().to_vec(),
        };
        let n = self.kernel();
        let element_values: Vec<&Cyclotomic> = n.elements().map(|x| self.theta.value_at(x)).collect();
        serde_json::json!({
            "kappa": kappa,
            "kernel": self.n_in.images(),
            "theta": {
                "degree": self.theta.degree(),
                "element_values": element_values,
            },
            "field": field_json(field),
        })
    }

    /// Reads the output of [`CliffordPair::to_json`]; `θ` is re-indexed
    /// through the listed kernel elements.
    pub fn from_json(v: &serde_json::Value) -> Result<CliffordPair> {
        let bad = |what: &str| Error::InvalidGroup(format!("pair description: {what}"));
        let kappa_file: HomFile =
            serde_json::from_value(v.get("kappa").cloned().ok_or_else(|| bad("missing kappa"))?).map_err(|e| bad(&e.to_string()))?;
        let kappa = parse_hom(&serde_json::to_string(&kappa_file).expect("serializes"), &|name| crate::corpus::group(name))?;
        let listed: Vec<usize> =
            serde_json::from_value(v.get("kernel").cloned().ok_or_else(|| bad("missing kernel"))?).map_err(|e| bad(&e.to_string()))?;
        let values: Vec<Cyclotomic> = serde_json::from_value(
            v.pointer("/theta/element_values").cloned().ok_or_else(|| bad("missing theta.element_values"))?,
        )
        .map_err(|e| bad(&e.to_string()))?;
        if listed.len() != values.len() {
            return Err(bad("kernel and theta.element_values differ in length"));
        }
        let (n, n_in) = kernel_subgroup(&kappa)?;
        let mut by_elem: Vec<Option<Cyclotomic>> = vec![None; kappa.src().order()];
        for (&g, val) in listed.iter().zip(values) {
            *by_elem.get_mut(g).ok_or_else(|| bad("kernel element out of range"))? = Some(val);
        }
        let on_n = n
            .elements()
            .map(|x| by_elem[n_in.apply(x)].clone().ok_or_else(|| bad("listed kernel is not ker kappa")))
            .collect::<Result<Vec<_>>>()?;
        let theta = Character::from_element_values(ConjClasses::new(&n), &on_n)?;
        CliffordPair::new(kappa, n_in, theta)
    }
}

pub fn pair_make(kappa: Hom, n_in: Hom, theta: Character) -> Result<CliffordPair> {
    CliffordPair::new(kappa, n_in, theta)
}

/// Builds the kernel of `kappa` and picks `θ` by a closure over its table.
pub fn pair_on_kernel(kappa: &Hom, pick: impl FnOnce(&Arc<Group>) -> Result<Character>) -> Result<CliffordPair> {
    let (n, n_in) = kernel_subgroup(kappa)?;
    let theta = pick(&n)?;
    CliffordPair::new(kappa.clone(), n_in, theta)
}

/// Field names print as shorthands when one exists.
pub fn field_json(f: &FieldSpec) -> serde_json::Value {
    match f.name() {
        Some(n) => serde_json::Value::String(n),
        None => serde_json::to_value(f).expect("field serializes"),
    }
}

// ---------------------------------------------------------------------------
// Galois action maps and the center algebra
// ---------------------------------------------------------------------------

/// A homomorphism `g ↦ α_g` from a subgroup of `G` into `Gal(E/F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisActionMap {
    group: Arc<Group>,
    domain: Vec<usize>,
    field: FieldSpec,
    base: FieldSpec,
    images: Vec<GaloisElem>,
}

impl GaloisActionMap {
    /// `domain` must be a subgroup of `group`; every image must fix `base`,
    /// and the map must be multiplicative.
    pub fn new(
        group: &Arc<Group>,
        domain: Vec<usize>,
        field: &FieldSpec,
        base: &FieldSpec,
        images: Vec<GaloisElem>,
    ) -> Result<Self> {
        let mut pairs: Vec<(usize, GaloisElem)> = domain.into_iter().zip(images).collect();
        pairs.sort_by_key(|p| p.0);
        let (domain, images): (Vec<usize>, Vec<GaloisElem>) = pairs.into_iter().unzip();
        if !group.is_subgroup(&domain) {
            return Err(Error::NotSubgroup("domain of the Galois action".into()));
        }
        let gal = galois_group(field, base)?;
        if let Some(bad) = images.iter().find(|s| !gal.contains(s)) {
            return Err(Error::InvalidAction(format!("sigma_{} is not in Gal({field}/{base})", bad.rep())));
        }
        let m = GaloisActionMap { group: group.clone(), domain, field: field.clone(), base: base.clone(), images };
        for (i, &a) in m.domain.iter().enumerate() {
            for (j, &b) in m.domain.iter().enumerate() {
                let lhs = m.get(group.mul(a, b)).expect("domain is closed");
                if *lhs != m.images[i].compose(&m.images[j])? {
                    return Err(Error::InvalidAction(format!("alpha is not multiplicative at ({a}, {b})")));
                }
            }
        }
        Ok(m)
    }

    /// Map defined on all of `G` through per-element Galois exponents.
    pub fn from_exponents(group: &Arc<Group>, field: &FieldSpec, base: &FieldSpec, exps: &[i64]) -> Result<Self> {
        if exps.len() != group.order() {
            return Err(Error::InvalidAction(format!("{} exponents for {} elements", exps.len(), group.order())));
        }
        let images = exps.iter().map(|&k| GaloisElem::new(field, k)).collect::<Result<_>>()?;
        Self::new(group, group.elements().collect(), field, base, images)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn get(&self, g: usize) -> Option<&GaloisElem> {
        self.domain.binary_search(&g).ok().map(|i| &self.images[i])
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(GaloisElem::is_identity)
    }

    /// Pulls the map back along `eps: H → G`, whose image must lie in the
    /// domain.
    pub fn pull_back(&self, eps: &Hom) -> Result<GaloisActionMap> {
        let images = eps
            .src()
            .elements()
            .map(|h| self.get(eps.apply(h)).cloned().ok_or_else(|| Error::ActionMismatch("outside the domain".into())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(eps.src(), eps.src().elements().collect(), &self.field, &self.base, images)
    }

    /// Representatives `{g: k}` of the images.
    pub fn exponent_map(&self) -> BTreeMap<usize, u32> {
        self.domain.iter().zip(&self.images).map(|(&g, s)| (g, s.rep())).collect()
    }
}

impl Serialize for GaloisActionMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m: BTreeMap<String, u32> = self.exponent_map().into_iter().map(|(g, k)| (g.to_string(), k)).collect();
        m.serialize(s)
    }
}

/// `Z(θ,κ,F) ≅ F(θ)^r`, permuted transitively by `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterAlgebraInfo {
    pub field: FieldSpec,
    pub orbit_size: usize,
    pub stabilizer: Vec<usize>,
    /// Action of the stabilizer on `field`.
    pub action: GaloisActionMap,
}

impl CenterAlgebraInfo {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "field": field_json(&self.field),
            "r": self.orbit_size,
            "stabilizer": self.stabilizer,
            "action": self.action,
        })
    }
}

impl Serialize for CenterAlgebraInfo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// The `α ∈ gal` with `(θ^ĝ)^α = θ`, if any.
fn alpha_for(pair: &CliffordPair, g_hat: usize, back: &[Option<usize>], gal: &[GaloisElem]) -> Result<Option<GaloisElem>> {
    let conj = conj_action_unchecked(&pair.theta, g_hat, &pair.n_in, back);
    for a in gal {
        if galois_twist(&conj, a)? == pair.theta {
            return Ok(Some(a.clone()));
        }
    }
    Ok(None)
}

/// The map `g ↦ α_g` with `θ^{ĝ α_g} = θ` when it exists on all of `G`.
/// The kernel of its lift to `Ĝ` is checked to be the stabilizer `Ĝ_θ`.
pub fn semi_invariance(pair: &CliffordPair, f: &FieldSpec) -> Result<Option<GaloisActionMap>> {
    let e = pair.theta.field_of_values(f);
    let gal = galois_group(&e, f)?;
    let back = normal_embedding(&pair.n_in)?;
    let g = pair.target();
    let mut images = Vec::with_capacity(g.order());
    for x in g.elements() {
        let lift = pair.kappa.preimage(x).expect("kappa is surjective");
        match alpha_for(pair, lift, &back, &gal)? {
            Some(a) => images.push(a),
            None => return Ok(None),
        }
    }
    let map = GaloisActionMap::new(g, g.elements().collect(), &e, f, images)?;
    for y in pair.cover().elements() {
        let fixes = conj_action_unchecked(&pair.theta, y, &pair.n_in, &back) == pair.theta;
        let trivial = map.get(pair.kappa.apply(y)).expect("defined on G").is_identity();
        if fixes != trivial {
            return Err(Error::Certification(format!("kernel of the lifted action differs from the stabilizer at {y}")));
        }
    }
    Ok(Some(map))
}

pub fn center_algebra(pair: &CliffordPair, f: &FieldSpec) -> Result<CenterAlgebraInfo> {
    let e = pair.theta.field_of_values(f);
    let orbit = orbit_idempotent(&pair.theta, f, &pair.kappa, &pair.n_in)?;
    let gal = galois_group(&e, f)?;
    let back = normal_embedding(&pair.n_in)?;
    let mut images = Vec::with_capacity(orbit.stabilizer.len());
    for &h in &orbit.stabilizer {
        let lift = pair.kappa.preimage(h).expect("kappa is surjective");
        let a = alpha_for(pair, lift, &back, &gal)?
            .ok_or_else(|| Error::Certification(format!("stabilizer element {h} has no Galois partner")))?;
        images.push(a);
    }
    let action = GaloisActionMap::new(pair.target(), orbit.stabilizer.clone(), &e, f, images)?;
    if orbit.orbit_size * orbit.stabilizer.len() != pair.target().order() {
        return Err(Error::Certification("orbit-stabilizer count fails".into()));
    }
    Ok(CenterAlgebraInfo { field: e, orbit_size: orbit.orbit_size, stabilizer: orbit.stabilizer, action })
}

fn require_semi_invariant(pair: &CliffordPair, f: &FieldSpec) -> Result<GaloisActionMap> {
    semi_invariance(pair, f)?.ok_or(Error::NotSemiInvariant)
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// `(θ̄, κ)`.
pub fn conjugate_pair(pair: &CliffordPair) -> CliffordPair {
    CliffordPair { kappa: pair.kappa.clone(), n_in: pair.n_in.clone(), theta: pair.theta.conj() }
}

/// `(θ₁ × θ₂, κ₁ ×_G κ₂)` for pairs with identical Galois action maps.
pub fn product_pair(p1: &CliffordPair, p2: &CliffordPair, f: &FieldSpec) -> Result<CliffordPair> {
    if **p1.target() != **p2.target() {
        return Err(Error::GroupMismatch("pairs have different target groups".into()));
    }
    let a1 = require_semi_invariant(p1, f)?;
    let a2 = require_semi_invariant(p2, f)?;
    // equal data is the usual case; a pair whose field lies inside the
    // other's only has to agree after restriction
    let compatible = |big: &GaloisActionMap, small: &GaloisActionMap| -> Result<bool> {
        if !small.field.is_subfield_of(&big.field) {
            return Ok(false);
        }
        for (g, a) in big.domain.iter().zip(&big.images) {
            if small.get(*g).map(|b| a.restrict(&small.field).map(|r| &r == b)).transpose()? != Some(true) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    if !compatible(&a1, &a2)? && !compatible(&a2, &a1)? {
        return Err(Error::ActionMismatch(format!(
            "the maps g -> alpha_g on {} and {} are not compatible",
            a1.field, a2.field
        )));
    }
    let pb = pullback(&p1.kappa, &p2.kappa)?;
    let n = DirectProduct::new(vec![p1.kernel().clone(), p2.kernel().clone()])?;
    let n_in_images = n
        .group
        .elements()
        .map(|x| {
            let c = n.decode(x);
            pb.index_of(p1.n_in.apply(c[0]), p2.n_in.apply(c[1])).expect("kernel pairs lie in the pullback")
        })
        .collect();
    let n_in = Hom::new(n.group.clone(), pb.group.clone(), n_in_images)?;
    let theta = product_character(&p1.theta, &p2.theta, &n)?;
    let out = CliffordPair::new(pb.kappa.clone(), n_in, theta)?;
    let a = require_semi_invariant(&out, f)?;
    let larger = if a1.field.is_subfield_of(&a2.field) { &a2 } else { &a1 };
    if a.exponent_map() != larger.exponent_map() || a.field != larger.field {
        return Err(Error::Certification("product pair changed the Galois action".into()));
    }
    Ok(out)
}

/// The group `Gal(Q(ζ_n)/F)` realized on the units fixing `F`; index 0 is
/// the unit 1.
fn unit_group(n: u32, f: &FieldSpec) -> Result<(Arc<Group>, Vec<u32>)> {
    let units = f.stabilizer_at(n);
    let pos = |k: u32| units.binary_search(&k).expect("stabilizer is closed");
    let rows: Vec<Vec<usize>> = units
        .iter()
        .map(|&a| units.iter().map(|&b| pos(((a as u64 * b as u64) % n.max(1) as u64) as u32 % n.max(1))).collect())
        .collect();
    Ok((Arc::new(Group::from_cayley(&rows)?), units))
}

/// `Gal(E/F)` as an abstract group, in the order of [`galois_group`].
fn galois_abstract(e: &FieldSpec, f: &FieldSpec) -> Result<(Arc<Group>, Vec<GaloisElem>)> {
    let elems = galois_group(e, f)?;
    let pos = |s: &GaloisElem| elems.iter().position(|t| t == s).expect("closed under composition");
    let mut rows = Vec::new();
    for a in &elems {
        rows.push(elems.iter().map(|b| a.compose(b).map(|c| pos(&c))).collect::<Result<Vec<_>>>()?);
    }
    Ok((Arc::new(Group::from_cayley(&rows)?), elems))
}

pub struct IdentityPair {
    pub pair: CliffordPair,
    /// `Q(ζ_n)` as a module for `Ĝ`, rows acting on the power basis.
    pub module: ModuleRep,
    pub field: FieldSpec,
    /// Order of the `A` part of `N = A ⋉ C`.
    pub a_order: usize,
}

/// The pair realizing `(E, β)`: `Ĝ = U ⋉ C_n` with `U` the pullback of
/// `β: G → Gal(E/F)` and `Gal(Q(ζ_n)/F) → Gal(E/F)`, and `θ = λ^N` for a
/// faithful linear `λ` of `C_n`.
pub fn identity_pair(beta: &GaloisActionMap, n: u32) -> Result<IdentityPair> {
    let g = beta.group().clone();
    if beta.domain().len() != g.order() {
        return Err(Error::InvalidAction("beta must be defined on the whole group".into()));
    }
    let (e, f) = (beta.field().clone(), beta.base().clone());
    if n == 0 || n % e.conductor() != 0 {
        return Err(Error::NotSubfield(format!("{e} is not contained in Q(zeta{n})")));
    }
    let (gal_e, gal_elems) = galois_abstract(&e, &f)?;
    let pos_e = |s: &GaloisElem| gal_elems.iter().position(|t| t == s).expect("image lies in Gal(E/F)");
    let beta_hom = Hom::new(g.clone(), gal_e.clone(), g.elements().map(|x| pos_e(beta.get(x).unwrap())).collect())
        .map_err(|_| Error::InvalidAction("beta is not multiplicative".into()))?;
    let (gamma, units) = unit_group(n, &f)?;
    let restr = Hom::new(
        gamma.clone(),
        gal_e.clone(),
        units.iter().map(|&k| GaloisElem::new(&e, k as i64).map(|s| pos_e(&s))).collect::<Result<_>>()?,
    )?;
    let u = fiber_product(&beta_hom, &restr)?;
    let c = Arc::new(Group::cyclic(n as usize)?);
    let unit_of = |x: usize| units[u.proj2.apply(x)] as usize;
    let action: Vec<Vec<usize>> =
        u.group.elements().map(|x| (0..n as usize).map(|cc| cc * unit_of(x) % n as usize).collect()).collect();
    let sd = semidirect(&u.group, &c, &action)?;
    let cn = n as usize;
    let kappa = Hom::new(sd.group.clone(), g.clone(), sd.group.elements().map(|x| u.proj1.apply(x / cn)).collect())?;
    let (nk, n_in) = kernel_subgroup(&kappa)?;
    let back = n_in.inverse_lookup()?;
    let c_in_n = Hom::new(c.clone(), nk.clone(), c.elements().map(|x| back[sd.c_in.apply(x)].unwrap()).collect())?;
    let lambda = Character::new(
        ConjClasses::new(&c),
        ConjClasses::new(&c).reps().iter().map(|&x| Cyclotomic::root_of_unity(n, x as i64)).collect(),
    )?;
    let theta = induce(&c_in_n, &lambda)?;
    let pair = CliffordPair::new(kappa, n_in, theta)?;

    // V = Q(ζ_n): v·(u c) = σ_k(v) ζ^c
    let dim = crate::cyclofield::phi(n);
    let mats: Vec<CycMatrix> = sd
        .group
        .elements()
        .map(|x| {
            let (k, cc) = (unit_of(x / cn) as i64, (x % cn) as i64);
            (0..dim)
                .map(|i| {
                    Cyclotomic::root_of_unity(n, i as i64 * k + cc)
                        .coords_at(n)
                        .expect("conductor divides n")
                        .into_iter()
                        .map(Cyclotomic::from_rational)
                        .collect()
                })
                .collect()
        })
        .collect();
    let module = ModuleRep::new(&sd.group, mats)?;

    let info = center_algebra(&pair, &f)?;
    if info.field != e || info.orbit_size != 1 || info.action.exponent_map() != beta.exponent_map() {
        return Err(Error::Certification(format!(
            "identity pair has center ({}, r={}) instead of ({e}, r=1) with beta",
            info.field, info.orbit_size
        )));
    }
    let a_order = pair.kernel().order() / cn;
    Ok(IdentityPair { pair, module, field: e, a_order })
}

/// Replaces an abelian kernel by the cyclic group `N/ker θ`.
pub fn cyclic_reduction(pair: &CliffordPair, f: &FieldSpec) -> Result<CliffordPair> {
    if !pair.kernel().is_abelian() {
        return Err(Error::KernelNotAbelian);
    }
    let alpha = require_semi_invariant(pair, f)?;
    let k: Vec<usize> = pair.theta.kernel().iter().map(|&x| pair.n_in.apply(x)).collect();
    let (q, proj) = quotient(pair.cover(), &k)?;
    let kappa = Hom::new(
        q.clone(),
        pair.target().clone(),
        q.elements().map(|y| pair.kappa.apply(proj.preimage(y).unwrap())).collect(),
    )?;
    let (n1, n1_in) = kernel_subgroup(&kappa)?;
    let back = pair.n_in.inverse_lookup()?;
    let values: Vec<Cyclotomic> = n1
        .elements()
        .map(|y| {
            let x = proj.preimage(n1_in.apply(y)).unwrap();
            pair.theta.value_at(back[x].expect("coset lies in N")).clone()
        })
        .collect();
    let theta1 = Character::from_element_values(ConjClasses::new(&n1), &values)?;
    let out = CliffordPair::new(kappa, n1_in, theta1)?;
    if abelian_invariants(out.kernel()).is_none_or(|inv| inv.len() > 1) || out.theta.kernel().len() != 1 {
        return Err(Error::Certification("reduced kernel is not cyclic with faithful character".into()));
    }
    let a = require_semi_invariant(&out, f)?;
    if a.field != alpha.field || a.exponent_map() != alpha.exponent_map() {
        return Err(Error::Certification("cyclic reduction changed the Galois action".into()));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictionInfo {
    /// `r` of the input pair.
    pub input_r: usize,
    /// Sizes of the `H`-orbits on the `G`-conjugates of `e_{θ,F}`.
    pub h_orbit_sizes: Vec<usize>,
    /// `r` of the restricted pair, the size of the orbit through `e_{θ,F}`.
    pub output_r: usize,
}

/// Pulls the pair back along `eps: H → G`.
pub fn restrict_pair(pair: &CliffordPair, eps: &Hom, f: &FieldSpec) -> Result<(CliffordPair, RestrictionInfo)> {
    if **eps.dst() != **pair.target() {
        return Err(Error::GroupMismatch("eps does not map into the pair's target".into()));
    }
    let fp = fiber_product(&pair.kappa, eps)?;
    let n_in = Hom::new(
        pair.kernel().clone(),
        fp.group.clone(),
        pair.kernel().elements().map(|x| fp.index_of(pair.n_in.apply(x), 0).unwrap()).collect(),
    )?;
    let out = CliffordPair::new(fp.proj2.clone(), n_in, pair.theta.clone())?;

    let orbit = orbit_idempotent(&pair.theta, f, &pair.kappa, &pair.n_in)?;
    let mut seen = vec![false; orbit.conjugates.len()];
    let mut sizes = Vec::new();
    let mut first_size = 0;
    for i in 0..orbit.conjugates.len() {
        if seen[i] {
            continue;
        }
        let mut size = 0;
        for h in eps.src().elements() {
            let lift = pair.kappa.preimage(eps.apply(h)).unwrap();
            let c = conj_alg(&orbit.conjugates[i], lift, &pair.n_in)?;
            let j = orbit.conjugates.iter().position(|x| *x == c).expect("orbit is closed");
            if !seen[j] {
                seen[j] = true;
                size += 1;
            }
        }
        if i == 0 {
            first_size = size;
        }
        sizes.push(size);
    }
    let out_r = orbit_idempotent(&out.theta, f, &out.kappa, &out.n_in)?.orbit_size;
    if sizes.iter().sum::<usize>() != orbit.orbit_size || out_r != first_size {
        return Err(Error::Certification("restricted orbit does not match the H-orbit decomposition".into()));
    }
    Ok((out, RestrictionInfo { input_r: orbit.orbit_size, h_orbit_sizes: sizes, output_r: out_r }))
}

fn check_inclusion(pair: &CliffordPair, h_in: &Hom) -> Result<()> {
    if **h_in.src() != **pair.target() {
        return Err(Error::GroupMismatch("the pair does not live over the subgroup".into()));
    }
    if !h_in.is_injective() {
        return Err(Error::NotInjective("H -> G".into()));
    }
    Ok(())
}

/// `θ` moved onto the kernel group materialized by the extension.
fn theta_on_m(pair: &CliffordPair, ext: &ExtensionTensor, theta: &Character) -> Result<Character> {
    let back = pair.n_in.inverse_lookup()?;
    let iso = Hom::new(
        ext.m_in.src().clone(),
        pair.kernel().clone(),
        ext.m_in.images().iter().map(|&x| back[x].unwrap()).collect(),
    )?;
    transport(theta, &iso)
}

fn tensor_pair(ext: &ExtensionTensor, components: &[Character]) -> Result<CliffordPair> {
    let theta = product_character_many(components, &ext.kernel)?;
    CliffordPair::new(ext.kappa_g.clone(), ext.kernel_in.clone(), theta)
}

/// Induces a semi-invariant pair over `H` to `G ⊇ H` through `κ^{⊗G}`.
pub fn induce_pair(pair: &CliffordPair, h_in: &Hom, f: &FieldSpec) -> Result<CliffordPair> {
    check_inclusion(pair, h_in)?;
    let alpha = require_semi_invariant(pair, f)?;
    let out = if pair.theta.is_trivial() {
        // replace (1, κ) by (sgn, C2 × H → H)
        let h = pair.target().clone();
        let c2 = Arc::new(Group::cyclic(2)?);
        let dp = DirectProduct::new(vec![c2.clone(), h.clone()])?;
        let kappa0 = dp.projections[1].clone();
        let ext = extension_tensor(&kappa0, h_in)?;
        let m = ext.m_in.src().clone();
        let classes = ConjClasses::new(&m);
        let sgn_vals: Vec<Cyclotomic> =
            m.elements().map(|x| Cyclotomic::from_int(if ext.m_in.apply(x) == 0 { 1 } else { -1 })).collect();
        let sgn = Character::from_element_values(classes.clone(), &sgn_vals)?;
        let mut comps = vec![Character::trivial(classes); ext.transversal.len()];
        comps[0] = sgn;
        tensor_pair(&ext, &comps)?
    } else {
        let ext = extension_tensor(&pair.kappa, h_in)?;
        let theta_m = theta_on_m(pair, &ext, &pair.theta)?;
        let mut comps = vec![Character::trivial(theta_m.classes().clone()); ext.transversal.len()];
        comps[0] = theta_m;
        tensor_pair(&ext, &comps)?
    };
    if !pair.theta.is_trivial() {
        let info = center_algebra(&out, f)?;
        let index = h_in.dst().order() / h_in.src().order();
        let back_ok = pair
            .target()
            .elements()
            .all(|h| info.action.get(h_in.apply(h)).map(GaloisElem::rep) == alpha.get(h).map(GaloisElem::rep));
        if info.field != alpha.field || info.orbit_size != index || info.stabilizer != h_in.image() || !back_ok {
            return Err(Error::Certification("induced pair has unexpected center data".into()));
        }
    }
    Ok(out)
}

pub struct Corestriction {
    pub pair: CliffordPair,
    /// `θ_t` for each transversal element, in transversal order.
    pub components: Vec<Character>,
    /// Whether each component lies in the `(Γ × Ĥ)`-orbit of `θ`.
    pub in_orbit: Vec<bool>,
}

/// The `(Gal(F(θ)/F) × Ĥ)`-orbit of `θ`.
pub fn galois_conjugation_orbit(pair: &CliffordPair, f: &FieldSpec) -> Result<Vec<Character>> {
    let gal = galois_group(&pair.theta.field_of_values(f), f)?;
    let back = normal_embedding(&pair.n_in)?;
    let mut orbit: Vec<Character> = Vec::new();
    for y in pair.cover().elements() {
        let c = conj_action_unchecked(&pair.theta, y, &pair.n_in, &back);
        for a in &gal {
            let t = galois_twist(&c, a)?;
            if !orbit.contains(&t) {
                orbit.push(t);
            }
        }
    }
    Ok(orbit)
}

/// Corestricts a semi-invariant pair over `H` to `G`, twisting the
/// component at `t` by `β(t)`.
pub fn corestrict_pair(pair: &CliffordPair, h_in: &Hom, beta: &GaloisActionMap, f: &FieldSpec) -> Result<Corestriction> {
    check_inclusion(pair, h_in)?;
    let alpha = require_semi_invariant(pair, f)?;
    if beta.field() != &alpha.field {
        return Err(Error::ActionMismatch(format!("beta acts on {} but theta generates {}", beta.field(), alpha.field)));
    }
    if **beta.group() != **h_in.dst() || beta.domain().len() != h_in.dst().order() {
        return Err(Error::ActionMismatch("beta must be defined on all of G".into()));
    }
    for h in pair.target().elements() {
        if beta.get(h_in.apply(h)) != alpha.get(h) {
            return Err(Error::ActionMismatch(format!("beta and alpha differ at {h}")));
        }
    }
    let ext = extension_tensor(&pair.kappa, h_in)?;
    let twists: Vec<Character> = ext
        .transversal
        .reps()
        .iter()
        .map(|&t| galois_twist(&pair.theta, beta.get(t).unwrap()))
        .collect::<Result<_>>()?;
    let orbit = galois_conjugation_orbit(pair, f)?;
    let in_orbit = twists.iter().map(|t| orbit.contains(t)).collect::<Vec<_>>();
    let comps = twists.iter().map(|t| theta_on_m(pair, &ext, t)).collect::<Result<Vec<_>>>()?;
    let out = tensor_pair(&ext, &comps)?;
    let expected = pair.kernel().order().pow(ext.transversal.len() as u32) * h_in.dst().order();
    if out.cover().order() != expected {
        return Err(Error::Certification("corestricted cover has the wrong order".into()));
    }
    Ok(Corestriction { pair: out, components: twists, in_orbit })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldCheckReport {
    /// `F(θ)^G`, when the pair is semi-invariant over `F`.
    pub fixed_field: Option<String>,
    pub k_in_fixed_field: bool,
    pub same_field_of_values: bool,
    pub maps_coincide: bool,
    pub passes: bool,
}

/// Checks the conditions under which changing the base field from `F` to
/// `K` does not change the pair's class.
pub fn base_field_check(pair: &CliffordPair, f: &FieldSpec, k: &FieldSpec) -> Result<FieldCheckReport> {
    if !f.is_subfield_of(k) {
        return Err(Error::NotSubfield(format!("{f} is not contained in {k}")));
    }
    let ef = pair.theta.field_of_values(f);
    let ek = pair.theta.field_of_values(k);
    let same = ef == ek;
    let af = semi_invariance(pair, f)?;
    let fixed = af.as_ref().map(|a| {
        let mut gens: Vec<u32> = ef.stabilizer().to_vec();
        gens.extend(a.images.iter().map(GaloisElem::rep));
        FieldSpec::fixed_field(ef.conductor(), &gens)
    });
    let k_in = fixed.as_ref().is_some_and(|x| k.is_subfield_of(x));
    let coincide = match (&af, semi_invariance(pair, k)?) {
        (Some(a), Some(b)) => same && a.exponent_map() == b.exponent_map(),
        _ => false,
    };
    Ok(FieldCheckReport {
        fixed_field: fixed.map(|x| x.name().unwrap_or_else(|| x.to_string())),
        k_in_fixed_field: k_in,
        same_field_of_values: same,
        maps_coincide: coincide,
        passes: k_in && same && coincide,
    })
}

/// `e_{θ,F}` of the pair, for reports.
pub fn pair_idempotent(pair: &CliffordPair, f: &FieldSpec) -> Result<GroupAlgElem> {
    idempotent_e_f(&pair.theta, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charkit::character_table;

    fn c(n: usize) -> Arc<Group> {
        Arc::new(Group::cyclic(n).unwrap())
    }

    fn faithful(n: &Arc<Group>) -> Result<Character> {
        let t = character_table(n)?;
        Ok(t.irreducibles().iter().find(|c| c.kernel().len() == 1).unwrap().clone())
    }

    #[test]
    fn trivial_target_pair() {
        let s3 = Arc::new(Group::from_permutations(3, &["(1 2)", "(1 2 3)"]).unwrap());
        let kappa = Hom::new(s3.clone(), Arc::new(Group::trivial()), vec![0; 6]).unwrap();
        let pair = pair_on_kernel(&kappa, |n| Ok(character_table(n)?.irreducibles()[2].clone())).unwrap();
        let q = FieldSpec::rationals();
        let info = center_algebra(&pair, &q).unwrap();
        assert_eq!((info.orbit_size, info.field), (1, q.clone()));
        assert!(semi_invariance(&pair, &q).unwrap().unwrap().is_trivial());
        assert!(matches!(
            pair_on_kernel(&kappa, |n| Ok(Character::regular(ConjClasses::new(n)))),
            Err(Error::Reducible(_))
        ));
    }

    #[test]
    fn identity_pair_over_c2() {
        let q = FieldSpec::rationals();
        let e = FieldSpec::cyclotomic(3);
        let beta = GaloisActionMap::from_exponents(&c(2), &e, &q, &[1, 2]).unwrap();
        let ip = identity_pair(&beta, 3).unwrap();
        assert_eq!(ip.pair.cover().order(), 6);
        assert!(!ip.pair.cover().is_abelian());
        assert_eq!(ip.pair.theta().degree(), 1);
        assert_eq!(ip.module.dim(), 2);
    }

    #[test]
    fn induce_then_restrict() {
        let q = FieldSpec::rationals();
        let kappa = Hom::new(c(3), Arc::new(Group::trivial()), vec![0; 3]).unwrap();
        let pair = pair_on_kernel(&kappa, faithful).unwrap();
        let h_in = Hom::new(Arc::new(Group::trivial()), c(2), vec![0]).unwrap();
        let ind = induce_pair(&pair, &h_in, &q).unwrap();
        assert_eq!(ind.cover().order(), 18);
        let info = center_algebra(&ind, &q).unwrap();
        assert_eq!((info.orbit_size, info.stabilizer.clone()), (2, vec![0]));
        assert_eq!(info.field, FieldSpec::cyclotomic(3));
        let (back, ri) = restrict_pair(&ind, &h_in, &q).unwrap();
        assert_eq!(ri.h_orbit_sizes, vec![1, 1]);
        assert_eq!(center_algebra(&back, &q).unwrap().orbit_size, 1);
    }
}
