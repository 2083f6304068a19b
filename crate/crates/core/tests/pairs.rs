use std::sync::Arc;

use cliffpair_core::charkit::{character_table, Character};
use cliffpair_core::cliffordpairs::{
    base_field_check, center_algebra, conjugate_pair, cyclic_reduction, identity_pair, induce_pair, pair_on_kernel,
    product_pair, restrict_pair, semi_invariance, CliffordPair, GaloisActionMap,
};
use cliffpair_core::corpus;
use cliffpair_core::cyclofield::FieldSpec;
use cliffpair_core::groupkit::{abelian_invariants, is_isomorphic, semidirect, DirectProduct, Group, Hom};
use cliffpair_core::verify::{a4_pair, c3_pair, q8_pair};
use cliffpair_core::Error;

fn qq() -> FieldSpec {
    FieldSpec::rationals()
}

fn trivial() -> Arc<Group> {
    Arc::new(Group::trivial())
}

fn to_trivial(g: &Arc<Group>) -> Hom {
    Hom::new(g.clone(), trivial(), vec![0; g.order()]).unwrap()
}

fn pick(n: &Arc<Group>, f: impl Fn(&Character) -> bool) -> Character {
    character_table(n).unwrap().irreducibles().iter().find(|c| f(c)).unwrap().clone()
}

#[test]
fn pair_validation() {
    let s3 = corpus::group("s3").unwrap();
    let p = pair_on_kernel(&to_trivial(&s3), |n| Ok(pick(n, |c| c.degree() == 2))).unwrap();
    assert_eq!(p.target().order(), 1);

    let sign = corpus::hom("s3_to_c2").unwrap();
    let p = pair_on_kernel(&sign, |n| Ok(pick(n, |c| c.kernel().len() == 1))).unwrap();
    assert_eq!(p.kernel().order(), 3);

    // reducible θ is rejected
    let c3 = corpus::group("c3").unwrap();
    let (n, n_in) = cliffpair_core::groupkit::kernel_subgroup(&sign).unwrap();
    let reg = Character::regular(cliffpair_core::charkit::ConjClasses::new(&n));
    assert!(CliffordPair::new(sign.clone(), n_in, reg).is_err());

    // non-surjective κ is rejected
    let c2 = corpus::group("c2").unwrap();
    let k = Hom::new(c3, c2, vec![0, 0, 0]).unwrap();
    assert!(pair_on_kernel(&k, |n| Ok(pick(n, |_| true))).is_err());
}

#[test]
fn semi_invariance_examples() {
    let q8 = corpus::group("q8").unwrap();
    let id = Hom::identity(&q8);
    let p = pair_on_kernel(&id, |n| Ok(pick(n, |_| true))).unwrap();
    let a = semi_invariance(&p, &qq()).unwrap().unwrap();
    assert!(a.is_trivial());

    let info = center_algebra(&a4_pair().unwrap(), &qq()).unwrap();
    assert_eq!((info.orbit_size, info.stabilizer.len()), (3, 1));
    assert_eq!(info.field, qq());

    let info = center_algebra(&q8_pair().unwrap(), &qq()).unwrap();
    assert_eq!(info.field, FieldSpec::cyclotomic(4));
    assert_eq!(info.orbit_size, 1);
    assert_eq!(info.action.get(1).unwrap().rep(), 3);
}

#[test]
fn conjugation_examples() {
    let a4 = a4_pair().unwrap();
    let c = conjugate_pair(&a4);
    assert_eq!(c.theta(), a4.theta());

    let p = c3_pair().unwrap();
    let c = conjugate_pair(&p);
    let squares: Vec<_> = p.kernel().elements().map(|x| p.theta().value_at(p.kernel().mul(x, x)).clone()).collect();
    let conj: Vec<_> = p.kernel().elements().map(|x| c.theta().value_at(x).clone()).collect();
    assert_eq!(squares, conj);
}

#[test]
fn product_with_trivial_pair() {
    let p = q8_pair().unwrap();
    let id = Hom::identity(p.target());
    let one = pair_on_kernel(&id, |n| Ok(pick(n, |_| true))).unwrap();
    let prod = product_pair(&p, &one, &qq()).unwrap();
    assert_eq!(prod.cover().order(), p.cover().order());
    assert_eq!(center_algebra(&prod, &qq()).unwrap(), center_algebra(&p, &qq()).unwrap());

    // the trivial character on the same kernel has field Q and is compatible
    let other = pair_on_kernel(&corpus::hom("q8_to_c2").unwrap(), |n| Ok(pick(n, |c| c.is_trivial()))).unwrap();
    let prod = product_pair(&p, &other, &qq()).unwrap();
    assert_eq!(center_algebra(&prod, &qq()).unwrap(), center_algebra(&p, &qq()).unwrap());

    // same field Q(i) with the trivial action is refused
    let dp = DirectProduct::new(vec![Arc::new(Group::cyclic(4).unwrap()), Arc::new(Group::cyclic(2).unwrap())]).unwrap();
    let proj = Hom::new(dp.group.clone(), p.target().clone(), dp.projections[1].images().to_vec()).unwrap();
    let invariant = pair_on_kernel(&proj, |n| Ok(pick(n, |c| c.kernel().len() == 1))).unwrap();
    assert!(semi_invariance(&invariant, &qq()).unwrap().unwrap().is_trivial());
    assert!(matches!(product_pair(&p, &invariant, &qq()), Err(Error::ActionMismatch(_))));
}

#[test]
fn identity_pair_shapes() {
    let c2 = corpus::group("c2").unwrap();
    let beta = GaloisActionMap::from_exponents(&c2, &FieldSpec::cyclotomic(3), &qq(), &[1, 2]).unwrap();
    let ip = identity_pair(&beta, 3).unwrap();
    assert!(is_isomorphic(ip.pair.cover(), &corpus::group("s3").unwrap()));

    let c4 = corpus::group("c4").unwrap();
    let beta = GaloisActionMap::from_exponents(&c4, &FieldSpec::cyclotomic(5), &qq(), &[1, 2, 4, 3]).unwrap();
    let ip = identity_pair(&beta, 5).unwrap();
    let g = ip.pair.cover();
    assert_eq!(g.order(), 20);
    // Frobenius group: trivial center, elements of order 1, 2, 4, 5 only
    assert_eq!(g.center().len(), 1);
    assert!(g.elements().all(|x| [1, 2, 4, 5].contains(&g.element_order(x))));

    let root2 = FieldSpec::parse_shorthand("Q(sqrt2)").unwrap();
    let beta = GaloisActionMap::from_exponents(&c2, &root2, &qq(), &[1, 3]).unwrap();
    let ip = identity_pair(&beta, 8).unwrap();
    assert_eq!((ip.pair.kernel().order(), ip.a_order, ip.pair.theta().degree()), (16, 2, 2));

    // the non-multiplicative map is rejected
    assert!(GaloisActionMap::from_exponents(&c2, &FieldSpec::cyclotomic(3), &qq(), &[2, 2]).is_err());
    // E must lie in Q(ζ_n)
    let beta = GaloisActionMap::from_exponents(&c2, &FieldSpec::cyclotomic(3), &qq(), &[1, 2]).unwrap();
    assert!(identity_pair(&beta, 4).is_err());
}

#[test]
fn cyclic_reduction_examples() {
    // N = C6 = Ĝ over the trivial group, θ of order 3
    let c6 = corpus::group("c6").unwrap();
    let p = pair_on_kernel(&to_trivial(&c6), |n| Ok(pick(n, |c| c.kernel().len() == 2))).unwrap();
    let r = cyclic_reduction(&p, &qq()).unwrap();
    assert_eq!(r.kernel().order(), 3);
    assert_eq!(r.theta().kernel().len(), 1);

    // faithful θ: unchanged up to isomorphism
    let q = q8_pair().unwrap();
    let r = cyclic_reduction(&q, &qq()).unwrap();
    assert!(is_isomorphic(r.cover(), q.cover()));

    // (C4 × C2) ⋊ C2 with inversion, θ of order 4 with kernel of order 2
    let dp = DirectProduct::new(vec![Arc::new(Group::cyclic(4).unwrap()), Arc::new(Group::cyclic(2).unwrap())]).unwrap();
    let c = dp.group.clone();
    let u = Arc::new(Group::cyclic(2).unwrap());
    let action = vec![c.elements().collect(), c.elements().map(|x| c.inv(x)).collect()];
    let sd = semidirect(&u, &c, &action).unwrap();
    let p = pair_on_kernel(&sd.to_u, |n| Ok(pick(n, |ch| ch.kernel().len() == 2 && !ch.field_of_values(&qq()).is_rationals())))
        .unwrap();
    let r = cyclic_reduction(&p, &qq()).unwrap();
    assert_eq!(abelian_invariants(r.kernel()), Some(vec![4]));
    assert_eq!(r.theta().kernel().len(), 1);
    assert_eq!(center_algebra(&r, &qq()).unwrap(), center_algebra(&p, &qq()).unwrap());

    // non-abelian kernel is refused
    let s3 = corpus::group("s3").unwrap();
    let p = pair_on_kernel(&to_trivial(&s3), |n| Ok(pick(n, |c| c.degree() == 2))).unwrap();
    assert!(matches!(cyclic_reduction(&p, &qq()), Err(Error::KernelNotAbelian)));
}

#[test]
fn restriction_examples() {
    let q = q8_pair().unwrap();
    let (same, info) = restrict_pair(&q, &Hom::identity(q.target()), &qq()).unwrap();
    assert_eq!(same.cover().order(), 8);
    assert_eq!(info.output_r, 1);

    let a4 = a4_pair().unwrap();
    let one = Hom::new(trivial(), a4.target().clone(), vec![0]).unwrap();
    let (r, info) = restrict_pair(&a4, &one, &qq()).unwrap();
    assert_eq!(r.cover().order(), 4);
    assert_eq!(info.h_orbit_sizes, vec![1, 1, 1]);
    let c = center_algebra(&r, &qq()).unwrap();
    assert_eq!((c.field.clone(), c.orbit_size), (qq(), 1));

    let one = Hom::new(trivial(), q.target().clone(), vec![0]).unwrap();
    let (r, _) = restrict_pair(&q, &one, &qq()).unwrap();
    assert_eq!(abelian_invariants(r.cover()), Some(vec![4]));
    let c = center_algebra(&r, &qq()).unwrap();
    assert_eq!((c.field, c.orbit_size, c.action.is_trivial()), (FieldSpec::cyclotomic(4), 1, true));

    // a non-injective ε: C4 → C2
    let c4 = corpus::group("c4").unwrap();
    let eps = Hom::new(c4, q.target().clone(), vec![0, 1, 0, 1]).unwrap();
    let (r, info) = restrict_pair(&q, &eps, &qq()).unwrap();
    assert_eq!(r.cover().order(), 16);
    assert_eq!(info.output_r, 1);
}

#[test]
fn induction_refuses_non_semi_invariant() {
    let a4 = a4_pair().unwrap();
    let id = Hom::identity(a4.target());
    assert!(matches!(induce_pair(&a4, &id, &qq()), Err(Error::NotSemiInvariant)));
}

#[test]
fn field_checks() {
    let q = q8_pair().unwrap();
    assert!(base_field_check(&q, &qq(), &qq()).unwrap().passes);
    let r = base_field_check(&q, &qq(), &FieldSpec::cyclotomic(4)).unwrap();
    assert_eq!(r.fixed_field.as_deref(), Some("Q"));
    assert!(!r.passes);

    // invariant θ with F(θ) = Q(ζ5) and trivial action
    let c5 = corpus::group("c5").unwrap();
    let p = pair_on_kernel(&to_trivial(&c5), |n| Ok(pick(n, |c| c.kernel().len() == 1))).unwrap();
    let r = base_field_check(&p, &qq(), &FieldSpec::parse_shorthand("Q(sqrt5)").unwrap()).unwrap();
    assert!(r.passes && r.maps_coincide && r.same_field_of_values);

    assert!(matches!(base_field_check(&q, &FieldSpec::cyclotomic(4), &qq()), Err(Error::NotSubfield(_))));
}

#[test]
fn json_round_trip() {
    for p in [q8_pair().unwrap(), a4_pair().unwrap(), conjugate_pair(&c3_pair().unwrap())] {
        let v = p.to_json(&qq());
        let text = serde_json::to_string(&v).unwrap();
        let back = CliffordPair::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back.kappa().images(), p.kappa().images());
        assert_eq!(back.n_in().images(), p.n_in().images());
        let n = p.kernel();
        for x in n.elements() {
            assert_eq!(back.theta().value_at(x), p.theta().value_at(x));
        }
        assert_eq!(back.to_json(&qq()), v);
    }
}
