use proptest::prelude::*;
use subsysforge::finite_field::supported_orders;
use subsysforge::{FieldElement, FieldSpec};

fn fields() -> Vec<FieldSpec> {
    supported_orders().map(|q| FieldSpec::new(q).unwrap()).collect()
}

#[test]
fn field_axioms_exhaustive() {
    for f in fields().into_iter().filter(|f| f.q() <= 9) {
        let els: Vec<FieldElement> = f.elements().collect();
        let (zero, one) = (f.element(0).unwrap(), f.element(1).unwrap());
        for &a in &els {
            assert_eq!(f.add(a, zero), a);
            assert_eq!(f.mul(a, one), a);
            assert_eq!(f.add(a, f.neg(a)), zero);
            if a != zero {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), one, "q={} a={a:?}", f.q());
            }
            for &b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for &c in &els {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

#[test]
fn zero_has_no_inverse() {
    for f in fields() {
        assert!(f.inv(f.element(0).unwrap()).is_err());
    }
}

#[test]
fn fermat() {
    for f in fields() {
        for a in f.elements().filter(|a| !a.is_zero()) {
            assert_eq!(f.pow(a, f.q() as u64 - 1), f.element(1).unwrap());
        }
    }
}

#[test]
fn generator_is_primitive() {
    for f in fields() {
        let g = f.generator();
        let order = (1..f.q() as u64).find(|&e| f.pow(g, e) == f.element(1).unwrap()).unwrap();
        assert_eq!(order, f.q() as u64 - 1, "q={}", f.q());
    }
}

#[test]
fn trace_is_linear_and_onto() {
    for f in fields() {
        let p = f.p();
        let mut hit = vec![false; p as usize];
        for a in f.elements() {
            hit[f.trace_to_prime(a) as usize] = true;
            for b in f.elements() {
                let s = (f.trace_to_prime(a) + f.trace_to_prime(b)) % p;
                assert_eq!(f.trace_to_prime(f.add(a, b)), s);
            }
            for c in 0..p {
                let ca = f.mul(f.element(c as u32).unwrap(), a);
                assert_eq!(f.trace_to_prime(ca), (c as u32 * f.trace_to_prime(a) as u32 % p as u32) as u8);
            }
        }
        assert!(hit.into_iter().all(|h| h), "trace of GF({}) is onto", f.q());
    }
}

#[test]
fn conjugation_is_an_involution() {
    for f in fields().into_iter().filter(|f| f.half_degree().is_ok()) {
        for a in f.elements() {
            let c = f.conjugate(a).unwrap();
            assert_eq!(f.conjugate(c).unwrap(), a);
            for b in f.elements() {
                assert_eq!(f.conjugate(f.mul(a, b)).unwrap(), f.mul(c, f.conjugate(b).unwrap()));
            }
        }
    }
    assert!(FieldSpec::new(8).unwrap().half_degree().is_err());
}

fn field_and_vector() -> impl Strategy<Value = (u32, Vec<u32>)> {
    prop::sample::select(supported_orders().collect::<Vec<_>>())
        .prop_flat_map(|q| (Just(q), prop::collection::vec(0..q, 0..8)))
}

proptest! {
    #[test]
    fn expand_then_collapse_is_identity((q, vals) in field_and_vector()) {
        let f = FieldSpec::new(q).unwrap();
        let v: Vec<FieldElement> = vals.iter().map(|&x| f.element(x).unwrap()).collect();
        let e = f.prime_basis_expand(&v);
        prop_assert_eq!(e.len(), v.len() * f.m());
        prop_assert_eq!(f.prime_basis_collapse(&e).unwrap(), v);
    }

    #[test]
    fn coefficients_round_trip((q, vals) in field_and_vector()) {
        let f = FieldSpec::new(q).unwrap();
        for x in vals {
            let a = f.element(x).unwrap();
            prop_assert_eq!(f.from_coeffs(&f.coeffs(a)).unwrap(), a);
        }
    }
}
