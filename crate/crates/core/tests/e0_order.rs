//! The closed-form order against brute-force witness search, and the order
//! laws every effect algebra satisfies.

mod support;

use sealab_core::e0::{leq, oplus};
use sealab_core::partial::Defined;
use sealab_core::{E0Window, EffectAlgebra, SequentialEffectAlgebra, Window, E0};
use support::e0_naive;

fn desk() -> Window {
    Window::new(4, 3, 3).unwrap()
}

#[test]
fn closed_form_order_matches_witness_search() {
    let w = desk();
    let pairs = e0_naive::witnessed_pairs(&w);
    let elems: Vec<E0> = w.enumerate();
    let mut disagreements = Vec::new();
    for x in &elems {
        for y in &elems {
            if leq(x, y) != pairs.contains(&(x.clone(), y.clone())) {
                disagreements.push(format!("{x} <= {y}"));
            }
        }
    }
    assert!(disagreements.is_empty(), "{disagreements:?}");
}

#[test]
fn order_examples() {
    let e = |s: &str| s.parse::<E0>().unwrap();
    assert!(leq(&e("a1"), &e("b5")));
    assert_eq!(oplus(&e("a1"), &e("b6")), Defined(e("b5")));
    assert!(!leq(&e("b1"), &e("a1")));
    assert!(!leq(&e("c[1,0,0]"), &e("c[0,1,0]")));
    assert!(!leq(&e("c[0,1,0]"), &e("c[1,0,0]")));
}

#[test]
fn derived_notions_obey_the_effect_algebra_laws() {
    let c = E0Window::new(desk());
    let elems = c.elements();
    let (zero, one) = (c.zero(), c.one());
    for a in elems {
        let ac = c.orthosupplement(a).unwrap();
        assert!(c.leq(&zero, a) && c.leq(a, &one));
        assert!(c.leq(a, a));
        assert_eq!(c.orthosupplement(&ac).unwrap(), *a);
        assert!(c.leq(&c.square(a), a), "{a}");
        for b in elems {
            let bc = c.orthosupplement(b).unwrap();
            assert_eq!(c.orthogonal(a, b), c.leq(a, &bc), "{a} {b}");
            if c.leq(a, b) {
                assert!(c.leq(&bc, &ac), "{a} {b}");
                if c.leq(b, a) {
                    assert_eq!(a, b);
                }
            }
        }
    }
}

#[test]
fn order_is_transitive() {
    let elems: Vec<E0> = desk().enumerate();
    let above: Vec<Vec<&E0>> = elems
        .iter()
        .map(|x| elems.iter().filter(|y| leq(x, y)).collect())
        .collect();
    for (i, x) in elems.iter().enumerate() {
        for y in &above[i] {
            for z in &elems {
                if leq(y, z) {
                    assert!(leq(x, z), "{x} <= {y} <= {z}");
                }
            }
        }
    }
}
