//! Standard registries, algebras and pseudorandom configurations shared by
//! the self-test and the test suites.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::brauer::{BrauerClass, CsaAlgebra, FieldSpec, IrreducibleSpec, LocalInvariant, Place, Registry};
use crate::classes::{all_classes, ConjClass};
use crate::ratio::qi;

/// `T`, `T−1` and `T²−2` over ℚ, all with coefficients.
pub fn split_registry() -> Registry {
    Registry::from_specs([
        IrreducibleSpec::linear("T", 0),
        IrreducibleSpec::linear("T-1", 1),
        IrreducibleSpec::new("T^2-2", 2).with_coefficients(vec![qi(-2), qi(0)]),
    ])
    .expect("distinct labels")
}

/// Polynomials of degree 1, 2 and 4 over a local field.
pub fn local_registry() -> Registry {
    Registry::from_specs([
        IrreducibleSpec::new("T", 1),
        IrreducibleSpec::new("q2", 2),
        IrreducibleSpec::new("q4", 4),
    ])
    .expect("distinct labels")
}

/// `Mat_m(D)` over a 5-adic field with `inv(D) = 1/d`.
pub fn local_algebra(m: u32, d: u32) -> CsaAlgebra {
    let place = Place::finite("v", 5).expect("5 is prime");
    let b = if d == 1 {
        BrauerClass::split(FieldSpec::local(place))
    } else {
        BrauerClass::local(place, LocalInvariant::from_ratio(1, i64::from(d))).expect("finite place")
    };
    CsaAlgebra::new(m, b).expect("positive capacity")
}

/// All compositions of `n` in lexicographic order.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every way of refining each part of `outer` into a composition.
pub fn refinements(outer: &[u32]) -> Vec<Vec<Vec<u32>>> {
    outer.iter().fold(vec![Vec::new()], |acc, &o| {
        let mut next = Vec::new();
        for prefix in &acc {
            for c in compositions(o) {
                let mut v = prefix.clone();
                v.push(c);
                next.push(v);
            }
        }
        next
    })
}

/// A random global configuration: a split class on `Mat_{md}(F)` and a
/// target `Mat_m(D)` over a global field with at most four places.
#[derive(Debug, Clone)]
pub struct GlobalConfig {
    pub registry: Registry,
    pub target: CsaAlgebra,
    pub split_class: ConjClass,
}

const PRIMES: [u64; 4] = [2, 3, 5, 7];

/// Local degrees for a polynomial of degree `g` at a place of kind `real`
/// (parts 1 or 2) or finite (any composition).
fn random_splitting<R: Rng>(rng: &mut R, g: u32, real: bool) -> Vec<u32> {
    let mut left = g;
    let mut parts = Vec::new();
    while left > 0 {
        let cap = if real { left.min(2) } else { left };
        let p = rng.gen_range(1..=cap);
        parts.push(p);
        left -= p;
    }
    parts
}

pub fn random_global_config<R: Rng>(rng: &mut R) -> GlobalConfig {
    let nplaces = rng.gen_range(1..=4usize);
    let with_real = nplaces > 1 && rng.gen_bool(0.5);
    let mut places = Vec::new();
    if with_real {
        places.push(Place::real("inf"));
    }
    let mut primes = PRIMES.to_vec();
    primes.shuffle(rng);
    for &p in primes.iter().take(nplaces - usize::from(with_real)) {
        places.push(Place::finite(p.to_string(), p).expect("prime"));
    }
    let d = rng.gen_range(1..=4i64);
    let mut invariants = BTreeMap::new();
    let mut total = LocalInvariant::zero();
    let last = places.len() - 1;
    for (i, place) in places.iter().enumerate() {
        let inv = if i == last {
            LocalInvariant::new(-total.value().clone())
        } else if place.is_archimedean() {
            if d % 2 == 0 && rng.gen_bool(0.5) {
                LocalInvariant::from_ratio(1, 2)
            } else {
                LocalInvariant::zero()
            }
        } else {
            LocalInvariant::from_ratio(rng.gen_range(0..d), d)
        };
        total = LocalInvariant::new(total.value() + inv.value());
        invariants.insert(place.label.clone(), inv);
    }
    let field = FieldSpec::global(places.clone()).expect("distinct labels");
    let brauer = BrauerClass::new(field.clone(), invariants).expect("balanced invariants");
    let index = brauer.index();
    let m = rng.gen_range(1..=8 / index);

    let mut specs = vec![linear_everywhere("T", &places)];
    for k in 0..rng.gen_range(1..=3) {
        let g = rng.gen_range(1..=4);
        let mut spec = IrreducibleSpec::new(format!("p{k}"), g);
        for place in &places {
            spec = spec.with_splitting(place.label.clone(), random_splitting(rng, g, place.is_archimedean()));
        }
        specs.push(spec);
    }
    let registry = Registry::from_specs(specs).expect("distinct labels");
    let target = CsaAlgebra::new(m, brauer).expect("positive capacity");
    let split = target.quasi_split();
    let classes = all_classes(&split, &registry).expect("registry is complete");
    let split_class = classes.choose(rng).expect("T^n is always available").clone();
    GlobalConfig {
        registry,
        target,
        split_class,
    }
}

fn linear_everywhere(label: &str, places: &[Place]) -> IrreducibleSpec {
    places.iter().fold(IrreducibleSpec::new(label, 1), |s, p| {
        s.with_splitting(p.label.clone(), vec![1])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(4).len(), 8);
        assert_eq!(compositions(1), vec![vec![1]]);
        assert_eq!(refinements(&[2, 1]).len(), 2);
    }

    #[test]
    fn random_configs_are_well_formed() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let c = random_global_config(&mut rng);
            assert!(c.target.degree() <= 8);
            assert!(crate::classes::validate_class(&c.split_class, &c.registry).unwrap());
        }
    }
}
