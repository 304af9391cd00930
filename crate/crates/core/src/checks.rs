//! Property checks over exhaustive or seeded families. Each returns a
//! [`CheckResult`] with the number of instances and the first
//! counterexample; `selftest` runs them small, the acceptance suite full size.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arthur::{compact_support_check, identity_sweep, StdParabolic};
use crate::brauer::{CsaAlgebra, Registry};
use crate::classes::{
    all_charpolys, all_classes, centralizer_dim, charpoly_of, enumerate_classes, induce, local_global_transfer,
    transfer_to_split, validate_class, CharPoly, ConjClass, LeviShape,
};
use crate::error::Result;
use crate::incidence::{qualifying_matrices, row_divisibility_forces_columns, set_partitions, two_partition_matrix};
use crate::measures::{gamma, gamma_transitive_check, selfdual_constant, vol_k, FieldCase, GammaConstant, LocalParams};
use crate::partitions::Partition;
use crate::ratio::{pow_q, qi, Q};
use crate::samples::{compositions, local_algebra, local_registry, random_global_config, refinements, split_registry};
use crate::split_oracle::{class_of, commutant_dim, generic_induction_check, oracle_closure_leq, realize};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    pub counterexample: Option<Value>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            checked: 0,
            failures: 0,
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    fn fail_with_error(&mut self, e: crate::error::Error, context: Value) {
        self.checked += 1;
        self.failures += 1;
        if self.counterexample.is_none() {
            self.counterexample = Some(json!({"error": e.code(), "message": e.to_string(), "context": context}));
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

/// Split classes of `Mat_n(ℚ)` supported on `T`, `T−1`, `T²−2`, grouped by
/// characteristic polynomial.
fn split_fibers(n: u32, reg: &Registry) -> Result<Vec<Vec<ConjClass>>> {
    let alg = CsaAlgebra::split_rational(n);
    let mut fibers = Vec::new();
    for f in all_charpolys(&alg, reg)? {
        fibers.push(enumerate_classes(&alg, &f, reg)?);
    }
    Ok(fibers)
}

pub type ClosureFn = fn(&ConjClass, &ConjClass, &Registry) -> Result<bool>;

/// Dominance-based closure order against the rank oracle on every ordered
/// pair of each characteristic-polynomial fiber, `n ≤ n_max`.
pub fn closure_oracle(n_max: u32, closure: ClosureFn) -> CheckResult {
    let mut res = CheckResult::new("closure-order-matches-rank-oracle");
    let reg = split_registry();
    for n in 1..=n_max {
        let fibers = match split_fibers(n, &reg) {
            Ok(f) => f,
            Err(e) => {
                res.fail_with_error(e, json!({"n": n}));
                continue;
            }
        };
        for fiber in &fibers {
            for a in fiber {
                for b in fiber {
                    match (closure(a, b, &reg), oracle_closure_leq(a, b, &reg)) {
                        (Ok(x), Ok(y)) => res.check(x == y, || {
                            json!({"left": to_json(a), "right": to_json(b), "closure_leq": x, "oracle": y})
                        }),
                        (Err(e), _) | (_, Err(e)) => res.fail_with_error(e, json!({"left": to_json(a), "right": to_json(b)})),
                    }
                }
            }
        }
    }
    res
}

/// Generic-element induction for every composition of `n ≤ n_max` and every
/// tuple of nilpotent block classes; Richardson cases also compared with
/// the transpose of the sorted composition.
pub fn generic_induction(n_max: u32, trials: u32, seed: u64) -> CheckResult {
    let mut res = CheckResult::new("generic-induction");
    let reg = split_registry();
    for n in 1..=n_max {
        for comp in compositions(n) {
            let levi = LeviShape::new(comp.clone()).expect("composition");
            let options: Vec<Vec<Partition>> = comp.iter().map(|&b| Partition::all(b)).collect();
            for_each_tuple(&options, &mut |parts| {
                let blocks: Vec<ConjClass> = comp
                    .iter()
                    .zip(parts)
                    .map(|(&b, l)| ConjClass::new(CsaAlgebra::split_rational(b), [("T", l.clone())]))
                    .collect();
                match generic_induction_check(&levi, &blocks, trials, seed, &reg) {
                    Ok(rep) => {
                        let richardson_ok = !parts.iter().all(Partition::is_all_ones)
                            || rep.predicted.get("T") == Partition::new(comp.clone()).transpose();
                        res.check(rep.passed && richardson_ok, || to_json(&rep));
                    }
                    Err(e) => res.fail_with_error(e, json!({"levi": comp, "blocks": to_json(&blocks)})),
                }
            });
        }
    }
    res
}

fn for_each_tuple<T, F: FnMut(&[T])>(options: &[Vec<T>], f: &mut F)
where
    T: Clone,
{
    fn go<T: Clone, F: FnMut(&[T])>(options: &[Vec<T>], cur: &mut Vec<T>, f: &mut F) {
        if cur.len() == options.len() {
            f(cur);
            return;
        }
        for o in &options[cur.len()] {
            cur.push(o.clone());
            go(options, cur, f);
            cur.pop();
        }
    }
    go(options, &mut Vec::new(), f);
}

/// `transfer(induce(L, c)) = induce(d·L, transfer(c))` over local
/// `Mat_m(D)` with `md ≤ md_max` and index in `ds`.
pub fn transfer_commutes_with_induction(md_max: u32, ds: &[u32]) -> CheckResult {
    let mut res = CheckResult::new("transfer-commutes-with-induction");
    let reg = local_registry();
    for &d in ds {
        for m in 1..=md_max / d {
            let mut cache: BTreeMap<u32, Vec<ConjClass>> = BTreeMap::new();
            for k in 1..=m {
                cache.insert(k, all_classes(&local_algebra(k, d), &reg).expect("local registry"));
            }
            for comp in compositions(m) {
                let levi = LeviShape::new(comp.clone()).expect("composition");
                let options: Vec<Vec<ConjClass>> = comp.iter().map(|b| cache[b].clone()).collect();
                for_each_tuple(&options, &mut |blocks| {
                    let outcome = (|| -> Result<(ConjClass, ConjClass)> {
                        let lhs = transfer_to_split(&induce(&levi, blocks)?, &reg)?;
                        let moved: Vec<ConjClass> =
                            blocks.iter().map(|b| transfer_to_split(b, &reg)).collect::<Result<_>>()?;
                        let rhs = induce(&levi.scaled(d), &moved)?;
                        Ok((lhs, rhs))
                    })();
                    match outcome {
                        Ok((lhs, rhs)) => res.check(lhs == rhs, || {
                            json!({"levi": comp, "blocks": to_json(&blocks), "lhs": to_json(&lhs), "rhs": to_json(&rhs)})
                        }),
                        Err(e) => res.fail_with_error(e, json!({"levi": comp})),
                    }
                });
            }
        }
    }
    res
}

/// Global transfer flag against the conjunction of the local ones over
/// `configs` pseudorandom global configurations.
pub fn local_global_principle(configs: u32, seed: u64) -> CheckResult {
    let mut res = CheckResult::new("local-global-principle");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut negatives = 0;
    for _ in 0..configs {
        let cfg = random_global_config(&mut rng);
        match local_global_transfer(&cfg.split_class, &cfg.target, &cfg.registry) {
            Ok(rep) => {
                negatives += u64::from(!rep.global);
                let conj = rep.per_place.values().all(|&b| b);
                res.check(rep.global == conj && rep.principle_holds, || {
                    json!({"target": to_json(&cfg.target), "class": to_json(&cfg.split_class),
                           "irreducibles": to_json(&cfg.registry.specs()), "report": to_json(&rep)})
                });
            }
            Err(e) => res.fail_with_error(e, json!({"class": to_json(&cfg.split_class)})),
        }
    }
    // a sample with no non-transferring class would not exercise the principle
    res.check(negatives > 0 || configs < 20, || json!({"negatives": negatives}));
    res
}

pub const NONARCH_PARAMS: [LocalParams; 3] = [
    LocalParams { q: 2, d: 1 },
    LocalParams { q: 3, d: 2 },
    LocalParams { q: 5, d: 4 },
];

/// `γ` transitivity for every nested pair of compositions of `m ≤ m_max`.
pub fn gamma_transitivity(m_max: u32) -> CheckResult {
    let mut res = CheckResult::new("gamma-transitivity");
    for case in FieldCase::ALL {
        let params: Vec<Option<LocalParams>> = if case.is_archimedean() {
            vec![None]
        } else {
            NONARCH_PARAMS.iter().copied().map(Some).collect()
        };
        for p in params {
            for m in 1..=m_max {
                for outer in compositions(m) {
                    for inner in refinements(&outer) {
                        match gamma_transitive_check(case, &outer, &inner, p) {
                            Ok(ok) => res.check(ok, || json!({"case": case, "outer": outer, "inner": inner})),
                            Err(e) => res.fail_with_error(e, json!({"outer": outer})),
                        }
                    }
                }
            }
        }
    }
    res
}

/// `vol(K)` against the product `Π_{i=0}^{m−1}(1 − q^{(i−m)d})`, the
/// self-dual constants, and `γ = vol(K)^{-1} Π vol(K_i) · vol(N(O))` in the
/// non-archimedean case.
pub fn measure_constants(m_max: u32) -> CheckResult {
    let mut res = CheckResult::new("vol-k-and-self-dual-constants");
    for p in NONARCH_PARAMS {
        let qq = qi(p.q as i64);
        for m in 1..=m_max {
            let mi = i64::from(m);
            let alt: Q = (0..mi).fold(qi(1), |acc, i| acc * (qi(1) - pow_q(&qq, (i - mi) * i64::from(p.d))));
            let v = vol_k(p, m);
            res.check(*v.rational() == alt && v.symbol_exp() == -2 * mi * mi, || {
                json!({"q": p.q, "d": p.d, "m": m, "vol_k": to_json(&v)})
            });
            let nd = selfdual_constant(FieldCase::NonArch, m);
            res.check(*nd.rational() == qi(1) && nd.symbol_exp() == -2 * mi * mi, || json!({"m": m}));
            for comp in compositions(m) {
                let e = mi * mi - comp.iter().map(|&x| i64::from(x) * i64::from(x)).sum::<i64>();
                let mut expect = vol_k(p, m).recip();
                for &b in &comp {
                    expect = &expect * &vol_k(p, b);
                }
                let nilradical = GammaConstant::NonArchimedean {
                    value: qi(1),
                    disc_quarter_exp: -e,
                };
                expect = &expect * &nilradical;
                let got = gamma(FieldCase::NonArch, &comp, Some(p));
                res.check(got.as_ref().ok() == Some(&expect), || json!({"composition": comp, "q": p.q, "d": p.d}));
            }
        }
    }
    for m in 1..=m_max {
        let two = pow_q(&qi(2), i64::from(m * m));
        res.check(*selfdual_constant(FieldCase::Complex, m).rational() == two, || json!({"m": m}));
        for case in [FieldCase::RealSplit, FieldCase::RealQuaternion] {
            res.check(selfdual_constant(case, m) == GammaConstant::one(case), || json!({"m": m}));
        }
    }
    res
}

/// Inversion, Langlands identity and value ranges at `points` generic
/// points for each rank `m ≤ m_max`.
pub fn arthur_identities(m_max: u32, points: u32, seed: u64) -> CheckResult {
    let mut res = CheckResult::new("arthur-identities");
    for m in 1..=m_max {
        let rep = identity_sweep(m, points, seed);
        res.checked += rep.checks;
        if !rep.passed() {
            res.failures += rep.counterexamples.len() as u64;
            res.counterexample.get_or_insert_with(|| to_json(&rep.counterexamples));
        }
    }
    res
}

/// `Γ_P^G(·, Y)` vanishes beyond the support radius, for every standard `P`
/// of rank `m ≤ m_max` and a few `Y`.
pub fn arthur_compact_support(m_max: u32, samples: u32, seed: u64) -> CheckResult {
    let mut res = CheckResult::new("arthur-compact-support");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for m in 1..=m_max {
        for p in StdParabolic::all(m) {
            for k in 0..4u32 {
                let y = if k == 0 {
                    vec![qi(0); m as usize]
                } else {
                    crate::arthur::random_point(&mut rng, m, 6)
                };
                match compact_support_check(&p, &y, samples, seed + u64::from(k)) {
                    Ok(rep) => {
                        res.checked += rep.checks;
                        if !rep.passed() {
                            res.failures += rep.counterexamples.len() as u64;
                            res.counterexample.get_or_insert_with(|| to_json(&rep.counterexamples));
                        }
                    }
                    Err(e) => res.fail_with_error(e, json!({"m": m})),
                }
            }
        }
    }
    res
}

/// `(e·λ)^t = e×(λ^t)` for `|λ| ≤ n_max`, `e ≤ e_max`.
pub fn transpose_scaling(n_max: u32, e_max: u32) -> CheckResult {
    let mut res = CheckResult::new("transpose-scaling-lemma");
    for n in 0..=n_max {
        for l in Partition::all(n) {
            for e in 1..=e_max {
                let lhs = l.dot(e).transpose();
                let rhs = l.transpose().times(e);
                res.check(lhs == rhs, || json!({"lambda": to_json(&l), "e": e}));
            }
        }
    }
    res
}

/// The minor lemma read literally: every 0/1 matrix with two ones per
/// column and a one in every row, with at most `max_cols` columns, has a
/// maximal minor of determinant ±1.
pub fn minor_lemma_literal(max_cols: usize) -> CheckResult {
    let mut res = CheckResult::new("zero-one-matrix-minor-lemma");
    for c in 1..=max_cols {
        for m in qualifying_matrices(c) {
            let ok = m.unimodular_minor().is_some();
            res.check(ok, || json!({"matrix": m.dense(), "rank": m.rank()}));
        }
    }
    res
}

fn partition_count(n: u32) -> u64 {
    // p(n) by the recurrence on the largest part, independent of enumeration
    let n = n as usize;
    let mut table = vec![vec![0u64; n + 1]; n + 1];
    for k in 0..=n {
        table[0][k] = 1;
    }
    for s in 1..=n {
        for k in 1..=n {
            table[s][k] = table[s][k - 1] + if k <= s { table[s - k][k] } else { 0 };
        }
    }
    table[n][n]
}

/// Class counts per characteristic polynomial against `Π_p p(a_p/δ_p)`.
pub fn enumeration_counts(md_max: u32, ds: &[u32]) -> CheckResult {
    let mut res = CheckResult::new("class-enumeration-counts");
    let reg = local_registry();
    for &d in ds {
        for m in 1..=md_max / d {
            let alg = local_algebra(m, d);
            for f in all_charpolys(&alg, &reg).expect("local registry") {
                check_fiber(&mut res, &alg, &f, &reg);
            }
        }
    }
    res
}

fn check_fiber(res: &mut CheckResult, alg: &CsaAlgebra, f: &CharPoly, reg: &Registry) {
    let classes = match enumerate_classes(alg, f, reg) {
        Ok(c) => c,
        Err(e) => return res.fail_with_error(e, to_json(f)),
    };
    let mut expect = 1u64;
    for (p, &a) in &f.factors {
        let delta = u64::from(alg.delta(reg.get(p).expect("registered")).expect("delta"));
        expect *= partition_count((a / delta) as u32);
    }
    let distinct: std::collections::BTreeSet<String> =
        classes.iter().map(|c| serde_json::to_string(&c.lambda).unwrap_or_default()).collect();
    let all_valid = classes.iter().all(|c| validate_class(c, reg).unwrap_or(false));
    let same_charpoly = classes.iter().all(|c| charpoly_of(c, reg).ok().as_ref() == Some(f));
    res.check(
        classes.len() as u64 == expect && distinct.len() == classes.len() && all_valid && same_charpoly,
        || json!({"algebra": to_json(alg), "charpoly": to_json(f), "count": classes.len(), "expected": expect}),
    );
}

/// `class_of(realize(c)) = c` for split classes with `n ≤ n_max`.
pub fn realize_round_trip(n_max: u32) -> CheckResult {
    let mut res = CheckResult::new("realize-class-of-round-trip");
    let reg = split_registry();
    for n in 1..=n_max {
        let alg = CsaAlgebra::split_rational(n);
        for c in all_classes(&alg, &reg).expect("split registry") {
            let back = realize(&c, &reg).and_then(|x| class_of(&x, &alg, &reg, None));
            res.check(back.as_ref().ok() == Some(&c), || json!({"class": to_json(&c)}));
        }
    }
    res
}

/// Commutant dimension of the realization against `centralizer_dim`.
pub fn centralizer_oracle(n_max: u32) -> CheckResult {
    let mut res = CheckResult::new("centralizer-dimension-oracle");
    let reg = split_registry();
    for n in 1..=n_max {
        let alg = CsaAlgebra::split_rational(n);
        for c in all_classes(&alg, &reg).expect("split registry") {
            let oracle = realize(&c, &reg).map(|x| commutant_dim(&x) as u64);
            let formula = centralizer_dim(&c, &reg);
            res.check(oracle.is_ok() && oracle.as_ref().ok() == formula.as_ref().ok(), || {
                json!({"class": to_json(&c)})
            });
        }
    }
    res
}

/// The minor lemma for matrices whose rows split into two groups, each
/// column meeting both: all pairs of set partitions of `0..l`, `l ≤ l_max`.
/// Block divisibility is checked when the columns are independent.
pub fn minor_lemma_two_groups(l_max: usize) -> CheckResult {
    let mut res = CheckResult::new("two-group-minor-lemma");
    for l in 1..=l_max {
        let parts = set_partitions(l);
        for a in &parts {
            for b in &parts {
                let m = two_partition_matrix(a, b, l);
                // divisibility needs the columns to be independent
                let full = m.rank() == l;
                let ok = m.unimodular_minor().is_some()
                    && (!full || (row_divisibility_forces_columns(&m, 2) && row_divisibility_forces_columns(&m, 3)));
                res.check(ok, || json!({"first": a, "second": b}));
            }
        }
    }
    res
}
