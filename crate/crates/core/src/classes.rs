//! Conjugacy classes of `Mat_m(D)` as partition-valued functions on monic
//! irreducible polynomials, and the operations on them: validity and
//! enumeration, Jordan data, centralizers, ellipticity, induction, closure
//! order and transfer to the quasi-split form `Mat_{md}(F)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::brauer::{CsaAlgebra, Registry};
use crate::error::{Error, Result};
use crate::partitions::{concat_transpose, Partition};

/// A composition `(m_1, …, m_l)` describing the standard block Levi
/// `Mat_{m_1}(D) × … × Mat_{m_l}(D)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct LeviShape {
    blocks: Vec<u32>,
}

impl LeviShape {
    pub fn new(blocks: Vec<u32>) -> Result<Self> {
        if blocks.is_empty() || blocks.contains(&0) {
            return Err(Error::InvalidComposition(format!("{blocks:?}")));
        }
        Ok(LeviShape { blocks })
    }

    /// The whole group, a single block.
    pub fn full(m: u32) -> Self {
        LeviShape { blocks: vec![m] }
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn size(&self) -> u32 {
        self.blocks.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Every block scaled by `d`: the Levi of the quasi-split form that
    /// corresponds to this one.
    pub fn scaled(&self, d: u32) -> LeviShape {
        LeviShape {
            blocks: self.blocks.iter().map(|b| b * d).collect(),
        }
    }
}

impl TryFrom<Vec<u32>> for LeviShape {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        LeviShape::new(v)
    }
}

impl From<LeviShape> for Vec<u32> {
    fn from(l: LeviShape) -> Vec<u32> {
        l.blocks
    }
}

/// `Π_p p^{a_p}`, keyed by irreducible label.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CharPoly {
    pub factors: BTreeMap<String, u64>,
}

impl CharPoly {
    pub fn new<S: Into<String>>(factors: impl IntoIterator<Item = (S, u64)>) -> Self {
        CharPoly {
            factors: factors
                .into_iter()
                .filter(|(_, a)| *a > 0)
                .map(|(p, a)| (p.into(), a))
                .collect(),
        }
    }

    pub fn degree(&self, reg: &Registry) -> Result<u64> {
        let mut total = 0u64;
        for (p, a) in &self.factors {
            total += u64::from(reg.get(p)?.degree) * a;
        }
        Ok(total)
    }
}

/// A conjugacy class: the algebra plus `p ↦ λ(p)`, empty values dropped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "ClassRepr")]
pub struct ConjClass {
    pub algebra: CsaAlgebra,
    pub lambda: BTreeMap<String, Partition>,
}

#[derive(Deserialize)]
struct ClassRepr {
    algebra: CsaAlgebra,
    lambda: BTreeMap<String, Partition>,
}

impl From<ClassRepr> for ConjClass {
    fn from(r: ClassRepr) -> Self {
        ConjClass::new(r.algebra, r.lambda)
    }
}

impl ConjClass {
    pub fn new<S: Into<String>>(
        algebra: CsaAlgebra,
        lambda: impl IntoIterator<Item = (S, Partition)>,
    ) -> Self {
        ConjClass {
            algebra,
            lambda: lambda
                .into_iter()
                .filter(|(_, l)| !l.is_empty())
                .map(|(p, l)| (p.into(), l))
                .collect(),
        }
    }

    /// Like [`ConjClass::new`], but fails unless the mass identity holds.
    pub fn checked<S: Into<String>>(
        algebra: CsaAlgebra,
        lambda: impl IntoIterator<Item = (S, Partition)>,
        reg: &Registry,
    ) -> Result<Self> {
        let c = ConjClass::new(algebra, lambda);
        let found = mass(&c, reg)?;
        let expected = u64::from(c.algebra.degree());
        if found != expected {
            return Err(Error::DegreeMismatch { expected, found });
        }
        Ok(c)
    }

    pub fn get(&self, p: &str) -> Partition {
        self.lambda.get(p).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &String> {
        self.lambda.keys()
    }
}

fn delta_of(alg: &CsaAlgebra, reg: &Registry, p: &str) -> Result<u32> {
    alg.delta(reg.get(p)?)
}

/// `Σ_p deg(p)·|λ(p)|·δ_p`.
pub fn mass(c: &ConjClass, reg: &Registry) -> Result<u64> {
    let mut total = 0u64;
    for (p, l) in &c.lambda {
        let spec = reg.get(p)?;
        let delta = c.algebra.delta(spec)?;
        total += u64::from(spec.degree) * u64::from(l.size()) * u64::from(delta);
    }
    Ok(total)
}

/// True iff the mass identity `Σ deg(p)|λ(p)|δ_p = md` holds.
pub fn validate_class(c: &ConjClass, reg: &Registry) -> Result<bool> {
    Ok(mass(c, reg)? == u64::from(c.algebra.degree()))
}

/// Whether `f` is the characteristic polynomial of some element of `alg`.
///
/// Requires `d | a_p·deg p` for every factor; over a global base also
/// `deg p | m_p·c(D ⊗ F_p)` with `m_p = a_p·deg p / d` and
/// `c(D ⊗ F_p) = d/δ_p`, i.e. `δ_p | a_p`.
pub fn charpoly_valid(alg: &CsaAlgebra, f: &CharPoly, reg: &Registry) -> Result<bool> {
    let expected = u64::from(alg.degree());
    let found = f.degree(reg)?;
    if found != expected {
        return Err(Error::DegreeMismatch { expected, found });
    }
    let d = u64::from(alg.index());
    for (p, &a) in &f.factors {
        let spec = reg.get(p)?;
        let g = u64::from(spec.degree);
        if (a * g) % d != 0 {
            return Ok(false);
        }
        if !alg.field().is_local() {
            let m_p = a * g / d;
            let cap = d / u64::from(alg.delta(spec)?);
            if (m_p * cap) % g != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `a_p = |λ(p)|·δ_p`.
pub fn charpoly_of(c: &ConjClass, reg: &Registry) -> Result<CharPoly> {
    let mut factors = BTreeMap::new();
    for (p, l) in &c.lambda {
        let delta = delta_of(&c.algebra, reg, p)?;
        factors.insert(p.clone(), u64::from(l.size()) * u64::from(delta));
    }
    Ok(CharPoly { factors })
}

/// All classes with characteristic polynomial `f`, ordered by p-label and
/// then reverse-lexicographically in each partition.
pub fn enumerate_classes(alg: &CsaAlgebra, f: &CharPoly, reg: &Registry) -> Result<Vec<ConjClass>> {
    if !charpoly_valid(alg, f, reg)? {
        return Err(Error::InvalidCharpoly(format!("{:?}", f.factors)));
    }
    let mut choices: Vec<(String, Vec<Partition>)> = Vec::new();
    for (p, &a) in &f.factors {
        let delta = u64::from(delta_of(alg, reg, p)?);
        if a % delta != 0 {
            return Err(Error::InvalidCharpoly(format!(
                "a_{p} = {a} is not a multiple of δ_p = {delta}"
            )));
        }
        choices.push((p.clone(), Partition::all((a / delta) as u32)));
    }
    let mut out = Vec::new();
    let mut cur: Vec<(String, Partition)> = Vec::new();
    product(&choices, &mut cur, &mut |lam| {
        out.push(ConjClass::new(alg.clone(), lam.iter().cloned()))
    });
    Ok(out)
}

fn product<F: FnMut(&[(String, Partition)])>(
    choices: &[(String, Vec<Partition>)],
    cur: &mut Vec<(String, Partition)>,
    emit: &mut F,
) {
    match choices.split_first() {
        None => emit(cur),
        Some(((p, opts), rest)) => {
            for l in opts {
                cur.push((p.clone(), l.clone()));
                product(rest, cur, emit);
                cur.pop();
            }
        }
    }
}

/// Every valid characteristic polynomial of `alg` supported on registry
/// polynomials, in a deterministic order.
pub fn all_charpolys(alg: &CsaAlgebra, reg: &Registry) -> Result<Vec<CharPoly>> {
    let mut weights = Vec::new();
    for spec in reg.iter() {
        let delta = alg.delta(spec)?;
        weights.push((spec.label.clone(), spec.degree * delta, delta));
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(
        w: &[(String, u32, u32)],
        rest: u32,
        cur: &mut Vec<(String, u64)>,
        out: &mut Vec<CharPoly>,
    ) {
        match w.split_first() {
            None => {
                if rest == 0 {
                    out.push(CharPoly::new(cur.iter().cloned()));
                }
            }
            Some(((p, unit, delta), tail)) => {
                for k in 0..=rest / unit {
                    cur.push((p.clone(), u64::from(k * delta)));
                    go(tail, rest - k * unit, cur, out);
                    cur.pop();
                }
            }
        }
    }
    go(&weights, alg.degree(), &mut cur, &mut out);
    Ok(out)
}

/// Every valid class of `alg` supported on registry polynomials.
pub fn all_classes(alg: &CsaAlgebra, reg: &Registry) -> Result<Vec<ConjClass>> {
    let mut out = Vec::new();
    for f in all_charpolys(alg, reg)? {
        out.extend(enumerate_classes(alg, &f, reg)?);
    }
    Ok(out)
}

/// Each `λ(p)` replaced by `(1^{|λ(p)|})`.
pub fn semisimple_part(c: &ConjClass) -> ConjClass {
    ConjClass::new(
        c.algebra.clone(),
        c.lambda
            .iter()
            .map(|(p, l)| (p.clone(), Partition::ones(l.size()))),
    )
}

/// Semisimple with a single irreducible in the support.
pub fn is_elliptic(c: &ConjClass) -> bool {
    c.lambda.len() == 1 && c.lambda.values().all(Partition::is_all_ones)
}

/// The standard Levi and elliptic block classes from which `c` is induced.
///
/// For each `p` (label order) and each part `k` of `λ(p)^t` there is one
/// block of size `k·deg(p)·δ_p/d` carrying `λ(p) = (1^k)`.
pub fn elliptic_support(c: &ConjClass, reg: &Registry) -> Result<(LeviShape, Vec<ConjClass>)> {
    let d = c.algebra.index();
    let mut sizes = Vec::new();
    let mut blocks = Vec::new();
    for (p, l) in &c.lambda {
        let spec = reg.get(p)?;
        let delta = c.algebra.delta(spec)?;
        let unit = spec.degree * delta;
        debug_assert_eq!(unit % d, 0);
        for &k in l.transpose().parts() {
            let size = k * unit / d;
            sizes.push(size);
            blocks.push(ConjClass::new(
                c.algebra.with_capacity(size),
                [(p.clone(), Partition::ones(k))],
            ));
        }
    }
    Ok((LeviShape::new(sizes)?, blocks))
}

/// Induction from the standard Levi `L`: pointwise concat-transpose.
pub fn induce(levi: &LeviShape, blocks: &[ConjClass]) -> Result<ConjClass> {
    if blocks.len() != levi.len() {
        return Err(Error::AlgebraMismatch(format!(
            "{} blocks for a Levi with {} factors",
            blocks.len(),
            levi.len()
        )));
    }
    let first = &blocks[0].algebra;
    for (b, &mi) in blocks.iter().zip(levi.blocks()) {
        if b.algebra.m != mi {
            return Err(Error::AlgebraMismatch(format!(
                "block class lives on capacity {}, Levi factor has {mi}",
                b.algebra.m
            )));
        }
        if !b.algebra.same_division_algebra(first) {
            return Err(Error::AlgebraMismatch(
                "block classes over different division algebras".into(),
            ));
        }
    }
    let mut grouped: BTreeMap<&String, Vec<&Partition>> = BTreeMap::new();
    for b in blocks {
        for (p, l) in &b.lambda {
            grouped.entry(p).or_default().push(l);
        }
    }
    Ok(ConjClass::new(
        first.with_capacity(levi.size()),
        grouped
            .into_iter()
            .map(|(p, ls)| (p.clone(), concat_transpose(ls))),
    ))
}

/// One simple factor `Res_{F_p/F} GL_n(D_p)` of the Levi part of the
/// centralizer, attached to a Jordan size `v` occurring `n` times.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerFactor {
    pub poly: String,
    pub center_degree: u32,
    pub division_index: u32,
    pub block_size: u32,
    pub jordan_size: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CentralizerShape {
    pub factors: Vec<CentralizerFactor>,
}

impl CentralizerShape {
    /// `Σ deg(p)·δ_p·n·v`, which equals `md` for a valid class.
    pub fn total_degree(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| {
                u64::from(f.center_degree)
                    * u64::from(f.division_index)
                    * u64::from(f.block_size)
                    * u64::from(f.jordan_size)
            })
            .sum()
    }
}

pub fn centralizer_shape(c: &ConjClass, reg: &Registry) -> Result<CentralizerShape> {
    let mut factors = Vec::new();
    for (p, l) in &c.lambda {
        let spec = reg.get(p)?;
        let delta = c.algebra.delta(spec)?;
        for (v, n) in l.multiplicities() {
            factors.push(CentralizerFactor {
                poly: p.clone(),
                center_degree: spec.degree,
                division_index: delta,
                block_size: n,
                jordan_size: v,
            });
        }
    }
    Ok(CentralizerShape { factors })
}

/// `dim_F` of the centralizer: `Σ_p deg(p)·δ_p²·Σ_{i,j} min(λ_i, λ_j)`.
pub fn centralizer_dim(c: &ConjClass, reg: &Registry) -> Result<u64> {
    let mut total = 0u64;
    for (p, l) in &c.lambda {
        let spec = reg.get(p)?;
        let delta = u64::from(c.algebra.delta(spec)?);
        let pairs: u64 = l
            .transpose()
            .parts()
            .iter()
            .map(|&k| u64::from(k) * u64::from(k))
            .sum();
        total += u64::from(spec.degree) * delta * delta * pairs;
    }
    Ok(total)
}

/// Closure order: `c1` lies in the closure of `c2`.
pub fn closure_leq(c1: &ConjClass, c2: &ConjClass, reg: &Registry) -> Result<bool> {
    if c1.algebra != c2.algebra {
        return Err(Error::AlgebraMismatch("classes live in different algebras".into()));
    }
    if charpoly_of(c1, reg)? != charpoly_of(c2, reg)? {
        return Err(Error::CharpolyMismatch);
    }
    Ok(c1
        .lambda
        .iter()
        .all(|(p, l)| l.dominated_by(&c2.get(p))))
}

/// `λ*(p) = δ_p × λ(p)` on `Mat_{md}(F)`.
pub fn transfer_to_split(c: &ConjClass, reg: &Registry) -> Result<ConjClass> {
    let mut lambda = BTreeMap::new();
    for (p, l) in &c.lambda {
        let delta = delta_of(&c.algebra, reg, p)?;
        lambda.insert(p.clone(), l.times(delta));
    }
    Ok(ConjClass::new(c.algebra.quasi_split(), lambda))
}

/// The class of `target` whose transfer is `split`, if there is one.
pub fn transfers_from_split(
    split: &ConjClass,
    target: &CsaAlgebra,
    reg: &Registry,
) -> Result<Option<ConjClass>> {
    check_split_source(split, target)?;
    let mut lambda = BTreeMap::new();
    for (p, l) in &split.lambda {
        let delta = delta_of(target, reg, p)?;
        match l.quotient_times(delta) {
            Some(q) => {
                lambda.insert(p.clone(), q);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(ConjClass::new(target.clone(), lambda)))
}

fn check_split_source(split: &ConjClass, target: &CsaAlgebra) -> Result<()> {
    if !split.algebra.is_split() || split.algebra.degree() != target.degree() {
        return Err(Error::AlgebraMismatch(format!(
            "expected a class of the split algebra of degree {}",
            target.degree()
        )));
    }
    if split.algebra.field() != target.field() {
        return Err(Error::AlgebraMismatch("base fields differ".into()));
    }
    Ok(())
}

/// A Levi of `Mat_{md}(F)` comes from `Mat_m(D)` iff `d` divides every block.
pub fn levi_transfers(levi: &LeviShape, target: &CsaAlgebra) -> bool {
    let d = target.index();
    levi.blocks().iter().all(|b| b % d == 0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedTransferReport {
    /// The induced split class transfers to the target.
    pub induced_transfers: bool,
    /// The Levi transfers and every block class transfers.
    pub blockwise: bool,
    pub agree: bool,
    pub witness: Option<ConjClass>,
}

/// Computes both sides of "the induced class transfers iff the Levi and all
/// block classes transfer".
pub fn induced_transfer_check(
    levi: &LeviShape,
    blocks: &[ConjClass],
    target: &CsaAlgebra,
    reg: &Registry,
) -> Result<InducedTransferReport> {
    let induced = induce(levi, blocks)?;
    let witness = transfers_from_split(&induced, target, reg)?;
    let mut blockwise = levi_transfers(levi, target);
    if blockwise {
        let d = target.index();
        for (b, &mi) in blocks.iter().zip(levi.blocks()) {
            let sub = target.with_capacity(mi / d);
            if transfers_from_split(b, &sub, reg)?.is_none() {
                blockwise = false;
                break;
            }
        }
    }
    let induced_transfers = witness.is_some();
    Ok(InducedTransferReport {
        induced_transfers,
        blockwise,
        agree: induced_transfers == blockwise,
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalGlobalReport {
    /// Transfer with the global `δ_p`.
    pub global: bool,
    /// One flag per place `w` of each `F_p` above each listed place `v`.
    pub per_place: BTreeMap<String, bool>,
    /// Conjunction of the factor flags above each `v`.
    pub per_base_place: BTreeMap<String, bool>,
    /// `global` equals the conjunction of all local flags.
    pub principle_holds: bool,
    pub class: Option<ConjClass>,
}

/// Transfer of a split class computed globally and place by place.
///
/// Factor keys are the place label `v` when `F_p` has a single place above
/// `v`, otherwise `v_1, v_2, …`; they are prefixed by `p/` when the support
/// has more than one polynomial.
pub fn local_global_transfer(
    split: &ConjClass,
    target: &CsaAlgebra,
    reg: &Registry,
) -> Result<LocalGlobalReport> {
    check_split_source(split, target)?;
    let class = transfers_from_split(split, target, reg)?;
    let many = split.lambda.len() > 1;
    let mut per_place = BTreeMap::new();
    let mut per_base_place = BTreeMap::new();
    for place in target.field().places() {
        let v = &place.label;
        let mut all = true;
        for (p, l) in &split.lambda {
            let spec = reg.get(p)?;
            let indices = target.brauer.local_factor_indices(spec, v)?;
            let base = if many { format!("{p}/{v}") } else { v.clone() };
            for (i, &e) in indices.iter().enumerate() {
                let ok = l.divides_times(e);
                all &= ok;
                let key = if indices.len() == 1 {
                    base.clone()
                } else {
                    format!("{base}_{}", i + 1)
                };
                per_place.insert(key, ok);
            }
        }
        per_base_place.insert(v.clone(), all);
    }
    let global = class.is_some();
    let principle_holds = global == per_place.values().all(|&b| b);
    Ok(LocalGlobalReport {
        global,
        per_place,
        per_base_place,
        principle_holds,
        class,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{BrauerClass, FieldSpec, IrreducibleSpec, LocalInvariant, Place};

    fn p<const N: usize>(v: [u32; N]) -> Partition {
        Partition::from(v)
    }

    fn local_quaternion(m: u32) -> CsaAlgebra {
        let b = BrauerClass::local(Place::finite("v", 5).unwrap(), LocalInvariant::from_ratio(1, 2)).unwrap();
        CsaAlgebra::new(m, b).unwrap()
    }

    fn split_local(m: u32) -> CsaAlgebra {
        CsaAlgebra::new(m, BrauerClass::split(FieldSpec::local(Place::finite("v", 5).unwrap()))).unwrap()
    }

    fn reg() -> Registry {
        Registry::from_specs([
            IrreducibleSpec::new("T", 1),
            IrreducibleSpec::new("T-1", 1),
            IrreducibleSpec::new("T-2", 1),
            IrreducibleSpec::new("q", 2),
        ])
        .unwrap()
    }

    #[test]
    fn validate_examples() {
        let r = reg();
        let c = ConjClass::new(split_local(2), [("T", p([1, 1]))]);
        assert!(validate_class(&c, &r).unwrap());
        let c = ConjClass::new(local_quaternion(1), [("T-1", p([1]))]);
        assert!(validate_class(&c, &r).unwrap());
        let c = ConjClass::new(local_quaternion(1), [("T-1", p([1])), ("T-2", p([1]))]);
        assert!(!validate_class(&c, &r).unwrap());
        let c = ConjClass::new(split_local(1), [("nope", p([1]))]);
        assert_eq!(validate_class(&c, &r).unwrap_err().code(), "unknown-irreducible");
    }

    #[test]
    fn charpoly_examples() {
        let r = reg();
        assert!(charpoly_valid(&local_quaternion(1), &CharPoly::new([("q", 1)]), &r).unwrap());
        assert!(!charpoly_valid(&local_quaternion(1), &CharPoly::new([("T-1", 1), ("T-2", 1)]), &r).unwrap());
        assert!(charpoly_valid(&split_local(3), &CharPoly::new([("T", 1), ("q", 1)]), &r).unwrap());
        let err = charpoly_valid(&split_local(3), &CharPoly::new([("T", 1)]), &r).unwrap_err();
        assert_eq!(err.code(), "degree-mismatch");

        let c = ConjClass::new(split_local(3), [("T", p([2, 1]))]);
        assert_eq!(charpoly_of(&c, &r).unwrap(), CharPoly::new([("T", 3)]));
        let c = ConjClass::new(local_quaternion(2), [("T", p([2]))]);
        assert_eq!(charpoly_of(&c, &r).unwrap(), CharPoly::new([("T", 4)]));
    }

    #[test]
    fn enumeration_examples() {
        let r = reg();
        let got = enumerate_classes(&split_local(2), &CharPoly::new([("T", 2)]), &r).unwrap();
        assert_eq!(got.iter().map(|c| c.get("T")).collect::<Vec<_>>(), vec![p([2]), p([1, 1])]);
        let got = enumerate_classes(&local_quaternion(2), &CharPoly::new([("T", 4)]), &r).unwrap();
        assert_eq!(got.len(), 2);
        let got = enumerate_classes(&local_quaternion(1), &CharPoly::new([("T", 2)]), &r).unwrap();
        assert_eq!(got, vec![ConjClass::new(local_quaternion(1), [("T", p([1]))])]);
        let err = enumerate_classes(&local_quaternion(1), &CharPoly::new([("T-1", 1), ("T-2", 1)]), &r);
        assert_eq!(err.unwrap_err().code(), "invalid-charpoly");
    }

    #[test]
    fn jordan_and_ellipticity() {
        let c = ConjClass::new(split_local(4), [("T-1", p([3, 1]))]);
        assert_eq!(semisimple_part(&c).get("T-1"), p([1, 1, 1, 1]));
        let c = ConjClass::new(split_local(4), [("T", p([2])), ("T-1", p([1, 1]))]);
        let s = semisimple_part(&c);
        assert_eq!(s.get("T"), p([1, 1]));
        assert_eq!(semisimple_part(&s), s);

        assert!(is_elliptic(&ConjClass::new(local_quaternion(1), [("q", p([1]))])));
        assert!(!is_elliptic(&ConjClass::new(split_local(2), [("T-1", p([1])), ("T-2", p([1]))])));
        assert!(!is_elliptic(&ConjClass::new(split_local(2), [("T", p([2]))])));
    }

    #[test]
    fn elliptic_support_examples() {
        let r = reg();
        let c = ConjClass::new(split_local(3), [("T", p([3]))]);
        let (l, blocks) = elliptic_support(&c, &r).unwrap();
        assert_eq!(l.blocks(), &[1, 1, 1]);
        assert!(blocks.iter().all(|b| b.get("T") == p([1])));
        assert_eq!(induce(&l, &blocks).unwrap(), c);

        let e = ConjClass::new(local_quaternion(1), [("q", p([1]))]);
        let (l, blocks) = elliptic_support(&e, &r).unwrap();
        assert_eq!(l, LeviShape::full(1));
        assert_eq!(blocks, vec![e]);

        let c = ConjClass::new(local_quaternion(2), [("T", p([2]))]);
        let (l, blocks) = elliptic_support(&c, &r).unwrap();
        assert_eq!(l.blocks(), &[1, 1]);
        assert!(blocks.iter().all(|b| b.get("T") == p([1])));
        assert_eq!(induce(&l, &blocks).unwrap(), c);
    }

    #[test]
    fn induction_examples() {
        let zero = ConjClass::new(split_local(1), [("T", p([1]))]);
        let l = LeviShape::new(vec![1, 1, 1, 1]).unwrap();
        let got = induce(&l, &vec![zero; 4]).unwrap();
        assert_eq!(got.get("T"), p([4]));

        let b1 = ConjClass::new(split_local(2), [("T", p([2]))]);
        let b2 = ConjClass::new(split_local(2), [("T", p([1, 1]))]);
        let got = induce(&LeviShape::new(vec![2, 2]).unwrap(), &[b1.clone(), b2]).unwrap();
        assert_eq!(got.get("T"), p([3, 1]));

        let b3 = ConjClass::new(split_local(1), [("T-1", p([1]))]);
        let got = induce(&LeviShape::new(vec![2, 1]).unwrap(), &[b1.clone(), b3]).unwrap();
        assert_eq!(got, ConjClass::new(split_local(3), [("T", p([2])), ("T-1", p([1]))]));

        let bad = ConjClass::new(local_quaternion(1), [("T", p([1]))]);
        let err = induce(&LeviShape::new(vec![2, 1]).unwrap(), &[b1, bad]).unwrap_err();
        assert_eq!(err.code(), "algebra-mismatch");
    }

    #[test]
    fn centralizer_examples() {
        let r = reg();
        let c = ConjClass::new(split_local(4), [("T", p([2, 2]))]);
        let s = centralizer_shape(&c, &r).unwrap();
        assert_eq!(s.factors.len(), 1);
        let f = &s.factors[0];
        assert_eq!((f.center_degree, f.division_index, f.block_size, f.jordan_size), (1, 1, 2, 2));
        assert_eq!(centralizer_dim(&c, &r).unwrap(), 8);

        let e = ConjClass::new(local_quaternion(1), [("q", p([1]))]);
        let f = &centralizer_shape(&e, &r).unwrap().factors[0];
        assert_eq!((f.center_degree, f.division_index, f.block_size, f.jordan_size), (2, 1, 1, 1));

        let rs = ConjClass::new(split_local(2), [("T-1", p([1])), ("T-2", p([1]))]);
        assert_eq!(centralizer_shape(&rs, &r).unwrap().factors.len(), 2);
        assert_eq!(centralizer_dim(&rs, &r).unwrap(), 2);

        let central = ConjClass::new(local_quaternion(1), [("T-1", p([1]))]);
        assert_eq!(centralizer_dim(&central, &r).unwrap(), 4);
        assert_eq!(centralizer_shape(&central, &r).unwrap().total_degree(), 2);
    }

    #[test]
    fn closure_examples() {
        let r = reg();
        let a = ConjClass::new(split_local(2), [("T", p([1, 1]))]);
        let b = ConjClass::new(split_local(2), [("T", p([2]))]);
        assert!(closure_leq(&a, &b, &r).unwrap());
        assert!(!closure_leq(&b, &a, &r).unwrap());
        let a = ConjClass::new(split_local(4), [("T", p([2, 2]))]);
        let b = ConjClass::new(split_local(4), [("T", p([3, 1]))]);
        assert!(closure_leq(&a, &b, &r).unwrap());
        let c = ConjClass::new(split_local(4), [("T-1", p([3, 1]))]);
        assert_eq!(closure_leq(&a, &c, &r).unwrap_err().code(), "charpoly-mismatch");
    }

    #[test]
    fn transfer_examples() {
        let r = reg();
        let c = ConjClass::new(split_local(3), [("T", p([2, 1]))]);
        assert_eq!(transfer_to_split(&c, &r).unwrap(), c);

        let c = ConjClass::new(local_quaternion(1), [("T-1", p([1]))]);
        let s = transfer_to_split(&c, &r).unwrap();
        assert_eq!(s, ConjClass::new(split_local(2), [("T-1", p([1, 1]))]));
        assert_eq!(transfers_from_split(&s, &local_quaternion(1), &r).unwrap(), Some(c));

        let c = ConjClass::new(local_quaternion(2), [("T", p([2]))]);
        assert_eq!(transfer_to_split(&c, &r).unwrap().get("T"), p([2, 2]));

        let s = ConjClass::new(split_local(4), [("T", p([3, 1]))]);
        assert_eq!(transfers_from_split(&s, &local_quaternion(2), &r).unwrap(), None);
    }

    #[test]
    fn levi_transfer_examples() {
        let r = reg();
        assert!(levi_transfers(&LeviShape::new(vec![3, 1]).unwrap(), &split_local(4)));
        assert!(levi_transfers(&LeviShape::new(vec![2, 2]).unwrap(), &local_quaternion(2)));
        assert!(!levi_transfers(&LeviShape::new(vec![3, 1]).unwrap(), &local_quaternion(2)));

        let zero = |n| ConjClass::new(split_local(n), [("T", Partition::ones(n))]);
        let rep = induced_transfer_check(
            &LeviShape::new(vec![2, 2]).unwrap(),
            &[zero(2), zero(2)],
            &local_quaternion(2),
            &r,
        )
        .unwrap();
        assert!(rep.induced_transfers && rep.blockwise && rep.agree);
        let rep = induced_transfer_check(
            &LeviShape::new(vec![3, 1]).unwrap(),
            &[zero(3), zero(1)],
            &local_quaternion(2),
            &r,
        )
        .unwrap();
        assert!(!rep.induced_transfers && !rep.blockwise && rep.agree);
    }

    #[test]
    fn levi_shape_rejects_zero_blocks() {
        assert_eq!(LeviShape::new(vec![2, 0]).unwrap_err().code(), "invalid-composition");
        assert!(LeviShape::new(vec![]).is_err());
        assert_eq!(LeviShape::new(vec![1, 2]).unwrap().scaled(2).blocks(), &[2, 4]);
    }
}
