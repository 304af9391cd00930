//! Places, Brauer classes described by local invariants in ℚ/ℤ, abstract
//! irreducible polynomials given by their splitting degrees, and the central
//! simple algebras `Mat_m(D)` built from them.
//!
//! No number field is ever constructed. An [`IrreducibleSpec`] carries the
//! degrees `[F_{p,w} : F_v]` of the completions of `F_p = F[T]/(p)` as data,
//! and every index computation goes through local class field theory:
//! `inv(D ⊗ E) = [E : F_v] · inv(D)`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratio::{fmt_q, parse_q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlaceKindTag {
    Real,
    Complex,
    Finite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaceKind {
    Real,
    Complex,
    /// `q` is the residue cardinality, `disc_exp` the exponent `a` with
    /// `N(Δ₁) = p^a`.
    Finite { q: u64, disc_exp: Q },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PlaceRepr", into = "PlaceRepr")]
pub struct Place {
    pub label: String,
    pub kind: PlaceKind,
}

#[derive(Serialize, Deserialize)]
struct PlaceRepr {
    label: String,
    kind: PlaceKindTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    disc_exp: Option<String>,
}

impl TryFrom<PlaceRepr> for Place {
    type Error = Error;

    fn try_from(r: PlaceRepr) -> Result<Self> {
        let kind = match r.kind {
            PlaceKindTag::Real => PlaceKind::Real,
            PlaceKindTag::Complex => PlaceKind::Complex,
            PlaceKindTag::Finite => {
                let q = r
                    .q
                    .ok_or_else(|| Error::Schema(format!("finite place `{}` needs `q`", r.label)))?;
                let disc_exp = match r.disc_exp {
                    Some(s) => parse_q(&s)?,
                    None => Q::zero(),
                };
                PlaceKind::Finite { q, disc_exp }
            }
        };
        Place::new(r.label, kind)
    }
}

impl From<Place> for PlaceRepr {
    fn from(p: Place) -> Self {
        match p.kind {
            PlaceKind::Real => PlaceRepr {
                label: p.label,
                kind: PlaceKindTag::Real,
                q: None,
                disc_exp: None,
            },
            PlaceKind::Complex => PlaceRepr {
                label: p.label,
                kind: PlaceKindTag::Complex,
                q: None,
                disc_exp: None,
            },
            PlaceKind::Finite { q, disc_exp } => PlaceRepr {
                label: p.label,
                kind: PlaceKindTag::Finite,
                q: Some(q),
                disc_exp: Some(fmt_q(&disc_exp)),
            },
        }
    }
}

impl Place {
    pub fn new(label: impl Into<String>, kind: PlaceKind) -> Result<Self> {
        let label = label.into();
        if let PlaceKind::Finite { q, disc_exp } = &kind {
            if !is_prime_power(*q) {
                return Err(Error::Schema(format!(
                    "residue cardinality {q} of `{label}` is not a prime power"
                )));
            }
            if *disc_exp < Q::zero() {
                return Err(Error::Schema(format!(
                    "negative discriminant exponent at `{label}`"
                )));
            }
        }
        Ok(Place { label, kind })
    }

    pub fn real(label: impl Into<String>) -> Self {
        Place {
            label: label.into(),
            kind: PlaceKind::Real,
        }
    }

    pub fn complex(label: impl Into<String>) -> Self {
        Place {
            label: label.into(),
            kind: PlaceKind::Complex,
        }
    }

    /// A finite place with residue field of `q` elements over an unramified base.
    pub fn finite(label: impl Into<String>, q: u64) -> Result<Self> {
        Place::new(
            label,
            PlaceKind::Finite {
                q,
                disc_exp: Q::zero(),
            },
        )
    }

    pub fn is_archimedean(&self) -> bool {
        !matches!(self.kind, PlaceKind::Finite { .. })
    }
}

pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut n = q;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            return n == 1;
        }
        p += 1;
    }
    true
}

/// A local field (one place) or a global field (finitely many listed
/// places; unlisted places carry the zero invariant).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Local { place: Place },
    Global { places: Vec<Place> },
}

impl FieldSpec {
    pub fn local(place: Place) -> Self {
        FieldSpec::Local { place }
    }

    pub fn global(places: Vec<Place>) -> Result<Self> {
        let f = FieldSpec::Global { places };
        f.validate()?;
        Ok(f)
    }

    /// ℚ with its real place labelled `inf`.
    pub fn rationals() -> Self {
        FieldSpec::Global {
            places: vec![Place::real("inf")],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let FieldSpec::Global { places } = self {
            if places.is_empty() {
                return Err(Error::Schema("a global field lists at least one place".into()));
            }
            let labels: BTreeSet<&str> = places.iter().map(|p| p.label.as_str()).collect();
            if labels.len() != places.len() {
                return Err(Error::Schema("place labels must be distinct".into()));
            }
        }
        Ok(())
    }

    pub fn places(&self) -> Vec<&Place> {
        match self {
            FieldSpec::Local { place } => vec![place],
            FieldSpec::Global { places } => places.iter().collect(),
        }
    }

    pub fn place(&self, label: &str) -> Option<&Place> {
        self.places().into_iter().find(|p| p.label == label)
    }

    pub fn is_local(&self) -> bool {
        matches!(self, FieldSpec::Local { .. })
    }
}

/// An element of ℚ/ℤ, stored as a reduced fraction in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct LocalInvariant(Q);

impl LocalInvariant {
    pub fn new(x: Q) -> Self {
        let fl = x.floor();
        LocalInvariant(x - fl)
    }

    pub fn from_ratio(r: i64, s: i64) -> Self {
        LocalInvariant::new(crate::ratio::q(r, s))
    }

    pub fn zero() -> Self {
        LocalInvariant(Q::zero())
    }

    pub fn value(&self) -> &Q {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The local index: the denominator of the invariant.
    pub fn index(&self) -> u32 {
        self.0
            .denom()
            .to_u32()
            .expect("local index fits in u32")
    }

    /// Invariant of `D ⊗ E` for an extension of degree `g`.
    pub fn restrict(&self, g: u32) -> LocalInvariant {
        LocalInvariant::new(&self.0 * Q::from_integer(BigInt::from(g)))
    }
}

impl TryFrom<String> for LocalInvariant {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        Ok(LocalInvariant::new(parse_q(&s)?))
    }
}

impl From<LocalInvariant> for String {
    fn from(v: LocalInvariant) -> String {
        fmt_q(&v.0)
    }
}

pub fn restrict_invariant(inv: &LocalInvariant, g: u32) -> LocalInvariant {
    inv.restrict(g)
}

/// Index of `D ⊗ F_p` over `F_p` for a local base: `d / gcd(d, g)`.
pub fn local_delta(d: u32, g: u32) -> u32 {
    d / d.gcd(&g)
}

/// Capacity of `D ⊗ F_p` for a local base: `gcd(d, g)`.
pub fn capacity(d: u32, g: u32) -> u32 {
    d.gcd(&g)
}

/// A Brauer class over a local or global field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrauerClass {
    field: FieldSpec,
    invariants: BTreeMap<String, LocalInvariant>,
}

impl BrauerClass {
    /// Validates archimedean constraints, that every invariant sits at a
    /// listed place and, for global fields, the reciprocity sum.
    pub fn new(field: FieldSpec, invariants: BTreeMap<String, LocalInvariant>) -> Result<Self> {
        field.validate()?;
        let mut total = Q::zero();
        for (label, inv) in &invariants {
            let place = field
                .place(label)
                .ok_or_else(|| Error::InvalidClass(format!("invariant at unlisted place `{label}`")))?;
            match place.kind {
                PlaceKind::Real if !(inv.is_zero() || inv.index() == 2) => {
                    return Err(Error::InvalidClass(format!(
                        "real place `{label}` admits only 0 or 1/2"
                    )))
                }
                PlaceKind::Complex if !inv.is_zero() => {
                    return Err(Error::InvalidClass(format!(
                        "complex place `{label}` admits only 0"
                    )))
                }
                _ => {}
            }
            total += inv.value();
        }
        if !field.is_local() && !total.is_integer() {
            return Err(Error::InvalidClass(format!(
                "local invariants sum to {} mod 1",
                fmt_q(&LocalInvariant::new(total).0)
            )));
        }
        let invariants = invariants.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(BrauerClass { field, invariants })
    }

    pub fn split(field: FieldSpec) -> Self {
        BrauerClass {
            field,
            invariants: BTreeMap::new(),
        }
    }

    /// Local division algebra with invariant `inv` at `place`.
    pub fn local(place: Place, inv: LocalInvariant) -> Result<Self> {
        let label = place.label.clone();
        BrauerClass::new(FieldSpec::local(place), BTreeMap::from([(label, inv)]))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Nonzero invariants only.
    pub fn invariants(&self) -> &BTreeMap<String, LocalInvariant> {
        &self.invariants
    }

    pub fn invariant_at(&self, label: &str) -> LocalInvariant {
        self.invariants
            .get(label)
            .cloned()
            .unwrap_or_else(LocalInvariant::zero)
    }

    /// The index `d`: lcm of the local indices.
    pub fn index(&self) -> u32 {
        self.invariants
            .values()
            .fold(1u32, |acc, inv| acc.lcm(&inv.index()))
    }

    pub fn is_split(&self) -> bool {
        self.invariants.is_empty()
    }

    /// `δ_p = deg_{F_p}(D_p)`, the index of `D ⊗ F_p`.
    ///
    /// Local base: `d / gcd(d, deg p)`. Global base: lcm over every place `w`
    /// of `F_p` of the local index of `D ⊗ F_{p,w}`.
    pub fn delta(&self, p: &IrreducibleSpec) -> Result<u32> {
        match &self.field {
            FieldSpec::Local { .. } => Ok(local_delta(self.index(), p.degree)),
            FieldSpec::Global { .. } => global_delta(self, p),
        }
    }

    /// Local indices of `D ⊗ F_{p,w}` for the places `w | v` of `F_p`.
    ///
    /// A place with zero invariant and no splitting data yields `[1]`.
    pub fn local_factor_indices(&self, p: &IrreducibleSpec, place: &str) -> Result<Vec<u32>> {
        let inv = self.invariant_at(place);
        let place_kind = self
            .field
            .place(place)
            .map(|pl| pl.kind.clone())
            .ok_or_else(|| Error::Schema(format!("unknown place `{place}`")))?;
        match p.splitting.get(place) {
            Some(degrees) => {
                p.check_place(place, &place_kind)?;
                Ok(degrees.iter().map(|&g| inv.restrict(g).index()).collect())
            }
            None if self.field.is_local() => Ok(vec![local_delta(inv.index(), p.degree)]),
            None if inv.is_zero() => Ok(vec![1]),
            None => Err(Error::MissingSplittingData {
                poly: p.label.clone(),
                place: place.to_string(),
            }),
        }
    }
}

/// `δ_p` over a global field from the splitting data of `p`.
pub fn global_delta(b: &BrauerClass, p: &IrreducibleSpec) -> Result<u32> {
    let mut acc = 1u32;
    for label in b.invariants.keys() {
        for idx in b.local_factor_indices(p, label)? {
            acc = acc.lcm(&idx);
        }
    }
    Ok(acc)
}

/// A monic irreducible polynomial known only through its degree and the
/// local degrees of `F[T]/(p)` at the places of the base field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibleSpec {
    pub label: String,
    pub degree: u32,
    #[serde(default)]
    pub splitting: BTreeMap<String, Vec<u32>>,
    /// `c_0, …, c_{g-1}` of `T^g + c_{g-1} T^{g-1} + … + c_0`.
    #[serde(
        default,
        rename = "coeffs",
        skip_serializing_if = "Option::is_none",
        with = "coeffs_serde"
    )]
    pub coefficients: Option<Vec<Q>>,
}

mod coeffs_serde {
    use super::Q;
    use crate::ratio::{fmt_q, parse_q};
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &Option<Vec<Q>>, s: S) -> Result<S::Ok, S::Error> {
        let v: Option<Vec<String>> = c.as_ref().map(|c| c.iter().map(fmt_q).collect());
        serde::Serialize::serialize(&v, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Q>>, D::Error> {
        let v: Option<Vec<String>> = Option::deserialize(d)?;
        v.map(|v| v.iter().map(|s| parse_q(s).map_err(de::Error::custom)).collect())
            .transpose()
    }
}

impl IrreducibleSpec {
    pub fn new(label: impl Into<String>, degree: u32) -> Self {
        IrreducibleSpec {
            label: label.into(),
            degree,
            splitting: BTreeMap::new(),
            coefficients: None,
        }
    }

    pub fn with_splitting(mut self, place: impl Into<String>, degrees: Vec<u32>) -> Self {
        self.splitting.insert(place.into(), degrees);
        self
    }

    /// Non-leading coefficients, constant term first. A trailing leading 1
    /// may be included.
    pub fn with_coefficients(mut self, coeffs: Vec<Q>) -> Self {
        self.coefficients = Some(coeffs);
        self
    }

    /// `T − a`.
    pub fn linear(label: impl Into<String>, a: i64) -> Self {
        IrreducibleSpec::new(label, 1).with_coefficients(vec![crate::ratio::qi(-a)])
    }

    /// Checks degree bookkeeping and normalizes the coefficient vector.
    pub fn validate(mut self) -> Result<Self> {
        if self.degree == 0 {
            return Err(Error::Schema(format!("`{}` has degree 0", self.label)));
        }
        for (place, degrees) in &self.splitting {
            if degrees.contains(&0) || degrees.iter().sum::<u32>() != self.degree {
                return Err(Error::Schema(format!(
                    "local degrees of `{}` at `{place}` must be positive and sum to {}",
                    self.label, self.degree
                )));
            }
        }
        if let Some(c) = &mut self.coefficients {
            let g = self.degree as usize;
            if c.len() == g + 1 && c[g].is_one() {
                c.pop();
            }
            if c.len() != g {
                return Err(Error::Schema(format!(
                    "`{}` needs {g} coefficients (constant term first)",
                    self.label
                )));
            }
        }
        Ok(self)
    }

    fn check_place(&self, place: &str, kind: &PlaceKind) -> Result<()> {
        let degrees = &self.splitting[place];
        let ok = match kind {
            PlaceKind::Complex => degrees.iter().all(|&g| g == 1),
            PlaceKind::Real => degrees.iter().all(|&g| g <= 2),
            PlaceKind::Finite { .. } => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Schema(format!(
                "local degrees {degrees:?} of `{}` impossible at archimedean place `{place}`",
                self.label
            )))
        }
    }
}

/// Append-only store of irreducibles; identity is the label.
#[derive(Debug, Clone, Default)]
pub struct Registry {
    polys: BTreeMap<String, IrreducibleSpec>,
}

impl Registry {
    pub fn new() -> Self {
        Registry::default()
    }

    pub fn from_specs(specs: impl IntoIterator<Item = IrreducibleSpec>) -> Result<Self> {
        let mut r = Registry::new();
        for s in specs {
            r.register(s)?;
        }
        Ok(r)
    }

    pub fn register(&mut self, spec: IrreducibleSpec) -> Result<()> {
        let spec = spec.validate()?;
        if self.polys.contains_key(&spec.label) {
            return Err(Error::Schema(format!("irreducible `{}` registered twice", spec.label)));
        }
        self.polys.insert(spec.label.clone(), spec);
        Ok(())
    }

    pub fn get(&self, label: &str) -> Result<&IrreducibleSpec> {
        self.polys
            .get(label)
            .ok_or_else(|| Error::UnknownIrreducible(label.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &IrreducibleSpec> {
        self.polys.values()
    }

    pub fn specs(&self) -> Vec<IrreducibleSpec> {
        self.polys.values().cloned().collect()
    }
}

/// The central simple algebra `Mat_m(D)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsaAlgebra {
    pub m: u32,
    pub brauer: BrauerClass,
}

impl CsaAlgebra {
    pub fn new(m: u32, brauer: BrauerClass) -> Result<Self> {
        if m == 0 {
            return Err(Error::Schema("capacity m must be positive".into()));
        }
        Ok(CsaAlgebra { m, brauer })
    }

    /// `Mat_n(ℚ)`.
    pub fn split_rational(n: u32) -> Self {
        CsaAlgebra {
            m: n,
            brauer: BrauerClass::split(FieldSpec::rationals()),
        }
    }

    pub fn index(&self) -> u32 {
        self.brauer.index()
    }

    /// `deg_F(A) = m·d`.
    pub fn degree(&self) -> u32 {
        self.m * self.index()
    }

    pub fn is_split(&self) -> bool {
        self.brauer.is_split()
    }

    pub fn field(&self) -> &FieldSpec {
        self.brauer.field()
    }

    pub fn delta(&self, p: &IrreducibleSpec) -> Result<u32> {
        self.brauer.delta(p)
    }

    /// The quasi-split inner form `Mat_{md}(F)` over the same field.
    pub fn quasi_split(&self) -> CsaAlgebra {
        CsaAlgebra {
            m: self.degree(),
            brauer: BrauerClass::split(self.field().clone()),
        }
    }

    /// `Mat_k(D)` with the same division algebra.
    pub fn with_capacity(&self, k: u32) -> CsaAlgebra {
        CsaAlgebra {
            m: k,
            brauer: self.brauer.clone(),
        }
    }

    pub fn same_division_algebra(&self, other: &CsaAlgebra) -> bool {
        self.brauer == other.brauer
    }
}

/// JSON shape `{"m": .., "field": {..}, "invariants": {"v": "r/s"}}`.
#[derive(Serialize, Deserialize)]
pub struct CsaRepr {
    pub m: u32,
    pub field: FieldSpec,
    #[serde(default)]
    pub invariants: BTreeMap<String, LocalInvariant>,
}

impl CsaRepr {
    /// Validates into an algebra, keeping domain error codes intact.
    pub fn build(self) -> Result<CsaAlgebra> {
        CsaAlgebra::new(self.m, BrauerClass::new(self.field, self.invariants)?)
    }
}

impl Serialize for CsaAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CsaRepr {
            m: self.m,
            field: self.brauer.field.clone(),
            invariants: self.brauer.invariants.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CsaAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        CsaRepr::deserialize(d)?.build().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_example_class() -> BrauerClass {
        let field = FieldSpec::global(vec![Place::finite("3", 3).unwrap(), Place::real("inf")]).unwrap();
        BrauerClass::new(
            field,
            BTreeMap::from([
                ("3".to_string(), LocalInvariant::from_ratio(1, 2)),
                ("inf".to_string(), LocalInvariant::from_ratio(1, 2)),
            ]),
        )
        .unwrap()
    }

    #[test]
    fn index_examples() {
        assert_eq!(BrauerClass::split(FieldSpec::rationals()).index(), 1);
        assert_eq!(worked_example_class().index(), 2);
        let field =
            FieldSpec::global(vec![Place::finite("2", 2).unwrap(), Place::finite("5", 5).unwrap()]).unwrap();
        let b = BrauerClass::new(
            field,
            BTreeMap::from([
                ("2".to_string(), LocalInvariant::from_ratio(1, 3)),
                ("5".to_string(), LocalInvariant::from_ratio(2, 3)),
            ]),
        )
        .unwrap();
        assert_eq!(b.index(), 3);
    }

    #[test]
    fn invalid_classes() {
        let field = FieldSpec::global(vec![Place::finite("3", 3).unwrap(), Place::real("inf")]).unwrap();
        let odd_sum = BrauerClass::new(
            field.clone(),
            BTreeMap::from([("3".to_string(), LocalInvariant::from_ratio(1, 2))]),
        );
        assert_eq!(odd_sum.unwrap_err().code(), "invalid-class");
        let bad_real = BrauerClass::new(
            field,
            BTreeMap::from([
                ("3".to_string(), LocalInvariant::from_ratio(2, 3)),
                ("inf".to_string(), LocalInvariant::from_ratio(1, 3)),
            ]),
        );
        assert_eq!(bad_real.unwrap_err().code(), "invalid-class");
        let cx = FieldSpec::local(Place::complex("C"));
        assert!(BrauerClass::new(
            cx,
            BTreeMap::from([("C".to_string(), LocalInvariant::from_ratio(1, 2))])
        )
        .is_err());
    }

    #[test]
    fn restriction_examples() {
        let half = LocalInvariant::from_ratio(1, 2);
        assert!(half.restrict(2).is_zero());
        assert_eq!(half.restrict(1), half);
        assert_eq!(LocalInvariant::from_ratio(1, 3).restrict(2), LocalInvariant::from_ratio(2, 3));
        assert_eq!(LocalInvariant::from_ratio(7, 4), LocalInvariant::from_ratio(3, 4));
    }

    #[test]
    fn local_delta_and_capacity() {
        assert_eq!(local_delta(1, 7), 1);
        assert_eq!(local_delta(2, 2), 1);
        assert_eq!(local_delta(4, 6), 2);
        assert_eq!(capacity(2, 2), 2);
        assert_eq!(capacity(1, 5), 1);
        assert_eq!(capacity(6, 4), 2);
    }

    #[test]
    fn global_delta_examples() {
        let b = worked_example_class();
        let p = IrreducibleSpec::new("T^2-2", 2)
            .with_splitting("3", vec![2])
            .with_splitting("inf", vec![1, 1])
            .validate()
            .unwrap();
        assert_eq!(global_delta(&b, &p).unwrap(), 2);

        let split = BrauerClass::split(FieldSpec::rationals());
        assert_eq!(global_delta(&split, &p).unwrap(), 1);

        let field =
            FieldSpec::global(vec![Place::finite("3", 3).unwrap(), Place::finite("5", 5).unwrap()]).unwrap();
        let b2 = BrauerClass::new(
            field,
            BTreeMap::from([
                ("3".to_string(), LocalInvariant::from_ratio(1, 2)),
                ("5".to_string(), LocalInvariant::from_ratio(1, 2)),
            ]),
        )
        .unwrap();
        let q = IrreducibleSpec::new("q", 2)
            .with_splitting("3", vec![2])
            .with_splitting("5", vec![2])
            .validate()
            .unwrap();
        assert_eq!(global_delta(&b2, &q).unwrap(), 1);
    }

    #[test]
    fn missing_splitting_data() {
        let b = worked_example_class();
        let p = IrreducibleSpec::new("T^2-2", 2).with_splitting("3", vec![2]);
        let err = global_delta(&b, &p).unwrap_err();
        assert_eq!(err.code(), "missing-splitting-data");
    }

    #[test]
    fn archimedean_splitting_constraints() {
        let b = worked_example_class();
        let p = IrreducibleSpec::new("c", 3)
            .with_splitting("3", vec![3])
            .with_splitting("inf", vec![3]);
        assert_eq!(global_delta(&b, &p).unwrap_err().code(), "schema-error");
    }

    #[test]
    fn prime_powers() {
        assert!(is_prime_power(2));
        assert!(is_prime_power(9));
        assert!(is_prime_power(125));
        assert!(!is_prime_power(6));
        assert!(!is_prime_power(1));
        assert!(Place::finite("x", 12).is_err());
    }

    #[test]
    fn algebra_json_shape() {
        let json = r#"{"m": 2, "field": {"kind": "local", "place": {"label": "v", "kind": "finite", "q": 5}},
                       "invariants": {"v": "3/4"}}"#;
        let a: CsaAlgebra = serde_json::from_str(json).unwrap();
        assert_eq!(a.index(), 4);
        assert_eq!(a.degree(), 8);
        let back = serde_json::to_value(&a).unwrap();
        assert_eq!(back["invariants"]["v"], "3/4");
        assert_eq!(back["field"]["place"]["disc_exp"], "0/1");
    }
}
