//! Haar-measure constants for `G = GL_m(D)` and the Euclidean geometry of
//! `a_M = ℝ^l` for a block Levi `M`.
//!
//! π and `N(Δ₁)` are never evaluated: a constant is a rational times
//! `π^{k/2}` (archimedean) or times `N(Δ₁)^{k/4}` (non-archimedean).

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ratio::{factorial, fmt_q, pow_q, q, qi, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldCase {
    #[serde(rename = "real-split")]
    RealSplit,
    #[serde(rename = "real-quaternion")]
    RealQuaternion,
    #[serde(rename = "complex")]
    Complex,
    #[serde(rename = "nonarch")]
    NonArch,
}

impl FieldCase {
    pub const ALL: [FieldCase; 4] = [
        FieldCase::RealSplit,
        FieldCase::RealQuaternion,
        FieldCase::Complex,
        FieldCase::NonArch,
    ];

    pub fn is_archimedean(self) -> bool {
        self != FieldCase::NonArch
    }
}

/// Residue cardinality `q` and index `d`, needed in the non-archimedean case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalParams {
    pub q: u64,
    pub d: u32,
}

/// An exact measure constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GammaConstant {
    /// `coeff · π^{pi_half_exp/2}`.
    Archimedean { coeff: Q, pi_half_exp: i64 },
    /// `value · N(Δ₁)^{disc_quarter_exp/4}`.
    NonArchimedean { value: Q, disc_quarter_exp: i64 },
}

impl GammaConstant {
    pub fn one(case: FieldCase) -> Self {
        if case.is_archimedean() {
            GammaConstant::Archimedean {
                coeff: Q::one(),
                pi_half_exp: 0,
            }
        } else {
            GammaConstant::NonArchimedean {
                value: Q::one(),
                disc_quarter_exp: 0,
            }
        }
    }

    pub fn recip(&self) -> Self {
        match self {
            GammaConstant::Archimedean { coeff, pi_half_exp } => GammaConstant::Archimedean {
                coeff: coeff.recip(),
                pi_half_exp: -pi_half_exp,
            },
            GammaConstant::NonArchimedean {
                value,
                disc_quarter_exp,
            } => GammaConstant::NonArchimedean {
                value: value.recip(),
                disc_quarter_exp: -disc_quarter_exp,
            },
        }
    }

    /// The rational part (`coeff` or `value`).
    pub fn rational(&self) -> &Q {
        match self {
            GammaConstant::Archimedean { coeff, .. } => coeff,
            GammaConstant::NonArchimedean { value, .. } => value,
        }
    }

    /// Exponent of the formal symbol (`π^{1/2}` or `N(Δ₁)^{1/4}`).
    pub fn symbol_exp(&self) -> i64 {
        match self {
            GammaConstant::Archimedean { pi_half_exp, .. } => *pi_half_exp,
            GammaConstant::NonArchimedean {
                disc_quarter_exp, ..
            } => *disc_quarter_exp,
        }
    }
}

impl Mul for &GammaConstant {
    type Output = GammaConstant;

    fn mul(self, rhs: &GammaConstant) -> GammaConstant {
        match (self, rhs) {
            (
                GammaConstant::Archimedean { coeff: a, pi_half_exp: x },
                GammaConstant::Archimedean { coeff: b, pi_half_exp: y },
            ) => GammaConstant::Archimedean {
                coeff: a * b,
                pi_half_exp: x + y,
            },
            (
                GammaConstant::NonArchimedean { value: a, disc_quarter_exp: x },
                GammaConstant::NonArchimedean { value: b, disc_quarter_exp: y },
            ) => GammaConstant::NonArchimedean {
                value: a * b,
                disc_quarter_exp: x + y,
            },
            _ => panic!("cannot multiply archimedean and non-archimedean constants"),
        }
    }
}

impl Serialize for GammaConstant {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(2))?;
        match self {
            GammaConstant::Archimedean { coeff, pi_half_exp } => {
                m.serialize_entry("coeff", &fmt_q(coeff))?;
                m.serialize_entry("pi_half_exp", pi_half_exp)?;
            }
            GammaConstant::NonArchimedean {
                value,
                disc_quarter_exp,
            } => {
                m.serialize_entry("value", &fmt_q(value))?;
                m.serialize_entry("disc_quarter_exp", disc_quarter_exp)?;
            }
        }
        m.end()
    }
}

impl fmt::Display for GammaConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaConstant::Archimedean { coeff, pi_half_exp } => {
                write!(f, "{} * pi^({}/2)", fmt_q(coeff), pi_half_exp)
            }
            GammaConstant::NonArchimedean {
                value,
                disc_quarter_exp,
            } => write!(f, "{} * N^({}/4)", fmt_q(value), disc_quarter_exp),
        }
    }
}

pub fn validate_composition(comp: &[u32]) -> Result<()> {
    if comp.is_empty() || comp.contains(&0) {
        return Err(Error::InvalidComposition(format!("{comp:?}")));
    }
    Ok(())
}

/// `m² − Σ m_i²`, twice the number of positive roots counted with `m_i m_j`.
fn excess(comp: &[u32]) -> i64 {
    let m: i64 = comp.iter().map(|&x| i64::from(x)).sum();
    m * m - comp.iter().map(|&x| i64::from(x) * i64::from(x)).sum::<i64>()
}

/// `Γ(n/2)` for `n ≥ 1` as `(rational, number of √π factors)`.
fn gamma_half(n: u64) -> (Q, i64) {
    if n % 2 == 0 {
        (Q::from_integer(factorial(n / 2 - 1)), 0)
    } else {
        let k = (n - 1) / 2;
        let num = factorial(2 * k);
        let den = BigInt::from(4u32).pow(k as u32) * factorial(k);
        (Q::new(num, den), 1)
    }
}

/// `Π_{i=1}^{k} Γ(·)` with the case's Gamma argument.
fn gamma_product(case: FieldCase, k: u32) -> (Q, i64) {
    let mut acc = Q::one();
    let mut halves = 0;
    for i in 1..=u64::from(k) {
        let (r, h) = match case {
            FieldCase::RealSplit => gamma_half(i),
            FieldCase::RealQuaternion => (Q::from_integer(factorial(2 * i - 1)), 0),
            FieldCase::Complex => (Q::from_integer(factorial(i - 1)), 0),
            FieldCase::NonArch => unreachable!(),
        };
        acc *= r;
        halves += h;
    }
    (acc, halves)
}

/// `Π_{i=1}^{k} (1 − q^{−id})`.
pub fn local_factor_product(params: LocalParams, k: u32) -> Q {
    let qq = qi(params.q as i64);
    (1..=i64::from(k)).fold(Q::one(), |acc, i| {
        acc * (Q::one() - pow_q(&qq, -i * i64::from(params.d)))
    })
}

/// `γ(P)` for the standard parabolic with blocks `comp`.
pub fn gamma(case: FieldCase, comp: &[u32], params: Option<LocalParams>) -> Result<GammaConstant> {
    validate_composition(comp)?;
    let m: u32 = comp.iter().sum();
    let e = excess(comp);
    if case == FieldCase::NonArch {
        let params = params.ok_or_else(|| Error::Schema("non-archimedean case needs q and d".into()))?;
        let mut value = local_factor_product(params, m).recip();
        for &mi in comp {
            value *= local_factor_product(params, mi);
        }
        return Ok(GammaConstant::NonArchimedean {
            value,
            disc_quarter_exp: e,
        });
    }
    let (den, den_halves) = gamma_product(case, m);
    let mut coeff = den.recip();
    let mut pi_half_exp = -den_halves;
    for &mi in comp {
        let (r, h) = gamma_product(case, mi);
        coeff *= r;
        pi_half_exp += h;
    }
    match case {
        // π^{e/4}
        FieldCase::RealSplit => pi_half_exp += e / 2,
        // π^{e}
        FieldCase::RealQuaternion => pi_half_exp += 2 * e,
        // (2π)^{e/2}
        FieldCase::Complex => {
            coeff *= pow_q(&qi(2), e / 2);
            pi_half_exp += e;
        }
        FieldCase::NonArch => unreachable!(),
    }
    Ok(GammaConstant::Archimedean { coeff, pi_half_exp })
}

/// Compares `γ(refined)` with `γ(outer) · Π_j γ_{GL_{outer_j}}(inner_j)`.
pub fn gamma_transitive_check(
    case: FieldCase,
    outer: &[u32],
    inner: &[Vec<u32>],
    params: Option<LocalParams>,
) -> Result<bool> {
    validate_composition(outer)?;
    if inner.len() != outer.len() {
        return Err(Error::InvalidComposition("refinement has the wrong number of blocks".into()));
    }
    let mut product = gamma(case, outer, params)?;
    let mut refined = Vec::new();
    for (o, i) in outer.iter().zip(inner) {
        validate_composition(i)?;
        if i.iter().sum::<u32>() != *o {
            return Err(Error::InvalidComposition(format!("{i:?} does not refine {o}")));
        }
        product = &product * &gamma(case, i, params)?;
        refined.extend_from_slice(i);
    }
    Ok(gamma(case, &refined, params)? == product)
}

/// `vol(K; GL_m(D)) = N(Δ₁)^{−m²/2} Π_{i=1}^{m} (1 − q^{−id})`.
pub fn vol_k(params: LocalParams, m: u32) -> GammaConstant {
    GammaConstant::NonArchimedean {
        value: local_factor_product(params, m),
        disc_quarter_exp: -2 * i64::from(m) * i64::from(m),
    }
}

/// The self-dual Haar measure on `gl_m(D)` relative to the standard one:
/// Lebesgue for `F = ℝ`, `2^{m²}` Lebesgue for `F = ℂ`, and
/// `vol(g(O_F)) = N(Δ₁)^{−m²/2}` in the non-archimedean case.
pub fn selfdual_constant(case: FieldCase, m: u32) -> GammaConstant {
    let m2 = i64::from(m) * i64::from(m);
    match case {
        FieldCase::RealSplit | FieldCase::RealQuaternion => GammaConstant::one(case),
        FieldCase::Complex => GammaConstant::Archimedean {
            coeff: pow_q(&qi(2), m2),
            pi_half_exp: 0,
        },
        FieldCase::NonArch => GammaConstant::NonArchimedean {
            value: Q::one(),
            disc_quarter_exp: -2 * m2,
        },
    }
}

/// `md`, the exponent in `dx = dX / |ν(x)|^{md}`.
pub fn modulus_exponent(m: u32, d: u32) -> u32 {
    m * d
}

fn check_len(comp: &[u32], v: &[Q]) -> Result<()> {
    validate_composition(comp)?;
    if comp.len() != v.len() {
        return Err(Error::InvalidComposition(format!(
            "vector of length {} for {} blocks",
            v.len(),
            comp.len()
        )));
    }
    Ok(())
}

fn check_total(comp: &[u32], x: &[Q]) -> Result<()> {
    validate_composition(comp)?;
    if comp.iter().sum::<u32>() as usize != x.len() {
        return Err(Error::InvalidComposition(format!(
            "vector of length {} for blocks summing to {}",
            x.len(),
            comp.iter().sum::<u32>()
        )));
    }
    Ok(())
}

/// `ι*: a_M* → a_0*`, each `t_i` repeated `m_i` times.
pub fn iota_star(comp: &[u32], t: &[Q]) -> Result<Vec<Q>> {
    check_len(comp, t)?;
    Ok(comp
        .iter()
        .zip(t)
        .flat_map(|(&mi, ti)| std::iter::repeat(ti.clone()).take(mi as usize))
        .collect())
}

/// `ι: a_0 → a_M`, block sums.
pub fn iota(comp: &[u32], x: &[Q]) -> Result<Vec<Q>> {
    check_total(comp, x)?;
    let mut out = Vec::with_capacity(comp.len());
    let mut at = 0;
    for &mi in comp {
        out.push(x[at..at + mi as usize].iter().sum());
        at += mi as usize;
    }
    Ok(out)
}

/// `φ: a_M → a_0`, `t_i/m_i` repeated `m_i` times.
pub fn phi(comp: &[u32], t: &[Q]) -> Result<Vec<Q>> {
    check_len(comp, t)?;
    Ok(comp
        .iter()
        .zip(t)
        .flat_map(|(&mi, ti)| std::iter::repeat(ti / qi(i64::from(mi))).take(mi as usize))
        .collect())
}

/// `φ*: a_0* → a_M*`, block averages.
pub fn phi_star(comp: &[u32], x: &[Q]) -> Result<Vec<Q>> {
    let sums = iota(comp, x)?;
    Ok(sums
        .into_iter()
        .zip(comp)
        .map(|(s, &mi)| s / qi(i64::from(mi)))
        .collect())
}

pub fn pairing(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The coroot of `γ = e_i − e_j` in `a_M`: coordinates `2 m_k t_k / Σ m_l t_l²`.
pub fn coroot(comp: &[u32], root: &[Q]) -> Result<Vec<Q>> {
    check_len(comp, root)?;
    let nonzero: Vec<&Q> = root.iter().filter(|t| !t.is_zero()).collect();
    let is_root = nonzero.len() == 2
        && nonzero.iter().any(|t| **t == qi(1))
        && nonzero.iter().any(|t| **t == qi(-1));
    if !is_root {
        return Err(Error::NotARoot(
            root.iter().map(fmt_q).collect::<Vec<_>>().join(", "),
        ));
    }
    let norm: Q = comp
        .iter()
        .zip(root)
        .map(|(&mi, t)| qi(i64::from(mi)) * t * t)
        .sum();
    Ok(comp
        .iter()
        .zip(root)
        .map(|(&mi, t)| qi(2 * i64::from(mi)) * t / &norm)
        .collect())
}

/// `coeff · √radicand · π^{pi_exp}` with `radicand` squarefree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    pub coeff: Q,
    pub radicand: u64,
    pub pi_exp: i64,
}

impl Serialize for Surd {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("coeff", &fmt_q(&self.coeff))?;
        m.serialize_entry("radicand", &self.radicand)?;
        m.serialize_entry("pi_exp", &self.pi_exp)?;
        m.end()
    }
}

/// `n = s²·r` with `r` squarefree.
fn split_square(mut n: u64) -> (u64, u64) {
    let mut s = 1;
    let mut r = 1;
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            r *= p;
        }
        p += 1;
    }
    (s, r * n)
}

/// `vol([0,1]^l; a_M) = Π m_i^{−1/2}` as a normalized surd.
pub fn unit_cube_volume(comp: &[u32]) -> Result<Surd> {
    validate_composition(comp)?;
    let prod: u64 = comp.iter().map(|&x| u64::from(x)).product();
    let (s, r) = split_square(prod);
    // 1/√(s²r) = √r / (s r)
    Ok(Surd {
        coeff: q(1, (s * r) as i64),
        radicand: r,
        pi_exp: 0,
    })
}

/// Volume of the dual unit cube in `a_M*`: `(2π)^{−l} Π m_i^{1/2}`.
pub fn dual_unit_cube_volume(comp: &[u32]) -> Result<Surd> {
    validate_composition(comp)?;
    let l = comp.len() as i64;
    let prod: u64 = comp.iter().map(|&x| u64::from(x)).product();
    let (s, r) = split_square(prod);
    Ok(Surd {
        coeff: qi(s as i64) * pow_q(&qi(2), -l),
        radicand: r,
        pi_exp: -l,
    })
}

/// `ρ_P = ½ Σ_{i<j} m_i m_j d² (e_i − e_j)` in `a_M*`.
pub fn rho_p(comp: &[u32], d: u32) -> Result<Vec<Q>> {
    validate_composition(comp)?;
    let d2 = qi(i64::from(d) * i64::from(d));
    let l = comp.len();
    let mut out = vec![Q::zero(); l];
    for i in 0..l {
        for j in i + 1..l {
            let w = &d2 * qi(i64::from(comp[i]) * i64::from(comp[j])) / qi(2);
            out[i] += &w;
            out[j] -= &w;
        }
    }
    Ok(out)
}
