//! Arthur's cone functions on `a_0 = ℝ^m` for standard parabolics of
//! `GL_m`: the acute and obtuse chamber indicators `τ`, `τ̂`, the
//! alternating sum `σ`, and the truncation functions `Γ_P^G(X, Y)`.

use std::collections::BTreeSet;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measures::{phi_star, validate_composition};
use crate::ratio::{fmt_q, q, qi, Q};

/// The block-upper-triangular parabolic of a composition of `m`, stored by
/// its cut points in `{1, …, m−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StdParabolic {
    m: u32,
    cuts: BTreeSet<u32>,
}

impl StdParabolic {
    pub fn from_composition(blocks: &[u32]) -> Result<Self> {
        validate_composition(blocks)?;
        let m = blocks.iter().sum();
        let mut cuts = BTreeSet::new();
        let mut at = 0;
        for &b in &blocks[..blocks.len() - 1] {
            at += b;
            cuts.insert(at);
        }
        Ok(StdParabolic { m, cuts })
    }

    pub fn from_cuts(m: u32, cuts: impl IntoIterator<Item = u32>) -> Result<Self> {
        let cuts: BTreeSet<u32> = cuts.into_iter().collect();
        if m == 0 || cuts.iter().any(|&c| c == 0 || c >= m) {
            return Err(Error::InvalidComposition(format!("cuts {cuts:?} for m = {m}")));
        }
        Ok(StdParabolic { m, cuts })
    }

    pub fn minimal(m: u32) -> Self {
        StdParabolic {
            m,
            cuts: (1..m).collect(),
        }
    }

    pub fn full(m: u32) -> Self {
        StdParabolic {
            m,
            cuts: BTreeSet::new(),
        }
    }

    pub fn rank(&self) -> u32 {
        self.m
    }

    pub fn cuts(&self) -> &BTreeSet<u32> {
        &self.cuts
    }

    pub fn composition(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut prev = 0;
        for &c in self.cuts.iter().chain(std::iter::once(&self.m)) {
            out.push(c - prev);
            prev = c;
        }
        out
    }

    /// Number of blocks, `dim a_P`.
    pub fn blocks(&self) -> usize {
        self.cuts.len() + 1
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &StdParabolic) -> bool {
        self.m == other.m && other.cuts.is_subset(&self.cuts)
    }

    /// All standard parabolics of `GL_m`.
    pub fn all(m: u32) -> Vec<StdParabolic> {
        let inner: Vec<u32> = (1..m).collect();
        (0u32..1 << inner.len())
            .map(|mask| StdParabolic {
                m,
                cuts: inner
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &c)| c)
                    .collect(),
            })
            .collect()
    }

    /// All `P` with `lower ⊆ P ⊆ upper`.
    pub fn between(lower: &StdParabolic, upper: &StdParabolic) -> Result<Vec<StdParabolic>> {
        check_nested(lower, upper)?;
        let free: Vec<u32> = lower.cuts.difference(&upper.cuts).copied().collect();
        Ok((0u32..1 << free.len())
            .map(|mask| {
                let mut cuts = upper.cuts.clone();
                cuts.extend(
                    free.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &c)| c),
                );
                StdParabolic { m: lower.m, cuts }
            })
            .collect())
    }

    /// Projection of `x` onto `a_P`, as a block-constant vector of `a_0`.
    pub fn project(&self, x: &[Q]) -> Result<Vec<Q>> {
        let comp = self.composition();
        let avgs = phi_star(&comp, x)?;
        Ok(comp
            .iter()
            .zip(avgs)
            .flat_map(|(&b, a)| std::iter::repeat(a).take(b as usize))
            .collect())
    }
}

impl TryFrom<Vec<u32>> for StdParabolic {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        StdParabolic::from_composition(&v)
    }
}

impl From<StdParabolic> for Vec<u32> {
    fn from(p: StdParabolic) -> Vec<u32> {
        p.composition()
    }
}

fn check_nested(p1: &StdParabolic, p2: &StdParabolic) -> Result<()> {
    if p1.is_contained_in(p2) {
        Ok(())
    } else {
        Err(Error::NotNested)
    }
}

fn check_point(p: &StdParabolic, x: &[Q]) -> Result<()> {
    if x.len() != p.m as usize {
        return Err(Error::InvalidComposition(format!(
            "point of length {} in rank {}",
            x.len(),
            p.m
        )));
    }
    Ok(())
}

fn avg(x: &[Q]) -> Q {
    x.iter().sum::<Q>() / qi(x.len() as i64)
}

/// The `P2`-block `[s, e)` containing the cut `c`.
fn enclosing(p2: &StdParabolic, c: u32) -> (usize, usize) {
    let s = p2.cuts.range(..c).next_back().copied().unwrap_or(0);
    let e = p2.cuts.range(c..).next().copied().unwrap_or(p2.m);
    (s as usize, e as usize)
}

/// Values of the simple roots `Δ_{P1}^{P2}` at `X`: differences of
/// averages of adjacent `P1`-blocks.
pub fn simple_root_values(p1: &StdParabolic, p2: &StdParabolic, x: &[Q]) -> Result<Vec<Q>> {
    check_nested(p1, p2)?;
    check_point(p1, x)?;
    let bounds: Vec<usize> = std::iter::once(0)
        .chain(p1.cuts.iter().map(|&c| c as usize))
        .chain(std::iter::once(p1.m as usize))
        .collect();
    let mut out = Vec::new();
    for (k, &c) in p1.cuts.iter().enumerate() {
        if p2.cuts.contains(&c) {
            continue;
        }
        let (a, mid, b) = (bounds[k], bounds[k + 1], bounds[k + 2]);
        debug_assert_eq!(mid, c as usize);
        out.push(avg(&x[a..mid]) - avg(&x[mid..b]));
    }
    Ok(out)
}

/// Values of the fundamental weights dual to `Δ_{P1}^{P2}` at `X`: for a cut
/// `c` in the `P2`-block `[s, e)`, `Σ_{s≤a<c} x_a − (c−s)/(e−s) Σ_{s≤a<e} x_a`.
pub fn weight_values(p1: &StdParabolic, p2: &StdParabolic, x: &[Q]) -> Result<Vec<Q>> {
    check_nested(p1, p2)?;
    check_point(p1, x)?;
    let mut out = Vec::new();
    for &c in p1.cuts.difference(&p2.cuts) {
        let (s, e) = enclosing(p2, c);
        let c = c as usize;
        let part: Q = x[s..c].iter().sum();
        let whole: Q = x[s..e].iter().sum();
        out.push(part - q((c - s) as i64, (e - s) as i64) * whole);
    }
    Ok(out)
}

fn indicator(vals: &[Q]) -> i64 {
    i64::from(vals.iter().all(|v| *v > Q::zero()))
}

/// `τ_{P1}^{P2}(X)`: acute chamber.
pub fn tau(p1: &StdParabolic, p2: &StdParabolic, x: &[Q]) -> Result<i64> {
    Ok(indicator(&simple_root_values(p1, p2, x)?))
}

/// `τ̂_{P1}^{P2}(X)`: obtuse chamber.
pub fn tau_hat(p1: &StdParabolic, p2: &StdParabolic, x: &[Q]) -> Result<i64> {
    Ok(indicator(&weight_values(p1, p2, x)?))
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `σ_{P1}^{P2}(X) = Σ_{P ⊇ P2} (−1)^{dim a_{P2}^P} τ_{P1}^P(X) τ̂_P^G(X)`.
pub fn sigma(p1: &StdParabolic, p2: &StdParabolic, x: &[Q]) -> Result<i64> {
    check_nested(p1, p2)?;
    let g = StdParabolic::full(p1.m);
    let mut total = 0;
    for p in StdParabolic::between(p2, &g)? {
        total += sign(p2.blocks() - p.blocks()) * tau(p1, &p, x)? * tau_hat(&p, &g, x)?;
    }
    Ok(total)
}

fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `Γ_P^G(X, Y) = Σ_{Q ⊇ P} (−1)^{dim a_Q^G} τ_P^Q(X) τ̂_Q^G(X − Y_Q)`.
pub fn gamma_trunc(p: &StdParabolic, x: &[Q], y: &[Q]) -> Result<i64> {
    check_point(p, x)?;
    check_point(p, y)?;
    let g = StdParabolic::full(p.m);
    let mut total = 0;
    for qq in StdParabolic::between(p, &g)? {
        let t = tau(p, &qq, x)?;
        if t == 0 {
            continue;
        }
        let shifted = sub(x, &qq.project(y)?);
        total += sign(qq.blocks() - 1) * tau_hat(&qq, &g, &shifted)?;
    }
    Ok(total)
}

/// Both sides of
/// `τ̂_P^G(X − Y_P) = Σ_{Q ⊇ P} (−1)^{dim a_Q^G} τ̂_P^Q(X) Γ_Q^G(X, Y_Q)`.
pub fn inversion_sides(p: &StdParabolic, x: &[Q], y: &[Q]) -> Result<(i64, i64)> {
    let g = StdParabolic::full(p.m);
    let lhs = tau_hat(p, &g, &sub(x, &p.project(y)?))?;
    let mut rhs = 0;
    for qq in StdParabolic::between(p, &g)? {
        let t = tau_hat(p, &qq, x)?;
        if t == 0 {
            continue;
        }
        rhs += sign(qq.blocks() - 1) * t * gamma_trunc(&qq, x, &qq.project(y)?)?;
    }
    Ok((lhs, rhs))
}

pub fn inversion_check(p: &StdParabolic, x: &[Q], y: &[Q]) -> Result<bool> {
    let (l, r) = inversion_sides(p, x, y)?;
    Ok(l == r)
}

/// `Σ_{P1 ⊆ P ⊆ P2} (−1)^{dim a_P^{P2}} τ_{P1}^P(X) τ̂_P^{P2}(X)`, which
/// equals `[P1 = P2]` away from the walls.
pub fn langlands_sum(p1: &StdParabolic, p2: &StdParabolic, x: &[Q]) -> Result<i64> {
    let mut total = 0;
    for p in StdParabolic::between(p1, p2)? {
        total += sign(p.blocks() - p2.blocks()) * tau(p1, &p, x)? * tau_hat(&p, p2, x)?;
    }
    Ok(total)
}

/// True when no average of a contiguous segment `[s, c)` equals the average
/// of the adjacent `[c, e)`, so `x` avoids every root and weight hyperplane.
pub fn is_generic(x: &[Q]) -> bool {
    let n = x.len();
    for s in 0..n {
        for c in s + 1..n {
            for e in c + 1..=n {
                if avg(&x[s..c]) == avg(&x[c..e]) {
                    return false;
                }
            }
        }
    }
    true
}

/// `X` and every `X − Y_Q` are generic.
pub fn is_generic_pair(x: &[Q], y: &[Q]) -> bool {
    let m = x.len() as u32;
    is_generic(x)
        && StdParabolic::all(m)
            .iter()
            .all(|qq| qq.project(y).map(|yq| is_generic(&sub(x, &yq))).unwrap_or(false))
}

/// A random rational with numerator in `[−bound, bound]` and denominator in `1..=7`.
pub fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> Q {
    q(rng.gen_range(-bound..=bound), rng.gen_range(1..=7))
}

pub fn random_point<R: Rng>(rng: &mut R, m: u32, bound: i64) -> Vec<Q> {
    (0..m).map(|_| random_rational(rng, bound)).collect()
}

/// Radius beyond which `Γ_P^G(·, Y)` must vanish: `m · Σ |y_i|`.
pub fn support_radius(y: &[Q]) -> Q {
    let l1: Q = y.iter().map(|v| if *v < Q::zero() { -v.clone() } else { v.clone() }).sum();
    qi(y.len() as i64) * l1
}

/// Sup norm of the projection of `x` onto `a_P^G`.
pub fn projection_norm(p: &StdParabolic, x: &[Q]) -> Result<Q> {
    let xp = p.project(x)?;
    let mean = avg(x);
    Ok(xp
        .iter()
        .map(|v| {
            let d = v - &mean;
            if d < Q::zero() {
                -d
            } else {
                d
            }
        })
        .max()
        .unwrap_or_else(Q::zero))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub rank: u32,
    pub points: u32,
    pub checks: u64,
    pub counterexamples: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn record(&mut self, what: String) {
        if self.counterexamples.len() < 10 {
            self.counterexamples.push(what);
        }
    }
}

fn show(x: &[Q]) -> String {
    format!("({})", x.iter().map(fmt_q).collect::<Vec<_>>().join(", "))
}

/// Draws `points` generic pairs `(X, Y)` and checks the inversion formula,
/// the Langlands identity and the value ranges of `σ` and `Γ` for every
/// standard parabolic (pair) of `GL_m`.
pub fn identity_sweep(m: u32, points: u32, seed: u64) -> SweepReport {
    let mut rep = SweepReport {
        rank: m,
        ..SweepReport::default()
    };
    let all = StdParabolic::all(m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(u64::from(m));
    while rep.points < points {
        let x = random_point(&mut rng, m, 20);
        let y = random_point(&mut rng, m, 20);
        if !is_generic_pair(&x, &y) {
            continue;
        }
        rep.points += 1;
        for p in &all {
            let (l, r) = inversion_sides(p, &x, &y).expect("well-formed data");
            rep.checks += 1;
            if l != r {
                rep.record(format!("inversion P={:?} X={} Y={}: {l} != {r}", p.composition(), show(&x), show(&y)));
            }
            let gv = gamma_trunc(p, &x, &y).expect("well-formed data");
            rep.checks += 1;
            if !(-1..=1).contains(&gv) {
                rep.record(format!("Gamma P={:?} X={} Y={} = {gv}", p.composition(), show(&x), show(&y)));
            }
            for p2 in all.iter().filter(|p2| p.is_contained_in(p2)) {
                let s = langlands_sum(p, p2, &x).expect("nested");
                let expect = i64::from(p == p2);
                rep.checks += 1;
                if s != expect {
                    rep.record(format!(
                        "langlands P1={:?} P2={:?} X={}: {s}",
                        p.composition(),
                        p2.composition(),
                        show(&x)
                    ));
                }
                let sv = sigma(p, p2, &x).expect("nested");
                rep.checks += 1;
                if !(-1..=1).contains(&sv) {
                    rep.record(format!(
                        "sigma P1={:?} P2={:?} X={} = {sv}",
                        p.composition(),
                        p2.composition(),
                        show(&x)
                    ));
                }
            }
        }
    }
    rep
}

/// Samples points whose `a_P^G`-projection is farther than
/// [`support_radius`] and checks that `Γ_P^G(X, Y)` vanishes there.
pub fn compact_support_check(p: &StdParabolic, y: &[Q], samples: u32, seed: u64) -> Result<SweepReport> {
    check_point(p, y)?;
    let radius = support_radius(y);
    let span = 4 * (radius.ceil().to_integer().try_into().unwrap_or(1i64) + 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = SweepReport {
        rank: p.m,
        ..SweepReport::default()
    };
    let mut tries = 0u64;
    while rep.points < samples && tries < u64::from(samples) * 200 {
        tries += 1;
        let x: Vec<Q> = (0..p.m).map(|_| q(rng.gen_range(-span * 7..=span * 7), 7)).collect();
        if projection_norm(p, &x)? <= radius {
            continue;
        }
        rep.points += 1;
        rep.checks += 1;
        let v = gamma_trunc(p, &x, y)?;
        if v != 0 {
            rep.record(format!("Gamma P={:?} X={} Y={} = {v}", p.composition(), show(&x), show(y)));
        }
    }
    Ok(rep)
}
