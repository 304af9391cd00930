//! Brute-force checks in the split case `D = F = ℚ`: explicit rational
//! matrices in generalized Jordan form, exact ranks of `p(X)^k`, and
//! generic-element tests of induction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::brauer::{CsaAlgebra, IrreducibleSpec, Registry};
use crate::classes::{charpoly_of, closure_leq, induce, ConjClass, LeviShape};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::ratio::{fmt_q, qi, Q};

/// A square matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<Q>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        RationalMatrix {
            n,
            entries: vec![Q::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Schema("matrix must be square".into()));
        }
        Ok(RationalMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Q>> {
        self.entries.chunks(self.n.max(1)).map(<[Q]>::to_vec).collect()
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        let n = self.n;
        let mut out = RationalMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RationalMatrix) -> RationalMatrix {
        RationalMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> RationalMatrix {
        RationalMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> RationalMatrix {
        let mut acc = RationalMatrix::identity(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Places `block` with its top-left corner at `(r, c)`.
    pub fn put(&mut self, r: usize, c: usize, block: &RationalMatrix) {
        for i in 0..block.n {
            for j in 0..block.n {
                self.set(r + i, c + j, block.get(i, j).clone());
            }
        }
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.rows(), self.n)
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(fmt_q).collect())
            .collect();
        rows.serialize(s)
    }
}

/// Rank of a rational matrix given by rows of length `cols`, by clearing
/// denominators row by row and running fraction-free (Bareiss) elimination.
pub fn rank_of_rows(rows: Vec<Vec<Q>>, cols: usize) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    let nrows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for r in rank + 1..nrows {
            for c in col + 1..cols {
                let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

fn coefficients(spec: &IrreducibleSpec) -> Result<&[Q]> {
    spec.coefficients
        .as_deref()
        .ok_or_else(|| Error::MissingCoefficients(spec.label.clone()))
}

/// Companion matrix of `T^g + c_{g-1}T^{g-1} + … + c_0`.
pub fn companion(coeffs: &[Q]) -> RationalMatrix {
    let g = coeffs.len();
    let mut m = RationalMatrix::zeros(g);
    for i in 0..g {
        if i + 1 < g {
            m.set(i + 1, i, Q::one());
        }
        m.set(i, g - 1, -coeffs[i].clone());
    }
    m
}

/// Generalized Jordan block: `k` companion blocks on the diagonal with
/// identity blocks just above.
pub fn jordan_block(coeffs: &[Q], k: u32) -> RationalMatrix {
    let g = coeffs.len();
    let k = k as usize;
    let mut m = RationalMatrix::zeros(g * k);
    let c = companion(coeffs);
    let id = RationalMatrix::identity(g);
    for b in 0..k {
        m.put(b * g, b * g, &c);
        if b + 1 < k {
            m.put(b * g, (b + 1) * g, &id);
        }
    }
    m
}

/// `p(X)` by Horner's rule.
pub fn eval_poly(coeffs: &[Q], x: &RationalMatrix) -> RationalMatrix {
    let n = x.dim();
    let mut acc = RationalMatrix::identity(n);
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(&RationalMatrix::identity(n).scale(c));
    }
    acc
}

fn require_split(alg: &CsaAlgebra) -> Result<()> {
    if alg.is_split() {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch("matrix realization needs a split algebra".into()))
    }
}

/// Block-diagonal matrix of generalized Jordan blocks, polynomials in label
/// order and parts in decreasing order.
pub fn realize(c: &ConjClass, reg: &Registry) -> Result<RationalMatrix> {
    require_split(&c.algebra)?;
    let n = c.algebra.degree() as usize;
    let mut blocks = Vec::new();
    for (p, l) in &c.lambda {
        let coeffs = coefficients(reg.get(p)?)?;
        for &k in l.parts() {
            blocks.push(jordan_block(coeffs, k));
        }
    }
    let total: usize = blocks.iter().map(RationalMatrix::dim).sum();
    if total != n {
        return Err(Error::DegreeMismatch {
            expected: n as u64,
            found: total as u64,
        });
    }
    Ok(block_diag(&blocks))
}

pub fn block_diag(blocks: &[RationalMatrix]) -> RationalMatrix {
    let n = blocks.iter().map(RationalMatrix::dim).sum();
    let mut m = RationalMatrix::zeros(n);
    let mut at = 0;
    for b in blocks {
        m.put(at, at, b);
        at += b.dim();
    }
    m
}

/// `rank p(X)^k`.
pub fn rank_pow(x: &RationalMatrix, spec: &IrreducibleSpec, k: u32) -> Result<usize> {
    let px = eval_poly(coefficients(spec)?, x);
    Ok(px.pow(k).rank())
}

/// Rank profile `rank p(X)^k` for `k = 0, 1, …` until it stabilizes.
fn rank_profile(x: &RationalMatrix, coeffs: &[Q]) -> Vec<usize> {
    let px = eval_poly(coeffs, x);
    let mut ranks = vec![x.dim()];
    let mut pk = RationalMatrix::identity(x.dim());
    loop {
        pk = pk.mul(&px);
        let r = pk.rank();
        let last = *ranks.last().unwrap();
        ranks.push(r);
        if r == last {
            return ranks;
        }
    }
}

/// The class of `X` in the split algebra `alg`, reading `λ(p)^t` off rank
/// jumps: `λ(p)^t_k = (rank p(X)^{k-1} − rank p(X)^k)/deg p`.
///
/// Polynomials are taken from `hints` when given, otherwise every registry
/// entry with coefficients is tried.
pub fn class_of(
    x: &RationalMatrix,
    alg: &CsaAlgebra,
    reg: &Registry,
    hints: Option<&[String]>,
) -> Result<ConjClass> {
    require_split(alg)?;
    if alg.degree() as usize != x.dim() {
        return Err(Error::DegreeMismatch {
            expected: u64::from(alg.degree()),
            found: x.dim() as u64,
        });
    }
    let specs: Vec<&IrreducibleSpec> = match hints {
        Some(h) => h.iter().map(|p| reg.get(p)).collect::<Result<_>>()?,
        None => reg.iter().filter(|s| s.coefficients.is_some()).collect(),
    };
    let mut lambda = Vec::new();
    let mut accounted = 0usize;
    for spec in specs {
        let coeffs = coefficients(spec)?;
        let ranks = rank_profile(x, coeffs);
        let g = spec.degree as usize;
        let cols: Vec<u32> = ranks
            .windows(2)
            .map(|w| ((w[0] - w[1]) / g) as u32)
            .filter(|&c| c > 0)
            .collect();
        accounted += x.dim() - ranks.last().unwrap();
        lambda.push((spec.label.clone(), Partition::new(cols).transpose()));
    }
    if accounted != x.dim() {
        return Err(Error::UnregisteredFactor(x.dim() - accounted));
    }
    Ok(ConjClass::new(alg.clone(), lambda))
}

/// Closure order decided by ranks of `p(X)^k`.
pub fn oracle_closure_leq(c1: &ConjClass, c2: &ConjClass, reg: &Registry) -> Result<bool> {
    if charpoly_of(c1, reg)? != charpoly_of(c2, reg)? {
        return Err(Error::CharpolyMismatch);
    }
    let (x1, x2) = (realize(c1, reg)?, realize(c2, reg)?);
    for (p, l) in &c1.lambda {
        let spec = reg.get(p)?;
        let top = l.largest().max(c2.get(p).largest());
        for k in 1..=top {
            if rank_pow(&x1, spec, k)? > rank_pow(&x2, spec, k)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Dimension of `{M : XM = MX}`.
pub fn commutant_dim(x: &RationalMatrix) -> usize {
    let n = x.dim();
    // Row (i, j) of the map M ↦ XM − MX acting on vec(M), column (k, l).
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![Q::zero(); n * n];
            for k in 0..n {
                row[k * n + j] += x.get(i, k);
                row[i * n + k] -= x.get(k, j);
            }
            rows.push(row);
        }
    }
    n * n - rank_of_rows(rows, n * n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InductionReport {
    pub predicted: ConjClass,
    pub attained: Option<ConjClass>,
    pub trials: u32,
    pub hits: u32,
    /// First sampled class not below the prediction, if any.
    pub exceeded_by: Option<ConjClass>,
    pub passed: bool,
}

/// Samples `diag(realized blocks) + N` with `N` a random strictly
/// block-upper-triangular integer matrix (entries in `−3..=3`), and checks
/// that the largest class met is the predicted induced class.
pub fn generic_induction_check(
    levi: &LeviShape,
    blocks: &[ConjClass],
    trials: u32,
    seed: u64,
    reg: &Registry,
) -> Result<InductionReport> {
    let predicted = induce(levi, blocks)?;
    let realized: Vec<RationalMatrix> = blocks.iter().map(|b| realize(b, reg)).collect::<Result<_>>()?;
    let base = block_diag(&realized);
    let n = base.dim();
    let mut starts = Vec::new();
    let mut at = 0usize;
    for &b in levi.blocks() {
        starts.push(at);
        at += b as usize;
    }
    let block_of = |i: usize| starts.iter().rposition(|&s| s <= i).unwrap();
    let hints: Vec<String> = predicted.lambda.keys().cloned().collect();

    let mut attained: Option<ConjClass> = None;
    let mut hits = 0;
    let mut exceeded_by = None;
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(u64::from(t));
        let mut x = base.clone();
        for i in 0..n {
            for j in 0..n {
                if block_of(i) < block_of(j) {
                    x.set(i, j, qi(rng.gen_range(-3..=3)));
                }
            }
        }
        let got = class_of(&x, &predicted.algebra, reg, Some(&hints))?;
        if got == predicted {
            hits += 1;
        }
        if !closure_leq(&got, &predicted, reg)? {
            exceeded_by.get_or_insert_with(|| got.clone());
        }
        attained = match attained {
            Some(a) if closure_leq(&got, &a, reg)? => Some(a),
            _ => Some(got),
        };
    }
    let passed = hits > 0 && exceeded_by.is_none();
    Ok(InductionReport {
        predicted,
        attained,
        trials,
        hits,
        exceeded_by,
        passed,
    })
}
