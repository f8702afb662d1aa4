//! Syzygies of the Jacobian ideal, Tjurina numbers and freeness verdicts.
//!
//! Ranks are computed modulo large primes. A rank modulo `p` never exceeds the
//! rank over `K`, so the maximum over a few primes is a lower bound that is
//! exact for all but finitely many primes. Syzygy bases are lifted by CRT and
//! rational reconstruction and then checked exactly, which certifies both the
//! basis and the dimension.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gcd::gcd_k;
use crate::hompoly::{binom, monomials, BiPoly, HomPoly};
use crate::linalg::{kernel_mod, rank_mod};
use crate::modp::{crt_step, quad_mod, rat_recon, ModPrime, PrimeStream};
use crate::resultant::{resultant, split_components};
use crate::scalar::{QuadElem, RATIONAL_FIELD};
use crate::singular::census::Census;
use crate::singular::generic_changes;
use crate::unipoly::KPoly;

type Exp3 = [u32; 3];

/// The degree `r` piece of the derivations killing `f`.
#[derive(Clone, Debug, PartialEq)]
pub struct SyzygySlice {
    pub r: u32,
    pub dim: usize,
    pub basis: Vec<[HomPoly; 3]>,
}

/// Whether every singular point is known to be simple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AdeConfirmed {
    Yes,
    No,
    Unconfirmed,
}

impl AdeConfirmed {
    pub fn from_census(c: &Census) -> Self {
        if c.has_not_simple() {
            AdeConfirmed::No
        } else if c.complete {
            AdeConfirmed::Yes
        } else {
            AdeConfirmed::Unconfirmed
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    Free,
    NearlyFree,
    MaximizingEven,
    MaximizingOdd,
    #[serde(rename = "CaseB_Equality")]
    CaseBEquality,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Free => "Free",
            Verdict::NearlyFree => "NearlyFree",
            Verdict::MaximizingEven => "MaximizingEven",
            Verdict::MaximizingOdd => "MaximizingOdd",
            Verdict::CaseBEquality => "CaseB_Equality",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FreenessReport {
    pub n: u32,
    pub m: u32,
    pub odd: bool,
    pub mdr: u32,
    pub tau: u32,
    pub tau_max: u32,
    pub exponents: Option<(u32, u32)>,
    pub verdicts: Vec<Verdict>,
    pub ade_confirmed: AdeConfirmed,
}

impl FreenessReport {
    pub fn has(&self, v: Verdict) -> bool {
        self.verdicts.contains(&v)
    }
}

fn index_of(deg: u32) -> HashMap<Exp3, usize> {
    monomials(deg).into_iter().enumerate().map(|(i, e)| (e, i)).collect()
}

fn add_exp(a: &Exp3, b: &Exp3) -> Exp3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// Sparse exact matrix; rows are the target monomials.
struct Sparse {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, QuadElem)>,
}

impl Sparse {
    /// Columns are `mono * f_i` for each monomial of degree `deg` and each partial.
    fn multiples(f: &HomPoly, deg: u32) -> Sparse {
        let partials = {
            let (a, b, c) = f.partials();
            [a, b, c]
        };
        let n1 = f.degree().saturating_sub(1);
        let sources = monomials(deg);
        let target = index_of(deg + n1);
        let mut entries = Vec::new();
        for (block, part) in partials.iter().enumerate() {
            for (j, mono) in sources.iter().enumerate() {
                for (e, c) in part.terms() {
                    entries.push((target[&add_exp(e, mono)], block * sources.len() + j, c.clone()));
                }
            }
        }
        Sparse { rows: target.len(), cols: 3 * sources.len(), entries }
    }

    /// Dense image under `sqrt d -> s` mod `p`; `transpose` puts columns as rows.
    fn reduce(&self, p: u64, s: u64, transpose: bool) -> Option<Vec<Vec<u64>>> {
        let (r, c) = if transpose { (self.cols, self.rows) } else { (self.rows, self.cols) };
        let mut m = vec![vec![0u64; c]; r];
        for (i, j, x) in &self.entries {
            let v = quad_mod(x, p, s)?;
            let (a, b) = if transpose { (*j, *i) } else { (*i, *j) };
            m[a][b] = v;
        }
        Some(m)
    }
}

fn rank_images(m: &Sparse, d: i64, count: usize) -> usize {
    let primes: Vec<ModPrime> = PrimeStream::starting_at(d, (1u64 << 31) - 1).take(count).collect();
    primes.par_iter().filter_map(|mp| m.reduce(mp.p, mp.s, true).map(|a| rank_mod(a, mp.p))).max().unwrap_or(0)
}

/// `dim (S/J_f)_k`.
pub fn hilbert_m(f: &HomPoly, k: u32) -> usize {
    let total = binom(k as usize + 2, 2);
    let n1 = f.degree().saturating_sub(1);
    if k < n1 {
        return total;
    }
    let m = Sparse::multiples(f, k - n1);
    total - rank_images(&m, f.field_tag(), 2)
}

/// Whether `f` has no repeated factor.
pub fn is_reduced(f: &HomPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("zero polynomial".into()));
    }
    let n = f.degree();
    if n <= 1 {
        return Ok(true);
    }
    let d = f.field_tag();
    let g = generic_changes(0x7265_6475)
        .take(20)
        .filter_map(|m| f.apply_change(&m).ok())
        .find(|g| !g.coeff(&[0, n, 0]).is_zero())
        .ok_or(Error::GenericityFailure(20))?;
    let big = g.dehomogenize();
    for x0 in [0i64, 1, -1, 2, -2, 3, -3] {
        let h = specialize_x(&big, &QuadElem::from_int(x0, d));
        if gcd_k(&h, &h.derivative()).deg() == 0 {
            return Ok(true);
        }
    }
    Ok(!resultant(&big, &big.partial(1), 1).is_zero())
}

fn require_reduced(f: &HomPoly) -> Result<()> {
    if is_reduced(f)? {
        Ok(())
    } else {
        Err(Error::NonReduced)
    }
}

fn kernel_dim_mod(m: &Sparse, mp: ModPrime) -> Option<usize> {
    m.reduce(mp.p, mp.s, false).map(|a| m.cols - rank_mod(a, mp.p))
}

/// Kernel of the relation matrix in RREF normal form, lifted to `K` and verified.
fn lift_kernel(m: &Sparse, d: i64, check: impl Fn(&[QuadElem]) -> bool) -> Vec<Vec<QuadElem>> {
    let mut best: Option<Vec<usize>> = None;
    let mut acc_a: Vec<BigInt> = Vec::new();
    let mut acc_b: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last: Option<Vec<Vec<QuadElem>>> = None;
    for mp in PrimeStream::new(d) {
        let image = |s: u64| m.reduce(mp.p, s, false).map(|a| kernel_mod(a, m.cols, mp.p));
        let Some((piv, basis)) = image(mp.s) else { continue };
        let flat: Vec<u64> = basis.concat();
        let (fa, fb) = if d == RATIONAL_FIELD {
            (flat.clone(), vec![0; flat.len()])
        } else {
            let Some((piv2, basis2)) = image(mp.p - mp.s) else { continue };
            if piv2 != piv {
                continue;
            }
            split_components(&flat, &basis2.concat(), mp)
        };
        match &best {
            Some(b) if piv.len() < b.len() || (piv.len() == b.len() && piv > *b) => continue,
            Some(b) if *b == piv => {}
            _ => {
                best = Some(piv.clone());
                acc_a = vec![BigInt::from(0); fa.len()];
                acc_b = vec![BigInt::from(0); fa.len()];
                modulus = BigInt::one();
                last = None;
            }
        }
        if fa.is_empty() {
            return Vec::new();
        }
        for (slot, &x) in acc_a.iter_mut().zip(&fa) {
            *slot = crt_step(slot, &modulus, x, mp.p);
        }
        for (slot, &x) in acc_b.iter_mut().zip(&fb) {
            *slot = crt_step(slot, &modulus, x, mp.p);
        }
        modulus *= mp.p;
        let recon: Option<Vec<QuadElem>> =
            acc_a.iter().zip(&acc_b).map(|(x, y)| Some(QuadElem::new(rat_recon(x, &modulus)?, rat_recon(y, &modulus)?, d))).collect();
        let Some(flat) = recon else { continue };
        let vecs: Vec<Vec<QuadElem>> = flat.chunks(m.cols).map(|c| c.to_vec()).collect();
        if last.as_ref() == Some(&vecs) && vecs.iter().all(|v| check(v)) {
            return vecs;
        }
        last = Some(vecs);
    }
    unreachable!("prime supply exhausted")
}

fn triple_from(v: &[QuadElem], r: u32, d: i64) -> [HomPoly; 3] {
    let monos = monomials(r);
    let k = monos.len();
    std::array::from_fn(|b| HomPoly::from_terms(d, monos.iter().enumerate().map(|(j, e)| (*e, v[b * k + j].clone()))).expect("homogeneous"))
        .map(|p| if p.is_zero() { HomPoly::zero(d, r) } else { p })
}

fn relation_holds(f: &HomPoly, t: &[HomPoly; 3]) -> bool {
    let (fx, fy, fz) = f.partials();
    t[0].mul(&fx).add(&t[1].mul(&fy)).add(&t[2].mul(&fz)).is_zero()
}

fn slice_unchecked(f: &HomPoly, r: u32) -> SyzygySlice {
    let d = f.field_tag();
    let m = Sparse::multiples(f, r);
    let probes: Vec<ModPrime> = PrimeStream::new(d).take(2).collect();
    if probes.iter().filter_map(|mp| kernel_dim_mod(&m, *mp)).min() == Some(0) {
        return SyzygySlice { r, dim: 0, basis: Vec::new() };
    }
    let vecs = lift_kernel(&m, d, |v| relation_holds(f, &triple_from(v, r, d)));
    let basis: Vec<[HomPoly; 3]> = vecs.iter().map(|v| triple_from(v, r, d)).collect();
    SyzygySlice { r, dim: basis.len(), basis }
}

/// `D_0(f)_r` with a verified basis.
pub fn ar_dimension(f: &HomPoly, r: u32) -> Result<SyzygySlice> {
    require_reduced(f)?;
    Ok(slice_unchecked(f, r))
}

/// Minimal degree of a Jacobian syzygy.
pub fn mdr(f: &HomPoly) -> Result<u32> {
    require_reduced(f)?;
    mdr_unchecked(f)
}

fn mdr_unchecked(f: &HomPoly) -> Result<u32> {
    let n = f.degree();
    for r in 0..n.max(1) {
        if slice_unchecked(f, r).dim > 0 {
            return Ok(r);
        }
    }
    Ok(n.saturating_sub(1))
}

/// Global Tjurina number as the stable value of the Hilbert function of `S/J_f`.
pub fn total_tjurina(f: &HomPoly) -> Result<u32> {
    require_reduced(f)?;
    let n = f.degree();
    let start = 3 * n.saturating_sub(2);
    let cap = (5 * n).max(start + 3);
    let mut k = start;
    let mut window: Vec<usize> = (k..k + 3).into_par_iter().map(|j| hilbert_m(f, j)).collect();
    loop {
        if window.iter().all(|&h| h == window[0]) {
            return Ok(window[0] as u32);
        }
        k += 1;
        if k + 2 > cap {
            return Err(Error::NonIsolatedSuspected(cap));
        }
        window.remove(0);
        window.push(hilbert_m(f, k + 2));
    }
}

/// Upper bound on the global Tjurina number for degree `n` and `mdr = r`.
pub fn tau_max(n: u32, r: u32) -> u32 {
    let (n, r) = (n as i64, r as i64);
    let mut t = (n - 1) * (n - r - 1) + r * r;
    if 2 * r >= n {
        t -= binom((2 * r - n + 2) as usize, 2) as i64;
    }
    t as u32
}

fn verdicts(n: u32, r: u32, tau: u32, ade: AdeConfirmed) -> (Vec<Verdict>, Option<(u32, u32)>) {
    let tmax = tau_max(n, r);
    let m = n / 2;
    let mut v = Vec::new();
    let mut exps = None;
    if 2 * r < n && tau == tmax {
        v.push(Verdict::Free);
        exps = Some((r, n - 1 - r));
    }
    if (2 * r < n && tau + 1 == tmax) || (n.is_multiple_of(2) && 2 * r == n && tau == tmax) {
        v.push(Verdict::NearlyFree);
    }
    let yes = ade == AdeConfirmed::Yes;
    if n.is_multiple_of(2) && yes && tau == 3 * m * (m.saturating_sub(1)) + 1 {
        v.push(Verdict::MaximizingEven);
    }
    if n % 2 == 1 && yes && tau == 3 * m * m + 1 {
        v.push(Verdict::MaximizingOdd);
    }
    if n % 2 == 1 && r == m && tau == 3 * m * m {
        v.push(Verdict::CaseBEquality);
    }
    (v, exps)
}

/// Freeness verdicts from `mdr` and the global Tjurina number.
pub fn classify_freeness(f: &HomPoly, ade_confirmed: AdeConfirmed) -> Result<FreenessReport> {
    let tau = total_tjurina(f)?;
    classify_with_tau(f, tau, ade_confirmed)
}

/// As [`classify_freeness`] with a precomputed global Tjurina number.
pub fn classify_with_tau(f: &HomPoly, tau: u32, ade_confirmed: AdeConfirmed) -> Result<FreenessReport> {
    let n = f.degree();
    if n < 3 {
        return Err(Error::InvalidArgument(format!("freeness needs degree at least 3, got {n}")));
    }
    require_reduced(f)?;
    let r = mdr_unchecked(f)?;
    let (verdicts, exponents) = verdicts(n, r, tau, ade_confirmed);
    Ok(FreenessReport { n, m: n / 2, odd: n % 2 == 1, mdr: r, tau, tau_max: tau_max(n, r), exponents, verdicts, ade_confirmed })
}

/// `p(x, y)` as a polynomial in `y`.
fn specialize_x(p: &BiPoly, x: &QuadElem) -> KPoly {
    let d = p.field_tag();
    KPoly::new(p.as_univariate(1).iter().map(|r| r.eval(x)).collect(), QuadElem::zero(d))
}
