//! Exact counting of nonequivalent words via normal-order base sequences.
//!
//! A canonical word factors as a sequence of syllables: distinct adjacent
//! base generators, each carrying a nonzero signed exponent. Counting
//! elements of geodesic length `mu` therefore splits into
//!
//! * counting *normal-order base sequences* of each length `m + 1` — the
//!   dynamic programs [`theta_1d`] and [`theta_2d`] — and
//! * assembling sign and exponent choices around them, [`assemble_count`]:
//!   a sequence of `m + 1` syllables carries `2^(m+1)` sign patterns and
//!   `C(mu - 1, m)` ways to distribute the total exponent `mu`.
//!
//! A base sequence is in normal order when every adjacent transition
//! `g -> h` either descends in serial number or joins two non-commuting
//! generators ([`transition_allowed`]). In the planar (line) group this
//! local condition characterizes canonical base sequences exactly, so the
//! assembled count equals the true number of elements on the sphere of
//! radius `mu`. In the two-dimensional group the dynamic program uses the
//! *literal serial-offset* neighbor sets ([`allowed_predecessors_2d`]):
//! offsets `z - 1`, `z - n`, `z - n + 1` are kept whenever they land in
//! `1..=n^2`, without checking that they stay in the expected column. The
//! resulting counts are an upper bound that exceeds the true sphere sizes
//! from length 2 on; the explorer module measures the gap.
//!
//! All counts are exact [`BigUint`] arithmetic; nothing here rounds.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::group::{Axis, Flavor, GroupSpec};
use crate::{Error, Result};

/// Binomial coefficient `C(a, b)` as a big integer; zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(a), BigUint::from(b))
}

/// Natural logarithm of a big integer as `f64`, valid far beyond the `f64`
/// range (`-inf` for zero).
pub fn ln_biguint(x: &BigUint) -> f64 {
    use num_traits::ToPrimitive;
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 900 {
        return x.to_f64().expect("within f64 range").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit mantissa fits");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `a / b` as `f64`, finite for any operand sizes (`b` must be nonzero).
pub fn ratio_f64(a: &BigUint, b: &BigUint) -> f64 {
    use num_traits::ToPrimitive;
    assert!(!b.is_zero(), "ratio denominator must be nonzero");
    if let (Some(af), Some(bf)) = (a.to_f64(), b.to_f64()) {
        if af.is_finite() && bf.is_finite() {
            return af / bf;
        }
    }
    (ln_biguint(a) - ln_biguint(b)).exp()
}

/// Generators allowed immediately after `f_x` in a normal-order base
/// sequence of the planar group: every smaller index, plus the
/// non-commuting right neighbor `x + 1`.
pub fn allowed_successors_1d(n: u16, x: u16) -> Vec<u16> {
    let mut out: Vec<u16> = (1..x).collect();
    if x < n {
        out.push(x + 1);
    }
    out
}

/// Literal predecessor set of the two-dimensional dynamic program: the
/// generators allowed immediately before the letter of color `axis` at
/// serial `z`. Serial offsets are clipped to `1..=n^2` but deliberately
/// not checked against column boundaries — this is the recursion the
/// counting tables implement, an upper bound on the true rule.
///
/// Everything of strictly larger serial (either color) is always allowed;
/// the remaining entries are the non-commuting partners of serial `<= z`.
pub fn allowed_predecessors_2d(n: u16, z: u32, axis: Axis) -> Vec<(u32, Axis)> {
    let nn = (n as u32) * (n as u32);
    assert!((1..=nn).contains(&z), "serial out of range");
    let mut out: Vec<(u32, Axis)> = Vec::new();
    let mut push = |s: i64, a: Axis| {
        if s >= 1 && (s as u32) <= nn {
            out.push((s as u32, a));
        }
    };
    let zi = z as i64;
    let ni = n as i64;
    match axis {
        Axis::X => {
            // Same-color contact below; opposite-color partners at and
            // below the diagonal.
            push(zi - 1, Axis::X);
            push(zi - ni, Axis::Y);
            push(zi - ni + 1, Axis::Y);
            push(zi, Axis::Y);
        }
        Axis::Y => {
            push(zi - ni, Axis::Y);
            push(zi - 1, Axis::X);
            push(zi, Axis::X);
        }
    }
    for s in (z + 1)..=nn {
        out.push((s, Axis::X));
        out.push((s, Axis::Y));
    }
    out.sort_by_key(|&(s, a)| (s, a.rank()));
    out.dedup();
    out
}

/// The true normal-order transition rule for any flavor: `g -> h` is
/// allowed iff the serial strictly descends or the pair does not commute.
/// (`g -> g` is never allowed; equal powers merge into one syllable.)
pub fn transition_allowed(spec: &GroupSpec, g: crate::group::BaseGen, h: crate::group::BaseGen) -> Result<bool> {
    spec.check_base(g)?;
    spec.check_base(h)?;
    if g == h {
        return Ok(false);
    }
    Ok(spec.serial(h) < spec.serial(g) || !spec.commutes(g, h)?)
}

/// Is the whole base sequence in normal order?
pub fn is_normal_order(spec: &GroupSpec, bases: &[crate::group::BaseGen]) -> Result<bool> {
    for pair in bases.windows(2) {
        if !transition_allowed(spec, pair[0], pair[1])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Position-resolved counts backing a [`CountTable`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ByPos {
    /// `rows[m][x - 1]`: sequences of length `m + 1` ending at `f_x`.
    OneD(Vec<Vec<BigUint>>),
    /// `a[m][z - 1]` / `b[m][z - 1]`: sequences of length `m + 1` ending
    /// at the `x`- resp. `y`-colored generator of serial `z`.
    TwoD {
        a: Vec<Vec<BigUint>>,
        b: Vec<Vec<BigUint>>,
    },
}

/// Normal-order base-sequence counts for one flavor, for all lengths
/// `1..=m_max + 1` (indexed by the step count `m`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    flavor: Flavor,
    n: u16,
    /// `totals[m]`: number of normal-order base sequences of `m + 1`
    /// generators.
    totals: Vec<BigUint>,
    by_pos: ByPos,
}

impl CountTable {
    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn m_max(&self) -> u32 {
        (self.totals.len() - 1) as u32
    }

    pub fn totals(&self) -> &[BigUint] {
        &self.totals
    }

    pub fn total(&self, m: u32) -> &BigUint {
        &self.totals[m as usize]
    }

    pub fn by_pos(&self) -> &ByPos {
        &self.by_pos
    }

    /// Grow the table in place so it covers step counts up to `m_max`.
    pub fn extend_to(&mut self, m_max: u32) {
        while self.m_max() < m_max {
            self.step();
        }
    }

    fn step(&mut self) {
        match (&mut self.by_pos, self.flavor) {
            (ByPos::OneD(rows), Flavor::Lf1) => {
                let prev = rows.last().expect("table rows are never empty");
                rows.push(step_1d(prev));
            }
            (ByPos::OneD(rows), Flavor::Free1) => {
                let n = self.n as usize;
                let m = rows.len() as u32;
                let v = BigUint::from(n as u64 - 1).pow(m);
                rows.push(vec![v; n]);
            }
            (ByPos::TwoD { a, b }, Flavor::Lf2) => {
                let (na, nb) = step_2d(
                    self.n,
                    a.last().expect("table rows are never empty"),
                    b.last().expect("table rows are never empty"),
                );
                a.push(na);
                b.push(nb);
            }
            (ByPos::TwoD { a, b }, Flavor::Free2) => {
                let nn = (self.n as usize) * (self.n as usize);
                let m = a.len() as u32;
                let v = BigUint::from(2 * nn as u64 - 1).pow(m);
                a.push(vec![v.clone(); nn]);
                b.push(vec![v; nn]);
            }
            _ => unreachable!("table shape always matches its flavor"),
        }
        let total = match &self.by_pos {
            ByPos::OneD(rows) => rows.last().unwrap().iter().sum(),
            ByPos::TwoD { a, b } => {
                a.last().unwrap().iter().sum::<BigUint>() + b.last().unwrap().iter().sum::<BigUint>()
            }
        };
        self.totals.push(total);
    }
}

fn step_1d(prev: &[BigUint]) -> Vec<BigUint> {
    let n = prev.len();
    // suffix[i] = sum over y >= i + 1 (1-based) of prev[y].
    let mut suffix = vec![BigUint::zero(); n + 1];
    for i in (0..n).rev() {
        suffix[i] = &suffix[i + 1] + &prev[i];
    }
    let mut next = Vec::with_capacity(n);
    for i in 0..n {
        let below = if i >= 1 { prev[i - 1].clone() } else { BigUint::zero() };
        next.push(below + &suffix[i + 1]);
    }
    next
}

fn step_2d(n: u16, a: &[BigUint], b: &[BigUint]) -> (Vec<BigUint>, Vec<BigUint>) {
    let nn = a.len();
    debug_assert_eq!(nn, (n as usize) * (n as usize));
    let get = |v: &[BigUint], s: i64| -> BigUint {
        if s >= 1 && (s as usize) <= nn {
            v[s as usize - 1].clone()
        } else {
            BigUint::zero()
        }
    };
    // suffix[i] = sum over serials z >= i + 1 (1-based) of a + b.
    let mut suffix = vec![BigUint::zero(); nn + 1];
    for i in (0..nn).rev() {
        suffix[i] = &suffix[i + 1] + &a[i] + &b[i];
    }
    let ni = n as i64;
    let mut na = Vec::with_capacity(nn);
    let mut nb = Vec::with_capacity(nn);
    for i in 0..nn {
        let z = (i + 1) as i64;
        let above = suffix[i + 1].clone();
        na.push(get(a, z - 1) + get(b, z - ni) + get(b, z - ni + 1) + &b[i] + &above);
        nb.push(get(b, z - ni) + get(a, z - 1) + &a[i] + above);
    }
    (na, nb)
}

/// Normal-order base-sequence counts for the planar group on `n` line
/// generators, for step counts `0..=m_max`.
pub fn theta_1d(n: u16, m_max: u32) -> Result<CountTable> {
    theta(Flavor::Lf1, n, m_max)
}

/// Literal-recursion base-sequence counts for the two-dimensional group on
/// an `n x n` lattice (alphabet `2 n^2`), for step counts `0..=m_max`.
pub fn theta_2d(n: u16, m_max: u32) -> Result<CountTable> {
    theta(Flavor::Lf2, n, m_max)
}

/// Base-sequence counts for any flavor. The free flavors use the closed
/// form `N * (N - 1)^m` (alphabet size `N`), resolved per ending position.
pub fn theta(flavor: Flavor, n: u16, m_max: u32) -> Result<CountTable> {
    let spec = GroupSpec::new(flavor, n)?;
    let mut table = match flavor {
        Flavor::Lf1 | Flavor::Free1 => CountTable {
            flavor,
            n,
            totals: vec![BigUint::from(n)],
            by_pos: ByPos::OneD(vec![vec![BigUint::one(); n as usize]]),
        },
        Flavor::Lf2 | Flavor::Free2 => {
            let nn = (n as usize) * (n as usize);
            CountTable {
                flavor,
                n,
                totals: vec![BigUint::from(spec.alphabet_size())],
                by_pos: ByPos::TwoD {
                    a: vec![vec![BigUint::one(); nn]],
                    b: vec![vec![BigUint::one(); nn]],
                },
            }
        }
    };
    table.extend_to(m_max);
    Ok(table)
}

/// Assemble the word count of geodesic length `mu` from a base-sequence
/// table: `sum over m of 2^(m+1) * C(mu - 1, m) * theta(m)`.
///
/// With `include_m0` the single-syllable term `m = 0` is included, which is
/// what the sphere of radius `mu` in the group contains; without it the sum
/// starts at `m = 1` (the multi-syllable words only). `mu = 0` counts the
/// identity alone.
pub fn assemble_from_table(table: &CountTable, mu: u64, include_m0: bool) -> Result<BigUint> {
    if mu == 0 {
        return Ok(BigUint::one());
    }
    let m_hi = mu - 1;
    if (table.m_max() as u64) < m_hi {
        return Err(Error::InvalidParameter(format!(
            "count table covers m <= {} but mu = {mu} needs m <= {m_hi}",
            table.m_max()
        )));
    }
    let m_lo = u64::from(!include_m0);
    let mut sum = BigUint::zero();
    for m in m_lo..=m_hi {
        let weight = (BigUint::one() << (m + 1)) * binomial(mu - 1, m);
        sum += weight * table.total(m as u32);
    }
    Ok(sum)
}

/// One-shot [`assemble_from_table`], building the table internally.
pub fn assemble_count(flavor: Flavor, n: u16, mu: u64, include_m0: bool) -> Result<BigUint> {
    let m_max = mu.saturating_sub(1);
    let m_max = u32::try_from(m_max)
        .map_err(|_| Error::InvalidParameter(format!("mu = {mu} is out of supported range")))?;
    let table = theta(flavor, n, m_max)?;
    assemble_from_table(&table, mu, include_m0)
}

/// The free-group baseline: the number of irreducible words of length `mu`
/// over the same signed alphabet with no relations, `2N * (2N - 1)^(mu-1)`
/// for alphabet size `N`.
pub fn free_count(flavor: Flavor, n: u16, mu: u64) -> Result<BigUint> {
    let spec = GroupSpec::new(flavor, n)?;
    if mu == 0 {
        return Ok(BigUint::one());
    }
    let two_n = BigUint::from(2u64 * spec.alphabet_size() as u64);
    let base = &two_n - 1u32;
    let mut pow = BigUint::one();
    for _ in 1..mu {
        pow *= &base;
    }
    Ok(two_n * pow)
}
