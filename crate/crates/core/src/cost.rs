//! Exact scaled cost arithmetic.
//!
//! A [`CostValue`] is either a nonnegative integer number of millionths
//! (decimals with up to six fraction digits, scaled by [`SCALE`]) or the
//! sentinel [`CostValue::INF`]. The sentinel absorbs addition and compares
//! greater than every finite value, which is exactly the algebra needed by
//! threshold-clipped distances. Adding two finite values that would exceed
//! the representable range is an error (or a panic via `+`), never a silent
//! wraparound.

use std::fmt;
use std::ops::Add;

use thiserror::Error;

/// Scaling factor between user-facing decimal costs and stored integers.
pub const SCALE: u64 = 1_000_000;

const INF_RAW: u64 = u64::MAX;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum CostError {
    #[error("cost overflow: {0} + {1} exceeds the representable range")]
    Overflow(CostValue, CostValue),
    #[error("invalid cost literal {literal:?}: {reason}")]
    BadLiteral { literal: String, reason: &'static str },
}

/// An exact nonnegative cost: a 64-bit integer count of millionths, or INF.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CostValue(u64);

impl CostValue {
    pub const ZERO: CostValue = CostValue(0);
    /// Sentinel for "exceeds the threshold". Not a table value.
    pub const INF: CostValue = CostValue(INF_RAW);
    /// Cost of one whole unit (the normalized minimum for an edit).
    pub const UNIT: CostValue = CostValue(SCALE);

    /// A finite value from a raw count of millionths; `None` for the
    /// reserved sentinel bit pattern.
    pub const fn from_scaled(raw: u64) -> Option<CostValue> {
        if raw == INF_RAW {
            None
        } else {
            Some(CostValue(raw))
        }
    }

    /// A finite value from whole units.
    pub fn from_units(units: u64) -> Option<CostValue> {
        match units.checked_mul(SCALE) {
            Some(raw) if raw != INF_RAW => Some(CostValue(raw)),
            _ => None,
        }
    }

    /// Raw millionths of a finite value; `None` for INF.
    pub const fn scaled(self) -> Option<u64> {
        if self.is_inf() {
            None
        } else {
            Some(self.0)
        }
    }

    pub const fn is_inf(self) -> bool {
        self.0 == INF_RAW
    }

    pub const fn is_finite(self) -> bool {
        self.0 != INF_RAW
    }

    /// INF-absorbing addition; finite overflow is an error.
    pub fn checked_add(self, rhs: CostValue) -> Result<CostValue, CostError> {
        if self.is_inf() || rhs.is_inf() {
            return Ok(CostValue::INF);
        }
        match self.0.checked_add(rhs.0) {
            Some(raw) if raw != INF_RAW => Ok(CostValue(raw)),
            _ => Err(CostError::Overflow(self, rhs)),
        }
    }

    /// Threshold clipping: `self` if ≤ `k` whole units, else INF.
    pub fn clip(self, k: u32) -> CostValue {
        if self.0 <= u64::from(k) * SCALE {
            self
        } else {
            CostValue::INF
        }
    }

    /// Parses a nonnegative decimal with at most six fraction digits.
    pub fn parse_decimal(s: &str) -> Result<CostValue, CostError> {
        let bad = |reason| CostError::BadLiteral { literal: s.to_owned(), reason };
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, Some(f)),
            None => (s, None),
        };
        if int_part.is_empty() && frac_part.map_or(true, str::is_empty) {
            return Err(bad("empty literal"));
        }
        if !int_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected only digits before the decimal point"));
        }
        let mut raw: u64 = 0;
        for b in int_part.bytes() {
            raw = raw
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(b - b'0')))
                .ok_or_else(|| bad("integer part out of range"))?;
        }
        raw = raw.checked_mul(SCALE).ok_or_else(|| bad("value out of range"))?;
        if let Some(frac) = frac_part {
            if frac.is_empty() {
                return Err(bad("missing fraction digits after the decimal point"));
            }
            if frac.len() > 6 {
                return Err(bad("more than six fraction digits"));
            }
            if !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("expected only digits after the decimal point"));
            }
            let mut frac_raw: u64 = 0;
            for b in frac.bytes() {
                frac_raw = frac_raw * 10 + u64::from(b - b'0');
            }
            frac_raw *= 10u64.pow(6 - frac.len() as u32);
            raw = raw.checked_add(frac_raw).ok_or_else(|| bad("value out of range"))?;
        }
        CostValue::from_scaled(raw)
            .ok_or_else(|| bad("value out of range"))
    }
}

/// Panicking addition for DP inner loops; same algebra as
/// [`CostValue::checked_add`]. The panic marks a genuine bug: finite
/// distances in this workspace are sums of boundedly many table entries.
impl Add for CostValue {
    type Output = CostValue;

    fn add(self, rhs: CostValue) -> CostValue {
        self.checked_add(rhs).expect("finite cost addition overflowed")
    }
}

impl fmt::Display for CostValue {
    /// Finite values print with exactly six fraction digits; INF prints
    /// as the literal `INF`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inf() {
            write!(f, "INF")
        } else {
            write!(f, "{}.{:06}", self.0 / SCALE, self.0 % SCALE)
        }
    }
}

impl fmt::Debug for CostValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
