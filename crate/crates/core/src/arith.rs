//! Odd-integer arithmetic: the Syracuse step, the starter/intermediary
//! classification, terminal and pre-terminal generators, and the reverse
//! walk from an intermediary up to a starter.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A positive odd integer of arbitrary size.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddInt(BigUint);

impl OddInt {
    pub fn new(value: BigUint) -> Result<Self> {
        if value.is_zero() {
            Err(Error::Zero)
        } else if !value.bit(0) {
            Err(Error::Even(value))
        } else {
            Ok(OddInt(value))
        }
    }

    pub fn from_u64(value: u64) -> Result<Self> {
        Self::new(BigUint::from(value))
    }

    pub(crate) fn new_unchecked(value: BigUint) -> Self {
        debug_assert!(value.bit(0), "OddInt built from even value {value}");
        OddInt(value)
    }

    pub fn one() -> Self {
        OddInt(BigUint::one())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Lowest 64 bits; enough for any residue modulo a power of two up to 2^64.
    pub(crate) fn low_bits(&self) -> u64 {
        self.0.iter_u64_digits().next().unwrap_or(0)
    }

    pub fn rem_u32(&self, m: u32) -> u32 {
        (&self.0 % m).to_u32().expect("remainder below modulus")
    }

    /// `4x + 1`, which shares its Syracuse iterate with `x`.
    pub fn four_x_plus_one(&self) -> OddInt {
        OddInt((&self.0 << 2u32) + 1u32)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }

    /// Natural logarithm, accurate for values beyond the f64 range.
    pub fn ln(&self) -> f64 {
        let bits = self.0.bits();
        if bits <= 1000 {
            self.to_f64().ln()
        } else {
            let shift = bits - 64;
            let top = (&self.0 >> shift).to_f64().expect("64-bit head");
            top.ln() + shift as f64 * std::f64::consts::LN_2
        }
    }
}

impl TryFrom<u64> for OddInt {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        Self::from_u64(value)
    }
}

impl TryFrom<BigUint> for OddInt {
    type Error = Error;

    fn try_from(value: BigUint) -> Result<Self> {
        Self::new(value)
    }
}

impl FromStr for OddInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let value = BigUint::from_str(s.trim()).map_err(|_| {
            Error::param(
                "value",
                format!("{s:?} is not a non-negative decimal integer"),
            )
        })?;
        Self::new(value)
    }
}

impl fmt::Display for OddInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for OddInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl PartialEq<u64> for OddInt {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

// Emitted as a bare JSON number of any length.
impl Serialize for OddInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let number =
            serde_json::Number::from_str(&self.0.to_string()).map_err(serde::ser::Error::custom)?;
        number.serialize(serializer)
    }
}

/// One Syracuse step: `3·input + 1 = iterate · 2^alpha` with `iterate` odd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SyracuseResult {
    pub iterate: OddInt,
    pub alpha: u64,
}

pub fn syracuse_step(x: &OddInt) -> SyracuseResult {
    let lifted = x.value() * 3u32 + 1u32;
    let alpha = lifted.trailing_zeros().expect("3x+1 is non-zero");
    SyracuseResult {
        iterate: OddInt(lifted >> alpha),
        alpha,
    }
}

pub fn alpha_of(x: &OddInt) -> u64 {
    let lifted = x.value() * 3u32 + 1u32;
    lifted.trailing_zeros().expect("3x+1 is non-zero")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    /// Odd multiple of 3; never the iterate of anything.
    #[serde(rename = "starter")]
    Starter,
    #[serde(rename = "6m+1")]
    Intermediary6m1,
    #[serde(rename = "6m+5")]
    Intermediary6m5,
}

impl Kind {
    pub fn of(x: &OddInt) -> Kind {
        match x.rem_u32(6) {
            3 => Kind::Starter,
            1 => Kind::Intermediary6m1,
            5 => Kind::Intermediary6m5,
            r => unreachable!("odd value has residue {r} mod 6"),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Starter => "starter",
            Kind::Intermediary6m1 => "intermediary-6m+1",
            Kind::Intermediary6m5 => "intermediary-6m+5",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub kind: Kind,
    pub is_terminal: bool,
    pub is_end: bool,
}

pub fn classify(x: &OddInt) -> Classification {
    Classification {
        kind: Kind::of(x),
        is_terminal: is_terminal(x),
        is_end: x.is_one(),
    }
}

/// True iff `3x + 1` is a power of 4, i.e. the Syracuse iterate of `x` is 1.
pub fn is_terminal(x: &OddInt) -> bool {
    let lifted = x.value() * 3u32 + 1u32;
    let tz = lifted.trailing_zeros().expect("3x+1 is non-zero");
    tz.is_multiple_of(2) && lifted.bits() == tz + 1
}

/// `T_k = (4^(k+1) - 1) / 3`: 1, 5, 21, 85, 341, ...
pub fn terminal(k: u64) -> OddInt {
    let four_pow = BigUint::one() << (2 * (k + 1));
    OddInt((four_pow - 1u32) / 3u32)
}

/// `P_k = (10·4^(k-1) - 1) / 3`: 3, 13, 53, 213, ... (iterate 5).
pub fn pre_terminal(k: u64) -> Result<OddInt> {
    if k == 0 {
        return Err(Error::param("k", "pre-terminal index starts at 1"));
    }
    let scaled = BigUint::from(10u32) << (2 * (k - 1));
    Ok(OddInt((scaled - 1u32) / 3u32))
}

/// Steps allowed in [`reverse_to_starter`] before it reports failure.
pub const REVERSE_STEP_BUDGET: usize = 100_000;

/// Walks upward from `y` taking the smallest-power predecessor each time
/// (`x' = (2^n·x - 1)/3` with the least `n ≥ 1`) until a starter is reached.
pub fn reverse_to_starter(y: &OddInt) -> Result<Vec<OddInt>> {
    if y.is_one() {
        return Err(Error::ReverseFromOne);
    }
    if y.rem_u32(3) == 0 {
        return Err(Error::StarterHasNoPredecessors(y.value().clone()));
    }
    let mut chain = Vec::new();
    let mut current = y.value().clone();
    for _ in 0..REVERSE_STEP_BUDGET {
        // 2^n·x ≡ 1 (mod 3): n = 2 when x ≡ 1, n = 1 when x ≡ 2.
        let shift = if (&current % 3u32).is_one() {
            2u32
        } else {
            1u32
        };
        let next = ((current << shift) - 1u32) / 3u32;
        let starter = (&next % 3u32).is_zero();
        chain.push(OddInt(next.clone()));
        if starter {
            return Ok(chain);
        }
        current = next;
    }
    Err(Error::ReverseBudgetExceeded {
        start: y.value().clone(),
        budget: REVERSE_STEP_BUDGET,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn odd(v: u64) -> OddInt {
        OddInt::from_u64(v).unwrap()
    }

    #[test]
    fn rejects_even_and_zero() {
        assert_eq!(OddInt::from_u64(0), Err(Error::Zero));
        assert!(matches!(OddInt::from_u64(4), Err(Error::Even(_))));
        assert!(matches!("12".parse::<OddInt>(), Err(Error::Even(_))));
        assert!("abc".parse::<OddInt>().is_err());
        assert!("-3".parse::<OddInt>().is_err());
    }

    #[test]
    fn syracuse_examples() {
        for (x, y, a) in [(27, 41, 1), (1, 1, 2), (9, 7, 2), (53, 5, 5)] {
            let r = syracuse_step(&odd(x));
            assert_eq!((r.iterate, r.alpha), (odd(y), a), "x = {x}");
        }
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_of(&odd(3)), 1);
        assert_eq!(alpha_of(&odd(9)), 2);
        // 3·13 + 1 = 40 = 5·2^3
        assert_eq!(alpha_of(&odd(13)), 3);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(&odd(9)).kind, Kind::Starter);
        assert_eq!(classify(&odd(7)).kind, Kind::Intermediary6m1);
        assert_eq!(classify(&odd(13)).kind, Kind::Intermediary6m1);
        assert_eq!(classify(&odd(11)).kind, Kind::Intermediary6m5);
        assert_eq!(classify(&odd(17)).kind, Kind::Intermediary6m5);
        let c = classify(&odd(21));
        assert_eq!(c.kind, Kind::Starter);
        assert!(c.is_terminal);
        assert!(!c.is_end);
        assert!(classify(&odd(1)).is_end);
    }

    #[test]
    fn terminal_detection() {
        assert!(is_terminal(&odd(85)));
        assert!(is_terminal(&odd(1)));
        assert!(!is_terminal(&odd(7)));
        assert!(!is_terminal(&odd(3)));
        for x in (1..20_000u64).step_by(2) {
            let brute = {
                let mut t = 3 * x + 1;
                while t % 4 == 0 {
                    t /= 4;
                }
                t == 1
            };
            assert_eq!(is_terminal(&odd(x)), brute, "x = {x}");
        }
    }

    #[test]
    fn terminal_values() {
        assert_eq!(terminal(0), odd(1));
        assert_eq!(terminal(1), odd(5));
        assert_eq!(terminal(3), odd(85));
        assert_eq!(terminal(5), odd(1365));
        assert_eq!(terminal(10), odd(1_398_101));
    }

    #[test]
    fn terminal_closed_form_matches_recurrence() {
        let mut t = BigUint::one();
        for k in 0..=50u64 {
            assert_eq!(terminal(k).value(), &t, "k = {k}");
            assert!(is_terminal(&terminal(k)));
            t = t * 4u32 + 1u32;
        }
    }

    #[test]
    fn pre_terminal_values() {
        assert_eq!(pre_terminal(1).unwrap(), odd(3));
        assert_eq!(pre_terminal(2).unwrap(), odd(13));
        assert_eq!(pre_terminal(4).unwrap(), odd(213));
        assert_eq!(pre_terminal(6).unwrap(), odd(3413));
        assert_eq!(pre_terminal(8).unwrap(), odd(54613));
        assert!(pre_terminal(0).is_err());
        let mut p = BigUint::from(3u32);
        for k in 1..=40 {
            let pk = pre_terminal(k).unwrap();
            assert_eq!(pk.value(), &p);
            assert_eq!(syracuse_step(&pk).iterate, odd(5));
            p = p * 4u32 + 1u32;
        }
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(
            reverse_to_starter(&odd(85)).unwrap(),
            vec![odd(113), odd(75)]
        );
        assert_eq!(reverse_to_starter(&odd(5)).unwrap(), vec![odd(3)]);
        assert_eq!(reverse_to_starter(&odd(7)).unwrap(), vec![odd(9)]);
        assert_eq!(reverse_to_starter(&odd(1)), Err(Error::ReverseFromOne));
        assert!(matches!(
            reverse_to_starter(&odd(9)),
            Err(Error::StarterHasNoPredecessors(_))
        ));
    }

    #[test]
    fn reverse_chain_steps_forward() {
        for y in (5..5_000u64).step_by(2).filter(|y| y % 3 != 0) {
            let chain = reverse_to_starter(&odd(y)).unwrap();
            let mut below = odd(y);
            for (i, x) in chain.iter().enumerate() {
                assert_eq!(syracuse_step(x).iterate, below);
                assert_eq!(x.rem_u32(3) == 0, i + 1 == chain.len());
                below = x.clone();
            }
        }
    }

    #[test]
    fn ln_handles_huge_values() {
        let big = OddInt::new((BigUint::one() << 5000u32) + 1u32).unwrap();
        let expected = 5000.0 * std::f64::consts::LN_2;
        assert!((big.ln() - expected).abs() < 1e-9);
        assert!((odd(27).ln() - 27f64.ln()).abs() < 1e-12);
    }
}
