//! Exact scalars: integers, the golden ring ℤ[φ] and rationals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// Exact rational number.
pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

/// Formats a rational the way the CLI emits it: `"7"` or `"13/2"`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"7"`, `"-3/2"`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().ok()?;
            let d: i64 = d.trim().parse().ok()?;
            (d != 0).then(|| Q::new(n, d))
        }
        None => s.parse::<i64>().ok().map(Q::from_integer),
    }
}

/// An element `a + b·φ` of ℤ[φ], where φ² = φ + 1.
///
/// Ordering follows the real embedding φ ↦ (1+√5)/2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Zphi {
    pub a: i64,
    pub b: i64,
}

impl Zphi {
    pub const ZERO: Zphi = Zphi { a: 0, b: 0 };
    pub const ONE: Zphi = Zphi { a: 1, b: 0 };
    pub const PHI: Zphi = Zphi { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Zphi { a, b }
    }

    pub const fn int(a: i64) -> Self {
        Zphi { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_integer(self) -> bool {
        self.b == 0
    }

    /// Field norm `N(a + bφ) = a² + ab − b²`.
    pub fn norm(self) -> i64 {
        self.a * self.a + self.a * self.b - self.b * self.b
    }

    /// Galois conjugate, sending φ to 1 − φ.
    pub fn conj(self) -> Self {
        Zphi::new(self.a + self.b, -self.b)
    }

    /// Sign in the real embedding: −1, 0 or 1.
    pub fn signum(self) -> i32 {
        // a + bφ = (p + q√5)/2 with p = 2a + b, q = b.
        let p = 2 * self.a + self.b;
        let q = self.b;
        let sp = p.signum() as i32;
        let sq = q.signum() as i32;
        if sp >= 0 && sq >= 0 {
            return (sp + sq).min(1);
        }
        if sp <= 0 && sq <= 0 {
            return -((-(sp + sq)).min(1));
        }
        let p2 = (p as i128) * (p as i128);
        let q2 = 5 * (q as i128) * (q as i128);
        match p2.cmp(&q2) {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(self) -> bool {
        self.signum() < 0
    }

    /// Exact division; `None` if the quotient is not in ℤ[φ] or the divisor is zero.
    pub fn checked_div(self, rhs: Zphi) -> Option<Zphi> {
        let n = rhs.norm();
        if n == 0 {
            return None;
        }
        let num = self * rhs.conj();
        if num.a % n != 0 || num.b % n != 0 {
            return None;
        }
        Some(Zphi::new(num.a / n, num.b / n))
    }

    /// Approximate real value, for display only.
    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * (1.0 + 5f64.sqrt()) / 2.0
    }
}

impl PartialOrd for Zphi {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Zphi {
    fn cmp(&self, other: &Self) -> Ordering {
        (*self - *other).signum().cmp(&0)
    }
}

impl Add for Zphi {
    type Output = Zphi;
    fn add(self, rhs: Zphi) -> Zphi {
        Zphi::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl AddAssign for Zphi {
    fn add_assign(&mut self, rhs: Zphi) {
        *self = *self + rhs;
    }
}

impl Sub for Zphi {
    type Output = Zphi;
    fn sub(self, rhs: Zphi) -> Zphi {
        Zphi::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl SubAssign for Zphi {
    fn sub_assign(&mut self, rhs: Zphi) {
        *self = *self - rhs;
    }
}

impl Neg for Zphi {
    type Output = Zphi;
    fn neg(self) -> Zphi {
        Zphi::new(-self.a, -self.b)
    }
}

impl Mul for Zphi {
    type Output = Zphi;
    fn mul(self, rhs: Zphi) -> Zphi {
        // (a + bφ)(c + dφ) = ac + bd + (ad + bc + bd)φ
        let bd = self.b * rhs.b;
        Zphi::new(self.a * rhs.a + bd, self.a * rhs.b + self.b * rhs.a + bd)
    }
}

impl Mul<i64> for Zphi {
    type Output = Zphi;
    fn mul(self, rhs: i64) -> Zphi {
        Zphi::new(self.a * rhs, self.b * rhs)
    }
}

impl From<i64> for Zphi {
    fn from(a: i64) -> Self {
        Zphi::int(a)
    }
}

impl fmt::Debug for Zphi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Zphi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "φ"),
            (0, -1) => write!(f, "-φ"),
            (0, b) => write!(f, "{b}φ"),
            (a, 1) => write!(f, "{a}+φ"),
            (a, -1) => write!(f, "{a}-φ"),
            (a, b) if b > 0 => write!(f, "{a}+{b}φ"),
            (a, b) => write!(f, "{a}{b}φ"),
        }
    }
}

/// Sum of a slice of rationals.
pub fn sum_q<'a>(xs: impl IntoIterator<Item = &'a Q>) -> Q {
    xs.into_iter().fold(Q::zero(), |acc, x| acc + x)
}

pub fn is_nonneg(x: &Q) -> bool {
    !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn phi_squared() {
        assert_eq!(Zphi::PHI * Zphi::PHI, Zphi::PHI + Zphi::ONE);
    }

    #[test]
    fn signs_follow_real_embedding() {
        assert!(Zphi::new(-1, 1).is_positive()); // φ − 1 ≈ 0.618
        assert!(Zphi::new(2, -1).is_positive()); // 2 − φ ≈ 0.382
        assert!(Zphi::new(1, -1).is_negative()); // 1 − φ ≈ −0.618
        assert!(Zphi::new(-2, 1).is_negative()); // φ − 2
        assert_eq!(Zphi::ZERO.signum(), 0);
        assert!(Zphi::PHI > Zphi::ONE);
    }

    #[test]
    fn division_is_exact() {
        let x = Zphi::new(3, 2) * Zphi::new(1, 1);
        assert_eq!(x.checked_div(Zphi::new(1, 1)), Some(Zphi::new(3, 2)));
        assert_eq!(Zphi::ONE.checked_div(Zphi::int(2)), None);
        // φ is a unit
        assert_eq!(Zphi::ONE.checked_div(Zphi::PHI), Some(Zphi::new(-1, 1)));
    }

    #[test]
    fn rational_round_trip() {
        assert_eq!(fmt_q(&Q::new(13, 2)), "13/2");
        assert_eq!(fmt_q(&q(6)), "6");
        assert_eq!(parse_q("-3/2"), Some(Q::new(-3, 2)));
        assert_eq!(parse_q("x"), None);
    }

    proptest! {
        #[test]
        fn order_matches_float(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50) {
            let x = Zphi::new(a, b);
            let y = Zphi::new(c, d);
            let fx = x.to_f64();
            let fy = y.to_f64();
            if (fx - fy).abs() > 1e-9 {
                prop_assert_eq!(x < y, fx < fy);
            } else {
                prop_assert_eq!(x, y);
            }
        }

        #[test]
        fn mul_div_inverse(a in -30i64..30, b in -30i64..30, c in -30i64..30, d in -30i64..30) {
            let x = Zphi::new(a, b);
            let y = Zphi::new(c, d);
            prop_assume!(!y.is_zero());
            prop_assert_eq!((x * y).checked_div(y), Some(x));
        }
    }
}
