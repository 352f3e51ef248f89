//! The bound functions `g(a, b, w, i)` and `f_w(a, b) = g(a, b, w, 0)`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Parameters of one induction step: stick target `a`, candy target `b`,
/// branch-width bound `w`, and the chain length `ℓ = 3w - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundParams {
    pub a: usize,
    pub b: usize,
    pub w: usize,
    pub ell: usize,
}

impl BoundParams {
    pub fn new(a: usize, b: usize, w: usize) -> Result<BoundParams> {
        if w < 2 {
            return Err(Error::pre(format!("w = {w} is below 2")));
        }
        Ok(BoundParams { a, b, w, ell: 3 * w - 2 })
    }

    pub fn g(&self, i: usize) -> Result<BigInt> {
        g_value(self.a, self.b, self.w, i)
    }

    pub fn f(&self) -> Result<BigInt> {
        f_value(self.w, self.a, self.b)
    }

    /// `g_0, ..., g_ℓ`; integral only when `a >= 1`.
    pub fn levels(&self) -> Result<Vec<BigInt>> {
        (0..=self.ell).map(|i| self.g(i)).collect()
    }
}

fn int(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `ℓ^(a-1)` as a rational, so `a = 0` gives `1/ℓ`.
fn ell_power(ell: usize, a: usize) -> BigRational {
    if a == 0 {
        BigRational::one() / int(ell)
    } else {
        BigRational::from_integer(num::pow(BigInt::from(ell), a - 1))
    }
}

/// `g(a, b, w, i)` evaluated exactly.
pub fn g_rational(a: usize, b: usize, w: usize, i: usize) -> Result<BigRational> {
    if w < 2 {
        return Err(Error::pre(format!("w = {w} is below 2")));
    }
    let ell = 3 * w - 2;
    let p = ell_power(ell, a);
    let step = int(2 * w - 1) * (p.clone() - BigRational::one()) / int(ell - 1) + int(2) * p;
    let tail = BigRational::from_integer(BigInt::from(ell as i64 - i as i64));
    Ok(int(b) + int(2 * w - 1) + step * tail)
}

/// `g(a, b, w, i)`; the value must be an integer.
pub fn g_value(a: usize, b: usize, w: usize, i: usize) -> Result<BigInt> {
    let q = g_rational(a, b, w, i)?;
    if !q.is_integer() {
        return Err(Error::internal(format!(
            "g({a}, {b}, {w}, {i}) = {q} is not an integer"
        )));
    }
    Ok(q.to_integer())
}

/// `f_w(a, b)`.
pub fn f_value(w: usize, a: usize, b: usize) -> Result<BigInt> {
    g_value(a, b, w, 0)
}

/// `b + 3(3w)^a`, the bound stated for the theorem.
pub fn theorem_bound(a: usize, b: usize, w: usize) -> BigInt {
    BigInt::from(b) + BigInt::from(3) * num::pow(BigInt::from(3 * w), a)
}

/// A bound value as a machine integer, for comparison with measured depths.
pub fn to_usize(v: &BigInt) -> Result<usize> {
    if v < &BigInt::zero() {
        return Err(Error::internal(format!("negative bound {v}")));
    }
    v.to_usize().ok_or(Error::Capacity {
        what: "depth bound",
        size: usize::MAX,
        limit: usize::MAX,
    })
}

/// One failed identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityViolation {
    pub identity: &'static str,
    pub a: usize,
    pub b: usize,
    pub w: usize,
    pub i: usize,
    pub detail: String,
}

/// Checks the four recursion identities on every `(w, a, b, i)` in range:
/// `f_w(0,b) = b+2`, `g(a,b,w,3w-2) = b+2w-1`,
/// `g(a+1,b,w,i) = f_w(a, g(a+1,b,w,i+1))` for `i < 3w-2`, and
/// `f_w(a,b) <= b + 3(3w-2)^a`.
pub fn check_recursion_identities(
    ws: std::ops::RangeInclusive<usize>,
    as_: std::ops::RangeInclusive<usize>,
    bs: std::ops::RangeInclusive<usize>,
) -> Result<Vec<IdentityViolation>> {
    let mut out = Vec::new();
    for w in ws {
        let ell = 3 * w - 2;
        for a in as_.clone() {
            for b in bs.clone() {
                let mut bad = |identity, i, detail: String| {
                    out.push(IdentityViolation { identity, a, b, w, i, detail })
                };
                if a == 0 {
                    let f = f_value(w, 0, b)?;
                    if f != BigInt::from(b + 2) {
                        bad("f_w(0,b) = b+2", 0, format!("got {f}"));
                    }
                }
                let last = g_value(a, b, w, ell)?;
                if last != BigInt::from(b + 2 * w - 1) {
                    bad("g(a,b,w,3w-2) = b+2w-1", ell, format!("got {last}"));
                }
                for i in 0..ell {
                    let lhs = g_value(a + 1, b, w, i)?;
                    let inner = to_usize(&g_value(a + 1, b, w, i + 1)?)?;
                    let rhs = f_value(w, a, inner)?;
                    if lhs != rhs {
                        bad("g(a+1,b,w,i) = f_w(a,g(a+1,b,w,i+1))", i, format!("{lhs} != {rhs}"));
                    }
                }
                let f = f_value(w, a, b)?;
                let cap = BigInt::from(b) + BigInt::from(3) * num::pow(BigInt::from(ell), a);
                if f > cap {
                    bad("f_w(a,b) <= b+3(3w-2)^a", 0, format!("{f} > {cap}"));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_values() {
        assert_eq!(f_value(3, 0, 5).unwrap(), BigInt::from(7));
        assert_eq!(g_value(2, 5, 3, 7).unwrap(), BigInt::from(10));
        assert_eq!(f_value(3, 1, 0).unwrap(), BigInt::from(19));
    }

    #[test]
    fn stick_zero_is_fractional_inside() {
        assert!(g_value(0, 0, 3, 3).is_err());
        assert!(g_rational(0, 0, 3, 3).is_ok());
        assert!(g_value(0, 0, 3, 0).is_ok());
    }

    #[test]
    fn identities_hold_on_grid() {
        let v = check_recursion_identities(2..=6, 0..=4, 0..=10).unwrap();
        assert!(v.is_empty(), "{v:?}");
    }

    #[test]
    fn below_theorem_bound() {
        for w in 2..=6 {
            for a in 0..=4 {
                assert!(f_value(w, a, 3).unwrap() <= theorem_bound(a, 3, w));
            }
        }
    }

    #[test]
    fn w_one_rejected() {
        assert!(g_value(1, 0, 1, 0).is_err());
        assert!(BoundParams::new(1, 0, 1).is_err());
    }
}
