//! Exact integer machinery behind the quadratic invariants: bit counts of
//! amplitude indices and the two sign functions `sgn` and `sgn*`.
//!
//! Indices are read as `n`-bit words `i_{n-1} ... i_1 i_0`. `sgn(n, i)` is
//! `(-1)^N(i)` on `0 <= i < 2^(n-3)`; `sgn*(n, i)` agrees with it there and is
//! `(-1)^(n + N(i))` on `2^(n-3) <= i < 2^(n-2)`. At `n = 2` the second branch
//! would need a fractional bound, so `sgn*(2, 0)` is fixed to `+1`, which makes
//! the even measure reduce to the two-qubit concurrence.

use std::ops::{Mul, Neg};

use crate::error::{Error, Result};

/// Widest index representation supported (indices are `u64`).
pub const MAX_WIDTH: u32 = 63;

/// Number of bits in an index representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitWidth(u32);

impl BitWidth {
    pub fn new(n: u32) -> Result<Self> {
        if !(2..=MAX_WIDTH).contains(&n) {
            return Err(Error::domain(format!(
                "bit width must be in 2..={MAX_WIDTH}, got {n}"
            )));
        }
        Ok(BitWidth(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// `2^n`, the number of indices of this width.
    pub fn size(self) -> u64 {
        1u64 << self.0
    }
}

impl TryFrom<u32> for BitWidth {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        BitWidth::new(n)
    }
}

/// A sign, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignValue {
    Plus,
    Minus,
}

impl SignValue {
    /// `(-1)^count`.
    #[inline]
    pub fn from_parity(count: u32) -> Self {
        if count & 1 == 0 {
            SignValue::Plus
        } else {
            SignValue::Minus
        }
    }

    #[inline]
    pub fn value(self) -> i32 {
        match self {
            SignValue::Plus => 1,
            SignValue::Minus => -1,
        }
    }

    #[inline]
    pub fn as_f64(self) -> f64 {
        self.value() as f64
    }
}

impl Neg for SignValue {
    type Output = SignValue;

    fn neg(self) -> SignValue {
        match self {
            SignValue::Plus => SignValue::Minus,
            SignValue::Minus => SignValue::Plus,
        }
    }
}

impl Mul for SignValue {
    type Output = SignValue;

    fn mul(self, rhs: SignValue) -> SignValue {
        if self == rhs {
            SignValue::Plus
        } else {
            SignValue::Minus
        }
    }
}

fn check_index(what: &'static str, i: u64, bound: u64, n: u32) -> Result<()> {
    if i >= bound {
        return Err(Error::IndexOutOfRange {
            what,
            index: i,
            bits: n,
        });
    }
    Ok(())
}

/// `N(i)`: number of one bits in the `n`-bit representation of `i`.
pub fn count_ones(i: u64, n: BitWidth) -> Result<u32> {
    check_index("count_ones", i, n.size(), n.get())?;
    Ok(i.count_ones())
}

/// `N*(i)`: number of one bits in `i_{n-2} ... i_0`, i.e. with the top bit dropped.
pub fn count_ones_star(i: u64, n: BitWidth) -> Result<u32> {
    check_index("count_ones_star", i, n.size(), n.get())?;
    Ok((i & !(1u64 << (n.get() - 1))).count_ones())
}

/// `sgn(n, i)`, defined for `n >= 3` and `0 <= i < 2^(n-3)` only.
pub fn sgn(n: BitWidth, i: u64) -> Result<SignValue> {
    let n = n.get();
    if n < 3 {
        return Err(Error::domain(format!("sgn requires n >= 3, got {n}")));
    }
    check_index("sgn", i, 1u64 << (n - 3), n)?;
    Ok(SignValue::from_parity(i.count_ones()))
}

/// `sgn*(n, i)` on `0 <= i < 2^(n-2)`; at `n = 2` only `i = 0` is accepted.
pub fn sgn_star(n: BitWidth, i: u64) -> Result<SignValue> {
    let n = n.get();
    if n == 2 {
        check_index("sgn_star", i, 1, n)?;
        return Ok(SignValue::Plus);
    }
    check_index("sgn_star", i, 1u64 << (n - 2), n)?;
    let ones = i.count_ones();
    if i < 1u64 << (n - 3) {
        Ok(SignValue::from_parity(ones))
    } else {
        Ok(SignValue::from_parity(n + ones))
    }
}

/// `(-1)^N(i)` as a float, for the hot loops. No range checks.
#[inline(always)]
pub(crate) fn parity_sign(i: usize) -> f64 {
    if i.count_ones() & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Exhaustive certification of the index identities the product-state
/// factorization rules rest on.
pub mod properties {
    use super::*;

    /// Outcome of enumerating one identity over its whole domain.
    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct PropertyTally {
        pub name: &'static str,
        pub checked: u64,
        pub violations: u64,
    }

    impl PropertyTally {
        fn new(name: &'static str) -> Self {
            PropertyTally {
                name,
                checked: 0,
                violations: 0,
            }
        }

        fn record(&mut self, holds: bool) {
            self.checked += 1;
            if !holds {
                self.violations += 1;
            }
        }

        pub fn holds(&self) -> bool {
            self.violations == 0
        }
    }

    fn w(n: u32) -> BitWidth {
        BitWidth(n)
    }

    fn ones(i: u64, n: u32) -> u32 {
        count_ones(i, w(n)).expect("index within width")
    }

    fn s(n: u32, i: u64) -> SignValue {
        sgn(w(n), i).expect("sgn argument within domain")
    }

    fn ss(n: u32, i: u64) -> SignValue {
        sgn_star(w(n), i).expect("sgn* argument within domain")
    }

    fn pow_sign(e: u32) -> SignValue {
        SignValue::from_parity(e)
    }

    /// Properties 1 through 5 for every width `n <= n_max` and every valid
    /// `(l, k, j, t)`.
    ///
    /// Ranges: `n - l >= 2`, `0 <= k < 2^(n-l-2)`, `0 <= j < 2^(l-2)` (so
    /// `l >= 2`), `0 <= t < 2^(l-3)` (so `l >= 3`). Properties 3(ii) and 4 are
    /// statements about `sgn*(n-1, .)`, which only enters the odd-n measure,
    /// and are enumerated for odd `n`. Property 5 needs `n` and `l` of equal
    /// parity.
    pub fn sign_properties(n_max: u32) -> Vec<PropertyTally> {
        let mut p1i = PropertyTally::new("P1(i)");
        let mut p1ii = PropertyTally::new("P1(ii)");
        let mut p1iii = PropertyTally::new("P1(iii)");
        let mut p2 = PropertyTally::new("P2");
        let mut p3i = PropertyTally::new("P3(i)");
        let mut p3ii = PropertyTally::new("P3(ii)");
        let mut p4 = PropertyTally::new("P4");
        let mut p5i = PropertyTally::new("P5(i)");
        let mut p5ii = PropertyTally::new("P5(ii)");
        let mut p5iii = PropertyTally::new("P5(iii)");

        for n in 4..=n_max.min(MAX_WIDTH) {
            for l in 2..=n - 2 {
                let k_count = 1u64 << (n - l - 2);
                let half = 1u64 << (n - l - 1);

                for k in 0..k_count {
                    for j in 0..1u64 << (l - 2) {
                        let fwd = k + j * half;
                        let rev = (j + 1) * half - 1 - k;
                        let nj = ones(j, n);
                        let nk = ones(k, n);

                        p1i.record(ones(fwd, n) == nj + nk);
                        p1iii.record(
                            ones(half - 1 - k, n) == n - l - 1 - nk
                                && ones(rev, n) == nj + n - l - 1 - nk,
                        );
                        p2.record(s(n, rev) == pow_sign(n + l + 1) * s(n, fwd));
                        if n % 2 == 1 {
                            p4.record(ss(n - 1, rev) == pow_sign(n + l + 1) * ss(n - 1, fwd));
                        }
                    }

                    if l < 3 {
                        continue;
                    }
                    for t in 0..1u64 << (l - 3) {
                        let even_slot = k + t * (1u64 << (n - l));
                        let odd_slot = k + (2 * t + 1) * half;
                        let nk = ones(k, n);
                        let nt = ones(t, n);

                        p1ii.record(
                            ones(even_slot, n) == nk + nt && ones(odd_slot, n) == nk + nt + 1,
                        );
                        p3i.record(s(n, odd_slot) == -s(n, even_slot));
                        if n % 2 == 1 {
                            p3ii.record(ss(n - 1, odd_slot) == -ss(n - 1, even_slot));
                        }
                        if (n - l) % 2 == 0 {
                            let head = ss(n - l, k);
                            p5i.record(head == SignValue::from_parity(nk));
                            p5ii.record(s(n, even_slot) == head * s(l, t));
                            p5iii.record(ss(n - 1, even_slot) == head * ss(l - 1, t));
                        }
                    }
                }
            }
        }
        vec![p1i, p1ii, p1iii, p2, p3i, p3ii, p4, p5i, p5ii, p5iii]
    }

    /// `N(k) + N(2^n-1-k) = n` and `N*(k) + N*(2^n-1-k) = n - 1` for all
    /// `k < 2^n`, `2 <= n <= n_max`.
    pub fn complement_identity(n_max: u32) -> PropertyTally {
        let mut tally = PropertyTally::new("complement");
        for n in 2..=n_max.min(30) {
            let width = w(n);
            let top = width.size() - 1;
            for k in 0..=top {
                let c = top - k;
                let full = ones(k, n) + ones(c, n) == n;
                let star = count_ones_star(k, width).unwrap() + count_ones_star(c, width).unwrap()
                    == n - 1;
                tally.record(full && star);
            }
        }
        tally
    }

    /// For even `n`, the piecewise `sgn*(n, i)` equals `(-1)^N(i)` on its whole
    /// domain; the even-n kernels rely on this.
    pub fn even_sgn_star_parity(n_max: u32) -> PropertyTally {
        let mut tally = PropertyTally::new("sgn*-even-parity");
        for n in (2..=n_max.min(30)).step_by(2) {
            let bound = if n == 2 { 1 } else { 1u64 << (n - 2) };
            for i in 0..bound {
                tally.record(ss(n, i) == SignValue::from_parity(i.count_ones()));
            }
        }
        tally
    }
}

#[cfg(test)]
mod tests {
    use super::properties::*;
    use super::*;

    fn w(n: u32) -> BitWidth {
        BitWidth::new(n).unwrap()
    }

    #[test]
    fn count_ones_examples() {
        assert_eq!(count_ones(0, w(4)).unwrap(), 0);
        assert_eq!(count_ones(7, w(4)).unwrap(), 3);
        assert_eq!(count_ones(5, w(3)).unwrap(), 2);
    }

    #[test]
    fn count_ones_star_examples() {
        assert_eq!(count_ones_star(5, w(3)).unwrap(), 1);
        assert_eq!(count_ones_star(8, w(4)).unwrap(), 0);
        assert_eq!(count_ones_star(3, w(4)).unwrap(), 2);
    }

    #[test]
    fn counts_reject_out_of_range() {
        assert!(matches!(
            count_ones(16, w(4)),
            Err(Error::IndexOutOfRange { index: 16, .. })
        ));
        assert!(count_ones_star(8, w(3)).is_err());
    }

    #[test]
    fn width_bounds() {
        assert!(BitWidth::new(1).is_err());
        assert!(BitWidth::new(64).is_err());
        assert_eq!(w(5).size(), 32);
    }

    #[test]
    fn sgn_examples() {
        assert_eq!(sgn(w(3), 0).unwrap(), SignValue::Plus);
        assert_eq!(sgn(w(5), 3).unwrap(), SignValue::Plus);
        assert_eq!(sgn(w(4), 1).unwrap(), SignValue::Minus);
    }

    #[test]
    fn sgn_domain() {
        // 2^(n-3) is the first undefined index
        assert!(sgn(w(4), 2).is_err());
        assert!(sgn(w(3), 1).is_err());
        assert!(sgn(w(2), 0).is_err());
    }

    #[test]
    fn sgn_star_examples() {
        let got: Vec<i32> = (0..4).map(|i| sgn_star(w(4), i).unwrap().value()).collect();
        assert_eq!(got, vec![1, -1, -1, 1]);
        assert_eq!(sgn_star(w(5), 2).unwrap(), SignValue::Minus);
        assert_eq!(sgn_star(w(2), 0).unwrap(), SignValue::Plus);
    }

    #[test]
    fn sgn_star_second_branch_odd_width() {
        // n = 5, i = 2^(n-3) = 4: (-1)^(5 + 1) = +1, whereas (-1)^N(4) = -1
        assert_eq!(sgn_star(w(5), 4).unwrap(), SignValue::Plus);
        assert_eq!(sgn_star(w(3), 1).unwrap(), SignValue::Plus);
    }

    #[test]
    fn sgn_star_domain() {
        assert!(sgn_star(w(2), 1).is_err());
        assert!(sgn_star(w(4), 4).is_err());
    }

    #[test]
    fn sign_algebra() {
        use SignValue::*;
        assert_eq!(Minus * Minus, Plus);
        assert_eq!(-Plus, Minus);
        assert_eq!(SignValue::from_parity(7).as_f64(), -1.0);
    }

    #[test]
    fn sign_properties_small() {
        for tally in sign_properties(9) {
            assert!(tally.checked > 0, "{} never exercised", tally.name);
            assert!(tally.holds(), "{tally:?}");
        }
    }

    #[test]
    fn complement_and_even_parity_small() {
        assert!(complement_identity(10).holds());
        assert!(even_sgn_star_parity(12).holds());
    }
}
