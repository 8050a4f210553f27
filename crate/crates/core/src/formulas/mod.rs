//! Exact integer formulas: perfect squares, general Wiener identities, the
//! closed forms for the extremal families and their transmission spectra.

mod closed;
mod spectrum;

pub use closed::{ClosedForm, ClosedFormValue};
pub use spectrum::{SpectrumKind, SpectrumOffsets};

use crate::error::{Error, Result};

/// Floor of the square root of a non-negative integer.
pub fn integer_sqrt(m: u64) -> u64 {
    m.isqrt()
}

/// `Some(r)` when `m = r * r`.
pub fn exact_sqrt(m: i64) -> Option<i64> {
    if m < 0 {
        return None;
    }
    let r = (m as u64).isqrt();
    (r * r == m as u64).then_some(r as i64)
}

pub fn is_perfect_square(m: i64) -> bool {
    exact_sqrt(m).is_some()
}

fn binom3(m: i128) -> i128 {
    if m < 3 {
        0
    } else {
        m * (m - 1) * (m - 2) / 6
    }
}

fn narrow(value: i128, what: &str) -> Result<i64> {
    i64::try_from(value).map_err(|_| Error::Overflow(what.to_string()))
}

/// `W(P_n) = C(n + 1, 3)`.
pub fn wiener_path(n: usize) -> Result<i64> {
    if n == 0 {
        return Err(Error::PreconditionFailed("path order must be at least 1".into()));
    }
    narrow(binom3(n as i128 + 1), "wiener_path")
}

/// Wiener index of the tree obtained by identifying `v1` in a graph of
/// order `n1` with `v2` in a graph of order `n2`.
pub fn wiener_fusion(w1: i64, w2: i64, n1: i64, n2: i64, tr1: i64, tr2: i64) -> Result<i64> {
    if [w1, w2, n1, n2, tr1, tr2].iter().any(|&x| x < 0) {
        return Err(Error::PreconditionFailed("fusion arguments must be non-negative".into()));
    }
    let (n1, n2) = (n1.max(1), n2.max(1));
    let value = w1 as i128 + w2 as i128 + (n1 as i128 - 1) * tr2 as i128 + (n2 as i128 - 1) * tr1 as i128;
    narrow(value, "wiener_fusion")
}

/// `C(n + 1, 3)` minus, for every branching vertex, the third elementary
/// symmetric sum of the orders of its components.
pub fn wiener_branching(n: usize, branches: &[Vec<usize>]) -> Result<i64> {
    if n == 0 {
        return Err(Error::PreconditionFailed("order must be at least 1".into()));
    }
    let mut total = binom3(n as i128 + 1);
    for sizes in branches {
        if sizes.iter().sum::<usize>() != n - 1 {
            return Err(Error::InconsistentSizes(format!("component sizes {sizes:?} do not sum to {}", n - 1)));
        }
        if sizes.contains(&0) {
            return Err(Error::InconsistentSizes(format!("empty component in {sizes:?}")));
        }
        // e1, e2, e3 by the usual running update
        let (mut e1, mut e2, mut e3) = (0i128, 0i128, 0i128);
        for &s in sizes {
            let s = s as i128;
            e3 += e2 * s;
            e2 += e1 * s;
            e1 += s;
        }
        total -= e3;
    }
    narrow(total, "wiener_branching")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares() {
        assert!(is_perfect_square(49));
        assert!(!is_perfect_square(48));
        assert!(is_perfect_square(4 * 32 - 7));
        assert!(is_perfect_square(0));
        assert!(!is_perfect_square(-4));
        assert_eq!(exact_sqrt(121), Some(11));
        assert_eq!(integer_sqrt(u64::MAX), 4294967295);
        let big = 3_037_000_499i64;
        assert_eq!(exact_sqrt(big * big), Some(big));
        assert_eq!(exact_sqrt(big * big - 1), None);
    }

    #[test]
    fn path_values() {
        assert_eq!(wiener_path(1).unwrap(), 0);
        assert_eq!(wiener_path(4).unwrap(), 10);
        assert_eq!(wiener_path(5).unwrap(), 20);
        assert_eq!(wiener_path(100_000).unwrap(), 166_666_666_650_000);
    }

    #[test]
    fn fusion_values() {
        assert_eq!(wiener_fusion(1, 1, 2, 2, 1, 1).unwrap(), 4);
        assert_eq!(wiener_fusion(10, 1, 4, 2, 6, 1).unwrap(), 20);
        assert_eq!(wiener_fusion(0, 0, 1, 1, 0, 0).unwrap(), 0);
    }

    #[test]
    fn branching_values() {
        assert_eq!(wiener_branching(4, &[vec![1, 1, 1]]).unwrap(), 9);
        assert_eq!(wiener_branching(11, &[vec![4, 1, 5], vec![7, 1, 2]]).unwrap(), 186);
        assert_eq!(wiener_branching(16, &[vec![6, 2, 7], vec![10, 1, 4]]).unwrap(), 556);
        assert!(matches!(wiener_branching(5, &[vec![1, 1, 1]]), Err(Error::InconsistentSizes(_))));
    }
}
