use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::exact_sqrt;
use crate::error::{Error, Result};
use crate::families::FamilySpec;

/// Closed-form Wiener indices of the trees that appear in the extremal
/// case analysis. Each form is a function of the order `n` alone; any
/// auxiliary parameters are derived from `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosedForm {
    /// `S((n-1)/2, (n-5)/2, 2)`
    OddCaseII,
    /// `S((n-1)/2, (n-7)/2, 3)`
    OddS3,
    /// `C_{n-2}((n-1)/2, (n-3)/2 + sqrt(n-2))`
    OddCaseIII,
    /// `C_{n-2}((n+1)/2, (n-3)/2 + sqrt(n-1))`
    OddCaseIV,
    /// `S(n/2-1, n/2-4, 4)`
    EvenS4,
    /// `C_{n-4}(n/2-2, 3; n/2-1, 1)`
    EvenAuxCat,
    /// `C_{n-3}(n/2-1, 2; n/2+k-2, 1)` with `k = (sqrt(4n-15)-1)/2`
    EvenCaseII,
    /// `C_{n-3}(n/2-1, 2; n/2+k-3, 1)`
    EvenCaseIII,
    /// `C_{n-4}(n/2-1, 2; n/2+k-2, 2)`
    EvenDoubleB2,
    /// `C_{n-4}(n/2-2, 2; n/2+k-3, 1; n/2-l-1, 1)` with `8k^2+17 = (2l+3)^2`
    EvenCase3KEll,
    /// `C_{n-4}(n/2-1, 2; n/2+k-2, 1; n/2+l-2, 1)` with `8k^2+8k+9 = (2l+3)^2`
    EvenCase3b,
    /// Same shape as [`ClosedForm::EvenCase3b`] with `8k^2+16k+9 = (2l+3)^2`
    EvenCase3c,
    /// `C_{n-3}(n/2-1, 2; n/2+k-2, 1)` with `k = (sqrt(8n-23)-1)/2`
    EvenCaseIV,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormValue {
    pub id: &'static str,
    pub n: usize,
    pub value: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<i64>,
}

#[derive(Clone, Copy, Default)]
struct Params {
    root: i64,
    k: Option<i64>,
    ell: Option<i64>,
}

fn fail<T>(form: ClosedForm, msg: impl fmt::Display) -> Result<T> {
    Err(Error::PreconditionFailed(format!("{}: {msg}", form.id())))
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 13] = [
        Self::OddCaseII,
        Self::OddS3,
        Self::OddCaseIII,
        Self::OddCaseIV,
        Self::EvenS4,
        Self::EvenAuxCat,
        Self::EvenCaseII,
        Self::EvenCaseIII,
        Self::EvenDoubleB2,
        Self::EvenCase3KEll,
        Self::EvenCase3b,
        Self::EvenCase3c,
        Self::EvenCaseIV,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Self::OddCaseII => "odd_case_ii_W",
            Self::OddS3 => "odd_S3_W",
            Self::OddCaseIII => "odd_case_iii_W",
            Self::OddCaseIV => "odd_case_iv_W",
            Self::EvenS4 => "even_S4_W",
            Self::EvenAuxCat => "even_aux_cat_W",
            Self::EvenCaseII => "even_case_ii_W",
            Self::EvenCaseIII => "even_case_iii_W",
            Self::EvenDoubleB2 => "even_double_b2_W",
            Self::EvenCase3KEll => "even_case3_k_ell_W",
            Self::EvenCase3b => "even_case3b_W",
            Self::EvenCase3c => "even_case3c_W",
            Self::EvenCaseIV => "even_case_iv_W",
        }
    }

    fn is_odd_form(self) -> bool {
        matches!(self, Self::OddCaseII | Self::OddS3 | Self::OddCaseIII | Self::OddCaseIV)
    }

    fn min_order(self) -> usize {
        match self {
            Self::OddCaseII => 7,
            Self::OddS3 => 9,
            Self::OddCaseIII => 11,
            Self::OddCaseIV => 17,
            _ => 14,
        }
    }

    /// Checks parity, the lower bound on `n` and the square conditions, and
    /// derives the auxiliary parameters.
    fn params(self, n: usize) -> Result<Params> {
        if n as u64 > 100_000 {
            return fail(self, format!("order {n} is beyond the supported range"));
        }
        let odd = n % 2 == 1;
        if odd != self.is_odd_form() {
            return fail(self, format!("order {n} has the wrong parity"));
        }
        if n < self.min_order() {
            return fail(self, format!("order {n} is below {}", self.min_order()));
        }
        let n = n as i64;
        let root_of = |m: i64, what: &str| match exact_sqrt(m) {
            Some(r) => Ok(r),
            None => fail(self, format!("{what} = {m} is not a perfect square")),
        };
        let p = match self {
            Self::OddCaseII | Self::OddS3 | Self::EvenS4 | Self::EvenAuxCat => Params::default(),
            Self::OddCaseIII => {
                let r = root_of(n - 2, "n-2")?;
                Params { root: r, k: Some(r), ell: None }
            }
            Self::OddCaseIV => {
                let r = root_of(n - 1, "n-1")?;
                Params { root: r, k: Some(r), ell: None }
            }
            Self::EvenCaseII | Self::EvenCaseIII | Self::EvenDoubleB2 => {
                let r = root_of(4 * n - 15, "4n-15")?;
                Params { root: r, k: Some((r - 1) / 2), ell: None }
            }
            Self::EvenCase3KEll | Self::EvenCase3b | Self::EvenCase3c => {
                let r = root_of(4 * n - 15, "4n-15")?;
                let k = (r - 1) / 2;
                let (m, what) = match self {
                    Self::EvenCase3KEll => (8 * k * k + 17, "8k^2+17"),
                    Self::EvenCase3b => (8 * k * k + 8 * k + 9, "8k^2+8k+9"),
                    _ => (8 * k * k + 16 * k + 9, "8k^2+16k+9"),
                };
                let s = root_of(m, what)?;
                Params { root: r, k: Some(k), ell: Some((s - 3) / 2) }
            }
            Self::EvenCaseIV => {
                let r = root_of(8 * n - 23, "8n-23")?;
                Params { root: r, k: Some((r - 1) / 2), ell: None }
            }
        };
        Ok(p)
    }

    /// The tree whose Wiener index this form computes.
    pub fn family(self, n: usize) -> Result<FamilySpec> {
        let p = self.params(n)?;
        let spec = self.family_with(n, p)?;
        match spec.order() {
            Ok(order) if order == n => Ok(spec),
            Ok(order) => fail(self, format!("family {spec} has order {order}, not {n}")),
            Err(e) => fail(self, format!("no valid family at order {n}: {e}")),
        }
    }

    fn family_with(self, n: usize, p: Params) -> Result<FamilySpec> {
        let h = n as i64 / 2;
        let k = p.k.unwrap_or(0);
        let l = p.ell.unwrap_or(0);
        let pos = |x: i64| -> Result<usize> {
            usize::try_from(x).or_else(|_| fail(self, format!("position {x} is negative at order {n}")))
        };
        let n_ = n as i64;
        Ok(match self {
            Self::OddCaseII => FamilySpec::Starlike(vec![(n - 1) / 2, (n - 5) / 2, 2]),
            Self::OddS3 => FamilySpec::Starlike(vec![(n - 1) / 2, (n - 7) / 2, 3]),
            Self::OddCaseIII => FamilySpec::caterpillar(n - 2, [pos((n_ - 1) / 2)?, pos((n_ - 3) / 2 + p.root)?]),
            Self::OddCaseIV => FamilySpec::caterpillar(n - 2, [pos((n_ + 1) / 2)?, pos((n_ - 3) / 2 + p.root)?]),
            Self::EvenS4 => FamilySpec::Starlike(vec![pos(h - 1)?, pos(h - 4)?, 4]),
            Self::EvenAuxCat => FamilySpec::variant(n - 4, [(pos(h - 2)?, 3), (pos(h - 1)?, 1)]),
            Self::EvenCaseII | Self::EvenCaseIV => FamilySpec::variant(n - 3, [(pos(h - 1)?, 2), (pos(h + k - 2)?, 1)]),
            Self::EvenCaseIII => FamilySpec::variant(n - 3, [(pos(h - 1)?, 2), (pos(h + k - 3)?, 1)]),
            Self::EvenDoubleB2 => FamilySpec::variant(n - 4, [(pos(h - 1)?, 2), (pos(h + k - 2)?, 2)]),
            Self::EvenCase3KEll => {
                FamilySpec::variant(n - 4, [(pos(h - 2)?, 2), (pos(h + k - 3)?, 1), (pos(h - l - 1)?, 1)])
            }
            Self::EvenCase3b | Self::EvenCase3c => {
                FamilySpec::variant(n - 4, [(pos(h - 1)?, 2), (pos(h + k - 2)?, 1), (pos(h + l - 2)?, 1)])
            }
        })
    }

    /// Whether `n` satisfies the form's preconditions and yields a valid
    /// family of order `n`.
    pub fn is_defined(self, n: usize) -> bool {
        self.family(n).is_ok()
    }

    pub fn evaluate(self, n: usize) -> Result<ClosedFormValue> {
        self.family(n)?;
        let p = self.params(n)?;
        let x = n as i128;
        let (x2, x3) = (x * x, x * x * x);
        let r = p.root as i128;
        let k = p.k.unwrap_or(0) as i128;
        let l = p.ell.unwrap_or(0) as i128;
        let (numerator, denominator) = match self {
            Self::OddCaseII => (x3 - 3 * x2 + 17 * x - 15, 6),
            Self::OddS3 => (2 * x3 - 9 * x2 + 70 * x - 63, 12),
            Self::OddCaseIII => (x3 - 3 * x2 + 17 * x - 6 * r - 21, 6),
            Self::OddCaseIV => (x3 - 3 * x2 + 17 * x - 6 * r - 15, 6),
            Self::EvenS4 => (x3 - 6 * x2 + 59 * x - 96, 6),
            Self::EvenAuxCat => (x3 - 6 * x2 + 41 * x - 36, 6),
            Self::EvenCaseII => (2 * x3 - 9 * x2 + 58 * x - 102 - 6 * r, 12),
            Self::EvenCaseIII => (2 * x3 - 9 * x2 + 58 * x - 78 - 18 * r, 12),
            Self::EvenDoubleB2 => (x3 - 6 * x2 + 47 * x - 96, 6),
            Self::EvenCase3KEll => (x3 - 6 * x2 + 47 * x - 90 - 18 * k - 6 * l, 6),
            Self::EvenCase3b => (x3 - 6 * x2 + 47 * x - 102 - 6 * k - 6 * l, 6),
            Self::EvenCase3c => (x3 - 6 * x2 + 47 * x - 102 + 6 * k - 6 * l, 6),
            Self::EvenCaseIV => (2 * x3 - 9 * x2 + 70 * x - 126 - 6 * r, 12),
        };
        if numerator % denominator != 0 {
            return Err(Error::NonIntegerResult(format!(
                "{} at n = {n}: {numerator} is not divisible by {denominator}",
                self.id()
            )));
        }
        let value = i64::try_from(numerator / denominator).map_err(|_| Error::Overflow(self.id().into()))?;
        Ok(ClosedFormValue { id: self.id(), n, value, k: p.k, ell: p.ell })
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ClosedForm {
    type Err = Error;

    /// Accepts the id with or without the trailing `_W`, in any case.
    fn from_str(s: &str) -> Result<Self> {
        let want = s.trim().to_ascii_lowercase();
        let want = want.strip_suffix("_w").unwrap_or(&want);
        Self::ALL
            .into_iter()
            .find(|f| f.id().to_ascii_lowercase().strip_suffix("_w") == Some(want))
            .ok_or_else(|| Error::Parse { position: 0, message: format!("unknown formula '{s}'") })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(f: ClosedForm, n: usize) -> i64 {
        f.evaluate(n).unwrap().value
    }

    #[test]
    fn reference_values() {
        assert_eq!(value(ClosedForm::OddCaseII, 7), 50);
        assert_eq!(value(ClosedForm::OddCaseIII, 11), 186);
        assert_eq!(value(ClosedForm::EvenCaseII, 16), 556);
        assert_eq!(value(ClosedForm::EvenCaseIV, 18), 818);
        assert_eq!(value(ClosedForm::EvenS4, 14), 383);
    }

    #[test]
    fn families_match_direct_wiener_on_small_orders() {
        for f in ClosedForm::ALL {
            for n in 1..400 {
                if let Ok(v) = f.evaluate(n) {
                    let tree = f.family(n).unwrap().build().unwrap().tree;
                    assert_eq!(tree.wiener_pairwise(), v.value, "{f} at {n}");
                }
            }
        }
    }

    #[test]
    fn exposes_parameters() {
        let v = ClosedForm::EvenCaseII.evaluate(16).unwrap();
        assert_eq!((v.k, v.ell), (Some(3), None));
        assert_eq!(ClosedForm::EvenCaseIV.family(18).unwrap(), FamilySpec::variant(15, [(8, 2), (12, 1)]));
    }

    #[test]
    fn preconditions() {
        assert!(matches!(ClosedForm::OddCaseII.evaluate(8), Err(Error::PreconditionFailed(_))));
        assert!(matches!(ClosedForm::OddCaseIII.evaluate(13), Err(Error::PreconditionFailed(_))));
        assert!(matches!(ClosedForm::EvenCaseII.evaluate(18), Err(Error::PreconditionFailed(_))));
        assert!(matches!(ClosedForm::OddCaseIV.evaluate(5), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn names() {
        for f in ClosedForm::ALL {
            assert_eq!(f.id().parse::<ClosedForm>().unwrap(), f);
        }
        assert_eq!("even_case_ii".parse::<ClosedForm>().unwrap(), ClosedForm::EvenCaseII);
        assert!("nope".parse::<ClosedForm>().is_err());
    }
}
