//! Which TI tree of a given order has the largest Wiener index.
//!
//! For each order the dispatcher picks the case by perfect-square tests on
//! linear expressions in `n`, builds the predicted tree and certifies it by
//! recomputing transmissions directly.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::formulas::{is_perfect_square, wiener_branching, ClosedForm, SpectrumKind};
use crate::graph::{Tree, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    NoTiTree,
    Solved,
    Unresolved,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NoTiTree => "no-ti-tree",
            Verdict::Solved => "solved",
            Verdict::Unresolved => "unresolved",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    OddI,
    OddII,
    OddIII,
    OddIV,
    EvenI,
    EvenII,
    EvenIII,
    EvenIV,
    EvenSpecial14,
    EvenSpecial22,
    EvenSpecial24,
}

/// The two hypotheses under which even orders remain open.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnresolvedCondition {
    /// `4n - 7` is a perfect square.
    FourNMinus7,
    /// Neither `4n - 15` nor `4n - 7` is a square but `8n - 15` is.
    EightNMinus15,
}

impl fmt::Display for UnresolvedCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::FourNMinus7 => f.write_str("4n−7 is a perfect square"),
            Self::EightNMinus15 => f.write_str("8n−15 is a perfect square"),
        }
    }
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 11] = [
        Self::OddI,
        Self::OddII,
        Self::OddIII,
        Self::OddIV,
        Self::EvenI,
        Self::EvenII,
        Self::EvenIII,
        Self::EvenIV,
        Self::EvenSpecial14,
        Self::EvenSpecial22,
        Self::EvenSpecial24,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::OddI => "odd-i",
            Self::OddII => "odd-ii",
            Self::OddIII => "odd-iii",
            Self::OddIV => "odd-iv",
            Self::EvenI => "even-i",
            Self::EvenII => "even-ii",
            Self::EvenIII => "even-iii",
            Self::EvenIV => "even-iv",
            Self::EvenSpecial14 => "even-special-14",
            Self::EvenSpecial22 => "even-special-22",
            Self::EvenSpecial24 => "even-special-24",
        }
    }

    fn is_odd(self) -> bool {
        matches!(self, Self::OddI | Self::OddII | Self::OddIII | Self::OddIV)
    }

    /// The candidate tree this case names at order `n`.
    pub fn family(self, n: usize) -> Result<FamilySpec> {
        let wrong = |expected| Err(Error::ParityError { order: n, expected });
        if self.is_odd() && n % 2 == 0 {
            return wrong("odd");
        }
        if !self.is_odd() && n % 2 == 1 {
            return wrong("even");
        }
        let spec = match self {
            Self::OddI => {
                if n < 5 {
                    return Err(Error::PreconditionFailed(format!("odd-i needs n >= 5, got {n}")));
                }
                FamilySpec::Starlike(vec![(n - 1) / 2, (n - 3) / 2, 1])
            }
            Self::EvenI => {
                if n < 14 {
                    return Err(Error::PreconditionFailed(format!("even-i needs n >= 14, got {n}")));
                }
                FamilySpec::Starlike(vec![n / 2 - 1, n / 2 - 2, 2])
            }
            Self::OddII => SpectrumKind::OddII.family(n)?,
            Self::OddIII => SpectrumKind::OddIII.family(n)?,
            Self::OddIV => SpectrumKind::OddIV.family(n)?,
            Self::EvenII => SpectrumKind::EvenII.family(n)?,
            Self::EvenIII => SpectrumKind::EvenIII.family(n)?,
            Self::EvenIV => SpectrumKind::EvenIV.family(n)?,
            Self::EvenSpecial14 | Self::EvenSpecial22 | Self::EvenSpecial24 => {
                let (order, spec) = special(self);
                if n != order {
                    return Err(Error::PreconditionFailed(format!("{} applies only to n = {order}", self.as_str())));
                }
                spec
            }
        };
        Ok(spec)
    }

    fn spectrum(self) -> Option<SpectrumKind> {
        Some(match self {
            Self::OddII => SpectrumKind::OddII,
            Self::OddIII => SpectrumKind::OddIII,
            Self::OddIV => SpectrumKind::OddIV,
            Self::EvenI => SpectrumKind::EvenI,
            Self::EvenII => SpectrumKind::EvenII,
            Self::EvenIII => SpectrumKind::EvenIII,
            Self::EvenIV => SpectrumKind::EvenIV,
            _ => return None,
        })
    }

    fn closed_form(self) -> Option<ClosedForm> {
        Some(match self {
            Self::OddII => ClosedForm::OddCaseII,
            Self::OddIII => ClosedForm::OddCaseIII,
            Self::OddIV => ClosedForm::OddCaseIV,
            Self::EvenII => ClosedForm::EvenCaseII,
            Self::EvenIII => ClosedForm::EvenCaseIII,
            Self::EvenIV => ClosedForm::EvenCaseIV,
            _ => return None,
        })
    }
}

fn special(label: CaseLabel) -> (usize, FamilySpec) {
    match label {
        CaseLabel::EvenSpecial14 => (14, FamilySpec::variant(9, [(3, 1), (5, 1), (5, 3)])),
        CaseLabel::EvenSpecial22 => (22, FamilySpec::variant(17, [(11, 2), (13, 3)])),
        CaseLabel::EvenSpecial24 => (24, FamilySpec::variant(21, [(11, 2), (12, 1)])),
        _ => unreachable!("not a special case"),
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let want = s.trim().to_ascii_lowercase().replace('_', "-");
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == want)
            .ok_or_else(|| Error::Parse { position: 0, message: format!("unknown case '{s}'") })
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Directly recomputed evidence that a solved order is correct.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    /// The designated branching vertex `z0`.
    pub base_vertex: Vertex,
    pub base_transmission: i64,
    /// Sorted `Tr(v) - Tr(z0)` from direct transmissions.
    pub offsets: Vec<i64>,
    pub direct_wiener: i64,
    pub is_ti: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalOutcome {
    pub order: usize,
    pub verdict: Verdict,
    #[serde(rename = "case", skip_serializing_if = "Option::is_none")]
    pub case_label: Option<CaseLabel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition: Option<UnresolvedCondition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<FamilySpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_wiener: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_by: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

impl ExtremalOutcome {
    fn bare(order: usize, verdict: Verdict) -> Self {
        Self {
            order,
            verdict,
            case_label: None,
            condition: None,
            spec: None,
            predicted_wiener: None,
            predicted_by: None,
            certificate: None,
        }
    }

    pub fn tree(&self) -> Option<Tree> {
        self.spec.as_ref().map(|s| s.build().expect("dispatched specs are valid").tree)
    }

    fn solved(order: usize, label: CaseLabel) -> Result<Self> {
        let spec = label.family(order)?;
        let built = spec.build()?;
        let (predicted, by) = match label.closed_form() {
            Some(form) => {
                let v = form.evaluate(order)?;
                if form.family(order)? != spec {
                    return Err(Error::CertificateMismatch(format!("{form} describes a different tree at {order}")));
                }
                (v.value, form.id())
            }
            None => {
                let branches: Vec<_> = spec.branch_profile()?.into_iter().map(|b| b.1).collect();
                (wiener_branching(order, &branches)?, "branching")
            }
        };
        let profile = built.tree.transmission_profile();
        let base = match label.spectrum() {
            Some(kind) => kind.base_vertex(order)?,
            None => profile.min_vertex,
        };
        let offsets = profile.offsets_from(base);
        if let Some(kind) = label.spectrum() {
            let generated = kind.generate(order)?;
            if generated.offsets != offsets {
                return Err(Error::CertificateMismatch(format!("{kind} disagrees with direct offsets at {order}")));
            }
        }
        if built.tree.order() != order {
            return Err(Error::CertificateMismatch(format!("{spec} has order {}", built.tree.order())));
        }
        if profile.wiener != predicted {
            return Err(Error::CertificateMismatch(format!(
                "{spec}: predicted W = {predicted}, direct W = {}",
                profile.wiener
            )));
        }
        if !profile.is_ti {
            return Err(Error::CertificateMismatch(format!("{spec} is not TI")));
        }
        Ok(Self {
            order,
            verdict: Verdict::Solved,
            case_label: Some(label),
            condition: None,
            spec: Some(spec),
            predicted_wiener: Some(predicted),
            predicted_by: Some(by),
            certificate: Some(Certificate {
                base_vertex: base,
                base_transmission: profile.tr[base],
                offsets,
                direct_wiener: profile.wiener,
                is_ti: profile.is_ti,
                spectrum: label.spectrum().map(SpectrumKind::id),
            }),
        })
    }
}

impl fmt::Display for ExtremalOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.verdict {
            Verdict::NoTiTree => write!(f, "no TI tree of order {}", self.order),
            Verdict::Unresolved => match self.condition {
                Some(c) => write!(f, "unresolved ({c})"),
                None => f.write_str("unresolved"),
            },
            Verdict::Solved => {
                let case = self.case_label.map(CaseLabel::as_str).unwrap_or("?");
                let spec = self.spec.as_ref().map(ToString::to_string).unwrap_or_default();
                let w = self.predicted_wiener.unwrap_or_default();
                let ti = self.certificate.as_ref().is_some_and(|c| c.is_ti);
                write!(f, "{case} {spec} W={w} TI={}", if ti { "yes" } else { "no" })
            }
        }
    }
}

fn ps(m: i64) -> bool {
    is_perfect_square(m)
}

/// Truth values of the four odd-order case hypotheses.
pub fn odd_conditions(n: usize) -> [bool; 4] {
    let n = n as i64;
    let a = ps(n - 2) || ps(n - 1);
    let b = ps(2 * n - 6) || ps(2 * n - 2);
    [!a, a && !b, ps(n - 2) && b, ps(n - 1) && ps(2 * n - 6)]
}

/// Truth values of the four even-order case hypotheses, as stated in terms
/// of `n` only.
pub fn even_conditions(n: usize) -> [bool; 4] {
    let n = n as i64;
    let root = crate::formulas::exact_sqrt(4 * n - 15);
    let secondary = |r: i64| [8 * n - 23, 8 * n - 11 - 4 * r, 8 * n - 27 + 4 * r].into_iter().any(ps);
    [
        ![4 * n - 15, 4 * n - 7, 8 * n - 23, 8 * n - 15].into_iter().any(ps),
        root.is_some_and(|r| !secondary(r)),
        root.is_some_and(secondary),
        !ps(4 * n - 15) && !ps(4 * n - 7) && ps(8 * n - 23),
    ]
}

/// The hypothesis under which an even order is left open, if any.
pub fn unresolved_condition(n: usize) -> Option<UnresolvedCondition> {
    let n = n as i64;
    if ps(4 * n - 7) {
        Some(UnresolvedCondition::FourNMinus7)
    } else if !ps(4 * n - 15) && ps(8 * n - 15) {
        Some(UnresolvedCondition::EightNMinus15)
    } else {
        None
    }
}

pub fn odd_extremal(n: usize) -> Result<ExtremalOutcome> {
    if n % 2 == 0 {
        return Err(Error::ParityError { order: n, expected: "odd" });
    }
    if n < 7 {
        return Ok(ExtremalOutcome::bare(n, Verdict::NoTiTree));
    }
    let n_ = n as i64;
    let label = if !ps(n_ - 2) && !ps(n_ - 1) {
        CaseLabel::OddI
    } else if !ps(2 * n_ - 6) && !ps(2 * n_ - 2) {
        CaseLabel::OddII
    } else if ps(n_ - 2) {
        CaseLabel::OddIII
    } else {
        CaseLabel::OddIV
    };
    ExtremalOutcome::solved(n, label)
}

pub fn even_extremal(n: usize) -> Result<ExtremalOutcome> {
    if n % 2 == 1 {
        return Err(Error::ParityError { order: n, expected: "even" });
    }
    if n < 14 {
        return Ok(ExtremalOutcome::bare(n, Verdict::NoTiTree));
    }
    let label = match n {
        14 => CaseLabel::EvenSpecial14,
        22 => CaseLabel::EvenSpecial22,
        24 => CaseLabel::EvenSpecial24,
        _ => {
            if let Some(c) = unresolved_condition(n) {
                return Ok(ExtremalOutcome { condition: Some(c), ..ExtremalOutcome::bare(n, Verdict::Unresolved) });
            }
            let n_ = n as i64;
            match crate::formulas::exact_sqrt(4 * n_ - 15) {
                Some(r) => {
                    let k = (r - 1) / 2;
                    let hit = [8 * k * k + 17, 8 * k * k + 8 * k + 9, 8 * k * k + 16 * k + 9].into_iter().any(ps);
                    if hit {
                        CaseLabel::EvenIII
                    } else {
                        CaseLabel::EvenII
                    }
                }
                None if ps(8 * n_ - 23) => CaseLabel::EvenIV,
                None => CaseLabel::EvenI,
            }
        }
    };
    ExtremalOutcome::solved(n, label)
}

/// Dispatches on parity.
pub fn extremal(n: usize) -> Result<ExtremalOutcome> {
    if n == 0 {
        return Err(Error::PreconditionFailed("order must be at least 1".into()));
    }
    if n % 2 == 1 {
        odd_extremal(n)
    } else {
        even_extremal(n)
    }
}

/// A TI characterization evaluated from perfect-square tests alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiCondition {
    pub case: CaseLabel,
    pub n: usize,
    pub holds: bool,
    /// Each tested quantity and whether it is a perfect square.
    pub tested: Vec<(String, i64, bool)>,
    pub reason: String,
}

/// Whether the tree named by `case` at order `n` is TI, decided by the
/// perfect-square characterization rather than by computing transmissions.
pub fn ti_condition(case: CaseLabel, n: usize) -> Result<TiCondition> {
    case.family(n)?;
    let n_ = n as i64;
    let pre = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::PreconditionFailed(format!("{case} at n = {n}: {what}")))
        }
    };
    let k = || (crate::formulas::exact_sqrt(4 * n_ - 15).unwrap_or(1) - 1) / 2;
    let tested: Vec<(String, i64)> = match case {
        CaseLabel::OddI => vec![("n-2".into(), n_ - 2), ("n-1".into(), n_ - 1)],
        CaseLabel::OddII => {
            vec![("n-4".into(), n_ - 4), ("n".into(), n_), ("2n-6".into(), 2 * n_ - 6), ("2n-2".into(), 2 * n_ - 2)]
        }
        CaseLabel::OddIII | CaseLabel::OddIV => Vec::new(),
        CaseLabel::EvenI => vec![
            ("4n-15".into(), 4 * n_ - 15),
            ("4n-7".into(), 4 * n_ - 7),
            ("8n-23".into(), 8 * n_ - 23),
            ("8n-15".into(), 8 * n_ - 15),
        ],
        CaseLabel::EvenII => {
            let k = k();
            vec![
                ("8k^2+17".into(), 8 * k * k + 17),
                ("8k^2+8k+9".into(), 8 * k * k + 8 * k + 9),
                ("8k^2+16k+9".into(), 8 * k * k + 16 * k + 9),
            ]
        }
        CaseLabel::EvenIII => {
            let k = k();
            vec![
                ("8k^2-8k+25".into(), 8 * k * k - 8 * k + 25),
                ("8k^2+9".into(), 8 * k * k + 9),
                ("8k^2+16k+1".into(), 8 * k * k + 16 * k + 1),
            ]
        }
        CaseLabel::EvenIV => {
            pre(!ps(4 * n_ - 15) && !ps(4 * n_ - 7), "needs 4n-15 and 4n-7 to be non-squares")?;
            Vec::new()
        }
        _ => return Err(Error::PreconditionFailed(format!("{case} has no square characterization"))),
    };
    let tested: Vec<(String, i64, bool)> = tested.into_iter().map(|(name, v)| (name, v, ps(v))).collect();
    let squares: Vec<String> = tested.iter().filter(|t| t.2).map(|t| format!("{}={}", t.0, t.1)).collect();
    let holds = squares.is_empty();
    let reason = if tested.is_empty() {
        "TI for every admissible order".to_string()
    } else if holds {
        "none of the tested values is a perfect square".to_string()
    } else {
        format!("perfect square: {}", squares.join(", "))
    };
    Ok(TiCondition { case, n, holds, tested, reason })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dichotomy {
    pub n: usize,
    pub k: i64,
    pub case_ii_ti: bool,
    pub case_iii_ti: bool,
}

/// For even `n >= 34` with `4n - 15` square, checks directly that at least
/// one of the two square-case trees is TI.
pub fn square_dichotomy(n: usize) -> Result<Dichotomy> {
    if n % 2 == 1 {
        return Err(Error::ParityError { order: n, expected: "even" });
    }
    let r = crate::formulas::exact_sqrt(4 * n as i64 - 15);
    let Some(r) = r.filter(|_| n >= 34) else {
        return Err(Error::PreconditionFailed(format!("needs even n >= 34 with 4n-15 square, got {n}")));
    };
    let ti = |label: CaseLabel| -> Result<bool> { Ok(label.family(n)?.build()?.tree.is_ti()) };
    let d = Dichotomy { n, k: (r - 1) / 2, case_ii_ti: ti(CaseLabel::EvenII)?, case_iii_ti: ti(CaseLabel::EvenIII)? };
    if !d.case_ii_ti && !d.case_iii_ti {
        return Err(Error::DichotomyViolated(n));
    }
    Ok(d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TreeType {
    A,
    B,
    Other,
}

/// Type A: the minimum-transmission vertex has degree 3 with components of
/// orders `(n-1)/2, (n-3)/2, 1`. Type B: orders `(n-1)/2, (n-5)/2, 2`.
pub fn classify_type(t: &Tree) -> Result<TreeType> {
    let n = t.order();
    if n % 2 == 0 {
        return Err(Error::ParityError { order: n, expected: "odd" });
    }
    let profile = t.transmission_profile();
    if !profile.is_ti {
        return Err(Error::NotTi);
    }
    let v = profile.min_vertex;
    if t.degree(v)? != 3 {
        return Ok(TreeType::Other);
    }
    let mut sizes = t.decompose_at(v)?;
    sizes.sort_unstable();
    let sorted = |mut s: [usize; 3]| {
        s.sort_unstable();
        s
    };
    if n >= 3 && sizes == sorted([(n - 1) / 2, (n - 3) / 2, 1]) {
        return Ok(TreeType::A);
    }
    if n >= 5 && sizes == sorted([(n - 1) / 2, (n - 5) / 2, 2]) {
        return Ok(TreeType::B);
    }
    Ok(TreeType::Other)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize) -> String {
        extremal(n).unwrap().spec.unwrap().to_string()
    }

    #[test]
    fn odd_examples() {
        let o = odd_extremal(7).unwrap();
        assert_eq!((o.case_label, o.spec.clone()), (Some(CaseLabel::OddI), Some(FamilySpec::starlike([3, 2, 1]))));
        let o = odd_extremal(11).unwrap();
        assert_eq!(o.to_string(), "odd-iii C(9; 5,7) W=186 TI=yes");
        assert_eq!(odd_extremal(17).unwrap().case_label, Some(CaseLabel::OddII));
        assert_eq!(spec(17), "S(8,6,2)");
        assert_eq!(odd_extremal(101).unwrap().case_label, Some(CaseLabel::OddIV));
        assert_eq!(spec(101), "C(99; 51,59)");
        assert_eq!(odd_extremal(5).unwrap().verdict, Verdict::NoTiTree);
        assert!(matches!(odd_extremal(8), Err(Error::ParityError { .. })));
    }

    #[test]
    fn even_examples() {
        assert_eq!(spec(14), "CV(9; 3:1, 5:1, 5:3)");
        assert_eq!(
            (even_extremal(16).unwrap().case_label, spec(16)),
            (Some(CaseLabel::EvenII), "CV(13; 7:2, 9:1)".into())
        );
        assert_eq!(
            (even_extremal(18).unwrap().case_label, spec(18)),
            (Some(CaseLabel::EvenIV), "CV(15; 8:2, 12:1)".into())
        );
        assert_eq!((even_extremal(20).unwrap().case_label, spec(20)), (Some(CaseLabel::EvenI), "S(9,8,2)".into()));
        assert_eq!(spec(22), "CV(17; 11:2, 13:3)");
        assert_eq!(spec(24), "CV(21; 11:2, 12:1)");
        assert_eq!(
            (even_extremal(34).unwrap().case_label, spec(34)),
            (Some(CaseLabel::EvenIII), "CV(31; 16:2, 19:1)".into())
        );
        let o = even_extremal(30).unwrap();
        assert_eq!((o.verdict, o.condition), (Verdict::Unresolved, Some(UnresolvedCondition::EightNMinus15)));
        assert_eq!(o.to_string(), "unresolved (8n−15 is a perfect square)");
        let o = even_extremal(32).unwrap();
        assert_eq!((o.verdict, o.condition), (Verdict::Unresolved, Some(UnresolvedCondition::FourNMinus7)));
        assert_eq!(even_extremal(12).unwrap().verdict, Verdict::NoTiTree);
    }

    #[test]
    fn ti_conditions() {
        assert!(ti_condition(CaseLabel::OddI, 9).unwrap().holds);
        assert!(!ti_condition(CaseLabel::OddII, 11).unwrap().holds);
        assert!(!ti_condition(CaseLabel::EvenI, 14).unwrap().holds);
        assert!(matches!(ti_condition(CaseLabel::EvenSpecial14, 14), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn dichotomy() {
        let d = square_dichotomy(34).unwrap();
        assert!(d.case_iii_ti);
        assert!(matches!(square_dichotomy(40), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn types() {
        let t = FamilySpec::caterpillar(9, [5, 7]).build().unwrap().tree;
        assert_eq!(classify_type(&t).unwrap(), TreeType::A);
        let t = FamilySpec::starlike([8, 6, 2]).build().unwrap().tree;
        assert_eq!(classify_type(&t).unwrap(), TreeType::B);
        let t = FamilySpec::starlike([3, 2, 1]).build().unwrap().tree;
        assert_eq!(classify_type(&t).unwrap(), TreeType::A);
        let t = crate::graph::path(5).unwrap();
        assert_eq!(classify_type(&t), Err(Error::NotTi));
    }
}
