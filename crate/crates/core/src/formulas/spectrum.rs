use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::exact_sqrt;
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Vertex;

/// Transmission spectra of the candidate extremal trees, relative to a
/// designated branching vertex `z0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpectrumKind {
    OddII,
    OddIII,
    OddIV,
    EvenI,
    EvenII,
    EvenIII,
    EvenIV,
}

/// `Tr(v) - Tr(z0)` over all vertices, sorted ascending. Kept as a
/// multiset so a repeated value shows up as a repeat.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumOffsets {
    pub kind: &'static str,
    pub n: usize,
    pub base: Vertex,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    pub offsets: Vec<i64>,
}

impl SpectrumOffsets {
    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn is_distinct(&self) -> bool {
        self.offsets.windows(2).all(|w| w[0] != w[1])
    }

    /// Values occurring more than once.
    pub fn repeats(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.offsets.windows(2).filter(|w| w[0] == w[1]).map(|w| w[0]).collect();
        out.dedup();
        out
    }
}

fn squares(r: std::ops::RangeInclusive<i64>) -> impl Iterator<Item = i64> {
    r.map(|i| i * i)
}

impl SpectrumKind {
    pub const ALL: [SpectrumKind; 7] =
        [Self::OddII, Self::OddIII, Self::OddIV, Self::EvenI, Self::EvenII, Self::EvenIII, Self::EvenIV];

    pub fn id(self) -> &'static str {
        match self {
            Self::OddII => "spectrum_odd_ii",
            Self::OddIII => "spectrum_odd_iii",
            Self::OddIV => "spectrum_odd_iv",
            Self::EvenI => "spectrum_even_i",
            Self::EvenII => "spectrum_even_ii",
            Self::EvenIII => "spectrum_even_iii",
            Self::EvenIV => "spectrum_even_iv",
        }
    }

    fn fail<T>(self, msg: impl fmt::Display) -> Result<T> {
        Err(Error::PreconditionFailed(format!("{}: {msg}", self.id())))
    }

    /// The auxiliary root (`k`) for the kinds that need one.
    fn k(self, n: usize) -> Result<Option<i64>> {
        let odd = n % 2 == 1;
        let is_odd_kind = matches!(self, Self::OddII | Self::OddIII | Self::OddIV);
        if odd != is_odd_kind {
            return self.fail(format!("order {n} has the wrong parity"));
        }
        if n > 100_000 {
            return self.fail(format!("order {n} is beyond the supported range"));
        }
        let min = match self {
            Self::OddII => 7,
            Self::OddIII => 11,
            Self::OddIV => 17,
            _ => 14,
        };
        if n < min {
            return self.fail(format!("order {n} is below {min}"));
        }
        let n_ = n as i64;
        let root = |m: i64, what: &str| match exact_sqrt(m) {
            Some(r) => Ok(r),
            None => self.fail(format!("{what} = {m} is not a perfect square")),
        };
        Ok(match self {
            Self::OddII | Self::EvenI => None,
            Self::OddIII => Some(root(n_ - 2, "n-2")?),
            Self::OddIV => Some(root(n_ - 1, "n-1")?),
            Self::EvenII | Self::EvenIII => Some((root(4 * n_ - 15, "4n-15")? - 1) / 2),
            Self::EvenIV => Some((root(8 * n_ - 23, "8n-23")? - 1) / 2),
        })
    }

    pub fn is_defined(self, n: usize) -> bool {
        self.k(n).is_ok()
    }

    /// The tree the spectrum describes.
    pub fn family(self, n: usize) -> Result<FamilySpec> {
        let k = self.k(n)?.unwrap_or(0) as usize;
        let h = n / 2;
        Ok(match self {
            Self::OddII => FamilySpec::Starlike(vec![(n - 1) / 2, (n - 5) / 2, 2]),
            Self::OddIII => FamilySpec::caterpillar(n - 2, [(n - 1) / 2, (n - 3) / 2 + k]),
            Self::OddIV => FamilySpec::caterpillar(n - 2, [n.div_ceil(2), (n - 3) / 2 + k]),
            Self::EvenI => FamilySpec::Starlike(vec![h - 1, h - 2, 2]),
            Self::EvenII | Self::EvenIV => FamilySpec::variant(n - 3, [(h - 1, 2), (h + k - 2, 1)]),
            Self::EvenIII => FamilySpec::variant(n - 3, [(h - 1, 2), (h + k - 3, 1)]),
        })
    }

    /// Label of `z0` in the built family tree.
    pub fn base_vertex(self, n: usize) -> Result<Vertex> {
        self.k(n)?;
        Ok(match self {
            Self::OddII | Self::EvenI => 0,
            Self::OddIII => (n - 1) / 2 - 1,
            Self::OddIV => n.div_ceil(2) - 1,
            Self::EvenII | Self::EvenIII | Self::EvenIV => n / 2 - 2,
        })
    }

    pub fn generate(self, n: usize) -> Result<SpectrumOffsets> {
        let k_opt = self.k(n)?;
        let k = k_opt.unwrap_or(0);
        let n_ = n as i64;
        let mut offsets: Vec<i64> = Vec::with_capacity(n);
        match self {
            Self::OddII => {
                offsets.extend([0, n_ - 4, 2 * n_ - 6]);
                offsets.extend(squares(1..=(n_ - 1) / 2));
                offsets.extend((1..=(n_ - 5) / 2).map(|j| j * (j + 4)));
            }
            Self::OddIII => {
                let top = (n_ - 3) / 2;
                offsets.extend([0, k * k, 2 * k * k - 2 * k + 1]);
                offsets.extend((1..=top).map(|i| i * (i + 2)));
                offsets.extend(squares(1..=k - 1));
                offsets.extend((k..=top).map(|j| j * (j + 2) - 2 * k + 2));
            }
            Self::OddIV => {
                offsets.extend([0, k * k - 1, 2 * k * k - 2 * k - 1]);
                offsets.extend(squares(1..=(n_ - 1) / 2));
                offsets.extend((1..=k - 2).map(|j| j * (j + 2)));
                offsets.extend((k - 1..=(n_ - 5) / 2).map(|j| j * (j + 4) - 2 * k + 4));
            }
            Self::EvenI => {
                offsets.extend([0, n_ - 4, 2 * n_ - 6]);
                offsets.extend((1..=n_ / 2 - 2).map(|x| x * x + 3 * x));
                offsets.extend((1..=n_ / 2 - 1).map(|y| y * y + y));
            }
            Self::EvenII | Self::EvenIV => even_caterpillar(n_, k - 1, &mut offsets),
            Self::EvenIII => even_caterpillar(n_, k - 2, &mut offsets),
        }
        debug_assert_eq!(offsets.len(), n);
        offsets.sort_unstable();
        Ok(SpectrumOffsets { kind: self.id(), n, base: self.base_vertex(n)?, k: k_opt, offsets })
    }
}

/// `C_{n-3}(n/2-1, 2; n/2+m-1, 1)`: the arm of length 2 and the left spine
/// hang at `z0`, the leaf `w` hangs `m` steps to the right of `z0`.
fn even_caterpillar(n: i64, m: i64, out: &mut Vec<i64>) {
    let q = n / 2 - 2;
    out.extend([0, n - 4, 2 * n - 6]);
    out.extend((1..=q).map(|i| i * i + 3 * i));
    out.extend((1..=m).map(|j| j * j + j));
    out.push(m * m + m + n - 2);
    out.extend((m + 1..=q).map(|j| j * j + 3 * j - 2 * m));
}

impl fmt::Display for SpectrumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for SpectrumKind {
    type Err = Error;

    /// Accepts `spectrum_odd_ii` or just `odd_ii`, in any case.
    fn from_str(s: &str) -> Result<Self> {
        let want = s.trim().to_ascii_lowercase();
        let want = want.strip_prefix("spectrum_").unwrap_or(&want);
        Self::ALL
            .into_iter()
            .find(|k| &k.id()["spectrum_".len()..] == want)
            .ok_or_else(|| Error::Parse { position: 0, message: format!("unknown spectrum '{s}'") })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn direct(kind: SpectrumKind, n: usize) -> Vec<i64> {
        let tree = kind.family(n).unwrap().build().unwrap().tree;
        tree.transmission_profile().offsets_from(kind.base_vertex(n).unwrap())
    }

    #[test]
    fn odd_ii_17() {
        let s = SpectrumKind::OddII.generate(17).unwrap();
        let mut want = vec![0, 13, 28, 1, 4, 9, 16, 25, 36, 49, 64, 5, 12, 21, 32, 45, 60];
        want.sort_unstable();
        assert_eq!(s.offsets, want);
        assert!(s.is_distinct());
        assert_eq!(s.offsets, direct(SpectrumKind::OddII, 17));
    }

    #[test]
    fn odd_iii_11() {
        let s = SpectrumKind::OddIII.generate(11).unwrap();
        assert_eq!(s.offsets, vec![0, 1, 3, 4, 8, 9, 11, 13, 15, 20, 24]);
        let tree = SpectrumKind::OddIII.family(11).unwrap().build().unwrap().tree;
        assert_eq!(tree.transmission_profile().tr[s.base], 24);
    }

    #[test]
    fn even_i_14_repeats() {
        let s = SpectrumKind::EvenI.generate(14).unwrap();
        assert!(!s.is_distinct());
        assert_eq!(s.offsets, direct(SpectrumKind::EvenI, 14));
    }

    #[test]
    fn all_kinds_match_direct_on_small_orders() {
        for kind in SpectrumKind::ALL {
            let mut seen = 0;
            for n in 1..600 {
                if kind.is_defined(n) {
                    seen += 1;
                    assert_eq!(kind.generate(n).unwrap().offsets, direct(kind, n), "{kind} at {n}");
                }
            }
            assert!(seen > 0, "{kind}");
        }
    }

    #[test]
    fn names() {
        for k in SpectrumKind::ALL {
            assert_eq!(k.id().parse::<SpectrumKind>().unwrap(), k);
        }
        assert_eq!("even_iv".parse::<SpectrumKind>().unwrap(), SpectrumKind::EvenIV);
    }
}
