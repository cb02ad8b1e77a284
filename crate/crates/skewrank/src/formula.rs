//! Closed-form minimum skew rank values for paths and their (strict) powers,
//! with a case tag recording which clause produced each value.

use crate::graph::Graph;
use crate::power::PowerSpec;
use crate::{Error, Result};

/// Which closed-form clause fired. The string form is stable and appears in
/// CLI output, CSV tables, and reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// One vertex, no edges, zero matrix.
    SingleVertex,
    /// `P_n` with `n` even: full rank `n`.
    PathEven,
    /// `P_n` with `n` odd: rank `n - 1`.
    PathOdd,
    /// `P_n^r` with `n` in `{2, 3}`: the power is `K_2` or `K_3` (or the path
    /// itself), value 2.
    SmallOrderPower,
    /// `P_n^r`, `1 <= r <= n-3`, `n - r` even: value `n - r`.
    BandEven,
    /// `P_n^r`, `1 <= r <= n-3`, `n - r` odd: value `n - r + 1`.
    BandOdd,
    /// `P_n^r`, `r >= n-2`: complete multipartite, value 2.
    TerminalMultipartite,
    /// `P_2^(r)` with `r` odd: a single edge, value 2.
    StrictPairOdd,
    /// `P_2^(r)` with `r` even: edgeless, value 0.
    StrictPairEven,
    /// `P_3^(r)`: value 2 for every `r`.
    StrictTriple,
    /// `P_n^(r)`, `r` odd, `1 <= r <= n-3`, `n` odd: value `n - r`.
    StrictOddBandNOdd,
    /// `P_n^(r)`, `r` odd, `1 <= r <= n-3`, `n` even: value `n - r + 1`.
    StrictOddBandNEven,
    /// `P_n^(r)`, `r` odd, `r >= n-2`: complete bipartite, value 2.
    StrictOddTerminal,
    /// `P_n^(2s)`, `2s <= n-3`, `n` odd: value `n - r + 1`.
    StrictEvenNOdd,
    /// `P_n^(2s)`, `2s <= n-3`, `n = 2t`, `t - s` even: value `n - r`.
    StrictEvenAligned,
    /// `P_n^(2s)`, `2s <= n-3`, `n = 2t`, `t - s` odd: value `n - r + 2`.
    StrictEvenOffset,
    /// `P_n^(r)`, `r` even, `r >= n-2`, `n >= 4`: two cliques, value 4.
    StrictEvenTerminal,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::SingleVertex => "single-vertex",
            CaseTag::PathEven => "path-even",
            CaseTag::PathOdd => "path-odd",
            CaseTag::SmallOrderPower => "small-order-power",
            CaseTag::BandEven => "band-even",
            CaseTag::BandOdd => "band-odd",
            CaseTag::TerminalMultipartite => "terminal-multipartite",
            CaseTag::StrictPairOdd => "strict-pair-odd",
            CaseTag::StrictPairEven => "strict-pair-even",
            CaseTag::StrictTriple => "strict-triple",
            CaseTag::StrictOddBandNOdd => "strict-odd-band-n-odd",
            CaseTag::StrictOddBandNEven => "strict-odd-band-n-even",
            CaseTag::StrictOddTerminal => "strict-odd-terminal",
            CaseTag::StrictEvenNOdd => "strict-even-n-odd",
            CaseTag::StrictEvenAligned => "strict-even-aligned",
            CaseTag::StrictEvenOffset => "strict-even-offset",
            CaseTag::StrictEvenTerminal => "strict-even-terminal",
        }
    }
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A closed-form minimum skew rank value together with the clause that
/// produced it and the instance it belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaVerdict {
    pub value: usize,
    pub case_tag: CaseTag,
    pub spec: PowerSpec,
}

impl FormulaVerdict {
    fn new(value: usize, case_tag: CaseTag, spec: PowerSpec) -> FormulaVerdict {
        debug_assert!(value % 2 == 0, "skew ranks are even");
        debug_assert!(value <= spec.n);
        FormulaVerdict {
            value,
            case_tag,
            spec,
        }
    }
}

/// Minimum skew rank of the path `P_n`: `n` when `n` is even, `n - 1` when
/// odd, and 0 for the single vertex.
pub fn mrs_path(n: usize) -> FormulaVerdict {
    assert!(n >= 1);
    let spec = PowerSpec {
        n,
        r: 1,
        strict: false,
    };
    if n == 1 {
        FormulaVerdict::new(0, CaseTag::SingleVertex, spec)
    } else if n % 2 == 0 {
        FormulaVerdict::new(n, CaseTag::PathEven, spec)
    } else {
        FormulaVerdict::new(n - 1, CaseTag::PathOdd, spec)
    }
}

/// Minimum skew rank of `P_n^r`.
///
/// For `n >= 4`: `n - r` when `1 <= r <= n-3` and `n - r` is even,
/// `n - r + 1` when `n - r` is odd, and 2 when `r >= n-2`. Orders 2 and 3
/// give 2 directly (`P_2^r = K_2`, `P_3^r` is `P_3` or `K_3`), and the single
/// vertex gives 0.
pub fn mrs_path_power(n: usize, r: usize) -> FormulaVerdict {
    assert!(n >= 1 && r >= 1);
    let spec = PowerSpec {
        n,
        r,
        strict: false,
    };
    if n == 1 {
        return FormulaVerdict::new(0, CaseTag::SingleVertex, spec);
    }
    if n <= 3 {
        return FormulaVerdict::new(2, CaseTag::SmallOrderPower, spec);
    }
    if r >= n - 2 {
        FormulaVerdict::new(2, CaseTag::TerminalMultipartite, spec)
    } else if (n - r) % 2 == 0 {
        FormulaVerdict::new(n - r, CaseTag::BandEven, spec)
    } else {
        FormulaVerdict::new(n - r + 1, CaseTag::BandOdd, spec)
    }
}

/// Minimum skew rank of the strict power `P_n^(r)`.
///
/// Odd `r`, `n >= 4`: `n - r` when `1 <= r <= n-3` and `n` is odd,
/// `n - r + 1` when `n` is even, 2 when `r >= n-2`. Even `r = 2s`, `n >= 4`:
/// `n - r + 1` when `1 <= r <= n-3` and `n` is odd; for `n = 2t`, `n - r`
/// when `t - s` is even and `n - r + 2` when odd; 4 when `r >= n-2`. Orders
/// 2 and 3 are handled directly: `P_2^(r)` is a single edge (value 2) for odd
/// `r` and edgeless (value 0) for even `r`; `P_3^(r)` always has value 2.
pub fn mrs_path_strict(n: usize, r: usize) -> FormulaVerdict {
    assert!(n >= 1 && r >= 1);
    let spec = PowerSpec { n, r, strict: true };
    if n == 1 {
        return FormulaVerdict::new(0, CaseTag::SingleVertex, spec);
    }
    if n == 2 {
        return if r % 2 == 1 {
            FormulaVerdict::new(2, CaseTag::StrictPairOdd, spec)
        } else {
            FormulaVerdict::new(0, CaseTag::StrictPairEven, spec)
        };
    }
    if n == 3 {
        return FormulaVerdict::new(2, CaseTag::StrictTriple, spec);
    }
    if r % 2 == 1 {
        if r >= n - 2 {
            FormulaVerdict::new(2, CaseTag::StrictOddTerminal, spec)
        } else if n % 2 == 1 {
            FormulaVerdict::new(n - r, CaseTag::StrictOddBandNOdd, spec)
        } else {
            FormulaVerdict::new(n - r + 1, CaseTag::StrictOddBandNEven, spec)
        }
    } else if r >= n - 2 {
        FormulaVerdict::new(4, CaseTag::StrictEvenTerminal, spec)
    } else if n % 2 == 1 {
        FormulaVerdict::new(n - r + 1, CaseTag::StrictEvenNOdd, spec)
    } else {
        let t = n / 2;
        let s = r / 2;
        if (t - s) % 2 == 0 {
            FormulaVerdict::new(n - r, CaseTag::StrictEvenAligned, spec)
        } else {
            FormulaVerdict::new(n - r + 2, CaseTag::StrictEvenOffset, spec)
        }
    }
}

/// Closed-form value for a [`PowerSpec`], strict or not.
pub fn mrs_spec(spec: &PowerSpec) -> FormulaVerdict {
    if spec.strict {
        mrs_path_strict(spec.n, spec.r)
    } else {
        mrs_path_power(spec.n, spec.r)
    }
}

/// Is the minimum skew rank of this connected graph exactly 2?
///
/// Holds exactly when the graph is complete multipartite with at least two
/// classes, equivalently when it has no induced `P_4` and no induced paw.
/// Disconnected or single-vertex input is rejected.
pub fn mrs_is_two(g: &Graph) -> Result<bool> {
    if g.order() < 2 {
        return Err(Error::TooSmall { minimum: 2 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    match g.complete_multipartite_partition() {
        Some(classes) => Ok(classes.len() >= 2),
        None => Ok(false),
    }
}

/// Does the symmetric minimum rank of `P_n^r` agree with the skew value?
/// True exactly when `1 <= r <= n-3` and `n - r` is even.
pub fn equality_with_symmetric_power(n: usize, r: usize) -> bool {
    assert!(n >= 3 && r >= 1);
    r + 3 <= n && (n - r) % 2 == 0
}

/// Does the symmetric minimum rank of `P_n^(r)` agree with the skew value?
/// True exactly when `n` and `r` are both odd, or both even with
/// `n/2 - r/2` even.
pub fn equality_with_symmetric_strict(n: usize, r: usize) -> bool {
    assert!(n >= 3 && r >= 1);
    if n % 2 == 1 && r % 2 == 1 {
        return true;
    }
    n % 2 == 0 && r % 2 == 0 && (n / 2 - r / 2) % 2 == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::power::{power, strict_power};

    #[test]
    fn path_values() {
        assert_eq!(mrs_path(4).value, 4);
        assert_eq!(mrs_path(4).case_tag, CaseTag::PathEven);
        assert_eq!(mrs_path(5).value, 4);
        assert_eq!(mrs_path(5).case_tag, CaseTag::PathOdd);
        assert_eq!(mrs_path(1).value, 0);
    }

    #[test]
    fn power_values() {
        assert_eq!(mrs_path_power(5, 2).value, 4);
        assert_eq!(mrs_path_power(5, 2).case_tag, CaseTag::BandOdd);
        assert_eq!(mrs_path_power(5, 3).value, 2);
        assert_eq!(mrs_path_power(10, 4).value, 6);
        assert_eq!(mrs_path_power(10, 4).case_tag, CaseTag::BandEven);
        assert_eq!(mrs_path_power(4, 2).value, 2);
        assert_eq!(mrs_path_power(2, 7).value, 2);
        assert_eq!(mrs_path_power(3, 1).value, 2);
    }

    #[test]
    fn strict_values() {
        assert_eq!(mrs_path_strict(9, 3).value, 6);
        assert_eq!(mrs_path_strict(9, 3).case_tag, CaseTag::StrictOddBandNOdd);
        assert_eq!(mrs_path_strict(8, 4).value, 4);
        assert_eq!(mrs_path_strict(8, 4).case_tag, CaseTag::StrictEvenAligned);
        assert_eq!(mrs_path_strict(8, 2).value, 8);
        assert_eq!(mrs_path_strict(8, 2).case_tag, CaseTag::StrictEvenOffset);
        assert_eq!(mrs_path_strict(6, 4).value, 4);
        assert_eq!(mrs_path_strict(6, 4).case_tag, CaseTag::StrictEvenTerminal);
        assert_eq!(mrs_path_strict(2, 2).value, 0);
        assert_eq!(mrs_path_strict(2, 3).value, 2);
        assert_eq!(mrs_path_strict(3, 2).value, 2);
        assert_eq!(mrs_path_strict(3, 6).value, 2);
    }

    #[test]
    fn values_even_and_bounded() {
        for n in 1..=30 {
            for r in 1..=n {
                for verdict in [mrs_path_power(n, r), mrs_path_strict(n, r)] {
                    assert_eq!(verdict.value % 2, 0, "{:?}", verdict);
                    assert!(verdict.value <= n, "{:?}", verdict);
                }
            }
        }
    }

    #[test]
    fn window_monotonicity_of_formula() {
        for n in 3..=30 {
            for m in 3..=n {
                for r in 1..=n {
                    assert!(
                        mrs_path_power(m, r).value <= mrs_path_power(n, r).value,
                        "m={m} n={n} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn r_equals_one_matches_path() {
        for n in 2..=30 {
            assert_eq!(mrs_path_power(n, 1).value, mrs_path(n).value);
            assert_eq!(mrs_path_strict(n, 1).value, mrs_path(n).value);
        }
    }

    #[test]
    fn strict_even_splits_into_power_components() {
        for n in 4..=30usize {
            for s in 1..=n / 2 {
                let r = 2 * s;
                if r > n - 3 {
                    continue;
                }
                let whole = mrs_path_strict(n, r).value;
                let parts = mrs_path_power(n.div_ceil(2), s).value + mrs_path_power(n / 2, s).value;
                assert_eq!(whole, parts, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn strict_terminal_values() {
        for n in 4..=16usize {
            for r in (n - 2)..=(n + 3) {
                let v = mrs_path_strict(n, r).value;
                if r % 2 == 1 {
                    assert_eq!(v, 2, "n={n} r={r}");
                } else {
                    assert_eq!(v, 4, "n={n} r={r}");
                }
            }
        }
    }

    #[test]
    fn rank_two_predicate() {
        let k7_minus = power(&Graph::path(7).unwrap(), 5);
        assert!(mrs_is_two(&k7_minus).unwrap());
        assert!(!mrs_is_two(&Graph::path(4).unwrap()).unwrap());
        assert!(!mrs_is_two(&Graph::paw()).unwrap());
        assert_eq!(
            mrs_is_two(&Graph::edgeless(1).unwrap()).unwrap_err(),
            Error::TooSmall { minimum: 2 }
        );
        let split = strict_power(&Graph::path(6).unwrap(), 2);
        assert_eq!(mrs_is_two(&split).unwrap_err(), Error::Disconnected);
        // Connected multipartite with one class cannot happen; edgeless pairs
        // are disconnected and rejected above.
    }

    #[test]
    fn symmetric_equality_predicates() {
        assert!(equality_with_symmetric_power(10, 4));
        assert!(!equality_with_symmetric_power(10, 3));
        assert!(!equality_with_symmetric_power(5, 3));
        assert!(equality_with_symmetric_strict(9, 3));
        assert!(equality_with_symmetric_strict(8, 4));
        assert!(!equality_with_symmetric_strict(8, 2));
        assert!(!equality_with_symmetric_strict(9, 4));
        assert!(!equality_with_symmetric_strict(8, 3));
    }
}
