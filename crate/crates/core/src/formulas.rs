//! Closed forms for clique counts of the extremal constructions, the
//! Case1/Case2 threshold predicate, and the predicted extremal values.
//!
//! Everything is exact integer arithmetic over a [`Count`] type; overflow is
//! reported as [`FormulaError::Overflow`], never wrapped.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::count::{self, lift, Count};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("arithmetic overflow")]
    Overflow,
}

type Result<T> = std::result::Result<T, FormulaError>;

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(FormulaError::InvalidParams(msg.into()))
}

fn ov<T>(x: Option<T>) -> Result<T> {
    x.ok_or(FormulaError::Overflow)
}

/// `⌊k/2⌋ − 1`.
pub fn delta_k(k: usize) -> usize {
    (k / 2).saturating_sub(1)
}

/// Part sizes of `T(n, p)`, largest first. With `p ≥ n` this is `n` singletons.
pub fn turan_part_sizes(n: usize, p: usize) -> Vec<usize> {
    let p = p.min(n);
    if p == 0 {
        return Vec::new();
    }
    let (q, extra) = (n / p, n % p);
    (0..p).map(|i| if i < extra { q + 1 } else { q }).collect()
}

/// Clique counts `N_0..=N_rmax` of a graph, as a coefficient vector.
pub type Profile<T> = Vec<T>;

/// `N_j(T(n, p))` for `j = 0..=r_max`, from `∏ (1 + s_i x)` over the parts.
pub fn turan_profile<T: Count>(n: usize, p: usize, r_max: usize) -> Result<Profile<T>> {
    if p == 0 {
        return invalid("Turán graph needs at least one part");
    }
    let mut c = vec![T::zero(); r_max + 1];
    c[0] = T::one();
    for s in turan_part_sizes(n, p) {
        let s: T = ov(lift(s))?;
        for j in (1..=r_max).rev() {
            let term = ov(c[j - 1].checked_mul(&s))?;
            c[j] = ov(c[j].checked_add(&term))?;
        }
    }
    Ok(c)
}

pub fn complete_profile<T: Count>(n: usize, r_max: usize) -> Result<Profile<T>> {
    (0..=r_max).map(|j| ov(count::binomial(n, j))).collect()
}

pub fn empty_profile<T: Count>(n: usize, r_max: usize) -> Result<Profile<T>> {
    let mut c = vec![T::zero(); r_max + 1];
    c[0] = T::one();
    if r_max >= 1 {
        c[1] = ov(lift(n))?;
    }
    Ok(c)
}

/// Profile of `A ∨ B`: `N_r = Σ_i N_i(A) · N_{r−i}(B)`.
pub fn join_profiles<T: Count>(a: &[T], b: &[T]) -> Result<Profile<T>> {
    let r_max = a.len().min(b.len()) - 1;
    (0..=r_max)
        .map(|r| {
            (0..=r).try_fold(T::zero(), |acc, i| {
                let term = ov(a[i].checked_mul(&b[r - i]))?;
                ov(acc.checked_add(&term))
            })
        })
        .collect()
}

/// Profile of `A ∪ B`: counts add for `r ≥ 1`, and `N_0 = 1`.
pub fn union_profiles<T: Count>(a: &[T], b: &[T]) -> Result<Profile<T>> {
    let r_max = a.len().min(b.len()) - 1;
    let mut c: Profile<T> = (0..=r_max)
        .map(|r| ov(a[r].checked_add(&b[r])))
        .collect::<Result<_>>()?;
    c[0] = T::one();
    Ok(c)
}

/// `t(n, p)`, the edge count of `T(n, p)`.
pub fn turan_edges<T: Count>(n: usize, p: usize) -> Result<T> {
    turan_cliques(n, p, 2)
}

/// `N_r(T(n, p))`.
pub fn turan_cliques<T: Count>(n: usize, p: usize, r: usize) -> Result<T> {
    Ok(turan_profile::<T>(n, p, r)?.swap_remove(r))
}

/// Validated `(k, m, r)`: `k ≥ 4`, `3 ≤ m < k`, `2 ≤ r ≤ min{m−1, δ_k+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TheoremParams {
    k: usize,
    m: usize,
    r: usize,
}

impl TheoremParams {
    pub fn new(k: usize, m: usize, r: usize) -> Result<TheoremParams> {
        if k < 4 {
            return invalid(format!("k = {k} must be at least 4"));
        }
        if m < 3 || m >= k {
            return invalid(format!("m = {m} must satisfy 3 <= m < k = {k}"));
        }
        let r_max = (m - 1).min(delta_k(k) + 1);
        if r < 2 || r > r_max {
            return invalid(format!("r = {r} must satisfy 2 <= r <= {r_max}"));
        }
        Ok(TheoremParams { k, m, r })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn delta(&self) -> usize {
        delta_k(self.k)
    }

    /// Whether the one-edge-deleted variant `H_n^-(m, k)` exists.
    pub fn has_h_minus(&self) -> bool {
        has_h_minus(self.m, self.k)
    }
}

impl fmt::Display for TheoremParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={}, m={}, r={})", self.k, self.m, self.r)
    }
}

/// `k` odd and `m − 2 ≤ δ_k ≤ 2m − 5`.
pub fn has_h_minus(m: usize, k: usize) -> bool {
    let d = delta_k(k);
    k % 2 == 1 && m >= 2 && m - 2 <= d && d + 5 <= 2 * m
}

/// Which of the three shapes `H_n(m, k)` takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HShape {
    /// `T(δ_k, m−2) ∨ I_{n−δ_k}`
    TuranJoin,
    /// `K_{δ_k} ∨ I_{n−δ_k}`
    CliqueJoin,
    /// `K_{δ_k} ∨ (I_{n−δ_k−2} ∪ K_2)`
    CliqueJoinEdge,
}

/// Shape of `H_n(m, k)`. `m = k` is accepted so that `H_n(k, k)` is defined.
pub fn h_shape(m: usize, k: usize) -> Result<HShape> {
    if k < 4 || m < 3 || m > k {
        return invalid(format!(
            "H_n(m, k) needs k >= 4 and 3 <= m <= k, got m={m}, k={k}"
        ));
    }
    let d = delta_k(k);
    Ok(if m <= d + 2 {
        HShape::TuranJoin
    } else if k.is_multiple_of(2) {
        HShape::CliqueJoin
    } else {
        HShape::CliqueJoinEdge
    })
}

/// Profile `N_0..=N_rmax` of `H_n(m, k)`.
pub fn h_profile<T: Count>(n: usize, m: usize, k: usize, r_max: usize) -> Result<Profile<T>> {
    let shape = h_shape(m, k)?;
    let d = delta_k(k);
    if n < d + 2 {
        return invalid(format!("H_n(m, k) needs n >= δ_k + 2 = {}", d + 2));
    }
    let core = match shape {
        HShape::TuranJoin => turan_profile(d, m - 2, r_max)?,
        _ => complete_profile(d, r_max)?,
    };
    let rest = match shape {
        HShape::CliqueJoinEdge => union_profiles(
            &empty_profile(n - d - 2, r_max)?,
            &complete_profile(2, r_max)?,
        )?,
        _ => empty_profile(n - d, r_max)?,
    };
    join_profiles(&core, &rest)
}

/// `N_r(H_n(m, k))` without the theorem's restriction on `r`.
pub fn h_clique_count<T: Count>(n: usize, m: usize, k: usize, r: usize) -> Result<T> {
    Ok(h_profile::<T>(n, m, k, r)?.swap_remove(r))
}

/// `N_r(H_n(m, k))` for valid theorem parameters.
pub fn h_value<T: Count>(n: usize, params: &TheoremParams) -> Result<T> {
    h_clique_count(n, params.m, params.k, params.r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    Case1,
    Case2,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::Case1 => "Case1",
            CaseTag::Case2 => "Case2",
        })
    }
}

/// Both sides of `N_{r−1}(T(δ_k, m−2))` vs `N_r(T(k−1, m−1)) / (k−1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseLabel<T> {
    pub tag: CaseTag,
    pub lhs: T,
    /// Unreduced numerator `N_r(T(k−1, m−1))`.
    pub rhs_numerator: T,
    /// Unreduced denominator `k − 1`.
    pub rhs_denominator: T,
}

impl<T: Count> CaseLabel<T> {
    pub fn rhs(&self) -> Ratio<T> {
        Ratio::new(self.rhs_numerator.clone(), self.rhs_denominator.clone())
    }

    /// `lhs == rhs`, where both extremal families have the same leading density.
    pub fn is_tie(&self) -> bool {
        self.lhs.checked_mul(&self.rhs_denominator).as_ref() == Some(&self.rhs_numerator)
    }
}

impl<T: Count> fmt::Display for CaseLabel<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} lhs={} rhs={}/{}",
            self.tag, self.lhs, self.rhs_numerator, self.rhs_denominator
        )
    }
}

/// Case1 iff `N_{r−1}(T(δ_k, m−2)) > N_r(T(k−1, m−1)) / (k−1)`, decided by
/// cross-multiplication so ties fall to Case2.
pub fn threshold_case<T: Count>(params: &TheoremParams) -> Result<CaseLabel<T>> {
    let (k, m, r) = (params.k, params.m, params.r);
    let lhs: T = turan_cliques(params.delta(), m - 2, r - 1)?;
    let num: T = turan_cliques(k - 1, m - 1, r)?;
    let den: T = ov(lift(k - 1))?;
    let scaled = ov(lhs.checked_mul(&den))?;
    let tag = if scaled > num {
        CaseTag::Case1
    } else {
        CaseTag::Case2
    };
    Ok(CaseLabel {
        tag,
        lhs,
        rhs_numerator: num,
        rhs_denominator: den,
    })
}

/// Predicted `ex_con(n, K_r, {P_k, K_m})`, i.e. `N_r(H_n(m, k))`.
pub fn predicted_ex_con<T: Count>(n: usize, params: &TheoremParams) -> Result<T> {
    h_value(n, params)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction<T> {
    pub value: T,
    /// Case1: the value is the (large-n) extremal number. Case2: true only
    /// when `(k−1) | n`, otherwise `value` is the floor of an upper bound.
    pub exact: bool,
    pub case: CaseTag,
}

/// Predicted `ex(n, K_r, {P_k, K_m})`.
pub fn predicted_ex<T: Count>(n: usize, params: &TheoremParams) -> Result<Prediction<T>> {
    let label = threshold_case::<T>(params)?;
    match label.tag {
        CaseTag::Case1 => Ok(Prediction {
            value: h_value(n, params)?,
            exact: true,
            case: CaseTag::Case1,
        }),
        CaseTag::Case2 => {
            let n_t: T = ov(lift(n))?;
            let scaled = ov(n_t.checked_mul(&label.rhs_numerator))?;
            Ok(Prediction {
                value: scaled.div_floor(&label.rhs_denominator),
                exact: n.is_multiple_of(params.k - 1),
                case: CaseTag::Case2,
            })
        }
    }
}

/// `δ_k · n + t(δ_k, m−2) − δ_k²`.
pub fn katona_value<T: Count>(n: usize, k: usize, m: usize) -> Result<T> {
    if k < 4 || m < 3 || m >= k {
        return invalid(format!("need k > m >= 3 and k >= 4, got k={k}, m={m}"));
    }
    let d = delta_k(k);
    if n < d {
        return invalid(format!("need n >= δ_k = {d}"));
    }
    let dn: T = ov(lift(d * n))?;
    let t: T = turan_edges(d, m - 2)?;
    let d2: T = ov(lift(d * d))?;
    ov(ov(dn.checked_add(&t))?.checked_sub(&d2))
}

/// `max{N_r(K_1 ∨ (K_{k−3} ∪ I_{n−k+2})), N_r(H_n(k, k))}`.
pub fn luo_value<T: Count>(n: usize, k: usize, r: usize) -> Result<T> {
    if k < 4 || n < k {
        return invalid(format!("need n >= k >= 4, got n={n}, k={k}"));
    }
    let pendant = union_profiles(
        &complete_profile::<T>(k - 3, r)?,
        &empty_profile(n - k + 2, r)?,
    )?;
    let first = join_profiles(&complete_profile(1, r)?, &pendant)?.swap_remove(r);
    let second = h_clique_count::<T>(n, k, k, r)?;
    Ok(first.max(second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn p(k: usize, m: usize, r: usize) -> TheoremParams {
        TheoremParams::new(k, m, r).unwrap()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_k(9), 3);
        assert_eq!(delta_k(4), 1);
        assert_eq!(delta_k(6), 2);
    }

    #[test]
    fn turan_counts() {
        assert_eq!(turan_edges::<u64>(8, 4), Ok(24));
        assert_eq!(turan_edges::<u64>(7, 3), Ok(16));
        assert_eq!(turan_edges::<u64>(3, 5), Ok(3));
        assert_eq!(turan_cliques::<u64>(6, 3, 3), Ok(8));
        assert_eq!(turan_cliques::<u64>(8, 4, 2), Ok(24));
        assert_eq!(turan_cliques::<u64>(5, 2, 3), Ok(0));
        assert_eq!(turan_part_sizes(7, 3), vec![3, 2, 2]);
        assert_eq!(turan_part_sizes(3, 5), vec![1, 1, 1]);
        assert!(turan_cliques::<u64>(3, 0, 1).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(
            turan_cliques::<u64>(200, 200, 100),
            Err(FormulaError::Overflow)
        );
        let big = turan_cliques::<BigUint>(200, 200, 100).unwrap();
        assert_eq!(Some(big), count::binomial::<BigUint>(200, 100));
    }

    #[test]
    fn h_value_examples() {
        for n in 10..15 {
            assert_eq!(h_value::<u64>(n, &p(8, 4, 2)).unwrap(), 3 * n as u64 - 7);
            assert_eq!(h_value::<u64>(n, &p(9, 6, 2)).unwrap(), 3 * n as u64 - 5);
            assert_eq!(katona_value::<u64>(n, 8, 4).unwrap(), 3 * n as u64 - 7);
        }
        assert!(h_value::<u64>(4, &p(8, 4, 2)).is_err());
    }

    #[test]
    fn threshold_examples() {
        let c = threshold_case::<u64>(&p(8, 4, 2)).unwrap();
        assert_eq!(c.tag, CaseTag::Case1);
        assert_eq!((c.lhs, c.rhs_numerator, c.rhs_denominator), (3, 16, 7));
        let c = threshold_case::<u64>(&p(9, 5, 2)).unwrap();
        assert_eq!(c.to_string(), "Case2 lhs=3 rhs=24/8");
        assert!(c.is_tie());
        assert_eq!(c.rhs(), Ratio::from_integer(3));
        assert_eq!(
            threshold_case::<u64>(&p(6, 4, 2)).unwrap().tag,
            CaseTag::Case1
        );
        let wide = threshold_case::<u128>(&p(9, 5, 2)).unwrap();
        assert_eq!(wide.tag, CaseTag::Case2);
    }

    #[test]
    fn predictions() {
        let pr = predicted_ex::<u64>(8, &p(5, 3, 2)).unwrap();
        assert_eq!((pr.value, pr.exact, pr.case), (8, true, CaseTag::Case2));
        let pr = predicted_ex::<u64>(10, &p(5, 3, 2)).unwrap();
        assert_eq!((pr.value, pr.exact), (10, false));
        for n in 4..12 {
            assert_eq!(
                predicted_ex_con::<u64>(n, &p(4, 3, 2)).unwrap(),
                n as u64 - 1
            );
        }
    }

    #[test]
    fn luo_small_cases() {
        // ex_con(n, P_5) = n: both candidates have n edges
        for n in 5..10 {
            assert_eq!(luo_value::<u64>(n, 5, 2).unwrap(), n as u64);
        }
        // Kopylov's closed form for r = 2
        for k in 4..9usize {
            for n in k..14 {
                let a = count::binomial::<u64>(k - 2, 2).unwrap() + (n - k + 2) as u64;
                let c = k.div_ceil(2);
                let b = count::binomial::<u64>(c, 2).unwrap() + ((k - 2) / 2 * (n - c)) as u64;
                assert_eq!(luo_value::<u64>(n, k, 2).unwrap(), a.max(b), "n={n} k={k}");
            }
        }
        assert!(luo_value::<u64>(3, 4, 2).is_err());
    }

    #[test]
    fn params_validation() {
        assert!(TheoremParams::new(4, 3, 2).is_ok());
        assert!(TheoremParams::new(6, 4, 3).is_ok());
        assert!(TheoremParams::new(3, 3, 2).is_err());
        assert!(TheoremParams::new(6, 6, 2).is_err());
        assert!(TheoremParams::new(5, 4, 3).is_err()); // δ_5 + 1 = 2
        assert!(TheoremParams::new(8, 4, 4).is_err()); // m − 1 = 3
        assert!(p(7, 4, 2).has_h_minus());
        assert!(!p(9, 3, 2).has_h_minus());
        assert!(!p(8, 4, 2).has_h_minus());
    }
}
