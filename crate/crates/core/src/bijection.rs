//! The map φ from two-color partitions to partitions with prescribed
//! alternating sum, one step at a time.
//!
//! ```text
//! λ = (α, β) ──pad_colors──▶ (a, b) ──add_staircase──▶ (ᾱ, β̄)
//!            ──wright_build──▶ shape ──hook_decompose──▶ μ ──gamma_from_mu──▶ γ
//! ```
//!
//! Every step has an inverse, and [`phi_inverse`] runs them backwards. The
//! inverses validate their input, so the step functions can also be used to
//! probe which sequences lie in the image of each stage.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::BijectionError;
use crate::partition::{tuple, Partition, TwoColorPartition};

fn weakly_decreasing(seq: &[u64]) -> bool {
    seq.windows(2).all(|w| w[0] >= w[1])
}

fn strictly_decreasing(seq: &[u64]) -> bool {
    seq.windows(2).all(|w| w[0] > w[1])
}

/// Red and green parts zero-padded to a common length m = max{r, l}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaddedPair {
    a: Vec<u64>,
    b: Vec<u64>,
}

impl PaddedPair {
    pub fn new(a: Vec<u64>, b: Vec<u64>) -> Result<Self, BijectionError> {
        if a.len() != b.len() {
            return Err(BijectionError::Malformed(format!(
                "lengths differ: {} vs {}",
                a.len(),
                b.len()
            )));
        }
        if a.is_empty() {
            return Err(BijectionError::EmptyInput);
        }
        if !weakly_decreasing(&a) || !weakly_decreasing(&b) {
            return Err(BijectionError::Malformed("not weakly decreasing".into()));
        }
        if !a.iter().all(|&x| x > 0) && !b.iter().all(|&x| x > 0) {
            return Err(BijectionError::Malformed(
                "neither sequence fills all m positions".into(),
            ));
        }
        Ok(PaddedPair { a, b })
    }

    /// Padded red parts.
    pub fn a(&self) -> &[u64] {
        &self.a
    }

    /// Padded green parts.
    pub fn b(&self) -> &[u64] {
        &self.b
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }
}

/// Two strictly decreasing nonnegative sequences of a common length m.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinctPair {
    alpha_bar: Vec<u64>,
    beta_bar: Vec<u64>,
}

impl DistinctPair {
    pub fn new(alpha_bar: Vec<u64>, beta_bar: Vec<u64>) -> Result<Self, BijectionError> {
        if alpha_bar.len() != beta_bar.len() {
            return Err(BijectionError::Malformed(format!(
                "lengths differ: {} vs {}",
                alpha_bar.len(),
                beta_bar.len()
            )));
        }
        if alpha_bar.is_empty() {
            return Err(BijectionError::EmptyInput);
        }
        if !strictly_decreasing(&alpha_bar) || !strictly_decreasing(&beta_bar) {
            return Err(BijectionError::Malformed("not strictly decreasing".into()));
        }
        Ok(DistinctPair {
            alpha_bar,
            beta_bar,
        })
    }

    /// Arm lengths.
    pub fn alpha_bar(&self) -> &[u64] {
        &self.alpha_bar
    }

    /// Leg lengths.
    pub fn beta_bar(&self) -> &[u64] {
        &self.beta_bar
    }

    pub fn m(&self) -> usize {
        self.alpha_bar.len()
    }
}

/// Row lengths of a Young diagram.
///
/// The 2-modular view of a row of length k writes 2 in its first k − 1 cells
/// and 1 in the last, so the row reads as the odd number 2k − 1. That view is
/// computed on demand by [`Shape::two_modular_rows`] and [`Shape::render_two_modular`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shape {
    rows: Partition,
}

impl Shape {
    pub fn new(rows: Partition) -> Self {
        Shape { rows }
    }

    pub fn rows(&self) -> &Partition {
        &self.rows
    }

    /// Number of cells.
    pub fn size(&self) -> u64 {
        self.rows.weight()
    }

    /// Each row's 2-modular value 2k − 1.
    pub fn two_modular_rows(&self) -> Vec<u64> {
        self.rows.parts().iter().map(|&k| 2 * k - 1).collect()
    }

    /// One line per row: `2 ` for each non-final cell, then `1`.
    ///
    /// ```
    /// use schmidt::{Partition, Shape};
    /// let shape = Shape::new(Partition::new(vec![3, 1]).unwrap());
    /// assert_eq!(shape.render_two_modular(), "2 2 1\n1\n");
    /// ```
    pub fn render_two_modular(&self) -> String {
        let mut out = String::new();
        for &k in self.rows.parts() {
            out.push_str(&"2 ".repeat(k as usize - 1));
            out.push_str("1\n");
        }
        out
    }

    /// Plain Young diagram, `o` on the diagonal and `.` elsewhere.
    pub fn render_diagram(&self) -> String {
        let mut out = String::new();
        for (i, &k) in self.rows.parts().iter().enumerate() {
            let cells: Vec<&str> = (0..k as usize)
                .map(|j| if i == j { "o" } else { "." })
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// The hook vector μ = (cells in H₁, 2's in H₁, cells in H₂, 2's in H₂, ...).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookVector {
    mu: Vec<u64>,
}

impl HookVector {
    /// Checks: nonempty even length, strictly decreasing, every cell count
    /// positive. Strict decrease makes each cell count exceed its 2-count.
    pub fn new(mu: Vec<u64>) -> Result<Self, BijectionError> {
        if mu.is_empty() {
            return Err(BijectionError::EmptyInput);
        }
        if !mu.len().is_multiple_of(2) {
            return Err(BijectionError::NotInImage(format!(
                "odd length {}",
                mu.len()
            )));
        }
        if !strictly_decreasing(&mu) {
            return Err(BijectionError::NotInImage(format!(
                "{} does not have distinct decreasing parts",
                tuple(&mu)
            )));
        }
        if mu[mu.len() - 2] == 0 {
            return Err(BijectionError::NotInImage("empty hook".into()));
        }
        Ok(HookVector { mu })
    }

    pub fn mu(&self) -> &[u64] {
        &self.mu
    }

    /// Number of hooks.
    pub fn m(&self) -> usize {
        self.mu.len() / 2
    }

    /// Number of cells holding 1 in each hook: μ_{2j−1} − μ_{2j}.
    pub fn ones(&self) -> Vec<u64> {
        self.mu.chunks(2).map(|c| c[0] - c[1]).collect()
    }

    /// μ₁ + μ₃ + ⋯, the total cell count.
    pub fn odd_sum(&self) -> u64 {
        self.mu.iter().step_by(2).sum()
    }
}

impl fmt::Display for HookVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&tuple(&self.mu))
    }
}

/// Which color was zero-padded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PaddingCase {
    /// r ≤ l: red parts padded, m = l.
    RedPadded,
    /// r > l: green parts padded, m = r.
    GreenPadded,
}

/// Pads the shorter color with zeros to length m = max{r, l}.
pub fn pad_colors(lambda: &TwoColorPartition) -> Result<PaddedPair, BijectionError> {
    if lambda.is_empty() {
        return Err(BijectionError::EmptyInput);
    }
    let m = lambda.r().max(lambda.l());
    let pad = |p: &Partition| {
        let mut v = p.parts().to_vec();
        v.resize(m, 0);
        v
    };
    Ok(PaddedPair {
        a: pad(&lambda.red),
        b: pad(&lambda.green),
    })
}

/// Adds the staircase (m−1, m−2, ..., 0) to both padded sequences.
pub fn add_staircase(pp: &PaddedPair) -> DistinctPair {
    let m = pp.m();
    let shift = |seq: &[u64]| -> Vec<u64> {
        seq.iter()
            .enumerate()
            .map(|(i, &x)| x + (m - 1 - i) as u64)
            .collect()
    };
    DistinctPair {
        alpha_bar: shift(&pp.a),
        beta_bar: shift(&pp.b),
    }
}

/// Subtracts the staircase and strips zeros, recovering (α, β).
///
/// Fails unless both results are nonnegative and at least one color has
/// exactly m positive parts.
pub fn remove_staircase(
    dp: &DistinctPair,
) -> Result<(TwoColorPartition, PaddingCase), BijectionError> {
    let m = dp.m();
    let unshift = |seq: &[u64], name: &str| -> Result<Vec<u64>, BijectionError> {
        seq.iter()
            .enumerate()
            .map(|(i, &x)| {
                x.checked_sub((m - 1 - i) as u64).ok_or_else(|| {
                    BijectionError::NotInImage(format!(
                        "{name} entry {x} at position {} is below the staircase",
                        i + 1
                    ))
                })
            })
            .collect()
    };
    let a = unshift(&dp.alpha_bar, "alpha_bar")?;
    let b = unshift(&dp.beta_bar, "beta_bar")?;
    let red = Partition::from_trimmed(a);
    let green = Partition::from_trimmed(b);
    let (r, l) = (red.len(), green.len());
    if r.max(l) != m {
        return Err(BijectionError::NotInImage(format!(
            "max{{r,l}} = {} but m = {m}",
            r.max(l)
        )));
    }
    let case = if r <= l {
        PaddingCase::RedPadded
    } else {
        PaddingCase::GreenPadded
    };
    Ok((TwoColorPartition::new(red, green), case))
}

/// Builds the diagram with m diagonal cells, ᾱ_j cells to the right of
/// diagonal cell j and β̄_j cells below it.
pub fn wright_build(dp: &DistinctPair) -> Result<Shape, BijectionError> {
    let m = dp.m();
    let height = (0..m)
        .map(|j| j + 1 + dp.beta_bar[j] as usize)
        .max()
        .unwrap_or(0);
    let mut rows = vec![0u64; height];
    let mut cells = 0u64;
    for j in 0..m {
        // diagonal plus arm occupy columns j..=j+ᾱ_j of row j
        let row_end = (j + 1) as u64 + dp.alpha_bar[j];
        if rows[j] != j as u64 {
            return Err(BijectionError::Malformed(format!(
                "row {} has a gap before its diagonal cell",
                j + 1
            )));
        }
        rows[j] = row_end;
        cells += 1 + dp.alpha_bar[j];
        let leg = &mut rows[j + 1..=j + dp.beta_bar[j] as usize];
        for (offset, row) in leg.iter_mut().enumerate() {
            if *row != j as u64 {
                return Err(BijectionError::Malformed(format!(
                    "leg of column {} leaves a gap in row {}",
                    j + 1,
                    j + offset + 2
                )));
            }
            *row = j as u64 + 1;
            cells += 1;
        }
    }
    let rows = Partition::new(rows)
        .map_err(|e| BijectionError::Malformed(format!("cells do not form a diagram: {e}")))?;
    debug_assert_eq!(rows.weight(), cells);
    Ok(Shape { rows })
}

/// Splits a diagram along its Durfee square into arm and leg lengths.
pub fn wright_split(shape: &Shape) -> Result<DistinctPair, BijectionError> {
    let rows = shape.rows.parts();
    if rows.is_empty() {
        return Err(BijectionError::EmptyInput);
    }
    let m = shape.rows.durfee_size();
    let cols = shape.rows.conjugate();
    let cols = cols.parts();
    let alpha_bar = (0..m).map(|j| rows[j] - j as u64 - 1).collect();
    let beta_bar = (0..m).map(|j| cols[j] - j as u64 - 1).collect();
    Ok(DistinctPair {
        alpha_bar,
        beta_bar,
    })
}

/// Cuts the 2-modular diagram into hooks cornered on the diagonal and records,
/// for each hook, its cell count and the number of its cells holding 2.
///
/// A cell holds 1 exactly when it ends its row. The arm of hook j always ends
/// row j; a leg cell (i, j) ends row i when that row has length j.
pub fn hook_decompose(shape: &Shape) -> HookVector {
    let rows = shape.rows.parts();
    let m = shape.rows.durfee_size();
    let cols = shape.rows.conjugate();
    let cols = cols.parts();
    let mut mu = Vec::with_capacity(2 * m);
    for j in 0..m {
        let arm = rows[j] - j as u64;
        let leg = cols[j] - j as u64 - 1;
        let cells = arm + leg;
        let leg_ends = rows[j + 1..]
            .iter()
            .filter(|&&len| len == j as u64 + 1)
            .count() as u64;
        let ones = 1 + leg_ends;
        mu.push(cells);
        mu.push(cells - ones);
    }
    HookVector { mu }
}

/// Inverse of [`hook_decompose`].
///
/// With o_j the number of 1's in hook j, the legs are recovered as
/// β̄_j = (m − j) + Σ_{k ≥ j} (o_k − 1) and the arms as ᾱ_j = μ_{2j−1} − 1 − β̄_j.
/// The rebuilt diagram is decomposed again and must reproduce `hv`.
pub fn hook_compose(hv: &HookVector) -> Result<Shape, BijectionError> {
    let m = hv.m();
    let ones = hv.ones();
    let mut beta_bar = vec![0u64; m];
    let mut tail = 0u64;
    for j in (0..m).rev() {
        tail += ones[j] - 1;
        beta_bar[j] = (m - 1 - j) as u64 + tail;
    }
    let alpha_bar = (0..m)
        .map(|j| {
            hv.mu[2 * j].checked_sub(1 + beta_bar[j]).ok_or_else(|| {
                BijectionError::NotInImage(format!("hook {} has a negative arm", j + 1))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let dp = DistinctPair::new(alpha_bar, beta_bar)
        .map_err(|e| BijectionError::NotInImage(format!("{hv}: {e}")))?;
    let shape = wright_build(&dp).map_err(|e| BijectionError::NotInImage(format!("{hv}: {e}")))?;
    let again = hook_decompose(&shape);
    if &again != hv {
        return Err(BijectionError::NotInImage(format!(
            "{hv} rebuilds to a diagram with hook vector {again}"
        )));
    }
    Ok(shape)
}

/// γ_i = μ_i − (2m − i), trailing zeros dropped.
pub fn gamma_from_mu(hv: &HookVector) -> Result<Partition, BijectionError> {
    let len = hv.mu.len();
    let gamma = hv
        .mu
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            x.checked_sub((len - 1 - i) as u64).ok_or_else(|| {
                BijectionError::NotInImage(format!("μ_{} = {x} is below the staircase", i + 1))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if !weakly_decreasing(&gamma) {
        return Err(BijectionError::NotInImage(
            "γ is not weakly decreasing".into(),
        ));
    }
    Ok(Partition::from_trimmed(gamma))
}

/// Pads γ with zeros to even length 2m, m = ⌈len/2⌉, and adds the staircase
/// (2m−1, ..., 1, 0).
pub fn mu_from_gamma(gamma: &Partition) -> Result<HookVector, BijectionError> {
    if gamma.is_empty() {
        return Err(BijectionError::EmptyInput);
    }
    let len = gamma.len().div_ceil(2) * 2;
    let mut mu = gamma.parts().to_vec();
    mu.resize(len, 0);
    for (i, x) in mu.iter_mut().enumerate() {
        *x += (len - 1 - i) as u64;
    }
    Ok(HookVector { mu })
}

/// Every intermediate of φ for one input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub input: TwoColorPartition,
    pub padded: PaddedPair,
    pub distinct: DistinctPair,
    pub shape: Shape,
    pub mu: HookVector,
    pub gamma: Partition,
}

/// Runs φ on a nonempty input and keeps every intermediate.
pub fn trace(lambda: &TwoColorPartition) -> Result<Trace, BijectionError> {
    let padded = pad_colors(lambda)?;
    let distinct = add_staircase(&padded);
    let shape = wright_build(&distinct)?;
    let mu = hook_decompose(&shape);
    let gamma = gamma_from_mu(&mu)?;
    Ok(Trace {
        input: lambda.clone(),
        padded,
        distinct,
        shape,
        mu,
        gamma,
    })
}

/// φ: two-color partitions of n → partitions with alternating sum n.
///
/// ```
/// use schmidt::{phi, TwoColorPartition};
/// let lambda: TwoColorPartition = "2r+1g".parse().unwrap();
/// assert_eq!(phi(&lambda).to_string(), "3+2");
/// ```
pub fn phi(lambda: &TwoColorPartition) -> Partition {
    try_phi(lambda).unwrap_or_else(|e| panic!("phi failed on {lambda}: {e}"))
}

/// φ with step failures surfaced instead of panicking. A failure here means
/// the construction itself is broken.
pub fn try_phi(lambda: &TwoColorPartition) -> Result<Partition, BijectionError> {
    if lambda.is_empty() {
        return Ok(Partition::empty());
    }
    Ok(trace(lambda)?.gamma)
}

/// φ⁻¹, defined on every partition.
pub fn phi_inverse(gamma: &Partition) -> TwoColorPartition {
    try_phi_inverse(gamma).unwrap_or_else(|e| panic!("phi_inverse failed on {gamma}: {e}"))
}

/// φ⁻¹ with step failures surfaced instead of panicking.
pub fn try_phi_inverse(gamma: &Partition) -> Result<TwoColorPartition, BijectionError> {
    if gamma.is_empty() {
        return Ok(TwoColorPartition::default());
    }
    let mu = mu_from_gamma(gamma)?;
    let shape = hook_compose(&mu)?;
    let distinct = wright_split(&shape)?;
    Ok(remove_staircase(&distinct)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn tc(s: &str) -> TwoColorPartition {
        s.parse().unwrap()
    }

    fn dp(a: &[u64], b: &[u64]) -> DistinctPair {
        DistinctPair::new(a.to_vec(), b.to_vec()).unwrap()
    }

    fn hv(mu: &[u64]) -> HookVector {
        HookVector::new(mu.to_vec()).unwrap()
    }

    #[test]
    fn pad_examples() {
        let pp = pad_colors(&tc("1r+1r+1g")).unwrap();
        assert_eq!((pp.a(), pp.b(), pp.m()), (&[1, 1][..], &[1, 0][..], 2));
        let pp = pad_colors(&tc("3r")).unwrap();
        assert_eq!((pp.a(), pp.b(), pp.m()), (&[3][..], &[0][..], 1));
        let pp = pad_colors(&tc("1r+1g")).unwrap();
        assert_eq!((pp.a(), pp.b(), pp.m()), (&[1][..], &[1][..], 1));
        assert_eq!(
            pad_colors(&TwoColorPartition::default()),
            Err(BijectionError::EmptyInput)
        );
    }

    #[test]
    fn padded_pair_validation() {
        assert!(PaddedPair::new(vec![1, 0], vec![1, 0]).is_err());
        assert!(PaddedPair::new(vec![1], vec![1, 0]).is_err());
        assert!(PaddedPair::new(vec![0, 1], vec![1, 1]).is_err());
        assert!(PaddedPair::new(vec![2, 1], vec![1, 0]).is_ok());
    }

    #[test]
    fn staircase_examples() {
        let d = add_staircase(&PaddedPair::new(vec![0, 0, 0], vec![1, 1, 1]).unwrap());
        assert_eq!(d, dp(&[2, 1, 0], &[3, 2, 1]));
        let d = add_staircase(&PaddedPair::new(vec![1, 1], vec![1, 0]).unwrap());
        assert_eq!(d, dp(&[2, 1], &[2, 0]));
        let d = add_staircase(&PaddedPair::new(vec![3], vec![0]).unwrap());
        assert_eq!(d, dp(&[3], &[0]));
    }

    #[test]
    fn remove_staircase_examples() {
        let (l, case) = remove_staircase(&dp(&[3, 2, 0], &[5, 3, 1])).unwrap();
        assert_eq!(l, tc("3g+2g+1r+1r+1g"));
        assert_eq!(case, PaddingCase::RedPadded);
        let (l, case) = remove_staircase(&dp(&[3], &[0])).unwrap();
        assert_eq!(l, tc("3r"));
        assert_eq!(case, PaddingCase::GreenPadded);
        assert!(matches!(
            remove_staircase(&dp(&[5, 0], &[1, 0])),
            Err(BijectionError::NotInImage(_))
        ));
    }

    #[test]
    fn distinct_pair_validation() {
        assert!(DistinctPair::new(vec![1, 1], vec![2, 0]).is_err());
        assert!(DistinctPair::new(vec![1, 0], vec![0]).is_err());
        assert_eq!(
            DistinctPair::new(vec![], vec![]),
            Err(BijectionError::EmptyInput)
        );
    }

    #[test]
    fn wright_build_examples() {
        assert_eq!(
            wright_build(&dp(&[3, 2, 0], &[5, 3, 1])).unwrap().rows(),
            &p(&[4, 4, 3, 3, 2, 1])
        );
        assert_eq!(wright_build(&dp(&[0], &[0])).unwrap().rows(), &p(&[1]));
        assert_eq!(
            wright_build(&dp(&[2, 1], &[2, 0])).unwrap().rows(),
            &p(&[3, 3, 1])
        );
    }

    #[test]
    fn wright_split_examples() {
        let split = |rows: &[u64]| wright_split(&Shape::new(p(rows))).unwrap();
        assert_eq!(split(&[4, 4, 3, 3, 2, 1]), dp(&[3, 2, 0], &[5, 3, 1]));
        assert_eq!(split(&[1]), dp(&[0], &[0]));
        assert_eq!(split(&[4]), dp(&[3], &[0]));
        assert_eq!(
            wright_split(&Shape::new(Partition::empty())),
            Err(BijectionError::EmptyInput)
        );
    }

    #[test]
    fn hook_decompose_examples() {
        let mu = |rows: &[u64]| hook_decompose(&Shape::new(p(rows))).mu().to_vec();
        assert_eq!(mu(&[4, 4, 3, 3, 2, 1]), [9, 7, 6, 4, 2, 0]);
        assert_eq!(mu(&[1]), [1, 0]);
        assert_eq!(mu(&[3, 3, 1]), [5, 3, 2, 1]);
    }

    #[test]
    fn hook_compose_examples() {
        assert_eq!(
            hook_compose(&hv(&[9, 7, 6, 4, 2, 0])).unwrap().rows(),
            &p(&[4, 4, 3, 3, 2, 1])
        );
        assert_eq!(hook_compose(&hv(&[4, 3])).unwrap().rows(), &p(&[4]));
        assert_eq!(
            hook_compose(&hv(&[4, 0])).unwrap().rows(),
            &p(&[1, 1, 1, 1])
        );
        assert_eq!(
            hook_compose(&hv(&[5, 3, 2, 0])).unwrap().rows(),
            &p(&[2, 2, 2, 1])
        );
        assert!(matches!(
            HookVector::new(vec![3, 3, 1, 0]),
            Err(BijectionError::NotInImage(_))
        ));
    }

    #[test]
    fn hook_compose_accepts_every_valid_vector() {
        // all strictly decreasing (μ1, μ2, μ3, μ4) with entries below 9 and μ3 ≥ 1
        for a in 0..9u64 {
            for b in 0..a {
                for c in 1..b.max(1) {
                    for d in 0..c {
                        let v = hv(&[a, b, c, d]);
                        let shape = hook_compose(&v).unwrap();
                        assert_eq!(hook_decompose(&shape), v);
                    }
                }
            }
        }
        assert!(HookVector::new(vec![2, 1, 1, 0]).is_err());
    }

    #[test]
    fn hook_vector_validation() {
        assert!(HookVector::new(vec![3, 2, 1]).is_err());
        assert!(HookVector::new(vec![3, 2, 0, 0]).is_err());
        assert!(HookVector::new(vec![]).is_err());
        assert!(HookVector::new(vec![1, 0]).is_ok());
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(
            gamma_from_mu(&hv(&[9, 7, 6, 4, 2, 0])).unwrap(),
            p(&[4, 3, 3, 2, 1])
        );
        assert_eq!(gamma_from_mu(&hv(&[4, 1])).unwrap(), p(&[3, 1]));
        assert_eq!(gamma_from_mu(&hv(&[1, 0])).unwrap(), Partition::empty());
    }

    #[test]
    fn mu_examples() {
        assert_eq!(
            mu_from_gamma(&p(&[4, 3, 3, 2, 1])).unwrap(),
            hv(&[9, 7, 6, 4, 2, 0])
        );
        assert_eq!(mu_from_gamma(&p(&[3, 1])).unwrap(), hv(&[4, 1]));
        assert_eq!(mu_from_gamma(&p(&[3])).unwrap(), hv(&[4, 0]));
        assert_eq!(
            mu_from_gamma(&Partition::empty()),
            Err(BijectionError::EmptyInput)
        );
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&tc("2r+1g")), p(&[3, 2]));
        assert_eq!(phi(&TwoColorPartition::default()), Partition::empty());
        assert_eq!(phi(&tc("1r+1r+3g+2g+1g")), p(&[4, 3, 3, 2, 1]));
    }

    #[test]
    fn phi_inverse_examples() {
        assert_eq!(phi_inverse(&p(&[3, 3])), tc("3r"));
        assert_eq!(phi_inverse(&p(&[4, 3, 3, 2, 1])), tc("1r+1r+3g+2g+1g"));
        assert_eq!(phi_inverse(&p(&[2, 1, 1, 1])), tc("1r+1r+1g"));
        assert_eq!(
            phi_inverse(&Partition::empty()),
            TwoColorPartition::default()
        );
    }

    #[test]
    fn trace_of_worked_example() {
        let t = trace(&tc("3g+2g+1g+1r+1r")).unwrap();
        assert_eq!(t.padded.a(), &[1, 1, 0]);
        assert_eq!(t.padded.b(), &[3, 2, 1]);
        assert_eq!(t.distinct.alpha_bar(), &[3, 2, 0]);
        assert_eq!(t.distinct.beta_bar(), &[5, 3, 1]);
        assert_eq!(t.shape.two_modular_rows(), [7, 7, 5, 5, 3, 1]);
        assert_eq!(t.mu.odd_sum(), 17);
        assert_eq!(t.mu.ones(), [2, 2, 2]);
    }

    #[test]
    fn renders() {
        let shape = Shape::new(p(&[4, 4, 3, 3, 2, 1]));
        assert_eq!(
            shape.render_two_modular(),
            "2 2 2 1\n2 2 2 1\n2 2 1\n2 2 1\n2 1\n1\n"
        );
        assert_eq!(
            shape.render_diagram(),
            "o . . .\n. o . .\n. . o\n. . .\n. .\n.\n"
        );
    }
}
