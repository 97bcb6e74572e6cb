//! Enumeration of unlabeled k-trees through their coding-tree encodings.
//!
//! A k-tree with a coherent orientation is equivalent to a bicolored tree
//! whose black vertices (hedra, x-sort) carry a cyclic order on their white
//! neighbors (fronts, y-sort). Rooting turns the cyclic orders into linear
//! ones, on which S_k and S_{k+1} act; the rho-maps propagate such an action
//! down the tree, and unlabeled k-trees fall out as Burnside averages of the
//! resulting recursive series, combined by dissymmetry.
//!
//! Two computational paths are provided. The production path
//! ([`KTreeContext`], [`ktree_ogf`]) solves the one-variable recursion for
//! the per-cycle-type generating functions. The cross-check path
//! ([`y_gamma_ci`], [`xy_gamma_ci`], [`ktree_ci`]) solves the full two-sort
//! cycle-index recursion at small degree; collapsing it to one variable must
//! reproduce the production path.

use crate::cycleindex::{CycleIndexSeries, PMonomial, Truncation, X_SORT, Y_SORT};
use crate::error::Error;
use crate::partitions::{partitions_of, Partition};
use crate::powerseries::{PowerSeries, Rational};
use crate::Result;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Largest degree bound accepted by the two-sort cycle-index path; it exists
/// as a cross-check at small degree, not a production path.
pub const CI_PATH_MAX_DEGREE: usize = 8;

/// A permutation of {1..m} in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // images[a-1] = sigma(a), values in 1..=m
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Self {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &v in &images {
            assert!(v >= 1 && v <= m && !seen[v], "not a bijection on 1..={m}");
            seen[v] = true;
        }
        Permutation { images }
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (1..=m).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, a: usize) -> usize {
        self.images[a - 1]
    }

    /// self after other: (self.compose(other))(a) = self(other(a)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size());
        Permutation {
            images: (1..=self.size())
                .map(|a| self.apply(other.apply(a)))
                .collect(),
        }
    }

    pub fn power(&self, n: u32) -> Permutation {
        let mut acc = Permutation::identity(self.size());
        for _ in 0..n {
            acc = self.compose(&acc);
        }
        acc
    }

    /// Cycles in canonical form: each starts at its least element and
    /// follows sigma; cycles ordered by least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.size();
        let mut seen = vec![false; m + 1];
        let mut out = Vec::new();
        for start in 1..=m {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        if self.size() == 0 {
            return Partition::empty();
        }
        Partition::new(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    /// The embedding into S_{m+1} fixing m+1.
    pub fn extend(&self) -> Permutation {
        let mut images = self.images.clone();
        images.push(self.size() + 1);
        Permutation { images }
    }

    /// Inverse of `extend`: defined only when m is a fixed point.
    pub fn restrict(&self) -> Option<Permutation> {
        let m = self.size();
        if m == 0 || self.apply(m) != m {
            return None;
        }
        Some(Permutation {
            images: self.images[..m - 1].to_vec(),
        })
    }

    /// All m! permutations of {1..m}, in a deterministic order.
    pub fn all(m: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = (1..=m).collect();
        permute_rec(&mut images, 0, &mut out);
        out
    }
}

fn permute_rec(images: &mut Vec<usize>, at: usize, out: &mut Vec<Permutation>) {
    if at == images.len() {
        out.push(Permutation {
            images: images.clone(),
        });
        return;
    }
    for i in at..images.len() {
        images.swap(at, i);
        permute_rec(images, at + 1, out);
        images.swap(at, i);
    }
}

/// Representative of x modulo m in {1..m}.
fn mod_rep(x: isize, m: usize) -> usize {
    let m = m as isize;
    let r = x.rem_euclid(m);
    if r == 0 {
        m as usize
    } else {
        r as usize
    }
}

/// The rho-map: rho_i(sigma): a -> sigma(i + a) - sigma(i), arithmetic
/// modulo m with representatives in {1..m}. Propagates a reordering at a
/// parent vertex to a child attached at position i so the mirror relation
/// is preserved.
pub fn rho(i: usize, sigma: &Permutation) -> Permutation {
    let m = sigma.size();
    assert!(i >= 1 && i <= m);
    let si = sigma.apply(i) as isize;
    let images = (1..=m)
        .map(|a| {
            let arg = mod_rep(i as isize + a as isize, m);
            mod_rep(sigma.apply(arg) as isize - si, m)
        })
        .collect();
    Permutation::new(images)
}

/// The explicit product of the rho-maps along a cycle of sigma, composed in
/// cycle order (first element applied first). The cycle must be given in
/// sigma's cycle order.
pub fn rho_cycle_product(cycle: &[usize], sigma: &Permutation) -> Permutation {
    let mut acc = Permutation::identity(sigma.size());
    for &i in cycle {
        acc = rho(i, sigma).compose(&acc);
    }
    acc
}

/// Cycle type of the product of rho-maps along a cycle `c` of `sigma`:
/// equal to the cycle type of sigma^{|c|}, since the product collapses to
/// rho_{c_1}(sigma^{|c|}) and c_1 is one of its fixed points. Debug builds
/// verify against the explicit product.
pub fn rho_cycle_reduce(cycle: &[usize], sigma: &Permutation) -> Partition {
    let reduced = sigma.cycle_type().power(cycle.len() as u32);
    debug_assert_eq!(
        rho_cycle_product(cycle, sigma).cycle_type(),
        reduced,
        "rho product along {cycle:?} disagrees with partition power"
    );
    reduced
}

/// The smallest set of partitions containing all partitions of k and closed
/// under partition powers. Powers of a partition of k are partitions of k,
/// but the recursion domain is computed rather than assumed.
pub fn power_closure(k: u32) -> BTreeSet<Partition> {
    let mut closure: BTreeSet<Partition> = partitions_of(k).into_iter().collect();
    let mut frontier: Vec<Partition> = closure.iter().cloned().collect();
    while let Some(lambda) = frontier.pop() {
        let lcm = lambda
            .parts()
            .iter()
            .fold(1u32, |acc, &p| num_integer::lcm(acc, p));
        for i in 1..=lcm {
            let power = lambda.power(i);
            if closure.insert(power.clone()) {
                frontier.push(power);
            }
        }
    }
    closure
}

/// Remove one unit part: takes cycle types of S_{k+1} elements fixing k+1
/// back down to S_k.
fn drop_unit_part(lambda: &Partition) -> Result<Partition> {
    let mut parts = lambda.parts().to_vec();
    match parts.iter().rposition(|&p| p == 1) {
        Some(pos) => {
            parts.remove(pos);
            Ok(if parts.is_empty() {
                Partition::empty()
            } else {
                Partition::new(parts)
            })
        }
        None => Err(Error::InvalidPartition(format!(
            "{lambda} has no unit part to drop"
        ))),
    }
}

/// Solved family of per-cycle-type generating functions for rooted
/// k-coding trees, truncated at `n_max` hedra.
///
/// For each cycle type lambda of S_k, `y_ogf(lambda)` counts, by number of
/// hedra, the unlabeled front-rooted coding trees invariant under a
/// permutation of that type. The family satisfies
///
/// ```text
/// y(lambda) = exp( sum_{n>=1} x^n/n * prod_{i in lambda^n} y((lambda^n)^i)(x^{n i}) )
/// ```
///
/// solved degree-synchronously over the whole power closure: the x^n
/// prefactor makes coefficient n depend only on strictly lower coefficients,
/// so one sweep per degree suffices.
#[derive(Debug)]
pub struct KTreeContext {
    k: u32,
    n_max: usize,
    closure: Vec<Partition>,
    index: HashMap<Partition, usize>,
    y: Vec<PowerSeries>,
    xy: BTreeMap<Partition, PowerSeries>,
}

impl KTreeContext {
    pub fn new(k: u32, n_max: usize) -> Self {
        assert!(k >= 1);
        let closure: Vec<Partition> = power_closure(k).into_iter().collect();
        let index: HashMap<Partition, usize> = closure
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let count = closure.len();

        let mut y = vec![vec![Rational::zero(); n_max + 1]; count];
        let mut arg = vec![vec![Rational::zero(); n_max + 1]; count];
        for series in &mut y {
            series[0] = Rational::one();
        }

        for n in 1..=n_max {
            // products q_mu = prod_{i in mu} y(mu^i)(x^i), truncated at n-1;
            // every coefficient they read is already final
            let q: Vec<PowerSeries> = closure
                .iter()
                .map(|mu| {
                    let mut prod = PowerSeries::one(n - 1);
                    for &i in mu.parts() {
                        let base = index[&mu.power(i)];
                        let factor = PowerSeries::from_coeffs(y[base][..n].to_vec())
                            .substitute_power(i as usize);
                        prod = prod.mul(&factor);
                    }
                    prod
                })
                .collect();

            for (idx, lambda) in closure.iter().enumerate() {
                // coefficient n of sum_{m>=1} x^m/m * q_{lambda^m}(x^m):
                // only m dividing n contributes, with coefficient n/m - 1
                let mut coeff = Rational::zero();
                for m in 1..=n {
                    if n % m != 0 {
                        continue;
                    }
                    let c = q[index[&lambda.power(m as u32)]].coeff(n / m - 1);
                    if !c.is_zero() {
                        coeff += c / Rational::from_integer(m.into());
                    }
                }
                arg[idx][n] = coeff;
                // exp recurrence: y_n = (1/n) sum_j j*arg_j*y_{n-j}
                let mut acc = Rational::zero();
                for j in 1..=n {
                    if arg[idx][j].is_zero() {
                        continue;
                    }
                    acc += Rational::from_integer(j.into()) * &arg[idx][j] * &y[idx][n - j];
                }
                y[idx][n] = acc / Rational::from_integer(n.into());
            }
        }

        let mut ctx = KTreeContext {
            k,
            n_max,
            closure,
            index,
            y: y.into_iter().map(PowerSeries::from_coeffs).collect(),
            xy: BTreeMap::new(),
        };
        // the edge-rooted family is needed for every partition of k+1, plus
        // the unit extensions of partitions of k used by dissymmetry
        for lambda in partitions_of(k + 1) {
            let series = ctx.compute_xy(&lambda).expect("partition of k+1");
            ctx.xy.insert(lambda, series);
        }
        ctx
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn closure(&self) -> &[Partition] {
        &self.closure
    }

    /// The generating function of front-rooted coding trees invariant under
    /// a permutation of cycle type `lambda` (a partition of k).
    pub fn y_ogf(&self, lambda: &Partition) -> Result<&PowerSeries> {
        if lambda.total() != self.k {
            return Err(Error::InvalidPartition(format!(
                "{lambda} is not a partition of k = {}",
                self.k
            )));
        }
        Ok(&self.y[self.index[lambda]])
    }

    /// The generating function of edge-rooted coding trees invariant under a
    /// permutation of cycle type `lambda` (a partition of k+1):
    /// x * prod_{i in lambda} y(reduce(lambda^i))(x^i), where reduce drops
    /// the unit part contributed by the guaranteed fixed point.
    pub fn xy_ogf(&self, lambda: &Partition) -> Result<PowerSeries> {
        if lambda.total() != self.k + 1 {
            return Err(Error::InvalidPartition(format!(
                "{lambda} is not a partition of k+1 = {}",
                self.k + 1
            )));
        }
        if self.n_max == 0 {
            return Ok(PowerSeries::zero(0));
        }
        let mut prod = PowerSeries::one(self.n_max - 1);
        for &i in lambda.parts() {
            let reduced = drop_unit_part(&lambda.power(i))?;
            let factor = self.y[self.index[&reduced]]
                .truncated(self.n_max - 1)
                .substitute_power(i as usize);
            prod = prod.mul(&factor);
        }
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend_from_slice(prod.coeffs());
        Ok(PowerSeries::from_coeffs(coeffs))
    }

    /// The dissymmetry assembly: hedron-rooted plus front-rooted minus
    /// hedron-front-rooted, as z-weighted class averages.
    pub fn ktree_series(&self) -> Result<PowerSeries> {
        let mut total = PowerSeries::zero(self.n_max);
        for lambda in partitions_of(self.k + 1) {
            let w = Rational::one() / Rational::from_integer(lambda.z_weight().into());
            total = total.add(&self.xy_ogf(&lambda)?.scale(&w));
        }
        for lambda in partitions_of(self.k) {
            let w = Rational::one() / Rational::from_integer(lambda.z_weight().into());
            total = total.add(&self.y_ogf(&lambda)?.scale(&w));
            let extended = lambda.union(&Partition::new(vec![1]));
            total = total.sub(&self.xy_ogf(&extended)?.scale(&w));
        }
        Ok(total)
    }
}

/// Numbers of unlabeled k-trees with 0..=n hedra.
pub fn ktree_ogf(k: u32, n: usize) -> Result<Vec<BigUint>> {
    let ctx = KTreeContext::new(k, n);
    ctx.ktree_series()?.integer_coeffs()
}

// ---------------------------------------------------------------------------
// Full two-sort cycle-index path (cross-check at small degree)
// ---------------------------------------------------------------------------

fn ci_guard(x_bound: usize) -> Result<()> {
    if x_bound > CI_PATH_MAX_DEGREE {
        return Err(Error::BoundTooLarge {
            requested: x_bound,
            limit: CI_PATH_MAX_DEGREE,
        });
    }
    Ok(())
}

fn two_sort_trunc(k: u32, x_bound: usize) -> Truncation {
    // n hedra determine kn+1 fronts
    Truncation::two_sort(x_bound, k as usize * x_bound + 1)
}

fn p_var(sort: u8, i: u32, trunc: Truncation) -> CycleIndexSeries {
    let mut s = CycleIndexSeries::zero(trunc);
    s.add_term(PMonomial::var(sort, i), Rational::one());
    s
}

/// Solves the recursive two-sort cycle-index family for front-rooted coding
/// trees over the partition closure, by fixed-point sweeps in the x-degree.
fn solve_y_gamma_family(k: u32, x_bound: usize) -> Result<BTreeMap<Partition, CycleIndexSeries>> {
    ci_guard(x_bound)?;
    let trunc = two_sort_trunc(k, x_bound);
    let closure: Vec<Partition> = power_closure(k).into_iter().collect();
    let p1y = p_var(Y_SORT, 1, trunc);

    let mut memo: BTreeMap<Partition, CycleIndexSeries> = closure
        .iter()
        .map(|p| (p.clone(), p1y.clone()))
        .collect();

    for _ in 0..x_bound {
        let mut next = BTreeMap::new();
        for lambda in &closure {
            let mut sum = CycleIndexSeries::zero(trunc);
            for n in 1..=x_bound as u32 {
                let mut term = p_var(X_SORT, n, trunc);
                for &i in lambda.power(n).parts() {
                    let inner = &memo[&lambda.power(n * i)];
                    term = term.mul(&inner.scale_indices(n * i));
                    if term.is_zero() {
                        break;
                    }
                }
                sum = sum.add(&term.scale(&Rational::new(1.into(), n.into())));
            }
            let z = p1y.mul(&sum.exp()?);
            next.insert(lambda.clone(), z);
        }
        memo = next;
    }
    Ok(memo)
}

/// Two-sort gamma cycle index of front-rooted coding trees for a cycle type
/// of S_k, computed by the full recursion. Cross-check path; refuses large
/// bounds.
pub fn y_gamma_ci(lambda: &Partition, k: u32, x_bound: usize) -> Result<CycleIndexSeries> {
    if lambda.total() != k {
        return Err(Error::InvalidPartition(format!(
            "{lambda} is not a partition of k = {k}"
        )));
    }
    let memo = solve_y_gamma_family(k, x_bound)?;
    Ok(memo[lambda].clone())
}

fn xy_from_family(
    memo: &BTreeMap<Partition, CycleIndexSeries>,
    lambda: &Partition,
    k: u32,
    x_bound: usize,
) -> Result<CycleIndexSeries> {
    let trunc = two_sort_trunc(k, x_bound);
    let mut out = p_var(X_SORT, 1, trunc);
    for &i in lambda.parts() {
        let reduced = drop_unit_part(&lambda.power(i))?;
        out = out.mul(&memo[&reduced].scale_indices(i));
    }
    Ok(out)
}

/// Two-sort gamma cycle index of edge-rooted coding trees for a cycle type
/// of S_{k+1}. Cross-check path; refuses large bounds.
pub fn xy_gamma_ci(lambda: &Partition, k: u32, x_bound: usize) -> Result<CycleIndexSeries> {
    if lambda.total() != k + 1 {
        return Err(Error::InvalidPartition(format!(
            "{lambda} is not a partition of k+1 = {}",
            k + 1
        )));
    }
    let memo = solve_y_gamma_family(k, x_bound)?;
    xy_from_family(&memo, lambda, k, x_bound)
}

/// The two-sort cycle index of unlabeled k-trees to x-degree `x_bound`:
/// quotient averages of the edge-rooted family over S_{k+1} and of the
/// front- and edge-rooted families over S_k, combined by dissymmetry. Its
/// one-variable collapse must agree with [`ktree_ogf`].
pub fn ktree_ci(k: u32, x_bound: usize) -> Result<CycleIndexSeries> {
    let memo = solve_y_gamma_family(k, x_bound)?;
    let trunc = two_sort_trunc(k, x_bound);
    let mut total = CycleIndexSeries::zero(trunc);
    for lambda in partitions_of(k + 1) {
        let w = Rational::one() / Rational::from_integer(lambda.z_weight().into());
        total = total.add(&xy_from_family(&memo, &lambda, k, x_bound)?.scale(&w));
    }
    for lambda in partitions_of(k) {
        let w = Rational::one() / Rational::from_integer(lambda.z_weight().into());
        total = total.add(&memo[&lambda].scale(&w));
        let extended = lambda.union(&Partition::new(vec![1]));
        total = total.sub(&xy_from_family(&memo, &extended, k, x_bound)?.scale(&w));
    }
    Ok(total)
}

/// Permutation-keyed version of the front-rooted recursion, with the
/// rho-products carried out explicitly instead of reduced to partition
/// powers. Exists to validate that the family really is a class function.
pub fn y_gamma_ci_sigma(sigma: &Permutation, x_bound: usize) -> Result<CycleIndexSeries> {
    let k = sigma.size() as u32;
    assert!(k >= 1);
    ci_guard(x_bound)?;
    let trunc = two_sort_trunc(k, x_bound);

    // argument permutation for one cycle of tau^n
    let arg = |tau_n: &Permutation, cycle: &[usize]| -> Permutation {
        rho_cycle_product(cycle, &tau_n.extend())
            .restrict()
            .expect("rho products fix m+1")
    };

    // reachable set of permutations, closed under the recursion's arguments
    let mut reachable: BTreeSet<Permutation> = BTreeSet::new();
    let mut frontier = vec![sigma.clone()];
    while let Some(tau) = frontier.pop() {
        if reachable.contains(&tau) {
            continue;
        }
        reachable.insert(tau.clone());
        let lcm = tau
            .cycle_type()
            .parts()
            .iter()
            .fold(1u32, |acc, &p| num_integer::lcm(acc, p));
        for n in 1..=lcm {
            let tau_n = tau.power(n);
            for cycle in tau_n.cycles() {
                frontier.push(arg(&tau_n, &cycle));
            }
        }
    }

    let p1y = p_var(Y_SORT, 1, trunc);
    let mut memo: BTreeMap<Permutation, CycleIndexSeries> = reachable
        .iter()
        .map(|p| (p.clone(), p1y.clone()))
        .collect();

    for _ in 0..x_bound {
        let mut next = BTreeMap::new();
        for tau in &reachable {
            let mut sum = CycleIndexSeries::zero(trunc);
            for n in 1..=x_bound as u32 {
                let tau_n = tau.power(n);
                let mut term = p_var(X_SORT, n, trunc);
                for cycle in tau_n.cycles() {
                    let inner = &memo[&arg(&tau_n, &cycle)];
                    term = term.mul(&inner.scale_indices(n * cycle.len() as u32));
                    if term.is_zero() {
                        break;
                    }
                }
                sum = sum.add(&term.scale(&Rational::new(1.into(), n.into())));
            }
            next.insert(tau.clone(), p1y.mul(&sum.exp()?));
        }
        memo = next;
    }
    Ok(memo[sigma].clone())
}
