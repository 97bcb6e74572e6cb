//! Sparse truncated cycle-index series in the power-sum basis.
//!
//! Series live in `Q[p_1, p_2, ...]` (one or two sorts of indeterminates),
//! truncated at an explicit degree bound. The operations mirror the species
//! algebra: sum, product, plethysm, derivative, pointing, the standard
//! species (X, E, E_n, E+, C_n, L_n, Omega), and the plethystic
//! compositional inverse by iterated substitution.

use crate::error::Error;
use crate::partitions::{partitions_of, Partition};
use crate::powerseries::{PowerSeries, Rational};
use crate::Result;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Sort index: 0 is the x-sort, 1 the y-sort.
pub type Sort = u8;

pub const X_SORT: Sort = 0;
pub const Y_SORT: Sort = 1;

/// A monomial in the power-sum indeterminates: per sort, the multiset of
/// indices as a partition. `p_2[x] p_1[y]^3` is `{0: (2), 1: (1,1,1)}`.
/// Sorts with empty partitions are absent, so the constant monomial is the
/// empty map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PMonomial {
    sorts: Vec<(Sort, Partition)>,
}

impl PMonomial {
    /// The constant monomial 1.
    pub fn one() -> Self {
        PMonomial { sorts: Vec::new() }
    }

    /// The monomial p_lambda in one sort.
    pub fn from_partition(sort: Sort, lambda: Partition) -> Self {
        if lambda.is_empty() {
            return Self::one();
        }
        PMonomial {
            sorts: vec![(sort, lambda)],
        }
    }

    /// The single variable p_i in the given sort.
    pub fn var(sort: Sort, i: u32) -> Self {
        Self::from_partition(sort, Partition::new(vec![i]))
    }

    pub fn is_one(&self) -> bool {
        self.sorts.is_empty()
    }

    /// The partition of indices in one sort (empty if the sort is absent).
    pub fn partition(&self, sort: Sort) -> Partition {
        self.sorts
            .iter()
            .find(|(s, _)| *s == sort)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(Partition::empty)
    }

    pub fn degree(&self, sort: Sort) -> u32 {
        self.sorts
            .iter()
            .find(|(s, _)| *s == sort)
            .map(|(_, p)| p.total())
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.sorts.iter().map(|(_, p)| p.total()).sum()
    }

    pub fn max_sort(&self) -> Option<Sort> {
        self.sorts.iter().map(|(s, _)| *s).max()
    }

    /// Product of monomials: multiset union of indices, per sort.
    pub fn mul(&self, other: &PMonomial) -> PMonomial {
        let mut map: BTreeMap<Sort, Partition> = BTreeMap::new();
        for (s, p) in self.sorts.iter().chain(other.sorts.iter()) {
            map.entry(*s)
                .and_modify(|q| *q = q.union(p))
                .or_insert_with(|| p.clone());
        }
        PMonomial {
            sorts: map.into_iter().collect(),
        }
    }

    /// Every index multiplied by k, in every sort (p_i becomes p_{ki}).
    pub fn scale_indices(&self, k: u32) -> PMonomial {
        PMonomial {
            sorts: self
                .sorts
                .iter()
                .map(|(s, p)| {
                    (
                        *s,
                        Partition::new(p.parts().iter().map(|&m| m * k).collect()),
                    )
                })
                .collect(),
        }
    }
}

impl PartialOrd for PMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PMonomial {
    /// Graded order: by total degree, then by the sorted (sort, partition)
    /// list. Keeps map iteration degree-ascending and output deterministic.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.sorts.cmp(&other.sorts))
    }
}

impl fmt::Display for PMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let multi_sort = self.sorts.len() > 1 || self.sorts.iter().any(|(s, _)| *s != X_SORT);
        let mut first = true;
        for (sort, p) in &self.sorts {
            let mut groups = p.part_multiplicities();
            groups.reverse(); // ascending index order reads naturally
            for (part, mult) in groups {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "p{part}")?;
                if multi_sort {
                    write!(f, "[{}]", if *sort == X_SORT { "x" } else { "y" })?;
                }
                if mult > 1 {
                    write!(f, "^{mult}")?;
                }
            }
        }
        Ok(())
    }
}

/// Truncation policy. By default a single bound on the total degree across
/// all sorts; setting `y_degree` instead bounds the x-sort by `degree` and
/// the y-sort by `y_degree` independently, which the k-tree recursions need
/// (n hedra force kn+1 fronts).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Truncation {
    pub degree: usize,
    pub y_degree: Option<usize>,
}

impl Truncation {
    pub fn total(degree: usize) -> Self {
        Truncation {
            degree,
            y_degree: None,
        }
    }

    pub fn two_sort(degree: usize, y_degree: usize) -> Self {
        Truncation {
            degree,
            y_degree: Some(y_degree),
        }
    }

    pub fn admits(&self, m: &PMonomial) -> bool {
        match self.y_degree {
            None => m.total_degree() as usize <= self.degree,
            Some(y) => m.degree(X_SORT) as usize <= self.degree && m.degree(Y_SORT) as usize <= y,
        }
    }

    /// The largest total degree any admitted monomial can have.
    fn max_total(&self) -> usize {
        self.degree + self.y_degree.unwrap_or(0)
    }

    /// Combined policy for binary operations: bounds are taken fieldwise to
    /// the smaller value. Operands are expected to share a mode (both
    /// total-degree or both two-sort); a mixed combination keeps the
    /// explicit y bound.
    pub fn min(&self, other: &Truncation) -> Truncation {
        let degree = self.degree.min(other.degree);
        let y_degree = match (self.y_degree, other.y_degree) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a),
            (Some(a), Some(b)) => Some(a.min(b)),
        };
        Truncation { degree, y_degree }
    }
}

/// A truncated cycle-index series: a sparse map from canonical monomials to
/// exact rational coefficients. Zero coefficients are never stored.
///
/// `polynomial` records that the stored terms are the complete series rather
/// than a truncation of an infinite one; only such series may be composed
/// plethystically with an inner series having a nonzero constant term. The
/// flag is provenance, not value: equality compares truncation and terms.
#[derive(Debug, Clone)]
pub struct CycleIndexSeries {
    trunc: Truncation,
    terms: BTreeMap<PMonomial, Rational>,
    polynomial: bool,
}

impl PartialEq for CycleIndexSeries {
    fn eq(&self, other: &Self) -> bool {
        self.trunc == other.trunc && self.terms == other.terms
    }
}

impl Eq for CycleIndexSeries {}

impl CycleIndexSeries {
    pub fn zero(trunc: Truncation) -> Self {
        CycleIndexSeries {
            trunc,
            terms: BTreeMap::new(),
            polynomial: true,
        }
    }

    pub fn one(trunc: Truncation) -> Self {
        let mut s = Self::zero(trunc);
        s.add_term(PMonomial::one(), Rational::one());
        s
    }

    /// Z_X = p_1.
    pub fn x_series(trunc: Truncation) -> Self {
        let mut s = Self::zero(trunc);
        s.add_term(PMonomial::var(X_SORT, 1), Rational::one());
        s.polynomial = trunc.degree >= 1;
        s
    }

    /// Z_E truncated: sum over n <= bound of Z_{E_n}.
    pub fn e_series(trunc: Truncation) -> Self {
        let mut s = Self::zero(trunc);
        for n in 0..=trunc.degree as u32 {
            s.accumulate(Self::e_n(n, trunc));
        }
        s.polynomial = false;
        s
    }

    /// Z_{E_n} = sum over lambda of n of p_lambda / z_lambda.
    pub fn e_n(n: u32, trunc: Truncation) -> Self {
        let mut s = Self::zero(trunc);
        for lambda in partitions_of(n) {
            let z = Rational::from_integer(lambda.z_weight().into());
            s.add_term(
                PMonomial::from_partition(X_SORT, lambda),
                Rational::one() / z,
            );
        }
        // a bound below n would silently drop the whole degree-n slice
        s.polynomial = n as usize <= trunc.degree;
        s
    }

    /// Z_{E+} = Z_E - 1, nonempty sets.
    pub fn e_plus(trunc: Truncation) -> Self {
        let mut s = Self::e_series(trunc);
        s.sub_assign_term(PMonomial::one(), Rational::one());
        s
    }

    /// Z_{C_n} = (1/n) sum over d | n of phi(d) p_d^{n/d}.
    pub fn c_n(n: u32, trunc: Truncation) -> Self {
        assert!(n >= 1);
        let mut s = Self::zero(trunc);
        for d in 1..=n {
            if !n.is_multiple_of(d) {
                continue;
            }
            let monomial =
                PMonomial::from_partition(X_SORT, Partition::new(vec![d; (n / d) as usize]));
            let coeff = Rational::new(euler_phi(d).into(), n.into());
            s.add_term(monomial, coeff);
        }
        s.polynomial = n as usize <= trunc.degree;
        s
    }

    /// Z_{L_n} = p_1^n.
    pub fn l_n(n: u32, trunc: Truncation) -> Self {
        let mut s = Self::zero(trunc);
        s.add_term(
            PMonomial::from_partition(X_SORT, Partition::new(vec![1; n as usize])),
            Rational::one(),
        );
        s.polynomial = n as usize <= trunc.degree;
        s
    }

    /// Z_Omega, the plethystic inverse of E - 1:
    /// sum over k >= 1 of (mu(k)/k) log(1 + p_k), expanded and truncated.
    pub fn omega(trunc: Truncation) -> Self {
        let bound = trunc.degree as u32;
        let mut s = Self::zero(trunc);
        for k in 1..=bound {
            let mu = moebius(k);
            if mu == 0 {
                continue;
            }
            let mut j = 1u32;
            while k * j <= bound {
                // log(1 + p_k) = sum (-1)^{j+1} p_k^j / j
                let sign = if j % 2 == 1 { 1 } else { -1 };
                let coeff = Rational::new((mu * sign).into(), (k * j).into());
                let monomial =
                    PMonomial::from_partition(X_SORT, Partition::new(vec![k; j as usize]));
                s.add_term(monomial, coeff);
                j += 1;
            }
        }
        s.polynomial = false;
        s
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }

    pub fn is_polynomial(&self) -> bool {
        self.polynomial
    }

    pub fn set_polynomial(&mut self, value: bool) {
        self.polynomial = value;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &PMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&PMonomial::one())
    }

    /// Smallest total degree with a nonzero term; None for the zero series.
    pub fn min_total_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.total_degree())
    }

    /// True if only sort-0 indeterminates occur.
    pub fn is_one_sort(&self) -> bool {
        self.terms
            .keys()
            .all(|m| m.max_sort().is_none_or(|s| s == X_SORT))
    }

    /// Add `coeff * monomial`, respecting truncation and purging zeros.
    pub fn add_term(&mut self, monomial: PMonomial, coeff: Rational) {
        if coeff.is_zero() || !self.trunc.admits(&monomial) {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn sub_assign_term(&mut self, monomial: PMonomial, coeff: Rational) {
        self.add_term(monomial, -coeff);
    }

    fn accumulate(&mut self, other: CycleIndexSeries) {
        for (m, c) in other.terms {
            self.add_term(m, c);
        }
    }

    pub fn add(&self, other: &CycleIndexSeries) -> CycleIndexSeries {
        let trunc = self.trunc.min(&other.trunc);
        let mut out = CycleIndexSeries::zero(trunc);
        out.polynomial = self.polynomial && other.polynomial;
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CycleIndexSeries) -> CycleIndexSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycleIndexSeries {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> CycleIndexSeries {
        let mut out = CycleIndexSeries::zero(self.trunc);
        out.polynomial = self.polynomial;
        if factor.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c * factor);
        }
        out
    }

    pub fn mul(&self, other: &CycleIndexSeries) -> CycleIndexSeries {
        let trunc = self.trunc.min(&other.trunc);
        let cap = trunc.max_total() as u32;
        let mut out = CycleIndexSeries::zero(trunc);
        out.polynomial = self.polynomial && other.polynomial;
        for (m1, c1) in &self.terms {
            let d1 = m1.total_degree();
            if d1 > cap {
                break; // graded order: everything after is larger
            }
            for (m2, c2) in &other.terms {
                if d1 + m2.total_degree() > cap {
                    break;
                }
                let m = m1.mul(m2);
                if trunc.admits(&m) {
                    out.add_term(m, c1 * c2);
                }
            }
        }
        out
    }

    /// Multiply by the single variable p_1 of a sort (used by pointing).
    fn mul_var(&self, sort: Sort) -> CycleIndexSeries {
        let var = PMonomial::var(sort, 1);
        let mut out = CycleIndexSeries::zero(self.trunc);
        out.polynomial = self.polynomial;
        for (m, c) in &self.terms {
            out.add_term(m.mul(&var), c.clone());
        }
        out
    }

    /// Formal partial derivative with respect to p_1 of the given sort.
    pub fn derivative(&self, sort: Sort) -> CycleIndexSeries {
        let mut out = CycleIndexSeries::zero(self.trunc);
        out.polynomial = self.polynomial;
        for (m, c) in &self.terms {
            let p = m.partition(sort);
            let mult = p.multiplicity(1);
            if mult == 0 {
                continue;
            }
            let mut parts: Vec<u32> = p.parts().to_vec();
            let pos = parts.iter().rposition(|&q| q == 1).expect("has a 1-part");
            parts.remove(pos);
            let reduced = if parts.is_empty() {
                PMonomial::one()
            } else {
                PMonomial::from_partition(sort, Partition::new(parts))
            };
            let rest: Vec<(Sort, Partition)> = m
                .sorts
                .iter()
                .filter(|(s, _)| *s != sort)
                .cloned()
                .collect();
            let mut monomial = reduced;
            for (s, q) in rest {
                monomial = monomial.mul(&PMonomial::from_partition(s, q));
            }
            out.add_term(monomial, c * Rational::from_integer(mult.into()));
        }
        out
    }

    /// Pointing: p_1 * d/dp_1, in the given sort.
    pub fn point(&self, sort: Sort) -> CycleIndexSeries {
        self.derivative(sort).mul_var(sort)
    }

    /// Every p_i replaced by p_{ki}, in every sort.
    pub fn scale_indices(&self, k: u32) -> CycleIndexSeries {
        let mut out = CycleIndexSeries::zero(self.trunc);
        out.polynomial = self.polynomial;
        for (m, c) in &self.terms {
            out.add_term(m.scale_indices(k), c.clone());
        }
        out
    }

    /// exp of a series with zero constant term.
    pub fn exp(&self) -> Result<CycleIndexSeries> {
        if !self.constant_term().is_zero() {
            return Err(Error::ExpNonzeroConstant);
        }
        let cap = self.trunc.max_total();
        let mut result = CycleIndexSeries::one(self.trunc);
        result.polynomial = false;
        let mut power = CycleIndexSeries::one(self.trunc);
        for j in 1..=cap {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            power = power.scale(&Rational::new(1.into(), j.into()));
            for (m, c) in &power.terms {
                result.add_term(m.clone(), c.clone());
            }
        }
        Ok(result)
    }

    /// Plethysm f o g: substitute into each p_k of a one-sort f the series g
    /// with all indices (every sort) scaled by k.
    ///
    /// Requires g to have zero constant term unless f is a polynomial
    /// species, exactly the condition for the substitution to be
    /// well-defined.
    pub fn plethysm(&self, g: &CycleIndexSeries) -> Result<CycleIndexSeries> {
        self.plethysm_slots(|_| Ok(g.clone()))
    }

    /// Generalized plethysm where the series substituted into p_k may depend
    /// on k: slot k receives `slot(k)` with all indices scaled by k. Ordinary
    /// plethysm is the constant-slot case; gamma plethysm feeds slot k the
    /// gamma^k component.
    pub fn plethysm_slots<F>(&self, mut slot: F) -> Result<CycleIndexSeries>
    where
        F: FnMut(u32) -> Result<CycleIndexSeries>,
    {
        if !self.is_one_sort() {
            return Err(Error::NotOneSort);
        }
        let mut trunc = self.trunc;
        let mut polynomial = self.polynomial;
        // (slot(k) with indices scaled by k), and its powers, built on demand
        let mut scaled: HashMap<u32, CycleIndexSeries> = HashMap::new();
        let mut powers: HashMap<(u32, usize), CycleIndexSeries> = HashMap::new();
        let mut pending: Vec<(PMonomial, Rational)> = Vec::new();

        for (m, c) in &self.terms {
            let lambda = m.partition(X_SORT);
            for (part, _) in lambda.part_multiplicities() {
                if let std::collections::hash_map::Entry::Vacant(e) = scaled.entry(part) {
                    let inner = slot(part)?;
                    if !inner.constant_term().is_zero() && !self.polynomial {
                        return Err(Error::IllDefinedPlethysm);
                    }
                    trunc = trunc.min(&inner.trunc);
                    polynomial = polynomial && inner.polynomial;
                    e.insert(inner.scale_indices(part));
                }
            }
            pending.push((m.clone(), c.clone()));
        }

        let cap = trunc.max_total() as u32;
        for s in scaled.values_mut() {
            s.trunc = trunc;
            s.retruncate();
        }

        let mut out = CycleIndexSeries::zero(trunc);
        out.polynomial = polynomial;
        for (m, c) in pending {
            let lambda = m.partition(X_SORT);
            if lambda.is_empty() {
                out.add_term(PMonomial::one(), c);
                continue;
            }
            // min total degree the substituted product can reach
            let floor: u64 = lambda
                .part_multiplicities()
                .iter()
                .map(|&(part, mult)| {
                    mult as u64 * u64::from(scaled[&part].min_total_degree().unwrap_or(u32::MAX))
                })
                .sum();
            if floor > u64::from(cap) {
                continue;
            }
            let mut product = CycleIndexSeries::one(trunc);
            for (part, mult) in lambda.part_multiplicities() {
                let factor = powers
                    .entry((part, mult))
                    .or_insert_with(|| {
                        let base = &scaled[&part];
                        let mut pow = base.clone();
                        for _ in 1..mult {
                            pow = pow.mul(base);
                        }
                        pow
                    })
                    .clone();
                product = product.mul(&factor);
                if product.is_zero() {
                    break;
                }
            }
            for (pm, pc) in &product.terms {
                out.add_term(pm.clone(), pc * &c);
            }
        }
        Ok(out)
    }

    fn retruncate(&mut self) {
        let trunc = self.trunc;
        self.terms.retain(|m, _| trunc.admits(m));
    }

    /// The plethystic compositional inverse of a series of the form
    /// p_1 + (terms of degree >= 2), by iterated substitution
    /// phi <- p_1 - (psi - p_1) o phi, once per degree of the bound.
    pub fn comp_inverse(&self, bound: usize) -> Result<CycleIndexSeries> {
        if !self.is_one_sort() {
            return Err(Error::NotOneSort);
        }
        let p1 = PMonomial::var(X_SORT, 1);
        if !self.constant_term().is_zero() || !self.coefficient(&p1).is_one() {
            return Err(Error::NotInvertible);
        }
        let trunc = Truncation::total(bound).min(&self.trunc);
        let mut tail = CycleIndexSeries::zero(trunc);
        tail.polynomial = self.polynomial;
        for (m, c) in &self.terms {
            if m.total_degree() >= 2 {
                tail.add_term(m.clone(), c.clone());
            }
        }
        let x = CycleIndexSeries::x_series(trunc);
        let mut phi = x.clone();
        for _ in 0..bound {
            phi = x.sub(&tail.plethysm(&phi)?);
        }
        // the inverse is a truncation of an infinite series even when psi
        // itself is polynomial
        phi.polynomial = false;
        Ok(phi)
    }

    /// Substitute 1 for every indeterminate of sorts other than sort 0,
    /// collapsing to a one-sort series.
    pub fn collapse_to_one_sort(&self) -> CycleIndexSeries {
        let mut out = CycleIndexSeries::zero(self.trunc);
        out.polynomial = self.polynomial;
        for (m, c) in &self.terms {
            out.add_term(
                PMonomial::from_partition(X_SORT, m.partition(X_SORT)),
                c.clone(),
            );
        }
        out
    }

    /// Ordinary generating function of unlabeled structures: p_i -> x^i.
    /// Sorts beyond the first are collapsed by substituting 1 first.
    pub fn to_ogf(&self) -> PowerSeries {
        let collapsed;
        let src = if self.is_one_sort() {
            self
        } else {
            collapsed = self.collapse_to_one_sort();
            &collapsed
        };
        let mut ps = PowerSeries::zero(src.trunc.degree);
        for (m, c) in &src.terms {
            let d = m.total_degree() as usize;
            if d <= src.trunc.degree {
                let cur = ps.coeff(d) + c;
                ps.set_coeff(d, cur);
            }
        }
        ps
    }

    /// Exponential generating function of labeled structures:
    /// p_1 -> x, p_i -> 0 for i > 1. One-sort series only.
    pub fn to_egf(&self) -> Result<PowerSeries> {
        if !self.is_one_sort() {
            return Err(Error::NotOneSort);
        }
        let mut ps = PowerSeries::zero(self.trunc.degree);
        for (m, c) in &self.terms {
            let p = m.partition(X_SORT);
            if p.parts().iter().all(|&q| q == 1) {
                let d = p.len();
                if d <= self.trunc.degree {
                    let cur = ps.coeff(d) + c;
                    ps.set_coeff(d, cur);
                }
            }
        }
        Ok(ps)
    }
}

impl fmt::Display for CycleIndexSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

/// Euler's totient, by trial-division factorization.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Moebius function, by trial-division factorization.
pub fn moebius(n: u32) -> i64 {
    let mut n = n;
    let mut primes = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            primes += 1;
        }
        p += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}
