//! Gamma cycle indices: families of cycle-index series keyed by the elements
//! (or conjugacy classes) of a finite group acting on a species, with
//! componentwise algebra, gamma plethysm, and the Burnside quotient back to
//! an ordinary cycle index.

use crate::cycleindex::{CycleIndexSeries, Truncation};
use crate::error::Error;
use crate::partitions::{partitions_of, Partition};
use crate::powerseries::{PowerSeries, Rational};
use crate::Result;
use num_bigint::BigUint;
use num_traits::One;

/// The group a gamma cycle index is keyed by. Either an explicit element
/// list with a multiplication table, or the symmetric group S_m keyed by
/// conjugacy classes (cycle types), where components are class functions and
/// the key weight is the class size m!/z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GammaGroup {
    Explicit {
        labels: Vec<String>,
        /// mul[a][b] = index of (element a) * (element b); index 0 is the
        /// identity.
        mul: Vec<Vec<usize>>,
    },
    SymmetricClasses {
        m: u32,
        classes: Vec<Partition>,
    },
}

impl GammaGroup {
    /// The two-element group: identity `e` and the involution `tau`.
    pub fn s2() -> Self {
        GammaGroup::Explicit {
            labels: vec!["e".into(), "tau".into()],
            mul: vec![vec![0, 1], vec![1, 0]],
        }
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        GammaGroup::Explicit {
            labels: vec!["e".into()],
            mul: vec![vec![0]],
        }
    }

    /// S_m keyed by conjugacy class.
    pub fn symmetric_classes(m: u32) -> Self {
        GammaGroup::SymmetricClasses {
            m,
            classes: partitions_of(m),
        }
    }

    pub fn key_count(&self) -> usize {
        match self {
            GammaGroup::Explicit { labels, .. } => labels.len(),
            GammaGroup::SymmetricClasses { classes, .. } => classes.len(),
        }
    }

    pub fn key_label(&self, idx: usize) -> String {
        match self {
            GammaGroup::Explicit { labels, .. } => labels[idx].clone(),
            GammaGroup::SymmetricClasses { classes, .. } => classes[idx].to_string(),
        }
    }

    /// How many group elements the key stands for (1 for explicit elements,
    /// the class size for conjugacy classes).
    pub fn key_weight(&self, idx: usize) -> BigUint {
        match self {
            GammaGroup::Explicit { .. } => BigUint::one(),
            GammaGroup::SymmetricClasses { m, classes } => {
                let mut fact = BigUint::one();
                for j in 2..=*m {
                    fact *= BigUint::from(j);
                }
                fact / classes[idx].z_weight()
            }
        }
    }

    /// |Gamma|.
    pub fn order(&self) -> BigUint {
        match self {
            GammaGroup::Explicit { labels, .. } => BigUint::from(labels.len()),
            GammaGroup::SymmetricClasses { m, .. } => {
                let mut fact = BigUint::one();
                for j in 2..=*m {
                    fact *= BigUint::from(j);
                }
                fact
            }
        }
    }

    /// Key of gamma^n for the element/class behind key `idx`. Well-defined
    /// on classes because conjugation commutes with taking powers.
    pub fn power(&self, idx: usize, n: u32) -> usize {
        match self {
            GammaGroup::Explicit { mul, .. } => {
                let mut acc = 0; // identity
                for _ in 0..n {
                    acc = mul[acc][idx];
                }
                acc
            }
            GammaGroup::SymmetricClasses { classes, .. } => {
                let target = classes[idx].power(n);
                classes
                    .iter()
                    .position(|c| *c == target)
                    .expect("partition power stays within partitions of m")
            }
        }
    }

    pub fn key_index(&self, label: &str) -> Option<usize> {
        (0..self.key_count()).find(|&i| self.key_label(i) == label)
    }
}

/// A gamma cycle index: one cycle-index series per group key, all sharing a
/// truncation bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaCycleIndex {
    group: GammaGroup,
    components: Vec<CycleIndexSeries>,
}

impl GammaCycleIndex {
    pub fn new(group: GammaGroup, components: Vec<CycleIndexSeries>) -> Self {
        assert_eq!(group.key_count(), components.len());
        let trunc = components[0].truncation();
        assert!(
            components.iter().all(|c| c.truncation() == trunc),
            "all components must share one truncation bound"
        );
        GammaCycleIndex { group, components }
    }

    /// Lift an ordinary cycle index to the trivial action of `group`: every
    /// component is the same series.
    pub fn lift(series: CycleIndexSeries, group: GammaGroup) -> Self {
        let components = vec![series; group.key_count()];
        GammaCycleIndex { group, components }
    }

    pub fn group(&self) -> &GammaGroup {
        &self.group
    }

    pub fn truncation(&self) -> Truncation {
        self.components[0].truncation()
    }

    pub fn component(&self, idx: usize) -> &CycleIndexSeries {
        &self.components[idx]
    }

    pub fn component_by_label(&self, label: &str) -> Result<&CycleIndexSeries> {
        let idx = self
            .group
            .key_index(label)
            .ok_or_else(|| Error::MissingComponent(label.to_string()))?;
        Ok(&self.components[idx])
    }

    fn check_same_group(&self, other: &GammaCycleIndex) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &GammaCycleIndex) -> Result<GammaCycleIndex> {
        self.check_same_group(other)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(GammaCycleIndex {
            group: self.group.clone(),
            components,
        })
    }

    pub fn mul(&self, other: &GammaCycleIndex) -> Result<GammaCycleIndex> {
        self.check_same_group(other)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.mul(b))
            .collect();
        Ok(GammaCycleIndex {
            group: self.group.clone(),
            components,
        })
    }

    /// Gamma plethysm: component gamma of F o G is F(gamma) with p_n
    /// replaced by G(gamma^n), indices scaled by n.
    pub fn plethysm(&self, inner: &GammaCycleIndex) -> Result<GammaCycleIndex> {
        self.check_same_group(inner)?;
        let mut components = Vec::with_capacity(self.components.len());
        for idx in 0..self.components.len() {
            let comp = self.components[idx].plethysm_slots(|n| {
                let key = self.group.power(idx, n);
                Ok(inner.components[key].clone())
            })?;
            components.push(comp);
        }
        Ok(GammaCycleIndex {
            group: self.group.clone(),
            components,
        })
    }

    /// The ordinary cycle index of the quotient species: the weighted
    /// average (1/|Gamma|) sum over gamma of the components.
    pub fn quotient(&self) -> CycleIndexSeries {
        let mut sum = CycleIndexSeries::zero(self.truncation());
        for idx in 0..self.components.len() {
            let weight = Rational::from_integer(self.group.key_weight(idx).into());
            sum = sum.add(&self.components[idx].scale(&weight));
        }
        let order = Rational::from_integer(self.group.order().into());
        sum.scale(&(Rational::one() / order))
    }

    /// Ordinary generating function of unlabeled gamma-invariant structures
    /// for one component.
    pub fn ogf(&self, label: &str) -> Result<PowerSeries> {
        Ok(self.component_by_label(label)?.to_ogf())
    }

    /// Quotient OGF: weighted average of the per-component OGFs.
    pub fn quotient_ogf(&self) -> PowerSeries {
        let mut sum = PowerSeries::zero(self.truncation().degree);
        for idx in 0..self.components.len() {
            let weight = Rational::from_integer(self.group.key_weight(idx).into());
            sum = sum.add(&self.components[idx].to_ogf().scale(&weight));
        }
        let order = Rational::from_integer(self.group.order().into());
        sum.scale(&(Rational::one() / order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycleindex::{PMonomial, X_SORT};
    use crate::powerseries::ratio;

    fn t(d: usize) -> Truncation {
        Truncation::total(d)
    }

    fn mono(parts: &[u32]) -> PMonomial {
        PMonomial::from_partition(X_SORT, Partition::new(parts.to_vec()))
    }

    #[test]
    fn s2_group_structure() {
        let s2 = GammaGroup::s2();
        assert_eq!(s2.key_count(), 2);
        assert_eq!(s2.power(1, 2), 0, "tau^2 = e");
        assert_eq!(s2.power(1, 3), 1, "tau^3 = tau");
        assert_eq!(s2.power(0, 5), 0);
        assert_eq!(s2.order(), BigUint::from(2u32));
    }

    #[test]
    fn symmetric_class_weights_sum_to_group_order() {
        for m in 1..=6u32 {
            let g = GammaGroup::symmetric_classes(m);
            let total: BigUint = (0..g.key_count()).map(|i| g.key_weight(i)).sum();
            assert_eq!(total, g.order());
        }
    }

    #[test]
    fn symmetric_class_power_map_uses_partition_power() {
        let g = GammaGroup::symmetric_classes(4);
        let idx = g.key_index("(4)").unwrap();
        let squared = g.power(idx, 2);
        assert_eq!(g.key_label(squared), "(2,2)");
    }

    #[test]
    fn sum_with_zero_family_is_identity() {
        let e2 = CycleIndexSeries::e_n(2, t(4));
        let f = GammaCycleIndex::lift(e2, GammaGroup::s2());
        let zero = GammaCycleIndex::lift(CycleIndexSeries::zero(t(4)), GammaGroup::s2());
        assert_eq!(f.add(&zero).unwrap(), f);
    }

    #[test]
    fn product_is_componentwise() {
        let x = CycleIndexSeries::x_series(t(4));
        let f = GammaCycleIndex::lift(x, GammaGroup::s2());
        let sq = f.mul(&f).unwrap();
        for label in ["e", "tau"] {
            let comp = sq.component_by_label(label).unwrap();
            assert_eq!(comp.coefficient(&mono(&[1, 1])), ratio(1, 1));
            assert_eq!(comp.num_terms(), 1);
        }
    }

    #[test]
    fn group_mismatch_is_rejected() {
        let x = CycleIndexSeries::x_series(t(4));
        let f = GammaCycleIndex::lift(x.clone(), GammaGroup::s2());
        let g = GammaCycleIndex::lift(x, GammaGroup::trivial());
        assert_eq!(f.add(&g), Err(Error::GroupMismatch));
    }

    #[test]
    fn quotient_of_trivial_action_is_identity() {
        let e = CycleIndexSeries::e_series(t(6));
        let f = GammaCycleIndex::lift(e.clone(), GammaGroup::s2());
        assert_eq!(f.quotient(), e);

        let g = GammaCycleIndex::lift(e.clone(), GammaGroup::symmetric_classes(3));
        assert_eq!(g.quotient(), e);
    }

    #[test]
    fn quotient_averages_components() {
        // {e: 2 p1, tau: 0} -> p1
        let two_x = CycleIndexSeries::x_series(t(3)).scale(&ratio(2, 1));
        let zero = CycleIndexSeries::zero(t(3));
        let f = GammaCycleIndex::new(GammaGroup::s2(), vec![two_x, zero]);
        let q = f.quotient();
        assert_eq!(q, CycleIndexSeries::x_series(t(3)));

        // {e: 3 p1^2 + p2, tau: 2 p2} -> (3 p1^2 + 3 p2)/2
        let mut e_comp = CycleIndexSeries::zero(t(3));
        e_comp.add_term(mono(&[1, 1]), ratio(3, 1));
        e_comp.add_term(mono(&[2]), ratio(1, 1));
        let mut t_comp = CycleIndexSeries::zero(t(3));
        t_comp.add_term(mono(&[2]), ratio(2, 1));
        let f = GammaCycleIndex::new(GammaGroup::s2(), vec![e_comp, t_comp]);
        let q = f.quotient();
        assert_eq!(q.coefficient(&mono(&[1, 1])), ratio(3, 2));
        assert_eq!(q.coefficient(&mono(&[2])), ratio(3, 2));
    }

    #[test]
    fn quotient_commutes_with_sum() {
        let f = GammaCycleIndex::new(
            GammaGroup::s2(),
            vec![
                CycleIndexSeries::e_n(2, t(5)),
                CycleIndexSeries::c_n(2, t(5)),
            ],
        );
        let g = GammaCycleIndex::new(
            GammaGroup::s2(),
            vec![
                CycleIndexSeries::x_series(t(5)),
                CycleIndexSeries::e_n(3, t(5)),
            ],
        );
        let lhs = f.add(&g).unwrap().quotient();
        let rhs = f.quotient().add(&g.quotient());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn plethysm_with_trivial_lift_reduces_to_ordinary() {
        let omega = CycleIndexSeries::omega(t(6));
        let e_plus = CycleIndexSeries::e_plus(t(6));
        let lifted_outer = GammaCycleIndex::lift(omega.clone(), GammaGroup::s2());
        let lifted_inner = GammaCycleIndex::lift(e_plus.clone(), GammaGroup::s2());
        let gamma = lifted_outer.plethysm(&lifted_inner).unwrap();
        let ordinary = omega.plethysm(&e_plus).unwrap();
        assert_eq!(gamma.component_by_label("e").unwrap(), &ordinary);
        assert_eq!(gamma.component_by_label("tau").unwrap(), &ordinary);
    }

    #[test]
    fn plethysm_identity_on_singleton_family() {
        let x = GammaCycleIndex::lift(CycleIndexSeries::x_series(t(5)), GammaGroup::s2());
        let f = GammaCycleIndex::new(
            GammaGroup::s2(),
            vec![
                CycleIndexSeries::e_n(2, t(5)),
                CycleIndexSeries::c_n(2, t(5)),
            ],
        );
        assert_eq!(f.plethysm(&x).unwrap(), f);
    }

    #[test]
    fn plethysm_alternates_components_by_parity() {
        // distinct e/tau components visible through the slot parity: the
        // tau component of Omega o G must read G(tau) in slot 1 and G(e)
        // with doubled indices in slot 2.
        let omega = GammaCycleIndex::lift(CycleIndexSeries::omega(t(2)), GammaGroup::s2());
        let mut g_e = CycleIndexSeries::zero(t(2));
        g_e.add_term(mono(&[1]), ratio(2, 1)); // G(e) = 2 p1
        let mut g_tau = CycleIndexSeries::zero(t(2));
        g_tau.add_term(mono(&[1]), ratio(1, 1));
        g_tau.add_term(mono(&[2]), ratio(5, 1)); // G(tau) = p1 + 5 p2
        let g = GammaCycleIndex::new(GammaGroup::s2(), vec![g_e, g_tau]);

        let comp = omega.plethysm(&g).unwrap();
        // tau component: slot p1 <- G(tau); slot p1^2 <- G(tau)^2;
        // slot p2 <- G(e) with doubled indices = 2 p2.
        let tau = comp.component_by_label("tau").unwrap();
        assert_eq!(tau.coefficient(&mono(&[1])), ratio(1, 1));
        assert_eq!(tau.coefficient(&mono(&[2])), ratio(4, 1)); // 5 - (1/2)*2
        assert_eq!(tau.coefficient(&mono(&[1, 1])), ratio(-1, 2));
    }

    #[test]
    fn quotient_ogf_is_average_of_component_ogfs() {
        // substituting x^i for p_i commutes with the Burnside average
        let f = GammaCycleIndex::new(
            GammaGroup::s2(),
            vec![
                CycleIndexSeries::e_series(t(6)),
                CycleIndexSeries::c_n(4, t(6)),
            ],
        );
        assert_eq!(f.quotient().to_ogf(), f.quotient_ogf());

        let g = GammaCycleIndex::new(
            GammaGroup::symmetric_classes(3),
            (0..3)
                .map(|i| CycleIndexSeries::e_n(i, t(6)))
                .collect(),
        );
        assert_eq!(g.quotient().to_ogf(), g.quotient_ogf());
    }

    #[test]
    fn gamma_ogf_of_trivial_group_is_plain_ogf() {
        let e = CycleIndexSeries::e_series(t(5));
        let f = GammaCycleIndex::lift(e.clone(), GammaGroup::trivial());
        assert_eq!(f.ogf("e").unwrap(), e.to_ogf());
        assert_eq!(f.quotient_ogf(), e.to_ogf());
        assert!(f.ogf("tau").is_err());
    }
}
