//! Integer partitions and the multiset operations that index conjugacy
//! classes of symmetric groups: generation in a fixed order, the centralizer
//! weight `z`, partition powers, splits, and part doubling.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use std::fmt;

/// A partition of a nonnegative integer, stored as a weakly decreasing list
/// of positive parts. Two partitions are equal iff their part multisets are
/// equal, so derived equality/hash/ordering are structural.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build a partition from arbitrary positive parts; sorts them into
    /// canonical (weakly decreasing) form.
    ///
    /// Panics if any part is zero.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The empty partition, the unique partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The parts, weakly decreasing.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned (sum of parts).
    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts, usually written l(lambda).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Multiplicity of `i` as a part.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Parts grouped as (part, multiplicity), in decreasing part order.
    pub fn part_multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The centralizer weight z = prod_i i^{m_i} m_i! where m_i is the
    /// multiplicity of i. The conjugacy class of cycle type lambda in S_n has
    /// n!/z elements.
    pub fn z_weight(&self) -> BigUint {
        let mut z = BigUint::one();
        for (part, mult) in self.part_multiplicities() {
            z *= BigUint::from(part).pow(mult as u32);
            for j in 1..=mult {
                z *= BigUint::from(j);
            }
        }
        z
    }

    /// Cycle type of sigma^i for any permutation sigma of this cycle type:
    /// each part m splits into gcd(m, i) parts of size m / gcd(m, i).
    pub fn power(&self, i: u32) -> Partition {
        assert!(i >= 1, "partition power requires a positive exponent");
        let mut parts = Vec::with_capacity(self.parts.len());
        for &m in &self.parts {
            let g = m.gcd(&i);
            for _ in 0..g {
                parts.push(m / g);
            }
        }
        Partition::new(parts)
    }

    /// The partition with every part doubled.
    pub fn double(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| 2 * p).collect(),
        }
    }

    /// Multiset union with another partition.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// All ordered pairs (mu, nu) with multiset union mu + nu equal to this
    /// partition; there are prod_i (m_i + 1) of them.
    pub fn split_pairs(&self) -> Vec<(Partition, Partition)> {
        let groups = self.part_multiplicities();
        let mut out = Vec::new();
        let mut choice = vec![0usize; groups.len()];
        loop {
            let mut mu = Vec::new();
            let mut nu = Vec::new();
            for (idx, &(part, mult)) in groups.iter().enumerate() {
                for _ in 0..choice[idx] {
                    mu.push(part);
                }
                for _ in 0..(mult - choice[idx]) {
                    nu.push(part);
                }
            }
            out.push((Partition::new(mu), Partition::new(nu)));
            // odometer over per-part counts taken into mu
            let mut idx = 0;
            loop {
                if idx == groups.len() {
                    return out;
                }
                if choice[idx] < groups[idx].1 {
                    choice[idx] += 1;
                    break;
                }
                choice[idx] = 0;
                idx += 1;
            }
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, each exactly once, in reverse-lexicographic order:
/// (n) first, (1,...,1) last. `partitions_of(0)` is the empty partition alone.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let top = remaining.min(max_part);
    for part in (1..=top).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}
