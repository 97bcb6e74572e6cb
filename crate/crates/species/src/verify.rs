//! Named check suites: algebraic identities, agreement with the brute-force
//! oracles, and reproduction of the reference count tables. The CLI `verify`
//! subcommand and the acceptance tests both run these.

use crate::bipartite::BipartitePipeline;
use crate::cycleindex::{CycleIndexSeries, Truncation, X_SORT};
use crate::ktrees::{
    ktree_ci, ktree_ogf, rho, rho_cycle_product, y_gamma_ci, y_gamma_ci_sigma, KTreeContext,
    Permutation,
};
use crate::oracle::{self, GraphFamily};
use crate::partitions::Partition;
use crate::powerseries::{PowerSeries, Rational};
use num_bigint::BigUint;
use num_traits::One;
use std::collections::BTreeMap;
use std::str::FromStr;

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &str) -> Self {
        Check {
            name: name.to_string(),
            passed: true,
            detail: String::new(),
        }
    }

    fn fail(name: &str, detail: String) -> Self {
        Check {
            name: name.to_string(),
            passed: false,
            detail,
        }
    }

    fn from_eq<T: PartialEq + std::fmt::Debug>(name: &str, got: T, want: T) -> Self {
        if got == want {
            Self::pass(name)
        } else {
            Self::fail(name, format!("got {got:?}, want {want:?}"))
        }
    }
}

/// Reference counts of unlabeled bipartite blocks for n = 1..=10.
pub const BPBLOCKS_COUNTS: [u64; 10] = [1, 1, 0, 1, 1, 5, 8, 42, 146, 956];

/// Reference counts of unlabeled k-trees with 0..=30 hedra, k = 1, 2, 3.
pub const KTREE_COUNTS_K1: [&str; 31] = [
    "1", "1", "1", "2", "3", "6", "11", "23", "47", "106", "235", "551", "1301", "3159", "7741",
    "19320", "48629", "123867", "317955", "823065", "2144505", "5623756", "14828074", "39299897",
    "104636890", "279793450", "751065460", "2023443032", "5469566585", "14830871802",
    "40330829030",
];

pub const KTREE_COUNTS_K2: [&str; 31] = [
    "1", "1", "1", "2", "5", "12", "39", "136", "529", "2171", "9368", "41534", "188942",
    "874906", "4115060", "19602156", "94419351", "459183768", "2252217207", "11130545494",
    "55382155396", "277255622646", "1395731021610", "7061871805974", "35896206800034",
    "183241761631584", "939081790240231", "4830116366008952", "24927175920361855",
    "129047003236769110", "670024248072778235",
];

pub const KTREE_COUNTS_K3: [&str; 31] = [
    "1", "1", "1", "2", "5", "15", "58", "275", "1505", "9003", "56931", "372973", "2506312",
    "17165954", "119398333", "841244274", "5993093551", "43109340222", "312747109787",
    "2286190318744", "16826338257708", "124605344758149", "927910207739261", "6945172081954449",
    "52225283886702922", "394398440097305861", "2990207055800156659", "22753619938517594709",
    "173727411594289881739", "1330614569159767263501", "10221394007530945428347",
];

/// Spot reference counts for k = 4..=10 at n = 10, 20, 30.
pub const KTREE_SPOT_COUNTS: [(u32, [(usize, &str); 3]); 7] = [
    (4, [
        (10, "127194"),
        (20, "592227182125701"),
        (30, "5979782184127687211698807"),
    ]),
    (5, [
        (10, "168287"),
        (20, "5754095507495584"),
        (30, "519599497193547405843864376"),
    ]),
    (6, [
        (10, "179562"),
        (20, "23679803216530017"),
        (30, "12739517442131428048314937036"),
    ]),
    (7, [
        (10, "181098"),
        (20, "53619437319817482"),
        (30, "126034923903699365819345698783"),
    ]),
    (8, [
        (10, "181204"),
        (20, "81112295567987808"),
        (30, "629755261439815181073415721542"),
    ]),
    (9, [
        (10, "181204"),
        (20, "96275031338911591"),
        (30, "1859625249087075723295908757282"),
    ]),
    (10, [
        (10, "181204"),
        (20, "101612006684523937"),
        (30, "3670778410024403632885217999313"),
    ]),
];

fn big(s: &str) -> BigUint {
    BigUint::from_str(s).expect("reference count is a decimal integer")
}

/// Algebraic-identity checks: compositional-inverse round trips, plethysm
/// distributivity, generating-function homomorphisms, pointing, the rho
/// lemmas at permutation level, class-function agreement, cross-path
/// consistency for k-trees, and the integrality gate.
pub fn identity_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    let t12 = Truncation::total(12);

    // inverse round trip at degree 12, for nonempty sets and a second series
    {
        let x = CycleIndexSeries::x_series(t12);
        let psi = CycleIndexSeries::e_plus(t12);
        let round = psi
            .comp_inverse(12)
            .and_then(|phi| psi.plethysm(&phi));
        checks.push(match round {
            Ok(r) => Check::from_eq("omega-round-trip-sets", r, x.clone()),
            Err(e) => Check::fail("omega-round-trip-sets", e.to_string()),
        });

        let mut psi2 = CycleIndexSeries::x_series(t12);
        psi2.add_term(
            crate::cycleindex::PMonomial::from_partition(X_SORT, Partition::new(vec![1, 1])),
            Rational::one(),
        );
        psi2.add_term(
            crate::cycleindex::PMonomial::from_partition(X_SORT, Partition::new(vec![2])),
            Rational::new(1.into(), 2.into()),
        );
        let round2 = psi2
            .comp_inverse(12)
            .and_then(|phi| psi2.plethysm(&phi));
        checks.push(match round2 {
            Ok(r) => Check::from_eq("inverse-round-trip-mixed", r, x),
            Err(e) => Check::fail("inverse-round-trip-mixed", e.to_string()),
        });

        checks.push(match CycleIndexSeries::e_plus(t12).comp_inverse(12) {
            Ok(phi) => Check::from_eq(
                "inverse-of-nonempty-sets-is-omega",
                phi,
                CycleIndexSeries::omega(t12),
            ),
            Err(e) => Check::fail("inverse-of-nonempty-sets-is-omega", e.to_string()),
        });
    }

    // plethysm right-distributivity over + and * at degree 8
    {
        let t8 = Truncation::total(8);
        let f = CycleIndexSeries::e_n(2, t8);
        let g = CycleIndexSeries::c_n(3, t8);
        let h = CycleIndexSeries::e_plus(t8);
        let sum_ok = f.add(&g).plethysm(&h).unwrap()
            == f.plethysm(&h).unwrap().add(&g.plethysm(&h).unwrap());
        let prod_ok = f.mul(&g).plethysm(&h).unwrap()
            == f.plethysm(&h).unwrap().mul(&g.plethysm(&h).unwrap());
        checks.push(Check::from_eq(
            "plethysm-right-distributivity",
            (sum_ok, prod_ok),
            (true, true),
        ));
    }

    // OGF and EGF are ring homomorphisms
    {
        let t8 = Truncation::total(8);
        let samples = [
            CycleIndexSeries::e_series(t8),
            CycleIndexSeries::c_n(3, t8),
            CycleIndexSeries::omega(t8),
            CycleIndexSeries::e_n(4, t8),
        ];
        let mut ok = true;
        for f in &samples {
            for g in &samples {
                ok &= f.mul(g).to_ogf() == f.to_ogf().mul(&g.to_ogf());
                ok &= f.add(g).to_ogf() == f.to_ogf().add(&g.to_ogf());
                ok &= f.mul(g).to_egf().unwrap()
                    == f.to_egf().unwrap().mul(&g.to_egf().unwrap());
                ok &= f.add(g).to_egf().unwrap()
                    == f.to_egf().unwrap().add(&g.to_egf().unwrap());
            }
        }
        checks.push(Check::from_eq("ogf-egf-ring-homomorphism", ok, true));
    }

    // pointing = p1 * derivative
    {
        let t8 = Truncation::total(8);
        let x = CycleIndexSeries::x_series(t8);
        let mut ok = true;
        for f in [
            CycleIndexSeries::e_series(t8),
            CycleIndexSeries::c_n(4, t8),
            CycleIndexSeries::omega(t8),
        ] {
            ok &= f.point(X_SORT) == x.mul(&f.derivative(X_SORT));
        }
        checks.push(Check::from_eq("pointing-identity", ok, true));
    }

    // rho lemmas as permutation-level equalities, k <= 7
    {
        let mut fixed_ok = true;
        let mut product_ok = true;
        for m in 2..=7 {
            for sigma in Permutation::all(m) {
                for i in 1..=m {
                    if sigma.apply(i) == i
                        && rho(i, &sigma).cycle_type() != sigma.cycle_type()
                    {
                        fixed_ok = false;
                    }
                }
                for cycle in sigma.cycles() {
                    let product = rho_cycle_product(&cycle, &sigma);
                    let collapsed = rho(cycle[0], &sigma.power(cycle.len() as u32));
                    if product != collapsed {
                        product_ok = false;
                    }
                }
            }
        }
        checks.push(Check::from_eq("rho-fixed-point-lemma", fixed_ok, true));
        checks.push(Check::from_eq("rho-product-lemma", product_ok, true));
    }

    // class-function agreement: sigma-keyed recursion constant on classes
    // and equal to the class-keyed recursion, k <= 3, degree <= 5
    {
        let mut ok = true;
        let mut detail = String::new();
        'outer: for k in 1..=3usize {
            let mut by_type: BTreeMap<Partition, Vec<Permutation>> = BTreeMap::new();
            for sigma in Permutation::all(k) {
                by_type.entry(sigma.cycle_type()).or_default().push(sigma);
            }
            for (lambda, sigmas) in by_type {
                let reference = match y_gamma_ci_sigma(&sigmas[0], 5) {
                    Ok(r) => r,
                    Err(e) => {
                        ok = false;
                        detail = e.to_string();
                        break 'outer;
                    }
                };
                for sigma in &sigmas[1..] {
                    if y_gamma_ci_sigma(sigma, 5).unwrap() != reference {
                        ok = false;
                        detail = format!("class function violated at {lambda}");
                        break 'outer;
                    }
                }
                if y_gamma_ci(&lambda, k as u32, 5).unwrap() != reference {
                    ok = false;
                    detail = format!("class keying disagrees at {lambda}");
                    break 'outer;
                }
            }
        }
        checks.push(if ok {
            Check::pass("class-function-agreement")
        } else {
            Check::fail("class-function-agreement", detail)
        });
    }

    // cross-path consistency: the two-sort cycle index collapses to the
    // one-variable recursion, k <= 3, degree 6
    {
        let mut ok = true;
        let mut detail = String::new();
        for k in 1..=3u32 {
            let via_ci = ktree_ci(k, 6).map(|ci| ci.to_ogf());
            let direct = KTreeContext::new(k, 6).ktree_series();
            match (via_ci, direct) {
                (Ok(a), Ok(b)) => {
                    for i in 0..=6 {
                        if a.coeff(i) != b.coeff(i) {
                            ok = false;
                            detail = format!("k={k}, coefficient {i}");
                        }
                    }
                }
                (a, b) => {
                    ok = false;
                    detail = format!("k={k}: {a:?} vs {b:?}");
                }
            }
        }
        checks.push(if ok {
            Check::pass("ktree-cross-path-consistency")
        } else {
            Check::fail("ktree-cross-path-consistency", detail)
        });
    }

    // the integrality gate must trip on a non-integral series
    {
        let mut bad = PowerSeries::zero(2);
        bad.set_coeff(1, Rational::new(3.into(), 2.into()));
        checks.push(Check::from_eq(
            "integrality-gate-trips",
            bad.integer_coeffs().is_err(),
            true,
        ));
    }

    checks
}

/// Agreement with the exhaustive brute-force oracles.
pub fn oracle_suite() -> Vec<Check> {
    let mut checks = Vec::new();

    // labeled bicolored graphs: EGF vs closed form vs enumeration, n <= 8
    {
        let bc = crate::bipartite::bc_gamma_ci(8);
        let egf = bc.component_by_label("e").unwrap().to_egf().unwrap();
        let mut ok = true;
        let mut detail = String::new();
        let mut factorial = BigUint::one();
        for n in 1..=8usize {
            factorial *= BigUint::from(n);
            let from_series =
                egf.coeff(n) * Rational::from_integer(factorial.clone().into());
            let closed_form: u64 = (0..=n).map(|j| binomial(n, j) << (j * (n - j))).sum();
            let enumerated = oracle::count_labeled_bicolored(n).unwrap();
            if closed_form != enumerated
                || from_series != Rational::from_integer(enumerated.into())
            {
                ok = false;
                detail = format!("n = {n}");
            }
        }
        checks.push(if ok {
            Check::pass("labeled-bicolored-egf")
        } else {
            Check::fail("labeled-bicolored-egf", detail)
        });
    }

    // unlabeled graph families vs exhaustive canonical enumeration, n <= 6
    {
        let mut pipeline = BipartitePipeline::new(6);
        let series: Vec<(&str, PowerSeries, GraphFamily, usize)> = vec![
            (
                "unlabeled-bicolored",
                pipeline.bc().component_by_label("e").unwrap().to_ogf(),
                GraphFamily::Bicolored,
                1,
            ),
            (
                "unlabeled-connected-bicolored",
                pipeline
                    .cbc()
                    .unwrap()
                    .component_by_label("e")
                    .unwrap()
                    .to_ogf(),
                GraphFamily::ConnectedBicolored,
                1,
            ),
            (
                "unlabeled-connected-bipartite",
                pipeline.cbp().unwrap().to_ogf(),
                GraphFamily::ConnectedBipartite,
                1,
            ),
            (
                "unlabeled-bipartite",
                pipeline.bp().unwrap().to_ogf(),
                GraphFamily::Bipartite,
                0,
            ),
            (
                "unlabeled-nonseparable-bipartite",
                pipeline.nbp().unwrap().to_ogf(),
                GraphFamily::NonseparableBipartite,
                1,
            ),
        ];
        for (name, ogf, family, start) in series {
            let mut ok = true;
            let mut detail = String::new();
            for n in start..=6usize {
                let got = ogf.coeff(n).clone();
                let want = Rational::from_integer(
                    oracle::count_unlabeled(family, n).unwrap().into(),
                );
                if got != want {
                    ok = false;
                    detail = format!("n = {n}: got {got}, want {want}");
                }
            }
            checks.push(if ok {
                Check::pass(name)
            } else {
                Check::fail(name, detail)
            });
        }
    }

    // trees: the k = 1 column against exhaustive tree enumeration
    {
        let counts = ktree_ogf(1, 7).unwrap();
        let mut ok = true;
        let mut detail = String::new();
        for v in 1..=8usize {
            let want = oracle::count_unlabeled_trees(v).unwrap();
            let got = &counts[v - 1]; // v vertices = v-1 hedra (edges)
            if got != &BigUint::from(want) {
                ok = false;
                detail = format!("{v} vertices: got {got}, want {want}");
            }
        }
        checks.push(if ok {
            Check::pass("unlabeled-trees")
        } else {
            Check::fail("unlabeled-trees", detail)
        });

        let ctx = KTreeContext::new(1, 7);
        let rooted = ctx.y_ogf(&Partition::new(vec![1])).unwrap();
        let mut ok = true;
        let mut detail = String::new();
        for v in 1..=8usize {
            let want = oracle::count_rooted_trees(v).unwrap();
            let got = rooted.coeff(v - 1).clone();
            if got != Rational::from_integer(want.into()) {
                ok = false;
                detail = format!("{v} vertices: got {got}, want {want}");
            }
        }
        checks.push(if ok {
            Check::pass("rooted-trees")
        } else {
            Check::fail("rooted-trees", detail)
        });
    }

    // 2-trees against the constructive generator
    {
        let counts = ktree_ogf(2, 5).unwrap();
        let mut ok = true;
        let mut detail = String::new();
        for (h, got) in counts.iter().enumerate().skip(1) {
            let want = oracle::count_small_2trees(h).unwrap();
            if got != &BigUint::from(want) {
                ok = false;
                detail = format!("{h} hedra: got {got}, want {want}");
            }
        }
        checks.push(if ok {
            Check::pass("two-trees-constructive")
        } else {
            Check::fail("two-trees-constructive", detail)
        });
    }

    checks
}

fn binomial(n: usize, k: usize) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num *= (n - i) as u64;
        den *= (i + 1) as u64;
    }
    num / den
}

/// Reproduction of the reference count tables.
pub fn table_suite() -> Vec<Check> {
    let mut checks = Vec::new();

    // bipartite blocks, n = 1..=10
    {
        let mut pipeline = BipartitePipeline::new(10);
        match pipeline.nbp_counts() {
            Ok(counts) => {
                let want: Vec<BigUint> =
                    BPBLOCKS_COUNTS.iter().map(|&v| BigUint::from(v)).collect();
                checks.push(Check::from_eq("bpblocks-table", counts, want));
            }
            Err(e) => checks.push(Check::fail("bpblocks-table", e.to_string())),
        }
    }

    // full k-tree columns for k = 1, 2, 3 up to 30 hedra
    for (k, table) in [
        (1u32, &KTREE_COUNTS_K1),
        (2, &KTREE_COUNTS_K2),
        (3, &KTREE_COUNTS_K3),
    ] {
        let name = format!("ktrees-column-k{k}");
        match ktree_ogf(k, 30) {
            Ok(counts) => {
                let want: Vec<BigUint> = table.iter().map(|s| big(s)).collect();
                checks.push(Check::from_eq(&name, counts, want));
            }
            Err(e) => checks.push(Check::fail(&name, e.to_string())),
        }
    }

    // spot values for k = 4..=10
    for (k, spots) in KTREE_SPOT_COUNTS {
        let name = format!("ktrees-spots-k{k}");
        match ktree_ogf(k, 30) {
            Ok(counts) => {
                let mut ok = true;
                let mut detail = String::new();
                for (n, expected) in spots {
                    if counts[n] != big(expected) {
                        ok = false;
                        detail = format!("n = {n}: got {}, want {expected}", counts[n]);
                    }
                }
                checks.push(if ok {
                    Check::pass(&name)
                } else {
                    Check::fail(&name, detail)
                });
            }
            Err(e) => checks.push(Check::fail(&name, e.to_string())),
        }
    }

    // stabilization: for n <= 8 the count is the same for every k >= n+2,
    // so every such column entry must agree with the k = 12 column
    {
        let columns: Vec<Vec<BigUint>> = (1..=12)
            .map(|k| ktree_ogf(k, 8).expect("integral counts"))
            .collect();
        let last = columns.last().expect("k = 12 column");
        let mut ok = true;
        let mut detail = String::new();
        for (idx, column) in columns.iter().enumerate() {
            let k = idx + 1;
            for (n, (got, want)) in column.iter().zip(last).enumerate() {
                if n + 2 <= k && got != want {
                    ok = false;
                    detail = format!("n = {n}, k = {k}");
                }
            }
        }
        checks.push(if ok {
            Check::pass("ktree-stabilization")
        } else {
            Check::fail("ktree-stabilization", detail)
        });
    }

    checks
}

/// Checks of a named suite.
pub fn run_suite(name: &str) -> Option<Vec<Check>> {
    match name {
        "identities" => Some(identity_suite()),
        "oracles" => Some(oracle_suite()),
        "tables" => Some(table_suite()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_suite_passes() {
        for check in identity_suite() {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn oracle_suite_passes() {
        for check in oracle_suite() {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn unknown_suite_is_none() {
        assert!(run_suite("nonsense").is_none());
    }
}
