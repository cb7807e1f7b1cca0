//! Desk-scale verification of saturation, semigroup closure, corner
//! integrality and coefficient-one stability under scaling.
//!
//! Every check produces a [`Report`]; failures keep enough data to replay the
//! sample. Randomized sources are seeded `ChaCha8` streams.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumeration::{lr_coefficient, LRQuery};
use crate::hive::{is_integral, is_regular_border, Border, HiveCoord, Labeling};
use crate::polytope::{
    build_hive_graph, flatspaces, has_increasable_subset, is_acyclic, maximize_generic,
    optimal_vertex, peel_integer_coefficients, polytope_corners, ShapeClass,
};
use crate::{BigUint, HiveError, Partition, Rational};

/// Where a sample came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Drawn from a seeded generator; `index` is the draw number.
    Seeded { seed: u64, index: usize },
    /// Part of an exhaustive range, described in words.
    Exhaustive(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Seeded { seed, index } => write!(f, "seed {seed} draw {index}"),
            Provenance::Exhaustive(range) => write!(f, "exhaustive {range}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TripleSample {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub n: usize,
    pub provenance: Provenance,
}

impl TripleSample {
    /// Requires `|nu| = |lambda| + |mu|` and all lengths at most `n`.
    pub fn new(
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        n: usize,
        provenance: Provenance,
    ) -> Result<Self, HiveError> {
        if nu.size() != lambda.size() + mu.size() {
            return Err(HiveError::SizeMismatch {
                nu: nu.size(),
                sum: lambda.size() + mu.size(),
            });
        }
        for (name, p) in [("lambda", &lambda), ("mu", &mu), ("nu", &nu)] {
            if p.len() > n {
                return Err(HiveError::TooLong {
                    name,
                    len: p.len(),
                    n,
                });
            }
        }
        Ok(TripleSample {
            lambda,
            mu,
            nu,
            n,
            provenance,
        })
    }

    pub fn query(&self) -> LRQuery {
        LRQuery::new(
            self.lambda.clone(),
            self.mu.clone(),
            self.nu.clone(),
            Some(self.n),
        )
    }

    pub fn border(&self) -> Border {
        self.query()
            .border()
            .expect("lengths checked at construction")
    }

    pub fn coefficient(&self) -> BigUint {
        lr_coefficient(&self.query()).expect("lengths checked at construction")
    }

    pub fn scaled_coefficient(&self, factor: u64) -> BigUint {
        lr_coefficient(&self.query().scaled(factor)).expect("lengths checked at construction")
    }

    /// Componentwise sum, on the larger of the two sides.
    pub fn sum(&self, other: &TripleSample) -> TripleSample {
        TripleSample {
            lambda: self.lambda.add(&other.lambda),
            mu: self.mu.add(&other.mu),
            nu: self.nu.add(&other.nu),
            n: self.n.max(other.n),
            provenance: Provenance::Exhaustive(format!("sum of [{self}] and [{other}]")),
        }
    }
}

impl fmt::Display for TripleSample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lambda={} mu={} nu={} n={} ({})",
            self.lambda, self.mu, self.nu, self.n, self.provenance
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    Saturation,
    Semigroup,
    CornerIntegrality,
    NonIntegralCorner,
    CoefficientOne,
    MaximizerIntegrality,
}

impl Claim {
    pub fn id(self) -> &'static str {
        match self {
            Claim::Saturation => "saturation",
            Claim::Semigroup => "semigroup",
            Claim::CornerIntegrality => "corner-integrality",
            Claim::NonIntegralCorner => "non-integral-corner",
            Claim::CoefficientOne => "coefficient-one",
            Claim::MaximizerIntegrality => "maximizer-integrality",
        }
    }
}

/// One failed (or, for open conjectures, notable) sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Incident {
    pub triple: Option<TripleSample>,
    pub labeling: Option<Labeling>,
    pub detail: String,
}

impl Incident {
    fn on(triple: &TripleSample, detail: String) -> Self {
        Incident {
            triple: Some(triple.clone()),
            labeling: None,
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub claim: Claim,
    pub samples: usize,
    pub failures: Vec<Incident>,
    /// Noteworthy outcomes that are not failures of a proved statement.
    pub findings: Vec<Incident>,
    pub seed: Option<u64>,
    /// Filled in by callers that have a clock.
    pub runtime: Option<Duration>,
}

impl Report {
    pub fn new(claim: Claim, seed: Option<u64>) -> Self {
        Report {
            claim,
            samples: 0,
            failures: Vec::new(),
            findings: Vec::new(),
            seed,
            runtime: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Appends `other`; callers merge in sample order so the result is
    /// deterministic.
    pub fn merge(&mut self, other: Report) {
        self.samples += other.samples;
        self.failures.extend(other.failures);
        self.findings.extend(other.findings);
        self.runtime = match (self.runtime, other.runtime) {
            (Some(a), Some(b)) => Some(a + b),
            (a, b) => a.or(b),
        };
    }

    pub fn merged(
        claim: Claim,
        seed: Option<u64>,
        parts: impl IntoIterator<Item = Report>,
    ) -> Self {
        let mut out = Report::new(claim, seed);
        for p in parts {
            out.merge(p);
        }
        out
    }
}

/// `c > 0` iff `c_N > 0` for every `2 <= N <= n_max`.
pub fn check_saturation(t: &TripleSample, n_max: u64) -> Report {
    let mut report = Report::new(Claim::Saturation, seed_of(t));
    let base = !t.coefficient().is_zero();
    for factor in 2..=n_max {
        report.samples += 1;
        if base != !t.scaled_coefficient(factor).is_zero() {
            report.failures.push(Incident::on(
                t,
                format!("nonzero(c) = {base} but not at N = {factor}"),
            ));
        }
    }
    report
}

/// For pairs with nonzero coefficients, the sum has a nonzero coefficient.
pub fn check_semigroup(pairs: &[(TripleSample, TripleSample)]) -> Report {
    let mut report = Report::new(
        Claim::Semigroup,
        pairs.first().and_then(|(a, _)| seed_of(a)),
    );
    for (a, b) in pairs {
        if a.coefficient().is_zero() || b.coefficient().is_zero() {
            continue;
        }
        report.samples += 1;
        let s = a.sum(b);
        if s.coefficient().is_zero() {
            report
                .failures
                .push(Incident::on(&s, "sum of members has coefficient 0".into()));
        }
    }
    report
}

/// Default ceiling on `N * |nu|` for [`fulton_check`].
pub const FULTON_BUDGET: u64 = 24;

/// `c = 1` iff `c_N = 1` for `2 <= N <= n_max` with `N * |nu| <= budget`.
/// Disagreements are findings. Also records `c_N >= 2` whenever `c >= 2`.
pub fn fulton_check(t: &TripleSample, n_max: u64, budget: u64) -> Report {
    let mut report = Report::new(Claim::CoefficientOne, seed_of(t));
    let c = t.coefficient();
    let size = t.nu.size().max(1);
    for factor in 2..=n_max {
        if factor * size > budget {
            break;
        }
        report.samples += 1;
        let scaled = t.scaled_coefficient(factor);
        if c.is_one() != scaled.is_one() {
            report.findings.push(Incident::on(
                t,
                format!("c = {c} but c_{factor} = {scaled}"),
            ));
        }
        if c > BigUint::one() && scaled < c {
            report.findings.push(Incident::on(
                t,
                format!("c = {c} but c_{factor} = {scaled} is smaller"),
            ));
        }
    }
    report
}

fn seed_of(t: &TripleSample) -> Option<u64> {
    match t.provenance {
        Provenance::Seeded { seed, .. } => Some(seed),
        Provenance::Exhaustive(_) => None,
    }
}

/// Every triple with `|nu| <= max_size` and all lengths at most `n`.
pub fn exhaustive_triples(n: usize, max_size: u64) -> Vec<TripleSample> {
    let tag = format!("n={n} |nu|<={max_size}");
    let mut out = Vec::new();
    for size in 0..=max_size {
        for nu in Partition::all_of_size(size, n) {
            for lambda in Partition::all_up_to(size, n) {
                for mu in Partition::all_of_size(size - lambda.size(), n) {
                    out.push(TripleSample {
                        lambda: lambda.clone(),
                        mu,
                        nu: nu.clone(),
                        n,
                        provenance: Provenance::Exhaustive(tag.clone()),
                    });
                }
            }
        }
    }
    out
}

/// Random partition with at most `len` parts, each at most `max_part`.
pub fn random_partition<R: Rng + ?Sized>(rng: &mut R, len: usize, max_part: u64) -> Partition {
    let mut parts: Vec<u64> = (0..len).map(|_| rng.random_range(0..=max_part)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("sorted")
}

fn random_strict<R: Rng + ?Sized>(rng: &mut R, len: usize, max_part: u64) -> Partition {
    // Strictly decreasing with a zero allowed last: distinct values from 0..=max.
    let mut pool: Vec<u64> = (0..=max_part.max(len as u64)).collect();
    pool.shuffle(rng);
    let mut parts = pool[..len].to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("sorted")
}

/// A triple of strictly decreasing partitions (padded to `n` parts) with a
/// nonzero coefficient, so its border is integral, regular and carries a
/// nonempty hive polytope. `nu` starts at `lambda + mu` and takes random
/// dominance-decreasing steps while the coefficient stays positive.
pub fn random_regular_triple<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_part: u64,
    steps: usize,
    provenance: Provenance,
) -> TripleSample {
    let lambda = random_strict(rng, n, max_part);
    let mu = random_strict(rng, n, max_part);
    let mut nu = lambda.add(&mu).padded(n);
    for _ in 0..steps {
        if n < 2 {
            break;
        }
        let i = rng.random_range(0..n - 1);
        let j = rng.random_range(i + 1..n);
        let mut next = nu.clone();
        if next[i] == 0 {
            continue;
        }
        next[i] -= 1;
        next[j] += 1;
        let Ok(p) = Partition::new(next.clone()) else {
            continue;
        };
        if !p.is_strict(n) {
            continue;
        }
        let q = LRQuery::new(lambda.clone(), mu.clone(), p, Some(n));
        if !lr_coefficient(&q).expect("lengths fit").is_zero() {
            nu = next;
        }
    }
    TripleSample {
        lambda,
        mu,
        nu: Partition::new(nu).expect("kept decreasing"),
        n,
        provenance,
    }
}

/// Runs the full maximizer pipeline on one integral regular border: the
/// maximizer of a generic positive functional is integral, has no increasable
/// subset, only small-triangle and small-rhombus flatspaces, an acyclic graph,
/// and peels to integer forms that reproduce it.
pub fn check_maximizer(t: &TripleSample, seed: u64) -> Report {
    let mut report = Report::new(Claim::MaximizerIntegrality, Some(seed));
    report.samples = 1;
    let b = t.border();
    let fail = |report: &mut Report, h: Option<&Labeling>, detail: String| {
        report.failures.push(Incident {
            triple: Some(t.clone()),
            labeling: h.cloned(),
            detail,
        })
    };
    if !is_regular_border(&b) {
        fail(&mut report, None, "border is not regular".into());
        return report;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = match maximize_generic(&b, &mut rng, 16) {
        Ok((h, _)) => h,
        Err(e) => {
            fail(&mut report, None, format!("maximizer failed: {e}"));
            return report;
        }
    };
    if !is_integral(&h) {
        fail(&mut report, Some(&h), "maximizer is not integral".into());
    }
    if has_increasable_subset(&h) {
        fail(
            &mut report,
            Some(&h),
            "maximizer has an increasable subset".into(),
        );
    }
    if let Some(f) = flatspaces(&h)
        .iter()
        .find(|f| !f.is_small_triangle() && !f.is_small_rhombus())
    {
        fail(
            &mut report,
            Some(&h),
            format!("large flatspace: {}", f.shape),
        );
        return report;
    }
    match build_hive_graph(&h) {
        Ok(g) if !is_acyclic(&g) => fail(&mut report, Some(&h), "hive graph has a cycle".into()),
        Ok(g) => {
            if let Err(e) = peel_integer_coefficients(&g, &h) {
                fail(&mut report, Some(&h), format!("peeling failed: {e}"));
            }
        }
        Err(e) => fail(&mut report, Some(&h), format!("graph failed: {e}")),
    }
    report
}

/// Outcome of a corner scan, with the first non-integral corner seen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerScan {
    pub report: Report,
    pub witness: Option<Labeling>,
}

/// Every corner over each border is integral. Used for `n <= 4`.
pub fn corner_scan_exhaustive(triples: &[TripleSample]) -> CornerScan {
    let mut report = Report::new(Claim::CornerIntegrality, None);
    let mut witness = None;
    for t in triples {
        let corners = polytope_corners(&t.border());
        report.samples += corners.len();
        for c in corners.into_iter().filter(|c| !is_integral(c)) {
            witness.get_or_insert_with(|| c.clone());
            report.failures.push(Incident {
                triple: Some(t.clone()),
                labeling: Some(c),
                detail: "non-integral corner".into(),
            });
        }
    }
    CornerScan { report, witness }
}

/// Flatspace shape census, e.g. `{hexagon: 2, triangle: 13}`.
pub fn shape_census(h: &Labeling) -> BTreeMap<ShapeClass, usize> {
    let mut out = BTreeMap::new();
    for f in flatspaces(h) {
        *out.entry(f.shape).or_insert(0) += 1;
    }
    out
}

/// Searches for a non-integral corner by maximizing random signed integer
/// functionals over random integral borders. Prefers a witness whose
/// flatspaces are two hexagons and thirteen small triangles; stops early once
/// one is found.
pub fn corner_search(
    n: usize,
    seed: u64,
    borders: usize,
    functionals: usize,
    max_part: u64,
) -> CornerScan {
    let mut report = Report::new(Claim::NonIntegralCorner, Some(seed));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut witness: Option<Labeling> = None;
    let interior = crate::hive::interior_coords(n);
    let wanted: BTreeMap<ShapeClass, usize> =
        [(ShapeClass::Triangle, 13), (ShapeClass::Hexagon, 2)]
            .into_iter()
            .collect();
    'outer: for index in 0..borders {
        let t = random_regular_triple(
            &mut rng,
            n,
            max_part,
            4 * n,
            Provenance::Seeded { seed, index },
        );
        let b = t.border();
        for _ in 0..functionals {
            let objective: BTreeMap<HiveCoord, Rational> = interior
                .iter()
                .map(|c| {
                    (
                        *c,
                        Rational::from_integer(rng.random_range(-50i64..=50).into()),
                    )
                })
                .collect();
            let Ok(h) = optimal_vertex(&b, &objective) else {
                continue;
            };
            report.samples += 1;
            if is_integral(&h) {
                continue;
            }
            let census = shape_census(&h);
            let better = witness.is_none() || census == wanted;
            if better {
                report.findings.push(Incident {
                    triple: Some(t.clone()),
                    labeling: Some(h.clone()),
                    detail: format!(
                        "non-integral corner with flatspaces {}",
                        census_string(&census)
                    ),
                });
                witness = Some(h);
                if census == wanted {
                    break 'outer;
                }
            }
        }
    }
    if witness.is_none() && n >= 5 {
        report.failures.push(Incident {
            triple: None,
            labeling: None,
            detail: format!("no non-integral corner within {borders} borders"),
        });
    }
    CornerScan { report, witness }
}

pub fn census_string(census: &BTreeMap<ShapeClass, usize>) -> String {
    let parts: Vec<String> = census.iter().map(|(s, c)| format!("{c} {s}")).collect();
    parts.join(", ")
}

/// A labeling satisfying the first two rhombus families, built from a random
/// interlacing chain; the `nu` side uses random nonnegative offsets, sorted
/// half of the time, so the third family holds for some draws and fails for
/// others.
pub fn random_interlacing_labeling<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_part: u64,
) -> Labeling {
    let mut levels: Vec<Vec<u64>> = Vec::with_capacity(n);
    levels.push(random_partition(rng, n, max_part).padded(n));
    for i in 1..n {
        let prev = &levels[i - 1];
        let len = n - i;
        let level: Vec<u64> = (0..len)
            .map(|j| {
                let lo = prev.get(j + 1).copied().unwrap_or(0);
                rng.random_range(lo..=prev[j])
            })
            .collect();
        levels.push(level);
    }
    let size = |v: &[u64]| v.iter().sum::<u64>();
    let mut offsets: Vec<u64> = (0..n).map(|_| rng.random_range(0..=max_part)).collect();
    if rng.random_bool(0.5) {
        offsets.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut rows = Vec::with_capacity(n + 1);
    let mut start = 0u64;
    for i in 0..=n {
        let level: &[u64] = levels.get(i).map_or(&[], Vec::as_slice);
        let mut acc = start;
        let mut row = alloc::vec![Rational::from_integer(acc.into())];
        for k in 0..n - i {
            acc += level.get(k).copied().unwrap_or(0);
            row.push(Rational::from_integer(acc.into()));
        }
        rows.push(row);
        if i < n {
            let next = levels.get(i + 1).map_or(0, |l| size(l));
            start += size(level) - next + offsets[i];
        }
    }
    Labeling::from_rows(rows).expect("row lengths")
}

/// The scaled hive `N h` lies in the polytope of the scaled border.
pub fn scaling_compatible(h: &Labeling, factor: u64) -> bool {
    let f = Rational::from_integer(factor.into());
    let scaled = h.scaled(&f);
    crate::hive::is_hive(&scaled) && scaled.border() == h.border().scaled(&f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hive::is_hive;
    use crate::part;

    fn sample(l: Partition, m: Partition, n: Partition, side: usize) -> TripleSample {
        TripleSample::new(l, m, n, side, Provenance::Exhaustive("test".into())).unwrap()
    }

    #[test]
    fn saturation_examples() {
        let ex = sample(part![2, 1], part![2, 1], part![3, 2, 1], 3);
        let r = check_saturation(&ex, 3);
        assert!(r.passed());
        assert_eq!(r.samples, 2);
        for f in 2..=3 {
            assert!(!ex.scaled_coefficient(f).is_zero());
        }
        // (3) is not dominated by (1,1)+(1): zero at every scale.
        let zero = sample(part![1, 1], part![1], part![3], 3);
        assert!(zero.coefficient().is_zero());
        assert!(check_saturation(&zero, 3).passed());
        assert!(check_saturation(&sample(part![], part![], part![], 1), 4).passed());
    }

    #[test]
    fn semigroup_examples() {
        let ex = sample(part![2, 1], part![2, 1], part![3, 2, 1], 3);
        let empty = sample(part![], part![], part![], 3);
        let r = check_semigroup(&[(ex.clone(), ex.clone()), (ex.clone(), empty)]);
        assert!(r.passed());
        assert_eq!(r.samples, 2);
        assert!(!ex.sum(&ex).coefficient().is_zero());
    }

    #[test]
    fn fulton_examples() {
        let one = sample(part![1], part![1], part![2], 2);
        let r = fulton_check(&one, 4, 100);
        assert_eq!(r.samples, 3);
        assert!(r.findings.is_empty());
        for f in 1..=4 {
            assert!(one.scaled_coefficient(f).is_one());
        }
        let two = sample(part![2, 1], part![2, 1], part![3, 2, 1], 3);
        let r = fulton_check(&two, 3, 100);
        assert!(r.findings.is_empty());
        assert!(two.scaled_coefficient(2) >= BigUint::from(2u32));
        assert!(two.scaled_coefficient(3) >= BigUint::from(2u32));
        let empty = sample(part![], part![], part![], 1);
        assert_eq!(fulton_check(&empty, 4, FULTON_BUDGET).samples, 3);
    }

    #[test]
    fn regular_sampler() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for index in 0..20 {
            let t =
                random_regular_triple(&mut rng, 4, 6, 10, Provenance::Seeded { seed: 1, index });
            assert!(is_regular_border(&t.border()), "{t}");
            assert!(!t.coefficient().is_zero());
        }
    }

    #[test]
    fn maximizer_pipeline_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for index in 0..5 {
            let t = random_regular_triple(&mut rng, 4, 5, 8, Provenance::Seeded { seed: 3, index });
            let r = check_maximizer(&t, index as u64);
            assert!(r.passed(), "{:?}", r.failures);
        }
    }

    #[test]
    fn corners_small_are_integral() {
        let scan = corner_scan_exhaustive(&exhaustive_triples(3, 6));
        assert!(scan.report.passed());
        assert!(scan.witness.is_none());
        assert!(scan.report.samples > 0);
        let n1 = corner_scan_exhaustive(&exhaustive_triples(1, 4));
        assert!(n1.report.passed());
    }

    #[test]
    fn interlacing_labelings_keep_two_families() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let h = random_interlacing_labeling(&mut rng, 4, 5);
            assert!(crate::hive::check_labeling(&h)
                .iter()
                .all(|v| v.rhombus.orientation == crate::hive::Orientation::R3));
        }
    }

    #[test]
    fn scaling() {
        let q = LRQuery::new(part![2, 1], part![2, 1], part![3, 2, 1], Some(3));
        for h in crate::enumeration::enumerate_integral_hives(&q.border().unwrap()) {
            assert!(is_hive(&h));
            for f in 1..=4 {
                assert!(scaling_compatible(&h, f));
            }
        }
    }
}
