//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any failed.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cimatroid::census::{gaussoid_matroids, matroid_ci_scan};
use cimatroid::matroid::{
    ci_of_matroid, dependence_profile, enumerate_loopless_matroids, g_family,
    gaussoid_matroid_decision, independent_sets_from_ci, rank_from_ci,
};
use cimatroid::models::{
    chirotope_from_vectors, covariance_from_factor, gaussian_ci, signed_circuits_from_vectors,
    RationalMatrix, VectorConfiguration,
};
use cimatroid::oriented::{
    check_oci, oriented_matroid_from_sigma, sigma_from_chirotope, sigma_from_chirotope_literal,
    sigma_of_oriented_matroid,
};
use cimatroid::{
    check_mci, is_gaussoid, is_matroid_ci, CIStatement, CIStructure, ElementSet, Execution,
    GroundSet, Matroid, Sign,
};

const LIMIT_SCAN_3: Duration = Duration::from_secs(1);
const LIMIT_SCAN_4: Duration = Duration::from_secs(60);
const LIMIT_TRANSLATIONS: Duration = Duration::from_secs(60);
const LIMIT_G_FAMILY: Duration = Duration::from_secs(10);
const LIMIT_ORIENTED: Duration = Duration::from_secs(60);
const LIMIT_GAUSSOID: Duration = Duration::from_secs(60);

const VECTOR_SEEDS: u64 = 120;
const VECTOR_MAX_N: usize = 7;
const VECTOR_MAX_RANK: usize = 4;
const VECTOR_ENTRY: i64 = 3;
const MATRIX_SEEDS: u64 = 120;
const MATRIX_MAX_N: usize = 5;
const FACTOR_ENTRY: i64 = 2;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {:.2?}, limit {:.0?}", t, limit))?;
    Ok(t)
}

fn ci_key(g: &CIStructure) -> Vec<usize> {
    g.membership().ones().collect()
}

fn bijection(n: usize, exec: Execution) -> Result<usize, String> {
    let scanned = matroid_ci_scan(n, exec).map_err(|e| e.to_string())?;
    let matroids = enumerate_loopless_matroids(n).map_err(|e| e.to_string())?;
    ensure(scanned.len() == matroids.len(), || {
        format!(
            "{} structures pass SG+MCI, {} matroids",
            scanned.len(),
            matroids.len()
        )
    })?;
    let mut via_rank = BTreeSet::new();
    for g in &scanned {
        let r = rank_from_ci(g).map_err(|e| format!("{g:?}: {e}"))?;
        let m = Matroid::from_rank(r).map_err(|e| e.to_string())?;
        let back = ci_of_matroid(&m).map_err(|e| e.to_string())?;
        ensure(&back == g, || format!("round trip changed {g:?}"))?;
        via_rank.insert(m.rank_function().values().to_vec());
    }
    let oracle: BTreeSet<Vec<u32>> = matroids
        .iter()
        .map(|m| m.rank_function().values().to_vec())
        .collect();
    ensure(via_rank == oracle, || {
        "recovered matroids differ from the enumeration".into()
    })?;
    let from_oracle: BTreeSet<Vec<usize>> = matroids
        .iter()
        .map(|m| ci_of_matroid(m).map(|g| ci_key(&g)))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let from_scan: BTreeSet<Vec<usize>> = scanned.iter().map(ci_key).collect();
    ensure(from_oracle == from_scan, || {
        "CI-structures of the enumeration differ from the scan".into()
    })?;
    Ok(scanned.len())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let count = bijection(3, Execution::Sequential)?;
    let t = within(start, LIMIT_SCAN_3)?;
    Ok(format!(
        "64 structures on [3], {count} pass SG+MCI, bijective with the enumeration ({t:.2?})"
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let count = bijection(4, Execution::Parallel)?;
    let t = within(start, LIMIT_SCAN_4)?;
    Ok(format!(
        "2^24 structures on [4], {count} pass SG+MCI, bijective with the enumeration ({t:.2?})"
    ))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut checked = 0usize;
    let mut statements = 0usize;
    for n in 1..=5 {
        for m in enumerate_loopless_matroids(n).map_err(|e| e.to_string())? {
            let g = ci_of_matroid(&m).map_err(|e| e.to_string())?;
            ensure(is_matroid_ci(&g), || {
                format!("[[M]] fails SG+MCI for {m:?}")
            })?;
            let r = rank_from_ci(&g).map_err(|e| format!("{m:?}: {e}"))?;
            ensure(&r == m.rank_function(), || {
                format!("rank recursion differs for {m:?}")
            })?;
            ensure(
                &independent_sets_from_ci(&g) == m.independent_sets(),
                || format!("independent sets differ for {m:?}"),
            )?;
            for s in g.index().statements() {
                let p = dependence_profile(&m, &s).map_err(|e| e.to_string())?;
                ensure(
                    p.consistent() && p.strict_inequality == !g.contains(&s),
                    || format!("{m:?} at {s}: profile {:?}", p.as_array()),
                )?;
                statements += 1;
            }
            checked += 1;
        }
    }
    let t = within(start, LIMIT_TRANSLATIONS)?;
    Ok(format!(
        "{checked} matroids on n <= 5, {statements} dependence profiles agree ({t:.2?})"
    ))
}

fn criterion_4() -> Outcome {
    let mut oracle = Vec::new();
    for n in 0..=4 {
        oracle.push(enumerate_loopless_matroids(n).map_err(|e| e.to_string())?);
    }
    let ci = |m: &Matroid| ci_of_matroid(&m.normalize_loopless()).map_err(|e| e.to_string());
    let mut cases = 0usize;
    for ms in &oracle[1..] {
        for m in ms {
            let g = ci(m)?;
            for a in m.ground().subsets() {
                let del = m.delete(a).map_err(|e| e.to_string())?;
                let (gd, _) = g.delete(a).map_err(|e| e.to_string())?;
                ensure(ci(&del)? == gd, || format!("deletion of {a} from {m:?}"))?;
                let con = m.contract(a).map_err(|e| e.to_string())?;
                let (gc, _) = g.contract(a).map_err(|e| e.to_string())?;
                ensure(ci(&con)? == gc, || format!("contraction of {a} from {m:?}"))?;
                cases += 2;
            }
            ensure(ci(&m.dual())? == g.dual(), || format!("dual of {m:?}"))?;
            cases += 1;
        }
    }
    for (n1, left) in oracle.iter().enumerate().skip(1) {
        for right in oracle.iter().skip(1).take(4 - n1) {
            for m1 in left {
                for m2 in right {
                    let sum = m1.direct_sum(m2).map_err(|e| e.to_string())?;
                    let expected = ci(m1)?.direct_sum(&ci(m2)?).map_err(|e| e.to_string())?;
                    ensure(ci(&sum)? == expected, || {
                        format!("direct sum of {m1:?} and {m2:?}")
                    })?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!(
        "{cases} deletion, contraction, dual and direct-sum identities hold on n <= 4"
    ))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for m in 4..=6usize {
        let g = g_family(m).map_err(|e| e.to_string())?;
        let rest: ElementSet = (3..m).collect();
        let s12 = CIStatement::new(0, 1, ElementSet::EMPTY).unwrap();
        let s13 = CIStatement::new(0, 2, rest.with(1)).unwrap();
        let witnessed = check_mci(&g).iter().any(|w| {
            w.premises.iter().any(|p| p.statement == s12 && !p.member)
                && w.failed.iter().any(|c| c.statement == s13)
        });
        ensure(!is_matroid_ci(&g), || format!("G_{m} passes SG+MCI"))?;
        ensure(witnessed, || {
            format!("G_{m}: no MCI witness pairing {s12} with {s13}")
        })?;
        let mut passing = 0;
        for e in 0..m {
            let single = ElementSet::singleton(e);
            for (op, minor) in [
                ("delete", g.delete(single)),
                ("contract", g.contract(single)),
            ] {
                let (h, _) = minor.map_err(|e| e.to_string())?;
                if is_matroid_ci(&h) {
                    passing += 1;
                } else {
                    failures.push(format!("G_{m} {op} {}", e + 1));
                }
            }
        }
        summary.push(format!(
            "G_{m}: MCI witness found, {passing}/{} minors pass",
            2 * m
        ));
    }
    let t = within(start, LIMIT_G_FAMILY)?;
    if failures.is_empty() {
        Ok(format!("{} ({t:.2?})", summary.join("; ")))
    } else {
        Err(format!(
            "{}; minors failing SG+MCI: {}",
            summary.join("; "),
            failures.join(", ")
        ))
    }
}

/// Seeded configurations with `n <= 7` nonzero columns in `Q^d`, `d <= 4`,
/// entries in `-3..=3`.
fn vector_configurations() -> Vec<VectorConfiguration> {
    (0..VECTOR_SEEDS)
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let d = rng.random_range(1..=VECTOR_MAX_RANK);
            let n = rng.random_range(2..=VECTOR_MAX_N);
            let columns: Vec<Vec<i64>> = (0..n)
                .map(|_| loop {
                    let c: Vec<i64> = (0..d)
                        .map(|_| rng.random_range(-VECTOR_ENTRY..=VECTOR_ENTRY))
                        .collect();
                    if c.iter().any(|&x| x != 0) {
                        break c;
                    }
                })
                .collect();
            VectorConfiguration::from_integer_columns(d, &columns).unwrap()
        })
        .collect()
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let configs = vector_configurations();
    let mut circuits = 0usize;
    for (seed, v) in configs.iter().enumerate() {
        let fail = |what: &str, e: String| format!("seed {seed}: {what}: {e}");
        let c =
            signed_circuits_from_vectors(v).map_err(|e| fail("signed circuits", e.to_string()))?;
        let sigma = sigma_of_oriented_matroid(&c).map_err(|e| fail("sigma", e.to_string()))?;
        let oci = check_oci(&sigma);
        ensure(oci.is_empty(), || fail("OCI", oci[0].line()))?;
        let back =
            oriented_matroid_from_sigma(&sigma).map_err(|e| fail("recovery", e.to_string()))?;
        ensure(back == c, || {
            fail("recovery", "signed circuits differ".into())
        })?;
        circuits += c.len() / 2;
    }
    let t = within(start, LIMIT_ORIENTED)?;
    Ok(format!(
        "{} configurations, {circuits} circuit pairs recovered exactly ({t:.2?})",
        configs.len()
    ))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let configs = vector_configurations();
    let mut nonzero = 0usize;
    for (seed, v) in configs.iter().enumerate() {
        let fail = |what: &str, e: String| format!("seed {seed}: {what}: {e}");
        let by_circuits = signed_circuits_from_vectors(v)
            .and_then(|c| sigma_of_oriented_matroid(&c))
            .map_err(|e| fail("circuit route", e.to_string()))?;
        let by_chirotope = chirotope_from_vectors(v)
            .and_then(|chi| sigma_from_chirotope(&chi))
            .map_err(|e| fail("chirotope route", e.to_string()))?;
        let diff = by_chirotope.diff(&by_circuits);
        ensure(diff.is_empty(), || {
            let (s, a, b) = &diff[0];
            fail("routes differ", format!("{s}: chirotope {a}, circuits {b}"))
        })?;
        nonzero += by_circuits.nonzero().count();
    }
    let v = VectorConfiguration::from_integer_columns(2, &[vec![1, 0], vec![0, 1], vec![1, 1]])
        .unwrap();
    let chi = chirotope_from_vectors(&v).map_err(|e| e.to_string())?;
    let s12 = CIStatement::new(0, 1, ElementSet::EMPTY).unwrap();
    let fixed = sigma_from_chirotope(&chi)
        .map_err(|e| e.to_string())?
        .sign(&s12);
    let literal = sigma_from_chirotope_literal(&chi)
        .map_err(|e| e.to_string())?
        .sign(&s12);
    ensure(fixed == Sign::Zero && literal == Sign::Positive, || {
        format!("regression at (12|): implementation {fixed}, literal formula {literal}")
    })?;
    let t = within(start, LIMIT_ORIENTED)?;
    Ok(format!(
        "{} configurations agree on {nonzero} nonzero signs; (12|) of e1,e2,e1+e2 is 0 (literal formula +1) ({t:.2?})",
        configs.len()
    ))
}

/// `AᵀA + I` for square `A` with entries in `-2..=2`, `n <= 5`.
fn covariance_matrices() -> Vec<RationalMatrix> {
    (0..MATRIX_SEEDS)
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
            let n = rng.random_range(1..=MATRIX_MAX_N);
            let entries: Vec<i64> = (0..n * n)
                .map(|_| rng.random_range(-FACTOR_ENTRY..=FACTOR_ENTRY))
                .collect();
            covariance_from_factor(&RationalMatrix::from_integers(n, n, &entries).unwrap()).unwrap()
        })
        .collect()
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for (seed, sigma) in covariance_matrices().iter().enumerate() {
        let g = gaussian_ci(sigma).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(is_gaussoid(&g), || {
            format!("seed {seed}: [[Σ]] is not a gaussoid")
        })?;
        *sizes.entry(g.len()).or_default() += 1;
    }
    let tenth = BigRational::new(1.into(), 10.into());
    let one = BigRational::from_integer(1.into());
    let s = RationalMatrix::new(2, 2, vec![one.clone(), tenth.clone(), tenth, one]).unwrap();
    let g = gaussian_ci(&s).map_err(|e| e.to_string())?;
    let u12 = ci_of_matroid(&Matroid::uniform(1, 2).unwrap()).unwrap();
    ensure(g.is_empty() && g == u12, || format!("[[Σ]] = {g:?}"))?;
    let ground2 = GroundSet::new(2).unwrap();
    ensure(g == CIStructure::empty(ground2), || {
        "expected the empty structure".into()
    })?;
    let mut gaussoid_count = 0;
    for n in 1..=4 {
        for m in enumerate_loopless_matroids(n).map_err(|e| e.to_string())? {
            let by_axioms = is_gaussoid(&ci_of_matroid(&m).map_err(|e| e.to_string())?);
            ensure(by_axioms == gaussoid_matroid_decision(&m), || {
                format!("{m:?}: axioms {by_axioms}, structure {}", !by_axioms)
            })?;
        }
        gaussoid_count += gaussoid_matroids(n, Execution::Parallel)
            .map_err(|e| e.to_string())?
            .len();
    }
    let t = within(start, LIMIT_GAUSSOID)?;
    Ok(format!(
        "{MATRIX_SEEDS} covariance matrices give gaussoids; Σ with 1/10 gives ∅ = [[U1,2]]; \
         {gaussoid_count} gaussoid matroids on n <= 4 decided alike both ways ({t:.2?})"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("exhaustive CI/matroid bijection, n = 3", criterion_1),
        ("exhaustive CI/matroid bijection, n = 4", criterion_2),
        (
            "rank recursion, independent sets, dependence profiles, n <= 5",
            criterion_3,
        ),
        (
            "deletion, contraction, dual and direct sum, n <= 4",
            criterion_4,
        ),
        (
            "G_m fails MCI and its single-element minors pass, m = 4..6",
            criterion_5,
        ),
        ("oriented CI round trip on random realizations", criterion_6),
        ("chirotope route equals circuit route", criterion_7),
        ("Gaussian structures are gaussoids", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("criterion {} PASS: {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL: {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
