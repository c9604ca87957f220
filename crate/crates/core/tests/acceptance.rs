//! Acceptance criteria, one line each. Runs as a plain binary so the lines
//! are always printed; exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use pencil_index::construct::{
    check_weighted_equivariance, default_samples, derive_jprime_and_compare, fixtures, monomial_norm,
    normalized_map_degree, pushforward_splitting_type, quadratic_pullback_table, ConstructError, WeightedTorusAction,
    C_VARS,
};
use pencil_index::perm::{
    cube_strata_action, enumerate_group, induced_subset_action, orbit_decomposition, standard_group, StandardGroup,
    DEFAULT_ENUMERATION_CAP,
};
use pencil_index::semigroup::{sdn_generators, semigroup_contains, semigroup_min_and_gcd};
use pencil_index::strata::{enriques_pencil_model, index_and_degree_report};
use pencil_index::witness::{choose_ab_and_certify, span_and_basepoint};
use pencil_index::{Rational, SparseMultiPoly};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<(), String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

fn c1_wreath() -> Outcome {
    let elements = enumerate_group(&standard_group(StandardGroup::Wreath32), DEFAULT_ENUMERATION_CAP)
        .map_err(|e| e.to_string())?;
    ensure(elements.len() == 48, || format!("order {}", elements.len()))?;
    for (w, size) in [(0, 8), (1, 12), (2, 6)] {
        let action = cube_strata_action(w).map_err(|e| e.to_string())?;
        let orbits = orbit_decomposition(&action);
        ensure(orbits.is_transitive() && orbits.sizes() == [size], || {
            format!("cube strata {w}: orbit sizes {:?}", orbits.sizes())
        })?;
    }
    Ok(())
}

fn c2_enriques() -> Outcome {
    let model = enriques_pencil_model().map_err(|e| e.to_string())?;
    let r = index_and_degree_report(&model).map_err(|e| e.to_string())?;
    let divisors: BTreeSet<u64> = r.divisors.iter().copied().collect();
    let realized: BTreeSet<u64> = r.realized.iter().map(|x| x.degree).collect();
    ensure(divisors == BTreeSet::from([3, 4, 6]), || {
        format!("divisors {divisors:?}")
    })?;
    ensure(realized == BTreeSet::from([3, 4]), || format!("realized {realized:?}"))?;
    ensure(r.exact_min() == Some(3) && r.exact_index() == Some(1), || {
        format!("min {:?}, index {:?}", r.exact_min(), r.exact_index())
    })
}

fn c3_hypersurface_orbits() -> Outcome {
    for d in 2..=8usize {
        for n in 1..=8usize {
            for i in 1..=d.min(n) {
                let action = induced_subset_action(d, i).map_err(|e| e.to_string())?;
                let orbits = orbit_decomposition(&action);
                let want = binomial(d as u64, i as u64) as usize;
                ensure(orbits.is_transitive() && orbits.sizes() == [want], || {
                    format!("d={d} i={i}: {:?} vs C(d,i) = {want}", orbits.sizes())
                })?;
            }
        }
    }
    Ok(())
}

/// All sums of generators up to `bound`, by repeatedly extending a frontier.
fn naive_members(gens: &[u64], bound: u64) -> BTreeSet<u64> {
    let mut seen = BTreeSet::from([0]);
    let mut frontier = vec![0];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = x + g;
            if y <= bound && seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen
}

fn c4_semigroup() -> Outcome {
    for d in 1..=8u64 {
        for n in 1..=8u64 {
            let s = sdn_generators(d, n).map_err(|e| e.to_string())?;
            let naive = naive_members(s.generators(), 200);
            for x in 0..=200 {
                ensure(semigroup_contains(&s, x) == naive.contains(&x), || {
                    format!("d={d} n={n} x={x}")
                })?;
            }
        }
    }
    for ((d, n), want) in [((5, 2), (5, 5)), ((4, 2), (4, 2)), ((7, 3), (7, 7))] {
        let got = semigroup_min_and_gcd(&sdn_generators(d, n).map_err(|e| e.to_string())?);
        ensure(got == want, || {
            format!("(d,n)=({d},{n}): (min,gcd) = {got:?}, expected {want:?}")
        })?;
    }
    Ok(())
}

fn c5_table() -> Outcome {
    let table = quadratic_pullback_table(&fixtures::jprime_corrected()).map_err(|e| e.to_string())?;
    let reference: Vec<(String, String)> = fixtures::pullback_table_rows()
        .into_iter()
        .map(|(a, b, img)| (format!("{a}*{b}"), img))
        .collect();
    ensure(reference.len() == 12, || "reference table does not have 12 rows".into())?;
    ensure(reference[0] == ("Xp0*Xp0".into(), "T1^5".into()), || {
        "first reference row".into()
    })?;
    ensure(reference[11] == ("Xm2*Xm2".into(), "T0^5".into()), || {
        "last reference row".into()
    })?;
    ensure(table.rendered() == reference, || {
        format!("table {:?}", table.rendered())
    })?;
    ensure(table.rank == 6, || format!("rank {}", table.rank))
}

fn c6_jprime_oracle() -> Outcome {
    let cmp = derive_jprime_and_compare(
        &fixtures::j_corrected(),
        &fixtures::jprime_corrected(),
        &default_samples(),
    )
    .map_err(|e| e.to_string())?;
    ensure(cmp.checks.len() == 30 && cmp.all_match(), || {
        format!("{}/{} point checks match", cmp.matched(), cmp.checks.len())
    })?;
    let deg = normalized_map_degree(&fixtures::jprime_corrected()).map_err(|e| e.to_string())?;
    ensure(deg == 5, || format!("deg j' = {deg}"))
}

fn c7_equivariance() -> Outcome {
    let a = WeightedTorusAction::standard_mu6();
    ensure(
        check_weighted_equivariance(&fixtures::j_corrected(), &a) == Ok(0),
        || "corrected j".into(),
    )?;
    let printed = check_weighted_equivariance(&fixtures::j_printed(), &a);
    ensure(matches!(printed, Err(ConstructError::NotHomogeneous { .. })), || {
        format!("printed j: {printed:?}")
    })?;
    let jp = check_weighted_equivariance(&fixtures::jprime_corrected(), &a.dual());
    ensure(jp.is_ok(), || format!("j': {jp:?}"))?;
    let dedup = check_weighted_equivariance(&fixtures::jprime_printed_dedup(), &a.dual());
    ensure(dedup.is_ok(), || format!("printed j' without the repeat: {dedup:?}"))
}

fn random_form(rng: &mut StdRng) -> SparseMultiPoly<Rational> {
    let deg = rng.gen_range(0..=4u32);
    let terms = (0..=deg).map(|k| {
        let c = Rational::new(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=5));
        (vec![deg - k, k], c)
    });
    SparseMultiPoly::from_terms(&C_VARS, terms).unwrap()
}

fn c8_norm() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for trial in 0..100 {
        let (p, q) = (random_form(&mut rng), random_form(&mut rng));
        let d = rng.gen_range(1..=4u32);
        let np = monomial_norm(&p, d).map_err(|e| e.to_string())?;
        let nq = monomial_norm(&q, d).map_err(|e| e.to_string())?;
        let npq = monomial_norm(&(&p * &q), d).map_err(|e| e.to_string())?;
        ensure(npq == &np * &nq, || {
            format!("trial {trial}: not multiplicative for p = {p}, q = {q}, d = {d}")
        })?;
        ensure(p.is_zero() || np.degree() == p.degree(), || {
            format!("trial {trial}: degree of Nm({p})")
        })?;
    }
    let p = SparseMultiPoly::parse("T0 + T1", &C_VARS).unwrap();
    let n = monomial_norm(&p, 3).map_err(|e| e.to_string())?;
    ensure(n.to_string() == "U0 + U1", || format!("Nm_3(T0 + T1) = {n}"))
}

fn c9_splitting() -> Outcome {
    ensure(pushforward_splitting_type(3, 5) == [1, 1, 1], || "f_* O(5)".into())?;
    for d in 1..=6 {
        for m in 0..=12 {
            let t = pushforward_splitting_type(d, m);
            ensure(t.iter().map(|x| x + 1).sum::<u32>() == m + 1, || {
                format!("d={d} m={m}: {t:?}")
            })?;
        }
    }
    Ok(())
}

fn c10_witness() -> Outcome {
    for ap in 1..=3 {
        for bp in 1..=3 {
            for e in 1..=100 {
                let r = choose_ab_and_certify(ap, bp, e).map_err(|x| x.to_string())?;
                ensure(
                    4 * r.a * r.b > e + 1 && e < 4 * r.a * r.b - 1 && r.no_section_ok == Some(true),
                    || format!("(a',b',e)=({ap},{bp},{e}) -> (a,b)=({},{})", r.a, r.b),
                )?;
            }
        }
    }
    for a in 1..=20 {
        for b in 1..=20 {
            let (_, ok) = span_and_basepoint(a, b).map_err(|x| x.to_string())?;
            ensure(ok, || format!("basepoint fails at ({a},{b})"))?;
        }
    }
    Ok(())
}

fn c11_determinism() -> Outcome {
    let commands: [&[&str]; 5] = [
        &["hypersurface", "--d", "5", "--n", "2", "--json"],
        &["enriques", "--json"],
        &["semigroup", "--d", "5", "--n", "2", "--query", "7", "--json"],
        &["verify-construction", "--json"],
        &["witness", "--a", "1", "--b", "1", "--e", "4", "--json"],
    ];
    for args in commands {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_pencil-index"))
                .args(args)
                .output()
                .map_err(|e| e.to_string())
        };
        let (a, b) = (run()?, run()?);
        ensure(a.status.code() == Some(0), || {
            format!("{args:?} exited with {:?}", a.status.code())
        })?;
        ensure(!a.stdout.is_empty() && a.stdout == b.stdout, || {
            format!("{args:?} output differs between runs")
        })?;
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("1 wreath group order and cube strata orbits", 1, c1_wreath),
        ("2 Enriques minimal degree 3 and index 1", 1, c2_enriques),
        ("3 hypersurface orbit sizes equal C(d,i)", 10, c3_hypersurface_orbits),
        ("4 semigroup membership against enumeration", 5, c4_semigroup),
        ("5 quadratic pullback table and rank", 1, c5_table),
        ("6 dual-point oracle for j' and its degree", 5, c6_jprime_oracle),
        ("7 equivariance and misprint diagnostics", 1, c7_equivariance),
        ("8 norm map degree and multiplicativity", 5, c8_norm),
        ("9 pushforward splitting type", 1, c9_splitting),
        ("10 witness inequalities and basepoints", 1, c10_witness),
        ("11 byte-identical JSON across runs", 5, c11_determinism),
    ];
    let mut failures = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(budget), || {
                format!("took {elapsed:?}, budget {budget} s")
            })
        });
        match outcome {
            Ok(()) => println!("PASS criterion {name} ({} ms)", elapsed.as_millis()),
            Err(msg) => {
                failures += 1;
                println!("FAIL criterion {name} ({} ms): {msg}", elapsed.as_millis());
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", 11 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
