//! Exit criteria for the library and CLI. Runs as a plain binary and prints
//! one PASS/FAIL line per criterion; any failure makes the process exit 1.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use waring_core::exactnum::{BigRational, CyclotomicNumber};
use waring_core::hilbert::{
    hilbert_function, hilbert_function_bruteforce, window_identity_check, CIData,
};
use waring_core::monomial::{
    catalecticant_ranks, coprime_rank_bounds, extremal_rank_bruteforce, extremal_rank_ternary,
    generic_rank_naive, ideal_intersect, normalize, partitions, perp_generators, waring_rank,
    CanonicalMonomial, Monomial,
};
use waring_core::waring::json::{verify_document, DecompositionJson, DocumentCheck};
use waring_core::waring::{
    apply_differential, cyclotomic_order, decompose_canonical, decomposition_points,
    gamma_closed_form, solve_gamma_system,
};
use waring_core::{decompose, verify, zeta_power};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("waring").chain(args.iter().copied());
    let code = waring_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

/// Every canonical monomial (sorted partition) with at most `max_n` parts and
/// degree at most `max_d`.
fn canonical_sweep(max_n: usize, max_d: u32) -> Vec<CanonicalMonomial> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        for n in 1..=max_n {
            for p in partitions(d, n) {
                out.push(CanonicalMonomial::from_sorted(p).unwrap());
            }
        }
    }
    out
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn criterion_1() -> Check {
    let (code, json, err) = run_cli(&["decompose", "x1*x2*x3", "--format", "json"]);
    ensure(code == 0, || format!("decompose exited {code}: {err}"))?;
    let doc: DecompositionJson = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    ensure(doc.terms.len() == 4, || {
        format!("{} terms", doc.terms.len())
    })?;
    let order = doc.cyclotomic_order;
    let mut got: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
    for t in &doc.terms {
        let gamma = CyclotomicNumber::from_repr(&t.gamma, order).map_err(|e| e.to_string())?;
        let gamma = gamma.as_rational().ok_or("gamma is not rational")?.clone();
        let mut signs = Vec::new();
        for &e in &t.form {
            let z = zeta_power(order, e);
            let s = z.as_rational().ok_or("form entry is not ±1")?;
            signs.push(if s == &q(1, 1) { 1 } else { -1 });
        }
        got.insert(signs, gamma);
    }
    let expected: BTreeMap<Vec<i64>, BigRational> = [
        (vec![1, 1, 1], q(1, 24)),
        (vec![1, 1, -1], q(-1, 24)),
        (vec![1, -1, 1], q(-1, 24)),
        (vec![1, -1, -1], q(1, 24)),
    ]
    .into_iter()
    .collect();
    ensure(got == expected, || format!("terms {got:?}"))?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("xyz.json");
    std::fs::write(&path, &json).map_err(|e| e.to_string())?;
    let (code, _, err) = run_cli(&["verify", path.to_str().unwrap()]);
    ensure(code == 0, || format!("verify exited {code}: {err}"))
}

fn criterion_2() -> Check {
    let (code, out, err) = run_cli(&["table", "--dmax", "7"]);
    ensure(code == 0, || format!("table exited {code}: {err}"))?;
    ensure(out == "3 4 4\n4 5 6\n5 7 9\n6 10 12\n7 12 16\n", || {
        format!("table output {out:?}")
    })
}

fn criterion_3() -> Check {
    for n in 1..=4usize {
        for m in 1..=3u32 {
            let c = normalize(&Monomial::new(vec![m; n]).unwrap()).unwrap();
            let expected = BigUint::from(m + 1).pow(n as u32 - 1);
            ensure(waring_rank(&c) == expected, || {
                format!("n={n} m={m}: rank {}", waring_rank(&c))
            })?;
        }
    }
    Ok(())
}

fn criterion_4() -> Check {
    for c in canonical_sweep(4, 10) {
        let dec = decompose_canonical(&c).map_err(|e| e.to_string())?;
        ensure(BigUint::from(dec.rank()) == waring_rank(&c), || {
            format!("{:?}: term count {}", c.exponents(), dec.rank())
        })?;
        ensure(verify(&dec), || {
            format!("{:?} failed to verify", c.exponents())
        })?;
        let input = c.to_raw().to_string();
        let text = serde_json::to_string(&DecompositionJson::from_decomposition(&dec, &input))
            .map_err(|e| e.to_string())?;
        let doc: DecompositionJson = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        let check = verify_document(&doc).map_err(|e| e.to_string())?;
        ensure(check == DocumentCheck::Verified, || {
            format!("{input}: JSON round trip {check:?}")
        })?;
    }
    Ok(())
}

fn criterion_5() -> Check {
    for c in canonical_sweep(3, 8) {
        let order = cyclotomic_order(&c);
        let pts = decomposition_points(&c);
        let solved = solve_gamma_system(&c, &pts).map_err(|e| e.to_string())?;
        for (s, p) in solved.iter().zip(&pts) {
            let (r, e) = gamma_closed_form(&c, p).map_err(|e| e.to_string())?;
            let closed = zeta_power(order, e as i64).scale(&r);
            ensure(&closed == s, || {
                format!(
                    "{:?} at {p:?}: closed {closed} vs system {s}",
                    c.exponents()
                )
            })?;
        }
    }
    Ok(())
}

fn criterion_6() -> Check {
    let mut seqs: Vec<Vec<u32>> = Vec::new();
    for len in 1..=3usize {
        let mut cur = vec![vec![]];
        for _ in 0..len {
            cur = cur
                .into_iter()
                .flat_map(|p: Vec<u32>| {
                    let lo = p.last().copied().unwrap_or(2);
                    (lo..=5).map(move |x| {
                        let mut v = p.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        seqs.extend(cur);
    }
    for a in &seqs {
        let report = window_identity_check(a).map_err(|e| e.to_string())?;
        ensure(report.holds, || {
            format!("a={a:?}: lhs {} rhs {}", report.lhs, report.rhs)
        })?;
        let ci = CIData::with_linear_generator(a).map_err(|e| e.to_string())?;
        let tau = ci.socle_degree().unwrap() as u32;
        for i in 0..=tau + 1 {
            let fast = hilbert_function(&ci, i as usize);
            let slow = BigUint::from(hilbert_function_bruteforce(&ci, i));
            ensure(fast == slow, || format!("a={a:?} i={i}: {fast} vs {slow}"))?;
        }
    }
    Ok(())
}

fn criterion_7() -> Check {
    for d in 3..=30 {
        let formula = extremal_rank_ternary(d).map_err(|e| e.to_string())?;
        let brute = extremal_rank_bruteforce(3, d).map_err(|e| e.to_string())?;
        ensure(formula == brute, || {
            format!(
                "d={d}: formula {} {:?}, brute force {} {:?}",
                formula.0,
                formula.1.exponents(),
                brute.0,
                brute.1.exponents()
            )
        })?;
    }
    Ok(())
}

fn criterion_8() -> Check {
    let (value, _) = extremal_rank_ternary(601).map_err(|e| e.to_string())?;
    let generic = generic_rank_naive(3, 601).map_err(|e| e.to_string())?;
    // 1.45 <= value / generic <= 1.50, exactly
    let v100 = &value * 100u32;
    ensure(
        &generic * 145u32 <= v100 && v100 <= &generic * 150u32,
        || format!("ratio {value}/{generic}"),
    )
}

fn criterion_9() -> Check {
    for c in canonical_sweep(4, 10) {
        let ranks = catalecticant_ranks(&c);
        let d = c.degree() as usize;
        for a in 0..=d {
            ensure(ranks[a] == ranks[d - a], || {
                format!("{:?}: cat({a}) != cat({})", c.exponents(), d - a)
            })?;
        }
        let max = ranks.iter().max().unwrap();
        ensure(max <= &waring_rank(&c), || {
            format!("{:?}: catalecticant {max} above rank", c.exponents())
        })?;
    }
    Ok(())
}

/// Set partitions of `0..n` as block lists.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for v in 0..n {
        let mut next = Vec::new();
        for p in out {
            for b in 0..p.len() {
                let mut q = p.clone();
                q[b].push(v);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![v]);
            next.push(q);
        }
        out = next;
    }
    out
}

/// Compositions of `d` into `k` positive parts.
fn positive_compositions(d: u32, k: usize) -> Vec<Vec<u32>> {
    if k == 1 {
        return if d >= 1 { vec![vec![d]] } else { vec![] };
    }
    (1..d)
        .flat_map(|first| {
            positive_compositions(d - first, k - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Pairwise coprime families of degree-`d` monomials in `n` variables, one
/// monomial per block of a set partition.
fn coprime_families(n: usize, d: u32) -> Vec<Vec<Monomial>> {
    let mut out = Vec::new();
    for blocks in set_partitions(n) {
        let mut fams: Vec<Vec<Monomial>> = vec![vec![]];
        for block in &blocks {
            let choices = positive_compositions(d, block.len());
            fams = fams
                .into_iter()
                .flat_map(|fam| {
                    choices.iter().map(move |comp| {
                        let mut e = vec![0; n];
                        for (&v, &x) in block.iter().zip(comp) {
                            e[v] = x;
                        }
                        let mut f = fam.clone();
                        f.push(Monomial::new(e).unwrap());
                        f
                    })
                })
                .collect();
        }
        out.extend(fams);
    }
    out
}

fn criterion_10() -> Check {
    for c in canonical_sweep(4, 8) {
        for g in perp_generators(&c).generators() {
            let r = apply_differential(g, c.exponents()).map_err(|e| e.to_string())?;
            ensure(r.is_none(), || {
                format!("{g:?} does not annihilate {:?}", c.exponents())
            })?;
        }
    }
    for n in 1..=4 {
        for d in 1..=8 {
            for fam in coprime_families(n, d) {
                let perps: Vec<_> = fam.iter().map(Monomial::perp_ideal).collect();
                let inter = ideal_intersect(&perps).map_err(|e| e.to_string())?;
                for g in inter.generators() {
                    for m in &fam {
                        let r = apply_differential(g, m.exponents()).map_err(|e| e.to_string())?;
                        ensure(r.is_none(), || format!("{g:?} does not annihilate {m}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn random_coprime_family(rng: &mut ChaCha8Rng) -> Vec<Monomial> {
    let n = rng.gen_range(2..=8usize);
    let r = rng.gen_range(1..=n.min(4));
    let d = rng.gen_range(r as u32..=12).max(1);
    // assign every variable a block, ensure each block is non-empty
    let mut block_of: Vec<usize> = (0..n)
        .map(|v| if v < r { v } else { rng.gen_range(0..r) })
        .collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        block_of.swap(i, j);
    }
    (0..r)
        .map(|b| {
            let vars: Vec<usize> = (0..n).filter(|&v| block_of[v] == b).collect();
            let k = rng.gen_range(1..=vars.len().min(d as usize));
            // random composition of d into k positive parts
            let mut cuts: Vec<u32> = (1..d).collect();
            for i in (1..cuts.len()).rev() {
                let j = rng.gen_range(0..=i);
                cuts.swap(i, j);
            }
            let mut cuts: Vec<u32> = cuts.into_iter().take(k - 1).collect();
            cuts.sort_unstable();
            let mut parts = Vec::with_capacity(k);
            let mut last = 0;
            for c in cuts.into_iter().chain(std::iter::once(d)) {
                parts.push(c - last);
                last = c;
            }
            let mut e = vec![0; n];
            for (&v, p) in vars.iter().zip(parts) {
                e[v] = p;
            }
            Monomial::new(e).unwrap()
        })
        .collect()
}

fn criterion_11() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0011);
    for trial in 0..100 {
        let fam = random_coprime_family(&mut rng);
        let (lower, upper) = coprime_rank_bounds(&fam).map_err(|e| e.to_string())?;
        ensure(lower <= upper, || {
            format!("trial {trial}: {lower} > {upper}")
        })?;
        let m = &fam[0];
        let rk = waring_rank(&normalize(m).unwrap());
        let single = coprime_rank_bounds(std::slice::from_ref(m)).map_err(|e| e.to_string())?;
        ensure(single == (rk.clone(), rk), || {
            format!("trial {trial}: {m} gives {single:?}")
        })?;
    }
    Ok(())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Check,
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            name: "x1*x2*x3 identity and verify",
            limit: Some(Duration::from_millis(100)),
            run: criterion_1,
        },
        Criterion {
            id: 2,
            name: "three-variable rank table d = 3..7",
            limit: Some(Duration::from_millis(100)),
            run: criterion_2,
        },
        Criterion {
            id: 3,
            name: "rank of (x1...xn)^m = (m+1)^(n-1)",
            limit: None,
            run: criterion_3,
        },
        Criterion {
            id: 4,
            name: "decompositions verify for n <= 4, d <= 10",
            limit: Some(Duration::from_secs(60)),
            run: criterion_4,
        },
        Criterion {
            id: 5,
            name: "closed-form gamma equals linear-system gamma",
            limit: None,
            run: criterion_5,
        },
        Criterion {
            id: 6,
            name: "socle-window identity and Hilbert oracle",
            limit: Some(Duration::from_secs(10)),
            run: criterion_6,
        },
        Criterion {
            id: 7,
            name: "ternary extremal formula equals enumeration",
            limit: None,
            run: criterion_7,
        },
        Criterion {
            id: 8,
            name: "extremal/generic ratio at d = 601 in [1.45, 1.50]",
            limit: Some(Duration::from_millis(100)),
            run: criterion_8,
        },
        Criterion {
            id: 9,
            name: "catalecticant bound and symmetry",
            limit: None,
            run: criterion_9,
        },
        Criterion {
            id: 10,
            name: "perp ideals annihilate (single and coprime)",
            limit: None,
            run: criterion_10,
        },
        Criterion {
            id: 11,
            name: "coprime bounds sandwich on random families",
            limit: None,
            run: criterion_11,
        },
    ];
    // Warm the cyclotomic polynomial cache and lazy statics outside the timed runs.
    let _ = decompose(&"x1*x2".parse().unwrap());

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let result = result.and_then(|()| match c.limit {
            Some(limit) if elapsed > limit => Err(format!("took {elapsed:?}, limit {limit:?}")),
            _ => Ok(()),
        });
        match result {
            Ok(()) => println!("PASS criterion {:>2}: {} ({elapsed:.2?})", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!(
                    "FAIL criterion {:>2}: {} ({elapsed:.2?}): {why}",
                    c.id, c.name
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
