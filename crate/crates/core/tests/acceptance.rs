//! Acceptance run: one PASS/FAIL line per criterion with its tolerance and
//! elapsed time. Exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use equitab::boxdiag::{box_diagonal, box_diagonal_geometric};
use equitab::composition::{coarsenings, compositions_of};
use equitab::equitable::is_equitable;
use equitab::order::compare::{compare, Verdict};
use equitab::order::poset::{build_poset, PosetOptions};
use equitab::schur::lr::{lr_expand, restricted_expansion};
use equitab::schur::{descent_class_size, ExpansionEngine, SchurVector};
use equitab::verify::{
    chain_four, chain_one, chain_three, chain_two, family_box_diagonal, verify_chains,
    verify_filters, verify_ftom, verify_incomparability, verify_jensen, verify_minimal,
    verify_oracles, Report,
};
use equitab::{composition, partition, ribbon_to_skew, Composition, Partition, Result};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const GUARD: u128 = 3003;

type Check = std::result::Result<String, String>;

fn report_outcome(reports: &[Report]) -> Check {
    let entries: usize = reports.iter().map(|r| r.entries.len()).sum();
    match reports.iter().flat_map(|r| r.failures()).next() {
        None => Ok(format!("{entries} instances")),
        Some(f) => Err(format!("{}: {}", f.instance, f.detail)),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn exact_differences(engine: &ExpansionEngine) -> Check {
    for (x, y, nu) in [
        (
            composition![1, 2, 1],
            composition![1, 1, 2],
            partition![2, 2],
        ),
        (
            composition![2, 3, 2],
            composition![2, 2, 3],
            partition![4, 3],
        ),
    ] {
        let diff =
            lift(lift(engine.ribbon_schur(&x))?.checked_sub(&lift(engine.ribbon_schur(&y))?))?;
        ensure(diff == SchurVector::basis_element(nu.clone()), || {
            format!("r_{x} - r_{y} = {diff}")
        })?;
    }
    Ok("r_121 - r_112 = s[2,2], r_232 - r_223 = s[4,3]".into())
}

fn chains(engine: &ExpansionEngine) -> Check {
    let mut reports = Vec::new();
    for a in 1..=2 {
        reports.push(lift(verify_chains(engine, a, 5, 5, GUARD))?);
    }
    for a in 1..=2 {
        let lists = [
            chain_one(a, 5),
            chain_two(a, 5),
            chain_three(a),
            chain_four(a),
        ];
        for list in lists {
            for w in list.windows(2) {
                let v = lift(compare(engine, &w[0], &w[1]))?.verdict;
                ensure(v == Verdict::Greater, || {
                    format!("{} vs {}: {v:?}", w[0], w[1])
                })?;
            }
        }
    }
    report_outcome(&reports)
}

fn coarsening_multiset() -> Check {
    let got = coarsenings(&composition![1, 2, 1, 2]);
    let expected: BTreeMap<Partition, u64> = [
        (partition![2, 2, 1, 1], 1),
        (partition![3, 2, 1], 3),
        (partition![3, 3], 1),
        (partition![4, 2], 1),
        (partition![5, 1], 1),
        (partition![6], 1),
    ]
    .into_iter()
    .collect();
    ensure(got == expected, || format!("{got:?}"))?;
    Ok("{2211, 321^3, 33, 42, 51, 6}".into())
}

fn oracles(engine: &ExpansionEngine) -> Check {
    report_outcome(&[lift(verify_oracles(engine, 12))?])
}

/// `r_{M_i(alpha)} - r_alpha` and the four-term sum against the restricted
/// tableau counts.
fn moves(engine: &ExpansionEngine) -> Check {
    let r = |c: &Composition| lift(engine.ribbon_schur(c));
    let (mut single, mut double) = (0, 0);
    for size in 1..=12 {
        for alpha in compositions_of(size) {
            let l = alpha.len();
            if alpha.parts()[0] < 2 {
                continue;
            }
            for i in 2..=l {
                let beta = lift(alpha.move_cell(i))?;
                let rest: usize = beta.parts()[1..i].iter().sum();
                if beta.parts()[0] + i > rest {
                    let diff = lift(r(&beta)?.checked_sub(&r(&alpha)?))?;
                    let restricted = lift(restricted_expansion(&beta, i, None))?;
                    ensure(diff == restricted, || {
                        format!("{alpha}, i={i}: {diff} vs {restricted}")
                    })?;
                    single += 1;
                }
            }
            if alpha.parts()[0] < 3 {
                continue;
            }
            for j in 3..=l {
                let mj = lift(alpha.move_cell(j))?;
                for i in 2..j {
                    let mi = lift(alpha.move_cell(i))?;
                    let beta = lift(mj.move_cell(i))?;
                    let rest: usize = beta.parts()[1..j].iter().sum();
                    if beta.parts()[0] + j < rest + 1 {
                        continue;
                    }
                    let (rb, rj, ri, ra) = (r(&beta)?, r(&mj)?, r(&mi)?, r(&alpha)?);
                    let sum = lift(
                        rb.checked_sub(&rj)
                            .and_then(|v| v.checked_sub(&ri))
                            .and_then(|v| v.checked_add(&ra)),
                    )?;
                    let restricted = lift(restricted_expansion(&beta, i, Some(j)))?;
                    ensure(sum == restricted, || {
                        format!("{alpha}, i={i}, j={j}: {sum} vs {restricted}")
                    })?;
                    double += 1;
                }
            }
        }
    }
    Ok(format!("{single} single moves, {double} double moves"))
}

fn filters(engine: &ExpansionEngine) -> Check {
    let mut reports = Vec::new();
    for (a, n, m) in [(2, 2, 2), (2, 2, 3), (2, 3, 2), (1, 2, 3), (1, 3, 2)] {
        reports.push(lift(verify_filters(engine, a, n, m, GUARD))?);
    }
    report_outcome(&reports)
}

fn ftom() -> Check {
    let mut reports = Vec::new();
    for a in 1..=2 {
        for n in 0..=3 {
            for m in 0..=8 {
                for k in 0..=3 {
                    if m >= 2 * k {
                        reports.push(lift(verify_ftom(a, n, m, k))?);
                    }
                }
            }
        }
    }
    let (a, n, m) = (4, 3, 6);
    let lambda = equitab::composition::joined_pairs_partition(a, n, m, 2).expect("m >= 4");
    for (profile, expected) in [([2, 2, 2, 0], 3), ([3, 2, 1, 0], 2), ([4, 1, 1, 0], 1)] {
        let alpha = equitab::equitable::from_profile(&profile, a);
        let got = equitab::composition::multiplicity(&alpha, &lambda);
        ensure(got == expected, || format!("m_{alpha}(lambda_2) = {got}"))?;
    }
    report_outcome(&reports).map(|s| format!("{s}; example multiplicities 3, 2, 1"))
}

fn extremes(engine: &ExpansionEngine) -> Check {
    let reports = [
        lift(verify_minimal(engine, 2, 2, 2, GUARD))?,
        lift(verify_minimal(engine, 2, 2, 3, GUARD))?,
    ];
    report_outcome(&reports)?;
    let p = lift(build_poset(engine, 2, 2, 2, PosetOptions::default()))?;
    let max: Vec<String> = p
        .maximal()
        .into_iter()
        .map(|i| p.elements[i].to_string())
        .collect();
    ensure(max == ["2,3,3,2"], || {
        format!("maxima of R(3^2 2^2): {max:?}")
    })?;
    let min: Vec<String> = p
        .minimal()
        .into_iter()
        .map(|i| p.elements[i].to_string())
        .collect();
    ensure(min == ["3,2,2,3"], || {
        format!("minima of R(3^2 2^2): {min:?}")
    })?;
    let q = lift(build_poset(engine, 2, 2, 3, PosetOptions::default()))?;
    let top = composition![2, 3, 2, 3, 2];
    let i = q.index_of(&top).expect("element");
    ensure(q.maximal().contains(&i), || "23232 not maximal".into())?;
    let min: Vec<String> = q
        .minimal()
        .into_iter()
        .map(|i| q.elements[i].to_string())
        .collect();
    ensure(min == ["3,2,2,2,3"], || {
        format!("minima of R(3^2 2^3): {min:?}")
    })?;
    ensure(
        box_diagonal(5, 8) == top && family_box_diagonal(2, 2, 3) == top,
        || format!("box_diagonal(5, 8) = {}", box_diagonal(5, 8)),
    )?;
    Ok("3223, 32223 minimal; 2332 unique maximum; 23232 maximal = box_diagonal(5, 8)".into())
}

fn incomparability(engine: &ExpansionEngine) -> Check {
    let mut reports = Vec::new();
    for a in 1..=2 {
        for t in 0..=2 {
            reports.push(lift(verify_incomparability(engine, a, t))?);
        }
    }
    report_outcome(&reports)
}

fn box_diagonals() -> Check {
    for r in 1..=30 {
        for s in 1..=30 {
            let d = box_diagonal(r, s);
            let g = box_diagonal_geometric(r, s);
            ensure(d == g, || format!("({r}, {s}): {d} vs {g}"))?;
            ensure(is_equitable(&d).is_some(), || {
                format!("({r}, {s}): {d} not equitable")
            })?;
        }
    }
    Ok("900 grids".into())
}

fn conjugated(v: &SchurVector) -> Result<SchurVector> {
    SchurVector::from_terms(v.iter().map(|(p, c)| (p.conjugate(), c)))
}

fn properties(engine: &ExpansionEngine) -> Check {
    let mut counts = [0usize; 4];
    for size in 1..=12 {
        for alpha in compositions_of(size) {
            let forward = lift(lr_expand(&ribbon_to_skew(&alpha)))?;
            let backward = lift(lr_expand(&ribbon_to_skew(&alpha.reverse())))?;
            ensure(forward == backward, || {
                format!("r_{alpha} != r of its reverse")
            })?;
            let syt = lift(engine.syt_count(&alpha))?;
            let descents = lift(descent_class_size(&alpha))?;
            ensure(syt as i128 == descents, || {
                format!("{alpha}: {syt} vs {descents}")
            })?;
            counts[0] += 1;
            if size <= 10 {
                let shape = ribbon_to_skew(&alpha);
                let t = lift(lr_expand(&shape.transpose()))?;
                ensure(t == lift(conjugated(&forward))?, || {
                    format!("transpose of {alpha}")
                })?;
                counts[1] += 1;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let random = |rng: &mut StdRng, size: usize| {
        let all = compositions_of(size);
        all[rng.gen_range(0..all.len())].clone()
    };
    for _ in 0..200 {
        let total = rng.gen_range(2..=12);
        let left = rng.gen_range(1..total);
        let (x, y) = (random(&mut rng, left), random(&mut rng, total - left));
        let product = lift(engine.product_expand(&x, &y))?;
        let sum = lift(
            lift(engine.ribbon_schur(&x.concat(&y)))?
                .checked_add(&lift(engine.ribbon_schur(&lift(x.near_concat(&y))?))?),
        )?;
        ensure(product == sum, || format!("r_{x} r_{y}"))?;
        counts[2] += 1;
    }
    report_outcome(&[verify_jensen(6, 6)])?;
    counts[3] = 13 * 13 * 7;
    Ok(format!(
        "{} reversal/hook, {} transpose, {} products, {} jensen points",
        counts[0], counts[1], counts[2], counts[3]
    ))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: Box<dyn Fn() -> Check>,
}

fn main() -> ExitCode {
    let engine: &'static ExpansionEngine = Box::leak(Box::new(ExpansionEngine::default()));
    let secs = |s: u64| Some(Duration::from_secs(s));
    let criteria = vec![
        Criterion {
            id: 1,
            name: "exact differences",
            budget: secs(1),
            run: Box::new(move || exact_differences(engine)),
        },
        Criterion {
            id: 2,
            name: "chains",
            budget: secs(60),
            run: Box::new(move || chains(engine)),
        },
        Criterion {
            id: 3,
            name: "coarsening multiset",
            budget: None,
            run: Box::new(coarsening_multiset),
        },
        Criterion {
            id: 4,
            name: "oracle equivalence",
            budget: secs(300),
            run: Box::new(move || oracles(engine)),
        },
        Criterion {
            id: 5,
            name: "cell moving identities",
            budget: None,
            run: Box::new(move || moves(engine)),
        },
        Criterion {
            id: 6,
            name: "filter soundness",
            budget: None,
            run: Box::new(move || filters(engine)),
        },
        Criterion {
            id: 7,
            name: "joined pairs multiplicities",
            budget: None,
            run: Box::new(ftom),
        },
        Criterion {
            id: 8,
            name: "minimal and maximal elements",
            budget: None,
            run: Box::new(move || extremes(engine)),
        },
        Criterion {
            id: 9,
            name: "incomparable pairs",
            budget: None,
            run: Box::new(move || incomparability(engine)),
        },
        Criterion {
            id: 10,
            name: "box diagonals",
            budget: secs(5),
            run: Box::new(box_diagonals),
        },
        Criterion {
            id: 11,
            name: "property suites",
            budget: None,
            run: Box::new(move || properties(engine)),
        },
    ];
    let mut failed = 0;
    for c in criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let over = c.budget.filter(|&b| elapsed > b);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), None) => ("PASS", d.clone()),
            (Ok(d), Some(b)) => ("FAIL", format!("{d}; exceeded {} ms budget", b.as_millis())),
            (Err(d), _) => ("FAIL", d.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        let budget = c
            .budget
            .map_or("none".to_string(), |b| format!("{} ms", b.as_millis()));
        println!(
            "{status} criterion {:>2} {}: tol=0 budget={budget} elapsed={} ms; {detail}",
            c.id,
            c.name,
            elapsed.as_millis()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
