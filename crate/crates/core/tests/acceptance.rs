//! Acceptance criteria, one line of output per criterion.
//!
//! Runs without the libtest harness so the report reads top to bottom; the
//! process exits non-zero if any criterion fails or overruns its time budget.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use semiorder::bijection::Construction;
use semiorder::labeled::{
    count_labeled_leq, labeled_series_all, ordered_bell, partition_images, substitute_one_minus_exp,
};
use semiorder::oracle::{
    enumerate_semiorders, labeled_oracle_counts, labeled_short_semiorders, oracle_counts,
    GenericPoset, Route,
};
use semiorder::trunk::{
    count_trunk_trees, dyck_to_rtlm, narayana, permutations, rtl_minima, rtlm_to_dyck, trunk_tree,
    trunk_tree_from_minima,
};
use semiorder::unlabeled::{
    catalan, count_exact, count_leq, count_leq_upto, length_distribution, trig_formula,
    TRIG_RESIDUE_LIMIT,
};
use semiorder::verify::bijection_sweep;
use semiorder::{DyckPath, IntegerSeries, Method, OrderedTree, Semiorder};

type Outcome = Result<(), String>;

fn same<T: PartialEq + Debug>(what: impl std::fmt::Display, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn holds(what: impl std::fmt::Display, ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(format!("{what} failed"))
    }
}

fn catalan_marginal() -> Outcome {
    for n in 1..=12 {
        let total: BigUint = (0..n).map(|h| count_exact(n, h)).sum();
        same(format!("sum over lengths at n={n}"), total, catalan(n))?;
    }
    same("C_5", catalan(5), BigUint::from(42u32))?;
    same("C_10", catalan(10), BigUint::from(16796u32))
}

fn method_agreement() -> Outcome {
    for h in 0..=10 {
        let conv = count_leq_upto(30, h, Method::Convolution).map_err(|e| e.to_string())?;
        let alt = count_leq_upto(30, h, Method::Alternating).map_err(|e| e.to_string())?;
        let ser = count_leq_upto(30, h, Method::Series).map_err(|e| e.to_string())?;
        for n in 0..=30 {
            same(format!("alternating n={n} h={h}"), &alt[n], &conv[n])?;
            same(format!("series n={n} h={h}"), &ser[n], &conv[n])?;
            let trig = count_leq(n, h, Method::Trig).map_err(|e| e.to_string())?;
            same(format!("trig n={n} h={h}"), &trig, &conv[n])?;
            if n >= 2 {
                let e = trig_formula(n, h);
                holds(
                    format!("trig residue {} at n={n} h={h}", e.residue),
                    e.residue < TRIG_RESIDUE_LIMIT,
                )?;
            }
        }
    }
    Ok(())
}

fn closed_forms() -> Outcome {
    for h in [1, 3] {
        let conv = count_leq_upto(20, h, Method::Convolution).map_err(|e| e.to_string())?;
        let alt = count_leq_upto(20, h, Method::Alternating).map_err(|e| e.to_string())?;
        for n in 0..=20 {
            let closed = count_leq(n, h, Method::Closed).map_err(|e| e.to_string())?;
            same(
                format!("closed n={n} h={h} vs convolution"),
                &closed,
                &conv[n],
            )?;
            same(
                format!("closed n={n} h={h} vs alternating"),
                &closed,
                &alt[n],
            )?;
        }
    }
    for n in 1..=20u32 {
        same(
            format!("2^(n-1) at n={n}"),
            count_leq(n as usize, 1, Method::Convolution).unwrap(),
            BigUint::from(2u32).pow(n - 1),
        )?;
        same(
            format!("(3^(n-1)+1)/2 at n={n}"),
            count_leq(n as usize, 3, Method::Convolution).unwrap(),
            (BigUint::from(3u32).pow(n - 1) + 1u32) / 2u32,
        )?;
    }
    let leq2 = count_leq_upto(20, 2, Method::Convolution).unwrap();
    for n in 2..=20 {
        let lhs = count_exact(n, 3);
        let rhs = count_exact(n - 1, 3) * 3u32 + &leq2[n - 2] - 1u32;
        same(format!("f_3 corollary at n={n}"), &lhs, &rhs)?;
        let split = count_exact(n - 1, 3) * 3u32 + count_exact(n - 2, 2) + count_exact(n - 2, 1);
        same(format!("f_3 corollary, split form, at n={n}"), &lhs, &split)?;
    }
    Ok(())
}

fn main_bijection() -> Outcome {
    for n in 0..=9 {
        let (trees, vectors, ok) = bijection_sweep(n);
        holds(format!("tree/semiorder sweep at n={n}"), ok)?;
        same(
            format!("tree count at n={n}"),
            BigUint::from(trees),
            catalan(n),
        )?;
        same(
            format!("vector count at n={n}"),
            BigUint::from(vectors),
            catalan(n),
        )?;
    }
    Ok(())
}

fn golden_example() -> Outcome {
    let tree: OrderedTree = "(((()()))(()((()))))".parse().map_err(|e| format!("{e}"))?;
    let c = Construction::run(&tree);
    let lines: Vec<String> = c
        .stages
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let body: Vec<String> = s.iter().map(ToString::to_string).collect();
            format!("R^{}=({})", i + 1, body.join(","))
        })
        .collect();
    same(
        "stages",
        lines.join(" "),
        "R^1=(0,0) R^2=(3,2,0,0,0) R^3=(6,5,3,1,1,0,0,0) R^4=(7,6,4,2,2,1,1,1,0)".to_string(),
    )?;
    same("tree size", tree.node_count(), 10)
}

fn oracle_equivalence() -> Outcome {
    for n in 1..=9 {
        let vectors = oracle_counts(n, Route::Vectors).map_err(|e| e.to_string())?;
        let formula = length_distribution(n);
        for (h, f) in formula.iter().enumerate() {
            let c = vectors.get(&h).copied().unwrap_or(0);
            same(
                format!("vector route n={n} h={h}"),
                BigUint::from(c),
                f.clone(),
            )?;
        }
        holds(
            format!("no longer lengths at n={n}"),
            vectors.keys().all(|&h| h < n),
        )?;
    }
    for n in 1..=5 {
        let posets = oracle_counts(n, Route::Posets).map_err(|e| e.to_string())?;
        let vectors = oracle_counts(n, Route::Vectors).map_err(|e| e.to_string())?;
        same(format!("poset route at n={n}"), posets, vectors)?;
    }
    for n in 0..=8 {
        for s in enumerate_semiorders(n).unwrap() {
            holds(
                format!("pattern-free {s}"),
                GenericPoset::from(&s).is_semiorder(),
            )?;
        }
    }
    Ok(())
}

fn labeled_counts() -> Outcome {
    for n in 0..=12 {
        same(
            format!("ordered Bell at n={n}"),
            count_labeled_leq(n, 1),
            ordered_bell(n),
        )?;
    }
    let first: Vec<BigUint> = (0..=5).map(ordered_bell).collect();
    same(
        "ordered Bell start",
        first,
        [1u32, 1, 3, 13, 75, 541].map(BigUint::from).to_vec(),
    )?;
    let ones = IntegerSeries::from_fn(20, |_| One::one());
    holds(
        "antichain transform",
        substitute_one_minus_exp(&ones, 20)
            .coeffs()
            .iter()
            .all(One::is_one),
    )?;
    let all = labeled_series_all(4);
    for n in 1..=4 {
        let brute: u64 = labeled_oracle_counts(n)
            .map_err(|e| e.to_string())?
            .values()
            .sum();
        same(
            format!("all labeled semiorders at n={n}"),
            all.coeff(n).clone(),
            brute.into(),
        )?;
    }
    same(
        "labeled totals n=1..3",
        all.coeffs()[1..4].to_vec(),
        [1, 3, 19].map(Into::into).to_vec(),
    )?;
    for n in 0..=5 {
        same(
            format!("partition images at n={n}"),
            partition_images(n),
            labeled_short_semiorders(n).map_err(|e| e.to_string())?,
        )?;
    }
    Ok(())
}

fn trunk_tree_count() -> Outcome {
    let mut checked = 0;
    for n in 1..=12 {
        for s in enumerate_semiorders(n).unwrap() {
            let p = s.level_profile().unwrap();
            let m = p.sizes[0];
            if p.length > 1 || m > 6 || !s.rho()[..m].windows(2).all(|w| w[0] > w[1]) {
                continue;
            }
            let c = count_trunk_trees(&s).map_err(|e| e.to_string())?;
            holds(format!("hypothesis for {s}"), c.hypothesis_holds)?;
            same(
                format!("trunk trees of {s}"),
                BigUint::from(c.count()),
                catalan(m),
            )?;
            checked += 1;
        }
    }
    holds(format!("{checked} semiorders checked"), checked > 100)?;

    let twelve: Semiorder = "7,5,4,2,1,0,0,0,0,0,0,0".parse().unwrap();
    same(
        "worked example",
        trunk_tree(&twelve, &[1, 5, 3, 2, 4])
            .unwrap()
            .leaves()
            .to_vec(),
        vec![2, 0, 0, 3, 2],
    )?;
    for sigma in permutations(5) {
        let r = rtl_minima(&sigma).unwrap();
        same(
            format!("leaves from minima for {sigma:?}"),
            trunk_tree(&twelve, &sigma).unwrap(),
            trunk_tree_from_minima(&twelve, &r).unwrap(),
        )?;
    }

    same("N(3,2)", narayana(3, 2), BigUint::from(3u32))?;
    for m in 1..=7 {
        let mut by_k: BTreeMap<usize, std::collections::BTreeSet<_>> = BTreeMap::new();
        for sigma in permutations(m) {
            let r = rtl_minima(&sigma).unwrap();
            by_k.entry(r.len()).or_default().insert(r);
        }
        for k in 1..=m {
            let got = by_k.get(&k).map_or(0, |s| s.len());
            same(
                format!("minima classes m={m} k={k}"),
                BigUint::from(got),
                narayana(m, k),
            )?;
        }
    }
    for len in 0..=7 {
        for d in DyckPath::all(len) {
            let r = dyck_to_rtlm(&d).map_err(|e| e.to_string())?;
            same(format!("peaks of {d}"), r.len(), d.peaks().len())?;
            same(format!("roundtrip of {d}"), rtlm_to_dyck(&r), d)?;
        }
    }
    Ok(())
}

fn split_join() -> Outcome {
    let mut by_size: Vec<Vec<Semiorder>> = Vec::new();
    for n in 0..=9 {
        by_size.push(enumerate_semiorders(n).unwrap().collect());
    }
    for n in 1..=8 {
        for s in &by_size[n] {
            let sp = s.split().map_err(|e| e.to_string())?;
            same(
                format!("join(split({s}))"),
                Semiorder::join(&sp.rest, &sp.below),
                s.clone(),
            )?;
        }
        for t in 0..n {
            for rest in &by_size[t] {
                for below in &by_size[n - 1 - t] {
                    let j = Semiorder::join(rest, below);
                    let sp = j.split().map_err(|e| e.to_string())?;
                    holds(
                        format!("split(join({rest} | {below}))"),
                        sp.rest == *rest && sp.below == *below,
                    )?;
                }
            }
        }
    }
    for h in 0..=4 {
        let leq = count_leq_upto(9, h, Method::Convolution).unwrap();
        let lower: Vec<BigUint> = if h == 0 {
            (0..=9).map(|m| BigUint::from(u32::from(m == 0))).collect()
        } else {
            count_leq_upto(9, h - 1, Method::Convolution).unwrap()
        };
        for n in 1..=9 {
            let mut per_t = vec![BigUint::zero(); n];
            for s in &by_size[n] {
                if s.length().unwrap() <= h {
                    per_t[s.split().unwrap().rest.len()] += 1u32;
                }
            }
            for (t, got) in per_t.iter().enumerate() {
                same(
                    format!("pairs n={n} h={h} t={t}"),
                    got.clone(),
                    &leq[t] * &lower[n - 1 - t],
                )?;
            }
        }
    }
    Ok(())
}

fn structure() -> Outcome {
    for n in 1..=8 {
        for s in enumerate_semiorders(n).unwrap() {
            let p = s.level_profile().unwrap();
            let m = s.comparability();
            // Level from first principles: one more than the longest chain above.
            let mut chain_above = vec![0usize; n];
            for j in 0..n {
                chain_above[j] = (0..j)
                    .filter(|&i| m.greater(i, j))
                    .map(|i| chain_above[i] + 1)
                    .max()
                    .unwrap_or(0);
                same(
                    format!("level of {j} in {s}"),
                    p.level_of[j],
                    chain_above[j] + 1,
                )?;
            }
            for i in 1..=p.levels() {
                for j in i + 2..=p.levels() {
                    let dominated = p
                        .elements_on(i)
                        .all(|a| p.elements_on(j).all(|b| s.is_greater(a, b)));
                    holds(format!("levels {i} over {j} in {s}"), dominated)?;
                }
                if i < p.levels() {
                    let marker = p
                        .elements_on(i)
                        .any(|a| p.elements_on(i + 1).all(|b| s.is_greater(a, b)));
                    holds(format!("marker on level {i} of {s}"), marker)?;
                }
            }
            let bad: Vec<usize> = s.bad_elements().unwrap().iter().map(|b| b.level).collect();
            holds(format!("bad elements of {s}"), !bad.is_empty())?;
            holds(
                format!("adjacent bad levels {bad:?} in {s}"),
                bad.windows(2).all(|w| w[1] > w[0] + 1),
            )?;
        }
    }
    Ok(())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            id: 1,
            name: "catalan marginal",
            limit: secs(1),
            run: catalan_marginal,
        },
        Criterion {
            id: 2,
            name: "four-way method agreement",
            limit: secs(5),
            run: method_agreement,
        },
        Criterion {
            id: 3,
            name: "closed forms and f_3 recurrence",
            limit: secs(1),
            run: closed_forms,
        },
        Criterion {
            id: 4,
            name: "tree bijection",
            limit: secs(30),
            run: main_bijection,
        },
        Criterion {
            id: 5,
            name: "ten-node construction stages",
            limit: secs(1),
            run: golden_example,
        },
        Criterion {
            id: 6,
            name: "oracle equivalence",
            limit: secs(60),
            run: oracle_equivalence,
        },
        Criterion {
            id: 7,
            name: "labeled counts",
            limit: secs(5),
            run: labeled_counts,
        },
        Criterion {
            id: 8,
            name: "trunk trees",
            limit: secs(60),
            run: trunk_tree_count,
        },
        Criterion {
            id: 9,
            name: "split and join",
            limit: secs(30),
            run: split_join,
        },
        Criterion {
            id: 10,
            name: "level structure",
            limit: secs(30),
            run: structure,
        },
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(c.run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(msg)
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            holds(
                format!("time budget {:?} exceeded", c.limit),
                elapsed <= c.limit,
            )
        });
        let verdict = if outcome.is_ok() { "PASS" } else { "FAIL" };
        println!(
            "{verdict} {:>2} {:<34} {:>8.3}s (limit {}s)",
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
        if let Err(msg) = outcome {
            println!("     {msg}");
            failures += 1;
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
