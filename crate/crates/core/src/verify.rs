//! Self-consistency suites: every route to a number is compared with every
//! other route, and every bijection is run both ways on exhaustive domains.
//!
//! Each suite caps the size it sweeps so that a run finishes in seconds:
//! bijection at 10 elements, oracle at 12 (general posets at 5), labeled
//! brute force at 5 and trunk trees at 7 upper elements.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::bijection::{semiorder_to_tree, tree_to_semiorder};
use crate::error::{Error, Result};
use crate::labeled::{count_labeled_exact, count_labeled_leq, ordered_bell};
use crate::oracle::{enumerate_semiorders, labeled_oracle_counts, oracle_counts, Route};
use crate::semiorder::Semiorder;
use crate::tree::{DyckPath, OrderedTree};
use crate::trunk::{
    count_trunk_trees, dyck_to_rtlm, narayana, permutations, rtl_minima, rtlm_to_dyck,
};
use crate::unlabeled::{catalan, count_leq_upto, length_distribution, Method};

pub const BIJECTION_CAP: usize = 10;
pub const ORACLE_CAP: usize = 12;
pub const POSET_CAP: usize = 5;
pub const TRUNK_CAP: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Bijection,
    Recurrences,
    Labeled,
    Trunk,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::All,
        Suite::Bijection,
        Suite::Recurrences,
        Suite::Labeled,
        Suite::Trunk,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Bijection => "bijection",
            Suite::Recurrences => "recurrences",
            Suite::Labeled => "labeled",
            Suite::Trunk => "trunk",
            Suite::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse {
                what: "suite",
                detail: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub detail: String,
    pub ok: bool,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}",
            self.detail,
            if self.ok { "OK" } else { "MISMATCH" }
        )
    }
}

fn check(ok: bool, detail: String) -> Check {
    Check { detail, ok }
}

/// Runs one suite, or all of them in a fixed order.
pub fn run(suite: Suite, max_n: usize) -> Result<Vec<Check>> {
    match suite {
        Suite::All => {
            let mut out = Vec::new();
            for s in [
                Suite::Bijection,
                Suite::Recurrences,
                Suite::Labeled,
                Suite::Trunk,
                Suite::Oracle,
            ] {
                out.extend(run(s, max_n)?);
            }
            Ok(out)
        }
        Suite::Bijection => Ok(bijection(max_n.min(BIJECTION_CAP))),
        Suite::Recurrences => recurrences(max_n),
        Suite::Labeled => labeled(max_n),
        Suite::Trunk => trunk(max_n.min(TRUNK_CAP)),
        Suite::Oracle => oracle(max_n.min(ORACLE_CAP)),
    }
}

/// Whether every tree on `n + 1` nodes and every `n`-element vector survive
/// the round trip, with levels, lengths and good elements matching depths.
pub fn bijection_sweep(n: usize) -> (usize, usize, bool) {
    let trees = OrderedTree::all_with_nodes(n + 1);
    let mut images = BTreeSet::new();
    let mut ok = true;
    for t in &trees {
        let s = tree_to_semiorder(t);
        ok &= s.len() == n && semiorder_to_tree(&s) == *t;
        if n > 0 {
            let depths = t.depth_profile();
            let p = s.level_profile().expect("nonempty");
            ok &= p.sizes == depths[1..];
            ok &= p.length + 1 == t.height();
            ok &= p.good_elements().len() == *depths.last().unwrap();
        }
        images.insert(s);
    }
    ok &= images.len() == trees.len();
    let vectors = enumerate_semiorders(n).expect("within bounds");
    let mut count = 0;
    for s in vectors {
        ok &= tree_to_semiorder(&semiorder_to_tree(&s)) == s;
        count += 1;
    }
    (trees.len(), count, ok)
}

fn bijection(max_n: usize) -> Vec<Check> {
    (0..=max_n)
        .map(|n| {
            let (trees, vectors, ok) = bijection_sweep(n);
            check(
                ok,
                format!("bijection n={n} trees={trees} semiorders={vectors}"),
            )
        })
        .collect()
}

fn recurrences(max_n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for h in 0..=max_n {
        let reference = count_leq_upto(max_n, h, Method::Convolution)?;
        let mut routes = vec![Method::Alternating, Method::Series, Method::Trig];
        if h == 1 || h == 3 {
            routes.push(Method::Closed);
        }
        let others = routes
            .iter()
            .map(|&m| count_leq_upto(max_n, h, m))
            .collect::<Result<Vec<_>>>()?;
        for n in 0..=max_n {
            let ok = others.iter().all(|o| o[n] == reference[n]);
            let names: Vec<&str> = routes.iter().map(|m| m.name()).collect();
            out.push(check(
                ok,
                format!(
                    "recurrences n={n} h={h} leq={} vs={}",
                    reference[n],
                    names.join(",")
                ),
            ));
        }
    }
    for n in 1..=max_n {
        let sum: BigUint = length_distribution(n).iter().sum();
        let c = catalan(n);
        out.push(check(
            sum == c,
            format!("catalan n={n} sum={sum} catalan={c}"),
        ));
    }
    Ok(out)
}

fn labeled(max_n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let g = count_labeled_leq(n, 1);
        let a = ordered_bell(n);
        out.push(check(
            g == a,
            format!("labeled n={n} leq1={g} ordered_bell={a}"),
        ));
    }
    for n in 1..=max_n.min(POSET_CAP) {
        let brute = labeled_oracle_counts(n)?;
        for h in 0..n {
            let g = count_labeled_exact(n, h);
            let b = brute.get(&h).copied().unwrap_or(0);
            out.push(check(
                g == BigUint::from(b),
                format!("labeled n={n} h={h} transform={g} brute={b}"),
            ));
        }
    }
    Ok(out)
}

/// `(m, m-1, ..., 1, 0, ..., 0)` with `m` zeros: distinct upper down-set sizes.
pub fn distinct_trunk_semiorder(m: usize) -> Semiorder {
    let mut rho: Vec<usize> = (1..=m).rev().collect();
    rho.resize(2 * m, 0);
    Semiorder::new(rho).expect("canonical")
}

fn trunk(max_m: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        let c = count_trunk_trees(&distinct_trunk_semiorder(m))?;
        let expected = c.expected();
        out.push(check(
            c.hypothesis_holds && BigUint::from(c.count()) == expected,
            format!("trunk m={m} trees={} catalan={expected}", c.count()),
        ));

        let mut by_size: BTreeMap<usize, BTreeSet<_>> = BTreeMap::new();
        for sigma in permutations(m) {
            let r = rtl_minima(&sigma)?;
            by_size.entry(r.len()).or_default().insert(r);
        }
        for k in 1..=m {
            let got = by_size.get(&k).map_or(0, BTreeSet::len);
            let want = narayana(m, k);
            out.push(check(
                BigUint::from(got) == want,
                format!("trunk m={m} k={k} rtlm={got} narayana={want}"),
            ));
        }

        let paths = DyckPath::all(m);
        let ok = paths.iter().all(|d| {
            dyck_to_rtlm(d).is_ok_and(|r| rtlm_to_dyck(&r) == *d && r.len() == d.peaks().len())
        });
        out.push(check(
            ok,
            format!("trunk m={m} dyck_roundtrip={}", paths.len()),
        ));
    }
    Ok(out)
}

fn oracle(max_n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let vectors = oracle_counts(n, Route::Vectors)?;
        let posets = if n <= POSET_CAP {
            Some(oracle_counts(n, Route::Posets)?)
        } else {
            None
        };
        let formula = length_distribution(n);
        for (h, f) in formula.iter().enumerate() {
            let c = vectors.get(&h).copied().unwrap_or(0);
            let agree = posets
                .as_ref()
                .is_none_or(|p| p.get(&h).copied().unwrap_or(0) == c);
            out.push(check(
                agree && BigUint::from(c) == *f,
                format!("n={n} h={h} oracle={c} formula={f}"),
            ));
        }
    }
    Ok(out)
}
