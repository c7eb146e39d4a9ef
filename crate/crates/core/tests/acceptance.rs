mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{colored_pool, lattice_pool, non_lattice_pool, Case};
use hopf_core::cancel::{cancellation_report, is_sui, is_sui_via_lower_intervals};
use hopf_core::decompose::{center, center_report, center_via_distributivity};
use hopf_core::families::{boolean_lattice, figure_lattice, partition_lattice};
use hopf_core::forest::{
    antipode_forests_with, enumerate_forests_lattice, enumerate_forests_poset, fiber_checks,
};
use hopf_core::hopf::{
    antipode_axiom_check, antipode_chains, coassociativity_holds, coproduct, evaluate_mobius,
    mobius_recursive,
};
use hopf_core::{canonical_form, ClassRegistry, ForestMode, Incidence, Interval};

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion(n: u32, title: &str, limit: Option<Duration>, body: impl FnOnce() -> Verdict) -> bool {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let (ok, detail) = match outcome {
        Ok(d) => (in_time, d),
        Err(e) => (false, e),
    };
    let budget = limit.map_or(String::new(), |l| format!(" of {}s", l.as_secs()));
    println!(
        "{} criterion {n}: {title} ({detail}; {:.2}s{budget})",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    ok
}

fn names(p: &Interval, forests: &[hopf_core::Forest]) -> BTreeSet<Vec<String>> {
    forests.iter().map(|f| f.names(p)).collect()
}

fn set(items: &[&[&str]]) -> BTreeSet<Vec<String>> {
    items
        .iter()
        .map(|f| f.iter().map(|s| s.to_string()).collect())
        .collect()
}

fn engine_equivalence(reg: &ClassRegistry, pool: &[Case], mode: ForestMode) -> Verdict {
    for c in pool {
        let inc = Incidence::new(&c.interval, reg);
        let forests = antipode_forests_with(&inc, mode).map_err(|e| format!("{}: {e}", c.name))?;
        ensure(forests == inc.antipode_chains(), || {
            format!("{}: engines differ", c.name)
        })?;
    }
    Ok(format!("{} intervals", pool.len()))
}

fn worked_examples(reg: &ClassRegistry) -> Verdict {
    let f1 = figure_lattice(1).unwrap();
    let got = names(
        &f1,
        &enumerate_forests_lattice(&Incidence::new(&f1, reg)).unwrap(),
    );
    ensure(got == set(&[&[], &["a"], &["b"], &["a", "b"]]), || {
        format!("figure 1 forests {got:?}")
    })?;

    let f2 = figure_lattice(2).unwrap();
    let got = names(
        &f2,
        &enumerate_forests_lattice(&Incidence::new(&f2, reg)).unwrap(),
    );
    let expected = set(&[
        &[],
        &["a"],
        &["b"],
        &["c"],
        &["d"],
        &["a", "d"],
        &["b", "d"],
        &["c", "d"],
    ]);
    ensure(got == expected, || format!("figure 2 forests {got:?}"))?;

    let f3 = figure_lattice(3).unwrap();
    let inc = Incidence::new(&f3, reg);
    let report = cancellation_report(&inc, ForestMode::Lattice).unwrap();
    let pairs: Vec<(Vec<String>, Vec<String>)> = report
        .canceling_pairs()
        .into_iter()
        .map(|(f, g)| (f.names(&f3), g.names(&f3)))
        .collect();
    let wanted = (
        vec!["a".to_string()],
        vec!["a".to_string(), "b".to_string()],
    );
    ensure(pairs.contains(&wanted), || {
        format!("figure 3 pairs {pairs:?}")
    })?;
    Ok("figures 1-3".into())
}

fn mobius(pools: &[&[Case]]) -> Verdict {
    let mut count = 0;
    for c in pools.iter().copied().flatten() {
        let (a, b) = (evaluate_mobius(&c.interval), mobius_recursive(&c.interval));
        ensure(a == b, || {
            format!("{}: chain sum {a}, recursion {b}", c.name)
        })?;
        count += 1;
    }
    let spot = [
        (partition_lattice(3).unwrap(), 2),
        (partition_lattice(4).unwrap(), -6),
        (boolean_lattice(1), -1),
        (boolean_lattice(2), 1),
        (boolean_lattice(3), -1),
        (boolean_lattice(4), 1),
    ];
    for (p, want) in &spot {
        ensure(evaluate_mobius(p) == *want, || format!("spot value {want}"))?;
    }
    Ok(format!("{count} intervals, {} spot values", spot.len()))
}

fn fiber_sums(reg: &ClassRegistry, pool: &[Case]) -> Verdict {
    let mut forests = 0;
    for c in pool.iter().filter(|c| !c.interval.is_singleton()) {
        let inc = Incidence::new(&c.interval, reg);
        let checks = fiber_checks(&inc, ForestMode::Lattice).map_err(|e| e.to_string())?;
        if let Some(bad) = checks.iter().find(|k| !k.holds()) {
            return Err(format!("{}: {bad:?}", c.name));
        }
        let image: BTreeSet<_> = checks.iter().map(|k| k.forest.clone()).collect();
        let all: BTreeSet<_> = enumerate_forests_lattice(&inc)
            .unwrap()
            .into_iter()
            .collect();
        ensure(image == all, || {
            format!("{}: φ is not onto the forests", c.name)
        })?;
        forests += all.len();
    }
    Ok(format!("{forests} forests over {} intervals", pool.len()))
}

fn distinct_classes(pool: &[Case], max: usize) -> Vec<&Interval> {
    let mut seen = BTreeSet::new();
    pool.iter()
        .map(|c| &c.interval)
        .filter(|p| p.len() <= max && seen.insert(canonical_form(p)))
        .collect()
}

fn hopf_axioms(reg: &ClassRegistry, pool: &[Case]) -> Verdict {
    let small = distinct_classes(pool, 12);
    for p in &small {
        ensure(coassociativity_holds(p, reg), || "coassociativity".into())?;
        ensure(antipode_axiom_check(p, reg), || "convolution axiom".into())?;
    }
    let mut pairs = 0;
    for (i, p) in small.iter().enumerate() {
        for q in &small[i..] {
            if p.len() * q.len() > 12 {
                continue;
            }
            let pq = p.cartesian_product(q).into_interval();
            ensure(
                coproduct(&pq, reg) == &coproduct(p, reg) * &coproduct(q, reg),
                || "coproduct is not multiplicative".into(),
            )?;
            ensure(
                antipode_chains(&pq, reg) == &antipode_chains(p, reg) * &antipode_chains(q, reg),
                || "antipode is not multiplicative".into(),
            )?;
            pairs += 1;
        }
    }
    Ok(format!("{} classes, {pairs} products", small.len()))
}

fn cancellation(reg: &ClassRegistry, pools: &[&[Case]]) -> Verdict {
    let mut checked = 0;
    for c in pools.iter().copied().flatten() {
        let inc = Incidence::new(&c.interval, reg);
        if inc.whole().degree() != 1 {
            continue;
        }
        let sui = is_sui(&inc).unwrap();
        ensure(is_sui_via_lower_intervals(&inc).unwrap() == sui, || {
            format!("{}: lower-interval criterion disagrees", c.name)
        })?;
        let report = cancellation_report(&inc, ForestMode::for_interval(&c.interval)).unwrap();
        ensure(report.is_cancellation_free() == sui, || {
            format!("{}: s.u.i. {sui} but cancellation-free {}", c.name, !sui)
        })?;
        ensure(
            sui || report
                .canceling_pairs()
                .iter()
                .any(|(f, g)| g.len() == f.len() + 1),
            || format!("{}: no pair differing by one element", c.name),
        )?;
        checked += 1;
    }
    for n in 1..=4 {
        let p = partition_lattice(n).unwrap();
        let inc = Incidence::new(&p, reg);
        ensure(
            cancellation_report(&inc, ForestMode::Lattice)
                .unwrap()
                .is_cancellation_free(),
            || format!("Pi{n} cancels"),
        )?;
    }
    let f3 = figure_lattice(3).unwrap();
    let inc = Incidence::new(&f3, reg);
    ensure(
        !cancellation_report(&inc, ForestMode::Lattice)
            .unwrap()
            .is_cancellation_free(),
        || "figure 3 is cancellation-free".into(),
    )?;
    Ok(format!("{checked} indecomposable intervals"))
}

fn birkhoff(reg: &ClassRegistry, pools: &[&[Case]]) -> Verdict {
    let mut lattices = 0;
    let mut total = 0;
    for c in pools.iter().copied().flatten() {
        let p = &c.interval;
        let report = center_report(p, reg);
        ensure(report.all(), || format!("{}: {report:?}", c.name))?;
        let z = center(p);
        let inc = Incidence::new(p, reg);
        ensure(inc.lower_center(p.top()) == z, || {
            format!("{}: table center differs", c.name)
        })?;
        if p.is_lattice() {
            ensure(center_via_distributivity(p).unwrap() == z, || {
                format!("{}: distributivity center differs", c.name)
            })?;
            lattices += 1;
        }
        total += 1;
    }
    Ok(format!("{total} intervals, {lattices} lattices"))
}

fn unique_jmaps(reg: &ClassRegistry, lattices: &[Case], colored: &[Case]) -> Verdict {
    for c in lattices {
        let p = &c.interval;
        let inc = Incidence::new(p, reg);
        let posets = enumerate_forests_poset(&inc);
        let plain: Vec<_> = posets.iter().map(|f| f.without_jmap()).collect();
        let distinct: BTreeSet<_> = plain.iter().cloned().collect();
        ensure(distinct.len() == posets.len(), || {
            format!("{}: several J maps", c.name)
        })?;
        let lattice: BTreeSet<_> = enumerate_forests_lattice(&inc)
            .unwrap()
            .into_iter()
            .collect();
        ensure(distinct == lattice, || {
            format!("{}: forest sets differ", c.name)
        })?;
        for f in &posets {
            let joins = f
                .jmap()
                .unwrap()
                .entries()
                .all(|(mask, v)| p.join_all(&f.subset(mask)) == Some(v));
            ensure(joins, || format!("{}: J is not the join", c.name))?;
        }
    }
    let mut forests = 0;
    for c in colored {
        let inc = Incidence::new(&c.interval, reg);
        let mut per_set: BTreeMap<Vec<_>, usize> = BTreeMap::new();
        for f in enumerate_forests_poset(&inc) {
            *per_set.entry(f.nodes().to_vec()).or_default() += 1;
        }
        ensure(per_set.values().all(|&k| k == 1), || {
            format!("{}: several J maps", c.name)
        })?;
        forests += per_set.len();
    }
    Ok(format!(
        "{} lattices, {} colored posets with {forests} forests",
        lattices.len(),
        colored.len()
    ))
}

fn main() -> ExitCode {
    let reg = ClassRegistry::new();
    let lattices = lattice_pool(200);
    let colored = colored_pool();
    let non_lattices = non_lattice_pool(100);
    let posets: Vec<&[Case]> = vec![&colored, &non_lattices];
    let everything: Vec<&[Case]> = vec![&lattices, &colored, &non_lattices];

    let results = [
        criterion(
            1,
            "chain and forest antipodes agree on lattices",
            Some(Duration::from_secs(60)),
            || engine_equivalence(&reg, &lattices, ForestMode::Lattice),
        ),
        criterion(
            2,
            "chain and poset-forest antipodes agree",
            Some(Duration::from_secs(120)),
            || {
                let mut n = 0;
                for pool in &posets {
                    engine_equivalence(&reg, pool, ForestMode::Poset)?;
                    n += pool.len();
                }
                Ok(format!("{n} intervals"))
            },
        ),
        criterion(3, "worked examples reproduce", None, || {
            worked_examples(&reg)
        }),
        criterion(4, "Möbius chain sum matches the recursion", None, || {
            mobius(&everything)
        }),
        criterion(5, "fiber sign sums and filtration bijection", None, || {
            fiber_sums(&reg, &lattices)
        }),
        criterion(6, "Hopf algebra axioms", None, || {
            hopf_axioms(&reg, &lattices)
        }),
        criterion(7, "cancellation-free iff s.u.i.", None, || {
            cancellation(&reg, &everything)
        }),
        criterion(8, "center lemmas and distributivity center", None, || {
            birkhoff(&reg, &everything)
        }),
        criterion(
            9,
            "J maps are unique on lattices and colored partitions",
            None,
            || unique_jmaps(&reg, &lattices, &colored),
        ),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
