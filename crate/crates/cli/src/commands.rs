use std::path::{Path, PathBuf};

use hopf_core::cancel::{
    cancellation_report, family_upper_indecomposable, is_sui, is_sui_via_lower_intervals,
    is_upper_indecomposable, sui_witness,
};
use hopf_core::decompose::{
    center, center_via_distributivity, factor_indecomposable, prime_center,
};
use hopf_core::families::{
    boolean_lattice, chain_lattice, colored_partition_poset, distributive_lattice_of_ideals,
    figure_lattice, partition_lattice, random_interval, random_lattice, random_non_lattice,
};
use hopf_core::forest::{antipode_forests_with, enumerate_forests, forest_terms};
use hopf_core::hopf::evaluate_mobius;
use hopf_core::{
    interval_from_json, interval_to_json, poset_from_json, ClassRegistry, ElementId, Forest,
    ForestMode, HopfError, Incidence, Interval,
};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::naming::Names;
use crate::{AntipodeArgs, CheckCommand, Command, Engine, FamilyCommand, ForestArgs, RandomKind};

const MAX_BOOLEAN_RANK: usize = 12;
const MAX_CHAIN_LENGTH: usize = 500;
const MAX_IDEAL_POSET: usize = 20;

pub enum CliError {
    Input { kind: String, message: String },
    Invariant(String),
}

impl From<HopfError> for CliError {
    fn from(e: HopfError) -> Self {
        let kind = match e {
            HopfError::NotAPartialOrder(_) => "not_a_partial_order",
            HopfError::NoUniqueBottom => "no_unique_bottom",
            HopfError::NoUniqueTop => "no_unique_top",
            HopfError::NotComparable(..) => "not_comparable",
            HopfError::NotALattice => "not_a_lattice",
            HopfError::ChainNotInInterval => "chain_not_in_interval",
            HopfError::NotAForest(_) => "not_a_forest",
            HopfError::InputDecomposable => "input_decomposable",
            HopfError::SizeLimit(_) => "size_limit",
            HopfError::InvalidInput(_) => "invalid_input",
        };
        CliError::Input {
            kind: kind.into(),
            message: e.to_string(),
        }
    }
}

pub struct Report {
    pub json: Value,
    pub text: String,
}

pub enum Output {
    Report(Report),
    Interval(String),
}

type Res<T> = Result<T, CliError>;

struct Input {
    bytes: Vec<u8>,
    path: PathBuf,
}

fn read(path: &Path) -> Res<Input> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Input {
        kind: "io".into(),
        message: format!("{}: {e}", path.display()),
    })?;
    Ok(Input {
        bytes,
        path: path.to_path_buf(),
    })
}

fn text_of(input: &Input) -> Res<&str> {
    std::str::from_utf8(&input.bytes).map_err(|_| {
        CliError::from(HopfError::InvalidInput(format!(
            "{} is not UTF-8",
            input.path.display()
        )))
    })
}

fn digest(inputs: &[&Input]) -> String {
    let mut h = Sha256::new();
    for input in inputs {
        h.update((input.bytes.len() as u64).to_le_bytes());
        h.update(&input.bytes);
    }
    hex::encode(h.finalize())
}

fn load(path: &Path) -> Res<(Interval, String)> {
    let input = read(path)?;
    let p = interval_from_json(text_of(&input)?)?;
    Ok((p, digest(&[&input])))
}

fn report(echo: &[String], digest: String, result: Value, text: String) -> Output {
    Output::Report(Report {
        json: json!({"command": echo, "input_digest": digest, "result": result}),
        text,
    })
}

fn element_names(p: &Interval, xs: &[ElementId]) -> Vec<String> {
    xs.iter().map(|&x| p.name(x).to_string()).collect()
}

fn braces(names: &[String]) -> String {
    format!("{{{}}}", names.join(", "))
}

fn forest_json(p: &Interval, f: &Forest) -> Value {
    let mut v = json!({"nodes": f.names(p)});
    if let Some(j) = f.jmap() {
        let table: Vec<Value> = j
            .entries()
            .map(|(mask, x)| json!({"subset": element_names(p, &f.subset(mask)), "value": p.name(x)}))
            .collect();
        v["jmap"] = Value::Array(table);
    }
    v
}

fn forest_text(p: &Interval, f: &Forest) -> String {
    let mut s = braces(&f.names(p));
    if let Some(j) = f.jmap() {
        let entries: Vec<String> = j
            .entries()
            .skip(1)
            .map(|(mask, x)| {
                format!(
                    "{}->{}",
                    braces(&element_names(p, &f.subset(mask))),
                    p.name(x)
                )
            })
            .collect();
        s.push_str(&format!("  J: {}", entries.join(" ")));
    }
    s
}

fn mode_for(p: &Interval, poset: bool) -> ForestMode {
    if poset {
        ForestMode::Poset
    } else {
        ForestMode::for_interval(p)
    }
}

fn mode_name(mode: ForestMode) -> &'static str {
    match mode {
        ForestMode::Lattice => "lattice",
        ForestMode::Poset => "poset",
    }
}

pub fn run(command: Command, echo: &[String]) -> Res<Output> {
    match command {
        Command::Antipode(args) => antipode(args, echo),
        Command::Mobius(args) => {
            let (p, d) = load(&args.input)?;
            let mut chains = 0usize;
            p.for_each_chain(|_| chains += 1);
            let mu = evaluate_mobius(&p);
            Ok(report(
                echo,
                d,
                json!({"mobius": mu, "chains": chains}),
                mu.to_string(),
            ))
        }
        Command::Forests(args) => forests(args, echo),
        Command::Center(args) => {
            let (p, d) = load(&args.input)?;
            let z = element_names(&p, &center(&p));
            let primes = element_names(&p, &prime_center(&p));
            let mut result = json!({
                "center": z,
                "prime_center": primes,
                "decomposable": primes.len() > 1,
            });
            if p.is_lattice() {
                let via = element_names(&p, &center_via_distributivity(&p)?);
                if via != z {
                    return Err(CliError::Invariant(format!(
                        "center {z:?} differs from the distributivity center {via:?}"
                    )));
                }
            }
            result["lattice"] = json!(p.is_lattice());
            let text = format!("center: {}\nprime center: {}", braces(&z), braces(&primes));
            Ok(report(echo, d, result, text))
        }
        Command::Factor(args) => {
            let (p, d) = load(&args.input)?;
            let reg = ClassRegistry::new();
            let f = factor_indecomposable(&p, &reg);
            let whole = hopf_core::hopf::class_monomial(&p, &reg);
            let names = Names::new(&reg);
            let mut factors: Vec<(String, String)> = f
                .factors
                .iter()
                .map(|&(c, a)| (names.name(c), p.name(a).to_string()))
                .collect();
            factors.sort_by(|a, b| (a.0.len(), &a.0, &a.1).cmp(&(b.0.len(), &b.0, &b.1)));
            let monomial = names.format_monomial(&whole);
            let result = json!({
                "monomial": monomial,
                "complete": f.complete,
                "factors": factors
                    .iter()
                    .map(|(c, a)| json!({"class": c, "element": a}))
                    .collect::<Vec<_>>(),
            });
            Ok(report(echo, d, result, monomial))
        }
        Command::Check(CheckCommand::Sui(args)) => sui(&args.input, echo),
        Command::Check(CheckCommand::Cancellation { input, trace }) => {
            cancellation(&input.input, trace, echo)
        }
        Command::Check(CheckCommand::Family { inputs }) => family(&inputs, echo),
        Command::Family(f) => build(f).map(|p| Output::Interval(interval_to_json(&p))),
    }
}

fn antipode(args: AntipodeArgs, echo: &[String]) -> Res<Output> {
    let (p, d) = load(&args.input.input)?;
    let reg = ClassRegistry::new();
    let inc = Incidence::new(&p, &reg);
    let mode = mode_for(&p, args.poset);
    let want_chains = args.engine != Engine::Forests;
    let want_forests = args.engine != Engine::Chains;

    let chains = want_chains.then(|| inc.antipode_chains());
    let (forests, terms) = if want_forests {
        (
            Some(antipode_forests_with(&inc, mode)?),
            Some(forest_terms(&inc, mode)?),
        )
    } else {
        (None, None)
    };
    let chain_trace = (want_chains && args.trace)
        .then(|| {
            p.enumerate_chains()
                .into_iter()
                .map(|c| inc.omega(&c).map(|m| (c, m)))
                .collect::<hopf_core::Result<Vec<_>>>()
        })
        .transpose()?;
    let names = Names::new(&reg);

    if let (Some(a), Some(b)) = (&chains, &forests) {
        if a != b {
            return Err(CliError::Invariant(format!(
                "chain engine gives {} but forest engine gives {}",
                names.format_element(a),
                names.format_element(b)
            )));
        }
    }
    let value = chains
        .as_ref()
        .or(forests.as_ref())
        .expect("some engine ran");
    let text = names.format_element(value);
    let engine = match args.engine {
        Engine::Chains => "chains",
        Engine::Forests => "forests",
        Engine::Both => "both",
    };
    let mut result = json!({
        "engine": engine,
        "antipode": text,
        "terms": names.terms_json(value),
        "classes": names.classes_json(),
    });
    if want_chains {
        let mut count = 0usize;
        p.for_each_chain(|_| count += 1);
        result["chain_terms"] = json!(count);
    }
    if let Some(terms) = &terms {
        result["forest_mode"] = json!(mode_name(mode));
        result["forest_terms"] = json!(terms.len());
    }
    if args.engine == Engine::Both {
        result["engines_agree"] = json!(true);
    }
    if args.trace {
        let mut trace = json!({});
        if let Some(chains) = &chain_trace {
            trace["chains"] = chains
                .iter()
                .map(|(c, m)| {
                    json!({
                        "chain": element_names(&p, &c.elements),
                        "sign": if c.length() % 2 == 0 { 1 } else { -1 },
                        "omega": names.format_monomial(m),
                    })
                })
                .collect();
        }
        if let Some(terms) = &terms {
            trace["forests"] = terms
                .iter()
                .map(|t| {
                    let mut v = forest_json(&p, &t.forest);
                    v["sign"] = json!(t.sign);
                    v["theta"] = json!(names.format_monomial(&t.theta));
                    v
                })
                .collect();
        }
        result["trace"] = trace;
    }
    if let Some(path) = &args.registry {
        let dump = serde_json::to_string_pretty(&json!({"classes": names.classes_json()}))
            .expect("serializable");
        std::fs::write(path, dump + "\n").map_err(|e| CliError::Input {
            kind: "io".into(),
            message: format!("{}: {e}", path.display()),
        })?;
    }
    Ok(report(echo, d, result, text))
}

fn forests(args: ForestArgs, echo: &[String]) -> Res<Output> {
    let (p, d) = load(&args.input.input)?;
    let reg = ClassRegistry::new();
    let inc = Incidence::new(&p, &reg);
    let mode = mode_for(&p, args.poset);
    let all = enumerate_forests(&inc, mode)?;
    let result = json!({
        "mode": mode_name(mode),
        "count": all.len(),
        "forests": all.iter().map(|f| forest_json(&p, f)).collect::<Vec<_>>(),
    });
    let text = all
        .iter()
        .map(|f| forest_text(&p, f))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(report(echo, d, result, text))
}

fn sui(path: &Path, echo: &[String]) -> Res<Output> {
    let (p, d) = load(path)?;
    let reg = ClassRegistry::new();
    let inc = Incidence::new(&p, &reg);
    let sui = is_sui(&inc)?;
    if is_sui_via_lower_intervals(&inc)? != sui {
        return Err(CliError::Invariant(
            "subinterval and lower-interval s.u.i. checks disagree".into(),
        ));
    }
    let witness = sui_witness(&inc).map(
        |w| json!({"lower": p.name(w.lower), "upper": p.name(w.upper), "split": p.name(w.split)}),
    );
    let result = json!({
        "upper_indecomposable": is_upper_indecomposable(&inc)?,
        "sui": sui,
        "witness": witness,
    });
    Ok(report(echo, d, result, format!("s.u.i.: {sui}")))
}

fn cancellation(path: &Path, trace: bool, echo: &[String]) -> Res<Output> {
    let (p, d) = load(path)?;
    let reg = ClassRegistry::new();
    let inc = Incidence::new(&p, &reg);
    let mode = ForestMode::for_interval(&p);
    let report_ = cancellation_report(&inc, mode)?;
    let indecomposable = inc.whole().degree() == 1;
    let sui = indecomposable.then(|| is_sui(&inc)).transpose()?;
    let free = report_.is_cancellation_free();
    if sui.is_some_and(|s| s != free) {
        return Err(CliError::Invariant(format!(
            "cancellation-free is {free} but s.u.i. is {}",
            !free
        )));
    }
    let names = Names::new(&reg);
    let mut pairs = Vec::new();
    let mut lines = vec![format!("cancellation-free: {free}")];
    for (f, g) in report_.canceling_pairs() {
        let (m, _) = report_
            .canceling_groups()
            .find(|(_, members)| members.iter().any(|(x, _)| x == f))
            .expect("pair comes from a group");
        let theta = names.format_monomial(m);
        lines.push(format!(
            "{} ~ {}: {theta}",
            braces(&f.names(&p)),
            braces(&g.names(&p))
        ));
        pairs.push(json!({"theta": theta, "forests": [forest_json(&p, f), forest_json(&p, g)]}));
    }
    let mut result = json!({
        "mode": mode_name(mode),
        "forests": report_.forest_count(),
        "cancellation_free": free,
        "indecomposable": indecomposable,
        "sui": sui,
        "canceling_pairs": pairs,
    });
    if trace {
        let mut groups: Vec<(hopf_core::Monomial, Value)> = report_
            .groups
            .iter()
            .map(|(m, members)| {
                let members: Vec<Value> = members
                    .iter()
                    .map(|(f, s)| {
                        let mut v = forest_json(&p, f);
                        v["sign"] = json!(s);
                        v
                    })
                    .collect();
                (
                    names.monomial(m),
                    json!({"theta": names.format_monomial(m), "members": members}),
                )
            })
            .collect();
        groups.sort_by(|a, b| a.0.cmp(&b.0));
        result["groups"] = groups.into_iter().map(|g| g.1).collect();
    }
    Ok(report(echo, d, result, lines.join("\n")))
}

fn family(paths: &[PathBuf], echo: &[String]) -> Res<Output> {
    let inputs = paths.iter().map(|p| read(p)).collect::<Res<Vec<_>>>()?;
    let generators = inputs
        .iter()
        .map(|i| Ok(interval_from_json(text_of(i)?)?))
        .collect::<Res<Vec<_>>>()?;
    let reg = ClassRegistry::new();
    let r = family_upper_indecomposable(&generators, &reg);
    let names = Names::new(&reg);
    let witness = r.witness.map(|w| {
        let p = &generators[w.generator];
        json!({
            "input": paths[w.generator].display().to_string(),
            "class": names.name(w.class),
            "lower": p.name(w.sui.lower),
            "upper": p.name(w.sui.upper),
            "split": p.name(w.sui.split),
        })
    });
    let ok = r.upper_indecomposable();
    let result = json!({
        "upper_indecomposable": ok,
        "generators": generators.len(),
        "classes_checked": r.classes_checked,
        "witness": witness,
        "scope": "indecomposable subintervals of the given generators only",
    });
    let text = format!(
        "upper-indecomposable: {ok} ({} indecomposable classes checked)",
        r.classes_checked
    );
    let refs: Vec<&Input> = inputs.iter().collect();
    Ok(report(echo, digest(&refs), result, text))
}

fn size_limit(msg: String) -> CliError {
    HopfError::SizeLimit(msg).into()
}

fn build(family: FamilyCommand) -> Res<Interval> {
    Ok(match family {
        FamilyCommand::Partition { n } => partition_lattice(n)?,
        FamilyCommand::Colored { counts, top_color } => {
            colored_partition_poset(&counts, top_color)?
        }
        FamilyCommand::Figure { which } => figure_lattice(which)?,
        FamilyCommand::Ideals(args) => {
            let input = read(&args.input)?;
            let q = poset_from_json(text_of(&input)?)?;
            if q.len() > MAX_IDEAL_POSET {
                return Err(size_limit(format!(
                    "ideal lattices need at most {MAX_IDEAL_POSET} poset elements, got {}",
                    q.len()
                )));
            }
            distributive_lattice_of_ideals(&q)
        }
        FamilyCommand::Boolean { n } => {
            if n > MAX_BOOLEAN_RANK {
                return Err(size_limit(format!(
                    "Boolean lattices need n <= {MAX_BOOLEAN_RANK}, got {n}"
                )));
            }
            boolean_lattice(n)
        }
        FamilyCommand::Chain { n } => {
            if n > MAX_CHAIN_LENGTH {
                return Err(size_limit(format!(
                    "chains need n <= {MAX_CHAIN_LENGTH}, got {n}"
                )));
            }
            chain_lattice(n)
        }
        FamilyCommand::Random {
            seed,
            max_size,
            kind,
        } => match kind {
            RandomKind::Any => random_interval(seed, max_size)?,
            RandomKind::Lattice => random_lattice(seed, max_size)?,
            RandomKind::NonLattice => random_non_lattice(seed, max_size)?,
        },
    })
}
