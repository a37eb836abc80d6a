use burnside_core::catalog::{build, build_with_limit, CATALOG};
use burnside_core::invariants::{
    beta, is_b_group, is_b_group_exhaustive, m_gn, m_primed_recursive,
};
use burnside_core::lattice::enumerate_subgroups_with_limit;
use burnside_core::moebius::verify_inverse;
use burnside_core::report::{export_lattice, export_moebius, GroupInfo, InvariantReport};
use burnside_core::suite::{run_checks, CheckOutcome};
use burnside_core::topology::{
    class_poset, connectivity_report, euler_formula, is_meet_closed, nerve_summary_with_limit,
    ClassRow, TopologyOptions,
};
use burnside_core::{is_isomorphic, Analysis, Error, Rational, Result};
use serde::Serialize;
use serde_json::{json, Value};

use crate::select;

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub closure: usize,
    pub lattice: usize,
    pub chains: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Assertion {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl Assertion {
    fn new(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        Assertion {
            name: name.into(),
            holds,
            detail: detail.into(),
        }
    }
}

/// What a command produced: a JSON result, the text rendering of it and
/// the checks it made.
pub struct Outcome {
    pub group: Option<GroupInfo>,
    pub result: Value,
    pub text: Vec<String>,
    pub assertions: Vec<Assertion>,
}

impl Outcome {
    fn new(analysis: Option<&Analysis>, result: Value) -> Self {
        Outcome {
            group: analysis.map(|a| GroupInfo::of(&a.lattice)),
            result,
            text: Vec::new(),
            assertions: Vec::new(),
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

pub fn load(spec: &str, limits: Limits) -> Result<Analysis> {
    let group = build_with_limit(spec, limits.closure)?;
    Analysis::from_lattice(enumerate_subgroups_with_limit(&group, limits.lattice)?)
}

fn subgroup_ref(analysis: &Analysis, i: usize) -> Value {
    let l = &analysis.lattice;
    json!({
        "index": i,
        "order": l.order(i),
        "generators": l.generators_of(i).iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    })
}

fn describe(analysis: &Analysis, i: usize) -> String {
    let l = &analysis.lattice;
    let gens: Vec<String> = l.generators_of(i).iter().map(|g| g.to_string()).collect();
    format!("K{i} (order {}, <{}>)", l.order(i), gens.join(", "))
}

fn topology_options(homology: bool, limits: Limits) -> TopologyOptions {
    TopologyOptions {
        homology,
        chain_limit: limits.chains,
        ..TopologyOptions::default()
    }
}

fn row_line(row: &ClassRow) -> String {
    let betti = match &row.summary.betti_numbers {
        Some(b) => format!("{b:?}"),
        None => "-".into(),
    };
    format!(
        "{:>5} {:>6} {:>8} {:>5} {:>10}  {}",
        row.cyclic_order,
        row.class_size,
        row.members,
        row.summary.euler,
        row.summary.connected,
        betti
    )
}

fn row_table(rows: &[ClassRow]) -> Vec<String> {
    let mut out = vec![format!(
        "{:>5} {:>6} {:>8} {:>5} {:>10}  {}",
        "|C|", "class", "members", "chi", "connected", "betti"
    )];
    out.extend(rows.iter().map(row_line));
    out
}

pub fn lattice(analysis: &Analysis) -> Outcome {
    let export = export_lattice(&analysis.lattice);
    let mut out = Outcome::new(Some(analysis), to_value(&export));
    out.text.push(format!(
        "{}: {} subgroups, {} strict inclusions",
        export.group.name,
        export.subgroups.len(),
        export.inclusions.len()
    ));
    for s in &export.subgroups {
        let mut flags = Vec::new();
        if s.is_normal {
            flags.push("normal");
        }
        if s.is_cyclic {
            flags.push("cyclic");
        }
        out.text.push(format!(
            "K{:<4} order {:<4} {:<14} <{}>",
            s.index,
            s.order,
            flags.join(","),
            s.generators.join(", ")
        ));
    }
    out
}

pub fn moebius(analysis: &Analysis) -> Outcome {
    let l = &analysis.lattice;
    let triples = export_moebius(&analysis.mu);
    let mu_top = analysis.mu.get(l.trivial(), l.top());
    let mut out = Outcome::new(
        Some(analysis),
        json!({
            "subgroups": l.len(),
            "muTrivialTop": mu_top,
            "entries": triples.iter().map(|&(i, j, m)| json!([i, j, m])).collect::<Vec<_>>(),
        }),
    );
    out.text.push(format!("mu(1, G) = {mu_top}"));
    out.text.push(format!("{} nonzero entries", triples.len()));
    out.text.extend(
        triples
            .iter()
            .map(|(i, j, m)| format!("mu(K{i}, K{j}) = {m}")),
    );
    let check = verify_inverse(l, &analysis.mu);
    out.assertions.push(Assertion::new(
        "zeta * mu = identity",
        check.is_ok(),
        check.err().map(|e| e.to_string()).unwrap_or_default(),
    ));
    out
}

pub fn mgn(analysis: &Analysis, n: usize) -> Result<Outcome> {
    let l = &analysis.lattice;
    let value = m_gn(l, &analysis.mu, n)?;
    let mut result = json!({
        "normal": subgroup_ref(analysis, n),
        "value": value,
    });
    let mut assertions = Vec::new();
    if n != l.top() && l.has_prime_index(n) {
        let report = InvariantReport::compute(analysis, n)?;
        assertions.push(Assertion::new(
            "all routes agree",
            report.agreement,
            format!(
                "direct {}, complement {}, M' {} / recursive {}, euler {}",
                report.m_direct,
                report.m_primed,
                report.big_m_primed,
                report.big_m_primed_recursive,
                report
                    .m_via_euler
                    .map(|e| e.to_string())
                    .unwrap_or_else(|| "n/a".into())
            ),
        ));
        result["report"] = to_value(&report);
    }
    let mut out = Outcome::new(Some(analysis), result);
    out.text.push(value.to_string());
    out.assertions = assertions;
    Ok(out)
}

pub fn mgn_euler(analysis: &Analysis, n: usize, homology: bool, limits: Limits) -> Result<Outcome> {
    let l = &analysis.lattice;
    if l.is_cyclic(l.top()) {
        return Err(Error::Precondition(format!(
            "{} is cyclic; the Euler-characteristic route needs a non-cyclic group",
            l.group().name()
        )));
    }
    let rows = connectivity_report(l, n, topology_options(homology, limits))?;
    let value = euler_formula(l, &rows);
    let direct = m_gn(l, &analysis.mu, n)?;
    let mut out = Outcome::new(
        Some(analysis),
        json!({
            "normal": subgroup_ref(analysis, n),
            "rows": to_value(&rows),
            "value": value,
            "direct": direct,
        }),
    );
    out.text.extend(row_table(&rows));
    out.text.push(format!("m via euler = {value}"));
    out.text.push(format!("m direct    = {direct}"));
    out.assertions.push(Assertion::new(
        "euler route equals direct sum",
        value == direct,
        format!("{value} vs {direct}"),
    ));
    Ok(out)
}

fn identify(group: &burnside_core::FiniteGroup) -> Result<Option<String>> {
    if group.order() > burnside_core::iso::DEFAULT_ISO_LIMIT {
        return Ok(None);
    }
    for spec in CATALOG {
        let candidate = build(spec)?;
        if candidate.order() == group.order() && is_isomorphic(&candidate, group)? {
            return Ok(Some(spec.to_string()));
        }
    }
    Ok(None)
}

pub fn beta_command(analysis: &Analysis) -> Result<Outcome> {
    let l = &analysis.lattice;
    match beta(analysis) {
        Ok(b) => {
            let quotient = &b.quotient.group;
            let known = identify(quotient)?;
            let mut out = Outcome::new(
                Some(analysis),
                json!({
                    "normal": subgroup_ref(analysis, b.normal),
                    "candidates": b.candidates.iter().map(|&n| subgroup_ref(analysis, n)).collect::<Vec<_>>(),
                    "quotient": {
                        "order": quotient.order(),
                        "degree": quotient.degree(),
                        "generators": quotient.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                        "isomorphicTo": known,
                    },
                }),
            );
            out.text.push(format!(
                "beta({}) = G/{} of order {}{}",
                l.group().name(),
                describe(analysis, b.normal),
                quotient.order(),
                known
                    .map(|k| format!(", isomorphic to {k}"))
                    .unwrap_or_default()
            ));
            out.assertions.push(Assertion::new(
                "candidate quotients pairwise isomorphic",
                true,
                format!("{} candidate(s)", b.candidates.len()),
            ));
            Ok(out)
        }
        Err(Error::Consistency(msg)) => {
            let mut out = Outcome::new(Some(analysis), Value::Null);
            out.assertions.push(Assertion::new(
                "candidate quotients pairwise isomorphic",
                false,
                msg,
            ));
            Ok(out)
        }
        Err(e) => Err(e),
    }
}

pub fn bgroup(analysis: &Analysis) -> Result<Outcome> {
    let l = &analysis.lattice;
    let minimal = l.minimal_normal_subgroups();
    let mut values = Vec::new();
    for &n in &minimal {
        values.push((n, m_gn(l, &analysis.mu, n)?));
    }
    let fast = is_b_group(l, &analysis.mu)?;
    let full = is_b_group_exhaustive(l, &analysis.mu)?;
    let mut out = Outcome::new(
        Some(analysis),
        json!({
            "isBGroup": fast,
            "exhaustive": full,
            "minimalNormal": values
                .iter()
                .map(|(n, m)| json!({"normal": subgroup_ref(analysis, *n), "m": m}))
                .collect::<Vec<_>>(),
        }),
    );
    out.text.push(format!(
        "{} is {}a B-group",
        l.group().name(),
        if fast { "" } else { "not " }
    ));
    for (n, m) in &values {
        out.text
            .push(format!("  m(G, {}) = {m}", describe(analysis, *n)));
    }
    out.assertions.push(Assertion::new(
        "minimal normal test agrees with exhaustive test",
        fast == full,
        format!("minimal {fast}, exhaustive {full}"),
    ));
    Ok(out)
}

pub fn class_poset_command(
    analysis: &Analysis,
    n: usize,
    c: usize,
    homology: bool,
    limits: Limits,
) -> Result<Outcome> {
    let l = &analysis.lattice;
    let poset = class_poset(l, n, c)?;
    let summary = nerve_summary_with_limit(&poset, homology, limits.chains)?;
    let meet_closed = is_meet_closed(l, &poset);
    let mut out = Outcome::new(
        Some(analysis),
        json!({
            "normal": subgroup_ref(analysis, n),
            "cyclic": subgroup_ref(analysis, c),
            "members": poset.members.iter().map(|&x| subgroup_ref(analysis, x)).collect::<Vec<_>>(),
            "summary": to_value(&summary),
            "meetClosed": meet_closed,
        }),
    );
    out.text.push(format!("{} members", poset.len()));
    out.text.extend(
        poset
            .members
            .iter()
            .map(|&x| format!("  {}", describe(analysis, x))),
    );
    out.text
        .push(format!("chains per length: {:?}", summary.chain_counts));
    out.text.push(format!("chi = {}", summary.euler));
    out.text.push(format!("connected = {}", summary.connected));
    if let Some(b) = &summary.betti_numbers {
        out.text.push(format!("betti = {b:?}"));
    }
    out.assertions.push(Assertion::new(
        "meet-closed",
        meet_closed,
        "intersections of members above a common member are members",
    ));
    Ok(out)
}

pub fn verify_theorem13(analysis: &Analysis, normal: Option<usize>) -> Result<Outcome> {
    let l = &analysis.lattice;
    if l.is_cyclic(l.top()) {
        return Err(Error::Precondition(format!(
            "{} is cyclic; the Euler-characteristic route needs a non-cyclic group",
            l.group().name()
        )));
    }
    let pairs: Vec<usize> = match normal {
        Some(n) => {
            if n == l.top() || !l.has_prime_index(n) {
                return Err(Error::Precondition(format!(
                    "{} does not have prime index",
                    describe(analysis, n)
                )));
            }
            vec![n]
        }
        None => l
            .normal_subgroups()
            .into_iter()
            .filter(|&n| n != l.top() && l.has_prime_index(n))
            .collect(),
    };
    let order = l.group().order() as i128;
    let mut reports = Vec::new();
    let mut assertions = Vec::new();
    let mut text = Vec::new();
    for n in pairs {
        let report = InvariantReport::compute(analysis, n)?;
        let euler = report.m_via_euler.expect("non-cyclic group");
        let recursive = -Rational::new(report.big_m_primed_recursive, order);
        let holds = report.m_direct == euler && euler == recursive;
        let detail = format!(
            "direct {}, euler {euler}, -M'/|G| {recursive}",
            report.m_direct
        );
        text.push(format!("{}: {detail}", describe(analysis, n)));
        assertions.push(Assertion::new(
            format!("K{n}: three routes equal"),
            holds,
            detail,
        ));
        reports.push(report);
    }
    if reports.is_empty() {
        text.push("no normal subgroups of prime index".into());
    }
    let mut out = Outcome::new(Some(analysis), json!({ "pairs": to_value(&reports) }));
    out.text = text;
    out.assertions = assertions;
    Ok(out)
}

pub fn verify_s5(homology: bool, limits: Limits) -> Result<Outcome> {
    let analysis = load("S5", limits)?;
    let l = &analysis.lattice;
    let a5 = select::normal(&analysis, "An")?;
    let rows = connectivity_report(l, a5, topology_options(homology, limits))?;
    let direct = m_gn(l, &analysis.mu, a5)?;
    let recursive = -Rational::new(m_primed_recursive(l, a5)?, l.group().order() as i128);
    let euler = euler_formula(l, &rows);
    let mut out = Outcome::new(
        Some(&analysis),
        json!({
            "subgroups": l.len(),
            "normal": subgroup_ref(&analysis, a5),
            "rows": to_value(&rows),
            "mDirect": direct,
            "mRecursive": recursive,
            "mViaEuler": euler,
        }),
    );
    out.text.push(format!("S5 has {} subgroups", l.len()));
    out.text.extend(row_table(&rows));
    for row in &rows {
        let which = format!(
            "{} (|C| = {})",
            describe(&analysis, row.representative),
            row.cyclic_order
        );
        out.assertions.push(Assertion::new(
            format!("T_C connected for C = {which}"),
            row.summary.connected,
            format!("{} members, class of {}", row.members, row.class_size),
        ));
        out.assertions.push(Assertion::new(
            format!("chi = 1 for C = {which}"),
            row.summary.euler == 1,
            format!("chi = {}", row.summary.euler),
        ));
        if let Some(b) = &row.summary.betti_numbers {
            let acyclic = b.first() == Some(&1) && b.iter().skip(1).all(|&x| x == 0);
            out.assertions.push(Assertion::new(
                format!("acyclic for C = {which}"),
                acyclic,
                format!("betti {b:?}"),
            ));
        }
    }
    for (route, value) in [
        ("direct", direct),
        ("recursive", recursive),
        ("euler", euler),
    ] {
        out.assertions.push(Assertion::new(
            format!("m(S5, A5) = 0 by the {route} route"),
            value.is_zero(),
            value.to_string(),
        ));
    }
    let verdict = if out.assertions.iter().all(|a| a.holds) {
        "verdict: m(S5, A5) = 0, all checks hold"
    } else {
        "verdict: FAILED"
    };
    out.text.push(format!(
        "m(S5, A5): direct {direct}, recursive {recursive}, euler {euler}"
    ));
    out.text.push(verdict.into());
    Ok(out)
}

/// Runs the catalog checks, then runs them again and compares the
/// serialized outcomes byte for byte.
pub fn suite() -> Result<Outcome> {
    let mut checks = run_checks()?;
    let first = serde_json::to_string(&checks).expect("outcomes serialize");
    let second = serde_json::to_string(&run_checks()?).expect("outcomes serialize");
    let identical = first == second;
    checks.push(CheckOutcome {
        id: 7,
        name: "repeated run gives identical output".into(),
        holds: identical,
        detail: format!("{} bytes", first.len()),
    });
    let mut out = Outcome::new(None, json!({ "checks": to_value(&checks) }));
    for c in &checks {
        out.assertions.push(Assertion::new(
            format!("{}. {}", c.id, c.name),
            c.holds,
            c.detail.clone(),
        ));
    }
    Ok(out)
}
