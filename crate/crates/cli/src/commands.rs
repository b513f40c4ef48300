use commdeg::bounds::report::{csv_row, BoundKind, CSV_HEADER};
use commdeg::bounds::{check_group, check_pair, shipped_specs, verify_catalog, BoundReport, Violation};
use commdeg::catalog::{CatalogEntry, FAMILIES, SHIPPED_CATALOG};
use commdeg::isoclinism::{
    commutation_map, find_pair_isoclinism, verify_invariance, verify_pair_isoclinism, CommutationMap, InvarianceReport,
    IsoclinismWitness, PairDescriptor, SearchOutcome,
};
use commdeg::stats::{multi_commutator_counts, pair_profile, pr_g_class_formula, pr_g_distribution, ProfileSummary};
use commdeg::{ExactRatio, SubgroupView};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::input::{load_entry, sample, select, Caps, Source};
use crate::render::{csv, fraction, opt_fraction, table, yes_no};
use crate::{CliError, Format, GroupArgs, IsoclinicArgs, Outcome, StatsArgs, SCHEMA_VERSION};

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn schema(kind: &str) -> String {
    format!("commdeg.{kind}/{SCHEMA_VERSION}")
}

/// Exit 2 with one stderr line per violation; stdout keeps the report.
fn with_violations(stdout: String, violations: &[Violation]) -> Outcome {
    if violations.is_empty() {
        return Outcome::ok(stdout);
    }
    let mut stderr = String::new();
    for v in violations {
        stderr.push_str(&format!("violation {} [{}]: {}\n", v.pair_id, v.check, v.detail));
    }
    Outcome { code: 2, stdout, stderr }
}

fn selection(args: &GroupArgs, caps: &Caps) -> Result<(CatalogEntry, Vec<(String, SubgroupView)>), CliError> {
    let entry = load_entry(&args.source.source(), caps)?;
    let mut picked = select(&entry, &args.subgroup, caps)?;
    if let Some(k) = args.sample {
        if k == 0 {
            return Err(CliError::new("E_SELECTOR", "--sample must be positive"));
        }
        picked = sample(picked, k, args.seed);
    }
    Ok((entry, picked))
}

#[derive(Serialize)]
struct DistributionRow {
    element: u32,
    label: String,
    pr_g: ExactRatio,
}

#[derive(Serialize)]
struct StatsPair {
    pair_id: String,
    subgroup: Vec<u32>,
    profile: ProfileSummary,
    arity: u32,
    /// Probability that the commutator is trivial; `Pr(H,G)` when `arity = 2`.
    pr: ExactRatio,
    distribution: Vec<DistributionRow>,
}

#[derive(Serialize)]
struct StatsDoc<'a> {
    schema: String,
    group: &'a str,
    group_order: usize,
    pairs: &'a [StatsPair],
    violations: &'a [Violation],
}

fn stats_pair(id: String, h: &SubgroupView, arity: u32, caps: &Caps) -> Result<(StatsPair, Vec<Violation>), CliError> {
    let g = h.parent();
    let mut violations = Vec::new();
    let dist: Vec<ExactRatio> = if arity == 2 {
        let dist = pr_g_distribution(h);
        for x in g.elements() {
            let formula = pr_g_class_formula(h, x);
            if formula != dist[x as usize] {
                violations.push(Violation {
                    pair_id: id.clone(),
                    check: "pr_g_oracle_equivalence".into(),
                    detail: format!("g = {x}: brute force {} vs class formula {formula}", dist[x as usize]),
                });
            }
        }
        dist
    } else {
        let mut factors = vec![h.clone()];
        factors.extend((1..arity).map(|_| SubgroupView::whole(g)));
        let counts = multi_commutator_counts(&factors, caps.work)?;
        let total: u128 = factors.iter().map(|f| f.order() as u128).product();
        counts.iter().map(|&c| ExactRatio::new(c, total)).collect()
    };
    let distribution = dist
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(x, p)| DistributionRow { element: x as u32, label: g.label(x as u32), pr_g: p.clone() })
        .collect();
    let pair = StatsPair {
        pair_id: id,
        subgroup: h.members().to_vec(),
        profile: ProfileSummary::from(&pair_profile(h)),
        arity,
        pr: dist[0].clone(),
        distribution,
    };
    Ok((pair, violations))
}

pub fn stats(args: &StatsArgs, format: Format, caps: &Caps) -> Result<Outcome, CliError> {
    let (entry, picked) = selection(&args.group, caps)?;
    let results = picked
        .par_iter()
        .map(|(name, h)| stats_pair(format!("{}|{name}", entry.name), h, args.arity, caps))
        .collect::<Result<Vec<_>, CliError>>()?;
    let mut pairs = Vec::with_capacity(results.len());
    let mut violations = Vec::new();
    for (p, v) in results {
        pairs.push(p);
        violations.extend(v);
    }

    let stdout =
        match format {
            Format::Json => json(&StatsDoc {
                schema: schema("stats"),
                group: &entry.name,
                group_order: entry.order(),
                pairs: &pairs,
                violations: &violations,
            }),
            Format::Csv => {
                let rows: Vec<Vec<String>> = pairs
                    .iter()
                    .flat_map(|p| {
                        p.distribution.iter().map(move |d| {
                            vec![
                                p.pair_id.clone(),
                                p.profile.group_order.to_string(),
                                p.profile.subgroup_order.to_string(),
                                p.arity.to_string(),
                                d.element.to_string(),
                                d.label.clone(),
                                d.pr_g.to_string(),
                            ]
                        })
                    })
                    .collect();
                csv(&["pair_id", "group_order", "subgroup_order", "arity", "element", "label", "pr_g"], &rows)
            }
            Format::Table => {
                let mut out = format!("group {} (order {})\n", entry.name, entry.order());
                for p in &pairs {
                    let s = &p.profile;
                    out.push_str(&format!(
                        "\n{}  |H| = {}  |Z(H,G)| = {}  |K(G,H)| = {}  |[G,H]| = {}  class sizes {:?}\n",
                        p.pair_id,
                        s.subgroup_order,
                        s.relative_center_order,
                        s.commutator_set_size,
                        s.commutator_subgroup_order,
                        s.class_sizes
                    ));
                    let what = if p.arity == 2 { "Pr(H,G)".to_string() } else { format!("Pr_1 (arity {})", p.arity) };
                    out.push_str(&format!("  {what} = {}\n", fraction(&p.pr)));
                    let mut rows = vec![vec!["g".into(), "label".into(), "Pr_g".into(), "decimal".into()]];
                    rows.extend(p.distribution.iter().map(|d| {
                        vec![d.element.to_string(), d.label.clone(), d.pr_g.to_string(), d.pr_g.to_decimal(6)]
                    }));
                    out.push_str(&table(&rows));
                }
                out
            }
        };
    Ok(with_violations(stdout, &violations))
}

#[derive(Serialize)]
struct BoundsDoc<'a> {
    schema: String,
    group: &'a str,
    group_order: usize,
    reports: &'a [BoundReport],
    violations: &'a [Violation],
}

fn bounds_table(r: &BoundReport) -> String {
    let mut out = format!(
        "\n{}  |G| = {}  |H| = {}  Pr(H,G) = {}\n",
        r.pair_id,
        r.profile.group_order,
        r.profile.subgroup_order,
        fraction(&r.pr)
    );
    let mut rows = vec![vec![
        "bound".to_string(),
        "kind".into(),
        "value".into(),
        "decimal".into(),
        "attained".into(),
        "hypothesis".into(),
    ]];
    for (name, b) in &r.bounds {
        let (exact, dec) = opt_fraction(b.value.as_ref());
        let kind = match b.kind {
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
        };
        let hyp = if b.hypothesis.met { "met".to_string() } else { b.hypothesis.reason.clone().unwrap_or_default() };
        rows.push(vec![name.clone(), kind.into(), exact, dec, yes_no(b.attained), hyp]);
    }
    out.push_str(&table(&rows));
    if let Some(c) = &r.cor35 {
        out.push_str(&format!(
            "  prime-commutator conditions (i) {} (ii) {} (iii) {}\n",
            c.cond_i, c.cond_ii, c.cond_iii
        ));
    }
    out.push_str(&format!("  camina {}\n", yes_no(r.camina.camina)));
    if let Some(v) = &r.verdicts {
        for line in v.lines.iter().filter(|l| l.fired) {
            let conclusion = line.conclusion.map(|c| format!("{c:?}")).unwrap_or_default();
            out.push_str(&format!("  verdict {} [{}]: {}\n", line.rule, line.source, conclusion));
        }
    }
    out
}

pub fn bounds(args: &GroupArgs, format: Format, caps: &Caps) -> Result<Outcome, CliError> {
    let (entry, picked) = selection(args, caps)?;
    let results: Vec<(BoundReport, Vec<Violation>)> =
        picked.par_iter().map(|(name, h)| check_pair(&format!("{}|{name}", entry.name), h)).collect();
    let mut violations = check_group(&entry.name, &entry);
    let mut reports = Vec::with_capacity(results.len());
    for (r, v) in results {
        reports.push(r);
        violations.extend(v);
    }
    let stdout = match format {
        Format::Json => json(&BoundsDoc {
            schema: schema("bounds"),
            group: &entry.name,
            group_order: entry.order(),
            reports: &reports,
            violations: &violations,
        }),
        Format::Csv => csv(CSV_HEADER, &reports.iter().map(csv_row).collect::<Vec<_>>()),
        Format::Table => {
            let mut out = format!("group {} (order {})\n", entry.name, entry.order());
            for r in &reports {
                out.push_str(&bounds_table(r));
            }
            out
        }
    };
    Ok(with_violations(stdout, &violations))
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PairSide {
    pub group: String,
    pub subgroup: String,
    pub descriptor: PairDescriptor,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum IsoclinicStatus {
    Isoclinic,
    NotIsoclinic,
    BudgetExhausted,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct IsoclinicDoc {
    pub schema: String,
    pub pair1: PairSide,
    pub pair2: PairSide,
    pub status: IsoclinicStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<IsoclinismWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariance: Option<InvarianceReport>,
}

fn pair_map(spec: &str, sub: &str, caps: &Caps) -> Result<(CatalogEntry, CommutationMap), CliError> {
    let entry = load_entry(&Source::parse(spec), caps)?;
    // inside a pair, a landmark name wins over the plural selectors
    let picked = match entry.landmark(sub) {
        Some(h) => vec![(sub.to_string(), h.clone())],
        None => select(&entry, sub, caps)?,
    };
    if picked.len() != 1 {
        return Err(CliError::new(
            "E_SELECTOR",
            format!("{sub:?} selects {} subgroups; a pair needs one", picked.len()),
        ));
    }
    let map = commutation_map(&picked[0].1);
    Ok((entry, map))
}

fn read_witness(path: &std::path::Path) -> Result<IsoclinismWitness, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        let code = if e.kind() == std::io::ErrorKind::NotFound { "E_NOT_FOUND" } else { "E_IO" };
        CliError::new(code, format!("{}: {e}", path.display()))
    })?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| CliError::new("E_PARSE", format!("{}: {e}", path.display())))?;
    let inner = value.get("witness").cloned().unwrap_or(value);
    serde_json::from_value(inner)
        .map_err(|e| CliError::new("E_PARSE", format!("{}: not a witness: {e}", path.display())))
}

pub fn isoclinic(args: &IsoclinicArgs, format: Format, caps: &Caps) -> Result<Outcome, CliError> {
    let (e1, m1) = pair_map(&args.pair1, &args.sub1, caps)?;
    let (e2, m2) = pair_map(&args.pair2, &args.sub2, caps)?;
    let side = |e: &CatalogEntry, sub: &str, m: &CommutationMap| PairSide {
        group: e.name.clone(),
        subgroup: sub.to_string(),
        descriptor: m.descriptor(),
    };
    let mut doc = IsoclinicDoc {
        schema: schema("isoclinic"),
        pair1: side(&e1, &args.sub1, &m1),
        pair2: side(&e2, &args.sub2, &m2),
        status: IsoclinicStatus::NotIsoclinic,
        nodes: None,
        reason: None,
        witness: None,
        invariance: None,
    };

    let supplied = args.witness.is_some();
    let witness = match &args.witness {
        Some(path) => {
            let w = read_witness(path)?;
            if let Some(v) = verify_pair_isoclinism(&m1, &m2, &w)? {
                return Err(CliError::new("E_WITNESS", format!("{}: {v}", path.display())));
            }
            Some(w)
        }
        None => match find_pair_isoclinism(&m1, &m2, caps.quotient, caps.budget)? {
            SearchOutcome::Found { witness, nodes } => {
                doc.nodes = Some(nodes);
                Some(witness)
            }
            SearchOutcome::NotFound { reason, nodes } => {
                doc.nodes = Some(nodes);
                doc.reason = Some(reason);
                None
            }
            SearchOutcome::BudgetExhausted { nodes } => {
                doc.nodes = Some(nodes);
                doc.status = IsoclinicStatus::BudgetExhausted;
                None
            }
        },
    };

    let mut violations = Vec::new();
    if let Some(w) = witness {
        let pair_id = format!("{}|{} ~ {}|{}", e1.name, args.sub1, e2.name, args.sub2);
        match verify_invariance(&m1, &m2, &w) {
            Ok(report) => {
                for row in report.rows.iter().filter(|r| r.pr_source != r.pr_target) {
                    violations.push(Violation {
                        pair_id: pair_id.clone(),
                        check: "isoclinism_invariance".into(),
                        detail: format!(
                            "Pr_{} = {} but Pr_{} = {}",
                            row.element, row.pr_source, row.image, row.pr_target
                        ),
                    });
                }
                doc.invariance = Some(report);
            }
            Err(e) if !supplied => violations.push(Violation {
                pair_id,
                check: "isoclinism_witness".into(),
                detail: format!("search returned a rejected witness: {e}"),
            }),
            Err(e) => return Err(e.into()),
        }
        doc.status = IsoclinicStatus::Isoclinic;
        doc.witness = Some(w);
    }

    let stdout = match format {
        Format::Json => json(&doc),
        Format::Csv => {
            let rows: Vec<Vec<String>> = doc
                .invariance
                .iter()
                .flat_map(|r| &r.rows)
                .map(|r| {
                    vec![r.element.to_string(), r.image.to_string(), r.pr_source.to_string(), r.pr_target.to_string()]
                })
                .collect();
            csv(&["element", "image", "pr_source", "pr_target"], &rows)
        }
        Format::Table => isoclinic_table(&doc, &m1, &m2),
    };
    Ok(with_violations(stdout, &violations))
}

fn isoclinic_table(doc: &IsoclinicDoc, m1: &CommutationMap, m2: &CommutationMap) -> String {
    let describe = |s: &PairSide| {
        let d = &s.descriptor;
        format!(
            "({}, {}): |G| = {}  |H| = {}  |G/Z(H,G)| = {}  |[H,G]| = {}",
            s.group, s.subgroup, d.group_order, d.subgroup_order, d.quotient_order, d.commutator_order
        )
    };
    let mut out = format!("pair 1 {}\npair 2 {}\n", describe(&doc.pair1), describe(&doc.pair2));
    let status = match doc.status {
        IsoclinicStatus::Isoclinic => "isoclinic",
        IsoclinicStatus::NotIsoclinic => "not isoclinic",
        IsoclinicStatus::BudgetExhausted => "undecided: search budget exhausted",
    };
    out.push_str(&format!("status: {status}"));
    if let Some(n) = doc.nodes {
        out.push_str(&format!(" ({n} nodes)"));
    }
    out.push('\n');
    if let Some(r) = &doc.reason {
        out.push_str(&format!("reason: {r}\n"));
    }
    if let Some(w) = &doc.witness {
        out.push_str(&format!("alpha {:?}\nbeta  {:?}\n", w.alpha, w.beta));
    }
    if let Some(report) = &doc.invariance {
        let mut rows =
            vec![vec!["g".to_string(), "beta(g)".into(), "Pr_g".into(), "Pr_beta(g)".into(), "equal".into()]];
        for r in &report.rows {
            rows.push(vec![
                m1.group().label(r.element),
                m2.group().label(r.image),
                fraction(&r.pr_source),
                fraction(&r.pr_target),
                yes_no(r.pr_source == r.pr_target),
            ]);
        }
        out.push_str("invariance\n");
        out.push_str(&table(&rows));
    }
    out
}

#[derive(Serialize)]
struct IsoclinismSummary {
    pairs: usize,
    isoclinic: usize,
    skipped: usize,
    undecided: usize,
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    schema: String,
    max_order: usize,
    groups: &'a [String],
    pairs: usize,
    isoclinism: IsoclinismSummary,
    violations: &'a [Violation],
}

/// Searches every pair of whole groups whose central quotients fit the cap
/// and checks each witness found, plus that every group is self-isoclinic.
fn isoclinism_checks(entries: &[CatalogEntry], caps: &Caps) -> (IsoclinismSummary, Vec<Violation>) {
    let maps: Vec<CommutationMap> =
        entries.par_iter().map(|e| commutation_map(&SubgroupView::whole(&e.group))).collect();
    let jobs: Vec<(usize, usize)> = (0..maps.len()).flat_map(|i| (i..maps.len()).map(move |j| (i, j))).collect();
    let skipped = jobs
        .iter()
        .filter(|&&(i, j)| maps[i].quotient_order() > caps.quotient || maps[j].quotient_order() > caps.quotient)
        .count();
    let results: Vec<(bool, bool, Vec<Violation>)> = jobs
        .par_iter()
        .filter(|&&(i, j)| maps[i].quotient_order() <= caps.quotient && maps[j].quotient_order() <= caps.quotient)
        .map(|&(i, j)| {
            let id = format!("{} ~ {}", entries[i].name, entries[j].name);
            let violation =
                |check: &str, detail: String| Violation { pair_id: id.clone(), check: check.into(), detail };
            let mut out = Vec::new();
            let outcome = match find_pair_isoclinism(&maps[i], &maps[j], caps.quotient, caps.budget) {
                Ok(o) => o,
                Err(e) => return (false, false, vec![violation("isoclinism_search", e.to_string())]),
            };
            match &outcome {
                SearchOutcome::Found { witness, .. } => match verify_invariance(&maps[i], &maps[j], witness) {
                    Ok(report) if report.holds() => {}
                    Ok(_) => out.push(violation("isoclinism_invariance", "Pr_g differs across beta".into())),
                    Err(e) => out.push(violation("isoclinism_witness", e.to_string())),
                },
                SearchOutcome::NotFound { reason, .. } if i == j => {
                    out.push(violation("isoclinism_self", reason.clone()));
                }
                _ => {}
            }
            let undecided = matches!(outcome, SearchOutcome::BudgetExhausted { .. });
            (outcome.witness().is_some() && i != j, undecided, out)
        })
        .collect();
    let mut summary = IsoclinismSummary { pairs: jobs.len() - skipped, isoclinic: 0, skipped, undecided: 0 };
    let mut violations = Vec::new();
    for (iso, undecided, v) in results {
        summary.isoclinic += usize::from(iso);
        summary.undecided += usize::from(undecided);
        violations.extend(v);
    }
    (summary, violations)
}

pub fn verify_theorems(max_order: usize, format: Format, caps: &Caps) -> Result<Outcome, CliError> {
    let result = verify_catalog(&shipped_specs(), max_order, caps.build())?;
    let (iso, iso_violations) = isoclinism_checks(&result.entries, caps);
    let mut violations = result.violations.clone();
    violations.extend(iso_violations);

    let summary = format!(
        "verified {} groups, {} pairs, {} isoclinism searches ({} isoclinic pairs, {} skipped, {} undecided): {} violations\n",
        result.groups.len(),
        result.pairs,
        iso.pairs,
        iso.isoclinic,
        iso.skipped,
        iso.undecided,
        violations.len()
    );
    let stdout = match format {
        Format::Json => json(&VerifyDoc {
            schema: schema("verify"),
            max_order,
            groups: &result.groups,
            pairs: result.pairs,
            isoclinism: iso,
            violations: &violations,
        }),
        Format::Csv => csv(
            &["pair_id", "check", "detail"],
            &violations.iter().map(|v| vec![v.pair_id.clone(), v.check.clone(), v.detail.clone()]).collect::<Vec<_>>(),
        ),
        Format::Table => {
            let mut out = String::new();
            let per_group = result.entries.iter().map(|e| {
                let pairs =
                    result.reports.iter().filter(|r| r.pair_id.split('|').next() == Some(e.name.as_str())).count();
                vec![e.name.clone(), e.order().to_string(), pairs.to_string()]
            });
            let mut rows = vec![vec!["group".to_string(), "order".into(), "pairs".into()]];
            rows.extend(per_group);
            out.push_str(&table(&rows));
            out.push_str(&summary);
            out
        }
    };
    let mut outcome = with_violations(stdout, &violations);
    if format != Format::Table {
        outcome.stderr.push_str(&summary);
    }
    Ok(outcome)
}

#[derive(Serialize)]
struct FamilyRow {
    syntax: &'static str,
    description: &'static str,
    parameters: &'static str,
}

#[derive(Serialize)]
struct ShippedRow {
    spec: &'static str,
    order: u128,
}

#[derive(Serialize)]
struct CatalogDoc {
    schema: String,
    families: Vec<FamilyRow>,
    shipped: Vec<ShippedRow>,
}

pub fn catalog_list(format: Format) -> String {
    let families: Vec<FamilyRow> = FAMILIES
        .iter()
        .map(|f| FamilyRow { syntax: f.syntax, description: f.description, parameters: f.parameters })
        .collect();
    let shipped: Vec<ShippedRow> = SHIPPED_CATALOG
        .iter()
        .map(|&spec| ShippedRow {
            spec,
            order: commdeg::catalog::parse_spec(spec).expect("shipped specs parse").order(),
        })
        .collect();
    match format {
        Format::Json => json(&CatalogDoc { schema: schema("catalog"), families, shipped }),
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = families
                .iter()
                .map(|f| vec!["family".into(), f.syntax.into(), f.parameters.into(), f.description.into()])
                .collect();
            rows.extend(
                shipped.iter().map(|s| vec!["shipped".into(), s.spec.into(), s.order.to_string(), String::new()]),
            );
            csv(&["kind", "name", "order_or_parameters", "description"], &rows)
        }
        Format::Table => {
            let mut rows = vec![vec!["syntax".to_string(), "parameters".into(), "description".into()]];
            rows.extend(families.iter().map(|f| vec![f.syntax.into(), f.parameters.into(), f.description.into()]));
            let mut out = format!("families\n{}", table(&rows));
            let mut rows = vec![vec!["spec".to_string(), "order".into()]];
            rows.extend(shipped.iter().map(|s| vec![s.spec.to_string(), s.order.to_string()]));
            out.push_str(&format!("\nshipped catalog\n{}", table(&rows)));
            out
        }
    }
}
