//! Seeded fuzzing campaign over random polymatroidal ideals.
//!
//! Each instance gets its shift ideals from an admissible order, cross-checks
//! them against the distance route, and tests the open conjectures: every
//! `HS_j` polymatroidal (bbh), the socle polymatroidal (chl), and the socle
//! of a transversal ideal equal to its spanning-tree candidates
//! (transversal). A candidate counterexample is recomputed by the oracle
//! before it is flagged; when the oracle disagrees it is reported as a route
//! disagreement instead.

use std::collections::BTreeSet;
use std::io::Write;
use std::str::FromStr;

use polyshift::socle::{socle_on_support, transversal_sets};
use polyshift::{
    betti_table, certify_lex, find_admissible_order, hs1_distance, hs_distance, intersection_graph, is_matroidal,
    is_polymatroidal, random_polymatroidal, socle_report, spanning_tree_socle, BettiTable, Budget, Error, Monomial,
    MonomialIdeal, OrderSearch, QuotientCertificate, SearchBudget, VariableOrder,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliError;
use crate::print_spec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conjecture {
    Bbh,
    Chl,
    TransversalSocleQuestion,
}

impl Conjecture {
    pub const ALL: [Conjecture; 3] = [Conjecture::Bbh, Conjecture::Chl, Conjecture::TransversalSocleQuestion];
}

impl FromStr for Conjecture {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "bbh" => Ok(Conjecture::Bbh),
            "chl" => Ok(Conjecture::Chl),
            "transversal" | "transversal_socle_question" => Ok(Conjecture::TransversalSocleQuestion),
            other => Err(format!("unknown conjecture '{other}' (bbh, chl, transversal)")),
        }
    }
}

/// Parses a comma-separated conjecture list.
pub fn parse_conjectures(s: &str) -> Result<BTreeSet<Conjecture>, String> {
    s.split(',').filter(|p| !p.trim().is_empty()).map(str::parse).collect()
}

/// Parses `n=5,d=4,gens=120`. Missing keys keep their defaults.
pub fn parse_budget(s: &str) -> Result<Budget, String> {
    let mut b = Budget::default();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| format!("budget entry '{part}' is not key=value"))?;
        let v: usize = v
            .trim()
            .parse()
            .map_err(|_| format!("budget value '{v}' is not a positive integer"))?;
        match k.trim() {
            "n" | "n_max" => b.n_max = v,
            "d" | "degree" | "degree_max" => b.degree_max = v as u32,
            "gens" | "g" | "gens_max" => b.gens_max = v,
            other => return Err(format!("unknown budget key '{other}' (n, d, gens)")),
        }
    }
    b.validate().map_err(|e| e.to_string())?;
    Ok(b)
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub seed: u64,
    pub count: usize,
    pub budget: Budget,
    pub conjectures: BTreeSet<Conjecture>,
    /// Run the oracle on every instance, not only on flag candidates.
    pub oracle_every: bool,
}

impl CampaignConfig {
    pub fn new(seed: u64, count: usize) -> Self {
        CampaignConfig {
            seed,
            count,
            budget: Budget::default(),
            conjectures: Conjecture::ALL.into_iter().collect(),
            oracle_every: false,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.count == 0 {
            return Err(CliError::Usage("instance count must be positive".into()));
        }
        self.budget.validate()?;
        Ok(())
    }
}

/// `HS_{j+1}` against `HS_1(HS_j)` and its part with support above `j + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationRecord {
    pub j: usize,
    pub filtered_equal: bool,
    pub unfiltered_equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransversalRecord {
    pub components: usize,
    pub candidates: Option<Vec<String>>,
    pub contained: Option<bool>,
    pub equal: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub kind: &'static str,
    pub index: usize,
    pub seed: u64,
    pub spec: Option<String>,
    pub skipped: Option<String>,
    pub n: usize,
    pub generators: usize,
    pub matroidal: bool,
    pub order: Option<String>,
    pub pd: Option<usize>,
    pub hs_sizes: Vec<usize>,
    pub oracle_checked: bool,
    pub bbh_checked: Vec<usize>,
    pub bbh_violations: Vec<usize>,
    pub socle: Option<Vec<String>>,
    pub chl_polymatroidal: Option<bool>,
    pub transversal: Option<TransversalRecord>,
    pub relation: Vec<RelationRecord>,
    pub flags: Vec<String>,
    pub disagreements: Vec<String>,
}

impl InstanceRecord {
    fn new(index: usize, seed: u64) -> Self {
        InstanceRecord {
            kind: "instance",
            index,
            seed,
            spec: None,
            skipped: None,
            n: 0,
            generators: 0,
            matroidal: false,
            order: None,
            pd: None,
            hs_sizes: Vec::new(),
            oracle_checked: false,
            bbh_checked: Vec::new(),
            bbh_violations: Vec::new(),
            socle: None,
            chl_polymatroidal: None,
            transversal: None,
            relation: Vec::new(),
            flags: Vec::new(),
            disagreements: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CampaignSummary {
    pub kind: &'static str,
    pub seed: u64,
    pub instances: usize,
    pub generated: usize,
    pub skipped: usize,
    pub matroidal: usize,
    pub max_pd: usize,
    pub oracle_checked: usize,
    pub bbh_checked: usize,
    pub bbh_flags: usize,
    pub chl_checked: usize,
    pub chl_flags: usize,
    pub transversal_checked: usize,
    pub transversal_unequal: usize,
    pub relation_checked: usize,
    pub relation_filtered_equal: usize,
    pub relation_unfiltered_equal: usize,
    pub disagreements: usize,
    pub flagged: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CampaignReport {
    pub records: Vec<InstanceRecord>,
    pub summary: CampaignSummary,
}

impl CampaignReport {
    /// One JSON object per line: the instances in index order, then the
    /// summary.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<(), CliError> {
        for r in &self.records {
            serde_json::to_writer(&mut out, r).map_err(std::io::Error::from)?;
            out.write_all(b"\n")?;
        }
        serde_json::to_writer(&mut out, &self.summary).map_err(std::io::Error::from)?;
        out.write_all(b"\n")?;
        Ok(())
    }

    pub fn flagged(&self) -> impl Iterator<Item = &InstanceRecord> {
        self.records
            .iter()
            .filter(|r| !r.flags.is_empty() || !r.disagreements.is_empty())
    }
}

/// Per-instance seed, from SplitMix64.
pub fn instance_seed(seed: u64, index: usize) -> u64 {
    let mut z = seed.wrapping_add((index as u64).wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn strings(gens: &[Monomial]) -> Vec<String> {
    gens.iter().map(|g| g.to_string()).collect()
}

fn certificate(ideal: &MonomialIdeal) -> Result<Option<QuotientCertificate>, Error> {
    if let Some(c) = certify_lex(ideal, &VariableOrder::identity(ideal.n()))?.into_certificate() {
        return Ok(Some(c));
    }
    Ok(match find_admissible_order(ideal, SearchBudget::default())? {
        OrderSearch::Found(c) => Some(c),
        _ => None,
    })
}

struct Oracle<'a> {
    ideal: &'a MonomialIdeal,
    table: Option<Result<BettiTable, Error>>,
}

impl Oracle<'_> {
    fn table(&mut self) -> Result<&BettiTable, Error> {
        let ideal = self.ideal;
        self.table
            .get_or_insert_with(|| betti_table(ideal))
            .as_ref()
            .map_err(Clone::clone)
    }
}

pub fn run_instance(config: &CampaignConfig, index: usize) -> InstanceRecord {
    let seed = instance_seed(config.seed, index);
    let mut rec = InstanceRecord::new(index, seed);
    let (spec, ideal) = match random_polymatroidal(seed, config.budget) {
        Ok(x) => x,
        Err(e) => {
            rec.skipped = Some(e.to_string());
            return rec;
        }
    };
    rec.spec = Some(print_spec(&spec));
    rec.n = ideal.n();
    rec.generators = ideal.len();
    rec.matroidal = is_matroidal(&ideal);
    if let Err(e) = check_instance(config, &ideal, &mut rec) {
        rec.disagreements.push(format!("error: {e}"));
    }
    if config.conjectures.contains(&Conjecture::TransversalSocleQuestion) {
        if let Err(e) = check_transversal(&spec, &ideal, &mut rec) {
            rec.disagreements.push(format!("transversal: {e}"));
        }
    }
    rec
}

fn check_instance(config: &CampaignConfig, ideal: &MonomialIdeal, rec: &mut InstanceRecord) -> Result<(), Error> {
    let n = ideal.n();
    let Some(cert) = certificate(ideal)? else {
        rec.disagreements
            .push("polymatroidal ideal without an admissible order".into());
        return Ok(());
    };
    rec.order = cert.var_order().map(|vo| vo.to_string());
    let hs: Vec<MonomialIdeal> = (0..=n).map(|j| cert.hs(j)).collect();
    rec.hs_sizes = hs.iter().map(MonomialIdeal::len).collect();
    let pd = hs.iter().rposition(|h| !h.is_zero());
    rec.pd = pd;
    for (j, h) in hs.iter().enumerate() {
        if hs_distance(&cert, j)? != *h {
            rec.disagreements
                .push(format!("distance route differs from certificate at HS_{j}"));
        }
    }
    let mut oracle = Oracle { ideal, table: None };
    if config.oracle_every {
        let table = oracle.table()?;
        rec.oracle_checked = true;
        for (j, h) in hs.iter().enumerate() {
            if table.hs(j) != *h {
                rec.disagreements
                    .push(format!("oracle differs from certificate at HS_{j}"));
            }
        }
    }
    let pd = pd.unwrap_or(0);

    if config.conjectures.contains(&Conjecture::Bbh) {
        for (j, h) in hs.iter().enumerate().take(pd + 1).skip(1) {
            rec.bbh_checked.push(j);
            if is_polymatroidal(h) {
                continue;
            }
            let table = oracle.table()?;
            if table.hs(j) == *h {
                rec.bbh_violations.push(j);
                rec.flags
                    .push(format!("bbh: HS_{j} is not polymatroidal (oracle confirms the ideal)"));
            } else {
                rec.disagreements
                    .push(format!("bbh candidate at HS_{j} not confirmed by the oracle"));
            }
        }
    }

    for j in 1..pd {
        let h1 = hs1_distance(&hs[j])?;
        let filtered = h1.support_filter(j + 1);
        if !hs[j + 1].is_subideal_of(&filtered) {
            rec.disagreements
                .push(format!("HS_{} is not contained in HS_1(HS_{j})_>{}", j + 1, j + 1));
        }
        let unfiltered_equal = h1 == hs[j + 1];
        if rec.matroidal && !unfiltered_equal {
            rec.disagreements
                .push(format!("matroidal instance with HS_{} != HS_1(HS_{j})", j + 1));
        }
        rec.relation.push(RelationRecord {
            j,
            filtered_equal: filtered == hs[j + 1],
            unfiltered_equal,
        });
    }

    if config.conjectures.contains(&Conjecture::Chl) && !ideal.is_unit() {
        let report = socle_report(ideal)?;
        rec.socle = Some(strings(report.socle.gens()));
        if report.max_pd {
            let poly = report.socle.is_unit() || is_polymatroidal(&report.socle);
            rec.chl_polymatroidal = Some(poly);
            if !poly {
                let (restricted, vars) = ideal.restrict_to_support();
                let top = betti_table(&restricted)?.hs(restricted.n() - 1);
                let all = Monomial::all_vars(restricted.n());
                let soc_restricted: Vec<Monomial> = report.socle.gens().iter().map(|g| g.restrict(&vars)).collect();
                let expected = MonomialIdeal::new(restricted.n(), soc_restricted)?.times_monomial(&all)?;
                if top == expected {
                    rec.flags
                        .push("chl: socle is not polymatroidal (oracle top shift confirms it)".into());
                } else {
                    rec.disagreements
                        .push("chl candidate not confirmed by the oracle top shift".into());
                }
            }
        }
    }
    Ok(())
}

fn check_transversal(
    spec: &polyshift::FamilySpec,
    ideal: &MonomialIdeal,
    rec: &mut InstanceRecord,
) -> Result<(), Error> {
    if transversal_sets(spec).is_none() {
        return Ok(());
    }
    let graph = intersection_graph(spec)?;
    let mut t = TransversalRecord {
        components: graph.component_count(),
        candidates: None,
        contained: None,
        equal: None,
    };
    if graph.is_connected() {
        match spanning_tree_socle(spec) {
            Ok(cand) => {
                let soc = socle_on_support(ideal)?;
                let contained = cand.is_subideal_of(&soc);
                if !contained {
                    rec.disagreements
                        .push("spanning-tree candidates are not in the socle".into());
                }
                if cand != soc {
                    rec.flags
                        .push("transversal: spanning-tree candidates differ from the socle".into());
                }
                t.candidates = Some(strings(cand.gens()));
                t.contained = Some(contained);
                t.equal = Some(cand == soc);
            }
            Err(Error::ResourceCap { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    rec.transversal = Some(t);
    Ok(())
}

pub fn summarize(config: &CampaignConfig, records: &[InstanceRecord]) -> CampaignSummary {
    let mut s = CampaignSummary {
        kind: "summary",
        seed: config.seed,
        instances: records.len(),
        ..Default::default()
    };
    for r in records {
        if r.skipped.is_some() {
            s.skipped += 1;
            continue;
        }
        s.generated += 1;
        s.matroidal += r.matroidal as usize;
        s.max_pd += (r.socle.as_ref().is_some_and(|g| !g.is_empty())) as usize;
        s.oracle_checked += r.oracle_checked as usize;
        s.bbh_checked += r.bbh_checked.len();
        s.bbh_flags += r.bbh_violations.len();
        if let Some(p) = r.chl_polymatroidal {
            s.chl_checked += 1;
            s.chl_flags += (!p) as usize;
        }
        if let Some(t) = &r.transversal {
            if let Some(eq) = t.equal {
                s.transversal_checked += 1;
                s.transversal_unequal += (!eq) as usize;
            }
        }
        s.relation_checked += r.relation.len();
        s.relation_filtered_equal += r.relation.iter().filter(|x| x.filtered_equal).count();
        s.relation_unfiltered_equal += r.relation.iter().filter(|x| x.unfiltered_equal).count();
        s.disagreements += r.disagreements.len();
        if !r.flags.is_empty() || !r.disagreements.is_empty() {
            s.flagged.push(r.index);
        }
    }
    s
}

/// Runs every instance on the rayon pool. Records come back in index order
/// whatever the thread count.
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignReport, CliError> {
    config.validate()?;
    let records: Vec<InstanceRecord> = (0..config.count)
        .into_par_iter()
        .map(|i| run_instance(config, i))
        .collect();
    let summary = summarize(config, &records);
    Ok(CampaignReport { records, summary })
}
