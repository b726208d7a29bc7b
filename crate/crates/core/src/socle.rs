//! Socle ideals, maximal projective dimension and the top homological shift.
//!
//! For `I` generated in degree `d`, `soc(I)` is generated by the degree
//! `d - 1` part of `I : m`. With a linear resolution, `I` has maximal
//! projective dimension exactly when `soc(I) != 0`, and
//! `HS_{n-1}(I) = x_1 ... x_n soc(I)`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::families::{check_exchange, plp_generators, realize, ExchangeMode, FamilySpec};
use crate::ideal::{minimal_generators, MonomialIdeal};
use crate::monomial::Monomial;
use crate::oracle::betti_table;
use crate::quotients::{certify_lex, find_admissible_order, OrderSearch, QuotientCertificate, SearchBudget};

/// Degree `d - 1` generators of `I : m` for `I` generated in degree `d`.
///
/// Every such `w` has `x_i w ∈ G(I)` for all `i`, so it is found among the
/// `u / x_k` with `u ∈ G(I)`.
pub fn socle_colon(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("socle"));
    }
    if !ideal.is_equigenerated() {
        return Err(Error::NotEquigenerated);
    }
    let n = ideal.n();
    let gens = ideal.generator_set();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for u in ideal.gens() {
        for k in u.support() {
            let w = u.div_var(k).expect("k in support");
            if !seen.insert(w.clone()) {
                continue;
            }
            if (1..=n).all(|i| gens.contains(&w.mul_var(i).expect("in range"))) {
                out.push(w);
            }
        }
    }
    minimal_generators(n, out)
}

/// The socle of `I` regarded in the ring of its support variables, written
/// back in the ambient variables.
pub fn socle_on_support(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let (restricted, vars) = ideal.restrict_to_support();
    let soc = socle_colon(&restricted)?;
    lift_from_support(&soc, &vars, ideal.n())
}

fn lift_from_support(ideal: &MonomialIdeal, vars: &[usize], n: usize) -> Result<MonomialIdeal> {
    let gens = ideal.gens().iter().map(|g| {
        let mut exps = vec![0u32; n];
        for (pos, &i) in vars.iter().enumerate() {
            exps[i - 1] = g.exponents()[pos];
        }
        Monomial::new(exps)
    });
    minimal_generators(n, gens)
}

fn require_full_support(ideal: &MonomialIdeal) -> Result<()> {
    if !ideal.has_full_support() {
        return Err(Error::Precondition(format!(
            "support {:?} is not all of [{}]; restrict to the support first",
            ideal.support(),
            ideal.n()
        )));
    }
    Ok(())
}

/// `{u / x_n : x_i (u / x_n) ∈ G(I) for all i}` where `x_n` is the least
/// variable of the certificate's variable order.
pub fn socle_exchange(cert: &QuotientCertificate) -> Result<MonomialIdeal> {
    let ideal = cert.ideal();
    if !ideal.is_equigenerated() {
        return Err(Error::NotEquigenerated);
    }
    require_full_support(ideal)?;
    let vo = cert
        .var_order()
        .ok_or_else(|| Error::Precondition("certificate is not for a lex order".into()))?;
    let last = vo.last();
    let n = ideal.n();
    let gens = ideal.generator_set();
    let out = ideal
        .gens()
        .iter()
        .filter_map(|u| u.div_var(last))
        .filter(|w| (1..=n).all(|i| gens.contains(&w.mul_var(i).expect("in range"))));
    minimal_generators(n, out)
}

/// `{u / x_n : set(u) = [n] \ {n}}`, with `x_n` the least variable of the
/// certificate's order.
pub fn socle_from_sets(cert: &QuotientCertificate) -> Result<MonomialIdeal> {
    let ideal = cert.ideal();
    require_full_support(ideal)?;
    let vo = cert
        .var_order()
        .ok_or_else(|| Error::Precondition("certificate is not for a lex order".into()))?;
    let last = vo.last();
    let n = ideal.n();
    let out = cert
        .iter()
        .filter(|(_, set)| set.len() == n - 1 && !set.contains(&last))
        .filter_map(|(u, _)| u.div_var(last));
    minimal_generators(n, out)
}

/// `HS_{n-1}(I) = x_1 ... x_n soc(I)`.
pub fn top_shift(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    require_full_support(ideal)?;
    socle_colon(ideal)?.times_monomial(&Monomial::all_vars(ideal.n()))
}

/// How a linear resolution was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Linearity {
    /// An admissible order exists for an equigenerated ideal.
    Certificate,
    /// Every oracle Betti number sits in degree `d + i`.
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SocleRoute {
    Colon,
    ExchangeFormula,
    ClosedForm,
}

impl SocleRoute {
    pub fn name(self) -> &'static str {
        match self {
            SocleRoute::Colon => "colon",
            SocleRoute::ExchangeFormula => "exchange-formula",
            SocleRoute::ClosedForm => "closed-form",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleReport {
    /// Socle in the ring of the support variables, written in ambient
    /// variables.
    pub socle: MonomialIdeal,
    pub max_pd: bool,
    /// A generator `u` with `u / x_N ∈ soc(I)`, `x_N` the last support
    /// variable.
    pub witness: Option<Monomial>,
    pub route: SocleRoute,
    pub linearity: Linearity,
}

/// Establishes a linear resolution for an equigenerated ideal: linear
/// quotients first, the oracle otherwise.
pub fn certify_linearity(ideal: &MonomialIdeal) -> Result<(Linearity, Option<QuotientCertificate>)> {
    if !ideal.is_equigenerated() {
        return Err(Error::NotEquigenerated);
    }
    if let OrderSearch::Found(cert) = find_admissible_order(ideal, SearchBudget::default())? {
        return Ok((Linearity::Certificate, Some(cert)));
    }
    if has_linear_resolution_oracle(ideal)? {
        return Ok((Linearity::Oracle, None));
    }
    Err(Error::Precondition("ideal does not have a linear resolution".into()))
}

pub fn has_linear_resolution_oracle(ideal: &MonomialIdeal) -> Result<bool> {
    let Some(d) = ideal.generating_degree() else {
        return Ok(false);
    };
    let table = betti_table(ideal)?;
    Ok(table.entries().keys().all(|(i, a)| a.degree() == d + *i as u32))
}

/// Socle, maximal projective dimension and a witness, after restricting `I`
/// to its support. Refuses ideals without a linear resolution.
pub fn socle_report(ideal: &MonomialIdeal) -> Result<SocleReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("socle"));
    }
    let (restricted, vars) = ideal.restrict_to_support();
    let (linearity, cert) = certify_linearity(&restricted)?;
    let (soc, route) = match cert.as_ref().and_then(|c| c.var_order().map(|_| c)) {
        Some(c) => {
            let a = socle_exchange(c)?;
            let b = socle_colon(&restricted)?;
            if a != b {
                return Err(Error::Internal(format!("socle routes disagree: {a} vs {b}")));
            }
            (a, SocleRoute::ExchangeFormula)
        }
        None => (socle_colon(&restricted)?, SocleRoute::Colon),
    };
    let last = *vars.last().expect("nonempty");
    let socle = lift_from_support(&soc, &vars, ideal.n())?;
    let witness = socle.gens().first().map(|w| w.mul_var(last).expect("in range"));
    Ok(SocleReport {
        max_pd: !socle.is_zero() && !ideal.is_unit(),
        socle,
        witness,
        route,
        linearity,
    })
}

/// Whether `pd(I) = |supp(I)| - 1`. Linear-resolution inputs are decided by
/// the socle; anything else by the oracle.
pub fn max_pd(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("projective dimension"));
    }
    if ideal.is_unit() {
        return Ok(false);
    }
    let (restricted, _) = ideal.restrict_to_support();
    if restricted.is_equigenerated() {
        if let Ok(report) = socle_report(ideal) {
            return Ok(report.max_pd);
        }
    }
    let pd = betti_table(&restricted)?.pd().expect("nonzero ideal");
    Ok(pd + 1 == restricted.n())
}

/// The graph on factors `1..=t` of a transversal ideal, with an edge when two
/// factors share a variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionGraph {
    t: usize,
    edges: Vec<(usize, usize)>,
    sets: Vec<Vec<usize>>,
}

impl IntersectionGraph {
    pub fn from_sets(sets: &[Vec<usize>]) -> Self {
        let t = sets.len();
        let mut edges = Vec::new();
        for k in 0..t {
            for l in k + 1..t {
                if sets[k].iter().any(|i| sets[l].contains(i)) {
                    edges.push((k + 1, l + 1));
                }
            }
        }
        IntersectionGraph {
            t,
            edges,
            sets: sets.to_vec(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.t
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `A_k ∩ A_l` for 1-based factor indices.
    pub fn common(&self, k: usize, l: usize) -> Vec<usize> {
        self.sets[k - 1]
            .iter()
            .copied()
            .filter(|i| self.sets[l - 1].contains(i))
            .collect()
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.t);
        let mut count = self.t;
        for &(a, b) in &self.edges {
            if uf.union(a - 1, b - 1) {
                count -= 1;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// All spanning trees as edge lists, by deletion and contraction over the
    /// edge list.
    pub fn spanning_trees(&self, cap: usize) -> Result<Vec<Vec<(usize, usize)>>> {
        let mut out = Vec::new();
        if !self.is_connected() {
            return Ok(out);
        }
        let mut chosen = Vec::with_capacity(self.t.saturating_sub(1));
        self.trees_rec(0, UnionFind::new(self.t), self.t, &mut chosen, &mut out, cap)?;
        Ok(out)
    }

    fn trees_rec(
        &self,
        next: usize,
        uf: UnionFind,
        components: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
        cap: usize,
    ) -> Result<()> {
        if components == 1 {
            if out.len() == cap {
                return Err(Error::ResourceCap {
                    what: "spanning tree count",
                    limit: cap,
                });
            }
            out.push(chosen.clone());
            return Ok(());
        }
        if self.edges.len() - next < components - 1 {
            return Ok(());
        }
        let (a, b) = self.edges[next];
        // contract the edge
        let mut merged = uf.clone();
        if merged.union(a - 1, b - 1) {
            chosen.push((a, b));
            self.trees_rec(next + 1, merged, components - 1, chosen, out, cap)?;
            chosen.pop();
        }
        // delete it
        self.trees_rec(next + 1, uf, components, chosen, out, cap)
    }
}

#[derive(Clone, Debug)]
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

pub const SPANNING_TREE_CAP: usize = 10_000;

/// The factor sets of a spec that is a product of primes: transversal and
/// LP specs, their products and their powers.
pub fn transversal_sets(spec: &FamilySpec) -> Option<(usize, Vec<Vec<usize>>)> {
    match spec {
        FamilySpec::Transversal { n, sets } => Some((*n, sets.clone())),
        FamilySpec::Lp { n, alpha, beta } => {
            Some((*n, alpha.iter().zip(beta).map(|(&l, &r)| (l..=r).collect()).collect()))
        }
        FamilySpec::Product(fs) => {
            let n = spec.n();
            let mut sets = Vec::new();
            for f in fs {
                sets.extend(transversal_sets(f)?.1);
            }
            Some((n, sets))
        }
        FamilySpec::Power { base, k } => {
            let (n, sets) = transversal_sets(base)?;
            let mut out = Vec::new();
            for _ in 0..*k {
                out.extend(sets.iter().cloned());
            }
            Some((n, out))
        }
        _ => None,
    }
}

pub fn intersection_graph(spec: &FamilySpec) -> Result<IntersectionGraph> {
    spec.validate()?;
    let (_, sets) = transversal_sets(spec)
        .ok_or_else(|| Error::Unsupported(format!("{} is not a product of primes", spec.tag())))?;
    Ok(IntersectionGraph::from_sets(&sets))
}

/// The ideal generated by `prod_k x_{l_k}` with `l_k ∈ A_{i_k} ∩ A_{j_k}` over
/// the edges `{i_k, j_k}` of every spanning tree of the intersection graph.
pub fn spanning_tree_socle(spec: &FamilySpec) -> Result<MonomialIdeal> {
    let graph = intersection_graph(spec)?;
    let n = spec.n();
    if !graph.is_connected() {
        return Err(Error::Precondition("intersection graph is not connected".into()));
    }
    let mut gens: HashSet<Monomial> = HashSet::new();
    for tree in graph.spanning_trees(SPANNING_TREE_CAP)? {
        let mut acc = MonomialIdeal::unit(n);
        for (a, b) in tree {
            acc = acc.product(&MonomialIdeal::prime(n, &graph.common(a, b))?)?;
        }
        gens.extend(acc.gens().iter().cloned());
    }
    minimal_generators(n, gens)
}

/// Socle from a family closed form, in the ambient ring. Families without a
/// closed form return `Unsupported`.
pub fn family_socle(spec: &FamilySpec) -> Result<MonomialIdeal> {
    spec.validate()?;
    let soc = closed_form_socle(spec)?;
    #[cfg(debug_assertions)]
    {
        let realized = realize(spec)?;
        if !realized.is_zero() {
            let colon = socle_colon(&realized)?;
            debug_assert_eq!(soc, colon, "closed-form socle of {spec} disagrees with the colon");
        }
    }
    Ok(soc)
}

fn closed_form_socle(spec: &FamilySpec) -> Result<MonomialIdeal> {
    let n = spec.n();
    match spec {
        FamilySpec::Plp { a, b, alpha, beta } => plp_socle(a, b, alpha, beta),
        FamilySpec::Veronese { b, d } => {
            if *d == 0 {
                return Err(Error::Unsupported("veronese of degree 0".into()));
            }
            let alpha = [vec![0; n - 1], vec![*d]].concat();
            plp_socle(&vec![0; n], b, &alpha, &vec![*d; n])
        }
        FamilySpec::Lp { n, alpha, beta } => {
            let t = alpha.len();
            let full = alpha[0] == 1 && beta[t - 1] == *n;
            if !full || (0..t - 1).any(|i| alpha[i + 1] > beta[i]) {
                return Ok(MonomialIdeal::zero(*n));
            }
            let mut acc = MonomialIdeal::unit(*n);
            for i in 0..t - 1 {
                let p = MonomialIdeal::prime(*n, &(alpha[i + 1]..=beta[i]).collect::<Vec<_>>())?;
                acc = acc.product(&p)?;
            }
            Ok(acc)
        }
        FamilySpec::Borel { n, gens } => borel_socle(*n, gens),
        FamilySpec::Power { base, k } => match base.as_ref() {
            FamilySpec::Borel { n, gens } if gens.len() == 1 => {
                let uk = gens[0].pow(*k)?;
                borel_socle(*n, &[uk])
            }
            FamilySpec::Plp { a, b, alpha, beta } => {
                let scale = |v: &[u32]| v.iter().map(|x| x * k).collect::<Vec<_>>();
                plp_socle(&scale(a), &scale(b), &scale(alpha), &scale(beta))
            }
            FamilySpec::Lp { n, alpha, beta } => {
                let rep = |v: &[usize]| {
                    let mut out: Vec<usize> = v.iter().flat_map(|&x| std::iter::repeat_n(x, *k as usize)).collect();
                    out.sort_unstable();
                    out
                };
                closed_form_socle(&FamilySpec::Lp {
                    n: *n,
                    alpha: rep(alpha),
                    beta: rep(beta),
                })
            }
            FamilySpec::Veronese { b, d } => closed_form_socle(&FamilySpec::Power {
                base: Box::new(veronese_as_plp(b, *d)),
                k: *k,
            }),
            other => Err(Error::Unsupported(format!(
                "no closed-form socle for powers of {}",
                other.tag()
            ))),
        },
        other => Err(Error::Unsupported(format!(
            "no closed-form socle for {}; use the colon",
            other.tag()
        ))),
    }
}

/// `soc(x^a J) = x^a soc(J)` with `J` basic, and
/// `soc(I_(0,b|α,β)) = I_(0, b-1 | α-ε_n, β-1)`.
fn plp_socle(a: &[u32], b: &[u32], alpha: &[u32], beta: &[u32]) -> Result<MonomialIdeal> {
    let n = b.len();
    let d = alpha[n - 1] as i64;
    // partial sums of a
    let mut prefix = Vec::with_capacity(n);
    let mut s = 0i64;
    for &x in a {
        s += x as i64;
        prefix.push(s);
    }
    let d_star = d - s;
    let xa = Monomial::new(a.to_vec());
    if d_star < 0 {
        return Ok(MonomialIdeal::zero(n));
    }
    if d_star == 0 {
        // I = (x^a): only a single variable has a nonzero socle
        let principal = MonomialIdeal::principal(xa)?;
        return socle_colon(&principal);
    }
    // windows of the basic factor, normalized to be nondecreasing
    let mut alpha_s = vec![0i64; n];
    let mut run = 0i64;
    for k in 0..n {
        run = run.max(alpha[k] as i64 - prefix[k]);
        alpha_s[k] = run.max(0);
    }
    let mut beta_s = vec![0i64; n];
    let mut run = i64::MAX;
    for k in (0..n).rev() {
        run = run.min(beta[k] as i64 - prefix[k]);
        beta_s[k] = run;
    }
    let b_s: Vec<i64> = b.iter().zip(a).map(|(&x, &y)| x as i64 - y as i64 - 1).collect();
    alpha_s[n - 1] -= 1;
    let beta_s: Vec<i64> = beta_s.iter().map(|x| x - 1).collect();
    let zeros = vec![0i64; n];
    let gens = plp_generators(&zeros, &b_s, &alpha_s, &beta_s);
    minimal_generators(n, gens)?.times_monomial(&xa)
}

/// `soc(B(u_1, ..., u_m)) = B(u_j / x_n : max(u_j) = n)`.
fn borel_socle(n: usize, gens: &[Monomial]) -> Result<MonomialIdeal> {
    let d = gens[0].degree();
    if gens.iter().any(|g| g.degree() != d) {
        return Err(Error::Unsupported(
            "closed-form socle needs equal-degree Borel generators".into(),
        ));
    }
    let tops: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.deg_in(n) > 0)
        .map(|g| g.div_var(n).expect("x_n divides"))
        .collect();
    if tops.is_empty() {
        return Ok(MonomialIdeal::zero(n));
    }
    crate::families::borel_closure(n, &tops)
}

/// Maximal projective dimension from a family closed form, on the support
/// of the realized ideal.
pub fn family_max_pd(spec: &FamilySpec) -> Result<bool> {
    spec.validate()?;
    match spec {
        FamilySpec::Plp { a, b, alpha, beta } => {
            if a.iter().any(|&x| x != 0) {
                return Err(Error::Unsupported("max-pd inequalities need a = 0".into()));
            }
            if !realize(spec)?.has_full_support() {
                return Err(Error::Unsupported("max-pd inequalities need full support".into()));
            }
            Ok(plp_max_pd_inequalities(b, alpha, beta))
        }
        FamilySpec::Veronese { b, d } => family_max_pd(&veronese_as_plp(b, *d)),
        FamilySpec::Borel { gens, .. } => Ok(gens.iter().any(|g| !g.is_one())),
        FamilySpec::Power { base, k } => match base.as_ref() {
            FamilySpec::Borel { .. } => family_max_pd(base),
            FamilySpec::Veronese { b, d } => family_max_pd(&FamilySpec::Power {
                base: Box::new(veronese_as_plp(b, *d)),
                k: *k,
            }),
            FamilySpec::Plp { a, b, alpha, beta } => {
                let scale = |v: &[u32]| v.iter().map(|x| x * k).collect::<Vec<_>>();
                family_max_pd(&FamilySpec::Plp {
                    a: scale(a),
                    b: scale(b),
                    alpha: scale(alpha),
                    beta: scale(beta),
                })
            }
            _ => transversal_max_pd(spec),
        },
        FamilySpec::Lp { alpha, beta, .. } => Ok((0..alpha.len() - 1).all(|i| alpha[i + 1] <= beta[i])),
        FamilySpec::Transversal { .. } | FamilySpec::Product(_) => transversal_max_pd(spec),
        FamilySpec::Explicit(_) => Err(Error::Unsupported(
            "no closed-form max-pd test for explicit ideals".into(),
        )),
    }
}

/// `I_{d,b}` as `I_(0, b | (0,...,0,d), (d,...,d))`.
fn veronese_as_plp(b: &[u32], d: u32) -> FamilySpec {
    let n = b.len();
    FamilySpec::Plp {
        a: vec![0; n],
        b: b.to_vec(),
        alpha: [vec![0; n - 1], vec![d]].concat(),
        beta: vec![d; n],
    }
}

fn transversal_max_pd(spec: &FamilySpec) -> Result<bool> {
    match transversal_sets(spec) {
        Some((_, sets)) => Ok(IntersectionGraph::from_sets(&sets).is_connected()),
        None => Err(Error::Unsupported(format!("no closed-form max-pd test for {spec}"))),
    }
}

/// Nonemptiness of `I_(0, b-1 | α-ε_n, β-1)`:
/// `β_i + b_{i+1} + ... + b_j >= α_j + (j + 1 - i)` for `1 <= i <= j < n`,
/// `β_i + b_{i+1} + ... + b_n >= α_n + (n - i)` for `1 <= i <= n`, and the
/// prefix rows `b_1 + ... + b_j >= α_j + j` for `j < n`,
/// `b_1 + ... + b_n >= α_n + n - 1`, which say the bound `b - 1` leaves room
/// for the lower windows.
pub fn plp_max_pd_inequalities(b: &[u32], alpha: &[u32], beta: &[u32]) -> bool {
    let n = b.len();
    let mut prefix = 0i64;
    for j in 1..=n {
        prefix += b[j - 1] as i64;
        let rhs = if j < n {
            alpha[j - 1] as i64 + j as i64
        } else {
            alpha[n - 1] as i64 + n as i64 - 1
        };
        if prefix < rhs {
            return false;
        }
    }
    for i in 1..=n {
        let mut lhs = beta[i - 1] as i64;
        for j in i..=n {
            if j > i {
                lhs += b[j - 1] as i64;
            }
            let rhs = if j < n {
                alpha[j - 1] as i64 + (j + 1 - i) as i64
            } else {
                alpha[n - 1] as i64 + (n - i) as i64
            };
            if lhs < rhs {
                return false;
            }
        }
    }
    true
}

/// Outcome of checking that `u^k / x_N` stays in the socle of `I^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Persistence {
    /// `x_i (u^k / x_N) ∈ G(I^k)` for every support variable `x_i`.
    Witness {
        u: Monomial,
        k: u32,
        socle_element: Monomial,
    },
    Refuted {
        u: Monomial,
        k: u32,
        variable: usize,
    },
}

/// Picks `u` from the first socle generator of `I` and checks persistence
/// in `I^k`.
pub fn power_persistence(ideal: &MonomialIdeal, k: u32) -> Result<Persistence> {
    if !check_exchange(ideal, ExchangeMode::Exchange)?.holds() {
        return Err(Error::Precondition("ideal is not polymatroidal".into()));
    }
    let report = socle_report(ideal)?;
    let u = report
        .witness
        .ok_or_else(|| Error::Precondition("ideal does not have maximal projective dimension".into()))?;
    power_persistence_from(ideal, &u, k)
}

/// Checks `x_i (u^k / x_N) ∈ G(I^k)` for every support variable, where `u`
/// is a generator with `u / x_N` in the socle.
pub fn power_persistence_from(ideal: &MonomialIdeal, u: &Monomial, k: u32) -> Result<Persistence> {
    if k == 0 {
        return Err(Error::Precondition("power must be at least 1".into()));
    }
    let supp = ideal.support();
    let last = *supp
        .last()
        .ok_or_else(|| Error::Precondition("ideal has empty support".into()))?;
    if !ideal.gens().contains(u) {
        return Err(Error::Precondition(format!("{u} is not a minimal generator")));
    }
    let w = u
        .div_var(last)
        .ok_or_else(|| Error::Precondition(format!("x{last} does not divide {u}")))?;
    let socle = socle_on_support(ideal)?;
    if !socle.gens().contains(&w) {
        return Err(Error::Precondition(format!("{w} is not a socle generator")));
    }
    let power = ideal.power(k)?;
    let gens = power.generator_set();
    let candidate = u.pow(k)?.div_var(last).expect("x_N divides u^k");
    for &i in &supp {
        if !gens.contains(&candidate.mul_var(i)?) {
            return Ok(Persistence::Refuted {
                u: u.clone(),
                k,
                variable: i,
            });
        }
    }
    Ok(Persistence::Witness {
        u: u.clone(),
        k,
        socle_element: candidate,
    })
}

/// Convenience: socle via the lex certificate under the identity order.
pub fn socle_lex(ideal: &MonomialIdeal) -> Result<Option<MonomialIdeal>> {
    let vo = crate::monomial::VariableOrder::identity(ideal.n());
    match certify_lex(ideal, &vo)?.into_certificate() {
        Some(cert) => socle_exchange(&cert).map(Some),
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::borel_closure;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn eleven_spec() -> FamilySpec {
        FamilySpec::Plp {
            a: vec![0; 5],
            b: vec![1, 1, 2, 2, 1],
            alpha: vec![0, 0, 0, 1, 2],
            beta: vec![1, 1, 2, 2, 2],
        }
    }

    fn x3_x4() -> MonomialIdeal {
        MonomialIdeal::new(5, vec![m(&[0, 0, 1, 0, 0]), m(&[0, 0, 0, 1, 0])]).unwrap()
    }

    #[test]
    fn socle_of_eleven_generator_ideal() {
        let i = realize(&eleven_spec()).unwrap();
        assert_eq!(socle_colon(&i).unwrap(), x3_x4());
        let colon_part = MonomialIdeal::new(5, i.colon_maximal().unwrap().degree_part(1)).unwrap();
        assert_eq!(socle_colon(&i).unwrap(), colon_part);
        assert_eq!(socle_lex(&i).unwrap(), Some(x3_x4()));
        assert_eq!(family_socle(&eleven_spec()).unwrap(), x3_x4());
        let lp = FamilySpec::Lp {
            n: 5,
            alpha: vec![1, 3],
            beta: vec![4, 5],
        };
        assert_eq!(family_socle(&lp).unwrap(), x3_x4());
        assert_eq!(spanning_tree_socle(&lp).unwrap(), x3_x4());
        assert!(max_pd(&i).unwrap());
        assert!(family_max_pd(&eleven_spec()).unwrap());
        let top = top_shift(&i).unwrap();
        assert_eq!(top.gens(), &[m(&[1, 1, 2, 1, 1]), m(&[1, 1, 1, 2, 1])]);
    }

    #[test]
    fn maximal_ideal() {
        let mm = MonomialIdeal::maximal(4);
        assert!(socle_colon(&mm).unwrap().is_unit());
        assert_eq!(top_shift(&mm).unwrap().gens(), &[Monomial::all_vars(4)]);
        assert!(max_pd(&mm).unwrap());
    }

    #[test]
    fn disconnected_transversal() {
        let spec = FamilySpec::Transversal {
            n: 4,
            sets: vec![vec![1, 3], vec![2, 4]],
        };
        let i = realize(&spec).unwrap();
        assert!(socle_colon(&i).unwrap().is_zero());
        assert!(!max_pd(&i).unwrap());
        assert!(!family_max_pd(&spec).unwrap());
        assert_eq!(intersection_graph(&spec).unwrap().edges(), &[] as &[(usize, usize)]);
        let pair = MonomialIdeal::new(4, vec![m(&[1, 1, 0, 0]), m(&[0, 0, 1, 1])]).unwrap();
        assert!(!max_pd(&pair).unwrap());
    }

    #[test]
    fn borel_socle_examples() {
        let b = borel_closure(3, &[m(&[0, 1, 1])]).unwrap();
        let expected = MonomialIdeal::new(3, vec![m(&[1, 0, 0]), m(&[0, 1, 0])]).unwrap();
        assert_eq!(socle_lex(&b).unwrap(), Some(expected.clone()));
        let spec = FamilySpec::Borel {
            n: 3,
            gens: vec![m(&[0, 1, 1])],
        };
        assert_eq!(family_socle(&spec).unwrap(), expected);
        let low = FamilySpec::Borel {
            n: 3,
            gens: vec![m(&[0, 2, 0])],
        };
        assert!(family_socle(&low).unwrap().is_zero());
        let p = power_persistence_from(&b, &m(&[0, 1, 1]), 3).unwrap();
        assert_eq!(
            p,
            Persistence::Witness {
                u: m(&[0, 1, 1]),
                k: 3,
                socle_element: m(&[0, 3, 2])
            }
        );
    }

    #[test]
    fn persistence_on_eleven_generator_ideal() {
        let i = realize(&eleven_spec()).unwrap();
        let p = power_persistence(&i, 2).unwrap();
        assert_eq!(
            p,
            Persistence::Witness {
                u: m(&[0, 0, 1, 0, 1]),
                k: 2,
                socle_element: m(&[0, 0, 2, 0, 1])
            }
        );
        let p1 = power_persistence(&i, 1).unwrap();
        assert_eq!(
            p1,
            Persistence::Witness {
                u: m(&[0, 0, 1, 0, 1]),
                k: 1,
                socle_element: m(&[0, 0, 1, 0, 0])
            }
        );
    }

    #[test]
    fn graphs_and_trees() {
        let tri = IntersectionGraph::from_sets(&[vec![1, 2], vec![2, 3], vec![1, 3]]);
        assert_eq!(tri.spanning_trees(100).unwrap().len(), 3);
        let single = IntersectionGraph::from_sets(&[vec![1, 2]]);
        assert!(single.is_connected());
        assert_eq!(single.spanning_trees(10).unwrap(), vec![Vec::<(usize, usize)>::new()]);
        let spec = FamilySpec::Transversal {
            n: 2,
            sets: vec![vec![1, 2]],
        };
        assert!(spanning_tree_socle(&spec).unwrap().is_unit());
        let k5: Vec<Vec<usize>> = (0..5).map(|_| vec![1]).collect();
        let g = IntersectionGraph::from_sets(&k5);
        assert_eq!(g.spanning_trees(1000).unwrap().len(), 125);
        assert!(g.spanning_trees(100).is_err());
    }

    #[test]
    fn triangle_candidates_inside_socle() {
        let spec = FamilySpec::Transversal {
            n: 3,
            sets: vec![vec![1, 2], vec![2, 3], vec![1, 3]],
        };
        let cand = spanning_tree_socle(&spec).unwrap();
        let soc = socle_colon(&realize(&spec).unwrap()).unwrap();
        assert!(cand.is_subideal_of(&soc));
    }

    #[test]
    fn plp_with_shift_and_principal() {
        let spec = FamilySpec::Plp {
            a: vec![1, 0, 0],
            b: vec![2, 1, 1],
            alpha: vec![1, 1, 2],
            beta: vec![2, 2, 2],
        };
        let realized = realize(&spec).unwrap();
        assert_eq!(family_socle(&spec).unwrap(), socle_colon(&realized).unwrap());
        let principal = FamilySpec::Plp {
            a: vec![1, 1],
            b: vec![1, 1],
            alpha: vec![1, 2],
            beta: vec![1, 2],
        };
        assert!(family_socle(&principal).unwrap().is_zero());
        let one_var = FamilySpec::Plp {
            a: vec![3],
            b: vec![3],
            alpha: vec![3],
            beta: vec![3],
        };
        assert_eq!(family_socle(&one_var).unwrap().gens(), &[m(&[2])]);
    }

    #[test]
    fn squarefree_veronese_max_pd_only_in_degree_one() {
        for d in 1..=3 {
            let spec = FamilySpec::Veronese { b: vec![1; 4], d };
            assert_eq!(family_max_pd(&spec).unwrap(), d == 1);
            assert_eq!(max_pd(&realize(&spec).unwrap()).unwrap(), d == 1);
        }
    }
}
