//! Polymatroidal ideal families, exchange-property checks and a seeded
//! random generator.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::{minimal_generators, MonomialIdeal};
use crate::monomial::{Monomial, MAX_VARS};

/// A named family member. Bound vectors and variable sets use the same
/// 1-based variable convention as [`Monomial`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// `I_{b,n,d}`: all `x^c` with `|c| = d` and `c <= b`.
    Veronese {
        b: Vec<u32>,
        d: u32,
    },
    /// Smallest strongly stable ideal containing `gens`.
    Borel {
        n: usize,
        gens: Vec<Monomial>,
    },
    /// `x^c` with `a <= c <= b` and `alpha_i <= c_1 + ... + c_i <= beta_i`.
    Plp {
        a: Vec<u32>,
        b: Vec<u32>,
        alpha: Vec<u32>,
        beta: Vec<u32>,
    },
    /// `prod_i p_[alpha_i, beta_i]`.
    Lp {
        n: usize,
        alpha: Vec<usize>,
        beta: Vec<usize>,
    },
    /// `prod_i p_{A_i}`.
    Transversal {
        n: usize,
        sets: Vec<Vec<usize>>,
    },
    Product(Vec<FamilySpec>),
    Power {
        base: Box<FamilySpec>,
        k: u32,
    },
    Explicit(MonomialIdeal),
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Veronese { .. } => "veronese",
            FamilySpec::Borel { .. } => "borel",
            FamilySpec::Plp { .. } => "plp",
            FamilySpec::Lp { .. } => "lp",
            FamilySpec::Transversal { .. } => "transversal",
            FamilySpec::Product(_) => "product",
            FamilySpec::Power { .. } => "power",
            FamilySpec::Explicit(_) => "explicit",
        }
    }

    /// Number of ambient variables. Products live in the largest factor ring.
    pub fn n(&self) -> usize {
        match self {
            FamilySpec::Veronese { b, .. } => b.len(),
            FamilySpec::Borel { n, .. } | FamilySpec::Lp { n, .. } | FamilySpec::Transversal { n, .. } => *n,
            FamilySpec::Plp { b, .. } => b.len(),
            FamilySpec::Product(fs) => fs.iter().map(FamilySpec::n).max().unwrap_or(1),
            FamilySpec::Power { base, .. } => base.n(),
            FamilySpec::Explicit(i) => i.n(),
        }
    }

    /// Generating degree, when the family is equigenerated by construction.
    pub fn degree(&self) -> Option<u32> {
        match self {
            FamilySpec::Veronese { d, .. } => Some(*d),
            FamilySpec::Borel { gens, .. } => {
                let d = gens.first()?.degree();
                gens.iter().all(|g| g.degree() == d).then_some(d)
            }
            FamilySpec::Plp { alpha, .. } => alpha.last().copied(),
            FamilySpec::Lp { alpha, .. } => Some(alpha.len() as u32),
            FamilySpec::Transversal { sets, .. } => Some(sets.len() as u32),
            FamilySpec::Product(fs) => fs.iter().map(FamilySpec::degree).sum(),
            FamilySpec::Power { base, k } => base.degree().map(|d| d * k),
            FamilySpec::Explicit(i) => i.generating_degree(),
        }
    }

    /// Checks the structural invariants of this family.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        match self {
            FamilySpec::Veronese { b, .. } => check_n(b.len()),
            FamilySpec::Borel { n, gens } => {
                check_n(*n)?;
                if gens.is_empty() {
                    return bad("borel needs at least one generator".into());
                }
                for g in gens {
                    if g.n() != *n {
                        return Err(Error::DimensionMismatch { left: *n, right: g.n() });
                    }
                }
                Ok(())
            }
            FamilySpec::Plp { a, b, alpha, beta } => {
                let n = b.len();
                check_n(n)?;
                if a.len() != n || alpha.len() != n || beta.len() != n {
                    return bad(format!("plp vectors must all have length {n}"));
                }
                if a.iter().zip(b).any(|(x, y)| x > y) {
                    return bad("plp needs a <= b".into());
                }
                if alpha.iter().zip(beta).any(|(x, y)| x > y) {
                    return bad("plp needs alpha <= beta".into());
                }
                if !is_nondecreasing(alpha) || !is_nondecreasing(beta) {
                    return bad("plp alpha and beta must be nondecreasing".into());
                }
                if alpha[n - 1] != beta[n - 1] || alpha[n - 1] == 0 {
                    return bad("plp needs alpha_n = beta_n = d >= 1".into());
                }
                Ok(())
            }
            FamilySpec::Lp { n, alpha, beta } => {
                check_n(*n)?;
                if alpha.is_empty() || alpha.len() != beta.len() {
                    return bad("lp needs equally long, nonempty alpha and beta".into());
                }
                if !is_nondecreasing(alpha) || !is_nondecreasing(beta) {
                    return bad("lp alpha and beta must be nondecreasing".into());
                }
                for (&l, &r) in alpha.iter().zip(beta) {
                    if l == 0 || r > *n || l > r {
                        return bad(format!("lp interval [{l}, {r}] is not inside [1, {n}]"));
                    }
                }
                Ok(())
            }
            FamilySpec::Transversal { n, sets } => {
                check_n(*n)?;
                if sets.is_empty() {
                    return bad("transversal needs at least one set".into());
                }
                for s in sets {
                    if s.is_empty() {
                        return bad("transversal sets must be nonempty".into());
                    }
                    if let Some(&i) = s.iter().find(|&&i| i == 0 || i > *n) {
                        return Err(Error::VariableOutOfRange { index: i, n: *n });
                    }
                }
                Ok(())
            }
            FamilySpec::Product(fs) => {
                if fs.is_empty() {
                    return bad("product needs at least one factor".into());
                }
                fs.iter().try_for_each(FamilySpec::validate)
            }
            FamilySpec::Power { base, .. } => base.validate(),
            FamilySpec::Explicit(_) => Ok(()),
        }
    }

    /// Non-fatal remarks, such as a Veronese bound vector that admits no
    /// monomial of the requested degree.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_warnings(&mut out);
        out
    }

    fn collect_warnings(&self, out: &mut Vec<String>) {
        match self {
            FamilySpec::Veronese { b, d } => {
                let room: u64 = b.iter().map(|&x| x.min(*d) as u64).sum();
                if room < *d as u64 {
                    out.push(format!(
                        "veronese bound {b:?} admits no monomial of degree {d}; realizes to (0)"
                    ));
                }
            }
            FamilySpec::Product(fs) => fs.iter().for_each(|f| f.collect_warnings(out)),
            FamilySpec::Power { base, .. } => base.collect_warnings(out),
            _ => {}
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Veronese { b, d } => write!(f, "veronese(b={b:?}, d={d})"),
            FamilySpec::Borel { n, gens } => {
                let gs: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
                write!(f, "borel(n={n}, gens=[{}])", gs.join(", "))
            }
            FamilySpec::Plp { a, b, alpha, beta } => {
                write!(f, "plp(a={a:?}, b={b:?}, alpha={alpha:?}, beta={beta:?})")
            }
            FamilySpec::Lp { n, alpha, beta } => {
                write!(f, "lp(n={n}, alpha={alpha:?}, beta={beta:?})")
            }
            FamilySpec::Transversal { n, sets } => write!(f, "transversal(n={n}, sets={sets:?})"),
            FamilySpec::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|x| x.to_string()).collect();
                write!(f, "product({})", parts.join(", "))
            }
            FamilySpec::Power { base, k } => write!(f, "power({base}, k={k})"),
            FamilySpec::Explicit(i) => write!(f, "explicit({i})"),
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        return Err(Error::InvalidSpec(format!("variable count {n} outside 1..={MAX_VARS}")));
    }
    Ok(())
}

fn is_nondecreasing<T: PartialOrd>(v: &[T]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}

/// Realizes a spec as its minimally generated ideal. Empty families realize
/// to the zero ideal.
pub fn realize(spec: &FamilySpec) -> Result<MonomialIdeal> {
    spec.validate()?;
    realize_unchecked(spec)
}

fn realize_unchecked(spec: &FamilySpec) -> Result<MonomialIdeal> {
    match spec {
        FamilySpec::Veronese { b, d } => {
            let gens = bounded_monomials(b, *d);
            minimal_generators(b.len(), gens)
        }
        FamilySpec::Borel { n, gens } => {
            if let [u] = gens.as_slice() {
                principal_borel(*n, u)
            } else {
                borel_closure(*n, gens)
            }
        }
        FamilySpec::Plp { a, b, alpha, beta } => {
            let wide = |v: &[u32]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();
            let gens = plp_generators(&wide(a), &wide(b), &wide(alpha), &wide(beta));
            minimal_generators(b.len(), gens)
        }
        FamilySpec::Lp { n, alpha, beta } => {
            let mut acc = MonomialIdeal::unit(*n);
            for (&l, &r) in alpha.iter().zip(beta) {
                acc = acc.product(&interval_prime(*n, l, r)?)?;
            }
            Ok(acc)
        }
        FamilySpec::Transversal { n, sets } => {
            let mut acc = MonomialIdeal::unit(*n);
            for s in sets {
                acc = acc.product(&MonomialIdeal::prime(*n, s)?)?;
            }
            Ok(acc)
        }
        FamilySpec::Product(fs) => {
            let n = spec.n();
            let mut acc = MonomialIdeal::unit(n);
            for f in fs {
                acc = acc.product(&realize_unchecked(f)?.lift(n)?)?;
            }
            Ok(acc)
        }
        FamilySpec::Power { base, k } => realize_unchecked(base)?.power(*k),
        FamilySpec::Explicit(i) => Ok(i.clone()),
    }
}

/// `p_[l, r] = (x_l, ..., x_r)`.
pub fn interval_prime(n: usize, l: usize, r: usize) -> Result<MonomialIdeal> {
    MonomialIdeal::prime(n, &(l..=r).collect::<Vec<_>>())
}

/// All `x^c` with `|c| = d` and `c <= bound`.
pub fn bounded_monomials(bound: &[u32], d: u32) -> Vec<Monomial> {
    let n = bound.len();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    // suffix capacity, for pruning
    let mut room = vec![0u64; n + 1];
    for k in (0..n).rev() {
        room[k] = room[k + 1] + bound[k].min(d) as u64;
    }
    fn rec(k: usize, left: u32, bound: &[u32], room: &[u64], exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k == bound.len() {
            if left == 0 {
                out.push(Monomial::new(exps.clone()));
            }
            return;
        }
        if room[k] < left as u64 {
            return;
        }
        for e in (0..=bound[k].min(left)).rev() {
            exps[k] = e;
            rec(k + 1, left - e, bound, room, exps, out);
        }
        exps[k] = 0;
    }
    rec(0, d, bound, &room, &mut exps, &mut out);
    out
}

/// Generators of a pruned path lattice ideal with signed bounds: `x^c` with
/// `max(a, 0) <= c <= b` and `alpha_i <= c_1 + ... + c_i <= beta_i`. Bounds
/// that admit nothing give an empty list.
pub(crate) fn plp_generators(a: &[i64], b: &[i64], alpha: &[i64], beta: &[i64]) -> Vec<Monomial> {
    let n = b.len();
    let mut room = vec![0i64; n + 1];
    for k in (0..n).rev() {
        room[k] = room[k + 1] + b[k].max(0);
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    struct Ctx<'a> {
        a: &'a [i64],
        b: &'a [i64],
        alpha: &'a [i64],
        beta: &'a [i64],
        room: &'a [i64],
    }
    fn rec(k: usize, sum: i64, cx: &Ctx, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cx.b.len();
        if k == n {
            out.push(Monomial::new(exps.clone()));
            return;
        }
        if sum + cx.room[k] < cx.alpha[n - 1] {
            return;
        }
        let lo = cx.a[k].max(0).max(cx.alpha[k] - sum);
        let hi = cx.b[k].min(cx.beta[k] - sum);
        for e in (lo..=hi).rev() {
            exps[k] = e as u32;
            rec(k + 1, sum + e, cx, exps, out);
        }
        exps[k] = 0;
    }
    let cx = Ctx {
        a,
        b,
        alpha,
        beta,
        room: &room,
    };
    rec(0, 0, &cx, &mut exps, &mut out);
    out
}

/// Windows `(alpha, beta)` and multiplicity bound `b` of the pruned path
/// lattice ideal equal to `prod_i p_[l_i, r_i]`:
/// `alpha_k = #{i : r_i <= k}`, `beta_k = #{i : l_i <= k}`,
/// `b_k = #{i : l_i <= k <= r_i}`.
pub fn lp_to_plp(n: usize, alpha: &[usize], beta: &[usize]) -> FamilySpec {
    let mut a_w = Vec::with_capacity(n);
    let mut b_w = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for k in 1..=n {
        a_w.push(beta.iter().filter(|&&r| r <= k).count() as u32);
        b_w.push(alpha.iter().filter(|&&l| l <= k).count() as u32);
        b.push(alpha.iter().zip(beta).filter(|(&l, &r)| l <= k && k <= r).count() as u32);
    }
    FamilySpec::Plp {
        a: vec![0; n],
        b,
        alpha: a_w,
        beta: b_w,
    }
}

/// Whether `v` lies in the principal Borel ideal `B(u)`: equal degree and the
/// sorted variable indices of `v` are bounded by those of `u` position-wise.
pub fn in_principal_borel(u: &Monomial, v: &Monomial) -> bool {
    if u.n() != v.n() || u.degree() != v.degree() {
        return false;
    }
    sorted_indices(v).iter().zip(sorted_indices(u)).all(|(j, i)| *j <= i)
}

fn sorted_indices(u: &Monomial) -> Vec<usize> {
    u.exponents()
        .iter()
        .enumerate()
        .flat_map(|(k, &e)| std::iter::repeat_n(k + 1, e as usize))
        .collect()
}

fn principal_borel(n: usize, u: &Monomial) -> Result<MonomialIdeal> {
    let top = u.max_var().unwrap_or(1);
    let mut bound = vec![0u32; n];
    for b in bound.iter_mut().take(top) {
        *b = u.degree();
    }
    let gens = bounded_monomials(&bound, u.degree())
        .into_iter()
        .filter(|v| in_principal_borel(u, v));
    minimal_generators(n, gens)
}

/// `B(gens)`: closure under the moves `x_j (w / x_i)` with `j < i`, then
/// minimalized.
pub fn borel_closure(n: usize, gens: &[Monomial]) -> Result<MonomialIdeal> {
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue: VecDeque<Monomial> = VecDeque::new();
    for g in gens {
        if g.n() != n {
            return Err(Error::DimensionMismatch { left: n, right: g.n() });
        }
        if seen.insert(g.clone()) {
            queue.push_back(g.clone());
        }
    }
    while let Some(w) = queue.pop_front() {
        for i in w.support() {
            for j in 1..i {
                let moved = w.exchange(i, j).expect("i in support");
                if seen.insert(moved.clone()) {
                    queue.push_back(moved);
                }
            }
        }
    }
    minimal_generators(n, seen)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stability {
    Stable,
    /// `x_j (u / x_i)` is not in the ideal.
    Violation {
        u: Monomial,
        i: usize,
        j: usize,
    },
}

impl Stability {
    pub fn holds(&self) -> bool {
        matches!(self, Stability::Stable)
    }
}

pub fn is_strongly_stable(ideal: &MonomialIdeal) -> Result<Stability> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("strong stability"));
    }
    for u in ideal.gens() {
        for i in u.support() {
            for j in 1..i {
                if !ideal.contains(&u.exchange(i, j).expect("i in support")) {
                    return Ok(Stability::Violation { u: u.clone(), i, j });
                }
            }
        }
    }
    Ok(Stability::Stable)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExchangeMode {
    /// For `u_i > v_i` some `j` with `u_j < v_j` has `x_j (u / x_i) ∈ G(I)`.
    Exchange,
    /// As above, with `x_i (v / x_j) ∈ G(I)` as well.
    Symmetric,
    /// Every such pair `(i, j)` works.
    Strong,
}

impl ExchangeMode {
    pub fn name(self) -> &'static str {
        match self {
            ExchangeMode::Exchange => "exchange",
            ExchangeMode::Symmetric => "symmetric",
            ExchangeMode::Strong => "strong",
        }
    }
}

/// A failing instance. `j` is set only for the strong property, where a
/// specific pair fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeWitness {
    pub u: Monomial,
    pub v: Monomial,
    pub i: usize,
    pub j: Option<usize>,
}

impl fmt::Display for ExchangeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u={}, v={}, i={}", self.u, self.v, self.i)?;
        if let Some(j) = self.j {
            write!(f, ", j={j}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExchangeCheck {
    Holds,
    Fails(ExchangeWitness),
    NotEquigenerated(String),
}

impl ExchangeCheck {
    pub fn holds(&self) -> bool {
        matches!(self, ExchangeCheck::Holds)
    }

    pub fn witness(&self) -> Option<&ExchangeWitness> {
        match self {
            ExchangeCheck::Fails(w) => Some(w),
            _ => None,
        }
    }
}

/// Checks an exchange property on `G(I)`, scanning generators in stored
/// order and indices ascending; the first failure is returned.
pub fn check_exchange(ideal: &MonomialIdeal, mode: ExchangeMode) -> Result<ExchangeCheck> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("exchange properties"));
    }
    if !ideal.is_equigenerated() {
        let degs: Vec<u32> = {
            let mut d: Vec<u32> = ideal.gens().iter().map(Monomial::degree).collect();
            d.sort_unstable();
            d.dedup();
            d
        };
        return Ok(ExchangeCheck::NotEquigenerated(format!("generator degrees {degs:?}")));
    }
    let gens = ideal.generator_set();
    let n = ideal.n();
    for u in ideal.gens() {
        for v in ideal.gens() {
            if u == v {
                continue;
            }
            for i in 1..=n {
                if u.deg_in(i) <= v.deg_in(i) {
                    continue;
                }
                let js = (1..=n).filter(|&j| u.deg_in(j) < v.deg_in(j));
                match mode {
                    ExchangeMode::Exchange => {
                        let ok = js.clone().any(|j| gens.contains(&u.exchange(i, j).expect("u_i > 0")));
                        if !ok {
                            return Ok(fail(u, v, i, None));
                        }
                    }
                    ExchangeMode::Symmetric => {
                        let ok = js.clone().any(|j| {
                            gens.contains(&u.exchange(i, j).expect("u_i > 0"))
                                && gens.contains(&v.exchange(j, i).expect("v_j > 0"))
                        });
                        if !ok {
                            return Ok(fail(u, v, i, None));
                        }
                    }
                    ExchangeMode::Strong => {
                        for j in js {
                            if !gens.contains(&u.exchange(i, j).expect("u_i > 0")) {
                                return Ok(fail(u, v, i, Some(j)));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(ExchangeCheck::Holds)
}

fn fail(u: &Monomial, v: &Monomial, i: usize, j: Option<usize>) -> ExchangeCheck {
    ExchangeCheck::Fails(ExchangeWitness {
        u: u.clone(),
        v: v.clone(),
        i,
        j,
    })
}

pub fn is_polymatroidal(ideal: &MonomialIdeal) -> bool {
    !ideal.is_zero()
        && check_exchange(ideal, ExchangeMode::Exchange)
            .map(|c| c.holds())
            .unwrap_or(false)
}

pub fn is_matroidal(ideal: &MonomialIdeal) -> bool {
    ideal.is_squarefree() && is_polymatroidal(ideal)
}

/// `HS_l(I_{b,n,d}) = (I_{b,n,d+l})_{>l}`.
pub fn veronese_hs(spec: &FamilySpec, l: usize) -> Result<MonomialIdeal> {
    match spec {
        FamilySpec::Veronese { b, d } => {
            if l == 0 {
                return realize(spec);
            }
            let up = FamilySpec::Veronese {
                b: b.clone(),
                d: d + l as u32,
            };
            Ok(realize(&up)?.support_filter(l))
        }
        other => Err(Error::InvalidSpec(format!(
            "expected a veronese spec, got {}",
            other.tag()
        ))),
    }
}

/// Limits for [`random_polymatroidal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub n_max: usize,
    pub degree_max: u32,
    pub gens_max: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            n_max: 5,
            degree_max: 4,
            gens_max: 120,
        }
    }
}

impl Budget {
    pub const LIMIT: Budget = Budget {
        n_max: 6,
        degree_max: 6,
        gens_max: 200,
    };

    pub fn validate(&self) -> Result<()> {
        let l = Budget::LIMIT;
        if self.n_max == 0 || self.n_max > l.n_max {
            return Err(Error::InvalidSpec(format!("n_max must be in 1..={}", l.n_max)));
        }
        if self.degree_max == 0 || self.degree_max > l.degree_max {
            return Err(Error::InvalidSpec(format!(
                "degree_max must be in 1..={}",
                l.degree_max
            )));
        }
        if self.gens_max == 0 || self.gens_max > l.gens_max {
            return Err(Error::InvalidSpec(format!("gens_max must be in 1..={}", l.gens_max)));
        }
        Ok(())
    }
}

/// Draws attempted before [`random_polymatroidal`] gives up.
pub const RANDOM_ATTEMPTS: usize = 64;

/// Draws a random polymatroidal ideal within the budget. Deterministic in
/// `seed`.
pub fn random_polymatroidal(seed: u64, budget: Budget) -> Result<(FamilySpec, MonomialIdeal)> {
    budget.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_ATTEMPTS {
        let n = skewed(&mut rng, budget.n_max as u32) as usize;
        let spec = random_spec(&mut rng, n, budget.degree_max, 2);
        let Some(d) = spec.degree() else { continue };
        if d == 0 || d > budget.degree_max {
            continue;
        }
        if !within_size(&spec, budget.gens_max) {
            continue;
        }
        let ideal = realize(&spec)?;
        if ideal.is_zero() || ideal.len() > budget.gens_max {
            continue;
        }
        assert!(
            check_exchange(&ideal, ExchangeMode::Exchange)?.holds(),
            "random family {spec} is not polymatroidal"
        );
        return Ok((spec, ideal));
    }
    Err(Error::BudgetExhausted(RANDOM_ATTEMPTS))
}

/// Cheap upper bound on the generator count, so oversized products are
/// skipped before realizing them.
fn within_size(spec: &FamilySpec, cap: usize) -> bool {
    fn bound(spec: &FamilySpec) -> u128 {
        match spec {
            FamilySpec::Product(fs) => fs.iter().map(bound).fold(1u128, |a, b| a.saturating_mul(b)),
            FamilySpec::Power { base, k } => bound(base).saturating_pow(*k),
            FamilySpec::Transversal { sets, .. } => sets.iter().map(|s| s.len() as u128).product(),
            FamilySpec::Lp { alpha, beta, .. } => alpha.iter().zip(beta).map(|(l, r)| (r - l + 1) as u128).product(),
            _ => 0,
        }
    }
    bound(spec) <= (cap as u128).saturating_mul(64)
}

fn random_spec(rng: &mut ChaCha8Rng, n: usize, dmax: u32, depth: u32) -> FamilySpec {
    let kinds: &[&str] = if depth == 0 {
        &["veronese", "squarefree", "borel", "plp", "lp", "transversal"]
    } else {
        &[
            "veronese",
            "squarefree",
            "borel",
            "plp",
            "lp",
            "transversal",
            "product",
            "power",
        ]
    };
    match *kinds.choose(rng).expect("nonempty") {
        "veronese" => {
            let d = skewed(rng, dmax);
            let b = (0..n).map(|_| bound_entry(rng, d)).collect();
            FamilySpec::Veronese { b, d }
        }
        "squarefree" => {
            let d = rng.gen_range(1..=dmax.min(n as u32));
            FamilySpec::Veronese { b: vec![1; n], d }
        }
        "borel" => {
            let d = skewed(rng, dmax);
            let mut exps = vec![0u32; n];
            for _ in 0..d {
                exps[rng.gen_range(0..n)] += 1;
            }
            FamilySpec::Borel {
                n,
                gens: vec![Monomial::new(exps)],
            }
        }
        "plp" => random_plp(rng, n, dmax),
        "lp" => {
            let t = skewed(rng, dmax) as usize;
            let (alpha, beta) = random_intervals(rng, n, t);
            FamilySpec::Lp { n, alpha, beta }
        }
        "transversal" => {
            let t = skewed(rng, dmax) as usize;
            FamilySpec::Transversal {
                n,
                sets: (0..t).map(|_| random_subset(rng, n)).collect(),
            }
        }
        "product" => {
            let d1 = rng.gen_range(1..=dmax.max(2) - 1).max(1);
            let d2 = dmax.saturating_sub(d1).max(1);
            FamilySpec::Product(vec![
                random_spec(rng, n, d1, depth - 1),
                random_spec(rng, n, d2, depth - 1),
            ])
        }
        _ => {
            let k = rng.gen_range(2..=3u32);
            let base_max = (dmax / k).max(1);
            FamilySpec::Power {
                base: Box::new(random_spec(rng, n, base_max, 0)),
                k,
            }
        }
    }
}

/// A value in `1..=max`, drawn from the top two values most of the time.
fn skewed<R: Rng>(rng: &mut R, max: u32) -> u32 {
    if max > 1 && rng.gen_bool(0.75) {
        rng.gen_range(max - 1..=max)
    } else {
        rng.gen_range(1..=max)
    }
}

/// Mostly positive, so that bounded families are not nearly empty.
fn bound_entry<R: Rng>(rng: &mut R, d: u32) -> u32 {
    if rng.gen_bool(0.85) {
        rng.gen_range(1..=d)
    } else {
        0
    }
}

fn random_plp(rng: &mut ChaCha8Rng, n: usize, dmax: u32) -> FamilySpec {
    let d = skewed(rng, dmax);
    let mut a = vec![0u32; n];
    if rng.gen_bool(0.3) {
        a[rng.gen_range(0..n)] = 1;
    }
    let b: Vec<u32> = a
        .iter()
        .map(|&x| x + if rng.gen_bool(0.5) { d } else { bound_entry(rng, d) })
        .collect();
    // elementwise min and max of windows stay nondecreasing and leave room
    let (w1, w2) = (random_window(rng, n, d), random_window(rng, n, d));
    let (w3, w4) = (random_window(rng, n, d), random_window(rng, n, d));
    let alpha: Vec<u32> = w1.iter().zip(&w2).map(|(x, y)| *x.min(y)).collect();
    let beta: Vec<u32> = w3
        .iter()
        .zip(&w4)
        .zip(&alpha)
        .map(|((x, y), a)| *x.max(y).max(a))
        .collect();
    FamilySpec::Plp { a, b, alpha, beta }
}

/// A nondecreasing vector in `[0, d]` ending in `d`.
fn random_window<R: Rng>(rng: &mut R, n: usize, d: u32) -> Vec<u32> {
    let mut v: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=d)).collect();
    v.sort_unstable();
    v[n - 1] = d;
    v
}

/// `t` random intervals in `[1, n]`, returned as sorted left ends and sorted
/// right ends.
pub fn random_intervals<R: Rng>(rng: &mut R, n: usize, t: usize) -> (Vec<usize>, Vec<usize>) {
    let mut ls = Vec::with_capacity(t);
    let mut rs = Vec::with_capacity(t);
    for _ in 0..t {
        let l = rng.gen_range(1..=n);
        let r = rng.gen_range(l..=n);
        ls.push(l);
        rs.push(r);
    }
    ls.sort_unstable();
    rs.sort_unstable();
    (ls, rs)
}

/// A uniformly random nonempty subset of `[n]`.
pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    loop {
        let s: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.5)).collect();
        if !s.is_empty() {
            return s;
        }
    }
}

/// A random transversal family `p_{A_1} ... p_{A_t}` in `n` variables.
pub fn random_transversal(seed: u64, n: usize, t: usize) -> FamilySpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    FamilySpec::Transversal {
        n,
        sets: (0..t).map(|_| random_subset(&mut rng, n)).collect(),
    }
}
