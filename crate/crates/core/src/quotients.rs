//! Linear quotients: admissible orders, `set(u)`, and homological shift
//! ideals computed from a certificate, from distance-one chains, and the
//! Taylor upper bound.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::ideal::{minimal_generators, MonomialIdeal};
use crate::monomial::{distance, Monomial, VariableOrder};

/// An admissible order of `G(I)` together with every `set(u_k)`.
///
/// `order[k]` indexes into `ideal.gens()`; `sets[k]` is `set(u_k)` for the
/// k-th generator in that order, as ascending 1-based variable indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientCertificate {
    ideal: MonomialIdeal,
    order: Vec<usize>,
    sets: Vec<Vec<usize>>,
    var_order: Option<VariableOrder>,
}

/// Why an order is not admissible: at 1-based position `position`, the
/// contribution `witness / gcd(witness, generator)` of an earlier generator
/// to the colon is not divisible by any variable of the colon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderFailure {
    pub position: usize,
    pub generator: Monomial,
    pub witness: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Admissibility {
    Admissible(QuotientCertificate),
    Rejected(OrderFailure),
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible(_))
    }

    pub fn certificate(&self) -> Option<&QuotientCertificate> {
        match self {
            Admissibility::Admissible(c) => Some(c),
            Admissibility::Rejected(_) => None,
        }
    }

    pub fn into_certificate(self) -> Option<QuotientCertificate> {
        match self {
            Admissibility::Admissible(c) => Some(c),
            Admissibility::Rejected(_) => None,
        }
    }
}

/// Result of [`find_admissible_order`]. `NoneExists` is only returned after
/// an exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderSearch {
    Found(QuotientCertificate),
    NoneExists,
    Inconclusive,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    /// Lex orders over all variable permutations are tried when `n` is at
    /// most this.
    pub lex_max_vars: usize,
    /// Maximum number of generator subsets visited by the backtracking search.
    pub max_states: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            lex_max_vars: 6,
            max_states: 200_000,
        }
    }
}

/// The variables `x_i` with `x_i u ∈ (prefix)`, if the colon `(prefix) : u` is
/// generated by them; otherwise the first prefix element whose colon
/// contribution escapes.
fn colon_variables<'a, I>(prefix: I, u: &Monomial) -> std::result::Result<Vec<usize>, Monomial>
where
    I: IntoIterator<Item = &'a Monomial> + Clone,
{
    let n = u.n();
    let mut var_mask = 0u64;
    for g in prefix.clone() {
        let q = quotient_part(g, u);
        if q.degree() == 1 {
            var_mask |= q.support_mask();
        }
    }
    for g in prefix {
        if quotient_part(g, u).support_mask() & var_mask == 0 {
            return Err(g.clone());
        }
    }
    Ok((1..=n).filter(|i| var_mask & (1 << (i - 1)) != 0).collect())
}

/// `g / gcd(g, u)`.
fn quotient_part(g: &Monomial, u: &Monomial) -> Monomial {
    let exps = g
        .exponents()
        .iter()
        .zip(u.exponents())
        .map(|(a, b)| a.saturating_sub(*b))
        .collect();
    Monomial::new(exps)
}

/// Checks whether `order` (a permutation of generator indices) is an
/// admissible order of `I`.
pub fn certify_order(ideal: &MonomialIdeal, order: &[usize]) -> Result<Admissibility> {
    certify_order_with(ideal, order, None)
}

fn certify_order_with(
    ideal: &MonomialIdeal,
    order: &[usize],
    var_order: Option<VariableOrder>,
) -> Result<Admissibility> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("linear quotients"));
    }
    let m = ideal.len();
    let mut seen = vec![false; m];
    if order.len() != m || order.iter().any(|&k| k >= m || std::mem::replace(&mut seen[k], true)) {
        return Err(Error::InvalidOrder(format!("{order:?} is not a permutation of 0..{m}")));
    }
    let gens = ideal.gens();
    let mut sets = Vec::with_capacity(m);
    for (pos, &k) in order.iter().enumerate() {
        let u = &gens[k];
        let prefix = order[..pos].iter().map(|&j| &gens[j]);
        match colon_variables(prefix, u) {
            Ok(set) => sets.push(set),
            Err(witness) => {
                return Ok(Admissibility::Rejected(OrderFailure {
                    position: pos + 1,
                    generator: u.clone(),
                    witness,
                }))
            }
        }
    }
    Ok(Admissibility::Admissible(QuotientCertificate {
        ideal: ideal.clone(),
        order: order.to_vec(),
        sets,
        var_order,
    }))
}

/// Generator indices of `I` sorted descending in the lex order induced by `vo`.
pub fn lex_order(ideal: &MonomialIdeal, vo: &VariableOrder) -> Vec<usize> {
    let gens = ideal.gens();
    let mut idx: Vec<usize> = (0..gens.len()).collect();
    idx.sort_by(|&a, &b| vo.lex_cmp(&gens[b], &gens[a]));
    idx
}

/// Certifies the lex order induced by `vo`.
pub fn certify_lex(ideal: &MonomialIdeal, vo: &VariableOrder) -> Result<Admissibility> {
    if vo.n() != ideal.n() {
        return Err(Error::DimensionMismatch {
            left: ideal.n(),
            right: vo.n(),
        });
    }
    certify_order_with(ideal, &lex_order(ideal, vo), Some(vo.clone()))
}

/// Searches for some admissible order: lex orders under every variable
/// permutation first (small `n`), then a backtracking search over generator
/// prefixes.
pub fn find_admissible_order(ideal: &MonomialIdeal, budget: SearchBudget) -> Result<OrderSearch> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("linear quotients"));
    }
    let n = ideal.n();
    if n <= budget.lex_max_vars {
        let mut found = None;
        for_each_permutation(n, &mut |perm| {
            let vo = VariableOrder::new(perm.to_vec()).expect("permutation");
            if let Ok(Admissibility::Admissible(c)) = certify_lex(ideal, &vo) {
                found = Some(c);
                return false;
            }
            true
        });
        if let Some(c) = found {
            return Ok(OrderSearch::Found(c));
        }
    }
    backtrack_order(ideal, budget.max_states)
}

/// Calls `f` on each permutation of `1..=n` until it returns `false`.
fn for_each_permutation(n: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    fn rec(perm: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if k == perm.len() {
            return f(perm);
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            // keep the remaining suffix sorted so identity is visited first
            perm[k + 1..].sort_unstable();
            if !rec(perm, k + 1, f) {
                return false;
            }
        }
        true
    }
    let mut perm: Vec<usize> = (1..=n).collect();
    rec(&mut perm, 0, f);
}

fn backtrack_order(ideal: &MonomialIdeal, max_states: usize) -> Result<OrderSearch> {
    let gens = ideal.gens();
    let m = gens.len();
    let words = m.div_ceil(64);
    let mut dead: HashSet<Vec<u64>> = HashSet::new();
    let mut visited = 0usize;
    let mut exhausted = false;

    // The colon (P) : u only depends on the set P, so dead prefixes are
    // memoized as bit sets.
    fn rec(
        gens: &[Monomial],
        chosen: &mut Vec<u64>,
        order: &mut Vec<usize>,
        dead: &mut HashSet<Vec<u64>>,
        visited: &mut usize,
        max_states: usize,
        exhausted: &mut bool,
    ) -> bool {
        if order.len() == gens.len() {
            return true;
        }
        if dead.contains(chosen) {
            return false;
        }
        *visited += 1;
        if *visited > max_states {
            *exhausted = true;
            return false;
        }
        for k in 0..gens.len() {
            if chosen[k / 64] & (1 << (k % 64)) != 0 {
                continue;
            }
            let prefix = order.iter().map(|&j| &gens[j]);
            if colon_variables(prefix, &gens[k]).is_err() {
                continue;
            }
            chosen[k / 64] |= 1 << (k % 64);
            order.push(k);
            if rec(gens, chosen, order, dead, visited, max_states, exhausted) {
                return true;
            }
            order.pop();
            chosen[k / 64] &= !(1 << (k % 64));
            if *exhausted {
                return false;
            }
        }
        dead.insert(chosen.clone());
        false
    }

    let mut chosen = vec![0u64; words];
    let mut order = Vec::with_capacity(m);
    if rec(
        gens,
        &mut chosen,
        &mut order,
        &mut dead,
        &mut visited,
        max_states,
        &mut exhausted,
    ) {
        let cert = certify_order(ideal, &order)?
            .into_certificate()
            .ok_or_else(|| Error::Internal("backtracking produced a rejected order".into()))?;
        return Ok(OrderSearch::Found(cert));
    }
    Ok(if exhausted {
        OrderSearch::Inconclusive
    } else {
        OrderSearch::NoneExists
    })
}

impl QuotientCertificate {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn var_order(&self) -> Option<&VariableOrder> {
        self.var_order.as_ref()
    }

    /// `(u_k, set(u_k))` in admissible order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &[usize])> + '_ {
        self.order
            .iter()
            .zip(&self.sets)
            .map(|(&k, s)| (&self.ideal.gens()[k], s.as_slice()))
    }

    pub fn ordered_generators(&self) -> Vec<Monomial> {
        self.order.iter().map(|&k| self.ideal.gens()[k].clone()).collect()
    }

    /// `set(u)` for a generator `u`.
    pub fn set_of(&self, u: &Monomial) -> Option<&[usize]> {
        self.iter().find(|(g, _)| *g == u).map(|(_, s)| s)
    }

    pub fn max_set_size(&self) -> usize {
        self.sets.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `sum_u binom(|set(u)|, j)`, the j-th total Betti number.
    pub fn betti_number(&self, j: usize) -> u64 {
        self.sets.iter().map(|s| binomial(s.len(), j)).sum()
    }

    /// The multiset `{x_F u : F ⊆ set(u), |F| = j}` of j-th multigraded shifts.
    pub fn shift_multiset(&self, j: usize) -> BTreeMap<Monomial, usize> {
        let mut out = BTreeMap::new();
        for (u, set) in self.iter() {
            for_each_subset(set, j, &mut |f| {
                let mut exps = u.exponents().to_vec();
                for &i in f {
                    exps[i - 1] += 1;
                }
                *out.entry(Monomial::new(exps)).or_insert(0) += 1;
            });
        }
        out
    }

    /// `HS_j(I) = (x_F u : u ∈ G(I), F ⊆ set(u), |F| = j)`.
    pub fn hs(&self, j: usize) -> MonomialIdeal {
        let shifts = self.shift_multiset(j);
        let distinct = shifts.len();
        let ideal = minimal_generators(self.ideal.n(), shifts.into_keys()).expect("same ring");
        if self.ideal.is_equigenerated() {
            assert_eq!(ideal.len(), distinct, "equal-degree shifts must already be minimal");
        }
        ideal
    }
}

/// Calls `f` on every `k`-subset of `items`, in lexicographic position order.
pub(crate) fn for_each_subset<T: Copy>(items: &[T], k: usize, f: &mut dyn FnMut(&[T])) {
    fn rec<T: Copy>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, f: &mut dyn FnMut(&[T])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let need = k - cur.len();
        for i in start..=items.len().saturating_sub(need) {
            if i >= items.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    if k > items.len() {
        return;
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), f);
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// `HS_j(I)` from a certificate.
pub fn hs_from_certificate(cert: &QuotientCertificate, j: usize) -> MonomialIdeal {
    cert.hs(j)
}

/// `HS_1(I) = (lcm(u, v) : u, v ∈ G(I), d(u, v) = 1)` for an equigenerated
/// ideal with linear quotients.
pub fn hs1_distance(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if !ideal.is_zero() && !ideal.is_equigenerated() {
        return Err(Error::NotEquigenerated);
    }
    let gens = ideal.gens();
    let mut out = HashSet::new();
    for (a, u) in gens.iter().enumerate() {
        for v in &gens[a + 1..] {
            if distance(u, v)? == 1 {
                out.insert(u.lcm_raw(v));
            }
        }
    }
    minimal_generators(ideal.n(), out)
}

/// `HS_j(I)` as the ideal of `lcm(u_{i_1}, ..., u_{i_{j+1}})` over chains in
/// the admissible order whose last element is at distance one from all the
/// others, with `deg(lcm) = deg(u_{i_{j+1}}) + j`.
pub fn hs_distance(cert: &QuotientCertificate, j: usize) -> Result<MonomialIdeal> {
    let ideal = cert.ideal();
    if !ideal.is_equigenerated() {
        return Err(Error::NotEquigenerated);
    }
    let ordered = cert.ordered_generators();
    let mut out = HashSet::new();
    for (k, last) in ordered.iter().enumerate() {
        let neighbours: Vec<&Monomial> = ordered[..k]
            .iter()
            .filter(|u| distance(u, last).map(|d| d == 1).unwrap_or(false))
            .collect();
        let target = last.degree() + j as u32;
        // Each neighbour raises the lcm degree by at most one, so branches
        // that fail to raise it can never reach the target degree.
        fn rec(nb: &[&Monomial], start: usize, left: usize, acc: &Monomial, out: &mut HashSet<Monomial>) {
            if left == 0 {
                out.insert(acc.clone());
                return;
            }
            for i in start..nb.len() {
                if nb.len() - i < left {
                    break;
                }
                let next = acc.lcm_raw(nb[i]);
                if next.degree() == acc.degree() + 1 {
                    rec(nb, i + 1, left - 1, &next, out);
                }
            }
        }
        rec(&neighbours, 0, j, last, &mut out);
        debug_assert!(out.iter().all(|w| w.degree() == target));
    }
    minimal_generators(ideal.n(), out)
}

/// Subset-enumeration caps for [`taylor_shifts`].
#[derive(Clone, Copy, Debug)]
pub struct TaylorCap {
    pub max_gens_small_j: usize,
    pub max_gens: usize,
    pub small_j: usize,
}

impl Default for TaylorCap {
    fn default() -> Self {
        TaylorCap {
            max_gens_small_j: 25,
            max_gens: 18,
            small_j: 2,
        }
    }
}

/// The Taylor bound `(lcm(u_i : i ∈ F) : F ⊆ [m], |F| = j + 1)`.
pub fn taylor_shifts(ideal: &MonomialIdeal, j: usize) -> Result<MonomialIdeal> {
    taylor_shifts_capped(ideal, j, TaylorCap::default())
}

pub fn taylor_shifts_capped(ideal: &MonomialIdeal, j: usize, cap: TaylorCap) -> Result<MonomialIdeal> {
    let m = ideal.len();
    let limit = if j <= cap.small_j {
        cap.max_gens_small_j
    } else {
        cap.max_gens
    };
    if j < m && m > limit {
        return Err(Error::ResourceCap {
            what: "generator count for Taylor enumeration",
            limit,
        });
    }
    let gens = ideal.gens();
    let mut out: HashSet<Monomial> = HashSet::new();
    fn rec(gens: &[Monomial], start: usize, left: usize, acc: Option<Monomial>, out: &mut HashSet<Monomial>) {
        if left == 0 {
            out.insert(acc.expect("nonempty subset"));
            return;
        }
        for i in start..gens.len() {
            if gens.len() - i < left {
                break;
            }
            let next = match &acc {
                Some(a) => a.lcm_raw(&gens[i]),
                None => gens[i].clone(),
            };
            rec(gens, i + 1, left - 1, Some(next), out);
        }
    }
    rec(gens, 0, j + 1, None, &mut out);
    minimal_generators(ideal.n(), out)
}

/// Whether `a` is the lcm of some `(j+1)`-subset of `G(I)`.
///
/// Equivalent to membership in the Taylor multidegree set without enumerating
/// subsets: the generators dividing `a` must have lcm `a`, at least `j+1` of
/// them must exist, and a cover of the coordinates of `a` by generators
/// attaining them must exist with at most `j+1` members.
pub fn is_taylor_multidegree(ideal: &MonomialIdeal, a: &Monomial, j: usize) -> bool {
    let below: Vec<&Monomial> = ideal.gens().iter().filter(|g| g.divides(a)).collect();
    if below.len() < j + 1 {
        return false;
    }
    let supp = a.support();
    let full: u64 = if supp.len() == 64 {
        u64::MAX
    } else {
        (1u64 << supp.len()) - 1
    };
    let masks: HashSet<u64> = below
        .iter()
        .map(|g| {
            supp.iter()
                .enumerate()
                .filter(|(_, &i)| g.deg_in(i) == a.deg_in(i))
                .fold(0u64, |m, (b, _)| m | (1 << b))
        })
        .collect();
    if masks.iter().fold(0, |m, x| m | x) != full {
        return false;
    }
    if supp.is_empty() {
        return true;
    }
    // minimum number of masks covering `full`, by breadth-first search
    let mut frontier = vec![0u64];
    let mut seen: HashSet<u64> = HashSet::from([0]);
    for step in 1..=j + 1 {
        let mut next = Vec::new();
        for &s in &frontier {
            for &mk in &masks {
                let t = s | mk;
                if t == full {
                    return step <= j + 1;
                }
                if seen.insert(t) {
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| m(e)).collect()).unwrap()
    }

    fn index_order(i: &MonomialIdeal, seq: &[&[u32]]) -> Vec<usize> {
        seq.iter()
            .map(|e| i.gens().iter().position(|g| *g == m(e)).unwrap())
            .collect()
    }

    const X2X4: &[u32] = &[0, 1, 0, 1];
    const X1X2: &[u32] = &[1, 1, 0, 0];
    const X1X3: &[u32] = &[1, 0, 1, 0];

    #[test]
    fn counterexample_order_is_admissible_as_written() {
        let i = ideal(4, &[X2X4, X1X2, X1X3]);
        let cert = certify_order(&i, &index_order(&i, &[X2X4, X1X2, X1X3])).unwrap();
        let cert = cert.certificate().expect("admissible");
        let sets: Vec<&[usize]> = cert.iter().map(|(_, s)| s).collect();
        assert_eq!(sets, vec![&[][..], &[4][..], &[2][..]]);
    }

    #[test]
    fn swapped_order_rejected_at_position_two() {
        let i = ideal(4, &[X2X4, X1X2, X1X3]);
        let res = certify_order(&i, &index_order(&i, &[X2X4, X1X3, X1X2])).unwrap();
        match res {
            Admissibility::Rejected(f) => {
                assert_eq!(f.position, 2);
                assert_eq!(f.generator, m(X1X3));
                assert_eq!(f.witness, m(X2X4));
            }
            _ => panic!("order must be rejected"),
        }
    }

    #[test]
    fn single_generator_and_zero_ideal() {
        let i = ideal(1, &[&[1]]);
        let cert = certify_order(&i, &[0]).unwrap().into_certificate().unwrap();
        assert_eq!(cert.iter().next().unwrap().1, &[] as &[usize]);
        assert!(certify_order(&MonomialIdeal::zero(2), &[]).is_err());
        assert!(matches!(certify_order(&i, &[1]), Err(Error::InvalidOrder(_))));
    }

    #[test]
    fn maximal_ideal_sets() {
        let mm = MonomialIdeal::maximal(4);
        let cert = certify_lex(&mm, &VariableOrder::identity(4))
            .unwrap()
            .into_certificate()
            .unwrap();
        let sets: Vec<Vec<usize>> = cert.iter().map(|(_, s)| s.to_vec()).collect();
        assert_eq!(sets, vec![vec![], vec![1], vec![1, 2], vec![1, 2, 3]]);
    }

    #[test]
    fn lex_under_permuted_variables() {
        let i = ideal(4, &[X2X4, X1X2, X1X3]);
        let vo = VariableOrder::new(vec![2, 1, 3, 4]).unwrap();
        assert!(certify_lex(&i, &vo).unwrap().is_admissible());
    }

    #[test]
    fn search_finds_orders_or_proves_none() {
        let i = ideal(4, &[X2X4, X1X2, X1X3]);
        assert!(matches!(
            find_admissible_order(&i, SearchBudget::default()).unwrap(),
            OrderSearch::Found(_)
        ));
        let j = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(
            find_admissible_order(&j, SearchBudget::default()).unwrap(),
            OrderSearch::NoneExists
        );
        let no_lex = SearchBudget {
            lex_max_vars: 0,
            max_states: 1000,
        };
        assert_eq!(find_admissible_order(&j, no_lex).unwrap(), OrderSearch::NoneExists);
        assert!(matches!(
            find_admissible_order(&i, no_lex).unwrap(),
            OrderSearch::Found(_)
        ));
        let k = ideal(3, &[&[1, 1, 1]]);
        assert!(matches!(
            find_admissible_order(&k, no_lex).unwrap(),
            OrderSearch::Found(_)
        ));
    }

    #[test]
    fn hs1_of_counterexample() {
        let i = ideal(4, &[X2X4, X1X2, X1X3]);
        let expected = ideal(4, &[&[1, 1, 1, 0], &[1, 1, 0, 1]]);
        assert_eq!(hs1_distance(&i).unwrap(), expected);
        let cert = certify_order(&i, &index_order(&i, &[X2X4, X1X2, X1X3]))
            .unwrap()
            .into_certificate()
            .unwrap();
        assert_eq!(cert.hs(1), expected);
        assert!(cert.hs(2).is_zero());
        assert!(hs_distance(&cert, 2).unwrap().is_zero());
        assert!(hs1_distance(&ideal(2, &[&[1, 1]])).unwrap().is_zero());
        assert_eq!(
            hs1_distance(&ideal(2, &[&[1, 0], &[0, 2]])),
            Err(Error::NotEquigenerated)
        );
    }

    #[test]
    fn degree_condition_example() {
        // (x1^2x3, x1^2x2, x1x2x3)
        let i = ideal(3, &[&[2, 0, 1], &[2, 1, 0], &[1, 1, 1]]);
        let order = index_order(&i, &[&[2, 0, 1], &[2, 1, 0], &[1, 1, 1]]);
        let cert = certify_order(&i, &order).unwrap().into_certificate().unwrap();
        assert!(hs_distance(&cert, 2).unwrap().is_zero());
        assert!(cert.hs(2).is_zero());
        assert_eq!(cert.hs(1), ideal(3, &[&[2, 1, 1]]));
        assert_eq!(cert.betti_number(1), 2);
    }

    #[test]
    fn taylor_examples() {
        let i = MonomialIdeal::maximal(3);
        assert_eq!(taylor_shifts(&i, 2).unwrap(), ideal(3, &[&[1, 1, 1]]));
        let i = ideal(4, &[X2X4, X1X2, X1X3]);
        assert_eq!(taylor_shifts(&i, 1).unwrap(), ideal(4, &[&[1, 1, 0, 1], &[1, 1, 1, 0]]));
        assert_eq!(taylor_shifts(&i, 0).unwrap(), i);
        assert!(taylor_shifts(&i, 3).unwrap().is_zero());
        assert!(is_taylor_multidegree(&i, &m(&[1, 1, 1, 1]), 1));
        assert!(is_taylor_multidegree(&i, &m(&[1, 1, 1, 1]), 2));
        assert!(!is_taylor_multidegree(&i, &m(&[1, 1, 1, 1]), 0));
        assert!(!is_taylor_multidegree(&i, &m(&[1, 1, 1, 1]), 3));
    }

    #[test]
    fn taylor_cap_is_enforced() {
        let big = MonomialIdeal::maximal(30);
        assert!(matches!(taylor_shifts(&big, 1), Err(Error::ResourceCap { .. })));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
