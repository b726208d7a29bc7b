#![allow(dead_code)]

use std::collections::HashSet;

use polyshift::{Monomial, MonomialIdeal};

/// Parses `x1*x3^2`, `x1x3^2` or `1` in `n` variables.
pub fn mono(n: usize, s: &str) -> Monomial {
    let mut exps = vec![0u32; n];
    let s = s.replace('*', "");
    if s == "1" {
        return Monomial::new(exps);
    }
    for part in s.split('x').filter(|p| !p.is_empty()) {
        let (var, exp) = match part.split_once('^') {
            Some((v, e)) => (v, e.parse::<u32>().unwrap()),
            None => (part, 1),
        };
        exps[var.parse::<usize>().unwrap() - 1] += exp;
    }
    Monomial::new(exps)
}

pub fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
    MonomialIdeal::new(n, gens.iter().map(|g| mono(n, g)).collect()).unwrap()
}

pub fn monos(n: usize, gens: &[&str]) -> Vec<Monomial> {
    gens.iter().map(|g| mono(n, g)).collect()
}

/// Every monomial of degree `d` in `n` variables.
pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k + 1 == cur.len() {
            cur[k] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[k] = e;
            rec(k + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

/// Membership by scanning generators.
pub fn member(gens: &[Monomial], u: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(u))
}

/// Minimal generators by the quadratic definition.
pub fn brute_minimal(gens: &[Monomial]) -> HashSet<Monomial> {
    gens.iter()
        .filter(|u| !gens.iter().any(|v| v != *u && v.divides(u)))
        .cloned()
        .collect()
}

/// All lcms of nonempty generator subsets.
pub fn brute_lcm_lattice(gens: &[Monomial]) -> HashSet<Monomial> {
    let m = gens.len();
    let mut out = HashSet::new();
    for mask in 1u32..(1 << m) {
        let mut acc: Option<Monomial> = None;
        for (k, g) in gens.iter().enumerate() {
            if mask & (1 << k) != 0 {
                acc = Some(match acc {
                    None => g.clone(),
                    Some(a) => a.lcm(g).unwrap(),
                });
            }
        }
        out.insert(acc.unwrap());
    }
    out
}

/// Degree `d - 1` part of `I : m` by scanning every monomial of that degree.
pub fn brute_socle(i: &MonomialIdeal) -> MonomialIdeal {
    let n = i.n();
    let d = i.generating_degree().unwrap();
    if d == 0 {
        return MonomialIdeal::zero(n);
    }
    let keep = all_of_degree(n, d - 1)
        .into_iter()
        .filter(|w| (1..=n).all(|k| i.contains(&w.mul_var(k).unwrap())))
        .collect();
    MonomialIdeal::new(n, keep).unwrap()
}

pub fn set_of(ms: &[Monomial]) -> HashSet<Monomial> {
    ms.iter().cloned().collect()
}
