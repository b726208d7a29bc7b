//! Multigraded Betti numbers from simplicial homology.
//!
//! For a multidegree `a`, `β_{i,a}(I) = dim H̃_{i-1}(K^a(I); F_p)` where
//! `K^a(I) = {F ⊆ supp(a) : x^a / x_F ∈ I}`. Only lcms of generator subsets
//! can carry nonzero Betti numbers, so those are the only candidates.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::families::is_strongly_stable;
use crate::ideal::{minimal_generators, MonomialIdeal};
use crate::monomial::Monomial;
use crate::quotients::binomial;

pub const DEFAULT_PRIME: u32 = 32003;
pub const SECOND_PRIME: u32 = 101;
pub const DEFAULT_LATTICE_CAP: usize = 50_000;
/// Largest multidegree support for which faces are enumerated.
pub const MAX_FACE_VERTICES: usize = 22;

/// A simplicial complex on a vertex set, given by its facets. Faces are bit
/// masks over positions in `vertices`. An empty facet list is the void
/// complex; a single empty facet is the complex `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplexFrame {
    vertices: Vec<usize>,
    facets: Vec<u64>,
}

impl SimplicialComplexFrame {
    pub fn new(vertices: Vec<usize>, facets: Vec<u64>) -> Self {
        let mut facets = facets;
        facets.sort_unstable();
        facets.dedup();
        let keep: Vec<u64> = facets
            .iter()
            .copied()
            .filter(|&f| !facets.iter().any(|&g| g != f && f & !g == 0))
            .collect();
        SimplicialComplexFrame { vertices, facets: keep }
    }

    /// Ambient (1-based) indices of the vertex positions.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    /// Faces grouped by cardinality; index 0 holds the empty face.
    pub fn faces_by_size(&self) -> Result<Vec<Vec<u64>>> {
        let v = self.vertices.len();
        if v > MAX_FACE_VERTICES {
            return Err(Error::ResourceCap {
                what: "multidegree support size",
                limit: MAX_FACE_VERTICES,
            });
        }
        let mut seen: HashSet<u64> = HashSet::new();
        for &f in &self.facets {
            // all submasks of the facet
            let mut s = f;
            loop {
                seen.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        let mut by_size = vec![Vec::new(); v + 1];
        for s in seen {
            by_size[s.count_ones() as usize].push(s);
        }
        while by_size.len() > 1 && by_size.last().is_some_and(Vec::is_empty) {
            by_size.pop();
        }
        for level in &mut by_size {
            level.sort_unstable();
        }
        Ok(by_size)
    }

    /// `dim H̃_k` over `F_p` for `k = -1, 0, 1, ...`; entry `k + 1` of the
    /// result. The void complex has no homology at all.
    pub fn reduced_homology(&self, p: u32) -> Result<Vec<u64>> {
        if self.is_void() {
            return Ok(Vec::new());
        }
        let faces = self.faces_by_size()?;
        // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces
        let mut ranks = vec![0u64; faces.len() + 1];
        for s in 1..faces.len() {
            ranks[s] = boundary_rank(&faces[s], &faces[s - 1], p) as u64;
        }
        Ok((0..faces.len())
            .map(|s| faces[s].len() as u64 - ranks[s] - ranks[s + 1])
            .collect())
    }
}

fn boundary_rank(upper: &[u64], lower: &[u64], p: u32) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    let p64 = p as u64;
    let mut rows: Vec<Vec<u64>> = upper
        .iter()
        .map(|&f| {
            let mut row = vec![0u64; lower.len()];
            let mut pos = 0;
            let mut bits = f;
            while bits != 0 {
                let b = bits.trailing_zeros();
                bits &= bits - 1;
                let col = index[&(f & !(1u64 << b))];
                row[col] = if pos % 2 == 0 { 1 } else { p64 - 1 };
                pos += 1;
            }
            row
        })
        .collect();
    rank_mod_p(&mut rows, p)
}

/// Rank of a dense matrix over `F_p` by row reduction.
pub fn rank_mod_p(rows: &mut [Vec<u64>], p: u32) -> usize {
    let p = p as u64;
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][c] % p, p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x % p * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank {
                continue;
            }
            let factor = row[c] % p;
            if factor == 0 {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x % p + p - factor * y % p) % p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// `K^a(I)`: the faces `F ⊆ supp(a)` with `x^a / x_F ∈ I`. Its facets are
/// `supp(a) \ {i : g_i = a_i}` for the generators `g` dividing `x^a`.
pub fn upper_koszul(ideal: &MonomialIdeal, a: &Monomial) -> SimplicialComplexFrame {
    let supp = a.support();
    let facets = ideal
        .gens()
        .iter()
        .filter(|g| g.divides(a))
        .map(|g| {
            supp.iter()
                .enumerate()
                .filter(|(_, &i)| g.deg_in(i) < a.deg_in(i))
                .fold(0u64, |m, (b, _)| m | (1 << b))
        })
        .collect();
    SimplicialComplexFrame::new(supp, facets)
}

/// All lcms of nonempty subsets of `G(I)`, by closing `G(I)` under lcm with
/// single generators.
pub fn lcm_lattice(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<Monomial>> {
    let gens = ideal.gens();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    if seen.len() > cap {
        return Err(Error::ResourceCap {
            what: "lcm lattice size",
            limit: cap,
        });
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                if g.divides(x) {
                    continue;
                }
                let l = x.lcm_raw(g);
                if seen.insert(l.clone()) {
                    if seen.len() > cap {
                        return Err(Error::ResourceCap {
                            what: "lcm lattice size",
                            limit: cap,
                        });
                    }
                    next.push(l);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    Ok(out)
}

/// Nonzero multigraded Betti numbers of `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    field_char: u32,
    entries: BTreeMap<(usize, Monomial), u64>,
}

impl BettiTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field_char(&self) -> u32 {
        self.field_char
    }

    /// `(i, a) -> β_{i,a}`, nonzero entries only.
    pub fn entries(&self) -> &BTreeMap<(usize, Monomial), u64> {
        &self.entries
    }

    pub fn get(&self, i: usize, a: &Monomial) -> u64 {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    /// Projective dimension; `None` for the zero ideal.
    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, v)| v).sum()
    }

    /// Total Betti numbers `β_0, ..., β_pd`.
    pub fn totals(&self) -> Vec<u64> {
        match self.pd() {
            None => Vec::new(),
            Some(pd) => (0..=pd).map(|i| self.total(i)).collect(),
        }
    }

    /// Multidegrees with `β_{i,a} != 0`, descending lex.
    pub fn shifts(&self, i: usize) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = self
            .entries
            .keys()
            .filter(|(k, _)| *k == i)
            .map(|(_, a)| a.clone())
            .collect();
        out.reverse();
        out
    }

    /// `HS_i(I)` as read off the table.
    pub fn hs(&self, i: usize) -> MonomialIdeal {
        minimal_generators(self.n, self.shifts(i)).expect("table multidegrees share the ring")
    }
}

pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti_table_with(ideal, DEFAULT_PRIME, DEFAULT_LATTICE_CAP)
}

pub fn betti_table_with(ideal: &MonomialIdeal, p: u32, lattice_cap: usize) -> Result<BettiTable> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    let mut entries = BTreeMap::new();
    for a in lcm_lattice(ideal, lattice_cap)? {
        let complex = upper_koszul(ideal, &a);
        for (k, &rank) in complex.reduced_homology(p)?.iter().enumerate() {
            if rank != 0 {
                entries.insert((k, a.clone()), rank);
            }
        }
    }
    Ok(BettiTable {
        n: ideal.n(),
        field_char: p,
        entries,
    })
}

/// `HS_j(I)` from the oracle.
pub fn hs_oracle(ideal: &MonomialIdeal, j: usize) -> Result<MonomialIdeal> {
    Ok(betti_table(ideal)?.hs(j))
}

pub fn pd_oracle(ideal: &MonomialIdeal) -> Result<Option<usize>> {
    Ok(betti_table(ideal)?.pd())
}

/// Total Betti numbers of a strongly stable ideal:
/// `β_i = Σ_{u ∈ G(I)} binom(max(u) - 1, i)`.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<Vec<u64>> {
    if !is_strongly_stable(ideal)?.holds() {
        return Err(Error::Precondition("ideal is not strongly stable".into()));
    }
    let tops: Vec<usize> = ideal.gens().iter().map(|u| u.max_var().unwrap_or(1)).collect();
    let pd = tops.iter().map(|t| t - 1).max().unwrap_or(0);
    Ok((0..=pd)
        .map(|i| tops.iter().map(|&t| binomial(t - 1, i)).sum())
        .collect())
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d: &u32| d * d <= p).all(|d| !p.is_multiple_of(d))
}
