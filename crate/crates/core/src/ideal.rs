//! Monomial ideals stored by their minimal generating set.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MAX_VARS};

/// A monomial ideal in `K[x_1..x_n]`, represented by `G(I)`.
///
/// Generators form an antichain under divisibility and are kept sorted in
/// descending lexicographic order (`x1 > ... > xn`). The zero ideal has no
/// generators; the unit ideal has the single generator `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Canonicalizes a list of monomials to the minimal generating set of the
/// ideal they generate.
pub fn minimal_generators<I>(n: usize, monomials: I) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = Monomial>,
{
    check_n(n)?;
    let mut all: Vec<Monomial> = Vec::new();
    for u in monomials {
        if u.n() != n {
            return Err(Error::DimensionMismatch { left: n, right: u.n() });
        }
        all.push(u);
    }
    Ok(MonomialIdeal {
        n,
        gens: minimalize(all),
    })
}

/// Only monomials of strictly smaller degree can properly divide, so each
/// candidate is checked against the kept generators of lower degree.
fn minimalize(mut all: Vec<Monomial>) -> Vec<Monomial> {
    all.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    let mut lower_end = 0;
    let mut current_degree = None;
    for u in all {
        let d = u.degree();
        if current_degree != Some(d) {
            current_degree = Some(d);
            lower_end = kept.len();
        }
        if !kept[..lower_end].iter().any(|g| g.divides(&u)) {
            kept.push(u);
        }
    }
    kept.sort_unstable_by(|a, b| b.cmp(a));
    kept
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        return Err(Error::VariableOutOfRange { index: n, n: MAX_VARS });
    }
    Ok(())
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        minimal_generators(n, gens)
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The maximal ideal `m = (x_1, ..., x_n)`.
    pub fn maximal(n: usize) -> Self {
        Self::prime(n, &(1..=n).collect::<Vec<_>>()).expect("indices in range")
    }

    /// The monomial prime `p_A = (x_i : i in A)`.
    pub fn prime(n: usize, vars: &[usize]) -> Result<Self> {
        let gens = vars.iter().map(|&i| Monomial::var(n, i)).collect::<Result<Vec<_>>>()?;
        minimal_generators(n, gens)
    }

    pub fn principal(u: Monomial) -> Result<Self> {
        let n = u.n();
        minimal_generators(n, [u])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Ideal membership of a monomial.
    pub fn contains(&self, u: &Monomial) -> bool {
        u.n() == self.n && self.gens.iter().any(|g| g.divides(u))
    }

    /// `self ⊆ other` as ideals.
    pub fn is_subideal_of(&self, other: &MonomialIdeal) -> bool {
        self.n == other.n && self.gens.iter().all(|g| other.contains(g))
    }

    /// The common degree of all generators, if there is one.
    pub fn generating_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn is_equigenerated(&self) -> bool {
        self.generating_degree().is_some()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// `supp(I)`, 1-based and ascending.
    pub fn support(&self) -> Vec<usize> {
        let mask = self.gens.iter().fold(0u64, |m, g| m | g.support_mask());
        (1..=self.n).filter(|i| mask & (1 << (i - 1)) != 0).collect()
    }

    pub fn has_full_support(&self) -> bool {
        self.support().len() == self.n
    }

    /// `deg(I)`: componentwise maximum of the generator exponents.
    pub fn bounding_multidegree(&self) -> Result<Monomial> {
        let first = self.gens.first().ok_or(Error::ZeroIdeal("bounding multidegree"))?;
        Ok(self.gens[1..].iter().fold(first.clone(), |acc, g| acc.lcm_raw(g)))
    }

    /// A hash set of the generators, for `G(I)` membership tests.
    pub fn generator_set(&self) -> HashSet<&Monomial> {
        self.gens.iter().collect()
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut all = Vec::with_capacity(self.len() * other.len());
        for u in &self.gens {
            for v in &other.gens {
                all.push(u.mul(v)?);
            }
        }
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(all),
        })
    }

    /// `I^k`, with `I^0` the unit ideal.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn times_monomial(&self, u: &Monomial) -> Result<MonomialIdeal> {
        let gens = self.gens.iter().map(|g| g.mul(u)).collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(gens),
        })
    }

    /// `J_{>l}`: the generators whose support has more than `l` elements.
    pub fn support_filter(&self, l: usize) -> MonomialIdeal {
        let gens = self.gens.iter().filter(|g| g.support_size() > l).cloned().collect();
        MonomialIdeal {
            n: self.n,
            gens: minimalize(gens),
        }
    }

    /// Generators of degree exactly `d`.
    pub fn degree_part(&self, d: u32) -> Vec<Monomial> {
        self.gens.iter().filter(|g| g.degree() == d).cloned().collect()
    }

    /// Embeds into a ring with more variables.
    pub fn lift(&self, n: usize) -> Result<MonomialIdeal> {
        check_n(n)?;
        if n < self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: n });
        }
        let gens = self.gens.iter().map(|g| g.lift(n)).collect();
        Ok(MonomialIdeal {
            n,
            gens: minimalize(gens),
        })
    }

    /// `I ∩ K[x_i : i in supp(I)]`, together with the (1-based) original
    /// indices of the kept variables. The zero ideal and the unit ideal keep a
    /// single variable so that the result still lives in a polynomial ring.
    pub fn restrict_to_support(&self) -> (MonomialIdeal, Vec<usize>) {
        let mut vars = self.support();
        if vars.is_empty() {
            vars.push(1);
        }
        let gens = self.gens.iter().map(|g| g.restrict(&vars)).collect();
        (
            MonomialIdeal {
                n: vars.len(),
                gens: minimalize(gens),
            },
            vars,
        )
    }

    /// `I : x_i`.
    pub fn colon_var(&self, i: usize) -> Result<MonomialIdeal> {
        let xi = Monomial::var(self.n, i)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.div(&g.gcd(&xi).expect("same ring")).expect("gcd divides"))
            .collect();
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(gens),
        })
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut seen = HashSet::new();
        for u in &self.gens {
            for v in &other.gens {
                seen.insert(u.lcm_raw(v));
            }
        }
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(seen.into_iter().collect()),
        })
    }

    /// `I : m` as the intersection of the single-variable colons.
    pub fn colon_maximal(&self) -> Result<MonomialIdeal> {
        let mut acc = self.colon_var(1)?;
        for i in 2..=self.n {
            acc = acc.intersect(&self.colon_var(i)?)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "] n={}", self.n)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
