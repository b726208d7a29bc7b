//! Monomials as exponent vectors over a fixed number of variables.
//!
//! Variables are indexed from 1, so `x1` is the first coordinate of the
//! exponent vector. The derived `Ord` is the lexicographic order induced by
//! `x1 > x2 > ... > xn`; other variable orders go through [`VariableOrder`].

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ambient variable count. Faces and supports are packed
/// into `u64` masks.
pub const MAX_VARS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_i` (1-based).
    pub fn var(n: usize, i: usize) -> Result<Self> {
        check_index(n, i)?;
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Ok(Monomial { exps })
    }

    /// The squarefree monomial `x_F = prod_{i in F} x_i`.
    pub fn squarefree(n: usize, vars: &[usize]) -> Result<Self> {
        let mut exps = vec![0; n];
        for &i in vars {
            check_index(n, i)?;
            exps[i - 1] = 1;
        }
        Ok(Monomial { exps })
    }

    /// `x_1 x_2 ... x_n`.
    pub fn all_vars(n: usize) -> Self {
        Monomial { exps: vec![1; n] }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// `deg_{x_i}(u)`, 1-based.
    pub fn deg_in(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// 1-based indices of the variables dividing `self`, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    /// `max(u)`: the largest variable index in the support. `None` for `1`.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0).map(|i| i + 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        same_n(self, other)?;
        Ok(self.lcm_raw(other))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        same_n(self, other)?;
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        Ok(Monomial { exps })
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        same_n(self, other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if self.n() != other.n() || !other.divides(self) {
            return None;
        }
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps })
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|e| e.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    /// `x_i * self`.
    pub fn mul_var(&self, i: usize) -> Result<Monomial> {
        check_index(self.n(), i)?;
        let mut exps = self.exps.clone();
        exps[i - 1] = exps[i - 1].checked_add(1).ok_or(Error::Overflow)?;
        Ok(Monomial { exps })
    }

    /// `self / x_i` when `x_i` divides `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if i == 0 || i > self.n() || self.exps[i - 1] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i - 1] -= 1;
        Some(Monomial { exps })
    }

    /// `x_j (self / x_i)`, the basic exchange move. `None` when `x_i` does not
    /// divide `self`.
    pub fn exchange(&self, i: usize, j: usize) -> Option<Monomial> {
        if j == 0 || j > self.n() {
            return None;
        }
        let mut m = self.div_var(i)?;
        m.exps[j - 1] += 1;
        Some(m)
    }

    /// Support as a bit mask, bit `i-1` for `x_i`.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    /// Embeds into a ring with `n >= self.n()` variables.
    pub fn lift(&self, n: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(n.max(self.n()), 0);
        Monomial { exps }
    }

    /// Keeps only the listed (1-based) coordinates, in that order.
    pub fn restrict(&self, vars: &[usize]) -> Monomial {
        Monomial {
            exps: vars.iter().map(|&i| self.exps[i - 1]).collect(),
        }
    }

    pub(crate) fn lcm_raw(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial { exps }
    }
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::VariableOutOfRange { index: i, n });
    }
    Ok(())
}

fn same_n(u: &Monomial, v: &Monomial) -> Result<()> {
    if u.n() != v.n() {
        return Err(Error::DimensionMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    Ok(())
}

/// `d(u,v) = 1/2 * sum_i |deg_{x_i}(u) - deg_{x_i}(v)|` for monomials of equal
/// degree.
pub fn distance(u: &Monomial, v: &Monomial) -> Result<u32> {
    same_n(u, v)?;
    let (du, dv) = (u.degree(), v.degree());
    if du != dv {
        return Err(Error::DegreeMismatch { left: du, right: dv });
    }
    let l1: u32 = u.exps.iter().zip(&v.exps).map(|(a, b)| a.abs_diff(*b)).sum();
    Ok(l1 / 2)
}

/// Returns `(k, l)` with `u = x_k (v / x_l)` and `k != l`, which exists
/// exactly when `d(u,v) = 1`.
pub fn unit_exchange(u: &Monomial, v: &Monomial) -> Result<Option<(usize, usize)>> {
    if distance(u, v)? != 1 {
        return Ok(None);
    }
    let mut k = 0;
    let mut l = 0;
    for (i, (a, b)) in u.exps.iter().zip(&v.exps).enumerate() {
        match a.cmp(b) {
            Ordering::Greater => k = i + 1,
            Ordering::Less => l = i + 1,
            Ordering::Equal => {}
        }
    }
    Ok(Some((k, l)))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A total order on the variables: `x_{perm[0]} > x_{perm[1]} > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableOrder {
    perm: Vec<usize>,
}

impl VariableOrder {
    pub fn identity(n: usize) -> Self {
        VariableOrder {
            perm: (1..=n).collect(),
        }
    }

    /// `perm` lists 1-based variable indices from largest to smallest.
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &i in &perm {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::InvalidOrder(format!("{perm:?} is not a permutation of 1..={n}")));
            }
            seen[i - 1] = true;
        }
        Ok(VariableOrder { perm })
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    /// The smallest variable under this order.
    pub fn last(&self) -> usize {
        *self.perm.last().expect("variable order over zero variables")
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &i)| i == k + 1)
    }

    /// Lexicographic comparison induced by this variable order.
    pub fn lex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &i in &self.perm {
            match a.exps[i - 1].cmp(&b.exps[i - 1]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for VariableOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.perm.iter().map(|i| format!("x{i}")).collect();
        f.write_str(&parts.join(">"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(m(&[0, 0, 2, 1]).lcm(&m(&[0, 0, 1, 2])).unwrap(), m(&[0, 0, 2, 2]));
        let u = m(&[1, 2, 0]);
        assert_eq!(u.lcm(&u).unwrap(), u);
        assert_eq!(m(&[1, 1, 0]).lcm(&m(&[0, 0, 1])).unwrap(), m(&[1, 1, 1]));
        assert_eq!(
            m(&[1]).lcm(&m(&[1, 0])),
            Err(Error::DimensionMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance(&m(&[0, 1, 0, 1]), &m(&[1, 1, 0, 0])).unwrap(), 1);
        let u = m(&[2, 0, 1]);
        assert_eq!(distance(&u, &u).unwrap(), 0);
        assert_eq!(distance(&m(&[2, 0, 1]), &m(&[0, 2, 1])).unwrap(), 2);
        assert!(matches!(
            distance(&m(&[1, 0]), &m(&[1, 1])),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn unit_exchange_examples() {
        let u = m(&[1, 1, 0, 1]);
        let v = m(&[1, 1, 1, 0]);
        assert_eq!(unit_exchange(&u, &v).unwrap(), Some((4, 3)));
        assert_eq!(v.exchange(3, 4).unwrap(), u);
        assert_eq!(unit_exchange(&u, &u).unwrap(), None);
        assert_eq!(unit_exchange(&m(&[0, 0, 2, 0, 1]), &m(&[0, 0, 0, 2, 1])).unwrap(), None);
    }

    #[test]
    fn display_and_support() {
        let u = m(&[1, 0, 2, 0, 1]);
        assert_eq!(u.to_string(), "x1*x3^2*x5");
        assert_eq!(u.support(), vec![1, 3, 5]);
        assert_eq!(u.max_var(), Some(5));
        assert_eq!(Monomial::one(3).to_string(), "1");
        assert_eq!(Monomial::one(3).max_var(), None);
    }

    #[test]
    fn variable_order_lex() {
        let vo = VariableOrder::new(vec![2, 1, 3, 4]).unwrap();
        // x2x4 > x1x2 > x1x3 under x2 > x1 > x3 > x4
        assert_eq!(vo.lex_cmp(&m(&[0, 1, 0, 1]), &m(&[1, 1, 0, 0])), Ordering::Less);
        assert_eq!(vo.lex_cmp(&m(&[1, 1, 0, 0]), &m(&[1, 0, 1, 0])), Ordering::Greater);
        assert!(VariableOrder::new(vec![1, 1, 2]).is_err());
        assert_eq!(vo.to_string(), "x2>x1>x3>x4");
    }

    #[test]
    fn overflow_is_an_error() {
        let u = m(&[u32::MAX]);
        assert_eq!(u.mul(&m(&[1])), Err(Error::Overflow));
        assert_eq!(u.pow(2), Err(Error::Overflow));
    }
}
