//! Exact sparse polynomials in `x_1, ..., x_n`, Schubert and Schur polynomials
//! as generating functions, and expansion in the Schubert basis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rcgraph::RcGraph;
use crate::tableau::{enumerate_ssyt, Partition};

/// Exact integer coefficient ring. Implemented for the signed machine
/// integers, where overflow is detected by the checked operations, and for
/// [`BigInt`].
pub trait Coefficient:
    Clone
    + fmt::Debug
    + fmt::Display
    + Ord
    + Zero
    + One
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Send
    + Sync
{
    fn from_i64(v: i64) -> Option<Self>;
    fn to_i64(&self) -> Option<i64>;
}

macro_rules! machine_coefficient {
    ($($t:ty),*) => {$(
        impl Coefficient for $t {
            fn from_i64(v: i64) -> Option<Self> {
                <$t>::try_from(v).ok()
            }
            fn to_i64(&self) -> Option<i64> {
                i64::try_from(*self).ok()
            }
        }
    )*};
}

machine_coefficient!(i32, i64, i128);

impl Coefficient for BigInt {
    fn from_i64(v: i64) -> Option<Self> {
        Some(BigInt::from(v))
    }
    fn to_i64(&self) -> Option<i64> {
        i64::try_from(self).ok()
    }
}

/// Exponents `(e_1, ..., e_n)`. Ordered lexicographically with `e_1` most
/// significant.
pub type ExponentVector = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePolynomial<C> {
    n: usize,
    terms: BTreeMap<ExponentVector, C>,
}

impl<C: Coefficient> SparsePolynomial<C> {
    pub fn zero(n: usize) -> Self {
        SparsePolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, vec![0; n], C::one())
    }

    pub fn monomial(n: usize, e: ExponentVector, c: C) -> Self {
        assert_eq!(e.len(), n, "exponent vector length");
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// `x_k` with 1-based `k`.
    pub fn variable(n: usize, k: usize) -> Self {
        let mut e = vec![0; n];
        e[k - 1] = 1;
        Self::monomial(n, e, C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (ExponentVector, C)>>(
        n: usize,
        terms: I,
    ) -> Result<Self> {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::Invariant(format!(
                    "exponent vector {e:?} has length {} not {n}",
                    e.len()
                )));
            }
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, e: &[u32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in lex-descending order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &C)> {
        self.terms.iter().rev()
    }

    /// The lex-largest term.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &C)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, e: ExponentVector, c: C) -> Result<()> {
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().checked_add(&c).ok_or(Error::Overflow)?;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    fn check_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::MismatchedN(self.n as i64, other.n as i64));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-C::one())?)
    }

    pub fn scale(&self, k: &C) -> Result<Self> {
        let mut out = Self::zero(self.n);
        if k.is_zero() {
            return Ok(out);
        }
        for (e, c) in &self.terms {
            out.terms
                .insert(e.clone(), c.checked_mul(k).ok_or(Error::Overflow)?);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut out = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1
                    .iter()
                    .zip(e2)
                    .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
                    .collect::<Result<Vec<u32>>>()?;
                out.add_term(e, c1.checked_mul(c2).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        (0..k).try_fold(Self::one(self.n), |acc, _| acc.mul(self))
    }

    /// Applies a permutation of the variable indices to every exponent vector.
    pub fn permute_variables(&self, sigma: &[usize]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut f = vec![0; self.n];
                for (idx, &target) in sigma.iter().enumerate() {
                    f[target] = e[idx];
                }
                (f, c.clone())
            })
            .collect();
        SparsePolynomial { n: self.n, terms }
    }

    /// Sum of monomials of rc-graphs of `w`.
    pub fn schubert(w: &Permutation, n: i64) -> Result<Self> {
        if w.n() != n {
            return Err(Error::MismatchedN(w.n(), n));
        }
        let graphs = RcGraph::enumerate(w)?;
        Self::from_counted(n as usize, graphs.iter().map(RcGraph::monomial))
    }

    /// Sum of `x^Y` over semistandard tableaux of shape `mu`.
    pub fn schur(mu: &Partition, n: i64) -> Result<Self> {
        Self::from_counted(
            n.max(0) as usize,
            enumerate_ssyt(mu, n).iter().map(|y| y.weight()),
        )
    }

    fn from_counted<I: Iterator<Item = ExponentVector>>(n: usize, monomials: I) -> Result<Self> {
        let mut p = Self::zero(n);
        for e in monomials {
            p.add_term(e, C::one())?;
        }
        Ok(p)
    }

    /// Expands a nonnegative combination of Schubert polynomials.
    ///
    /// The lex-largest monomial of `S_u` is the monomial of the top rc-graph of
    /// `u`, with coefficient one, and every monomial is the top monomial of at
    /// most one permutation. So the leading term of the remainder names the
    /// next basis element and its coefficient.
    pub fn expand_in_schubert(&self) -> Result<BTreeMap<Permutation, C>> {
        let n = self.n as i64;
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        let guard = self.terms.len().saturating_mul(64).max(64);
        for _ in 0..=guard {
            let Some((e, c)) = rest.leading_term().map(|(e, c)| (e.clone(), c.clone())) else {
                return Ok(out);
            };
            if !c.is_positive() {
                return Err(Error::NotSchubertPositive(format!(
                    "leading coefficient {c} at {e:?}"
                )));
            }
            let top = RcGraph::left_justified(n, &e);
            let u = top.trace_checked()?;
            if u.length() != top.len() || !u.is_in_class() {
                return Err(Error::NotSchubertPositive(format!(
                    "left-justified graph for {e:?} is not a class rc-graph"
                )));
            }
            rest = rest.sub(&Self::schubert(&u, n)?.scale(&c)?)?;
            if out.insert(u.clone(), c).is_some() {
                return Err(Error::NotSchubertPositive(format!("{u} met twice")));
            }
        }
        Err(Error::NotSchubertPositive(
            "elimination did not terminate".into(),
        ))
    }

    /// `Σ a_u S_u`.
    pub fn from_schubert_expansion(n: i64, expansion: &BTreeMap<Permutation, C>) -> Result<Self> {
        expansion
            .iter()
            .try_fold(Self::zero(n as usize), |acc, (u, a)| {
                acc.add(&Self::schubert(u, n)?.scale(a)?)
            })
    }
}

impl<C: Coefficient> fmt::Debug for SparsePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<C: Coefficient> fmt::Display for SparsePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx > 0 {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            } else if negative {
                write!(f, "-")?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(k, &p)| match p {
                    1 => format!("x{}", k + 1),
                    _ => format!("x{}^{}", k + 1, p),
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}
