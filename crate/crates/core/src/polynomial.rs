//! Multivariate polynomials with exact rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::rational::{self, Rational};

pub type Exponent = Vec<u32>;

/// Sparse polynomial: exponent vector → nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    num_vars: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl Polynomial {
    pub fn zero(num_vars: usize) -> Self {
        Self { num_vars, terms: BTreeMap::new() }
    }

    pub fn constant(num_vars: usize, c: Rational) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_term(vec![0; num_vars], c);
        p
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, Rational::one())
    }

    /// The coordinate function `x_i`.
    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        let mut p = Self::zero(num_vars);
        p.add_term(e, Rational::one());
        p
    }

    /// `c + Σ a_i x_i`.
    pub fn affine(coeffs: &[Rational], constant: Rational) -> Self {
        let n = coeffs.len();
        let mut p = Self::constant(n, constant);
        for (i, a) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, a.clone());
        }
        p
    }

    pub fn from_terms(num_vars: usize, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Result<Self> {
        let mut p = Self::zero(num_vars);
        for (e, c) in terms {
            check_dim(num_vars, e.len())?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Total degree if every term has the same degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Terms grouped by total degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = e.iter().sum();
            out.entry(d).or_insert_with(|| Polynomial::zero(self.num_vars)).add_term(e.clone(), c.clone());
        }
        out
    }

    /// Component of highest total degree.
    pub fn top_component(&self) -> Polynomial {
        self.homogeneous_components()
            .into_iter()
            .next_back()
            .map(|(_, p)| p)
            .unwrap_or_else(|| Self::zero(self.num_vars))
    }

    pub fn scale(&self, k: &Rational) -> Polynomial {
        let mut p = Self::zero(self.num_vars);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), c * k);
        }
        p
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.num_vars, other.num_vars, "polynomial arity mismatch");
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.num_vars, other.num_vars, "polynomial arity mismatch");
        let mut p = Self::zero(self.num_vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Self::one(self.num_vars), |acc, _| acc.mul(self))
    }

    pub fn evaluate(&self, x: &[Rational]) -> Result<Rational> {
        check_dim(self.num_vars, x.len())?;
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(xi.clone(), k as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// `self(g_1, …, g_n)` where each `g_i` is a polynomial in a common set of variables.
    pub fn compose(&self, subs: &[Polynomial]) -> Result<Polynomial> {
        check_dim(self.num_vars, subs.len())?;
        let m = subs.first().map_or(0, Polynomial::num_vars);
        if subs.iter().any(|g| g.num_vars != m) {
            return Err(Error::Domain("substituted polynomials must share variables".into()));
        }
        let mut powers: Vec<Vec<Polynomial>> = subs.iter().map(|g| vec![Polynomial::one(m), g.clone()]).collect();
        let mut out = Polynomial::zero(m);
        for (e, c) in &self.terms {
            let mut t = Polynomial::constant(m, c.clone());
            for (i, &k) in e.iter().enumerate() {
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = powers[i].last().unwrap().mul(&subs[i]);
                    powers[i].push(next);
                }
                if k > 0 {
                    t = t.mul(&powers[i][k]);
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// `F(x + t)` as a polynomial in `x`.
    pub fn translate(&self, t: &[Rational]) -> Result<Polynomial> {
        let n = self.num_vars;
        let subs: Vec<Polynomial> = (0..n)
            .map(|i| {
                let mut a = vec![Rational::zero(); n];
                a[i] = Rational::one();
                Polynomial::affine(&a, t[i].clone())
            })
            .collect();
        check_dim(n, t.len())?;
        self.compose(&subs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{i}") } else { format!("x{i}^{k}") })
                .collect();
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    exp: Exponent,
    #[serde(with = "rational::serde_rational")]
    coef: Rational,
}

#[derive(Serialize, Deserialize)]
struct PolynomialWire {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    num_vars: Option<usize>,
    terms: Vec<TermWire>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms.iter().map(|(e, c)| TermWire { exp: e.clone(), coef: c.clone() }).collect();
        PolynomialWire { num_vars: Some(self.num_vars), terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = PolynomialWire::deserialize(d)?;
        let n = w
            .num_vars
            .or_else(|| w.terms.first().map(|t| t.exp.len()))
            .ok_or_else(|| D::Error::custom("empty polynomial needs \"num_vars\""))?;
        Polynomial::from_terms(n, w.terms.into_iter().map(|t| (t.exp, t.coef))).map_err(D::Error::custom)
    }
}
