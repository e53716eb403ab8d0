//! Sparse exact-rational linear combinations over an ordered basis.
//!
//! Both the free algebra (basis: words) and the Heisenberg-Weyl algebra
//! (basis: normal-ordered monomials) are carried by [`Combination`]. A basis
//! type that knows how to multiply two of its elements implements
//! [`Monomial`], which turns the combinations into an associative algebra
//! with commutators and adjoint chains.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    // Each partial product is itself a binomial coefficient, so the division
    // is exact.
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// A basis element of an associative algebra with identity.
pub trait Monomial: Ord + Clone {
    fn one() -> Self;
    fn product(&self, other: &Self) -> Combination<Self>;
}

/// A finite linear combination `Σ c_k · k` with no stored zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Combination<K> {
    terms: BTreeMap<K, Rational>,
}

impl<K> Default for Combination<K> {
    fn default() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn get(&self, key: &K) -> Option<&Rational> {
        self.terms.get(key)
    }

    /// Terms in ascending basis order.
    pub fn iter(&self) -> btree_map::Iter<'_, K, Rational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Rational> {
        self.terms.keys()
    }

    pub fn max_key(&self) -> Option<&K> {
        self.terms.keys().next_back()
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &Self, factor: &Rational) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * factor);
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Combination {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        }
    }

    /// Keeps only the terms whose key satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        Combination {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<L: Ord + Clone>(
        &self,
        mut image: impl FnMut(&K) -> Combination<L>,
    ) -> Combination<L> {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&image(k), c);
        }
        out
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn max_abs_coeff(&self) -> Rational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for Combination<K> {
    fn from_iter<T: IntoIterator<Item = (K, Rational)>>(iter: T) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Monomial> Combination<K> {
    pub fn one() -> Self {
        Self::basis(K::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(K::one(), c)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<K: Ord + Clone> AddAssign<&Combination<K>> for Combination<K> {
    fn add_assign(&mut self, rhs: &Combination<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&Combination<K>> for Combination<K> {
    fn sub_assign(&mut self, rhs: &Combination<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c);
        }
    }
}

impl<K: Ord + Clone> Add for &Combination<K> {
    type Output = Combination<K>;
    fn add(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Add for Combination<K> {
    type Output = Combination<K>;
    fn add(mut self, rhs: Combination<K>) -> Combination<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for &Combination<K> {
    type Output = Combination<K>;
    fn sub(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for Combination<K> {
    type Output = Combination<K>;
    fn sub(mut self, rhs: Combination<K>) -> Combination<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for &Combination<K> {
    type Output = Combination<K>;
    fn neg(self) -> Combination<K> {
        Combination {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl<K: Ord + Clone> Neg for Combination<K> {
    type Output = Combination<K>;
    fn neg(self) -> Combination<K> {
        -&self
    }
}

impl<K: Monomial> Mul for &Combination<K> {
    type Output = Combination<K>;
    fn mul(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = Combination::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                let coeff = c1 * c2;
                out.add_scaled(&k1.product(k2), &coeff);
            }
        }
        out
    }
}

impl<K: Monomial> Mul for Combination<K> {
    type Output = Combination<K>;
    fn mul(self, rhs: Combination<K>) -> Combination<K> {
        &self * &rhs
    }
}

/// `[f, g] = fg - gf`.
pub fn commutator<K: Monomial>(f: &Combination<K>, g: &Combination<K>) -> Combination<K> {
    &(f * g) - &(g * f)
}

/// Sign attached to an adjoint map in an ad-chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn to_rational(self) -> Rational {
        match self {
            Sign::Plus => rat(1),
            Sign::Minus => rat(-1),
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// `(sign · ad x)(f) = sign · [x, f]`.
pub fn ad<K: Monomial>(sign: Sign, x: &Combination<K>, f: &Combination<K>) -> Combination<K> {
    let c = commutator(x, f);
    match sign {
        Sign::Plus => c,
        Sign::Minus => -c,
    }
}

/// `(sign · ad x)^times (f)`.
pub fn ad_pow<K: Monomial>(
    sign: Sign,
    x: &Combination<K>,
    times: u32,
    f: &Combination<K>,
) -> Combination<K> {
    (0..times).fold(f.clone(), |acc, _| ad(sign, x, &acc))
}

/// Applies `(s_1 ad x_1)(s_2 ad x_2)...(s_k ad x_k)` to `f`; the last link
/// acts first.
pub fn apply_ad_links<K: Monomial>(
    links: &[(Sign, Combination<K>)],
    f: &Combination<K>,
) -> Combination<K> {
    links
        .iter()
        .rev()
        .fold(f.clone(), |acc, (sign, x)| ad(*sign, x, &acc))
}
