//! Exact arithmetic in the Heisenberg-Weyl algebra `AB = BA + 1`, carried
//! in the normal-ordered basis `B^m A^n`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{self, Alphabet};
use crate::freealg::{rational_from_parts, rational_parts, FreePoly};
use crate::sparse::{apply_ad_links, binomial, factorial, Combination, Monomial, Rational, Sign};
use crate::words::{Letter, Word};

/// The normal-ordered monomial `B^b A^a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeylMonomial {
    pub b: u32,
    pub a: u32,
}

impl WeylMonomial {
    pub fn new(b: u32, a: u32) -> Self {
        WeylMonomial { b, a }
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b
    }
}

/// Total degree first, then the power of `B`.
impl Ord for WeylMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.b).cmp(&(other.degree(), other.b))
    }
}

impl PartialOrd for WeylMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial for WeylMonomial {
    fn one() -> Self {
        WeylMonomial::new(0, 0)
    }

    /// `(B^m A^n)(B^p A^q) = B^m (A^n B^p) A^q`, with the middle factor
    /// normal-ordered by [`reorder`].
    fn product(&self, other: &Self) -> Combination<Self> {
        let (m, n) = (self.b, self.a);
        let (p, q) = (other.b, other.a);
        (0..=n.min(p))
            .map(|k| {
                let c = binomial(p, k) * binomial(n, k) * factorial(k);
                (
                    WeylMonomial::new(m + p - k, n - k + q),
                    Rational::from_integer(c),
                )
            })
            .collect()
    }
}

impl Alphabet for WeylMonomial {
    fn generator(c: char) -> Option<Self> {
        match c {
            'A' => Some(WeylMonomial::new(0, 1)),
            'B' => Some(WeylMonomial::new(1, 0)),
            _ => None,
        }
    }
}

pub type WeylPoly = Combination<WeylMonomial>;

/// `B^b A^a` as a polynomial.
pub fn mono(b: u32, a: u32) -> WeylPoly {
    WeylPoly::basis(WeylMonomial::new(b, a))
}

pub fn gen_a() -> WeylPoly {
    mono(0, 1)
}

pub fn gen_b() -> WeylPoly {
    mono(1, 0)
}

/// Normal form of `A^n B^m`:
/// `Σ_{k=0}^{min(m,n)} C(m,k) C(n,k) k! B^{m-k} A^{n-k}`.
pub fn reorder(n: u32, m: u32) -> WeylPoly {
    WeylMonomial::new(0, n).product(&WeylMonomial::new(m, 0))
}

pub fn parse_weyl(input: &str) -> Result<WeylPoly> {
    expr::parse(input)
}

/// A letter of a (not necessarily normal-ordered) word on `A`, `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeylLetter {
    A,
    B,
}

pub fn parse_weyl_word(s: &str) -> Result<Vec<WeylLetter>> {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != '*')
        .map(|c| match c {
            'A' => Ok(WeylLetter::A),
            'B' => Ok(WeylLetter::B),
            _ => Err(Error::Parse(format!("invalid letter `{c}` in A/B word"))),
        })
        .collect()
}

fn first_ab(word: &[WeylLetter]) -> Option<usize> {
    word.windows(2)
        .position(|p| p == [WeylLetter::A, WeylLetter::B])
}

/// Normal form by blind rewriting: the leftmost `AB` of some word is
/// replaced by `BA + 1` until no word contains `AB`.
pub fn brute_force_normal_form(word: &[WeylLetter]) -> WeylPoly {
    let mut pending: BTreeMap<Vec<WeylLetter>, Rational> = BTreeMap::new();
    pending.insert(word.to_vec(), Rational::from_integer(1.into()));
    let mut done = WeylPoly::zero();
    let push =
        |pending: &mut BTreeMap<Vec<WeylLetter>, Rational>, w: Vec<WeylLetter>, c: &Rational| {
            let slot = pending
                .entry(w)
                .or_insert_with(|| Rational::from_integer(0.into()));
            *slot += c;
        };
    while let Some((w, c)) = pending.pop_first() {
        if c == Rational::from_integer(0.into()) {
            continue;
        }
        match first_ab(&w) {
            Some(i) => {
                let mut swapped = w.clone();
                swapped[i] = WeylLetter::B;
                swapped[i + 1] = WeylLetter::A;
                let mut dropped = w[..i].to_vec();
                dropped.extend_from_slice(&w[i + 2..]);
                push(&mut pending, swapped, &c);
                push(&mut pending, dropped, &c);
            }
            None => {
                let b = w.iter().filter(|&&l| l == WeylLetter::B).count() as u32;
                let a = w.len() as u32 - b;
                done.add_term(WeylMonomial::new(b, a), c);
            }
        }
    }
    done
}

/// Algebra homomorphism from the free algebra sending `a ↦ A`, `b ↦ B`.
pub fn from_free(f: &FreePoly) -> WeylPoly {
    from_free_with(f, &gen_a(), &gen_b())
}

/// Algebra homomorphism from the free algebra sending `a ↦ image_a` and
/// `b ↦ image_b`.
pub fn from_free_with(f: &FreePoly, image_a: &WeylPoly, image_b: &WeylPoly) -> WeylPoly {
    f.map_linear(|w: &Word| {
        w.letters().iter().fold(WeylPoly::one(), |acc, l| match l {
            Letter::Alpha => &acc * image_a,
            Letter::Beta => &acc * image_b,
        })
    })
}

/// The automorphism `A ↦ B`, `B ↦ -A`:
/// `φ(B^m A^n) = (-1)^m · normal form of A^m B^n`.
pub fn phi(f: &WeylPoly) -> WeylPoly {
    f.map_linear(|mono: &WeylMonomial| {
        let img = reorder(mono.b, mono.a);
        if mono.b % 2 == 1 {
            -img
        } else {
            img
        }
    })
}

/// `φ^j`; since `φ^4` is the identity only `j mod 4` applications are made.
pub fn phi_power(f: &WeylPoly, j: u32) -> WeylPoly {
    (0..j % 4).fold(f.clone(), |acc, _| phi(&acc))
}

/// `φ^{-1} = φ^3`.
pub fn phi_inverse(f: &WeylPoly) -> WeylPoly {
    phi_power(f, 3)
}

pub fn apply_ad_chain(links: &[(Sign, WeylPoly)], f: &WeylPoly) -> WeylPoly {
    apply_ad_links(links, f)
}

impl fmt::Display for Combination<WeylMonomial> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = expr::render_terms(self.iter().rev(), true, |m: &WeylMonomial| {
            if m.b == 0 && m.a == 0 {
                return None;
            }
            let mut body = String::new();
            if m.b > 0 {
                body.push_str(&format!("B^{}", m.b));
            }
            if m.a > 0 {
                body.push_str(&format!("A^{}", m.a));
            }
            Some(body)
        });
        f.write_str(&s)
    }
}

impl fmt::Debug for Combination<WeylMonomial> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylPoly({self})")
    }
}

/// One term `num/den · B^m A^n` of the JSON form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylTermJson {
    pub m: u32,
    pub n: u32,
    pub num: String,
    pub den: String,
}

pub fn weyl_to_json(f: &WeylPoly) -> Vec<WeylTermJson> {
    f.iter()
        .rev()
        .map(|(k, c)| {
            let (num, den) = rational_parts(c);
            WeylTermJson {
                m: k.b,
                n: k.a,
                num,
                den,
            }
        })
        .collect()
}

pub fn weyl_from_json(terms: &[WeylTermJson]) -> Result<WeylPoly> {
    terms
        .iter()
        .map(|t| {
            Ok((
                WeylMonomial::new(t.m, t.n),
                rational_from_parts(&t.num, &t.den)?,
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_free;
    use crate::sparse::{ad_pow, commutator, rat};

    fn q(s: &str) -> WeylPoly {
        parse_weyl(s).unwrap()
    }

    #[test]
    fn reorder_examples() {
        assert_eq!(reorder(1, 1), q("BA + 1"));
        assert_eq!(reorder(4, 0), mono(0, 4));
        assert_eq!(reorder(0, 3), mono(3, 0));
        assert_eq!(reorder(2, 2), q("B^2A^2 + 4BA + 2"));
    }

    #[test]
    fn multiply_examples() {
        let f = q("3B^2A - 1/2A^3 + 2");
        assert_eq!(&WeylPoly::one() * &f, f);
        assert_eq!(&gen_a() * &gen_b(), q("BA + 1"));
        for n in 0..6 {
            assert_eq!(&mono(1, 2) * &mono(0, n), mono(1, n + 2));
            assert_eq!(
                commutator(&mono(0, n), &mono(1, 2)),
                mono(0, n + 1).scale(&rat(n as i64))
            );
        }
    }

    #[test]
    fn brute_force_examples() {
        use WeylLetter::*;
        assert_eq!(brute_force_normal_form(&[A, B]), q("BA + 1"));
        assert_eq!(brute_force_normal_form(&[B, A]), mono(1, 1));
        assert_eq!(
            brute_force_normal_form(&[A, A, B, B]),
            q("B^2A^2 + 4BA + 2")
        );
        assert_eq!(brute_force_normal_form(&[]), WeylPoly::one());
    }

    #[test]
    fn from_free_examples() {
        assert!(from_free(&parse_free("-ab + ba + 1").unwrap()).is_zero());
        for m in 0..4u32 {
            for n in 0..4u32 {
                let word = Word::from_runs(&[m as usize, n as usize]);
                assert_eq!(from_free(&FreePoly::basis(word)), reorder(m, n));
            }
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&gen_a()), gen_b());
        assert_eq!(phi(&gen_b()), -gen_a());
        assert_eq!(phi_power(&gen_a(), 2), -gen_a());
        assert_eq!(phi_power(&gen_b(), 2), -gen_b());
        assert_eq!(phi(&mono(1, 2)), q("-B^2A - 2B"));
        assert_eq!(phi_inverse(&phi(&q("B^3A + 5A^2"))), q("B^3A + 5A^2"));
    }

    #[test]
    fn weyl_lie_examples() {
        assert_eq!(commutator(&gen_a(), &gen_b()), WeylPoly::one());
        for m in 0..7u32 {
            let lhs = ad_pow(Sign::Plus, &mono(2, 1), m, &gen_b());
            assert_eq!(
                lhs,
                mono(m + 1, 0).scale(&Rational::from_integer(factorial(m)))
            );
            let lhs = ad_pow(Sign::Minus, &mono(1, 2), m, &gen_a());
            assert_eq!(
                lhs,
                mono(0, m + 1).scale(&Rational::from_integer(factorial(m)))
            );
        }
    }

    #[test]
    fn b_squared_a_does_not_raise_powers_of_a() {
        // (-ad B^2A)(A) = 2BA, not A^2: only BA^2 raises powers of A.
        assert_eq!(
            ad_pow(Sign::Minus, &mono(2, 1), 1, &gen_a()),
            mono(1, 1).scale(&rat(2))
        );
    }

    #[test]
    fn rendering_and_json() {
        assert_eq!(q("A*B").to_string(), "B^1A^1 + 1");
        assert_eq!(
            q("3B^2A - 1/2A^3 + 2").to_string(),
            "3*B^2A^1 - 1/2*A^3 + 2"
        );
        assert_eq!(WeylPoly::zero().to_string(), "0");
        assert_eq!(q("-A").to_string(), "-A^1");
        let f = q("3B^2A - 1/2A^3 + 2");
        assert_eq!(q(&f.to_string()), f);
        let json = serde_json::to_string(&weyl_to_json(&f)).unwrap();
        let back: Vec<WeylTermJson> = serde_json::from_str(&json).unwrap();
        assert_eq!(weyl_from_json(&back).unwrap(), f);
        assert!(parse_weyl("C").is_err());
        assert!(parse_weyl_word("ABX").is_err());
    }
}
