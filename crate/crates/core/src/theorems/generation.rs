//! Replays the constructive proof that `A`, `B`, `BA²` and `B²A` generate
//! the Heisenberg-Weyl algebra as a Lie algebra.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::rc::Rc;

use super::{require, VerificationReport};
use crate::error::Result;
use crate::sparse::{binomial, commutator, factorial, Rational};
use crate::weyl::{gen_a, gen_b, mono, WeylPoly};

/// The only leaves a generation tree may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A,
    B,
    BA2,
    B2A,
}

impl Generator {
    pub fn value(self) -> WeylPoly {
        match self {
            Generator::A => gen_a(),
            Generator::B => gen_b(),
            Generator::BA2 => mono(1, 2),
            Generator::B2A => mono(2, 1),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::A => "A",
            Generator::B => "B",
            Generator::BA2 => "BA^2",
            Generator::B2A => "B^2A",
        })
    }
}

/// A Lie expression over the four generators: leaves, brackets and linear
/// combinations. Subtrees are shared.
#[derive(Debug)]
pub enum LieExpr {
    Leaf(Generator),
    Bracket(Rc<LieExpr>, Rc<LieExpr>),
    Sum(Vec<(Rational, Rc<LieExpr>)>),
}

impl LieExpr {
    /// The set of generators used as leaves.
    pub fn leaves(&self) -> BTreeSet<Generator> {
        let mut out = BTreeSet::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut BTreeSet<Generator>) {
        match self {
            LieExpr::Leaf(g) => {
                out.insert(*g);
            }
            LieExpr::Bracket(x, y) => {
                x.collect_leaves(out);
                y.collect_leaves(out);
            }
            LieExpr::Sum(terms) => terms.iter().for_each(|(_, t)| t.collect_leaves(out)),
        }
    }

    /// Evaluates in the Weyl algebra, sharing work between shared subtrees.
    pub fn evaluate(self: &Rc<Self>) -> WeylPoly {
        Evaluator::default().eval(self)
    }
}

#[derive(Default)]
struct Evaluator {
    cache: HashMap<*const LieExpr, WeylPoly>,
}

impl Evaluator {
    fn eval(&mut self, e: &Rc<LieExpr>) -> WeylPoly {
        let key = Rc::as_ptr(e);
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        let v = match &**e {
            LieExpr::Leaf(g) => g.value(),
            LieExpr::Bracket(x, y) => {
                let (x, y) = (self.eval(x), self.eval(y));
                commutator(&x, &y)
            }
            LieExpr::Sum(terms) => {
                let mut acc = WeylPoly::zero();
                for (c, t) in terms {
                    let v = self.eval(t);
                    acc.add_scaled(&v, c);
                }
                acc
            }
        };
        self.cache.insert(key, v.clone());
        v
    }
}

fn leaf(g: Generator) -> Rc<LieExpr> {
    Rc::new(LieExpr::Leaf(g))
}

fn bracket(x: Rc<LieExpr>, y: Rc<LieExpr>) -> Rc<LieExpr> {
    Rc::new(LieExpr::Bracket(x, y))
}

fn scaled(c: Rational, x: Rc<LieExpr>) -> Rc<LieExpr> {
    Rc::new(LieExpr::Sum(vec![(c, x)]))
}

fn inverse_factorial(m: u32) -> Rational {
    Rational::from_integer(factorial(m)).recip()
}

/// Builds the trees for `B^s A^t`, reusing the trees of smaller exponents.
#[derive(Default)]
struct Builder {
    memo: HashMap<(u32, u32), Rc<LieExpr>>,
}

impl Builder {
    /// `B^{m+1} = (1/m!)(ad B²A)^m(B)`.
    fn power_of_b(&mut self, e: u32) -> Rc<LieExpr> {
        if let Some(t) = self.memo.get(&(e, 0)) {
            return t.clone();
        }
        let m = e - 1;
        let mut t = leaf(Generator::B);
        for _ in 0..m {
            t = bracket(leaf(Generator::B2A), t);
        }
        let t = scaled(inverse_factorial(m), t);
        self.memo.insert((e, 0), t.clone());
        t
    }

    /// `A^{m+1} = (1/m!)(-ad BA²)^m(A)`.
    fn power_of_a(&mut self, e: u32) -> Rc<LieExpr> {
        if let Some(t) = self.memo.get(&(0, e)) {
            return t.clone();
        }
        let m = e - 1;
        let minus_one = -Rational::from_integer(1.into());
        let mut t = leaf(Generator::A);
        for _ in 0..m {
            t = scaled(minus_one.clone(), bracket(leaf(Generator::BA2), t));
        }
        let t = scaled(inverse_factorial(m), t);
        self.memo.insert((0, e), t.clone());
        t
    }

    /// `B^s A^t`. For `s, t >= 1` this is
    /// `(1/((s+1)(t+1))) ([A^{t+1}, B^{s+1}] - Σ_{k>=2} C(s+1,k) C(t+1,k) k! B^{s+1-k} A^{t+1-k})`.
    fn tree(&mut self, s: u32, t: u32) -> Rc<LieExpr> {
        match (s, t) {
            (0, 0) => {
                if let Some(x) = self.memo.get(&(0, 0)) {
                    return x.clone();
                }
                let x = bracket(leaf(Generator::A), leaf(Generator::B));
                self.memo.insert((0, 0), x.clone());
                x
            }
            (0, t) => self.power_of_a(t),
            (s, 0) => self.power_of_b(s),
            (s, t) => {
                if let Some(x) = self.memo.get(&(s, t)) {
                    return x.clone();
                }
                let c = Rational::new(1.into(), ((s + 1) * (t + 1)).into());
                let top = bracket(self.power_of_a(t + 1), self.power_of_b(s + 1));
                let mut terms = vec![(c.clone(), top)];
                for k in 2..=(s + 1).min(t + 1) {
                    let coeff = binomial(s + 1, k) * binomial(t + 1, k) * factorial(k);
                    let sub = self.tree(s + 1 - k, t + 1 - k);
                    terms.push((-(c.clone() * Rational::from_integer(coeff)), sub));
                }
                let x = Rc::new(LieExpr::Sum(terms));
                self.memo.insert((s, t), x.clone());
                x
            }
        }
    }
}

/// The Lie expression over `A`, `B`, `BA²`, `B²A` that the proof builds for
/// `B^s A^t`.
pub fn generation_tree(s: u32, t: u32) -> Rc<LieExpr> {
    Builder::default().tree(s, t)
}

/// The recursion as printed with `[B^{s+1}, A^{t+1}]` and a `+` before the
/// sum, evaluated directly.
fn printed_recursion(s: u32, t: u32) -> WeylPoly {
    let c = Rational::new(1.into(), ((s + 1) * (t + 1)).into());
    let mut out = commutator(&mono(s + 1, 0), &mono(0, t + 1)).scale(&c);
    for k in 2..=(s + 1).min(t + 1) {
        let coeff = binomial(s + 1, k) * binomial(t + 1, k) * factorial(k);
        out.add_scaled(
            &mono(s + 1 - k, t + 1 - k),
            &(c.clone() * Rational::from_integer(coeff)),
        );
    }
    out
}

/// Checks the power formulas for every exponent up to `n + 1` and the tree
/// for `B^s A^t` for every `s + t <= n`.
pub fn verify_generation(n: u32) -> Result<VerificationReport> {
    require(n >= 1, || "generation needs bound >= 1".to_string())?;
    let mut report = VerificationReport::new("generation", vec![n as u64]);
    let mut builder = Builder::default();
    let allowed: BTreeSet<Generator> = [Generator::A, Generator::B, Generator::BA2, Generator::B2A]
        .into_iter()
        .collect();

    for m in 0..=n {
        let b_tree = builder.power_of_b(m + 1);
        report.check_eq(
            || format!("B^{} = (1/{m}!)(ad B^2A)^{m}(B)", m + 1),
            &mono(m + 1, 0),
            &b_tree.evaluate(),
        );
        let a_tree = builder.power_of_a(m + 1);
        report.check_eq(
            || format!("A^{} = (1/{m}!)(-ad BA^2)^{m}(A)", m + 1),
            &mono(0, m + 1),
            &a_tree.evaluate(),
        );
    }

    let mut printed_negated = 0usize;
    let mut total = 0usize;
    for deg in 0..=n {
        for s in 0..=deg {
            let t = deg - s;
            let tree = builder.tree(s, t);
            let leaves = tree.leaves();
            report.check(leaves.is_subset(&allowed), || super::Failure {
                input: format!("leaves of the tree for B^{s}A^{t}"),
                expected: "subset of {A, B, BA^2, B^2A}".to_string(),
                actual: format!("{leaves:?}"),
            });
            report.check_eq(
                || format!("B^{s}A^{t} rebuilt from A, B, BA^2, B^2A"),
                &mono(s, t),
                &tree.evaluate(),
            );
            total += 1;
            if printed_recursion(s, t) == -mono(s, t) {
                printed_negated += 1;
            }
        }
    }
    report.note(format!(
        "the recursion written as (1/((s+1)(t+1)))[B^(s+1), A^(t+1)] + sum evaluates to \
         -B^sA^t for {printed_negated} of {total} exponent pairs; the trees use \
         [A^(t+1), B^(s+1)] and subtract the sum"
    ));
    Ok(report)
}
