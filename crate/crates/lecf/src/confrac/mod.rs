//! Simple, generalized (GCF) and rational generalized (RGCF) continued
//! fractions over exact rationals.
//!
//! A simple CF is `[b0; b1, ..., bm] = b0 + 1/(b1 + 1/(... + 1/bm))` in
//! canonical form (`b0 >= 0`, middle quotients `>= 1`, last `>= 2` when
//! `m >= 1`), so every nonnegative rational has exactly one expansion.
//! A GCF replaces the unit partial numerators by positive integers `a_i`.
//! An RGCF is built from rationals `alpha_i >= 1` with correction terms
//! `s(alpha_i) - 1` folded into each level, where `s` is the weight of the
//! simple expansion.
//!
//! Every fraction kind carries a convergent table `(C_i, D_i)` computed by
//! an integer recurrence; the tail starting at level `i` evaluates to
//! `C_i / D_i`. Evaluation goes through the recurrence, never through
//! floating point.

pub mod kernel;
pub mod minimize;

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, is_nonnegative, parse_rational_prefix};
use crate::{Int, Rational};

pub use minimize::{minimize_g, minimize_r, GcfMinimization, RgcfMinimization, SearchBounds};

/// Canonical simple continued fraction of a nonnegative rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleCf {
    quotients: Vec<Int>,
}

impl SimpleCf {
    /// Wraps an explicit quotient sequence, rejecting non-canonical input.
    pub fn new(quotients: Vec<Int>) -> Result<Self> {
        if quotients.is_empty() {
            return Err(Error::domain("a continued fraction needs at least b_0"));
        }
        if quotients[0].is_negative() {
            return Err(Error::domain("b_0 must be nonnegative"));
        }
        let m = quotients.len() - 1;
        for (i, q) in quotients.iter().enumerate().skip(1) {
            let min = if i == m { 2 } else { 1 };
            if *q < Int::from(min) {
                return Err(Error::domain(format!(
                    "quotient b_{i} = {q} violates canonical form (need >= {min})"
                )));
            }
        }
        Ok(SimpleCf { quotients })
    }

    /// The unique canonical expansion of `alpha >= 0`.
    pub fn expand(alpha: &Rational) -> Result<Self> {
        if !is_nonnegative(alpha) {
            return Err(Error::domain(format!(
                "cannot expand negative rational {}",
                format_rational(alpha)
            )));
        }
        let quotients = kernel::quotients(alpha.numer().clone(), alpha.denom().clone());
        Ok(SimpleCf { quotients })
    }

    pub fn quotients(&self) -> &[Int] {
        &self.quotients
    }

    /// Number of levels below `b_0`.
    pub fn order(&self) -> usize {
        self.quotients.len() - 1
    }

    /// Exact value, via the shared convergent recurrence.
    pub fn eval(&self) -> Rational {
        self.convergents().value()
    }

    /// Weight `S(b_0, ..., b_m)`, the sum of the quotients. Equals the step
    /// count of the subtraction form of the Euclidean algorithm.
    pub fn weight(&self) -> Int {
        self.quotients.iter().sum()
    }

    pub fn convergents(&self) -> ConvergentTable {
        let ones = vec![Int::one(); self.order()];
        ConvergentTable::from_gcf_parts(&ones, &self.quotients)
    }

    /// Quotients as machine integers, for use as chain lengths in poset
    /// constructions.
    pub fn quotients_usize(&self) -> Result<Vec<usize>> {
        self.quotients
            .iter()
            .map(|q| {
                q.to_usize().ok_or_else(|| {
                    Error::domain(format!("quotient {q} too large for a poset construction"))
                })
            })
            .collect()
    }
}

impl fmt::Display for SimpleCf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.quotients[0])?;
        for (i, q) in self.quotients.iter().enumerate().skip(1) {
            write!(f, "{}{}", if i == 1 { ";" } else { "," }, q)?;
        }
        write!(f, "]")
    }
}

/// Weight `s(alpha)` of the canonical simple expansion of `alpha >= 0`.
pub fn weight_s(alpha: &Rational) -> Result<Int> {
    Ok(SimpleCf::expand(alpha)?.weight())
}

/// Generalized continued fraction `[a_1, ..., a_m ; b_0, ..., b_m]` with
/// positive integer partial numerators and quotients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gcf {
    partial_numerators: Vec<Int>,
    quotients: Vec<Int>,
}

impl Gcf {
    pub fn new(partial_numerators: Vec<Int>, quotients: Vec<Int>) -> Result<Self> {
        if quotients.len() != partial_numerators.len() + 1 {
            return Err(Error::domain(format!(
                "a GCF with {} partial numerators needs {} quotients, got {}",
                partial_numerators.len(),
                partial_numerators.len() + 1,
                quotients.len()
            )));
        }
        if let Some(a) = partial_numerators.iter().find(|a| !a.is_positive()) {
            return Err(Error::domain(format!("partial numerator {a} must be >= 1")));
        }
        if let Some(b) = quotients.iter().find(|b| !b.is_positive()) {
            return Err(Error::domain(format!("GCF quotient {b} must be >= 1")));
        }
        Ok(Gcf {
            partial_numerators,
            quotients,
        })
    }

    /// Lifts a simple CF with all partial numerators set to 1. Requires
    /// value >= 1 so that `b_0 >= 1`.
    pub fn from_simple(cf: &SimpleCf) -> Result<Self> {
        let a = vec![Int::one(); cf.order()];
        Gcf::new(a, cf.quotients().to_vec())
    }

    pub fn partial_numerators(&self) -> &[Int] {
        &self.partial_numerators
    }

    pub fn quotients(&self) -> &[Int] {
        &self.quotients
    }

    pub fn order(&self) -> usize {
        self.partial_numerators.len()
    }

    pub fn convergents(&self) -> ConvergentTable {
        ConvergentTable::from_gcf_parts(&self.partial_numerators, &self.quotients)
    }

    pub fn eval(&self) -> Rational {
        self.convergents().value()
    }

    /// Weight `G = (sum of b_i) - (sum of a_i) + m`. Can be zero or
    /// negative for unbalanced fractions.
    pub fn weight(&self) -> Int {
        let b: Int = self.quotients.iter().sum();
        let a: Int = self.partial_numerators.iter().sum();
        b - a + Int::from(self.order())
    }

    /// Balance condition `b_i >= a_i + a_{i+1} - 1` for all `0 <= i <= m`,
    /// with the boundary convention `a_0 = a_{m+1} = 1`.
    pub fn is_balanced(&self) -> bool {
        let one = Int::one();
        let m = self.order();
        (0..=m).all(|i| {
            let a_i = if i == 0 { &one } else { &self.partial_numerators[i - 1] };
            let a_next = if i == m { &one } else { &self.partial_numerators[i] };
            self.quotients[i] >= a_i + a_next - &one
        })
    }

    /// True if `gcd(C_i, D_i) = 1` for every `1 <= i <= m`.
    pub fn is_reduced(&self) -> bool {
        self.convergents().tail_reduced()
    }
}

impl fmt::Display for Gcf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.partial_numerators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        if self.partial_numerators.is_empty() {
            write!(f, "; ")?;
        } else {
            write!(f, " ; ")?;
        }
        for (i, b) in self.quotients.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "]")
    }
}

/// Rational generalized continued fraction
/// `[alpha_1, ..., alpha_m ; b_0, ..., b_m]` where each level contributes
/// `b_{i-1} + alpha_i + alpha_i / (s(alpha_i) - 1 + <next level>)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rgcf {
    alphas: Vec<Rational>,
    quotients: Vec<Int>,
}

impl Rgcf {
    pub fn new(alphas: Vec<Rational>, quotients: Vec<Int>) -> Result<Self> {
        if quotients.len() != alphas.len() + 1 {
            return Err(Error::domain(format!(
                "an RGCF with {} alphas needs {} quotients, got {}",
                alphas.len(),
                alphas.len() + 1,
                quotients.len()
            )));
        }
        if let Some(a) = alphas.iter().find(|a| **a < Rational::one()) {
            return Err(Error::domain(format!(
                "alpha = {} must be >= 1",
                format_rational(a)
            )));
        }
        let m = quotients.len() - 1;
        for (i, b) in quotients.iter().enumerate() {
            if b.is_negative() || (i == m && b.is_zero()) {
                return Err(Error::domain(format!(
                    "RGCF quotient b_{i} = {b} out of range (b_i >= 0, b_m >= 1)"
                )));
            }
        }
        Ok(Rgcf { alphas, quotients })
    }

    pub fn alphas(&self) -> &[Rational] {
        &self.alphas
    }

    pub fn quotients(&self) -> &[Int] {
        &self.quotients
    }

    pub fn order(&self) -> usize {
        self.alphas.len()
    }

    /// Convergents by the integer recurrence
    /// `D_i = d_{i+1} (C_{i+1} + (s(alpha_{i+1}) - 1) D_{i+1})`,
    /// `C_i = b_i D_i + c_{i+1} (C_{i+1} + s(alpha_{i+1}) D_{i+1})`,
    /// with `alpha_i = c_i / d_i` reduced.
    pub fn convergents(&self) -> ConvergentTable {
        let m = self.order();
        let mut entries = vec![(Int::zero(), Int::zero()); m + 1];
        entries[m] = (self.quotients[m].clone(), Int::one());
        for i in (0..m).rev() {
            let alpha = &self.alphas[i];
            let s = SimpleCf::expand(alpha)
                .expect("alpha >= 1 by construction")
                .weight();
            let (c_next, d_next) = entries[i + 1].clone();
            let d_i = alpha.denom() * (&c_next + (&s - Int::one()) * &d_next);
            let c_i = &self.quotients[i] * &d_i + alpha.numer() * (c_next + s * d_next);
            entries[i] = (c_i, d_i);
        }
        ConvergentTable { entries }
    }

    pub fn eval(&self) -> Rational {
        self.convergents().value()
    }

    /// Weight `R = (sum of b_i) + (sum of s(alpha_i))`.
    pub fn weight(&self) -> Int {
        let mut total: Int = self.quotients.iter().sum();
        for alpha in &self.alphas {
            total += SimpleCf::expand(alpha)
                .expect("alpha >= 1 by construction")
                .weight();
        }
        total
    }
}

impl fmt::Display for Rgcf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.alphas.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_rational(a))?;
        }
        if self.alphas.is_empty() {
            write!(f, "; ")?;
        } else {
            write!(f, " ; ")?;
        }
        for (i, b) in self.quotients.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "]")
    }
}

/// Convergent table `(C_i, D_i)` for `i = 0..=m`; the tail starting at
/// level `i` evaluates to `C_i / D_i`, and `D_m = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentTable {
    entries: Vec<(Int, Int)>,
}

impl ConvergentTable {
    fn from_gcf_parts(a: &[Int], b: &[Int]) -> Self {
        let m = a.len();
        debug_assert_eq!(b.len(), m + 1);
        let mut entries = vec![(Int::zero(), Int::zero()); m + 1];
        entries[m] = (b[m].clone(), Int::one());
        for i in (0..m).rev() {
            let d_i = entries[i + 1].0.clone();
            let c_i = &b[i] * &d_i + &a[i] * &entries[i + 1].1;
            entries[i] = (c_i, d_i);
        }
        ConvergentTable { entries }
    }

    pub fn entries(&self) -> &[(Int, Int)] {
        &self.entries
    }

    /// The raw pair `(C_0, D_0)`, not reduced.
    pub fn head(&self) -> (&Int, &Int) {
        (&self.entries[0].0, &self.entries[0].1)
    }

    /// The value `C_0 / D_0`, reduced.
    pub fn value(&self) -> Rational {
        Rational::new(self.entries[0].0.clone(), self.entries[0].1.clone())
    }

    /// `gcd(C_i, D_i) = 1` for all `1 <= i <= m` (the index range in the
    /// definitions of the bounded weights g and r).
    pub fn tail_reduced(&self) -> bool {
        self.entries[1..]
            .iter()
            .all(|(c, d)| c.gcd(d).is_one())
    }

    /// As above but including `i = 0`, the stricter reading.
    pub fn fully_reduced(&self) -> bool {
        self.entries.iter().all(|(c, d)| c.gcd(d).is_one())
    }
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { s, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.s[self.pos..].starts_with(' ') {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.s[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.s[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(Error::parse(self.s, self.pos, format!("expected '{c}'")))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn parse_int(&mut self) -> Result<Int> {
        self.skip_ws();
        let (value, rest) = crate::rational::parse_int_prefix(&self.s[self.pos..], self.pos)
            .map_err(|e| rebase_parse_error(e, self.s))?;
        self.pos = self.s.len() - rest.len();
        Ok(value)
    }

    fn parse_rational(&mut self) -> Result<Rational> {
        self.skip_ws();
        let (value, rest) = parse_rational_prefix(&self.s[self.pos..], self.pos)
            .map_err(|e| rebase_parse_error(e, self.s))?;
        self.pos = self.s.len() - rest.len();
        Ok(value)
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos != self.s.len() {
            return Err(Error::parse(self.s, self.pos, "trailing characters"));
        }
        Ok(())
    }
}

fn rebase_parse_error(e: Error, full: &str) -> Error {
    match e {
        Error::Parse { pos, msg, .. } => Error::parse(full, pos, msg),
        other => other,
    }
}

/// Parses `[b0]` or `[b0;b1,...,bm]`; the result must be canonical.
pub fn parse_simple_cf(s: &str) -> Result<SimpleCf> {
    let mut cur = Cursor::new(s);
    cur.expect('[')?;
    let mut quotients = vec![cur.parse_int()?];
    if cur.eat(';') {
        loop {
            quotients.push(cur.parse_int()?);
            if !cur.eat(',') {
                break;
            }
        }
    }
    cur.expect(']')?;
    cur.finish()?;
    SimpleCf::new(quotients)
}

fn parse_bracketed_pair<T>(
    s: &str,
    mut parse_front: impl FnMut(&mut Cursor) -> Result<T>,
) -> Result<(Vec<T>, Vec<Int>)> {
    let mut cur = Cursor::new(s);
    cur.expect('[')?;
    let mut front = Vec::new();
    if cur.peek() != Some(';') {
        loop {
            front.push(parse_front(&mut cur)?);
            if !cur.eat(',') {
                break;
            }
        }
    }
    cur.expect(';')?;
    let mut back = vec![cur.parse_int()?];
    while cur.eat(',') {
        back.push(cur.parse_int()?);
    }
    cur.expect(']')?;
    cur.finish()?;
    Ok((front, back))
}

/// Parses `[a1,...,am ; b0,...,bm]` (`[; b0]` when `m = 0`).
pub fn parse_gcf(s: &str) -> Result<Gcf> {
    let (a, b) = parse_bracketed_pair(s, |cur| cur.parse_int())?;
    Gcf::new(a, b)
}

/// Parses `[alpha1,...,alpham ; b0,...,bm]` with the alphas in `p/q` form.
pub fn parse_rgcf(s: &str) -> Result<Rgcf> {
    let (alphas, b) = parse_bracketed_pair(s, |cur| cur.parse_rational())?;
    Rgcf::new(alphas, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rational_from_u64 as rat;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn expansion_of_worked_examples() {
        assert_eq!(SimpleCf::expand(&rat(20, 7)).unwrap().quotients(), &ints(&[2, 1, 6]));
        assert_eq!(SimpleCf::expand(&rat(5, 1)).unwrap().quotients(), &ints(&[5]));
        assert_eq!(SimpleCf::expand(&rat(173, 56)).unwrap().quotients(), &ints(&[3, 11, 5]));
        assert_eq!(SimpleCf::expand(&rat(13, 7)).unwrap().quotients(), &ints(&[1, 1, 6]));
        assert_eq!(SimpleCf::expand(&rat(0, 1)).unwrap().quotients(), &ints(&[0]));
        assert!(SimpleCf::expand(&Rational::new(Int::from(-1), Int::from(2))).is_err());
    }

    #[test]
    fn eval_inverts_expansion_on_examples() {
        assert_eq!(SimpleCf::new(ints(&[2, 1, 6])).unwrap().eval(), rat(20, 7));
        assert_eq!(SimpleCf::new(ints(&[7])).unwrap().eval(), rat(7, 1));
        assert_eq!(SimpleCf::new(ints(&[0, 1, 4])).unwrap().eval(), rat(4, 5));
    }

    #[test]
    fn canonical_form_is_enforced() {
        assert!(SimpleCf::new(ints(&[2, 1, 1])).is_err()); // last quotient 1
        assert!(SimpleCf::new(ints(&[2, 0, 3])).is_err());
        assert!(SimpleCf::new(ints(&[-1])).is_err());
        assert!(SimpleCf::new(ints(&[0])).is_ok()); // the expansion of 0
    }

    #[test]
    fn weights_of_known_fractions() {
        assert_eq!(weight_s(&rat(20, 7)).unwrap(), Int::from(9));
        assert_eq!(weight_s(&rat(3, 2)).unwrap(), Int::from(3));
        assert_eq!(weight_s(&rat(13, 7)).unwrap(), Int::from(8));
        assert_eq!(weight_s(&rat(173, 56)).unwrap(), Int::from(19));
        assert_eq!(weight_s(&rat(0, 1)).unwrap(), Int::from(0));
    }

    #[test]
    fn gcf_convergent_table() {
        let g = Gcf::new(ints(&[2, 1]), ints(&[2, 2, 3])).unwrap();
        let table = g.convergents();
        let expect: Vec<(Int, Int)> = vec![
            (Int::from(20), Int::from(7)),
            (Int::from(7), Int::from(3)),
            (Int::from(3), Int::from(1)),
        ];
        assert_eq!(table.entries(), &expect[..]);
        assert_eq!(g.eval(), rat(20, 7));
        assert_eq!(g.weight(), Int::from(6));
        assert!(g.is_balanced());
        assert!(g.is_reduced());
    }

    #[test]
    fn gcf_m_zero_and_one_level() {
        let g = Gcf::new(vec![], ints(&[4])).unwrap();
        assert_eq!(g.convergents().entries(), &[(Int::from(4), Int::from(1))]);
        assert_eq!(g.eval(), rat(4, 1));
        assert_eq!(g.weight(), Int::from(4));

        let g = Gcf::new(ints(&[3]), ints(&[4, 4])).unwrap();
        assert_eq!(g.eval(), rat(19, 4));
    }

    #[test]
    fn simple_cf_lift_matches_gcf_special_case() {
        let cf = SimpleCf::expand(&rat(20, 7)).unwrap();
        let g = Gcf::from_simple(&cf).unwrap();
        assert_eq!(g.eval(), rat(20, 7));
        assert_eq!(g.weight(), cf.weight());
        assert!(g.is_balanced());
        assert!(g.is_reduced());
    }

    #[test]
    fn unbalanced_gcf_detected() {
        let g = Gcf::new(ints(&[3]), ints(&[1, 1])).unwrap();
        assert!(!g.is_balanced()); // b_0 = 1 < 1 + 3 - 1
    }

    #[test]
    fn reduced_check_on_one_level() {
        // gcd(C_1, D_1) = gcd(2, 1) = 1
        let g = Gcf::new(ints(&[2]), ints(&[2, 2])).unwrap();
        assert!(g.is_reduced());
        assert_eq!(g.convergents().entries(), &[(Int::from(6), Int::from(2)), (Int::from(2), Int::from(1))]);
        assert!(!g.convergents().fully_reduced()); // 6/2 is not
    }

    #[test]
    fn rgcf_worked_examples() {
        let r = Rgcf::new(vec![rat(3, 2)], ints(&[1, 3])).unwrap();
        let table = r.convergents();
        assert_eq!(
            table.entries(),
            &[(Int::from(28), Int::from(10)), (Int::from(3), Int::from(1))]
        );
        assert_eq!(r.eval(), rat(14, 5));
        assert_eq!(r.weight(), Int::from(7));
        assert!(table.tail_reduced());
        assert!(!table.fully_reduced()); // 28/10 is not reduced

        let r = Rgcf::new(vec![rat(13, 7)], ints(&[1, 1])).unwrap();
        let table = r.convergents();
        assert_eq!(
            table.entries(),
            &[(Int::from(173), Int::from(56)), (Int::from(1), Int::from(1))]
        );
        assert_eq!(r.eval(), rat(173, 56));
        assert_eq!(r.weight(), Int::from(10));

        let r = Rgcf::new(vec![], ints(&[9])).unwrap();
        assert_eq!(r.eval(), rat(9, 1));
        assert_eq!(r.weight(), Int::from(9));
    }

    #[test]
    fn rgcf_validation() {
        assert!(Rgcf::new(vec![rat(1, 2)], ints(&[1, 1])).is_err()); // alpha < 1
        assert!(Rgcf::new(vec![rat(3, 2)], ints(&[1, 0])).is_err()); // b_m = 0
        assert!(Rgcf::new(vec![rat(3, 2)], ints(&[0, 2])).is_ok()); // b_0 = 0 fine
    }

    #[test]
    fn display_and_parse_roundtrip() {
        let cf = SimpleCf::expand(&rat(20, 7)).unwrap();
        assert_eq!(cf.to_string(), "[2;1,6]");
        assert_eq!(parse_simple_cf("[2;1,6]").unwrap(), cf);
        assert_eq!(parse_simple_cf(" [ 2 ; 1 , 6 ] ").unwrap(), cf);
        assert_eq!(parse_simple_cf("[5]").unwrap().to_string(), "[5]");

        let g = Gcf::new(ints(&[2, 1]), ints(&[2, 2, 3])).unwrap();
        assert_eq!(g.to_string(), "[2,1 ; 2,2,3]");
        assert_eq!(parse_gcf("[2,1 ; 2,2,3]").unwrap(), g);
        assert_eq!(parse_gcf("[2,1;2,2,3]").unwrap(), g);
        let g0 = Gcf::new(vec![], ints(&[4])).unwrap();
        assert_eq!(g0.to_string(), "[; 4]");
        assert_eq!(parse_gcf("[;4]").unwrap(), g0);

        let r = Rgcf::new(vec![rat(3, 2)], ints(&[1, 3])).unwrap();
        assert_eq!(r.to_string(), "[3/2 ; 1,3]");
        assert_eq!(parse_rgcf("[3/2 ; 1,3]").unwrap(), r);
        assert_eq!(parse_rgcf("[3/2;1,3]").unwrap(), r);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_simple_cf("[2;1,x]") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_gcf("[2,1 ; 2,2,3] trailing").is_err());
        assert!(parse_rgcf("[3/2 ; ]").is_err());
    }
}
