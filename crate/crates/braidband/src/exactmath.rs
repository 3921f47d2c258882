//! Exact integers, extended rationals, Bezout complements, PSL2(Z)
//! matrices, slopes, and the negative continued-fraction engine.
//!
//! A negative continued fraction `[a1, ..., an] = -1/(a1 - 1/(a2 - ...))`
//! carries the associated matrix `S T^a1 S T^a2 S ... T^an S` in PSL2(Z),
//! where `S = [[0,-1],[1,0]]` and `T = [[1,1],[0,1]]`.  Division by zero
//! is handled projectively throughout (`1/0 = inf`, `1/inf = 0`), so
//! evaluation is total on the extended rationals.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Nonnegative gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Extended gcd: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i64, 0i64);
    let (mut y0, mut y1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Inverse of `a` modulo `m` (`m >= 1`), in `[0, m)`.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    assert!(m >= 1);
    let (g, x, _) = ext_gcd(a.rem_euclid(m), m);
    if g == 1 {
        Some(x.rem_euclid(m))
    } else {
        None
    }
}

fn to_i64(v: i128) -> i64 {
    i64::try_from(v).expect("integer overflow in exact arithmetic")
}

/// An element of `Q ∪ {inf}`: reduced `numerator/denominator` with
/// `denominator >= 0`, infinity stored as `1/0`, zero as `0/1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtRational {
    num: i64,
    den: i64,
}

impl ExtRational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(num != 0 || den != 0, "0/0 is not an extended rational");
        if den == 0 {
            return ExtRational { num: 1, den: 0 };
        }
        let g = gcd(num, den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        ExtRational { num: n, den: d }
    }

    fn from_i128(num: i128, den: i128) -> Self {
        assert!(num != 0 || den != 0, "0/0 is not an extended rational");
        if den == 0 {
            return ExtRational { num: 1, den: 0 };
        }
        let g = {
            let (mut a, mut b) = (num.abs(), den.abs());
            while b != 0 {
                let t = a % b;
                a = b;
                b = t;
            }
            a
        };
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        ExtRational {
            num: to_i64(n),
            den: to_i64(d),
        }
    }

    pub fn from_int(n: i64) -> Self {
        ExtRational { num: n, den: 1 }
    }

    pub fn zero() -> Self {
        ExtRational { num: 0, den: 1 }
    }

    pub fn infinity() -> Self {
        ExtRational { num: 1, den: 0 }
    }

    pub fn numerator(self) -> i64 {
        self.num
    }

    pub fn denominator(self) -> i64 {
        self.den
    }

    pub fn is_infinite(self) -> bool {
        self.den == 0
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_integer(self) -> bool {
        self.den == 1
    }

    /// Projective reciprocal: `1/0 = inf`, `1/inf = 0`.
    pub fn recip(self) -> Self {
        ExtRational::new(self.den, self.num)
    }

    /// Ceiling of a finite value.
    pub fn ceil(self) -> i64 {
        assert!(!self.is_infinite());
        let q = self.num.div_euclid(self.den);
        if self.num.rem_euclid(self.den) != 0 {
            q + 1
        } else {
            q
        }
    }
}

impl std::ops::Neg for ExtRational {
    type Output = ExtRational;
    fn neg(self) -> ExtRational {
        ExtRational::new(-self.num, self.den)
    }
}

impl std::ops::Add for ExtRational {
    type Output = ExtRational;
    fn add(self, rhs: ExtRational) -> ExtRational {
        ExtRational::from_i128(
            self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl std::ops::Sub for ExtRational {
    type Output = ExtRational;
    fn sub(self, rhs: ExtRational) -> ExtRational {
        self + (-rhs)
    }
}

impl std::ops::Mul for ExtRational {
    type Output = ExtRational;
    fn mul(self, rhs: ExtRational) -> ExtRational {
        ExtRational::from_i128(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 0 {
            write!(f, "1/0")
        } else if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// An element of PSL2(Z): an integer matrix `[[a,b],[c,d]]` of
/// determinant 1, identified with its negation.  The stored
/// representative is canonical: the first nonzero entry in the scan
/// order `(a, c, b, d)` is positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Psl2Mat {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl Psl2Mat {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        let det = a as i128 * d as i128 - b as i128 * c as i128;
        assert_eq!(det, 1, "matrix [[{a},{b}],[{c},{d}]] must have determinant 1");
        let lead = [a, c, b, d].into_iter().find(|&x| x != 0).unwrap();
        if lead < 0 {
            Psl2Mat {
                a: -a,
                b: -b,
                c: -c,
                d: -d,
            }
        } else {
            Psl2Mat { a, b, c, d }
        }
    }

    pub fn identity() -> Self {
        Psl2Mat::new(1, 0, 0, 1)
    }

    /// `S = [[0,-1],[1,0]]`.
    pub fn s() -> Self {
        Psl2Mat::new(0, -1, 1, 0)
    }

    /// `T = [[1,1],[0,1]]`.
    pub fn t() -> Self {
        Psl2Mat::t_pow(1)
    }

    /// `T^n = [[1,n],[0,1]]`.
    pub fn t_pow(n: i64) -> Self {
        Psl2Mat::new(1, n, 0, 1)
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn inverse(&self) -> Self {
        Psl2Mat::new(self.d, -self.b, -self.c, self.a)
    }
}

impl std::ops::Mul for Psl2Mat {
    type Output = Psl2Mat;
    fn mul(self, rhs: Psl2Mat) -> Psl2Mat {
        let (a1, b1, c1, d1) = (self.a as i128, self.b as i128, self.c as i128, self.d as i128);
        let (a2, b2, c2, d2) = (rhs.a as i128, rhs.b as i128, rhs.c as i128, rhs.d as i128);
        Psl2Mat::new(
            to_i64(a1 * a2 + b1 * c2),
            to_i64(a1 * b2 + b1 * d2),
            to_i64(c1 * a2 + d1 * c2),
            to_i64(c1 * b2 + d1 * d2),
        )
    }
}

impl fmt::Display for Psl2Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// A coprime ordered pair `(p, q)` up to overall sign, with extended
/// rational value `q/p`.  Canonical representative: `p > 0`, or
/// `(p, q) = (0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if gcd(p, q) != 1 {
            return Err(Error::NotCoprime(p, q));
        }
        if p < 0 || (p == 0 && q < 0) {
            Ok(Slope { p: -p, q: -q })
        } else {
            Ok(Slope { p, q })
        }
    }

    /// The slope whose value `q/p` is the given extended rational.
    pub fn from_value(v: ExtRational) -> Self {
        Slope {
            p: v.denominator(),
            q: v.numerator(),
        }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// The value `q/p`, with `inf` when `p = 0`.
    pub fn value(&self) -> ExtRational {
        ExtRational::new(self.q, self.p)
    }

    /// The slope `(p, -q)`.
    pub fn mirror(&self) -> Self {
        Slope::new(self.p, -self.q).unwrap()
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.q, self.p)
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Parses `<q>/<p>`; `1/0` denotes the slope `(0, 1)`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |pos: usize, msg: &str| Error::Syntax {
            pos,
            msg: msg.to_string(),
        };
        let (qs, ps) = s
            .split_once('/')
            .ok_or_else(|| err(0, "expected <q>/<p>"))?;
        let q: i64 = qs
            .trim()
            .parse()
            .map_err(|_| err(0, "invalid numerator"))?;
        let p: i64 = ps
            .trim()
            .parse()
            .map_err(|_| err(qs.len() + 1, "invalid denominator"))?;
        Slope::new(p, q)
    }
}

/// The canonical Bezout complement of a slope: the pair `(p', q')` with
/// `q*p' - p*q' = 1`, picking `0 <= p' < |p|` when `p != 0` and
/// `(1, 0)` when `p = 0`.
pub fn bezout_complement(s: &Slope) -> (i64, i64) {
    let (p, q) = (s.p(), s.q());
    if p == 0 {
        return (1, 0);
    }
    let pp = mod_inverse(q, p).expect("q is invertible mod p for a coprime slope");
    let qq = (q as i128 * pp as i128 - 1) / p as i128;
    (pp, to_i64(qq))
}

/// Requested length parity for a continued-fraction expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Any,
    Odd,
    Even,
}

/// A finite integer sequence `(a1, ..., an)`, `n >= 0`, read as a
/// negative continued fraction.  Value and matrix are derived, never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ContFrac {
    digits: Vec<i64>,
}

impl ContFrac {
    pub fn new(digits: Vec<i64>) -> Self {
        ContFrac { digits }
    }

    pub fn digits(&self) -> &[i64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// `[a1, ..., an] = -1/(a1 - 1/(a2 - ...))`, projectively; the empty
    /// sequence evaluates to 0.
    pub fn eval(&self) -> ExtRational {
        let mut inner: Option<ExtRational> = None;
        for &a in self.digits.iter().rev() {
            let a = ExtRational::from_int(a);
            inner = Some(match inner {
                None => a,
                Some(g) => a - g.recip(),
            });
        }
        match inner {
            None => ExtRational::zero(),
            Some(g) => -g.recip(),
        }
    }

    /// The associated matrix `S T^a1 S T^a2 S ... T^an S`; the empty
    /// sequence gives `S` itself.
    pub fn matrix(&self) -> Psl2Mat {
        let mut m = Psl2Mat::s();
        for &a in &self.digits {
            m = m * Psl2Mat::t_pow(a) * Psl2Mat::s();
        }
        m
    }

    /// Expands a value into digits by the ceiling recursion on
    /// `g = -1/v`: `a_i = ceil(g_i)`, `g_{i+1} = 1/(a_i - g_i)`,
    /// stopping once `g_i` is an integer.  A length-parity mismatch is
    /// repaired by replacing the trailing digit `an` with `(an+1, 1)`,
    /// which preserves the value; the odd expansion of 0 is `(0, 1, 1)`.
    pub fn expand(v: ExtRational, parity: Parity) -> ContFrac {
        let mut digits = Vec::new();
        if !v.is_zero() {
            let mut g = -v.recip();
            loop {
                if g.is_integer() {
                    digits.push(g.numerator());
                    break;
                }
                let a = g.ceil();
                digits.push(a);
                g = (ExtRational::from_int(a) - g).recip();
            }
        }
        let want_odd = match parity {
            Parity::Any => return ContFrac { digits },
            Parity::Odd => true,
            Parity::Even => false,
        };
        if digits.len() % 2 != usize::from(want_odd) {
            match digits.pop() {
                Some(last) => {
                    digits.push(last + 1);
                    digits.push(1);
                }
                None => digits = vec![0, 1, 1],
            }
        }
        ContFrac { digits }
    }
}

impl From<Vec<i64>> for ContFrac {
    fn from(digits: Vec<i64>) -> Self {
        ContFrac { digits }
    }
}

impl fmt::Display for ContFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// The four entry quotients of the associated matrix `[[a,b],[c,d]]`:
/// `a/c`, `b/d`, `d/c`, and `b/a`, which match the evaluations of the
/// sequence, its truncation, its reversal, and its reversed truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KmRelations {
    pub a_over_c: ExtRational,
    pub b_over_d: ExtRational,
    pub d_over_c: ExtRational,
    pub b_over_a: ExtRational,
}

pub fn km_relations(f: &ContFrac) -> Result<KmRelations> {
    if f.is_empty() {
        return Err(Error::EmptyContFrac);
    }
    let m = f.matrix();
    Ok(KmRelations {
        a_over_c: ExtRational::new(m.a(), m.c()),
        b_over_d: ExtRational::new(m.b(), m.d()),
        d_over_c: ExtRational::new(m.d(), m.c()),
        b_over_a: ExtRational::new(m.b(), m.a()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cf(digits: &[i64]) -> ContFrac {
        ContFrac::new(digits.to_vec())
    }

    fn rat(n: i64, d: i64) -> ExtRational {
        ExtRational::new(n, d)
    }

    #[test]
    fn bezout_examples() {
        assert_eq!(bezout_complement(&Slope::new(2, 3).unwrap()), (1, 1));
        assert_eq!(bezout_complement(&Slope::new(0, 1).unwrap()), (1, 0));
        assert_eq!(bezout_complement(&Slope::new(1, 0).unwrap()), (0, -1));
    }

    #[test]
    fn bezout_identity_holds() {
        for p in -60..=60 {
            for q in -60..=60 {
                if gcd(p, q) != 1 {
                    continue;
                }
                let s = Slope::new(p, q).unwrap();
                let (pp, qq) = bezout_complement(&s);
                assert_eq!(s.q() * pp - s.p() * qq, 1, "slope {s}");
                if s.p() != 0 {
                    assert!(0 <= pp && pp < s.p());
                }
                // determinism
                assert_eq!(bezout_complement(&s), (pp, qq));
            }
        }
    }

    #[test]
    fn cf_eval_examples() {
        assert_eq!(cf(&[0, 2, 2]).eval(), rat(3, 2));
        assert_eq!(cf(&[-1, -5]).eval(), rat(5, 4));
        assert_eq!(cf(&[]).eval(), ExtRational::zero());
        assert_eq!(cf(&[0]).eval(), ExtRational::infinity());
        assert_eq!(cf(&[-1, -7]).eval(), rat(7, 6));
    }

    #[test]
    fn cf_matrix_examples() {
        assert_eq!(cf(&[]).matrix(), Psl2Mat::s());
        assert_eq!(cf(&[0, 2, 2]).matrix(), Psl2Mat::new(3, -2, 2, -1));
        let m = cf(&[2, 3]).matrix();
        assert_eq!(m, Psl2Mat::new(-3, 1, 5, -2));
        assert_eq!(rat(m.a(), m.c()), cf(&[2, 3]).eval());
    }

    #[test]
    fn cf_expand_examples() {
        assert_eq!(
            ContFrac::expand(rat(3, 2), Parity::Odd).digits(),
            &[0, 2, 2]
        );
        assert!(ContFrac::expand(ExtRational::zero(), Parity::Any).is_empty());
        assert_eq!(
            ContFrac::expand(ExtRational::infinity(), Parity::Odd).digits(),
            &[0]
        );
        assert_eq!(
            ContFrac::expand(ExtRational::infinity(), Parity::Even).digits(),
            &[1, 1]
        );
        let odd_zero = ContFrac::expand(ExtRational::zero(), Parity::Odd);
        assert_eq!(odd_zero.len() % 2, 1);
        assert_eq!(odd_zero.eval(), ExtRational::zero());
    }

    #[test]
    fn km_examples() {
        let r = km_relations(&cf(&[2, 3])).unwrap();
        assert_eq!(r.a_over_c, rat(-3, 5));
        assert_eq!(r.b_over_d, rat(-1, 2));
        assert_eq!(r.d_over_c, rat(-2, 5));
        assert_eq!(r.b_over_a, rat(-1, 3));
        for k in [-4, -1, 1, 3, 9] {
            let r = km_relations(&cf(&[k])).unwrap();
            assert_eq!(r.a_over_c, rat(-1, k));
            assert_eq!(r.d_over_c, rat(-1, k));
        }
        assert_eq!(km_relations(&cf(&[0, 2, 2])).unwrap().a_over_c, rat(3, 2));
        assert_eq!(km_relations(&cf(&[])), Err(Error::EmptyContFrac));
    }

    #[test]
    fn psl2_canonicalization() {
        // M and -M compare equal
        assert_eq!(Psl2Mat::new(-1, 0, 1, -1), Psl2Mat::new(1, 0, -1, 1));
        assert_eq!(Psl2Mat::new(0, -1, 1, 0), Psl2Mat::new(0, 1, -1, 0));
        assert_eq!(Psl2Mat::s() * Psl2Mat::s(), Psl2Mat::identity());
    }

    #[test]
    fn slope_canonical_and_parse() {
        assert_eq!(Slope::new(-2, 3).unwrap(), Slope::new(2, -3).unwrap());
        assert_eq!(Slope::new(0, -1).unwrap(), Slope::new(0, 1).unwrap());
        assert!(Slope::new(2, 4).is_err());
        assert_eq!("3/2".parse::<Slope>().unwrap(), Slope::new(2, 3).unwrap());
        assert_eq!("1/0".parse::<Slope>().unwrap(), Slope::new(0, 1).unwrap());
        assert_eq!(
            "-3/2".parse::<Slope>().unwrap(),
            Slope::new(2, -3).unwrap()
        );
        assert!("x/2".parse::<Slope>().is_err());
    }

    #[test]
    fn roundtrip_small_grid() {
        for p in -50i64..=50 {
            for q in -50i64..=50 {
                if p == 0 && q == 0 {
                    continue;
                }
                let v = rat(q, p);
                for parity in [Parity::Any, Parity::Odd, Parity::Even] {
                    let f = ContFrac::expand(v, parity);
                    assert_eq!(f.eval(), v, "v={v} parity={parity:?} f={f}");
                    match parity {
                        Parity::Odd => assert_eq!(f.len() % 2, 1),
                        Parity::Even => assert_eq!(f.len() % 2, 0),
                        Parity::Any => {}
                    }
                }
            }
        }
    }

    fn digit_seq() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-9i64..=9, 0..10)
    }

    proptest! {
        #[test]
        fn km_first_relation(digits in prop::collection::vec(-9i64..=9, 1..=10)) {
            let f = cf(&digits);
            let m = f.matrix();
            prop_assert_eq!(rat(m.a(), m.c()), f.eval());
            let r = km_relations(&f).unwrap();
            let trunc = cf(&digits[..digits.len() - 1]);
            let rev: Vec<i64> = digits.iter().rev().cloned().collect();
            let rev_trunc: Vec<i64> = digits[1..].iter().rev().cloned().collect();
            prop_assert_eq!(r.b_over_d, trunc.eval());
            prop_assert_eq!(r.d_over_c, cf(&rev).eval());
            prop_assert_eq!(r.b_over_a, cf(&rev_trunc).eval());
        }

        #[test]
        fn concat_identity(x in digit_seq(), y in digit_seq(), a in -9i64..=9, b in -9i64..=9) {
            let mut lhs = x.clone();
            lhs.extend([a, 0, b]);
            lhs.extend(&y);
            let mut rhs = x.clone();
            rhs.push(a + b);
            rhs.extend(&y);
            prop_assert_eq!(cf(&lhs).eval(), cf(&rhs).eval());
        }

        #[test]
        fn parity_fix_preserves_value(digits in prop::collection::vec(-9i64..=9, 1..=10)) {
            let mut fixed = digits.clone();
            let last = fixed.pop().unwrap();
            fixed.push(last + 1);
            fixed.push(1);
            prop_assert_eq!(cf(&digits).eval(), cf(&fixed).eval());
        }

        #[test]
        fn matrix_mul_associative(x in digit_seq(), y in digit_seq(), z in digit_seq()) {
            let (a, b, c) = (cf(&x).matrix(), cf(&y).matrix(), cf(&z).matrix());
            prop_assert_eq!((a * b) * c, a * (b * c));
        }
    }
}
