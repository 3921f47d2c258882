//! Canonical forms and equivalence tests for two-bridge links, lens
//! spaces, connected sums `b(r,1) # b(s,1)`, simple knots, and the
//! chain-link surgery description of lens spaces.
//!
//! `b(p,q)` and `b(p',q')` are the same link iff `p' = p` and
//! `q' = q^{+-1} mod p`, or the same after negating both pairs.  Lens
//! spaces follow the parallel orientation-preserving classification;
//! mirrors (`q -> -q`) are kept distinct.

use std::fmt;

use crate::exactmath::{gcd, mod_inverse, ContFrac, ExtRational, Parity};
use crate::{Error, Result};

fn canonical_pair(p: i64, q: i64) -> Result<(i64, i64)> {
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    let (p, q) = if p < 0 { (-p, -q) } else { (p, q) };
    if p == 0 {
        Ok((0, 1))
    } else if p == 1 {
        Ok((1, 0))
    } else {
        let q1 = q.rem_euclid(p);
        let q2 = mod_inverse(q1, p).expect("q is invertible mod p");
        Ok((p, q1.min(q2)))
    }
}

/// A two-bridge link in canonical form: `p >= 0`; `b(0,1)` is the
/// two-component unlink and `b(1,0)` the unknot; for `p >= 2` the
/// representative `q` is `min(q mod p, q^{-1} mod p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoBridgeLink {
    p: i64,
    q: i64,
}

/// Canonicalizes `(p, q)`; rejects non-coprime input.
pub fn tb_canonical(p: i64, q: i64) -> Result<TwoBridgeLink> {
    let (p, q) = canonical_pair(p, q)?;
    Ok(TwoBridgeLink { p, q })
}

impl TwoBridgeLink {
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// 2 when `p` is even (including the unlink `b(0,1)`), else 1.
    pub fn component_count(&self) -> u8 {
        if self.p % 2 == 0 {
            2
        } else {
            1
        }
    }
}

impl fmt::Display for TwoBridgeLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b({},{})", self.p, self.q)
    }
}

/// `|H1|` of a closed manifold in this catalog: finite cyclic order or
/// infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum H1Order {
    Finite(i64),
    Infinite,
}

impl H1Order {
    pub fn is_infinite(&self) -> bool {
        matches!(self, H1Order::Infinite)
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            H1Order::Finite(n) => serde_json::json!(n),
            H1Order::Infinite => serde_json::json!("infinite"),
        }
    }
}

impl fmt::Display for H1Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H1Order::Finite(n) => write!(f, "{n}"),
            H1Order::Infinite => write!(f, "infinite"),
        }
    }
}

/// A lens space `L(p,q)` (the result of `-p/q` surgery on the unknot),
/// canonicalized under orientation-preserving homeomorphism only.
/// `L(0,1)` is `S1 x S2` and `L(1,0)` is `S3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LensSpace {
    p: i64,
    q: i64,
}

/// Canonicalizes `(p, q)`; rejects non-coprime input.
pub fn lens_canonical(p: i64, q: i64) -> Result<LensSpace> {
    let (p, q) = canonical_pair(p, q)?;
    Ok(LensSpace { p, q })
}

/// Orientation-preserving equivalence of canonical representatives.
pub fn lens_equiv(x: &LensSpace, y: &LensSpace) -> bool {
    x == y
}

/// Parameter-identical transfer to the double branched cover.
pub fn lens_from_two_bridge(l: &TwoBridgeLink) -> LensSpace {
    lens_canonical(l.p, l.q).expect("canonical two-bridge parameters are coprime")
}

impl LensSpace {
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_s3(&self) -> bool {
        self.p == 1
    }

    pub fn is_s1_x_s2(&self) -> bool {
        self.p == 0
    }

    /// The mirror `L(p,-q)`, canonicalized; not identified with `self`.
    pub fn mirror(&self) -> LensSpace {
        lens_canonical(self.p, -self.q).unwrap()
    }

    /// `|H1(L(p,q))| = |p|`, infinite for `S1 x S2`.
    pub fn h1_order(&self) -> H1Order {
        if self.p == 0 {
            H1Order::Infinite
        } else {
            H1Order::Finite(self.p)
        }
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == 0 {
            write!(f, "S1xS2")
        } else if self.p == 1 {
            write!(f, "S3")
        } else {
            write!(f, "L({},{})", self.p, self.q)
        }
    }
}

/// Chain-link coefficients for `L(p,q)`: a digit sequence whose
/// continued-fraction value is `q/p`.
pub fn lens_chain_description(l: &LensSpace) -> ContFrac {
    ContFrac::expand(ExtRational::new(l.q, l.p), Parity::Any)
}

/// The connected sum `b(r,1) # b(s,1)`, stored with `r <= s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectedSumLink {
    r: i64,
    s: i64,
}

impl ConnectedSumLink {
    pub fn new(r: i64, s: i64) -> Self {
        let (r, s) = if r <= s { (r, s) } else { (s, r) };
        ConnectedSumLink { r, s }
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    /// `|H1| = |r*s|` when both factors are nonzero, infinite otherwise.
    pub fn h1_order(&self) -> H1Order {
        if self.r == 0 || self.s == 0 {
            H1Order::Infinite
        } else {
            H1Order::Finite((self.r * self.s).abs())
        }
    }

    /// The ambient double cover `L(r,1) # L(s,1)` as a label, with `S3`
    /// summands absorbed and `L(0,1)` rendered `S1xS2`.
    pub fn ambient_label(&self) -> String {
        let summand = |t: i64| {
            if t == 0 {
                "S1xS2".to_string()
            } else {
                format!("L({t},1)")
            }
        };
        let parts: Vec<String> = [self.r, self.s]
            .into_iter()
            .filter(|t| t.abs() != 1)
            .map(summand)
            .collect();
        if parts.is_empty() {
            "S3".to_string()
        } else {
            parts.join("#")
        }
    }
}

impl fmt::Display for ConnectedSumLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},1)#L({},1)", self.r, self.s)
    }
}

/// The simple knot `K(p,q,k)` in `L(p,q)`, with `k` reduced mod `|p|`
/// when `|p| >= 2`; trivial when `k = 0` or `|p| <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SimpleKnot {
    p: i64,
    q: i64,
    k: i64,
}

/// Builds `K(p,q,k)`; rejects non-coprime `(p, q)`.
pub fn simple_knot(p: i64, q: i64, k: i64) -> Result<SimpleKnot> {
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    let k = if p.abs() >= 2 { k.rem_euclid(p.abs()) } else { k };
    Ok(SimpleKnot { p, q, k })
}

impl SimpleKnot {
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// The normalized `k`, the coefficient of the homology class
    /// `k * [K(p,q,1)]`.
    pub fn homology_coefficient(&self) -> i64 {
        self.k
    }

    pub fn is_trivial(&self) -> bool {
        self.k == 0 || self.p.abs() <= 1
    }

    /// True for the Klein bottle knot `K(4k, 2k-1, 2k)`.
    pub fn is_klein_bottle(&self) -> bool {
        let pp = self.p.abs();
        pp >= 4 && pp % 4 == 0 && self.k == pp / 2 && self.q.rem_euclid(pp) == pp / 2 - 1
    }
}

impl fmt::Display for SimpleKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{},{})", self.p, self.q, self.k)
    }
}
