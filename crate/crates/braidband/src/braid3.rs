//! 3-string braid words, the representation `rho: B3 -> PSL2(Z)`, the
//! slope map `phi`, a complete word-problem decision procedure, and the
//! conjugator decomposition `beta' = Delta^{2N} beta sigma1^n`.
//!
//! Words are kept in freely reduced run form: adjacent letters carry
//! distinct generators, runs are merged, zero exponents deleted.  The
//! word problem is decided by the pair (rho-image, exponent sum): the
//! kernel of rho is the central subgroup generated by the full twist
//! `Delta^2`, which the exponent sum detects faithfully.

use std::fmt;

use crate::exactmath::{ExtRational, Psl2Mat};
use crate::spaces::{tb_canonical, TwoBridgeLink};
use crate::{Error, Result};

/// A generator of the 3-string braid group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    S1,
    S2,
}

/// Which matrices the generators map to under `rho`.  `Standard` sends
/// `sigma1 -> T` and `sigma2 -> STS`; `Intro` swaps the two images
/// (`sigma1 -> STS`, `sigma2 -> T`) and is kept as a compatibility
/// switch only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RhoConvention {
    #[default]
    Standard,
    Intro,
}

/// A word in the 3-string braid group, in run form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BraidWord {
    letters: Vec<(Gen, i64)>,
}

impl BraidWord {
    pub fn empty() -> Self {
        BraidWord::default()
    }

    pub fn generator_pow(gen: Gen, exp: i64) -> Self {
        let mut w = BraidWord::empty();
        w.push_run(gen, exp);
        w
    }

    /// `Delta = sigma1 sigma2 sigma1`.
    pub fn delta() -> Self {
        BraidWord::from_runs([(Gen::S1, 1), (Gen::S2, 1), (Gen::S1, 1)])
    }

    /// `(Delta^2)^n`, the central full twists.
    pub fn full_twist_pow(n: i64) -> Self {
        let d2 = BraidWord::delta().concat(&BraidWord::delta());
        let block = if n >= 0 { d2 } else { d2.inverse() };
        let mut w = BraidWord::empty();
        for _ in 0..n.unsigned_abs() {
            w = w.concat(&block);
        }
        w
    }

    pub fn sigma1_pow(n: i64) -> Self {
        BraidWord::generator_pow(Gen::S1, n)
    }

    pub fn from_runs<I: IntoIterator<Item = (Gen, i64)>>(runs: I) -> Self {
        let mut w = BraidWord::empty();
        for (g, e) in runs {
            w.push_run(g, e);
        }
        w
    }

    pub fn letters(&self) -> &[(Gen, i64)] {
        &self.letters
    }

    fn push_run(&mut self, gen: Gen, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(&mut (last_gen, ref mut last_exp)) = self.letters.last_mut() {
            if last_gen == gen {
                *last_exp += exp;
                if *last_exp == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((gen, exp));
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut w = self.clone();
        for &(g, e) in &other.letters {
            w.push_run(g, e);
        }
        w
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord::from_runs(self.letters.iter().rev().map(|&(g, e)| (g, -e)))
    }

    /// Parses the whitespace token grammar: `s1` or `s2`, optionally
    /// followed by `^` and a signed decimal integer.
    pub fn parse(text: &str) -> Result<BraidWord> {
        let mut w = BraidWord::empty();
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let start = i;
            while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            let token = &text[start..i];
            let err = |msg: &str| Error::Syntax {
                pos: start,
                msg: msg.to_string(),
            };
            let (head, exp_part) = match token.split_once('^') {
                Some((h, e)) => (h, Some(e)),
                None => (token, None),
            };
            let gen = match head {
                "s1" => Gen::S1,
                "s2" => Gen::S2,
                _ => return Err(err(&format!("unknown generator `{head}`"))),
            };
            let exp = match exp_part {
                None => 1,
                Some(e) => e
                    .parse::<i64>()
                    .map_err(|_| err(&format!("invalid exponent `{e}`")))?,
            };
            w.push_run(gen, exp);
        }
        Ok(w)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&(_, e)| e).sum()
    }

    pub fn rho(&self) -> Psl2Mat {
        self.rho_with(RhoConvention::Standard)
    }

    /// The homomorphic image in PSL2(Z), reading the word left to right.
    pub fn rho_with(&self, convention: RhoConvention) -> Psl2Mat {
        let mut m = Psl2Mat::identity();
        for &(g, e) in &self.letters {
            let twist = match (g, convention) {
                (Gen::S1, RhoConvention::Standard) | (Gen::S2, RhoConvention::Intro) => {
                    Psl2Mat::t_pow(e)
                }
                // (STS)^e = [[1,0],[-e,1]]
                (Gen::S2, RhoConvention::Standard) | (Gen::S1, RhoConvention::Intro) => {
                    Psl2Mat::new(1, 0, -e, 1)
                }
            };
            m = m * twist;
        }
        m
    }

    /// `phi = a/c` of the rho-image, projectively.
    pub fn phi(&self) -> ExtRational {
        let m = self.rho();
        ExtRational::new(m.a(), m.c())
    }

    /// The two-bridge link `b(c, a)` read from the rho-image.
    pub fn plait_closure(&self) -> TwoBridgeLink {
        let m = self.rho();
        tb_canonical(m.c(), m.a()).expect("columns of a determinant-1 matrix are coprime")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let name = match g {
                Gen::S1 => "s1",
                Gen::S2 => "s2",
            };
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Equality in B3, decided by matching rho-images and exponent sums.
pub fn words_equal(u: &BraidWord, v: &BraidWord) -> bool {
    u.rho() == v.rho() && u.exponent_sum() == v.exponent_sum()
}

/// Witness for `v = Delta^{2N} u sigma1^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjugatorDecomposition {
    /// The full-twist power `N`.
    pub full_twists: i64,
    /// The `sigma1` power `n`.
    pub sigma1_power: i64,
}

/// Decomposes `v` against `u` when their phi-values agree: `n` is read
/// off from `rho(u)^{-1} rho(v) = T^n` and `N` from the exponent sums.
pub fn conjugator_decompose(u: &BraidWord, v: &BraidWord) -> Result<ConjugatorDecomposition> {
    if u.phi() != v.phi() {
        return Err(Error::SlopeMismatch(
            u.phi().to_string(),
            v.phi().to_string(),
        ));
    }
    let m = u.rho().inverse() * v.rho();
    assert_eq!(
        (m.a(), m.c(), m.d()),
        (1, 0, 1),
        "equal phi forces a power of T"
    );
    let n = m.b();
    let diff = v.exponent_sum() - u.exponent_sum() - n;
    assert_eq!(diff % 6, 0, "exponent-sum defect must be a multiple of 6");
    Ok(ConjugatorDecomposition {
        full_twists: diff / 6,
        sigma1_power: n,
    })
}
