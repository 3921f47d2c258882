//! Machine-checkable property suites over the whole library, with
//! seeded pseudo-randomness for reproducible runs.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::banding::{band_formula, band_formula_with, conjugator_for_slope};
use crate::braid3::{conjugator_decompose, words_equal, BraidWord, Gen};
use crate::exactmath::{
    bezout_complement, gcd, km_relations, ContFrac, ExtRational, Parity, Slope,
};
use crate::family::enumerate_catalog;
use crate::spaces::{lens_canonical, lens_equiv, tb_canonical};

pub const DEFAULT_SEED: u64 = 1;

/// Outcome of one suite run; empty `failures` means the suite passed.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
}

#[derive(Debug, Clone)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl VerifyReport {
    fn new(suite: &str) -> Self {
        VerifyReport {
            suite: suite.to_string(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, input: impl Fn() -> String, expected: &str, actual: &str) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure {
                input: input(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }
}

/// All canonical slopes with `|p|, |q| <= bound`.
pub fn slope_grid(bound: i64) -> Vec<Slope> {
    let mut out = vec![Slope::new(0, 1).unwrap()];
    for p in 1..=bound {
        for q in -bound..=bound {
            if gcd(p, q) == 1 {
                out.push(Slope::new(p, q).unwrap());
            }
        }
    }
    out
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize, max_exp: i64) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    BraidWord::from_runs((0..len).map(|_| {
        let gen = if rng.gen_bool(0.5) { Gen::S1 } else { Gen::S2 };
        let mut e = 0;
        while e == 0 {
            e = rng.gen_range(-max_exp..=max_exp);
        }
        (gen, e)
    }))
}

fn random_digits(rng: &mut ChaCha8Rng, min_len: usize, max_len: usize, max_digit: i64) -> Vec<i64> {
    let len = rng.gen_range(min_len..=max_len);
    (0..len).map(|_| rng.gen_range(-max_digit..=max_digit)).collect()
}

/// Closed-form banding vs conjugation oracle: for seeded random words
/// and every slope on the grid, the quadratic formula must reproduce
/// the pair read off the literal matrix conjugation.
pub fn thm11_oracle(seed: u64, max_len: usize, words: usize, slope_bound: i64) -> VerifyReport {
    let mut report = VerifyReport::new("thm11-oracle");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let slopes = slope_grid(slope_bound);
    let conjugators: Vec<_> = slopes
        .iter()
        .map(|s| {
            let g = conjugator_for_slope(s).rho();
            (g.inverse(), g)
        })
        .collect();
    for _ in 0..words {
        let w = random_word(&mut rng, max_len, 6);
        let m = w.rho();
        for (s, (ginv, g)) in slopes.iter().zip(&conjugators) {
            let conj = *ginv * m * *g;
            let oracle = {
                let (t, u) = (conj.c(), conj.a());
                if t < 0 || (t == 0 && u < 0) {
                    (-t, -u)
                } else {
                    (t, u)
                }
            };
            let formula = band_formula(&m, s);
            report.check(
                formula == oracle,
                || format!("beta={w}, slope={s}"),
                &format!("{oracle:?}"),
                &format!("{formula:?}"),
            );
        }
    }
    report
}

/// All Bezout representatives `(p'+kp, q'+kq)`, `k in [-5,5]`, must
/// give the identical canonical two-bridge link, and shift the second
/// raw entry by `-k` times the first.
pub fn bezout_invariance(seed: u64, max_len: usize, words: usize, slope_bound: i64) -> VerifyReport {
    let mut report = VerifyReport::new("bezout");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let slopes = slope_grid(slope_bound);
    for _ in 0..words {
        let w = random_word(&mut rng, max_len, 6);
        let m = w.rho();
        for s in &slopes {
            let (pp, qq) = bezout_complement(s);
            let base = band_formula(&m, s);
            let base_link = tb_canonical(base.0, base.1).unwrap();
            for k in -5..=5 {
                let shifted = band_formula_with(&m, s.p(), s.q(), pp + k * s.p(), qq + k * s.q());
                let ok = tb_canonical(shifted.0, shifted.1).unwrap() == base_link
                    && shifted.0 == base.0
                    && (shifted.1 - base.1) % shifted.0.max(1) == 0;
                report.check(
                    ok,
                    || format!("beta={w}, slope={s}, k={k}"),
                    &format!("{base_link}"),
                    &format!("{shifted:?}"),
                );
            }
        }
    }
    report
}

/// The four entry-quotient relations of the associated matrix against
/// independent continued-fraction evaluations.
pub fn km_lemma(seed: u64, cases: usize, max_len: usize, max_digit: i64) -> VerifyReport {
    let mut report = VerifyReport::new("km-lemma");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cases {
        let digits = random_digits(&mut rng, 1, max_len, max_digit);
        let f = ContFrac::new(digits.clone());
        let r = km_relations(&f).unwrap();
        let rev: Vec<i64> = digits.iter().rev().cloned().collect();
        let rev_trunc: Vec<i64> = digits[1..].iter().rev().cloned().collect();
        let expected = [
            f.eval(),
            ContFrac::new(digits[..digits.len() - 1].to_vec()).eval(),
            ContFrac::new(rev).eval(),
            ContFrac::new(rev_trunc).eval(),
        ];
        let actual = [r.a_over_c, r.b_over_d, r.d_over_c, r.b_over_a];
        report.check(
            expected == actual,
            || format!("digits={digits:?}"),
            &format!("{expected:?}"),
            &format!("{actual:?}"),
        );
    }
    report
}

/// `[-1,-p] = p/(p-1)` for `p in [2, bound]`, and `[0,2,2] = 3/2`.
pub fn thm14_anchors(bound: i64) -> VerifyReport {
    let mut report = VerifyReport::new("thm14");
    for p in 2..=bound {
        let v = ContFrac::new(vec![-1, -p]).eval();
        report.check(
            v == ExtRational::new(p, p - 1),
            || format!("[-1,-{p}]"),
            &format!("{}/{}", p, p - 1),
            &v.to_string(),
        );
    }
    let v = ContFrac::new(vec![0, 2, 2]).eval();
    report.check(
        v == ExtRational::new(3, 2),
        || "[0,2,2]".to_string(),
        "3/2",
        &v.to_string(),
    );
    report
}

/// `[x, a, 0, b, y] = [x, a+b, y]` for seeded random pieces.
pub fn concat_identity(seed: u64, cases: usize) -> VerifyReport {
    let mut report = VerifyReport::new("concat");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cases {
        let x = random_digits(&mut rng, 0, 5, 9);
        let y = random_digits(&mut rng, 0, 5, 9);
        let a = rng.gen_range(-9..=9);
        let b = rng.gen_range(-9..=9);
        let mut lhs = x.clone();
        lhs.extend([a, 0, b]);
        lhs.extend(&y);
        let mut rhs = x.clone();
        rhs.push(a + b);
        rhs.extend(&y);
        let (l, r) = (ContFrac::new(lhs).eval(), ContFrac::new(rhs).eval());
        report.check(
            l == r,
            || format!("x={x:?} a={a} b={b} y={y:?}"),
            &r.to_string(),
            &l.to_string(),
        );
    }
    report
}

/// Expansion round trips and parity fixes for all `q/p` on the grid.
pub fn cf_roundtrip(bound: i64) -> VerifyReport {
    let mut report = VerifyReport::new("cf-roundtrip");
    for p in -bound..=bound {
        for q in -bound..=bound {
            if p == 0 && q == 0 {
                continue;
            }
            let v = ExtRational::new(q, p);
            for parity in [Parity::Any, Parity::Odd, Parity::Even] {
                let f = ContFrac::expand(v, parity);
                let parity_ok = match parity {
                    Parity::Any => true,
                    Parity::Odd => !f.len().is_multiple_of(2),
                    Parity::Even => f.len().is_multiple_of(2),
                };
                report.check(
                    f.eval() == v && parity_ok,
                    || format!("v={v} parity={parity:?}"),
                    &v.to_string(),
                    &format!("{f} = {}", f.eval()),
                );
            }
        }
    }
    report
}

/// Braid-relation rewrites never change the (rho, exponent-sum) pair,
/// and conjugator decomposition round-trips.
pub fn word_problem(seed: u64, rewrites: usize, decompositions: usize) -> VerifyReport {
    let mut report = VerifyReport::new("word-problem");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let left = BraidWord::from_runs([(Gen::S1, 1), (Gen::S2, 1), (Gen::S1, 1)]);
    let right = BraidWord::from_runs([(Gen::S2, 1), (Gen::S1, 1), (Gen::S2, 1)]);
    for _ in 0..rewrites {
        let u = random_word(&mut rng, 6, 6);
        let v = random_word(&mut rng, 6, 6);
        let w1 = u.concat(&left).concat(&v);
        let w2 = u.concat(&right).concat(&v);
        report.check(
            words_equal(&w1, &w2),
            || format!("u={u}, v={v}"),
            "equal words",
            "rewrite changed (rho, exponent-sum)",
        );
    }
    for _ in 0..decompositions {
        let w = random_word(&mut rng, 12, 6);
        let big_n = rng.gen_range(-10..=10);
        let n = rng.gen_range(-10..=10);
        let moved = BraidWord::full_twist_pow(big_n)
            .concat(&w)
            .concat(&BraidWord::sigma1_pow(n));
        let d = conjugator_decompose(&w, &moved).unwrap();
        report.check(
            (d.full_twists, d.sigma1_power) == (big_n, n),
            || format!("w={w}, N={big_n}, n={n}"),
            &format!("({big_n}, {n})"),
            &format!("({}, {})", d.full_twists, d.sigma1_power),
        );
    }
    report
}

/// Catalog enumeration is byte-deterministic and contains the expected
/// slope-(2,3) row.
pub fn catalog_determinism() -> VerifyReport {
    let mut report = VerifyReport::new("catalog-determinism");
    let render = || -> String {
        let mut out = String::new();
        for e in enumerate_catalog(5, 7, 3, 4, false).unwrap() {
            out.push_str(&e.to_json().to_string());
            out.push('\n');
        }
        out
    };
    let (a, b) = (render(), render());
    report.check(
        a == b,
        || "enumerate --r 5 --s 7 --cf-len 3 --cf-digit 4, two runs".to_string(),
        "byte-identical output",
        "outputs differ",
    );
    let hit = enumerate_catalog(5, 7, 3, 4, false)
        .unwrap()
        .into_iter()
        .find(|e| e.spec.slope == Slope::new(2, 3).unwrap());
    let ok = hit
        .as_ref()
        .map(|e| lens_equiv(&e.target, &lens_canonical(283, 183).unwrap()))
        .unwrap_or(false);
    report.check(
        ok,
        || "slope (2,3) entry".to_string(),
        "target equivalent to L(283,183)",
        &hit.map(|e| e.target.to_string()).unwrap_or_else(|| "missing".into()),
    );
    report
}

/// With `(r, s) = (0, 0)` every target order on the slope grid is
/// infinite.
pub fn degenerate_family(slope_bound: i64) -> VerifyReport {
    let mut report = VerifyReport::new("degenerate-family");
    for s in slope_grid(slope_bound) {
        let order = crate::family::KnotSpec::new(0, 0, s)
            .target_lens()
            .unwrap()
            .h1_order();
        report.check(
            order.is_infinite(),
            || format!("slope={s}"),
            "infinite",
            &order.to_string(),
        );
    }
    report
}

/// With `(r, s) = (1, 1)` the target order is `p^2 + p q + q^2`.
pub fn berge_cross_check(slope_bound: i64) -> VerifyReport {
    let mut report = VerifyReport::new("berge");
    for s in slope_grid(slope_bound) {
        let order = crate::family::KnotSpec::new(1, 1, s)
            .target_lens()
            .unwrap()
            .h1_order();
        let (p, q) = (s.p(), s.q());
        let expected = (p * p + p * q + q * q).abs();
        report.check(
            order == crate::spaces::H1Order::Finite(expected),
            || format!("slope={s}"),
            &expected.to_string(),
            &order.to_string(),
        );
    }
    report
}
