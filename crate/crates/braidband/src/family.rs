//! The two-parameter knot family over a slope: ambient connected sum,
//! surgery-target lens space, chain-link surgery description,
//! known-family identification, and catalog enumeration.

use std::collections::BTreeSet;

use serde_json::json;

use crate::banding::band_connected_sum;
use crate::exactmath::{ContFrac, Parity, Slope};
use crate::spaces::{lens_from_two_bridge, ConnectedSumLink, H1Order, LensSpace};
use crate::Result;

/// The knot determined by integers `(r, s)` and a slope, living in
/// `L(r,1) # L(s,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KnotSpec {
    pub r: i64,
    pub s: i64,
    pub slope: Slope,
}

/// A surgery description on the minimally twisted chain link `C_{2n}`:
/// integer coefficients on `2n - 1` consecutive components, one
/// component left unfilled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSurgeryDescription {
    pub chain_length: usize,
    pub coefficients: Vec<i64>,
    pub unfilled_index: usize,
}

impl KnotSpec {
    pub fn new(r: i64, s: i64, slope: Slope) -> Self {
        KnotSpec { r, s, slope }
    }

    /// The ambient manifold label `L(r,1)#L(s,1)` with `S3` summands
    /// absorbed.
    pub fn ambient(&self) -> String {
        ConnectedSumLink::new(self.r, self.s).ambient_label()
    }

    /// The lens space the integral surgery produces, computed through
    /// the oracle-backed banding and the double-cover transfer.
    pub fn target_lens(&self) -> Result<LensSpace> {
        Ok(lens_from_two_bridge(
            &band_connected_sum(self.r, self.s, &self.slope)?.link,
        ))
    }

    /// Chain-link surgery description: the odd expansion
    /// `(b_k, ..., b_1)` of the slope value gives the coefficients
    /// `(b_1, ..., b_k + r, s, -b_k, ..., -b_1)` on `C_{2(k+1)}`, with
    /// the last component unfilled.
    pub fn chain_description(&self) -> ChainSurgeryDescription {
        let digits = ContFrac::expand(self.slope.value(), Parity::Odd);
        // digits are (b_k, ..., b_1)
        let bs: Vec<i64> = digits.digits().iter().rev().cloned().collect();
        let k = bs.len();
        let mut coefficients = bs[..k - 1].to_vec();
        coefficients.push(bs[k - 1] + self.r);
        coefficients.push(self.s);
        coefficients.extend(bs.iter().rev().map(|b| -b));
        ChainSurgeryDescription {
            chain_length: 2 * (k + 1),
            coefficients,
            unfilled_index: 2 * (k + 1),
        }
    }

    /// Labels of the previously known families this spec lands in.
    pub fn family_tags(&self) -> Vec<String> {
        let mut tags = Vec::new();
        let (p, q) = (self.slope.p(), self.slope.q());
        if (self.r, self.s) == (-3, -2) {
            // slope (p0-1, p0) up to overall sign
            if q - p == 1 {
                tags.push(format!("EM-Wu({q})"));
            } else if p - q == 1 {
                tags.push(format!("EM-Wu({})", -q));
            }
        }
        if (p, q) == (2, 3) {
            tags.push(format!("Kang({},{})", self.r, self.s + 2));
        }
        if self.r == self.s && self.r.abs() == 1 {
            tags.push("Berge-VII".to_string());
        }
        if self.r == -self.s && self.r.abs() == 1 {
            tags.push("Berge-VIII".to_string());
        }
        if (self.r == 0 && self.s.abs() == 1) || (self.s == 0 && self.r.abs() == 1) {
            tags.push("GOFK".to_string());
        }
        tags.sort();
        tags
    }
}

/// One catalog row: a spec with all of its derived surgery data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub spec: KnotSpec,
    pub ambient: String,
    pub target: LensSpace,
    pub target_order: H1Order,
    pub chain: ChainSurgeryDescription,
    pub families: Vec<String>,
}

impl CatalogEntry {
    /// Builds the entry; with `paper_sign` the target is computed for
    /// the mirrored slope `(p, -q)`, reproducing the printed constants
    /// of the closed form.
    pub fn build(spec: &KnotSpec, paper_sign: bool) -> Result<CatalogEntry> {
        let eff_slope = if paper_sign {
            spec.slope.mirror()
        } else {
            spec.slope
        };
        let banding = band_connected_sum(spec.r, spec.s, &eff_slope)?;
        let target = lens_from_two_bridge(&banding.link);
        Ok(CatalogEntry {
            spec: *spec,
            ambient: spec.ambient(),
            target,
            target_order: target.h1_order(),
            chain: spec.chain_description(),
            families: spec.family_tags(),
        })
    }

    /// Key-sorted JSON object (serde_json maps are ordered).
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "ambient": self.ambient,
            "chain": {
                "coefficients": self.chain.coefficients,
                "length": self.chain.chain_length,
                "unfilled_index": self.chain.unfilled_index,
            },
            "families": self.families,
            "r": self.spec.r,
            "s": self.spec.s,
            "slope": { "p": self.spec.slope.p(), "q": self.spec.slope.q() },
            "target": { "p": self.target.p(), "q": self.target.q() },
            "target_order": self.target_order.to_json(),
        })
    }
}

/// Enumerates every odd-length digit sequence within the bounds, forms
/// slopes from their values, dedupes by canonical slope, and emits
/// entries sorted by (|target order|, slope); infinite orders sort
/// last.  Output is deterministic for identical inputs.
pub fn enumerate_catalog(
    r: i64,
    s: i64,
    cf_max_len: usize,
    cf_max_digit: i64,
    paper_sign: bool,
) -> Result<Vec<CatalogEntry>> {
    assert!(cf_max_len >= 1 && cf_max_digit >= 1, "bounds must be >= 1");
    let mut seen = BTreeSet::new();
    let mut entries = Vec::new();
    let mut len = 1;
    while len <= cf_max_len {
        let mut digits = vec![-cf_max_digit; len];
        loop {
            let slope = Slope::from_value(ContFrac::new(digits.clone()).eval());
            if seen.insert(slope) {
                entries.push(CatalogEntry::build(&KnotSpec::new(r, s, slope), paper_sign)?);
            }
            // odometer over [-D, D]^len
            let mut i = 0;
            loop {
                if i == len {
                    break;
                }
                if digits[i] < cf_max_digit {
                    digits[i] += 1;
                    break;
                }
                digits[i] = -cf_max_digit;
                i += 1;
            }
            if i == len {
                break;
            }
        }
        len += 2;
    }
    entries.sort_by_key(|e| {
        let (inf, ord) = match e.target_order {
            H1Order::Finite(n) => (false, n.abs()),
            H1Order::Infinite => (true, 0),
        };
        (inf, ord, e.spec.slope)
    });
    Ok(entries)
}
