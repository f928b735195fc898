//! Picks the right method for a graph and returns its b-chromatic number.

use serde::Serialize;

use crate::bcolor::{b_coloring_with_good_set, BResult, Construction, CONSTRUCTION_GIRTH};
use crate::density::{density_profile, DensityProfile};
use crate::error::{Error, Result};
use crate::goodset::{find_good_set_unchecked, has_good_set_unchecked, GoodSet, CHARACTERIZATION_GIRTH};
use crate::graph::{girth, GirthValue, Graph};
use crate::oracle::{exact_b_coloring_with, find_b_coloring_with, OracleConfig};

/// How the reported value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Built from a good set on a graph of girth at least 9.
    Construction,
    /// Exhaustive search.
    Oracle,
    /// No good set at girth at least 8 forces `m - 1`; no coloring produced.
    #[serde(rename = "nogoodset-theorem")]
    NoGoodSetTheorem,
    /// Only the upper bound `m` is known.
    BoundsOnly,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Construction => "construction",
            Method::Oracle => "oracle",
            Method::NoGoodSetTheorem => "nogoodset-theorem",
            Method::BoundsOnly => "bounds-only",
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct PipelineConfig {
    pub oracle: OracleConfig,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub girth: GirthValue,
    pub profile: DensityProfile,
    /// `None` when the girth is below 8 and the question is not decided.
    pub has_good_set: Option<bool>,
    pub good_set: Option<GoodSet>,
    /// `None` only for [`Method::BoundsOnly`].
    pub chi_b: Option<usize>,
    pub method: Method,
    /// A witnessing b-coloring with `chi_b` colors, when one was produced.
    pub coloring: Option<BResult>,
    /// Set when the coloring came from the good-set construction.
    pub construction: Option<Construction>,
}

impl Outcome {
    pub fn upper_bound(&self) -> usize {
        self.profile.m
    }
}

/// Girth, density profile and, at girth at least 8, good-set existence with
/// a witness. Leaves `chi_b` unset with [`Method::BoundsOnly`].
pub fn analyze_structure(g: &Graph) -> Result<Outcome> {
    let girth = girth(g);
    let profile = density_profile(g)?;
    let (has_good_set, good_set) = if girth.is_at_least(CHARACTERIZATION_GIRTH) {
        let has = has_good_set_unchecked(g, &profile);
        let found = if has {
            find_good_set_unchecked(g, &profile)?
        } else {
            None
        };
        (Some(has), found)
    } else {
        (None, None)
    };
    Ok(Outcome {
        girth,
        profile,
        has_good_set,
        good_set,
        chi_b: None,
        method: Method::BoundsOnly,
        coloring: None,
        construction: None,
    })
}

/// Computes the b-chromatic number of `g`.
///
/// Girth at least 9 (or a forest): with a good set the construction gives
/// `m`; without one the answer is `m - 1`, witnessed by the oracle when the
/// graph is small enough. Smaller girth falls back to the oracle, or to the
/// bound `m` alone for large graphs.
pub fn b_chromatic(g: &Graph, config: PipelineConfig) -> Result<Outcome> {
    let mut outcome = analyze_structure(g)?;
    let girth = outcome.girth;
    let has_good_set = outcome.has_good_set;
    let m = outcome.profile.m;
    let small = g.n() <= config.oracle.limit;

    if girth.is_at_least(CONSTRUCTION_GIRTH) {
        if let Some(w) = &outcome.good_set {
            let construction = b_coloring_with_good_set(g, w)?;
            outcome.chi_b = Some(m);
            outcome.method = Method::Construction;
            outcome.coloring = Some(construction.result.clone());
            outcome.construction = Some(construction);
            return Ok(outcome);
        }
    }

    if has_good_set == Some(false) {
        outcome.chi_b = Some(m - 1);
        if small {
            let coloring = find_b_coloring_with(g, m - 1, config.oracle)?.ok_or_else(|| {
                Error::invariant("oracle", None, format!("no b-coloring with m - 1 = {} colors", m - 1))
            })?;
            outcome.coloring = Some(with_basis(g, m - 1, coloring)?);
            outcome.method = Method::Oracle;
        } else {
            outcome.method = Method::NoGoodSetTheorem;
        }
        return Ok(outcome);
    }

    if small {
        let (k, coloring) = exact_b_coloring_with(g, config.oracle)?;
        outcome.chi_b = Some(k);
        outcome.coloring = Some(with_basis(g, k, coloring)?);
        outcome.method = Method::Oracle;
    }
    Ok(outcome)
}

fn with_basis(g: &Graph, k: usize, coloring: Vec<usize>) -> Result<BResult> {
    let report = crate::oracle::check_b_coloring(g, &coloring, k)?;
    let basis = report.basis.ok_or_else(|| {
        Error::invariant(
            "oracle",
            None,
            format!("oracle coloring rejected: {:?}", report.violations),
        )
    })?;
    Ok(BResult {
        chi_b: k,
        coloring,
        basis,
    })
}
