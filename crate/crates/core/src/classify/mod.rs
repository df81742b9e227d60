//! Basis-independent fingerprints, isomorphism testing and catalog lookup.

mod search;

use std::fmt;

use crate::catalog::{all_entries, CatalogEntry};
use crate::embed::standard_embedding;
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::lie::{signature, KillingSignature};
use crate::triple::TripleSystem;

pub use search::{search_witness, SearchOutcome, LEVEL_VALUES};

/// Default number of candidate matrices tried by [`isomorphic`] callers that
/// do not choose their own budget.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Invariants of a triple system and of its standard embedding.
///
/// `m_killing` and `h_killing` are the signatures of the Killing form of the
/// embedding restricted to `M` and to `h`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim_m: usize,
    pub m_derived_dims: Vec<usize>,
    pub m_center_dim: usize,
    pub lts_radical_dim: usize,
    pub h_dim: usize,
    pub g_dim: usize,
    pub g_derived_dims: Vec<usize>,
    pub g_lcs_dims: Vec<usize>,
    pub g_killing: KillingSignature,
    pub g_radical_dim: usize,
    pub g_center_dim: usize,
    pub canonical: bool,
    pub m_killing: KillingSignature,
    pub h_killing: KillingSignature,
}

fn dims(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

impl Fingerprint {
    /// Field names and rendered values, in declaration order.
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("dim_m", self.dim_m.to_string()),
            ("m_derived_dims", dims(&self.m_derived_dims)),
            ("m_center_dim", self.m_center_dim.to_string()),
            ("lts_radical_dim", self.lts_radical_dim.to_string()),
            ("h_dim", self.h_dim.to_string()),
            ("g_dim", self.g_dim.to_string()),
            ("g_derived_dims", dims(&self.g_derived_dims)),
            ("g_lcs_dims", dims(&self.g_lcs_dims)),
            ("g_killing", self.g_killing.to_string()),
            ("g_radical_dim", self.g_radical_dim.to_string()),
            ("g_center_dim", self.g_center_dim.to_string()),
            ("canonical", if self.canonical { "yes" } else { "no" }.to_string()),
            ("m_killing", self.m_killing.to_string()),
            ("h_killing", self.h_killing.to_string()),
        ]
    }

    /// Name of the first field on which the two fingerprints differ.
    pub fn first_difference(&self, other: &Fingerprint) -> Option<&'static str> {
        self.fields()
            .into_iter()
            .zip(other.fields())
            .find(|(a, b)| a.1 != b.1)
            .map(|(a, _)| a.0)
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, value) in self.fields() {
            writeln!(f, "{name}: {value}")?;
        }
        Ok(())
    }
}

pub fn fingerprint(t: &TripleSystem) -> Result<Fingerprint> {
    let e = standard_embedding(t)?;
    let g = &e.algebra;
    let n = t.dim();
    let k = g.killing_form();
    let m_idx: Vec<usize> = (0..n).collect();
    let h_idx: Vec<usize> = (n..g.dim()).collect();
    Ok(Fingerprint {
        dim_m: n,
        m_derived_dims: t.full_derived_series().dims(),
        m_center_dim: t.center().dim(),
        lts_radical_dim: e.decompose().m_prime.dim(),
        h_dim: e.h_dim(),
        g_dim: g.dim(),
        g_derived_dims: g.derived_series().dims(),
        g_lcs_dims: g.lower_central_series().dims(),
        g_killing: signature(&k),
        g_radical_dim: g.radical().dim(),
        g_center_dim: g.center().dim(),
        canonical: e.is_canonical(),
        m_killing: signature(&k.submatrix(&m_idx, &m_idx)),
        h_killing: signature(&k.submatrix(&h_idx, &h_idx)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Isomorphic,
    NonIsomorphic,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoResult {
    pub verdict: Verdict,
    /// Rows are a basis of `a` in which its structure constants equal `b`'s.
    pub witness: Option<Matrix>,
    /// Fingerprint field that differs, for non-isomorphic pairs.
    pub separator: Option<&'static str>,
    /// Candidate matrices tested by the search.
    pub tested: u64,
}

/// Decides whether `a` and `b` are isomorphic, searching at most `budget`
/// candidate basis changes when the fingerprints agree.
///
/// Every witness is checked with [`TripleSystem::transform`] before it is
/// returned.
pub fn isomorphic(a: &TripleSystem, b: &TripleSystem, budget: u64) -> Result<IsoResult> {
    a.check_axioms().map_err(Error::InvalidLts)?;
    b.check_axioms().map_err(Error::InvalidLts)?;
    if a == b {
        return Ok(IsoResult {
            verdict: Verdict::Isomorphic,
            witness: Some(Matrix::identity(a.dim())),
            separator: None,
            tested: 0,
        });
    }
    let (fa, fb) = (fingerprint(a)?, fingerprint(b)?);
    if let Some(field) = fa.first_difference(&fb) {
        return Ok(IsoResult {
            verdict: Verdict::NonIsomorphic,
            witness: None,
            separator: Some(field),
            tested: 0,
        });
    }
    let outcome = search_witness(a, b, budget);
    Ok(IsoResult {
        verdict: if outcome.witness.is_some() {
            Verdict::Isomorphic
        } else {
            Verdict::Unknown
        },
        witness: outcome.witness,
        separator: None,
        tested: outcome.tested,
    })
}

/// Catalog labels matching `t`, using [`DEFAULT_BUDGET`] to break ties.
pub fn classify(t: &TripleSystem) -> Result<Vec<&'static str>> {
    classify_with_budget(t, DEFAULT_BUDGET)
}

/// Catalog entries with the fingerprint of `t`. Among those, the ones the
/// search proves isomorphic to `t` are returned; if none is proven, all of
/// them are. An empty list means no entry shares the fingerprint.
pub fn classify_with_budget(t: &TripleSystem, budget: u64) -> Result<Vec<&'static str>> {
    if !(2..=3).contains(&t.dim()) {
        return Err(Error::UnsupportedDimension(t.dim()));
    }
    let fp = fingerprint(t)?;
    let tied: Vec<CatalogEntry> = all_entries()
        .into_iter()
        .filter(|e| e.expected == fp)
        .collect();
    let mut proven = Vec::new();
    for e in &tied {
        if isomorphic(t, &e.system, budget)?.verdict == Verdict::Isomorphic {
            proven.push(e.label);
        }
    }
    if proven.is_empty() {
        Ok(tied.iter().map(|e| e.label).collect())
    } else {
        Ok(proven)
    }
}
