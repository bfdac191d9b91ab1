//! JSON document for a decomposition.
//!
//! ```json
//! {"input": "x1*x2*x3", "canonical_exponents": [1, 1, 1], "variable_map": [1, 2, 3],
//!  "degree": 3, "rank": 4, "cyclotomic_order": 2,
//!  "terms": [{"gamma": {"rational": "1/24", "zeta_exp": 0}, "form": [0, 0, 0]}, ...]}
//! ```
//!
//! `variable_map` lists the 1-based user variable for each canonical
//! position; `form` entries are `ζ_N` exponents in canonical order.

use serde::{Deserialize, Serialize};

use super::{verify, Decomposition, DecompositionTerm};
use crate::error::{Error, Result};
use crate::exactnum::{rational_to_string, CyclotomicNumber, CyclotomicRepr};
use crate::monomial::{normalize, CanonicalMonomial, Monomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub gamma: CyclotomicRepr,
    pub form: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub input: String,
    pub canonical_exponents: Vec<u32>,
    pub variable_map: Vec<usize>,
    pub degree: u32,
    pub rank: u64,
    pub cyclotomic_order: u64,
    pub terms: Vec<TermJson>,
}

impl DecompositionJson {
    pub fn from_decomposition(dec: &Decomposition, input: &str) -> Self {
        Self {
            input: input.to_string(),
            canonical_exponents: dec.monomial.exponents().to_vec(),
            variable_map: dec.raw_variable_map().iter().map(|v| v + 1).collect(),
            degree: dec.degree(),
            rank: dec.rank() as u64,
            cyclotomic_order: dec.cyclotomic_order,
            terms: dec
                .terms
                .iter()
                .map(|t| TermJson {
                    gamma: CyclotomicRepr::Compact {
                        rational: rational_to_string(&t.gamma_rational),
                        zeta_exp: t.gamma_zeta_exp as i64,
                    },
                    form: t.form_exponents.iter().map(|&e| e as i64).collect(),
                })
                .collect(),
        }
    }

    /// Rebuilds the decomposition. Structural problems are parse errors;
    /// whether the identity holds is left to [`verify`].
    pub fn to_decomposition(&self) -> Result<Decomposition> {
        let order = self.cyclotomic_order;
        if order == 0 {
            return Err(Error::Parse("cyclotomic_order must be positive".into()));
        }
        if self.variable_map.contains(&0) {
            return Err(Error::Parse("variable_map is 1-based".into()));
        }
        let perm: Vec<usize> = self.variable_map.iter().map(|v| v - 1).collect();
        let monomial = CanonicalMonomial::with_permutation(self.canonical_exponents.clone(), perm)
            .map_err(|e| Error::Parse(e.to_string()))?;
        let n = monomial.num_vars();
        let terms = self
            .terms
            .iter()
            .enumerate()
            .map(|(j, t)| {
                if t.form.len() != n {
                    return Err(Error::Parse(format!(
                        "term {j}: form has {} entries, expected {n}",
                        t.form.len()
                    )));
                }
                let gamma = CyclotomicNumber::from_repr(&t.gamma, order)?;
                if gamma.order() != order {
                    return Err(Error::Parse(format!(
                        "term {j}: gamma order {} does not divide {order}",
                        gamma.order()
                    )));
                }
                let (gamma_rational, gamma_zeta_exp) = gamma.as_scaled_root().ok_or_else(|| {
                    Error::Parse(format!(
                        "term {j}: gamma is not a rational multiple of a root of unity"
                    ))
                })?;
                Ok(DecompositionTerm {
                    gamma_rational,
                    gamma_zeta_exp,
                    form_exponents: t
                        .form
                        .iter()
                        .map(|&e| e.rem_euclid(order as i64) as u64)
                        .collect(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Decomposition {
            monomial,
            cyclotomic_order: order,
            terms,
        })
    }
}

/// Outcome of checking a decomposition document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DocumentCheck {
    Verified,
    /// The document is well formed but does not certify its input.
    Failed(String),
}

/// Re-verifies a decomposition document from scratch: the metadata must
/// match the `input` expression and the terms must expand to it exactly.
pub fn verify_document(doc: &DecompositionJson) -> Result<DocumentCheck> {
    let dec = doc.to_decomposition()?;
    let input: Monomial = doc.input.parse()?;
    let expected = normalize(&input)?;
    if expected.exponents() != dec.monomial.exponents()
        || expected.permutation() != dec.monomial.permutation()
    {
        return Ok(DocumentCheck::Failed(format!(
            "canonical data does not describe {}",
            doc.input
        )));
    }
    if doc.degree != dec.degree() {
        return Ok(DocumentCheck::Failed(format!(
            "degree field {} but monomial has degree {}",
            doc.degree,
            dec.degree()
        )));
    }
    if doc.rank != dec.rank() as u64 {
        return Ok(DocumentCheck::Failed(format!(
            "rank field {} but {} terms present",
            doc.rank,
            dec.rank()
        )));
    }
    if !verify(&dec) {
        return Ok(DocumentCheck::Failed(
            "terms do not expand to the input monomial".into(),
        ));
    }
    Ok(DocumentCheck::Verified)
}
