//! The multi-criteria smoothness decision and singular-point location.

use std::collections::BTreeMap;

use decorated_perm::{CrossedAlignment, DecoratedPermutation};
use perm_core::{bruhat_interval, KSubset};
use positroid_core::{codimension, Positroid};
use serde::Serialize;

use crate::Result;

/// The outcome of a smoothness decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Smooth,
    Singular,
}

/// A concrete certificate of singularity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// An alignment both of whose arcs are crossed by a third arc.
    CrossedAlignment {
        #[serde(flatten)]
        crossed: CrossedAlignment,
    },
    /// A basis whose Johnson-graph degree differs from the variety's
    /// dimension ℓ(v) − ℓ(u).
    IrregularVertex { basis: KSubset, degree: usize, expected: usize },
    /// A torus-fixed point where the tangent-space codimension drops below
    /// the codimension of the variety.
    SingularTfixedPoint { basis: KSubset, tangent_codim: usize, codim: usize },
    /// A connected component of the matroid that is not uniform.
    NonUniformComponent { elements: KSubset },
}

/// The verdict together with every evaluated criterion and, when singular,
/// a witness.
///
/// Criterion ids follow a fixed numbering: C2 — every Bruhat-interval
/// element y has exactly ℓ(v) − ℓ(u) bases at Johnson distance one from
/// y[k] (opt-in, requires interval enumeration); C3 — the tangent-space
/// codimension equals the alignment count at every basis; C4 — the Johnson
/// graph on bases is regular; C5 — no crossed alignments; C6 — every
/// stabilized interval-free component is a spirograph; C7 — the matroid is
/// a direct sum of uniform matroids. The criteria are equivalent; any
/// disagreement is an internal error.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessReport {
    pub verdict: Verdict,
    pub criteria: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl SmoothnessReport {
    pub fn is_smooth(&self) -> bool {
        self.verdict == Verdict::Smooth
    }
}

/// Decides smoothness of the positroid variety of `w`.
///
/// Criteria C3–C7 are always evaluated; C2 additionally when `include_c2`
/// is set (it enumerates a Bruhat interval, so it is limited to small n).
/// Witness priority when singular: crossed alignment, then irregular
/// Johnson vertex, then singular torus-fixed basis.
#[allow(non_snake_case)]
pub fn smoothness_report(w: &DecoratedPermutation, include_C2: bool) -> Result<SmoothnessReport> {
    let m = Positroid::from_decorated(w);
    let n = w.n();
    let k = m.k();
    let codim = codimension(w);
    let dim = k * (n - k) - codim;

    let crossed = w.crossed_alignments();
    let c5 = crossed.is_empty();
    let c6 = w.sif_decomposition().1.iter().all(|c| c.is_spirograph().is_some());
    let c7 = m.is_direct_sum_of_uniforms();

    let mut tangent_codims = Vec::with_capacity(m.len());
    for basis in m.bases() {
        tangent_codims.push((basis.clone(), m.tangent_codim(&basis)?));
    }
    let c3 = tangent_codims.iter().all(|&(_, t)| t == codim);
    // Regularity alone is not enough: every vertex must have degree dim.
    let c4 = tangent_codims.iter().all(|&(_, t)| k * (n - k) - t == dim);

    let mut criteria = BTreeMap::new();
    if include_C2 {
        let iv = w.to_grassmann_interval();
        let c2 = bruhat_interval(&iv.u, &iv.v)?.iter().try_fold(true, |acc, y| {
            let degree = m.johnson_degree(&y.initial_set(k))?;
            Ok::<_, crate::Error>(acc && degree == dim)
        })?;
        criteria.insert("C2".to_string(), c2);
    }
    criteria.insert("C3".to_string(), c3);
    criteria.insert("C4".to_string(), c4);
    criteria.insert("C5".to_string(), c5);
    criteria.insert("C6".to_string(), c6);
    criteria.insert("C7".to_string(), c7);
    assert!(
        criteria.values().all(|&v| v == c5),
        "internal invariant violated: smoothness criteria disagree at {w}: {criteria:?}"
    );

    let witness = if c5 {
        None
    } else if let Some(x) = crossed
        .iter()
        .max_by_key(|x| (x.alignment.port.tail, x.alignment.starboard.tail, x.crosser.tail))
    {
        Some(Witness::CrossedAlignment { crossed: x.clone() })
    } else if let Some((basis, t)) = tangent_codims.iter().find(|&&(_, t)| t != codim) {
        if tangent_codims.iter().any(|&(_, u)| u != *t) {
            Some(Witness::IrregularVertex {
                basis: basis.clone(),
                degree: k * (n - k) - t,
                expected: dim,
            })
        } else {
            Some(Witness::SingularTfixedPoint { basis: basis.clone(), tangent_codim: *t, codim })
        }
    } else {
        m.non_uniform_component().map(|c| Witness::NonUniformComponent { elements: c })
    };

    Ok(SmoothnessReport {
        verdict: if c5 { Verdict::Smooth } else { Verdict::Singular },
        criteria,
        witness,
    })
}

/// The bases of `m` at which the positroid variety is singular: those whose
/// tangent-space codimension is strictly below the codimension of the
/// variety. Empty exactly when the variety is smooth.
pub fn singular_tfixed_points(m: &Positroid) -> Result<Vec<KSubset>> {
    let w = m.decorated_permutation()?;
    let codim = codimension(&w);
    let mut out = Vec::new();
    for basis in m.bases() {
        if m.tangent_codim(&basis)? < codim {
            out.push(basis);
        }
    }
    Ok(out)
}
