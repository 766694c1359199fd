//! Anti-exchange pairs at the first necklace set and the Ψ map into
//! alignments.
//!
//! Fix a decorated permutation w° with first necklace set I₁. A pair (a, b)
//! with a ∈ I₁ and b ∉ I₁ is an *anti-exchange pair* when (I₁ \ {a}) ∪ {b}
//! is not a basis of the positroid. [`exchange_test_I1`] decides basis
//! membership purely from w°, [`anti_exchange_pairs`] classifies every
//! anti-exchange pair into one of three classes, and [`psi_map`] sends each
//! pair to an alignment of w°; the map is injective, which bounds the
//! tangent-space codimension at I₁ by the total number of alignments.

use decorated_perm::{Alignment, DecoratedPermutation};
use perm_core::Permutation;
use serde::Serialize;

use crate::{Error, Result};

/// The class of an anti-exchange pair (a, b).
///
/// Writing the membership test as "a < b and two window conditions hold for
/// every r ∈ [a+1, b]", the classes are: `Gt` when a > b, `Cond1` when the
/// first window condition fails for some r, and `Cond2` when the first
/// condition holds throughout but the second fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AeClass {
    Gt,
    Cond1,
    Cond2,
}

/// An anti-exchange pair for the first necklace set, with its class and,
/// for the two window classes, the extremal failing index r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AntiExchangePair {
    pub a: usize,
    pub b: usize,
    pub class: AeClass,
    pub witness_r: Option<usize>,
}

/// Does there exist x ∈ [a, r−1] with w⁻¹(x) ∈ [r, n]?
fn cond1(inv: &Permutation, a: usize, r: usize) -> bool {
    (a..r).any(|x| inv.apply(x) >= r)
}

/// Does there exist y ∈ [r, b] with w⁻¹(y) ∈ [1, r−1]?
fn cond2(inv: &Permutation, b: usize, r: usize) -> bool {
    (r..=b).any(|y| inv.apply(y) < r)
}

/// Decides whether (I₁ \ {a}) ∪ {b} is a basis of the positroid of `w`,
/// directly from the permutation: true iff a < b and for every
/// r ∈ [a+1, b] some x ∈ [a, r−1] has w⁻¹(x) ≥ r and some y ∈ [r, b] has
/// w⁻¹(y) < r.
///
/// Requires a ∈ I₁(w°) and b ∉ I₁(w°).
#[allow(non_snake_case)]
pub fn exchange_test_I1(w: &DecoratedPermutation, a: usize, b: usize) -> Result<bool> {
    let i1 = w.anti_exceedance_set(1)?;
    if !i1.contains(a) {
        return Err(Error::Precondition(format!("{a} is not in I₁ = {i1}")));
    }
    if i1.contains(b) {
        return Err(Error::Precondition(format!("{b} is in I₁ = {i1}")));
    }
    if a > b {
        return Ok(false);
    }
    let inv = w.perm().inverse();
    Ok((a + 1..=b).all(|r| cond1(&inv, a, r) && cond2(&inv, b, r)))
}

/// All anti-exchange pairs of `w` at I₁, classified.
///
/// For a `Cond1` pair the witness is r̄(a), the least r > a for which the
/// first window condition fails (it does not depend on b); for a `Cond2`
/// pair it is r̲(b), the greatest r ≤ b for which the second fails.
pub fn anti_exchange_pairs(w: &DecoratedPermutation) -> Vec<AntiExchangePair> {
    let n = w.n();
    let i1 = w.anti_exceedance_set(1).expect("r = 1 is always valid");
    let inv = w.perm().inverse();
    let mut pairs = Vec::new();
    for a in i1.elements().iter().copied() {
        for b in (1..=n).filter(|&b| !i1.contains(b)) {
            if a > b {
                pairs.push(AntiExchangePair { a, b, class: AeClass::Gt, witness_r: None });
                continue;
            }
            if let Some(r) = (a + 1..=b).find(|&r| !cond1(&inv, a, r)) {
                pairs.push(AntiExchangePair { a, b, class: AeClass::Cond1, witness_r: Some(r) });
            } else if let Some(r) = (a + 1..=b).rev().find(|&r| !cond2(&inv, b, r)) {
                pairs.push(AntiExchangePair { a, b, class: AeClass::Cond2, witness_r: Some(r) });
            }
        }
    }
    pairs
}

/// Maps an anti-exchange pair to an alignment of `w`.
///
/// The two arcs of the image have tails p and s determined by the class:
/// for `Gt`, p = w⁻¹(b) and s = w⁻¹(a); for `Cond1`, p starts at w⁻¹(b) and
/// follows w⁻¹ until it lands in [r̄(a), n], with s = w⁻¹(a); for `Cond2`,
/// s starts at w⁻¹(a) and follows w⁻¹ until it lands in [1, r̲(b)−1], with
/// p = w⁻¹(b). Over all anti-exchange pairs of a fixed w° the map is
/// injective.
pub fn psi_map(w: &DecoratedPermutation, pair: &AntiExchangePair) -> Result<Alignment> {
    if !anti_exchange_pairs(w).contains(pair) {
        return Err(Error::NotAntiExchangePair(pair.a, pair.b));
    }
    let inv = w.perm().inverse();
    let (p, s) = match pair.class {
        AeClass::Gt => (inv.apply(pair.b), inv.apply(pair.a)),
        AeClass::Cond1 => {
            let lo = pair.witness_r.expect("Cond1 pairs carry r̄(a)");
            let mut p = inv.apply(pair.b);
            while p < lo {
                p = inv.apply(p);
            }
            (p, inv.apply(pair.a))
        }
        AeClass::Cond2 => {
            let hi = pair.witness_r.expect("Cond2 pairs carry r̲(b)");
            let mut s = inv.apply(pair.a);
            while s >= hi {
                s = inv.apply(s);
            }
            (inv.apply(pair.b), s)
        }
    };
    w.alignments()
        .into_iter()
        .find(|al| al.port.tail == p && al.starboard.tail == s)
        .ok_or_else(|| {
            Error::Precondition(format!(
                "internal invariant violated: Ψ({},{}) tails ({p},{s}) of {w} do not form \
                 a (port, starboard) alignment",
                pair.a, pair.b
            ))
        })
}
