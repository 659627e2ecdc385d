//! Continuation of WKB solutions across Stokes lines, anti-Stokes lines and
//! cuts, and re-anchoring between singular points.
//!
//! Notation: `(a,z)` is the WKB solution with phase integral taken from the
//! vertex `a` to `z`, and `(z,a)` the one taken from `z` to `a`. Each term in
//! an expression also carries a dominance flag for the region it currently
//! sits in.

mod builtins;
mod itinerary;

use std::fmt;

use serde::Serialize;

pub use builtins::{
    builtin_itinerary, builtin_text, itinerary_residuals, quantization_residuals, stable_dominant_residual,
    symmetry_target, terminal_normalisation, TerminalReadout,
};
pub use itinerary::{run_itinerary, run_itinerary_from, Itinerary, Step};

use crate::error::{Error, Result};
use crate::numerics::Complex;
use crate::potentials::{Family, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// `(a,z)`
    FromAnchor,
    /// `(z,a)`
    ToAnchor,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::FromAnchor => Orientation::ToAnchor,
            Orientation::ToAnchor => Orientation::FromAnchor,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Dominance {
    Dominant,
    Subdominant,
}

impl Dominance {
    pub fn flipped(self) -> Self {
        match self {
            Dominance::Dominant => Dominance::Subdominant,
            Dominance::Subdominant => Dominance::Dominant,
        }
    }

    fn letter(self) -> char {
        match self {
            Dominance::Dominant => 'd',
            Dominance::Subdominant => 's',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WkbTerm {
    pub coeff: Complex,
    pub anchor: VertexId,
    pub orientation: Orientation,
    pub dominance: Dominance,
}

/// Linear combination of WKB terms, at most one per `(anchor, orientation)`.
/// Terms keep their insertion order so output is deterministic.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WkbExpression {
    pub family: Family,
    pub terms: Vec<WkbTerm>,
}

impl WkbExpression {
    pub fn zero(family: Family) -> Self {
        Self { family, terms: Vec::new() }
    }

    /// `1·(a,z)` with the given dominance.
    pub fn start(family: Family, anchor: VertexId, dominance: Dominance) -> Result<Self> {
        check_vertex(family, anchor)?;
        let term = WkbTerm { coeff: Complex::new(1.0, 0.0), anchor, orientation: Orientation::FromAnchor, dominance };
        Ok(Self { family, terms: vec![term] })
    }

    pub fn term(&self, anchor: VertexId, orientation: Orientation) -> Option<&WkbTerm> {
        self.terms.iter().find(|t| t.anchor == anchor && t.orientation == orientation)
    }

    /// Coefficient of `(anchor, orientation)`, zero if absent.
    pub fn coeff(&self, anchor: VertexId, orientation: Orientation) -> Complex {
        self.term(anchor, orientation).map_or(Complex::new(0.0, 0.0), |t| t.coeff)
    }

    pub fn scaled(&self, factor: Complex) -> Self {
        let terms = self.terms.iter().map(|t| WkbTerm { coeff: t.coeff * factor, ..*t }).collect();
        Self { family: self.family, terms }
    }

    /// Adds `term`, merging with an existing term of the same anchor and
    /// orientation.
    fn accumulate(&mut self, term: WkbTerm) -> Result<()> {
        match self.terms.iter_mut().find(|t| t.anchor == term.anchor && t.orientation == term.orientation) {
            Some(existing) => {
                if existing.dominance != term.dominance {
                    return Err(Error::InconsistentDominance { anchor: term.anchor });
                }
                existing.coeff += term.coeff;
            }
            None => self.terms.push(term),
        }
        Ok(())
    }
}

impl fmt::Display for WkbExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let pair = match t.orientation {
                Orientation::FromAnchor => format!("({},z)", t.anchor),
                Orientation::ToAnchor => format!("(z,{})", t.anchor),
            };
            write!(f, "({:.6e}{:+.6e}i){}_{}", t.coeff.re, t.coeff.im, pair, t.dominance.letter())?;
        }
        Ok(())
    }
}

fn check_vertex(family: Family, v: VertexId) -> Result<()> {
    if family.spec().turning_point_layout.iter().any(|(id, _)| *id == v) {
        Ok(())
    } else {
        Err(Error::UnknownVertex(v))
    }
}

/// Crossing a Stokes line of `vertex`: every dominant term anchored there
/// feeds `s` times its coefficient into the opposite-orientation term at the
/// same vertex (created subdominant if absent).
pub fn cross_stokes(expr: &WkbExpression, vertex: VertexId, s: Complex) -> Result<WkbExpression> {
    check_vertex(expr.family, vertex)?;
    let mut out = expr.clone();
    for t in expr.terms.iter().filter(|t| t.anchor == vertex && t.dominance == Dominance::Dominant) {
        out.accumulate(WkbTerm {
            coeff: s * t.coeff,
            anchor: vertex,
            orientation: t.orientation.flipped(),
            dominance: Dominance::Subdominant,
        })?;
    }
    Ok(out)
}

/// Crossing the cut of `vertex` counterclockwise: `(a,z) → -i(z,a)` and
/// `(z,a) → -i(a,z)`; dominance is unchanged.
pub fn cross_cut(expr: &WkbExpression, vertex: VertexId) -> Result<WkbExpression> {
    check_vertex(expr.family, vertex)?;
    let minus_i = Complex::new(0.0, -1.0);
    let terms = expr
        .terms
        .iter()
        .map(|t| {
            if t.anchor == vertex {
                WkbTerm { coeff: minus_i * t.coeff, orientation: t.orientation.flipped(), ..*t }
            } else {
                *t
            }
        })
        .collect();
    Ok(WkbExpression { family: expr.family, terms })
}

/// Crossing an anti-Stokes line: dominant and subdominant swap for every
/// term. Itineraries only cross lines of the vertices their terms are
/// anchored at.
pub fn cross_anti_stokes(expr: &WkbExpression) -> WkbExpression {
    let terms = expr.terms.iter().map(|t| WkbTerm { dominance: t.dominance.flipped(), ..*t }).collect();
    WkbExpression { family: expr.family, terms }
}

/// Re-anchors terms at `from` to `to` using `factor = [from, to]`:
/// `(from,z) = [from,to](to,z)` and `(z,from) = (z,to)/[from,to]`.
pub fn reconnect(expr: &WkbExpression, from: VertexId, to: VertexId, factor: Complex) -> Result<WkbExpression> {
    check_vertex(expr.family, from)?;
    check_vertex(expr.family, to)?;
    let mut out = WkbExpression::zero(expr.family);
    for t in &expr.terms {
        if t.anchor == from {
            let coeff = match t.orientation {
                Orientation::FromAnchor => t.coeff * factor,
                Orientation::ToAnchor => t.coeff / factor,
            };
            out.accumulate(WkbTerm { coeff, anchor: to, ..*t })?;
        } else {
            out.accumulate(*t)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::I;
    use proptest::prelude::*;

    const A: VertexId = VertexId(1);
    const B: VertexId = VertexId(2);

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn dominant_start() -> WkbExpression {
        WkbExpression::start(Family::Weber, A, Dominance::Dominant).unwrap()
    }

    #[test]
    fn stokes_feeds_subdominant() {
        let s = c(0.2, 0.9);
        let out = cross_stokes(&dominant_start(), A, s).unwrap();
        assert_eq!(out.coeff(A, Orientation::FromAnchor), c(1.0, 0.0));
        let fed = out.term(A, Orientation::ToAnchor).unwrap();
        assert_eq!(fed.coeff, s);
        assert_eq!(fed.dominance, Dominance::Subdominant);
    }

    #[test]
    fn stokes_ignores_subdominant_and_other_vertices() {
        let sub = WkbExpression::start(Family::Weber, A, Dominance::Subdominant).unwrap();
        assert_eq!(cross_stokes(&sub, A, I).unwrap(), sub);
        assert_eq!(cross_stokes(&dominant_start(), B, I).unwrap(), dominant_start());
        let zero_s = cross_stokes(&dominant_start(), A, c(0.0, 0.0)).unwrap();
        assert_eq!(zero_s.coeff(A, Orientation::ToAnchor), c(0.0, 0.0));
    }

    #[test]
    fn cut_rotates_and_flips() {
        let once = cross_cut(&dominant_start(), A).unwrap();
        let t = once.terms[0];
        assert_eq!((t.coeff, t.orientation, t.dominance), (c(0.0, -1.0), Orientation::ToAnchor, Dominance::Dominant));
        let twice = cross_cut(&once, A).unwrap();
        assert_eq!(twice.terms[0].coeff, c(-1.0, 0.0));
        assert_eq!(twice.terms[0].orientation, Orientation::FromAnchor);
        assert_eq!(cross_cut(&dominant_start(), B).unwrap(), dominant_start());
    }

    #[test]
    fn anti_stokes_swaps_dominance() {
        let sub = WkbExpression::start(Family::Weber, A, Dominance::Subdominant).unwrap();
        assert_eq!(cross_anti_stokes(&sub).terms[0].dominance, Dominance::Dominant);
        assert_eq!(cross_anti_stokes(&cross_anti_stokes(&sub)), sub);
        let zero = WkbExpression::zero(Family::Weber);
        assert_eq!(cross_anti_stokes(&zero), zero);
    }

    #[test]
    fn reconnect_relabels_with_factor() {
        let f = c(0.3, -2.0);
        let out = reconnect(&dominant_start(), A, B, f).unwrap();
        assert_eq!(out.coeff(B, Orientation::FromAnchor), f);
        let plain = reconnect(&dominant_start(), A, B, c(1.0, 0.0)).unwrap();
        assert_eq!(plain.coeff(B, Orientation::FromAnchor), c(1.0, 0.0));
        let back = reconnect(&out, B, A, 1.0 / f).unwrap();
        assert!((back.coeff(A, Orientation::FromAnchor) - 1.0).norm() < 1e-15);
    }

    #[test]
    fn reconnect_merges_terms() {
        let mut e = WkbExpression::zero(Family::Quartic);
        e.terms.push(WkbTerm { coeff: c(1.0, 0.0), anchor: A, orientation: Orientation::ToAnchor, dominance: Dominance::Dominant });
        e.terms.push(WkbTerm { coeff: c(2.0, 0.0), anchor: B, orientation: Orientation::ToAnchor, dominance: Dominance::Dominant });
        let out = reconnect(&e, A, B, c(0.0, 2.0)).unwrap();
        assert_eq!(out.terms.len(), 1);
        assert_eq!(out.coeff(B, Orientation::ToAnchor), c(2.0, -0.5));
    }

    #[test]
    fn merging_opposite_dominance_is_an_error() {
        let mut e = WkbExpression::zero(Family::Quartic);
        e.terms.push(WkbTerm { coeff: c(1.0, 0.0), anchor: A, orientation: Orientation::ToAnchor, dominance: Dominance::Dominant });
        e.terms.push(WkbTerm { coeff: c(1.0, 0.0), anchor: B, orientation: Orientation::ToAnchor, dominance: Dominance::Subdominant });
        assert_eq!(reconnect(&e, A, B, c(1.0, 0.0)), Err(Error::InconsistentDominance { anchor: B }));
    }

    #[test]
    fn unknown_vertices_are_rejected() {
        assert_eq!(cross_stokes(&dominant_start(), VertexId(7), I), Err(Error::UnknownVertex(VertexId(7))));
        assert!(cross_cut(&dominant_start(), VertexId(0)).is_err());
        assert!(reconnect(&dominant_start(), A, VertexId(3), I).is_err());
        assert!(WkbExpression::start(Family::PtCubic, VertexId(4), Dominance::Dominant).is_err());
    }

    proptest! {
        #[test]
        fn rules_are_linear(re in -3.0f64..3.0, im in -3.0f64..3.0, s_re in -1.0f64..1.0, s_im in -2.0f64..2.0) {
            let alpha = c(re, im);
            let s = c(s_re, s_im);
            let e = cross_stokes(&dominant_start(), A, s).unwrap();
            let e = reconnect(&e, A, B, c(0.4, 1.1)).unwrap();
            let scaled_first = cross_cut(&cross_stokes(&e.scaled(alpha), B, s).unwrap(), B).unwrap();
            let scaled_last = cross_cut(&cross_stokes(&e, B, s).unwrap(), B).unwrap().scaled(alpha);
            for (x, y) in scaled_first.terms.iter().zip(&scaled_last.terms) {
                prop_assert!((x.coeff - y.coeff).norm() <= 1e-13 * (1.0 + y.coeff.norm()));
            }
        }
    }
}
