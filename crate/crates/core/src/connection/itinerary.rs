use std::fmt;

use serde::Serialize;

use super::{cross_anti_stokes, cross_cut, cross_stokes, reconnect, Dominance, WkbExpression};
use crate::error::{Error, Result};
use crate::numerics::Complex;
use crate::potentials::{connection_factors, Family, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    Stokes { vertex: VertexId },
    Cut { vertex: VertexId },
    Anti,
    Reconnect { from: VertexId, to: VertexId },
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Stokes { vertex } => write!(f, "stokes {vertex}"),
            Step::Cut { vertex } => write!(f, "cut {vertex}"),
            Step::Anti => f.write_str("anti"),
            Step::Reconnect { from, to } => write!(f, "reconnect {from} {to}"),
        }
    }
}

/// A walk through the sectors of one family, starting from `1·(start,z)`.
///
/// Text form, one item per line, `#` starts a comment:
///
/// ```text
/// start 1 s        # anchor vertex, dominance (s or d) of the start term
/// anti             # cross an anti-Stokes line
/// stokes 1         # cross a Stokes line of vertex 1
/// reconnect 1 2    # re-anchor terms from vertex 1 to vertex 2
/// cut 2            # cross the cut of vertex 2 counterclockwise
/// ```
///
/// A missing `start` line means `start <first vertex> s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Itinerary {
    pub family: Family,
    pub start: VertexId,
    pub start_dominance: Dominance,
    pub steps: Vec<Step>,
}

fn parse_vertex(token: Option<&str>, line: usize, what: &str) -> Result<VertexId> {
    let token = token.ok_or_else(|| Error::ItineraryParse { line, message: format!("missing {what}") })?;
    token
        .parse::<u8>()
        .map(VertexId)
        .map_err(|_| Error::ItineraryParse { line, message: format!("`{token}` is not a vertex number") })
}

impl Itinerary {
    pub fn parse(family: Family, text: &str) -> Result<Self> {
        let layout = family.spec().turning_point_layout;
        let known = |v: VertexId, line: usize| {
            if layout.iter().any(|(id, _)| *id == v) {
                Ok(v)
            } else {
                Err(Error::ItineraryParse { line, message: format!("vertex {v} does not exist for {family}") })
            }
        };
        let mut start = None;
        let mut steps = Vec::new();
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut words = content.split_whitespace();
            let keyword = words.next().unwrap_or_default();
            let step = match keyword {
                "start" => {
                    if start.is_some() || !steps.is_empty() {
                        return Err(Error::ItineraryParse { line, message: "`start` must come first".into() });
                    }
                    let v = known(parse_vertex(words.next(), line, "start vertex")?, line)?;
                    let dominance = match words.next() {
                        Some("s") | None => Dominance::Subdominant,
                        Some("d") => Dominance::Dominant,
                        Some(other) => {
                            return Err(Error::ItineraryParse {
                                line,
                                message: format!("dominance must be `s` or `d`, got `{other}`"),
                            })
                        }
                    };
                    start = Some((v, dominance));
                    None
                }
                "stokes" => Some(Step::Stokes { vertex: known(parse_vertex(words.next(), line, "vertex")?, line)? }),
                "cut" => Some(Step::Cut { vertex: known(parse_vertex(words.next(), line, "vertex")?, line)? }),
                "anti" => Some(Step::Anti),
                "reconnect" => {
                    let from = known(parse_vertex(words.next(), line, "source vertex")?, line)?;
                    let to = known(parse_vertex(words.next(), line, "target vertex")?, line)?;
                    Some(Step::Reconnect { from, to })
                }
                other => {
                    return Err(Error::ItineraryParse { line, message: format!("unknown step `{other}`") });
                }
            };
            if let Some(extra) = words.next() {
                return Err(Error::ItineraryParse { line, message: format!("unexpected `{extra}`") });
            }
            steps.extend(step);
        }
        let (start, start_dominance) = start.unwrap_or((layout[0].0, Dominance::Subdominant));
        Ok(Self { family, start, start_dominance, steps })
    }

    /// Text form accepted by [`Itinerary::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "start {} {}\n",
            self.start,
            if self.start_dominance == Dominance::Dominant { 'd' } else { 's' }
        );
        for step in &self.steps {
            out.push_str(&step.to_string());
            out.push('\n');
        }
        out
    }
}

/// Folds the steps over `start`, looking connection factors up at action
/// `w` (`c` for budden) and using the same Stokes constant `s` everywhere.
pub fn run_itinerary_from(start: WkbExpression, w: f64, s: Complex, itinerary: &Itinerary) -> Result<WkbExpression> {
    if start.family != itinerary.family {
        return Err(Error::InvalidArgument(format!(
            "itinerary for {} applied to a {} expression",
            itinerary.family, start.family
        )));
    }
    let factors = connection_factors(itinerary.family, w);
    itinerary.steps.iter().try_fold(start, |expr, step| match *step {
        Step::Stokes { vertex } => cross_stokes(&expr, vertex, s),
        Step::Cut { vertex } => cross_cut(&expr, vertex),
        Step::Anti => Ok(cross_anti_stokes(&expr)),
        Step::Reconnect { from, to } => reconnect(&expr, from, to, factors.lookup(from, to)?),
    })
}

/// Runs an itinerary from its own start term `1·(start,z)`.
pub fn run_itinerary(w: f64, s: Complex, itinerary: &Itinerary) -> Result<WkbExpression> {
    let start = WkbExpression::start(itinerary.family, itinerary.start, itinerary.start_dominance)?;
    run_itinerary_from(start, w, s, itinerary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        let text = "# demo\nstart 2 d\nanti\nstokes 2   # comment\n\nreconnect 2 1\ncut 1\n";
        let it = Itinerary::parse(Family::Weber, text).unwrap();
        assert_eq!(it.start, VertexId(2));
        assert_eq!(it.start_dominance, Dominance::Dominant);
        assert_eq!(it.steps.len(), 4);
        assert_eq!(Itinerary::parse(Family::Weber, &it.to_text()).unwrap(), it);
    }

    #[test]
    fn default_start() {
        let it = Itinerary::parse(Family::Budden, "anti\n").unwrap();
        assert_eq!((it.start, it.start_dominance), (VertexId(0), Dominance::Subdominant));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = [
            ("anti\nfly 2\n", 2),
            ("stokes\n", 1),
            ("anti\n\nstokes x\n", 3),
            ("stokes 9\n", 1),
            ("cut 1 2\n", 1),
            ("anti\nstart 1 s\n", 2),
            ("start 1 q\n", 1),
        ];
        for (text, want) in bad {
            match Itinerary::parse(Family::Weber, text) {
                Err(Error::ItineraryParse { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn missing_factor_is_reported() {
        let it = Itinerary::parse(Family::Sextic, "reconnect 1 6\n").unwrap();
        let r = run_itinerary(1.0, Complex::new(0.0, 1.0), &it);
        assert!(matches!(r, Err(Error::MissingFactor { .. })));
    }

    #[test]
    fn family_mismatch_is_rejected() {
        let it = Itinerary::parse(Family::Sextic, "anti\n").unwrap();
        let start = WkbExpression::start(Family::Quartic, VertexId(1), Dominance::Subdominant).unwrap();
        assert!(run_itinerary_from(start, 1.0, Complex::new(0.0, 1.0), &it).is_err());
    }
}
