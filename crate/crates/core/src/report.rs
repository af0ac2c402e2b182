use std::fmt;

use serde::Serialize;

use crate::cm::CmWitness;
use crate::iso::Isomorphism;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    /// Some hypothesis is false; the claim was not evaluated as a theorem.
    HypothesesNotMet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = "=")]
    Equal,
}

/// One exact comparison `lhs (relation) rhs`, e.g. `f_j(C) >= f_j(S)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub quantity: String,
    pub index: i64,
    pub lhs: i64,
    pub rhs: i64,
    pub relation: Relation,
    pub tight: bool,
}

impl Comparison {
    pub fn new(quantity: impl Into<String>, index: i64, lhs: i64, rhs: i64, relation: Relation) -> Self {
        Comparison {
            quantity: quantity.into(),
            index,
            lhs,
            rhs,
            relation,
            tight: lhs == rhs,
        }
    }

    pub fn holds(&self) -> bool {
        match self.relation {
            Relation::AtLeast => self.lhs >= self.rhs,
            Relation::Equal => self.lhs == self.rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub satisfied: bool,
}

/// Outcome of an equality clause: the trigger, and if it fired, whether the
/// input is isomorphic to the extremal complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualityCase {
    pub target: String,
    pub triggered: bool,
    /// `None` when not triggered or above the isomorphism-search cap.
    pub isomorphic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isomorphism: Option<Isomorphism>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A CM witness attached to a report, labelled by what it refers to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub label: String,
    pub witness: CmWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub claim: String,
    pub subject: String,
    pub hypotheses: Vec<Hypothesis>,
    pub verdict: Verdict,
    /// First violated comparison when the verdict is `fails`.
    pub witness: Option<Comparison>,
    pub comparisons: Vec<Comparison>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality: Option<EqualityCase>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub evidence: Vec<Evidence>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn new(claim: impl Into<String>, subject: impl Into<String>) -> Self {
        TheoremReport {
            claim: claim.into(),
            subject: subject.into(),
            hypotheses: Vec::new(),
            verdict: Verdict::Holds,
            witness: None,
            comparisons: Vec::new(),
            equality: None,
            evidence: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Records a hypothesis and passes its value through.
    pub fn hypothesis(&mut self, name: impl Into<String>, satisfied: bool) -> bool {
        self.hypotheses.push(Hypothesis {
            name: name.into(),
            satisfied,
        });
        satisfied
    }

    pub fn hypotheses_met(&self) -> bool {
        self.hypotheses.iter().all(|h| h.satisfied)
    }

    pub fn compare(&mut self, quantity: impl Into<String>, index: i64, lhs: i64, rhs: i64, relation: Relation) {
        self.comparisons.push(Comparison::new(quantity, index, lhs, rhs, relation));
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Sets verdict and witness from the recorded hypotheses and
    /// comparisons.
    pub fn finish(mut self) -> Self {
        if !self.hypotheses_met() {
            self.verdict = Verdict::HypothesesNotMet;
            self.witness = None;
            return self;
        }
        self.witness = self.comparisons.iter().find(|c| !c.holds()).cloned();
        self.verdict = if self.witness.is_some() {
            Verdict::Fails
        } else {
            Verdict::Holds
        };
        self
    }

    /// Comparisons of the given quantity that hold with equality.
    pub fn tight(&self, quantity: &str) -> impl Iterator<Item = &Comparison> {
        let q = quantity.to_string();
        self.comparisons
            .iter()
            .filter(move |c| c.quantity == q && c.tight)
    }

    /// True when every comparison of `quantity` is tight (and one exists).
    pub fn all_tight(&self, quantity: &str) -> bool {
        let mut any = false;
        for c in self.comparisons.iter().filter(|c| c.quantity == quantity) {
            if !c.tight {
                return false;
            }
            any = true;
        }
        any
    }

    pub fn any_strict(&self, quantity: &str) -> bool {
        self.comparisons
            .iter()
            .any(|c| c.quantity == quantity && !c.tight && c.holds())
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::HypothesesNotMet => "hypotheses-not-met",
        })
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.relation {
            Relation::AtLeast => ">=",
            Relation::Equal => "=",
        };
        write!(f, "{}[{}]: {} {rel} {}", self.quantity, self.index, self.lhs, self.rhs)
    }
}

/// One line: verdict, claim, subject, and the witness or unmet hypotheses.
impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.verdict, self.claim, self.subject)?;
        match self.verdict {
            Verdict::Fails => {
                if let Some(w) = &self.witness {
                    write!(f, " | witness {w}")?;
                }
            }
            Verdict::HypothesesNotMet => {
                let unmet: Vec<&str> = self
                    .hypotheses
                    .iter()
                    .filter(|h| !h.satisfied)
                    .map(|h| h.name.as_str())
                    .collect();
                write!(f, " | unmet: {}", unmet.join(", "))?;
            }
            Verdict::Holds => {
                if let Some(eq) = &self.equality {
                    if eq.triggered {
                        match eq.isomorphic {
                            Some(true) => write!(f, " | equality: isomorphic to {}", eq.target)?,
                            Some(false) => write!(f, " | equality: not isomorphic to {}", eq.target)?,
                            None => write!(f, " | equality trigger met, isomorphism unchecked")?,
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        let mut r = TheoremReport::new("x", "y");
        r.hypothesis("h", true);
        r.compare("f", 0, 3, 2, Relation::AtLeast);
        r.compare("f", 1, 2, 2, Relation::AtLeast);
        let r = r.finish();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(r.any_strict("f"));
        assert_eq!(r.tight("f").count(), 1);

        let mut r = TheoremReport::new("x", "y");
        r.compare("h", 0, 1, 1, Relation::Equal);
        r.compare("h", 1, 1, 2, Relation::Equal);
        r.compare("h", 2, 0, 2, Relation::AtLeast);
        let r = r.finish();
        assert_eq!(r.verdict, Verdict::Fails);
        assert_eq!(r.witness.unwrap().index, 1);

        let mut r = TheoremReport::new("x", "y");
        r.hypothesis("h", false);
        r.compare("h", 0, 0, 1, Relation::Equal);
        assert_eq!(r.finish().verdict, Verdict::HypothesesNotMet);
    }
}
