//! Verdicts and check reports.

use std::fmt;

/// Default number of witnesses kept per report; scanning continues past it.
pub const FAILURE_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Undecided,
    HypothesisUnmet,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Undecided => "undecided",
            Verdict::HypothesisUnmet => "hypothesis-unmet",
        }
    }

    pub fn parse(s: &str) -> Option<Verdict> {
        Some(match s {
            "pass" => Verdict::Pass,
            "fail" => Verdict::Fail,
            "undecided" => Verdict::Undecided,
            "hypothesis-unmet" => Verdict::HypothesisUnmet,
            _ => return None,
        })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one check: a verdict, failure witnesses and named facts
/// (dimensions and the like) in insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub check: String,
    pub topic: String,
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
    pub facts: Vec<(String, String)>,
    failures: usize,
}

impl Report {
    pub fn new(check: impl Into<String>, topic: impl Into<String>) -> Report {
        Report {
            check: check.into(),
            topic: topic.into(),
            verdict: Verdict::Pass,
            witnesses: Vec::new(),
            facts: Vec::new(),
            failures: 0,
        }
    }

    /// Rebuilds a report from stored parts.
    pub fn from_parts(
        check: String,
        topic: String,
        verdict: Verdict,
        witnesses: Vec<String>,
        facts: Vec<(String, String)>,
    ) -> Report {
        let failures = if verdict == Verdict::Fail { witnesses.len() } else { 0 };
        Report { check, topic, verdict, witnesses, facts, failures }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failure_count(&self) -> usize {
        self.failures
    }

    pub fn fail(&mut self, witness: impl Into<String>) {
        self.verdict = Verdict::Fail;
        self.failures += 1;
        if self.witnesses.len() < FAILURE_CAP {
            self.witnesses.push(witness.into());
        }
    }

    /// Records a failure with a lazily built witness when `ok` is false.
    pub fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        if !ok {
            self.fail(witness());
        }
        ok
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl ToString) {
        self.facts.push((key.into(), value.to_string()));
    }

    pub fn get_fact(&self, key: &str) -> Option<&str> {
        self.facts.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Marks the report undecided unless it already failed.
    pub fn undecided(&mut self, reason: impl Into<String>) {
        if self.verdict != Verdict::Fail {
            self.verdict = Verdict::Undecided;
        }
        self.witnesses.push(reason.into());
    }

    /// Marks that the check ran without its hypothesis being certified.
    pub fn hypothesis_unmet(&mut self, reason: impl Into<String>) {
        if self.verdict == Verdict::Pass {
            self.verdict = Verdict::HypothesisUnmet;
        }
        self.witnesses.push(reason.into());
    }

    /// Folds a sub-report into this one, prefixing its witnesses and facts.
    pub fn absorb(&mut self, sub: &Report) {
        match sub.verdict {
            Verdict::Pass => {}
            Verdict::Fail => {
                self.verdict = Verdict::Fail;
                self.failures += sub.failures.max(1);
                for w in &sub.witnesses {
                    if self.witnesses.len() < FAILURE_CAP {
                        self.witnesses.push(format!("{}: {w}", sub.check));
                    }
                }
            }
            Verdict::Undecided => {
                self.undecided(format!("{}: undecided", sub.check));
            }
            Verdict::HypothesisUnmet => {
                self.hypothesis_unmet(format!("{}: hypothesis unmet", sub.check));
            }
        }
        for (k, v) in &sub.facts {
            self.facts.push((format!("{}.{k}", sub.check), v.clone()));
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} ({})", self.verdict, self.check, self.topic)?;
        for (k, v) in &self.facts {
            write!(f, "\n    {k} = {v}")?;
        }
        for w in &self.witnesses {
            write!(f, "\n    ! {w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_are_capped_but_counted() {
        let mut r = Report::new("demo", "topic");
        for i in 0..25 {
            r.expect(false, || format!("index {i}"));
        }
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.witnesses.len(), FAILURE_CAP);
        assert_eq!(r.failure_count(), 25);
    }

    #[test]
    fn fail_dominates_other_verdicts() {
        let mut r = Report::new("demo", "topic");
        r.fail("x");
        r.undecided("y");
        r.hypothesis_unmet("z");
        assert_eq!(r.verdict, Verdict::Fail);
    }
}
