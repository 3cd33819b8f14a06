//! Regression report: ordered entries plus a separate timing map.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalog::Basis;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    /// Sort key; the leading number gives the dependency order of scopes.
    pub id: String,
    pub scope: String,
    /// What is being checked, in words.
    pub context: String,
    pub basis: Basis,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

impl Entry {
    pub fn check(
        id: impl Into<String>,
        scope: &str,
        context: impl Into<String>,
        basis: Basis,
        expected: impl Into<String>,
        computed: impl Into<String>,
        ok: bool,
    ) -> Entry {
        Entry {
            id: id.into(),
            scope: scope.into(),
            context: context.into(),
            basis,
            expected: expected.into(),
            computed: computed.into(),
            status: if ok { Status::Pass } else { Status::Fail },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub seed: u64,
    pub status: Status,
    pub entries: Vec<Entry>,
    /// Seconds per entry id. Kept apart so that comparisons can drop it.
    pub timings: BTreeMap<String, f64>,
}

#[derive(Serialize)]
struct Untimed<'a> {
    seed: u64,
    status: Status,
    entries: &'a [Entry],
}

impl Report {
    /// Sorts entries by id and derives the overall status.
    pub fn new(seed: u64, mut entries: Vec<Entry>, timings: BTreeMap<String, f64>) -> Report {
        entries.sort_by(|a, b| a.id.cmp(&b.id));
        let status = if entries.iter().any(|e| e.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        };
        Report {
            seed,
            status,
            entries,
            timings,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn entry(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report without its timing map, for byte-wise comparison.
    pub fn to_json_untimed(&self) -> String {
        serde_json::to_string_pretty(&Untimed {
            seed: self.seed,
            status: self.status,
            entries: &self.entries,
        })
        .expect("report serializes")
    }

    /// One line per entry followed by a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!(
                "{} {}  expected {}  computed {}\n",
                e.status, e.id, e.expected, e.computed
            ));
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{}: {} entries, {} failed\n",
            self.status,
            self.entries.len(),
            failed
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(id: &str, ok: bool) -> Entry {
        Entry::check(id, "s", "c", Basis::Construction, "1", "1", ok)
    }

    #[test]
    fn ordering_and_status() {
        let r = Report::new(7, vec![e("2.b", true), e("1.a", true)], BTreeMap::new());
        assert_eq!(r.entries[0].id, "1.a");
        assert!(r.passed());
        let r = Report::new(7, vec![e("1.a", true), e("1.b", false)], BTreeMap::new());
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn untimed_json_ignores_timings() {
        let mut t = BTreeMap::new();
        t.insert("1.a".to_string(), 0.5);
        let a = Report::new(1, vec![e("1.a", true)], t);
        let b = Report::new(1, vec![e("1.a", true)], BTreeMap::new());
        assert_ne!(a.to_json(), b.to_json());
        assert_eq!(a.to_json_untimed(), b.to_json_untimed());
        let back: Report = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(back, a);
    }
}
