//! Classes without a proven extreme: report the order-maximal (or minimal)
//! members and whether a single extreme exists. Nothing here is asserted.

use crate::division::compare;
use crate::enumeration::ClassSpec;

use super::{Record, Tally};

fn survey(records: &[Record], class: ClassSpec, top: bool) -> String {
    let members: Vec<&Record> = records.iter().filter(|r| class.contains(&r.tree).unwrap_or(false)).collect();
    let beats = |a: &Record, b: &Record| {
        let rel = compare(&a.vector, &b.vector).expect("equal orders");
        if top {
            matches!(rel, crate::OrderRelation::StrictlyGreater { .. })
        } else {
            matches!(rel, crate::OrderRelation::StrictlyLess { .. })
        }
    };
    let extreme: Vec<&Record> = members.iter().copied().filter(|m| !members.iter().any(|o| beats(o, m))).collect();
    let dominates = |m: &Record| {
        members.iter().all(|o| {
            let rel = compare(&m.vector, &o.vector).expect("equal orders");
            if top {
                rel.is_ge()
            } else {
                rel.is_le()
            }
        })
    };
    let single = extreme.iter().find(|m| dominates(m));
    let word = if top { "maximal" } else { "minimal" };
    let codes: Vec<String> = extreme.iter().take(4).map(|m| format!("{} r={}", m.code, m.vector)).collect();
    format!(
        "{class}: {} members, {} {word} [{}{}], {}",
        members.len(),
        extreme.len(),
        codes.join("; "),
        if extreme.len() > 4 { "; ..." } else { "" },
        match single {
            Some(m) => format!("unique extreme {}", m.code),
            None => "no single extreme".to_string(),
        }
    )
}

pub(super) fn diameter_max(records: &[Record], n: usize) -> Tally {
    let mut tally = Tally::default();
    for d in 2..n {
        let note = survey(records, ClassSpec::Diameter { n, d }, true);
        tally.check(true, || unreachable!());
        tally.note(note);
    }
    tally
}

pub(super) fn max_degree_min(records: &[Record], n: usize) -> Tally {
    let mut tally = Tally::default();
    for max_degree in 3..n.saturating_sub(1) {
        let note = survey(records, ClassSpec::MaxDegree { n, max_degree }, false);
        tally.check(true, || unreachable!());
        tally.note(note);
    }
    tally
}
