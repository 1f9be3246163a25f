//! The reference table of homotopy types of `cl(C_n^r)` and renderers for
//! predicted tables.

use super::predictions::predict_clique_cycle_power;
use crate::error::{Error, Result};
use crate::homology::WedgePrediction;

const REFERENCE: &str = include_str!("../../data/homotopy_table.tsv");

/// One reference entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub n: usize,
    pub r: usize,
    pub homotopy_type: WedgePrediction,
    /// Whether a homology computation agreed with the entry, when one ran.
    pub agrees: Option<bool>,
}

/// Parses tab-separated `n r type` lines; `#` starts a comment line.
pub fn parse_table(text: &str) -> Result<Vec<TableEntry>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: &str| Error::Parse { line: i + 1, msg: msg.to_string() };
        let mut cols = line.split('\t');
        let (Some(n), Some(r), Some(t), None) = (cols.next(), cols.next(), cols.next(), cols.next()) else {
            return Err(bad("expected three tab-separated columns"));
        };
        out.push(TableEntry {
            n: n.parse().map_err(|_| bad("bad n"))?,
            r: r.parse().map_err(|_| bad("bad r"))?,
            homotopy_type: WedgePrediction::parse(t).map_err(|_| bad("bad homotopy type"))?,
            agrees: None,
        });
    }
    Ok(out)
}

/// The bundled reference entries.
pub fn reference_table() -> Vec<TableEntry> {
    parse_table(REFERENCE).expect("bundled table parses")
}

/// Predicted entries for `n` in `n_range` and `0 <= r <= r_max(n)`.
pub fn predicted_table(n_range: std::ops::RangeInclusive<usize>, r_max: impl Fn(usize) -> usize) -> Result<Vec<TableEntry>> {
    let mut out = Vec::new();
    for n in n_range {
        for r in 0..=r_max(n) {
            out.push(TableEntry { n, r, homotopy_type: predict_clique_cycle_power(n, r)?, agrees: None });
        }
    }
    Ok(out)
}

/// Markdown grid with one row `C_n` per cycle length and one column per
/// `r`. When any entry carries an agreement flag, a final column reports
/// whether every computed cell of the row agreed.
pub fn render_markdown(entries: &[TableEntry]) -> String {
    let r_hi = entries.iter().map(|e| e.r).max().unwrap_or(0);
    let checked = entries.iter().any(|e| e.agrees.is_some());
    let mut s = String::from("| n |");
    for r in 0..=r_hi {
        s.push_str(&format!(" r={r} |"));
    }
    if checked {
        s.push_str(" agrees |");
    }
    s.push_str("\n|---|");
    s.push_str(&"---|".repeat(r_hi + 1 + checked as usize));
    s.push('\n');
    let mut ns: Vec<usize> = entries.iter().map(|e| e.n).collect();
    ns.dedup();
    for n in ns {
        s.push_str(&format!("| C_{n} |"));
        for r in 0..=r_hi {
            match entries.iter().find(|e| e.n == n && e.r == r) {
                Some(e) => s.push_str(&format!(" {} |", e.homotopy_type)),
                None => s.push_str(" |"),
            }
        }
        if checked {
            let row_ok = entries.iter().filter(|e| e.n == n).all(|e| e.agrees != Some(false));
            s.push_str(if row_ok { " yes |" } else { " no |" });
        }
        s.push('\n');
    }
    s
}

/// CSV with header `n,r,type`, plus `agrees` when any entry was computed.
pub fn render_csv(entries: &[TableEntry]) -> String {
    let checked = entries.iter().any(|e| e.agrees.is_some());
    let mut s = String::from(if checked { "n,r,type,agrees\n" } else { "n,r,type\n" });
    for e in entries {
        s.push_str(&format!("{},{},{}", e.n, e.r, e.homotopy_type));
        if checked {
            s.push_str(match e.agrees {
                Some(true) => ",yes",
                Some(false) => ",no",
                None => ",",
            });
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_agrees_with_closed_form() {
        let table = reference_table();
        assert_eq!(table.len(), 112);
        for e in &table {
            assert_eq!(predict_clique_cycle_power(e.n, e.r).unwrap(), e.homotopy_type, "n={} r={}", e.n, e.r);
        }
    }

    #[test]
    fn renderers() {
        let t = predicted_table(3..=4, |_| 1).unwrap();
        assert_eq!(render_csv(&t), "n,r,type\n3,0,v^2 S^0\n3,1,*\n4,0,v^3 S^0\n4,1,S^1\n");
        let md = render_markdown(&t);
        assert!(md.starts_with("| n | r=0 | r=1 |\n|---|---|---|\n| C_3 | v^2 S^0 | * |"));
        let mut t = t;
        t[3].agrees = Some(false);
        t[0].agrees = Some(true);
        let md = render_markdown(&t);
        assert!(md.contains("| C_3 | v^2 S^0 | * | yes |\n| C_4 | v^3 S^0 | S^1 | no |"));
        assert!(render_csv(&t).ends_with("4,1,S^1,no\n"));
        assert!(parse_table("3\t0").is_err());
    }
}
