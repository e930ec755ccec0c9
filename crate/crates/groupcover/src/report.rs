//! Whole-group analysis reports with stable machine formats.

use crate::cover::{
    any_three_distinct_cover, any_three_irredundant_cover, c3, sigma,
    unique_three_cover_equivalence, C3Method, SigmaValue, DEFAULT_SIGMA_CAP,
};
use crate::lattice::all_subgroups;
use crate::parse::{parse_group_spec, SpecError};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::time::Instant;

/// Summary of one group's covering analysis.
///
/// Field order here is the emission order for both JSON and CSV. It is part
/// of the output contract: reports from the same build serialize to
/// byte-identical lines, and a parsed JSON report re-serializes exactly.
/// `elapsed_ms` is informational and deliberately left out of both machine
/// formats, otherwise round-tripping would be impossible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub spec: String,
    pub order: usize,
    pub abelian: bool,
    pub exponent: usize,
    pub subgroup_count: usize,
    pub maximal_count: usize,
    pub sigma: SigmaValue,
    pub c3: usize,
    pub klein_quotients: usize,
    pub theorem_b: bool,
    pub corollary_c: bool,
    pub theorem_d: [bool; 3],
    #[serde(skip)]
    pub elapsed_ms: u64,
}

/// Parse a spec, build the group, and compute every report field.
///
/// The covering count is computed twice, by direct triple enumeration and by
/// counting Klein four-group quotients; a disagreement would mean a defect in
/// this crate, so it panics rather than returning a bogus report. Sigma uses
/// the default search cap.
pub fn analyze(spec_text: &str) -> Result<AnalysisReport, SpecError> {
    let start = Instant::now();
    let g = parse_group_spec(spec_text)?;
    let l = all_subgroups(&g);

    let sig = sigma(&l, DEFAULT_SIGMA_CAP);
    let by_enumeration = c3(&l, C3Method::Enumeration);
    let by_quotients = c3(&l, C3Method::QuotientCount);
    assert_eq!(
        by_enumeration, by_quotients,
        "cover count disagrees with Klein quotient count for {}",
        g.spec()
    );
    let equivalence = unique_three_cover_equivalence(&l);
    assert!(
        equivalence.all_agree(),
        "unique-cover predicates disagree for {}",
        g.spec()
    );

    Ok(AnalysisReport {
        spec: g.spec().to_string(),
        order: g.order(),
        abelian: g.is_abelian(),
        exponent: g.exponent(),
        subgroup_count: l.len(),
        maximal_count: l.maximal_indices().len(),
        sigma: sig.value,
        c3: by_enumeration,
        klein_quotients: by_quotients,
        theorem_b: any_three_irredundant_cover(&l),
        corollary_c: any_three_distinct_cover(&l),
        theorem_d: equivalence.as_array(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Header row matching [`AnalysisReport::to_csv_row`].
pub fn csv_header() -> &'static str {
    "spec,order,abelian,exponent,subgroup_count,maximal_count,sigma,c3,\
     klein_quotients,theorem_b,corollary_c,theorem_d_1,theorem_d_2,theorem_d_3"
}

fn csv_field(raw: &str) -> String {
    if raw.contains([',', '"', '\n']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}

impl AnalysisReport {
    /// Single-line JSON, suitable for a JSON-lines stream.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// One CSV record without trailing newline. Fields containing commas or
    /// quotes (spec strings such as `SD(5,4,2)`) are quoted and doubled.
    pub fn to_csv_row(&self) -> String {
        let cells = [
            csv_field(&self.spec),
            self.order.to_string(),
            self.abelian.to_string(),
            self.exponent.to_string(),
            self.subgroup_count.to_string(),
            self.maximal_count.to_string(),
            self.sigma.to_string(),
            self.c3.to_string(),
            self.klein_quotients.to_string(),
            self.theorem_b.to_string(),
            self.corollary_c.to_string(),
            self.theorem_d[0].to_string(),
            self.theorem_d[1].to_string(),
            self.theorem_d[2].to_string(),
        ];
        cells.join(",")
    }

    /// Multi-line table for terminal output.
    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let mut row = |k: &str, v: String| {
            let _ = writeln!(out, "{k:<16} {v}");
        };
        row("spec", self.spec.clone());
        row("order", self.order.to_string());
        row("abelian", self.abelian.to_string());
        row("exponent", self.exponent.to_string());
        row("subgroups", self.subgroup_count.to_string());
        row("maximals", self.maximal_count.to_string());
        row("sigma", self.sigma.to_string());
        row("c3", self.c3.to_string());
        row("klein quotients", self.klein_quotients.to_string());
        row("theorem_b", self.theorem_b.to_string());
        row("corollary_c", self.corollary_c.to_string());
        row(
            "theorem_d",
            format!(
                "{}, {}, {}",
                self.theorem_d[0], self.theorem_d[1], self.theorem_d[2]
            ),
        );
        row("elapsed_ms", self.elapsed_ms.to_string());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_report() {
        let r = analyze("C2 x C2").unwrap();
        assert_eq!(r.spec, "C2 x C2");
        assert_eq!(r.order, 4);
        assert!(r.abelian);
        assert_eq!(r.exponent, 2);
        assert_eq!(r.subgroup_count, 5);
        assert_eq!(r.maximal_count, 3);
        assert_eq!(r.sigma, SigmaValue::Finite(3));
        assert_eq!(r.c3, 1);
        assert_eq!(r.klein_quotients, 1);
        assert!(r.theorem_b);
        assert!(r.corollary_c);
        assert_eq!(r.theorem_d, [true, true, true]);
    }

    #[test]
    fn quaternion_report() {
        let r = analyze("Q8").unwrap();
        assert_eq!(r.sigma, SigmaValue::Finite(3));
        assert_eq!(r.c3, 1);
        assert!(r.theorem_b);
        assert!(!r.corollary_c);
        assert_eq!(r.theorem_d, [true, true, true]);
    }

    #[test]
    fn cyclic_report_has_no_cover() {
        let r = analyze("C7").unwrap();
        assert_eq!(r.sigma, SigmaValue::NoCover);
        assert_eq!(r.c3, 0);
        assert!(!r.theorem_b);
        assert_eq!(r.theorem_d, [false, false, false]);
        assert!(r.to_csv_row().contains("no-cover"));
    }

    #[test]
    fn json_round_trips_to_identical_bytes() {
        for spec in ["C2 x C2", "Q8", "S4", "SD(5,4,2)", "C12"] {
            let line = analyze(spec).unwrap().to_json_line();
            let parsed: AnalysisReport = serde_json::from_str(&line).unwrap();
            assert_eq!(parsed.to_json_line(), line, "{spec}");
        }
    }

    #[test]
    fn json_is_stable_across_runs() {
        let a = analyze("D12").unwrap();
        let b = analyze("D12").unwrap();
        assert_eq!(a.to_json_line(), b.to_json_line());
        assert_eq!(a.to_csv_row(), b.to_csv_row());
    }

    #[test]
    fn csv_quotes_specs_with_commas() {
        let r = analyze("SD(5,4,2)").unwrap();
        let row = r.to_csv_row();
        assert!(row.starts_with("\"SD(5,4,2)\","));
        assert_eq!(
            row.matches(',').count(),
            csv_header().matches(',').count() + 2,
            "the two commas inside the quoted spec are extra"
        );
    }

    #[test]
    fn header_matches_row_arity() {
        let r = analyze("C6").unwrap();
        assert_eq!(
            csv_header().split(',').count(),
            r.to_csv_row().split(',').count()
        );
    }

    #[test]
    fn human_table_lists_every_field() {
        let text = analyze("A4").unwrap().to_human();
        for key in [
            "spec", "order", "abelian", "exponent", "subgroups", "maximals", "sigma", "c3",
            "klein quotients", "theorem_b", "corollary_c", "theorem_d", "elapsed_ms",
        ] {
            assert!(text.contains(key), "missing {key}");
        }
        assert!(text.contains("sigma            5"));
    }
}
