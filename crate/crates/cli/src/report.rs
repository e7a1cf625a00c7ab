//! Report types emitted by the benchmark harness: one row per
//! (scheme, metric) for measurements, and a scheme-by-profile verdict
//! matrix for the migration comparison. Both render as CSV or a markdown
//! pipe table.

use pqcert_core::x509::{Verdict, VerifierProfile};

use crate::fixtures::Scheme;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Markdown,
}

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub scheme: Scheme,
    pub metric: String,
    pub value: f64,
    pub unit: &'static str,
}

#[derive(Debug, Clone, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

fn format_value(value: f64) -> String {
    if value.fract() == 0.0 {
        format!("{}", value as i64)
    } else {
        format!("{:.2}", value)
    }
}

fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn markdown_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("| {} |\n", header.join(" | "));
    out.push_str(&format!("|{}\n", " --- |".repeat(header.len())));
    for row in rows {
        out.push_str(&format!("| {} |\n", row.join(" | ")));
    }
    out
}

impl BenchReport {
    pub fn push(&mut self, scheme: Scheme, metric: &str, value: f64, unit: &'static str) {
        self.rows.push(BenchRow {
            scheme,
            metric: metric.to_string(),
            value,
            unit,
        });
    }

    pub fn value_of(&self, scheme: Scheme, metric: &str) -> Option<f64> {
        self.rows
            .iter()
            .find(|r| r.scheme == scheme && r.metric == metric)
            .map(|r| r.value)
    }

    fn cells(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                vec![
                    r.scheme.to_string(),
                    r.metric.clone(),
                    format_value(r.value),
                    r.unit.to_string(),
                ]
            })
            .collect()
    }

    pub fn emit(&self, format: ReportFormat) -> String {
        const HEADER: [&str; 4] = ["scheme", "metric", "value", "unit"];
        match format {
            ReportFormat::Csv => csv_table(&HEADER, &self.cells()),
            ReportFormat::Markdown => markdown_table(&HEADER, &self.cells()),
        }
    }
}

fn profile_str(profile: VerifierProfile) -> &'static str {
    match profile {
        VerifierProfile::Legacy => "legacy",
        VerifierProfile::PqcAware => "pqc-aware",
    }
}

#[derive(Debug, Clone)]
pub struct CompatCell {
    pub scheme: Scheme,
    pub profile: VerifierProfile,
    pub verdict: Verdict,
}

/// Scheme-by-profile verdicts; all four schemes appear under both profiles.
#[derive(Debug, Clone, Default)]
pub struct CompatMatrix {
    pub cells: Vec<CompatCell>,
}

impl CompatMatrix {
    pub fn push(&mut self, scheme: Scheme, profile: VerifierProfile, verdict: Verdict) {
        self.cells.push(CompatCell {
            scheme,
            profile,
            verdict,
        });
    }

    pub fn verdict_of(&self, scheme: Scheme, profile: VerifierProfile) -> Option<Verdict> {
        self.cells
            .iter()
            .find(|c| c.scheme == scheme && c.profile == profile)
            .map(|c| c.verdict)
    }

    pub fn emit(&self, format: ReportFormat) -> String {
        const HEADER: [&str; 4] = ["scheme", "profile", "verdict", "reason"];
        let rows: Vec<Vec<String>> = self
            .cells
            .iter()
            .map(|c| {
                let (verdict, reason) = match c.verdict {
                    Verdict::Accept => ("accept", ""),
                    Verdict::Reject(reason) => ("reject", reason.code()),
                };
                vec![
                    c.scheme.to_string(),
                    profile_str(c.profile).to_string(),
                    verdict.to_string(),
                    reason.to_string(),
                ]
            })
            .collect();
        match format {
            ReportFormat::Csv => csv_table(&HEADER, &rows),
            ReportFormat::Markdown => markdown_table(&HEADER, &rows),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_is_header_only() {
        let report = BenchReport::default();
        assert_eq!(report.emit(ReportFormat::Csv), "scheme,metric,value,unit\n");
    }

    #[test]
    fn one_row_csv_is_two_lines() {
        let mut report = BenchReport::default();
        report.push(Scheme::Pure, "der_len", 1234.0, "bytes");
        let csv = report.emit(ReportFormat::Csv);
        assert_eq!(csv.lines().count(), 2);
        assert_eq!(csv.lines().nth(1).unwrap(), "pure,der_len,1234,bytes");
    }

    #[test]
    fn markdown_for_four_schemes_is_six_lines() {
        let mut report = BenchReport::default();
        for scheme in Scheme::ALL {
            report.push(scheme, "der_len", 100.0, "bytes");
        }
        let md = report.emit(ReportFormat::Markdown);
        assert_eq!(md.lines().count(), 6);
        assert!(md.starts_with("| scheme | metric | value | unit |"));
    }

    #[test]
    fn fractional_values_keep_two_decimals() {
        let mut report = BenchReport::default();
        report.push(Scheme::Composite, "median_issue", 52.375, "ms");
        assert!(report.emit(ReportFormat::Csv).contains("52.38"));
    }

    #[test]
    fn matrix_cells_round_trip() {
        use pqcert_core::x509::RejectReason;
        let mut matrix = CompatMatrix::default();
        matrix.push(
            Scheme::Composite,
            VerifierProfile::Legacy,
            Verdict::Reject(RejectReason::UnknownAlgorithm),
        );
        matrix.push(Scheme::Catalyst, VerifierProfile::Legacy, Verdict::Accept);
        assert_eq!(
            matrix.verdict_of(Scheme::Composite, VerifierProfile::Legacy),
            Some(Verdict::Reject(RejectReason::UnknownAlgorithm))
        );
        let csv = matrix.emit(ReportFormat::Csv);
        assert!(csv.contains("composite,legacy,reject,unknown-algorithm"));
        assert!(csv.contains("catalyst,legacy,accept,"));
    }
}
