//! CSV output. Numbers always use `.` as the decimal separator.

use std::io::{self, Write};

use embred_core::simeval::Comparison;
use embred_core::SuiteReport;

pub const EVAL_HEADER: &str = "dataset,pairs,evaluated,skipped,rho_x100";
pub const VARIANCE_HEADER: &str = "component,fraction";

/// Label of the aggregate row at the end of an evaluation CSV.
pub const AGGREGATE_ROW: &str = "aggregate";

/// One row per dataset, then an aggregate row whose `rho_x100` is the sum
/// over scored datasets. Datasets that failed get `NA` fields.
pub fn write_eval_csv<W: Write>(mut w: W, suite: &SuiteReport) -> io::Result<()> {
    writeln!(w, "{EVAL_HEADER}")?;
    let (mut pairs, mut evaluated, mut skipped) = (0, 0, 0);
    for outcome in &suite.outcomes {
        match outcome {
            Ok(r) => {
                writeln!(
                    w,
                    "{},{},{},{},{:.4}",
                    csv_field(&r.dataset),
                    r.pairs_total,
                    r.pairs_evaluated,
                    r.pairs_skipped_oov,
                    r.rho_x100
                )?;
                pairs += r.pairs_total;
                evaluated += r.pairs_evaluated;
                skipped += r.pairs_skipped_oov;
            }
            Err(f) => writeln!(w, "{},NA,NA,NA,NA", csv_field(&f.dataset))?,
        }
    }
    writeln!(
        w,
        "{AGGREGATE_ROW},{pairs},{evaluated},{skipped},{:.4}",
        suite.cumulative()
    )?;
    w.flush()
}

/// `(1-based component, fraction)` rows as produced by `variance_report`.
pub fn write_variance_csv<W: Write>(mut w: W, fractions: &[(usize, f64)]) -> io::Result<()> {
    writeln!(w, "{VARIANCE_HEADER}")?;
    for (i, f) in fractions {
        writeln!(w, "{i},{f:.10}")?;
    }
    w.flush()
}

/// Plain-text summary of a comparison against a baseline suite.
pub fn format_comparison(c: &Comparison) -> String {
    format!(
        "datasets={} wins={} mean_diff_x100={:+.4} mean_relative_change={:+.4}% relative_change_of_sums={:+.4}%",
        c.datasets,
        c.wins,
        c.mean_difference,
        100.0 * c.mean_relative_change,
        100.0 * c.relative_change_of_sums
    )
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}
