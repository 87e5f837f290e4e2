//! CSV writers. Every file starts with a `# schema=<name> v<version>` comment
//! line followed by one header row; floating-point values carry 9
//! significant digits.

use std::io::Write;

use crate::communicability::{CommunicabilityMatrix, EstradaResult};
use crate::error::{Error, Result};
use crate::metrics::clustering::ClusteringSpectrum;
use crate::metrics::degree::DegreeHistogram;
use crate::metrics::fit::PowerLawFit;
use crate::metrics::MetricsSummary;

pub const SCHEMA_VERSION: u32 = 1;
/// Largest graph whose pairwise communicabilities are written out.
pub const TRIPLET_CAP: usize = 200;

/// Formats `x` with `digits` significant digits.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let exponent = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exponent) {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.prec$e}", prec = digits.saturating_sub(1))
    }
}

pub fn fmt9(x: f64) -> String {
    fmt_sig(x, 9)
}

pub(crate) fn opt9(x: Option<f64>) -> String {
    x.map(fmt9).unwrap_or_default()
}

pub(crate) fn csv_writer<W: Write>(mut out: W, schema: &str) -> Result<csv::Writer<W>> {
    writeln!(out, "# schema={schema} v{SCHEMA_VERSION}")?;
    Ok(csv::Writer::from_writer(out))
}

pub fn write_degree_dist<W: Write>(hist: &DegreeHistogram, out: W) -> Result<()> {
    let mut w = csv_writer(out, "degree_dist")?;
    w.write_record(["k", "P", "CP"])?;
    for (k, _) in hist.occupied() {
        w.write_record([k.to_string(), fmt9(hist.p(k)), fmt9(hist.cp(k))])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_clustering_spectrum<W: Write>(spectrum: &ClusteringSpectrum, out: W) -> Result<()> {
    let mut w = csv_writer(out, "clustering_spectrum")?;
    w.write_record(["k", "C_of_k", "count"])?;
    for (k, c, count) in spectrum.entries() {
        w.write_record([k.to_string(), fmt9(c), count.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

fn fit_cells(fit: Option<PowerLawFit>) -> [String; 2] {
    [opt9(fit.map(|f| f.slope)), opt9(fit.map(|f| f.r_squared))]
}

pub fn write_summary<W: Write>(s: &MetricsSummary, out: W) -> Result<()> {
    let mut w = csv_writer(out, "summary")?;
    w.write_record([
        "N",
        "E",
        "mean_degree",
        "L",
        "C",
        "cp_loglog_slope",
        "cp_loglog_r2",
        "cp_semilog_slope",
        "cp_semilog_r2",
        "ck_loglog_slope",
        "ck_loglog_r2",
    ])?;
    let mut row = vec![
        s.nodes.to_string(),
        s.edges.to_string(),
        fmt9(s.mean_degree),
        opt9(s.path_length()),
        fmt9(s.clustering),
    ];
    row.extend(fit_cells(s.cp_loglog));
    row.extend(fit_cells(s.cp_semilog));
    row.extend(fit_cells(s.spectrum_loglog));
    w.write_record(&row)?;
    w.flush()?;
    Ok(())
}

/// One row of `estrada.csv`. Generator parameters are blank for graphs that
/// carry none (ER draws, external edge lists).
#[derive(Debug, Clone, PartialEq)]
pub struct EstradaRow {
    pub nodes: usize,
    pub a: Option<usize>,
    pub m: Option<usize>,
    pub p: Option<f64>,
    pub seed: Option<u64>,
    pub result: EstradaResult,
}

pub fn write_estrada<W: Write>(rows: &[EstradaRow], out: W) -> Result<()> {
    let mut w = csv_writer(out, "estrada")?;
    w.write_record(["N", "a", "m", "p", "seed", "lambda_max", "log_ee", "ee_or_inf"])?;
    for r in rows {
        w.write_record([
            r.nodes.to_string(),
            r.a.map(|v| v.to_string()).unwrap_or_default(),
            r.m.map(|v| v.to_string()).unwrap_or_default(),
            r.p.map(|v| v.to_string()).unwrap_or_default(),
            r.seed.map(|v| v.to_string()).unwrap_or_default(),
            fmt9(r.result.lambda_max),
            fmt9(r.result.log_ee),
            r.result.ee.map(fmt9).unwrap_or_else(|| "inf".into()),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// `(u, v, G_uv)` for `u <= v`, row-major.
pub fn write_communicability_triplets<W: Write>(g: &CommunicabilityMatrix, out: W) -> Result<()> {
    let n = g.size();
    if n > TRIPLET_CAP {
        return Err(Error::Capacity {
            nodes: n,
            cap: TRIPLET_CAP,
        });
    }
    let mut w = csv_writer(out, "communicability")?;
    w.write_record(["u", "v", "G_uv"])?;
    for u in 0..n {
        for v in u..n {
            w.write_record([u.to_string(), v.to_string(), fmt9(g.get(u, v))])?;
        }
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn significant_digits() {
        assert_eq!(fmt9(0.0), "0");
        assert_eq!(fmt9(5.29485569113), "5.29485569");
        assert_eq!(fmt9(0.00134), "0.00134000000");
        assert_eq!(fmt9(-1.48), "-1.48000000");
        assert_eq!(fmt9(56069.65), "56069.6500");
        assert_eq!(fmt9(1.5e300), "1.50000000e300");
        assert_eq!(fmt9(f64::INFINITY), "inf");
        assert_eq!(fmt_sig(0.799123, 3), "0.799");
    }

    #[test]
    fn degree_dist_csv() {
        let g = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        let mut buf = Vec::new();
        write_degree_dist(&DegreeHistogram::from_graph(&g), &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "# schema=degree_dist v1\nk,P,CP\n1,0.800000000,1.00000000\n4,0.200000000,0.200000000\n"
        );
    }

    #[test]
    fn estrada_overflow_cell() {
        let rows = [EstradaRow {
            nodes: 3,
            a: None,
            m: None,
            p: None,
            seed: Some(4),
            result: EstradaResult {
                log_ee: 800.0,
                ee: None,
                lambda_max: 799.5,
            },
        }];
        let mut buf = Vec::new();
        write_estrada(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.ends_with("3,,,,4,799.500000,800.000000,inf\n"), "{text}");
    }
}
