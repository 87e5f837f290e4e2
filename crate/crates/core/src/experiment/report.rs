use crate::error::{Error, Result};
use crate::experiment::config::Model;
use crate::experiment::ensemble::{EnsembleResult, PointSummary, Stats};
use crate::experiment::output::fmt_sig;

const COLUMNS: [(&str, Option<f64>); 4] = [
    ("ER", None),
    ("p=0", Some(0.0)),
    ("p=0.5", Some(0.5)),
    ("p=1", Some(1.0)),
];

fn column(results: &EnsembleResult, p: Option<f64>) -> Option<&PointSummary> {
    match p {
        None => results.find(|pt| pt.model == Model::Er),
        Some(p) => results.find(|pt| pt.model == Model::CliqueNet && pt.p == Some(p)),
    }
}

fn cell(stats: &Stats) -> String {
    let sd = if stats.sd == 0.0 {
        "0".to_string()
    } else {
        fmt_sig(stats.sd, 2)
    };
    format!("{} ± {}", fmt_sig(stats.mean, 4), sd)
}

/// Renders clustering `C` and mean path length `L` for the ER baseline and
/// the clique nets at `p = 0, 0.5, 1` as a plain-text table of
/// `mean ± sd` cells.
pub fn table1_report(results: &EnsembleResult) -> Result<String> {
    let mut cells = Vec::with_capacity(COLUMNS.len());
    for (name, p) in COLUMNS {
        let summary = column(results, p)
            .ok_or_else(|| Error::IncompleteResults(format!("no results for column {name}")))?;
        let mut pair = Vec::with_capacity(2);
        for measure in ["C", "L"] {
            let stats = summary.get(measure).ok_or_else(|| {
                Error::IncompleteResults(format!("column {name} lacks measure {measure}"))
            })?;
            pair.push(cell(stats));
        }
        cells.push(pair);
    }

    let width = cells
        .iter()
        .flatten()
        .map(|c| c.chars().count())
        .chain(COLUMNS.iter().map(|(n, _)| n.len()))
        .max()
        .unwrap_or(0)
        + 2;
    let mut out = format!("{:<8}", "");
    for (name, _) in COLUMNS {
        out.push_str(&format!("{name:>width$}"));
    }
    out.push('\n');
    for (row, measure) in ["C", "L"].iter().enumerate() {
        out.push_str(&format!("{measure:<8}"));
        for col in &cells {
            out.push_str(&format!("{:>width$}", col[row]));
        }
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiment::config::GridPoint;
    use crate::experiment::ensemble::ReplicaRow;

    fn rows(with_er: bool, replicas: usize) -> Vec<ReplicaRow> {
        let mut points: Vec<GridPoint> = [0.0, 0.5, 1.0]
            .iter()
            .map(|&p| GridPoint::cliquenet(5, 2, p, 100))
            .collect();
        if with_er {
            points.push(GridPoint::er(100, 6.66));
        }
        let mut out = Vec::new();
        for point in points {
            for r in 0..replicas {
                let mut row = ReplicaRow::new(point.clone(), r, r as u64);
                row.set("C", 0.5 + 0.01 * r as f64);
                row.set("L", 5.0 - 0.1 * r as f64);
                out.push(row);
            }
        }
        out
    }

    #[test]
    fn renders_four_columns() {
        let text = table1_report(&EnsembleResult::from_rows(&rows(true, 3))).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        for name in ["ER", "p=0", "p=0.5", "p=1"] {
            assert!(lines[0].contains(name));
        }
        assert!(lines[1].starts_with('C'));
        assert!(lines[2].starts_with('L'));
        assert_eq!(lines[1].matches("0.5100 ± 0.010").count(), 4, "{text}");
    }

    #[test]
    fn single_replica_has_zero_sd() {
        let text = table1_report(&EnsembleResult::from_rows(&rows(true, 1))).unwrap();
        assert_eq!(text.matches("± 0").count(), 8, "{text}");
        assert!(text.contains("0.5000 ± 0"));
    }

    #[test]
    fn missing_er_column() {
        assert!(matches!(
            table1_report(&EnsembleResult::from_rows(&rows(false, 2))),
            Err(Error::IncompleteResults(_))
        ));
    }
}
