//! Per-replica rows and their aggregation into ensemble statistics.
//!
//! Aggregates are always computed from rows as they appear in
//! `replicas.csv`, so `ensemble.csv` can be rebuilt offline from that file
//! alone.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::experiment::config::{GridPoint, Model};
use crate::experiment::output::{csv_writer, fmt9, opt9};

/// Scalar columns of `replicas.csv`, in file order.
pub const SCALAR_COLUMNS: [&str; 13] = [
    "nodes",
    "edges",
    "mean_degree",
    "L",
    "C",
    "cp_loglog_slope",
    "cp_loglog_r2",
    "cp_semilog_slope",
    "cp_semilog_r2",
    "ck_loglog_slope",
    "ck_loglog_r2",
    "lambda_max",
    "log_ee",
];

const KEY_COLUMNS: [&str; 8] = ["model", "a", "m", "p", "n", "mean_degree_target", "replica", "seed"];

#[derive(Debug, Clone, PartialEq)]
pub struct ReplicaRow {
    pub point: GridPoint,
    pub replica: usize,
    /// Seed the graph was actually drawn with.
    pub seed: u64,
    /// Values aligned with [`SCALAR_COLUMNS`]; `None` when not measured.
    pub values: [Option<f64>; SCALAR_COLUMNS.len()],
}

impl ReplicaRow {
    pub fn new(point: GridPoint, replica: usize, seed: u64) -> Self {
        Self {
            point,
            replica,
            seed,
            values: [None; SCALAR_COLUMNS.len()],
        }
    }

    fn index(name: &str) -> usize {
        SCALAR_COLUMNS
            .iter()
            .position(|&c| c == name)
            .unwrap_or_else(|| panic!("unknown scalar column {name}"))
    }

    pub fn set(&mut self, name: &str, value: f64) {
        self.values[Self::index(name)] = Some(value);
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.values[Self::index(name)]
    }
}

fn opt_cell<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn key_cells(point: &GridPoint) -> [String; 6] {
    [
        point.model.to_string(),
        opt_cell(point.a),
        opt_cell(point.m),
        opt_cell(point.p),
        point.n.to_string(),
        opt_cell(point.mean_degree),
    ]
}

pub fn write_replicas<W: Write>(rows: &[ReplicaRow], out: W) -> Result<()> {
    let mut w = csv_writer(out, "replicas")?;
    w.write_record(KEY_COLUMNS.iter().chain(SCALAR_COLUMNS.iter()))?;
    for row in rows {
        let mut cells: Vec<String> = key_cells(&row.point).into();
        cells.push(row.replica.to_string());
        cells.push(row.seed.to_string());
        cells.extend(row.values.iter().map(|&v| opt9(v)));
        w.write_record(&cells)?;
    }
    w.flush()?;
    Ok(())
}

fn parse_opt<T: std::str::FromStr>(cell: &str, line: usize) -> Result<Option<T>> {
    if cell.is_empty() {
        return Ok(None);
    }
    cell.parse().map(Some).map_err(|_| Error::Parse {
        line,
        message: format!("bad value {cell:?}"),
    })
}

fn parse_req<T: std::str::FromStr>(cell: &str, line: usize) -> Result<T> {
    parse_opt(cell, line)?.ok_or_else(|| Error::Parse {
        line,
        message: "missing required value".into(),
    })
}

pub fn read_replicas<R: Read>(input: R) -> Result<Vec<ReplicaRow>> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(input);
    let headers = reader.headers()?.clone();
    let expected: Vec<&str> = KEY_COLUMNS.iter().chain(SCALAR_COLUMNS.iter()).copied().collect();
    if headers.iter().collect::<Vec<_>>() != expected {
        return Err(Error::Parse {
            line: 1,
            message: "unexpected replicas.csv header".into(),
        });
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let model = Model::parse(&record[0]).ok_or_else(|| Error::Parse {
            line,
            message: format!("unknown model {:?}", &record[0]),
        })?;
        let point = GridPoint {
            model,
            a: parse_opt(&record[1], line)?,
            m: parse_opt(&record[2], line)?,
            p: parse_opt(&record[3], line)?,
            n: parse_req(&record[4], line)?,
            mean_degree: parse_opt(&record[5], line)?,
        };
        let mut row = ReplicaRow::new(point, parse_req(&record[6], line)?, parse_req(&record[7], line)?);
        for (i, cell) in record.iter().skip(KEY_COLUMNS.len()).enumerate() {
            row.values[i] = parse_opt(cell, line)?;
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Mean and sample standard deviation of one measure, with the raw values.
#[derive(Debug, Clone, PartialEq)]
pub struct Stats {
    pub count: usize,
    pub mean: f64,
    /// Sample standard deviation; 0 for a single value.
    pub sd: f64,
    pub raw: Vec<f64>,
}

impl Stats {
    pub fn from_values(raw: Vec<f64>) -> Self {
        let count = raw.len();
        let mean = raw.iter().sum::<f64>() / count as f64;
        let sd = if count > 1 {
            (raw.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (count - 1) as f64).sqrt()
        } else {
            0.0
        };
        Self {
            count,
            mean,
            sd,
            raw,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointSummary {
    pub point: GridPoint,
    pub replicas: usize,
    /// Measures in [`SCALAR_COLUMNS`] order; unmeasured ones are absent.
    pub measures: Vec<(String, Stats)>,
}

impl PointSummary {
    pub fn get(&self, measure: &str) -> Option<&Stats> {
        self.measures
            .iter()
            .find(|(name, _)| name == measure)
            .map(|(_, s)| s)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct EnsembleResult {
    pub points: Vec<PointSummary>,
}

impl EnsembleResult {
    /// Groups rows by grid point, keeping first-appearance order.
    pub fn from_rows(rows: &[ReplicaRow]) -> Self {
        let mut groups: Vec<(GridPoint, Vec<&ReplicaRow>)> = Vec::new();
        for row in rows {
            match groups.iter_mut().find(|(p, _)| *p == row.point) {
                Some((_, members)) => members.push(row),
                None => groups.push((row.point.clone(), vec![row])),
            }
        }
        let points = groups
            .into_iter()
            .map(|(point, members)| {
                let measures = SCALAR_COLUMNS
                    .iter()
                    .enumerate()
                    .filter_map(|(i, &name)| {
                        let raw: Vec<f64> = members.iter().filter_map(|r| r.values[i]).collect();
                        (!raw.is_empty()).then(|| (name.to_string(), Stats::from_values(raw)))
                    })
                    .collect();
                PointSummary {
                    point,
                    replicas: members.len(),
                    measures,
                }
            })
            .collect();
        Self { points }
    }

    pub fn from_replicas_csv<R: Read>(input: R) -> Result<Self> {
        Ok(Self::from_rows(&read_replicas(input)?))
    }

    pub fn find(&self, pred: impl Fn(&GridPoint) -> bool) -> Option<&PointSummary> {
        self.points.iter().find(|s| pred(&s.point))
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv_writer(out, "ensemble")?;
        w.write_record([
            "model",
            "a",
            "m",
            "p",
            "n",
            "mean_degree_target",
            "measure",
            "count",
            "mean",
            "sd",
        ])?;
        for s in &self.points {
            for (name, stats) in &s.measures {
                let mut cells: Vec<String> = key_cells(&s.point).into();
                cells.push(name.clone());
                cells.push(stats.count.to_string());
                cells.push(fmt9(stats.mean));
                cells.push(fmt9(stats.sd));
                w.write_record(&cells)?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(point: GridPoint, replica: usize, c: f64, l: Option<f64>) -> ReplicaRow {
        let mut r = ReplicaRow::new(point, replica, 10 + replica as u64);
        r.set("C", c);
        if let Some(l) = l {
            r.set("L", l);
        }
        r
    }

    #[test]
    fn stats() {
        let s = Stats::from_values(vec![1.0, 2.0, 3.0, 4.0]);
        assert_eq!(s.mean, 2.5);
        assert!((s.sd - (5.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert_eq!(Stats::from_values(vec![7.0]).sd, 0.0);
    }

    #[test]
    fn csv_round_trip_and_grouping() {
        let a = GridPoint::cliquenet(5, 2, 0.5, 100);
        let b = GridPoint::er(100, 6.66);
        let rows = vec![
            row(a.clone(), 0, 0.75, Some(4.0)),
            row(b.clone(), 0, 0.01, None),
            row(a.clone(), 1, 0.25, Some(5.0)),
        ];
        let mut buf = Vec::new();
        write_replicas(&rows, &mut buf).unwrap();
        let back = read_replicas(buf.as_slice()).unwrap();
        assert_eq!(back, rows);

        let ens = EnsembleResult::from_rows(&back);
        assert_eq!(ens.points.len(), 2);
        assert_eq!(ens.points[0].point, a);
        assert_eq!(ens.points[0].replicas, 2);
        assert_eq!(ens.points[0].get("C").unwrap().mean, 0.5);
        assert_eq!(ens.points[0].get("L").unwrap().raw, vec![4.0, 5.0]);
        assert!(ens.points[1].get("L").is_none());
        assert!(ens.find(|p| p.model == Model::Er).is_some());
    }

    #[test]
    fn rejects_wrong_header() {
        assert!(read_replicas("x,y\n1,2\n".as_bytes()).is_err());
    }
}
