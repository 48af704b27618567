//! Machine-readable run reports (`meg-report/1`) and benchmark CSV rows.

use std::fmt::Write as _;

use serde::Serialize;

use crate::graph::{Graph, Vertex};
use crate::monitor::WitnessMap;

pub const REPORT_SCHEMA: &str = "meg-report/1";

/// JSON Schema describing [`Report`].
pub const REPORT_JSON_SCHEMA: &str = include_str!("../schema/meg-report-1.json");

pub const BENCH_HEADER: &str = "instance,method,size,bound,time_ms";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Instance {
    pub n: usize,
    pub m: usize,
    pub source: String,
}

impl Instance {
    pub fn of(g: &Graph, source: impl Into<String>) -> Self {
        Instance {
            n: g.n(),
            m: g.m(),
            source: source.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Decision {
    pub budget: usize,
    pub answer: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub edge: [Vertex; 2],
    pub pair: Option<[Vertex; 2]>,
}

/// One command's outcome. Every field is always serialized, in declaration
/// order, with `null` for fields that do not apply.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub instance: Instance,
    pub method: String,
    pub meg: Option<Vec<Vertex>>,
    pub size: Option<usize>,
    pub optimal: Option<bool>,
    pub bound: Option<f64>,
    pub decision: Option<Decision>,
    pub verified: Option<bool>,
    pub witnesses: Option<Vec<Witness>>,
    pub outputs: Option<Vec<String>>,
    pub wall_time_ms: Option<f64>,
}

impl Report {
    pub fn new(command: &str, instance: Instance, method: &str) -> Self {
        Report {
            schema: REPORT_SCHEMA,
            command: command.to_string(),
            instance,
            method: method.to_string(),
            meg: None,
            size: None,
            optimal: None,
            bound: None,
            decision: None,
            verified: None,
            witnesses: None,
            outputs: None,
            wall_time_ms: None,
        }
    }

    pub fn with_set(mut self, set: &[Vertex]) -> Self {
        self.size = Some(set.len());
        self.meg = Some(set.to_vec());
        self
    }

    pub fn with_witnesses(mut self, g: &Graph, witnesses: &WitnessMap) -> Self {
        self.witnesses = Some(
            witnesses
                .as_slice()
                .iter()
                .enumerate()
                .map(|(e, p)| {
                    let (a, b) = g.edge(e);
                    Witness {
                        edge: [a, b],
                        pair: p.map(|(u, v)| [u, v]),
                    }
                })
                .collect(),
        );
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let i = &self.instance;
        writeln!(out, "{} ({})", self.command, self.method).unwrap();
        writeln!(out, "  instance: {} (n={}, m={})", i.source, i.n, i.m).unwrap();
        if let Some(meg) = &self.meg {
            let list: Vec<String> = meg.iter().map(|v| v.to_string()).collect();
            writeln!(out, "  set:      {{{}}}", list.join(", ")).unwrap();
        }
        if let Some(size) = self.size {
            writeln!(out, "  size:     {size}").unwrap();
        }
        if let Some(optimal) = self.optimal {
            writeln!(out, "  optimal:  {optimal}").unwrap();
        }
        if let Some(bound) = self.bound {
            writeln!(out, "  bound:    {bound:.4}").unwrap();
        }
        if let Some(d) = &self.decision {
            let answer = if d.answer { "YES" } else { "NO" };
            writeln!(out, "  MEG <= {}: {answer}", d.budget).unwrap();
        }
        if let Some(v) = self.verified {
            writeln!(out, "  verified: {v}").unwrap();
        }
        if let Some(ws) = &self.witnesses {
            for w in ws {
                match w.pair {
                    Some([u, v]) => {
                        writeln!(
                            out,
                            "  edge {}-{} monitored by {u},{v}",
                            w.edge[0], w.edge[1]
                        )
                    }
                    None => writeln!(out, "  edge {}-{} unmonitored", w.edge[0], w.edge[1]),
                }
                .unwrap();
            }
        }
        if let Some(files) = &self.outputs {
            for f in files {
                writeln!(out, "  wrote:    {f}").unwrap();
            }
        }
        if let Some(t) = self.wall_time_ms {
            writeln!(out, "  time:     {t:.3} ms").unwrap();
        }
        out
    }
}

/// One benchmark measurement.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub instance: String,
    pub method: String,
    pub size: usize,
    pub bound: Option<f64>,
    pub time_ms: Option<f64>,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        let bound = self.bound.map(|b| format!("{b:.6}")).unwrap_or_default();
        let time = self.time_ms.map(|t| format!("{t:.3}")).unwrap_or_default();
        format!(
            "{},{},{},{},{}",
            self.instance, self.method, self.size, bound, time
        )
    }
}

pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(BENCH_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_csv());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_field_order_is_fixed() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let json = Report::new("solve", Instance::of(&g, "k2.edges"), "exact")
            .with_set(&[0, 1])
            .to_json();
        let keys: Vec<usize> = [
            "\"schema\"",
            "\"command\"",
            "\"instance\"",
            "\"method\"",
            "\"meg\"",
            "\"size\"",
            "\"optimal\"",
            "\"bound\"",
            "\"decision\"",
            "\"verified\"",
            "\"witnesses\"",
            "\"outputs\"",
            "\"wall_time_ms\"",
        ]
        .iter()
        .map(|k| json.find(k).unwrap_or_else(|| panic!("missing {k}")))
        .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn csv_rows() {
        let rows = vec![BenchRow {
            instance: "a.edges".into(),
            method: "greedy".into(),
            size: 3,
            bound: Some(4.5),
            time_ms: None,
        }];
        assert_eq!(
            bench_csv(&rows),
            format!("{BENCH_HEADER}\na.edges,greedy,3,4.500000,\n")
        );
        assert_eq!(bench_csv(&[]), format!("{BENCH_HEADER}\n"));
    }
}
