use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use crate::clustering;
use crate::count::{to_f64, Rational};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Column {
    C3,
    C4,
    C5,
    Density,
}

impl Column {
    pub const ALL: [Column; 4] = [Column::C3, Column::C4, Column::C5, Column::Density];

    pub fn name(self) -> &'static str {
        match self {
            Column::C3 => "C3",
            Column::C4 => "C4",
            Column::C5 => "C5",
            Column::Density => "density",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnapshotError {
    pub file: String,
    pub message: String,
}

/// Per-snapshot statistics. `None` marks an undefined cell; undefined
/// cells are never filled in.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SeriesTable {
    pub snapshot_ids: Vec<String>,
    pub c3: Vec<Option<Rational>>,
    pub c4: Vec<Option<Rational>>,
    pub c5: Vec<Option<Rational>>,
    pub density: Vec<Option<Rational>>,
    pub errors: Vec<SnapshotError>,
}

impl SeriesTable {
    pub fn len(&self) -> usize {
        self.snapshot_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.snapshot_ids.is_empty()
    }

    pub fn column(&self, col: Column) -> &[Option<Rational>] {
        match col {
            Column::C3 => &self.c3,
            Column::C4 => &self.c4,
            Column::C5 => &self.c5,
            Column::Density => &self.density,
        }
    }

    pub fn column_f64(&self, col: Column) -> Vec<Option<f64>> {
        self.column(col).iter().map(|c| c.as_ref().map(to_f64)).collect()
    }

    /// Appends one snapshot. Undefined coefficients become empty cells;
    /// any other failure is logged against the snapshot.
    pub fn push_graph(&mut self, id: &str, g: &Graph) {
        self.snapshot_ids.push(id.to_string());
        let mut cell = |result: Result<Rational>| match result {
            Ok(v) => Some(v),
            Err(Error::UndefinedCoefficient { .. }) => None,
            Err(e) => {
                self.errors.push(SnapshotError {
                    file: id.to_string(),
                    message: e.to_string(),
                });
                None
            }
        };
        let c3 = cell(clustering::c3(g).map(|r| r.value));
        let c4 = cell(clustering::c4(g).map(|r| r.value));
        let c5 = cell(clustering::c5(g).map(|r| r.value));
        let density = g.density().ok();
        self.c3.push(c3);
        self.c4.push(c4);
        self.c5.push(c5);
        self.density.push(density);
    }

    /// `snapshot,C3,C4,C5,density` with `NA` for undefined cells.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("snapshot,C3,C4,C5,density\n");
        for (i, id) in self.snapshot_ids.iter().enumerate() {
            out.push_str(id);
            for col in Column::ALL {
                out.push(',');
                match &self.column(col)[i] {
                    Some(v) => out.push_str(&to_f64(v).to_string()),
                    None => out.push_str("NA"),
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .snapshot_ids
            .iter()
            .enumerate()
            .map(|(i, id)| {
                let mut row = serde_json::Map::new();
                row.insert("snapshot".into(), json!(id));
                for col in Column::ALL {
                    let cell = match &self.column(col)[i] {
                        Some(v) => json!({
                            "num": v.numer(),
                            "den": v.denom(),
                            "value": to_f64(v),
                        }),
                        None => Value::Null,
                    };
                    row.insert(col.name().into(), cell);
                }
                Value::Object(row)
            })
            .collect();
        let errors: Vec<Value> = self
            .errors
            .iter()
            .map(|e| json!({"file": e.file, "error": e.message}))
            .collect();
        json!({"rows": rows, "errors": errors})
    }
}

/// Reads every regular file in `dir` as an edge list, in lexicographic
/// file-name order. The snapshot id is the file name without extension.
pub fn series_scan(dir: &Path) -> Result<SeriesTable> {
    let io = |e: std::io::Error| Error::Io {
        path: dir.display().to_string(),
        message: e.to_string(),
    };
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.is_file() {
            files.push(path);
        }
    }
    if files.is_empty() {
        return Err(Error::Io {
            path: dir.display().to_string(),
            message: "directory contains no snapshot files".into(),
        });
    }
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));

    let mut table = SeriesTable::default();
    for path in files {
        let name = path.file_name().unwrap_or_default().to_string_lossy().into_owned();
        let id = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| name.clone());
        let parsed = fs::read_to_string(&path)
            .map_err(|e| e.to_string())
            .and_then(|text| Graph::parse(&text).map_err(|e| e.to_string()));
        match parsed {
            Ok(g) => table.push_graph(&id, &g),
            Err(message) => table.errors.push(SnapshotError { file: name, message }),
        }
    }
    Ok(table)
}
