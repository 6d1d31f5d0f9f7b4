//! CSV and JSON encodings of [`TimeSeries`].
//!
//! CSV: `# key = value` metadata lines and `# warning: ...` lines, then a
//! header `t_s,<channel>,...` and one row per grid point with every value
//! printed to 17 significant digits. JSON: `{"metadata": {...}, "series":
//! {"t_s": [...], "<channel>": [...]}}`.

use std::io::{Read, Write};
use std::path::Path;

use qvn_core::series::{Metadata, TimeSeries};
use serde_json::{json, Map, Value};

use crate::config::Format;
use crate::error::{CliError, Result};

pub const TIME_COLUMN: &str = "t_s";

/// Scientific notation with 17 significant digits.
pub fn format_value(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn to_csv(series: &TimeSeries<f64>) -> String {
    let mut out = String::new();
    for (k, v) in &series.metadata.params {
        out.push_str(&format!("# {k} = {v}\n"));
    }
    for w in &series.metadata.warnings {
        out.push_str(&format!("# warning: {w}\n"));
    }
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let header: Vec<&str> = std::iter::once(TIME_COLUMN)
        .chain(series.channels().iter().map(|c| c.name.as_str()))
        .collect();
    writer.write_record(&header).expect("in-memory write");
    for (i, t) in series.times().iter().enumerate() {
        let row: Vec<String> = std::iter::once(format_value(*t))
            .chain(series.channels().iter().map(|c| format_value(c.values[i])))
            .collect();
        writer.write_record(&row).expect("in-memory write");
    }
    out.push_str(&String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 csv"));
    out
}

pub fn from_csv(text: &str, origin: &Path) -> Result<TimeSeries<f64>> {
    let parse_err = |message: String| CliError::Parse { path: origin.to_path_buf(), message };
    let mut metadata = Metadata::default();
    for line in text.lines().take_while(|l| l.starts_with('#')) {
        let body = line[1..].trim();
        if let Some(w) = body.strip_prefix("warning:") {
            metadata.warnings.push(w.trim().to_string());
        } else if let Some((k, v)) = body.split_once(" = ") {
            metadata.set(k.trim(), v.trim());
        }
    }

    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| parse_err(e.to_string()))?.clone();
    if header.get(0) != Some(TIME_COLUMN) {
        return Err(parse_err(format!("first column must be `{TIME_COLUMN}`")));
    }
    let mut columns: Vec<Vec<f64>> = vec![Vec::new(); header.len()];
    for (row_idx, record) in reader.records().enumerate() {
        let record = record.map_err(|e| parse_err(e.to_string()))?;
        if record.len() != header.len() {
            return Err(parse_err(format!("row {} has {} fields, expected {}", row_idx + 1, record.len(), header.len())));
        }
        for (col, field) in record.iter().enumerate() {
            let v: f64 = field
                .trim()
                .parse()
                .map_err(|_| parse_err(format!("row {}: `{field}` is not a number", row_idx + 1)))?;
            columns[col].push(v);
        }
    }
    let mut columns = columns.into_iter();
    let times = columns.next().unwrap_or_default();
    let mut series = TimeSeries::with_increasing_times(times).map_err(|e| parse_err(e.to_string()))?;
    for (name, values) in header.iter().skip(1).zip(columns) {
        series.push_channel(name, values).map_err(|e| parse_err(e.to_string()))?;
    }
    series.metadata = metadata;
    Ok(series)
}

pub fn to_json(series: &TimeSeries<f64>) -> String {
    let params: Map<String, Value> = series
        .metadata
        .params
        .iter()
        .map(|(k, v)| (k.clone(), Value::String(v.clone())))
        .collect();
    let mut data = Map::new();
    data.insert(TIME_COLUMN.into(), json!(series.times()));
    for c in series.channels() {
        data.insert(c.name.clone(), json!(c.values));
    }
    let doc = json!({
        "metadata": { "params": params, "warnings": series.metadata.warnings },
        "series": data,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("finite values serialize");
    s.push('\n');
    s
}

pub fn from_json(text: &str, origin: &Path) -> Result<TimeSeries<f64>> {
    let parse_err = |message: String| CliError::Parse { path: origin.to_path_buf(), message };
    let doc: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let numbers = |v: &Value, name: &str| -> Result<Vec<f64>> {
        v.as_array()
            .ok_or_else(|| parse_err(format!("series `{name}` is not an array")))?
            .iter()
            .map(|x| x.as_f64().ok_or_else(|| parse_err(format!("series `{name}` holds a non-number"))))
            .collect()
    };
    let data = doc
        .get("series")
        .and_then(Value::as_object)
        .ok_or_else(|| parse_err("missing `series` object".into()))?;
    let times = numbers(
        data.get(TIME_COLUMN).ok_or_else(|| parse_err(format!("missing `{TIME_COLUMN}`")))?,
        TIME_COLUMN,
    )?;
    let mut series = TimeSeries::with_increasing_times(times).map_err(|e| parse_err(e.to_string()))?;
    for (name, v) in data.iter().filter(|(k, _)| k.as_str() != TIME_COLUMN) {
        series
            .push_channel(name.clone(), numbers(v, name)?)
            .map_err(|e| parse_err(e.to_string()))?;
    }
    if let Some(meta) = doc.get("metadata") {
        if let Some(params) = meta.get("params").and_then(Value::as_object) {
            for (k, v) in params {
                let v = v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string());
                series.metadata.set(k.clone(), v);
            }
        }
        if let Some(ws) = meta.get("warnings").and_then(Value::as_array) {
            series.metadata.warnings = ws.iter().filter_map(|w| w.as_str().map(str::to_string)).collect();
        }
    }
    Ok(series)
}

pub fn encode(series: &TimeSeries<f64>, format: Format) -> String {
    match format {
        Format::Csv => to_csv(series),
        Format::Json => to_json(series),
    }
}

/// Writes to `path`, or to stdout when `path` is `None`.
pub fn write_series(series: &TimeSeries<f64>, format: Format, path: Option<&Path>) -> Result<()> {
    let text = encode(series, format);
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io("<stdout>", e)),
    }
}

/// Reads a series, choosing the decoder from the first non-blank byte.
pub fn read_series(path: &Path) -> Result<TimeSeries<f64>> {
    let mut text = String::new();
    std::fs::File::open(path)
        .and_then(|mut f| f.read_to_string(&mut text))
        .map_err(|e| CliError::io(path, e))?;
    if text.trim_start().starts_with('{') {
        from_json(&text, path)
    } else {
        from_csv(&text, path)
    }
}
