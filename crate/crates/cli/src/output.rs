//! Output framing shared by every subcommand.
//!
//! Every output starts with one `#` metadata line carrying the tool version,
//! the format tag and an echo of the resolved settings. CSV bodies follow with
//! a header row. Numbers use the shortest decimal form that parses back to
//! the same `f64`; undefined values are empty fields. Lines end in `\n`.

use std::fmt::{self, Display, Write as _};

pub const TOOL: &str = "regcap";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const FORMAT_TAG: &str = "regcap.v1";

pub fn num(x: f64) -> String {
    x.to_string()
}

pub fn opt_num(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Metadata {
    command: &'static str,
    pairs: Vec<(String, String)>,
}

impl Metadata {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            pairs: Vec::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Display) -> Self {
        self.pairs.push((key.to_string(), value.to_string()));
        self
    }

    pub fn with_num(self, key: &str, value: f64) -> Self {
        self.with(key, num(value))
    }
}

impl Display for Metadata {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "# {TOOL} {VERSION} format={FORMAT_TAG} command={}",
            self.command
        )?;
        for (k, v) in &self.pairs {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CsvTable {
    header: &'static [&'static str],
    rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn new(header: &'static [&'static str]) -> Self {
        Self {
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.header.len(), "row width must match header");
        self.rows.push(row);
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn render(&self, meta: &Metadata) -> String {
        let mut out = String::new();
        writeln!(out, "{meta}").unwrap();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Plain-text report: the metadata line followed by free-form lines.
#[derive(Debug, Clone, Default)]
pub struct TextReport {
    lines: Vec<String>,
}

impl TextReport {
    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn field(&mut self, key: &str, value: impl Display) {
        self.lines.push(format!("{key}: {value}"));
    }

    pub fn render(&self, meta: &Metadata) -> String {
        let mut out = format!("{meta}\n");
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metadata_line_shape() {
        let m = Metadata::new("sweep")
            .with("figure", "fig2")
            .with_num("transfer", 1.0);
        assert_eq!(
            m.to_string(),
            format!("# regcap {VERSION} format=regcap.v1 command=sweep figure=fig2 transfer=1")
        );
    }

    #[test]
    fn csv_rendering() {
        let mut t = CsvTable::new(&["a", "b"]);
        t.push(vec![num(0.1), opt_num(None)]);
        let text = t.render(&Metadata::new("x"));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with('#'));
        assert_eq!(lines[1], "a,b");
        assert_eq!(lines[2], "0.1,");
        assert!(!text.contains('\r'));
    }

    #[test]
    fn numbers_round_trip() {
        for x in [
            0.1 + 0.2,
            1e-300,
            1e300,
            -0.0,
            999.0,
            1.0 / 3.0,
            f64::MIN_POSITIVE,
        ] {
            let s = num(x);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits(), "{s}");
        }
        assert_eq!(num(0.999), "0.999");
        assert_eq!(num(1e6), "1000000");
    }
}
