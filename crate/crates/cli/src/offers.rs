//! Offers file for `market`: CSV with header `delta,transfer,cost`, one
//! regulator offer per row. An empty file is an empty market.

use std::fs;
use std::path::Path;

use regcap_core::RegulatorOffer;

use crate::error::CliError;

pub const OFFERS_HEADER: [&str; 3] = ["delta", "transfer", "cost"];

pub fn load(path: &Path) -> Result<Vec<RegulatorOffer>, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text, &path.display().to_string())
}

pub fn parse(text: &str, origin: &str) -> Result<Vec<RegulatorOffer>, CliError> {
    let err = |line: u64, message: String| CliError::Parse {
        origin: origin.to_string(),
        line: line as usize,
        message,
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());

    let header = reader.headers().map_err(|e| err(1, e.to_string()))?.clone();
    if header.is_empty() {
        return Ok(Vec::new());
    }
    let found: Vec<&str> = header.iter().collect();
    if found != OFFERS_HEADER {
        let line = header.position().map_or(1, |p| p.line());
        return Err(err(
            line,
            format!(
                "expected header `{}`, found `{}`",
                OFFERS_HEADER.join(","),
                found.join(",")
            ),
        ));
    }

    let mut offers = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            err(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let mut values = [0.0; 3];
        for (slot, (name, raw)) in values.iter_mut().zip(OFFERS_HEADER.iter().zip(&record)) {
            *slot = raw
                .parse()
                .map_err(|_| err(line, format!("column `{name}`: invalid number `{raw}`")))?;
        }
        let offer = RegulatorOffer::new(values[0], values[1], values[2])
            .map_err(|e| err(line, e.to_string()))?;
        offers.push(offer);
    }
    Ok(offers)
}
