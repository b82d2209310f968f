//! Tabular output of counts as CSV or JSON.

use std::io::{self, Write};

use serde::Serialize;

use crate::exact_arith::BigCount;
use crate::recursion::{n_planar, CountKey, MemoTable, RecursionError};

/// One computed count. `count` is decimal text so no consumer loses digits.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OutputRecord {
    pub d: u32,
    pub r: u32,
    pub s: u32,
    pub theta: u32,
    pub count: String,
}

impl OutputRecord {
    pub fn new(key: CountKey, count: &BigCount) -> Self {
        Self {
            d: key.d,
            r: key.r,
            s: key.s,
            theta: key.theta,
            count: count.to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

pub fn compute_record(key: CountKey, memo: &MemoTable) -> Result<OutputRecord, RecursionError> {
    let count = n_planar(key, memo)?;
    Ok(OutputRecord::new(key, &count))
}

/// Every admissible record with `1 ≤ d ≤ max_d`, sorted by key.
pub fn table_records(max_d: u32, memo: &MemoTable) -> Result<Vec<OutputRecord>, RecursionError> {
    (1..=max_d)
        .flat_map(CountKey::on_shell)
        .map(|key| compute_record(key, memo))
        .collect()
}

pub fn write_records<W: Write>(records: &[OutputRecord], format: Format, mut out: W) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut writer = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            if records.is_empty() {
                writer.write_record(["d", "r", "s", "theta", "count"])?;
            }
            for record in records {
                writer.serialize(record)?;
            }
            writer.flush()
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, records)?;
            writeln!(out)?;
            out.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(records: &[OutputRecord], format: Format) -> String {
        let mut buf = Vec::new();
        write_records(records, format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn degree_one_csv() {
        let memo = MemoTable::new();
        let records = table_records(1, &memo).unwrap();
        let text = render(&records, Format::Csv);
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "d,r,s,theta,count");
        assert!(lines.contains(&"1,2,0,3,1"));
        assert!(lines.contains(&"1,4,0,1,2"));
        assert_eq!(lines.len(), 11);
        assert!(!text.contains('\r'));
    }

    #[test]
    fn json_counts_are_strings() {
        let memo = MemoTable::new();
        let records = vec![compute_record(CountKey::new(6, 20, 0, 0), &memo).unwrap()];
        let value: serde_json::Value = serde_json::from_str(&render(&records, Format::Json)).unwrap();
        assert_eq!(value[0]["count"], "1763519463360");
        assert_eq!(value[0]["theta"], 0);
    }

    #[test]
    fn empty_csv_keeps_header() {
        assert_eq!(render(&[], Format::Csv), "d,r,s,theta,count\n");
        assert_eq!(render(&[], Format::Json).trim(), "[]");
    }
}
