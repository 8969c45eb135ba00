//! The two extended predecessor tables.
//!
//! Table A, column `k`, row `n` holds `T_(k-1) + 4^k·2n`; these integers all
//! take `alpha = 2k` and land on the row iterate `6n + 1`. Table B, column
//! `k`, row `n` holds `P_k + 4^k·n` with `alpha = 2k - 1` and row iterate
//! `6n + 5`. Neighbouring columns in a row are linked by `x -> 4x + 1`, and
//! every odd integer appears in exactly one cell of the two tables.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::{pre_terminal, terminal, OddInt};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TableId {
    /// Rows of predecessors of `6n + 1`.
    A,
    /// Rows of predecessors of `6n + 5`.
    B,
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableId::A => "A",
            TableId::B => "B",
        })
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(TableId::A),
            "B" | "b" => Ok(TableId::B),
            _ => Err(Error::param("table", format!("expected A or B, got {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TableCoordinate {
    pub table: TableId,
    pub column: u64,
    #[serde(serialize_with = "serialize_biguint")]
    pub row: BigUint,
}

impl TableCoordinate {
    /// The power of two divided out of `3x + 1` for every cell in this column.
    pub fn alpha(&self) -> u64 {
        match self.table {
            TableId::A => 2 * self.column,
            TableId::B => 2 * self.column - 1,
        }
    }
}

fn serialize_biguint<S: serde::Serializer>(
    v: &BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let number = serde_json::Number::from_str(&v.to_string()).map_err(serde::ser::Error::custom)?;
    number.serialize(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredecessorRow {
    pub iterate: OddInt,
    pub entries: Vec<OddInt>,
}

fn check_column(column: u64) -> Result<()> {
    if column == 0 {
        Err(Error::param("column", "columns are numbered from 1"))
    } else {
        Ok(())
    }
}

/// First-row generator of a column: `T_(k-1)` for A, `P_k` for B.
fn column_base(table: TableId, column: u64) -> OddInt {
    match table {
        TableId::A => terminal(column - 1),
        TableId::B => pre_terminal(column).expect("column >= 1"),
    }
}

/// log2 of the row stride of a column: `2·4^k` for A, `4^k` for B.
fn column_stride_log2(table: TableId, column: u64) -> u64 {
    match table {
        TableId::A => 2 * column + 1,
        TableId::B => 2 * column,
    }
}

pub fn table_entry(table: TableId, column: u64, row: &BigUint) -> Result<OddInt> {
    check_column(column)?;
    let base = column_base(table, column).into_inner();
    Ok(OddInt::new_unchecked(
        base + (row << column_stride_log2(table, column)),
    ))
}

/// The common Syracuse iterate of every cell in `row`.
pub fn row_iterate(table: TableId, row: &BigUint) -> OddInt {
    let offset = match table {
        TableId::A => 1u32,
        TableId::B => 5u32,
    };
    OddInt::new_unchecked(row * 6u32 + offset)
}

/// Finds the unique cell holding `x` by stripping `x -> (x-1)/4` while
/// `x ≡ 5 (mod 8)`, then reading the first-column row.
pub fn locate(x: &OddInt) -> TableCoordinate {
    let mut value = x.value().clone();
    let mut strips = 0u64;
    while low_bits(&value) & 7 == 5 {
        value >>= 2u32;
        strips += 1;
    }
    let (table, row) = if low_bits(&value) & 3 == 3 {
        (TableId::B, value >> 2u32)
    } else {
        (TableId::A, value >> 3u32)
    };
    TableCoordinate {
        table,
        column: strips + 1,
        row,
    }
}

fn low_bits(v: &BigUint) -> u64 {
    v.iter_u64_digits().next().unwrap_or(0)
}

/// The first `count` predecessors of `iterate`, read off its table row.
pub fn predecessor_row(iterate: &OddInt, count: usize) -> Result<PredecessorRow> {
    if count == 0 {
        return Err(Error::param("count", "must be at least 1"));
    }
    let (table, row) = match iterate.rem_u32(6) {
        1 => (TableId::A, (iterate.value() - 1u32) / 6u32),
        5 => (TableId::B, (iterate.value() - 5u32) / 6u32),
        _ => return Err(Error::StarterHasNoPredecessors(iterate.value().clone())),
    };
    let mut entries = Vec::with_capacity(count);
    let mut entry = table_entry(table, 1, &row)?;
    for _ in 0..count {
        let next = entry.four_x_plus_one();
        entries.push(entry);
        entry = next;
    }
    Ok(PredecessorRow {
        iterate: iterate.clone(),
        entries,
    })
}

/// Column header in the printed style, e.g. `5+32*n` or `3413+4096*n`.
pub fn column_header(table: TableId, column: u64) -> Result<String> {
    check_column(column)?;
    let base = column_base(table, column);
    let stride = BigUint::from(1u32) << column_stride_log2(table, column);
    Ok(format!("{base}+{stride}*n"))
}

/// Writes rows `0..rows` and columns `1..=cols` of a table as CSV, followed by
/// the iterate column.
pub fn write_window_csv<W: Write>(table: TableId, rows: u64, cols: u64, out: W) -> Result<()> {
    if cols == 0 {
        return Err(Error::param("cols", "must be at least 1"));
    }
    let mut writer = csv::Writer::from_writer(out);
    let mut header = vec!["n".to_string()];
    for k in 1..=cols {
        header.push(column_header(table, k)?);
    }
    header.push("(3x+1)/2^alpha".to_string());
    writer.write_record(&header).map_err(csv_err)?;
    let mut row = BigUint::zero();
    for _ in 0..rows {
        let mut record = vec![row.to_string()];
        for k in 1..=cols {
            record.push(table_entry(table, k, &row)?.to_string());
        }
        record.push(row_iterate(table, &row).to_string());
        writer.write_record(&record).map_err(csv_err)?;
        row += 1u32;
    }
    writer.flush()?;
    Ok(())
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}
