//! Plain-text diagrams.
//!
//! Numbers are right-aligned to the widest entry of the diagram and cells
//! are separated by a single space. Trailing blanks are trimmed and the empty
//! diagram renders as the empty string.

use crate::abacus::{Abacus, Modulus};
use crate::bars::shifted_bar_rows;
use crate::partitions::{BarPartition, Partition};

const BOLD: &str = "\x1b[1m";
const RESET: &str = "\x1b[0m";

struct Cell {
    text: String,
    bold: bool,
}

fn grid(rows: &[(usize, Vec<Cell>)], color: bool) -> String {
    let width = rows
        .iter()
        .flat_map(|(_, cells)| cells.iter().map(|c| c.text.chars().count()))
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for (indent, cells) in rows {
        let mut fields: Vec<String> = vec![" ".repeat(width); *indent];
        for cell in cells {
            let padded = format!("{:>width$}", cell.text);
            if color && cell.bold {
                fields.push(format!("{BOLD}{padded}{RESET}"));
            } else {
                fields.push(padded);
            }
        }
        out.push_str(fields.join(" ").trim_end());
        out.push('\n');
    }
    out
}

fn plain(v: impl ToString) -> Cell {
    Cell {
        text: v.to_string(),
        bold: false,
    }
}

/// Young diagram filled with hook lengths.
pub fn young_hooks(p: &Partition) -> String {
    let rows: Vec<(usize, Vec<Cell>)> = (1..=p.len())
        .map(|r| {
            let cells = (1..=p.part(r - 1))
                .map(|c| plain(p.hook_length(r, c).expect("cell in diagram")))
                .collect();
            (0, cells)
        })
        .collect();
    grid(&rows, false)
}

/// Young diagram filled with the residues `[col - row]_d`.
pub fn residues(p: &Partition, d: Modulus) -> String {
    let rows: Vec<(usize, Vec<Cell>)> = (1..=p.len())
        .map(|r| {
            let cells = (1..=p.part(r - 1))
                .map(|c| plain(d.residue(c as i64 - r as i64)))
                .collect();
            (0, cells)
        })
        .collect();
    grid(&rows, false)
}

/// Shifted diagram filled with bar lengths; with `color` the part bars are bold.
pub fn shifted_bars(lambda: &BarPartition, color: bool) -> String {
    let m = lambda.len();
    let rows: Vec<(usize, Vec<Cell>)> = shifted_bar_rows(lambda)
        .into_iter()
        .enumerate()
        .map(|(k, row)| {
            // the part bar sits in column m + 1 of the double
            let part_index = m - k - 1;
            let cells = row
                .into_iter()
                .enumerate()
                .map(|(i, v)| Cell {
                    text: v.to_string(),
                    bold: i == part_index,
                })
                .collect();
            (k, cells)
        })
        .collect();
    grid(&rows, color)
}

/// Young diagram of `D(λ)` filled with hook lengths.
pub fn doubled_hooks(lambda: &BarPartition) -> String {
    young_hooks(&lambda.double())
}

/// Minimally normalized abacus of `p`.
pub fn abacus(p: &Partition, d: Modulus, color: bool) -> String {
    Abacus::minimal(p, d).render(color)
}
