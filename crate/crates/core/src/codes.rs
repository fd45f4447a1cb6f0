//! Binary and Gray code graphs, and disjoint unions of copies.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Arc, EnergyGraph};
use crate::sequence::graph_from_out_degrees;

const MAX_BIT_WIDTH: u32 = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeRow {
    pub bits: String,
    pub decimal: u64,
}

/// `2^bit_width` code words; row `i` (1-based) carries the decimal value `i - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeTable {
    pub bit_width: u32,
    pub rows: Vec<CodeRow>,
}

fn check_width(bit_width: u32) -> Result<()> {
    if (1..=MAX_BIT_WIDTH).contains(&bit_width) {
        Ok(())
    } else {
        Err(Error::BitWidth(bit_width))
    }
}

fn table(bit_width: u32, word: impl Fn(u64) -> u64) -> Result<CodeTable> {
    check_width(bit_width)?;
    let w = bit_width as usize;
    let rows = (0..1u64 << bit_width)
        .map(|r| CodeRow {
            bits: format!("{:0w$b}", word(r)),
            decimal: r,
        })
        .collect();
    Ok(CodeTable { bit_width, rows })
}

pub fn binary_code_table(bit_width: u32) -> Result<CodeTable> {
    table(bit_width, |r| r)
}

/// Reflected binary Gray code.
pub fn gray_code_table(bit_width: u32) -> Result<CodeTable> {
    table(bit_width, |r| r ^ (r >> 1))
}

/// Graph on `2^(w+1)` vertices: `d+(u_i) = b_i + 1` for the table rows,
/// then `d+(u_{2^w + k}) = 2^w - k`. Arcs go to the next `d+` vertices.
pub fn code_table_graph(table: &CodeTable) -> EnergyGraph {
    let half = table.rows.len();
    let mut degrees: Vec<usize> = table.rows.iter().map(|r| r.decimal as usize + 1).collect();
    degrees.extend((1..=half).map(|k| half - k));
    graph_from_out_degrees(&degrees)
}

pub fn binary_code_graph(bit_width: u32) -> Result<EnergyGraph> {
    binary_code_table(bit_width).map(|t| code_table_graph(&t))
}

/// Disjoint union of `t` copies; vertex `j` of copy `i` becomes `(i-1)·n + j`.
pub fn union_copies(g: &EnergyGraph, t: usize) -> EnergyGraph {
    let n = g.n();
    let arcs = (0..t)
        .flat_map(|copy| {
            g.arcs()
                .iter()
                .map(move |a| Arc::new(copy * n + a.tail.index(), copy * n + a.head.index()))
        })
        .collect();
    EnergyGraph::from_sorted_unchecked(n * t, arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::{jaco_graph, SequenceSpec};

    #[test]
    fn binary_table_of_width_three() {
        let t = binary_code_table(3).unwrap();
        assert_eq!(t.rows.len(), 8);
        assert_eq!(
            t.rows[5],
            CodeRow {
                bits: "101".into(),
                decimal: 5
            }
        );
    }

    #[test]
    fn gray_tables() {
        let t = gray_code_table(2).unwrap();
        let bits: Vec<&str> = t.rows.iter().map(|r| r.bits.as_str()).collect();
        assert_eq!(bits, ["00", "01", "11", "10"]);
        assert!(t
            .rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.decimal == i as u64));
        let t3 = gray_code_table(3).unwrap();
        assert_eq!(
            t3.rows[7],
            CodeRow {
                bits: "100".into(),
                decimal: 7
            }
        );
    }

    #[test]
    fn width_guard() {
        assert!(binary_code_table(0).is_err());
        assert!(gray_code_table(21).is_err());
    }

    #[test]
    fn binary_graph_profiles() {
        let g2 = binary_code_graph(2).unwrap();
        assert_eq!(g2.out_degrees(), [1, 2, 3, 4, 3, 2, 1, 0]);
        assert_eq!(binary_code_graph(1).unwrap().out_degrees(), [1, 2, 1, 0]);
        assert_eq!(code_table_graph(&gray_code_table(2).unwrap()), g2);
    }

    #[test]
    fn binary_graph_is_the_natural_jaco_graph() {
        for w in 1..=3 {
            let n = 1usize << (w + 1);
            assert_eq!(
                binary_code_graph(w).unwrap(),
                jaco_graph(&SequenceSpec::Natural, n).unwrap()
            );
        }
    }

    #[test]
    fn unions() {
        let g2 = binary_code_graph(2).unwrap();
        assert_eq!(union_copies(&g2, 1), g2);
        let three = union_copies(&g2, 3);
        assert_eq!(
            (three.n(), three.arc_count(), three.sources().len()),
            (24, 48, 3)
        );
        assert!(three.validate().is_empty());
        let two = union_copies(&g2, 2);
        let src: Vec<usize> = two.sources().iter().map(|v| v.index()).collect();
        assert_eq!(src, [1, 9]);
    }
}
