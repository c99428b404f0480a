use std::str::FromStr;

use num_bigint::BigInt;

use super::report::{Format, Table};
use crate::enumerate::involutions;
use crate::error::{Error, Result};
use crate::limits;
use crate::patterns::{eulerian, latex_apq, narayana, refined_eulerian};
use crate::poly::{gamma_expand, GammaExpansion, UniPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Eulerian,
    Apq,
    Narayana,
    Involution,
}

impl TableKind {
    pub const ALL: [TableKind; 4] = [TableKind::Eulerian, TableKind::Apq, TableKind::Narayana, TableKind::Involution];

    pub fn id(self) -> &'static str {
        match self {
            TableKind::Eulerian => "eulerian",
            TableKind::Apq => "apq",
            TableKind::Narayana => "narayana",
            TableKind::Involution => "involution",
        }
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableKind::ALL
            .into_iter()
            .find(|k| k.id() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown table `{s}`")))
    }
}

fn gamma_table(title: &str, max_n: usize, poly: impl Fn(usize) -> Result<(UniPoly, GammaExpansion)>) -> Result<Table> {
    let rows: Vec<(UniPoly, GammaExpansion)> = (1..=max_n).map(&poly).collect::<Result<_>>()?;
    let width = rows.iter().map(|(_, g)| g.gamma.len()).max().unwrap_or(0);
    let mut header = vec!["n".to_string(), "polynomial".to_string()];
    header.extend((0..width).map(|i| format!("gamma_{i}")));
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, (p, g))| {
            let mut row = vec![(i + 1).to_string(), p.to_string()];
            row.extend((0..width).map(|k| g.gamma.get(k).map(BigInt::to_string).unwrap_or_default()));
            row
        })
        .collect();
    Ok(Table { title: title.to_string(), header, rows, math_columns: vec![1] })
}

/// The table of `kind` for `n = 1..=max_n`.
pub fn table(kind: TableKind, max_n: usize) -> Result<Table> {
    limits::check(max_n)?;
    match kind {
        TableKind::Eulerian => gamma_table("Eulerian polynomials", max_n, |n| {
            let p = eulerian(n)?;
            let g = gamma_expand(&p, n as u32 - 1)?;
            Ok((p, g))
        }),
        TableKind::Narayana => gamma_table("Narayana polynomials", max_n, narayana),
        TableKind::Involution => gamma_table("descents over involutions", max_n, |n| {
            let p = UniPoly::from_exponents(['t'], involutions(n)?.iter().map(|w| [w.des() as u32]));
            let g = gamma_expand(&p, n as u32 - 1)?;
            Ok((p, g))
        }),
        TableKind::Apq => {
            let rows = (1..=max_n)
                .map(|n| Ok(vec![n.to_string(), latex_apq(n, &refined_eulerian(n)?.b)]))
                .collect::<Result<_>>()?;
            Ok(Table {
                title: "A_n(p,q,t)".to_string(),
                header: vec!["n".to_string(), "expansion".to_string()],
                rows,
                math_columns: vec![1],
            })
        }
    }
}

pub fn table_named(kind: &str, max_n: usize, format: &str) -> Result<Vec<u8>> {
    let format: Format = format.parse()?;
    Ok(table(kind.parse()?, max_n)?.emit(format))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eulerian_rows() {
        let t = table(TableKind::Eulerian, 4).unwrap();
        assert_eq!(t.header, ["n", "polynomial", "gamma_0", "gamma_1"]);
        assert_eq!(t.rows[3][2..], ["1".to_string(), "8".to_string()]);
        assert_eq!(t.rows[0][2..], ["1".to_string(), String::new()]);
    }

    #[test]
    fn apq_latex() {
        let t = String::from_utf8(table(TableKind::Apq, 3).unwrap().emit(Format::Latex)).unwrap();
        assert!(t.contains("$(1+t)^2 + (p+q)t$"), "{t}");
    }

    #[test]
    fn narayana_and_involution() {
        let t = table(TableKind::Narayana, 5).unwrap();
        assert_eq!(t.rows[4][2..5], ["1".to_string(), "6".to_string(), "2".to_string()]);
        let t = table(TableKind::Involution, 4).unwrap();
        assert_eq!(t.rows[3][2..4], ["1".to_string(), "1".to_string()]);
        assert!("nope".parse::<TableKind>().is_err());
    }
}
