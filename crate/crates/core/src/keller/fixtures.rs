//! Published Keller certificates shipped as whitespace-separated tables.

use serde::Serialize;

use super::{build, KellerVertex};
use crate::error::{precondition, Error, Result};
use crate::graph::Vertex;
use crate::verify::{verify_clique_cover, verify_hamiltonian_decomposition};

const G3_DECOMPOSITION: &str = include_str!("../../fixtures/g3_ham_decomposition.tsv");
const G3_COVER: &str = include_str!("../../fixtures/g3_clique_cover.tsv");
const G4_COVER: &str = include_str!("../../fixtures/g4_clique_cover.tsv");
const G5_COVER: &str = include_str!("../../fixtures/g5_clique_cover.tsv");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixtureTable {
    /// 17 Hamiltonian cycles of G_3, one per column, base-4 integers.
    G3Decomposition,
    /// Clique cover of G_3, digit strings.
    G3Cover,
    /// Clique cover of G_4, digit strings.
    G4Cover,
    /// Clique cover of G_5, base-4 integers.
    G5Cover,
}

impl FixtureTable {
    pub const ALL: [FixtureTable; 4] = [
        FixtureTable::G3Decomposition,
        FixtureTable::G3Cover,
        FixtureTable::G4Cover,
        FixtureTable::G5Cover,
    ];

    /// Looks a fixture up by its table number (1, 5, 6 or 7).
    pub fn from_number(n: u32) -> Result<Self> {
        match n {
            1 => Ok(FixtureTable::G3Decomposition),
            5 => Ok(FixtureTable::G3Cover),
            6 => Ok(FixtureTable::G4Cover),
            7 => Ok(FixtureTable::G5Cover),
            _ => Err(precondition(format!("no fixture table {n}; available: 1, 5, 6, 7"))),
        }
    }

    pub fn number(self) -> u32 {
        match self {
            FixtureTable::G3Decomposition => 1,
            FixtureTable::G3Cover => 5,
            FixtureTable::G4Cover => 6,
            FixtureTable::G5Cover => 7,
        }
    }

    pub fn dimension(self) -> usize {
        match self {
            FixtureTable::G3Decomposition | FixtureTable::G3Cover => 3,
            FixtureTable::G4Cover => 4,
            FixtureTable::G5Cover => 5,
        }
    }

    pub fn text(self) -> &'static str {
        match self {
            FixtureTable::G3Decomposition => G3_DECOMPOSITION,
            FixtureTable::G3Cover => G3_COVER,
            FixtureTable::G4Cover => G4_COVER,
            FixtureTable::G5Cover => G5_COVER,
        }
    }
}

fn parse_token(d: usize, tok: &str, digit_strings: bool) -> Result<Vertex> {
    let v = if digit_strings {
        if tok.len() != d {
            return Err(precondition(format!("{tok:?} does not have {d} digits")));
        }
        KellerVertex::parse_digits(tok)?
    } else {
        KellerVertex::parse_int(d, tok)?
    };
    Ok(v.value)
}

/// Cycles stored one per column under a header row of column numbers.
pub fn parse_cycle_table(d: usize, text: &str) -> Result<Vec<Vec<Vertex>>> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| precondition("empty cycle table"))?;
    let width = header.split_whitespace().count();
    let mut cycles = vec![Vec::new(); width];
    for (no, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != width {
            return Err(Error::Parse {
                line: no + 1,
                msg: format!("expected {width} entries, found {}", toks.len()),
            });
        }
        for (c, tok) in toks.iter().enumerate() {
            let v = parse_token(d, tok, false).map_err(|e| Error::Parse {
                line: no + 1,
                msg: e.to_string(),
            })?;
            cycles[c].push(v);
        }
    }
    Ok(cycles)
}

/// One clique per row, led by its index. Members are digit strings or,
/// with `digit_strings = false`, base-4 integers.
pub fn parse_clique_table(d: usize, text: &str, digit_strings: bool) -> Result<Vec<Vec<Vertex>>> {
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let mut toks = line.split_whitespace();
        if toks.next().is_none() {
            continue;
        }
        let clique = toks
            .map(|t| parse_token(d, t, digit_strings))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::Parse {
                line: no + 1,
                msg: e.to_string(),
            })?;
        out.push(clique);
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureReport {
    pub table: u32,
    pub d: usize,
    pub kind: &'static str,
    /// Number of cycles or cliques in the table.
    pub size: usize,
    pub ok: bool,
    pub detail: Vec<String>,
}

pub fn load_fixture(t: FixtureTable) -> Result<Vec<Vec<Vertex>>> {
    let d = t.dimension();
    match t {
        FixtureTable::G3Decomposition => parse_cycle_table(d, t.text()),
        FixtureTable::G3Cover | FixtureTable::G4Cover => parse_clique_table(d, t.text(), true),
        FixtureTable::G5Cover => parse_clique_table(d, t.text(), false),
    }
}

/// Parses a shipped table and checks it against a freshly built graph.
pub fn verify_fixture(t: FixtureTable) -> Result<FixtureReport> {
    let d = t.dimension();
    let g = build(d)?;
    let sets = load_fixture(t)?;
    let (kind, r) = match t {
        FixtureTable::G3Decomposition => (
            "hamiltonian-decomposition",
            verify_hamiltonian_decomposition(&g, &sets, None),
        ),
        _ => ("clique-cover", verify_clique_cover(&g, &sets)),
    };
    Ok(FixtureReport {
        table: t.number(),
        d,
        kind,
        size: sets.len(),
        ok: r.ok,
        detail: r.detail,
    })
}
