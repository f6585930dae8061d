//! `STRINGCONE v1` text files: a header, `type <letter> <rank>`,
//! `word <letters>`, optionally `offset <k>`, then `ineq c1 … cN` rows each
//! meaning `c·t ≥ 0`. Blank lines and `#` comments are ignored.

use super::{Provenance, StringCone};
use crate::error::{Error, Result};
use crate::exactgeom::{parse_rat, ConeH, Rat};
use crate::rootdata::{ReducedWord, RootSystem};

const HEADER: &str = "STRINGCONE v1";

pub fn parse_cone_file(text: &str, path: &str) -> Result<StringCone> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    if lines.next() != Some(HEADER) {
        return Err(Error::Parse(format!("{path}: missing '{HEADER}' header")));
    }
    let mut rs = None;
    let mut word = None;
    let mut offset = 0usize;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for line in lines {
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match key {
            "type" => {
                let name: String = rest.split_whitespace().collect();
                rs = Some(RootSystem::parse(&name)?);
            }
            "word" => word = Some(ReducedWord::parse(rest)?),
            "offset" => {
                offset = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("{path}: bad offset '{rest}'")))?
            }
            "ineq" => {
                let c = rest.split_whitespace().map(parse_rat).collect::<Result<Vec<Rat>>>()?;
                rows.push(c.into_iter().map(|x| -x).collect());
            }
            _ => return Err(Error::Parse(format!("{path}: unknown line '{line}'"))),
        }
    }
    let rs = rs.ok_or_else(|| Error::Parse(format!("{path}: missing type line")))?;
    let word = word.ok_or_else(|| Error::Parse(format!("{path}: missing word line")))?;
    let dim = word.len().saturating_sub(offset);
    if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
        return Err(Error::DimMismatch {
            expected: dim,
            found: bad.len(),
        });
    }
    let cone = ConeH::from_normals(dim, rows)?;
    StringCone::new(
        rs,
        word,
        offset,
        cone,
        Provenance::ExternalFile {
            path: path.to_string(),
            trusted: false,
            certified: false,
        },
    )
}

pub fn write_cone_file(cone: &StringCone) -> String {
    let rs = cone.root_system();
    let mut out = format!("{HEADER}\ntype {} {}\n", rs.cartan_type(), rs.rank());
    let letters: Vec<String> = cone.word().letters().iter().map(|l| l.to_string()).collect();
    out.push_str(&format!("word {}\n", letters.join(" ")));
    if cone.offset() != 0 {
        out.push_str(&format!("offset {}\n", cone.offset()));
    }
    for row in &cone.cone().as_h().ineqs {
        let c: Vec<String> = row.a.iter().map(|x| (-x).to_string()).collect();
        out.push_str(&format!("ineq {}\n", c.join(" ")));
    }
    for eq in &cone.cone().as_h().eqs {
        for sign in [1, -1] {
            let c: Vec<String> = eq.a.iter().map(|x| (x * Rat::from_integer(sign.into())).to_string()).collect();
            out.push_str(&format!("ineq {}\n", c.join(" ")));
        }
    }
    out
}
