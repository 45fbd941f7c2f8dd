use std::fmt;
use std::sync::{Arc, OnceLock};

use bs_groups::FiniteGroup;
use bs_rewrite::{Alphabet, Letter, Word};

use crate::sp::{sp_system, SpSystem};
use crate::PregroupError;

/// A candidate partial multiplication table, not yet known to satisfy the axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PregroupTable {
    pub names: Vec<String>,
    pub one: usize,
    pub inverse: Vec<usize>,
    /// `table[x][y]` is the product xy when (x, y) lies in the domain.
    pub table: Vec<Vec<Option<usize>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    /// the involution is not an involution, or a table entry is out of range
    Shape,
    P1,
    P2,
    P3,
    P4,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Shape => "shape",
            Axiom::P1 => "P1",
            Axiom::P2 => "P2",
            Axiom::P3 => "P3",
            Axiom::P4 => "P4",
        };
        f.write_str(s)
    }
}

/// The first failing axiom and the elements witnessing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witnesses: Vec<String>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at ({}): {}", self.axiom, self.witnesses.join(", "), self.detail)
    }
}

/// A finite pregroup; letter `i` of its alphabet is carrier element `i`.
#[derive(Clone, Debug)]
pub struct Pregroup {
    data: PregroupTable,
    alphabet: Arc<Alphabet>,
    sp: OnceLock<SpSystem>,
}

impl PartialEq for Pregroup {
    fn eq(&self, other: &Self) -> bool {
        self.data == other.data
    }
}

impl Eq for Pregroup {}

/// Verify (P1)-(P4) exhaustively.
pub fn check_pregroup(t: PregroupTable) -> Result<Pregroup, Violation> {
    let n = t.names.len();
    let nm = |x: usize| t.names[x].clone();
    let shape = |detail: String| Violation { axiom: Axiom::Shape, witnesses: vec![], detail };
    if n == 0 || t.one >= n {
        return Err(shape("identity is not in the carrier".into()));
    }
    if t.inverse.len() != n || t.table.len() != n || t.table.iter().any(|r| r.len() != n) {
        return Err(shape("table dimensions do not match the carrier".into()));
    }
    if t.table.iter().flatten().flatten().any(|&z| z >= n) {
        return Err(shape("table entry out of range".into()));
    }
    for x in 0..n {
        let xi = t.inverse[x];
        if xi >= n || t.inverse[xi] != x {
            return Err(Violation { axiom: Axiom::Shape, witnesses: vec![nm(x)], detail: "not an involution".into() });
        }
    }
    let m = |x: usize, y: usize| t.table[x][y];
    let e = t.one;
    for x in 0..n {
        if m(e, x) != Some(x) || m(x, e) != Some(x) {
            return Err(Violation { axiom: Axiom::P1, witnesses: vec![nm(x)], detail: "identity does not act trivially".into() });
        }
    }
    for x in 0..n {
        let xi = t.inverse[x];
        if m(x, xi) != Some(e) || m(xi, x) != Some(e) {
            return Err(Violation { axiom: Axiom::P2, witnesses: vec![nm(x)], detail: "product with the inverse is not the identity".into() });
        }
    }
    for x in 0..n {
        for y in 0..n {
            let Some(xy) = m(x, y) else { continue };
            for z in 0..n {
                let Some(yz) = m(y, z) else { continue };
                let (l, r) = (m(xy, z), m(x, yz));
                if l != r {
                    let detail = match (l, r) {
                        (Some(_), Some(_)) => "products differ".into(),
                        (Some(_), None) => format!("({}, {}) defined but ({}, {}) not", nm(xy), nm(z), nm(x), nm(yz)),
                        _ => format!("({}, {}) defined but ({}, {}) not", nm(x), nm(yz), nm(xy), nm(z)),
                    };
                    return Err(Violation { axiom: Axiom::P3, witnesses: vec![nm(x), nm(y), nm(z)], detail });
                }
            }
        }
    }
    for w in 0..n {
        for x in 0..n {
            if m(w, x).is_none() {
                continue;
            }
            for y in 0..n {
                let Some(xy) = m(x, y) else { continue };
                if m(w, xy).is_some() {
                    continue;
                }
                for z in 0..n {
                    if m(y, z).is_some() && m(xy, z).is_none() {
                        return Err(Violation {
                            axiom: Axiom::P4,
                            witnesses: vec![nm(w), nm(x), nm(y), nm(z)],
                            detail: format!("neither ({}, {}) nor ({}, {}) defined", nm(w), nm(xy), nm(xy), nm(z)),
                        });
                    }
                }
            }
        }
    }
    let images = t.inverse.iter().map(|&i| Letter(i as u32)).collect();
    let alphabet = Alphabet::new(&t.names)
        .and_then(|a| a.with_involution(images))
        .map_err(|err| shape(err.to_string()))?;
    Ok(Pregroup { data: t, alphabet: Arc::new(alphabet), sp: OnceLock::new() })
}

impl Pregroup {
    /// A finite group with everywhere-defined product.
    pub fn from_group(g: &FiniteGroup) -> Pregroup {
        let n = g.order();
        let t = PregroupTable {
            names: g.names().to_vec(),
            one: 0,
            inverse: (0..n).map(|x| g.inv(x)).collect(),
            table: (0..n).map(|x| (0..n).map(|y| Some(g.mul(x, y))).collect()).collect(),
        };
        check_pregroup(t).expect("groups are pregroups")
    }

    /// `1`, the given letters and their `~` partners; only inverse pairs multiply.
    pub fn free<S: AsRef<str>>(basis: &[S]) -> Result<Pregroup, PregroupError> {
        let mut names = vec!["1".to_string()];
        for b in basis {
            names.push(b.as_ref().to_string());
            names.push(format!("{}~", b.as_ref()));
        }
        let n = names.len();
        let inverse: Vec<usize> = (0..n).map(|x| if x == 0 { 0 } else if x % 2 == 1 { x + 1 } else { x - 1 }).collect();
        let mut table = vec![vec![None; n]; n];
        for x in 0..n {
            table[0][x] = Some(x);
            table[x][0] = Some(x);
            table[x][inverse[x]] = Some(0);
        }
        Ok(check_pregroup(PregroupTable { names, one: 0, inverse, table })?)
    }

    pub fn table(&self) -> &PregroupTable {
        &self.data
    }

    pub fn len(&self) -> usize {
        self.data.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn one(&self) -> usize {
        self.data.one
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.data.inverse[x]
    }

    pub fn mul(&self, x: usize, y: usize) -> Option<usize> {
        self.data.table[x][y]
    }

    pub fn defined(&self, x: usize, y: usize) -> bool {
        self.data.table[x][y].is_some()
    }

    pub fn names(&self) -> &[String] {
        &self.data.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.data.names[x]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.data.names.iter().position(|n| n == name)
    }

    /// Carrier letters, with the pregroup involution attached.
    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn letter(&self, x: usize) -> Letter {
        Letter(x as u32)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, PregroupError> {
        Ok(self.alphabet.parse_word(text)?)
    }

    pub fn show(&self, w: &[Letter]) -> String {
        self.alphabet.display(w).to_string()
    }

    /// The rewriting system of the pregroup, built once.
    pub fn sp(&self) -> &SpSystem {
        self.sp.get_or_init(|| sp_system(self))
    }

    /// Number of pairs in the domain of the product.
    pub fn domain_size(&self) -> usize {
        self.data.table.iter().flatten().filter(|c| c.is_some()).count()
    }
}

impl fmt::Display for PregroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.names.iter().map(|s| s.len()).max().unwrap_or(1).max(1);
        writeln!(f, "carrier {}", self.names.join(" "))?;
        writeln!(f, "identity {}", self.names[self.one])?;
        for (x, &y) in self.inverse.iter().enumerate() {
            if x < y {
                writeln!(f, "inverse {} {}", self.names[x], self.names[y])?;
            }
        }
        for (x, row) in self.table.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .map(|c| format!("{:<width$}", c.map_or("-", |z| self.names[z].as_str())))
                .collect();
            writeln!(f, "row {:<width$} : {}", self.names[x], cells.join(" ").trim_end())?;
        }
        Ok(())
    }
}

impl fmt::Display for Pregroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.data.fmt(f)
    }
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> PregroupError {
    PregroupError::Parse { line: line + 1, col: col + 1, msg: msg.into() }
}

fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out
}

/// Parse a table: `carrier`, optional `identity` (default: first element),
/// `inverse x y` pairs (unlisted elements are self-inverse) and one
/// `row x : ...` line per element with `-` for undefined products.
pub fn parse_table(text: &str) -> Result<PregroupTable, PregroupError> {
    let mut names: Option<Vec<String>> = None;
    let mut one = None;
    let mut pairs = Vec::new();
    let mut rows = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        let Some(&(col, head)) = toks.first() else { continue };
        match head {
            "carrier" => {
                if names.is_some() {
                    return Err(perr(ln, col, "carrier declared twice"));
                }
                let ns: Vec<String> = toks[1..].iter().map(|t| t.1.to_string()).collect();
                if let Some(&(c, t)) = toks[1..].iter().find(|t| t.1 == "-") {
                    return Err(perr(ln, c, format!("`{t}` is reserved")));
                }
                names = Some(ns);
            }
            "identity" => {
                if toks.len() != 2 {
                    return Err(perr(ln, col, "expected `identity x`"));
                }
                one = Some((ln, toks[1]));
            }
            "inverse" => {
                if toks.len() != 3 {
                    return Err(perr(ln, col, "expected `inverse x y`"));
                }
                pairs.push((ln, toks[1], toks[2]));
            }
            "row" => {
                if toks.len() < 3 || toks[2].1 != ":" {
                    return Err(perr(ln, col, "expected `row x : ...`"));
                }
                rows.push((ln, toks[1], toks[3..].iter().map(|&(c, t)| (c, t.to_string())).collect::<Vec<_>>()));
            }
            other => return Err(perr(ln, col, format!("unknown directive `{other}`"))),
        }
    }
    let names = names.ok_or_else(|| perr(0, 0, "missing `carrier` line"))?;
    let n = names.len();
    let find = |ln: usize, (c, t): (usize, &str)| names.iter().position(|x| x == t).ok_or_else(|| perr(ln, c, format!("unknown element `{t}`")));
    let one = match one {
        Some((ln, t)) => find(ln, t)?,
        None => 0,
    };
    if n == 0 {
        return Err(perr(0, 0, "empty carrier"));
    }
    let mut inverse: Vec<usize> = (0..n).collect();
    let mut paired = vec![false; n];
    for (ln, x, y) in pairs {
        let (i, j) = (find(ln, x)?, find(ln, y)?);
        if paired[i] || paired[j] {
            return Err(perr(ln, x.0, "element paired twice"));
        }
        paired[i] = true;
        paired[j] = true;
        inverse[i] = j;
        inverse[j] = i;
    }
    let mut table: Vec<Option<Vec<Option<usize>>>> = vec![None; n];
    for (ln, x, cells) in rows {
        let i = find(ln, x)?;
        if table[i].is_some() {
            return Err(perr(ln, x.0, format!("row `{}` given twice", x.1)));
        }
        if cells.len() != n {
            return Err(perr(ln, x.0, format!("row has {} cells, expected {n}", cells.len())));
        }
        let mut row = Vec::with_capacity(n);
        for (c, t) in &cells {
            row.push(if t == "-" { None } else { Some(find(ln, (*c, t))?) });
        }
        table[i] = Some(row);
    }
    let table = table
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or_else(|| perr(0, 0, format!("missing row for `{}`", names[i]))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PregroupTable { names, one, inverse, table })
}

/// Parse and verify.
pub fn parse_pregroup(text: &str) -> Result<Pregroup, PregroupError> {
    Ok(check_pregroup(parse_table(text)?)?)
}
