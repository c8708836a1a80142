//! Text formats: posets, ideal maps, module dumps, and DOT export.
//!
//! Poset files start with `poset <n>` followed by `cover <i> <j>` lines.
//! Ideal map files read
//!
//! ```text
//! idealmap
//! X chain3.poset
//! Y vee.poset
//! F 0 0
//! F 1 0 1
//! ```
//!
//! with poset paths relative to the ideal map file. `#` starts a comment
//! in both formats.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gamma::IdealMap;
use crate::linalg::Matrix;
use crate::poset::Poset;
use crate::rep::Module;
use crate::Rational;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let words: Vec<&str> = l.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn number<T: FromStr>(line: usize, word: &str) -> Result<T> {
    word.parse().map_err(|_| parse_err(line, format!("expected a number, found {word:?}")))
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut lines = content_lines(text);
    let (l, header) = lines.next().ok_or_else(|| parse_err(1, "empty poset file"))?;
    if header.len() != 2 || header[0] != "poset" {
        return Err(parse_err(l, "expected `poset <n>`"));
    }
    let n: usize = number(l, header[1])?;
    let mut covers = Vec::new();
    for (l, words) in lines {
        if words.len() != 3 || words[0] != "cover" {
            return Err(parse_err(l, "expected `cover <i> <j>`"));
        }
        let (i, j): (usize, usize) = (number(l, words[1])?, number(l, words[2])?);
        if i >= n || j >= n {
            return Err(parse_err(l, format!("index out of range for a poset of size {n}")));
        }
        covers.push((i, j));
    }
    Poset::from_covers(n, &covers)
}

pub fn read_poset(path: impl AsRef<Path>) -> Result<Poset> {
    parse_poset(&read_file(path.as_ref())?)
}

pub fn write_poset(p: &Poset) -> String {
    let mut s = format!("poset {}\n", p.size());
    for (i, j) in p.covers() {
        writeln!(s, "cover {i} {j}").unwrap();
    }
    s
}

/// Hasse diagram in DOT, drawn bottom to top.
pub fn poset_to_dot(p: &Poset) -> String {
    let mut s = String::from("digraph poset {\n  rankdir=BT;\n");
    for i in 0..p.size() {
        writeln!(s, "  {i} [label=\"{}\"];", p.label(i).replace('"', "\\\"")).unwrap();
    }
    for (i, j) in p.covers() {
        writeln!(s, "  {i} -> {j};").unwrap();
    }
    s.push_str("}\n");
    s
}

/// Parses an ideal map, loading the `X` and `Y` files through `load`.
pub fn parse_ideal_map(text: &str, mut load: impl FnMut(&str) -> Result<Poset>) -> Result<IdealMap> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, w)) if w == ["idealmap"] => {}
        Some((l, _)) => return Err(parse_err(l, "expected `idealmap`")),
        None => return Err(parse_err(1, "empty ideal map file")),
    }
    let (mut x, mut y) = (None, None);
    let mut fibers: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for (l, words) in lines {
        match words[0] {
            "X" | "Y" if words.len() == 2 => {
                let slot = if words[0] == "X" { &mut x } else { &mut y };
                if slot.is_some() {
                    return Err(parse_err(l, format!("duplicate {} line", words[0])));
                }
                *slot = Some(load(words[1])?);
            }
            "F" if words.len() >= 2 => {
                let target: usize = number(l, words[1])?;
                let elems = words[2..].iter().map(|w| number(l, w)).collect::<Result<Vec<usize>>>()?;
                fibers.push((l, target, elems));
            }
            _ => return Err(parse_err(l, "expected `X <file>`, `Y <file>` or `F <y> <x...>`")),
        }
    }
    let x = x.ok_or_else(|| parse_err(0, "missing X line"))?;
    let y = y.ok_or_else(|| parse_err(0, "missing Y line"))?;
    let mut lists: Vec<Option<Vec<usize>>> = vec![None; y.size()];
    for (l, target, elems) in fibers {
        if target >= y.size() {
            return Err(parse_err(l, format!("{target} is not an element of Y")));
        }
        if let Some(&bad) = elems.iter().find(|&&e| e >= x.size()) {
            return Err(parse_err(l, format!("{bad} is not an element of X")));
        }
        if lists[target].replace(elems).is_some() {
            return Err(parse_err(l, format!("duplicate F line for {target}")));
        }
    }
    if let Some(missing) = lists.iter().position(Option::is_none) {
        return Err(parse_err(0, format!("missing F line for {missing}")));
    }
    let lists: Vec<Vec<usize>> = lists.into_iter().map(Option::unwrap).collect();
    IdealMap::from_lists(x, y, &lists)
}

pub fn read_ideal_map(path: impl AsRef<Path>) -> Result<IdealMap> {
    let path = path.as_ref();
    let dir = path.parent().unwrap_or(Path::new("."));
    parse_ideal_map(&read_file(path)?, |name| read_poset(dir.join(name)))
}

pub fn write_ideal_map(map: &IdealMap, x_file: &str, y_file: &str) -> String {
    let mut s = format!("idealmap\nX {x_file}\nY {y_file}\n");
    for y in 0..map.y().size() {
        s.push_str(&format!("F {y}"));
        for x in map.fiber(y) {
            write!(s, " {x}").unwrap();
        }
        s.push('\n');
    }
    s
}

/// `dim <i> <d>` per element, then `map <i> <j>` per cover with the
/// matrix rows as `p/q` entries.
pub fn write_module(m: &Module<Rational>) -> String {
    let mut s = String::new();
    for (i, d) in m.dims().iter().enumerate() {
        writeln!(s, "dim {i} {d}").unwrap();
    }
    for (&(i, j), mat) in m.covers().iter().zip(m.cover_maps()) {
        writeln!(s, "map {i} {j}").unwrap();
        // A matrix with no columns has only empty rows, which are omitted.
        for r in (0..mat.rows()).filter(|_| mat.cols() > 0) {
            let row: Vec<String> = mat.row(r).iter().map(|q| format!("{}/{}", q.numer(), q.denom())).collect();
            writeln!(s, "{}", row.join(" ")).unwrap();
        }
    }
    s
}

/// Reads a module dump over `base`; every cover of `base` needs a `map` block.
pub fn parse_module(base: &Poset, text: &str) -> Result<Module<Rational>> {
    let n = base.size();
    let mut dims: Vec<Option<usize>> = vec![None; n];
    let mut lines = content_lines(text).peekable();
    while let Some((l, words)) = lines.next_if(|(_, w)| w[0] == "dim") {
        if words.len() != 3 {
            return Err(parse_err(l, "expected `dim <i> <d>`"));
        }
        let i: usize = number(l, words[1])?;
        if i >= n {
            return Err(parse_err(l, format!("{i} is not an element of the base")));
        }
        if dims[i].replace(number(l, words[2])?).is_some() {
            return Err(parse_err(l, format!("duplicate dim line for {i}")));
        }
    }
    let dims: Vec<usize> = match dims.iter().position(Option::is_none) {
        Some(i) => return Err(parse_err(0, format!("missing dim line for {i}"))),
        None => dims.into_iter().map(Option::unwrap).collect(),
    };
    let covers = base.covers();
    let mut maps: Vec<Option<Matrix<Rational>>> = vec![None; covers.len()];
    while let Some((l, words)) = lines.next() {
        if words.len() != 3 || words[0] != "map" {
            return Err(parse_err(l, "expected `map <i> <j>`"));
        }
        let (i, j): (usize, usize) = (number(l, words[1])?, number(l, words[2])?);
        let k = covers.iter().position(|&c| c == (i, j)).ok_or_else(|| parse_err(l, format!("{i} -> {j} is not a cover")))?;
        let mut rows = Vec::with_capacity(dims[j]);
        for _ in 0..dims[j] {
            if dims[i] == 0 {
                rows.push(Vec::new());
                continue;
            }
            let (rl, words) = lines.next().ok_or_else(|| parse_err(l, "matrix is missing rows"))?;
            if words.len() != dims[i] {
                return Err(parse_err(rl, format!("expected {} entries", dims[i])));
            }
            rows.push(words.iter().map(|w| number::<Rational>(rl, w)).collect::<Result<Vec<_>>>()?);
        }
        if maps[k].replace(Matrix::from_rows(dims[j], dims[i], rows)).is_some() {
            return Err(parse_err(l, format!("duplicate map for {i} -> {j}")));
        }
    }
    if let Some(k) = maps.iter().position(Option::is_none) {
        return Err(parse_err(0, format!("missing map for {} -> {}", covers[k].0, covers[k].1)));
    }
    Module::new(base.clone(), dims, maps.into_iter().map(Option::unwrap).collect())
}
