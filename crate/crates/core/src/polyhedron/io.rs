//! Plain-text representations.
//!
//! H-representation: a `dim n` line followed by one constraint `a0 a1 ... an`
//! per line, meaning `a0 + a1*x1 + ... + an*xn >= 0`. V-representation: the
//! same `dim n` header, then lines `v x1 ... xn` (point), `r x1 ... xn` (ray)
//! or `l x1 ... xn` (lineality direction). `#` starts a comment.

use super::Polyhedron;
use crate::error::{Error, Result};
use crate::exactgeom::{format_scalar, parse_scalar, HalfSpace, Scalar, Vector};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<usize> {
    let (no, first) = lines.next().ok_or_else(|| Error::Parse("missing `dim n` header".into()))?;
    let mut tok = first.split_whitespace();
    match (tok.next(), tok.next(), tok.next()) {
        (Some("dim"), Some(n), None) => {
            n.parse().map_err(|_| Error::Parse(format!("line {no}: bad dimension `{n}`")))
        }
        _ => Err(Error::Parse(format!("line {no}: expected `dim n`"))),
    }
}

fn parse_row<S: Scalar>(no: usize, fields: &[&str], len: usize) -> Result<Vec<S>> {
    if fields.len() != len {
        return Err(Error::Parse(format!("line {no}: expected {len} numbers, found {}", fields.len())));
    }
    fields
        .iter()
        .map(|f| parse_scalar(f).map_err(|e| Error::Parse(format!("line {no}: {e}"))))
        .collect()
}

pub fn parse_hrep<S: Scalar>(text: &str) -> Result<Polyhedron<S>> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines)?;
    let mut hs = Vec::new();
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let row: Vec<S> = parse_row(no, &fields, n + 1)?;
        hs.push(HalfSpace::from_coefficients(&row));
    }
    Polyhedron::from_halfspaces(n, &hs)
}

/// Canonical H-representation text; equalities are written as two opposite
/// inequalities. The empty polyhedron is written as `-1 0 ... 0`.
pub fn format_hrep<S: Scalar>(k: &Polyhedron<S>) -> String {
    let n = k.ambient_dim();
    let mut out = format!("dim {n}\n");
    let row = |c: Vec<S>| c.iter().map(format_scalar).collect::<Vec<_>>().join(" ");
    if k.is_empty() {
        let mut c = vec![S::from_int(-1)];
        c.extend(std::iter::repeat(S::zero()).take(n));
        out.push_str(&row(c));
        out.push('\n');
        return out;
    }
    for h in k.halfspaces() {
        out.push_str(&row(h.coefficients()));
        out.push('\n');
    }
    out
}

pub fn parse_vrep<S: Scalar>(text: &str) -> Result<Polyhedron<S>> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines)?;
    let (mut pts, mut rays, mut lin) = (Vec::new(), Vec::new(), Vec::new());
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let v = Vector(parse_row(no, &fields[1..], n)?);
        match fields[0] {
            "v" => pts.push(v),
            "r" => rays.push(v),
            "l" => lin.push(v),
            other => return Err(Error::Parse(format!("line {no}: unknown generator kind `{other}`"))),
        }
    }
    Polyhedron::from_generators(n, &pts, &rays, &lin)
}

pub fn format_vrep<S: Scalar>(k: &Polyhedron<S>) -> String {
    let mut out = format!("dim {}\n", k.ambient_dim());
    let mut push = |tag: &str, vs: &[Vector<S>]| {
        for v in vs {
            out.push_str(tag);
            for s in v.to_strings() {
                out.push(' ');
                out.push_str(&s);
            }
            out.push('\n');
        }
    };
    push("v", k.points());
    push("r", k.rays());
    push("l", k.lineality());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn hrep_round_trip() {
        let text = "# wedge\ndim 3\n0 0 0 -1\n0 1 0 0\n0 0 1 0\n-1 1 1 1\n";
        let k: Polyhedron = parse_hrep(text).unwrap();
        assert_eq!(k.facets().len(), 4);
        let again: Polyhedron = parse_hrep(&format_hrep(&k)).unwrap();
        assert_eq!(again, k);
        let v: Polyhedron = parse_vrep(&format_vrep(&k)).unwrap();
        assert_eq!(v, k);
    }

    #[test]
    fn whole_space_and_rationals() {
        let k: Polyhedron = parse_hrep("dim 3\n").unwrap();
        assert!(k.facets().is_empty());
        let h: Polyhedron = parse_hrep("dim 1\n1/2 -3/4\n").unwrap();
        assert_eq!(h.vertices(), &[Vector(vec![Rat::new(2.into(), 3.into())])]);
    }

    #[test]
    fn malformed_input_is_reported() {
        assert!(matches!(parse_hrep::<Rat>("dim 2\n1 2\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_hrep::<Rat>("0 1\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_hrep::<Rat>("dim 1\n1 x\n"), Err(Error::Parse(_))));
    }
}
