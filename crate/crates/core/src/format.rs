//! Line-oriented text formats for complexes, shelling certificates and
//! posets.
//!
//! Complex files hold one facet per line, vertices as decimal integers
//! separated by single spaces. Lines starting with `#` are comments. A file
//! whose only content line is `!irrelevant` is the IRRELEVANT complex and a
//! file with no content lines is VOID.
//!
//! Poset files start with `elements: x y z`, followed by `x < y` lines, and
//! optionally `bottom: b` and `top: t` for a bounded poset.

use std::fmt::Write as _;

use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::poset::{BoundedPoset, FinitePoset};
use crate::shelling::{ShellingCertificate, ShellingOrder};

const IRRELEVANT_MARK: &str = "!irrelevant";

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_facets(text: &str) -> Result<(Vec<Face>, bool)> {
    let mut faces = Vec::new();
    let mut irrelevant = false;
    for (no, line) in content_lines(text) {
        if line == IRRELEVANT_MARK {
            irrelevant = true;
            continue;
        }
        let vs = line
            .split_whitespace()
            .map(|t| t.parse::<Vertex>().or_else(|_| parse_err(no, format!("bad vertex label {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        match Face::new(vs) {
            Ok(f) => faces.push(f),
            Err(e) => return parse_err(no, e.to_string()),
        }
    }
    if irrelevant && !faces.is_empty() {
        return parse_err(1, "`!irrelevant` cannot be combined with facet lines");
    }
    Ok((faces, irrelevant))
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let (faces, irrelevant) = parse_facets(text)?;
    if irrelevant {
        return Ok(SimplicialComplex::irrelevant());
    }
    Ok(SimplicialComplex::from_faces(faces))
}

/// Facet lines kept in file order, for user-supplied shelling orders.
pub fn parse_order(text: &str) -> Result<ShellingOrder> {
    let (faces, irrelevant) = parse_facets(text)?;
    if irrelevant {
        return Ok(ShellingOrder(vec![Face::empty()]));
    }
    Ok(ShellingOrder(faces))
}

fn face_line(f: &Face) -> String {
    f.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn write_complex(k: &SimplicialComplex) -> String {
    write_faces(k.facets())
}

fn write_faces(faces: &[Face]) -> String {
    if faces.len() == 1 && faces[0].is_empty() {
        return format!("{IRRELEVANT_MARK}\n");
    }
    let mut out = String::new();
    for f in faces {
        out.push_str(&face_line(f));
        out.push('\n');
    }
    out
}

pub fn write_order(order: &ShellingOrder) -> String {
    write_faces(order.facets())
}

/// The order as facet lines, then one `# step k: …` comment per step
/// listing the facets of that step's intersection.
pub fn write_certificate(cert: &ShellingCertificate) -> String {
    let mut out = write_order(&cert.order);
    for (i, inter) in cert.step_intersections.iter().enumerate() {
        let parts: Vec<String> = inter.iter().map(ToString::to_string).collect();
        writeln!(out, "# step {}: {}", i + 2, parts.join(" ")).unwrap();
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetFile {
    Plain(FinitePoset),
    Bounded(BoundedPoset),
}

impl PosetFile {
    /// The bounded poset, adjoining a bottom and top when none were declared.
    pub fn into_bounded(self) -> BoundedPoset {
        match self {
            PosetFile::Plain(p) => p.bounded_extension(),
            PosetFile::Bounded(b) => b,
        }
    }
}

pub fn parse_poset(text: &str) -> Result<PosetFile> {
    let mut elements: Option<Vec<String>> = None;
    let mut pairs: Vec<(String, String)> = Vec::new();
    let mut bottom: Option<(usize, String)> = None;
    let mut top: Option<(usize, String)> = None;
    for (no, line) in content_lines(text) {
        if let Some(rest) = line.strip_prefix("elements:") {
            if elements.is_some() {
                return parse_err(no, "elements declared twice");
            }
            elements = Some(rest.split_whitespace().map(str::to_string).collect());
        } else if let Some(rest) = line.strip_prefix("bottom:") {
            bottom = Some((no, rest.trim().to_string()));
        } else if let Some(rest) = line.strip_prefix("top:") {
            top = Some((no, rest.trim().to_string()));
        } else if let Some((x, y)) = line.split_once('<') {
            let (x, y) = (x.trim(), y.trim());
            if x.is_empty() || y.is_empty() || x.contains(char::is_whitespace) || y.contains(char::is_whitespace) {
                return parse_err(no, format!("expected `x < y`, got {line:?}"));
            }
            let Some(els) = &elements else {
                return parse_err(no, "cover line before the elements header");
            };
            for z in [x, y] {
                if !els.iter().any(|e| e == z) {
                    return parse_err(no, format!("unknown element {z}"));
                }
            }
            pairs.push((x.to_string(), y.to_string()));
        } else {
            return parse_err(no, format!("unrecognized line {line:?}"));
        }
    }
    let Some(elements) = elements else {
        return parse_err(1, "missing `elements:` header");
    };
    let poset = FinitePoset::from_covers(&elements, &pairs).map_err(|e| match e {
        Error::Parse { .. } => e,
        other => Error::Parse { line: 1, msg: other.to_string() },
    })?;
    match (bottom, top) {
        (None, None) => Ok(PosetFile::Plain(poset)),
        (Some((no, b)), Some((_, t))) => BoundedPoset::new(poset, &b, &t)
            .map(PosetFile::Bounded)
            .or_else(|e| parse_err(no, e.to_string())),
        (Some((no, _)), None) | (None, Some((no, _))) => {
            parse_err(no, "bottom and top must be declared together")
        }
    }
}

pub fn write_poset(p: &FinitePoset) -> String {
    let mut out = format!("elements: {}\n", p.labels().join(" "));
    for (x, y) in p.cover_pairs() {
        writeln!(out, "{} < {}", p.label(x), p.label(y)).unwrap();
    }
    out
}

pub fn write_bounded_poset(p: &BoundedPoset) -> String {
    let mut out = write_poset(p.poset());
    writeln!(out, "bottom: {}", p.poset().label(p.bottom())).unwrap();
    writeln!(out, "top: {}", p.poset().label(p.top())).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::m_cycle;

    #[test]
    fn complex_round_trip_and_degenerates() {
        let m5 = m_cycle(5).unwrap();
        let text = write_complex(&m5);
        assert_eq!(text, "1 2 3\n1 2 5\n1 4 5\n2 3 4\n3 4 5\n");
        assert_eq!(parse_complex(&text).unwrap(), m5);
        assert!(parse_complex("").unwrap().is_void());
        assert!(parse_complex("# nothing\n").unwrap().is_void());
        assert!(parse_complex("# c\n!irrelevant\n").unwrap().is_irrelevant());
        assert_eq!(write_complex(&SimplicialComplex::irrelevant()), "!irrelevant\n");
        assert_eq!(write_complex(&SimplicialComplex::void()), "");
    }

    #[test]
    fn complex_parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_complex("1 2\n# x\n3 3\n"),
            Err(Error::Parse { line: 3, msg: "malformed input: repeated vertex in face [3, 3]".into() })
        );
        assert!(matches!(parse_complex("1 x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_complex("!irrelevant\n1\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn order_keeps_file_order() {
        let o = parse_order("3 4\n1 2\n").unwrap();
        assert_eq!(o.0[0], Face::new([3, 4]).unwrap());
    }

    #[test]
    fn poset_round_trip() {
        let text = "# diamond\nelements: bot a b top\nbot < a\nbot < b\na < top\nb < top\nbottom: bot\ntop: top\n";
        let p = parse_poset(text).unwrap();
        let PosetFile::Bounded(b) = &p else { panic!("expected bounded") };
        assert_eq!(b.atoms().len(), 2);
        let again = parse_poset(&write_bounded_poset(b)).unwrap();
        assert_eq!(again, p);

        let plain = parse_poset("elements: x y\nx < y\n").unwrap();
        assert!(matches!(plain, PosetFile::Plain(_)));
        assert_eq!(plain.into_bounded().poset().len(), 4);
    }

    #[test]
    fn poset_parse_errors() {
        assert!(matches!(parse_poset("a < b\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_poset("elements: a b\na < c\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_poset("elements: a b\na < b\nb < a\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_poset("elements: a b\na < b\nbottom: a\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_poset("elements: a\nwhat\n"), Err(Error::Parse { line: 2, .. })));
    }
}
