//! Plain-text formats for every object in the crate.
//!
//! Each file starts with a header line naming the kind and its parameters,
//! e.g. `ci n=4`, followed by kind-specific lines. Elements are written
//! 1-based. `#` starts a comment that runs to the end of the line; blank
//! lines are ignored. Writers produce a canonical, byte-stable form that
//! parses back to an equal object.
//!
//! | kind              | header                   | body lines                         |
//! |-------------------|--------------------------|------------------------------------|
//! | `ci`              | `ci n=4`                 | `1 2 | 3 4` per member             |
//! | `matroid`         | `matroid n=3`            | `rank` + `1 2 : 2`, or `bases` + `1 2` |
//! | `setfn`           | `setfn n=3`              | `1 2 : 3/2` for every subset       |
//! | `oci`             | `oci n=3`                | `+ 1 2 | 3` per nonzero statement  |
//! | `signed-circuits` | `signed-circuits n=3`    | `+ 1 2 - 3` per pair `±X`          |
//! | `chirotope`       | `chirotope n=3 r=2`      | `1 2 +` per nonzero tuple          |
//! | `matrix`          | `matrix n=2`             | `n` rows of `n` rationals          |
//! | `vectors`         | `vectors d=2 n=3`        | `d` rows of `n` rationals          |

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matroid::{Matroid, RankFunction, SetFunction};
use crate::models::{RationalMatrix, VectorConfiguration};
use crate::oriented::{Chirotope, OrientedCIStructure, Sign, SignedCircuitSet, SignedSet};
use crate::set::{ElementSet, GroundSet};
use crate::statement::CIStatement;
use crate::structure::CIStructure;

/// Any parsed file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Ci(CIStructure),
    Matroid(Matroid),
    SetFunction(SetFunction),
    Oci(OrientedCIStructure),
    SignedCircuits(SignedCircuitSet),
    Chirotope(Chirotope),
    Matrix(RationalMatrix),
    Vectors(VectorConfiguration),
}

impl Document {
    /// The header keyword of this kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Ci(_) => "ci",
            Document::Matroid(_) => "matroid",
            Document::SetFunction(_) => "setfn",
            Document::Oci(_) => "oci",
            Document::SignedCircuits(_) => "signed-circuits",
            Document::Chirotope(_) => "chirotope",
            Document::Matrix(_) => "matrix",
            Document::Vectors(_) => "vectors",
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Document::Ci(g) => write_ci(g),
            Document::Matroid(m) => write_matroid_bases(m),
            Document::SetFunction(h) => write_setfn(h),
            Document::Oci(s) => write_oci(s),
            Document::SignedCircuits(c) => write_signed_circuits(c),
            Document::Chirotope(c) => write_chirotope(c),
            Document::Matrix(m) => write_matrix(m),
            Document::Vectors(v) => write_vectors(v),
        }
    }
}

/// Parses a file of any kind, dispatching on its header.
pub fn parse(text: &str) -> Result<Document> {
    let mut lines = Lines::new(text);
    let header = lines.header()?;
    Ok(match header.kind.as_str() {
        "ci" => Document::Ci(ci_body(&header, lines)?),
        "matroid" => Document::Matroid(matroid_body(&header, lines)?),
        "setfn" => Document::SetFunction(setfn_body(&header, lines)?),
        "oci" => Document::Oci(oci_body(&header, lines)?),
        "signed-circuits" => Document::SignedCircuits(signed_circuits_body(&header, lines)?),
        "chirotope" => Document::Chirotope(chirotope_body(&header, lines)?),
        "matrix" => Document::Matrix(matrix_body(&header, lines)?),
        "vectors" => Document::Vectors(vectors_body(&header, lines)?),
        other => {
            return Err(Error::parse(
                header.line,
                format!("unknown file kind `{other}`"),
            ))
        }
    })
}

macro_rules! typed_parser {
    ($name:ident, $kind:literal, $body:ident, $ty:ty) => {
        #[doc = concat!("Parses a `", $kind, "` file.")]
        pub fn $name(text: &str) -> Result<$ty> {
            let mut lines = Lines::new(text);
            let header = lines.header()?;
            header.expect_kind($kind)?;
            $body(&header, lines)
        }
    };
}

typed_parser!(parse_ci, "ci", ci_body, CIStructure);
typed_parser!(parse_matroid, "matroid", matroid_body, Matroid);
typed_parser!(parse_setfn, "setfn", setfn_body, SetFunction);
typed_parser!(parse_oci, "oci", oci_body, OrientedCIStructure);
typed_parser!(
    parse_signed_circuits,
    "signed-circuits",
    signed_circuits_body,
    SignedCircuitSet
);
typed_parser!(parse_chirotope, "chirotope", chirotope_body, Chirotope);
typed_parser!(parse_matrix, "matrix", matrix_body, RationalMatrix);
typed_parser!(parse_vectors, "vectors", vectors_body, VectorConfiguration);

// ---- writers

pub fn write_ci(g: &CIStructure) -> String {
    let mut out = format!("ci n={}\n", g.n());
    for s in g.members() {
        out.push_str(&statement_text(&s));
        out.push('\n');
    }
    out
}

pub fn write_matroid_bases(m: &Matroid) -> String {
    let mut out = format!("matroid n={}\nbases\n", m.n());
    let mut bases: Vec<Vec<usize>> = m.bases().iter().map(|b| b.iter().collect()).collect();
    bases.sort();
    for b in bases {
        out.push_str(&elements_text(b));
        out.push('\n');
    }
    out
}

pub fn write_matroid_rank(m: &Matroid) -> String {
    let mut out = format!("matroid n={}\nrank\n", m.n());
    for s in canonical_subsets(m.ground()) {
        let _ = writeln!(out, "{}", value_line(s, &m.rank(s).to_string()));
    }
    out
}

pub fn write_setfn(h: &SetFunction) -> String {
    let mut out = format!("setfn n={}\n", h.ground().size());
    for s in canonical_subsets(h.ground()) {
        let _ = writeln!(out, "{}", value_line(s, &h.value(s).to_string()));
    }
    out
}

pub fn write_oci(sigma: &OrientedCIStructure) -> String {
    let mut out = format!("oci n={}\n", sigma.n());
    for (s, v) in sigma.nonzero() {
        let _ = writeln!(out, "{} {}", v.symbol(), statement_text(&s));
    }
    out
}

pub fn write_signed_circuits(c: &SignedCircuitSet) -> String {
    let mut out = format!("signed-circuits n={}\n", c.n());
    for x in c.representatives() {
        out.push_str(&signed_set_text(&x));
        out.push('\n');
    }
    out
}

pub fn write_chirotope(chi: &Chirotope) -> String {
    let mut out = format!("chirotope n={} r={}\n", chi.n(), chi.rank());
    let mut rows: Vec<(Vec<usize>, Sign)> =
        chi.bases().map(|(s, v)| (s.iter().collect(), v)).collect();
    rows.sort();
    for (t, v) in rows {
        let e = elements_text(t);
        if e.is_empty() {
            let _ = writeln!(out, "{}", v.symbol());
        } else {
            let _ = writeln!(out, "{e} {}", v.symbol());
        }
    }
    out
}

pub fn write_matrix(m: &RationalMatrix) -> String {
    let mut out = format!("matrix n={}\n", m.rows());
    write_rows(&mut out, m);
    out
}

pub fn write_vectors(v: &VectorConfiguration) -> String {
    let mut out = format!("vectors d={} n={}\n", v.dimension(), v.n());
    write_rows(&mut out, v.matrix());
    out
}

fn write_rows(out: &mut String, m: &RationalMatrix) {
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

/// `1 2 | 3 4`, or `1 2 |` for empty `K`.
pub fn statement_text(s: &CIStatement) -> String {
    let k = elements_text(s.conditioning().iter());
    if k.is_empty() {
        format!("{} {} |", s.i() + 1, s.j() + 1)
    } else {
        format!("{} {} | {k}", s.i() + 1, s.j() + 1)
    }
}

/// `+ 1 2 - 3`; the `-` part is omitted when empty.
pub fn signed_set_text(x: &SignedSet) -> String {
    let mut parts = Vec::new();
    if !x.positive().is_empty() {
        parts.push(format!("+ {}", elements_text(x.positive().iter())));
    }
    if !x.negative().is_empty() {
        parts.push(format!("- {}", elements_text(x.negative().iter())));
    }
    parts.join(" ")
}

fn elements_text<I: IntoIterator<Item = usize>>(es: I) -> String {
    es.into_iter()
        .map(|e| (e + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn value_line(s: ElementSet, value: &str) -> String {
    let e = elements_text(s.iter());
    if e.is_empty() {
        format!(": {value}")
    } else {
        format!("{e} : {value}")
    }
}

/// Subsets by size, then lexicographically.
fn canonical_subsets(ground: GroundSet) -> Vec<ElementSet> {
    let mut subsets: Vec<ElementSet> = ground.subsets().collect();
    subsets.sort_by_key(|s| (s.len(), s.iter().collect::<Vec<_>>()));
    subsets
}

// ---- parsing

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

struct Header {
    kind: String,
    params: Vec<(String, usize)>,
    line: usize,
}

impl Header {
    fn expect_kind(&self, kind: &str) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::parse(
                self.line,
                format!("expected a `{kind}` file, found `{}`", self.kind),
            ))
        }
    }

    fn param(&self, key: &str) -> Result<usize> {
        self.params
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| *v)
            .ok_or_else(|| Error::parse(self.line, format!("header is missing `{key}=`")))
    }

    fn check_keys(&self, keys: &[&str]) -> Result<()> {
        for (k, _) in &self.params {
            if !keys.contains(&k.as_str()) {
                return Err(Error::parse(
                    self.line,
                    format!("unexpected header parameter `{k}`"),
                ));
            }
        }
        Ok(())
    }

    fn ground(&self) -> Result<GroundSet> {
        self.check_keys(&["n"])?;
        self.ground_param()
    }

    fn ground_param(&self) -> Result<GroundSet> {
        let n = self.param("n")?;
        if n == 0 {
            return Err(Error::parse(self.line, "n must be at least 1"));
        }
        GroundSet::new(n).map_err(|e| Error::parse(self.line, e.to_string()))
    }
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
        }
    }

    fn header(&mut self) -> Result<Header> {
        let Some((line, content)) = self.next() else {
            return Err(Error::parse(1, "empty input"));
        };
        let mut tokens = content.split_whitespace();
        let kind = tokens.next().unwrap_or_default().to_string();
        let mut params: Vec<(String, usize)> = Vec::new();
        for tok in tokens {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::parse(line, format!("malformed header parameter `{tok}`")))?;
            let v = v
                .parse()
                .map_err(|_| Error::parse(line, format!("`{v}` is not a nonnegative integer")))?;
            if params.iter().any(|(p, _)| p == k) {
                return Err(Error::parse(
                    line,
                    format!("header parameter `{k}` repeated"),
                ));
            }
            params.push((k.to_string(), v));
        }
        Ok(Header { kind, params, line })
    }
}

impl<'a> Iterator for Lines<'a> {
    type Item = (usize, &'a str);

    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (x, raw) in self.inner.by_ref() {
            let content = raw.split('#').next().unwrap_or("").trim();
            if !content.is_empty() {
                return Some((x + 1, content));
            }
        }
        None
    }
}

fn element(line: usize, tok: &str, ground: GroundSet) -> Result<usize> {
    let v: usize = tok
        .parse()
        .map_err(|_| Error::parse(line, format!("`{tok}` is not an element")))?;
    if v == 0 || v > ground.size() {
        return Err(Error::parse(
            line,
            format!("element {v} outside [{}]", ground.size()),
        ));
    }
    Ok(v - 1)
}

/// Distinct elements from whitespace-separated tokens.
fn element_set(line: usize, text: &str, ground: GroundSet) -> Result<ElementSet> {
    let mut s = ElementSet::EMPTY;
    for tok in text.split_whitespace() {
        let e = element(line, tok, ground)?;
        if s.contains(e) {
            return Err(Error::parse(line, format!("element {} repeated", e + 1)));
        }
        s = s.with(e);
    }
    Ok(s)
}

fn statement(line: usize, text: &str, ground: GroundSet) -> Result<CIStatement> {
    let (pair, k) = text
        .split_once('|')
        .ok_or_else(|| Error::parse(line, "statement needs a `|`"))?;
    let pair: Vec<&str> = pair.split_whitespace().collect();
    let [i, j] = pair.as_slice() else {
        return Err(Error::parse(
            line,
            "statement needs exactly two elements before `|`",
        ));
    };
    let (i, j) = (element(line, i, ground)?, element(line, j, ground)?);
    let k = element_set(line, k, ground)?;
    CIStatement::new(i, j, k).map_err(|e| Error::parse(line, e.to_string()))
}

fn rational(line: usize, tok: &str) -> Result<BigRational> {
    let bad = || Error::parse(line, format!("`{tok}` is not a rational number"));
    match tok.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p).map_err(|_| bad())?;
            let q = BigInt::from_str(q).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::parse(line, format!("zero denominator in `{tok}`")));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(tok).map_err(|_| bad())?,
        )),
    }
}

fn ci_body(header: &Header, lines: Lines) -> Result<CIStructure> {
    let ground = header.ground()?;
    let mut g = CIStructure::empty(ground);
    for (line, content) in lines {
        let s = statement(line, content, ground)?;
        if g.contains(&s) {
            return Err(Error::parse(line, format!("duplicate statement {s}")));
        }
        g.insert(s).map_err(|e| Error::parse(line, e.to_string()))?;
    }
    Ok(g)
}

fn oci_body(header: &Header, lines: Lines) -> Result<OrientedCIStructure> {
    let ground = header.ground()?;
    let mut sigma = OrientedCIStructure::zero(ground);
    let mut seen = BTreeSet::new();
    for (line, content) in lines {
        let (sign, rest) = match content.split_at(1) {
            ("+", rest) => (Sign::Positive, rest),
            ("-", rest) => (Sign::Negative, rest),
            _ => {
                return Err(Error::parse(
                    line,
                    "oriented statement must start with `+` or `-`",
                ))
            }
        };
        let s = statement(line, rest, ground)?;
        if !seen.insert(s) {
            return Err(Error::parse(line, format!("duplicate statement {s}")));
        }
        sigma
            .set(&s, sign)
            .map_err(|e| Error::parse(line, e.to_string()))?;
    }
    Ok(sigma)
}

/// `(elements, value)` lines of the form `1 2 : v`, one per subset.
fn subset_values<'a>(
    lines: impl Iterator<Item = (usize, &'a str)>,
    ground: GroundSet,
) -> Result<Vec<Option<(usize, &'a str)>>> {
    let mut values: Vec<Option<(usize, &str)>> = vec![None; ground.subset_count()];
    let mut last = 0;
    for (line, content) in lines {
        last = line;
        let (set, value) = content
            .split_once(':')
            .ok_or_else(|| Error::parse(line, "expected `<elements> : <value>`"))?;
        let s = element_set(line, set, ground)?;
        let slot = &mut values[s.bits() as usize];
        if slot.is_some() {
            return Err(Error::parse(line, format!("value for {s} given twice")));
        }
        *slot = Some((line, value.trim()));
    }
    if let Some(missing) = ground
        .subsets()
        .find(|s| values[s.bits() as usize].is_none())
    {
        return Err(Error::parse(
            last.max(1),
            format!("no value given for {missing}"),
        ));
    }
    Ok(values)
}

fn matroid_body(header: &Header, mut lines: Lines) -> Result<Matroid> {
    let ground = header.ground()?;
    let (line, mode) = lines
        .next()
        .ok_or_else(|| Error::parse(header.line, "expected `rank` or `bases`"))?;
    let invalid = |e: Error| Error::parse(line, e.to_string());
    match mode {
        "rank" => {
            let values = subset_values(lines, ground)?
                .into_iter()
                .map(|v| {
                    let (line, text) = v.expect("all subsets present");
                    text.parse::<u32>()
                        .map_err(|_| Error::parse(line, format!("`{text}` is not a rank value")))
                })
                .collect::<Result<Vec<u32>>>()?;
            Matroid::from_rank(RankFunction::new(ground, values).map_err(invalid)?).map_err(invalid)
        }
        "bases" => {
            let mut bases = Vec::new();
            let mut seen = BTreeSet::new();
            for (line, content) in lines {
                let b = element_set(line, content, ground)?;
                if !seen.insert(b) {
                    return Err(Error::parse(line, format!("basis {b} listed twice")));
                }
                bases.push(b);
            }
            if bases.is_empty() {
                bases.push(ElementSet::EMPTY);
            }
            Matroid::from_bases(ground, bases).map_err(invalid)
        }
        other => Err(Error::parse(
            line,
            format!("expected `rank` or `bases`, found `{other}`"),
        )),
    }
}

fn setfn_body(header: &Header, lines: Lines) -> Result<SetFunction> {
    let ground = header.ground()?;
    let values = subset_values(lines, ground)?
        .into_iter()
        .map(|v| {
            let (line, text) = v.expect("all subsets present");
            rational(line, text)
        })
        .collect::<Result<Vec<_>>>()?;
    SetFunction::new(ground, values)
}

fn signed_circuits_body(header: &Header, lines: Lines) -> Result<SignedCircuitSet> {
    let ground = header.ground()?;
    let mut reps: Vec<SignedSet> = Vec::new();
    let mut seen = BTreeSet::new();
    for (line, content) in lines {
        let mut pos = ElementSet::EMPTY;
        let mut neg = ElementSet::EMPTY;
        let mut sign = None;
        for tok in content.split_whitespace() {
            match tok {
                "+" => sign = Some(Sign::Positive),
                "-" => sign = Some(Sign::Negative),
                _ => {
                    let e = element(line, tok, ground)?;
                    if pos.union(neg).contains(e) {
                        return Err(Error::parse(line, format!("element {} repeated", e + 1)));
                    }
                    match sign {
                        Some(Sign::Positive) => pos = pos.with(e),
                        Some(Sign::Negative) => neg = neg.with(e),
                        _ => {
                            return Err(Error::parse(line, "signed set must start with `+` or `-`"))
                        }
                    }
                }
            }
        }
        if pos.union(neg).is_empty() {
            return Err(Error::parse(line, "empty signed set"));
        }
        let x = SignedSet::new(pos, neg).map_err(|e| Error::parse(line, e.to_string()))?;
        if !seen.insert(x.normalized()) {
            return Err(Error::parse(
                line,
                format!("signed set {x} or its negation listed twice"),
            ));
        }
        reps.push(x);
    }
    SignedCircuitSet::from_representatives(ground, reps)
}

fn chirotope_body(header: &Header, lines: Lines) -> Result<Chirotope> {
    header.check_keys(&["n", "r"])?;
    let ground = header.ground_param()?;
    let r = header.param("r")?;
    if r > ground.size() {
        return Err(Error::parse(
            header.line,
            format!("rank {r} exceeds n = {}", ground.size()),
        ));
    }
    let mut entries = Vec::new();
    let mut seen = BTreeSet::new();
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let (sign_tok, elems) = tokens.split_last().expect("line is not blank");
        if elems.len() != r {
            return Err(Error::parse(
                line,
                format!("expected {r} elements and a sign"),
            ));
        }
        let sign = match *sign_tok {
            "+" | "+1" => Sign::Positive,
            "-" | "-1" => Sign::Negative,
            "0" => Sign::Zero,
            other => return Err(Error::parse(line, format!("`{other}` is not a sign"))),
        };
        let tuple = elems
            .iter()
            .map(|t| element(line, t, ground))
            .collect::<Result<Vec<_>>>()?;
        let set: ElementSet = tuple.iter().copied().collect();
        if set.len() != r {
            return Err(Error::parse(line, "repeated element in tuple"));
        }
        if !seen.insert(set) {
            return Err(Error::parse(line, format!("tuple {set} listed twice")));
        }
        let inversions = (0..r)
            .flat_map(|a| (a + 1..r).map(move |b| (a, b)))
            .filter(|&(a, b)| tuple[a] > tuple[b])
            .count();
        entries.push((set, if inversions % 2 == 1 { -sign } else { sign }));
    }
    Chirotope::new(ground, r, entries)
}

fn rows_of(lines: Lines, rows: usize, cols: usize, header_line: usize) -> Result<RationalMatrix> {
    let mut entries = Vec::with_capacity(rows * cols);
    let mut count = 0;
    for (line, content) in lines {
        count += 1;
        if count > rows {
            return Err(Error::parse(line, format!("more than {rows} rows")));
        }
        let row = content
            .split_whitespace()
            .map(|t| rational(line, t))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != cols {
            return Err(Error::parse(
                line,
                format!("expected {cols} entries, found {}", row.len()),
            ));
        }
        entries.extend(row);
    }
    if count != rows {
        return Err(Error::parse(
            header_line,
            format!("expected {rows} rows, found {count}"),
        ));
    }
    RationalMatrix::new(rows, cols, entries)
}

fn matrix_body(header: &Header, lines: Lines) -> Result<RationalMatrix> {
    let n = header.ground()?.size();
    rows_of(lines, n, n, header.line)
}

fn vectors_body(header: &Header, lines: Lines) -> Result<VectorConfiguration> {
    header.check_keys(&["d", "n"])?;
    let n = header.ground_param()?.size();
    let d = header.param("d")?;
    if d == 0 {
        return Err(Error::parse(header.line, "d must be at least 1"));
    }
    VectorConfiguration::new(rows_of(lines, d, n, header.line)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ci_round_trip_and_comments() {
        let text = "# example\nci n=3\n1 2 |   # independent\n\n2 3 | 1\n";
        let g = parse_ci(text).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(write_ci(&g), "ci n=3\n1 2 |\n2 3 | 1\n");
        assert_eq!(parse_ci(&write_ci(&g)).unwrap(), g);
    }

    #[test]
    fn ci_rejections() {
        let err = |t: &str| parse_ci(t).unwrap_err();
        assert!(matches!(
            err("ci n=3\n1 2 |\n2 1 |\n"),
            Error::Parse { line: 3, .. }
        ));
        assert!(matches!(
            err("ci n=3\n1 4 |\n"),
            Error::Parse { line: 2, .. }
        ));
        assert!(matches!(
            err("ci n=3\n1 1 |\n"),
            Error::Parse { line: 2, .. }
        ));
        assert!(matches!(
            err("ci n=3\n1 2 | 2\n"),
            Error::Parse { line: 2, .. }
        ));
        assert!(matches!(err("ci n=3\n1 2\n"), Error::Parse { line: 2, .. }));
        assert!(matches!(err("oci n=3\n"), Error::Parse { line: 1, .. }));
        assert!(matches!(err(""), Error::Parse { .. }));
        assert!(matches!(err("ci n=0\n"), Error::Parse { .. }));
        assert!(matches!(err("ci n=17\n"), Error::Parse { .. }));
    }

    #[test]
    fn matroid_forms() {
        let bases = "matroid n=3\nbases\n1 2\n1 3\n2 3\n";
        let m = parse_matroid(bases).unwrap();
        assert_eq!(m, Matroid::uniform(2, 3).unwrap());
        assert_eq!(write_matroid_bases(&m), bases);
        let rank = write_matroid_rank(&m);
        assert!(rank.starts_with("matroid n=3\nrank\n: 0\n1 : 1\n"));
        assert_eq!(parse_matroid(&rank).unwrap(), m);
        assert!(parse_matroid("matroid n=2\nbases\n1\n1 2\n").is_err());
        assert!(parse_matroid("matroid n=2\nrank\n: 0\n1 : 1\n2 : 1\n").is_err());
        let zero = parse_matroid("matroid n=1\nbases\n").unwrap();
        assert_eq!(zero.full_rank(), 0);
        assert_eq!(parse_matroid(&write_matroid_bases(&zero)).unwrap(), zero);
    }

    #[test]
    fn setfn_round_trip() {
        let text = "setfn n=2\n: 0\n1 : 1/2\n2 : -3\n1 2 : 4/6\n";
        let h = parse_setfn(text).unwrap();
        assert_eq!(
            h.value(ElementSet::full(2)),
            &BigRational::new(2.into(), 3.into())
        );
        assert_eq!(parse_setfn(&write_setfn(&h)).unwrap(), h);
        assert!(parse_setfn("setfn n=1\n: 0\n").is_err());
        assert!(parse_setfn("setfn n=1\n: 0\n1 : 1/0\n").is_err());
    }

    #[test]
    fn oriented_round_trips() {
        let oci = "oci n=3\n+ 1 2 | 3\n- 1 3 | 2\n- 2 3 | 1\n";
        let sigma = parse_oci(oci).unwrap();
        assert_eq!(write_oci(&sigma), oci);
        assert!(parse_oci("oci n=3\n+ 1 2 |\n- 1 2 |\n").is_err());
        assert!(parse_oci("oci n=3\n1 2 |\n").is_err());

        let sc = "signed-circuits n=3\n+ 1 2 - 3\n";
        let c = parse_signed_circuits(sc).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(write_signed_circuits(&c), sc);
        let flipped = parse_signed_circuits("signed-circuits n=3\n- 1 2 + 3\n").unwrap();
        assert_eq!(flipped, c);
        assert!(parse_signed_circuits("signed-circuits n=3\n+ 1 2 - 3\n- 1 2 + 3\n").is_err());
        assert!(parse_signed_circuits("signed-circuits n=3\n1 2\n").is_err());

        let chi = "chirotope n=3 r=2\n1 2 +\n1 3 +\n2 3 -\n";
        let c = parse_chirotope(chi).unwrap();
        assert_eq!(write_chirotope(&c), chi);
        let unsorted = parse_chirotope("chirotope n=3 r=2\n2 1 -\n1 3 +\n3 2 +\n").unwrap();
        assert_eq!(unsorted, c);
        assert!(parse_chirotope("chirotope n=3 r=2\n1 2 3 +\n").is_err());
    }

    #[test]
    fn matrices_and_vectors() {
        let text = "matrix n=2\n1 1/10\n1/10 1\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(write_matrix(&m), text);
        assert!(parse_matrix("matrix n=2\n1 0\n").is_err());
        assert!(parse_matrix("matrix n=2\n1 0\n0 1\n0 0\n").is_err());
        let text = "vectors d=2 n=3\n1 0 1\n0 1 1\n";
        let v = parse_vectors(text).unwrap();
        assert_eq!(v.n(), 3);
        assert_eq!(write_vectors(&v), text);
        assert!(parse_vectors("vectors n=3\n1 0 1\n").is_err());
    }

    #[test]
    fn dispatch_by_header() {
        for text in [
            "ci n=2\n1 2 |\n",
            "matroid n=2\nbases\n1\n2\n",
            "oci n=2\n- 1 2 |\n",
            "signed-circuits n=2\n+ 1 - 2\n",
            "chirotope n=2 r=1\n1 +\n2 +\n",
            "matrix n=1\n2\n",
            "vectors d=1 n=2\n1 -1\n",
            "setfn n=1\n: 0\n1 : 1\n",
        ] {
            let doc = parse(text).unwrap();
            assert_eq!(doc.to_text(), text, "{}", doc.kind());
        }
        assert!(parse("graph n=2\n").is_err());
    }
}
