use std::fs;
use std::path::Path;

use cimatroid::axioms::{self, Axiom, ViolationWitness};
use cimatroid::census;
use cimatroid::format::{self, statement_text, Document};
use cimatroid::matroid::{
    ci_of_matroid, enumerate_loopless_matroids_with, g_family, rank_from_ci,
    semimatroid_of_set_function,
};
use cimatroid::models::{
    chirotope_from_vectors, gaussian_ci, signed_circuits_from_vectors, VectorConfiguration,
};
use cimatroid::oriented::{
    check_circuit_axioms, check_oci, chirotope_validate, oriented_matroid_from_sigma,
    sigma_from_chirotope, sigma_of_oriented_matroid,
};
use cimatroid::{
    check_gaussoid, check_mci, check_semigraphoid, CIStatement, CIStructure, ElementSet, Execution,
    Matroid, OrientedCIStructure, SignedCircuitSet,
};

use crate::report::{Failure, Report};
use crate::{AxiomTag, Kind, Operation, Target};

type Outcome = Result<Report, Failure>;

/// Re-derives the input from a converted document; returns mismatches.
type Verify = Box<dyn FnOnce(&Document) -> Result<Vec<String>, Failure>>;

fn read(path: &Path) -> Result<Document, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    format::parse(&text).map_err(|e| Failure::io(path, e))
}

fn read_ci(path: &Path) -> Result<CIStructure, Failure> {
    match read(path)? {
        Document::Ci(g) => Ok(g),
        other => Err(Failure::new(format!(
            "{}: expected a `ci` file, found `{}`",
            path.display(),
            other.kind()
        ))),
    }
}

/// Writes `text` to `output`, or appends it to the report.
fn emit(report: &mut Report, text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::io(path, e))?;
            report.say(format!("wrote {}", path.display()));
        }
        None => text.lines().for_each(|l| report.say(l)),
    }
    Ok(())
}

fn lines<T>(items: &[T], line: impl Fn(&T) -> String) -> Vec<String> {
    items.iter().map(line).collect()
}

fn witness_lines(ws: &[ViolationWitness]) -> Vec<String> {
    lines(ws, ViolationWitness::line)
}

fn tag_name(tag: AxiomTag) -> &'static str {
    match tag {
        AxiomTag::Sg => "sg",
        AxiomTag::Mci => "mci",
        AxiomTag::Gaussoid => "gaussoid",
        AxiomTag::MatroidCi => "matroid-ci",
        AxiomTag::Oci => "oci",
    }
}

fn ci_violations(g: &CIStructure, tag: AxiomTag) -> Vec<String> {
    match tag {
        AxiomTag::Sg => witness_lines(&check_semigraphoid(g)),
        AxiomTag::Mci => witness_lines(&check_mci(g)),
        AxiomTag::Gaussoid => witness_lines(&check_gaussoid(g)),
        AxiomTag::MatroidCi => witness_lines(&axioms::check(g, &Axiom::MATROID)),
        AxiomTag::Oci => unreachable!("oci is not a ci axiom system"),
    }
}

fn verdict(report: &mut Report, label: &str, violations: Vec<String>) {
    if violations.is_empty() {
        report.say(format!("{label}: pass"));
    } else {
        report.say(format!("{label}: {} violations", violations.len()));
        violations.into_iter().for_each(|w| report.witness(w));
    }
}

pub fn check(input: &Path, tags: &[AxiomTag]) -> Outcome {
    let doc = read(input)?;
    let mut report = Report::new();
    match doc {
        Document::Ci(g) => {
            if tags.contains(&AxiomTag::Oci) {
                return Err(Failure::new("the oci axioms apply to `oci` files only"));
            }
            for &tag in tags {
                verdict(&mut report, tag_name(tag), ci_violations(&g, tag));
            }
        }
        Document::Oci(sigma) => {
            let zeros = sigma.zero_set();
            for &tag in tags {
                if tag == AxiomTag::Oci {
                    verdict(&mut report, "oci", lines(&check_oci(&sigma), |f| f.line()));
                } else {
                    let label = format!("{} (zero set)", tag_name(tag));
                    verdict(&mut report, &label, ci_violations(&zeros, tag));
                }
            }
        }
        other => {
            return Err(Failure::new(format!(
                "cannot check a `{}` file; expected `ci` or `oci`",
                other.kind()
            )))
        }
    }
    Ok(report)
}

fn ci_diff(a: &CIStructure, b: &CIStructure) -> Vec<String> {
    a.index()
        .statements()
        .filter(|s| a.contains(s) != b.contains(s))
        .map(|s| {
            let side = if a.contains(&s) {
                "input only"
            } else {
                "output only"
            };
            format!("differ {} {side}", statement_text(&s))
        })
        .collect()
}

fn sigma_diff(a: &OrientedCIStructure, b: &OrientedCIStructure) -> Vec<String> {
    a.diff(b)
        .into_iter()
        .map(|(s, x, y)| format!("differ {} {x} vs {y}", statement_text(&s)))
        .collect()
}

fn circuit_diff(a: &SignedCircuitSet, b: &SignedCircuitSet) -> Vec<String> {
    let mut out: Vec<String> = a
        .representatives()
        .iter()
        .filter(|x| !b.contains(x))
        .map(|x| format!("differ {} input only", format::signed_set_text(x)))
        .collect();
    out.extend(
        b.representatives()
            .iter()
            .filter(|x| !a.contains(x))
            .map(|x| format!("differ {} output only", format::signed_set_text(x))),
    );
    out
}

fn matroid_diff(a: &Matroid, b: &Matroid) -> Vec<String> {
    a.ground()
        .subsets()
        .filter(|&s| a.rank(s) != b.rank(s))
        .map(|s| {
            format!(
                "differ rank {{{}}} {} vs {}",
                elements(s),
                a.rank(s),
                b.rank(s)
            )
        })
        .collect()
}

fn elements(s: ElementSet) -> String {
    s.iter()
        .map(|e| (e + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn guard(violations: Vec<String>, what: &str) -> Result<(), Failure> {
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::new(format!("input is not {what}")).with_witnesses(violations))
    }
}

fn matroid_of_ci(g: &CIStructure) -> Result<Matroid, Failure> {
    guard(
        witness_lines(&axioms::check(g, &Axiom::MATROID)),
        "a matroid CI-structure",
    )?;
    Ok(Matroid::from_rank(rank_from_ci(g)?)?)
}

fn sigma_of_circuits(c: &SignedCircuitSet) -> Result<OrientedCIStructure, Failure> {
    guard(
        lines(&check_circuit_axioms(c), |f| f.to_string()),
        "a set of signed circuits",
    )?;
    Ok(sigma_of_oriented_matroid(c)?)
}

fn circuits_of_sigma(sigma: &OrientedCIStructure) -> Result<SignedCircuitSet, Failure> {
    guard(
        lines(&check_oci(sigma), |f| f.line()),
        "an oriented CI-structure",
    )?;
    Ok(oriented_matroid_from_sigma(sigma)?)
}

pub fn convert(input: &Path, to: Target, output: Option<&Path>, verify: bool) -> Outcome {
    let doc = read(input)?;
    let from = doc.kind();
    let (out, check): (Document, Verify) = match (doc, to) {
        (Document::Ci(g), Target::Matroid) => (
            Document::Matroid(matroid_of_ci(&g)?),
            Box::new(move |d| match d {
                Document::Matroid(m) => Ok(ci_diff(&g, &ci_of_matroid(m)?)),
                _ => unreachable!(),
            }),
        ),
        (Document::Matroid(m), Target::Ci) => (
            Document::Ci(ci_of_matroid(&m)?),
            Box::new(move |d| match d {
                Document::Ci(g) => Ok(matroid_diff(&m, &matroid_of_ci(g)?)),
                _ => unreachable!(),
            }),
        ),
        (Document::SignedCircuits(c), Target::Oci) => (
            Document::Oci(sigma_of_circuits(&c)?),
            Box::new(move |d| match d {
                Document::Oci(s) => Ok(circuit_diff(&c, &circuits_of_sigma(s)?)),
                _ => unreachable!(),
            }),
        ),
        (Document::Oci(sigma), Target::SignedCircuits) => (
            Document::SignedCircuits(circuits_of_sigma(&sigma)?),
            Box::new(move |d| match d {
                Document::SignedCircuits(c) => {
                    Ok(sigma_diff(&sigma, &sigma_of_oriented_matroid(c)?))
                }
                _ => unreachable!(),
            }),
        ),
        (Document::Chirotope(chi), Target::Oci) => {
            guard(
                lines(&chirotope_validate(&chi), |f| f.to_string()),
                "a chirotope",
            )?;
            (
                Document::Oci(sigma_from_chirotope(&chi)?),
                Box::new(|d| match d {
                    Document::Oci(s) => {
                        let back = sigma_of_oriented_matroid(&circuits_of_sigma(s)?)?;
                        Ok(sigma_diff(s, &back))
                    }
                    _ => unreachable!(),
                }),
            )
        }
        (Document::Chirotope(chi), Target::Matroid) => {
            guard(
                lines(&chirotope_validate(&chi), |f| f.to_string()),
                "a chirotope",
            )?;
            (
                Document::Matroid(chi.underlying_matroid()?),
                Box::new(|_| Ok(Vec::new())),
            )
        }
        (Document::SignedCircuits(c), Target::Matroid) => {
            guard(
                lines(&check_circuit_axioms(&c), |f| f.to_string()),
                "a set of signed circuits",
            )?;
            (
                Document::Matroid(cimatroid::oriented::underlying_matroid(&c)?),
                Box::new(|_| Ok(Vec::new())),
            )
        }
        (Document::SetFunction(h), Target::Ci) => (
            Document::Ci(semimatroid_of_set_function(&h)?),
            Box::new(|d| match d {
                Document::Ci(g) => Ok(witness_lines(&check_semigraphoid(g))),
                _ => unreachable!(),
            }),
        ),
        (Document::Matrix(m), Target::Ci) => (
            Document::Ci(gaussian_ci(&m)?),
            Box::new(|d| match d {
                Document::Ci(g) => Ok(witness_lines(&check_gaussoid(g))),
                _ => unreachable!(),
            }),
        ),
        (Document::Vectors(v), Target::Chirotope) => (
            Document::Chirotope(chirotope_from_vectors(&v)?),
            Box::new(move |d| match d {
                Document::Chirotope(chi) => {
                    let mut bad = lines(&chirotope_validate(chi), |f| f.to_string());
                    bad.extend(matroid_diff(
                        &v.linear_matroid()?,
                        &chi.underlying_matroid()?,
                    ));
                    Ok(bad)
                }
                _ => unreachable!(),
            }),
        ),
        (Document::Vectors(v), Target::SignedCircuits) => (
            Document::SignedCircuits(signed_circuits_from_vectors(&v)?),
            Box::new(|d| match d {
                Document::SignedCircuits(c) => {
                    let back = circuits_of_sigma(&sigma_of_circuits(c)?)?;
                    Ok(circuit_diff(c, &back))
                }
                _ => unreachable!(),
            }),
        ),
        (Document::Vectors(v), Target::Oci) => {
            let sigma = sigma_of_circuits(&signed_circuits_from_vectors(&v)?)?;
            (
                Document::Oci(sigma),
                Box::new(move |d| match d {
                    Document::Oci(s) => Ok(sigma_diff(
                        s,
                        &sigma_from_chirotope(&chirotope_from_vectors(&v)?)?,
                    )),
                    _ => unreachable!(),
                }),
            )
        }
        (Document::Vectors(v), Target::Matroid) => (
            Document::Matroid(v.linear_matroid()?),
            Box::new(|_| Ok(Vec::new())),
        ),
        (_, to) => {
            return Err(Failure::new(format!(
                "no conversion from `{from}` to `{}`",
                target_name(to)
            )))
        }
    };
    let mut report = Report::new();
    emit(&mut report, &out.to_text(), output)?;
    if verify {
        let mismatches = check(&out)?;
        verdict(&mut report, "verify", mismatches);
    }
    Ok(report)
}

fn target_name(t: Target) -> &'static str {
    match t {
        Target::Ci => "ci",
        Target::Matroid => "matroid",
        Target::Oci => "oci",
        Target::SignedCircuits => "signed-circuits",
        Target::Chirotope => "chirotope",
    }
}

fn element_set(elements: &[usize], n: usize) -> Result<ElementSet, Failure> {
    if elements.is_empty() {
        return Err(Failure::new("--elements is required"));
    }
    if let Some(&e) = elements.iter().find(|&&e| e == 0 || e > n) {
        return Err(Failure::new(format!("element {e} is outside 1..={n}")));
    }
    Ok(elements.iter().map(|e| e - 1).collect())
}

pub fn op(
    operation: Operation,
    input: &Path,
    with: Option<&Path>,
    elements: &[usize],
    output: Option<&Path>,
) -> Outcome {
    let g = read_ci(input)?;
    let second = || match with {
        Some(path) => read_ci(path),
        None => Err(Failure::new("--with is required for this operation")),
    };
    let mut report = Report::new();
    let (h, kept) = match operation {
        Operation::Delete => {
            let (h, map) = g.delete(element_set(elements, g.n())?)?;
            (h, Some(map.original))
        }
        Operation::Contract => {
            let (h, map) = g.contract(element_set(elements, g.n())?)?;
            (h, Some(map.original))
        }
        Operation::Dual => (g.dual(), None),
        Operation::Sum => (g.direct_sum(&second()?)?, None),
        Operation::Iso => {
            match g.isomorphism_to(&second()?)? {
                Some(perm) => {
                    let map: Vec<String> = perm
                        .iter()
                        .enumerate()
                        .map(|(a, b)| format!("{}->{}", a + 1, b + 1))
                        .collect();
                    report.say(format!("isomorphic: {}", map.join(" ")));
                }
                None => {
                    report.say("not isomorphic");
                    report.fail();
                }
            }
            return Ok(report);
        }
    };
    let mut text = String::new();
    if let Some(kept) = kept {
        let labels: Vec<String> = kept.iter().map(|e| (e + 1).to_string()).collect();
        text.push_str(&format!("# original elements: {}\n", labels.join(" ")));
    }
    text.push_str(&format::write_ci(&h));
    emit(&mut report, &text, output)?;
    Ok(report)
}

fn write_all(
    dir: &Path,
    prefix: &str,
    texts: impl Iterator<Item = String>,
) -> Result<usize, Failure> {
    fs::create_dir_all(dir).map_err(|e| Failure::io(dir, e))?;
    let mut count = 0;
    for (k, text) in texts.enumerate() {
        let path = dir.join(format!("{prefix}-{:04}.txt", k + 1));
        fs::write(&path, text).map_err(|e| Failure::io(&path, e))?;
        count += 1;
    }
    Ok(count)
}

pub fn enumerate(kind: Kind, n: usize, emit_dir: Option<&Path>, sequential: bool) -> Outcome {
    let exec = if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let mut report = Report::new();
    let (label, texts): (&str, Vec<String>) = match kind {
        Kind::Matroids => {
            let ms = enumerate_loopless_matroids_with(n, exec)?;
            (
                "matroid",
                ms.iter().map(format::write_matroid_bases).collect(),
            )
        }
        Kind::MatroidCi => {
            let gs = census::matroid_ci_scan(n, exec)?;
            let matroids = enumerate_loopless_matroids_with(n, exec)?.len();
            if matroids != gs.len() {
                report.witness(format!(
                    "count mismatch: {} structures vs {matroids} loopless matroids",
                    gs.len()
                ));
            }
            ("ci", gs.iter().map(format::write_ci).collect())
        }
        Kind::GaussoidMatroids => {
            let ms = census::gaussoid_matroids(n, exec)?;
            (
                "matroid",
                ms.iter().map(format::write_matroid_bases).collect(),
            )
        }
    };
    let noun = match kind {
        Kind::Matroids => "loopless matroids",
        Kind::MatroidCi => "CI-structures satisfying SG and MCI",
        Kind::GaussoidMatroids => "loopless matroids whose CI-structure is a gaussoid",
    };
    report.say(format!("{} {noun} on {n} elements", texts.len()));
    if let Some(dir) = emit_dir {
        let count = write_all(dir, label, texts.into_iter())?;
        report.say(format!("wrote {count} files to {}", dir.display()));
    }
    Ok(report)
}

pub fn demo_gm(m: usize, output: Option<&Path>) -> Outcome {
    if !(4..=6).contains(&m) {
        return Err(Failure::new(format!("--m must be in 4..=6, got {m}")));
    }
    let g = g_family(m)?;
    let mut report = Report::new();
    emit(&mut report, &format::write_ci(&g), output)?;

    let s12 = CIStatement::new(0, 1, ElementSet::EMPTY)?;
    let s13 = CIStatement::new(0, 2, (3..m).collect::<ElementSet>().with(1))?;
    let mci = check_mci(&g);
    let paired = mci.iter().find(|w| {
        w.premises.iter().any(|p| p.statement == s12 && !p.member)
            && w.failed.iter().any(|c| c.statement == s13)
    });
    match paired {
        Some(w) => report.say(format!(
            "G_{m} is not a matroid: MCI witness ({}) vs ({}) [{}]",
            statement_text(&s12),
            statement_text(&s13),
            w.line()
        )),
        None => report.witness(format!(
            "G_{m}: no MCI violation pairing ({}) with ({})",
            statement_text(&s12),
            statement_text(&s13)
        )),
    }
    let sg = check_semigraphoid(&g);
    if let Some(w) = sg.first() {
        report.say(format!(
            "G_{m} also fails SG: {} violations, first [{}]",
            sg.len(),
            w.line()
        ));
    }

    let mut passing = 0;
    for e in 0..m {
        let single = ElementSet::singleton(e);
        for (name, minor) in [
            ("delete", g.delete(single)),
            ("contract", g.contract(single)),
        ] {
            let (h, _) = minor?;
            let bad = axioms::check(&h, &Axiom::MATROID);
            match bad.first() {
                None => {
                    passing += 1;
                    report.say(format!("{name} {}: pass", e + 1));
                }
                Some(w) => {
                    report.say(format!("{name} {}: {} violations", e + 1, bad.len()));
                    report.witness(w.line());
                }
            }
        }
    }
    report.say(format!(
        "{passing}/{} single-element minors satisfy SG and MCI",
        2 * m
    ));
    Ok(report)
}

pub fn realize(input: &Path, output: Option<&Path>) -> Outcome {
    let mut report = Report::new();
    match read(input)? {
        Document::Vectors(v) => realize_vectors(&mut report, &v, output)?,
        Document::Matrix(sigma) => {
            let g = gaussian_ci(&sigma)?;
            report.say(format!(
                "covariance on {} variables: {} CI-statements hold",
                g.n(),
                g.len()
            ));
            verdict(&mut report, "gaussoid", witness_lines(&check_gaussoid(&g)));
            emit(&mut report, &format::write_ci(&g), output)?;
        }
        other => {
            return Err(Failure::new(format!(
                "cannot realize a `{}` file; expected `vectors` or `matrix`",
                other.kind()
            )))
        }
    }
    Ok(report)
}

fn realize_vectors(
    report: &mut Report,
    v: &VectorConfiguration,
    output: Option<&Path>,
) -> Result<(), Failure> {
    let chi = chirotope_from_vectors(v)?;
    let circuits = signed_circuits_from_vectors(v)?;
    let sigma = sigma_of_oriented_matroid(&circuits)?;
    report.say(format!(
        "{} vectors of rank {}: {} signed circuit pairs, {} nonzero statements",
        v.n(),
        chi.rank(),
        circuits.len() / 2,
        sigma.nonzero().count()
    ));
    verdict(
        report,
        "circuit axioms",
        lines(&check_circuit_axioms(&circuits), |f| f.to_string()),
    );
    verdict(
        report,
        "chirotope axioms",
        lines(&chirotope_validate(&chi), |f| f.to_string()),
    );
    verdict(report, "oci", lines(&check_oci(&sigma), |f| f.line()));
    verdict(
        report,
        "chirotope route",
        sigma_diff(&sigma, &sigma_from_chirotope(&chi)?),
    );
    let recovered = oriented_matroid_from_sigma(&sigma)?;
    verdict(report, "recovery", circuit_diff(&circuits, &recovered));
    emit(report, &format::write_oci(&sigma), output)
}
