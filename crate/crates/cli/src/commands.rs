//! The verbs behind the `cobkit` binary, as pure functions from parsed
//! files to output text.

use std::fmt::Write as _;

use cobkit_core::gen::{GenParams, Generator};
use cobkit_core::onecob::{factorize1, is_cofibration1, is_fibration1, lax_equivalent1, lift1, phi_to_2cob};
use cobkit_core::twocob::{factorize, lax_equivalent, lift};
use cobkit_core::{FinMap, SignedSet};

use crate::format::{serialize, serialize1, serialize2, CobFile};

/// A verb's result: text to emit and whether the answer was positive
/// (exit 0) or negative (exit 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub positive: bool,
}

impl Outcome {
    fn yes(text: String) -> Self {
        Self { text, positive: true }
    }
}

/// Invalid input or a failed precondition (exit 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure(pub String);

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Failure {}

impl From<cobkit_core::Error> for Failure {
    fn from(e: cobkit_core::Error) -> Self {
        Failure(e.to_string())
    }
}

pub type CmdResult<T = Outcome> = Result<T, Failure>;

fn mixed(files: &[&CobFile]) -> Failure {
    let kinds: Vec<&str> = files.iter().map(|f| f.kind()).collect();
    Failure(format!("files must all have the same kind, got {}", kinds.join(", ")))
}

pub fn validate(file: &CobFile) -> Outcome {
    let summary = match file {
        CobFile::Two(c) => format!("valid cob2: {} -> {}, {} components\n", c.m(), c.n(), c.comp_count()),
        CobFile::One(c) => format!(
            "valid cob1: {} -> {}, {} components, {} loops\n",
            c.source(),
            c.target(),
            c.comp_count(),
            c.loops()
        ),
    };
    Outcome::yes(summary)
}

pub fn compose(first: &CobFile, second: &CobFile) -> CmdResult {
    let out = match (first, second) {
        (CobFile::Two(a), CobFile::Two(b)) => serialize2(&a.then(b)?),
        (CobFile::One(a), CobFile::One(b)) => serialize1(&a.then(b)?),
        _ => return Err(mixed(&[first, second])),
    };
    Ok(Outcome::yes(out))
}

/// The cofibration and the fibration, serialized.
pub fn factor(file: &CobFile) -> CmdResult<(String, String)> {
    Ok(match file {
        CobFile::Two(c) => {
            let f = factorize(c)?;
            (serialize2(&f.cofib), serialize2(&f.fib))
        }
        CobFile::One(c) => {
            let f = factorize1(c)?;
            (serialize1(&f.cofib), serialize1(&f.fib))
        }
    })
}

pub fn lift_square(e: &CobFile, m: &CobFile, u: &CobFile, v: &CobFile) -> CmdResult {
    let out = match (e, m, u, v) {
        (CobFile::Two(e), CobFile::Two(m), CobFile::Two(u), CobFile::Two(v)) => serialize2(&lift(e, m, u, v)?),
        (CobFile::One(e), CobFile::One(m), CobFile::One(u), CobFile::One(v)) => serialize1(&lift1(e, m, u, v)?),
        _ => return Err(mixed(&[e, m, u, v])),
    };
    Ok(Outcome::yes(out))
}

fn witness_text(phi: &FinMap, psi: &FinMap, chi: &FinMap) -> String {
    format!("true\nphi: {:?}\npsi: {:?}\nchi: {:?}\n", phi.table(), psi.table(), chi.table())
}

pub fn eq(a: &CobFile, b: &CobFile, lax: bool) -> CmdResult {
    let answer = |found: Option<String>| match found {
        Some(text) => Outcome::yes(text),
        None => Outcome { text: "false\n".into(), positive: false },
    };
    if !lax {
        if a.kind() != b.kind() {
            return Err(mixed(&[a, b]));
        }
        return Ok(answer(a.strict_equals(b).then(|| "true\n".to_string())));
    }
    Ok(match (a, b) {
        (CobFile::Two(x), CobFile::Two(y)) => {
            answer(lax_equivalent(x, y).map(|w| witness_text(&w.phi, &w.psi, &w.chi)))
        }
        (CobFile::One(x), CobFile::One(y)) => {
            answer(lax_equivalent1(x, y).map(|w| witness_text(&w.phi, &w.psi, &w.chi)))
        }
        _ => return Err(mixed(&[a, b])),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Class {
    Cofibration,
    Fibration,
}

pub fn check(file: &CobFile, class: Class) -> Outcome {
    let holds = match (file, class) {
        (CobFile::Two(c), Class::Cofibration) => c.is_cofibration(),
        (CobFile::Two(c), Class::Fibration) => c.is_fibration(),
        (CobFile::One(c), Class::Cofibration) => is_cofibration1(c),
        (CobFile::One(c), Class::Fibration) => is_fibration1(c),
    };
    Outcome { text: format!("{holds}\n"), positive: holds }
}

pub fn map(file: &CobFile) -> CmdResult {
    match file {
        CobFile::One(c) => Ok(Outcome::yes(serialize2(&phi_to_2cob(c)))),
        CobFile::Two(_) => Err(Failure("map expects a cob1 file".into())),
    }
}

/// A component's incoming circles, outgoing circles and node label.
type Row = (Vec<usize>, Vec<usize>, String);

/// Boundary nodes on the left and right, one node per component between.
pub fn dot(file: &CobFile) -> Outcome {
    let mut out = String::from("graph cobordism {\n  rankdir=LR;\n");
    let (m, n, rows): (Vec<String>, Vec<String>, Vec<Row>) = match file {
        CobFile::Two(c) => {
            let form = c.canonical_form();
            let mut rows: Vec<_> =
                form.boundary_components.into_iter().map(|(i, o, g)| (i, o, format!("g={g}"))).collect();
            rows.extend(form.closed_genera.into_iter().map(|g| (vec![], vec![], format!("g={g}"))));
            ((0..c.m()).map(|i| format!("in {i}")).collect(), (0..c.n()).map(|j| format!("out {j}")).collect(), rows)
        }
        CobFile::One(c) => {
            let form = c.canonical_form();
            let label = |side: &str, s: &SignedSet| -> Vec<String> {
                (0..s.len()).map(|i| format!("{side} {i} {}", s.sign(i))).collect()
            };
            let mut rows: Vec<_> = form.components.into_iter().map(|(i, o)| (i, o, "arc".to_string())).collect();
            rows.extend((0..form.loops).map(|_| (vec![], vec![], "loop".to_string())));
            (label("in", c.source()), label("out", c.target()), rows)
        }
    };
    for (i, l) in m.iter().enumerate() {
        let _ = writeln!(out, "  in{i} [shape=circle, label=\"{l}\"];");
    }
    for (j, l) in n.iter().enumerate() {
        let _ = writeln!(out, "  out{j} [shape=circle, label=\"{l}\"];");
    }
    for (k, (_, _, l)) in rows.iter().enumerate() {
        let _ = writeln!(out, "  c{k} [shape=box, label=\"{l}\"];");
    }
    for (k, (ins, outs, _)) in rows.iter().enumerate() {
        for i in ins {
            let _ = writeln!(out, "  in{i} -- c{k};");
        }
        for j in outs {
            let _ = writeln!(out, "  c{k} -- out{j};");
        }
    }
    out.push_str("}\n");
    Outcome::yes(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GenKind {
    Cob2,
    Cob1,
}

/// Boundary requests for `gen`: circle counts for cob2, sign strings for
/// cob1; absent sides are drawn at random.
pub fn generate(kind: GenKind, inputs: Option<&str>, outputs: Option<&str>, params: GenParams) -> CmdResult {
    let mut g = Generator::new(params);
    let file = match kind {
        GenKind::Cob2 => {
            let count = |s: Option<&str>, g: &mut Generator| -> CmdResult<usize> {
                match s {
                    Some(s) => s.parse().map_err(|_| Failure(format!("expected a circle count, got {s:?}"))),
                    None => Ok(g.size()),
                }
            };
            let m = count(inputs, &mut g)?;
            let n = count(outputs, &mut g)?;
            CobFile::Two(g.cobordism2(m, n))
        }
        GenKind::Cob1 => {
            let parse = |s: &str| SignedSet::parse(s).map_err(Failure::from);
            let (m, n) = match (inputs, outputs) {
                (Some(a), Some(b)) => (parse(a)?, parse(b)?),
                (Some(a), None) => {
                    let m = parse(a)?;
                    let n = g.signed_target_for(&m);
                    (m, n)
                }
                (None, Some(b)) => {
                    let n = parse(b)?;
                    (g.signed_source_for(&n), n)
                }
                (None, None) => g.signed_pair(),
            };
            CobFile::One(g.cobordism1(&m, &n)?)
        }
    };
    Ok(Outcome::yes(serialize(&file)))
}
