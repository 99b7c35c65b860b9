//! Command-line front end. [`run`] is pure apart from reading the system
//! file, so it can be driven from tests.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::atoms::AtomSet;
use crate::bundled;
use crate::elements::{GroupEl, LatticeOp, Positive};
use crate::error::Error;
use crate::nu::{NuAtom, NuVariant};
use crate::rewrite::{verify_presentation, Path};
use crate::system::{GarsideSystem, Side};

#[derive(Debug, Parser)]
#[command(name = "garside", version, about = "Garside monoids, parabolic submonoids and ribbon groupoids")]
pub struct Cli {
    /// System definition file, or the name of a bundled system
    /// (b3, b4, rank1, square_central, delta_root, delta_root_corrupted).
    #[arg(long, env = "GARSIDE_SYSTEM", global = true)]
    pub system: Option<String>,
    /// Output format. `rewriting` applies to `presentation` only.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Rewriting,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpKind {
    Lcm,
    Gcd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Left-greedy normal form of a positive word.
    Nf { word: String },
    /// Lattice operation on two positive words.
    Op {
        #[arg(long, value_enum)]
        kind: OpKind,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        w1: String,
        w2: String,
    },
    /// Minimal quasi-central multiple of a positive word.
    Tau { word: String },
    /// Free commutative basis of the quasi-centralizer.
    QzBasis,
    /// ν-function value at a parabolic and an atom.
    Nu {
        #[arg(long, allow_hyphen_values = true)]
        parabolic: String,
        #[arg(long)]
        atom: String,
        #[arg(long)]
        tilde: bool,
    },
    /// The ribbon quiver.
    Quiver,
    /// Groupoid presentation of the ribbon category.
    Presentation,
    /// Shaker loops at a parabolic and the Garside check for them.
    Shakers {
        #[arg(long)]
        parabolic: String,
        /// Length bound for the semidirect-split check.
        #[arg(long, default_value_t = 3)]
        level: usize,
    },
    /// Decompose a group word as (element of A_X)·(ν-ribbon).
    Conjugate {
        #[arg(long)]
        parabolic: String,
        word: String,
    },
    /// Check the ν-axioms and the presentation up to a length bound.
    Verify {
        #[arg(long, default_value_t = 6)]
        level: usize,
    },
}

/// Exit code, standard output and standard error of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn input_error(msg: String) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

fn load_system(spec: Option<&str>) -> Result<GarsideSystem, String> {
    let spec = spec.ok_or("no system given (use --system or GARSIDE_SYSTEM)")?;
    let path = std::path::Path::new(spec);
    if path.exists() {
        return GarsideSystem::from_path(path).map_err(|e| format!("{spec}: {e}"));
    }
    bundled::by_name(spec).ok_or_else(|| format!("{spec}: no such file or bundled system"))
}

/// Parse `argv` (including the program name) and execute.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let sys = match load_system(cli.system.as_deref()) {
        Ok(s) => s,
        Err(e) => return Outcome::input_error(e),
    };
    if cli.format == Format::Rewriting && !matches!(cli.command, Command::Presentation) {
        return Outcome::input_error("--format rewriting is only available for `presentation`".into());
    }
    match execute(&sys, &cli.command, cli.format) {
        Ok(out) => out,
        Err(e) if e.is_domain_negative() => negative(cli.format, &e),
        Err(e) => Outcome::input_error(e.to_string()),
    }
}

fn negative(format: Format, e: &Error) -> Outcome {
    let stdout = match format {
        Format::Json => format!("{}\n", json!({ "result": null, "reason": e.to_string() })),
        _ => "none\n".to_string(),
    };
    Outcome { code: 1, stdout, stderr: format!("{e}\n") }
}

fn word_json(sys: &GarsideSystem, p: &Positive) -> Value {
    json!(sys.expand(p).iter().map(|&a| sys.atom_name(a)).collect::<Vec<_>>())
}

fn positive_json(sys: &GarsideSystem, p: &Positive) -> Value {
    json!({
        "word": word_json(sys, p),
        "normal_form": p.letters().iter().map(|&s| {
            sys.simple_word(s).iter().map(|&a| sys.atom_name(a)).collect::<Vec<_>>()
        }).collect::<Vec<_>>(),
        "text": sys.render_positive(p),
    })
}

fn group_json(sys: &GarsideSystem, g: &GroupEl) -> Value {
    let (u1, u2) = sys.fraction(g, Side::Left);
    json!({
        "exponent": g.exponent,
        "body": positive_json(sys, &g.body),
        "word": sys.group_word(g),
        "left_fraction": { "denominator": word_json(sys, &u1), "numerator": word_json(sys, &u2) },
        "text": sys.render_group(g),
    })
}

fn set_json(sys: &GarsideSystem, x: AtomSet) -> Value {
    json!(sys.set_names(x))
}

fn nu_json(sys: &GarsideSystem, n: &NuAtom, variant: NuVariant) -> Value {
    json!({
        "variant": match variant { NuVariant::Plain => "plain", NuVariant::Tilde => "tilde" },
        "label": sys.atom_name(n.label),
        "source": set_json(sys, n.source),
        "target": set_json(sys, n.target),
        "element": positive_json(sys, &n.element),
        "kind": n.kind,
    })
}

fn emit(format: Format, value: Value, text: String) -> Outcome {
    match format {
        Format::Json => Outcome::ok(format!("{}\n", serde_json::to_string_pretty(&value).expect("json"))),
        _ => Outcome::ok(text),
    }
}

fn execute(sys: &GarsideSystem, cmd: &Command, format: Format) -> crate::Result<Outcome> {
    Ok(match cmd {
        Command::Nf { word } => {
            let p = sys.parse_positive(word)?;
            emit(format, json!({ "result": positive_json(sys, &p) }), format!("{}\n", sys.render_positive(&p)))
        }
        Command::Op { kind, side, w1, w2 } => {
            let (x, y) = (sys.parse_positive(w1)?, sys.parse_positive(w2)?);
            let op = match kind {
                OpKind::Lcm => LatticeOp::Join,
                OpKind::Gcd => LatticeOp::Meet,
            };
            let side: Side = (*side).into();
            let r = sys.lattice(&x, &y, op, side);
            emit(
                format,
                json!({
                    "kind": match kind { OpKind::Lcm => "lcm", OpKind::Gcd => "gcd" },
                    "side": side.name(),
                    "result": positive_json(sys, &r),
                }),
                format!("{}\n", sys.render_positive(&r)),
            )
        }
        Command::Tau { word } => {
            let p = sys.parse_positive(word)?;
            if p.is_identity() {
                return Err(Error::Parse("tau needs a non-empty word".into()));
            }
            let t = sys.tau(&p, sys.all_atoms())?;
            emit(format, json!({ "result": positive_json(sys, &t) }), format!("{}\n", sys.render_positive(&t)))
        }
        Command::QzBasis => {
            let qz = sys.qz_basis(sys.all_atoms())?;
            let map: serde_json::Map<String, Value> = qz
                .atom_map
                .iter()
                .map(|(&a, &i)| (sys.atom_name(a).to_string(), json!(i)))
                .collect();
            let text: String = qz.basis.iter().map(|b| format!("{}\n", sys.render_positive_word(b))).collect();
            emit(
                format,
                json!({
                    "basis": qz.basis.iter().map(|b| positive_json(sys, b)).collect::<Vec<_>>(),
                    "atom_map": map,
                }),
                text,
            )
        }
        Command::Nu { parabolic, atom, tilde } => {
            let x = sys.parse_atom_set(parabolic)?;
            let s = sys.atom_by_name(atom).ok_or_else(|| Error::UnknownAtom(atom.clone()))?;
            let variant = if *tilde { NuVariant::Tilde } else { NuVariant::Plain };
            let n = sys.nu(x, s, variant)?;
            emit(
                format,
                json!({ "result": nu_json(sys, &n, variant) }),
                format!(
                    "{} : {} -> {} ({})\n",
                    sys.render_positive(&n.element),
                    sys.render_set(n.source),
                    sys.render_set(n.target),
                    n.kind
                ),
            )
        }
        Command::Quiver => {
            let q = sys.atom_quiver()?;
            let doc = sys.quiver_doc(&q);
            emit(
                format,
                json!({ "objects": doc.objects, "generators": doc.generators }),
                sys.quiver_text(&q),
            )
        }
        Command::Presentation => {
            let p = sys.presentation()?;
            match format {
                Format::Json => Outcome::ok(format!("{}\n", sys.presentation_json(&p))),
                Format::Rewriting => Outcome::ok(sys.presentation_rewriting(&p)),
                Format::Text => Outcome::ok(sys.presentation_text(&p)),
            }
        }
        Command::Shakers { parabolic, level } => {
            let x = sys.parse_atom_set(parabolic)?;
            let q = sys.atom_quiver()?;
            let report = sys.shaker_garside_check(&q, x, *level)?;
            let sh = &report.shakers;
            let mut text = format!(
                "SH = [{}]\nsh = {}\ntilde sh = {}\n",
                sh.generators
                    .iter()
                    .map(|&id| sys.render_positive(&q.generator(id).element))
                    .collect::<Vec<_>>()
                    .join(", "),
                sys.render_set(sh.sh),
                sys.render_set(sh.sh_tilde)
            );
            match &sh.matrix {
                Some(m) => {
                    text.push_str("matrix:\n");
                    for row in m {
                        let cells: Vec<String> = row
                            .iter()
                            .map(|c| c.map(|v| v.to_string()).unwrap_or_else(|| "-".into()))
                            .collect();
                        text.push_str(&format!("  {}\n", cells.join(" ")));
                    }
                }
                None => text.push_str("matrix: none\n"),
            }
            for c in &report.checks {
                text.push_str(&format!("{} {}\n", if c.passed { "ok  " } else { "FAIL" }, c.name));
            }
            let value = json!({
                "parabolic": set_json(sys, x),
                "generators": sh.generators.iter().map(|&id| json!({
                    "id": id,
                    "kind": q.generator(id).kind,
                    "element": positive_json(sys, &q.generator(id).element),
                })).collect::<Vec<_>>(),
                "sh": set_json(sys, sh.sh),
                "sh_tilde": set_json(sys, sh.sh_tilde),
                "matrix": sh.matrix,
                "delta_sh": report.delta_sh.as_ref().map(|d| positive_json(sys, d)),
                "checks": report.checks.iter().map(|c| json!({
                    "name": c.name, "passed": c.passed, "detail": c.detail,
                })).collect::<Vec<_>>(),
                "passed": report.passed(),
            });
            let mut out = emit(format, value, text);
            if !report.passed() {
                out.code = 1;
            }
            out
        }
        Command::Conjugate { parabolic, word } => {
            let x = sys.parse_atom_set(parabolic)?;
            sys.check_parabolic(x)?;
            let g = sys.parse_group(word)?;
            let q = sys.atom_quiver()?;
            match sys.conj_decompose(&q, &g, x)? {
                None => {
                    let e = Error::NotARibbon { element: sys.render_group(&g), parabolic: sys.render_set(x) };
                    negative(format, &e)
                }
                Some(d) => emit(
                    format,
                    json!({ "result": {
                        "a": group_json(sys, &d.a),
                        "ribbon": {
                            "source": set_json(sys, d.ribbon.source),
                            "target": set_json(sys, d.ribbon.target),
                            "element": group_json(sys, &d.ribbon.element),
                            "numerator": positive_json(sys, &d.numerator),
                            "denominator": positive_json(sys, &d.denominator),
                        },
                    }}),
                    format!(
                        "a = {}\nr = {} : {} -> {}\n",
                        sys.render_group(&d.a),
                        sys.render_group(&d.ribbon.element),
                        sys.render_set(d.ribbon.source),
                        sys.render_set(d.ribbon.target)
                    ),
                ),
            }
        }
        Command::Verify { level } => {
            let nu = sys.verify_nu_axioms(*level)?;
            // a broken ν-structure may leave no presentation to check
            let pr = match sys.presentation() {
                Ok(p) => Ok(verify_presentation(sys, &p, *level)),
                Err(e) if e.is_domain_negative() => Err(e.to_string()),
                Err(e) => return Err(e),
            };
            let path_json = |p: &Path| json!({ "source": set_json(sys, p.source), "edges": p.edges });
            let pairs = |cs: &[crate::rewrite::Counterexample]| {
                cs.iter().map(|c| json!([path_json(&c.left), path_json(&c.right)])).collect::<Vec<_>>()
            };
            let pr_passed = pr.as_ref().is_ok_and(|r| r.passed());
            let passed = nu.passed() && pr_passed;
            let pr_json = match &pr {
                Ok(r) => json!({
                    "paths": r.paths,
                    "classes": r.classes,
                    "passed": r.passed(),
                    "soundness": pairs(&r.soundness),
                    "completeness": pairs(&r.completeness),
                }),
                Err(e) => json!({ "passed": false, "error": e }),
            };
            let value = json!({
                "level": level,
                "nu_axioms": {
                    "checked": nu.checked,
                    "passed": nu.passed(),
                    "violations": nu.violations.iter().map(|v| json!({
                        "variant": v.variant,
                        "axiom": v.axiom,
                        "parabolic": set_json(sys, v.parabolic),
                        "atom": sys.atom_name(v.atom),
                        "detail": v.detail,
                    })).collect::<Vec<_>>(),
                },
                "presentation": pr_json,
                "passed": passed,
            });
            let mut text = format!(
                "nu axioms: {} ({} values, {} violations)\n",
                if nu.passed() { "pass" } else { "FAIL" },
                nu.checked,
                nu.violations.len()
            );
            for v in &nu.violations {
                text.push_str(&format!(
                    "  {} axiom {} at {} / {}: {}\n",
                    v.variant.name(),
                    v.axiom,
                    sys.render_set(v.parabolic),
                    sys.atom_name(v.atom),
                    v.detail
                ));
            }
            match &pr {
                Ok(r) => text.push_str(&format!(
                    "presentation: {} ({} paths, {} classes, {} soundness and {} completeness counterexamples)\n",
                    if r.passed() { "pass" } else { "FAIL" },
                    r.paths,
                    r.classes,
                    r.soundness.len(),
                    r.completeness.len()
                )),
                Err(e) => text.push_str(&format!("presentation: FAIL ({e})\n")),
            }
            let mut out = emit(format, value, text);
            if !passed {
                out.code = 1;
            }
            out
        }
    })
}
