//! `zelisko` command-line front end.
//!
//! Every command prints either a human summary or one JSON document
//! (`--format json`); `enumerate` and `sample` print JSON lines. Exit codes:
//! 0 success, 1 negative result, 2 malformed input, 3 resource bound.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use zelisko::error::{Error, Result};
use zelisko::euclid::{Integer, Poly};
use zelisko::format::{
    check_characteristic, domain_matrix_from_json, domain_matrix_to_json, matrix_from_json, matrix_to_json,
    phi_from_json, phi_to_json, Element,
};
use zelisko::linsolve::{is_generating, solution_coset, DEFAULT_ENUMERATION_BOUND};
use zelisko::matrix::{smith_normal_form, DivisorChainPhi, MatrixRm};
use zelisko::residue::{Modulus, Residue};
use zelisko::verify::{self, Level};
use zelisko::zelisko::{block_profile, check_structure, for_each_member, is_member, sample_members};

#[derive(Parser, Debug)]
#[command(name = "zelisko", version, about = "Linear equations, annihilators and Zelisko groups over residue rings")]
struct Cli {
    /// Modulus m of R_m (an integer, or "[c0,c1,...]" with --poly-p)
    #[arg(long = "mod", global = true, allow_hyphen_values = true)]
    modulus: Option<String>,
    /// Work in F_p[x] / (m(x)) instead of Z / mZ
    #[arg(long, global = true)]
    poly_p: Option<u64>,
    /// Sampler seed
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest ring that may be listed; for `enumerate`, the largest
    /// number of candidate matrices (default 10^7)
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    bound: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

/// Matrix and Phi arguments are a file path, `-` for stdin, or inline JSON.
#[derive(Subcommand, Debug)]
enum Command {
    /// Generating solution and solution set of a * x = b
    Solve {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Annihilator of c
    Ann {
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Unit decomposition c = mu * e
    Decompose {
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Validates a divisor-chain Phi and prints its block profile
    PhiCheck { phi: String },
    /// Decides whether H lies in G_Phi
    Member { h: String, phi: String },
    /// Builds and checks the witness S with H Phi = Phi S
    Witness { h: String, phi: String },
    /// Draws random members of G_Phi
    Sample {
        phi: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 10_000)]
        max_tries: usize,
    },
    /// Lists every member of G_Phi (small rings only)
    Enumerate { phi: String },
    /// Smith normal form of a square matrix over the base domain
    Snf { matrix: String },
    /// Runs the verification suite
    Verify {
        #[arg(value_enum, default_value_t = LevelArg::Quick)]
        level: LevelArg,
    },
}

/// Default cap on `|R_m|^(n^2)` for `enumerate`.
const DEFAULT_CANDIDATE_BOUND: u64 = 10_000_000;

const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const MALFORMED: u8 = 2;
const RESOURCE: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::RingTooLarge { .. } | Error::SamplingExhausted(_) | Error::SizeOutOfRange(_) => RESOURCE,
        Error::Unsolvable { .. } | Error::NotAUnit(_) | Error::NotInvertible(_) | Error::StructureViolation { .. } => {
            NEGATIVE
        }
        _ => MALFORMED,
    }
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedInput(msg.into())
}

fn load_json(arg: &str) -> Result<Value> {
    let text = match arg.trim_start().chars().next() {
        Some('{') | Some('[') => arg.to_string(),
        _ if arg == "-" => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| malformed(format!("stdin: {e}")))?;
            s
        }
        _ => fs::read_to_string(arg).map_err(|e| malformed(format!("{arg}: {e}")))?,
    };
    serde_json::from_str(&text).map_err(|e| malformed(format!("{arg}: {e}")))
}

struct Ctx<'a, D: Element> {
    cli: &'a Cli,
    ctx: D::Context,
    out: &'a mut dyn Write,
}

impl<D: Element> Ctx<'_, D> {
    fn json(&self) -> bool {
        self.cli.format == Format::Json
    }

    fn emit(&mut self, v: &Value, human: &str) -> Result<()> {
        let r = if self.json() { writeln!(self.out, "{v}") } else { write!(self.out, "{human}") };
        r.map_err(|e| malformed(format!("write failed: {e}")))
    }

    fn element(&self, s: &str) -> Result<D> {
        D::parse_text(s, self.ctx)
    }

    fn modulus(&self) -> Result<Modulus<D>> {
        let m = self.cli.modulus.as_deref().ok_or_else(|| malformed("--mod is required"))?;
        Modulus::new(self.element(m)?)
    }

    /// Rejects a file whose modulus disagrees with `--mod`.
    fn check_modulus(&self, m: &Modulus<D>) -> Result<()> {
        if self.cli.modulus.is_some() && &self.modulus()? != m {
            return Err(malformed(format!("input modulus {} differs from --mod", m.value())));
        }
        Ok(())
    }

    fn phi(&self, v: &Value) -> Result<DivisorChainPhi<D>> {
        let phi = phi_from_json::<D>(v, Some(self.ctx))?;
        self.check_modulus(phi.modulus())?;
        Ok(phi)
    }

    fn matrix(&self, v: &Value) -> Result<MatrixRm<D>> {
        let h = matrix_from_json::<D>(v, Some(self.ctx))?;
        self.check_modulus(h.modulus())?;
        Ok(h)
    }

    fn bound(&self) -> u64 {
        self.cli.bound.unwrap_or(DEFAULT_ENUMERATION_BOUND)
    }
}

fn enc<D: Element>(r: &Residue<D>) -> Value {
    r.rep().encode()
}

fn list<D: Element>(v: &[Residue<D>]) -> String {
    v.iter().map(|r| r.rep().to_string()).collect::<Vec<_>>().join(", ")
}

fn render<D: Element>(a: &MatrixRm<D>) -> String {
    a.rows().map(|row| format!("  [{}]\n", list(row))).collect()
}

fn cmd_solve<D: Element>(c: &mut Ctx<D>, a: &str, b: &str) -> Result<u8> {
    let m = c.modulus()?;
    let (a, b) = (m.reduce(&c.element(a)?), m.reduce(&c.element(b)?));
    let coset = solution_coset(&a, &b)?;
    let solutions = match coset.enumerate(c.bound()) {
        Ok(v) => Some(v),
        Err(Error::RingTooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    let generating = is_generating(&a, &b, &coset.x0);
    let v = json!({
        "a": enc(&a), "b": enc(&b), "mod": m.value().encode(),
        "x0": enc(&coset.x0), "ann_generator": enc(&coset.ann_gen),
        "generating": generating,
        "solutions": solutions.as_ref().map(|s| s.iter().map(enc).collect::<Vec<_>>()),
    });
    let mut human = format!("x0 = {}\nsolutions = x0 + {} R_m\n", coset.x0.rep(), coset.ann_gen.rep());
    if let Some(s) = &solutions {
        human += &format!("{{{}}} ({} solutions)\n", list(s), s.len());
    }
    c.emit(&v, &human)?;
    Ok(OK)
}

fn cmd_ann<D: Element>(c: &mut Ctx<D>, x: &str) -> Result<u8> {
    let m = c.modulus()?;
    let x = m.reduce(&c.element(x)?);
    let generator = x.ann_generator();
    let elements = match x.annihilator(c.bound()) {
        Ok(v) => Some(v),
        Err(Error::RingTooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    let v = json!({
        "c": enc(&x), "mod": m.value().encode(),
        "generator": enc(&generator), "alpha": enc(&x.alpha_element()),
        "elements": elements.as_ref().map(|s| s.iter().map(enc).collect::<Vec<_>>()),
    });
    let mut human = format!("Ann({}) = {} R_m\n", x.rep(), generator.rep());
    if let Some(s) = &elements {
        human += &format!("{{{}}} ({} elements)\n", list(s), s.len());
    }
    c.emit(&v, &human)?;
    Ok(OK)
}

fn cmd_decompose<D: Element>(c: &mut Ctx<D>, x: &str) -> Result<u8> {
    let m = c.modulus()?;
    let x = m.reduce(&c.element(x)?);
    let d = x.unit_decompose();
    let v = json!({"c": enc(&x), "mod": m.value().encode(), "mu": d.mu.encode(), "unit": enc(&d.unit)});
    c.emit(&v, &format!("({}, {})\n", d.mu, d.unit.rep()))?;
    Ok(OK)
}

fn cmd_phi_check<D: Element>(c: &mut Ctx<D>, v: &Value) -> Result<u8> {
    let phi = c.phi(v)?;
    let p = block_profile(&phi);
    let multipliers: Vec<Vec<Value>> =
        (1..phi.n()).map(|i| (0..i).map(|j| enc(phi.lower_multiplier(i, j))).collect()).collect();
    let out = json!({
        "phi": phi_to_json(&phi),
        "case": p.case.to_string(),
        "n": p.n,
        "ones": p.ones,
        "chain": phi.chain().iter().map(enc).collect::<Vec<_>>(),
        "zeros": phi.zeros(),
        "normalized": phi.normalized_positions(),
        "multipliers": multipliers,
    });
    let mut human = format!(
        "Phi = diag({}), case ({})\nones {}, chain {}, zeros {}\n",
        list(phi.diagonal()),
        p.case,
        p.ones,
        phi.chain().len(),
        phi.zeros()
    );
    for i in 1..phi.n() {
        let row: Vec<_> = (0..i).map(|j| phi.lower_multiplier(i, j).clone()).collect();
        human += &format!("  lambda row {}: [{}]\n", i + 1, list(&row));
    }
    c.emit(&out, &human)?;
    Ok(OK)
}

fn rejection(e: &Error) -> Option<Value> {
    match e {
        Error::NotInvertible(det) => Some(json!({"kind": "not_invertible", "det": det})),
        Error::StructureViolation { block, row, col, reason } => {
            Some(json!({"kind": "structure", "block": block, "row": row, "col": col, "detail": reason}))
        }
        _ => None,
    }
}

fn cmd_member<D: Element>(c: &mut Ctx<D>, h: &Value, phi: &Value) -> Result<u8> {
    let (h, phi) = (c.matrix(h)?, c.phi(phi)?);
    let entrywise = is_member(&h, &phi)?;
    let (v, human, code) = match check_structure(&h, &phi) {
        Ok(sm) => (
            json!({"member": true, "case": sm.profile.case.to_string(), "entrywise": entrywise}),
            format!("yes (case {})\n", sm.profile.case),
            if entrywise { OK } else { NEGATIVE },
        ),
        Err(e) => match rejection(&e) {
            Some(reason) => (
                json!({"member": false, "reason": reason, "entrywise": entrywise}),
                format!("no: {e}\n"),
                NEGATIVE,
            ),
            None => return Err(e),
        },
    };
    c.emit(&v, &human)?;
    Ok(code)
}

fn witness_checks<D: Element>(h: &MatrixRm<D>, s: &MatrixRm<D>, phi: &DivisorChainPhi<D>) -> Result<(bool, bool)> {
    let p = phi.to_matrix();
    Ok((h.mat_mul(&p)? == p.mat_mul(s)?, h.det() == s.det()))
}

fn cmd_witness<D: Element>(c: &mut Ctx<D>, h: &Value, phi: &Value) -> Result<u8> {
    let (h, phi) = (c.matrix(h)?, c.phi(phi)?);
    let sm = match check_structure(&h, &phi) {
        Ok(sm) => sm,
        Err(e) => {
            let Some(reason) = rejection(&e) else { return Err(e) };
            c.emit(&json!({"member": false, "reason": reason}), &format!("no witness: {e}\n"))?;
            return Ok(NEGATIVE);
        }
    };
    let (commutes, det_equal) = witness_checks(&h, &sm.witness, &phi)?;
    let v = json!({
        "member": true,
        "s": matrix_to_json(&sm.witness),
        "h_phi_eq_phi_s": commutes,
        "det_h": enc(&h.det()),
        "det_s": enc(&sm.witness.det()),
        "det_equal": det_equal,
    });
    let human = format!(
        "S =\n{}H Phi = Phi S: {commutes}\ndet H = {}, det S = {}\n",
        render(&sm.witness),
        h.det().rep(),
        sm.witness.det().rep()
    );
    c.emit(&v, &human)?;
    Ok(if commutes && det_equal { OK } else { NEGATIVE })
}

fn cmd_sample<D: Element>(c: &mut Ctx<D>, phi: &Value, count: usize, max_tries: usize) -> Result<u8> {
    let phi = c.phi(phi)?;
    let seed = c.cli.seed;
    for (i, sm) in sample_members(&phi, seed, count, max_tries)?.iter().enumerate() {
        let v = json!({"index": i, "seed": seed, "h": matrix_to_json(&sm.h), "s": matrix_to_json(&sm.witness)});
        c.emit(&v, &format!("sample {i}\nH =\n{}S =\n{}", render(&sm.h), render(&sm.witness)))?;
    }
    Ok(OK)
}

fn cmd_enumerate<D: Element>(c: &mut Ctx<D>, phi: &Value) -> Result<u8> {
    let phi = c.phi(phi)?;
    let bound = c.cli.bound.unwrap_or(DEFAULT_CANDIDATE_BOUND);
    let size = phi.modulus().check_size(bound)?;
    let cells = (phi.n() * phi.n()) as u32;
    if size.checked_pow(cells).map_or(true, |total| total > bound) {
        return Err(Error::RingTooLarge { size: format!("{size}^{cells}"), bound });
    }
    let mut count = 0u64;
    let mut failure = None;
    for_each_member(&phi, |h| {
        count += 1;
        let human = format!("{}\n", h.rows().map(|r| format!("[{}]", list(r))).collect::<Vec<_>>().join(" "));
        if let Err(e) = c.emit(&matrix_to_json(&h), &human) {
            failure.get_or_insert(e);
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    c.emit(&json!({"count": count}), &format!("count: {count}\n"))?;
    Ok(OK)
}

fn cmd_snf<D: Element>(c: &mut Ctx<D>, a: &Value) -> Result<u8> {
    let a = domain_matrix_from_json::<D>(a, Some(c.ctx))?;
    let f = smith_normal_form(&a);
    let uav = f.u.mat_mul(&a)?.mat_mul(&f.v)?;
    let check = uav == f.d;
    let v = json!({
        "u": domain_matrix_to_json(&f.u),
        "d": domain_matrix_to_json(&f.d),
        "v": domain_matrix_to_json(&f.v),
        "diagonal": f.d.diagonal().iter().map(Element::encode).collect::<Vec<_>>(),
        "uav_eq_d": check,
    });
    let diag: Vec<String> = f.d.diagonal().iter().map(ToString::to_string).collect();
    c.emit(&v, &format!("D = diag({})\nU A V = D: {check}\n", diag.join(", ")))?;
    Ok(if check { OK } else { NEGATIVE })
}

fn cmd_verify(cli: &Cli, out: &mut dyn Write, level: LevelArg) -> Result<u8> {
    let (level, name) = match level {
        LevelArg::Quick => (Level::Quick, "quick"),
        LevelArg::Full => (Level::Full, "full"),
    };
    let outcomes = verify::run(level);
    let passed = outcomes.iter().all(|o| o.passed);
    let w = |r: io::Result<()>| r.map_err(|e| malformed(format!("write failed: {e}")));
    if cli.format == Format::Json {
        let checks: Vec<Value> = outcomes
            .iter()
            .map(|o| json!({"name": o.name, "passed": o.passed, "detail": o.detail}))
            .collect();
        w(writeln!(out, "{}", json!({"level": name, "passed": passed, "checks": checks})))?;
    } else {
        for o in &outcomes {
            w(writeln!(out, "{o}"))?;
        }
        let failed = outcomes.iter().filter(|o| !o.passed).count();
        w(writeln!(out, "{} of {} checks passed", outcomes.len() - failed, outcomes.len()))?;
    }
    Ok(if passed { OK } else { NEGATIVE })
}

fn run<D: Element>(cli: &Cli, ctx: D::Context, inputs: &[Value], out: &mut dyn Write) -> Result<u8> {
    let mut c = Ctx::<D> { cli, ctx, out };
    match &cli.command {
        Command::Solve { a, b } => cmd_solve(&mut c, a, b),
        Command::Ann { c: x } => cmd_ann(&mut c, x),
        Command::Decompose { c: x } => cmd_decompose(&mut c, x),
        Command::PhiCheck { .. } => cmd_phi_check(&mut c, &inputs[0]),
        Command::Member { .. } => cmd_member(&mut c, &inputs[0], &inputs[1]),
        Command::Witness { .. } => cmd_witness(&mut c, &inputs[0], &inputs[1]),
        Command::Sample { count, max_tries, .. } => cmd_sample(&mut c, &inputs[0], *count, *max_tries),
        Command::Enumerate { .. } => cmd_enumerate(&mut c, &inputs[0]),
        Command::Snf { .. } => cmd_snf(&mut c, &inputs[0]),
        Command::Verify { .. } => unreachable!("verify does not depend on the ring"),
    }
}

/// The characteristic from `--poly-p` or from a `"p"` field of an input.
fn characteristic(cli: &Cli, inputs: &[Value]) -> Result<Option<u32>> {
    let from_inputs = inputs.iter().filter_map(|v| v.get("p")).next();
    match (cli.poly_p, from_inputs) {
        (Some(p), _) => check_characteristic(p).map(Some),
        (None, Some(p)) => {
            let p = p.as_u64().ok_or_else(|| malformed(format!("bad characteristic {p}")))?;
            check_characteristic(p).map(Some)
        }
        (None, None) => Ok(None),
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<u8> {
    let files: Vec<&String> = match &cli.command {
        Command::Verify { level } => return cmd_verify(cli, out, *level),
        Command::PhiCheck { phi } | Command::Sample { phi, .. } | Command::Enumerate { phi } => vec![phi],
        Command::Member { h, phi } | Command::Witness { h, phi } => vec![h, phi],
        Command::Snf { matrix } => vec![matrix],
        Command::Solve { .. } | Command::Ann { .. } | Command::Decompose { .. } => vec![],
    };
    let inputs = files.into_iter().map(|f| load_json(f)).collect::<Result<Vec<_>>>()?;
    if let Some(bad) = inputs.iter().find(|v| !v.is_object()) {
        return Err(malformed(format!("expected a JSON object, got {bad}")));
    }
    match characteristic(cli, &inputs)? {
        Some(p) => run::<Poly>(cli, p, &inputs, out),
        None => run::<Integer>(cli, (), &inputs, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match dispatch(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            if cli.format == Format::Json {
                let mut obj = Map::new();
                obj.insert("error".into(), json!(e.to_string()));
                obj.insert("exit".into(), json!(exit_code(&e)));
                let _ = writeln!(out, "{}", Value::Object(obj));
            }
            eprintln!("error: {e}");
            exit_code(&e)
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
