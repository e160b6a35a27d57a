//! Command dispatch and the report every command produces.

use indexmap::IndexMap;
use serde::Serialize;
use serde_json::{json, Value};

use entwining::algstruct::{check_algebra, check_bialgebra, check_coalgebra, check_comodule, check_left_module, check_right_module};
use entwining::comodcat::{adjunction_check_tc_fc, check_entwined_module, EntwinedModule};
use entwining::contracat::{
    adjunction_check_at_af, adjunction_check_f_t, check_contramodule, check_entwined_contramodule,
    EntwinedContraModule,
};
use entwining::corpus::random_probe_objects;
use entwining::criteria::{
    check_cointegral, decide_frobenius, decide_sep_co_f, decide_sep_co_t, decide_sep_contra_f, decide_sep_contra_t,
    find_cointegral, semisimplicity_probe, Side, Verdict,
};
use entwining::entwine::{check_entwining, Entwining};
use entwining::exactlin::Field;
use entwining::measuring_galois::{
    check_measuring, cohom, cotensor, galois_a0, galois_ac0, galois_measuring, galois_summary, hat_tensor, hom_tilde,
    is_co_galois, is_contra_galois, Measuring,
};
use entwining::report::Report;

use crate::workspace::{Bound, ContraObject, InputError, ModuleObject, Workspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Unknown => "UNKNOWN",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Unknown => 2,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedVerdict {
    pub name: String,
    pub verdict: Value,
}

/// The machine-readable result of one command.
#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub command: String,
    pub subject: String,
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub status: Status,
    #[serde(skip_serializing_if = "IndexMap::is_empty")]
    pub facts: IndexMap<String, Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<NamedVerdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<Report>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub observations: Vec<String>,
}

impl Outcome {
    fn new(command: &str, subject: impl Into<String>, field: Field) -> Outcome {
        Outcome {
            command: command.to_string(),
            subject: subject.into(),
            field: field.to_string(),
            seed: None,
            status: Status::Pass,
            facts: IndexMap::new(),
            verdicts: Vec::new(),
            reports: Vec::new(),
            observations: Vec::new(),
        }
    }

    fn fact(&mut self, key: &str, value: impl Serialize) {
        self.facts
            .insert(key.to_string(), serde_json::to_value(value).expect("fact serializes"));
    }

    fn report(&mut self, report: Report) {
        if !report.passed() {
            self.status = Status::Fail;
        }
        self.reports.push(report);
    }

    fn verdict<W: Serialize>(&mut self, name: &str, verdict: &Verdict<W>) {
        match verdict {
            Verdict::None { .. } => self.status = Status::Fail,
            Verdict::Unknown { .. } if self.status == Status::Pass => self.status = Status::Unknown,
            _ => {}
        }
        self.verdicts.push(NamedVerdict {
            name: name.to_string(),
            verdict: serde_json::to_value(verdict).expect("verdict serializes"),
        });
    }

    fn fail(&mut self) {
        self.status = Status::Fail;
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("outcome serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} over {}: {}\n", self.command, self.subject, self.field, self.status.label());
        if let Some(seed) = self.seed {
            out += &format!("  seed: {seed}\n");
        }
        for (k, v) in &self.facts {
            out += &format!("  {k}: {v}\n");
        }
        for v in &self.verdicts {
            out += &format!("  {}: {}\n", v.name, v.verdict["status"].as_str().unwrap_or("?"));
        }
        for r in &self.reports {
            let passed = r.checks.iter().filter(|c| c.pass).count();
            out += &format!("  {}: {passed}/{} checks pass\n", r.subject, r.checks.len());
            for c in r.failures() {
                out += &format!("    failed {}", c.id);
                if let Some(w) = &c.witness {
                    out += &format!(
                        " at input {:?} output {:?}: {} != {}",
                        w.input_legs, w.output_legs, w.lhs, w.rhs
                    );
                }
                if let Some(note) = &c.note {
                    out += &format!(" ({note})");
                }
                out += "\n";
            }
        }
        for o in &self.observations {
            out += &format!("  observation: {o}\n");
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideChoice {
    Contra,
    Co,
    Both,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub budget: u64,
    pub seed: Option<u64>,
    pub side: SideChoice,
}

#[derive(Clone, Debug)]
pub enum Command {
    /// Checks the named objects, or everything when `names` is empty.
    Check { names: Vec<String> },
    Galois { name: String },
    Measuring { name: String },
    Cotensor { measuring: String, module: String },
    HatTensor { measuring: String, module: String },
    Cohom { measuring: String, contramodule: String },
    HomTilde { measuring: String, contramodule: String },
    Separability { entwining: String },
    Frobenius { entwining: String },
    Cointegral { entwining: String },
    MaschkeProbe { entwining: String },
}

fn unknown(kind: &str, name: &str) -> InputError {
    InputError::Invalid {
        location: name.to_string(),
        message: format!("no {kind} named {name:?} in the workspace"),
    }
}

fn entwining<'w>(ws: &'w Workspace, name: &str) -> Result<&'w Entwining, InputError> {
    ws.entwinings
        .get(name)
        .map(|b| &b.value)
        .ok_or_else(|| unknown("entwining", name))
}

fn measuring<'w>(ws: &'w Workspace, name: &str) -> Result<&'w Bound<Measuring>, InputError> {
    ws.measurings.get(name).ok_or_else(|| unknown("measuring", name))
}

fn entwined_module<'w>(ws: &'w Workspace, name: &str, over: &str) -> Result<&'w EntwinedModule, InputError> {
    match ws.modules.get(name) {
        Some(Bound {
            over: o,
            value: ModuleObject::Entwined(x),
        }) if o[0] == over => Ok(x),
        Some(_) => Err(InputError::Invalid {
            location: name.to_string(),
            message: format!("expected an entwined module over {over:?}"),
        }),
        None => Err(unknown("module", name)),
    }
}

fn entwined_contra<'w>(ws: &'w Workspace, name: &str, over: &str) -> Result<&'w EntwinedContraModule, InputError> {
    match ws.contramodules.get(name) {
        Some(Bound {
            over: o,
            value: ContraObject::Entwined(x),
        }) if o[0] == over => Ok(x),
        Some(_) => Err(InputError::Invalid {
            location: name.to_string(),
            message: format!("expected an entwined contramodule over {over:?}"),
        }),
        None => Err(unknown("contramodule", name)),
    }
}

fn precondition(name: &str) -> impl Fn(entwining::Error) -> InputError + '_ {
    move |e| InputError::Invalid {
        location: name.to_string(),
        message: e.to_string(),
    }
}

fn prefixed(prefix: &str, mut report: Report) -> Report {
    report.subject = format!("{prefix}: {}", report.subject);
    report
}

fn check_all(ws: &Workspace, names: &[String], seed: u64) -> Result<Outcome, InputError> {
    let everything: Vec<String>;
    let everything_requested = names.is_empty();
    let names = if everything_requested {
        everything = [
            ws.algebras.keys().collect::<Vec<_>>(),
            ws.coalgebras.keys().collect(),
            ws.bialgebras.keys().collect(),
            ws.entwinings.keys().collect(),
            ws.comodules.keys().collect(),
            ws.modules.keys().collect(),
            ws.contramodules.keys().collect(),
            ws.measurings.keys().collect(),
            ws.galois.keys().collect(),
        ]
        .concat()
        .into_iter()
        .cloned()
        .collect::<indexmap::IndexSet<_>>()
        .into_iter()
        .collect();
        &everything[..]
    } else {
        names
    };
    let subject = if everything_requested { "workspace".to_string() } else { names.join(" ") };
    let mut out = Outcome::new("check", subject, ws.field);
    out.seed = Some(seed);
    for name in names {
        let mut found = false;
        if let Some(a) = ws.algebras.get(name) {
            out.report(prefixed(name, check_algebra(a)));
            found = true;
        }
        if let Some(c) = ws.coalgebras.get(name) {
            out.report(prefixed(name, check_coalgebra(c)));
            found = true;
        }
        if let Some(b) = ws.bialgebras.get(name) {
            out.report(prefixed(name, check_bialgebra(&b.value)));
            found = true;
        }
        if let Some(b) = ws.entwinings.get(name) {
            let e = &b.value;
            let axioms = check_entwining(e);
            let sound = axioms.passed();
            out.report(prefixed(name, axioms));
            if sound {
                let probe = random_probe_objects(e, seed);
                let tc = adjunction_check_tc_fc(e, &probe.comodule, &probe.module).map_err(precondition(name))?;
                out.report(prefixed(name, tc));
                let ft = adjunction_check_f_t(e, &probe.contra, &probe.contramodule).map_err(precondition(name))?;
                out.report(prefixed(name, ft));
                let at = adjunction_check_at_af(e, &probe.left, &probe.contra).map_err(precondition(name))?;
                out.report(prefixed(name, at));
            }
            found = true;
        }
        if let Some(b) = ws.comodules.get(name) {
            out.report(prefixed(name, check_comodule(&ws.coalgebras[&b.over[0]], &b.value)));
            found = true;
        }
        if let Some(b) = ws.modules.get(name) {
            let report = match &b.value {
                ModuleObject::Entwined(x) => {
                    check_entwined_module(&ws.entwinings[&b.over[0]].value, x).map_err(precondition(name))?
                }
                ModuleObject::Right(x) => check_right_module(&ws.algebras[&b.over[0]], x),
                ModuleObject::Left(x) => check_left_module(&ws.algebras[&b.over[0]], x),
            };
            out.report(prefixed(name, report));
            found = true;
        }
        if let Some(b) = ws.contramodules.get(name) {
            let report = match &b.value {
                ContraObject::Entwined(x) => {
                    check_entwined_contramodule(&ws.entwinings[&b.over[0]].value, x).map_err(precondition(name))?
                }
                ContraObject::Plain(x) => {
                    check_contramodule(&ws.coalgebras[&b.over[0]], x).map_err(precondition(name))?
                }
            };
            out.report(prefixed(name, report));
            found = true;
        }
        if let Some(b) = ws.measurings.get(name) {
            out.report(prefixed(name, check_measuring(&b.value).map_err(precondition(name))?));
            found = true;
        }
        if let Some(b) = ws.galois.get(name) {
            out.report(prefixed(name, b.value.check()));
            found = true;
        }
        if !found {
            return Err(unknown("object", name));
        }
    }
    Ok(out)
}

fn galois(ws: &Workspace, name: &str) -> Result<Outcome, InputError> {
    let g = &ws.galois.get(name).ok_or_else(|| unknown("Galois datum", name))?.value;
    let mut out = Outcome::new("galois", name, ws.field);
    let data = g.check();
    let sound = data.passed();
    out.report(data);
    if !sound {
        return Ok(out);
    }
    let summary = galois_summary(g);
    out.fact("coinvariants_dim", summary.coinvariant_basis.len());
    out.fact("a0_dim", galois_a0(g).dim());
    out.fact("domain_dim", summary.domain_dim);
    out.fact("codomain_dim", summary.codomain_dim);
    out.fact("can_rank", summary.can_rank);
    out.fact("galois", summary.galois);
    out.fact("coinvariant_basis", &summary.coinvariant_basis);
    if !summary.galois {
        out.fail();
        return Ok(out);
    }
    out.fact("ac0_dim", galois_ac0(g).map_err(precondition(name))?.dim());
    let m = galois_measuring(g).map_err(precondition(name))?;
    out.report(check_measuring(&m).map_err(precondition(name))?);
    let co = is_co_galois(&m).map_err(precondition(name))?;
    let contra = is_contra_galois(&m).map_err(precondition(name))?;
    if !(co.galois && contra.galois) {
        out.fail();
    }
    out.fact("co_galois", co);
    out.fact("contra_galois", contra);
    Ok(out)
}

fn measuring_command(ws: &Workspace, name: &str) -> Result<Outcome, InputError> {
    let m = &measuring(ws, name)?.value;
    let mut out = Outcome::new("measuring", name, ws.field);
    let report = check_measuring(m).map_err(precondition(name))?;
    let sound = report.passed();
    out.report(report);
    if sound {
        let co = is_co_galois(m).map_err(precondition(name))?;
        let contra = is_contra_galois(m).map_err(precondition(name))?;
        out.fact("co_galois", co);
        out.fact("contra_galois", contra);
    }
    Ok(out)
}

fn module_json(x: &EntwinedModule) -> Value {
    json!({ "dim": x.dim, "action": x.action, "coaction": x.coaction })
}

fn contra_json(x: &EntwinedContraModule) -> Value {
    json!({ "dim": x.dim, "pi": x.pi, "action": x.action })
}

fn construction(ws: &Workspace, command: &Command) -> Result<Outcome, InputError> {
    let (kind, meas, obj) = match command {
        Command::Cotensor { measuring, module } => ("cotensor", measuring, module),
        Command::HatTensor { measuring, module } => ("hattensor", measuring, module),
        Command::Cohom { measuring, contramodule } => ("cohom", measuring, contramodule),
        Command::HomTilde { measuring, contramodule } => ("homtilde", measuring, contramodule),
        _ => unreachable!("not a construction"),
    };
    let bound = measuring(ws, meas)?;
    let m = &bound.value;
    let (src, dst) = (&bound.over[0], &bound.over[1]);
    let mut out = Outcome::new(kind, format!("{meas} {obj}"), ws.field);
    let sound = check_measuring(m).map_err(precondition(meas))?;
    if !sound.passed() {
        out.report(sound);
        return Ok(out);
    }
    let err = precondition(obj);
    match kind {
        "cotensor" => {
            let k = cotensor(m, entwined_module(ws, obj, dst)?).map_err(err)?;
            out.report(check_entwined_module(&m.src, &k.object).map_err(precondition(obj))?);
            out.fact("dim", k.object.dim);
            out.fact("object", module_json(&k.object));
        }
        "hattensor" => {
            let q = hat_tensor(m, entwined_module(ws, obj, src)?).map_err(err)?;
            out.report(check_entwined_module(&m.dst, &q.object).map_err(precondition(obj))?);
            out.fact("dim", q.object.dim);
            out.fact("object", module_json(&q.object));
        }
        "cohom" => {
            let q = cohom(m, entwined_contra(ws, obj, dst)?).map_err(err)?;
            out.report(check_entwined_contramodule(&m.src, &q.object).map_err(precondition(obj))?);
            out.fact("dim", q.object.dim);
            out.fact("object", contra_json(&q.object));
        }
        _ => {
            let k = hom_tilde(m, entwined_contra(ws, obj, src)?).map_err(err)?;
            out.report(check_entwined_contramodule(&m.dst, &k.object).map_err(precondition(obj))?);
            out.fact("dim", k.object.dim);
            out.fact("object", contra_json(&k.object));
        }
    }
    Ok(out)
}

/// Runs the deciders only on entwinings that satisfy the axioms.
fn sound_entwining<'w>(ws: &'w Workspace, name: &str, out: &mut Outcome) -> Result<Option<&'w Entwining>, InputError> {
    let e = entwining(ws, name)?;
    let axioms = check_entwining(e);
    if axioms.passed() {
        Ok(Some(e))
    } else {
        out.report(axioms);
        Ok(None)
    }
}

fn separability(ws: &Workspace, name: &str) -> Result<Outcome, InputError> {
    let mut out = Outcome::new("separability", name, ws.field);
    let Some(e) = sound_entwining(ws, name, &mut out)? else {
        return Ok(out);
    };
    let (contra_t, co_t) = (decide_sep_contra_t(e), decide_sep_co_t(e));
    let (contra_f, co_f) = (decide_sep_contra_f(e), decide_sep_co_f(e));
    if contra_t.status() != co_t.status() {
        out.observations.push(format!(
            "induction functors disagree: contramodules {}, comodules {}",
            contra_t.status(),
            co_t.status()
        ));
    }
    if contra_f.status() != co_f.status() {
        out.observations.push(format!(
            "forgetful functors disagree: contramodules {}, comodules {}",
            contra_f.status(),
            co_f.status()
        ));
    }
    out.verdict("contramodule induction", &contra_t);
    out.verdict("comodule induction", &co_t);
    out.verdict("contramodule forgetful", &contra_f);
    out.verdict("comodule forgetful", &co_f);
    Ok(out)
}

fn frobenius(ws: &Workspace, name: &str, opts: &Options) -> Result<Outcome, InputError> {
    let mut out = Outcome::new("frobenius", name, ws.field);
    let Some(e) = sound_entwining(ws, name, &mut out)? else {
        return Ok(out);
    };
    out.fact("budget", opts.budget);
    if opts.side != SideChoice::Co {
        out.verdict("contramodules", &decide_frobenius(e, Side::Contra, opts.budget));
    }
    if opts.side != SideChoice::Contra {
        out.verdict("comodules", &decide_frobenius(e, Side::Co, opts.budget));
    }
    Ok(out)
}

fn cointegral(ws: &Workspace, name: &str) -> Result<Outcome, InputError> {
    let mut out = Outcome::new("cointegral", name, ws.field);
    let Some(e) = sound_entwining(ws, name, &mut out)? else {
        return Ok(out);
    };
    let verdict = find_cointegral(e);
    if let Some(w) = verdict.witness() {
        out.report(check_cointegral(e, &w.phi).map_err(precondition(name))?);
    }
    out.verdict("cointegral", &verdict);
    Ok(out)
}

fn maschke_probe(ws: &Workspace, name: &str) -> Result<Outcome, InputError> {
    let mut out = Outcome::new("maschke-probe", name, ws.field);
    let Some(e) = sound_entwining(ws, name, &mut out)? else {
        return Ok(out);
    };
    match find_cointegral(e) {
        Verdict::Found { witness, .. } => out.report(semisimplicity_probe(e, &witness).map_err(precondition(name))?),
        _ => {
            out.observations
                .push("no normalized cointegral exists, so the probe is not applicable".into());
            out.fail();
        }
    }
    Ok(out)
}

pub fn dispatch(command: &Command, ws: &Workspace, opts: &Options) -> Result<Outcome, InputError> {
    match command {
        Command::Check { names } => check_all(ws, names, opts.seed.unwrap_or(0)),
        Command::Galois { name } => galois(ws, name),
        Command::Measuring { name } => measuring_command(ws, name),
        Command::Cotensor { .. } | Command::HatTensor { .. } | Command::Cohom { .. } | Command::HomTilde { .. } => {
            construction(ws, command)
        }
        Command::Separability { entwining } => separability(ws, entwining),
        Command::Frobenius { entwining } => frobenius(ws, entwining, opts),
        Command::Cointegral { entwining } => cointegral(ws, entwining),
        Command::MaschkeProbe { entwining } => maschke_probe(ws, entwining),
    }
}
