//! The JSON workspace format: named structures given by sparse structure constants.
//!
//! Every tensor is a list of `[index…, scalar]` entries with the input legs first and the
//! output legs last; omitted entries are zero and indices are 0-based. Scalars are written
//! as strings (`"3"`, `"-1/2"`); plain JSON integers are accepted on input.

use std::fmt;
use std::path::Path;

use indexmap::IndexMap;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use entwining::algstruct::{Algebra, Bialgebra, Coalgebra, Comodule, LeftModule, RightModule};
use entwining::comodcat::EntwinedModule;
use entwining::contracat::{ContraModule, EntwinedContraModule};
use entwining::entwine::Entwining;
use entwining::exactlin::{Field, Mat, Scalar};
use entwining::measuring_galois::{GaloisData, Measuring};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: line {line}, column {column}: {message}")]
    Json {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{location}: {message}")]
    Invalid { location: String, message: String },
}

fn invalid(location: impl Into<String>, message: impl fmt::Display) -> InputError {
    InputError::Invalid {
        location: location.into(),
        message: message.to_string(),
    }
}

/// A scalar as written in the file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarText(pub String);

impl Serialize for ScalarText {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for ScalarText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::String(s) => Ok(ScalarText(s)),
            serde_json::Value::Number(n) if n.is_i64() => Ok(ScalarText(n.to_string())),
            other => Err(D::Error::custom(format!("expected a scalar string or integer, found {other}"))),
        }
    }
}

/// One structure constant: leg indices followed by a scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub indices: Vec<usize>,
    pub value: ScalarText,
}

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.indices.len() + 1))?;
        for i in &self.indices {
            seq.serialize_element(i)?;
        }
        seq.serialize_element(&self.value)?;
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let mut items = Vec::<serde_json::Value>::deserialize(d)?;
        let last = items
            .pop()
            .ok_or_else(|| D::Error::custom("empty structure-constant entry"))?;
        let value = ScalarText::deserialize(last).map_err(D::Error::custom)?;
        let indices = items
            .into_iter()
            .map(|v| {
                v.as_u64()
                    .map(|i| i as usize)
                    .ok_or_else(|| D::Error::custom(format!("index {v} is not a natural number")))
            })
            .collect::<Result<_, _>>()?;
        Ok(Entry { indices, value })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    pub unit: Vec<ScalarText>,
    #[serde(default)]
    pub mult: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraSpec {
    pub dim: usize,
    pub counit: Vec<ScalarText>,
    #[serde(default)]
    pub comult: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraSpec {
    pub algebra: String,
    pub coalgebra: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntwiningSpec {
    pub algebra: String,
    pub coalgebra: String,
    #[serde(default)]
    pub psi: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleSpec {
    pub coalgebra: String,
    pub dim: usize,
    #[serde(default)]
    pub coaction: Vec<Entry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleSide {
    Left,
    Right,
}

/// An entwined module (`entwining` set) or a plain module over `algebra`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entwining: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<ModuleSide>,
    pub dim: usize,
    #[serde(default)]
    pub action: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Vec<Entry>>,
}

/// An entwined contramodule (`entwining` set) or a plain contramodule over `coalgebra`.
///
/// `pi` entries `[c, m, m2, s]` say that the elementary map `c ↦ m` is sent to `s·m2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContraSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entwining: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coalgebra: Option<String>,
    pub dim: usize,
    #[serde(default)]
    pub pi: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Entry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasuringSpec {
    pub src: String,
    pub dst: String,
    #[serde(default)]
    pub alpha: Vec<Entry>,
    #[serde(default)]
    pub gamma: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaloisSpec {
    pub algebra: String,
    pub coalgebra: String,
    #[serde(default)]
    pub coaction: Vec<Entry>,
}

/// The file as written.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceFile {
    pub field: Field,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub algebras: IndexMap<String, AlgebraSpec>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub coalgebras: IndexMap<String, CoalgebraSpec>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub bialgebras: IndexMap<String, BialgebraSpec>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub entwinings: IndexMap<String, EntwiningSpec>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub comodules: IndexMap<String, ComoduleSpec>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub modules: IndexMap<String, ModuleSpec>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub contramodules: IndexMap<String, ContraSpec>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub measurings: IndexMap<String, MeasuringSpec>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub galois: IndexMap<String, GaloisSpec>,
}

// ---------------------------------------------------------------------------------------
// Resolved workspace

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound<T> {
    /// Names of the structures this object is defined over, in file order.
    pub over: Vec<String>,
    pub value: T,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleObject {
    Entwined(EntwinedModule),
    Right(RightModule),
    Left(LeftModule),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContraObject {
    Entwined(EntwinedContraModule),
    Plain(ContraModule),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Workspace {
    pub field: Field,
    pub algebras: IndexMap<String, Algebra>,
    pub coalgebras: IndexMap<String, Coalgebra>,
    pub bialgebras: IndexMap<String, Bound<Bialgebra>>,
    pub entwinings: IndexMap<String, Bound<Entwining>>,
    pub comodules: IndexMap<String, Bound<Comodule>>,
    pub modules: IndexMap<String, Bound<ModuleObject>>,
    pub contramodules: IndexMap<String, Bound<ContraObject>>,
    pub measurings: IndexMap<String, Bound<Measuring>>,
    pub galois: IndexMap<String, Bound<GaloisData>>,
}

/// How the legs of an entry land in a matrix: `dims` lists the leg sizes in entry order,
/// `place` maps a full index tuple to `(row, column)`.
struct Layout<'a> {
    rows: usize,
    cols: usize,
    dims: Vec<usize>,
    place: Box<dyn Fn(&[usize]) -> (usize, usize) + 'a>,
}

fn flat(indices: &[usize], dims: &[usize]) -> usize {
    indices.iter().zip(dims).fold(0, |acc, (i, d)| acc * d + i)
}

/// Inputs are the first `inputs` legs, outputs the rest, both first-leg-major.
fn standard(dims: Vec<usize>, inputs: usize) -> Layout<'static> {
    let (ins, outs) = (dims[..inputs].to_vec(), dims[inputs..].to_vec());
    Layout {
        rows: outs.iter().product(),
        cols: ins.iter().product(),
        place: Box::new(move |ix: &[usize]| (flat(&ix[inputs..], &outs), flat(&ix[..inputs], &ins))),
        dims,
    }
}

/// Contraaction `(C, M) → M`: entries `[c, m, m2]`, column `m·dim C + c`.
fn contra_layout(c: usize, m: usize) -> Layout<'static> {
    Layout {
        rows: m,
        cols: m * c,
        dims: vec![c, m, m],
        place: Box::new(move |ix: &[usize]| (ix[2], ix[1] * c + ix[0])),
    }
}

fn parse_scalar(field: Field, text: &ScalarText, location: &str) -> Result<Scalar, InputError> {
    field.parse(&text.0).map_err(|e| invalid(location, e))
}

fn fill(field: Field, layout: &Layout, entries: &[Entry], location: &str) -> Result<Mat, InputError> {
    let mut m = Mat::zeros(field, layout.rows, layout.cols);
    for (k, entry) in entries.iter().enumerate() {
        let here = format!("{location}[{k}]");
        if entry.indices.len() != layout.dims.len() {
            return Err(invalid(
                here,
                format!("expected {} indices, found {}", layout.dims.len(), entry.indices.len()),
            ));
        }
        for (leg, (&i, &d)) in entry.indices.iter().zip(&layout.dims).enumerate() {
            if i >= d {
                return Err(invalid(&here, format!("index {i} at position {leg} is out of range for dimension {d}")));
            }
        }
        let value = parse_scalar(field, &entry.value, &here)?;
        let (r, c) = (layout.place)(&entry.indices);
        let sum = m.get(r, c) + &value;
        m.set(r, c, sum);
    }
    Ok(m)
}

fn vector(field: Field, values: &[ScalarText], dim: usize, location: &str) -> Result<Vec<Scalar>, InputError> {
    if values.len() != dim {
        return Err(invalid(location, format!("expected {dim} scalars, found {}", values.len())));
    }
    values
        .iter()
        .enumerate()
        .map(|(k, v)| parse_scalar(field, v, &format!("{location}[{k}]")))
        .collect()
}

fn lookup<'m, T>(table: &'m IndexMap<String, T>, name: &str, kind: &str, location: &str) -> Result<&'m T, InputError> {
    table
        .get(name)
        .ok_or_else(|| invalid(location, format!("unknown {kind} {name:?}")))
}

fn lib_error(location: &str) -> impl Fn(entwining::Error) -> InputError + '_ {
    move |e| invalid(location, e)
}

/// Every index tuple of the layout in lexicographic order, with its nonzero value.
fn entries_of(m: &Mat, layout: &Layout) -> Vec<Entry> {
    let total: usize = layout.dims.iter().product();
    let mut out = Vec::new();
    let mut indices = vec![0; layout.dims.len()];
    for mut k in 0..total {
        for leg in (0..layout.dims.len()).rev() {
            indices[leg] = k % layout.dims[leg];
            k /= layout.dims[leg];
        }
        let (r, c) = (layout.place)(&indices);
        let v = m.get(r, c);
        if !v.is_zero() {
            out.push(Entry {
                indices: indices.clone(),
                value: ScalarText(v.to_string()),
            });
        }
    }
    out
}

fn texts(m: &Mat) -> Vec<ScalarText> {
    m.entries().iter().map(|s| ScalarText(s.to_string())).collect()
}

fn mult_layout(n: usize) -> Layout<'static> {
    standard(vec![n, n, n], 2)
}

fn comult_layout(c: usize) -> Layout<'static> {
    standard(vec![c, c, c], 1)
}

impl WorkspaceFile {
    pub fn from_json(text: &str, path: &str) -> Result<WorkspaceFile, InputError> {
        serde_json::from_str(text).map_err(|e| InputError::Json {
            path: path.to_string(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Builds and validates every structure. With `field_override`, scalars of a rational
    /// file are read in the given field instead.
    pub fn resolve(&self, field_override: Option<Field>) -> Result<Workspace, InputError> {
        let declared = self.field.validate().map_err(|e| invalid("field", e))?;
        let field = match field_override {
            Some(f) if f != declared && declared != Field::Rational => {
                return Err(invalid("field", "only rational workspaces can be read over another field"));
            }
            Some(f) => f.validate().map_err(|e| invalid("--field", e))?,
            None => declared,
        };
        let mut ws = Workspace {
            field,
            algebras: IndexMap::new(),
            coalgebras: IndexMap::new(),
            bialgebras: IndexMap::new(),
            entwinings: IndexMap::new(),
            comodules: IndexMap::new(),
            modules: IndexMap::new(),
            contramodules: IndexMap::new(),
            measurings: IndexMap::new(),
            galois: IndexMap::new(),
        };
        for (name, spec) in &self.algebras {
            let at = format!("algebras.{name}");
            let n = spec.dim;
            let mult = fill(field, &mult_layout(n), &spec.mult, &format!("{at}.mult"))?;
            let unit = Mat::from_vec(field, n, 1, vector(field, &spec.unit, n, &format!("{at}.unit"))?);
            ws.algebras.insert(name.clone(), Algebra::new(mult, unit).map_err(lib_error(&at))?);
        }
        for (name, spec) in &self.coalgebras {
            let at = format!("coalgebras.{name}");
            let c = spec.dim;
            let comult = fill(field, &comult_layout(c), &spec.comult, &format!("{at}.comult"))?;
            let counit = Mat::from_vec(field, 1, c, vector(field, &spec.counit, c, &format!("{at}.counit"))?);
            ws.coalgebras.insert(name.clone(), Coalgebra::new(comult, counit).map_err(lib_error(&at))?);
        }
        for (name, spec) in &self.bialgebras {
            let at = format!("bialgebras.{name}");
            let alg = lookup(&ws.algebras, &spec.algebra, "algebra", &format!("{at}.algebra"))?.clone();
            let coalg = lookup(&ws.coalgebras, &spec.coalgebra, "coalgebra", &format!("{at}.coalgebra"))?.clone();
            let value = Bialgebra::new(alg, coalg).map_err(lib_error(&at))?;
            ws.bialgebras.insert(
                name.clone(),
                Bound {
                    over: vec![spec.algebra.clone(), spec.coalgebra.clone()],
                    value,
                },
            );
        }
        for (name, spec) in &self.entwinings {
            let at = format!("entwinings.{name}");
            let alg = lookup(&ws.algebras, &spec.algebra, "algebra", &format!("{at}.algebra"))?.clone();
            let coalg = lookup(&ws.coalgebras, &spec.coalgebra, "coalgebra", &format!("{at}.coalgebra"))?.clone();
            let psi = fill(field, &psi_layout(alg.dim(), coalg.dim()), &spec.psi, &format!("{at}.psi"))?;
            let value = Entwining::new(alg, coalg, psi).map_err(lib_error(&at))?;
            ws.entwinings.insert(
                name.clone(),
                Bound {
                    over: vec![spec.algebra.clone(), spec.coalgebra.clone()],
                    value,
                },
            );
        }
        for (name, spec) in &self.comodules {
            let at = format!("comodules.{name}");
            let coalg = lookup(&ws.coalgebras, &spec.coalgebra, "coalgebra", &format!("{at}.coalgebra"))?;
            let layout = standard(vec![spec.dim, spec.dim, coalg.dim()], 1);
            let coaction = fill(field, &layout, &spec.coaction, &format!("{at}.coaction"))?;
            let value = Comodule::new(coalg, coaction).map_err(lib_error(&at))?;
            ws.comodules.insert(
                name.clone(),
                Bound {
                    over: vec![spec.coalgebra.clone()],
                    value,
                },
            );
        }
        for (name, spec) in &self.modules {
            let at = format!("modules.{name}");
            let m = spec.dim;
            let (over, value) = match (&spec.entwining, &spec.algebra) {
                (Some(e), None) => {
                    if spec.side.is_some() {
                        return Err(invalid(format!("{at}.side"), "entwined modules are right modules"));
                    }
                    let ent = &lookup(&ws.entwinings, e, "entwining", &format!("{at}.entwining"))?.value;
                    let action = fill(
                        field,
                        &standard(vec![m, ent.alg_dim(), m], 2),
                        &spec.action,
                        &format!("{at}.action"),
                    )?;
                    let coaction = fill(
                        field,
                        &standard(vec![m, m, ent.coalg_dim()], 1),
                        spec.coaction.as_deref().unwrap_or_default(),
                        &format!("{at}.coaction"),
                    )?;
                    let x = EntwinedModule::new(ent, action, coaction).map_err(lib_error(&at))?;
                    (e.clone(), ModuleObject::Entwined(x))
                }
                (None, Some(a)) => {
                    if spec.coaction.is_some() {
                        return Err(invalid(format!("{at}.coaction"), "plain modules carry no coaction"));
                    }
                    let alg = lookup(&ws.algebras, a, "algebra", &format!("{at}.algebra"))?;
                    let value = match spec.side.unwrap_or(ModuleSide::Right) {
                        ModuleSide::Right => {
                            let layout = standard(vec![m, alg.dim(), m], 2);
                            let action = fill(field, &layout, &spec.action, &format!("{at}.action"))?;
                            ModuleObject::Right(RightModule::new(alg, action).map_err(lib_error(&at))?)
                        }
                        ModuleSide::Left => {
                            let layout = standard(vec![alg.dim(), m, m], 2);
                            let action = fill(field, &layout, &spec.action, &format!("{at}.action"))?;
                            ModuleObject::Left(LeftModule::new(alg, action).map_err(lib_error(&at))?)
                        }
                    };
                    (a.clone(), value)
                }
                _ => return Err(invalid(at, "give exactly one of \"entwining\" and \"algebra\"")),
            };
            ws.modules.insert(name.clone(), Bound { over: vec![over], value });
        }
        for (name, spec) in &self.contramodules {
            let at = format!("contramodules.{name}");
            let m = spec.dim;
            let (over, value) = match (&spec.entwining, &spec.coalgebra) {
                (Some(e), None) => {
                    let ent = &lookup(&ws.entwinings, e, "entwining", &format!("{at}.entwining"))?.value;
                    let pi = fill(field, &contra_layout(ent.coalg_dim(), m), &spec.pi, &format!("{at}.pi"))?;
                    let action = fill(
                        field,
                        &standard(vec![ent.alg_dim(), m, m], 2),
                        spec.action.as_deref().unwrap_or_default(),
                        &format!("{at}.action"),
                    )?;
                    let x = EntwinedContraModule::new(ent, pi, action).map_err(lib_error(&at))?;
                    (e.clone(), ContraObject::Entwined(x))
                }
                (None, Some(c)) => {
                    if spec.action.is_some() {
                        return Err(invalid(format!("{at}.action"), "plain contramodules carry no action"));
                    }
                    let coalg = lookup(&ws.coalgebras, c, "coalgebra", &format!("{at}.coalgebra"))?;
                    let pi = fill(field, &contra_layout(coalg.dim(), m), &spec.pi, &format!("{at}.pi"))?;
                    (c.clone(), ContraObject::Plain(ContraModule::new(coalg, pi).map_err(lib_error(&at))?))
                }
                _ => return Err(invalid(at, "give exactly one of \"entwining\" and \"coalgebra\"")),
            };
            ws.contramodules.insert(name.clone(), Bound { over: vec![over], value });
        }
        for (name, spec) in &self.measurings {
            let at = format!("measurings.{name}");
            let src = lookup(&ws.entwinings, &spec.src, "entwining", &format!("{at}.src"))?.value.clone();
            let dst = lookup(&ws.entwinings, &spec.dst, "entwining", &format!("{at}.dst"))?.value.clone();
            let alpha = fill(
                field,
                &standard(vec![src.coalg_dim(), src.alg_dim(), dst.alg_dim()], 2),
                &spec.alpha,
                &format!("{at}.alpha"),
            )?;
            let gamma = fill(
                field,
                &standard(vec![src.coalg_dim(), dst.alg_dim(), dst.coalg_dim()], 1),
                &spec.gamma,
                &format!("{at}.gamma"),
            )?;
            let value = Measuring::new(src, dst, alpha, gamma).map_err(lib_error(&at))?;
            ws.measurings.insert(
                name.clone(),
                Bound {
                    over: vec![spec.src.clone(), spec.dst.clone()],
                    value,
                },
            );
        }
        for (name, spec) in &self.galois {
            let at = format!("galois.{name}");
            let alg = lookup(&ws.algebras, &spec.algebra, "algebra", &format!("{at}.algebra"))?.clone();
            let coalg = lookup(&ws.coalgebras, &spec.coalgebra, "coalgebra", &format!("{at}.coalgebra"))?.clone();
            let layout = standard(vec![alg.dim(), alg.dim(), coalg.dim()], 1);
            let coaction = fill(field, &layout, &spec.coaction, &format!("{at}.coaction"))?;
            let value = GaloisData::new(alg, coalg, coaction).map_err(lib_error(&at))?;
            ws.galois.insert(
                name.clone(),
                Bound {
                    over: vec![spec.algebra.clone(), spec.coalgebra.clone()],
                    value,
                },
            );
        }
        Ok(ws)
    }
}

fn psi_layout(a: usize, c: usize) -> Layout<'static> {
    standard(vec![c, a, a, c], 2)
}

impl Workspace {
    pub fn load(path: &Path, field_override: Option<Field>) -> Result<Workspace, InputError> {
        let shown = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| InputError::Io {
            path: shown.clone(),
            message: e.to_string(),
        })?;
        WorkspaceFile::from_json(&text, &shown)?.resolve(field_override)
    }

    /// The file form, with every nonzero structure constant listed in index order.
    pub fn to_file(&self) -> WorkspaceFile {
        let algebras = self
            .algebras
            .iter()
            .map(|(name, a)| {
                let spec = AlgebraSpec {
                    dim: a.dim(),
                    unit: texts(a.unit()),
                    mult: entries_of(a.mult(), &mult_layout(a.dim())),
                };
                (name.clone(), spec)
            })
            .collect();
        let coalgebras = self
            .coalgebras
            .iter()
            .map(|(name, c)| {
                let spec = CoalgebraSpec {
                    dim: c.dim(),
                    counit: texts(c.counit()),
                    comult: entries_of(c.comult(), &comult_layout(c.dim())),
                };
                (name.clone(), spec)
            })
            .collect();
        let bialgebras = self
            .bialgebras
            .iter()
            .map(|(name, b)| {
                let spec = BialgebraSpec {
                    algebra: b.over[0].clone(),
                    coalgebra: b.over[1].clone(),
                };
                (name.clone(), spec)
            })
            .collect();
        let entwinings = self
            .entwinings
            .iter()
            .map(|(name, e)| {
                let v = &e.value;
                let spec = EntwiningSpec {
                    algebra: e.over[0].clone(),
                    coalgebra: e.over[1].clone(),
                    psi: entries_of(v.psi(), &psi_layout(v.alg_dim(), v.coalg_dim())),
                };
                (name.clone(), spec)
            })
            .collect();
        let comodules = self
            .comodules
            .iter()
            .map(|(name, b)| {
                let x = &b.value;
                let c = self.coalgebras[&b.over[0]].dim();
                let spec = ComoduleSpec {
                    coalgebra: b.over[0].clone(),
                    dim: x.dim,
                    coaction: entries_of(&x.coaction, &standard(vec![x.dim, x.dim, c], 1)),
                };
                (name.clone(), spec)
            })
            .collect();
        let modules = self
            .modules
            .iter()
            .map(|(name, b)| {
                let over = b.over[0].clone();
                let spec = match &b.value {
                    ModuleObject::Entwined(x) => {
                        let e = &self.entwinings[&over].value;
                        ModuleSpec {
                            entwining: Some(over),
                            algebra: None,
                            side: None,
                            dim: x.dim,
                            action: entries_of(&x.action, &standard(vec![x.dim, e.alg_dim(), x.dim], 2)),
                            coaction: Some(entries_of(&x.coaction, &standard(vec![x.dim, x.dim, e.coalg_dim()], 1))),
                        }
                    }
                    ModuleObject::Right(x) => {
                        let a = self.algebras[&over].dim();
                        ModuleSpec {
                            entwining: None,
                            algebra: Some(over),
                            side: None,
                            dim: x.dim,
                            action: entries_of(&x.action, &standard(vec![x.dim, a, x.dim], 2)),
                            coaction: None,
                        }
                    }
                    ModuleObject::Left(x) => {
                        let a = self.algebras[&over].dim();
                        ModuleSpec {
                            entwining: None,
                            algebra: Some(over),
                            side: Some(ModuleSide::Left),
                            dim: x.dim,
                            action: entries_of(&x.action, &standard(vec![a, x.dim, x.dim], 2)),
                            coaction: None,
                        }
                    }
                };
                (name.clone(), spec)
            })
            .collect();
        let contramodules = self
            .contramodules
            .iter()
            .map(|(name, b)| {
                let over = b.over[0].clone();
                let spec = match &b.value {
                    ContraObject::Entwined(x) => {
                        let e = &self.entwinings[&over].value;
                        ContraSpec {
                            entwining: Some(over),
                            coalgebra: None,
                            dim: x.dim,
                            pi: entries_of(&x.pi, &contra_layout(e.coalg_dim(), x.dim)),
                            action: Some(entries_of(&x.action, &standard(vec![e.alg_dim(), x.dim, x.dim], 2))),
                        }
                    }
                    ContraObject::Plain(x) => {
                        let c = self.coalgebras[&over].dim();
                        ContraSpec {
                            entwining: None,
                            coalgebra: Some(over),
                            dim: x.dim,
                            pi: entries_of(&x.pi, &contra_layout(c, x.dim)),
                            action: None,
                        }
                    }
                };
                (name.clone(), spec)
            })
            .collect();
        let measurings = self
            .measurings
            .iter()
            .map(|(name, b)| {
                let m = &b.value;
                let (src, dst) = (&m.src, &m.dst);
                let spec = MeasuringSpec {
                    src: b.over[0].clone(),
                    dst: b.over[1].clone(),
                    alpha: entries_of(
                        &m.alpha,
                        &standard(vec![src.coalg_dim(), src.alg_dim(), dst.alg_dim()], 2),
                    ),
                    gamma: entries_of(
                        &m.gamma,
                        &standard(vec![src.coalg_dim(), dst.alg_dim(), dst.coalg_dim()], 1),
                    ),
                };
                (name.clone(), spec)
            })
            .collect();
        let galois = self
            .galois
            .iter()
            .map(|(name, b)| {
                let g = &b.value;
                let spec = GaloisSpec {
                    algebra: b.over[0].clone(),
                    coalgebra: b.over[1].clone(),
                    coaction: entries_of(
                        &g.coaction,
                        &standard(vec![g.alg.dim(), g.alg.dim(), g.coalg.dim()], 1),
                    ),
                };
                (name.clone(), spec)
            })
            .collect();
        WorkspaceFile {
            field: self.field,
            algebras,
            coalgebras,
            bialgebras,
            entwinings,
            comodules,
            modules,
            contramodules,
            measurings,
            galois,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("workspace serializes")
    }
}
