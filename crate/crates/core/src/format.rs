//! JSON files for algebras, actions, coactions and maps.
//!
//! Coefficients are exact `"num/den"` strings. Canonical files have sorted keys,
//! entries sorted by index, no zero coefficients and reduced fractions, and
//! [`to_canonical_json`] reproduces them byte for byte.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::action::{BicomoduleCoaction, BimoduleAction};
use crate::group::FiniteGroup;
use crate::hopf::{build_dual_group_algebra, build_group_algebra, FiniteHopfAlgebra};
use crate::operator::LinearOperator;
use crate::scalar::{FieldKind, Scalar};
use crate::tensor::SparseTensor;
use crate::Error;

/// Environment variable overriding the fixture directory.
pub const FIXTURES_ENV: &str = "HOPFRB_FIXTURES";

/// Prefix of references resolved against the fixture directory.
pub const FIXTURE_PREFIX: &str = "fixture:";

/// `$HOPFRB_FIXTURES`, or the `fixtures/` directory shipped with the workspace.
pub fn fixture_dir() -> PathBuf {
    match std::env::var_os(FIXTURES_ENV) {
        Some(d) => PathBuf::from(d),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"),
    }
}

fn field_error(field: &str, message: impl std::fmt::Display) -> Error {
    Error::Format(format!("field `{field}`: {message}"))
}

/// Renders any serializable value as pretty JSON with sorted keys and a final newline.
pub fn to_canonical_json<T: Serialize>(v: &T) -> String {
    let value = serde_json::to_value(v).expect("serializable");
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

/// Parses a JSON document, naming `what` in errors.
pub fn parse_json<T: DeserializeOwned>(text: &str, what: &str) -> Result<T, Error> {
    serde_json::from_str(text).map_err(|e| Error::Format(format!("{what}: {e}")))
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))?;
    parse_json(&text, &path.display().to_string())
}

/// `{c, i, j}`: a matrix entry, `i` the row and `j` the column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry2 {
    pub c: String,
    pub i: usize,
    pub j: usize,
}

/// `{c, i, j, k}`: an entry of a three-legged structure tensor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry3 {
    pub c: String,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupTable {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl GroupTable {
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupTable { elements: g.labels().to_vec(), table: g.table().to_vec() }
    }

    pub fn to_group(&self) -> Result<FiniteGroup, Error> {
        FiniteGroup::new(self.elements.clone(), self.table.clone()).map_err(|e| field_error("group", e))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BuildKind {
    GroupAlgebra,
    DualGroupAlgebra,
}

/// A Hopf algebra, either by explicit structure constants or by the group shorthand.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Entry2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub build: Option<BuildKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<BTreeMap<String, String>>,
    pub field: FieldKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<BTreeMap<String, String>>,
}

/// Fails unless coefficients declared over `declared` can be read in `F`.
///
/// Rational coefficients may be reduced into a prime field; nothing else converts.
pub fn check_field<F: Scalar>(declared: FieldKind, field: &str) -> Result<(), Error> {
    if declared == F::field() || declared == FieldKind::Rational {
        Ok(())
    } else {
        Err(field_error(field, format!("declared {declared}, but the computation runs over {}", F::field())))
    }
}

fn coefficient<F: Scalar>(c: &str, field: &str) -> Result<F, Error> {
    F::parse_exact(c).map_err(|e| field_error(field, e))
}

fn in_range(index: usize, dim: usize, field: &str) -> Result<(), Error> {
    if index >= dim {
        return Err(field_error(field, format!("index {index} out of range for dimension {dim}")));
    }
    Ok(())
}

/// Reads three-legged entries into a tensor of the given dims, rejecting repeated indices.
pub fn tensor3<F: Scalar>(entries: &[Entry3], dims: [usize; 3], name: &str) -> Result<SparseTensor<F>, Error> {
    let mut t = SparseTensor::zeros(dims.to_vec());
    let mut seen = std::collections::BTreeSet::new();
    for (n, e) in entries.iter().enumerate() {
        let at = |f: &str| format!("{name}[{n}].{f}");
        in_range(e.i, dims[0], &at("i"))?;
        in_range(e.j, dims[1], &at("j"))?;
        in_range(e.k, dims[2], &at("k"))?;
        if !seen.insert((e.i, e.j, e.k)) {
            return Err(field_error(&format!("{name}[{n}]"), "repeated index triple"));
        }
        t.add_at(vec![e.i, e.j, e.k], coefficient(&e.c, &at("c"))?);
    }
    Ok(t)
}

/// Reads matrix entries into a `rows × cols` operator, rejecting repeated indices.
pub fn matrix<F: Scalar>(entries: &[Entry2], rows: usize, cols: usize, name: &str) -> Result<LinearOperator<F>, Error> {
    let mut t = SparseTensor::zeros(vec![rows, cols]);
    let mut seen = std::collections::BTreeSet::new();
    for (n, e) in entries.iter().enumerate() {
        let at = |f: &str| format!("{name}[{n}].{f}");
        in_range(e.i, rows, &at("i"))?;
        in_range(e.j, cols, &at("j"))?;
        if !seen.insert((e.i, e.j)) {
            return Err(field_error(&format!("{name}[{n}]"), "repeated index pair"));
        }
        t.add_at(vec![e.i, e.j], coefficient(&e.c, &at("c"))?);
    }
    Ok(LinearOperator::from_matrix(t)?)
}

fn label_vector<F: Scalar>(map: &BTreeMap<String, String>, basis: &[String], name: &str) -> Result<Vec<F>, Error> {
    let mut v = vec![F::zero(); basis.len()];
    for (label, c) in map {
        let at = format!("{name}.{label}");
        let i = basis
            .iter()
            .position(|b| b == label)
            .ok_or_else(|| field_error(&at, "not a basis label"))?;
        v[i] = coefficient(c, &at)?;
    }
    Ok(v)
}

/// Canonical entries of a three-legged tensor.
pub fn entries3<F: Scalar>(t: &SparseTensor<F>) -> Vec<Entry3> {
    t.iter()
        .map(|(k, c)| Entry3 { c: c.to_exact_string(), i: k[0], j: k[1], k: k[2] })
        .collect()
}

/// Canonical entries of an operator's matrix.
pub fn entries2<F: Scalar>(op: &LinearOperator<F>) -> Vec<Entry2> {
    op.matrix()
        .iter()
        .map(|(k, c)| Entry2 { c: c.to_exact_string(), i: k[0], j: k[1] })
        .collect()
}

fn label_map<F: Scalar>(v: &[F], basis: &[String]) -> BTreeMap<String, String> {
    v.iter()
        .zip(basis)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| (l.clone(), c.to_exact_string()))
        .collect()
}

fn required<'a, T>(v: &'a Option<T>, field: &str) -> Result<&'a T, Error> {
    v.as_ref().ok_or_else(|| field_error(field, "missing (required unless `build` and `group` are given)"))
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self, Error> {
        parse_json(text, "algebra file")
    }

    pub fn read(path: &Path) -> Result<Self, Error> {
        read_json(path)
    }

    pub fn to_canonical_string(&self) -> String {
        to_canonical_json(self)
    }

    /// The explicit form of `h` over its own field.
    pub fn from_algebra<F: Scalar>(h: &FiniteHopfAlgebra<F>, provenance: Option<Value>) -> Self {
        let basis = h.labels().to_vec();
        AlgebraFile {
            antipode: Some(entries2(h.antipode())),
            counit: Some(label_map(h.counit(), &basis)),
            comult: Some(entries3(h.comult_tensor())),
            build: None,
            field: F::field(),
            group: None,
            mult: Some(entries3(h.mult_tensor())),
            provenance,
            unit: Some(label_map(h.unit(), &basis)),
            basis: Some(basis),
        }
    }

    /// The group shorthand for `k[G]` or `k^G`.
    pub fn shorthand(g: &FiniteGroup, build: BuildKind, field: FieldKind) -> Self {
        AlgebraFile {
            antipode: None,
            basis: None,
            build: Some(build),
            comult: None,
            counit: None,
            field,
            group: Some(GroupTable::from_group(g)),
            mult: None,
            provenance: None,
            unit: None,
        }
    }

    fn is_shorthand(&self) -> Result<bool, Error> {
        let explicit = [
            ("antipode", self.antipode.is_some()),
            ("basis", self.basis.is_some()),
            ("comult", self.comult.is_some()),
            ("counit", self.counit.is_some()),
            ("mult", self.mult.is_some()),
            ("unit", self.unit.is_some()),
        ];
        match (&self.build, &self.group) {
            (None, None) => Ok(false),
            (Some(_), Some(_)) => match explicit.iter().find(|(_, present)| *present) {
                Some((name, _)) => Err(field_error(name, "not allowed together with the `build`/`group` shorthand")),
                None => Ok(true),
            },
            (Some(_), None) => Err(field_error("group", "missing (required by `build`)")),
            (None, Some(_)) => Err(field_error("build", "missing (required by `group`)")),
        }
    }

    /// Builds the structure constants over `F`. The Hopf axioms are not checked here.
    pub fn to_algebra<F: Scalar>(&self) -> Result<FiniteHopfAlgebra<F>, Error> {
        check_field::<F>(self.field, "field")?;
        if self.is_shorthand()? {
            let g = self.group.as_ref().expect("shorthand has a group").to_group()?;
            return Ok(match self.build.expect("shorthand has a build") {
                BuildKind::GroupAlgebra => build_group_algebra(&g),
                BuildKind::DualGroupAlgebra => build_dual_group_algebra(&g),
            });
        }
        let basis = required(&self.basis, "basis")?;
        let n = basis.len();
        let mult = tensor3(required(&self.mult, "mult")?, [n, n, n], "mult")?;
        let comult = tensor3(required(&self.comult, "comult")?, [n, n, n], "comult")?;
        let unit = label_vector(required(&self.unit, "unit")?, basis, "unit")?;
        let counit = label_vector(required(&self.counit, "counit")?, basis, "counit")?;
        let antipode = matrix(required(&self.antipode, "antipode")?, n, n, "antipode")?;
        FiniteHopfAlgebra::from_parts(basis.clone(), mult, unit, comult, counit, antipode).map_err(|e| field_error("basis", e))
    }
}

/// An algebra given by a path (relative to the referencing file, or `fixture:NAME`) or inline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Path(String),
    Inline(Box<AlgebraFile>),
}

/// Where relative references are resolved.
#[derive(Debug, Clone)]
pub struct Resolver {
    pub base: PathBuf,
    pub fixtures: PathBuf,
}

impl Resolver {
    /// Resolves references found in the file at `path`.
    pub fn for_file(path: &Path) -> Self {
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Resolver { base, fixtures: fixture_dir() }
    }

    pub fn path(&self, reference: &str) -> PathBuf {
        match reference.strip_prefix(FIXTURE_PREFIX) {
            Some(name) => self.fixtures.join(name),
            None => self.base.join(reference),
        }
    }

    fn algebra(&self, r: &Option<AlgebraRef>, field: &str) -> Result<AlgebraFile, Error> {
        match r {
            None => Err(field_error(field, "missing")),
            Some(AlgebraRef::Inline(a)) => Ok((**a).clone()),
            Some(AlgebraRef::Path(p)) => AlgebraFile::read(&self.path(p)).map_err(|e| field_error(field, e)),
        }
    }
}

/// Resolves a command-line path, honouring the `fixture:` prefix.
pub fn resolve_cli_path(arg: &str) -> PathBuf {
    match arg.strip_prefix(FIXTURE_PREFIX) {
        Some(name) => fixture_dir().join(name),
        None => PathBuf::from(arg),
    }
}

/// `▷` and `◁`: `left` entries are `(i, j, k) = (h, a, a')`, `right` entries `(a, h, a')`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hopf: Option<AlgebraRef>,
    pub left: Vec<Entry3>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Value>,
    pub right: Vec<Entry3>,
}

/// `ρˡ` and `ρʳ`: `left` entries are `(c, h, c')`, `right` entries `(c, c', h)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoactionFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coalgebra: Option<AlgebraRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hopf: Option<AlgebraRef>,
    pub left: Vec<Entry3>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Value>,
    pub right: Vec<Entry3>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapKind {
    Operator,
    CoOperator,
    Plain,
}

/// A square matrix, `{c, i, j}` with `i` the row and `j` the column.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraRef>,
    pub dim: usize,
    pub kind: MapKind,
    pub matrix: Vec<Entry2>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Value>,
}

impl MapFile {
    pub fn read(path: &Path) -> Result<Self, Error> {
        read_json(path)
    }

    pub fn from_operator<F: Scalar>(op: &LinearOperator<F>, kind: MapKind, provenance: Option<Value>) -> Self {
        assert!(op.is_square(), "map files hold square matrices");
        MapFile { algebra: None, dim: op.dim(), kind, matrix: entries2(op), provenance }
    }

    pub fn to_operator<F: Scalar>(&self) -> Result<LinearOperator<F>, Error> {
        matrix(&self.matrix, self.dim, self.dim, "matrix")
    }
}

/// An action file with both algebras loaded.
#[derive(Debug, Clone)]
pub struct ResolvedAction {
    pub file: ActionFile,
    pub algebra: AlgebraFile,
    pub hopf: AlgebraFile,
}

impl ResolvedAction {
    /// Reads `path`; `algebra`/`hopf` override the references inside the file.
    pub fn read(path: &Path, algebra: Option<AlgebraFile>, hopf: Option<AlgebraFile>) -> Result<Self, Error> {
        let file: ActionFile = read_json(path)?;
        let r = Resolver::for_file(path);
        let algebra = match algebra {
            Some(a) => a,
            None => r.algebra(&file.algebra, "algebra")?,
        };
        let hopf = match hopf {
            Some(h) => h,
            None => r.algebra(&file.hopf, "hopf")?,
        };
        Ok(ResolvedAction { file, algebra, hopf })
    }

    pub fn fields(&self) -> Vec<FieldKind> {
        vec![self.algebra.field, self.hopf.field]
    }

    pub fn build<F: Scalar>(&self) -> Result<BimoduleAction<F>, Error> {
        let a = Arc::new(self.algebra.to_algebra::<F>().map_err(|e| field_error("algebra", e))?);
        let h = Arc::new(self.hopf.to_algebra::<F>().map_err(|e| field_error("hopf", e))?);
        let (na, nh) = (a.dim(), h.dim());
        let left = tensor3(&self.file.left, [nh, na, na], "left")?;
        let right = tensor3(&self.file.right, [na, nh, na], "right")?;
        Ok(BimoduleAction::new(h, a, left, right)?)
    }

    /// The file form of an action, with both algebras inline.
    pub fn file_of<F: Scalar>(act: &BimoduleAction<F>, provenance: Option<Value>) -> ActionFile {
        ActionFile {
            algebra: Some(AlgebraRef::Inline(Box::new(AlgebraFile::from_algebra(act.algebra(), None)))),
            hopf: Some(AlgebraRef::Inline(Box::new(AlgebraFile::from_algebra(act.hopf(), None)))),
            left: entries3(act.left_tensor()),
            provenance,
            right: entries3(act.right_tensor()),
        }
    }
}

/// A coaction file with both algebras loaded.
#[derive(Debug, Clone)]
pub struct ResolvedCoaction {
    pub file: CoactionFile,
    pub coalgebra: AlgebraFile,
    pub hopf: AlgebraFile,
}

impl ResolvedCoaction {
    /// Reads `path`; `coalgebra`/`hopf` override the references inside the file.
    pub fn read(path: &Path, coalgebra: Option<AlgebraFile>, hopf: Option<AlgebraFile>) -> Result<Self, Error> {
        let file: CoactionFile = read_json(path)?;
        let r = Resolver::for_file(path);
        let coalgebra = match coalgebra {
            Some(c) => c,
            None => r.algebra(&file.coalgebra, "coalgebra")?,
        };
        let hopf = match hopf {
            Some(h) => h,
            None => r.algebra(&file.hopf, "hopf")?,
        };
        Ok(ResolvedCoaction { file, coalgebra, hopf })
    }

    pub fn fields(&self) -> Vec<FieldKind> {
        vec![self.coalgebra.field, self.hopf.field]
    }

    pub fn build<F: Scalar>(&self) -> Result<BicomoduleCoaction<F>, Error> {
        let c = Arc::new(self.coalgebra.to_algebra::<F>().map_err(|e| field_error("coalgebra", e))?);
        let h = Arc::new(self.hopf.to_algebra::<F>().map_err(|e| field_error("hopf", e))?);
        let (nc, nh) = (c.dim(), h.dim());
        let left = tensor3(&self.file.left, [nc, nh, nc], "left")?;
        let right = tensor3(&self.file.right, [nc, nc, nh], "right")?;
        Ok(BicomoduleCoaction::new(h, c, left, right)?)
    }

    /// The file form of a coaction, with both algebras inline.
    pub fn file_of<F: Scalar>(co: &BicomoduleCoaction<F>, provenance: Option<Value>) -> CoactionFile {
        CoactionFile {
            coalgebra: Some(AlgebraRef::Inline(Box::new(AlgebraFile::from_algebra(co.coalgebra(), None)))),
            hopf: Some(AlgebraRef::Inline(Box::new(AlgebraFile::from_algebra(co.hopf(), None)))),
            left: entries3(co.left_tensor()),
            provenance,
            right: entries3(co.right_tensor()),
        }
    }
}

/// The common field of several declarations: a prime field wins over the rationals,
/// two different prime fields conflict. `None` when nothing is declared.
pub fn common_field(declared: &[FieldKind]) -> Result<Option<FieldKind>, Error> {
    let mut found: Option<FieldKind> = None;
    for &f in declared {
        found = match (found, f) {
            (None, f) | (Some(FieldKind::Rational), f) => Some(f),
            (Some(g), FieldKind::Rational) => Some(g),
            (Some(g), f) if g == f => Some(g),
            (Some(g), f) => return Err(field_error("field", format!("inputs declare both {g} and {f}"))),
        };
    }
    Ok(found)
}
