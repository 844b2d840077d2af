//! JSON forms of matrices, modules, homs, complexes, chain maps, short exact
//! sequences, homotopies and resolutions. Every number is written as a
//! decimal string; numbers or strings are accepted on input.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::chain::{ChainComplex, ChainMap};
use crate::diagram::ShortExactSeqComplexes;
use crate::exactlin::{Matrix, RingSpec};
use crate::fpmod::{FpModule, ModuleHom};
use crate::homotopy::DegreeRaisingMaps;
use crate::resolve::Resolution;

#[derive(Debug, Error)]
pub enum JsonError {
    /// Not JSON, or JSON of the wrong shape.
    #[error("{0}")]
    Syntax(#[from] serde_json::Error),
    #[error("malformed input: {0}")]
    Shape(String),
    /// Well-formed data that violates an algebraic condition.
    #[error("{0}")]
    Invalid(String),
}

impl JsonError {
    /// True for syntax and shape problems, false for algebraic ones.
    pub fn is_parse_error(&self) -> bool {
        !matches!(self, JsonError::Invalid(_))
    }
}

fn shape(msg: impl Into<String>) -> JsonError {
    JsonError::Shape(msg.into())
}

fn invalid(e: impl std::fmt::Display) -> JsonError {
    JsonError::Invalid(e.to_string())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Num {
    Str(String),
    Int(i64),
}

impl Num {
    fn to_big(&self) -> Result<BigInt, JsonError> {
        match self {
            Num::Int(i) => Ok(BigInt::from(*i)),
            Num::Str(s) => s.trim().parse().map_err(|_| shape(format!("not an integer: {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum RingJson {
    Name(String),
    Zmod {
        #[serde(rename = "Zmod")]
        zmod: Num,
    },
}

fn ring_to_json(r: &RingSpec) -> RingJson {
    match r.modulus() {
        None => RingJson::Name("Z".into()),
        Some(m) => RingJson::Zmod { zmod: Num::Str(m.to_string()) },
    }
}

fn ring_from_json(r: &RingJson) -> Result<RingSpec, JsonError> {
    match r {
        RingJson::Name(s) => s.parse().map_err(|e| shape(format!("{e}"))),
        RingJson::Zmod { zmod } => RingSpec::zmod(zmod.to_big()?).map_err(|e| shape(e.to_string())),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ring: Option<RingJson>,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Num>>,
}

fn matrix_to_json(m: &Matrix) -> MatrixJson {
    MatrixJson {
        ring: Some(ring_to_json(m.ring())),
        rows: m.rows(),
        cols: m.cols(),
        entries: m.to_rows().into_iter().map(|r| r.into_iter().map(|x| Num::Str(x.to_string())).collect()).collect(),
    }
}

fn matrix_from_json(j: &MatrixJson, default_ring: Option<&RingSpec>) -> Result<Matrix, JsonError> {
    let ring = match (&j.ring, default_ring) {
        (Some(r), _) => ring_from_json(r)?,
        (None, Some(r)) => r.clone(),
        (None, None) => return Err(shape("matrix without a ring")),
    };
    if let Some(d) = default_ring {
        if d != &ring {
            return Err(shape(format!("matrix over {ring} inside an object over {d}")));
        }
    }
    let rows_ok = j.entries.len() == j.rows || (j.cols == 0 && j.entries.is_empty());
    if !rows_ok || j.entries.iter().any(|r| r.len() != j.cols) {
        return Err(shape(format!("entries do not form a {}x{} matrix", j.rows, j.cols)));
    }
    let entries = j.entries.iter().flatten().map(Num::to_big).collect::<Result<Vec<_>, _>>()?;
    Matrix::from_entries(&ring, j.rows, j.cols, entries).map_err(|e| shape(e.to_string()))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleJson {
    ring: RingJson,
    generators: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    relations: Option<MatrixJson>,
}

fn module_to_json(m: &FpModule) -> ModuleJson {
    ModuleJson {
        ring: ring_to_json(m.ring()),
        generators: m.generators(),
        relations: Some(matrix_to_json(m.relations())),
    }
}

fn module_from_json(j: &ModuleJson) -> Result<FpModule, JsonError> {
    let ring = ring_from_json(&j.ring)?;
    let relations = match &j.relations {
        Some(r) => matrix_from_json(r, Some(&ring))?,
        None => Matrix::zeros(&ring, j.generators, 0),
    };
    if relations.rows() != j.generators {
        return Err(shape(format!(
            "relations have {} rows but the module has {} generators",
            relations.rows(),
            j.generators
        )));
    }
    Ok(FpModule::new(relations))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomJson {
    domain: ModuleJson,
    codomain: ModuleJson,
    map: MatrixJson,
}

fn hom_to_json(h: &ModuleHom) -> HomJson {
    HomJson {
        domain: module_to_json(h.domain()),
        codomain: module_to_json(h.codomain()),
        map: matrix_to_json(h.map()),
    }
}

fn hom_from_json(j: &HomJson) -> Result<ModuleHom, JsonError> {
    let domain = module_from_json(&j.domain)?;
    let codomain = module_from_json(&j.codomain)?;
    let map = matrix_from_json(&j.map, Some(domain.ring()))?;
    if map.shape() != (codomain.generators(), domain.generators()) {
        return Err(shape(format!(
            "map is {}x{}, expected {}x{}",
            map.rows(),
            map.cols(),
            codomain.generators(),
            domain.generators()
        )));
    }
    ModuleHom::new(domain, codomain, map).map_err(invalid)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    ring: RingJson,
    degrees: Vec<i64>,
    modules: BTreeMap<String, ModuleJson>,
    #[serde(default)]
    boundaries: BTreeMap<String, MatrixJson>,
}

fn degree_key(k: &str) -> Result<i64, JsonError> {
    k.trim().parse().map_err(|_| shape(format!("not a degree: {k:?}")))
}

fn complex_to_json(c: &ChainComplex) -> ComplexJson {
    ComplexJson {
        ring: ring_to_json(c.ring()),
        degrees: c.degrees().collect(),
        modules: c.degrees().map(|n| (n.to_string(), module_to_json(c.module(n)))).collect(),
        boundaries: (c.lo() + 1..=c.hi()).map(|n| (n.to_string(), matrix_to_json(c.boundary(n).map()))).collect(),
    }
}

fn complex_from_json(j: &ComplexJson) -> Result<ChainComplex, JsonError> {
    let ring = ring_from_json(&j.ring)?;
    let (lo, hi) = match j.degrees.as_slice() {
        [] => return Err(shape("empty degree list")),
        [d] => (*d, *d),
        [lo, hi] if lo <= hi => (*lo, *hi),
        ds => {
            let contiguous = ds.windows(2).all(|w| w[1] == w[0] + 1);
            if !contiguous {
                return Err(shape("degrees must be [lo, hi] or a contiguous increasing list"));
            }
            (ds[0], ds[ds.len() - 1])
        }
    };
    let mut modules: BTreeMap<i64, FpModule> = BTreeMap::new();
    for (k, m) in &j.modules {
        let n = degree_key(k)?;
        if !(lo..=hi).contains(&n) {
            return Err(shape(format!("module in degree {n} lies outside {lo}..{hi}")));
        }
        modules.insert(n, module_from_json(m)?);
    }
    let modules: Vec<FpModule> = (lo..=hi)
        .map(|n| modules.remove(&n).unwrap_or_else(|| FpModule::zero(&ring)))
        .collect();
    let mut bounds = BTreeMap::new();
    for (k, m) in &j.boundaries {
        let n = degree_key(k)?;
        if !(lo + 1..=hi).contains(&n) {
            return Err(shape(format!("boundary d_{n} lies outside the window")));
        }
        bounds.insert(n, matrix_from_json(m, Some(&ring))?);
    }
    let mut maps = Vec::new();
    for n in lo + 1..=hi {
        let (rows, cols) = (modules[(n - 1 - lo) as usize].generators(), modules[(n - lo) as usize].generators());
        let d = bounds.remove(&n).unwrap_or_else(|| Matrix::zeros(&ring, rows, cols));
        if d.shape() != (rows, cols) {
            return Err(shape(format!("d_{n} is {}x{}, expected {rows}x{cols}", d.rows(), d.cols())));
        }
        maps.push(d);
    }
    ChainComplex::new(&ring, lo, modules, maps).map_err(invalid)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LevelsJson {
    levels: BTreeMap<String, MatrixJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ChainMapJson {
    source: ComplexJson,
    target: ComplexJson,
    levels: BTreeMap<String, MatrixJson>,
}

fn levels_to_json(u: &ChainMap) -> BTreeMap<String, MatrixJson> {
    u.levels().iter().map(|(n, h)| (n.to_string(), matrix_to_json(h.map()))).collect()
}

fn chain_map_from_parts(
    source: &ChainComplex,
    target: &ChainComplex,
    levels: &BTreeMap<String, MatrixJson>,
) -> Result<ChainMap, JsonError> {
    let mut mats = BTreeMap::new();
    for (k, m) in levels {
        let n = degree_key(k)?;
        let m = matrix_from_json(m, Some(source.ring()))?;
        let expected = (target.module(n).generators(), source.module(n).generators());
        if m.shape() != expected {
            return Err(shape(format!("level {n} is {}x{}, expected {}x{}", m.rows(), m.cols(), expected.0, expected.1)));
        }
        mats.insert(n, m);
    }
    ChainMap::new(source, target, mats).map_err(invalid)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SesJson {
    a: ComplexJson,
    b: ComplexJson,
    c: ComplexJson,
    f: LevelsJson,
    g: LevelsJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RaisingJson {
    levels: BTreeMap<String, HomJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ResolutionJson {
    target: ModuleJson,
    depth: usize,
    complete: bool,
    final_map_bijective: bool,
    free_ranks: Vec<usize>,
    augmentation: MatrixJson,
    maps: Vec<MatrixJson>,
}

/// Types with a JSON form.
pub trait JsonForm: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, JsonError>;

    fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("values serialize")
    }

    fn from_json_str(s: &str) -> Result<Self, JsonError> {
        Self::from_json(&serde_json::from_str(s)?)
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("values serialize")
}

fn from_value<T: for<'de> Deserialize<'de>>(v: &Value) -> Result<T, JsonError> {
    Ok(T::deserialize(v)?)
}

impl JsonForm for Matrix {
    fn to_json(&self) -> Value {
        to_value(&matrix_to_json(self))
    }

    fn from_json(v: &Value) -> Result<Self, JsonError> {
        matrix_from_json(&from_value(v)?, None)
    }
}

impl JsonForm for FpModule {
    fn to_json(&self) -> Value {
        to_value(&module_to_json(self))
    }

    fn from_json(v: &Value) -> Result<Self, JsonError> {
        module_from_json(&from_value(v)?)
    }
}

impl JsonForm for ModuleHom {
    fn to_json(&self) -> Value {
        to_value(&hom_to_json(self))
    }

    fn from_json(v: &Value) -> Result<Self, JsonError> {
        hom_from_json(&from_value(v)?)
    }
}

impl JsonForm for ChainComplex {
    fn to_json(&self) -> Value {
        to_value(&complex_to_json(self))
    }

    fn from_json(v: &Value) -> Result<Self, JsonError> {
        complex_from_json(&from_value(v)?)
    }
}

impl JsonForm for ChainMap {
    fn to_json(&self) -> Value {
        to_value(&ChainMapJson {
            source: complex_to_json(self.source()),
            target: complex_to_json(self.target()),
            levels: levels_to_json(self),
        })
    }

    fn from_json(v: &Value) -> Result<Self, JsonError> {
        let j: ChainMapJson = from_value(v)?;
        let source = complex_from_json(&j.source)?;
        let target = complex_from_json(&j.target)?;
        if source.ring() != target.ring() {
            return Err(shape("source and target live over different rings"));
        }
        chain_map_from_parts(&source, &target, &j.levels)
    }
}

impl JsonForm for ShortExactSeqComplexes {
    fn to_json(&self) -> Value {
        to_value(&SesJson {
            a: complex_to_json(&self.a),
            b: complex_to_json(&self.b),
            c: complex_to_json(&self.c),
            f: LevelsJson { levels: levels_to_json(&self.f) },
            g: LevelsJson { levels: levels_to_json(&self.g) },
        })
    }

    fn from_json(v: &Value) -> Result<Self, JsonError> {
        let j: SesJson = from_value(v)?;
        let a = complex_from_json(&j.a)?;
        let b = complex_from_json(&j.b)?;
        let c = complex_from_json(&j.c)?;
        if a.ring() != b.ring() || b.ring() != c.ring() {
            return Err(shape("complexes live over different rings"));
        }
        let f = chain_map_from_parts(&a, &b, &j.f.levels)?;
        let g = chain_map_from_parts(&b, &c, &j.g.levels)?;
        ShortExactSeqComplexes::new(f, g).map_err(invalid)
    }
}

impl JsonForm for Resolution {
    fn to_json(&self) -> Value {
        to_value(&ResolutionJson {
            target: module_to_json(&self.target),
            depth: self.depth,
            complete: self.complete,
            final_map_bijective: self.final_map_bijective,
            free_ranks: self.free_ranks.clone(),
            augmentation: matrix_to_json(self.augmentation.map()),
            maps: self.maps.iter().map(|m| matrix_to_json(m.map())).collect(),
        })
    }

    fn from_json(v: &Value) -> Result<Self, JsonError> {
        let j: ResolutionJson = from_value(v)?;
        let target = module_from_json(&j.target)?;
        let ring = target.ring().clone();
        if j.free_ranks.len() != j.maps.len() + 1 {
            return Err(shape("free_ranks must have one entry more than maps"));
        }
        let p = |i: usize| FpModule::free(&ring, j.free_ranks[i]);
        let aug = matrix_from_json(&j.augmentation, Some(&ring))?;
        if aug.shape() != (target.generators(), j.free_ranks[0]) {
            return Err(shape("augmentation has the wrong shape"));
        }
        let augmentation = ModuleHom::new(p(0), target, aug).map_err(invalid)?;
        let mut maps = Vec::new();
        for (i, m) in j.maps.iter().enumerate() {
            let m = matrix_from_json(m, Some(&ring))?;
            if m.shape() != (j.free_ranks[i], j.free_ranks[i + 1]) {
                return Err(shape(format!("map {} has the wrong shape", i + 1)));
            }
            maps.push(ModuleHom::new(p(i + 1), p(i), m).map_err(invalid)?);
        }
        let res = Resolution::from_parts(augmentation, maps).map_err(invalid)?;
        if res.depth != j.depth || res.complete != j.complete || res.final_map_bijective != j.final_map_bijective {
            return Err(JsonError::Invalid("recorded flags disagree with the maps".into()));
        }
        Ok(res)
    }
}

/// `{"levels": {degree: Hom}}`.
pub fn degree_raising_to_json(s: &DegreeRaisingMaps) -> Value {
    to_value(&RaisingJson {
        levels: s.levels().iter().map(|(n, h)| (n.to_string(), hom_to_json(h))).collect(),
    })
}

/// Reads `{"levels": {degree: Hom}}` for maps between the given complexes.
pub fn degree_raising_from_json(
    v: &Value,
    source: &ChainComplex,
    target: &ChainComplex,
) -> Result<DegreeRaisingMaps, JsonError> {
    let j: RaisingJson = from_value(v)?;
    let mut levels = BTreeMap::new();
    for (k, h) in &j.levels {
        let n = degree_key(k)?;
        let h = hom_from_json(h)?;
        if h.domain() != source.module(n) || h.codomain() != target.module(n + 1) {
            return Err(shape(format!("level {n} does not go from C_{n} to D_{}", n + 1)));
        }
        levels.insert(n, h.map().clone());
    }
    DegreeRaisingMaps::new(source, target, levels).map_err(invalid)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RingSpec {
        RingSpec::Integers
    }

    #[test]
    fn matrix_round_trip_and_strings() {
        let m = Matrix::from_rows(&z(), &[vec![1, -2], vec![3, 4]]);
        let v = m.to_json();
        assert_eq!(v["entries"][0][1], Value::String("-2".into()));
        assert_eq!(Matrix::from_json(&v).unwrap(), m);
        let r4 = RingSpec::zmod(4).unwrap();
        let m4 = Matrix::from_rows(&r4, &[vec![3]]);
        assert_eq!(m4.to_json()["ring"]["Zmod"], Value::String("4".into()));
        let parsed = Matrix::from_json_str(r#"{"ring": {"Zmod": 4}, "rows": 1, "cols": 1, "entries": [[7]]}"#).unwrap();
        assert_eq!(parsed, m4);
        let empty = Matrix::zeros(&z(), 0, 3);
        assert_eq!(Matrix::from_json(&empty.to_json()).unwrap(), empty);
        let huge = "123456789012345678901234567890";
        let big = Matrix::from_json_str(&format!(r#"{{"ring": "Z", "rows": 1, "cols": 1, "entries": [["{huge}"]]}}"#)).unwrap();
        assert_eq!(big.get(0, 0).to_string(), huge);
    }

    #[test]
    fn malformed_inputs() {
        assert!(Matrix::from_json_str("{").unwrap_err().is_parse_error());
        let bad = r#"{"ring": "Z", "rows": 2, "cols": 1, "entries": [[1]]}"#;
        assert!(matches!(Matrix::from_json_str(bad), Err(JsonError::Shape(_))));
        let ring = r#"{"ring": "Q", "rows": 0, "cols": 0, "entries": []}"#;
        assert!(Matrix::from_json_str(ring).unwrap_err().is_parse_error());
    }

    #[test]
    fn modules_and_homs() {
        let m = FpModule::new(Matrix::from_rows(&z(), &[vec![2], vec![0]]));
        assert_eq!(FpModule::from_json(&m.to_json()).unwrap(), m);
        let free = FpModule::from_json_str(r#"{"ring": "Z", "generators": 2}"#).unwrap();
        assert_eq!(free, FpModule::free(&z(), 2));
        let h = ModuleHom::new(FpModule::free(&z(), 1), m.clone(), Matrix::column_vector(&z(), &[1, 1])).unwrap();
        assert_eq!(ModuleHom::from_json(&h.to_json()).unwrap(), h);
        // Z/2 ⊕ Z -> Z sending the torsion generator to 1
        let ill = r#"{"domain": {"ring": "Z", "generators": 2, "relations": {"rows": 2, "cols": 1, "entries": [[2], [0]]}},
            "codomain": {"ring": "Z", "generators": 1}, "map": {"rows": 1, "cols": 2, "entries": [[1, 0]]}}"#;
        let err = ModuleHom::from_json_str(ill).unwrap_err();
        assert!(!err.is_parse_error());
    }

    #[test]
    fn complexes() {
        let text = r#"{"ring": "Z", "degrees": [0, 2],
            "modules": {"0": {"ring": "Z", "generators": 1}, "1": {"ring": "Z", "generators": 1}, "2": {"ring": "Z", "generators": 1}},
            "boundaries": {"1": {"rows": 1, "cols": 1, "entries": [["2"]]}, "2": {"rows": 1, "cols": 1, "entries": [["3"]]}}}"#;
        let err = ChainComplex::from_json_str(text).unwrap_err();
        assert_eq!(err.to_string(), "not a complex: d∘d ≠ 0 at degree 2");
        assert!(!err.is_parse_error());
        let ok = text.replace(r#"[["3"]]"#, r#"[["0"]]"#);
        let c = ChainComplex::from_json_str(&ok).unwrap();
        let v = c.to_json();
        assert_eq!(v["degrees"], serde_json::json!([0, 1, 2]));
        assert_eq!(ChainComplex::from_json(&v).unwrap(), c);
    }

    #[test]
    fn maps_and_sequences() {
        let c = ChainComplex::new(&z(), 0, vec![FpModule::free(&z(), 1); 2], vec![Matrix::scalar(&z(), 2)]).unwrap();
        let id = ChainMap::identity(&c);
        let back = ChainMap::from_json(&id.to_json()).unwrap();
        assert!(back.equals(&id));
        let s = DegreeRaisingMaps::new(&c, &c, [(0, Matrix::scalar(&z(), 1))].into()).unwrap();
        let parsed = degree_raising_from_json(&degree_raising_to_json(&s), &c, &c).unwrap();
        assert_eq!(parsed.levels(), s.levels());
    }

    #[test]
    fn resolutions() {
        let r4 = RingSpec::zmod(4).unwrap();
        let res = crate::resolve::free_resolution(&FpModule::cyclic(&r4, 2), 3);
        let back = Resolution::from_json(&res.to_json()).unwrap();
        assert_eq!(back.maps, res.maps);
        assert_eq!(back.free_ranks, res.free_ranks);
    }
}
