//! File formats, the centralizer-table cache, and report rendering.
//!
//! Every file carries `"format": 1`. Weights are written with their
//! canonical labels `g{class}r{irrep}`; inputs may also use aliases when an
//! alias map is supplied.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::arith::{LaurentInt, RootSum};
use crate::bgg::{BggReport, SimpleData, UngradedSimples};
use crate::error::{Error, Result};
use crate::fusion::{DoubleGroup, Weight};
use crate::graded::{GradedChar, KElement};
use crate::group::{close_group, table_from_root_sums, FiniteGroup, Perm};
use crate::profile::{NicholsProfile, SimpleTable, VermaComposition};

pub const FORMAT_VERSION: u32 = 1;

/// Environment variable that overrides the cache directory.
pub const CACHE_ENV: &str = "BGGKIT_CACHE_DIR";

fn read_bytes(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path, bytes: &[u8]) -> Result<T> {
    serde_json::from_slice(bytes).map_err(|source| Error::Json { path: path.display().to_string(), source })
}

fn check_format(path: &Path, format: Option<u32>) -> Result<()> {
    match format {
        None | Some(FORMAT_VERSION) => Ok(()),
        Some(v) => Err(Error::validation(
            "format-version",
            format!("{} declares format {} but only {} is supported", path.display(), v, FORMAT_VERSION),
        )),
    }
}

/// Pretty JSON with a trailing newline; byte-identical for equal values.
pub fn to_pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir).map_err(|source| Error::Io { path: dir.display().to_string(), source })?;
        }
    }
    fs::write(path, contents).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

// ---------------------------------------------------------------- groups

#[derive(Serialize, Deserialize)]
struct GroupFile {
    #[serde(default)]
    format: Option<u32>,
    degree: usize,
    generators: Vec<Vec<u32>>,
}

/// A group file as loaded, with the hash of its bytes.
pub struct LoadedGroup {
    pub group: FiniteGroup,
    pub content_hash: String,
}

pub fn load_group(path: &Path, cap: usize) -> Result<LoadedGroup> {
    let bytes = read_bytes(path)?;
    let file: GroupFile = parse(path, &bytes)?;
    check_format(path, file.format)?;
    let gens = file.generators.into_iter().map(Perm::new).collect::<Result<Vec<_>>>()?;
    let group = close_group(file.degree, &gens, cap)?;
    Ok(LoadedGroup { group, content_hash: hex::encode(Sha256::digest(&bytes)) })
}

pub fn group_to_json(group: &FiniteGroup) -> Value {
    json!({
        "format": FORMAT_VERSION,
        "degree": group.degree(),
        "generators": group.generators().iter().map(|p| p.images().to_vec()).collect::<Vec<_>>(),
    })
}

/// Default cache location: `$BGGKIT_CACHE_DIR`, else `$XDG_CACHE_HOME/bggkit`, else `~/.cache/bggkit`.
pub fn default_cache_dir() -> Option<PathBuf> {
    if let Some(d) = std::env::var_os(CACHE_ENV) {
        return Some(PathBuf::from(d));
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(d).join("bggkit"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("bggkit"))
}

#[derive(Serialize, Deserialize)]
struct CachedTables {
    format: u32,
    centralizers: Vec<CachedTable>,
}

#[derive(Serialize, Deserialize)]
struct CachedTable {
    generators: Vec<Vec<u32>>,
    /// Per irrep, per class: eigenvalue multiplicities of order `exponent`.
    rows: Vec<Vec<Vec<i64>>>,
}

fn cached_tables(group: &FiniteGroup, file: CachedTables) -> Result<Vec<crate::group::OrdinaryCharTable>> {
    file.centralizers
        .into_iter()
        .map(|c| {
            let gens = c.generators.into_iter().map(Perm::new).collect::<Result<Vec<_>>>()?;
            let cent = close_group(group.degree(), &gens, group.order())?;
            let e = cent.exponent();
            let rows = c
                .rows
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|m| {
                            if m.len() != e as usize {
                                return Err(Error::CharacterTable("cached value has the wrong order".into()));
                            }
                            Ok(RootSum::from_multiplicities(e, m))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            table_from_root_sums(&cent, rows)
        })
        .collect()
}

/// Builds `D(G)`, reusing centralizer tables cached under `cache_dir`.
///
/// A missing, unreadable or inconsistent cache entry is recomputed and rewritten.
pub fn load_double(path: &Path, cap: usize, cache_dir: Option<&Path>) -> Result<Arc<DoubleGroup>> {
    let LoadedGroup { group, content_hash } = load_group(path, cap)?;
    let cache_file = cache_dir.map(|d| d.join(format!("{}.json", content_hash)));
    if let Some(cf) = &cache_file {
        if let Ok(bytes) = fs::read(cf) {
            if let Ok(file) = serde_json::from_slice::<CachedTables>(&bytes) {
                if file.format == FORMAT_VERSION {
                    if let Ok(tables) = cached_tables(&group, file) {
                        if let Ok(dg) = DoubleGroup::with_tables(group.clone(), tables) {
                            return Ok(Arc::new(dg));
                        }
                    }
                }
            }
        }
    }
    let tables = DoubleGroup::centralizer_tables(&group)?;
    if let Some(cf) = &cache_file {
        let file = CachedTables {
            format: FORMAT_VERSION,
            centralizers: tables
                .iter()
                .map(|t| CachedTable {
                    generators: t.group().generators().iter().map(|p| p.images().to_vec()).collect(),
                    rows: (0..t.num_irreps())
                        .map(|i| (0..t.classes().len()).map(|c| t.root_sum(i, c).multiplicities().to_vec()).collect())
                        .collect(),
                })
                .collect(),
        };
        // a cache that cannot be written is not an error
        let _ = write_file(cf, &serde_json::to_string(&file).expect("cache serializes"));
    }
    Ok(Arc::new(DoubleGroup::with_tables(group, tables)?))
}

// ---------------------------------------------------------------- aliases

/// Optional human-readable names for weights, e.g. `g1r1 → "(sigma,-)"`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Aliases {
    names: BTreeMap<Weight, String>,
    reverse: HashMap<String, Weight>,
}

#[derive(Serialize, Deserialize)]
struct AliasFile {
    #[serde(default)]
    format: Option<u32>,
    aliases: BTreeMap<String, String>,
}

impl Aliases {
    pub fn new(names: BTreeMap<Weight, String>) -> Result<Self> {
        let mut reverse = HashMap::new();
        for (&w, a) in &names {
            if a.parse::<Weight>().map(|x| x != w).unwrap_or(false) {
                return Err(Error::validation("alias-unique", format!("alias {:?} is another weight's label", a)));
            }
            if reverse.insert(a.clone(), w).is_some() {
                return Err(Error::validation("alias-unique", format!("alias {:?} is used twice", a)));
            }
        }
        Ok(Aliases { names, reverse })
    }

    pub fn get(&self, w: Weight) -> Option<&str> {
        self.names.get(&w).map(String::as_str)
    }

    /// The alias or the canonical label.
    pub fn name(&self, w: Weight) -> String {
        self.get(w).map_or_else(|| w.label(), str::to_string)
    }

    /// `X(name)`, without doubling parentheses when the alias already has them.
    pub fn module(&self, prefix: &str, w: Weight) -> String {
        let n = self.name(w);
        if n.starts_with('(') {
            format!("{}{}", prefix, n)
        } else {
            format!("{}({})", prefix, n)
        }
    }

    /// Canonical label or alias → weight.
    pub fn resolve(&self, dg: &DoubleGroup, label: &str) -> Result<Weight> {
        if let Some(&w) = self.reverse.get(label) {
            return Ok(w);
        }
        dg.parse_weight(label)
    }

    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self.names.iter().map(|(w, a)| (w.label(), Value::from(a.clone()))).collect();
        json!({ "format": FORMAT_VERSION, "aliases": map })
    }
}

pub fn load_aliases(path: &Path, dg: &DoubleGroup) -> Result<Aliases> {
    let bytes = read_bytes(path)?;
    let file: AliasFile = parse(path, &bytes)?;
    check_format(path, file.format)?;
    let mut names = BTreeMap::new();
    for (label, alias) in file.aliases {
        names.insert(dg.parse_weight(&label)?, alias);
    }
    Aliases::new(names)
}

// ---------------------------------------------------------------- characters

#[derive(Clone, Serialize, Deserialize)]
struct WeightMult {
    w: String,
    m: i64,
}

#[derive(Clone, Serialize, Deserialize)]
struct Component {
    deg: i64,
    weights: Vec<WeightMult>,
}

#[derive(Clone, Serialize, Deserialize)]
struct GradedCharFile {
    char: Vec<Component>,
}

fn kelement_from(dg: &DoubleGroup, aliases: &Aliases, ws: &[WeightMult]) -> Result<KElement> {
    let mut k = KElement::zero();
    for wm in ws {
        k.add_term(aliases.resolve(dg, &wm.w)?, wm.m);
    }
    Ok(k)
}

fn kelement_json(k: &KElement) -> Vec<WeightMult> {
    k.terms().map(|(w, m)| WeightMult { w: w.label(), m }).collect()
}

fn graded_from(dg: &DoubleGroup, aliases: &Aliases, file: &GradedCharFile) -> Result<GradedChar> {
    let mut g = GradedChar::zero();
    for c in &file.char {
        g.add_component(c.deg, &kelement_from(dg, aliases, &c.weights)?);
    }
    Ok(g)
}

fn graded_file(g: &GradedChar) -> GradedCharFile {
    GradedCharFile { char: g.components().map(|(deg, k)| Component { deg, weights: kelement_json(k) }).collect() }
}

/// `{"char": [{"deg": d, "weights": [{"w": label, "m": int}]}]}`, degrees descending.
pub fn graded_char_to_json(g: &GradedChar) -> Value {
    let mut f = graded_file(g);
    f.char.reverse();
    serde_json::to_value(f).expect("character serializes")
}

pub fn graded_char_from_json(dg: &DoubleGroup, aliases: &Aliases, v: &Value) -> Result<GradedChar> {
    let file: GradedCharFile = serde_json::from_value(v.clone())
        .map_err(|source| Error::Json { path: "<graded character>".into(), source })?;
    graded_from(dg, aliases, &file)
}

// ---------------------------------------------------------------- profiles

#[derive(Serialize, Deserialize)]
struct ProfileFile {
    #[serde(default)]
    format: Option<u32>,
    group: String,
    components: Vec<Component>,
}

/// Where a profile's group file lives, relative paths resolved against the profile file.
pub fn profile_group_path(profile_path: &Path) -> Result<PathBuf> {
    let bytes = read_bytes(profile_path)?;
    let file: ProfileFile = parse(profile_path, &bytes)?;
    let p = PathBuf::from(&file.group);
    Ok(if p.is_absolute() { p } else { profile_path.parent().unwrap_or(Path::new(".")).join(p) })
}

pub fn load_profile(path: &Path, dg: Arc<DoubleGroup>, aliases: &Aliases) -> Result<NicholsProfile> {
    let bytes = read_bytes(path)?;
    let file: ProfileFile = parse(path, &bytes)?;
    check_format(path, file.format)?;
    let mut by_deg: BTreeMap<i64, KElement> = BTreeMap::new();
    for c in &file.components {
        if by_deg.insert(c.deg, kelement_from(&dg, aliases, &c.weights)?).is_some() {
            return Err(Error::validation("component-degrees", format!("degree {} listed twice", c.deg)));
        }
    }
    let n = by_deg.len() as i64;
    if by_deg.keys().copied().ne(0..n) {
        return Err(Error::validation(
            "component-degrees",
            format!("component degrees must be exactly 0..{}; got {:?}", n - 1, by_deg.keys().collect::<Vec<_>>()),
        ));
    }
    NicholsProfile::new(dg, by_deg.into_values().collect())
}

pub fn profile_to_json(profile: &NicholsProfile, group_ref: &str) -> Value {
    let comps: Vec<Component> = profile
        .components()
        .iter()
        .enumerate()
        .map(|(j, k)| Component { deg: j as i64, weights: kelement_json(k) })
        .collect();
    json!({ "format": FORMAT_VERSION, "group": group_ref, "components": comps })
}

// ---------------------------------------------------------------- simples

#[derive(Serialize, Deserialize)]
struct SimpleEntry {
    w: String,
    char: GradedCharFile,
}

#[derive(Serialize, Deserialize)]
struct CompositionRow {
    w: String,
    row: Vec<WeightMult>,
}

#[derive(Serialize, Deserialize)]
struct SimplesFile {
    #[serde(default)]
    format: Option<u32>,
    #[serde(default)]
    simples: Option<Vec<SimpleEntry>>,
    #[serde(default)]
    verma_composition: Option<Vec<CompositionRow>>,
}

/// Loads either graded simple characters or ungraded `[M:L]` rows.
pub fn load_simples(path: &Path, profile: &NicholsProfile, aliases: &Aliases) -> Result<SimpleData> {
    let dg = profile.double_group();
    let bytes = read_bytes(path)?;
    let file: SimplesFile = parse(path, &bytes)?;
    check_format(path, file.format)?;
    match (file.simples, file.verma_composition) {
        (Some(entries), None) => {
            let mut map = BTreeMap::new();
            for e in &entries {
                let w = aliases.resolve(dg, &e.w)?;
                if map.insert(w, graded_from(dg, aliases, &e.char)?).is_some() {
                    return Err(Error::validation("table-covers-weights", format!("{} listed twice", w)));
                }
            }
            Ok(SimpleData::Graded(SimpleTable::new(dg, map)?))
        }
        (None, Some(rows)) => {
            let mut map = BTreeMap::new();
            for r in &rows {
                let w = aliases.resolve(dg, &r.w)?;
                if map.insert(w, kelement_from(dg, aliases, &r.row)?).is_some() {
                    return Err(Error::validation("table-covers-weights", format!("{} listed twice", w)));
                }
            }
            let comp = VermaComposition::new(dg, map)?;
            Ok(SimpleData::Ungraded(UngradedSimples::new(profile, comp)?))
        }
        _ => Err(Error::validation(
            "simples-kind",
            format!("{} must contain exactly one of \"simples\" or \"verma_composition\"", path.display()),
        )),
    }
}

pub fn simple_table_to_json(table: &SimpleTable) -> Value {
    let entries: Vec<SimpleEntry> = table
        .entries()
        .iter()
        .map(|(w, g)| {
            let mut f = graded_file(g);
            f.char.reverse();
            SimpleEntry { w: w.label(), char: f }
        })
        .collect();
    json!({ "format": FORMAT_VERSION, "simples": entries })
}

pub fn composition_to_json(comp: &VermaComposition) -> Value {
    let rows: Vec<CompositionRow> =
        comp.rows().iter().map(|(w, k)| CompositionRow { w: w.label(), row: kelement_json(k) }).collect();
    json!({ "format": FORMAT_VERSION, "verma_composition": rows })
}

// ---------------------------------------------------------------- reports

fn matrix_json(ws: &[Weight], m: &[Vec<LaurentInt>]) -> Value {
    let mut outer = Map::new();
    for (i, row) in m.iter().enumerate() {
        let mut inner = Map::new();
        for (j, p) in row.iter().enumerate() {
            if !p.is_zero() {
                inner.insert(ws[j].label(), serde_json::to_value(p).expect("Laurent serializes"));
            }
        }
        outer.insert(ws[i].label(), Value::Object(inner));
    }
    Value::Object(outer)
}

fn matrix_from_json(dg: &DoubleGroup, ws: &[Weight], v: &Value) -> Result<Vec<Vec<LaurentInt>>> {
    let n = ws.len();
    let mut m = vec![vec![LaurentInt::zero(); n]; n];
    let obj: BTreeMap<String, BTreeMap<String, LaurentInt>> =
        serde_json::from_value(v.clone()).map_err(|source| Error::Json { path: "<report matrix>".into(), source })?;
    for (a, row) in obj {
        let i = dg.index(dg.parse_weight(&a)?);
        for (b, p) in row {
            m[i][dg.index(dg.parse_weight(&b)?)] = p;
        }
    }
    Ok(m)
}

pub fn report_to_json(dg: &DoubleGroup, profile: &NicholsProfile, report: &BggReport, aliases: &Aliases) -> Value {
    let ws = &report.weights;
    let weights: Vec<Value> = ws
        .iter()
        .enumerate()
        .map(|(i, &w)| {
            let mut o = Map::new();
            o.insert("w".into(), w.label().into());
            if let Some(a) = aliases.get(w) {
                o.insert("alias".into(), a.into());
            }
            o.insert("dim".into(), dg.dimension(w).into());
            o.insert("dual".into(), dg.dual_weight(w).label().into());
            o.insert("simple_projective".into(), report.simple_projective[i].into());
            o.insert("dim_projective".into(), report.projective_chars[i].dimension(dg).into());
            Value::Object(o)
        })
        .collect();
    let mut chars = Map::new();
    for (i, &w) in ws.iter().enumerate() {
        chars.insert(w.label(), graded_char_to_json(&report.projective_chars[i]));
    }
    json!({
        "format": FORMAT_VERSION,
        "graded": report.graded,
        "n_top": profile.n_top(),
        "lambda_V": profile.lambda_v().label(),
        "dim_nichols": profile.dimension(),
        "weights": weights,
        "verma_simple": matrix_json(ws, &report.verma_simple),
        "projective_verma": matrix_json(ws, &report.projective_verma),
        "projective_coverma": matrix_json(ws, &report.projective_coverma),
        "cartan": matrix_json(ws, &report.cartan),
        "projective_chars": Value::Object(chars),
    })
}

pub fn report_from_json(dg: &DoubleGroup, v: &Value) -> Result<BggReport> {
    let bad = |what: &str| Error::validation("report-shape", what.to_string());
    if v.get("format").and_then(Value::as_u64) != Some(FORMAT_VERSION as u64) {
        return Err(bad("missing or unsupported format"));
    }
    let ws = dg.weights().to_vec();
    let graded = v.get("graded").and_then(Value::as_bool).ok_or_else(|| bad("missing \"graded\""))?;
    let mut simple_projective = vec![false; ws.len()];
    for entry in v.get("weights").and_then(Value::as_array).ok_or_else(|| bad("missing \"weights\""))? {
        let w = dg.parse_weight(entry.get("w").and_then(Value::as_str).ok_or_else(|| bad("weight without label"))?)?;
        simple_projective[dg.index(w)] = entry.get("simple_projective").and_then(Value::as_bool).unwrap_or(false);
    }
    let field = |k: &str| v.get(k).ok_or_else(|| bad(&format!("missing \"{}\"", k)));
    let none = Aliases::default();
    let chars_obj = field("projective_chars")?.as_object().ok_or_else(|| bad("projective_chars is not an object"))?;
    let mut projective_chars = vec![GradedChar::zero(); ws.len()];
    for (label, c) in chars_obj {
        projective_chars[dg.index(dg.parse_weight(label)?)] = graded_char_from_json(dg, &none, c)?;
    }
    Ok(BggReport {
        verma_simple: matrix_from_json(dg, &ws, field("verma_simple")?)?,
        projective_verma: matrix_from_json(dg, &ws, field("projective_verma")?)?,
        projective_coverma: matrix_from_json(dg, &ws, field("projective_coverma")?)?,
        cartan: matrix_from_json(dg, &ws, field("cartan")?)?,
        projective_chars,
        simple_projective,
        graded,
        weights: ws,
    })
}

/// `p · ch X(name)` in display form: `ch X`, `2 ch X`, `t^2 ch X`, `(1 + t) ch X`.
pub fn laurent_times(p: &LaurentInt, body: &str) -> String {
    let terms: Vec<(i64, i64)> = p.terms().collect();
    if let [(d, c)] = terms[..] {
        let mut s = String::new();
        if c == -1 {
            s.push('-');
        } else if c != 1 {
            s.push_str(&format!("{} ", c));
        }
        match d {
            0 => {}
            1 => s.push_str("t "),
            d => s.push_str(&format!("t^{} ", d)),
        }
        s.push_str(body);
        s
    } else {
        format!("({}) {}", p, body)
    }
}

/// `ch A(x) = Σ p · ch B(y)` with the diagonal term first, then by lowest shift.
pub fn render_line(
    lhs: &str,
    entries: &[(Weight, LaurentInt)],
    diag: Weight,
    prefix: &str,
    aliases: &Aliases,
) -> String {
    let mut terms: Vec<&(Weight, LaurentInt)> = entries.iter().filter(|(_, p)| !p.is_zero()).collect();
    terms.sort_by_key(|(w, p)| (*w != diag, p.min_degree().unwrap_or(0), *w));
    if terms.is_empty() {
        return format!("{} = 0", lhs);
    }
    let mut out = format!("{} = ", lhs);
    for (i, (w, p)) in terms.iter().enumerate() {
        let piece = laurent_times(p, &format!("ch {}", aliases.module(prefix, *w)));
        if i == 0 {
            out.push_str(&piece);
        } else if let Some(rest) = piece.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&piece);
        }
    }
    out
}

pub fn report_text(dg: &DoubleGroup, profile: &NicholsProfile, report: &BggReport, aliases: &Aliases) -> String {
    let ws = &report.weights;
    let mut out = String::new();
    out.push_str(&format!(
        "{} BGG report: {} weights, n_top = {}, lambda_V = {}, dim B(V) = {}\n\n",
        if report.graded { "graded" } else { "ungraded" },
        ws.len(),
        profile.n_top(),
        aliases.name(profile.lambda_v()),
        profile.dimension()
    ));
    out.push_str("Verma modules in the simple basis:\n");
    for (i, &l) in ws.iter().enumerate() {
        let entries: Vec<(Weight, LaurentInt)> =
            ws.iter().copied().zip(report.verma_simple[i].iter().cloned()).collect();
        out.push_str(&render_line(&format!("ch {}", aliases.module("M", l)), &entries, l, "L", aliases));
        out.push('\n');
    }
    out.push_str("\nProjective modules in the Verma basis:\n");
    for (i, &m) in ws.iter().enumerate() {
        let entries: Vec<(Weight, LaurentInt)> =
            ws.iter().copied().zip(report.projective_verma[i].iter().cloned()).collect();
        out.push_str(&render_line(&format!("ch {}", aliases.module("P", m)), &entries, m, "M", aliases));
        out.push_str(&format!("    [dim {}]\n", report.projective_chars[i].dimension(dg)));
    }
    let simple: Vec<String> =
        ws.iter().zip(&report.simple_projective).filter(|(_, &s)| s).map(|(&w, _)| aliases.module("M", w)).collect();
    out.push_str(&format!("\nSimple projective Vermas ({}): {}\n", simple.len(), simple.join(", ")));
    out
}

/// `Σ p · Ind(x)` rendering for induced-module expansions.
pub fn render_ind_sum(map: &BTreeMap<Weight, LaurentInt>, prefix: &str, aliases: &Aliases) -> String {
    let mut terms: Vec<(&Weight, &LaurentInt)> = map.iter().collect();
    terms.sort_by_key(|(w, p)| (p.min_degree().unwrap_or(0), **w));
    if terms.is_empty() {
        return "0".into();
    }
    let pieces: Vec<String> = terms.iter().map(|(w, p)| laurent_times(p, &aliases.module(prefix, **w))).collect();
    pieces.join(" + ").replace("+ -", "- ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bgg::bgg_matrices;
    use crate::taft::{build_profile_and_table, TaftParams};

    #[test]
    fn laurent_rendering() {
        assert_eq!(laurent_times(&LaurentInt::one(), "ch M(x)"), "ch M(x)");
        assert_eq!(laurent_times(&LaurentInt::t(2), "ch M(x)"), "t^2 ch M(x)");
        assert_eq!(laurent_times(&LaurentInt::monomial(-2, 3), "Ind(x)"), "3 t^-2 Ind(x)");
        assert_eq!(laurent_times(&LaurentInt::from_terms([(0, 1), (1, 1)]), "X"), "(1 + t) X");
    }

    #[test]
    fn report_round_trip_and_text() {
        let setup = build_profile_and_table(&TaftParams::new(3).unwrap()).unwrap();
        let dg = setup.double.clone();
        let aliases = Aliases::new(setup.aliases()).unwrap();
        let report = bgg_matrices(&setup.profile, &SimpleData::Graded(setup.table.clone())).unwrap();
        let js = report_to_json(&dg, &setup.profile, &report, &aliases);
        assert_eq!(report_from_json(&dg, &js).unwrap(), report);
        let text = report_text(&dg, &setup.profile, &report, &aliases);
        assert!(text.contains("ch P(2,1) = ch M(2,1) + t^2 ch M(0,2)"), "{}", text);
        assert_eq!(to_pretty(&js), to_pretty(&report_to_json(&dg, &setup.profile, &report, &aliases)));
    }

    #[test]
    fn alias_resolution() {
        let setup = build_profile_and_table(&TaftParams::new(2).unwrap()).unwrap();
        let aliases = Aliases::new(setup.aliases()).unwrap();
        let w = setup.weight(1, 1);
        assert_eq!(aliases.resolve(&setup.double, "(1,1)").unwrap(), w);
        assert_eq!(aliases.resolve(&setup.double, &w.label()).unwrap(), w);
        assert!(aliases.resolve(&setup.double, "(5,5)").is_err());
        assert_eq!(aliases.module("P", w), "P(1,1)");
        let plain = Aliases::default();
        assert_eq!(plain.module("P", w), format!("P({})", w.label()));
        let dup = BTreeMap::from([(Weight::new(0, 0), "x".to_string()), (Weight::new(0, 1), "x".to_string())]);
        assert!(Aliases::new(dup).is_err());
    }

    #[test]
    fn graded_char_json() {
        let mut g = GradedChar::single(Weight::new(0, 1), 0);
        g.add_term(-1, Weight::new(1, 0), 2);
        let v = graded_char_to_json(&g);
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"char":[{"deg":0,"weights":[{"w":"g0r1","m":1}]},{"deg":-1,"weights":[{"w":"g1r0","m":2}]}]}"#
        );
        let setup = build_profile_and_table(&TaftParams::new(2).unwrap()).unwrap();
        assert_eq!(graded_char_from_json(&setup.double, &Aliases::default(), &v).unwrap(), g);
    }
}
