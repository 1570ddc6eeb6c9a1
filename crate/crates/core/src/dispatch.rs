//! Routes a command and its flags to the library and packages the answer
//! as a [`Report`].

use serde_json::{json, Value};

use crate::code::{build_code, dual_code, macwilliams_check, DEFAULT_CODE_CAP};
use crate::error::{Error, Result};
use crate::extension::{has_extension_property, ideal_classes, ExtensionMode, ExtensionReport};
use crate::field::{Matrix, PrimeField};
use crate::io::{PosetFile, Report};
use crate::iso::{automorphism_generators, is_self_dual};
use crate::ops::{combine, ie_inheritance_report, CombineKind};
use crate::orbits::{orbit_partition, orbit_size_formula, OrbitPartition};
use crate::poset::{perm_one_based, Poset, DEFAULT_IDEAL_CAP};
use crate::scheme::{build_scheme, eigenmatrices};
use crate::semilattice::regularity_check;
use crate::space::{Space, DEFAULT_SPACE_CAP};
use crate::subset::Subset;
use crate::tree::{ahu_label, build_tree, extend_ideal_isomorphism};

pub const COMMANDS: [&str; 10] = [
    "analyze",
    "ie-check",
    "scheme",
    "macwilliams",
    "tree-label",
    "tree-extend",
    "combine",
    "regularity",
    "orbits",
    "shapes",
];

/// Intersection tensors are written out only up to this many classes.
const TENSOR_CLASS_LIMIT: usize = 12;

/// Parsed flags. Posets keep their optional file names for the echo.
#[derive(Clone, Debug)]
pub struct Request {
    pub command: String,
    pub posets: Vec<(Option<String>, Poset)>,
    pub p: Option<u32>,
    pub gen: Option<Vec<Vec<u32>>>,
    pub degrees: Option<Vec<usize>>,
    /// 1-based element lists, one per `--ideal`.
    pub ideals: Vec<Vec<usize>>,
    /// 1-based pairs.
    pub map: Option<Vec<(usize, usize)>>,
    pub mode: Option<ExtensionMode>,
    pub kind: Option<CombineKind>,
    pub cap: u64,
}

impl Request {
    pub fn new(command: &str) -> Self {
        Request {
            command: command.to_string(),
            posets: Vec::new(),
            p: None,
            gen: None,
            degrees: None,
            ideals: Vec::new(),
            map: None,
            mode: None,
            kind: None,
            cap: DEFAULT_IDEAL_CAP,
        }
    }

    pub fn with_poset(mut self, p: Poset) -> Self {
        self.posets.push((None, p));
        self
    }

    fn usage(&self, what: &str) -> Error {
        Error::Usage(format!("`{}` needs {what}", self.command))
    }

    fn poset(&self, k: usize) -> Result<&Poset> {
        self.posets.get(k).map(|(_, p)| p).ok_or_else(|| {
            self.usage(if k == 0 { "--poset <file>" } else { "a second --poset <file>" })
        })
    }

    fn space(&self, n: usize) -> Result<Space> {
        let p = self.p.ok_or_else(|| self.usage("--p <prime>"))?;
        Space::new(PrimeField::new(p)?, n, DEFAULT_SPACE_CAP)
    }

    /// The tree from `--degrees` if given, else the first poset.
    fn tree_or_poset(&self) -> Result<Poset> {
        match &self.degrees {
            Some(d) => Ok(build_tree(d)?.poset().clone()),
            None => self.poset(0).cloned().map_err(|_| self.usage("--degrees <d0,d1,...> or --poset <file>")),
        }
    }
}

fn ideal_arg(p: &Poset, items: &[usize]) -> Result<Subset> {
    if let Some(&bad) = items.iter().find(|&&i| i == 0 || i > p.n()) {
        return Err(Error::Range { value: bad, n: p.n() });
    }
    Ok(Subset::from_one_based(items))
}

fn big(x: u128) -> Value {
    u64::try_from(x).map(Value::from).unwrap_or_else(|_| Value::from(x.to_string()))
}

fn extension_json(r: &ExtensionReport) -> Value {
    json!({
        "mode": r.mode.to_string(),
        "holds": r.holds,
        "witness": r.witness.map(|(i, j)| vec![i.to_one_based(), j.to_one_based()]),
        "ideal_count": r.ideal_count,
        "class_count": r.class_count,
        "orbit_count": r.orbit_count,
    })
}

fn partition_json(space: &Space, part: &OrbitPartition) -> Value {
    Value::Array(
        (0..part.len())
            .map(|o| json!({"id": o, "representative": space.format(part.reps[o]), "size": part.sizes[o]}))
            .collect(),
    )
}

pub fn dispatch(req: &Request) -> Result<Report> {
    let mut report = Report::new(&req.command);
    for (k, (name, p)) in req.posets.iter().enumerate() {
        let key = if k == 0 { "poset".to_string() } else { format!("poset_{}", k + 1) };
        report.inputs.insert(key, serde_json::to_value(PosetFile::from_poset(p, name.clone())).unwrap());
    }
    if let Some(p) = req.p {
        report.inputs.insert("p".into(), json!(p));
    }
    if let Some(g) = &req.gen {
        report.inputs.insert("gen".into(), json!(g));
    }
    if let Some(d) = &req.degrees {
        report.inputs.insert("degrees".into(), json!(d));
    }
    if !req.ideals.is_empty() {
        report.inputs.insert("ideals".into(), json!(req.ideals));
    }
    if let Some(m) = &req.map {
        report.inputs.insert("map".into(), json!(m.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>()));
    }
    if let Some(mode) = req.mode {
        report.inputs.insert("mode".into(), json!(mode.to_string()));
    }
    if let Some(kind) = req.kind {
        report.inputs.insert("kind".into(), json!(kind.name()));
    }
    report.results = match req.command.as_str() {
        "analyze" => analyze(req)?,
        "ie-check" => {
            let mode = req.mode.unwrap_or(ExtensionMode::Ie);
            extension_json(&has_extension_property(req.poset(0)?, mode, req.cap)?)
        }
        "scheme" => scheme(req)?,
        "macwilliams" => macwilliams(req)?,
        "tree-label" => tree_label(req)?,
        "tree-extend" => tree_extend(req)?,
        "combine" => combine_cmd(req)?,
        "regularity" => serde_json::to_value(regularity_check(req.poset(0)?)?).unwrap(),
        "orbits" => orbits(req)?,
        "shapes" => shapes(req)?,
        other => return Err(Error::UnknownCommand(other.to_string())),
    };
    Ok(report)
}

fn analyze(req: &Request) -> Result<Value> {
    let p = req.poset(0)?;
    let dual = is_self_dual(p)?;
    let aut = automorphism_generators(p)?;
    Ok(json!({
        "n": p.n(),
        "height": p.height(),
        "cover_count": p.covers().len(),
        "self_dual": dual.is_some(),
        "duality_map": dual.map(|m| perm_one_based(&m)),
        "automorphism_group_order": big(aut.order),
        "ideal_count": p.enumerate_ideals(req.cap)?.len(),
        "ie": extension_json(&has_extension_property(p, ExtensionMode::Ie, req.cap)?),
        "fe": extension_json(&has_extension_property(p, ExtensionMode::Fe, req.cap)?),
    }))
}

fn scheme(req: &Request) -> Result<Value> {
    let p = req.poset(0)?;
    let space = req.space(p.n())?;
    let s = build_scheme(p, &space)?;
    let e = eigenmatrices(&s)?;
    e.check_relations(&s)?;
    let k = s.class_count();
    let mut out = json!({
        "class_count": k,
        "classes": partition_json(&space, s.classes()),
        "valencies": s.valencies(),
        "dual_classes": partition_json(&space, &e.dual_classes),
        "multiplicities": e.multiplicities,
        "p_mat": e.p_mat,
        "q_mat": e.q_mat,
    });
    if k <= TENSOR_CLASS_LIMIT {
        let tensor: Vec<Vec<Vec<u64>>> =
            (0..k).map(|g| (0..k).map(|a| (0..k).map(|b| s.intersection(g, a, b)).collect()).collect()).collect();
        out["intersection_numbers"] = json!(tensor);
    } else {
        out["intersection_numbers"] = json!(format!("omitted for {k} classes"));
    }
    Ok(out)
}

fn macwilliams(req: &Request) -> Result<Value> {
    let p = req.poset(0)?;
    let space = req.space(p.n())?;
    let rows = req.gen.as_ref().ok_or_else(|| req.usage("--gen <rows>"))?;
    let gen = Matrix::from_rows(space.field(), rows)?;
    let code = build_code(&space, &gen, DEFAULT_CODE_CAP)?;
    let dual = dual_code(&code, DEFAULT_CODE_CAP)?;
    let s = build_scheme(p, &space)?;
    let e = eigenmatrices(&s)?;
    let r = macwilliams_check(&code, &s, &e, DEFAULT_CODE_CAP)?;
    Ok(json!({
        "dimension": code.dimension(),
        "size": code.len(),
        "generator": code.generator().to_rows(),
        "dual_dimension": dual.dimension(),
        "dual_generator": dual.generator().to_rows(),
        "a": r.a,
        "a_dual": r.a_dual,
        "a_dual_from_a": r.a_dual_from_a,
        "a_from_a_dual": r.a_from_dual,
        "holds": r.holds,
    }))
}

fn tree_label(req: &Request) -> Result<Value> {
    let p = req.tree_or_poset()?;
    let ideals: Vec<Subset> = if req.ideals.is_empty() {
        vec![p.ground()]
    } else {
        req.ideals.iter().map(|i| ideal_arg(&p, i)).collect::<Result<_>>()?
    };
    let mut labels = Vec::new();
    for &i in &ideals {
        if !p.is_ideal(i) {
            return Err(Error::NotAnIdeal(i.to_string()));
        }
        labels.push(ahu_label(&p, i)?.into_string());
    }
    let mut out = json!({
        "labels": ideals
            .iter()
            .zip(&labels)
            .map(|(i, l)| json!({"ideal": i.to_one_based(), "label": l}))
            .collect::<Vec<_>>(),
    });
    if labels.len() == 2 {
        out["isomorphic"] = json!(labels[0] == labels[1]);
    }
    Ok(out)
}

fn tree_extend(req: &Request) -> Result<Value> {
    let degrees = req.degrees.as_ref().ok_or_else(|| req.usage("--degrees <d0,d1,...>"))?;
    let t = build_tree(degrees)?;
    let p = t.poset();
    if req.ideals.len() != 2 {
        return Err(req.usage("two --ideal flags"));
    }
    let i = ideal_arg(p, &req.ideals[0])?;
    let j = ideal_arg(p, &req.ideals[1])?;
    let map = req.map.as_ref().ok_or_else(|| req.usage("--map <a:b,...>"))?;
    for &(a, b) in map {
        for v in [a, b] {
            if v == 0 || v > p.n() {
                return Err(Error::Range { value: v, n: p.n() });
            }
        }
    }
    let phi: Vec<(usize, usize)> = map.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    let ext = extend_ideal_isomorphism(&t, i, j, &phi)?;
    Ok(json!({ "automorphism": perm_one_based(&ext) }))
}

fn combine_cmd(req: &Request) -> Result<Value> {
    let p = req.poset(0)?;
    let q = req.poset(1)?;
    if let Some(kind) = req.kind {
        let c = combine(p, q, kind)?;
        return Ok(json!({
            "kind": kind.name(),
            "poset": serde_json::to_value(PosetFile::from_poset(&c, None)).unwrap(),
            "ie": extension_json(&has_extension_property(&c, ExtensionMode::Ie, req.cap)?),
        }));
    }
    let rows = ie_inheritance_report(p, q, req.cap)?;
    Ok(json!({
        "summands_ie": [
            has_extension_property(p, ExtensionMode::Ie, req.cap)?.holds,
            has_extension_property(q, ExtensionMode::Ie, req.cap)?.holds,
        ],
        "rows": rows
            .iter()
            .map(|r| json!({"kind": r.kind.name(), "size": r.size, "ie": extension_json(&r.report)}))
            .collect::<Vec<_>>(),
    }))
}

fn orbits(req: &Request) -> Result<Value> {
    let p = req.poset(0)?;
    let space = req.space(p.n())?;
    let part = orbit_partition(p, &space)?;
    let ie = has_extension_property(p, ExtensionMode::Ie, req.cap)?.holds;
    let rows = (0..part.len())
        .map(|o| {
            let rep = part.reps[o];
            let ideal = p.ideal_of(space.support(rep));
            let predicted = if ie { Some(big(orbit_size_formula(p, space.p(), ideal, req.cap)?)) } else { None };
            Ok(json!({
                "id": o,
                "representative": space.format(rep),
                "ideal": ideal.to_one_based(),
                "size": part.sizes[o],
                "predicted_size": predicted,
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({ "ie": ie, "orbit_count": part.len(), "orbits": rows }))
}

/// Ideal-class shape of each orbit, plus the tree label when the poset is a
/// rooted tree; `separates` says whether the shape tells orbits apart.
fn shapes(req: &Request) -> Result<Value> {
    let p = req.poset(0)?;
    let space = req.space(p.n())?;
    let part = orbit_partition(p, &space)?;
    let classes = ideal_classes(p, req.cap)?;
    let is_tree = ahu_label(p, p.ground()).is_ok();
    let mut seen = std::collections::BTreeMap::new();
    let mut separates = true;
    let mut rows = Vec::new();
    for o in 0..part.len() {
        let ideal = p.ideal_of(space.support(part.reps[o]));
        let class = classes.class_of_ideal(ideal).expect("every ideal is enumerated");
        if seen.insert(class, o).is_some() {
            separates = false;
        }
        let label = if is_tree { Some(ahu_label(p, ideal)?.into_string()) } else { None };
        rows.push(json!({
            "orbit": o,
            "representative": space.format(part.reps[o]),
            "ideal_class": class,
            "tree_label": label,
        }));
    }
    Ok(json!({ "separates": separates, "shapes": rows }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{n_poset, single_relation};

    #[test]
    fn ie_check_single_relation() {
        let r = dispatch(&Request::new("ie-check").with_poset(single_relation())).unwrap();
        assert_eq!(r.results["holds"], json!(false));
        assert_eq!(r.results["witness"], json!([[1], [2]]));
    }

    #[test]
    fn scheme_chain_2() {
        let mut req = Request::new("scheme").with_poset(Poset::chain(2).unwrap());
        req.p = Some(2);
        let r = dispatch(&req).unwrap();
        assert_eq!(r.results["p_mat"], json!([[1, 1, 2], [1, -1, 0], [1, 1, -2]]));
        assert_eq!(r.results["class_count"], json!(3));
    }

    #[test]
    fn analyze_n_poset() {
        let r = dispatch(&Request::new("analyze").with_poset(n_poset())).unwrap();
        assert_eq!(r.results["self_dual"], json!(true));
    }

    #[test]
    fn unknown_and_missing() {
        assert_eq!(dispatch(&Request::new("frobnicate")).unwrap_err(), Error::UnknownCommand("frobnicate".into()));
        assert!(matches!(dispatch(&Request::new("scheme")), Err(Error::Usage(_))));
    }
}
