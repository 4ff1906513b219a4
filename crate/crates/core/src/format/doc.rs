//! Typed documents: one object of a known kind over one field, with optional
//! provenance hashes of the documents it was computed from.
//!
//! Structure constants are sparse lists of `[i, j, k, "c"]` entries with canonical
//! scalar strings; zero entries are omitted and emitted lists are sorted by index.

use sha2::{Digest, Sha256};

use super::json::{self, Node, Value};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Subspace};
use crate::hopf::tensor::Tensor3;
use crate::hopf::{AlgebraData, CoalgebraData, HopfData};
use crate::modcom::{ComodAlg, ComoduleStr, ModAlg, ModuleRep, Side};
use crate::report::{Report, Verdict};
use crate::yanzhu::{Chirality, StabSpace};

pub const SCHEMA_VERSION: usize = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Hopf(HopfData),
    ComodAlg(ComodAlg),
    ModAlg(ModAlg),
    Module(ModuleRep),
    Subspace(Subspace),
    Stabilizer(StabSpace),
    Reports(Vec<Report>),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Hopf(_) => "hopf",
            Object::ComodAlg(_) => "comodalg",
            Object::ModAlg(_) => "modalg",
            Object::Module(_) => "module",
            Object::Subspace(_) => "subspace",
            Object::Stabilizer(_) => "stabilizer",
            Object::Reports(_) => "report",
        }
    }

    /// Ground field; reports carry none.
    pub fn field(&self) -> Option<Field> {
        Some(match self {
            Object::Hopf(h) => h.field(),
            Object::ComodAlg(k) => k.field(),
            Object::ModAlg(r) => r.field(),
            Object::Module(m) => m.field(),
            Object::Subspace(s) => s.field(),
            Object::Stabilizer(s) => s.hopf.field(),
            Object::Reports(_) => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub object: Object,
    /// SHA-256 hex digests of the canonical text of the input documents.
    pub provenance: Vec<String>,
}

impl Document {
    pub fn new(object: Object) -> Document {
        Document { object, provenance: Vec::new() }
    }

    pub fn with_inputs(object: Object, inputs: &[&Document]) -> Document {
        Document { object, provenance: inputs.iter().map(|d| d.content_hash()).collect() }
    }

    pub fn content_hash(&self) -> String {
        hex::encode(Sha256::digest(self.emit().as_bytes()))
    }

    /// Rejects a derived document whose provenance does not name exactly these inputs.
    pub fn verify_provenance(&self, inputs: &[&Document]) -> Result<()> {
        let expected: Vec<String> = inputs.iter().map(|d| d.content_hash()).collect();
        if self.provenance != expected {
            return Err(Error::invalid("provenance hashes do not match the given inputs"));
        }
        Ok(())
    }

    pub fn emit(&self) -> String {
        let mut members = vec![("schema", Node::int(SCHEMA_VERSION)), ("kind", Node::str(self.object.kind()))];
        if let Some(f) = self.object.field() {
            members.push(("field", Node::str(f.name())));
        }
        members.extend(payload(&self.object));
        if !self.provenance.is_empty() {
            members.push(("provenance", Node::array(self.provenance.iter().map(Node::str).collect())));
        }
        json::emit(&Node::object(members))
    }

    pub fn parse(text: &str) -> Result<Document> {
        let root = json::parse(text)?;
        let mut m = Members::new(&root)?;
        let schema = m.take("schema")?;
        if schema.as_usize()? != SCHEMA_VERSION {
            return Err(schema.pos.error(format!("unknown schema version {:?}", schema.value)));
        }
        let kind_node = m.take("kind")?;
        let kind = kind_node.as_str()?;
        let field = if kind == "report" {
            None
        } else {
            let node = m.take("field")?;
            Some(Field::from_name(node.as_str()?).map_err(|e| node.pos.error(e.to_string()))?)
        };
        let object = match (kind, field) {
            ("hopf", Some(f)) => Object::Hopf(read_hopf(f, &mut m, root.pos)?),
            ("comodalg", Some(f)) => Object::ComodAlg(read_comodalg(f, &mut m, root.pos)?),
            ("modalg", Some(f)) => Object::ModAlg(read_modalg(f, &mut m, root.pos)?),
            ("module", Some(f)) => Object::Module(read_module(f, &mut m, root.pos)?),
            ("subspace", Some(f)) => Object::Subspace(read_subspace(f, &mut m)?),
            ("stabilizer", Some(f)) => Object::Stabilizer(read_stabilizer(f, &mut m, root.pos)?),
            ("report", None) => Object::Reports(read_reports(&mut m)?),
            _ => return Err(kind_node.pos.error(format!("unknown kind {kind:?}"))),
        };
        let provenance = match m.opt("provenance") {
            Some(node) => node
                .as_array()?
                .iter()
                .map(|h| {
                    let s = h.as_str()?;
                    if s.len() != 64 || !s.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b)) {
                        return Err(h.pos.error("provenance entries are lowercase SHA-256 hex digests"));
                    }
                    Ok(s.to_string())
                })
                .collect::<Result<_>>()?,
            None => Vec::new(),
        };
        m.finish()?;
        Ok(Document { object, provenance })
    }
}

/// Object members consumed by name; leftovers are unknown keys.
struct Members<'a> {
    items: Vec<(&'a str, &'a Node, bool)>,
    pos: json::Pos,
}

impl<'a> Members<'a> {
    fn new(node: &'a Node) -> Result<Members<'a>> {
        let items = node.as_object()?.iter().map(|(k, v)| (k.as_str(), v, false)).collect();
        Ok(Members { items, pos: node.pos })
    }

    fn opt(&mut self, key: &str) -> Option<&'a Node> {
        let item = self.items.iter_mut().find(|(k, _, _)| *k == key)?;
        item.2 = true;
        Some(item.1)
    }

    fn take(&mut self, key: &str) -> Result<&'a Node> {
        let pos = self.pos;
        self.opt(key).ok_or_else(|| pos.error(format!("missing key {key:?}")))
    }

    fn finish(self) -> Result<()> {
        match self.items.iter().find(|(_, _, used)| !used) {
            Some((k, v, _)) => Err(v.pos.error(format!("unknown key {k:?}"))),
            None => Ok(()),
        }
    }
}

const INDEX_NAMES: [&str; 4] = ["i", "j", "k", "l"];

/// Sparse entries with `bounds.len()` indices each, bounds-checked and without repeats.
fn read_entries(field: Field, node: &Node, bounds: &[usize]) -> Result<Vec<(Vec<usize>, Scalar)>> {
    let arity = bounds.len();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for entry in node.as_array()? {
        let parts = entry.as_array()?;
        let n_idx = parts.len().saturating_sub(1);
        let last_is_scalar = parts.last().is_some_and(|p| matches!(p.value, Value::Str(_)));
        if parts.len() != arity + 1 || !last_is_scalar {
            let missing = if n_idx < arity && last_is_scalar {
                format!(" (missing index {})", INDEX_NAMES[n_idx])
            } else {
                String::new()
            };
            return Err(entry.pos.error(format!(
                "entry needs {arity} indices and a scalar string, found {} items{missing}",
                parts.len()
            )));
        }
        let mut idx = Vec::with_capacity(arity);
        for (p, &bound) in parts[..arity].iter().zip(bounds) {
            let i = p.as_usize()?;
            if i >= bound {
                return Err(p.pos.error(format!("index {i} out of range 0..{bound}")));
            }
            idx.push(i);
        }
        let text = parts[arity].as_str()?;
        let value = field.parse_scalar(text).map_err(|e| parts[arity].pos.error(e))?;
        if value.is_zero() {
            return Err(parts[arity].pos.error("zero entries are omitted"));
        }
        if !seen.insert(idx.clone()) {
            return Err(entry.pos.error(format!("repeated entry {idx:?}")));
        }
        out.push((idx, value));
    }
    Ok(out)
}

fn read_tensor(field: Field, node: &Node, n: usize) -> Result<Tensor3> {
    let mut t = Tensor3::zeros(field, [n, n, n]);
    for (idx, v) in read_entries(field, node, &[n, n, n])? {
        t.set(idx[0], idx[1], idx[2], v);
    }
    Ok(t)
}

fn read_matrix(field: Field, node: &Node, rows: usize, cols: usize) -> Result<Matrix> {
    let mut m = Matrix::zeros(field, rows, cols);
    for (idx, v) in read_entries(field, node, &[rows, cols])? {
        m.set(idx[0], idx[1], v);
    }
    Ok(m)
}

fn read_vector(field: Field, node: &Node, n: usize) -> Result<Vec<Scalar>> {
    let mut v = vec![field.zero(); n];
    for (idx, s) in read_entries(field, node, &[n])? {
        v[idx[0]] = s;
    }
    Ok(v)
}

fn read_actions(field: Field, node: &Node, count: usize, dim: usize) -> Result<Vec<Matrix>> {
    let mut ops = vec![Matrix::zeros(field, dim, dim); count];
    for (idx, v) in read_entries(field, node, &[count, dim, dim])? {
        ops[idx[0]].set(idx[1], idx[2], v);
    }
    Ok(ops)
}

fn read_side(node: &Node) -> Result<Side> {
    let s = node.as_str()?;
    Side::parse(s).ok_or_else(|| node.pos.error(format!("side must be \"left\" or \"right\", found {s:?}")))
}

fn with_pos<T>(pos: json::Pos, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => pos.error(other.to_string()),
    })
}

fn read_hopf(field: Field, m: &mut Members<'_>, pos: json::Pos) -> Result<HopfData> {
    let n = m.take("dim")?.as_usize()?;
    let mult = read_tensor(field, m.take("mult")?, n)?;
    let unit = read_vector(field, m.take("unit")?, n)?;
    let comult = read_tensor(field, m.take("comult")?, n)?;
    let counit = read_vector(field, m.take("counit")?, n)?;
    let antipode = read_matrix(field, m.take("antipode")?, n, n)?;
    with_pos(pos, (|| HopfData::new(AlgebraData::new(mult, unit)?, CoalgebraData::new(comult, counit)?, antipode))())
}

fn read_nested_hopf(field: Field, node: &Node) -> Result<HopfData> {
    let mut m = Members::new(node)?;
    let h = read_hopf(field, &mut m, node.pos)?;
    m.finish()?;
    Ok(h)
}

fn read_algebra(field: Field, m: &mut Members<'_>, d: usize, pos: json::Pos) -> Result<AlgebraData> {
    let mult = read_tensor(field, m.take("mult")?, d)?;
    let unit = read_vector(field, m.take("unit")?, d)?;
    with_pos(pos, AlgebraData::new(mult, unit))
}

fn read_comodalg(field: Field, m: &mut Members<'_>, pos: json::Pos) -> Result<ComodAlg> {
    let hopf = read_nested_hopf(field, m.take("hopf")?)?;
    let d = m.take("dim")?.as_usize()?;
    let side = read_side(m.take("side")?)?;
    let alg = read_algebra(field, m, d, pos)?;
    let n = hopf.dim();
    let coaction = read_matrix(field, m.take("coaction")?, n * d, d)?;
    with_pos(pos, (|| ComodAlg::new(hopf, alg, ComoduleStr::new(side, n, d, coaction)?))())
}

fn read_modalg(field: Field, m: &mut Members<'_>, pos: json::Pos) -> Result<ModAlg> {
    let hopf = read_nested_hopf(field, m.take("hopf")?)?;
    let d = m.take("dim")?.as_usize()?;
    let side = read_side(m.take("side")?)?;
    let alg = read_algebra(field, m, d, pos)?;
    let action = read_actions(field, m.take("action")?, hopf.dim(), d)?;
    with_pos(pos, (|| ModAlg::new(hopf, alg, ModuleRep::new(field, d, side, action)?))())
}

fn read_module(field: Field, m: &mut Members<'_>, pos: json::Pos) -> Result<ModuleRep> {
    let count = m.take("algebra_dim")?.as_usize()?;
    let d = m.take("dim")?.as_usize()?;
    let side = read_side(m.take("side")?)?;
    let action = read_actions(field, m.take("action")?, count, d)?;
    with_pos(pos, ModuleRep::new(field, d, side, action))
}

fn read_subspace(field: Field, m: &mut Members<'_>) -> Result<Subspace> {
    let ambient = m.take("ambient")?.as_usize()?;
    let dim_node = m.take("dim")?;
    let dim = dim_node.as_usize()?;
    let basis_node = m.take("basis")?;
    let basis = read_matrix(field, basis_node, dim, ambient)?;
    let space = Subspace::from_vectors(field, ambient, basis.row_vectors());
    if space.dim() != dim || space.basis() != &basis {
        return Err(basis_node.pos.error("basis is not in reduced row echelon form without zero rows"));
    }
    Ok(space)
}

fn read_stabilizer(field: Field, m: &mut Members<'_>, pos: json::Pos) -> Result<StabSpace> {
    let hopf = read_nested_hopf(field, m.take("hopf")?)?;
    let chir = m.take("chirality")?;
    let chirality = Chirality::parse(chir.as_str()?)
        .ok_or_else(|| chir.pos.error("chirality must be \"dual-tensor\" or \"tensor-h\""))?;
    let dim_u = m.take("dim_u")?.as_usize()?;
    let dim_w = m.take("dim_w")?.as_usize()?;
    let space_node = m.take("space")?;
    let mut sm = Members::new(space_node)?;
    let space = read_subspace(field, &mut sm)?;
    sm.finish()?;
    with_pos(pos, StabSpace::new(hopf, chirality, dim_u, dim_w, space))
}

fn read_reports(m: &mut Members<'_>) -> Result<Vec<Report>> {
    m.take("reports")?
        .as_array()?
        .iter()
        .map(|node| {
            let mut r = Members::new(node)?;
            let check = r.take("check")?.as_str()?.to_string();
            let topic = r.take("topic")?.as_str()?.to_string();
            let vnode = r.take("verdict")?;
            let verdict = Verdict::parse(vnode.as_str()?).ok_or_else(|| vnode.pos.error("unknown verdict"))?;
            let witnesses =
                r.take("witnesses")?.as_array()?.iter().map(|w| w.as_str().map(str::to_string)).collect::<Result<_>>()?;
            let facts = r
                .take("facts")?
                .as_array()?
                .iter()
                .map(|f| match f.as_array()? {
                    [k, v] => Ok((k.as_str()?.to_string(), v.as_str()?.to_string())),
                    _ => Err(f.pos.error("facts are [key, value] pairs")),
                })
                .collect::<Result<_>>()?;
            r.finish()?;
            if verdict == Verdict::Fail && Vec::<String>::is_empty(&witnesses) {
                return Err(node.pos.error("a failing report needs a witness"));
            }
            Ok(Report::from_parts(check, topic, verdict, witnesses, facts))
        })
        .collect()
}

fn entry(idx: &[usize], s: &Scalar) -> Node {
    let mut items: Vec<Node> = idx.iter().map(|&i| Node::int(i)).collect();
    items.push(Node::str(s.to_string()));
    Node::array(items)
}

fn tensor_node(t: &Tensor3) -> Node {
    Node::array(t.nonzeros().map(|(i, j, k, c)| entry(&[i, j, k], c)).collect())
}

fn matrix_node(m: &Matrix) -> Node {
    let mut items = Vec::new();
    for i in 0..m.rows() {
        for (j, c) in m.row(i).iter().enumerate() {
            if !c.is_zero() {
                items.push(entry(&[i, j], c));
            }
        }
    }
    Node::array(items)
}

fn vector_node(v: &[Scalar]) -> Node {
    Node::array(v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| entry(&[i], c)).collect())
}

fn actions_node(ops: &[Matrix]) -> Node {
    let mut items = Vec::new();
    for (b, m) in ops.iter().enumerate() {
        for i in 0..m.rows() {
            for (j, c) in m.row(i).iter().enumerate() {
                if !c.is_zero() {
                    items.push(entry(&[b, i, j], c));
                }
            }
        }
    }
    Node::array(items)
}

fn hopf_members(h: &HopfData) -> Vec<(&'static str, Node)> {
    vec![
        ("dim", Node::int(h.dim())),
        ("mult", tensor_node(h.mult())),
        ("unit", vector_node(h.unit())),
        ("comult", tensor_node(h.comult())),
        ("counit", vector_node(h.counit())),
        ("antipode", matrix_node(h.antipode())),
    ]
}

fn subspace_members(s: &Subspace) -> Vec<(&'static str, Node)> {
    vec![("ambient", Node::int(s.ambient_dim())), ("dim", Node::int(s.dim())), ("basis", matrix_node(s.basis()))]
}

fn payload(obj: &Object) -> Vec<(&'static str, Node)> {
    match obj {
        Object::Hopf(h) => hopf_members(h),
        Object::ComodAlg(k) => vec![
            ("hopf", Node::object(hopf_members(&k.hopf))),
            ("dim", Node::int(k.dim())),
            ("side", Node::str(k.side().as_str())),
            ("mult", tensor_node(k.alg.mult())),
            ("unit", vector_node(k.alg.unit())),
            ("coaction", matrix_node(k.coact.coaction())),
        ],
        Object::ModAlg(r) => vec![
            ("hopf", Node::object(hopf_members(&r.hopf))),
            ("dim", Node::int(r.dim())),
            ("side", Node::str(r.side().as_str())),
            ("mult", tensor_node(r.alg.mult())),
            ("unit", vector_node(r.alg.unit())),
            ("action", actions_node(r.act.action())),
        ],
        Object::Module(m) => vec![
            ("algebra_dim", Node::int(m.algebra_dim())),
            ("dim", Node::int(m.dim())),
            ("side", Node::str(m.side().as_str())),
            ("action", actions_node(m.action())),
        ],
        Object::Subspace(s) => subspace_members(s),
        Object::Stabilizer(st) => vec![
            ("hopf", Node::object(hopf_members(&st.hopf))),
            ("chirality", Node::str(st.chirality.as_str())),
            ("dim_u", Node::int(st.dim_u)),
            ("dim_w", Node::int(st.dim_w)),
            ("space", Node::object(subspace_members(&st.space))),
        ],
        Object::Reports(rs) => vec![("reports", Node::array(rs.iter().map(report_node).collect()))],
    }
}

fn report_node(r: &Report) -> Node {
    Node::object(vec![
        ("check", Node::str(&r.check)),
        ("topic", Node::str(&r.topic)),
        ("verdict", Node::str(r.verdict.as_str())),
        ("witnesses", Node::array(r.witnesses.iter().map(Node::str).collect())),
        (
            "facts",
            Node::array(r.facts.iter().map(|(k, v)| Node::array(vec![Node::str(k), Node::str(v)])).collect()),
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn hopf_round_trip() {
        let doc = Document::new(Object::Hopf(zoo::sweedler()));
        let text = doc.emit();
        let back = Document::parse(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.emit(), text);
    }

    #[test]
    fn non_canonical_scalar_is_rejected() {
        let text = Document::new(Object::Hopf(zoo::sweedler())).emit().replacen("\"1\"]", "\"3/3\"]", 1);
        let err = Document::parse(&text).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err}");
    }

    #[test]
    fn truncated_entry_names_the_missing_index() {
        let text = Document::new(Object::Hopf(zoo::sweedler())).emit().replacen("[0, 0, 0, \"1\"]", "[0, 0, \"1\"]", 1);
        let err = Document::parse(&text).unwrap_err().to_string();
        assert!(err.contains("missing index k"), "{err}");
    }

    #[test]
    fn unknown_keys_and_versions_are_rejected() {
        let text = Document::new(Object::Hopf(zoo::sweedler())).emit();
        assert!(Document::parse(&text.replacen("\"schema\": 1", "\"schema\": 2", 1)).is_err());
        let extra = text.replacen("\"dim\": 4,", "\"dim\": 4,\n  \"colour\": \"red\",", 1);
        assert!(Document::parse(&extra).unwrap_err().to_string().contains("unknown key"));
    }

    #[test]
    fn provenance_is_checked() {
        let h = Document::new(Object::Hopf(zoo::sweedler()));
        let k = Document::new(Object::ComodAlg(ComodAlg::regular(&zoo::sweedler())));
        let derived = Document::with_inputs(Object::Reports(Vec::new()), &[&h, &k]);
        let back = Document::parse(&derived.emit()).unwrap();
        assert!(back.verify_provenance(&[&h, &k]).is_ok());
        assert!(back.verify_provenance(&[&k, &h]).is_err());
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;

    proptest! {
        #[test]
        fn subspace_documents_round_trip(
            p in prop_oneof![Just(0u64), Just(3), Just(11)],
            rows in proptest::collection::vec(proptest::collection::vec(-4i64..5, 6), 0..4),
        ) {
            let f = if p == 0 { Field::Rationals } else { Field::prime(p).unwrap() };
            let vs: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
            let doc = Document::new(Object::Subspace(Subspace::from_vectors(f, 6, vs)));
            let text = doc.emit();
            let back = Document::parse(&text).unwrap();
            prop_assert_eq!(back.emit(), text);
            prop_assert_eq!(back, doc);
        }
    }
}
