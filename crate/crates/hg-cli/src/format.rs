//! Line-oriented text format for hypergroups, morphisms, and diagrams.
//!
//! A file holds one or more blocks separated by blank lines:
//!
//! ```text
//! hypergroup <name>
//! elements <e0> <e1> ...      # e0 is the identity
//! inv <r(e0)> <r(e1)> ...
//! <ei> <ej> = <ek>,<el>,...   # identity-row/column cells may be omitted
//!
//! morphism <name> : <dom> -> <cod>
//! map <ei> -> <fj>            # one line per domain element
//!
//! diagram <name>
//! node <nodename> <hypergroup-name>
//! arrow <nodeA> -> <nodeB> <morphism-name>
//! ```
//!
//! `#` starts a comment. Serialization is canonical: the identity first and
//! the remaining element names sorted, cells in row-major order with members
//! ascending, one space between tokens; identity cells are omitted. Parsing
//! a canonical document and serializing it again is byte-stable.

use std::collections::HashMap;
use std::fmt;

use hypergroups::construct::SubCarrier;
use hypergroups::diagram::DirectedDiagram;
use hypergroups::hypergroup::RawHypergroup;
use hypergroups::morphism::Morphism;
use hypergroups::{CheckReport, ElementSet, HgError, Hypergroup};

/// Parse or load failure. Syntax issues carry a position; semantic issues
/// carry the failed verification.
#[derive(Debug, Clone)]
pub enum LoadError {
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    Semantic {
        line: usize,
        context: String,
        error: HgError,
    },
}

impl LoadError {
    fn syntax(line: usize, col: usize, message: impl Into<String>) -> Self {
        LoadError::Syntax {
            line,
            col,
            message: message.into(),
        }
    }

    /// The axiom/condition report embedded in a semantic error, if any.
    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            LoadError::Semantic {
                error:
                    HgError::AxiomsFail(r)
                    | HgError::RelationalConditionsFail(r)
                    | HgError::NotAMorphism(r),
                ..
            } => Some(r),
            _ => None,
        }
    }

    pub fn is_syntax(&self) -> bool {
        matches!(self, LoadError::Syntax { .. })
    }
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Syntax { line, col, message } => {
                write!(f, "syntax error at {line}:{col}: {message}")
            }
            LoadError::Semantic {
                line,
                context,
                error,
            } => write!(f, "semantic error in block at line {line} ({context}): {error}"),
        }
    }
}

impl std::error::Error for LoadError {}

/// A named hypergroup with its element names, index-aligned.
#[derive(Debug, Clone)]
pub struct HypergroupDoc {
    pub name: String,
    pub element_names: Vec<String>,
    pub hypergroup: Hypergroup,
}

#[derive(Debug, Clone)]
pub struct MorphismDoc {
    pub name: String,
    pub dom_name: String,
    pub cod_name: String,
    pub morphism: Morphism,
}

#[derive(Debug, Clone)]
pub struct DiagramDoc {
    pub name: String,
    pub node_names: Vec<String>,
    pub object_names: Vec<String>,
    /// Arrow node pairs with the referenced morphism name.
    pub arrow_names: Vec<(usize, usize, String)>,
    pub diagram: DirectedDiagram,
}

/// One parsed document.
#[derive(Debug, Clone)]
pub enum HgDocument {
    Hypergroup(HypergroupDoc),
    Morphism(MorphismDoc),
    Diagram(DiagramDoc),
}

impl HgDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            HgDocument::Hypergroup(_) => "hypergroup",
            HgDocument::Morphism(_) => "morphism",
            HgDocument::Diagram(_) => "diagram",
        }
    }

    pub fn name(&self) -> &str {
        match self {
            HgDocument::Hypergroup(d) => &d.name,
            HgDocument::Morphism(d) => &d.name,
            HgDocument::Diagram(d) => &d.name,
        }
    }
}

/// All documents of a file (or of several concatenated files), with name
/// lookup.
#[derive(Debug, Clone, Default)]
pub struct Bundle {
    pub docs: Vec<HgDocument>,
}

impl Bundle {
    pub fn hypergroups(&self) -> impl Iterator<Item = &HypergroupDoc> {
        self.docs.iter().filter_map(|d| match d {
            HgDocument::Hypergroup(h) => Some(h),
            _ => None,
        })
    }

    pub fn morphisms(&self) -> impl Iterator<Item = &MorphismDoc> {
        self.docs.iter().filter_map(|d| match d {
            HgDocument::Morphism(m) => Some(m),
            _ => None,
        })
    }

    pub fn diagrams(&self) -> impl Iterator<Item = &DiagramDoc> {
        self.docs.iter().filter_map(|d| match d {
            HgDocument::Diagram(d) => Some(d),
            _ => None,
        })
    }

    pub fn hypergroup_by_name(&self, name: &str) -> Option<&HypergroupDoc> {
        self.hypergroups().find(|d| d.name == name)
    }

    pub fn morphism_by_name(&self, name: &str) -> Option<&MorphismDoc> {
        self.morphisms().find(|d| d.name == name)
    }
}

struct Block {
    /// (line number, content) with comments stripped.
    lines: Vec<(usize, String)>,
}

fn split_blocks(text: &str) -> Vec<Block> {
    let mut blocks: Vec<Block> = Vec::new();
    let mut current: Option<Block> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let trimmed = content.trim();
        if trimmed.is_empty() {
            if let Some(b) = current.take() {
                blocks.push(b);
            }
            continue;
        }
        let is_header = ["hypergroup ", "morphism ", "diagram "]
            .iter()
            .any(|h| trimmed.starts_with(h));
        if is_header {
            if let Some(b) = current.take() {
                blocks.push(b);
            }
            current = Some(Block {
                lines: vec![(line_no, trimmed.to_string())],
            });
        } else if let Some(b) = current.as_mut() {
            b.lines.push((line_no, trimmed.to_string()));
        } else {
            blocks.push(Block {
                lines: vec![(line_no, trimmed.to_string())],
            });
        }
    }
    if let Some(b) = current.take() {
        blocks.push(b);
    }
    blocks
}

/// Parse every document in the text. Hypergroup payloads are verified on
/// load; morphisms and diagrams are resolved against the hypergroup
/// documents of the same bundle and validated.
pub fn parse_documents(text: &str) -> Result<Bundle, LoadError> {
    let blocks = split_blocks(text);
    if blocks.is_empty() {
        return Err(LoadError::syntax(1, 1, "expected a document header"));
    }
    // First pass: hypergroups.
    let mut bundle = Bundle::default();
    let mut deferred: Vec<&Block> = Vec::new();
    for block in &blocks {
        let (line, header) = &block.lines[0];
        if header.starts_with("hypergroup") {
            bundle
                .docs
                .push(HgDocument::Hypergroup(parse_hypergroup_block(block)?));
        } else if header.starts_with("morphism") || header.starts_with("diagram") {
            deferred.push(block);
        } else {
            return Err(LoadError::syntax(
                *line,
                1,
                format!("expected 'hypergroup', 'morphism' or 'diagram', found '{header}'"),
            ));
        }
    }
    // Second pass: morphisms, which may reference any hypergroup above.
    let mut diagrams: Vec<&Block> = Vec::new();
    for block in deferred {
        if block.lines[0].1.starts_with("morphism") {
            let doc = parse_morphism_block(block, &bundle)?;
            bundle.docs.push(HgDocument::Morphism(doc));
        } else {
            diagrams.push(block);
        }
    }
    for block in diagrams {
        let doc = parse_diagram_block(block, &bundle)?;
        bundle.docs.push(HgDocument::Diagram(doc));
    }
    Ok(bundle)
}

fn parse_hypergroup_block(block: &Block) -> Result<HypergroupDoc, LoadError> {
    let (header_line, header) = &block.lines[0];
    let name = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["hypergroup", name] => name.to_string(),
        _ => {
            return Err(LoadError::syntax(
                *header_line,
                1,
                "expected 'hypergroup <name>'",
            ))
        }
    };
    let mut element_names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut inv: Option<Vec<usize>> = None;
    let mut cells: HashMap<(usize, usize), ElementSet> = HashMap::new();
    for (line, content) in &block.lines[1..] {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.first() {
            Some(&"elements") => {
                if !element_names.is_empty() {
                    return Err(LoadError::syntax(*line, 1, "duplicate 'elements' line"));
                }
                if tokens.len() < 2 {
                    return Err(LoadError::syntax(*line, 9, "expected at least one element"));
                }
                for t in &tokens[1..] {
                    if index.insert(t.to_string(), element_names.len()).is_some() {
                        return Err(LoadError::syntax(
                            *line,
                            1,
                            format!("duplicate element name '{t}'"),
                        ));
                    }
                    element_names.push(t.to_string());
                }
            }
            Some(&"inv") => {
                if element_names.is_empty() {
                    return Err(LoadError::syntax(*line, 1, "'inv' before 'elements'"));
                }
                if tokens.len() - 1 != element_names.len() {
                    return Err(LoadError::syntax(
                        *line,
                        1,
                        format!(
                            "'inv' lists {} entries, expected {}",
                            tokens.len() - 1,
                            element_names.len()
                        ),
                    ));
                }
                let mut out = Vec::new();
                for t in &tokens[1..] {
                    match index.get(*t) {
                        Some(&i) => out.push(i),
                        None => {
                            return Err(LoadError::syntax(
                                *line,
                                1,
                                format!("unknown element '{t}' in 'inv'"),
                            ))
                        }
                    }
                }
                inv = Some(out);
            }
            Some(_) => {
                // cell line: <ei> <ej> = <set>
                if element_names.is_empty() {
                    return Err(LoadError::syntax(*line, 1, "cell before 'elements'"));
                }
                let eq = content.find('=').ok_or_else(|| {
                    LoadError::syntax(*line, 1, "expected '<ei> <ej> = <members>'")
                })?;
                let lhs: Vec<&str> = content[..eq].split_whitespace().collect();
                if lhs.len() != 2 {
                    return Err(LoadError::syntax(
                        *line,
                        1,
                        "expected exactly two elements before '='",
                    ));
                }
                let x = *index.get(lhs[0]).ok_or_else(|| {
                    LoadError::syntax(*line, 1, format!("unknown element '{}'", lhs[0]))
                })?;
                let y = *index.get(lhs[1]).ok_or_else(|| {
                    LoadError::syntax(*line, 1, format!("unknown element '{}'", lhs[1]))
                })?;
                let mut set = ElementSet::EMPTY;
                for t in content[eq + 1..].split(',').map(str::trim) {
                    if t.is_empty() {
                        return Err(LoadError::syntax(*line, eq + 2, "empty member in cell"));
                    }
                    let e = *index.get(t).ok_or_else(|| {
                        LoadError::syntax(*line, 1, format!("unknown element '{t}' in cell"))
                    })?;
                    set.insert(e);
                }
                if cells.insert((x, y), set).is_some() {
                    return Err(LoadError::syntax(
                        *line,
                        1,
                        format!("duplicate cell '{} {}'", lhs[0], lhs[1]),
                    ));
                }
            }
            None => unreachable!("blank lines are stripped"),
        }
    }
    if element_names.is_empty() {
        return Err(LoadError::syntax(
            *header_line,
            1,
            "hypergroup block has no 'elements' line",
        ));
    }
    let n = element_names.len();
    let inv = inv.ok_or_else(|| {
        LoadError::syntax(*header_line, 1, "hypergroup block has no 'inv' line")
    })?;
    let mut table = vec![ElementSet::EMPTY; n * n];
    for x in 0..n {
        table[x] = ElementSet::singleton(x);
        table[x * n] = ElementSet::singleton(x);
    }
    table[0] = ElementSet::singleton(0);
    for ((x, y), set) in &cells {
        table[x * n + y] = *set;
    }
    // Explicit identity cells must agree with the forced singletons.
    for ((x, y), set) in &cells {
        if *x == 0 || *y == 0 {
            let expected = if *x == 0 { *y } else { *x };
            if *set != ElementSet::singleton(expected) {
                return Err(LoadError::syntax(
                    *header_line,
                    1,
                    format!(
                        "identity cell ({}, {}) must be {{{}}}",
                        element_names[*x], element_names[*y], element_names[expected]
                    ),
                ));
            }
        }
    }
    for x in 1..n {
        for y in 1..n {
            if table[x * n + y].is_empty() {
                return Err(LoadError::syntax(
                    *header_line,
                    1,
                    format!(
                        "missing cell '{} {}'",
                        element_names[x], element_names[y]
                    ),
                ));
            }
        }
    }
    let raw = RawHypergroup::new(n, inv, table);
    let hypergroup = Hypergroup::new(raw).map_err(|error| LoadError::Semantic {
        line: *header_line,
        context: format!("hypergroup {name}"),
        error,
    })?;
    Ok(HypergroupDoc {
        name,
        element_names,
        hypergroup,
    })
}

fn parse_morphism_block(block: &Block, bundle: &Bundle) -> Result<MorphismDoc, LoadError> {
    let (header_line, header) = &block.lines[0];
    let (name, dom_name, cod_name) =
        match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["morphism", name, ":", dom, "->", cod] => {
                (name.to_string(), dom.to_string(), cod.to_string())
            }
            _ => {
                return Err(LoadError::syntax(
                    *header_line,
                    1,
                    "expected 'morphism <name> : <dom> -> <cod>'",
                ))
            }
        };
    let dom = bundle.hypergroup_by_name(&dom_name).ok_or_else(|| {
        LoadError::syntax(
            *header_line,
            1,
            format!("unknown domain hypergroup '{dom_name}'"),
        )
    })?;
    let cod = bundle.hypergroup_by_name(&cod_name).ok_or_else(|| {
        LoadError::syntax(
            *header_line,
            1,
            format!("unknown codomain hypergroup '{cod_name}'"),
        )
    })?;
    let dom_index: HashMap<&str, usize> = dom
        .element_names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    let cod_index: HashMap<&str, usize> = cod
        .element_names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    let mut map: Vec<Option<usize>> = vec![None; dom.element_names.len()];
    for (line, content) in &block.lines[1..] {
        match content.split_whitespace().collect::<Vec<_>>()[..] {
            ["map", from, "->", to] => {
                let a = *dom_index.get(from).ok_or_else(|| {
                    LoadError::syntax(*line, 1, format!("unknown domain element '{from}'"))
                })?;
                let v = *cod_index.get(to).ok_or_else(|| {
                    LoadError::syntax(*line, 1, format!("unknown codomain element '{to}'"))
                })?;
                if map[a].replace(v).is_some() {
                    return Err(LoadError::syntax(
                        *line,
                        1,
                        format!("duplicate map entry for '{from}'"),
                    ));
                }
            }
            _ => {
                return Err(LoadError::syntax(
                    *line,
                    1,
                    "expected 'map <element> -> <element>'",
                ))
            }
        }
    }
    let mut resolved = Vec::with_capacity(map.len());
    for (i, v) in map.iter().enumerate() {
        match v {
            Some(v) => resolved.push(*v),
            None => {
                return Err(LoadError::syntax(
                    *header_line,
                    1,
                    format!("element '{}' has no map entry", dom.element_names[i]),
                ))
            }
        }
    }
    let morphism = Morphism::new(dom.hypergroup.clone(), cod.hypergroup.clone(), resolved)
        .map_err(|error| LoadError::Semantic {
            line: *header_line,
            context: format!("morphism {name}"),
            error,
        })?;
    Ok(MorphismDoc {
        name,
        dom_name,
        cod_name,
        morphism,
    })
}

fn parse_diagram_block(block: &Block, bundle: &Bundle) -> Result<DiagramDoc, LoadError> {
    let (header_line, header) = &block.lines[0];
    let name = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["diagram", name] => name.to_string(),
        _ => {
            return Err(LoadError::syntax(
                *header_line,
                1,
                "expected 'diagram <name>'",
            ))
        }
    };
    let mut node_names: Vec<String> = Vec::new();
    let mut object_names: Vec<String> = Vec::new();
    let mut objects: Vec<Hypergroup> = Vec::new();
    let mut arrow_names: Vec<(usize, usize, String)> = Vec::new();
    let mut arrows: Vec<((usize, usize), Morphism)> = Vec::new();
    for (line, content) in &block.lines[1..] {
        match content.split_whitespace().collect::<Vec<_>>()[..] {
            ["node", node, hg] => {
                if node_names.iter().any(|n| n == node) {
                    return Err(LoadError::syntax(
                        *line,
                        1,
                        format!("duplicate node '{node}'"),
                    ));
                }
                let doc = bundle.hypergroup_by_name(hg).ok_or_else(|| {
                    LoadError::syntax(*line, 1, format!("unknown hypergroup '{hg}'"))
                })?;
                node_names.push(node.to_string());
                object_names.push(hg.to_string());
                objects.push(doc.hypergroup.clone());
            }
            ["arrow", from, "->", to, morph] => {
                let i = node_names.iter().position(|n| n == from).ok_or_else(|| {
                    LoadError::syntax(*line, 1, format!("unknown node '{from}'"))
                })?;
                let j = node_names.iter().position(|n| n == to).ok_or_else(|| {
                    LoadError::syntax(*line, 1, format!("unknown node '{to}'"))
                })?;
                let m = bundle.morphism_by_name(morph).ok_or_else(|| {
                    LoadError::syntax(*line, 1, format!("unknown morphism '{morph}'"))
                })?;
                arrow_names.push((i, j, morph.to_string()));
                arrows.push(((i, j), m.morphism.clone()));
            }
            _ => {
                return Err(LoadError::syntax(
                    *line,
                    1,
                    "expected 'node <name> <hypergroup>' or 'arrow <a> -> <b> <morphism>'",
                ))
            }
        }
    }
    let diagram =
        DirectedDiagram::new(objects, arrows).map_err(|error| LoadError::Semantic {
            line: *header_line,
            context: format!("diagram {name}"),
            error,
        })?;
    Ok(DiagramDoc {
        name,
        node_names,
        object_names,
        arrow_names,
        diagram,
    })
}

/// Canonical serialization of a named hypergroup. Element names are
/// reordered so the identity comes first and the rest sort ascending; the
/// table follows the reordering. Identity cells are omitted.
pub fn serialize_hypergroup(doc: &HypergroupDoc) -> String {
    let n = doc.hypergroup.order();
    // perm[old] = new position
    let mut order: Vec<usize> = (1..n).collect();
    order.sort_by(|&a, &b| doc.element_names[a].cmp(&doc.element_names[b]));
    let mut old_of_new = vec![0usize];
    old_of_new.extend(order);
    let mut perm = vec![0usize; n];
    for (new, &old) in old_of_new.iter().enumerate() {
        perm[old] = new;
    }
    let names: Vec<&str> = old_of_new
        .iter()
        .map(|&old| doc.element_names[old].as_str())
        .collect();
    let g = &doc.hypergroup;
    let mut out = String::new();
    out.push_str(&format!("hypergroup {}\n", doc.name));
    out.push_str(&format!("elements {}\n", names.join(" ")));
    let inv_names: Vec<&str> = old_of_new
        .iter()
        .map(|&old| names[perm[g.inv(old)]])
        .collect();
    out.push_str(&format!("inv {}\n", inv_names.join(" ")));
    for new_x in 1..n {
        for new_y in 1..n {
            let cell = g.mul(old_of_new[new_x], old_of_new[new_y]);
            let mut members: Vec<usize> = cell.iter().map(|old| perm[old]).collect();
            members.sort_unstable();
            let rendered: Vec<&str> = members.into_iter().map(|m| names[m]).collect();
            out.push_str(&format!(
                "{} {} = {}\n",
                names[new_x],
                names[new_y],
                rendered.join(",")
            ));
        }
    }
    out
}

pub fn serialize_morphism(doc: &MorphismDoc, dom: &HypergroupDoc, cod: &HypergroupDoc) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "morphism {} : {} -> {}\n",
        doc.name, doc.dom_name, doc.cod_name
    ));
    // map lines follow the domain's canonical element order
    let mut order: Vec<usize> = (0..dom.element_names.len()).collect();
    order[1..].sort_by(|&a, &b| dom.element_names[a].cmp(&dom.element_names[b]));
    for a in order {
        out.push_str(&format!(
            "map {} -> {}\n",
            dom.element_names[a],
            cod.element_names[doc.morphism.apply(a)]
        ));
    }
    out
}

pub fn serialize_diagram(doc: &DiagramDoc) -> String {
    let mut out = String::new();
    out.push_str(&format!("diagram {}\n", doc.name));
    for (node, object) in doc.node_names.iter().zip(&doc.object_names) {
        out.push_str(&format!("node {node} {object}\n"));
    }
    for (i, j, morph) in &doc.arrow_names {
        out.push_str(&format!(
            "arrow {} -> {} {morph}\n",
            doc.node_names[*i], doc.node_names[*j]
        ));
    }
    out
}

/// Serialize every document of a bundle, blank-line separated, in document
/// order.
pub fn serialize_bundle(bundle: &Bundle) -> String {
    let mut parts = Vec::new();
    for doc in &bundle.docs {
        match doc {
            HgDocument::Hypergroup(h) => parts.push(serialize_hypergroup(h)),
            HgDocument::Morphism(m) => {
                let dom = bundle
                    .hypergroup_by_name(&m.dom_name)
                    .expect("bundle is resolved");
                let cod = bundle
                    .hypergroup_by_name(&m.cod_name)
                    .expect("bundle is resolved");
                parts.push(serialize_morphism(m, dom, cod));
            }
            HgDocument::Diagram(d) => parts.push(serialize_diagram(d)),
        }
    }
    parts.join("\n")
}

/// Wrap a constructed hypergroup in a document with synthesized element
/// names (`e0`, `e1`, .., zero-padded when needed so names sort correctly).
pub fn doc_with_default_names(name: &str, hg: Hypergroup) -> HypergroupDoc {
    let n = hg.order();
    let width = if n > 10 { 2 } else { 1 };
    let element_names = (0..n).map(|i| format!("e{i:0width$}")).collect();
    HypergroupDoc {
        name: name.to_string(),
        element_names,
        hypergroup: hg,
    }
}

/// Document for a quotient-style presentation: blocks named by their
/// minimal member in the base document's names, wrapped in brackets.
pub fn doc_for_blocks(
    name: &str,
    base: &HypergroupDoc,
    cosets: &[ElementSet],
    hg: Hypergroup,
) -> HypergroupDoc {
    let element_names = cosets
        .iter()
        .map(|b| {
            format!(
                "[{}]",
                base.element_names[b.min_element().expect("blocks are nonempty")]
            )
        })
        .collect();
    HypergroupDoc {
        name: name.to_string(),
        element_names,
        hypergroup: hg,
    }
}

/// Render a subcarrier as comma-separated member names.
pub fn render_members(doc: &HypergroupDoc, members: ElementSet) -> String {
    let names: Vec<&str> = members
        .iter()
        .map(|e| doc.element_names[e].as_str())
        .collect();
    names.join(",")
}

/// Parse a comma-separated element list against a document's names.
pub fn parse_members(doc: &HypergroupDoc, spec: &str) -> Result<ElementSet, String> {
    let mut out = ElementSet::EMPTY;
    for token in spec.split(',').map(str::trim) {
        if token.is_empty() {
            continue;
        }
        match doc.element_names.iter().position(|n| n == token) {
            Some(i) => out.insert(i),
            None => return Err(format!("unknown element '{token}'")),
        }
    }
    Ok(out)
}

/// Parse members into a validated subcarrier.
pub fn parse_subcarrier(doc: &HypergroupDoc, spec: &str) -> Result<SubCarrier, String> {
    let members = parse_members(doc, spec)?;
    SubCarrier::new(doc.hypergroup.clone(), members).map_err(|e| e.to_string())
}
