//! Plain-text stanza format for monoids, homomorphisms, extensions,
//! partitions, actions and factor sets.
//!
//! ```text
//! # comments start with '#'; blank lines are ignored
//! monoid <name> <size> <identity-index>
//! <size> rows of <size> integers          # row i lists the products i*j
//! hom <name> <dom-name> <cod-name>
//! <dom-size> integers on one line
//! extension <name>
//! kernel <monoid-name>                    # must validate as abelian group
//! total <monoid-name>
//! quotient <monoid-name>
//! k <hom-name>
//! e <hom-name>
//! partition <name> <N-size> <H-size>
//! <N*H> class ids on one line             # flat index n * H-size + h
//! action <name>
//! <H> rows of <N> integers
//! factorset <name>
//! <H> rows of <H> integers                # entries are N-indices
//! ```
//!
//! Lines are whitespace-insensitive; names are arbitrary non-whitespace
//! tokens, unique per kind. Everything a stanza refers to must be declared
//! somewhere in the loaded files (order does not matter across stanzas of
//! different kinds). Serialization round-trips: writing a value and
//! parsing it back yields the same value.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::equiv_action::{ActionTable, PairPartition};
use crate::cohomology::FactorTable;
use crate::extensions::ExtensionDiagram;
use crate::finite_algebra::{FiniteAbelianGroup, FiniteMonoid, MonoidHom};

/// A parse or resolution failure, located by file and line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{file}:{line}: {message}")]
pub struct FormatError {
    pub file: String,
    pub line: usize,
    pub message: String,
}

impl FormatError {
    fn new(file: &str, line: usize, message: impl Into<String>) -> Self {
        FormatError { file: file.to_string(), line, message: message.into() }
    }
}

/// Named values loaded from stanza files.
#[derive(Debug, Clone, Default)]
pub struct Workspace {
    monoids: BTreeMap<String, FiniteMonoid>,
    homs: BTreeMap<String, MonoidHom>,
    extensions: BTreeMap<String, ExtensionDiagram>,
    partitions: BTreeMap<String, PairPartition>,
    actions: BTreeMap<String, ActionTable>,
    factor_sets: BTreeMap<String, FactorTable>,
    hom_refs: BTreeMap<String, (String, String)>,
    extension_refs: BTreeMap<String, ExtensionRefs>,
}

/// The names an extension stanza was declared with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionRefs {
    pub kernel: String,
    pub total: String,
    pub quotient: String,
    pub kernel_map: String,
    pub quotient_map: String,
}

impl Workspace {
    /// Parse and resolve one or more `(label, contents)` sources.
    pub fn parse(sources: &[(&str, &str)]) -> Result<Self, FormatError> {
        let mut decls = Vec::new();
        for (file, text) in sources {
            parse_stanzas(file, text, &mut decls)?;
        }
        resolve(decls)
    }

    /// Convenience wrapper for a single anonymous source.
    pub fn parse_str(text: &str) -> Result<Self, FormatError> {
        Self::parse(&[("<input>", text)])
    }

    pub fn monoid(&self, name: &str) -> Option<&FiniteMonoid> {
        self.monoids.get(name)
    }

    pub fn hom(&self, name: &str) -> Option<&MonoidHom> {
        self.homs.get(name)
    }

    pub fn extension(&self, name: &str) -> Option<&ExtensionDiagram> {
        self.extensions.get(name)
    }

    pub fn partition(&self, name: &str) -> Option<&PairPartition> {
        self.partitions.get(name)
    }

    pub fn action(&self, name: &str) -> Option<&ActionTable> {
        self.actions.get(name)
    }

    pub fn factor_set(&self, name: &str) -> Option<&FactorTable> {
        self.factor_sets.get(name)
    }

    /// The monoid under `name`, validated as an abelian group.
    pub fn abelian_group(&self, name: &str) -> Option<Result<FiniteAbelianGroup, String>> {
        self.monoids
            .get(name)
            .map(|m| FiniteAbelianGroup::new(m.clone()).map_err(|e| e.to_string()))
    }

    pub fn monoid_names(&self) -> impl Iterator<Item = &str> {
        self.monoids.keys().map(String::as_str)
    }

    pub fn extension_names(&self) -> impl Iterator<Item = &str> {
        self.extensions.keys().map(String::as_str)
    }

    /// The declared stanza references of an extension.
    pub fn extension_refs(&self, name: &str) -> Option<&ExtensionRefs> {
        self.extension_refs.get(name)
    }

    /// The declared domain and codomain names of a hom.
    pub fn hom_refs(&self, name: &str) -> Option<&(String, String)> {
        self.hom_refs.get(name)
    }
}

#[derive(Debug)]
enum Decl {
    Monoid { at: (String, usize), name: String, identity: usize, rows: Vec<Vec<usize>> },
    Hom { at: (String, usize), name: String, dom: String, cod: String, map: Vec<usize> },
    Extension { at: (String, usize), name: String, refs: ExtensionRefs },
    Partition { at: (String, usize), name: String, n_size: usize, h_size: usize, ids: Vec<usize> },
    Action { at: (String, usize), name: String, rows: Vec<Vec<usize>> },
    FactorSet { at: (String, usize), name: String, rows: Vec<Vec<usize>> },
}

struct Line<'a> {
    number: usize,
    tokens: Vec<&'a str>,
}

const KEYWORDS: &[&str] = &["monoid", "hom", "extension", "partition", "action", "factorset"];

fn tokenize<'a>(text: &'a str) -> Vec<Line<'a>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                return None;
            }
            Some(Line { number: i + 1, tokens: trimmed.split_whitespace().collect() })
        })
        .collect()
}

fn parse_usize(file: &str, line: usize, token: &str, what: &str) -> Result<usize, FormatError> {
    token
        .parse()
        .map_err(|_| FormatError::new(file, line, format!("expected {what}, found '{token}'")))
}

fn parse_int_row(file: &str, line: &Line) -> Result<Vec<usize>, FormatError> {
    line.tokens
        .iter()
        .map(|t| parse_usize(file, line.number, t, "an integer"))
        .collect()
}

fn is_data_line(line: &Line) -> bool {
    line.tokens.first().is_some_and(|t| t.chars().all(|c| c.is_ascii_digit()))
}

fn parse_stanzas(file: &str, text: &str, decls: &mut Vec<Decl>) -> Result<(), FormatError> {
    let lines = tokenize(text);
    let mut i = 0;
    while i < lines.len() {
        let line = &lines[i];
        let head = line.tokens[0];
        let at = (file.to_string(), line.number);
        match head {
            "monoid" => {
                if line.tokens.len() != 4 {
                    return Err(FormatError::new(
                        file,
                        line.number,
                        "expected 'monoid <name> <size> <identity>'",
                    ));
                }
                let name = line.tokens[1].to_string();
                let size = parse_usize(file, line.number, line.tokens[2], "a size")?;
                let identity = parse_usize(file, line.number, line.tokens[3], "an identity index")?;
                let mut rows = Vec::with_capacity(size);
                for r in 0..size {
                    let row_line = lines.get(i + 1 + r).ok_or_else(|| {
                        FormatError::new(file, line.number, "monoid table is truncated")
                    })?;
                    let row = parse_int_row(file, row_line)?;
                    if row.len() != size {
                        return Err(FormatError::new(
                            file,
                            row_line.number,
                            format!("expected {size} entries, found {}", row.len()),
                        ));
                    }
                    rows.push(row);
                }
                i += 1 + size;
                decls.push(Decl::Monoid { at, name, identity, rows });
            }
            "hom" => {
                if line.tokens.len() != 4 {
                    return Err(FormatError::new(
                        file,
                        line.number,
                        "expected 'hom <name> <dom> <cod>'",
                    ));
                }
                let name = line.tokens[1].to_string();
                let dom = line.tokens[2].to_string();
                let cod = line.tokens[3].to_string();
                let map_line = lines
                    .get(i + 1)
                    .filter(|l| is_data_line(l))
                    .ok_or_else(|| FormatError::new(file, line.number, "hom map is missing"))?;
                let map = parse_int_row(file, map_line)?;
                i += 2;
                decls.push(Decl::Hom { at, name, dom, cod, map });
            }
            "extension" => {
                if line.tokens.len() != 2 {
                    return Err(FormatError::new(file, line.number, "expected 'extension <name>'"));
                }
                let name = line.tokens[1].to_string();
                let mut fields: BTreeMap<&str, String> = BTreeMap::new();
                let mut j = i + 1;
                while let Some(l) = lines.get(j) {
                    let key = l.tokens[0];
                    if !matches!(key, "kernel" | "total" | "quotient" | "k" | "e") {
                        break;
                    }
                    if l.tokens.len() != 2 {
                        return Err(FormatError::new(
                            file,
                            l.number,
                            format!("expected '{key} <name>'"),
                        ));
                    }
                    if fields.insert(key, l.tokens[1].to_string()).is_some() {
                        return Err(FormatError::new(
                            file,
                            l.number,
                            format!("duplicate '{key}' in extension stanza"),
                        ));
                    }
                    j += 1;
                }
                let field = |key: &str| {
                    fields.get(key).cloned().ok_or_else(|| {
                        FormatError::new(file, line.number, format!("extension is missing '{key}'"))
                    })
                };
                let refs = ExtensionRefs {
                    kernel: field("kernel")?,
                    total: field("total")?,
                    quotient: field("quotient")?,
                    kernel_map: field("k")?,
                    quotient_map: field("e")?,
                };
                i = j;
                decls.push(Decl::Extension { at, name, refs });
            }
            "partition" => {
                if line.tokens.len() != 4 {
                    return Err(FormatError::new(
                        file,
                        line.number,
                        "expected 'partition <name> <N-size> <H-size>'",
                    ));
                }
                let name = line.tokens[1].to_string();
                let n_size = parse_usize(file, line.number, line.tokens[2], "the kernel size")?;
                let h_size = parse_usize(file, line.number, line.tokens[3], "the quotient size")?;
                let ids_line = lines
                    .get(i + 1)
                    .filter(|l| is_data_line(l))
                    .ok_or_else(|| {
                        FormatError::new(file, line.number, "partition class ids are missing")
                    })?;
                let ids = parse_int_row(file, ids_line)?;
                if ids.len() != n_size * h_size {
                    return Err(FormatError::new(
                        file,
                        ids_line.number,
                        format!("expected {} class ids, found {}", n_size * h_size, ids.len()),
                    ));
                }
                i += 2;
                decls.push(Decl::Partition { at, name, n_size, h_size, ids });
            }
            "action" | "factorset" => {
                if line.tokens.len() != 2 {
                    return Err(FormatError::new(
                        file,
                        line.number,
                        format!("expected '{head} <name>'"),
                    ));
                }
                let name = line.tokens[1].to_string();
                let mut rows = Vec::new();
                let mut j = i + 1;
                while let Some(l) = lines.get(j).filter(|l| is_data_line(l)) {
                    rows.push(parse_int_row(file, l)?);
                    j += 1;
                }
                if rows.is_empty() {
                    return Err(FormatError::new(file, line.number, format!("{head} has no rows")));
                }
                let width = rows[0].len();
                if let Some(bad) = rows.iter().position(|r| r.len() != width) {
                    return Err(FormatError::new(
                        file,
                        line.number,
                        format!("{head} row {bad} has {} entries, expected {width}", rows[bad].len()),
                    ));
                }
                i = j;
                if head == "action" {
                    decls.push(Decl::Action { at, name, rows });
                } else {
                    if rows.len() != width {
                        return Err(FormatError::new(
                            file,
                            line.number,
                            format!("factorset must be square, found {}x{width}", rows.len()),
                        ));
                    }
                    decls.push(Decl::FactorSet { at, name, rows });
                }
            }
            other if KEYWORDS.contains(&other) => unreachable!(),
            other => {
                return Err(FormatError::new(
                    file,
                    line.number,
                    format!("unexpected '{other}' (not a stanza keyword)"),
                ));
            }
        }
    }
    Ok(())
}

fn resolve(decls: Vec<Decl>) -> Result<Workspace, FormatError> {
    let mut ws = Workspace::default();
    let err = |at: &(String, usize), m: String| FormatError::new(&at.0, at.1, m);

    // Monoids first, then anything that references only monoids, then
    // extensions. Declaration order within the files does not matter.
    for decl in &decls {
        if let Decl::Monoid { at, name, identity, rows } = decl {
            let m = FiniteMonoid::from_rows(rows.clone(), *identity)
                .map_err(|e| err(at, format!("monoid '{name}': {e}")))?;
            if ws.monoids.insert(name.clone(), m).is_some() {
                return Err(err(at, format!("duplicate monoid name '{name}'")));
            }
        }
    }
    for decl in &decls {
        match decl {
            Decl::Hom { at, name, dom, cod, map } => {
                let domain = ws
                    .monoids
                    .get(dom)
                    .ok_or_else(|| err(at, format!("unknown monoid '{dom}'")))?;
                let codomain = ws
                    .monoids
                    .get(cod)
                    .ok_or_else(|| err(at, format!("unknown monoid '{cod}'")))?;
                let hom = MonoidHom::new(domain.clone(), codomain.clone(), map.clone())
                    .map_err(|e| err(at, format!("hom '{name}': {e}")))?;
                if ws.homs.insert(name.clone(), hom).is_some() {
                    return Err(err(at, format!("duplicate hom name '{name}'")));
                }
                ws.hom_refs.insert(name.clone(), (dom.clone(), cod.clone()));
            }
            Decl::Partition { at, name, n_size, h_size, ids } => {
                let p = PairPartition::new(*n_size, *h_size, ids.clone())
                    .map_err(|e| err(at, format!("partition '{name}': {e}")))?;
                if ws.partitions.insert(name.clone(), p).is_some() {
                    return Err(err(at, format!("duplicate partition name '{name}'")));
                }
            }
            Decl::Action { at, name, rows } => {
                let n_size = rows[0].len();
                if let Some(&bad) = rows.iter().flatten().find(|&&v| v >= n_size) {
                    return Err(err(at, format!("action '{name}': entry {bad} out of range")));
                }
                let flat: Vec<usize> = rows.iter().flatten().copied().collect();
                let a = ActionTable::new(rows.len(), n_size, flat);
                if ws.actions.insert(name.clone(), a).is_some() {
                    return Err(err(at, format!("duplicate action name '{name}'")));
                }
            }
            Decl::FactorSet { at, name, rows } => {
                let flat: Vec<usize> = rows.iter().flatten().copied().collect();
                let f = FactorTable::new(rows.len(), flat);
                if ws.factor_sets.insert(name.clone(), f).is_some() {
                    return Err(err(at, format!("duplicate factorset name '{name}'")));
                }
            }
            Decl::Monoid { .. } | Decl::Extension { .. } => {}
        }
    }
    for decl in &decls {
        if let Decl::Extension { at, name, refs } = decl {
            let monoid = |n: &String| {
                ws.monoids
                    .get(n)
                    .cloned()
                    .ok_or_else(|| err(at, format!("unknown monoid '{n}'")))
            };
            let hom = |n: &String| {
                ws.homs
                    .get(n)
                    .cloned()
                    .ok_or_else(|| err(at, format!("unknown hom '{n}'")))
            };
            let kernel = FiniteAbelianGroup::new(monoid(&refs.kernel)?)
                .map_err(|e| err(at, format!("kernel '{}' is not an abelian group: {e}", refs.kernel)))?;
            let total = monoid(&refs.total)?;
            let quotient = monoid(&refs.quotient)?;
            let k = hom(&refs.kernel_map)?;
            let e = hom(&refs.quotient_map)?;
            if k.domain() != kernel.monoid() || k.codomain() != &total {
                return Err(err(
                    at,
                    format!("hom '{}' does not map the kernel into the total monoid", refs.kernel_map),
                ));
            }
            if e.domain() != &total || e.codomain() != &quotient {
                return Err(err(
                    at,
                    format!("hom '{}' does not map the total monoid onto the quotient", refs.quotient_map),
                ));
            }
            let ext = ExtensionDiagram::validate(kernel, total, quotient, k, e)
                .map_err(|e| err(at, format!("extension '{name}': {e}")))?;
            if ws.extensions.insert(name.clone(), ext).is_some() {
                return Err(err(at, format!("duplicate extension name '{name}'")));
            }
            ws.extension_refs.insert(name.clone(), refs.clone());
        }
    }
    Ok(ws)
}

fn push_row(out: &mut String, row: impl Iterator<Item = usize>) {
    let mut first = true;
    for v in row {
        if !first {
            out.push(' ');
        }
        let _ = write!(out, "{v}");
        first = false;
    }
    out.push('\n');
}

pub fn write_monoid(name: &str, m: &FiniteMonoid) -> String {
    let mut out = format!("monoid {name} {} {}\n", m.size(), m.identity());
    for a in m.elements() {
        push_row(&mut out, m.elements().map(|b| m.mul(a, b)));
    }
    out
}

pub fn write_hom(name: &str, dom_name: &str, cod_name: &str, hom: &MonoidHom) -> String {
    let mut out = format!("hom {name} {dom_name} {cod_name}\n");
    push_row(&mut out, hom.map().iter().copied());
    out
}

pub fn write_extension_refs(name: &str, refs: &ExtensionRefs) -> String {
    format!(
        "extension {name}\nkernel {}\ntotal {}\nquotient {}\nk {}\ne {}\n",
        refs.kernel, refs.total, refs.quotient, refs.kernel_map, refs.quotient_map
    )
}

pub fn write_partition(name: &str, p: &PairPartition) -> String {
    let mut out = format!("partition {name} {} {}\n", p.n_size(), p.h_size());
    push_row(&mut out, p.class_ids().iter().copied());
    out
}

pub fn write_action(name: &str, a: &ActionTable) -> String {
    let mut out = format!("action {name}\n");
    for row in a.rows() {
        push_row(&mut out, row.iter().copied());
    }
    out
}

pub fn write_factor_set(name: &str, f: &FactorTable) -> String {
    let mut out = format!("factorset {name}\n");
    for x in 0..f.h_size() {
        push_row(&mut out, (0..f.h_size()).map(|y| f.get(x, y)));
    }
    out
}

/// Emit a full extension as stanzas with derived names: the three carrier
/// monoids, the two homs and the extension record itself.
pub fn write_extension_bundle(prefix: &str, ext: &ExtensionDiagram) -> String {
    let refs = ExtensionRefs {
        kernel: format!("{prefix}_kernel"),
        total: format!("{prefix}_total"),
        quotient: format!("{prefix}_quotient"),
        kernel_map: format!("{prefix}_k"),
        quotient_map: format!("{prefix}_e"),
    };
    let mut out = String::new();
    out.push_str(&write_monoid(&refs.kernel, ext.kernel().monoid()));
    out.push_str(&write_monoid(&refs.total, ext.total()));
    out.push_str(&write_monoid(&refs.quotient, ext.quotient()));
    out.push_str(&write_hom(&refs.kernel_map, &refs.kernel, &refs.total, ext.kernel_map()));
    out.push_str(&write_hom(&refs.quotient_map, &refs.total, &refs.quotient, ext.quotient_map()));
    out.push_str(&write_extension_refs(prefix, &refs));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_algebra::{adjoin_absorbing, cyclic_group, meet_semilattice};

    const ABSORBING: &str = "\
# Z2 with an absorbing element over the two-element semilattice
monoid z2 2 0
0 1
1 0
monoid z2inf 3 0
0 1 2
1 0 2
2 2 2
monoid sl2 2 0
0 1
1 1
hom incl z2 z2inf
0 1
hom proj z2inf sl2
0 0 1
extension zext
kernel z2
total z2inf
quotient sl2
k incl
e proj
";

    #[test]
    fn parses_the_absorbing_extension() {
        let ws = Workspace::parse_str(ABSORBING).unwrap();
        assert_eq!(ws.monoid("z2inf").unwrap(), &adjoin_absorbing(&cyclic_group(2)));
        assert_eq!(ws.monoid("sl2").unwrap(), &meet_semilattice(2));
        let ext = ws.extension("zext").unwrap();
        assert!(ext.is_cosetal());
    }

    #[test]
    fn stanza_order_does_not_matter_across_kinds() {
        // Extension stanza first; all referenced names appear later.
        let reordered = {
            let (head, tail) = ABSORBING.split_at(ABSORBING.find("extension").unwrap());
            format!("{tail}\n{head}")
        };
        let ws = Workspace::parse_str(&reordered).unwrap();
        assert!(ws.extension("zext").is_some());
    }

    #[test]
    fn malformed_row_reports_line() {
        let bad = "monoid z2 2 0\n0 1\n1\n";
        let err = Workspace::parse_str(bad).unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("expected 2 entries"));
    }

    #[test]
    fn unknown_reference_is_an_error() {
        let bad = "hom f nowhere nowhere\n0\n";
        let err = Workspace::parse_str(bad).unwrap_err();
        assert!(err.message.contains("unknown monoid 'nowhere'"));
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let bad = "monoid m 1 0\n0\nmonoid m 1 0\n0\n";
        let err = Workspace::parse_str(bad).unwrap_err();
        assert!(err.message.contains("duplicate monoid name"));
    }

    #[test]
    fn non_group_kernel_is_reported() {
        let bad = "\
monoid sl2 2 0
0 1
1 1
hom id sl2 sl2
0 1
extension broken
kernel sl2
total sl2
quotient sl2
k id
e id
";
        let err = Workspace::parse_str(bad).unwrap_err();
        assert!(err.message.contains("not an abelian group"));
    }

    #[test]
    fn writers_round_trip() {
        let ws = Workspace::parse_str(ABSORBING).unwrap();
        let ext = ws.extension("zext").unwrap();
        let mut text = String::new();
        text.push_str(&write_monoid("z2", ws.monoid("z2").unwrap()));
        text.push_str(&write_monoid("z2inf", ws.monoid("z2inf").unwrap()));
        text.push_str(&write_monoid("sl2", ws.monoid("sl2").unwrap()));
        text.push_str(&write_hom("incl", "z2", "z2inf", ws.hom("incl").unwrap()));
        text.push_str(&write_hom("proj", "z2inf", "sl2", ws.hom("proj").unwrap()));
        text.push_str(&write_extension_refs("zext", ws.extension_refs("zext").unwrap()));
        let again = Workspace::parse_str(&text).unwrap();
        assert_eq!(again.extension("zext").unwrap(), ext);

        let p = PairPartition::new(2, 2, vec![0, 1, 2, 1]).unwrap();
        let a = ActionTable::trivial(2, 2);
        let f = FactorTable::new(2, vec![0, 0, 0, 1]);
        let text = format!(
            "{}{}{}",
            write_partition("E", &p),
            write_action("phi", &a),
            write_factor_set("g", &f)
        );
        let ws = Workspace::parse_str(&text).unwrap();
        assert_eq!(ws.partition("E").unwrap(), &p);
        assert_eq!(ws.action("phi").unwrap(), &a);
        assert_eq!(ws.factor_set("g").unwrap(), &f);
    }

    #[test]
    fn extension_bundle_round_trips() {
        let ws = Workspace::parse_str(ABSORBING).unwrap();
        let ext = ws.extension("zext").unwrap();
        let bundle = write_extension_bundle("sum", ext);
        let again = Workspace::parse_str(&bundle).unwrap();
        assert_eq!(again.extension("sum").unwrap(), ext);
    }
}
