//! Name-keyed registries for group families, connection-set builders, and
//! SDP formulations, so that command-line specs like `sym:4` or `efp:2`
//! resolve to an implementation at runtime.

use std::path::Path;

use crate::apps::{efp_connection, gl_connection};
use crate::characters::{
    abelian_character_table, s3_irreps, symmetric_table_for, CharacterTable, IrrepMatrices,
};
use crate::error::{read_file, Error, Result};
use crate::graphs::ConnectionSet;
use crate::groups::{import_cayley_table, make_abelian_product, make_general_linear, make_symmetric, FiniteGroup, GroupKind};
use crate::theta::{build_sdp_a, build_sdp_c, CayleyGraphSpec, SdpInstance};

pub trait GroupFamily: Send + Sync {
    fn name(&self) -> &'static str;
    /// Argument grammar shown in help text.
    fn syntax(&self) -> &'static str;
    fn build(&self, args: &str) -> Result<FiniteGroup>;
    /// The family's own character table, when it has one.
    fn character_table(&self, _group: &FiniteGroup) -> Option<Result<CharacterTable>> {
        None
    }
}

pub trait ConnectionBuilder: Send + Sync {
    fn name(&self) -> &'static str;
    fn syntax(&self) -> &'static str;
    fn build(&self, group: &FiniteGroup, args: &str) -> Result<ConnectionSet>;
}

pub trait SdpFormulation: Send + Sync {
    fn name(&self) -> &'static str;
    fn describe(&self) -> &'static str;
    fn build(&self, spec: &CayleyGraphSpec, irreps: Option<&IrrepMatrices>) -> Result<SdpInstance>;
}

fn list<T: std::str::FromStr>(args: &str, what: &str) -> Result<Vec<T>> {
    args.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::invalid(format!("bad {what} {t:?}")))
        })
        .collect()
}

fn single<T: std::str::FromStr>(args: &str, what: &str) -> Result<T> {
    args.trim()
        .parse()
        .map_err(|_| Error::invalid(format!("bad {what} {args:?}")))
}

struct Symmetric;

impl GroupFamily for Symmetric {
    fn name(&self) -> &'static str {
        "sym"
    }
    fn syntax(&self) -> &'static str {
        "sym:n"
    }
    fn build(&self, args: &str) -> Result<FiniteGroup> {
        make_symmetric(single(args, "degree")?)
    }
    fn character_table(&self, group: &FiniteGroup) -> Option<Result<CharacterTable>> {
        Some(symmetric_table_for(group))
    }
}

struct Cyclic;

impl GroupFamily for Cyclic {
    fn name(&self) -> &'static str {
        "cyclic"
    }
    fn syntax(&self) -> &'static str {
        "cyclic:m1[,m2,...]"
    }
    fn build(&self, args: &str) -> Result<FiniteGroup> {
        make_abelian_product(&list::<usize>(args, "modulus")?)
    }
    fn character_table(&self, group: &FiniteGroup) -> Option<Result<CharacterTable>> {
        Some(abelian_character_table(group))
    }
}

struct GeneralLinear;

impl GroupFamily for GeneralLinear {
    fn name(&self) -> &'static str {
        "gl"
    }
    fn syntax(&self) -> &'static str {
        "gl:q,n"
    }
    fn build(&self, args: &str) -> Result<FiniteGroup> {
        match list::<usize>(args, "parameter")?.as_slice() {
            &[q, n] => make_general_linear(q, n),
            _ => Err(Error::invalid(format!("expected gl:q,n, got gl:{args}"))),
        }
    }
}

struct TableFileFamily;

impl GroupFamily for TableFileFamily {
    fn name(&self) -> &'static str {
        "table"
    }
    fn syntax(&self) -> &'static str {
        "table:FILE (Cayley table: order line, then order rows of 0-based products)"
    }
    fn build(&self, args: &str) -> Result<FiniteGroup> {
        import_cayley_table(Path::new(args))
    }
}

struct Efp;

impl ConnectionBuilder for Efp {
    fn name(&self) -> &'static str {
        "efp"
    }
    fn syntax(&self) -> &'static str {
        "efp:k (permutations with fewer than k fixed points)"
    }
    fn build(&self, group: &FiniteGroup, args: &str) -> Result<ConnectionSet> {
        efp_connection(group, single(args, "k")?)
    }
}

struct GlRank;

impl ConnectionBuilder for GlRank {
    fn name(&self) -> &'static str {
        "gl-rank"
    }
    fn syntax(&self) -> &'static str {
        "gl-rank:k (matrices with rank(A - I) > n - k)"
    }
    fn build(&self, group: &FiniteGroup, args: &str) -> Result<ConnectionSet> {
        gl_connection(group, single(args, "k")?)
    }
}

struct Classes;

impl ConnectionBuilder for Classes {
    fn name(&self) -> &'static str {
        "classes"
    }
    fn syntax(&self) -> &'static str {
        "classes:i,j,... (0-based class indices)"
    }
    fn build(&self, group: &FiniteGroup, args: &str) -> Result<ConnectionSet> {
        ConnectionSet::from_classes(group, &list::<usize>(args, "class index")?)
    }
}

/// Splits on commas and whitespace outside parentheses.
fn element_tokens(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut depth = 0usize;
    for ch in text.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(ch);
            }
            '{' | '}' if depth == 0 => {}
            c if depth == 0 && (c == ',' || c.is_whitespace()) => {
                if !current.is_empty() {
                    out.push(std::mem::take(&mut current));
                }
            }
            c => current.push(c),
        }
    }
    if !current.is_empty() {
        out.push(current);
    }
    out
}

/// Resolves element tokens: an element label first, then a 0-based index.
pub fn parse_elements(group: &FiniteGroup, text: &str) -> Result<Vec<usize>> {
    let labels: Vec<String> = group.elements().map(|a| group.element_label(a)).collect();
    element_tokens(text)
        .into_iter()
        .map(|tok| {
            let compact: String = tok.chars().filter(|c| !c.is_whitespace()).collect();
            if let Some(i) = labels
                .iter()
                .position(|l| l.chars().filter(|c| !c.is_whitespace()).collect::<String>() == compact)
            {
                return Ok(i);
            }
            match tok.parse::<usize>() {
                Ok(i) if i < group.order() => Ok(i),
                _ => Err(Error::invalid(format!("unknown element {tok:?}"))),
            }
        })
        .collect()
}

struct Elements;

impl ConnectionBuilder for Elements {
    fn name(&self) -> &'static str {
        "elements"
    }
    fn syntax(&self) -> &'static str {
        "elements:{a,b,...} or elements:FILE (element labels or 0-based indices)"
    }
    fn build(&self, group: &FiniteGroup, args: &str) -> Result<ConnectionSet> {
        let text = if args.trim_start().starts_with('{') {
            args.to_string()
        } else {
            read_file(Path::new(args))?
        };
        ConnectionSet::new(group, parse_elements(group, &text)?)
    }
}

struct Empty;

impl ConnectionBuilder for Empty {
    fn name(&self) -> &'static str {
        "empty"
    }
    fn syntax(&self) -> &'static str {
        "empty"
    }
    fn build(&self, group: &FiniteGroup, args: &str) -> Result<ConnectionSet> {
        if !args.is_empty() {
            return Err(Error::invalid("the empty connection set takes no arguments"));
        }
        Ok(ConnectionSet::empty(group))
    }
}

struct FullMatrix;

impl SdpFormulation for FullMatrix {
    fn name(&self) -> &'static str {
        "A"
    }
    fn describe(&self) -> &'static str {
        "one |G| x |G| block, trace 1, zero on edges"
    }
    fn build(&self, spec: &CayleyGraphSpec, _irreps: Option<&IrrepMatrices>) -> Result<SdpInstance> {
        build_sdp_a(spec)
    }
}

struct FourierBlocks;

impl SdpFormulation for FourierBlocks {
    fn name(&self) -> &'static str {
        "C"
    }
    fn describe(&self) -> &'static str {
        "one block per irreducible representation"
    }
    fn build(&self, spec: &CayleyGraphSpec, irreps: Option<&IrrepMatrices>) -> Result<SdpInstance> {
        if let Some(reps) = irreps {
            return build_sdp_c(spec, reps);
        }
        let group = spec.group();
        let derived = if group.is_abelian() {
            IrrepMatrices::from_linear_characters(&abelian_character_table(group)?)?
        } else if group.kind() == (GroupKind::Symmetric { n: 3 }) {
            s3_irreps(group)?
        } else {
            return Err(Error::NeedsIrreps);
        };
        build_sdp_c(spec, &derived)
    }
}

pub struct Registry {
    groups: Vec<Box<dyn GroupFamily>>,
    connections: Vec<Box<dyn ConnectionBuilder>>,
    formulations: Vec<Box<dyn SdpFormulation>>,
}

impl Default for Registry {
    fn default() -> Self {
        Registry::standard()
    }
}

fn split_spec(spec: &str) -> (&str, &str) {
    spec.split_once(':').unwrap_or((spec, ""))
}

impl Registry {
    pub fn empty() -> Self {
        Registry {
            groups: Vec::new(),
            connections: Vec::new(),
            formulations: Vec::new(),
        }
    }

    pub fn standard() -> Self {
        let mut r = Registry::empty();
        r.register_group(Box::new(Symmetric));
        r.register_group(Box::new(Cyclic));
        r.register_group(Box::new(GeneralLinear));
        r.register_group(Box::new(TableFileFamily));
        r.register_connection(Box::new(Efp));
        r.register_connection(Box::new(GlRank));
        r.register_connection(Box::new(Classes));
        r.register_connection(Box::new(Elements));
        r.register_connection(Box::new(Empty));
        r.register_formulation(Box::new(FullMatrix));
        r.register_formulation(Box::new(FourierBlocks));
        r
    }

    /// A later registration under the same name replaces the earlier one.
    pub fn register_group(&mut self, family: Box<dyn GroupFamily>) {
        self.groups.retain(|g| g.name() != family.name());
        self.groups.push(family);
    }

    pub fn register_connection(&mut self, builder: Box<dyn ConnectionBuilder>) {
        self.connections.retain(|c| c.name() != builder.name());
        self.connections.push(builder);
    }

    pub fn register_formulation(&mut self, formulation: Box<dyn SdpFormulation>) {
        self.formulations.retain(|f| f.name() != formulation.name());
        self.formulations.push(formulation);
    }

    pub fn group_family(&self, name: &str) -> Result<&dyn GroupFamily> {
        self.groups
            .iter()
            .find(|g| g.name() == name)
            .map(|g| g.as_ref())
            .ok_or_else(|| Error::invalid(format!("unknown group family {name:?}; known: {}", self.group_names().join(", "))))
    }

    pub fn connection_builder(&self, name: &str) -> Result<&dyn ConnectionBuilder> {
        self.connections
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
            .ok_or_else(|| {
                Error::invalid(format!(
                    "unknown connection builder {name:?}; known: {}",
                    self.connection_names().join(", ")
                ))
            })
    }

    pub fn formulation(&self, name: &str) -> Result<&dyn SdpFormulation> {
        self.formulations
            .iter()
            .find(|f| f.name().eq_ignore_ascii_case(name))
            .map(|f| f.as_ref())
            .ok_or_else(|| Error::invalid(format!("unknown formulation {name:?}")))
    }

    pub fn group_names(&self) -> Vec<&'static str> {
        self.groups.iter().map(|g| g.name()).collect()
    }

    pub fn connection_names(&self) -> Vec<&'static str> {
        self.connections.iter().map(|c| c.name()).collect()
    }

    pub fn formulation_names(&self) -> Vec<&'static str> {
        self.formulations.iter().map(|f| f.name()).collect()
    }

    /// Builds a group from `family:args` and returns the family's own
    /// character table when it has one.
    pub fn group(&self, spec: &str) -> Result<(FiniteGroup, Option<CharacterTable>)> {
        let (name, args) = split_spec(spec);
        let family = self.group_family(name)?;
        let group = family.build(args)?;
        let table = family.character_table(&group).transpose()?;
        Ok((group, table))
    }

    pub fn connection(&self, group: &FiniteGroup, spec: &str) -> Result<ConnectionSet> {
        let (name, args) = split_spec(spec);
        self.connection_builder(name)?.build(group, args)
    }

    pub fn group_syntax(&self) -> Vec<&'static str> {
        self.groups.iter().map(|g| g.syntax()).collect()
    }

    pub fn connection_syntax(&self) -> Vec<&'static str> {
        self.connections.iter().map(|c| c.syntax()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_specs() {
        let r = Registry::standard();
        let (g, t) = r.group("sym:4").unwrap();
        assert!(t.is_some());
        assert_eq!(r.connection(&g, "efp:1").unwrap().len(), 9);
        assert_eq!(r.connection(&g, "empty").unwrap().len(), 0);
        assert_eq!(r.connection(&g, "classes:1").unwrap().len(), 6);
        let (z5, _) = r.group("cyclic:5").unwrap();
        assert_eq!(r.connection(&z5, "elements:{1,4}").unwrap().elements(), &[1, 4]);
        let (z2z3, _) = r.group("cyclic:2,3").unwrap();
        let x = r.connection(&z2z3, "elements:{(1,0)}").unwrap();
        assert_eq!(x.len(), 1);
        let (gl, t) = r.group("gl:2,2").unwrap();
        assert!(t.is_none());
        assert_eq!(r.connection(&gl, "gl-rank:1").unwrap().len(), 2);
        assert!(r.group("dihedral:5").is_err());
        assert!(r.connection(&g, "classes:9").is_err());
        assert!(r.formulation("c").is_ok());
    }

    #[test]
    fn formulation_c_needs_irreps_for_larger_nonabelian() {
        let r = Registry::standard();
        let (g, _) = r.group("sym:4").unwrap();
        let spec = CayleyGraphSpec::new(&g, r.connection(&g, "efp:1").unwrap()).unwrap();
        assert!(matches!(r.formulation("C").unwrap().build(&spec, None), Err(Error::NeedsIrreps)));
        assert_eq!(r.formulation("A").unwrap().build(&spec, None).unwrap().block_sizes, vec![24]);
    }
}
