//! Syntactic, unresolved declaration summaries of one compilation unit.
//!
//! Names are kept exactly as written; binding them to declarations is the
//! resolver's job. Method and initializer bodies are never represented.

use crate::model::{Primitive, TypeKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypeExpr {
    Primitive(Primitive),
    /// `a.b.C<X>`; only the arguments of the last segment are kept.
    Named {
        segments: Vec<String>,
        args: Vec<TypeExpr>,
    },
    Array {
        component: Box<TypeExpr>,
        dims: u32,
    },
    /// `?`, `? extends T` (`true`) or `? super T` (`false`).
    Wildcard(Option<(bool, Box<TypeExpr>)>),
}

impl TypeExpr {
    pub fn array_of(component: TypeExpr, dims: u32) -> TypeExpr {
        match (component, dims) {
            (c, 0) => c,
            (TypeExpr::Array { component, dims: inner }, d) => TypeExpr::Array {
                component,
                dims: inner + d,
            },
            (c, d) => TypeExpr::Array {
                component: Box::new(c),
                dims: d,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annotation {
    /// Name as written, possibly qualified.
    pub name: String,
    /// Raw text between the parentheses, if any.
    pub args: Option<String>,
}

pub mod flags {
    pub const PUBLIC: u32 = 1;
    pub const PROTECTED: u32 = 1 << 1;
    pub const PRIVATE: u32 = 1 << 2;
    pub const STATIC: u32 = 1 << 3;
    pub const FINAL: u32 = 1 << 4;
    pub const ABSTRACT: u32 = 1 << 5;
    pub const SEALED: u32 = 1 << 6;
    pub const NON_SEALED: u32 = 1 << 7;
    pub const DEFAULT: u32 = 1 << 8;
    pub const NATIVE: u32 = 1 << 9;
    pub const SYNCHRONIZED: u32 = 1 << 10;
    pub const TRANSIENT: u32 = 1 << 11;
    pub const VOLATILE: u32 = 1 << 12;
    pub const STRICTFP: u32 = 1 << 13;

    pub fn from_keyword(word: &str) -> Option<u32> {
        Some(match word {
            "public" => PUBLIC,
            "protected" => PROTECTED,
            "private" => PRIVATE,
            "static" => STATIC,
            "final" => FINAL,
            "abstract" => ABSTRACT,
            "default" => DEFAULT,
            "native" => NATIVE,
            "synchronized" => SYNCHRONIZED,
            "transient" => TRANSIENT,
            "volatile" => VOLATILE,
            "strictfp" => STRICTFP,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Mods {
    pub bits: u32,
    pub annotations: Vec<Annotation>,
}

impl Mods {
    pub fn has(&self, flag: u32) -> bool {
        self.bits & flag != 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTypeParam {
    pub name: String,
    pub bounds: Vec<TypeExpr>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawParam {
    pub name: String,
    /// Varargs parameters hold the full array type.
    pub ty: TypeExpr,
    pub varargs: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawField {
    pub name: String,
    pub ty: TypeExpr,
    pub mods: Mods,
    pub line: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawMethod {
    pub name: String,
    pub constructor: bool,
    /// Compact canonical record constructor (`Name { ... }`).
    pub compact: bool,
    pub type_params: Vec<RawTypeParam>,
    pub params: Vec<RawParam>,
    /// `None` for constructors.
    pub return_type: Option<TypeExpr>,
    pub throws: Vec<TypeExpr>,
    pub mods: Mods,
    pub has_body: bool,
    pub line: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumConstant {
    pub name: String,
    pub annotations: Vec<Annotation>,
    pub has_body: bool,
    pub line: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawType {
    pub name: String,
    pub kind: TypeKind,
    pub mods: Mods,
    pub type_params: Vec<RawTypeParam>,
    /// Superclass for classes, superinterfaces for interfaces.
    pub extends: Vec<TypeExpr>,
    pub implements: Vec<TypeExpr>,
    pub record_components: Vec<RawParam>,
    pub constants: Vec<EnumConstant>,
    pub fields: Vec<RawField>,
    pub methods: Vec<RawMethod>,
    pub types: Vec<RawType>,
    pub line: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Import {
    pub name: String,
    pub on_demand: bool,
    pub is_static: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompilationUnitSummary {
    /// Path relative to the source root, `/`-separated.
    pub file: String,
    pub package: String,
    pub imports: Vec<Import>,
    pub types: Vec<RawType>,
}
