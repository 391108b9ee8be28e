use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::name::QualifiedName;
use super::typeref::TypeRef;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Visibility {
    Public,
    Protected,
    PackagePrivate,
    Private,
}

impl Visibility {
    pub fn is_public(self) -> bool {
        self == Visibility::Public
    }

    pub fn is_protected(self) -> bool {
        self == Visibility::Protected
    }

    /// Public or protected: the only visibilities that can reach clients.
    pub fn is_visible_outside_package(self) -> bool {
        matches!(self, Visibility::Public | Visibility::Protected)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TypeKind {
    Class,
    Interface,
    Enum,
    Record,
    Annotation,
}

impl TypeKind {
    pub fn is_interface_like(self) -> bool {
        matches!(self, TypeKind::Interface | TypeKind::Annotation)
    }

    pub fn is_class_like(self) -> bool {
        !self.is_interface_like()
    }
}

impl fmt::Display for TypeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeKind::Class => "class",
            TypeKind::Interface => "interface",
            TypeKind::Enum => "enum",
            TypeKind::Record => "record",
            TypeKind::Annotation => "annotation",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Modifier {
    Static,
    Final,
    Abstract,
    Sealed,
    NonSealed,
    Default,
    Native,
    Synchronized,
    Transient,
    Volatile,
}

pub type Modifiers = BTreeSet<Modifier>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SourceLocation {
    pub file: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<u32>,
}

impl SourceLocation {
    pub fn new(file: impl Into<String>, line: Option<u32>) -> Self {
        SourceLocation {
            file: file.into(),
            line,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeParam {
    pub name: String,
    /// Empty means the implicit `java.lang.Object` bound.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bounds: Vec<TypeRef>,
}

impl TypeParam {
    pub fn new(name: impl Into<String>, bounds: Vec<TypeRef>) -> Self {
        TypeParam {
            name: name.into(),
            bounds,
        }
    }

    /// Declared bounds, or `[java.lang.Object]` when none were declared.
    pub fn effective_bounds(&self) -> Vec<TypeRef> {
        if self.bounds.is_empty() {
            vec![TypeRef::object()]
        } else {
            self.bounds.clone()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    #[serde(rename = "type")]
    pub ty: TypeRef,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub varargs: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExecutableKind {
    Method,
    Constructor,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Executable {
    pub id: QualifiedName,
    pub kind: ExecutableKind,
    pub name: String,
    pub visibility: Visibility,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub modifiers: Modifiers,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub annotations: Vec<QualifiedName>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub type_params: Vec<TypeParam>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<Param>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub return_type: Option<TypeRef>,
    /// Declared `throws` clause; checked-ness is derived against a model.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub thrown: Vec<TypeRef>,
    pub location: SourceLocation,
}

impl Executable {
    pub fn is_method(&self) -> bool {
        self.kind == ExecutableKind::Method
    }

    pub fn is_constructor(&self) -> bool {
        self.kind == ExecutableKind::Constructor
    }

    pub fn has(&self, modifier: Modifier) -> bool {
        self.modifiers.contains(&modifier)
    }

    pub fn is_static(&self) -> bool {
        self.has(Modifier::Static)
    }

    pub fn is_abstract(&self) -> bool {
        self.has(Modifier::Abstract)
    }

    /// `name(erased,params)` part of the identity.
    pub fn signature_suffix(&self) -> &str {
        let id = self.id.as_str();
        let paren = id.find('(').unwrap_or(id.len());
        let start = id[..paren].rfind('.').map_or(0, |dot| dot + 1);
        &id[start..]
    }

    pub fn is_varargs(&self) -> bool {
        self.params.last().is_some_and(|p| p.varargs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FieldDecl {
    pub id: QualifiedName,
    pub name: String,
    pub visibility: Visibility,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub modifiers: Modifiers,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub annotations: Vec<QualifiedName>,
    #[serde(rename = "type")]
    pub ty: TypeRef,
    pub location: SourceLocation,
}

impl FieldDecl {
    pub fn has(&self, modifier: Modifier) -> bool {
        self.modifiers.contains(&modifier)
    }

    pub fn is_static(&self) -> bool {
        self.has(Modifier::Static)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TypeDecl {
    pub id: QualifiedName,
    /// Package of the (outermost) declaration; empty for the unnamed package.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub package: String,
    pub kind: TypeKind,
    pub visibility: Visibility,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub modifiers: Modifiers,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub annotations: Vec<QualifiedName>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub type_params: Vec<TypeParam>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub super_class: Option<TypeRef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub interfaces: Vec<TypeRef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub fields: Vec<FieldDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub methods: Vec<Executable>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub constructors: Vec<Executable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enclosing_type: Option<QualifiedName>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub nested: bool,
    pub location: SourceLocation,
}

pub const DEPRECATED: &str = "java.lang.Deprecated";

impl TypeDecl {
    pub fn has(&self, modifier: Modifier) -> bool {
        self.modifiers.contains(&modifier)
    }

    pub fn is_static(&self) -> bool {
        self.has(Modifier::Static)
    }

    pub fn is_interface(&self) -> bool {
        self.kind.is_interface_like()
    }

    pub fn is_class(&self) -> bool {
        self.kind.is_class_like()
    }

    /// Explicit supertypes: the superclass (if any) followed by interfaces.
    pub fn direct_supertypes(&self) -> impl Iterator<Item = &TypeRef> {
        self.super_class.iter().chain(self.interfaces.iter())
    }

    pub fn is_annotated(&self, annotation: &str) -> bool {
        self.annotations.iter().any(|a| a == annotation)
    }

    pub fn executables(&self) -> impl Iterator<Item = &Executable> {
        self.constructors.iter().chain(self.methods.iter())
    }

    /// Visits every type reference held by this declaration and its members.
    pub fn for_each_type_ref_mut(&mut self, f: &mut impl FnMut(&mut TypeRef)) {
        fn params(tps: &mut [TypeParam], f: &mut impl FnMut(&mut TypeRef)) {
            tps.iter_mut().flat_map(|p| p.bounds.iter_mut()).for_each(&mut *f);
        }
        params(&mut self.type_params, f);
        self.super_class.iter_mut().for_each(&mut *f);
        self.interfaces.iter_mut().for_each(&mut *f);
        self.fields.iter_mut().for_each(|field| f(&mut field.ty));
        for e in self.methods.iter_mut().chain(self.constructors.iter_mut()) {
            params(&mut e.type_params, f);
            e.params.iter_mut().for_each(|p| f(&mut p.ty));
            e.return_type.iter_mut().for_each(&mut *f);
            e.thrown.iter_mut().for_each(&mut *f);
        }
    }
}
