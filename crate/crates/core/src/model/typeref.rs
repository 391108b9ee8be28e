use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, Weak};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::decl::TypeDecl;
use super::name::QualifiedName;

/// Shared, lazily resolved reference to a named type declaration.
///
/// Within one [`ApiModel`](super::ApiModel) every use site of a given name
/// holds a clone of the same handle; the resolution is computed once and
/// memoized in the handle.
#[derive(Clone)]
pub struct TypeName(Arc<NameCell>);

struct NameCell {
    name: QualifiedName,
    owner: u64,
    resolved: OnceLock<Option<Weak<TypeDecl>>>,
}

impl TypeName {
    /// A free-standing handle, not owned by any model.
    pub fn new(name: impl Into<QualifiedName>) -> Self {
        Self::owned(name.into(), 0)
    }

    pub(crate) fn owned(name: QualifiedName, owner: u64) -> Self {
        TypeName(Arc::new(NameCell {
            name,
            owner,
            resolved: OnceLock::new(),
        }))
    }

    pub fn qualified_name(&self) -> &QualifiedName {
        &self.0.name
    }

    pub fn as_str(&self) -> &str {
        self.0.name.as_str()
    }

    pub(crate) fn owner(&self) -> u64 {
        self.0.owner
    }

    /// Memoized resolution; `lookup` runs at most once per handle.
    pub(crate) fn resolve_with(
        &self,
        lookup: impl FnOnce(&QualifiedName) -> Option<Arc<TypeDecl>>,
    ) -> Option<Arc<TypeDecl>> {
        let mut fresh = None;
        let slot = self.0.resolved.get_or_init(|| {
            let found = lookup(&self.0.name);
            let weak = found.as_ref().map(Arc::downgrade);
            fresh = found;
            weak
        });
        if fresh.is_some() {
            return fresh;
        }
        slot.as_ref().and_then(Weak::upgrade)
    }

    #[cfg(test)]
    pub(crate) fn is_memoized(&self) -> bool {
        self.0.resolved.get().is_some()
    }

    pub fn ptr_eq(&self, other: &TypeName) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl PartialEq for TypeName {
    fn eq(&self, other: &Self) -> bool {
        self.0.name == other.0.name
    }
}

impl Eq for TypeName {}

impl Hash for TypeName {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.name.hash(state)
    }
}

impl fmt::Debug for TypeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.name)
    }
}

impl Serialize for TypeName {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.name.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TypeName {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        QualifiedName::deserialize(deserializer).map(TypeName::new)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Primitive {
    Boolean,
    Byte,
    Char,
    Short,
    Int,
    Long,
    Float,
    Double,
    Void,
}

impl Primitive {
    pub fn keyword(self) -> &'static str {
        match self {
            Primitive::Boolean => "boolean",
            Primitive::Byte => "byte",
            Primitive::Char => "char",
            Primitive::Short => "short",
            Primitive::Int => "int",
            Primitive::Long => "long",
            Primitive::Float => "float",
            Primitive::Double => "double",
            Primitive::Void => "void",
        }
    }

    pub fn from_keyword(word: &str) -> Option<Primitive> {
        Some(match word {
            "boolean" => Primitive::Boolean,
            "byte" => Primitive::Byte,
            "char" => Primitive::Char,
            "short" => Primitive::Short,
            "int" => Primitive::Int,
            "long" => Primitive::Long,
            "float" => Primitive::Float,
            "double" => Primitive::Double,
            "void" => Primitive::Void,
            _ => return None,
        })
    }

    pub fn from_descriptor(tag: u8) -> Option<Primitive> {
        Some(match tag {
            b'Z' => Primitive::Boolean,
            b'B' => Primitive::Byte,
            b'C' => Primitive::Char,
            b'S' => Primitive::Short,
            b'I' => Primitive::Int,
            b'J' => Primitive::Long,
            b'F' => Primitive::Float,
            b'D' => Primitive::Double,
            b'V' => Primitive::Void,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum WildcardBound {
    Extends(Box<TypeRef>),
    Super(Box<TypeRef>),
}

/// A use-site reference to a type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum TypeRef {
    Primitive(Primitive),
    Declared {
        name: TypeName,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        args: Vec<TypeRef>,
    },
    /// `component` is never itself an array.
    Array { component: Box<TypeRef>, dims: u32 },
    TypeVar(String),
    Wildcard(Option<WildcardBound>),
}

pub const OBJECT: &str = "java.lang.Object";

impl TypeRef {
    pub fn declared(name: impl Into<QualifiedName>) -> TypeRef {
        TypeRef::Declared {
            name: TypeName::new(name),
            args: Vec::new(),
        }
    }

    pub fn parameterized(name: impl Into<QualifiedName>, args: Vec<TypeRef>) -> TypeRef {
        TypeRef::Declared {
            name: TypeName::new(name),
            args,
        }
    }

    pub fn object() -> TypeRef {
        TypeRef::declared(OBJECT)
    }

    /// Wraps `component` in `dims` array dimensions, flattening nested arrays.
    pub fn array_of(component: TypeRef, dims: u32) -> TypeRef {
        if dims == 0 {
            return component;
        }
        match component {
            TypeRef::Array {
                component,
                dims: inner,
            } => TypeRef::Array {
                component,
                dims: inner + dims,
            },
            other => TypeRef::Array {
                component: Box::new(other),
                dims,
            },
        }
    }

    pub fn declared_name(&self) -> Option<&TypeName> {
        match self {
            TypeRef::Declared { name, .. } => Some(name),
            _ => None,
        }
    }

    pub fn is_object(&self) -> bool {
        matches!(self, TypeRef::Declared { name, .. } if name.as_str() == OBJECT)
    }

    pub fn type_args(&self) -> &[TypeRef] {
        match self {
            TypeRef::Declared { args, .. } => args,
            TypeRef::Array { component, .. } => component.type_args(),
            _ => &[],
        }
    }

    /// Applies `f` to every declared name in this reference, rebuilding it.
    pub fn map_names(&self, f: &mut impl FnMut(&TypeName) -> TypeName) -> TypeRef {
        match self {
            TypeRef::Primitive(p) => TypeRef::Primitive(*p),
            TypeRef::Declared { name, args } => TypeRef::Declared {
                name: f(name),
                args: args.iter().map(|a| a.map_names(f)).collect(),
            },
            TypeRef::Array { component, dims } => TypeRef::Array {
                component: Box::new(component.map_names(f)),
                dims: *dims,
            },
            TypeRef::TypeVar(v) => TypeRef::TypeVar(v.clone()),
            TypeRef::Wildcard(bound) => TypeRef::Wildcard(bound.as_ref().map(|b| match b {
                WildcardBound::Extends(t) => WildcardBound::Extends(Box::new(t.map_names(f))),
                WildcardBound::Super(t) => WildcardBound::Super(Box::new(t.map_names(f))),
            })),
        }
    }

    /// Replaces type variables using `subst`; unmapped variables are kept.
    pub fn substitute(&self, subst: &dyn Fn(&str) -> Option<TypeRef>) -> TypeRef {
        match self {
            TypeRef::TypeVar(v) => subst(v).unwrap_or_else(|| self.clone()),
            TypeRef::Declared { name, args } => TypeRef::Declared {
                name: name.clone(),
                args: args.iter().map(|a| a.substitute(subst)).collect(),
            },
            TypeRef::Array { component, dims } => {
                TypeRef::array_of(component.substitute(subst), *dims)
            }
            TypeRef::Wildcard(bound) => TypeRef::Wildcard(bound.as_ref().map(|b| match b {
                WildcardBound::Extends(t) => WildcardBound::Extends(Box::new(t.substitute(subst))),
                WildcardBound::Super(t) => WildcardBound::Super(Box::new(t.substitute(subst))),
            })),
            TypeRef::Primitive(_) => self.clone(),
        }
    }

    /// Visits every declared name, including those in type arguments.
    pub fn for_each_name(&self, f: &mut impl FnMut(&TypeName)) {
        match self {
            TypeRef::Declared { name, args } => {
                f(name);
                args.iter().for_each(|a| a.for_each_name(f));
            }
            TypeRef::Array { component, .. } => component.for_each_name(f),
            TypeRef::Wildcard(Some(WildcardBound::Extends(t) | WildcardBound::Super(t))) => {
                t.for_each_name(f)
            }
            _ => {}
        }
    }
}

impl fmt::Display for TypeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeRef::Primitive(p) => f.write_str(p.keyword()),
            TypeRef::Declared { name, args } => {
                f.write_str(name.as_str())?;
                if !args.is_empty() {
                    f.write_str("<")?;
                    for (i, arg) in args.iter().enumerate() {
                        if i > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "{arg}")?;
                    }
                    f.write_str(">")?;
                }
                Ok(())
            }
            TypeRef::Array { component, dims } => {
                write!(f, "{component}")?;
                for _ in 0..*dims {
                    f.write_str("[]")?;
                }
                Ok(())
            }
            TypeRef::TypeVar(v) => f.write_str(v),
            TypeRef::Wildcard(None) => f.write_str("?"),
            TypeRef::Wildcard(Some(WildcardBound::Extends(t))) => write!(f, "? extends {t}"),
            TypeRef::Wildcard(Some(WildcardBound::Super(t))) => write!(f, "? super {t}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn array_of_flattens() {
        let inner = TypeRef::array_of(TypeRef::Primitive(Primitive::Int), 1);
        let outer = TypeRef::array_of(inner, 2);
        assert_eq!(
            outer,
            TypeRef::Array {
                component: Box::new(TypeRef::Primitive(Primitive::Int)),
                dims: 3
            }
        );
        assert_eq!(outer.to_string(), "int[][][]");
    }

    #[test]
    fn handles_compare_by_name() {
        let a = TypeName::new("a.B");
        let b = TypeName::new("a.B");
        assert_eq!(a, b);
        assert!(!a.ptr_eq(&b));
    }

    #[test]
    fn display_wildcards() {
        let t = TypeRef::parameterized(
            "java.util.Map",
            vec![
                TypeRef::TypeVar("K".into()),
                TypeRef::Wildcard(Some(WildcardBound::Extends(Box::new(TypeRef::declared(
                    "java.lang.Number",
                ))))),
            ],
        );
        assert_eq!(t.to_string(), "java.util.Map<K,? extends java.lang.Number>");
    }
}
