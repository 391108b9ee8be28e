use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::model::{QualifiedName, SourceLocation};

/// Kind of breaking change, in catalog order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BcKind {
    #[serde(rename = "type removed")]
    TypeRemoved,
    #[serde(rename = "type now protected")]
    TypeNowProtected,
    #[serde(rename = "type kind changed")]
    TypeKindChanged,
    #[serde(rename = "supertype removed")]
    SupertypeRemoved,
    #[serde(rename = "type variable removed")]
    TypeVariableRemoved,
    #[serde(rename = "type variable added")]
    TypeVariableAdded,
    #[serde(rename = "type variable changed")]
    TypeVariableChanged,
    #[serde(rename = "type now final")]
    TypeNowFinal,
    #[serde(rename = "type now abstract")]
    TypeNowAbstract,
    #[serde(rename = "nested type now static")]
    NestedTypeNowStatic,
    #[serde(rename = "nested type no longer static")]
    NestedTypeNoLongerStatic,
    #[serde(rename = "class now checked exception")]
    ClassNowCheckedException,
    #[serde(rename = "abstract method added to type")]
    AbstractMethodAddedToType,
    #[serde(rename = "executable removed")]
    ExecutableRemoved,
    #[serde(rename = "executable now protected")]
    ExecutableNowProtected,
    #[serde(rename = "executable checked exception removed")]
    ExecutableCheckedExceptionRemoved,
    #[serde(rename = "executable checked exception added")]
    ExecutableCheckedExceptionAdded,
    #[serde(rename = "executable parameter generics changed")]
    ExecutableParameterGenericsChanged,
    #[serde(rename = "executable type variable removed")]
    ExecutableTypeVariableRemoved,
    #[serde(rename = "executable type variable added")]
    ExecutableTypeVariableAdded,
    #[serde(rename = "executable type variable changed")]
    ExecutableTypeVariableChanged,
    #[serde(rename = "method now final")]
    MethodNowFinal,
    #[serde(rename = "method now static")]
    MethodNowStatic,
    #[serde(rename = "method no longer static")]
    MethodNoLongerStatic,
    #[serde(rename = "method now abstract")]
    MethodNowAbstract,
    #[serde(rename = "method return type changed")]
    MethodReturnTypeChanged,
    #[serde(rename = "field removed")]
    FieldRemoved,
    #[serde(rename = "field now protected")]
    FieldNowProtected,
    #[serde(rename = "field now final")]
    FieldNowFinal,
    #[serde(rename = "field now static")]
    FieldNowStatic,
    #[serde(rename = "field no longer static")]
    FieldNoLongerStatic,
    #[serde(rename = "field type changed")]
    FieldTypeChanged,
}

use BcKind::*;

impl BcKind {
    pub const ALL: [BcKind; 32] = [
        TypeRemoved,
        TypeNowProtected,
        TypeKindChanged,
        SupertypeRemoved,
        TypeVariableRemoved,
        TypeVariableAdded,
        TypeVariableChanged,
        TypeNowFinal,
        TypeNowAbstract,
        NestedTypeNowStatic,
        NestedTypeNoLongerStatic,
        ClassNowCheckedException,
        AbstractMethodAddedToType,
        ExecutableRemoved,
        ExecutableNowProtected,
        ExecutableCheckedExceptionRemoved,
        ExecutableCheckedExceptionAdded,
        ExecutableParameterGenericsChanged,
        ExecutableTypeVariableRemoved,
        ExecutableTypeVariableAdded,
        ExecutableTypeVariableChanged,
        MethodNowFinal,
        MethodNowStatic,
        MethodNoLongerStatic,
        MethodNowAbstract,
        MethodReturnTypeChanged,
        FieldRemoved,
        FieldNowProtected,
        FieldNowFinal,
        FieldNowStatic,
        FieldNoLongerStatic,
        FieldTypeChanged,
    ];

    /// Whether code compiled against the old version fails to link or run.
    pub fn is_binary_breaking(self) -> bool {
        !matches!(
            self,
            TypeVariableRemoved
                | TypeVariableAdded
                | TypeVariableChanged
                | ClassNowCheckedException
                | AbstractMethodAddedToType
                | ExecutableCheckedExceptionRemoved
                | ExecutableCheckedExceptionAdded
                | ExecutableParameterGenericsChanged
                | ExecutableTypeVariableRemoved
                | ExecutableTypeVariableAdded
                | ExecutableTypeVariableChanged
        )
    }

    /// Whether client sources stop compiling.
    pub fn is_source_breaking(self) -> bool {
        !matches!(self, MethodNowStatic | FieldNowStatic)
    }

    /// Lower-case phrase used in reports and case files.
    pub fn phrase(self) -> &'static str {
        match self {
            TypeRemoved => "type removed",
            TypeNowProtected => "type now protected",
            TypeKindChanged => "type kind changed",
            SupertypeRemoved => "supertype removed",
            TypeVariableRemoved => "type variable removed",
            TypeVariableAdded => "type variable added",
            TypeVariableChanged => "type variable changed",
            TypeNowFinal => "type now final",
            TypeNowAbstract => "type now abstract",
            NestedTypeNowStatic => "nested type now static",
            NestedTypeNoLongerStatic => "nested type no longer static",
            ClassNowCheckedException => "class now checked exception",
            AbstractMethodAddedToType => "abstract method added to type",
            ExecutableRemoved => "executable removed",
            ExecutableNowProtected => "executable now protected",
            ExecutableCheckedExceptionRemoved => "executable checked exception removed",
            ExecutableCheckedExceptionAdded => "executable checked exception added",
            ExecutableParameterGenericsChanged => "executable parameter generics changed",
            ExecutableTypeVariableRemoved => "executable type variable removed",
            ExecutableTypeVariableAdded => "executable type variable added",
            ExecutableTypeVariableChanged => "executable type variable changed",
            MethodNowFinal => "method now final",
            MethodNowStatic => "method now static",
            MethodNoLongerStatic => "method no longer static",
            MethodNowAbstract => "method now abstract",
            MethodReturnTypeChanged => "method return type changed",
            FieldRemoved => "field removed",
            FieldNowProtected => "field now protected",
            FieldNowFinal => "field now final",
            FieldNowStatic => "field now static",
            FieldNoLongerStatic => "field no longer static",
            FieldTypeChanged => "field type changed",
        }
    }

    /// Symbol category the kind applies to.
    pub fn category(self) -> Category {
        match self as usize {
            0..=12 => Category::Type,
            13..=20 => Category::Executable,
            21..=25 => Category::Method,
            _ => Category::Field,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    Type,
    Executable,
    Method,
    Field,
}

impl fmt::Display for BcKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.phrase())
    }
}

#[derive(Debug, thiserror::Error)]
#[error("unknown breaking-change kind `{0}`")]
pub struct UnknownKind(pub String);

impl FromStr for BcKind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_lowercase().replace(['_', '-'], " ");
        BcKind::ALL
            .into_iter()
            .find(|k| k.phrase() == wanted)
            .ok_or_else(|| UnknownKind(s.to_owned()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BreakingChange {
    pub kind: BcKind,
    pub impacted_symbol: QualifiedName,
    pub location: SourceLocation,
    pub binary_breaking: bool,
    pub source_breaking: bool,
}

impl BreakingChange {
    pub fn new(kind: BcKind, impacted_symbol: QualifiedName, location: SourceLocation) -> Self {
        BreakingChange {
            kind,
            impacted_symbol,
            location,
            binary_breaking: kind.is_binary_breaking(),
            source_breaking: kind.is_source_breaking(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_in_declaration_order() {
        for (i, k) in BcKind::ALL.iter().enumerate() {
            assert_eq!(*k as usize, i);
        }
    }

    #[test]
    fn flags_match_the_table() {
        // (kind, binary-breaking, source-breaking), transcribed row by row.
        let table = [
            (TypeRemoved, true, true),
            (TypeNowProtected, true, true),
            (TypeKindChanged, true, true),
            (SupertypeRemoved, true, true),
            (TypeVariableRemoved, false, true),
            (TypeVariableAdded, false, true),
            (TypeVariableChanged, false, true),
            (TypeNowFinal, true, true),
            (TypeNowAbstract, true, true),
            (NestedTypeNowStatic, true, true),
            (NestedTypeNoLongerStatic, true, true),
            (ClassNowCheckedException, false, true),
            (AbstractMethodAddedToType, false, true),
            (ExecutableRemoved, true, true),
            (ExecutableNowProtected, true, true),
            (ExecutableCheckedExceptionRemoved, false, true),
            (ExecutableCheckedExceptionAdded, false, true),
            (ExecutableParameterGenericsChanged, false, true),
            (ExecutableTypeVariableRemoved, false, true),
            (ExecutableTypeVariableAdded, false, true),
            (ExecutableTypeVariableChanged, false, true),
            (MethodNowFinal, true, true),
            (MethodNowStatic, true, false),
            (MethodNoLongerStatic, true, true),
            (MethodNowAbstract, true, true),
            (MethodReturnTypeChanged, true, true),
            (FieldRemoved, true, true),
            (FieldNowProtected, true, true),
            (FieldNowFinal, true, true),
            (FieldNowStatic, true, false),
            (FieldNoLongerStatic, true, true),
            (FieldTypeChanged, true, true),
        ];
        assert_eq!(table.len(), BcKind::ALL.len());
        for (k, b, s) in table {
            assert_eq!(k.is_binary_breaking(), b, "{k}");
            assert_eq!(k.is_source_breaking(), s, "{k}");
            assert!(b || s);
        }
    }

    #[test]
    fn phrases_round_trip() {
        for k in BcKind::ALL {
            assert_eq!(k.phrase().parse::<BcKind>().unwrap(), k);
            let json = serde_json::to_string(&k).unwrap();
            assert_eq!(json, format!("\"{}\"", k.phrase()));
        }
        assert_eq!("METHOD_NOW_STATIC".parse::<BcKind>().unwrap(), MethodNowStatic);
        assert!("nope".parse::<BcKind>().is_err());
    }
}
