//! Descriptor and generic-signature parsing.
//!
//! Class names are handed to a caller-supplied mapper that turns internal
//! names (`p/Outer$Inner`) into canonical qualified names (`p.Outer.Inner`).

use crate::error::ClassFileError;
use crate::model::{Primitive, TypeParam, TypeRef, WildcardBound};

pub struct ClassSignature {
    pub type_params: Vec<TypeParam>,
    pub super_class: TypeRef,
    pub interfaces: Vec<TypeRef>,
}

pub struct MethodSignature {
    pub type_params: Vec<TypeParam>,
    pub params: Vec<TypeRef>,
    pub return_type: TypeRef,
    pub thrown: Vec<TypeRef>,
}

struct Parser<'a, 'm> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    names: &'m dyn Fn(&str) -> String,
    descriptor: bool,
}

impl<'a, 'm> Parser<'a, 'm> {
    fn new(text: &'a str, names: &'m dyn Fn(&str) -> String, descriptor: bool) -> Self {
        Parser {
            text,
            bytes: text.as_bytes(),
            pos: 0,
            names,
            descriptor,
        }
    }

    fn error(&self) -> ClassFileError {
        if self.descriptor {
            ClassFileError::Descriptor(self.text.to_owned())
        } else {
            ClassFileError::Signature(self.text.to_owned())
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<(), ClassFileError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error())
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.bytes.len()
    }

    fn identifier(&mut self) -> Result<&'a str, ClassFileError> {
        let start = self.pos;
        while let Some(b) = self.peek() {
            if matches!(b, b'.' | b';' | b'[' | b'/' | b'<' | b'>' | b':') {
                break;
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error());
        }
        Ok(&self.text[start..self.pos])
    }

    fn type_params(&mut self) -> Result<Vec<TypeParam>, ClassFileError> {
        let mut params = Vec::new();
        if self.peek() != Some(b'<') {
            return Ok(params);
        }
        self.pos += 1;
        while self.peek() != Some(b'>') {
            let name = self.identifier()?.to_owned();
            self.expect(b':')?;
            let mut bounds = Vec::new();
            // Class bound may be empty (`T::Ljava/lang/Comparable;`).
            if !matches!(self.peek(), Some(b':')) {
                bounds.push(self.reference_type()?);
            }
            while self.peek() == Some(b':') {
                self.pos += 1;
                bounds.push(self.reference_type()?);
            }
            if bounds.len() == 1 && bounds[0].is_object() {
                bounds.clear();
            }
            params.push(TypeParam { name, bounds });
            if self.at_end() {
                return Err(self.error());
            }
        }
        self.pos += 1;
        Ok(params)
    }

    fn java_type(&mut self) -> Result<TypeRef, ClassFileError> {
        match self.peek() {
            Some(b) if Primitive::from_descriptor(b).is_some() => {
                self.pos += 1;
                Ok(TypeRef::Primitive(Primitive::from_descriptor(b).expect("checked")))
            }
            _ => self.reference_type(),
        }
    }

    fn reference_type(&mut self) -> Result<TypeRef, ClassFileError> {
        match self.peek() {
            Some(b'L') => self.class_type(),
            Some(b'T') if !self.descriptor => {
                self.pos += 1;
                let name = self.identifier()?.to_owned();
                self.expect(b';')?;
                Ok(TypeRef::TypeVar(name))
            }
            Some(b'[') => {
                let mut dims = 0;
                while self.peek() == Some(b'[') {
                    self.pos += 1;
                    dims += 1;
                }
                let component = self.java_type()?;
                if component == TypeRef::Primitive(Primitive::Void) {
                    return Err(self.error());
                }
                Ok(TypeRef::array_of(component, dims))
            }
            _ => Err(self.error()),
        }
    }

    fn class_type(&mut self) -> Result<TypeRef, ClassFileError> {
        self.expect(b'L')?;
        let mut internal = String::new();
        let mut args = Vec::new();
        loop {
            let part = self.identifier()?;
            internal.push_str(part);
            match self.peek() {
                Some(b'/') => {
                    self.pos += 1;
                    internal.push('/');
                }
                Some(b'<') if !self.descriptor => {
                    args = self.type_args()?;
                    match self.peek() {
                        Some(b'.') => {
                            self.pos += 1;
                            internal.push('$');
                            args.clear();
                        }
                        Some(b';') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.error()),
                    }
                }
                Some(b'.') if !self.descriptor => {
                    self.pos += 1;
                    internal.push('$');
                }
                Some(b';') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.error()),
            }
        }
        Ok(TypeRef::parameterized((self.names)(&internal), args))
    }

    fn type_args(&mut self) -> Result<Vec<TypeRef>, ClassFileError> {
        self.expect(b'<')?;
        let mut args = Vec::new();
        loop {
            match self.peek() {
                Some(b'>') => {
                    self.pos += 1;
                    break;
                }
                Some(b'*') => {
                    self.pos += 1;
                    args.push(TypeRef::Wildcard(None));
                }
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.reference_type()?;
                    args.push(TypeRef::Wildcard(Some(WildcardBound::Extends(Box::new(t)))));
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.reference_type()?;
                    args.push(TypeRef::Wildcard(Some(WildcardBound::Super(Box::new(t)))));
                }
                Some(_) => args.push(self.reference_type()?),
                None => return Err(self.error()),
            }
        }
        if args.is_empty() {
            return Err(self.error());
        }
        Ok(args)
    }

    fn method(&mut self) -> Result<MethodSignature, ClassFileError> {
        let type_params = if self.descriptor { Vec::new() } else { self.type_params()? };
        self.expect(b'(')?;
        let mut params = Vec::new();
        while self.peek() != Some(b')') {
            if self.at_end() {
                return Err(self.error());
            }
            let t = self.java_type()?;
            if t == TypeRef::Primitive(Primitive::Void) {
                return Err(self.error());
            }
            params.push(t);
        }
        self.pos += 1;
        let return_type = self.java_type()?;
        let mut thrown = Vec::new();
        while !self.descriptor && self.peek() == Some(b'^') {
            self.pos += 1;
            thrown.push(self.reference_type()?);
        }
        if !self.at_end() {
            return Err(self.error());
        }
        Ok(MethodSignature {
            type_params,
            params,
            return_type,
            thrown,
        })
    }

    fn finish<T>(&self, value: T) -> Result<T, ClassFileError> {
        if self.at_end() {
            Ok(value)
        } else {
            Err(self.error())
        }
    }
}

pub fn parse_field_descriptor(
    text: &str,
    names: &dyn Fn(&str) -> String,
) -> Result<TypeRef, ClassFileError> {
    let mut p = Parser::new(text, names, true);
    let t = p.java_type()?;
    p.finish(t)
}

/// Parameter types and return type of a method descriptor.
pub fn parse_method_descriptor(
    text: &str,
    names: &dyn Fn(&str) -> String,
) -> Result<(Vec<TypeRef>, TypeRef), ClassFileError> {
    let m = Parser::new(text, names, true).method()?;
    Ok((m.params, m.return_type))
}

pub fn parse_field_signature(
    text: &str,
    names: &dyn Fn(&str) -> String,
) -> Result<TypeRef, ClassFileError> {
    let mut p = Parser::new(text, names, false);
    let t = p.reference_type()?;
    p.finish(t)
}

pub fn parse_method_signature(
    text: &str,
    names: &dyn Fn(&str) -> String,
) -> Result<MethodSignature, ClassFileError> {
    Parser::new(text, names, false).method()
}

pub fn parse_class_signature(
    text: &str,
    names: &dyn Fn(&str) -> String,
) -> Result<ClassSignature, ClassFileError> {
    let mut p = Parser::new(text, names, false);
    let type_params = p.type_params()?;
    let super_class = p.class_type()?;
    let mut interfaces = Vec::new();
    while !p.at_end() {
        interfaces.push(p.class_type()?);
    }
    Ok(ClassSignature {
        type_params,
        super_class,
        interfaces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dotted(s: &str) -> String {
        s.replace(['/', '$'], ".")
    }

    #[test]
    fn descriptors() {
        let (params, ret) = parse_method_descriptor("(I[[Ljava/lang/String;J)V", &dotted).unwrap();
        let shown: Vec<String> = params.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["int", "java.lang.String[][]", "long"]);
        assert_eq!(ret.to_string(), "void");
        assert!(parse_field_descriptor("Ljava/lang/String", &dotted).is_err());
        assert!(parse_field_descriptor("Q", &dotted).is_err());
        assert!(parse_method_descriptor("(V)V", &dotted).is_err());
    }

    #[test]
    fn class_signature_with_bounds() {
        let sig = parse_class_signature(
            "<T:Ljava/lang/Number;U::Ljava/lang/Comparable<TU;>;V:Ljava/lang/Object;>Ljava/lang/Object;Ljava/lang/Iterable<TT;>;",
            &dotted,
        )
        .unwrap();
        assert_eq!(sig.type_params.len(), 3);
        assert_eq!(sig.type_params[0].bounds[0].to_string(), "java.lang.Number");
        assert_eq!(sig.type_params[1].bounds[0].to_string(), "java.lang.Comparable<U>");
        assert!(sig.type_params[2].bounds.is_empty());
        assert!(sig.super_class.is_object());
        assert_eq!(sig.interfaces[0].to_string(), "java.lang.Iterable<T>");
    }

    #[test]
    fn method_signature_with_wildcards_and_throws() {
        let sig = parse_method_signature(
            "<E:Ljava/lang/Exception;>(Ljava/util/List<+Ljava/lang/Number;>;Ljava/util/Map<-TE;*>;[TE;)TE;^TE;^Ljava/io/IOException;",
            &dotted,
        )
        .unwrap();
        let shown: Vec<String> = sig.params.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            shown,
            [
                "java.util.List<? extends java.lang.Number>",
                "java.util.Map<? super E,?>",
                "E[]"
            ]
        );
        assert_eq!(sig.return_type, TypeRef::TypeVar("E".into()));
        assert_eq!(sig.thrown.len(), 2);
    }

    #[test]
    fn inner_class_type_keeps_innermost_arguments() {
        let t = parse_field_signature("Lp/Outer<TT;>.Inner<Ljava/lang/String;>;", &|s| {
            s.to_owned()
        })
        .unwrap();
        assert_eq!(t.to_string(), "p/Outer$Inner<java/lang/String>");
    }

    #[test]
    fn malformed_signatures() {
        for bad in ["<T>Ljava/lang/Object;", "Lp/A<>;", "<T:Lp/A;", "Lp/A;trailing"] {
            assert!(
                parse_class_signature(bad, &dotted).is_err() || parse_field_signature(bad, &dotted).is_err(),
                "{bad}"
            );
        }
    }
}
