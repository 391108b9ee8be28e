//! Diet parser: declarations only, bodies and initializers are skipped.

use super::lexer::{LexError, Lexer, Tok, Token};
use super::summary::*;
use crate::error::ParseError;
use crate::model::{Primitive, TypeKind};

pub fn parse_unit(file: &str, text: &str) -> Result<CompilationUnitSummary, ParseError> {
    let mut p = Parser {
        lex: Lexer::new(text),
        file,
    };
    p.unit()
}

struct Parser<'a, 'f> {
    lex: Lexer<'a>,
    file: &'f str,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a, '_> {
    fn error_at(&self, line: u32, message: impl Into<String>) -> ParseError {
        ParseError {
            file: self.file.to_owned(),
            line,
            message: message.into(),
        }
    }

    fn lex_error(&self, e: LexError) -> ParseError {
        match e {
            LexError::UnterminatedComment(l) => self.error_at(l, "unterminated comment"),
            LexError::UnterminatedLiteral(l) => self.error_at(l, "unterminated literal"),
            LexError::UnbalancedBraces(l) => self.error_at(l, "unbalanced brackets"),
        }
    }

    fn next(&mut self) -> PResult<Token<'a>> {
        self.lex.next_token().map_err(|e| self.lex_error(e))
    }

    fn peek(&self) -> PResult<Token<'a>> {
        self.lex.clone().next_token().map_err(|e| self.lex_error(e))
    }

    fn peek_nth(&self, n: usize) -> PResult<Token<'a>> {
        let mut look = self.lex;
        let mut t = look.next_token().map_err(|e| self.lex_error(e))?;
        for _ in 0..n {
            t = look.next_token().map_err(|e| self.lex_error(e))?;
        }
        Ok(t)
    }

    fn unexpected(&self, t: Token<'_>, wanted: &str) -> ParseError {
        let found = match t.tok {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Punct(b) => format!("`{}`", b as char),
            Tok::Ellipsis => "`...`".into(),
            Tok::Literal => "literal".into(),
            Tok::Eof => "end of file".into(),
        };
        self.error_at(t.line, format!("expected {wanted}, found {found}"))
    }

    fn expect(&mut self, b: u8) -> PResult<Token<'a>> {
        let t = self.next()?;
        if t.tok == Tok::Punct(b) {
            Ok(t)
        } else {
            Err(self.unexpected(t, &format!("`{}`", b as char)))
        }
    }

    fn eat(&mut self, b: u8) -> PResult<bool> {
        if self.peek()?.tok == Tok::Punct(b) {
            self.next()?;
            Ok(true)
        } else {
            Ok(false)
        }
    }

    fn eat_word(&mut self, word: &str) -> PResult<bool> {
        if self.peek()?.tok == Tok::Ident(word) {
            self.next()?;
            Ok(true)
        } else {
            Ok(false)
        }
    }

    fn ident(&mut self) -> PResult<(&'a str, u32)> {
        let t = self.next()?;
        match t.tok {
            Tok::Ident(s) => Ok((s, t.line)),
            _ => Err(self.unexpected(t, "identifier")),
        }
    }

    fn qualified(&mut self) -> PResult<String> {
        let mut name = self.ident()?.0.to_owned();
        while self.peek()?.tok == Tok::Punct(b'.') && matches!(self.peek_nth(1)?.tok, Tok::Ident(_)) {
            self.next()?;
            name.push('.');
            name.push_str(self.ident()?.0);
        }
        Ok(name)
    }

    fn unit(&mut self) -> PResult<CompilationUnitSummary> {
        let mut unit = CompilationUnitSummary {
            file: self.file.to_owned(),
            ..Default::default()
        };
        // Package annotations only occur in package-info files, but be lenient.
        let mods = self.modifiers()?;
        if self.eat_word("package")? {
            unit.package = self.qualified()?;
            self.expect(b';')?;
        } else if mods.bits != 0 || !mods.annotations.is_empty() {
            let types = self.type_decl_after_mods(mods)?;
            unit.types.push(types);
        }
        loop {
            let t = self.peek()?;
            match t.tok {
                Tok::Eof => break,
                Tok::Punct(b';') => {
                    self.next()?;
                }
                Tok::Ident("import") => {
                    self.next()?;
                    let is_static = self.eat_word("static")?;
                    let name = self.qualified()?;
                    let on_demand = if self.eat(b'.')? {
                        self.expect(b'*')?;
                        true
                    } else {
                        false
                    };
                    self.expect(b';')?;
                    unit.imports.push(Import {
                        name,
                        on_demand,
                        is_static,
                    });
                }
                Tok::Ident("module") | Tok::Ident("open") if unit.types.is_empty() => {
                    // A module declaration carries no API types.
                    return Ok(unit);
                }
                _ => {
                    let mods = self.modifiers()?;
                    let decl = self.type_decl_after_mods(mods)?;
                    unit.types.push(decl);
                }
            }
        }
        Ok(unit)
    }

    fn annotation(&mut self) -> PResult<Annotation> {
        self.expect(b'@')?;
        let name = self.qualified()?;
        let args = if self.eat(b'(')? {
            let text = self.lex.skip_parens().map_err(|e| self.lex_error(e))?;
            Some(text.trim().to_owned())
        } else {
            None
        };
        Ok(Annotation { name, args })
    }

    fn at_annotation(&self) -> PResult<bool> {
        Ok(self.peek()?.tok == Tok::Punct(b'@') && self.peek_nth(1)?.tok != Tok::Ident("interface"))
    }

    fn modifiers(&mut self) -> PResult<Mods> {
        let mut mods = Mods::default();
        loop {
            if self.at_annotation()? {
                mods.annotations.push(self.annotation()?);
                continue;
            }
            let Tok::Ident(word) = self.peek()?.tok else {
                return Ok(mods);
            };
            if let Some(flag) = flags::from_keyword(word) {
                self.next()?;
                mods.bits |= flag;
            } else if word == "sealed" && matches!(self.peek_nth(1)?.tok, Tok::Ident(_)) {
                self.next()?;
                mods.bits |= flags::SEALED;
            } else if word == "non"
                && self.peek_nth(1)?.tok == Tok::Punct(b'-')
                && self.peek_nth(2)?.tok == Tok::Ident("sealed")
            {
                self.next()?;
                self.next()?;
                self.next()?;
                mods.bits |= flags::NON_SEALED;
            } else {
                return Ok(mods);
            }
        }
    }

    fn skip_type_annotations(&mut self) -> PResult<()> {
        while self.at_annotation()? {
            self.annotation()?;
        }
        Ok(())
    }

    fn dims(&mut self) -> PResult<u32> {
        let mut dims = 0;
        loop {
            self.skip_type_annotations()?;
            if self.peek()?.tok == Tok::Punct(b'[') && self.peek_nth(1)?.tok == Tok::Punct(b']') {
                self.next()?;
                self.next()?;
                dims += 1;
            } else {
                return Ok(dims);
            }
        }
    }

    fn type_expr(&mut self) -> PResult<TypeExpr> {
        self.skip_type_annotations()?;
        let (first, _) = self.ident()?;
        let base = if let Some(p) = Primitive::from_keyword(first) {
            TypeExpr::Primitive(p)
        } else {
            let mut segments = vec![first.to_owned()];
            let mut args = self.type_args_opt()?;
            while self.peek()?.tok == Tok::Punct(b'.') && self.peek_nth(1)?.tok != Tok::Ellipsis {
                let after = self.peek_nth(1)?.tok;
                if !matches!(after, Tok::Ident(_) | Tok::Punct(b'@')) {
                    break;
                }
                self.next()?;
                self.skip_type_annotations()?;
                segments.push(self.ident()?.0.to_owned());
                args = self.type_args_opt()?;
            }
            TypeExpr::Named { segments, args }
        };
        let dims = self.dims()?;
        Ok(TypeExpr::array_of(base, dims))
    }

    fn type_args_opt(&mut self) -> PResult<Vec<TypeExpr>> {
        if !self.eat(b'<')? {
            return Ok(Vec::new());
        }
        let mut args = Vec::new();
        if self.eat(b'>')? {
            return Ok(args);
        }
        loop {
            self.skip_type_annotations()?;
            if self.eat(b'?')? {
                let bound = if self.eat_word("extends")? {
                    Some((true, Box::new(self.type_expr()?)))
                } else if self.eat_word("super")? {
                    Some((false, Box::new(self.type_expr()?)))
                } else {
                    None
                };
                args.push(TypeExpr::Wildcard(bound));
            } else {
                args.push(self.type_expr()?);
            }
            if !self.eat(b',')? {
                break;
            }
        }
        self.expect(b'>')?;
        Ok(args)
    }

    fn type_list(&mut self) -> PResult<Vec<TypeExpr>> {
        let mut list = vec![self.type_expr()?];
        while self.eat(b',')? {
            list.push(self.type_expr()?);
        }
        Ok(list)
    }

    fn type_params_opt(&mut self) -> PResult<Vec<RawTypeParam>> {
        let mut params = Vec::new();
        if !self.eat(b'<')? {
            return Ok(params);
        }
        loop {
            self.skip_type_annotations()?;
            let name = self.ident()?.0.to_owned();
            let mut bounds = Vec::new();
            if self.eat_word("extends")? {
                bounds.push(self.type_expr()?);
                while self.eat(b'&')? {
                    bounds.push(self.type_expr()?);
                }
            }
            params.push(RawTypeParam { name, bounds });
            if !self.eat(b',')? {
                break;
            }
        }
        self.expect(b'>')?;
        Ok(params)
    }

    fn is_type_start(&self) -> PResult<Option<TypeKind>> {
        let t = self.peek()?;
        Ok(match t.tok {
            Tok::Ident("class") => Some(TypeKind::Class),
            Tok::Ident("interface") => Some(TypeKind::Interface),
            Tok::Ident("enum") if matches!(self.peek_nth(1)?.tok, Tok::Ident(_)) => Some(TypeKind::Enum),
            Tok::Ident("record")
                if matches!(self.peek_nth(1)?.tok, Tok::Ident(_))
                    && matches!(self.peek_nth(2)?.tok, Tok::Punct(b'(' | b'<')) =>
            {
                Some(TypeKind::Record)
            }
            Tok::Punct(b'@') if self.peek_nth(1)?.tok == Tok::Ident("interface") => {
                Some(TypeKind::Annotation)
            }
            _ => None,
        })
    }

    fn type_decl_after_mods(&mut self, mods: Mods) -> PResult<RawType> {
        let t = self.peek()?;
        let Some(kind) = self.is_type_start()? else {
            return Err(self.unexpected(t, "type declaration"));
        };
        if kind == TypeKind::Annotation {
            self.next()?;
        }
        self.next()?;
        let (name, line) = self.ident()?;
        let mut decl = RawType {
            name: name.to_owned(),
            kind,
            mods,
            type_params: Vec::new(),
            extends: Vec::new(),
            implements: Vec::new(),
            record_components: Vec::new(),
            constants: Vec::new(),
            fields: Vec::new(),
            methods: Vec::new(),
            types: Vec::new(),
            line,
        };
        if matches!(kind, TypeKind::Class | TypeKind::Interface | TypeKind::Record) {
            decl.type_params = self.type_params_opt()?;
        }
        if kind == TypeKind::Record {
            self.expect(b'(')?;
            if !self.eat(b')')? {
                loop {
                    decl.record_components.push(self.param()?);
                    if !self.eat(b',')? {
                        break;
                    }
                }
                self.expect(b')')?;
            }
        }
        loop {
            if self.eat_word("extends")? {
                decl.extends = self.type_list()?;
            } else if self.eat_word("implements")? {
                decl.implements = self.type_list()?;
            } else if self.eat_word("permits")? {
                self.type_list()?;
            } else {
                break;
            }
        }
        self.expect(b'{')?;
        if kind == TypeKind::Enum {
            self.enum_constants(&mut decl)?;
        }
        self.body(&mut decl)?;
        Ok(decl)
    }

    fn enum_constants(&mut self, decl: &mut RawType) -> PResult<()> {
        loop {
            let mut annotations = Vec::new();
            while self.at_annotation()? {
                annotations.push(self.annotation()?);
            }
            match self.peek()?.tok {
                Tok::Punct(b';') => {
                    self.next()?;
                    return Ok(());
                }
                Tok::Punct(b'}') => return Ok(()),
                _ => {}
            }
            let (name, line) = self.ident()?;
            if self.eat(b'(')? {
                self.lex.skip_parens().map_err(|e| self.lex_error(e))?;
            }
            let has_body = self.eat(b'{')?;
            if has_body {
                self.lex.skip_block().map_err(|e| self.lex_error(e))?;
            }
            decl.constants.push(EnumConstant {
                name: name.to_owned(),
                annotations,
                has_body,
                line,
            });
            if !self.eat(b',')? {
                let t = self.peek()?;
                match t.tok {
                    Tok::Punct(b';') => {
                        self.next()?;
                        return Ok(());
                    }
                    Tok::Punct(b'}') => return Ok(()),
                    _ => return Err(self.unexpected(t, "`,`, `;` or `}`")),
                }
            }
        }
    }

    /// Members up to and including the closing brace.
    fn body(&mut self, decl: &mut RawType) -> PResult<()> {
        loop {
            let t = self.peek()?;
            match t.tok {
                Tok::Punct(b'}') => {
                    self.next()?;
                    return Ok(());
                }
                Tok::Eof => return Err(self.unexpected(t, "`}`")),
                Tok::Punct(b';') => {
                    self.next()?;
                    continue;
                }
                Tok::Punct(b'{') => {
                    self.next()?;
                    self.skip_block()?;
                    continue;
                }
                Tok::Ident("static") if self.peek_nth(1)?.tok == Tok::Punct(b'{') => {
                    self.next()?;
                    self.next()?;
                    self.skip_block()?;
                    continue;
                }
                _ => {}
            }
            let mods = self.modifiers()?;
            if self.is_type_start()?.is_some() {
                let nested = self.type_decl_after_mods(mods)?;
                decl.types.push(nested);
                continue;
            }
            let type_params = self.type_params_opt()?;
            let t = self.peek()?;
            if let Tok::Ident(name) = t.tok {
                let after = self.peek_nth(1)?.tok;
                if name == decl.name && after == Tok::Punct(b'(') {
                    self.next()?;
                    let m = self.method_rest(name, t.line, mods, type_params, None)?;
                    decl.methods.push(m);
                    continue;
                }
                if name == decl.name && after == Tok::Punct(b'{') && decl.kind == TypeKind::Record {
                    self.next()?;
                    self.next()?;
                    self.skip_block()?;
                    decl.methods.push(RawMethod {
                        name: name.to_owned(),
                        constructor: true,
                        compact: true,
                        type_params,
                        params: decl.record_components.clone(),
                        return_type: None,
                        throws: Vec::new(),
                        mods,
                        has_body: true,
                        line: t.line,
                    });
                    continue;
                }
            }
            let ty = self.type_expr()?;
            let (name, line) = self.ident()?;
            if self.peek()?.tok == Tok::Punct(b'(') {
                let m = self.method_rest(name, line, mods, type_params, Some(ty))?;
                decl.methods.push(m);
            } else {
                self.fields(decl, ty, name, line, mods)?;
            }
        }
    }

    fn skip_block(&mut self) -> PResult<()> {
        self.lex.skip_block().map_err(|e| self.lex_error(e))
    }

    fn fields(
        &mut self,
        decl: &mut RawType,
        ty: TypeExpr,
        first: &str,
        first_line: u32,
        mods: Mods,
    ) -> PResult<()> {
        let (mut name, mut line) = (first, first_line);
        loop {
            let dims = self.dims()?;
            decl.fields.push(RawField {
                name: name.to_owned(),
                ty: TypeExpr::array_of(ty.clone(), dims),
                mods: mods.clone(),
                line,
            });
            if self.eat(b'=')? {
                self.lex.skip_initializer().map_err(|e| self.lex_error(e))?;
            }
            let t = self.next()?;
            match t.tok {
                Tok::Punct(b';') => return Ok(()),
                Tok::Punct(b',') => (name, line) = self.ident()?,
                _ => return Err(self.unexpected(t, "`;` or `,`")),
            }
        }
    }

    fn param(&mut self) -> PResult<RawParam> {
        // `final` and annotations only.
        self.modifiers()?;
        let ty = self.type_expr()?;
        self.skip_type_annotations()?;
        let varargs = self.peek()?.tok == Tok::Ellipsis;
        if varargs {
            self.next()?;
        }
        let (mut name, _) = self.ident()?;
        // Receiver parameter: `Outer Outer.this`.
        while self.eat(b'.')? {
            name = self.ident()?.0;
        }
        let dims = self.dims()?;
        let ty = TypeExpr::array_of(ty, dims + u32::from(varargs));
        Ok(RawParam {
            name: name.to_owned(),
            ty,
            varargs,
        })
    }

    fn method_rest(
        &mut self,
        name: &str,
        line: u32,
        mods: Mods,
        type_params: Vec<RawTypeParam>,
        return_type: Option<TypeExpr>,
    ) -> PResult<RawMethod> {
        self.expect(b'(')?;
        let mut params = Vec::new();
        if !self.eat(b')')? {
            loop {
                let p = self.param()?;
                if p.name != "this" {
                    params.push(p);
                }
                if !self.eat(b',')? {
                    break;
                }
            }
            self.expect(b')')?;
        }
        let dims = self.dims()?;
        let return_type = return_type.map(|t| TypeExpr::array_of(t, dims));
        let throws = if self.eat_word("throws")? {
            self.type_list()?
        } else {
            Vec::new()
        };
        let t = self.next()?;
        let has_body = match t.tok {
            Tok::Punct(b'{') => {
                self.skip_block()?;
                true
            }
            Tok::Punct(b';') => false,
            Tok::Ident("default") => {
                self.lex.skip_initializer().map_err(|e| self.lex_error(e))?;
                self.expect(b';')?;
                false
            }
            _ => return Err(self.unexpected(t, "method body or `;`")),
        };
        Ok(RawMethod {
            name: name.to_owned(),
            constructor: return_type.is_none(),
            compact: false,
            type_params,
            params,
            return_type,
            throws,
            mods,
            has_body,
            line,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(s: &str) -> TypeExpr {
        TypeExpr::Named {
            segments: s.split('.').map(str::to_owned).collect(),
            args: Vec::new(),
        }
    }

    #[test]
    fn header_and_imports() {
        let u = parse_unit(
            "p/A.java",
            "package p.q; import java.util.*; import static java.lang.Math.max; class A {}",
        )
        .unwrap();
        assert_eq!(u.package, "p.q");
        assert_eq!(u.imports.len(), 2);
        assert!(u.imports[0].on_demand);
        assert!(u.imports[1].is_static && !u.imports[1].on_demand);
        assert_eq!(u.types[0].name, "A");
    }

    #[test]
    fn members_and_skipped_bodies() {
        let src = r#"
            public abstract class A<T extends Comparable<? super T>> extends B<T> implements C, D {
                static { init("}"); }
                public static final int X = 1, Y[] = {1, 2}, Z;
                protected java.util.Map<String, java.util.List<T>> m = new java.util.HashMap<>();
                public A(int a, String... rest) throws java.io.IOException { if (a > 0) { } }
                public abstract <E> E[] pick(final @Ann List<E> xs)[];
                @Deprecated(since = "1") void old() { new Object() { void x() {} }; }
                public class Inner {}
            }"#;
        let u = parse_unit("A.java", src).unwrap();
        let a = &u.types[0];
        assert_eq!(a.type_params[0].name, "T");
        assert_eq!(a.extends.len(), 1);
        assert_eq!(a.implements.len(), 2);
        let names: Vec<&str> = a.fields.iter().map(|f| f.name.as_str()).collect();
        assert_eq!(names, ["X", "Y", "Z", "m"]);
        assert_eq!(a.fields[1].ty, TypeExpr::array_of(TypeExpr::Primitive(Primitive::Int), 1));
        let ctor = &a.methods[0];
        assert!(ctor.constructor);
        assert!(ctor.params[1].varargs);
        assert_eq!(ctor.params[1].ty, TypeExpr::array_of(named("String"), 1));
        assert_eq!(ctor.throws, vec![named("java.io.IOException")]);
        let pick = &a.methods[1];
        assert_eq!(pick.type_params.len(), 1);
        assert!(!pick.has_body);
        assert_eq!(
            pick.return_type,
            Some(TypeExpr::array_of(
                TypeExpr::Named {
                    segments: vec!["E".into()],
                    args: vec![]
                },
                2
            ))
        );
        assert_eq!(a.methods[2].mods.annotations[0].args.as_deref(), Some("since = \"1\""));
        assert_eq!(a.types[0].name, "Inner");
        assert_eq!(a.types[0].line, 9);
    }

    #[test]
    fn enums_records_annotations() {
        let src = r#"
            enum E implements Runnable { A, @Deprecated B(1) { void f() {} }, ; public void run() {} }
            record R<T>(int x, T... ys) implements Comparable<R<T>> { public R { } }
            @interface M { String value() default "}"; int[] n() default {1}; }
            sealed interface S permits X, Y {}
            non-sealed class X implements S {}
        "#;
        let u = parse_unit("E.java", src).unwrap();
        let e = &u.types[0];
        assert_eq!(e.kind, TypeKind::Enum);
        assert_eq!(e.constants.len(), 2);
        assert!(e.constants[1].has_body && !e.constants[0].has_body);
        assert_eq!(e.methods[0].name, "run");
        let r = &u.types[1];
        assert_eq!(r.record_components.len(), 2);
        assert!(r.record_components[1].varargs);
        assert!(r.methods[0].compact);
        let m = &u.types[2];
        assert_eq!(m.kind, TypeKind::Annotation);
        assert_eq!(m.methods.len(), 2);
        assert!(u.types[3].mods.has(flags::SEALED));
        assert!(u.types[4].mods.has(flags::NON_SEALED));
    }

    #[test]
    fn generic_closers_and_qualified_inner_types() {
        let src = "class A { Map<String, List<Map<K, V>>> m; Outer<String>.Inner<Integer> i; }";
        let u = parse_unit("A.java", src).unwrap();
        let i = &u.types[0].fields[1].ty;
        assert_eq!(
            *i,
            TypeExpr::Named {
                segments: vec!["Outer".into(), "Inner".into()],
                args: vec![named("Integer")]
            }
        );
    }

    #[test]
    fn errors_carry_file_and_line() {
        let err = parse_unit("x/B.java", "class B {\n  int x\n}").unwrap_err();
        assert_eq!(err.file, "x/B.java");
        assert_eq!(err.line, 3);
        let err = parse_unit("C.java", "class C { void m() { ").unwrap_err();
        assert_eq!(err.line, 1);
    }

    #[test]
    fn module_declaration_is_empty() {
        let u = parse_unit("module-info.java", "module a.b { exports a.b; }").unwrap();
        assert!(u.types.is_empty());
    }
}
