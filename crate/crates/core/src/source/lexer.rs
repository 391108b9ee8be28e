//! Hand-written Java lexer with raw skipping for bodies and initializers.
//!
//! The lexer is a copyable cursor: lookahead is done by cloning it. Bodies are
//! never tokenized; [`Lexer::skip_block`] scans bytes and only understands
//! enough (comments, strings, text blocks, char literals) to match braces.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tok<'a> {
    Ident(&'a str),
    Punct(u8),
    Ellipsis,
    Literal,
    Eof,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Token<'a> {
    pub tok: Tok<'a>,
    pub line: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LexError {
    UnterminatedComment(u32),
    UnterminatedLiteral(u32),
    UnbalancedBraces(u32),
}

#[derive(Clone, Copy)]
pub struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    line: u32,
}

fn is_ident_start(b: u8) -> bool {
    b.is_ascii_alphabetic() || b == b'_' || b == b'$' || b >= 0x80
}

fn is_ident_part(b: u8) -> bool {
    is_ident_start(b) || b.is_ascii_digit()
}

impl<'a> Lexer<'a> {
    pub fn new(src: &'a str) -> Self {
        let bytes = src.as_bytes();
        // Skip a UTF-8 byte-order mark.
        let pos = if bytes.starts_with(&[0xEF, 0xBB, 0xBF]) { 3 } else { 0 };
        Lexer {
            src,
            bytes,
            pos,
            line: 1,
        }
    }

    pub fn line(&self) -> u32 {
        self.line
    }

    fn at(&self, offset: usize) -> u8 {
        self.bytes.get(self.pos + offset).copied().unwrap_or(0)
    }

    fn bump_newlines(&mut self, from: usize, to: usize) {
        self.line += self.bytes[from..to].iter().filter(|&&b| b == b'\n').count() as u32;
    }

    /// Skips whitespace and comments.
    fn trivia(&mut self) -> Result<(), LexError> {
        loop {
            match self.at(0) {
                b'\n' => {
                    self.line += 1;
                    self.pos += 1;
                }
                b' ' | b'\t' | b'\r' | 0x0C => self.pos += 1,
                b'/' if self.at(1) == b'/' => {
                    while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                b'/' if self.at(1) == b'*' => {
                    let start = self.pos;
                    let line = self.line;
                    let end = find(&self.bytes[self.pos + 2..], b"*/")
                        .ok_or(LexError::UnterminatedComment(line))?;
                    self.pos += 2 + end + 2;
                    self.bump_newlines(start, self.pos);
                }
                _ => return Ok(()),
            }
        }
    }

    pub fn next_token(&mut self) -> Result<Token<'a>, LexError> {
        self.trivia()?;
        let line = self.line;
        let Some(&b) = self.bytes.get(self.pos) else {
            return Ok(Token {
                tok: Tok::Eof,
                line,
            });
        };
        let tok = if is_ident_start(b) {
            let start = self.pos;
            while self.pos < self.bytes.len() && is_ident_part(self.bytes[self.pos]) {
                self.pos += 1;
            }
            Tok::Ident(&self.src[start..self.pos])
        } else if b.is_ascii_digit() || (b == b'.' && self.at(1).is_ascii_digit()) {
            self.number();
            Tok::Literal
        } else if b == b'"' || b == b'\'' {
            self.literal()?;
            Tok::Literal
        } else if b == b'.' && self.at(1) == b'.' && self.at(2) == b'.' {
            self.pos += 3;
            Tok::Ellipsis
        } else {
            self.pos += 1;
            Tok::Punct(b)
        };
        Ok(Token { tok, line })
    }

    fn number(&mut self) {
        while self.pos < self.bytes.len() {
            let b = self.bytes[self.pos];
            let exponent_sign =
                (b == b'+' || b == b'-') && matches!(self.bytes[self.pos - 1], b'e' | b'E' | b'p' | b'P');
            if b.is_ascii_alphanumeric() || b == b'_' || b == b'.' || exponent_sign {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    /// Consumes a string, text block, or char literal starting at `pos`.
    fn literal(&mut self) -> Result<(), LexError> {
        let line = self.line;
        let quote = self.bytes[self.pos];
        if quote == b'"' && self.at(1) == b'"' && self.at(2) == b'"' {
            let start = self.pos;
            self.pos += 3;
            loop {
                match self.bytes.get(self.pos) {
                    None => return Err(LexError::UnterminatedLiteral(line)),
                    Some(b'\\') => self.pos += 2,
                    Some(b'"') if self.at(1) == b'"' && self.at(2) == b'"' => {
                        self.pos += 3;
                        break;
                    }
                    Some(_) => self.pos += 1,
                }
            }
            self.bump_newlines(start, self.pos.min(self.bytes.len()));
            return Ok(());
        }
        self.pos += 1;
        loop {
            match self.bytes.get(self.pos) {
                None | Some(b'\n') => return Err(LexError::UnterminatedLiteral(line)),
                Some(b'\\') => self.pos += 2,
                Some(&c) if c == quote => {
                    self.pos += 1;
                    return Ok(());
                }
                Some(_) => self.pos += 1,
            }
        }
    }

    /// Skips to just past the `}` matching an already consumed `{`.
    pub fn skip_block(&mut self) -> Result<(), LexError> {
        let open_line = self.line;
        let mut depth = 1usize;
        loop {
            self.trivia()?;
            let Some(&b) = self.bytes.get(self.pos) else {
                return Err(LexError::UnbalancedBraces(open_line));
            };
            match b {
                b'{' => {
                    depth += 1;
                    self.pos += 1;
                }
                b'}' => {
                    depth -= 1;
                    self.pos += 1;
                    if depth == 0 {
                        return Ok(());
                    }
                }
                b'"' | b'\'' => self.literal()?,
                _ => {
                    // Fast path: run to the next byte that could matter.
                    let rest = &self.bytes[self.pos + 1..];
                    let skip = rest
                        .iter()
                        .position(|&c| matches!(c, b'{' | b'}' | b'"' | b'\'' | b'/' | b'\n'))
                        .unwrap_or(rest.len());
                    self.pos += 1 + skip;
                }
            }
        }
    }

    /// Skips to just past the `)` matching an already consumed `(`, and
    /// returns the raw text in between.
    pub fn skip_parens(&mut self) -> Result<&'a str, LexError> {
        let open_line = self.line;
        let start = self.pos;
        let mut depth = 1usize;
        loop {
            self.trivia()?;
            let Some(&b) = self.bytes.get(self.pos) else {
                return Err(LexError::UnbalancedBraces(open_line));
            };
            match b {
                b'(' => depth += 1,
                b')' => {
                    depth -= 1;
                    if depth == 0 {
                        let text = &self.src[start..self.pos];
                        self.pos += 1;
                        return Ok(text);
                    }
                }
                b'"' | b'\'' => {
                    self.literal()?;
                    continue;
                }
                _ => {}
            }
            self.pos += 1;
        }
    }

    /// Skips an initializer or default value up to the `;` or the `,` that
    /// ends it at nesting depth zero. Returns the terminator without
    /// consuming it.
    ///
    /// A `,` only ends the initializer when it is followed by what looks like
    /// another declarator (`name =`, `name,`, `name;`, `name[`), so commas in
    /// generic arguments such as `new HashMap<K, V>()` are skipped.
    pub fn skip_initializer(&mut self) -> Result<u8, LexError> {
        let open_line = self.line;
        let mut depth = 0usize;
        loop {
            self.trivia()?;
            let Some(&b) = self.bytes.get(self.pos) else {
                return Err(LexError::UnbalancedBraces(open_line));
            };
            match b {
                b'(' | b'[' | b'{' => depth += 1,
                b')' | b']' | b'}' => {
                    if depth == 0 {
                        return Err(LexError::UnbalancedBraces(open_line));
                    }
                    depth -= 1;
                }
                b';' if depth == 0 => return Ok(b';'),
                b',' if depth == 0 => {
                    let mut look = *self;
                    look.pos += 1;
                    if let (Ok(Token { tok: Tok::Ident(_), .. }), Ok(next)) =
                        (look.next_token(), look.next_token())
                    {
                        if matches!(next.tok, Tok::Punct(b'=' | b',' | b';' | b'[')) {
                            return Ok(b',');
                        }
                    }
                }
                b'"' | b'\'' => {
                    self.literal()?;
                    continue;
                }
                _ if is_ident_start(b) || b.is_ascii_digit() => {
                    // Consume whole words so identifiers never split.
                    while self.pos < self.bytes.len() && is_ident_part(self.bytes[self.pos]) {
                        self.pos += 1;
                    }
                    continue;
                }
                _ => {}
            }
            self.pos += 1;
        }
    }
}

fn find(haystack: &[u8], needle: &[u8]) -> Option<usize> {
    haystack.windows(needle.len()).position(|w| w == needle)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tokens(src: &str) -> Vec<Tok<'_>> {
        let mut lx = Lexer::new(src);
        let mut out = Vec::new();
        loop {
            let t = lx.next_token().unwrap();
            if t.tok == Tok::Eof {
                return out;
            }
            out.push(t.tok);
        }
    }

    #[test]
    fn basic_tokens() {
        assert_eq!(
            tokens("public <T> void m(String... xs) /* c */ // d\n"),
            vec![
                Tok::Ident("public"),
                Tok::Punct(b'<'),
                Tok::Ident("T"),
                Tok::Punct(b'>'),
                Tok::Ident("void"),
                Tok::Ident("m"),
                Tok::Punct(b'('),
                Tok::Ident("String"),
                Tok::Ellipsis,
                Tok::Ident("xs"),
                Tok::Punct(b')'),
            ]
        );
    }

    #[test]
    fn skip_block_ignores_braces_in_literals_and_comments() {
        let src = r#"{ String s = "}"; char c = '}'; /* } */ // }
            String t = """
                } { "" }
                """; if (x) { y(); } } after"#;
        let mut lx = Lexer::new(src);
        assert_eq!(lx.next_token().unwrap().tok, Tok::Punct(b'{'));
        lx.skip_block().unwrap();
        let t = lx.next_token().unwrap();
        assert_eq!(t.tok, Tok::Ident("after"));
        assert_eq!(t.line, 4);
    }

    #[test]
    fn unbalanced_block_is_an_error() {
        let mut lx = Lexer::new("{ { }");
        lx.next_token().unwrap();
        assert_eq!(lx.skip_block(), Err(LexError::UnbalancedBraces(1)));
    }

    #[test]
    fn initializer_stops_at_declarator_comma_only() {
        let mut lx = Lexer::new("new HashMap<A, B>(), next = 2;");
        assert_eq!(lx.skip_initializer().unwrap(), b',');
        lx.next_token().unwrap();
        assert_eq!(lx.next_token().unwrap().tok, Tok::Ident("next"));
        let mut lx = Lexer::new("x -> { return a; };");
        assert_eq!(lx.skip_initializer().unwrap(), b';');
    }

    #[test]
    fn escaped_quotes() {
        assert_eq!(tokens(r#""a\"b" 'x' '\''"#).len(), 3);
    }
}
