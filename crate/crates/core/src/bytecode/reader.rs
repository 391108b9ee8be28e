//! Declaration-level class-file reader.
//!
//! Only the constant pool and the attributes that matter for API modeling are
//! decoded; `Code` and every debug attribute are skipped by length without
//! being looked at.

use std::borrow::Cow;

use crate::error::ClassFileError;

pub const ACC_PUBLIC: u16 = 0x0001;
pub const ACC_PRIVATE: u16 = 0x0002;
pub const ACC_PROTECTED: u16 = 0x0004;
pub const ACC_STATIC: u16 = 0x0008;
pub const ACC_FINAL: u16 = 0x0010;
pub const ACC_SYNCHRONIZED: u16 = 0x0020;
pub const ACC_VOLATILE: u16 = 0x0040;
pub const ACC_BRIDGE: u16 = 0x0040;
pub const ACC_TRANSIENT: u16 = 0x0080;
pub const ACC_VARARGS: u16 = 0x0080;
pub const ACC_NATIVE: u16 = 0x0100;
pub const ACC_INTERFACE: u16 = 0x0200;
pub const ACC_ABSTRACT: u16 = 0x0400;
pub const ACC_SYNTHETIC: u16 = 0x1000;
pub const ACC_ANNOTATION: u16 = 0x2000;
pub const ACC_ENUM: u16 = 0x4000;
pub const ACC_MANDATED: u16 = 0x8000;

const MAGIC: u32 = 0xCAFE_BABE;
const MIN_MAJOR: u16 = 45;
/// Java 25.
const MAX_MAJOR: u16 = 69;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerClassRecord {
    pub inner: String,
    pub outer: Option<String>,
    pub inner_name: Option<String>,
    pub access_flags: u16,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MemberInfo {
    pub access_flags: u16,
    pub name: String,
    pub descriptor: String,
    pub signature: Option<String>,
    /// Internal names from the `Exceptions` attribute (methods only).
    pub exceptions: Vec<String>,
    /// Annotation type descriptors (`Lpkg/Ann;`), visible and invisible.
    pub annotations: Vec<String>,
    /// Names from `MethodParameters`, with their flags.
    pub parameters: Option<Vec<(Option<String>, u16)>>,
    pub deprecated: bool,
}

/// What a class file says about its declaration, nothing more.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassFileSummary {
    pub major_version: u16,
    pub binary_name: String,
    pub access_flags: u16,
    pub super_name: Option<String>,
    pub interfaces: Vec<String>,
    pub signature: Option<String>,
    pub fields: Vec<MemberInfo>,
    pub methods: Vec<MemberInfo>,
    pub inner_classes: Vec<InnerClassRecord>,
    pub annotations: Vec<String>,
    pub deprecated: bool,
    /// Set for local and anonymous classes.
    pub enclosing_method: bool,
    pub permitted_subclasses: bool,
}

#[derive(Clone, Copy)]
enum Constant {
    Unused,
    Utf8 { start: usize, len: usize },
    Class(u16),
    Other,
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn u1(&mut self) -> Result<u8, ClassFileError> {
        let b = *self.bytes.get(self.pos).ok_or(ClassFileError::Truncated(self.pos))?;
        self.pos += 1;
        Ok(b)
    }

    fn u2(&mut self) -> Result<u16, ClassFileError> {
        let s = self.take(2)?;
        Ok(u16::from_be_bytes([s[0], s[1]]))
    }

    fn u4(&mut self) -> Result<u32, ClassFileError> {
        let s = self.take(4)?;
        Ok(u32::from_be_bytes([s[0], s[1], s[2], s[3]]))
    }

    fn take(&mut self, n: usize) -> Result<&'a [u8], ClassFileError> {
        let end = self.pos.checked_add(n).ok_or(ClassFileError::Truncated(self.pos))?;
        let slice = self
            .bytes
            .get(self.pos..end)
            .ok_or(ClassFileError::Truncated(self.bytes.len()))?;
        self.pos = end;
        Ok(slice)
    }

    fn skip(&mut self, n: usize) -> Result<(), ClassFileError> {
        self.take(n).map(|_| ())
    }
}

struct Pool<'a> {
    bytes: &'a [u8],
    entries: Vec<Constant>,
}

impl<'a> Pool<'a> {
    fn read(r: &mut Reader<'a>) -> Result<Pool<'a>, ClassFileError> {
        let count = r.u2()? as usize;
        let mut entries = vec![Constant::Unused; count.max(1)];
        let mut i = 1;
        while i < count {
            let tag = r.u1()?;
            entries[i] = match tag {
                1 => {
                    let len = r.u2()? as usize;
                    let start = r.pos;
                    r.skip(len)?;
                    Constant::Utf8 { start, len }
                }
                7 => Constant::Class(r.u2()?),
                3 | 4 => {
                    r.skip(4)?;
                    Constant::Other
                }
                5 | 6 => {
                    r.skip(8)?;
                    i += 1;
                    Constant::Other
                }
                8 | 16 | 19 | 20 => {
                    r.skip(2)?;
                    Constant::Other
                }
                9 | 10 | 11 | 12 | 17 | 18 => {
                    r.skip(4)?;
                    Constant::Other
                }
                15 => {
                    r.skip(3)?;
                    Constant::Other
                }
                other => {
                    return Err(ClassFileError::ConstantPool(format!(
                        "unknown tag {other} at entry {i}"
                    )))
                }
            };
            i += 1;
        }
        Ok(Pool {
            bytes: r.bytes,
            entries,
        })
    }

    fn utf8(&self, index: u16) -> Result<Cow<'a, str>, ClassFileError> {
        match self.entries.get(index as usize) {
            Some(Constant::Utf8 { start, len }) => {
                decode_modified_utf8(&self.bytes[*start..*start + *len]).ok_or_else(|| {
                    ClassFileError::ConstantPool(format!("invalid modified UTF-8 at entry {index}"))
                })
            }
            _ => Err(ClassFileError::ConstantPool(format!(
                "entry {index} is not a UTF-8 constant"
            ))),
        }
    }

    fn class_name(&self, index: u16) -> Result<String, ClassFileError> {
        match self.entries.get(index as usize) {
            Some(Constant::Class(name)) => Ok(self.utf8(*name)?.into_owned()),
            _ => Err(ClassFileError::ConstantPool(format!(
                "entry {index} is not a class constant"
            ))),
        }
    }

    fn optional_class_name(&self, index: u16) -> Result<Option<String>, ClassFileError> {
        if index == 0 {
            Ok(None)
        } else {
            self.class_name(index).map(Some)
        }
    }

    fn optional_utf8(&self, index: u16) -> Result<Option<String>, ClassFileError> {
        if index == 0 {
            Ok(None)
        } else {
            self.utf8(index).map(|s| Some(s.into_owned()))
        }
    }
}

/// Decodes the JVM's modified UTF-8 (two-byte NUL, surrogate pairs encoded
/// as separate three-byte sequences).
fn decode_modified_utf8(bytes: &[u8]) -> Option<Cow<'_, str>> {
    if bytes.is_ascii() && !bytes.contains(&0) {
        return std::str::from_utf8(bytes).ok().map(Cow::Borrowed);
    }
    let mut units: Vec<u16> = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b & 0x80 == 0 {
            units.push(b as u16);
            i += 1;
        } else if b & 0xE0 == 0xC0 {
            let b2 = *bytes.get(i + 1)?;
            units.push((((b & 0x1F) as u16) << 6) | (b2 & 0x3F) as u16);
            i += 2;
        } else if b & 0xF0 == 0xE0 {
            let b2 = *bytes.get(i + 1)?;
            let b3 = *bytes.get(i + 2)?;
            units.push((((b & 0x0F) as u16) << 12) | (((b2 & 0x3F) as u16) << 6) | (b3 & 0x3F) as u16);
            i += 3;
        } else {
            return None;
        }
    }
    Some(Cow::Owned(String::from_utf16_lossy(&units)))
}

/// Parses a class file, keeping declaration-level data only.
pub fn read_class_file(bytes: &[u8]) -> Result<ClassFileSummary, ClassFileError> {
    let mut r = Reader { bytes, pos: 0 };
    if bytes.len() < 4 || r.u4()? != MAGIC {
        return Err(ClassFileError::BadMagic);
    }
    let _minor = r.u2()?;
    let major = r.u2()?;
    if !(MIN_MAJOR..=MAX_MAJOR).contains(&major) {
        return Err(ClassFileError::UnsupportedVersion(major));
    }
    let pool = Pool::read(&mut r)?;
    let access_flags = r.u2()?;
    let this_class = r.u2()?;
    let super_class = r.u2()?;
    let mut summary = ClassFileSummary {
        major_version: major,
        binary_name: pool.class_name(this_class)?,
        access_flags,
        super_name: pool.optional_class_name(super_class)?,
        ..ClassFileSummary::default()
    };
    let interface_count = r.u2()?;
    for _ in 0..interface_count {
        let index = r.u2()?;
        summary.interfaces.push(pool.class_name(index)?);
    }
    summary.fields = read_members(&mut r, &pool)?;
    summary.methods = read_members(&mut r, &pool)?;

    let attribute_count = r.u2()?;
    for _ in 0..attribute_count {
        let name = pool.utf8(r.u2()?)?;
        let len = r.u4()? as usize;
        let start = r.pos;
        r.skip(len)?;
        let mut a = Reader { bytes, pos: start };
        match name.as_ref() {
            "Signature" => summary.signature = Some(pool.utf8(a.u2()?)?.into_owned()),
            "InnerClasses" => {
                let n = a.u2()?;
                for _ in 0..n {
                    let inner = pool.class_name(a.u2()?)?;
                    let outer = pool.optional_class_name(a.u2()?)?;
                    let inner_name = pool.optional_utf8(a.u2()?)?;
                    let access_flags = a.u2()?;
                    summary.inner_classes.push(InnerClassRecord {
                        inner,
                        outer,
                        inner_name,
                        access_flags,
                    });
                }
            }
            "RuntimeVisibleAnnotations" | "RuntimeInvisibleAnnotations" => {
                read_annotation_types(&mut a, &pool, &mut summary.annotations)?
            }
            "Deprecated" => summary.deprecated = true,
            "EnclosingMethod" => summary.enclosing_method = true,
            "PermittedSubclasses" => summary.permitted_subclasses = true,
            _ => {}
        }
    }
    Ok(summary)
}

fn read_members(r: &mut Reader<'_>, pool: &Pool<'_>) -> Result<Vec<MemberInfo>, ClassFileError> {
    let count = r.u2()?;
    let mut members = Vec::with_capacity(count as usize);
    for _ in 0..count {
        let access_flags = r.u2()?;
        let name = pool.utf8(r.u2()?)?.into_owned();
        let descriptor = pool.utf8(r.u2()?)?.into_owned();
        let mut member = MemberInfo {
            access_flags,
            name,
            descriptor,
            ..MemberInfo::default()
        };
        let attribute_count = r.u2()?;
        for _ in 0..attribute_count {
            let name_index = r.u2()?;
            let len = r.u4()? as usize;
            let start = r.pos;
            // Bodies, line tables, stack maps: skipped by length, never decoded.
            r.skip(len)?;
            let name = pool.utf8(name_index)?;
            let mut a = Reader {
                bytes: r.bytes,
                pos: start,
            };
            match name.as_ref() {
                "Signature" => member.signature = Some(pool.utf8(a.u2()?)?.into_owned()),
                "Exceptions" => {
                    let n = a.u2()?;
                    for _ in 0..n {
                        member.exceptions.push(pool.class_name(a.u2()?)?);
                    }
                }
                "MethodParameters" => {
                    let n = a.u1()?;
                    let mut params = Vec::with_capacity(n as usize);
                    for _ in 0..n {
                        let name = pool.optional_utf8(a.u2()?)?;
                        let flags = a.u2()?;
                        params.push((name, flags));
                    }
                    member.parameters = Some(params);
                }
                "RuntimeVisibleAnnotations" | "RuntimeInvisibleAnnotations" => {
                    read_annotation_types(&mut a, pool, &mut member.annotations)?
                }
                "Deprecated" => member.deprecated = true,
                _ => {}
            }
        }
        members.push(member);
    }
    Ok(members)
}

fn read_annotation_types(
    r: &mut Reader<'_>,
    pool: &Pool<'_>,
    out: &mut Vec<String>,
) -> Result<(), ClassFileError> {
    let n = r.u2()?;
    for _ in 0..n {
        out.push(pool.utf8(r.u2()?)?.into_owned());
        skip_annotation_pairs(r)?;
    }
    Ok(())
}

fn skip_annotation_pairs(r: &mut Reader<'_>) -> Result<(), ClassFileError> {
    let pairs = r.u2()?;
    for _ in 0..pairs {
        r.skip(2)?;
        skip_element_value(r)?;
    }
    Ok(())
}

fn skip_element_value(r: &mut Reader<'_>) -> Result<(), ClassFileError> {
    match r.u1()? {
        b'B' | b'C' | b'D' | b'F' | b'I' | b'J' | b'S' | b'Z' | b's' | b'c' => r.skip(2),
        b'e' => r.skip(4),
        b'@' => {
            r.skip(2)?;
            skip_annotation_pairs(r)
        }
        b'[' => {
            let n = r.u2()?;
            for _ in 0..n {
                skip_element_value(r)?;
            }
            Ok(())
        }
        other => Err(ClassFileError::ConstantPool(format!(
            "unknown annotation element tag {:?}",
            other as char
        ))),
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Tiny class-file assembler for reader tests.
    pub struct ClassWriter {
        pool: Vec<Vec<u8>>,
    }

    impl ClassWriter {
        pub fn new() -> Self {
            ClassWriter { pool: Vec::new() }
        }

        pub fn utf8(&mut self, s: &str) -> u16 {
            let mut e = vec![1u8];
            e.extend((s.len() as u16).to_be_bytes());
            e.extend(s.as_bytes());
            self.push(e)
        }

        pub fn class(&mut self, name: &str) -> u16 {
            let n = self.utf8(name);
            let mut e = vec![7u8];
            e.extend(n.to_be_bytes());
            self.push(e)
        }

        fn push(&mut self, e: Vec<u8>) -> u16 {
            if let Some(i) = self.pool.iter().position(|x| *x == e) {
                return i as u16 + 1;
            }
            self.pool.push(e);
            self.pool.len() as u16
        }

        /// `methods`: (flags, name, descriptor, code length)
        pub fn finish(
            mut self,
            flags: u16,
            this: &str,
            super_: Option<&str>,
            methods: &[(u16, &str, &str, usize)],
        ) -> Vec<u8> {
            let this = self.class(this);
            let super_ = super_.map(|s| self.class(s)).unwrap_or(0);
            let code = self.utf8("Code");
            let methods: Vec<(u16, u16, u16, usize)> = methods
                .iter()
                .map(|(f, n, d, len)| (*f, self.utf8(n), self.utf8(d), *len))
                .collect();
            let mut out = vec![0xCA, 0xFE, 0xBA, 0xBE, 0, 0, 0, 61];
            out.extend((self.pool.len() as u16 + 1).to_be_bytes());
            for e in &self.pool {
                out.extend(e);
            }
            out.extend(flags.to_be_bytes());
            out.extend(this.to_be_bytes());
            out.extend(super_.to_be_bytes());
            out.extend(0u16.to_be_bytes()); // interfaces
            out.extend(0u16.to_be_bytes()); // fields
            out.extend((methods.len() as u16).to_be_bytes());
            for (f, n, d, len) in methods {
                out.extend(f.to_be_bytes());
                out.extend(n.to_be_bytes());
                out.extend(d.to_be_bytes());
                out.extend(1u16.to_be_bytes());
                out.extend(code.to_be_bytes());
                out.extend((len as u32).to_be_bytes());
                // Junk that would never parse as attributes.
                out.extend(std::iter::repeat_n(0xFFu8, len));
            }
            out.extend(0u16.to_be_bytes()); // attributes
            out
        }
    }

    #[test]
    fn minimal_class() {
        let bytes = ClassWriter::new().finish(
            ACC_PUBLIC | 0x20,
            "p/A",
            Some("java/lang/Object"),
            &[(ACC_PUBLIC, "<init>", "()V", 5)],
        );
        let s = read_class_file(&bytes).unwrap();
        assert_eq!(s.binary_name, "p/A");
        assert_eq!(s.super_name.as_deref(), Some("java/lang/Object"));
        assert_eq!(s.methods.len(), 1);
        assert_eq!(s.methods[0].name, "<init>");
    }

    #[test]
    fn bad_magic() {
        assert_eq!(read_class_file(b"PK\x03\x04rest"), Err(ClassFileError::BadMagic));
        assert_eq!(read_class_file(b""), Err(ClassFileError::BadMagic));
    }

    #[test]
    fn truncated_and_version_errors() {
        let bytes = ClassWriter::new().finish(ACC_PUBLIC, "p/A", Some("java/lang/Object"), &[]);
        for cut in [6, 9, 20, bytes.len() - 1] {
            assert!(matches!(
                read_class_file(&bytes[..cut]),
                Err(ClassFileError::Truncated(_))
            ));
        }
        let mut future = bytes.clone();
        future[7] = 99;
        assert_eq!(read_class_file(&future), Err(ClassFileError::UnsupportedVersion(99)));
    }

    #[test]
    fn method_body_size_does_not_matter() {
        let small = ClassWriter::new().finish(
            ACC_PUBLIC,
            "p/A",
            Some("java/lang/Object"),
            &[(ACC_PUBLIC, "m", "()V", 1)],
        );
        let huge = ClassWriter::new().finish(
            ACC_PUBLIC,
            "p/A",
            Some("java/lang/Object"),
            &[(ACC_PUBLIC, "m", "()V", 60_000)],
        );
        let a = read_class_file(&small).unwrap();
        let b = read_class_file(&huge).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn modified_utf8() {
        assert_eq!(decode_modified_utf8(&[0xC0, 0x80]).unwrap(), "\0");
        // U+1F600 as a CESU-style surrogate pair.
        let bytes = [0xED, 0xA0, 0xBD, 0xED, 0xB8, 0x80];
        assert_eq!(decode_modified_utf8(&bytes).unwrap(), "\u{1F600}");
        assert_eq!(decode_modified_utf8("é".as_bytes()).unwrap(), "é");
    }
}
