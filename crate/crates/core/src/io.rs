//! Plain-text code files: `#` header lines, then one binary word per line.
//!
//! ```text
//! # length: 8
//! # label: H[a^2]^1
//! 10000000
//! ...
//! ```

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::word::{Code, Word};

pub fn format_code(code: &Code) -> String {
    let n = code.length();
    let mut out = format!("# length: {n}\n# label: {}\n", code.label());
    for w in code.iter() {
        out.push_str(&w.to_bin(n));
        out.push('\n');
    }
    out
}

pub fn parse_code(text: &str) -> Result<Code> {
    let mut length = None;
    let mut label = String::new();
    let mut words = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let t = raw.trim();
        if t.is_empty() {
            continue;
        }
        if let Some(header) = t.strip_prefix('#') {
            if let Some((key, value)) = header.split_once(':') {
                let value = value.trim();
                match key.trim() {
                    "length" => {
                        let n: usize = value.parse().map_err(|_| Error::Parse {
                            line,
                            msg: format!("bad length {value:?}"),
                        })?;
                        length = Some(n);
                    }
                    "label" => label = value.to_string(),
                    _ => {}
                }
            }
            continue;
        }
        let (w, n) = Word::parse_bin(t).map_err(|e| Error::Parse {
            line,
            msg: match e {
                Error::Parse { msg, .. } => msg,
                other => other.to_string(),
            },
        })?;
        match length {
            Some(expected) if expected != n => {
                return Err(Error::Parse {
                    line,
                    msg: format!("word of length {n} in a code of length {expected}"),
                })
            }
            None => length = Some(n),
            _ => {}
        }
        words.push(w);
    }
    let n = length.ok_or(Error::Parse {
        line: 0,
        msg: "no length header and no words".into(),
    })?;
    Code::new(n, words, label)
}

pub fn read_code(path: impl AsRef<Path>) -> Result<Code> {
    parse_code(&fs::read_to_string(path)?)
}

pub fn write_code(code: &Code, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, format_code(code))?;
    Ok(())
}
