//! Sequence file reading and writing under the three token modes.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use wed_core::{Alphabet, Symbol};

/// How a sequence file maps to symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TokenMode {
    /// Whitespace-separated names, the default.
    Tokens,
    /// One symbol per byte; a single trailing line break is ignored.
    Bytes,
    /// One symbol per Unicode scalar; a single trailing line break is
    /// ignored.
    Chars,
}

pub fn token_mode(bytes: bool, chars: bool) -> TokenMode {
    match (bytes, chars) {
        (true, _) => TokenMode::Bytes,
        (_, true) => TokenMode::Chars,
        _ => TokenMode::Tokens,
    }
}

/// Reads one sequence file, interning its symbols in input order.
pub fn read_sequence(path: &Path, mode: TokenMode, alpha: &mut Alphabet) -> Result<Vec<Symbol>> {
    match mode {
        TokenMode::Tokens => {
            let text = read_text(path)?;
            Ok(alpha.intern_tokens(&text))
        }
        TokenMode::Bytes => {
            let mut raw = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
            if raw.last() == Some(&b'\n') {
                raw.pop();
                if raw.last() == Some(&b'\r') {
                    raw.pop();
                }
            }
            Ok(raw
                .iter()
                .map(|&b| alpha.intern(&char::from(b).to_string()))
                .collect())
        }
        TokenMode::Chars => {
            let mut text = read_text(path)?;
            if text.ends_with('\n') {
                text.pop();
                if text.ends_with('\r') {
                    text.pop();
                }
            }
            Ok(text.chars().map(|c| alpha.intern(&c.to_string())).collect())
        }
    }
}

/// Inverse of [`read_sequence`]: bytes suitable for writing back to a
/// file that re-parses to `x` under the same mode.
pub fn render_sequence(x: &[Symbol], mode: TokenMode, alpha: &Alphabet) -> Result<Vec<u8>> {
    match mode {
        TokenMode::Tokens => {
            let names: Vec<&str> = x.iter().map(|&s| alpha.name(s)).collect();
            let mut text = names.join(" ");
            text.push('\n');
            Ok(text.into_bytes())
        }
        TokenMode::Bytes => {
            let mut raw = Vec::with_capacity(x.len() + 1);
            for &s in x {
                let name = alpha.name(s);
                let mut chars = name.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) if (c as u32) < 0x100 => raw.push(c as u8),
                    _ => bail!("symbol {name:?} does not name a single byte"),
                }
            }
            raw.push(b'\n');
            Ok(raw)
        }
        TokenMode::Chars => {
            let mut text = String::with_capacity(x.len() + 1);
            for &s in x {
                text.push_str(alpha.name(s));
            }
            text.push('\n');
            Ok(text.into_bytes())
        }
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn write_file(path: &Path, contents: &[u8]) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

/// Appends `.x` or `.y` to a kernel output prefix.
pub fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_owned();
    name.push(suffix);
    PathBuf::from(name)
}

/// Reads a batch list: one instance per line, `fields` whitespace-
/// separated paths each. Blank lines and `#` comments are skipped.
pub fn read_list(path: &Path, fields: usize) -> Result<Vec<Vec<PathBuf>>> {
    let text = read_text(path)?;
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<PathBuf> = line.split_whitespace().map(PathBuf::from).collect();
        if parts.len() != fields {
            bail!(
                "{}:{}: expected {fields} path(s) per line, found {}",
                path.display(),
                idx + 1,
                parts.len()
            );
        }
        out.push(parts);
    }
    Ok(out)
}
