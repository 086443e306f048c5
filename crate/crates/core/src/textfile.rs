//! UTF-8 file reading shared by every loader.

use std::fs;
use std::path::{Path, PathBuf};

use walkdir::WalkDir;

use crate::error::{Error, Result};

/// Every regular file below `root` as `(relative path with '/' separators,
/// full path)`, sorted by relative path.
pub(crate) fn files_under(root: &Path) -> Result<Vec<(String, PathBuf)>> {
    let mut out = Vec::new();
    for entry in WalkDir::new(root).min_depth(1) {
        let entry = entry.map_err(|e| {
            let path = e.path().unwrap_or(root).to_path_buf();
            Error::io(path, e.into())
        })?;
        if !entry.file_type().is_file() {
            continue;
        }
        let rel = entry
            .path()
            .strip_prefix(root)
            .expect("walked path is under root")
            .components()
            .map(|c| c.as_os_str().to_string_lossy())
            .collect::<Vec<_>>()
            .join("/");
        out.push((rel, entry.into_path()));
    }
    out.sort();
    Ok(out)
}

const BOM: char = '\u{FEFF}';

/// Reads a file as UTF-8, stripping a leading byte-order mark. Invalid bytes
/// are reported with their offset rather than replaced.
pub fn read_utf8(path: &Path) -> Result<String> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    decode_utf8(path, bytes)
}

pub(crate) fn decode_utf8(path: &Path, bytes: Vec<u8>) -> Result<String> {
    let mut text = String::from_utf8(bytes)
        .map_err(|e| Error::InvalidUtf8 { path: path.to_path_buf(), offset: e.utf8_error().valid_up_to() })?;
    if text.starts_with(BOM) {
        text.drain(..BOM.len_utf8());
    }
    Ok(text)
}

/// Iterates `(line_number, line)` over lines that are neither blank nor `#`
/// comments. Line numbers are 1-based; trailing `\r` is removed.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.strip_suffix('\r').unwrap_or(line);
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bom_is_stripped() {
        let text = decode_utf8(Path::new("x"), "\u{FEFF}घर".as_bytes().to_vec()).unwrap();
        assert_eq!(text, "घर");
    }

    #[test]
    fn invalid_byte_offset_is_reported() {
        let mut bytes = "घर".as_bytes().to_vec();
        bytes.push(0xFF);
        match decode_utf8(Path::new("a.txt"), bytes) {
            Err(Error::InvalidUtf8 { offset, path }) => {
                assert_eq!(offset, 6);
                assert_eq!(path, Path::new("a.txt"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn comments_and_blanks_skipped() {
        let lines: Vec<_> = content_lines("# c\n\nका\r\n  \nहै").collect();
        assert_eq!(lines, vec![(3, "का"), (5, "है")]);
    }
}
