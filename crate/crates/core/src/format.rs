//! The `subsys-code v1` text format.
//!
//! ```text
//! subsys-code v1
//! q=2 n=3 layout=symplectic linearity=additive
//! 1 0 1 | 0 1 1
//! ```
//!
//! Entries are base-p packed integers separated by spaces; symplectic rows
//! split their halves with `|`; pauli rows (q = 2 only) are bare strings over
//! `IXYZ`. `#` starts a comment. Emitting a parsed file reproduces it byte
//! for byte when it has no comments and single-space separators.

use std::fmt;
use std::str::FromStr;

use crate::additive_code::{AdditiveCode, CodeVector, Layout, Linearity};
use crate::catalog::pauli::{parse_pauli_row, to_pauli};
use crate::error::{Error, Result};
use crate::finite_field::FieldSpec;

const MAGIC: &str = "subsys-code v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileLayout {
    Classical,
    Symplectic,
    Pauli,
}

impl FileLayout {
    pub fn name(self) -> &'static str {
        match self {
            FileLayout::Classical => "classical",
            FileLayout::Symplectic => "symplectic",
            FileLayout::Pauli => "pauli",
        }
    }

    pub fn code_layout(self) -> Layout {
        match self {
            FileLayout::Classical => Layout::Plain,
            _ => Layout::Symplectic,
        }
    }
}

impl FromStr for FileLayout {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "classical" => Ok(FileLayout::Classical),
            "symplectic" => Ok(FileLayout::Symplectic),
            "pauli" => Ok(FileLayout::Pauli),
            _ => Err(format!("unknown layout {s:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFile {
    pub field: FieldSpec,
    /// Qudits (symplectic, pauli) or coordinates (classical).
    pub n: usize,
    pub layout: FileLayout,
    pub linearity: Linearity,
    pub rows: Vec<CodeVector>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

impl CodeFile {
    pub fn parse(text: &str) -> Result<CodeFile> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (no, magic) = lines.next().ok_or_else(|| perr(1, "empty file"))?;
        if magic != MAGIC {
            return Err(perr(no, format!("expected {MAGIC:?}")));
        }
        let (no, header) = lines.next().ok_or_else(|| perr(no + 1, "missing header line"))?;
        let (mut q, mut n, mut layout, mut linearity) = (None, None, None, None);
        for tok in header.split_whitespace() {
            let (key, val) = tok.split_once('=').ok_or_else(|| perr(no, format!("bad header token {tok:?}")))?;
            match key {
                "q" => q = Some(val.parse::<u32>().map_err(|_| perr(no, format!("bad q {val:?}")))?),
                "n" => n = Some(val.parse::<usize>().map_err(|_| perr(no, format!("bad n {val:?}")))?),
                "layout" => layout = Some(val.parse::<FileLayout>().map_err(|e| perr(no, e))?),
                "linearity" => {
                    linearity = Some(match val {
                        "additive" => Linearity::Additive,
                        "linear" => Linearity::FqLinear,
                        _ => return Err(perr(no, format!("unknown linearity {val:?}"))),
                    })
                }
                _ => return Err(perr(no, format!("unknown header key {key:?}"))),
            }
        }
        let need = |name: &str| perr(no, format!("header is missing {name}"));
        let q = q.ok_or_else(|| need("q"))?;
        let n = n.ok_or_else(|| need("n"))?;
        let layout = layout.ok_or_else(|| need("layout"))?;
        let linearity = linearity.ok_or_else(|| need("linearity"))?;
        let field = FieldSpec::new(q).map_err(|e| perr(no, e.to_string()))?;
        if layout == FileLayout::Pauli && q != 2 {
            return Err(perr(no, "pauli layout requires q=2"));
        }
        let mut rows = Vec::new();
        for (no, line) in lines {
            let row = Self::parse_row(&field, n, layout, line).map_err(|e| match e {
                Error::Parse { msg, .. } => perr(no, msg),
                other => perr(no, other.to_string()),
            })?;
            rows.push(row);
        }
        Ok(CodeFile { field, n, layout, linearity, rows })
    }

    fn parse_row(field: &FieldSpec, n: usize, layout: FileLayout, line: &str) -> Result<CodeVector> {
        let nums = |s: &str| -> Result<Vec<u32>> {
            s.split_whitespace()
                .map(|t| t.parse::<u32>().map_err(|_| perr(0, format!("bad entry {t:?}"))))
                .collect()
        };
        let check = |got: usize| {
            if got == n {
                Ok(())
            } else {
                Err(perr(0, format!("expected {n} entries, found {got}")))
            }
        };
        match layout {
            FileLayout::Classical => {
                let v = nums(line)?;
                check(v.len())?;
                CodeVector::plain(field, &v)
            }
            FileLayout::Symplectic => {
                let (x, y) = line.split_once('|').ok_or_else(|| perr(0, "symplectic row needs a '|'"))?;
                let (x, y) = (nums(x)?, nums(y)?);
                check(x.len())?;
                check(y.len())?;
                CodeVector::symplectic(field, &x, &y)
            }
            FileLayout::Pauli => {
                check(line.chars().count())?;
                parse_pauli_row(line)
            }
        }
    }

    /// The code spanned by the rows with the declared linearity.
    pub fn to_code(&self) -> Result<AdditiveCode> {
        let layout = self.layout.code_layout();
        let len = match layout {
            Layout::Plain => self.n,
            Layout::Symplectic => 2 * self.n,
        };
        AdditiveCode::span_in(&self.field, layout, len, &self.rows, self.linearity)
    }

    /// A file listing the canonical generators of `code`.
    pub fn from_code(code: &AdditiveCode) -> CodeFile {
        let layout = match code.layout() {
            Layout::Plain => FileLayout::Classical,
            Layout::Symplectic => FileLayout::Symplectic,
        };
        CodeFile {
            field: code.field().clone(),
            n: code.qudits(),
            layout,
            linearity: code.linearity(),
            rows: code.generators(),
        }
    }

    /// Same file written in Pauli notation; binary symplectic codes only.
    pub fn into_pauli(mut self) -> Result<CodeFile> {
        if self.field.q() != 2 || self.layout == FileLayout::Classical {
            return Err(Error::LayoutMismatch("pauli layout requires a binary symplectic code".into()));
        }
        self.layout = FileLayout::Pauli;
        Ok(self)
    }

    pub fn emit(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for CodeFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lin = match self.linearity {
            Linearity::Additive => "additive",
            Linearity::FqLinear => "linear",
        };
        writeln!(f, "{MAGIC}")?;
        writeln!(f, "q={} n={} layout={} linearity={lin}", self.field.q(), self.n, self.layout.name())?;
        for row in &self.rows {
            match self.layout {
                FileLayout::Pauli => writeln!(f, "{}", to_pauli(row).map_err(|_| fmt::Error)?)?,
                _ => writeln!(f, "{row}")?,
            }
        }
        Ok(())
    }
}
