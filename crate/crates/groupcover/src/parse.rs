//! Parser for the textual group-description grammar.
//!
//! ```text
//! expr := atom ( "x" atom )*
//! atom := "C"int | "D"int | "Q"int | "S"int | "A"int
//!       | "E(" int "," int ")" | "SD(" int "," int "," int ")"
//!       | "(" expr ")"
//! ```
//!
//! Whitespace is insignificant. Any atom takes a power suffix: `C2^3`
//! means `C2 x C2 x C2`. Products evaluate left-associatively, and
//! parenthesized products are flattened into the same left fold, so
//! bracketing never changes the resulting table.

use crate::group::{
    build_alternating, build_cyclic, build_dihedral, build_direct_product,
    build_elementary_abelian, build_generalized_quaternion, build_semidirect_cyclic,
    build_symmetric, GroupError, GroupTable,
};
use thiserror::Error;

const MAX_POWER: usize = 64;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("parse error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("cannot build {what} (at byte {pos}): {source}")]
    Build {
        what: String,
        pos: usize,
        source: GroupError,
    },
}

/// One leaf constructor of the grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion(usize),
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian(usize, usize),
    Semidirect(usize, usize, usize),
}

impl Atom {
    pub fn render(&self) -> String {
        match *self {
            Atom::Cyclic(n) => format!("C{n}"),
            Atom::Dihedral(n) => format!("D{n}"),
            Atom::Quaternion(n) => format!("Q{n}"),
            Atom::Symmetric(n) => format!("S{n}"),
            Atom::Alternating(n) => format!("A{n}"),
            Atom::ElementaryAbelian(p, k) => format!("E({p},{k})"),
            Atom::Semidirect(n, m, k) => format!("SD({n},{m},{k})"),
        }
    }

    pub fn build(&self) -> Result<GroupTable, GroupError> {
        match *self {
            Atom::Cyclic(n) => build_cyclic(n),
            Atom::Dihedral(n) => build_dihedral(n),
            Atom::Quaternion(n) => build_generalized_quaternion(n),
            Atom::Symmetric(n) => build_symmetric(n),
            Atom::Alternating(n) => build_alternating(n),
            Atom::ElementaryAbelian(p, k) => build_elementary_abelian(p, k),
            Atom::Semidirect(n, m, k) => build_semidirect_cyclic(n, m, k),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct SpannedAtom {
    atom: Atom,
    pos: usize,
}

/// A parsed group description: a non-empty product of atoms, already in
/// left-associative order.
#[derive(Debug, Clone)]
pub struct GroupSpecAst {
    atoms: Vec<SpannedAtom>,
}

impl GroupSpecAst {
    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.atoms.iter().map(|sa| sa.atom)
    }

    /// Canonical rendering: atoms joined by " x ", powers expanded.
    pub fn normalized(&self) -> String {
        self.atoms
            .iter()
            .map(|sa| sa.atom.render())
            .collect::<Vec<_>>()
            .join(" x ")
    }

    /// Evaluates the product left to right. The resulting table's spec
    /// field is the normalized rendering.
    pub fn build(&self) -> Result<GroupTable, SpecError> {
        let mut acc: Option<GroupTable> = None;
        for sa in &self.atoms {
            let t = sa.atom.build().map_err(|e| SpecError::Build {
                what: sa.atom.render(),
                pos: sa.pos,
                source: e,
            })?;
            acc = Some(match acc {
                None => t,
                Some(g) => build_direct_product(&g, &t).map_err(|e| SpecError::Build {
                    what: self.normalized(),
                    pos: 0,
                    source: e,
                })?,
            });
        }
        Ok(acc.expect("ast is non-empty").with_spec(self.normalized()))
    }
}

/// Parses a group description to its atom list.
pub fn parse_spec_ast(text: &str) -> Result<GroupSpecAst, SpecError> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
    };
    let atoms = p.parse_expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(SpecError::Syntax {
            pos: p.pos,
            message: "unexpected trailing input".into(),
        });
    }
    Ok(GroupSpecAst { atoms })
}

/// Parses and evaluates a group description.
pub fn parse_group_spec(text: &str) -> Result<GroupTable, SpecError> {
    parse_spec_ast(text)?.build()
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<(), SpecError> {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(SpecError::Syntax {
                pos: self.pos,
                message: format!("expected '{}'", b as char),
            })
        }
    }

    fn parse_int(&mut self) -> Result<usize, SpecError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: usize = 0;
        let mut any = false;
        while let Some(b) = self.peek() {
            if !b.is_ascii_digit() {
                break;
            }
            any = true;
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as usize))
                .ok_or(SpecError::Syntax {
                    pos: start,
                    message: "number too large".into(),
                })?;
            self.pos += 1;
        }
        if !any {
            return Err(SpecError::Syntax {
                pos: self.pos,
                message: "expected a number".into(),
            });
        }
        Ok(value)
    }

    fn parse_expr(&mut self) -> Result<Vec<SpannedAtom>, SpecError> {
        let mut atoms = self.parse_powered_atom()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'x') {
                self.pos += 1;
                atoms.extend(self.parse_powered_atom()?);
            } else {
                return Ok(atoms);
            }
        }
    }

    fn parse_powered_atom(&mut self) -> Result<Vec<SpannedAtom>, SpecError> {
        let atoms = self.parse_atom()?;
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(atoms);
        }
        self.pos += 1;
        let ppos = self.pos;
        let e = self.parse_int()?;
        if !(1..=MAX_POWER).contains(&e) {
            return Err(SpecError::Syntax {
                pos: ppos,
                message: format!("power must be between 1 and {MAX_POWER}"),
            });
        }
        let mut out = Vec::with_capacity(atoms.len() * e);
        for _ in 0..e {
            out.extend_from_slice(&atoms);
        }
        Ok(out)
    }

    fn parse_atom(&mut self) -> Result<Vec<SpannedAtom>, SpecError> {
        self.skip_ws();
        let pos = self.pos;
        let one = |atom| Ok(vec![SpannedAtom { atom, pos }]);
        match self.peek() {
            Some(b'C') => {
                self.pos += 1;
                one(Atom::Cyclic(self.parse_int()?))
            }
            Some(b'D') => {
                self.pos += 1;
                one(Atom::Dihedral(self.parse_int()?))
            }
            Some(b'Q') => {
                self.pos += 1;
                one(Atom::Quaternion(self.parse_int()?))
            }
            Some(b'A') => {
                self.pos += 1;
                one(Atom::Alternating(self.parse_int()?))
            }
            Some(b'S') => {
                self.pos += 1;
                if self.peek() == Some(b'D') {
                    self.pos += 1;
                    self.expect(b'(')?;
                    let n = self.parse_int()?;
                    self.expect(b',')?;
                    let m = self.parse_int()?;
                    self.expect(b',')?;
                    let k = self.parse_int()?;
                    self.expect(b')')?;
                    one(Atom::Semidirect(n, m, k))
                } else {
                    one(Atom::Symmetric(self.parse_int()?))
                }
            }
            Some(b'E') => {
                self.pos += 1;
                self.expect(b'(')?;
                let p = self.parse_int()?;
                self.expect(b',')?;
                let k = self.parse_int()?;
                self.expect(b')')?;
                one(Atom::ElementaryAbelian(p, k))
            }
            Some(b'(') => {
                self.pos += 1;
                let atoms = self.parse_expr()?;
                self.expect(b')')?;
                Ok(atoms)
            }
            _ => Err(SpecError::Syntax {
                pos,
                message: "expected a group atom (C, D, Q, S, A, E, SD, or parentheses)".into(),
            }),
        }
    }
}
