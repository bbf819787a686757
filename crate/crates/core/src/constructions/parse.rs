//! Text syntax for [`GroupSpec`].
//!
//! ```text
//! spec    := factor ('*' factor)*
//! factor  := 'C(' n ')' | 'D(' 2m ')' | 'S(' n ')' | 'A(' n ')' | 'Q(' n ')'
//!          | 'F(' p ',' d ')' | 'SD(' p ',' a ',' d ')'
//!          | 'MAT(' p ';' matrix (',' matrix)* ')' | '(' spec ')'
//! matrix  := '[' row (',' row)* ']'
//! row     := '[' n (',' n)* ']'
//! ```
//!
//! Whitespace between tokens is ignored. Syntax errors carry the byte
//! offset of the offending token; parameter constraints are checked
//! afterwards and reported as construction errors.

use std::str::FromStr;

use super::{GroupSpec, Matrix};
use crate::error::{Error, Result};

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut parser = Parser { text, pos: 0 };
        let spec = parser.spec()?;
        parser.skip_ws();
        if parser.pos != text.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        spec.validate()?;
        Ok(spec)
    }
}

/// Parses and validates a group spec.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    text.parse()
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(&format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(&format!("expected '{want}', found end of input"))),
        }
    }

    fn ident(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..]
            .chars()
            .take_while(|c| c.is_ascii_alphabetic())
            .count();
        if len == 0 {
            return Err(self.error("expected a group name"));
        }
        self.pos += len;
        Ok(&self.text[start..start + len])
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..]
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .count();
        if len == 0 {
            return Err(self.error("expected a number"));
        }
        let n = self.text[start..start + len]
            .parse()
            .map_err(|_| self.error("number out of range"))?;
        self.pos += len;
        Ok(n)
    }

    fn args(&mut self, count: usize) -> Result<Vec<u64>> {
        self.expect('(')?;
        let mut out = vec![self.number()?];
        for _ in 1..count {
            self.expect(',')?;
            out.push(self.number()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some('*') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(GroupSpec::direct_product(factors))
    }

    fn factor(&mut self) -> Result<GroupSpec> {
        if self.peek() == Some('(') {
            self.pos += 1;
            let inner = self.spec()?;
            self.expect(')')?;
            return Ok(inner);
        }
        let start = self.pos;
        let name = self.ident()?.to_string();
        Ok(match name.as_str() {
            "C" => GroupSpec::Cyclic(self.args(1)?[0]),
            "D" => {
                let at = self.pos;
                let n = self.args(1)?[0];
                if n == 0 || n % 2 != 0 {
                    return Err(Error::Parse {
                        offset: at,
                        message: format!("dihedral order must be a positive even number, got {n}"),
                    });
                }
                GroupSpec::Dihedral(n / 2)
            }
            "S" => GroupSpec::Symmetric(self.args(1)?[0]),
            "A" => GroupSpec::Alternating(self.args(1)?[0]),
            "Q" => GroupSpec::Dicyclic(self.args(1)?[0]),
            "F" => {
                let a = self.args(2)?;
                GroupSpec::FieldSemidirect { p: a[0], a: 1, d: a[1] }
            }
            "SD" => {
                let at = self.pos;
                let v = self.args(3)?;
                let a = u32::try_from(v[1]).map_err(|_| Error::Parse {
                    offset: at,
                    message: "field degree out of range".into(),
                })?;
                GroupSpec::FieldSemidirect { p: v[0], a, d: v[2] }
            }
            "MAT" => self.matrix_spec()?,
            _ => {
                self.pos = start;
                return Err(self.error(&format!("unknown group name '{name}'")));
            }
        })
    }

    fn matrix_spec(&mut self) -> Result<GroupSpec> {
        self.expect('(')?;
        let p = self.number()?;
        self.expect(';')?;
        let mut matrices = vec![self.matrix()?];
        while self.peek() == Some(',') {
            self.pos += 1;
            matrices.push(self.matrix()?);
        }
        self.expect(')')?;
        Ok(GroupSpec::MatrixSemidirect { p, matrices })
    }

    fn matrix(&mut self) -> Result<Matrix> {
        self.expect('[')?;
        let mut rows = vec![self.row()?];
        while self.peek() == Some(',') {
            self.pos += 1;
            rows.push(self.row()?);
        }
        self.expect(']')?;
        Ok(rows)
    }

    fn row(&mut self) -> Result<Vec<u64>> {
        self.expect('[')?;
        let mut row = vec![self.number()?];
        while self.peek() == Some(',') {
            self.pos += 1;
            row.push(self.number()?);
        }
        self.expect(']')?;
        Ok(row)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        assert_eq!(parse_group_spec("D(14)").unwrap(), GroupSpec::Dihedral(7));
        assert_eq!(
            parse_group_spec("F(7,3)").unwrap(),
            GroupSpec::FieldSemidirect { p: 7, a: 1, d: 3 }
        );
        assert_eq!(
            parse_group_spec("C(2)*S(3)").unwrap(),
            GroupSpec::DirectProduct(vec![GroupSpec::Cyclic(2), GroupSpec::Symmetric(3)])
        );
        assert_eq!(
            parse_group_spec(" SD( 5 , 3 , 31 ) ").unwrap(),
            GroupSpec::FieldSemidirect { p: 5, a: 3, d: 31 }
        );
        assert_eq!(
            parse_group_spec("(C(2)*C(3))*A(4)").unwrap().to_string(),
            "C(2)*C(3)*A(4)"
        );
    }

    #[test]
    fn matrix_syntax_round_trips() {
        let text = "MAT(5;[[0,4],[1,4]],[[0,1],[1,0]])";
        let spec = parse_group_spec(text).unwrap();
        assert_eq!(spec.to_string(), text);
        let spaced = parse_group_spec("MAT( 5 ; [ [0,4] , [1,4] ] , [[0,1],[1,0]] )").unwrap();
        assert_eq!(spaced, spec);
    }

    #[test]
    fn syntax_errors_have_offsets() {
        match parse_group_spec("C(2)*X(3)") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("unexpected {other:?}"),
        }
        match parse_group_spec("C(2") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("unexpected {other:?}"),
        }
        match parse_group_spec("C(2) C(3)") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_group_spec("D(7)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_group_spec(""), Err(Error::Parse { offset: 0, .. })));
    }

    #[test]
    fn semantic_errors_name_the_constraint() {
        let err = parse_group_spec("F(7,4)").unwrap_err();
        assert!(matches!(err, Error::Construction(_)));
        assert!(err.to_string().contains("d | p^a - 1"));
        let err = parse_group_spec("S(7)").unwrap_err();
        assert!(err.to_string().contains("n <= 6"));
    }
}
