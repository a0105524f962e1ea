//! DIMACS CNF writing and reading.

use std::io::{self, Write};

use thiserror::Error;

use super::cnf::CnfFormula;

/// Writes a bare DIMACS body: `p cnf <vars> <clauses>` then one
/// zero-terminated clause per line.
pub fn write_dimacs<W: Write>(
    num_vars: usize,
    clauses: &[Vec<i32>],
    sink: &mut W,
) -> io::Result<()> {
    writeln!(sink, "p cnf {} {}", num_vars, clauses.len())?;
    for clause in clauses {
        for lit in clause {
            write!(sink, "{lit} ")?;
        }
        writeln!(sink, "0")?;
    }
    Ok(())
}

/// Writes the formula with a comment block mapping every semantic variable
/// to its index (`c y a 1`, `c r a b 3`, ...), so models from external
/// solvers stay decodable.
pub fn emit_dimacs<W: Write>(cnf: &CnfFormula, sink: &mut W) -> io::Result<()> {
    for (index, var) in cnf.var_space().iter() {
        writeln!(sink, "c {var} {index}")?;
    }
    write_dimacs(cnf.num_vars(), cnf.clauses(), sink)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimacsError {
    #[error("missing `p cnf` header")]
    MissingHeader,
    #[error("malformed header `{0}`")]
    MalformedHeader(String),
    #[error("literal `{0}` is not an integer")]
    BadLiteral(String),
    #[error("literal {literal} outside variable range 1..={num_vars}")]
    LiteralOutOfRange { literal: i32, num_vars: usize },
    #[error("unterminated clause at end of input")]
    UnterminatedClause,
    #[error("header declares {declared} clauses, found {found}")]
    ClauseCountMismatch { declared: usize, found: usize },
}

/// Reads a DIMACS document: comments skipped, literals split on
/// whitespace, clauses terminated by 0.
pub fn parse_dimacs(text: &str) -> Result<(usize, Vec<Vec<i32>>), DimacsError> {
    let mut lines = text.lines().filter(|l| !l.trim_start().starts_with('c'));
    let header = loop {
        match lines.next() {
            None => return Err(DimacsError::MissingHeader),
            Some(l) if l.trim().is_empty() => continue,
            Some(l) => break l.trim().to_owned(),
        }
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (num_vars, declared) = match fields.as_slice() {
        ["p", "cnf", vars, clauses] => (
            vars.parse::<usize>()
                .map_err(|_| DimacsError::MalformedHeader(header.clone()))?,
            clauses
                .parse::<usize>()
                .map_err(|_| DimacsError::MalformedHeader(header.clone()))?,
        ),
        _ => return Err(DimacsError::MalformedHeader(header)),
    };

    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for token in lines.flat_map(|l| l.split_whitespace()) {
        let literal: i32 = token
            .parse()
            .map_err(|_| DimacsError::BadLiteral(token.to_owned()))?;
        if literal == 0 {
            clauses.push(std::mem::take(&mut current));
        } else {
            if literal.unsigned_abs() as usize > num_vars {
                return Err(DimacsError::LiteralOutOfRange { literal, num_vars });
            }
            current.push(literal);
        }
    }
    if !current.is_empty() {
        return Err(DimacsError::UnterminatedClause);
    }
    if clauses.len() != declared {
        return Err(DimacsError::ClauseCountMismatch { declared, found: clauses.len() });
    }
    Ok((num_vars, clauses))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::encode::encode_structure;
    use crate::test_util::{empty_riaf, two_way_conflict};

    #[test]
    fn golden_structure_output() {
        let cnf = encode_structure(&two_way_conflict());
        let mut out = Vec::new();
        emit_dimacs(&cnf, &mut out).unwrap();
        let expected = "\
c y a 1
c y b 2
c r a b 3
c r b a 4
c x a 5
c x b 6
p cnf 6 3
1 0
2 0
3 4 0
";
        assert_eq!(String::from_utf8(out).unwrap(), expected);
    }

    #[test]
    fn empty_formula_emits_bare_header() {
        let cnf = encode_structure(&empty_riaf());
        let mut out = Vec::new();
        emit_dimacs(&cnf, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "p cnf 0 0\n");
    }

    #[test]
    fn round_trip_preserves_clauses() {
        let cnf = encode_structure(&two_way_conflict())
            .and(crate::sat::encode::encode_stb(&two_way_conflict()));
        let mut out = Vec::new();
        emit_dimacs(&cnf, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let (num_vars, clauses) = parse_dimacs(&text).unwrap();
        assert_eq!(num_vars, cnf.num_vars());
        assert_eq!(clauses, cnf.clauses());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_dimacs(""), Err(DimacsError::MissingHeader));
        assert!(matches!(parse_dimacs("p dnf 1 1\n1 0\n"), Err(DimacsError::MalformedHeader(_))));
        assert!(matches!(parse_dimacs("p cnf 1 1\n2 0\n"), Err(DimacsError::LiteralOutOfRange { .. })));
        assert_eq!(parse_dimacs("p cnf 1 1\n1\n"), Err(DimacsError::UnterminatedClause));
        assert!(matches!(
            parse_dimacs("p cnf 1 2\n1 0\n"),
            Err(DimacsError::ClauseCountMismatch { .. })
        ));
    }
}
