//! DIMACS CNF import for 3-CNF formulas.

use crate::notation::ParseError;
use crate::reductions::{Cnf3Instance, Literal};

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

/// Parses `p cnf <vars> <clauses>` followed by zero-terminated clauses.
/// Every clause must have exactly three literals over distinct variables.
pub fn parse_dimacs(text: &str) -> Result<Cnf3Instance, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<(i64, usize, usize)> = Vec::new();
    let mut last_pos = (1, 1);

    'lines: for (ln, line) in text.lines().enumerate() {
        let ln = ln + 1;
        let trimmed = line.trim_start();
        if trimmed.starts_with('c') || trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with('%') {
            break;
        }
        if trimmed.starts_with('p') {
            let col = line.len() - trimmed.len() + 1;
            if header.is_some() {
                return Err(err(ln, col, "duplicate problem line"));
            }
            let f: Vec<&str> = trimmed.split_whitespace().collect();
            if f.len() != 4 || f[1] != "cnf" {
                return Err(err(ln, col, "expected 'p cnf <variables> <clauses>'"));
            }
            let vars = f[2].parse().map_err(|_| err(ln, col, "bad variable count"))?;
            let count = f[3].parse().map_err(|_| err(ln, col, "bad clause count"))?;
            header = Some((vars, count));
            continue;
        }
        let Some((vars, _)) = header else {
            return Err(err(ln, 1, "clause before the problem line"));
        };
        let mut col = 1;
        for token in line.split_inclusive(char::is_whitespace) {
            let word = token.trim();
            let start = col;
            col += token.chars().count();
            if word.is_empty() {
                continue;
            }
            if word == "%" {
                break 'lines;
            }
            let v: i64 = word.parse().map_err(|_| err(ln, start, format!("'{word}' is not a literal")))?;
            last_pos = (ln, start);
            if v == 0 {
                clauses.push((std::mem::take(&mut current), ln, start));
                continue;
            }
            if v.unsigned_abs() as usize > vars {
                return Err(err(ln, start, format!("variable {} exceeds the declared {vars}", v.abs())));
            }
            current.push((v, ln, start));
        }
    }
    let Some((vars, count)) = header else {
        return Err(err(1, 1, "missing 'p cnf' problem line"));
    };
    if !current.is_empty() {
        clauses.push((current, last_pos.0, last_pos.1));
    }
    if clauses.len() != count {
        return Err(err(last_pos.0, last_pos.1, format!("header declares {count} clauses, found {}", clauses.len())));
    }
    let mut out = Vec::with_capacity(clauses.len());
    for (lits, ln, col) in clauses {
        if lits.len() != 3 {
            return Err(err(ln, col, format!("clause has {} literals; exactly 3 are required", lits.len())));
        }
        out.push([0, 1, 2].map(|k| {
            let v = lits[k].0;
            Literal { var: v.unsigned_abs() as usize, neg: v < 0 }
        }));
    }
    Cnf3Instance::new(vars, out).map_err(|e| err(last_pos.0, last_pos.1, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_three_cnf() {
        let text = "c example\np cnf 3 2\n1 -2 3 0\n-1 2\n -3 0\n";
        let f = parse_dimacs(text).unwrap();
        assert_eq!(f.n, 3);
        assert_eq!(f.clauses[0], [Literal::pos(1), Literal::neg(2), Literal::pos(3)]);
        assert_eq!(f.clauses[1], [Literal::neg(1), Literal::pos(2), Literal::neg(3)]);
    }

    #[test]
    fn sorts_literals_by_variable() {
        let f = parse_dimacs("p cnf 3 1\n3 -1 2 0\n").unwrap();
        assert_eq!(f.clauses[0], [Literal::neg(1), Literal::pos(2), Literal::pos(3)]);
    }

    #[test]
    fn rejects_bad_input() {
        let e = parse_dimacs("p cnf 3 1\n1 2 0\n").unwrap_err();
        assert!(e.message.contains("exactly 3"), "{e}");
        assert_eq!(e.line, 2);
        assert!(parse_dimacs("p cnf 3 1\n1 2 3 -1 0\n").is_err());
        assert!(parse_dimacs("p cnf 3 1\n1 -1 2 0\n").is_err());
        assert!(parse_dimacs("1 2 3 0\n").is_err());
        assert!(parse_dimacs("p cnf 3 2\n1 2 3 0\n").is_err());
        let e = parse_dimacs("p cnf 3 1\n1 2 x 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        assert!(parse_dimacs("p cnf 2 1\n1 2 3 0\n").is_err());
        assert!(parse_dimacs("").is_err());
    }

    #[test]
    fn satlib_trailer() {
        let f = parse_dimacs("p cnf 3 1\n1 2 3 0\n%\n0\n").unwrap();
        assert_eq!(f.clauses.len(), 1);
    }
}
