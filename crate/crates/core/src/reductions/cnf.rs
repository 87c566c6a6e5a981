//! 3-CNF formulas, DIMACS parsing and a brute-force NAE solver.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CnfError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `p cnf` header")]
    MissingHeader,
    #[error("clause {clause} has {width} literals; exactly 3 are required")]
    Width { clause: usize, width: usize },
    #[error("literal {literal} refers to a variable outside 1..={n}")]
    LiteralOutOfRange { literal: i64, n: usize },
    #[error("header declares {declared} clauses but {found} were given")]
    ClauseCount { declared: usize, found: usize },
}

/// A formula in conjunctive normal form with exactly three literals per
/// clause. Literal `+i` is variable `i`, `-i` its negation (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    variable_count: usize,
    clauses: Vec<[i64; 3]>,
}

impl CnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<[i64; 3]>) -> Result<Self, CnfError> {
        for c in &clauses {
            for &l in c {
                if l == 0 || l.unsigned_abs() as usize > variable_count {
                    return Err(CnfError::LiteralOutOfRange {
                        literal: l,
                        n: variable_count,
                    });
                }
            }
        }
        Ok(CnfFormula {
            variable_count,
            clauses,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[[i64; 3]] {
        &self.clauses
    }

    /// Truth value of a literal under `assignment` (indexed from 0 for
    /// variable 1).
    pub fn literal_value(literal: i64, assignment: &[bool]) -> bool {
        let v = assignment[literal.unsigned_abs() as usize - 1];
        if literal > 0 {
            v
        } else {
            !v
        }
    }

    /// Whether every clause has both a true and a false literal.
    pub fn is_nae_satisfied(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            let t = c.iter().filter(|&&l| Self::literal_value(l, assignment)).count();
            t == 1 || t == 2
        })
    }

    /// First NAE-satisfying assignment in binary counting order, if any.
    pub fn nae_solve(&self) -> Option<Vec<bool>> {
        let n = self.variable_count;
        assert!(n < 32, "brute force is limited to fewer than 32 variables");
        (0u64..1 << n)
            .map(|bits| (0..n).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>())
            .find(|a| self.is_nae_satisfied(a))
    }

    /// DIMACS text for the formula.
    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.variable_count, self.clauses.len());
        for c in &self.clauses {
            s.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        s
    }
}

/// Parses DIMACS CNF. Comment lines start with `c`; clauses end with `0`
/// and may span lines; a line starting with `%` ends the input.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula, CnfError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        if l.starts_with('%') {
            break;
        }
        if l.starts_with('p') {
            let parts: Vec<&str> = l.split_whitespace().collect();
            let bad = || CnfError::Syntax {
                line,
                msg: format!("malformed header {l:?}"),
            };
            if header.is_some() || parts.len() != 4 || parts[0] != "p" || parts[1] != "cnf" {
                return Err(bad());
            }
            let n = parts[2].parse().map_err(|_| bad())?;
            let m = parts[3].parse().map_err(|_| bad())?;
            header = Some((n, m));
            continue;
        }
        let (n, _) = header.ok_or(CnfError::MissingHeader)?;
        for tok in l.split_whitespace() {
            let lit: i64 = tok.parse().map_err(|_| CnfError::Syntax {
                line,
                msg: format!("not an integer: {tok:?}"),
            })?;
            if lit == 0 {
                if current.len() != 3 {
                    return Err(CnfError::Width {
                        clause: clauses.len() + 1,
                        width: current.len(),
                    });
                }
                clauses.push([current[0], current[1], current[2]]);
                current.clear();
            } else {
                if lit.unsigned_abs() as usize > n {
                    return Err(CnfError::LiteralOutOfRange { literal: lit, n });
                }
                current.push(lit);
            }
        }
    }
    let (n, m) = header.ok_or(CnfError::MissingHeader)?;
    if !current.is_empty() {
        return Err(CnfError::Width {
            clause: clauses.len() + 1,
            width: current.len(),
        });
    }
    if clauses.len() != m {
        return Err(CnfError::ClauseCount {
            declared: m,
            found: clauses.len(),
        });
    }
    CnfFormula::new(n, clauses)
}
