//! Strict DIMACS CNF reader for formulas with exactly three literals per clause.

use colorconn::oracles::Cnf3Formula;

use crate::{CliError, CliResult};

fn fail<T>(line: usize, message: impl Into<String>) -> CliResult<T> {
    Err(CliError::Dimacs {
        line,
        message: message.into(),
    })
}

/// Parses `p cnf n m` followed by exactly `m` zero-terminated clauses.
/// Clauses may span lines; `c` lines are comments.
pub fn parse_dimacs(text: &str) -> CliResult<Cnf3Formula> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses: Vec<[i64; 3]> = Vec::new();
    let mut pending: Vec<i64> = Vec::new();
    let mut pending_line = 0;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return fail(line, "second problem line");
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            let [_, "cnf", n, m] = fields.as_slice() else {
                return fail(line, "expected `p cnf <vars> <clauses>`");
            };
            let n = n
                .parse::<u32>()
                .or_else(|_| fail(line, format!("bad variable count `{n}`")))?;
            let m = m
                .parse::<usize>()
                .or_else(|_| fail(line, format!("bad clause count `{m}`")))?;
            header = Some((n, m));
            continue;
        }
        let Some((n, m)) = header else {
            return fail(line, "clause before the problem line");
        };
        for token in trimmed.split_whitespace() {
            let lit: i64 = token
                .parse()
                .or_else(|_| fail(line, format!("bad literal `{token}`")))?;
            if pending.is_empty() {
                pending_line = line;
            }
            if lit != 0 {
                if lit.unsigned_abs() > u64::from(n) {
                    return fail(line, format!("literal {lit} exceeds {n} variables"));
                }
                pending.push(lit);
                continue;
            }
            if pending.len() != 3 {
                return fail(
                    pending_line,
                    format!("clause has {} literals, expected 3", pending.len()),
                );
            }
            let mut vars: Vec<u64> = pending.iter().map(|l| l.unsigned_abs()).collect();
            vars.sort_unstable();
            vars.dedup();
            if vars.len() != 3 {
                return fail(pending_line, "clause repeats a variable");
            }
            if clauses.len() == m {
                return fail(pending_line, format!("more than {m} clauses"));
            }
            clauses.push([pending[0], pending[1], pending[2]]);
            pending.clear();
        }
    }

    let Some((n, m)) = header else {
        return fail(last_line.max(1), "missing problem line");
    };
    if !pending.is_empty() {
        return fail(pending_line, "clause is not terminated by 0");
    }
    if clauses.len() != m {
        return fail(
            last_line,
            format!("header declares {m} clauses, found {}", clauses.len()),
        );
    }
    Ok(Cnf3Formula::from_dimacs(n, &clauses)?)
}
