//! Line-oriented system files:
//!
//! ```text
//! # comment
//! vars: x1 x2 x3
//! weights: 1 1 1
//! eq: x1^2 + x2^2 + x3^2
//! field: Q
//! ```

use std::fmt;

use negder::{parse_polynomial, Error, Polynomial, WeightSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FileError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for FileError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemFile {
    pub variables: Vec<String>,
    pub weights: Option<Vec<u32>>,
    pub equations: Vec<Polynomial>,
    pub field: Option<String>,
    weights_line: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> FileError {
    FileError {
        line,
        column,
        message: message.into(),
    }
}

impl SystemFile {
    pub fn parse(text: &str) -> Result<SystemFile, FileError> {
        let mut variables: Option<Vec<String>> = None;
        let mut weights = None;
        let mut weights_line = 0;
        let mut field = None;
        let mut pending_eqs: Vec<(usize, usize, &str)> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let indent = raw.len() - trimmed.len();
            let Some(colon) = trimmed.find(':') else {
                return Err(err(line, indent + 1, "expected `key: value`"));
            };
            let key = trimmed[..colon].trim();
            let value = &trimmed[colon + 1..];
            // one-based column of the first character of `value`
            let value_col = indent + colon + 2;
            match key {
                "vars" => {
                    if variables.is_some() {
                        return Err(err(line, indent + 1, "duplicate `vars` line"));
                    }
                    let mut names = Vec::new();
                    for (col, tok) in tokens(value, value_col) {
                        let valid = tok.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                            && tok.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                        if !valid {
                            return Err(err(line, col, format!("invalid variable name `{tok}`")));
                        }
                        if names.contains(&tok.to_string()) {
                            return Err(err(line, col, format!("variable `{tok}` declared twice")));
                        }
                        names.push(tok.to_string());
                    }
                    if names.is_empty() {
                        return Err(err(line, value_col, "no variables declared"));
                    }
                    variables = Some(names);
                }
                "weights" => {
                    if weights.is_some() {
                        return Err(err(line, indent + 1, "duplicate `weights` line"));
                    }
                    let mut ws = Vec::new();
                    for (col, tok) in tokens(value, value_col) {
                        match tok.parse::<u32>() {
                            Ok(w) if w > 0 => ws.push(w),
                            _ => return Err(err(line, col, format!("weight `{tok}` is not a positive integer"))),
                        }
                    }
                    weights = Some(ws);
                    weights_line = line;
                }
                "eq" => pending_eqs.push((line, value_col, value)),
                "field" => {
                    let f = value.trim();
                    if !matches!(f, "Q" | "QQ") {
                        return Err(err(line, value_col, format!("unsupported field `{f}`; only Q is available")));
                    }
                    field = Some(f.to_string());
                }
                other => return Err(err(line, indent + 1, format!("unknown key `{other}`"))),
            }
        }

        let variables = variables.ok_or_else(|| err(1, 1, "missing `vars` line"))?;
        if let Some(ws) = &weights {
            if ws.len() != variables.len() {
                return Err(err(
                    weights_line,
                    1,
                    format!("{} weights for {} variables", ws.len(), variables.len()),
                ));
            }
        }
        if pending_eqs.is_empty() {
            return Err(err(text.lines().count().max(1), 1, "no `eq` lines"));
        }
        let mut equations = Vec::new();
        for (line, col, value) in pending_eqs {
            match parse_polynomial(value, &variables) {
                Ok(p) => equations.push(p),
                Err(Error::Syntax { column, message }) => return Err(err(line, col + column - 1, message)),
                Err(Error::UnknownVariable { name, column }) => {
                    return Err(err(line, col + column - 1, format!("unknown variable `{name}`")))
                }
                Err(e) => return Err(err(line, col, e.to_string())),
            }
        }
        Ok(SystemFile {
            variables,
            weights,
            equations,
            field,
            weights_line,
        })
    }

    /// The weights, which `analyze` and `oracle` require.
    pub fn weight_system(&self) -> Result<WeightSystem, FileError> {
        let ws = self.weights.clone().ok_or_else(|| err(1, 1, "missing `weights` line"))?;
        WeightSystem::new(ws).map_err(|e| err(self.weights_line, 1, e.to_string()))
    }

    pub fn render(variables: &[String], weights: &[u32], equations: &[Polynomial], comment: &str) -> String {
        let mut out = String::new();
        for c in comment.lines() {
            out.push_str(&format!("# {c}\n"));
        }
        out.push_str(&format!("vars: {}\n", variables.join(" ")));
        let ws: Vec<String> = weights.iter().map(u32::to_string).collect();
        out.push_str(&format!("weights: {}\n", ws.join(" ")));
        for g in equations {
            out.push_str(&format!("eq: {}\n", g.render(variables)));
        }
        out
    }
}

/// Whitespace-separated tokens with their one-based columns.
fn tokens(value: &str, start_col: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in value.char_indices().chain(std::iter::once((value.len(), ' '))) {
        match (start, c.is_whitespace()) {
            (None, false) => start = Some(i),
            (Some(s), true) => {
                out.push((start_col + s, &value[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SPHERE: &str = "# sphere\nvars: x y z\nweights: 1 1 1\neq: x^2 + y^2 + z^2\n";

    #[test]
    fn parses_sphere() {
        let f = SystemFile::parse(SPHERE).unwrap();
        assert_eq!(f.variables, ["x", "y", "z"]);
        assert_eq!(f.weights, Some(vec![1, 1, 1]));
        assert_eq!(f.equations.len(), 1);
        assert_eq!(f.equations[0].render(&f.variables), "x^2 + y^2 + z^2");
    }

    #[test]
    fn reports_positions() {
        let e = SystemFile::parse("vars: x y\nweights: 1 a\neq: x^2\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 12));
        let e = SystemFile::parse("vars: x y\nweights: 1 1\neq: x^2 + w\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 11));
        assert!(e.message.contains("`w`"));
        let e = SystemFile::parse("vars: x y\nweights: 1 1 1\neq: x^2\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = SystemFile::parse("vars: x\nbogus: 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
    }

    #[test]
    fn weights_are_optional_until_needed() {
        let f = SystemFile::parse("vars: x y\neq: x^2 + y^3\n").unwrap();
        assert!(f.weight_system().is_err());
    }

    #[test]
    fn render_round_trips() {
        let f = SystemFile::parse(SPHERE).unwrap();
        let text = SystemFile::render(&f.variables, f.weights.as_deref().unwrap(), &f.equations, "again");
        let g = SystemFile::parse(&text).unwrap();
        assert_eq!(f.equations, g.equations);
        assert!(text.starts_with("# again\n"));
    }
}
