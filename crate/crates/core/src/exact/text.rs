use std::path::Path;

use super::{parse_rat, ExactError, Mat};

/// Parses the matrix text format: a header line `n m` with `n, m ≥ 1`
/// followed by `n` rows of `m` rational tokens. Blank lines are ignored.
pub fn parse_matrix(text: &str) -> Result<Mat, ExactError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, message: String| ExactError::Parse { line, message };

    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing header".into()))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = dims.as_slice() else {
        return Err(err(hline, format!("expected `n m`, found {header:?}")));
    };
    let parse_dim = |s: &str| match s.parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err(err(hline, format!("invalid dimension {s:?}"))),
    };
    let (n, m) = (parse_dim(n)?, parse_dim(m)?);

    let mut rows = Vec::with_capacity(n);
    for (line, body) in lines {
        if rows.len() == n {
            return Err(err(line, format!("more than {n} rows")));
        }
        let row = body
            .split_whitespace()
            .map(parse_rat)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| err(line, e.to_string()))?;
        if row.len() != m {
            return Err(err(
                line,
                format!("expected {m} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(err(
            text.lines().count().max(1),
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    Ok(Mat::from_rows(rows))
}

pub fn read_matrix_file(path: impl AsRef<Path>) -> Result<Mat, ExactError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| ExactError::Io(format!("{}: {e}", path.display())))?;
    parse_matrix(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn round_trip() {
        let m = parse_matrix("2 3\n1 0 -1/2\n0 1 -1\n").unwrap();
        assert_eq!(m[(0, 2)], ratio(-1, 2));
        assert_eq!(parse_matrix(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn blank_lines_are_skipped() {
        let m = parse_matrix("1 2\n\n1 -1\n\n").unwrap();
        assert_eq!(m.shape(), (1, 2));
        assert!(parse_matrix("1 2\n1 -1 # row\n").is_err());
    }

    #[test]
    fn reports_line_numbers() {
        let e = parse_matrix("2 2\n1 0\n0 x\n").unwrap_err();
        assert!(matches!(e, ExactError::Parse { line: 3, .. }), "{e:?}");
        let e = parse_matrix("2 2\n1 0 0\n0 1\n").unwrap_err();
        assert!(matches!(e, ExactError::Parse { line: 2, .. }), "{e:?}");
        assert!(parse_matrix("0 2\n").is_err());
        assert!(parse_matrix("2 2\n1 0\n").is_err());
        assert!(parse_matrix("1 1\n1\n2\n").is_err());
        assert!(parse_matrix("").is_err());
        assert!(parse_matrix("1 1 1\n1\n").is_err());
    }
}
