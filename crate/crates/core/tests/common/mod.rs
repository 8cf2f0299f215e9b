//! Shared fixtures and independent oracles for the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use surfent::{parse, IntPolynomial, PolyMatrix, Presentation};

pub const P1: &str = "adac / cbdb";
pub const P2: &str = "[[1,2,3],[3,5,-1],[2,-3,4,4]]";
pub const P3: &str = "abaBd / ccd";
pub const P4: &str = "abABcdCD";
pub const P5: &str = "aabbccdd";
pub const P6: &str = "abcdABCD";
pub const P7: &str = "abcdcbaD";

/// Rows of the table of program outputs: relators, printed growth rate and factor.
pub const TABLE_ROWS: [(&str, Option<(f64, &str)>); 5] = [
    ("acdeDB / ECbA", Some((8.50591006, "t^4-7t^3-12t^2-7t+1"))),
    ("acdeB / DeCbA", Some((8.78515105, "t^4-8t^3-6t^2-8t+1"))),
    (
        "abaCd / cee / dbff",
        Some((
            9.91984307,
            "t^20-4t^19-44t^18-122t^17-206t^16-280t^15-381t^14-484t^13-579t^12-606t^11-606t^10-606t^9\
             -579t^8-484t^7-381t^6-280t^5-206t^4-122t^3-44t^2-4t+1",
        )),
    ),
    ("aihlkCa / Cee / dbffk / gHjj / idgbL", None),
    (
        "aiaCh / cee / dbff / gHjj / idgb",
        Some((
            17.9527833,
            "t^20-13t^19-80t^18-149t^17-187t^16-196t^15-252t^14-348t^13-370t^12-426t^11-312t^10-426t^9\
             -370t^8-348t^7-252t^6-196t^5-187t^4-149t^3-80t^2-13t+1",
        )),
    ),
];

pub const P3_FACTOR: &str = "t^10-3t^9-14t^8-13t^7-17t^6-12t^5-17t^4-13t^3-14t^2-3t+1";
pub const P4_FACTOR: &str = "t^4-6t^3-6t^2-6t+1";

pub fn presentation(s: &str) -> Presentation {
    parse(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

/// Parses a polynomial written like `1-t^3+t^4` or `-t-t^2`.
pub fn poly(s: &str) -> IntPolynomial {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut coeffs: BTreeMap<usize, i64> = BTreeMap::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let mut c: i64 = if start == i { 1 } else { s[start..i].parse().unwrap() };
        let mut power = 0;
        if i < bytes.len() && bytes[i] == b't' {
            i += 1;
            power = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                power = s[start..i].parse().unwrap();
            }
        } else if start == i {
            panic!("bad polynomial term in {s}");
        }
        c *= sign;
        *coeffs.entry(power).or_default() += c;
    }
    let degree = coeffs.keys().next_back().copied().unwrap_or(0);
    let mut dense = vec![0; degree + 1];
    for (k, c) in coeffs {
        dense[k] = c;
    }
    IntPolynomial::from_i64s(&dense)
}

/// Parses a matrix given as LaTeX array rows: entries split by `&`, rows by `\\`.
pub fn latex_matrix(body: &str) -> PolyMatrix {
    let rows = body
        .split("\\\\")
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|r| r.split('&').map(poly).collect())
        .collect();
    PolyMatrix::from_rows(rows)
}

/// Parses a jump written as `(a_l-B_r)+(B_l+A)t+(-C_r+c_r)t^2` into lap label coefficients.
pub fn jump(s: &str) -> BTreeMap<String, IntPolynomial> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out: BTreeMap<String, IntPolynomial> = BTreeMap::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        rest = rest.strip_prefix('+').unwrap_or(rest);
        let open = rest.find('(').expect("group");
        let close = rest.find(')').expect("group end");
        let group = &rest[open + 1..close];
        rest = &rest[close + 1..];
        let mut power = 0;
        if let Some(r) = rest.strip_prefix('t') {
            power = 1;
            rest = r;
            if let Some(r) = rest.strip_prefix('^') {
                let digits = r.chars().take_while(char::is_ascii_digit).count();
                power = r[..digits].parse().unwrap();
                rest = &r[digits..];
            }
        }
        let mut term = String::new();
        let mut flush = |term: &mut String| {
            if term.is_empty() {
                return;
            }
            let (sign, label) = match term.strip_prefix('-') {
                Some(l) => (-1, l.to_string()),
                None => (1, term.trim_start_matches('+').to_string()),
            };
            let entry = out.entry(label).or_insert_with(IntPolynomial::zero);
            *entry += &IntPolynomial::monomial(sign, power);
            term.clear();
        };
        for c in group.chars() {
            if (c == '+' || c == '-') && !term.is_empty() {
                flush(&mut term);
            }
            term.push(c);
        }
        flush(&mut term);
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Determinant by cofactor expansion along the first row.
pub fn laplace_determinant(m: &[Vec<IntPolynomial>]) -> IntPolynomial {
    let n = m.len();
    if n == 0 {
        return IntPolynomial::one();
    }
    let mut total = IntPolynomial::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<IntPolynomial>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = &m[0][c] * &laplace_determinant(&minor);
        if c % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    total
}

/// Printed kneading matrices, rows in turning-point order and columns in lap order.
pub const P3_MATRIX: &str = r"
-1+t & 1 & 0 & 0 & 0 & t^3 & 0 & -t^3 & 0 & 0 & 0 & t^2 & t^2 & -t \\
0 & -1+t^3 & 1+t^2 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & -t^2+t^3 & 0 & 0 & 0 \\
t & 0 & -1 & 1 & 0 & t^3 & 0 & -t^3 & 0 & 0 & 0 & t^2 & t^2 & -t \\
0 & 0 & -t & -1 & 1 & -t & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 \\
t & 0 & 0 & 0 & -1 & 1+t^3 & 0 & -t^3 & 0 & 0 & 0 & t^2 & t^2 & -t \\
0 & -t & 0 & 0 & 0 & -1 & 1 & 0 & 0 & 0 & t-t^2 & -t^2 & 0 & 0 \\
t & 0 & 0 & 0 & 0 & t^3 & -1 & 1-t^3 & 0 & 0 & 0 & t^2 & t^2 & -t \\
0 & 0 & 0 & 0 & 0 & 0 & 0 & -1+t & 1+t & 0 & 0 & 0 & 0 & 0 \\
t & 0 & 0 & 0 & 0 & t^3 & 0 & -t^3 & -1 & 1 & 0 & t^2 & t^2 & -t \\
0 & -t-t^3 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & -1-t^2 & 1 & -t-t^2 & -t^3 & 0 \\
t^2 & t & t & t^3 & 0 & 0 & 0 & 0 & 0 & 0 & -1 & 1+t^2 & t^3 & 0 \\
0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & -t-t^3 & 0 & 0 & -1+t^3 & 1+t^2 & -t-t^2 \\
t & 0 & 0 & 0 & 0 & t^3 & 0 & -t^3 & 0 & 0 & 0 & t^2 & -1+t^2 & 1-t
";

pub const P4_MATRIX: &str = r"
-1+t & 1 & 0 & -t^3+t^4 & 0 & -t^4 & 0 & 0 & 0 & -t^2 & 0 & t^3 & t^2 & -t \\
0 & -1 & 1 & 0 & 0 & t^3 & t^2 & 0 & t & 0 & -t & -t^2 & 0 & -t^3 \\
t & 0 & -1 & 1-t^3+t^4 & 0 & -t^4 & 0 & 0 & 0 & -t^2 & 0 & t^3 & t^2 & -t \\
t^2 & -t^3 & 0 & -1 & 1 & -t & 0 & -t^2 & 0 & 0 & t & 0 & 0 & t^3 \\
t & 0 & 0 & -t^3+t^4 & -1 & 1-t^4 & 0 & 0 & 0 & -t^2 & 0 & t^3 & t^2 & -t \\
0 & -t^2+t^3 & 0 & 0 & t & -1 & 1 & -t & 0 & 0 & t^2-t^3 & 0 & 0 & 0 \\
t & 0 & 0 & -t^3+t^4 & 0 & -t^4 & -1 & 1 & 0 & -t^2 & 0 & t^3 & t^2 & -t \\
0 & -t & 0 & 0 & t^2 & 0 & t & -1 & 1 & 0 & -t^2+t^3 & -t^3 & 0 & 0 \\
t & 0 & 0 & -t^3+t^4 & 0 & -t^4 & 0 & 0 & -1 & 1-t^2 & 0 & t^3 & t^2 & -t \\
t & 0 & 0 & -t & 0 & -t^2 & -t^3 & 0 & 0 & -1 & 1 & t^3 & t^2 & 0 \\
0 & 0 & t & 0 & 0 & 0 & t^3 & 0 & t^2-t^3 & 0 & -1 & 1-t & 0 & -t^2 \\
0 & 0 & t^2-t^3 & 0 & 0 & 0 & 0 & 0 & t^3 & -t^2 & 0 & -1+t & 1 & -t \\
t & 0 & 0 & -t^3+t^4 & 0 & -t^4 & 0 & 0 & 0 & -t^2 & 0 & t^3 & -1+t^2 & 1-t
";
