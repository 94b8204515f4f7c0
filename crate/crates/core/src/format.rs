//! Text formats for vectorial Boolean functions and their parsers/emitters:
//!
//! * hex lookup tables — contiguous digits for m ≤ 4 (`"0123456789ABCDEF"`),
//!   comma-separated hex entries for m > 4;
//! * ANF component lists — one line per coordinate,
//!   `f1 = x1x2x3 + x2 + 1`, where bit i−1 of an output word is coordinate
//!   fᵢ and `xj` is input bit j−1 (`x12` is variable twelve, digits bind
//!   greedily);
//! * univariate polynomials with an explicit field,
//!   `poly: <hex coeffs low-to-high>; field: m=<m>, mod=<hex>`.
//!
//! Parsers round-trip bit-exactly with the matching emitters. All parse
//! errors carry a 1-based line and column.

use crate::field::FieldSpec;
use crate::vbf::{anf_inverse, ANFRep, BoolFn, UniPoly, VBF};
use std::fmt::Write as _;
use thiserror::Error;

/// A parse failure at a specific input position (1-based line and column).
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("line {line}, column {col}: {msg}")]
pub struct FormatError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl FormatError {
    fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        FormatError { line, col, msg: msg.into() }
    }
}

/// Returns the single non-blank line and its 1-based line number.
fn single_content_line(input: &str) -> Result<(usize, &str), FormatError> {
    let mut found: Option<(usize, &str)> = None;
    for (idx, raw) in input.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        if let Some((first, _)) = found {
            return Err(FormatError::new(
                idx + 1,
                1,
                format!("unexpected extra content; this format is a single line (content started on line {first})"),
            ));
        }
        found = Some((idx + 1, line));
    }
    found.ok_or_else(|| FormatError::new(1, 1, "empty input"))
}

fn hex_digit(c: char) -> Option<u16> {
    c.to_digit(16).map(|d| d as u16)
}

/// Parses a hex lookup table. The length determines m; comma-separated
/// entries are required beyond 16 entries and accepted everywhere.
pub fn parse_hex_lut(input: &str) -> Result<VBF, FormatError> {
    let (line_no, line) = single_content_line(input)?;
    if line.contains(',') {
        let mut table = Vec::new();
        let mut col = 1usize;
        for token in line.split(',') {
            let trimmed = token.trim();
            let tok_col = col + (token.len() - token.trim_start().len());
            if trimmed.is_empty() {
                return Err(FormatError::new(line_no, tok_col, "empty table entry"));
            }
            match u32::from_str_radix(trimmed, 16) {
                Ok(v) if v < (1 << 16) => table.push(v as u16),
                Ok(v) => {
                    return Err(FormatError::new(
                        line_no,
                        tok_col,
                        format!("entry {v:#x} is too large for any supported table"),
                    ))
                }
                Err(_) => {
                    return Err(FormatError::new(
                        line_no,
                        tok_col,
                        format!("`{trimmed}` is not a hex number"),
                    ))
                }
            }
            col += token.len() + 1;
        }
        finish_lut(line_no, line, table)
    } else {
        let digits = line.trim();
        let start = 1 + (line.len() - line.trim_start().len());
        let mut table = Vec::with_capacity(digits.len());
        for (i, c) in digits.char_indices() {
            match hex_digit(c) {
                Some(v) => table.push(v),
                None => {
                    return Err(FormatError::new(
                        line_no,
                        start + i,
                        format!("`{c}` is not a hex digit (use commas between entries for m > 4)"),
                    ))
                }
            }
        }
        finish_lut(line_no, line, table)
    }
}

fn finish_lut(line_no: usize, line: &str, table: Vec<u16>) -> Result<VBF, FormatError> {
    let len = table.len();
    if len < 2 || !len.is_power_of_two() {
        return Err(FormatError::new(
            line_no,
            1,
            format!("table has {len} entries; expected a power of two (2ᵐ, m ≥ 1)"),
        ));
    }
    let m = len.trailing_zeros();
    if let Some(pos) = table.iter().position(|&v| v as usize >= len) {
        // locate the offending entry for the diagnostic
        let col = if line.contains(',') {
            line.split(',').take(pos).map(|t| t.len() + 1).sum::<usize>() + 1
        } else {
            1 + (line.len() - line.trim_start().len()) + pos
        };
        return Err(FormatError::new(
            line_no,
            col,
            format!("entry {:#x} is out of range for m={m} (must be < {len})", table[pos]),
        ));
    }
    Ok(VBF::new(m, table).expect("length and range already validated"))
}

/// Emits the canonical hex form: contiguous uppercase digits for m ≤ 4,
/// comma-separated uppercase entries for m > 4.
pub fn emit_hex_lut(f: &VBF) -> String {
    if f.m() <= 4 {
        f.table().iter().map(|&v| char::from_digit(v as u32, 16).unwrap().to_ascii_uppercase()).collect()
    } else {
        let mut out = String::new();
        for (i, &v) in f.table().iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "{v:X}").unwrap();
        }
        out
    }
}

/// One parsed ANF line: the coordinate index it declares and its
/// coefficient set.
fn parse_anf_line(line_no: usize, line: &str, m: u32) -> Result<(usize, Vec<u16>), FormatError> {
    let bytes: Vec<char> = line.chars().collect();
    let mut pos = 0usize;
    let col = |p: usize| p + 1;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos] == ' ' {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos >= bytes.len() || bytes[pos] != 'f' {
        return Err(FormatError::new(line_no, col(pos), "expected a coordinate label like `f1`"));
    }
    pos += 1;
    let digit_start = pos;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == digit_start {
        return Err(FormatError::new(line_no, col(pos), "expected a coordinate number after `f`"));
    }
    let coord: usize = bytes[digit_start..pos].iter().collect::<String>().parse().map_err(|_| {
        FormatError::new(line_no, col(digit_start), "coordinate number does not fit")
    })?;
    skip_ws(&mut pos);
    if pos >= bytes.len() || bytes[pos] != '=' {
        return Err(FormatError::new(line_no, col(pos), "expected `=` after the coordinate label"));
    }
    pos += 1;

    let mut terms: Vec<u16> = Vec::new();
    loop {
        skip_ws(&mut pos);
        let term_col = col(pos);
        if pos >= bytes.len() {
            return Err(FormatError::new(line_no, term_col, "expected a monomial"));
        }
        let index = match bytes[pos] {
            '0' => {
                pos += 1;
                if !terms.is_empty() {
                    return Err(FormatError::new(line_no, term_col, "`0` must stand alone"));
                }
                skip_ws(&mut pos);
                if pos < bytes.len() {
                    return Err(FormatError::new(line_no, col(pos), "`0` must stand alone"));
                }
                return Ok((coord, terms));
            }
            '1' => {
                pos += 1;
                0u16
            }
            'x' => {
                let mut term = 0u16;
                while pos < bytes.len() && bytes[pos] == 'x' {
                    pos += 1;
                    let var_start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if pos == var_start {
                        return Err(FormatError::new(
                            line_no,
                            col(pos),
                            "expected a variable number after `x`",
                        ));
                    }
                    let var: u32 =
                        bytes[var_start..pos].iter().collect::<String>().parse().map_err(|_| {
                            FormatError::new(line_no, col(var_start), "variable number does not fit")
                        })?;
                    if var == 0 || var > m {
                        return Err(FormatError::new(
                            line_no,
                            col(var_start) - 1,
                            format!("variable x{var} out of range (have x1..x{m})"),
                        ));
                    }
                    let bit = 1u16 << (var - 1);
                    if term & bit != 0 {
                        return Err(FormatError::new(
                            line_no,
                            col(var_start) - 1,
                            format!("variable x{var} repeated in one monomial"),
                        ));
                    }
                    term |= bit;
                }
                term
            }
            other => {
                return Err(FormatError::new(
                    line_no,
                    term_col,
                    format!("`{other}` does not start a monomial (expected `x<i>`, `1`, or `0`)"),
                ))
            }
        };
        if terms.contains(&index) {
            return Err(FormatError::new(line_no, term_col, "monomial repeated in this line"));
        }
        terms.push(index);
        skip_ws(&mut pos);
        if pos >= bytes.len() {
            return Ok((coord, terms));
        }
        if bytes[pos] != '+' {
            return Err(FormatError::new(line_no, col(pos), "expected `+` between monomials"));
        }
        pos += 1;
    }
}

/// Parses an ANF component list. The number of non-blank lines is m; line
/// k must declare coordinate fₖ.
pub fn parse_anf(input: &str) -> Result<VBF, FormatError> {
    let lines: Vec<(usize, &str)> = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();
    if lines.is_empty() {
        return Err(FormatError::new(1, 1, "empty input"));
    }
    let m = lines.len() as u32;
    if m > 12 {
        return Err(FormatError::new(
            lines[12].0,
            1,
            format!("{m} coordinate lines — tables beyond m=12 are not supported"),
        ));
    }
    let n = 1usize << m;
    let mut coords: Vec<BoolFn> = Vec::with_capacity(m as usize);
    for (k, (line_no, line)) in lines.iter().enumerate() {
        let (coord, terms) = parse_anf_line(*line_no, line, m)?;
        if coord != k + 1 {
            return Err(FormatError::new(
                *line_no,
                1,
                format!("expected coordinate f{} on this line, found f{coord}", k + 1),
            ));
        }
        let mut coeffs = vec![false; n];
        for t in terms {
            coeffs[t as usize] = true;
        }
        coords.push(anf_inverse(&ANFRep::new(m, coeffs).expect("length is 2^m")));
    }
    let table: Vec<u16> = (0..n as u16)
        .map(|x| {
            coords
                .iter()
                .enumerate()
                .fold(0u16, |acc, (i, c)| acc | (u16::from(c.get(x)) << i))
        })
        .collect();
    Ok(VBF::new(m, table).expect("entries are m-bit by construction"))
}

fn monomial_string(index: u16) -> String {
    if index == 0 {
        return "1".to_string();
    }
    let mut out = String::new();
    for j in 0..16 {
        if index >> j & 1 == 1 {
            write!(out, "x{}", j + 1).unwrap();
        }
    }
    out
}

/// Emits the canonical ANF form: one line per coordinate, monomials in
/// descending degree and ascending index within a degree, trailing newline.
pub fn emit_anf(f: &VBF) -> String {
    let mut out = String::new();
    for i in 0..f.m() {
        let coeffs = f.coordinate(i).anf();
        let mut terms: Vec<u16> =
            (0..coeffs.coeffs().len() as u16).filter(|&u| coeffs.get(u)).collect();
        terms.sort_by_key(|&u| (std::cmp::Reverse(u.count_ones()), u));
        let rhs = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.iter().map(|&u| monomial_string(u)).collect::<Vec<_>>().join(" + ")
        };
        writeln!(out, "f{} = {rhs}", i + 1).unwrap();
    }
    out
}

/// Parses the univariate form `poly: <coeffs>; field: m=<m>, mod=<hex>`.
/// Coefficients are hex field elements, lowest degree first; the modulus
/// accepts an optional `0x` prefix.
pub fn parse_univariate(input: &str) -> Result<UniPoly, FormatError> {
    let (line_no, line) = single_content_line(input)?;
    let err = |col: usize, msg: String| FormatError::new(line_no, col, msg);

    let rest = line.trim_start();
    let base = line.len() - rest.len();
    if !rest.starts_with("poly:") {
        return Err(err(base + 1, "expected the line to start with `poly:`".into()));
    }
    let semi = rest.find(';').ok_or_else(|| {
        err(base + rest.len(), "expected `;` between the coefficients and the field".into())
    })?;
    let coeff_part = &rest["poly:".len()..semi];
    let field_part = rest[semi + 1..].trim_start();
    let field_base = base + semi + 1 + (rest[semi + 1..].len() - field_part.len());
    if !field_part.starts_with("field:") {
        return Err(err(field_base + 1, "expected `field:` after `;`".into()));
    }
    let params = field_part["field:".len()..].trim();
    let params_base = field_base + "field:".len()
        + (field_part["field:".len()..].len() - field_part["field:".len()..].trim_start().len());

    // field: m=<dec>, mod=<hex>
    let mut m_val: Option<u32> = None;
    let mut mod_val: Option<(u32, usize)> = None;
    let mut cursor = 0usize;
    for part in params.split(',') {
        let trimmed = part.trim();
        let part_col = params_base + cursor + (part.len() - part.trim_start().len()) + 1;
        if let Some(v) = trimmed.strip_prefix("m=") {
            m_val = Some(
                v.trim()
                    .parse::<u32>()
                    .map_err(|_| err(part_col, format!("`{}` is not a dimension", v.trim())))?,
            );
        } else if let Some(v) = trimmed.strip_prefix("mod=") {
            let v = v.trim();
            let digits = v.strip_prefix("0x").or_else(|| v.strip_prefix("0X")).unwrap_or(v);
            let parsed = u32::from_str_radix(digits, 16)
                .map_err(|_| err(part_col, format!("`{v}` is not a hex modulus")))?;
            mod_val = Some((parsed, part_col));
        } else if !trimmed.is_empty() {
            return Err(err(part_col, format!("unknown field parameter `{trimmed}`")));
        }
        cursor += part.len() + 1;
    }
    let m = m_val.ok_or_else(|| err(params_base + 1, "missing `m=<dimension>`".into()))?;
    let (modulus, mod_col) =
        mod_val.ok_or_else(|| err(params_base + 1, "missing `mod=<hex>`".into()))?;
    let spec = FieldSpec::new(m, modulus)
        .map_err(|e| err(mod_col, format!("bad field modulus: {e}")))?;

    let coeff_base = base + "poly:".len();
    let mut coeffs = Vec::new();
    let mut cursor = 0usize;
    for token in coeff_part.split(',') {
        let trimmed = token.trim();
        let tok_col = coeff_base + cursor + (token.len() - token.trim_start().len()) + 1;
        if trimmed.is_empty() {
            if coeff_part.trim().is_empty() && coeffs.is_empty() {
                break; // empty coefficient list: the zero polynomial
            }
            return Err(err(tok_col, "empty coefficient".into()));
        }
        let v = u32::from_str_radix(trimmed, 16)
            .map_err(|_| err(tok_col, format!("`{trimmed}` is not a hex coefficient")))?;
        if v >= spec.size() as u32 {
            return Err(err(
                tok_col,
                format!("coefficient {v:#x} is not an element of the m={m} field"),
            ));
        }
        coeffs.push(v as u16);
        cursor += token.len() + 1;
    }
    UniPoly::new(spec, coeffs).map_err(|e| err(coeff_base + 1, e.to_string()))
}

/// Emits the canonical univariate form.
pub fn emit_univariate(p: &UniPoly) -> String {
    let coeffs =
        p.coeffs().iter().map(|&c| format!("{c:X}")).collect::<Vec<_>>().join(",");
    format!("poly: {coeffs}; field: m={}, mod={:#X}", p.spec().m(), p.spec().modulus())
}

/// An input parsed by format auto-detection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedSbox {
    Lut(VBF),
    Anf(VBF),
    Univariate(UniPoly),
}

impl ParsedSbox {
    /// The detected format, as a short name.
    pub fn format_name(&self) -> &'static str {
        match self {
            ParsedSbox::Lut(_) => "hex-lut",
            ParsedSbox::Anf(_) => "anf",
            ParsedSbox::Univariate(_) => "univariate",
        }
    }

    /// The function as a lookup table.
    pub fn to_vbf(&self) -> VBF {
        match self {
            ParsedSbox::Lut(f) | ParsedSbox::Anf(f) => f.clone(),
            ParsedSbox::Univariate(p) => VBF::from_univariate(p),
        }
    }

    /// The field, when the input carried one.
    pub fn field(&self) -> Option<&FieldSpec> {
        match self {
            ParsedSbox::Univariate(p) => Some(p.spec()),
            _ => None,
        }
    }
}

/// Parses any of the three formats, deciding by shape: a `poly:` prefix is
/// univariate, a line containing `=` is an ANF list, anything else is a
/// hex LUT.
pub fn parse_auto(input: &str) -> Result<ParsedSbox, FormatError> {
    let probe = input
        .lines()
        .map(|l| l.trim())
        .find(|l| !l.is_empty())
        .ok_or_else(|| FormatError::new(1, 1, "empty input"))?;
    if probe.starts_with("poly:") {
        parse_univariate(input).map(ParsedSbox::Univariate)
    } else if probe.contains('=') {
        parse_anf(input).map(ParsedSbox::Anf)
    } else {
        parse_hex_lut(input).map(ParsedSbox::Lut)
    }
}
