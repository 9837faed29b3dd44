//! Input documents: JSON, CSV and factored-polynomial text.
//!
//! JSON:
//! ```json
//! {"variables": ["x", "y"], "normals": [["1", "0"], ["0", "1"]],
//!  "offsets": ["0", "-1/2"], "multiplicities": [1, 2]}
//! ```
//! or `{"polynomial": "x*y^2"}`. Rationals may be `"p/q"` strings or JSON
//! integers; `offsets` and `variables` are optional.
//!
//! CSV: one hyperplane per line. Without a header every line is
//! `a_1,...,a_d,multiplicity`. A header line naming the columns enables
//! offsets: columns called `mult`/`multiplicity` and `offset` are picked
//! out, and the remaining names become the variables. `#` starts a comment.

use serde::Deserialize;

use crate::arrangement::ArrangementSpec;
use crate::error::{Error, Result};
use crate::parser::parse_factored_product;
use crate::ratlinalg::RationalMatrix;
use crate::rational::{self, Rational, RationalRepr};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Json,
    Csv,
    Polynomial,
}

impl InputFormat {
    /// Picks a format from the file extension, falling back to content.
    pub fn detect(path: Option<&std::path::Path>, text: &str) -> Self {
        match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
            Some("json") => return InputFormat::Json,
            Some("csv") => return InputFormat::Csv,
            Some("poly") | Some("txt") => return InputFormat::Polynomial,
            _ => {}
        }
        let t = text.trim_start();
        if t.starts_with('{') {
            InputFormat::Json
        } else if t.lines().next().is_some_and(|l| l.contains(',') && !l.contains('(')) && !t.starts_with("vars") {
            InputFormat::Csv
        } else {
            InputFormat::Polynomial
        }
    }
}

pub fn read_arrangement(text: &str, format: InputFormat) -> Result<ArrangementSpec> {
    match format {
        InputFormat::Json => parse_json_document(text),
        InputFormat::Csv => parse_csv(text),
        InputFormat::Polynomial => parse_factored_product(text),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDocument {
    polynomial: Option<String>,
    variables: Option<Vec<String>>,
    normals: Option<Vec<Vec<RationalRepr>>>,
    offsets: Option<Vec<RationalRepr>>,
    multiplicities: Option<Vec<i64>>,
}

pub fn parse_json_document(text: &str) -> Result<ArrangementSpec> {
    let doc: JsonDocument = serde_json::from_str(text)?;
    if let Some(poly) = doc.polynomial {
        if doc.normals.is_some() || doc.multiplicities.is_some() || doc.offsets.is_some() {
            return Err(Error::Input("give either `polynomial` or `normals`/`multiplicities`, not both".into()));
        }
        let mut spec = parse_factored_product(&poly)?;
        if let Some(vars) = doc.variables {
            // Re-parse with the declared order.
            spec = parse_factored_product(&format!("vars {}; {poly}", vars.join(",")))?;
        }
        return Ok(spec);
    }
    let normals = doc.normals.ok_or_else(|| Error::Input("missing `normals`".into()))?;
    let multiplicities = doc.multiplicities.ok_or_else(|| Error::Input("missing `multiplicities`".into()))?;
    if normals.is_empty() {
        return Err(Error::EmptyArrangement);
    }
    let d = normals[0].len();
    let rows = normals
        .into_iter()
        .map(|row| row.into_iter().map(RationalRepr::into_rational).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let normals = RationalMatrix::from_rows(rows, d)?;
    let offsets = match doc.offsets {
        Some(o) => o.into_iter().map(RationalRepr::into_rational).collect::<Result<Vec<_>>>()?,
        None => vec![rational::zero(); normals.rows()],
    };
    Ok(ArrangementSpec { variables: doc.variables, normals, offsets, multiplicities })
}

pub fn parse_csv(text: &str) -> Result<ArrangementSpec> {
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| (i, l.split(',').map(str::trim).collect()))
        .collect();
    let Some((_, first)) = lines.first() else {
        return Err(Error::EmptyArrangement);
    };
    let has_header = first.iter().any(|c| rational::parse(c).is_err());
    let (names, body) = if has_header { (Some(first.clone()), &lines[1..]) } else { (None, &lines[..]) };

    let width = names.as_ref().map_or(first.len(), Vec::len);
    let (mult_col, offset_col, var_cols, variables) = match &names {
        None => {
            if width < 2 {
                return Err(Error::Input("CSV rows need at least one coefficient and a multiplicity".into()));
            }
            (width - 1, None, (0..width - 1).collect::<Vec<_>>(), None)
        }
        Some(names) => {
            let find = |keys: &[&str]| names.iter().position(|n| keys.contains(&n.to_ascii_lowercase().as_str()));
            let mult = find(&["mult", "multiplicity", "s"])
                .ok_or_else(|| Error::Input("CSV header has no `mult` column".into()))?;
            let offset = find(&["offset", "b"]);
            let vars: Vec<usize> = (0..names.len()).filter(|&c| c != mult && Some(c) != offset).collect();
            if vars.is_empty() {
                return Err(Error::Input("CSV header names no variable columns".into()));
            }
            let var_names = vars.iter().map(|&c| names[c].to_string()).collect();
            (mult, offset, vars, Some(var_names))
        }
    };

    let mut rows = Vec::with_capacity(body.len());
    let mut offsets = Vec::with_capacity(body.len());
    let mut mults = Vec::with_capacity(body.len());
    for (line, cells) in body {
        if cells.len() != width {
            return Err(Error::Dimension(format!("CSV line {line} has {} fields, expected {width}", cells.len())));
        }
        let row = var_cols.iter().map(|&c| rational::parse(cells[c])).collect::<Result<Vec<Rational>>>()?;
        let mult = cells[mult_col]
            .parse::<i64>()
            .map_err(|_| Error::Input(format!("CSV line {line}: multiplicity `{}` is not an integer", cells[mult_col])))?;
        let offset = match offset_col {
            Some(c) => rational::parse(cells[c])?,
            None => rational::zero(),
        };
        rows.push(row);
        offsets.push(offset);
        mults.push(mult);
    }
    if rows.is_empty() {
        return Err(Error::EmptyArrangement);
    }
    Ok(ArrangementSpec {
        variables,
        normals: RationalMatrix::from_rows(rows, var_cols.len())?,
        offsets,
        multiplicities: mults,
    })
}
