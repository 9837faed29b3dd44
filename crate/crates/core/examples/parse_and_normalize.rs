//! Reading arrangements: factored text, JSON and CSV all land in the same
//! normal form.
//!
//! cargo run --example parse_and_normalize

use hyperrlct::input::{read_arrangement, InputFormat};
use hyperrlct::{normalize, to_factored_text};

pub fn run() -> Result<(), hyperrlct::Error> {
    let text = "vars x,y; 2*x * (4x) * y^0 * (x - y)";
    let from_text = normalize(&read_arrangement(text, InputFormat::Polynomial)?)?;
    let from_json = normalize(&read_arrangement(
        r#"{"variables": ["x", "y"], "normals": [["1/2", "0"], [3, 0], [1, -1]], "multiplicities": [1, 1, 1]}"#,
        InputFormat::Json,
    )?)?;
    let from_csv = normalize(&read_arrangement("x,y,mult\n1,0,2\n-2,2,1\n", InputFormat::Csv)?)?;
    assert_eq!(from_text, from_json);
    assert_eq!(from_json, from_csv);
    println!("{text:?} normalizes to {}", to_factored_text(&from_text));
    println!("{}", serde_json::to_string_pretty(&from_text)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), hyperrlct::Error> {
    run()
}
