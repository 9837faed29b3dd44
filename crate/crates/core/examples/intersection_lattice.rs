//! Build an intersection lattice, walk its containment order and export it
//! as JSON.
//!
//! cargo run --example intersection_lattice

use hyperrlct::{build_lattice, inclusion_dag, normalize, parse_factored_product};

pub fn run() -> Result<(), hyperrlct::Error> {
    let arr = normalize(&parse_factored_product("x*y^2*z^2*(x+y+z)")?)?;
    let lattice = build_lattice(&arr)?;
    let dag = inclusion_dag(&lattice.flats);
    for (i, f) in lattice.flats.iter().enumerate() {
        println!(
            "#{i:<2} codim {} s {} members {:?} contains {:?}",
            f.codim, f.s, f.members, dag.below[i]
        );
    }
    let pairs: Vec<(usize, usize)> = dag.pairs().collect();
    let export = serde_json::json!({ "flats": lattice.flats, "containment": pairs });
    println!("{}", serde_json::to_string(&export)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), hyperrlct::Error> {
    run()
}
