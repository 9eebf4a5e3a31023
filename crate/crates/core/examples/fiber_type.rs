// Searching for a chain of modular flats. A tower certifies that the
// complement is an iterated bundle of punctured planes.

use hyparr::{braid_arrangement, char_poly, fiber_type, from_integer_forms, Arrangement, CharPoly};

fn describe(name: &str, a: &Arrangement) {
    let chi = char_poly(a);
    match fiber_type(a) {
        Some(tower) => {
            let roots: Vec<i64> = tower.fiber_ranks.iter().map(|&e| e as i64).collect();
            let product = CharPoly::from_roots(a.ambient_dim() - tower.len(), &roots);
            println!("{name}: tower ranks {:?}, chain {:?}", tower.fiber_ranks, tower.chain);
            println!("  chi(t) = {chi}  (product of ranks gives {product})");
        }
        None => println!("{name}: not fiber-type, chi(t) = {chi}"),
    }
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=4 {
        describe(&format!("braid({n})"), &braid_arrangement(n)?);
    }

    // Dropping one hyperplane from braid(3) keeps it fiber-type.
    describe("braid(3) minus H_{01}", &braid_arrangement(3)?.deletion(0)?);

    let generic = from_integer_forms(3, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 1, 1, 0]]);
    describe("x, y, z, x+y+z", &generic);
    assert!(fiber_type(&generic).is_none());
    assert!(!char_poly(&generic).splits_over_integers());

    // Affine: two vertical lines and a horizontal one.
    let grid = from_integer_forms(2, &[&[1, 0, 0], &[1, 0, 1], &[0, 1, 0]]);
    describe("affine grid", &grid);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
