// Intersection lattice of the braid arrangement in C^4: flats by
// codimension with their Möbius values, then χ(t) and the Betti numbers.

use hyparr::lattice::{betti_numbers_of, char_poly_of};
use hyparr::{braid_arrangement, intersection_poset, mobius};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = braid_arrangement(3)?;
    let p = intersection_poset(&a);
    let mu = mobius(&p);

    for (codim, layer) in p.layers().iter().enumerate() {
        println!("codim {codim}: {} flats", layer.len());
        for &x in layer {
            let names: Vec<&str> = p.flats()[x].hyperplanes.iter().map(|h| a.label(h).unwrap_or("?")).collect();
            println!("  mu = {:>3}  {{{}}}", mu.get(x), names.join(", "));
        }
    }

    let chi = char_poly_of(&p);
    println!("chi(t) = {chi}");
    println!("integer roots: {:?}", chi.integer_roots());
    println!("betti: {:?}", betti_numbers_of(&p));
    assert_eq!(betti_numbers_of(&p), [1, 6, 11, 6, 0]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
