// Two stable models of the suspended complement: one 2-sphere per
// hyperplane, and the evaluation over the whole intersection poset.

use hyparr::lattice::betti_numbers_of;
use hyparr::topology::gm_wedge_detailed;
use hyparr::{braid_arrangement, intersection_poset, suspension_wedge};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = braid_arrangement(2)?;
    let p = intersection_poset(&a);

    println!("suspension wedge: {:?}", suspension_wedge(&a).sphere_dims);

    let (wedge, contributions) = gm_wedge_detailed(&p);
    for c in &contributions {
        println!(
            "flat {} (codim {}, {} simplices below, in S^{}): spheres {:?}",
            c.flat, c.codim, c.order_complex_simplices, c.ambient_sphere, c.spheres
        );
    }
    println!("full poset: {:?}", wedge.sphere_dims);
    println!("betti: {:?}", betti_numbers_of(&p));

    assert_eq!(wedge.sphere_dims, [2, 2, 2, 3, 3]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
