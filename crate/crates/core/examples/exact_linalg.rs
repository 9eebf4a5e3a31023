// Exact arithmetic underneath everything else: Gaussian rationals, row
// reduction, Smith normal form and simplicial homology.

use hyparr::linalg::{rref, smith_normal_form, solve_affine, GaussianRational, IntegerMatrix, Matrix};
use hyparr::reduced_homology;
use hyparr::topology::SimplicialComplex;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z: GaussianRational = "3:4".parse()?;
    let w = z.inv().ok_or("zero")?;
    println!("1/({z}) = {w}, |z|^2 = {}", z.norm_sqr());

    let m = Matrix::from_i64_rows(&[&[1, -1, 0], &[1, 0, -1], &[0, 1, -1]]);
    let r = rref(&m);
    println!("rank {} pivots {:?}", r.rank, r.pivots);
    let rhs: Vec<GaussianRational> = [0, 0, 0].map(GaussianRational::from).to_vec();
    if let Some((point, kernel)) = solve_affine(&m, &rhs) {
        println!("solution {point:?} + span{kernel:?}");
    }

    let big = IntegerMatrix::from_i64_rows(&[&[-6, 4, 2], &[2, -8, 12]]);
    println!("invariant factors {:?}", smith_normal_form(&big));

    for k in 1..=3 {
        let h = reduced_homology(&SimplicialComplex::simplex_boundary(k));
        let groups: Vec<String> = h.groups().iter().map(ToString::to_string).collect();
        println!("boundary of the {k}-simplex: {}", groups.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
