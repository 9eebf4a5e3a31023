// Reading and writing the text format, including complex coefficients and
// the errors reported for bad input.

use hyparr::{betti_numbers, char_poly, parse_arrangement, serialize_arrangement};

const INPUT: &str = "\
# three lines through the origin of C^2, one with a complex slope
arrangement 2
1 0 ; 0       # x = 0
0 1 ; 0       # y = 0
1 0:1 ; 0     # x + iy = 0
1/2 1/3 ; 1   # an affine line
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = parse_arrangement(INPUT)?;
    println!("{} hyperplanes in C^{}", a.len(), a.ambient_dim());
    println!("chi(t) = {}, betti {:?}", char_poly(&a), betti_numbers(&a));

    let text = serialize_arrangement(&a);
    print!("{text}");
    assert_eq!(parse_arrangement(&text)?, a);

    for bad in [
        "arrangement 2\n0 0 ; 1\n",
        "arrangement 2\n1 0 ; 0\n2 0 ; 0\n",
        "arrangement 2\n1 0 0 ; 0\n",
        "arrangement 2\n1 x ; 0\n",
        "1 0 ; 0\n",
    ] {
        match parse_arrangement(bad) {
            Ok(_) => unreachable!(),
            Err(e) => println!("error: {e}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
