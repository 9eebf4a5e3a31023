// Surgery groups of pure braid groups and fiber-type arrangement groups,
// with the Betti-number cross-check and the group-theoretic metadata.

use hyparr::surgery::{assembly_from_betti, h_of_complement, l_point};
use hyparr::{betti_numbers, braid_arrangement, braid_extension, k_theory_metadata, spf_pure_braid, surgery_pure_braid};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let point: Vec<String> = (0..4).map(|i| l_point(i).to_string()).collect();
    println!("L_*(1): {}", point.join(", "));

    for n in 1..=4 {
        let table = surgery_pure_braid(n)?;
        println!("PB_{n} ({} hyperplanes)", table.hyperplanes);
        print!("{table}");
        for i in 0..4 {
            assert_eq!(*table.get(i), h_of_complement(table.hyperplanes, i));
        }

        let betti = betti_numbers(&braid_arrangement(n as usize)?);
        let cross: Vec<String> = (0..4)
            .map(|i| assembly_from_betti(&betti, i).map(|g| g.to_string()))
            .collect::<Result<_, _>>()?;
        println!("  from Betti numbers {betti:?}: {}", cross.join(", "));

        let spf = spf_pure_braid(n)?;
        let ext = braid_extension(n)?;
        println!("  free quotient ranks {:?}, [B_{n} : PB_{n}] = {}", spf.quotient_ranks, ext.subgroup_index);
    }

    let k = k_theory_metadata();
    println!("Wh = {}, K~_0 = {}, K_<0 = {} for {}", k.whitehead, k.reduced_k0, k.negative_k, k.applies_to);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
