//! Working with permutation and matrix groups directly: build a group from
//! generators, get its order from a stabilizer chain, and count elements.

use sgq::realize::{build_field, special_linear_generators, GroupRealization, Perm};

fn main() -> sgq::Result<()> {
    // A6 generated by the 3-cycles (1,2,3), (2,3,4), (3,4,5), (4,5,6).
    let gens = (1..=4)
        .map(|i| Perm::from_cycles(6, &[&[i, i + 1, i + 2]]))
        .collect::<sgq::Result<Vec<_>>>()?;
    let a6 = GroupRealization::permutation("A6", 6, gens)?;
    let chain = a6.stabilizer_chain();
    println!("A6: base {:?}, orbit lengths {:?}, order {}", chain.base(), chain.orbit_lengths(), chain.order());
    println!("A6 census: {:?}", a6.census(1 << 20, 1)?.counts());

    // L3(4) as SL(3,4) acting on the 21 points of the projective plane.
    let field = build_field(2, 2)?;
    let matrices = special_linear_generators(3, &field)?;
    let l34 = GroupRealization::projective("L3(4)", field, matrices, None)?;
    let g = &l34.generators()[0];
    println!("L3(4): degree {}, order {}, first generator {g} has order {}", l34.degree(), l34.bsgs_order(), g.element_order(1000)?);
    Ok(())
}
