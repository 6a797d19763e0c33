//! The su(4) side of the l = 3 cone: the anti-hermitian matrix Z carrying
//! the fifteen variables satisfies (i/3) Tr[Z^3] = P_3 exactly, and the
//! block realization L of complexified so(6) maps onto antisymmetric
//! matrices.

use pfaffian_cones::hsiang::{
    build_z, check_l_membership, map_x_to_y, random_l_members, simple_root_matrices,
    trace_z_cubed_over_3i, trace_z_squared, verify_anti_hermitian, verify_trace_cubed_identity,
};
use pfaffian_cones::skew::pfaffian;

fn main() {
    let z = build_z();
    println!("Z[0][0] = {}", z.at(0, 0));
    println!("Z[0][1] = {}", z.at(0, 1));
    println!("trace(Z) = {}", z.trace());
    println!("Z anti-hermitian: {}", verify_anti_hermitian(&z));

    let t2 = trace_z_squared();
    println!("Tr[Z^2] = {}", t2.real_part());

    let lhs = trace_z_cubed_over_3i();
    println!(
        "(i/3) Tr[Z^3]: imaginary part zero = {}, equals P_3 = {}",
        lhs.imag_part().is_zero(),
        lhs.real_part() == pfaffian(3)
    );
    assert!(verify_trace_cubed_identity());

    for (name, x) in ["E23-E65", "E12-E54", "E26-E35"].iter().zip(simple_root_matrices()) {
        let member = check_l_membership(&x).unwrap().is_member();
        let image_antisym = map_x_to_y(&x).unwrap().is_antisymmetric();
        println!("{name}: in L = {member}, image antisymmetric = {image_antisym}");
    }

    let members = random_l_members(25, 99);
    let all_ok = members
        .iter()
        .all(|x| map_x_to_y(x).unwrap().is_antisymmetric());
    println!("25 random L-members map to antisymmetric matrices: {all_ok}");
}
