use super::{HopfAlgebra, HopfParts};
use crate::error::Result;
use crate::linalg::Field;

/// The dual Hopf algebra on the dual basis `delta_0, ..., delta_{d-1}`:
/// multiplication is the transpose of `Delta`, comultiplication the
/// transpose of multiplication, unit `eps`, counit evaluation at `1`,
/// antipode the transpose of `S`.
pub fn dual_hopf<K: Field>(h: &HopfAlgebra<K>) -> Result<HopfAlgebra<K>> {
    let d = h.dim();
    let mut mult = Vec::with_capacity(d * d * d);
    let mut comult = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                // (delta_i delta_j)(e_k) = (delta_i (x) delta_j)(Delta e_k)
                mult.push(h.comult_tensor()[k * d * d + i * d + j].clone());
                // Delta(delta_i) evaluated on e_j (x) e_k is delta_i(e_j e_k)
                comult.push(h.mult_tensor()[j * d * d + k * d + i].clone());
            }
        }
    }
    let parts = HopfParts {
        name: format!("dual:{}", h.name()),
        dim: d,
        mult,
        unit: h.counit_vector().to_vec(),
        comult,
        counit: h.unit_vector().to_vec(),
        antipode: h.antipode_matrix().transpose().as_slice().to_vec(),
        provenance: None,
    };
    HopfAlgebra::from_parts(h.field(), parts)
}
