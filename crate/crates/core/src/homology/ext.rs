use std::sync::Arc;

use super::{minimal_proj_resolution, syzygy, Dim};
use crate::error::Result;
use crate::linalg::Field;
use crate::module::{PosetModule, ProjTerm};

fn opposite<F: Field>(m: &PosetModule<F>) -> Arc<crate::poset::Poset> {
    Arc::new(m.poset().opposite())
}

/// Dimension vectors of `Ext^i(M, A)` for `i = 0..=pdim M`, as modules over
/// the opposite poset.
pub fn ext_dim_vector<F: Field>(m: &PosetModule<F>) -> Result<Vec<Vec<usize>>> {
    Ok(minimal_proj_resolution(m)?.ext_dims(&opposite(m)))
}

/// `Ext^i(M, A)` over the opposite poset.
pub fn ext_module<F: Field>(m: &PosetModule<F>, i: usize) -> Result<PosetModule<F>> {
    Ok(minimal_proj_resolution(m)?.ext_module(&opposite(m), i))
}

/// `inf { i : Ext^i(M, A) != 0 }`, infinite for the zero module.
pub fn grade<F: Field>(m: &PosetModule<F>) -> Result<Dim> {
    Ok(minimal_proj_resolution(m)?.grade(&opposite(m)))
}

/// `inf { i : Ext^i(D A, M) != 0 }`, computed as the grade of `D(M)`.
pub fn cograde<F: Field>(m: &PosetModule<F>) -> Result<Dim> {
    grade(&m.dual())
}

/// Auslander–Bridger transpose: the cokernel of `Hom(d_1, A)` for a minimal
/// presentation `P_1 -> P_0 -> M`. Lives over the opposite poset.
pub fn transpose<F: Field>(m: &PosetModule<F>) -> Result<PosetModule<F>> {
    let op = opposite(m);
    let r = minimal_proj_resolution(m)?;
    let c = &r.complex;
    let (Some(p0), Some(p1), Some(d1)) = (c.term(0), c.term(1), c.diff(1)) else {
        return Ok(PosetModule::zero(&op, m.field()));
    };
    let hom = ProjTerm::realize_map(&op, m.field(), p0, p1, &d1.transpose());
    Ok(hom.cokernel().0)
}

/// `τ_r(M) = D Tr Ω^{r-1}(M)` for `r >= 1`.
pub fn tau<F: Field>(m: &PosetModule<F>, r: usize) -> Result<PosetModule<F>> {
    assert!(r >= 1, "tau_r needs r >= 1");
    let omega = syzygy(m, r - 1)?;
    Ok(transpose(&omega)?.dual_over(m.poset_arc()))
}
