//! Closed-form homotopy types of `cl(C_n^r)` and `ind(T_{n,k})`. The case
//! boundaries are rational; they are compared exactly.

use num_rational::Ratio;

use crate::error::Result;
use crate::families::CircularParams;
use crate::homology::WedgePrediction;

/// Homotopy type of the clique complex of the `r`-th power of the
/// `n`-cycle. With `l = ⌊r / (n − 2r)⌋` it is a wedge of `n − 2r − 1`
/// copies of `S^{2l}` when `r = l·n / (2l + 1)`, and `S^{2l+1}` otherwise;
/// for `r >= ⌊n/2⌋` the power is complete and the complex contractible.
pub fn predict_clique_cycle_power(n: usize, r: usize) -> Result<WedgePrediction> {
    if n < 3 {
        return Err(crate::Error::InvalidParams(format!("cycle length must be at least 3, got {n}")));
    }
    if r >= n / 2 {
        return Ok(WedgePrediction::point());
    }
    let (n, r) = (n as i64, r as i64);
    let l = r / (n - 2 * r);
    let lower = Ratio::new(l * n, 2 * l + 1);
    let upper = Ratio::new((l + 1) * n, 2 * l + 3);
    let r_q = Ratio::from_integer(r);
    if r_q == lower {
        Ok(WedgePrediction::wedge((n - 2 * r - 1) as usize, 2 * l as usize))
    } else {
        assert!(lower < r_q && r_q < upper, "l = floor(r/(n-2r)) brackets r");
        Ok(WedgePrediction::sphere(2 * l as usize + 1))
    }
}

/// Homotopy type of the independence complex of the circular complete
/// graph `T_{n,k}`: `⋁^k S^{2l}` when `n = (2l + 1)(k + 1)`, and `S^{2l+1}`
/// when `2l + 1 < n / (k + 1) < 2l + 3`.
pub fn predict_ind_circular(n: usize, k: usize) -> Result<WedgePrediction> {
    CircularParams::new(n, k)?;
    let q = Ratio::new(n as i64, k as i64 + 1);
    // largest l with 2l + 1 <= q
    let l = ((q - 1) / 2).floor().to_integer();
    if q == Ratio::from_integer(2 * l + 1) {
        Ok(WedgePrediction::wedge(k, 2 * l as usize))
    } else {
        assert!(Ratio::from_integer(2 * l + 1) < q && q < Ratio::from_integer(2 * l + 3));
        Ok(WedgePrediction::sphere(2 * l as usize + 1))
    }
}

/// Homotopy type of `ind(C_m)`: `S^{j-1} ∨ S^{j-1}` for `m = 3j`,
/// `S^{j-1}` for `m = 3j + 1` and `S^j` for `m = 3j + 2`.
pub fn predict_ind_cycle(m: usize) -> Result<WedgePrediction> {
    if m < 3 {
        return Err(crate::Error::InvalidParams(format!("cycle length must be at least 3, got {m}")));
    }
    let j = m / 3;
    Ok(match m % 3 {
        0 => WedgePrediction::wedge(2, j - 1),
        1 => WedgePrediction::sphere(j - 1),
        _ => WedgePrediction::sphere(j),
    })
}
