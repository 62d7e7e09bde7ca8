/// Generalized Laguerre polynomial L_n^(α)(x) by the three-term recurrence
/// (k+1) L_{k+1} = (2k + 1 + α − x) L_k − (k + α) L_{k−1}.
pub fn laguerre(degree: usize, alpha: f64, x: f64) -> f64 {
    if degree == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + alpha - x;
    for k in 1..degree {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}
