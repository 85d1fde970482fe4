use crate::algebra::{Generator, Polynomial};

/// Degree-2 root variables `x1..xr`.
pub fn formal_roots(r: usize) -> Vec<Polynomial> {
    (1..=r).map(|i| Polynomial::gen(&Generator::new(format!("x{i}"), 2))).collect()
}

/// `e_1..e_r` of the given elements, read off from `Π (1 + x_i)`.
pub fn elementary_of(xs: &[Polynomial]) -> Vec<Polynomial> {
    let mut total = vec![Polynomial::one()];
    for x in xs {
        let mut next = vec![Polynomial::zero(); total.len() + 1];
        for (i, e) in total.iter().enumerate() {
            next[i] = &next[i] + e;
            next[i + 1] = &next[i + 1] + &(e * x);
        }
        total = next;
    }
    total.into_iter().skip(1).collect()
}
