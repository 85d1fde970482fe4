use crate::algebra::{Cdga, Generator, Morphism, Polynomial};
use crate::error::{Error, Result};
use crate::rational::{binom_q, rat, sign};

/// `c_i` of a list of classes `c_1..c_r`, with `c_0 = 1` and zero outside.
fn class(c: &[Polynomial], i: i64) -> Polynomial {
    match i {
        0 => Polynomial::one(),
        i if i < 0 || i as usize > c.len() => Polynomial::zero(),
        i => c[i as usize - 1].clone(),
    }
}

/// Chern classes `c_1..c_r` of `E ⊗ L` for a rank-`r` bundle `E` and a line
/// bundle with first Chern class `l`.
pub fn chern_tensor_line(c: &[Polynomial], r: usize, l: &Polynomial) -> Result<Vec<Polynomial>> {
    if c.len() != r {
        return Err(Error::Parameter(format!("expected {r} Chern classes, got {}", c.len())));
    }
    if !l.is_zero() && !l.is_homogeneous_of(2) {
        return Err(Error::Parameter("line class must have degree 2".into()));
    }
    let r = r as i64;
    Ok((1..=r)
        .map(|p| {
            let mut out = Polynomial::zero();
            for i in 0..=p {
                let term = &l.pow((p - i) as u32) * &class(c, i);
                out.add_scaled(&term, &binom_q(r - i, p - i));
            }
            out
        })
        .collect())
}

/// Pontryagin classes `p_1..p_n` and Euler class of the realification of a
/// rank-`n` complex bundle: `p_i = Σ_k (-1)^(i+k) c_k c_(2i-k)`, `e = c_n`.
pub fn real_pontryagin_of_complex(c: &[Polynomial]) -> (Vec<Polynomial>, Polynomial) {
    let n = c.len() as i64;
    let p = (1..=n)
        .map(|i| {
            let mut out = Polynomial::zero();
            for k in 0..=2 * i {
                let term = &class(c, k) * &class(c, 2 * i - k);
                out.add_scaled(&term, &rat(sign(i + k)));
            }
            out
        })
        .collect();
    (p, class(c, n))
}

/// `Λ(c_1..c_n)` with zero differential, generators named `{prefix}_i`.
pub fn chern_algebra(prefix: &str, n: u32) -> Cdga {
    let gens = (1..=n).map(|i| Generator::new(format!("{prefix}_{i}"), 2 * i as i32)).collect();
    Cdga::new(gens, []).expect("free algebra")
}

pub fn bu_model(n: u32) -> Cdga {
    chern_algebra("c", n)
}

/// `Λ(chat) ⊗ Λ(ccheck) ⊗ Λ(cbar_1..cbar_(n-1))`.
pub fn h_target(n: u32) -> Cdga {
    let mut gens = vec![Generator::new("chat", 2), Generator::new("ccheck", 2)];
    gens.extend((1..n).map(|i| Generator::new(format!("cbar_{i}"), 2 * i as i32)));
    Cdga::new(gens, []).expect("free algebra")
}

fn h_check(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::Parameter(format!("n must be at least 2, got {n}")));
    }
    Ok(())
}

/// `h(c_p) = Σ_i C(n+1-i, p-i) chat^(p-i) (cbar_i + ccheck cbar_(i-1))`.
pub fn h_map(n: u32) -> Result<Morphism> {
    h_check(n)?;
    h_map_any(n)
}

pub(crate) fn h_map_any(n: u32) -> Result<Morphism> {
    let t = h_target(n);
    let cbar: Vec<Polynomial> = (1..n).map(|i| t.g(&format!("cbar_{i}"))).collect();
    let (ch, cc) = (t.g("chat"), t.g("ccheck"));
    let images: Vec<(String, Polynomial)> = (1..=n as i64 + 1).map(|p| {
        let mut img = Polynomial::zero();
        for i in 0..=p {
            let inner = &class(&cbar, i) + &(&cc * &class(&cbar, i - 1));
            img.add_scaled(&(&ch.pow((p - i) as u32) * &inner), &binom_q(n as i64 + 1 - i, p - i));
        }
        (format!("c_{p}"), img)
    }).collect();
    Morphism::new(bu_model(n + 1), t, images)
}

/// The same map assembled from bundle operations: `L̂ ⊕ (L̂ ⊗ (Ľ ⊕ Ē))`.
pub fn h_map_composite(n: u32) -> Result<Morphism> {
    h_check(n)?;
    let t = h_target(n);
    let cbar: Vec<Polynomial> = (1..n).map(|i| t.g(&format!("cbar_{i}"))).collect();
    let (ch, cc) = (t.g("chat"), t.g("ccheck"));
    // Whitney sum Ľ ⊕ Ē, rank n
    let sum: Vec<Polynomial> = (1..=n as i64)
        .map(|i| &class(&cbar, i) + &(&cc * &class(&cbar, i - 1)))
        .collect();
    let tensored = chern_tensor_line(&sum, n as usize, &ch)?;
    // L̂ ⊕ (…), rank n+1
    let images: Vec<(String, Polynomial)> = (1..=n as i64 + 1).map(|p| {
        let img = &class(&tensored, p) + &(&ch * &class(&tensored, p - 1));
        (format!("c_{p}"), img)
    }).collect();
    Morphism::new(bu_model(n + 1), t, images)
}
