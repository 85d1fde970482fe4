use super::chern::bu_model;
use super::gr1c::{c, gr1c_eliminated};
use crate::algebra::{Cdga, Generator, Polynomial};
use crate::error::{Error, Result};
use crate::rational::{binom_q, rat, sign};
use crate::sections::RelativeModel;

/// Relative models of the fibrewise Thom space over `CP^n`, without and with
/// the `U(n+1)` action; `w` is the model of `BU(n+1)`.
#[derive(Clone, Debug)]
pub struct ThomModels {
    pub rel: RelativeModel,
    pub borel: RelativeModel,
    pub w: Cdga,
}

fn gens(n: u32, with_w: bool) -> (Vec<Generator>, Vec<Generator>) {
    let mut base = vec![Generator::new("b", 2), Generator::new("y", 2 * n as i32 + 1)];
    if with_w {
        base.extend(bu_model(n + 1).generators().iter().cloned());
    }
    let mut total = base.clone();
    total.extend([Generator::new("u", 2), Generator::new("t", 2 * n as i32 + 1)]);
    (base, total)
}

fn relative(n: u32, with_w: bool, dy: Polynomial, dt: Polynomial) -> Result<RelativeModel> {
    let (bg, tg) = gens(n, with_w);
    let base = Cdga::new(bg, [("y".to_string(), dy.clone())])?;
    let total = Cdga::new(tg, [("y".to_string(), dy), ("t".to_string(), dt)])?;
    RelativeModel::new(base, total)
}

fn b() -> Polynomial {
    Polynomial::gen(&Generator::new("b", 2))
}

fn u() -> Polynomial {
    Polynomial::gen(&Generator::new("u", 2))
}

/// The Thom model as stated in closed form, with `d(t)` carrying `(-1)^n`.
pub fn thom_rel_printed(n: u32) -> Result<RelativeModel> {
    let ni = n as i64;
    let mut dt = Polynomial::zero();
    for i in 0..=ni {
        dt.add_scaled(&(&b().pow(i as u32) * &u().pow((ni - i + 1) as u32)), &binom_q(ni + 1, i));
    }
    relative(n, false, b().pow(n + 1), dt.scale(&rat(sign(ni))))
}

/// The equivariant Thom model in closed form.
pub fn thom_borel_printed(n: u32) -> Result<RelativeModel> {
    let ni = n as i64;
    let mut dt = Polynomial::zero();
    for q in 0..=ni {
        for j in 0..=ni - q {
            let term = &(&c(q) * &b().pow(j as u32)) * &u().pow((ni - q - j + 1) as u32);
            dt.add_scaled(&term, &(binom_q(ni - q + 1, j) * rat(sign(q - 1))));
        }
    }
    let mut dy = Polynomial::zero();
    for q in 0..=ni + 1 {
        dy.add_scaled(&(&c(q) * &b().pow((ni + 1 - q) as u32)), &rat(sign(q)));
    }
    relative(n, true, dy, dt)
}

/// Thom model obtained from a minimal model of the fibrewise Grassmannian:
/// change variables to `b = chat`, `a = ccheck`, `x = (-1)^n sc_n`,
/// `y = (-1)^n (sc_(n+1) - chat sc_n)`, then restrict to the subalgebra
/// generated by `u = a` and `t = a x`.
pub fn thom_from_grassmannian(n: u32, gr: &Cdga) -> Result<RelativeModel> {
    let with_w = gr.has_generator("c_1");
    let s = rat(sign(n as i64));
    let dn = gr.d_gen(&format!("sc_{n}"))?.clone();
    let dn1 = gr.d_gen(&format!("sc_{}", n + 1))?.clone();
    let rename = |p: &Polynomial, a_to: &str| {
        p.substitute(&|g: &Generator| match g.name() {
            "chat" => Some(b()),
            "ccheck" => Some(Polynomial::gen(&Generator::new(a_to, 2))),
            _ => None,
        })
    };
    let chat = Polynomial::gen(&Generator::new("chat", 2));
    let dy = rename(&(&dn1 - &(&chat * &dn)), "a").scale(&s);
    if dy.mentions("a") {
        return Err(Error::Parameter("d(y) leaves the base".into()));
    }
    // t = a·x with a closed and even: d(t) = a·d(x)
    let dt = rename(&(&Polynomial::gen(&Generator::new("ccheck", 2)) * &dn), "u").scale(&s);
    relative(n, with_w, dy, dt)
}

/// Both Thom models via elimination and ideal restriction, `n >= 1`.
pub fn thom_complex_models(n: u32) -> Result<ThomModels> {
    let (abs, _) = gr1c_eliminated(n, false)?;
    let (rel_gr, _) = gr1c_eliminated(n, true)?;
    Ok(ThomModels {
        rel: thom_from_grassmannian(n, &abs)?,
        borel: thom_from_grassmannian(n, &rel_gr)?,
        w: bu_model(n + 1),
    })
}
