use sullivan::algebra::{Cdga, Generator, Polynomial};
use sullivan::catalog::*;
use sullivan::rational::rat;

fn roots(r: usize) -> Vec<Polynomial> {
    (1..=r).map(|i| Polynomial::gen(&Generator::new(format!("x{i}"), 2))).collect()
}

/// `e_1..e_k` of the given elements, by expanding `Π (1 + x_i)`.
fn elementary(xs: &[Polynomial]) -> Vec<Polynomial> {
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

#[test]
fn tensor_with_line_matches_formal_roots() {
    let l = Polynomial::gen(&Generator::new("l", 2));
    for r in 1..=4 {
        let xs = roots(r);
        let c = elementary(&xs);
        let shifted: Vec<Polynomial> = xs.iter().map(|x| x + &l).collect();
        assert_eq!(chern_tensor_line(&c, r, &l).unwrap(), elementary(&shifted), "rank {r}");
    }
}

#[test]
fn tensor_with_line_examples() {
    let a = Cdga::new(vec![Generator::new("c1", 2), Generator::new("c2", 4), Generator::new("l", 2)], []).unwrap();
    let (c1, c2, l) = (a.g("c1"), a.g("c2"), a.g("l"));
    assert_eq!(chern_tensor_line(std::slice::from_ref(&c1), 1, &l).unwrap(), vec![&c1 + &l]);
    let same = chern_tensor_line(&[c1.clone(), c2.clone()], 2, &Polynomial::zero()).unwrap();
    assert_eq!(same, vec![c1.clone(), c2.clone()]);
    let out = chern_tensor_line(&[c1.clone(), c2.clone()], 2, &l).unwrap();
    assert_eq!(out[1], &(&c2 + &(&c1 * &l)) + &l.pow(2));
    assert!(chern_tensor_line(&[c1], 2, &l).is_err());
}

#[test]
fn pontryagin_matches_squared_roots() {
    for n in 1..=4 {
        let xs = roots(n);
        let c = elementary(&xs);
        let squares: Vec<Polynomial> = xs.iter().map(|x| x.pow(2)).collect();
        let (p, e) = real_pontryagin_of_complex(&c);
        assert_eq!(p, elementary(&squares), "rank {n}");
        assert_eq!(e, c[n - 1]);
    }
}

#[test]
fn pontryagin_examples() {
    let a = Cdga::new((1..=3).map(|i| Generator::new(format!("c{i}"), 2 * i)).collect(), []).unwrap();
    let c: Vec<Polynomial> = (1..=3).map(|i| a.g(&format!("c{i}"))).collect();
    assert_eq!(real_pontryagin_of_complex(&c[..1]).0[0], c[0].pow(2));
    assert_eq!(real_pontryagin_of_complex(&c[..2]).0[0], &c[0].pow(2) - &c[1].scale(&rat(2)));
    let p2 = &real_pontryagin_of_complex(&c).0[1];
    assert_eq!(p2, &(&c[1].pow(2) - &(&c[0] * &c[2]).scale(&rat(2))));
}

#[test]
fn h_map_examples_and_composite_route() {
    for n in 2..=4 {
        let h = h_map(n).unwrap();
        let t = h.target();
        let want = &(&t.g("chat").scale(&rat(n as i64 + 1)) + &t.g("ccheck")) + &t.g("cbar_1");
        assert_eq!(h.image("c_1").unwrap(), &want);
        assert_eq!(h.images(), h_map_composite(n).unwrap().images(), "n={n}");
    }
    let h = h_map(2).unwrap();
    let t = h.target();
    let (ch, cc, cb) = (t.g("chat"), t.g("ccheck"), t.g("cbar_1"));
    let want = &(&(&ch.pow(3) + &(&ch.pow(2) * &cc)) + &(&ch.pow(2) * &cb)) + &(&(&ch * &cc) * &cb);
    assert_eq!(h.image("c_3").unwrap(), &want);
    assert!(h_map(1).is_err());
}
