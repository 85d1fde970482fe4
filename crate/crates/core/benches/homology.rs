use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sullivan::catalog::{gr2_phi_quasi_iso, sections_borel, DzSign};
use sullivan::homology::{betti_numbers_with, DegreeWindow, Options};
use sullivan::parallel::Execution;

fn modes() -> [(&'static str, Options); 2] {
    let seq = Options {
        execution: Execution::Sequential,
        ..Options::default()
    };
    let par = Options {
        execution: Execution::Parallel,
        ..Options::default()
    };
    [("sequential", seq), ("parallel", par)]
}

fn betti(c: &mut Criterion) {
    let mut g = c.benchmark_group("betti_equivariant_sections_n4");
    g.sample_size(10);
    let a = sections_borel(4, 3).unwrap();
    let w = DegreeWindow::new(0, 16).unwrap();
    for (name, opts) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &opts, |b, o| {
            b.iter(|| betti_numbers_with(&a, w, *o).unwrap())
        });
    }
    g.finish();
}

fn quasi_iso(c: &mut Criterion) {
    let mut g = c.benchmark_group("gr2_thom_quasi_iso_n3");
    g.sample_size(10);
    let w = DegreeWindow::new(0, 12).unwrap();
    for (name, opts) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &opts, |b, o| {
            b.iter(|| gr2_phi_quasi_iso(3, DzSign::Minus, w, *o).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, betti, quasi_iso);
criterion_main!(benches);
