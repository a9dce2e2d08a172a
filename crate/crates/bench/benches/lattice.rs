use criterion::{black_box, criterion_group, criterion_main, Criterion};
use cyclotam::chains::length_spectrum;
use cyclotam::{LatticeModel, Variant};

fn build(c: &mut Criterion) {
    for n in [4, 5] {
        for v in [Variant::Cyclic, Variant::Affine] {
            c.bench_function(&format!("build {} n={n}", v.name()), |b| b.iter(|| LatticeModel::build(black_box(n), v).unwrap()));
        }
    }
}

fn operations(c: &mut Criterion) {
    let l = LatticeModel::build(5, Variant::Cyclic).unwrap();
    let m = l.len();
    c.bench_function("join+meet sweep cyclic n=5", |b| {
        b.iter(|| (0..m).step_by(7).flat_map(|x| (0..m).step_by(11).map(move |y| (x, y))).fold(0, |acc, (x, y)| acc ^ l.join(x, y) ^ l.meet(x, y)))
    });
    c.bench_function("rowmotion order cyclic n=5", |b| b.iter(|| l.row_order()));
    let a = LatticeModel::build(6, Variant::Affine).unwrap();
    c.bench_function("chain spectrum affine n=6", |b| b.iter(|| length_spectrum(black_box(&a))));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = build, operations
}
criterion_main!(benches);
