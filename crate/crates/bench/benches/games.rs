use criterion::{black_box, criterion_group, criterion_main, Criterion};
use vcsharp_bench::layered;
use vcsharp_core::ef::ef_equiv;
use vcsharp_core::kernel::chain;
use vcsharp_core::ordertype::{enum_c, has_jump, realize, OtTerm};

fn games(c: &mut Criterion) {
    let (a, b) = (chain(7), chain(8));
    c.bench_function("ef chains 7,8 rank 3", |bch| {
        bch.iter(|| ef_equiv(black_box(&a), black_box(&b), 3).unwrap())
    });
    let (x, y) = (layered(3, 3), layered(3, 4));
    c.bench_function("ef layered 3x3,3x4 rank 3", |bch| {
        bch.iter(|| ef_equiv(black_box(&x), black_box(&y), 3).unwrap())
    });
    c.bench_function("enum_c 2", |bch| bch.iter(|| enum_c(black_box(2)).unwrap()));
    let t = OtTerm::shuffle([OtTerm::one(), OtTerm::finite(3).unwrap()]);
    c.bench_function("realize σ{1, 3} budget 6", |bch| {
        bch.iter(|| realize(black_box(&t), 6, 42).unwrap())
    });
    c.bench_function("has_jump σ{1, 3}", |bch| {
        bch.iter(|| has_jump(black_box(&t), 2))
    });
}

criterion_group!(benches, games);
criterion_main!(benches);
