use criterion::{criterion_group, criterion_main, Criterion};
use qtwist::affine::{affine_crossing_check, check_ybe_spectral};
use qtwist::freealgebra::Params;
use qtwist::hopfpairing::{gram_matrix, pairing_constant, PairingContext};
use qtwist::rmatrix::{check_ybe, minimal_polynomial, r_from_rhat, rhat};
use qtwist::rootsystem::{highest_root, Family, RSType};
use qtwist::scalars::RatFunc;

fn scalars(c: &mut Criterion) {
    let x: RatFunc = "(r^3 - s^3)/(r - s)".parse().unwrap();
    let y: RatFunc = "(r^2 + s)/(r*s - 1)".parse().unwrap();
    c.bench_function("ratfunc add+mul", |b| b.iter(|| &(&x + &y) * &x));
}

fn rmatrix(c: &mut Criterion) {
    let b2 = RSType::of(Family::B, 2);
    let m = rhat(b2, Params::TwoParam).unwrap();
    c.bench_function("rhat B2 two-param", |b| b.iter(|| rhat(b2, Params::TwoParam).unwrap()));
    c.bench_function("minimal polynomial B2", |b| b.iter(|| minimal_polynomial(&m).unwrap()));
    let r = r_from_rhat(&m).unwrap();
    let mut g = c.benchmark_group("identity suites");
    g.sample_size(10);
    g.bench_function("YBE B2 two-param", |b| b.iter(|| check_ybe(&r).unwrap()));
    g.bench_function("spectral YBE C2", |b| b.iter(|| check_ybe_spectral(RSType::of(Family::C, 2), Params::OneParam).unwrap()));
    g.bench_function("affine crossing C2 order 6", |b| b.iter(|| affine_crossing_check(RSType::of(Family::C, 2), 6).unwrap()));
    g.finish();
}

fn pairing(c: &mut Criterion) {
    let b3 = RSType::of(Family::B, 3);
    let top = highest_root(b3);
    c.bench_function("pairing constant B3 highest root", |b| b.iter(|| pairing_constant(b3, &top, Params::TwoParam).unwrap()));
    let a3 = RSType::of(Family::A, 3);
    let mut g = c.benchmark_group("gram");
    g.sample_size(10);
    g.bench_function("gram A3 weight (1,1,1)", |b| {
        b.iter(|| gram_matrix(&PairingContext::new(a3, Params::TwoParam), &[1, 1, 1]).unwrap())
    });
    g.finish();
}

criterion_group!(benches, scalars, rmatrix, pairing);
criterion_main!(benches);
