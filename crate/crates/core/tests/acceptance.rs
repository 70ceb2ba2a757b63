//! Exit criteria. Every check is exact; prints one line per criterion and
//! exits nonzero if any fails.

mod common;

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use common::tag_from_eigenvalues;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sp4::arith::{int, rat, GaussianRational, Matrix, Matrix2, Matrix4, Rational, Vector4};
use sp4::cli::{parse_matrix, serialize_matrix};
use sp4::family::{dyadic_samples, family_p, family_spectrum, family_splitting, max_norm_dist, p0};
use sp4::lagrangian::{is_invariant, is_lagrangian, is_splitting, omega_obstruction, realified_eigenplane, Plane};
use sp4::symplectic::{
    classify_spectrum, direct_sum, is_symplectic, j, random_symplectic, satisfies_cond1, satisfies_cond2,
    symplectic_inverse, Generator, SpectralTag,
};
use sp4::{char_poly, kernel_dim, poly_eval};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `{1/10, 1/3, 1/2, 1, 2} ∪ {1/2^k : k = 1..10}`.
fn samples() -> Vec<Rational> {
    let mut s = vec![rat(1, 10), rat(1, 3), rat(1, 2), int(1), int(2)];
    s.extend(dyadic_samples(10));
    s
}

fn one_plus_sq(e: &Rational) -> Rational {
    Rational::one() + e * e
}

fn symplecticity() -> Check {
    for e in samples().iter().chain([&int(0)]) {
        let p = family_p(e).unwrap();
        ensure(&(&p.transpose() * &j()) * &p == j(), || format!("P^T J P != J at eps={e}"))?;
    }
    Ok(())
}

fn trace_identity() -> Check {
    for e in samples() {
        let tr = family_p(&e).unwrap().trace();
        ensure(tr == int(2) + int(2) / one_plus_sq(&e), || format!("trace {tr} at eps={e}"))?;
        ensure(tr < int(4), || format!("trace {tr} not < 4 at eps={e}"))?;
    }
    Ok(())
}

fn det_identity() -> Check {
    for e in samples() {
        let d = (&family_p(&e).unwrap() - &Matrix4::identity()).det();
        let e2 = &e * &e;
        ensure(d == &e2 * &e2 / one_plus_sq(&e), || format!("det(P-I) = {d} at eps={e}"))?;
    }
    let at = |e: Rational| (&family_p(&e).unwrap() - &Matrix4::identity()).det();
    ensure(at(int(1)) == rat(1, 2), || "det(P_1 - I) != 1/2".into())?;
    ensure(at(rat(1, 2)) == rat(1, 20), || "det(P_1/2 - I) != 1/20".into())
}

fn spectrum() -> Check {
    for e in samples() {
        let chi = char_poly(&family_p(&e).unwrap());
        let s = one_plus_sq(&e);
        let lambdas = [
            GaussianRational::new(int(1), e.clone()),
            GaussianRational::new(int(1), -&e),
            GaussianRational::new(Rational::one() / &s, -&e / &s),
            GaussianRational::new(Rational::one() / &s, &e / &s),
        ];
        for l in &lambdas {
            ensure(poly_eval(&chi, l).is_zero(), || format!("chi({l}) != 0 at eps={e}"))?;
        }
        ensure(family_spectrum(&e).unwrap().iter().all(|z| lambdas.contains(z)), || format!("closed-form spectrum differs at eps={e}"))?;
        let m = lambdas[0].norm_sqr();
        ensure(m == s && !m.is_one(), || format!("|1+i eps|^2 = {m} at eps={e}"))?;
    }
    Ok(())
}

fn conditions() -> Check {
    ensure(satisfies_cond1(&p0()), || "P_0 fails condition one".into())?;
    let k = kernel_dim(&(&p0() - &Matrix4::identity()));
    ensure(k == 3, || format!("dim ker(P_0 - I) = {k}"))?;
    for e in samples() {
        let p = family_p(&e).unwrap();
        ensure(satisfies_cond2(&p), || format!("condition two fails at eps={e}"))?;
        let tag = classify_spectrum(&p).map_err(|x| x.to_string())?.tag;
        ensure(tag == SpectralTag::ComplexQuadruple, || format!("{tag:?} at eps={e}"))?;
    }
    Ok(())
}

fn convergence() -> Check {
    for e in dyadic_samples(10) {
        let p = family_p(&e).unwrap();
        let d = max_norm_dist(&p, &p0());
        ensure(d == e, || format!("distance {d} at eps={e}"))?;
        ensure(satisfies_cond2(&p), || format!("condition two fails at eps={e}"))?;
        let tag = classify_spectrum(&p).map_err(|x| x.to_string())?.tag;
        ensure(tag != SpectralTag::Elliptic, || format!("elliptic at eps={e}"))?;
    }
    Ok(())
}

fn splittings() -> Check {
    for e in samples() {
        let p = family_p(&e).unwrap();
        let (u, v) = family_splitting(&e).map_err(|x| x.to_string())?;
        ensure(is_lagrangian(&u) && is_lagrangian(&v), || format!("non-Lagrangian plane at eps={e}"))?;
        ensure(is_splitting(&u, &v), || format!("not a direct sum at eps={e}"))?;
        ensure(is_invariant(&p, &u) && is_invariant(&p, &v), || format!("plane not invariant at eps={e}"))?;
        let [plus, _, inv_plus, _] = family_spectrum(&e).unwrap();
        let eu = realified_eigenplane(&p, &plus).map_err(|x| x.to_string())?;
        let ev = realified_eigenplane(&p, &inv_plus).map_err(|x| x.to_string())?;
        ensure(eu == u && ev == v, || format!("eigenplanes differ from the splitting at eps={e}"))?;
    }
    ensure(family_splitting(&int(0)).is_err(), || "splitting accepted at eps=0".into())
}

fn rand_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-50..=50), rng.gen_range(1..=20))
}

fn obstruction() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..1000 {
        let u: Vector4 = std::array::from_fn(|_| rand_rational(&mut rng));
        let t = u[2].clone();
        let w = omega_obstruction(&p0(), &u);
        ensure(w == -(&t * &t), || format!("omega_obstruction = {w} for t = {t}"))?;
        let witness = [u[0].clone(), u[1].clone(), int(1), u[3].clone()];
        let w = omega_obstruction(&p0(), &witness);
        ensure(w == int(-1), || format!("witness value {w}"))?;
    }
    Ok(())
}

/// 2×2 blocks of determinant one with their eigenvalues.
fn known_blocks() -> Vec<(Matrix2, [GaussianRational; 2])> {
    let g = GaussianRational::new;
    let rot = |c: Rational, s: Rational| {
        let m = Matrix2::from_rows([[c.clone(), -&s], [s.clone(), c.clone()]]);
        (m, [g(c.clone(), s.clone()), g(c, -s)])
    };
    let diag = |a: Rational| {
        let inv = Rational::one() / &a;
        (Matrix2::diag([a.clone(), inv.clone()]), [g(a, int(0)), g(inv, int(0))])
    };
    vec![
        rot(rat(3, 5), rat(4, 5)),
        rot(rat(5, 13), rat(-12, 13)),
        rot(rat(-8, 17), rat(15, 17)),
        rot(int(0), int(1)),
        diag(int(2)),
        diag(rat(-3, 1)),
        diag(rat(5, 2)),
        diag(int(1)),
        diag(int(-1)),
        (Matrix2::from_ints([[1, 1], [0, 1]]), [g(int(1), int(0)), g(int(1), int(0))]),
        (Matrix2::from_ints([[-1, 3], [0, -1]]), [g(int(-1), int(0)), g(int(-1), int(0))]),
    ]
}

fn random_group_properties() -> Check {
    for seed in 0..200u64 {
        let s = random_symplectic(seed, 5);
        let t = random_symplectic(seed + 1000, 5);
        ensure(is_symplectic(&s), || format!("seed {seed} not symplectic"))?;
        ensure(is_symplectic(&(&s * &t)), || format!("product not symplectic at seed {seed}"))?;
        let inv = symplectic_inverse(&s).map_err(|e| e.to_string())?;
        ensure(is_symplectic(&inv) && &s * &inv == Matrix4::identity(), || format!("inverse fails at seed {seed}"))?;
        ensure(s.det() == int(1), || format!("det != 1 at seed {seed}"))?;
        let chi = char_poly(&s);
        ensure(chi.coeff(0).is_one() && chi.coeff(1) == chi.coeff(3), || format!("char poly {chi} not reciprocal at seed {seed}"))?;
    }

    let mut agreed = 0;
    let blocks = known_blocks();
    let mut cases: Vec<(Matrix4, Vec<GaussianRational>)> = Vec::new();
    for (a, ea) in &blocks {
        for (b, eb) in &blocks {
            cases.push((direct_sum(a, b), ea.iter().chain(eb).cloned().collect()));
        }
    }
    let a = Matrix2::from_rows([[rat(6, 5), rat(-8, 5)], [rat(8, 5), rat(6, 5)]]);
    let l = GaussianRational::new(rat(6, 5), rat(8, 5));
    let dil = vec![l.clone(), l.conj(), l.inv().unwrap(), l.conj().inv().unwrap()];
    cases.push((Generator::Dilation(a).matrix(), dil));
    for e in samples().into_iter().chain([int(0)]) {
        cases.push((family_p(&e).unwrap(), family_spectrum(&e).unwrap().to_vec()));
    }
    for (k, (m, eigs)) in cases.iter().enumerate() {
        let want = tag_from_eigenvalues(eigs);
        let c = random_symplectic(k as u64, 2);
        let hidden = &(&symplectic_inverse(&c).unwrap() * m) * &c;
        for s in [m, &hidden] {
            let got = classify_spectrum(s).map_err(|e| e.to_string())?.tag;
            ensure(got == want, || format!("case {k}: classified {got:?}, eigenvalues say {want:?}"))?;
        }
        agreed += 1;
    }
    ensure(agreed >= 100, || format!("only {agreed} known-spectrum cases"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut changes = 0;
    while changes < 100 {
        let basis = |rng: &mut ChaCha8Rng| Matrix::<4, 2>::from_fn(|_, _| if rng.gen_bool(0.4) { int(0) } else { rand_rational(rng) });
        let (Ok(u), Ok(v)) = (Plane::new(basis(&mut rng)), Plane::new(basis(&mut rng))) else { continue };
        let t = Matrix2::from_fn(|_, _| rand_rational(&mut rng));
        if t.det().is_zero() {
            continue;
        }
        let u2 = u.rebased(&t).unwrap();
        let s = random_symplectic(changes, 3);
        ensure(
            is_lagrangian(&u2) == is_lagrangian(&u)
                && is_splitting(&u2, &v) == is_splitting(&u, &v)
                && is_invariant(&s, &u2) == is_invariant(&s, &u)
                && is_invariant(&p0(), &u2) == is_invariant(&p0(), &u),
            || format!("basis change {changes} changed a predicate"),
        )?;
        changes += 1;
    }
    Ok(())
}

fn cli() -> Check {
    let bin = env!("CARGO_BIN_EXE_sp4");
    let out = Command::new(bin).args(["verify-counterexample", "--depth", "10"]).output().map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.code() == Some(0) && stdout.lines().last() == Some("PASS"), || format!("verify-counterexample: {stdout}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..100 {
        let m = Matrix4::from_fn(|_, _| rand_rational(&mut rng));
        let back = parse_matrix(serialize_matrix(&m).as_bytes()).map_err(|e| e.to_string())?;
        ensure(back == m, || format!("round trip changed {}", serialize_matrix(&m)))?;
    }

    let fixture = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/p0.json");
    let out = Command::new(bin).arg("classify").arg("--matrix").arg(&fixture).output().map_err(|e| e.to_string())?;
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0) && v["cond1"] == true && v["cond2"] == false, || format!("classify p0.json: {v}"))
}

fn main() {
    let start = Instant::now();
    let criteria: [Criterion; 10] = [
        ("symplecticity of the family", symplecticity),
        ("trace identity", trace_identity),
        ("determinant identity", det_identity),
        ("spectrum off the unit circle", spectrum),
        ("condition checks", conditions),
        ("refutation convergence", convergence),
        ("invariant Lagrangian splitting", splittings),
        ("obstruction law at the limit", obstruction),
        ("property suites", random_group_properties),
        ("command line", cli),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("[PASS] {:>2}. {name}", k + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2}. {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.2?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
