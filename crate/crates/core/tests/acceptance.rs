//! One PASS/FAIL line per acceptance criterion. All comparisons are exact
//! equalities; the only tolerance is the per-example time bound of criterion 1.
//!
//! Criteria listed in `KNOWN_DEVIATIONS` are expected to fail; the run still
//! prints FAIL for them and exits non-zero if any of them starts passing or
//! any other criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::{rng_frame, rng_local_poly, rng_nonzero, rng_rational};
use foliant_core::families::{
    self, catalog, catalog_entry, match_normal_form, Mult3Params, NormalForm, SSParams,
    StableParams, UnstableM2Params,
};
use foliant_core::foliation::{
    act, gamma_basis, local_representation, parse_vector_field, z_reduce, ProjPoint, VectorField,
};
use foliant_core::git::{
    classify, hull_position, weight_of_monomial, weight_support, Certificate, ClassifyOptions,
    HullPosition, OneParamSubgroup, VerdictClass,
};
use foliant_core::localgeom::oracle::{lex_groebner_basis, local_intersection_number, DEFAULT_BUDGET};
use foliant_core::localgeom::{
    intersection_index_origin, milnor_at_point, multiplicity_at_point,
    unique_singularity_certificate, IntersectionNumber, LocalPair,
};
use foliant_core::poly::{gcd_bivariate, int, parse_poly, resultant_in_variable, MPoly, Matrix3, Rational};
use foliant_core::foliation::Frame;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TIME_BOUND: Duration = Duration::from_secs(1);

/// Criteria that cannot pass as stated, with the reason logged for the reader.
const KNOWN_DEVIATIONS: &[(u32, &str)] = &[(
    3,
    "the stable-example is separated from the origin by lambda = (4, 1, -5) after moving \
     the line y + 2z = 0 to z = 0, so it is unstable; the classifier reports Unstable",
)];

struct Outcome {
    id: u32,
    title: &'static str,
    failures: Vec<String>,
    detail: String,
}

impl Outcome {
    fn new(id: u32, title: &'static str) -> Self {
        Self {
            id,
            title,
            failures: Vec::new(),
            detail: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

struct Example {
    name: &'static str,
    m: u32,
    class: VerdictClass,
}

/// The five multiplicity-2 and -3 examples, with the expected multiplicity and class.
const WORKED_EXAMPLES: [Example; 5] = [
    Example { name: "mult1-example", m: 1, class: VerdictClass::Stable },
    Example { name: "mult3-example", m: 3, class: VerdictClass::Unstable },
    Example { name: "ss-example", m: 2, class: VerdictClass::StrictlySemistable },
    Example { name: "stable-example", m: 2, class: VerdictClass::Stable },
    Example { name: "lemma-example", m: 2, class: VerdictClass::Unstable },
];

fn field(name: &str) -> VectorField {
    catalog_entry(name).expect("catalog entry").field
}

fn origin() -> ProjPoint {
    ProjPoint::basis(0)
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new(1, "Milnor number 13 at [1:0:0] for the five examples, < 1 s each");
    let mut times = Vec::new();
    for e in &WORKED_EXAMPLES {
        let x = field(e.name);
        let t = Instant::now();
        let mu = milnor_at_point(&x, &origin());
        let dt = t.elapsed();
        times.push(format!("{}={}ms", e.name, dt.as_millis()));
        o.check(mu == Ok(IntersectionNumber::Finite(13)), || format!("{}: {mu:?}", e.name));
        o.check(dt < TIME_BOUND, || format!("{}: took {dt:?}", e.name));
    }
    o.detail = times.join(" ");
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new(2, "multiplicities 1, 3, 2, 2, 2");
    for e in &WORKED_EXAMPLES {
        let m = multiplicity_at_point(&field(e.name), &origin());
        o.check(m == Ok(e.m), || format!("{}: expected {}, got {m:?}", e.name, e.m));
    }
    o
}

fn lambda_rechecked(x: &VectorField, cert: &Certificate) -> bool {
    match cert {
        Certificate::DestabilizingPair { frame, lambda } => {
            let f = z_reduce(&act(frame, x)).expect("non-null");
            weight_support(&f).weights().all(|w| w.pairing(lambda) > 0)
        }
        _ => true,
    }
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new(3, "verdicts Stable / Unstable / StrictlySemistable / Stable / Unstable");
    let mut got = Vec::new();
    for e in &WORKED_EXAMPLES {
        let x = field(e.name);
        let v = classify(&x, Some(&origin()), &ClassifyOptions::default()).expect("classifies");
        got.push(format!("{}={}", e.name, v.class));
        o.check(v.class == e.class, || {
            format!("{}: expected {}, got {} ({})", e.name, e.class, v.class, v.notes)
        });
        o.check(v.verify(&x), || format!("{}: certificate does not verify", e.name));
        o.check(lambda_rechecked(&x, &v.certificate), || {
            format!("{}: lambda fails the pairing re-check", e.name)
        });
    }
    o.detail = got.join(" ");
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new(4, "degree-2 catalog: X1-X3 Unstable, X4 Stable, unique point with mu = 7");
    let expected = [
        ("X1", VerdictClass::Unstable),
        ("X2", VerdictClass::Unstable),
        ("X3", VerdictClass::Unstable),
        ("X4", VerdictClass::Stable),
    ];
    for (name, class) in expected {
        let x = field(name);
        let mu = milnor_at_point(&x, &origin());
        o.check(mu == Ok(IntersectionNumber::Finite(7)), || format!("{name}: mu {mu:?}"));
        o.check(unique_singularity_certificate(&x, &origin()) == Ok(true), || {
            format!("{name}: not certified unique")
        });
        let v = classify(&x, Some(&origin()), &ClassifyOptions::default()).expect("classifies");
        o.check(v.class == class && v.verify(&x), || {
            format!("{name}: expected {class}, got {} ({})", v.class, v.notes)
        });
    }
    o
}

fn linear_field(a: &Matrix3) -> VectorField {
    let comps: [MPoly; 3] = std::array::from_fn(|i| {
        MPoly::from_terms(3, (0..3).map(|j| {
            let mut e = [0u32; 3];
            e[j] = 1;
            (e, a.rows[i][j].clone())
        }))
    });
    let [p, q, r] = comps;
    VectorField::new(p, q, r).expect("nonzero linear field")
}

fn conjugate(g: &Frame, m: &Matrix3) -> Matrix3 {
    &(g.matrix() * m) * g.inverse_matrix()
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new(5, "degree 1: 20 nilpotent -> Unstable; 20 diagonalizable non-nilpotent -> never Unstable (budget 200)");
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let opts = ClassifyOptions { budget: 200, seed: 1 };
    let jordan = Matrix3::from_i64([[0, 1, 0], [0, 0, 1], [0, 0, 0]]);
    let mut counts = [0usize; 2];
    for i in 0..20 {
        let g = rng_frame(&mut rng);
        let mut a = conjugate(&g, &jordan);
        // Adding a multiple of the identity adds a multiple of the radial field.
        let c = rng_rational(&mut rng, 3);
        for k in 0..3 {
            a.rows[k][k] += &c;
        }
        let x = linear_field(&a);
        let v = classify(&x, None, &opts).expect("classifies");
        o.check(v.class == VerdictClass::Unstable && v.verify(&x), || {
            format!("nilpotent sample {i}: {} ({})", v.class, v.notes)
        });
        counts[0] += usize::from(v.class == VerdictClass::Unstable);
    }
    for i in 0..20 {
        let g = rng_frame(&mut rng);
        // Distinct eigenvalues with nonzero spread keep singularities isolated.
        let (a, b) = (rng_nonzero(&mut rng, 4), rng_nonzero(&mut rng, 4));
        let eig = [int(0), a.clone(), &a + &b * &b + &b * &b / int(2) + int(1)];
        if eig[1] == eig[2] || eig[1] == eig[0] || eig[2] == eig[0] {
            continue;
        }
        let x = linear_field(&conjugate(&g, &Matrix3::diagonal(eig)));
        let v = classify(&x, None, &opts).expect("classifies");
        o.check(v.class != VerdictClass::Unstable, || {
            format!("diagonalizable sample {i}: Unstable ({})", v.notes)
        });
        counts[1] += usize::from(v.class != VerdictClass::Unstable);
    }
    o.detail = format!("nilpotent unstable {}/20, diagonalizable not unstable {}", counts[0], counts[1]);
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new(6, "oracle equivalence on 100 random pairs; lex basis of the multiplicity-1 pair");
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut tested = 0;
    while tested < 100 {
        let f = rng_local_poly(&mut rng, 4);
        let g = rng_local_poly(&mut rng, 4);
        let common = gcd_bivariate(&f, &g).expect("nonzero");
        if common.total_degree().finite() != Some(0) {
            continue;
        }
        let pair = LocalPair::new(f.clone(), g.clone());
        let fulton = intersection_index_origin(&pair);
        let oracle = local_intersection_number(&pair, DEFAULT_BUDGET);
        o.check(oracle.as_ref() == Ok(&fulton), || {
            format!("f = {f}, g = {g}: Fulton {fulton}, oracle {oracle:?}")
        });
        tested += 1;
    }
    let pair = local_representation(&field("mult1-example"));
    let basis = lex_groebner_basis(&[pair.f, pair.g], DEFAULT_BUDGET).expect("within budget");
    let expected = vec![
        parse_poly("z^13", 2).unwrap(),
        parse_poly("y + z^2 - z^5 + 3*z^11", 2).unwrap(),
    ];
    o.check(basis == expected, || {
        format!("basis {:?}", basis.iter().map(|p| p.to_string()).collect::<Vec<_>>())
    });
    o.detail = format!("{tested} pairs");
    o
}

fn index(f: &MPoly, g: &MPoly) -> IntersectionNumber {
    intersection_index_origin(&LocalPair::new(f.clone(), g.clone()))
}

fn add(a: IntersectionNumber, b: IntersectionNumber) -> IntersectionNumber {
    match (a, b) {
        (IntersectionNumber::Finite(x), IntersectionNumber::Finite(y)) => IntersectionNumber::Finite(x + y),
        _ => IntersectionNumber::Infinite,
    }
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new(7, "Fulton axioms on 200 instances each");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let y = MPoly::var(2, 0);
    let z = MPoly::var(2, 1);
    o.check(index(&y, &z) == IntersectionNumber::Finite(1), || "I(y, z) != 1".into());
    for _ in 0..200 {
        let f = rng_local_poly(&mut rng, 3);
        let g = rng_local_poly(&mut rng, 3);
        let h = rng_local_poly(&mut rng, 2);
        let a = rng_local_poly(&mut rng, 2);
        let a = &a + &MPoly::constant(2, rng_rational(&mut rng, 3));
        o.check(index(&f, &g) == index(&g, &f), || format!("symmetry: {f}, {g}"));
        o.check(index(&f, &(&g * &h)) == add(index(&f, &g), index(&f, &h)), || {
            format!("additivity: {f}, {g}, {h}")
        });
        o.check(index(&f, &(&g + &(&a * &f))) == index(&f, &g), || {
            format!("invariance: {f}, {g}, {a}")
        });
    }
    o
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new(8, "mu, m and verdict class invariant under 25 random frames per catalog entry");
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let opts = ClassifyOptions::default();
    let mut trials = 0;
    for e in catalog() {
        let p = e.point.clone();
        let base = classify(&e.field, Some(&p), &opts).expect("classifies").class;
        let mu = milnor_at_point(&e.field, &p).expect("singular");
        let m = multiplicity_at_point(&e.field, &p).expect("singular");
        for k in 0..25 {
            let mut g = rng_frame(&mut rng);
            if k % 2 == 1 {
                // Mix in non-integral entries.
                let d = Frame::new(Matrix3::diagonal([int(1), Rational::new(1.into(), 2.into()), int(3)]))
                    .expect("invertible");
                g = g.compose(&d);
            }
            let x = act(&g, &e.field);
            let q = g.apply(&p);
            let v = classify(&x, Some(&q), &opts).expect("classifies");
            o.check(milnor_at_point(&x, &q).as_ref() == Ok(&mu), || format!("{}: mu changed", e.name));
            o.check(multiplicity_at_point(&x, &q) == Ok(m), || format!("{}: m changed", e.name));
            o.check(v.class == base && v.verify(&x), || {
                format!("{} frame {k}: {} vs {} ({})", e.name, v.class, base, v.notes)
            });
            trials += 1;
        }
    }
    o.detail = format!("{trials} frames");
    o
}

fn criterion_9() -> Outcome {
    let mut o = Outcome::new(9, "weight-lattice facts and basis counts");
    let a = weight_of_monomial([2, 0, 1], 0);
    let b = weight_of_monomial([1, 2, 0], 0);
    o.check(a == weight_of_monomial([1, 1, 1], 1), || "x^2z d/dx vs xyz d/dy".into());
    o.check(b == weight_of_monomial([0, 3, 0], 1), || "xy^2 d/dx vs y^3 d/dy".into());
    let (pa, pb) = (a.plane(), b.plane());
    // Origin strictly between: collinear with opposite orientation.
    let collinear = pa.0 * pb.1 - pa.1 * pb.0 == 0;
    let opposite = pa.0 * pb.0 + pa.1 * pb.1 < 0;
    o.check(collinear && opposite, || format!("planes {pa:?}, {pb:?}"));
    o.check(gamma_basis(3).len() == 24, || "gamma_basis(3) size".into());
    for d in 1..=3u32 {
        let n = gamma_basis(d).len() as u32;
        o.check(n == d * d + 4 * d + 3, || format!("d = {d}: {n}"));
    }
    o
}

fn draw_ss(rng: &mut ChaCha8Rng) -> SSParams {
    SSParams {
        b02: rng_rational(rng, 3),
        b21: rng_rational(rng, 4),
        b12: rng_rational(rng, 4),
        c12: rng_rational(rng, 3),
    }
}

fn draw_stable(rng: &mut ChaCha8Rng) -> StableParams {
    let a10 = rng_nonzero(rng, 3);
    let a01 = rng_nonzero(rng, 3);
    let a11 = rng_rational(rng, 3);
    let a02 = rng_rational(rng, 3);
    let mut p = StableParams {
        a10: a10.clone(),
        a01: a01.clone(),
        a20: int(0),
        a11,
        a02,
        a30: rng_rational(rng, 3),
        a21: rng_rational(rng, 3),
        a12: rng_rational(rng, 3),
        a03: rng_rational(rng, 3),
    };
    // Condition (6): the cubic Q - y(a20 y^2 + a11 y z + a02 z^2) vanishes
    // at the root (y, z) = (a01, -a10) of the linear form.
    let [b30, b21, b12, b03, _] = p.derived();
    let (y, z) = (a01.clone(), -a10.clone());
    let q = &b30 * &y * &y * &y + &b21 * &y * &y * &z + &b12 * &y * &z * &z + &b03 * &z * &z * &z;
    let rest = &y * (&p.a11 * &y * &z + &p.a02 * &z * &z);
    p.a20 = (q - rest) / (&y * &y * &y);
    p
}

fn draw_lemma(rng: &mut ChaCha8Rng) -> UnstableM2Params {
    UnstableM2Params {
        b11: rng_nonzero(rng, 3),
        b02: rng_nonzero(rng, 3),
        b21: rng_rational(rng, 3),
        b12: rng_rational(rng, 3),
        b03: rng_rational(rng, 3),
    }
}

fn draw_mult3(rng: &mut ChaCha8Rng) -> Mult3Params {
    Mult3Params {
        a: std::array::from_fn(|_| rng_rational(rng, 3)),
        b: std::array::from_fn(|_| rng_rational(rng, 3)),
        c30: rng_nonzero(rng, 3),
    }
}

/// Draws until `n` parameter sets pass the constructor; returns the rejection count.
fn draws<P, F>(n: usize, rng: &mut ChaCha8Rng, draw: impl Fn(&mut ChaCha8Rng) -> P, mut each: F) -> usize
where
    F: FnMut(P) -> bool,
{
    let (mut accepted, mut rejected) = (0, 0);
    while accepted < n {
        if each(draw(rng)) {
            accepted += 1;
        } else {
            rejected += 1;
        }
    }
    rejected
}

fn criterion_10() -> Outcome {
    let mut o = Outcome::new(10, "family round trips on 50 draws each; ss boundary; stable A = l^4");
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut failures = Vec::new();
    let r_ss = draws(50, &mut rng, draw_ss, |p| {
        let Ok(x) = families::ss_family(&p) else { return false };
        if match_normal_form(&x) != Some(NormalForm::SsTheorem(p.clone())) {
            failures.push(format!("ss round trip {:?}", p.to_map()));
        }
        if hull_position(&weight_support(&z_reduce(&x).unwrap())) != HullPosition::OriginOnBoundary {
            failures.push(format!("ss support not on boundary {:?}", p.to_map()));
        }
        true
    });
    let r_st = draws(50, &mut rng, draw_stable, |p| {
        let Ok(x) = families::stable_family(&p) else { return false };
        if match_normal_form(&x) != Some(NormalForm::StableProp(p.clone())) {
            failures.push(format!("stable round trip {:?}", p.to_map()));
        }
        let a = &(x.r() * &MPoly::var(3, 1)) - &(x.q() * &MPoly::var(3, 2));
        let l = &MPoly::monomial(3, [0, 1, 0], p.a10.clone()) + &MPoly::monomial(3, [0, 0, 1], p.a01.clone());
        if a != l.pow(4) {
            failures.push(format!("stable A != l^4 {:?}", p.to_map()));
        }
        true
    });
    let r_un = draws(50, &mut rng, draw_lemma, |p| {
        let Ok(x) = families::unstable_m2_family(&p) else { return false };
        if match_normal_form(&x) != Some(NormalForm::UnstableLemma(p.clone())) {
            failures.push(format!("lemma round trip {:?}", p.to_map()));
        }
        true
    });
    let r_m3 = draws(50, &mut rng, draw_mult3, |p| {
        let Ok(x) = families::mult3_family(&p) else { return false };
        if match_normal_form(&x) != Some(NormalForm::Mult3(p.clone())) {
            failures.push(format!("mult3 round trip {:?}", p.to_map()));
        }
        true
    });
    o.failures = failures;
    o.detail = format!("rejected draws: ss {r_ss}, stable {r_st}, unstable {r_un}, mult3 {r_m3}");
    o
}

fn criterion_11() -> Outcome {
    let mut o = Outcome::new(11, "Res_z(f, g) of the ss-example has degree 13 in y");
    let pair = local_representation(&field("ss-example"));
    let res = resultant_in_variable(&pair.f, &pair.g, 1).expect("nondegenerate");
    let deg = res.degree_in(0).finite();
    o.check(deg == Some(13), || format!("degree {deg:?}"));
    o.detail = format!("Res = {res}");
    o
}

fn main() {
    // Smoke-check the imports that only appear in helpers.
    let _ = OneParamSubgroup::new([1, 0, -1]);
    let _ = parse_vector_field("(y) d/dx");

    let criteria: [fn() -> Outcome; 11] = [
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
        criterion_7, criterion_8, criterion_9, criterion_10, criterion_11,
    ];
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for run in criteria {
        let t = Instant::now();
        let o = run();
        let known = KNOWN_DEVIATIONS.iter().find(|(id, _)| *id == o.id);
        let ok = o.failures.is_empty();
        println!(
            "{} [{:>2}] {} ({} ms){}",
            if ok { "PASS" } else { "FAIL" },
            o.id,
            o.title,
            t.elapsed().as_millis(),
            if o.detail.is_empty() { String::new() } else { format!(" :: {}", o.detail) }
        );
        for f in &o.failures {
            println!("       - {f}");
        }
        match (ok, known) {
            (true, None) => passed += 1,
            (false, Some((_, why))) => println!("       known deviation: {why}"),
            (true, Some(_)) => unexpected.push(format!("criterion {} now passes; update KNOWN_DEVIATIONS", o.id)),
            (false, None) => unexpected.push(format!("criterion {} failed", o.id)),
        }
    }
    println!(
        "acceptance: {passed}/{} passed, {} known deviation(s)",
        criteria.len(),
        KNOWN_DEVIATIONS.len()
    );
    if !unexpected.is_empty() {
        for u in &unexpected {
            println!("unexpected: {u}");
        }
        std::process::exit(1);
    }
}
