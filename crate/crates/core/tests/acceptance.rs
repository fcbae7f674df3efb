//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so the lines are always printed.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use hecke_core::analysis::{format_sig, rank_stats, twist_numbers, twist_ratio};
use hecke_core::braid::{
    braid_to_hecke, trace_degree_bounds, weaving_braid, weaving_hecke, WeavingRecursion,
};
use hecke_core::hecke::{generator_power, pk_poly};
use hecke_core::invariants::{
    alexander, alexander_of, homfly, homfly_of, jones, jones_of, jones_of_braid, khovanov,
    khovanov_from_jones, khovanov_of, ClosureTrace, HalfLaurent, HomflyPoly, SkeinValue,
};
use hecke_core::{
    BigRational, BigUint, BraidWord, FactoredRational, HeckeAlgebra, HeckeElement, MultiLaurent,
    Var, WeavingSpec,
};
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<(), String>;
type Named = (&'static str, fn() -> Check);

fn w(nn: usize, m: usize) -> WeavingSpec {
    WeavingSpec::new(nn, m).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn x(k: i32) -> MultiLaurent {
    MultiLaurent::var_pow(Var::X, k)
}

fn criterion_1() -> Check {
    let mut failures = Vec::new();
    let mut check = |name: &str, ok: bool| {
        if !ok {
            failures.push(name.to_string());
        }
    };
    check(
        "alexander W(3,5)",
        alexander(&w(3, 5)).unwrap()
            == HalfLaurent::from_t_coeffs(-4, &[1, -6, 15, -24, 29, -24, 15, -6, 1]),
    );
    check(
        "alexander W(5,2)",
        alexander(&w(5, 2)).unwrap() == HalfLaurent::from_t_coeffs(-2, &[1, -7, 13, -7, 1]),
    );
    let half = [
        1, -21, 195, -1075, 4010, -10989, 23485, -40871, 59620, -74245,
    ];
    let mut a65: Vec<i64> = half.to_vec();
    a65.push(79781);
    a65.extend(half.iter().rev());
    check(
        "alexander W(6,5)",
        alexander(&w(6, 5)).unwrap() == HalfLaurent::from_t_coeffs(-10, &a65),
    );
    check(
        "jones W(3,3)",
        jones(&w(3, 3)).unwrap() == HalfLaurent::from_t_coeffs(-3, &[-1, 3, -2, 4, -2, 3, -1]),
    );
    check(
        "jones W(4,3)",
        jones(&w(4, 3)).unwrap()
            == HalfLaurent::from_t_coeffs(-2, &[-1, 5, -8, 11, -13, 13, -11, 8, -4, 1]),
    );
    let v64 = [
        -1, 11, -58, 200, -519, 1079, -1869, 2776, -3613, 4177, -4324, 4018, -3335, 2453, -1579,
        872, -407, 154, -45, 9, -1,
    ];
    check(
        "jones W(6,4)",
        jones(&w(6, 4)).unwrap() == HalfLaurent::from_x_coeffs_step2(-13, &v64),
    );
    let by_z: [(i32, [i64; 3]); 12] = [
        (-2, [1, -2, 1]),
        (2, [-16, 32, -16]),
        (4, [0, 16, 0]),
        (6, [60, -120, 60]),
        (8, [20, -100, 20]),
        (10, [-72, 124, -72]),
        (12, [-48, 168, -48]),
        (14, [19, 10, 19]),
        (16, [27, -73, 27]),
        (18, [9, -45, 9]),
        (20, [1, -11, 1]),
        (22, [0, -1, 0]),
    ];
    let triples: Vec<(i32, i32, i64)> = by_z
        .iter()
        .flat_map(|&(z, cs)| [(-2, z, cs[0]), (0, z, cs[1]), (2, z, cs[2])])
        .filter(|t| t.2 != 0)
        .collect();
    check(
        "homfly W(3,12)",
        homfly(&w(3, 12)).unwrap() == HomflyPoly::from_triples(&triples),
    );
    check(
        "homfly W(4,2)",
        homfly(&w(4, 2)).unwrap()
            == HomflyPoly::from_triples(&[
                (-5, -1, -1),
                (-3, -1, 1),
                (-3, 1, 2),
                (-1, 1, -1),
                (1, 1, 1),
                (-1, 3, -1),
            ]),
    );
    check(
        "homfly W(5,2)",
        homfly(&w(5, 2)).unwrap()
            == HomflyPoly::from_triples(&[
                (0, 0, 1),
                (-4, 0, 1),
                (-2, 0, -1),
                (2, 0, -1),
                (4, 0, 1),
                (0, 2, 1),
                (-2, 2, -2),
                (2, 2, -2),
                (0, 4, 1),
            ]),
    );
    ensure(failures.is_empty(), || {
        format!("mismatch: {}", failures.join(", "))
    })
}

fn table(entries: &[(i64, i64, u32)]) -> BTreeMap<(i64, i64), BigUint> {
    entries
        .iter()
        .map(|&(i, j, r)| ((i, j), BigUint::from(r)))
        .collect()
}

fn criterion_2() -> Check {
    let t1 = table(&[
        (6, 15, 1),
        (5, 13, 3),
        (4, 11, 5),
        (5, 11, 1),
        (3, 9, 6),
        (4, 9, 3),
        (2, 7, 7),
        (3, 7, 5),
        (1, 5, 6),
        (2, 5, 6),
        (0, 3, 5),
        (1, 3, 7),
        (-1, 1, 4),
        (0, 1, 7),
        (-2, -1, 1),
        (-1, -1, 4),
        (-2, -3, 4),
        (-3, -5, 1),
    ]);
    let t2 = table(&[
        (6, 13, 1),
        (5, 11, 5),
        (4, 9, 11),
        (5, 9, 1),
        (3, 7, 19),
        (4, 7, 5),
        (2, 5, 25),
        (3, 5, 11),
        (1, 3, 29),
        (2, 3, 19),
        (0, 1, 30),
        (1, 1, 25),
        (-1, -1, 25),
        (0, -1, 30),
        (-2, -3, 19),
        (-1, -3, 29),
        (-3, -5, 11),
        (-2, -5, 25),
        (-4, -7, 5),
        (-3, -7, 19),
        (-5, -9, 1),
        (-4, -9, 11),
        (-5, -11, 5),
        (-6, -13, 1),
    ]);
    let k43 = khovanov(&w(4, 3)).map_err(|e| e.to_string())?;
    let k53 = khovanov(&w(5, 3)).map_err(|e| e.to_string())?;
    ensure(k43.entries == t1, || {
        format!("W(4,3) table differs: {:?}", k43.rows())
    })?;
    ensure(k53.entries == t2, || {
        format!("W(5,3) table differs: {:?}", k53.rows())
    })
}

fn criterion_3() -> Check {
    let cases: [(usize, usize, usize, f64); 6] = [
        (3, 35, 2, 0.971429),
        (3, 35, 7, 0.641677),
        (4, 15, 2, 0.961778),
        (5, 10, 2, 1.0),
        (5, 10, 3, 1.005),
        (6, 5, 2, 0.990769),
    ];
    let mut bad = Vec::new();
    for (nn, m, k, want) in cases {
        let spec = w(nn, m);
        let p = twist_numbers(&jones(&spec).unwrap()).unwrap();
        let f = twist_ratio(&spec, &p, k).unwrap().f;
        if (f - want).abs() > 5e-6 {
            bad.push(format!("f_{k}(W({nn},{m})) = {f}, expected {want}"));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))
}

fn order_of_magnitude(ours: Option<f64>, printed: f64) -> bool {
    ours.is_some_and(|v| v > 0.0 && (v / printed).log10().abs() < 1.0)
}

fn criterion_4() -> Check {
    let mut bad = Vec::new();
    let s = rank_stats(&khovanov(&w(3, 47)).unwrap()).unwrap();
    let half = BigRational::new(1.into(), 2.into());
    if s.mu != half {
        let gap = (&half - &s.mu).to_f64().unwrap();
        bad.push(format!(
            "W(3,47) mu is not exactly 1/2 (total rank {} is odd; 1/2 - mu = {gap:e})",
            s.total_rank
        ));
    }
    if (s.sigma - 6.46437).abs() > 1e-5 {
        bad.push(format!("W(3,47) sigma = {}", s.sigma));
    }
    if format_sig(&s.total_rank, 6) != "2.20703e19" {
        bad.push(format!("W(3,47) total = {}", s.total_rank));
    }
    if !(order_of_magnitude(s.l1_dev, 0.00747521) && order_of_magnitude(s.l2_dev, 0.00141888)) {
        bad.push(format!("W(3,47) deviations {:?} {:?}", s.l1_dev, s.l2_dev));
    }
    let s = rank_stats(&khovanov(&w(6, 5)).unwrap()).unwrap();
    if s.total_rank != BigUint::from(254403u32) {
        bad.push(format!("W(6,5) total = {}", s.total_rank));
    }
    let mu = s.mu.to_f64().unwrap();
    if (mu - 2.66802).abs() > 1e-5 {
        bad.push(format!("W(6,5) mu = {mu}"));
    }
    if (s.sigma - 2.99802).abs() > 1e-5 {
        bad.push(format!("W(6,5) sigma = {}", s.sigma));
    }
    if !(order_of_magnitude(s.l1_dev, 0.0264457) && order_of_magnitude(s.l2_dev, 0.00759375)) {
        bad.push(format!("W(6,5) deviations {:?} {:?}", s.l1_dev, s.l2_dev));
    }
    ensure(bad.is_empty(), || bad.join("; "))
}

fn part_a() -> Check {
    let q = MultiLaurent::var(Var::Q);
    let one = MultiLaurent::one();
    for k in -12i64..=12 {
        let lhs = &(&q * &pk_poly(k - 1)) + &(&(&q - &one) * &pk_poly(k));
        ensure(lhs == pk_poly(k + 1), || {
            format!("recurrence fails at k={k}")
        })?;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let rhs = &MultiLaurent::var_pow(Var::Q, k as i32) - &MultiLaurent::from_int(sign);
        ensure(&(&q + &one) * &pk_poly(k) == rhs, || {
            format!("closed form fails at k={k}")
        })?;
    }
    Ok(())
}

fn part_b() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut rw = common::Rewriter::default();
    let algs: Vec<HeckeAlgebra> = (1..=3).map(HeckeAlgebra::new).collect();
    for case in 0..300 {
        let n = rng.gen_range(1..=3usize);
        let len = rng.gen_range(0..=8usize);
        let letters: Vec<(u8, bool)> = (0..len)
            .map(|_| (rng.gen_range(1..=n as u8), rng.gen_bool(0.5)))
            .collect();
        let want = rw.normalize_signed(&letters);
        let word = BraidWord::new(
            n + 1,
            letters
                .iter()
                .map(|&(g, p)| (g as usize, if p { 1 } else { -1 })),
        )
        .unwrap();
        let got = rw.normalize_element(&braid_to_hecke(&word));
        ensure(got == want, || {
            format!("case {case}: braid_to_hecke disagrees on {letters:?}")
        })?;
        let alg = &algs[n - 1];
        let mut acc = HeckeElement::identity(n);
        for &(g, p) in letters.iter().rev() {
            let t = generator_power(n, g as usize, if p { 1 } else { -1 }).unwrap();
            acc = alg.mul_elements(&t, &acc).map_err(|e| e.to_string())?;
        }
        ensure(rw.normalize_element(&acc) == want, || {
            format!("case {case}: product chain disagrees on {letters:?}")
        })?;
    }
    Ok(())
}

fn part_c() -> Check {
    for nn in 2..=6 {
        let alg = HeckeAlgebra::new(nn - 1);
        let mut rec = WeavingRecursion::new(&alg, nn).unwrap();
        for m in 1..=8 {
            let wh = rec.advance_to(m);
            let t = wh.trace(&alg).map_err(|e| e.to_string())?;
            let (hi, lo) = trace_degree_bounds(&w(nn, m));
            ensure(t.degree_range() == Some((lo, hi)), || {
                format!("W({nn},{m}) degrees {:?}", t.degree_range())
            })?;
        }
    }
    Ok(())
}

fn part_d() -> Check {
    for nn in 2..=5 {
        let alg = HeckeAlgebra::new(nn - 1);
        for m in 1..=5 {
            let spec = w(nn, m);
            let fast = weaving_hecke(&alg, &spec).unwrap().element();
            ensure(fast == braid_to_hecke(&weaving_braid(&spec)), || {
                format!("W({nn},{m}) differs")
            })?;
        }
    }
    Ok(())
}

fn part_e() -> Check {
    for nn in 2..=6 {
        for m in 1..=5 {
            let spec = w(nn, m);
            let ct = ClosureTrace::weaving(&spec).unwrap();
            let v = jones_of(&ct).unwrap();
            let want = BigRational::from_integer((-2i64).pow(spec.components() as u32 - 1).into());
            ensure(v.at_one() == want, || {
                format!("V_W({nn},{m})(1) = {}", v.at_one())
            })?;
            if !spec.is_knot() {
                continue;
            }
            let delta = alexander_of(&ct).unwrap();
            ensure(delta.mirror() == delta, || {
                format!("Δ_W({nn},{m}) not symmetric")
            })?;
            ensure(
                delta.at_one() == BigRational::from_integer(1.into()),
                || format!("Δ_W({nn},{m})(1) ≠ 1"),
            )?;
            let h = homfly_of(&ct).unwrap();
            let z = &x(-1) - &x(1);
            ensure(
                &h.specialize(&MultiLaurent::one(), &z).unwrap() == delta.poly(),
                || format!("HOMFLY→Alexander fails for W({nn},{m})"),
            )?;
            ensure(&h.specialize(&x(-2), &z).unwrap() == v.poly(), || {
                format!("HOMFLY→Jones fails for W({nn},{m})")
            })?;
            let kh = khovanov_of(&spec, &ct).unwrap();
            ensure(kh.on_support_lines(), || {
                format!("Kh W({nn},{m}) off the support lines")
            })?;
            let back = khovanov_from_jones(&v, spec.signature()).unwrap();
            ensure(back == kh.poly(), || {
                format!("Kh W({nn},{m}) does not round-trip through Jones")
            })?;
        }
    }
    Ok(())
}

fn part_f() -> Check {
    for nn in 2..=4 {
        for m in 1..=4 {
            let word = weaving_braid(&w(nn, m));
            let v = jones_of_braid(&word).unwrap();
            ensure(
                jones_of_braid(&word.mirror()).unwrap() == v.mirror(),
                || format!("mirror fails for W({nn},{m})"),
            )?;
        }
    }
    Ok(())
}

fn criterion_5() -> Check {
    let parts: [Named; 6] = [
        ("a", part_a),
        ("b", part_b),
        ("c", part_c),
        ("d", part_d),
        ("e", part_e),
        ("f", part_f),
    ];
    for (name, f) in parts {
        f().map_err(|e| format!("({name}) {e}"))?;
    }
    Ok(())
}

fn criterion_6() -> Check {
    let one = HalfLaurent::from_t_coeffs(0, &[1]);
    let unknot_kh = &MultiLaurent::var_pow(Var::KhQ, -1) + &MultiLaurent::var(Var::KhQ);
    let sigma1 = BraidWord::parse("1", Some(2)).unwrap();
    for (name, ct) in [
        ("braid σ1", ClosureTrace::braid(&sigma1).unwrap()),
        ("W(3,1)", ClosureTrace::weaving(&w(3, 1)).unwrap()),
    ] {
        ensure(
            SkeinValue::new(&ct).value() == Some(FactoredRational::one()),
            || format!("{name}: skein value ≠ 1"),
        )?;
        ensure(jones_of(&ct).unwrap() == one, || {
            format!("{name}: Jones ≠ 1")
        })?;
        ensure(alexander_of(&ct).unwrap() == one, || {
            format!("{name}: Alexander ≠ 1")
        })?;
        ensure(
            homfly_of(&ct).unwrap() == HomflyPoly::from_triples(&[(0, 0, 1)]),
            || format!("{name}: HOMFLY ≠ 1"),
        )?;
        ensure(
            khovanov_from_jones(&jones_of(&ct).unwrap(), 0).unwrap() == unknot_kh,
            || format!("{name}: Kh"),
        )?;
    }
    let kh = khovanov(&w(3, 1)).unwrap();
    ensure(kh.poly() == unknot_kh, || {
        format!("W(3,1) Khovanov table {:?}", kh.rows())
    })
}

fn main() {
    let criteria: [Named; 6] = [
        (
            "golden Alexander / Jones / HOMFLY-PT polynomials",
            criterion_1,
        ),
        ("Khovanov rank tables W(4,3), W(5,3)", criterion_2),
        ("twist ratios f_k(m)", criterion_3),
        ("normalized rank statistics", criterion_4),
        ("property suite (a)-(f)", criterion_5),
        ("unknot sanity", criterion_6),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.2}s): {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
