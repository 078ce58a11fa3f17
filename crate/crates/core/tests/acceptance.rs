//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line to stderr.
//! Tolerances: exact integer or rational equality throughout; time budgets
//! are wall-clock limits on the criterion body.

mod common;

use std::collections::HashSet;
use std::io::Write;
use std::time::{Duration, Instant};

use bderange::analysis::sturm_real_rooted;
use bderange::bijections::{last_cycle_element_positive, phi, phi_inverse};
use bderange::exactpoly::series_div_one_minus_x_pow;
use bderange::families::{egf, engine, formulas, symmetric_decompose, Family};
use bderange::signedperm::SignedPermutation;
use bderange::simplicial::{decomposition_formula_sides, k_n};
use bderange::IntPoly;
use common::*;

type Outcome = Result<(), String>;

fn criterion(id: u32, name: &str, budget: Duration, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let mut outcome = body();
    let elapsed = start.elapsed();
    if outcome.is_ok() && elapsed > budget {
        outcome = Err(format!("took {elapsed:?}, budget {budget:?}"));
    }
    let line = match &outcome {
        Ok(()) => format!("acceptance {id:>2} PASS {name} ({:.2}s)\n", elapsed.as_secs_f64()),
        Err(e) => format!("acceptance {id:>2} FAIL {name}: {e}\n"),
    };
    let _ = std::io::stderr().write_all(line.as_bytes());
    if let Err(e) = outcome {
        panic!("criterion {id} failed: {e}");
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same(label: &str, want: &IntPoly, got: &IntPoly) -> Outcome {
    ensure(want == got, || format!("{label}: expected {want}, got {got}"))
}

fn lib<T>(r: bderange::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

const SECS: fn(u64) -> Duration = Duration::from_secs;

fn rows(t: &[&[i64]]) -> Vec<IntPoly> {
    t.iter().map(|r| IntPoly::from_slice(r)).collect()
}

#[test]
fn c01_golden_tables() {
    criterion(
        1,
        "golden tables f±, ξ± (n ≤ 7) and B± (n ≤ 6)",
        SECS(30),
        || {
            let f_plus = rows(&[
                &[1],
                &[0],
                &[0, 3],
                &[0, 7, 7],
                &[0, 15, 87, 15],
                &[0, 31, 551, 551, 31],
                &[0, 63, 2803, 8243, 2803, 63],
                &[0, 127, 12867, 84827, 84827, 12867, 127],
            ]);
            let f_minus = rows(&[
                &[0],
                &[0, 1],
                &[0, 1, 1],
                &[0, 1, 13, 1],
                &[0, 1, 57, 57, 1],
                &[0, 1, 201, 761, 201, 1],
                &[0, 1, 653, 6333, 6333, 653, 1],
                &[0, 1, 2045, 42757, 106037, 42757, 2045, 1],
            ]);
            let xi_plus = rows(&[
                &[1],
                &[0],
                &[0, 3],
                &[0, 7],
                &[0, 15, 57],
                &[0, 31, 458],
                &[0, 63, 2551, 2763],
                &[0, 127, 12232, 46861],
            ]);
            let xi_minus = rows(&[
                &[0],
                &[0, 1],
                &[0, 1],
                &[0, 1, 11],
                &[0, 1, 54],
                &[0, 1, 197, 361],
                &[0, 1, 648, 4379],
                &[0, 1, 2039, 34586, 24611],
            ]);
            let b_plus = rows(&[
                &[1],
                &[1],
                &[1, 3],
                &[1, 16, 7],
                &[1, 61, 115, 15],
                &[1, 206, 1056, 626, 31],
                &[1, 659, 7554, 11774, 2989, 63],
            ]);
            let b_minus = rows(&[
                &[0],
                &[0, 1],
                &[0, 3, 1],
                &[0, 7, 16, 1],
                &[0, 15, 115, 61, 1],
                &[0, 31, 626, 1056, 206, 1],
                &[0, 63, 2989, 11774, 7554, 659, 1],
            ]);
            for (fam, table) in [
                (Family::FPlus, f_plus),
                (Family::FMinus, f_minus),
                (Family::XiPlus, xi_plus),
                (Family::XiMinus, xi_minus),
                (Family::BPlus, b_plus),
                (Family::BMinus, b_minus),
            ] {
                let got = lib(engine().table(fam, table.len() - 1))?;
                for (want, r) in table.iter().zip(&got) {
                    same(&format!("{fam} n={}", r.n), want, &r.value)?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn c02_main_formula() {
    criterion(2, "main formula equals enumerated d^B_n for n ≤ 6", SECS(60), || {
        for n in 0..=6 {
            same(&format!("n={n}"), &ip(&bn_data(n).d_exc), &formulas::main_formula(n))?;
        }
        Ok(())
    });
}

#[test]
fn c03_decomposition() {
    criterion(
        3,
        "symmetric decomposition, ξ± ≥ 0 and the d^B_n peak for n ≤ 7",
        SECS(120),
        || {
            for n in 0..=7 {
                let data = bn_data(n);
                let db = ip(&data.d_exc);
                let (fp, fm) = lib(symmetric_decompose(&db, n))?;
                same(&format!("f+ n={n}"), &formulas::f_plus_multinomial(n), &fp)?;
                same(&format!("f- n={n}"), &formulas::f_minus_multinomial(n), &fm)?;
                same(&format!("f+ enumerated n={n}"), &ip(&data.f_plus), &fp)?;
                for fam in [Family::XiPlus, Family::XiMinus] {
                    let xi = lib(engine().value(fam, n))?;
                    ensure(xi.is_nonnegative(), || {
                        format!("{fam} n={n} has a negative coefficient: {xi}")
                    })?;
                    let base = if fam == Family::XiPlus { n } else { n + 1 };
                    let target = if fam == Family::XiPlus { &fp } else { &fm };
                    let rebuilt = xi.coeffs().iter().enumerate().fold(P::new(), |acc, (i, c)| {
                        let c: i128 = c.try_into().expect("fits");
                        add(&acc, &scale(&mul(&pow(&[0, 1], i), &pow(&[1, 1], base - 2 * i)), c))
                    });
                    same(&format!("{fam} rebuild n={n}"), target, &ip(&rebuilt))?;
                }
                let want = n.div_ceil(2);
                let pk = peaks(&data.d_exc).ok_or_else(|| format!("d^B n={n} not unimodal"))?;
                ensure(pk.contains(&want), || format!("d^B n={n} peaks {pk:?} miss {want}"))?;
            }
            Ok(())
        },
    );
}

#[test]
fn c04_local_h_of_kn() {
    criterion(
        4,
        "local h(K_n) = f+_n for n ≤ 5; alternating sums for n ≤ 8",
        SECS(120),
        || {
            let table: [&[i64]; 5] = [&[0], &[0, 3], &[0, 7, 7], &[0, 15, 87, 15], &[0, 31, 551, 551, 31]];
            for (i, want) in table.iter().enumerate() {
                let n = i + 1;
                let k = lib(k_n(n, false))?;
                same(
                    &format!("n={n}"),
                    &IntPoly::from_slice(want),
                    &lib(k.over_simplex.local_h())?,
                )?;
            }
            for n in 0..=8 {
                let fp = alternating(n, b_plus_series);
                let fm = alternating(n, b_minus_oracle);
                same(&format!("f+ n={n}"), &ip(&fp), &lib(engine().value(Family::FPlus, n))?)?;
                same(&format!("f- n={n}"), &ip(&fm), &lib(engine().value(Family::FMinus, n))?)?;
                if n <= 6 {
                    same(&format!("f+ enumerated n={n}"), &ip(&bn_data(n).f_plus), &ip(&fp))?;
                    same(&format!("f- enumerated n={n}"), &ip(&bn_data(n).f_minus), &ip(&fm))?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn c05_h_of_kn() {
    criterion(
        5,
        "h(K_n) = enumerated B+_n and 2^(n-1) n! facets for n ≤ 5",
        SECS(120),
        || {
            for n in 1..=5 {
                let k = lib(k_n(n, false))?;
                same(&format!("n={n}"), &ip(&bn_data(n).b_plus), &k.complex().h_polynomial())?;
                let facets = k.complex().facets().len() as i128;
                let want = (1i128 << (n - 1)) * factorial(n);
                ensure(facets == want, || format!("n={n}: {facets} facets, expected {want}"))?;
            }
            Ok(())
        },
    );
}

#[test]
fn c06_e2_and_reversal() {
    criterion(
        6,
        "E2 formula and reversal: n ≤ 10 by formula, n ≤ 6 by enumeration",
        SECS(60),
        || {
            for n in 0..=10 {
                let e2 = e_r(&mul(&pow(&[1, 1], n), &eulerian(n)), 2);
                let bp = lib(formulas::b_plus_e2(n, &ip(&eulerian(n))))?;
                same(&format!("E2 n={n}"), &ip(&e2), &bp)?;
                same(&format!("series n={n}"), &ip(&b_plus_series(n)), &bp)?;
                if n >= 1 {
                    let bm = lib(formulas::b_minus_reversal(n, &bp))?;
                    same(&format!("reversal n={n}"), &ip(&b_minus_oracle(n)), &bm)?;
                    same(&format!("reverse oracle n={n}"), &ip(&reverse(&e2, n)), &bm)?;
                    if n <= 6 {
                        same(&format!("B- enumerated n={n}"), &ip(&bn_data(n).b_minus), &bm)?;
                    }
                }
                if n <= 6 {
                    same(&format!("B+ enumerated n={n}"), &ip(&bn_data(n).b_plus), &bp)?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn c07_recurrences() {
    criterion(
        7,
        "B+ recurrence, f+ recurrence and coefficient recurrences for n ≤ 8",
        SECS(60),
        || {
            let bp = lib(formulas::b_plus_recurrence_table(8))?;
            let db: Vec<IntPoly> = (0..=8)
                .map(|n| lib(engine().value(Family::DB, n)))
                .collect::<Result<_, _>>()?;
            let fp = formulas::f_plus_recurrence_table(8, &db);
            let fp_oracle: Vec<P> = (0..=8).map(|n| alternating(n, b_plus_series)).collect();
            let fm_oracle: Vec<P> = (0..=8).map(|n| alternating(n, b_minus_oracle)).collect();
            let db_oracle: Vec<P> = (0..=8).map(|n| add(&fp_oracle[n], &fm_oracle[n])).collect();
            for n in 0..=8 {
                same(&format!("B+ n={n}"), &ip(&b_plus_series(n)), &bp[n])?;
                same(&format!("f+ n={n}"), &ip(&fp_oracle[n]), &fp[n])?;
                same(&format!("d^B n={n}"), &ip(&db_oracle[n]), &db[n])?;
            }
            let a = |f: &[P], n: usize, k: usize| f[n].get(k).copied().unwrap_or(0);
            for n in 2..=8 {
                for k in 1..=n + 1 {
                    let lib_ok = lib(engine().coeff_recurrence_check(n, k))?;
                    let rhs = |f: &[P], extra: i128| {
                        (2 * k as i128 - 1) * a(f, n - 1, k)
                            + 2 * (n as i128 - k as i128) * a(f, n - 1, k - 1)
                            + 2 * (n as i128 - 1) * a(f, n - 2, k - 1)
                            + extra
                    };
                    let plus = a(&fp_oracle, n, k) == rhs(&fp_oracle, a(&db_oracle, n - 1, k));
                    let minus = a(&fm_oracle, n, k) == rhs(&fm_oracle, a(&db_oracle, n - 1, k - 1));
                    ensure(lib_ok && plus && minus, || {
                        format!("n={n} k={k}: lib {lib_ok}, oracle {plus}/{minus}")
                    })?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn c08_egf() {
    criterion(
        8,
        "EGFs match enumeration through t^7; the series identity through x^10 for n ≤ 8",
        SECS(120),
        || {
            let order = 7;
            let series = [
                ("d", lib(egf::derangement_a(order))?),
                ("d^B", lib(egf::derangement_b(order))?),
                ("d^B composite", lib(egf::derangement_b_composite(order))?),
                ("f+", lib(egf::f_plus(order))?),
                ("f-", lib(egf::f_minus(order))?),
                ("B+", lib(egf::b_plus(order))?),
                ("B-", lib(egf::b_minus(order))?),
            ];
            for n in 0..=order {
                let data = bn_data(n);
                let want = [
                    derangement_a(n),
                    data.d_exc.clone(),
                    data.d_exc.clone(),
                    data.f_plus.clone(),
                    data.f_minus.clone(),
                    data.b_plus.clone(),
                    data.b_minus.clone(),
                ];
                for ((name, s), w) in series.iter().zip(&want) {
                    same(&format!("{name} n={n}"), &ip(w), &lib(egf::coefficient(s, n))?)?;
                }
            }
            for n in 1..=8 {
                let got = series_div_one_minus_x_pow(&ip(&b_plus_series(n)), n, 10);
                for i in 0..=10u32 {
                    let want = (2 * i as i128 + 1).pow(n as u32) - (2 * i as i128).pow(n as u32);
                    let c = got.coeff(i as usize);
                    ensure(c.is_integer() && c.to_integer() == want.into(), || {
                        format!("n={n} i={i}: {c} vs {want}")
                    })?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn c09_bijection() {
    criterion(9, "bijection exhaustive for n ≤ 6", SECS(120), || {
        for n in 0..=6 {
            let mut images = HashSet::new();
            let mut count = 0usize;
            for e in signed_perms(n) {
                let s = Signed1::new(&e);
                if !s.is_derangement() {
                    continue;
                }
                count += 1;
                let w = lib(SignedPermutation::new(e.clone()))?;
                let c = lib(phi(&w))?;
                ensure(lib(phi_inverse(&c))? == w, || format!("round trip fails at {w}"))?;
                images.insert(serde_json::to_string(&c).map_err(|e| e.to_string())?);
                let iexc_sigma0 = c
                    .sigma0()
                    .ground()
                    .iter()
                    .filter(|&&a| c.sigma0().apply(a).unwrap() < a)
                    .count();
                let blocks: usize = c
                    .blocks()
                    .iter()
                    .enumerate()
                    .map(|(i, b)| {
                        let v = b.values();
                        let des = v.windows(2).filter(|p| p[0] > p[1]).count();
                        let asc = v.windows(2).filter(|p| p[0] < p[1]).count();
                        if i % 2 == 0 {
                            asc
                        } else {
                            des
                        }
                    })
                    .sum();
                let rhs = iexc_sigma0 + blocks + c.k().div_ceil(2);
                ensure(s.iexc_b() == rhs, || {
                    format!("iexc identity fails at {w}: {} vs {rhs}", s.iexc_b())
                })?;
                if n >= 1 {
                    let last_positive = s.w_inv(s.min()) > 0;
                    ensure(last_cycle_element_positive(&w) == last_positive, || {
                        format!("cycle form end at {w}")
                    })?;
                    ensure((c.k() % 2 == 0) == last_positive, || format!("parity law fails at {w}"))?;
                }
            }
            ensure(images.len() == count, || {
                format!("n={n}: {} images for {count} derangements", images.len())
            })?;
            if n == 6 {
                ensure(count == 27_949, || format!("|D^B_6| = {count}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn c10_relative_local_h() {
    criterion(
        10,
        "relative local h of sd faces, decomposition, symmetry and nonnegativity for n ≤ 4",
        SECS(120),
        || {
            for n in 1..=4 {
                let k = lib(k_n(n, false))?;
                let mut faces = vec![bderange::simplicial::Face::empty()];
                faces.extend(k.sd.complex().faces().iter().cloned());
                for e in &faces {
                    let mut sets: Vec<Vec<u32>> = k.sd.complex().face_labels(e);
                    sets.sort_by_key(Vec::len);
                    let mut prev = 0usize;
                    let mut want = P::from([1]);
                    for s in &sets {
                        want = mul(&want, &eulerian(s.len() - prev));
                        prev = s.len();
                    }
                    want = mul(&want, &derangement_a(n - prev));
                    let got = lib(k.sd.relative_local_h(e))?;
                    same(&format!("n={n} chain {sets:?}"), &ip(&want), &got)?;
                    check_symmetric_nonnegative(&got, n - e.len(), &format!("sd n={n} {sets:?}"))?;
                }
                let mut kfaces = vec![bderange::simplicial::Face::empty()];
                kfaces.extend(k.complex().faces().iter().cloned());
                for e in &kfaces {
                    let got = lib(k.over_simplex.relative_local_h(e))?;
                    check_symmetric_nonnegative(&got, n - e.len(), &format!("K_{n} face {e:?}"))?;
                }
                let (l, r) = lib(decomposition_formula_sides(&k.sd, &k.over_sd))?;
                same(&format!("decomposition n={n}"), &r, &l)?;
            }
            Ok(())
        },
    );
}

fn check_symmetric_nonnegative(p: &IntPoly, m: usize, label: &str) -> Outcome {
    let v: P = p.coeffs().iter().map(|c| c.try_into().expect("fits")).collect();
    ensure(is_symmetric(&v, m), || {
        format!("{label}: {p} not symmetric about {m}/2")
    })?;
    ensure(v.iter().all(|&c| c >= 0), || {
        format!("{label}: {p} has a negative coefficient")
    })
}

#[test]
fn c11_real_roots() {
    criterion(
        11,
        "B± Sturm real-rooted for n ≤ 10; f± for 2 ≤ n ≤ 10 agree with the Hermite oracle",
        SECS(120),
        || {
            let mut evidence = Vec::new();
            for n in 1..=10 {
                for (name, p) in [("B+", b_plus_series(n)), ("B-", b_minus_oracle(n))] {
                    let p = ip(&p);
                    let sturm = lib(sturm_real_rooted(&p))?;
                    ensure(sturm, || format!("{name} n={n} not Sturm real-rooted"))?;
                    ensure(hermite_real_rooted(&p), || format!("{name} n={n}: Hermite disagrees"))?;
                }
            }
            for n in 2..=10 {
                for fam in [Family::FPlus, Family::FMinus] {
                    let p = lib(engine().value(fam, n))?;
                    let sturm = lib(sturm_real_rooted(&p))?;
                    let hermite = hermite_real_rooted(&p);
                    ensure(sturm == hermite, || {
                        format!("{fam} n={n}: Sturm {sturm}, Hermite {hermite}")
                    })?;
                    evidence.push(format!("{fam}_{n}={}", if sturm { "rr" } else { "not-rr" }));
                }
            }
            let _ = writeln!(std::io::stderr(), "acceptance 11 note: {}", evidence.join(" "));
            Ok(())
        },
    );
}

#[test]
fn c12_monotonicity() {
    criterion(
        12,
        "f+_n - d_n coefficientwise nonnegative for n ≤ 7",
        SECS(60),
        || {
            for n in 0..=7 {
                let diff = sub(&bn_data(n).f_plus, &derangement_a(n));
                ensure(diff.iter().all(|&c| c >= 0), || format!("n={n}: {diff:?}"))?;
            }
            Ok(())
        },
    );
}
