//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::HashSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use revcodes::dna::{
    check_constraints, is_dna_m_quasi_reciprocal, reversible_complement_dna_code,
    reversible_dna_code, Base, DnaBasis, DnaWord,
};
use revcodes::field::{Felt, Field, FieldRef};
use revcodes::golden;
use revcodes::wordops::{check_variant_preconditions, Codeword, SetVariant};
use revcodes::LinearCode;

fn criterion(n: usize, name: &str, body: impl FnOnce() -> Result<String, String>) {
    match body() {
        Ok(detail) => println!("criterion {n}: PASS - {name}: {detail}"),
        Err(e) => {
            println!("criterion {n}: FAIL - {name}: {e}");
            panic!("criterion {n} ({name}) failed: {e}");
        }
    }
}

fn section_ok(id: &str) -> Result<String, String> {
    let report = golden::run_section(id).map_err(|e| e.to_string())?;
    let failing: Vec<String> = report
        .facts
        .iter()
        .filter(|f| !f.pass)
        .map(|f| format!("{} (expected {}, got {})", f.id, f.expected, f.actual))
        .collect();
    if failing.is_empty() {
        Ok(format!("{} facts", report.facts.len()))
    } else {
        Err(failing.join("; "))
    }
}

#[test]
fn criterion_1_worked_constructions() {
    criterion(
        1,
        "[9,4,6] MDS and [9,5,4] almost-MDS reversible codes",
        || {
            let start = Instant::now();
            let detail = section_ok("3.5")?;
            let secs = start.elapsed().as_secs_f64();
            if secs > 120.0 {
                return Err(format!("runtime {secs:.1}s exceeds 2 min"));
            }
            Ok(format!("{detail} in {secs:.1}s"))
        },
    );
}

#[test]
fn criterion_2_pinned_table_rows() {
    criterion(
        2,
        "quaternary and GF(64) table rows with pinned generators",
        || {
            let start = Instant::now();
            let report = golden::run_section("table1").map_err(|e| e.to_string())?;
            let pinned: Vec<_> = report
                .facts
                .iter()
                .filter(|f| f.id.contains("[q=4]") || f.id.contains("[q=64]"))
                .collect();
            let failing: Vec<String> = pinned
                .iter()
                .filter(|f| !f.pass)
                .map(|f| format!("{} (expected {}, got {})", f.id, f.expected, f.actual))
                .collect();
            if !failing.is_empty() {
                return Err(failing.join("; "));
            }
            let secs = start.elapsed().as_secs_f64();
            if secs > 60.0 {
                return Err(format!("runtime {secs:.1}s exceeds 1 min"));
            }
            Ok(format!("{} facts over 5 rows in {secs:.1}s", pinned.len()))
        },
    );
}

#[test]
fn criterion_3_searched_table_rows() {
    criterion(
        3,
        "remaining table rows via primitive-element search",
        || {
            let report = golden::run_section("table1").map_err(|e| e.to_string())?;
            let searched: Vec<_> = report
                .facts
                .iter()
                .filter(|f| !f.id.contains("[q=4]") && !f.id.contains("[q=64]"))
                .collect();
            let failing: Vec<String> = searched
                .iter()
                .filter(|f| !f.pass)
                .map(|f| format!("{} (expected {}, got {})", f.id, f.expected, f.actual))
                .collect();
            if !failing.is_empty() {
                return Err(failing.join("; "));
            }
            Ok(format!("{} facts over 6 rows", searched.len()))
        },
    );
}

#[test]
fn criterion_4_field_identities() {
    criterion(4, "generator power identities in GF(64)", || {
        let f = Field::gf(64).unwrap();
        let g = Felt::generator(&f);
        let sum = g
            .pow(2)
            .unwrap()
            .checked_add(&g)
            .unwrap()
            .checked_add(&Felt::one(&f))
            .unwrap();
        if g.pow(20).unwrap() != sum {
            return Err("w^20 != 1 + w + w^2".into());
        }
        if g.pow(21).unwrap() != Felt::new(&f, 2) {
            return Err("w^21 is not the quaternary generator".into());
        }
        let detail = section_ok("4.2")?;
        Ok(format!("both identities exact; {detail}"))
    });
}

#[test]
fn criterion_5_reversible_dna_example() {
    criterion(
        5,
        "four published DNA strings and their reversal pairing",
        || section_ok("4.12"),
    );
}

#[test]
fn criterion_6_reversible_complement_example() {
    criterion(
        6,
        "three published strings with reversal and complement pairing",
        || section_ok("4.14"),
    );
}

#[test]
fn criterion_7_reference_word_table() {
    criterion(7, "64-word [11,3,7] DNA table", || {
        let start = Instant::now();
        let detail = section_ok("table2")?;
        let secs = start.elapsed().as_secs_f64();
        if secs > 1.0 {
            return Err(format!("runtime {secs:.2}s exceeds 1 s"));
        }
        Ok(format!("{detail} in {secs:.2}s"))
    });
}

// ---------------------------------------------------------------------------
// Criterion 8: randomized property suites, >= 200 trials each plus exhaustive
// small cases, zero tolerated failures.
// ---------------------------------------------------------------------------

fn random_quasi_reciprocal(rng: &mut ChaCha8Rng, field: &FieldRef, n: usize, m: usize) -> Codeword {
    let q = field.order();
    let mut entries = vec![0u16; n];
    for i in 0..m.div_ceil(2) {
        let v = rng.gen_range(0..q) as u16;
        entries[i] = v;
        entries[m - 1 - i] = v;
    }
    for j in 0..(n - m).div_ceil(2) {
        let v = rng.gen_range(0..q) as u16;
        entries[m + j] = v;
        entries[n - 1 - j] = v;
    }
    Codeword::from_felts(
        &entries
            .iter()
            .map(|&e| Felt::new(field, e))
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

fn random_base(rng: &mut ChaCha8Rng) -> Base {
    match rng.gen_range(0..4) {
        0 => Base::A,
        1 => Base::T,
        2 => Base::C,
        _ => Base::G,
    }
}

fn random_block(rng: &mut ChaCha8Rng, k: usize) -> Vec<Base> {
    (0..k).map(|_| random_base(rng)).collect()
}

fn palindromic_block(rng: &mut ChaCha8Rng, k: usize) -> Vec<Base> {
    let mut b = vec![Base::A; k];
    for i in 0..k.div_ceil(2) {
        let s = random_base(rng);
        b[i] = s;
        b[k - 1 - i] = s;
    }
    b
}

/// A random m-quasi-reversible n-tuple of k-bases.
fn random_dna_quasi_reciprocal(rng: &mut ChaCha8Rng, k: usize, n: usize, m: usize) -> DnaWord {
    let mut blocks: Vec<Vec<Base>> = vec![Vec::new(); n];
    for i in 0..m / 2 {
        let b = random_block(rng, k);
        blocks[m - 1 - i] = b.iter().rev().copied().collect();
        blocks[i] = b;
    }
    if m % 2 == 1 {
        blocks[m / 2] = palindromic_block(rng, k);
    }
    let span = n - m;
    for j in 0..span / 2 {
        let b = random_block(rng, k);
        blocks[m + n - 1 - (m + j)] = b.iter().rev().copied().collect();
        blocks[m + j] = b;
    }
    if span % 2 == 1 {
        blocks[m + span / 2] = palindromic_block(rng, k);
    }
    DnaWord::new(blocks.concat())
}

#[test]
fn criterion_8a_shift_reverse_identity() {
    criterion(
        8,
        "shift-reverse identity on random quasi-reciprocal words",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(81);
            let mut trials = 0;
            for q in [4usize, 9, 64] {
                let field = Field::gf(q).unwrap();
                for _ in 0..100 {
                    let n = rng.gen_range(2..=16);
                    let m = rng.gen_range(0..n);
                    let c = random_quasi_reciprocal(&mut rng, &field, n, m);
                    assert!(c.is_m_quasi_reciprocal(m).unwrap());
                    let i = rng.gen_range(-40i64..=40);
                    if c.cyclic_shift(i).reverse() != c.cyclic_shift(-i - m as i64) {
                        return Err(format!("failed at q={q} n={n} m={m} i={i}"));
                    }
                    trials += 1;
                }
            }
            // exhaustive small cases over GF(2)
            let f2 = Field::gf(2).unwrap();
            let mut exhaustive = 0;
            for n in 1..=5usize {
                for bits in 0..(1u32 << n) {
                    let entries: Vec<Felt> = (0..n)
                        .map(|i| Felt::new(&f2, ((bits >> i) & 1) as u16))
                        .collect();
                    let c = Codeword::from_felts(&entries).unwrap();
                    for m in 0..n {
                        if !c.is_m_quasi_reciprocal(m).unwrap() {
                            continue;
                        }
                        for i in -6i64..=6 {
                            if c.cyclic_shift(i).reverse() != c.cyclic_shift(-i - m as i64) {
                                return Err(format!("exhaustive failure n={n} m={m} i={i}"));
                            }
                        }
                        exhaustive += 1;
                    }
                }
            }
            Ok(format!(
                "{trials} random trials, {exhaustive} exhaustive cases"
            ))
        },
    );
}

#[test]
fn criterion_8b_eta_rotation_laws() {
    criterion(8, "eta is GF(4)-linear with eta^k = identity", || {
        // exhaustive for k <= 2
        for k in 1..=2usize {
            let field = Field::gf4_tower(k).unwrap();
            let basis = DnaBasis::new(k, &field).unwrap();
            let q = field.order() as u16;
            for a in 0..q {
                let fa = Felt::new(&field, a);
                if basis.eta_pow(&fa, k) != fa {
                    return Err(format!("eta^{k} not identity at {fa} (k={k})"));
                }
                for b in 0..q {
                    let fb = Felt::new(&field, b);
                    for lam in 0..4u16 {
                        let l = Felt::new(&field, lam);
                        let lhs = basis.eta(&l.checked_mul(&fa).unwrap().checked_add(&fb).unwrap());
                        let rhs = l
                            .checked_mul(&basis.eta(&fa))
                            .unwrap()
                            .checked_add(&basis.eta(&fb))
                            .unwrap();
                        if lhs != rhs {
                            return Err(format!("linearity broke at k={k} a={a} b={b} lam={lam}"));
                        }
                    }
                }
            }
        }
        // randomized for k = 3
        let field = Field::gf(64).unwrap();
        let basis = DnaBasis::new(3, &field).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(82);
        for _ in 0..300 {
            let a = Felt::new(&field, rng.gen_range(0..64) as u16);
            let b = Felt::new(&field, rng.gen_range(0..64) as u16);
            let l = Felt::new(&field, rng.gen_range(0..4) as u16);
            if basis.eta_pow(&a, 3) != a {
                return Err(format!("eta^3 not identity at {a}"));
            }
            let lhs = basis.eta(&l.checked_mul(&a).unwrap().checked_add(&b).unwrap());
            let rhs = l
                .checked_mul(&basis.eta(&a))
                .unwrap()
                .checked_add(&basis.eta(&b))
                .unwrap();
            if lhs != rhs {
                return Err(format!("linearity broke at a={a} b={b} lam={l}"));
            }
        }
        Ok("exhaustive k<=2 plus 300 random trials at k=3".into())
    });
}

#[test]
fn criterion_8c_reversal_map_identity() {
    criterion(8, "coordinate reversal matches k-base reversal", || {
        for k in 1..=2usize {
            let field = Field::gf4_tower(k).unwrap();
            let basis = DnaBasis::new(k, &field).unwrap();
            for z in 0..field.order() as u16 {
                let fz = Felt::new(&field, z);
                let word =
                    basis.zeta_bar_inv(&Codeword::from_felts(std::slice::from_ref(&fz)).unwrap());
                let img = basis.zeta_bar(&word.reverse()).unwrap().get(0);
                if img != basis.phi(&fz) {
                    return Err(format!("k={k} z={z}"));
                }
            }
        }
        let field = Field::gf(64).unwrap();
        let basis = DnaBasis::new(3, &field).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(83);
        for _ in 0..1000 {
            let z = Felt::new(&field, rng.gen_range(0..64) as u16);
            let word = basis.zeta_bar_inv(&Codeword::from_felts(std::slice::from_ref(&z)).unwrap());
            let img = basis.zeta_bar(&word.reverse()).unwrap().get(0);
            if img != basis.phi(&z) {
                return Err(format!("k=3 z={z}"));
            }
        }
        Ok("exhaustive k<=2 plus 1000 random trials at k=3".into())
    });
}

#[test]
fn criterion_8d_rotation_shift_reversal_identity() {
    criterion(
        8,
        "rotation/shift reversal identity on random tuples",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(84);
            let mut trials = 0;
            for _ in 0..220 {
                let k = rng.gen_range(1..=3usize);
                let n = rng.gen_range(2..=9usize);
                let m = rng.gen_range(0..n);
                let field = Field::gf4_tower(k).unwrap();
                let basis = DnaBasis::new(k, &field).unwrap();
                let word = random_dna_quasi_reciprocal(&mut rng, k, n, m);
                assert!(is_dna_m_quasi_reciprocal(&word, k, m).unwrap());
                let c = basis.zeta_bar(&word).unwrap();
                for i in 0..k {
                    for j in 0..n {
                        let lhs = basis
                            .zeta_bar_inv(&basis.eta_pow_word(&c.cyclic_shift(j as i64), i))
                            .reverse();
                        let rhs = basis.zeta_bar_inv(
                            &basis.eta_pow_word(&c.cyclic_shift(-(m as i64) - j as i64), k - i),
                        );
                        if lhs != rhs {
                            return Err(format!("k={k} n={n} m={m} i={i} j={j}"));
                        }
                    }
                }
                trials += 1;
            }
            Ok(format!("{trials} random tuples, all (i, j) pairs each"))
        },
    );
}

#[test]
fn criterion_8e_complement_shifts_by_one() {
    criterion(8, "complementing a k-base adds one to its image", || {
        for k in 1..=2usize {
            let field = Field::gf4_tower(k).unwrap();
            let basis = DnaBasis::new(k, &field).unwrap();
            let one = Felt::one(&field);
            for z in 0..field.order() as u16 {
                let fz = Felt::new(&field, z);
                let word =
                    basis.zeta_bar_inv(&Codeword::from_felts(std::slice::from_ref(&fz)).unwrap());
                let img = basis.zeta_bar(&word.complement()).unwrap().get(0);
                if img != fz.checked_add(&one).unwrap() {
                    return Err(format!("k={k} z={z}"));
                }
            }
        }
        let field = Field::gf(64).unwrap();
        let basis = DnaBasis::new(3, &field).unwrap();
        let one = Felt::one(&field);
        let mut rng = ChaCha8Rng::seed_from_u64(85);
        for _ in 0..300 {
            let blocks = DnaWord::new(random_block(&mut rng, 3));
            let z = basis.zeta_bar(&blocks).unwrap().get(0);
            let img = basis.zeta_bar(&blocks.complement()).unwrap().get(0);
            if img != z.checked_add(&one).unwrap() {
                return Err(format!("beta={blocks}"));
            }
        }
        Ok("exhaustive k<=2 plus 300 random trials at k=3".into())
    });
}

fn random_variant(rng: &mut ChaCha8Rng, n: usize, m: usize) -> SetVariant {
    let all = [
        SetVariant::S,
        SetVariant::E,
        SetVariant::E1,
        SetVariant::E2,
        SetVariant::E3,
    ];
    let ok: Vec<SetVariant> = all
        .into_iter()
        .filter(|v| check_variant_preconditions(*v, n, m).is_ok())
        .collect();
    ok[rng.gen_range(0..ok.len())]
}

#[test]
fn criterion_8f_reversal_closure_of_map_codes() {
    criterion(8, "random map-codes are closed under DNA reversal", || {
        let mut rng = ChaCha8Rng::seed_from_u64(86);
        let mut enumerated = 0;
        for trial in 0..220 {
            let k = rng.gen_range(1..=3usize);
            let n = rng.gen_range(2..=9usize);
            let m = rng.gen_range(0..n);
            let t = rng.gen_range(0..=1usize);
            let variant = random_variant(&mut rng, n, m);
            let field = Field::gf4_tower(k).unwrap();
            let basis = DnaBasis::new(k, &field).unwrap();
            let word = random_dna_quasi_reciprocal(&mut rng, k, n, m);
            let c = basis.zeta_bar(&word).unwrap();
            let code = reversible_dna_code(&c, m, t, variant, &basis)
                .map_err(|e| format!("trial {trial}: {e}"))?;
            if !code.is_dna_reversible() {
                return Err(format!(
                    "basis closure failed: k={k} n={n} m={m} t={t} {variant}"
                ));
            }
            if code.size() <= 1 << 16 {
                let words: HashSet<DnaWord> =
                    code.dna_words(1 << 16).unwrap().into_iter().collect();
                if !words.iter().all(|w| words.contains(&w.reverse())) {
                    return Err(format!(
                        "set closure failed: k={k} n={n} m={m} t={t} {variant}"
                    ));
                }
                enumerated += 1;
            }
        }
        Ok(format!(
            "220 trials, {enumerated} with full set enumeration"
        ))
    });
}

#[test]
fn criterion_8g_complement_closure_of_map_codes() {
    criterion(
        8,
        "random complement map-codes are closed under reversal and complement",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(87);
            let mut enumerated = 0;
            for trial in 0..220 {
                let k = rng.gen_range(1..=3usize);
                let n = rng.gen_range(2..=9usize);
                let m = rng.gen_range(0..n);
                let t = rng.gen_range(0..=1usize);
                let variant = random_variant(&mut rng, n, m);
                let field = Field::gf4_tower(k).unwrap();
                let basis = DnaBasis::new(k, &field).unwrap();
                let word = random_dna_quasi_reciprocal(&mut rng, k, n, m);
                let c = basis.zeta_bar(&word).unwrap();
                let code = reversible_complement_dna_code(&c, m, t, variant, &basis)
                    .map_err(|e| format!("trial {trial}: {e}"))?;
                if !code.is_dna_reversible() || !code.is_complement_closed() {
                    return Err(format!("closure failed: k={k} n={n} m={m} t={t} {variant}"));
                }
                if code.size() <= 1 << 16 {
                    let words: HashSet<DnaWord> =
                        code.dna_words(1 << 16).unwrap().into_iter().collect();
                    let ok = words
                        .iter()
                        .all(|w| words.contains(&w.reverse()) && words.contains(&w.complement()));
                    if !ok {
                        return Err(format!(
                            "set closure failed: k={k} n={n} m={m} t={t} {variant}"
                        ));
                    }
                    enumerated += 1;
                }
            }
            Ok(format!(
                "220 trials, {enumerated} with full set enumeration"
            ))
        },
    );
}

/// Independent oracle: minimum weight over all q^k messages via the public
/// scale/add API.
fn full_enumeration_weight(code: &LinearCode) -> u32 {
    let f = code.field();
    let q = f.order();
    let basis = code.basis();
    let k = basis.len();
    let mut best = u32::MAX;
    let mut msg = vec![0usize; k];
    loop {
        let mut i = 0;
        while i < k {
            msg[i] += 1;
            if msg[i] < q {
                break;
            }
            msg[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
        let mut acc = Codeword::zero(f, code.len());
        for (digit, row) in msg.iter().zip(&basis) {
            acc = acc
                .add(&row.scale(&Felt::new(f, *digit as u16)).unwrap())
                .unwrap();
        }
        best = best.min(acc.weight() as u32);
    }
    best
}

#[test]
fn criterion_8h_distance_against_oracle() {
    criterion(
        8,
        "minimum distance equals the full-enumeration oracle",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(88);
            let mut checked = 0;
            while checked < 210 {
                let q = [2usize, 3, 4, 5, 8, 9][rng.gen_range(0..6)];
                let field = Field::gf(q).unwrap();
                let n = rng.gen_range(3..=9);
                let kmax = (1..=5)
                    .take_while(|&k| (q as u64).pow(k as u32) <= 4096)
                    .last()
                    .unwrap();
                let gens: Vec<Codeword> = (0..rng.gen_range(1..=kmax))
                    .map(|_| {
                        Codeword::from_felts(
                            &(0..n)
                                .map(|_| Felt::new(&field, rng.gen_range(0..q) as u16))
                                .collect::<Vec<_>>(),
                        )
                        .unwrap()
                    })
                    .collect();
                let code = match LinearCode::span(&gens) {
                    Ok(c) if c.dimension() > 0 => c,
                    _ => continue,
                };
                let fast = code.min_distance().unwrap();
                let slow = full_enumeration_weight(&code);
                if fast != slow {
                    return Err(format!("q={q} n={n}: kernel {fast} vs oracle {slow}"));
                }
                checked += 1;
            }
            Ok(format!(
                "{checked} random codes, all with <= 4096 codewords"
            ))
        },
    );
}

#[test]
fn criterion_8i_constraint_checker_spot_checks() {
    criterion(
        8,
        "constraint checker agrees with direct distance tables",
        || {
            // palindrome violates the reverse constraint at x = y
            let report =
                check_constraints(&["ATTA".parse().unwrap()], 1).map_err(|e| e.to_string())?;
            if report.reverse.ok {
                return Err("palindrome self-violation missed".into());
            }
            // random sets: recompute all three distance constraints directly
            let mut rng = ChaCha8Rng::seed_from_u64(89);
            for _ in 0..200 {
                let n = rng.gen_range(2..=6);
                let count = rng.gen_range(1..=6);
                let words: Vec<DnaWord> = (0..count)
                    .map(|_| DnaWord::new(random_block(&mut rng, n)))
                    .collect();
                let d = rng.gen_range(1..=3);
                let report = check_constraints(&words, d).map_err(|e| e.to_string())?;
                let dist = |a: &DnaWord, b: &DnaWord| a.hamming_distance(b).unwrap();
                let hamming_ok = words.iter().enumerate().all(|(i, x)| {
                    words
                        .iter()
                        .enumerate()
                        .all(|(j, y)| i == j || dist(x, y) >= d)
                });
                let reverse_ok = words
                    .iter()
                    .all(|x| words.iter().all(|y| dist(&x.reverse(), y) >= d));
                let rc_ok = words
                    .iter()
                    .all(|x| words.iter().all(|y| dist(&x.reverse_complement(), y) >= d));
                let gc_ok = words.iter().all(|w| w.gc_count() == words[0].gc_count());
                if (
                    report.hamming.ok,
                    report.reverse.ok,
                    report.reverse_complement.ok,
                    report.fixed_gc.ok,
                ) != (hamming_ok, reverse_ok, rc_ok, gc_ok)
                {
                    return Err(format!("verdict mismatch on {words:?} d={d}"));
                }
            }
            Ok("200 random word sets cross-checked".into())
        },
    );
}
