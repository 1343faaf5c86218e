//! The ten acceptance criteria. `acceptance_suite` prints one PASS/FAIL line per criterion.
//!
//! Criterion 9 in its literal form (agreement through order `k` for `α` of depth `k`) does not
//! hold; the suite reports it as FAIL without failing the run, `criterion_9_literal` asserts it
//! (ignored), and `stanford_through_order_k_minus_one` checks the statement that does hold.

use std::time::Instant;

use braidinv::algebra::{BigRational, HalfLaurent, RingMatrix};
use braidinv::braid::{pure_lcs_element, random_markov_walk, seeded_rng, BraidLetter, BraidWord};
use braidinv::cli::run;
use braidinv::fixtures::{all_fixtures, fixture, knot_fixtures};
use braidinv::rmatrix::{builtin_jones, normalized_trace_invariant, represent, EnhancedRMatrix};
use braidinv::skein::{evaluate, SkeinEvaluator, SkeinSystem};
use braidinv::vassiliev::{crossing_change_consistent, expand_invariant, v2, vanishing_order};
use rand::{Rng, RngCore};

type Outcome = Result<String, String>;
type Criterion = (usize, &'static str, fn() -> Outcome);

const KNOWN_UNATTAINABLE: &[usize] = &[9];

fn w(s: &str) -> BraidWord {
    s.parse().unwrap()
}

fn random_word(rng: &mut impl Rng, n: usize, len: usize, singular: usize) -> BraidWord {
    let mut letters: Vec<BraidLetter> = (0..len)
        .map(|_| {
            let i = rng.random_range(1..n);
            if rng.random_bool(0.5) { BraidLetter::pos(i) } else { BraidLetter::neg(i) }
        })
        .collect();
    for _ in 0..singular {
        let i = rng.random_range(1..n);
        let at = rng.random_range(0..=letters.len());
        letters.insert(at, BraidLetter::sing(i));
    }
    BraidWord::new(n, letters).unwrap()
}

fn all_words(n: usize, max_len: usize) -> Vec<BraidWord> {
    let alphabet: Vec<i64> = (1..n as i64).flat_map(|i| [i, -i]).collect();
    let mut out = vec![BraidWord::identity(n).unwrap()];
    let mut layer = vec![Vec::<i64>::new()];
    for _ in 0..max_len {
        if alphabet.is_empty() {
            break;
        }
        layer = layer
            .iter()
            .flat_map(|p| alphabet.iter().map(move |&a| [p.as_slice(), &[a]].concat()))
            .collect();
        out.extend(layer.iter().map(|l| BraidWord::from_signed(n, l).unwrap()));
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let word = fixture("6_1").ok_or("missing 6_1 fixture")?;
    let expect: HalfLaurent = "q^-4 - q^-3 + q^-2 - 2*q^-1 + 2 - q + q^2".parse().unwrap();
    let skein = evaluate(&word, &SkeinSystem::jones()).map_err(|e| e.to_string())?;
    let rmat = normalized_trace_invariant(&word, &builtin_jones().unwrap()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed().as_secs_f64();
    if skein != expect || rmat != expect {
        return Err(format!("skein {skein}, rmatrix {rmat}"));
    }
    if elapsed >= 1.0 {
        return Err(format!("took {elapsed:.2}s"));
    }
    Ok(format!("{expect} from both engines in {elapsed:.3}s"))
}

fn criterion_2() -> Outcome {
    let expect = ["0", "1", "1", "3", "4", "9"];
    let mut times = Vec::new();
    for (i, e) in (1..=6).zip(expect) {
        let start = Instant::now();
        let out = run(["braidinv", "dims", "--order", &i.to_string()]);
        let t = start.elapsed().as_secs_f64();
        if out.code != 0 || out.stdout.trim() != e {
            return Err(format!("dims --order {i} gave `{}` (code {})", out.stdout.trim(), out.code));
        }
        let limit = if i <= 5 { 10.0 } else { 600.0 };
        if t >= limit {
            return Err(format!("order {i} took {t:.1}s"));
        }
        times.push(format!("{t:.2}s"));
    }
    Ok(format!("0 1 1 3 4 9 ({})", times.join(", ")))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let e = builtin_jones().unwrap();
    let mut jones = SkeinEvaluator::new(SkeinSystem::jones());
    let mut count = 0;
    for n in 1..=3 {
        for word in all_words(n, 6) {
            let a = jones.evaluate(&word).map_err(|x| x.to_string())?;
            let b = normalized_trace_invariant(&word, &e).map_err(|x| x.to_string())?;
            if a != b {
                return Err(format!("{word}: skein {a}, rmatrix {b}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} words, 0 mismatches, {:.1}s", start.elapsed().as_secs_f64()))
}

fn invariants(word: &BraidWord, e: &EnhancedRMatrix) -> Vec<HalfLaurent> {
    let mut out: Vec<HalfLaurent> = [SkeinSystem::jones(), SkeinSystem::alexander(), SkeinSystem::homfly(2)]
        .iter()
        .map(|s| evaluate(word, s).unwrap())
        .collect();
    out.push(normalized_trace_invariant(word, e).unwrap());
    out
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let e = builtin_jones().unwrap();
    let fixtures = all_fixtures();
    let fixtures = &fixtures[..20];
    let mut rng = seeded_rng(4);
    let mut walks = 0;
    for (name, word) in fixtures {
        let reference = invariants(word, &e);
        for _ in 0..10 {
            let walked = random_markov_walk(word, 12, rng.next_u64());
            if invariants(&walked, &e) != reference {
                return Err(format!("{name}: walk to {walked} changed an invariant"));
            }
            walks += 1;
        }
    }
    Ok(format!("{walks} walks over {} fixtures, {:.1}s", fixtures.len(), start.elapsed().as_secs_f64()))
}

fn criterion_5() -> Outcome {
    let mut rng = seeded_rng(5);
    let e = builtin_jones().unwrap();
    let mut systems = vec![SkeinSystem::alexander(), SkeinSystem::jones()];
    systems.extend((-2..=2).map(SkeinSystem::homfly));
    let mut pairs = 0;
    while pairs < 100 {
        let n = rng.random_range(2..=4);
        let len = rng.random_range(1..=7);
        let word = random_word(&mut rng, n, len, 0);
        let pos = rng.random_range(0..word.len());
        let plus = word.set_sign(pos, true).unwrap();
        let minus = word.set_sign(pos, false).unwrap();
        let zero = word.smooth(pos).unwrap();
        for sys in &systems {
            let v = |x: &BraidWord| evaluate(x, sys).unwrap();
            if !sys.relation_holds(&v(&plus), &v(&minus), &v(&zero)) {
                return Err(format!("{sys} at {word} position {pos}"));
            }
        }
        let t = |x: &BraidWord| normalized_trace_invariant(x, &e).unwrap();
        if !SkeinSystem::jones().relation_holds(&t(&plus), &t(&minus), &t(&zero)) {
            return Err(format!("trace invariant at {word} position {pos}"));
        }
        pairs += 1;
    }
    for (name, word) in all_fixtures() {
        if evaluate(&word, &SkeinSystem::homfly(1)).unwrap() != evaluate(&word, &SkeinSystem::jones()).unwrap() {
            return Err(format!("homfly:1 differs from jones on {name}"));
        }
        if evaluate(&word, &SkeinSystem::homfly(0)).unwrap() != evaluate(&word, &SkeinSystem::alexander()).unwrap() {
            return Err(format!("homfly:0 differs from alexander on {name}"));
        }
    }
    Ok(format!("{pairs} pairs x {} systems; homfly:1 = jones, homfly:0 = alexander on all fixtures", systems.len()))
}

fn criterion_6() -> Outcome {
    let e = builtin_jones().unwrap();
    let mut rng = seeded_rng(6);
    for k in 0..50 {
        let j = 1 + k % 4;
        let n = rng.random_range(2..=4);
        let len = rng.random_range(0..=5);
        let word = random_word(&mut rng, n, len, j);
        let t = vanishing_order(&word, &e, j + 1).map_err(|x| x.to_string())?;
        if t < j {
            return Err(format!("{word}: x^{t} coefficient nonzero with {j} double points"));
        }
    }
    for (name, word) in knot_fixtures() {
        let s = expand_invariant(&word, &e, 2).unwrap();
        if s.coeff(0) != BigRational::from_integer(1.into()) || s.coeff(1) != BigRational::from_integer(0.into()) {
            return Err(format!("{name}: u0={} u1={}", s.coeff(0), s.coeff(1)));
        }
    }
    Ok("50 singular words vanish below x^j; u0 = 1, u1 = 0 on knot fixtures".into())
}

fn criterion_7() -> Outcome {
    let e = builtin_jones().unwrap();
    let mut rng = seeded_rng(7);
    for _ in 0..50 {
        let n = rng.random_range(2..=4);
        let j = rng.random_range(1..=3);
        let len = rng.random_range(0..=5);
        let word = random_word(&mut rng, n, len, j);
        let positions = word.singular_positions();
        let pos = positions[rng.random_range(0..positions.len())];
        if !crossing_change_consistent(&word, pos, &e, 6).map_err(|x| x.to_string())? {
            return Err(format!("{word} at {pos}"));
        }
    }
    Ok("50 (word, position) pairs, exact through x^6".into())
}

fn criterion_8() -> Outcome {
    if v2(&w("n=1")).unwrap() != 0 || v2(&w("n=2 1 1 1")).unwrap() != 1 {
        return Err("unknot/trefoil values".into());
    }
    let e = builtin_jones().unwrap();
    let mut rng = seeded_rng(8);
    let mut ratio: Option<BigRational> = None;
    let mut used = 0;
    for (name, word) in knot_fixtures() {
        let v = v2(&word).unwrap();
        for _ in 0..5 {
            let walked = random_markov_walk(&word, 12, rng.next_u64());
            if v2(&walked).unwrap() != v {
                return Err(format!("{name}: v2 changed along a Markov walk to {walked}"));
            }
        }
        if v == 0 {
            continue;
        }
        let u2 = expand_invariant(&word, &e, 2).unwrap().coeff(2);
        let c = u2 / BigRational::from_integer(v.into());
        match &ratio {
            None => ratio = Some(c),
            Some(r) if *r != c => return Err(format!("{name}: u2/v2 = {c}, expected {r}")),
            _ => {}
        }
        used += 1;
    }
    if used < 5 {
        return Err(format!("only {used} fixtures with v2 != 0"));
    }
    Ok(format!("u2/v2 = {} on {used} knot fixtures", ratio.unwrap()))
}

/// `(k, seed, first i with u_i(K_β) != u_i(K_αβ))` over the criterion's grid, with β the trefoil in `B_3`.
fn stanford_grid() -> Vec<(usize, u64, Option<usize>)> {
    let e = builtin_jones().unwrap();
    let beta = w("n=3 1 1 1 2");
    let mut out = Vec::new();
    for k in [2, 3] {
        for seed in 0..5 {
            let alpha = pure_lcs_element(3, k, seed).unwrap();
            let a = expand_invariant(&beta, &e, k).unwrap();
            let b = expand_invariant(&alpha.concat(&beta).unwrap(), &e, k).unwrap();
            out.push((k, seed, (0..=k).find(|&i| a.coeff(i) != b.coeff(i))));
        }
    }
    out
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let bad: Vec<String> = stanford_grid()
        .into_iter()
        .filter_map(|(k, seed, first)| first.map(|i| format!("k={k} seed={seed} differs at u{i}")))
        .collect();
    if bad.is_empty() {
        Ok(format!("10 cases agree through order k, {:.1}s", start.elapsed().as_secs_f64()))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_10() -> Outcome {
    let e = builtin_jones().unwrap();
    let n: usize = 4;
    let rho = |s: &str| represent(&w(&format!("n={n} {s}")), &e).unwrap();
    let same = |a: &str, b: &str| -> Result<(), String> {
        if rho(a) == rho(b) { Ok(()) } else { Err(format!("`{a}` != `{b}`")) }
    };
    let mut checked = 0;
    for i in 1..n {
        for j in 1..n {
            let d = i.abs_diff(j);
            if d >= 2 {
                for (x, y) in [(format!("{i}"), format!("{j}")), (format!("{i}"), format!("t{j}")), (format!("t{i}"), format!("t{j}"))] {
                    same(&format!("{x} {y}"), &format!("{y} {x}"))?;
                    checked += 1;
                }
            }
            if d == 1 {
                same(&format!("{i} {j} {i}"), &format!("{j} {i} {j}"))?;
                same(&format!("{i} {j} t{i}"), &format!("t{j} {i} {j}"))?;
                checked += 2;
            }
        }
        same(&format!("{i} t{i}"), &format!("t{i} {i}"))?;
        checked += 1;
    }
    let identity = RingMatrix::identity(16);
    if rho("1 -1") != identity {
        return Err("sigma_1 sigma_1^-1 is not the identity".into());
    }
    Ok(format!("{checked} relation instances in B_4"))
}

#[test]
fn acceptance_suite() {
    let criteria: [Criterion; 10] = [
        (1, "Jones of 6_1 from both engines", criterion_1),
        (2, "weight-system dimension table", criterion_2),
        (3, "engine equivalence, n <= 3, length <= 6", criterion_3),
        (4, "Markov invariance fuzz", criterion_4),
        (5, "skein identities", criterion_5),
        (6, "vanishing order on singular words", criterion_6),
        (7, "crossing-change consistency", criterion_7),
        (8, "v2 and u2/v2", criterion_8),
        (9, "lower central series agreement through order k", criterion_9),
        (10, "singular monoid relations in B_4", criterion_10),
    ];
    let mut unexpected = Vec::new();
    for (k, name, f) in criteria {
        match f() {
            Ok(detail) => println!("criterion {k}: PASS  {name}: {detail}"),
            Err(detail) => {
                let note = if KNOWN_UNATTAINABLE.contains(&k) { " [known]" } else { "" };
                println!("criterion {k}: FAIL{note}  {name}: {detail}");
                if note.is_empty() {
                    unexpected.push(k);
                }
            }
        }
    }
    assert!(unexpected.is_empty(), "failing criteria: {unexpected:?}");
}

#[test]
#[ignore = "the literal statement is false at k = 2; see stanford_through_order_k_minus_one"]
fn criterion_9_literal() {
    criterion_9().unwrap();
}

#[test]
fn stanford_through_order_k_minus_one() {
    for (k, seed, first) in stanford_grid() {
        if let Some(i) = first {
            assert!(i >= k, "k={k} seed={seed}: u{i} differs");
        }
    }
}

#[test]
#[ignore = "long-running"]
fn dimension_order_seven() {
    let out = run(["braidinv", "dims", "--order", "7"]);
    assert_eq!(out.stdout.trim(), "14");
}
