//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any criterion fails.
//!
//! All comparisons are exact equality of exact values: the tolerance is zero
//! everywhere and is pinned in `TOLERANCE` below.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use stirling_kit::domains::{Counted, OpCounts};
use stirling_kit::egf::{
    bernoulli_row_formula, exp_minus_one_series, exp_rz_series, hypergeometric_1f1, theorem3_apply,
    theorem4_apply,
};
use stirling_kit::hankel::{
    binomial_hankel_invariance_check, corollary_check, determinant, determinant_by_elimination,
    determinant_division_free, theorem5_check, Determinant, SquareMatrix,
};
use stirling_kit::sequences::{self, NAMES};
use stirling_kit::stirling::{r_stirling2, stirling1, stirling2, verify_tig_identity};
use stirling_kit::transform::{
    binomial_transform, build_from_final, build_from_initial, entry_via_theorem2,
    generalized_identity_sides, inverse_stirling_transform, stirling_transform,
};
use stirling_kit::{
    fixtures, with_values, BigInt, Module, Rational, RationalAlgebra, RationalPolynomial, Ring,
    SMatrix, Surd5, TruncatedEgf,
};

/// Allowed absolute difference between compared values. Everything is exact.
const TOLERANCE: u32 = 0;
const SEED: u64 = 0x5717_2024;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

fn rat(x: &BigInt) -> Rational {
    Rational::from_integer(x.clone())
}

fn rng_for(criterion: u64) -> StdRng {
    StdRng::seed_from_u64(SEED ^ criterion)
}

fn random_ints(rng: &mut StdRng, len: usize, bound: i64) -> Vec<BigInt> {
    (0..len)
        .map(|_| int(rng.random_range(-bound..=bound)))
        .collect()
}

fn random_rationals(rng: &mut StdRng, len: usize) -> Vec<Rational> {
    (0..len)
        .map(|_| {
            Rational::new(
                int(rng.random_range(-1000..=1000)),
                int(rng.random_range(1..=60)),
            )
        })
        .collect()
}

fn err(e: impl std::fmt::Debug) -> String {
    format!("{e:?}")
}

/// Initial sequence `a_m = bernoulli_row_formula(m)`, built without any
/// transform.
fn bernoulli_initial(len: usize) -> Vec<RationalPolynomial> {
    (0..len).map(bernoulli_row_formula).collect()
}

fn c1_matrix_reproduction() -> Outcome {
    for f in fixtures::ALL {
        let block = f.regenerate().map_err(err)?;
        ensure!(
            block.rows() == f.rows && block.cols() == f.cols,
            "{}: regenerated {}x{}, printed {}x{}",
            f.name,
            block.rows(),
            block.cols(),
            f.rows,
            f.cols
        );
        let expected = f.expected().map_err(err)?;
        for (n, row) in expected.iter().enumerate() {
            for (m, want) in row.iter().enumerate() {
                let got = block.get(n, m);
                ensure!(
                    got == want,
                    "{}: a[{n}][{m}] = {got}, printed {want}",
                    f.name
                );
            }
        }
        ensure!(
            f.matches().map_err(err)?,
            "{}: CSV rendering differs",
            f.name
        );
    }
    Ok(format!(
        "{} printed blocks, every entry equal and CSV byte-identical",
        fixtures::ALL.len()
    ))
}

fn ega_cases<T: Module>(name: &str, a: &[T], limit: usize) -> Result<usize, String> {
    let matrix = build_from_initial(a, limit, limit).map_err(err)?;
    let mut cases = 0;
    for n in 0..=limit {
        for m in 0..=limit {
            let (lhs, rhs) = generalized_identity_sides(a, n, m).map_err(err)?;
            ensure!(lhs == rhs, "{name}: n={n}, m={m}: {lhs} != {rhs}");
            ensure!(
                &lhs == matrix.get(n, m),
                "{name}: n={n}, m={m}: closed form {lhs} but recurrence gives {}",
                matrix.get(n, m)
            );
            cases += 1;
        }
    }
    Ok(cases)
}

fn c2_generalized_identity() -> Outcome {
    const LIMIT: usize = 12;
    let len = 2 * LIMIT + 1;
    let mut cases = 0;
    cases += ega_cases("ones", &sequences::ones(len), LIMIT)?;
    cases += ega_cases(
        "fibonacci_initial",
        &sequences::fibonacci_initial(len).map_err(err)?,
        LIMIT,
    )?;
    cases += ega_cases(
        "signed_derangements",
        &sequences::signed_derangements(len),
        LIMIT,
    )?;
    cases += ega_cases("R (final Catalan)", &sequences::r_sequence(len), LIMIT)?;
    cases += ega_cases(
        "R shifted (final Motzkin)",
        &sequences::r_sequence(len + 1)[1..],
        LIMIT,
    )?;

    let bern = bernoulli_initial(len);
    let finals = stirling_transform(&bern).map_err(err)?;
    ensure!(
        finals == sequences::bernoulli_polynomials(len),
        "Bernoulli: transform of the row formula is not B_n(x)"
    );
    cases += ega_cases("Bernoulli polynomials", &bern, LIMIT)?;
    Ok(format!(
        "{cases} (n, m) cases with 0 <= n, m <= {LIMIT} over 6 sequences"
    ))
}

fn c3_round_trip() -> Outcome {
    let mut rng = rng_for(3);
    for i in 0..100 {
        let a = random_ints(&mut rng, 20, 1_000_000_000);
        let there = stirling_transform(&a).map_err(err)?;
        ensure!(
            inverse_stirling_transform(&there).map_err(err)? == a,
            "integer case {i}"
        );
        let back = inverse_stirling_transform(&a).map_err(err)?;
        ensure!(
            stirling_transform(&back).map_err(err)? == a,
            "integer case {i}, reversed"
        );
    }
    for i in 0..20 {
        let a = random_rationals(&mut rng, 20);
        let there = stirling_transform(&a).map_err(err)?;
        ensure!(
            inverse_stirling_transform(&there).map_err(err)? == a,
            "rational case {i}"
        );
    }
    Ok("100 integer and 20 rational sequences of length 20".into())
}

fn generating_function_cases<T: RationalAlgebra>(
    name: &str,
    s: &SMatrix<T>,
    order: usize,
) -> Result<usize, String> {
    let mut cases = 0;
    for r in 0..=3 {
        let row_tail = TruncatedEgf::new(s.row(0)[r..=r + order].to_vec()).map_err(err)?;
        let column = theorem3_apply(&row_tail, r).map_err(err)?;
        ensure!(
            column.coeffs() == &s.column(r)[..=order],
            "{name}: column {r} differs from its generating function"
        );
        let column_tail = TruncatedEgf::new(s.column(0)[r..=r + order].to_vec()).map_err(err)?;
        let row = theorem4_apply(&column_tail).map_err(err)?;
        ensure!(
            row.coeffs() == &s.row(r)[..=order],
            "{name}: row {r} differs from its generating function"
        );
        cases += 2;
    }
    Ok(cases)
}

fn c4_generating_functions() -> Outcome {
    const ORDER: usize = 12;
    let size = ORDER + 3;
    let len = 2 * size + 1;
    let as_rational = |xs: Vec<BigInt>| -> Vec<Rational> { xs.iter().map(rat).collect() };
    let mut cases = 0;
    let initials: [(&str, Vec<BigInt>); 4] = [
        ("ones", sequences::ones(len)),
        (
            "fibonacci_initial",
            sequences::fibonacci_initial(len).map_err(err)?,
        ),
        ("signed_derangements", sequences::signed_derangements(len)),
        ("R shifted", sequences::r_sequence(len + 1).split_off(1)),
    ];
    for (name, a) in initials {
        let s = build_from_initial(&as_rational(a), size, size).map_err(err)?;
        cases += generating_function_cases(name, &s, ORDER)?;
    }
    let s = build_from_final(&as_rational(sequences::catalan(len)), size, size).map_err(err)?;
    cases += generating_function_cases("catalan final", &s, ORDER)?;
    let s = build_from_final(
        &sequences::fibonacci(len)
            .iter()
            .map(rat)
            .collect::<Vec<_>>(),
        size,
        size,
    )
    .map_err(err)?;
    cases += generating_function_cases("fibonacci final", &s, ORDER)?;
    let s = build_from_final(&sequences::bernoulli_polynomials(len), size, size).map_err(err)?;
    cases += generating_function_cases("Bernoulli final", &s, ORDER)?;
    Ok(format!(
        "{cases} rows/columns (r <= 3) over 7 matrices, order {ORDER}"
    ))
}

fn theorem5_cases<T: Determinant>(
    name: &str,
    final_seq: &[T],
    n_max: usize,
) -> Result<usize, String> {
    for n in 0..=n_max {
        let (lhs, rhs) = theorem5_check(final_seq, n).map_err(err)?;
        ensure!(
            lhs == rhs,
            "{name}: n={n}: block determinant {lhs}, Hankel {rhs}"
        );
    }
    Ok(n_max + 1)
}

fn c5_hankel() -> Outcome {
    const N: usize = 8;
    const COROLLARY_N: usize = 6;
    const BINOMIAL_N: usize = 4;
    let len = 2 * N + 1;
    let mut cases = 0;
    for name in NAMES {
        let record = sequences::generate(name, len).map_err(err)?;
        cases += with_values!(record.values(), xs => theorem5_cases(name, xs, N))?;
    }
    let phi = sequences::golden_ratio();
    let golden: Vec<Surd5> = (0..len as u32)
        .map(|k| phi.pow(k).plus(&Surd5::from_int(k as i64)))
        .collect();
    cases += theorem5_cases("golden powers plus n", &golden, N)?;
    let mut rng = rng_for(5);
    for i in 0..200 {
        let a = random_ints(&mut rng, len, 50);
        cases += theorem5_cases(&format!("random {i}"), &a, N)?;
    }

    let clen = 2 * COROLLARY_N + 1;
    let mut corollary = 0;
    let corollary_inputs: [(&str, Vec<BigInt>); 4] = [
        ("ones", sequences::ones(clen)),
        (
            "fibonacci_initial",
            sequences::fibonacci_initial(clen).map_err(err)?,
        ),
        ("signed_derangements", sequences::signed_derangements(clen)),
        ("R", sequences::r_sequence(clen)),
    ];
    for (name, a) in &corollary_inputs {
        for n in 0..=COROLLARY_N {
            ensure!(
                corollary_check(a, n).map_err(err)?,
                "corollary: {name}, n={n}"
            );
            corollary += 1;
        }
    }
    let bern = bernoulli_initial(clen);
    for n in 0..=COROLLARY_N {
        ensure!(
            corollary_check(&bern, n).map_err(err)?,
            "corollary: Bernoulli, n={n}"
        );
        corollary += 1;
    }
    for i in 0..50 {
        let a = random_ints(&mut rng, clen, 20);
        for n in 0..=COROLLARY_N {
            ensure!(
                corollary_check(&a, n).map_err(err)?,
                "corollary: random {i}, n={n}"
            );
            corollary += 1;
        }
    }

    for i in 0..200 {
        let a = random_ints(&mut rng, 2 * BINOMIAL_N + 1, 100);
        for n in 0..=BINOMIAL_N {
            ensure!(
                binomial_hankel_invariance_check(&a, n).map_err(err)?,
                "binomial invariance: random {i}, n_max={n}"
            );
        }
    }
    Ok(format!(
        "{cases} determinant pairs (n <= {N}), {corollary} corollary cases (n <= {COROLLARY_N}), 200 binomial-invariance sequences (n_max <= {BINOMIAL_N})"
    ))
}

fn c6_r_stirling() -> Outcome {
    const R: usize = 6;
    const N: usize = 20;
    for r in 0..=R {
        for n in 0..=N {
            for k in -1..=(N as i64 + 1) {
                let v = r_stirling2(r, n, k);
                if n < r {
                    ensure!(v == int(0), "{{{n} {k}}}_{r} should vanish below row r");
                } else if n == r {
                    ensure!(
                        v == int(i64::from(k == r as i64)),
                        "{{{r} {k}}}_{r} should be a delta"
                    );
                } else if k >= 0 {
                    let expected = r_stirling2(r, n - 1, k) * k + r_stirling2(r, n - 1, k - 1);
                    ensure!(v == expected, "recurrence fails at r={r}, n={n}, k={k}");
                } else {
                    ensure!(v == int(0), "negative k must vanish");
                }
            }
            if n >= r {
                let power = BigInt::from(r).pow((n - r) as u32);
                ensure!(
                    r_stirling2(r, n, r as i64) == power,
                    "{{{n} {r}}}_{r} != {r}^{}",
                    n - r
                );
            }
        }
    }
    for r in 1..=R {
        ensure!(
            verify_tig_identity(r, 14, 14).map_err(err)?,
            "shift identity fails for r={r}"
        );
    }
    const ORDER: usize = 14;
    for r in 0..=4 {
        let mut power = TruncatedEgf::constant(Rational::from_int(1), ORDER);
        for k in 0..=6usize {
            if k > 0 {
                power = power.multiply(&exp_minus_one_series(ORDER)).map_err(err)?;
            }
            let kfact: BigInt = (1..=k).map(BigInt::from).product();
            let series = exp_rz_series(r as i64, ORDER)
                .multiply(&power)
                .map_err(err)?;
            for n in 0..=ORDER {
                let coeff = series.coeff(n) / rat(&kfact);
                let expected = rat(&r_stirling2(r, n + r, (k + r) as i64));
                ensure!(
                    coeff == expected,
                    "EGF coefficient mismatch at r={r}, k={k}, n={n}"
                );
            }
        }
    }
    Ok(format!("boundaries and powers for r <= {R}, n <= {N}; shift identity r <= {R}; EGF to order {ORDER}"))
}

fn s1(n: usize, k: usize) -> BigInt {
    stirling1(n, k as i64)
}

fn s2(n: usize, k: usize) -> BigInt {
    stirling2(n, k as i64)
}

fn c7_catalan_motzkin() -> Outcome {
    let c = sequences::catalan(40);
    let m = sequences::motzkin(40);
    let r = sequences::r_sequence(40);
    for n in 0..=15 {
        let lhs: BigInt = (0..=n).map(|k| s1(n, k) * &m[k]).sum();
        let rhs: BigInt = (0..=n + 1).map(|k| s1(n + 1, k) * &c[k]).sum();
        ensure!(
            lhs == rhs,
            "first-kind Catalan/Motzkin relation fails at n={n}"
        );
    }
    for n in 0..=12 {
        let cn: BigInt = int(i64::from(n == 0))
            + (1..=n)
                .flat_map(|k| (0..k).map(move |i| (k, i)))
                .map(|(k, i)| s2(n, k) * s1(k - 1, i) * &m[i])
                .sum::<BigInt>();
        ensure!(cn == c[n], "Catalan from Motzkin fails at n={n}");
        let mn: BigInt = (0..=n)
            .flat_map(|k| (0..=k + 1).map(move |i| (k, i)))
            .map(|(k, i)| s2(n, k) * s1(k + 1, i) * &c[i])
            .sum();
        ensure!(mn == m[n], "Motzkin from Catalan fails at n={n}");
    }
    for n in 0..=10 {
        for mm in 0..=10 {
            let rs = |k: usize| r_stirling2(mm, n + mm, (k + mm) as i64);
            let lhs5: BigInt = (0..=mm).map(|k| s1(mm, k) * &c[n + k]).sum();
            let rhs5: BigInt = (0..=n).map(|k| rs(k) * &r[mm + k]).sum();
            ensure!(lhs5 == rhs5, "Catalan/R identity fails at n={n}, m={mm}");
            let lhs6: BigInt = (0..=mm).map(|k| s1(mm, k) * &m[n + k]).sum();
            let rhs6: BigInt = (0..=n).map(|k| rs(k) * &r[mm + k + 1]).sum();
            ensure!(lhs6 == rhs6, "Motzkin/R identity fails at n={n}, m={mm}");
        }
    }
    let half = Rational::new(int(1), int(2));
    let two = Rational::from_int(2);
    let f = hypergeometric_1f1(&half, &two, 4, 14).map_err(err)?;
    let expected: Vec<Rational> = c[..=14].iter().map(rat).collect();
    ensure!(
        f.coeffs() == expected.as_slice(),
        "1F1(1/2; 2; 4z) is not the Catalan EGF"
    );
    let via_log = theorem4_apply(&f).map_err(err)?;
    let r_expected: Vec<Rational> = r[..=14].iter().map(rat).collect();
    ensure!(
        via_log.coeffs() == r_expected.as_slice(),
        "1F1(1/2; 2; 4 ln(1+z)) is not the R EGF"
    );

    let t = fixtures::R_SHIFTED_INITIAL.expected().map_err(err)?;
    for (n, row) in t.iter().enumerate() {
        ensure!(
            row[0] == m[n],
            "printed T column 0 differs from Motzkin at n={n}"
        );
    }
    let shifted = binomial_transform(&m[..16]);
    for n in 0..=15 {
        ensure!(
            shifted[n] == c[n + 1],
            "C(n+1) != binomial transform of Motzkin at n={n}"
        );
    }
    Ok("n <= 15, n <= 12 and n, m <= 10 ranges; 1F1 through n = 14; Motzkin column".into())
}

fn c8_bernoulli() -> Outcome {
    let finals = sequences::bernoulli_polynomials(40);
    for m in 0..=10 {
        let from_matrix = entry_via_theorem2(&finals, 0, m).map_err(err)?;
        ensure!(
            bernoulli_row_formula(m) == from_matrix,
            "row formula differs at m={m}"
        );
    }
    for n in 0..=8 {
        for m in 0..=8 {
            let lhs = (0..=m).fold(RationalPolynomial::zero(), |acc, k| {
                acc.plus(&finals[n + k].scale_int(&s1(m, k)))
            });
            let rhs = (0..=n).fold(RationalPolynomial::zero(), |acc, k| {
                let w = r_stirling2(m, n + m, (k + m) as i64);
                acc.plus(&bernoulli_row_formula(m + k).scale_int(&w))
            });
            ensure!(lhs == rhs, "Bernoulli identity fails at n={n}, m={m}");
        }
    }
    Ok("row formula m <= 10; polynomial identity n, m <= 8".into())
}

/// Restricted growth strings enumerate set partitions of `0..n`.
fn for_each_partition(n: usize, mut f: impl FnMut(&[usize], usize)) {
    fn go(rgs: &mut Vec<usize>, blocks: usize, n: usize, f: &mut dyn FnMut(&[usize], usize)) {
        if rgs.len() == n {
            f(rgs, blocks);
            return;
        }
        for b in 0..=blocks {
            rgs.push(b);
            go(rgs, blocks.max(b + 1), n, f);
            rgs.pop();
        }
    }
    go(&mut Vec::with_capacity(n), 0, n, &mut f);
}

/// Signed counts of permutations of `0..n` by number of cycles (Heap's algorithm).
fn signed_cycle_counts(n: usize) -> Vec<i64> {
    let mut counts = vec![0i64; n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    let mut record = |p: &[usize]| {
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if !seen[start] {
                cycles += 1;
                let mut i = start;
                while !seen[i] {
                    seen[i] = true;
                    i = p[i];
                }
            }
        }
        counts[cycles] += if (n - cycles).is_multiple_of(2) {
            1
        } else {
            -1
        };
    };
    record(&perm);
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            record(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    counts
}

fn cofactor<T: Ring>(a: &[Vec<T>]) -> T {
    if a.len() == 1 {
        return a[0][0].clone();
    }
    (0..a.len()).fold(T::zero(), |acc, j| {
        let minor: Vec<Vec<T>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = a[0][j].times(&cofactor(&minor));
        if j % 2 == 0 {
            acc.plus(&term)
        } else {
            acc.minus(&term)
        }
    })
}

fn c9_oracles() -> Outcome {
    const N: usize = 10;
    for n in 0..=N {
        let mut by_r = vec![vec![0i64; n + 1]; n + 1];
        for_each_partition(n, |rgs, blocks| {
            // The first r elements sit in distinct blocks iff rgs[i] == i for i < r.
            let distinct_prefix = rgs.iter().enumerate().take_while(|&(i, &b)| i == b).count();
            for row in by_r.iter_mut().take(distinct_prefix + 1) {
                row[blocks] += 1;
            }
        });
        for r in 0..=n {
            for k in 0..=n {
                let got = r_stirling2(r, n, k as i64);
                ensure!(
                    got == int(by_r[r][k]),
                    "{{{n} {k}}}_{r}: table {got}, enumeration {}",
                    by_r[r][k]
                );
            }
        }
        let cycles = signed_cycle_counts(n);
        for k in 0..=n {
            ensure!(
                stirling1(n, k as i64) == int(cycles[k]),
                "s({n}, {k}): enumeration {}",
                cycles[k]
            );
        }
    }

    let mut rng = rng_for(9);
    for i in 0..1000 {
        let dim = 1 + i % 4;
        let bound = if i % 5 == 0 { 1_000_000 } else { 9 };
        let entries: Vec<Vec<BigInt>> = (0..dim)
            .map(|_| random_ints(&mut rng, dim, bound))
            .collect();
        let expected = cofactor(&entries);
        let m = SquareMatrix::new(entries.clone()).map_err(err)?;
        ensure!(
            determinant(&m) == expected,
            "fraction-free determinant, matrix {i}: {m}"
        );
        ensure!(
            determinant_division_free(&m) == expected,
            "division-free determinant, matrix {i}: {m}"
        );
        let q = SquareMatrix::new(
            entries
                .iter()
                .map(|r| r.iter().map(rat).collect())
                .collect(),
        )
        .map_err(err)?;
        ensure!(
            determinant_by_elimination(&q) == rat(&expected),
            "rational elimination, matrix {i}: {m}"
        );
    }
    Ok(format!(
        "partition and permutation enumeration n <= {N}; 1000 matrices of dimension <= 4"
    ))
}

fn c10_no_multiplication() -> Outcome {
    let a: Vec<Counted<BigInt>> = sequences::fibonacci_initial(25)
        .map_err(err)?
        .into_iter()
        .map(Counted)
        .collect();
    OpCounts::reset();
    let b = stirling_transform(&a).map_err(err)?;
    let back = inverse_stirling_transform(&b).map_err(err)?;
    build_from_initial(&a, 12, 12).map_err(err)?;
    build_from_final(&b, 12, 12).map_err(err)?;
    let counts = OpCounts::snapshot();
    ensure!(back == a, "instrumented round trip failed");
    ensure!(
        b.iter().map(|x| x.0.clone()).collect::<Vec<_>>() == sequences::fibonacci(25),
        "instrumented transform gave wrong values"
    );
    ensure!(counts.additions > 0, "no additions were recorded");
    ensure!(
        counts.multiplications == 0,
        "{} multiplications recorded",
        counts.multiplications
    );
    Ok(format!(
        "{} additions, {} scalings, 0 multiplications",
        counts.additions, counts.scalings
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("matrix reproduction", c1_matrix_reproduction),
        ("generalized transform identity", c2_generalized_identity),
        ("transform round trip", c3_round_trip),
        ("row/column generating functions", c4_generating_functions),
        ("Hankel determinant equality", c5_hankel),
        ("r-Stirling suite", c6_r_stirling),
        ("Catalan-Motzkin suite", c7_catalan_motzkin),
        ("Bernoulli suite", c8_bernoulli),
        ("oracle equivalence", c9_oracles),
        ("no multiplication in transforms", c10_no_multiplication),
    ];
    println!("acceptance: exact comparisons, tolerance {TOLERANCE}, seed {SEED:#x}");
    let mut failures = 0;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
