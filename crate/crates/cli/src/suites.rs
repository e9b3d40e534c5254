//! Identity check suites behind `check`.
//!
//! Every suite takes the same bound `max_n` and returns one row per identity
//! and input. Suites run on separate threads; rows are concatenated in the
//! fixed order of [`SUITES`], so reports are reproducible byte for byte.

use std::thread;

use stirling_kit::domains::{Module, RationalAlgebra, RationalPolynomial, Ring};
use stirling_kit::egf::{
    bernoulli_row_formula, exp_minus_one_series, exp_rz_series, hypergeometric_1f1,
    identity_series, log1p_series, theorem3_apply, theorem4_apply,
};
use stirling_kit::hankel::{
    binomial_hankel_invariance_check, corollary_check, hankel_transform, theorem5_check,
    Determinant,
};
use stirling_kit::sequences::{self, NAMES};
use stirling_kit::stirling::{r_stirling2, stirling1, stirling2, verify_tig_identity};
use stirling_kit::transform::{
    binomial_transform, build_from_final, build_from_initial, entry_via_theorem2,
    generalized_identity_sides, SMatrix,
};
use stirling_kit::{fixtures, with_values, BigInt, Rational, TruncatedEgf};

use crate::args::Suite;
use crate::report::{CheckReport, CheckRow};

/// Order in which suites run and report.
pub const SUITES: [Suite; 7] = [
    Suite::Ega,
    Suite::Egf,
    Suite::Hankel,
    Suite::Rstirling,
    Suite::CatalanMotzkin,
    Suite::Bernoulli,
    Suite::Matrices,
];

type Outcome = Result<(), String>;

fn lib<T>(r: stirling_kit::Result<T>) -> Result<T, String> {
    r.map_err(|e| format!("error: {e}"))
}

fn s1(n: usize, k: usize) -> BigInt {
    stirling1(n, k as i64)
}

fn s2(n: usize, k: usize) -> BigInt {
    stirling2(n, k as i64)
}

fn rs(r: usize, n: usize, k: usize) -> BigInt {
    r_stirling2(r, n, k as i64)
}

fn to_rational(xs: &[BigInt]) -> Vec<Rational> {
    xs.iter()
        .map(|x| Rational::from_integer(x.clone()))
        .collect()
}

pub fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::All => "all",
        Suite::Ega => "ega",
        Suite::Egf => "egf",
        Suite::Hankel => "hankel",
        Suite::Rstirling => "rstirling",
        Suite::CatalanMotzkin => "catalan-motzkin",
        Suite::Bernoulli => "bernoulli",
        Suite::Matrices => "matrices",
    }
}

fn run_one(suite: Suite, k: usize) -> Vec<CheckRow> {
    match suite {
        Suite::All => Vec::new(),
        Suite::Ega => ega(k),
        Suite::Egf => egf(k),
        Suite::Hankel => hankel(k),
        Suite::Rstirling => rstirling(k),
        Suite::CatalanMotzkin => catalan_motzkin(k),
        Suite::Bernoulli => bernoulli(k),
        Suite::Matrices => matrices(),
    }
}

/// Run the selected suites concurrently and collect the rows in suite order.
pub fn run_suites(selection: Suite, max_n: usize) -> CheckReport {
    let chosen: Vec<Suite> = SUITES
        .into_iter()
        .filter(|s| selection == Suite::All || selection == *s)
        .collect();
    let rows = thread::scope(|scope| {
        let handles: Vec<_> = chosen
            .iter()
            .map(|&s| (s, scope.spawn(move || run_one(s, max_n))))
            .collect();
        handles
            .into_iter()
            .flat_map(|(s, h)| {
                h.join().unwrap_or_else(|_| {
                    vec![CheckRow::new(
                        suite_name(s),
                        "suite",
                        "-",
                        Err("suite panicked".into()),
                    )]
                })
            })
            .collect()
    });
    CheckReport::new(rows)
}

fn ega_identity<T: Module>(a: &[T], k: usize) -> Outcome {
    for n in 0..=k {
        for m in 0..=k {
            let (lhs, rhs) = lib(generalized_identity_sides(a, n, m))?;
            if lhs != rhs {
                return Err(format!("n={n}, m={m}: {lhs} != {rhs}"));
            }
        }
    }
    Ok(())
}

fn ega(k: usize) -> Vec<CheckRow> {
    let len = 2 * k + 1;
    let range = format!("0 <= n, m <= {k}");
    let row = |name: &str, outcome| {
        CheckRow::new(
            "ega",
            format!("generalized transform identity, initial {name}"),
            &range,
            outcome,
        )
    };
    let mut rows = vec![
        row("ones", ega_identity(&sequences::ones(len), k)),
        row(
            "fibonacci_initial",
            lib(sequences::fibonacci_initial(len)).and_then(|a| ega_identity(&a, k)),
        ),
        row(
            "signed_derangements",
            ega_identity(&sequences::signed_derangements(len), k),
        ),
        row("r_sequence", ega_identity(&sequences::r_sequence(len), k)),
        row(
            "r_sequence shifted",
            ega_identity(&sequences::r_sequence(len + 1)[1..], k),
        ),
    ];
    let bern: Vec<RationalPolynomial> = (0..len).map(bernoulli_row_formula).collect();
    rows.push(row("Bernoulli row formula", ega_identity(&bern, k)));
    rows
}

fn generating_functions<T: RationalAlgebra>(
    s: &SMatrix<T>,
    order: usize,
    columns: bool,
) -> Outcome {
    for r in 0..=3 {
        let (got, want) = if columns {
            let tail = lib(TruncatedEgf::new(s.row(0)[r..=r + order].to_vec()))?;
            (lib(theorem3_apply(&tail, r))?, s.column(r))
        } else {
            let tail = lib(TruncatedEgf::new(s.column(0)[r..=r + order].to_vec()))?;
            (lib(theorem4_apply(&tail))?, s.row(r).to_vec())
        };
        if let Some(i) = (0..=order).find(|&i| got.coeff(i) != &want[i]) {
            let what = if columns { "column" } else { "row" };
            return Err(format!(
                "r={r}: {what} entry {i} is {}, series gives {}",
                want[i],
                got.coeff(i)
            ));
        }
    }
    Ok(())
}

fn egf(k: usize) -> Vec<CheckRow> {
    let size = k + 3;
    let len = 2 * size + 1;
    let mut rows = Vec::new();
    let range = format!("r <= 3, order {k}");
    let mut add = |name: &str, built: Result<SMatrix<_>, String>| {
        for columns in [true, false] {
            let identity = if columns {
                format!("column generating function e^(rz) A_r(e^z - 1), {name}")
            } else {
                format!("row generating function B_r(ln(1 + z)), {name}")
            };
            let outcome = built
                .clone()
                .and_then(|s| generating_functions(&s, k, columns));
            rows.push(CheckRow::new("egf", identity, &range, outcome));
        }
    };
    add(
        "initial ones",
        lib(build_from_initial(
            &to_rational(&sequences::ones(len)),
            size,
            size,
        )),
    );
    add(
        "initial fibonacci_initial",
        lib(sequences::fibonacci_initial(len))
            .and_then(|a| lib(build_from_initial(&to_rational(&a), size, size))),
    );
    add(
        "initial signed_derangements",
        lib(build_from_initial(
            &to_rational(&sequences::signed_derangements(len)),
            size,
            size,
        )),
    );
    add(
        "final catalan",
        lib(build_from_final(
            &to_rational(&sequences::catalan(len)),
            size,
            size,
        )),
    );
    let mut poly_rows = Vec::new();
    let bern = lib(build_from_final(
        &sequences::bernoulli_polynomials(len),
        size,
        size,
    ));
    for columns in [true, false] {
        let identity = if columns {
            "column generating function e^(rz) A_r(e^z - 1), final Bernoulli polynomials"
        } else {
            "row generating function B_r(ln(1 + z)), final Bernoulli polynomials"
        };
        let outcome = bern
            .clone()
            .and_then(|s| generating_functions(&s, k, columns));
        poly_rows.push(CheckRow::new("egf", identity, &range, outcome));
    }
    rows.extend(poly_rows);

    let order = k.max(1);
    let inverse = (|| {
        let e = exp_minus_one_series(order);
        let l = log1p_series(order);
        let z = identity_series(order);
        if lib(e.compose(&l))? != z {
            return Err("(e^z - 1) o ln(1 + z) != z".to_string());
        }
        if lib(l.compose(&e))? != z {
            return Err("ln(1 + z) o (e^z - 1) != z".to_string());
        }
        Ok(())
    })();
    rows.push(CheckRow::new(
        "egf",
        "e^z - 1 and ln(1 + z) are compositional inverses",
        format!("order {order}"),
        inverse,
    ));

    let rstigen = (|| {
        for r in 0..=4 {
            let mut power = TruncatedEgf::constant(Rational::one(), k);
            let mut kfact = BigInt::from(1);
            for j in 0..=6usize {
                if j > 0 {
                    power = lib(power.multiply(&exp_minus_one_series(k)))?;
                    kfact *= j;
                }
                let series = lib(exp_rz_series(r as i64, k).multiply(&power))?;
                for n in 0..=k {
                    let want = Rational::from_integer(rs(r, n + r, j + r));
                    let got = series.coeff(n) / Rational::from_integer(kfact.clone());
                    if got != want {
                        return Err(format!("r={r}, k={j}, n={n}: {got} != {want}"));
                    }
                }
            }
        }
        Ok(())
    })();
    rows.push(CheckRow::new(
        "egf",
        "r-Stirling EGF e^(rz) (e^z - 1)^k / k!",
        format!("r <= 4, k <= 6, n <= {k}"),
        rstigen,
    ));
    rows
}

fn theorem5_all<T: Determinant>(xs: &[T], k: usize) -> Outcome {
    for n in 0..=k {
        let (lhs, rhs) = lib(theorem5_check(xs, n))?;
        if lhs != rhs {
            return Err(format!("n={n}: block {lhs}, Hankel {rhs}"));
        }
    }
    Ok(())
}

fn hankel(k: usize) -> Vec<CheckRow> {
    let len = 2 * k + 1;
    let range = format!("n <= {k}");
    let mut rows = Vec::new();
    for name in NAMES {
        let outcome = lib(sequences::generate(name, len))
            .and_then(|rec| with_values!(rec.values(), xs => theorem5_all(xs, k)));
        rows.push(CheckRow::new(
            "hankel",
            format!("det of matrix block = Hankel det of final {name}"),
            &range,
            outcome,
        ));
    }
    let corollary = |a: Vec<BigInt>| -> Outcome {
        for n in 0..=k {
            if !lib(corollary_check(&a, n))? {
                return Err(format!("n={n}"));
            }
        }
        Ok(())
    };
    for (name, a) in [
        ("ones", Ok(sequences::ones(len))),
        (
            "signed_derangements",
            Ok(sequences::signed_derangements(len)),
        ),
        ("fibonacci_initial", lib(sequences::fibonacci_initial(len))),
    ] {
        rows.push(CheckRow::new(
            "hankel",
            format!("Hankel det of transform = r-Stirling block det, {name}"),
            &range,
            a.and_then(corollary),
        ));
    }
    for (name, a) in [
        ("catalan", sequences::catalan(len)),
        ("motzkin", sequences::motzkin(len)),
        ("bell", sequences::bell(len)),
    ] {
        let outcome = lib(binomial_hankel_invariance_check(&a, k)).and_then(|ok| {
            if ok {
                Ok(())
            } else {
                Err("transforms differ".into())
            }
        });
        rows.push(CheckRow::new(
            "hankel",
            format!("Hankel transform invariant under binomial transform, {name}"),
            format!("n_max = {k}"),
            outcome,
        ));
    }
    let catalan = lib(hankel_transform(&sequences::catalan(len), k)).and_then(|h| {
        match h.iter().position(|d| d != &BigInt::from(1)) {
            Some(n) => Err(format!("n={n}: {}", h[n])),
            None => Ok(()),
        }
    });
    rows.push(CheckRow::new(
        "hankel",
        "Catalan Hankel transform is all ones",
        &range,
        catalan,
    ));
    rows
}

fn rstirling(k: usize) -> Vec<CheckRow> {
    let n_max = k + 6;
    let boundaries = (|| {
        for r in 0..=6 {
            for n in 0..=n_max {
                for j in 0..=n_max {
                    let v = rs(r, n, j);
                    let expected = if n < r {
                        BigInt::from(0)
                    } else if n == r {
                        BigInt::from(u8::from(j == r))
                    } else {
                        rs(r, n - 1, j) * j
                            + if j > 0 {
                                rs(r, n - 1, j - 1)
                            } else {
                                BigInt::from(0)
                            }
                    };
                    if v != expected {
                        return Err(format!("r={r}, n={n}, k={j}"));
                    }
                }
            }
        }
        Ok(())
    })();
    let powers = (|| {
        for r in 0..=6 {
            for n in r..=n_max {
                if rs(r, n, r) != BigInt::from(r).pow((n - r) as u32) {
                    return Err(format!("r={r}, n={n}"));
                }
            }
        }
        Ok(())
    })();
    let shift = (|| {
        for r in 1..=6 {
            if !lib(verify_tig_identity(r, k, k))? {
                return Err(format!("r={r}"));
            }
        }
        Ok(())
    })();
    let orthogonal = (|| {
        for n in 0..=k {
            for m in 0..=k {
                let total: BigInt = (0..=n).map(|j| s1(n, j) * s2(j, m)).sum();
                if total != BigInt::from(u8::from(n == m)) {
                    return Err(format!("n={n}, m={m}"));
                }
            }
        }
        Ok(())
    })();
    vec![
        CheckRow::new(
            "rstirling",
            "r-Stirling recurrence and boundary values",
            format!("r <= 6, n <= {n_max}"),
            boundaries,
        ),
        CheckRow::new(
            "rstirling",
            "{n r}_r = r^(n-r)",
            format!("r <= 6, n <= {n_max}"),
            powers,
        ),
        CheckRow::new(
            "rstirling",
            "shift identity between r and r-1",
            format!("1 <= r <= 6, n, k <= {k}"),
            shift,
        ),
        CheckRow::new(
            "rstirling",
            "first and second kind are inverse",
            format!("n, m <= {k}"),
            orthogonal,
        ),
    ]
}

fn catalan_motzkin(k: usize) -> Vec<CheckRow> {
    let big = 2 * k + 3;
    let c = sequences::catalan(big);
    let m = sequences::motzkin(big);
    let r = sequences::r_sequence(big);
    let first_kind = (0..=k)
        .find(|&n| {
            let lhs: BigInt = (0..=n).map(|j| s1(n, j) * &m[j]).sum();
            let rhs: BigInt = (0..=n + 1).map(|j| s1(n + 1, j) * &c[j]).sum();
            lhs != rhs
        })
        .map_or(Ok(()), |n| Err(format!("n={n}")));
    let mixed = (0..=k)
        .find(|&n| {
            let cn: BigInt = BigInt::from(u8::from(n == 0))
                + (1..=n)
                    .flat_map(|j| (0..j).map(move |i| (j, i)))
                    .map(|(j, i)| s2(n, j) * s1(j - 1, i) * &m[i])
                    .sum::<BigInt>();
            let mn: BigInt = (0..=n)
                .flat_map(|j| (0..=j + 1).map(move |i| (j, i)))
                .map(|(j, i)| s2(n, j) * s1(j + 1, i) * &c[i])
                .sum();
            cn != c[n] || mn != m[n]
        })
        .map_or(Ok(()), |n| Err(format!("n={n}")));
    let pairs = || (0..=k).flat_map(|n| (0..=k).map(move |mm| (n, mm)));
    let catalan_r = pairs()
        .find(|&(n, mm)| {
            let lhs: BigInt = (0..=mm).map(|j| s1(mm, j) * &c[n + j]).sum();
            let rhs: BigInt = (0..=n).map(|j| rs(mm, n + mm, j + mm) * &r[mm + j]).sum();
            lhs != rhs
        })
        .map_or(Ok(()), |(n, mm)| Err(format!("n={n}, m={mm}")));
    let motzkin_r = pairs()
        .find(|&(n, mm)| {
            let lhs: BigInt = (0..=mm).map(|j| s1(mm, j) * &m[n + j]).sum();
            let rhs: BigInt = (0..=n)
                .map(|j| rs(mm, n + mm, j + mm) * &r[mm + j + 1])
                .sum();
            lhs != rhs
        })
        .map_or(Ok(()), |(n, mm)| Err(format!("n={n}, m={mm}")));
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let two = Rational::from_integer(BigInt::from(2));
    let hyper = lib(hypergeometric_1f1(&half, &two, 4, k));
    let catalan_egf = hyper.clone().and_then(|f| {
        match (0..=k).find(|&n| f.coeff(n) != &Rational::from_integer(c[n].clone())) {
            Some(n) => Err(format!("n={n}")),
            None => Ok(()),
        }
    });
    let r_egf = hyper.and_then(|f| lib(theorem4_apply(&f))).and_then(|g| {
        match (0..=k).find(|&n| g.coeff(n) != &Rational::from_integer(r[n].clone())) {
            Some(n) => Err(format!("n={n}")),
            None => Ok(()),
        }
    });
    let column = lib(build_from_initial(&r[1..], k, 0)).and_then(|t| {
        match (0..=k).find(|&n| t.get(n, 0) != &m[n]) {
            Some(n) => Err(format!("n={n}")),
            None => Ok(()),
        }
    });
    let shifted = binomial_transform(&m[..=k]);
    let binomial = (0..=k)
        .find(|&n| shifted[n] != c[n + 1])
        .map_or(Ok(()), |n| Err(format!("n={n}")));
    let suite = "catalan-motzkin";
    let n_range = format!("n <= {k}");
    let nm_range = format!("n, m <= {k}");
    vec![
        CheckRow::new(
            suite,
            "sum s(n,k) M_k = sum s(n+1,k) C_k",
            &n_range,
            first_kind,
        ),
        CheckRow::new(
            suite,
            "C and M through both kinds of Stirling numbers",
            &n_range,
            mixed,
        ),
        CheckRow::new(
            suite,
            "sum s(m,k) C_(n+k) = sum {n+m k+m}_m R_(m+k)",
            &nm_range,
            catalan_r,
        ),
        CheckRow::new(
            suite,
            "sum s(m,k) M_(n+k) = sum {n+m k+m}_m R_(m+k+1)",
            &nm_range,
            motzkin_r,
        ),
        CheckRow::new(
            suite,
            "1F1(1/2; 2; 4z) is the Catalan EGF",
            &n_range,
            catalan_egf,
        ),
        CheckRow::new(
            suite,
            "1F1(1/2; 2; 4 ln(1+z)) is the R EGF",
            &n_range,
            r_egf,
        ),
        CheckRow::new(
            suite,
            "initial R_(m+1) gives Motzkin column",
            &n_range,
            column,
        ),
        CheckRow::new(
            suite,
            "C_(n+1) = binomial transform of Motzkin",
            &n_range,
            binomial,
        ),
    ]
}

fn bernoulli(k: usize) -> Vec<CheckRow> {
    let finals = sequences::bernoulli_polynomials(2 * k + 1);
    let numbers = sequences::bernoulli_numbers(2 * k + 1);
    let row_formula = (0..=k)
        .map(|m| lib(entry_via_theorem2(&finals, 0, m)).map(|e| (m, e)))
        .find_map(|res| match res {
            Ok((m, e)) if e != bernoulli_row_formula(m) => Some(Err(format!("m={m}"))),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        })
        .unwrap_or(Ok(()));
    let identity = (0..=k)
        .flat_map(|n| (0..=k).map(move |m| (n, m)))
        .find(|&(n, m)| {
            let lhs = (0..=m).fold(RationalPolynomial::zero(), |acc, j| {
                acc.plus(&finals[n + j].scale_int(&s1(m, j)))
            });
            let rhs = (0..=n).fold(RationalPolynomial::zero(), |acc, j| {
                acc.plus(&bernoulli_row_formula(m + j).scale_int(&rs(m, n + m, j + m)))
            });
            lhs != rhs
        })
        .map_or(Ok(()), |(n, m)| Err(format!("n={n}, m={m}")));
    let at_zero = (0..finals.len())
        .find(|&n| finals[n].evaluate(&Rational::from_integer(BigInt::from(0))) != numbers[n])
        .map_or(Ok(()), |n| Err(format!("n={n}")));
    vec![
        CheckRow::new(
            "bernoulli",
            "row 0 closed form = matrix row from B_n(x)",
            format!("m <= {k}"),
            row_formula,
        ),
        CheckRow::new(
            "bernoulli",
            "sum s(m,k) B_(n+k)(x) = sum {n+m k+m}_m a_(0,m+k)",
            format!("n, m <= {k}"),
            identity,
        ),
        CheckRow::new(
            "bernoulli",
            "B_n(0) = B_n",
            format!("n <= {}", 2 * k),
            at_zero,
        ),
    ]
}

fn matrices() -> Vec<CheckRow> {
    fixtures::ALL
        .into_iter()
        .map(|f| {
            let outcome = lib(f.regenerate()).and_then(|s| {
                let rendered = s.to_csv();
                match rendered
                    .lines()
                    .zip(f.csv.lines())
                    .position(|(a, b)| a != b)
                {
                    _ if rendered == f.csv => Ok(()),
                    Some(line) => Err(format!("row {line} differs")),
                    None => Err("row count differs".into()),
                }
            });
            CheckRow::new(
                "matrices",
                format!("printed block {}", f.name),
                format!("{} x {}", f.rows, f.cols),
                outcome,
            )
        })
        .collect()
}
