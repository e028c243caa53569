//! One pass/fail line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use superschur::characters::{
    check_character, dot_action, lexical_raise, reduction_char, su_zhang_char, typical_constant_delta_char,
    weyl_dimension, ConeElement,
};
use superschur::combinatorics::Permutation;
use superschur::jacobi_trudi::{dimension, jt_char, jt_matrix};
use superschur::verify::{run, GridSpec, Report, Suite};
use superschur::weights::{atypical_roots, decompose, special_class, Weight};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn w(s: &str) -> Weight {
    s.parse().unwrap()
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:.1?}, limit {limit:?}"))
}

fn suite(s: Suite, grid: &str, seed: u64) -> Result<Report, String> {
    let r = run(s, &grid.parse::<GridSpec>().map_err(|e| e.to_string())?, seed);
    if r.passed() {
        Ok(r)
    } else {
        Err(format!("{s}: {} of {} cases failed, first {}", r.failures.len(), r.cases, r.failures[0]))
    }
}

fn golden_example() -> Outcome {
    let start = Instant::now();
    let lam = w("3,2,-1;-1,-1");
    let names: Vec<Vec<String>> =
        jt_matrix(&lam).map_err(|e| e.to_string())?.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
    ensure(
        names == [["hbar_3", "h_2", "h_0"], ["hbar_2", "h_3", "h_1"], ["hbar_1", "h_4", "h_2"]],
        format!("matrix {names:?}"),
    )?;
    let jt = jt_char(&lam).map_err(|e| e.to_string())?;
    ensure(jt == su_zhang_char(&lam).unwrap(), "jt ≠ su-zhang")?;
    ensure(jt == typical_constant_delta_char(&lam).unwrap(), "jt ≠ typical")?;
    within(start, Duration::from_secs(5))?;
    Ok(format!("3×3 matrix reproduced, three routes agree ({} terms)", jt.len()))
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let lam = w("1,0,-1;-1,-2");
    let data = atypical_roots(&lam);
    let mut roots = data.roots.clone();
    roots.sort();
    // ε₁ − δ₂ and ε₂ − δ₁, 0-based
    ensure(roots == [(0, 1), (1, 0)], format!("atypical roots {roots:?}"))?;
    let swap = Permutation::transposition(2, 0, 1);
    let raised = lexical_raise(&ConeElement::vertex(dot_action(&swap, &lam, &data.roots), data.roots.clone()));
    ensure(raised.value == w("-1,0,-1;-1,0"), format!("(π.Λ)↑ = {}", raised.value))?;
    let class = special_class(&lam).ok_or("not special")?;
    let small = decompose(&class).eta_mu;
    let slots = atypical_roots(&small).roots;
    let raised = lexical_raise(&ConeElement::vertex(dot_action(&swap, &small, &slots), slots));
    ensure(raised.value == w("-1,0;0,1"), format!("(π.Λ_η̄;μ)↑ = {}", raised.value))?;
    let sz = su_zhang_char(&lam).map_err(|e| e.to_string())?;
    ensure(reduction_char(&class).map_err(|e| e.to_string())? == sz, "reduction ≠ su-zhang")?;
    within(start, Duration::from_secs(10))?;
    Ok("roots, both raised weights and the reduction match".into())
}

fn differential_suite() -> Outcome {
    let start = Instant::now();
    let grid = suite(Suite::JtVsOracle, "m<=3,n<=2,entry<=3", 0)?;
    let random = suite(Suite::JtVsOracle, "m=4,n=3,entry<=4,samples=200", 2024)?;
    ensure(random.cases == 200, format!("only {} random cases", random.cases))?;
    within(start, Duration::from_secs(600))?;
    Ok(format!("{} grid cases and {} random gl(4|3) cases, jt = su-zhang exactly", grid.cases, random.cases))
}

fn identity_suites() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    for (s, g) in [
        (Suite::Rho, "m<=4,n<=3"),
        (Suite::SplitClassical, "m<=4,entry<=3"),
        (Suite::IsolateY, "m<=3,n<=2"),
        (Suite::SplitSuper, "m<=4,n<=2"),
        (Suite::CompositeSchur, "m<=4"),
    ] {
        let r = suite(s, g, 0)?;
        parts.push(format!("{s} {}", r.cases));
    }
    within(start, Duration::from_secs(300))?;
    Ok(parts.join(", "))
}

fn raise_oracle() -> Outcome {
    let r = suite(Suite::RaiseOracle, "m<=4,n<=3,samples=500", 11)?;
    ensure(r.cases >= 500, format!("only {} weights", r.cases))?;
    Ok(format!("{} random atypical weights, unique maximum each time", r.cases))
}

fn structural() -> Outcome {
    let r = suite(Suite::Structural, "m<=3,n<=2,entry<=2", 0)?;
    let lam = w("3,2,-1;-1,-1");
    let dim = check_character(&lam, &su_zhang_char(&lam).unwrap()).map_err(|e| e.to_string())?;
    let expected = weyl_dimension(&lam.lambda) << 6;
    ensure(dim == expected && dim == BigInt::from(1536), format!("dimension {dim}, expected {expected}"))?;
    ensure(dimension(&lam).map_err(|e| e.to_string())? == dim, "jt dimension differs")?;
    Ok(format!("{} weights; dim V(3,2,-1;-1,-1) = 2^6·24 = {dim}", r.cases))
}

fn bijection() -> Outcome {
    let r = suite(Suite::PhiRoundtrip, "m<=3,n<=2,entry<=3", 0)?;
    Ok(format!("{} weights and composite partitions", r.cases))
}

fn glm1() -> Outcome {
    let r = suite(Suite::GlM1, "m<=3,n=1,entry<=3", 0)?;
    Ok(format!("{} dominant weights on gl(2|1) and gl(3|1)", r.cases))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("golden determinant", golden_example),
        ("two-fold atypical replay", worked_example),
        ("jt = su-zhang differential", differential_suite),
        ("identity suites", identity_suites),
        ("greedy raise = oracle", raise_oracle),
        ("structural properties", structural),
        ("bijection and normalization", bijection),
        ("gl(m|1) completeness", glm1),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match outcome {
            Ok(msg) => println!("criterion {}: PASS {name} ({t:.1?}): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({t:.1?}): {msg}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
