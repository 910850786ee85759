use genabc_core::arith;
use genabc_core::audit::audit_chain;
use genabc_core::powersum::{search_solutions, Algorithm, SolutionFilter};
use genabc_core::WorkerPool;
use num_bigint::BigUint;

#[test]
fn unconditional_links_never_fail() {
    let pool = WorkerPool::new(4);
    let mut audited = 0;
    let mut premise_held = 0;
    for k in 2..=4 {
        for n in 2..=5 {
            for s in search_solutions(k, n, 60, SolutionFilter::All, Algorithm::Dfs, &pool).unwrap() {
                let a = audit_chain(&s).unwrap();
                assert!(a.link2_holds && a.link3_holds, "{s}");
                if a.premise_holds {
                    assert!(n < a.implied_n_bound);
                    premise_held += 1;
                }
                // rad(x_1^n ... z^n) = rad(x_1 ... z), checked on the powers.
                let mut powers = Vec::new();
                for &v in s.xs.iter().chain([&s.z]) {
                    if let Ok(p) = u64::try_from(arith::big_pow(v, n)) {
                        powers.push(p);
                    }
                }
                if powers.len() == k + 1 {
                    let via_powers = BigUint::from(arith::radical_of_set(&powers).unwrap());
                    assert_eq!(via_powers, a.rad_val, "{s}");
                }
                audited += 1;
            }
        }
    }
    assert!(audited > 100);
    assert!(premise_held > 0);
}

#[test]
fn premise_on_cube_solutions() {
    let pool = WorkerPool::serial();
    let found = search_solutions(3, 3, 20, SolutionFilter::Setwise, Algorithm::Dfs, &pool).unwrap();
    let verdicts: Vec<(u64, bool)> = found
        .iter()
        .map(|s| (s.z, audit_chain(s).unwrap().premise_holds))
        .collect();
    // rad values 30, 6, 570, 4760 against 216, 729, 6859, 8000.
    assert_eq!(verdicts, vec![(6, true), (9, false), (19, true), (20, true)]);
}
