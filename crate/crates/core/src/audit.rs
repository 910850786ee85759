//! Exact evaluation of the inequality chain
//!
//! ```text
//! z^n < rad(x_1 ... x_k z)^2 <= (x_1 ... x_k z)^2 < z^(2k+2)
//! ```
//!
//! on a concrete solution. Only the first link depends on the conjectured
//! bound `b < rad(...)^2` (constant 1, exponent 2); the other two hold for
//! every solution with `z >= 2`. Everything is computed in exact integers.

use num_bigint::BigUint;
use num_traits::Pow;

use crate::arith;
use crate::error::{Error, Result};
use crate::powersum::{self, PowerSumSolution};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofAudit {
    pub solution: PowerSumSolution,
    /// `z^n`.
    pub b_val: BigUint,
    /// `rad(x_1 ... x_k z)`.
    pub rad_val: BigUint,
    pub rad_sq: BigUint,
    /// `(x_1 ... x_k z)^2`.
    pub prod_sq: BigUint,
    /// `z^(2k+2)`.
    pub z_pow_bound: BigUint,
    /// `z^n < rad_sq`: the conjectural premise.
    pub premise_holds: bool,
    /// `rad_sq <= prod_sq`.
    pub link2_holds: bool,
    /// `prod_sq < z_pow_bound`.
    pub link3_holds: bool,
    /// `2k + 2`.
    pub implied_n_bound: u32,
}

impl ProofAudit {
    /// Whether the chain, read end to end, yields `n < 2k + 2`.
    pub fn chain_closes(&self) -> bool {
        self.premise_holds && self.link2_holds && self.link3_holds
    }
}

pub fn audit_chain(solution: &PowerSumSolution) -> Result<ProofAudit> {
    let PowerSumSolution { k, n, ref xs, z, .. } = *solution;
    if xs.len() != k || !powersum::check_solution(xs, z, n) {
        return Err(Error::NotASolution {
            xs: xs.clone(),
            z,
            n,
        });
    }
    let implied_n_bound = powersum::g(k)?;

    let mut members = xs.clone();
    members.push(z);
    let b_val = arith::big_pow(z, n);
    let rad_val = BigUint::from(arith::radical_of_set(&members)?);
    let rad_sq = &rad_val * &rad_val;
    let product: BigUint = members.iter().map(|&v| BigUint::from(v)).product();
    let prod_sq = &product * &product;
    let z_pow_bound = BigUint::from(z).pow(implied_n_bound);

    let audit = ProofAudit {
        solution: solution.clone(),
        premise_holds: b_val < rad_sq,
        link2_holds: rad_sq <= prod_sq,
        link3_holds: prod_sq < z_pow_bound,
        b_val,
        rad_val,
        rad_sq,
        prod_sq,
        z_pow_bound,
        implied_n_bound,
    };
    // z^n < z^(2k+2) forces n < 2k+2 for z >= 2.
    assert!(
        !audit.chain_closes() || n < implied_n_bound,
        "inequality chain closed with n = {n} >= {implied_n_bound}"
    );
    Ok(audit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn audit(xs: &[u64], z: u64, n: u32) -> ProofAudit {
        audit_chain(&PowerSumSolution::new(xs.to_vec(), z, n).unwrap()).unwrap()
    }

    #[test]
    fn three_four_five_six() {
        let a = audit(&[3, 4, 5], 6, 3);
        assert_eq!(a.rad_val, BigUint::from(30u8));
        assert_eq!(a.b_val, BigUint::from(216u16));
        assert_eq!(a.rad_sq, BigUint::from(900u16));
        assert_eq!(a.prod_sq, BigUint::from(129_600u32));
        assert_eq!(a.z_pow_bound, BigUint::from(1_679_616u32));
        assert!(a.premise_holds && a.link2_holds && a.link3_holds);
        assert_eq!(a.implied_n_bound, 8);
    }

    #[test]
    fn premise_fails_on_one_six_eight_nine() {
        let a = audit(&[1, 6, 8], 9, 3);
        assert_eq!(a.rad_val, BigUint::from(6u8));
        assert!(!a.premise_holds);
        assert!(a.link2_holds && a.link3_holds);
    }

    #[test]
    fn fifth_powers() {
        let a = audit(&[27, 84, 110, 133], 144, 5);
        assert_eq!(a.rad_val, BigUint::from(43_890u32));
        assert_eq!(a.b_val, BigUint::from(61_917_364_224u64));
        assert_eq!(a.rad_sq, BigUint::from(1_926_332_100u64));
        assert!(!a.premise_holds);
        assert!(a.link2_holds && a.link3_holds);
        assert_eq!(a.implied_n_bound, 10);
    }

    #[test]
    fn rejects_non_solution() {
        let bogus = PowerSumSolution {
            k: 2,
            n: 3,
            xs: vec![1, 2],
            z: 2,
            setwise_coprime: true,
            pairwise_coprime: true,
        };
        assert!(matches!(audit_chain(&bogus), Err(Error::NotASolution { .. })));
    }
}
