use crate::arith::{tau, Field, MultiPoly, Var};
use crate::error::{Error, Result};
use crate::factor::factor_tau;
use crate::matrices::{adjugate_times, build_b, det, solve_square, unit_vector, DetMethod, MembershipCertificate};

/// Certificate that the class of `e_1` in `Coker B_(d-1)` is a nonzero
/// element killed by `tau_(d-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionWitness {
    pub d: u32,
    pub annihilator: MultiPoly,
    /// First column of `adj(B_(d-1))`; `B * solution = annihilator * e_1`.
    pub solution: Vec<MultiPoly>,
    /// `e_1` is not in the image of `B_(d-1)`.
    pub nonmembership: MembershipCertificate,
    /// Rank of the cokernel fibre at `s = t = 0`; every entry of `B_(d-1)`
    /// lies in `(s, t)`, so this is `d - 1`.
    pub fiber_dimension: usize,
}

pub fn torsion_witness(d: u32, field: Field) -> Result<TorsionWitness> {
    if d < 2 {
        return Err(Error::OutOfRange {
            what: "d",
            value: d as i64,
            bound: ">= 2",
        });
    }
    let b = build_b(d - 1, field)?;
    let n = b.rows();
    let annihilator = det(&b, DetMethod::Bareiss)?;
    if annihilator != tau(d - 1, field)? {
        return Err(Error::CertificateFailed(format!("det B_{} != tau_{}", d - 1, d - 1)));
    }

    let e1 = unit_vector(field, n, 0);
    let solution = adjugate_times(&b, &e1)?;
    let scaled: Vec<MultiPoly> = e1.iter().map(|e| e * &annihilator).collect();
    if b.mul_vec(&solution)? != scaled {
        return Err(Error::CertificateFailed("B * adj(B) e_1 != tau e_1".into()));
    }

    let nonmembership = solve_square(&b, &e1)?;
    if nonmembership.is_solution() {
        return Err(Error::CertificateFailed("e_1 lies in the image of B".into()));
    }

    let zero = field.zero();
    let at_origin = b.substitute(&[(Var::S, zero.clone()), (Var::T, zero)]);
    let fiber_dimension = if at_origin.is_zero() { n } else { 0 };
    if fiber_dimension != n {
        return Err(Error::CertificateFailed("B does not vanish at s = t = 0".into()));
    }

    Ok(TorsionWitness {
        d,
        annihilator,
        solution,
        nonmembership,
        fiber_dimension,
    })
}

/// An irreducible form in `k[s,t]` dividing `det B_(d-1)`; it generates a
/// minimal prime of the cokernel's support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeWitness {
    pub generator: MultiPoly,
    pub source_d: u32,
    /// The prime does not contain `s`.
    pub avoids_s: bool,
}

/// Prime witnesses from the factorization of `det B_(d-1) = tau_(d-1)`.
pub fn prime_witnesses(d: u32, field: Field, seed: Option<u64>) -> Result<Vec<PrimeWitness>> {
    if d < 2 {
        return Err(Error::OutOfRange {
            what: "d",
            value: d as i64,
            bound: ">= 2",
        });
    }
    let determinant = det(&build_b(d - 1, field)?, DetMethod::Bareiss)?;
    let s = MultiPoly::var(field, Var::S);
    let s_divides = determinant.exact_divide(&s)?.is_some();
    let report = factor_tau(d - 1, field, seed)?;
    report
        .factors()
        .iter()
        .map(|(g, _)| {
            if determinant.exact_divide(g)?.is_none() {
                return Err(Error::CertificateFailed(format!("{g} does not divide det B_{}", d - 1)));
            }
            Ok(PrimeWitness {
                generator: g.clone(),
                source_d: d,
                avoids_s: !s_divides && g.normalize().1 != s,
            })
        })
        .collect()
}

/// Membership of `p` in the irrelevant ideal `(s, t, x, y, u, v)`.
pub fn in_irrelevant_ideal(p: &MultiPoly) -> bool {
    p.constant_term().is_zero()
}

/// `tau_i` lies in the irrelevant maximal ideal.
pub fn corollary_membership(i: u32, field: Field) -> Result<bool> {
    Ok(in_irrelevant_ideal(&tau(i, field)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn mp(s: &str) -> MultiPoly {
        MultiPoly::parse(s, Q).unwrap()
    }

    #[test]
    fn witness_d2() {
        let w = torsion_witness(2, Q).unwrap();
        assert_eq!(w.annihilator, mp("-t-s"));
        assert_eq!(w.solution, [mp("1")]);
        assert_eq!(w.nonmembership, MembershipCertificate::NoSolution { index: 0 });
        assert_eq!(w.fiber_dimension, 1);
    }

    #[test]
    fn witness_d3() {
        let w = torsion_witness(3, Q).unwrap();
        assert_eq!(w.annihilator, mp("t^2+s*t+s^2"));
        assert_eq!(w.solution, [mp("-t-s"), mp("-s")]);
        assert_eq!(w.fiber_dimension, 2);
        assert!(torsion_witness(1, Q).is_err());
    }

    #[test]
    fn primes() {
        let p2 = prime_witnesses(2, Q, None).unwrap();
        assert_eq!(p2.len(), 1);
        assert_eq!(p2[0].generator, mp("t+s"));
        let p4: Vec<_> = prime_witnesses(4, Q, None)
            .unwrap()
            .into_iter()
            .map(|w| w.generator)
            .collect();
        assert_eq!(p4, [mp("t+s"), mp("t^2+s^2")]);
        for d in 2..12 {
            assert!(prime_witnesses(d, Q, None).unwrap().iter().all(|w| w.avoids_s));
        }
    }

    #[test]
    fn membership_in_maximal_ideal() {
        assert!(corollary_membership(1, Q).unwrap());
        assert!(corollary_membership(17, Q).unwrap());
        assert!(!in_irrelevant_ideal(&MultiPoly::one(Q)));
    }
}
