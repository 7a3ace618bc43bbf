use proptest::prelude::*;

use locoh::arith::{dehomogenize, sigma, tau, Field, Monomial, MultiPoly, UniPoly, Var};
use locoh::factor::{accumulate_distinct, factor_over_prime_field, factor_sigma_rational, totient};
use locoh::frobenius::{component_t, theorem2_growth, ComponentCase};
use locoh::matrices::{adjugate, build_b, det, solve_square, unit_vector, DetMethod, PolyMatrix};

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rationals),
        Just(Field::PrimeField(2)),
        Just(Field::PrimeField(3)),
        Just(Field::PrimeField(7)),
        Just(Field::PrimeField(101)),
    ]
}

fn monomial(vars: &'static [Var], max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, vars.len())
        .prop_map(move |exps| Monomial::from_pairs(&vars.iter().copied().zip(exps).collect::<Vec<_>>()))
}

fn poly_in(field: Field, vars: &'static [Var], max_exp: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-9i64..=9, monomial(vars, max_exp)), 0..=max_terms)
        .prop_map(move |terms| MultiPoly::from_terms(field, terms))
}

fn any_poly() -> impl Strategy<Value = MultiPoly> {
    field().prop_flat_map(|f| poly_in(f, &Var::ALL, 2, 5))
}

fn poly_pair() -> impl Strategy<Value = (MultiPoly, MultiPoly)> {
    field().prop_flat_map(|f| (poly_in(f, &Var::ALL, 2, 4), poly_in(f, &Var::ALL, 2, 4)))
}

const ST: &[Var] = &[Var::S, Var::T];

fn st_matrix(n: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(poly_in(Field::Rationals, ST, 1, 2), n * n).prop_map(move |entries| {
        let rows = entries.chunks(n).map(<[MultiPoly]>::to_vec).collect();
        PolyMatrix::from_rows(Field::Rationals, rows).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_parse_round_trip(f in any_poly()) {
        let back = MultiPoly::parse(&f.to_string(), f.field()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn exact_divide_recovers_factor((a, b) in poly_pair()) {
        prop_assume!(!b.is_zero());
        let q = (&a * &b).exact_divide(&b).unwrap();
        prop_assert_eq!(q, Some(a));
    }

    #[test]
    fn ring_axioms((a, b) in poly_pair(), c in any_poly()) {
        prop_assume!(c.field() == a.field());
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn bareiss_matches_cofactor(m in (1usize..=5).prop_flat_map(st_matrix)) {
        let b = det(&m, DetMethod::Bareiss).unwrap();
        let c = det(&m, DetMethod::Cofactor).unwrap();
        prop_assert_eq!(b, c);
    }

    #[test]
    fn adjugate_identity(m in (1usize..=4).prop_flat_map(st_matrix)) {
        let adj = adjugate(&m).unwrap();
        let d = det(&m, DetMethod::Bareiss).unwrap();
        let n = m.rows();
        prop_assert_eq!(m.mul(&adj).unwrap(), PolyMatrix::identity(Field::Rationals, n).scale(&d));
        prop_assert_eq!(adj.mul(&m).unwrap(), PolyMatrix::identity(Field::Rationals, n).scale(&d));
    }

    #[test]
    fn det_is_tau(i in 1u32..=40, f in field()) {
        prop_assert_eq!(det(&build_b(i, f).unwrap(), DetMethod::Bareiss).unwrap(), tau(i, f).unwrap());
    }

    #[test]
    fn tau_dehomogenizes_to_signed_sigma(i in 1u32..=30, f in field()) {
        let flat = dehomogenize(&tau(i, f).unwrap(), Var::S, Var::T).unwrap();
        let s = sigma(i, f).unwrap();
        let want = if i % 2 == 0 { s } else { s.neg() };
        prop_assert_eq!(flat, want);
    }

    #[test]
    fn sigma_telescopes(i in 1u32..=60, f in field()) {
        let t_minus_1 = UniPoly::from_i64s(f, Var::T, &[-1, 1]);
        let rhs = UniPoly::monomial(f, Var::T, f.one(), i as usize + 1).sub(&UniPoly::one(f, Var::T));
        prop_assert_eq!(sigma(i, f).unwrap().mul(&t_minus_1), rhs);
    }

    #[test]
    fn rational_factor_degrees(i in 1u32..=80) {
        let r = factor_sigma_rational(i).unwrap();
        let total: u32 = r.factors().iter().map(|(g, _)| g.degree().unwrap() as u32).sum();
        prop_assert_eq!(total, i);
        let by_totient: u32 = (2..=i + 1).filter(|d| (i + 1) % d == 0).map(totient).sum();
        prop_assert_eq!(by_totient, i);
    }

    #[test]
    fn prime_field_factorization_is_complete(
        p in prop_oneof![Just(2u64), Just(3), Just(5), Just(13)],
        coeffs in prop::collection::vec(0i64..13, 2..=12),
        seed in any::<u64>(),
    ) {
        let f = Field::PrimeField(p);
        let poly = UniPoly::from_i64s(f, Var::T, &coeffs);
        prop_assume!(poly.degree().unwrap_or(0) >= 1);
        let r = factor_over_prime_field(&poly, Some(seed)).unwrap();
        prop_assert_eq!(r.reassemble(), poly.clone());
        let deg: usize = r.factors().iter().map(|(g, k)| g.degree().unwrap() * *k as usize).sum();
        prop_assert_eq!(Some(deg), poly.degree());
        for (g, _) in r.factors() {
            prop_assert!(g.leading_coefficient().unwrap().is_one());
            let roots = f.elements().unwrap().into_iter().filter(|a| g.eval(a).is_zero()).count();
            if g.degree() == Some(1) {
                prop_assert_eq!(roots, 1);
            } else if g.degree().unwrap() <= 3 {
                prop_assert_eq!(roots, 0);
            }
        }
        let other = factor_over_prime_field(&poly, Some(seed.wrapping_add(1))).unwrap();
        prop_assert_eq!(r.factors(), other.factors());
    }

    #[test]
    fn torsion_rhs_is_solvable(d in 3u32..=10, j in 0usize..9) {
        let b = build_b(d - 1, Field::Rationals).unwrap();
        let n = b.rows();
        let t = tau(d - 1, Field::Rationals).unwrap();
        let v: Vec<MultiPoly> = unit_vector(Field::Rationals, n, j % n).iter().map(|e| e * &t).collect();
        prop_assert!(solve_square(&b, &v).unwrap().is_solution());
    }

    #[test]
    fn frobenius_below_rows_end_in_zero(n in 6u32..=12, d_off in 0u32..8) {
        let d = 5 + d_off % (n - 5);
        let c = component_t(n, d, Field::Rationals).unwrap();
        prop_assert_eq!(c.case, ComponentCase::Below);
        let m = c.presentation.relations();
        prop_assert_eq!((m.rows(), m.cols()), (d as usize + 1, d as usize - 3));
        for j in 0..m.cols() {
            prop_assert!(m.get(0, j).is_zero() && m.get(m.rows() - 1, j).is_zero());
        }
    }
}

#[test]
fn frobenius_growth_matches_factor_accumulation() {
    for (f, ns, seed) in [
        (Field::Rationals, vec![6, 7, 8, 10, 12], None),
        (Field::PrimeField(3), vec![9, 27], Some(4)),
        (Field::PrimeField(2), vec![8, 16], Some(4)),
    ] {
        let g = theorem2_growth(&ns, f, seed).unwrap();
        let indices: Vec<u32> = ns.iter().map(|n| n - 2).collect();
        let direct = accumulate_distinct(&indices, f, seed).unwrap();
        assert_eq!(g.growth, direct);
        assert!(g.growth.strictly_increasing());
    }
}
