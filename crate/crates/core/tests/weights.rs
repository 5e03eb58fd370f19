use std::collections::BTreeMap;

use bcr_core::algebra::rat::{int, rat};
use bcr_core::weights::{
    check_ode, check_ode_on, l_poly_recursive, l_series_closed, lambda_bruteforce, lambda_closed,
    lambda_recursive, m_closed_form, m_coeffs,
};
use bcr_core::{Poly, Rat};
use num_traits::{One, Zero};

#[test]
fn three_routes_agree_through_nine() {
    let table = lambda_recursive(9).unwrap();
    let closed = l_series_closed(8);
    for k in 2..=9 {
        let brute = lambda_bruteforce(k).unwrap();
        assert_eq!(brute, table.row_map(k), "k = {k}");
        for (nu, value) in &brute {
            assert_eq!(&closed.coeff(k - 1).coeff(*nu), value, "closed form at ({k}, {nu})");
        }
        assert!(closed.coeff(k - 1).coeff(0).is_zero());
        assert!(closed.coeff(k - 1).degree() <= Some(k - 1));
    }
}

#[test]
fn eulerian_rows_are_frozen() {
    // ascent counts of S_4 are 1, 11, 11, 1 and of S_5 are 1, 26, 66, 26, 1
    assert_eq!(
        lambda_bruteforce(5).unwrap(),
        BTreeMap::from([(1, rat(1, 24)), (2, rat(11, 24)), (3, rat(11, 24)), (4, rat(1, 24))])
    );
    let row6: Vec<Rat> = lambda_recursive(6).unwrap().row_map(6).into_values().collect();
    let expected: Vec<Rat> = [1, 26, 66, 26, 1].iter().map(|&c| rat(c, 120)).collect();
    assert_eq!(row6, expected);
}

#[test]
fn table_symmetry_row_sums_and_integrality() {
    let table = lambda_recursive(16).unwrap();
    for k in 2..=16 {
        let row = table.row(k);
        assert_eq!(row.len(), k + 1);
        assert!(row[0].is_zero() && row[k].is_zero());
        let sum: Rat = row.iter().sum();
        assert!(sum.is_one(), "row {k} sums to {sum}");
        let fact: i64 = (1..k as i64).product();
        for nu in 0..=k {
            assert_eq!(table.get(k, nu), table.get(k, k - nu));
            let count = table.get(k, nu) * int(fact);
            assert!(count.is_integer() && count >= Rat::zero());
        }
    }
}

#[test]
fn l_polynomials_match_the_table() {
    let polys = l_poly_recursive(12);
    let table = lambda_recursive(12).unwrap();
    assert_eq!(polys[0].poly, Poly::new(vec![rat(1, 2), rat(1, 2)]));
    assert_eq!(polys[1].poly, Poly::x());
    assert_eq!(polys[2].poly, Poly::new(vec![int(0), rat(1, 2), rat(1, 2)]));
    for lp in &polys[1..] {
        for nu in 0..=lp.k {
            assert_eq!(lp.poly.coeff(nu), table.get(lp.k, nu));
        }
    }
    let closed = lambda_closed(12).unwrap();
    for k in 2..=12 {
        assert_eq!(closed[&k], table.row_map(k));
    }
}

#[test]
fn ode_holds_and_detects_perturbations() {
    assert!(check_ode(1));
    assert!(check_ode(12));
    let series = l_series_closed(12);
    for j in [0, 3, 11] {
        let mut bumped = series.clone();
        let poly = &series.coeff(j).clone() + &Poly::constant(rat(1, 1000));
        bumped.set_coeff(j, poly);
        assert!(!check_ode_on(&bumped, 12), "perturbing Y^{j}");
    }
}

#[test]
fn m_series_examples() {
    let m = m_coeffs(12).unwrap();
    assert_eq!(m[&(2, 1)], rat(1, 2));
    assert_eq!(m[&(4, 2)], rat(1, 6));
    assert_eq!(m[&(3, 0)], int(0));
    let closed = m_closed_form(2);
    assert_eq!(closed.coeff(1, 1), rat(1, 2));
    assert!(closed.coeff(2, 0).is_zero() && closed.coeff(0, 2).is_zero());
}
