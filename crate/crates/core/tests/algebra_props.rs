use interval_core::algebra::{
    cartan_matrix, char_poly_exact, coxeter_matrix, coxeter_polynomial, coxeter_report, derived_invariant_report,
    gamma_zero_category, incidence_category, is_upper_unitriangular, poset_coxeter_polynomial, ThinCategory,
};
use interval_core::enumerate::{all_ideal_maps, posets_up_to, random_instance};
use interval_core::gamma::build_gamma;
use interval_core::linalg::Matrix;
use interval_core::poset::Poset;
use interval_core::{IntPolynomial, Integer};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `det(tI - m)` by cofactor expansion along the first row.
fn cofactor_char_poly(m: &Matrix<Integer>) -> IntPolynomial {
    let n = m.rows();
    let entry = |i: usize, j: usize| {
        let c = IntPolynomial::constant(-m[(i, j)].clone());
        if i == j {
            c.add(&IntPolynomial::new(vec![Integer::zero(), Integer::one()]))
        } else {
            c
        }
    };
    fn det(rows: &[usize], cols: &[usize], entry: &dyn Fn(usize, usize) -> IntPolynomial) -> IntPolynomial {
        if rows.is_empty() {
            return IntPolynomial::constant(Integer::one());
        }
        let mut total = IntPolynomial::zero();
        for (k, &c) in cols.iter().enumerate() {
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry(rows[0], c).mul(&det(&rows[1..], &rest, entry));
            total = if k % 2 == 0 { total.add(&term) } else { total.sub(&term) };
        }
        total
    }
    let idx: Vec<usize> = (0..n).collect();
    det(&idx, &idx, &entry)
}

fn relabel(t: &ThinCategory, perm: &[usize]) -> ThinCategory {
    ThinCategory::new(t.len(), |u, v| t.hom(perm[u], perm[v]), |u, v, w| t.composes(perm[u], perm[v], perm[w])).unwrap()
}

#[test]
fn char_poly_matches_cofactor_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let n = rng.gen_range(0..=4);
        let m = Matrix::from_fn(n, n, |_, _| Integer::from(rng.gen_range(-3..=3)));
        assert_eq!(char_poly_exact(&m), cofactor_char_poly(&m), "{m:?}");
    }
}

#[test]
fn cartan_is_unitriangular_in_linear_extension_order() {
    for p in posets_up_to(4) {
        let t = incidence_category(&p);
        let c = cartan_matrix(&t, &p.linear_extension());
        assert!(is_upper_unitriangular(&c));
        assert_eq!(char_poly_exact(&c).eval(&Integer::zero()), Integer::from(if p.size() % 2 == 0 { 1 } else { -1 }));
    }
}

#[test]
fn coxeter_polynomial_ignores_relabelling() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..60 {
        let g = build_gamma(&random_instance(&mut rng, 4, 4));
        let zero = gamma_zero_category(&g).unwrap();
        let mut perm: Vec<usize> = (0..zero.len()).collect();
        perm.shuffle(&mut rng);
        let shuffled = relabel(&zero, &perm);
        assert_eq!(coxeter_polynomial(&zero).unwrap(), coxeter_polynomial(&shuffled).unwrap());
        // Conjugating the Cartan matrix by the permutation directly.
        let c = cartan_matrix(&zero, &perm);
        assert_eq!(char_poly_exact(&coxeter_matrix(&c).unwrap()), coxeter_polynomial(&zero).unwrap());
    }
}

#[test]
fn incidence_and_zero_relation_polynomials_agree() {
    let small = posets_up_to(3);
    let mut checked = 0;
    for x in &small {
        for y in &small {
            for map in all_ideal_maps(x, y) {
                let g = build_gamma(&map);
                if g.len() > 12 {
                    continue;
                }
                let report = derived_invariant_report(&incidence_category(g.poset()), &gamma_zero_category(&g).unwrap()).unwrap();
                assert!(report.all_equal(), "{}", report.human_text());
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn known_polynomials() {
    // A_n has Coxeter polynomial 1 + t + ... + t^n.
    for n in 1..6 {
        let p = poset_coxeter_polynomial(&Poset::chain(n));
        assert_eq!(p, IntPolynomial::new(vec![Integer::one(); n + 1]));
    }
    let r = coxeter_report(&incidence_category(&Poset::antichain(2))).unwrap();
    assert_eq!(r.polynomial.to_string(), "1 2 1");
}

#[test]
fn interval_posets_of_products_match_corollary() {
    let expected_sizes = [3, 10, 21];
    for n in 1..=3 {
        let product = Poset::chain(2 * n + 1).product(&Poset::chain(n));
        let (int, _) = Poset::chain(2 * n).interval_poset();
        assert_eq!(product.size(), expected_sizes[n - 1]);
        assert_eq!(int.size(), expected_sizes[n - 1]);
        assert_eq!(poset_coxeter_polynomial(&product), poset_coxeter_polynomial(&int));
    }
}
