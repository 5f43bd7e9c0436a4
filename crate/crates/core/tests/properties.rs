mod common;

use std::sync::OnceLock;

use num_complex::Complex64;
use proptest::prelude::*;

use cayley_theta::apps::{efp_conjectured_max, efp_connection, gl_connection, gl_lower_bound, gl_witness_family};
use cayley_theta::characters::{
    abelian_character_table, convolve, fourier_class_scalars, involute, is_positive_type,
    murnaghan_nakayama, s3_irreps, symmetric_character_table, CharacterTable, ClassFunction,
    GroupFunction, Spectrum,
};
use cayley_theta::graphs::{alpha, build_cayley, ConnectionSet, Graph};
use cayley_theta::groups::{make_abelian_product, make_general_linear, make_symmetric, Partition};
use cayley_theta::scalar::Scalar;
use cayley_theta::simplex::{solve, verify_certificate, LpInstance, LpStatus};
use cayley_theta::theta::{solve_theta, CayleyGraphSpec};

use common::{brute_at_least_fixed, factorial, mn_beta, q};

fn sym_table(n: usize) -> &'static CharacterTable {
    static TABLES: OnceLock<Vec<CharacterTable>> = OnceLock::new();
    &TABLES.get_or_init(|| (0..=6).map(|n| symmetric_character_table(n.max(1)).unwrap()).collect())[n]
}

fn class_function(table: &CharacterTable, values: &[i64]) -> ClassFunction {
    let k = table.class_count();
    ClassFunction::new(table.group(), (0..k).map(|c| Scalar::int(values[c % values.len()])).collect()).unwrap()
}

fn theta_of(table: &CharacterTable, classes: &[usize]) -> Scalar {
    let x = ConnectionSet::from_classes(table.group(), classes).unwrap();
    let spec = CayleyGraphSpec::new(table.group(), x).unwrap();
    solve_theta(&spec, table).unwrap().objective
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn parseval_on_class_functions(n in 1usize..=5, values in prop::collection::vec(-6i64..=6, 1..8)) {
        let t = sym_table(n);
        let f = class_function(t, &values);
        let g = t.group();
        let lhs = g.elements().fold(Scalar::zero(), |acc, x| acc + f.at(x).clone() * f.at(x).clone());
        let c = fourier_class_scalars(&f, t).unwrap();
        let rhs = (0..t.irrep_count()).fold(Scalar::zero(), |acc, i| {
            let d = Scalar::int(t.degree(i) as i64);
            acc + d.clone() * d * c[i].clone() * c[i].clone()
        }) / Scalar::int(g.order() as i64);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn convolution_multiplies_fourier_scalars(
        n in 1usize..=4,
        a in prop::collection::vec(-4i64..=4, 1..6),
        b in prop::collection::vec(-4i64..=4, 1..6),
    ) {
        let t = sym_table(n);
        let f = class_function(t, &a);
        let h = class_function(t, &b);
        let conv = convolve(&f.to_group_function(), &h.to_group_function()).unwrap();
        let conv = conv.to_class_function().expect("convolution of class functions is central");
        let cf = fourier_class_scalars(&f, t).unwrap();
        let ch = fourier_class_scalars(&h, t).unwrap();
        let cc = fourier_class_scalars(&conv, t).unwrap();
        for i in 0..t.irrep_count() {
            prop_assert_eq!(&cc[i], &(cf[i].clone() * ch[i].clone()));
        }
    }

    #[test]
    fn self_convolution_is_positive_type_on_s3(values in prop::collection::vec(-5i64..=5, 6)) {
        let s3 = make_symmetric(3).unwrap();
        let irreps = s3_irreps(&s3).unwrap();
        let g = GroupFunction::new(&s3, values.iter().map(|&v| Scalar::int(v)).collect()).unwrap();
        let h = convolve(&g, &involute(&g)).unwrap();
        prop_assert!(is_positive_type(&h, Spectrum::Irreps(&irreps)).unwrap().positive);
    }

    #[test]
    fn central_self_convolution_is_positive_type(n in 2usize..=5, values in prop::collection::vec(-5i64..=5, 1..8)) {
        let t = sym_table(n);
        let g = class_function(t, &values).to_group_function();
        let h = convolve(&g, &involute(&g)).unwrap();
        prop_assert!(is_positive_type(&h, Spectrum::Characters(t)).unwrap().positive);
    }

    #[test]
    fn positive_type_functions_are_hermitian(values in prop::collection::vec((-3i32..=3, -3i32..=3), 12)) {
        let z = make_abelian_product(&[12]).unwrap();
        let t = abelian_character_table(&z).unwrap();
        let f = GroupFunction::new(&z, values.iter().map(|&(re, im)| Scalar::complex(re.into(), im.into())).collect()).unwrap();
        let verdict = is_positive_type(&f, Spectrum::Characters(&t)).unwrap();
        let hermitian = z.elements().all(|x| f.value(z.invert(x)).approx_eq(&f.value(x).conj(), 1e-12));
        prop_assert!(!verdict.positive || hermitian);
    }

    #[test]
    fn lp_solutions_are_deterministic_and_certified(
        rows in 1usize..=4,
        cols in 1usize..=6,
        data in prop::collection::vec(-5i64..=5, 40),
        zero_rhs in any::<bool>(),
    ) {
        let mut it = data.iter().cycle().map(|&v| q(v));
        let c = (0..cols).map(|_| it.next().unwrap()).collect();
        let a = (0..rows).map(|_| (0..cols).map(|_| it.next().unwrap()).collect()).collect();
        let b = (0..rows).map(|_| if zero_rhs { q(0) } else { it.next().unwrap() }).collect();
        let lp = LpInstance::new(c, a, b).unwrap();
        let first = solve(&lp).unwrap();
        let second = solve(&lp).unwrap();
        prop_assert_eq!(&first.x, &second.x);
        prop_assert_eq!(&first.basis, &second.basis);
        prop_assert_eq!(first.pivots, second.pivots);
        if zero_rhs {
            // x = 0 is feasible, so the only outcomes are optimal or unbounded
            prop_assert_ne!(first.status, LpStatus::Infeasible);
        }
        if first.status == LpStatus::Optimal {
            prop_assert!(verify_certificate(&lp, &first).is_ok());
        }
    }

    #[test]
    fn alpha_is_invariant_under_relabeling(
        n in 1usize..=9,
        edges in prop::collection::vec((0usize..9, 0usize..9), 0..20),
        seed in any::<u64>(),
    ) {
        let g = Graph::from_edges(n, edges.into_iter().filter(|&(u, v)| u < n && v < n && u != v)).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let a = alpha(&g);
        prop_assert!(g.is_independent(a.witness()));
        prop_assert_eq!(a.exact(), alpha(&g.relabel(&perm).unwrap()).exact());
    }

    #[test]
    fn theta_sandwich_on_random_class_unions(mask in 0u32..64) {
        let t = sym_table(4);
        let classes: Vec<usize> = (1..t.class_count()).filter(|c| mask >> c & 1 == 1).collect();
        let theta = theta_of(t, &classes);
        let x = ConnectionSet::from_classes(t.group(), &classes).unwrap();
        let a = alpha(&build_cayley(t.group(), &x).unwrap()).exact().unwrap();
        prop_assert!(q(a as i64) <= *theta.as_exact().unwrap(), "alpha {} > theta {}", a, theta.to_text());
    }
}

#[test]
fn murnaghan_nakayama_matches_beta_sets() {
    for n in 1..=6 {
        for lambda in Partition::all(n) {
            for mu in Partition::all(n) {
                assert_eq!(murnaghan_nakayama(&lambda, &mu), mn_beta(lambda.parts(), mu.parts()), "{lambda} at {mu}");
            }
        }
    }
}

#[test]
fn theta_decreases_as_the_efp_connection_grows() {
    for n in 2..=6 {
        let t = sym_table(n);
        let mut previous: Option<Scalar> = None;
        for k in 1..=n {
            let x = efp_connection(t.group(), k).unwrap();
            if k > 1 {
                let smaller = efp_connection(t.group(), k - 1).unwrap();
                assert!(smaller.elements().iter().all(|&e| x.contains(e)), "X_{n},{} not inside X_{n},{k}", k - 1);
            }
            let spec = CayleyGraphSpec::new(t.group(), x).unwrap();
            let theta = solve_theta(&spec, t).unwrap().objective;
            if let Some(p) = previous {
                assert!(theta.as_exact() <= p.as_exact(), "n = {n}, k = {k}");
            }
            previous = Some(theta);
        }
    }
}

#[test]
fn theta_of_empty_and_complete_graphs() {
    for n in 1..=5 {
        let t = sym_table(n);
        assert_eq!(theta_of(t, &[]), Scalar::int(factorial(n) as i64));
        let all: Vec<usize> = (1..t.class_count()).collect();
        assert_eq!(theta_of(t, &all), Scalar::one());
    }
    for m in [2, 5, 7] {
        let g = make_abelian_product(&[m]).unwrap();
        let t = abelian_character_table(&g).unwrap();
        let all: Vec<usize> = (1..m).collect();
        assert!(theta_of(&t, &[]).approx_eq(&Scalar::int(m as i64), 1e-9));
        assert!(theta_of(&t, &all).approx_eq(&Scalar::one(), 1e-9));
    }
}

#[test]
fn alpha_of_empty_and_complete_graphs() {
    for n in 1..=8 {
        assert_eq!(alpha(&Graph::empty(n)).exact(), Some(n));
        assert_eq!(alpha(&Graph::complete(n)).exact(), Some(1));
    }
}

#[test]
fn cayley_graphs_are_vertex_transitive() {
    let t = sym_table(4);
    let g = t.group();
    let x = efp_connection(g, 2).unwrap();
    let graph = build_cayley(g, &x).unwrap();
    for h in g.elements() {
        // right multiplication by h is an automorphism
        let perm: Vec<usize> = g.elements().map(|v| g.multiply(v, h)).collect();
        assert_eq!(graph.automorphism_violation(&perm), None);
    }
    assert!(g.elements().all(|v| graph.degree(v) == x.len()));
}

#[test]
fn conjectured_max_matches_brute_force() {
    for n in 1..=7 {
        for k in 1..=n {
            let got = efp_conjectured_max(n, k).unwrap();
            let terms: Vec<u64> = (0..=(n - k) / 2).map(|i| brute_at_least_fixed(n, k + 2 * i, k + i)).collect();
            assert_eq!(got.terms, terms, "n = {n}, k = {k}");
            assert_eq!(got.value, *terms.iter().max().unwrap());
        }
    }
}

#[test]
fn conjectured_max_is_a_factorial_for_small_k() {
    for n in 3..=8 {
        for k in (1..=n).filter(|&k| n >= 2 * k + 1) {
            assert_eq!(efp_conjectured_max(n, k).unwrap().value, factorial(n - k), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn gl_witness_family_is_independent() {
    for (qq, n) in [(2, 2), (3, 2), (2, 3)] {
        let g = make_general_linear(qq, n).unwrap();
        for k in 1..=n {
            let x = gl_connection(&g, k).unwrap();
            let w = gl_witness_family(&g, k).unwrap();
            assert_eq!(w.len() as u128, gl_lower_bound(qq, n, k));
            for &a in &w {
                for &b in &w {
                    assert!(a == b || !x.contains(g.multiply(a, g.invert(b))));
                }
            }
        }
    }
}

#[test]
fn group_axioms_and_class_equation() {
    let groups = [
        make_symmetric(4).unwrap(),
        make_symmetric(5).unwrap(),
        make_abelian_product(&[2, 6]).unwrap(),
        make_general_linear(3, 2).unwrap(),
        make_general_linear(2, 3).unwrap(),
    ];
    for g in &groups {
        g.verify_axioms().unwrap();
        let sizes: usize = g.classes().iter().map(|c| c.size).sum();
        assert_eq!(sizes, g.order());
        for c in g.classes() {
            assert_eq!(g.order() % c.size, 0);
            for &m in &c.members {
                assert_eq!(g.classes()[c.inverse_class].members.contains(&g.invert(m)), true);
            }
        }
    }
}

#[test]
fn character_values_are_class_functions() {
    let t = sym_table(4);
    let g = t.group();
    for i in 0..t.irrep_count() {
        for x in g.elements() {
            for h in g.elements() {
                assert_eq!(t.character_value(i, x), t.character_value(i, g.conjugate(x, h)));
            }
        }
    }
    let z = make_abelian_product(&[6]).unwrap();
    let tz = abelian_character_table(&z).unwrap();
    for i in 0..6 {
        for x in 0..6 {
            let v: Complex64 = tz.entry_complex(i, z.class_of(x));
            assert!((v.norm() - 1.0).abs() < 1e-12);
        }
    }
}
