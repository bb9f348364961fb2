mod common;

use chordweight::checks::{connection_submatrix, f_of, theta};
use chordweight::enumerate::sample_tangle;
use chordweight::format;
use chordweight::lie::{builtin, casimir_tensor};
use chordweight::partition::{eval_diagram, eval_edge_coloring, eval_quantum, eval_tangle, naive};
use chordweight::perm::Hyperoctahedral;
use chordweight::rational::q;
use chordweight::tensor::trace_pair;
use chordweight::{ChordDiagram, GlTensor, Perm, QuantumTangle, SymTensor, Tangle};
use common::*;
use proptest::prelude::*;
use rand::Rng;

fn tangle_strategy(max_k: usize, max_m: usize) -> impl Strategy<Value = Tangle> {
    (0..=max_k, any::<u64>()).prop_map(move |(k, seed)| sample_tangle(k, max_m, &mut rng(seed)))
}

fn tangle_pair(max_k: usize, max_m: usize) -> impl Strategy<Value = (Tangle, Tangle)> {
    (0..=max_k, any::<u64>()).prop_map(move |(k, seed)| {
        let mut r = rng(seed);
        (sample_tangle(k, max_m, &mut r), sample_tangle(k, max_m, &mut r))
    })
}

fn diagram_strategy(max_m: usize) -> impl Strategy<Value = ChordDiagram> {
    (0..=max_m, 0..3usize, any::<u64>()).prop_map(|(m, loops, seed)| {
        ChordDiagram::new(Perm::random(2 * m, &mut rng(seed)).images().to_vec(), loops).unwrap()
    })
}

fn tensor_strategy(n: usize) -> impl Strategy<Value = SymTensor> {
    any::<u64>().prop_map(move |seed| random_sym_tensor(n, &mut rng(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_factorize_reconstructs(r in tensor_strategy(2)) {
        let pairs = r.rank_factorize();
        prop_assert_eq!(pairs.len(), naive_rank(&r.as_matrix().to_rows()));
        prop_assert_eq!(SymTensor::from_pairs(2, &pairs).unwrap(), r);
    }

    #[test]
    fn gl_action_is_an_action(r in tensor_strategy(2), seed in any::<u64>()) {
        let mut g = rng(seed);
        let a = random_invertible(2, &mut g);
        let b = random_invertible(2, &mut g);
        let lhs = r.gl_action(&a.mul(&b)).unwrap();
        let rhs = r.gl_action(&b).unwrap().gl_action(&a).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn strategies_agree(r in tensor_strategy(2), d in diagram_strategy(3)) {
        let v = eval_diagram(&r, &d);
        prop_assert_eq!(&v, &eval_edge_coloring(&r, &d));
        prop_assert_eq!(&v, &brute_force_p(&r, &d));
    }

    #[test]
    fn isomorphism_invariance(r in tensor_strategy(2), d in diagram_strategy(4), seed in any::<u64>()) {
        let h = Hyperoctahedral::new(d.m()).random(&mut rng(seed));
        prop_assert_eq!(eval_diagram(&r, &d), eval_diagram(&r, &d.relabel(&h)));
    }

    #[test]
    fn gl_invariance(r in tensor_strategy(2), d in diagram_strategy(3), seed in any::<u64>()) {
        let h = random_invertible(2, &mut rng(seed));
        prop_assert_eq!(eval_diagram(&r.gl_action(&h).unwrap(), &d), eval_diagram(&r, &d));
    }

    #[test]
    fn homomorphism((s, t) in tangle_pair(2, 2), r in tensor_strategy(2)) {
        let st = eval_tangle(&r, &s.compose(&t).unwrap());
        prop_assert_eq!(st, eval_tangle(&r, &s).compose(&eval_tangle(&r, &t)).unwrap());
        let joined = eval_diagram(&r, &s.join(&t).unwrap());
        prop_assert_eq!(joined, trace_pair(&eval_tangle(&r, &s), &eval_tangle(&r, &t)).unwrap());
    }

    #[test]
    fn shift_union_is_tensor_product(s in tangle_strategy(2, 1), t in tangle_strategy(1, 1), r in tensor_strategy(2)) {
        let lhs = eval_tangle(&r, &s.shift_union(&t));
        prop_assert_eq!(lhs, eval_tangle(&r, &s).tensor(&eval_tangle(&r, &t)).unwrap());
    }

    #[test]
    fn contraction_matches_naive(t in tangle_strategy(2, 2), r in tensor_strategy(2)) {
        prop_assert_eq!(eval_tangle(&r, &t), naive::eval_tangle(&r, &t));
    }

    #[test]
    fn quantum_linearity((s, t) in tangle_pair(2, 2), r in tensor_strategy(2), a in -5i64..5, b in -5i64..5) {
        let x = QuantumTangle::from_tangle(&s).scale(&q(a)).add(&QuantumTangle::from_tangle(&t).scale(&q(b))).unwrap();
        let expect = eval_tangle(&r, &s).scale(&q(a)).add(&eval_tangle(&r, &t).scale(&q(b))).unwrap();
        prop_assert_eq!(eval_quantum(&r, &x), expect);
    }

    #[test]
    fn theta_is_linear_and_cyclic((s, t) in tangle_pair(2, 2), r in tensor_strategy(2)) {
        let f = f_of(r);
        let x = QuantumTangle::from_tangle(&s);
        let y = QuantumTangle::from_tangle(&t);
        prop_assert_eq!(theta(&f, &x.compose(&y).unwrap()).unwrap(), theta(&f, &y.compose(&x).unwrap()).unwrap());
        let sum = theta(&f, &x.scale(&q(3)).add(&y).unwrap()).unwrap();
        prop_assert_eq!(sum, q(3) * theta(&f, &x).unwrap() + theta(&f, &y).unwrap());
    }

    #[test]
    fn canonical_form_idempotent(t in tangle_strategy(3, 4)) {
        let c = t.canonical_form();
        prop_assert_eq!(c.canonical_form(), c.clone());
        prop_assert!(c.is_isomorphic(&t));
    }

    #[test]
    fn documents_round_trip(t in tangle_strategy(3, 3), d in diagram_strategy(3), r in tensor_strategy(2)) {
        let s = format::tangle_to_json(&t);
        let back = format::parse_tangle(&s).unwrap();
        prop_assert_eq!(format::tangle_to_json(&back), s);
        prop_assert_eq!(back, t);
        let s = format::diagram_to_json(&d);
        prop_assert_eq!(format::parse_diagram(&s).unwrap(), d);
        let s = format::sym_tensor_to_json(&r);
        let back = format::parse_sym_tensor(&s).unwrap();
        prop_assert_eq!(format::sym_tensor_to_json(&back), s);
        prop_assert_eq!(back, r);
    }
}

#[test]
fn identity_trace_is_n_to_the_k() {
    for n in 1..4 {
        for k in 0..3 {
            let i = GlTensor::identity(n, k);
            assert_eq!(trace_pair(&i, &i).unwrap(), chordweight::rational::pow(&q(n as i64), k));
        }
    }
}

#[test]
fn connection_submatrix_symmetry_and_monotone_rank() {
    let mut g = rng(200);
    let f = f_of(random_sym_tensor(2, &mut g));
    let family: Vec<Tangle> = (0..20).map(|_| sample_tangle(2, 2, &mut g)).collect();
    let full = connection_submatrix(&f, 2, &family, &family).unwrap();
    assert!(full.is_symmetric());
    let mut last = 0;
    for size in 1..=family.len() {
        let sub = connection_submatrix(&f, 2, &family[..size], &family).unwrap();
        let r = sub.rank();
        assert!(r >= last);
        assert!(r <= 16);
        last = r;
    }
    assert_eq!(last, full.rank());
}

#[test]
fn casimir_tensors_are_symmetric_and_basis_free() {
    let mut g = rng(201);
    for name in LIE_FIXTURES {
        let (alg, rho) = builtin(name).unwrap();
        let r = casimir_tensor(&alg, &rho).unwrap();
        assert!(r.check_symmetric().is_ok());
        let p = random_invertible(alg.dim(), &mut g);
        let (alg2, rho2) = alg.change_basis(&rho, &p).unwrap();
        assert_eq!(casimir_tensor(&alg2, &rho2).unwrap(), r);
    }
}

#[test]
fn lie_weight_values() {
    let (g, rho) = builtin("sl2").unwrap();
    let f = chordweight::lie::weight_system(&g, &rho).unwrap();
    use chordweight::DiagramInvariant;
    assert_eq!(f.value(&ChordDiagram::vertexless_loop()), q(2));
    assert_eq!(f.value(&ChordDiagram::theta()), q(3));
    assert_eq!(brute_force_p(f.tensor(), &ChordDiagram::theta()), q(3));
    let gl2 = lie_tensor("gl2");
    assert_eq!(brute_force_p(&gl2, &ChordDiagram::theta()), q(4));
    assert_eq!(eval_diagram(&gl2, &ChordDiagram::theta()), q(4));
}

#[test]
fn counterexample_is_two_on_connected_and_gl_invariant() {
    let r = counterexample();
    let h = chordweight::QMatrix::from_ints(&[&[2, 0], &[0, 1]]);
    let hr = r.gl_action(&h).unwrap();
    let mut g = rng(202);
    for _ in 0..40 {
        let m = g.gen_range(1..=3);
        let d = ChordDiagram::new(Perm::random(2 * m, &mut g).images().to_vec(), 0).unwrap();
        if d.is_connected() {
            assert_eq!(eval_diagram(&r, &d), q(2));
            assert_eq!(eval_diagram(&hr, &d), q(2));
        }
    }
}
