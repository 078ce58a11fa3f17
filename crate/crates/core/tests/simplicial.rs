mod common;

use bderange::families::{engine, Family};
use bderange::simplicial::{
    barycentric_subdivision, edgewise_h, k_n, signed_subset_poset, simplex, Face, SimplicialComplex,
};
use bderange::IntPoly;
use common::{eulerian, ip};

fn boundary_of_triangle() -> SimplicialComplex<u32> {
    SimplicialComplex::from_facets(vec![0, 1, 2], [Face::new([0, 1]), Face::new([1, 2]), Face::new([0, 2])]).unwrap()
}

#[test]
fn kn_restricted_to_a_face_looks_like_a_smaller_kn() {
    for n in 1..=4 {
        let k = k_n(n, false).unwrap();
        let base = simplex(n).unwrap();
        for f in base.faces() {
            let r = k.over_simplex.restriction(f).unwrap();
            let small = k_n(f.len(), false).unwrap();
            assert_eq!(r.face_counts(), small.complex().face_counts(), "n={n} F={f:?}");
            assert_eq!(r.h_polynomial(), small.complex().h_polynomial(), "n={n} F={f:?}");
        }
    }
}

#[test]
fn kn_over_each_sd_face_has_power_of_two_facets() {
    for n in 1..=4 {
        let k = k_n(n, false).unwrap();
        for f in k.sd.complex().faces() {
            let r = k.over_sd.restrict(f).unwrap();
            assert_eq!(r.complex().facets().len(), 1 << (f.len() - 1), "n={n} face {f:?}");
            let want = if f.len() % 2 == 0 {
                IntPoly::monomial(1, f.len() / 2)
            } else {
                IntPoly::zero()
            };
            assert_eq!(r.local_h().unwrap(), want, "n={n} face {f:?}");
        }
    }
}

#[test]
fn kn_facet_counts() {
    for n in 1..=5 {
        let k = k_n(n, false).unwrap();
        let want = (1usize << (n - 1)) * (1..=n).product::<usize>();
        assert_eq!(k.complex().facets().len(), want);
        assert!(k.complex().is_pure());
    }
}

#[test]
fn sd_of_simplex_has_eulerian_h() {
    for n in 1..=5 {
        let sd = barycentric_subdivision(&simplex(n).unwrap()).unwrap();
        assert_eq!(sd.complex().h_polynomial(), ip(&eulerian(n)), "n={n}");
        let want = engine().value(Family::DA, n).unwrap();
        assert_eq!(sd.local_h().unwrap(), want, "n={n}");
    }
}

#[test]
fn kn_local_h_dominates_sd_local_h() {
    for n in 1..=5 {
        let k = k_n(n, false).unwrap();
        let diff = &k.over_simplex.local_h().unwrap() - &k.sd.local_h().unwrap();
        assert!(diff.is_nonnegative(), "n={n}: {diff}");
    }
}

#[test]
fn signed_subset_flag_vectors() {
    for n in 1..=3 {
        let p = signed_subset_poset(n).unwrap();
        let fv = p.flag_vectors(n, |s| n + 1 - s.len()).unwrap();
        assert_eq!(fv.alpha[&0], 1);
        assert!(fv.beta.values().all(|&b| b >= 0), "n={n}: {:?}", fv.beta);
        let mut sums = vec![0i64; n + 1];
        for (&s, &b) in &fv.beta {
            sums[s.count_ones() as usize] += b;
        }
        let h = k_n(n, false).unwrap().complex().h_polynomial();
        assert_eq!(IntPoly::from_slice(&sums), h, "n={n}");
    }
}

#[test]
fn join_multiplies_h_polynomials() {
    let tri = boundary_of_triangle();
    let shifted = tri.relabel(|v| v + 10);
    let j = tri.join(&shifted).unwrap();
    assert_eq!(j.h_polynomial(), &tri.h_polynomial() * &shifted.h_polynomial());
    assert!(tri.join_h_check(&shifted).unwrap());
    let edge = simplex(2).unwrap();
    assert_eq!(
        tri.join(&edge.relabel(|v| v + 10)).unwrap().h_polynomial(),
        tri.h_polynomial()
    );
}

#[test]
fn edgewise_examples() {
    let a3 = IntPoly::from_slice(&[1, 4, 1]);
    assert_eq!(edgewise_h(&a3, 3, 2).unwrap(), IntPoly::from_slice(&[1, 16, 7]));
    let h = IntPoly::from_slice(&[1, 5, 2]);
    assert_eq!(edgewise_h(&h, 4, 1).unwrap(), h);
    assert_eq!(edgewise_h(&IntPoly::one(), 1, 3).unwrap(), IntPoly::one());
    assert!(edgewise_h(&h, 2, 0).is_err());
    for n in 1..=7 {
        let b_plus = engine().value(Family::BPlus, n).unwrap();
        assert_eq!(edgewise_h(&ip(&eulerian(n)), n, 2).unwrap(), b_plus, "n={n}");
    }
}

#[test]
fn links_and_boundaries() {
    let tri = boundary_of_triangle();
    assert_eq!(tri.h_polynomial(), IntPoly::from_slice(&[1, 1, 1]));
    for f in tri.facets() {
        assert_eq!(tri.link(&f).unwrap().h_polynomial(), IntPoly::one());
    }
    let link = tri.link(&Face::new([0])).unwrap();
    assert_eq!(link.face_counts(), vec![1, 2]);
    let k = k_n(3, false).unwrap();
    for f in k.complex().facets() {
        assert_eq!(k.complex().link(&f).unwrap().h_polynomial(), IntPoly::one());
    }
}
