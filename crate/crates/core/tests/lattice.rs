use cyclotam::arcdiag::{noncrossing_diagrams, Variant};
use cyclotam::lattice::{quotient_to_affine, LatticeModel};

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn element_counts() {
    for n in 2..=5usize {
        let c = LatticeModel::build(n, Variant::Cyclic).unwrap();
        let a = LatticeModel::build(n, Variant::Affine).unwrap();
        let nn = n as u64;
        assert_eq!(c.len() as u64, binom(2 * nn, nn), "cyclic n={n}");
        assert_eq!(a.len() as u64, binom(2 * nn, nn) - binom(2 * nn - 2, nn - 1), "affine n={n}");
    }
}

#[test]
fn diagrams_match_elements() {
    for n in 2..=4usize {
        for v in [Variant::Cyclic, Variant::Affine] {
            let l = LatticeModel::build(n, v).unwrap();
            let ds = noncrossing_diagrams(n, v);
            assert_eq!(ds.len(), l.len());
            for d in &ds {
                assert!(l.find(d).is_some(), "{d} missing for {v:?}");
            }
        }
    }
}

#[test]
fn lattice_laws_and_semidistributivity() {
    for n in 2..=4usize {
        for v in [Variant::Cyclic, Variant::Affine] {
            let l = LatticeModel::build(n, v).unwrap();
            assert!(l.check_lattice_laws(), "n={n} {v:?}");
            assert!(l.check_semidistributive(), "n={n} {v:?}");
            assert!(l.check_selfdual(), "n={n} {v:?}");
        }
    }
}

#[test]
fn join_irreducibles_and_rowmotion() {
    for n in 2..=4usize {
        let c = LatticeModel::build(n, Variant::Cyclic).unwrap();
        assert_eq!(c.jirr().len(), n * n);
        let a = LatticeModel::build(n, Variant::Affine).unwrap();
        assert_eq!(a.jirr().len(), n * (n - 1));
        for l in [&c, &a] {
            for u in 0..l.len() {
                assert_eq!(l.can_meet_rep(l.rowmotion(u)), l.can_join_rep(u));
                assert_eq!(&l.can_join_rep(u), &l.element(u).arcs);
            }
        }
    }
}

#[test]
fn quotient_fibers_are_intervals() {
    let n = 3;
    let c = LatticeModel::build(n, Variant::Cyclic).unwrap();
    let a = LatticeModel::build(n, Variant::Affine).unwrap();
    let (map, fibers) = quotient_to_affine(&c, &a);
    assert_eq!(map.len(), c.len());
    for f in fibers {
        assert!(!f.is_empty());
    }
    for (x, y) in c.covers() {
        assert!(a.leq(map[x], map[y]));
    }
}

#[test]
fn worked_meet_and_its_affine_image() {
    let n = 3;
    let c = LatticeModel::build(n, Variant::Cyclic).unwrap();
    let t = |s: &str| cyclotam::Tito::parse(s, n).unwrap();
    let (x, y) = (c.find_tito(&t("[1][~2,0]")).unwrap(), c.find_tito(&t("[2][~3,1]")).unwrap());
    let m = c.meet(x, y);
    assert_eq!(c.element(m).tito, t("[1,2][~3]"));
    assert_eq!(c.join(c.bottom(), x), x);
    let a = LatticeModel::build(n, Variant::Affine).unwrap();
    let (map, _) = quotient_to_affine(&c, &a);
    assert_eq!(a.element(map[m]).tito, t("[4,5,3]"));
    assert_eq!(a.meet(map[x], map[y]), map[m]);
}

#[test]
fn hexagon() {
    let c = LatticeModel::build(2, Variant::Cyclic).unwrap();
    assert_eq!(c.len(), 6);
    for x in 0..6 {
        let (u, d) = (c.up_covers(x).len(), c.down_covers(x).len());
        if x == c.bottom() || x == c.top() {
            assert_eq!(u + d, 2);
        } else {
            assert_eq!((u, d), (1, 1));
        }
    }
    let mut sizes: Vec<usize> = c.orbits().iter().map(|o| o.len()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![2, 4]);
    assert!(c.can_join_rep(c.bottom()).is_empty());
    let (x, y) = c.covers()[0];
    assert!(c.edge_label(x, y).is_ok());
    assert_eq!(c.edge_label(c.bottom(), c.top()), Err(cyclotam::Error::NotACover));
}
