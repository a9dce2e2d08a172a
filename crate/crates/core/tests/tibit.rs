use cyclotam::arcdiag::{make_jirr, ArcSet};
use cyclotam::tibit::{insertion_tree, Direction, Tibit};
use cyclotam::tito::{Pattern, ReflectionIndex, Tito};

fn t(s: &str, n: usize) -> Tito {
    Tito::parse(s, n).unwrap()
}

fn fig_tree() -> Tibit {
    insertion_tree(&t("[4,3,15][~6][~9,5,7]", 7))
}

#[test]
fn worked_tree_orders() {
    let tree = fig_tree();
    assert!(tree.validate(), "{:?}", tree.diagnose());
    assert_eq!(tree.post_order(), t("[1,4,3,6,5][~7,2]", 7));
    assert_eq!(tree.reverse_post_order(), t("[~6,4,3,5,7,1,2]", 7));
    assert_eq!(tree.spine(), vec![2, 7]);
}

#[test]
fn left_chain_is_identity() {
    let b = Tibit::from_offsets(2, vec![1, 1]).unwrap();
    assert_eq!(b, Tibit::bottom(2));
    assert_eq!(b.post_order(), Tito::identity(2));
    assert_eq!(insertion_tree(&Tito::identity(2)), b);
    assert!(b.inversions().is_empty());
    // Both residues would hang as left children of v_2.
    assert!(Tibit::from_offsets(2, vec![1, 2]).is_err());
}

#[test]
fn invalid_offsets_rejected() {
    assert!(Tibit::from_offsets(3, vec![0, 1, 1]).is_err());
    assert!(!Tibit::from_offsets(3, vec![-2, 1, -3]).map(|x| x.validate()).unwrap_or(false));
    let j35 = insertion_tree(&t("[4,5,3]", 3));
    assert_eq!(j35.parent_offsets(), &[1, -2, 3]);
    assert!(j35.validate());
}

#[test]
fn insertion_tree_constant_on_classes() {
    let x = t("[~1][3,2][~4,5]", 5);
    let tree = insertion_tree(&x);
    assert!(tree.validate());
    assert_eq!(insertion_tree(&tree.post_order()), tree);
}

#[test]
fn descendant_walk() {
    let tree = insertion_tree(&t("[1,2][~3]", 3));
    assert!(tree.is_descendant(7, 3));
    assert!(!tree.is_descendant(3, 7));
}

#[test]
fn rotations_at_the_worked_tree() {
    let tree = fig_tree();
    assert_eq!(tree.rotatable(Direction::Down).len(), 4);
    assert_eq!(tree.rotatable(Direction::Up).len(), 3);
    let want = ArcSet::from_pairs(7, &[(0, 2), (2, 7), (3, 4), (5, 6)]).unwrap();
    assert_eq!(tree.right_edges(), want);
    for c in tree.rotatable(Direction::Down) {
        let lower = tree.rotate(c, Direction::Down).unwrap();
        let back: Vec<_> = lower
            .rotatable(Direction::Up)
            .into_iter()
            .filter_map(|r| lower.rotate(r, Direction::Up).ok())
            .collect();
        assert!(back.contains(&tree));
    }
    assert_eq!(tree.rotate(tree.rotatable(Direction::Up)[0], Direction::Down), Err(cyclotam::Error::WrongEdgeSide));
}

#[test]
fn bottom_has_only_up_rotations() {
    let b = Tibit::bottom(2);
    assert_eq!(b.rotatable(Direction::Up).len(), 2);
    assert!(b.rotatable(Direction::Down).is_empty());
}

#[test]
fn spine_flip_pairs() {
    let j36 = make_jirr(ReflectionIndex::new(3, 6, 3), 3).unwrap();
    let j35 = make_jirr(ReflectionIndex::new(3, 5, 3), 3).unwrap();
    assert_eq!(j36, t("[1,2][~3]", 3));
    assert_eq!(j35, t("[4,5,3]", 3));
    let tree = insertion_tree(&j36);
    assert!(!tree.is_real());
    let down = tree.pispine_down();
    assert_eq!(down, insertion_tree(&j35));
    assert!(down.is_real());
    assert_eq!(down.pispine_down(), down);
    assert_eq!(down.pispine_up().pispine_down(), down);
}

#[test]
fn omega_swaps_extremes() {
    for n in 2..=4 {
        let top = insertion_tree(&Tito::identity(n).psi_reverse());
        assert_eq!(Tibit::bottom(n).omega(), top);
        assert_eq!(top.omega().omega(), top);
    }
}

#[test]
fn post_orders_avoid_patterns() {
    let tree = fig_tree();
    assert!(tree.post_order().avoids(Pattern::P312));
    assert!(tree.reverse_post_order().avoids(Pattern::P132));
}
