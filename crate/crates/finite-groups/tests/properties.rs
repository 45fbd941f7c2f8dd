use std::sync::Arc;

use bs_groups::{closure_order, conjugator, cyclic, direct_product, free_action, symmetric, GroupAction, Permutation};
use proptest::prelude::*;

fn perm(deg: usize) -> impl Strategy<Value = Permutation> {
    Just((0..deg).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #[test]
    fn composition_associative((a, b, c) in (1usize..=12).prop_flat_map(|d| (perm(d), perm(d), perm(d)))) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert!(a.inverse().compose(&a).is_identity());
    }

    #[test]
    fn conjugator_identity_random_relabel(p in perm(12), which in 0usize..4) {
        let groups = [cyclic(2), cyclic(3), cyclic(4), direct_product(&cyclic(2), &cyclic(2))];
        let g = Arc::new(groups[which].clone());
        let alpha = free_action(g.clone(), 12).unwrap();
        // β = p ∘ α ∘ p⁻¹ is another free action
        let images = g.elements().map(|x| p.compose(alpha.image(x)).compose(&p.inverse())).collect();
        let beta = GroupAction::new(g.clone(), images).unwrap();
        let phi = conjugator(&alpha, &beta).unwrap();
        for x in g.elements() {
            prop_assert_eq!(alpha.image(x), &phi.inverse().compose(beta.image(x)).compose(&phi));
        }
    }
}

#[test]
fn free_actions_have_no_fixed_points() {
    for g in [cyclic(1), cyclic(5), symmetric(3).unwrap(), direct_product(&cyclic(2), &cyclic(3))] {
        let n = g.order();
        let a = free_action(Arc::new(g), 2 * n).unwrap();
        for x in 1..n {
            assert_eq!(a.image(x).fixed_points(), 0);
        }
    }
}

#[test]
fn symmetric_orders_and_closure() {
    let s4 = symmetric(4).unwrap();
    assert_eq!(s4.order(), 24);
    let s5 = symmetric(5).unwrap();
    assert_eq!(s5.order(), 120);
    let t = Permutation::from_images(vec![1, 0, 2, 3, 4]).unwrap();
    let c = Permutation::from_images(vec![1, 2, 3, 4, 0]).unwrap();
    assert_eq!(closure_order(&[t, c], 5), 120);
}
