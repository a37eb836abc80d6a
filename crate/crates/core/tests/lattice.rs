use burnside_core::catalog::{build, catalog_groups};
use burnside_core::oracle::{moebius_to_top, subgroups_by_subsets};
use burnside_core::topology::class_poset;
use burnside_core::{closure, enumerate_subgroups, is_isomorphic, Analysis, Permutation};

fn perm(word: &str, degree: usize) -> Permutation {
    Permutation::parse_cycles(word, degree).unwrap()
}

#[test]
fn matches_subset_oracle_up_to_order_16() {
    for group in catalog_groups(16).unwrap() {
        let lattice = enumerate_subgroups(&group).unwrap();
        let mut ours: Vec<Vec<usize>> = lattice
            .subgroups()
            .iter()
            .map(|s| s.elements.iter().collect())
            .collect();
        ours.sort();
        assert_eq!(
            ours,
            subgroups_by_subsets(&group).unwrap(),
            "{}",
            group.name()
        );
    }
}

#[test]
fn mu_one_g_matches_row_recursion() {
    for group in catalog_groups(16).unwrap() {
        let a = Analysis::new(&group).unwrap();
        let subs = subgroups_by_subsets(&group).unwrap();
        let row = moebius_to_top(&subs);
        let trivial = subs.iter().position(|s| s.len() == 1).unwrap();
        assert_eq!(
            a.mu.get(a.lattice.trivial(), a.lattice.top()),
            row[trivial],
            "{}",
            group.name()
        );
    }
}

#[test]
fn known_subgroup_counts() {
    let count = |s: &str| enumerate_subgroups(&build(s).unwrap()).unwrap().len();
    assert_eq!(count("S4"), 30);
    assert_eq!(count("A4"), 10);
    assert_eq!(count("A5"), 59);
    assert_eq!(count("S5"), 156);
}

#[test]
fn classical_moebius_values() {
    let mu = |s: &str| {
        let a = Analysis::new(&build(s).unwrap()).unwrap();
        a.mu.get(a.lattice.trivial(), a.lattice.top())
    };
    assert_eq!(mu("S3"), 3);
    assert_eq!(mu("S4"), -12);
    assert_eq!(mu("A4"), 4);
    assert_eq!(mu("A5"), -60);
    assert_eq!(mu("S5"), 60);
    assert_eq!(mu("C2 x C2 x C2"), -8);
}

#[test]
fn s5_maximal_subgroups() {
    let s5 = build("S5").unwrap();
    let l = enumerate_subgroups(&s5).unwrap();
    let maximal = l.maximal_subgroups();
    let mut orders: Vec<usize> = maximal.iter().map(|&i| l.order(i)).collect();
    orders.sort_unstable();
    let mut expected = vec![12; 10];
    expected.extend([20; 6]);
    expected.extend([24; 5]);
    expected.push(60);
    assert_eq!(orders, expected);

    let a5 = l.find_elements(build("A5").unwrap().elements()).unwrap();
    assert!(maximal.contains(&a5));
    let stabiliser: Vec<Permutation> = s5
        .elements()
        .iter()
        .filter(|g| g.apply(4) == 4)
        .cloned()
        .collect();
    assert!(maximal.contains(&l.find_elements(&stabiliser).unwrap()));
    let s2_s3 = closure(&[perm("(12)", 5), perm("(345)", 5), perm("(34)", 5)], 5).unwrap();
    assert!(maximal.contains(&l.find_elements(s2_s3.elements()).unwrap()));
    let f20 = closure(&[perm("(12345)", 5), perm("(2354)", 5)], 5).unwrap();
    assert_eq!(f20.order(), 20);
    assert!(maximal.contains(&l.find_elements(f20.elements()).unwrap()));
}

#[test]
fn five_cycle_class_poset_is_its_normaliser() {
    let s5 = build("S5").unwrap();
    let l = enumerate_subgroups(&s5).unwrap();
    let a5 = l.find_elements(build("A5").unwrap().elements()).unwrap();
    let c5 = closure(&[perm("(12345)", 5)], 5).unwrap();
    let c = l.find_elements(c5.elements()).unwrap();
    let f20 = closure(&[perm("(12345)", 5), perm("(2354)", 5)], 5).unwrap();
    let poset = class_poset(&l, a5, c).unwrap();
    assert_eq!(
        poset.members,
        vec![l.find_elements(f20.elements()).unwrap()]
    );
}

#[test]
fn quotients_have_expected_shape() {
    let s4 = build("S4").unwrap();
    let l = enumerate_subgroups(&s4).unwrap();
    let v4 = l
        .normal_subgroups()
        .into_iter()
        .find(|&n| l.order(n) == 4)
        .unwrap();
    let q = l.quotient(v4).unwrap();
    assert!(is_isomorphic(&q.group, &build("S3").unwrap()).unwrap());
    // the element map is a homomorphism
    let t = l.table();
    for a in 0..s4.order() {
        for b in 0..s4.order() {
            let lhs = q.element_map[t.mul(a, b)];
            let rhs = q
                .group
                .index_of(
                    &q.group
                        .element(q.element_map[a])
                        .compose(q.group.element(q.element_map[b]))
                        .unwrap(),
                )
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn lattice_limit_is_enforced() {
    let s5 = build("S5").unwrap();
    assert!(burnside_core::lattice::enumerate_subgroups_with_limit(&s5, 100).is_err());
}
