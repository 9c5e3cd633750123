mod common;

use std::collections::BTreeMap;

use common::*;
use tracehom::{Presentation, Trace};

/// One commutation graph on four letters from each isomorphism class.
fn four_letter_graphs() -> Vec<Presentation> {
    let shapes: [&[(usize, usize)]; 11] = [
        &[],
        &[(0, 1)],
        &[(0, 1), (1, 2)],
        &[(0, 1), (2, 3)],
        &[(0, 1), (1, 2), (0, 2)],
        &[(0, 1), (0, 2), (0, 3)],
        &[(0, 1), (1, 2), (2, 3)],
        &[(0, 1), (1, 2), (2, 3), (3, 0)],
        &[(0, 1), (1, 2), (0, 2), (2, 3)],
        &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    ];
    shapes.iter().map(|e| Presentation::from_edges(4, e)).collect()
}

fn parikh(w: &[u8]) -> [u8; 4] {
    let mut v = [0; 4];
    for &a in w {
        v[a as usize] += 1;
    }
    v
}

/// Normal-form equality, projection equality and the commutation closure
/// agree on every word of length ≤ 6 over four letters. Words with different
/// letter counts are never equal, so comparisons run inside each count class
/// against one representative per commutation class.
#[test]
fn uniqueness_on_four_letters() {
    let words = words_up_to(4, 6);
    for p in four_letter_graphs() {
        let adj = adjacency(&p);
        let class = closure_classes(&adj, &words);
        let traces: Vec<Trace> = words.iter().map(|w| to_trace(&p, w)).collect();
        let mut reps: BTreeMap<[u8; 4], Vec<usize>> = BTreeMap::new();
        for i in (0..words.len()).filter(|&i| class[i] == i) {
            reps.entry(parikh(&words[i])).or_default().push(i);
        }
        for (i, w) in words.iter().enumerate() {
            for &r in &reps[&parikh(w)] {
                let same = class[i] == r;
                assert_eq!(traces[i] == traces[r], same, "{w:?} vs {:?} on {p:?}", words[r]);
                assert_eq!(traces[i].equals_via_projections(&traces[r]).unwrap(), same);
            }
        }
    }
}

#[test]
fn trace_counts_match_closure_classes() {
    for p in four_letter_graphs() {
        let words = words_up_to(4, 4);
        let classes = closure_classes(&adjacency(&p), &words);
        let distinct = (0..words.len()).filter(|&i| classes[i] == i).count();
        assert_eq!(tracehom::trace::traces_up_to(&p, 4).len(), distinct, "{p:?}");
    }
}
