//! Simple graphs: the disjoint-union monoid on all graphs and the operad of
//! connected graphs, where an external edge between blocks expands to all
//! cross edges.

use crate::combinatorics::{Label, LabelSet};
use crate::species::{Assembly, Monoid, Operad, Payload, Species, Structure};

fn edges_of(s: &Structure) -> &Vec<(Label, Label)> {
    match &s.payload {
        Payload::Edges(edges) => edges,
        _ => panic!("graph payload expected on {s}"),
    }
}

fn all_pairs(labels: &LabelSet) -> Vec<(Label, Label)> {
    let items = labels.as_slice();
    let mut out = Vec::new();
    for i in 0..items.len() {
        for j in (i + 1)..items.len() {
            out.push((items[i].clone(), items[j].clone()));
        }
    }
    out
}

fn graph(id: &str, labels: &LabelSet, mut edges: Vec<(Label, Label)>) -> Structure {
    edges.sort();
    edges.dedup();
    Structure::new(id, labels.clone(), Payload::Edges(edges))
}

fn enumerate_graphs(id: &str, labels: &LabelSet) -> Vec<Structure> {
    let pairs = all_pairs(labels);
    assert!(pairs.len() < usize::BITS as usize, "too many vertex pairs");
    (0..(1usize << pairs.len()))
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, e)| e.clone())
                .collect();
            graph(id, labels, edges)
        })
        .collect()
}

fn is_connected(labels: &LabelSet, edges: &[(Label, Label)]) -> bool {
    let n = labels.len();
    if n == 0 {
        return false;
    }
    let index =
        |l: &Label| -> usize { labels.as_slice().binary_search(l).expect("edge endpoint") };
    // union-find over vertex indices
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, index(a)), find(&mut parent, index(b)));
        parent[ra] = rb;
    }
    let root = find(&mut parent, 0);
    (0..n).all(|i| find(&mut parent, i) == root)
}

/// Number of connected components of a graph structure.
pub fn component_count(s: &Structure) -> usize {
    let labels = &s.labels;
    let n = labels.len();
    if n == 0 {
        return 0;
    }
    let index =
        |l: &Label| -> usize { labels.as_slice().binary_search(l).expect("edge endpoint") };
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for (a, b) in edges_of(s) {
        let (ra, rb) = (find(&mut parent, index(a)), find(&mut parent, index(b)));
        parent[ra] = rb;
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}

/// The complement of a graph, an isomorphism between the disjoint-union and
/// join monoidal structures.
pub fn complement(s: &Structure) -> Structure {
    let existing = edges_of(s);
    let edges = all_pairs(&s.labels)
        .into_iter()
        .filter(|e| !existing.contains(e))
        .collect();
    graph(&s.species_id, &s.labels, edges)
}

/// G: all simple graphs; the product is disjoint union.
pub struct GraphsMonoid;

impl Species for GraphsMonoid {
    fn id(&self) -> String {
        "G".into()
    }
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
        enumerate_graphs("G", labels)
    }
}

impl Monoid for GraphsMonoid {
    fn identity_element(&self) -> Structure {
        graph("G", &LabelSet::empty(), vec![])
    }
    fn nu(&self, m1: &Structure, m2: &Structure) -> Structure {
        let edges = edges_of(m1).iter().chain(edges_of(m2)).cloned().collect();
        graph("G", &m1.labels.union(&m2.labels), edges)
    }
}

/// Keep all internal edges; each external edge becomes the complete set of
/// cross edges between its two blocks.
fn expand(a: &Assembly, external: &Structure, id: &str) -> Structure {
    let mut edges: Vec<(Label, Label)> = a
        .members()
        .iter()
        .flat_map(|m| edges_of(m).iter().cloned())
        .collect();
    for (b1, b2) in edges_of(external) {
        let m1 = a.member_for_block(b1).expect("external edge endpoint");
        let m2 = a.member_for_block(b2).expect("external edge endpoint");
        for v1 in m1.labels.iter() {
            for v2 in m2.labels.iter() {
                edges.push(if v1 <= v2 {
                    (v1.clone(), v2.clone())
                } else {
                    (v2.clone(), v1.clone())
                });
            }
        }
    }
    graph(id, &a.ground(), edges)
}

/// G_c: connected simple graphs, a suboperad of graphs.
pub struct ConnectedGraphsOperad;

impl Species for ConnectedGraphsOperad {
    fn id(&self) -> String {
        "G_c".into()
    }
    fn is_positive(&self) -> bool {
        true
    }
    fn enumerate(&self, labels: &LabelSet) -> Vec<Structure> {
        enumerate_graphs("G_c", labels)
            .into_iter()
            .filter(|s| is_connected(labels, edges_of(s)))
            .collect()
    }
}

impl Operad for ConnectedGraphsOperad {
    fn identity_on(&self, label: &Label) -> Structure {
        graph("G_c", &LabelSet::singleton(label.clone()), vec![])
    }
    fn eta(&self, a: &Assembly, external: &Structure) -> Structure {
        expand(a, external, "G_c")
    }
}

/// The monop action: the same expansion, with an arbitrary external graph.
pub fn graph_action(a: &Assembly, external: &Structure) -> Structure {
    expand(a, external, "G")
}
