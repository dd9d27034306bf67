//! Named graphs used throughout the tests, the CLI and the demo.

use crate::clique::Clique;
use crate::graph::Graph;

/// The five cliques of the worked example, 0-based (`v1` is vertex 0):
/// `{v1..v4}`, `{v2..v6}`, `{v7,v8,v10}`, `{v9,v10}`, `{v10,v11}`.
pub fn example1_cliques() -> Vec<Clique> {
    [
        vec![0, 1, 2, 3],
        vec![1, 2, 3, 4, 5],
        vec![6, 7, 9],
        vec![8, 9],
        vec![9, 10],
    ]
    .into_iter()
    .map(Clique::new)
    .collect()
}

/// The 11-vertex worked example, rebuilt as the union of its five cliques.
pub fn example1() -> Graph {
    graph_from_cliques(11, &example1_cliques())
}

/// Five-vertex graph with two minimum total clique coverings, one of which
/// uses the non-maximal clique `{u1,u2}`. Ids: `u1=0, u2=1, v=2, w1=3, w2=4`.
pub fn witness_w() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (2, 3), (1, 4), (2, 4)]).unwrap()
}

/// Graph whose edges are exactly the pairs inside the given cliques.
pub fn graph_from_cliques(n: usize, cliques: &[Clique]) -> Graph {
    let mut g = Graph::empty(n);
    for c in cliques {
        let vs = c.vertices();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                g.add_edge(u, v).expect("clique vertices in range");
            }
        }
    }
    g
}
