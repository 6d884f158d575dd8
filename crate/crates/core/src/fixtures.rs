use crate::graph::{load_edge_list, Graph, NodeId};

pub(crate) fn figure1() -> Graph {
    load_edge_list(include_str!("../tests/data/figure1.edges").as_bytes(), false)
        .unwrap()
        .0
}

pub(crate) fn figure2() -> Graph {
    load_edge_list(include_str!("../tests/data/figure2.edges").as_bytes(), false)
        .unwrap()
        .0
}

/// Dense id of label `v<label>` in the first figure.
pub(crate) fn v(label: i64) -> NodeId {
    figure1().node_for_original(label).unwrap()
}

/// Dense id of label `w<label>` in the second figure.
pub(crate) fn w(label: i64) -> NodeId {
    figure2().node_for_original(label).unwrap()
}
