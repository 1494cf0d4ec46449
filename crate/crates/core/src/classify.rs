//! Structural classes in which every MIS is robust: complete bipartite
//! graphs and sputniks.

use serde::Serialize;

use crate::decompose::biconnected_components;
use crate::error::Result;
use crate::graph::{Bipartition, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub complete_bipartite: bool,
    pub sputnik: bool,
    pub rmis_forall: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bipartition: Option<Bipartition>,
}

/// The bipartition of a complete bipartite graph. A single vertex is not
/// complete bipartite (one side would be empty).
pub fn is_complete_bipartite(g: &Graph) -> Result<Option<Bipartition>> {
    g.require_connected()?;
    let Some(mut parts) = g.is_bipartite() else {
        return Ok(None);
    };
    let part = parts.pop().expect("connected graph has one component");
    let complete = !part.second.is_empty() && g.m() == part.first.len() * part.second.len();
    Ok(complete.then_some(part))
}

/// Every vertex on a cycle, i.e. in a block of three or more vertices, has a
/// degree-1 neighbour.
pub fn is_sputnik(g: &Graph) -> Result<bool> {
    let blocks = biconnected_components(g)?;
    let mut on_cycle = vec![false; g.n()];
    for block in blocks.iter().filter(|b| b.len() >= 3) {
        for &v in block {
            on_cycle[g.index_of(v).unwrap()] = true;
        }
    }
    Ok((0..g.n())
        .filter(|&a| on_cycle[a])
        .all(|a| g.adj(a).iter().any(|&b| g.adj(b).len() == 1)))
}

pub fn in_rmis_forall(g: &Graph) -> Result<ClassVerdict> {
    let bipartition = is_complete_bipartite(g)?;
    let sputnik = is_sputnik(g)?;
    let complete_bipartite = bipartition.is_some();
    Ok(ClassVerdict {
        complete_bipartite,
        sputnik,
        rmis_forall: complete_bipartite || sputnik,
        bipartition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::VertexId;

    fn g(text: &str) -> Graph {
        Graph::from_edge_list(text).unwrap()
    }

    #[test]
    fn complete_bipartite() {
        let c4 = is_complete_bipartite(&g("0 1\n1 2\n2 3\n3 0"))
            .unwrap()
            .unwrap();
        assert_eq!(c4.first, vec![VertexId(0), VertexId(2)]);
        assert_eq!(c4.second, vec![VertexId(1), VertexId(3)]);
        let k11 = is_complete_bipartite(&g("0 1")).unwrap().unwrap();
        assert_eq!(
            (k11.first, k11.second),
            (vec![VertexId(0)], vec![VertexId(1)])
        );
        assert_eq!(
            is_complete_bipartite(&g("0 1\n1 2\n1 3\n2 3\n2 4")).unwrap(),
            None
        );
        assert_eq!(is_complete_bipartite(&g("0")).unwrap(), None);
        // P4 is bipartite but not complete
        assert_eq!(is_complete_bipartite(&g("0 1\n1 2\n2 3")).unwrap(), None);
        assert_eq!(
            is_complete_bipartite(&g("0 1\n2 3")),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn sputniks() {
        assert!(is_sputnik(&g("0 1\n1 2\n1 3\n3 4")).unwrap());
        assert!(!is_sputnik(&g("0 1\n1 2\n1 3\n2 3\n2 4")).unwrap());
        assert!(is_sputnik(&g("0 1\n1 2\n2 0\n0 3\n1 4\n2 5")).unwrap());
        assert!(is_sputnik(&g("0")).unwrap());
    }

    #[test]
    fn verdicts() {
        assert!(
            in_rmis_forall(&g("0 1\n1 2\n2 3\n3 0"))
                .unwrap()
                .rmis_forall
        );
        assert!(!in_rmis_forall(&g("0 1\n1 2\n2 0")).unwrap().rmis_forall);
        let bull = in_rmis_forall(&g("0 1\n1 2\n1 3\n2 3\n2 4")).unwrap();
        assert!(!bull.rmis_forall && !bull.sputnik && !bull.complete_bipartite);
        let k1 = in_rmis_forall(&g("0")).unwrap();
        assert!(k1.rmis_forall && k1.sputnik && !k1.complete_bipartite);
    }
}
