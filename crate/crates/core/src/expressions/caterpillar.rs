use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::Result;
use crate::gf::cut_rank_gf4;
use crate::layout::Layout;
use crate::set::VertexSet;

/// A caterpillar rank decomposition: spine nodes `s_1..s_n` in a path, with
/// vertex `spine[i]` hanging off `s_{i+1}` as a pendant leaf.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caterpillar {
    pub spine: Vec<usize>,
}

impl Caterpillar {
    /// One side of every tree edge: each pendant leaf, then each spine prefix.
    pub fn edge_cuts(&self) -> Vec<VertexSet> {
        if self.spine.len() < 2 {
            return Vec::new();
        }
        let pendants = self.spine.iter().map(|&v| VertexSet::singleton(v));
        let prefixes = (1..self.spine.len()).map(|i| self.spine[..i].iter().copied().collect());
        pendants.chain(prefixes).collect()
    }

    /// Largest GF(4) cut rank over all tree edges.
    pub fn width(&self, g: &Digraph) -> usize {
        let all = g.vertices();
        self.edge_cuts()
            .into_iter()
            .map(|s| cut_rank_gf4(g, s, all.difference(s)))
            .max()
            .unwrap_or(0)
    }
}

pub fn layout_to_rank_decomposition(g: &Digraph, layout: &Layout) -> Result<Caterpillar> {
    layout.check_for(g.order())?;
    Ok(Caterpillar {
        spine: layout.order().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::layout::{measure_cost, MeasureKind};

    #[test]
    fn examples() {
        let k4 = bidirectional_complete(4);
        let c = layout_to_rank_decomposition(&k4, &Layout::new(vec![3, 1, 0, 2]).unwrap()).unwrap();
        assert_eq!(c.width(&k4), 1);
        let p4 = directed_path(4);
        assert_eq!(layout_to_rank_decomposition(&p4, &Layout::identity(4)).unwrap().width(&p4), 1);
        let c4 = directed_cycle(4);
        let id = Layout::identity(4);
        let w = layout_to_rank_decomposition(&c4, &id).unwrap().width(&c4);
        assert!(w <= measure_cost(&c4, MeasureKind::Dnw, &id).unwrap());
        assert_eq!(w, measure_cost(&c4, MeasureKind::Dlrw, &id).unwrap());
    }

    #[test]
    fn trivial() {
        let g = Digraph::empty(1).unwrap();
        let c = layout_to_rank_decomposition(&g, &Layout::identity(1)).unwrap();
        assert!(c.edge_cuts().is_empty());
        assert_eq!(c.width(&g), 0);
    }
}
