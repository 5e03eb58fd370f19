//! Named Seifert data sets with hand-checked Alexander polynomials.

use std::collections::BTreeMap;

use crate::algebra::rat::int;
use crate::algebra::RatMatrix;
use crate::seifert::{dual_data, SeifertBlock, SeifertData};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub data: SeifertData,
}

pub const NAMES: [&str; 4] = ["unknot", "trefoil", "figure-eight", "trefoil-n3"];

fn square(rows: [[i64; 2]; 2]) -> RatMatrix {
    RatMatrix::from_fn(2, 2, |r, c| int(rows[r][c]))
}

/// `n` empty blocks.
pub fn unknot(n: usize) -> SeifertData {
    SeifertData::trivial(n)
}

/// `n = 1`, `V^+ = [[-1, 1], [-1, 0]]`; `Delta = t - 1 + t^-1`.
pub fn trefoil() -> SeifertData {
    SeifertData::from_plus(1, true, vec![square([[-1, 1], [-1, 0]])])
}

/// `n = 1`, `V^+ = [[0, 1], [1, -1]]`; `Delta = -t + 3 - t^-1`.
pub fn figure_eight() -> SeifertData {
    SeifertData::from_plus(1, true, vec![square([[0, 1], [1, -1]])])
}

/// `n = 3` with the trefoil pair in degree 1, its dual in degree 3 and an
/// empty middle block.
pub fn trefoil_n3() -> SeifertData {
    let low = trefoil().block(1).cloned().expect("trefoil has a degree-1 block");
    let high = dual_data(&trefoil()).block(1).cloned().expect("dual keeps the block");
    let blocks = BTreeMap::from([(1, low), (2, SeifertBlock::empty()), (3, high)]);
    SeifertData::new(3, true, blocks)
}

/// All entries; `unknot_n` sets the dimension of the unknot.
pub fn entries(unknot_n: usize) -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "unknot",
            description: "all blocks empty",
            data: unknot(unknot_n),
        },
        CatalogEntry {
            name: "trefoil",
            description: "n = 1, V+ = [[-1,1],[-1,0]]",
            data: trefoil(),
        },
        CatalogEntry {
            name: "figure-eight",
            description: "n = 1, V+ = [[0,1],[1,-1]]",
            data: figure_eight(),
        },
        CatalogEntry {
            name: "trefoil-n3",
            description: "n = 3, trefoil pair in d = 1, its dual transform in d = 3",
            data: trefoil_n3(),
        },
    ]
}

pub fn lookup(name: &str, unknot_n: usize) -> Option<CatalogEntry> {
    entries(unknot_n).into_iter().find(|e| e.name == name)
}
