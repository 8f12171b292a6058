use serde::{Deserialize, Serialize};

use crate::seeds::ClassicalCode;

/// A connected component of the two-valent-check subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsingComponent {
    pub id: usize,
    /// Bits in the component.
    pub size: usize,
    /// Degree-2 checks in the component (parallel checks count separately).
    pub edges: usize,
    /// Independent cycles, `edges - size + 1`; each is a local meta-check.
    pub cycle_rank: usize,
}

/// Result of scanning a code for regions whose checks are all two-valent.
/// Within such a region excitations are forced to be extended domain walls,
/// so a component with two or more independent meta-check cycles defeats
/// isolability; a single cycle or a tree does not.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IsolabilityReport {
    pub degree_two_checks: usize,
    pub components: Vec<IsingComponent>,
    pub passes: bool,
}

pub fn isolability_check(code: &ClassicalCode) -> IsolabilityReport {
    let h = code.matrix();
    let n = code.n();
    // union-find over bits joined by weight-2 checks
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut pair_checks: Vec<(usize, usize)> = Vec::new();
    for r in 0..h.rows() {
        if h.row_weight(r) == 2 {
            let support = h.row(r).support();
            pair_checks.push((support[0], support[1]));
        }
    }
    for &(u, v) in &pair_checks {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
        }
    }
    let mut sizes: std::collections::BTreeMap<usize, (usize, usize)> = Default::default();
    let mut involved = vec![false; n];
    for &(u, v) in &pair_checks {
        involved[u] = true;
        involved[v] = true;
        let root = find(&mut parent, u.min(v));
        let _ = root;
    }
    for (b, &is_involved) in involved.iter().enumerate() {
        if is_involved {
            let root = find(&mut parent, b);
            sizes.entry(root).or_insert((0, 0)).0 += 1;
        }
    }
    for &(u, _) in &pair_checks {
        let root = find(&mut parent, u);
        sizes.entry(root).or_insert((0, 0)).1 += 1;
    }
    let components: Vec<IsingComponent> = sizes
        .values()
        .enumerate()
        .map(|(id, &(size, edges))| IsingComponent {
            id,
            size,
            edges,
            cycle_rank: (edges + 1).saturating_sub(size),
        })
        .collect();
    let passes = components.iter().all(|c| c.cycle_rank < 2);
    IsolabilityReport {
        degree_two_checks: pair_checks.len(),
        components,
        passes,
    }
}
