use super::Graph;

/// Isomorphism-class key: equal outputs iff the graphs are isomorphic.
///
/// Vertices are first split into cells by iterated neighbour-colour
/// refinement (seeded with degrees). The refined colouring is
/// label-independent, so only orderings that list cells in colour order
/// need to be tried; among those, the lexicographically smallest
/// upper-triangle adjacency string wins. Cost is the product of the cell
/// factorials, at most `n!`.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    let (key, _) = canonize(g);
    key
}

/// The representative of `g`'s isomorphism class that [`canonical_form`] encodes.
pub fn canonical_labeling(g: &Graph) -> Graph {
    let (_, order) = canonize(g);
    let mut perm = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.permuted(&perm)
}

fn canonize(g: &Graph) -> (Vec<u8>, Vec<usize>) {
    let n = g.order();
    let colors = refine(g);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colors[v], v));
    let mut cells: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for k in 1..=n {
        if k == n || colors[order[k]] != colors[order[start]] {
            cells.push((start, k));
            start = k;
        }
    }

    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    search(g, &cells, 0, &mut order, &mut best);
    let (code, order) = best.unwrap_or_default();
    let mut key = vec![n as u8];
    key.extend(code);
    (key, order)
}

/// Stable colour classes. Colour ids are ranks of sorted signatures, so the
/// final colouring depends only on the isomorphism class.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = distinct(&colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        colors = sigs.iter().map(|s| sorted.binary_search(s).unwrap()).collect();
        let next = distinct(&colors);
        if next == classes {
            return colors;
        }
        classes = next;
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Tries every ordering within each cell, recursing cell by cell.
fn search(
    g: &Graph,
    cells: &[(usize, usize)],
    cell: usize,
    order: &mut Vec<usize>,
    best: &mut Option<(Vec<u8>, Vec<usize>)>,
) {
    if cell == cells.len() {
        let code = encode(g, order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order.clone()));
        }
        return;
    }
    let (lo, hi) = cells[cell];
    permute(g, cells, cell, lo, hi, order, best);
}

fn permute(
    g: &Graph,
    cells: &[(usize, usize)],
    cell: usize,
    k: usize,
    hi: usize,
    order: &mut Vec<usize>,
    best: &mut Option<(Vec<u8>, Vec<usize>)>,
) {
    if hi - k <= 1 {
        search(g, cells, cell + 1, order, best);
        return;
    }
    for i in k..hi {
        order.swap(k, i);
        permute(g, cells, cell, k + 1, hi, order, best);
        order.swap(k, i);
    }
}

/// Upper triangle (column order) of the adjacency matrix with rows and
/// columns taken in `order`, one byte per entry.
fn encode(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            // inverted so that edges on early positions sort first
            out.push(!g.has_edge(order[i], order[j]) as u8);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use itertools::Itertools;

    #[test]
    fn relabelled_path_has_same_key() {
        let p3 = Family::Path(3).build().unwrap();
        let other = Graph::from_edge_list(3, &[(0, 2), (2, 1)]).unwrap();
        assert_eq!(canonical_form(&p3), canonical_form(&other));
        assert_ne!(canonical_form(&p3), canonical_form(&Family::Complete(3).build().unwrap()));
    }

    #[test]
    fn all_relabellings_of_c5_agree() {
        let c5 = Family::Cycle(5).build().unwrap();
        let keys: Vec<_> = (0..5)
            .permutations(5)
            .map(|perm| canonical_form(&c5.permuted(&perm)))
            .unique()
            .collect();
        assert_eq!(keys.len(), 1);
    }

    #[test]
    fn regular_graphs_are_distinguished() {
        // C6 and two disjoint triangles are both 2-regular on six vertices
        let c6 = Family::Cycle(6).build().unwrap();
        let k3 = Family::Complete(3).build().unwrap();
        let two_triangles = k3.disjoint_union(&k3).unwrap();
        assert_ne!(canonical_form(&c6), canonical_form(&two_triangles));
    }

    #[test]
    fn canonical_labeling_is_a_fixed_point() {
        let g = Graph::from_edge_list(5, &[(4, 1), (1, 2), (2, 0), (0, 4), (3, 2)]).unwrap();
        let c = canonical_labeling(&g);
        assert_eq!(canonical_form(&c), canonical_form(&g));
        assert_eq!(canonical_labeling(&c), c);
    }
}
