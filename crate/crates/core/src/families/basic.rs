use super::FamilyError;
use crate::graph::Graph;

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::InvalidParameter("path needs at least one vertex".into()));
    }
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges(n, &pairs)?)
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::InvalidParameter(format!("cycle length {n} < 3")));
    }
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &pairs)?)
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Result<Graph, FamilyError> {
    if k == 0 {
        return Err(FamilyError::InvalidParameter("star needs at least one leaf".into()));
    }
    let pairs: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Ok(Graph::from_edges(k + 1, &pairs)?)
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::InvalidParameter("complete graph needs a vertex".into()));
    }
    let pairs: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    Ok(Graph::from_edges(n, &pairs)?)
}

/// Decodes a Prüfer sequence into the labeled tree on `seq.len() + 2` vertices.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<Graph, FamilyError> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(FamilyError::InvalidParameter(format!("Prüfer entry {bad} >= {n}")));
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut pairs = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        pairs.push((leaf, x));
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    pairs.push((rest[0], rest[1]));
    Ok(Graph::from_edges(n, &pairs)?)
}

/// All labeled trees on `n` vertices, one per Prüfer sequence.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    let len = n.saturating_sub(2);
    let total = if n < 2 { 0 } else { n.pow(len as u32) };
    (0..total).map(move |mut code| {
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        tree_from_pruefer(&seq).expect("entries are below n")
    })
}
