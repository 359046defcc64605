use super::{ElemSet, Poset};

/// Maximum antichain together with a minimum chain cover of the same size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Width {
    pub width: usize,
    pub antichain: ElemSet,
    pub chains: Vec<Vec<usize>>,
}

/// Width by Dilworth duality: a maximum matching in the comparability
/// bipartite graph gives a minimum chain cover, and König's theorem turns the
/// matching into an antichain of the same size.
pub fn width(p: &Poset) -> Width {
    let n = p.len();
    let succ: Vec<Vec<usize>> = (0..n).map(|x| (0..n).filter(|&y| p.lt(x, y)).collect()).collect();

    // match_right[y] = left vertex matched to y
    let mut match_left: Vec<Option<usize>> = vec![None; n];
    let mut match_right: Vec<Option<usize>> = vec![None; n];
    for x in 0..n {
        let mut visited = vec![false; n];
        augment(x, &succ, &mut visited, &mut match_left, &mut match_right);
    }

    // Alternating reachability from unmatched left vertices.
    let mut z_left = vec![false; n];
    let mut z_right = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&x| match_left[x].is_none()).collect();
    for &x in &stack {
        z_left[x] = true;
    }
    while let Some(x) = stack.pop() {
        for &y in &succ[x] {
            if match_left[x] == Some(y) || z_right[y] {
                continue;
            }
            z_right[y] = true;
            if let Some(x2) = match_right[y] {
                if !z_left[x2] {
                    z_left[x2] = true;
                    stack.push(x2);
                }
            }
        }
    }
    let antichain: ElemSet = (0..n).filter(|&x| z_left[x] && !z_right[x]).collect();

    let mut chains = Vec::new();
    for start in (0..n).filter(|&y| match_right[y].is_none()) {
        let mut chain = vec![start];
        let mut cur = start;
        while let Some(next) = match_left[cur] {
            chain.push(next);
            cur = next;
        }
        chains.push(chain);
    }
    debug_assert_eq!(chains.len(), antichain.len());

    Width {
        width: antichain.len(),
        antichain,
        chains,
    }
}

fn augment(
    x: usize,
    succ: &[Vec<usize>],
    visited: &mut [bool],
    match_left: &mut [Option<usize>],
    match_right: &mut [Option<usize>],
) -> bool {
    for &y in &succ[x] {
        if visited[y] {
            continue;
        }
        visited[y] = true;
        let free = match match_right[y] {
            None => true,
            Some(x2) => augment(x2, succ, visited, match_left, match_right),
        };
        if free {
            match_left[x] = Some(y);
            match_right[y] = Some(x);
            return true;
        }
    }
    false
}
