//! (a,b)-sparsity pebble game: a fast exact rank engine for the
//! vertex-count matroids induced by `a|V(F)| - b`, valid for
//! `0 <= b <= 2a - 1`.

use crate::bits::ElementSet;
use crate::error::{Error, Result};
use crate::graphs::HostGraph;

/// Rank of `f` in the matroid induced by `a|V| - b`, by the pebble game.
pub fn pebble_game_rank(a: usize, b: usize, f: ElementSet, host: &HostGraph) -> Result<usize> {
    if a == 0 || b > 2 * a - 1 {
        return Err(Error::ParamRange(format!(
            "pebble game needs a >= 1 and 0 <= b <= 2a-1, got ({a},{b})"
        )));
    }
    let n = host.n_vertices();
    let mut pebbles = vec![a; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut accepted = 0usize;
    for e in f.iter() {
        let (u, v) = host.edge(e);
        // gather pebbles at u and v until b+1 are present or none can move
        loop {
            if pebbles[u] + pebbles[v] >= b + 1 {
                break;
            }
            if !pull_pebble(u, v, &mut pebbles, &mut out)
                && !pull_pebble(v, u, &mut pebbles, &mut out)
            {
                break;
            }
        }
        if pebbles[u] + pebbles[v] >= b + 1 {
            accepted += 1;
            if pebbles[u] > 0 {
                pebbles[u] -= 1;
                out[u].push(v);
            } else {
                pebbles[v] -= 1;
                out[v].push(u);
            }
        }
    }
    Ok(accepted)
}

/// Independence of `f` under the (a,b) count: all edges accepted.
pub fn pebble_game_independent(a: usize, b: usize, f: ElementSet, host: &HostGraph) -> Result<bool> {
    Ok(pebble_game_rank(a, b, f, host)? == f.len())
}

/// Move one pebble onto `root` along a reversed path, never draining the
/// protected vertex `keep`.
fn pull_pebble(root: usize, keep: usize, pebbles: &mut [usize], out: &mut [Vec<usize>]) -> bool {
    let n = pebbles.len();
    let mut prev: Vec<Option<usize>> = vec![None; n];
    let mut visited = vec![false; n];
    visited[root] = true;
    visited[keep] = true;
    let mut stack = vec![root];
    while let Some(x) = stack.pop() {
        for i in 0..out[x].len() {
            let y = out[x][i];
            if visited[y] {
                continue;
            }
            visited[y] = true;
            prev[y] = Some(x);
            if pebbles[y] > 0 {
                // reverse the path root -> ... -> y
                pebbles[y] -= 1;
                pebbles[root] += 1;
                let mut cur = y;
                while let Some(p) = prev[cur] {
                    // arc p -> cur becomes cur -> p
                    let pos = out[p].iter().position(|&t| t == cur).unwrap();
                    out[p].swap_remove(pos);
                    out[cur].push(p);
                    cur = p;
                }
                return true;
            }
            stack.push(y);
        }
    }
    false
}
