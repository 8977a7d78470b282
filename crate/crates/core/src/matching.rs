//! Enumeration of matchings and index subsets.

/// All perfect matchings of `items` (which must have even length), each as a
/// list of pairs `(a, b)` with `a` before `b` in `items`. Matchings come out
/// in a deterministic order; there are `(n-1)!!` of them.
pub fn perfect_matchings(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    fn go(rest: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(acc.clone());
            return;
        };
        for (k, &partner) in tail.iter().enumerate() {
            let mut remaining = tail.to_vec();
            remaining.remove(k);
            acc.push((first, partner));
            go(&remaining, acc, out);
            acc.pop();
        }
    }
    assert!(items.len().is_multiple_of(2), "perfect matchings need an even number of items");
    let mut out = Vec::new();
    go(items, &mut Vec::new(), &mut out);
    out
}

/// All partial matchings of `{0..n}` (including the empty one).
pub fn partial_matchings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(next: usize, used: &mut Vec<bool>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let n = used.len();
        let Some(i) = (next..n).find(|&i| !used[i]) else {
            out.push(acc.clone());
            return;
        };
        used[i] = true;
        // i unmatched
        go(i + 1, used, acc, out);
        for j in i + 1..n {
            if !used[j] {
                used[j] = true;
                acc.push((i, j));
                go(i + 1, used, acc, out);
                acc.pop();
                used[j] = false;
            }
        }
        used[i] = false;
    }
    let mut out = Vec::new();
    go(0, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

/// All `k`-element subsets of `{0..n}` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for i in start..n {
            if n - i < k - acc.len() {
                break;
            }
            acc.push(i);
            go(i + 1, n, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}
