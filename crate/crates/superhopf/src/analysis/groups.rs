use serde::Serialize;

use crate::field::Field;
use crate::hopfcore::HopfSuperAlgebra;
use crate::linalg::Vector;

pub use crate::catalog::group::invariant_factors as abelian_invariants;

/// G(H) with its multiplication table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupLikes<F> {
    pub elements: Vec<Vector<F>>,
    pub labels: Vec<String>,
    /// table[a][b] = index of g_a g_b.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub orders: Vec<u64>,
    pub abelian: bool,
    /// Invariant factors when G(H) is abelian.
    pub invariant_factors: Vec<u64>,
}

fn leading<F: Field>(v: &[F]) -> usize {
    v.iter().position(|x| !x.is_zero()).unwrap_or(v.len())
}

impl<F: Field> GroupLikes<F> {
    pub fn new(h: &HopfSuperAlgebra<F>, mut elements: Vec<Vector<F>>) -> Self {
        elements.sort_by_cached_key(|v| (leading(v), h.format_vec(v)));
        let labels: Vec<String> = elements.iter().map(|v| h.format_vec(v)).collect();
        let find = |v: &Vector<F>| elements.iter().position(|e| e == v).expect("group-likes are closed under products");
        let table: Vec<Vec<usize>> =
            elements.iter().map(|a| elements.iter().map(|b| find(&h.mul(a, b))).collect()).collect();
        let identity = find(h.unit());
        let orders: Vec<u64> = (0..elements.len())
            .map(|i| {
                let (mut x, mut k) = (i, 1u64);
                while x != identity {
                    x = table[x][i];
                    k += 1;
                }
                k
            })
            .collect();
        let n = elements.len();
        let abelian = (0..n).all(|a| (0..n).all(|b| table[a][b] == table[b][a]));
        let invariant_factors = if abelian { abelian_invariants(&orders) } else { vec![] };
        GroupLikes { elements, labels, table, identity, orders, abelian, invariant_factors }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, v: &[F]) -> Option<usize> {
        self.elements.iter().position(|e| e.as_slice() == v)
    }

    pub fn index_of_label(&self, l: &str) -> Option<usize> {
        self.labels.iter().position(|x| x == l)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.len()).find(|&b| self.table[a][b] == self.identity).expect("finite group")
    }

    /// Greedy generating set.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = vec![];
        let mut span = vec![self.identity];
        let mut order: Vec<usize> = (0..self.len()).collect();
        // larger orders first gives shorter generating sets
        order.sort_by_key(|&i| std::cmp::Reverse(self.orders[i]));
        for i in order {
            if span.contains(&i) {
                continue;
            }
            gens.push(i);
            span = self.closure(&gens);
        }
        gens
    }

    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut span = vec![self.identity];
        let mut k = 0;
        while k < span.len() {
            for &g in gens {
                let y = self.table[span[k]][g];
                if !span.contains(&y) {
                    span.push(y);
                }
            }
            k += 1;
        }
        span.sort();
        span
    }

    /// All isomorphisms to `other` as index maps, via images of generators.
    pub fn isomorphisms_to(&self, other: &GroupLikes<F>) -> Vec<Vec<usize>> {
        group_isomorphisms(&self.table, self.identity, &self.orders, &other.table, other.identity, &other.orders)
    }
}

/// Isomorphisms between two groups given by multiplication tables.
pub fn group_isomorphisms(
    t1: &[Vec<usize>],
    id1: usize,
    ord1: &[u64],
    t2: &[Vec<usize>],
    id2: usize,
    ord2: &[u64],
) -> Vec<Vec<usize>> {
    let n = t1.len();
    if n != t2.len() {
        return vec![];
    }
    let mut sorted1 = ord1.to_vec();
    let mut sorted2 = ord2.to_vec();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 {
        return vec![];
    }
    // greedy generators of the first group
    let mut gens: Vec<usize> = vec![];
    let mut span = vec![id1];
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| std::cmp::Reverse(ord1[i]));
    for i in idx {
        if span.contains(&i) {
            continue;
        }
        gens.push(i);
        span = vec![id1];
        let mut k = 0;
        while k < span.len() {
            for &g in &gens {
                let y = t1[span[k]][g];
                if !span.contains(&y) {
                    span.push(y);
                }
            }
            k += 1;
        }
    }
    let choices: Vec<Vec<usize>> = gens.iter().map(|&g| (0..n).filter(|&y| ord2[y] == ord1[g]).collect()).collect();
    let total: usize = choices.iter().map(|c| c.len()).product();
    let mut out = vec![];
    'codes: for mut code in 0..total {
        let imgs: Vec<usize> = choices
            .iter()
            .map(|c| {
                let v = c[code % c.len()];
                code /= c.len();
                v
            })
            .collect();
        let mut phi = vec![usize::MAX; n];
        phi[id1] = id2;
        let mut queue = vec![id1];
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k];
            for (gi, &g) in gens.iter().enumerate() {
                let y = t1[x][g];
                let fy = t2[phi[x]][imgs[gi]];
                if phi[y] == usize::MAX {
                    phi[y] = fy;
                    queue.push(y);
                } else if phi[y] != fy {
                    continue 'codes;
                }
            }
            k += 1;
        }
        let mut seen = vec![false; n];
        for &v in &phi {
            if v == usize::MAX || seen[v] {
                continue 'codes;
            }
            seen[v] = true;
        }
        out.push(phi);
    }
    out
}
