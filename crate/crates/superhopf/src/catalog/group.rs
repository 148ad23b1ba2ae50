use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::field::RootField;

/// A finite abelian group ∏ C_{n_i}. Elements are exponent tuples; the
/// flat index runs with the first factor fastest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupData {
    pub factors: Vec<u64>,
    pub names: Vec<String>,
}

/// A character, χ(gen_i) = ζ_{n_i}^{k_i}.
pub type CharExp = Vec<i64>;

impl GroupData {
    pub fn new(factors: &[u64], names: &[&str]) -> Self {
        assert_eq!(factors.len(), names.len());
        assert!(factors.iter().all(|&n| n >= 1));
        GroupData { factors: factors.to_vec(), names: names.iter().map(|s| s.to_string()).collect() }
    }

    pub fn trivial() -> Self {
        GroupData { factors: vec![], names: vec![] }
    }

    pub fn cyclic(n: u64, name: &str) -> Self {
        Self::new(&[n], &[name])
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product::<u64>() as usize
    }

    pub fn exponent(&self) -> u64 {
        self.factors.iter().fold(1, |a, &b| a.lcm(&b))
    }

    pub fn index(&self, e: &[u64]) -> usize {
        let mut idx = 0usize;
        for (i, &n) in self.factors.iter().enumerate().rev() {
            idx = idx * n as usize + (e[i] % n) as usize;
        }
        idx
    }

    pub fn element(&self, mut idx: usize) -> Vec<u64> {
        self.factors
            .iter()
            .map(|&n| {
                let e = (idx % n as usize) as u64;
                idx /= n as usize;
                e
            })
            .collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.factors.iter().enumerate().map(|(i, &n)| (a[i] + b[i]) % n).collect()
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.index(&self.mul(&self.element(a), &self.element(b)))
    }

    pub fn pow(&self, a: &[u64], k: i64) -> Vec<u64> {
        self.factors
            .iter()
            .enumerate()
            .map(|(i, &n)| (a[i] as i64 * k).rem_euclid(n as i64) as u64)
            .collect()
    }

    pub fn identity(&self) -> Vec<u64> {
        vec![0; self.rank()]
    }

    pub fn generator(&self, i: usize) -> Vec<u64> {
        let mut e = self.identity();
        e[i] = 1 % self.factors[i];
        e
    }

    pub fn order_of(&self, a: &[u64]) -> u64 {
        self.factors.iter().enumerate().fold(1, |acc, (i, &n)| acc.lcm(&(n / n.gcd(&a[i]))))
    }

    /// χ(a) as an exponent of ζ_E, E the group exponent.
    pub fn char_exp(&self, chi: &[i64], a: &[u64]) -> i64 {
        let e = self.exponent() as i64;
        let mut t = 0i64;
        for (i, &n) in self.factors.iter().enumerate() {
            t += chi[i] * a[i] as i64 * (e / n as i64);
        }
        t.rem_euclid(e)
    }

    pub fn char_value<F: RootField>(&self, chi: &[i64], a: &[u64]) -> F {
        F::zeta(self.exponent(), self.char_exp(chi, a)).expect("root of unity outside the scalar field")
    }

    pub fn char_mul(&self, a: &[i64], b: &[i64]) -> CharExp {
        self.factors.iter().enumerate().map(|(i, &n)| (a[i] + b[i]).rem_euclid(n as i64)).collect()
    }

    pub fn char_pow(&self, a: &[i64], k: i64) -> CharExp {
        self.factors.iter().enumerate().map(|(i, &n)| (a[i] * k).rem_euclid(n as i64)).collect()
    }

    pub fn char_is_trivial(&self, chi: &[i64]) -> bool {
        self.factors.iter().enumerate().all(|(i, &n)| chi[i].rem_euclid(n as i64) == 0)
    }

    pub fn label(&self, a: &[u64]) -> String {
        let mut s = String::new();
        for (i, &e) in a.iter().enumerate() {
            match e {
                0 => {}
                1 => s.push_str(&self.names[i]),
                _ => s.push_str(&format!("{}^{}", self.names[i], e)),
            }
        }
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }
}

/// Invariant factors of a finite abelian group from its element orders:
/// for each prime p, the counts of elements of order dividing p^k fix the
/// p-primary part.
pub fn invariant_factors(orders: &[u64]) -> Vec<u64> {
    let n = orders.len() as u64;
    let mut primes = vec![];
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    // per prime, the partition λ with #{x : x^{p^k} = 1} = p^{Σ min(λ_i, k)}
    let mut primary: Vec<Vec<u64>> = vec![];
    for &p in &primes {
        let mut parts: Vec<u32> = vec![];
        let mut prev_log = 0u32;
        let mut k = 1u32;
        loop {
            let pk = p.pow(k);
            let count = orders.iter().filter(|&&o| pk % o == 0 && o % p.pow(0) == 0 && is_p_power(o, p)).count() as u64;
            let log = count.ilog(p);
            // number of parts ≥ k
            let ge_k = log - prev_log;
            if ge_k == 0 {
                break;
            }
            parts.push(ge_k);
            prev_log = log;
            k += 1;
        }
        // parts[k-1] = #{λ_i ≥ k}; convert to the partition itself
        let count = parts.first().copied().unwrap_or(0) as usize;
        let mut lambda = vec![0u32; count];
        for (k, &c) in parts.iter().enumerate() {
            for l in lambda.iter_mut().take(c as usize) {
                *l = k as u32 + 1;
            }
        }
        primary.push(lambda.iter().map(|&l| p.pow(l)).collect());
    }
    // combine primary parts into invariant factors n_1 | n_2 | …
    let len = primary.iter().map(|v| v.len()).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for v in &primary {
        let mut v = v.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        for (i, q) in v.iter().enumerate() {
            out[len - 1 - i] *= q;
        }
    }
    out
}

fn is_p_power(mut o: u64, p: u64) -> bool {
    while o.is_multiple_of(p) {
        o /= p;
    }
    o == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_round_trip() {
        let g = GroupData::new(&[4, 2], &["c", "d"]);
        for i in 0..g.order() {
            assert_eq!(g.index(&g.element(i)), i);
        }
        assert_eq!(g.label(&[2, 1]), "c^2d");
        assert_eq!(g.order_of(&[2, 1]), 2);
        assert_eq!(g.exponent(), 4);
    }

    #[test]
    fn invariant_factors_from_orders() {
        for factors in [vec![4u64, 2], vec![2, 2, 2], vec![8], vec![6], vec![2, 6], vec![1]] {
            let g = GroupData { names: factors.iter().map(|_| "g".into()).collect(), factors: factors.clone() };
            let orders: Vec<u64> = g.elements().map(|e| g.order_of(&e)).collect();
            let mut expect: Vec<u64> = factors.into_iter().filter(|&n| n > 1).collect();
            // C_2 x C_6 has invariant factors [2, 6], C_6 is [6]
            expect.sort_unstable();
            assert_eq!(invariant_factors(&orders), expect);
        }
    }
}
