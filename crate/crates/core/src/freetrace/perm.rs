//! Permutations of `{1..n}` and the permutation-indexed trace monomials.

use alloc::vec;
use alloc::vec::Vec;

use super::monomial::{canonicalize, TraceMonomial};
use super::FreeTraceError;

/// A permutation of `{1, …, n}`, stored by its images.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// From the one-line notation `[σ(1), …, σ(n)]`; must be a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self, FreeTraceError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(FreeTraceError::NotBijective);
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition `(i j)` in `S_n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Disjoint cycles, including fixed points. Each cycle starts at its
    /// smallest element; cycles are ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut visited = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !visited[cur] {
                visited[cur] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Cycle type: the cycle lengths sorted in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// All of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            if !next_permutation(&mut current) {
                return out;
            }
        }
    }
}

/// Steps `seq` to its lexicographic successor; false once at the last one.
pub(super) fn next_permutation(seq: &mut [usize]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut i = seq.len() - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = seq.len() - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

/// The pure trace monomial of `σ`: one trace factor per disjoint cycle of
/// `σ⁻¹`, including 1-cycles.
pub fn ptr_from_permutation(sigma: &Permutation) -> TraceMonomial {
    let factors = sigma.inverse().cycles();
    canonicalize(Vec::new(), factors).expect("cycles of a permutation are disjoint and nonempty")
}

/// The mixed trace monomial `mtr_σ ∈ MT_{n−1}` defined by
/// `ptr_σ(x_1,…,x_n) = Tr(mtr_σ(x_1,…,x_{n−1}) · x_n)`: the cycle of `σ⁻¹`
/// through `n` loses its trace and its trailing `x_n` and becomes the word
/// part.
pub fn mtr_from_permutation(sigma: &Permutation) -> TraceMonomial {
    let n = sigma.n();
    let inv = sigma.inverse();
    let mut word = Vec::new();
    let mut cur = inv.apply(n);
    while cur != n {
        word.push(cur);
        cur = inv.apply(cur);
    }
    let factors: Vec<Vec<usize>> = inv.cycles().into_iter().filter(|c| !c.contains(&n)).collect();
    canonicalize(word, factors).expect("disjoint cycles")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(word: &[usize], factors: &[&[usize]]) -> TraceMonomial {
        canonicalize(word.to_vec(), factors.iter().map(|f| f.to_vec()).collect()).unwrap()
    }

    #[test]
    fn ptr_of_identity_is_all_fixed_traces() {
        let sigma = Permutation::identity(3);
        assert_eq!(
            ptr_from_permutation(&sigma),
            mono(&[], &[&[1], &[2], &[3]])
        );
    }

    #[test]
    fn ptr_of_transposition() {
        let sigma = Permutation::transposition(3, 1, 2);
        assert_eq!(ptr_from_permutation(&sigma), mono(&[], &[&[1, 2], &[3]]));
    }

    #[test]
    fn mtr_examples() {
        // σ⁻¹ = (1 3)(2): mtr = Tr(x2) x1
        let sigma = Permutation::from_images(vec![3, 2, 1]).unwrap();
        assert_eq!(sigma.inverse().cycles(), vec![vec![1, 3], vec![2]]);
        assert_eq!(mtr_from_permutation(&sigma), mono(&[1], &[&[2]]));

        // σ⁻¹ = (1 2 3): mtr = x1 x2
        let sigma = Permutation::from_images(vec![3, 1, 2]).unwrap();
        assert_eq!(mtr_from_permutation(&sigma), mono(&[1, 2], &[]));

        // identity in S1: mtr = 1
        let sigma = Permutation::identity(1);
        assert_eq!(mtr_from_permutation(&sigma), TraceMonomial::unit());
    }

    #[test]
    fn all_of_s3_has_six_elements_and_cycle_types() {
        let s3 = Permutation::all(3);
        assert_eq!(s3.len(), 6);
        let mut types: Vec<Vec<usize>> = s3.iter().map(Permutation::cycle_type).collect();
        types.sort();
        types.dedup();
        assert_eq!(types, vec![vec![1, 1, 1], vec![2, 1], vec![3]]);
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(vec![1, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 1]).is_err());
        assert!(Permutation::from_images(vec![3, 1]).is_err());
    }
}
