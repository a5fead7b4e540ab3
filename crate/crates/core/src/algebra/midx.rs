use std::cmp::Ordering;

/// Multi-index `(i₁, …, iₙ)` naming the monomial `z₁^{i₁}⋯zₙ^{iₙ}`.
///
/// Ordered graded-lexicographically: lower total degree first, then the
/// larger exponent of the earliest variable first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MIdx(Vec<u32>);

impl MIdx {
    pub fn new(exps: Vec<u32>) -> Self {
        MIdx(exps)
    }

    pub fn zeros(n: usize) -> Self {
        MIdx(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        MIdx(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn plus(&self, other: &MIdx) -> MIdx {
        MIdx(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All multi-indices `J` with `J ≤ self` componentwise.
    pub(crate) fn below(&self) -> Vec<MIdx> {
        let mut out = vec![Vec::with_capacity(self.0.len())];
        for &e in &self.0 {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for prefix in &out {
                for j in 0..=e {
                    let mut p = prefix.clone();
                    p.push(j);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(MIdx).collect()
    }
}

impl Ord for MIdx {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for MIdx {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
