//! Small dense bit matrix used by order sweeps.

#[derive(Clone, Debug)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix { n, words, data: vec![0; n * words] }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] |= 1u64 << (j % 64);
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// row(i) ⊆ row(j)
    pub fn row_subset(&self, i: usize, j: usize) -> bool {
        let (a, b) = (self.row(i), self.row(j));
        a.iter().zip(b).all(|(x, y)| x & !y == 0)
    }

    pub fn row_indices(&self, i: usize) -> Vec<usize> {
        ones(self.row(i))
    }
}

/// AND rows into `acc` in place.
#[inline]
pub fn and_into(acc: &mut [u64], row: &[u64]) {
    for (a, r) in acc.iter_mut().zip(row) {
        *a &= r;
    }
}

#[inline]
pub fn any(acc: &[u64]) -> bool {
    acc.iter().any(|&w| w != 0)
}

pub fn ones(row: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (wi, &w) in row.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            let b = w.trailing_zeros() as usize;
            out.push(wi * 64 + b);
            w &= w - 1;
        }
    }
    out
}

pub fn first_one(row: &[u64]) -> Option<usize> {
    for (wi, &w) in row.iter().enumerate() {
        if w != 0 {
            return Some(wi * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}
