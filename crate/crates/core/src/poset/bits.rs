/// Dense square boolean matrix, one `u64` word run per row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct BitMatrix {
    n: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self { n, words, data: vec![0; n * words] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n);
        for i in 0..n {
            m.set(i, i);
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] |= 1 << (j % 64);
    }

    /// `row(i) |= row(k)`.
    fn or_row_into(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        let (wi, wk) = (i * self.words, k * self.words);
        for w in 0..self.words {
            let v = self.data[wk + w];
            self.data[wi + w] |= v;
        }
    }

    /// Warshall closure, word-parallel.
    pub fn transitive_closure(&mut self) {
        for k in 0..self.n {
            for i in 0..self.n {
                if self.get(i, k) {
                    self.or_row_into(i, k);
                }
            }
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::new(self.n);
        for i in 0..self.n {
            for j in self.row_ones(i) {
                t.set(j, i);
            }
        }
        t
    }

    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let base = i * self.words;
        (0..self.words).flat_map(move |w| {
            let mut word = self.data[base + w];
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn row_count(&self, i: usize) -> usize {
        let base = i * self.words;
        self.data[base..base + self.words].iter().map(|w| w.count_ones() as usize).sum()
    }
}
