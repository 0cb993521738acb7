use alloc::vec::Vec;

/// Fixed-length bit vector; bit `i` marks membership of facet `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacetBitmap {
    len: usize,
    words: Vec<u64>,
}

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

impl FacetBitmap {
    pub fn new(len: usize) -> Self {
        FacetBitmap { len, words: alloc::vec![0; words_for(len)] }
    }

    /// Wraps raw words; bits at positions `>= len` are cleared.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Option<Self> {
        if words.len() != words_for(len) {
            return None;
        }
        if !len.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (len % 64)) - 1;
            }
        }
        Some(FacetBitmap { len, words })
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut b = FacetBitmap::new(len);
        for i in indices {
            b.set(i);
        }
        b
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Bitwise AND of two equal-length bitmaps.
    pub fn and(&self, other: &FacetBitmap) -> FacetBitmap {
        assert_eq!(self.len, other.len, "bitmap length mismatch");
        FacetBitmap::and_words(self.len, &self.words, &other.words)
    }

    pub(crate) fn and_words(len: usize, a: &[u64], b: &[u64]) -> FacetBitmap {
        FacetBitmap { len, words: a.iter().zip(b).map(|(x, y)| x & y).collect() }
    }

    pub fn is_subset_of(&self, other: &FacetBitmap) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Indices of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            })
        })
    }
}
