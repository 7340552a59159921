/// Fixed-universe bitset over vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct VertexSet {
    words: Box<[u64]>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            words: vec![0; universe.div_ceil(64)].into_boxed_slice(),
        }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn without(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.remove(i);
        s
    }

    /// Members of `self` not in `other`, stopping after `cap` of them.
    pub fn difference_upto(&self, other: &VertexSet, cap: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, (a, b)) in self.words.iter().zip(other.words.iter()).enumerate() {
            let mut bits = a & !b;
            while bits != 0 {
                out.push(w * 64 + bits.trailing_zeros() as usize);
                if out.len() >= cap {
                    return out;
                }
                bits &= bits - 1;
            }
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + i)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut a = VertexSet::empty(130);
        for i in [0, 5, 64, 129] {
            a.insert(i);
        }
        assert_eq!(a.iter().collect::<Vec<_>>(), [0, 5, 64, 129]);
        let b = a.without(64);
        assert_eq!(a.difference_upto(&b, 2), [64]);
        assert_eq!(b.difference_upto(&a, 2), Vec::<usize>::new());
        let empty = VertexSet::empty(130);
        assert_eq!(a.difference_upto(&empty, 2), [0, 5]);
    }
}
