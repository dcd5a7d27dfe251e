//! Vertex subsets as bit masks: a single machine word for components of up to
//! 64 vertices, a heap-allocated word vector beyond that.

pub(crate) trait Mask: Clone + PartialEq + std::fmt::Debug {
    fn empty(n: usize) -> Self;
    fn insert(&mut self, i: usize);
    fn remove(&mut self, i: usize);
    fn and(&self, other: &Self) -> Self;
    fn or(&self, other: &Self) -> Self;
    fn and_not(&self, other: &Self) -> Self;
    fn count(&self) -> usize;
    fn is_empty(&self) -> bool;
    fn ones(&self) -> Vec<usize>;
    fn first(&self) -> Option<usize>;

    fn intersects(&self, other: &Self) -> bool {
        !self.and(other).is_empty()
    }

    fn from_indices(n: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::empty(n);
        for i in idx {
            m.insert(i);
        }
        m
    }

    fn full(n: usize) -> Self {
        Self::from_indices(n, 0..n)
    }
}

impl Mask for u64 {
    fn empty(n: usize) -> Self {
        debug_assert!(n <= 64);
        0
    }
    fn insert(&mut self, i: usize) {
        *self |= 1 << i;
    }
    fn remove(&mut self, i: usize) {
        *self &= !(1 << i);
    }
    fn first(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }
    fn and(&self, o: &Self) -> Self {
        self & o
    }
    fn or(&self, o: &Self) -> Self {
        self | o
    }
    fn and_not(&self, o: &Self) -> Self {
        self & !o
    }
    fn count(&self) -> usize {
        self.count_ones() as usize
    }
    fn is_empty(&self) -> bool {
        *self == 0
    }
    fn ones(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.count_ones() as usize);
        let mut w = *self;
        while w != 0 {
            out.push(w.trailing_zeros() as usize);
            w &= w - 1;
        }
        out
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct WideMask(Box<[u64]>);

impl WideMask {
    fn zip(&self, o: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        WideMask(
            self.0
                .iter()
                .zip(o.0.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }
}

impl Mask for WideMask {
    fn empty(n: usize) -> Self {
        WideMask(vec![0; n.div_ceil(64)].into_boxed_slice())
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| 64 * k + w.trailing_zeros() as usize)
    }
    fn and(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a & b)
    }
    fn or(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a | b)
    }
    fn and_not(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a & !b)
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn ones(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(k, &w)| w.ones().into_iter().map(move |b| 64 * k + b))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exercise<M: Mask>(n: usize) {
        let a = M::from_indices(n, [0, 3, n - 1]);
        let b = M::from_indices(n, [3, 5]);
        assert_eq!(a.ones(), vec![0, 3, n - 1]);
        assert_eq!(a.and(&b).ones(), vec![3]);
        assert_eq!(a.or(&b).count(), 4);
        assert_eq!(a.and_not(&b).ones(), vec![0, n - 1]);
        assert!(a.intersects(&b));
        assert!(M::empty(n).is_empty());
        assert_eq!(M::full(n).count(), n);
        assert!(a.ones().contains(&(n - 1)) && !a.ones().contains(&1));
        let mut c = a.clone();
        c.remove(0);
        assert_eq!(c.first(), Some(3));
        assert_eq!(M::empty(n).first(), None);
    }

    #[test]
    fn word_mask() {
        exercise::<u64>(64);
        exercise::<u64>(10);
    }

    #[test]
    fn wide_mask() {
        exercise::<WideMask>(65);
        exercise::<WideMask>(200);
    }
}
