use core::ops::{Add, AddAssign};

/// Tally of executed arithmetic operations, split into the five classes the
/// cost model weighs: assignment, comparison, addition/subtraction,
/// multiplication and division.
///
/// Increments are placed per source-level operation. Square roots and
/// floor/ceil conversions count as one division each.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct OpCounter {
    pub assigns: u64,
    pub compares: u64,
    pub addsubs: u64,
    pub muls: u64,
    pub divs: u64,
}

impl OpCounter {
    pub const fn new() -> Self {
        OpCounter { assigns: 0, compares: 0, addsubs: 0, muls: 0, divs: 0 }
    }

    /// Builds a counter from a `(assign, compare, addsub, mul, div)` tuple.
    pub const fn from_tuple(t: (u64, u64, u64, u64, u64)) -> Self {
        OpCounter { assigns: t.0, compares: t.1, addsubs: t.2, muls: t.3, divs: t.4 }
    }

    pub const fn as_tuple(&self) -> (u64, u64, u64, u64, u64) {
        (self.assigns, self.compares, self.addsubs, self.muls, self.divs)
    }

    pub fn total(&self) -> u64 {
        self.assigns + self.compares + self.addsubs + self.muls + self.divs
    }

    pub fn scaled(&self, k: u64) -> Self {
        OpCounter {
            assigns: self.assigns * k,
            compares: self.compares * k,
            addsubs: self.addsubs * k,
            muls: self.muls * k,
            divs: self.divs * k,
        }
    }

    #[inline]
    pub fn assign(&mut self, n: u64) {
        self.assigns += n;
    }

    #[inline]
    pub fn compare(&mut self, n: u64) {
        self.compares += n;
    }

    #[inline]
    pub fn addsub(&mut self, n: u64) {
        self.addsubs += n;
    }

    #[inline]
    pub fn mul(&mut self, n: u64) {
        self.muls += n;
    }

    #[inline]
    pub fn div(&mut self, n: u64) {
        self.divs += n;
    }

    /// 2-vector dot product: 2 mul, 1 add.
    #[inline]
    pub(crate) fn dot2(&mut self) {
        self.muls += 2;
        self.addsubs += 1;
    }

    /// 3-vector dot product: 3 mul, 2 add.
    #[inline]
    pub(crate) fn dot3(&mut self) {
        self.muls += 3;
        self.addsubs += 2;
    }
}

impl Add for OpCounter {
    type Output = OpCounter;

    fn add(self, o: OpCounter) -> OpCounter {
        OpCounter {
            assigns: self.assigns + o.assigns,
            compares: self.compares + o.compares,
            addsubs: self.addsubs + o.addsubs,
            muls: self.muls + o.muls,
            divs: self.divs + o.divs,
        }
    }
}

impl AddAssign for OpCounter {
    fn add_assign(&mut self, o: OpCounter) {
        *self = *self + o;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_and_scale() {
        let a = OpCounter::from_tuple((9, 3, 6, 6, 1));
        assert_eq!(a.scaled(2).as_tuple(), (18, 6, 12, 12, 2));
        let mut b = OpCounter::new();
        b += a;
        b.dot3();
        assert_eq!(b.as_tuple(), (9, 3, 8, 9, 1));
        assert_eq!(b.total(), 30);
    }
}
