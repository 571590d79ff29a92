use std::fmt;
use std::ops::{Add, Index, Sub};

/// Integer exponent vector, one entry per branch.
///
/// `Ord` is lexicographic; [`ExpVec::le_all`] is the componentwise partial order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpVec(Vec<i64>);

impl ExpVec {
    pub fn new(components: Vec<i64>) -> Self {
        ExpVec(components)
    }

    pub fn zeros(r: usize) -> Self {
        ExpVec(vec![0; r])
    }

    pub fn ones(r: usize) -> Self {
        ExpVec(vec![1; r])
    }

    pub fn splat(r: usize, value: i64) -> Self {
        ExpVec(vec![value; r])
    }

    /// The vector `1_I` for a subset `I` given as a bit mask.
    pub fn indicator(r: usize, mask: u32) -> Self {
        ExpVec((0..r).map(|i| ((mask >> i) & 1) as i64).collect())
    }

    pub fn unit(r: usize, i: usize) -> Self {
        let mut v = vec![0; r];
        v[i] = 1;
        ExpVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    /// Componentwise `self <= other`.
    pub fn le_all(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise `self < other` in every coordinate.
    pub fn lt_all(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a < b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    /// Componentwise `max(v, 0)`.
    pub fn clamp_nonnegative(&self) -> ExpVec {
        ExpVec(self.0.iter().map(|&a| a.max(0)).collect())
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &ExpVec) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &ExpVec) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn scale(&self, k: i64) -> ExpVec {
        ExpVec(self.0.iter().map(|a| a * k).collect())
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// All lattice points `lo <= v <= hi`, in lexicographic order.
    pub fn box_points(lo: &ExpVec, hi: &ExpVec) -> Vec<ExpVec> {
        let r = lo.len();
        if lo.0.iter().zip(&hi.0).any(|(a, b)| a > b) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = lo.0.clone();
        loop {
            out.push(ExpVec(cur.clone()));
            let mut i = r;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < hi.0[i] {
                    cur[i] += 1;
                    cur[i + 1..].copy_from_slice(&lo.0[i + 1..]);
                    break;
                }
            }
        }
    }
}

impl Index<usize> for ExpVec {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &ExpVec {
    type Output = ExpVec;

    fn add(self, rhs: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ExpVec {
    type Output = ExpVec;

    fn sub(self, rhs: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl From<Vec<i64>> for ExpVec {
    fn from(v: Vec<i64>) -> Self {
        ExpVec(v)
    }
}

impl fmt::Display for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_order_is_componentwise() {
        let a = ExpVec::new(vec![1, 2]);
        let b = ExpVec::new(vec![2, 1]);
        assert!(!a.le_all(&b) && !b.le_all(&a));
        assert!(a < b, "lexicographic total order");
        assert!(ExpVec::zeros(2).le_all(&a));
    }

    #[test]
    fn box_enumeration() {
        let pts = ExpVec::box_points(&ExpVec::zeros(2), &ExpVec::new(vec![1, 2]));
        assert_eq!(pts.len(), 6);
        assert_eq!(pts[1], ExpVec::new(vec![0, 1]));
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
        assert!(ExpVec::box_points(&ExpVec::ones(1), &ExpVec::zeros(1)).is_empty());
        assert_eq!(
            ExpVec::box_points(&ExpVec::zeros(0), &ExpVec::zeros(0)).len(),
            1
        );
    }

    #[test]
    fn indicator_vectors() {
        assert_eq!(ExpVec::indicator(3, 0b101), ExpVec::new(vec![1, 0, 1]));
        assert_eq!(ExpVec::indicator(2, 0), ExpVec::zeros(2));
    }
}
