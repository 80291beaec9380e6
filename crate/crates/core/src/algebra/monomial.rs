/// Maximum number of variables a [`Mono`] can hold.
pub const MAX_VARS: usize = 8;

const BITS: u32 = 16;
const OFF: i32 = 1 << 15;
const MASK: u128 = 0xFFFF;

const fn all_offsets() -> u128 {
    let mut acc = 0u128;
    let mut k = 0;
    while k < MAX_VARS {
        acc |= (OFF as u128) << (BITS * (MAX_VARS as u32 - 1 - k as u32));
        k += 1;
    }
    acc
}

const ALL_OFF: u128 = all_offsets();

#[inline]
const fn shift(k: usize) -> u32 {
    BITS * (MAX_VARS as u32 - 1 - k as u32)
}

/// Laurent monomial: up to [`MAX_VARS`] signed 16-bit exponents packed into a
/// `u128`, variable 0 in the most significant field.
///
/// The derived ordering compares total degree first and then the packed
/// word, which is graded lexicographic order on exponent vectors.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mono {
    total: i32,
    packed: u128,
}

impl Default for Mono {
    fn default() -> Self {
        Mono::one()
    }
}

impl Mono {
    pub const fn one() -> Self {
        Mono { total: 0, packed: ALL_OFF }
    }

    pub fn from_exps(exps: &[i32]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Mono::one();
        for (k, &e) in exps.iter().enumerate() {
            if e != 0 {
                m = m.with(k, e);
            }
        }
        m
    }

    /// Single-variable monomial `x_k^e`.
    pub fn var(k: usize, e: i32) -> Self {
        Mono::one().with(k, e)
    }

    #[inline]
    pub fn get(&self, k: usize) -> i32 {
        ((self.packed >> shift(k)) & MASK) as i32 - OFF
    }

    /// Copy with exponent of variable `k` replaced by `e`.
    pub fn with(&self, k: usize, e: i32) -> Self {
        assert!((-OFF..OFF).contains(&e), "exponent {e} out of range");
        let old = self.get(k);
        let cleared = self.packed & !(MASK << shift(k));
        Mono {
            total: self.total - old + e,
            packed: cleared | (((e + OFF) as u128) << shift(k)),
        }
    }

    #[inline]
    pub fn total(&self) -> i32 {
        self.total
    }

    pub fn exps(&self, n: usize) -> Vec<i32> {
        (0..n).map(|k| self.get(k)).collect()
    }

    #[inline]
    pub fn mul(&self, rhs: &Mono) -> Mono {
        Mono {
            total: self.total + rhs.total,
            packed: self.packed.wrapping_add(rhs.packed).wrapping_sub(ALL_OFF),
        }
    }

    #[inline]
    pub fn inv(&self) -> Mono {
        Mono {
            total: -self.total,
            packed: ALL_OFF.wrapping_mul(2).wrapping_sub(self.packed),
        }
    }

    #[inline]
    pub fn div(&self, rhs: &Mono) -> Mono {
        self.mul(&rhs.inv())
    }

    pub fn is_one(&self) -> bool {
        self.packed == ALL_OFF
    }

    /// Exponent vector with variables `i` and `j` exchanged.
    pub fn swap(&self, i: usize, j: usize) -> Mono {
        let (a, b) = (self.get(i), self.get(j));
        self.with(i, b).with(j, a)
    }

    /// Componentwise minimum over the first `n` variables.
    pub fn gcd(&self, rhs: &Mono, n: usize) -> Mono {
        let mut m = *self;
        for k in 0..n {
            let e = self.get(k).min(rhs.get(k));
            m = m.with(k, e);
        }
        m
    }

    /// Whether `self / rhs` has only nonnegative exponents in the first `n` vars.
    pub fn divisible_by(&self, rhs: &Mono, n: usize) -> bool {
        (0..n).all(|k| self.get(k) >= rhs.get(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn mul_matches_exponent_addition(
            a in proptest::collection::vec(-300i32..300, 8),
            b in proptest::collection::vec(-300i32..300, 8),
        ) {
            let p = Mono::from_exps(&a).mul(&Mono::from_exps(&b));
            let want: Vec<i32> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            prop_assert_eq!(p.exps(8), want.clone());
            prop_assert_eq!(p.total(), want.iter().sum::<i32>());
            let q = p.div(&Mono::from_exps(&b));
            prop_assert_eq!(q, Mono::from_exps(&a));
        }

        #[test]
        fn order_is_graded_lex(
            a in proptest::collection::vec(-5i32..5, 4),
            b in proptest::collection::vec(-5i32..5, 4),
        ) {
            let (ma, mb) = (Mono::from_exps(&a), Mono::from_exps(&b));
            let ta: i32 = a.iter().sum();
            let tb: i32 = b.iter().sum();
            let want = ta.cmp(&tb).then(a.cmp(&b));
            prop_assert_eq!(ma.cmp(&mb), want);
        }
    }

    #[test]
    fn inverse_and_swap() {
        let m = Mono::from_exps(&[3, -2, 0, 7]);
        assert_eq!(m.inv().exps(4), vec![-3, 2, 0, -7]);
        assert!(m.mul(&m.inv()).is_one());
        assert_eq!(m.swap(0, 1).exps(4), vec![-2, 3, 0, 7]);
    }
}
