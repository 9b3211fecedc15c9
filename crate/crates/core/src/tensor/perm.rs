use std::fmt;

use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};

/// A permutation of `{1, 2, 3}`, stored by its images `[σ(1), σ(2), σ(3)]`.
///
/// The cycle `(123)` sends 1→2, 2→3, 3→1, so its image array is `[2, 3, 1]`;
/// `(321)` is its inverse, `[3, 1, 2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Perm3([u8; 3]);

impl Perm3 {
    pub const ID: Perm3 = Perm3([1, 2, 3]);
    pub const C123: Perm3 = Perm3([2, 3, 1]);
    pub const C321: Perm3 = Perm3([3, 1, 2]);
    pub const T12: Perm3 = Perm3([2, 1, 3]);
    pub const T23: Perm3 = Perm3([1, 3, 2]);
    pub const T13: Perm3 = Perm3([3, 2, 1]);

    /// All of S3: the even permutations first, then the transpositions.
    pub const ALL: [Perm3; 6] = [
        Perm3::ID,
        Perm3::C123,
        Perm3::C321,
        Perm3::T12,
        Perm3::T23,
        Perm3::T13,
    ];

    pub fn new(images: [u8; 3]) -> Result<Perm3> {
        let mut sorted = images;
        sorted.sort_unstable();
        if sorted != [1, 2, 3] {
            return Err(Error::Parse(format!("{images:?} is not a permutation of 1..=3")));
        }
        Ok(Perm3(images))
    }

    pub fn images(self) -> [u8; 3] {
        self.0
    }

    /// `σ(i)` for `i` in `1..=3`.
    pub fn apply(self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(self, other: Perm3) -> Perm3 {
        Perm3([1, 2, 3].map(|i| self.apply(other.apply(i)) as u8))
    }

    pub fn inverse(self) -> Perm3 {
        let mut inv = [0u8; 3];
        for i in 1..=3 {
            inv[self.apply(i) - 1] = i as u8;
        }
        Perm3(inv)
    }

    /// Signature `ε(σ)` as ±1, computed from the inversion count.
    pub fn sign(self) -> i64 {
        let a = self.0;
        let inversions = (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i] > a[j])
            .count();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn sign_in(self, field: Field) -> Scalar {
        field.from_int(self.sign())
    }

    pub fn fixed_points(self) -> usize {
        (1..=3).filter(|&i| self.apply(i) == i).count()
    }
}

impl fmt::Display for Perm3 {
    /// Cycle notation, `id` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match *self {
            Perm3::ID => "id",
            Perm3::C123 => "(123)",
            Perm3::C321 => "(321)",
            Perm3::T12 => "(12)",
            Perm3::T23 => "(23)",
            Perm3::T13 => "(13)",
            _ => unreachable!(),
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_convention() {
        assert_eq!(Perm3::C123.apply(1), 2);
        assert_eq!(Perm3::C123.apply(3), 1);
        assert_eq!(Perm3::C123.inverse(), Perm3::C321);
        assert_eq!(Perm3::C123.compose(Perm3::C123), Perm3::C321);
    }

    #[test]
    fn signatures() {
        let signs: Vec<i64> = Perm3::ALL.iter().map(|p| p.sign()).collect();
        assert_eq!(signs, [1, 1, 1, -1, -1, -1]);
        for s in Perm3::ALL {
            for t in Perm3::ALL {
                assert_eq!(s.compose(t).sign(), s.sign() * t.sign());
            }
        }
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Perm3::new([1, 1, 3]).is_err());
        assert!(Perm3::new([0, 1, 2]).is_err());
        assert_eq!(Perm3::new([3, 2, 1]).unwrap(), Perm3::T13);
    }
}
