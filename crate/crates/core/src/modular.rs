//! Small integer helpers shared by the coordinate code.

use num_integer::Integer;

/// Least nonnegative residue of `x` mod `m`.
pub fn rem(x: i64, m: u64) -> i64 {
    x.rem_euclid(m as i64)
}

/// `x mod m` as a vector index.
pub fn mod_index(x: i64, m: u64) -> usize {
    rem(x, m) as usize
}

pub fn coprime(s: u64, t: u64) -> bool {
    s.gcd(&t) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_are_nonnegative() {
        assert_eq!(rem(-1, 4), 3);
        assert_eq!(rem(-8, 4), 0);
        assert_eq!(rem(9, 4), 1);
        assert_eq!(mod_index(-5, 3), 1);
    }

    #[test]
    fn coprimality() {
        assert!(coprime(2, 3));
        assert!(coprime(1, 1));
        assert!(!coprime(2, 4));
        assert!(!coprime(0, 6));
        assert!(coprime(0, 1));
    }
}
