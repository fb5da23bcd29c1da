//! Bit-vector polynomials over GF(2), used for modulus validation and for
//! generating default field moduli. Bit i of a word is the coefficient of
//! x^i.

/// Degree of a bit polynomial; -1 for the zero polynomial.
pub(crate) fn degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

fn degree128(p: u128) -> i32 {
    127 - p.leading_zeros() as i32
}

/// Carry-less product.
pub(crate) fn mul(a: u64, b: u64) -> u128 {
    let a = a as u128;
    let mut acc = 0u128;
    for i in 0..64 {
        if (b >> i) & 1 == 1 {
            acc ^= a << i;
        }
    }
    acc
}

/// Remainder of `a` modulo a nonzero polynomial `m`.
pub(crate) fn rem(mut a: u128, m: u64) -> u64 {
    debug_assert!(m != 0);
    let dm = degree(m);
    loop {
        let da = degree128(a);
        if da < dm {
            return a as u64;
        }
        a ^= (m as u128) << (da - dm);
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = rem(a as u128, b);
        a = b;
        b = r;
    }
    a
}

/// x^(2^k) mod m, by k squarings of the residue.
fn frobenius_power(m: u64, k: u32) -> u64 {
    let mut r = rem(0b10u128, m);
    for _ in 0..k {
        r = rem(mul(r, r), m);
    }
    r
}

/// Irreducibility over GF(2) via the x^(2^k) criterion: m of degree n is
/// irreducible iff x^(2^n) = x (mod m) and gcd(m, x^(2^(n/p)) - x) = 1 for
/// every prime p dividing n.
pub(crate) fn is_irreducible(m: u64) -> bool {
    let n = degree(m);
    if n < 1 {
        return false;
    }
    let n = n as u32;
    let x = rem(0b10u128, m);
    if frobenius_power(m, n) != x {
        return false;
    }
    for p in crate::numeric::prime_factors(n as u64) {
        let h = frobenius_power(m, n / p as u32) ^ x;
        if gcd(m, h) != 1 {
            return false;
        }
    }
    true
}

/// The irreducible degree-n polynomial with the smallest encoding.
///
/// For n = 1 this is x + 1 rather than x, so that the degenerate base
/// field keeps the usual representative set {0, 1}.
pub(crate) fn smallest_irreducible(n: u32) -> u64 {
    debug_assert!((1..=32).contains(&n));
    if n == 1 {
        return 0b11;
    }
    // A polynomial with even constant term is divisible by x, so step by 2.
    let lo = (1u64 << n) + 1;
    let hi = 1u64 << (n + 1);
    (lo..hi)
        .step_by(2)
        .find(|&c| is_irreducible(c))
        .expect("an irreducible polynomial exists for every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent check by exhaustive trial division, workable for small
    /// degrees only.
    fn is_irreducible_by_division(m: u64) -> bool {
        let n = degree(m);
        if n < 1 {
            return false;
        }
        for d in 1..=(n / 2) {
            for q in (1u64 << d)..(1u64 << (d + 1)) {
                if rem(m as u128, q) == 0 {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn degree_basics() {
        assert_eq!(degree(0), -1);
        assert_eq!(degree(1), 0);
        assert_eq!(degree(0b10011), 4);
    }

    #[test]
    fn mul_rem_basics() {
        // (x + 1)^2 = x^2 + 1
        assert_eq!(mul(0b11, 0b11), 0b101);
        // x^2 + 1 mod x + 1 = 0
        assert_eq!(rem(0b101, 0b11), 0);
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2
        assert_eq!(mul(0b111, 0b111), 0b10101);
    }

    #[test]
    fn irreducibility_matches_trial_division() {
        for m in 0b100u64..(1 << 11) {
            assert_eq!(
                is_irreducible(m),
                is_irreducible_by_division(m),
                "disagreement at 0x{m:x}"
            );
        }
    }

    #[test]
    fn known_reducibles_rejected() {
        // (x^2 + x + 1)^2
        assert!(!is_irreducible(0b10101));
        // x * (x^3 + x + 1)
        assert!(!is_irreducible(0b10110));
    }

    #[test]
    fn smallest_irreducible_small_degrees() {
        assert_eq!(smallest_irreducible(1), 0b11);
        assert_eq!(smallest_irreducible(2), 0b111);
        assert_eq!(smallest_irreducible(3), 0b1011);
        assert_eq!(smallest_irreducible(4), 0b10011);
    }

    #[test]
    fn smallest_irreducible_is_minimal() {
        for n in 2..=12u32 {
            let m = smallest_irreducible(n);
            assert!(is_irreducible_by_division(m));
            for c in (1u64 << n)..m {
                assert!(!is_irreducible_by_division(c), "0x{c:x} beats 0x{m:x}");
            }
        }
    }

    #[test]
    fn smallest_irreducible_large_degrees() {
        for n in 13..=32u32 {
            let m = smallest_irreducible(n);
            assert_eq!(degree(m), n as i32);
            assert!(is_irreducible(m));
        }
    }
}
