//! Cyclotomic polynomials over the integers.

use num_bigint::BigInt;
use num_integer::Integer;

use super::poly::IntPoly;

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// The `n`-th cyclotomic polynomial, computed from the Möbius product
/// `Phi_n = prod_{d | n} (t^d - 1)^{mu(n/d)}`.
///
/// # Panics
/// Panics if `n == 0`.
pub fn cyclotomic_poly(n: u64) -> IntPoly {
    assert!(n > 0, "cyclotomic order must be positive");
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for d in divisors(n) {
        let factor = t_pow_minus_one(d);
        match mobius(n / d) {
            1 => num = &num * &factor,
            -1 => den = &den * &factor,
            _ => {}
        }
    }
    // den is monic up to sign; normalize so that exact division is monic.
    let sign = den.leading();
    let den_monic = den.scale(&sign);
    let num = num.scale(&sign);
    num.div_exact_monic(&den_monic)
        .expect("Möbius product divides exactly")
}

fn t_pow_minus_one(d: u64) -> IntPoly {
    let mut c = vec![BigInt::from(0); d as usize + 1];
    c[0] = BigInt::from(-1);
    c[d as usize] = BigInt::from(1);
    IntPoly::new(c)
}

fn mobius(mut n: u64) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(cyclotomic_poly(1), IntPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), IntPoly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), IntPoly::from_ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(6), IntPoly::from_ints(&[1, -1, 1]));
    }

    #[test]
    fn order_twelve_by_division_oracle() {
        // t^12 - 1 divided by Phi_d for every proper divisor d of 12.
        let mut rest = t_pow_minus_one(12);
        for d in [1, 2, 3, 4, 6] {
            rest = rest.div_exact_monic(&cyclotomic_poly(d)).unwrap();
        }
        assert_eq!(rest, IntPoly::from_ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(12), rest);
    }

    #[test]
    fn degrees_match_phi() {
        for n in 1..=120 {
            assert_eq!(cyclotomic_poly(n).deg() as u64, euler_phi(n), "n={n}");
        }
    }

    #[test]
    fn product_over_divisors_is_t_n_minus_one() {
        for n in [1, 8, 15, 30, 36] {
            let prod = divisors(n)
                .into_iter()
                .fold(IntPoly::one(), |acc, d| &acc * &cyclotomic_poly(d));
            assert_eq!(prod, t_pow_minus_one(n));
        }
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(7) && is_prime(97));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(0));
    }
}
