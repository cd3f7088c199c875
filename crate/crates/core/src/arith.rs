//! Elementary number theory on machine integers: factorization, Euler's
//! totient, the Möbius function and the centered residue `(x : n)`.

use num_integer::Integer;

/// Prime factorization by trial division, primes in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize(0)");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut v = 0;
            while n % p == 0 {
                n /= p;
                v += 1;
            }
            out.push((p, v));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .map(|(p, v)| p.pow(v - 1) * (p - 1))
        .product()
}

pub fn moebius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, v)| v > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
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

/// Number of distinct prime divisors.
pub fn prime_count(n: u64) -> u32 {
    factorize(n).len() as u32
}

/// Least non-negative residue of `x` modulo `n`.
pub fn modn(x: i64, n: u64) -> u64 {
    x.rem_euclid(n as i64) as u64
}

/// `(x : n)`: the representative of `x mod n` in `(-n/2, n/2]`.
pub fn centered_rep(x: i64, n: u64) -> i64 {
    let r = modn(x, n) as i64;
    if 2 * r > n as i64 {
        r - n as i64
    } else {
        r
    }
}

/// `|x : n|`.
pub fn abs_rep(x: i64, n: u64) -> u64 {
    centered_rep(x, n).unsigned_abs()
}

/// Multiplicative order of `x` in the additive group `Z_n`, i.e. `n / gcd(x, n)`.
pub fn additive_order(x: i64, n: u64) -> u64 {
    n / modn(x, n).gcd(&n)
}

/// Returns `(t, f)` with `q = t^f`, `t` prime, or `None`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    match factorize(q).as_slice() {
        [(t, f)] => Some((*t, *f)),
        _ => None,
    }
}
