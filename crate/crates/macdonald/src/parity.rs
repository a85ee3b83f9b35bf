//! 2-adic analysis of the number of standard tableaux: a big-integer-free
//! recursion for v2(f_lambda) on the 2-quotient, the exact hook-length
//! count as its oracle, and the bit-level counting constants.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigUint;

use crate::cores::decompose;
use crate::error::{Error, Result};
use crate::limits;
use crate::partition::Partition;

/// `alpha(n) = sum i * a_i` over the binary expansion `n = sum a_i 2^i`.
pub fn alpha(n: u64) -> u32 {
    let mut total = 0u32;
    let mut rest = n;
    while rest != 0 {
        let i = rest.trailing_zeros();
        total += i;
        rest &= rest - 1;
    }
    total
}

/// Number of ones in the binary expansion of `n`.
pub fn nu(n: u64) -> u32 {
    n.count_ones()
}

/// 2-adic valuation of a positive integer.
pub fn v2(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::ZeroValuation);
    }
    Ok(n.trailing_zeros())
}

thread_local! {
    static V2F_MEMO: RefCell<HashMap<Vec<usize>, u32>> = RefCell::new(HashMap::new());
}

/// 2-adic valuation of f_lambda, computed without big integers.
///
/// Writing `a` for the size of the 2-core and `m0`, `m1` for the sizes of the
/// 2-quotient components of a partition of `n`,
///
/// ```text
/// v2(f) = [a - nu(a)] + [nu(a) + nu(2 m0) + nu(2 m1) - nu(n)] + v2(f_q0) + v2(f_q1)
/// ```
///
/// with both bracketed terms nonnegative. The recursion bottoms out at n <= 1.
pub fn v2_f(lambda: &Partition) -> u32 {
    let n = lambda.size();
    if n <= 1 {
        return 0;
    }
    if let Some(hit) = V2F_MEMO.with(|m| m.borrow().get(lambda.parts()).copied()) {
        return hit;
    }
    let cq = decompose(lambda, 2).expect("modulus 2 is valid");
    let a = cq.core.size() as u64;
    let m0 = cq.quotient[0].size() as u64;
    let m1 = cq.quotient[1].size() as u64;
    let core_term = a as i64 - nu(a) as i64;
    let carry_term = nu(a) as i64 + nu(2 * m0) as i64 + nu(2 * m1) as i64 - nu(n as u64) as i64;
    debug_assert!(core_term >= 0 && carry_term >= 0);
    let value =
        core_term as u32 + carry_term as u32 + v2_f(&cq.quotient[0]) + v2_f(&cq.quotient[1]);
    V2F_MEMO.with(|m| m.borrow_mut().insert(lambda.parts().to_vec(), value));
    value
}

/// True iff f_lambda is odd.
pub fn is_odd(lambda: &Partition) -> bool {
    v2_f(lambda) == 0
}

/// Exact number of standard tableaux: `n! / H_lambda` by the hook-length
/// formula, with arbitrary precision.
pub fn f_exact(lambda: &Partition) -> Result<BigUint> {
    let n = lambda.size();
    let cap = limits::f_exact_cap();
    if n > cap {
        return Err(Error::LimitExceeded { requested: n, cap });
    }
    let mut numerator = BigUint::from(1u32);
    for i in 2..=n {
        numerator *= BigUint::from(i);
    }
    let mut hook_product = BigUint::from(1u32);
    for h in lambda.hook_multiset() {
        hook_product *= BigUint::from(h);
    }
    debug_assert!(
        &numerator % &hook_product == BigUint::from(0u32),
        "hook product divides n!"
    );
    Ok(numerator / hook_product)
}

/// No-carry criterion: `binom(n, m)` is odd iff the binary supports of `m`
/// and `n - m` are disjoint.
pub fn binomial_is_odd(n: u64, m: u64) -> Result<bool> {
    if m > n {
        return Err(Error::BinomialDomain { n, m });
    }
    Ok(m & (n - m) == 0)
}

/// Number of partitions of `n` with an odd number of standard tableaux,
/// `2^alpha(n)` by Macdonald's count.
pub fn count_odd(n: u64) -> u64 {
    let a = alpha(n);
    assert!(a < 64, "count_odd overflows u64 for n this large");
    1u64 << a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn prt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn bit_constants() {
        assert_eq!(alpha(5), 2); // 101
        assert_eq!(alpha(0), 0);
        assert_eq!(alpha(45), 10); // 101101: 2 + 3 + 5
        assert_eq!(nu(7), 3);
        assert_eq!(v2(40), Ok(3));
        assert_eq!(v2(0), Err(Error::ZeroValuation));
    }

    #[test]
    fn v2_f_examples() {
        assert_eq!(v2_f(&prt(&[2, 1])), 1); // f = 2
        assert_eq!(v2_f(&prt(&[7])), 0); // single rows are one-dimensional
        assert_eq!(v2_f(&prt(&[3, 1, 1])), 1); // f = 6
        assert_eq!(v2_f(&Partition::empty()), 0);
    }

    #[test]
    fn is_odd_examples() {
        assert!(is_odd(&prt(&[3, 2]))); // f = 5
        assert!(!is_odd(&prt(&[2, 2]))); // f = 2
        assert!(is_odd(&Partition::empty()));
    }

    #[test]
    fn f_exact_examples() {
        assert_eq!(f_exact(&prt(&[2, 2])).unwrap(), BigUint::from(2u32));
        assert_eq!(f_exact(&prt(&[1])).unwrap(), BigUint::from(1u32));
        assert_eq!(f_exact(&Partition::empty()).unwrap(), BigUint::from(1u32));
        // Hooks count lattice paths: f of (n1+1, 1^n2) is binom(n1+n2, n1).
        assert_eq!(
            f_exact(&Partition::hook_shape(2, 1)).unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(
            f_exact(&Partition::hook_shape(3, 3)).unwrap(),
            BigUint::from(20u32)
        );
    }

    #[test]
    fn f_exact_respects_cap() {
        let big = Partition::row(limits::f_exact_cap() + 1);
        assert!(matches!(f_exact(&big), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn binomial_parity_examples() {
        assert_eq!(binomial_is_odd(3, 1), Ok(true)); // C(3,1) = 3
        assert_eq!(binomial_is_odd(4, 2), Ok(false)); // C(4,2) = 6
        assert_eq!(binomial_is_odd(9, 0), Ok(true));
        assert!(binomial_is_odd(2, 3).is_err());
    }

    #[test]
    fn count_odd_examples() {
        assert_eq!(count_odd(4), 4);
        assert_eq!(count_odd(5), 4);
        assert_eq!(count_odd(0), 1);
    }

    #[test]
    fn count_odd_matches_exhaustive_filter() {
        for n in 0..=12u64 {
            let found = partitions_of(n as usize)
                .unwrap()
                .iter()
                .filter(|lam| is_odd(lam))
                .count() as u64;
            assert_eq!(found, count_odd(n), "n = {n}");
        }
        let odd5: Vec<Partition> = partitions_of(5)
            .unwrap()
            .into_iter()
            .filter(is_odd)
            .collect();
        assert_eq!(
            odd5,
            vec![prt(&[5]), prt(&[3, 2]), prt(&[2, 2, 1]), prt(&[1, 1, 1, 1, 1])]
        );
    }
}
