//! p-core / p-quotient decomposition on the abacus, and the classification
//! of odd cover pairs by how the removed cell meets the unique 2^k-rim.
//!
//! Beta-number convention: the beta set of `lambda` is
//! `{lambda_i + t - i : 1 <= i <= t}` where `t` is the smallest multiple of
//! `p` that is >= the number of parts. Runner `j` of the abacus collects the
//! beta numbers congruent to `j` mod `p`, and quotient component `j` is
//! decoded from runner `j`. The convention is stable under `t -> t + p`, so
//! decompose/reconstruct may pad freely without changing the answer.

use crate::error::{Error, Result};
use crate::parity::is_odd;
use crate::partition::{Cell, Partition, RimHook};

/// A p-core together with the ordered p-tuple of quotient components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoreQuotient {
    pub p: usize,
    pub core: Partition,
    pub quotient: Vec<Partition>,
}

impl CoreQuotient {
    /// Total size of the partition this decomposition encodes.
    pub fn size(&self) -> usize {
        self.core.size() + self.p * self.quotient.iter().map(Partition::size).sum::<usize>()
    }
}

/// Beta set (first-column hook lengths) with exactly `t` entries, descending.
fn beta_set(lambda: &Partition, t: usize) -> Vec<usize> {
    debug_assert!(t >= lambda.len());
    (1..=t).map(|i| lambda.row_len(i) + t - i).collect()
}

/// Inverse of `beta_set`: strictly decreasing beta numbers back to parts.
fn partition_from_beta(beta: &mut Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let t = beta.len();
    let mut parts: Vec<usize> = beta
        .iter()
        .enumerate()
        .map(|(idx, &b)| b + idx + 1 - t)
        .collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Partition::from_valid(parts)
}

fn smallest_multiple_at_least(p: usize, n: usize) -> usize {
    n.div_ceil(p) * p
}

/// Heights of the beads on each runner, descending per runner.
fn runner_heights(lambda: &Partition, p: usize, t: usize) -> Vec<Vec<usize>> {
    let mut runners = vec![Vec::new(); p];
    for b in beta_set(lambda, t) {
        runners[b % p].push(b / p);
    }
    runners
}

fn decode_runner(heights: &[usize]) -> Partition {
    let count = heights.len();
    let mut parts: Vec<usize> = heights
        .iter()
        .enumerate()
        .map(|(idx, &h)| h + idx + 1 - count)
        .collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Partition::from_valid(parts)
}

/// Splits `lambda` into its p-core and p-quotient.
pub fn decompose(lambda: &Partition, p: usize) -> Result<CoreQuotient> {
    if p < 2 {
        return Err(Error::InvalidModulus(p));
    }
    let t = smallest_multiple_at_least(p, lambda.len());
    let runners = runner_heights(lambda, p, t);
    let quotient: Vec<Partition> = runners.iter().map(|h| decode_runner(h)).collect();
    // Pushing every bead to the bottom of its runner leaves the core.
    let mut core_beta: Vec<usize> = Vec::with_capacity(t);
    for (j, runner) in runners.iter().enumerate() {
        for i in 0..runner.len() {
            core_beta.push(j + p * i);
        }
    }
    let core = partition_from_beta(&mut core_beta);
    Ok(CoreQuotient { p, core, quotient })
}

/// The p-core alone.
pub fn p_core(lambda: &Partition, p: usize) -> Result<Partition> {
    decompose(lambda, p).map(|cq| cq.core)
}

/// The p-quotient alone.
pub fn p_quotient(lambda: &Partition, p: usize) -> Result<Vec<Partition>> {
    decompose(lambda, p).map(|cq| cq.quotient)
}

fn is_p_core(lambda: &Partition, p: usize) -> bool {
    lambda.cells().all(|c| {
        lambda
            .hook_length(c)
            .expect("cell comes from the diagram")
            % p
            != 0
    })
}

/// Rebuilds the unique partition with the given core and quotient.
pub fn reconstruct(cq: &CoreQuotient) -> Result<Partition> {
    let p = cq.p;
    if p < 2 {
        return Err(Error::InvalidModulus(p));
    }
    if cq.quotient.len() != p {
        return Err(Error::QuotientArity {
            expected: p,
            got: cq.quotient.len(),
        });
    }
    if !is_p_core(&cq.core, p) {
        return Err(Error::NotAPCore(p));
    }
    // Pad until every runner has enough beads for its quotient component.
    let mut t = smallest_multiple_at_least(p, cq.core.len());
    let mut runners = runner_heights(&cq.core, p, t);
    while runners
        .iter()
        .zip(&cq.quotient)
        .any(|(r, q)| r.len() < q.len())
    {
        t += p;
        runners = runner_heights(&cq.core, p, t);
    }
    let mut beta = Vec::with_capacity(t);
    for (j, (runner, q)) in runners.iter().zip(&cq.quotient).enumerate() {
        let count = runner.len();
        for i in 1..=count {
            let height = q.row_len(i) + count - i;
            beta.push(j + p * height);
        }
    }
    Ok(partition_from_beta(&mut beta))
}

/// The unique 2^k-rim-hook of `lambda` if exactly one exists, `None` if none.
/// Several is an error: the caller violated the oddness hypothesis that
/// guarantees uniqueness.
pub fn unique_pk_hook(lambda: &Partition, k: u32) -> Result<Option<RimHook>> {
    let h = 1usize
        .checked_shl(k)
        .ok_or(Error::Precondition(format!("2^{k} overflows")))?;
    let mut rims = lambda.rim_hooks_of_length(h);
    match rims.len() {
        0 => Ok(None),
        1 => Ok(Some(rims.remove(0))),
        count => Err(Error::MultipleHooks { length: h, count }),
    }
}

/// Which of the four cover cases holds for an odd cover pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoverVariant {
    /// The removed cell is disjoint from the rim; both partitions share it.
    A,
    /// The removed cell is the hand of the rim (row case).
    B,
    /// The removed cell is the foot of the rim (column case).
    C,
    /// Both west and north neighbours lie in the rim; the rim slides inward.
    D,
}

/// Classification of an odd cover pair: the removed cell `c` of the big
/// partition and the removed cell `c_prime` of its 2^k-core.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverClass {
    pub variant: CoverVariant,
    pub c: Cell,
    pub c_prime: Cell,
}

/// Classifies how removing a cell from odd `lambda` interacts with its
/// unique 2^k-rim, and locates the matching cell removed from the core.
///
/// Requires `lambda`, `mu` odd, `mu` covered by `lambda`, `2^k <= |mu|`, and
/// `|lambda| < 2^(k+1)`. Guarantees that the 2^k-core of `mu` is the
/// 2^k-core of `lambda` minus `c_prime`.
pub fn classify_cover(lambda: &Partition, mu: &Partition, k: u32) -> Result<CoverClass> {
    let pk = 1usize << k;
    if !is_odd(lambda) {
        return Err(Error::NotOdd(lambda.clone()));
    }
    if !is_odd(mu) {
        return Err(Error::NotOdd(mu.clone()));
    }
    if mu.size() + 1 != lambda.size() || !lambda.contains(mu) {
        return Err(Error::Precondition(format!("{mu} is not covered by {lambda}")));
    }
    if pk > mu.size() || lambda.size() >= 2 * pk {
        return Err(Error::Precondition(format!(
            "need 2^k <= |mu| and |lambda| < 2^(k+1); got k={k}, |mu|={}, |lambda|={}",
            mu.size(),
            lambda.size()
        )));
    }

    let r = unique_pk_hook(lambda, k)?.ok_or_else(|| {
        Error::TheoremViolation(format!("odd partition {lambda} has no {pk}-hook"))
    })?;
    let s = unique_pk_hook(mu, k)?
        .ok_or_else(|| Error::TheoremViolation(format!("odd partition {mu} has no {pk}-hook")))?;

    let c = (1..=lambda.len())
        .find(|&row| lambda.row_len(row) != mu.row_len(row))
        .map(|row| Cell::new(row, lambda.row_len(row)))
        .expect("cover pairs differ in exactly one cell");

    let west_in_r = c.west().is_some_and(|w| r.contains(w));
    let north_in_r = c.north().is_some_and(|n| r.contains(n));

    let (variant, c_prime) = if !west_in_r && !north_in_r && !r.contains(c) {
        (CoverVariant::A, c)
    } else if west_in_r && !north_in_r {
        let foot_west = r
            .foot()
            .west()
            .expect("a rim with a west neighbour spans at least two columns");
        (CoverVariant::B, foot_west)
    } else if north_in_r && !west_in_r {
        let hand_north = r
            .hand()
            .north()
            .expect("a rim with a north neighbour spans at least two rows");
        (CoverVariant::C, hand_north)
    } else if west_in_r && north_in_r {
        let nw = c.northwest().expect("both neighbours exist");
        (CoverVariant::D, nw)
    } else {
        // c in r with no west/north neighbour in r would make r a single cell,
        // impossible for length 2^k with k >= 1.
        return Err(Error::TheoremViolation(format!(
            "cell {c:?} lies in the rim of {lambda} without interior neighbours"
        )));
    };

    // The guaranteed core relation; check it rather than trust the case split.
    let core_lambda = p_core(lambda, pk)?;
    let core_mu = p_core(mu, pk)?;
    let diff = (1..=core_lambda.len())
        .find(|&row| core_lambda.row_len(row) != core_mu.row_len(row))
        .map(|row| Cell::new(row, core_lambda.row_len(row)));
    if diff != Some(c_prime) || core_mu.size() + 1 != core_lambda.size() || !core_lambda.contains(&core_mu)
    {
        return Err(Error::TheoremViolation(format!(
            "core of {mu} is not core of {lambda} minus {c_prime:?}"
        )));
    }
    // In cases (b)-(d) the small rim is the big rim with c swapped for c_prime.
    if variant != CoverVariant::A {
        let mut expected: Vec<Cell> = r.cells().iter().copied().filter(|&x| x != c).collect();
        expected.push(c_prime);
        expected.sort_unstable();
        let mut actual: Vec<Cell> = s.cells().to_vec();
        actual.sort_unstable();
        if expected != actual {
            return Err(Error::TheoremViolation(format!(
                "rim of {mu} is not the rim of {lambda} with {c:?} replaced by {c_prime:?}"
            )));
        }
    } else if r.cells() != s.cells() {
        return Err(Error::TheoremViolation(format!(
            "case (a) rims of {lambda} and {mu} differ"
        )));
    }

    Ok(CoverClass {
        variant,
        c,
        c_prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn decompose_two_by_two() {
        let cq = decompose(&prt(&[2, 2]), 2).unwrap();
        assert_eq!(cq.core, Partition::empty());
        assert_eq!(cq.quotient, vec![prt(&[1]), prt(&[1])]);
    }

    #[test]
    fn decompose_staircase_is_its_own_core() {
        let cq = decompose(&prt(&[2, 1]), 2).unwrap();
        assert_eq!(cq.core, prt(&[2, 1]));
        assert_eq!(cq.quotient, vec![Partition::empty(), Partition::empty()]);
    }

    #[test]
    fn decompose_empty() {
        for p in [2, 3, 5] {
            let cq = decompose(&Partition::empty(), p).unwrap();
            assert_eq!(cq.core, Partition::empty());
            assert_eq!(cq.quotient, vec![Partition::empty(); p]);
        }
    }

    #[test]
    fn decompose_rejects_small_modulus() {
        assert!(matches!(
            decompose(&prt(&[1]), 1),
            Err(Error::InvalidModulus(1))
        ));
    }

    #[test]
    fn reconstruct_inverts_decompose() {
        let cq = CoreQuotient {
            p: 2,
            core: Partition::empty(),
            quotient: vec![prt(&[1]), prt(&[1])],
        };
        assert_eq!(reconstruct(&cq).unwrap(), prt(&[2, 2]));
    }

    #[test]
    fn reconstruct_identity_on_cores() {
        let lam = prt(&[3, 1, 1]); // a 3-core
        let cq = CoreQuotient {
            p: 3,
            core: lam.clone(),
            quotient: vec![Partition::empty(); 3],
        };
        assert_eq!(reconstruct(&cq).unwrap(), lam);
    }

    #[test]
    fn reconstruct_rejects_non_core() {
        let cq = CoreQuotient {
            p: 2,
            core: prt(&[2]), // hook length 2 divisible by 2
            quotient: vec![Partition::empty(), Partition::empty()],
        };
        assert_eq!(reconstruct(&cq).unwrap_err(), Error::NotAPCore(2));
    }

    #[test]
    fn singleton_quotients_of_core_one_give_odd_partitions_of_five() {
        let mut seen = Vec::new();
        for slot in 0..4 {
            let mut quotient = vec![Partition::empty(); 4];
            quotient[slot] = prt(&[1]);
            let cq = CoreQuotient {
                p: 4,
                core: prt(&[1]),
                quotient,
            };
            seen.push(reconstruct(&cq).unwrap());
        }
        let mut expected = vec![prt(&[5]), prt(&[2, 2, 1]), prt(&[3, 2]), prt(&[1, 1, 1, 1, 1])];
        seen.sort();
        expected.sort();
        assert_eq!(seen, expected);
    }

    #[test]
    fn unique_pk_hook_examples() {
        let rim = unique_pk_hook(&prt(&[3, 2]), 2).unwrap().unwrap();
        assert_eq!(
            rim.cells(),
            &[
                Cell::new(2, 1),
                Cell::new(2, 2),
                Cell::new(1, 2),
                Cell::new(1, 3)
            ]
        );

        let rim = unique_pk_hook(&prt(&[5]), 2).unwrap().unwrap();
        assert_eq!(
            rim.cells(),
            &[
                Cell::new(1, 2),
                Cell::new(1, 3),
                Cell::new(1, 4),
                Cell::new(1, 5)
            ]
        );

        assert_eq!(
            unique_pk_hook(&prt(&[2, 2]), 1),
            Err(Error::MultipleHooks { length: 2, count: 2 })
        );
        assert_eq!(unique_pk_hook(&prt(&[1]), 2).unwrap(), None);
    }

    #[test]
    fn classify_cover_case_d() {
        let class = classify_cover(&prt(&[3, 2]), &prt(&[3, 1]), 2).unwrap();
        assert_eq!(class.variant, CoverVariant::D);
        assert_eq!(class.c, Cell::new(2, 2));
        assert_eq!(class.c_prime, Cell::new(1, 1));
    }

    #[test]
    fn classify_cover_row_and_column_cases() {
        let class = classify_cover(&prt(&[5]), &prt(&[4]), 2).unwrap();
        assert_eq!(class.variant, CoverVariant::B);
        assert_eq!(class.c, Cell::new(1, 5));
        assert_eq!(class.c_prime, Cell::new(1, 1));

        let class = classify_cover(&prt(&[1, 1, 1, 1, 1]), &prt(&[1, 1, 1, 1]), 2).unwrap();
        assert_eq!(class.variant, CoverVariant::C);
        assert_eq!(class.c, Cell::new(5, 1));
        assert_eq!(class.c_prime, Cell::new(1, 1));
    }

    #[test]
    fn classify_cover_case_a() {
        // (5,1) covers (5): the removed cell (2,1) is disjoint from the row rim.
        let class = classify_cover(&prt(&[5, 1]), &prt(&[5]), 2).unwrap();
        assert_eq!(class.variant, CoverVariant::A);
        assert_eq!(class.c, Cell::new(2, 1));
        assert_eq!(class.c_prime, Cell::new(2, 1));
    }

    #[test]
    fn classify_cover_rejects_bad_input() {
        // (2,2) is even.
        assert!(matches!(
            classify_cover(&prt(&[2, 2]), &prt(&[2, 1]), 1),
            Err(Error::NotOdd(_))
        ));
        // Not a cover pair.
        assert!(matches!(
            classify_cover(&prt(&[3, 2]), &prt(&[2, 2]), 2),
            Err(Error::Precondition(_))
        ));
        // Size window violated: |mu| < 2^k.
        assert!(matches!(
            classify_cover(&prt(&[3, 1]), &prt(&[3]), 2),
            Err(Error::Precondition(_))
        ));
    }
}
