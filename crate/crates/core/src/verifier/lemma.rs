use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// For `x >= y > 0`, `t >= 1` and `a = [a_0, …, a_t]` with every `a_i >= 2`
/// and `a_0 <= max_{i>=1} a_i`, whether
/// `(x + a_0 − 2 + t) / (y + Σ_{i>=1} a_i − t) <= x / y`.
pub fn check_lemma_inequality(x: Rational, y: Rational, t: usize, a: &[usize]) -> Result<bool> {
    let pre = |why: &str| Err(Error::Precondition(why.to_string()));
    if x.is_infinite() || y.is_infinite() {
        return pre("x and y must be finite");
    }
    if !y.is_positive() || x < y {
        return pre("need x >= y > 0");
    }
    if t < 1 || a.len() != t + 1 {
        return pre("need t >= 1 and exactly t + 1 values a_0..a_t");
    }
    if a.iter().any(|&ai| ai < 2) {
        return pre("every a_i must be at least 2");
    }
    if a[0] > *a[1..].iter().max().unwrap() {
        return pre("need a_0 <= max a_i over i >= 1");
    }
    let t = Rational::from(t);
    let lhs = (x + Rational::from(a[0]) - Rational::int(2) + t)
        / (y + Rational::from(a[1..].iter().sum::<usize>()) - t);
    Ok(lhs <= x / y)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaTuple {
    pub x: Rational,
    pub y: Rational,
    pub t: usize,
    pub a: Vec<usize>,
}

/// A tuple satisfying every precondition of [`check_lemma_inequality`].
pub fn random_lemma_tuple(rng: &mut impl Rng) -> LemmaTuple {
    let y = Rational::new(rng.gen_range(1..=60), rng.gen_range(1..=12));
    let x = y + Rational::new(rng.gen_range(0..=60), rng.gen_range(1..=12));
    let t = rng.gen_range(1..=8);
    let mut a: Vec<usize> = (0..=t).map(|_| rng.gen_range(2..=15)).collect();
    let top = *a[1..].iter().max().unwrap();
    a[0] = rng.gen_range(2..=top);
    LemmaTuple { x, y, t, a }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub samples: usize,
    pub seed: u64,
    pub holds: usize,
    pub failures: Vec<LemmaTuple>,
}

/// Checks the inequality on `samples` seeded random valid tuples.
pub fn inequality_property(samples: usize, seed: u64) -> InequalityReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let tup = random_lemma_tuple(&mut rng);
        if !check_lemma_inequality(tup.x, tup.y, tup.t, &tup.a).expect("sampled tuples are valid") {
            failures.push(tup);
        }
    }
    InequalityReport {
        samples,
        seed,
        holds: samples - failures.len(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let one = Rational::int(1);
        assert_eq!(check_lemma_inequality(one, one, 1, &[2, 2]), Ok(true));
        // (3 + 2 − 2 + 2)/(2 + 5 − 2) = 5/5 = 1 <= 3/2
        assert_eq!(
            check_lemma_inequality(Rational::int(3), Rational::int(2), 2, &[2, 3, 2]),
            Ok(true)
        );
        assert!(check_lemma_inequality(one, Rational::int(2), 1, &[2, 2]).is_err());
        assert!(check_lemma_inequality(one, one, 1, &[3, 2]).is_err());
        assert!(check_lemma_inequality(one, one, 1, &[2, 1]).is_err());
        assert!(check_lemma_inequality(one, one, 2, &[2, 2]).is_err());
    }

    #[test]
    fn sampled_tuples() {
        let r = inequality_property(2000, 11);
        assert_eq!(r.holds, 2000);
    }
}
