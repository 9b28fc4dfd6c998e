use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Parses `"p/q"`, `"p"` or `"-p/q"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(p, q))
}

/// Scales a rational row by the lcm of its denominators.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let Some(cols) = m.first().map(Vec::len) else {
        return 0;
    };
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            for j in c + 1..cols {
                let v = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Rank of a list of rational row vectors.
pub fn rank<'a>(rows: impl IntoIterator<Item = &'a Vec<Rational>>) -> usize {
    integer_rank(rows.into_iter().map(|r| integer_row(r)).collect())
}

/// A maximal independent subset of `rows`, greedily from the front.
pub fn independent_rows(rows: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for row in rows {
        basis.push(row.clone());
        if rank(&basis) < basis.len() {
            basis.pop();
        }
    }
    basis
}

/// `Σ_j coeffs[j] · rows[j]`.
pub fn combine(coeffs: &[i64], rows: &[Vec<Rational>], dim: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (c, row) in coeffs.iter().zip(rows) {
        let c = Rational::from_integer(BigInt::from(*c));
        for (o, x) in out.iter_mut().zip(row) {
            *o += &c * x;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn rows(v: &[&[&str]]) -> Vec<Vec<Rational>> {
        v.iter().map(|r| r.iter().map(|s| q(s)).collect()).collect()
    }

    #[test]
    fn parses_and_reduces() {
        assert_eq!(q("2/4"), q("1/2"));
        assert_eq!(q("-3"), Rational::from_integer(BigInt::from(-3)));
        assert_eq!(q(" 6/-4 ").to_string(), "-3/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&rows(&[&["1", "-1/2", "0"]])), 1);
        assert_eq!(rank(&rows(&[&["1", "2"], &["1/2", "1"]])), 1);
        assert_eq!(rank(&rows(&[&["0", "0"], &["0", "3"]])), 1);
        assert_eq!(
            rank(&rows(&[
                &["1", "-1", "0", "0"],
                &["0", "1", "-1", "0"],
                &["1", "0", "-1", "0"]
            ])),
            2
        );
        assert_eq!(rank(&Vec::<Vec<Rational>>::new()), 0);
        // zero column before the pivot
        assert_eq!(
            rank(&rows(&[
                &["0", "1", "2"],
                &["0", "2", "5"],
                &["0", "3", "7"]
            ])),
            2
        );
    }

    #[test]
    fn independent_subset() {
        let r = rows(&[&["1", "0"], &["2", "0"], &["0", "1"]]);
        assert_eq!(independent_rows(&r), rows(&[&["1", "0"], &["0", "1"]]));
    }
}
