use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntPolynomial;

/// A point `num / 2^exp`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    fn integer(v: i64) -> Self {
        Self { num: BigInt::from(v), exp: 0 }
    }

    fn midpoint(a: &Self, b: &Self) -> Self {
        let exp = a.exp.max(b.exp) + 1;
        let lift = |d: &Self| &d.num << (exp - 1 - d.exp);
        Self { num: lift(a) + lift(b), exp }
    }

    fn to_rational(&self) -> BigRational {
        BigRational::new(self.num.clone(), BigInt::one() << self.exp)
    }
}

/// Sign of `p(x)` evaluated without leaving the integers.
fn sign_at(p: &IntPolynomial, x: &Dyadic) -> i32 {
    let Some(d) = p.degree() else { return 0 };
    let scale = BigInt::one() << x.exp;
    let mut power = BigInt::one();
    let mut acc = p.coeffs()[d].clone();
    for i in (0..d).rev() {
        power *= &scale;
        acc = acc * &x.num + &p.coeffs()[i] * &power;
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

/// Sturm chain `p, p', -rem(p, p'), ...`, each term divided by its positive content.
pub fn sturm_sequence(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let reduce = |q: IntPolynomial| {
        let c = q.content();
        if c.is_zero() || c.is_one() {
            q
        } else {
            IntPolynomial::from_coeffs(q.coeffs().iter().map(|a| a / &c).collect())
        }
    };
    let mut seq = vec![reduce(p.clone())];
    if p.is_zero() {
        return seq;
    }
    let d = reduce(p.derivative());
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let r = -seq[n - 2].pseudo_rem(&seq[n - 1]);
        if r.is_zero() {
            return seq;
        }
        seq.push(reduce(r));
    }
}

fn variations(seq: &[IntPolynomial], x: &Dyadic) -> usize {
    let signs: Vec<i32> = seq.iter().map(|q| sign_at(q, x)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Squarefree chain shared by all counting routines.
struct Counter {
    base: IntPolynomial,
    chain: Vec<IntPolynomial>,
}

impl Counter {
    fn new(p: &IntPolynomial) -> Self {
        let base = p.squarefree_part();
        let chain = sturm_sequence(&base);
        Self { base, chain }
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    fn half_open(&self, a: &Dyadic, b: &Dyadic) -> usize {
        variations(&self.chain, a) - variations(&self.chain, b)
    }

    /// Distinct roots in the open interval `(a, b)`.
    fn open(&self, a: &Dyadic, b: &Dyadic) -> usize {
        self.half_open(a, b) - usize::from(sign_at(&self.base, b) == 0)
    }
}

fn dyadic_from_f64(x: f64) -> Dyadic {
    // Every finite double is a dyadic rational.
    let exact = BigRational::from_float(x).expect("finite bound");
    let exp = (exact.denom().bits() - 1) as u32;
    Dyadic { num: exact.numer().clone(), exp }
}

/// Number of distinct real roots in the open interval `(lo, hi)`.
pub fn count_roots_in(p: &IntPolynomial, lo: f64, hi: f64) -> usize {
    assert!(!p.is_zero(), "the zero polynomial vanishes everywhere");
    if lo >= hi {
        return 0;
    }
    Counter::new(p).open(&dyadic_from_f64(lo), &dyadic_from_f64(hi))
}

/// Number of distinct real roots in `(0, 1)`.
pub fn count_roots_in_unit_interval(p: &IntPolynomial) -> usize {
    count_roots_in(p, 0.0, 1.0)
}

/// Open interval with dyadic endpoints holding exactly one root, or the root itself when `lo == hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBracket {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootBracket {
    pub fn midpoint(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))).to_f64().unwrap_or(f64::NAN)
    }

    pub fn width(&self) -> f64 {
        (&self.hi - &self.lo).to_f64().unwrap_or(f64::NAN)
    }
}

/// Narrows `(lo, hi)`, known to hold at least one root, onto its least root.
fn bisect_least(c: &Counter, mut lo: Dyadic, mut hi: Dyadic, tol: f64) -> RootBracket {
    loop {
        if sign_at(&c.base, &hi) == 0 && c.open(&lo, &hi) == 0 {
            let r = hi.to_rational();
            return RootBracket { lo: r.clone(), hi: r };
        }
        let bracket = RootBracket { lo: lo.to_rational(), hi: hi.to_rational() };
        if bracket.width() <= tol {
            return bracket;
        }
        let mid = Dyadic::midpoint(&lo, &hi);
        if c.half_open(&lo, &mid) > 0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Least root in `(0, 1)` narrowed to a bracket of width at most `tol`, or `None`.
pub fn smallest_root_bracket(p: &IntPolynomial, tol: f64) -> Option<RootBracket> {
    if p.is_zero() {
        return None;
    }
    let c = Counter::new(p);
    let (zero, one) = (Dyadic::integer(0), Dyadic::integer(1));
    if c.open(&zero, &one) == 0 {
        return None;
    }
    // Invariant kept by the bisection: the least root lies in (lo, hi] and below 1.
    Some(bisect_least(&c, zero, one, tol))
}

/// Least root of `p` in the open interval `(0, 1)` to absolute accuracy `tol`.
pub fn smallest_root_in_unit_interval(p: &IntPolynomial, tol: f64) -> Option<f64> {
    smallest_root_bracket(p, tol).map(|b| b.midpoint())
}

/// Disjoint brackets, one per distinct root in `(0, 1)`, in increasing order.
pub fn isolate_roots_in_unit_interval(p: &IntPolynomial, tol: f64) -> Vec<RootBracket> {
    if p.is_zero() {
        return Vec::new();
    }
    let c = Counter::new(p);
    let mut out = Vec::new();
    let mut pending = vec![(Dyadic::integer(0), Dyadic::integer(1))];
    while let Some((lo, hi)) = pending.pop() {
        let n = c.open(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(bisect_least(&c, lo, hi, tol));
            continue;
        }
        let mid = Dyadic::midpoint(&lo, &hi);
        if sign_at(&c.base, &mid) == 0 {
            let r = mid.to_rational();
            out.push(RootBracket { lo: r.clone(), hi: r });
        }
        pending.push((mid.clone(), hi));
        pending.push((lo, mid));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}
