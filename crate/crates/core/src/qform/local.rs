use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{factor_biguint, squarefree_part};
use crate::error::{Error, Result};

/// A place of the rationals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Prime(BigUint),
    Real,
}

impl Place {
    pub fn prime(p: u64) -> Result<Self> {
        Place::prime_big(BigUint::from(p))
    }

    pub fn prime_big(p: BigUint) -> Result<Self> {
        let f = factor_biguint(&p);
        if f.len() != 1 || f[0].1 != 1 {
            return Err(Error::Parse(format!("{p} is not a prime")));
        }
        Ok(Place::Prime(p))
    }

    pub(crate) fn two() -> Self {
        Place::Prime(BigUint::from(2u32))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Real => f.write_str("real"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "real" | "inf" | "infinity" | "R" => Ok(Place::Real),
            t => {
                let p: BigUint = t
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad place {t:?}")))?;
                Place::prime_big(p)
            }
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Place {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        let text = match v {
            serde_json::Value::String(s) => s,
            serde_json::Value::Number(n) => n.to_string(),
            other => return Err(serde::de::Error::custom(format!("bad place {other}"))),
        };
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// A nonzero rational modulo squares, stored as its squarefree integer
/// representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareClass {
    value: BigInt,
    primes: Vec<BigUint>,
}

impl SquareClass {
    pub fn one() -> Self {
        SquareClass {
            value: BigInt::one(),
            primes: Vec::new(),
        }
    }

    pub fn minus_one() -> Self {
        SquareClass {
            value: -BigInt::one(),
            primes: Vec::new(),
        }
    }

    pub fn from_integer(n: &BigInt) -> Result<Self> {
        if n.is_zero() {
            return Err(Error::Parse("zero has no square class".into()));
        }
        let (value, primes) = squarefree_part(n);
        Ok(SquareClass { value, primes })
    }

    pub fn from_i64(n: i64) -> Result<Self> {
        Self::from_integer(&BigInt::from(n))
    }

    /// `p/q` and `p q` share a square class.
    pub fn from_rational(x: &BigRational) -> Result<Self> {
        Self::from_integer(&(x.numer() * x.denom()))
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    /// Primes dividing the squarefree representative, increasing.
    pub fn primes(&self) -> &[BigUint] {
        &self.primes
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.value.is_negative()
    }

    pub fn mul(&self, other: &SquareClass) -> SquareClass {
        let mut primes = Vec::with_capacity(self.primes.len() + other.primes.len());
        let (mut i, mut j) = (0, 0);
        while i < self.primes.len() || j < other.primes.len() {
            match (self.primes.get(i), other.primes.get(j)) {
                (Some(a), Some(b)) if a == b => {
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a < b => {
                    primes.push(a.clone());
                    i += 1;
                }
                (Some(_), Some(b)) => {
                    primes.push(b.clone());
                    j += 1;
                }
                (Some(a), None) => {
                    primes.push(a.clone());
                    i += 1;
                }
                (None, Some(b)) => {
                    primes.push(b.clone());
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        let magnitude: BigUint = primes.iter().product();
        let sign = if self.is_negative() != other.is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        };
        SquareClass {
            value: BigInt::from_biguint(sign, magnitude),
            primes,
        }
    }

    pub fn negate(&self) -> SquareClass {
        SquareClass {
            value: -&self.value,
            primes: self.primes.clone(),
        }
    }

    fn divisible_by(&self, p: &BigUint) -> bool {
        self.primes.binary_search(p).is_ok()
    }

    /// Is this class a square in the completion at `place`?
    pub fn is_local_square(&self, place: &Place) -> bool {
        match place {
            Place::Real => !self.is_negative(),
            Place::Prime(p) if is_two(p) => mod_small(&self.value, 8) == 1,
            Place::Prime(p) => !self.divisible_by(p) && legendre(&self.value, p) == 1,
        }
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Serialize for SquareClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.value)
    }
}

impl<'de> Deserialize<'de> for SquareClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let n: BigInt = s.parse().map_err(serde::de::Error::custom)?;
        SquareClass::from_integer(&n).map_err(serde::de::Error::custom)
    }
}

fn is_two(p: &BigUint) -> bool {
    p.to_u32() == Some(2)
}

fn mod_small(x: &BigInt, m: u32) -> u32 {
    let m_big = BigInt::from(m);
    (((x % &m_big) + &m_big) % &m_big).to_u32().unwrap()
}

/// Legendre symbol `(a / p)` for an odd prime `p`.
fn legendre(a: &BigInt, p: &BigUint) -> i8 {
    let p_int = BigInt::from(p.clone());
    let r = ((a % &p_int) + &p_int) % &p_int;
    if r.is_zero() {
        return 0;
    }
    let r = r.to_biguint().unwrap();
    let e = (p - 1u32) >> 1;
    if r.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

/// Local Hilbert symbol of two square classes.
pub fn hilbert_symbol_classes(a: &SquareClass, b: &SquareClass, place: &Place) -> i8 {
    match place {
        Place::Real => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(p) => {
            let alpha = a.divisible_by(p);
            let beta = b.divisible_by(p);
            let p_int = BigInt::from(p.clone());
            let u = if alpha { &a.value / &p_int } else { a.value.clone() };
            let v = if beta { &b.value / &p_int } else { b.value.clone() };
            if is_two(p) {
                let eps = |x: &BigInt| (mod_small(x, 4) == 3) as u32;
                let omega = |x: &BigInt| matches!(mod_small(x, 8), 3 | 5) as u32;
                let e = eps(&u) * eps(&v)
                    + alpha as u32 * omega(&v)
                    + beta as u32 * omega(&u);
                if e % 2 == 0 {
                    1
                } else {
                    -1
                }
            } else {
                let mut sign = 1i8;
                if alpha && beta && mod_small(&p_int, 4) == 3 {
                    sign = -sign;
                }
                if beta {
                    sign *= legendre(&u, p);
                }
                if alpha {
                    sign *= legendre(&v, p);
                }
                sign
            }
        }
    }
}

/// Local Hilbert symbol `(a, b)_v` of nonzero rationals.
pub fn hilbert_symbol(a: &BigRational, b: &BigRational, place: &Place) -> Result<i8> {
    let a = SquareClass::from_rational(a)?;
    let b = SquareClass::from_rational(b)?;
    Ok(hilbert_symbol_classes(&a, &b, place))
}

/// A 2-torsion Brauer class of the rationals, given by the places where it
/// ramifies. Addition is symmetric difference.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TwoTorsionBrauerClass {
    ramified: BTreeSet<Place>,
}

impl TwoTorsionBrauerClass {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Rejects ramification sets of odd cardinality.
    pub fn new(ramified: BTreeSet<Place>) -> Result<Self> {
        if ramified.len() % 2 == 1 {
            return Err(Error::Parse(format!(
                "ramification set of odd size {} violates reciprocity",
                ramified.len()
            )));
        }
        Ok(TwoTorsionBrauerClass { ramified })
    }

    pub fn ramified(&self) -> &BTreeSet<Place> {
        &self.ramified
    }

    pub fn is_trivial(&self) -> bool {
        self.ramified.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        TwoTorsionBrauerClass {
            ramified: self
                .ramified
                .symmetric_difference(&other.ramified)
                .cloned()
                .collect(),
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for p in &other.ramified {
            if !self.ramified.remove(p) {
                self.ramified.insert(p.clone());
            }
        }
    }

    /// The local invariant at `place` as `+1` (split) or `-1`.
    pub fn local_symbol(&self, place: &Place) -> i8 {
        if self.ramified.contains(place) {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for TwoTorsionBrauerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ramified.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl Serialize for TwoTorsionBrauerClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.ramified.len()))?;
        for p in &self.ramified {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for TwoTorsionBrauerClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let places = Vec::<Place>::deserialize(d)?;
        TwoTorsionBrauerClass::new(places.into_iter().collect()).map_err(serde::de::Error::custom)
    }
}

/// The places where a symbol `(a, b)` can ramify: the real place, 2, and
/// the odd primes dividing `a` or `b`.
pub fn candidate_places<'a>(classes: impl IntoIterator<Item = &'a SquareClass>) -> BTreeSet<Place> {
    let mut out = BTreeSet::new();
    out.insert(Place::Real);
    out.insert(Place::two());
    for c in classes {
        for p in c.primes() {
            out.insert(Place::Prime(p.clone()));
        }
    }
    out
}

/// The quaternion algebra `(a, b)` as a ramification set.
pub fn quaternion_class_of(a: &SquareClass, b: &SquareClass) -> TwoTorsionBrauerClass {
    let ramified = candidate_places([a, b])
        .into_iter()
        .filter(|v| hilbert_symbol_classes(a, b, v) == -1)
        .collect();
    TwoTorsionBrauerClass { ramified }
}

pub fn quaternion_class(a: &BigRational, b: &BigRational) -> Result<TwoTorsionBrauerClass> {
    Ok(quaternion_class_of(
        &SquareClass::from_rational(a)?,
        &SquareClass::from_rational(b)?,
    ))
}
