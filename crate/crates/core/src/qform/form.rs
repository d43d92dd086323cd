use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::local::{
    candidate_places, hilbert_symbol_classes, quaternion_class_of, Place, SquareClass,
    TwoTorsionBrauerClass,
};
use crate::error::{Error, Result};

/// A diagonal quadratic form `<a_1, ..., a_n>` over the rationals.
#[derive(Clone)]
pub struct RationalQuadraticForm {
    coefficients: Vec<BigRational>,
    classes: Vec<SquareClass>,
}

impl RationalQuadraticForm {
    pub fn new(coefficients: Vec<BigRational>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::Parse("a quadratic form needs at least one entry".into()));
        }
        let classes = coefficients
            .iter()
            .map(|a| {
                if a.is_zero() {
                    Err(Error::Parse("diagonal entries must be nonzero".into()))
                } else {
                    SquareClass::from_rational(a)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RationalQuadraticForm {
            coefficients,
            classes,
        })
    }

    pub fn from_integers(entries: &[i64]) -> Result<Self> {
        Self::new(
            entries
                .iter()
                .map(|&a| BigRational::from_integer(BigInt::from(a)))
                .collect(),
        )
    }

    /// `m` copies of the hyperbolic plane `<1, -1>`.
    pub fn hyperbolic(m: usize) -> Self {
        let mut entries = Vec::with_capacity(2 * m);
        for _ in 0..m {
            entries.extend([1, -1]);
        }
        Self::from_integers(&entries).expect("nonzero entries")
    }

    pub fn dim(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn square_classes(&self) -> &[SquareClass] {
        &self.classes
    }

    pub fn orthogonal_sum(&self, other: &Self) -> Self {
        let mut coefficients = self.coefficients.clone();
        coefficients.extend(other.coefficients.iter().cloned());
        let mut classes = self.classes.clone();
        classes.extend(other.classes.iter().cloned());
        RationalQuadraticForm {
            coefficients,
            classes,
        }
    }

    /// The scaled form `<a> q`.
    pub fn scaled(&self, a: &BigRational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::Parse("cannot scale by zero".into()));
        }
        Self::new(self.coefficients.iter().map(|x| x * a).collect())
    }

    /// Square class of the determinant `prod a_i`.
    pub fn determinant(&self) -> SquareClass {
        self.classes
            .iter()
            .fold(SquareClass::one(), |acc, c| acc.mul(c))
    }

    /// `(-1)^(n(n-1)/2) prod a_i` as a square class.
    pub fn signed_discriminant(&self) -> SquareClass {
        let n = self.dim();
        let det = self.determinant();
        if (n * (n - 1) / 2) % 2 == 1 {
            det.negate()
        } else {
            det
        }
    }

    /// `sum_{i<j} (a_i, a_j)`
    pub fn hasse_invariant(&self) -> TwoTorsionBrauerClass {
        let mut acc = TwoTorsionBrauerClass::trivial();
        for i in 0..self.classes.len() {
            for j in i + 1..self.classes.len() {
                acc.add_assign(&quaternion_class_of(&self.classes[i], &self.classes[j]));
            }
        }
        acc
    }

    /// Local Hasse invariant `prod_{i<j} (a_i, a_j)_v`.
    fn local_hasse(&self, place: &Place) -> i8 {
        let mut s = 1;
        for i in 0..self.classes.len() {
            for j in i + 1..self.classes.len() {
                s *= hilbert_symbol_classes(&self.classes[i], &self.classes[j], place);
            }
        }
        s
    }

    /// Class of the Clifford algebra (of its even part in odd dimension).
    ///
    /// Obtained from the Hasse invariant `s` and the determinant `d` by the
    /// dimension-mod-8 correction:
    /// `n = 1, 2: s`; `3, 4: s + (-1, -d)`; `5, 6: s + (-1, -1)`;
    /// `7, 0: s + (-1, d)`.
    pub fn witt_invariant(&self) -> TwoTorsionBrauerClass {
        let s = self.hasse_invariant();
        let d = self.determinant();
        let minus_one = SquareClass::minus_one();
        match self.dim() % 8 {
            1 | 2 => s,
            3 | 4 => s.add(&quaternion_class_of(&minus_one, &d.negate())),
            5 | 6 => s.add(&quaternion_class_of(&minus_one, &minus_one)),
            _ => s.add(&quaternion_class_of(&minus_one, &d)),
        }
    }

    pub fn spin_descriptor(&self) -> SpinDescriptor {
        SpinDescriptor {
            dimension: self.dim(),
            disc_trivial: self.signed_discriminant().is_one(),
            witt_trivial: self.witt_invariant().is_trivial(),
        }
    }

    /// Places outside this set see a unimodular form at an odd prime.
    pub fn candidate_places(&self) -> BTreeSet<Place> {
        candidate_places(&self.classes)
    }

    pub fn is_locally_isotropic(&self, place: &Place) -> bool {
        let n = self.dim();
        if let Place::Real = place {
            let pos = self.coefficients.iter().any(|a| a.is_positive());
            let neg = self.coefficients.iter().any(|a| a.is_negative());
            return pos && neg;
        }
        match n {
            1 => false,
            2 => self.determinant().negate().is_local_square(place),
            3 => {
                let d = self.determinant();
                let lhs = hilbert_symbol_classes(&SquareClass::minus_one(), &d.negate(), place);
                lhs == self.local_hasse(place)
            }
            4 => {
                let d = self.determinant();
                !d.is_local_square(place)
                    || self.local_hasse(place)
                        == hilbert_symbol_classes(
                            &SquareClass::minus_one(),
                            &SquareClass::minus_one(),
                            place,
                        )
            }
            _ => true,
        }
    }

    /// Local isotropy at every place that can obstruct, in place order.
    pub fn isotropy_report(&self) -> IsotropyReport {
        let n = self.dim();
        if n == 1 {
            return IsotropyReport {
                isotropic: false,
                rule: IsotropyRule::Anisotropic1,
                places: Vec::new(),
            };
        }
        if n == 2 {
            let isotropic = self.determinant().negate().is_one();
            return IsotropyReport {
                isotropic,
                rule: IsotropyRule::SquareTest,
                places: Vec::new(),
            };
        }
        let places: Vec<(Place, bool)> = if n >= 5 {
            vec![(Place::Real, self.is_locally_isotropic(&Place::Real))]
        } else {
            self.candidate_places()
                .into_iter()
                .map(|v| {
                    let iso = self.is_locally_isotropic(&v);
                    (v, iso)
                })
                .collect()
        };
        IsotropyReport {
            isotropic: places.iter().all(|(_, iso)| *iso),
            rule: IsotropyRule::LocalGlobal,
            places,
        }
    }

    pub fn is_isotropic(&self) -> bool {
        self.isotropy_report().isotropic
    }
}

/// The triple deciding whether `Spin(q)` of a ten-dimensional form is
/// strongly isotropic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinDescriptor {
    pub dimension: usize,
    pub disc_trivial: bool,
    pub witt_trivial: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsotropyRule {
    /// One-dimensional forms never vanish nontrivially.
    Anisotropic1,
    /// Binary forms: `-a_1 a_2` must be a rational square.
    SquareTest,
    /// Hasse-Minkowski over the examined places.
    LocalGlobal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotropyReport {
    pub isotropic: bool,
    pub rule: IsotropyRule,
    pub places: Vec<(Place, bool)>,
}

/// Isotropy of the torsor of `SO(q_base)` given by `q_twist`.
pub fn torsor_d5_isotropic(
    base: &RationalQuadraticForm,
    twist: &RationalQuadraticForm,
) -> Result<bool> {
    if !base.is_isotropic() {
        return Err(Error::InvalidTorsor(format!(
            "base form <{base}> is anisotropic"
        )));
    }
    if base.dim() != twist.dim() {
        return Err(Error::InvalidTorsor(format!(
            "dimensions differ: {} vs {}",
            base.dim(),
            twist.dim()
        )));
    }
    if base.signed_discriminant() != twist.signed_discriminant() {
        return Err(Error::InvalidTorsor(format!(
            "signed discriminants differ: {} vs {}",
            base.signed_discriminant(),
            twist.signed_discriminant()
        )));
    }
    Ok(twist.is_isotropic())
}

impl PartialEq for RationalQuadraticForm {
    fn eq(&self, other: &Self) -> bool {
        self.coefficients == other.coefficients
    }
}

impl Eq for RationalQuadraticForm {}

impl fmt::Debug for RationalQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

impl fmt::Display for RationalQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for RationalQuadraticForm {
    type Err = Error;

    /// Comma separated rational literals, e.g. `1,-1,2/3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('<')
            .and_then(|t| t.strip_suffix('>'))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Err(Error::Parse("empty quadratic form".into()));
        }
        let coefficients = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<BigRational>()
                    .map_err(|_| Error::Parse(format!("bad rational literal {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coefficients)
    }
}

impl Serialize for RationalQuadraticForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RationalQuadraticForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(entries: &[i64]) -> RationalQuadraticForm {
        RationalQuadraticForm::from_integers(entries).unwrap()
    }

    fn places(list: &[&str]) -> BTreeSet<Place> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn parsing() {
        let q: RationalQuadraticForm = "1,-1,2/3".parse().unwrap();
        assert_eq!(q.dim(), 3);
        assert_eq!(q.to_string(), "1,-1,2/3");
        assert!("1,0,2".parse::<RationalQuadraticForm>().is_err());
        assert!("".parse::<RationalQuadraticForm>().is_err());
        assert!("1,x".parse::<RationalQuadraticForm>().is_err());
        assert!("1/0".parse::<RationalQuadraticForm>().is_err());
        assert_eq!("<1, 2>".parse::<RationalQuadraticForm>().unwrap(), form(&[1, 2]));
    }

    #[test]
    fn signed_discriminant_examples() {
        assert_eq!(form(&[1; 10]).signed_discriminant().value(), &BigInt::from(-1));
        assert!(RationalQuadraticForm::hyperbolic(5).signed_discriminant().is_one());
        assert_eq!(form(&[-12]).signed_discriminant().value(), &BigInt::from(-3));
    }

    #[test]
    fn hasse_examples() {
        assert!(form(&[1, 1]).hasse_invariant().is_trivial());
        assert_eq!(form(&[-1, -1]).hasse_invariant().ramified(), &places(&["2", "real"]));
        assert_eq!(form(&[2, 5]).hasse_invariant().ramified(), &places(&["2", "5"]));
    }

    #[test]
    fn witt_examples() {
        // <1, -a, -b, ab> with a = b = -1
        assert_eq!(form(&[1, 1, 1, 1]).witt_invariant().ramified(), &places(&["2", "real"]));
        for m in 1..6 {
            assert!(RationalQuadraticForm::hyperbolic(m).witt_invariant().is_trivial());
        }
        let q = form(&[3, -5, 7]);
        let a = BigRational::from_integer(BigInt::from(-11));
        assert_eq!(q.scaled(&a).unwrap().witt_invariant(), q.witt_invariant());
    }

    #[test]
    fn local_isotropy_examples() {
        assert!(!form(&[1, 1, 1]).is_locally_isotropic(&Place::Real));
        assert!(form(&[1, 1, 1, 1, 1]).is_locally_isotropic(&Place::prime(2).unwrap()));
        assert!(!form(&[1, 1]).is_locally_isotropic(&Place::prime(7).unwrap()));
        assert!(form(&[1, 1]).is_locally_isotropic(&Place::prime(5).unwrap()));
    }

    #[test]
    fn global_isotropy_examples() {
        assert!(form(&[1, -1]).is_isotropic());
        assert!(!form(&[1, 1, 1]).is_isotropic());
        let q = form(&[1, 1, 1, 1, -7]);
        assert_eq!(1 + 1 + 1 + 4 - 7, 0);
        assert!(q.is_isotropic());
        assert!(!form(&[5]).is_isotropic());
        assert!(!form(&[1, -2]).is_isotropic());
        assert!(form(&[2, -8]).is_isotropic());
        // x^2 + y^2 - 3 z^2 fails at 3
        assert!(!form(&[1, 1, -3]).is_isotropic());
        assert!(form(&[1, 1, -2]).is_isotropic());
    }

    #[test]
    fn d5_torsors() {
        let h = RationalQuadraticForm::hyperbolic(5);
        assert!(torsor_d5_isotropic(&h, &h).unwrap());
        let twist = form(&[1, 1, 1, 1, 1, 1, 1, 1, 1, -1]);
        assert!(torsor_d5_isotropic(&h, &twist).unwrap());
        let base = form(&[1, 1, 1]);
        assert!(matches!(
            torsor_d5_isotropic(&base, &base),
            Err(Error::InvalidTorsor(_))
        ));
        assert!(torsor_d5_isotropic(&h, &form(&[1; 10])).is_err());
        assert!(torsor_d5_isotropic(&h, &form(&[1, -1])).is_err());
    }

    #[test]
    fn spin_descriptors() {
        let d = RationalQuadraticForm::hyperbolic(5).spin_descriptor();
        assert_eq!((d.dimension, d.disc_trivial, d.witt_trivial), (10, true, true));
        let d = form(&[1; 10]).spin_descriptor();
        assert_eq!((d.dimension, d.disc_trivial), (10, false));
        let d = form(&[1, -1]).spin_descriptor();
        assert_eq!((d.dimension, d.disc_trivial, d.witt_trivial), (2, true, true));
    }
}
