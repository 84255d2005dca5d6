//! Exact scalars: arbitrary-precision rationals and prime fields.

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Which field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldKind {
    /// The rational numbers.
    Rational,
    /// The prime field with `p` elements, `p` prime and below 2^31.
    Prime(u32),
}

impl FieldKind {
    pub fn characteristic(&self) -> u32 {
        match self {
            FieldKind::Rational => 0,
            FieldKind::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldKind::Rational => Scalar::Rat(BigRational::zero()),
            FieldKind::Prime(p) => Scalar::Fp { p: *p, val: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldKind::Rational => Scalar::Rat(BigRational::one()),
            FieldKind::Prime(p) => Scalar::Fp { p: *p, val: 1 % *p },
        }
    }

    /// The image of an integer under the unique ring map from the integers.
    pub fn from_i64(&self, value: i64) -> Scalar {
        match self {
            FieldKind::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(value))),
            FieldKind::Prime(p) => {
                let p64 = *p as i64;
                Scalar::Fp {
                    p: *p,
                    val: value.rem_euclid(p64) as u32,
                }
            }
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// An element of the configured field.
///
/// Prime-field residues are kept in `0..p`; rationals are always reduced.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u32, val: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldKind {
        match self {
            Scalar::Rat(_) => FieldKind::Rational,
            Scalar::Fp { p, .. } => FieldKind::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { p, val } => *val == 1 % *p,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { p: q, val: b }) => {
                assert_eq!(p, q, "prime field mismatch");
                Scalar::Fp {
                    p: *p,
                    val: ((*a as u64 + *b as u64) % *p as u64) as u32,
                }
            }
            _ => panic!("field mismatch in scalar addition"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { p, val } => Scalar::Fp {
                p: *p,
                val: if *val == 0 { 0 } else { p - val },
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { p: q, val: b }) => {
                assert_eq!(p, q, "prime field mismatch");
                Scalar::Fp {
                    p: *p,
                    val: ((*a as u64 * *b as u64) % *p as u64) as u32,
                }
            }
            _ => panic!("field mismatch in scalar multiplication"),
        }
    }

    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Fp { p, val } => Scalar::Fp {
                p: *p,
                val: mod_pow(*val as u64, *p as u64 - 2, *p as u64) as u32,
            },
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// Exact conversion to an integer, if the scalar is integral.
    pub fn to_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    Some(r.numer().clone())
                } else {
                    None
                }
            }
            Scalar::Fp { val, .. } => Some(BigInt::from(*val)),
        }
    }

    /// Reduce a rational scalar with integral entries modulo `p`.
    pub fn reduce_mod(&self, p: u32) -> Scalar {
        match self {
            Scalar::Rat(r) => {
                let p_big = BigInt::from(p);
                let num = r.numer().clone() % &p_big;
                let den = r.denom().clone() % &p_big;
                assert!(!den.is_zero() || !r.denom().is_zero());
                let num_val = ((num + &p_big) % &p_big).to_u32_digits().1.first().copied().unwrap_or(0);
                let den_val = ((den + &p_big) % &p_big).to_u32_digits().1.first().copied().unwrap_or(0);
                assert!(den_val % p != 0, "denominator not invertible mod p");
                let den_inv = mod_pow(den_val as u64, p as u64 - 2, p as u64);
                Scalar::Fp {
                    p,
                    val: ((num_val as u64 * den_inv) % p as u64) as u32,
                }
            }
            Scalar::Fp { p: q, .. } => {
                assert_eq!(*q, p);
                self.clone()
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Parse a scalar in the canonical string form used by the file formats:
/// `a` or `a/b` over the rationals, a residue over a prime field.
pub fn parse_scalar(s: &str, field: FieldKind) -> Option<Scalar> {
    match field {
        FieldKind::Rational => {
            let (num, den) = match s.split_once('/') {
                Some((n, d)) => (n, d),
                None => (s, "1"),
            };
            let num: BigInt = num.parse().ok()?;
            let den: BigInt = den.parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Scalar::Rat(BigRational::new(num, den)))
        }
        FieldKind::Prime(p) => {
            let val: i64 = s.parse().ok()?;
            Some(FieldKind::Prime(p).from_i64(val))
        }
    }
}

/// Render a scalar in the canonical string form (inverse of [`parse_scalar`]).
pub fn scalar_to_string(s: &Scalar) -> String {
    use alloc::format;
    format!("{s}")
}
