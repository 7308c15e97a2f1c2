//! Exact arithmetic in small finite fields GF(p^e).
//!
//! Fields are built structurally: a prime field GF(p), or an extension of an
//! already-built field by a monic irreducible modulus. Orders of the form 4^k
//! are always towers over the canonical GF(4) so that quaternary scalars act
//! digit-wise on the representation. After construction every field carries
//! full exp/log tables (orders are capped at 4096), so multiplication,
//! inversion and discrete logarithms are table lookups.
//!
//! Element text form: `0`, `1`, `w`, `w^<e>` where `w` is the field's
//! primitive element; prime fields additionally accept plain integers.

use std::fmt;
use std::sync::Arc;

use crate::error::FieldError;

/// Largest supported field order (power tables stay exhaustive below this).
pub const MAX_ORDER: usize = 4096;

/// Orders at or below this get a full addition table; characteristic-2 fields
/// add by XOR instead and never need one.
const ADD_TABLE_MAX: usize = 1024;

pub type FieldRef = Arc<Field>;

/// A finite field GF(p^e) with exhaustive arithmetic tables.
pub struct Field {
    base: Option<FieldRef>,
    characteristic: usize,
    /// Total extension degree over the prime field.
    degree: usize,
    /// Degree over the immediate base (1 for prime fields).
    ext_degree: usize,
    order: usize,
    /// Monic modulus over the base field, low-degree first (empty for primes).
    modulus: Vec<u16>,
    primitive: u16,
    exp: Vec<u16>,
    log: Vec<u16>,
    add_tbl: Vec<u16>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.characteristic == other.characteristic
            && self.modulus == other.modulus
            && self.primitive == other.primitive
            && match (&self.base, &other.base) {
                (None, None) => true,
                (Some(a), Some(b)) => a.as_ref() == b.as_ref(),
                _ => false,
            }
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order)
    }
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// ---------------------------------------------------------------------------
// Polynomial helpers over an already-built field (vectors of element indices,
// low-degree first). Used for irreducibility testing and structural reduction.
// ---------------------------------------------------------------------------

fn poly_trim(v: &mut Vec<u16>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_sub(a: &[u16], b: &[u16], f: &Field) -> Vec<u16> {
    let mut out = vec![0u16; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = f.sub_idx(x, y);
    }
    poly_trim(&mut out);
    out
}

fn poly_mul(a: &[u16], b: &[u16], f: &Field) -> Vec<u16> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u16; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add_idx(out[i + j], f.mul_idx(x, y));
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_rem(a: &[u16], m: &[u16], f: &Field) -> Vec<u16> {
    let mut r: Vec<u16> = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = f
        .inv_idx(m[dm])
        .expect("modulus leading coefficient must be nonzero");
    while r.len() > dm {
        let dr = r.len() - 1;
        let c = f.mul_idx(r[dr], lead_inv);
        for (i, &mi) in m.iter().enumerate() {
            let pos = dr - dm + i;
            r[pos] = f.sub_idx(r[pos], f.mul_idx(c, mi));
        }
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn poly_gcd(a: &[u16], b: &[u16], f: &Field) -> Vec<u16> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem(&x, &y, f);
        x = y;
        y = r;
    }
    x
}

fn poly_mulmod(a: &[u16], b: &[u16], m: &[u16], f: &Field) -> Vec<u16> {
    poly_rem(&poly_mul(a, b, f), m, f)
}

/// a^e mod m over the base field f.
fn poly_powmod(a: &[u16], mut e: u64, m: &[u16], f: &Field) -> Vec<u16> {
    let mut result = vec![1u16];
    let mut square = poly_rem(a, m, f);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mulmod(&result, &square, m, f);
        }
        square = poly_mulmod(&square, &square, m, f);
        e >>= 1;
    }
    result
}

/// Rabin irreducibility test for a monic modulus over `base`.
fn is_irreducible(modulus: &[u16], base: &Field) -> bool {
    let e = modulus.len() - 1;
    if e == 0 {
        return false;
    }
    let q = base.order() as u64;
    let x = vec![0u16, 1u16];
    // x^(q^s) mod modulus, computed by s-fold q-th powering.
    let frob = |s: usize| -> Vec<u16> {
        let mut z = poly_rem(&x, modulus, base);
        for _ in 0..s {
            z = poly_powmod(&z, q, modulus, base);
        }
        z
    };
    let xq = frob(e);
    if poly_sub(&xq, &x, base) != Vec::<u16>::new() {
        return false;
    }
    for r in prime_divisors(e) {
        let z = frob(e / r);
        let g = poly_gcd(&poly_sub(&z, &x, base), modulus, base);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Field construction
// ---------------------------------------------------------------------------

impl Field {
    /// The prime field GF(p) with the least primitive root as `w`.
    pub fn prime(p: usize) -> Result<FieldRef, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::Unsupported(format!("{p} is not prime")));
        }
        if p > MAX_ORDER {
            return Err(FieldError::Unsupported(format!(
                "order {p} above cap {MAX_ORDER}"
            )));
        }
        let mut f = Field {
            base: None,
            characteristic: p,
            degree: 1,
            ext_degree: 1,
            order: p,
            modulus: Vec::new(),
            primitive: 0,
            exp: Vec::new(),
            log: Vec::new(),
            add_tbl: Vec::new(),
        };
        let primitive = (1..p as u16)
            .find(|&g| f.slow_order(g) == p - 1)
            .expect("every prime field has a primitive root");
        f.primitive = primitive;
        f.fill_tables();
        Ok(Arc::new(f))
    }

    /// Extend `base` by a monic irreducible `modulus` (base-element indices,
    /// low-degree first). If `primitive` is `None` the smallest generator of
    /// the multiplicative group is chosen.
    pub fn extension(
        base: &FieldRef,
        modulus: &[u16],
        primitive: Option<u16>,
    ) -> Result<FieldRef, FieldError> {
        if modulus.len() < 3 {
            return Err(FieldError::InvalidModulus(
                "extension degree must be at least 2".into(),
            ));
        }
        let e = modulus.len() - 1;
        if modulus[e] != 1 {
            return Err(FieldError::InvalidModulus("modulus must be monic".into()));
        }
        if modulus.iter().any(|&c| c as usize >= base.order) {
            return Err(FieldError::InvalidModulus(
                "coefficient outside the base field".into(),
            ));
        }
        let order = base
            .order
            .checked_pow(e as u32)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or_else(|| {
                FieldError::Unsupported(format!("order {}^{e} above cap {MAX_ORDER}", base.order))
            })?;
        if !is_irreducible(modulus, base) {
            return Err(FieldError::InvalidModulus(format!(
                "polynomial {modulus:?} is reducible over GF({})",
                base.order
            )));
        }
        let mut f = Field {
            base: Some(base.clone()),
            characteristic: base.characteristic,
            degree: base.degree * e,
            ext_degree: e,
            order,
            modulus: modulus.to_vec(),
            primitive: 0,
            exp: Vec::new(),
            log: Vec::new(),
            add_tbl: Vec::new(),
        };
        let primitive = match primitive {
            Some(g) => {
                if g == 0 || g as usize >= order || f.slow_order(g) != order - 1 {
                    return Err(FieldError::NotPrimitive(format!("{g}")));
                }
                g
            }
            None => (2..order as u16)
                .find(|&g| f.slow_order(g) == order - 1)
                .expect("extension fields always contain a primitive element"),
        };
        f.primitive = primitive;
        f.fill_tables();
        Ok(Arc::new(f))
    }

    /// The canonical field of order `q`.
    ///
    /// Pinned constructions: GF(4) = GF(2)[x]/(x^2+x+1) with w = x;
    /// GF(8) = GF(2)[x]/(x^3+x+1); GF(9) = GF(3)[x]/(x^2+x+2);
    /// GF(25) = GF(5)[x]/(x^2+4x+2); GF(27) = GF(3)[x]/(x^3+2x+1);
    /// GF(16) = GF(4)[y]/(y^2+y+a); GF(64) = GF(4)[y]/(y^3+y^2+y+a);
    /// larger 4^k orders are towers over GF(4) with a searched modulus.
    pub fn gf(q: usize) -> Result<FieldRef, FieldError> {
        match q {
            2 | 3 | 5 => Self::prime(q),
            4 => Self::extension(&Self::prime(2)?, &[1, 1, 1], Some(2)),
            8 => Self::extension(&Self::prime(2)?, &[1, 1, 0, 1], Some(2)),
            9 => Self::extension(&Self::prime(3)?, &[2, 1, 1], Some(3)),
            25 => Self::extension(&Self::prime(5)?, &[2, 4, 1], Some(5)),
            27 => Self::extension(&Self::prime(3)?, &[1, 2, 0, 1], Some(3)),
            16 => Self::extension(&Self::gf(4)?, &[2, 1, 1], Some(4)),
            64 => Self::extension(&Self::gf(4)?, &[2, 1, 1, 1], Some(4)),
            256 | 1024 | 4096 => {
                let k = (q.trailing_zeros() / 2) as usize;
                Self::gf4_tower(k)
            }
            _ => Err(FieldError::Unsupported(format!(
                "no canonical construction for order {q}"
            ))),
        }
    }

    /// The canonical GF(4^k) tower. For k > 3 the modulus is the least monic
    /// irreducible over GF(4) whose root x is primitive with x^((4^k-1)/3)
    /// equal to the quaternary generator a.
    pub fn gf4_tower(k: usize) -> Result<FieldRef, FieldError> {
        match k {
            0 => Err(FieldError::Unsupported("4^0 is not a field order".into())),
            1 => Self::gf(4),
            2 => Self::gf(16),
            3 => Self::gf(64),
            _ => {
                let gf4 = Self::gf(4)?;
                let order = 4usize.checked_pow(k as u32).filter(|&q| q <= MAX_ORDER);
                let order = order.ok_or_else(|| {
                    FieldError::Unsupported(format!("4^{k} above cap {MAX_ORDER}"))
                })?;
                for code in 0..order {
                    let mut modulus: Vec<u16> =
                        (0..k).map(|i| ((code >> (2 * i)) & 3) as u16).collect();
                    modulus.push(1);
                    if modulus[0] == 0 || !is_irreducible(&modulus, &gf4) {
                        continue;
                    }
                    let f = Self::extension(&gf4, &modulus, None)?;
                    // Require the structural root x (index 4) to be primitive
                    // and to power down onto the canonical GF(4) generator.
                    if f.primitive == 4 && f.pow_idx(4, ((order - 1) / 3) as i64)? == 2 {
                        return Ok(f);
                    }
                }
                Err(FieldError::Unsupported(format!(
                    "no suitable modulus of degree {k} over GF(4)"
                )))
            }
        }
    }

    fn fill_tables(&mut self) {
        let q = self.order;
        let mut exp = vec![0u16; q - 1];
        let mut log = vec![0u16; q];
        let mut acc: u16 = 1;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = acc;
            log[acc as usize] = i as u16;
            acc = self.slow_mul(acc, self.primitive);
        }
        debug_assert_eq!(acc, 1, "primitive element must have order q-1");
        self.exp = exp;
        self.log = log;
        if self.characteristic != 2 && q <= ADD_TABLE_MAX {
            let mut tbl = vec![0u16; q * q];
            for x in 0..q {
                for y in 0..q {
                    tbl[x * q + y] = self.slow_add(x as u16, y as u16);
                }
            }
            self.add_tbl = tbl;
        }
    }

    // -- structural (table-free) arithmetic, used while building tables

    fn slow_add(&self, x: u16, y: u16) -> u16 {
        match &self.base {
            None => ((x as usize + y as usize) % self.characteristic) as u16,
            Some(b) => {
                let r = b.order as u16;
                let mut out = 0u16;
                let mut mult = 1u32;
                let (mut xr, mut yr) = (x, y);
                for _ in 0..self.ext_degree {
                    let d = b.slow_add(xr % r, yr % r);
                    out += (d as u32 * mult) as u16;
                    mult *= r as u32;
                    xr /= r;
                    yr /= r;
                }
                out
            }
        }
    }

    fn slow_neg(&self, x: u16) -> u16 {
        if self.characteristic == 2 {
            return x;
        }
        match &self.base {
            None => ((self.characteristic - x as usize) % self.characteristic) as u16,
            Some(b) => {
                let r = b.order as u16;
                let mut out = 0u16;
                let mut mult = 1u32;
                let mut xr = x;
                for _ in 0..self.ext_degree {
                    out += (b.slow_neg(xr % r) as u32 * mult) as u16;
                    mult *= r as u32;
                    xr /= r;
                }
                out
            }
        }
    }

    fn slow_mul(&self, x: u16, y: u16) -> u16 {
        match &self.base {
            None => ((x as usize * y as usize) % self.characteristic) as u16,
            Some(b) => {
                let e = self.ext_degree;
                let xd = self.digits(x);
                let yd = self.digits(y);
                let mut prod = vec![0u16; 2 * e - 1];
                for (i, &xi) in xd.iter().enumerate() {
                    if xi == 0 {
                        continue;
                    }
                    for (j, &yj) in yd.iter().enumerate() {
                        prod[i + j] = b.add_idx(prod[i + j], b.mul_idx(xi, yj));
                    }
                }
                // reduce by the monic modulus
                for d in (e..prod.len()).rev() {
                    let c = prod[d];
                    if c == 0 {
                        continue;
                    }
                    prod[d] = 0;
                    for (i, &mi) in self.modulus[..e].iter().enumerate() {
                        let pos = d - e + i;
                        prod[pos] = b.sub_idx(prod[pos], b.mul_idx(c, mi));
                    }
                }
                self.undigits(&prod[..e])
            }
        }
    }

    fn slow_pow(&self, x: u16, mut e: u64) -> u16 {
        let mut result = 1u16;
        let mut square = x;
        while e > 0 {
            if e & 1 == 1 {
                result = self.slow_mul(result, square);
            }
            square = self.slow_mul(square, square);
            e >>= 1;
        }
        result
    }

    fn slow_order(&self, x: u16) -> usize {
        if x == 0 {
            return 0;
        }
        let group = self.order - 1;
        let mut ord = group;
        for r in prime_divisors(group) {
            while ord.is_multiple_of(r) && self.slow_pow(x, (ord / r) as u64) == 1 {
                ord /= r;
            }
        }
        ord
    }

    // -- fast index arithmetic

    #[inline]
    pub(crate) fn add_idx(&self, x: u16, y: u16) -> u16 {
        if self.characteristic == 2 {
            x ^ y
        } else if !self.add_tbl.is_empty() {
            self.add_tbl[x as usize * self.order + y as usize]
        } else {
            self.slow_add(x, y)
        }
    }

    #[inline]
    pub(crate) fn neg_idx(&self, x: u16) -> u16 {
        if self.characteristic == 2 {
            x
        } else {
            self.slow_neg(x)
        }
    }

    #[inline]
    pub(crate) fn sub_idx(&self, x: u16, y: u16) -> u16 {
        self.add_idx(x, self.neg_idx(y))
    }

    #[inline]
    pub(crate) fn mul_idx(&self, x: u16, y: u16) -> u16 {
        if x == 0 || y == 0 {
            return 0;
        }
        if self.exp.is_empty() {
            return self.slow_mul(x, y); // only during table construction
        }
        let g = self.order - 1;
        let s = self.log[x as usize] as usize + self.log[y as usize] as usize;
        self.exp[s % g]
    }

    pub(crate) fn inv_idx(&self, x: u16) -> Result<u16, FieldError> {
        if x == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let g = self.order - 1;
        Ok(self.exp[(g - self.log[x as usize] as usize) % g])
    }

    pub(crate) fn pow_idx(&self, x: u16, e: i64) -> Result<u16, FieldError> {
        if x == 0 {
            return match e {
                0 => Ok(1),
                e if e > 0 => Ok(0),
                _ => Err(FieldError::DivisionByZero),
            };
        }
        let g = (self.order - 1) as i64;
        let e = ((self.log[x as usize] as i64 * (e % g)) % g + g) % g;
        Ok(self.exp[e as usize])
    }

    pub(crate) fn dlog_idx(&self, x: u16) -> Result<u32, FieldError> {
        if x == 0 {
            return Err(FieldError::NoLogarithm);
        }
        Ok(self.log[x as usize] as u32)
    }

    // -- representation helpers

    /// Radix decomposition of an element index over the immediate base field.
    pub(crate) fn digits(&self, x: u16) -> Vec<u16> {
        match &self.base {
            None => vec![x],
            Some(b) => {
                let r = b.order as u16;
                let mut out = Vec::with_capacity(self.ext_degree);
                let mut xr = x;
                for _ in 0..self.ext_degree {
                    out.push(xr % r);
                    xr /= r;
                }
                out
            }
        }
    }

    pub(crate) fn undigits(&self, d: &[u16]) -> u16 {
        match &self.base {
            None => d[0],
            Some(b) => {
                let r = b.order as u32;
                let mut out = 0u32;
                for &di in d.iter().rev() {
                    out = out * r + di as u32;
                }
                out as u16
            }
        }
    }

    // -- public inspection

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn characteristic(&self) -> usize {
        self.characteristic
    }

    /// Total extension degree over the prime field.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Degree over the immediate base field (1 for prime fields).
    pub fn ext_degree(&self) -> usize {
        self.ext_degree
    }

    pub fn base(&self) -> Option<&FieldRef> {
        self.base.as_ref()
    }

    pub fn modulus(&self) -> &[u16] {
        &self.modulus
    }

    pub(crate) fn primitive_idx(&self) -> u16 {
        self.primitive
    }

    pub(crate) fn add_table(&self) -> &[u16] {
        &self.add_tbl
    }

    pub(crate) fn same_field(a: &FieldRef, b: &FieldRef) -> bool {
        Arc::ptr_eq(a, b) || a.as_ref() == b.as_ref()
    }

    /// Canonical text form of an element index.
    pub fn format_idx(&self, x: u16) -> String {
        match x {
            0 => "0".to_string(),
            1 => "1".to_string(),
            _ => match self.log[x as usize] {
                1 => "w".to_string(),
                e => format!("w^{e}"),
            },
        }
    }

    pub(crate) fn parse_idx(&self, token: &str) -> Result<u16, FieldError> {
        let t = token.trim();
        if t.is_empty() {
            return Err(FieldError::Parse(token.into(), "empty token".into()));
        }
        if t == "w" {
            return Ok(self.primitive);
        }
        if let Some(e) = t.strip_prefix("w^") {
            let e: i64 = e
                .parse()
                .map_err(|_| FieldError::Parse(token.into(), "bad exponent".into()))?;
            return self.pow_idx(self.primitive, e);
        }
        if let Ok(v) = t.parse::<usize>() {
            if v < 2 {
                return Ok(v as u16);
            }
            if self.base.is_none() {
                return Ok((v % self.order) as u16);
            }
            return Err(FieldError::Parse(
                token.into(),
                "plain integers above 1 are only valid in prime fields".into(),
            ));
        }
        Err(FieldError::Parse(
            token.into(),
            "expected 0, 1, w or w^<e>".into(),
        ))
    }
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

/// An element of a [`Field`], held as an index into its tables.
#[derive(Clone)]
pub struct Felt {
    field: FieldRef,
    idx: u16,
}

impl PartialEq for Felt {
    fn eq(&self, other: &Self) -> bool {
        self.idx == other.idx && Field::same_field(&self.field, &other.field)
    }
}
impl Eq for Felt {}

impl fmt::Debug for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[GF({})]",
            self.field.format_idx(self.idx),
            self.field.order()
        )
    }
}

impl fmt::Display for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_idx(self.idx))
    }
}

impl Felt {
    pub fn new(field: &FieldRef, idx: u16) -> Felt {
        assert!((idx as usize) < field.order(), "element index out of range");
        Felt {
            field: field.clone(),
            idx,
        }
    }

    pub fn zero(field: &FieldRef) -> Felt {
        Felt::new(field, 0)
    }

    pub fn one(field: &FieldRef) -> Felt {
        Felt::new(field, 1)
    }

    /// The field's designated primitive element `w`.
    pub fn generator(field: &FieldRef) -> Felt {
        Felt::new(field, field.primitive)
    }

    pub fn parse(field: &FieldRef, token: &str) -> Result<Felt, FieldError> {
        Ok(Felt::new(field, field.parse_idx(token)?))
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub(crate) fn idx(&self) -> u16 {
        self.idx
    }

    pub fn is_zero(&self) -> bool {
        self.idx == 0
    }

    pub fn is_one(&self) -> bool {
        self.idx == 1
    }

    /// Coefficients over the immediate base field, low power first.
    pub fn coeffs(&self) -> Vec<Felt> {
        match self.field.base() {
            None => vec![self.clone()],
            Some(b) => self
                .field
                .digits(self.idx)
                .into_iter()
                .map(|d| Felt::new(b, d))
                .collect(),
        }
    }

    pub fn checked_add(&self, other: &Felt) -> Result<Felt, FieldError> {
        if !Field::same_field(&self.field, &other.field) {
            return Err(FieldError::SpecMismatch);
        }
        Ok(Felt::new(
            &self.field,
            self.field.add_idx(self.idx, other.idx),
        ))
    }

    pub fn checked_sub(&self, other: &Felt) -> Result<Felt, FieldError> {
        if !Field::same_field(&self.field, &other.field) {
            return Err(FieldError::SpecMismatch);
        }
        Ok(Felt::new(
            &self.field,
            self.field.sub_idx(self.idx, other.idx),
        ))
    }

    pub fn checked_mul(&self, other: &Felt) -> Result<Felt, FieldError> {
        if !Field::same_field(&self.field, &other.field) {
            return Err(FieldError::SpecMismatch);
        }
        Ok(Felt::new(
            &self.field,
            self.field.mul_idx(self.idx, other.idx),
        ))
    }

    pub fn inv(&self) -> Result<Felt, FieldError> {
        Ok(Felt::new(&self.field, self.field.inv_idx(self.idx)?))
    }

    pub fn pow(&self, e: i64) -> Result<Felt, FieldError> {
        Ok(Felt::new(&self.field, self.field.pow_idx(self.idx, e)?))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl std::ops::Add for &Felt {
    type Output = Felt;
    fn add(self, rhs: &Felt) -> Felt {
        self.checked_add(rhs).expect("field mismatch in +")
    }
}
impl std::ops::Sub for &Felt {
    type Output = Felt;
    fn sub(self, rhs: &Felt) -> Felt {
        self.checked_sub(rhs).expect("field mismatch in -")
    }
}
impl std::ops::Mul for &Felt {
    type Output = Felt;
    fn mul(self, rhs: &Felt) -> Felt {
        self.checked_mul(rhs).expect("field mismatch in *")
    }
}

// ---------------------------------------------------------------------------
// Field-level named operations
// ---------------------------------------------------------------------------

/// Discrete logarithm of `a` to the field's primitive element.
pub fn dlog(a: &Felt) -> Result<u32, FieldError> {
    a.field().dlog_idx(a.idx())
}

/// The canonical GF(4) generator inside a field of order 4^k, i.e.
/// w^((4^k-1)/3).
pub fn subfield_alpha(field: &FieldRef) -> Result<Felt, FieldError> {
    let q = field.order();
    let mut m = q;
    while m.is_multiple_of(4) {
        m /= 4;
    }
    if m != 1 {
        return Err(FieldError::Unsupported(format!(
            "order {q} is not a power of 4"
        )));
    }
    let idx = field.pow_idx(field.primitive_idx(), ((q - 1) / 3) as i64)?;
    Ok(Felt::new(field, idx))
}

/// All elements of multiplicative order q-1, as ascending powers of the
/// canonical primitive element.
pub fn enumerate_primitive_elements(field: &FieldRef) -> Vec<Felt> {
    let g = field.order() - 1;
    (1..=g)
        .filter(|&e| gcd(e, g) == 1)
        .map(|e| Felt::new(field, field.exp[e % g]))
        .collect()
}
