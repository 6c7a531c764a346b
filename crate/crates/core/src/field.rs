//! Table-driven arithmetic in GF(q) and its quadratic extension GF(q²).
//!
//! Elements are small indices: `0` is zero, `1` is one, and index `k + 1`
//! (for `1 <= k < q - 1`) is `g^k` for the fixed primitive element `g`.
//! Non-prime fields are built as polynomial residues modulo the smallest
//! monic irreducible polynomial of the right degree, which gives
//! x²+x+1 for GF(4), x³+x+1 for GF(8) and x²+1 for GF(9).

use crate::error::{Error, Result};

/// Index of a field element inside its [`FieldTable`].
pub type Elem = u8;

/// Largest field order the tables are built for.
pub const MAX_ORDER: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTable {
    q: usize,
    p: usize,
    degree: usize,
    /// Monic modulus, coefficients from the constant term up. Empty for prime fields.
    modulus: Vec<u8>,
    /// Index -> polynomial encoding (base-`p` digits, constant term least significant).
    encoding: Vec<usize>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
    primitive: Elem,
}

/// Returns `(p, k)` with `q = p^k`, or `None` if `q` is not a prime power.
pub fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

fn digits(mut v: usize, p: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for d in out.iter_mut() {
        *d = v % p;
        v /= p;
    }
    out
}

fn undigits(ds: &[usize], p: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Multiplies two residues modulo a monic polynomial of degree `k`.
fn poly_mulmod(a: &[usize], b: &[usize], modulus: &[u8], p: usize) -> Vec<usize> {
    let k = modulus.len() - 1;
    let mut prod = vec![0usize; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (k..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        for (i, &m) in modulus.iter().enumerate().take(k) {
            let idx = deg - k + i;
            prod[idx] = (prod[idx] + (p - c) * m as usize) % p;
        }
        prod[deg] = 0;
    }
    prod.truncate(k);
    prod
}

/// Remainder of `a` divided by monic `b` over GF(p); both low-to-high.
fn poly_rem(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - lead) * c) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(poly: &[usize], p: usize) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        // every monic divisor candidate of degree d
        for low in 0..p.pow(d as u32) {
            let mut cand = digits(low, p, d);
            cand.push(1);
            if poly_rem(poly, &cand, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: usize, k: usize) -> Vec<u8> {
    for low in 0..p.pow(k as u32) {
        let mut cand = digits(low, p, k);
        cand.push(1);
        if is_irreducible(&cand, p) {
            return cand.into_iter().map(|c| c as u8).collect();
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

/// Builds GF(q) for a prime power `q <= 256`.
pub fn make_field(q: usize) -> Result<FieldTable> {
    let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if q > MAX_ORDER {
        return Err(Error::UnsupportedOrder(q));
    }
    let modulus = if k == 1 { Vec::new() } else { smallest_irreducible(p, k) };

    // arithmetic on encodings
    let enc_mul = |a: usize, b: usize| -> usize {
        if k == 1 {
            a * b % p
        } else {
            let r = poly_mulmod(&digits(a, p, k), &digits(b, p, k), &modulus, p);
            undigits(&r, p)
        }
    };
    let enc_add = |a: usize, b: usize| -> usize {
        let (da, db) = (digits(a, p, k), digits(b, p, k));
        let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
        undigits(&s, p)
    };

    let order_of = |g: usize| -> usize {
        let mut x = g;
        let mut n = 1;
        while x != 1 {
            x = enc_mul(x, g);
            n += 1;
        }
        n
    };
    let generator = if q == 2 {
        1
    } else {
        (2..q).find(|&g| order_of(g) == q - 1).expect("multiplicative group is cyclic")
    };

    // index -> encoding
    let mut encoding = Vec::with_capacity(q);
    encoding.push(0);
    let mut x = 1;
    for _ in 0..q - 1 {
        encoding.push(x);
        x = enc_mul(x, generator);
    }
    let mut index_of = vec![0u8; q];
    for (i, &e) in encoding.iter().enumerate() {
        index_of[e] = i as Elem;
    }

    let mut add = vec![0; q * q];
    let mut mul = vec![0; q * q];
    for i in 0..q {
        for j in 0..q {
            add[i * q + j] = index_of[enc_add(encoding[i], encoding[j])];
            mul[i * q + j] = if i == 0 || j == 0 {
                0
            } else {
                ((i - 1 + j - 1) % (q - 1) + 1) as Elem
            };
        }
    }
    let neg = (0..q)
        .map(|i| (0..q).find(|&j| add[i * q + j] == 0).unwrap() as Elem)
        .collect();
    let inv = (0..q)
        .map(|i| if i == 0 { 0 } else { ((q - 1 - (i - 1)) % (q - 1) + 1) as Elem })
        .collect();

    Ok(FieldTable {
        q,
        p,
        degree: k,
        modulus,
        encoding,
        add,
        mul,
        neg,
        inv,
        primitive: if q == 2 { 1 } else { 2 },
    })
}

impl FieldTable {
    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Monic modulus, constant term first; empty for prime fields.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    pub fn primitive_element(&self) -> Elem {
        self.primitive
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.q).map(|e| e as Elem)
    }

    /// Polynomial encoding of an element: base-`p` digits of the residue.
    pub fn encoding(&self, a: Elem) -> usize {
        self.encoding[a as usize]
    }

    pub fn from_encoding(&self, enc: usize) -> Option<Elem> {
        self.encoding.iter().position(|&e| e == enc).map(|i| i as Elem)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        let r = n.rem_euclid(self.p as i64) as usize;
        self.from_encoding(r).expect("prime subfield element")
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            Err(Error::ZeroInverse)
        } else {
            Ok(self.inv[a as usize])
        }
    }

    /// Inverse of a known-nonzero element.
    #[inline]
    pub(crate) fn inv_nz(&self, a: Elem) -> Elem {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, n: u64) -> Elem {
        if n == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let e = (a as u64 - 1) * n % (self.q as u64 - 1);
        (e + 1) as Elem
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Elem) -> Result<usize> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        Ok(n)
    }

    /// Human-readable element: integers for prime fields, powers of ξ otherwise.
    pub fn format(&self, a: Elem) -> String {
        if self.degree == 1 {
            return self.encoding(a).to_string();
        }
        match a {
            0 => "0".into(),
            1 => "1".into(),
            2 => "ξ".into(),
            k => format!("ξ^{}", k - 1),
        }
    }
}

/// GF(q²) together with the embedding of GF(q) and the Frobenius x ↦ x^q.
#[derive(Debug, Clone)]
pub struct ExtFieldTable {
    pub base: FieldTable,
    pub ext: FieldTable,
    embed: Vec<Elem>,
    restrict: Vec<Option<Elem>>,
    frobenius: Vec<Elem>,
}

fn eval_in(ext: &FieldTable, coeffs: &[Elem], x: Elem) -> Elem {
    coeffs
        .iter()
        .rev()
        .fold(0, |acc, &c| ext.add(ext.mul(acc, x), c))
}

pub fn make_extension(base: &FieldTable) -> Result<ExtFieldTable> {
    let q = base.order();
    let ext = make_field(q * q)?;
    let p = base.characteristic();

    let prime_image = |d: usize| ext.from_int(d as i64);
    // image of the base generator x: a root of the base modulus inside GF(q²)
    let root = if base.degree() == 1 {
        None
    } else {
        let coeffs: Vec<Elem> = base.modulus().iter().map(|&c| prime_image(c as usize)).collect();
        Some(
            ext.elements()
                .find(|&r| eval_in(&ext, &coeffs, r) == 0)
                .expect("base modulus splits in the quadratic extension"),
        )
    };

    let embed: Vec<Elem> = base
        .elements()
        .map(|a| {
            let ds = digits(base.encoding(a), p, base.degree());
            match root {
                None => prime_image(ds[0]),
                Some(r) => {
                    let coeffs: Vec<Elem> = ds.iter().map(|&d| prime_image(d)).collect();
                    eval_in(&ext, &coeffs, r)
                }
            }
        })
        .collect();

    let mut restrict = vec![None; ext.order()];
    for a in base.elements() {
        restrict[embed[a as usize] as usize] = Some(a);
    }
    let frobenius = ext.elements().map(|x| ext.pow(x, q as u64)).collect();

    Ok(ExtFieldTable { base: base.clone(), ext, embed, restrict, frobenius })
}

impl ExtFieldTable {
    pub fn embed(&self, a: Elem) -> Elem {
        self.embed[a as usize]
    }

    /// Inverse of [`embed`](Self::embed) on the image of GF(q).
    pub fn restrict(&self, x: Elem) -> Option<Elem> {
        self.restrict[x as usize]
    }

    pub fn frobenius(&self, x: Elem) -> Elem {
        self.frobenius[x as usize]
    }

    pub fn is_rational(&self, x: Elem) -> bool {
        self.restrict[x as usize].is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SUPPORTED: [usize; 7] = [2, 3, 4, 5, 7, 8, 9];

    fn check_axioms(f: &FieldTable) {
        let els: Vec<Elem> = f.elements().collect();
        for &a in &els {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for &b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for &c in &els {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn axioms_hold_for_supported_orders() {
        for q in SUPPORTED.into_iter().chain([16]) {
            let f = make_field(q).unwrap();
            check_axioms(&f);
            assert_eq!(f.mult_order(f.primitive_element()).unwrap(), q - 1);
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        for q in [0, 1, 6, 10, 12, 15] {
            assert!(matches!(make_field(q), Err(Error::NotPrimePower(_))));
        }
        assert!(matches!(make_field(512), Err(Error::UnsupportedOrder(512))));
    }

    #[test]
    fn fixed_moduli() {
        assert_eq!(make_field(4).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(make_field(8).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(make_field(9).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn small_examples() {
        let f2 = make_field(2).unwrap();
        assert_eq!(f2.add(1, 1), 0);
        assert_eq!(f2.neg(1), 1);

        let f3 = make_field(3).unwrap();
        let two = f3.from_int(2);
        assert_eq!(f3.inv(two).unwrap(), two);
        assert_eq!(f3.sub(f3.from_int(0), f3.from_int(1)), two);

        let f4 = make_field(4).unwrap();
        let xi = f4.primitive_element();
        // ξ² = ξ + 1 under x² + x + 1
        assert_eq!(f4.mul(xi, xi), f4.add(xi, 1));
        assert_eq!(f4.pow(xi, 3), 1);
        assert_eq!(f4.encoding(xi), 2);
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = make_field(5).unwrap();
        assert_eq!(f.inv(0), Err(Error::ZeroInverse));
        assert_eq!(f.div(3, 0), Err(Error::ZeroInverse));
    }

    #[test]
    fn extension_embedding_and_frobenius() {
        for q in SUPPORTED {
            let base = make_field(q).unwrap();
            let e = make_extension(&base).unwrap();
            for a in base.elements() {
                for b in base.elements() {
                    assert_eq!(e.embed(base.add(a, b)), e.ext.add(e.embed(a), e.embed(b)));
                    assert_eq!(e.embed(base.mul(a, b)), e.ext.mul(e.embed(a), e.embed(b)));
                }
            }
            let mut fixed = 0;
            for x in e.ext.elements() {
                let fx = e.frobenius(x);
                assert_eq!(e.frobenius(fx), x);
                if fx == x {
                    fixed += 1;
                    assert!(e.is_rational(x));
                } else {
                    assert!(!e.is_rational(x));
                }
                for y in e.ext.elements() {
                    assert_eq!(e.frobenius(e.ext.mul(x, y)), e.ext.mul(fx, e.frobenius(y)));
                    assert_eq!(e.frobenius(e.ext.add(x, y)), e.ext.add(fx, e.frobenius(y)));
                }
            }
            assert_eq!(fixed, q);
        }
    }

    #[test]
    fn frobenius_over_gf2_squares() {
        let e = make_extension(&make_field(2).unwrap()).unwrap();
        let xi = e.ext.primitive_element();
        assert_eq!(e.frobenius(xi), e.ext.mul(xi, xi));
    }
}
