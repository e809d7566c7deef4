//! Automorphisms of Galois number fields.
//!
//! Each automorphism is fixed by the image of `θ`, which must be a root of the minimal
//! polynomial lying in the field. For `d ≥ 3` candidates come from a floating-point
//! Vandermonde solve over a permutation of the roots, rounded using the denominator bound
//! `lc · disc(F)` where `F` is the monic companion `lc^{d−1} f(X/lc)`, and are accepted
//! only after an exact check `f(θ') = 0`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::roots::C64;
use super::{FieldElement, NumberField};
use crate::{BigRat, QMatrix, ZPoly};

/// Field automorphism given by the image of the generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    image: FieldElement,
}

impl Automorphism {
    pub(crate) fn new(image: FieldElement) -> Self {
        Automorphism { image }
    }

    /// Image of `θ`.
    pub fn image(&self) -> &FieldElement {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image == self.image.field().generator()
    }

    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        let k = a.field();
        if k.degree() == 1 {
            return a.clone();
        }
        let mut acc = k.zero();
        for c in a.power_coords().iter().rev() {
            acc = &acc * &self.image + k.from_rat(c.clone());
        }
        acc
    }
}

fn is_root(k: &NumberField, z: &FieldElement) -> bool {
    let mut acc = k.zero();
    for c in k.minpoly().coeffs().iter().rev() {
        acc = &acc * z + k.from_int(c.clone());
    }
    acc.is_zero()
}

/// Discriminant of a monic integer polynomial, via the Sylvester resultant with its derivative.
fn discriminant_monic(f: &ZPoly) -> BigInt {
    let n = f.degree();
    let df: Vec<BigInt> = f.coeffs().iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    let m = n - 1;
    let size = n + m;
    let mut rows = vec![vec![BigRat::zero(); size]; size];
    for (r, row) in rows.iter_mut().enumerate().take(m) {
        for (j, c) in f.coeffs().iter().rev().enumerate() {
            row[r + j] = BigRat::from_integer(c.clone());
        }
    }
    for r in 0..n {
        for (j, c) in df.iter().rev().enumerate() {
            rows[m + r][r + j] = BigRat::from_integer(c.clone());
        }
    }
    let res = QMatrix::from_rows(rows).determinant().to_integer();
    if (n * (n - 1) / 2) % 2 == 1 {
        -res
    } else {
        res
    }
}

/// Solve a small complex linear system by Gaussian elimination with partial pivoting.
fn solve_c64(mut a: Vec<Vec<C64>>, mut b: Vec<C64>) -> Option<Vec<C64>> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))?;
        if a[p][c].abs() == 0.0 {
            return None;
        }
        a.swap(c, p);
        b.swap(c, p);
        for i in c + 1..n {
            let f = a[i][c].div(a[c][c]);
            let pivot = a[c].clone();
            for (x, y) in a[i][c..n].iter_mut().zip(&pivot[c..n]) {
                *x = x.sub(f.mul(*y));
            }
            b[i] = b[i].sub(f.mul(b[c]));
        }
    }
    let mut x = vec![C64 { re: 0.0, im: 0.0 }; n];
    for i in (0..n).rev() {
        let mut s = b[i];
        for j in i + 1..n {
            s = s.sub(a[i][j].mul(x[j]));
        }
        x[i] = s.div(a[i][i]);
    }
    Some(x)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Images of `θ` (power coordinates) under all automorphisms, identity first,
/// or `None` when the field is not Galois or its automorphisms could not be found.
pub(crate) fn automorphism_images(k: &NumberField) -> Option<Vec<Vec<BigRat>>> {
    let d = k.degree();
    let f = k.minpoly();
    let theta = k.generator();
    match d {
        1 => return Some(vec![theta.power_coords().to_vec()]),
        2 => {
            let other = k.from_rat(BigRat::new(-f.coeff(1), f.coeff(2))) - &theta;
            return Some(vec![theta.power_coords().to_vec(), other.power_coords().to_vec()]);
        }
        _ if d > 7 => return None,
        _ => {}
    }
    let lc = f.leading();
    // F(X) = lc^{d-1} f(X / lc) is monic with root lc·θ
    let big_f = ZPoly::new(
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i == d { BigInt::one() } else { c * num_traits::pow(lc.clone(), d - 1 - i) })
            .collect(),
    );
    let den = discriminant_monic(&big_f);
    let den_f = den.to_f64()?;
    let roots = k.roots(64).ok()?;
    let lcf = lc.to_f64()?;
    let z: Vec<C64> = roots
        .iter()
        .map(|r| C64 { re: r.re.mid().to_f64() * lcf, im: r.im.mid().to_f64() * lcf })
        .collect();
    let vander: Vec<Vec<C64>> = (0..d)
        .map(|i| {
            let mut row = Vec::with_capacity(d);
            let mut p = C64 { re: 1.0, im: 0.0 };
            for _ in 0..d {
                row.push(p);
                p = p.mul(z[i]);
            }
            row
        })
        .collect();
    let mut images: Vec<Vec<BigRat>> = vec![theta.power_coords().to_vec()];
    for j in 1..d {
        let mut found = false;
        for perm in permutations(d).into_iter().filter(|p| p[0] == j) {
            let rhs: Vec<C64> = perm.iter().map(|&i| z[i]).collect();
            let Some(c) = solve_c64(vander.clone(), rhs) else { continue };
            // coefficients of σ(lc·θ) in powers of lc·θ, times disc(F)
            let m: Option<Vec<BigInt>> = c
                .iter()
                .map(|ci| {
                    let v = (ci.re * den_f).round();
                    (v.is_finite() && (ci.re * den_f - v).abs() < 1e-3).then(|| BigInt::from(v as i128))
                })
                .collect();
            let Some(m) = m else { continue };
            // σ(θ) = Σ m_k (lc θ)^k / (lc · disc F)
            let pc: Vec<BigRat> = m
                .iter()
                .enumerate()
                .map(|(kk, mk)| BigRat::new(mk * num_traits::pow(lc.clone(), kk), &lc * &den))
                .collect();
            let cand = k.from_power_coords(pc).ok()?;
            if is_root(k, &cand) && !images.iter().any(|im| im == cand.power_coords()) {
                images.push(cand.power_coords().to_vec());
                found = true;
                break;
            }
        }
        if !found {
            return None;
        }
    }
    Some(images)
}
