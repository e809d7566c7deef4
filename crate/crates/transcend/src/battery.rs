//! Seeded randomized checks of the height, house and norm inequalities on `Q(√5)`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::exactmath::{IntervalReal, Precision, Verdict};
use crate::numberfield::{
    house, house_linear_constant, liouville_check, linear_form_bound, mahler_and_height, minimal_polynomial,
    mult_matrix, norms, FieldElement, NumberField,
};
use crate::{BigRat, Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct BatteryConfig {
    pub seed: u64,
    pub instances: usize,
    /// bound on the numerators of the random coordinates
    pub coord_bound: i64,
    pub prec: Precision,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        BatteryConfig { seed: 1, instances: 200, coord_bound: 1000, prec: Precision { bits: 128, max_bits: 2048 } }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub name: &'static str,
    pub holds: usize,
    pub fails: usize,
    pub undecided: usize,
    /// instances where the statement does not apply (equal or conjugate inputs, zero forms)
    pub skipped: usize,
}

impl Tally {
    fn record(&mut self, v: Verdict) {
        match v {
            Verdict::Holds => self.holds += 1,
            Verdict::Fails => self.fails += 1,
            Verdict::Undecided => self.undecided += 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatteryReport {
    pub seed: u64,
    pub instances: usize,
    pub tallies: Vec<Tally>,
}

impl BatteryReport {
    /// No check was refuted or left undecided.
    pub fn passed(&self) -> bool {
        self.tallies.iter().all(|t| t.fails == 0 && t.undecided == 0)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .tallies
            .iter()
            .map(|t| json!({"check": t.name, "holds": t.holds, "fails": t.fails, "undecided": t.undecided, "skipped": t.skipped}))
            .collect();
        json!({"seed": self.seed, "instances": self.instances, "checks": checks, "passed": self.passed()})
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("invariant battery: {} instances in Q(sqrt 5), seed {}\n", self.instances, self.seed);
        for t in &self.tallies {
            s += &format!(
                "  {:<34} holds {:>4}  fails {:>3}  undecided {:>3}  skipped {:>3}\n",
                t.name, t.holds, t.fails, t.undecided, t.skipped
            );
        }
        s += if self.passed() { "all checks hold\n" } else { "SOME CHECKS FAILED\n" };
        s
    }
}

const NAMES: [&str; 10] = [
    "H(a)^deg = M(a)",
    "M(a) <= c_d max(house(a), 1)^deg",
    "H(ab) <= H(a)H(b)",
    "H(a+b) <= 2H(a)H(b)",
    "H(1/a) = H(a)",
    "Liouville |a-b| lower bound",
    "house(sum c_i x_i) <= C max|c_i|",
    "|r + s a| >= C max(|r|,|s|,1)^(-2deg)",
    "N_K(a) = det(mult by a)",
    "N_K(ab) = N_K(a)N_K(b)",
];

fn random_coord(rng: &mut ChaCha8Rng, bound: i64) -> BigRat {
    BigRat::new(BigInt::from(rng.gen_range(-bound..=bound)), BigInt::from(rng.gen_range(1..=4)))
}

fn random_element(k: &NumberField, rng: &mut ChaCha8Rng, bound: i64) -> Result<FieldElement> {
    loop {
        let e = k.from_coords(vec![random_coord(rng, bound), random_coord(rng, bound)])?;
        if !e.is_zero() {
            return Ok(e);
        }
    }
}

fn overlap(x: &IntervalReal, y: &IntervalReal) -> Verdict {
    Verdict::from(x.overlaps(y))
}

/// `x ≤ y` is refuted only when `x.lo > y.hi`. Inequalities that can be equalities
/// (`H(ab) = H(a)H(b)` is common) are never certified strictly by intervals.
fn not_refuted(x: &IntervalReal, y: &IntervalReal) -> Verdict {
    Verdict::from(x.lo() <= y.hi())
}

fn height(a: &FieldElement, p: Precision) -> Result<IntervalReal> {
    Ok(mahler_and_height(a, p)?.1)
}

fn deg(a: &FieldElement) -> u64 {
    minimal_polynomial(a).degree() as u64
}

/// Run every check on `instances` random pairs of elements of `Q(√5)` over the basis `{1, φ}`.
pub fn run_battery(cfg: &BatteryConfig) -> Result<BatteryReport> {
    if cfg.instances == 0 {
        return Err(Error::Invalid("the battery needs at least one instance".into()));
    }
    let k = NumberField::golden();
    let basis = k.basis_elements();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut t: Vec<Tally> = NAMES.iter().map(|n| Tally { name: n, ..Default::default() }).collect();
    let p = cfg.prec;
    for _ in 0..cfg.instances {
        let a = random_element(&k, &mut rng, cfg.coord_bound)?;
        let b = random_element(&k, &mut rng, cfg.coord_bound)?;

        let (m, h) = mahler_and_height(&a, p)?;
        t[0].record(overlap(&h.powi(deg(&a), p), &m));

        let cd = minimal_polynomial(&a).leading().clone();
        let top = house(&a, p)?.max(&IntervalReal::one()).powi(deg(&a), p);
        t[1].record(not_refuted(&m, &top.mul(&IntervalReal::from_bigint(&cd), p)));

        let ab = &a * &b;
        let hb = height(&b, p)?;
        t[2].record(not_refuted(&height(&ab, p)?, &h.mul(&hb, p)));

        let sum = &a + &b;
        if sum.is_zero() {
            t[3].skipped += 1;
        } else {
            t[3].record(not_refuted(&height(&sum, p)?, &h.mul(&hb, p).mul_2exp(1)));
        }

        t[4].record(overlap(&height(&a.inv()?, p)?, &h));

        match liouville_check(&a, &b, p) {
            Ok(v) => t[5].record(v),
            Err(Error::EqualInputs | Error::ConjugatePair) => t[5].skipped += 1,
            Err(e) => return Err(e),
        }

        let c: Vec<BigInt> = (0..2).map(|_| BigInt::from(rng.gen_range(-cfg.coord_bound..=cfg.coord_bound))).collect();
        let comb = &basis[0].scale(&BigRat::from_integer(c[0].clone())) + &basis[1].scale(&BigRat::from_integer(c[1].clone()));
        let top = c.iter().map(|x| x.abs()).max().unwrap_or_default();
        let bound = house_linear_constant(&basis, p)?.mul(&IntervalReal::from_bigint(&top), p);
        t[6].record(not_refuted(&house(&comb, p)?, &bound));

        let r = BigInt::from(rng.gen_range(-cfg.coord_bound..=cfg.coord_bound));
        let s = BigInt::from(rng.gen_range(-cfg.coord_bound..=cfg.coord_bound));
        if r.is_zero() && s.is_zero() {
            t[7].skipped += 1;
        } else {
            match linear_form_bound(&a, &r, &s, p) {
                Ok(v) => t[7].record(v),
                Err(Error::ZeroForm) => t[7].skipped += 1,
                Err(e) => return Err(e),
            }
        }

        let (_, na) = norms(&a);
        let (_, nb) = norms(&b);
        t[8].record(Verdict::from(na == mult_matrix(&a).determinant() && nb == mult_matrix(&b).determinant()));
        t[9].record(Verdict::from(norms(&ab).1 == &na * &nb));
    }
    Ok(BatteryReport { seed: cfg.seed, instances: cfg.instances, tallies: t })
}
