//! Dense workspace for products and exact quotients of binomial factors.
//!
//! The verification engine spends nearly all of its time multiplying and
//! dividing polynomials of the shape `1 - s*m` for a signed monomial `s*m`.
//! Those factors act on a dense coefficient array as single strided passes:
//! multiplication subtracts a shifted copy, exact division is the inverse
//! scan. Supports live in a known exponent box, so a flat `Vec<BigInt>` with
//! row-major strides (the `q` axis innermost) beats the sparse tree by a
//! large factor. Callers fall back to sparse arithmetic when the box volume
//! exceeds [`DENSE_CELL_CAP`].
//!
//! Boxes double as truncation: a multiplication contribution that would land
//! outside the box is dropped. Exact callers must therefore size the box to
//! contain the full product support; series-limit callers size it at the
//! truncation order on purpose.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{ExponentVector, LaurentError, LaurentPolynomial, SignedMonomial, VAR_COUNT};

/// Largest dense box (in cells) the engine will allocate.
pub(crate) const DENSE_CELL_CAP: usize = 2_000_000;

/// Inclusive exponent box.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Bounds {
    pub min: [i64; VAR_COUNT],
    pub max: [i64; VAR_COUNT],
}

impl Bounds {
    /// The unit box: just the constant term.
    pub fn point() -> Self {
        Bounds {
            min: [0; VAR_COUNT],
            max: [0; VAR_COUNT],
        }
    }

    /// Tight hull of a nonzero polynomial; `None` for zero.
    pub fn of(p: &LaurentPolynomial) -> Option<Self> {
        let mut it = p.iter_terms();
        let first = *it.next()?.0.exps();
        let mut b = Bounds {
            min: first,
            max: first,
        };
        for (m, _) in it {
            for d in 0..VAR_COUNT {
                let e = m.exps()[d];
                b.min[d] = b.min[d].min(e);
                b.max[d] = b.max[d].max(e);
            }
        }
        Some(b)
    }

    /// Widens to hold a product with `1 - s*m`.
    pub fn widen_binomial(&mut self, sm: &SignedMonomial) {
        for d in 0..VAR_COUNT {
            let mu = sm.mono.exps()[d];
            if mu >= 0 {
                self.max[d] += mu;
            } else {
                self.min[d] += mu;
            }
        }
    }

    pub fn translate(&mut self, m: &ExponentVector) {
        for d in 0..VAR_COUNT {
            self.min[d] += m.exps()[d];
            self.max[d] += m.exps()[d];
        }
    }

    pub fn extent(&self, d: usize) -> usize {
        (self.max[d] - self.min[d] + 1) as usize
    }

    /// Cell count, `None` on overflow.
    pub fn volume(&self) -> Option<usize> {
        let mut v: usize = 1;
        for d in 0..VAR_COUNT {
            if self.max[d] < self.min[d] {
                return Some(0);
            }
            v = v.checked_mul(self.extent(d))?;
        }
        Some(v)
    }

    pub fn fits_dense(&self) -> bool {
        self.volume().is_some_and(|v| v <= DENSE_CELL_CAP)
    }
}

/// Dense coefficient array over an exponent box.
#[derive(Debug, Clone)]
pub(crate) struct DensePoly {
    min: [i64; VAR_COUNT],
    dims: [usize; VAR_COUNT],
    strides: [usize; VAR_COUNT],
    data: Vec<BigInt>,
}

impl DensePoly {
    pub fn zeros(bounds: &Bounds) -> Self {
        let mut dims = [0usize; VAR_COUNT];
        let mut strides = [0usize; VAR_COUNT];
        let mut vol = 1usize;
        for d in 0..VAR_COUNT {
            assert!(bounds.max[d] >= bounds.min[d], "empty bounds");
            dims[d] = bounds.extent(d);
            strides[d] = vol;
            vol = vol.checked_mul(dims[d]).expect("dense box volume overflow");
        }
        assert!(vol <= DENSE_CELL_CAP, "dense box volume {vol} exceeds cap");
        DensePoly {
            min: bounds.min,
            dims,
            strides,
            data: vec![BigInt::zero(); vol],
        }
    }

    pub fn from_sparse(p: &LaurentPolynomial, bounds: &Bounds) -> Self {
        let mut dp = Self::zeros(bounds);
        for (m, c) in p.iter_terms() {
            let idx = dp.index_of(m.exps());
            dp.data[idx] = c.clone();
        }
        dp
    }

    fn index_of(&self, exps: &[i64; VAR_COUNT]) -> usize {
        let mut idx = 0usize;
        for (d, &e) in exps.iter().enumerate() {
            let off = e - self.min[d];
            debug_assert!(
                off >= 0 && (off as usize) < self.dims[d],
                "exponent outside box"
            );
            idx += off as usize * self.strides[d];
        }
        idx
    }

    /// Reverses the coefficient order along one axis, mapping the exponent
    /// `e` to `-(e)` relative to the box. This is the ring automorphism
    /// `x -> 1/x` restricted to the box; it lets the scan kernels assume a
    /// nonnegative step direction.
    fn flip_axis(&mut self, d: usize) {
        let n = self.dims[d];
        if n <= 1 {
            self.min[d] = -(self.min[d] + n as i64 - 1);
            return;
        }
        let stride = self.strides[d];
        let block = stride * n;
        let total = self.data.len();
        let mut base = 0;
        while base < total {
            for lane in 0..stride {
                let mut i = 0;
                let mut j = n - 1;
                while i < j {
                    self.data
                        .swap(base + lane + i * stride, base + lane + j * stride);
                    i += 1;
                    j -= 1;
                }
            }
            base += block;
        }
        self.min[d] = -(self.min[d] + n as i64 - 1);
    }

    /// Runs `op` with the binomial direction normalized to be componentwise
    /// nonnegative, flipping axes before and after as needed.
    fn with_nonneg_direction<R>(
        &mut self,
        sm: &SignedMonomial,
        op: impl FnOnce(&mut Self, &SignedMonomial) -> R,
    ) -> R {
        let mut flipped = Vec::new();
        let mut mono = sm.mono;
        for d in 0..VAR_COUNT {
            if mono.exps()[d] < 0 {
                self.flip_axis(d);
                flipped.push(d);
                let mut exps = *mono.exps();
                exps[d] = -exps[d];
                mono = ExponentVector::from_exps(exps);
            }
        }
        let r = op(
            self,
            &SignedMonomial {
                negative: sm.negative,
                mono,
            },
        );
        for d in flipped {
            self.flip_axis(d);
        }
        r
    }

    /// Multiplies in place by `1 - s*m`. Contributions that would leave the
    /// box are dropped, which is exact when the box holds the full product
    /// support and a truncation otherwise.
    pub fn mul_binomial(&mut self, sm: &SignedMonomial) {
        assert!(!sm.mono.is_unit(), "unit-monomial binomial is not a scan");
        self.with_nonneg_direction(sm, |dp, sm| dp.mul_binomial_nonneg(sm));
    }

    fn mul_binomial_nonneg(&mut self, sm: &SignedMonomial) {
        let mu = *sm.mono.exps();
        let mut off = 0usize;
        let mut lo = self.min;
        let mut hi = self.min;
        for d in 0..VAR_COUNT {
            off += mu[d] as usize * self.strides[d];
            lo[d] = self.min[d] + mu[d];
            hi[d] = self.min[d] + self.dims[d] as i64 - 1;
            if lo[d] > hi[d] {
                return; // no shifted contribution fits in the box
            }
        }
        // new[v] = old[v] - s*old[v - mu]; descending order keeps sources old.
        let subtract = !sm.negative;
        let mut coord = hi;
        let mut idx = self.index_of(&hi);
        loop {
            let (head, tail) = self.data.split_at_mut(idx);
            let src = &head[idx - off];
            if !src.is_zero() {
                if subtract {
                    tail[0] -= src;
                } else {
                    tail[0] += src;
                }
            }
            let mut d = 0;
            loop {
                if coord[d] > lo[d] {
                    coord[d] -= 1;
                    idx -= self.strides[d];
                    break;
                }
                coord[d] = hi[d];
                idx += (hi[d] - lo[d]) as usize * self.strides[d];
                d += 1;
                if d == VAR_COUNT {
                    return;
                }
            }
        }
    }

    /// Divides in place by `1 - s*m`, requiring the division to be exact.
    /// On success the quotient occupies the box shrunk by the binomial's
    /// degree; the excess region is verified to be zero.
    pub fn div_binomial_exact(&mut self, sm: &SignedMonomial) -> Result<(), LaurentError> {
        assert!(!sm.mono.is_unit(), "unit-monomial binomial is not a scan");
        self.with_nonneg_direction(sm, |dp, sm| dp.div_binomial_nonneg(sm))
    }

    fn div_binomial_nonneg(&mut self, sm: &SignedMonomial) -> Result<(), LaurentError> {
        let mu = *sm.mono.exps();
        let mut off = 0usize;
        let mut lo = self.min;
        let mut hi = self.min;
        for d in 0..VAR_COUNT {
            off += mu[d] as usize * self.strides[d];
            lo[d] = self.min[d] + mu[d];
            hi[d] = self.min[d] + self.dims[d] as i64 - 1;
            if mu[d] > 0 && hi[d] - mu[d] < self.min[d] {
                // Quotient box is empty in this axis; exact only for zero.
                return if self.data.iter().all(Zero::is_zero) {
                    Ok(())
                } else {
                    Err(LaurentError::NonDivisible)
                };
            }
        }
        // q[v] = p[v] + s*q[v - mu]; ascending order finalizes sources first.
        let add = !sm.negative;
        if lo.iter().zip(&hi).all(|(l, h)| l <= h) {
            let mut coord = lo;
            let mut idx = self.index_of(&lo);
            loop {
                let (head, tail) = self.data.split_at_mut(idx);
                let src = &head[idx - off];
                if !src.is_zero() {
                    if add {
                        tail[0] += src;
                    } else {
                        tail[0] -= src;
                    }
                }
                let mut d = 0;
                loop {
                    if coord[d] < hi[d] {
                        coord[d] += 1;
                        idx += self.strides[d];
                        break;
                    }
                    coord[d] = lo[d];
                    idx -= (hi[d] - lo[d]) as usize * self.strides[d];
                    d += 1;
                    if d == VAR_COUNT {
                        return self.check_quotient_region(&mu);
                    }
                }
            }
        }
        self.check_quotient_region(&mu)
    }

    /// After a division scan, cells outside the shrunk quotient box must be
    /// zero; anything else is a nonzero remainder.
    fn check_quotient_region(&self, mu: &[i64; VAR_COUNT]) -> Result<(), LaurentError> {
        let mut coord = self.min;
        let mut qmax = self.min;
        for d in 0..VAR_COUNT {
            qmax[d] = self.min[d] + self.dims[d] as i64 - 1 - mu[d];
        }
        for cell in &self.data {
            if !cell.is_zero() && (0..VAR_COUNT).any(|d| coord[d] > qmax[d]) {
                return Err(LaurentError::NonDivisible);
            }
            for (d, c) in coord.iter_mut().enumerate() {
                if *c < self.min[d] + self.dims[d] as i64 - 1 {
                    *c += 1;
                    break;
                }
                *c = self.min[d];
            }
        }
        Ok(())
    }

    pub fn into_sparse(mut self) -> LaurentPolynomial {
        let mut terms = Vec::new();
        let mut coord = self.min;
        for cell in &mut self.data {
            if !cell.is_zero() {
                terms.push((ExponentVector::from_exps(coord), std::mem::take(cell)));
            }
            for (d, c) in coord.iter_mut().enumerate() {
                if *c < self.min[d] + self.dims[d] as i64 - 1 {
                    *c += 1;
                    break;
                }
                *c = self.min[d];
            }
        }
        LaurentPolynomial::from_terms(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Variable;

    fn poly(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn mul_then_div_round_trips() {
        let p = poly("1 + 2*q + 1*q^2*z");
        let sm = SignedMonomial::var_pow(Variable::Q, 3);
        let mut b = Bounds::of(&p).unwrap();
        b.widen_binomial(&sm);
        let mut dp = DensePoly::from_sparse(&p, &b);
        dp.mul_binomial(&sm);
        let product = dp.clone().into_sparse();
        let expect = p.mul(&poly("1 - 1*q^3"));
        assert_eq!(product, expect);
        dp.div_binomial_exact(&sm).unwrap();
        assert_eq!(dp.into_sparse(), p);
    }

    #[test]
    fn div_detects_remainder() {
        let p = poly("1 + 1*q^2");
        let sm = SignedMonomial::var_pow(Variable::Q, 1);
        let b = Bounds::of(&p).unwrap();
        let mut dp = DensePoly::from_sparse(&p, &b);
        assert_eq!(dp.div_binomial_exact(&sm), Err(LaurentError::NonDivisible));
    }

    #[test]
    fn negative_direction_binomial() {
        // (1 + z) * (1 - z^-1) = -z^-1 + z  (the constant terms cancel)
        let p = poly("1 + 1*z");
        let sm = SignedMonomial::var_pow(Variable::Z, -1);
        let mut b = Bounds::of(&p).unwrap();
        b.widen_binomial(&sm);
        let mut dp = DensePoly::from_sparse(&p, &b);
        dp.mul_binomial(&sm);
        assert_eq!(dp.into_sparse(), poly("-1*z^-1 + 1*z"));
    }

    #[test]
    fn truncating_box_drops_high_terms() {
        // Multiplying by (1 - q^2) inside a box capped at q^2 keeps only
        // the contributions at or below the cap.
        let p = poly("1 + 1*q + 1*q^2");
        let sm = SignedMonomial::var_pow(Variable::Q, 2);
        let b = Bounds::of(&p).unwrap(); // max q exponent stays 2
        let mut dp = DensePoly::from_sparse(&p, &b);
        dp.mul_binomial(&sm);
        assert_eq!(dp.into_sparse(), poly("1 + 1*q"));
    }
}
