//! Compensated (Kahan-Babuska-Neumaier) summation. The force series add up
//! to a million same-sign terms against a 1e-12 relative target; naive
//! accumulation would eat the budget in roundoff alone.

/// Neumaier-compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        KahanSum::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensates_small_additions() {
        let mut k = KahanSum::new();
        k.add(1.0);
        for _ in 0..10_000_000 {
            k.add(1e-17);
        }
        // naive summation would return exactly 1.0
        assert!((k.value() - (1.0 + 1e-10)).abs() < 1e-15);
    }

    #[test]
    fn matches_exact_on_harmonic_chunk() {
        let mut k = KahanSum::new();
        for n in 1..=1000u32 {
            k.add(1.0 / f64::from(n));
        }
        let mut exact = 0.0f64;
        for n in (1..=1000u32).rev() {
            exact += 1.0 / f64::from(n);
        }
        assert!((k.value() - exact).abs() < 1e-13);
    }
}
