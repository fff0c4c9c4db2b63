//! Legacy Mersenne Twister stream: MT19937 seeded by the Knuth scalar
//! initializer, 53-bit uniform doubles, and Marsaglia-polar gaussians with a
//! cached spare deviate.
//!
//! This reproduces NumPy's legacy `RandomState` draw sequence bit for bit:
//! seeding `RandomState(s)` with a small integer and calling
//! `standard_normal()` yields exactly the values of [`Mt19937::next_gauss`]
//! after [`Mt19937::new`] with the same seed. The simulation layer depends on
//! that equivalence for its reproducible datasets.

const N: usize = 624;
const M: usize = 397;
const MATRIX_A: u32 = 0x9908_b0df;
const UPPER_MASK: u32 = 0x8000_0000;
const LOWER_MASK: u32 = 0x7fff_ffff;
const KNUTH_MULT: u32 = 1_812_433_253;

/// MT19937 state plus the cached second polar deviate.
///
/// The generator is strictly sequential: it may be moved between threads but
/// offers no stream splitting or jump-ahead, so draw order is stable.
#[derive(Clone)]
pub struct Mt19937 {
    words: Box<[u32; N]>,
    index: usize,
    gauss_spare: Option<f64>,
}

impl Mt19937 {
    /// Seeds with the classic Knuth-style scalar initializer:
    /// `w[0] = seed`, `w[i] = 1812433253 * (w[i-1] ^ (w[i-1] >> 30)) + i`
    /// truncated to 32 bits.
    pub fn new(seed: u32) -> Self {
        let mut words = Box::new([0u32; N]);
        words[0] = seed;
        for i in 1..N {
            let prev = words[i - 1];
            words[i] = KNUTH_MULT
                .wrapping_mul(prev ^ (prev >> 30))
                .wrapping_add(i as u32);
        }
        Mt19937 {
            words,
            index: N,
            gauss_spare: None,
        }
    }

    fn twist(&mut self) {
        for i in 0..N {
            let y = (self.words[i] & UPPER_MASK) | (self.words[(i + 1) % N] & LOWER_MASK);
            let mut next = y >> 1;
            if y & 1 != 0 {
                next ^= MATRIX_A;
            }
            self.words[i] = self.words[(i + M) % N] ^ next;
        }
        self.index = 0;
    }

    /// Next tempered 32-bit output; regenerates the 624-word block when
    /// exhausted.
    pub fn next_u32(&mut self) -> u32 {
        if self.index >= N {
            self.twist();
        }
        let mut y = self.words[self.index];
        self.index += 1;
        y ^= y >> 11;
        y ^= (y << 7) & 0x9d2c_5680;
        y ^= (y << 15) & 0xefc6_0000;
        y ^= y >> 18;
        y
    }

    /// Uniform double in `[0, 1)` built from 53 random bits:
    /// `(a * 2^26 + b) / 2^53` with `a` the top 27 bits of one draw and `b`
    /// the top 26 bits of the next. Consumes exactly two 32-bit draws.
    pub fn next_double53(&mut self) -> f64 {
        let a = (self.next_u32() >> 5) as f64;
        let b = (self.next_u32() >> 6) as f64;
        (a * 67_108_864.0 + b) / 9_007_199_254_740_992.0
    }

    /// Standard normal deviate via the Marsaglia polar method.
    ///
    /// Each accepted polar pair yields two deviates; the second is cached and
    /// returned by the following call without consuming the stream.
    pub fn next_gauss(&mut self) -> f64 {
        if let Some(spare) = self.gauss_spare.take() {
            return spare;
        }
        loop {
            let x1 = 2.0 * self.next_double53() - 1.0;
            let x2 = 2.0 * self.next_double53() - 1.0;
            let r2 = x1 * x1 + x2 * x2;
            if r2 < 1.0 && r2 != 0.0 {
                let f = (-2.0 * r2.ln() / r2).sqrt();
                self.gauss_spare = Some(f * x1);
                return f * x2;
            }
        }
    }

    /// Normal deviate with the given mean and standard deviation.
    ///
    /// `std` must be nonnegative; invalid parameters are rejected before a
    /// stream is ever built (see `simulate::ThemeSpec`).
    pub fn next_normal(&mut self, mean: f64, std: f64) -> f64 {
        assert!(std >= 0.0, "standard deviation must be nonnegative");
        mean + std * self.next_gauss()
    }

    #[cfg(test)]
    fn has_spare(&self) -> bool {
        self.gauss_spare.is_some()
    }
}
