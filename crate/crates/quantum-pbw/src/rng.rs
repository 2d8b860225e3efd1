//! Tiny deterministic pseudo-random source (splitmix-style). Used only to
//! pick candidate objects whose required properties are then certified
//! exactly (generic matrices, sampled words), so reproducibility matters and
//! statistical quality does not.

pub(crate) struct SplitMix(pub u64);

impl SplitMix {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next_u64() % ((hi - lo + 1) as u64)) as i64
    }

    pub fn index(&mut self, n: usize) -> usize {
        (self.next_u64() % (n as u64)) as usize
    }
}
