//! Bit-level plumbing: a two-level rank/select bitvector, a sparse
//! positions-only variant for very sparse vectors, and MSB-first bit IO
//! used by the payload and container formats.
//!
//! Bitvector positions are 1-based to line up with node ids: `rank1(i)`
//! counts ones among positions 1..=i and `select1(j)` returns the 1-based
//! position of the j-th one, so `rank1(select1(j)) = j`.

use crate::error::{Error, Result};

const WORD: usize = 64;
const BLOCK_WORDS: usize = 8; // 512-bit blocks under a cumulative directory

/// Plain bitvector with O(1) rank and O(log) select.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitvectorRS {
    words: Vec<u64>,
    len: usize,
    /// ones before each 512-bit block
    block_ranks: Vec<u64>,
    ones: u64,
}

impl BitvectorRS {
    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        let mut words = Vec::new();
        let mut len = 0usize;
        let mut current = 0u64;
        for b in bits {
            if b {
                current |= 1u64 << (len % WORD);
            }
            len += 1;
            if len % WORD == 0 {
                words.push(current);
                current = 0;
            }
        }
        if len % WORD != 0 {
            words.push(current);
        }
        Self::from_words(words, len)
    }

    pub fn from_words(words: Vec<u64>, len: usize) -> Self {
        let mut block_ranks = Vec::with_capacity(words.len() / BLOCK_WORDS + 1);
        let mut total = 0u64;
        for (i, w) in words.iter().enumerate() {
            if i % BLOCK_WORDS == 0 {
                block_ranks.push(total);
            }
            total += w.count_ones() as u64;
        }
        if words.is_empty() {
            block_ranks.push(0);
        }
        BitvectorRS { words, len, block_ranks, ones: total }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn count_ones(&self) -> u64 {
        self.ones
    }

    /// Bit at 1-based position i.
    pub fn get(&self, i: usize) -> bool {
        let i = i - 1;
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    /// Ones among positions 1..=i; i may be 0 or len.
    pub fn rank1(&self, i: usize) -> Result<u64> {
        if i > self.len {
            return Err(Error::OutOfRange);
        }
        let word = i / WORD;
        let block = (word / BLOCK_WORDS).min(self.block_ranks.len() - 1);
        let mut r = self.block_ranks[block];
        for w in block * BLOCK_WORDS..word {
            r += self.words[w].count_ones() as u64;
        }
        if i % WORD != 0 {
            r += (self.words[word] & ((1u64 << (i % WORD)) - 1)).count_ones() as u64;
        }
        Ok(r)
    }

    /// 1-based position of the j-th one (j >= 1).
    pub fn select1(&self, j: u64) -> Result<usize> {
        if j == 0 || j > self.ones {
            return Err(Error::OutOfRange);
        }
        let mut lo = 0usize;
        let mut hi = self.block_ranks.len();
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.block_ranks[mid] < j {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut remaining = j - self.block_ranks[lo];
        for w in lo * BLOCK_WORDS..self.words.len() {
            let ones = self.words[w].count_ones() as u64;
            if remaining <= ones {
                let mut word = self.words[w];
                for _ in 1..remaining {
                    word &= word - 1;
                }
                return Ok(w * WORD + word.trailing_zeros() as usize + 1);
            }
            remaining -= ones;
        }
        Err(Error::OutOfRange)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

/// Sorted 1-based positions of the ones of a very sparse bitvector. Same
/// rank/select contract as `BitvectorRS` with O(log #ones) rank; the index
/// stores the macro boundary string this way (its ones count is O(n/L)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseOnes {
    positions: Vec<u64>,
    len: u64,
}

impl SparseOnes {
    pub fn new(positions: Vec<u64>, len: u64) -> Self {
        debug_assert!(positions.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(positions.first().map_or(true, |&p| p >= 1));
        debug_assert!(positions.last().map_or(true, |&p| p <= len));
        SparseOnes { positions, len }
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn count_ones(&self) -> u64 {
        self.positions.len() as u64
    }

    pub fn rank1(&self, i: u64) -> Result<u64> {
        if i > self.len {
            return Err(Error::OutOfRange);
        }
        Ok(self.positions.partition_point(|&p| p <= i) as u64)
    }

    pub fn select1(&self, j: u64) -> Result<u64> {
        if j == 0 || j > self.positions.len() as u64 {
            return Err(Error::OutOfRange);
        }
        Ok(self.positions[j as usize - 1])
    }

    pub fn positions(&self) -> &[u64] {
        &self.positions
    }
}

/// MSB-first bit writer over a byte buffer.
#[derive(Debug, Default, Clone)]
pub struct BitWriter {
    bytes: Vec<u8>,
    bit_len: usize,
}

impl BitWriter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, bit: bool) {
        if self.bit_len % 8 == 0 {
            self.bytes.push(0);
        }
        if bit {
            let idx = self.bit_len / 8;
            self.bytes[idx] |= 1 << (7 - self.bit_len % 8);
        }
        self.bit_len += 1;
    }

    /// Write `width` bits of `value`, most significant first.
    pub fn push_bits(&mut self, value: u128, width: u32) {
        for k in (0..width).rev() {
            self.push(value >> k & 1 == 1);
        }
    }

    pub fn bit_len(&self) -> usize {
        self.bit_len
    }

    pub fn into_parts(self) -> (Vec<u8>, usize) {
        (self.bytes, self.bit_len)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }
}

/// MSB-first bit reader over a byte slice.
#[derive(Debug, Clone)]
pub struct BitReader<'a> {
    bytes: &'a [u8],
    bit_len: usize,
    pos: usize,
}

impl<'a> BitReader<'a> {
    pub fn new(bytes: &'a [u8], bit_len: usize) -> Self {
        BitReader { bytes, bit_len, pos: 0 }
    }

    pub fn read(&mut self) -> Result<bool> {
        if self.pos >= self.bit_len {
            return Err(Error::CorruptPayload("bit stream exhausted".into()));
        }
        let bit = self.bytes[self.pos / 8] >> (7 - self.pos % 8) & 1 == 1;
        self.pos += 1;
        Ok(bit)
    }

    /// Like `read` but yields 0 past the end; arithmetic decoding reads the
    /// conceptual zero tail after the coded bits.
    pub fn read_or_zero(&mut self) -> bool {
        if self.pos >= self.bit_len {
            self.pos += 1;
            return false;
        }
        let bit = self.bytes[self.pos / 8] >> (7 - self.pos % 8) & 1 == 1;
        self.pos += 1;
        bit
    }

    pub fn read_bits(&mut self, width: u32) -> Result<u128> {
        let mut v = 0u128;
        for _ in 0..width {
            v = v << 1 | self.read()? as u128;
        }
        Ok(v)
    }

    pub fn remaining(&self) -> usize {
        self.bit_len.saturating_sub(self.pos)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_select_hand_counts() {
        // bits 10010 (positions 1..5): rank1(3) counts "100" -> 1; select1(2) = 4
        let bv = BitvectorRS::from_bits([true, false, false, true, false]);
        assert_eq!(bv.rank1(3).unwrap(), 1);
        assert_eq!(bv.select1(2).unwrap(), 4);
        assert_eq!(bv.rank1(0).unwrap(), 0);
        assert_eq!(bv.rank1(5).unwrap(), 2);
        assert!(bv.rank1(6).is_err());
        assert!(bv.select1(3).is_err());
        assert!(bv.select1(0).is_err());
    }

    #[test]
    fn all_zeros() {
        let bv = BitvectorRS::from_bits(std::iter::repeat(false).take(130));
        for i in [0usize, 1, 64, 100, 130] {
            assert_eq!(bv.rank1(i).unwrap(), 0);
        }
    }

    #[test]
    fn rank_select_inverse_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(9);
        for len in [1usize, 63, 64, 65, 511, 512, 513, 5000] {
            let bits: Vec<bool> = (0..len).map(|_| rng.gen_bool(0.3)).collect();
            let bv = BitvectorRS::from_bits(bits.iter().copied());
            let sparse = SparseOnes::new(
                bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i as u64 + 1).collect(),
                len as u64,
            );
            let ones = bv.count_ones();
            for j in 1..=ones {
                let p = bv.select1(j).unwrap();
                assert!(bv.get(p));
                assert_eq!(bv.rank1(p).unwrap(), j, "rank1(select1(j)) = j");
                assert_eq!(sparse.select1(j).unwrap(), p as u64);
            }
            for i in 0..=len {
                assert_eq!(bv.rank1(i).unwrap(), sparse.rank1(i as u64).unwrap());
            }
        }
    }

    #[test]
    fn bit_io_round_trip() {
        let mut w = BitWriter::new();
        w.push_bits(0b1011, 4);
        w.push(true);
        w.push_bits(0xDEADBEEF, 32);
        let (bytes, len) = w.into_parts();
        let mut r = BitReader::new(&bytes, len);
        assert_eq!(r.read_bits(4).unwrap(), 0b1011);
        assert!(r.read().unwrap());
        assert_eq!(r.read_bits(32).unwrap(), 0xDEADBEEF);
        assert!(r.read().is_err());
    }
}
