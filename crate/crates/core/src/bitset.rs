//! Word-level helpers for rows of `u64` bitsets.

#[inline]
pub const fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn get(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
pub fn set(row: &mut [u64], i: usize) {
    row[i / 64] |= 1u64 << (i % 64);
}

#[inline]
pub fn clear(row: &mut [u64], i: usize) {
    row[i / 64] &= !(1u64 << (i % 64));
}

#[inline]
pub fn count(row: &[u64]) -> u64 {
    row.iter().map(|w| w.count_ones() as u64).sum()
}

#[inline]
pub fn is_empty(row: &[u64]) -> bool {
    row.iter().all(|&w| w == 0)
}

/// `dst = a & b`
#[inline]
pub fn and_into(dst: &mut [u64], a: &[u64], b: &[u64]) {
    for ((d, x), y) in dst.iter_mut().zip(a).zip(b) {
        *d = x & y;
    }
}

/// `dst &= a`
#[inline]
pub fn and_assign(dst: &mut [u64], a: &[u64]) {
    for (d, x) in dst.iter_mut().zip(a) {
        *d &= x;
    }
}

/// `dst &= !a`
#[inline]
pub fn and_not_assign(dst: &mut [u64], a: &[u64]) {
    for (d, x) in dst.iter_mut().zip(a) {
        *d &= !x;
    }
}

/// Clears every bit at index `<= i`.
#[inline]
pub fn clear_through(row: &mut [u64], i: usize) {
    let w = i / 64;
    for x in &mut row[..w] {
        *x = 0;
    }
    let b = i % 64;
    row[w] &= if b == 63 { 0 } else { !0u64 << (b + 1) };
}

/// Sets bits `0..n`; the tail of the last word stays clear.
pub fn fill(row: &mut [u64], n: usize) {
    for (w, x) in row.iter_mut().enumerate() {
        let lo = w * 64;
        *x = if n >= lo + 64 {
            !0
        } else if n > lo {
            (1u64 << (n - lo)) - 1
        } else {
            0
        };
    }
}

/// Iterator over set bit indices in increasing order.
pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + t);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[inline]
pub fn ones(words: &[u64]) -> Ones<'_> {
    Ones {
        words,
        idx: 0,
        cur: words.first().copied().unwrap_or(0),
    }
}
