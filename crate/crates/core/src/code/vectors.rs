//! Packed vectors for the enumeration engines: the redundancy part of
//! every scaled generator row, with addition and weight.

use crate::gf::{Elem, Field};

pub(crate) trait Backend: Sync + Sized {
    type V: Clone + Send + Sync;

    fn build(field: &Field, rows: &[Vec<Elem>]) -> Self;
    fn zero(&self) -> Self::V;
    /// `c · rows[row]` for nonzero `c`.
    fn scaled(&self, row: usize, c: Elem) -> &Self::V;
    fn add(&self, out: &mut Self::V, a: &Self::V, b: &Self::V);
    fn weight_of_sum(&self, a: &Self::V, b: &Self::V) -> u32;
}

/// GF(2^E): bit plane `e` holds bit `e` of every coordinate.
pub(crate) struct Bitsliced<const E: usize, const W: usize> {
    q: usize,
    rows: Vec<[[u64; W]; E]>,
}

impl<const E: usize, const W: usize> Backend for Bitsliced<E, W> {
    type V = [[u64; W]; E];

    fn build(field: &Field, rows: &[Vec<Elem>]) -> Self {
        let q = field.order() as usize;
        assert_eq!(q, 1 << E);
        let mut out = Vec::with_capacity(rows.len() * (q - 1));
        for row in rows {
            assert!(row.len() <= 64 * W);
            for c in 1..q as Elem {
                let mut v = [[0u64; W]; E];
                for (j, &x) in row.iter().enumerate() {
                    let y = field.mul(c, x);
                    for (e, plane) in v.iter_mut().enumerate() {
                        if (y >> e) & 1 == 1 {
                            plane[j / 64] |= 1 << (j % 64);
                        }
                    }
                }
                out.push(v);
            }
        }
        Bitsliced { q, rows: out }
    }

    fn zero(&self) -> Self::V {
        [[0; W]; E]
    }

    #[inline(always)]
    fn scaled(&self, row: usize, c: Elem) -> &Self::V {
        &self.rows[row * (self.q - 1) + c as usize - 1]
    }

    #[inline(always)]
    fn add(&self, out: &mut Self::V, a: &Self::V, b: &Self::V) {
        for e in 0..E {
            for w in 0..W {
                out[e][w] = a[e][w] ^ b[e][w];
            }
        }
    }

    #[inline(always)]
    fn weight_of_sum(&self, a: &Self::V, b: &Self::V) -> u32 {
        let mut total = 0;
        for w in 0..W {
            let mut any = 0u64;
            for e in 0..E {
                any |= a[e][w] ^ b[e][w];
            }
            total += any.count_ones();
        }
        total
    }
}

/// Any field of order at most 256: one byte per coordinate, addition by table.
pub(crate) struct Bytes {
    q: usize,
    len: usize,
    add: Vec<u8>,
    rows: Vec<Vec<u8>>,
}

impl Backend for Bytes {
    type V = Vec<u8>;

    fn build(field: &Field, rows: &[Vec<Elem>]) -> Self {
        let q = field.order() as usize;
        assert!(q <= 256);
        let mut add = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = field.add(a as Elem, b as Elem) as u8;
            }
        }
        let len = rows.first().map_or(0, |r| r.len());
        let mut out = Vec::with_capacity(rows.len() * (q - 1));
        for row in rows {
            for c in 1..q as Elem {
                out.push(row.iter().map(|&x| field.mul(c, x) as u8).collect());
            }
        }
        Bytes { q, len, add, rows: out }
    }

    fn zero(&self) -> Self::V {
        vec![0; self.len]
    }

    #[inline(always)]
    fn scaled(&self, row: usize, c: Elem) -> &Self::V {
        &self.rows[row * (self.q - 1) + c as usize - 1]
    }

    #[inline(always)]
    fn add(&self, out: &mut Self::V, a: &Self::V, b: &Self::V) {
        for ((o, &x), &y) in out.iter_mut().zip(a).zip(b) {
            *o = self.add[x as usize * self.q + y as usize];
        }
    }

    #[inline(always)]
    fn weight_of_sum(&self, a: &Self::V, b: &Self::V) -> u32 {
        a.iter()
            .zip(b)
            .filter(|(&x, &y)| self.add[x as usize * self.q + y as usize] != 0)
            .count() as u32
    }
}
