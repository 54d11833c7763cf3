"""Exact minimum distance of shortened CRC codes via the dual-code spectrum.

The [n, n-p] code generated by g consists of all multiples of g of degree
below n.  Enumerating its 2^(n-p) codewords is hopeless for the lengths of
interest, but its dual has only 2^p codewords: the rows of the p x n matrix
whose column j is the residue x^j mod g.  The pipeline here is

  1. materialize the residue columns x^j mod g for j < n,
  2. histogram them into an array of 2^p occurrence counts,
  3. run an in-place Walsh-Hadamard transform over the counts; entry a of
     the transform is sum_j (-1)^<a, col_j>, so the dual codeword picked by
     mask a has Hamming weight (n - T[a]) / 2,
  4. tally those weights into the dual weight distribution B, and
  5. recover code weights A_i = 2^-p * sum_w B[w] K_i(w; n) one i at a
     time through the Krawtchouk kernel, stopping at the first positive.

All arithmetic past the transform is exact (Python integers); the
transform itself stays within int32 because every intermediate value is
bounded by n.  A brute-force enumerator over the primal code doubles as an
independent oracle for small dimensions.
"""

from __future__ import annotations

from math import comb

import numpy as np

from .gf2poly import Gf2Poly, order as poly_order


def krawtchouk(i: int, w: int, n: int) -> int:
    """Binary Krawtchouk polynomial K_i(w; n) = sum_j (-1)^j C(w,j) C(n-w, i-j), exactly."""
    if not (0 <= i <= n and 0 <= w <= n):
        raise ValueError(f"krawtchouk arguments out of range: i={i}, w={w}, n={n}")
    return sum((-1) ** j * comb(w, j) * comb(n - w, i - j) for j in range(i + 1))


def residues(g: Gf2Poly, n: int) -> np.ndarray:
    """The first n residue columns x^j mod g, j = 0..n-1, as an int64 array."""
    p = g.degree
    mask = g.mask
    low = (1 << p) - 1
    out = np.empty(n, dtype=np.int64)
    r = 1
    for j in range(n):
        out[j] = r
        r <<= 1
        if r >> p & 1:
            r ^= mask
        r &= low
    return out


class DistanceEngine:
    """Distance evaluator for one generator, reusing residues and transform scratch.

    The residue stream is grown once to the largest requested length and
    the 2^p transform scratch is allocated a single time, so repeated
    queries at different lengths (profile building) pay only the transform.
    Not thread-safe; use one engine per worker.
    """

    def __init__(self, g: Gf2Poly, *, order: int | None = None, scratch: np.ndarray | None = None):
        self.g = g
        self.p = g.degree
        self.order = poly_order(g) if order is None else order
        self.eval_count = 0  # transforms run, for split-efficiency checks
        size = 1 << self.p
        if scratch is None:
            scratch = np.empty(size, dtype=np.int32)
        elif scratch.dtype != np.int32 or scratch.size < size:
            raise ValueError(f"scratch must be int32 with at least 2^{self.p} entries")
        self._scratch = scratch[:size]
        self._residues = np.empty(0, dtype=np.int64)

    def residues(self, n: int) -> np.ndarray:
        """Residue columns x^j mod g for j < n (cached, extended on demand)."""
        if self._residues.size < n:
            grown = np.empty(n, dtype=np.int64)
            have = self._residues.size
            grown[:have] = self._residues
            p, mask, low = self.p, self.g.mask, (1 << self.p) - 1
            if have == 0:
                r = 1
            else:
                r = int(self._residues[have - 1])
                r <<= 1
                if r >> p & 1:
                    r ^= mask
                r &= low
            for j in range(have, n):
                grown[j] = r
                r <<= 1
                if r >> p & 1:
                    r ^= mask
                r &= low
            self._residues = grown
        return self._residues[:n]

    def dual_weight_distribution(self, n: int) -> np.ndarray:
        """Weight distribution B[0..n] of the [n, p] dual code, B[w] = #codewords of weight w."""
        p = self.p
        if n < p + 1:
            raise ValueError(f"length {n} below minimum {p + 1} for degree {p}")
        if n >= 1 << 31:
            raise ValueError(f"length {n} too large for the transform scratch")
        cols = self.residues(n)
        t = self._scratch
        t.fill(0)
        np.add.at(t, cols, 1)
        fwht_inplace(t)
        self.eval_count += 1
        weights = (n - t) >> 1
        return np.bincount(weights, minlength=n + 1)

    def min_distance(self, n: int) -> int:
        """Exact minimum distance of the [n, n-p] code at length n."""
        p = self.p
        if n < p + 1:
            raise ValueError(f"length {n} below minimum {p + 1} for degree {p}")
        if n > self.order:
            # x^order + 1 is a codeword once it fits: the distance collapses to 2.
            return 2
        b = self.dual_weight_distribution(n)
        support = np.nonzero(b)[0]
        ws = [int(w) for w in support]
        bs = [int(b[w]) for w in support]
        if sum(bs) != 1 << p or bs[0] != 1 or ws[0] != 0:
            raise RuntimeError(f"dual spectrum of {self.g} at n={n} is inconsistent")
        # K_0 = 1 and the check above is exactly A_0 = 1; walk i upward with the
        # three-term recurrence (i+1) K_{i+1} = (n-2w) K_i - (n-i+1) K_{i-1}.
        k_prev = [1] * len(ws)
        k_cur = [n - 2 * w for w in ws]
        for i in range(1, n + 1):
            s = sum(bw * kw for bw, kw in zip(bs, k_cur))
            if s < 0 or s % (1 << p):
                raise RuntimeError(
                    f"MacWilliams sum for {self.g} at n={n}, i={i} is {s}: not a multiple of 2^{p}"
                )
            if s:
                return i
            k_next = [((n - 2 * w) * kc - (n - i + 1) * kp) // (i + 1)
                      for w, kc, kp in zip(ws, k_cur, k_prev)]
            k_prev, k_cur = k_cur, k_next
        raise RuntimeError(f"no nonzero code weight found for {self.g} at n={n}")


def fwht_inplace(a: np.ndarray) -> np.ndarray:
    """Unnormalized in-place fast Walsh-Hadamard transform of a length-2^k array."""
    size = a.size
    if size & (size - 1):
        raise ValueError(f"transform length {size} is not a power of two")
    h = 1
    while h < size:
        pairs = a.reshape(-1, 2, h)
        lo = pairs[:, 0, :]
        hi = pairs[:, 1, :]
        diff = lo - hi
        lo += hi
        hi[...] = diff
        h <<= 1
    return a


def dual_weight_distribution(g: Gf2Poly, n: int) -> np.ndarray:
    """One-shot dual weight distribution; see :meth:`DistanceEngine.dual_weight_distribution`."""
    return DistanceEngine(g).dual_weight_distribution(n)


def min_distance(g: Gf2Poly, n: int) -> int:
    """One-shot exact minimum distance of the [n, n-p] code generated by g."""
    return DistanceEngine(g).min_distance(n)


BRUTE_FORCE_MAX_DIM = 28


def brute_force_min_distance(g: Gf2Poly, n: int) -> int:
    """Minimum weight over all 2^(n-p) - 1 nonzero multiples of g of degree < n.

    Exponential-time oracle for the MacWilliams path; the dimension n - p
    is capped at 28 to keep it tractable.
    """
    p = g.degree
    if n < p + 1:
        raise ValueError(f"length {n} below minimum {p + 1} for degree {p}")
    k = n - p
    if k > BRUTE_FORCE_MAX_DIM:
        raise ValueError(f"dimension {k} exceeds brute-force cap {BRUTE_FORCE_MAX_DIM}")
    if n <= 64:
        # Doubling construction: multiples of g over messages 0..2^b-1 extend
        # to 0..2^(b+1)-1 by xoring in g * x^b.
        words = np.zeros(1 << k, dtype=np.uint64)
        for b in range(k):
            words[1 << b: 2 << b] = words[: 1 << b] ^ np.uint64(g.mask << b)
        return int(np.bitwise_count(words[1:]).min())
    best = n + 1
    for msg in range(1, 1 << k):
        word = 0
        m = msg
        shift = 0
        while m:
            if m & 1:
                word ^= g.mask << shift
            m >>= 1
            shift += 1
        best = min(best, word.bit_count())
    return best
