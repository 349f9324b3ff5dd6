"""Bulk codeword enumeration kernels.

Minimum-weight searches exhaust message spaces of size q**k, so the hot
paths here are vectorized: characteristic-2 codewords are packed into uint64
bitplanes (one plane for GF(2), low/high planes for GF(4)) and walked in
prefix shards, each shard covering every suffix-digit combination through a
precomputed table.  Sharding doubles as the parallelism unit: shards share
nothing and the result is a plain min-reduce, so the outcome is independent
of how many workers run them.

Budgets count enumerated codewords.  When a search would exceed its budget
it enumerates whole shards until the next one no longer fits, then raises
BudgetExceeded carrying the best (lightest) weight seen, which is an upper
bound on the true minimum.

Everything else (odd characteristic, very long codes) funnels through a
plain-Python fallback that walks messages in mixed-radix order.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import BudgetExceeded

__all__ = [
    "packable_char2",
    "pack_row_planes",
    "min_weight_char2",
    "codeword_planes",
    "support_masks",
    "min_weight_generic",
    "sr_min_weight_packed",
    "sr_min_weight_generic",
    "popcount",
]

_SUFFIX_CAP = 1 << 18  # suffix-table entries per shard


if hasattr(np, "bitwise_count"):

    def popcount(arr: np.ndarray) -> np.ndarray:
        return np.bitwise_count(arr)

else:  # pragma: no cover - numpy >= 2.0 in practice
    _POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)

    def popcount(arr: np.ndarray) -> np.ndarray:
        a = arr.astype(np.uint64)
        acc = _POP16[(a & np.uint64(0xFFFF)).astype(np.int64)].astype(np.int64)
        for shift in (16, 32, 48):
            acc += _POP16[((a >> np.uint64(shift)) & np.uint64(0xFFFF)).astype(np.int64)]
        return acc


def packable_char2(field, n: int) -> bool:
    return field.characteristic == 2 and field.order in (2, 4) and n <= 64


def pack_row_planes(field, row):
    """(lo, hi) bitplane integers for a GF(2)/GF(4) row; hi is 0 over GF(2)."""
    lo = 0
    hi = 0
    for j, v in enumerate(row):
        lo |= (v & 1) << j
        hi |= ((v >> 1) & 1) << j
    return lo, hi


def _scalar_multiples(field, lo: int, hi: int):
    """Planes of 0, row, w*row, w^2*row (just 0, row over GF(2))."""
    if field.order == 2:
        return [(0, 0), (lo, hi)]
    # canonical GF(4): multiplying by w maps (lo, hi) -> (hi, hi ^ lo)
    return [(0, 0), (lo, hi), (hi, hi ^ lo), (hi ^ lo, lo)]


def _plane_suffix_table(field, packed_rows):
    """All q**len(rows) codeword planes of the given rows, index 0 = zero."""
    lo = np.zeros(1, dtype=np.uint64)
    hi = np.zeros(1, dtype=np.uint64)
    for rlo, rhi in packed_rows:
        mults = _scalar_multiples(field, rlo, rhi)
        lo = np.concatenate([lo ^ np.uint64(m[0]) for m in mults])
        hi = np.concatenate([hi ^ np.uint64(m[1]) for m in mults])
    return lo, hi


def _split_rows(q: int, k: int):
    """Suffix digit count so the suffix table stays within the cap."""
    k_lo = 0
    size = 1
    while k_lo < k and size * q <= _SUFFIX_CAP:
        size *= q
        k_lo += 1
    return k - k_lo, k_lo


def _prefix_planes(field, packed_rows, pidx: int):
    lo = 0
    hi = 0
    q = field.order
    for rlo, rhi in packed_rows:
        d = pidx % q
        pidx //= q
        if d:
            mlo, mhi = _scalar_multiples(field, rlo, rhi)[d]
            lo ^= mlo
            hi ^= mhi
    return lo, hi


def _run_shards(shard_fn, n_shards: int, jobs: int):
    """Min-reduce shard_fn over shard indices, optionally on threads."""
    if jobs <= 1 or n_shards <= 1:
        return min(shard_fn(i) for i in range(n_shards))
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return min(pool.map(shard_fn, range(n_shards)))


def min_weight_char2(field, rows, n: int, budget: int, jobs: int = 1) -> int:
    """Exact minimum Hamming weight over all nonzero combinations of `rows`.

    GF(2)/GF(4) only, n <= 64.  Raises BudgetExceeded past the budget.
    """
    q = field.order
    k = len(rows)
    packed = [pack_row_planes(field, r) for r in rows]
    k_hi, k_lo = _split_rows(q, k)
    suf_lo, suf_hi = _plane_suffix_table(field, packed[k_hi:])
    chunk = len(suf_lo)
    n_prefixes = q**k_hi
    total = n_prefixes * chunk
    limit_prefixes = n_prefixes if total <= budget else budget // chunk

    def shard(pidx: int) -> int:
        plo, phi = _prefix_planes(field, packed[:k_hi], pidx)
        w = popcount((suf_lo ^ np.uint64(plo)) | (suf_hi ^ np.uint64(phi)))
        if pidx == 0:
            return int(w[1:].min()) if chunk > 1 else n + 1
        return int(w.min())

    if limit_prefixes == 0:
        raise BudgetExceeded("budget smaller than one shard", best=None, enumerated=0)
    best = _run_shards(shard, limit_prefixes, jobs)
    if limit_prefixes < n_prefixes:
        raise BudgetExceeded(
            f"enumerated {limit_prefixes * chunk} of {total} codewords",
            best=best,
            enumerated=limit_prefixes * chunk,
        )
    return best


def codeword_planes(field, rows, n: int):
    """Bitplanes of every codeword (q**k entries).  Caller bounds k."""
    packed = [pack_row_planes(field, r) for r in rows]
    return _plane_suffix_table(field, packed)


def support_masks(field, rows, n: int) -> np.ndarray:
    """Sorted distinct support masks of the nonzero codewords."""
    lo, hi = codeword_planes(field, rows, n)
    masks = np.unique(lo | hi)
    return masks[masks != np.uint64(0)]


def min_weight_generic(field, rows, n: int, budget: int) -> int:
    """Plain fallback: walk all messages, accumulate codewords row by row."""
    q = field.order
    k = len(rows)
    total = q**k
    best = n + 1
    count = 0
    add = field.add
    mul = field.mul
    scaled = [
        [[mul(d, v) for v in row] for d in range(q)]
        for row in rows
    ]
    for msg in itertools.product(range(q), repeat=k):
        if count >= budget:
            raise BudgetExceeded(
                f"enumerated {count} of {total} codewords",
                best=None if best > n else best,
                enumerated=count,
            )
        count += 1
        if not any(msg):
            continue
        word = [0] * n
        for i, d in enumerate(msg):
            if d:
                srow = scaled[i][d]
                word = [add(word[j], srow[j]) for j in range(n)]
        w = sum(1 for v in word if v)
        if w < best:
            best = w
    return best


def low_weight_min_char2(field, rows, n: int, max_msg_weight: int):
    """Lightest codeword among messages of Hamming weight <= max_msg_weight.

    Returns (weight, message) where message maps row index -> scalar, or
    (None, None) when the cap is 0 or the code is empty.  With an rref
    generator this scan is complete for all codewords of weight up to the
    cap, since such a codeword's message is its pivot-column restriction.
    """
    q = field.order
    k = len(rows)
    cap = min(max_msg_weight, k)
    if cap <= 0 or k == 0:
        return None, None
    packed = [pack_row_planes(field, r) for r in rows]
    multiples = [_scalar_multiples(field, lo, hi)[1:] for lo, hi in packed]
    best = None
    best_msg = None
    for wt in range(1, cap + 1):
        for positions in itertools.combinations(range(k), wt):
            lo = np.zeros(1, dtype=np.uint64)
            hi = np.zeros(1, dtype=np.uint64)
            for p in positions:
                lo = np.concatenate([lo ^ np.uint64(m[0]) for m in multiples[p]])
                hi = np.concatenate([hi ^ np.uint64(m[1]) for m in multiples[p]])
            w = popcount(lo | hi)
            i = int(w.argmin())
            if best is None or int(w[i]) < best:
                best = int(w[i])
                # concatenation makes the first position the least
                # significant base-(q-1) digit of the index
                scalars = []
                j = i
                for _ in positions:
                    scalars.append(1 + j % (q - 1))
                    j //= q - 1
                best_msg = dict(zip(positions, scalars))
    return best, best_msg


# -- sum-rank weight enumeration ----------------------------------------------


def f2_matrix_rank_bits(pattern: int, m: int, n: int) -> int:
    """Rank over GF(2) of an m x n matrix packed row-major into `pattern`."""
    mask = (1 << n) - 1
    basis = []
    rank = 0
    for i in range(m):
        row = (pattern >> (i * n)) & mask
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            rank += 1
    return rank


def block_rank_luts(blocks):
    """One rank lookup table per (m, n) block over GF(2)."""
    luts = {}
    out = []
    for m, n in blocks:
        key = (m, n)
        if key not in luts:
            luts[key] = np.array(
                [f2_matrix_rank_bits(p, m, n) for p in range(1 << (m * n))],
                dtype=np.uint8,
            )
        out.append(luts[key])
    return out


def sr_min_weight_packed(field, rows, blocks, budget: int, jobs: int = 1) -> int:
    """Exact minimum sum-rank weight over GF(2), total length <= 64 bits.

    `rows` are flattened generator rows; `blocks` the (m_i, n_i) shapes in
    flattening order.
    """
    k = len(rows)
    sizes = [m * n for m, n in blocks]
    total_bits = sum(sizes)
    offsets = np.cumsum([0] + sizes[:-1])
    luts = block_rank_luts(blocks)
    packed = [pack_row_planes(field, r) for r in rows]

    k_hi, k_lo = _split_rows(2, k)
    suf_lo, _ = _plane_suffix_table(field, packed[k_hi:])
    chunk = len(suf_lo)
    n_prefixes = 2**k_hi
    total = n_prefixes * chunk
    limit_prefixes = n_prefixes if total <= budget else budget // chunk
    worst = sum(m for m, _ in blocks) + 1

    def shard(pidx: int) -> int:
        plo, _ = _prefix_planes(field, packed[:k_hi], pidx)
        words = suf_lo ^ np.uint64(plo)
        acc = np.zeros(chunk, dtype=np.uint16)
        for off, size, lut in zip(offsets, sizes, luts):
            idx = ((words >> np.uint64(off)) & np.uint64((1 << size) - 1)).astype(np.int64)
            acc += lut[idx]
        if pidx == 0:
            return int(acc[1:].min()) if chunk > 1 else worst
        return int(acc.min())

    if limit_prefixes == 0:
        raise BudgetExceeded("budget smaller than one shard", best=None, enumerated=0)
    best = _run_shards(shard, limit_prefixes, jobs)
    if limit_prefixes < n_prefixes:
        raise BudgetExceeded(
            f"enumerated {limit_prefixes * chunk} of {total} codewords",
            best=best,
            enumerated=limit_prefixes * chunk,
        )
    return best


def sr_min_weight_generic(field, rows, rank_fn, budget: int) -> int:
    """Fallback for any field or length: rank_fn(flat_word) -> sum-rank weight."""
    q = field.order
    k = len(rows)
    total = q**k
    n = len(rows[0]) if rows else 0
    add = field.add
    mul = field.mul
    scaled = [[[mul(d, v) for v in row] for d in range(q)] for row in rows]
    best = None
    count = 0
    for msg in itertools.product(range(q), repeat=k):
        if count >= budget:
            raise BudgetExceeded(
                f"enumerated {count} of {total} codewords",
                best=best,
                enumerated=count,
            )
        count += 1
        if not any(msg):
            continue
        word = [0] * n
        for i, d in enumerate(msg):
            if d:
                srow = scaled[i][d]
                word = [add(word[j], srow[j]) for j in range(n)]
        w = rank_fn(word)
        if best is None or w < best:
            best = w
    return best
