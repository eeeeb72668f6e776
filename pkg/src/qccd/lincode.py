"""Linear codes by generator matrix over a finite field.

Generator matrices are kept in canonical reduced row-echelon form, so code
equality is a plain matrix comparison.  Minimum distance is exact: direct
codeword enumeration from the smaller of the message/parity sides, with the
dual side converted through the weight-enumerator transform.
"""
from __future__ import annotations

import itertools
import math
from math import comb

import numpy as np

from .errors import (
    FieldMismatch,
    LengthMismatch,
    NotSquareOrderField,
    TooLargeToEnumerate,
)
from .field import FiniteField

ENUM_CAP = 1 << 24
_CHUNK = 1 << 16


def rref(field: FiniteField, rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    n = len(rows[0])
    pivot_cols = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv_raw(rows[r][c])
        if inv != 1:
            rows[r] = [field.mul_raw(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [field.sub_raw(x, field.mul_raw(f, y)) for x, y in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivot_cols


class LinearCode:
    """[n, k] linear code with a canonical RREF generator matrix."""

    def __init__(self, field: FiniteField, n: int, rows, pivot_cols=None):
        # rows must already be canonical RREF; use from_rows otherwise
        self.field = field
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)
        self.k = len(self.rows)
        if pivot_cols is None:
            pivot_cols = [next(j for j, x in enumerate(r) if x) for r in self.rows]
        self.pivot_cols = tuple(pivot_cols)
        self._dmin = None

    @classmethod
    def from_rows(cls, field: FiniteField, n: int, rows) -> "LinearCode":
        rows = list(rows)
        for r in rows:
            if len(r) != n:
                raise LengthMismatch(f"row of length {len(r)}, expected {n}")
        reduced, pivots = rref(field, rows)
        return cls(field, n, reduced, pivots)

    # -- basics ------------------------------------------------------------
    def params(self) -> tuple[int, int]:
        return self.n, self.k

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and other.field is self.field
            and other.n == self.n
            and other.rows == self.rows
        )

    def __hash__(self):
        return hash((id(self.field), self.n, self.rows))

    def __repr__(self):
        return f"LinearCode({self.field}, [{self.n},{self.k}])"

    def _check_compat(self, other: "LinearCode"):
        if other.field is not self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.n != self.n:
            raise LengthMismatch(f"lengths {self.n} vs {other.n}")

    def contains(self, vec) -> bool:
        F = self.field
        v = list(vec)
        if len(v) != self.n:
            raise LengthMismatch(f"vector length {len(v)}, expected {self.n}")
        for row, pc in zip(self.rows, self.pivot_cols):
            c = v[pc]
            if c:
                v = [F.sub_raw(x, F.mul_raw(c, y)) for x, y in zip(v, row)]
        return not any(v)

    # -- duals, sums, intersections ----------------------------------------
    def dual(self) -> "LinearCode":
        F = self.field
        pivots = set(self.pivot_cols)
        free = [c for c in range(self.n) if c not in pivots]
        rows = []
        for f in free:
            v = [0] * self.n
            v[f] = 1
            for i, pc in enumerate(self.pivot_cols):
                v[pc] = F.neg_raw(self.rows[i][f])
            rows.append(v)
        return LinearCode.from_rows(F, self.n, rows)

    def sum_code(self, other: "LinearCode") -> "LinearCode":
        self._check_compat(other)
        return LinearCode.from_rows(self.field, self.n, list(self.rows) + list(other.rows))

    def intersect(self, other: "LinearCode") -> "LinearCode":
        self._check_compat(other)
        return self.dual().sum_code(other.dual()).dual()

    # -- conjugation and Gram forms ----------------------------------------
    def _conj_exp(self, conj_exp: int | None) -> int:
        if conj_exp is not None:
            return conj_exp
        F = self.field
        if F.k % 2:
            raise NotSquareOrderField(f"{F} has no square order")
        return F.p ** (F.k // 2)

    def conjugate_code(self, conj_exp: int | None = None) -> "LinearCode":
        e = self._conj_exp(conj_exp)
        F = self.field
        rows = [[F.pow_raw(x, e) for x in r] for r in self.rows]
        return LinearCode.from_rows(F, self.n, rows)

    def gram(self, form: str = "euclidean", conj_exp: int | None = None) -> list[list[int]]:
        F = self.field
        e = 1 if form == "euclidean" else self._conj_exp(conj_exp)
        conj_rows = self.rows if e == 1 else [[F.pow_raw(x, e) for x in r] for r in self.rows]
        G = []
        for r in self.rows:
            G.append([
                _dot(F, r, cr) for cr in conj_rows
            ])
        return G

    def hull_dim(self, form: str = "euclidean", conj_exp: int | None = None) -> int:
        """dim(C ∩ C^dual) for the Euclidean or Hermitian form, as the rank
        defect of the Gram matrix."""
        if self.k == 0:
            return 0
        gram = self.gram(form, conj_exp)
        _, pivots = rref(self.field, gram)
        return self.k - len(pivots)

    def is_lcd(self, form: str = "euclidean", conj_exp: int | None = None) -> bool:
        verdict = self.hull_dim(form, conj_exp) == 0
        if form == "hermitian" and self.k > 0:
            # independent cross-check through the conjugate-dual intersection
            other = self.intersect(self.conjugate_code(self._conj_exp(conj_exp)).dual())
            if (other.k == 0) != verdict:
                raise AssertionError("Hermitian LCD cross-check disagreement")
        return verdict

    # -- systematic form ----------------------------------------------------
    def systematic_form(self) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
        """Column-permute so the first k columns are the identity.

        Returns (rows of [I_k : P], perm) where perm[i] is the original
        column sitting at position i.
        """
        pivots = list(self.pivot_cols)
        free = [c for c in range(self.n) if c not in set(pivots)]
        perm = pivots + free
        rows = tuple(tuple(r[c] for c in perm) for r in self.rows)
        return rows, tuple(perm)

    # -- distance -----------------------------------------------------------
    def min_distance(self) -> int:
        """Exact minimum Hamming weight over nonzero codewords."""
        if self.k == 0:
            raise ValueError("the zero code has no minimum distance")
        if self._dmin is not None:
            return self._dmin
        q, k, n = self.field.order, self.k, self.n
        small = min(k, n - k)
        if q**small > ENUM_CAP:
            raise TooLargeToEnumerate(
                f"min(q^k, q^(n-k)) = {q}^{small} exceeds the enumeration cap"
            )
        if q**k <= q ** (n - k):
            dist = weight_distribution(self.field, self.rows, self.n)
            d = next(i for i in range(1, n + 1) if dist[i] > 0)
        else:
            dualc = self.dual()
            dual_dist = weight_distribution(self.field, dualc.rows, self.n)
            d = _min_weight_from_dual(dual_dist, n, q)
        self._dmin = d
        return d


def _dot(F, a, b):
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = F.add_raw(acc, F.mul_raw(x, y))
    return acc


# ---------------------------------------------------------------------------
# codeword enumeration
# ---------------------------------------------------------------------------

def _popcount(arr: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(arr)
    table = _popcount.__dict__.setdefault(
        "_table", np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int64)
    )
    out = np.zeros_like(arr)
    a = arr.copy()
    while a.any():
        out += table[a & 0xFFFF]
        a >>= 16
    return out


def _vadd(field: FiniteField, A: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Vectorized field addition of raw codes (broadcasting)."""
    p = field.p
    if p == 2:
        return np.bitwise_xor(A, b)
    if field.k == 1:
        return (A + b) % p
    out = np.zeros(np.broadcast_shapes(A.shape, b.shape), dtype=A.dtype)
    for i in range(field.k):
        pi = p**i
        out += (((A // pi) + (b // pi)) % p) * pi
    return out


def weight_distribution(field: FiniteField, rows, n: int, scalars=None) -> np.ndarray:
    """Hamming weight distribution of the span of rows under the given
    scalar set (default: the whole field).  Exact integer counts."""
    rows = [list(r) for r in rows]
    k = len(rows)
    dist = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        dist[0] = 1
        return dist
    if scalars is None:
        scalars = list(range(field.order))
    scalars = sorted(scalars)
    assert scalars[0] == 0
    S = len(scalars)
    if S**k > ENUM_CAP:
        raise TooLargeToEnumerate(f"{S}^{k} codewords exceed the enumeration cap")

    if field.order == 2 and scalars == [0, 1] and n <= 62:
        packed = [sum(1 << j for j, x in enumerate(r) if x) for r in rows]
        arr = np.zeros(1, dtype=np.int64)
        for w in packed:
            arr = np.concatenate([arr, np.bitwise_xor(arr, np.int64(w))])
        weights = _popcount(arr)
        return np.bincount(weights, minlength=n + 1).astype(np.int64)

    # scalar multiples of each row, precomputed
    mults = []
    for r in rows:
        mults.append(
            [np.array([field.mul_raw(s, x) for x in r], dtype=np.int64) for s in scalars]
        )

    # split rows: first j rows enumerated inside one array, rest looped
    j = 0
    while j < k and S ** (j + 1) <= _CHUNK:
        j += 1
    base = np.zeros((1, n), dtype=np.int64)
    for i in range(j):
        base = np.concatenate([_vadd(field, base, m) for m in mults[i]])

    rest = mults[j:]
    if not rest:
        weights = np.count_nonzero(base, axis=1)
        return np.bincount(weights, minlength=n + 1).astype(np.int64)

    for combo in itertools.product(range(S), repeat=len(rest)):
        offset = np.zeros(n, dtype=np.int64)
        for m, ci in zip(rest, combo):
            offset = _vadd(field, offset, m[ci])
        W = _vadd(field, base, offset)
        weights = np.count_nonzero(W, axis=1)
        dist += np.bincount(weights, minlength=n + 1).astype(np.int64)
    return dist


def min_weight(field: FiniteField, rows, n: int, scalars=None) -> int:
    dist = weight_distribution(field, rows, n, scalars)
    for i in range(1, n + 1):
        if dist[i] > 0:
            return i
    raise ValueError("the span contains no nonzero codeword")


def _krawtchouk(j: int, i: int, n: int, q: int) -> int:
    return sum(
        (-1) ** t * (q - 1) ** (j - t) * comb(i, t) * comb(n - i, j - t)
        for t in range(min(i, j) + 1)
    )


def _min_weight_from_dual(dual_dist: np.ndarray, n: int, q: int) -> int:
    """Minimum nonzero weight of C from the weight distribution of its dual."""
    dual_size = int(dual_dist.sum())
    counts = [int(c) for c in dual_dist]
    for j in range(1, n + 1):
        num = sum(c * _krawtchouk(j, i, n, q) for i, c in enumerate(counts) if c)
        if num % dual_size:
            raise AssertionError("weight-enumerator transform gave a non-integer count")
        if num // dual_size > 0:
            return j
    raise ValueError("the code contains no nonzero codeword")
