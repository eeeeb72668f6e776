"""LCD code builders: Hermitian-LCD extension of systematic codes,
double-circulant criterion and exhaustive/random search, and subfield
descent through a self-dual basis."""
from __future__ import annotations

import hashlib
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import (
    BasisFieldMismatch,
    DegreeTooLarge,
    EvenCharacteristic,
    NoSelfDualBasisExists,
    NotCoprime,
    NotSquareOrderField,
    NotSystematic,
    SearchExhausted,
    TooLargeToEnumerate,
)
from .field import FieldElement, FiniteField, make_field
from .lincode import LinearCode, _popcount
from .polyring import Poly, poly_gcd, xm_minus_one
from .qc import QcCode

SEARCH_CAP = 1 << 20


# ---------------------------------------------------------------------------
# Hermitian LCD extension  [I:P] -> [I:P:P] or [I:P:aP]
# ---------------------------------------------------------------------------

def find_a(field: FiniteField) -> FieldElement:
    """First element a (canonical enumeration) with a^(s+1) = -1, where the
    field order is s^2 with s odd."""
    if field.p == 2:
        raise EvenCharacteristic("a^(s+1) = -1 is only needed in odd characteristic")
    if field.k % 2:
        raise NotSquareOrderField(f"{field} has no square order")
    s = field.p ** (field.k // 2)
    minus_one = field.neg_raw(1)
    for a in range(field.order):
        if field.pow_raw(a, s + 1) == minus_one:
            return FieldElement(field, a)
    raise SearchExhausted("no element with a^(s+1) = -1 found")  # unreachable


def hermitian_lcd_extend(Ct: LinearCode) -> LinearCode:
    """From a systematic [l, k] code build a Hermitian LCD [2l-k, k] code
    whose Gram matrix is exactly the identity."""
    F = Ct.field
    if F.k % 2:
        raise NotSquareOrderField(f"{F} has no square order")
    k, ell = Ct.k, Ct.n
    for i, row in enumerate(Ct.rows):
        if any(row[j] != (1 if j == i else 0) for j in range(k)):
            raise NotSystematic("generator is not of the form [I_k : P]")
    P = [row[k:] for row in Ct.rows]
    if F.p == 2:
        tail = P
    else:
        a = find_a(F).raw
        tail = [[F.mul_raw(a, x) for x in row] for row in P]
    rows = [list(Ct.rows[i]) + list(tail[i]) for i in range(k)]
    return LinearCode.from_rows(F, 2 * ell - k, rows)


# ---------------------------------------------------------------------------
# double circulant codes
# ---------------------------------------------------------------------------

def double_circulant(base: FiniteField, m: int, a: Poly) -> QcCode:
    if a.degree >= m:
        raise DegreeTooLarge(f"deg a = {a.degree} must be < m = {m}")
    return QcCode.make(base, m, 2, [(Poly.one(base), a)])


def dc_is_lcd(base: FiniteField, m: int, a: Poly) -> bool:
    """gcd(a(x) a(x^(m-1)) + 1, x^m - 1) = 1."""
    if math.gcd(m, base.p) != 1:
        raise NotCoprime(f"characteristic {base.p} divides m={m}")
    arev = a.substitute_power(m - 1, m)
    f = a.mul_mod_xm(arev, m) + Poly.one(base)
    if f.is_zero():
        return False
    return poly_gcd(f, xm_minus_one(base, m)).degree == 0


@dataclass(frozen=True)
class DcSearchReport:
    q: int
    m: int
    mode: str
    best_a: tuple[int, ...]   # coefficient codes, low degree first
    best_serial: int
    best_distance: int
    lcd_count: int
    candidates: int
    seed: int | None = None


def _serial_to_coeffs(serial: int, q: int, m: int) -> list[int]:
    return [(serial // q**i) % q for i in range(m)]


# GF(2) fast path: polynomials as bit masks, distances via packed codewords

def _gcd_bits(a: int, b: int) -> int:
    while b:
        # a mod b on GF(2)[x] bit polynomials
        db = b.bit_length()
        while a.bit_length() >= db:
            a ^= b << (a.bit_length() - db)
        a, b = b, a
    return a


def _dc_lcd_gf2(a: int, m: int) -> bool:
    mask = (1 << m) - 1
    # a(x^(m-1)) mod x^m - 1: bit i -> bit (m - i) mod m
    arev = a & 1
    for i in range(1, m):
        if (a >> i) & 1:
            arev |= 1 << (m - i)
    # carryless product folded mod x^m - 1
    prod = 0
    t = a
    for i in range(m):
        if (arev >> i) & 1:
            prod ^= t
        t <<= 1
    folded = 0
    while prod:
        folded ^= prod & mask
        prod >>= m
    f = folded ^ 1
    if f == 0:
        return False
    return _gcd_bits(f, (1 << m) | 1) == 1


def _dc_distance_gf2(a: int, m: int) -> int:
    rows = []
    for i in range(m):
        cyc = ((a << i) | (a >> (m - i))) & ((1 << m) - 1)
        rows.append((1 << i) | (cyc << m))
    arr = np.zeros(1, dtype=np.int64)
    for w in rows:
        arr = np.concatenate([arr, np.bitwise_xor(arr, np.int64(w))])
    weights = _popcount(arr)
    weights[0] = 2 * m + 1
    return int(weights.min())


def _dc_search_range_gf2(m: int, start: int, stop: int):
    """Scan candidate serials [start, stop); returns (lcd_count, best_d,
    best_serial) with best_serial = smallest tie."""
    count = 0
    best_d = -1
    best_serial = -1
    for a in range(start, stop):
        if not _dc_lcd_gf2(a, m):
            continue
        count += 1
        d = _dc_distance_gf2(a, m)
        if d > best_d:
            best_d, best_serial = d, a
    return count, best_d, best_serial


def _merge_reports(parts):
    count = 0
    best_d = -1
    best_serial = -1
    for c, d, s in parts:
        count += c
        if d > best_d or (d == best_d and 0 <= s < best_serial):
            if d >= best_d:
                best_d, best_serial = d, s
    return count, best_d, best_serial


def _random_serials(seed: int, trials: int, space: int):
    for i in range(trials):
        digest = hashlib.blake2b(f"{seed}:{i}".encode(), digest_size=8).digest()
        yield int.from_bytes(digest, "big") % space


def dc_search(
    base: FiniteField,
    m: int,
    mode: str = "exhaustive",
    seed: int | None = None,
    trials: int = 0,
    workers: int = 1,
) -> DcSearchReport:
    """Best minimum distance over LCD double circulant codes <(1, a(x))>.

    Ties break toward the smallest serialized a; the report is identical
    for any worker count.
    """
    if math.gcd(m, base.p) != 1:
        raise NotCoprime(f"characteristic {base.p} divides m={m}")
    q = base.order
    space = q**m
    if mode == "exhaustive":
        if space > SEARCH_CAP:
            raise TooLargeToEnumerate(f"{q}^{m} candidates exceed the search cap")
        serials = range(space)
        n_candidates = space
    elif mode == "random":
        if seed is None:
            raise ValueError("random mode requires a seed")
        serials = list(_random_serials(seed, trials, space))
        n_candidates = trials
    else:
        raise ValueError(f"unknown mode {mode!r}")

    if q == 2 and mode == "exhaustive":
        if workers > 1:
            chunk = (space + workers - 1) // workers
            ranges = [(m, i, min(i + chunk, space)) for i in range(0, space, chunk)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_dc_search_range_gf2, *zip(*ranges)))
        else:
            parts = [_dc_search_range_gf2(m, 0, space)]
        count, best_d, best_serial = _merge_reports(parts)
    elif q == 2:
        parts = [_dc_search_range_gf2(m, s, s + 1) for s in serials]
        count, best_d, best_serial = _merge_reports(parts)
    else:
        count = 0
        best_d = -1
        best_serial = -1
        for serial in serials:
            a = Poly(base, _serial_to_coeffs(serial, q, m))
            if not dc_is_lcd(base, m, a):
                continue
            count += 1
            d = double_circulant(base, m, a).expand().min_distance()
            if d > best_d:
                best_d, best_serial = d, serial
        if count == 0:
            best_d, best_serial = -1, -1

    if best_serial < 0:
        raise SearchExhausted("no LCD double circulant candidate found")
    return DcSearchReport(
        q=q,
        m=m,
        mode=mode,
        best_a=tuple(_serial_to_coeffs(best_serial, q, m)),
        best_serial=best_serial,
        best_distance=best_d,
        lcd_count=count,
        candidates=n_candidates,
        seed=seed,
    )


# ---------------------------------------------------------------------------
# self-dual bases and subfield descent
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SelfDualBasis:
    big: FiniteField
    sub: FiniteField
    basis: tuple[FieldElement, ...]

    def __post_init__(self):
        big, sub = self.big, self.sub
        for i, bi in enumerate(self.basis):
            for j, bj in enumerate(self.basis):
                t = big.trace_raw(big.mul_raw(bi.raw, bj.raw), sub)
                if t != (1 if i == j else 0):
                    raise AssertionError("trace Gram matrix is not the identity")

    def coordinates(self, x: FieldElement) -> list[int]:
        """Coordinates of x relative to the basis, as raw codes of sub."""
        big, sub = self.big, self.sub
        return [big.trace_raw(big.mul_raw(x.raw, b.raw), sub) for b in self.basis]


def self_dual_basis(q: int, ell: int) -> SelfDualBasis:
    """Deterministic self-dual basis of GF(q^ell) over GF(q): normal bases
    are scanned first, then a depth-first orthonormal-set search."""
    sub = (
        make_field(q, 1)
        if _is_prime_power_prime(q)
        else None
    )
    if sub is None:
        from .field import field_from_order

        sub = field_from_order(q)
    big = make_field(sub.p, sub.k * ell)
    if q % 2 and ell % 2 == 0:
        raise NoSelfDualBasisExists(
            f"no self-dual basis of GF({q}^{ell}) over GF({q}): q odd, ell even"
        )

    def tr(x: int) -> int:
        return big.trace_raw(x, sub)

    # 1) normal bases {alpha^(q^i)}
    for alpha in range(1, big.order):
        basis = [alpha]
        for _ in range(ell - 1):
            basis.append(big.pow_raw(basis[-1], q))
        ok = True
        for i in range(ell):
            for j in range(i, ell):
                t = tr(big.mul_raw(basis[i], basis[j]))
                if t != (1 if i == j else 0):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return SelfDualBasis(big, sub, tuple(FieldElement(big, b) for b in basis))

    # 2) DFS over orthonormal sets in canonical element order
    unit_norm = [x for x in range(1, big.order) if tr(big.mul_raw(x, x)) == 1]

    def dfs(chosen: list[int], start: int):
        if len(chosen) == ell:
            return chosen
        for idx in range(start, len(unit_norm)):
            x = unit_norm[idx]
            if all(tr(big.mul_raw(x, b)) == 0 for b in chosen):
                found = dfs(chosen + [x], idx + 1)
                if found:
                    return found
        return None

    found = dfs([], 0)
    if found is None:
        raise SearchExhausted(
            f"no self-dual basis of GF({q}^{ell}) over GF({q}) found by search"
        )
    return SelfDualBasis(big, sub, tuple(FieldElement(big, b) for b in found))


def _is_prime_power_prime(q: int) -> bool:
    from .field import _is_prime

    return _is_prime(q)


def expand_subfield(C: LinearCode, B: SelfDualBasis) -> LinearCode:
    """Image of C under the coordinate map to the subfield: each generator
    row is scaled by every basis element and written in basis coordinates,
    so the result is the full subfield-linear image of C."""
    if C.field is not B.big:
        raise BasisFieldMismatch(f"code over {C.field}, basis for {B.big}")
    big, sub = B.big, B.sub
    rows = []
    for row in C.rows:
        for beta in B.basis:
            scaled = [big.mul_raw(beta.raw, x) for x in row]
            out = []
            for z in scaled:
                out.extend(
                    big.trace_raw(big.mul_raw(z, b.raw), sub) for b in B.basis
                )
            rows.append(out)
    result = LinearCode.from_rows(sub, C.n * len(B.basis), rows)
    if result.k != C.k * len(B.basis):
        raise AssertionError("subfield image has unexpected dimension")
    return result
