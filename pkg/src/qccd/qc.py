"""Quasi-cyclic codes as modules over R = F_q[x]/(x^m - 1).

A QC code is held by generator tuples in R^ell.  The constituent
decomposition evaluates the generators at powers of a primitive m-th root
of unity and spans over the attached subfield; the inverse direction
rebuilds generator tuples through the idempotent of each factor.  All
constituent linear algebra is carried out inside the splitting field, with
subfield membership asserted after every reduction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .cyclic import make_cyclic
from .errors import (
    NotCoprime,
    NotLcd,
    PreconditionViolation,
    ShapeMismatch,
    SlotNotAPair,
    SlotNotSelfReciprocal,
    SubfieldViolation,
)
from .field import FieldElement, FiniteField
from .lincode import LinearCode, min_weight
from .polyring import FactorProfile, Poly, factor_xm_minus_1, poly_xgcd, xm_minus_one


@dataclass(frozen=True)
class QcCode:
    base: FiniteField
    m: int
    ell: int
    gens: tuple[tuple[Poly, ...], ...]

    @classmethod
    def make(cls, base: FiniteField, m: int, ell: int, gens) -> "QcCode":
        norm = []
        for gen in gens:
            gen = tuple(gen)
            if len(gen) != ell:
                raise ShapeMismatch(f"generator tuple of length {len(gen)}, expected {ell}")
            norm.append(tuple(a.reduce_mod_xm(m) for a in gen))
        return cls(base, m, ell, tuple(norm))

    @classmethod
    def from_rows(cls, base: FiniteField, m: int, ell: int, rows) -> "QcCode":
        """Reinterpret F_q rows of length m*ell (blockwise layout) as
        generator tuples."""
        gens = []
        for row in rows:
            if len(row) != m * ell:
                raise ShapeMismatch(f"row length {len(row)}, expected {m * ell}")
            gens.append(tuple(Poly(base, row[j * m : (j + 1) * m]) for j in range(ell)))
        return cls(base, m, ell, tuple(gens))

    def expand(self) -> LinearCode:
        """F_q-linear view: all m cyclic-shift images of every generator,
        written blockwise per coordinate, RREF-reduced."""
        rows = []
        for gen in self.gens:
            for s in range(self.m):
                row = []
                for a in gen:
                    row.extend(a.shift_mod_xm(s, self.m).padded_coeffs(self.m))
                rows.append(row)
        return LinearCode.from_rows(self.base, self.m * self.ell, rows)

    def __repr__(self):
        return f"QcCode({self.base}, m={self.m}, ell={self.ell}, r={len(self.gens)})"


# ---------------------------------------------------------------------------
# constituents
# ---------------------------------------------------------------------------

def slot_conj_exp(base: FiniteField, degree: int) -> int:
    """Exponent of the conjugation on the subfield attached to a
    self-reciprocal factor: the square-root Frobenius when the degree is
    even, the identity otherwise."""
    return base.order ** (degree // 2) if degree % 2 == 0 else 1


@lru_cache(maxsize=None)
def _subfield_elements(splitting: FiniteField, suborder: int) -> tuple[int, ...]:
    return tuple(z for z in range(splitting.order) if splitting.pow_raw(z, suborder) == z)


def _assert_subfield(splitting: FiniteField, rows, suborder: int):
    for row in rows:
        for z in row:
            if splitting.pow_raw(z, suborder) != z:
                raise SubfieldViolation(
                    f"entry {z} not in the subfield of order {suborder}"
                )


@dataclass(frozen=True)
class ConstituentSet:
    """CRT image of a QC code: one linear code per factor of x^m - 1, all
    represented inside the splitting field."""

    profile: FactorProfile
    ell: int
    self_parts: tuple[LinearCode, ...]
    pair_parts: tuple[tuple[LinearCode, LinearCode], ...]

    def fq_dimension(self) -> int:
        total = 0
        for (g, _), part in zip(self.profile.self_recip, self.self_parts):
            total += g.degree * part.k
        for (h, _, _), (cp, cpp) in zip(self.profile.pairs, self.pair_parts):
            total += h.degree * (cp.k + cpp.k)
        return total

    def __eq__(self, other):
        return (
            isinstance(other, ConstituentSet)
            and other.profile == self.profile
            and other.self_parts == self.self_parts
            and other.pair_parts == self.pair_parts
        )


def constituent_set(profile: FactorProfile, self_parts, pair_parts) -> ConstituentSet:
    """Validate shapes and subfield membership, canonicalize each part."""
    self_parts = list(self_parts)
    pair_parts = [tuple(pp) for pp in pair_parts]
    if len(self_parts) != profile.s or len(pair_parts) != profile.t:
        raise ShapeMismatch(
            f"expected {profile.s} self slots and {profile.t} pair slots"
        )
    S = profile.splitting
    q = profile.base.order
    ells = set()
    for part in self_parts:
        ells.add(part.n)
    for cp, cpp in pair_parts:
        ells.update((cp.n, cpp.n))
    if len(ells) != 1:
        raise ShapeMismatch(f"inconsistent constituent lengths {sorted(ells)}")
    ell = ells.pop()
    for (g, _), part in zip(profile.self_recip, self_parts):
        if part.field is not S:
            raise ShapeMismatch("constituents must live in the splitting field")
        _assert_subfield(S, part.rows, q**g.degree)
    for (h, _, _), (cp, cpp) in zip(profile.pairs, pair_parts):
        for part in (cp, cpp):
            if part.field is not S:
                raise ShapeMismatch("constituents must live in the splitting field")
            _assert_subfield(S, part.rows, q**h.degree)
    return ConstituentSet(profile, ell, tuple(self_parts), tuple(pair_parts))


def constituents(C: QcCode) -> ConstituentSet:
    """Evaluate the generators at xi^{u_i}, xi^{v_j}, xi^{-v_j} and span
    over the respective subfields."""
    if math.gcd(C.m, C.base.p) != 1:
        raise NotCoprime(f"characteristic {C.base.p} divides m={C.m}")
    profile = factor_xm_minus_1(C.base, C.m)
    S = profile.splitting
    xi = profile.xi

    def span_at(exp: int, suborder: int) -> LinearCode:
        point = xi**exp
        rows = [[a.evaluate(point).raw for a in gen] for gen in C.gens]
        code = LinearCode.from_rows(S, C.ell, rows)
        _assert_subfield(S, code.rows, suborder)
        return code

    q = C.base.order
    self_parts = [span_at(u, q**g.degree) for g, u in profile.self_recip]
    pair_parts = [
        (span_at(v, q**h.degree), span_at((-v) % C.m, q**h.degree))
        for h, _, v in profile.pairs
    ]
    return ConstituentSet(profile, C.ell, tuple(self_parts), tuple(pair_parts))


# ---------------------------------------------------------------------------
# inverse CRT
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _idempotent(profile: FactorProfile, factor_index: int) -> Poly:
    """Polynomial that is 1 at the roots of the indexed factor and 0 at the
    roots of every other factor of x^m - 1."""
    factors = profile.all_factors()
    f = factors[factor_index]
    other = xm_minus_one(profile.base, profile.m) // f
    g, alpha, beta = poly_xgcd(f, other)
    if not g.is_one():
        raise AssertionError("factors of x^m - 1 are not coprime")
    return (beta * other).reduce_mod_xm(profile.m)


def _solve_prime(A: list[list[int]], ys: list[list[int]], p: int) -> list[list[int]]:
    """Solve A x = y mod p for each y (A with full column rank)."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    aug = [A[i] + [y[i] for y in ys] for i in range(rows)]
    width = cols + len(ys)
    r = 0
    pivots = []
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i][c] % p), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], p - 2, p)
        aug[r] = [(x * inv) % p for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] % p:
                f = aug[i][c]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if len(pivots) != cols:
        raise SubfieldViolation("target vector is not in the expected subfield span")
    for i in range(r, rows):
        if any(aug[i][cols:]):
            raise SubfieldViolation("inconsistent subfield interpolation system")
    sols = []
    for t in range(len(ys)):
        x = [0] * cols
        for i, c in enumerate(pivots):
            x[c] = aug[i][cols + t]
        sols.append(x)
    return sols


@lru_cache(maxsize=None)
def _interp_matrix(profile: FactorProfile, exp: int, degree: int) -> list[list[int]]:
    """Prime-field matrix of (c_0..c_{d-1}) over F_q  ->  sum c_t xi^{exp*t},
    columns indexed by (t, base digit)."""
    base, S = profile.base, profile.splitting
    table, _ = S.embedding(base)
    rho = S.pow_raw(profile.xi.raw, exp % profile.m) if profile.m > 1 else 1
    rho_pows = [1]
    for _ in range(degree - 1):
        rho_pows.append(S.mul_raw(rho_pows[-1], rho))
    cols = []
    for t in range(degree):
        for a in range(base.k):
            unit = base.p**a
            cols.append(S.to_digits(S.mul_raw(table[unit], rho_pows[t])))
    # transpose to row-major
    return [[col[r] for col in cols] for r in range(S.k)]


def _interpolate_slot(profile: FactorProfile, exp: int, degree: int, values: list[int]) -> list[Poly]:
    """For each raw splitting value, the F_q-polynomial of degree < degree
    taking that value at xi^exp."""
    base, S = profile.base, profile.splitting
    A = _interp_matrix(profile, exp, degree)
    ys = [S.to_digits(v) for v in values]
    sols = _solve_prime([list(r) for r in A], ys, base.p)
    polys = []
    for x in sols:
        coeffs = [
            base.from_digits(x[t * base.k : (t + 1) * base.k]) for t in range(degree)
        ]
        polys.append(Poly(base, coeffs))
    return polys


def from_constituents(cs: ConstituentSet) -> QcCode:
    """Inverse-CRT reconstruction: one generator tuple per basis vector of
    each constituent, supported on that slot only."""
    profile = cs.profile
    base = profile.base
    m, ell = profile.m, cs.ell
    gens = []

    def add_slot(factor_index: int, exp: int, degree: int, part: LinearCode):
        e_f = _idempotent(profile, factor_index)
        for row in part.rows:
            cpolys = _interpolate_slot(profile, exp, degree, list(row))
            gens.append(tuple(c.mul_mod_xm(e_f, m) for c in cpolys))

    fidx = 0
    for (g, u), part in zip(profile.self_recip, cs.self_parts):
        add_slot(fidx, u, g.degree, part)
        fidx += 1
    for (h, hstar, v), (cp, cpp) in zip(profile.pairs, cs.pair_parts):
        add_slot(fidx, v, h.degree, cp)
        add_slot(fidx + 1, (-v) % m, hstar.degree, cpp)
        fidx += 2
    if not gens:
        gens = [tuple(Poly.zero(base) for _ in range(ell))]
    return QcCode.make(base, m, ell, gens)


# ---------------------------------------------------------------------------
# duals, certification, distance bound
# ---------------------------------------------------------------------------

def dual_constituents(C: QcCode) -> ConstituentSet:
    """Constituents of the Euclidean dual: Hermitian duals in the
    self-reciprocal slots, crossed Euclidean duals in the pair slots."""
    cs = constituents(C)
    profile = cs.profile
    S = profile.splitting
    self_parts = []
    for (g, _), part in zip(profile.self_recip, cs.self_parts):
        e = slot_conj_exp(profile.base, g.degree)
        conj = part if e == 1 else part.conjugate_code(e)
        self_parts.append(conj.dual())
    pair_parts = [(cpp.dual(), cp.dual()) for cp, cpp in cs.pair_parts]
    return ConstituentSet(profile, cs.ell, tuple(self_parts), tuple(pair_parts))


def is_qccd(C: QcCode) -> tuple[bool, dict]:
    """Constituent-wise complementary-dual certification: every
    self-reciprocal constituent Hermitian LCD, and trivial crossed
    intersections in every pair slot."""
    cs = constituents(C)
    profile = cs.profile
    cert = {"self": [], "pairs": []}
    verdict = True
    for (g, u), part in zip(profile.self_recip, cs.self_parts):
        e = slot_conj_exp(profile.base, g.degree)
        hull = part.hull_dim("hermitian", conj_exp=e) if part.k else 0
        cert["self"].append({"u": u, "degree": g.degree, "dim": part.k, "hull_dim": hull})
        verdict &= hull == 0
    for (h, _, v), (cp, cpp) in zip(profile.pairs, cs.pair_parts):
        i1 = cp.intersect(cpp.dual()).k
        i2 = cpp.intersect(cp.dual()).k
        cert["pairs"].append(
            {"v": v, "degree": h.degree, "dims": [cp.k, cpp.k], "crossed_dims": [i1, i2]}
        )
        verdict &= i1 == 0 and i2 == 0
    return verdict, cert


@lru_cache(maxsize=None)
def _inner_sum_distance(base: FiniteField, m: int, check_coeffs: tuple[int, ...]) -> int:
    check = Poly(base, check_coeffs)
    gen = xm_minus_one(base, m) // check
    cyc = make_cyclic(base, m, gen)
    return cyc.as_linear_code().min_distance()


def jensen_bound(C: QcCode) -> int:
    """Concatenation lower bound on the minimum distance: sorted nonzero
    constituent distances against the distances of partial sums of the
    matching minimal cyclic codes."""
    cs = constituents(C)
    profile = cs.profile
    S = profile.splitting
    q = C.base.order

    slots = []  # (constituent distance, slot order index, factor)
    idx = 0
    for (g, _), part in zip(profile.self_recip, cs.self_parts):
        if part.k:
            scalars = _subfield_elements(S, q**g.degree)
            slots.append((min_weight(S, part.rows, part.n, scalars), idx, g))
        idx += 1
    for (h, hstar, _), (cp, cpp) in zip(profile.pairs, cs.pair_parts):
        for part, f in ((cp, h), (cpp, hstar)):
            if part.k:
                scalars = _subfield_elements(S, q**h.degree)
                slots.append((min_weight(S, part.rows, part.n, scalars), idx, f))
            idx += 1
    if not slots:
        return 0
    slots.sort(key=lambda s: (s[0], s[1]))

    bound = None
    check = Poly.one(C.base)
    for d_out, _, f in slots:
        check = check * f
        d_inner = _inner_sum_distance(C.base, C.m, check.coeffs)
        val = d_out * d_inner
        bound = val if bound is None else min(bound, val)
    return bound


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def _zero_part(profile: FactorProfile, ell: int) -> LinearCode:
    return LinearCode.from_rows(profile.splitting, ell, [])


def build_pair_double(profile: FactorProfile, pair_index: int, C: LinearCode) -> QcCode:
    """QC code with the given Euclidean LCD code in both halves of one
    reciprocal pair slot and zero everywhere else; QCCD by construction."""
    if not 0 <= pair_index < profile.t:
        raise SlotNotAPair(f"profile has {profile.t} pair slots")
    h, _, _ = profile.pairs[pair_index]
    S = profile.splitting
    if C.field is not S:
        raise ShapeMismatch("constituent must live in the splitting field")
    _assert_subfield(S, C.rows, profile.base.order**h.degree)
    if C.k and C.hull_dim("euclidean") != 0:
        raise NotLcd("constituent is not Euclidean LCD")
    ell = C.n
    self_parts = [_zero_part(profile, ell) for _ in range(profile.s)]
    pair_parts = [
        (C, C) if j == pair_index else (_zero_part(profile, ell), _zero_part(profile, ell))
        for j in range(profile.t)
    ]
    code = from_constituents(ConstituentSet(profile, ell, tuple(self_parts), tuple(pair_parts)))
    ok, _ = is_qccd(code)
    if not ok:
        raise AssertionError("pair-doubling construction failed certification")
    return code


def build_self_single(profile: FactorProfile, self_index: int, C: LinearCode) -> QcCode:
    """QC code with the given Hermitian LCD code in one self-reciprocal slot
    of even degree and zero everywhere else; QCCD by construction."""
    if not 0 <= self_index < profile.s:
        raise SlotNotSelfReciprocal(f"profile has {profile.s} self-reciprocal slots")
    g, _ = profile.self_recip[self_index]
    if g.degree % 2:
        raise SlotNotSelfReciprocal(
            "slot must carry a self-reciprocal factor of even degree"
        )
    S = profile.splitting
    if C.field is not S:
        raise ShapeMismatch("constituent must live in the splitting field")
    _assert_subfield(S, C.rows, profile.base.order**g.degree)
    e = slot_conj_exp(profile.base, g.degree)
    if C.k and C.hull_dim("hermitian", conj_exp=e) != 0:
        raise NotLcd("constituent is not Hermitian LCD")
    ell = C.n
    self_parts = [
        C if i == self_index else _zero_part(profile, ell) for i in range(profile.s)
    ]
    pair_parts = [
        (_zero_part(profile, ell), _zero_part(profile, ell)) for _ in range(profile.t)
    ]
    code = from_constituents(ConstituentSet(profile, ell, tuple(self_parts), tuple(pair_parts)))
    ok, _ = is_qccd(code)
    if not ok:
        raise AssertionError("single-slot construction failed certification")
    return code


# ---------------------------------------------------------------------------
# 2D cyclic assembly
# ---------------------------------------------------------------------------

def _is_shift_closed(part: LinearCode) -> bool:
    for row in part.rows:
        shifted = (row[-1],) + row[:-1]
        if not part.contains(shifted):
            return False
    return True


def _is_conj_reversal_closed(part: LinearCode, conj_exp: int) -> bool:
    F = part.field
    for row in part.rows:
        rev = [F.pow_raw(x, conj_exp) for x in reversed(row)]
        if not part.contains(rev):
            return False
    return True


def twod_cyclic_lcd(cs: ConstituentSet) -> tuple[QcCode, bool]:
    """Assemble a 2D cyclic code from cyclic constituents that are
    (conjugate-)reversible, and certify LCD with the expanded hull oracle."""
    profile = cs.profile
    if math.gcd(cs.ell, profile.base.p) != 1:
        raise PreconditionViolation(f"characteristic {profile.base.p} divides ell={cs.ell}")
    for (g, u), part in zip(profile.self_recip, cs.self_parts):
        label = f"self slot u={u}"
        if part.k:
            if not _is_shift_closed(part):
                raise PreconditionViolation(f"{label}: constituent is not cyclic")
            e = slot_conj_exp(profile.base, g.degree)
            if not _is_conj_reversal_closed(part, e):
                raise PreconditionViolation(f"{label}: constituent is not conjugate-reversible")
    for (h, _, v), (cp, cpp) in zip(profile.pairs, cs.pair_parts):
        label = f"pair slot v={v}"
        if cp != cpp:
            raise PreconditionViolation(f"{label}: paired constituents differ")
        if cp.k:
            if not _is_shift_closed(cp):
                raise PreconditionViolation(f"{label}: constituent is not cyclic")
            if not _is_conj_reversal_closed(cp, 1):
                raise PreconditionViolation(f"{label}: constituent is not reversible")
    code = from_constituents(cs)
    lcd = code.expand().hull_dim("euclidean") == 0
    return code, lcd
