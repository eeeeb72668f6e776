"""Exact arithmetic in GF(p^k): field contexts, elements, Frobenius, trace,
subfield embeddings and roots of unity.

Elements are stored in polynomial-basis representation, encoded as an
integer in [0, p^k): the base-p digits are the coefficients, low digit =
constant coefficient.  All field contexts are interned singletons, so the
choice of modulus and primitive element is bit-reproducible across runs.
"""
from __future__ import annotations

import itertools
import math
from functools import lru_cache

from .errors import (
    CharacteristicDividesM,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NonPrimeCharacteristic,
    NotASubfield,
    NotSquareOrderField,
)

MAX_FIELD_ORDER = 1 << 20

# exp/log tables are only built for fields up to this order
_TABLE_LIMIT = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# prime-field polynomial helpers (coefficient tuples, low degree first)
# ---------------------------------------------------------------------------

def _pf_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pf_trim(out)


def _pf_mod(a, b, p):
    # b monic
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1]
        if c:
            shift = len(a) - 1 - db
            for j in range(db):
                a[shift + j] = (a[shift + j] - c * b[j]) % p
        a.pop()
    return _pf_trim(a)


def _pf_is_irreducible(f, p) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    k = len(f) - 1
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for digits in itertools.product(range(p), repeat=d):
            g = list(digits) + [1]
            if not _pf_mod(f, g, p):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over GF(p),
    coefficients compared low-degree-first."""
    for digits in itertools.product(range(p), repeat=k):
        f = list(digits) + [1]
        if _pf_is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# field context
# ---------------------------------------------------------------------------

class FiniteField:
    """GF(p^k) with a fixed modulus.  Obtain instances via make_field()."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = modulus
        self._exp = None
        self._log = None
        self._prim = None
        self._embeddings: dict[int, tuple[list[int], dict[int, int]]] = {}
        if p == 2:
            self._mod_bits = sum(1 << i for i, c in enumerate(modulus) if c)
        else:
            self._mod_bits = None
        self._pk_pows = [p**i for i in range(k + 1)]

    # singletons survive pickling
    def __reduce__(self):
        return (make_field, (self.p, self.k))

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def serialize(self) -> str:
        return f"{self.p}^{self.k}:" + ",".join(str(c) for c in self.modulus)

    # -- digit encoding ----------------------------------------------------
    def to_digits(self, a: int) -> list[int]:
        p = self.p
        return [(a // self._pk_pows[i]) % p for i in range(self.k)]

    def from_digits(self, digits) -> int:
        return sum(d * self._pk_pows[i] for i, d in enumerate(digits))

    # -- raw arithmetic on integer codes -----------------------------------
    def add_raw(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        for i in range(self.k):
            pi = self._pk_pows[i]
            out += (((a // pi) + (b // pi)) % p) * pi
        return out

    def neg_raw(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        for i in range(self.k):
            pi = self._pk_pows[i]
            out += ((-(a // pi)) % p) * pi
        return out

    def sub_raw(self, a: int, b: int) -> int:
        return self.add_raw(a, self.neg_raw(b))

    def _polymul_raw(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.p == 2:
            k, mod = self.k, self._mod_bits
            r = 0
            top = 1 << k
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= mod
            return r
        p = self.p
        da, db = self.to_digits(a), self.to_digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        # reduce by the monic modulus
        for i in range(len(prod) - 1, self.k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(self.k):
                    prod[i - self.k + j] = (prod[i - self.k + j] - c * self.modulus[j]) % p
        return self.from_digits(prod[: self.k])

    def _ensure_tables(self):
        if self._exp is not None or self.order > _TABLE_LIMIT:
            return
        g = self.primitive_element_raw()
        n = self.order - 1
        exp = [0] * (2 * n)
        log = [0] * self.order
        cur = 1
        for i in range(n):
            exp[i] = cur
            exp[i + n] = cur
            log[cur] = i
            cur = self._polymul_raw(cur, g)
        self._exp, self._log = exp, log

    def mul_raw(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is None:
            self._ensure_tables()
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._polymul_raw(a, b)

    def inv_raw(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("cannot invert zero")
        if self._exp is None:
            self._ensure_tables()
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self._pow_square_mult(a, self.order - 2)

    def _pow_square_mult(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._polymul_raw(r, a)
            a = self._polymul_raw(a, a)
            e >>= 1
        return r

    def pow_raw(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise DivisionByZero("cannot raise zero to a negative power")
            return 0
        e %= self.order - 1
        if self._exp is None:
            self._ensure_tables()
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        return self._pow_square_mult(a, e)

    def frobenius_raw(self, a: int, j: int) -> int:
        return self.pow_raw(a, self.p**j)

    def primitive_element_raw(self) -> int:
        """First element in canonical enumeration order that generates the
        multiplicative group."""
        if self._prim is not None:
            return self._prim
        n = self.order - 1
        facs = _prime_factors(n) if n > 1 else []
        for g in range(1, self.order):
            if all(self._pow_square_mult(g, n // f) != 1 for f in facs):
                self._prim = g
                return g
        raise AssertionError("no primitive element found")  # unreachable

    def multiplicative_order_raw(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        n = self.order - 1
        o = n
        for f in _prime_factors(n) if n > 1 else []:
            while o % f == 0 and self.pow_raw(a, o // f) == 1:
                o //= f
        return o

    # -- elements ----------------------------------------------------------
    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def element(self, raw: int) -> "FieldElement":
        if not 0 <= raw < self.order:
            raise ValueError(f"element code {raw} out of range for {self}")
        return FieldElement(self, raw)

    def elements(self):
        for raw in range(self.order):
            yield FieldElement(self, raw)

    # -- subfield machinery ------------------------------------------------
    def is_subfield(self, sub: "FiniteField") -> bool:
        return sub.p == self.p and self.k % sub.k == 0

    def embedding(self, sub: "FiniteField") -> tuple[list[int], dict[int, int]]:
        """(table, retract): table[x_sub] = image in self; retract inverts it."""
        if not self.is_subfield(sub):
            raise NotASubfield(f"{sub} is not a subfield of {self}")
        key = sub.k
        cached = self._embeddings.get(key)
        if cached is not None:
            return cached
        if sub.order == self.order:
            table = list(range(self.order))
            retract = {x: x for x in range(self.order)}
        else:
            root = self._subfield_root(sub)
            rpows = [1]
            for _ in range(sub.k - 1):
                rpows.append(self.mul_raw(rpows[-1], root))
            table = [0] * sub.order
            for x in range(sub.order):
                acc = 0
                for i, d in enumerate(sub.to_digits(x)):
                    if d:
                        acc = self.add_raw(acc, self.mul_raw(d, rpows[i]))
                table[x] = acc
            retract = {img: x for x, img in enumerate(table)}
        self._embeddings[key] = (table, retract)
        return table, retract

    def _subfield_root(self, sub: "FiniteField") -> int:
        """Smallest root in self of sub's modulus (canonical embedding)."""
        g = self.primitive_element_raw()
        step = (self.order - 1) // (sub.order - 1)
        candidates = [0] + [self.pow_raw(g, j * step) for j in range(sub.order - 1)]
        roots = []
        for c in candidates:
            # Horner; modulus coefficients are prime-field codes, valid here too
            acc = 0
            for coef in reversed(sub.modulus):
                acc = self.add_raw(self.mul_raw(acc, c), coef)
            if acc == 0:
                roots.append(c)
        return min(roots)

    def trace_raw(self, a: int, sub: "FiniteField") -> int:
        """Trace of a down to sub, returned as a raw code of sub."""
        if not self.is_subfield(sub):
            raise NotASubfield(f"{sub} is not a subfield of {self}")
        e = self.k // sub.k
        acc = a
        y = a
        for _ in range(e - 1):
            y = self.pow_raw(y, sub.order)
            acc = self.add_raw(acc, y)
        _, retract = self.embedding(sub)
        if acc not in retract:
            raise AssertionError("trace value escaped the subfield")
        return retract[acc]


class FieldElement:
    """Immutable element of a FiniteField."""

    __slots__ = ("field", "raw")

    def __init__(self, field: FiniteField, raw: int):
        self.field = field
        self.raw = raw

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, int):
            # small integers embed via the prime subfield
            return FieldElement(self.field, other % self.field.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.add_raw(self.raw, other.raw))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.sub_raw(self.raw, other.raw))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_raw(self.raw))

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.mul_raw(self.raw, other.raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.mul_raw(self.raw, self.field.inv_raw(other.raw)))

    def __pow__(self, e: int):
        if e < 0:
            return FieldElement(self.field, self.field.pow_raw(self.field.inv_raw(self.raw), -e))
        return FieldElement(self.field, self.field.pow_raw(self.raw, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_raw(self.raw))

    def frobenius(self, j: int) -> "FieldElement":
        if j < 0:
            raise ValueError("Frobenius power must be nonnegative")
        return FieldElement(self.field, self.field.frobenius_raw(self.raw, j))

    def conjugate(self) -> "FieldElement":
        """x -> x^sqrt(Q); requires a square-order field."""
        if self.field.k % 2:
            raise NotSquareOrderField(f"{self.field} has no square order")
        return self.frobenius(self.field.k // 2)

    def multiplicative_order(self) -> int:
        return self.field.multiplicative_order_raw(self.raw)

    @property
    def coeffs(self) -> list[int]:
        return self.field.to_digits(self.raw)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.raw == other.raw
        if isinstance(other, int):
            return self.raw == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.raw))

    def __repr__(self):
        return f"{self.field}({self.raw})"


# ---------------------------------------------------------------------------
# public constructors
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def make_field(p: int, k: int) -> FiniteField:
    """GF(p^k) with the lexicographically smallest monic irreducible modulus."""
    if not _is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if p**k > MAX_FIELD_ORDER:
        raise FieldTooLarge(f"GF({p}^{k}) exceeds the {MAX_FIELD_ORDER} element cap")
    return FiniteField(p, k, _smallest_irreducible(p, k))


def field_from_order(q: int) -> FiniteField:
    """GF(q) for a prime power q."""
    facs = _prime_factors(q)
    if len(facs) != 1:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    p = facs[0]
    k = 0
    n = q
    while n > 1:
        n //= p
        k += 1
    if p**k != q:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    return make_field(p, k)


def frobenius(x: FieldElement, j: int) -> FieldElement:
    return x.frobenius(j)


def trace(x: FieldElement, sub: FiniteField) -> FieldElement:
    return FieldElement(sub, x.field.trace_raw(x.raw, sub))


def root_of_unity(F: FiniteField, m: int) -> tuple[FiniteField, FieldElement]:
    """Splitting field of x^m - 1 over F and a canonical primitive m-th root
    of unity in it."""
    if m < 1:
        raise ValueError("m must be positive")
    if math.gcd(m, F.p) != 1:
        raise CharacteristicDividesM(f"characteristic {F.p} divides m={m}")
    if m == 1:
        return F, F.one
    # s = multiplicative order of |F| mod m
    s = 1
    acc = F.order % m
    while acc != 1:
        acc = (acc * F.order) % m
        s += 1
    splitting = make_field(F.p, F.k * s)
    g = splitting.primitive_element_raw()
    xi = splitting.pow_raw(g, (splitting.order - 1) // m)
    return splitting, FieldElement(splitting, xi)
