import random

import pytest

import qccd.qc as qcmod
from qccd.errors import (
    NotCoprime,
    NotLcd,
    PreconditionViolation,
    ShapeMismatch,
    SlotNotAPair,
    SlotNotSelfReciprocal,
)
from qccd.field import make_field
from qccd.lincode import LinearCode
from qccd.polyring import Poly, factor_xm_minus_1
from qccd.qc import (
    ConstituentSet,
    QcCode,
    build_pair_double,
    build_self_single,
    constituents,
    dual_constituents,
    from_constituents,
    is_qccd,
    jensen_bound,
    twod_cyclic_lcd,
)

F2 = make_field(2, 1)
F3 = make_field(3, 1)

GRID = [
    (q, m, ell)
    for q in (2, 3)
    for m in (3, 5, 7)
    for ell in (2, 3, 4)
    if m % q
]


def random_qc(rng, base, m, ell, r):
    gens = [
        tuple(Poly(base, [rng.randrange(base.order) for _ in range(m)]) for _ in range(ell))
        for _ in range(r)
    ]
    return QcCode.make(base, m, ell, gens)


def seeded_codes(count, seed=20240915):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        q, m, ell = GRID[rng.randrange(len(GRID))]
        base = make_field(q, 1)
        out.append(random_qc(rng, base, m, ell, rng.randrange(1, 3)))
    return out


CODES = seeded_codes(60)


def test_make_checks_shape():
    with pytest.raises(ShapeMismatch):
        QcCode.make(F2, 3, 2, [(Poly.one(F2),)])


def test_expand_layout():
    # <(1, x)> at m=3: rows are shifts of (1,0,0 | 0,1,0)
    C = QcCode.make(F2, 3, 2, [(Poly.one(F2), Poly(F2, [0, 1]))])
    lin = C.expand()
    assert lin.params() == (6, 3)
    assert lin.contains([1, 0, 0, 0, 1, 0])
    assert lin.contains([0, 1, 0, 0, 0, 1])
    assert lin.contains([0, 0, 1, 1, 0, 0])


def test_from_rows_roundtrip():
    rng = random.Random(1)
    C = random_qc(rng, F3, 5, 3, 2)
    lin = C.expand()
    D = QcCode.from_rows(F3, 5, 3, [list(r) for r in lin.rows])
    assert D.expand() == lin


def test_constituents_require_coprime_m():
    C = QcCode.make(F3, 3, 2, [(Poly.one(F3), Poly.one(F3))])
    with pytest.raises(NotCoprime):
        constituents(C)


def test_constituent_dimension_identity():
    for C in CODES:
        cs = constituents(C)
        assert cs.fq_dimension() == C.expand().k


def test_crt_roundtrip():
    for C in CODES:
        cs = constituents(C)
        assert from_constituents(cs).expand() == C.expand()


def test_qccd_criterion_equals_hull_oracle():
    for C in CODES:
        verdict, cert = is_qccd(C)
        assert verdict == (C.expand().hull_dim("euclidean") == 0)
        assert len(cert["self"]) == constituents(C).profile.s
        assert len(cert["pairs"]) == constituents(C).profile.t


def test_dual_decomposition():
    for C in CODES[:30]:
        expected = constituents(
            QcCode.from_rows(
                C.base, C.m, C.ell, [list(r) for r in C.expand().dual().rows]
            )
        )
        assert dual_constituents(C) == expected


def test_whole_space_is_qccd():
    C = QcCode.make(F2, 5, 2, [(Poly.one(F2), Poly.zero(F2)), (Poly.zero(F2), Poly.one(F2))])
    verdict, _ = is_qccd(C)
    assert verdict
    assert C.expand().k == 10


# ---------------------------------------------------------------------------
# distance bound
# ---------------------------------------------------------------------------

def test_jensen_bound_sound():
    for C in CODES:
        lin = C.expand()
        if lin.k == 0:
            assert jensen_bound(C) == 0
            continue
        assert 0 < jensen_bound(C) <= lin.min_distance()


def test_jensen_bound_tight_for_single_slot():
    # <(1,1)> at m=3: distance 2, bound reaches it
    C = QcCode.make(F2, 3, 2, [(Poly.one(F2), Poly.one(F2))])
    assert jensen_bound(C) == C.expand().min_distance() == 2


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def test_build_pair_double():
    profile = factor_xm_minus_1(F2, 7)
    S = profile.splitting  # GF(8), equal to the pair-slot subfield
    C = LinearCode.from_rows(S, 3, [[1, 0, 3], [0, 1, 5]])
    assert C.hull_dim("euclidean") == 0
    code = build_pair_double(profile, 0, C)
    verdict, _ = is_qccd(code)
    assert verdict
    assert code.expand().hull_dim() == 0
    assert code.expand().k == 2 * 3 * C.k  # deg(h) * (k' + k'')


def test_build_pair_double_rejects_non_lcd():
    profile = factor_xm_minus_1(F2, 7)
    S = profile.splitting
    bad = LinearCode.from_rows(S, 2, [[1, 1]])
    if bad.hull_dim() == 0:  # (1,1) is self-orthogonal over GF(8)? check
        pytest.skip("unexpectedly LCD")
    with pytest.raises(NotLcd):
        build_pair_double(profile, 0, bad)


def test_build_pair_double_bad_index():
    profile = factor_xm_minus_1(F2, 7)
    with pytest.raises(SlotNotAPair):
        build_pair_double(profile, 1, LinearCode.from_rows(profile.splitting, 2, []))


def test_build_self_single():
    profile = factor_xm_minus_1(F2, 3)
    S = profile.splitting  # GF(4)
    # slot 1 carries the quadratic self-reciprocal factor
    C = LinearCode.from_rows(S, 2, [[1, 0]])
    assert C.hull_dim("hermitian") == 0
    code = build_self_single(profile, 1, C)
    verdict, _ = is_qccd(code)
    assert verdict
    assert code.expand().hull_dim() == 0
    assert code.expand().k == 2 * C.k


def test_build_self_single_rejects_odd_degree():
    profile = factor_xm_minus_1(F2, 3)
    C = LinearCode.from_rows(profile.splitting, 2, [])
    with pytest.raises(SlotNotSelfReciprocal):
        build_self_single(profile, 0, C)  # slot 0 carries x + 1


def test_builder_requires_subfield_entries():
    profile = factor_xm_minus_1(F2, 15)  # splitting GF(16); cubic-pair? no:
    # m=15 over GF(2): factors of degree 1, 2, 4, 4, 4; slot subfields differ
    from qccd.errors import SubfieldViolation

    S = profile.splitting
    # the degree-2 self-reciprocal slot lives in GF(4) inside GF(16)
    idx = next(i for i, (g, _) in enumerate(profile.self_recip) if g.degree == 2)
    outside = LinearCode.from_rows(S, 2, [[1, 2]])  # raw 2 not in embedded GF(4)
    with pytest.raises(SubfieldViolation):
        build_self_single(profile, idx, outside)


# ---------------------------------------------------------------------------
# 2D cyclic assembly
# ---------------------------------------------------------------------------

def _cyclic_part(S, suborder, ell, gen_poly):
    """Cyclic constituent over the embedded subfield from a generator poly."""
    rows = []
    coeffs = list(gen_poly) + [0] * (ell - len(gen_poly))
    for s in range(ell):
        rows.append(coeffs[-s:] + coeffs[:-s] if s else list(coeffs))
    return LinearCode.from_rows(S, ell, rows)


def test_twod_cyclic_lcd():
    profile = factor_xm_minus_1(F2, 3)
    S = profile.splitting
    ell = 7
    # reversible cyclic constituents: full space and the parity-check code
    full = LinearCode.from_rows(S, ell, [[1 if i == j else 0 for j in range(ell)] for i in range(ell)])
    cs = ConstituentSet(profile, ell, (full, full), ())
    code, lcd = twod_cyclic_lcd(cs)
    assert lcd
    assert code.expand().k == ell * 3


def test_twod_cyclic_rejects_nonreversible():
    profile = factor_xm_minus_1(F2, 3)
    S = profile.splitting
    ell = 7
    # <1 + x + x^3> over GF(2) embedded: cyclic but not reversible
    part = _cyclic_part(S, 2, ell, [1, 1, 0, 1])
    full = LinearCode.from_rows(S, ell, [[1 if i == j else 0 for j in range(ell)] for i in range(ell)])
    with pytest.raises(PreconditionViolation):
        twod_cyclic_lcd(ConstituentSet(profile, ell, (part, full), ()))
