"""Ring realizations: construction, validation, arithmetic, tables."""

import itertools
import random

import numpy as np
import pytest

from ringbench.core import (
    AdditiveShape, DomainError, InputError, LimitError, Limits, QuotientRing,
    StructureRing, SubRing, center, elem_arith, enumerate_elements, make_ring,
    units_and_regulars, validate_ring,
)


def make_zn(n):
    return make_ring([n], [[[1 % n]]], (1,), basis_names=("u",))


def full_matrix_tensor(n, mod):
    """Structure constants of n x n matrices over Z_mod, basis E(i,j) row-major."""
    k = n * n
    c = np.zeros((k, k, k), dtype=np.int64)
    for i, j, l, m in itertools.product(range(n), repeat=4):
        if j == l:  # E(i,j) E(l,m) = E(i,m) when j == l
            c[i * n + j, l * n + m, i * n + m] = 1 % mod
    return c


def make_mat(n, mod):
    one = tuple(1 if i % (n + 1) == 0 else 0 for i in range(n * n))
    names = tuple("e%d%d" % (i + 1, j + 1) for i in range(n) for j in range(n))
    return make_ring([mod] * (n * n), full_matrix_tensor(n, mod), one,
                     basis_names=names)


def as_matrix(elem, n):
    return np.array(elem, dtype=np.int64).reshape(n, n)


# -- shape ------------------------------------------------------------------

def test_shape_index_roundtrip():
    shape = AdditiveShape((2, 3, 4))
    assert shape.cardinality == 24
    assert shape.weights == (12, 4, 1)
    seen = []
    for i, e in enumerate(shape.iter_elements()):
        assert shape.index(e) == i
        assert shape.element(i) == e
        seen.append(e)
    assert seen == sorted(seen)  # lexicographic
    assert seen[0] == (0, 0, 0)
    assert shape.reduce((5, -1, 9)) == (1, 2, 1)


def test_shape_rejects_bad_moduli():
    with pytest.raises(InputError):
        AdditiveShape((0, 2))
    with pytest.raises(InputError):
        AdditiveShape(())


# -- validation -------------------------------------------------------------

def test_validate_accepts_z6():
    rep = validate_ring([6], [[[1]]], (1,))
    assert rep.ok and not rep.violations


def test_validate_identity_law_failure():
    rep = validate_ring([4], [[[2]]], (1,))
    assert not rep.ok
    assert any("identity" in v for v in rep.violations)
    with pytest.raises(InputError):
        make_ring([4], [[[2]]], (1,))


def test_validate_order_incompatibility():
    # b0 has additive order 2 but b0*b0 = b1 of order 4: 0 = (2b0)b0 = 2b1 != 0
    c = np.zeros((2, 2, 2), dtype=int)
    c[0, 0, 1] = 1
    rep = validate_ring([2, 4], c, (0, 1))
    assert not rep.ok
    assert any("order incompatibility" in v for v in rep.violations)


def test_validate_associativity_failure():
    # x*x = y, y*y = y instead of x: (xx)(xx) = y but x(x(xx)) walks to x
    k = 3
    c = np.zeros((k, k, k), dtype=int)
    for j in range(k):
        c[0, j, j] = 1
        c[j, 0, j] = 1
    c[1, 1, 2] = 1
    c[1, 2, 0] = 1
    c[2, 1, 0] = 1
    c[2, 2, 2] = 1
    rep = validate_ring([5, 5, 5], c, (1, 0, 0))
    assert not rep.ok
    assert any("associativity" in v for v in rep.violations)


def test_validate_zero_ring_rejected():
    rep = validate_ring([2], [[[0]]], (0,))
    assert not rep.ok
    assert any("zero" in v for v in rep.violations)


# -- structure ring arithmetic ---------------------------------------------

def test_z6_matches_integer_arithmetic():
    r = make_zn(6)
    assert r.size == 6
    assert r.one == (1,) and r.zero == (0,)
    for a in range(6):
        for b in range(6):
            assert r.add((a,), (b,)) == ((a + b) % 6,)
            assert r.mul((a,), (b,)) == ((a * b) % 6,)
        assert r.neg((a,)) == ((-a) % 6,)
    assert enumerate_elements(r) == tuple((i,) for i in range(6))


def test_m2_z2_matches_matrix_arithmetic():
    r = make_mat(2, 2)
    elems = r.elements()
    assert len(elems) == 16
    for a in elems:
        for b in elems:
            want = (as_matrix(a, 2) @ as_matrix(b, 2)) % 2
            got = as_matrix(r.mul(a, b), 2)
            assert (want == got).all()


def test_element_canonicalization_and_arith_surface():
    r = make_zn(6)
    assert r.element((13,)) == (1,)
    assert elem_arith(r, "add", (5,), (2,)) == (1,)
    assert elem_arith(r, "mul", (-1,), (2,)) == (4,)
    assert elem_arith(r, "neg", (2,)) == (4,)
    with pytest.raises(InputError):
        elem_arith(r, "pow", (1,), (2,))
    with pytest.raises(InputError):
        elem_arith(r, "neg", (1,), (2,))
    with pytest.raises(InputError):
        elem_arith(r, "add", (1,), None)
    with pytest.raises(InputError):
        r.element((1, 2))


def test_enumeration_deterministic_and_sorted():
    r = make_mat(2, 3)
    first = enumerate_elements(r)
    assert first == tuple(sorted(first))
    assert first[0] == r.zero
    again = make_mat(2, 3)
    assert enumerate_elements(again) == first


def test_format_element():
    r = make_mat(2, 2)
    assert r.format_element((0, 0, 0, 0)) == "0"
    assert r.format_element((1, 0, 0, 1)) == "e11+e22"
    r3 = make_mat(2, 3)
    assert r3.format_element((0, 2, 0, 1)) == "2e12+e22"
    plain = StructureRing([4], [[[1]]], (1,))
    assert plain.format_element((3,)) == "(3)"


def test_limits_gate_enumeration_not_construction():
    k = 17
    c = np.zeros((k, k, k), dtype=int)
    for i in range(k):
        c[i, i, i] = 1
    r = make_ring([2] * k, c, (1,) * k)  # product of 17 copies of Z2
    assert r.size == 2 ** 17
    with pytest.raises(LimitError) as err:
        r.elements(Limits())
    assert err.value.limit == "max_elements"


# -- random associativity / distributivity spot checks -----------------------

def test_axioms_on_random_triples():
    rng = random.Random(20260814)
    r = make_mat(2, 4)
    elems = r.elements()
    for _ in range(300):
        a, b, c = (rng.choice(elems) for _ in range(3))
        assert r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c))
        assert r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c))
        assert r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c))
        assert r.add(a, b) == r.add(b, a)
        assert r.mul(r.one, a) == a == r.mul(a, r.one)
        assert r.add(a, r.neg(a)) == r.zero


# -- tables -------------------------------------------------------------------

def test_tables_agree_with_scalar_ops():
    for r in (make_zn(12), make_mat(2, 2), make_mat(2, 3)):
        t = r.tables()
        elems = t.elems
        n = len(elems)
        for i in range(n):
            assert t.neg[i] == t.index[r.neg(elems[i])]
            for j in range(n):
                assert t.add[i, j] == t.index[r.add(elems[i], elems[j])]
                assert t.mul[i, j] == t.index[r.mul(elems[i], elems[j])]
        assert t.zero == t.index[r.zero]
        assert t.one == t.index[r.one]


def test_tables_none_above_limit():
    r = make_zn(9)
    assert r.tables(Limits(max_table=8)) is None or r.size <= 8
    r2 = make_zn(9)
    assert r2.tables(Limits(max_table=8)) is None


# -- subrings -----------------------------------------------------------------

def upper_triangular_subring(mod):
    base = make_mat(2, mod)
    elems = [e for e in base.elements() if e[2] == 0]
    return base, SubRing(base, elems, name="upper triangular")


def test_subring_upper_triangular():
    base, t2 = upper_triangular_subring(2)
    assert t2.size == 8
    assert t2.one == base.one and t2.zero == base.zero
    for a in t2.elements():
        for b in t2.elements():
            assert t2.mul(a, b) in set(t2.elements())
    with pytest.raises(InputError):
        t2.element((0, 0, 1, 0))
    gens = t2.gens()
    assert gens  # generates the subring additively
    closure = {t2.zero}
    frontier = [t2.zero]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = t2.add(x, g)
            if y not in closure:
                closure.add(y)
                frontier.append(y)
    assert closure == set(t2.elements())


def test_subring_rejects_non_closed_subset():
    base = make_mat(2, 2)
    bad = [base.zero, base.one, (0, 1, 0, 0), (0, 0, 1, 0)]  # E12*E21 = E11 missing
    with pytest.raises((InputError, Exception)):
        SubRing(base, bad)


def test_subring_tables_match():
    base, t2 = upper_triangular_subring(3)
    t = t2.tables()
    for i, a in enumerate(t.elems):
        for j, b in enumerate(t.elems):
            assert t.elems[t.mul[i, j]] == t2.mul(a, b)
            assert t.elems[t.add[i, j]] == t2.add(a, b)


# -- quotients ----------------------------------------------------------------

def test_quotient_z6_by_3z6():
    r = make_zn(6)
    q = QuotientRing(r, [(0,), (3,)])
    assert q.size == 3
    assert q.elements() == ((0,), (1,), (2,))
    assert q.mul((2,), (2,)) == (1,)  # 4 = 3 + 1
    assert q.one == (1,)
    rep = units_and_regulars(q)
    assert set(rep.units) == {(1,), (2,)}


def test_quotient_rejects_non_ideal():
    base = make_mat(2, 2)
    with pytest.raises(DomainError):
        QuotientRing(base, [base.zero, (1, 0, 0, 0)])  # E11 spans no ideal


def test_quotient_rejects_non_subgroup():
    base = make_mat(2, 2)
    with pytest.raises(DomainError):
        QuotientRing(base, [base.zero, (1, 0, 0, 0), (0, 1, 0, 0)])


def test_quotient_reps_are_least_and_tables_match():
    r = make_zn(12)
    q = QuotientRing(r, [(0,), (4,), (8,)])
    assert q.elements() == ((0,), (1,), (2,), (3,))
    t = q.tables()
    for i, a in enumerate(t.elems):
        for j, b in enumerate(t.elems):
            assert t.elems[t.mul[i, j]] == q.mul(a, b)


# -- center -------------------------------------------------------------------

def test_center_of_matrix_ring_is_scalars():
    r = make_mat(2, 2)
    z = center(r)
    assert set(z.elements()) == {(0, 0, 0, 0), (1, 0, 0, 1)}
    r3 = make_mat(2, 3)
    z3 = center(r3)
    assert set(z3.elements()) == {(0, 0, 0, 0), (1, 0, 0, 1), (2, 0, 0, 2)}


def test_center_of_commutative_ring_is_everything():
    r = make_zn(8)
    assert len(center(r).elements()) == 8


def test_center_of_upper_triangular():
    _, t2 = upper_triangular_subring(2)
    z = center(t2)
    assert set(z.elements()) == {(0, 0, 0, 0), (1, 0, 0, 1)}


def test_center_is_closed_subring():
    r = make_mat(2, 3)
    z = center(r)
    zs = set(z.elements())
    for a in zs:
        for b in zs:
            assert z.add(a, b) in zs
            assert z.mul(a, b) in zs


# -- units and regulars --------------------------------------------------------

def test_units_of_zn():
    r = make_zn(12)
    rep = units_and_regulars(r)
    assert set(rep.units) == {(k,) for k in (1, 5, 7, 11)}
    assert rep.regulars_equal_units
    for u, v in rep.inverses.items():
        assert r.mul(u, v) == r.one and r.mul(v, u) == r.one


def test_units_of_m2_z2_is_gl2():
    r = make_mat(2, 2)
    rep = units_and_regulars(r)
    assert len(rep.units) == 6  # |GL(2, F2)|
    assert rep.regulars_equal_units
    dets = {int(round(np.linalg.det(as_matrix(u, 2)))) % 2 for u in rep.units}
    assert dets == {1}


def test_units_rank_path_matches_table_path():
    # same ring through both code paths: dense tables vs modular solves
    r1 = make_mat(2, 3)
    rep_table = units_and_regulars(r1)
    r2 = make_mat(2, 3)
    from ringbench.core import _units_by_rank
    units, inverses, regulars = _units_by_rank(r2, Limits())
    assert set(units) == set(rep_table.units)
    assert set(regulars) == set(rep_table.regulars)
    for u, v in inverses.items():
        assert r2.mul(u, v) == r2.one and r2.mul(v, u) == r2.one


def test_units_of_product_ring():
    c = np.zeros((2, 2, 2), dtype=int)
    c[0, 0, 0] = 1
    c[1, 1, 1] = 1
    r = make_ring([2, 3], c, (1, 1))  # Z2 x Z3
    rep = units_and_regulars(r)
    assert set(rep.units) == {(1, 1), (1, 2)}
