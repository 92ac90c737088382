import zlib
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from leibniz_lm.exactlin import (
    GF,
    QQ,
    Mod,
    Subspace,
    arrays_equal,
    echelonize,
    einsum,
    field_from_name,
    inverse,
    nullspace,
    quotient_basis,
    rank,
    solve,
)

GF5, GF7 = GF(5), GF(7)

small = st.integers(-3, 3)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    )


# -- documented examples -----------------------------------------------------------


def test_echelonize_examples():
    R, r = echelonize(QQ.eye(2), QQ)
    assert r == 2 and arrays_equal(R, QQ.eye(2))
    R, r = echelonize([[1, 2], [2, 4]], QQ)
    assert r == 1 and arrays_equal(R, QQ.array([[1, 2], [0, 0]]))
    R, r = echelonize(GF5.zeros((3, 3)), GF5)
    assert r == 0 and arrays_equal(R, GF5.zeros((3, 3)))


def test_nullspace_examples():
    assert nullspace(QQ.eye(2), QQ).dim == 0
    ns = nullspace([[1, 2], [2, 4]], QQ)
    assert ns == Subspace.span(QQ, 2, [QQ.array([-2, 1])])
    assert ns.contains([-2, 1])
    assert nullspace(QQ.zeros((1, 2)), QQ) == Subspace.full(QQ, 2)


def test_solve_examples():
    assert arrays_equal(solve(QQ.eye(2), [3, 4], QQ), QQ.array([3, 4]))
    assert solve([[1, 2], [2, 4]], [1, 3], QQ) is None
    x = solve([[1, 2], [2, 4]], [1, 2], QQ)
    assert x[0] + 2 * x[1] == 1


def test_quotient_basis_examples():
    proj, sect = quotient_basis(2, Subspace.span(QQ, 2, [QQ.array([1, 0])]))
    assert arrays_equal(proj, QQ.array([[0, 1]]))
    assert arrays_equal(sect, QQ.array([[0], [1]]))
    proj, sect = quotient_basis(3, Subspace(QQ, 3))
    assert arrays_equal(proj, QQ.eye(3)) and arrays_equal(sect, QQ.eye(3))
    proj, sect = quotient_basis(2, Subspace.full(QQ, 2))
    assert proj.shape == (0, 2) and sect.shape == (2, 0)


# -- scalars -------------------------------------------------------------------


def test_scalar_serialization():
    assert QQ.format(Fraction(6, -4)) == "-3/2"
    assert QQ.format(5) == "5"
    assert QQ.parse("-3/2") == Fraction(-3, 2)
    assert GF7.format(-1) == "6"
    assert GF7.parse("3/2") == GF7(5)  # 3 * 2^-1 = 3 * 4
    for bad in ("1/0", "", "1.5", "x", "1/-2", "\u0661"):
        with pytest.raises(ValueError):
            QQ.parse(bad)
    with pytest.raises(ZeroDivisionError):
        GF7("1/7")
    with pytest.raises(TypeError):
        QQ(0.5)


def test_field_names():
    assert field_from_name("QQ") is QQ
    assert field_from_name("GF(7)") is GF7
    for bad in ("GF(8)", "gf(7)", "R", ""):
        with pytest.raises(ValueError):
            field_from_name(bad)


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_mod_arithmetic_matches_integers(a, b):
    x, y = Mod(a, 7), Mod(b, 7)
    assert (x + y).v == (a + b) % 7
    assert (x - y).v == (a - b) % 7
    assert (x * y).v == (a * b) % 7
    if b % 7:
        assert ((x / y) * y) == x


def test_mod_rejects_mixed_primes():
    with pytest.raises(ValueError):
        Mod(1, 5) + Mod(1, 7)


@given(st.fractions(max_denominator=50))
def test_rational_format_round_trip(q):
    assert QQ.parse(QQ.format(q)) == q


# -- invariants -------------------------------------------------------------


@given(matrices())
def test_rank_matches_sympy_and_transpose(rows):
    m = QQ.array(rows)
    r = rank(m, QQ)
    assert r == sympy.Matrix(rows).rank()
    assert r == rank(m.T, QQ)


@given(matrices(), st.sampled_from([QQ, GF5, GF7]))
def test_echelonize_idempotent(rows, F):
    R, r = echelonize(F.array(rows), F)
    R2, r2 = echelonize(R, F)
    assert r == r2 and arrays_equal(R, R2)


@given(matrices(), st.sampled_from([QQ, GF7]))
def test_nullspace_is_kernel(rows, F):
    m = F.array(rows)
    ns = nullspace(m, F)
    assert ns.dim + rank(m, F) == m.shape[1]
    for v in ns.basis:
        assert all(x == 0 for x in m @ v)


@given(matrices(), st.sampled_from([QQ, GF7]))
def test_quotient_basis_invariants(rows, F):
    m = F.array(rows)
    sub = Subspace(F, m.shape[1], m)
    proj, sect = quotient_basis(sub.ambient_dim, sub)
    assert arrays_equal(proj @ sect, F.eye(sub.ambient_dim - sub.dim))
    for v in sub.basis:
        assert all(x == 0 for x in proj @ v)


@given(matrices(4, 4), st.lists(small, min_size=4, max_size=4))
def test_solve_is_consistent_with_substitution(rows, rhs):
    m = QQ.array(rows)
    b = QQ.array(rhs[: m.shape[0]])
    x = solve(m, b, QQ)
    aug_rank = rank(np.hstack([m, b.reshape(-1, 1)]), QQ)
    if x is None:
        assert aug_rank > rank(m, QQ)
    else:
        assert arrays_equal(m @ x, b)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_inverse(rows):
    m = QQ.array(rows)
    if rank(m, QQ) < m.shape[0]:
        with pytest.raises(ZeroDivisionError):
            inverse(m, QQ)
    else:
        assert arrays_equal(inverse(m, QQ) @ m, QQ.eye(m.shape[0]))


def test_subspace_equality_is_syntactic():
    a = Subspace.span(QQ, 3, [QQ.array([1, 1, 0]), QQ.array([0, 1, 1])])
    b = Subspace.span(QQ, 3, [QQ.array([1, 2, 1]), QQ.array([1, 0, -1])])
    assert a == b
    assert a.coordinates([1, 2, 1]) is not None
    with pytest.raises(ValueError):
        a.coordinates([1, 0, 0])


# -- exact contractions ----------------------------------------------------------

SPECS = ["ij,jk->ik", "ijk,kl->ijl", "i,ijk->jk", "xyk,kzl->xyzl", "ij,ij->", "ab,bc,cd->ad", "ijk->kji"]


def _operands(spec, rng, F, den):
    ins = spec.split("->")[0].split(",")
    sizes = {c: int(rng.integers(0, 4)) for c in set("".join(ins))}
    ops = []
    for term in ins:
        shape = tuple(sizes[c] for c in term)
        nums = rng.integers(-5, 6, size=shape)
        dens = rng.integers(1, den + 1, size=shape)
        arr = np.empty(shape, dtype=object)
        for idx in np.ndindex(shape):
            arr[idx] = F(Fraction(int(nums[idx]), int(dens[idx]))) if F is QQ else F(int(nums[idx]))
        ops.append(arr)
    return ops


@pytest.mark.parametrize("spec", SPECS)
@pytest.mark.parametrize("F", [QQ, GF7], ids=["QQ", "GF7"])
def test_einsum_matches_numpy_object_einsum(spec, F):
    rng = np.random.default_rng(zlib.crc32(spec.encode()))
    for _ in range(30):
        ops = _operands(spec, rng, F, 6)
        got = einsum(spec, *ops)
        want = np.einsum(spec, *ops) if all(o.size for o in ops) or "->" not in spec else None
        if want is None:
            continue
        assert arrays_equal(got, want)
        if isinstance(got, np.ndarray):
            assert all(isinstance(x, (Fraction, Mod)) for x in got.flat)


def test_einsum_large_entries_fall_back_to_python_ints():
    big = Fraction(2**70 + 1, 3)
    a = QQ.array([[big, 1], [0, big]])
    got = einsum("ij,jk->ik", a, a)
    assert arrays_equal(got, a @ a)
