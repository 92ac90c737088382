"""Small helpers for structure tensors and their basis changes.

A structure tensor ``t`` of shape ``(d1, d2, d3)`` encodes the bilinear map
``(e_i, f_j) -> sum_k t[i, j, k] g_k``. A hom-valued tensor ``h`` of shape
``(d, r, c)`` encodes a linear map into matrices: ``e_i -> h[i]``.

Basis changes are given by invertible matrices whose columns are the new
basis vectors written in the old basis.
"""

from __future__ import annotations

import numpy as np

from .exactlin import Field, inverse
from .exactlin import einsum as xeinsum


def bilinear(t, x, y):
    """Evaluate ``t(x, y)``."""
    return xeinsum("i,j,ijk->k", x, y, t)


def left_matrices(t):
    """``out[i]`` is the matrix of ``y -> t(e_i, y)``."""
    return np.transpose(t, (0, 2, 1))


def right_matrices(t):
    """``out[j]`` is the matrix of ``x -> t(x, e_j)``."""
    return np.transpose(t, (1, 2, 0))


def from_left_matrices(mats):
    """Inverse of :func:`left_matrices`."""
    return np.transpose(np.asarray(mats, dtype=object), (0, 2, 1))


def contract_hom(h, x):
    """The matrix ``sum_i x[i] h[i]``."""
    return xeinsum("i,irc->rc", x, h)


def commutator(a, b):
    return a @ b - b @ a


def rebase_bilinear(t, p1, p2, p3_inv):
    """Structure tensor of the same bilinear map in new bases."""
    s = xeinsum("ia,ijl->ajl", p1, t)
    s = xeinsum("jb,ajl->abl", p2, s)
    return xeinsum("kl,abl->abk", p3_inv, s)


def rebase_map(m, p_dom, p_cod_inv):
    return p_cod_inv @ m @ p_dom


def rebase_hom(h, p_dom, p_in, p_out_inv):
    """Hom-valued tensor ``e -> h(e)`` after basis changes of all three spaces."""
    s = xeinsum("ia,irc->arc", p_dom, h)
    return xeinsum("sr,arc,ct->ast", p_out_inv, s, p_in)


def random_invertible(field: Field, n: int, rng, lo: int = -2, hi: int = 2):
    """Random invertible matrix with integer entries in ``[lo, hi]``."""
    from .exactlin import rank

    while True:
        m = field.array(rng.integers(lo, hi + 1, size=(n, n)).tolist(), shape=(n, n))
        if rank(m, field) == n:
            return m


def inv(field: Field, p):
    return inverse(p, field)
