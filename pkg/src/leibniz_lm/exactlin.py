"""Exact dense linear algebra over the rationals and prime fields.

Every matrix in the package is a numpy ``object`` array whose entries are
:class:`fractions.Fraction` (over ``QQ``) or :class:`Mod` (over ``GF(p)``).
Nothing here ever produces a float.

Conventions used throughout the package:

* a linear map ``V -> W`` is a ``(dim W, dim V)`` matrix acting on column
  vectors;
* subspaces are stored by the reduced row-echelon form of a spanning set,
  which makes equality of subspaces a comparison of arrays.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Integral

import numpy as np

__all__ = [
    "Field",
    "Rationals",
    "PrimeField",
    "Mod",
    "QQ",
    "GF",
    "field_from_name",
    "Subspace",
    "echelonize",
    "rank",
    "nullspace",
    "solve",
    "inverse",
    "quotient_basis",
    "is_zero",
    "arrays_equal",
    "einsum",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Mod:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, Integral):
            return int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "Mod":
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Mod(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * Mod(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(o, self.p) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Mod(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


_RATIONAL_RE = re.compile(r"^\s*([+-]?[0-9]+)\s*(?:/\s*([0-9]+)\s*)?$")


class Field:
    """Base class of the two supported scalar fields."""

    name: str
    characteristic: int

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, text: str):
        """Parse the string serialization of a scalar.

        Raises ``ValueError`` on malformed input or a zero denominator.
        """
        if not isinstance(text, str):
            raise ValueError(f"scalar must be a string, got {type(text).__name__}")
        m = _RATIONAL_RE.match(text)
        if m is None:
            raise ValueError(f"invalid scalar {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ValueError(f"invalid scalar {text!r}: zero denominator")
        return self(Fraction(num, den))

    def format(self, x) -> str:
        raise NotImplementedError

    def array(self, data, shape=None) -> np.ndarray:
        """Coerce nested data into an object array over this field."""
        src = np.asarray(data, dtype=object)
        if shape is not None:
            src = src.reshape(shape)
        out = np.empty(src.shape, dtype=object)
        for idx in np.ndindex(src.shape):
            out[idx] = self(src[idx])
        return out

    def zeros(self, shape) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(self.zero)
        return out

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def unit_vector(self, n: int, i: int) -> np.ndarray:
        v = self.zeros(n)
        v[i] = self.one
        return v

    def __repr__(self):
        return self.name


class Rationals(Field):
    name = "QQ"
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, Mod):
            raise TypeError("cannot lift a residue class to QQ")
        if isinstance(x, bool):
            return Fraction(int(x))
        if isinstance(x, Integral):
            return Fraction(int(x))
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float):
            raise TypeError("floating point scalars are not accepted")
        return Fraction(x)

    def format(self, x) -> str:
        return str(self(x))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(int(p)):
            raise ValueError(f"{p} is not prime")
        self.p = int(p)
        self.characteristic = self.p
        self.name = f"GF({self.p})"

    def __call__(self, x):
        if isinstance(x, Mod):
            if x.p != self.p:
                raise ValueError(f"element of GF({x.p}) given to {self.name}")
            return x
        if isinstance(x, bool):
            return Mod(int(x), self.p)
        if isinstance(x, Integral):
            return Mod(int(x), self.p)
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in {self.name}")
            return Mod(x.numerator, self.p) / Mod(x.denominator, self.p)
        if isinstance(x, float):
            raise TypeError("floating point scalars are not accepted")
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def format(self, x) -> str:
        return str(self(x).v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


_GF_RE = re.compile(r"^GF\((\d+)\)$")


def field_from_name(name: str) -> Field:
    """Inverse of ``field.name``: ``"QQ"`` or ``"GF(p)"``."""
    if name == "QQ":
        return QQ
    m = _GF_RE.match(name or "")
    if m is None:
        raise ValueError(f"unknown field {name!r}")
    return GF(int(m.group(1)))


def is_zero(arr) -> bool:
    return all(x == 0 for x in np.asarray(arr, dtype=object).flat)


def arrays_equal(a, b) -> bool:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def _rref(m: np.ndarray, field: Field):
    R = field.array(m)
    if R.ndim != 2:
        raise ValueError("echelonize expects a 2-d matrix")
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if R[i, c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = R[r] * (field.one / R[r, c])
        for i in range(rows):
            if i != r and R[i, c] != 0:
                R[i] = R[i] - R[i, c] * R[r]
        pivots.append(c)
        r += 1
    return R, pivots


def echelonize(m, field: Field):
    """Reduced row-echelon form of ``m`` and its rank."""
    R, pivots = _rref(m, field)
    return R, len(pivots)


def rank(m, field: Field) -> int:
    return echelonize(m, field)[1]


class Subspace:
    """A subspace of ``field**ambient_dim`` held in reduced echelon form."""

    def __init__(self, field: Field, ambient_dim: int, basis=None):
        self.field = field
        self.ambient_dim = int(ambient_dim)
        if basis is None or len(basis) == 0:
            B = field.zeros((0, self.ambient_dim))
        else:
            B = field.array(basis)
            if B.ndim != 2 or B.shape[1] != self.ambient_dim:
                raise ValueError("basis vectors do not match the ambient dimension")
            B, r = echelonize(B, field)
            B = B[:r]
        B.flags.writeable = False
        self.basis = B
        self._pivots = [next(c for c in range(self.ambient_dim) if row[c] != 0) for row in B]

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors) -> "Subspace":
        vectors = list(vectors)
        if not vectors:
            return cls(field, ambient_dim)
        return cls(field, ambient_dim, np.array(vectors, dtype=object).reshape(len(vectors), ambient_dim))

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, field.eye(n))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def pivots(self) -> list[int]:
        return list(self._pivots)

    def contains(self, v) -> bool:
        v = self.field.array(v).reshape(self.ambient_dim)
        for row, c in zip(self.basis, self.pivots):
            if v[c] != 0:
                v = v - v[c] * row
        return is_zero(v)

    def coordinates(self, v):
        """Coefficients of ``v`` in :attr:`basis`; ``ValueError`` if ``v`` is not in the span."""
        v = self.field.array(v).reshape(self.ambient_dim)
        if not self.dim:
            if not is_zero(v):
                raise ValueError("vector is not in the subspace")
            return self.field.zeros(0)
        coords = v[self._pivots]
        if not is_zero(coords @ self.basis - v):
            raise ValueError("vector is not in the subspace")
        return coords

    def extended(self, vectors) -> "Subspace":
        vectors = [self.field.array(v).reshape(self.ambient_dim) for v in vectors]
        if not vectors:
            return self
        return Subspace(self.field, self.ambient_dim, np.vstack([self.basis] + [np.array([v], dtype=object) for v in vectors]))

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and other.field == self.field
            and other.ambient_dim == self.ambient_dim
            and arrays_equal(other.basis, self.basis)
        )

    def __repr__(self):
        rows = [[self.field.format(x) for x in row] for row in self.basis]
        return f"Subspace({self.field.name}, {self.ambient_dim}, {rows})"


def nullspace(m, field: Field) -> Subspace:
    """Kernel of ``m`` acting on column vectors."""
    m = field.array(m)
    cols = m.shape[1]
    R, pivots = _rref(m, field)
    free = [c for c in range(cols) if c not in pivots]
    vecs = []
    for fc in free:
        v = field.zeros(cols)
        v[fc] = field.one
        for row, pc in enumerate(pivots):
            v[pc] = -R[row, fc]
        vecs.append(v)
    return Subspace.span(field, cols, vecs)


def solve(m, b, field: Field):
    """One solution ``x`` of ``m @ x == b``, or ``None`` if the system is inconsistent."""
    m = field.array(m)
    rows, cols = m.shape
    b = field.array(b).reshape(rows)
    aug = np.hstack([m, b.reshape(rows, 1)])
    R, pivots = _rref(aug, field)
    if cols in pivots:
        return None
    x = field.zeros(cols)
    for row, pc in enumerate(pivots):
        x[pc] = R[row, cols]
    return x


def inverse(m, field: Field) -> np.ndarray:
    m = field.array(m)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    R, pivots = _rref(np.hstack([m, field.eye(n)]), field)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return R[:, n:]


def quotient_basis(ambient_dim: int, sub: Subspace):
    """Projection onto, and a section of, the quotient ``ambient / sub``.

    The quotient is coordinatized by the non-pivot columns of ``sub``'s
    echelon basis, so the result is deterministic. Returns
    ``(projection, section)`` with ``projection @ section == I`` and
    ``projection @ v == 0`` for every ``v`` in ``sub``.
    """
    if sub.ambient_dim != ambient_dim:
        raise ValueError("subspace lives in a different ambient space")
    field = sub.field
    pivots = sub.pivots
    free = [c for c in range(ambient_dim) if c not in pivots]
    q = len(free)
    proj = field.zeros((q, ambient_dim))
    sect = field.zeros((ambient_dim, q))
    for a, c in enumerate(free):
        sect[c, a] = field.one
        proj[a, c] = field.one
        for row, pc in zip(sub.basis, pivots):
            proj[a, pc] = proj[a, pc] - row[c]
    return proj, sect


_INT64_SAFE = 2**62


def _operand_ints(arr, p):
    """Integer image of an exact array: residues for ``p``, else ``(numerators, denominator)``."""
    if p is not None:
        conv = np.frompyfunc(lambda x: x.v if isinstance(x, Mod) else int(x) % p, 1, 1)
        return conv(arr), 1
    den = 1
    for x in arr.flat:
        d = getattr(x, "denominator", 1)
        if d != 1:
            den = den * d // math.gcd(den, d)
    scale = np.frompyfunc(lambda x: int(x * den), 1, 1)
    return scale(arr), den


def einsum(spec: str, *operands):
    """``numpy.einsum`` for exact object arrays, computed on integers.

    Denominators are cleared (or residues taken) first; the contraction runs
    in ``int64`` when a coefficient bound proves it cannot overflow and on
    Python integers otherwise. The result has the scalar type of the inputs.
    """
    arrs = [np.asarray(o, dtype=object) for o in operands]
    if "->" not in spec or any(a.size == 0 for a in arrs):
        return np.einsum(spec, *arrs)
    p = None
    for a in arrs:
        for x in a.flat:
            if isinstance(x, Mod):
                p = x.p
                break
        if p is not None:
            break
    ints, den = [], 1
    for a in arrs:
        iv, d = _operand_ints(a, p)
        ints.append(iv)
        den *= d
    inputs, output = spec.split("->")
    sizes = {}
    for letters, a in zip(inputs.split(","), arrs):
        sizes.update(zip(letters, a.shape))
    terms = 1
    for letter in set(inputs.replace(",", "")) - set(output):
        terms *= sizes[letter]
    bound = terms
    for iv in ints:
        bound *= max(abs(int(v)) for v in iv.flat) if iv.size else 0
    if bound < _INT64_SAFE:
        res = np.einsum(spec, *[iv.astype(np.int64) for iv in ints])
    else:
        res = np.einsum(spec, *ints)
    res = np.asarray(res, dtype=object)
    if p is not None:
        back = np.frompyfunc(lambda v: Mod(int(v), p), 1, 1)
    else:
        back = np.frompyfunc(lambda v: Fraction(int(v), den), 1, 1)
    out = np.asarray(back(res), dtype=object)
    return out[()] if out.ndim == 0 else out
