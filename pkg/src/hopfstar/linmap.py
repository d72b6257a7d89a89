"""Tensor-space signatures and exact dense linear maps.

A ``LinMap`` is a matrix over Q or F_p between tensor products of named
finite-dimensional spaces.  The flat index convention is row-major over
the factor order: the basis vector of V (x) W at flat index i*dim(W)+j
is v_i (x) w_j.  The same convention is used everywhere (Kronecker
products, structure constants, file formats), so no transpositions ever
creep in.

Internally a map over Q is stored as an integer matrix together with a
single positive denominator, reduced so the gcd of all entries and the
denominator is one.  Matrix products and Kronecker products then run in
integer arithmetic: in C-speed int64 whenever a proven bound rules out
overflow, otherwise in arbitrary-precision Python integers.  Either way
the result is exact.  Maps over F_p hold residues in [0, p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import numpy as np

from .errors import FieldMismatch, InvalidParameter, SignatureMismatch
from .fields import FieldSpec, Scalar

# int64 fast path is used only when |result entries| provably stay below
# this bound, leaving headroom under 2**63.
_I64_SAFE = 2**62


@dataclass(frozen=True)
class SpaceSig:
    """An ordered tensor product of named spaces; () is the ground field."""

    factors: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        for name, d in self.factors:
            if not isinstance(name, str) or not name:
                raise InvalidParameter(f"bad factor name {name!r}")
            if not isinstance(d, int) or d < 1:
                raise InvalidParameter(f"bad factor dimension {d!r}")

    @staticmethod
    def of(*factors) -> "SpaceSig":
        return SpaceSig(tuple((str(n), int(d)) for n, d in factors))

    @staticmethod
    def scalar() -> "SpaceSig":
        return SpaceSig(())

    @property
    def dim(self) -> int:
        return math.prod(d for _, d in self.factors)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.factors)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.factors)

    def __add__(self, other: "SpaceSig") -> "SpaceSig":
        return SpaceSig(self.factors + other.factors)

    def decode(self, flat: int) -> tuple[int, ...]:
        """Split a flat index into one index per factor (row-major)."""
        out = []
        for d in reversed(self.dims):
            out.append(flat % d)
            flat //= d
        return tuple(reversed(out))

    def __str__(self):
        if not self.factors:
            return "k"
        return "(x)".join(f"{n}" for n, _ in self.factors)


def _gcd_all(num: np.ndarray) -> int:
    if num.dtype == object:
        return reduce(math.gcd, (abs(int(v)) for v in num.flat), 0)
    return int(np.gcd.reduce(np.abs(num).ravel(), initial=0))


def _max_abs(num: np.ndarray) -> int:
    if num.size == 0:
        return 0
    if num.dtype == object:
        return max(abs(int(v)) for v in num.flat)
    return int(np.abs(num).max())


def _as_object(num: np.ndarray) -> np.ndarray:
    if num.dtype == object:
        return num
    out = np.empty(num.shape, dtype=object)
    out[...] = [[int(v) for v in row] for row in num] if num.ndim == 2 else num.tolist()
    return out


def _demote(num: np.ndarray) -> np.ndarray:
    """Drop an object array back to int64 when every entry fits."""
    if num.dtype != object:
        return num
    if _max_abs(num) < _I64_SAFE:
        return num.astype(np.int64)
    return num


def _imatmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact integer matrix product with an overflow-proved int64 path."""
    if a.dtype != object and b.dtype != object:
        bound = a.shape[1] * _max_abs(a) * _max_abs(b)
        if bound < _I64_SAFE:
            return a @ b
    return np.dot(_as_object(a), _as_object(b))


def _ikron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.dtype != object and b.dtype != object:
        if _max_abs(a) * _max_abs(b) < _I64_SAFE:
            return np.kron(a, b)
    return np.kron(_as_object(a), _as_object(b))


class LinMap:
    """An exact linear map dom -> cod, stored as a dense matrix.

    ``num`` has shape (cod.dim, dom.dim); the true entries are
    num[r, c] / den over Q, or the residues num[r, c] over F_p.
    """

    __slots__ = ("field", "dom", "cod", "num", "den")

    def __init__(self, field: FieldSpec, dom: SpaceSig, cod: SpaceSig, num, den=1):
        num = np.asarray(num)
        if num.shape != (cod.dim, dom.dim):
            raise SignatureMismatch(
                f"matrix shape {num.shape} does not match cod {cod.dim} x dom {dom.dim}"
            )
        num, den = _canonicalize(field, num, den)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("LinMap is immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_rows(field, dom, cod, rows) -> "LinMap":
        """Build from a dense nested list; entries are ints, Fractions,
        or strings such as "-3" and "5/6"."""
        entries = [[field.coerce(v) for v in row] for row in rows]
        return _from_exact(field, dom, cod, entries)

    @staticmethod
    def from_dict(field, dom, cod, entries: dict) -> "LinMap":
        """Build from sparse {(row, col): coefficient}; rest is zero."""
        rows = [[0] * dom.dim for _ in range(cod.dim)]
        for (r, c), v in entries.items():
            rows[r][c] = field.coerce(v)
        return _from_exact(field, dom, cod, rows)

    @staticmethod
    def identity(field, sig: SpaceSig) -> "LinMap":
        return LinMap(field, sig, sig, np.eye(sig.dim, dtype=np.int64))

    @staticmethod
    def zero(field, dom: SpaceSig, cod: SpaceSig) -> "LinMap":
        return LinMap(field, dom, cod, np.zeros((cod.dim, dom.dim), dtype=np.int64))

    @staticmethod
    def vector(field, sig: SpaceSig, coeffs) -> "LinMap":
        """An element of the space, encoded as a map k -> sig."""
        col = [[field.coerce(v)] for v in coeffs]
        return _from_exact(field, SpaceSig.scalar(), sig, col)

    # -- entry access ------------------------------------------------

    def entry(self, r: int, c: int) -> Scalar:
        v = self.num[r, c]
        if self.field.kind == "Q":
            return Scalar(self.field, Fraction(int(v), self.den))
        return Scalar(self.field, int(v))

    def entry_str(self, r: int, c: int) -> str:
        return str(self.entry(r, c).value)

    def entries(self):
        """Yield (row, col, exact value) over the nonzero entries."""
        rows, cols = np.nonzero(self.num != 0)
        for r, c in zip(rows.tolist(), cols.tolist()):
            yield r, c, self.entry(r, c).value

    def with_entry(self, r: int, c: int, value) -> "LinMap":
        """Copy of self with one entry replaced (used to build mutants)."""
        rows = [[self.entry(i, j).value for j in range(self.dom.dim)]
                for i in range(self.cod.dim)]
        rows[r][c] = self.field.coerce(value)
        return _from_exact(self.field, self.dom, self.cod, rows)

    def recast(self, dom: SpaceSig, cod: SpaceSig) -> "LinMap":
        """Same matrix, new factor structure of equal total dimensions."""
        if dom.dim != self.dom.dim or cod.dim != self.cod.dim:
            raise SignatureMismatch("recast must preserve total dimensions")
        return LinMap(self.field, dom, cod, self.num, self.den)

    @property
    def is_zero(self) -> bool:
        return not np.any(self.num != 0)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "LinMap") -> "LinMap":
        _check_add_compat(self, other)
        if self.field.kind == "Fp":
            return LinMap(self.field, self.dom, self.cod, _iadd(self.num, other.num))
        g = math.gcd(self.den, other.den)
        sa, sb = other.den // g, self.den // g
        den = self.den * sa
        num = _iadd(_iscale(self.num, sa), _iscale(other.num, sb))
        return LinMap(self.field, self.dom, self.cod, num, den)

    def __sub__(self, other: "LinMap") -> "LinMap":
        return self + (-other)

    def __neg__(self) -> "LinMap":
        return LinMap(self.field, self.dom, self.cod, -self.num, self.den)

    def scale(self, value) -> "LinMap":
        v = self.field.coerce(value)
        if self.field.kind == "Fp":
            return LinMap(self.field, self.dom, self.cod, _iscale(self.num, v))
        return LinMap(self.field, self.dom, self.cod,
                      _iscale(self.num, v.numerator), self.den * v.denominator)

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.field == other.field and self.dom == other.dom
                and self.cod == other.cod and self.den == other.den
                and np.array_equal(self.num, other.num))

    def __hash__(self):
        raise TypeError("LinMap is not hashable")

    def __repr__(self):
        return f"LinMap({self.field}, {self.dom} -> {self.cod}, {self.cod.dim}x{self.dom.dim})"


def _iadd(a, b):
    if a.dtype != object and b.dtype != object:
        if _max_abs(a) + _max_abs(b) < _I64_SAFE:
            return a + b
    return _as_object(a) + _as_object(b)


def _iscale(a, s: int):
    s = int(s)
    if a.dtype != object and abs(s) * _max_abs(a) < _I64_SAFE:
        return a * np.int64(s) if abs(s) < _I64_SAFE else _as_object(a) * s
    return _as_object(a) * s


def _canonicalize(field, num, den=1):
    den = int(den)
    if den == 0:
        raise InvalidParameter("zero denominator")
    if field.kind == "Fp":
        p = field.p
        if num.dtype == object:
            num = (num % p).astype(np.int64)
        else:
            num = num % p
        num = num.astype(np.int64)
        if den % p == 0:
            raise InvalidParameter(f"denominator {den} vanishes mod {p}")
        if den % p != 1:
            num = num * pow(den % p, -1, p) % p
        return num, 1
    if den < 0:
        num, den = -num, -den
    g = math.gcd(_gcd_all(num), den)
    if g > 1:
        num = num // g
        den //= g
    return _demote(num), den


def _from_exact(field, dom, cod, rows):
    """Assemble a LinMap from coerced exact values (Fractions or residues)."""
    if field.kind == "Fp":
        num = np.array([[int(v) for v in row] for row in rows], dtype=np.int64)
        num = num.reshape(cod.dim, dom.dim)
        return LinMap(field, dom, cod, num)
    den = 1
    for row in rows:
        for v in row:
            den = den * v.denominator // math.gcd(den, v.denominator)
    num = np.empty((cod.dim, dom.dim), dtype=object)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            num[i, j] = int(v.numerator) * (den // v.denominator)
    return LinMap(field, dom, cod, num, den)


def _check_add_compat(f: LinMap, g: LinMap):
    if f.field != g.field:
        raise FieldMismatch(f"cannot mix {f.field} and {g.field}")
    if f.dom.dim != g.dom.dim or f.cod.dim != g.cod.dim:
        raise SignatureMismatch(
            f"shape {g.cod.dim}x{g.dom.dim} incompatible with {f.cod.dim}x{f.dom.dim}"
        )


def compose(f: LinMap, g: LinMap) -> LinMap:
    """f after g.  Requires g.cod == f.dom factor-for-factor."""
    if f.field != g.field:
        raise FieldMismatch(f"cannot compose over {f.field} and {g.field}")
    if g.cod != f.dom:
        raise SignatureMismatch(f"cannot compose: middle {g.cod} != {f.dom}")
    num = _imatmul(f.num, g.num)
    return LinMap(f.field, g.dom, f.cod, num, f.den * g.den)


def compose_chain(*maps: LinMap) -> LinMap:
    """Compose right-to-left: compose_chain(f, g, h) = f after g after h."""
    return reduce(compose, maps)


def tensor(*maps: LinMap) -> LinMap:
    """Kronecker product; signatures concatenate."""
    if not maps:
        raise InvalidParameter("tensor of no maps")
    out = maps[0]
    for g in maps[1:]:
        if out.field != g.field:
            raise FieldMismatch(f"cannot tensor over {out.field} and {g.field}")
        num = _ikron(out.num, g.num)
        out = LinMap(out.field, out.dom + g.dom, out.cod + g.cod,
                     num, out.den * g.den)
    return out


def flip(field: FieldSpec, a: SpaceSig, b: SpaceSig) -> LinMap:
    """The swap v (x) w -> w (x) v as a permutation matrix A+B -> B+A."""
    da, db = a.dim, b.dim
    num = np.zeros((da * db, da * db), dtype=np.int64)
    for i in range(da):
        for j in range(db):
            num[j * da + i, i * db + j] = 1
    return LinMap(field, a + b, b + a, num)


def maps_equal(f: LinMap, g: LinMap) -> bool:
    """Entry-wise exact equality; factor names are ignored, only the
    field and total dimensions must agree."""
    if not isinstance(f, LinMap) or not isinstance(g, LinMap):
        raise InvalidParameter("maps_equal compares LinMaps")
    if f.field != g.field:
        return False
    if f.dom.dim != g.dom.dim or f.cod.dim != g.cod.dim:
        return False
    return f.den == g.den and np.array_equal(f.num, g.num)


def first_difference(f: LinMap, g: LinMap):
    """Row-major position of the first differing entry, or None."""
    if f.den == g.den:
        diff = np.argwhere(f.num != g.num)
    else:
        a = _iscale(f.num, g.den)
        b = _iscale(g.num, f.den)
        diff = np.argwhere(a != b)
    if diff.size == 0:
        return None
    r, c = min((int(r), int(c)) for r, c in diff)
    return r, c
