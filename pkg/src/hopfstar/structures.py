"""Structure-constant records for algebras, coalgebras, bialgebras and
Hopf algebras, together with exact checkers for their defining axioms.

All data lives on one named space V and is expressed through four (or
five) linear maps:

    mult     : V (x) V -> V          unit    : k -> V
    comult   : V -> V (x) V          counit  : V -> k
    antipode : V -> V

Sweedler notation is used informally in the docstrings: comult(c) =
sum c1 (x) c2.  Checkers verify the axioms as exact equalities of
composite maps and report the first failing basis entry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SignatureMismatch, StructuralInconsistency
from .fields import FieldSpec
from .linmap import LinMap, SpaceSig, compose, compose_chain, flip, tensor
from .linsolve import solve_exact
from .report import CheckItem, CheckReport, compare_maps


def _expect_sig(linmap: LinMap, dom: SpaceSig, cod: SpaceSig, what: str):
    if linmap.dom != dom or linmap.cod != cod:
        raise SignatureMismatch(
            f"{what}: expected {dom} -> {cod}, got {linmap.dom} -> {linmap.cod}"
        )


@dataclass(frozen=True)
class AlgebraData:
    """An associative unital algebra given by structure constants."""

    field: FieldSpec
    space: str
    basis_names: tuple[str, ...]
    mult: LinMap   # V (x) V -> V
    unit: LinMap   # k -> V

    def __post_init__(self):
        v = self.sig
        _expect_sig(self.mult, v + v, v, f"mult on {self.space}")
        _expect_sig(self.unit, SpaceSig.scalar(), v, f"unit on {self.space}")

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @property
    def sig(self) -> SpaceSig:
        return SpaceSig.of((self.space, len(self.basis_names)))


@dataclass(frozen=True)
class CoalgebraData:
    """A coassociative counital coalgebra given by structure constants."""

    field: FieldSpec
    space: str
    basis_names: tuple[str, ...]
    comult: LinMap  # V -> V (x) V
    counit: LinMap  # V -> k

    def __post_init__(self):
        v = self.sig
        _expect_sig(self.comult, v, v + v, f"comult on {self.space}")
        _expect_sig(self.counit, v, SpaceSig.scalar(), f"counit on {self.space}")

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @property
    def sig(self) -> SpaceSig:
        return SpaceSig.of((self.space, len(self.basis_names)))


@dataclass(frozen=True)
class BialgebraData:
    """An algebra and a coalgebra on the same space."""

    algebra: AlgebraData
    coalgebra: CoalgebraData

    def __post_init__(self):
        a, c = self.algebra, self.coalgebra
        if (a.field, a.space, a.basis_names) != (c.field, c.space, c.basis_names):
            raise SignatureMismatch("algebra and coalgebra live on different spaces")

    field = property(lambda self: self.algebra.field)
    space = property(lambda self: self.algebra.space)
    basis_names = property(lambda self: self.algebra.basis_names)
    dim = property(lambda self: self.algebra.dim)
    sig = property(lambda self: self.algebra.sig)
    mult = property(lambda self: self.algebra.mult)
    unit = property(lambda self: self.algebra.unit)
    comult = property(lambda self: self.coalgebra.comult)
    counit = property(lambda self: self.coalgebra.counit)


@dataclass(frozen=True)
class HopfData:
    """A bialgebra with an antipode."""

    bialgebra: BialgebraData
    antipode: LinMap  # V -> V

    def __post_init__(self):
        v = self.bialgebra.sig
        _expect_sig(self.antipode, v, v, f"antipode on {self.bialgebra.space}")

    field = property(lambda self: self.bialgebra.field)
    space = property(lambda self: self.bialgebra.space)
    basis_names = property(lambda self: self.bialgebra.basis_names)
    dim = property(lambda self: self.bialgebra.dim)
    sig = property(lambda self: self.bialgebra.sig)
    mult = property(lambda self: self.bialgebra.mult)
    unit = property(lambda self: self.bialgebra.unit)
    comult = property(lambda self: self.bialgebra.comult)
    counit = property(lambda self: self.bialgebra.counit)
    algebra = property(lambda self: self.bialgebra.algebra)
    coalgebra = property(lambda self: self.bialgebra.coalgebra)


def _names(data) -> dict:
    return {data.space: list(data.basis_names)}


def check_algebra(a: AlgebraData) -> CheckReport:
    """Associativity and the two unit laws, checked exactly."""
    v = a.sig
    idv = LinMap.identity(a.field, v)
    tag = f"@{a.space}"
    rep = CheckReport()
    rep.add(compare_maps(
        "ALG_ASSOC" + tag,
        compose(a.mult, tensor(a.mult, idv)),
        compose(a.mult, tensor(idv, a.mult)),
        _names(a)))
    rep.add(compare_maps(
        "ALG_UNIT_LEFT" + tag, compose(a.mult, tensor(a.unit, idv)), idv, _names(a)))
    rep.add(compare_maps(
        "ALG_UNIT_RIGHT" + tag, compose(a.mult, tensor(idv, a.unit)), idv, _names(a)))
    return rep.sorted()


def check_coalgebra(c: CoalgebraData) -> CheckReport:
    """Coassociativity and the two counit laws (duals of the above)."""
    v = c.sig
    idv = LinMap.identity(c.field, v)
    tag = f"@{c.space}"
    rep = CheckReport()
    rep.add(compare_maps(
        "COALG_COASSOC" + tag,
        compose(tensor(c.comult, idv), c.comult),
        compose(tensor(idv, c.comult), c.comult),
        _names(c)))
    rep.add(compare_maps(
        "COALG_COUNIT_LEFT" + tag, compose(tensor(c.counit, idv), c.comult), idv, _names(c)))
    rep.add(compare_maps(
        "COALG_COUNIT_RIGHT" + tag, compose(tensor(idv, c.counit), c.comult), idv, _names(c)))
    return rep.sorted()


def check_bialgebra(hb: BialgebraData) -> CheckReport:
    """Compatibility of the two structures: comult and counit are algebra
    maps.  Assumes the algebra and coalgebra checks were run separately.
    """
    v = hb.sig
    idv = LinMap.identity(hb.field, v)
    tau = flip(hb.field, v, v)
    tag = f"@{hb.space}"
    names = _names(hb)
    rep = CheckReport()
    rep.add(compare_maps(
        "BIALG_MULT_COMULT" + tag,
        compose(hb.comult, hb.mult),
        compose_chain(tensor(hb.mult, hb.mult), tensor(idv, tau, idv),
                      tensor(hb.comult, hb.comult)),
        names))
    rep.add(compare_maps(
        "BIALG_COUNIT_MULT" + tag,
        compose(hb.counit, hb.mult), tensor(hb.counit, hb.counit), names))
    rep.add(compare_maps(
        "BIALG_UNIT_COMULT" + tag,
        compose(hb.comult, hb.unit), tensor(hb.unit, hb.unit), names))
    rep.add(compare_maps(
        "BIALG_COUNIT_UNIT" + tag,
        compose(hb.counit, hb.unit),
        LinMap.identity(hb.field, SpaceSig.scalar()), names))
    return rep.sorted()


def check_hopf(hh: HopfData) -> CheckReport:
    """Both convolution identities for the antipode:
    mult(S (x) id)comult = unit . counit = mult(id (x) S)comult."""
    hb = hh.bialgebra
    v = hb.sig
    idv = LinMap.identity(hb.field, v)
    eta_eps = compose(hb.unit, hb.counit)
    tag = f"@{hb.space}"
    names = _names(hb)
    rep = CheckReport()
    rep.add(compare_maps(
        "HOPF_LEFT" + tag,
        compose_chain(hb.mult, tensor(hh.antipode, idv), hb.comult),
        eta_eps, names))
    rep.add(compare_maps(
        "HOPF_RIGHT" + tag,
        compose_chain(hb.mult, tensor(idv, hh.antipode), hb.comult),
        eta_eps, names))
    return rep.sorted()


def check_hopf_cascade(hh: HopfData) -> CheckReport:
    """Full cascade on one Hopf structure: algebra, coalgebra,
    compatibility, antipode."""
    rep = CheckReport()
    rep.extend(check_algebra(hh.algebra))
    rep.extend(check_coalgebra(hh.coalgebra))
    rep.extend(check_bialgebra(hh.bialgebra))
    rep.extend(check_hopf(hh))
    return rep.sorted()


def solve_antipode(hb: BialgebraData):
    """Solve the left convolution identity for the antipode matrix.

    The identity mult(S (x) id)comult = unit.counit is linear in the n^2
    unknown entries of S; it is solved by exact elimination.  Returns
    None when the system is inconsistent (no antipode exists).  A
    returned S is verified against the right identity first; if that
    fails the bialgebra has a one-sided convolution inverse only, which
    for a consistent bialgebra cannot happen.
    """
    n = hb.dim
    field = hb.field

    def m_entry(v, u, b):
        return hb.mult.entry(v, u * n + b).value

    def d_entry(a, b, c):
        return hb.comult.entry(a * n + b, c).value

    # unknown s[u, a] at flat column u*n + a; equation rows (v, c).
    rows = []
    rhs = []
    for v in range(n):
        for c in range(n):
            row = [0] * (n * n)
            for u in range(n):
                for a in range(n):
                    acc = 0
                    for b in range(n):
                        acc = acc + d_entry(a, b, c) * m_entry(v, u, b)
                    row[u * n + a] = acc
            rows.append(row)
            rhs.append(hb.unit.entry(v, 0).value * hb.counit.entry(0, c).value)
    x = solve_exact(field, rows, rhs)
    if x is None:
        return None
    s = LinMap.from_dict(field, hb.sig, hb.sig,
                         {(u, a): x[u * n + a] for u in range(n) for a in range(n)})
    candidate = HopfData(hb, s)
    right = check_hopf(candidate)
    if not right.ok:
        raise StructuralInconsistency(
            "left convolution inverse exists but fails the right identity")
    return s
