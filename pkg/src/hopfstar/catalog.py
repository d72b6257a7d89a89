"""Built-in example structures, defined in code so the constants are
reviewed next to the tests that consume them.

Positive entries pass their entire check cascade; the negative entries
are single deliberate defects, each tagged with the axiom family its
checker must report.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .biproduct import RMatrix
from .braided import ActionData, BraidedHopfData, CoactionData
from .errors import InvalidParameter
from .fields import FieldSpec
from .linmap import LinMap, SpaceSig
from .structures import AlgebraData, BialgebraData, CoalgebraData, HopfData


def _alg(field, space, basis, mult_sc, unit_sc):
    """mult_sc: {(i, j): {k: coeff}} meaning e_i e_j = sum coeff e_k."""
    n = len(basis)
    v = SpaceSig.of((space, n))
    mult = LinMap.from_dict(field, v + v, v, {
        (k, i * n + j): c
        for (i, j), out in mult_sc.items() for k, c in out.items()})
    unit = LinMap.from_dict(field, SpaceSig.scalar(), v,
                            {(k, 0): c for k, c in unit_sc.items()})
    return AlgebraData(field, space, tuple(basis), mult, unit)


def _coalg(field, space, basis, comult_sc, counit_sc):
    """comult_sc: {i: {(j, k): coeff}} meaning comult(e_i) = sum coeff e_j (x) e_k."""
    n = len(basis)
    v = SpaceSig.of((space, n))
    comult = LinMap.from_dict(field, v, v + v, {
        (j * n + k, i): c
        for i, out in comult_sc.items() for (j, k), c in out.items()})
    counit = LinMap.from_dict(field, v, SpaceSig.scalar(),
                              {(0, i): c for i, c in counit_sc.items()})
    return CoalgebraData(field, space, tuple(basis), comult, counit)


def _endo(field, space, n, sc):
    """sc: {i: {k: coeff}} meaning e_i -> sum coeff e_k."""
    v = SpaceSig.of((space, n))
    return LinMap.from_dict(field, v, v,
                            {(k, i): c for i, out in sc.items() for k, c in out.items()})


def group_algebra(n: int, field: FieldSpec, space: str = "H") -> HopfData:
    """The group algebra of the cyclic group of order n, with the
    grouplike comultiplication and inverse antipode."""
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"group order must be a positive integer, got {n!r}")
    basis = ["1"] + [f"g{i}" if i > 1 else "g" for i in range(1, n)]
    alg = _alg(field, space, basis,
               {(i, j): {(i + j) % n: 1} for i in range(n) for j in range(n)},
               {0: 1})
    coalg = _coalg(field, space, basis,
                   {i: {(i, i): 1} for i in range(n)},
                   {i: 1 for i in range(n)})
    antipode = _endo(field, space, n, {i: {(-i) % n: 1} for i in range(n)})
    return HopfData(BialgebraData(alg, coalg), antipode)


def sweedler_h4(field: FieldSpec, space: str = "A") -> HopfData:
    """The 4-dimensional Hopf algebra with basis 1, g, x, xg:
    g^2 = 1, x^2 = 0, gx = -xg, comult(g) = g (x) g,
    comult(x) = x (x) 1 + g (x) x, S(g) = g, S(x) = -gx = xg."""
    if field.characteristic == 2:
        raise InvalidParameter("needs characteristic != 2")
    basis = ["1", "g", "x", "xg"]
    one, g, x, xg = range(4)
    mult = {
        (one, one): {one: 1}, (one, g): {g: 1}, (one, x): {x: 1}, (one, xg): {xg: 1},
        (g, one): {g: 1}, (g, g): {one: 1}, (g, x): {xg: -1}, (g, xg): {x: -1},
        (x, one): {x: 1}, (x, g): {xg: 1}, (x, x): {}, (x, xg): {},
        (xg, one): {xg: 1}, (xg, g): {x: 1}, (xg, x): {}, (xg, xg): {},
    }
    comult = {
        one: {(one, one): 1},
        g: {(g, g): 1},
        x: {(x, one): 1, (g, x): 1},
        xg: {(xg, g): 1, (one, xg): 1},
    }
    alg = _alg(field, space, basis, mult, {one: 1})
    coalg = _coalg(field, space, basis, comult, {one: 1, g: 1})
    antipode = _endo(field, space, 4,
                     {one: {one: 1}, g: {g: 1}, x: {xg: 1}, xg: {x: -1}})
    return HopfData(BialgebraData(alg, coalg), antipode)


def superline(field: FieldSpec) -> BraidedHopfData:
    """The canonical braided example: B = k[x]/(x^2) with primitive x
    over H = k[Z_2], where g acts by x -> -x and x co-acts to g (x) x.
    Satisfies the full biproduct hypothesis bundle (characteristic 2 is
    excluded: the action would be trivial and x central)."""
    if field.characteristic == 2:
        raise InvalidParameter("needs characteristic != 2")
    h = group_algebra(2, field, space="H")
    b_alg = _alg(field, "B", ["1", "x"],
                 {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {}},
                 {0: 1})
    b_coalg = _coalg(field, "B", ["1", "x"],
                     {0: {(0, 0): 1}, 1: {(1, 0): 1, (0, 1): 1}},
                     {0: 1})
    b = BialgebraData(b_alg, b_coalg)
    s_b = _endo(field, "B", 2, {0: {0: 1}, 1: {1: -1}})
    hsig, bsig = h.sig, b.sig
    action = LinMap.from_dict(field, hsig + bsig, bsig, {
        (0, 0 * 2 + 0): 1,   # 1.1 = 1
        (1, 0 * 2 + 1): 1,   # 1.x = x
        (0, 1 * 2 + 0): 1,   # g.1 = 1
        (1, 1 * 2 + 1): -1,  # g.x = -x
    })
    coaction = LinMap.from_dict(field, bsig, hsig + bsig, {
        (0 * 2 + 0, 0): 1,   # 1 -> 1 (x) 1
        (1 * 2 + 1, 1): 1,   # x -> g (x) x
    })
    return BraidedHopfData(
        B=b, H=h.bialgebra,
        act=ActionData(h.bialgebra, bsig, action, ("1", "x")),
        coact=CoactionData(h.bialgebra, bsig, coaction, ("1", "x")),
        S_B=s_b, S_H=h.antipode)


def trivial_braided(b: BialgebraData, h: HopfData,
                    s_b: LinMap | None = None) -> BraidedHopfData:
    """Any bialgebra B as a braided object with trivial action
    h.b = eps(h) b and trivial coaction b -> 1 (x) b."""
    from .linmap import tensor
    field = b.field
    idb = LinMap.identity(field, b.sig)
    action = tensor(h.counit, idb).recast(h.sig + b.sig, b.sig)
    coaction = tensor(h.unit, idb).recast(b.sig, h.sig + b.sig)
    return BraidedHopfData(
        B=b, H=h.bialgebra,
        act=ActionData(h.bialgebra, b.sig, action, b.basis_names),
        coact=CoactionData(h.bialgebra, b.sig, coaction, b.basis_names),
        S_B=s_b, S_H=h.antipode)


def unit_object_bundle(field: FieldSpec, h: HopfData | None = None) -> BraidedHopfData:
    """B = k (one-dimensional) over H; the biproduct is H itself."""
    h = h or group_algebra(2, field)
    b_alg = _alg(field, "B", ["1"], {(0, 0): {0: 1}}, {0: 1})
    b_coalg = _coalg(field, "B", ["1"], {0: {(0, 0): 1}}, {0: 1})
    b = BialgebraData(b_alg, b_coalg)
    s_b = _endo(field, "B", 1, {0: {0: 1}})
    return trivial_braided(b, h, s_b)


def z2_rmatrix(field: FieldSpec) -> RMatrix:
    """R = (1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g) / 2 on k[Z_2];
    the unique nontrivial triangular structure.  R is its own inverse."""
    if field.characteristic == 2:
        raise InvalidParameter("needs characteristic != 2 (requires 1/2)")
    h = group_algebra(2, field)
    half = "1/2"
    element = LinMap.from_dict(
        field, SpaceSig.scalar(), h.sig + h.sig,
        {(0, 0): half, (1, 0): half, (2, 0): half, (3, 0): "-1/2"})
    return RMatrix.build(h, element)


def superline_module_bundle(field: FieldSpec) -> tuple[BraidedHopfData, RMatrix]:
    """The superline with its coaction forgotten, plus the Z_2 R-matrix:
    input for reconstructing the coaction from R."""
    d = superline(field)
    bare = BraidedHopfData(B=d.B, H=d.H, act=d.act, coact=None,
                           S_B=d.S_B, S_H=d.S_H)
    return bare, z2_rmatrix(field)


# -- named entries -------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    """One shipped structure with the families its checks must report.

    ``expect_fail`` empty means the entry is positive (everything must
    pass); otherwise every listed family must fail."""

    name: str
    description: str
    payload: object
    expect_fail: tuple[str, ...] = dc_field(default=())


def _broken_superline(field, patch):
    d = superline(field)
    return patch(d)


def counterexamples(field: FieldSpec | None = None) -> list[CatalogEntry]:
    """Negative fixtures: single deliberate defects."""
    field = field or FieldSpec.rationals()
    out = []

    d = superline(field)
    eps_bad = d.B.coalgebra.counit.with_entry(0, 1, 1)  # eps(x) = 1
    out.append(CatalogEntry(
        "eb-not-algebra-map",
        "superline with counit(x) = 1; the braided counit is no longer "
        "an algebra map",
        BraidedHopfData(
            B=BialgebraData(d.B.algebra,
                            CoalgebraData(field, "B", d.B.basis_names,
                                          d.B.comult, eps_bad)),
            H=d.H, act=d.act, coact=d.coact, S_B=d.S_B, S_H=d.S_H),
        expect_fail=("BR_COUNIT",)))

    d = superline(field)
    triv = LinMap.from_dict(field, d.B.sig, d.H.sig + d.B.sig,
                            {(0, 0): 1, (1, 1): 1})  # b -> 1 (x) b
    out.append(CatalogEntry(
        "coaction-trivial",
        "superline with the coaction replaced by the trivial one; the "
        "braided multiplicativity of comult_B breaks",
        BraidedHopfData(B=d.B, H=d.H, act=d.act,
                        coact=CoactionData(d.H, d.B.sig, triv, ("1", "x")),
                        S_B=d.S_B, S_H=d.S_H),
        expect_fail=("COND1",)))

    d = superline(field)
    cm_bad = d.B.comult.with_entry(0 * 2 + 1, 1, 0)  # comult(x) = x (x) 1 only
    out.append(CatalogEntry(
        "comult-truncated",
        "superline with comult(x) = x (x) 1; the left counit law fails",
        BraidedHopfData(
            B=BialgebraData(d.B.algebra,
                            CoalgebraData(field, "B", d.B.basis_names,
                                          cm_bad, d.B.counit)),
            H=d.H, act=d.act, coact=d.coact, S_B=d.S_B, S_H=d.S_H),
        expect_fail=("COALG",)))

    h = group_algebra(2, field)
    eps_zero = h.counit.with_entry(0, 1, 0)  # eps(g) = 0
    out.append(CatalogEntry(
        "counit-broken-group",
        "k[Z_2] with counit(g) = 0; not a bialgebra",
        BialgebraData(h.algebra,
                      CoalgebraData(field, h.space, h.basis_names,
                                    h.comult, eps_zero)),
        expect_fail=("BIALG",)))
    return out


def entries(field: FieldSpec | None = None) -> dict[str, CatalogEntry]:
    """Every shipped structure by name."""
    q = field or FieldSpec.rationals()
    f5 = FieldSpec.prime(5)
    pos = [
        CatalogEntry("z2", "group algebra of Z_2", group_algebra(2, q)),
        CatalogEntry("z3", "group algebra of Z_3", group_algebra(3, q)),
        CatalogEntry("z4", "group algebra of Z_4", group_algebra(4, q)),
        CatalogEntry("z3-f5", "group algebra of Z_3 over F_5",
                     group_algebra(3, f5)),
        CatalogEntry("sweedler-h4", "the 4-dimensional Hopf algebra",
                     sweedler_h4(q)),
        CatalogEntry("superline", "braided line over k[Z_2]", superline(q)),
        CatalogEntry("superline-f5", "braided line over F_5[Z_2]",
                     superline(f5)),
        CatalogEntry("unit-object", "B = k over k[Z_2]",
                     unit_object_bundle(q)),
        CatalogEntry("z2-rmatrix", "triangular structure on k[Z_2]",
                     z2_rmatrix(q)),
        CatalogEntry("superline-module",
                     "superline without its coaction, plus the Z_2 "
                     "R-matrix (coaction-reconstruction input)",
                     superline_module_bundle(q)),
    ]
    return {e.name: e for e in pos + counterexamples(q)}
