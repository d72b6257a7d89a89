"""Constructors on the tensor space B (x) H: the smash product algebra,
the smash coproduct coalgebra, the full biproduct Hopf algebra B*H, and
the comodule structure induced by a quasitriangular R-matrix.

Formulas, in Sweedler notation with coact(b) = sum b(-1) (x) b(0):

    (a * g)(b * h) = sum a (g1.b) * g2 h
    comult(b * h)  = sum b1 * (b2)(-1) h1  (x)  (b2)(0) * h2
    counit(b * h)  = eps_B(b) eps_H(h)
    S(b * h)       = (1_B * S_H(b(-1) h)) . (S_B(b(0)) * 1_H)

The antipode is literally evaluated as that product inside the already
constructed smash product.  The induced coaction of a quasitriangular
(H, R) is coact(b) = R^{-1}(1 (x) b), where an element u (x) v of
H (x) H acts on k (x) b by u k (x) v.b (multiply the first leg, act
with the second).
"""

from __future__ import annotations

from dataclasses import dataclass

from .braided import (
    ActionData,
    BraidedHopfData,
    CoactionData,
    check_comodule,
    check_comodule_coalgebra,
    check_module,
    check_module_algebra,
    check_theorem_hypotheses,
)
from .errors import HypothesisFailure, InvalidParameter, StructuralInconsistency
from .fields import FieldSpec
from .linmap import LinMap, SpaceSig, compose, compose_chain, flip, tensor
from .report import CheckReport, compare_maps
from .structures import (
    AlgebraData,
    BialgebraData,
    CoalgebraData,
    HopfData,
    check_bialgebra,
    check_hopf,
)


def star_space(d: BraidedHopfData) -> tuple[str, tuple[str, ...]]:
    name = f"{d.B.space}*{d.H.space}"
    basis = tuple(f"{b}*{h}" for b in d.B.basis_names for h in d.H.basis_names)
    return name, basis


def _require(report: CheckReport, force: bool, what: str):
    if not report.ok and not force:
        failed = ", ".join(it.axiom_id for it in report.failed())
        raise HypothesisFailure(f"{what}: failed {failed}", report)


def smash_mult_map(d: BraidedHopfData) -> LinMap:
    """Multiplication as a map (B,H,B,H) -> (B,H)."""
    f, b, h = d.field, d.B, d.H
    idb = LinMap.identity(f, b.sig)
    idh = LinMap.identity(f, h.sig)
    return compose_chain(
        tensor(b.mult, h.mult),
        tensor(idb, d.act.action, idh, idh),
        tensor(idb, idh, flip(f, h.sig, b.sig), idh),
        tensor(idb, h.comult, idb, idh))


def smash_comult_map(d: BraidedHopfData) -> LinMap:
    """Comultiplication as a map (B,H) -> (B,H,B,H)."""
    f, b, h = d.field, d.B, d.H
    idb = LinMap.identity(f, b.sig)
    idh = LinMap.identity(f, h.sig)
    return compose_chain(
        tensor(idb, h.mult, idb, idh),
        tensor(idb, idh, flip(f, b.sig, h.sig), idh),
        tensor(idb, d.coact.coaction, idh, idh),
        tensor(b.comult, h.comult))


def star_antipode_map(d: BraidedHopfData) -> LinMap:
    """Antipode as a map (B,H) -> (B,H): the product
    (1 * S_H(b(-1) h)) (S_B(b(0)) * 1) evaluated in the smash product."""
    f, b, h = d.field, d.B, d.H
    idb = LinMap.identity(f, b.sig)
    idh = LinMap.identity(f, h.sig)
    mu = smash_mult_map(d)
    return compose_chain(
        mu,
        tensor(b.unit, idh, idb, h.unit),
        tensor(d.S_H, d.S_B),
        tensor(h.mult, idb),
        tensor(idh, flip(f, b.sig, h.sig)),
        tensor(d.coact.coaction, idh))


def smash_product(d: BraidedHopfData, *, force: bool = False) -> AlgebraData:
    """The smash product algebra on B (x) H.

    Requires the module law and condition (2); pass ``force=True`` to
    build from failing data anyway (for experiments)."""
    if d.act is None:
        raise HypothesisFailure("smash product needs an action")
    pre = CheckReport()
    pre.extend(check_module(d.act))
    pre.extend(check_module_algebra(d))
    _require(pre, force, "smash product")
    name, basis = star_space(d)
    v = SpaceSig.of((name, len(basis)))
    return AlgebraData(
        d.field, name, basis,
        smash_mult_map(d).recast(v + v, v),
        tensor(d.B.unit, d.H.unit).recast(SpaceSig.scalar(), v))


def smash_coproduct(d: BraidedHopfData, *, force: bool = False) -> CoalgebraData:
    """The smash coproduct coalgebra on B (x) H.

    Requires the comodule law and condition (5); those two alone already
    make the result a coalgebra, which ``tests`` re-prove mechanically."""
    if d.coact is None:
        raise HypothesisFailure("smash coproduct needs a coaction")
    pre = CheckReport()
    pre.extend(check_comodule(d.coact))
    pre.extend(check_comodule_coalgebra(d))
    _require(pre, force, "smash coproduct")
    name, basis = star_space(d)
    v = SpaceSig.of((name, len(basis)))
    return CoalgebraData(
        d.field, name, basis,
        smash_comult_map(d).recast(v, v + v),
        tensor(d.B.counit, d.H.counit).recast(v, SpaceSig.scalar()))


@dataclass(frozen=True)
class BiproductData:
    """The constructed biproduct: a Hopf algebra (or bialgebra when an
    antipode is unavailable) on B (x) H, plus its source data."""

    data: HopfData | BialgebraData
    source: BraidedHopfData

    @property
    def bialgebra(self) -> BialgebraData:
        return self.data.bialgebra if isinstance(self.data, HopfData) else self.data

    @property
    def antipode(self) -> LinMap | None:
        return self.data.antipode if isinstance(self.data, HopfData) else None

    @property
    def dim(self) -> int:
        return self.bialgebra.dim


def build_biproduct(d: BraidedHopfData, *, force: bool = False) -> BiproductData:
    """Assemble B*H and verify it.

    The hypothesis cascade must pass (or ``force`` be set).  The result
    is always re-checked: a failure after passing hypotheses raises
    StructuralInconsistency, since it would mean the construction itself
    is broken."""
    if d.act is None or d.coact is None:
        raise HypothesisFailure("biproduct needs both an action and a coaction")
    hypo = check_theorem_hypotheses(d)
    _require(hypo, force, "biproduct")
    algebra = smash_product(d, force=True)
    coalgebra = smash_coproduct(d, force=True)
    bialg = BialgebraData(algebra, coalgebra)
    if d.S_B is not None and d.S_H is not None:
        v = bialg.sig
        s = star_antipode_map(d).recast(v, v)
        result: HopfData | BialgebraData = HopfData(bialg, s)
    else:
        result = bialg
    if hypo.ok:
        post = check_bialgebra(bialg)
        if isinstance(result, HopfData):
            post.extend(check_hopf(result))
        if not post.ok:
            raise StructuralInconsistency(
                "hypotheses pass but the built biproduct fails "
                + ", ".join(it.axiom_id for it in post.failed()))
    return BiproductData(result, d)


# -- quasitriangular structures ------------------------------------


def tensor_algebra_mult(alg: BialgebraData | AlgebraData, k: int) -> LinMap:
    """Componentwise multiplication on V^(k) as one map V^k (x) V^k -> V^k."""
    f = alg.field
    if k < 1:
        raise InvalidParameter("tensor power must be >= 1")
    if k == 1:
        return alg.mult
    rest = tensor_algebra_mult(alg, k - 1)
    v = alg.sig
    rest_sig = SpaceSig(rest.cod.factors)
    idv = LinMap.identity(f, v)
    idr = LinMap.identity(f, rest_sig)
    return compose(
        tensor(alg.mult, rest),
        tensor(idv, flip(f, rest_sig, v), idr))


@dataclass(frozen=True)
class RMatrix:
    """An invertible element R of H (x) H; the inverse is computed once
    at construction (InvalidParameter when R is not a unit)."""

    H: BialgebraData
    element: LinMap   # k -> H (x) H
    inverse: LinMap   # k -> H (x) H

    @staticmethod
    def build(H: BialgebraData | HopfData, element: LinMap) -> "RMatrix":
        hb = H.bialgebra if isinstance(H, HopfData) else H
        hh = hb.sig + hb.sig
        if element.dom.dim != 1 or element.cod.dim != hh.dim:
            raise InvalidParameter("R must be an element of H (x) H")
        element = element.recast(SpaceSig.scalar(), hh)
        mult2 = tensor_algebra_mult(hb, 2)
        id2 = LinMap.identity(hb.field, hh)
        left = compose(mult2, tensor(element, id2))
        unit2 = tensor(hb.unit, hb.unit)
        from .linsolve import solve_exact
        n2 = hh.dim
        rows = [[left.entry(r, c).value for c in range(n2)] for r in range(n2)]
        rhs = [unit2.entry(r, 0).value for r in range(n2)]
        x = solve_exact(hb.field, rows, rhs)
        if x is None:
            raise InvalidParameter("R-matrix is not left invertible")
        inv = LinMap.from_dict(hb.field, SpaceSig.scalar(), hh,
                               {(r, 0): v for r, v in enumerate(x)})
        if compose(mult2, tensor(inv, element)) != unit2 \
                or compose(mult2, tensor(element, inv)) != unit2:
            raise InvalidParameter("R-matrix inverse is one-sided only")
        return RMatrix(hb, element, inv)

    @property
    def field(self) -> FieldSpec:
        return self.H.field


def check_quasitriangular(r: RMatrix) -> CheckReport:
    """The standard axioms:

      R comult(h) = opposite-comult(h) R        (intertwining)
      (comult (x) id)(R) = R13 R23
      (id (x) comult)(R) = R13 R12
      (eps (x) id)(R) = 1 = (id (x) eps)(R)
    """
    hb = r.H
    f = hb.field
    v = hb.sig
    hh = v + v
    idh = LinMap.identity(f, v)
    id2 = LinMap.identity(f, hh)
    names = {hb.space: list(hb.basis_names)}
    tag = "@" + hb.space
    mult2 = tensor_algebra_mult(hb, 2)
    mult3 = tensor_algebra_mult(hb, 3)
    left_r = compose(mult2, tensor(r.element, id2))
    right_r = compose(mult2, tensor(id2, r.element))
    comult_op = compose(flip(f, v, v), hb.comult)
    rep = CheckReport()
    rep.add(compare_maps(
        "QT_INTERTWINE" + tag,
        compose(left_r, hb.comult),
        compose(right_r, comult_op),
        names))
    r13 = compose(tensor(idh, hb.unit, idh), r.element)
    r23 = tensor(hb.unit, r.element)
    r12 = tensor(r.element, hb.unit)
    prod3 = lambda x, y: compose(mult3, tensor(x, y))
    rep.add(compare_maps(
        "QT_COMULT_LEFT" + tag,
        compose(tensor(hb.comult, idh), r.element),
        prod3(r13, r23), names))
    rep.add(compare_maps(
        "QT_COMULT_RIGHT" + tag,
        compose(tensor(idh, hb.comult), r.element),
        prod3(r13, r12), names))
    rep.add(compare_maps(
        "QT_COUNIT_LEFT" + tag,
        compose(tensor(hb.counit, idh), r.element), hb.unit, names))
    rep.add(compare_maps(
        "QT_COUNIT_RIGHT" + tag,
        compose(tensor(idh, hb.counit), r.element), hb.unit, names))
    return rep.sorted()


def bosonize_coaction(b_act: ActionData, r: RMatrix, *, force: bool = False) -> CoactionData:
    """coact(b) = R^{-1}(1 (x) b): multiply the first leg of R^{-1} into
    the H slot, act with the second leg on b."""
    qt = check_quasitriangular(r)
    mod = check_module(b_act)
    pre = CheckReport(qt.items + mod.items)
    _require(pre, force, "induced coaction")
    hb = r.H
    f = hb.field
    idb = LinMap.identity(f, b_act.b_sig)
    coaction = compose_chain(
        tensor(hb.mult, b_act.action),
        tensor(LinMap.identity(f, hb.sig), flip(f, hb.sig, hb.sig), idb),
        tensor(r.inverse, hb.unit, idb))
    return CoactionData(hb, b_act.b_sig, coaction, b_act.b_basis_names)


def bosonize(d: BraidedHopfData, r: RMatrix, *, force: bool = False) -> BiproductData:
    """Equip a module bialgebra B with the R-induced coaction, then build
    the biproduct.  Any declared coaction on ``d`` is ignored; the full
    hypothesis cascade is re-checked on the assembled data."""
    if d.act is None:
        raise HypothesisFailure("bosonization needs a module structure")
    coact = bosonize_coaction(d.act, r, force=force)
    bundle = BraidedHopfData(d.B, d.H, d.act, coact, d.S_B, d.S_H)
    return build_biproduct(bundle, force=force)
