"""Module and comodule structures of a bialgebra H on a space B, and the
full hypothesis bundle under which the biproduct B*H is a Hopf algebra.

Conventions (left-left throughout):

    action   act : H (x) B -> B,   act(h (x) b) = h.b
    coaction coact : B -> H (x) B, coact(b) = sum b(-1) (x) b(0)

The standard left-module law (gh).b = g.(h.b) is used; the compatibility
conditions are, in Sweedler notation,

    (2)  h.(ab)      = sum (h1.a)(h2.b)          and h.1 = eps(h) 1
    (3)  comult(h.b) = sum h1.b1 (x) h2.b2       and eps(h.b) = eps(h)eps(b)
    (4)  coact(ab)   = sum a(-1)b(-1) (x) a(0)b(0)   and coact(1) = 1 (x) 1
    (5)  sum b(-1) (x) b(0)1 (x) b(0)2 = sum b1(-1)b2(-1) (x) b1(0) (x) b2(0)
    (YD) sum h1 b(-1) (x) h2.b(0) = sum (h1.b)(-1) h2 (x) (h1.b)(0)
    (C1) comult_B(ab) = sum a1 (a2(-1).b1) (x) a2(0) b2

plus: eps_B is an algebra map, comult_B(1) = 1 (x) 1, and S_B is a
convolution inverse for B's (braided) comultiplication.  Every condition
is assembled from the primitive maps exactly as drawn in string-diagram
form; an independent index-loop oracle lives in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SignatureMismatch
from .linmap import LinMap, SpaceSig, compose, compose_chain, flip, tensor
from .report import CheckReport, compare_maps
from .structures import (
    BialgebraData,
    HopfData,
    check_algebra,
    check_bialgebra,
    check_coalgebra,
    check_hopf,
    _expect_sig,
)


@dataclass(frozen=True)
class ActionData:
    """A left H-module structure on the space described by ``b_sig``."""

    H: BialgebraData
    b_sig: SpaceSig
    action: LinMap  # H (x) B -> B
    b_basis_names: tuple[str, ...] | None = None

    def __post_init__(self):
        _expect_sig(self.action, self.H.sig + self.b_sig, self.b_sig, "action")

    @property
    def field(self):
        return self.H.field


@dataclass(frozen=True)
class CoactionData:
    """A left H-comodule structure on the space described by ``b_sig``."""

    H: BialgebraData
    b_sig: SpaceSig
    coaction: LinMap  # B -> H (x) B
    b_basis_names: tuple[str, ...] | None = None

    def __post_init__(self):
        _expect_sig(self.coaction, self.b_sig, self.H.sig + self.b_sig, "coaction")

    @property
    def field(self):
        return self.H.field


@dataclass(frozen=True)
class BraidedHopfData:
    """Everything the biproduct construction consumes.

    B carries the braided comultiplication; S_B / S_H may be absent when
    only the bialgebra-level statements are of interest.
    """

    B: BialgebraData
    H: BialgebraData
    act: ActionData | None
    coact: CoactionData | None
    S_B: LinMap | None = None
    S_H: LinMap | None = None

    def __post_init__(self):
        if self.B.field != self.H.field:
            raise SignatureMismatch("B and H must share a ground field")
        if self.B.space == self.H.space:
            raise SignatureMismatch("B and H need distinct space names")
        if self.act is not None:
            _expect_sig(self.act.action, self.H.sig + self.B.sig, self.B.sig, "action")
        if self.coact is not None:
            _expect_sig(self.coact.coaction, self.B.sig, self.H.sig + self.B.sig,
                        "coaction")
        if self.S_B is not None:
            _expect_sig(self.S_B, self.B.sig, self.B.sig, "S_B")
        if self.S_H is not None:
            _expect_sig(self.S_H, self.H.sig, self.H.sig, "S_H")

    @property
    def field(self):
        return self.B.field

    def basis_names(self) -> dict:
        return {self.B.space: list(self.B.basis_names),
                self.H.space: list(self.H.basis_names)}

    def h_hopf(self) -> HopfData | None:
        return HopfData(self.H, self.S_H) if self.S_H is not None else None


def _action_names(a: ActionData) -> dict:
    names = {a.H.space: list(a.H.basis_names)}
    if a.b_basis_names and a.b_sig.factors:
        names[a.b_sig.factors[0][0]] = list(a.b_basis_names)
    return names


def check_module(a: ActionData) -> CheckReport:
    """(gh).b = g.(h.b) and 1.b = b."""
    f = a.field
    idh = LinMap.identity(f, a.H.sig)
    idb = LinMap.identity(f, a.b_sig)
    tag = "@" + (a.b_sig.factors[0][0] if a.b_sig.factors else "k")
    names = _action_names(a)
    rep = CheckReport()
    rep.add(compare_maps(
        "MOD_ASSOC" + tag,
        compose(a.action, tensor(a.H.mult, idb)),
        compose(a.action, tensor(idh, a.action)),
        names))
    rep.add(compare_maps(
        "MOD_UNIT" + tag, compose(a.action, tensor(a.H.unit, idb)), idb, names))
    return rep.sorted()


def check_comodule(c: CoactionData) -> CheckReport:
    """(id (x) coact)coact = (comult (x) id)coact and counit law."""
    f = c.field
    idh = LinMap.identity(f, c.H.sig)
    idb = LinMap.identity(f, c.b_sig)
    tag = "@" + (c.b_sig.factors[0][0] if c.b_sig.factors else "k")
    names = {c.H.space: list(c.H.basis_names)}
    if c.b_basis_names and c.b_sig.factors:
        names[c.b_sig.factors[0][0]] = list(c.b_basis_names)
    rep = CheckReport()
    rep.add(compare_maps(
        "COMOD_COASSOC" + tag,
        compose(tensor(idh, c.coaction), c.coaction),
        compose(tensor(c.H.comult, idb), c.coaction),
        names))
    rep.add(compare_maps(
        "COMOD_COUNIT" + tag, compose(tensor(c.H.counit, idb), c.coaction), idb, names))
    return rep.sorted()


def _parts(d: BraidedHopfData):
    f = d.field
    return (f, d.B, d.H, LinMap.identity(f, d.B.sig), LinMap.identity(f, d.H.sig))


def check_module_algebra(d: BraidedHopfData) -> CheckReport:
    """Condition (2): multiplication and unit of B are H-linear."""
    f, b, h, idb, idh = _parts(d)
    act = d.act.action
    tau = flip(f, h.sig, b.sig)
    tag = "@" + b.space
    names = d.basis_names()
    rep = CheckReport()
    rep.add(compare_maps(
        "EQ2_MULT" + tag,
        compose(act, tensor(idh, b.mult)),
        compose_chain(b.mult, tensor(act, act), tensor(idh, tau, idb),
                      tensor(h.comult, idb, idb)),
        names))
    rep.add(compare_maps(
        "EQ2_UNIT" + tag,
        compose(act, tensor(idh, b.unit)),
        compose(b.unit, h.counit),
        names))
    return rep.sorted()


def check_module_coalgebra(d: BraidedHopfData) -> CheckReport:
    """Condition (3): comultiplication and counit of B are H-linear."""
    f, b, h, idb, idh = _parts(d)
    act = d.act.action
    tau = flip(f, h.sig, b.sig)
    tag = "@" + b.space
    names = d.basis_names()
    rep = CheckReport()
    rep.add(compare_maps(
        "EQ3_COMULT" + tag,
        compose(b.comult, act),
        compose_chain(tensor(act, act), tensor(idh, tau, idb),
                      tensor(h.comult, b.comult)),
        names))
    rep.add(compare_maps(
        "EQ3_COUNIT" + tag,
        compose(b.counit, act),
        tensor(h.counit, b.counit),
        names))
    return rep.sorted()


def check_comodule_algebra(d: BraidedHopfData) -> CheckReport:
    """Condition (4): coact(ab) = sum a(-1)b(-1) (x) a(0)b(0)."""
    f, b, h, idb, idh = _parts(d)
    coact = d.coact.coaction
    tau = flip(f, b.sig, h.sig)
    tag = "@" + b.space
    names = d.basis_names()
    rep = CheckReport()
    rep.add(compare_maps(
        "EQ4_MULT" + tag,
        compose(coact, b.mult),
        compose_chain(tensor(h.mult, b.mult), tensor(idh, tau, idb),
                      tensor(coact, coact)),
        names))
    rep.add(compare_maps(
        "EQ4_UNIT" + tag,
        compose(coact, b.unit),
        tensor(h.unit, b.unit),
        names))
    return rep.sorted()


def check_comodule_coalgebra(d: BraidedHopfData) -> CheckReport:
    """Condition (5), plus the counit compatibility
    (id (x) eps_B)coact = unit_H . eps_B."""
    f, b, h, idb, idh = _parts(d)
    coact = d.coact.coaction
    tau = flip(f, b.sig, h.sig)
    tag = "@" + b.space
    names = d.basis_names()
    rep = CheckReport()
    rep.add(compare_maps(
        "EQ5_COMULT" + tag,
        compose(tensor(idh, b.comult), coact),
        compose_chain(tensor(h.mult, idb, idb), tensor(idh, tau, idb),
                      tensor(coact, coact), b.comult),
        names))
    rep.add(compare_maps(
        "EQ5_COUNIT" + tag,
        compose(tensor(idh, b.counit), coact),
        compose(h.unit, b.counit),
        names))
    return rep.sorted()


def check_yd_condition(d: BraidedHopfData) -> CheckReport:
    """The crossed-module compatibility between action and coaction:
    sum h1 b(-1) (x) h2.b(0) = sum (h1.b)(-1) h2 (x) (h1.b)(0)
    as maps H (x) B -> H (x) B."""
    f, b, h, idb, idh = _parts(d)
    act, coact = d.act.action, d.coact.coaction
    lhs = compose_chain(
        tensor(h.mult, act),
        tensor(idh, flip(f, h.sig, h.sig), idb),
        tensor(h.comult, coact))
    rhs = compose_chain(
        tensor(h.mult, idb),
        tensor(idh, flip(f, b.sig, h.sig)),
        tensor(coact, idh),
        tensor(act, idh),
        tensor(idh, flip(f, h.sig, b.sig)),
        tensor(h.comult, idb))
    return CheckReport([compare_maps("YD@" + b.space, lhs, rhs, d.basis_names())])


def check_condition1(d: BraidedHopfData) -> CheckReport:
    """Braided multiplicativity of comult_B:
    comult_B(ab) = sum a1 (a2(-1).b1) (x) a2(0) b2."""
    f, b, h, idb, idh = _parts(d)
    act, coact = d.act.action, d.coact.coaction
    lhs = compose(b.comult, b.mult)
    rhs = compose_chain(
        tensor(b.mult, b.mult),
        tensor(idb, act, idb, idb),
        tensor(idb, idh, flip(f, b.sig, b.sig), idb),
        tensor(idb, coact, idb, idb),
        tensor(b.comult, b.comult))
    return CheckReport([compare_maps("COND1@" + b.space, lhs, rhs, d.basis_names())])


def check_braided_counit_unit(d: BraidedHopfData) -> CheckReport:
    """eps_B is an algebra map and comult_B(1) = 1 (x) 1."""
    f, b, _, idb, _ = _parts(d)
    tag = "@" + b.space
    names = d.basis_names()
    rep = CheckReport()
    rep.add(compare_maps(
        "BR_COUNIT_MULT" + tag,
        compose(b.counit, b.mult), tensor(b.counit, b.counit), names))
    rep.add(compare_maps(
        "BR_COUNIT_ONE" + tag,
        compose(b.counit, b.unit),
        LinMap.identity(f, SpaceSig.scalar()), names))
    rep.add(compare_maps(
        "BR_COUNIT_COMULT_UNIT" + tag,
        compose(b.comult, b.unit), tensor(b.unit, b.unit), names))
    return rep.sorted()


def check_braided_antipode(d: BraidedHopfData) -> CheckReport:
    """S_B is a two-sided convolution inverse for B's braided comult."""
    f, b, _, idb, _ = _parts(d)
    s = d.S_B
    eta_eps = compose(b.unit, b.counit)
    tag = "@" + b.space
    names = d.basis_names()
    rep = CheckReport()
    rep.add(compare_maps(
        "BR_ANTIPODE_LEFT" + tag,
        compose_chain(b.mult, tensor(s, idb), b.comult), eta_eps, names))
    rep.add(compare_maps(
        "BR_ANTIPODE_RIGHT" + tag,
        compose_chain(b.mult, tensor(idb, s), b.comult), eta_eps, names))
    return rep.sorted()


def check_theorem_hypotheses(d: BraidedHopfData) -> CheckReport:
    """Run the complete hypothesis cascade.

    Includes the plain structure checks on B and H, the module/comodule
    laws, conditions (2)-(5), the crossed-module condition, braided
    multiplicativity of comult_B, the counit/unit normalizations, and the
    braided antipode identities when S_B is present.  ``hopf_ready`` is
    set on the returned report: True exactly when every check passes and
    both antipodes are available.
    """
    rep = CheckReport()
    rep.extend(check_algebra(d.H.algebra))
    rep.extend(check_coalgebra(d.H.coalgebra))
    rep.extend(check_bialgebra(d.H))
    if d.S_H is not None:
        rep.extend(check_hopf(HopfData(d.H, d.S_H)))
    rep.extend(check_algebra(d.B.algebra))
    rep.extend(check_coalgebra(d.B.coalgebra))
    if d.act is not None:
        rep.extend(check_module(d.act))
        rep.extend(check_module_algebra(d))
        rep.extend(check_module_coalgebra(d))
    if d.coact is not None:
        rep.extend(check_comodule(d.coact))
        rep.extend(check_comodule_algebra(d))
        rep.extend(check_comodule_coalgebra(d))
    if d.act is not None and d.coact is not None:
        rep.extend(check_yd_condition(d))
        rep.extend(check_condition1(d))
    rep.extend(check_braided_counit_unit(d))
    if d.S_B is not None:
        rep.extend(check_braided_antipode(d))
    rep = rep.sorted()
    rep.hopf_ready = (rep.ok and d.act is not None and d.coact is not None
                      and d.S_B is not None and d.S_H is not None)
    return rep
