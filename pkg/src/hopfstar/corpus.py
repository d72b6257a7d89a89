"""The shipped diagram corpus.

Fixed generator names over the two wires B and H:

    m_B  : B,B -> B      m_H  : H,H -> H      act   : H,B -> B
    cm_B : B -> B,B      cm_H : H -> H,H      coact : B -> H,B
    u_B  : -> B          u_H  : -> H          S_B   : B -> B
    cu_B : B ->          cu_H : H ->          S_H   : H -> H

plus, when a biproduct is attached to the environment,

    m_star  : B,H,B,H -> B,H
    cm_star : B,H -> B,H,B,H
    S_star  : B,H -> B,H

bound to the constructed multiplication, comultiplication and antipode
of B*H (reshaped onto the B,H wires).

The corpus holds, as claimed diagram equalities:
  * the seven pictured structure identities (module algebra, module
    coalgebra, comodule algebra, comodule coalgebra, the bialgebra
    compatibility of H, braided multiplicativity of cm_B, and the
    crossed-module condition), plus the two extra pairings of the three
    equivalent crossed-module pictures;
  * three composite-consistency equations tying the drawn composites of
    B*H to the constructed maps;
  * the first-equals-last equalities of the three proof chains:
    coassociativity of B*H, the bialgebra axiom of B*H, and both
    antipode identities of B*H.
"""

from __future__ import annotations

from .biproduct import (
    BiproductData,
    build_biproduct,
    smash_comult_map,
    smash_mult_map,
    star_antipode_map,
)
from .braided import BraidedHopfData
from .tangle import TangleEnv, TangleEquation

# The composite multiplication of B*H, drawn layer by layer.
MULT_STAR = ("(id[B] * cm_H * id[B] * id[H])"
             " ; (id[B] * id[H] * swap[H,B] * id[H])"
             " ; (id[B] * act * id[H] * id[H])"
             " ; (m_B * m_H)")

# The composite comultiplication of B*H.
COMULT_STAR = ("(cm_B * cm_H)"
               " ; (id[B] * coact * id[H] * id[H])"
               " ; (id[B] * id[H] * swap[B,H] * id[H])"
               " ; (id[B] * m_H * id[B] * id[H])")

# The composite antipode of B*H.
ANTIPODE_STAR = ("(coact * id[H])"
                 " ; (id[H] * swap[B,H])"
                 " ; (m_H * id[B])"
                 " ; (S_H * S_B)"
                 " ; (cm_H * id[B])"
                 " ; (id[H] * swap[H,B])"
                 " ; (act * id[H])")

# unit and counit of B*H
UNIT_STAR = "u_B * u_H"
COUNIT_STAR = "cu_B * cu_H"

# Swap of two adjacent (B,H) wire pairs, by elementary crossings.
_PAIR_SWAP = ("(id[B] * swap[H,B] * id[H])"
              " ; (swap[B,B] * swap[H,H])"
              " ; (id[B] * swap[B,H] * id[H])")

# The three equivalent pictures of the crossed-module condition.
_YD_FIRST = ("(cm_H * coact)"
             " ; (id[H] * swap[H,H] * id[B])"
             " ; (m_H * act)")
_YD_MIDDLE = ("(cm_H * id[B])"
              " ; (swap[H,H] * id[B])"
              " ; (id[H] * act)"
              " ; (id[H] * coact)"
              " ; (swap[H,H] * id[B])"
              " ; (m_H * id[B])")
_YD_LAST = ("(cm_H * id[B])"
            " ; (id[H] * swap[H,B])"
            " ; (act * id[H])"
            " ; (coact * id[H])"
            " ; (id[H] * swap[B,H])"
            " ; (m_H * id[B])")


def _figure_equations() -> list[tuple[str, str, str]]:
    mult, cm, s = f"({MULT_STAR})", f"({COMULT_STAR})", f"({ANTIPODE_STAR})"
    ids = "id[B] * id[H]"
    eta_eps = f"({COUNIT_STAR}) ; ({UNIT_STAR})"
    return [
        ("eq2:module-algebra",
         "(id[H] * m_B) ; act",
         "(cm_H * id[B] * id[B]) ; (id[H] * swap[H,B] * id[B])"
         " ; (act * act) ; m_B"),
        ("eq3:module-coalgebra",
         "act ; cm_B",
         "(cm_H * cm_B) ; (id[H] * swap[H,B] * id[B]) ; (act * act)"),
        ("eq4:comodule-algebra",
         "m_B ; coact",
         "(coact * coact) ; (id[H] * swap[B,H] * id[B]) ; (m_H * m_B)"),
        ("eq5:comodule-coalgebra",
         "coact ; (id[H] * cm_B)",
         "cm_B ; (coact * coact) ; (id[H] * swap[B,H] * id[B])"
         " ; (m_H * id[B] * id[B])"),
        ("halg:bialgebra-compat",
         "m_H ; cm_H",
         "(cm_H * cm_H) ; (id[H] * swap[H,H] * id[H]) ; (m_H * m_H)"),
        ("cond1:braided-mult",
         "m_B ; cm_B",
         "(cm_B * cm_B) ; (id[B] * coact * id[B] * id[B])"
         " ; (id[B] * id[H] * swap[B,B] * id[B])"
         " ; (id[B] * act * id[B] * id[B]) ; (m_B * m_B)"),
        ("yd:crossed-module", _YD_FIRST, _YD_LAST),
        ("yd:first-middle", _YD_FIRST, _YD_MIDDLE),
        ("yd:middle-last", _YD_MIDDLE, _YD_LAST),
        ("star:mult-composite", MULT_STAR, "m_star"),
        ("star:comult-composite", COMULT_STAR, "cm_star"),
        ("star:antipode-composite", ANTIPODE_STAR, "S_star"),
        ("fig1:coassoc",
         f"{cm} ; ({cm} * {ids})",
         f"{cm} ; ({ids} * {cm})"),
        ("fig2:bialgebra",
         f"{mult} ; {cm}",
         f"({cm} * {cm}) ; ({ids} * {_PAIR_SWAP} * {ids}) ; ({mult} * {mult})"),
        ("fig3:antipode-left",
         f"{cm} ; ({s} * {ids}) ; {mult}",
         eta_eps),
        ("fig3:antipode-right",
         f"{cm} ; ({ids} * {s}) ; {mult}",
         eta_eps),
    ]


def figure_corpus() -> list[TangleEquation]:
    """All shipped equations, parsed."""
    return [TangleEquation.of(label, lhs, rhs)
            for label, lhs, rhs in _figure_equations()]


def standard_env(d: BraidedHopfData, biproduct: BiproductData | None = None,
                 *, with_biproduct: bool = True) -> TangleEnv:
    """The fixed-name environment for a braided bundle.

    The braided object is always bound to wire ``B`` and the acting
    structure to wire ``H``, whatever the bundle's spaces are called, so
    that the corpus texts apply uniformly.  Generators the bundle does
    not provide (an absent action, coaction or antipode) are simply not
    bound.  With ``with_biproduct`` the m_star/cm_star/S_star
    consistency generators are bound as well, constructing B*H on the
    fly (unchecked) when none is supplied.
    """
    b, h = d.B, d.H
    gens = {
        "m_B": (b.mult, ("B", "B"), ("B",)),
        "u_B": (b.unit, (), ("B",)),
        "cm_B": (b.comult, ("B",), ("B", "B")),
        "cu_B": (b.counit, ("B",), ()),
        "m_H": (h.mult, ("H", "H"), ("H",)),
        "u_H": (h.unit, (), ("H",)),
        "cm_H": (h.comult, ("H",), ("H", "H")),
        "cu_H": (h.counit, ("H",), ()),
    }
    if d.act is not None:
        gens["act"] = (d.act.action, ("H", "B"), ("B",))
    if d.coact is not None:
        gens["coact"] = (d.coact.coaction, ("B",), ("H", "B"))
    if d.S_B is not None:
        gens["S_B"] = (d.S_B, ("B",), ("B",))
    if d.S_H is not None:
        gens["S_H"] = (d.S_H, ("H",), ("H",))
    if with_biproduct and d.act is not None and d.coact is not None:
        pair = ("B", "H")
        gens["m_star"] = (smash_mult_map(d), pair + pair, pair)
        gens["cm_star"] = (smash_comult_map(d), pair, pair + pair)
        if biproduct is not None and biproduct.antipode is not None:
            gens["S_star"] = (biproduct.antipode, pair, pair)
        elif d.S_B is not None and d.S_H is not None:
            bp = biproduct or build_biproduct(d, force=True)
            if bp.antipode is not None:
                gens["S_star"] = (bp.antipode, pair, pair)
    return TangleEnv(
        field=d.field,
        objects={"B": b.dim, "H": h.dim},
        generators=gens,
        basis_names={"B": list(b.basis_names), "H": list(h.basis_names)},
    )
