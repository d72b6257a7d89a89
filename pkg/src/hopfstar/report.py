"""Machine-readable verdicts for axiom checks.

Every checker returns a CheckReport: a list of per-axiom items, each
"pass" or "fail", where a failure carries the first differing matrix
entry as a witness (lexicographically first in row-major order).  Axiom
identifiers come from a fixed enumeration and are tagged with the space
or structure they were checked on, e.g. ``ALG_ASSOC@B``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .linmap import LinMap, first_difference

# Fixed enumeration; reports are ordered by it regardless of the order
# in which checks actually ran.
AXIOM_ORDER = (
    "ALG_ASSOC", "ALG_UNIT_LEFT", "ALG_UNIT_RIGHT",
    "COALG_COASSOC", "COALG_COUNIT_LEFT", "COALG_COUNIT_RIGHT",
    "BIALG_MULT_COMULT", "BIALG_COUNIT_MULT", "BIALG_UNIT_COMULT",
    "BIALG_COUNIT_UNIT",
    "HOPF_LEFT", "HOPF_RIGHT",
    "MOD_ASSOC", "MOD_UNIT",
    "COMOD_COASSOC", "COMOD_COUNIT",
    "EQ2_MULT", "EQ2_UNIT",
    "EQ3_COMULT", "EQ3_COUNIT",
    "EQ4_MULT", "EQ4_UNIT",
    "EQ5_COMULT", "EQ5_COUNIT",
    "YD", "COND1",
    "BR_COUNIT_MULT", "BR_COUNIT_ONE", "BR_COUNIT_COMULT_UNIT",
    "BR_ANTIPODE_LEFT", "BR_ANTIPODE_RIGHT",
    "QT_INTERTWINE", "QT_COMULT_LEFT", "QT_COMULT_RIGHT",
    "QT_COUNIT_LEFT", "QT_COUNIT_RIGHT",
)

# Family = the coarse axiom group used to tag counterexamples.
_FAMILY_PREFIXES = (
    "ALG", "COALG", "BIALG", "HOPF", "MOD", "COMOD",
    "EQ2", "EQ3", "EQ4", "EQ5", "YD", "COND1",
    "BR_COUNIT", "BR_ANTIPODE", "QT",
)


def axiom_family(axiom_id: str) -> str:
    base = axiom_id.split("@", 1)[0]
    for fam in sorted(_FAMILY_PREFIXES, key=len, reverse=True):
        if base == fam or base.startswith(fam + "_"):
            return fam
    return base


def _order_key(axiom_id: str):
    base, _, subject = axiom_id.partition("@")
    try:
        idx = AXIOM_ORDER.index(base)
    except ValueError:
        idx = len(AXIOM_ORDER)
    return (idx, base, subject)


@dataclass(frozen=True)
class Witness:
    """First failing entry of an equality of maps, decoded to basis names."""

    indices: tuple[int, ...]
    basis_names: tuple[str, ...]
    lhs_entry: str
    rhs_entry: str

    def to_json(self):
        return {
            "indices": list(self.indices),
            "basis_names": list(self.basis_names),
            "lhs_entry": self.lhs_entry,
            "rhs_entry": self.rhs_entry,
        }


@dataclass(frozen=True)
class CheckItem:
    axiom_id: str
    status: str  # "pass" | "fail"
    witness: Witness | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self):
        d = {"axiom_id": self.axiom_id, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness.to_json()
        return d


@dataclass
class CheckReport:
    items: list[CheckItem] = dc_field(default_factory=list)
    hopf_ready: bool | None = None

    @property
    def ok(self) -> bool:
        return all(item.ok for item in self.items)

    def failed(self) -> list[CheckItem]:
        return [item for item in self.items if not item.ok]

    def failed_families(self) -> set[str]:
        return {axiom_family(item.axiom_id) for item in self.failed()}

    def add(self, item: CheckItem):
        self.items.append(item)

    def extend(self, other: "CheckReport"):
        self.items.extend(other.items)

    def sorted(self) -> "CheckReport":
        rep = CheckReport(sorted(self.items, key=lambda it: _order_key(it.axiom_id)))
        rep.hopf_ready = self.hopf_ready
        return rep

    def to_json(self):
        d = {"ok": self.ok, "checks": [it.to_json() for it in self.items]}
        if self.hopf_ready is not None:
            d["hopf_ready"] = self.hopf_ready
        return d

    def summary(self) -> str:
        done = sum(1 for it in self.items if it.ok)
        return f"{done}/{len(self.items)} axioms pass"


def decode_witness(lhs: LinMap, rhs: LinMap, pos, basis_names=None) -> Witness:
    """Name the failing entry: indices run over the codomain factors then
    the domain factors, decoded against ``lhs``'s signatures."""
    r, c = pos
    idx = lhs.cod.decode(r) + lhs.dom.decode(c)
    factors = lhs.cod.factors + lhs.dom.factors
    names = []
    basis_names = basis_names or {}
    for (fname, _), i in zip(factors, idx):
        labels = basis_names.get(fname)
        names.append(labels[i] if labels else f"{fname}[{i}]")
    return Witness(idx, tuple(names), lhs.entry_str(r, c), rhs.entry_str(r, c))


def compare_maps(axiom_id: str, lhs: LinMap, rhs: LinMap, basis_names=None) -> CheckItem:
    """One axiom instance: exact equality of two composites."""
    pos = first_difference(lhs, rhs)
    if pos is None:
        return CheckItem(axiom_id, "pass")
    return CheckItem(axiom_id, "fail", decode_witness(lhs, rhs, pos, basis_names))
