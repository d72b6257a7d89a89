"""A textual DSL for string diagrams of linear maps.

Diagrams read top to bottom: ``;`` composes vertically (the left operand
is applied first), ``*`` juxtaposes horizontally (tensor product).
Named wires are objects bound in an environment; boxes are generators
bound to linear maps.  Crossings are the plain vector-space swap.

Grammar:

    expr  := seq
    seq   := par (";" par)*
    par   := atom ("*" atom)*
    atom  := IDENT | "id" "[" IDENT "]" | "swap" "[" IDENT "," IDENT "]"
           | "(" expr ")"
    IDENT := [A-Za-z_][A-Za-z0-9_]*

``id`` and ``swap`` are reserved words.  The printer emits text that
parses back to the identical tree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    SignatureMismatch,
    TangleSyntaxError,
    UnboundGenerator,
    UnknownObject,
    WireMismatch,
)
from .fields import FieldSpec
from .linmap import LinMap, SpaceSig, compose, flip, maps_equal, tensor
from .report import CheckItem, CheckReport, decode_witness
from .linmap import first_difference


# -- abstract syntax ----------------------------------------------------


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Id:
    obj: str


@dataclass(frozen=True)
class Swap:
    left: str
    right: str


@dataclass(frozen=True)
class Tensor:
    parts: tuple

    def __init__(self, parts):
        object.__setattr__(self, "parts", tuple(parts))


@dataclass(frozen=True)
class Compose:
    steps: tuple  # top to bottom; steps[0] is applied first

    def __init__(self, steps):
        object.__setattr__(self, "steps", tuple(steps))


TangleExpr = Gen | Id | Swap | Tensor | Compose


# -- lexer / parser ------------------------------------------------------

_RESERVED = ("id", "swap")
_PUNCT = ";*[],()"


def _tokens(text: str):
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch in _PUNCT:
            yield ch, line, col
            col += 1
            i += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            yield text[i:j], line, col
            col += j - i
            i = j
            continue
        raise TangleSyntaxError(f"unexpected character {ch!r}", line, col)
    yield None, line, col  # end of input


class _Parser:
    def __init__(self, text: str):
        self._toks = list(_tokens(text))
        self._pos = 0

    def _peek(self):
        return self._toks[self._pos][0]

    def _where(self):
        _, line, col = self._toks[self._pos]
        return line, col

    def _advance(self):
        tok = self._toks[self._pos]
        self._pos += 1
        return tok[0]

    def _expect(self, tok):
        if self._peek() != tok:
            line, col = self._where()
            found = self._peek() or "end of input"
            raise TangleSyntaxError(f"expected {tok!r}, found {found!r}",
                                    line, col, expected={tok})
        return self._advance()

    def _ident(self, what="name"):
        tok = self._peek()
        if tok is None or tok in _PUNCT or tok in _RESERVED:
            line, col = self._where()
            raise TangleSyntaxError(f"expected {what}, found {tok or 'end of input'!r}",
                                    line, col, expected={"IDENT"})
        return self._advance()

    def parse(self) -> TangleExpr:
        e = self._seq()
        if self._peek() is not None:
            line, col = self._where()
            raise TangleSyntaxError(f"trailing input {self._peek()!r}", line, col)
        return e

    def _seq(self):
        parts = [self._par()]
        while self._peek() == ";":
            self._advance()
            parts.append(self._par())
        return parts[0] if len(parts) == 1 else Compose(parts)

    def _par(self):
        parts = [self._atom()]
        while self._peek() == "*":
            self._advance()
            parts.append(self._atom())
        return parts[0] if len(parts) == 1 else Tensor(parts)

    def _atom(self):
        tok = self._peek()
        line, col = self._where()
        if tok == "(":
            self._advance()
            e = self._seq()
            self._expect(")")
            return e
        if tok == "id":
            self._advance()
            self._expect("[")
            obj = self._ident("object name")
            self._expect("]")
            return Id(obj)
        if tok == "swap":
            self._advance()
            self._expect("[")
            a = self._ident("object name")
            self._expect(",")
            b = self._ident("object name")
            self._expect("]")
            return Swap(a, b)
        if tok is None or tok in _PUNCT:
            raise TangleSyntaxError(
                f"expected a diagram atom, found {tok or 'end of input'!r}",
                line, col, expected={"IDENT", "id", "swap", "("})
        return Gen(self._advance())


def parse(text: str) -> TangleExpr:
    """Parse diagram text into its syntax tree."""
    return _Parser(text).parse()


def to_text(e: TangleExpr) -> str:
    """Print a tree so that parse(to_text(e)) == e."""
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, Id):
        return f"id[{e.obj}]"
    if isinstance(e, Swap):
        return f"swap[{e.left},{e.right}]"
    if isinstance(e, Tensor):
        return " * ".join(
            f"({to_text(p)})" if isinstance(p, (Tensor, Compose)) else to_text(p)
            for p in e.parts)
    if isinstance(e, Compose):
        return " ; ".join(
            f"({to_text(p)})" if isinstance(p, Compose) else to_text(p)
            for p in e.steps)
    raise TypeError(f"not a tangle expression: {e!r}")


# -- environments --------------------------------------------------------


@dataclass
class TangleEnv:
    """Bindings for wires and boxes.

    ``objects`` maps a wire name to its dimension; ``generators`` maps a
    box name to (map, source wire names, target wire names).  Basis
    names, when given, make inequality witnesses readable.
    """

    field: FieldSpec
    objects: dict
    generators: dict
    basis_names: dict | None = None

    def __post_init__(self):
        for name, (lm, src, tgt) in list(self.generators.items()):
            want_dom = self.sig_of(src)
            want_cod = self.sig_of(tgt)
            if lm.dom.dim != want_dom.dim or lm.cod.dim != want_cod.dim:
                raise UnknownObject(
                    f"generator {name}: map is {lm.cod.dim}x{lm.dom.dim}, "
                    f"declared wires need {want_cod.dim}x{want_dom.dim}")
            self.generators[name] = (lm.recast(want_dom, want_cod),
                                     tuple(src), tuple(tgt))

    def sig_of(self, objs) -> SpaceSig:
        factors = []
        for o in objs:
            if o not in self.objects:
                raise UnknownObject(f"unknown wire object {o!r}")
            factors.append((o, self.objects[o]))
        return SpaceSig(tuple(factors))


def typecheck(e: TangleExpr, env: TangleEnv):
    """Infer (source wires, target wires); raise on ill-formed diagrams."""
    if isinstance(e, Gen):
        if e.name not in env.generators:
            raise UnboundGenerator(f"generator {e.name!r} is not bound")
        _, src, tgt = env.generators[e.name]
        return tuple(src), tuple(tgt)
    if isinstance(e, Id):
        if e.obj not in env.objects:
            raise UnknownObject(f"unknown wire object {e.obj!r}")
        return (e.obj,), (e.obj,)
    if isinstance(e, Swap):
        for o in (e.left, e.right):
            if o not in env.objects:
                raise UnknownObject(f"unknown wire object {o!r}")
        return (e.left, e.right), (e.right, e.left)
    if isinstance(e, Tensor):
        src, tgt = (), ()
        for p in e.parts:
            s, t = typecheck(p, env)
            src += s
            tgt += t
        return src, tgt
    if isinstance(e, Compose):
        src, prev = typecheck(e.steps[0], env)
        for i, step in enumerate(e.steps[1:], start=1):
            s, t = typecheck(step, env)
            if s != prev:
                raise WireMismatch(i, s, prev)
            prev = t
        return src, prev
    raise TypeError(f"not a tangle expression: {e!r}")


def evaluate(e: TangleExpr, env: TangleEnv) -> LinMap:
    """Compile the diagram to one exact linear map."""
    typecheck(e, env)
    return _eval(e, env)


def _eval(e, env):
    if isinstance(e, Gen):
        return env.generators[e.name][0]
    if isinstance(e, Id):
        return LinMap.identity(env.field, env.sig_of((e.obj,)))
    if isinstance(e, Swap):
        return flip(env.field, env.sig_of((e.left,)), env.sig_of((e.right,)))
    if isinstance(e, Tensor):
        return tensor(*(_eval(p, env) for p in e.parts))
    if isinstance(e, Compose):
        out = _eval(e.steps[0], env)
        for step in e.steps[1:]:
            out = compose(_eval(step, env), out)
        return out
    raise TypeError(f"not a tangle expression: {e!r}")


# -- equations -----------------------------------------------------------


@dataclass(frozen=True)
class TangleEquation:
    """A claimed equality of two diagrams over the same wires."""

    label: str
    lhs: TangleExpr
    rhs: TangleExpr

    @staticmethod
    def of(label: str, lhs_text: str, rhs_text: str) -> "TangleEquation":
        return TangleEquation(label, parse(lhs_text), parse(rhs_text))

    @property
    def lhs_text(self) -> str:
        return to_text(self.lhs)

    @property
    def rhs_text(self) -> str:
        return to_text(self.rhs)


def check_equation(eq: TangleEquation, env: TangleEnv) -> CheckReport:
    """Evaluate both sides and compare exactly."""
    ls, lt = typecheck(eq.lhs, env)
    rs, rt = typecheck(eq.rhs, env)
    if ls != rs or lt != rt:
        raise SignatureMismatch(
            f"{eq.label}: sides have different wires "
            f"({ls}->{lt} vs {rs}->{rt})")
    lhs = evaluate(eq.lhs, env)
    rhs = evaluate(eq.rhs, env)
    pos = first_difference(lhs, rhs)
    if pos is None:
        return CheckReport([CheckItem(eq.label, "pass")])
    wit = decode_witness(lhs, rhs, pos, env.basis_names)
    return CheckReport([CheckItem(eq.label, "fail", wit)])


def diagrams_equal(lhs: TangleExpr, rhs: TangleExpr, env: TangleEnv) -> bool:
    return maps_equal(evaluate(lhs, env), evaluate(rhs, env))
