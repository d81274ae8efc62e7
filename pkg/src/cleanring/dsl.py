"""Ring-spec expressions such as ``star(product(Zn(2),Zn(2)),swap)``.

Grammar::

    spec  := ctor '(' arg (',' arg)* ')'
    arg   := spec | integer | '"' text '"' | name ['(' arg (',' arg)* ')']
    ctor  := Zn | polyq | product | M | tri | trunc | corner | quot | center | star

``star`` may only appear outermost.  The provenance string of a built ring
is itself a valid spec that rebuilds the same ring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .constructors import (
    direct_product,
    make_poly_quotient,
    make_zn,
    matrix_ring,
    triangular_ring,
    truncated_skew_series,
)
from .errors import ArityError, ParseError, UnknownConstructor
from .star import involution_by_name
from .structure import (
    center,
    corner_ring,
    endomorphisms,
    frobenius_map,
    ideal_closure,
    identity_map,
    quotient_ring,
)

_TOKENS = re.compile(r"""
    (?P<ws>\s+)
  | (?P<int>-?\d+)
  | (?P<str>"(?:[^"\\]|\\.)*")
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*(?::\d+)?)
  | (?P<punct>[(),])
""", re.VERBOSE)

# constructor -> (min args, max args or None for unbounded)
ARITY = {
    "Zn": (1, 1), "polyq": (2, 2), "product": (2, None), "M": (2, 2), "tri": (1, 1),
    "trunc": (3, 3), "corner": (2, 2), "quot": (2, None), "center": (1, 1), "star": (2, 2),
}


@dataclass(frozen=True)
class Node:
    kind: str          # "call", "int", "str", "name"
    value: object      # ctor/name, int, or str
    args: tuple = ()
    pos: int = 0

    def text(self):
        if self.kind == "int":
            return str(self.value)
        if self.kind == "str":
            return f'"{self.value}"'
        if self.kind == "name" and not self.args:
            return self.value
        return f"{self.value}(" + ",".join(a.text() for a in self.args) + ")"


@dataclass(frozen=True)
class Built:
    ring: object
    involution: object = None

    @property
    def provenance(self):
        return self.involution.provenance if self.involution is not None else self.ring.provenance


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOKENS.match(text, pos)
            if not m:
                raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
            if not m.group("ws"):
                kind = m.lastgroup
                self.toks.append((kind, m.group(kind), pos))
            pos = m.end()
        self.toks.append(("end", "", len(text)))
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", tok[2], self.text)
        self.i += 1
        return tok

    def arg(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            return Node("int", int(value), pos=pos)
        if kind == "str":
            self.take()
            return Node("str", bytes(value[1:-1], "utf-8").decode("unicode_escape"), pos=pos)
        if kind == "name":
            self.take()
            if self.peek()[1] == "(":
                return Node("call", value, self.call_args(), pos)
            return Node("name", value, pos=pos)
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos, self.text)

    def call_args(self):
        self.take("punct", "(")
        args = [self.arg()]
        while self.peek()[1] == ",":
            self.take()
            args.append(self.arg())
        self.take("punct", ")")
        return tuple(args)

    def parse(self):
        kind, value, pos = self.peek()
        if kind != "name":
            raise ParseError("a spec starts with a constructor name", pos, self.text)
        node = self.arg()
        if node.kind != "call":
            raise ParseError(f"{value!r} needs an argument list", pos, self.text)
        self.take("end")
        return node


def _check_tree(node, text, outermost=True):
    if node.kind != "call":
        return
    if node.value not in ARITY:
        raise UnknownConstructor(f"unknown constructor {node.value!r}", node.pos, text)
    lo, hi = ARITY[node.value]
    n = len(node.args)
    if n < lo or (hi is not None and n > hi):
        want = f"{lo}" if lo == hi else f"at least {lo}"
        raise ArityError(f"{node.value} takes {want} arguments, got {n}", node.pos, text)
    if node.value == "star" and not outermost:
        raise ParseError("star(...) must be the outermost constructor", node.pos, text)
    # the involution name of star may itself look like a call
    children = node.args[:1] if node.value == "star" else node.args
    for child in children:
        if child.kind == "call":
            _check_tree(child, text, outermost=False)


@dataclass(frozen=True)
class RingPlan:
    """Validated syntax tree; :meth:`build` runs the constructors."""

    root: Node
    text: str

    def build(self):
        return _build(self.root, self.text)


def parse_ring_spec(text):
    """Parse and validate a spec; constructor errors surface on :meth:`RingPlan.build`."""
    root = _Parser(text).parse()
    _check_tree(root, text)
    return RingPlan(root, text)


def build_spec(text):
    """Parse and build in one step; returns :class:`Built`."""
    return parse_ring_spec(text).build()


def _int(node, text, what):
    if node.kind != "int":
        raise ParseError(f"{what} must be an integer", node.pos, text)
    return node.value


def _ring(node, text):
    if node.kind != "call" or node.value == "star":
        raise ParseError("expected a ring expression", node.pos, text)
    return _build(node, text).ring


def _element(ring, node, text):
    ref = node.value if node.kind in ("str", "int") else node.text()
    return ring.element(ref)


def _alpha(base, node, text):
    name = node.text()
    if name == "id":
        return identity_map(base)
    if name == "frobenius":
        return frobenius_map(base)
    if name.startswith("endo:"):
        k = int(name.split(":", 1)[1])
        maps = endomorphisms(base)
        if not 0 <= k < len(maps):
            raise ParseError(f"{base.provenance} has {len(maps)} endomorphisms", node.pos, text)
        phi = maps[k]
        return identity_map(base) if k == 0 else type(phi)(phi.source, phi.target, phi.image, True, name)
    raise ParseError(f"unknown endomorphism {name!r} (id, frobenius, endo:<k>)", node.pos, text)


def _build(node, text):
    ctor, args = node.value, node.args
    if ctor == "Zn":
        return Built(make_zn(_int(args[0], text, "n")))
    if ctor == "polyq":
        if args[1].kind != "str":
            raise ParseError("polyq needs a quoted polynomial", args[1].pos, text)
        return Built(make_poly_quotient(_int(args[0], text, "n"), args[1].value))
    if ctor == "product":
        return Built(direct_product([_ring(a, text) for a in args]))
    if ctor == "M":
        return Built(matrix_ring(_ring(args[0], text), _int(args[1], text, "matrix size")))
    if ctor == "tri":
        return Built(triangular_ring(_ring(args[0], text)))
    if ctor == "trunc":
        base = _ring(args[0], text)
        return Built(truncated_skew_series(base, _alpha(base, args[1], text), _int(args[2], text, "length")))
    if ctor == "corner":
        ring = _ring(args[0], text)
        return Built(corner_ring(ring, _element(ring, args[1], text))[0])
    if ctor == "quot":
        ring = _ring(args[0], text)
        ideal = ideal_closure(ring, [_element(ring, a, text) for a in args[1:]])
        return Built(quotient_ring(ring, ideal)[0])
    if ctor == "center":
        return Built(center(_ring(args[0], text))[0])
    if ctor == "star":
        ring = _ring(args[0], text)
        try:
            name = args[1].value if args[1].kind == "str" else args[1].text()
            inv = involution_by_name(ring, name)
        except ValueError as exc:
            raise ParseError(str(exc), args[1].pos, text) from exc
        return Built(ring, inv)
    raise UnknownConstructor(f"unknown constructor {ctor!r}", node.pos, text)


def canonical(text):
    """Provenance of the built spec: the normal form of ``text``."""
    return build_spec(text).provenance
