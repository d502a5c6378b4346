"""The ``.ring`` text format.

Statements end with ``;`` and ``#`` starts a comment::

    ring Q[x,y,z];              # or GF(101)[x,y]
    ideal I = x*y, x*z;
    prime P1 = x;  prime P2 = y, z;
    canonical_ideal J = x, y;
    expect torsionfree_level = 2; expect dim = 2;
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .core import QQ, GF, Poly, PolyRing, MonomialOrder, format_poly
from .errors import ParseError

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


# ---------------------------------------------------------------- polynomials


def parse_poly(text: str, ring: PolyRing, line: int | None = None) -> Poly:
    """Parse ``text`` (``+ - * ^ **``, parentheses, integers, ``a/b``)."""
    src = text.strip().replace("^", "**")
    if not src:
        raise ParseError("empty polynomial", line)
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse polynomial {text.strip()!r}: {exc.msg}", line) from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return ring.const(node.value)
        if isinstance(node, ast.Name):
            if node.id not in ring.names:
                raise ParseError(f"unknown variable {node.id!r}", line)
            return ring.var(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                base = ev(node.left)
                e = node.right
                if isinstance(e, ast.Constant) and isinstance(e.value, int) and e.value >= 0:
                    return base ** e.value
                raise ParseError("exponents must be nonnegative integer literals", line)
            if isinstance(node.op, ast.Div):
                a, b = ev(node.left), ev(node.right)
                if not b.is_constant() or not b:
                    raise ParseError("division only by nonzero constants", line)
                return a.scale(ring.field.inv(b.constant_term()))
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
        raise ParseError(f"unsupported syntax in {text.strip()!r}", line)

    return ev(tree)


# ---------------------------------------------------------------- documents


@dataclass
class RingInput:
    """A parsed ring file."""

    names: tuple
    characteristic: int = 0
    ideal: list = field(default_factory=list)
    ideal_name: str = "I"
    primes: list = field(default_factory=list)  # [(name, [Poly])]
    canonical_ideal: tuple | None = None  # (name, [Poly])
    expects: dict = field(default_factory=dict)  # key -> raw text
    order: str = "grevlex"

    def poly_ring(self) -> PolyRing:
        F = QQ if self.characteristic == 0 else GF(self.characteristic)
        return PolyRing(self.names, F, MonomialOrder(self.order))

    def build(self):
        """(QuotientRing, [prime Ideals], canonical Ideal or None)."""
        from .ideal import Ideal
        from .modules import QuotientRing

        S = self.poly_ring()
        conv = lambda fs: [S.convert(f) if f.ring.field == S.field else parse_poly(str(f), S) for f in fs]
        A = QuotientRing(S, Ideal(S, conv(self.ideal)))
        primes = [Ideal(S, conv(g)) for _, g in self.primes]
        J = Ideal(S, conv(self.canonical_ideal[1])) if self.canonical_ideal else None
        return A, primes, J

    def _key(self):
        strs = lambda fs: tuple(format_poly(f) for f in fs)
        return (
            self.names,
            self.characteristic,
            strs(self.ideal),
            self.ideal_name,
            tuple((n, strs(g)) for n, g in self.primes),
            (self.canonical_ideal[0], strs(self.canonical_ideal[1])) if self.canonical_ideal else None,
            tuple(sorted(self.expects.items())),
        )

    def __eq__(self, other):
        return isinstance(other, RingInput) and self._key() == other._key()


def _ring_decl(names, characteristic):
    fld = "Q" if characteristic == 0 else f"GF({characteristic})"
    return f"ring {fld}[{','.join(names)}];"


def _split_statements(text: str):
    """Yield (line number, statement) pairs."""
    buf, start = [], None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        while line:
            if ";" in line:
                head, line = line.split(";", 1)
                buf.append(head)
                stmt = " ".join(buf).strip()
                if not stmt:
                    raise ParseError("empty statement", lineno)
                yield (start or lineno), stmt
                buf, start = [], None
            else:
                if line.strip():
                    buf.append(line)
                    start = start or lineno
                line = ""
    if " ".join(buf).strip():
        raise ParseError("missing ';' at end of statement", start)


_RING = re.compile(r"ring\s+(Q|QQ|GF\s*\(\s*(\d+)\s*\))\s*\[([^\]]*)\]$")
_DECL = re.compile(r"(ideal|prime|canonical_ideal)\s+([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*)$", re.S)
_EXPECT = re.compile(r"expect\s+([A-Za-z_][A-Za-z0-9_.]*)\s*=\s*(.+)$", re.S)


def _split_gens(body: str):
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse(text: str, characteristic: int | None = None, order: str | None = None) -> RingInput:
    """Parse a ring file; ``characteristic`` overrides the declared field."""
    ring = None
    doc = None
    seen_ideal = False
    for lineno, stmt in _split_statements(text):
        if stmt.startswith("ring"):
            if doc is not None:
                raise ParseError("ring declared twice", lineno)
            m = _RING.match(stmt)
            if not m:
                raise ParseError(f"bad ring declaration {stmt!r}", lineno)
            char = int(m.group(2)) if m.group(2) else 0
            if characteristic is not None:
                char = characteristic
            names = tuple(v.strip() for v in m.group(3).split(",") if v.strip())
            for v in names:
                if not _NAME.match(v):
                    raise ParseError(f"bad variable name {v!r}", lineno)
            try:
                doc = RingInput(names=names, characteristic=char, order=order or "grevlex")
                ring = doc.poly_ring()
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            continue
        if doc is None:
            raise ParseError("the ring must be declared first", lineno)
        m = _DECL.match(stmt)
        if m:
            kind, name, body = m.groups()
            gens = [parse_poly(g, ring, lineno) for g in _split_gens(body)] if body.strip() else []
            if kind == "ideal":
                if seen_ideal:
                    raise ParseError("ideal declared twice", lineno)
                seen_ideal = True
                doc.ideal, doc.ideal_name = [g for g in gens if g], name
            elif kind == "prime":
                doc.primes.append((name, gens))
            else:
                doc.canonical_ideal = (name, gens)
            continue
        m = _EXPECT.match(stmt)
        if m:
            doc.expects[m.group(1)] = " ".join(m.group(2).split())
            continue
        raise ParseError(f"unknown statement {stmt!r}", lineno)
    if doc is None:
        raise ParseError("no ring declaration")
    return doc


def format_input(doc: RingInput) -> str:
    lines = [_ring_decl(doc.names, doc.characteristic)]
    gens = lambda fs: ", ".join(format_poly(f) for f in fs) if fs else "0"
    lines.append(f"ideal {doc.ideal_name} = {gens(doc.ideal)};")
    for name, g in doc.primes:
        lines.append(f"prime {name} = {gens(g)};")
    if doc.canonical_ideal:
        lines.append(f"canonical_ideal {doc.canonical_ideal[0]} = {gens(doc.canonical_ideal[1])};")
    for k, v in doc.expects.items():
        lines.append(f"expect {k} = {v};")
    return "\n".join(lines) + "\n"


def read_file(path, characteristic=None, order=None) -> RingInput:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), characteristic, order)


def parse_expect_value(raw: str):
    """int, bool, or the raw string."""
    low = raw.strip().lower()
    if low in ("true", "false"):
        return low == "true"
    try:
        return int(low)
    except ValueError:
        pass
    try:
        return Fraction(low)
    except ValueError:
        return raw.strip()
