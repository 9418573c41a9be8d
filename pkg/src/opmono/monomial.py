"""Term algebra for multi-operator monomials.

A monomial is built from a single indeterminate ``*`` by an associative
product and ``d`` unary operators ``P1 .. Pd``.  Products are stored
flattened: the factors of a :class:`Product` are atoms (the indeterminate or
a unary application), so associativity never needs a quotient.

Four commutativity regimes are supported.  Making the unary operators
commute and/or the product commute turns monomials into equivalence
classes; :func:`canonicalize` picks the canonical representative of each
class (weakly increasing unary chains, and/or product factors sorted by
:func:`canonical_key`).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Regime(Enum):
    """Commutativity regime.  Values double as the CLI codes."""

    FREE = "free"          # nothing commutes
    COMM_UNARY = "c"       # unary operators commute
    COMM_MULT = "m"        # multiplication commutes
    COMM_BOTH = "cm"       # both commute

    @property
    def unary_commute(self) -> bool:
        return self in (Regime.COMM_UNARY, Regime.COMM_BOTH)

    @property
    def mult_commute(self) -> bool:
        return self in (Regime.COMM_MULT, Regime.COMM_BOTH)

    @classmethod
    def from_code(cls, code: str) -> "Regime":
        try:
            return cls(code)
        except ValueError:
            raise ValueError(f"unknown regime code {code!r}; expected one of "
                             f"{[r.value for r in cls]}") from None


class Monomial:
    """Base class; concrete nodes are Star, Unary and Product."""

    __slots__ = ()

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r})"


@dataclass(frozen=True, slots=True, repr=False)
class Star(Monomial):
    pass


@dataclass(frozen=True, slots=True, repr=False)
class Unary(Monomial):
    label: int
    child: Monomial

    def __post_init__(self) -> None:
        if self.label < 1:
            raise ValueError(f"unary label must be >= 1, got {self.label}")


@dataclass(frozen=True, slots=True, repr=False)
class Product(Monomial):
    factors: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if len(self.factors) < 2:
            raise ValueError("a product needs at least two factors")
        for f in self.factors:
            if isinstance(f, Product):
                raise ValueError("product factors must be atoms; flatten first")


STAR = Star()


def is_atom(m: Monomial) -> bool:
    """An atom is the indeterminate or a unary application."""
    return not isinstance(m, Product)


def factors(m: Monomial) -> tuple[Monomial, ...]:
    """The sequence of atoms whose product is ``m`` (itself if an atom)."""
    return m.factors if isinstance(m, Product) else (m,)


def product(parts) -> Monomial:
    """Smart constructor: flattens nested products, unwraps singletons."""
    flat: list[Monomial] = []
    for p in parts:
        flat.extend(factors(p))
    if not flat:
        raise ValueError("empty product")
    if len(flat) == 1:
        return flat[0]
    return Product(tuple(flat))


def concat(a: Monomial, b: Monomial) -> Monomial:
    return product((a, b))


def degree(m: Monomial) -> int:
    """Number of occurrences of the indeterminate."""
    if isinstance(m, Star):
        return 1
    if isinstance(m, Unary):
        return degree(m.child)
    return sum(degree(f) for f in m.factors)


def count_unary(m: Monomial) -> int:
    if isinstance(m, Star):
        return 0
    if isinstance(m, Unary):
        return 1 + count_unary(m.child)
    return sum(count_unary(f) for f in m.factors)


def multiplicity(m: Monomial, d: int) -> tuple[int, ...]:
    """Vector whose i-th entry counts unary nodes labeled i+1.

    Raises ValueError if some label exceeds ``d``.
    """
    s = [0] * d
    def walk(v: Monomial) -> None:
        if isinstance(v, Unary):
            if v.label > d:
                raise ValueError(f"label {v.label} out of range [1, {d}]")
            s[v.label - 1] += 1
            walk(v.child)
        elif isinstance(v, Product):
            for f in v.factors:
                walk(f)
    walk(m)
    return tuple(s)


def word_length(m: Monomial, ell: int) -> int:
    """Length of the bracketed word when ``*`` has length ``ell`` and every
    delimiter has length 1."""
    return ell * degree(m) + 2 * count_unary(m)


def canonical_key(m: Monomial):
    """Total order on monomials: nested tuples comparing Star < Unary < Product,
    unary nodes by (label, child), products by their factor lists."""
    if isinstance(m, Star):
        return (0,)
    if isinstance(m, Unary):
        return (1, m.label, canonical_key(m.child))
    return (2,) + tuple(canonical_key(f) for f in m.factors)


def canonicalize(m: Monomial, regime: Regime) -> Monomial:
    """Canonical representative of the equivalence class of ``m``.

    FREE is the identity.  When the unary operators commute, every maximal
    chain of nested unary nodes is sorted into weakly increasing labels read
    from the outside in.  When multiplication commutes, every product's
    factor list is sorted by :func:`canonical_key`.  Applied recursively
    bottom-up; idempotent.
    """
    if regime is Regime.FREE:
        return m

    def go(v: Monomial) -> Monomial:
        if isinstance(v, Star):
            return v
        if isinstance(v, Unary):
            if not regime.unary_commute:
                return Unary(v.label, go(v.child))
            labels = []
            cur: Monomial = v
            while isinstance(cur, Unary):
                labels.append(cur.label)
                cur = cur.child
            out = go(cur)
            for lab in sorted(labels, reverse=True):
                out = Unary(lab, out)
            return out
        fs = [go(f) for f in v.factors]
        if regime.mult_commute:
            fs.sort(key=canonical_key)
        return Product(tuple(fs))

    return go(m)


def is_canonical(m: Monomial, regime: Regime) -> bool:
    return canonicalize(m, regime) == m


# ---------------------------------------------------------------------------
# Bracketed-word codec.
#
# A word is a tuple of integer tokens: 0 for the indeterminate, +i for the
# opening delimiter of operator i, -i for the closing delimiter.

def encode_word(m: Monomial) -> tuple[int, ...]:
    out: list[int] = []
    def walk(v: Monomial) -> None:
        if isinstance(v, Star):
            out.append(0)
        elif isinstance(v, Unary):
            out.append(v.label)
            walk(v.child)
            out.append(-v.label)
        else:
            for f in v.factors:
                walk(f)
    walk(m)
    return tuple(out)


def decode_word(tokens, d: int) -> Monomial:
    """Inverse of :func:`encode_word`.

    Raises ValueError on unbalanced delimiters, an empty delimiter interior,
    or a label outside [1, d].
    """
    tokens = tuple(tokens)
    pos = 0

    def parse_seq(closing: int) -> Monomial:
        # parse atoms until the expected closing token (0 = end of input)
        nonlocal pos
        parts: list[Monomial] = []
        while pos < len(tokens) and tokens[pos] >= 0:
            t = tokens[pos]
            if t == 0:
                parts.append(STAR)
                pos += 1
            else:
                if not 1 <= t <= d:
                    raise ValueError(f"label {t} out of range [1, {d}]")
                pos += 1
                inner = parse_seq(-t)
                parts.append(Unary(t, inner))
        if closing != 0:
            if pos >= len(tokens) or tokens[pos] != closing:
                raise ValueError("unbalanced delimiters")
            pos += 1
        if not parts:
            if closing != 0:
                raise ValueError("empty delimiter interior")
            raise ValueError("empty word")
        return product(parts)

    m = parse_seq(0)
    if pos != len(tokens):
        raise ValueError("unbalanced delimiters: trailing tokens")
    return m


def word_to_text(tokens) -> str:
    """Render a token word as text: ``*`` and ``(i`` / ``)i`` delimiters."""
    bits = []
    for t in tokens:
        if t == 0:
            bits.append("*")
        elif t > 0:
            bits.append(f"({t}")
        else:
            bits.append(f"){-t}")
    return " ".join(bits)


def word_from_text(text: str) -> tuple[int, ...]:
    out = []
    for bit in text.split():
        if bit == "*":
            out.append(0)
        elif bit.startswith("("):
            out.append(int(bit[1:]))
        elif bit.startswith(")"):
            out.append(-int(bit[1:]))
        else:
            raise ValueError(f"bad word token {bit!r}")
    return tuple(out)


# ---------------------------------------------------------------------------
# Textual monomial grammar: `*`, `Pi(<mono>)`, juxtaposition for products,
# e.g. `*P1(*P2(**))`.

def format_monomial(m: Monomial) -> str:
    if isinstance(m, Star):
        return "*"
    if isinstance(m, Unary):
        return f"P{m.label}({format_monomial(m.child)})"
    return "".join(format_monomial(f) for f in m.factors)


def parse_monomial(text: str, d: int | None = None) -> Monomial:
    """Parse the textual grammar.  If ``d`` is given, labels are validated."""
    pos = 0
    n = len(text)

    def skip_ws() -> None:
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def parse_seq(stop: str | None) -> Monomial:
        nonlocal pos
        parts: list[Monomial] = []
        while True:
            skip_ws()
            if pos >= n or (stop is not None and text[pos] == stop):
                break
            c = text[pos]
            if c == "*":
                parts.append(STAR)
                pos += 1
            elif c == "P":
                pos += 1
                start = pos
                while pos < n and text[pos].isdigit():
                    pos += 1
                if start == pos:
                    raise ValueError(f"expected label digits at position {start}")
                label = int(text[start:pos])
                if label < 1 or (d is not None and label > d):
                    raise ValueError(f"label {label} out of range")
                skip_ws()
                if pos >= n or text[pos] != "(":
                    raise ValueError(f"expected '(' at position {pos}")
                pos += 1
                inner = parse_seq(")")
                if pos >= n or text[pos] != ")":
                    raise ValueError("unbalanced parentheses")
                pos += 1
                parts.append(Unary(label, inner))
            else:
                raise ValueError(f"unexpected character {c!r} at position {pos}")
        if not parts:
            raise ValueError("empty monomial")
        return product(parts)

    m = parse_seq(None)
    skip_ws()
    if pos != n:
        raise ValueError(f"trailing input at position {pos}")
    return m
