"""Invertible maps between monomials and their combinatorial models: rooted
ordered trees, peakless lattice paths with labeled up-steps, binary trees
with labeled right edges, and (one operator only) restricted Dyck paths.

Model-side brute-force generators are provided as well, so that counting
checks can be run from the model side without going through the monomial
enumerator.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .monomial import (
    STAR,
    Monomial,
    Product,
    Star,
    Unary,
    decode_word,
    encode_word,
    factors,
    product,
)


# ---------------------------------------------------------------------------
# Rooted ordered trees: leaves are occurrences of the indeterminate, unary
# internal nodes carry operator labels, other internal nodes (>= 2 children)
# are products.

@dataclass(frozen=True, slots=True)
class OrderedTree:
    label: int | None
    children: tuple["OrderedTree", ...]


def to_ordered_tree(m: Monomial) -> OrderedTree:
    if isinstance(m, Star):
        return OrderedTree(None, ())
    if isinstance(m, Unary):
        return OrderedTree(m.label, (to_ordered_tree(m.child),))
    return OrderedTree(None, tuple(to_ordered_tree(f) for f in m.factors))


def from_ordered_tree(t: OrderedTree) -> Monomial:
    if not t.children:
        if t.label is not None:
            raise ValueError("a labeled node must have exactly one child")
        return STAR
    if t.label is not None:
        if len(t.children) != 1:
            raise ValueError("a labeled node must have exactly one child")
        return Unary(t.label, from_ordered_tree(t.children[0]))
    if len(t.children) < 2:
        raise ValueError("an unlabeled internal node needs >= 2 children")
    parts = []
    for c in t.children:
        sub = from_ordered_tree(c)
        if isinstance(sub, Product):
            raise ValueError("product node directly under a product node")
        parts.append(sub)
    return Product(tuple(parts))


# ---------------------------------------------------------------------------
# Lattice paths.  Steps: ("U", label), ("D",), ("H", span).  Opening
# delimiters map to labeled up-steps, closing delimiters to down-steps, and
# the indeterminate to a horizontal step of span ell.

@dataclass(frozen=True, slots=True)
class LatticePath:
    steps: tuple[tuple, ...]

    def span(self) -> int:
        return sum(s[1] if s[0] == "H" else 1 for s in self.steps)

    def to_text(self) -> str:
        bits = []
        for s in self.steps:
            if s[0] == "U":
                bits.append(f"U{s[1]}")
            elif s[0] == "D":
                bits.append("D")
            else:
                bits.append("H")
        return " ".join(bits)


def path_from_text(text: str, ell: int) -> LatticePath:
    steps = []
    for bit in text.split():
        if bit.startswith("U"):
            steps.append(("U", int(bit[1:])))
        elif bit == "D":
            steps.append(("D",))
        elif bit == "H":
            steps.append(("H", ell))
        else:
            raise ValueError(f"bad path step {bit!r}")
    return LatticePath(tuple(steps))


def validate_path(p: LatticePath) -> None:
    """Raise ValueError unless p stays nonnegative, ends at height 0, is
    peakless, and uses one fixed horizontal span."""
    height = 0
    prev_up = False
    span = None
    for s in p.steps:
        if s[0] == "U":
            if s[1] < 1:
                raise ValueError("up-step labels must be >= 1")
            height += 1
            prev_up = True
        elif s[0] == "D":
            if prev_up:
                raise ValueError("peak: up-step immediately followed by down-step")
            height -= 1
            if height < 0:
                raise ValueError("path dips below the axis")
            prev_up = False
        else:
            if s[1] < 1:
                raise ValueError("horizontal span must be >= 1")
            if span is None:
                span = s[1]
            elif span != s[1]:
                raise ValueError("mixed horizontal spans in one path")
            prev_up = False
    if height != 0:
        raise ValueError("path does not end on the axis")


def to_path(m: Monomial, ell: int) -> LatticePath:
    steps = []
    for t in encode_word(m):
        if t == 0:
            steps.append(("H", ell))
        elif t > 0:
            steps.append(("U", t))
        else:
            steps.append(("D",))
    return LatticePath(tuple(steps))


def from_path(p: LatticePath, d: int) -> Monomial:
    validate_path(p)
    tokens = []
    stack: list[int] = []
    for s in p.steps:
        if s[0] == "U":
            stack.append(s[1])
            tokens.append(s[1])
        elif s[0] == "D":
            tokens.append(-stack.pop())
        else:
            tokens.append(0)
    return decode_word(tokens, d)


def _matching_downs(steps) -> dict[int, int]:
    match = {}
    stack: list[int] = []
    for idx, s in enumerate(steps):
        if s[0] == "U":
            stack.append(idx)
        elif s[0] == "D":
            match[stack.pop()] = idx
    return match


def matched_ascent_monotone(p: LatticePath) -> bool:
    """True iff every matched ascent carries weakly increasing labels.

    A matched ascent is a maximal block of consecutive up-steps whose
    matching down-steps sit together in a single descent; that forces the
    matching down-steps to be consecutive, so two adjacent up-steps belong
    to the same matched ascent exactly when their matches are adjacent
    (in reverse order).  Matched ascents are precisely the images of
    maximal unary chains."""
    steps = p.steps
    match = _matching_downs(steps)
    i = 0
    while i < len(steps):
        if steps[i][0] != "U":
            i += 1
            continue
        j = i
        while j < len(steps) and steps[j][0] == "U":
            j += 1
        start = i
        for u in range(i, j):
            if u == j - 1 or match[u] != match[u + 1] + 1:
                labels = [steps[x][1] for x in range(start, u + 1)]
                if any(a > b for a, b in zip(labels, labels[1:])):
                    return False
                start = u + 1
        i = j
    return True


def all_lattice_paths(d: int, ell: int, span: int) -> list[LatticePath]:
    """All peakless nonnegative paths of the given total horizontal span
    ending on the axis, with d up-step labels and horizontal span ell."""
    out: list[LatticePath] = []
    steps: list[tuple] = []

    def go(remaining: int, height: int, prev_up: bool) -> None:
        if remaining == 0:
            if height == 0:
                out.append(LatticePath(tuple(steps)))
            return
        if remaining >= ell:
            steps.append(("H", ell))
            go(remaining - ell, height, False)
            steps.pop()
        if remaining - 1 >= height + 1:
            for i in range(1, d + 1):
                steps.append(("U", i))
                go(remaining - 1, height + 1, True)
                steps.pop()
        if height > 0 and not prev_up:
            steps.append(("D",))
            go(remaining - 1, height - 1, False)
            steps.pop()

    go(span, 0, False)
    return out


# ---------------------------------------------------------------------------
# Binary trees with labeled right edges (the even-length, ell = 2 model).
# The empty tree corresponds to the empty monomial (None).

@dataclass(frozen=True, slots=True)
class BinaryTree:
    left: "BinaryTree | None" = None
    right_label: int | None = None
    right: "BinaryTree | None" = None

    def __post_init__(self) -> None:
        if (self.right is None) != (self.right_label is None):
            raise ValueError("right child and right-edge label go together")


def count_vertices(t: BinaryTree | None) -> int:
    if t is None:
        return 0
    return 1 + count_vertices(t.left) + count_vertices(t.right)


def to_binary_tree(m: Monomial | None) -> BinaryTree | None:
    if m is None:
        return None
    parts = factors(m)
    prefix = product(parts[:-1]) if len(parts) > 1 else None
    last = parts[-1]
    if isinstance(last, Star):
        return BinaryTree(to_binary_tree(prefix), None, None)
    return BinaryTree(to_binary_tree(prefix), last.label, to_binary_tree(last.child))


def from_binary_tree(t: BinaryTree | None, d: int) -> Monomial | None:
    if t is None:
        return None
    left = from_binary_tree(t.left, d)
    if t.right_label is None:
        last: Monomial = STAR
    else:
        if not 1 <= t.right_label <= d:
            raise ValueError(f"label {t.right_label} out of range [1, {d}]")
        inner = from_binary_tree(t.right, d)
        if inner is None:
            raise ValueError("labeled right edge into an empty subtree")
        last = Unary(t.right_label, inner)
    if left is None:
        return last
    return product(factors(left) + (last,))


def right_chain_monotone(t: BinaryTree | None) -> bool:
    """True iff labels increase weakly along every right-edge chain whose
    intermediate vertices have no left child."""
    if t is None:
        return True
    if t.right is not None:
        v = t.right
        if v.left is None and v.right_label is not None:
            if t.right_label > v.right_label:
                return False
        if not right_chain_monotone(t.right):
            return False
    return right_chain_monotone(t.left)


def binary_tree_text(t: BinaryTree | None) -> str:
    if t is None:
        return "."
    label = "-" if t.right_label is None else str(t.right_label)
    return f"({binary_tree_text(t.left)} {label} {binary_tree_text(t.right)})"


def all_binary_trees(n: int, d: int) -> list[BinaryTree | None]:
    """All binary trees with n vertices and right edges labeled in [1, d]."""
    if n == 0:
        return [None]
    out: list[BinaryTree | None] = []
    for left_n in range(n):
        right_n = n - 1 - left_n
        rights = all_binary_trees(right_n, d) if right_n else [None]
        for lt in all_binary_trees(left_n, d):
            if right_n == 0:
                out.append(BinaryTree(lt, None, None))
            else:
                for rt in rights:
                    for lab in range(1, d + 1):
                        out.append(BinaryTree(lt, lab, rt))
    return out


# ---------------------------------------------------------------------------
# One-operator Dyck transform: opening delimiter -> U^ell, indeterminate ->
# UD, closing delimiter -> D^ell.  A path is in the image iff every maximal
# ascent and descent has length == 1 (mod ell), and the block decomposition
# is then forced run by run.

def dyck_transform(m: Monomial, ell: int) -> tuple[int, ...]:
    out: list[int] = []
    for t in encode_word(m):
        if t == 0:
            out.extend((1, -1))
        elif t == 1:
            out.extend([1] * ell)
        elif t == -1:
            out.extend([-1] * ell)
        else:
            raise ValueError("dyck transform needs a one-operator monomial")
    return tuple(out)


def _runs(path):
    runs = []
    for step in path:
        if runs and runs[-1][0] == step:
            runs[-1][1] += 1
        else:
            runs.append([step, 1])
    return runs


def dyck_run_lengths_ok(path, ell: int) -> bool:
    return all(length % ell == 1 % ell for _, length in _runs(path))


def dyck_inverse(path, ell: int) -> Monomial:
    """Invert :func:`dyck_transform` by the unique block decomposition."""
    tokens: list[int] = []
    for step, length in _runs(path):
        if length % ell != 1 % ell:
            raise ValueError(f"run length {length} not 1 mod {ell}")
        blocks = (length - 1) // ell
        if step == 1:
            tokens.extend([1] * blocks)
            tokens.append(0)  # the trailing up-step opens the indeterminate's peak
        else:
            tokens.extend([-1] * blocks)  # the leading down-step closed the peak
    return decode_word(tokens, 1)


def all_dyck_paths(semilength: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    steps: list[int] = []

    def go(ups_left: int, height: int) -> None:
        if ups_left == 0 and height == 0:
            out.append(tuple(steps))
            return
        if ups_left > 0:
            steps.append(1)
            go(ups_left - 1, height + 1)
            steps.pop()
        if height > 0:
            steps.append(-1)
            go(ups_left, height - 1)
            steps.pop()

    go(semilength, 0)
    return out
