"""Published sequence prefixes that the counting engine must reproduce.

The bundled fixture file is line-oriented plain text with three record
kinds:

    seq   <id> <regime> d=<d> ell=<ell> offset=<0|1>: t1,t2,...
    arow  <id> <regime> d=1 r=<r>: t1,t2,...
    count <id> <regime> d=<d> r=<r> s=<s1,s2,...>: value

``seq`` rows are length-graded prefixes in the natural table indexing (one
term per even length when ell is even); position 0 is the empty object with
value 1, so offset 0 means the prefix starts with that 1.  ``arow`` rows are
one-operator multigraded rows (fixed degree, increasing operator count).
``count`` rows pin a single multigraded value.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from . import counting
from .monomial import Regime


@dataclass(frozen=True)
class FixtureEntry:
    kind: str
    sequence_id: str
    regime: Regime
    d: int
    terms: tuple[int, ...]
    ell: int | None = None
    offset: int | None = None
    r: int | None = None
    s: tuple[int, ...] | None = None


def parse_fixtures(text: str) -> list[FixtureEntry]:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise ValueError(f"fixture line {lineno}: missing ':'")
        fields = head.split()
        if len(fields) < 3:
            raise ValueError(f"fixture line {lineno}: too few fields")
        kind, seq_id, regime_code = fields[0], fields[1], fields[2]
        regime = Regime.from_code(regime_code)
        kv = {}
        for tok in fields[3:]:
            key, eq, val = tok.partition("=")
            if not eq:
                raise ValueError(f"fixture line {lineno}: expected key=value, got {tok!r}")
            kv[key] = val
        terms = tuple(int(x) for x in tail.replace(",", " ").split())
        if not terms:
            raise ValueError(f"fixture line {lineno}: no terms")
        d = int(kv.pop("d"))
        if kind == "seq":
            entry = FixtureEntry("seq", seq_id, regime, d, terms,
                                 ell=int(kv.pop("ell")), offset=int(kv.pop("offset")))
        elif kind == "arow":
            if d != 1:
                raise ValueError(f"fixture line {lineno}: arow rows require d=1")
            entry = FixtureEntry("arow", seq_id, regime, d, terms, r=int(kv.pop("r")))
        elif kind == "count":
            s = tuple(int(x) for x in kv.pop("s").split(","))
            entry = FixtureEntry("count", seq_id, regime, d, terms,
                                 r=int(kv.pop("r")), s=s)
        else:
            raise ValueError(f"fixture line {lineno}: unknown kind {kind!r}")
        if kv:
            raise ValueError(f"fixture line {lineno}: unexpected keys {sorted(kv)}")
        entries.append(entry)
    return entries


def load_fixture_file(path: str) -> list[FixtureEntry]:
    with open(path, encoding="utf-8") as fh:
        return parse_fixtures(fh.read())


def bundled_fixtures() -> list[FixtureEntry]:
    text = resources.files("opmono").joinpath("data/reference_tables.txt").read_text("utf-8")
    return parse_fixtures(text)


def computed_prefix(entry: FixtureEntry) -> list[int]:
    """Recompute the values the entry claims, in the same indexing."""
    if entry.kind == "seq":
        if entry.offset not in (0, 1):
            raise ValueError("seq offset must be 0 or 1")
        step = 2 if entry.ell % 2 == 0 else 1
        last_pos = entry.offset + len(entry.terms) - 1
        out = []
        if last_pos >= 1:
            seq = counting.length_sequence(entry.regime, entry.d, entry.ell,
                                           step * last_pos)
            table = seq.table_terms()
        for pos in range(entry.offset, last_pos + 1):
            out.append(1 if pos == 0 else table[pos - 1])
        return out
    if entry.kind == "arow":
        return [counting.count(entry.regime, 1, entry.r, (k,))
                for k in range(len(entry.terms))]
    return [counting.count(entry.regime, entry.d, entry.r, entry.s)]


def check_entry(entry: FixtureEntry) -> str | None:
    """None when the recomputed prefix matches; a mismatch description
    (with the first offending index) otherwise."""
    got = computed_prefix(entry)
    for i, (want, have) in enumerate(zip(entry.terms, got)):
        if want != have:
            return f"index {i}: expected {want}, computed {have}"
    return None
