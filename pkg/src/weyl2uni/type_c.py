"""Symplectic-side splits: Jordan types vs (all-even, doubled) pairs.

A ``Split`` is a pair (r, p) with r all even (family S) and p doubled
(family Ptilde); it represents a conjugacy class datum whose merged multiset
is a symplectic Jordan type.  ``combine`` merges, ``canonical_split`` routes
every odd part to p and every even part to r, ``fiber`` lists all splits of
a given Jordan type, and ``minimal_split`` returns the unique split with the
fewest parts in p, cross-checking the fiber scan against the parity rule.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .partitions import (
    ALL_EVEN,
    ContradictionError,
    DOUBLED,
    DomainError,
    Partition,
    SYMPLECTIC,
    is_member,
    merge,
)


@dataclass(frozen=True)
class Split:
    """(r, p) with r in family S and p in family Ptilde."""

    r: Partition
    p: Partition

    def __post_init__(self):
        if not is_member(self.r, ALL_EVEN):
            raise DomainError(f"r={self.r.text()} has an odd part (family S violated)")
        if not is_member(self.p, DOUBLED):
            raise DomainError(f"p={self.p.text()} is not doubled (family Ptilde violated)")

    @property
    def nu(self) -> int:
        return self.r.size + self.p.size

    def text(self) -> str:
        return f"r={self.r.text()};p={self.p.text()}"

    @classmethod
    def from_text(cls, s: str) -> "Split":
        try:
            rpart, ppart = s.split(";")
            assert rpart.startswith("r=") and ppart.startswith("p=")
        except (ValueError, AssertionError):
            raise DomainError(f"expected 'r=<partition>;p=<partition>', got {s!r}") from None
        return cls(Partition.from_text(rpart[2:]), Partition.from_text(ppart[2:]))

    def to_json(self) -> dict:
        return {"r": self.r.to_json(), "p": self.p.to_json()}


def _require_symplectic(c: Partition) -> None:
    if not is_member(c, SYMPLECTIC):
        raise DomainError(
            f"{c.text()} is not a symplectic Jordan type (family T): "
            "some odd value occurs an odd number of times"
        )


def combine(x: Split) -> Partition:
    """Merge the two sides into a symplectic Jordan type."""
    c = merge(x.r, x.p)
    if not is_member(c, SYMPLECTIC):  # cannot happen: odd parts come from p in pairs
        raise ContradictionError(f"combine({x.text()}) left family T")
    return c


def canonical_split(c: Partition) -> Split:
    """The distinguished split: odd parts all to p, even parts all to r."""
    _require_symplectic(c)
    evens = [v for v in c if v % 2 == 0]
    odds = [v for v in c if v % 2 == 1]
    out = Split(Partition(evens), Partition(odds))
    if combine(out) != c:
        raise ContradictionError(f"canonical split of {c.text()} does not merge back")
    return out


def iter_fiber(c: Partition) -> Iterator[Split]:
    """Lazily enumerate every split of c.

    Odd values may only sit in p; for each even value an even number of
    copies goes to p.  The doubled-family check runs on the assembled p.
    """
    _require_symplectic(c)
    values = sorted(set(c.parts), reverse=True)
    choices = []
    for e in values:
        q = c.multiplicity(e)
        choices.append([q] if e % 2 else list(range(0, q + 1, 2)))
    for ns in itertools.product(*choices):
        p_parts: list[int] = []
        r_parts: list[int] = []
        for e, n in zip(values, ns):
            p_parts += [e] * n
            r_parts += [e] * (c.multiplicity(e) - n)
        p = Partition(p_parts)
        r = Partition(r_parts)
        if not (is_member(r, ALL_EVEN) and is_member(p, DOUBLED)):
            continue
        yield Split(r, p)


def fiber(c: Partition) -> list[Split]:
    """All splits of c, minimal p-length first, deterministically ordered."""
    return sorted(iter_fiber(c), key=lambda x: (len(x.p), x.p.parts, x.r.parts))


def minimal_split(c: Partition) -> Split:
    """The unique split minimizing the number of parts of p.

    Computed twice: by scanning the fiber and by the parity rule.  Raises
    ContradictionError if the minimum is not unique or the routes disagree
    (neither can happen; this is the point being verified).
    """
    best: Split | None = None
    at_best = 0
    for x in iter_fiber(c):
        if best is None or len(x.p) < len(best.p):
            best, at_best = x, 1
        elif len(x.p) == len(best.p):
            at_best += 1
    if best is None:
        raise ContradictionError(f"empty fiber over {c.text()}")
    if at_best != 1:
        raise ContradictionError(
            f"{at_best} fiber elements over {c.text()} share the minimal p-length {len(best.p)}"
        )
    want = canonical_split(c)
    if best != want:
        raise ContradictionError(
            f"fiber minimum {best.text()} differs from canonical split {want.text()} over {c.text()}"
        )
    return best
