"""Orthogonal-side splits: Jordan types vs (chained, doubled) pairs.

Two layers live here.

The block/halves bijection: ``blocks_from_halves`` stretches a partition of
half-lengths into a member of the chained family R by doubling each part and
adding +1/-1 at strict descents (odd positions gain one, even positions give
one up), appending a trailing 1 when the length-plus-kappa parity calls for
it.  ``halves_from_blocks`` inverts it exactly.

The split machinery mirrors type_c with r drawn from family R instead of S:
``combine``, ``canonical_split`` (the five routing rules below), ``fiber``,
``minimal_split`` and the (halves, doubled) packaging ``from_halves``.

Routing rules of ``canonical_split`` for a value e with multiplicity q in c
(writing d for the 1-based position where e's run starts inside the odd
subsequence of c):

1. e odd, q odd: one copy to r, the rest to p.
2. e odd, q even, d even: two copies to r, the rest to p.
3. e odd, q even, d odd: all copies to p.
4. e even and ``_star`` holds against the odd entries already in r: all to p.
5. e even otherwise: all copies to r.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator

from .partitions import (
    CHAINED,
    ContradictionError,
    DOUBLED,
    DOUBLED_EVEN,
    DomainError,
    EVEN_LENGTH,
    ORTHOGONAL,
    Partition,
    is_member,
    merge,
)


def _require_kappa(kappa: int) -> None:
    if kappa not in (0, 1):
        raise DomainError(f"kappa must be 0 or 1, got {kappa!r}")


def _require_orthogonal(c: Partition) -> None:
    if not is_member(c, ORTHOGONAL):
        raise DomainError(
            f"{c.text()} is not an orthogonal Jordan type (family Q): "
            "some even value occurs an odd number of times"
        )


# ---------------------------------------------------------------------------
# The halves <-> blocks bijection


def blocks_from_halves(halves: Partition, kappa: int) -> Partition:
    """Jordan blocks contributed by cycles of the given half-lengths.

    Entry t becomes 2*halves[t] + adj where adj is +1 at odd positions whose
    value strictly drops below everything earlier (vacuously at t=1), -1 at
    even positions strictly above everything later (vacuously at the end),
    else 0; a trailing 1 is appended when length+kappa is odd.
    """
    _require_kappa(kappa)
    if kappa == 0 and len(halves) % 2:
        raise DomainError("kappa=0 requires an even number of halves (family P0)")
    hs = halves.parts
    s = len(hs)
    out: list[int] = []
    for t in range(1, s + 1):
        v = hs[t - 1]
        adj = 0
        # sorted input, so comparing against one neighbour decides the rule
        if t % 2 == 1 and (t == 1 or hs[t - 2] > v):
            adj = 1
        elif t % 2 == 0 and (t == s or v > hs[t]):
            adj = -1
        out.append(2 * v + adj)
    if (s + kappa) % 2 == 1:
        out.append(1)
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ContradictionError(f"blocks of {halves.text()} (kappa={kappa}) not decreasing: {out}")
    blocks = Partition(out)
    if blocks.size != 2 * halves.size + kappa:
        raise ContradictionError(f"block total for {halves.text()} (kappa={kappa}) is off")
    if not is_member(blocks, CHAINED):
        raise ContradictionError(
            f"blocks_from_halves({halves.text()}, {kappa}) = {blocks.text()} left family R"
        )
    return blocks


def halves_from_blocks(blocks: Partition, kappa: int) -> Partition:
    """Inverse of blocks_from_halves.

    Position k gets (v + z)/2 with z = (-1)^k for odd v and 0 for even v;
    a final block equal to kappa (the appended trailing 1) is dropped first.
    """
    _require_kappa(kappa)
    if not is_member(blocks, CHAINED):
        raise DomainError(f"{blocks.text()} is not in family R")
    if blocks.size % 2 != kappa:
        raise DomainError(f"total of {blocks.text()} has the wrong parity for kappa={kappa}")
    ps = blocks.parts
    if ps and ps[-1] == kappa:
        ps = ps[:-1]
    out: list[int] = []
    for k, v in enumerate(ps, start=1):
        z = (-1) ** k if v % 2 else 0
        half, rem = divmod(v + z, 2)
        if rem or half < 1:
            raise ContradictionError(f"halving {blocks.text()} at position {k} gave {v + z}/2")
        out.append(half)
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ContradictionError(f"halves of {blocks.text()} not decreasing: {out}")
    halves = Partition(out)
    if blocks_from_halves(halves, kappa) != blocks:
        raise ContradictionError(f"halves_from_blocks({blocks.text()}, {kappa}) does not invert")
    return halves


# ---------------------------------------------------------------------------
# Splits


@dataclass(frozen=True)
class Split:
    """(r, p) with r in family R and p in family Ptilde."""

    r: Partition
    p: Partition

    def __post_init__(self):
        if not is_member(self.r, CHAINED):
            raise DomainError(f"r={self.r.text()} is not in family R")
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


@dataclass(frozen=True)
class HalfSplit:
    """(halves, doubled, kappa): the compressed form of a Split.

    halves carries the half-lengths feeding blocks_from_halves (even length
    required when kappa=0); doubled is the p side unchanged.  Total size is
    2*halves.size + doubled.size + kappa.
    """

    halves: Partition
    doubled: Partition
    kappa: int

    def __post_init__(self):
        _require_kappa(self.kappa)
        if self.kappa == 0 and not is_member(self.halves, EVEN_LENGTH):
            raise DomainError("kappa=0 requires an even number of halves (family P0)")
        if not is_member(self.doubled, DOUBLED):
            raise DomainError(f"p={self.doubled.text()} is not doubled (family Ptilde violated)")

    @property
    def nu(self) -> int:
        return 2 * self.halves.size + self.doubled.size + self.kappa

    def text(self) -> str:
        return f"p'={self.halves.text()};p={self.doubled.text()};k={self.kappa}"

    @classmethod
    def from_text(cls, s: str) -> "HalfSplit":
        try:
            hpart, ppart, kpart = s.split(";")
            assert hpart.startswith("p'=") and ppart.startswith("p=") and kpart.startswith("k=")
        except (ValueError, AssertionError):
            raise DomainError(
                f"expected \"p'=<partition>;p=<partition>;k=<0|1>\", got {s!r}"
            ) from None
        return cls(Partition.from_text(hpart[3:]), Partition.from_text(ppart[2:]), int(kpart[2:]))

    def to_json(self) -> dict:
        return {"pprime": self.halves.to_json(), "p": self.doubled.to_json(), "kappa": self.kappa}


def from_halves(x: HalfSplit) -> Split:
    """Unpack a HalfSplit into the equivalent Split."""
    return Split(blocks_from_halves(x.halves, x.kappa), x.doubled)


def to_halves(x: Split, kappa: int) -> HalfSplit:
    """Inverse of from_halves for the given kappa."""
    return HalfSplit(halves_from_blocks(x.r, kappa), x.p, kappa)


def combine(x: Split) -> Partition:
    """Merge the two sides into an orthogonal Jordan type."""
    c = merge(x.r, x.p)
    if not is_member(c, ORTHOGONAL):  # cannot happen: both sides are in Q
        raise ContradictionError(f"combine({x.text()}) left family Q")
    return c


def _star(odds: tuple[int, ...], e: int) -> bool:
    """Interleaving test deciding whether an even value e belongs in p.

    odds holds the odd entries already routed to r, decreasing.  True when e
    falls strictly inside an even-position gap of that chain, above its top,
    or below its bottom with evenly many entries.  With no odd entries at
    all the test is vacuously true (everything even stays in p; anything
    else would break family R).  Equivalent closed form: the number of odd
    entries exceeding e is even.
    """
    s = len(odds)
    if s == 0:
        return True
    if e > odds[0]:
        return True
    if s % 2 == 0 and odds[-1] > e:
        return True
    for i in range(1, s - 1, 2):  # 0-based pairs (i, i+1) = 1-based (2v, 2v+1)
        if odds[i] > e > odds[i + 1]:
            return True
    return False


def canonical_split(c: Partition) -> Split:
    """The distinguished split of an orthogonal Jordan type (rules 1-5)."""
    _require_orthogonal(c)
    ps = c.parts
    r_parts: list[int] = []
    p_parts: list[int] = []
    for e in sorted({v for v in ps if v % 2 == 1}, reverse=True):
        q = c.multiplicity(e)
        d = 1 + sum(1 for v in ps if v % 2 == 1 and v > e)  # run start, odd subsequence
        if q % 2 == 1:
            m = 1
        elif d % 2 == 0:
            m = 2
        else:
            m = 0
        r_parts += [e] * m
        p_parts += [e] * (q - m)
    r_odds = tuple(r_parts)  # already decreasing
    for e in sorted({v for v in ps if v % 2 == 0}, reverse=True):
        q = c.multiplicity(e)
        if _star(r_odds, e):
            p_parts += [e] * q
        else:
            r_parts += [e] * q
    r = Partition(r_parts)
    p = Partition(p_parts)
    if not is_member(r, CHAINED):
        raise DomainError(f"canonical split of {c.text()} produced r={r.text()} outside family R")
    out = Split(r, p)
    if combine(out) != c:
        raise ContradictionError(f"canonical split of {c.text()} does not merge back")
    return out


def iter_fiber(c: Partition) -> Iterator[Split]:
    """Lazily enumerate every split of c.

    Each odd value contributes 0, 1 or 2 copies to r with matching parity
    (family R admits at most two equal odd parts); each even value sends an
    even count to p.  Assembled candidates are filtered through family R.
    """
    _require_orthogonal(c)
    values = sorted(set(c.parts), reverse=True)
    choices = []
    for e in values:
        q = c.multiplicity(e)
        if e % 2:
            choices.append([m for m in (0, 1, 2) if m <= q and (q - m) % 2 == 0])
        else:
            choices.append([q - n for n in range(0, q + 1, 2)])
    for ms in itertools.product(*choices):
        r_parts: list[int] = []
        p_parts: list[int] = []
        for e, m in zip(values, ms):
            r_parts += [e] * m
            p_parts += [e] * (c.multiplicity(e) - m)
        r = Partition(r_parts)
        p = Partition(p_parts)
        if not (is_member(r, CHAINED) and is_member(p, DOUBLED)):
            continue
        yield Split(r, p)


def fiber(c: Partition) -> list[Split]:
    """All splits of c, minimal p-length first, deterministically ordered."""
    return sorted(iter_fiber(c), key=lambda x: (len(x.p), x.p.parts, x.r.parts))


def minimal_split(c: Partition) -> Split:
    """The unique split minimizing the number of parts of p.

    Dual-route: the fiber scan must single out exactly the canonical split.
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


class DKind(enum.Enum):
    """How an even-total orthogonal Jordan type sits in the even series."""

    VERY_EVEN = "very_even"
    ORDINARY = "ordinary"


def classify_d(c: Partition) -> DKind:
    """Very even types (all parts even) are the degenerate even-series case.

    For them the fiber is the singleton (r empty, p = c) and every map here
    restricts to the identity; ordinary types use the full machinery.
    """
    if c.size % 2:
        raise DomainError(f"{c.text()} has odd total {c.size}; even series needs an even total")
    _require_orthogonal(c)
    return DKind.VERY_EVEN if is_member(c, DOUBLED_EVEN) else DKind.ORDINARY
