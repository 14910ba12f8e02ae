"""Integer partitions and the part-multiset families used by the classical maps.

Everything here is exact integer combinatorics on weakly decreasing tuples of
positive integers.  A partition's ``size`` is the sum of its parts and its
length the number of parts; the empty partition is valid, prints as ``"-"``
and serializes to ``[]``.

The families are decidable predicates on partitions.  Their one-letter tags
(P1, P0, Ptilde, T, S, Q, R, E) are the stable vocabulary used in data and
error messages; module constants give them readable names:

* ``ANY`` (P1): every partition.
* ``EVEN_LENGTH`` (P0): an even number of parts.
* ``DOUBLED`` (Ptilde): parts equal in consecutive pairs, p1=p2, p3=p4, ...
  (equivalently: every value occurs an even number of times).
* ``SYMPLECTIC`` (T): every odd value occurs an even number of times; these
  are the Jordan block multisets of symplectic unipotent elements.
* ``ALL_EVEN`` (S): every part is even.
* ``ORTHOGONAL`` (Q): every even value occurs an even number of times; the
  Jordan block multisets of orthogonal unipotent elements.
* ``CHAINED`` (R): members of Q whose odd parts form an alternating chain:
  the largest part is odd, the smallest is odd when the length is even,
  odd parts strictly drop at odd positions of the odd subsequence, and no
  part lies strictly inside an even-position gap.  This is exactly the image
  of ``type_bd.blocks_from_halves``.
* ``DOUBLED_EVEN`` (E): doubled with every part even ("very even").
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator


class DomainError(ValueError):
    """An input violates one of the documented invariants."""


class ContradictionError(RuntimeError):
    """A property that must hold by construction failed; indicates a bug."""


@total_ordering
class Partition:
    """A weakly decreasing sequence of positive integers.

    Constructors sort their input and reject nonpositive or non-integer
    parts.  Instances are immutable and hashable.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()) -> None:
        ps = tuple(sorted(parts, reverse=True))
        for p in ps:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise DomainError(f"partition parts must be positive integers, got {p!r}")
        object.__setattr__(self, "_parts", ps)

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("Partition is immutable")

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        """Sum of the parts."""
        return sum(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, k: int) -> int:
        return self._parts[k]

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __lt__(self, other) -> bool:
        if isinstance(other, Partition):
            return self._parts < other._parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)})"

    def multiplicity(self, e: int) -> int:
        """How many times the value e occurs as a part (O(length) scan)."""
        return sum(1 for p in self._parts if p == e)

    def text(self) -> str:
        """Comma-separated decimal parts; "-" for the empty partition."""
        return ",".join(str(p) for p in self._parts) if self._parts else "-"

    @classmethod
    def from_text(cls, s: str) -> "Partition":
        s = s.strip()
        if s in ("-", ""):
            return cls()
        try:
            return cls(int(tok) for tok in s.split(","))
        except ValueError as exc:
            raise DomainError(f"cannot parse partition from {s!r}: {exc}") from None

    def to_json(self) -> list[int]:
        return list(self._parts)


def merge(a: Partition, b: Partition) -> Partition:
    """Multiset union of the parts of a and b, re-sorted weakly decreasing."""
    return Partition(a.parts + b.parts)


def double_parts(a: Partition) -> Partition:
    """Each part repeated twice; always lands in the DOUBLED family."""
    out = []
    for p in a:
        out += [p, p]
    return Partition(out)


def undouble_parts(a: Partition) -> Partition:
    """Inverse of double_parts; rejects partitions that are not doubled."""
    if not is_member(a, DOUBLED):
        raise DomainError(f"{a.text()} is not doubled (family Ptilde)")
    return Partition(a.parts[0::2])


def iter_partitions(total: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of `total`, in reverse lexicographic order."""
    if total < 0:
        raise DomainError("cannot partition a negative total")

    def rec(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for head in range(min(cap, remaining), 0, -1):
            for tail in rec(remaining - head, head):
                yield (head,) + tail

    cap = total if max_part is None else min(max_part, total)
    for tup in rec(total, cap):
        yield Partition(tup)


# ---------------------------------------------------------------------------
# Families

FAMILY_TAGS = ("P1", "P0", "Ptilde", "T", "S", "Q", "R", "E")


@dataclass(frozen=True)
class Family:
    """A named membership predicate, optionally restricted to one total size."""

    tag: str
    size: int | None = None

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise DomainError(f"unknown family tag {self.tag!r}; expected one of {FAMILY_TAGS}")
        if self.size is not None and self.size < 0:
            raise DomainError("family size constraint must be nonnegative")


ANY = Family("P1")
EVEN_LENGTH = Family("P0")
DOUBLED = Family("Ptilde")
SYMPLECTIC = Family("T")
ALL_EVEN = Family("S")
ORTHOGONAL = Family("Q")
CHAINED = Family("R")
DOUBLED_EVEN = Family("E")


def _check_doubled(c: Partition) -> bool:
    ps = c.parts
    if len(ps) % 2:
        return False
    return all(ps[i] == ps[i + 1] for i in range(0, len(ps), 2))


def _check_symplectic(c: Partition) -> bool:
    return all(c.multiplicity(v) % 2 == 0 for v in set(c.parts) if v % 2 == 1)


def _check_orthogonal(c: Partition) -> bool:
    return all(c.multiplicity(v) % 2 == 0 for v in set(c.parts) if v % 2 == 0)


def _check_chained(c: Partition) -> bool:
    if not _check_orthogonal(c):
        return False
    ps = c.parts
    if not ps:
        return True
    if ps[0] % 2 == 0:
        return False  # largest part must be odd
    if len(ps) % 2 == 0 and ps[-1] % 2 == 0:
        return False  # even length: smallest part must be odd
    odds = [v for v in ps if v % 2 == 1]
    for u in range(1, len(odds)):  # u = 1-based index of the earlier odd entry
        hi, lo = odds[u - 1], odds[u]
        if u % 2 == 1:
            if hi <= lo:
                return False  # odd position: strict drop
        elif any(lo < v < hi for v in ps):
            return False  # even position: the gap must be empty
    return True


_PREDICATES = {
    "P1": lambda c: True,
    "P0": lambda c: len(c) % 2 == 0,
    "Ptilde": _check_doubled,
    "T": _check_symplectic,
    "S": lambda c: all(p % 2 == 0 for p in c),
    "Q": _check_orthogonal,
    "R": _check_chained,
    "E": lambda c: _check_doubled(c) and all(p % 2 == 0 for p in c),
}


def is_member(c: Partition, f: Family | str) -> bool:
    """Decide membership of a partition in a family (tag or Family value)."""
    if isinstance(f, str):
        f = Family(f)
    if f.size is not None and c.size != f.size:
        return False
    return _PREDICATES[f.tag](c)
