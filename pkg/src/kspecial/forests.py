"""Planar-forest families whose cardinality realizes the Pochhammer k-symbol.

A family member for parameters (a, n, k) is built incrementally: start from
a ordered roots, each bearing a single tail slot; for i = 1..n the internal
vertex v_i replaces one free tail and opens k+1 fresh slots of its own.
Every vertex therefore addresses its parent as either root j (slot 0) or an
earlier internal vertex m < i (slot 0..k), and a forest is exactly the
tuple of those attachment choices. At step i there are a + (i-1)k free
tails, so |family| = a (a+k) (a+2k) ... (a+(n-1)k).

Counting is exact big-integer arithmetic; enumeration is deterministic in a
fixed scan order (roots by index, then internal vertices by index, then
slot position) and guarded by a cap, since families grow factorially.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import CapExceeded, InvariantViolation

Parent = tuple[str, int]           # ("r", j) root, ("v", m) internal, 1-based
Attachment = tuple[Parent, int]    # (parent, slot)


@dataclass(frozen=True, slots=True)
class ForestFamily:
    a: int
    n: int
    k: int

    def __post_init__(self) -> None:
        if not (isinstance(self.a, int) and self.a >= 1):
            raise InvariantViolation(f"root count must be an integer >= 1, got {self.a}")
        if not (isinstance(self.n, int) and self.n >= 0):
            raise InvariantViolation(f"internal count must be an integer >= 0, got {self.n}")
        if not (isinstance(self.k, int) and self.k >= 1):
            raise InvariantViolation(f"arity parameter must be an integer >= 1, got {self.k}")


@dataclass(frozen=True, slots=True)
class PlanarForest:
    """nodes[i-1] is the attachment of internal vertex v_i. Structural
    validity is checked by validate_forest/tail_count, not at construction,
    so malformed instances can be built and then rejected."""

    a: int
    k: int
    nodes: tuple[Attachment, ...]

    @property
    def n(self) -> int:
        return len(self.nodes)


def validate_forest(f: PlanarForest) -> None:
    """Family constraints: parents exist and precede their children, slots
    sit in range (roots expose one slot, internal vertices k+1), and no slot
    is occupied twice."""
    if not (isinstance(f.a, int) and f.a >= 1 and isinstance(f.k, int) and f.k >= 1):
        raise InvariantViolation(f"bad family parameters a={f.a}, k={f.k}")
    seen: set[Attachment] = set()
    for i, (parent, slot) in enumerate(f.nodes, start=1):
        kind, idx = parent
        if kind == "r":
            if not 1 <= idx <= f.a:
                raise InvariantViolation(f"v_{i} attaches to nonexistent root {idx}")
            if slot != 0:
                raise InvariantViolation(f"roots carry a single slot, v_{i} uses {slot}")
        elif kind == "v":
            if not 1 <= idx < i:
                raise InvariantViolation(
                    f"v_{i} must attach to an earlier internal vertex, got v_{idx}")
            if not 0 <= slot <= f.k:
                raise InvariantViolation(
                    f"internal vertices carry slots 0..{f.k}, v_{i} uses {slot}")
        else:
            raise InvariantViolation(f"unknown parent kind {kind!r}")
        att = (parent, slot)
        if att in seen:
            raise InvariantViolation(f"slot {att} occupied twice")
        seen.add(att)


def tail_count(f: PlanarForest) -> int:
    """Number of free tails: a + n(k+1) slots minus the n occupied ones,
    i.e. a + nk for every valid family member."""
    validate_forest(f)
    return f.a + f.n * f.k


def count(family: ForestFamily) -> int:
    return math.prod(range(family.a, family.a + family.n * family.k, family.k))


def enumerate_forests(family: ForestFamily,
                      cap: int = 1_000_000) -> Iterator[PlanarForest]:
    """Yield every family member exactly once, deterministically.

    Raises CapExceeded (carrying the exact count) before yielding anything
    if the family is larger than cap.
    """
    total = count(family)
    if total > cap:
        raise CapExceeded(
            f"family (a={family.a}, n={family.n}, k={family.k}) has {total} members, "
            f"cap is {cap}", count=total)

    a, n, k = family.a, family.n, family.k

    def rec(nodes: list[Attachment]) -> Iterator[PlanarForest]:
        i = len(nodes)
        if i == n:
            yield PlanarForest(a, k, tuple(nodes))
            return
        occupied = set(nodes)
        for j in range(1, a + 1):
            att = (("r", j), 0)
            if att not in occupied:
                nodes.append(att)
                yield from rec(nodes)
                nodes.pop()
        for m in range(1, i + 1):
            for slot in range(k + 1):
                att = (("v", m), slot)
                if att not in occupied:
                    nodes.append(att)
                    yield from rec(nodes)
                    nodes.pop()

    yield from rec([])


def derivative_ratio(a: tuple, k: tuple, b: tuple, s: tuple, n: int) -> Fraction:
    """prod_j |family(a_j, n, k_j)| / prod_i |family(b_i, n, s_i)| as an
    exact rational; equals the hypergeometric coefficient n! c_n for
    integer-parameter specs."""
    if len(a) != len(k) or len(b) != len(s):
        raise InvariantViolation("parameter lists must pair up")
    if n < 0:
        raise InvariantViolation(f"derivative order must be >= 0, got {n}")
    num = 1
    for a_j, k_j in zip(a, k):
        num *= count(ForestFamily(a_j, n, k_j))
    den = 1
    for b_i, s_i in zip(b, s):
        den *= count(ForestFamily(b_i, n, s_i))
    return Fraction(num, den)


def serialize_forest(f: PlanarForest) -> str:
    """Canonical line format (stable across runs, used for golden tests):
    `root i` lines, `node i parent=<v> slot=<j>` lines, final `tails=<m>`."""
    tails = tail_count(f)  # validates
    lines = [f"root {j}" for j in range(1, f.a + 1)]
    for i, ((kind, idx), slot) in enumerate(f.nodes, start=1):
        lines.append(f"node {i} parent={kind}{idx} slot={slot}")
    lines.append(f"tails={tails}")
    return "\n".join(lines) + "\n"


_ROOT_RE = re.compile(r"root (\d+)$")
_NODE_RE = re.compile(r"node (\d+) parent=([rv])(\d+) slot=(\d+)$")
_TAILS_RE = re.compile(r"tails=(\d+)$")


def parse_forest(text: str) -> PlanarForest:
    """Inverse of serialize_forest. The arity k is recovered from the tail
    line (tails = a + nk); a bare-roots forest (n = 0) carries no arity
    information, so k defaults to 1 there."""
    roots = 0
    nodes: list[Attachment] = []
    tails = None
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if m := _ROOT_RE.match(line):
            roots += 1
            if int(m.group(1)) != roots:
                raise InvariantViolation(f"root lines out of order at {line!r}")
        elif m := _NODE_RE.match(line):
            if int(m.group(1)) != len(nodes) + 1:
                raise InvariantViolation(f"node lines out of order at {line!r}")
            nodes.append(((m.group(2), int(m.group(3))), int(m.group(4))))
        elif m := _TAILS_RE.match(line):
            tails = int(m.group(1))
        else:
            raise InvariantViolation(f"unparseable line {line!r}")
    if roots == 0 or tails is None:
        raise InvariantViolation("serialization needs root lines and a tail line")
    n = len(nodes)
    if n == 0:
        if tails != roots:
            raise InvariantViolation(f"bare forest must have tails=a, got {tails}")
        k = 1
    else:
        k, rem = divmod(tails - roots, n)
        if rem != 0 or k < 1:
            raise InvariantViolation(
                f"tail count {tails} incompatible with a={roots}, n={n}")
    f = PlanarForest(roots, k, tuple(nodes))
    validate_forest(f)
    return f
