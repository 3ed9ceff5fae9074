"""Exact finite topological spaces: decomposition (quotient) topologies,
continuity and homeomorphism decision, and the coarse-graining facts that
hold on finite substrates.

Subsets are bitmasks over an ordered point tuple, so every check below is
a handful of integer operations and exhaustive suites over all topologies
on a few labelled points stay cheap.  Finite topologies are enumerated
through their specialization preorders (reflexive transitive relations),
which they correspond to one-to-one; on 4 labelled points there are 355.

A finite space is Hausdorff iff it is discrete, so the compact-Hausdorff
hypotheses of the representative-subspace and fiber-quotient facts
degenerate here.  Rather than refusing non-Hausdorff inputs, verification
routines run anyway and flag the unmet hypothesis: boundary instances are
test assets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import InputError

# ---------------------------------------------------------------------------
# Core types
# ---------------------------------------------------------------------------


def _mask_of(points: Sequence[str], subset: Iterable[str]) -> int:
    index = {p: i for i, p in enumerate(points)}
    mask = 0
    for label in subset:
        if label not in index:
            raise InputError(f"unknown point {label!r}")
        mask |= 1 << index[label]
    return mask


def _labels_of(points: Sequence[str], mask: int) -> Tuple[str, ...]:
    return tuple(p for i, p in enumerate(points) if mask >> i & 1)


def is_topology(points: Sequence[str], family: Iterable[Iterable[str]]) -> bool:
    """True iff the family contains {} and X and is closed under pairwise
    union and intersection (sufficient in the finite case)."""
    masks = {_mask_of(points, s) for s in family}
    return _masks_form_topology(masks, (1 << len(points)) - 1)


def _masks_form_topology(masks, full: int) -> bool:
    if 0 not in masks or full not in masks:
        return False
    ms = list(masks)
    for i, a in enumerate(ms):
        for b in ms[i:]:
            if a | b not in masks or a & b not in masks:
                return False
    return True


@dataclass(frozen=True)
class FiniteTopSpace:
    """Finite point set with an explicit family of open sets (bitmasks)."""

    points: Tuple[str, ...]
    opens: frozenset

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise InputError("duplicate point labels")
        if not _masks_form_topology(self.opens, self.full_mask):
            raise InputError("open-set family is not a topology")

    @property
    def full_mask(self) -> int:
        return (1 << len(self.points)) - 1

    def open_label_sets(self) -> List[Tuple[str, ...]]:
        """Opens as label tuples, sorted by size then lexicographically."""
        return sorted((_labels_of(self.points, m) for m in self.opens),
                      key=lambda ls: (len(ls), ls))

    def mask(self, subset: Iterable[str]) -> int:
        return _mask_of(self.points, subset)


def space(points: Sequence[str], family: Iterable[Iterable[str]]) -> FiniteTopSpace:
    pts = tuple(points)
    return FiniteTopSpace(pts, frozenset(_mask_of(pts, s) for s in family))


def space_from_masks(points: Sequence[str], masks: Iterable[int]) -> FiniteTopSpace:
    return FiniteTopSpace(tuple(points), frozenset(masks))


def discrete_space(points: Sequence[str]) -> FiniteTopSpace:
    n = len(points)
    return space_from_masks(points, range(1 << n))


def is_t0(X: FiniteTopSpace) -> bool:
    n = len(X.points)
    for i in range(n):
        for j in range(i + 1, n):
            if all((m >> i & 1) == (m >> j & 1) for m in X.opens):
                return False
    return True


def is_t1(X: FiniteTopSpace) -> bool:
    # finite T1 = discrete, but check the definition directly
    n = len(X.points)
    for i in range(n):
        for j in range(n):
            if i != j and not any(m >> i & 1 and not m >> j & 1
                                  for m in X.opens):
                return False
    return True


def is_hausdorff(X: FiniteTopSpace) -> bool:
    """Finite Hausdorff spaces are exactly the discrete ones."""
    n = len(X.points)
    for i in range(n):
        for j in range(i + 1, n):
            if not any(a >> i & 1 and b >> j & 1 and a & b == 0
                       for a in X.opens for b in X.opens):
                return False
    return True


def subspace(X: FiniteTopSpace, subset: Sequence[str]) -> FiniteTopSpace:
    """Subspace topology on a subset of the points (order inherited)."""
    keep = [p for p in X.points if p in set(subset)]
    sub_mask = _mask_of(X.points, keep)
    remap = {}
    j = 0
    for i, p in enumerate(X.points):
        if sub_mask >> i & 1:
            remap[i] = j
            j += 1
    traced = set()
    for m in X.opens:
        t = 0
        mm = m & sub_mask
        for i, pos in remap.items():
            if mm >> i & 1:
                t |= 1 << pos
        traced.add(t)
    return space_from_masks(keep, traced)


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering a space's points."""

    points: Tuple[str, ...]
    blocks: Tuple[Tuple[str, ...], ...]

    def __post_init__(self):
        seen: List[str] = []
        for b in self.blocks:
            if not b:
                raise InputError("partition blocks must be nonempty")
            seen.extend(b)
        if sorted(seen) != sorted(self.points) or len(set(seen)) != len(seen):
            raise InputError("blocks must partition the points exactly")

    def block_of(self, label: str) -> Tuple[str, ...]:
        for b in self.blocks:
            if label in b:
                return b
        raise InputError(f"unknown point {label!r}")


def partition(X: FiniteTopSpace, blocks: Iterable[Iterable[str]]) -> Partition:
    return Partition(X.points, tuple(tuple(b) for b in blocks))


def block_label(block: Sequence[str]) -> str:
    return ",".join(sorted(block))


@dataclass(frozen=True)
class FiniteMap:
    """Total map between finite spaces, given pointwise."""

    domain: FiniteTopSpace
    codomain: FiniteTopSpace
    mapping: Tuple[Tuple[str, str], ...]  # (x, f(x)) pairs, domain order

    def __post_init__(self):
        srcs = [s for s, _ in self.mapping]
        if tuple(srcs) != self.domain.points:
            raise InputError("mapping must cover every domain point once, in order")
        cod = set(self.codomain.points)
        if any(t not in cod for _, t in self.mapping):
            raise InputError("mapping hits a point outside the codomain")

    def as_dict(self) -> Dict[str, str]:
        return dict(self.mapping)

    def is_surjective(self) -> bool:
        return {t for _, t in self.mapping} == set(self.codomain.points)

    def is_injective(self) -> bool:
        targets = [t for _, t in self.mapping]
        return len(set(targets)) == len(targets)


def finite_map(domain: FiniteTopSpace, codomain: FiniteTopSpace,
               assignment: Dict[str, str]) -> FiniteMap:
    try:
        pairs = tuple((p, assignment[p]) for p in domain.points)
    except KeyError as exc:
        raise InputError(f"assignment misses domain point {exc.args[0]!r}") from exc
    return FiniteMap(domain, codomain, pairs)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def decomposition_topology(X: FiniteTopSpace, D: Partition) -> FiniteTopSpace:
    """Space of blocks; a block family is open iff its union is open in X.

    Block points are labelled by their sorted members joined with commas.
    """
    if D.points != X.points:
        raise InputError("partition is over different points")
    block_masks = [X.mask(b) for b in D.blocks]
    labels = [block_label(b) for b in D.blocks]
    opens = set()
    for choice in range(1 << len(block_masks)):
        union = 0
        for i, bm in enumerate(block_masks):
            if choice >> i & 1:
                union |= bm
        if union in X.opens:
            opens.add(choice)
    return space_from_masks(labels, opens)


def is_continuous(f: FiniteMap) -> bool:
    """True iff the preimage of every codomain open is a domain open."""
    src_index = {p: i for i, p in enumerate(f.domain.points)}
    tgt_index = {p: i for i, p in enumerate(f.codomain.points)}
    arrows = [(1 << src_index[s], tgt_index[t]) for s, t in f.mapping]
    for m in f.codomain.opens:
        pre = 0
        for bit, ti in arrows:
            if m >> ti & 1:
                pre |= bit
        if pre not in f.domain.opens:
            return False
    return True


def inverse_map(f: FiniteMap) -> FiniteMap:
    if not (f.is_injective() and f.is_surjective()):
        raise InputError("only bijections invert")
    back = {t: s for s, t in f.mapping}
    return finite_map(f.codomain, f.domain, back)


def is_homeomorphism(f: FiniteMap) -> bool:
    return (f.is_injective() and f.is_surjective()
            and is_continuous(f) and is_continuous(inverse_map(f)))


def fiber_partition(f: FiniteMap) -> Partition:
    """Partition of the domain into preimages of codomain points."""
    if not f.is_surjective():
        raise InputError("fiber partitions are defined for surjections")
    blocks = []
    for y in f.codomain.points:
        fiber = tuple(x for x, t in f.mapping if t == y)
        blocks.append(fiber)
    return Partition(f.domain.points, tuple(blocks))


@dataclass(frozen=True)
class HypothesisResult:
    """Outcome of a verification that also records whether the stated
    hypotheses were actually met (informational when they were not)."""

    holds: bool
    hypothesis_met: bool
    detail: str

    def __bool__(self) -> bool:
        return self.holds


def verify_prop5(X: FiniteTopSpace, D: Partition,
                 reps: Sequence[str]) -> HypothesisResult:
    """Check that the representative-point subspace is homeomorphic to the
    decomposition space via representative -> block.

    Hypothesis: X compact Hausdorff (compactness is automatic here, and a
    finite Hausdorff space is discrete).  With the hypothesis met this must
    always hold, for every choice of representatives.
    """
    if len(reps) != len(D.blocks):
        raise InputError("need exactly one representative per block")
    for r, b in zip(reps, D.blocks):
        if r not in b:
            raise InputError(f"representative {r!r} not in its block {b}")
    hausdorff = is_hausdorff(X)
    Y = subspace(X, list(reps))
    quot = decomposition_topology(X, D)
    h = finite_map(Y, quot, {r: block_label(b) for r, b in zip(reps, D.blocks)})
    ok = is_homeomorphism(h)
    detail = "X is discrete (finite Hausdorff)" if hausdorff else \
        "hypothesis unmet: X is not Hausdorff; result informational"
    return HypothesisResult(ok, hausdorff, detail)


def verify_lemma7(f: FiniteMap) -> HypothesisResult:
    """Check that the decomposition space of the domain by the fibers of a
    continuous surjection is homeomorphic to the codomain via fiber -> y.

    Hypothesis: domain compact (automatic) and codomain Hausdorff.
    """
    if not f.is_surjective():
        raise InputError("map must be surjective")
    if not is_continuous(f):
        raise InputError("map must be continuous")
    hausdorff = is_hausdorff(f.codomain)
    D = fiber_partition(f)
    quot = decomposition_topology(f.domain, D)
    assign = {}
    for y in f.codomain.points:
        fiber = tuple(x for x, t in f.mapping if t == y)
        assign[block_label(fiber)] = y
    h = finite_map(quot, f.codomain, assign)
    ok = is_homeomorphism(h)
    detail = "codomain is discrete (finite Hausdorff)" if hausdorff else \
        "hypothesis unmet: codomain is not Hausdorff; result informational"
    return HypothesisResult(ok, hausdorff, detail)


# ---------------------------------------------------------------------------
# Enumeration (exhaustive suites)
# ---------------------------------------------------------------------------


def all_topologies(points: Sequence[str]) -> List[FiniteTopSpace]:
    """Every topology on the given labelled points, via specialization
    preorders.

    A finite topology corresponds one-to-one with a reflexive transitive
    relation: opens are the successor-closed sets.  Rows are chosen depth
    first with transitivity pruning, so the search stays far below the
    2^(n^2-n) naive bound (355 topologies on 4 points, 6942 on 5).
    """
    pts = tuple(points)
    n = len(pts)
    if n == 0:
        return [space_from_masks(pts, [0])]
    rows: List[int] = []
    found: List[Tuple[int, ...]] = []

    def consistent(i: int) -> bool:
        # transitivity among rows 0..i given row i was just placed
        for a in range(i + 1):
            ra = rows[a]
            closure = ra
            for b in range(i + 1):
                if ra >> b & 1:
                    closure |= rows[b]
            if closure != ra:
                return False
        return True

    def rec(i: int) -> None:
        if i == n:
            found.append(tuple(rows))
            return
        for extra in range(1 << n):
            if extra >> i & 1:
                continue  # bit i is forced on; skip duplicates
            rows.append(extra | (1 << i))
            if consistent(i):
                rec(i + 1)
            rows.pop()

    rec(0)
    spaces = []
    for relation in found:
        opens = []
        for m in range(1 << n):
            if all(not (m >> i & 1 and relation[i] & ~m) for i in range(n)):
                opens.append(m)
        spaces.append(space_from_masks(pts, opens))
    return spaces


def all_partitions(items: Sequence[str]) -> List[Tuple[Tuple[str, ...], ...]]:
    """All set partitions; blocks keep first-occurrence element order."""
    items = list(items)
    if not items:
        return [()]
    head, rest = items[0], items[1:]
    out = []
    for sub in all_partitions(rest):
        out.append(((head,),) + sub)
        for i in range(len(sub)):
            grown = sub[:i] + ((head,) + sub[i],) + sub[i + 1:]
            out.append(grown)
    return out


def all_maps(domain: FiniteTopSpace, codomain: FiniteTopSpace) -> List[FiniteMap]:
    out = []
    for targets in product(codomain.points, repeat=len(domain.points)):
        out.append(FiniteMap(domain, codomain,
                             tuple(zip(domain.points, targets))))
    return out


# ---------------------------------------------------------------------------
# Named spaces & serialization
# ---------------------------------------------------------------------------


def named_space(name: str) -> FiniteTopSpace:
    """Built-in spaces the CLI and docs share: chain3, sierpinski, discreteN."""
    if name == "chain3":
        return space("abc", [[], ["a"], ["a", "b"], ["a", "b", "c"]])
    if name == "sierpinski":
        return space("ab", [[], ["a"], ["a", "b"]])
    if name.startswith("discrete"):
        try:
            n = int(name[len("discrete"):])
        except ValueError:
            raise InputError(f"unknown space {name!r}") from None
        if not 1 <= n <= 8:
            raise InputError("discreteN supports 1 <= N <= 8")
        return discrete_space(tuple("abcdefgh"[:n]))
    raise InputError(f"unknown space {name!r}; try chain3, sierpinski, discreteN")


def space_document(X: FiniteTopSpace) -> dict:
    return {
        "points": list(X.points),
        "opens": [list(ls) for ls in X.open_label_sets()],
    }
