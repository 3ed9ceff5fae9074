"""Nested Cantor-set construction inside concrete Peano continuum models.

Three models ship: the unit interval, the unit square, and a tripod (three
segments joined at (1/2, 1/2)).  Each carries a deterministic subdivision
rule producing, for a cell with two marked points, two disjoint subcells
that contain one marked point each and have diameter strictly below a third
of the marked-point distance.  Iterating the rule yields a binary tree of
cells whose level-n union is a 2^n-cell stage; the limit object (never
materialized) is a Cantor set, and `check_stage_invariants` certifies at
every finite level exactly the facts the limit argument rests on:
disjointness, shrink, marked-point persistence (perfectness), and
closed-complement traces (zero-dimensionality).

The shrink factor is d/4 rather than the minimal d/3: strictness of the
diameter inequality is then automatic and siblings keep a Chebyshev gap of
at least d/2.  Marked points of a child are the lexicographic extremes of
its region, which makes trees fully reproducible; the parent's marked point
is inherited as one of them because each child is anchored at a corner.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Tuple

from .errors import DegenerateInputError, InputError
from .geometry import (
    Address,
    Box,
    Region,
    box_disjoint,
    chebyshev_ball,
    closed_difference,
    diameter,
    distance,
    lexmax_point,
    lexmin_point,
    point_doc,
    rat,
    region,
    region_doc,
    region_intersect,
    region_subset,
)
from .report import CheckReport

MODEL_KINDS = ("interval", "square", "tripod")

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class PeanoModel:
    """A concrete nondegenerate Peano continuum carried as a box region."""

    kind: str
    dim: int
    root: Region


def make_model(kind: str) -> PeanoModel:
    if kind == "interval":
        return PeanoModel("interval", 1, region(Box((rat(0),), (rat(1),))))
    if kind == "square":
        return PeanoModel("square", 2, region(Box((rat(0), rat(0)), (rat(1), rat(1)))))
    if kind == "tripod":
        # three segments sharing the endpoint (1/2, 1/2): left bar, right
        # bar, and a downward leg; carried as degenerate (thin) boxes
        bar_l = Box((rat(0), HALF), (HALF, HALF))
        bar_r = Box((HALF, HALF), (rat(1), HALF))
        leg = Box((HALF, rat(0)), (HALF, HALF))
        return PeanoModel("tripod", 2, region([bar_l, bar_r, leg]))
    raise InputError(f"unknown model kind {kind!r}; expected one of {MODEL_KINDS}")


@dataclass(frozen=True)
class Cell:
    region: Region
    marked: Tuple[tuple, tuple]  # pair of points, lexicographic extremes


@dataclass(frozen=True)
class RefinementTree:
    """The full refinement to a fixed depth: one Cell per binary address.

    Immutable after construction (the cell map is a read-only view), so
    trees are safe for unrestricted concurrent reads.
    """

    model: PeanoModel
    depth: int
    cells: Mapping[str, Cell]

    def level(self, k: int):
        """Addresses of level k in lexicographic order."""
        if not 0 <= k <= self.depth:
            raise InputError(f"level {k} outside tree depth {self.depth}")
        if k == 0:
            return [""]
        return ["".join(bits) for bits in _binary_words(k)]


def _binary_words(n: int):
    words = [[]]
    for _ in range(n):
        words = [w + [b] for w in words for b in ("0", "1")]
    return words


def subdivide(model: PeanoModel, cell: Region, marked: Tuple[tuple, tuple]):
    """One refinement step: two disjoint subcells around the marked points.

    Each child is the cell clipped to the closed Chebyshev ball of radius
    d(m1, m2)/4 around its marked point.  Anchoring at lexicographic
    extremes keeps every child a box (segment, for the tripod) with the
    inherited point at a corner, so its diameter is at most d/4 < d/3 and
    the two children sit at Chebyshev distance >= d/2 from each other.

    Returns ((region1, marked1), (region2, marked2)) where each markedI is
    the pair of lexicographic extremes of regionI.
    """
    m1, m2 = marked
    d = distance(m1, m2)
    if d == 0:
        raise DegenerateInputError("marked points must be distinct")
    if not (cell.contains_point(m1) and cell.contains_point(m2)):
        raise InputError("marked points must lie in the cell being subdivided")
    if not region_subset(cell, model.root):
        raise InputError("cell is not a subcontinuum of the model")
    radius = d / 4
    children = []
    for m in (m1, m2):
        clipped = region_intersect(cell, region(chebyshev_ball(m, radius)))
        if clipped is None:  # unreachable: m itself lies in both sets
            raise DegenerateInputError("empty subdivision cell")
        children.append((clipped, (lexmin_point(clipped), lexmax_point(clipped))))
    return children[0], children[1]


def build_refinement(model: PeanoModel, depth: int) -> RefinementTree:
    """Iterate `subdivide` to the given depth from the model's root.

    Cell at address a*j is built around marked point j of cell a; the root's
    marked points are the lexicographic extremes of the whole model.
    """
    if depth < 0:
        raise InputError("depth must be >= 0")
    root = model.root
    cells = {"": Cell(root, (lexmin_point(root), lexmax_point(root)))}
    frontier = [""]
    for _ in range(depth):
        nxt = []
        for addr in frontier:
            cell = cells[addr]
            (r0, mk0), (r1, mk1) = subdivide(model, cell.region, cell.marked)
            cells[addr + "0"] = Cell(r0, mk0)
            cells[addr + "1"] = Cell(r1, mk1)
            nxt.extend((addr + "0", addr + "1"))
        frontier = nxt
    return RefinementTree(model, depth, MappingProxyType(cells))


def evaluate_address(tree: RefinementTree, a: Address) -> Region:
    """Cell region at a binary address; at full depth this is the tightest
    available enclosure of the limit Cantor set inside that cell."""
    if a.alphabet != 2:
        raise InputError("refinement addresses are binary")
    if len(a) > tree.depth:
        raise InputError(f"address length {len(a)} exceeds tree depth {tree.depth}")
    return tree.cells[str(a)].region


def check_stage_invariants(tree: RefinementTree, level: int) -> CheckReport:
    """Exact certification of one refinement stage.

    (i)   the 2^k level cells are pairwise disjoint;
    (ii)  each cell's diameter is < (its parent's marked distance)/3;
    (iii) perfectness witness: each cell's own marked pair reappears among
          the level-(k+1) marked points inside it, at least two distinct
          marked points lie inside it, and no other cell's marked points
          intrude;
    (iv)  clopen trace: the closure of (level union minus the cell) equals
          the union of the other cells, i.e. each cell's complement within
          its stage is a finite union of closed cells.

    Failures are reported, never raised.
    """
    if not 0 <= level <= tree.depth:
        raise InputError(f"level {level} outside tree depth {tree.depth}")
    addrs = tree.level(level)
    cells = [tree.cells[a] for a in addrs]
    rep = CheckReport(f"{tree.model.kind} depth={tree.depth} level={level}")

    # (i) pairwise disjointness, sweeping along axis 0
    order = sorted(range(len(cells)),
                   key=lambda i: cells[i].region.boxes[0].lo)
    overlap = None
    for pos, i in enumerate(order):
        ri = cells[i].region
        hi0 = max(b.hi[0] for b in ri.boxes)
        for j in order[pos + 1:]:
            rj = cells[j].region
            if min(b.lo[0] for b in rj.boxes) > hi0:
                break
            if not all(box_disjoint(bi, bj)
                       for bi in ri.boxes for bj in rj.boxes):
                overlap = (addrs[i], addrs[j])
                break
        if overlap:
            break
    rep.add("cells_pairwise_disjoint", overlap is None,
            f"{len(cells)} cells" if overlap is None
            else f"cells {overlap[0]!r} and {overlap[1]!r} intersect")

    # (ii) diameter shrink against the parent's marked-point distance
    if level == 0:
        rep.add("diameter_shrink", True, "root level: no parent, vacuous")
    else:
        bad = None
        for a in addrs:
            parent = tree.cells[a[:-1]]
            bound = distance(*parent.marked) / 3
            if not diameter(tree.cells[a].region) < bound:
                bad = a
                break
        rep.add("diameter_shrink", bad is None,
                "dia(cell) < d(parent marks)/3 for all cells" if bad is None
                else f"cell {bad!r} too large")

    # (iii) perfectness witness via the next level's marked points: the
    # marked points found inside a cell are exactly its two children's
    # pairs, include the cell's own pair, and never come from elsewhere
    if level == tree.depth:
        rep.add("perfectness_witness", True,
                "deepest level: no refinement below, vacuous")
    else:
        marks = []  # (axis-0 coordinate, point, owning level-k address)
        for a in addrs:
            for j in "01":
                for p in tree.cells[a + j].marked:
                    marks.append((p[0], p, a))
        marks.sort(key=lambda t: t[0])
        coords = [t[0] for t in marks]
        bad_reason = ""
        for idx, a in enumerate(addrs):
            cell = cells[idx]
            lo0 = min(b.lo[0] for b in cell.region.boxes)
            hi0 = max(b.hi[0] for b in cell.region.boxes)
            inside = [(p, owner)
                      for _, p, owner in marks[bisect_left(coords, lo0):
                                              bisect_right(coords, hi0)]
                      if cell.region.contains_point(p)]
            pts = {p for p, _ in inside}
            if any(owner != a for _, owner in inside):
                bad_reason = f"cell {a!r} contains a foreign marked point"
                break
            if not set(cell.marked) <= pts:
                bad_reason = f"cell {a!r} lost a marked point"
                break
            if len(pts) < 2:
                bad_reason = f"cell {a!r} holds fewer than two marked points"
                break
        rep.add("perfectness_witness", not bad_reason,
                bad_reason or "marked pairs persist, no intrusions")

    # (iv) clopen trace: closure(level union minus cell) = other cells.
    # Boxes whose bounding box avoids the cell pass through both sides
    # untouched, so only the boxes near the cell need exact subtraction.
    level_entries = [(j, b) for j, c in enumerate(cells)
                     for b in c.region.boxes]
    dim = tree.model.dim
    bad_reason = ""
    for idx, a in enumerate(addrs):
        cboxes = cells[idx].region.boxes
        clo = tuple(min(b.lo[ax] for b in cboxes) for ax in range(dim))
        chi = tuple(max(b.hi[ax] for b in cboxes) for ax in range(dim))
        window = [(j, b) for j, b in level_entries
                  if not any(b.lo[ax] > chi[ax] or b.hi[ax] < clo[ax]
                             for ax in range(dim))]
        diff_near = closed_difference([b for _, b in window], cboxes)
        expect_near = [b for j, b in window if j != idx]
        if sorted(diff_near, key=Box.sort_key) != \
                sorted(expect_near, key=Box.sort_key):
            bad_reason = f"complement of cell {a!r} is not the other cells"
            break
    rep.add("clopen_trace", not bad_reason,
            bad_reason or "each complement is a finite union of closed cells")
    return rep


def tree_document(tree: RefinementTree) -> dict:
    """Deterministic single-document serialization (golden-file stable)."""
    addrs = sorted(tree.cells, key=lambda a: (len(a), a))
    return {
        "model": tree.model.kind,
        "depth": tree.depth,
        "cells": [
            {
                "address": a,
                "region": region_doc(tree.cells[a].region),
                "marked_points": [point_doc(p) for p in tree.cells[a].marked],
            }
            for a in addrs
        ],
    }
