"""Primitive-chaos systems: event families with exact piecewise-affine laws,
witness realization for finite event words, and chaos-property certificates.

A system is a triple (space, events, laws): closed event regions X_0..X_k-1
covering the working space, and one exact affine branch f_i: X_i -> space
per event.  Four systems ship:

* ``shift_cantor``: the full shift on the middle-third model, events are the
  depth-1 cylinders and the branches stretch them back over the space;
* ``doubling``: x -> 2x mod 1 with events [0,1/2], [1/2,1];
* ``tent``: 2x on the left event, 2-2x on the right;
* ``baker``: the two-dimensional baker transformation on vertical half
  squares.

Events are closed and overlap at branch boundaries; witnesses only ever
need membership, and the midpoint selection keeps them in cell interiors
whenever the enclosure has positive width.  The working space is the union
of the events, which for the Cantor shift is the depth-1 enclosure of the
ideal space: everything here certifies finite stages, never the limit.

`realize_witness` computes the set of initial points whose orbit follows a
given event word by exact backward preimage propagation; its nonemptiness
for every word is the finite-stage content of the defining property of
primitive chaos, and nesting of these enclosures under word extension is
the shadow of the infinite-sequence statement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence, Tuple, Union

from .errors import ConstructionError, InputError, InternalConsistencyError
from .geometry import (
    Address,
    Box,
    Region,
    first_box_midpoint,
    point_doc,
    rat,
    rational_str,
    region,
    region_doc,
    region_intersect,
)
from .report import CheckReport

SYSTEM_KINDS = ("shift_cantor", "doubling", "tent", "baker")

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class AffineBranch:
    """Diagonal affine law: coordinate i maps to a_i * x_i + b_i."""

    coeffs: Tuple[Tuple[Fraction, Fraction], ...]  # (a, b) per axis

    def apply(self, p: tuple) -> tuple:
        return tuple(a * c + b for (a, b), c in zip(self.coeffs, p))

    def preimage_box(self, b: Box) -> Box:
        lo = []
        hi = []
        for (a, off), l, h in zip(self.coeffs, b.lo, b.hi):
            x = (l - off) / a
            y = (h - off) / a
            if x > y:
                x, y = y, x
            lo.append(x)
            hi.append(y)
        return Box(tuple(lo), tuple(hi))

    def preimage(self, r: Region) -> Region:
        return region([self.preimage_box(b) for b in r.boxes])


@dataclass(frozen=True)
class ChaosSystem:
    """Space model, event family, and one exact affine law per event."""

    kind: str
    events: Tuple[Region, ...]
    branches: Tuple[AffineBranch, ...]
    space: Region

    @property
    def alphabet(self) -> int:
        return len(self.events)

    @property
    def dim(self) -> int:
        return self.space.dim

    def event_of(self, p: tuple) -> int:
        for i, ev in enumerate(self.events):
            if ev.contains_point(p):
                return i
        raise InputError(f"point {p} lies outside every event")

    def step(self, p: tuple) -> tuple:
        """Total map: apply the law of the first event containing the point."""
        return self.branches[self.event_of(p)].apply(p)


def make_system(kind: str) -> ChaosSystem:
    if kind == "shift_cantor":
        events = (region(Box((ZERO,), (Fraction(1, 3),))),
                  region(Box((Fraction(2, 3),), (ONE,))))
        branches = (AffineBranch(((rat(3), ZERO),)),
                    AffineBranch(((rat(3), rat(-2)),)))
    elif kind == "doubling":
        events = (region(Box((ZERO,), (HALF,))),
                  region(Box((HALF,), (ONE,))))
        branches = (AffineBranch(((rat(2), ZERO),)),
                    AffineBranch(((rat(2), rat(-1)),)))
    elif kind == "tent":
        events = (region(Box((ZERO,), (HALF,))),
                  region(Box((HALF,), (ONE,))))
        branches = (AffineBranch(((rat(2), ZERO),)),
                    AffineBranch(((rat(-2), rat(2)),)))
    elif kind == "baker":
        events = (region(Box((ZERO, ZERO), (HALF, ONE))),
                  region(Box((HALF, ZERO), (ONE, ONE))))
        branches = (AffineBranch(((rat(2), ZERO), (HALF, ZERO))),
                    AffineBranch(((rat(2), rat(-1)), (HALF, HALF))))
    else:
        raise InputError(f"unknown system {kind!r}; expected one of {SYSTEM_KINDS}")
    space = region([b for ev in events for b in ev.boxes])
    return ChaosSystem(kind, events, branches, space)


def _as_word(word: Union[str, Address], alphabet: int) -> Tuple[int, ...]:
    if isinstance(word, Address):
        syms = word.symbols
    else:
        try:
            syms = tuple(int(ch) for ch in word)
        except ValueError as exc:
            raise InputError(f"word must be a digit string, got {word!r}") from exc
    if any(not 0 <= s < alphabet for s in syms):
        raise InputError(f"word {word!s} has symbols outside 0..{alphabet - 1}")
    return syms


@dataclass(frozen=True)
class WitnessResult:
    """A realized finite event word: enclosure, chosen witness, exact orbit."""

    system: str
    word: str
    enclosure: Region
    witness: tuple
    orbit: Tuple[tuple, ...]

    def to_document(self) -> dict:
        return {
            "system": self.system,
            "word": self.word,
            "enclosure": region_doc(self.enclosure),
            "witness": point_doc(self.witness),
            "orbit": [point_doc(p) for p in self.orbit],
        }


def word_enclosure(s: ChaosSystem, word: Union[str, Address]) -> Region:
    """Exact region of initial points whose orbit follows the event word:
    K = X_{w0} cap f_{w0}^-1(X_{w1} cap f_{w1}^-1(...))."""
    syms = _as_word(word, s.alphabet)
    K = s.space
    for sym in reversed(syms):
        K = region_intersect(s.events[sym], s.branches[sym].preimage(K))
        if K is None:
            raise InternalConsistencyError(
                f"empty witness set for word {word!s} on {s.kind}")
    return K


def realize_witness(s: ChaosSystem, word: Union[str, Address]) -> WitnessResult:
    """Realize a finite event word: nonempty enclosure, witness point, and
    the exact forward orbit, with event membership verified exactly."""
    syms = _as_word(word, s.alphabet)
    if not syms:
        raise InputError("word must be nonempty")
    K = word_enclosure(s, word)
    witness = first_box_midpoint(K)
    orbit = [witness]
    for sym in syms[:-1]:
        orbit.append(s.branches[sym].apply(orbit[-1]))
    for p, sym in zip(orbit, syms):
        if not s.events[sym].contains_point(p):
            raise InternalConsistencyError(
                f"orbit point {p} escapes event {sym} on {s.kind}")
    return WitnessResult(s.kind, "".join(str(x) for x in syms),
                         K, witness, tuple(orbit))


# ---------------------------------------------------------------------------
# Periodic points
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PeriodicOrbit:
    """Exact periodic point with a divisor-minimality certificate."""

    point: tuple
    prime_period: int
    word: str  # the primitive word actually used
    orbit: Tuple[tuple, ...]
    reduced_from: Optional[str] = None  # set when the input was a power

    def __iter__(self):
        return iter((self.point, self.prime_period))

    def to_document(self) -> dict:
        doc = {
            "point": point_doc(self.point),
            "prime_period": self.prime_period,
            "word": self.word,
            "orbit": [point_doc(p) for p in self.orbit],
        }
        if self.reduced_from is not None:
            doc["reduced_from"] = self.reduced_from
        return doc


def _primitive_root(syms: Tuple[int, ...]) -> Tuple[int, ...]:
    n = len(syms)
    for p in range(1, n + 1):
        if n % p == 0 and syms[:p] * (n // p) == syms:
            return syms[:p]
    return syms


def periodic_point(s: ChaosSystem, word: Union[str, Address]) -> PeriodicOrbit:
    """Exact fixed point of the affine branch composition along the word.

    Words that are powers of a shorter word are reduced to the primitive
    root (and the reduction is reported).  The certificate checks that the
    orbit follows the word cyclically and that no proper divisor of the
    length is a period.
    """
    syms = _as_word(word, s.alphabet)
    if not syms:
        raise InputError("word must be nonempty")
    prim = _primitive_root(syms)
    reduced_from = None if prim == syms else "".join(str(x) for x in syms)
    m = len(prim)
    dim = s.dim
    point = []
    for axis in range(dim):
        a, b = ONE, ZERO
        for sym in prim:
            a2, b2 = s.branches[sym].coeffs[axis]
            a, b = a2 * a, a2 * b + b2
        if a == 1:
            raise ConstructionError("branch composition is a translation; "
                                    "no fixed point")
        point.append(b / (1 - a))
    point_t = tuple(point)
    orbit = [point_t]
    for sym in prim:
        orbit.append(s.branches[sym].apply(orbit[-1]))
    closes = orbit[m] == orbit[0]
    in_cells = all(s.events[sym].contains_point(p)
                   for p, sym in zip(orbit, prim))
    if not (closes and in_cells):
        raise ConstructionError(
            f"no periodic point follows word {word!s} on {s.kind}")
    for d in range(1, m):
        if m % d == 0 and orbit[d] == orbit[0]:
            raise ConstructionError(
                f"period collapses to divisor {d}; word is not primitive")
    return PeriodicOrbit(point_t, m, "".join(str(x) for x in prim),
                         tuple(orbit[:m]), reduced_from)


# ---------------------------------------------------------------------------
# Chaos-property certificates
# ---------------------------------------------------------------------------


def dense_orbit_word(depth: int) -> Address:
    """Concatenation of every binary word of length 1..depth in
    lexicographic order; the realized witness's orbit visits every
    depth-`depth` event cell."""
    if depth < 1:
        raise InputError("depth must be >= 1")
    parts = []
    for length in range(1, depth + 1):
        for bits in product("01", repeat=length):
            parts.append("".join(bits))
    return Address.from_string("".join(parts))


def verify_dense_orbit(s: ChaosSystem, depth: int) -> CheckReport:
    """Realize the dense word and certify the orbit enters every depth-d
    event cell, by exact membership in each cell's enclosure."""
    if s.alphabet != 2:
        raise InputError("dense-orbit words are built over a binary alphabet")
    word = str(dense_orbit_word(depth))
    res = realize_witness(s, word)
    rep = CheckReport(f"{s.kind} dense orbit, depth {depth}, |word| = {len(word)}")
    missing = []
    for bits in product("01", repeat=depth):
        u = "".join(bits)
        i = word.find(u)
        cell = word_enclosure(s, u)
        if i < 0 or i + depth > len(word) or not cell.contains_point(res.orbit[i]):
            missing.append(u)
    rep.add("visits_every_cell", not missing,
            f"all {2 ** depth} depth-{depth} cells visited" if not missing
            else f"missed cells: {missing}")
    return rep


def _sensitivity_samples(s: ChaosSystem, samples: int) -> List[tuple]:
    if s.kind == "shift_cantor":
        # points of the Cantor model itself: ternary digits 2*bit of the
        # sample index, so orbits stay inside the event union
        width = max(2, samples.bit_length())
        out = []
        for j in range(1, samples + 1):
            bits = format(j % (1 << width), f"0{width}b")
            x = ZERO
            scale = ONE
            for bit in bits:
                scale /= 3
                if bit == "1":
                    x += 2 * scale
            out.append((x,))
        return out
    return [(Fraction(j, samples + 1),) for j in range(1, samples + 1)]


def _sensitivity_partners(s: ChaosSystem, x: Fraction,
                          delta: Fraction) -> List[tuple]:
    if s.kind == "shift_cantor":
        k = 1
        while 2 * Fraction(1, 3 ** k) > delta:
            k += 1
        step = 2 * Fraction(1, 3 ** k)
        digit = (x.numerator * 3 ** k // x.denominator) % 3
        y = x - step if digit == 2 else x + step
        return [(y,)]
    cands = []
    for frac in (ONE, HALF, Fraction(3, 4)):
        for sign in (1, -1):
            y = x + sign * delta * frac
            if ZERO <= y <= ONE and y != x:
                cands.append((y,))
    return cands


def sensitivity_check(s: ChaosSystem, delta: Fraction, samples: int,
                      constant: Fraction = Fraction(1, 4),
                      points: Optional[Sequence[tuple]] = None) -> CheckReport:
    """Sensitive dependence witness hunt: for each sample point, find a
    partner within delta whose orbit separates to at least `constant`
    within the bit budget.  Reports the worst number of steps needed.

    Samples are generated deterministically per system; pass `points` to
    check specific initial conditions instead."""
    if s.dim != 1:
        raise InputError("sensitivity check ships for 1-d systems")
    delta = rat(delta)
    if delta <= 0:
        raise InputError("delta must be positive")
    if samples < 1 and not points:
        raise InputError("need at least one sample")
    budget = max(1, (ONE / delta).numerator.bit_length()) + 8
    sample_pts = [tuple(rat(c) for c in p) for p in points] if points \
        else _sensitivity_samples(s, samples)
    rep = CheckReport(f"{s.kind} sensitivity, delta {rational_str(delta)}, "
                      f"{len(sample_pts)} samples, constant {rational_str(constant)}")
    worst = 0
    failed = None
    for x in sample_pts:
        sep_at = None
        for y in _sensitivity_partners(s, x[0], delta):
            px, py = x, y
            for n in range(1, budget + 1):
                px = s.step(px)
                py = s.step(py)
                if abs(px[0] - py[0]) >= constant:
                    sep_at = n if sep_at is None else min(sep_at, n)
                    break
            if sep_at is not None:
                break
        if sep_at is None:
            failed = x
            break
        worst = max(worst, sep_at)
    rep.add("orbits_separate", failed is None,
            f"worst separation step n = {worst} <= budget {budget}"
            if failed is None else
            f"sample {point_doc(failed)} never separated within {budget} steps")
    return rep


def transitivity_check(s: ChaosSystem, depth: int) -> CheckReport:
    """For every ordered pair (u, v) of depth-d event cells, realize u·v and
    certify the witness starts in cell u and lands in cell v after exactly
    d steps.  Exhaustive over all pairs."""
    if not 1 <= depth <= 12:
        raise InputError("transitivity depth must be in 1..12")
    words = ["".join(str(b) for b in bits)
             for bits in product(range(s.alphabet), repeat=depth)]
    cells = {u: word_enclosure(s, u) for u in words}
    rep = CheckReport(f"{s.kind} transitivity, depth {depth}, "
                      f"{len(words) ** 2} ordered pairs")
    bad = None
    for u in words:
        for v in words:
            res = realize_witness(s, u + v)
            x0 = res.witness
            xd = res.orbit[depth]  # orbit has 2*depth points
            if not (cells[u].contains_point(x0) and cells[v].contains_point(xd)):
                bad = (u, v)
                break
        if bad:
            break
    rep.add("all_pairs_connected", bad is None,
            f"{len(words) ** 2} pairs connected in exactly {depth} steps"
            if bad is None else f"pair {bad} failed")
    return rep
