"""
Exhaustive witness search over finite search spaces.

A search space is an ordered list of candidate elements together with bit
masks describing membership in the ideal and its radical. Bit ``i`` of a mask
stands for candidate ``i``; candidates are ordered so that scanning tuples in
row-major order yields the lexicographically minimal witness.

Two spaces live here:

* ``KeySpace`` reduces Z/n, Z, Z[1/s], Z_(p) and binary products to gcd
  classes. Membership in ``dR`` and its radical depends only on
  ``gcd(a, N)``, and ``gcd(ab, N) = gcd(gcd(a, N) gcd(b, N), N)``, so the
  classes form a finite multiplicative monoid on which every predicate can be
  decided exactly.
* ``ElementSpace`` enumerates the elements of a finite ring and only uses the
  public membership API. It is the brute-force reference for ``KeySpace``.
"""

from abc import ABC, abstractmethod
from itertools import product as cartesian
from math import gcd
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from app.errors import UnsupportedOperationError
from app.ideals.ideal import Ideal, contains
from app.ideals.operations import radical_contains_by_powers
from app.rings.factor import divisors, squarefree_kernel
from app.rings.handles import Backend, Element, RingHandle
from app.rings.residues import nonunit_lift
from app.rings.structure import is_unit
from app.utils.helpers import chunk_range, parallel_map

Witness = Tuple[int, ...]
Finder = Callable[["SearchSpace", range], Optional[Witness]]


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class SearchSpace(ABC):
    """Ordered candidates of one ideal's ring with membership masks."""

    size: int
    everything: int
    nonunits: int
    in_ideal: int
    in_radical: int

    @abstractmethod
    def pair_in_ideal(self, i: int) -> int:
        """Mask of ``j`` with ``x_i x_j`` in the ideal."""

    @abstractmethod
    def pair_in_radical(self, i: int) -> int:
        """Mask of ``j`` with ``x_i x_j`` in the radical."""

    @abstractmethod
    def triple_in_ideal(self, i: int, j: int) -> int:
        """Mask of ``k`` with ``x_i x_j x_k`` in the ideal."""

    @abstractmethod
    def element(self, i: int, nonunit: bool = False) -> Element:
        """Canonical element of candidate ``i``; a nonunit member when asked."""

    def describe(self) -> str:
        return f"{self.size} classes"


def _rows(mask: int, rows: range) -> Iterator[int]:
    for i in rows:
        if mask >> i & 1:
            yield i


def find_prime_witness(space: SearchSpace, rows: range) -> Optional[Witness]:
    outside = space.everything & ~space.in_ideal
    for i in _rows(outside, rows):
        hits = space.pair_in_ideal(i) & outside
        if hits:
            return i, lowest(hits)
    return None


def find_primary_witness(space: SearchSpace, rows: range) -> Optional[Witness]:
    outside = space.everything & ~space.in_ideal
    not_radical = space.everything & ~space.in_radical
    for i in _rows(outside, rows):
        hits = space.pair_in_ideal(i) & not_radical
        if hits:
            return i, lowest(hits)
    return None


def find_one_absorbing_witness(space: SearchSpace, rows: range) -> Optional[Witness]:
    allowed = space.nonunits
    not_radical = allowed & ~space.in_radical
    for i in _rows(allowed, rows):
        for j in bits(allowed & ~space.pair_in_ideal(i)):
            hits = space.triple_in_ideal(i, j) & not_radical
            if hits:
                return i, j, lowest(hits)
    return None


def find_two_absorbing_primary_witness(space: SearchSpace, rows: range) -> Optional[Witness]:
    every = space.everything
    for i in _rows(every, rows):
        pair_i = space.pair_in_ideal(i)
        rad_i = space.pair_in_radical(i)
        for j in bits(every & ~pair_i):
            hits = space.triple_in_ideal(i, j) & every & ~rad_i & ~space.pair_in_radical(j)
            if hits:
                return i, j, lowest(hits)
    return None


def find_two_absorbing_witness(space: SearchSpace, rows: range) -> Optional[Witness]:
    every = space.everything
    for i in _rows(every, rows):
        pair_i = space.pair_in_ideal(i)
        for j in bits(every & ~pair_i):
            hits = space.triple_in_ideal(i, j) & every & ~pair_i & ~space.pair_in_ideal(j)
            if hits:
                return i, j, lowest(hits)
    return None


def search(space: SearchSpace, finder: Finder, threads: int = 1) -> Optional[Witness]:
    """Run ``finder`` over contiguous blocks of the first coordinate.

    Blocks are ascending, so the first block reporting a hit holds the
    globally minimal witness whatever the thread count.
    """
    blocks = chunk_range(space.size, threads)
    results = parallel_map(lambda rows: finder(space, rows), blocks, threads)
    for hit in results:
        if hit is not None:
            return hit
    return None


class _Cyclic:
    """Classes ``gcd(a, N)`` of a cyclic quotient with ideal generator ``d | N``."""

    def __init__(self, ring: RingHandle, modulus: int, ideal_modulus: int):
        self.ring = ring
        self.modulus = modulus
        self.ideal_modulus = ideal_modulus
        self.kernel = squarefree_kernel(ideal_modulus)
        # the class of 0 is gcd(0, N) = N and comes first
        self.keys = [modulus] + [g for g in divisors(modulus) if g != modulus]
        self.all_nonunit = ring.backend in (Backend.INT, Backend.INT_INV) or modulus == 1

    def mul(self, g: int, h: int) -> int:
        return gcd(g * h, self.modulus)

    def in_ideal(self, g: int) -> bool:
        return g % self.ideal_modulus == 0

    def in_radical(self, g: int) -> bool:
        return g % self.kernel == 0

    def has_nonunit(self, g: int) -> bool:
        return self.all_nonunit or g != 1

    def lift(self, g: int, nonunit: bool) -> Element:
        residue = 0 if g == self.modulus else g
        if nonunit and self.ring.backend != Backend.ZMOD:
            return self.ring.element(nonunit_lift(self.ring, self.modulus, residue))
        return self.ring.element(residue)


class _Domain:
    """Zero and nonzero classes for the zero ideal of an integral domain."""

    keys = [0, 1]

    def __init__(self, ring: RingHandle):
        self.ring = ring

    def mul(self, g: int, h: int) -> int:
        return g & h

    def in_ideal(self, g: int) -> bool:
        return g == 0

    in_radical = in_ideal

    def has_nonunit(self, g: int) -> bool:
        return True

    def lift(self, g: int, nonunit: bool) -> Element:
        if g == 0:
            return self.ring.zero()
        if not nonunit:
            return self.ring.one()
        return self.ring.element(_least_nonunit(self.ring))


def _least_nonunit(ring: RingHandle) -> int:
    if ring.backend == Backend.INT_LOC:
        return ring.param
    n = 2
    while is_unit(ring, ring.element(n)):
        n += 1
    return n


def _component(ideal: Ideal):
    ring = ideal.ring
    backend = ring.backend
    if backend == Backend.ZMOD:
        return _Cyclic(ring, ring.param, ideal.payload)
    if backend in (Backend.INT, Backend.INT_INV, Backend.INT_LOC):
        if ideal.is_zero:
            return _Domain(ring)
        return _Cyclic(ring, ideal.modulus, ideal.modulus)
    raise UnsupportedOperationError(f"no class reduction for ideals of {ring}")


class KeySpace(SearchSpace):
    """Gcd-class reduction of an ideal's ring (products class by class)."""

    def __init__(self, ideal: Ideal):
        self.ideal = ideal
        self.ring = ideal.ring
        parts = ideal.payload if self.ring.backend == Backend.PROD else (ideal,)
        self.components = [_component(p) for p in parts]
        self.keys: List[Tuple[int, ...]] = list(cartesian(*(c.keys for c in self.components)))
        index = {k: i for i, k in enumerate(self.keys)}
        self.size = len(self.keys)
        self.everything = (1 << self.size) - 1

        in_ideal = [all(c.in_ideal(g) for c, g in zip(self.components, k)) for k in self.keys]
        in_radical = [all(c.in_radical(g) for c, g in zip(self.components, k)) for k in self.keys]
        self.in_ideal = _mask(in_ideal)
        self.in_radical = _mask(in_radical)
        self.nonunits = _mask(
            [any(c.has_nonunit(g) for c, g in zip(self.components, k)) for k in self.keys]
        )

        self._mul = [
            [index[tuple(c.mul(a, b) for c, a, b in zip(self.components, k, h))] for h in self.keys]
            for k in self.keys
        ]
        self._pair_ideal = [_mask([in_ideal[p] for p in row]) for row in self._mul]
        self._pair_radical = [_mask([in_radical[p] for p in row]) for row in self._mul]
        logger.debug(f"class reduction of {ideal} in {self.ring}: {self.size} classes")

    def pair_in_ideal(self, i: int) -> int:
        return self._pair_ideal[i]

    def pair_in_radical(self, i: int) -> int:
        return self._pair_radical[i]

    def triple_in_ideal(self, i: int, j: int) -> int:
        return self._pair_ideal[self._mul[i][j]]

    def element(self, i: int, nonunit: bool = False) -> Element:
        key = self.keys[i]
        parts = [c.lift(g, False) for c, g in zip(self.components, key)]
        if len(parts) == 1:
            return self.components[0].lift(key[0], nonunit)
        if nonunit and all(is_unit(p.ring, p) for p in parts):
            for pos, (c, g) in enumerate(zip(self.components, key)):
                if c.has_nonunit(g):
                    parts[pos] = c.lift(g, True)
                    break
        return self.ring.element(tuple(p.value for p in parts))

    def describe(self) -> str:
        return f"{self.size} residue classes"


class ElementSpace(SearchSpace):
    """All elements of a finite ring, membership through the public ideal API."""

    def __init__(self, ideal: Ideal):
        ring = ideal.ring
        if not ring.is_finite:
            raise UnsupportedOperationError(f"{ring} cannot be enumerated")
        self.ideal = ideal
        self.elements: List[Element] = list(ring.elements())
        index = {e.value: i for i, e in enumerate(self.elements)}
        self.size = len(self.elements)
        self.everything = (1 << self.size) - 1

        in_ideal = [contains(ideal, e) for e in self.elements]
        in_radical = [radical_contains_by_powers(ideal, e) for e in self.elements]
        self.in_ideal = _mask(in_ideal)
        self.in_radical = _mask(in_radical)
        self.nonunits = _mask([not is_unit(ring, e) for e in self.elements])

        self._mul = [[index[(a * b).value] for b in self.elements] for a in self.elements]
        self._pair_ideal = [_mask([in_ideal[p] for p in row]) for row in self._mul]
        self._pair_radical = [_mask([in_radical[p] for p in row]) for row in self._mul]

    def pair_in_ideal(self, i: int) -> int:
        return self._pair_ideal[i]

    def pair_in_radical(self, i: int) -> int:
        return self._pair_radical[i]

    def triple_in_ideal(self, i: int, j: int) -> int:
        return self._pair_ideal[self._mul[i][j]]

    def element(self, i: int, nonunit: bool = False) -> Element:
        return self.elements[i]

    def describe(self) -> str:
        return f"{self.size} elements"


def _mask(flags: Sequence[bool]) -> int:
    mask = 0
    for i, flag in enumerate(flags):
        if flag:
            mask |= 1 << i
    return mask
