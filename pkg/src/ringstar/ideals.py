"""Ideals as bit masks over element indices, the full ideal lattice, radicals,
and primality/primary tests."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

from .errors import ResourceCapError, RingError
from .rings import FiniteRing, _bits

DEFAULT_LATTICE_CAP = 4096


@dataclass(frozen=True)
class Ideal:
    """An ideal of ``ring``; bit ``i`` of ``mask`` is set iff element ``i`` is a member."""

    ring: FiniteRing = field(repr=False)
    mask: int

    @property
    def members(self) -> tuple[int, ...]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, x: int) -> bool:
        return bool((self.mask >> x) & 1)

    def __le__(self, other: "Ideal") -> bool:
        _same_ring(self, other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Ideal") -> bool:
        return self <= other and self.mask != other.mask

    @property
    def is_unit(self) -> bool:
        return self.mask == self.ring.full_mask

    @property
    def sort_key(self) -> tuple[int, int]:
        return (len(self), self.mask)

    def generators(self) -> tuple[int, ...]:
        """Greedy generating set: scan members ascending, keep those not yet generated."""
        R = self.ring
        gens, acc = [], 1 << R.zero
        for x in self.members:
            if not (acc >> x) & 1:
                gens.append(x)
                acc = _add_principal(R, acc, R.principal_masks[x])
        return tuple(gens) if gens else (R.zero,)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.generators())) + ")"

    def to_list(self) -> list[int]:
        return list(self.members)


def _same_ring(*ideals: Ideal) -> FiniteRing:
    R = ideals[0].ring
    for I in ideals[1:]:
        if I.ring is not R:
            raise RingError("ideals belong to different rings")
    return R


def _add_principal(R: FiniteRing, base: int, other: int) -> int:
    """Sum of two ideals given as masks: union of the cosets ``base + p``."""
    acc = base
    base_members = _bits(base)
    add = R.add
    rest = other & ~acc
    while rest:
        low = rest & -rest
        p = low.bit_length() - 1
        for m in base_members:
            acc |= 1 << add[m][p]
        rest = other & ~acc
    return acc


def is_ideal_mask(R: FiniteRing, mask: int) -> bool:
    if not (mask >> R.zero) & 1:
        return False
    members = _bits(mask)
    for a in members:
        if not (mask >> R.neg[a]) & 1:
            return False
        row = R.add[a]
        for b in members:
            if not (mask >> row[b]) & 1:
                return False
        # closed under R * a
        if R.principal_masks[a] & ~mask:
            return False
    return True


def make_ideal(R: FiniteRing, members: Iterable[int]) -> Ideal:
    mask = R.mask_of(members)
    if not is_ideal_mask(R, mask):
        raise RingError("membership set is not an ideal")
    return Ideal(R, mask)


def generate_ideal(R: FiniteRing, gens: Iterable[int]) -> Ideal:
    """Least ideal containing ``gens``."""
    acc = 1 << R.zero
    for g in sorted(set(gens)):
        if not 0 <= g < R.order:
            raise RingError(f"element {g} is not in {R.label}")
        if not (acc >> g) & 1:
            acc = _add_principal(R, acc, R.principal_masks[g])
    return Ideal(R, acc)


def zero_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, 1 << R.zero)


def unit_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, R.full_mask)


@dataclass(frozen=True, eq=False)
class IdealLattice:
    """All ideals of ``ring`` in canonical order (cardinality, then mask value)."""

    ring: FiniteRing
    ideals: tuple[Ideal, ...]
    _pos: dict = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def __getitem__(self, i: int) -> Ideal:
        return self.ideals[i]

    def index(self, I: Ideal) -> int:
        return self._pos[I.mask]

    def contains_mask(self, mask: int) -> bool:
        return mask in self._pos

    @property
    def masks(self) -> list[int]:
        return [I.mask for I in self.ideals]


_LATTICES: dict[int, tuple[FiniteRing, IdealLattice]] = {}


def enumerate_ideals(R: FiniteRing, cap: int = DEFAULT_LATTICE_CAP) -> IdealLattice:
    """Every ideal of ``R``: principal ideals closed under sums with principals.

    Every ideal of a finite ring is a finite sum of principal ideals, so adding
    one principal at a time from the principal seeds reaches all of them.
    """
    hit = _LATTICES.get(id(R))
    if hit is not None and hit[0] is R and len(hit[1]) <= cap:
        return hit[1]
    principals = sorted(set(R.principal_masks))
    seen = set(principals)
    frontier = list(principals)

    def over_cap():
        return ResourceCapError(f"{R.label}: ideal lattice exceeds cap of {cap} ideals")

    if len(seen) > cap:
        raise over_cap()
    while frontier:
        nxt = []
        for base in frontier:
            for p in principals:
                if p & ~base == 0:
                    continue
                s = _add_principal(R, base, p)
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
                    if len(seen) > cap:
                        raise over_cap()
        frontier = nxt
    ordered = sorted(seen, key=lambda m: (bin(m).count("1"), m))
    lat = IdealLattice(R, tuple(Ideal(R, m) for m in ordered), {m: i for i, m in enumerate(ordered)})
    if len(_LATTICES) > 2048:
        _LATTICES.clear()
    _LATTICES[id(R)] = (R, lat)
    return lat


def radical_mask(R: FiniteRing, mask: int) -> int:
    pm = R.power_masks
    return sum(1 << x for x in R.elements if pm[x] & mask)


def radical(I: Ideal) -> Ideal:
    """Elements with some power (exponent at most |R|) in ``I``."""
    return Ideal(I.ring, radical_mask(I.ring, I.mask))


def intersect(ideals: Sequence[Ideal], ring: FiniteRing | None = None) -> Ideal:
    """Meet of a family; the empty family meets to the unit ideal of ``ring``."""
    if not ideals:
        if ring is None:
            raise RingError("empty intersection needs the ambient ring")
        return unit_ideal(ring)
    R = _same_ring(*ideals)
    if ring is not None and ring is not R:
        raise RingError("ideals belong to different rings")
    return Ideal(R, reduce(lambda a, b: a & b, (I.mask for I in ideals)))


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    R = _same_ring(I, J)
    return Ideal(R, _add_principal(R, I.mask, J.mask))


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    R = _same_ring(I, J)
    return generate_ideal(R, {R.mul[a][b] for a in I.members for b in J.members})


def prime_witness(I: Ideal) -> tuple[int, int] | None:
    """Least ``(a, b)`` with ``ab`` in ``I`` but neither factor in ``I``."""
    R, m = I.ring, I.mask
    outside = [x for x in R.elements if not (m >> x) & 1]
    for a in outside:
        row = R.mul[a]
        for b in outside:
            if (m >> row[b]) & 1:
                return (a, b)
    return None


def is_prime(I: Ideal) -> bool:
    return not I.is_unit and prime_witness(I) is None


def is_maximal(I: Ideal) -> bool:
    if I.is_unit:
        return False
    lat = enumerate_ideals(I.ring)
    return not any(I < J and not J.is_unit for J in lat)


def is_radical_ideal(I: Ideal) -> bool:
    return radical_mask(I.ring, I.mask) == I.mask


def is_idempotent(I: Ideal) -> bool:
    return ideal_product(I, I).mask == I.mask


def primary_witness(I: Ideal) -> tuple[int, int] | None:
    """Least ``(a, b)`` with ``ab`` in ``I``, ``a`` not in ``I``, ``b`` not in the radical."""
    R, m = I.ring, I.mask
    rad = radical_mask(R, m)
    for a in R.elements:
        if (m >> a) & 1:
            continue
        row = R.mul[a]
        for b in R.elements:
            if not (rad >> b) & 1 and (m >> row[b]) & 1:
                return (a, b)
    return None


def is_primary(I: Ideal) -> bool:
    return not I.is_unit and primary_witness(I) is None


@dataclass(frozen=True)
class PrimaryDecomposition:
    """``target`` as an irredundant intersection of primary ``components``.

    Irredundant only: the component count need not be minimal.
    """

    target: Ideal
    components: tuple[Ideal, ...]

    def verify(self) -> bool:
        R = self.target.ring
        comps = self.components
        if intersect(comps, R).mask != self.target.mask:
            return False
        if not all(is_primary(Q) for Q in comps):
            return False
        for i in range(len(comps)):
            rest = comps[:i] + comps[i + 1:]
            if intersect(rest, R).mask == self.target.mask:
                return False
        return True


class DecompositionError(RuntimeError):
    pass


def primary_decomposition(I: Ideal) -> PrimaryDecomposition:
    """Intersect every primary ideal containing ``I``, then prune in lattice order."""
    if I.is_unit:
        raise RingError("primary decomposition needs a proper ideal")
    R = I.ring
    lat = enumerate_ideals(R)
    comps = [Q for Q in lat if I <= Q and is_primary(Q)]
    if intersect(comps, R).mask != I.mask:
        raise DecompositionError(f"{R.label}: primary ideals over {I} do not meet in it")
    i = 0
    while i < len(comps):
        rest = comps[:i] + comps[i + 1:]
        if rest and intersect(rest, R).mask == I.mask:
            comps = rest
        else:
            i += 1
    return PrimaryDecomposition(I, tuple(comps))


def prime_ideals(R: FiniteRing) -> list[Ideal]:
    return [P for P in enumerate_ideals(R) if is_prime(P)]


def maximal_ideals(R: FiniteRing) -> list[Ideal]:
    return [P for P in enumerate_ideals(R) if is_maximal(P)]


def minimal_primes(R: FiniteRing) -> list[Ideal]:
    primes = prime_ideals(R)
    return [P for P in primes if not any(Q < P for Q in primes)]
