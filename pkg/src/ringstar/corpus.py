"""Deterministic catalog of finite test rings and their fingerprints."""
from __future__ import annotations

from dataclasses import astuple, dataclass

from .errors import ResourceCapError
from .ideals import enumerate_ideals, is_maximal, is_prime, radical, zero_ideal
from .rings import MAX_ORDER, FiniteRing, make_poly_quotient, make_residue_ring, product_ring, quotient_ring

DEFAULT_MAX_ORDER = 64
QUOTIENT_IDEAL_LIMIT = 12


@dataclass(frozen=True, order=True)
class Fingerprint:
    order: int
    characteristic: int
    units: int
    ideals: int
    primes: int
    nilradical: int

    def as_tuple(self) -> tuple[int, ...]:
        return astuple(self)


def fingerprint(R: FiniteRing) -> Fingerprint:
    lat = enumerate_ideals(R)
    return Fingerprint(
        order=R.order,
        characteristic=R.characteristic,
        units=len(R.units),
        ideals=len(lat),
        primes=sum(1 for I in lat if is_prime(I)),
        nilradical=len(radical(zero_ideal(R))),
    )


def monic_polys(p: int, degree: int):
    """Monic polynomials of the given degree, coefficient lists low degree first."""
    for idx in range(p ** degree):
        yield [(idx // p ** i) % p for i in range(degree)] + [1]


def base_rings(max_order: int) -> list[FiniteRing]:
    rings = [make_residue_ring(n) for n in range(2, min(max_order, 32) + 1)]
    for p in (2, 3):
        for d in (1, 2, 3):
            if p ** d <= max_order:
                rings.extend(make_poly_quotient(p, f) for f in monic_polys(p, d))
    return rings


def _is_local(R: FiniteRing) -> bool:
    return sum(1 for I in enumerate_ideals(R) if is_maximal(I)) == 1


def build_corpus(max_order: int = DEFAULT_MAX_ORDER) -> list[FiniteRing]:
    """Base rings, products of local rings, and quotients of local rings.

    Base: Z/n for 2 <= n <= min(max_order, 32) and F_p[x]/(f) for p in {2, 3},
    f monic of degree <= 3 (reducible f included), each of order <= max_order.
    Products and quotients draw on one local base ring per fingerprint (the
    first in base order): products of two distinct such rings with order
    <= max_order, and quotients by every nonzero proper ideal of those with at
    most 12 ideals. Every finite commutative ring is a product of local rings,
    so this keeps the structural range while bounding the corpus size.
    Sorted by (order, label); no isomorphism deduplication.
    """
    if max_order > MAX_ORDER:
        raise ResourceCapError(f"max_order {max_order} exceeds cap {MAX_ORDER}")
    bases = base_rings(max_order)
    reps: dict[Fingerprint, FiniteRing] = {}
    for R in bases:
        reps.setdefault(fingerprint(R), R)
    local = [R for R in reps.values() if _is_local(R)]
    rings = list(bases)
    for i, R in enumerate(local):
        for S in local[i + 1:]:
            if R.order * S.order <= max_order:
                rings.append(product_ring(R, S))
    for R in local:
        lat = enumerate_ideals(R)
        if len(lat) > QUOTIENT_IDEAL_LIMIT:
            continue
        for I in lat:
            if I.mask != 1 << R.zero and not I.is_unit:
                rings.append(quotient_ring(R, I)[0])
    rings.sort(key=lambda R: (R.order, R.label))
    return rings


def corpus_listing(rings: list[FiniteRing]) -> list[dict]:
    return [{"label": R.label, "fingerprint": list(fingerprint(R).as_tuple())} for R in rings]
