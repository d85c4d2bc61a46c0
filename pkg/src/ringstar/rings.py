"""Finite commutative rings with identity, stored as dense operation tables.

Elements are the indices ``0..order-1``. Structured constructors fill the
tables arithmetically; nothing larger than ``order**2`` entries is stored.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import RingError, SpecParseError

MAX_ORDER = 256
MAX_POLY_DEGREE = 16

Table = tuple[tuple[int, ...], ...]


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A finite commutative ring with identity.

    Equality is identity: two separately built copies of Z/6 are different
    objects, and ideals of one are not ideals of the other.
    """

    order: int
    add: Table = field(repr=False)
    mul: Table = field(repr=False)
    zero: int
    one: int
    neg: tuple[int, ...] = field(repr=False)
    label: str = ""

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise RingError("ring order must be positive")
        if n > MAX_ORDER:
            raise RingError(f"ring order {n} exceeds cap {MAX_ORDER}")
        if len(self.add) != n or len(self.mul) != n or len(self.neg) != n:
            raise RingError("operation tables do not match the ring order")
        if any(len(row) != n for row in self.add) or any(len(row) != n for row in self.mul):
            raise RingError("operation tables must be square")
        if not (0 <= self.zero < n and 0 <= self.one < n):
            raise RingError("zero/one out of range")

    def __str__(self) -> str:
        return self.label

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @property
    def is_zero_ring(self) -> bool:
        return self.order == 1

    def power(self, x: int, k: int) -> int:
        return self.power_table[x][k - 1] if 1 <= k <= self.order else self._slow_power(x, k)

    def _slow_power(self, x: int, k: int) -> int:
        r = self.one
        for _ in range(k):
            r = self.mul[r][x]
        return r

    @cached_property
    def power_table(self) -> Table:
        """``power_table[x][k-1] == x**k`` for ``1 <= k <= order``."""
        rows = []
        for x in self.elements:
            row = [x]
            mrow = self.mul[x]
            for _ in range(self.order - 1):
                row.append(mrow[row[-1]])
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def power_masks(self) -> tuple[int, ...]:
        # x lies in sqrt(I) iff power_masks[x] & I.mask
        return tuple(sum(1 << v for v in set(row)) for row in self.power_table)

    @cached_property
    def principal_masks(self) -> tuple[int, ...]:
        # in a commutative ring with 1, (a) = R*a
        return tuple(sum(1 << v for v in set(row)) for row in self.mul)

    @cached_property
    def units(self) -> tuple[int, ...]:
        return tuple(x for x in self.elements if self.one in self.mul[x])

    @cached_property
    def characteristic(self) -> int:
        k, acc = 1, self.one
        while acc != self.zero:
            acc = self.add[acc][self.one]
            k += 1
        return k

    def members_of(self, mask: int) -> tuple[int, ...]:
        return _bits(mask)

    def mask_of(self, elements: Iterable[int]) -> int:
        m = 0
        for e in elements:
            if not 0 <= e < self.order:
                raise RingError(f"element {e} is not in {self.label} (order {self.order})")
            m |= 1 << e
        return m

    @classmethod
    def from_tables(cls, add, mul, zero=0, one=1, neg=None, label="table") -> "FiniteRing":
        """Wrap raw tables without checking the axioms (see :func:`validate_axioms`)."""
        add_t = tuple(tuple(int(v) for v in row) for row in add)
        mul_t = tuple(tuple(int(v) for v in row) for row in mul)
        n = len(add_t)
        if neg is None:
            neg = []
            for a in range(n):
                inv = [b for b in range(n) if add_t[a][b] == zero]
                neg.append(inv[0] if inv else zero)
        return cls(n, add_t, mul_t, zero, one if n > 1 else zero, tuple(neg), label)


def _tabulate(n: int, add_fn, mul_fn, neg_fn, label: str, one: int = 1) -> FiniteRing:
    if n > MAX_ORDER:
        raise RingError(f"ring order {n} exceeds cap {MAX_ORDER}")
    add = tuple(tuple(add_fn(a, b) for b in range(n)) for a in range(n))
    mul = tuple(tuple(mul_fn(a, b) for b in range(n)) for a in range(n))
    neg = tuple(neg_fn(a) for a in range(n))
    return FiniteRing(n, add, mul, 0, one if n > 1 else 0, neg, label)


def make_residue_ring(n: int) -> FiniteRing:
    """Integers modulo ``n``."""
    if not isinstance(n, int) or n < 1:
        raise RingError(f"residue modulus must be a positive integer, got {n!r}")
    return _tabulate(n, lambda a, b: (a + b) % n, lambda a, b: (a * b) % n,
                     lambda a: (-a) % n, f"Z/{n}")


def is_prime_int(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    """Caret notation, highest degree first: ``(1, 1, 1) -> 'x^2+x+1'``."""
    terms = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if c == 0:
            continue
        if deg == 0:
            terms.append(str(c))
            continue
        mono = var if deg == 1 else f"{var}^{deg}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


_TERM = re.compile(r"(\d*)(x(?:\^(\d+))?)?")


def parse_poly(s: str, p: int) -> tuple[int, ...]:
    """Caret notation such as ``x^2+x+1`` or ``2x^3+1``."""
    text = s.replace(" ", "")
    if not text:
        raise SpecParseError("empty polynomial", s)
    coeffs: dict[int, int] = {}
    for term in text.split("+"):
        m = _TERM.fullmatch(term)
        if not term or not m or (not m.group(1) and not m.group(2)):
            raise SpecParseError(f"bad polynomial term {term!r}", term)
        c = int(m.group(1)) if m.group(1) else 1
        deg = 0 if not m.group(2) else int(m.group(3) or 1)
        if deg > MAX_POLY_DEGREE:
            raise SpecParseError(f"degree {deg} exceeds {MAX_POLY_DEGREE}", term)
        coeffs[deg] = coeffs.get(deg, 0) + c
    top = max(coeffs)
    return tuple(coeffs.get(i, 0) % p for i in range(top + 1))


def make_poly_quotient(p: int, f: Sequence[int]) -> FiniteRing:
    """F_p[x]/(f) for monic ``f`` given low-degree-first.

    The element with index ``sum(c_i * p**i)`` is the class of
    ``sum(c_i * x**i)``; so the class of ``x`` has index ``p`` when deg f >= 2.
    """
    if not isinstance(p, int) or not is_prime_int(p):
        raise RingError(f"coefficient field size must be prime, got {p!r}")
    f = [int(c) for c in f]
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    d = len(f) - 1
    if d < 1:
        raise RingError("modulus polynomial must have degree >= 1")
    if any(not 0 <= c < p for c in f):
        raise RingError(f"coefficients must lie in 0..{p - 1}")
    if f[-1] != 1:
        raise RingError("modulus polynomial must be monic")
    n = p ** d
    if n > MAX_ORDER:
        raise RingError(f"ring order {n} exceeds cap {MAX_ORDER}")

    def digits(a):
        out = []
        for _ in range(d):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def index(cs):
        return sum(c * p ** i for i, c in enumerate(cs))

    def mul(a, b):
        x, y = digits(a), digits(b)
        prod = [0] * (2 * d - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        # x^d = -(f_0 + ... + f_{d-1} x^{d-1})
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k] % p
            if c:
                for i in range(d):
                    prod[k - d + i] -= c * f[i]
            prod[k] = 0
        return index([c % p for c in prod[:d]])

    add = lambda a, b: index([(u + v) % p for u, v in zip(digits(a), digits(b))])
    neg = lambda a: index([(-u) % p for u in digits(a)])
    return _tabulate(n, add, mul, neg, f"F{p}[x]/({format_poly(f)})")


_ATOM = re.compile(r"^(Z/\d+|F\d+\[x\]/\([^()]*\))$")


def _wrap(label: str) -> str:
    return label if _ATOM.match(label) else f"({label})"


def product_ring(r: FiniteRing, s: FiniteRing) -> FiniteRing:
    """Componentwise product; ``(a, b)`` has index ``a * |s| + b``."""
    m = s.order
    n = r.order * m
    if n > MAX_ORDER:
        raise RingError(f"product order {n} exceeds cap {MAX_ORDER}")
    split = [divmod(i, m) for i in range(n)]
    ra, rm, sa, sm = r.add, r.mul, s.add, s.mul
    add = tuple(tuple(ra[a1][b1] * m + sa[a2][b2] for b1, b2 in split) for a1, a2 in split)
    mul = tuple(tuple(rm[a1][b1] * m + sm[a2][b2] for b1, b2 in split) for a1, a2 in split)
    neg = tuple(r.neg[a1] * m + s.neg[a2] for a1, a2 in split)
    zero = r.zero * m + s.zero
    one = r.one * m + s.one
    return FiniteRing(n, add, mul, zero, one, neg, f"{_wrap(r.label)} x {_wrap(s.label)}")


@dataclass(frozen=True, eq=False)
class RingHom:
    source: FiniteRing
    target: FiniteRing
    map: tuple[int, ...] = field(repr=False)

    def __call__(self, x: int) -> int:
        return self.map[x]

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.order

    def is_bijective(self) -> bool:
        return self.is_surjective() and self.source.order == self.target.order

    def kernel_mask(self) -> int:
        z = self.target.zero
        return sum(1 << x for x, y in enumerate(self.map) if y == z)

    def first_violation(self):
        """First ``(op, a, b)`` where the map fails to be a unital ring hom, else ``None``."""
        R, T, f = self.source, self.target, self.map
        if f[R.zero] != T.zero:
            return ("zero", R.zero, None)
        if f[R.one] != T.one:
            return ("one", R.one, None)
        for a in R.elements:
            for b in R.elements:
                if f[R.add[a][b]] != T.add[f[a]][f[b]]:
                    return ("add", a, b)
                if f[R.mul[a][b]] != T.mul[f[a]][f[b]]:
                    return ("mul", a, b)
        return None


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    axiom: str | None = None
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.passed

    def describe(self) -> str:
        if self.passed:
            return "all ring axioms hold"
        return f"axiom '{self.axiom}' fails at {self.witness}"


def validate_axioms(R: FiniteRing) -> AxiomReport:
    """Exhaustively check the commutative-ring-with-identity axioms.

    Reports the first violation in a fixed axiom order, with the
    lexicographically least witness tuple.
    """
    n = R.order
    A = np.asarray(R.add, dtype=np.int32)
    M = np.asarray(R.mul, dtype=np.int32)
    neg = np.asarray(R.neg, dtype=np.int32)
    idx = np.arange(n)
    for name, arr in (("add closed", A), ("mul closed", M), ("neg closed", neg)):
        bad = (arr < 0) | (arr >= n)
        if bad.any():
            return AxiomReport(False, name, _first(bad))

    unary = [
        ("add identity", lambda: A[R.zero] != idx),
        ("add inverse", lambda: A[idx, neg] != R.zero),
        ("mul identity", lambda: M[R.one] != idx),
    ]
    binary = [
        ("add commutative", lambda: A != A.T),
        ("mul commutative", lambda: M != M.T),
    ]
    for name, bad in binary + unary:
        mask = bad()
        if mask.any():
            return AxiomReport(False, name, _first(mask))

    # triple checks, chunked over the first argument to bound memory
    triples = [
        ("add associative", lambda a: A[A[a], :] != A[a][:, A]),
        ("mul associative", lambda a: M[M[a], :] != M[a][:, M]),
        ("distributive", lambda a: M[a][:, A] != A[M[a][:, :, None], M[a][:, None, :]]),
    ]
    for name, bad in triples:
        for lo in range(0, n, 32):
            mask = bad(slice(lo, min(n, lo + 32)))
            if mask.any():
                i, j, k = _first(mask)
                return AxiomReport(False, name, (lo + i, j, k))
    if n > 1 and R.one == R.zero:
        return AxiomReport(False, "one != zero", (R.one,))
    return AxiomReport(True)


def _first(mask) -> tuple[int, ...]:
    return tuple(int(v) for v in np.argwhere(mask)[0])


# ---------------------------------------------------------------------------
# derived rings: quotients, localizations, extensions


def quotient_ring(R: FiniteRing, I) -> tuple[FiniteRing, RingHom]:
    """R/I with cosets labelled by their least element, plus the projection."""
    from .ideals import Ideal, is_ideal_mask

    mask = I.mask if isinstance(I, Ideal) else R.mask_of(I)
    if isinstance(I, Ideal) and I.ring is not R:
        raise RingError("ideal belongs to a different ring")
    if not is_ideal_mask(R, mask):
        raise RingError("membership set is not an ideal")
    members = _bits(mask)
    proj = [-1] * R.order
    reps = []
    for x in R.elements:
        if proj[x] >= 0:
            continue
        k = len(reps)
        reps.append(x)
        for m in members:
            proj[R.add[x][m]] = k
    q = len(reps)
    add = tuple(tuple(proj[R.add[a][b]] for b in reps) for a in reps)
    mul = tuple(tuple(proj[R.mul[a][b]] for b in reps) for a in reps)
    neg = tuple(proj[R.neg[a]] for a in reps)
    from .ideals import Ideal as _Ideal
    gens = _Ideal(R, mask).generators()
    label = f"{_wrap(R.label)}/({','.join(map(str, gens))})"
    Q = FiniteRing(q, add, mul, proj[R.zero], proj[R.one], neg, label)
    return Q, RingHom(R, Q, tuple(proj))


def saturation_kernel(R: FiniteRing, P) -> int:
    """Mask of ``{r : s*r = 0 for some s outside P}``."""
    outside = [s for s in R.elements if not (P.mask >> s) & 1]
    z = R.zero
    return sum(1 << r for r in R.elements if any(R.mul[s][r] == z for s in outside))


def localize_at_prime(R: FiniteRing, P) -> tuple[FiniteRing, RingHom]:
    """Localization at the prime ``P``, realized as R modulo the saturation kernel.

    Every element outside ``P`` is cancellable in that quotient, hence a unit
    (finite ring), so the quotient is the ring of fractions.
    """
    from .ideals import Ideal, is_prime

    if P.ring is not R:
        raise RingError("ideal belongs to a different ring")
    if not is_prime(P):
        raise RingError("localization is only supported at prime ideals")
    Q, h = quotient_ring(R, Ideal(R, saturation_kernel(R, P)))
    gens = ",".join(map(str, P.generators()))
    Q = FiniteRing(Q.order, Q.add, Q.mul, Q.zero, Q.one, Q.neg, f"{_wrap(R.label)}_({gens})")
    return Q, RingHom(R, Q, h.map)


def extend_ideal(h: RingHom, I):
    """Ideal of ``h.target`` generated by the image of ``I``."""
    from .ideals import generate_ideal

    if I.ring is not h.source:
        raise RingError("ideal does not belong to the homomorphism's source")
    return generate_ideal(h.target, {h.map[x] for x in I.members})


_RESIDUE = re.compile(r"Z/(\d+)")
_POLYQ = re.compile(r"F(\d+)\[x\]/\(([^()]*)\)")


def parse_ring_spec(text: str) -> FiniteRing:
    """Build a ring from ``atom ("x" atom)*`` with atoms ``Z/n`` or ``Fp[x]/(poly)``.

    >>> parse_ring_spec("Z/4 x F2[x]/(x^2)").order
    16
    """
    s = "".join(text.split())
    if not s:
        raise SpecParseError("empty ring spec", text)
    pos, ring = 0, None
    while True:
        m = _RESIDUE.match(s, pos) or _POLYQ.match(s, pos)
        if not m:
            raise SpecParseError(f"expected Z/n or Fp[x]/(poly) at {s[pos:] or 'end'!r}", s[pos:])
        try:
            if m.re is _RESIDUE:
                atom = make_residue_ring(int(m.group(1)))
            else:
                p = int(m.group(1))
                atom = make_poly_quotient(p, parse_poly(m.group(2), p))
        except RingError as e:
            raise SpecParseError(str(e), m.group(0)) from e
        ring = atom if ring is None else product_ring(ring, atom)
        pos = m.end()
        if pos == len(s):
            return ring
        if s[pos] != "x":
            raise SpecParseError(f"expected 'x' between factors at {s[pos:]!r}", s[pos:])
        pos += 1
