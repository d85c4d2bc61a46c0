"""Symbolic principal ideals of Z and F_p[x].

Ideals are named by a canonical generator: a non-negative integer, or a
monic polynomial stored as a coefficient tuple, low degree first. ``(a)``
contains ``(b)`` exactly when ``a`` divides ``b``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import reduce
from itertools import count
from typing import Any, Iterator, Sequence, Union

from .errors import RingError, SpecParseError
from .rings import format_poly, is_prime_int, parse_poly
from .star import StarCheckResult

Poly = tuple[int, ...]
Gen = Union[int, Poly]

TRIAL_DIVISION_LIMIT = 10 ** 6


class IntegerDomain:
    tag = "Z"

    def canon(self, g: int) -> int:
        return abs(int(g))

    zero, one = 0, 1

    def is_zero(self, g):
        return g == 0

    def mul(self, a, b):
        return a * b

    def divides(self, a, b) -> bool:
        if a == 0:
            return b == 0
        return b % a == 0

    def gcd(self, a, b):
        while b:
            a, b = b, a % b
        return abs(a)

    def quo(self, a, b):
        return a // b

    def is_irreducible(self, g) -> bool:
        return is_prime_int(g)

    def primes(self) -> Iterator[int]:
        return (n for n in count(2) if is_prime_int(n))

    def radical(self, g: int) -> int:
        """Squarefree kernel by trial division."""
        g = self.canon(g)
        if g in (0, 1):
            return g
        out, n, d = 1, g, 2
        while d * d <= n:
            if d > TRIAL_DIVISION_LIMIT:
                raise RingError(f"{g} has no factor below the trial-division limit")
            if n % d == 0:
                out *= d
                while n % d == 0:
                    n //= d
            d += 1 if d == 2 else 2
        return out * n if n > 1 else out

    def degree(self, g) -> int:
        # size measure used to bound exponent searches
        return max(g.bit_length(), 1)

    def fmt(self, g) -> str:
        return str(g)

    def parse(self, s: str) -> int:
        s = s.strip()
        if not re.fullmatch(r"-?\d+", s):
            raise SpecParseError(f"not an integer: {s!r}", s)
        return self.canon(int(s))


class PolyDomain:
    """F_p[x]; polynomials are coefficient tuples with no trailing zeros."""

    def __init__(self, p: int):
        if not is_prime_int(p):
            raise RingError(f"coefficient field size must be prime, got {p}")
        self.p = p
        self.tag = f"F{p}[x]"
        self.zero: Poly = ()
        self.one: Poly = (1,)

    def __eq__(self, other):
        return isinstance(other, PolyDomain) and other.p == self.p

    def __hash__(self):
        return hash(("poly", self.p))

    def _trim(self, cs) -> Poly:
        cs = [c % self.p for c in cs]
        while cs and cs[-1] == 0:
            cs.pop()
        return tuple(cs)

    def canon(self, g: Sequence[int]) -> Poly:
        g = self._trim(g)
        if not g:
            return g
        inv = pow(g[-1], -1, self.p)
        return self._trim(c * inv for c in g)

    def is_zero(self, g):
        return not g

    def mul(self, a: Poly, b: Poly) -> Poly:
        if not a or not b:
            return ()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return self._trim(out)

    def divmod(self, a: Poly, b: Poly) -> tuple[Poly, Poly]:
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(a)
        q = [0] * max(len(a) - len(b) + 1, 0)
        inv = pow(b[-1], -1, self.p)
        while len(r) >= len(b) and r:
            shift = len(r) - len(b)
            c = r[-1] * inv % self.p
            q[shift] = c
            for i, y in enumerate(b):
                r[shift + i] = (r[shift + i] - c * y) % self.p
            while r and r[-1] == 0:
                r.pop()
        return self._trim(q), self._trim(r)

    def quo(self, a, b):
        return self.divmod(a, b)[0]

    def divides(self, a, b) -> bool:
        if not a:
            return not b
        return not self.divmod(b, a)[1]

    def gcd(self, a, b):
        while b:
            a, b = b, self.divmod(a, b)[1]
        return self.canon(a)

    def derivative(self, a: Poly) -> Poly:
        return self._trim(i * c for i, c in enumerate(a))[1:] if len(a) > 1 else ()

    def _powmod(self, base: Poly, e: int, m: Poly) -> Poly:
        result, base = (1,), self.divmod(base, m)[1]
        while e:
            if e & 1:
                result = self.divmod(self.mul(result, base), m)[1]
            base = self.divmod(self.mul(base, base), m)[1]
            e >>= 1
        return result

    def is_irreducible(self, f: Poly) -> bool:
        """Rabin's test: x^(p^d) = x mod f and gcd(x^(p^(d/q)) - x, f) = 1 for primes q | d."""
        d = len(f) - 1
        if d < 1:
            return False
        if d == 1:
            return True
        x = (0, 1)
        if self._sub(self._powmod(x, self.p ** d, f), x) != ():
            return False
        for q in (q for q in range(2, d + 1) if d % q == 0 and is_prime_int(q)):
            h = self._sub(self._powmod(x, self.p ** (d // q), f), x)
            if self.gcd(f, h) != (1,):
                return False
        return True

    def _sub(self, a, b):
        n = max(len(a), len(b))
        a = list(a) + [0] * (n - len(a))
        b = list(b) + [0] * (n - len(b))
        return self._trim(x - y for x, y in zip(a, b))

    def primes(self) -> Iterator[Poly]:
        """Monic irreducibles by degree, then by coefficient index."""
        for d in count(1):
            for idx in range(self.p ** d):
                f = tuple((idx // self.p ** i) % self.p for i in range(d)) + (1,)
                if self.is_irreducible(f):
                    yield f

    def radical(self, f: Poly) -> Poly:
        """Product of the distinct monic irreducible factors, via gcd with f'."""
        f = self.canon(f)
        if len(f) <= 1:
            return f
        df = self.derivative(f)
        if not df:
            # f(x) = h(x^p) = h(x)^p over F_p
            return self.radical(f[:: self.p])
        u = self.gcd(f, df)
        v = self.quo(f, u)  # every factor whose multiplicity is prime to p
        if len(u) <= 1:
            return v
        w = self.radical(u)
        return self.canon(self.quo(self.mul(v, w), self.gcd(v, w)))

    def degree(self, g) -> int:
        return max(len(g) - 1, 1)

    def fmt(self, g) -> str:
        return format_poly(g) if g else "0"

    def parse(self, s: str) -> Poly:
        return self.canon(parse_poly(s, self.p))


def parse_domain(tag: str):
    tag = tag.replace(" ", "")
    if tag == "Z":
        return IntegerDomain()
    m = re.fullmatch(r"F(\d+)\[x\]", tag)
    if m:
        p = int(m.group(1))
        if not is_prime_int(p):
            raise SpecParseError(f"{p} is not prime", tag)
        return PolyDomain(p)
    raise SpecParseError(f"unknown domain {tag!r}; expected Z or Fp[x]", tag)


@dataclass(frozen=True)
class PIDIdeal:
    domain: Any = field(compare=False)
    generator: Gen

    @property
    def tag(self) -> str:
        return self.domain.tag

    def __eq__(self, other):
        return isinstance(other, PIDIdeal) and self.tag == other.tag and self.generator == other.generator

    def __hash__(self):
        return hash((self.tag, self.generator))

    def __le__(self, other: "PIDIdeal") -> bool:
        _same_domain([self, other])
        return self.domain.divides(other.generator, self.generator)

    def __lt__(self, other: "PIDIdeal") -> bool:
        return self <= other and self != other

    def __str__(self) -> str:
        return f"({self.domain.fmt(self.generator)})"


def pid_ideal(domain, g) -> PIDIdeal:
    return PIDIdeal(domain, domain.canon(g))


def _same_domain(ideals: Sequence[PIDIdeal]):
    tags = {I.tag for I in ideals}
    if len(tags) > 1:
        raise RingError(f"ideals from different domains: {sorted(tags)}")
    return ideals[0].domain


def _lcm(D, a, b):
    if D.is_zero(a) or D.is_zero(b):
        return D.zero
    return D.canon(D.quo(D.mul(a, b), D.gcd(a, b)))


def pid_radical(I: PIDIdeal) -> PIDIdeal:
    return PIDIdeal(I.domain, I.domain.radical(I.generator))


def pid_intersect(ideals: Sequence[PIDIdeal]) -> PIDIdeal:
    """Meet = (lcm); the empty list is the unit ideal only once a domain is known."""
    if not ideals:
        raise RingError("empty intersection needs a domain")
    D = _same_domain(ideals)
    return PIDIdeal(D, reduce(lambda a, b: _lcm(D, a, b), (I.generator for I in ideals)))


def pid_sum(ideals: Sequence[PIDIdeal]) -> PIDIdeal:
    if not ideals:
        raise RingError("empty sum needs a domain")
    D = _same_domain(ideals)
    return PIDIdeal(D, reduce(D.gcd, (I.generator for I in ideals)))


# ---------------------------------------------------------------------------
# symbolic families


@dataclass(frozen=True)
class FamilySpec:
    """``finite`` (explicit generators), ``all-primes`` or ``prime-powers`` (of ``base``)."""

    domain: Any = field(compare=False)
    variant: str
    generators: tuple = ()
    base: Gen | None = None

    def __post_init__(self):
        D = self.domain
        if self.variant == "finite":
            if not self.generators:
                raise RingError("finite family needs at least one generator")
            gens = tuple(dict.fromkeys(D.canon(g) for g in self.generators))
            object.__setattr__(self, "generators", gens)
        elif self.variant == "prime-powers":
            base = D.canon(self.base)
            if not D.is_irreducible(base):
                raise RingError(f"prime-powers base {D.fmt(base)} is not prime")
            object.__setattr__(self, "base", base)
        elif self.variant != "all-primes":
            raise RingError(f"unknown family variant {self.variant!r}")

    def describe(self) -> str:
        D = self.domain
        if self.variant == "finite":
            return "finite:" + ",".join(D.fmt(g) for g in self.generators)
        if self.variant == "prime-powers":
            return f"prime-powers:{D.fmt(self.base)}"
        return "all-primes"


def parse_family(text: str, domain) -> FamilySpec:
    text = text.strip()
    if text == "all-primes":
        return FamilySpec(domain, "all-primes")
    kind, _, rest = text.partition(":")
    if kind == "finite" and rest:
        return FamilySpec(domain, "finite", tuple(domain.parse(t) for t in rest.split(",")))
    if kind == "prime-powers" and rest:
        return FamilySpec(domain, "prime-powers", base=domain.parse(rest))
    raise SpecParseError(f"bad family spec {text!r}; expected finite:..., all-primes, prime-powers:p",
                         kind or text)


def first_primes(domain, k: int) -> list:
    it = domain.primes()
    return [next(it) for _ in range(k)]


@dataclass(frozen=True)
class FamilyMeet:
    ideal: PIDIdeal
    justification: str


def family_intersection(spec: FamilySpec) -> FamilyMeet:
    D = spec.domain
    if spec.variant == "finite":
        return FamilyMeet(pid_intersect([PIDIdeal(D, g) for g in spec.generators]), "lcm of generators")
    if spec.variant == "all-primes":
        return FamilyMeet(PIDIdeal(D, D.zero),
                          "divisibility: a nonzero element has only finitely many prime divisors")
    return FamilyMeet(PIDIdeal(D, D.zero),
                      f"valuation: {D.fmt(spec.base)}^k does not divide g once k exceeds its multiplicity")


def pid_star_check(spec: FamilySpec) -> StarCheckResult:
    D = spec.domain
    if spec.variant == "finite":
        ideals = [PIDIdeal(D, g) for g in spec.generators]
        lhs = pid_radical(pid_intersect(ideals))
        rhs = pid_intersect([pid_radical(I) for I in ideals])
        ok = lhs == rhs
        return StarCheckResult(
            ok, "symbolic", tuple(range(len(ideals))),
            None if ok else {"radical_of_meet": str(lhs), "meet_of_radicals": str(rhs)},
            1, f"sqrt({pid_intersect(ideals)}) = {lhs} = {rhs}")
    meet = family_intersection(spec)
    if spec.variant == "all-primes":
        two = first_primes(D, 2)
        sub = [PIDIdeal(D, g) for g in two]
        value = pid_intersect([pid_radical(I) for I in sub])
        cert = ("every finite subfamily {(p1),...,(pk)} meets in (p1*...*pk), which is nonzero, "
                "while the whole family meets in (0)")
    else:
        b = spec.base
        sub = [PIDIdeal(D, b), PIDIdeal(D, D.mul(b, b))]
        value = pid_intersect([pid_radical(I) for I in sub])
        cert = f"every finite subfamily has radical meet ({D.fmt(b)}), while the whole family meets in (0)"
    return StarCheckResult(False, "symbolic", (), {
        "family": spec.describe(),
        "radical_of_meet": str(pid_radical(meet.ideal)),
        "meet_justification": meet.justification,
        "witness_subfamily": [str(I) for I in sub],
        "meet_of_radicals": str(value),
    }, 0, cert)


@dataclass(frozen=True)
class A2Check:
    uniform_exponent: int | None
    certificate: dict[str, Any]

    @property
    def holds(self) -> bool:
        return self.uniform_exponent is not None


def _min_power_in(D, a, g) -> int | None:
    """Least n with g | a^n, or None when a is not in the radical of (g)."""
    if D.is_zero(g):
        return 1 if D.is_zero(a) else None
    if not D.divides(D.radical(g), a):
        return None
    acc = a
    for n in range(1, D.degree(g) + 2):
        if D.divides(g, acc):
            return n
        acc = D.mul(acc, a)
    raise AssertionError("exponent bound exceeded")  # unreachable for a in sqrt((g))


def _valuation(D, b, a) -> int:
    v = 0
    while not D.is_zero(a) and D.divides(b, a):
        a = D.quo(a, b)
        v += 1
    return v


def pid_a2_check(spec: FamilySpec, a) -> A2Check:
    D = spec.domain
    a = D.canon(a)
    if spec.variant == "finite":
        per = {}
        for g in spec.generators:
            n = _min_power_in(D, a, g)
            if n is not None:
                per[D.fmt(g)] = n
        return A2Check(max(per.values(), default=1), {"per_member": per})
    if spec.variant == "all-primes":
        # a lies in sqrt((q)) = (q) exactly when q | a, so n = 1 suffices
        return A2Check(1, {"reason": "prime ideals are radical"})
    b = spec.base
    v = _valuation(D, b, a)
    if D.is_zero(a) or v == 0:
        return A2Check(1, {"reason": f"{D.fmt(a)} lies in every member or in none"})
    samples = [{"n": n, "k": n * v + 1,
                "in_radical": True,
                "power_in_member": D.divides(_pow(D, b, n * v + 1), _pow(D, a, n))}
               for n in range(1, 6)]
    return A2Check(None, {
        "valuation": v,
        "rule": f"for any n take k = {v}*n+1: {D.fmt(a)} is in sqrt(({D.fmt(b)}^k)) "
                f"but {D.fmt(a)}^n is not in ({D.fmt(b)}^k)",
        "samples": samples,
    })


def _pow(D, a, n):
    out = D.one
    for _ in range(n):
        out = D.mul(out, a)
    return out


def pid_theorem8_witnesses(domain) -> dict[str, Any]:
    """Five equivalent conditions for Noetherian rings, all failing in ``domain``.

    Also records the strictly descending chain of radical ideals built from
    products of the first primes.
    """
    D = domain
    p1, p2, p3, p4 = first_primes(D, 4)
    star = pid_star_check(FamilySpec(D, "all-primes"))
    a = p1
    pi_samples = []
    for n in range(1, 6):
        an = _pow(D, a, n)
        pi_samples.append({"n": n, "a^n_divisible_by_a^2n": D.divides(_pow(D, a, 2 * n), an)})
    prods = [p1, D.mul(p1, p2), D.mul(D.mul(p1, p2), p3), D.mul(D.mul(D.mul(p1, p2), p3), p4)]
    dcc_chain = [str(PIDIdeal(D, D.canon(g))) for g in prods]
    strict = all(PIDIdeal(D, D.canon(prods[i + 1])) < PIDIdeal(D, D.canon(prods[i]))
                 for i in range(len(prods) - 1))
    radical_chain = all(D.radical(g) == D.canon(g) for g in prods)
    art = [PIDIdeal(D, _pow(D, a, k)) for k in (1, 2, 3)]
    conditions = {
        "star_property": {"holds": False, "witness": star.counterexample},
        "zero_dimensional": {"holds": False,
                             "witness": {"prime_chain": [str(PIDIdeal(D, D.zero)), str(PIDIdeal(D, a))]}},
        "artinian": {"holds": False, "witness": {"descending_chain": [str(I) for I in art],
                                                  "rule": f"({D.fmt(a)}^k) strictly contains ({D.fmt(a)}^(k+1))"}},
        "pi_regular": {"holds": False, "witness": {
            "a": D.fmt(a),
            "rule": "a^n = (a^n)^2 a' would need a^(2n) | a^n; valuation n < 2n forbids it, "
                    "and a^n is never zero in a domain",
            "samples": pi_samples}},
        "prime_family_condition": {"holds": False, "witness": star.counterexample},
    }
    consistent_with_certs = (
        strict and radical_chain
        and all(not s["a^n_divisible_by_a^2n"] for s in pi_samples)
        and all(art[i + 1] < art[i] for i in range(len(art) - 1))
        and PIDIdeal(D, D.zero) < PIDIdeal(D, a)
    )
    return {
        "domain": D.tag,
        "conditions": conditions,
        "all_equal": len({c["holds"] for c in conditions.values()}) == 1,
        "certificates_checked": consistent_with_certs,
        "dcc_radical_failure_chain": dcc_chain,
    }
