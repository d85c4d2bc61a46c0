import pytest
from hypothesis import given, settings, strategies as st

from ringstar.errors import RingError, SpecParseError
from ringstar.pid import (FamilySpec, IntegerDomain, PolyDomain, first_primes, parse_domain,
                          parse_family, pid_a2_check, pid_ideal, pid_intersect, pid_radical,
                          pid_star_check, pid_sum, pid_theorem8_witnesses)

Z = IntegerDomain()
F2 = PolyDomain(2)
F3 = PolyDomain(3)


def test_integer_radical():
    assert [Z.radical(n) for n in (1, 12, 72, 97, 360, -18)] == [1, 6, 6, 97, 30, 6]
    assert Z.radical(0) == 0


def test_first_primes():
    assert first_primes(Z, 5) == [2, 3, 5, 7, 11]
    assert [F2.fmt(g) for g in first_primes(F2, 5)] == ["x", "x+1", "x^2+x+1", "x^3+x+1", "x^3+x^2+1"]


def test_irreducibility_f3():
    irreducible_quadratics = [g for g in first_primes(F3, 12) if F3.degree(g) == 2]
    assert [F3.fmt(g) for g in irreducible_quadratics] == ["x^2+1", "x^2+x+2", "x^2+2x+2"]


def test_poly_radical_squarefree_and_pth_powers():
    assert F2.fmt(F2.radical(F2.parse("x^4+x^2"))) == "x^2+x"  # x^2 (x+1)^2
    assert F2.fmt(F2.radical(F2.parse("x^2+1"))) == "x+1"
    assert F3.fmt(F3.radical(F3.parse("x^3"))) == "x"


def test_ideal_arithmetic():
    assert str(pid_intersect([pid_ideal(Z, 4), pid_ideal(Z, 6)])) == "(12)"
    assert str(pid_sum([pid_ideal(Z, 4), pid_ideal(Z, 6)])) == "(2)"
    assert str(pid_radical(pid_ideal(Z, -12))) == "(6)"
    assert pid_ideal(Z, 12) < pid_ideal(Z, 6)


def test_parse_domain_and_family():
    assert parse_domain("F2[x]") == F2
    with pytest.raises(SpecParseError):
        parse_domain("Q")
    with pytest.raises(SpecParseError):
        parse_family("some:3", Z)
    with pytest.raises(RingError):
        parse_family("prime-powers:6", Z)
    assert parse_family("finite:4,6,4", Z).generators == (4, 6)


def test_star_finite_family_holds():
    res = pid_star_check(parse_family("finite:4,6,9", Z))
    assert res.satisfied and res.method == "symbolic"


@pytest.mark.parametrize("domain,witness,meet", [(Z, ["(2)", "(3)"], "(6)"),
                                                 (F2, ["(x)", "(x+1)"], "(x^2+x)")])
def test_star_all_primes_fails(domain, witness, meet):
    res = pid_star_check(FamilySpec(domain, "all-primes"))
    assert not res.satisfied
    assert res.counterexample["witness_subfamily"] == witness
    assert res.counterexample["meet_of_radicals"] == meet
    assert res.counterexample["radical_of_meet"] == "(0)"


def test_a2_prime_powers_refused():
    res = pid_a2_check(FamilySpec(Z, "prime-powers", base=2), 12)
    assert not res.holds and res.certificate["valuation"] == 2
    assert all(s["in_radical"] and not s["power_in_member"] for s in res.certificate["samples"])


def test_a2_finite_and_trivial_cases():
    assert pid_a2_check(parse_family("finite:8,9", Z), 6).uniform_exponent == 3
    assert pid_a2_check(FamilySpec(Z, "all-primes"), 10).uniform_exponent == 1
    assert pid_a2_check(FamilySpec(Z, "prime-powers", base=3), 10).uniform_exponent == 1


@pytest.mark.parametrize("domain,chain", [
    (Z, ["(2)", "(6)", "(30)", "(210)"]),
    (F2, ["(x)", "(x^2+x)", "(x^4+x)", "(x^7+x^5+x^2+x)"]),
])
def test_noetherian_conditions_all_fail(domain, chain):
    out = pid_theorem8_witnesses(domain)
    assert not any(c["holds"] for c in out["conditions"].values())
    assert len(out["conditions"]) == 5
    assert out["all_equal"] and out["certificates_checked"]
    assert out["dcc_radical_failure_chain"] == chain


ints = st.integers(-2000, 2000).filter(bool)
polys = st.lists(st.integers(0, 1), min_size=1, max_size=8).map(F2.canon).filter(lambda g: not F2.is_zero(g))


@settings(max_examples=200)
@given(ints, ints)
def test_containment_is_divisibility(a, b):
    assert (pid_ideal(Z, a) <= pid_ideal(Z, b)) == (a % b == 0)


@settings(max_examples=200)
@given(ints, ints)
def test_radical_of_lcm(a, b):
    I, J = pid_ideal(Z, a), pid_ideal(Z, b)
    assert pid_radical(pid_intersect([I, J])) == pid_intersect([pid_radical(I), pid_radical(J)])


@settings(max_examples=100)
@given(polys, polys)
def test_poly_radical_of_lcm(f, g):
    I, J = pid_ideal(F2, f), pid_ideal(F2, g)
    assert pid_radical(pid_intersect([I, J])) == pid_intersect([pid_radical(I), pid_radical(J)])
    r = F2.radical(f)
    assert F2.divides(r, f) and F2.gcd(r, F2.derivative(r)) == F2.one or F2.degree(r) == 0
