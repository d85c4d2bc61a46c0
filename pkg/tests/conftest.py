import time

import pytest

from ringstar.battery import run_suite
from ringstar.corpus import build_corpus
from ringstar.rings import make_poly_quotient, make_residue_ring, product_ring

ACCEPTANCE: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in sorted(ACCEPTANCE, key=lambda r: int(r[0].split()[0][2:])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@pytest.fixture
def record_criterion():
    def record(name: str, ok: bool, detail: str = ""):
        ACCEPTANCE.append((name, ok, detail))
        print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
        return ok
    return record


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def timed_suite(corpus):
    t0 = time.perf_counter()
    report = run_suite(build_corpus())
    return report, time.perf_counter() - t0


@pytest.fixture
def z12():
    return make_residue_ring(12)


@pytest.fixture
def z4():
    return make_residue_ring(4)


@pytest.fixture
def z6():
    return make_residue_ring(6)


@pytest.fixture
def gf4():
    return make_poly_quotient(2, [1, 1, 1])


@pytest.fixture
def dual2():
    # F2[x]/(x^2), the class of x has index 2
    return make_poly_quotient(2, [0, 0, 1])


@pytest.fixture
def z4z9():
    return product_ring(make_residue_ring(4), make_residue_ring(9))
