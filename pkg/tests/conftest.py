import math

import pytest

from cartqec.footprint import ProductSpec

ACCEPTANCE_LINES: list[str] = []


def nonincreasing_vectors(max_sum: int, max_len: int, largest: int | None = None):
    """All non-increasing positive vectors with sum <= max_sum and length <= max_len."""
    largest = max_sum if largest is None else largest
    for first in range(min(largest, max_sum), 0, -1):
        yield (first,)
        if max_len > 1:
            for rest in nonincreasing_vectors(max_sum - first, max_len - 1, first):
                yield (first,) + rest


def spec_family(max_n: int, primes=(2, 3, 5), max_m: int = 4):
    out = []
    for p in primes:
        budget = int(math.log(max_n, p) + 1e-9)
        for r_vec in nonincreasing_vectors(budget, max_m):
            if p ** sum(r_vec) <= max_n:
                out.append(ProductSpec(p, r_vec))
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def report():
    def _report(label: str, ok: bool, detail: str = ""):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
        return ok

    return _report
