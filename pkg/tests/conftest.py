import itertools

import pytest


def brute_force_heights(n):
    """Total heights of every rooted labeled tree, from raw parent functions.

    Deliberately independent of Prüfer codes: tries every map from non-root
    vertices to vertices and keeps the acyclic ones.
    """
    out = []
    for root in range(n):
        others = [v for v in range(n) if v != root]
        for parents in itertools.product(range(n), repeat=n - 1):
            parent = dict(zip(others, parents))
            total = 0
            ok = True
            for v in others:
                d, u = 0, v
                while u != root and d <= n:
                    u = parent[u]
                    d += 1
                if u != root:
                    ok = False
                    break
                total += d
            if ok:
                out.append(total)
    return out


@pytest.fixture(scope="session")
def brute_heights():
    return {n: brute_force_heights(n) for n in range(1, 6)}


ACCEPTANCE_LINES: dict = {}


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion, then assert."""

    def report(number: int, passed: bool, detail: str):
        ACCEPTANCE_LINES[number] = f"{'PASS' if passed else 'FAIL'} criterion {number}: {detail}"
        print(ACCEPTANCE_LINES[number])
        assert passed, detail

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
