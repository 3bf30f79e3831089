import importlib
import random

import pytest

from conftest import oracle_sign_feasible, oracle_solvable
from ovalcheck import _zpcore_py
from ovalcheck import zplinalg

try:
    from ovalcheck import _zpcore
except ImportError:
    _zpcore = None

PRIMES = (3, 5, 7, 11)


def random_matrix(rng, n, m, p):
    return [[rng.randrange(p) for _ in range(m)] for _ in range(n)]


@pytest.mark.parametrize("impl", [_zpcore_py] + ([_zpcore] if _zpcore else []))
def test_solve_finds_valid_solutions(impl):
    rng = random.Random(31)
    for _ in range(300):
        p = rng.choice(PRIMES)
        n, m = rng.randrange(1, 7), rng.randrange(0, 7)
        a = random_matrix(rng, n, m, p)
        x = [rng.randrange(p) for _ in range(m)]
        b = [sum(a[i][j] * x[j] for j in range(m)) % p for i in range(n)]
        got = impl.solve_mod_p(a, b, p)
        assert got is not None
        for i in range(n):
            assert sum(a[i][j] * got[j] for j in range(m)) % p == b[i] % p


@pytest.mark.parametrize("impl", [_zpcore_py] + ([_zpcore] if _zpcore else []))
def test_solve_agrees_with_rank_oracle(impl):
    rng = random.Random(47)
    for _ in range(300):
        p = rng.choice(PRIMES)
        n, m = rng.randrange(1, 6), rng.randrange(0, 5)
        a = random_matrix(rng, n, m, p)
        b = [rng.randrange(p) for _ in range(n)]
        got = impl.solve_mod_p(a, b, p)
        assert (got is not None) == oracle_solvable(a, b, p)


@pytest.mark.parametrize("impl", [_zpcore_py] + ([_zpcore] if _zpcore else []))
def test_search_agrees_with_exhaustive_oracle(impl):
    rng = random.Random(92)
    for _ in range(200):
        p = rng.choice(PRIMES)
        n, m = rng.randrange(1, 6), rng.randrange(0, 4)
        a = random_matrix(rng, n, m, p)
        found = impl.search_sign_assignment(a, p)
        assert (found is not None) == oracle_sign_feasible(a, p)
        if found is not None:
            eps, x = found
            assert eps[0] == 1 and all(e in (1, -1) for e in eps)
            for i in range(n):
                lhs = sum(a[i][j] * x[j] for j in range(m)) % p
                assert lhs == eps[i] % p


@pytest.mark.skipif(_zpcore is None, reason="compiled kernel not built")
def test_compiled_and_pure_agree_exactly():
    rng = random.Random(1001)
    for _ in range(400):
        p = rng.choice(PRIMES)
        n, m = rng.randrange(1, 7), rng.randrange(0, 6)
        a = random_matrix(rng, n, m, p)
        b = [rng.randrange(p) for _ in range(n)]
        assert _zpcore.solve_mod_p(a, b, p) == _zpcore_py.solve_mod_p(a, b, p)
        assert _zpcore.search_sign_assignment(a, p) == _zpcore_py.search_sign_assignment(a, p)


def test_search_monotone_in_columns():
    # adding a column can only enlarge the reachable set
    rng = random.Random(77)
    for _ in range(200):
        p = rng.choice(PRIMES)
        n = rng.randrange(1, 5)
        m = rng.randrange(0, 3)
        a = random_matrix(rng, n, m, p)
        if zplinalg.search_sign_assignment(a, p) is not None:
            extra = [row + [rng.randrange(p)] for row in a]
            assert zplinalg.search_sign_assignment(extra, p) is not None


def test_env_override_selects_pure(tmp_path, monkeypatch):
    monkeypatch.setenv("OVALCHECK_PURE_PYTHON", "1")
    module = importlib.reload(zplinalg)
    try:
        assert module.IMPLEMENTATION == "pure"
    finally:
        monkeypatch.delenv("OVALCHECK_PURE_PYTHON")
        importlib.reload(zplinalg)
