"""Shared fixtures and independent oracles used across the suite."""

from __future__ import annotations

import pytest

from spaceform import make_cyclic, make_generalized_quaternion


@pytest.fixture(scope="session")
def q8():
    return make_generalized_quaternion(8)


@pytest.fixture(scope="session")
def c12():
    return make_cyclic(12)


def brute_force_endomorphisms(g) -> set[tuple[int, ...]]:
    """Enumerate End(G) by backtracking over images of every element.

    Deliberately ignores generating sets: images are assigned element by
    element in index order, checking the homomorphism law against all
    previously assigned pairs.  Serves as an oracle for the pruned
    generator-image search.
    """
    n = g.order
    t = g.table
    results: set[tuple[int, ...]] = set()
    phi = [0] * n

    def consistent(upto: int) -> bool:
        return all(
            phi[t[a][b]] == t[phi[a]][phi[b]]
            for a in range(upto + 1)
            for b in range(upto + 1)
            if t[a][b] <= upto
        )

    def rec(i: int) -> None:
        if i == n:
            results.add(tuple(phi))
            return
        for img in range(n):
            phi[i] = img
            if consistent(i):
                rec(i + 1)

    rec(1)
    return results


def naive_power_mod(base: int, exp: int, mod: int) -> int:
    """Repeated multiplication, as an oracle for pow(base, exp, mod)."""
    acc = 1 % mod
    for _ in range(exp):
        acc = acc * base % mod
    return acc
