"""Exhaustive enumeration of End(G) and Aut(G) over Cayley-table groups.

The search fixes a small generating set (greedy closure), enumerates
candidate images for the generators only, and extends each candidate by
closure, rejecting on any homomorphism-law violation.  That prunes the
naive |G|^|G| space down to |G|^(#generators).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import DomainMismatchError, SizeCapError
from .groups import FiniteGroup, max_order


@dataclass(frozen=True)
class Endomorphism:
    """A homomorphism G -> G stored as its image array."""

    group: FiniteGroup
    images: tuple[int, ...]
    is_automorphism: bool
    canonical_index: int

    def __call__(self, x: int) -> int:
        return self.images[x]


def generating_set(g: FiniteGroup) -> list[int]:
    """Greedy generating set: repeatedly add the smallest element not yet generated."""
    gens: list[int] = []
    closure = {0}
    while len(closure) < g.order:
        x = min(set(range(g.order)) - closure)
        gens.append(x)
        frontier = [x]
        closure.add(x)
        while frontier:
            a = frontier.pop()
            for b in list(closure):
                for c in (g.table[a][b], g.table[b][a]):
                    if c not in closure:
                        closure.add(c)
                        frontier.append(c)
    return gens


def _extend(g: FiniteGroup, gens: list[int], imgs: tuple[int, ...]) -> tuple[int, ...] | None:
    """Extend generator images to a full endomorphism, or None on conflict.

    Every pair of assigned elements is eventually checked, so a returned
    image array satisfies the homomorphism law on all of G x G.
    """
    t = g.table
    phi: list[int | None] = [None] * g.order
    phi[0] = 0
    known = [0]
    pending: list[int] = []
    for gen, img in zip(gens, imgs):
        if phi[gen] is None:
            phi[gen] = img
            known.append(gen)
            pending.append(gen)
        elif phi[gen] != img:
            return None
    while pending:
        a = pending.pop()
        fa = phi[a]
        for b in list(known):
            fb = phi[b]
            for c, fc in ((t[a][b], t[fa][fb]), (t[b][a], t[fb][fa])):
                known_c = phi[c]
                if known_c is None:
                    phi[c] = fc
                    known.append(c)
                    pending.append(c)
                elif known_c != fc:
                    return None
    return tuple(phi)  # type: ignore[arg-type]


@lru_cache(maxsize=None)
def _enumerate(g: FiniteGroup) -> tuple[Endomorphism, ...]:
    if g.order > max_order():
        raise SizeCapError(f"order {g.order} exceeds cap {max_order()}")
    gens = generating_set(g)
    found: set[tuple[int, ...]] = set()
    if not gens:  # trivial group
        found.add((0,))
    for imgs in product(range(g.order), repeat=len(gens)):
        phi = _extend(g, gens, imgs)
        if phi is not None:
            found.add(phi)
    ordered = sorted(found)
    return tuple(
        Endomorphism(
            group=g,
            images=images,
            is_automorphism=len(set(images)) == g.order,
            canonical_index=i,
        )
        for i, images in enumerate(ordered)
    )


def enumerate_endomorphisms(g: FiniteGroup) -> list[Endomorphism]:
    """All endomorphisms of G, sorted lexicographically by image array."""
    return list(_enumerate(g))


def enumerate_automorphisms(g: FiniteGroup) -> list[Endomorphism]:
    """The automorphisms among :func:`enumerate_endomorphisms`, same indexing."""
    return [e for e in _enumerate(g) if e.is_automorphism]


@lru_cache(maxsize=None)
def _index_of(g: FiniteGroup) -> dict[tuple[int, ...], int]:
    return {e.images: e.canonical_index for e in _enumerate(g)}


def compose(a: Endomorphism, b: Endomorphism) -> Endomorphism:
    """(a o b)(x) = a(b(x)), resolved against the canonical enumeration."""
    if a.group != b.group:
        raise DomainMismatchError("cannot compose endomorphisms of different groups")
    images = tuple(a.images[v] for v in b.images)
    return _enumerate(a.group)[_index_of(a.group)[images]]


def identity_endomorphism(g: FiniteGroup) -> Endomorphism:
    idx = _index_of(g)[tuple(range(g.order))]
    return _enumerate(g)[idx]


def endomorphisms_to_json(endos: list[Endomorphism]) -> list[list[int]]:
    """JSON-friendly form: a list of image arrays in canonical order."""
    return [list(e.images) for e in endos]


def composition_table(g: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Index-level composition: entry [i][j] is the index of endo_i o endo_j."""
    endos = _enumerate(g)
    index = _index_of(g)
    return tuple(
        tuple(index[tuple(a.images[v] for v in b.images)] for b in endos)
        for a in endos
    )
