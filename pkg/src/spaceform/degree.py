"""The degree homomorphism d: End(G) -> (Z/|G|)_x.

For a cyclic group of order m acting on S^{2n+1}, an endomorphism given
by the residue r has d(r) = r^{n+1} mod m, and this is built in.  For
any other group the table must be supplied by the user and is accepted
only if it satisfies the monoid-homomorphism laws, checked exhaustively.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from pathlib import Path

from .endomorphisms import (
    Endomorphism,
    composition_table,
    enumerate_endomorphisms,
    identity_endomorphism,
)
from .errors import (
    IncompleteTableError,
    InvalidTableError,
    NotAHomomorphismError,
    UnsupportedGroupError,
)
from .groups import FiniteGroup, cyclic_generator


@dataclass(frozen=True)
class Residue:
    """An integer mod m, stored as its least non-negative representative."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def __mul__(self, other: "Residue") -> "Residue":
        if self.modulus != other.modulus:
            raise ValueError("residue moduli differ")
        return Residue(self.value * other.value, self.modulus)

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def d_cyclic(r: Residue, n: int) -> Residue:
    """d(r) = r^{n+1} mod m, by fast modular exponentiation."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return Residue(pow(r.value, n + 1, r.modulus), r.modulus)


def endo_residue(e: Endomorphism) -> Residue:
    """The residue r with e(z) = z^r for a generator z of a cyclic group.

    Independent of the choice of generator: if w = z^s then e(w) = w^r
    for the same r.
    """
    g = e.group
    z = cyclic_generator(g)
    if z is None:
        raise UnsupportedGroupError(f"{g!r} is not cyclic")
    target = e.images[z]
    acc, r = 0, 0
    while acc != target:
        acc = g.table[acc][z]
        r += 1
    return Residue(r, g.order)


@dataclass(frozen=True)
class DegreeHom:
    """Table of d over the canonical endomorphism enumeration."""

    group: FiniteGroup
    n: int
    values: tuple[Residue, ...]
    provenance: str  # "builtin-cyclic" | "user-supplied"

    def __call__(self, endo_index: int) -> Residue:
        return self.values[endo_index]


@dataclass(frozen=True)
class LawFailure:
    law: str  # "identity" | "multiplicativity" | "unit"
    witness: tuple[int, ...]  # endomorphism indices involved
    message: str


@dataclass(frozen=True)
class HomValidationReport:
    passed: bool
    failures: tuple[LawFailure, ...]

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "failures": [
                {"law": f.law, "witness": list(f.witness), "message": f.message}
                for f in self.failures
            ],
        }


def _law_failures(g: FiniteGroup, values: tuple[Residue, ...]) -> list[LawFailure]:
    endos = enumerate_endomorphisms(g)
    m = g.order
    failures: list[LawFailure] = []
    ident = identity_endomorphism(g).canonical_index
    if values[ident].value != 1 % m:
        failures.append(
            LawFailure(
                "identity",
                (ident,),
                f"d(identity endo {ident}) = {values[ident].value}, expected {1 % m}",
            )
        )
    comp = composition_table(g)
    for i in range(len(endos)):
        di = values[i].value
        row = comp[i]
        for j in range(len(endos)):
            if values[row[j]].value != di * values[j].value % m:
                failures.append(
                    LawFailure(
                        "multiplicativity",
                        (i, j),
                        f"d(endo {i} o endo {j}) = {values[row[j]].value} "
                        f"!= d({i})*d({j}) = {di * values[j].value % m} mod {m}",
                    )
                )
    for e in endos:
        if e.is_automorphism and gcd(values[e.canonical_index].value, m) != 1:
            failures.append(
                LawFailure(
                    "unit",
                    (e.canonical_index,),
                    f"automorphism {e.canonical_index} maps to non-unit "
                    f"{values[e.canonical_index].value} mod {m}",
                )
            )
    return failures


def build_degree_hom(
    g: FiniteGroup,
    n: int,
    user_table: dict[int, int] | None = None,
) -> DegreeHom:
    """Construct d for (G, n); cyclic groups need no table."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    endos = enumerate_endomorphisms(g)
    if user_table is None:
        if cyclic_generator(g) is None:
            raise UnsupportedGroupError(
                f"no built-in degree homomorphism for non-cyclic {g!r}; "
                "supply a d-table"
            )
        values = tuple(d_cyclic(endo_residue(e), n) for e in endos)
        return DegreeHom(group=g, n=n, values=values, provenance="builtin-cyclic")

    missing = [e.canonical_index for e in endos if e.canonical_index not in user_table]
    if missing:
        raise IncompleteTableError(
            f"d-table missing entries for endomorphism indices {missing}"
        )
    values = tuple(Residue(user_table[e.canonical_index], g.order) for e in endos)
    failures = _law_failures(g, values)
    for f in failures:
        if f.law == "multiplicativity":
            raise NotAHomomorphismError(f.message, witness=(f.witness[0], f.witness[1]))
    if failures:
        raise InvalidTableError("; ".join(f.message for f in failures))
    return DegreeHom(group=g, n=n, values=values, provenance="user-supplied")


def validate_degree_hom(d: DegreeHom) -> HomValidationReport:
    """Certify the homomorphism laws; failures carry explicit witnesses."""
    failures = _law_failures(d.group, d.values)
    return HomValidationReport(passed=not failures, failures=tuple(failures))


# --- d-table file format: {"n": n, "values": {"<endo_index>": residue}} ---


def dtable_to_json(d: DegreeHom) -> dict:
    return {
        "n": d.n,
        "values": {str(i): r.value for i, r in enumerate(d.values)},
    }


def dtable_from_json(data: dict) -> tuple[int | None, dict[int, int]]:
    values = {int(k): int(v) for k, v in data.get("values", {}).items()}
    n = data.get("n")
    return (int(n) if n is not None else None, values)


def load_dtable(path: str | Path) -> tuple[int | None, dict[int, int]]:
    with open(path) as fh:
        return dtable_from_json(json.load(fh))
