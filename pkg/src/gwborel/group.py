"""Fermat symmetry data: weights, finite abelian group, splitting, ages.

Everything downstream consumes multiplicity vectors m_j(g) in [0,1)^N, the
distinguished element j = (q_1, ..., q_N) with q_j = c_j/d, and the splitting
G = <j> + Gbar where every Gbar generator fixes the first coordinate.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import CrepantInput, InvalidMultiplicity, NoSplitting

__all__ = [
    "FermatInput",
    "GroupElement",
    "GroupData",
    "GroupWarning",
    "enumerate_group",
    "age",
    "weighted_multiplicity",
]


class GroupWarning(UserWarning):
    pass


@dataclass(frozen=True)
class GroupElement:
    """Diagonal symmetry encoded by its multiplicities, each in [0,1)."""

    m: tuple[Fraction, ...]

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(tuple((a + b) % 1 for a, b in zip(self.m, other.m)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(tuple((-a) % 1 for a in self.m))

    def scale(self, k: int) -> "GroupElement":
        return GroupElement(tuple((k * a) % 1 for a in self.m))

    @property
    def age(self) -> Fraction:
        return sum(self.m, Fraction(0))

    def fixed_coords(self) -> tuple[int, ...]:
        """0-based coordinates on which the element acts trivially."""
        return tuple(j for j, a in enumerate(self.m) if a == 0)

    def fixes_only_origin(self) -> bool:
        return all(a != 0 for a in self.m)

    def is_identity(self) -> bool:
        return all(a == 0 for a in self.m)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.m) + ")"


@dataclass(frozen=True)
class FermatInput:
    """Quasihomogeneity degree d and integer weights c_j, with q_j = c_j/d."""

    d: int
    c: tuple[int, ...]

    def __post_init__(self):
        if self.d <= 0 or not self.c or any(cj <= 0 for cj in self.c):
            raise InvalidMultiplicity("d and all weights must be positive")
        g = 0
        for cj in self.c:
            g = gcd(g, cj)
        if g != 1:
            raise InvalidMultiplicity(f"gcd{self.c} = {g} != 1")
        for cj in self.c:
            if self.d % cj != 0:
                raise InvalidMultiplicity(f"weight {cj} does not divide d={self.d}")

    @property
    def n_coords(self) -> int:
        return len(self.c)

    @property
    def q(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(cj, self.d) for cj in self.c)

    @property
    def r(self) -> int:
        return sum(self.c) - self.d

    @property
    def jay(self) -> GroupElement:
        return GroupElement(self.q)

    def validate_element(self, g: GroupElement) -> None:
        if len(g.m) != self.n_coords:
            raise InvalidMultiplicity("wrong number of multiplicities")
        for mj, qj in zip(g.m, self.q):
            if not (0 <= mj < 1):
                raise InvalidMultiplicity(f"multiplicity {mj} outside [0,1)")
            if (mj / qj).denominator != 1:
                raise InvalidMultiplicity(f"{mj} is not a multiple of {qj}")
            if mj != 0 and mj < qj:
                raise InvalidMultiplicity(f"{mj} is neither 0 nor >= {qj}")


def age(g: GroupElement) -> Fraction:
    """Sum of the multiplicities of g."""
    return g.age


def _closure(gens: list[GroupElement], n: int) -> list[GroupElement]:
    ident = GroupElement(tuple(Fraction(0) for _ in range(n)))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                s = h + g
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(seen, key=lambda e: e.m)


@dataclass(frozen=True)
class GroupData:
    """Enumerated group with splitting, cosets, narrow flags and r."""

    input: FermatInput
    elements: tuple[GroupElement, ...]
    jay: GroupElement
    gbar_generators: tuple[GroupElement, ...]
    gbar_elements: tuple[GroupElement, ...]
    narrow: dict = field(repr=False)
    # g -> (k, gbar) with g = jay^k * gbar
    factorization: dict = field(repr=False)

    @property
    def d(self) -> int:
        return self.input.d

    @property
    def c(self) -> tuple[int, ...]:
        return self.input.c

    @property
    def q(self) -> tuple[Fraction, ...]:
        return self.input.q

    @property
    def n_coords(self) -> int:
        return self.input.n_coords

    @property
    def r(self) -> int:
        return self.input.r

    @property
    def disc_sign(self) -> int:
        r = self.r
        return 0 if r == 0 else (1 if r > 0 else -1)

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_narrow(self, g: GroupElement) -> bool:
        return self.narrow[g]

    def coset_of(self, g: GroupElement) -> GroupElement:
        return self.factorization[g][1]

    def jay_power_of(self, g: GroupElement) -> int:
        return self.factorization[g][0]

    def element(self, k0: int, kbar: tuple[int, ...] = ()) -> GroupElement:
        """jay^k0 * prod_i gen_i^kbar_i."""
        g = self.jay.scale(k0)
        for gen, k in zip(self.gbar_generators, kbar):
            g = g + gen.scale(k)
        return g

    def weighted_multiplicities(self, kbar: tuple[int, ...]) -> tuple[Fraction, ...]:
        """a(k)^j = sum_i kbar_i * m_j(gen_i), one exact rational per coordinate."""
        out = []
        for j in range(self.n_coords):
            out.append(sum((k * gen.m[j] for gen, k in zip(self.gbar_generators, kbar)),
                           Fraction(0)))
        return tuple(out)

    def require_discrepant(self) -> None:
        if self.r == 0:
            raise CrepantInput(
                f"d={self.d}, c={self.c}: r = sum(c)-d = 0 (crepant case rejected)")


def weighted_multiplicity(group: GroupData, kbar: tuple[int, ...], j: int) -> Fraction:
    """a(k)^j for a multi-index over the Gbar generators (j is 0-based)."""
    if any(k < 0 for k in kbar):
        raise InvalidMultiplicity("multi-index entries must be nonnegative")
    return group.weighted_multiplicities(kbar)[j]


def _solve_m1_zero(inp: FermatInput, g: GroupElement) -> list[int]:
    """All k in [0, d) with m_1(g * jay^k) = 0, smallest first."""
    d, c1 = inp.d, inp.c[0]
    a = int(g.m[0] / inp.q[0])  # m_1(g) = a * c_1 / d
    # need k*c_1 = -d*m_1(g) = -a*c_1 (mod d), i.e. k = -a (mod d/c_1)
    step = d // c1
    k0 = (-a) % step
    return list(range(k0, d, step))


def enumerate_group(inp: FermatInput, generators: list[GroupElement],
                    strict_discrepant: bool = False) -> GroupData:
    """Close the generators together with jay, split off Gbar, flag narrowness.

    Each supplied generator g is replaced by g*jay^k with m_1 = 0; among the
    solutions of the congruence the smallest k giving a direct splitting is
    chosen (deterministic lexicographic search).  The crepant case r = 0 is
    allowed here unless strict_discrepant is set; operations that need a
    correspondence direction raise CrepantInput themselves.
    """
    jay = inp.jay
    inp.validate_element(jay)
    for g in generators:
        inp.validate_element(g)
    if strict_discrepant and inp.r == 0:
        raise CrepantInput(f"d={inp.d}, c={inp.c}: r=0")

    elements = _closure([jay] + list(generators), inp.n_coords)

    # jay-subgroup, for splitting checks
    jay_powers = {jay.scale(k): k for k in range(inp.d)}
    if len(jay_powers) != inp.d:
        raise NoSplitting("jay does not have order d")

    choice_sets = [_solve_m1_zero(inp, g) for g in generators]
    normalized = None
    for ks in itertools.product(*choice_sets):
        cand = [g + jay.scale(k) for g, k in zip(generators, ks)]
        gbar = _closure(cand, inp.n_coords) if cand else _closure([], inp.n_coords)
        if len(gbar) * inp.d == len(elements) and \
                sum(1 for h in gbar if h in jay_powers) == 1:
            normalized = [g for g in cand if not g.is_identity()]
            gbar_elements = gbar
            break
    else:
        raise NoSplitting(
            "no choice of jay-shifts yields a direct splitting with m_1 = 0")

    factorization = {}
    for h in gbar_elements:
        for k in range(inp.d):
            factorization[jay.scale(k) + h] = (k, h)
    if len(factorization) != len(elements):
        raise NoSplitting("splitting map is not a bijection")

    narrow = {g: (g + jay).fixes_only_origin() for g in elements}

    for g in elements:
        if not g.fixes_only_origin() and g.age.denominator != 1:
            warnings.warn(
                f"element {g} fixes a coordinate but has fractional age {g.age}; "
                "the hypersurface-side correspondence assumes such elements act "
                "with determinant one", GroupWarning, stacklevel=2)

    return GroupData(
        input=inp,
        elements=tuple(elements),
        jay=jay,
        gbar_generators=tuple(normalized),
        gbar_elements=tuple(gbar_elements),
        narrow=narrow,
        factorization=factorization,
    )
