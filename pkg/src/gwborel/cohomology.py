"""Coefficient algebra: Laurent polynomials in the equivariant parameter,
nilpotent hyperplane classes per twisted sector, symbolic reciprocal-Gamma
factors, and the grading used to restore powers of z.

A state-space element is a CohomClass: a map from basis entries
(sector element g, hyperplane power p) to exact Laurent polynomials in
lambda.  Multiplication is sector-diagonal and truncates hyperplane powers
at the per-sector nilpotency bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegerOffset, NonInvertible, UnknownGrade
from .group import GroupData, GroupElement

__all__ = [
    "LambdaPoly",
    "HPoly",
    "StateSpace",
    "CohomClass",
    "GammaFactor",
    "GradingData",
    "gamma_ratio",
    "linear_form",
]

Q = Fraction


class LambdaPoly:
    """Laurent polynomial in lambda with exact rational coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        self.c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = Q(v)
                if v != 0:
                    self.c[int(e)] = v

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, v) -> "LambdaPoly":
        return cls({0: Q(v)})

    @classmethod
    def lam(cls, coeff=1, power=1) -> "LambdaPoly":
        return cls({power: Q(coeff)})

    @classmethod
    def zero(cls) -> "LambdaPoly":
        return cls()

    # -- ring operations ----------------------------------------------------
    def __add__(self, other):
        other = _as_lp(other)
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, Q(0)) + v
        return LambdaPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly({e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        return self + (-_as_lp(other))

    def __rsub__(self, other):
        return _as_lp(other) + (-self)

    def __mul__(self, other):
        other = _as_lp(other)
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                out[e] = out.get(e, Q(0)) + v1 * v2
        return LambdaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = LambdaPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return self.c == _as_lp(other).c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    # -- queries ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.c

    def min_exp(self) -> int:
        return min(self.c) if self.c else 0

    def max_exp(self) -> int:
        return max(self.c) if self.c else 0

    def has_negative_powers(self) -> bool:
        return bool(self.c) and min(self.c) < 0

    def constant_term(self) -> Fraction:
        return self.c.get(0, Q(0))

    def limit0(self) -> Fraction:
        """Value at lambda = 0; requires no negative powers."""
        from .errors import LambdaLimitUndefined
        if self.has_negative_powers():
            raise LambdaLimitUndefined(f"negative lambda-powers in {self}")
        return self.constant_term()

    def monomial(self):
        """(exponent, coefficient) if a single monomial, else None."""
        if len(self.c) == 1:
            e, v = next(iter(self.c.items()))
            return e, v
        return None

    def inverse_if_monomial(self) -> "LambdaPoly":
        m = self.monomial()
        if m is None:
            raise NonInvertible(f"{self} is not a lambda-monomial")
        e, v = m
        return LambdaPoly({-e: 1 / v})

    # -- evaluation ---------------------------------------------------------
    def eval(self, lam_value):
        """Evaluate at a numeric (or Fraction) lambda."""
        out = 0
        for e, v in sorted(self.c.items()):
            if e >= 0:
                out = out + v * lam_value ** e
            else:
                out = out + v / lam_value ** (-e)
        return out

    def __repr__(self):
        if not self.c:
            return "0"
        bits = []
        for e in sorted(self.c):
            v = self.c[e]
            if e == 0:
                bits.append(f"{v}")
            elif e == 1:
                bits.append(f"{v}*L")
            else:
                bits.append(f"{v}*L^{e}")
        return " + ".join(bits)


def _as_lp(x) -> LambdaPoly:
    if isinstance(x, LambdaPoly):
        return x
    return LambdaPoly.const(x)


ZERO = LambdaPoly.zero()
ONE = LambdaPoly.const(1)


class HPoly:
    """Truncated polynomial in the hyperplane class H modulo H^nil."""

    __slots__ = ("nil", "c")

    def __init__(self, nil: int, coeffs=None):
        self.nil = nil
        self.c = [ZERO] * nil
        if coeffs:
            for p, v in enumerate(coeffs):
                if p < nil:
                    self.c[p] = _as_lp(v)

    @classmethod
    def const(cls, nil, v) -> "HPoly":
        return cls(nil, [v])

    @classmethod
    def h(cls, nil) -> "HPoly":
        return cls(nil, [0, 1]) if nil > 1 else cls(nil)

    def __add__(self, other):
        other = self._coerce(other)
        return HPoly(self.nil, [a + b for a, b in zip(self.c, other.c)])

    __radd__ = __add__

    def __neg__(self):
        return HPoly(self.nil, [-a for a in self.c])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        out = [ZERO] * self.nil
        for p1, v1 in enumerate(self.c):
            if v1.is_zero():
                continue
            for p2, v2 in enumerate(other.c):
                p = p1 + p2
                if p >= self.nil:
                    break
                out[p] = out[p] + v1 * v2
        return HPoly(self.nil, out)

    __rmul__ = __mul__

    def _coerce(self, other) -> "HPoly":
        if isinstance(other, HPoly):
            if other.nil != self.nil:
                raise ValueError("nilpotency mismatch")
            return other
        return HPoly(self.nil, [other])

    def inverse(self) -> "HPoly":
        """(s + n)^(-1) with s the scalar part (a lambda-monomial) and n nilpotent.

        Expands as s^(-1) * sum_k (-n/s)^k, exact in the truncated ring.
        """
        s = self.c[0]
        if s.is_zero():
            raise NonInvertible("zero scalar part")
        s_inv = s.inverse_if_monomial()
        n = HPoly(self.nil, [ZERO] + list(self.c[1:]))
        out = HPoly.const(self.nil, 1)
        ns = n * s_inv
        term = HPoly.const(self.nil, 1)
        for k in range(1, self.nil):
            term = term * ns
            out = out + (term if k % 2 == 0 else -term)
        return out * s_inv

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.c)

    def __eq__(self, other):
        return self.nil == other.nil and self.c == other.c

    def eval(self, lam_value, ctx=None):
        """Coefficient list with lambda substituted (index = H-power)."""
        return [v.eval(lam_value) for v in self.c]

    def __repr__(self):
        return "HPoly(" + "; ".join(repr(v) for v in self.c) + ")"


def linear_form(nil: int, const=0, lam=0, h=0) -> HPoly:
    """const + lam*L + h*H in the rank-nil sector ring."""
    base = LambdaPoly({0: Q(const), 1: Q(lam)}) if lam else LambdaPoly.const(const)
    coeffs = [base]
    if h:
        coeffs.append(LambdaPoly.const(h))
    return HPoly(nil, coeffs)


def gamma_ratio(x: HPoly, n: int) -> HPoly:
    """Gamma(1+x)/Gamma(1+x-n) as the exact finite product prod_{l=0}^{n-1}(x-l).

    Negative n yields the reciprocal product 1/prod_{l=1}^{|n|}(x+l), which must
    be invertible in the sector ring.
    """
    if not isinstance(n, int):
        raise NonIntegerOffset(f"offset {n!r} is not an integer")
    out = HPoly.const(x.nil, 1)
    if n >= 0:
        for l in range(n):
            out = out * (x - LambdaPoly.const(l))
    else:
        for l in range(1, -n + 1):
            out = out * (x + LambdaPoly.const(l)).inverse()
    return out


# --------------------------------------------------------------------------
# state spaces
# --------------------------------------------------------------------------

class StateSpace:
    """Sector/H-power basis for one of the four state spaces.

    tag 'X'    : one fundamental class per group element.
    tag 'Y'    : classes 1_g H^p, p < #coordinates fixed by g (empty sectors drop).
    tag 'FJRW' : one class phi_g per narrow g.
    tag 'Z'    : the Y basis with the top H-power removed on each sector.
    """

    def __init__(self, tag: str, group: GroupData):
        if tag not in ("X", "Y", "FJRW", "Z"):
            raise ValueError(f"unknown space tag {tag!r}")
        self.tag = tag
        self.group = group
        self._nil = {}
        for g in group.elements:
            if tag == "X":
                n = 1
            elif tag == "FJRW":
                n = 1 if group.is_narrow(g) else 0
            else:
                n = len(g.fixed_coords())
                if tag == "Z":
                    n = max(n - 1, 0)
            self._nil[g] = n
        self.sectors = tuple(g for g in group.elements if self._nil[g] > 0)
        self.entries = tuple((g, p) for g in self.sectors
                             for p in range(self._nil[g]))

    def nil(self, g: GroupElement) -> int:
        return self._nil.get(g, 0)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def coset_entries(self, gbar: GroupElement) -> tuple:
        return tuple(e for e in self.entries
                     if self.group.coset_of(e[0]) == gbar)

    def coset_dim(self, gbar: GroupElement) -> int:
        return len(self.coset_entries(gbar))

    def __repr__(self):
        return f"StateSpace({self.tag}, dim={self.dim})"


class CohomClass:
    """Finitely supported map from basis entries to Laurent polynomials."""

    __slots__ = ("space", "c")

    def __init__(self, space: StateSpace, coeffs=None):
        self.space = space
        self.c = {}
        if coeffs:
            for (g, p), v in coeffs.items():
                v = _as_lp(v)
                if not v.is_zero() and p < space.nil(g):
                    self.c[(g, p)] = v

    @classmethod
    def from_hpoly(cls, space: StateSpace, g: GroupElement, hp: HPoly) -> "CohomClass":
        return cls(space, {(g, p): v for p, v in enumerate(hp.c)})

    def hpoly(self, g: GroupElement) -> HPoly:
        n = self.space.nil(g)
        return HPoly(n, [self.c.get((g, p), ZERO) for p in range(n)])

    def __add__(self, other):
        out = dict(self.c)
        for k, v in other.c.items():
            s = out.get(k, ZERO) + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return CohomClass(self.space, out)

    def __neg__(self):
        return CohomClass(self.space, {k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, v) -> "CohomClass":
        v = _as_lp(v)
        return CohomClass(self.space, {k: val * v for k, val in self.c.items()})

    def __mul__(self, other):
        """Sector-diagonal product truncating at the per-sector nilpotency."""
        if not isinstance(other, CohomClass):
            return self.scale(other)
        out = {}
        sectors = {g for g, _ in self.c} & {g for g, _ in other.c}
        for g in sectors:
            prod = self.hpoly(g) * other.hpoly(g)
            for p, v in enumerate(prod.c):
                if not v.is_zero():
                    out[(g, p)] = out.get((g, p), ZERO) + v
        return CohomClass(self.space, out)

    def is_zero(self) -> bool:
        return not self.c

    def __eq__(self, other):
        return isinstance(other, CohomClass) and self.c == other.c

    def has_negative_lambda(self) -> bool:
        return any(v.has_negative_powers() for v in self.c.values())

    def limit0(self) -> "CohomClass":
        return CohomClass(self.space, {k: LambdaPoly.const(v.limit0())
                                       for k, v in self.c.items()})

    def items(self):
        return sorted(self.c.items(), key=lambda kv: (kv[0][0].m, kv[0][1]))

    def __repr__(self):
        if not self.c:
            return "0"
        bits = [f"({v})*[{g}]H^{p}" if p else f"({v})*[{g}]"
                for (g, p), v in self.items()]
        return " + ".join(bits)


# --------------------------------------------------------------------------
# symbolic reciprocal-Gamma factors
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class GammaFactor:
    """1/Gamma(residue + shift + lambda_slope*lambda), residue in [0,1)."""

    residue: Fraction
    shift: int
    lambda_slope: Fraction

    @classmethod
    def reciprocal(cls, arg: Fraction, lambda_slope=Q(0)) -> "GammaFactor":
        """Normal form of 1/Gamma(arg + lambda_slope*lambda)."""
        arg = Q(arg)
        shift = int(arg // 1)
        residue = arg - shift
        return cls(residue, shift, Q(lambda_slope))

    @property
    def argument(self) -> Fraction:
        return self.residue + self.shift

    def ratio_to(self, other: "GammaFactor") -> LambdaPoly:
        """self/other = Gamma(other-arg)/Gamma(self-arg) as an exact polynomial.

        Defined when the residues and slopes agree, so the two arguments differ
        by the integer n = other.shift - self.shift:
        Gamma(x+n)/Gamma(x) = prod_{l=0}^{n-1}(x+l) with x = self-argument.
        """
        if self.residue != other.residue or self.lambda_slope != other.lambda_slope:
            raise NonIntegerOffset(
                f"gamma factors {self} and {other} do not differ by an integer")
        n = other.shift - self.shift
        x = LambdaPoly({0: self.argument, 1: self.lambda_slope})
        out = ONE
        if n >= 0:
            for l in range(n):
                out = out * (x + LambdaPoly.const(l))
        else:
            raise NonIntegerOffset("ratio_to expects the smaller argument on self")
        return out

    def eval(self, lam_value, ctx):
        a = self.argument
        v = ctx.mpf(a.numerator) / a.denominator
        if self.lambda_slope:
            s = self.lambda_slope
            v = v + (ctx.mpf(s.numerator) / s.denominator) * lam_value
        return ctx.rgamma(v)

    def __str__(self):
        s = f"{self.argument}"
        if self.lambda_slope:
            s += f" + {self.lambda_slope}*L"
        return f"1/Gamma({s})"


# --------------------------------------------------------------------------
# grading
# --------------------------------------------------------------------------

class GradingData:
    """Exact grades for basis entries, coordinates, lambda and H.

    On the quotient side the sector 1_{j^{k0} prod g^{k_g}} has grade
    sum_j <k0 q_j + a^j>; on the blowup side 1_{j^{-k0} prod g^{k_g}} has grade
    sum_j <k0 q_j - a^j>; H and lambda have grade 1 and the coordinate dual to
    g has grade 1 - age(g).
    """

    def __init__(self, space: StateSpace):
        self.space = space
        group = space.group
        self._grade = {}
        sign = -1 if space.tag in ("Y", "Z") else 1
        for g in space.sectors:
            # reconstruct the fractional parts directly from the multiplicities
            if sign == 1:
                base = sum(g.m, Q(0))
            else:
                base = sum(((-a) % 1 for a in g.m), Q(0))
            for p in range(space.nil(g)):
                self._grade[(g, p)] = base + p

    def grade(self, entry) -> Fraction:
        try:
            return self._grade[entry]
        except KeyError:
            raise UnknownGrade(f"no grade recorded for basis entry {entry}")

    def coordinate_grade(self, g: GroupElement) -> Fraction:
        return 1 - g.age
