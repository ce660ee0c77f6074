"""Exact truncated series in sqrt(gamma) with coefficients in Q[sqrt(pi)**p, r**j].

Every low-density expansion this package deals in lives in a small
coefficient ring: a rational number times an integer power p of sqrt(pi)
times a nonnegative power j of the range ratio r.  A ``HalfSeries``
represents

    sum_{n = 0 .. order}  c_n * gamma**(n/2)

with each c_n a sum of such ring elements, and implements exact ring
arithmetic with hard truncation at ``order``.  All structural arithmetic is
Fraction-exact, so coefficient checks are equalities rather than closeness
tests; floats appear only in :meth:`HalfSeries.evaluate` and in formatting.

The physical quantities keep the conventional truncation of the printed
expansions: universal (r**0) terms through gamma**(3/2) and range-linear
(r**1) terms through r*gamma**2; r**2 and higher mixed orders are discarded
even when the composition generates them.  Because r only ever enters
through t = 8*pi*gamma*r, a term gamma**(n/2) r**j has n >= 2j, so order 4
is enough to produce every kept slot.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Mapping

from .errors import NonUnitConstantTerm

RingKey = tuple[int, int]  # (p, j): power of sqrt(pi), power of r
CoeffMap = dict[RingKey, Fraction]

MAX_ORDER = 4
QUANTITIES = ("depletion", "mu", "pressure", "energy", "sound")

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _map_add(a: Mapping[RingKey, Fraction], b: Mapping[RingKey, Fraction]) -> CoeffMap:
    out: CoeffMap = dict(a)
    for key, q in b.items():
        total = out.get(key, _ZERO) + q
        if total:
            out[key] = total
        else:
            out.pop(key, None)
    return out


def _map_mul(a: Mapping[RingKey, Fraction], b: Mapping[RingKey, Fraction]) -> CoeffMap:
    out: CoeffMap = {}
    for (pa, ja), qa in a.items():
        for (pb, jb), qb in b.items():
            key = (pa + pb, ja + jb)
            total = out.get(key, _ZERO) + qa * qb
            if total:
                out[key] = total
            else:
                out.pop(key, None)
    return out


def _map_scale(a: Mapping[RingKey, Fraction], q: Fraction, p: int = 0, j: int = 0) -> CoeffMap:
    if not q:
        return {}
    return {(pa + p, ja + j): qa * q for (pa, ja), qa in a.items()}


class HalfSeries:
    """Truncated series in sqrt(gamma) over the rational*(sqrt pi)**p*r**j ring."""

    __slots__ = ("order", "terms")

    def __init__(
        self,
        order: int,
        terms: Mapping[int, Mapping[RingKey, Fraction]] | None = None,
    ) -> None:
        if order < 0:
            raise ValueError(f"order must be nonnegative, got {order}")
        self.order = order
        tidy: dict[int, CoeffMap] = {}
        for n, cmap in (terms or {}).items():
            if n < 0:
                raise ValueError(f"negative half-power {n}")
            if n > order:
                continue  # truncate, never silently exceed the order
            cleaned = {key: Fraction(q) for key, q in cmap.items() if q}
            for p, j in cleaned:
                if j < 0:
                    raise ValueError(f"negative power of r in key {(p, j)}")
            if cleaned:
                tidy[n] = cleaned
        self.terms = tidy

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "HalfSeries":
        return cls(order, {})

    @classmethod
    def constant(cls, order: int, q: Fraction | int = 1, p: int = 0, j: int = 0) -> "HalfSeries":
        return cls(order, {0: {(p, j): Fraction(q)}})

    @classmethod
    def monomial(cls, order: int, n: int, q: Fraction | int, p: int = 0, j: int = 0) -> "HalfSeries":
        return cls(order, {n: {(p, j): Fraction(q)}})

    # -- ring arithmetic (always truncating to the smaller order) ----------

    def __add__(self, other: "HalfSeries") -> "HalfSeries":
        if not isinstance(other, HalfSeries):
            return NotImplemented
        order = min(self.order, other.order)
        terms: dict[int, CoeffMap] = {}
        for n in range(order + 1):
            merged = _map_add(self.terms.get(n, {}), other.terms.get(n, {}))
            if merged:
                terms[n] = merged
        return HalfSeries(order, terms)

    def __sub__(self, other: "HalfSeries") -> "HalfSeries":
        if not isinstance(other, HalfSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "HalfSeries":
        return self.scale(Fraction(-1))

    def __mul__(self, other):
        if isinstance(other, HalfSeries):
            order = min(self.order, other.order)
            terms: dict[int, CoeffMap] = {}
            for na, ca in self.terms.items():
                for nb, cb in other.terms.items():
                    n = na + nb
                    if n > order:
                        continue
                    merged = _map_add(terms.get(n, {}), _map_mul(ca, cb))
                    if merged:
                        terms[n] = merged
                    else:
                        terms.pop(n, None)
            return HalfSeries(order, terms)
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, q: Fraction | int, p: int = 0, j: int = 0) -> "HalfSeries":
        """Multiply by a single ring element q * sqrt(pi)**p * r**j."""
        q = Fraction(q)
        return HalfSeries(
            self.order,
            {n: _map_scale(cmap, q, p, j) for n, cmap in self.terms.items()},
        )

    # -- structure ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HalfSeries):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    __hash__ = None  # mutable mapping inside

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, n: int) -> CoeffMap:
        """Copy of the ring-element map multiplying gamma**(n/2)."""
        return dict(self.terms.get(n, {}))

    def iter_terms(self) -> Iterator[tuple[int, int, int, Fraction]]:
        """Yield (n, p, j, q) in deterministic (n, p, j) order."""
        for n in sorted(self.terms):
            cmap = self.terms[n]
            for p, j in sorted(cmap):
                yield n, p, j, cmap[(p, j)]

    def __repr__(self) -> str:
        body = " + ".join(format_term(n, p, j, q) for n, p, j, q in self.iter_terms())
        return f"HalfSeries(order={self.order}: {body or '0'})"

    # -- numerics ------------------------------------------------------------

    def evaluate(self, gamma: float, r: float) -> float:
        """Term-by-term floating evaluation at (gamma, r), pi numeric."""
        total = 0.0
        for n, p, j, q in self.iter_terms():
            total += float(q) * math.pi ** (0.5 * p) * r ** j * gamma ** (0.5 * n)
        return total


def diff_terms(
    a: HalfSeries, b: HalfSeries
) -> list[tuple[int, int, int, Fraction, Fraction]]:
    """Slots where two series disagree, as (n, p, j, q_a, q_b)."""
    rows = []
    for n in sorted(set(a.terms) | set(b.terms)):
        ca, cb = a.terms.get(n, {}), b.terms.get(n, {})
        for key in sorted(set(ca) | set(cb)):
            qa, qb = ca.get(key, _ZERO), cb.get(key, _ZERO)
            if qa != qb:
                rows.append((n, key[0], key[1], qa, qb))
    return rows


# -- elementary series builders ---------------------------------------------


def t_series(order: int) -> HalfSeries:
    """t = 8*pi*gamma*r as a monomial (n=2, q=8, p=2, j=1)."""
    return HalfSeries.monomial(order, 2, Fraction(8), p=2, j=1)


def binomial_series(alpha: Fraction | int | str, t: HalfSeries) -> HalfSeries:
    """(1 + t)**alpha for a series t with zero constant term."""
    if t.terms.get(0):
        raise ValueError("binomial_series requires a zero constant term")
    alpha = Fraction(alpha)
    order = t.order
    lowest = min(t.terms) if t.terms else 0
    k_max = order // lowest if lowest else 0
    result = HalfSeries.constant(order)
    power = HalfSeries.constant(order)
    coeff = _ONE
    for k in range(1, k_max + 1):
        coeff *= (alpha - (k - 1)) / k
        power = power * t
        result = result + power.scale(coeff)
    return result


def sqrt_series(a: HalfSeries) -> HalfSeries:
    """Series b with b*b == a to the kept order; a must have constant term 1."""
    if a.terms.get(0) != {(0, 0): _ONE}:
        raise NonUnitConstantTerm("series square root requires constant term exactly 1")
    half = Fraction(1, 2)
    b: dict[int, CoeffMap] = {0: {(0, 0): _ONE}}
    for n in range(1, a.order + 1):
        # b_n = (a_n - sum_{k=1..n-1} b_k b_{n-k}) / 2, since b_0 = 1.
        acc: CoeffMap = dict(a.terms.get(n, {}))
        for k in range(1, n):
            bk, bnk = b.get(k), b.get(n - k)
            if bk and bnk:
                acc = _map_add(acc, _map_scale(_map_mul(bk, bnk), Fraction(-1)))
        coeffs = _map_scale(acc, half)
        if coeffs:
            b[n] = coeffs
    return HalfSeries(a.order, b)


def rho_log_derivative(mu_series: HalfSeries) -> HalfSeries:
    """Map S(gamma) to S + gamma*dS/dgamma, i.e. scale slot n by (1 + n/2).

    For mu/(g rho) = S(gamma) with gamma proportional to rho at fixed
    scattering parameters, this is the squared sound-speed ratio
    c**2 / (g rho / m)."""
    terms = {
        n: _map_scale(cmap, Fraction(2 + n, 2))
        for n, cmap in mu_series.terms.items()
    }
    return HalfSeries(mu_series.order, terms)


# -- the physical expansions --------------------------------------------------


def _check_order(order: int) -> None:
    if not (0 <= order <= MAX_ORDER):
        raise ValueError(f"order must be in 0..{MAX_ORDER}, got {order}")


def _s_power(alpha: Fraction, order: int) -> HalfSeries:
    """(m*/m)**alpha = (1 + t)**(-alpha) expanded in t."""
    return binomial_series(-alpha, t_series(order))


def u_series(order: int = MAX_ORDER, drop_m2: bool = False) -> HalfSeries:
    """Perturbative reduced root 1 - kappa/2 + (5/8) kappa**2 as a series.

    kappa = (32/(3 sqrt(pi))) sqrt(gamma) (1+t)**-2; drop_m2 omits the
    kappa**2 term."""
    _check_order(order)
    kappa = HalfSeries.monomial(order, 1, Fraction(32, 3), p=-1) * binomial_series(
        -2, t_series(order)
    )
    u = HalfSeries.constant(order) - kappa.scale(Fraction(1, 2))
    if not drop_m2:
        u = u + (kappa * kappa).scale(Fraction(5, 8))
    return u


def _keep_printed_slots(series: HalfSeries) -> HalfSeries:
    # Universal terms through gamma**(3/2), range-linear through r*gamma**2.
    kept: dict[int, CoeffMap] = {}
    for n, cmap in series.terms.items():
        filtered = {
            (p, j): q
            for (p, j), q in cmap.items()
            if (j == 0 and n <= 3) or (j == 1 and n <= 4)
        }
        if filtered:
            kept[n] = filtered
    return HalfSeries(series.order, kept)


def expand_quantity(which: str, order: int = MAX_ORDER, drop_m2: bool = False) -> HalfSeries:
    """Re-derive a printed expansion from the structural formulas.

    The thermodynamic ratios are composed from the perturbative root and the
    binomial expansions of the mass-ratio powers, then truncated to the
    conventionally kept slots.  ``energy`` is formed from the Legendre
    combination 2*mu - pressure; ``sound`` from the density-log derivative of
    mu followed by a series square root."""
    if which not in QUANTITIES:
        raise ValueError(f"unknown quantity {which!r}, expected one of {QUANTITIES}")
    _check_order(order)
    if which == "energy":
        mu = expand_quantity("mu", order, drop_m2)
        pressure = expand_quantity("pressure", order, drop_m2)
        return _keep_printed_slots(2 * mu - pressure)
    if which == "sound":
        mu = expand_quantity("mu", order, drop_m2)
        return _keep_printed_slots(sqrt_series(rho_log_derivative(mu)))

    u = u_series(order, drop_m2)
    u3 = u * u * u
    if which == "depletion":
        shell = _s_power(Fraction(3, 2), order) * (
            2 * _s_power(Fraction(1, 2), order) - _s_power(Fraction(-1, 2), order)
        )
        series = HalfSeries.monomial(order, 1, Fraction(8, 3), p=-1) * shell * u3
    elif which == "mu":
        series = HalfSeries.constant(order) + (
            HalfSeries.monomial(order, 1, Fraction(32, 3), p=-1)
            * _s_power(Fraction(2), order)
            * u3
        )
    else:  # pressure
        s2 = _s_power(Fraction(2), order)
        s72 = _s_power(Fraction(7, 2), order)
        u5 = u3 * u * u
        u6 = u3 * u3
        series = (
            HalfSeries.constant(order)
            + HalfSeries.monomial(order, 1, Fraction(64, 3), p=-1) * s2 * u3
            - HalfSeries.monomial(order, 1, Fraction(128, 15), p=-1) * s2 * u5
            + HalfSeries.monomial(order, 2, Fraction(1024, 9), p=-2) * s72 * u6
        )
    return _keep_printed_slots(series)


def printed_reference(which: str) -> HalfSeries:
    """Hard-coded kept coefficients of the published expansions (order 4)."""
    if which not in QUANTITIES:
        raise ValueError(f"unknown quantity {which!r}, expected one of {QUANTITIES}")
    order = MAX_ORDER
    F = Fraction
    if which == "depletion":
        bracket = HalfSeries(order, {
            0: {(0, 0): F(1)},
            1: {(-1, 0): F(-16)},
            2: {(-2, 0): F(896, 3), (2, 1): F(-24)},
            3: {(1, 1): F(640)},
        })
        return HalfSeries.monomial(order, 1, F(8, 3), p=-1) * bracket
    tables: dict[str, dict[int, CoeffMap]] = {
        "mu": {
            0: {(0, 0): F(1)},
            1: {(-1, 0): F(32, 3)},
            2: {(-2, 0): F(-512, 3)},
            3: {(-3, 0): F(28672, 9), (1, 1): F(-512, 3)},
            4: {(0, 1): F(16384, 3)},
        },
        "pressure": {
            0: {(0, 0): F(1)},
            1: {(-1, 0): F(64, 5)},
            3: {(-3, 0): F(-8192, 3), (1, 1): F(-1024, 5)},
            4: {(0, 1): F(4096, 9)},
        },
        "energy": {
            0: {(0, 0): F(1)},
            1: {(-1, 0): F(128, 15)},
            2: {(-2, 0): F(-1024, 3)},
            3: {(-3, 0): F(81920, 9), (1, 1): F(-2048, 15)},
            4: {(0, 1): F(94208, 9)},
        },
        "sound": {
            0: {(0, 0): F(1)},
            1: {(-1, 0): F(8)},
            2: {(-2, 0): F(-608, 3)},
            3: {(-3, 0): F(50432, 9), (1, 1): F(-640, 3)},
            4: {(0, 1): F(29696, 3)},
        },
    }
    return HalfSeries(order, tables[which])


# -- pretty printing -----------------------------------------------------------


def _pi_power_str(p: int) -> str:
    if p == 2:
        return "pi"
    if p % 2 == 0:
        return f"pi^{p // 2}"
    return f"pi^({p}/2)"


def format_coefficient(q: Fraction, p: int) -> str:
    """Exact ring element as text, e.g. -8192/(3*pi^(3/2)) or 640*pi^(1/2)."""
    sign = "-" if q < 0 else ""
    numerator = [str(abs(q.numerator))]
    denominator = []
    if p > 0:
        numerator.append(_pi_power_str(p))
    if q.denominator != 1:
        denominator.append(str(q.denominator))
    if p < 0:
        denominator.append(_pi_power_str(-p))
    top = "*".join(numerator)
    if not denominator:
        return sign + top
    if len(denominator) == 1 and denominator[0].isdigit():
        return f"{sign}{top}/{denominator[0]}"
    return f"{sign}{top}/({'*'.join(denominator)})"


def _gamma_power_str(n: int) -> str:
    if n == 0:
        return ""
    if n == 2:
        return "gamma"
    if n % 2 == 0:
        return f"gamma^{n // 2}"
    return f"gamma^({n}/2)"


def format_term(n: int, p: int, j: int, q: Fraction) -> str:
    """Full term text, e.g. 81920/(9*pi^(3/2)) * gamma^(3/2)."""
    parts = [format_coefficient(q, p)]
    gamma_part = _gamma_power_str(n)
    if gamma_part:
        parts.append(gamma_part)
    if j == 1:
        parts.append("r")
    elif j > 1:
        parts.append(f"r^{j}")
    return " * ".join(parts)


def coefficient_value(q: Fraction, p: int) -> float:
    """Numeric value of a ring element (r excluded)."""
    return float(q) * math.pi ** (0.5 * p)


def format_series(series: HalfSeries, decimals: int = 12) -> str:
    """Multi-line rendering with exact and decimal forms of every term."""
    lines = []
    for n, p, j, q in series.iter_terms():
        exact = format_term(n, p, j, q)
        value = coefficient_value(q, p)
        suffix = _gamma_power_str(n)
        label = suffix or "1"
        if j:
            label += " * r" if j == 1 else f" * r^{j}"
        lines.append(f"{label:>18}:  {exact}  =  {value:+.{decimals}g}")
    return "\n".join(lines) if lines else "0"
