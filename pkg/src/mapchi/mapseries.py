"""The parametrized map series and the refined map-count polynomials.

The generating series for rooted maps on all surfaces, with a parameter
interpolating between orientable (b = 0) and locally orientable (b = 1)
enumeration, is assembled from Jack symmetric functions:

    S(z) = sum over partitions theta of even weight 2m of
           z^m * J_theta(y; alpha) * J_theta(1_x; alpha)
                * [p_{(2,...,2)}] J_theta / <J_theta, J_theta>,

    M(z) = 2 * alpha * z d/dz log S(z).

The z^n coefficient of M is a linear combination of power sums p_mu(y)
whose coefficients are polynomials in x over rational functions of alpha.
Reading mu as the vertex-valence multiset, the x-degree as the face count
j, and substituting alpha = b + 1 yields the refined map numbers
m(i, j, n) as polynomials in b: the coefficient count of rooted maps with
n edges, j faces and vertex distribution i, graded by a nonorientability
statistic.  Vertices of a map here may have any valence >= 1.

alpha stays symbolic through the logarithm and the Euler operator;
b enters only at extraction, after all rational-function cancellation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .arith import ALPHA, AlphaFn, TruncatedSeries, UniPoly
from .partitions import Partition, partition_from_distribution, vertex_distribution_of
from .symfunc import PowerSumExpr, jack
from .partitions import partitions_of

logger = logging.getLogger(__name__)

#: Largest supported truncation; weight-10 Jack solves are already slow.
MAX_EDGE_TRUNCATION = 5


class ExtractionError(RuntimeError):
    """A map-series coefficient failed polynomiality or integrality checks."""


class MapKey(NamedTuple):
    """Index of a refined map count: vertex distribution, faces, edges."""

    i: tuple[int, ...]
    j: int
    n: int

    def validate(self) -> MapKey:
        if any(k < 0 for k in self.i):
            raise ValueError(f"negative vertex multiplicity in {self}")
        if self.i and self.i[-1] == 0:
            raise ValueError(f"vertex distribution has trailing zeros: {self}")
        edge_ends = sum(k * ik for k, ik in enumerate(self.i, start=1))
        if edge_ends != 2 * self.n:
            raise ValueError(
                f"vertex valences sum to {edge_ends}, expected {2 * self.n}: {self}"
            )
        if not 1 <= self.j <= self.n + 1:
            raise ValueError(f"face count {self.j} outside 1..{self.n + 1}: {self}")
        return self

    @property
    def vertex_count(self) -> int:
        return sum(self.i)

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - self.n + self.j


@dataclass(frozen=True)
class MapCountTable:
    """Refined map-count polynomials in b for every key with n <= max_n."""

    entries: dict[MapKey, UniPoly]
    max_n: int

    def __getitem__(self, key: MapKey) -> UniPoly:
        return self.entries[key]

    def get(self, key: MapKey, default=None):
        return self.entries.get(key, default)

    def keys_sorted(self) -> list[MapKey]:
        """Rows ordered by edge count, then face count, then vertex partition."""
        return sorted(
            self.entries,
            key=lambda k: (k.n, k.j, partition_from_distribution(k.i).parts),
        )


def jack_partition_sum(max_n: int) -> TruncatedSeries:
    """The Jack-function partition sum S(z), truncated at z**max_n.

    The z^m coefficient sums, over all partitions theta of weight 2m, the
    power-sum expansion of J_theta in the y-alphabet scaled by

        J_theta(1_x) * [p_(2^m)] J_theta / <J_theta, J_theta>,

    a polynomial in x over AlphaFn.  Odd-weight shapes contribute nothing
    since no pure-2 partition exists there.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    if max_n > MAX_EDGE_TRUNCATION:
        raise ValueError(
            f"truncation {max_n} exceeds supported bound {MAX_EDGE_TRUNCATION}"
        )
    if max_n >= 4:
        logger.warning(
            "jack_partition_sum(max_n=%d) needs all Jack functions of weight %d; "
            "expect minutes of exact rational-function elimination",
            max_n,
            2 * max_n,
        )
    coeffs: list[object] = [PowerSumExpr.one()]
    for m in range(1, max_n + 1):
        total = PowerSumExpr.zero()
        for theta in partitions_of(2 * m):
            rec = jack(theta)
            if not rec.p2coeff:
                continue
            scalar = rec.principal * (rec.p2coeff / rec.norm)
            total = total + rec.expansion * scalar
        coeffs.append(total)
    return TruncatedSeries("z", coeffs, max_n)


def map_series(max_n: int) -> TruncatedSeries:
    """The map generating series M(z) = 2 alpha z d/dz log S(z)."""
    s = jack_partition_sum(max_n)
    return s.log().z_ddz().scale(AlphaFn.alpha() * 2)


def extract_map_counts(series: TruncatedSeries) -> MapCountTable:
    """Read refined map-count polynomials in b off a map series.

    For each z^n coefficient, each power sum p_mu(y) and each x-power x^j,
    the scalar must be a polynomial in alpha that becomes an integer
    polynomial in b under alpha = b + 1; any failure aborts with
    diagnostics, since it would contradict the framework.  Zero polynomials
    are omitted.
    """
    b_plus_one = UniPoly("b", (Fraction(1), Fraction(1)))
    entries: dict[MapKey, UniPoly] = {}
    for n in range(1, series.max_order + 1):
        expr = series.coefficient(n)
        if not isinstance(expr, PowerSumExpr):
            if not expr:
                continue
            raise ExtractionError(f"z^{n} coefficient is not a power-sum expression")
        for mu, xpoly in expr.terms.items():
            if not isinstance(xpoly, UniPoly):
                # A bare scalar is an x-free term; faces j = 0 is impossible.
                raise ExtractionError(
                    f"z^{n} p_{mu.parts} coefficient carries no face variable: {xpoly!r}"
                )
            for j, coeff in enumerate(xpoly.coeffs):
                if not coeff:
                    continue
                if j == 0:
                    raise ExtractionError(
                        f"z^{n} p_{mu.parts} has an x-free term {coeff!r}"
                    )
                if not isinstance(coeff, AlphaFn):
                    coeff = AlphaFn(coeff)
                if not coeff.is_polynomial:
                    raise ExtractionError(
                        f"coefficient at n={n}, mu={mu.parts}, j={j} is not "
                        f"polynomial in alpha: {coeff!r}"
                    )
                bpoly = coeff.substitute(b_plus_one)
                for c in bpoly.coeffs:
                    if Fraction(c).denominator != 1:
                        raise ExtractionError(
                            f"non-integer b-coefficient at n={n}, mu={mu.parts}, "
                            f"j={j}: {bpoly!r}"
                        )
                key = MapKey(vertex_distribution_of(mu), j, n).validate()
                entries[key] = bpoly
    return MapCountTable(entries=entries, max_n=series.max_order)


@lru_cache(maxsize=None)
def map_count_table(max_n: int) -> MapCountTable:
    """The full extraction pipeline, cached per truncation.  Treat as immutable."""
    return extract_map_counts(map_series(max_n))


def specialize_counts(table: MapCountTable, b_value: Fraction) -> dict[MapKey, Fraction]:
    """Evaluate every entry at a rational b (0 = orientable, 1 = all surfaces)."""
    return {key: Fraction(poly.eval(Fraction(b_value))) for key, poly in table.entries.items()}


@dataclass(frozen=True)
class NonnegativityViolation:
    key: MapKey
    poly: UniPoly
    degree: int
    coefficient: Fraction


def nonneg_report(table: MapCountTable) -> list[NonnegativityViolation]:
    """Entries with any negative b-coefficient.

    Nonnegativity of the refined counts is conjectural, so this is a report
    for the caller to act on, never an assertion.
    """
    violations = []
    for key in table.keys_sorted():
        poly = table.entries[key]
        for deg, c in enumerate(poly.coeffs):
            if c < 0:
                violations.append(
                    NonnegativityViolation(key=key, poly=poly, degree=deg, coefficient=c)
                )
                break
    return violations
