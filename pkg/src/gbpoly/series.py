"""Fixed-length truncated power series with degree-truncation arithmetic.

Coefficients may be plain complex numbers or mpmath values; the operations
only combine coefficients with +, *, /, so both work.  All binary
operations require operands expanded around the same center and return a
series truncated at the shorter operand's length.
"""

from __future__ import annotations

__all__ = ["TruncatedSeries", "pow_unit", "revert"]

_CENTER_TOL = 1e-12


class TruncatedSeries:
    """Polynomial approximation sum(c[k] * (x - center)**k), k = 0..L."""

    __slots__ = ("center", "c")

    def __init__(self, center, coeffs):
        self.center = center
        self.c = list(coeffs)
        if not self.c:
            raise ValueError("a series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.c) - 1

    def _check(self, other: "TruncatedSeries"):
        if abs(complex(self.center) - complex(other.center)) > _CENTER_TOL * (
            1 + abs(complex(self.center))
        ):
            raise ValueError("series expanded around different centers")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        n = min(len(self.c), len(other.c))
        return TruncatedSeries(self.center, [self.c[i] + other.c[i] for i in range(n)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        n = min(len(self.c), len(other.c))
        return TruncatedSeries(self.center, [self.c[i] - other.c[i] for i in range(n)])

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._check(other)
        n = min(len(self.c), len(other.c))
        out = [0 * (self.c[0] * other.c[0])] * n
        for i, ai in enumerate(self.c[:n]):
            if ai == 0:
                continue
            for j in range(n - i):
                bj = other.c[j]
                if bj != 0:
                    out[i + j] = out[i + j] + ai * bj
        return TruncatedSeries(self.center, out)

    __rmul__ = __mul__

    def scale(self, factor) -> "TruncatedSeries":
        return TruncatedSeries(self.center, [a * factor for a in self.c])

    def divide(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Long division; the divisor's constant term must be nonzero."""
        self._check(other)
        if other.c[0] == 0:
            raise ZeroDivisionError("divisor has vanishing constant term")
        n = min(len(self.c), len(other.c))
        inv0 = 1 / other.c[0]
        out = []
        for i in range(n):
            acc = self.c[i]
            for j in range(1, i + 1):
                acc = acc - other.c[j] * out[i - j]
            out.append(acc * inv0)
        return TruncatedSeries(self.center, out)

    def deriv(self) -> "TruncatedSeries":
        """Derivative; one order shorter."""
        if len(self.c) == 1:
            return TruncatedSeries(self.center, [0 * self.c[0]])
        return TruncatedSeries(self.center, [i * a for i, a in enumerate(self.c)][1:])

    def shift_down(self, m: int = 1) -> "TruncatedSeries":
        """Divide by (x - center)**m, dropping the first m coefficients.

        The caller is responsible for those coefficients having (exactly)
        cancelled; they are discarded, not checked.
        """
        if len(self.c) <= m:
            raise ValueError("series too short to shift down")
        return TruncatedSeries(self.center, self.c[m:])

    def truncate(self, L: int) -> "TruncatedSeries":
        return TruncatedSeries(self.center, self.c[: L + 1])

    def __call__(self, x):
        dx = x - self.center
        acc = 0 * self.c[0]
        for a in reversed(self.c):
            acc = acc * dx + a
        return acc

    def __repr__(self):
        return f"TruncatedSeries(center={self.center!r}, order={self.order})"


def pow_unit(u: TruncatedSeries, alpha) -> TruncatedSeries:
    """(1 + u)**alpha for a series u with vanishing constant term."""
    if abs(complex(u.c[0])) > 1e-30:
        raise ValueError("pow_unit needs a zero constant term")
    L = u.order
    one = 1 + 0 * u.c[0]
    out = TruncatedSeries(u.center, [one] + [0 * one] * L)
    term = TruncatedSeries(u.center, [one] + [0 * one] * L)
    b = one
    for j in range(1, L + 1):
        b = b * (alpha - (j - 1)) / j
        term = term * u
        out = out + term.scale(b)
    return out


def revert(w: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse of w(u) = u + a2 u^2 + ... (same length).

    Fixed-point iteration u <- x - sum_{j>=2} a_j u^j gains at least one
    correct order per pass, so `order` passes suffice.
    """
    if abs(complex(w.c[0])) > 1e-30 or abs(complex(w.c[1]) - 1) > 1e-12:
        raise ValueError("revert needs w = u + O(u^2)")
    L = w.order
    one = 1 + 0 * w.c[0]
    zero = 0 * one
    x = TruncatedSeries(w.center, [zero, one] + [zero] * (L - 1))
    u = x
    for _ in range(L):
        powers = u * u
        acc = x
        for j in range(2, L + 1):
            if w.c[j] != 0:
                acc = acc - powers.scale(w.c[j])
            if j < L:
                powers = powers * u
        u = acc
    return u
