"""Truncated exponential-generating series and the generic linear ODE.

A TSeries stores coefficients a_0..a_N for sum a_n t^n/n!; the divided-power
convention is fixed for the whole library, so the formal derivative is a pure
index shift and no factorial denominators ever enter the coefficient ring.
Truncation shrinks under differentiation and is never silently extended.
"""

from fractions import Fraction
from math import comb

from .errors import NotInKernel, TruncationExhausted
from .boson import EPoly, h_of_e


class TSeries:
    """Truncated series sum_{n<=N} a_n t^n/n! over an arbitrary ring."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)
        if not self.coeffs:
            raise ValueError("a series stores at least the constant term")

    @property
    def order(self):
        return len(self.coeffs) - 1

    def coeff(self, n):
        return self.coeffs[n]

    def __bool__(self):
        return any(bool(c) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return (len(self.coeffs) == len(other.coeffs)
                and all(a == b for a, b in zip(self.coeffs, other.coeffs)))

    def __add__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TSeries(a + b for a, b in zip(self.coeffs[:n + 1], other.coeffs[:n + 1]))

    def __sub__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TSeries(a - b for a, b in zip(self.coeffs[:n + 1], other.coeffs[:n + 1]))

    def __neg__(self):
        return TSeries(-c for c in self.coeffs)

    def scale(self, c):
        return TSeries(c * a for a in self.coeffs)

    def __mul__(self, other):
        """Product of divided-power series: binomial convolution, truncated
        to the smaller order."""
        if not isinstance(other, TSeries):
            return self.scale(other)
        n = min(self.order, other.order)
        out = []
        for m in range(n + 1):
            acc = self.coeffs[0] * other.coeffs[m]
            for k in range(1, m + 1):
                acc = acc + comb(m, k) * (self.coeffs[k] * other.coeffs[m - k])
            out.append(acc)
        return TSeries(out)

    __rmul__ = __mul__

    def map(self, fn):
        return TSeries(fn(c) for c in self.coeffs)

    def __repr__(self):
        return f"TSeries({list(self.coeffs)!r})"


def u_gen(j, r, order):
    """The canonical solution-family series with coefficients h_{n+j}."""
    return TSeries(h_of_e(n + j, r) for n in range(order + 1))


def derive(phi, k):
    """k-th formal derivative: shift coefficients, truncation drops by k."""
    if k < 0:
        raise ValueError("derivative order must be non-negative")
    if k > phi.order:
        raise TruncationExhausted(
            f"cannot differentiate {k} times a series of order {phi.order}")
    return TSeries(phi.coeffs[k:])


def u_form(k, phi, r):
    """The linear form a_k + sum_{i>=1} (-1)^i e_i a_{k-i}, with e_i = 0
    beyond r and a_j = 0 below zero."""
    if k < 0:
        raise ValueError("form index must be non-negative")
    if k > phi.order:
        raise TruncationExhausted(
            f"form index {k} exceeds series order {phi.order}")
    acc = EPoly.one(r) * phi.coeffs[k]
    for i in range(1, min(k, r) + 1):
        term = EPoly.gen(i, r) * phi.coeffs[k - i]
        acc = acc - term if i % 2 else acc + term
    return acc


def apply_odo(phi, r):
    """Apply the generic order-r operator; coefficient n of the image is the
    (n+r)-th linear form of the input."""
    if phi.order < r:
        raise TruncationExhausted(
            f"series of order {phi.order} is too short for an order-{r} operator")
    return TSeries(u_form(n + r, phi, r) for n in range(phi.order - r + 1))


def is_in_kernel(phi, r):
    """Truncated kernel membership: all computable forms of index >= r vanish."""
    if phi.order < r:
        raise TruncationExhausted(
            f"series of order {phi.order} is too short for an order-{r} operator")
    return all(not u_form(n + r, phi, r) for n in range(phi.order - r + 1))


def cauchy_decompose(phi, r):
    """Coordinates of a kernel element along u_0, u_{-1}, .., u_{-r+1}."""
    if not is_in_kernel(phi, r):
        raise NotInKernel("series does not solve the generic equation at truncation")
    return [u_form(i, phi, r) for i in range(r)]


def t_power_in_u_basis(j, r):
    """Coefficients expressing t^j/j! over u_{-j}, u_{-j-1}, ..: the list
    (1, -e_1, e_2, ..., (-1)^r e_r), independent of j."""
    if j < 0:
        raise ValueError("power must be non-negative")
    out = []
    for i in range(r + 1):
        c = EPoly.gen(i, r)
        out.append(-c if i % 2 else c)
    return out


def series_to_obj(phi):
    """JSON form of a series; the ring tag is inferred from the coefficients."""
    first = phi.coeffs[0]
    if isinstance(first, EPoly):
        return {"N": phi.order, "ring": "epoly", "r": first.r,
                "coeffs": [c.to_obj() for c in phi.coeffs]}
    if hasattr(first, "bound"):
        return {"N": phi.order, "ring": "hpoly", "M": first.bound,
                "coeffs": [c.to_obj() for c in phi.coeffs]}
    return {"N": phi.order, "ring": "rat",
            "coeffs": [str(Fraction(c)) for c in phi.coeffs]}


def series_from_obj(obj):
    ring = obj["ring"]
    if ring == "rat":
        return TSeries(Fraction(c) for c in obj["coeffs"])
    if ring == "epoly":
        return TSeries(EPoly.from_obj(c) for c in obj["coeffs"])
    if ring == "hpoly":
        from .infinity import HPoly
        return TSeries(HPoly.from_obj(c) for c in obj["coeffs"])
    raise ValueError(f"unknown ring tag {ring!r}")
