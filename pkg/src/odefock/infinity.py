"""The untruncated picture: free h-polynomials, the x-derivations, the
exponential form of the companion operators, and the bilinear KP check.

Here the complete classes h_1, h_2, ... are algebraically independent, so an
element is a sparse polynomial in them with an explicit index bound M.  Any
computation that would need an index above M fails hard rather than silently
truncating a relation.
"""

from fractions import Fraction
from math import comb

from .errors import InsufficientIndexBound
from .partitions import Partition, remove_vertical_strip
from .boson import BilateralSeq, jacobi_trudi
from .rings import Laurent, determinant, format_fraction, parse_fraction
from .series import TSeries


def _trim(exps):
    exps = tuple(exps)
    while exps and exps[-1] == 0:
        exps = exps[:-1]
    return exps


class HPoly:
    """Sparse polynomial in the free generators h_1..h_M over Q."""

    __slots__ = ("bound", "terms")

    def __init__(self, bound, terms=None):
        self.bound = int(bound)
        clean = {}
        for exps, c in (terms or {}).items():
            key = _trim(int(x) for x in exps)
            if len(key) > self.bound:
                raise InsufficientIndexBound(
                    f"h-index {len(key)} exceeds declared bound {self.bound}")
            if any(x < 0 for x in key):
                raise ValueError(f"negative exponent in {key}")
            c = Fraction(c)
            if key in clean:
                clean[key] = clean[key] + c
            else:
                clean[key] = c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def zero(cls, bound):
        return cls(bound)

    @classmethod
    def one(cls, bound):
        return cls(bound, {(): 1})

    @classmethod
    def const(cls, c, bound):
        return cls(bound, {(): c})

    @classmethod
    def gen(cls, n, bound):
        if n < 1:
            raise ValueError("generator index must be positive")
        if n > bound:
            raise InsufficientIndexBound(
                f"h_{n} exceeds declared bound {bound}")
        return cls(bound, {(0,) * (n - 1) + (1,): 1})

    def _coerce(self, other):
        if isinstance(other, HPoly):
            if other.bound != self.bound:
                raise InsufficientIndexBound(
                    f"mixed index bounds {self.bound} and {other.bound}")
            return other
        if isinstance(other, (int, Fraction)):
            return HPoly.const(other, self.bound)
        return None

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        merged = dict(self.terms)
        for k, c in other.terms.items():
            merged[k] = merged.get(k, Fraction(0)) + c
        return HPoly(self.bound, merged)

    __radd__ = __add__

    def __neg__(self):
        return HPoly(self.bound, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                long, short = (k1, k2) if len(k1) >= len(k2) else (k2, k1)
                key = tuple(a + b for a, b in zip(long, short)) + long[len(short):]
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return HPoly(self.bound, out)

    __rmul__ = __mul__

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                f"h{i+1}" + (f"^{m}" if m > 1 else "")
                for i, m in enumerate(exps) if m)
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)

    def to_obj(self):
        items = sorted(self.terms.items(), reverse=True)
        return {"M": self.bound,
                "terms": [{"exps": list(exps), "coeff": format_fraction(c)}
                          for exps, c in items]}

    @classmethod
    def from_obj(cls, obj):
        return cls(obj["M"],
                   {tuple(t["exps"]): parse_fraction(t["coeff"])
                    for t in obj["terms"]})


def h_free(n, bound):
    """The generator h_n; one at n = 0, zero below."""
    if n < 0:
        return HPoly.zero(bound)
    if n == 0:
        return HPoly.one(bound)
    return HPoly.gen(n, bound)


def x_derive(j, p):
    """The derivation sending h_n to h_{n-j}, extended by the product rule.
    Indices only decrease, so the bound is preserved."""
    if j < 1:
        raise ValueError("derivation index must be positive")
    out = HPoly.zero(p.bound)
    for exps, c in p.terms.items():
        for pos, m in enumerate(exps):
            if m == 0:
                continue
            n = pos + 1
            rest = list(exps)
            rest[pos] -= 1
            factor = h_free(n - j, p.bound)
            if not factor:
                continue
            out = out + (m * c) * HPoly(p.bound, {_trim(rest): 1}) * factor
    return out


def free_h_sequence(bound):
    return BilateralSeq(lambda n: h_free(n, bound),
                        HPoly.zero(bound), HPoly.one(bound))


def free_schur(lam, bound):
    """Schur class of lam in the free generators, by its h-determinant."""
    lam = Partition(lam) if not isinstance(lam, Partition) else lam
    return jacobi_trudi(lam, free_h_sequence(bound), lam.length())


def exp_vertex(sign, p, z_order):
    """Operator exponential of +/- the weighted derivation series, applied to
    p and truncated at z^(-z_order).

    Iterates the first-order operator degree by degree: every application
    strictly lowers total h-weight, so the loop terminates and each retained
    z-power is exact.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not p:
        return Laurent()
    total = Laurent({0: p})
    term = Laurent({0: p})
    k = 0
    while term:
        k += 1
        nxt = {}
        for a, q in term.terms.items():
            for i in range(1, z_order + a + 1):
                d = x_derive(i, q)
                if not d:
                    continue
                key = a - i
                contrib = Fraction(sign, i * k) * d
                nxt[key] = nxt[key] + contrib if key in nxt else contrib
        term = Laurent(nxt)
        total = total + term
    return total


def exp_vertex_laurent(sign, laur, z_order):
    """Extend the operator exponential over Laurent polynomials by treating
    powers of 1/z as scalars; exact through z^(-z_order)."""
    total = Laurent()
    for a, q in laur.terms.items():
        total = total + exp_vertex(sign, q, max(z_order + a, 0)).shift(a)
    return total.window(-z_order, max(total.max_exp() or 0, 0))


def check_ring_hom(sign, p, q, z_order):
    """Is the operator exponential multiplicative on the pair (p, q) through
    the given order?  True in the free ring; the truncated rings break it."""
    lhs = exp_vertex(sign, p * q, z_order)
    rhs = (exp_vertex(sign, p, z_order) * exp_vertex(sign, q, z_order))
    return lhs == rhs.window(-z_order, 0)


def strip_series_free(lam, z_order, bound):
    """Strip form of the lowering companion in the free ring: alternating
    removed vertical strips, with no length cap."""
    lam = Partition(lam) if not isinstance(lam, Partition) else lam
    out = Laurent()
    for j in range(min(lam.length(), z_order) + 1):
        acc = HPoly.zero(bound)
        for mu in remove_vertical_strip(lam, j):
            acc = acc + free_schur(mu, bound)
        if j % 2:
            acc = -acc
        out = out + Laurent({-j: acc})
    return out


def schur_vs_exp(lam, z_order, bound=None):
    """Compare the exponential form of the lowering companion against the
    strip formula on the Schur class of lam; exact agreement or bust."""
    lam = Partition(lam) if not isinstance(lam, Partition) else lam
    needed = lam.weight() + lam.length()
    if bound is None:
        bound = max(needed, 1)
    if bound < needed:
        raise InsufficientIndexBound(
            f"bound {bound} below the {needed} needed for {lam}")
    p = free_schur(lam, bound)
    lhs = exp_vertex(-1, p, z_order)
    rhs = strip_series_free(lam, z_order, bound)
    return lhs == rhs


def accum_series_free(lam, z_order, bound):
    """Dual companion in the free ring by the determinant over the
    accumulated h-sequence."""
    lam = Partition(lam) if not isinstance(lam, Partition) else lam
    zero = Laurent()
    one = Laurent({0: HPoly.one(bound)})
    def fn(n):
        return Laurent({-i: h_free(n - i, bound) for i in range(max(n, 0) + 1)})
    seq = BilateralSeq(fn, zero, one)
    det = jacobi_trudi(lam, seq, lam.length())
    return det.window(-z_order, 0)


def accum_vs_exp(lam, z_order, bound=None):
    """Compare the exponential form of the dual companion against the
    accumulated determinant on the Schur class of lam."""
    lam = Partition(lam) if not isinstance(lam, Partition) else lam
    needed = lam.weight() + lam.length()
    if bound is None:
        bound = max(needed, 1)
    if bound < needed:
        raise InsufficientIndexBound(
            f"bound {bound} below the {needed} needed for {lam}")
    p = free_schur(lam, bound)
    lhs = exp_vertex(1, p, z_order)
    return lhs == accum_series_free(lam, z_order, bound)


def u_series_free(j, order, bound):
    """The solution-family series with free h-coefficients h_{j+n}."""
    if j + order > bound:
        raise InsufficientIndexBound(
            f"series needs h_{j + order}, above bound {bound}")
    return TSeries(h_free(j + n, bound) for n in range(order + 1))


def _dx(phi, i):
    return phi.map(lambda c: x_derive(i, c))


def kp_residual(j, n, order, bound=None, corrupt=False):
    """The bilinear KP combination evaluated on the solution series u_j,
    with derivatives taken in the variables of weight n, 2n and 3n.

    Expected identically zero.  The corrupt flag replaces the second series
    coefficient with a wrong nonlinear value (the square of h_2) as a
    negative control; note that merely zeroing a coefficient would keep
    every coefficient linear in the generators, and the combination
    vanishes identically on any such series by the same index-shift
    collapse that makes u_j a solution.
    """
    if n < 1:
        raise ValueError("variable weight must be positive")
    if bound is None:
        bound = max(j + order + 4 * n, 2)
    if bound < j + order:
        raise InsufficientIndexBound(
            f"bound {bound} below the {j + order} needed for the series")
    phi = u_series_free(j, order, bound)
    if corrupt:
        coeffs = list(phi.coeffs)
        if len(coeffs) > 2:
            bad = h_free(2, bound)
            coeffs[2] = bad * bad
        phi = TSeries(coeffs)
    p1 = _dx(phi, n)
    p11 = _dx(p1, n)
    p111 = _dx(p11, n)
    p1111 = _dx(p111, n)
    p2 = _dx(phi, 2 * n)
    p22 = _dx(p2, 2 * n)
    p3 = _dx(phi, 3 * n)
    p13 = _dx(p1, 3 * n)
    res = (phi * p1111
           - 4 * (p1 * p111)
           + 3 * (p11 * p11)
           + 3 * (phi * p22)
           - 3 * (p2 * p2)
           + 4 * (p1 * p3)
           - 4 * (phi * p13))
    return res
