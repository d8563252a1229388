"""The truncated polynomial ring Q[e_1..e_r] and its Schur basis.

Two coordinate systems are first class: sparse polynomials in the e-generators
(EPoly, canonical for multiplication) and finite combinations of Schur classes
indexed by partitions of length <= r (SchurVector, canonical for the vertex
operators).  Conversion goes through the complete classes h_n and the Pieri
rule; no third representation exists.

All coefficients are exact rationals.  Values are immutable after
construction, and the h-recurrence memo is a process-wide cache, so every
operation here is safe to call concurrently.
"""

from fractions import Fraction
from functools import cache
from itertools import combinations

from .errors import LengthExceedsOrder, TruncationMismatch
from .partitions import Partition, add_vertical_strip
from .rings import Laurent, determinant, format_fraction, parse_fraction


def _trim(exps):
    exps = tuple(exps)
    while exps and exps[-1] == 0:
        exps = exps[:-1]
    return exps


class EPoly:
    """Sparse polynomial in e_1..e_r over Q.

    Keys are exponent tuples with trailing zeros stripped; no zero
    coefficients are stored.
    """

    __slots__ = ("r", "terms")

    def __init__(self, r, terms=None):
        self.r = int(r)
        clean = {}
        for exps, c in (terms or {}).items():
            key = _trim(int(x) for x in exps)
            if len(key) > self.r:
                raise TruncationMismatch(
                    f"exponent vector {key} does not fit in {self.r} generators")
            if any(x < 0 for x in key):
                raise ValueError(f"negative exponent in {key}")
            c = Fraction(c)
            if key in clean:
                clean[key] = clean[key] + c
            else:
                clean[key] = c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def zero(cls, r):
        return cls(r)

    @classmethod
    def one(cls, r):
        return cls(r, {(): 1})

    @classmethod
    def const(cls, c, r):
        return cls(r, {(): c})

    @classmethod
    def gen(cls, i, r):
        """The generator e_i; e_0 = 1 and e_i = 0 once i exceeds r."""
        if i == 0:
            return cls.one(r)
        if i > r:
            return cls.zero(r)
        return cls(r, {(0,) * (i - 1) + (1,): 1})

    def _coerce(self, other):
        if isinstance(other, EPoly):
            if other.r != self.r:
                raise TruncationMismatch(f"mixed truncations {self.r} and {other.r}")
            return other
        if isinstance(other, (int, Fraction)):
            return EPoly.const(other, self.r)
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
        return EPoly(self.r, merged)

    __radd__ = __add__

    def __neg__(self):
        return EPoly(self.r, {k: -c for k, c in self.terms.items()})

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
        return EPoly(self.r, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        acc = EPoly.one(self.r)
        for _ in range(n):
            acc = acc * self
        return acc

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                f"e{i+1}" + (f"^{m}" if m > 1 else "")
                for i, m in enumerate(exps) if m)
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)

    def to_obj(self):
        items = sorted(self.terms.items(), reverse=True)
        return {
            "r": self.r,
            "terms": [
                {"exps": list(exps) + [0] * (self.r - len(exps)),
                 "coeff": format_fraction(c)}
                for exps, c in items
            ],
        }

    @classmethod
    def from_obj(cls, obj):
        return cls(obj["r"],
                   {tuple(t["exps"]): parse_fraction(t["coeff"])
                    for t in obj["terms"]})


class SchurVector:
    """Finite Q-linear combination of Schur classes of length <= r."""

    __slots__ = ("r", "terms")

    def __init__(self, r, terms=None):
        self.r = int(r)
        clean = {}
        for lam, c in (terms or {}).items():
            if not isinstance(lam, Partition):
                lam = Partition(lam)
            if lam.length() > self.r:
                raise LengthExceedsOrder(
                    f"partition {lam} has length > {self.r}")
            c = Fraction(c)
            if lam in clean:
                clean[lam] = clean[lam] + c
            else:
                clean[lam] = c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def zero(cls, r):
        return cls(r)

    @classmethod
    def one(cls, r):
        return cls(r, {Partition(): 1})

    @classmethod
    def basis(cls, lam, r):
        return cls(r, {Partition(lam): 1})

    def _coerce(self, other):
        if isinstance(other, SchurVector):
            if other.r != self.r:
                raise TruncationMismatch(f"mixed truncations {self.r} and {other.r}")
            return other
        if isinstance(other, (int, Fraction)):
            return SchurVector(self.r, {Partition(): other})
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
        return SchurVector(self.r, merged)

    __radd__ = __add__

    def __neg__(self):
        return SchurVector(self.r, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = Fraction(c)
        return SchurVector(self.r, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, SchurVector):
            return mult(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for lam in sorted(self.terms, reverse=True):
            bits.append(f"{self.terms[lam]}*S[{lam}]")
        return " + ".join(bits)

    def to_obj(self):
        items = sorted(self.terms.items(), reverse=True)
        return {
            "r": self.r,
            "terms": [{"partition": str(lam), "coeff": format_fraction(c)}
                      for lam, c in items],
        }

    @classmethod
    def from_obj(cls, obj):
        return cls(obj["r"],
                   {Partition.parse(t["partition"]): parse_fraction(t["coeff"])
                    for t in obj["terms"]})


class BilateralSeq:
    """Doubly infinite sequence n -> ring element, with the ring's constants.

    Every instance used here is h-type: zero below index 0, one at index 0.
    """

    __slots__ = ("fn", "zero", "one")

    def __init__(self, fn, zero, one):
        self.fn = fn
        self.zero = zero
        self.one = one

    def __call__(self, n):
        return self.fn(n)


@cache
def h_of_e(n, r):
    """The complete class h_n of B_r written in the e-generators.

    Driven by the recurrence h_n = sum_{i=1..r} (-1)^(i-1) e_i h_{n-i},
    seeded by h_0 = 1 and h_n = 0 for n < 0.
    """
    if n < 0:
        return EPoly.zero(r)
    if n == 0:
        return EPoly.one(r)
    acc = EPoly.zero(r)
    for i in range(1, r + 1):
        term = EPoly.gen(i, r) * h_of_e(n - i, r)
        acc = acc - term if i % 2 == 0 else acc + term
    return acc


@cache
def x_of_e(n, r):
    """Coefficient x_n of the logarithm of the h-generating series, in B_r.

    Computed through the truncated-series identity n*x_n = n*h_n -
    sum_{k<n} k*x_k*h_{n-k}, which is the log of the h-series taken
    order by order.
    """
    if n < 1:
        raise ValueError("x_n is defined for n >= 1")
    acc = h_of_e(n, r)
    for k in range(1, n):
        acc = acc - Fraction(k, n) * x_of_e(k, r) * h_of_e(n - k, r)
    return acc


def h_sequence(r):
    """The h-classes of B_r as a bilateral sequence of EPoly values."""
    return BilateralSeq(lambda n: h_of_e(n, r), EPoly.zero(r), EPoly.one(r))


def jacobi_trudi(lam, seq, size):
    """det(seq(lam_j - j + i)) over an size-x-size index grid (1-based i, j).

    For h-type sequences this is the Schur determinant of lam whenever
    size >= length(lam); parts beyond `size` are ignored, exactly as the
    defining formula does.
    """
    if size == 0:
        return seq.one
    lam = Partition(lam) if not isinstance(lam, Partition) else lam
    matrix = [[seq(lam.part(j) - (j + 1) + (i + 1)) for j in range(size)]
              for i in range(size)]
    return determinant(matrix, seq.zero)


def pieri(i, v):
    """Multiplication by e_i in the Schur basis: add vertical strips of size i.

    e_i vanishes in B_r once i exceeds r, so the result is then zero.
    """
    if i < 0:
        raise ValueError("e-index must be non-negative")
    r = v.r
    out = {}
    for lam, c in v.terms.items():
        for mu in add_vertical_strip(lam, i, r):
            out[mu] = out.get(mu, Fraction(0)) + c
    return SchurVector(r, out)


@cache
def _monomial_to_schur(exps, r):
    acc = SchurVector.one(r)
    for i, m in enumerate(exps, start=1):
        for _ in range(m):
            acc = pieri(i, acc)
    return acc


def epoly_to_schur(p):
    """Unique Schur-basis representation of an e-polynomial.

    Each e-monomial acts on the unit class by iterated Pieri steps.
    """
    acc = SchurVector.zero(p.r)
    for exps, c in p.terms.items():
        acc = acc + _monomial_to_schur(exps, p.r).scale(c)
    return acc


@cache
def _schur_basis_to_epoly(lam, r):
    return jacobi_trudi(lam, h_sequence(r), r)


def schur_to_epoly(v):
    """Expand every Schur class through its h-determinant; inverse of
    epoly_to_schur."""
    acc = EPoly.zero(v.r)
    for lam, c in v.terms.items():
        acc = acc + c * _schur_basis_to_epoly(lam, v.r)
    return acc


def mult(a, b):
    """Exact product of two Schur vectors over the same truncation."""
    if a.r != b.r:
        raise TruncationMismatch(f"mixed truncations {a.r} and {b.r}")
    return epoly_to_schur(schur_to_epoly(a) * schur_to_epoly(b))


def elementary_partial(i, r, z_shift=0):
    """Partial alternating sum 1 - e_1 z + ... + (-1)^i e_i z^i as a Laurent
    polynomial over EPoly, with all z-exponents shifted by z_shift
    (callers typically fold in a 1/z^i)."""
    if not 0 <= i <= r:
        raise ValueError("partial sum index out of range")
    terms = {}
    for j in range(i + 1):
        c = EPoly.gen(j, r)
        if j % 2:
            c = -c
        terms[j + z_shift] = c
    return Laurent(terms)
