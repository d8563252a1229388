"""Generic single-variable Laurent polynomials and exact determinants.

Coefficients may live in any commutative ring whose elements support
+, -, * and truth testing (falsy means zero): Fraction, EPoly, HPoly and
SchurVector all qualify.
"""

from fractions import Fraction


class Laurent:
    """Sparse Laurent polynomial: exponent -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for k, c in (terms or {}).items():
            if c:
                clean[int(k)] = c
        self.terms = clean

    @classmethod
    def monomial(cls, exponent, coeff):
        return cls({exponent: coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        if not isinstance(other, Laurent):
            return NotImplemented
        merged = dict(self.terms)
        for k, c in other.terms.items():
            if k in merged:
                merged[k] = merged[k] + c
            else:
                merged[k] = c
        return Laurent(merged)

    def __neg__(self):
        return Laurent({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Laurent):
            return self.scale(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                prod = c1 * c2
                if k in out:
                    out[k] = out[k] + prod
                else:
                    out[k] = prod
        return Laurent(out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        return Laurent({k: c * v for k, v in self.terms.items()})

    def shift(self, d):
        """Multiply by z**d."""
        return Laurent({k + d: c for k, c in self.terms.items()})

    def window(self, lo, hi):
        """Restriction to exponents lo..hi inclusive."""
        return Laurent({k: c for k, c in self.terms.items() if lo <= k <= hi})

    def coeff(self, k, zero=Fraction(0)):
        return self.terms.get(k, zero)

    def min_exp(self):
        return min(self.terms) if self.terms else None

    def max_exp(self):
        return max(self.terms) if self.terms else None

    def __repr__(self):
        if not self.terms:
            return "Laurent(0)"
        bits = [f"({self.terms[k]!r})*z^{k}" for k in sorted(self.terms)]
        return "Laurent(" + " + ".join(bits) + ")"


def determinant(matrix, zero):
    """Exact determinant by cofactor expansion with memoized minors.

    `matrix` is a list of rows of ring elements; `zero` is the ring's
    additive identity.  Matrices here never exceed desk scale, so no
    fraction-free elimination is needed.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix has no determinant here; handle upstream")
    memo = {}

    def expand(row, cols):
        if len(cols) == 1:
            return matrix[row][cols[0]]
        key = (row, cols)
        cached = memo.get(key)
        if cached is not None:
            return cached
        acc = zero
        for pos, col in enumerate(cols):
            entry = matrix[row][col]
            if not entry:
                continue
            minor = expand(row + 1, cols[:pos] + cols[pos + 1:])
            term = entry * minor
            acc = acc - term if pos % 2 else acc + term
        memo[key] = acc
        return acc

    return expand(0, tuple(range(n)))


def format_fraction(c):
    """Exact fraction string, e.g. '7/2', '-3', '0'."""
    return str(Fraction(c))


def parse_fraction(text):
    return Fraction(text)
