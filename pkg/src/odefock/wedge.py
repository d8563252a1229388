"""Semi-infinite wedge monomials, straightening, and the correspondence
onto the Schur basis.

A monomial of charge c indexed by a partition lam occupies the strictly
decreasing index ladder c + lam_1, c - 1 + lam_2, c - 2 + lam_3, ...; beyond
the length of lam the ladder continues as consecutive integers.  Monomials
are stored as (charge, lam, r) and index lists are reconstructed lazily, so
normal forms are unique and comparisons are cheap.

All insertion and contraction signs come from position counts in the ladder
(position 0 is the leading factor and carries sign +1); no sign table is
hard-coded anywhere.
"""

from fractions import Fraction
from itertools import combinations, product

from .errors import LengthExceedsOrder, NotInKernel, WrongCharge
from .partitions import Partition
from .boson import (EPoly, SchurVector, elementary_partial, epoly_to_schur,
                    mult)
from .rings import Laurent, determinant
from .series import (cauchy_decompose, is_in_kernel, u_form, u_gen,
                     t_power_in_u_basis)


class WedgeMonomial:
    """Charge-c wedge monomial in normal form."""

    __slots__ = ("charge", "lam", "r")

    def __init__(self, charge, lam, r):
        self.charge = int(charge)
        self.lam = lam if isinstance(lam, Partition) else Partition(lam)
        self.r = int(r)

    def index(self, p):
        """Occupied index at 0-based ladder position p."""
        return self.charge - p + self.lam.part(p)

    def indices(self, depth):
        return [self.index(p) for p in range(depth)]

    def occupies(self, k):
        """Whether index k appears somewhere in the (infinite) ladder."""
        if k <= self.charge - self.lam.length():
            return True
        return k in self.indices(self.lam.length())

    def __eq__(self, other):
        if not isinstance(other, WedgeMonomial):
            return NotImplemented
        return (self.charge, self.lam, self.r) == (other.charge, other.lam, other.r)

    def __hash__(self):
        return hash((self.charge, self.lam, self.r))

    def __repr__(self):
        return f"WedgeMonomial(charge={self.charge}, lam={tuple(self.lam)}, r={self.r})"

    def to_obj(self):
        return {"charge": self.charge, "partition": str(self.lam), "r": self.r}

    @classmethod
    def from_obj(cls, obj):
        return cls(obj["charge"], Partition.parse(obj["partition"]), obj["r"])


def _monomial_from_indices(head, r):
    """Rebuild (charge, lam) from an explicit strictly decreasing index list
    whose last entries already sit in the stabilized consecutive tail."""
    charge = head[-1] + len(head) - 1
    lam = [head[p] - charge + p for p in range(len(head))]
    return WedgeMonomial(charge, Partition(lam), r)


def wedge_insert(k, m):
    """Insert index k into monomial m.

    Returns (sign, monomial) in normal form, or None when k is already
    occupied.  The resulting charge is m.charge + 1.
    """
    depth = max(m.lam.length(), m.charge - k) + 2
    idx = m.indices(depth)
    if k in idx:
        return None
    pos = sum(1 for i in idx if i > k)
    sign = -1 if pos % 2 else 1
    head = idx[:pos] + [k] + idx[pos:]
    return sign, _monomial_from_indices(head, m.r)


def contract(k, m):
    """Remove index k from monomial m.

    Returns (sign, monomial) with sign (-1)^position, or None when k is
    absent.  The resulting charge is m.charge - 1.
    """
    depth = max(m.lam.length(), m.charge - k) + 3
    idx = m.indices(depth)
    if k not in idx:
        return None
    pos = idx.index(k)
    sign = -1 if pos % 2 else 1
    head = idx[:pos] + idx[pos + 1:]
    return sign, _monomial_from_indices(head, m.r)


class WedgeVector:
    """Finite combination of same-charge monomials; coefficients are exact
    rationals or e-polynomials."""

    __slots__ = ("charge", "r", "terms")

    def __init__(self, charge, r, terms=None):
        self.charge = int(charge)
        self.r = int(r)
        clean = {}
        for mono, c in (terms or {}).items():
            if mono.charge != self.charge:
                raise WrongCharge(
                    f"monomial of charge {mono.charge} in a charge-{self.charge} vector")
            if mono.r != self.r:
                raise ValueError("mixed truncation orders in a wedge vector")
            if not isinstance(c, EPoly):
                c = Fraction(c)
            if mono in clean:
                clean[mono] = clean[mono] + c
            else:
                clean[mono] = c
        self.terms = {k: v for k, v in clean.items() if v}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, WedgeVector):
            return NotImplemented
        return (self.charge, self.r, self.terms) == (other.charge, other.r, other.terms)

    def __add__(self, other):
        if not isinstance(other, WedgeVector):
            return NotImplemented
        merged = dict(self.terms)
        for mono, c in other.terms.items():
            merged[mono] = merged[mono] + c if mono in merged else c
        return WedgeVector(self.charge, self.r, merged)

    def __neg__(self):
        return WedgeVector(self.charge, self.r,
                           {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return WedgeVector(self.charge, self.r,
                           {m: c * v for m, v in self.terms.items()})

    def __repr__(self):
        return f"WedgeVector(charge={self.charge}, r={self.r}, {self.terms!r})"


def x_wedge(lam, r, z_lo, z_hi):
    """Generating insertions into the charge -1 monomial of lam: for each
    z-exponent in [z_lo, z_hi] the straightened signed charge-0 monomial.
    Exponents below -r never contribute (the index is already occupied)."""
    lam = Partition(lam) if not isinstance(lam, Partition) else lam
    if lam.length() > r:
        raise LengthExceedsOrder(f"partition {lam} too long for r={r}")
    base = WedgeMonomial(-1, lam, r)
    out = {}
    for i in range(max(z_lo, -r), z_hi + 1):
        res = wedge_insert(i, base)
        if res is None:
            continue
        sign, mono = res
        out[i] = WedgeVector(0, r, {mono: sign})
    return out


def x_contract(lam, r):
    """Generating contractions of the charge +1 monomial of lam, keyed by
    z-exponent (minus the contracted index).

    The ladder is contracted at positions 0..r: the r head slots plus the
    first stabilized-tail index.  Deeper tail contractions only produce
    partitions of length > r, which vanish in B_r and lie outside the
    exponent band of the dual vertex operator, so the map stays finite.
    """
    lam = Partition(lam) if not isinstance(lam, Partition) else lam
    if lam.length() > r:
        raise LengthExceedsOrder(f"partition {lam} too long for r={r}")
    base = WedgeMonomial(1, lam, r)
    out = {}
    for p in range(r + 1):
        k = base.index(p)
        sign, mono = contract(k, base)
        out[-k] = WedgeVector(0, r, {mono: sign})
    return out


def e_action(j, v):
    """Direct action of e_j on a wedge vector: raise j of the r head slots
    by one, dropping summands whose ladder develops a repeat."""
    if j < 0:
        raise ValueError("e-index must be non-negative")
    out = {}
    for mono, c in v.terms.items():
        if mono.lam.length() > v.r:
            raise LengthExceedsOrder(
                f"{mono!r} has more parts than the {v.r} head slots")
        if j > v.r:
            continue
        padded = [mono.lam.part(p) for p in range(v.r)]
        for rows in combinations(range(v.r), j):
            grown = list(padded)
            for p in rows:
                grown[p] += 1
            if all(a >= b for a, b in zip(grown, grown[1:])):
                target = WedgeMonomial(mono.charge, Partition(grown), v.r)
                out[target] = out.get(target, 0) + c
    return WedgeVector(v.charge, v.r, out)


def sigma_boson(v):
    """The correspondence onto the Schur basis: each charge-0 monomial maps
    to the Schur class of its partition; monomials longer than r map to zero.
    E-polynomial coefficients are pushed through the basis conversion."""
    if v.charge != 0:
        raise WrongCharge(f"correspondence needs charge 0, got {v.charge}")
    acc = SchurVector.zero(v.r)
    for mono, c in v.terms.items():
        if mono.lam.length() > v.r:
            continue
        basis = SchurVector.basis(mono.lam, v.r)
        if isinstance(c, EPoly):
            acc = acc + mult(epoly_to_schur(c), basis)
        else:
            acc = acc + basis.scale(c)
    return acc


def straighten_indices(indices):
    """Sort an explicit index tuple into strictly decreasing order.

    Returns (sign, sorted tuple) with the sign of the sorting permutation,
    or None when two indices coincide.
    """
    if len(set(indices)) != len(indices):
        return None
    inversions = 0
    for a, b in combinations(indices, 2):
        if a < b:
            inversions += 1
    sign = -1 if inversions % 2 else 1
    return sign, tuple(sorted(indices, reverse=True))


def solution_wedge_det(vs, r):
    """Image of v_0 ^ .. ^ v_{r-1} ^ (stable tail) under the correspondence,
    as the determinant of the linear forms of the solutions."""
    if len(vs) != r:
        raise ValueError(f"need exactly {r} solutions")
    for v in vs:
        if not is_in_kernel(v, r):
            raise NotInKernel("a wedge factor does not solve the generic equation")
    matrix = [[u_form(i, v, r) for v in vs] for i in range(r)]
    return determinant(matrix, EPoly.zero(r))


def solution_wedge_sigma(vs, r):
    """Independent route to solution_wedge_det: decompose every factor over
    the kernel basis, expand the wedge multilinearly and straighten each
    summand into the vacuum monomial."""
    coords = [cauchy_decompose(v, r) for v in vs]
    total = EPoly.zero(r)
    for pick in product(range(r), repeat=r):
        res = straighten_indices(tuple(-i for i in pick))
        if res is None:
            continue
        sign, _ = res
        coeff = EPoly.one(r)
        for col, row in enumerate(pick):
            coeff = coeff * coords[col][row]
        total = total + (coeff if sign > 0 else -coeff)
    return total


def _kernel_frames(lam, r):
    """The straightened insertions of u_0, u_{-1}, .., u_{-r} into the
    charge -1 monomial of lam; only the unoccupied ones survive."""
    base = WedgeMonomial(-1, lam, r)
    frames = {}
    for i in range(r + 1):
        res = wedge_insert(-i, base)
        if res is not None:
            frames[i] = res
    return frames


def _insertion_series_reduced(lam, r, z_lo, z_hi):
    """The generating insertion series with its leading slot expanded over
    the kernel basis: a map z-exponent -> charge-0 wedge vector with
    e-polynomial coefficients, restricted to [z_lo, z_hi] after multiplying
    by the full alternating sum of the e-generators.

    Positive-index insertions are not independent monomials once the leading
    slot is read as a solution series; writing them over u_0..u_{-r+1} is
    what makes the two companion identities below decidable equalities.
    """
    frames = _kernel_frames(lam, r)
    er = elementary_partial(r, r)
    out = {}
    for i, (sign, mono) in frames.items():
        coeff_series = {-i: EPoly.one(r)}
        if i < r:
            for j in range(1, z_hi + 1):
                val = u_form(i, u_gen(j, r, i), r)
                if val:
                    coeff_series[j] = val
        reduced = (er * Laurent(coeff_series)).window(z_lo, z_hi)
        for zexp, c in reduced.terms.items():
            bucket = out.setdefault(zexp, {})
            contrib = c if sign > 0 else -c
            bucket[mono] = bucket.get(mono, EPoly.zero(r)) + contrib
    return {zexp: WedgeVector(0, r, bucket)
            for zexp, bucket in out.items()
            if any(bucket.values())}


def check_partial_sum_expansion(lam, r, z_lo=-8, z_hi=8):
    """Identity between the scaled insertion series and the partial
    alternating sums attached to each kernel-basis insertion, compared as
    Laurent-coefficient wedge vectors over [z_lo, z_hi]."""
    lam = Partition(lam) if not isinstance(lam, Partition) else lam
    lhs = _insertion_series_reduced(lam, r, z_lo, z_hi)
    frames = _kernel_frames(lam, r)
    out = {}
    for i, (sign, mono) in frames.items():
        partial = elementary_partial(i, r, z_shift=-i).window(z_lo, z_hi)
        for zexp, c in partial.terms.items():
            bucket = out.setdefault(zexp, {})
            contrib = c if sign > 0 else -c
            bucket[mono] = bucket.get(mono, EPoly.zero(r)) + contrib
    rhs = {zexp: WedgeVector(0, r, bucket)
           for zexp, bucket in out.items()
           if any(bucket.values())}
    return lhs == rhs


def check_exp_insertion(lam, r, z_lo=-8, z_hi=8, t_order=12):
    """Identity between the scaled insertion series and the wedge with the
    truncated exponential exp(t/z), the latter expanded over the kernel
    basis row by row."""
    lam = Partition(lam) if not isinstance(lam, Partition) else lam
    lhs = _insertion_series_reduced(lam, r, z_lo, z_hi)
    frames = _kernel_frames(lam, r)
    coeffs = t_power_in_u_basis(0, r)
    out = {}
    for j in range(t_order + 1):
        if -j < z_lo:
            break
        for m, c in enumerate(coeffs):
            i = j + m
            if i not in frames:
                continue
            sign, mono = frames[i]
            bucket = out.setdefault(-j, {})
            contrib = c if sign > 0 else -c
            bucket[mono] = bucket.get(mono, EPoly.zero(r)) + contrib
    rhs = {zexp: WedgeVector(0, r, bucket)
           for zexp, bucket in out.items()
           if any(bucket.values())}
    return lhs == rhs
