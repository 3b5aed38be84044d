"""Frobenius structure of the enveloping algebra over its even subalgebra.

The top-coefficient projection pi sends ``u = sum_I u_I x^I`` (left
coefficients, read off the even-first normal form) to the coefficient of
the full odd monomial.  The pairing <x, y> = pi(x y) is associative with a
twist on the right slot; the matrix of the pairing on odd-subset monomials,
taken in a cardinality-refining order, is lower triangular with diagonal
entries +-1, hence invertible over the even subalgebra by forward
substitution.  Its inverse yields a dual basis and, column zero, a
canonical representative of the invariant line in the quotient by the left
ideal generated by the even part -- the element that drives Berezin-style
integration downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LieSuperalgebra, lambda_values
from .enveloping import (PBWMonomial, UEElement, alpha, counit, multiply,
                         quotient_project)


class InternalInvariantError(RuntimeError):
    """A property the construction guarantees failed to hold; indicates a
    rewriting or substitution bug, not bad user input."""


class NoInvariantError(Exception):
    """The trace condition fails, so the quotient module has no invariants."""

    def __init__(self, alg: LieSuperalgebra, violator: int, value: Fraction):
        self.violator = violator
        self.value = value
        super().__init__(
            f"no invariant exists: tr(ad'({alg.basis_name(violator)})) = {value}")


def odd_subset_order(m: int) -> tuple[int, ...]:
    """The 2^m odd-subset bitmasks, ordered by cardinality then by the
    ascending index tuple.  First element is the empty set, last the full set."""
    def bits(mask: int) -> tuple[int, ...]:
        return tuple(t for t in range(m) if mask >> t & 1)
    return tuple(sorted(range(1 << m), key=lambda k: (k.bit_count(), bits(k))))


def subset_monomial(alg: LieSuperalgebra, mask: int) -> UEElement:
    """The ordered product of the odd generators in ``mask``."""
    return UEElement(alg, {PBWMonomial((0,) * alg.n_even, mask): Fraction(1)})


def frobenius_pi(u: UEElement) -> UEElement:
    """Left coefficient of the top odd monomial (an element of the even
    enveloping subalgebra).  For m = 0 this is the identity map."""
    alg = u.alg
    top = (1 << alg.n_odd) - 1
    return UEElement(alg, {PBWMonomial(m.even, 0): c
                           for m, c in u.terms.items() if m.odd == top})


def form(x: UEElement, y: UEElement) -> UEElement:
    """The pairing <x, y> = pi(x y), valued in the even subalgebra."""
    return frobenius_pi(multiply(x, y))


def pi_parity(alg: LieSuperalgebra) -> int:
    """Parity of the top-coefficient projection: the number of odd
    generators mod 2."""
    return alg.n_odd % 2


@dataclass(frozen=True)
class FrobeniusMatrix:
    """Pairing matrix A[i][j] = <x^{I_i}, x^{complement(I_j)}> together with
    its exact right inverse over the even subalgebra."""
    alg: LieSuperalgebra
    order: tuple[int, ...]                       # subset masks, cardinality order
    entries: tuple[tuple[UEElement, ...], ...]
    inverse: tuple[tuple[UEElement, ...], ...]
    diagonal: tuple[int, ...]                    # each +1 or -1


def _scalar_of(u: UEElement) -> Fraction | None:
    """The scalar value of ``u`` if it is a multiple of 1, else None."""
    if u.is_zero:
        return Fraction(0)
    if len(u.terms) == 1:
        mono, c = next(iter(u.terms.items()))
        if mono.degree == 0:
            return c
    return None


def frobenius_matrix(alg: LieSuperalgebra) -> FrobeniusMatrix:
    order = odd_subset_order(alg.n_odd)
    n = len(order)
    top = (1 << alg.n_odd) - 1
    xs = [subset_monomial(alg, mask) for mask in order]
    comp = [subset_monomial(alg, top ^ mask) for mask in order]

    a = [[form(xs[i], comp[j]) for j in range(n)] for i in range(n)]

    diagonal = []
    for i in range(n):
        for j in range(i + 1, n):
            if not a[i][j].is_zero:
                raise InternalInvariantError(
                    f"pairing matrix not lower triangular at ({i}, {j})")
        d = _scalar_of(a[i][i])
        if d not in (1, -1):
            raise InternalInvariantError(
                f"diagonal entry at {i} is {a[i][i]!r}, expected +-1")
        diagonal.append(int(d))

    # right inverse by forward substitution; the +-1 diagonal makes the
    # division exact and sidesteps noncommutativity.
    zero, one = UEElement.zero(alg), UEElement.one(alg)
    b = [[zero] * n for _ in range(n)]
    for j in range(n):
        for i in range(n):
            acc = one if i == j else zero
            for k in range(i):
                if a[i][k].is_zero or b[k][j].is_zero:
                    continue
                acc = acc - multiply(a[i][k], b[k][j])
            b[i][j] = acc * diagonal[i]

    for i in range(n):
        for j in range(n):
            acc = UEElement.zero(alg)
            for k in range(n):
                acc = acc + multiply(a[i][k], b[k][j])
            if acc != (one if i == j else zero):
                raise InternalInvariantError(
                    f"A * A^-1 is not the identity at ({i}, {j})")

    return FrobeniusMatrix(alg, order, tuple(map(tuple, a)),
                           tuple(map(tuple, b)), tuple(diagonal))


def dual_pair(alg: LieSuperalgebra, fm: FrobeniusMatrix | None = None) -> list[UEElement]:
    """Elements y^I with <x^I, y^J> = delta_IJ, in the subset order.

    y^I = sum_J x^{complement(J)} * alpha(inverse[J][I]); duality is
    verified exhaustively before returning.
    """
    if fm is None:
        fm = frobenius_matrix(alg)
    n = len(fm.order)
    top = (1 << alg.n_odd) - 1
    comp = [subset_monomial(alg, top ^ mask) for mask in fm.order]
    ys = []
    for j in range(n):
        y = UEElement.zero(alg)
        for k in range(n):
            if fm.inverse[k][j].is_zero:
                continue
            y = y + multiply(comp[k], alpha(fm.inverse[k][j]))
        ys.append(y)
    one, zero = UEElement.one(alg), UEElement.zero(alg)
    for i in range(n):
        xi = subset_monomial(alg, fm.order[i])
        for j in range(n):
            want = one if i == j else zero
            if form(xi, ys[j]) != want:
                raise InternalInvariantError(
                    f"dual pair fails at ({i}, {j})")
    return ys


@dataclass(frozen=True)
class InvariantZ:
    """Representative of the invariant line in the quotient by the left
    ideal generated by the even part, plus the per-generator residues of
    w*z - counit(w)*z modulo that ideal (all zero when valid)."""
    z: UEElement
    certificate: dict[int, dict[int, Fraction]]

    @property
    def quotient_class(self) -> dict[int, Fraction]:
        return quotient_project(self.z)

    @property
    def parity(self) -> int:
        return pi_parity(self.z.alg)


def invariant_z(alg: LieSuperalgebra, fm: FrobeniusMatrix | None = None) -> InvariantZ:
    """The canonical invariant: z = sum_J x^{complement(J)} * counit(inverse[J][empty]).

    Requires the trace condition; otherwise the invariant space of the
    quotient module is zero and ``NoInvariantError`` names the violating
    even basis element and its trace.
    """
    lam = lambda_values(alg)
    for i, v in sorted(lam.items()):
        if v:
            raise NoInvariantError(alg, i, v)
    if fm is None:
        fm = frobenius_matrix(alg)
    top = (1 << alg.n_odd) - 1
    z = UEElement.zero(alg)
    for k, mask in enumerate(fm.order):
        entry = fm.inverse[k][0]
        if counit(alpha(entry)) != counit(entry):
            raise InternalInvariantError(
                "counit is not twist-invariant despite the trace condition")
        c = counit(entry)
        if c:
            z = z + subset_monomial(alg, top ^ mask) * c

    certificate = {}
    for i in range(alg.dim):
        # residue of w z - counit(w) z; counit vanishes on generators
        residue = quotient_project(multiply(UEElement.generator(alg, i), z))
        certificate[i] = residue
        if residue:
            raise InternalInvariantError(
                f"z is not invariant under {alg.basis_name(i)}: residue {residue}")
    if not quotient_project(z):
        raise InternalInvariantError("z lies in the ideal it should represent "
                                     "a nonzero class against")
    return InvariantZ(z, certificate)


def classes_proportional(a: dict[int, Fraction], b: dict[int, Fraction]) -> bool:
    """Are two nonzero quotient classes nonzero scalar multiples of each other?"""
    if not a or not b or set(a) != set(b):
        return False
    mask = next(iter(a))
    ratio = b[mask] / a[mask]
    if not ratio:
        return False
    return all(b[m] == ratio * a[m] for m in a)
