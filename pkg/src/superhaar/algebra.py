"""Finite-dimensional Lie superalgebras given by rational structure constants.

Basis convention, fixed package-wide: indices ``0 .. n_even-1`` are even,
``n_even .. n_even+n_odd-1`` are odd.  Brackets are stored for every ordered
pair exactly as supplied; super antisymmetry is *validated*, never derived,
so inconsistent input shows up as a diagnostic instead of being silently
symmetrized.

All scalars are exact rationals (``fractions.Fraction``).  Floats are
rejected on input: downstream the engine relies on exact yes/no answers
(triangularity, ideal membership), so approximate coefficients are never
meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from . import linalg

EVEN = 0
ODD = 1


class InputError(ValueError):
    """Structurally malformed input: bad index, bad scalar, bad shape.

    Distinct from a mathematical violation of the superalgebra axioms,
    which is reported through :class:`ValidationReport`.
    """


def as_scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise InputError(f"scalar must be an exact rational, got {value!r}")


@dataclass(frozen=True)
class Violation:
    kind: str          # "parity" | "antisymmetry" | "jacobi" | module kinds
    witness: tuple     # basis indices involved
    detail: str

    def __str__(self):
        return f"{self.kind} at {self.witness}: {self.detail}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, witness: tuple, detail: str):
        self.violations.append(Violation(kind, witness, detail))


class LieSuperalgebra:
    """A Lie superalgebra presented by structure constants over Q.

    ``brackets`` maps ordered index pairs to the expansion of the bracket
    over the basis; pairs not present have zero bracket.
    """

    def __init__(self, name: str, even_names: Iterable[str],
                 odd_names: Iterable[str],
                 brackets: Mapping[tuple[int, int], Mapping[int, object] | Iterable[tuple[int, object]]]):
        self.name = name
        self.even_names = tuple(even_names)
        self.odd_names = tuple(odd_names)
        names = self.even_names + self.odd_names
        if len(set(names)) != len(names):
            raise InputError("duplicate basis names")
        self.n_even = len(self.even_names)
        self.n_odd = len(self.odd_names)
        self.dim = self.n_even + self.n_odd
        table: dict[tuple[int, int], tuple[tuple[int, Fraction], ...]] = {}
        for (i, j), vec in brackets.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise InputError(f"bracket index ({i}, {j}) out of range")
            items = vec.items() if isinstance(vec, Mapping) else vec
            acc: dict[int, Fraction] = {}
            for k, c in items:
                if not 0 <= k < self.dim:
                    raise InputError(f"bracket target index {k} out of range")
                acc[k] = acc.get(k, Fraction(0)) + as_scalar(c)
            entry = tuple(sorted((k, c) for k, c in acc.items() if c))
            if entry:
                table[(i, j)] = entry
        self._brackets = table
        self._cached_key = (self.name, self.even_names, self.odd_names,
                            tuple(sorted(table.items())))

    # -- basic queries ------------------------------------------------------

    def parity(self, i: int) -> int:
        return EVEN if i < self.n_even else ODD

    def basis_name(self, i: int) -> str:
        if i < self.n_even:
            return self.even_names[i]
        return self.odd_names[i - self.n_even]

    def index_of(self, name: str) -> int:
        try:
            return (self.even_names + self.odd_names).index(name)
        except ValueError:
            raise InputError(f"unknown basis name {name!r}") from None

    def bracket(self, i: int, j: int) -> tuple[tuple[int, Fraction], ...]:
        return self._brackets.get((i, j), ())

    def nonzero_brackets(self):
        return sorted(self._brackets.items())

    def _key(self):
        return self._cached_key

    def __eq__(self, other):
        return isinstance(other, LieSuperalgebra) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f"LieSuperalgebra({self.name!r}, n_even={self.n_even}, "
                f"n_odd={self.n_odd})")

    # -- bracket on coefficient vectors --------------------------------------

    def bracket_vectors(self, u: dict[int, Fraction], v: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for a, ca in u.items():
            if not ca:
                continue
            for b, cb in v.items():
                if not cb:
                    continue
                for k, c in self.bracket(a, b):
                    out[k] = out.get(k, Fraction(0)) + ca * cb * c
        return {k: c for k, c in out.items() if c}


def validate_superalgebra(alg: LieSuperalgebra) -> ValidationReport:
    """Check parity consistency, super antisymmetry, and super Jacobi.

    Every violated identity is reported with the witnessing basis tuple;
    an empty report certifies all three families of identities.
    """
    report = ValidationReport()
    n = alg.dim
    p = alg.parity

    for (i, j), vec in alg.nonzero_brackets():
        want = (p(i) + p(j)) % 2
        for k, c in vec:
            if p(k) != want:
                report.add("parity", (i, j, k),
                           f"[{alg.basis_name(i)}, {alg.basis_name(j)}] has a "
                           f"component of wrong parity on {alg.basis_name(k)} "
                           f"(coefficient {c})")

    for i in range(n):
        for j in range(i, n):
            sign = -1 if p(i) and p(j) else 1
            lhs = dict(alg.bracket(i, j))
            for k, c in alg.bracket(j, i):
                lhs[k] = lhs.get(k, Fraction(0)) + sign * c
            bad = {k: c for k, c in lhs.items() if c}
            if bad:
                report.add("antisymmetry", (i, j),
                           f"[{alg.basis_name(i)}, {alg.basis_name(j)}] + "
                           f"(-1)^([i][j]) [{alg.basis_name(j)}, {alg.basis_name(i)}] "
                           f"is nonzero: {bad}")

    # graded Leibniz form of Jacobi:
    # [i,[j,k]] = [[i,j],k] + (-1)^{p(i)p(j)} [j,[i,k]]
    for i in range(n):
        for j in range(n):
            sign = -1 if p(i) and p(j) else 1
            for k in range(n):
                lhs = alg.bracket_vectors({i: Fraction(1)}, dict(alg.bracket(j, k)))
                rhs = alg.bracket_vectors(dict(alg.bracket(i, j)), {k: Fraction(1)})
                for t, c in alg.bracket_vectors({j: Fraction(1)},
                                                dict(alg.bracket(i, k))).items():
                    rhs[t] = rhs.get(t, Fraction(0)) + sign * c
                diff = {t: lhs.get(t, Fraction(0)) - rhs.get(t, Fraction(0))
                        for t in set(lhs) | set(rhs)}
                diff = {t: c for t, c in diff.items() if c}
                if diff:
                    report.add("jacobi", (i, j, k),
                               f"Jacobi fails on ({alg.basis_name(i)}, "
                               f"{alg.basis_name(j)}, {alg.basis_name(k)}): "
                               f"residual {diff}")
    return report


def ad_prime_trace(alg: LieSuperalgebra, i: int) -> Fraction:
    """Trace of the adjoint action of the even basis element ``i`` on the
    odd part: sum over odd j of the coefficient of b_j in [b_i, b_j]."""
    if alg.parity(i) != EVEN:
        raise ValueError(f"basis element {alg.basis_name(i)} is odd")
    total = Fraction(0)
    for j in range(alg.n_even, alg.dim):
        for k, c in alg.bracket(i, j):
            if k == j:
                total += c
    return total


def lambda_values(alg: LieSuperalgebra) -> dict[int, Fraction]:
    return {i: ad_prime_trace(alg, i) for i in range(alg.n_even)}


def trace_condition_holds(alg: LieSuperalgebra) -> bool:
    """Whether every even basis element acts tracelessly on the odd part.

    By linearity of the trace, checking the basis suffices.
    """
    return all(not v for v in lambda_values(alg).values())


@dataclass
class EvenPartReport:
    """Best-effort reductivity certificate for the even part."""
    center: list[list[Fraction]]          # coordinate vectors over the even basis
    derived: list[list[Fraction]]
    decomposition_direct: bool            # g0 = center (+) derived, exactly
    killing_nondegenerate: bool           # Killing form restricted to derived
    certified_reductive: bool
    assumed_reductive: bool = False

    @property
    def reductive(self) -> bool:
        return self.certified_reductive or self.assumed_reductive

    @property
    def center_dim(self) -> int:
        return len(self.center)

    @property
    def derived_dim(self) -> int:
        return len(self.derived)


def _even_ad_matrix(alg: LieSuperalgebra, vec: list[Fraction]) -> linalg.Matrix:
    """Matrix of ad(v) restricted to the even part, v given in even coords."""
    n0 = alg.n_even
    out = linalg.zeros(n0, n0)
    for i, ci in enumerate(vec):
        if not ci:
            continue
        for j in range(n0):
            for k, c in alg.bracket(i, j):
                if k < n0:
                    out[k][j] += ci * c
    return out


def even_part_structure(alg: LieSuperalgebra, assume_reductive: bool = False) -> EvenPartReport:
    """Center, derived subalgebra, and reductivity certificate of the even part.

    The certificate is: even part = center (+) derived as an exact direct
    sum, with nondegenerate Killing form on the derived part.  When it is
    inconclusive the caller may assert reductivity via ``assume_reductive``;
    the assumption is recorded so downstream outputs can carry a warning.
    """
    n0 = alg.n_even
    if n0 == 0:
        return EvenPartReport([], [], True, True, True, assume_reductive)

    # center: v with [v, b_j] = 0 for all even j
    rows = []
    for j in range(n0):
        for k in range(n0):
            rows.append([next((c for t, c in alg.bracket(i, j) if t == k), Fraction(0))
                         for i in range(n0)])
    center = linalg.nullspace(rows)

    derived_span = []
    for i in range(n0):
        for j in range(n0):
            vec = [Fraction(0)] * n0
            hit = False
            for k, c in alg.bracket(i, j):
                if k < n0:
                    vec[k] = c
                    hit = True
            if hit:
                derived_span.append(vec)
    derived = linalg.row_space_basis(derived_span)

    direct = (len(center) + len(derived) == n0
              and linalg.rank(center + derived) == n0)

    if derived:
        ads = [_even_ad_matrix(alg, v) for v in derived]
        gram = [[linalg.trace(linalg.mat_mul(a, b)) for b in ads] for a in ads]
        killing_nondeg = linalg.rank(gram) == len(derived)
    else:
        killing_nondeg = True

    certified = direct and killing_nondeg
    return EvenPartReport(center, derived, direct, killing_nondeg,
                          certified, assume_reductive and not certified)


def change_basis(alg: LieSuperalgebra, even_map: linalg.Matrix,
                 odd_map: linalg.Matrix, name: str | None = None) -> tuple[LieSuperalgebra, linalg.Matrix]:
    """Transport the structure constants along a parity-preserving change
    of basis.  ``even_map``/``odd_map`` give the new basis vectors in the
    old coordinates, column by column.  Returns the new algebra together
    with the full block matrix used (new basis -> old coordinates)."""
    n0, m = alg.n_even, alg.n_odd
    if len(even_map) != n0 or (n0 and len(even_map[0]) != n0):
        raise InputError("even_map has wrong shape")
    if len(odd_map) != m or (m and len(odd_map[0]) != m):
        raise InputError("odd_map has wrong shape")
    full = linalg.zeros(alg.dim, alg.dim)
    for a in range(n0):
        for b in range(n0):
            full[a][b] = as_scalar(even_map[a][b])
    for a in range(m):
        for b in range(m):
            full[n0 + a][n0 + b] = as_scalar(odd_map[a][b])
    inv = linalg.invert(full)  # raises ValueError when singular

    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i in range(alg.dim):
        ui = {a: full[a][i] for a in range(alg.dim) if full[a][i]}
        for j in range(alg.dim):
            uj = {b: full[b][j] for b in range(alg.dim) if full[b][j]}
            w = alg.bracket_vectors(ui, uj)
            if not w:
                continue
            wvec = [w.get(k, Fraction(0)) for k in range(alg.dim)]
            new = linalg.mat_vec(inv, wvec)
            entry = {k: c for k, c in enumerate(new) if c}
            if entry:
                brackets[(i, j)] = entry
    out = LieSuperalgebra(name or alg.name + "'", alg.even_names,
                          alg.odd_names, brackets)
    return out, full
