"""Graded representations, the invariant projector, and integral matrices.

A module is given by one rational matrix per basis element of the algebra
(left action on column vectors) plus a parity for each module basis vector.
Integration evaluates the canonical invariant on matrix elements: the
integral matrix is the action of the invariant composed with the projector
onto the even-part invariants, and left invariance of the result is
verified exactly on every call, which pins the sign conventions
operationally.

The brute-force invariant search at the bottom is deliberately independent
of the Frobenius machinery: it only uses the quotient action provided by
the enveloping-algebra layer, so agreement between the two is a genuine
cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import linalg
from .algebra import (EvenPartReport, InputError, LieSuperalgebra,
                      ValidationReport, as_scalar, even_part_structure)
from .enveloping import UEElement, act_on_quotient
from .frobenius import InternalInvariantError, InvariantZ, odd_subset_order, pi_parity

Matrix = tuple[tuple[Fraction, ...], ...]


class NotSemisimpleError(Exception):
    """The module is not semisimple over the even part."""


def _freeze_matrix(rows, dim: int) -> Matrix:
    if len(rows) != dim:
        raise InputError(f"matrix has {len(rows)} rows, expected {dim}")
    out = []
    for row in rows:
        if len(row) != dim:
            raise InputError(f"matrix row has {len(row)} entries, expected {dim}")
        out.append(tuple(as_scalar(c) for c in row))
    return tuple(out)


class GradedModule:
    """A finite-dimensional graded representation: a parity per basis
    vector and one action matrix per algebra basis element (absent means
    zero)."""

    def __init__(self, alg: LieSuperalgebra, parities, action: Mapping[int, object],
                 name: str = ""):
        self.alg = alg
        self.name = name
        self.parities = tuple(int(p) for p in parities)
        if any(p not in (0, 1) for p in self.parities):
            raise InputError("parities must be 0 (even) or 1 (odd)")
        self.dim = len(self.parities)
        rho = {}
        for i, mat in action.items():
            if not 0 <= i < alg.dim:
                raise InputError(f"action index {i} out of range")
            frozen = _freeze_matrix(mat, self.dim)
            if any(any(row) for row in frozen):
                rho[i] = frozen
        self._rho = rho

    def rho(self, i: int) -> Matrix:
        zero = tuple((Fraction(0),) * self.dim for _ in range(self.dim))
        return self._rho.get(i, zero)

    def __repr__(self):
        return f"GradedModule({self.name or '?'}, dim={self.dim}, over {self.alg.name})"


def _mat(m: Matrix) -> linalg.Matrix:
    return [list(row) for row in m]


def validate_module(alg: LieSuperalgebra, module: GradedModule) -> ValidationReport:
    """Check parity compatibility of each action matrix and the bracket
    relation rho([x,y]) = rho(x)rho(y) - (-1)^([x][y]) rho(y)rho(x) on all
    basis pairs."""
    report = ValidationReport()
    if module.alg != alg:
        raise InputError("module was built over a different algebra")
    d = module.dim
    for i in range(alg.dim):
        m = module.rho(i)
        pi = alg.parity(i)
        for r in range(d):
            for c in range(d):
                if m[r][c] and (module.parities[r] - module.parities[c] - pi) % 2:
                    report.add("module-parity", (i, r, c),
                               f"rho({alg.basis_name(i)})[{r}][{c}] = {m[r][c]} "
                               f"violates the parity pattern")
    for i in range(alg.dim):
        mi = _mat(module.rho(i))
        for j in range(alg.dim):
            mj = _mat(module.rho(j))
            sign = -1 if alg.parity(i) and alg.parity(j) else 1
            rhs = linalg.mat_mul(mi, mj)
            back = linalg.mat_mul(mj, mi)
            lhs = linalg.zeros(d, d)
            for k, c in alg.bracket(i, j):
                mk = module.rho(k)
                for r in range(d):
                    for s in range(d):
                        if mk[r][s]:
                            lhs[r][s] += c * mk[r][s]
            bad = any(lhs[r][s] != rhs[r][s] - sign * back[r][s]
                      for r in range(d) for s in range(d))
            if bad:
                report.add("module-bracket", (i, j),
                           f"rho([{alg.basis_name(i)}, {alg.basis_name(j)}]) does "
                           f"not match the supercommutator of the actions")
    return report


def module_action(module: GradedModule, u: UEElement) -> linalg.Matrix:
    """The action matrix of an enveloping-algebra element (rho extended
    multiplicatively along each PBW word)."""
    if u.alg != module.alg:
        raise ValueError("element and module live over different algebras")
    d = module.dim
    out = linalg.zeros(d, d)
    for mono, c in u.terms.items():
        acc = linalg.identity(d)
        for g in mono.word(module.alg.n_even):
            acc = linalg.mat_mul(acc, _mat(module.rho(g)))
        for r in range(d):
            for s in range(d):
                if acc[r][s]:
                    out[r][s] += c * acc[r][s]
    return out


@dataclass
class SemisimplicityReport:
    """Certificate that a module is semisimple over the even part:
    squarefree minimal polynomials for the central generators, and an exact
    direct-sum decomposition into even-invariants plus the even image."""
    central_squarefree: list[bool]
    invariants_basis: list[linalg.Vector]
    image_basis: list[linalg.Vector]
    decomposition_direct: bool

    @property
    def ok(self) -> bool:
        return all(self.central_squarefree) and self.decomposition_direct

    @property
    def invariants_dim(self) -> int:
        return len(self.invariants_basis)


def check_semisimple_over_even(alg: LieSuperalgebra, module: GradedModule,
                               even_report: EvenPartReport | None = None) -> SemisimplicityReport:
    """Semisimplicity of the module over the even part, verified exactly.

    Central elements must act with squarefree minimal polynomial (they
    commute, so this certifies joint diagonalizability over the closure);
    the module must split exactly into joint-kernel plus image of the even
    action.  Semisimplicity of the derived part's action is a theorem in
    characteristic zero and is not re-derived here.
    """
    if even_report is None:
        even_report = even_part_structure(alg)
    d = module.dim
    n0 = alg.n_even

    central_ok = []
    for center_vec in even_report.center:
        mat = linalg.zeros(d, d)
        for i, ci in enumerate(center_vec):
            if ci:
                m = module.rho(i)
                for r in range(d):
                    for c in range(d):
                        if m[r][c]:
                            mat[r][c] += ci * m[r][c]
        central_ok.append(linalg.is_squarefree(linalg.minimal_polynomial(mat)))

    stacked_rows = []
    columns = []
    for i in range(n0):
        m = module.rho(i)
        stacked_rows.extend(_mat(m))
        for c in range(d):
            col = [m[r][c] for r in range(d)]
            if any(col):
                columns.append(col)
    invariants = linalg.nullspace(stacked_rows) if stacked_rows else [
        [Fraction(int(r == t)) for t in range(d)] for r in range(d)]
    image = linalg.row_space_basis(columns)
    direct = (len(invariants) + len(image) == d
              and linalg.rank(invariants + image) == d)
    return SemisimplicityReport(central_ok, invariants, image, direct)


def invariant_projector(alg: LieSuperalgebra, module: GradedModule,
                        report: SemisimplicityReport | None = None) -> linalg.Matrix:
    """Projector onto the even-part invariants along the even image.

    Its (k, j) entry is the value of the normalized even integral on the
    matrix element t_kj: the trivial isotypic component survives, the rest
    is annihilated.
    """
    if report is None:
        report = check_semisimple_over_even(alg, module)
    if not report.ok:
        raise NotSemisimpleError("module is not semisimple over the even part")
    d = module.dim
    basis = report.invariants_basis + report.image_basis
    cols = linalg.transpose(basis)  # basis vectors as columns
    k = len(report.invariants_basis)
    diag = linalg.zeros(d, d)
    for t in range(k):
        diag[t][t] = Fraction(1)
    proj = linalg.mat_mul(linalg.mat_mul(cols, diag), linalg.invert(cols))

    if linalg.mat_mul(proj, proj) != proj:
        raise InternalInvariantError("projector is not idempotent")
    for i in range(alg.n_even):
        m = _mat(module.rho(i))
        if any(any(row) for row in linalg.mat_mul(m, proj)):
            raise InternalInvariantError("even action does not kill the projector image")
        if any(any(row) for row in linalg.mat_mul(proj, m)):
            raise InternalInvariantError("projector does not kill the even image")
    return proj


@dataclass(frozen=True)
class IntegralMatrix:
    """The integral evaluated on matrix elements: entry (i, j) is the value
    on t_ij.  Columns are invariant vectors of the module (scaled), and the
    support respects parity(i) + parity(j) = parity of the invariant."""
    entries: Matrix
    parity: int


def integral_matrix(alg: LieSuperalgebra, module: GradedModule,
                    invariant: InvariantZ,
                    projector: linalg.Matrix | None = None) -> IntegralMatrix:
    """Action of the invariant composed with the even-invariant projector.

    Left invariance (rho(w) M = counit(w) M for every basis element w) is
    verified before returning; a failure indicates a sign-convention fault
    in the library, not bad input.
    """
    if projector is None:
        projector = invariant_projector(alg, module)
    m = linalg.mat_mul(module_action(module, invariant.z), projector)
    for i in range(alg.dim):
        if any(any(row) for row in linalg.mat_mul(_mat(module.rho(i)), m)):
            raise InternalInvariantError(
                f"integral matrix is not left invariant under {alg.basis_name(i)}")
    return IntegralMatrix(tuple(tuple(row) for row in m), pi_parity(alg))


def check_right_integral(alg: LieSuperalgebra, module: GradedModule,
                         integral: IntegralMatrix) -> bool:
    """Row-side invariance: M rho(w) = counit(w) M for every basis element."""
    m = _mat(integral.entries)
    for i in range(alg.dim):
        if any(any(row) for row in linalg.mat_mul(m, _mat(module.rho(i)))):
            return False
    return True


def brute_force_quotient_invariants(alg: LieSuperalgebra) -> list[dict[int, Fraction]]:
    """Invariant classes of the 2^m-dimensional quotient module, found by
    exact linear algebra over the quotient action of every basis element.

    Independent oracle: uses only the enveloping-algebra quotient action,
    none of the Frobenius construction.
    """
    n = 1 << alg.n_odd
    rows = []
    for i in range(alg.dim):
        action = linalg.zeros(n, n)
        for col in range(n):
            for mask, c in act_on_quotient(alg, i, {col: Fraction(1)}).items():
                action[mask][col] = c
        rows.extend(action)
    basis = linalg.nullspace(rows) if rows else [
        [Fraction(int(r == t)) for t in range(n)] for r in range(n)]
    out = []
    for vec in basis:
        out.append({mask: c for mask, c in enumerate(vec) if c})
    return out


def quotient_module(alg: LieSuperalgebra, name: str = "") -> GradedModule:
    """The quotient by the left ideal generated by the even part, packaged
    as a graded module with basis the odd-subset classes in cardinality
    order.  For a purely odd abelian algebra this is the exterior algebra
    on the odd generators with generators acting by left multiplication."""
    order = odd_subset_order(alg.n_odd)
    pos = {mask: t for t, mask in enumerate(order)}
    d = len(order)
    parities = [mask.bit_count() & 1 for mask in order]
    action = {}
    for i in range(alg.dim):
        mat = [[Fraction(0)] * d for _ in range(d)]
        hit = False
        for col, mask in enumerate(order):
            for out_mask, c in act_on_quotient(alg, i, {mask: Fraction(1)}).items():
                mat[pos[out_mask]][col] = c
                hit = True
        if hit:
            action[i] = mat
    return GradedModule(alg, parities, action, name or f"{alg.name}-quotient")
