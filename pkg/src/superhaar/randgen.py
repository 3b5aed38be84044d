"""Seeded random generators: elements, basis changes, small valid algebras.

Test support.  The algebra families below are valid by construction for
every choice of the random data (central extensions by a symmetric form,
diagonal weight actions, and invertible base changes of those), which is
what makes them usable for randomized uniqueness sweeps without a search
for consistent structure constants.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .algebra import LieSuperalgebra, change_basis
from .enveloping import UEElement


def random_scalar(rng: random.Random, span: int = 4) -> Fraction:
    num = rng.randint(-span, span)
    den = rng.randint(1, 3)
    return Fraction(num, den)


def random_element(alg: LieSuperalgebra, rng: random.Random,
                   max_degree: int = 3, terms: int = 4) -> UEElement:
    out = UEElement.zero(alg)
    for _ in range(terms):
        length = rng.randint(0, max_degree)
        word = tuple(rng.randrange(alg.dim) for _ in range(length))
        out = out + UEElement.from_word(alg, word, random_scalar(rng))
    return out


def random_even_element(alg: LieSuperalgebra, rng: random.Random,
                        max_degree: int = 2, terms: int = 3) -> UEElement:
    out = UEElement.zero(alg)
    if alg.n_even == 0:
        return UEElement.scalar(alg, random_scalar(rng))
    for _ in range(terms):
        length = rng.randint(0, max_degree)
        word = tuple(rng.randrange(alg.n_even) for _ in range(length))
        out = out + UEElement.from_word(alg, word, random_scalar(rng))
    return out


def random_homogeneous_element(alg: LieSuperalgebra, rng: random.Random,
                               parity: int, max_degree: int = 3,
                               attempts: int = 40) -> UEElement:
    for _ in range(attempts):
        u = random_element(alg, rng, max_degree=max_degree, terms=5)
        filtered = UEElement(alg, {m: c for m, c in u.terms.items()
                                   if m.parity == parity})
        if not filtered.is_zero:
            return filtered
    raise RuntimeError(f"could not draw a homogeneous element of parity {parity}")


def random_invertible_matrix(rng: random.Random, n: int,
                             attempts: int = 50) -> linalg.Matrix:
    for _ in range(attempts):
        mat = [[random_scalar(rng, span=2) for _ in range(n)] for _ in range(n)]
        try:
            linalg.invert(mat)
        except ValueError:
            continue
        return mat
    raise RuntimeError("could not draw an invertible matrix")


def random_odd_basis_change(alg: LieSuperalgebra, rng: random.Random,
                            name: str | None = None):
    """New algebra with the odd basis replaced by a random invertible
    rational combination; even basis untouched.  Returns (algebra, map)."""
    p = random_invertible_matrix(rng, alg.n_odd)
    return change_basis(alg, linalg.identity(alg.n_even), p, name=name)


def _heisenberg(rng: random.Random, m: int, name: str) -> LieSuperalgebra:
    # odd generators pairing into a single even central element via a
    # random symmetric form; Jacobi holds for any choice of the form
    brackets = {}
    for s in range(m):
        for t in range(s, m):
            c = random_scalar(rng)
            if not c:
                continue
            brackets[(1 + s, 1 + t)] = {0: c}
            if t != s:
                brackets[(1 + t, 1 + s)] = {0: c}
    return LieSuperalgebra(name, ["Z"], [f"th{t}" for t in range(m)], brackets)


def _weights(rng: random.Random, m: int, name: str, traceless: bool) -> LieSuperalgebra:
    # one even generator acting diagonally on the odd part
    weights = [random_scalar(rng) for _ in range(m)]
    if traceless and m > 0:
        weights[-1] = -sum(weights[:-1], Fraction(0))
    brackets = {}
    for t, w in enumerate(weights):
        if w:
            brackets[(0, 1 + t)] = {1 + t: w}
            brackets[(1 + t, 0)] = {1 + t: -w}
    return LieSuperalgebra(name, ["X"], [f"th{t}" for t in range(m)], brackets)


def random_small_superalgebra(rng: random.Random, max_dim: int = 5) -> LieSuperalgebra:
    """A random valid Lie superalgebra with n_even + n_odd <= max_dim.

    Mixes unimodular and non-unimodular families and optionally twists the
    odd basis so the structure constants are dense.
    """
    family = rng.choice(["heisenberg", "weights", "weights0", "abelian"])
    if family == "abelian":
        m = rng.randint(1, max_dim)
        alg = LieSuperalgebra(f"rand-abelian-{m}", [],
                              [f"th{t}" for t in range(m)], {})
    elif family == "heisenberg":
        m = rng.randint(1, max_dim - 1)
        alg = _heisenberg(rng, m, f"rand-heis-{m}")
    else:
        m = rng.randint(1, max_dim - 1)
        alg = _weights(rng, m, f"rand-weight-{m}", traceless=family == "weights0")
    if alg.n_odd and rng.random() < 0.5:
        alg, _ = random_odd_basis_change(alg, rng, name=alg.name + "-twisted")
    return alg
