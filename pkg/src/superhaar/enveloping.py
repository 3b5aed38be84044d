"""Arithmetic in the universal enveloping algebra.

Elements are kept in the even-first PBW normal form: each monomial is a
vector of exponents for the even generators (ascending) followed by a
subset of the odd generators (ascending, exponents at most one since an
odd square rewrites to half its self-bracket).  Stored this way, an
element is literally the left-coefficient decomposition
``u = sum_I u_I x^I`` with ``u_I`` in the even enveloping subalgebra,
which is what the top-coefficient projection of the Frobenius machinery
reads off directly.

A second term order (odd generators first) yields the right-coefficient
decomposition ``u = sum_I x^I u_I``; it is a derived view, used for
membership in the left ideal generated by the even part.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, NamedTuple

from .algebra import LieSuperalgebra, ad_prime_trace, as_scalar


class PBWMonomial(NamedTuple):
    """Normal-form monomial: even exponent vector plus odd-subset bitmask.

    Bit ``t`` of ``odd`` stands for the odd generator with global index
    ``n_even + t``.
    """
    even: tuple[int, ...]
    odd: int

    @property
    def degree(self) -> int:
        return sum(self.even) + self.odd.bit_count()

    @property
    def parity(self) -> int:
        return self.odd.bit_count() & 1

    def word(self, n_even: int) -> tuple[int, ...]:
        w = []
        for i, e in enumerate(self.even):
            w.extend([i] * e)
        mask, t = self.odd, 0
        while mask:
            if mask & 1:
                w.append(n_even + t)
            mask >>= 1
            t += 1
        return tuple(w)


def _term_key(mono: PBWMonomial):
    # graded order for deterministic display and serialization
    return (mono.degree, mono.even, mono.odd)


class UEElement:
    """An enveloping-algebra element: a finite Fraction-weighted sum of
    PBW monomials over a fixed algebra.  Values are immutable; all
    arithmetic allocates fresh results."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: LieSuperalgebra, terms=()):
        acc: dict[PBWMonomial, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for mono, c in items:
            c = as_scalar(c)
            if not c:
                continue
            if (len(mono.even) != alg.n_even or mono.odd >> alg.n_odd
                    or mono.odd < 0 or any(e < 0 for e in mono.even)):
                raise ValueError(f"monomial {mono} does not fit algebra {alg.name}")
            acc[mono] = acc.get(mono, Fraction(0)) + c
        object.__setattr__(self, "alg", alg)
        object.__setattr__(self, "terms", {m: c for m, c in acc.items() if c})

    def __setattr__(self, *_):
        raise AttributeError("UEElement is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, alg):
        return cls(alg)

    @classmethod
    def scalar(cls, alg, c):
        return cls(alg, {PBWMonomial((0,) * alg.n_even, 0): as_scalar(c)})

    @classmethod
    def one(cls, alg):
        return cls.scalar(alg, 1)

    @classmethod
    def generator(cls, alg, i: int):
        if not 0 <= i < alg.dim:
            raise ValueError(f"generator index {i} out of range")
        if i < alg.n_even:
            even = tuple(1 if t == i else 0 for t in range(alg.n_even))
            return cls(alg, {PBWMonomial(even, 0): Fraction(1)})
        return cls(alg, {PBWMonomial((0,) * alg.n_even, 1 << (i - alg.n_even)): Fraction(1)})

    @classmethod
    def from_word(cls, alg, word: Iterable[int], coeff=1):
        nf = _normal_form(alg, [(tuple(word), as_scalar(coeff))], _even_first_key)
        return cls(alg, {_word_to_monomial(alg, w): c for w, c in nf.items()})

    # -- queries -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def homogeneous_parity(self) -> int | None:
        """Parity if all monomials agree (0 or 1), else None; None for 0."""
        parities = {m.parity for m in self.terms}
        return parities.pop() if len(parities) == 1 else None

    def coefficient(self, mono: PBWMonomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _term_key(t[0]))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return UEElement(self.alg, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return UEElement(self.alg, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UEElement):
            return multiply(self, other)
        c = as_scalar(other)
        return UEElement(self.alg, {m: c * v for m, v in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = UEElement.one(self.alg)
        for _ in range(n):
            out = multiply(out, self)
        return out

    def __eq__(self, other):
        return (isinstance(other, UEElement) and self.alg == other.alg
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.alg, frozenset(self.terms.items())))

    def _check(self, other):
        if not isinstance(other, UEElement) or other.alg != self.alg:
            raise ValueError("elements live over different algebras")

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for mono, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(mono.even):
                if e == 1:
                    factors.append(self.alg.even_names[i])
                elif e > 1:
                    factors.append(f"{self.alg.even_names[i]}^{e}")
            for t in range(self.alg.n_odd):
                if mono.odd >> t & 1:
                    factors.append(self.alg.odd_names[t])
            body = "*".join(factors)
            if not body:
                bits.append(str(c))
            elif c == 1:
                bits.append(body)
            elif c == -1:
                bits.append(f"-{body}")
            else:
                bits.append(f"{c}*{body}")
        out = " + ".join(bits).replace("+ -", "- ")
        return out


# -- normal-form rewriting ---------------------------------------------------

def _even_first_key(g: int) -> int:
    return g


def _odd_first_key_for(n_even: int):
    def key(g: int):
        return (0, g) if g >= n_even else (1, g)
    return key


def _word_to_monomial(alg: LieSuperalgebra, word: tuple[int, ...]) -> PBWMonomial:
    even = [0] * alg.n_even
    mask = 0
    for g in word:
        if g < alg.n_even:
            even[g] += 1
        else:
            mask |= 1 << (g - alg.n_even)
    return PBWMonomial(tuple(even), mask)


def _normal_form(alg: LieSuperalgebra, heads, key) -> dict[tuple[int, ...], Fraction]:
    """Expand scaled generator words into canonical words for the order `key`.

    A word is canonical when its letters are non-decreasing under `key` and
    no odd letter repeats.  One step either transposes an adjacent
    out-of-order pair (Koszul sign plus a bracket term) or collapses an
    adjacent odd square via x*x = [x,x]/2.  Every step lowers
    (total degree, inversion count), so the worklist terminates.
    """
    parity = alg.parity
    out: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    stack = [(tuple(w), c) for w, c in heads]
    while stack:
        w, c = stack.pop()
        red = -1
        for p in range(len(w) - 1):
            a, b = w[p], w[p + 1]
            if key(a) > key(b) or (a == b and parity(a)):
                red = p
                break
        if red < 0:
            out[w] += c
            continue
        a, b = w[red], w[red + 1]
        head, tail = w[:red], w[red + 2:]
        if a == b:
            for k, ck in alg.bracket(a, a):
                stack.append((head + (k,) + tail, c * ck / 2))
        else:
            sign = -1 if parity(a) and parity(b) else 1
            stack.append((head + (b, a) + tail, sign * c))
            for k, ck in alg.bracket(a, b):
                stack.append((head + (k,) + tail, c * ck))
    return {w: c for w, c in out.items() if c}


def multiply(a: UEElement, b: UEElement) -> UEElement:
    """Product in the enveloping algebra, in even-first normal form."""
    a._check(b)
    alg = a.alg
    n0 = alg.n_even
    heads = []
    for m1, c1 in a.terms.items():
        w1 = m1.word(n0)
        for m2, c2 in b.terms.items():
            heads.append((w1 + m2.word(n0), c1 * c2))
    nf = _normal_form(alg, heads, _even_first_key)
    acc: dict[PBWMonomial, Fraction] = defaultdict(Fraction)
    for w, c in nf.items():
        acc[_word_to_monomial(alg, w)] += c
    return UEElement(alg, acc)


def counit(a: UEElement) -> Fraction:
    """Coefficient of the empty monomial."""
    return a.coefficient(PBWMonomial((0,) * a.alg.n_even, 0))


def _twist(u: UEElement, sign: int) -> UEElement:
    alg = u.alg
    if any(m.odd for m in u.terms):
        raise ValueError("twist automorphism is defined on the even subalgebra only")
    lam = {i: sign * ad_prime_trace(alg, i) for i in range(alg.n_even)}
    out = UEElement.zero(alg)
    for mono, c in u.terms.items():
        acc = UEElement.scalar(alg, c)
        for i, e in enumerate(mono.even):
            if not e:
                continue
            shifted = UEElement.generator(alg, i) + UEElement.scalar(alg, lam[i])
            for _ in range(e):
                acc = multiply(acc, shifted)
        out = out + acc
    return out


def alpha(u: UEElement) -> UEElement:
    """The automorphism of the even enveloping subalgebra sending each even
    generator X to X + tr(ad'(X)); extended multiplicatively."""
    return _twist(u, +1)


def alpha_inv(u: UEElement) -> UEElement:
    return _twist(u, -1)


def odd_first_form(a: UEElement) -> dict[int, UEElement]:
    """Right-coefficient decomposition u = sum_I x^I u_I.

    Keys are odd-subset bitmasks; values lie in the even enveloping
    subalgebra.  Reassembling (x^I times u_I, summed) returns ``a`` exactly.
    """
    alg = a.alg
    n0 = alg.n_even
    nf = _normal_form(alg, [(m.word(n0), c) for m, c in a.terms.items()],
                      _odd_first_key_for(n0))
    out: dict[int, dict[PBWMonomial, Fraction]] = defaultdict(dict)
    for w, c in nf.items():
        mono = _word_to_monomial(alg, w)
        even_mono = PBWMonomial(mono.even, 0)
        bucket = out[mono.odd]
        bucket[even_mono] = bucket.get(even_mono, Fraction(0)) + c
    form = {}
    for mask, terms in out.items():
        u = UEElement(alg, terms)
        if not u.is_zero:
            form[mask] = u
    return form


def reassemble_odd_first(alg: LieSuperalgebra, form: dict[int, UEElement]) -> UEElement:
    out = UEElement.zero(alg)
    for mask, u in form.items():
        xi = UEElement(alg, {PBWMonomial((0,) * alg.n_even, mask): Fraction(1)})
        out = out + multiply(xi, u)
    return out


def quotient_project(a: UEElement) -> dict[int, Fraction]:
    """Class of ``a`` in the quotient by the left ideal generated by the
    even part, expressed over the exterior basis x^I: I -> counit(u_I)."""
    out = {}
    for mask, u in odd_first_form(a).items():
        c = counit(u)
        if c:
            out[mask] = c
    return out


def in_J(a: UEElement) -> bool:
    """Membership in the left ideal generated by the even part."""
    return not quotient_project(a)


def class_lift(alg: LieSuperalgebra, cls: dict[int, Fraction]) -> UEElement:
    empty = (0,) * alg.n_even
    return UEElement(alg, {PBWMonomial(empty, mask): c for mask, c in cls.items()})


def act_on_quotient(alg: LieSuperalgebra, i: int, cls: dict[int, Fraction]) -> dict[int, Fraction]:
    """Left action of basis element ``i`` on a quotient class."""
    lifted = class_lift(alg, cls)
    return quotient_project(multiply(UEElement.generator(alg, i), lifted))


def map_element(u: UEElement, dst: LieSuperalgebra, full_map) -> UEElement:
    """Push ``u`` through the algebra isomorphism sending source basis
    element i to sum_a full_map[a][i] * (destination basis element a).
    The matrix must be parity-preserving and invertible."""
    src = u.alg
    if src.dim != dst.dim or src.n_even != dst.n_even:
        raise ValueError("basis map must preserve the parity split")
    images = []
    for i in range(src.dim):
        img = UEElement.zero(dst)
        for a in range(dst.dim):
            c = full_map[a][i]
            if c:
                if dst.parity(a) != src.parity(i):
                    raise ValueError("basis map is not parity-preserving")
                img = img + UEElement.generator(dst, a) * c
        images.append(img)
    out = UEElement.zero(dst)
    for mono, c in u.terms.items():
        acc = UEElement.scalar(dst, c)
        for g in mono.word(src.n_even):
            acc = multiply(acc, images[g])
        out = out + acc
    return out
