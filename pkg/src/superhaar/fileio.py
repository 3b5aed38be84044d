"""JSON formats for algebras, modules, and expressions.

Rationals travel as strings "p" or "p/q" in lowest terms with positive
denominator; floats are never accepted or produced.  Serialization is
canonical (fixed key order, brackets sorted by index pair), so
parse -> serialize is byte-identical on canonically written files.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from importlib import resources

from .algebra import InputError, LieSuperalgebra
from .enveloping import UEElement
from .modules import GradedModule

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise InputError(f"not an exact rational: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise InputError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


# -- algebra files -----------------------------------------------------------

def algebra_from_json(obj) -> LieSuperalgebra:
    try:
        name = obj["name"]
        even = list(obj["even_basis"])
        odd = list(obj["odd_basis"])
        records = obj.get("brackets", [])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed algebra file: {exc}") from exc
    if not isinstance(name, str) or not all(isinstance(s, str) for s in even + odd):
        raise InputError("basis names must be strings")
    lookup = {n: i for i, n in enumerate(even + odd)}
    if len(lookup) != len(even) + len(odd):
        raise InputError("duplicate basis names")
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for rec in records:
        try:
            left, right = rec["left"], rec["right"]
            result = rec["result"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed bracket record: {exc}") from exc
        for n in (left, right):
            if n not in lookup:
                raise InputError(f"unknown basis name {n!r}")
        key = (lookup[left], lookup[right])
        if key in brackets:
            raise InputError(f"duplicate bracket record for ({left}, {right})")
        vec = {}
        for item in result:
            basis = item.get("basis")
            if basis not in lookup:
                raise InputError(f"unknown basis name {basis!r}")
            vec[lookup[basis]] = vec.get(lookup[basis], Fraction(0)) + \
                parse_rational(item.get("coeff"))
        brackets[key] = vec
    return LieSuperalgebra(name, even, odd, brackets)


def algebra_to_json(alg: LieSuperalgebra) -> dict:
    records = []
    for (i, j), vec in alg.nonzero_brackets():
        records.append({
            "left": alg.basis_name(i),
            "right": alg.basis_name(j),
            "result": [{"basis": alg.basis_name(k), "coeff": format_rational(c)}
                       for k, c in vec],
        })
    return {
        "name": alg.name,
        "even_basis": list(alg.even_names),
        "odd_basis": list(alg.odd_names),
        "brackets": records,
    }


# -- module files ------------------------------------------------------------

def module_from_json(obj, alg: LieSuperalgebra) -> GradedModule:
    try:
        algebra_name = obj["algebra"]
        dim = obj["dim"]
        parities = obj["parities"]
        action = obj.get("action", {})
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed module file: {exc}") from exc
    if algebra_name != alg.name:
        raise InputError(f"module is for algebra {algebra_name!r}, "
                         f"loaded algebra is {alg.name!r}")
    if not isinstance(dim, int) or dim < 0:
        raise InputError("dim must be a non-negative integer")
    if len(parities) != dim:
        raise InputError("parities length does not match dim")
    pmap = {"even": 0, "odd": 1}
    try:
        pvec = [pmap[p] for p in parities]
    except KeyError as exc:
        raise InputError(f"parity must be 'even' or 'odd', got {exc}") from exc
    rho = {}
    for name, rows in action.items():
        idx = alg.index_of(name)
        rho[idx] = [[parse_rational(c) for c in row] for row in rows]
    return GradedModule(alg, pvec, rho, name=obj.get("name", ""))


def module_to_json(module: GradedModule) -> dict:
    alg = module.alg
    action = {}
    for i in range(alg.dim):
        mat = module.rho(i)
        if any(any(row) for row in mat):
            action[alg.basis_name(i)] = [[format_rational(c) for c in row]
                                         for row in mat]
    return {
        "algebra": alg.name,
        "dim": module.dim,
        "parities": ["odd" if p else "even" for p in module.parities],
        "action": action,
    }


# -- expressions and matrices ------------------------------------------------

def element_to_json(u: UEElement) -> list[dict]:
    """Expression form: list of {monomial: [generator names], coeff}."""
    alg = u.alg
    out = []
    for mono, c in u.sorted_terms():
        names = [alg.basis_name(g) for g in mono.word(alg.n_even)]
        out.append({"monomial": names, "coeff": format_rational(c)})
    return out


def quotient_class_to_json(alg: LieSuperalgebra, cls: dict[int, Fraction]) -> list[dict]:
    out = []
    for mask in sorted(cls, key=lambda m: (m.bit_count(), m)):
        names = [alg.odd_names[t] for t in range(alg.n_odd) if mask >> t & 1]
        out.append({"monomial": names, "coeff": format_rational(cls[mask])})
    return out


def matrix_to_json(mat) -> list[list[str]]:
    return [[format_rational(c) for c in row] for row in mat]


# -- files -------------------------------------------------------------------

def dumps_canonical(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def load_algebra(path: str) -> LieSuperalgebra:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON in {path}: {exc}") from exc
    return algebra_from_json(obj)


def load_module(path: str, alg: LieSuperalgebra) -> GradedModule:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON in {path}: {exc}") from exc
    return module_from_json(obj, alg)


def builtin_fixture(name: str) -> str:
    """Filesystem path of a fixture shipped with the package."""
    return str(resources.files("superhaar").joinpath("fixtures", name))
