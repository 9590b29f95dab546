"""Structure specifiers accepted on the command line.

``m2z2``, ``m2z3``, ``m<k>z<p>``  all k x k matrices over Z_p as a Cayley-table *-ring
``zmod:<n>``                       Z_n with the identity involution
``table:<file>``                   a validated monoid/ring table JSON file
``matrix:<n>:<field>``             M_n(F), F = ``qi`` or ``z<p>`` (not enumerated
                                   over Q(i); verification must then be seeded)
"""

from __future__ import annotations

import re

from .context import MatrixStarRing
from .errors import InputError
from .finite import DEFAULT_BUDGET, build_matrix_structure, load_table, zmod_ring
from .matrix import Involution
from .scalars import QI, is_prime, zmod

_MKZP = re.compile(r"m(\d+)z(\d+)")


def parse_field(text: str):
    t = text.strip().lower()
    if t in ("qi", "q(i)", "gaussian", "gaussian_rational"):
        return QI
    m = re.fullmatch(r"z_?(\d+)", t)
    if m:
        p = int(m.group(1))
        if not is_prime(p):
            raise InputError(f"matrix contexts need a prime modulus, got {p}")
        return zmod(p)
    raise InputError(f"unknown field {text!r}; use qi or z<p>")


def parse_structure(spec: str, involution: Involution = Involution.TRANSPOSE,
                    budget: int = DEFAULT_BUDGET):
    s = spec.strip()
    low = s.lower()
    m = _MKZP.fullmatch(low)
    if m:
        return build_matrix_structure(int(m.group(1)), int(m.group(2)), involution, budget)
    if low.startswith("zmod:"):
        try:
            n = int(low[5:])
        except ValueError:
            raise InputError(f"bad modulus in {spec!r}") from None
        return zmod_ring(n, budget)
    if low.startswith("table:"):
        return load_table(s[6:])
    if low.startswith("matrix:"):
        parts = s.split(":")
        if len(parts) != 3:
            raise InputError(f"expected matrix:<n>:<field>, got {spec!r}")
        try:
            n = int(parts[1])
        except ValueError:
            raise InputError(f"bad dimension in {spec!r}") from None
        return MatrixStarRing(n, parse_field(parts[2]), involution, budget)
    raise InputError(f"unknown structure {spec!r}; use m2z2, m2z3, m<k>z<p>, zmod:<n>, "
                     "table:<file> or matrix:<n>:<field>")
