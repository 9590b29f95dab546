"""Independent-oracle cross checks.

* Divisibility: the Cayley-table scan of ``M_2(Z_p)`` against exact linear solves.
* Moore-Penrose: ``bc_inverse(a, a*, a*)`` against the rank-factorization formula.
"""

from __future__ import annotations

import hashlib
import random

from ..context import MatrixStarRing
from ..engines import bc_inverse
from ..finite import build_matrix_structure, divisibility_scan
from ..matrix import Involution, Matrix, mp_rank_factorization, solve_left, solve_right
from ..scalars import QI, zmod
from .generate import random_matrix


def _as_matrix(idx, k, field):
    """Decode a table index (row-major base-p digits) back into its matrix."""
    flat = []
    rest = idx
    for _ in range(k * k):
        rest, digit = divmod(rest, field.modulus)
        flat.append(field(digit))
    flat.reverse()
    return Matrix(tuple(tuple(flat[i * k:(i + 1) * k]) for i in range(k)), field)


def divisibility_agreement(p: int, k: int = 2) -> dict:
    """Compare scan and solve for every ordered pair ``(u, v)`` on both sides."""
    structure = build_matrix_structure(k, p)
    field = zmod(p)
    mats = [_as_matrix(i, k, field) for i in range(structure.size)]
    mismatches = []
    solvable = {"left": 0, "right": 0}
    for u in range(structure.size):
        for v in range(structure.size):
            for side, solve in (("left", solve_left), ("right", solve_right)):
                scan = divisibility_scan(structure, u, v, side)
                x = solve(mats[u], mats[v])
                if x is not None:
                    solvable[side] += 1
                    prod = x * mats[u] if side == "left" else mats[u] * x
                    if prod != mats[v]:
                        mismatches.append({"u": u, "v": v, "side": side,
                                           "reason": "solver witness is wrong"})
                        continue
                if (scan is None) != (x is None):
                    mismatches.append({"u": structure.format(u), "v": structure.format(v),
                                       "side": side, "scan": scan is not None,
                                       "solve": x is not None})
    return {"structure": structure.describe(), "pairs": structure.size ** 2,
            "solvable": solvable, "mismatches": mismatches,
            "verdict": "agree" if not mismatches else "disagree"}


def mp_agreement(count: int = 200, seed: int = 0, max_n: int = 6) -> dict:
    """Seeded Q(i) matrices with the conjugate transpose, ``n`` in ``1..max_n``."""
    rng = random.Random(f"mp-oracle:{seed}")
    digest = hashlib.sha256()
    mismatches = []
    by_dim = {}
    for i in range(count):
        n = rng.randint(1, max_n)
        ctx = MatrixStarRing(n, QI, Involution.CONJUGATE_TRANSPOSE)
        a = random_matrix(rng, ctx)
        s = ctx.star(a)
        got = bc_inverse(ctx, a, s, s)
        want = mp_rank_factorization(a)
        by_dim[n] = by_dim.get(n, 0) + 1
        digest.update(f"{a}|{want}\n".encode())
        if got is None or got != want:
            mismatches.append({"index": i, "a": str(a), "bc": str(got), "oracle": str(want)})
    return {"count": count, "seed": seed, "max_n": max_n,
            "dimensions": {str(n): by_dim[n] for n in sorted(by_dim)},
            "sha256": digest.hexdigest(), "mismatches": mismatches,
            "verdict": "agree" if not mismatches else "disagree"}


def run_oracles(seed: int = 0, count: int = 200) -> dict:
    checks = [divisibility_agreement(2), divisibility_agreement(3), mp_agreement(count, seed)]
    ok = all(c["verdict"] == "agree" for c in checks)
    return {"divisibility": checks[:2], "moore_penrose": checks[2],
            "verdict": "agree" if ok else "disagree"}
