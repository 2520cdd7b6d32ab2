"""Independent naive oracles used by the test suite.

Everything here deliberately avoids the optimized code paths it is used to
check: dense rational boundary matrices instead of the fraction-free route,
full powerset loops instead of the pruned scan, bounding-box searches
instead of polytope walks.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from toric_cohomology._bits import bits, mask_of
from toric_cohomology.simplicial import FaceSet


def fraction_rank(rows) -> int:
    """Rank by plain Gaussian elimination over Fraction."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def naive_homology(fs: FaceSet) -> dict[int, int]:
    """Reduced homology of a subset-closed complex via dense rational matrices."""
    assert fs.is_subset_closed()
    if not fs.faces:
        return {}
    by_deg: dict[int, list[int]] = {}
    for f in fs.faces:
        by_deg.setdefault(bin(f).count("1") - 1, []).append(f)
    for fl in by_deg.values():
        fl.sort()
    ranks: dict[int, int] = {}
    for j, flist in by_deg.items():
        targets = by_deg.get(j - 1)
        if not targets:
            continue
        index = {f: k for k, f in enumerate(targets)}
        rows = []
        for f in flist:
            row = [0] * len(targets)
            for s, i in enumerate(bits(f)):
                row[index[f ^ (1 << i)]] = 1 if s % 2 == 0 else -1
            rows.append(row)
        ranks[j] = fraction_rank(rows)
    out = {}
    for j, flist in by_deg.items():
        h = len(flist) - ranks.get(j, 0) - ranks.get(j + 1, 0)
        if h:
            out[j] = h
    return out


def all_complexes(n: int):
    """All subset-closed face collections on n vertices (downsets), incl. void."""
    order = sorted(range(1 << n), key=lambda m: (bin(m).count("1"), m))
    parents = {m: [m ^ (1 << i) for i in bits(m)] for m in order}
    out = []

    def rec(i, included):
        if i == len(order):
            out.append(frozenset(included))
            return
        s = order[i]
        rec(i + 1, included)
        if all(p in included for p in parents[s]):
            included.add(s)
            rec(i + 1, included)
            included.discard(s)

    rec(0, set())
    return [FaceSet(n, faces) for faces in out]


def random_complex(n: int, rng, max_gens: int = 4) -> FaceSet:
    gens = [rng.randrange(1, 1 << n) for _ in range(rng.randint(1, max_gens))]
    return FaceSet.closure(n, gens)


def naive_degree_map(generators, n):
    """Full 2^t powerset enumeration of union degrees."""
    t = len(generators)
    gens = sorted(generators)
    entries: dict[int, dict[int, list[int]]] = {}
    for tau in range(1 << t):
        deg = 0
        for i in bits(tau):
            deg |= gens[i]
        entries.setdefault(deg, {}).setdefault(bin(tau).count("1"), []).append(tau)
    for groups in entries.values():
        for taus in groups.values():
            taus.sort()
    return entries


def charge_image(model, u):
    return tuple(
        sum(model.charges[i][j] * u[i] for i in range(model.n))
        for j in range(model.num_classes)
    )


def neg_mask(u) -> int:
    return mask_of(i for i, x in enumerate(u) if x < 0)


def brute_force_neg_group(model, alpha, sigma, bound):
    """All u in the [-bound, bound]^n box with class alpha and Neg(u) = sigma."""
    sols = []
    for u in itertools.product(range(-bound, bound + 1), repeat=model.n):
        if neg_mask(u) == sigma and charge_image(model, u) == tuple(alpha):
            sols.append(u)
    return sorted(sols)


def series_count(weights, target, order=80):
    """Coefficient of z^target in prod 1/(1 - z^w), all weights positive."""
    if target < 0:
        return 0
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for w in weights:
        assert w > 0
        for k in range(w, order + 1):
            coeffs[k] += coeffs[k - w]
    assert target <= order
    return coeffs[target]
