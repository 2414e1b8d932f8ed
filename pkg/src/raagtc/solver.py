"""Exact computation of z_r(G), the sequential topological complexity of a RAAG.

z_r(G) is the largest total size of r cliques C_1..C_r of G whose common
intersection is empty.  Equivalently it is the maximum of
``sum |C_i| - |C_1 & ... & C_r|`` over all r-tuples of cliques, and that
maximum is attained on maximal cliques: growing a clique by one vertex adds
one to the sum and at most one to the intersection.  The exact search below
therefore ranges over multisets of maximal cliques only and rebuilds a
witness by deleting the common vertices from the last clique.

TC_r of the right-angled Artin group defined by G equals z_r(G).
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cliques import all_cliques, enumerate_maximal_cliques, max_clique_size
from .graph import Graph, members, popcount

EXACT = "exact-search"
ORACLE = "oracle"
RECURRENCE = "recurrence"

ORACLE_MAX_N = 6
ORACLE_MAX_R = 5


class SolverError(ValueError):
    pass


class OracleSizeError(SolverError):
    pass


@dataclass(frozen=True)
class ZrResult:
    r: int
    value: int
    witness: tuple[int, ...]
    method: str

    def validate(self, g: Graph) -> None:
        """Raise AssertionError unless the witness certifies ``value``."""
        assert len(self.witness) == self.r, "witness length differs from r"
        common = g.vertex_mask
        for c in self.witness:
            assert g.is_clique(c), f"witness member {members(c)} is not a clique"
            common &= c
        assert self.r == 0 or common == 0, "witness cliques share a vertex"
        assert sum(popcount(c) for c in self.witness) == self.value, "witness sizes do not sum to value"

    def to_json(self, g: Graph) -> dict:
        return {
            "r": self.r,
            "value": self.value,
            "method": self.method,
            "witness": [[g.labels[v] for v in members(c)] for c in self.witness],
        }


def _check_r(r) -> None:
    if isinstance(r, bool) or not isinstance(r, int):
        raise SolverError(f"r must be an integer, got {r!r}")
    if r < 2:
        raise SolverError(f"r must be at least 2, got {r}")


def anchor(g: Graph) -> int:
    """Smallest r from which z_{r+1} = z_r + c(G) is guaranteed."""
    return max(g.n, 2)


def _completion_table(cliques: list[int], sizes: list[int], start: int, r: int) -> list[dict[int, int]]:
    # table[t][I]: best value of (sizes of t more cliques) - |final intersection|
    # starting from intersection I.  States are the intersections reachable
    # from ``start``.
    states = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            for c in cliques:
                i = s & c
                if i not in states:
                    states.add(i)
                    nxt.append(i)
        frontier = nxt
    table = [{s: -popcount(s) for s in states}]
    for _ in range(r):
        prev = table[-1]
        table.append({s: max(size + prev[s & c] for c, size in zip(cliques, sizes)) for s in states})
    return table


def z_r_exact(g: Graph, r: int) -> ZrResult:
    """Exact z_r(G) with the lexicographically least optimal multiset.

    Multisets of maximal cliques are searched as non-decreasing index
    sequences, pruned by the partial sum plus the best completion from the
    running intersection (a memoised table over reachable intersections).
    """
    _check_r(r)
    if g.n == 0:
        return ZrResult(r, 0, (0,) * r, EXACT)
    cliques = enumerate_maximal_cliques(g)
    sizes = [popcount(c) for c in cliques]
    c_max = max(sizes)
    table = _completion_table(cliques, sizes, g.vertex_mask, r)
    target = table[r][g.vertex_mask]
    assert (r - 1) * c_max <= target <= r * c_max

    # A child survives only if partial + its completion value reaches the
    # target; this dominates the cruder r*c root bound and partial + (r-k)*c.
    # The bound is exact, so the first surviving child in index order always
    # reaches a leaf: no backtracking, and the leaf is the lexicographically
    # least optimal multiset.
    chosen: list[int] = []
    inter, partial, start = g.vertex_mask, 0, 0
    for t in range(r, 0, -1):
        for j in range(start, len(cliques)):
            if partial + sizes[j] + table[t - 1][inter & cliques[j]] >= target:
                break
        else:
            raise AssertionError("completion table inconsistent with search")
        chosen.append(j)
        inter &= cliques[j]
        partial += sizes[j]
        start = j
    assert partial - popcount(inter) == target
    multiset = [cliques[j] for j in chosen]
    common = g.vertex_mask
    for c in multiset:
        common &= c
    multiset[-1] &= ~common
    return ZrResult(r, target, tuple(multiset), EXACT)


def _oracle_branch(args) -> tuple[int, tuple[int, ...]] | None:
    cliques, r, first = args
    best = None
    for rest in itertools.combinations_with_replacement(range(first, len(cliques)), r - 1):
        combo = (first,) + rest
        common = -1
        total = 0
        for j in combo:
            common &= cliques[j]
            total += popcount(cliques[j])
        if common == 0 and (best is None or total > best[0]):
            best = (total, tuple(cliques[j] for j in combo))
    return best


def _oracle_search(g: Graph, r: int, force: bool, threads: int) -> tuple[int, tuple[int, ...]]:
    _check_r(r)
    if not force and (g.n > ORACLE_MAX_N or r > ORACLE_MAX_R):
        raise OracleSizeError(
            f"oracle is limited to n <= {ORACLE_MAX_N} and r <= {ORACLE_MAX_R} "
            f"(got n={g.n}, r={r}); pass force=True to override"
        )
    cliques = all_cliques(g)
    jobs = [(cliques, r, first) for first in range(len(cliques))]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_oracle_branch, jobs))
    else:
        results = [_oracle_branch(job) for job in jobs]
    best = None
    for res in results:
        if res is not None and (best is None or res[0] > best[0]):
            best = res
    assert best is not None  # the all-empty tuple is always admissible
    return best


def z_r_oracle(g: Graph, r: int, *, force: bool = False, threads: int = 1) -> int:
    """Brute-force z_r(G) over every r-multiset of cliques, the empty clique included.

    Independent of the maximal-clique reduction used by :func:`z_r_exact`.
    Refuses instances beyond n=6 or r=5 unless ``force`` is set.
    """
    return _oracle_search(g, r, force, threads)[0]


def oracle_result(g: Graph, r: int, *, force: bool = False, threads: int = 1) -> ZrResult:
    value, witness = _oracle_search(g, r, force, threads)
    return ZrResult(r, value, witness, ORACLE)


def _extend(base: ZrResult, g: Graph, r: int) -> ZrResult:
    # appending maximum cliques keeps the intersection empty and adds c each
    biggest = max(enumerate_maximal_cliques(g), key=popcount)
    extra = r - base.r
    return ZrResult(r, base.value + extra * popcount(biggest), base.witness + (biggest,) * extra, RECURRENCE)


def z_recurrence(g: Graph, r: int) -> ZrResult:
    """z_r from the exact anchor value via z_r = z_m + (r - m) c(G), m = max(n, 2)."""
    _check_r(r)
    m = anchor(g)
    if r < m:
        raise SolverError(f"the recurrence only holds for r >= {m} on this graph (got r={r})")
    base = z_r_exact(g, m)
    return base if r == m else _extend(base, g, r)


def z_sequence(g: Graph, r_max: int, *, force_exact: bool = False) -> list[ZrResult]:
    """z_2..z_{r_max}: exact up to max(n, 2), recurrence beyond unless ``force_exact``."""
    _check_r(r_max)
    m = anchor(g)
    out = []
    base = None
    for r in range(2, r_max + 1):
        if r <= m or force_exact:
            res = z_r_exact(g, r)
            if r == m:
                base = res
        else:
            res = _extend(base, g, r)
        out.append(res)
    return out


def solve(g: Graph, r: int, method: str = "auto", *, force_exact: bool = False, threads: int = 1) -> ZrResult:
    """Dispatch on ``method``: auto, exact, oracle or recurrence."""
    _check_r(r)
    if method == "auto":
        if force_exact or r <= anchor(g):
            return z_r_exact(g, r)
        return z_recurrence(g, r)
    if method == "exact":
        return z_r_exact(g, r)
    if method == "oracle":
        return oracle_result(g, r, force=force_exact, threads=threads)
    if method == "recurrence":
        return z_recurrence(g, r)
    raise SolverError(f"unknown method {method!r}")


def tc_raag(g: Graph, r: int) -> int:
    """TC_r of the right-angled Artin group with defining graph ``g``."""
    return z_r_exact(g, r).value


def cd_raag(g: Graph) -> int:
    """Cohomological dimension of the RAAG, which is the clique number."""
    return max_clique_size(g)
