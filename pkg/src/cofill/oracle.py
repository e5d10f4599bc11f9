"""Brute-force ground truth used to verify the completion engines.

Everything here is deliberately naive: recognition scans all 4-subsets for
an induced path, cotree construction recurses on components/co-components,
and the completion checks enumerate subsets outright.  None of it shares
code with the engines it validates.
"""

from __future__ import annotations

from itertools import combinations

from . import cotree as ct
from .errors import FillGuardExceeded
from .graphs import Graph

MINIMALITY_GUARD = 16


def _adjacency_masks(graph):
    masks = [0] * graph.n
    for u in range(graph.n):
        for v in graph.adjacency[u]:
            masks[u] |= 1 << v
    return masks


def _masks_are_cograph(masks, n):
    for a, b, c, d in combinations(range(n), 4):
        ab = (masks[a] >> b) & 1
        ac = (masks[a] >> c) & 1
        ad = (masks[a] >> d) & 1
        bc = (masks[b] >> c) & 1
        bd = (masks[b] >> d) & 1
        cd = (masks[c] >> d) & 1
        if ab + ac + ad + bc + bd + cd != 3:
            continue
        da = ab + ac + ad
        db = ab + bc + bd
        dc = ac + bc + cd
        dd = ad + bd + cd
        hi = max(da, db, dc, dd)
        lo = min(da, db, dc, dd)
        if hi == 2 and lo == 1:
            return False
    return True


def is_cograph_naive(graph):
    """True iff no 4-subset induces a path on 4 vertices."""
    return _masks_are_cograph(_adjacency_masks(graph), graph.n)


def build_cotree_naive(graph):
    """Recursive cotree construction; returns None for non-cographs.

    Splits on connected components (parallel) or co-components (series);
    a connected, co-connected graph on more than one vertex is not a
    cograph.
    """
    n = graph.n
    if n == 0:
        return ct.Cotree()
    masks = _adjacency_masks(graph)
    full = (1 << n) - 1

    def components(vs, flip):
        comps = []
        rest = vs
        while rest:
            seed = rest & -rest
            comp = 0
            frontier = seed
            while frontier:
                comp |= frontier
                nxt = 0
                f = frontier
                while f:
                    bit = f & -f
                    v = bit.bit_length() - 1
                    adj = masks[v] if not flip else (~masks[v] & full & ~bit)
                    nxt |= adj & vs & ~comp
                    f ^= bit
                frontier = nxt
            comps.append(comp)
            rest &= ~comp
        return comps

    def build(vs):
        if vs & (vs - 1) == 0:
            return vs.bit_length() - 1
        comps = components(vs, flip=False)
        if len(comps) > 1:
            kids = [build(c) for c in comps]
            if any(k is None for k in kids):
                return None
            return (ct.PARALLEL, kids)
        cocomps = components(vs, flip=True)
        if len(cocomps) > 1:
            kids = [build(c) for c in cocomps]
            if any(k is None for k in kids):
                return None
            return (ct.SERIES, kids)
        return None

    nested = build(full)
    if nested is None:
        return None
    return ct.from_nested(nested)


def _host_masks(host):
    """Masks for host (Graph or Cotree) plus the id list in mask order."""
    if isinstance(host, Graph):
        return _adjacency_masks(host), list(range(host.n))
    vertices = sorted(host.leaf_of_vertex)
    index = {v: i for i, v in enumerate(vertices)}
    masks = [0] * len(vertices)
    for u, v in host.edges():
        masks[index[u]] |= 1 << index[v]
        masks[index[v]] |= 1 << index[u]
    return masks, vertices


def min_step_completion_bruteforce(host, neighbours):
    """All inclusion-minimal neighbourhood paddings for a one-vertex insert.

    host is a cograph (Graph or Cotree); neighbours is the intended
    neighbourhood of the new vertex.  Enumerates every padding set
    M disjoint from the neighbourhood, keeps the ones whose insertion
    leaves the graph a cograph, and returns (minimum cardinality,
    inclusion-minimal sets).
    """
    masks, vertices = _host_masks(host)
    n = len(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    base = 0
    for v in neighbours:
        base |= 1 << index[v]
    rest = [i for i in range(n) if not (base >> i) & 1]
    valid = []
    for r in range(len(rest) + 1):
        for combo in combinations(rest, r):
            add = 0
            for i in combo:
                add |= 1 << i
            if _insertion_ok(masks, n, base | add):
                valid.append(frozenset(combo))
    minimal = []
    for m in valid:
        if not any(other < m for other in valid):
            minimal.append(frozenset(vertices[i] for i in m))
    min_cost = min(len(m) for m in minimal)
    return min_cost, minimal


def min_step_cost_bruteforce(host, neighbours):
    """Minimum padding cardinality only; stops at the first feasible size."""
    masks, vertices = _host_masks(host)
    n = len(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    base = 0
    for v in neighbours:
        base |= 1 << index[v]
    rest = [i for i in range(n) if not (base >> i) & 1]
    for r in range(len(rest) + 1):
        for combo in combinations(rest, r):
            add = 0
            for i in combo:
                add |= 1 << i
            if _insertion_ok(masks, n, base | add):
                return r
    raise AssertionError("filling everything always succeeds")


def _insertion_ok(masks, n, nbr_mask):
    """Cograph test for host + one vertex with neighbourhood nbr_mask."""
    ext = list(masks) + [nbr_mask]
    for v in range(n):
        if (nbr_mask >> v) & 1:
            ext[v] |= 1 << n
    return _masks_are_cograph(ext, n + 1)


def is_minimal_completion(graph, fill_edges, guard=MINIMALITY_GUARD):
    """True iff fill_edges turns graph into a cograph and no proper subset does.

    Raises FillGuardExceeded when 2**len(fill_edges) subsets is too many;
    callers treat that as a skip, not a verdict.
    """
    fill = list(fill_edges)
    if len(fill) > guard:
        raise FillGuardExceeded(
            f"fill set of size {len(fill)} exceeds guard {guard}"
        )
    n = graph.n
    base = _adjacency_masks(graph)
    for u, v in fill:
        if graph.has_edge(u, v):
            return False
        if u == v or not (0 <= u < n and 0 <= v < n):
            return False
    full_mask = (1 << len(fill)) - 1

    def masks_with(subset):
        masks = list(base)
        for i, (u, v) in enumerate(fill):
            if (subset >> i) & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        return masks

    if not _masks_are_cograph(masks_with(full_mask), n):
        return False
    for subset in range(full_mask):
        if _masks_are_cograph(masks_with(subset), n):
            return False
    return True
