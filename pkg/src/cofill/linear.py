"""Incremental cograph completion choosing a cheapest neighbourhood padding.

Vertices are inserted one at a time.  For each new vertex x the engine
scans, in time proportional to x's completed degree, every insertion node
that yields an inclusion-minimal constrained completion of the current
cotree plus x, and picks one adding the fewest edges.  Folding this over
all vertices gives an inclusion-minimal cograph completion of the input
whose total running time is linear in the size of the output.

Terminology relative to the new vertex x: a cotree node is full when all
its leaves are neighbours of x, hollow when none is, mixed otherwise, and
non-hollow when full or mixed.  A node is fill-forced when every completion
of the subtree must make x adjacent to all its leaves: a full leaf, a
parallel node with no hollow child, or a series node whose children are all
fill-forced.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .cotree import Cotree, LEAF, PARALLEL, SERIES
from .errors import ContractViolation

_NIL = -1


class RootForced:
    """Signal: the unique minimal completion makes x universal."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ROOT_FORCED"


ROOT_FORCED = RootForced()


class Mark:
    """Per-step bookkeeping for one non-hollow node."""

    __slots__ = ("nonhollow_children", "neighbours_in_subtree", "forced",
                 "pending", "forced_children")

    def __init__(self):
        self.nonhollow_children = []
        self.neighbours_in_subtree = 0
        self.forced = False
        self.pending = 0
        self.forced_children = 0

    @property
    def nonhollow_count(self):
        return len(self.nonhollow_children)


def gather_marks(tree, neighbours):
    """Mark table over the non-hollow nodes for neighbourhood `neighbours`.

    Two bottom-up passes from the neighbour leaves.  The first discovers
    the non-hollow nodes and their non-hollow children lists; the second
    propagates neighbour counts and fill-forced flags, each node firing
    once all of its non-hollow children have reported.
    """
    marks = {}
    leaf_nodes = []
    for v in sorted(neighbours):
        leaf = tree._leaf_node(v)
        leaf_nodes.append(leaf)
        marks[leaf] = Mark()
        cur = leaf
        while (p := tree.parent[cur]) != _NIL:
            existing = marks.get(p)
            if existing is not None:
                existing.nonhollow_children.append(cur)
                break
            mark = Mark()
            mark.nonhollow_children.append(cur)
            marks[p] = mark
            cur = p

    for nid, mark in marks.items():
        mark.pending = len(mark.nonhollow_children)

    queue = deque()
    for leaf in leaf_nodes:
        mark = marks[leaf]
        mark.neighbours_in_subtree = 1
        mark.forced = True
        queue.append(leaf)
    while queue:
        u = queue.popleft()
        p = tree.parent[u]
        if p == _NIL:
            continue
        mu, mp = marks[u], marks[p]
        mp.neighbours_in_subtree += mu.neighbours_in_subtree
        if mu.forced:
            mp.forced_children += 1
        mp.pending -= 1
        if mp.pending == 0:
            cc = tree.child_count[p]
            nh = len(mp.nonhollow_children)
            if tree.kind[p] == PARALLEL:
                mp.forced = nh == cc
            else:
                mp.forced = nh == cc and mp.forced_children == cc
            queue.append(p)
    return marks


@dataclass
class SearchResult:
    node: int
    cost: int
    visited: int
    candidates_scanned: int


def find_min_insertion_node(tree, marks):
    """Cheapest node at which x can be inserted after padding.

    Explores the connected region of non-hollow, non-forced nodes reachable
    from the root without crossing a parallel node that has two or more
    non-hollow children (any node past such a parallel node cannot host x
    without violating its hollow siblings).  A visited node is a valid
    insertion anchor when it is series with a hollow child, or parallel
    with no single unforced non-hollow child.

    Along the walk, cost_above(u) counts the padding forced outside the
    subtree of u; a series parent adds its own deficiency minus the
    child's, a parallel parent passes its value through.  The anchor cost
    adds the deficiencies of its non-hollow children.  Ties break to the
    first candidate in depth-first order.

    Returns SearchResult, or ROOT_FORCED when the only completion makes x
    universal.
    """
    root = tree.root
    if marks[root].forced:
        return ROOT_FORCED
    leaf_count = tree.leaf_count
    best_node = _NIL
    best_cost = -1
    visited = 0
    scanned = 0
    stack = [(root, 0)]
    while stack:
        u, cost_above = stack.pop()
        visited += 1
        mu = marks[u]
        kind = tree.kind[u]
        nh = mu.nonhollow_children
        cc = tree.child_count[u]
        if kind == SERIES:
            candidate = cc > len(nh)
        else:
            candidate = len(nh) >= 2 or marks[nh[0]].forced
        if candidate:
            scanned += 1
            cost = cost_above
            for c in nh:
                cost += leaf_count[c] - marks[c].neighbours_in_subtree
            if best_node == _NIL or cost < best_cost:
                best_node, best_cost = u, cost
        if kind == SERIES or len(nh) == 1:
            deficiency_u = leaf_count[u] - mu.neighbours_in_subtree
            for c in reversed(nh):
                mc = marks[c]
                if mc.forced:
                    continue
                if kind == SERIES:
                    child_above = cost_above + deficiency_u - (
                        leaf_count[c] - mc.neighbours_in_subtree)
                else:
                    child_above = cost_above
                stack.append((c, child_above))
    assert best_node != _NIL, "unforced root must yield an anchor"
    return SearchResult(best_node, best_cost, visited, scanned)


@dataclass
class StepResult:
    """Outcome of inserting one vertex.

    insertion_node is None when the step was uniform (x attached above the
    root) or when the whole tree was fill-forced.
    """

    insertion_node: int | None
    fill_vertices: frozenset
    completed_neighbourhood: frozenset
    cost: int
    candidates_scanned: int
    nodes_touched: int


def complete_step(tree, vertex, neighbours):
    """Insert `vertex` with intended `neighbours`, padding minimally.

    Returns a StepResult whose fill_vertices are the non-neighbours made
    adjacent to the vertex; the tree is updated in place.
    """
    neighbours = frozenset(neighbours)
    existing = tree.n_leaves()
    if len(neighbours) == 0 or existing == 0:
        tree.attach_uniform(vertex, full=False)
        return StepResult(None, frozenset(), neighbours, 0, 0, 0)
    if len(neighbours) == existing:
        tree.attach_uniform(vertex, full=True)
        return StepResult(None, frozenset(), neighbours, 0, 0, 0)

    marks = gather_marks(tree, neighbours)
    found = find_min_insertion_node(tree, marks)
    if found is ROOT_FORCED:
        fill = frozenset(tree.leaf_of_vertex) - neighbours
        tree.attach_uniform(vertex, full=True)
        return StepResult(None, fill, neighbours | fill,
                          len(fill), 0, len(marks))

    u = found.node
    fill = []
    for c in marks[u].nonhollow_children:
        for leaf in tree.leaves_under(c):
            if leaf not in neighbours:
                fill.append(leaf)
    cur = u
    while (p := tree.parent[cur]) != _NIL:
        if tree.kind[p] == SERIES:
            sib = tree.first_child[p]
            while sib != _NIL:
                if sib != cur:
                    for leaf in tree.leaves_under(sib):
                        if leaf not in neighbours:
                            fill.append(leaf)
                sib = tree.next_sib[sib]
        cur = p
    if len(fill) != found.cost:
        raise AssertionError(
            f"anchor cost {found.cost} != enumerated fill {len(fill)}")
    tree.insert_leaf(u, marks[u].nonhollow_children, vertex)
    fill = frozenset(fill)
    return StepResult(u, fill, neighbours | fill, found.cost,
                      found.candidates_scanned, len(marks) + found.visited)


@dataclass
class StepMetrics:
    """Per-step instrumentation; engines fill the fields they track."""

    d: int
    d_prime: int | None = None
    nodes_touched: int = 0
    lca_queries: int = 0


@dataclass
class Completion:
    """Final result of completing a whole graph.

    fill_edges is None when the run skipped fill recovery; fill_count and
    m_prime are always populated.  per_step_costs is None for the fast
    engine, which does not enumerate per-step fills.
    """

    cotree: Cotree
    fill_edges: list | None
    per_step_costs: list | None
    m_prime: int
    fill_count: int
    step_metrics: list = field(default_factory=list)


def _check_order(graph, order):
    if order is None:
        return list(range(graph.n))
    order = list(order)
    if sorted(order) != list(range(graph.n)):
        raise ContractViolation("order must be a permutation of 0..n-1")
    return order


def complete_graph(graph, order=None):
    """Inclusion-minimal cograph completion, cheapest padding per step.

    Vertices are inserted in `order` (default: input order); each step sees
    the intersection of the vertex's neighbourhood with the vertices already
    inserted.  Deterministic for a fixed (graph, order).
    """
    order = _check_order(graph, order)
    tree = Cotree()
    inserted = set()
    fill_edges = []
    per_step = []
    metrics = []
    for v in order:
        nbrs = graph.adjacency[v] & inserted
        step = complete_step(tree, v, nbrs)
        for y in sorted(step.fill_vertices):
            fill_edges.append((v, y) if v < y else (y, v))
        per_step.append(step.cost)
        metrics.append(StepMetrics(d=len(nbrs),
                                   d_prime=len(step.completed_neighbourhood),
                                   nodes_touched=step.nodes_touched))
        inserted.add(v)
    fill_edges.sort()
    return Completion(tree, fill_edges, per_step, graph.m + len(fill_edges),
                      len(fill_edges), metrics)
