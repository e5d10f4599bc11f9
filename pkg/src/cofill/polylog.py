"""Fast incremental completion: each step costs O(d log^2 n).

Same incremental scheme as the cheapest-padding engine, but each step picks
an arbitrary valid insertion anchor instead of a cheapest one, so the work
per step depends only on the vertex's input degree d, never on the number
of edges added.  Overall running time O(n + m log^2 n).

The cotree is mirrored into two side structures kept in lockstep by a
mutation observer: a dynamic forest answering lca and
child-towards-descendant queries in O(log n), and a per-node order list
answering child-order queries in O(1).  One step:

1. sort the neighbour leaves by the leaf order of a depth-first traversal
   of the cotree (comparisons resolved with one lca, up to two
   child-towards-descendant queries and one order query);
2. build the tree extracted from the neighbour leaves and their pairwise
   lcas by merging each consecutive lca into the rightmost branch;
3. walk that tree to the topmost parallel nodes, collect the anchor
   candidates below them, and hop at most two levels up to the lowest
   unforced ancestor of each; keep the ancestor-minimal ones and take the
   first that admits an insertion;
4. splice the new leaf in, touching only the anchor's non-hollow children.

No per-step fill enumeration happens; fill edges and the output edge count
are recovered once at the end of the run.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .cotree import Cotree, CotreeObserver, LEAF, PARALLEL, SERIES
from .forest import DynamicForest
from .linear import Completion, ROOT_FORCED, StepMetrics, _check_order
from .ordermaint import OrderList

_NIL = -1


class _Mirror(CotreeObserver):
    """Replays cotree mutations into the forest and the order lists."""

    def __init__(self, state):
        self.state = state

    def node_created(self, node):
        self.state.forest.ensure_node(node)

    def node_freed(self, node):
        self.state.orders.pop(node, None)

    def child_detached(self, parent, child):
        st = self.state
        st.forest.cut(child)
        st.orders[parent].delete(st.elem.pop(child))

    def child_attached(self, parent, child, prev_sibling):
        st = self.state
        st.forest.link(parent, child)
        order = st.orders.get(parent)
        if order is None:
            order = st.orders[parent] = OrderList()
        anchor = None if prev_sibling == _NIL else st.elem[prev_sibling]
        st.elem[child] = order.insert_after(anchor, child)


class FastState:
    """Cotree plus its mirrored forest and child-order lists."""

    def __init__(self, backend=None):
        self.cotree = Cotree(track_leaf_counts=False)
        self.forest = DynamicForest(backend=backend)
        self.orders = {}
        self.elem = {}
        self.mirror = _Mirror(self)

    def check_mirror(self):
        """Raise when the side structures drifted from the cotree."""
        tree = self.cotree
        for nid in range(len(tree.kind)):
            if not tree.alive[nid]:
                continue
            p = tree.parent[nid]
            fp = self.forest.parent_of(nid)
            if (p if p != _NIL else None) != fp:
                raise AssertionError(f"forest parent of {nid}: {fp} != {p}")
            kids = list(tree.children(nid))
            if kids:
                order = self.orders[nid]
                listed = [item.value for item in order]
                if listed != kids:
                    raise AssertionError(
                        f"order list of {nid}: {listed} != {kids}")


class ExtractedTree:
    """Neighbour leaves plus their pairwise lcas, parent = closest ancestor."""

    __slots__ = ("root", "children")

    def __init__(self, root, children):
        self.root = root
        self.children = children

    def __contains__(self, nid):
        return nid in self.children

    def __len__(self):
        return len(self.children)


def sort_by_factorizing_permutation(state, vertices):
    """Vertices sorted by depth-first leaf order of the mirrored cotree.

    Two vertices compare by locating the children of their lca on the paths
    towards each and asking the lca's order list which comes first.
    """
    tree = state.cotree
    forest = state.forest
    leaves = sorted(tree._leaf_node(v) for v in vertices)

    def towards(u, leaf):
        if tree.parent[leaf] == u:
            return leaf
        return forest.next_step_to_descendant(u, leaf)

    def compare(a, b):
        u = forest.lca(a, b)
        ca = towards(u, a)
        cb = towards(u, b)
        if state.orders[u].precedes(state.elem[ca], state.elem[cb]):
            return -1
        return 1

    leaves.sort(key=functools.cmp_to_key(compare))
    return [tree.vertex[leaf] for leaf in leaves]


def build_extracted_tree(state, sorted_vertices):
    """Extracted tree over the given leaves, fed left to right.

    Each consecutive pair contributes its lca, which is merged into the
    rightmost branch; nodes passed over leave the branch for good, so the
    total number of lca queries stays proportional to the neighbour count.
    """
    tree = state.cotree
    forest = state.forest
    leaves = [tree._leaf_node(v) for v in sorted_vertices]
    first = leaves[0]
    children = {first: []}
    root = first
    branch = [first]
    prev = first
    for x in leaves[1:]:
        v = forest.lca(prev, x)
        last_popped = _NIL
        while True:
            top = branch[-1]
            if top == v:
                break
            if forest.lca(top, v) == v:
                # top lies strictly below v: it leaves the branch for good
                last_popped = branch.pop()
                if not branch:
                    break
            else:
                # v sits strictly below top, between top and last_popped
                break
        if branch and branch[-1] == v:
            children[v].append(x)
        else:
            children[v] = [last_popped, x]
            if branch:
                parent_kids = children[branch[-1]]
                parent_kids[-1] = v
            else:
                root = v
            branch.append(v)
        children[x] = []
        branch.append(x)
        prev = x
    return ExtractedTree(root, children)


def select_insertion_node(state, xtr):
    """Pick an insertion anchor and its non-hollow children from xtr.

    Walks the extracted tree down to its topmost parallel nodes; the pruned
    leaves (those parallel nodes plus neighbour leaves above them) are the
    anchor seeds.  Each seed's lowest unforced ancestor lies within two
    levels; ancestor-minimal ones are valid anchors.  Returns the first
    valid (anchor, non-hollow children) in seed order, or ROOT_FORCED when
    the search runs off the root, meaning the only completion makes the new
    vertex universal.
    """
    tree = state.cotree
    forest = state.forest
    children = xtr.children

    seeds = []
    stack = [xtr.root]
    while stack:
        u = stack.pop()
        if tree.kind[u] == SERIES:
            stack.extend(reversed(children[u]))
        else:
            seeds.append(u)

    def seed_forced(u):
        if tree.kind[u] == LEAF:
            return True
        return len(children[u]) == tree.child_count[u]

    seed_set = set(seeds)
    entries = []
    anchor_ids = set()
    for w in seeds:
        p = tree.parent[w]
        gp = tree.parent[p] if p != _NIL else _NIL
        direct_child = None
        if not seed_forced(w):
            anchor = w
            above = [a for a in (p, gp) if a != _NIL]
        elif p == _NIL:
            return ROOT_FORCED
        elif tree.kind[p] == PARALLEL:
            anchor = p
            direct_child = w
            above = [gp] if gp != _NIL else []
        else:
            forced_p = (
                p in children
                and len(children[p]) == tree.child_count[p]
                and all(tree.parent[z] == p and z in seed_set
                        and seed_forced(z) for z in children[p])
            )
            if not forced_p:
                anchor = p
                direct_child = None if p in children else w
                above = [gp] if gp != _NIL else []
            elif gp == _NIL:
                return ROOT_FORCED
            else:
                anchor = gp
                direct_child = p
                above = []
        entries.append((w, anchor, above, direct_child))
        anchor_ids.add(anchor)

    shadowed = set()
    for _, anchor, above, _ in entries:
        for a in above:
            if a in anchor_ids:
                shadowed.add(a)

    for w, anchor, _, direct_child in entries:
        if anchor in shadowed:
            continue
        if anchor in children:
            nh = [z if tree.parent[z] == anchor
                  else forest.next_step_to_descendant(anchor, z)
                  for z in children[anchor]]
        else:
            nh = [direct_child]
        if tree.kind[anchor] == SERIES and tree.child_count[anchor] <= len(nh):
            # no hollow child left: a deeper seed owns a valid anchor
            continue
        return anchor, nh
    raise AssertionError("no valid insertion anchor found")


@dataclass
class FastStep:
    """Outcome of one fast-engine insertion; no fill enumeration."""

    insertion_node: int | None
    nonhollow_children: list
    d: int
    build_lca_queries: int


def complete_step_fast(state, vertex, neighbours):
    """Insert `vertex` with intended `neighbours` at an arbitrary anchor."""
    tree = state.cotree
    neighbours = frozenset(neighbours)
    existing = tree.n_leaves()
    if not neighbours or existing == 0:
        tree.attach_uniform(vertex, full=False, observer=state.mirror)
        return FastStep(None, [], len(neighbours), 0)
    if len(neighbours) == existing:
        tree.attach_uniform(vertex, full=True, observer=state.mirror)
        return FastStep(None, [], len(neighbours), 0)
    ordered = sort_by_factorizing_permutation(state, sorted(neighbours))
    before = state.forest.lca_calls
    xtr = build_extracted_tree(state, ordered)
    build_lcas = state.forest.lca_calls - before
    picked = select_insertion_node(state, xtr)
    if picked is ROOT_FORCED:
        tree.attach_uniform(vertex, full=True, observer=state.mirror)
        return FastStep(None, [], len(neighbours), build_lcas)
    anchor, nh = picked
    tree.insert_leaf(anchor, nh, vertex, observer=state.mirror)
    return FastStep(anchor, nh, len(neighbours), build_lcas)


def complete_graph_fast(graph, order=None, backend=None, collect_fill=True):
    """Inclusion-minimal cograph completion in O(n + m log^2 n).

    Returns a Completion; per_step_costs is None and fill_edges is None
    unless collect_fill, in which case the fill set is recovered by
    diffing the final cotree's edges against the input.
    """
    order = _check_order(graph, order)
    state = FastState(backend=backend)
    metrics = []
    inserted = set()
    for v in order:
        nbrs = graph.adjacency[v] & inserted
        step = complete_step_fast(state, v, nbrs)
        metrics.append(StepMetrics(d=step.d,
                                   lca_queries=step.build_lca_queries))
        inserted.add(v)
    tree = state.cotree
    m_prime = tree.edge_count()
    fill_edges = None
    if collect_fill:
        fill_edges = sorted(set(tree.edges()) - graph.edge_set())
        if len(fill_edges) != m_prime - graph.m:
            raise AssertionError("output lost input edges")
    return Completion(tree, fill_edges, None, m_prime,
                      m_prime - graph.m, metrics)
