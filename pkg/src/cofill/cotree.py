"""Arena-backed cotrees with ordered children and splice-based leaf insertion.

A cotree is the canonical tree of a cograph: leaves are the graph vertices,
internal nodes are labelled series or parallel, no internal node has fewer
than two children and no parent/child pair shares a label.  Two vertices are
adjacent exactly when their lowest common ancestor is a series node.

Nodes live in an arena and are addressed by stable integer ids, so that
side structures (mark tables, the dynamic forest, per-node order lists) can
reference them without ownership games.  Ids of removed nodes are never
reused within the lifetime of a tree.

Children are kept in doubly-linked sibling lists, giving O(1) detach and
attach during insertion surgery.  Child order carries no graph meaning but
is fixed and observable: it defines the leaf order used by the fast engine.
"""

from __future__ import annotations

from .errors import ContractViolation, CotreeParseError, UnknownVertexError

LEAF = 0
SERIES = 1
PARALLEL = 2

_KIND_CHAR = {SERIES: "S", PARALLEL: "P"}
_NIL = -1


class CotreeObserver:
    """Callbacks fired by structural mutations, in application order.

    The fast engine uses these to mirror every change into the dynamic
    forest and the per-node child order lists.  Guarantees: a node id is
    announced by node_created before it appears in any other event; a child
    is always detached before being attached elsewhere; freed nodes are
    detached and childless.
    """

    def node_created(self, node):
        pass

    def node_freed(self, node):
        pass

    def child_detached(self, parent, child):
        pass

    def child_attached(self, parent, child, prev_sibling):
        """prev_sibling is the new left neighbour id, or -1 for list front."""


class Cotree:
    """Cotree arena.

    When track_leaf_counts is false (fast-engine mode) the per-node
    leaf_count fields are not maintained during insertions; any consumer
    needing sizes must recompute them (see edge_count / leaf_counts).
    """

    def __init__(self, track_leaf_counts=True):
        self.kind = []
        self.parent = []
        self.first_child = []
        self.last_child = []
        self.prev_sib = []
        self.next_sib = []
        self.child_count = []
        self.leaf_count = []
        self.vertex = []
        self.alive = []
        self.root = _NIL
        self.leaf_of_vertex = {}
        self.track_leaf_counts = track_leaf_counts

    # -- arena primitives ---------------------------------------------------

    def _new_node(self, kind, vertex=_NIL, observer=None):
        nid = len(self.kind)
        self.kind.append(kind)
        self.parent.append(_NIL)
        self.first_child.append(_NIL)
        self.last_child.append(_NIL)
        self.prev_sib.append(_NIL)
        self.next_sib.append(_NIL)
        self.child_count.append(0)
        self.leaf_count.append(1 if kind == LEAF else 0)
        self.vertex.append(vertex)
        self.alive.append(True)
        if observer is not None:
            observer.node_created(nid)
        return nid

    def _free_node(self, nid, observer=None):
        if self.child_count[nid] != 0 or self.parent[nid] != _NIL:
            raise ContractViolation(f"freeing attached node {nid}")
        self.alive[nid] = False
        if observer is not None:
            observer.node_freed(nid)

    def _detach(self, child, observer=None):
        p = self.parent[child]
        if p == _NIL:
            raise ContractViolation(f"detaching parentless node {child}")
        prv, nxt = self.prev_sib[child], self.next_sib[child]
        if prv != _NIL:
            self.next_sib[prv] = nxt
        else:
            self.first_child[p] = nxt
        if nxt != _NIL:
            self.prev_sib[nxt] = prv
        else:
            self.last_child[p] = prv
        self.parent[child] = _NIL
        self.prev_sib[child] = _NIL
        self.next_sib[child] = _NIL
        self.child_count[p] -= 1
        if observer is not None:
            observer.child_detached(p, child)

    def _attach(self, parent, child, after=None, observer=None):
        """Attach child under parent, after sibling `after` (None = append)."""
        if self.parent[child] != _NIL:
            raise ContractViolation(f"attaching already-attached node {child}")
        if after is None:
            after = self.last_child[parent]
        if after == _NIL:
            nxt = self.first_child[parent]
            self.first_child[parent] = child
        else:
            nxt = self.next_sib[after]
            self.next_sib[after] = child
        self.prev_sib[child] = after
        self.next_sib[child] = nxt
        if nxt != _NIL:
            self.prev_sib[nxt] = child
        else:
            self.last_child[parent] = child
        self.parent[child] = parent
        self.child_count[parent] += 1
        if observer is not None:
            observer.child_attached(parent, child, after)

    # -- queries ------------------------------------------------------------

    def children(self, nid):
        c = self.first_child[nid]
        while c != _NIL:
            yield c
            c = self.next_sib[c]

    def is_leaf(self, nid):
        return self.kind[nid] == LEAF

    def n_leaves(self):
        return len(self.leaf_of_vertex)

    def _leaf_node(self, vertex):
        try:
            return self.leaf_of_vertex[vertex]
        except KeyError:
            raise UnknownVertexError(f"vertex {vertex} not in cotree") from None

    def adjacent(self, x, y):
        """Reference adjacency oracle: parent-walk lca, series test."""
        if x == y:
            raise ContractViolation("adjacency of a vertex with itself")
        a, b = self._leaf_node(x), self._leaf_node(y)
        seen = set()
        while a != _NIL:
            seen.add(a)
            a = self.parent[a]
        while b not in seen:
            b = self.parent[b]
        return self.kind[b] == SERIES

    def leaves_under(self, nid):
        """Vertex ids below nid, in stored child order."""
        out = []
        stack = [nid]
        while stack:
            u = stack.pop()
            if self.kind[u] == LEAF:
                out.append(self.vertex[u])
            else:
                stack.extend(reversed(list(self.children(u))))
        return out

    def leaf_counts(self):
        """Freshly computed leaves-below count for every live node."""
        counts = {}
        if self.root == _NIL:
            return counts
        stack = [(self.root, False)]
        while stack:
            u, done = stack.pop()
            if self.kind[u] == LEAF:
                counts[u] = 1
            elif done:
                counts[u] = sum(counts[c] for c in self.children(u))
            else:
                stack.append((u, True))
                stack.extend((c, False) for c in self.children(u))
        return counts

    def edge_count(self):
        """Edge count of the represented cograph.

        Sums, over series nodes, the pairwise products of child leaf
        counts.  Uses fresh counts so it is valid in fast-engine mode.
        """
        counts = self.leaf_counts()
        total = 0
        for u, cnt in counts.items():
            if self.kind[u] == SERIES:
                sq = sum(counts[c] ** 2 for c in self.children(u))
                total += (cnt * cnt - sq) // 2
        return total

    def edges(self):
        """All edges of the represented cograph as (u, v), u < v, sorted."""
        if self.root == _NIL:
            return []
        leaf_lists = {}
        out = []
        stack = [(self.root, False)]
        while stack:
            u, done = stack.pop()
            if self.kind[u] == LEAF:
                leaf_lists[u] = [self.vertex[u]]
            elif done:
                parts = [leaf_lists.pop(c) for c in self.children(u)]
                if self.kind[u] == SERIES:
                    for i in range(len(parts)):
                        for j in range(i + 1, len(parts)):
                            for a in parts[i]:
                                for b in parts[j]:
                                    out.append((a, b) if a < b else (b, a))
                merged = []
                for part in parts:
                    merged.extend(part)
                leaf_lists[u] = merged
            else:
                stack.append((u, True))
                stack.extend((c, False) for c in self.children(u))
        return sorted(out)

    def canonical_form(self, nid=None):
        """Order- and id-independent shape, for equality up to child order."""
        if self.root == _NIL:
            return None
        if nid is None:
            nid = self.root
        if self.kind[nid] == LEAF:
            return ("v", self.vertex[nid])
        label = _KIND_CHAR[self.kind[nid]]
        return (label, tuple(sorted(self.canonical_form(c)
                                    for c in self.children(nid))))

    # -- validation ----------------------------------------------------------

    def validate(self):
        """Return None if all invariants hold, else a violation message."""
        if self.root == _NIL:
            if self.leaf_of_vertex:
                return "empty tree with registered leaves"
            return None
        if self.parent[self.root] != _NIL:
            return f"node {self.root}: root has a parent"
        seen_leaves = {}
        stack = [self.root]
        visited = 0
        while stack:
            u = stack.pop()
            visited += 1
            if not self.alive[u]:
                return f"node {u}: freed node reachable"
            kids = list(self.children(u))
            if len(kids) != self.child_count[u]:
                return f"node {u}: child_count mismatch"
            if self.kind[u] == LEAF:
                if kids:
                    return f"node {u}: leaf with children"
                v = self.vertex[u]
                if v in seen_leaves:
                    return f"node {u}: duplicate leaf for vertex {v}"
                seen_leaves[v] = u
            else:
                if len(kids) < 2:
                    return f"node {u}: unary internal node"
                for c in kids:
                    if self.parent[c] != u:
                        return f"node {c}: bad parent pointer"
                    if self.kind[c] == self.kind[u]:
                        return f"node {u}: same-label adjacency"
                stack.extend(kids)
        if seen_leaves != self.leaf_of_vertex:
            return "leaf registry out of sync"
        if self.track_leaf_counts:
            for u, cnt in self.leaf_counts().items():
                if self.leaf_count[u] != cnt:
                    return f"node {u}: stale leaf_count"
        return None

    # -- serialization --------------------------------------------------------

    def serialize(self):
        """Parenthesized text form: S(...)/P(...), leaves as vertex ids."""
        if self.root == _NIL:
            return ""
        parts = []
        stack = [iter((self.root,))]
        depth_open = 0
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                if stack:
                    parts.append(")")
                    depth_open -= 1
                continue
            if parts and not parts[-1].endswith("("):
                parts.append(",")
            if self.kind[nxt] == LEAF:
                parts.append(str(self.vertex[nxt]))
            else:
                parts.append(_KIND_CHAR[self.kind[nxt]] + "(")
                depth_open += 1
                stack.append(iter(list(self.children(nxt))))
        return "".join(parts)

    # -- mutation: uniform attach ---------------------------------------------

    def attach_uniform(self, vertex, full, observer=None):
        """Insert a leaf adjacent to every existing vertex (full) or none.

        Bootstraps the empty tree. Returns the new leaf id.
        """
        if vertex in self.leaf_of_vertex:
            raise ContractViolation(f"vertex {vertex} already present")
        leaf = self._new_node(LEAF, vertex, observer)
        self.leaf_of_vertex[vertex] = leaf
        if self.root == _NIL:
            self.root = leaf
            return leaf
        wanted = SERIES if full else PARALLEL
        if self.kind[self.root] == wanted:
            self._attach(self.root, leaf, observer=observer)
            if self.track_leaf_counts:
                self.leaf_count[self.root] += 1
            return leaf
        old_root = self.root
        new_root = self._new_node(wanted, observer=observer)
        self._attach(new_root, old_root, observer=observer)
        self._attach(new_root, leaf, observer=observer)
        self.root = new_root
        if self.track_leaf_counts:
            self.leaf_count[new_root] = self.leaf_count[old_root] + 1
        return leaf

    # -- mutation: general insertion surgery -----------------------------------

    def insert_leaf(self, w, nonhollow_children, vertex, observer=None):
        """Insert a leaf below insertion node w.

        nonhollow_children must be a nonempty proper subset of w's children;
        the new vertex becomes adjacent, inside the subtree of w, exactly to
        the leaves under those children.  Adjacency outside the subtree of w
        follows from w's position (series ancestors stay adjacent).  Only
        the listed children and O(1) spine nodes are relinked; the remaining
        (hollow-side) children of w are never touched.

        Returns the new leaf id.
        """
        if vertex in self.leaf_of_vertex:
            raise ContractViolation(f"vertex {vertex} already present")
        if self.kind[w] == LEAF:
            raise ContractViolation(f"insertion node {w} is a leaf")
        nh = list(nonhollow_children)
        if len(set(nh)) != len(nh):
            raise ContractViolation("repeated child in nonhollow_children")
        for c in nh:
            if self.parent[c] != w:
                raise ContractViolation(f"node {c} is not a child of {w}")
        if not 0 < len(nh) < self.child_count[w]:
            raise ContractViolation(
                "nonhollow_children must be a nonempty proper subset"
            )
        track = self.track_leaf_counts
        sum_nh = sum(self.leaf_count[c] for c in nh) if track else 0

        if self.kind[w] == SERIES:
            top = self._insert_series(w, nh, vertex, sum_nh, observer)
        else:
            top = self._insert_parallel(w, nh, vertex, sum_nh, observer)

        if track:
            p = self.parent[top]
            while p != _NIL:
                self.leaf_count[p] += 1
                p = self.parent[p]
        return self.leaf_of_vertex[vertex]

    def _insert_series(self, w, nh, vertex, sum_nh, observer):
        # w's replacement keeps the series label; w itself retains the
        # hollow children so they need no relinking.
        track = self.track_leaf_counts
        old_count = self.leaf_count[w]
        for c in nh:
            self._detach(c, observer)
        q = self.parent[w]
        repl = self._new_node(SERIES, observer=observer)
        if q != _NIL:
            self._attach(q, repl, after=w, observer=observer)
            self._detach(w, observer)
        else:
            self.root = repl
        for c in nh:
            self._attach(repl, c, observer=observer)

        if self.child_count[w] == 1:
            # singleton hollow part collapses to its unique node
            c0 = self.first_child[w]
            self._detach(c0, observer)
            self._free_node(w, observer)
            if self.kind[c0] == PARALLEL:
                spine = c0  # absorb: parallel under parallel would merge
            else:
                spine = self._new_node(PARALLEL, observer=observer)
                self._attach(spine, c0, observer=observer)
        else:
            spine = self._new_node(PARALLEL, observer=observer)
            self._attach(spine, w, observer=observer)
        leaf = self._new_node(LEAF, vertex, observer)
        self.leaf_of_vertex[vertex] = leaf
        self._attach(spine, leaf, observer=observer)
        self._attach(repl, spine, observer=observer)
        if track:
            hollow = old_count - sum_nh
            if self.alive[w]:
                self.leaf_count[w] = hollow
            self.leaf_count[spine] = hollow + 1
            self.leaf_count[repl] = old_count + 1
        return repl

    def _insert_parallel(self, w, nh, vertex, sum_nh, observer):
        track = self.track_leaf_counts
        if len(nh) == 1 and self.kind[nh[0]] == SERIES:
            # new leaf joins the existing series child directly
            spine = nh[0]
            leaf = self._new_node(LEAF, vertex, observer)
            self.leaf_of_vertex[vertex] = leaf
            self._attach(spine, leaf, observer=observer)
            if track:
                self.leaf_count[spine] += 1
                self.leaf_count[w] += 1
            return w
        for c in nh:
            self._detach(c, observer)
        if len(nh) == 1:
            part = nh[0]
        else:
            part = self._new_node(PARALLEL, observer=observer)
            for c in nh:
                self._attach(part, c, observer=observer)
        spine = self._new_node(SERIES, observer=observer)
        self._attach(spine, part, observer=observer)
        leaf = self._new_node(LEAF, vertex, observer)
        self.leaf_of_vertex[vertex] = leaf
        self._attach(spine, leaf, observer=observer)
        self._attach(w, spine, observer=observer)
        if track:
            if len(nh) > 1:
                self.leaf_count[part] = sum_nh
            self.leaf_count[spine] = sum_nh + 1
            self.leaf_count[w] += 1
        return w


def from_nested(spec, track_leaf_counts=True):
    """Build a Cotree from nested tuples: int leaf or (kind, [children]).

    Kinds accepted as SERIES/PARALLEL constants or "S"/"P" strings.
    The result is validated.
    """
    tree = Cotree(track_leaf_counts=track_leaf_counts)

    def build(node):
        if isinstance(node, int):
            nid = tree._new_node(LEAF, node)
            if node in tree.leaf_of_vertex:
                raise CotreeParseError(f"duplicate leaf {node}")
            tree.leaf_of_vertex[node] = nid
            return nid
        kind, kids = node
        if kind in ("S", "s"):
            kind = SERIES
        elif kind in ("P", "p"):
            kind = PARALLEL
        if kind not in (SERIES, PARALLEL):
            raise CotreeParseError(f"bad node kind {kind!r}")
        nid = tree._new_node(kind)
        total = 0
        for kid in kids:
            cid = build(kid)
            tree._attach(nid, cid)
            total += tree.leaf_count[cid]
        tree.leaf_count[nid] = total
        return nid

    tree.root = build(spec)
    problem = tree.validate()
    if problem is not None:
        raise CotreeParseError(problem)
    return tree


def deserialize(text, track_leaf_counts=True):
    """Parse the textual form produced by Cotree.serialize."""
    text = text.strip()
    if not text:
        return Cotree(track_leaf_counts=track_leaf_counts)
    pos = 0

    def parse_node():
        nonlocal pos
        if pos >= len(text):
            raise CotreeParseError("unexpected end of input")
        ch = text[pos]
        if ch in "SP":
            kind = ch
            pos += 1
            if pos >= len(text) or text[pos] != "(":
                raise CotreeParseError(f"expected '(' at position {pos}")
            pos += 1
            kids = [parse_node()]
            while pos < len(text) and text[pos] == ",":
                pos += 1
                kids.append(parse_node())
            if pos >= len(text) or text[pos] != ")":
                raise CotreeParseError(f"expected ')' at position {pos}")
            pos += 1
            return (kind, kids)
        start = pos
        while pos < len(text) and (text[pos].isdigit() or text[pos] == "-"):
            pos += 1
        if start == pos:
            raise CotreeParseError(f"unexpected character {ch!r} at {start}")
        return int(text[start:pos])

    spec = parse_node()
    if pos != len(text):
        raise CotreeParseError(f"trailing input at position {pos}")
    return from_nested(spec, track_leaf_counts=track_leaf_counts)
