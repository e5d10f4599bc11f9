"""Dynamic rooted forest with O(log n) structural queries.

Wraps a splay kernel — the compiled one when the extension built, else the
pure-Python twin — and adds contract checks, query counters, and the
child-towards-descendant query, which is resolved by re-rooting at the
descendant, reading the parent, and restoring the original root.

Handles are dense integer ids allocated by add_node.  Queries rebalance
internal state, so a forest must not be shared between threads.
"""

from __future__ import annotations

import os

from .errors import ContractViolation
from ._splay_py import SplayKernel as PySplayKernel

try:
    from ._splay_cy import SplayKernel as CySplayKernel
except ImportError:
    CySplayKernel = None

_BACKENDS = {"pure": PySplayKernel}
if CySplayKernel is not None:
    _BACKENDS["compiled"] = CySplayKernel


def available_backends():
    return sorted(_BACKENDS)


def default_backend():
    forced = os.environ.get("COFILL_FOREST_BACKEND")
    if forced:
        if forced not in _BACKENDS:
            raise ContractViolation(
                f"COFILL_FOREST_BACKEND={forced!r} not available "
                f"(have {available_backends()})"
            )
        return forced
    return "compiled" if "compiled" in _BACKENDS else "pure"


class DynamicForest:
    """Forest of rooted trees over integer handles."""

    def __init__(self, backend=None):
        self.backend = backend or default_backend()
        try:
            self._k = _BACKENDS[self.backend]()
        except KeyError:
            raise ContractViolation(
                f"unknown forest backend {self.backend!r}") from None
        self.lca_calls = 0
        self.next_step_calls = 0

    def __len__(self):
        return len(self._k)

    def add_node(self):
        return self._k.add_node()

    def ensure_node(self, nid):
        """Grow the arena so nid is a valid (isolated) handle."""
        while len(self._k) <= nid:
            self._k.add_node()

    def _check(self, nid):
        if not 0 <= nid < len(self._k):
            raise ContractViolation(f"unknown forest handle {nid}")

    def find_root(self, nid):
        self._check(nid)
        return self._k.find_root(nid)

    def parent_of(self, nid):
        self._check(nid)
        p = self._k.parent_rep(nid)
        return None if p == -1 else p

    def link(self, parent, child):
        self._check(parent)
        self._check(child)
        if self._k.find_root(child) != child:
            raise ContractViolation(f"link: node {child} is not a tree root")
        if self._k.find_root(parent) == child:
            raise ContractViolation("link: would create a cycle")
        self._k.link(parent, child)

    def cut(self, nid):
        self._check(nid)
        if not self._k.cut(nid):
            raise ContractViolation(f"cut: node {nid} is a tree root")

    def evert(self, nid):
        self._check(nid)
        self._k.evert(nid)

    def lca(self, u, v):
        self._check(u)
        self._check(v)
        self.lca_calls += 1
        if u == v:
            return u
        if self._k.find_root(u) != self._k.find_root(v):
            raise ContractViolation("lca: nodes are in different trees")
        return self._k.lca(u, v)

    def next_step_to_descendant(self, u, v):
        """The child of u on the path towards its strict descendant v.

        Implemented as evert(v), parent-of(u), evert(back); the original
        root is restored before returning.
        """
        self._check(u)
        self._check(v)
        self.next_step_calls += 1
        if u == v:
            raise ContractViolation("next_step: nodes are equal")
        r = self._k.find_root(u)
        if self._k.find_root(v) != r:
            raise ContractViolation("next_step: nodes are in different trees")
        if self._k.lca(u, v) != u:
            raise ContractViolation(f"next_step: {v} is not a descendant of {u}")
        self._k.evert(v)
        child = self._k.parent_rep(u)
        self._k.evert(r)
        return child

    def reset_counters(self):
        self.lca_calls = 0
        self.next_step_calls = 0
