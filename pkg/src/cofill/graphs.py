"""Simple undirected graphs: edge-list I/O and random generators.

Vertices are dense integer ids 0..n-1. External labels found in edge-list
input are remapped at parse time.
"""

from __future__ import annotations

import random

from .errors import GraphFormatError, InvalidParametersError, RetryBudgetError

CONFIG_MODEL_MAX_TRIES = 100


class Graph:
    """Immutable simple undirected graph held as per-vertex neighbour sets.

    Do not mutate after construction; instances may be shared between
    threads for read-only use.
    """

    __slots__ = ("n", "adjacency", "m")

    def __init__(self, n, edges):
        adjacency = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex out of range in edge ({u}, {v})")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if v in adjacency[u]:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            adjacency[u].add(v)
            adjacency[v].add(u)
            m += 1
        self.n = n
        self.adjacency = tuple(frozenset(s) for s in adjacency)
        self.m = m

    def has_edge(self, u, v):
        return v in self.adjacency[u]

    def degree(self, u):
        return len(self.adjacency[u])

    def edges(self):
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in sorted(self.adjacency[u]):
                if u < v:
                    yield (u, v)

    def edge_set(self):
        return frozenset(self.edges())

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(text):
    """Parse edge-list text into a Graph.

    Each non-comment line holds two whitespace-separated vertex tokens.
    Lines starting with '#' are ignored, except for an optional
    ``# n <count>`` header (written by serialize_edge_list) which fixes the
    vertex count so isolated vertices survive a round trip.  When no header
    is present, labels are densely renumbered: numerically for all-integer
    labels, lexicographically otherwise.
    """

    if isinstance(text, bytes):
        text = text.decode("utf-8")
    declared_n = None
    raw_edges = []
    labels = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            fields = stripped[1:].split()
            if len(fields) == 2 and fields[0] == "n" and fields[1].isdigit():
                declared_n = int(fields[1])
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise GraphFormatError(
                f"expected two vertex tokens, got {len(tokens)}", line=lineno
            )
        a, b = tokens
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a!r}", line=lineno)
        labels.add(a)
        labels.add(b)
        raw_edges.append((a, b, lineno))

    if declared_n is not None:
        n = declared_n
        mapping = {}
        for label in labels:
            if not label.isdigit() or int(label) >= n:
                raise GraphFormatError(
                    f"vertex {label!r} incompatible with header n={n}"
                )
            mapping[label] = int(label)
    else:
        if all(label.lstrip("-").isdigit() for label in labels):
            ordered = sorted(labels, key=int)
        else:
            ordered = sorted(labels)
        mapping = {label: i for i, label in enumerate(ordered)}
        n = len(ordered)

    seen = set()
    edges = []
    for a, b, lineno in raw_edges:
        u, v = mapping[a], mapping[b]
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphFormatError(f"duplicate edge {a} {b}", line=lineno)
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def serialize_edge_list(graph):
    """Inverse of parse_edge_list; emits a ``# n`` header plus sorted edges."""

    lines = [f"# n {graph.n}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def generate_random_regular(n, d, seed=0):
    """Random simple d-regular graph on n vertices via the configuration model.

    Pairings with self-loops or multi-edges are rejected wholesale and
    resampled, up to CONFIG_MODEL_MAX_TRIES attempts.  Deterministic for a
    fixed seed.
    """

    if n < 0 or d < 0 or (n * d) % 2 != 0:
        raise InvalidParametersError(f"n*d must be even, got n={n} d={d}")
    if d >= n and not (n == 0 and d == 0):
        raise InvalidParametersError(f"need d < n, got n={n} d={d}")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(CONFIG_MODEL_MAX_TRIES):
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            key = (u, v) if u < v else (v, u)
            if key in edges:
                ok = False
                break
            edges.add(key)
        if ok:
            return Graph(n, sorted(edges))
    raise RetryBudgetError(
        f"no simple {d}-regular pairing found in {CONFIG_MODEL_MAX_TRIES} tries"
    )


def generate_gnm(n, m, seed=0):
    """Uniform random simple graph with n vertices and m edges."""

    max_edges = n * (n - 1) // 2
    if m < 0 or m > max_edges:
        raise InvalidParametersError(f"m={m} out of range for n={n}")
    rng = random.Random(seed)
    chosen = rng.sample(range(max_edges), m)
    edges = []
    for code in chosen:
        # decode a rank into the (u, v) pair with u < v
        v = int((1 + (1 + 8 * code) ** 0.5) / 2)
        while v * (v - 1) // 2 > code:
            v -= 1
        while (v + 1) * v // 2 <= code:
            v += 1
        u = code - v * (v - 1) // 2
        edges.append((u, v))
    return Graph(n, sorted(edges))
