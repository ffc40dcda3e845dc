"""The tree/unicyclic families T_n, U_n for orders n >= 19.

Vertex ``x_i`` of the tree (and ``y_i`` of the unicyclic graph) is stored as
index ``i - 1``.  For odd ``n = 2k + 5`` both graphs are built on the path
``1..2k`` plus pendant attachments; for even ``n = 2k + 6`` each odd graph of
order ``n - 1`` gains the extra edge ``(2k+5, 2k+6)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from statuspairs.graph import Graph, status_sequence, statuses

MIN_ORDER = 19


class ConstructionError(ValueError):
    pass


class ConstructionInvariantError(AssertionError):
    """Raised when a built pair fails its own status-sequence check."""


def order_params(n: int) -> tuple[int, str]:
    """Return ``(k, parity)`` for order ``n``."""
    if n < MIN_ORDER:
        raise ConstructionError(f"uniform construction undefined below order {MIN_ORDER} (got n={n})")
    if n % 2:
        return (n - 5) // 2, "odd"
    return (n - 6) // 2, "even"


def _from_labels(n: int, edges: list[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, [(a - 1, b - 1) for a, b in edges])


def tree_edges(n: int) -> list[tuple[int, int]]:
    """Edges of T_n with 1-based labels."""
    k, parity = order_params(n)
    edges = [(i, i + 1) for i in range(1, 2 * k)]
    edges += [(3, 2 * k + 1), (k + 1, 2 * k + 5), (k + 3, 2 * k + 4),
              (2 * k - 3, 2 * k + 3), (2 * k - 2, 2 * k + 2)]
    if parity == "even":
        edges.append((2 * k + 5, 2 * k + 6))
    return edges


def unicyclic_edges(n: int) -> list[tuple[int, int]]:
    """Edges of U_n with 1-based labels."""
    k, parity = order_params(n)
    edges = [(i, i + 1) for i in range(1, 2 * k)]
    edges += [(5, 2 * k + 3), (k - 1, 2 * k + 4), (k + 1, 2 * k + 5),
              (2 * k - 2, 2 * k + 2), (2 * k - 1, 2 * k + 1), (2 * k + 1, 2 * k + 2)]
    if parity == "even":
        edges.append((2 * k + 5, 2 * k + 6))
    return edges


def build_tree(n: int) -> Graph:
    return _from_labels(n, tree_edges(n))


def build_unicyclic(n: int) -> Graph:
    return _from_labels(n, unicyclic_edges(n))


def correspondence(n: int) -> dict[int, int]:
    """Label map ``i -> j`` with ``s(x_i) = s(y_j)``.

    The middle stretch ``4..2k-2`` of the path is reversed; every other label
    is fixed.
    """
    k, _ = order_params(n)
    return {i: (2 * k + 2 - i if 4 <= i <= 2 * k - 2 else i) for i in range(1, n + 1)}


def closed_form_status(n: int, i: int) -> int:
    """Status of ``x_i`` in T_n from the case formulas (no graph search)."""
    k, parity = order_params(n)
    if not 1 <= i <= n:
        raise ConstructionError(f"label {i} out of range 1..{n}")
    if parity == "odd":
        a = k * k + 3 * k - 2
        if i <= k:
            p = k - i
            if p <= k - 3:
                return a + (p + 2) ** 2 - 1
            if p == k - 2:
                return a + k * k + 1
            return a + (k + 1) ** 2 + 3
        if i == k + 1:
            return a
        if i <= 2 * k:
            q = i - k
            if q == 2:
                return a + 1
            if q <= k - 3:
                return a + q * q - 5
            return a + (q + 2) ** 2 - 4 * k + 1
        r = i - 2 * k
        if r <= 3:
            return a + (k + 1 - r) ** 2 + 3
        return a + (2 * k + 7 if r == 4 else 2 * k + 3)

    d = k * k + 3 * k
    if i <= k:
        p = k - i
        if p <= k - 3:
            return d + p * p + 5 * p + 4
        if p == k - 2:
            return d + k * k + k
        return d + k * k + 3 * k + 4
    if i == k + 1:
        return d
    if i <= 2 * k:
        q = i - k
        if q == 2:
            return d + 2
        if q <= k - 3:
            return d + q * q + q - 6
        return d + q * q + 5 * q - 4 * k + 4
    r = i - 2 * k
    return d + {1: k * k + k + 2, 2: k * k - k + 2, 3: k * k - 3 * k + 4,
                4: 2 * k + 10, 5: 2 * k + 2, 6: 4 * k + 6}[r]


@dataclass(frozen=True)
class ClosedFormTable:
    n: int
    k: int
    parity: str
    base: int
    entries: tuple[int, ...]

    def status_of(self, label: int) -> int:
        return self.entries[label - 1]


def closed_form_table(n: int) -> ClosedFormTable:
    k, parity = order_params(n)
    return ClosedFormTable(
        n=n,
        k=k,
        parity=parity,
        base=closed_form_status(n, k + 1),
        entries=tuple(closed_form_status(n, i) for i in range(1, n + 1)),
    )


@dataclass(frozen=True)
class ConstructionPair:
    n: int
    parity: str
    k: int
    tree: Graph
    unicyclic: Graph


def build_pair(n: int) -> ConstructionPair:
    """Build (T_n, U_n) and check that their status sequences agree."""
    k, parity = order_params(n)
    tree, uni = build_tree(n), build_unicyclic(n)
    if status_sequence(tree) != status_sequence(uni):
        raise ConstructionInvariantError(f"T_{n} and U_{n} status sequences differ")
    return ConstructionPair(n=n, parity=parity, k=k, tree=tree, unicyclic=uni)


def annotation(pair: ConstructionPair) -> dict:
    """Labels, statuses and the correspondence map as a JSON-ready dict."""
    st_tree = statuses(pair.tree)
    st_uni = statuses(pair.unicyclic)
    sigma = correspondence(pair.n)
    return {
        "n": pair.n,
        "k": pair.k,
        "parity": pair.parity,
        "base_status": min(st_tree),
        "tree": [{"label": f"x{i}", "index": i - 1, "status": st_tree[i - 1]} for i in range(1, pair.n + 1)],
        "unicyclic": [{"label": f"y{i}", "index": i - 1, "status": st_uni[i - 1]} for i in range(1, pair.n + 1)],
        "correspondence": {f"x{i}": f"y{j}" for i, j in sigma.items()},
        "status_sequence": sorted(st_tree),
    }
