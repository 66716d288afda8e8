"""The ternary tree of primitive Pythagorean triples rooted at (3, 4, 5).

Children are obtained by left-multiplying the column vector (a, b, c) by
one of three fixed matrices. All three preserve a^2 + b^2 - c^2, keep
``a`` odd and ``b`` even, and strictly increase ``c``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .integer_kernel import check_nat, gcd

ROOT = (3, 4, 5)

MATRICES = {
    "M1": ((1, -2, 2), (2, -1, 2), (2, -2, 3)),
    "M2": ((1, 2, 2), (2, 1, 2), (2, 2, 3)),
    "M3": ((-1, 2, 2), (-2, 1, 2), (-2, 2, 3)),
}
LABELS = tuple(MATRICES)


def _inverse(m):
    # M^T diag(1,1,-1) M = diag(1,1,-1), so M^-1 = J M^T J.
    sign = (1, 1, -1)
    return tuple(tuple(sign[i] * m[j][i] * sign[j] for j in range(3)) for i in range(3))


INVERSES = {label: _inverse(m) for label, m in MATRICES.items()}


def apply(matrix, v: tuple[int, int, int]) -> tuple[int, int, int]:
    return tuple(check_nat(sum(row[j] * v[j] for j in range(3))) for row in matrix)


@dataclass(frozen=True)
class TreeTriple:
    triple: tuple[int, int, int]
    path: tuple[str, ...] = field(default=())

    @property
    def depth(self) -> int:
        return len(self.path)


def children(t: TreeTriple) -> tuple[TreeTriple, TreeTriple, TreeTriple]:
    return tuple(TreeTriple(apply(MATRICES[lab], t.triple), t.path + (lab,)) for lab in LABELS)


def enumerate_tree(max_depth: int, max_hypotenuse: int | None = None) -> list[TreeTriple]:
    """Breadth-first list of nodes with depth <= max_depth and c <= max_hypotenuse.

    Since c grows along every edge, pruning a node also prunes its subtree.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    root = TreeTriple(ROOT)
    if max_hypotenuse is not None and ROOT[2] > max_hypotenuse:
        return []
    out = []
    queue = deque([root])
    while queue:
        node = queue.popleft()
        out.append(node)
        if node.depth == max_depth:
            continue
        for child in children(node):
            if max_hypotenuse is None or child.triple[2] <= max_hypotenuse:
                queue.append(child)
    return out


def is_primitive(a: int, b: int, c: int) -> bool:
    if min(a, b, c) <= 0 or a * a + b * b != c * c:
        raise ValueError(f"({a}, {b}, {c}) is not a Pythagorean triple")
    return gcd(a, b) == 1


def find_path(a: int, b: int, c: int) -> list[str]:
    """Matrix labels leading from the root to the triple (legs in either order)."""
    if not is_primitive(a, b, c):
        raise ValueError(f"({a}, {b}, {c}) is not primitive")
    # tree nodes carry the odd leg first
    v = (a, b, c) if a % 2 else (b, a, c)
    path = []
    while v != ROOT:
        for lab in LABELS:
            parent = tuple(sum(row[j] * v[j] for j in range(3)) for row in INVERSES[lab])
            if min(parent) > 0:
                path.append(lab)
                v = parent
                break
        else:
            raise ValueError(f"({a}, {b}, {c}) is not reachable from {ROOT}")
    path.reverse()
    return path
