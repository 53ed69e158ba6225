"""
Facet-family isomorphism by backtracking.

Two families of facets (sets of hashable vertex labels) are isomorphic if a
bijection of their vertex sets maps one family onto the other. The search
prunes with per-vertex degree signatures, pairwise co-facet counts and a
partial-facet containment test. Branches are explored in a fixed order, so
the first bijection found is deterministic.
"""

from collections import defaultdict
from itertools import combinations
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Set, Tuple

from loguru import logger


def _label_key(v):
    # signed labels: positives first, then barred labels by absolute value
    if isinstance(v, int):
        return (v < 0, abs(v))
    return (False, v)


class _FacetStructure:
    def __init__(self, facets: Iterable[Iterable[Hashable]], vertices: Optional[Iterable[Hashable]] = None):
        self.facets: List[FrozenSet] = sorted({frozenset(f) for f in facets},
                                              key=lambda f: sorted(f, key=_label_key))
        verts: Set = set(vertices) if vertices is not None else set()
        for f in self.facets:
            verts |= f
        self.vertices = sorted(verts, key=_label_key)
        self.by_vertex: Dict[Hashable, List[FrozenSet]] = defaultdict(list)
        self.pairs: Dict[Tuple, int] = defaultdict(int)
        for f in self.facets:
            for v in f:
                self.by_vertex[v].append(f)
            for u, w in combinations(f, 2):
                self.pairs[(u, w)] += 1
                self.pairs[(w, u)] += 1
        self.signature = {v: (len(self.by_vertex[v]), tuple(sorted(len(f) for f in self.by_vertex[v])))
                          for v in self.vertices}

    def size_profile(self) -> Tuple[int, ...]:
        return tuple(sorted(len(f) for f in self.facets))


def find_facet_isomorphism(facets_a: Iterable[Iterable[Hashable]],
                           facets_b: Iterable[Iterable[Hashable]],
                           vertices_a: Optional[Iterable[Hashable]] = None,
                           vertices_b: Optional[Iterable[Hashable]] = None) -> Optional[Dict[Hashable, Hashable]]:
    """
    Return a bijection vertices_a -> vertices_b mapping the facet family of a
    onto that of b, or None.

    vertices_a / vertices_b default to the union of the facets; pass them to
    include isolated vertices (they are matched among themselves).
    """
    a = _FacetStructure(facets_a, vertices_a)
    b = _FacetStructure(facets_b, vertices_b)
    if len(a.vertices) != len(b.vertices) or a.size_profile() != b.size_profile():
        return None
    if sorted(a.signature.values()) != sorted(b.signature.values()):
        return None

    target = set(b.facets)
    b_by_signature: Dict[Tuple, List] = defaultdict(list)
    for w in b.vertices:
        b_by_signature[b.signature[w]].append(w)

    order: List = []
    remaining = list(a.vertices)
    while remaining:
        best = max(remaining, key=lambda v: (sum(1 for u in order if a.pairs.get((u, v))),
                                             -a.vertices.index(v)))
        order.append(best)
        remaining.remove(best)

    mapping: Dict = {}
    used: Set = set()
    nodes = [0]

    def consistent(v, w) -> bool:
        for u in order:
            if u not in mapping:
                break
            if a.pairs.get((u, v), 0) != b.pairs.get((mapping[u], w), 0):
                return False
        for facet in a.by_vertex[v]:
            image = {mapping[x] for x in facet if x in mapping} | {w}
            if not any(len(g) == len(facet) and image <= g for g in b.by_vertex[w]):
                return False
        return True

    def extend(depth: int) -> bool:
        if depth == len(order):
            return {frozenset(mapping[x] for x in f) for f in a.facets} == target
        v = order[depth]
        for w in b_by_signature[a.signature[v]]:
            if w in used:
                continue
            nodes[0] += 1
            if not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if extend(depth + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    found = extend(0)
    logger.debug(f"Isomorphism search over {len(order)} vertices visited {nodes[0]} nodes: "
                 f"{'found' if found else 'none'}")
    return dict(mapping) if found else None
