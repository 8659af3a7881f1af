"""Invariant-subspace lattice diagrams.

Per idempotent component, the enumerated family is the Jordan-aligned
prefix-span family: pick the first a_i vectors of each Jordan chain
(0 <= a_i <= block size n_i).  Each such span is invariant, the tuples
form a product of chains under containment, and covering relations are
single-coordinate increments.  The bicomplex lattice is the Cartesian
product of the two component lattices with the componentwise order
(a pair (S1, S2) is invariant for A exactly when S1 is invariant for A1
and S2 for A2).

This family is the complete invariant-subspace lattice only when every
eigenvalue has a single Jordan block per component (otherwise continuous
families of invariant subspaces exist and the diagram shows the
Jordan-basis-aligned representatives); the metadata on every lattice says
which situation applies.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from .errors import ShapeMismatch
from .jordan import ComplexJordanData, Vector, bicomplex_jordan
from .matrices import (
    BicomplexMatrix,
    ComplexMatrix,
    RowSpan,
    exact_rref,
)
from .scalars import EXACT, GaussianRational


class Subspace:
    """Subspace of C^n with a canonical reduced-echelon basis.

    The canonical form makes equality and containment structural, so
    subspaces can be compared, hashed, and deduplicated exactly.
    """

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: int, vectors: Sequence[Vector]):
        rows = [list(v) for v in vectors]
        for v in rows:
            if len(v) != ambient:
                raise ShapeMismatch(f"vector length {len(v)} in ambient dim {ambient}")
        rref, _ = exact_rref(rows) if rows else ([], [])
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", tuple(tuple(r) for r in rref))

    def __setattr__(self, *a):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, [])

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        one = GaussianRational(1)
        zero = GaussianRational(0)
        return cls(ambient, [tuple(one if i == j else zero for j in range(ambient)) for i in range(ambient)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _span(self) -> RowSpan:
        s = RowSpan(self.ambient)
        for v in self.basis:
            s.add(v)
        return s

    def contains_vector(self, v: Sequence[GaussianRational]) -> bool:
        return self._span().contains(v)

    def contains(self, other: "Subspace") -> bool:
        if other.ambient != self.ambient:
            raise ShapeMismatch("ambient dimensions differ")
        span = self._span()
        return all(span.contains(v) for v in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


@dataclass(frozen=True)
class BicomplexSubspace:
    """S = S1 e ⊕ S2 e† with equal ambient dimensions."""

    s1: Subspace
    s2: Subspace

    def __post_init__(self):
        if self.s1.ambient != self.s2.ambient:
            raise ShapeMismatch("component ambient dimensions differ")

    @property
    def ambient(self) -> int:
        return self.s1.ambient

    @property
    def dims(self) -> Tuple[int, int]:
        return (self.s1.dim, self.s2.dim)

    def contains(self, other: "BicomplexSubspace") -> bool:
        return self.s1.contains(other.s1) and self.s2.contains(other.s2)


@dataclass
class LatticeNode:
    label: str
    subspace: object  # Subspace or BicomplexSubspace
    key: tuple  # enumeration tuple(s), lexicographic node identity

    @property
    def dims(self):
        if isinstance(self.subspace, BicomplexSubspace):
            return self.subspace.dims
        return (self.subspace.dim,)


@dataclass
class Lattice:
    """Finite poset of (bicomplex) subspaces with covering relations.

    ``covers`` lists (lower, upper) index pairs and is the transitive
    reduction of containment; node 0 is the zero subspace and the last
    node is the full space (lexicographic tuple order guarantees both).
    """

    nodes: List[LatticeNode]
    covers: List[Tuple[int, int]]
    metadata: dict = field(default_factory=dict)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.nodes) - 1

    def successors(self, i: int) -> List[int]:
        return [b for a, b in self.covers if a == i]


# ---------------------------------------------------------------------------
# invariance
# ---------------------------------------------------------------------------

def component_is_invariant(a: ComplexMatrix, s: Subspace) -> bool:
    """Exact test that A maps S into S: rank([basis | A basis]) == dim S."""
    if a.cols != s.ambient:
        raise ShapeMismatch(f"matrix acts on dim {a.cols}, subspace ambient {s.ambient}")
    span = s._span()
    return all(span.contains(a.apply(list(v))) for v in s.basis)


def is_invariant(a: BicomplexMatrix, s: BicomplexSubspace) -> bool:
    """Corollary of the componentwise action: S1 e ⊕ S2 e† is invariant
    exactly when each component subspace is invariant for its component."""
    if a.backend != EXACT:
        raise ValueError("invariance tests are exact-only")
    return component_is_invariant(a.m1, s.s1) and component_is_invariant(a.m2, s.s2)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _prefix_subspace(jdata: ComplexJordanData, prefix: Tuple[int, ...]) -> Subspace:
    vectors: List[Vector] = []
    for (lam, chain), take in zip(jdata.chains, prefix):
        vectors.extend(chain[:take])
    return Subspace(jdata.n, vectors)


def component_lattice(jdata: ComplexJordanData) -> Lattice:
    """Prefix-tuple lattice of one component from its Jordan data.

    Tuples (a_1, ..., a_k) run over all Jordan chains (across all
    eigenvalues, which realizes the direct-sum composition over
    generalized eigenspaces); node labels are Z[a_1,...,a_k].
    """
    sizes = [len(chain) for _, chain in jdata.chains]
    nodes = []
    index = {}
    for tup in itertools.product(*(range(s + 1) for s in sizes)):
        index[tup] = len(nodes)
        nodes.append(
            LatticeNode(
                label="Z[" + ",".join(map(str, tup)) + "]",
                subspace=_prefix_subspace(jdata, tup),
                key=tup,
            )
        )
    covers = []
    for tup, i in index.items():
        for pos in range(len(sizes)):
            if tup[pos] < sizes[pos]:
                upper = tup[:pos] + (tup[pos] + 1,) + tup[pos + 1 :]
                covers.append((i, index[upper]))
    covers.sort()
    single_block = all(len(sizes_) == 1 for sizes_ in jdata.blocks.values())
    metadata = {
        "family": "jordan-aligned prefix spans",
        "complete": single_block,
        "warnings": []
        if single_block
        else [
            "an eigenvalue has multiple Jordan blocks: the full invariant-"
            "subspace lattice is infinite and this diagram shows the "
            "Jordan-basis-aligned representatives"
        ],
        "block_sizes": sizes,
    }
    return Lattice(nodes=nodes, covers=covers, metadata=metadata)


def product_lattice(l1: Lattice, l2: Lattice) -> Lattice:
    """Cartesian product with componentwise order and bracket labels
    [x | y]; covers step along exactly one component's cover."""
    nodes = []
    index = {}
    for i1, n1 in enumerate(l1.nodes):
        for i2, n2 in enumerate(l2.nodes):
            index[(i1, i2)] = len(nodes)
            sub = _pair_subspace(n1.subspace, n2.subspace)
            nodes.append(
                LatticeNode(
                    label=f"[{n1.label} | {n2.label}]",
                    subspace=sub,
                    key=(n1.key, n2.key),
                )
            )
    covers = []
    for (a, b) in l1.covers:
        for i2 in range(len(l2.nodes)):
            covers.append((index[(a, i2)], index[(b, i2)]))
    for (a, b) in l2.covers:
        for i1 in range(len(l1.nodes)):
            covers.append((index[(i1, a)], index[(i1, b)]))
    covers.sort()
    metadata = {
        "family": "product of component lattices",
        "complete": l1.metadata.get("complete", False) and l2.metadata.get("complete", False),
        "warnings": l1.metadata.get("warnings", []) + l2.metadata.get("warnings", []),
        "component_sizes": (len(l1.nodes), len(l2.nodes)),
    }
    return Lattice(nodes=nodes, covers=covers, metadata=metadata)


def _pair_subspace(a, b) -> BicomplexSubspace:
    if not isinstance(a, Subspace) or not isinstance(b, Subspace):
        raise TypeError("product_lattice expects component lattices")
    return BicomplexSubspace(a, b)


def bicomplex_lattice(a: BicomplexMatrix) -> Lattice:
    """Component Jordan data -> component lattices -> product lattice."""
    jdata = bicomplex_jordan(a)
    return product_lattice(component_lattice(jdata.comp1), component_lattice(jdata.comp2))


def verify_lattice(lat: Lattice, a: BicomplexMatrix | None = None) -> dict:
    """Independent structural checks of an emitted lattice.

    Recomputes the containment order from the subspaces themselves and
    compares its transitive reduction against ``covers``; optionally
    re-checks invariance of every node under ``a``.  Used by the test
    suite and the examples report.
    """
    n = len(lat.nodes)
    subs = [node.subspace for node in lat.nodes]
    leq = [[subs[j].contains(subs[i]) for j in range(n)] for i in range(n)]
    strict = [[leq[i][j] and not leq[j][i] for j in range(n)] for i in range(n)]
    reduction = set()
    for i in range(n):
        for j in range(n):
            if strict[i][j] and not any(
                strict[i][k] and strict[k][j] for k in range(n)
            ):
                reduction.add((i, j))
    covers_ok = reduction == set(lat.covers)
    bottoms = [i for i in range(n) if not any(strict[j][i] for j in range(n))]
    tops = [i for i in range(n) if not any(strict[i][j] for j in range(n))]
    distinct = len({_sub_key(s) for s in subs}) == n
    out = {
        "covers_match_transitive_reduction": covers_ok,
        "unique_bottom": bottoms == [lat.bottom],
        "unique_top": tops == [lat.top],
        "nodes_distinct": distinct,
    }
    if a is not None:
        out["all_invariant"] = all(
            is_invariant(a, s) if isinstance(s, BicomplexSubspace) else component_is_invariant(a, s)
            for s in subs
        )
    return out


def _sub_key(s):
    if isinstance(s, BicomplexSubspace):
        return (s.s1.basis, s.s2.basis)
    return s.basis


# ---------------------------------------------------------------------------
# DOT output
# ---------------------------------------------------------------------------

def to_dot(lat: Lattice, name: str = "lattice") -> str:
    """Graphviz digraph, edges lower -> upper, nodes ranked by total
    dimension so the drawing comes out as a layered Hasse diagram."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", '  node [shape=box, fontsize=10];']
    for i, node in enumerate(lat.nodes):
        dims = node.dims
        dim_txt = "+".join(map(str, dims))
        lines.append(f'  n{i} [label="{node.label}\\ndim {dim_txt}"];')
    for a, b in lat.covers:
        lines.append(f"  n{a} -> n{b};")
    by_total = {}
    for i, node in enumerate(lat.nodes):
        by_total.setdefault(sum(node.dims), []).append(i)
    for total in sorted(by_total):
        members = " ".join(f"n{i};" for i in by_total[total])
        lines.append(f"  {{ rank=same; {members} }}")
    lines.append("}")
    return "\n".join(lines) + "\n"
