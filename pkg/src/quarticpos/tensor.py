"""Two-dimensional pseudotensors and a contraction-diagram evaluator.

A diagram is a set of tensor nodes whose slots are either left free or tied
pairwise by a bond.  Every bond ``(p, q)`` stands for one factor of the
upper-index skew matrix ``d^{xy}`` with ``x`` summed against slot ``p`` and
``y`` against slot ``q``; the orientation matters because ``d`` is
antisymmetric.

Index values 1, 2 map to array positions 0, 1; component arrays are numpy
object arrays of shape ``(2,) * rank`` so the same code runs on ``Fraction``
and on :class:`~quarticpos.algebra.MultiPoly` entries.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

LOWER = "lower"
UPPER = "upper"

__all__ = [
    "LOWER",
    "UPPER",
    "Pseudotensor",
    "ContractionDiagram",
    "BasisChange",
    "DIAGRAMS",
    "OBJECT_NAMES",
    "fundamental_upper",
    "fundamental_lower",
    "symmetric_form_tensor",
    "evaluate_diagram",
    "named_object",
    "named_objects",
    "transform_components",
    "diagram_listing",
]


def _object_array(values, rank: int) -> np.ndarray:
    arr = np.empty((2,) * rank, dtype=object)
    if rank == 0:
        arr[()] = values
    else:
        arr[...] = values
    return arr


@dataclass(frozen=True, eq=False)
class Pseudotensor:
    components: np.ndarray
    variances: tuple
    weight: int = 0

    def __post_init__(self):
        comps = self.components
        if not isinstance(comps, np.ndarray) or comps.dtype != object:
            comps = np.array(comps, dtype=object)
            if comps.ndim == 0:
                comps = _object_array(comps.item(), 0)
            object.__setattr__(self, "components", comps)
        if comps.shape != (2,) * comps.ndim:
            raise ValueError(f"components must have shape (2,)*rank, got {comps.shape}")
        if len(self.variances) != comps.ndim:
            raise ValueError("one variance per slot required")
        if any(v not in (LOWER, UPPER) for v in self.variances):
            raise ValueError(f"variances must be {LOWER!r} or {UPPER!r}")

    @property
    def rank(self) -> int:
        return self.components.ndim

    @property
    def flat(self) -> list:
        """Components in row-major order, slot 1 most significant."""
        return list(self.components.ravel())

    def __getitem__(self, indices):
        """Component by 1-based tensor indices, e.g. ``B[1, 1, 2, 2]``."""
        if not isinstance(indices, tuple):
            indices = (indices,)
        if len(indices) != self.rank:
            raise IndexError(f"rank-{self.rank} tensor needs {self.rank} indices")
        if any(i not in (1, 2) for i in indices):
            raise IndexError("tensor indices take the values 1 and 2")
        return self.components[tuple(i - 1 for i in indices)]

    @property
    def scalar(self):
        if self.rank:
            raise ValueError("not a rank-0 pseudotensor")
        return self.components[()]

    def map(self, fn) -> "Pseudotensor":
        out = np.empty(self.components.shape, dtype=object)
        for idx, v in np.ndenumerate(self.components):
            out[idx] = fn(v)
        return Pseudotensor(out, self.variances, self.weight)

    def same_components(self, other: "Pseudotensor") -> bool:
        if self.components.shape != other.components.shape:
            return False
        return all(a == b for a, b in zip(self.components.ravel(), other.components.ravel()))

    def __repr__(self):
        return f"Pseudotensor(rank={self.rank}, weight={self.weight}, variances={self.variances})"


def fundamental_upper() -> Pseudotensor:
    """``d^{ij}``: the skew matrix [[0, 1], [-1, 0]], type (2,0), weight +1."""
    return Pseudotensor(np.array([[0, 1], [-1, 0]], dtype=object), (UPPER, UPPER), 1)


def fundamental_lower() -> Pseudotensor:
    """``d_{ij}``: same matrix, type (0,2), weight -1."""
    return Pseudotensor(np.array([[0, 1], [-1, 0]], dtype=object), (LOWER, LOWER), -1)


def symmetric_form_tensor(coefficients) -> Pseudotensor:
    """The symmetric (0,4) tensor of a quartic form.

    ``coefficients`` is a :class:`~quarticpos.invariants.FormCoefficients` or
    any 5-sequence ``(A1111, A1112, A1122, A1222, A2222)``; the component at a
    multi-index is the entry selected by how many of its indices equal 2.
    """
    values = tuple(coefficients)
    if len(values) != 5:
        raise ValueError("a binary quartic has five independent components")
    comps = np.empty((2, 2, 2, 2), dtype=object)
    for idx in np.ndindex(2, 2, 2, 2):
        comps[idx] = values[sum(idx)]
    return Pseudotensor(comps, (LOWER,) * 4, 0)


# -- diagrams ---------------------------------------------------------------

Slot = tuple  # (node index, slot index), both 0-based


@dataclass(frozen=True)
class ContractionDiagram:
    name: str
    nodes: tuple            # input tensor name per node
    bonds: tuple            # ((node, slot), (node, slot)) per d^{xy}
    free_slots: tuple       # output index order
    expected_weight: int
    source: str = ""        # the index pattern this diagram was transcribed from

    @classmethod
    def from_indices(cls, name: str, nodes: Sequence[tuple[str, str]],
                     bonds: Sequence[tuple[str, str]], free: str = "",
                     expected_weight: int = 0) -> "ContractionDiagram":
        """Transcribe an index-notation sum.

        ``nodes`` pairs an input name with its space-separated index labels,
        ``bonds`` lists ``(x, y)`` for each ``d^{x y}`` factor, and ``free``
        gives the output index order.
        """
        where: dict[str, Slot] = {}
        for n, (_, labels) in enumerate(nodes):
            for s, lab in enumerate(labels.split()):
                if lab in where:
                    raise ValueError(f"{name}: index {lab} used twice on tensor factors")
                where[lab] = (n, s)
        try:
            bond_slots = tuple((where[x], where[y]) for x, y in bonds)
            free_slots = tuple(where[lab] for lab in free.split())
        except KeyError as exc:
            raise ValueError(f"{name}: index {exc.args[0]} not carried by any node") from None
        terms = " ".join(f"{t}_{{{labs}}}" for t, labs in nodes)
        terms += "".join(f" d^{{{x} {y}}}" for x, y in bonds)
        return cls(name, tuple(t for t, _ in nodes), bond_slots, free_slots,
                   expected_weight, terms)

    def check(self, ranks: Sequence[int]) -> None:
        """Raise ``ValueError`` unless every slot is used exactly once."""
        if len(ranks) != len(self.nodes):
            raise ValueError(f"{self.name}: {len(self.nodes)} nodes but {len(ranks)} input ranks")
        seen: dict[Slot, int] = {}
        for p, q in self.bonds:
            for s in (p, q):
                seen[s] = seen.get(s, 0) + 1
        for s in self.free_slots:
            seen[s] = seen.get(s, 0) + 1
        expected = {(n, k) for n, r in enumerate(ranks) for k in range(r)}
        if set(seen) != expected or any(c != 1 for c in seen.values()):
            raise ValueError(f"{self.name}: slot-arity mismatch between diagram and input tensors")


def _apply_bond(arr: np.ndarray, axis: int, d: np.ndarray) -> np.ndarray:
    # sum_x T[.., x, ..] d[x, y]  ->  new axis y in the same position
    return np.moveaxis(np.tensordot(arr, d, axes=([axis], [0])), -1, axis)


def evaluate_diagram(diagram: ContractionDiagram, inputs: Mapping[str, Pseudotensor]) -> Pseudotensor:
    tensors = []
    for name in diagram.nodes:
        if name not in inputs:
            raise KeyError(f"{diagram.name}: missing input tensor {name!r}")
        tensors.append(inputs[name])
    diagram.check([t.rank for t in tensors])
    for p, q in diagram.bonds:
        for n, s in (p, q):
            if tensors[n].variances[s] != LOWER:
                raise ValueError(f"{diagram.name}: bond on an upper slot of node {n}")

    d = fundamental_upper()
    letters = iter(string.ascii_letters)
    labels = [[None] * t.rank for t in tensors]
    arrays = [t.components for t in tensors]
    for p, q in diagram.bonds:
        lab = next(letters)
        labels[p[0]][p[1]] = lab
        labels[q[0]][q[1]] = lab
        arrays[p[0]] = _apply_bond(arrays[p[0]], p[1], d.components)
    out_labels = []
    for n, s in diagram.free_slots:
        lab = next(letters)
        labels[n][s] = lab
        out_labels.append(lab)

    # fold nodes left to right, keeping only labels still needed downstream
    acc, acc_labels = arrays[0], labels[0]
    for k in range(1, len(arrays)):
        later = {lab for ls in labels[k + 1:] for lab in ls} | set(out_labels)
        combined = acc_labels + labels[k]
        keep = []
        for lab in combined:
            if lab not in keep and (lab in later or combined.count(lab) == 1):
                keep.append(lab)
        spec = f"{''.join(acc_labels)},{''.join(labels[k])}->{''.join(keep)}"
        acc, acc_labels = np.einsum(spec, acc, arrays[k]), keep
    result = np.einsum(f"{''.join(acc_labels)}->{''.join(out_labels)}", acc)
    if not isinstance(result, np.ndarray) or result.ndim == 0:
        result = _object_array(result.item() if isinstance(result, np.ndarray) else result, 0)

    weight = sum(t.weight for t in tensors) + len(diagram.bonds)
    variances = tuple(tensors[n].variances[s] for n, s in diagram.free_slots)
    return Pseudotensor(result, variances, weight)


def _diagram_table() -> dict[str, ContractionDiagram]:
    D = ContractionDiagram.from_indices
    table = [
        D("B", [("A", "i1 i2 j2 k1"), ("A", "i3 i4 j1 k2")],
          [("k1", "j1"), ("k2", "j2")], "i1 i2 i3 i4", 2),
        D("Chat", [("B", "i1 i2 i3 j4"), ("A", "i4 i5 i6 k4")],
          [("j4", "k4")], "i1 i2 i3 i4 i5 i6", 3),
        D("beta", [("B", "i1 i2 j1 j2")], [("i1", "j1"), ("i2", "j2")], "", 4),
        D("D", [("A", "i1 i2 j4 k1"), ("A", "i3 i4 j1 k2"), ("A", "i5 i6 j2 k3"), ("A", "i7 i8 j3 k4")],
          [("k1", "j1"), ("k2", "j2"), ("k3", "j3"), ("k4", "j4")], "i1 i2 i3 i4 i5 i6 i7 i8", 4),
        D("Bhat", [("B", "i1 j1 i2 k1")], [("k1", "j1")], "i1 i2", 3),
        D("C", [("A", "i1 i2 j3 k1"), ("A", "i3 i4 j1 k2"), ("A", "i5 i6 j2 k3")],
          [("k1", "j1"), ("k2", "j2"), ("k3", "j3")], "i1 i2 i3 i4 i5 i6", 3),
        D("gamma", [("C", "j3 k1 j1 k2 j2 k3")], [("k1", "j1"), ("k2", "j2"), ("k3", "j3")], "", 6),
        D("Ccheck", [("C", "i1 j1 i2 k1 i3 i4")], [("k1", "j1")], "i1 i2 i3 i4", 4),
        D("delta", [("D", "j4 k1 j1 k2 j2 k3 j3 k4")],
          [("k1", "j1"), ("k2", "j2"), ("k3", "j3"), ("k4", "j4")], "", 8),
        D("E", [("A", "i1 i2 j6 k1"), ("A", "i3 i4 j1 k2"), ("A", "i5 i6 j2 k3"),
                ("A", "i7 i8 j3 k4"), ("A", "i9 i10 j4 k5"), ("A", "i11 i12 j5 k6")],
          [(f"k{m}", f"j{m}") for m in range(1, 7)], " ".join(f"i{m}" for m in range(1, 13)), 6),
        D("eps0_via_E", [("E", "j6 k1 j1 k2 j2 k3 j3 k4 j4 k5 j5 k6")],
          [(f"k{m}", f"j{m}") for m in range(1, 7)], "", 12),
        D("eps0_via_B", [("B", "j5 j6 k1 k2"), ("B", "j1 j2 k3 k4"), ("B", "j3 j4 k5 k6")],
          [(f"k{m}", f"j{m}") for m in range(1, 7)], "", 12),
    ]
    two_factor = {
        "eps1": (("C", "j1 j6 j2 j3 j4 j5"), ("C", "k1 k2 k3 k4 k5 k6")),
        "eps2": (("Chat", "j1 j6 j3 j2 j4 j5"), ("C", "k1 k2 k3 k4 k5 k6")),
        "eps3": (("Chat", "j1 j2 j3 j4 j5 k1"), ("Chat", "k6 k5 k4 j6 k3 k2")),
        "eps4": (("Chat", "j1 j2 j3 j4 j5 k1"), ("Chat", "k4 k6 k3 j6 k2 k5")),
        "eps5": (("Chat", "j1 j3 j5 j6 j4 k1"), ("Chat", "k3 k4 j2 k5 k6 k2")),
        "eps6": (("Chat", "j3 j4 j1 j5 j6 k1"), ("Chat", "k3 k5 j2 k4 k6 k2")),
        "eps7": (("Chat", "j1 j6 j3 j4 j5 k1"), ("Chat", "j2 k6 k4 k3 k5 k2")),
        "eps8": (("Chat", "j1 j3 j4 j5 j6 k1"), ("Chat", "j2 k3 k4 k5 k6 k2")),
        "eps9": (("Chat", "j1 j3 j4 j5 j6 k1"), ("Chat", "k3 k4 j2 k5 k6 k2")),
        "eps10": (("Chat", "j1 j2 j3 j4 j5 j6"), ("Chat", "k1 k6 k3 k2 k4 k5")),
    }
    for name, nodes in two_factor.items():
        table.append(D(name, list(nodes), [(f"k{m}", f"j{m}") for m in range(1, 7)], "", 12))
    return {d.name: d for d in table}


DIAGRAMS: dict[str, ContractionDiagram] = _diagram_table()
OBJECT_NAMES = tuple(DIAGRAMS)
_ALIASES = {"eps0": "eps0_via_B"}


def named_objects(A: Pseudotensor, names: Sequence[str], cache: dict | None = None) -> dict[str, Pseudotensor]:
    """Evaluate several named objects, sharing intermediate tensors via ``cache``."""
    if A.rank != 4 or A.weight != 0 or set(A.variances) != {LOWER}:
        raise ValueError("expected the rank-4 covariant weight-0 form tensor")
    cache = {} if cache is None else cache
    cache.setdefault("A", A)

    def get(name: str) -> Pseudotensor:
        name = _ALIASES.get(name, name)
        if name in cache:
            return cache[name]
        if name not in DIAGRAMS:
            raise KeyError(f"unknown object {name!r}")
        diagram = DIAGRAMS[name]
        inputs = {n: get(n) for n in set(diagram.nodes)}
        cache[name] = evaluate_diagram(diagram, inputs)
        return cache[name]

    return {n: get(n) for n in names}


def named_object(which: str, A: Pseudotensor) -> Pseudotensor:
    return named_objects(A, [which])[which]


def diagram_listing() -> str:
    """Plain-text dump of the diagram table, one block per object."""
    lines = []
    for d in DIAGRAMS.values():
        lines.append(f"{d.name}: {len(d.nodes)} node(s) [{', '.join(d.nodes)}], "
                     f"{len(d.bonds)} bond(s), rank {len(d.free_slots)}, weight {d.expected_weight}")
        lines.append(f"  sum: {d.source}")
        bonds = ", ".join(f"n{p[0]}.{p[1]}->n{q[0]}.{q[1]}" for p, q in d.bonds)
        lines.append(f"  bonds (d^xy, x-slot -> y-slot): {bonds}")
        free = ", ".join(f"n{n}.{s}" for n, s in d.free_slots) or "-"
        lines.append(f"  free slots: {free}")
    return "\n".join(lines)


# -- change of basis --------------------------------------------------------


def _mat_mul(X, Y):
    return tuple(tuple(sum(X[i][k] * Y[k][j] for k in range(2)) for j in range(2)) for i in range(2))


@dataclass(frozen=True)
class BasisChange:
    """Direct transition matrix ``S`` (``S[j][i]`` is ``S^j_i``) and its inverse ``T``."""

    S: tuple
    T: tuple = field(default=None)
    detT: Fraction = field(default=None)

    def __post_init__(self):
        S = tuple(tuple(Fraction(x) for x in row) for row in self.S)
        if len(S) != 2 or any(len(r) != 2 for r in S):
            raise ValueError("transition matrix must be 2x2")
        det_s = S[0][0] * S[1][1] - S[0][1] * S[1][0]
        if det_s == 0:
            raise ValueError("singular transition matrix")
        T = ((S[1][1] / det_s, -S[0][1] / det_s), (-S[1][0] / det_s, S[0][0] / det_s))
        if self.T is not None:
            given = tuple(tuple(Fraction(x) for x in row) for row in self.T)
            if given != T:
                raise ValueError("T is not the inverse of S")
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "detT", 1 / det_s)
        assert _mat_mul(S, T) == ((1, 0), (0, 1))

    @classmethod
    def from_entries(cls, a, b, c, d) -> "BasisChange":
        """Row-major ``S = [[a, b], [c, d]]``."""
        return cls(((a, b), (c, d)))

    @classmethod
    def identity(cls) -> "BasisChange":
        return cls(((1, 0), (0, 1)))

    @property
    def detS(self) -> Fraction:
        return 1 / self.detT

    def inverse(self) -> "BasisChange":
        return BasisChange(self.T)


def transform_components(t: Pseudotensor, b: BasisChange) -> Pseudotensor:
    """Components of ``t`` in the new basis.

    Inverts the pseudotensor law ``F(old) = (det T)^m S..S T..T F(new)``:
    covariant slots pick up ``S^j_q``, contravariant ones ``T^p_i``, and the
    whole array is scaled by ``(det T)^(-m)``.
    """
    S = np.array(b.S, dtype=object)
    T = np.array(b.T, dtype=object)
    arr = t.components
    for axis, var in enumerate(t.variances):
        if var == LOWER:
            arr = np.moveaxis(np.tensordot(arr, S, axes=([axis], [0])), -1, axis)
        else:
            arr = np.moveaxis(np.tensordot(arr, T, axes=([axis], [1])), -1, axis)
    factor = b.detS ** t.weight
    if t.rank == 0:
        return Pseudotensor(_object_array(arr.item() * factor if isinstance(arr, np.ndarray) else arr * factor, 0),
                            t.variances, t.weight)
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = v * factor
    return Pseudotensor(out, t.variances, t.weight)
