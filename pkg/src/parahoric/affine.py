"""Affine root combinatorics on one apartment's fundamental alcove.

An affine root is a pair ``(a, gamma)`` of a root and an integer level,
read as the affine function ``x -> a(x) + gamma`` on the apartment.  The
extended simple basis of each component consists of the simple roots at
level 0 together with ``(-highest_root, 1)``.  Facets of the fundamental
alcove are indexed by per-component nonempty subsets of that basis; for each
facet this module computes the grading of the affine roots, the reductive
quotient of the attached parahoric's special fiber, and the graded layers of
its unipotent radical, as pure weight data.

The normative layer model is the canonical-representative ("window") model:
for each gradient ``a`` the unique level with grading value in
``[0, depth-1]``.  Where the classical description via the set Psi (positive
roots at level 0, negated positives at their vanishing level) is
well-behaved, the two agree; ``psi_literal_agrees`` records the comparison.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .rootdata import (
    DynkinSpec,
    Root,
    RootDatum,
    Weight,
    classify_cartan,
    dot,
    sub_root_datum,
    weight_key,
    wneg,
)

__all__ = [
    "AffineRoot",
    "ComponentBasis",
    "AffineBasis",
    "FacetSpec",
    "ParahoricModel",
    "extended_basis",
    "affine_decompose",
    "enumerate_facets",
    "parse_facet_spec",
    "ell_theta",
    "canonical_rep",
    "parahoric_model",
    "classify_quotient",
    "quotient_by_deletion",
    "facet_barycenter",
    "affine_eval",
]


@dataclass(frozen=True)
class AffineRoot:
    """An affine root (gradient, level)."""

    gradient: Root
    level: int

    def __repr__(self) -> str:
        return f"AffineRoot({weight_key(self.gradient.coords)}; {self.level})"


@dataclass(frozen=True)
class ComponentBasis:
    """Extended basis of one component: simple roots at level 0, then the
    affine node.  ``marks`` solves delta = sum marks[i] * elements[i]."""

    elements: tuple[AffineRoot, ...]
    marks: tuple[int, ...]

    @property
    def ell(self) -> int:
        return sum(self.marks)

    @property
    def rank(self) -> int:
        return len(self.elements) - 1


@dataclass(frozen=True)
class AffineBasis:
    datum: RootDatum
    components: tuple[ComponentBasis, ...]


def extended_basis(rd: RootDatum) -> AffineBasis:
    """Extended affine simple basis with marks and per-component ell.

    The marks are the unique positive integers expressing the constant
    function delta = (0, 1): the gradient equation forces the highest-root
    coefficients on the simple nodes and the level equation forces 1 on the
    affine node.
    """
    if rd.num_components == 0:
        raise ValueError("datum has no semisimple component")
    components = []
    for comp in range(rd.num_components):
        simples = rd.component_simple_roots(comp)
        theta = rd.highest_root(comp)
        affine_node = AffineRoot(rd.root_with_coords(wneg(theta.coords)), 1)
        elements = tuple(AffineRoot(a, 0) for a in simples) + (affine_node,)
        marks = tuple(theta.simple_coeffs) + (1,)
        grad = [0] * rd.n
        for m, el in zip(marks, elements):
            for i, c in enumerate(el.gradient.coords):
                grad[i] += m * c
        assert all(g == 0 for g in grad)
        assert sum(m * el.level for m, el in zip(marks, elements)) == 1
        components.append(ComponentBasis(elements, marks))
    return AffineBasis(rd, tuple(components))


@dataclass(frozen=True)
class FacetSpec:
    """Per-component index subsets of the extended basis, each nonempty."""

    theta: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        return "/".join(",".join(str(i) for i in part) for part in self.theta)


def parse_facet_spec(text: str, basis: AffineBasis) -> FacetSpec:
    """Parse "0,2/1": per-component comma-separated indices, '/'-separated.

    Index order within a component is (simple roots in datum order, then the
    affine node).
    """
    parts = text.strip().split("/")
    if len(parts) != len(basis.components):
        raise ValueError(
            f"facet spec {text!r} has {len(parts)} component(s), "
            f"datum has {len(basis.components)}"
        )
    theta = []
    for part, cb in zip(parts, basis.components):
        try:
            indices = sorted({int(tok) for tok in part.split(",") if tok != ""})
        except ValueError:
            raise ValueError(f"bad theta indices {part!r}") from None
        if not indices:
            raise ValueError("each component needs a nonempty theta")
        if indices[0] < 0 or indices[-1] >= len(cb.elements):
            raise ValueError(f"theta index out of range in {part!r}")
        theta.append(tuple(indices))
    return FacetSpec(tuple(theta))


def enumerate_facets(rd: RootDatum, basis: AffineBasis | None = None) -> list[FacetSpec]:
    """All facets of the fundamental alcove closure, in a fixed order.

    There are prod_i (2^(rank_i + 1) - 1) of them: one per choice of a
    nonempty subset of each component's extended basis.
    """
    basis = basis or extended_basis(rd)
    per_component = []
    for cb in basis.components:
        k = len(cb.elements)
        subsets = []
        for mask in range(1, 1 << k):
            subsets.append(tuple(i for i in range(k) if mask >> i & 1))
        per_component.append(subsets)
    return [FacetSpec(combo) for combo in itertools.product(*per_component)]


def affine_decompose(rd: RootDatum, basis: AffineBasis, alpha: AffineRoot) -> tuple[int, ...]:
    """Integer coefficients of an affine root over its component's extended
    basis (simple nodes first, affine node last).  All coefficients share one
    sign."""
    comp = alpha.gradient.component
    cb = basis.components[comp]
    rank = cb.rank
    gamma = alpha.level
    marks_gradient = cb.marks[:rank]
    coeffs = tuple(
        c + gamma * m for c, m in zip(alpha.gradient.simple_coeffs, marks_gradient)
    ) + (gamma,)
    assert all(c >= 0 for c in coeffs) or all(c <= 0 for c in coeffs)
    return coeffs


def facet_depths(basis: AffineBasis, theta: FacetSpec) -> tuple[int, ...]:
    """Per-component depth d_i = sum of marks over Theta_i."""
    return tuple(
        sum(cb.marks[i] for i in part)
        for cb, part in zip(basis.components, theta.theta)
    )


def ell_theta(rd: RootDatum, basis: AffineBasis, theta: FacetSpec, alpha: AffineRoot) -> int:
    """Grading value: the sum of the decomposition coefficients of ``alpha``
    over the Theta-indices of its component.  Additive in the level: raising
    the level by one adds the component depth."""
    coeffs = affine_decompose(rd, basis, alpha)
    part = theta.theta[alpha.gradient.component]
    return sum(coeffs[i] for i in part)


def canonical_rep(rd: RootDatum, basis: AffineBasis, theta: FacetSpec, a: Root) -> AffineRoot:
    """The unique affine root with gradient ``a`` whose grading value lies in
    the window [0, depth-1] of a's component."""
    depth = facet_depths(basis, theta)[a.component]
    base = ell_theta(rd, basis, theta, AffineRoot(a, 0))
    gamma = -(base // depth)
    rep = AffineRoot(a, gamma)
    assert 0 <= base + gamma * depth < depth
    return rep


@dataclass(frozen=True)
class ParahoricModel:
    """Weight-level model of a parahoric special fiber at one facet.

    ``quotient_roots`` (ambient order) span the reductive quotient;
    ``layers[j-1]`` is the gradient multiset at grading value j, the weights
    of the j-th radical layer.  The counts satisfy
    ``len(quotient_roots) + dim_R == len(datum.roots)``.
    """

    datum: RootDatum
    basis: AffineBasis
    theta: FacetSpec
    depth: tuple[int, ...]
    quotient_roots: tuple[Root, ...]
    quotient_datum: RootDatum
    layers: tuple[tuple[Weight, ...], ...]
    dim_R: int
    psi_literal_agrees: bool

    def layer(self, j: int) -> tuple[Weight, ...]:
        """Weights at grading value j >= 1 (empty beyond the last layer)."""
        if j < 1:
            raise ValueError("layers are indexed from 1")
        return self.layers[j - 1] if j - 1 < len(self.layers) else ()

    def to_json_dict(self) -> dict:
        return {
            "type": self.datum.spec_string,
            "theta": str(self.theta),
            "depth": list(self.depth),
            "quotient_type": str(classify_quotient(self)),
            "quotient_roots": [list(r.coords) for r in self.quotient_roots],
            "layers": [
                {"j": j + 1, "weights": [list(w) for w in layer], "dim": len(layer)}
                for j, layer in enumerate(self.layers)
            ],
            "dim_R": self.dim_R,
            "psi_literal_agrees": self.psi_literal_agrees,
        }


def classify_quotient(model: ParahoricModel) -> DynkinSpec:
    from .rootdata import classify_root_datum

    return classify_root_datum(model.quotient_datum)


def _literal_psi(rd: RootDatum, basis: AffineBasis, theta: FacetSpec) -> set[tuple[Weight, int]]:
    """The set Psi_Theta: positive roots at level 0 together with negated
    positives at level e_a, where e_a = 0 exactly when a vanishes on the
    facet (grading value 0) and e_a = 1 otherwise."""
    psi = set()
    for a in rd.positive_roots:
        e_a = 0 if ell_theta(rd, basis, theta, AffineRoot(a, 0)) == 0 else 1
        psi.add((a.coords, 0))
        psi.add((wneg(a.coords), e_a))
    return psi


def parahoric_model(rd: RootDatum, theta: FacetSpec, basis: AffineBasis | None = None) -> ParahoricModel:
    """Compute the reductive quotient and graded radical layers at a facet.

    Every root contributes its canonical representative; value 0 puts the
    root into the quotient, value j >= 1 puts its gradient into layer j.
    Layers of product types are merged by grading value across components.
    """
    basis = basis or extended_basis(rd)
    depth = facet_depths(basis, theta)
    values: list[tuple[Root, int]] = []
    reps: set[tuple[Weight, int]] = set()
    for a in rd.roots:
        rep = canonical_rep(rd, basis, theta, a)
        reps.add((a.coords, rep.level))
        values.append((a, ell_theta(rd, basis, theta, rep)))
    quotient_roots = tuple(a for a, v in values if v == 0)
    max_depth = max(depth)
    layers = []
    for j in range(1, max_depth):
        layers.append(tuple(a.coords for a, v in values if v == j))
    while layers and not layers[-1]:
        layers.pop()
    dim_r = sum(len(layer) for layer in layers)
    quotient_datum = sub_root_datum(rd, [a.coords for a in quotient_roots])
    return ParahoricModel(
        datum=rd,
        basis=basis,
        theta=theta,
        depth=depth,
        quotient_roots=quotient_roots,
        quotient_datum=quotient_datum,
        layers=tuple(layers),
        dim_R=dim_r,
        psi_literal_agrees=reps == _literal_psi(rd, basis, theta),
    )


def quotient_by_deletion(rd: RootDatum, theta: FacetSpec, basis: AffineBasis | None = None) -> DynkinSpec:
    """Type of the reductive quotient read off the extended Dynkin diagram:
    delete the Theta nodes and every edge adjacent to them, then classify the
    surviving subdiagram.  Must agree with the type computed from the window
    model."""
    basis = basis or extended_basis(rd)
    survivors: list[Root] = []
    for cb, part in zip(basis.components, theta.theta):
        for i, el in enumerate(cb.elements):
            if i not in part:
                survivors.append(el.gradient)
    # connected components of the surviving subdiagram
    k = len(survivors)
    parent = list(range(k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(k), 2):
        if dot(survivors[i].coords, survivors[j].coroot) != 0:
            parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(i)
    components = []
    for group in groups.values():
        nodes = [survivors[i] for i in group]
        cartan = [[dot(b.coords, a.coroot) for b in nodes] for a in nodes]
        components.append(classify_cartan(cartan))
    components.sort()
    semisimple = sum(rank for _, rank in components)
    return DynkinSpec(tuple(components), rd.n - semisimple)


# ---------------------------------------------------------------------------
# Facet geometry (exact rational arithmetic)
#
# Apartment points are written over the basis dual to the fundamental-weight
# coordinates, extended by zero on torus directions, so a root evaluates on a
# point by a plain dot product.


def affine_eval(alpha: AffineRoot, point: tuple[Fraction, ...]) -> Fraction:
    return sum(
        Fraction(c) * x for c, x in zip(alpha.gradient.coords, point)
    ) + alpha.level


def _alcove_vertices(rd: RootDatum, basis: AffineBasis) -> list[list[tuple[Fraction, ...]]]:
    """Per component, the alcove vertex opposite each extended-basis node.

    The vertex for node alpha is the point where every other node of the
    component vanishes; solving those equalities exactly gives rational
    coordinates.
    """
    all_vertices = []
    for comp, cb in enumerate(basis.components):
        simples = rd.component_simple_roots(comp)
        rank = len(simples)
        vertices = []
        for pick in range(rank + 1):
            if pick == rank:
                vertices.append(tuple(Fraction(0) for _ in range(rd.n)))
                continue
            # alpha_k(x) must equal delta_{k,pick} / mark_pick, with x
            # supported on the component's coordinate block
            y = [Fraction(0)] * rank
            y[pick] = Fraction(1, cb.marks[pick])
            support = [
                i
                for i in range(rd.n)
                if any(simples[k].coords[i] != 0 for k in range(rank))
            ]
            assert len(support) == rank
            aug = [
                [Fraction(simples[k].coords[i]) for i in support] + [y[k]]
                for k in range(rank)
            ]
            x_support = _solve_square(aug)
            x = [Fraction(0)] * rd.n
            for idx, val in zip(support, x_support):
                x[idx] = val
            vertices.append(tuple(x))
        all_vertices.append(vertices)
    return all_vertices


def _solve_square(aug: list[list[Fraction]]) -> list[Fraction]:
    n = len(aug)
    for col in range(n):
        pivot = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col]
        aug[col] = [v / inv for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def facet_barycenter(rd: RootDatum, basis: AffineBasis, theta: FacetSpec) -> tuple[Fraction, ...]:
    """Barycenter of the facet: the average of the alcove vertices opposite
    the Theta nodes, component by component.  Lies in the open facet, so an
    affine root vanishes at it iff it vanishes identically on the facet."""
    vertices = _alcove_vertices(rd, basis)
    point = [Fraction(0)] * rd.n
    for comp, part in enumerate(theta.theta):
        chosen = [vertices[comp][i] for i in part]
        for i in range(rd.n):
            point[i] += sum(v[i] for v in chosen) / len(chosen)
    return tuple(point)
