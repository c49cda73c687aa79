"""Exact root-datum combinatorics for split reductive groups.

Weights live in Z^n, written in fundamental-weight coordinates on the
semisimple directions followed by free coordinates for any central torus.
Every root carries its coroot as an integer functional on that lattice, so
pairings, reflections and dominance tests are exact integer arithmetic
throughout; no floats appear anywhere.

A :class:`RootDatum` is either built from a :class:`DynkinSpec` (the ambient
group) or carved out of an ambient datum with :func:`sub_root_datum` (the
reductive quotient attached to a parahoric facet).  Both kinds share one code
path for orbits, dominance and the Weyl degree formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Weight",
    "DynkinSpec",
    "Root",
    "RootDatum",
    "IllegalRank",
    "NotDominant",
    "parse_dynkin_spec",
    "build_root_datum",
    "sub_root_datum",
    "classify_root_datum",
    "weight_key",
    "parse_weight_key",
]

#: A lattice point in fundamental-weight-plus-torus coordinates.
Weight = tuple[int, ...]


class IllegalRank(ValueError):
    """Raised for a rank outside its Dynkin family."""


class NotDominant(ValueError):
    """Raised when an operation requires a dominant weight."""


def wadd(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def wsub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def wneg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def wscale(k: int, a: Weight) -> Weight:
    return tuple(k * x for x in a)


def dot(a: Weight, b: Weight) -> int:
    return sum(x * y for x, y in zip(a, b))


def weight_key(w: Weight) -> str:
    """Render a weight as the comma-separated key used in all JSON reports."""
    return ",".join(str(c) for c in w)


def parse_weight_key(text: str) -> Weight:
    return tuple(int(part) for part in text.split(","))


# ---------------------------------------------------------------------------
# Dynkin specifications


_LEGAL_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 1,
    "C": lambda r: r >= 1,
    "D": lambda r: r >= 2,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


@dataclass(frozen=True)
class DynkinSpec:
    """A product of irreducible Dynkin types plus an optional central torus."""

    components: tuple[tuple[str, int], ...]
    extra_torus_rank: int = 0

    def __post_init__(self):
        for family, rank in self.components:
            if family not in _LEGAL_RANKS:
                raise IllegalRank(f"unknown family {family!r}")
            if not _LEGAL_RANKS[family](rank):
                raise IllegalRank(f"illegal rank {rank} for family {family}")
        if self.extra_torus_rank < 0:
            raise IllegalRank("torus rank must be nonnegative")

    @property
    def semisimple_rank(self) -> int:
        return sum(rank for _, rank in self.components)

    @property
    def rank(self) -> int:
        return self.semisimple_rank + self.extra_torus_rank

    def __str__(self) -> str:
        body = "x".join(f"{fam}{rank}" for fam, rank in self.components)
        if self.extra_torus_rank and body:
            return f"{body}+T{self.extra_torus_rank}"
        if self.extra_torus_rank:
            return f"T{self.extra_torus_rank}"
        return body or "T0"


def parse_dynkin_spec(text: str) -> DynkinSpec:
    """Parse strings like ``"A2"``, ``"C3"``, ``"A1xA1+T1"`` (case-insensitive).

    ``x`` separates semisimple components and a trailing ``+Tk`` appends a
    central torus of rank ``k``.  A bare ``Tk`` is a pure torus.
    """
    body = text.strip().upper().replace(" ", "")
    if not body:
        raise IllegalRank("empty type specification")
    torus = 0
    if "+" in body:
        body, _, tail = body.partition("+")
        if not tail.startswith("T") or not tail[1:].isdigit():
            raise IllegalRank(f"bad torus suffix in {text!r}")
        torus = int(tail[1:])
    components: list[tuple[str, int]] = []
    if body.startswith("T") and body[1:].isdigit():
        torus += int(body[1:])
    else:
        for chunk in body.split("X"):
            if len(chunk) < 2 or chunk[0] not in _LEGAL_RANKS or not chunk[1:].isdigit():
                raise IllegalRank(f"bad component {chunk!r} in {text!r}")
            components.append((chunk[0], int(chunk[1:])))
    return DynkinSpec(tuple(components), torus)


# ---------------------------------------------------------------------------
# Cartan matrices
#
# Convention: cartan[i][j] = <alpha_j, alpha_i^vee>, so column j holds the
# fundamental-weight coordinates of the simple root alpha_j.  The symmetrizer
# d satisfies d[i]*cartan[i][j] == d[j]*cartan[j][i] and (alpha_i, alpha_i)
# is proportional to 2*d[i], which fixes all root lengths exactly.


def _cartan_and_symmetrizer(family: str, rank: int) -> tuple[list[list[int]], list[int]]:
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def edge(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    d = [1] * rank
    if family == "A":
        for i in range(rank - 1):
            edge(i, i + 1)
    elif family == "B":
        # alpha_rank is the short simple root
        for i in range(rank - 1):
            edge(i, i + 1)
        if rank >= 2:
            c[rank - 1][rank - 2] = -2
            d = [2] * (rank - 1) + [1]
    elif family == "C":
        # alpha_rank is the long simple root
        for i in range(rank - 1):
            edge(i, i + 1)
        if rank >= 2:
            c[rank - 2][rank - 1] = -2
            d = [1] * (rank - 1) + [2]
    elif family == "D":
        for i in range(rank - 2):
            edge(i, i + 1)
        if rank >= 3:
            edge(rank - 3, rank - 1)
    elif family == "E":
        chain = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]
        for i, j in chain:
            if j < rank:
                edge(i, j)
        edge(1, 3)
    elif family == "F":
        edge(0, 1)
        edge(1, 2, cij=-1, cji=-2)
        edge(2, 3)
        d = [2, 2, 1, 1]
    elif family == "G":
        edge(0, 1, cij=-3, cji=-1)
        d = [1, 3]
    for i in range(rank):
        for j in range(rank):
            assert d[i] * c[i][j] == d[j] * c[j][i]
    return c, d


# ---------------------------------------------------------------------------
# Roots and data


@dataclass(frozen=True)
class Root:
    """A root of a datum, with all derived integer data precomputed.

    ``coords`` are ambient fundamental-weight coordinates.  ``simple_coeffs``
    expresses the root over the simple roots of its own component (all
    entries share one sign).  ``coroot`` is the pairing functional of the
    coroot: ``<lam, alpha^vee> = dot(lam, coroot)``.  ``coroot_coeffs`` gives
    the coroot over the component's simple coroots, so its entry sum equals
    ``<rho, alpha^vee>``.  ``form`` is the functional of a Weyl-invariant
    bilinear form paired against this root: ``(lam, alpha) = dot(lam, form)``.
    """

    coords: Weight
    simple_coeffs: tuple[int, ...]
    component: int
    coroot: Weight
    coroot_coeffs: tuple[int, ...]
    form: Weight

    @property
    def height(self) -> int:
        return sum(self.simple_coeffs)

    @property
    def coroot_height(self) -> int:
        return sum(self.coroot_coeffs)

    def __repr__(self) -> str:
        return f"Root({weight_key(self.coords)})"


class _LinSolver:
    """Exact rational solver for Sum c_i * columns[i] = target."""

    def __init__(self, columns: list[Weight]):
        self.columns = [tuple(col) for col in columns]
        self.k = len(columns)
        self.n = len(columns[0]) if columns else 0

    def solve(self, target: Weight) -> tuple[Fraction, ...] | None:
        if self.k == 0:
            return () if all(x == 0 for x in target) else None
        rows = [
            [Fraction(self.columns[j][i]) for j in range(self.k)] + [Fraction(target[i])]
            for i in range(self.n)
        ]
        pivots = []
        r = 0
        for col in range(self.k):
            pivot = next((i for i in range(r, self.n) if rows[i][col] != 0), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = rows[r][col]
            rows[r] = [x / inv for x in rows[r]]
            for i in range(self.n):
                if i != r and rows[i][col] != 0:
                    factor = rows[i][col]
                    rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
            pivots.append(col)
            r += 1
        for i in range(r, self.n):
            if rows[i][-1] != 0:
                return None
        if len(pivots) < self.k:
            return None  # dependent columns: solution not unique
        sol = [Fraction(0)] * self.k
        for row_idx, col in enumerate(pivots):
            sol[col] = rows[row_idx][-1]
        return tuple(sol)

    def solve_int(self, target: Weight) -> tuple[int, ...] | None:
        sol = self.solve(target)
        if sol is None or any(x.denominator != 1 for x in sol):
            return None
        return tuple(int(x) for x in sol)


class RootDatum:
    """An immutable root datum inside the ambient lattice Z^n.

    Construct with :func:`build_root_datum` or :func:`sub_root_datum`.
    Instances are safe to share; all methods are pure.
    """

    def __init__(self, *, spec, n, roots, simple_indices, cartan, rho):
        self.spec: DynkinSpec | None = spec
        self.n: int = n
        self.roots: tuple[Root, ...] = tuple(roots)
        self.simple_indices: tuple[tuple[int, ...], ...] = tuple(
            tuple(ix) for ix in simple_indices
        )
        self.cartan: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in cartan)
        self.rho: Weight | None = rho
        self._coords_index = {r.coords: i for i, r in enumerate(self.roots)}
        flat = [self.roots[i] for comp in self.simple_indices for i in comp]
        self._simple_roots = tuple(flat)
        self._root_solver = _LinSolver([r.coords for r in flat])
        self._orbit_cache: dict[Weight, tuple[Weight, ...]] = {}
        self._chi_cache: dict[Weight, dict[Weight, int]] = {}
        # (2*rho, alpha_i) per simple root, for the Freudenthal denominator
        self._two_rho_form = tuple(
            sum(dot(beta.form, alpha.coords) for beta in self.positive_roots)
            for alpha in flat
        )

    # -- basic structure ---------------------------------------------------

    @property
    def spec_string(self) -> str | None:
        return str(self.spec) if self.spec is not None else None

    @property
    def num_components(self) -> int:
        return len(self.simple_indices)

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return self._simple_roots

    @property
    def semisimple_rank(self) -> int:
        return len(self._simple_roots)

    @property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.height > 0)

    def component_simple_roots(self, component: int) -> tuple[Root, ...]:
        return tuple(self.roots[i] for i in self.simple_indices[component])

    def is_root(self, coords: Weight) -> bool:
        return coords in self._coords_index

    def root_with_coords(self, coords: Weight) -> Root:
        return self.roots[self._coords_index[coords]]

    def root_order_index(self, coords: Weight) -> int:
        return self._coords_index[coords]

    def same_datum(self, other: "RootDatum") -> bool:
        return self is other or (
            self.n == other.n
            and self.simple_indices == other.simple_indices
            and tuple(r.coords for r in self.roots) == tuple(r.coords for r in other.roots)
        )

    # -- pairing, reflection, orbits ---------------------------------------

    @staticmethod
    def pair(lam: Weight, coroot: Weight) -> int:
        """Exact pairing <lam, alpha^vee>."""
        return dot(lam, coroot)

    def reflect(self, root: Root, lam: Weight) -> Weight:
        """s_alpha(lam) = lam - <lam, alpha^vee> alpha."""
        return wsub(lam, wscale(dot(lam, root.coroot), root.coords))

    def is_dominant(self, lam: Weight) -> bool:
        return all(dot(lam, a.coroot) >= 0 for a in self._simple_roots)

    def weyl_orbit(self, lam: Weight) -> tuple[Weight, ...]:
        """The Weyl-group orbit of ``lam``, in a deterministic (sorted) order."""
        cached = self._orbit_cache.get(lam)
        if cached is not None:
            return cached
        seen = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for w in frontier:
                for a in self._simple_roots:
                    img = self.reflect(a, w)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        orbit = tuple(sorted(seen))
        key = self.dominant_conjugate(lam)
        self._orbit_cache[key] = orbit
        if lam != key:
            self._orbit_cache[lam] = orbit
        return orbit

    def dominant_conjugate(self, lam: Weight) -> Weight:
        """The unique dominant member of the Weyl orbit of ``lam``."""
        w = lam
        while True:
            for a in self._simple_roots:
                if dot(w, a.coroot) < 0:
                    w = self.reflect(a, w)
                    break
            else:
                return w

    def antidominant_conjugate(self, lam: Weight) -> Weight:
        w = lam
        while True:
            for a in self._simple_roots:
                if dot(w, a.coroot) > 0:
                    w = self.reflect(a, w)
                    break
            else:
                return w

    def orbit_size(self, lam: Weight) -> int:
        return len(self.weyl_orbit(lam))

    # -- dominance order ----------------------------------------------------

    def root_lattice_coords(self, v: Weight) -> tuple[int, ...] | None:
        """Integer coordinates of ``v`` over the simple roots, or None."""
        return self._root_solver.solve_int(v)

    def dominance_leq(self, a: Weight, b: Weight) -> bool:
        """True iff b - a is a nonnegative integer sum of simple roots."""
        coeffs = self.root_lattice_coords(wsub(b, a))
        return coeffs is not None and all(c >= 0 for c in coeffs)

    # -- classical data ------------------------------------------------------

    def highest_root(self, component: int) -> Root:
        """The dominance-maximal positive root of one component."""
        if not 0 <= component < self.num_components:
            raise ValueError(f"no component {component}")
        candidates = [r for r in self.roots if r.component == component and r.height > 0]
        best = max(candidates, key=lambda r: r.height)
        assert sum(1 for r in candidates if r.height == best.height) == 1
        return best

    def weyl_dim(self, lam: Weight) -> int:
        """Weyl degree formula: prod <lam+rho, a^vee> / <rho, a^vee>, exactly."""
        if not self.is_dominant(lam):
            raise NotDominant(f"{lam} is not dominant")
        num = 1
        den = 1
        for a in self.positive_roots:
            h = a.coroot_height
            num *= dot(lam, a.coroot) + h
            den *= h
        assert num % den == 0
        return num // den


# ---------------------------------------------------------------------------
# Construction from a Dynkin specification


def _component_roots(cartan, d):
    """All roots of one irreducible component as simple-coefficient vectors.

    Closure of the simple roots under all simple reflections; finite root
    systems are exactly the Weyl orbits of their simple roots.
    """
    rank = len(cartan)
    seen = {tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for c in frontier:
            for i in range(rank):
                pairing = sum(cartan[i][j] * c[j] for j in range(rank))
                img = tuple(
                    c[j] - pairing if j == i else c[j] for j in range(rank)
                )
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen


def build_root_datum(spec: DynkinSpec | str) -> RootDatum:
    """Build the simply-connected root datum of a Dynkin specification.

    Positive roots are generated from the simple roots by reflection closure
    and listed in a deterministic order: by component, then height, then
    lexicographic simple coefficients.
    """
    if isinstance(spec, str):
        spec = parse_dynkin_spec(spec)
    n = spec.rank
    offsets = []
    pos = 0
    for _, rank in spec.components:
        offsets.append(pos)
        pos += rank
    all_roots: list[Root] = []
    cartan_blocks: list[list[list[int]]] = []
    for comp, (family, rank) in enumerate(spec.components):
        cartan, d = _cartan_and_symmetrizer(family, rank)
        cartan_blocks.append(cartan)
        off = offsets[comp]
        for coeffs in sorted(_component_roots(cartan, d), key=lambda c: (sum(c), c)):
            local_coords = [
                sum(cartan[k][j] * coeffs[j] for j in range(rank)) for k in range(rank)
            ]
            coords = [0] * n
            coords[off : off + rank] = local_coords
            form_local = [coeffs[j] * d[j] for j in range(rank)]
            normsq = sum(f * x for f, x in zip(form_local, local_coords))
            assert normsq > 0
            coroot_local = []
            for j in range(rank):
                num = coeffs[j] * 2 * d[j]
                assert num % normsq == 0
                coroot_local.append(num // normsq)
            coroot = [0] * n
            coroot[off : off + rank] = coroot_local
            form = [0] * n
            form[off : off + rank] = form_local
            all_roots.append(
                Root(
                    coords=tuple(coords),
                    simple_coeffs=tuple(coeffs),
                    component=comp,
                    coroot=tuple(coroot),
                    coroot_coeffs=tuple(coroot_local),
                    form=tuple(form),
                )
            )
    all_roots.sort(key=lambda r: (r.component, r.height, r.simple_coeffs))
    index_of = {r.coords: i for i, r in enumerate(all_roots)}
    simple_indices = []
    for comp, (family, rank) in enumerate(spec.components):
        cartan = cartan_blocks[comp]
        off = offsets[comp]
        ixs = []
        for j in range(rank):
            coords = [0] * n
            coords[off : off + rank] = [cartan[k][j] for k in range(rank)]
            ixs.append(index_of[tuple(coords)])
        simple_indices.append(tuple(ixs))
    full_cartan = [[0] * spec.semisimple_rank for _ in range(spec.semisimple_rank)]
    row = 0
    for comp, block in enumerate(cartan_blocks):
        size = len(block)
        for i in range(size):
            for j in range(size):
                full_cartan[row + i][row + j] = block[i][j]
        row += size
    rho = tuple([1] * spec.semisimple_rank + [0] * spec.extra_torus_rank)
    return RootDatum(
        spec=spec,
        n=n,
        roots=all_roots,
        simple_indices=simple_indices,
        cartan=full_cartan,
        rho=rho,
    )


# ---------------------------------------------------------------------------
# Sub-data (reductive quotients inside the ambient lattice)


def sub_root_datum(ambient: RootDatum, coords_subset) -> RootDatum:
    """The root datum spanned by a closed symmetric subset of ambient roots.

    The positive system is inherited from the ambient one; the simple roots
    are its indecomposable elements.  Coroots and the invariant form are
    inherited verbatim, so characters over the sub-datum live in the same
    lattice as characters over the ambient datum.
    """
    subset = {tuple(c) for c in coords_subset}
    members = [r for r in ambient.roots if r.coords in subset]
    assert len(members) == len(subset), "subset contains non-roots"
    positives = [r for r in members if r.height > 0]
    pos_coords = {r.coords for r in positives}
    simples = [
        r
        for r in positives
        if not any(
            wsub(r.coords, s.coords) in pos_coords and s.coords != r.coords
            for s in positives
        )
    ]
    simples.sort(key=lambda r: ambient.root_order_index(r.coords))
    for a, b in itertools.combinations(simples, 2):
        assert dot(a.coords, b.coroot) <= 0, "indecomposables do not form a base"
    # connected components of the induced Dynkin graph
    comp_of = list(range(len(simples)))

    def find(i):
        while comp_of[i] != i:
            comp_of[i] = comp_of[comp_of[i]]
            i = comp_of[i]
        return i

    for i, j in itertools.combinations(range(len(simples)), 2):
        if dot(simples[i].coords, simples[j].coroot) != 0:
            comp_of[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(len(simples)):
        groups.setdefault(find(i), []).append(i)
    ordered_groups = sorted(groups.values(), key=lambda g: g[0])
    flat_order = [i for g in ordered_groups for i in g]
    simples = [simples[i] for i in flat_order]
    comp_index = {}
    local_index = {}
    start = 0
    for comp, g in enumerate(ordered_groups):
        for offset in range(len(g)):
            comp_index[start + offset] = comp
            local_index[start + offset] = offset
        start += len(g)
    comp_sizes = [len(g) for g in ordered_groups]
    root_solver = _LinSolver([r.coords for r in simples])
    coroot_solver = _LinSolver([r.coroot for r in simples])
    new_roots: list[Root] = []
    for r in members:
        coeffs = root_solver.solve_int(r.coords)
        cor_coeffs = coroot_solver.solve_int(r.coroot)
        assert coeffs is not None and cor_coeffs is not None
        assert all(c >= 0 for c in coeffs) or all(c <= 0 for c in coeffs)
        support = [i for i, c in enumerate(coeffs) if c != 0]
        comp = comp_index[support[0]] if support else 0
        assert all(comp_index[i] == comp for i in support)
        local = [0] * comp_sizes[comp] if comp_sizes else []
        cor_local = [0] * comp_sizes[comp] if comp_sizes else []
        for i in support:
            local[local_index[i]] = coeffs[i]
            cor_local[local_index[i]] = cor_coeffs[i]
        new_roots.append(
            Root(
                coords=r.coords,
                simple_coeffs=tuple(local),
                component=comp,
                coroot=r.coroot,
                coroot_coeffs=tuple(cor_local),
                form=r.form,
            )
        )
    new_roots.sort(key=lambda r: (r.component, r.height, r.simple_coeffs))
    index_of = {r.coords: i for i, r in enumerate(new_roots)}
    simple_indices = []
    start = 0
    for size in comp_sizes:
        simple_indices.append(
            tuple(index_of[simples[start + j].coords] for j in range(size))
        )
        start += size
    k = len(simples)
    cartan = [
        [dot(simples[j].coords, simples[i].coroot) for j in range(k)] for i in range(k)
    ]
    return RootDatum(
        spec=None,
        n=ambient.n,
        roots=new_roots,
        simple_indices=simple_indices,
        cartan=cartan,
        rho=None,
    )


# ---------------------------------------------------------------------------
# Classification of an abstract datum back into a Dynkin specification


def classify_cartan(cartan) -> tuple[str, int]:
    """Name one connected Cartan matrix.  Rank-2 double-edge systems are
    reported as C2 (the B2 datum is the same system with nodes swapped)."""
    k = len(cartan)
    if k == 1:
        return ("A", 1)
    prods = {}
    for i in range(k):
        for j in range(i + 1, k):
            if cartan[i][j] != 0:
                prods[(i, j)] = cartan[i][j] * cartan[j][i]
    if any(m == 3 for m in prods.values()):
        assert k == 2
        return ("G", 2)
    degree = [0] * k
    for i, j in prods:
        degree[i] += 1
        degree[j] += 1
    doubles = [e for e, m in prods.items() if m == 2]
    if doubles:
        assert len(doubles) == 1
        if k == 2:
            return ("C", 2)
        (i, j) = doubles[0]
        short = i if cartan[i][j] == -2 else j
        long = j if short == i else i
        assert max(degree) <= 2
        if degree[short] == 1:
            return ("B", k)
        if degree[long] == 1:
            return ("C", k)
        assert k == 4
        return ("F", 4)
    if max(degree) <= 2:
        return ("A", k)
    hubs = [i for i in range(k) if degree[i] == 3]
    assert len(hubs) == 1
    hub = hubs[0]
    adjacency = {i: [] for i in range(k)}
    for i, j in prods:
        adjacency[i].append(j)
        adjacency[j].append(i)
    lengths = []
    for start in adjacency[hub]:
        length = 1
        prev, cur = hub, start
        while True:
            nxt = [x for x in adjacency[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        lengths.append(length)
    lengths.sort()
    if lengths[:2] == [1, 1]:
        return ("D", k)
    if lengths == [1, 2, 2]:
        return ("E", 6)
    if lengths == [1, 2, 3]:
        return ("E", 7)
    if lengths == [1, 2, 4]:
        return ("E", 8)
    raise ValueError(f"unrecognized Cartan matrix {cartan}")


def classify_root_datum(datum: RootDatum) -> DynkinSpec:
    """The Dynkin type of a datum, torus rank inferred from the ambient rank."""
    components = []
    for comp in range(datum.num_components):
        simples = datum.component_simple_roots(comp)
        cartan = [
            [dot(b.coords, a.coroot) for b in simples] for a in simples
        ]
        components.append(classify_cartan(cartan))
    components.sort()
    semisimple = sum(rank for _, rank in components)
    return DynkinSpec(tuple(components), datum.n - semisimple)
