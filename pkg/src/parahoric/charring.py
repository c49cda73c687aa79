"""The Weyl-invariant character ring, with exact integer arithmetic.

A :class:`Character` stores a W-invariant multiplicity function in
orbit-compressed form: a finite map from dominant weights to positive
integers, the full support being the union of their Weyl orbits.  The basis
characters ``chi(lam)`` (characters of the standard/Weyl modules) are
computed by Freudenthal's multiplicity recursion on the dominant cone; every
division in that recursion is asserted exact, so the results are certified
integers.  The Weyl degree formula lives in :mod:`parahoric.rootdata` and is
kept independent as a cross-check.

A :class:`VirtualChiSum` is an integer combination of the ``chi(lam)``; the
transition matrix between orbit sums and the chi-basis is unitriangular for
the dominance order, which makes the greedy expansion of
:func:`chi_expand` exact and order-independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rootdata import (
    NotDominant,
    RootDatum,
    Weight,
    dot,
    parse_weight_key,
    wadd,
    weight_key,
    wneg,
    wsub,
)

__all__ = [
    "Character",
    "VirtualChiSum",
    "DatumMismatch",
    "chi_char",
    "dim",
    "add",
    "scale",
    "tensor",
    "dual",
    "exterior_square",
    "chi_normalize",
    "chi_expand",
    "chi_expand_map",
    "evaluate_chi_sum",
    "character_to_json",
    "character_from_json",
    "using_disk_cache",
]


class DatumMismatch(ValueError):
    """Raised when combining characters over different root data."""


_active_disk_cache = None


class using_disk_cache:
    """Context manager installing a persistent chi-character cache.

    The cache object needs ``get(spec_string, lam) -> mult | None`` and
    ``put(spec_string, lam, mult)``.  It is consulted only for data built
    from a Dynkin specification; results are identical with or without it.
    """

    def __init__(self, cache):
        self.cache = cache
        self.previous = None

    def __enter__(self):
        global _active_disk_cache
        self.previous = _active_disk_cache
        _active_disk_cache = self.cache
        return self.cache

    def __exit__(self, *exc):
        global _active_disk_cache
        _active_disk_cache = self.previous
        return False


@dataclass(frozen=True)
class Character:
    """Orbit-compressed W-invariant character: dominant weight -> mult > 0."""

    datum: RootDatum
    mult: dict[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        assert all(m > 0 for m in self.mult.values())
        assert all(self.datum.is_dominant(w) for w in self.mult)

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and self.datum.same_datum(other.datum)
            and self.mult == other.mult
        )

    def items(self):
        return self.mult.items()

    def __repr__(self):
        body = " + ".join(
            f"{m}*[{weight_key(w)}]" for w, m in sorted(self.mult.items())
        )
        return f"Character({body or '0'})"


@dataclass(frozen=True)
class VirtualChiSum:
    """Finitely supported integer combination of chi-basis elements."""

    coeffs: dict[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        assert all(c != 0 for c in self.coeffs.values())

    def __eq__(self, other):
        return isinstance(other, VirtualChiSum) and self.coeffs == other.coeffs

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def __repr__(self):
        body = " + ".join(
            f"{c}*chi({weight_key(w)})" for w, c in sorted(self.coeffs.items())
        )
        return f"VirtualChiSum({body or '0'})"


def _check_same(ch1: Character, ch2: Character):
    if not ch1.datum.same_datum(ch2.datum):
        raise DatumMismatch("characters live over different root data")


# ---------------------------------------------------------------------------
# Freudenthal recursion


def _dominant_below(rd: RootDatum, lam: Weight) -> list[tuple[Weight, int]]:
    """All dominant mu <= lam with the height of lam - mu, by brute box scan
    over the root-lattice coordinates of lam - w0(lam)."""
    if rd.semisimple_rank == 0:
        return [(lam, 0)]
    low = rd.antidominant_conjugate(lam)
    cmax = rd.root_lattice_coords(wsub(lam, low))
    assert cmax is not None and all(c >= 0 for c in cmax)
    simples = rd.simple_roots
    out = []

    def scan(idx, current, height):
        if idx == len(simples):
            if rd.is_dominant(current):
                out.append((current, height))
            return
        mu = current
        for c in range(cmax[idx] + 1):
            scan(idx + 1, mu, height + c)
            mu = wsub(mu, simples[idx].coords)

    scan(0, lam, 0)
    return out


def chi_char(rd: RootDatum, lam: Weight, disk_cache=None) -> Character:
    """Character of the standard module with highest weight ``lam``.

    Multiplicities come from Freudenthal's recursion run over the dominant
    cone only; a non-dominant weight contributes through its dominant
    conjugate.  The divisor ``(lam+mu+2rho, lam-mu)`` is assembled from the
    per-root form functionals, so the whole computation is integer-exact.
    """
    if not rd.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    cached = rd._chi_cache.get(lam)
    if cached is not None:
        return Character(rd, dict(cached))
    if disk_cache is None:
        disk_cache = _active_disk_cache
    if disk_cache is not None and rd.spec_string is not None:
        stored = disk_cache.get(rd.spec_string, lam)
        if stored is not None:
            rd._chi_cache[lam] = dict(stored)
            return Character(rd, dict(stored))
    candidates = sorted(_dominant_below(rd, lam), key=lambda t: t[1])
    mult: dict[Weight, int] = {}
    positives = rd.positive_roots
    for mu, height in candidates:
        if height == 0:
            mult[mu] = 1
            continue
        total = 0
        for alpha in positives:
            nu = mu
            while True:
                nu = wadd(nu, alpha.coords)
                m = mult.get(rd.dominant_conjugate(nu))
                if m is None:
                    break
                total += m * dot(alpha.form, nu)
        diff = wsub(lam, mu)
        coeffs = rd.root_lattice_coords(diff)
        lam_mu = wadd(lam, mu)
        denom = sum(
            c * (dot(simple.form, lam_mu) + two_rho)
            for c, simple, two_rho in zip(coeffs, rd.simple_roots, rd._two_rho_form)
        )
        assert denom > 0
        assert (2 * total) % denom == 0
        m_mu = (2 * total) // denom
        assert m_mu > 0
        mult[mu] = m_mu
    rd._chi_cache[lam] = dict(mult)
    if disk_cache is not None and rd.spec_string is not None:
        disk_cache.put(rd.spec_string, lam, mult)
    return Character(rd, mult)


# ---------------------------------------------------------------------------
# Ring operations


def dim(ch: Character) -> int:
    """Total dimension: multiplicity times orbit size, summed."""
    return sum(m * ch.datum.orbit_size(w) for w, m in ch.mult.items())


def expand_full(ch: Character) -> dict[Weight, int]:
    """Full weight multiplicity function (orbit-expanded)."""
    full: dict[Weight, int] = {}
    for w, m in ch.mult.items():
        for v in ch.datum.weyl_orbit(w):
            full[v] = full.get(v, 0) + m
    return full


def _compress(rd: RootDatum, full: dict[Weight, int]) -> Character:
    mult = {w: m for w, m in full.items() if m and rd.is_dominant(w)}
    return Character(rd, mult)


def add(ch1: Character, ch2: Character) -> Character:
    _check_same(ch1, ch2)
    out = dict(ch1.mult)
    for w, m in ch2.mult.items():
        out[w] = out.get(w, 0) + m
    return Character(ch1.datum, out)


def scale(ch: Character, k: int) -> Character:
    if k < 0:
        raise ValueError("scale factor must be nonnegative")
    if k == 0:
        return Character(ch.datum, {})
    return Character(ch.datum, {w: k * m for w, m in ch.mult.items()})


def tensor(ch1: Character, ch2: Character) -> Character:
    """Tensor product: full-orbit convolution, then orbit re-compression."""
    _check_same(ch1, ch2)
    full1 = expand_full(ch1)
    full2 = expand_full(ch2)
    out: dict[Weight, int] = {}
    for w1, m1 in full1.items():
        for w2, m2 in full2.items():
            key = wadd(w1, w2)
            out[key] = out.get(key, 0) + m1 * m2
    return _compress(ch1.datum, out)


def dual(ch: Character) -> Character:
    """Contragredient character: negate every weight, re-compress."""
    out: dict[Weight, int] = {}
    for w, m in ch.mult.items():
        key = ch.datum.dominant_conjugate(wneg(w))
        out[key] = out.get(key, 0) + m
    return Character(ch.datum, out)


def exterior_square(ch: Character) -> Character:
    """Lambda^2 of the underlying weight multiset; dim d -> d(d-1)/2."""
    full = sorted(expand_full(ch).items())
    out: dict[Weight, int] = {}
    for i, (w1, m1) in enumerate(full):
        pairs_same = m1 * (m1 - 1) // 2
        if pairs_same:
            key = wadd(w1, w1)
            out[key] = out.get(key, 0) + pairs_same
        for w2, m2 in full[i + 1 :]:
            key = wadd(w1, w2)
            out[key] = out.get(key, 0) + m1 * m2
    return _compress(ch.datum, out)


# ---------------------------------------------------------------------------
# The chi basis


def chi_normalize(rd: RootDatum, mu: Weight):
    """Normalize chi at an arbitrary weight via the dot action.

    Returns ``None`` when mu + rho is singular (chi vanishes), else the pair
    ``(sign, dominant weight)`` with ``chi(mu) = sign * chi(dominant)``.
    Pairings with rho enter only through coroot heights, so this works over
    quotient data where rho itself is not a lattice point.
    """
    w = mu
    sign = 1
    while True:
        progressed = False
        for a in rd.simple_roots:
            shifted = dot(w, a.coroot) + 1  # <mu + rho, a^vee>
            if shifted == 0:
                return None
            if shifted < 0:
                w = wsub(w, tuple(shifted * c for c in a.coords))
                sign = -sign
                progressed = True
                break
        if not progressed:
            return sign, w


def chi_expand_map(rd: RootDatum, mult: dict[Weight, int]) -> VirtualChiSum:
    """Expand a compressed W-invariant integer function in the chi basis.

    Greedy: repeatedly take a dominance-maximal supported weight (ties broken
    by lexicographically largest coordinates), record its coefficient, and
    subtract that multiple of the corresponding chi character.  Unitriangular
    transition guarantees exactness and termination.
    """
    work = {w: m for w, m in mult.items() if m != 0}
    assert all(rd.is_dominant(w) for w in work)
    out: dict[Weight, int] = {}
    while work:
        maximal = [
            w
            for w in work
            if not any(v != w and rd.dominance_leq(w, v) for v in work)
        ]
        top = max(maximal)
        c = work[top]
        out[top] = c
        for w, m in chi_char(rd, top).mult.items():
            new = work.get(w, 0) - c * m
            if new:
                work[w] = new
            else:
                work.pop(w, None)
    return VirtualChiSum(out)


def chi_expand(ch: Character) -> VirtualChiSum:
    return chi_expand_map(ch.datum, ch.mult)


def evaluate_chi_sum(rd: RootDatum, vcs: VirtualChiSum) -> dict[Weight, int]:
    """Evaluate an integer chi-combination to a compressed weight function
    (entries may be negative; an actual module character is nonnegative)."""
    out: dict[Weight, int] = {}
    for w, c in vcs.coeffs.items():
        for v, m in chi_char(rd, w).mult.items():
            new = out.get(v, 0) + c * m
            if new:
                out[v] = new
            else:
                out.pop(v, None)
    return out


# ---------------------------------------------------------------------------
# JSON forms


def character_to_json(mult: dict[Weight, int]) -> dict[str, int]:
    return {weight_key(w): m for w, m in sorted(mult.items())}


def character_from_json(data: dict[str, int]) -> dict[Weight, int]:
    return {parse_weight_key(k): v for k, v in data.items()}
