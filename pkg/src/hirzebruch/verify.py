"""Named verification suites.

Each suite cross-computes a family of identities by two independent routes
and reports one record per identity: (name, passed, detail), with the
offending values rendered when a check fails.  The registry is what the
command line's ``verify`` command runs; the acceptance tests run the same
suites, so a perturbation anywhere in the pipeline shows up in both.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement

from .rings import LaurentY, render_y
from .hodge import HodgeDiamond
from . import motivic
from . import spaces as sp
from . import bundles
from .bundles import k_dual
from .transforms import (
    chi_y_genus,
    csm_arrangement,
    homology_dual,
    mhc_y,
    mht,
    pullback_smooth,
    pushforward,
    specialize_minus_one,
)


class Check:
    __slots__ = ("name", "ok", "detail")

    def __init__(self, name, ok, detail=""):
        self.name = name
        self.ok = bool(ok)
        self.detail = detail

    def as_tuple(self):
        return (self.name, "pass" if self.ok else "fail", self.detail)


def _eq(name, got, want, render=str):
    ok = got == want
    detail = "" if ok else f"got {render(got)}, expected {render(want)}"
    return Check(name, ok, detail)


def _chi_projective(n):
    return LaurentY({p: (-1) ** p for p in range(n + 1)})


def suite_ghrr(order=8):
    """Genus of projective spaces and of the quartic surface, via the
    transformation pipeline against directly known values."""
    checks = []
    for n in range(1, 5):
        got = chi_y_genus(sp.projective(n))
        checks.append(_eq(f"chi_y(P{n})", got, _chi_projective(n), render_y))
    quartic = sp.hypersurface(3, 4)
    chi = chi_y_genus(quartic)
    checks.append(_eq("chi_y(quartic surface)", chi,
                      LaurentY({0: 2, 1: -20, 2: 2}), render_y))
    checks.append(_eq("quartic Euler number", chi(Fraction(-1)), 24))
    checks.append(_eq("quartic arithmetic genus", chi(Fraction(0)), 2))
    checks.append(_eq("quartic signature", chi(Fraction(1)), -16))
    return checks


def suite_series_limits(order=8):
    """The one-parameter genus series specializes coefficient-wise to the
    Chern, Todd, and L series at y = -1, 0, 1."""
    hz = bundles.genus_series("hirzebruch", order)
    checks = []
    for value, kind in ((-1, "chern"), (0, "todd"), (1, "lclass")):
        want = bundles.genus_series(kind, order)
        got = hz.at_y(value)
        ok = all(g == w for g, w in zip(got, want.coeffs))
        detail = "" if ok else "; ".join(
            f"x^{i}: {render_y(g)} vs {render_y(w)}"
            for i, (g, w) in enumerate(zip(got, want.coeffs)) if g != w
        )
        checks.append(Check(f"hirzebruch(y={value}) == {kind} to order {order}", ok, detail))
    return checks


def _bundle_family(base, max_rank=3, max_twist=3):
    for r in range(1, max_rank + 1):
        for twists in combinations_with_replacement(range(-max_twist, max_twist + 1), r):
            yield twists, sp.sum_of_line_bundles(base, twists)


def suite_multiplicativity(order=8):
    """chi_y of a projective bundle equals the fiber genus times the base
    genus, for split bundles of rank <= 3 over P1 and P2."""
    checks = []
    for base_n in (1, 2):
        base = sp.projective(base_n)
        chi_base = chi_y_genus(base)
        for twists, E in _bundle_family(base):
            tot = sp.projective_bundle(base, E)
            got = chi_y_genus(tot)
            want = _chi_projective(E.rank - 1) * chi_base
            checks.append(_eq(f"chi_y(P(O({','.join(map(str, twists))})) over P{base_n})",
                              got, want, render_y))
    return checks


def suite_updown(order=8):
    """Pushing the total-space class down a bundle projection yields the
    fiber genus times the base class, as a full class identity."""
    checks = []
    for base_n in (1, 2):
        base = sp.projective(base_n)
        mhc_base = mhc_y(base)
        for twists, E in _bundle_family(base):
            tot = sp.projective_bundle(base, E)
            pi = sp.bundle_projection(tot)
            got = pushforward(pi, mhc_y(tot))
            want = mhc_base * _chi_projective(E.rank - 1)
            ok = got == want
            detail = "" if ok else f"rank {got.rank_poly} vs {want.rank_poly}"
            checks.append(Check(
                f"pushforward(P(O({','.join(map(str, twists))})) over P{base_n})", ok, detail))
    return checks


def suite_vrr(order=8):
    """Smooth pullback reproduces the total-space class for the built-in
    projections."""
    checks = []
    cases = []
    for a, b in ((1, 1), (1, 2), (2, 2)):
        prod = sp.product(sp.projective(a), sp.projective(b))
        cases.append((sp.product_projection(prod, 0), sp.projective(a), prod))
    for base_n, twists in ((1, (0, 1)), (1, (-1, 2)), (2, (0, 1)), (1, (0, -1, 2))):
        base = sp.projective(base_n)
        E = sp.sum_of_line_bundles(base, twists)
        tot = sp.projective_bundle(base, E)
        cases.append((sp.bundle_projection(tot), base, tot))
    for m, base, tot in cases:
        got = pullback_smooth(m, mhc_y(base))
        want = mhc_y(tot)
        checks.append(Check(f"VRR along {tot.name} -> {base.name}", got == want,
                            "" if got == want else f"rank {got.rank_poly} vs {want.rank_poly}"))
    idm = sp.identity_map(sp.projective(2))
    c = mhc_y(sp.projective(2))
    checks.append(_eq("VRR along the identity", pullback_smooth(idm, c) == c, True))
    return checks


def _random_diamond(rng):
    entries = {}
    for _ in range(rng.randint(1, 6)):
        entries[(rng.randint(-3, 3), rng.randint(-3, 3))] = rng.randint(-4, 4)
    return HodgeDiamond(entries)


def suite_duality(order=8):
    """chi_y duality on random tables, Grothendieck duality on K-classes of
    smooth models, and its consistency with the homology-ledger duality."""
    checks = []
    rng = random.Random(20260808)
    bad = 0
    for _ in range(100):
        d = _random_diamond(rng)
        if d.dual().chi_y() != d.chi_y().invert_y():
            bad += 1
    checks.append(Check("chi_y(dual) == chi_{1/y} on 100 random tables", bad == 0,
                        "" if bad == 0 else f"{bad} failures"))
    spaces = [sp.projective(1), sp.projective(2),
              sp.product(sp.projective(1), sp.projective(1))]
    for space in spaces:
        c = mhc_y(space)
        want = c * LaurentY({-space.dim: (-1) ** space.dim})
        checks.append(_eq(f"k_dual on {space.name} is (-y)^(-{space.dim}) times the class",
                          k_dual(c) == want, True))
        checks.append(_eq(f"k_dual is an involution on {space.name}",
                          k_dual(k_dual(c)) == c, True))
        lhs = homology_dual(mht(c, normalized=False))
        rhs = mht(k_dual(c), normalized=False)
        checks.append(_eq(f"homology duality matches K duality on {space.name}",
                          lhs == rhs, True))
    return checks


def suite_chern_limit(order=8):
    """The normalized transformation of an arrangement complement has no
    pole at y = -1 and specializes there to the inclusion-exclusion Chern
    class, for all n <= 3, 0 <= k <= n+1."""
    checks = []
    for n in range(1, 4):
        for k in range(0, n + 2):
            arr = sp.with_arrangement(sp.projective(n), k)
            got = specialize_minus_one(mht(mhc_y(arr, "open_complement")))
            want = csm_arrangement(n, k)
            checks.append(Check(f"y=-1 class of P{n} minus {k} hyperplanes", got == want,
                                "" if got == want else f"{got!r} vs {want!r}"))
    return checks


def suite_arrangements(order=8):
    """Compact-support versus ordinary genus duality for torus powers and
    arrangement complements: chi^c_y = (-y)^dim chi_{1/y}."""
    checks = []
    gm1 = sp.with_arrangement(sp.projective(1), 2)
    for n in range(1, 4):
        gm = sp.product(*[gm1] * n)
        ordinary = chi_y_genus(gm, "open_complement")
        compact = (motivic.torus() ** n).chi_y()
        want = ordinary.invert_y() * LaurentY({n: (-1) ** n})
        checks.append(_eq(f"compact-support duality for Gm^{n}", compact, want, render_y))
    for n in range(1, 4):
        for k in range(0, n + 2):
            arr = sp.with_arrangement(sp.projective(n), k)
            ordinary = chi_y_genus(arr, "open_complement")
            compact = motivic.arrangement_complement(n, k).chi_y()
            want = ordinary.invert_y() * LaurentY({n: (-1) ** n})
            checks.append(_eq(f"compact-support duality for P{n} minus {k} hyperplanes",
                              compact, want, render_y))
    checks.append(_eq("2-line complement, compactly supported genus",
                      motivic.arrangement_complement(2, 2).chi_y(),
                      LaurentY({1: 1, 2: 1}), render_y))
    checks.append(_eq("2-line complement, ordinary genus",
                      chi_y_genus(sp.with_arrangement(sp.projective(2), 2), "open_complement"),
                      LaurentY({0: 1, 1: 1}), render_y))
    return checks


def suite_integrality(order=8):
    """Every genus the other suites produce lies in Z[y] after cancelling
    the (1+y) denominators."""
    genera = []
    for n in range(1, 5):
        genera.append((f"P{n}", chi_y_genus(sp.projective(n))))
    genera.append(("quartic surface", chi_y_genus(sp.hypersurface(3, 4))))
    for base_n in (1, 2):
        base = sp.projective(base_n)
        for twists, E in _bundle_family(base):
            tot = sp.projective_bundle(base, E)
            genera.append((tot.name + f"O({twists})", chi_y_genus(tot)))
    gm1 = sp.with_arrangement(sp.projective(1), 2)
    for n in range(1, 4):
        genera.append((f"Gm^{n}", chi_y_genus(sp.product(*[gm1] * n), "open_complement")))
        for k in range(0, n + 2):
            arr = sp.with_arrangement(sp.projective(n), k)
            genera.append((f"P{n} minus {k}H", chi_y_genus(arr, "open_complement")))
    checks = []
    bad = [(name, g) for name, g in genera if not g.is_integral_polynomial()]
    checks.append(Check(f"all {len(genera)} computed genera lie in Z[y]", not bad,
                        "" if not bad else "; ".join(f"{n}: {render_y(g)}" for n, g in bad)))
    return checks


SUITES = {
    "ghrr": suite_ghrr,
    "series-limits": suite_series_limits,
    "multiplicativity": suite_multiplicativity,
    "vrr": suite_vrr,
    "updown": suite_updown,
    "duality": suite_duality,
    "chern-limit": suite_chern_limit,
    "arrangements": suite_arrangements,
    "integrality": suite_integrality,
}


def run_suites(names, order=8):
    """Run the named suites (or all of them); returns {suite: [Check]}."""
    if names in ("all", None):
        names = list(SUITES)
    elif isinstance(names, str):
        names = [names]
    results = {}
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
        results[name] = SUITES[name](order=order)
    return results


def all_passed(results):
    return all(c.ok for checks in results.values() for c in checks)
