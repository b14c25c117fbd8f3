"""Named verification suites behind the `verify` CLI subcommand.

Each suite returns a report dict {"suite", "cases", "summary"}; a case
records its inputs, the expected and obtained values (elements in the
canonical grammar) and a pass flag.  Failures carry the first
counterexample found.  Grids are iterated in sorted order and any
randomness is drawn from the caller's seeded generator, so identical
invocations produce identical reports.
"""

from __future__ import annotations

import itertools
import random

from . import cells, localization, pullback, series
from .grammar import format_element
from .ring import RingContext, cohomological_degree, omega_top_part
from .weights import (betti_b1, connected_components,
                      decreasing_vectors, stabilizer, tuple_support)

DEFAULTS = {
    "n_values": (2, 3),
    "genus_values": (0, 1, 2),
    "max_co": 3,
    "max_twist_degree": 4,
    "rank": 3,
    "max_degree": 6,
    "series_max_t": 10,
    "random_cases": 25,
    "seed": 0,
}

SUITE_NAMES = ("recursion", "pullback", "localization", "series", "ranks")


def _case(inputs, expected, got, ok):
    return {"inputs": inputs, "expected": expected, "got": got, "pass": bool(ok)}


def _residual_case(inputs, residual, detail=""):
    ok = residual.is_zero()
    got = "0" if ok else (detail + format_element(residual) if detail else format_element(residual))
    return _case(inputs, "0", got, ok)


# -- pullback -----------------------------------------------------------------

def suite_pullback(params, rng=None):
    cases = []
    for g in params["genus_values"]:
        for n in params["n_values"]:
            ctx = RingContext(genus=g, factors=n)
            first_bad = None
            checked = 0
            for u in decreasing_vectors(n, None, max_co=params["max_co"]):
                st = stabilizer(u)
                for d in range(params["max_twist_degree"] + 1):
                    for a in pullback.invariant_letter_classes(ctx, d, st):
                        checked += 1
                        lhs = pullback.quot_pullback(ctx, u, a)
                        rhs = pullback.quot_pullback_combinatorial(ctx, u, a)
                        if lhs != rhs and first_bad is None:
                            first_bad = "u=%s a=%s residual=%s" % (
                                list(u), format_element(a), format_element(lhs - rhs))
            cases.append(_case(
                {"check": "combinatorial-vs-symmetrization", "genus": g, "factors": n,
                 "max_co": params["max_co"], "classes": checked},
                "0", first_bad or "0", first_bad is None))
    cases.extend(_diagonal_cases(params))
    return cases


def _diagonal_cases(params):
    figures = [
        (({1, 2}, {2, 3}), 0),
        (({1, 2}, {2, 3}, {1, 3}), 1),
        (({1, 2}, {2, 3}, {1, 2, 3}), 2),
    ]
    cases = []
    for sets, expected in figures:
        got = betti_b1(sets)
        cases.append(_case({"check": "incidence-betti", "sets": [sorted(s) for s in sets]},
                           expected, got, got == expected))
    ground = 4
    subsets = [frozenset(s) for size in range(1, ground + 1)
               for s in itertools.combinations(range(1, ground + 1), size)]
    for g in params["genus_values"]:
        ctx = RingContext(genus=g, factors=ground)
        first_bad = None
        checked = 0
        from .ring import point_class, small_diagonal
        for count in (1, 2, 3):
            for sets in itertools.product(subsets, repeat=count):
                if len(connected_components(sets)) != 1:
                    continue
                checked += 1
                product = ctx.one()
                for s in sets:
                    product = product * small_diagonal(ctx, s)
                b1 = betti_b1(sets)
                members = tuple_support(sets)
                if b1 == 0:
                    expected = small_diagonal(ctx, members)
                elif b1 == 1:
                    expected = (2 - 2 * g) * point_class(ctx, members)
                else:
                    expected = ctx.zero()
                if product != expected and first_bad is None:
                    first_bad = "sets=%s residual=%s" % (
                        [sorted(s) for s in sets], format_element(product - expected))
        cases.append(_case({"check": "diagonal-product-classification", "genus": g,
                            "ground": ground, "tuples": checked},
                           "0", first_bad or "0", first_bad is None))
    return cases


# -- recursion ----------------------------------------------------------------

def suite_recursion(params, rng=None):
    rng = rng or random.Random(params.get("seed", 0))
    cases = []
    order = min(params["series_max_t"], 6)
    for g in params["genus_values"]:
        for n in params["n_values"]:
            ctx = RingContext(genus=g, factors=n)
            first_bad = None
            for l in range(order + 1):
                direct = cells.cell_class_series(ctx, n, order)[l]
                closed = cells.cell_class_series_closed_form(ctx, n, order)[l]
                if direct != closed and first_bad is None:
                    first_bad = "power=%d residual=%s" % (l, format_element(direct - closed))
            cases.append(_case({"check": "series-vs-closed-form", "genus": g,
                                "factors": n, "order": order},
                               "0", first_bad or "0", first_bad is None))
    for g in params["genus_values"]:
        for n in params["n_values"]:
            ctx = RingContext(genus=g, factors=n)
            first_bad = None
            checked = 0
            for v in itertools.product(range(params["max_co"] + 1), repeat=n):
                if sum(v) > params["max_co"] or v[-1] < 1:
                    continue
                for m in range(1, n):
                    checked += 1
                    residual = cells.lower_index_step_residual(ctx, v, m)
                    if residual and first_bad is None:
                        first_bad = "v=%s m=%d residual=%s" % (
                            list(v), m, format_element(residual))
            cases.append(_case({"check": "cross-index-step", "genus": g, "factors": n,
                                "max_co": params["max_co"], "cases": checked},
                               "0", first_bad or "0", first_bad is None))
    cases.extend(_random_cross_index_cases(params, rng))
    cases.extend(_structural_cases(params))
    return cases


def _random_cross_index_cases(params, rng):
    count = params["random_cases"]
    if not count:
        return []
    n = 4
    first_bad = None
    for g, ctx in ((g, RingContext(genus=g, factors=n)) for g in params["genus_values"]):
        for _ in range(count):
            v = tuple(rng.randrange(0, 3) for _ in range(n - 1)) + (rng.randrange(1, 3),)
            m = rng.randrange(1, n)
            residual = cells.lower_index_step_residual(ctx, v, m)
            if residual and first_bad is None:
                first_bad = "genus=%d v=%s m=%d residual=%s" % (
                    g, list(v), m, format_element(residual))
    return [_case({"check": "cross-index-step-random", "factors": n,
                   "cases": count * len(params["genus_values"])},
                  "0", first_bad or "0", first_bad is None)]


def _structural_cases(params):
    cases = []
    for g in params["genus_values"]:
        for n in params["n_values"]:
            ctx = RingContext(genus=g, factors=n)
            bad_hom = None
            bad_top = None
            vectors = [v for v in itertools.product(range(params["max_co"] + 1), repeat=n)
                       if sum(v) <= params["max_co"]]
            for v in vectors:
                x = cells.cell_class(ctx, v)
                if cohomological_degree(x) != 2 * sum(v) and bad_hom is None:
                    bad_hom = "v=%s" % (list(v),)
                if omega_top_part(x) != ctx.monomial(omega=v) and bad_top is None:
                    bad_top = "v=%s got=%s" % (list(v), format_element(omega_top_part(x)))
            cases.append(_case({"check": "homogeneity", "genus": g, "factors": n,
                                "vectors": len(vectors)},
                               "degree == 2 co(v)", bad_hom or "ok", bad_hom is None))
            cases.append(_case({"check": "leading-omega-term", "genus": g, "factors": n},
                               "w^v", bad_top or "ok", bad_top is None))
            bad_prod = None
            pair_budget = min(params["max_co"] + 2, 5)
            small = [v for v in vectors if 0 < sum(v)]
            for v in small:
                for w in small:
                    if sum(v) + sum(w) > pair_budget:
                        continue
                    target = tuple(a + b for a, b in zip(v, w))
                    decomposition = cells.to_cell_basis(
                        cells.cell_class(ctx, v) * cells.cell_class(ctx, w))
                    top = decomposition.get(target)
                    if top != ctx.one() and bad_prod is None:
                        bad_prod = "v=%s w=%s leading=%s" % (
                            list(v), list(w), format_element(top or ctx.zero()))
                    if any(sum(u) > sum(v) + sum(w) for u in decomposition) and bad_prod is None:
                        bad_prod = "v=%s w=%s support too deep" % (list(v), list(w))
            cases.append(_case({"check": "filtration-product-law", "genus": g,
                                "factors": n, "budget": pair_budget},
                               "leading 1 at v+w", bad_prod or "ok", bad_prod is None))
            bad_mod = None
            for u in itertools.product(range(3), repeat=n - 1):
                if sum(u) > params["max_co"] - 1:
                    continue
                for l in range(1, params["max_co"] - sum(u) + 1):
                    for code in ctx.curve_basis():
                        residual = cells.module_recursion_residual(
                            ctx, u, l, ctx.letter_at(1, code))
                        if residual and bad_mod is None:
                            bad_mod = "u=%s l=%d residual=%s" % (
                                list(u), l, format_element(residual))
            cases.append(_case({"check": "module-recursion", "genus": g, "factors": n},
                               "0", bad_mod or "0", bad_mod is None))
    return cases


# -- localization ---------------------------------------------------------------

def suite_localization(params, rng=None):
    cases = []
    r = params["rank"]
    genus_values = [g for g in params["genus_values"] if g <= 1] or [0]
    for g in genus_values:
        for n in params["n_values"]:
            ctx = RingContext(genus=g, factors=n, rank=r)
            grid_v = [v for v in itertools.product(range(r), repeat=n)
                      if sum(v) <= params["max_co"]]
            grid_w = list(itertools.product(range(r), repeat=n))
            bad = {"top": None, "reverse": None, "vanish": None, "bound": None}
            for v in grid_v:
                x = cells.cell_class_equivariant(ctx, v)
                for w in grid_w:
                    restricted = localization.restrict_to_fixed_point(x, w)
                    dominated = all(a <= b for a, b in zip(v, w))
                    if dominated:
                        residual = (localization.top_term(restricted)
                                    - localization.top_term_product(ctx, v, w))
                        if (residual or localization.t_degree(restricted) != sum(v)) \
                                and bad["top"] is None:
                            bad["top"] = "v=%s w=%s" % (list(v), list(w))
                    elif localization.t_degree(restricted) == sum(v) \
                            and bad["reverse"] is None:
                        bad["reverse"] = "v=%s w=%s" % (list(v), list(w))
                    if not localization.vanishing_check(ctx, v, w) and bad["vanish"] is None:
                        bad["vanish"] = "v=%s w=%s got=%s" % (
                            list(v), list(w), format_element(restricted))
                    if sorted(v) == sorted(w) \
                            and not localization.degree_bound_check(ctx, v, w) \
                            and bad["bound"] is None:
                        bad["bound"] = "v=%s w=%s" % (list(v), list(w))
            for name, label in (("top", "top-term-product"),
                                ("reverse", "top-degree-implies-domination"),
                                ("vanish", "vanishing-criterion"),
                                ("bound", "t-degree-bound")):
                cases.append(_case({"check": label, "genus": g, "factors": n, "rank": r},
                                   "ok", bad[name] or "ok", bad[name] is None))
    return cases


# -- series ---------------------------------------------------------------------

def suite_series(params, rng=None):
    cases = []
    max_t = params["series_max_t"]
    for g in params["genus_values"]:
        for r in (1, 2, 3):
            residuals = series.quot_series_check(g, r, 4, max_t)
            bad = next((i for i, p in enumerate(residuals) if p), None)
            cases.append(_case({"check": "quot-series-product", "genus": g, "rank": r,
                                "max_length": 4, "max_t": max_t},
                               "0", "0" if bad is None else "s^%d: %s" % (bad, residuals[bad]),
                               bad is None))
        for r in (1, 2, 3):
            for n in (1, 2, 3, 4):
                residual = series.filt_presentation_check(g, r, n)
                cases.append(_case({"check": "filt-presentation", "genus": g,
                                    "rank": r, "factors": n},
                                   "0", "0" if not residual else str(residual),
                                   not residual))
    for g in (0, 1):
        report = series.infinite_limits_check(g, max_t)
        cases.append(_case({"check": "infinite-limit-stabilization", "genus": g,
                            "max_t": max_t},
                           "stable and matching", "ok" if report["pass"]
                           else str(report["failures"]), report["pass"]))
    for g in params["genus_values"]:
        bad = None
        for m in (0, 1, 2, 3):
            poly = series.symmetric_product_poincare(g, m)
            dims = _symmetric_invariant_dims(g, m, 2 * m)
            if series.poly_trim(dims) != poly and bad is None:
                bad = "m=%d got=%s expected=%s" % (m, dims, poly)
        cases.append(_case({"check": "symmetric-product-dimensions", "genus": g},
                           "projector dims", bad or "ok", bad is None))
    return cases


def _symmetric_invariant_dims(g, m, max_degree):
    """Dimensions of the symmetric invariants of m curve factors, degree by
    degree, via the averaging projector (an independent route to the
    symmetric-product Betti numbers)."""
    from fractions import Fraction
    from math import factorial
    from .ring import RingElement, letter_monomials
    from .weights import permutations as perms
    from .ring import permute_factors
    ctx = RingContext(genus=g, factors=m)
    dims = []
    for d in range(max_degree + 1):
        total = 0
        for sigma in perms(m):
            for letters in letter_monomials(ctx, d):
                mono = (letters, (0,) * m, ())
                image = permute_factors(sigma, RingElement(ctx, {mono: Fraction(1)}))
                total += image.coeffs.get(mono, 0)
        dims.append(int(Fraction(total, factorial(m))))
    return dims


# -- ranks ------------------------------------------------------------------------

def suite_ranks(params, rng=None):
    cases = []
    genus_values = [g for g in params["genus_values"] if g <= 1] or [0]
    for g in genus_values:
        for n in params["n_values"]:
            if n > 3:
                continue
            ctx = RingContext(genus=g, factors=n)
            bad = None
            for u in decreasing_vectors(n, None, max_co=params["max_co"]):
                for d in range(min(params["max_twist_degree"], 2 * n) + 1):
                    for a in pullback.invariant_letter_classes(ctx, d, stabilizer(u)):
                        x = pullback.quot_pullback(ctx, u, a)
                        if x and not pullback.is_invariant(x) and bad is None:
                            bad = "u=%s a=%s" % (list(u), format_element(a))
            cases.append(_case({"check": "pullback-invariance", "genus": g, "factors": n},
                               "invariant", bad or "ok", bad is None))
            bad = None
            detail = []
            for d in range(params["max_degree"] + 1):
                rank = pullback.span_rank(
                    pullback.quot_pullback_spanning_classes(ctx, d), d)
                dim = pullback.invariant_dimension(ctx, d)
                detail.append((d, rank, dim))
                if rank != dim and bad is None:
                    bad = "degree=%d rank=%d invariant=%d" % (d, rank, dim)
            cases.append(_case({"check": "span-equals-invariants", "genus": g,
                                "factors": n, "max_degree": params["max_degree"]},
                               "rank == dim", bad or "ok", bad is None))
    for g in genus_values:
        ctx = RingContext(genus=g, factors=2)
        report = pullback.generator_span_check(ctx, params["max_degree"])
        bad = next((row for row in report["per_degree"] if not row["pass"]), None)
        cases.append(_case({"check": "generator-span", "genus": g, "factors": 2,
                            "max_degree": params["max_degree"]},
                           "full rank", "ok" if report["pass"] else str(bad),
                           report["pass"]))
    return cases


SUITES = {
    "recursion": suite_recursion,
    "pullback": suite_pullback,
    "localization": suite_localization,
    "series": suite_series,
    "ranks": suite_ranks,
}


def run_suites(names, overrides=None, seed=None) -> dict:
    params = dict(DEFAULTS)
    if overrides:
        params.update({k: v for k, v in overrides.items() if v is not None})
    if seed is not None:
        params["seed"] = seed
    rng = random.Random(params["seed"])
    reports = []
    for name in names:
        if name not in SUITES:
            raise ValueError("unknown suite %r" % name)
        cases = SUITES[name](params, rng)
        passed = sum(1 for c in cases if c["pass"])
        reports.append({
            "suite": name,
            "cases": cases,
            "summary": {"total": len(cases), "passed": passed,
                        "failed": len(cases) - passed},
        })
    return {
        "reports": reports,
        "ok": all(r["summary"]["failed"] == 0 for r in reports),
    }
