"""Poincare polynomials and series of symmetric products, quot schemes
and complete filt schemes, with truncation checks of the closed product
formulas.

Polynomials are plain lists of integer coefficients indexed by the
t-exponent; two-variable series are lists (over the s-power) of such
lists, truncated at explicit caps.
"""

from __future__ import annotations

from math import comb


def poly_trim(p):
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return list(p[:n])


def poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_mul(a, b, cap=None):
    if not a or not b:
        return []
    size = len(a) + len(b) - 1
    if cap is not None:
        size = min(size, cap + 1)
    out = [0] * size
    for i, ca in enumerate(a):
        if ca == 0 or i >= size:
            continue
        top = min(len(b), size - i)
        for j in range(top):
            out[i + j] += ca * b[j]
    return poly_trim(out)


def poly_pow(a, e, cap=None):
    out = [1]
    for _ in range(e):
        out = poly_mul(out, a, cap)
    return out


def poly_geometric(k, cap):
    """Truncation of 1/(1 - t^k)."""
    out = [0] * (cap + 1)
    for i in range(0, cap + 1, k):
        out[i] = 1
    return out


def poly_coeff(p, i):
    return p[i] if 0 <= i < len(p) else 0


def symmetric_product_poincare(g: int, m: int):
    """Betti generating polynomial of the m-th symmetric product of a
    genus-g curve: the u^m coefficient of (1+ut)^{2g}/((1-u)(1-ut^2))."""
    if g < 0 or m < 0:
        raise ValueError("g and m must be non-negative")
    out = [0] * (2 * m + 1)
    for j in range(min(2 * g, m) + 1):
        c = comb(2 * g, j)
        for k in range(m - j + 1):
            out[j + 2 * k] += c
    return poly_trim(out)


def quot_poincare(g: int, r: int, length: int, max_t: int | None = None):
    """Poincare polynomial of the quot scheme of length-`length` quotients
    of the trivial rank-r bundle: the sum over fixed-point strata of
    t^{2co} times the product of symmetric-product polynomials.

    The sum is accumulated slot by slot (one line-bundle summand at a
    time) rather than by enumerating decompositions, which keeps large
    ranks cheap; `max_t` optionally truncates the result.
    """
    if r < 1:
        raise ValueError("need r >= 1")
    cap = 2 * r * length if max_t is None else max_t
    acc = [[1]] + [[] for _ in range(length)]
    for a in range(r):
        slot = []
        for m in range(length + 1):
            shift = 2 * a * m
            if shift > cap:
                slot.append([])
            else:
                slot.append([0] * shift + symmetric_product_poincare(g, m))
        acc = _bi_mul(acc, slot, length, cap)
    return poly_trim(acc[length])


def quot_series_product(g: int, r: int, max_s: int, max_t: int):
    """Coefficients of s^0..s^max_s of the closed product formula
    prod_{h<r} (1+s t^{2h+1})^{2g} / ((1-t^{2h} s)(1-t^{2h+2} s)),
    each truncated at t^max_t."""
    series = [[1]] + [[] for _ in range(max_s)]
    for h in range(r):
        # (1 + s t^{2h+1})^{2g}
        factor = [[0] * (j * (2 * h + 1)) + [comb(2 * g, j)] if j * (2 * h + 1) <= max_t
                  else [] for j in range(max_s + 1)]
        series = _bi_mul(series, factor, max_s, max_t)
        for k in (2 * h, 2 * h + 2):
            geom = [[0] * (j * k) + [1] if j * k <= max_t else []
                    for j in range(max_s + 1)]
            series = _bi_mul(series, geom, max_s, max_t)
    return series


def _bi_mul(a, b, max_s, max_t):
    out = [[] for _ in range(max_s + 1)]
    for i, pa in enumerate(a):
        if not pa:
            continue
        for j in range(0, max_s + 1 - i):
            if b[j]:
                out[i + j] = poly_add(out[i + j], poly_mul(pa, b[j], max_t))
    return out


def quot_series_check(g: int, r: int, max_s: int, max_t: int):
    """Stratum sums against the product formula; the list of differences
    (one polynomial per s-power) is expected to be all zero."""
    product = quot_series_product(g, r, max_s, max_t)
    out = []
    for length in range(max_s + 1):
        direct = poly_trim(quot_poincare(g, r, length)[:max_t + 1])
        out.append(poly_add(direct, [-c for c in product[length]]))
    return out


def filt_poincare(g: int, r: int, n: int):
    """Poincare polynomial of the complete filt scheme: the fixed-point
    strata contribute t^{2co(v)} (1+2gt+t^2)^n over v in [0,r-1]^n."""
    if r < 1:
        raise ValueError("need r >= 1")
    strata = poly_pow(poly_trim([1 if i % 2 == 0 else 0 for i in range(2 * r - 1)]), n)
    return poly_mul(strata, poly_pow([1, 2 * g, 1], n))


def filt_presentation_check(g: int, r: int, n: int):
    """Strata sum against the projective-bundle presentation
    (1+2gt+t^2)^n ((1-t^{2r})/(1-t^2))^n; expected zero."""
    direct = filt_poincare(g, r, n)
    cap = 2 * n * r  # degree bound of the exact polynomial
    numerator = [1] + [0] * (2 * r - 1) + [-1]
    ratio = poly_pow(poly_mul(numerator, poly_geometric(2, cap), cap), n, cap)
    closed = poly_mul(ratio, poly_pow([1, 2 * g, 1], n, cap), cap)
    return poly_add(direct, [-c for c in closed])


def infinite_quot_series(g: int, max_t: int):
    """Truncation of the limit series
    (1+t)^{2g}/(1-t^2) prod_{h>=1} (1+t^{2h+1})^{2g}/((1-t^{2h})(1-t^{2h+2}))."""
    acc = poly_mul(poly_pow([1, 1], 2 * g, max_t), poly_geometric(2, max_t), max_t)
    h = 1
    while 2 * h <= max_t:
        if g and 2 * h + 1 <= max_t:
            one_plus_odd = [1] + [0] * (2 * h) + [1]
            acc = poly_mul(acc, poly_pow(one_plus_odd, 2 * g, max_t), max_t)
        acc = poly_mul(acc, poly_geometric(2 * h, max_t), max_t)
        acc = poly_mul(acc, poly_geometric(2 * h + 2, max_t), max_t)
        h += 1
    return [poly_coeff(acc, i) for i in range(max_t + 1)]


def tensor_model_series(g: int, max_t: int):
    """The same truncation assembled from the tensor model: stabilized
    symmetric-product series times the free graded pieces attached to
    each shift."""
    stable = symmetric_product_poincare(g, max_t + 1)
    acc = [poly_coeff(stable, i) for i in range(max_t + 1)]
    h = 1
    while 2 * h <= max_t:
        # free graded-commutative algebra on H*(C) shifted by 2h
        factor = poly_mul(poly_geometric(2 * h, max_t),
                          poly_geometric(2 * h + 2, max_t), max_t)
        if g and 2 * h + 1 <= max_t:
            factor = poly_mul(factor,
                              poly_pow([1] + [0] * (2 * h) + [1], 2 * g, max_t),
                              max_t)
        acc = poly_mul(acc, factor, max_t)
        h += 1
    return [poly_coeff(acc, i) for i in range(max_t + 1)]


def infinite_limits_check(g: int, max_t: int) -> dict:
    """Coefficientwise stabilization of the diagonal quot polynomials and
    agreement with the limit series and the tensor model."""
    limit = infinite_quot_series(g, max_t)
    tensor = tensor_model_series(g, max_t)
    stable_ok = True
    match_ok = tensor == limit
    failures = []
    diagonal_polys = {r: quot_poincare(g, r, r, max_t=max_t)
                      for r in range(1, max_t + 4)}
    for k in range(max_t + 1):
        values = {poly_coeff(diagonal_polys[r], k)
                  for r in range(k + 1, k + 4)}
        if len(values) != 1:
            stable_ok = False
            failures.append({"power": k, "values": sorted(values)})
            continue
        if values.pop() != limit[k]:
            match_ok = False
            failures.append({"power": k, "limit": limit[k]})
    return {"stable": stable_ok, "matches_limit": match_ok,
            "pass": stable_ok and match_ok, "failures": failures}


def decomposition_dimension_check(ctx, r: int, max_degree: int) -> dict:
    """Strata Poincare sum over decreasing weights with entries < r against
    the degreewise rank of the spanning pullback classes."""
    from .pullback import invariant_letter_classes, quot_pullback, span_rank
    from .weights import decreasing_vectors, stabilizer, weights_to_decomposition
    n = ctx.factors
    g = ctx.genus
    poly = []
    for v in decreasing_vectors(n, r, max_co=n * (r - 1)):
        rows = weights_to_decomposition((v,), r)
        term = [0] * (2 * sum(v)) + [1]
        for row in rows:
            term = poly_mul(term, symmetric_product_poincare(g, row[0]))
        poly = poly_add(poly, term)
    classes = []
    for v in decreasing_vectors(n, r, max_co=n * (r - 1)):
        if 2 * sum(v) > max_degree:
            continue
        for d in range(0, max_degree - 2 * sum(v) + 1):
            for a in invariant_letter_classes(ctx, d, stabilizer(v)):
                classes.append(quot_pullback(ctx, v, a))
    per_degree = []
    ok = True
    for d in range(max_degree + 1):
        expected = poly_coeff(poly, d)
        rank = span_rank(classes, d)
        per_degree.append({"degree": d, "strata": expected, "rank": rank,
                           "pass": expected == rank})
        ok = ok and expected == rank
    return {"pass": ok, "per_degree": per_degree}
