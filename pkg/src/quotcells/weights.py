"""Weight vectors, decompositions, subset tuples and the admissible row
tuples that drive the combinatorial pullback formula.

Weight vectors are plain tuples of non-negative integers.  Permutations
are tuples sigma with sigma[i] = image of 0-based position i; the action
on vectors is sigma(v)[sigma[i]] = v[i].
"""

from __future__ import annotations

import itertools
from math import factorial


# -- permutations ------------------------------------------------------------

def permutations(n: int):
    """All of S_n in lexicographic order, as image tuples."""
    return itertools.permutations(range(n))


def identity(n: int):
    return tuple(range(n))


def transposition(n: int, i: int, j: int):
    """Transposition of 1-based positions i and j inside S_n."""
    sigma = list(range(n))
    sigma[i - 1], sigma[j - 1] = sigma[j - 1], sigma[i - 1]
    return tuple(sigma)


def compose(sigma, tau):
    """(sigma tau)(i) = sigma(tau(i))."""
    return tuple(sigma[t] for t in tau)


def invert(sigma):
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s] = i
    return tuple(inv)


def apply_perm(sigma, v):
    out = [0] * len(v)
    for i, value in enumerate(v):
        out[sigma[i]] = value
    return tuple(out)


def young_subgroup(composition):
    """Block permutations of consecutive blocks of the given sizes."""
    blocks = []
    offset = 0
    for size in composition:
        blocks.append(range(offset, offset + size))
        offset += size
    members = []
    for parts in itertools.product(*(itertools.permutations(b) for b in blocks)):
        sigma = [0] * offset
        for block, images in zip(blocks, parts):
            for src, dst in zip(block, images):
                sigma[src] = dst
        members.append(tuple(sigma))
    return members


# -- weight vectors ----------------------------------------------------------

def co(v) -> int:
    return sum(v)


def normalize(v):
    """Descending reordering."""
    return tuple(sorted(v, reverse=True))


def support(v):
    return frozenset(i + 1 for i, value in enumerate(v) if value)


def componentwise_leq(v, w) -> bool:
    return all(a <= b for a, b in zip(v, w))


def stabilizer_order(v) -> int:
    order = 1
    for value in set(v):
        order *= factorial(list(v).count(value))
    return order


def stabilizer(v):
    """All permutations fixing v, as a list (product of per-value groups)."""
    classes = {}
    for i, value in enumerate(v):
        classes.setdefault(value, []).append(i)
    positions = list(classes.values())
    members = []
    for parts in itertools.product(*(itertools.permutations(p) for p in positions)):
        sigma = [0] * len(v)
        for src_list, images in zip(positions, parts):
            for src, dst in zip(src_list, images):
                sigma[src] = dst
        members.append(tuple(sigma))
    return members


def is_decreasing(v) -> bool:
    return all(a >= b for a, b in zip(v, v[1:]))


def decreasing_vectors(n: int, r=None, max_co: int | None = None):
    """Decreasing vectors of length n with entries < r (no bound when r is
    None) and co <= max_co, ordered by (co, entries)."""
    if max_co is None:
        if r is None:
            raise ValueError("need r or max_co to bound the enumeration")
        max_co = n * (r - 1)
    out = []

    def rec(prefix, cap, budget):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        top = min(cap, budget)
        for value in range(top + 1):
            rec(prefix + [value], value, budget - value)

    cap0 = max_co if r is None else min(r - 1, max_co)
    rec([], cap0, max_co)
    return sorted(out, key=lambda v: (co(v), v))


# -- decompositions ----------------------------------------------------------

def weights_to_decomposition(v_star, r: int):
    """Bijection from tuples of decreasing blocks with entries < r to the
    r rows of per-value multiplicities."""
    blocks = [tuple(b) for b in v_star]
    for b in blocks:
        if not is_decreasing(b):
            raise ValueError("blocks must be decreasing")
        if any(x >= r for x in b):
            raise ValueError("entry >= r")
    return tuple(tuple(sum(1 for x in b if x == a) for b in blocks)
                 for a in range(r))


def decomposition_to_weights(rows):
    """Inverse of weights_to_decomposition."""
    if not rows:
        return ()
    h = len(rows[0])
    blocks = []
    for j in range(h):
        block = []
        for a in range(len(rows) - 1, -1, -1):
            block.extend([a] * rows[a][j])
        blocks.append(tuple(block))
    return tuple(blocks)


def decomposition_co(rows) -> int:
    return sum(a * sum(row) for a, row in enumerate(rows))


def compositions(total: int, parts: int):
    """All tuples of non-negative integers of the given length and sum."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


# -- subset tuples and their incidence combinatorics -------------------------

def connected_components(sets):
    """Partition a tuple of non-empty subsets by the chain-intersection
    relation; each component keeps its sets in tuple order."""
    sets = [frozenset(s) for s in sets]
    if any(not s for s in sets):
        raise ValueError("empty subsets are not allowed")
    parent = list(range(len(sets)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    owner = {}
    for idx, s in enumerate(sets):
        for element in s:
            if element in owner:
                ra, rb = find(owner[element]), find(idx)
                if ra != rb:
                    parent[rb] = ra
            else:
                owner[element] = idx
    groups = {}
    for idx in range(len(sets)):
        groups.setdefault(find(idx), []).append(idx)
    return [tuple(sets[i] for i in idxs)
            for idxs in sorted(groups.values(), key=lambda g: g[0])]


def tuple_support(sets):
    out = frozenset()
    for s in sets:
        out |= frozenset(s)
    return out


def betti_b1(sets) -> int:
    """First Betti number of the incidence graph of a connected tuple:
    edges (sum of set sizes) minus vertices (sets plus ground elements)
    plus one."""
    sets = [frozenset(s) for s in sets]
    if len(connected_components(sets)) != 1:
        raise ValueError("tuple is not connected")
    edges = sum(len(s) for s in sets)
    vertices = len(sets) + len(tuple_support(sets))
    return edges - vertices + 1


def classify(sets):
    """Group the connected components by their first Betti number."""
    out = {}
    for comp in connected_components(sets):
        out.setdefault(betti_b1(comp), []).append(comp)
    return out


# -- admissible row tuples ---------------------------------------------------

def row_support_hat(row, j: int):
    """Support of a row extended by its own index (1-based sets)."""
    return frozenset(i + 1 for i, value in enumerate(row) if value) | {j}


def incidence_tuple(rows):
    return tuple(row_support_hat(row, j + 1) for j, row in enumerate(rows))


def row_exponent(row, j: int) -> int:
    """omega-exponent carried by row j: |row| - |hat suppport| + 1."""
    return sum(row) - len(row_support_hat(row, j)) + 1


def admissible_row_tuples(u, sigma, convention: str = "row_sum"):
    """Row tuples L = (l_1, ..., l_n), l_j of length j, entering the
    combinatorial pullback formula for the decreasing weight u and the
    permutation sigma.

    Conditions: (i) the padded rows sum to sigma(u) ("row_sum"; the
    alternate "sigma_sum" reads the sum constraint as sigma(sum) = u,
    i.e. rows summing to sigma^{-1}(u)); (ii) every connected component
    of the incidence tuple has first Betti number <= 1; (iii) at each
    row j the partial sums l(j) = sum_{h<=j} l_h have pairwise distinct
    entries on the extended support of l_j, and the smaller entry of any
    pair is bounded by the previous partial sum at the larger position.

    Deterministic: rows are filled from index n downwards, candidate
    entries in lexicographic order.
    """
    u = tuple(u)
    if not is_decreasing(u):
        raise ValueError("u must be decreasing")
    n = len(u)
    if convention == "row_sum":
        target = apply_perm(sigma, u)
    elif convention == "sigma_sum":
        target = apply_perm(invert(sigma), u)
    else:
        raise ValueError("unknown convention %r" % convention)

    rows = [None] * n

    def admissible(row, j, rem_before, rem_after):
        hat = row_support_hat(row, j)
        for p, q in itertools.combinations(sorted(hat), 2):
            a, b = rem_before[p - 1], rem_before[q - 1]
            if a == b:
                return False
            hi_pos = q if a < b else p
            if min(a, b) > rem_after[hi_pos - 1]:
                return False
        return True

    def rec(j, rem):
        if j == 0:
            L = tuple(rows)
            comps = connected_components(incidence_tuple(L))
            if all(betti_b1(c) <= 1 for c in comps):
                yield L
            return
        need = rem[j - 1]
        for prefix in itertools.product(*(range(rem[i] + 1) for i in range(j - 1))):
            row = prefix + (need,)
            rem_after = tuple(a - b for a, b in zip(rem, row + (0,) * (len(rem) - j)))
            if not admissible(row, j, rem, rem_after):
                continue
            rows[j - 1] = row
            yield from rec(j - 1, rem_after)
        rows[j - 1] = None

    yield from rec(n, target)
