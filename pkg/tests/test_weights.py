"""Weight-vector utilities, decompositions, subset tuples and the
admissible row tuples."""

import itertools

import pytest

from quotcells.weights import (admissible_row_tuples, apply_perm, betti_b1,
                               classify, co, componentwise_leq, compose,
                               connected_components, decreasing_vectors,
                               decomposition_co, decomposition_to_weights,
                               incidence_tuple, invert, normalize,
                               permutations, row_exponent, row_support_hat,
                               stabilizer, stabilizer_order, transposition,
                               tuple_support, weights_to_decomposition,
                               young_subgroup)


class TestVectors:
    def test_normalize(self):
        assert normalize((0, 2, 1)) == (2, 1, 0)

    def test_co(self):
        assert co((1, 2, 0)) == 3

    def test_stabilizer_order(self):
        assert stabilizer_order((1, 1, 0)) == 2
        assert stabilizer_order((2, 2, 2)) == 6
        assert stabilizer_order((3, 1, 0)) == 1

    def test_stabilizer_members(self):
        members = stabilizer((1, 1, 0))
        assert len(members) == 2
        for sigma in members:
            assert apply_perm(sigma, (1, 1, 0)) == (1, 1, 0)

    def test_componentwise(self):
        assert componentwise_leq((1, 0), (1, 2))
        assert not componentwise_leq((2, 0), (1, 2))

    def test_perm_identities(self):
        for sigma in permutations(4):
            assert compose(sigma, invert(sigma)) == tuple(range(4))

    def test_perm_action_convention(self):
        # sigma(v) places the old entry i at position sigma(i)
        sigma = (1, 2, 0)
        assert apply_perm(sigma, (7, 8, 9)) == (9, 7, 8)


class TestDecompositions:
    def test_scalar_example(self):
        assert weights_to_decomposition(((1, 0),), 2) == ((1,), (1,))

    def test_zero_vector(self):
        rows = weights_to_decomposition(((0, 0, 0),), 3)
        assert rows == ((3,), (0,), (0,))

    def test_round_trip_exhaustive(self):
        for r in (1, 2, 3):
            for v in decreasing_vectors(3, r, max_co=3 * (r - 1)):
                rows = weights_to_decomposition((v,), r)
                assert decomposition_to_weights(rows) == (v,)
                assert decomposition_co(rows) == co(v)

    def test_multi_block(self):
        v_star = ((2, 1), (1, 0, 0))
        rows = weights_to_decomposition(v_star, 3)
        assert rows == ((0, 2), (1, 1), (1, 0))
        assert decomposition_to_weights(rows) == v_star

    def test_counting_matches_multisets(self):
        # |B(n,r)| equals the number of r-part compositions of n
        from quotcells.weights import compositions
        for n, r in ((2, 2), (3, 2), (3, 3), (4, 3)):
            vectors = decreasing_vectors(n, r, max_co=n * (r - 1))
            assert len(vectors) == sum(1 for _ in compositions(n, r))

    def test_enumerate_examples(self):
        assert decreasing_vectors(2, 2, max_co=2) == [(0, 0), (1, 0), (1, 1)]
        assert decreasing_vectors(2, None, max_co=1) == [(0, 0), (1, 0)]


class TestSubsetTuples:
    def test_component_example(self):
        comps = connected_components(({1, 2}, {2, 3}, {4}))
        assert comps == [(frozenset({1, 2}), frozenset({2, 3})),
                         (frozenset({4}),)]

    @pytest.mark.parametrize("sets,expected", [
        (({1, 2}, {2, 3}), 0),
        (({1, 2}, {2, 3}, {1, 3}), 1),
        (({1, 2}, {2, 3}, {1, 2, 3}), 2),
        (({5},), 0),
    ])
    def test_betti_figures(self, sets, expected):
        assert betti_b1(sets) == expected

    def test_betti_requires_connected(self):
        with pytest.raises(ValueError):
            betti_b1(({1}, {2}))

    def test_empty_sets_rejected(self):
        with pytest.raises(ValueError):
            connected_components(({1}, set()))

    def test_classify(self):
        grouping = classify(({1, 2}, {2, 3}, {4}))
        assert set(grouping) == {0}
        assert len(grouping[0]) == 2

    def test_betti_against_graph_oracle(self):
        # independent route: build the bipartite incidence graph and use
        # edges - vertices + components
        def graph_b1(sets):
            nodes = [("s", i) for i in range(len(sets))]
            nodes += [("g", x) for x in tuple_support(sets)]
            adjacency = {node: [] for node in nodes}
            edges = 0
            for i, s in enumerate(sets):
                for x in s:
                    adjacency[("s", i)].append(("g", x))
                    adjacency[("g", x)].append(("s", i))
                    edges += 1
            seen = set()
            components = 0
            for node in nodes:
                if node in seen:
                    continue
                components += 1
                stack = [node]
                while stack:
                    current = stack.pop()
                    if current in seen:
                        continue
                    seen.add(current)
                    stack.extend(adjacency[current])
            return edges - len(nodes) + components

        ground = [1, 2, 3, 4]
        subsets = [frozenset(s) for size in (1, 2, 3, 4)
                   for s in itertools.combinations(ground, size)]
        import random
        rng = random.Random(23)
        pool = [tuple(rng.choice(subsets) for _ in range(count))
                for count in (1, 2, 3) for _ in range(120)]
        for sets in pool:
            for comp in connected_components(sets):
                assert betti_b1(comp) == graph_b1(comp)


class TestRowTuples:
    def test_identity_example(self):
        got = list(admissible_row_tuples((1, 0), (0, 1)))
        assert got == [((1,), (0, 0)), ((0,), (1, 0))]

    def test_swap_example(self):
        got = list(admissible_row_tuples((1, 0), (1, 0)))
        assert got == [((0,), (0, 1))]

    def test_zero_weight(self):
        for sigma in permutations(3):
            got = list(admissible_row_tuples((0, 0, 0), sigma))
            assert got == [((0,), (0, 0), (0, 0, 0))]

    def test_requires_decreasing(self):
        with pytest.raises(ValueError):
            list(admissible_row_tuples((0, 1), (0, 1)))

    def test_determinism_and_conditions(self):
        for u in decreasing_vectors(3, None, max_co=3):
            for sigma in permutations(3):
                first = list(admissible_row_tuples(u, sigma))
                second = list(admissible_row_tuples(u, sigma))
                assert first == second
                for rows in first:
                    # re-check the three defining conditions independently
                    padded = [row + (0,) * (3 - len(row)) for row in rows]
                    total = tuple(sum(col) for col in zip(*padded))
                    assert total == apply_perm(sigma, u)
                    comps = connected_components(incidence_tuple(rows))
                    assert all(betti_b1(c) <= 1 for c in comps)
                    for h in range(1, 4):
                        partial = tuple(sum(padded[j][i] for j in range(h))
                                        for i in range(3))
                        previous = tuple(sum(padded[j][i] for j in range(h - 1))
                                         for i in range(3))
                        hat = sorted(row_support_hat(rows[h - 1], h))
                        for p, q in itertools.combinations(hat, 2):
                            assert partial[p - 1] != partial[q - 1]
                            if partial[p - 1] < partial[q - 1]:
                                assert partial[p - 1] <= previous[q - 1]
                            else:
                                assert partial[q - 1] <= previous[p - 1]

    def test_row_exponent(self):
        assert row_exponent((0,), 1) == 0
        assert row_exponent((2,), 1) == 2
        assert row_exponent((1, 0), 2) == 0
        assert row_exponent((1, 1), 2) == 1


class TestYoung:
    def test_example(self):
        members = young_subgroup((2, 1))
        assert set(members) == {(0, 1, 2), (1, 0, 2)}

    def test_block_sizes(self):
        assert len(young_subgroup((2, 2))) == 4
        assert len(young_subgroup((3,))) == 6
        assert len(young_subgroup((1, 1, 1))) == 1
