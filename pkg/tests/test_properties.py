"""Invariants that must hold across randomly generated inputs."""

from fractions import Fraction
from random import Random

from hypothesis import given, strategies as st

from crn1d import (
    ad_count,
    bi_profile,
    capacity_class_bi,
    choose_d_three,
    classify,
    conservation_constants,
    critical_points,
    diagram_pair_witnesses,
    embed,
    find_roots,
    format_network,
    g_problem,
    one_dim_structure,
    oracle_count,
    parse_network,
)

from support import count_line_states, random_bi_network, random_gproblem, sample_level

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def seeded_net(seed: int):
    return random_bi_network(Random(seed), max_species=4, max_coeff=4)


class TestStructure:
    @given(seeds)
    def test_changes_are_proportional(self, seed):
        net = seeded_net(seed)
        struct = one_dim_structure(net)
        gam = struct.gamma_user()
        lam = struct.lambda_user()
        assert lam[0] == 1
        for j, rx in enumerate(net.reactions):
            for k in range(net.num_species):
                assert Fraction(rx.change[k]) == lam[j] * gam[k]

    @given(seeds)
    def test_permutation_grouping(self, seed):
        net = seeded_net(seed)
        struct = one_dim_structure(net)
        lam = struct.lambda_user()
        for pos, j in enumerate(struct.reaction_perm):
            assert (lam[j] > 0) == (pos < struct.t)
        assert struct.gamma[0] != 0
        assert sorted(struct.reaction_perm) == list(range(net.num_reactions))
        assert sorted(struct.species_perm) == list(range(net.num_species))

    @given(seeds)
    def test_conservation_constant_along_the_line(self, seed):
        rng = Random(seed)
        net = random_bi_network(rng, max_species=4, max_coeff=4)
        struct = one_dim_structure(net)
        gam = struct.gamma_user()
        x0 = tuple(Fraction(rng.randint(1, 9), rng.randint(1, 4)) for _ in gam)
        base = conservation_constants(struct, x0)
        for step in (1, -3, Fraction(5, 2)):
            shifted = tuple(x + step * g for x, g in zip(x0, gam))
            assert conservation_constants(struct, shifted) == base

    @given(seeds)
    def test_conservation_defining_relation(self, seed):
        rng = Random(seed)
        net = random_bi_network(rng, max_species=4, max_coeff=4)
        struct = one_dim_structure(net)
        x0 = tuple(Fraction(rng.randint(1, 9)) for _ in range(net.num_species))
        c = conservation_constants(struct, x0)
        perm, gperm = struct.species_perm, struct.gamma
        for i in range(1, net.num_species):
            assert c[i - 1] == gperm[i] * x0[perm[0]] - gperm[0] * x0[perm[i]]


class TestDiagrams:
    @given(seeds)
    def test_ad_bookkeeping(self, seed):
        net = seeded_net(seed)
        struct = one_dim_structure(net)
        ad = ad_count(net, struct)
        assert ad.total == len(ad.triples) == sum(ad.per_species)
        assert all(sign in (-1, 1) for *_kij, sign in ad.triples)
        pairs = diagram_pair_witnesses(net, struct)
        neg = {(k, i, j) for k, i, j, s in ad.triples if s < 0}
        pos = {(k, i, j) for k, i, j, s in ad.triples if s > 0}
        assert set(pairs.right_left) == neg
        assert set(pairs.left_right) == pos


class TestCapacity:
    @given(seeds)
    def test_sign_and_flatness_gates(self, seed):
        net = seeded_net(seed)
        struct = one_dim_structure(net)
        prof = bi_profile(net, struct)
        cap = capacity_class_bi(prof, prof.lambda2)
        assert cap.tag != "unknown"
        assert (cap.tag == "zero") == (prof.lambda2 > 0)
        if prof.lambda2 < 0:
            s1, s2, s3, s4 = prof.sums
            assert (cap.tag == "infinitely-many") == (s1 == s4 and s2 == s3)

    @given(seeds)
    def test_at_least_three_implies_three_diagrams(self, seed):
        net = seeded_net(seed)
        rep = classify(net)
        if rep.capacity.tag == "finite-at-least-three":
            assert rep.ad.total >= 3
            assert rep.necessary_pair.passes

    @given(seeds)
    def test_report_coherence(self, seed):
        rep = classify(seeded_net(seed))
        assert rep.profile is not None
        assert (rep.two_reaction is not None) == (rep.profile.lambda2 < 0)
        assert (rep.reduced is None) == (rep.reduction is None)
        eh = rep.essential.eh
        if rep.reduction is not None:
            assert 0 < len(eh) < rep.network.num_species
            assert rep.reduction.dropped_reactions == ()
            # reducing again changes nothing
            assert rep.reduced.reduction is None

    @given(seeds)
    def test_reduction_preserves_capacity(self, seed):
        rep = classify(seeded_net(seed))
        if rep.reduced is not None:
            assert rep.reduced.capacity.tag == rep.capacity.tag


class TestNetworkRoundTrips:
    @staticmethod
    def coefficient_maps(net):
        out = []
        for rx in net.reactions:
            out.append(
                (
                    {s: a for s, a in zip(net.species, rx.reactant) if a},
                    {s: p for s, p in zip(net.species, rx.product) if p},
                )
            )
        return out

    @given(seeds)
    def test_format_parse_round_trip(self, seed):
        net = seeded_net(seed)
        # species may be re-ordered by first appearance, but nothing else moves
        again = parse_network(format_network(net))
        assert sorted(again.species) == sorted(net.species)
        assert self.coefficient_maps(again) == self.coefficient_maps(net)
        # one normalization pass reaches the fixed point
        assert parse_network(format_network(again)) == again

    @given(seeds)
    def test_full_embedding_is_identity(self, seed):
        net = seeded_net(seed)
        emb = embed(net, net.species)
        assert emb.network == net
        assert emb.dropped_reactions == ()


class TestRootFinding:
    @given(seeds)
    def test_roots_match_oracle(self, seed):
        rng = Random(seed)
        gp = random_gproblem(rng, max_species=5)
        K = sample_level(rng, gp)
        if K is None:
            return
        rs = find_roots(gp, K)
        count = len(rs.roots)
        oracle = oracle_count(gp, K, samples=30_001)
        if oracle != count:
            oracle = oracle_count(gp, K, samples=300_001)
        assert oracle == count
        assert count <= len(gp.alphas) + 1

    @given(seeds)
    def test_root_layout(self, seed):
        rng = Random(seed)
        gp = random_gproblem(rng, max_species=5)
        K = sample_level(rng, gp)
        if K is None:
            return
        rs = find_roots(gp, K)
        assert list(rs.roots) == sorted(rs.roots)
        for z in rs.roots:
            assert gp.lower < z < gp.upper
        crits = critical_points(gp)
        for z1, z2 in zip(rs.roots, rs.roots[1:]):
            assert any(z1 < c < z2 for c in crits)


class TestRecipes:
    def test_origin_balanced_exactly(self):
        rng = Random(20260816)
        found = 0
        tried = 0
        while found < 12 and tried < 20_000:
            tried += 1
            net = random_bi_network(rng, max_species=5, max_coeff=5)
            struct = one_dim_structure(net)
            prof = bi_profile(net, struct)
            cap = capacity_class_bi(prof, prof.lambda2)
            if cap.tag != "finite-at-least-three":
                continue
            found += 1
            d = choose_d_three(prof)
            slope = sum(
                Fraction(a) * g / dk
                for a, g, dk in zip(prof.alphas, prof.gammas, d)
            )
            assert slope == 0
            curvature = sum(
                -Fraction(a) * g * g / (dk * dk)
                for a, g, dk in zip(prof.alphas, prof.gammas, d)
            )
            assert curvature != 0
            gp = g_problem(prof, d)
            assert gp.lower < 0 < gp.upper
        assert found == 12


rates = st.fractions(
    min_value=Fraction(1, 8), max_value=Fraction(8), max_denominator=64
)


class TestContinuumLaw:
    @given(rates, rates, rates)
    def test_w2_tuned_level_set(self, w2, k1, k2, k3):
        n = count_line_states(w2, (k1, k2, k3), (k3 / k2,))
        if k1 == k2:
            assert n is None
        else:
            assert n is not None and n <= 1

    @given(
        rates,
        st.fractions(min_value=Fraction(-4), max_value=Fraction(4), max_denominator=64),
    )
    def test_w2_generic_lines(self, w2, k1, c1):
        n = count_line_states(w2, (k1, 1, 1), (c1,))
        if k1 == 1 and c1 == 1:
            assert n is None
        else:
            assert n is not None and n <= 1
