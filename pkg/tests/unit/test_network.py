"""
Unit tests for seconet.core.network

Tests cover:
- ContactNetwork link bookkeeping and contract checks
- seed_links (day-0 pairing)
- sample_relationship_duration
- remove_expired_links / removal_rate
- snapshot exports
"""
import numpy as np
import pytest

from seconet.config.schema import GrowthConfig
from seconet.constants import FEMALE, MALE
from seconet.core.network import (
    ContactNetwork,
    LinkKind,
    remove_expired_links,
    removal_rate,
    sample_relationship_duration,
    seed_links,
)
from seconet.core.population import Person, Population, sample_population
from seconet.exceptions import ContractViolationError, SeedingError


def _pair_population(n_pairs=2, age=25):
    genders = [FEMALE, MALE] * n_pairs
    return Population([age] * len(genders), genders, [100.0] * len(genders), [5] * len(genders))


# ===========================================================================
# Link bookkeeping
# ===========================================================================

class TestContactNetwork:

    def test_add_link_orders_key_female_first(self):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        rel = net.add_link(1, 0, 2, 30.0, LinkKind.PRIMARY)
        assert rel.key == (0, 1)
        assert net.has_link(0, 1) and net.has_link(1, 0)
        assert net.degree(0) == net.degree(1) == 1

    def test_add_link_marks_ever_linked(self):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        net.add_link(0, 1, 0, 30.0, LinkKind.PRIMARY)
        assert net.population.ever_linked[[0, 1]].all()
        assert not net.population.ever_linked[[2, 3]].any()

    def test_same_gender_rejected(self):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        with pytest.raises(ContractViolationError):
            net.add_link(0, 2, 0, 30.0, LinkKind.PRIMARY)

    def test_duplicate_rejected(self):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        net.add_link(0, 1, 0, 30.0, LinkKind.PRIMARY)
        with pytest.raises(ContractViolationError):
            net.add_link(1, 0, 1, 30.0, LinkKind.SECONDARY)

    def test_remove_link_keeps_ever_linked(self):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        net.add_link(0, 1, 0, 30.0, LinkKind.PRIMARY)
        net.remove_link((0, 1))
        assert net.link_count == 0
        assert net.degree(0) == 0
        assert net.population.ever_linked[0]

    def test_link_arrays_follow_insertion_order(self):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        net.add_link(2, 3, 1, 30.0, LinkKind.PRIMARY)
        net.add_link(0, 1, 2, 30.0, LinkKind.PRIMARY)
        females, males, created = net.link_arrays()
        assert females.tolist() == [2, 0]
        assert males.tolist() == [3, 1]
        assert created.tolist() == [1, 2]

    def test_to_networkx_has_joined_nodes_only(self):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        for i in (0, 1):
            net.population.mark_joined(i, 0)
        net.add_link(0, 1, 0, 30.0, LinkKind.PRIMARY)
        graph = net.to_networkx()
        assert sorted(graph.nodes) == [0, 1]
        assert graph.number_of_edges() == 1

    def test_snapshot_rows(self):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        net.population.mark_joined(0, 0)
        net.add_link(0, 1, 0, 12.5, LinkKind.SECONDARY)
        assert net.edge_rows() == [[0, 1, 0, 12.5, "secondary"]]
        rows = net.node_rows()
        assert rows[0] == [0, 25, FEMALE, 100.0, 5, 0]
        assert rows[1][-1] is None


# ===========================================================================
# Seeding
# ===========================================================================

class TestSeedLinks:

    def test_ten_monogamous_links(self, rng):
        pop = sample_population(GrowthConfig(population_size=3000), rng)
        net = ContactNetwork(pop, GrowthConfig(population_size=3000))
        seed_links(net, 10, rng)
        assert net.link_count == 10
        people = {p for key in net.links for p in key}
        assert len(people) == 20
        for female, male in net.links:
            assert pop.genders[female] == FEMALE and pop.genders[male] == MALE

    def test_seeded_people_are_adults_joined_at_day_zero(self, rng):
        pop = sample_population(GrowthConfig(population_size=500), rng)
        net = ContactNetwork(pop, GrowthConfig(population_size=500))
        seed_links(net, 10, rng)
        seeded = sorted({p for key in net.links for p in key})
        assert np.all(pop.ages[seeded] >= 18)
        assert np.all(pop.join_time[seeded] == 0)
        assert pop.ever_linked[seeded].all()
        assert pop.joined_mask.sum() == 20

    def test_zero_links(self, rng):
        pop = sample_population(GrowthConfig(population_size=50), rng)
        net = ContactNetwork(pop, GrowthConfig(population_size=50))
        seed_links(net, 0, rng)
        assert net.link_count == 0
        assert not pop.joined_mask.any()

    def test_single_gender_raises(self, rng):
        pop = Population([25] * 6, [FEMALE] * 6, [100.0] * 6, [5] * 6)
        net = ContactNetwork(pop, GrowthConfig(population_size=6))
        with pytest.raises(SeedingError):
            seed_links(net, 1, rng)

    def test_minors_excluded(self, rng):
        pop = Population.from_persons([
            Person(0, 16, FEMALE, 100.0, 5),
            Person(1, 30, MALE, 100.0, 5),
            Person(2, 17, FEMALE, 100.0, 5),
        ])
        net = ContactNetwork(pop, GrowthConfig(population_size=3))
        with pytest.raises(SeedingError):
            seed_links(net, 1, rng)

    def test_non_empty_network_raises(self, rng):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        net.add_link(0, 1, 0, 30.0, LinkKind.PRIMARY)
        with pytest.raises(SeedingError):
            seed_links(net, 1, rng)


# ===========================================================================
# Durations and expiry
# ===========================================================================

class TestDurations:

    def test_mean_is_min_delta(self):
        gen = np.random.default_rng(3)
        i = Person(0, 25, FEMALE, 50.0, 5)
        j = Person(1, 25, MALE, 200.0, 5)
        draws = [sample_relationship_duration(i, j, gen) for _ in range(100_000)]
        assert abs(np.mean(draws) - 50.0) < 1.0
        assert min(draws) > 0

    def test_symmetric_mean(self):
        gen = np.random.default_rng(4)
        i = Person(0, 25, FEMALE, 100.0, 5)
        j = Person(1, 25, MALE, 100.0, 5)
        draws = [sample_relationship_duration(i, j, gen) for _ in range(100_000)]
        assert abs(np.mean(draws) - 100.0) < 2.0


class TestRemoveExpiredLinks:

    def test_fractional_duration_expires_on_ceiling_day(self):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        net.add_link(0, 1, 3, 5.2, LinkKind.PRIMARY)
        assert remove_expired_links(net, 8) == 0
        assert remove_expired_links(net, 9) == 1
        assert net.link_count == 0

    def test_integer_duration_expires_exactly(self):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        net.add_link(0, 1, 0, 5.0, LinkKind.PRIMARY)
        assert remove_expired_links(net, 4) == 0
        assert remove_expired_links(net, 5) == 1

    def test_empty_network(self):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        assert remove_expired_links(net, 10) == 0

    def test_people_stay_joined(self):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        net.population.mark_joined(0, 0)
        net.add_link(0, 1, 0, 1.0, LinkKind.PRIMARY)
        remove_expired_links(net, 1)
        assert net.population.is_joined(0)
        assert net.degree(0) == 0


class TestRemovalRate:

    def test_mean_of_two(self):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        net.add_link(0, 1, 0, 50.0, LinkKind.PRIMARY)
        net.add_link(2, 3, 0, 150.0, LinkKind.PRIMARY)
        assert removal_rate(net) == pytest.approx(0.01)

    def test_single_link(self):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        net.add_link(0, 1, 0, 100.0, LinkKind.PRIMARY)
        assert removal_rate(net) == pytest.approx(0.01)

    def test_no_links(self):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        assert removal_rate(net) == 0.0

    def test_expired_links_stay_in_the_mean(self):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        net.add_link(0, 1, 0, 50.0, LinkKind.PRIMARY)
        net.add_link(2, 3, 0, 150.0, LinkKind.PRIMARY)
        assert remove_expired_links(net, 60) == 1
        # the surviving link alone would give 1/150
        assert removal_rate(net) == pytest.approx(0.01)

    def test_zero_once_every_link_expired(self):
        net = ContactNetwork(_pair_population(), GrowthConfig(population_size=4))
        net.add_link(0, 1, 0, 50.0, LinkKind.PRIMARY)
        remove_expired_links(net, 50)
        assert removal_rate(net) == 0.0

    def test_steady_count_holds_near_frozen_total(self):
        from seconet.core.growth import grow_network

        config = GrowthConfig(population_size=600, initial_links=10, joins_per_step=20, horizon=400)
        network = grow_network(config, np.random.default_rng(3), days=config.horizon)
        frozen = network.frozen_link_count
        assert frozen is not None
        assert 0.8 * frozen <= network.link_count <= 1.2 * frozen
