import json
import random

import pytest

from corrclass.poset import Poset
from corrclass.venn import (EmbeddingViolation, LabeledFamily,
                            check_lemma_upset, counterexample_family,
                            generic_family, random_family,
                            three_label_posets)


def diamond():
    return Poset.from_pairs(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


class TestLabeledFamily:
    def test_rejects_order_inclusion_mismatch(self):
        chain = Poset.from_pairs(2, [(0, 1)])
        with pytest.raises(EmbeddingViolation):
            LabeledFamily(3, chain, [0b011, 0b001])  # 0 <= 1 but not subset

    def test_rejects_wrong_arity(self):
        chain = Poset.from_pairs(2, [(0, 1)])
        with pytest.raises(ValueError):
            LabeledFamily(3, chain, [0b001])

    def test_rejects_out_of_universe(self):
        chain = Poset.from_pairs(2, [(0, 1)])
        with pytest.raises(ValueError):
            LabeledFamily(2, chain, [0b001, 0b111])

    def test_from_subsets_derives_order(self):
        fam = LabeledFamily.from_subsets(3, [0b001, 0b011, 0b111])
        assert fam.labels.is_chain(fam.labels.full)

    def test_from_subsets_rejects_duplicates(self):
        with pytest.raises(EmbeddingViolation):
            LabeledFamily.from_subsets(3, [0b011, 0b011])

    def test_covering(self):
        fam = LabeledFamily.from_subsets(2, [0b01, 0b10])
        assert fam.covering()
        assert not LabeledFamily.from_subsets(2, [0b01]).covering()

    def test_json(self):
        fam = LabeledFamily.from_subsets(3, [0b001, 0b011])
        doc = json.loads(fam.to_json())
        assert doc["universe_size"] == 3
        assert doc["incidence"] == [[0], [0, 1]]


class TestIntersectionCells:
    def test_cells_partition_the_universe(self):
        fam = counterexample_family()
        seen = 0
        for label in range(1 << fam.labels.m):
            cell = fam.intersection_class(label)
            assert cell & seen == 0
            seen |= cell
        assert seen == fam.universe

    def test_empty_intersection_is_universe(self):
        # the no-label cell excludes every set but intersects nothing
        fam = LabeledFamily.from_subsets(2, [0b01])
        assert fam.intersection_class(0) == 0b10

    def test_all_labels_cell(self):
        fam = LabeledFamily.from_subsets(3, [0b011, 0b110])
        assert fam.intersection_class(0b11) == 0b010

    def test_label_bounds(self):
        fam = LabeledFamily.from_subsets(2, [0b01])
        with pytest.raises(IndexError):
            fam.intersection_class(0b10)


class TestUpsetLemma:
    def test_generic_families_clean(self):
        for p in three_label_posets():
            report = check_lemma_upset(generic_family(p))
            assert report["ok"], report["violations"]
            assert not report["covering"]

    def test_generic_realizes_every_upset(self):
        p = diamond()
        fam = generic_family(p)
        upsets = set(p.upsets(include_empty=True))
        nonempty = {label for label in range(1 << p.m)
                    if fam.intersection_class(label)}
        assert nonempty == upsets

    def test_random_families_clean(self):
        rng = random.Random(7)
        for _ in range(200):
            report = check_lemma_upset(random_family(rng))
            assert report["ok"], report["violations"]

    def test_random_families_seeded_deterministic(self):
        fams1 = [random_family(random.Random(3)) for _ in range(1)]
        fams2 = [random_family(random.Random(3)) for _ in range(1)]
        assert fams1[0].assign == fams2[0].assign


class TestConverseFails:
    def test_counterexample(self):
        fam = counterexample_family()
        assert fam.labels.is_antichain(fam.labels.full)
        # the singleton {first set} is an up-set, yet its cell is empty
        assert fam.labels.is_up_closed(0b001)
        assert fam.intersection_class(0b001) == 0
        # the first set really is covered by the other two without
        # being inside either
        a, b, c = fam.assign
        assert a & ~(b | c) == 0
        assert a & ~b and a & ~c

    def test_counterexample_satisfies_forward_direction(self):
        report = check_lemma_upset(counterexample_family())
        assert report["ok"]


class TestThreeLabelPosets:
    def test_exactly_five(self):
        assert len(three_label_posets()) == 5

    def test_pairwise_non_isomorphic(self):
        sigs = set()
        for p in three_label_posets():
            sig = tuple(sorted(p.below[i].bit_count() for i in range(3)))
            chainlike = p.is_chain(p.full)
            sigs.add((sig, chainlike))
        assert len(sigs) == 5
