# ABOUTME: Randomized checks over seeded toy dramas.
# ABOUTME: Edge-count identities, line conservation, notation round trips, rank correlations.

import math
import random
from math import comb

import pytest

from drama_graphs.analysis import (
    CardinalityFilter,
    RankTable,
    degree_ranking,
    filtered_hg_ranking,
    spearman,
)
from drama_graphs.representations import (
    Aggregation,
    NodeType,
    TypedNode,
    build_representations,
    parse_descriptor,
)
from drama_graphs.toy import ToyEventKind, parse_toy, render_toy, toy_to_events, toy_to_settings
from tests.builders import check_raw_events

CHARACTERS = "ABCDEF"
SEEDS = range(200)


def random_script(rng: random.Random) -> str:
    """A valid toy drama in canonical notation; it always opens with an entry and a speech."""
    onstage: set[str] = set()
    scenes: list[list[str]] = []

    for scene_index in range(rng.randint(1, 5)):
        activities: list[str] = []
        if scene_index == 0:
            first = rng.choice(CHARACTERS)
            onstage.add(first)
            activities += [f"->{first}", f"{first}*"]
        for _ in range(rng.randint(1, 5)):
            offstage = sorted(set(CHARACTERS) - onstage)
            roll = rng.random()
            if offstage and (not onstage or roll < 0.35):
                chosen = sorted(rng.sample(offstage, rng.randint(1, min(2, len(offstage)))))
                onstage.update(chosen)
                activities.append("->" + ",".join(chosen))
            elif roll < 0.55:
                chosen = sorted(rng.sample(sorted(onstage), rng.randint(1, min(2, len(onstage)))))
                onstage.difference_update(chosen)
                activities.append(",".join(chosen) + "->")
            else:
                chosen = sorted(rng.sample(sorted(onstage), rng.randint(1, min(2, len(onstage)))))
                activities.append(",".join(chosen) + "*")
        scenes.append(activities)

    return "|" + "|".join("; ".join(scene) for scene in scenes) + "|"


@pytest.mark.parametrize("seed", SEEDS)
class TestRandomToyDramas:
    """Properties every toy drama must satisfy."""

    def test_notation_round_trip(self, seed: int) -> None:
        text = random_script(random.Random(seed))
        script = parse_toy(text)

        assert render_toy(script) == text
        assert parse_toy(render_toy(script)) == script

    def test_raw_event_context(self, seed: int) -> None:
        script = parse_toy(random_script(random.Random(seed)))

        check_raw_events(toy_to_events(script))
        assert toy_to_events(script) == toy_to_events(script)

    def test_lines_are_conserved(self, seed: int) -> None:
        script = parse_toy(random_script(random.Random(seed)))
        speeches = sum(
            1 for scene in script.scenes for event in scene if event.kind == ToyEventKind.SPEECH
        )
        settings = toy_to_settings(script)

        assert sum(s.n_lines for s in settings) == speeches
        assert sum(s.n_tokens for s in settings) == speeches
        assert all(set(s.speaker) <= set(s.onstage) for s in settings)

    def test_expansion_edge_counts(self, seed: int) -> None:
        settings = toy_to_settings(parse_toy(random_script(random.Random(seed))))
        reprs = build_representations("random", settings)
        hyperedges = reprs.hypergraph(Aggregation.GROUP).edges

        assert len(reprs.clique(Aggregation.GROUP).edges) == sum(
            comb(len(e.members), 2) for e in hyperedges
        )
        assert len(reprs.star(Aggregation.GROUP).edges) == sum(len(e.members) for e in hyperedges)

    def test_cardinality_partition(self, seed: int) -> None:
        settings = toy_to_settings(parse_toy(random_script(random.Random(seed))))
        reprs = build_representations("random", settings)
        hg = reprs.hypergraph(Aggregation.GROUP)
        full = degree_ranking(reprs, parse_descriptor("hg-group-mw")).scores
        threshold = random.Random(seed).randint(1, len(CHARACTERS))

        low = filtered_hg_ranking(hg, CardinalityFilter(threshold=threshold, mode="at_most"))
        high = filtered_hg_ranking(hg, CardinalityFilter(threshold=threshold + 1, mode="at_least"))

        assert {n: low.scores[n] + high.scores[n] for n in full} == full

    def test_speech_star_shares_group_text_units(self, seed: int) -> None:
        settings = toy_to_settings(parse_toy(random_script(random.Random(seed))))
        reprs = build_representations("random", settings)

        def units(nodes: tuple[TypedNode, ...]) -> list[str]:
            return [n.node for n in nodes if n.node_type == NodeType.TEXT_UNIT]

        assert units(reprs.se_speech.nodes) == units(reprs.star(Aggregation.GROUP).nodes)


@pytest.mark.parametrize("seed", SEEDS)
class TestRandomRankings:
    """Spearman correlation over random score vectors."""

    @staticmethod
    def _tables(seed: int) -> tuple[RankTable, RankTable, RankTable]:
        rng = random.Random(seed)
        nodes = [f"#{c}" for c in CHARACTERS[: rng.randint(2, len(CHARACTERS))]]
        first = {node: rng.randint(0, 4) for node in nodes}
        second = {node: rng.randint(0, 4) for node in nodes}
        rescaled = {node: 3 * score + 1 for node, score in first.items()}
        return (
            RankTable.from_scores("first", first),
            RankTable.from_scores("second", second),
            RankTable.from_scores("rescaled", rescaled),
        )

    def test_range_and_symmetry(self, seed: int) -> None:
        first, second, _ = self._tables(seed)
        rho = spearman(first, second)
        back = spearman(second, first)

        if math.isnan(rho):
            assert math.isnan(back)
        else:
            assert -1.0 <= rho <= 1.0
            assert rho == pytest.approx(back)

    def test_monotone_rescaling(self, seed: int) -> None:
        first, second, rescaled = self._tables(seed)
        rho = spearman(first, second)

        if math.isnan(rho):
            assert math.isnan(spearman(rescaled, second))
        else:
            assert spearman(rescaled, second) == pytest.approx(rho)
