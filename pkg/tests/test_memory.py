import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from eegs.core import ActionSpec, EntityProfile, EventRecord, SELF, Valence
from eegs.errors import ValidationError
from eegs.memory import (AgentMemory, GoalNode, GoalTree, MemoryUpdateRules,
                         Preference, StandardEntry, goal)

NEG_VALENCE_DEGREES = {"joy": 1.0, "anger": -0.9648, "distress": -0.809}


def event(source, target, degree, name="Act", ts=0.0):
    valence = Valence.POSITIVE if degree >= 0 else Valence.NEGATIVE
    return EventRecord(source, ActionSpec(name, valence, degree), target, ts)


def tree_with(*goals_self, other=()):
    return GoalTree(self_goals=tuple(goals_self), other_goals=tuple(other))


class TestGoalTree:
    def test_root_shape(self):
        tree = GoalTree()
        nodes = {node.name: height for node, height in tree.walk()}
        assert nodes == {"Root": 0, "Self_goal": 1, "Other_goal": 1}

    def test_scorable_heights_start_at_two(self):
        child = goal("liking", "SELF", 0.4)
        tree = tree_with(goal("joy", "SELF", 0.6, children=(child,)))
        assert [(n.name, h) for n, h in tree.scorable()] == [("joy", 2), ("liking", 3)]

    def test_shared_node_rejected(self):
        shared = goal("joy", "KATE", 0.5)
        with pytest.raises(ValidationError):
            tree_with(shared, other=(shared,))

    def test_degree_range(self):
        with pytest.raises(ValidationError):
            goal("joy", "SELF", 1.5)

    def test_round_trip(self):
        tree = tree_with(goal("joy", "SELF", 0.6, children=(goal("liking", "SELF", 0.4),)),
                         other=(goal("joy", "KATE", 0.3),))
        assert GoalTree.from_list(tree.to_list()).to_list() == tree.to_list()


class TestRelevantGoals:
    def test_target_match(self):
        memory = AgentMemory(goals=tree_with(goal("joy", SELF, 0.6)))
        found = memory.relevant_goals(event("JOHN", SELF, -0.74, "Kick"))
        assert [(n.name, n.target, h) for n, h in found] == [("joy", SELF, 2)]

    def test_unknown_target_matches_nothing(self):
        memory = AgentMemory(goals=tree_with(goal("joy", SELF, 0.6)))
        assert memory.relevant_goals(event("PAUL", "NOBODY", 0.3)) == []

    def test_only_matching_target_returned(self):
        memory = AgentMemory(goals=tree_with(
            other=(goal("joy", "KATE", 0.3), goal("joy", "NICK", 0.3))))
        found = memory.relevant_goals(event("PAUL", "KATE", 0.45, "Help"))
        assert [(n.name, n.target) for n, _ in found] == [("joy", "KATE")]

    def test_target_agnostic_goal_always_relevant(self):
        memory = AgentMemory(goals=tree_with(goal("joy", None, 0.5)))
        assert len(memory.relevant_goals(event("PAUL", "KATE", 0.1))) == 1

    def test_matches_brute_force_scan(self):
        rng = random.Random(7)
        names = ["joy", "liking", "calm"]
        targets = [SELF, "KATE", "NICK", None]
        for _ in range(50):
            goals = tuple(goal(rng.choice(names), rng.choice(targets),
                               rng.uniform(-1, 1)) for _ in range(rng.randint(0, 6)))
            memory = AgentMemory(goals=tree_with(*goals))
            ev = event("PAUL", rng.choice(["KATE", "NICK", SELF]), 0.2)
            expected = [g for g in goals if g.target is None or g.target == ev.target]
            assert [n for n, _ in memory.relevant_goals(ev)] == expected


class TestPastImpacts:
    def test_empty_history(self):
        memory = AgentMemory()
        assert memory.past_impacts("A", "B") == (0.0, 0.0)

    def test_mixed_history(self):
        memory = AgentMemory()
        memory.history.append(event("A", "B", 0.31, "Greet", 0.0))
        memory.history.append(event("A", "B", -0.74, "Kick", 1.0))
        pos, neg = memory.past_impacts("A", "B")
        assert pos == pytest.approx(0.31)
        assert neg == pytest.approx(-0.74)

    def test_other_pairs_excluded(self):
        memory = AgentMemory()
        memory.history.append(event("X", "Y", 0.9, ts=0.0))
        assert memory.past_impacts("A", "B") == (0.0, 0.0)

    def test_signs_and_bound_property(self):
        rng = random.Random(3)
        memory = AgentMemory()
        for i in range(200):
            memory.history.append(event(rng.choice("ABC"), rng.choice("ABC".lower()),
                                        rng.uniform(-1, 1), ts=float(i)))
        for src in "ABC":
            for tgt in "abc":
                pos, neg = memory.past_impacts(src, tgt)
                assert pos >= 0.0 and neg <= 0.0
                assert pos + abs(neg) <= len(memory.history) + 1e-9

    def test_matches_brute_force(self):
        rng = random.Random(11)
        memory = AgentMemory()
        events = []
        for i in range(300):
            ev = event(rng.choice("AB"), rng.choice("AB".lower()),
                       rng.uniform(-1, 1), ts=float(i))
            events.append(ev)
            memory.history.append(ev)
        for src in "AB":
            for tgt in "ab":
                match = [e.action.degree for e in events
                         if e.source == src and e.target == tgt]
                pos = sum(d for d in match if d > 0)
                neg = sum(d for d in match if d < 0)
                got_pos, got_neg = memory.past_impacts(src, tgt)
                assert got_pos == pytest.approx(pos, abs=1e-12)
                assert got_neg == pytest.approx(neg, abs=1e-12)
                avg = oracles.average_degree(match)
                assert memory.average_past_degree(src, tgt) == pytest.approx(avg, abs=1e-12)


class TestAveragePastDegree:
    def test_two_events(self):
        memory = AgentMemory()
        memory.history.append(event("A", "B", 0.31, ts=0.0))
        memory.history.append(event("A", "B", 0.28, ts=1.0))
        assert memory.average_past_degree("A", "B") == pytest.approx(0.295)

    def test_no_events_is_neutral(self):
        assert AgentMemory().average_past_degree("A", "B") == 0.0

    def test_single_event(self):
        memory = AgentMemory()
        memory.history.append(event("A", "B", -0.74, ts=0.0))
        assert memory.average_past_degree("A", "B") == pytest.approx(-0.74)

    def test_timestamps_must_not_decrease(self):
        memory = AgentMemory()
        memory.history.append(event("A", "B", 0.1, ts=5.0))
        with pytest.raises(ValidationError):
            memory.history.append(event("A", "B", 0.1, ts=4.0))


class TestStandards:
    def test_stored_entry_returned(self):
        memory = AgentMemory()
        memory.standards[("anger", SELF, "JOHN")] = StandardEntry(
            "anger", SELF, "JOHN", Preference.NO, 0.8)
        entry = memory.lookup_standard("anger", SELF, "JOHN")
        assert entry.preference is Preference.NO
        assert entry.approval_degree == 0.8

    def test_unknown_triple_creates_neutral(self):
        memory = AgentMemory()
        entry = memory.lookup_standard("joy", SELF, "KATE")
        assert (entry.preference, entry.approval_degree) == (Preference.YES, 0.5)
        assert entry.key in memory.standards

    def test_lookup_idempotent(self):
        memory = AgentMemory()
        first = memory.lookup_standard("joy", SELF, "KATE")
        second = memory.lookup_standard("joy", SELF, "KATE")
        assert first == second
        assert len(memory.standards) == 1

    def test_peek_does_not_create(self):
        memory = AgentMemory()
        entry = memory.peek_standard("joy", SELF, "KATE")
        assert (entry.preference, entry.approval_degree) == (Preference.YES, 0.5)
        assert memory.standards == {}

    def test_approval_degree_range(self):
        with pytest.raises(ValidationError):
            StandardEntry("joy", SELF, "X", Preference.YES, 0.0)
        with pytest.raises(ValidationError):
            StandardEntry("joy", SELF, "X", Preference.YES, 1.1)


class TestUpdateAfterEvent:
    def test_perception_ema(self):
        memory = AgentMemory()
        memory.update_after_event(event("JOHN", SELF, -0.74, "Kick"), NEG_VALENCE_DEGREES)
        assert memory.profile("JOHN").perception == pytest.approx(-0.148)
        assert memory.profile(SELF).perception == pytest.approx(-0.148)

    def test_familiarity_step(self):
        memory = AgentMemory()
        memory.update_after_event(event("JOHN", SELF, 0.31, "Greet"), NEG_VALENCE_DEGREES)
        assert memory.profile("JOHN").familiarity == pytest.approx(0.9)
        # the target's familiarity is untouched
        assert memory.profile(SELF).familiarity == 1.0

    def test_familiarity_floor(self):
        memory = AgentMemory()
        memory.entities["JOHN"] = EntityProfile("JOHN", familiarity=0.05)
        memory.update_after_event(event("JOHN", SELF, 0.31, "Greet"), NEG_VALENCE_DEGREES)
        assert memory.profile("JOHN").familiarity == 0.0

    def test_negative_emotion_standard_erodes_toward_approval(self):
        memory = AgentMemory()
        memory.update_after_event(event("JOHN", SELF, -0.74, "Kick"), NEG_VALENCE_DEGREES)
        anger = memory.peek_standard("anger", SELF, "JOHN")
        # neutral 0.5 plus 0.1 * 0.74
        assert anger.preference is Preference.YES
        assert anger.approval_degree == pytest.approx(0.574)

    def test_positive_emotion_standard_created_but_not_drifted(self):
        memory = AgentMemory()
        memory.update_after_event(event("JOHN", SELF, -0.74, "Kick"), NEG_VALENCE_DEGREES)
        joy = memory.standards[("joy", SELF, "JOHN")]
        assert (joy.preference, joy.approval_degree) == (Preference.YES, 0.5)

    def test_preference_flips_when_belief_crosses_zero(self):
        memory = AgentMemory()
        memory.standards[("anger", SELF, "JOHN")] = StandardEntry(
            "anger", SELF, "JOHN", Preference.NO, 0.05)
        memory.update_after_event(event("JOHN", SELF, -0.74, "Kick"), NEG_VALENCE_DEGREES)
        anger = memory.peek_standard("anger", SELF, "JOHN")
        assert anger.preference is Preference.YES
        assert anger.approval_degree == pytest.approx(0.024)

    def test_action_standard_drifts_toward_experience(self):
        memory = AgentMemory()
        memory.update_after_event(event("JOHN", SELF, -0.74, "Kick"), NEG_VALENCE_DEGREES)
        kick = memory.peek_standard("Kick", "JOHN", SELF)
        # neutral 0.5 minus 0.1 * 0.74: kicking becomes less approved
        assert kick.preference is Preference.YES
        assert kick.approval_degree == pytest.approx(0.426)

    def test_self_sourced_events_skip_emotion_standards(self):
        memory = AgentMemory()
        memory.update_after_event(event(SELF, "JOHN", 0.31, "Greet"), NEG_VALENCE_DEGREES)
        assert ("anger", SELF, SELF) not in memory.standards

    def test_ranges_hold_under_long_random_runs(self):
        rng = random.Random(42)
        memory = AgentMemory()
        entities = ["JOHN", "PAUL", "KATE"]
        for i in range(10_000):
            src = rng.choice(entities)
            tgt = rng.choice([SELF] + [e for e in entities if e != src])
            memory.update_after_event(event(src, tgt, rng.uniform(-1, 1), ts=float(i)),
                                      NEG_VALENCE_DEGREES)
        for profile in memory.entities.values():
            assert 0.0 <= profile.familiarity <= 1.0
            assert -1.0 <= profile.perception <= 1.0
        for entry in memory.standards.values():
            assert 0.0 < entry.approval_degree <= 1.0


class TestSnapshot:
    def build(self):
        memory = AgentMemory(goals=tree_with(goal("joy", SELF, 0.6)))
        memory.update_after_event(event("JOHN", SELF, 0.31, "Greet", 0.0),
                                  NEG_VALENCE_DEGREES)
        memory.update_after_event(event("JOHN", SELF, -0.74, "Kick", 1.0),
                                  NEG_VALENCE_DEGREES)
        return memory

    def test_round_trip_identity(self):
        import json
        memory = self.build()
        doc = memory.to_dict()
        payload = json.dumps(doc, sort_keys=True, indent=2)
        restored = AgentMemory.from_dict(json.loads(payload))
        assert json.dumps(restored.to_dict(), sort_keys=True, indent=2) == payload

    def test_restored_queries_match(self):
        memory = self.build()
        restored = AgentMemory.from_dict(memory.to_dict())
        assert restored.past_impacts("JOHN", SELF) == memory.past_impacts("JOHN", SELF)
        assert restored.average_past_degree("JOHN", SELF) == \
            memory.average_past_degree("JOHN", SELF)
        assert restored.standards == memory.standards

    def test_duplicate_standard_rejected(self):
        doc = self.build().to_dict()
        doc["standards"].append(dict(doc["standards"][0]))
        with pytest.raises(ValidationError, match="duplicate"):
            AgentMemory.from_dict(doc)


@given(st.lists(st.floats(min_value=-1.0, max_value=1.0), min_size=0, max_size=30))
@settings(max_examples=200, deadline=None)
def test_perception_stays_bounded(degrees):
    memory = AgentMemory()
    for i, degree in enumerate(degrees):
        memory.update_after_event(event("JOHN", SELF, degree, ts=float(i)),
                                  NEG_VALENCE_DEGREES)
    profile = memory.profile("JOHN")
    assert -1.0 <= profile.perception <= 1.0
    assert 0.0 <= profile.familiarity <= 1.0
