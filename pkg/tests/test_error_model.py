import random

import pytest

from colorkeys import (
    THETA_CLAMP,
    Alphabet,
    Color,
    ColorAssignment,
    CountDelta,
    ErrorModel,
    KeySpace,
)


def assignment_for(keyspace, red_keys):
    mask = [k in red_keys for k in keyspace]
    red = sum(1 / len(keyspace) for k in keyspace if k in red_keys)
    return ColorAssignment(keyspace, mask, red)


@pytest.fixture()
def ab_keyspace():
    return KeySpace(Alphabet("ab"))


class TestConstruction:
    def test_defaults_give_point_nine(self):
        model = ErrorModel()
        assert model.mean == pytest.approx(0.9)
        assert model.alpha == 9.0 and model.beta == 1.0

    def test_uniform_prior(self):
        assert ErrorModel(1, 1).mean == pytest.approx(0.5)

    def test_high_confidence_prior(self):
        assert ErrorModel(99, 1).mean == pytest.approx(0.99)

    def test_non_positive_rejected(self):
        for alpha0, beta0 in ((0, 1), (1, 0), (-1, 1), (1, -2)):
            with pytest.raises(ValueError):
                ErrorModel(alpha0, beta0)


class TestRecording:
    def test_all_matching_clicks(self, ab_keyspace):
        model = ErrorModel()
        a_red = assignment_for(ab_keyspace, {"a"})
        clicks = [(a_red, Color.RED)] * 3
        delta = model.record_selection(clicks, "a")
        assert delta == CountDelta(correct=3, incorrect=0)
        assert model.alpha == 12.0 and model.beta == 1.0

    def test_one_mismatch(self, ab_keyspace):
        model = ErrorModel()
        a_red = assignment_for(ab_keyspace, {"a"})
        clicks = [(a_red, Color.RED)] * 3 + [(a_red, Color.BLUE)]
        delta = model.record_selection(clicks, "a")
        assert delta == CountDelta(correct=3, incorrect=1)
        assert model.mean == pytest.approx(12 / 14)

    def test_empty_click_list(self):
        model = ErrorModel()
        delta = model.record_selection([], "a")
        assert delta == CountDelta(0, 0)
        assert (model.alpha, model.beta) == (9.0, 1.0)

    def test_judged_against_per_round_assignment(self, ab_keyspace):
        # the same observed color can be correct in one round and wrong in
        # the next once the colors have been reshuffled
        model = ErrorModel()
        a_red = assignment_for(ab_keyspace, {"a"})
        a_blue = assignment_for(ab_keyspace, {"b"})
        delta = model.record_selection(
            [(a_red, Color.RED), (a_blue, Color.RED)], "a")
        assert delta == CountDelta(correct=1, incorrect=1)

    def test_mean_after_corrections(self):
        model = ErrorModel()
        model.alpha += 5
        assert model.mean == pytest.approx(14 / 15)


class TestRollback:
    def test_record_then_rollback_is_identity(self, ab_keyspace):
        model = ErrorModel()
        a_red = assignment_for(ab_keyspace, {"a"})
        clicks = [(a_red, Color.RED), (a_red, Color.BLUE), (a_red, Color.RED)]
        delta = model.record_selection(clicks, "a")
        model.rollback(delta)
        assert model.alpha == 9.0 and model.beta == 1.0

    def test_rollback_of_zero_delta_is_noop(self):
        model = ErrorModel()
        model.rollback(CountDelta(0, 0))
        assert (model.alpha, model.beta) == (9.0, 1.0)

    def test_partial_rollback_matches_replay(self, ab_keyspace):
        a_red = assignment_for(ab_keyspace, {"a"})
        first = [(a_red, Color.RED)] * 2
        second = [(a_red, Color.RED), (a_red, Color.BLUE)]

        model = ErrorModel()
        model.record_selection(first, "a")
        d2 = model.record_selection(second, "a")
        model.rollback(d2)

        replay = ErrorModel()
        replay.record_selection(first, "a")
        assert (model.alpha, model.beta) == (replay.alpha, replay.beta)

    def test_over_rollback_rejected(self):
        model = ErrorModel(1, 1)
        with pytest.raises(ValueError):
            model.rollback(CountDelta(2, 0))

    def test_negative_delta_rejected(self):
        with pytest.raises(ValueError):
            CountDelta(-1, 0)


class TestProperties:
    def test_mean_monotonicity(self, ab_keyspace):
        a_red = assignment_for(ab_keyspace, {"a"})
        model = ErrorModel()
        before = model.mean
        model.record_selection([(a_red, Color.RED)], "a")
        assert model.mean >= before
        before = model.mean
        model.record_selection([(a_red, Color.BLUE)], "a")
        assert model.mean <= before

    def test_clamped_mean(self):
        assert ErrorModel(1e6, 1).likelihood_mean == THETA_CLAMP[1]
        assert ErrorModel(1, 1e6).likelihood_mean == THETA_CLAMP[0]
        assert ErrorModel().likelihood_mean == pytest.approx(0.9)

    def test_convergence_to_true_theta(self, ab_keyspace):
        # Bernoulli(theta*) correctness stream; at n=10000 the posterior
        # mean lands within 0.02 of theta* for each fixed seed
        a_red = assignment_for(ab_keyspace, {"a"})
        for seed in range(10):
            rng = random.Random(seed)
            theta_star = rng.uniform(0.6, 0.98)
            model = ErrorModel()
            clicks = [(a_red, Color.RED if rng.random() < theta_star else Color.BLUE)
                      for _ in range(10_000)]
            model.record_selection(clicks, "a")
            assert abs(model.mean - theta_star) < 0.02
