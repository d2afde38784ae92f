import numpy as np
import pytest

from colorkeys import (
    Alphabet,
    Belief,
    Color,
    ColorsChanged,
    ConfigError,
    ClickFeedback,
    KeySelected,
    KeySpace,
    Session,
    SessionConfig,
    SessionWarning,
    TextChanged,
    UNDO,
    bayes_update,
    check_selection,
    assign_greedy,
    train,
)


def click_until_selected(session, key, max_clicks=200):
    """Click the key's current color until the session selects something."""
    for _ in range(max_clicks):
        color = session.assignment.color_of(key)
        events = session.observe_click(color)
        for ev in events:
            if isinstance(ev, KeySelected):
                return ev
    raise AssertionError(f"no selection after {max_clicks} clicks")


class TestStart:
    def test_initial_undo_probability_is_zero(self, tiny_config):
        session = Session(tiny_config)
        assert session.belief.prob(UNDO) == pytest.approx(0.0, abs=1e-9)

    def test_order_one_uniformish_prior(self):
        alphabet = Alphabet()
        model = train(["".join(alphabet.symbols)], order=1)
        session = Session(SessionConfig(lm=model))
        chars = [session.belief.prob(ch) for ch in alphabet]
        assert max(chars) - min(chars) < 1e-9

    def test_first_assignment_available(self, tiny_config):
        session = Session(tiny_config)
        state = session.current_state()
        assert set(state.assignment.as_dict()) == set(session.keyspace.keys)

    def test_bad_threshold_rejected(self, tiny_model):
        with pytest.raises(ConfigError):
            SessionConfig(lm=tiny_model, threshold=0.4)
        with pytest.raises(ConfigError):
            SessionConfig(lm=tiny_model, threshold=1.0)

    def test_bad_strategy_rejected(self, tiny_model):
        with pytest.raises(ValueError):
            SessionConfig(lm=tiny_model, strategy="zigzag")


class TestSelectionDynamics:
    def test_concentrated_prior_selects_in_two_clicks(self):
        # belief-level trace of the engine's own loop: prior 0.6 on one key,
        # theta 0.9; the iterated Bayes formula crosses 0.95 on click two
        keyspace = KeySpace(Alphabet("a"))
        belief = Belief(keyspace, [0.6, 0.4])
        path = [0.6]
        for _ in range(3):
            assignment = assign_greedy(belief)
            belief = bayes_update(belief, assignment,
                                  assignment.color_of("a"), 0.9)
            path.append(belief.prob("a"))
        assert path[1] == pytest.approx(0.54 / 0.58, abs=1e-12)
        assert path[1] < 0.95
        assert path[2] >= 0.95
        assert check_selection(Belief(keyspace, [path[2], 1 - path[2]]), 0.95) == "a"

    def test_first_click_cannot_select_from_flat_prior(self, tiny_config):
        session = Session(tiny_config)
        events = session.observe_click(Color.RED)
        assert not any(isinstance(ev, KeySelected) for ev in events)

    def test_half_theta_click_changes_nothing(self, tiny_model):
        config = SessionConfig(lm=tiny_model, alpha0=1, beta0=1)
        session = Session(config)
        before = session.belief.probs.copy()
        events = session.observe_click(Color.BLUE)
        np.testing.assert_allclose(session.belief.probs, before, atol=1e-12)
        assert any(isinstance(ev, ColorsChanged) for ev in events)

    def test_selection_appends_character(self, tiny_config):
        session = Session(tiny_config)
        selected = click_until_selected(session, "h")
        assert selected.key == "h"
        assert session.typed_text == "h"
        assert selected.confidence >= tiny_config.threshold

    def test_min_clicks_two_delays_selection(self, tiny_model):
        config = SessionConfig(lm=tiny_model, min_clicks=2)
        session = Session(config)
        # drive a key hard; selection must never happen on click one
        key = "h"
        color = session.assignment.color_of(key)
        events = session.observe_click(color)
        assert not any(isinstance(ev, KeySelected) for ev in events)

    def test_min_clicks_zero_can_cascade(self):
        model = train(["aaaaaaaaaa" * 20], order=2, alphabet=Alphabet("ab"))
        config = SessionConfig(lm=model, min_clicks=0, max_cascade=5)
        session = Session(config)
        with pytest.raises(RuntimeError):
            for _ in range(10):
                session.observe_click(session.assignment.color_of("a"))

    def test_confidence_bookkeeping(self, tiny_config):
        session = Session(tiny_config)
        selected = click_until_selected(session, "h")
        assert session.belief.prob(UNDO) == pytest.approx(
            1.0 - selected.confidence, abs=1e-9)


class TestEvents:
    def test_colors_changed_on_every_click(self, tiny_config):
        session = Session(tiny_config)
        for _ in range(30):
            events = session.observe_click(Color.RED)
            assert isinstance(events[-1], ColorsChanged)

    def test_selection_event_order(self, tiny_config):
        session = Session(tiny_config)
        for _ in range(200):
            events = session.observe_click(session.assignment.color_of("h"))
            if any(isinstance(ev, KeySelected) for ev in events):
                kinds = [type(ev) for ev in events]
                assert kinds == [KeySelected, ClickFeedback, TextChanged, ColorsChanged]
                break
        else:
            raise AssertionError("selection never happened")

    def test_typed_text_equals_event_fold(self, tiny_config):
        session = Session(tiny_config)
        folded = ""
        keys = iter("he he".replace(" ", " ") * 3)
        target = next(keys)
        for _ in range(600):
            events = session.observe_click(session.assignment.color_of(target))
            for ev in events:
                if isinstance(ev, KeySelected):
                    if ev.key == UNDO:
                        folded = folded[:-1]
                    else:
                        folded += ev.key
                    target = next(keys, "e")
            assert session.typed_text == folded
            if len(folded) >= 4:
                break

    def test_closed_session_warns(self, tiny_config):
        session = Session(tiny_config)
        session.close()
        events = session.observe_click(Color.RED)
        assert len(events) == 1 and isinstance(events[0], SessionWarning)

    def test_state_snapshot_is_stable(self, tiny_config):
        session = Session(tiny_config)
        session.observe_click(Color.RED)
        a = session.current_state()
        b = session.current_state()
        assert a.typed_text == b.typed_text
        assert a.step == b.step
        np.testing.assert_array_equal(a.belief.probs, b.belief.probs)


class TestUndo:
    def scripted_wrong_selection(self, learn_on_undo):
        model = train(["hello world how are you", "hello there"], order=3)
        config = SessionConfig(lm=model, learn_on_undo_selection=learn_on_undo)
        session = Session(config)
        pre_alpha, pre_beta = session.error_model.alpha, session.error_model.beta
        snapshot = session.current_state().belief

        wrong = click_until_selected(session, "x")  # user never wanted this
        assert session.typed_text == "x"
        post_prior = session.current_state().belief
        assert post_prior.prob(UNDO) == pytest.approx(1 - wrong.confidence, abs=1e-9)

        undo = click_until_selected(session, UNDO)
        assert undo.key == UNDO
        assert session.typed_text == ""
        return session, snapshot, wrong, undo, (pre_alpha, pre_beta)

    def test_undo_restores_error_model_exactly(self):
        session, _, _, _, (pre_alpha, pre_beta) = self.scripted_wrong_selection(
            learn_on_undo=False)
        assert session.error_model.alpha == pre_alpha
        assert session.error_model.beta == pre_beta

    def test_undo_learning_keeps_own_delta(self):
        session, _, _, undo, (pre_alpha, pre_beta) = self.scripted_wrong_selection(
            learn_on_undo=True)
        own = session.history[-1].delta
        assert own is not None and own.correct + own.incorrect > 0
        assert session.error_model.alpha == pre_alpha + own.correct
        assert session.error_model.beta == pre_beta + own.incorrect

    def test_post_undo_prior_formula(self):
        session, snapshot, wrong, undo, _ = self.scripted_wrong_selection(
            learn_on_undo=False)
        prior = session.current_state().belief
        i_wrong = session.keyspace.index(wrong.key)
        assert prior.prob(wrong.key) == pytest.approx(1 - undo.confidence, abs=1e-9)
        # remaining keys keep the snapshot's proportions
        scale = undo.confidence / (1 - snapshot.probs[i_wrong])
        for i, key in enumerate(session.keyspace):
            if key == wrong.key:
                continue
            assert prior.probs[i] == pytest.approx(
                snapshot.probs[i] * scale, abs=1e-9)

    def test_undo_on_empty_text_is_noop_selection(self, tiny_model):
        config = SessionConfig(lm=tiny_model, learn_on_undo_selection=False)
        session = Session(config)
        undo = click_until_selected(session, UNDO)
        assert undo.key == UNDO
        assert session.typed_text == ""
        assert session.belief.prob(UNDO) == pytest.approx(
            1 - undo.confidence, abs=1e-9)

    def test_two_chars_undo_removes_last(self, tiny_config):
        session = Session(tiny_config)
        click_until_selected(session, "h")
        click_until_selected(session, "e")
        assert session.typed_text == "he"
        click_until_selected(session, UNDO)
        assert session.typed_text == "h"
