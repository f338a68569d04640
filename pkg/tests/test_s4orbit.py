import random

import pytest

from braidmf import (
    GeneratorAction,
    apply_generator,
    in_hat_orbit,
    invariant_M,
    property_run,
    snake_direct,
    snake_table,
    snake_via_word,
    tau0,
)
from braidmf.s4orbit import (
    B_VALUES,
    D_VALUES,
    PI,
    SNAKE_STEP_MOVES,
    T12,
    T13,
    T24,
    T34,
    WINDOW_DERIVATIONS,
    all_windows,
    apply_action_word,
    change_positions,
    embed_window,
    hat_generator_words,
    random_action_word,
    replay_derivation,
    sigma_p_action,
    sigma_q_action,
    verify_nonconjugacy,
)


def test_tau0_structure():
    f = tau0(2, 1)
    assert f.length == 12 and f.boundary == 4
    assert f.factors[:4] == (T12, T34, T12, T34)
    assert f.factors[4:] == (T13, T24) * 4
    assert in_hat_orbit(f)
    assert f.product().is_identity()
    with pytest.raises(ValueError):
        tau0(0, 1)


def test_invariant_m_reference_values():
    base = tau0(1, 1)
    assert invariant_M(base) == 0
    assert invariant_M(apply_generator(base, sigma_p_action(1, 1))) == 2
    assert invariant_M(apply_generator(base, sigma_q_action(1, 1))) == 1


def test_swap_action():
    base = tau0(1, 1)
    g = apply_generator(base, GeneratorAction("swap", 1))
    assert g.factors[0] == T34 and g.factors[1] == T12
    assert change_positions(g) == [0, 1]
    with pytest.raises(ValueError):
        apply_generator(base, GeneratorAction("swap", base.boundary))
    with pytest.raises(ValueError):
        GeneratorAction("rotate", 1)


def test_trivial_action_and_orbit_guard():
    base = tau0(1, 2)
    assert apply_generator(base, GeneratorAction("trivial")) == base
    bad = base.with_factors((T13,) + base.factors[1:])  # B-value in D-block
    assert not in_hat_orbit(bad)
    with pytest.raises(ValueError):
        invariant_M(bad)


def test_snake_fixes_tau0():
    for b, d in ((1, 1), (2, 1), (1, 2), (2, 3)):
        base = tau0(b, d)
        assert snake_direct(base) == base
        assert snake_via_word(base) == base


def test_snake_case_rule_on_all_windows():
    # trivial-or-pi windows are fixed, anything else is pi-conjugated
    for window in all_windows():
        f = embed_window(window, 1, 1)
        prod = window[0] * window[1] * window[2] * window[3]
        out = snake_direct(f)
        lo = f.boundary - 2
        if prod.is_identity() or prod == PI:
            assert out == f
        else:
            assert out.factors[lo : lo + 4] == tuple(
                PI * t * PI for t in window
            )


def test_snake_table_agrees_everywhere():
    for b, d in ((1, 1), (2, 2)):
        rows = snake_table(b, d)
        assert len(rows) == 16
        assert all(r["agree"] for r in rows)


def test_window_derivations_replay():
    assert len(WINDOW_DERIVATIONS) == 4
    for lines in WINDOW_DERIVATIONS:
        assert replay_derivation(lines[0]) == lines
        assert len(lines) == len(SNAKE_STEP_MOVES) + 1


def test_derivation_endpoints_match_case_rule():
    # first two derivations end where they started; last two end
    # pi-conjugated in every slot
    for lines in WINDOW_DERIVATIONS[:2]:
        assert lines[-1] == lines[0]
    for lines in WINDOW_DERIVATIONS[2:]:
        assert lines[-1] == tuple(PI * t * PI for t in lines[0])


def test_hat_generators_exclude_adjacent_pair_swaps():
    words = hat_generator_words(1, 1)
    kinds = {tuple(a.kind for a in w) for w in words}
    assert ("trivial",) in kinds and ("snake",) in kinds
    for w in words:
        if len(w) == 3:  # chain transposition: slots (i, i+2)
            assert [a.kind for a in w] == ["swap"] * 3
            i = w[0].index
            assert w[1].index == i + 1 and w[2].index == i
            # stays on one side of the boundary
            assert (i + 2 <= 4) or (i >= 5)
    assert ("swap",) not in kinds


def test_hat_generators_preserve_m_parity():
    rng = random.Random(21)
    base = tau0(2, 2)
    gens = hat_generator_words(2, 2)
    for _ in range(300):
        f = apply_action_word(base, [a for w in random_action_word(rng, gens, 6) for a in w])
        for gw in gens:
            m = invariant_M(apply_action_word(f, gw))
            assert m % 2 == invariant_M(f) % 2
            if len(gw) == 3:  # chain transpositions even preserve M exactly
                assert m == invariant_M(f)


def test_property_run_counts_words():
    rep = property_run(1, 1, trials=500, seed=3)
    assert rep["violations"] == {"orbit": 0, "evenness": 0, "m_parity": 0}
    assert rep["generator_words"] > 0


def test_verify_nonconjugacy_report():
    rep = verify_nonconjugacy(1, 1, trials=500, seed=0)
    assert rep["verdict"] == "not conjugate in stabilized monodromy group"
    assert rep["left_parities"] == [0]
    assert rep["right_parity"] == 1
    assert rep["orbit_violations"] == 0


def test_verify_nonconjugacy_inconclusive_for_equal_sides():
    act = sigma_p_action(1, 1)
    rep = verify_nonconjugacy(1, 1, trials=100, seed=0, left=act, right=act)
    assert rep["verdict"] == "inconclusive"


def test_block_values():
    assert set(D_VALUES) == {T12, T34}
    assert set(B_VALUES) == {T13, T24}
    assert PI * PI == T12 * T12  # both identity
