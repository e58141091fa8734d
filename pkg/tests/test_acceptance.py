"""Acceptance criteria, one test per sub-check.

Every test records its outcome; the terminal summary prints one line per
criterion. Run with ``pytest tests/test_acceptance.py -s`` to also see the
per-sub-check lines as they happen.
"""

import io
import itertools
import json
import math
import time

import numpy as np
import pytest

from beattygame.beatty import build_tables, s_set
from beattygame.cli import main
from beattygame.core import Position
from beattygame.ruleset import ExtraMoveTable, closed_form_k2, closed_form_k2_move, extra_pairs
from beattygame.solver import audit_winning_moves, check_no_p_to_p
from beattygame.sturmian import (
    E,
    ETA,
    check_balance,
    check_eq16,
    check_lemma17,
    count_stats,
    fixed_point_morphism,
    lemma17_factor_counts,
    one_density,
    phi_word,
    theta,
    theta_word,
    three_way_agreement,
    w_in,
)
from beattygame.synth import compare_with_typeiii

from conftest import record

ALL_K = list(range(1, 9))
FAMILY_K = list(range(2, 9))


def cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


# 1. headline equivalence -------------------------------------------------


@pytest.mark.parametrize("k", ALL_K)
def test_c1_verify_bound_1000(k):
    t0 = time.perf_counter()
    code, text = cli("verify", "--k", str(k), "--bound", "1000", "--format", "json", "--no-timings")
    elapsed = time.perf_counter() - t0
    report = json.loads(text)
    failed = [c["name"] for c in report["checks"] if not c["pass"]]
    ok = code == 0 and not failed and elapsed <= 60
    record(1, f"k={k}", ok, f"{elapsed:.1f}s" + (f" failed={failed}" if failed else ""))
    assert ok


# 2. tables ---------------------------------------------------------------

K2_A = [1, 2, 4, 5, 6, 8, 9, 10, 12, 13, 15, 16, 17, 19, 20, 21, 23, 24]
K2_C = [1, 1, 2, 1, 1, 2, 1, 1, 2, 1, 2, 1, 1, 2, 1, 1, 2, 1]
K2_B = [3, 7, 11, 14, 18, 22, 26, 29, 33, 37, 41, 44, 48, 52, 55]
K2_D = [3, 4, 4, 3, 4, 4, 4, 3, 4, 4, 4, 3, 4, 4, 3]
K4_C = "11112111121111211112111121112111121"
K4_D = "56666566666566666566666566666566665"

K2_MOVES = [(2, 6), (9, 25), (35, 96)]
K4_MOVES = {
    1: [(2, 10), (13, 63), (77, 372)],
    2: [(3, 16), (20, 98), (119, 576)],
    3: [(4, 22), (27, 133), (163, 780)],
}


def test_c2_k2_sequences():
    t = build_tables(2, 18)
    got = (t.a[1:19].tolist(), t.c[1:19].tolist(), t.b[1:16].tolist(), t.d[1:16].tolist())
    ok = got == (K2_A, K2_C, K2_B, K2_D)
    record(2, "k=2 A/C (18 terms), B/D (15 terms)", ok)
    assert ok


def test_c2_k4_c_over_d():
    t = build_tables(4, 35)
    c = "".join(map(str, t.c[1:36].tolist()))
    d = "".join(map(str, t.d[1:36].tolist()))
    ok = (c, d) == (K4_C, K4_D)
    record(2, "k=4 C/D 35 columns", ok, "" if ok else f"C={c} D={d}")
    assert ok


def test_c2_k2_extra_moves():
    got = ExtraMoveTable.build(2, 100).move_list()
    ok = got == K2_MOVES
    record(2, "k=2 Type III moves", ok, str(got))
    assert ok


def test_c2_k4_extra_moves():
    table = ExtraMoveTable.build(4, 800)
    got = {i: [(f, g - 1) for f, g in table.family(i)[1:4]] for i in (1, 2, 3)}
    wrong = [
        f"i={i}: listed {want} computed {have}"
        for i in (1, 2, 3)
        for want, have in zip(K4_MOVES[i], got[i])
        if want != have
    ]
    ok = not wrong
    record(2, "k=4 Type III moves (nine listed pairs)", ok, "; ".join(wrong))
    assert ok, wrong


# 3. worked example -------------------------------------------------------


def test_c3_worked_example():
    code, text = cli("best", "--k", "4", "38", "185")
    members = s_set(4, 186)
    ok = (
        code == 0
        and text == "position (38,185)\nTypeIII i=2 (20,98) -> (18,87)\n"
        and Position(38, 186) in members
        and Position(18, 87) in members
    )
    record(3, "best --k 4 38 185", ok, text.strip().replace("\n", " | "))
    assert ok


# 4. closed form ----------------------------------------------------------


def test_c4_closed_form():
    pairs = extra_pairs(2, 1, 10**40)[:31]
    assert len(pairs) == 31
    ok_pairs = [closed_form_k2(n) for n in range(31)] == pairs
    # the two displayed expressions, evaluated exactly, give the move (f, g - 1)
    ok_moves = [closed_form_k2_move(n) for n in range(31)] == [(f, g - 1) for f, g in pairs]
    ok = ok_pairs and ok_moves
    record(4, "closed form n <= 30", ok, f"pairs={ok_pairs} moves={ok_moves}")
    assert ok


# 5. lemma suite ----------------------------------------------------------

N5 = 10**4


@pytest.mark.parametrize("k", FAMILY_K)
def test_c5_second_order_recurrence(k):
    ok = True
    for i in range(1, k):
        g = [g for _, g in extra_pairs(k, i, 10**30)]
        ok &= all(g[n + 1] == (k + 2) * g[n] - g[n - 1] for n in range(1, len(g) - 1))
    record(5, f"g recurrence k={k}", ok)
    assert ok


@pytest.mark.parametrize("k", ALL_K)
def test_c5_integer_identities(k):
    t = build_tables(k, N5 * k)
    n = np.arange(N5 + 1)
    ok = bool(np.array_equal(t.b[n], t.a[n * k] + n))
    ok &= set(t.c[1 : N5 + 1].tolist()) == {1, 2}
    ok &= set(t.d[1 : N5 + 1].tolist()) == {k + 1, k + 2}
    record(5, f"b_n = a_nk + n, c/d ranges k={k}", ok)
    assert ok


@pytest.mark.parametrize("k", ALL_K)
def test_c5_large_d_steps_between_twos(k):
    t = build_tables(k, N5)
    twos = np.flatnonzero(t.c[: N5 + 1] == 2)
    counts = {int(np.sum(t.d[p + 1 : q] == k + 2)) for p, q in zip(twos[:-1], twos[1:])}
    ok = counts == {k - 1}
    record(5, f"k-1 large d between twos k={k}", ok, str(counts))
    assert ok


@pytest.mark.parametrize("k", ALL_K)
def test_c5_c2_equivalence(k):
    t = build_tables(k, N5)
    n = np.arange(1, N5 + 1)
    ok = bool(np.array_equal(t.c[1:] == 2, (t.d[1:] == k + 2) & ((t.b[1:] - n) % k == 0)))
    record(5, f"c=2 iff d=k+2 and b=n mod k, k={k}", ok)
    assert ok


@pytest.mark.parametrize("k", FAMILY_K)
def test_c5_word_counts(k):
    ok = True
    for i in range(1, k):
        pairs = extra_pairs(k, i, N5 * 10)
        for n, (f, g) in enumerate(pairs):
            sig, tk, length = count_stats(w_in(k, i, n))
            ok &= (tk, length) == (f, g)
            ok &= n == 0 or sig == pairs[n - 1][1]
    record(5, f"tau_k and letter counts of w^i_n k={k}", ok)
    assert ok


@pytest.mark.parametrize("k", FAMILY_K)
def test_c5_balance(k):
    ok = True
    for i in range(1, k):
        pairs = extra_pairs(k, i, N5)
        for n in range(len(pairs)):
            ok &= check_balance(k, i, n, N5)
    record(5, f"sigma balance, windows over {N5} letters k={k}", ok)
    assert ok


@pytest.mark.parametrize("k", FAMILY_K)
def test_c5_pairs_in_s(k):
    t = build_tables(k, N5)
    ok = True
    for i in range(1, k):
        for f, g in extra_pairs(k, i, int(t.b[-1]))[1:]:
            ok &= t.contains(f, g)
    record(5, f"(f_n, g_n) in S_k k={k}", ok)
    assert ok


@pytest.mark.parametrize("k", FAMILY_K)
def test_c5_factor_scan(k):
    ok = True
    suffixes = []
    for i in range(1, k):
        for n in range(-1, 4):
            ok &= check_lemma17(k, i, n)
            suffixes.append(lemma17_factor_counts(k, i, n)[1])
    record(5, f"factor scan n <= 3 k={k}", ok, f"{len(suffixes)} suffix counts recorded")
    assert ok


@pytest.mark.parametrize("k", ALL_K)
def test_c5_letter_correspondence(k):
    ok = check_eq16(k, N5)
    record(5, f"c_n = 2 iff letter tau_k, k={k}", ok)
    assert ok


# 6. word constructions ---------------------------------------------------


@pytest.mark.parametrize("k", ALL_K)
def test_c6_three_constructions(k):
    agree = three_way_agreement(k, 10**5)
    record(6, f"three constructions at 10^5 k={k}", agree == 3, f"{agree}/3")
    assert agree == 3


@pytest.mark.parametrize("k", ALL_K)
def test_c6_composition_identity(k):
    std = (E @ ETA) ** k @ ETA
    lhs, rhs = std @ E, theta(k)
    fix_lhs, fix_rhs = std, E @ fixed_point_morphism(k)
    words = ["".join(w) for n in range(11) for w in itertools.product("01", repeat=n)]
    words += [phi_word(k, 1000).plain, theta_word(k, 1000)]
    ok = all(lhs(w) == rhs(w) and fix_lhs(w) == fix_rhs(w) for w in words)
    record(6, f"(E eta)^k eta identity k={k}", ok, f"{len(words)} words")
    assert ok


@pytest.mark.parametrize("k", ALL_K)
def test_c6_density(k):
    gamma = (math.sqrt(k * k + 4 * k) - k) / 2
    err = abs(one_density(theta_word(k, 10**6)) - gamma)
    record(6, f"1-density at 10^6 k={k}", err < 1e-3, f"error {err:.2e}")
    assert err < 1e-3


# 7. greedy synthesis -----------------------------------------------------


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_c7_greedy(k):
    report = compare_with_typeiii(k, 600)
    record(7, f"greedy k={k} bound 600", report.matches, f"order={report.order} tried={report.tried}")
    assert report.matches


# 8. no P-to-P move, and a winning move from every N-position ---------------


@pytest.mark.parametrize("k", ALL_K)
def test_c8_no_p_to_p(k):
    result = check_no_p_to_p(k, 500)
    record(8, f"no P-to-P k={k}", result.passed, "" if result.passed else str(result.witness))
    assert result.passed


@pytest.mark.parametrize("k", ALL_K)
def test_c8_winning_moves(k):
    result = audit_winning_moves(k, 500)
    record(8, f"winning move audit k={k}", result.passed, "" if result.passed else str(result.witness))
    assert result.passed
