"""Acceptance gate: the eight exit criteria, each at its stated bound.

Every criterion prints one PASS/FAIL line (visible with pytest -s, or in
captured output on failure). All comparisons are exact; the only tolerances
are the stated wall-clock budgets of the performance criterion.
"""

import json
import time

from balkit import cli, harness, identities
from balkit.sequences import SequenceKind, pair_bc, term_recurrence
from test_harness import corrupt_c_diff_half

CONGRUENCE_IDS = [
    "PARITY_B", "ODD_C", "MOD16_C", "MOD4_CSUM", "EVEN_b",
    "MOD4_bDIFF", "ODD_c", "MOD8_c", "MOD16_c",
]


def _report(criterion: str, ok: bool, detail: str = "") -> None:
    line = "ACCEPTANCE %s: %s" % (criterion, "PASS" if ok else "FAIL")
    if detail:
        line += " (%s)" % detail
    print(line)
    assert ok, line


def test_c1_identity_suite_max_n_200():
    started = time.perf_counter()
    report = harness.run_suite(200)
    elapsed = time.perf_counter() - started
    ok = (
        report.passed
        and report.total_failures == 0
        and len(report.records) == 36
        and elapsed < 120.0
    )
    _report("C1 identity suite max_n=200", ok,
            "36 identities, %d failures, %.1fs" % (report.total_failures, elapsed))


def test_c2_negative_control(capsys, monkeypatch):
    corrupted = corrupt_c_diff_half()
    monkeypatch.setattr(identities, "list_identities", lambda: corrupted)
    code = cli.main(["verify", "--max-n", "30", "--format", "json"])
    out = capsys.readouterr().out
    obj = json.loads(out)
    failures = sum(len(r["failures"]) for r in obj["identities"])
    with capsys.disabled():
        _report("C2 negative control (16 -> 15 in C_DIFF_HALF)",
                code == 1 and failures >= 1 and obj["pass"] is False,
                "exit=%d, failures=%d" % (code, failures))


def test_c3_method_agreement_to_2000():
    report = harness.compare_methods(2000)
    checked = sum(r.checked for r in report.records)
    _report("C3 method agreement n<=2000", report.passed and checked == 2001 + 2001 + 2000 + 2000,
            "%d terms, exact equality across 3 routes" % checked)


def test_c4_oracle_equivalence_to_1e6():
    started = time.perf_counter()
    report = harness.oracle_equivalence(10**6)
    elapsed = time.perf_counter() - started
    from balkit.oracle import search_family
    bal = search_family(SequenceKind.BALANCING, 10**6)
    cob = search_family(SequenceKind.COBALANCING, 10**6)
    ok = (
        report.passed
        and bal == [1, 6, 35, 204, 1189, 6930, 40391, 235416]
        and cob == [0, 2, 14, 84, 492, 2870, 16730, 97512, 568344]
        and elapsed < 60.0
    )
    _report("C4 oracle equivalence to 1e6", ok,
            "%d+%d members, witnesses verified, %.1fs" % (len(bal), len(cob), elapsed))


def test_c5_pell_invariants_to_5000():
    bs, cs = [0, 1], [1, 3]
    while len(bs) <= 5000:
        bs.append(6 * bs[-1] - bs[-2])
        cs.append(6 * cs[-1] - cs[-2])
    ok = all(cs[n] ** 2 - 8 * bs[n] ** 2 == 1 for n in range(5001))
    small_b, small_c = [0, 2], [1, 7]
    while len(small_b) < 5000:
        small_b.append(6 * small_b[-1] - small_b[-2] + 2)
        small_c.append(6 * small_c[-1] - small_c[-2])
    ok = ok and all(
        small_c[i] ** 2 - 8 * small_b[i] ** 2 - 8 * small_b[i] == 1
        for i in range(5000)
    )
    _report("C5 Pell invariants n<=5000", ok, "exact")


def test_c6_congruences_to_1000():
    report = harness.run_suite(1000, ids=CONGRUENCE_IDS)
    checked = sum(r.checked for r in report.records)
    _report("C6 parity/congruence theorems n<=1000",
            report.passed and len(report.records) == 9,
            "%d cases" % checked)


def test_c7_performance_doubling():
    started = time.perf_counter()
    big_b, big_c = pair_bc(10**6)
    elapsed_big = time.perf_counter() - started
    pell_ok = big_c * big_c - 8 * big_b * big_b == 1

    started = time.perf_counter()
    rec_val = term_recurrence(SequenceKind.BALANCING, 10**5)
    rec_s = time.perf_counter() - started
    started = time.perf_counter()
    dbl_val = pair_bc(10**5)[0]
    dbl_s = time.perf_counter() - started
    ratio = rec_s / dbl_s

    ok = pell_ok and elapsed_big < 60.0 and rec_val == dbl_val and ratio >= 10.0
    _report("C7 performance", ok,
            "B(1e6) in %.1fs (Pell ok=%s, %d bits), speedup at 1e5 = %.0fx"
            % (elapsed_big, pell_ok, big_b.bit_length(), ratio))


def test_c8_report_determinism_across_jobs(capsys):
    code1 = cli.main(["verify", "--max-n", "100", "--format", "json", "--jobs", "1"])
    out1 = capsys.readouterr().out
    code2 = cli.main(["verify", "--max-n", "100", "--format", "json", "--jobs", "4"])
    out2 = capsys.readouterr().out
    ok = code1 == code2 == 0 and out1 == out2 and len(out1) > 0
    with capsys.disabled():
        _report("C8 report determinism across --jobs", ok,
                "%d identical bytes" % len(out1.encode()))
