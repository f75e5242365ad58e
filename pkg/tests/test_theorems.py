import os

import pytest

from bowtie.modules import Submodule, zero_submodule
from bowtie.theorems import (
    THEOREM_IDS,
    CorpusSpec,
    TheoremReport,
    check_L1,
    check_L3i,
    check_L8,
    check_T4,
    check_T_final,
    check_divergence,
    check_transfer,
    default_budget,
    hunt,
    make_zn_instance,
    normalize_theorems,
    run_checker,
    run_instance,
    serialize_reports,
    summarize,
)

ALL_VARIANTS = ("af", "azizi", "behboodi")
BOTH_READINGS = ("bowtie", "all-submodules")


def test_report_line_has_six_columns(z6):
    n = zero_submodule(z6.inst.base_module)
    row = check_L1(z6, n)
    cols = row.line().split("\t")
    assert len(cols) == 6
    assert cols[1] == "L1" and cols[4] == "pass"


def test_L1_z6_zero(z6):
    n = zero_submodule(z6.inst.base_module)
    row = check_L1(z6, n)
    assert row.outcome == "pass"
    assert "{(0,0),(0,3)}" in row.notes


def test_L1_accepts_improper_n(z6):
    whole = z6.base_submodules[-1]
    assert not whole.is_proper
    assert check_L1(z6, whole).outcome == "pass"


def test_transfer_prime_holds_z12(z12):
    n = Submodule(z12.inst.base_module, [0, 3, 6, 9])
    row = check_transfer(z12, n, "prime")
    assert row.outcome == "pass"
    assert row.stats == {"base": True, "duplicate": True}


def test_transfer_weakly_prime_fails_z6_zero(z6):
    n = zero_submodule(z6.inst.base_module)
    row = check_transfer(z6, n, "weakly_prime_af")
    assert row.outcome == "fail"
    assert "base to duplicate" in row.witness_text
    assert "(2,5)" in row.witness_text and "(3,3)" in row.witness_text


def test_transfer_primary_z16(z16):
    n = Submodule(z16.inst.base_module, [0, 8])
    row = check_transfer(z16, n, "primary")
    assert row.outcome == "pass"
    assert row.stats == {"base": True, "duplicate": True}


def test_L3i_passes_on_z6_for_all_variants(z6):
    # both sides of the biconditional are false here, so every variant
    # and reading agrees
    n = zero_submodule(z6.inst.base_module)
    for variant in ALL_VARIANTS:
        for reading in BOTH_READINGS:
            row = check_L3i(z6, n, variant, reading)
            assert row.outcome == "pass", (variant, reading)
            assert "weakly_prime=False all-colons-prime=False" in row.notes


def test_L3i_af_fails_on_diagonal_duplication():
    # I = 0 makes N join I = {0} vacuously af-weakly-prime while the
    # colon into the diagonal copy of the module is not prime
    ctx = make_zn_instance(4, [0])
    n = zero_submodule(ctx.inst.base_module)
    row = check_L3i(ctx, n, "af", "bowtie")
    assert row.outcome == "fail"
    assert "statement gap (forward)" in row.witness_text
    row_az = check_L3i(ctx, n, "azizi", "bowtie")
    assert row_az.outcome == "pass"


def test_T4_direction_reporting():
    ctx = make_zn_instance(6, [0])
    n = zero_submodule(ctx.inst.base_module)
    row = check_T4(ctx, n, "af")
    assert row.outcome == "fail"
    assert "statement gap (forward)" in row.witness_text
    assert check_T4(ctx, n, "azizi").outcome == "pass"


def test_L8_quotient_sizes(z6):
    row = check_L8(z6)
    assert row.outcome == "pass"
    assert row.stats == {"q1": 6, "q2": 3}
    assert "quotient sizes 6 and 3" in row.notes


def test_L8_across_small_corpus():
    for n in range(1, 9):
        from bowtie.rings import enumerate_ideals, make_zn

        for ideal in enumerate_ideals(make_zn(n)):
            ctx = make_zn_instance(n, ideal.members)
            row = check_L8(ctx)
            assert row.outcome == "pass", (n, ideal.members)
            assert row.stats["q1"] == n
            assert row.stats["q2"] == n // len(ctx.inst.im)


def test_T_final_z6(z6):
    row = check_T_final(z6)
    assert row.outcome == "pass"
    assert row.variant == "behboodi"


def test_divergence_z4_fails():
    ctx = make_zn_instance(4, [0])
    row = check_divergence(ctx)
    assert row.outcome == "fail"
    assert "af=True behboodi=False" in row.witness_text


def test_divergence_z5_passes():
    ctx = make_zn_instance(5, [0])
    assert check_divergence(ctx).outcome == "pass"


def test_run_checker_rejects_unknown(z6):
    with pytest.raises(ValueError):
        run_checker(z6, "NOPE", None)


def test_normalize_theorems():
    assert normalize_theorems(None) == THEOREM_IDS
    assert normalize_theorems(["l1", "L2"]) == ("L1", "L2")
    assert normalize_theorems(["transfer-all"]) == ("L2", "C_WP", "P_PRIMARY")
    assert normalize_theorems(["T4", "L1", "T4"]) == ("L1", "T4")
    with pytest.raises(ValueError):
        normalize_theorems(["nope"])


def test_default_budget_env(monkeypatch):
    monkeypatch.delenv("BOWTIE_BUDGET", raising=False)
    assert default_budget() == 256
    monkeypatch.setenv("BOWTIE_BUDGET", "64")
    assert default_budget() == 64
    monkeypatch.setenv("BOWTIE_BUDGET", "x")
    with pytest.raises(ValueError):
        default_budget()


def test_run_instance_row_order(z6):
    rows = run_instance(z6, ("L8", "L1", "T_FINAL"), ALL_VARIANTS, BOTH_READINGS)
    assert [r.theorem_id for r in rows[:2]] == ["L8", "T_FINAL"]
    assert all(r.theorem_id == "L1" for r in rows[2:])
    assert len(rows) == 2 + len(z6.base_submodules)


def test_hunt_budget_skip_rows():
    reports = hunt(CorpusSpec(max_n=6), theorems=["L1"], budget=10)
    skipped = [r for r in reports if r.outcome == "skip"]
    assert skipped  # Z_4 with the full ideal already exceeds 10
    assert all("budget exceeded" in r.notes for r in skipped)
    # skip keys name the instance, not a submodule
    assert all("|N=" not in r.instance_key for r in skipped)
    checked = [r for r in reports if r.outcome != "skip"]
    assert all(r.outcome == "pass" for r in checked)


def test_hunt_deterministic_across_workers():
    one = serialize_reports(hunt(CorpusSpec(max_n=5), workers=1))
    three = serialize_reports(hunt(CorpusSpec(max_n=5), workers=3))
    assert one == three


FROZEN_N6_COUNTS = {
    # theorem, variant -> (pass, fail, na)
    ("L1", "-"): (38, 0, 0),
    ("L2", "-"): (24, 0, 0),
    ("C_WP", "-"): (20, 4, 0),
    ("P_PRIMARY", "-"): (24, 0, 0),
    ("L3i", "af"): (42, 6, 0),
    ("L3i", "azizi"): (48, 0, 0),
    ("L3i", "behboodi"): (48, 0, 0),
    ("L3ii", "af"): (38, 2, 8),
    ("L3ii", "azizi"): (34, 0, 14),
    ("L3ii", "behboodi"): (34, 0, 14),
    ("C_PPW", "af"): (22, 2, 0),
    ("C_PPW", "azizi"): (24, 0, 0),
    ("C_PPW", "behboodi"): (24, 0, 0),
    ("T4", "af"): (21, 3, 0),
    ("T4", "azizi"): (24, 0, 0),
    ("T4", "behboodi"): (24, 0, 0),
    ("R_T4", "-"): (17, 0, 7),
    ("C_IRR", "af"): (18, 2, 4),
    ("C_IRR", "azizi"): (17, 0, 7),
    ("C_IRR", "behboodi"): (17, 0, 7),
    ("L_COLON_PROD", "af"): (21, 3, 0),
    ("L_COLON_PROD", "azizi"): (24, 0, 0),
    ("L_COLON_PROD", "behboodi"): (24, 0, 0),
    ("R_CEX", "-"): (20, 4, 0),
    ("P_FAITHFUL", "af"): (20, 0, 4),
    ("P_FAITHFUL", "azizi"): (17, 0, 7),
    ("P_FAITHFUL", "behboodi"): (17, 0, 7),
    ("L_RADICAL", "-"): (24, 0, 0),
    ("P_COLON_PRIMARY", "-"): (20, 0, 4),
    ("C_RADICAL_PRIME", "-"): (20, 0, 4),
    ("L8", "-"): (14, 0, 0),
    ("T_FINAL", "behboodi"): (13, 0, 1),
    ("DIVERGENCE", "-"): (3, 2, 1),
}


@pytest.fixture(scope="module")
def corpus6_reports():
    return hunt(CorpusSpec(max_n=6))


def test_corpus_counts_frozen(corpus6_reports):
    counts = {}
    for r in corpus6_reports:
        cell = counts.setdefault((r.theorem_id, r.variant), [0, 0, 0, 0])
        cell[("pass", "fail", "na", "skip").index(r.outcome)] += 1
    got = {k: tuple(v[:3]) for k, v in counts.items()}
    assert all(v[3] == 0 for v in counts.values())
    assert got == FROZEN_N6_COUNTS
    assert len(corpus6_reports) == 912


def test_failures_confined_to_af_and_probes(corpus6_reports):
    # every failing row is either an af-variant statement gap, the C_WP
    # transfer, or a probe (R_CEX, DIVERGENCE); azizi and behboodi never fail
    for r in corpus6_reports:
        if r.outcome != "fail":
            continue
        assert r.variant in ("af", "-"), r.line()
        if r.variant == "-":
            assert r.theorem_id in ("C_WP", "R_CEX", "DIVERGENCE"), r.line()


def test_af_failures_only_at_zero_submodule(corpus6_reports):
    for r in corpus6_reports:
        if r.outcome == "fail" and r.theorem_id not in ("L8", "T_FINAL", "DIVERGENCE"):
            assert r.instance_key.endswith("|N={0}"), r.line()


def test_divergence_first_at_n4(corpus6_reports):
    fails = [r for r in corpus6_reports
             if r.theorem_id == "DIVERGENCE" and r.outcome == "fail"]
    assert fails and fails[0].instance_key.startswith("Z4|")
    assert "first divergence: Z4" in summarize(corpus6_reports)


def test_serialize_header():
    text = serialize_reports([], header="x=1")
    assert text == "# x=1\n"


def test_report_witness_field_consistency():
    r = TheoremReport("k", "L1", outcome="pass")
    assert r.line().endswith("-")
