from __future__ import annotations

import math
import random

import pytest

from f2rank.gf2 import BitMatrix, rank
from f2rank.graph import Graph
from f2rank.constructions import complete_graph, g2, g2_power
from f2rank.verify import (
    CosetDecomposition,
    NotSubspaceMatrixError,
    SrgParams,
    SrgViolation,
    check_balanced_rows,
    check_pairwise_quarters,
    coset_decompose,
    decomposition_invariants,
    full_report,
    quasirandom_deviation,
    srg_parameters,
    verify_extremal,
)

from conftest import random_graph


def _cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


# ---------------------------------------------------------------------------
# verify_extremal
# ---------------------------------------------------------------------------


def test_verify_extremal_passes_on_construction():
    report = verify_extremal(g2_power(2), 4)
    assert report.passed
    assert {c.name for c in report.checks} == {
        "order",
        "twin_free",
        "rank",
        "rows_form_subspace",
        "unique_isolated_vertex",
    }


def test_verify_extremal_failures():
    r = verify_extremal(g2(), 3)
    assert not r.passed and not r["order"].passed
    r2 = verify_extremal(Graph.empty(2), 1)
    assert not r2.passed and not r2["twin_free"].passed


# ---------------------------------------------------------------------------
# regularity checks
# ---------------------------------------------------------------------------


def test_balanced_rows():
    for m in (1, 2, 3):
        assert check_balanced_rows(g2_power(m))
    assert not check_balanced_rows(_cycle(3))  # rows have 2 ones of 3
    assert check_balanced_rows(Graph.empty(4))  # vacuous


def test_pairwise_quarters():
    assert check_pairwise_quarters(g2_power(2))
    assert check_pairwise_quarters(g2_power(3))
    assert not check_pairwise_quarters(_cycle(4))


def test_pairwise_quarters_against_naive():
    g = g2_power(2)
    n = g.order
    rows = g.adj.row_ints()
    for i in range(n):
        for j in range(i + 1, n):
            if not rows[i] or not rows[j]:
                continue
            for b in (0, 1):
                for bp in (0, 1):
                    size = sum(
                        1
                        for k in range(n)
                        if ((rows[i] >> k) & 1) == b and ((rows[j] >> k) & 1) == bp
                    )
                    assert size == n // 4


def test_srg_parameters():
    core = g2_power(2).remove_vertex(15)
    assert srg_parameters(core) == SrgParams(15, 8, 4, 4)
    assert srg_parameters(_cycle(5)) == SrgParams(5, 2, 0, 1)
    p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    out = srg_parameters(p4)
    assert isinstance(out, SrgViolation) and out.reason == "not regular"
    # degenerate but exact: a complete graph has no non-adjacent witness,
    # so mu is unconstrained (any value satisfies the definition)
    assert srg_parameters(complete_graph(4)) == SrgParams(4, 3, 2, None)
    assert srg_parameters(complete_graph(4)).consistent_with(4, 3, 2, 17)
    assert srg_parameters(Graph.empty(3)) == SrgParams(3, 0, None, 0)
    # C4 is SRG [4,2,0,2]
    assert srg_parameters(_cycle(4)) == SrgParams(4, 2, 0, 2)


def test_srg_parameters_on_powers():
    for m in (1, 2, 3):
        n_big = 4**m
        g = g2_power(m)
        core = g.remove_vertices(g.isolated_vertices())
        params = srg_parameters(core)
        assert isinstance(params, SrgParams)
        assert params.consistent_with(n_big - 1, n_big // 2, n_big // 4, n_big // 4)
        if m > 1:  # both pair kinds exist, so all four values are pinned
            assert params == SrgParams(n_big - 1, n_big // 2, n_big // 4, n_big // 4)


def test_quasirandom_deviation():
    assert quasirandom_deviation(Graph.empty(5)) == 0.0
    # complete graphs: per-pair deviation is exactly 2 with p = 1
    for n in (4, 8, 16):
        d = quasirandom_deviation(complete_graph(n))
        assert math.isclose(d, 2 * n * (n - 1) / n**3, rel_tol=1e-12)
    for m in (2, 3, 4):
        g = g2_power(m)
        core = g.remove_vertices(g.isolated_vertices())
        assert quasirandom_deviation(core) <= 1.0 / core.order


# ---------------------------------------------------------------------------
# coset decomposition
# ---------------------------------------------------------------------------


def test_coset_decompose_certificate():
    for m in (1, 2, 3):
        a = g2_power(m).adj
        d = coset_decompose(a)
        assert isinstance(d, CosetDecomposition)
        # permutation applied to A reproduces the reordered matrix
        assert a.conjugate(d.perm) == d.reordered
        # row k is the XOR of the basis rows selected by k's binary digits
        for k in range(a.rows):
            acc = 0
            for i, b in enumerate(d.basis):
                if (k >> i) & 1:
                    acc ^= b.bits
            assert d.reordered.row_int(k) == acc
        assert d.reordered.row_int(0) == 0
        assert d.coset_vector == d.coset_vector_second_half
        half = a.rows // 2
        assert d.top_block == d.reordered.submatrix(list(range(half)), list(range(half)))


def test_coset_decompose_rank_of_top_block():
    d = coset_decompose(g2_power(3).adj)
    assert rank(d.top_block) == 4  # dimension 6 minus 2


def test_coset_decompose_rejects():
    with pytest.raises(NotSubspaceMatrixError):
        coset_decompose(BitMatrix.zeros(4, 4))  # duplicate rows
    with pytest.raises(NotSubspaceMatrixError):
        coset_decompose(complete_graph(4).adj)  # rows not a subspace
    with pytest.raises(NotSubspaceMatrixError):
        coset_decompose(BitMatrix.from_strings(["01", "00"]))  # not symmetric


def test_decomposition_invariants_on_powers():
    for m in (1, 2, 3):
        report = decomposition_invariants(g2_power(m).adj)
        assert report.passed, [c.name for c in report.checks if not c.passed]


def test_decomposition_invariants_under_relabeling():
    # conjugation preserves the subspace structure, so every invariant must
    # hold for arbitrary vertex orders; both membership branches occur
    rng = random.Random(31)
    branches = set()
    for _ in range(25):
        perm = list(range(16))
        rng.shuffle(perm)
        a = g2_power(2).adj.conjugate(perm)
        report = decomposition_invariants(a)
        assert report.passed, [
            (c.name, c.details) for c in report.checks if not c.passed
        ]
        branches.add("True" in report["x_w_membership_dichotomy"].details)
    assert branches == {True, False}, "expected both membership branches to occur"


def test_decomposition_invariants_bad_input():
    report = decomposition_invariants(complete_graph(4).adj)
    assert not report.passed
    assert not report["preconditions"].passed


# ---------------------------------------------------------------------------
# full report
# ---------------------------------------------------------------------------


def test_full_report_passes_on_extremal():
    result = full_report(g2_power(2))
    assert result.report.passed
    assert result.rank == 4
    assert result.srg.as_list() == [15, 8, 4, 4]
    assert result.spectrum is not None
    names = [c.name for c in result.report.checks]
    assert "spectrum_multiplicity_assignment" in names
    assert "decomposition.preconditions" in names


def test_full_report_passes_on_base_instance():
    # the order-4 member itself verifies cleanly with its true rank
    result = full_report(g2(), expect_n=2)
    assert result.report.passed, [
        (c.name, c.details) for c in result.report.checks if not c.passed
    ]


def test_full_report_fails_on_wrong_n():
    result = full_report(g2(), expect_n=3)
    assert not result.report.passed


def test_full_report_on_non_power_order():
    result = full_report(random_graph(random.Random(32), 6))
    assert not result.report.passed
    assert not result.report["order"].passed


def test_full_report_skips_large_spectrum():
    result = full_report(g2_power(2), spectrum_cap=8)
    assert result.spectrum is None
    entry = result.report["spectrum_matches_analytic"]
    assert entry.passed and "skipped" in entry.details
