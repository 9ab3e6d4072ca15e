"""Acceptance suite: one test per criterion, one printed verdict line each.

Run as ``pytest tests/test_acceptance.py -s`` to see the per-criterion lines.
Every check is exact (integer or ring equality); there are no numerical
tolerances anywhere.
"""

from itertools import product as iproduct

from skeinlab.composite import integrality_2z, r_reform, z_reform, zsquare_member
from skeinlab.exactring import LaurentQT
from skeinlab.fixtures import (
    check_hopf_hat_table,
    check_matrix_fixture,
    check_theorem_79,
    check_torus_knot_family,
    hopf_with_kinks,
)
from skeinlab.lmov import lmov_check, plethystic_h, special_polynomial
from skeinlab.partitions import Partition, PartitionPair, pairs_of_total, partitions_of
from skeinlab.selftest import ACCEPTANCE_SPECS, corollary_congruence, run as run_suites
from skeinlab.skein import LinkSpec

P = Partition


def _report(criterion, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] {criterion}: {detail}")
    return ok


def test_criterion_1_torus_knot_invariants():
    checks = check_torus_knot_family(ks=(1, 2, 3))
    bad = [name for name, ok in checks if not ok]
    assert _report(
        "criterion-1",
        not bad,
        f"six full invariants of T(2,2k+1), k=1,2,3 ({len(checks)} symbolic equalities)"
        + (f"; diffs: {bad}" if bad else ""),
    )


def test_criterion_2_hopf_transformed_free_energy():
    checks = check_hopf_hat_table()
    bad = [name for name, ok in checks if not ok]
    assert _report(
        "criterion-2",
        not bad,
        f"twenty transformed free-energy values over five Hopf framings"
        + (f"; diffs: {bad}" if bad else ""),
    )


def test_criterion_3_congruent_skein_instances():
    checks = check_theorem_79(ks=(0, 1, 2, 3), identity_ks=(1, 2))
    bad = [name for name, ok in checks if not ok]
    assert _report(
        "criterion-3",
        not bad,
        "p=2 congruent skein relation, k=0..3, with intermediate identities at k=1,2"
        + (f"; diffs: {bad}" if bad else ""),
    )


def test_criterion_4_zh_integrality():
    labels = [p for n in range(1, 4) for p in partitions_of(n)]
    bad = []
    count = 0
    for name, spec in ACCEPTANCE_SPECS:
        for combo in iproduct(labels, repeat=spec.L):
            verdict, stage, _ = zsquare_member(z_reform(spec, list(combo)))
            count += 1
            if not verdict:
                bad.append((name, combo, stage))
    assert _report(
        "criterion-4",
        not bad,
        f"Zh in Z[z^2, t^±1] for {count} (spec, label) pairs, labels of size <= 3"
        + (f"; failures: {bad[:3]}" if bad else ""),
    )


def test_criterion_5_rh_even_integrality():
    bad = []
    count = 0
    for name, spec in ACCEPTANCE_SPECS:
        for p in (2, 3):
            verdict, stage, _ = integrality_2z(r_reform(spec, p))
            count += 1
            if not verdict:
                bad.append((name, p, stage))
    assert _report(
        "criterion-5",
        not bad,
        f"Rh_p in 2Z[z^2, t^±1] for p in {{2,3}} on {count} instances"
        + (f"; failures: {bad}" if bad else ""),
    )


def test_criterion_6_special_polynomials():
    trefoil_base = special_polynomial(LinkSpec.torus(2, 3, 1), [PartitionPair(P([1]), P())])
    hand = LaurentQT({(0, -2): 2, (0, -4): -1})
    ok = trefoil_base == hand
    bad = []
    count = 1
    for spec in (LinkSpec.torus(2, 3, 1), LinkSpec.torus(2, 5, 1)):
        base = special_polynomial(spec, [PartitionPair(P([1]), P())])
        for total in range(4):
            for pr in pairs_of_total(total):
                got = special_polynomial(spec, [pr])
                count += 1
                if got != base**pr.size:
                    bad.append((spec.describe(), pr))
    hopf = LinkSpec.torus(1, 1, 2)
    for total in range(3):
        for pr1 in pairs_of_total(total):
            for t2 in range(3 - total):
                for pr2 in pairs_of_total(t2):
                    got = special_polynomial(hopf, [pr1, pr2])
                    count += 1
                    if got != LaurentQT.one():
                        bad.append(("hopf", pr1, pr2))
    assert _report(
        "criterion-6",
        ok and not bad,
        f"q->1 limits factor through the classical value on {count} label sets; "
        f"trefoil base {'matches' if ok else 'DIFFERS from'} 2t^-2 - t^-4"
        + (f"; failures: {bad[:3]}" if bad else ""),
    )


def test_criterion_7_structural_suites():
    results = run_suites()
    bad = [
        f"{suite}:{name}"
        for suite, checks in results.items()
        for name, ok, _ in checks
        if not ok
    ]
    total = sum(len(c) for c in results.values())
    assert _report(
        "criterion-7",
        not bad,
        f"{total} structural property checks across {len(results)} suites"
        + (f"; failures: {bad}" if bad else ""),
    )


def test_criterion_8_conjecture_status_reports():
    # informational: verdicts are expected true but are not hard gates
    lines = []
    all_true = True
    B_singles = [P([1]), P([2]), P([1, 1])]
    for a in (-1, 0, 1):
        for b in (-1, 0, 1):
            spec = hopf_with_kinks(a, b)
            table = plethystic_h(spec, 4)
            for B1 in B_singles:
                for B2 in B_singles:
                    verdict, _, stage = lmov_check(spec, [B1, B2], table=table)
                    all_true = all_true and verdict
                    lines.append(
                        f"framed-integrality T(2,2)({a},{b}) B={B1.text()},{B2.text()}: {verdict}"
                    )
    for p in (2, 3):
        for f in range(-2, 3):
            verdict = corollary_congruence(LinkSpec.unknot(f), p)
            all_true = all_true and verdict
            lines.append(f"power-substitution congruence U({f}) p={p}: {verdict}")
        verdict = corollary_congruence(LinkSpec.torus_diagram(2, 2), p)
        all_true = all_true and verdict
        lines.append(f"power-substitution congruence T(2,2) p={p}: {verdict}")
    for line in lines:
        print(f"  [info] {line}")
    _report(
        "criterion-8",
        True,
        f"{len(lines)} conjecture-status verdicts recorded (informational); "
        f"all true: {all_true}",
    )
