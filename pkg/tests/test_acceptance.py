"""Acceptance criteria 1-12, one test each.

Each check returns ``(passed, detail)``; the test prints a single
``criterion N: PASS|FAIL`` line and then asserts.  Run
``python tests/test_acceptance.py`` for the summary without pytest.

Criteria 5 and 9 ask for the vanishing of H^2 of the Coder complex of
comatrix(2) with psi = 0.  With no Coder 0-cochains that group is
3-dimensional, so both are implemented as stated and marked as strict
expected failures.
"""
import random
import sys
import tempfile
import time

import pytest

from coderco.cochain import coder_cochain_dim, d_coder_matrix, delta_matrix, omega_matrix
from coderco.coalg import check_coassoc, check_coderivation
from coderco.cohomology import (_Differential, coder_cohomology, h1_coder_direct, hochschild_cohomology,
                                les_check, same_span)
from coderco.comodule import coadjoint
from coderco.deform import (Deformation, apply_gauge, check_equivalence, equivalent_infinitesimals_check,
                            extend, infinitesimal, obstruction, sample_deformation, sample_gauge,
                            sample_order_one, trivialize, validate_deformation)
from coderco.duality import check_der_pair, double_dual_check, dual_coder_pair, dual_der_pair
from coderco.examples import AXIOM_SUITE, build, negative_cases, shipped
from coderco.exactlin import kernel_basis, span_rank
from coderco.serialize import dumps, loads

from cli_cases import CASES, GOLDEN, prepare, render
from oracles import commutant_dim, dense_rank, operator_from_images

SEED = 20240601


def _rand_vec(rng, n):
    return [rng.randint(-3, 3) if rng.random() < 0.5 else 0 for _ in range(n)]


def criterion_1():
    t0 = time.perf_counter()
    bad = []
    for label, name, params in AXIOM_SUITE:
        cp = build(name, params)
        if not (check_coassoc(cp.coalgebra).ok and check_coderivation(cp.coalgebra, cp.psi).ok):
            bad.append(label)
    neg = negative_cases()
    f1 = check_coassoc(neg["bad_coproduct"]).failure("coassociativity")
    c, psi = neg["bad_coderivation"]
    f2 = check_coderivation(c, psi).failure("coderivation")
    neg_ok = (f1 is not None and f1.locations() == [(3, 0, -1)]
              and f2 is not None and f2.locations() == [(0, 0, -1)])
    secs = time.perf_counter() - t0
    ok = not bad and neg_ok and secs < 5
    return ok, f"{len(AXIOM_SUITE)} examples valid, negatives predicted={neg_ok}, {secs:.2f}s"


def criterion_2():
    t0 = time.perf_counter()
    rng = random.Random(SEED)
    failures = []
    for label, cp in shipped():
        mp = coadjoint(cp)
        c, m, d = cp.coalgebra, mp.bicomodule, cp.dim
        for n in range(0, 4):
            dn, dn1 = delta_matrix(c, m, n), delta_matrix(c, m, n + 1)
            wn, wn1 = omega_matrix(cp, mp, n), omega_matrix(cp, mp, n + 1)
            if not (dn1 @ dn).is_zero() or not (wn1 @ dn - dn @ wn).is_zero():
                failures.append((label, n, "matrix"))
            for _ in range(100):
                f = _rand_vec(rng, d ** n * d)
                df = dn.matvec(f)
                if any(dn1.matvec(df)) or wn1.matvec(df) != dn.matvec(wn.matvec(f)):
                    failures.append((label, n, "cochain"))
                    break
            if n >= 1:
                a, b = d_coder_matrix(cp, mp, n), d_coder_matrix(cp, mp, n + 1)
                if not (b @ a).is_zero():
                    failures.append((label, n, "coder matrix"))
                for _ in range(100):
                    x = _rand_vec(rng, coder_cochain_dim(d, d, n))
                    if any(b.matvec(a.matvec(x))):
                        failures.append((label, n, "coder cochain"))
                        break
    secs = time.perf_counter() - t0
    return not failures and secs < 60, f"failures={failures}, {secs:.1f}s"


def criterion_3():
    bad = [label for label, cp in shipped()
           if not same_span(h1_coder_direct(cp, coadjoint(cp)), kernel_basis(d_coder_matrix(cp, coadjoint(cp), 1)))]
    return not bad, f"mismatched={bad}"


def criterion_4():
    rows = {}
    for label, cp in shipped():
        les = les_check(cp, coadjoint(cp), 3)
        rows[label] = les.ok
    bad = [k for k, v in rows.items() if not v]
    return not bad, f"{len(rows)} examples, failing={bad}"


def criterion_5():
    cp = build("comatrix", (2,))
    mp = coadjoint(cp)
    h = hochschild_cohomology(cp.coalgebra, mp.bicomodule, 2)
    coder = coder_cohomology(cp, mp, 2)
    hoch_ok = h.dim_h(1) == 0 and h.dim_h(2) == 0
    ok = hoch_ok and coder.dim_h(2) == 0
    return ok, f"H^1={h.dim_h(1)}, H^2={h.dim_h(2)}, H^2_Coder={coder.dim_h(2)}"


def criterion_6():
    g = build("grouplike")
    rg = coder_cohomology(g, coadjoint(g), 2)
    z = build("zero_coproduct", (2, 0, 1))
    rz = coder_cohomology(z, coadjoint(z), 1)

    def oracle_h(cp, n):
        mp = coadjoint(cp)
        d = cp.dim
        from coderco.cochain import CoderCochain, d_coder

        def rank_of(k):
            if k < 1:
                return 0
            return dense_rank(operator_from_images(
                lambda e: d_coder(cp, mp, CoderCochain.from_vec(e, k, d, d)).vec(), coder_cochain_dim(d, d, k)))
        return coder_cochain_dim(d, d, n) - rank_of(n) - rank_of(n - 1)

    got = (rg.dim_h(1), rg.dim_h(2), rz.dim_h(1))
    oracle = (oracle_h(g, 1), oracle_h(g, 2), oracle_h(z, 1))
    ok = got == (0, 0, 2) == oracle and commutant_dim([[0, 0], [0, 1]]) == 2
    return ok, f"library={got}, oracle={oracle}"


def criterion_7():
    rng = random.Random(SEED)
    bad = []
    for label, cp in shipped():
        for _ in range(100):
            d = sample_order_one(cp, rng)
            inf = infinitesimal(d)
            image = d_coder_matrix(cp, coadjoint(cp), 2).matvec(d.coefficient(1).vec())
            if not inf.is_cocycle or any(image):
                bad.append(label)
                break
    return not bad, f"{len(shipped())} examples x 100, failing={bad}"


def criterion_8():
    rng = random.Random(SEED)
    stats = {"obstructions": 0, "extended": 0, "obstructed": 0}
    bad = []
    for label, cp in shipped():
        mp = coadjoint(cp)
        b3 = _Differential(d_coder_matrix(cp, mp, 2)).image()
        r3 = span_rank(b3) if b3 else 0
        d3 = d_coder_matrix(cp, mp, 3)
        for _ in range(3):
            d = sample_order_one(cp, rng)
            while d.order < 3:
                ob = obstruction(d)
                vec = ob.ob_c.vec() + ob.ob_psi.vec()
                stats["obstructions"] += 1
                if any(d3.matvec(vec)) or not ob.is_cocycle:
                    bad.append((label, d.order, "not a cocycle"))
                in_b3 = not any(vec) or span_rank(b3 + [vec]) == r3
                res = extend(d)
                if res.extended != in_b3:
                    bad.append((label, d.order, "extend disagrees with B^3 membership"))
                if not res.extended:
                    stats["obstructed"] += 1
                    break
                stats["extended"] += 1
                if res.deformation.order != d.order + 1 or not validate_deformation(res.deformation).ok:
                    bad.append((label, d.order, "extension invalid"))
                d = res.deformation
    return not bad, f"{stats}, failing={bad}"


def criterion_9():
    rng = random.Random(SEED)
    report = {}
    for label, (name, params) in [("grouplike", ("grouplike", ())), ("comatrix(2)", ("comatrix", (2,)))]:
        cp = build(name, params)
        ok = 0
        total = 20
        for _ in range(total):
            d = sample_deformation(cp, 3, rng)
            res = trivialize(d, 3)
            if res.trivialized:
                top = min(d.order, 3)
                if check_equivalence(d.truncate(top), Deformation.trivial(cp, top), res.gauge).ok:
                    ok += 1
        report[label] = f"{ok}/{total}"
    passed = all(v.split("/")[0] == v.split("/")[1] for v in report.values())
    return passed, f"trivialized {report}"


def criterion_10():
    rng = random.Random(SEED)
    names = [("grouplike", ()), ("divided_power", (2,)), ("binomial_bialgebra", (3,)), ("comatrix", (2,)),
             ("tensor", (2, 1))]
    bad = 0
    for t in range(100):
        cp = build(*names[t % len(names)])
        d = sample_deformation(cp, 1 + t % 3, rng)
        g = sample_gauge(cp.dim, d.order, rng)
        if not equivalent_infinitesimals_check(d, apply_gauge(d, g), g).ok:
            bad += 1
    return bad == 0, f"100 pairs, failing={bad}"


def criterion_11():
    bad = []
    for label, name, params in AXIOM_SUITE:
        cp = build(name, params)
        a = dual_der_pair(cp)
        if not check_der_pair(a).ok or dual_coder_pair(a) != cp or not double_dual_check(cp).ok:
            bad.append(label)
    return not bad, f"{len(AXIOM_SUITE)} pairs, failing={bad}"


def criterion_12():
    bad = []
    with tempfile.TemporaryDirectory() as tmp:
        prepare(tmp)
        for name, argv in CASES:
            a, b = render(tmp, argv), render(tmp, argv)
            if a != b or a != (GOLDEN / f"{name}.out").read_text(encoding="utf-8"):
                bad.append(name)
    for label, cp in shipped():
        if loads(dumps(cp)) != cp or dumps(loads(dumps(cp))) != dumps(cp):
            bad.append(f"roundtrip {label}")
        d = sample_deformation(cp, 2, random.Random(SEED))
        if loads(dumps(d)) != d:
            bad.append(f"roundtrip deformation {label}")
    return not bad, f"{len(CASES)} commands, failing={bad}"


UNATTAINABLE = {
    5: "H^2 of the Coder complex (no 0-cochains) of comatrix(2), psi = 0, is 3-dimensional",
    9: "deformations of comatrix(2) whose psi_1 is a nonzero inner coderivation cannot be gauged away",
}
CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 13)}


def _params():
    out = []
    for n in CRITERIA:
        marks = [pytest.mark.xfail(strict=True, reason=UNATTAINABLE[n])] if n in UNATTAINABLE else []
        out.append(pytest.param(n, marks=marks, id=f"criterion_{n}"))
    return out


@pytest.mark.parametrize("n", _params())
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n]()
    with capsys.disabled():
        print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, detail


if __name__ == "__main__":
    results = {}
    for n, fn in CRITERIA.items():
        ok, detail = fn()
        results[n] = ok
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})", flush=True)
    sys.exit(0 if all(results.values()) else 1)
