"""Exit criteria for the build, one test per criterion.

Each test records a pass/fail line that is printed in the terminal summary
(``pytest tests/test_acceptance.py``).  All checks are exact equalities.
"""

import itertools
import random
import time
from math import comb

from ribbonpoly import (
    EdgeKind,
    FlowerSpec,
    PeriodicSpec,
    Poly3,
    TerminalProfile,
    boundary_components,
    build_flower,
    build_terminal,
    classify_edge,
    closed_form_twisted,
    closed_form_untwisted,
    contract_edge,
    delete_edge,
    face_class,
    face_class_closed,
    periodic_face_class,
    recurrence_family,
    reduce,
    state_sum,
    terminal_form_value,
    tutte_specialize,
)
from ribbonpoly.compositions import count_odd, count_residue, enumerate_compositions

from conftest import random_corpus

X, Y, Z = Poly3.gens()

GOLDEN_UNTWISTED = [
    Y + 1,
    Y**2 * Z**2 + 2 * Y + 1,
    Y**3 * Z**2 + Y**2 * (2 * Z**2 + 1) + 3 * Y + 1,
    Y**4 * Z**4 + 4 * Y**3 * Z**2 + 3 * Y**2 * (Z**2 + 1) + 4 * Y + 1,
    Y**5 * Z**4 + Y**4 * (3 * Z**4 + 2 * Z**2) + Y**3 * (9 * Z**2 + 1)
    + Y**2 * (4 * Z**2 + 6) + 5 * Y + 1,
]
GOLDEN_TWISTED = [
    Y * Z + 1,
    Y**2 * Z + 2 * Y * Z + 1,
    Y**3 * Z**3 + Y**2 * (Z**2 + 2 * Z) + 3 * Y * Z + 1,
    Y**4 * Z**4 + 2 * Y**3 * (Z**3 + Z**2) + 3 * Y**2 * (Z**2 + Z) + 4 * Y * Z + 1,
    Y**5 * Z**4 + Y**4 * (4 * Z**4 + Z**2) + Y**3 * (4 * Z**3 + 6 * Z**2)
    + Y**2 * (6 * Z**2 + 4 * Z) + 5 * Y * Z + 1,
]


def test_1_golden_tables(report):
    t0 = time.perf_counter()
    rec_u = recurrence_family("u", 5)
    rec_t = recurrence_family("t", 5)
    ok = True
    for N in range(1, 6):
        gu, gt = GOLDEN_UNTWISTED[N - 1], GOLDEN_TWISTED[N - 1]
        ok &= closed_form_untwisted(N) == gu == state_sum(build_flower(FlowerSpec.untwisted(N))) == rec_u[N]
        ok &= closed_form_twisted(N) == gt == state_sum(build_flower(FlowerSpec.twisted(N))) == rec_t[N]
    dt = time.perf_counter() - t0
    report("1 golden tables R_G1..5 and R_Gt1..5, three routes", ok and dt < 1.0, f"{dt:.2f}s < 1s")
    assert ok
    assert dt < 1.0


def test_2_closed_form_vs_state_sum(report):
    t0 = time.perf_counter()
    bad = [(fam, N) for N in range(0, 15) for fam, cf, spec in (
        ("u", closed_form_untwisted, FlowerSpec.untwisted),
        ("t", closed_form_twisted, FlowerSpec.twisted))
        if cf(N) != state_sum(build_flower(spec(N)))]
    dt = time.perf_counter() - t0
    report("2 closed forms == state sum, N <= 14", not bad and dt < 60, f"{dt:.1f}s < 60s")
    assert not bad
    assert dt < 60


def test_3_face_count_exhaustive(report):
    t0 = time.perf_counter()
    bad = []
    for N in range(0, 17):
        for signs in itertools.product("+-", repeat=N):
            bc = boundary_components(build_flower(signs))
            cls = face_class(signs)
            if bc not in (1, 2) or bc != cls.faces or cls != face_class_closed(signs):
                bad.append(signs)
    dt = time.perf_counter() - t0
    report("3 all 2^N sign sequences N <= 16: trace == Z3 class == suffix sum",
           not bad and dt < 60, f"{dt:.1f}s < 60s")
    assert not bad
    assert dt < 60


def test_4_tutte_reduction(report):
    ok = all(tutte_specialize(cf(N)) == (1 + Y) ** N
             for N in range(0, 15) for cf in (closed_form_untwisted, closed_form_twisted))
    report("4 closed forms at Z=1 give (1+Y)^N, N <= 14", ok)
    assert ok


def test_5_composition_identities(report):
    ok_sum = all(sum(count_odd(n, P, I) for I in range(P + 1)) == comb(n - 1, P - 1)
                 for n in range(1, 31) for P in range(1, n + 1))
    classes = [(D, d) for D in range(2, 6) for d in range(1, D)]
    ok_oracle = True
    for n in range(1, 19):
        for P in range(1, n + 1):
            tallies = {cd: [0] * (P + 1) for cd in classes}
            for c in enumerate_compositions(n, P):
                for D, d in classes:
                    tallies[(D, d)][sum(q % D == d for q in c)] += 1
            for (D, d), tally in tallies.items():
                for I in range(P + 1):
                    ok_oracle &= count_residue(n, P, I, D, d) == tally[I]
    report("5 sum_I C_n(P,I) = C(n-1,P-1) for n <= 30", ok_sum)
    report("5 count_residue == enumeration for n <= 18, D <= 5, all d", ok_oracle)
    assert ok_sum and ok_oracle


def test_6_deletion_contraction(report):
    corpus = random_corpus(6, 200, 8)
    dc_ok = True
    red_ok = True
    checked = 0
    for g in corpus:
        ref = state_sum(g)
        for e in g.edge_names:
            if classify_edge(g, e) is EdgeKind.ORDINARY:
                checked += 1
                dc_ok &= ref == state_sum(delete_edge(g, e)) + state_sum(contract_edge(g, e))
        red_ok &= reduce(g) == ref
    report("6 R(G) = R(G-e) + R(G/e) on every ordinary edge, 200 graphs", dc_ok,
           f"{checked} edges")
    report("6 reduce == state_sum on the same 200 graphs", red_ok)
    assert checked > 0
    assert dc_ok and red_ok


def test_7_terminal_forms(report):
    rng = random.Random(7)
    ok = True
    for _ in range(20):
        while True:
            prof = TerminalProfile(
                m=rng.randint(0, 3), p=rng.randint(0, 2), q=rng.randint(0, 2),
                untwisted=tuple(rng.randint(2, 4) for _ in range(rng.randint(0, 2))),
                twisted=tuple(rng.randint(2, 4) for _ in range(rng.randint(0, 2))))
            size = prof.m + prof.p + prof.q + sum(prof.untwisted) + sum(prof.twisted)
            if 1 <= size <= 14:
                break
        g = build_terminal(prof, rng)
        ok &= state_sum(g) == reduce(g) == terminal_form_value(prof)
    report("7 terminal form products == state sum on 20 composite graphs", ok)
    assert ok


def test_8_periodic_formulas(report):
    bad = []
    cases = set()
    for k1, k2, q, start in itertools.product(range(1, 6), range(1, 6), range(1, 9), "+-"):
        spec = PeriodicSpec(k1, k2, q, start)
        cls = periodic_face_class(spec)
        signs = spec.signs()
        bc = boundary_components(build_flower(spec))
        if cls != face_class(signs) or cls.faces != bc:
            bad.append(spec)
        cases.add((q % 2, start, k1 % 2))
    report("8 periodic case formulas == Z3 class == trace, k1,k2 <= 5, q <= 8",
           not bad and len(cases) == 8, f"{len(cases)} cases")
    assert not bad
    assert len(cases) == 8


def test_9_parallel_determinism(report):
    corpus = random_corpus(9, 50, 12)
    ok = all(state_sum(g, workers=2).to_json() == state_sum(g).to_json() for g in corpus)
    report("9 parallel and sequential state sums identical, 50 graphs E <= 12", ok)
    assert ok
