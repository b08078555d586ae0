"""Acceptance criteria, one function each.

Every criterion is exact (zero tolerance) and has a wall-clock budget. Under
pytest a PASS/FAIL line per criterion is printed in the terminal summary;
``python tests/test_acceptance.py`` prints the same lines directly.
"""

import json
import random
import subprocess
import sys
import time
from dataclasses import dataclass

import pytest

from coisotropic.exact import GF
from coisotropic.keylemma import (
    KeyLemmaInstance, brute_force_RA_Lii_count, enumerate_RA_Lii, estimate_dimension, lij_survivors,
    verify_upper_triangular_symbolic,
)
from coisotropic.sl2 import (
    build_irreducible, decompose, defect_closed_form, defect_definitional, direct_sum, dual, dual_module,
    random_decomposition, scramble, verify_delta_identity, GradedDecomposition as D,
)
from coisotropic.sympair import (
    catalog, check_negative_distinguished_defect, is_distinguished, nilpotent_representatives,
)
from coisotropic.symplectic import (
    SymplecticSpace, is_coisotropic_linear, is_weakly_coisotropic_linear, random_subspace,
    weakly_coisotropic_via_lagrangian,
)

SEED = 20240601


@dataclass
class Outcome:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float
    budget: float

    @property
    def passed(self) -> bool:
        return self.ok and self.seconds < self.budget

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return (f"[{tag}] criterion {self.number}: {self.title} | {self.detail} | "
                f"{self.seconds:.2f} s (budget {self.budget:g} s)")


def _timed(number, title, budget, body):
    start = time.perf_counter()
    ok, detail = body()
    return Outcome(number, title, ok, detail, time.perf_counter() - start, budget)


# -- criteria ---------------------------------------------------------------------

def criterion_1():
    def body():
        bad = []
        for lam in range(9):
            for w in (1, -1):
                m = build_irreducible(lam, w)
                if defect_closed_form(D([(lam, w)])) != defect_definitional(m):
                    bad.append((lam, w))
        rng = random.Random(SEED)
        for k in range(100):
            dec = random_decomposition(rng, max_dim=40)
            m = scramble(direct_sum(*(build_irreducible(l, w) for l, w in dec.summands())), rng)
            if decompose(m) != dec or defect_definitional(m) != defect_closed_form(dec):
                bad.append(dec)
        return not bad, f"18 irreducibles + 100 random sums, mismatches {bad[:3]}"
    return _timed(1, "defect closed form equals definitional defect", 10, body)


def criterion_2():
    def body():
        bad = []
        for lam in range(9):
            for w in (1, -1):
                dec = D([(lam, w)])
                if dual(dual(dec)) != dec or decompose(dual_module(build_irreducible(lam, w))) != dual(dec):
                    bad.append((lam, w))
        rng = random.Random(SEED + 1)
        for _ in range(100):
            dec = random_decomposition(rng, max_dim=40)
            if dual(dual(dec)) != dec:
                bad.append(dec)
        return not bad, f"lambda <= 8 and 100 random decompositions, mismatches {bad[:3]}"
    return _timed(2, "duality involution and dual model", 10, body)


def criterion_3():
    def body():
        rng = random.Random(SEED + 2)
        decs = [random_decomposition(rng, max_dim=40) for _ in range(100)]
        bad = [d for d in decs if not verify_delta_identity(d)]
        return not bad, f"100 random decompositions, violations {bad[:3]}"
    return _timed(3, "delta identity", 5, body)


def criterion_4():
    def body():
        parts = []
        ok = True
        for n in (2, 3, 4):
            pair = catalog("diag-sl", n)
            dist = [r.label for r in nilpotent_representatives(pair) if is_distinguished(pair, r)]
            ok &= dist == [f"partition {n}"]
            parts.append(f"n={n}: {dist}")
        return ok, "; ".join(parts)
    return _timed(4, "distinguished = regular for the group case", 30, body)


def criterion_5():
    def body():
        parts = []
        ok = True
        for family, size in [("diag-sl", 2), ("diag-sl", 3), ("sl-so", 2), ("sl-so", 3), ("sl-so", 4)]:
            pair = catalog(family, size)
            rep = check_negative_distinguished_defect(pair, nilpotent_representatives(pair))
            dist = [r for r in rep.records if r.distinguished]
            ok &= rep.passed and bool(dist) and all(r.defect < 0 < r.margin for r in dist)
            parts.append(f"{family} {size}: " + ",".join(f"{r.defect}/{r.margin}" for r in dist))
        return ok, "defect/margin of distinguished reps " + "; ".join(parts)
    return _timed(5, "nice pairs have negative distinguished defect", 120, body)


def criterion_6():
    def body():
        space = SymplecticSpace.standard(4)
        rng = random.Random(SEED + 6)
        co = weak = bad = 0
        for _ in range(500):
            z = random_subspace(space, rng)
            c = is_coisotropic_linear(space, z)
            w = is_weakly_coisotropic_linear(space, z)
            co += c
            weak += w
            if (c and not w) or (w and z.dim < 4) or w != weakly_coisotropic_via_lagrangian(space, z):
                bad += 1
        return bad == 0 and co > 0 and weak > co, f"500 subspaces, {co} coisotropic, {weak} weakly, {bad} violations"
    return _timed(6, "symplectic coisotropy properties in dimension 8", 30, body)


def criterion_7():
    def body():
        ok = True
        parts = []
        for n in (2, 3):
            surv = lij_survivors(KeyLemmaInstance(n))
            ok &= surv == [(i, i) for i in range(1, n)]
            for i in range(1, n):
                counts = {}
                for p in (3, 5, 7):
                    res = enumerate_RA_Lii(KeyLemmaInstance(n, GF(p)), i)
                    ok &= res.f_vanishes
                    counts[p] = res.members
                est = estimate_dimension(counts)
                ok &= est < 2 * n
                parts.append(f"n={n} i={i} counts {counts} dim {est}")
        brute = brute_force_RA_Lii_count(2, 5, 1)
        enum = enumerate_RA_Lii(KeyLemmaInstance(2, GF(5)), 1).members
        ok &= brute == enum
        parts.append(f"F_5 brute force {brute} = enumerated {enum}")
        return ok, "; ".join(parts)
    return _timed(7, "key lemma: f vanishes, dimension < 2n, diagonal survivors", 600, body)


def criterion_8():
    def body():
        cases = [(n, i) for n in range(1, 5) for i in range(n + 1)]
        bad = [c for c in cases if not verify_upper_triangular_symbolic(n=c[0], i=c[1])]
        return not bad, f"{len(cases)} (n, i) block shapes, failures {bad}"
    return _timed(8, "[A,B] = M forces B upper triangular", 10, body)


def criterion_9():
    def body():
        cmd = [sys.executable, "-m", "coisotropic.cli", "verify", "all", "--seed", "0"]
        runs = [subprocess.run(cmd, capture_output=True) for _ in range(2)]
        same = runs[0].stdout == runs[1].stdout and runs[0].returncode == runs[1].returncode
        rep = json.loads(runs[0].stdout)
        expected = 0 if rep["status"] == "pass" else 1
        codes = all(r.returncode == expected for r in runs)
        return same and codes and rep["status"] == "pass", \
            f"byte-identical {same}, status {rep['status']}, exit {runs[0].returncode}, totals {rep['totals']}"
    return _timed(9, "verify all is deterministic and exit code matches status", 900, body)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{k}" for k in range(1, 10)])
def test_acceptance(criterion, record_property):
    outcome = criterion()
    record_property("acceptance", outcome.line())
    print(outcome.line())
    assert outcome.ok, outcome.detail
    assert outcome.seconds < outcome.budget, f"over budget: {outcome.seconds:.2f} s"


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    for r in results:
        print(r.line(), flush=True)
    sys.exit(0 if all(r.passed for r in results) else 1)
