"""Verification suites behind the command-line tool.

Each suite returns a :class:`VerificationReport`; nothing here prints or
exits. Check order is fixed so reports are reproducible byte for byte.
"""

from __future__ import annotations

import random
from typing import Sequence

from .exact import GF, Matrix, Subspace
from .keylemma import (
    InconclusiveError, KeyLemmaInstance, brute_force_RA_Lii_count, enumerate_RA_Lii, enumerate_RA_full,
    estimate_dimension, in_Q_lattice, lij_survivors, verify_upper_triangular_symbolic,
)
from .report import VerificationReport
from .sl2 import (
    GradedDecomposition, build_irreducible, decompose, defect_closed_form, defect_definitional, delta,
    direct_sum, dual, dual_module, random_decomposition, scramble, verify_delta_identity,
)
from .sympair import (
    NoGradedTripleError, SymmetricPairAlgebra, adjoint_graded_module, catalog, defect_of_nilpotent, graded_sl2_triple, is_distinguished, nilpotent_representatives, sakellaridis_margin,
)
from .symplectic import (
    SymplecticSpace, is_coisotropic_linear, is_weakly_coisotropic_linear, random_subspace,
    weakly_coisotropic_via_lagrangian,
)

DEFAULT_SEED = 0


def _span_text(z: Subspace) -> str:
    return "span{" + ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in z.vectors) + "}"


def _mat_text(m: Matrix) -> str:
    return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in m.to_lists()) + "]"


# --------------------------------------------------------------------------


def sl2_suite(max_lambda: int = 8, trials: int = 100, seed: int = DEFAULT_SEED, max_dim: int = 40) -> VerificationReport:
    rep = VerificationReport("sl2", seed)
    bad = []
    for lam in range(max_lambda + 1):
        for w in (1, -1):
            dd = defect_definitional(build_irreducible(lam, w))
            cf = defect_closed_form(GradedDecomposition([(lam, w)]))
            if dd != cf:
                bad.append(f"({lam},{w:+d}): definitional {dd}, closed form {cf}")
    rep.add(f"defect oracle equivalence, lambda <= {max_lambda}", not bad, "; ".join(bad) or None)

    bad = []
    for lam in range(max_lambda + 1):
        for w in (1, -1):
            single = GradedDecomposition([(lam, w)])
            got = decompose(dual_module(build_irreducible(lam, w)))
            if got != dual(single) or dual(dual(single)) != single:
                bad.append(f"({lam},{w:+d}): dual module decomposes as {got}")
    rep.add(f"duality of irreducibles, lambda <= {max_lambda}", not bad, "; ".join(bad) or None)

    rng = random.Random(seed)
    add_bad, dual_bad, delta_bad = [], [], []
    for t in range(trials):
        dec = random_decomposition(rng, max_lambda=max_lambda, max_dim=max_dim)
        module = scramble(direct_sum(*(build_irreducible(lam, w) for lam, w in dec.summands())), rng)
        found = decompose(module)
        dd = defect_definitional(module)
        parts = sum(defect_definitional(build_irreducible(lam, w)) for lam, w in dec.summands())
        if found != dec or dd != defect_closed_form(dec) or dd != parts:
            add_bad.append(f"trial {t}: {dec} decomposed as {found}, defect {dd} vs sum {parts}")
        if dual(dual(dec)) != dec or decompose(dual_module(module)) != dual(dec):
            dual_bad.append(f"trial {t}: {dec}")
        if not verify_delta_identity(dec):
            delta_bad.append(f"trial {t}: {dec}")
    rep.add(f"defect additivity on {trials} random sums", not add_bad, "; ".join(add_bad[:3]) or None)
    rep.add(f"duality on {trials} random sums", not dual_bad, "; ".join(dual_bad[:3]) or None)
    rep.add(f"delta identity on {trials} random decompositions", not delta_bad, "; ".join(delta_bad[:3]) or None)
    return rep


def symplectic_suite(dim: int = 8, trials: int = 500, seed: int = DEFAULT_SEED) -> VerificationReport:
    if dim < 2 or dim % 2:
        raise ValueError("dimension must be even and positive")
    rep = VerificationReport("symplectic", seed)
    space = SymplecticSpace.standard(dim // 2)
    rng = random.Random(seed)
    first_fail = {"coisotropic implies weak": None, "weak implies dim >= m": None, "definitions agree": None}
    n_co = n_weak = n_strict = 0
    for _ in range(trials):
        z = random_subspace(space, rng)
        co = is_coisotropic_linear(space, z)
        weak = is_weakly_coisotropic_linear(space, z)
        weak2 = weakly_coisotropic_via_lagrangian(space, z)
        n_co += co
        n_weak += weak
        n_strict += weak and not co
        for key, ok in (("coisotropic implies weak", not co or weak),
                        ("weak implies dim >= m", not weak or z.dim >= space.m),
                        ("definitions agree", weak == weak2)):
            if not ok and first_fail[key] is None:
                first_fail[key] = _span_text(z)
    for key, witness in first_fail.items():
        rep.add(f"{key} ({trials} subspaces, dim {dim})", witness is None, witness)
    rep.add("sample contains weakly coisotropic, non-coisotropic subspaces", True if n_strict else None,
            f"coisotropic {n_co}, weakly coisotropic {n_weak}, strictly weak {n_strict}")
    return rep


def pair_suite(pair: SymmetricPairAlgebra, reps: Sequence | None = None, seed: int = DEFAULT_SEED,
               alternatives: int = 2) -> VerificationReport:
    """Invariants, triples, distinguished test, defect and margin for one pair."""
    rep = VerificationReport("pair", seed)
    pair.validate()
    rep.add(f"{pair.name}: invariants", True, f"dim g {pair.dim}, dim h {pair.h.dim}, dim g^sigma {pair.gsigma.dim}")
    if reps is None:
        try:
            reps = nilpotent_representatives(pair)
        except ValueError as exc:
            rep.add(f"{pair.name}: representatives", None, str(exc))
            return rep
    rng = random.Random(seed)
    distinguished = []
    for k, r in enumerate(reps):
        label = f"{pair.name} [{r.label or k}]"
        dist = is_distinguished(pair, r)
        if dist:
            distinguished.append(r.label)
        if r.x.is_zero():
            rep.add(f"{label}: distinguished", True, f"distinguished={dist}; x = 0 has no graded triple")
            continue
        try:
            triple = graded_sl2_triple(pair, r)
        except NoGradedTripleError as exc:
            rep.add(f"{label}: graded triple", False, str(exc))
            continue
        rep.add(f"{label}: graded triple", triple.is_valid(pair),
                f"h = {_mat_text(triple.h)}, f = {_mat_text(triple.f)}")
        module = adjoint_graded_module(pair, triple)
        dec = decompose(module)
        defect = defect_definitional(module)
        others = [defect_of_nilpotent(pair, r, rng) for _ in range(alternatives)]
        rep.add(f"{label}: defect independent of triple", all(d == defect for d in others),
                f"defects {[defect] + others}")
        margin = sakellaridis_margin(pair, r, dec)
        ok_delta = (margin == delta(dec) and verify_delta_identity(dec) and margin == -defect
                    and defect == defect_closed_form(dec))
        rep.add(f"{label}: margin = delta = -defect", ok_delta, f"decomposition {dec}, defect {defect}, margin {margin}")
        if dist:
            rep.add(f"{label}: distinguished, defect < 0 and margin > 0", defect < 0 and margin > 0,
                    f"defect {defect}, margin {margin}")
        else:
            rep.add(f"{label}: distinguished", True, f"distinguished=False, defect {defect}")
    if pair.family == "diag-sl":
        regular = [r.label for r in reps if r.label == f"partition {pair.size}"]
        rep.add(f"{pair.name}: distinguished = regular", distinguished == regular,
                f"distinguished {distinguished}")
    return rep


def keylemma_suite(n: int, primes: Sequence[int], seed: int = DEFAULT_SEED,
                   full_limit: int = 600_000) -> VerificationReport:
    rep = VerificationReport("keylemma", seed)
    primes = sorted(set(primes))
    for p in primes:
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
    inst = KeyLemmaInstance(n)
    surv = lij_survivors(inst)
    expected = [(i, i) for i in range(1, n)]
    rep.add(f"n={n}: weakly coisotropic L_ij, 1 <= i,j <= n-1", surv == expected, f"survivors {surv}")
    wide = lij_survivors(inst, 0, n)
    rep.add(f"n={n}: weakly coisotropic L_ij, 0 <= i,j <= n", wide == [(i, i) for i in range(n + 1)],
            f"survivors {wide} (L_00 and L_nn lie outside Q_A x Q_A)")
    rep.add(f"n={n}: [A,B]=M forces B upper triangular", all(verify_upper_triangular_symbolic(n, i) for i in range(n + 1)),
            f"symbolic block entries, i = 0..{n}")
    for i in range(1, n):
        counts = {}
        for p in primes:
            res = enumerate_RA_Lii(KeyLemmaInstance(n, GF(p)), i)
            counts[p] = res.members
            rep.add(f"n={n}, i={i}, p={p}: f vanishes on R_A cap L_ii", res.f_vanishes,
                    f"{res.members} of {res.points} points in R_A" +
                    (f"; violation {res.violations[0]}" if res.violations else ""))
            if n == 2:
                brute = brute_force_RA_Lii_count(n, p, i)
                formula = p ** 3 + p ** 2 - p
                rep.add(f"n=2, p={p}: count matches brute force and p^3+p^2-p", res.members == brute == formula,
                        f"enumerated {res.members}, brute force {brute}, formula {formula}")
        if len(counts) >= 3:
            try:
                d = estimate_dimension(counts)
                rep.add(f"n={n}, i={i}: dim R_A cap L_ii < 2n", d < 2 * n, f"estimate {d}, counts {counts}")
            except InconclusiveError as exc:
                rep.add(f"n={n}, i={i}: dim R_A cap L_ii < 2n", False, str(exc))
        else:
            rep.add(f"n={n}, i={i}: dim R_A cap L_ii < 2n", None, "needs at least three primes")
    for p in primes:
        if p ** (4 * n) > full_limit:
            continue
        members = enumerate_RA_full(KeyLemmaInstance(n, GF(p)))
        outside = [tuple(int(x) for x in r) for r in members if not in_Q_lattice(n, r)]
        rep.add(f"n={n}, p={p}: R_A inside Q_A x Q_A", not outside,
                f"{len(members)} members" + (f"; outside {outside[0]}" if outside else ""))
    return rep


NICE_SWEEP = (("diag-sl", 2), ("diag-sl", 3), ("diag-sl", 4), ("sl-so", 2), ("sl-so", 3), ("sl-so", 4))
VALIDATE_ONLY = (("sl-slsl", 1), ("sl-slsl", 2), ("sp-gl", 1), ("sp-gl", 2), ("so-so0", 2),
                 ("so-so1", 1), ("so-so1", 2), ("so-so2", 1), ("so-so2", 2))
ALL_ORDER = ("sl2", "symplectic", "pair", "keylemma")


def all_suite(seed: int = DEFAULT_SEED) -> VerificationReport:
    """Every suite in the fixed order sl2, symplectic, pair, keylemma."""
    rep = VerificationReport("all", seed)
    rep.extend(sl2_suite(8, 100, seed))
    rep.extend(symplectic_suite(8, 500, seed))
    for fam, size in NICE_SWEEP + VALIDATE_ONLY:
        rep.extend(pair_suite(catalog(fam, size), seed=seed))
    for n in (2, 3):
        rep.extend(keylemma_suite(n, (3, 5, 7), seed))
    return rep
