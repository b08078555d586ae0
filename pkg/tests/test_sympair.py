import json
import random

import pytest

from coisotropic.exact import Matrix, Subspace
from coisotropic.sl2 import GradedDecomposition as D, decompose, defect_closed_form, delta, verify_delta_identity
from coisotropic.sympair import (
    FAMILIES, NilpotentGSigma, NoGradedTripleError, PairInvariantError, adjoint_decomposition,
    adjoint_graded_module, catalog, centralizer_in_gsigma, check_negative_distinguished_defect,
    defect_of_nilpotent, graded_sl2_triple, is_distinguished, jordan_nilpotent, load_pair, load_pair_json,
    nilpotent_representatives, pair_to_json, partitions, sakellaridis_margin,
)

E = Matrix([[0, 1], [0, 0]])
F = Matrix([[0, 0], [1, 0]])
H = Matrix.diag([1, -1])


@pytest.fixture(scope="module")
def diag2():
    return catalog("diag-sl", 2)


@pytest.fixture(scope="module")
def so2():
    return catalog("sl-so", 2)


@pytest.fixture(scope="module")
def diag3():
    return catalog("diag-sl", 3)


def pair_x(a):
    return Matrix.block_diag(a, -a)


# -- catalog ------------------------------------------------------------------

def test_diag_pair_gsigma_is_antidiagonal(diag2):
    assert diag2.gsigma.dim == 3 and diag2.h.dim == 3
    for m in diag2.matrices(diag2.gsigma):
        a = Matrix([r[:2] for r in m.to_lists()[:2]])
        b = Matrix([r[2:] for r in m.to_lists()[2:]])
        assert b == -a
    # theta swaps the two factors
    x = Matrix.block_diag(E, F)
    c = diag2.coords(x)
    assert diag2.element(diag2.theta.apply(c)) == Matrix.block_diag(F, E)


def test_split_so2_gsigma(so2):
    assert so2.gsigma.dim == 2
    assert Subspace(4, [m.flat() for m in so2.matrices(so2.gsigma)]) == Subspace(4, [E.flat(), F.flat()])
    assert Subspace(4, [m.flat() for m in so2.matrices(so2.h)]) == Subspace(4, [H.flat()])


def test_definite_form_has_no_rational_nilpotents():
    # for the identity form, g^sigma = symmetric traceless [[a, b], [b, -a]]: nilpotent iff a^2 + b^2 = 0
    for a in range(-5, 6):
        for b in range(-5, 6):
            m = Matrix([[a, b], [b, -a]])
            assert (m @ m).is_zero() == (a == 0 and b == 0)


@pytest.mark.parametrize("family", sorted(FAMILIES))
@pytest.mark.parametrize("size", [1, 2])
def test_catalog_pairs_validate(family, size):
    try:
        pair = catalog(family, size)
    except ValueError as exc:
        assert "needs" in str(exc)
        return
    pair.validate()
    assert pair.h.dim + pair.gsigma.dim == pair.dim
    assert pair.gsigma.dim > 0


def test_catalog_dimensions():
    dims = {(f, s): catalog(f, s).dim for f, s in [("diag-sl", 3), ("sl-so", 4), ("sl-slsl", 2), ("sp-gl", 2),
                                                     ("so-so0", 2), ("so-so1", 2), ("so-so2", 2)]}
    assert dims == {("diag-sl", 3): 16, ("sl-so", 4): 15, ("sl-slsl", 2): 15, ("sp-gl", 2): 10,
                    ("so-so0", 2): 6, ("so-so1", 2): 10, ("so-so2", 2): 15}
    sp = catalog("sp-gl", 2)
    assert sp.h.dim == 4  # gl_2
    so = catalog("so-so1", 2)
    assert so.h.dim == 3 + 1  # so_3 + so_2


def test_catalog_errors():
    with pytest.raises(ValueError):
        catalog("e6", 1)
    with pytest.raises(ValueError):
        catalog("sl-so", 5)
    with pytest.raises(ValueError):
        catalog("diag-sl", 1)


def test_derived_algebra_drops_center():
    p = catalog("sl-slsl", 2)
    assert p.derived.dim == p.dim  # g = sl_4 is semisimple, so the gl_1 in h is not central in g
    assert (p.derived & p.h) == p.h
    q = catalog("sp-gl", 2)
    assert q.derived.dim == q.dim


# -- JSON loader ----------------------------------------------------------------

def _sl2_json(theta):
    return {"n": 2, "g_basis": [["0", "1", "0", "0"], ["0", "0", "1", "0"], ["1", "0", "0", "-1"]], "theta": theta}


def test_loader_round_trip(so2):
    data = json.loads(json.dumps(pair_to_json(so2)))
    data["nilpotents"] = [[["0", "1"], ["0", "0"]]]
    pair, reps = load_pair(data)
    assert pair.gsigma.dim == 2 and len(reps) == 1 and reps[0].x == E


@pytest.mark.parametrize("theta, invariant", [
    ([["2", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]], "theta involution"),
    ([["0", "1", "0"], ["1", "0", "0"], ["0", "0", "1"]], "theta homomorphism"),
    ([["1", "0"], ["0", "1"]], "theta shape"),
])
def test_loader_rejects_bad_theta(theta, invariant):
    with pytest.raises(PairInvariantError) as err:
        load_pair(_sl2_json(theta))
    assert err.value.invariant == invariant and invariant in str(err.value)


def test_loader_rejects_non_closed_basis():
    data = {"n": 2, "g_basis": [["0", "1", "0", "0"], ["0", "0", "1", "0"]], "theta": [["1", "0"], ["0", "1"]]}
    with pytest.raises(PairInvariantError, match="bracket closure"):
        load_pair(data)


def test_loader_rejects_dependent_basis():
    data = {"n": 1, "g_basis": [["1"], ["2"]], "theta": [["1", "0"], ["0", "1"]]}
    with pytest.raises(PairInvariantError, match="basis independence"):
        load_pair(data)


def test_loader_rejects_degenerate_trace_form():
    # strictly upper triangular 2x2 is a Lie algebra with zero trace form
    data = {"n": 2, "g_basis": [["0", "1", "0", "0"]], "theta": [["-1"]]}
    with pytest.raises(PairInvariantError, match="nondegenerate"):
        load_pair(data)


def test_loader_schema_errors():
    with pytest.raises(PairInvariantError, match="schema"):
        load_pair_json("{not json")
    with pytest.raises(PairInvariantError, match="schema"):
        load_pair({"n": 2})
    with pytest.raises(PairInvariantError, match="schema"):
        load_pair({"n": 2, "g_basis": [[0.5, 0, 0, 0]], "theta": [[1]]})
    with pytest.raises(PairInvariantError, match="nilpotent"):
        # theta(X) = -X^T, so g^sigma is the symmetric traceless part
        data = _sl2_json([["0", "-1", "0"], ["-1", "0", "0"], ["0", "0", "-1"]])
        data["nilpotents"] = [[["1", "0"], ["0", "-1"]]]
        load_pair(data)


# -- centralizers and distinguished elements ------------------------------------

def test_centralizer_examples(diag2, so2):
    zero = Matrix.zeros(4)
    assert centralizer_in_gsigma(diag2, zero) == diag2.gsigma
    x = pair_x(E)
    assert centralizer_in_gsigma(diag2, x) == Subspace(6, [diag2.coords(x)])
    assert centralizer_in_gsigma(so2, E) == Subspace(3, [so2.coords(E)])


def test_distinguished_examples(diag2, diag3):
    assert is_distinguished(diag2, pair_x(E))
    assert is_distinguished(diag3, pair_x(jordan_nilpotent([3])))
    assert not is_distinguished(diag3, pair_x(jordan_nilpotent([2, 1])))
    assert not is_distinguished(diag2, Matrix.zeros(4))


# -- triples, defect, margin ---------------------------------------------------------

def test_triple_examples(diag2, so2):
    t = graded_sl2_triple(diag2, pair_x(E))
    assert t.h == Matrix.block_diag(H, H) and t.f == pair_x(F) and t.is_valid(diag2)
    t = graded_sl2_triple(so2, E)
    assert t.h == H and t.f == F and t.is_valid(so2)
    with pytest.raises(NoGradedTripleError):
        graded_sl2_triple(so2, Matrix.zeros(2))


def test_triple_rejects_semisimple(so2):
    with pytest.raises(NoGradedTripleError):
        graded_sl2_triple(so2, E + F)


def test_adjoint_module_examples(diag2, so2):
    assert decompose(adjoint_graded_module(diag2, graded_sl2_triple(diag2, pair_x(E))).validate()) == \
        D([(2, 1), (2, -1)])
    m = adjoint_graded_module(so2, graded_sl2_triple(so2, E)).validate()
    assert m.even.dim == 1 and m.odd.dim == 2
    assert decompose(m) == D([(2, -1)])


def test_defect_and_margin_examples(diag2, so2):
    x = pair_x(E)
    assert defect_of_nilpotent(diag2, x) == -1
    assert sakellaridis_margin(diag2, x) == 1
    assert defect_of_nilpotent(so2, E) == -2
    assert sakellaridis_margin(so2, E) == 2


def test_margin_is_delta_of_adjoint(diag3):
    for rep in nilpotent_representatives(diag3):
        if rep.x.is_zero():
            continue
        dec = adjoint_decomposition(diag3, rep)
        assert sakellaridis_margin(diag3, rep) == delta(dec) == -defect_closed_form(dec)
        assert verify_delta_identity(dec)


@pytest.mark.parametrize("family, size", [("diag-sl", 2), ("diag-sl", 3), ("sl-so", 3), ("sl-so", 4)])
def test_defect_independent_of_triple(family, size):
    pair = catalog(family, size)
    rng = random.Random(5)
    for rep in nilpotent_representatives(pair):
        if rep.x.is_zero():
            continue
        base = defect_of_nilpotent(pair, rep)
        for _ in range(3):
            t = graded_sl2_triple(pair, rep, rng)
            assert t.is_valid(pair)
            assert defect_of_nilpotent(pair, rep, rng) == base


def test_conjugated_triple_gives_same_defect(diag2):
    # conjugating by exp(ad c x) for x in g^sigma... keeps gradedness only for elements of H;
    # use g = (u, u) in the diagonal copy of SL_2, which commutes with theta
    u = Matrix([[1, 1], [0, 1]])
    g = Matrix.block_diag(u, u)
    gi = g.inverse()
    x = g @ pair_x(F) @ gi
    assert diag2.in_gsigma(x)
    assert defect_of_nilpotent(diag2, x) == defect_of_nilpotent(diag2, pair_x(F)) == -1


# -- representatives and reports --------------------------------------------------------

def test_partitions():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions(6)) == 11


def test_representative_examples(diag2, diag3, so2):
    reps = nilpotent_representatives(diag2)
    assert [r.x for r in reps] == [pair_x(E), Matrix.zeros(4)]
    assert len(nilpotent_representatives(diag3)) == 3
    assert [r.x for r in nilpotent_representatives(so2)] == [E, Matrix.zeros(2)]
    with pytest.raises(ValueError):
        nilpotent_representatives(catalog("sp-gl", 1))


@pytest.mark.parametrize("size", [2, 3, 4])
def test_sl_so_representatives_have_partition_type(size):
    pair = catalog("sl-so", size)
    for rep in nilpotent_representatives(pair):
        parts = tuple(int(p) for p in rep.label.split()[1].split("+"))
        # Jordan type from ranks of powers
        ranks = [(rep.x ** k).rank() for k in range(size + 1)]
        assert ranks == [(jordan_nilpotent(parts) ** k).rank() for k in range(size + 1)]


def test_negative_defect_report_examples(diag2, diag3):
    rep = check_negative_distinguished_defect(diag2, [NilpotentGSigma(Matrix.zeros(4), "0"),
                                                      NilpotentGSigma(pair_x(E), "regular")])
    assert [r.distinguished for r in rep.records] == [False, True]
    assert rep.records[1].defect == -1 and rep.passed
    rep = check_negative_distinguished_defect(diag3, nilpotent_representatives(diag3))
    assert [r.label for r in rep.records if r.distinguished] == ["partition 3"]
    assert rep.passed
    assert check_negative_distinguished_defect(diag2, []).passed


def test_nilpotent_certificate(diag2):
    with pytest.raises(ValueError):
        NilpotentGSigma.certify(diag2, Matrix.block_diag(H, -H))
    with pytest.raises(ValueError):
        NilpotentGSigma.certify(diag2, Matrix.block_diag(E, E))
