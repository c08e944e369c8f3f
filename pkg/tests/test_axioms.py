import itertools

import pytest
from hypothesis import given, settings, strategies as st

from comtope import (
    SignSystem,
    axiom_report,
    check_c,
    check_fs,
    check_se,
    check_sym,
    check_z,
    compose,
    is_com,
    is_om,
    negate,
    separation,
)

FULL_1 = SignSystem.from_vectors([(-1,), (0,), (1,)])


@st.composite
def sign_systems(draw, max_n=3, max_size=12):
    n = draw(st.integers(1, max_n))
    pool = list(itertools.product((-1, 0, 1), repeat=n))
    chosen = draw(st.lists(st.sampled_from(pool), max_size=max_size))
    return SignSystem.from_vectors(chosen, n=n)


def literal_se_holds(system):
    for x, y in itertools.product(system, repeat=2):
        sep = separation(x, y)
        xy = compose(x, y)
        for e in sep:
            if not any(
                z[e] == 0 and all(z[f] == xy[f] for f in range(len(x)) if f not in sep)
                for z in system
            ):
                return False
    return True


def test_paper_example_is_com_not_om(paper_system):
    assert check_fs(paper_system) == (True, None)
    assert check_se(paper_system) == (True, None)
    assert check_z(paper_system)[0] is False
    assert is_com(paper_system)
    assert not is_om(paper_system)


def test_fs_examples():
    assert check_fs(SignSystem.from_vectors([(1,), (-1,)]))[0]
    ok, witness = check_fs(SignSystem.from_vectors([(1, 0), (0, 1)]))
    assert not ok
    x, y = witness
    assert compose(x, negate(y)) not in {(1, 0), (0, 1)}


def test_fs_witness_is_first_in_stored_order():
    s = SignSystem.from_vectors([(1, 0), (0, 1)])
    # stored order is (0, 1), (1, 0); (0,1) o -(0,1) = (0,1) is fine, (0,1) o -(1,0) = (-1,1) is not
    assert check_fs(s) == (False, ((0, 1), (1, 0)))


def test_se_examples():
    assert check_se(SignSystem.from_vectors([(1, -1, 0)]))[0]
    assert check_se(SignSystem.from_vectors([(1,), (-1,)])) == (False, ((-1,), (1,), 0))


def test_c_sym_z_examples():
    assert check_c(FULL_1)[0] and check_sym(FULL_1)[0] and check_z(FULL_1)[0]
    assert check_sym(SignSystem.from_vectors([(1, 1)])) == (False, (1, 1))


def test_classification_examples():
    assert not is_com(SignSystem.from_vectors([(1, 0), (0, 1)]))
    assert is_com(SignSystem.from_vectors([(1, -1, 0, 1)]))
    assert is_om(FULL_1)


def test_report_witness_shape(paper_system):
    report = axiom_report(paper_system)
    assert report.com and not report.om
    assert set(report.witnesses) == {"sym", "z"}
    assert report.witnesses["z"] == (0,) * 5


@given(sign_systems())
@settings(max_examples=300, deadline=None)
def test_witnesses_really_violate(system):
    members = set(system)
    ok, w = check_fs(system)
    assert ok == all(compose(x, negate(y)) in members for x in system for y in system)
    if not ok:
        assert compose(w[0], negate(w[1])) not in members
    ok, w = check_c(system)
    if not ok:
        assert compose(*w) not in members
    ok, w = check_se(system)
    assert ok == literal_se_holds(system)
    if not ok:
        x, y, e = w
        sep = separation(x, y)
        xy = compose(x, y)
        assert e in sep
        assert not any(
            z[e] == 0 and all(z[f] == xy[f] for f in range(len(x)) if f not in sep)
            for z in system
        )
    ok, w = check_sym(system)
    if not ok:
        assert negate(w) not in members


@given(sign_systems(max_n=3, max_size=20))
@settings(max_examples=300, deadline=None)
def test_backends_agree(system):
    from comtope import _pykernels, kernels

    if kernels.compiled_backend is None:
        pytest.skip("compiled kernels not built")
    plus, minus = system.masks()
    for impl in ("first_elimination_violation",):
        assert getattr(_pykernels, impl)(plus, minus) == getattr(
            kernels.compiled_backend, impl
        )(plus, minus)
    for neg in (True, False):
        assert _pykernels.first_closure_violation(
            plus, minus, neg
        ) == kernels.compiled_backend.first_closure_violation(plus, minus, neg)


@given(sign_systems(max_n=3, max_size=27))
@settings(max_examples=400, deadline=None)
def test_om_routes_agree(system):
    # is_om raises ConsistencyError if the two routes ever disagree
    direct = len(system) > 0 and check_c(system)[0] and check_sym(system)[0] and check_se(system)[0]
    assert is_om(system) == direct


def test_fs_and_c_agree_with_zero_and_symmetry():
    pool = list(itertools.product((-1, 0, 1), repeat=2))
    for mask in range(1 << len(pool)):
        vecs = {v for i, v in enumerate(pool) if mask >> i & 1}
        if (0, 0) not in vecs or any(negate(v) not in vecs for v in vecs):
            continue
        s = SignSystem.from_vectors(vecs, n=2)
        assert check_fs(s)[0] == check_c(s)[0]


def test_empty_system_is_outside_the_literal_axiom_trio():
    # C, Sym and SE hold vacuously on the empty set, but it has no zero vector;
    # is_om therefore also requires a nonempty covector set.
    empty = SignSystem.from_vectors([], n=2)
    assert check_c(empty)[0] and check_sym(empty)[0] and check_se(empty)[0]
    assert not check_z(empty)[0]
    assert not is_om(empty)
    assert is_com(empty)


def test_axioms_with_python_backend(backend, paper_system):
    assert is_com(paper_system)
    assert check_fs(SignSystem.from_vectors([(1, 0), (0, 1)])) == (False, ((0, 1), (1, 0)))
