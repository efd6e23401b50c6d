import itertools

import pytest

from syzex.errors import AlgebraMismatch
from syzex.linalg import Matrix
from syzex.rep import (
    Representation,
    decompose,
    dim_hom,
    direct_sum,
    hom_space,
    is_iso,
    module_doc,
    parse_module_doc,
    simple_rep,
    top_and_radical,
    validate,
    zero_rep,
)


def kron_rep(algebra, d0, d1, m0, m1):
    return Representation(
        algebra,
        (d0, d1),
        (Matrix.from_rows(2, m0) if m0 else Matrix.zero(2, d1, d0),
         Matrix.from_rows(2, m1) if m1 else Matrix.zero(2, d1, d0)),
    )


def brute_hom_dim(m, n):
    """Oracle: enumerate all matrix tuples over GF(2) and count intertwiners."""
    algebra = m.algebra
    q = algebra.quiver
    shapes = [(n.dim[v], m.dim[v]) for v in range(q.n_vertices)]
    total = sum(a * b for a, b in shapes)
    count = 0
    for bits in itertools.product(range(2), repeat=total):
        mats = []
        k = 0
        for rows, cols in shapes:
            data = [[bits[k + i * cols + j] for j in range(cols)] for i in range(rows)]
            mats.append(Matrix.from_rows(2, data) if rows and cols else Matrix.zero(2, rows, cols))
            k += rows * cols
        ok = True
        for ai in range(len(q.arrows)):
            u, w = q.arrow_source(ai), q.arrow_target(ai)
            if not mats[w].mul(m.action[ai]).sub(n.action[ai].mul(mats[u])).is_zero():
                ok = False
                break
        if ok:
            count += 1
    # count = 2^dim
    return count.bit_length() - 1


def test_validate_projectives(kron2, beilinson2, fivevertex):
    for algebra in (kron2, beilinson2, fivevertex):
        for v in range(algebra.n_vertices):
            assert algebra.projective(v).validate() == []


def test_validate_kron_one_one(kron2):
    m = kron_rep(kron2, 1, 1, [[1]], [[0]])
    assert m.validate() == []


def test_validate_names_broken_relation(beilinson2):
    good = beilinson2.projective(0)
    action = list(good.action)
    # perturb one length-1 map so a commutativity relation fails
    bad0 = action[0].add(Matrix.from_rows(2, [[0], [0], [1]]))
    action[0] = bad0
    bad = Representation(beilinson2, good.dim, tuple(action))
    violations = bad.validate()
    assert violations and any("relation" in v for v in violations)


def test_hom_identity_present(kron2):
    for v in range(2):
        m = kron2.projective(v)
        hb = hom_space(m, m)
        assert any(h.is_invertible() for h in hb.basis) or hb.dimension >= 1


def test_hom_simples_zero(kron2):
    s0 = kron2.simple(0)
    s1 = kron2.simple(1)
    assert dim_hom(s0, s1) == 0


def test_hom_projective_counts_dimension(kron2, fivevertex):
    # Hom(P(v), M) = M_v for projectives
    for algebra in (kron2, fivevertex):
        for v in range(algebra.n_vertices):
            pv = algebra.projective(v)
            for w in range(algebra.n_vertices):
                m = algebra.projective(w)
                assert dim_hom(pv, m) == m.dim[v]


def test_hom_p0_to_s1_is_zero_brute(kron2):
    # the intertwining equations force the vertex-1 block to kill both arrows
    p0 = kron2.projective(0)
    s1 = kron2.simple(1)
    assert brute_hom_dim(p0, s1) == 0
    assert dim_hom(p0, s1) == 0


def test_hom_additive_in_sums(kron2):
    s0, s1 = kron2.simple(0), kron2.simple(1)
    p0 = kron2.projective(0)
    lhs = dim_hom(direct_sum([s0, p0]), s1)
    assert lhs == dim_hom(s0, s1) + dim_hom(p0, s1)
    rhs = dim_hom(p0, direct_sum([s1, s1]))
    assert rhs == 2 * dim_hom(p0, s1)


def test_is_iso_reflexive(kron2):
    m = kron2.projective(0)
    assert is_iso(m, m) is True


def test_is_iso_simples_differ(kron2):
    assert is_iso(kron2.simple(0), kron2.simple(1)) is False


def test_is_iso_two_regulars_not_iso(kron2):
    # brute-force: Hom between them is zero, so no isomorphism exists
    a = kron_rep(kron2, 1, 1, [[1]], [[0]])
    b = kron_rep(kron2, 1, 1, [[0]], [[1]])
    assert brute_hom_dim(a, b) == 0
    assert is_iso(a, b) is False


def test_is_iso_same_class_after_base_change(kron2):
    a = kron_rep(kron2, 1, 2, [[1], [0]], [[0], [1]])
    b = kron_rep(kron2, 1, 2, [[1], [1]], [[0], [1]])  # column operations on vertex 1
    assert is_iso(a, b) is True


def test_is_iso_algebra_mismatch(kron2, fivevertex):
    with pytest.raises(AlgebraMismatch):
        is_iso(kron2.simple(0), fivevertex.simple(0))


def test_decompose_indecomposable(kron2):
    m = kron_rep(kron2, 1, 1, [[1]], [[0]])
    dec = decompose(m)
    assert len(dec.factors) == 1 and dec.factors[0][1] == 1


def test_decompose_sum_of_simples(kron2):
    s0 = kron2.simple(0)
    dec = decompose(direct_sum([s0, s0]))
    assert len(dec.factors) == 1
    assert dec.factors[0][1] == 2
    assert is_iso(dec.factors[0][0], s0) is True


def test_decompose_nonsplit_middle_local(kron2):
    # middle of a nonsplit extension of S(0) by S(1): dim (1,1), local End
    m = kron_rep(kron2, 1, 1, [[1]], [[0]])
    dec = decompose(m)
    assert dec.factors[0][0].dim == (1, 1)
    end = hom_space(m, m)
    for h in end.basis:
        if not h.is_invertible():
            power = h
            for _ in range(m.total_dim):
                power = power.then(h)
            assert power.is_zero()


def test_decompose_mixed_sum(kron2):
    p0 = kron2.projective(0)
    s1 = kron2.simple(1)
    dec = decompose(direct_sum([p0, s1, s1]))
    dims = sorted((f.dim, mult) for f, mult in dec.factors)
    assert dims == [((0, 1), 2), ((1, 2), 1)]


def test_decompose_preserves_dimension(kron2, fivevertex):
    for algebra in (kron2, fivevertex):
        m = direct_sum([algebra.projective(v) for v in range(algebra.n_vertices)])
        dec = decompose(m)
        for v in range(algebra.n_vertices):
            assert sum(f.dim[v] * mult for f, mult in dec.factors) == m.dim[v]


def test_top_and_radical_semisimple(semisimple3):
    m = direct_sum([semisimple3.simple(v) for v in range(3)])
    top, rad, proj, incl = top_and_radical(m)
    assert rad.total_dim == 0
    assert top.dim == m.dim


def test_top_and_radical_p0(kron2):
    p0 = kron2.projective(0)
    top, rad, proj, incl = top_and_radical(p0)
    assert rad.dim == (0, 2)
    assert top.dim == (1, 0)
    dec = decompose(rad)
    assert dec.factors[0][0].dim == (0, 1) and dec.factors[0][1] == 2


def test_projective_tops_are_simple(kron2, beilinson2, fivevertex):
    for algebra in (kron2, beilinson2, fivevertex):
        for v in range(algebra.n_vertices):
            top, _, _, _ = top_and_radical(algebra.projective(v))
            expected = tuple(1 if w == v else 0 for w in range(algebra.n_vertices))
            assert top.dim == expected


def test_module_doc_roundtrip(kron2):
    p0 = kron2.projective(0)
    doc = module_doc(p0, "kron2")
    again = parse_module_doc(doc, kron2)
    assert again.dim == p0.dim
    assert is_iso(again, p0) is True


def test_krull_schmidt_reassembly(kron2):
    m = kron_rep(kron2, 1, 1, [[1]], [[1]])
    n = kron2.projective(0)
    total = direct_sum([m, n])
    both = decompose(total)
    parts_m = decompose(m).factors
    parts_n = decompose(n).factors
    assert sum(mult for _, mult in both.factors) == sum(
        mult for _, mult in parts_m + parts_n
    )
    rebuilt = direct_sum([f for f, mult in both.factors for _ in range(mult)])
    assert is_iso(rebuilt, total) is True


def test_hom_space_contains_identity(kron2, fivevertex):
    # the identity endomorphism must lie in the span of the computed basis
    from syzex.linalg import Matrix, solve

    for algebra in (kron2, fivevertex):
        for v in range(algebra.n_vertices):
            m = algebra.projective(v)
            hb = hom_space(m, m)
            flat_basis = []
            for h in hb.basis:
                flat_basis.append([x for mat in h.mats for row in mat.entries() for x in row])
            ident = [
                x
                for d in m.dim
                for row in Matrix.identity(algebra.p, d).entries()
                for x in row
            ]
            system = Matrix.from_columns(algebra.p, flat_basis, len(ident))
            assert solve(system, ident) is not None
