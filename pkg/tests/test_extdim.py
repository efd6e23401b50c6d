import pytest

from syzex.algebra import AlgebraSpec, build_algebra
from syzex.errors import ContradictoryFacts
from syzex.extdim import (
    EdReportOptions,
    UniverseParams,
    bounded_containment,
    bullet,
    ed_report,
    generate_universe,
    layer,
    rep_type_certificate,
    syzygy_category,
    syzygy_finiteness_probe,
    tits_classification,
)
from syzex.homology import is_projective
from syzex.rep import is_iso


FIVEVERTEX_AR_COUNT = 14  # vertices of the AR quiver of this algebra, counted by hand before coding


@pytest.fixture(scope="module")
def kron_universe(kron2):
    return generate_universe(kron2, 6)


@pytest.fixture(scope="module")
def five_universe(fivevertex):
    return generate_universe(fivevertex, 8)


def linear_an_algebra(n=4):
    arrows = [{"name": "a%d" % i, "from": str(i), "to": str(i + 1)} for i in range(1, n)]
    return build_algebra(AlgebraSpec(2, [str(i) for i in range(1, n + 1)], arrows, []))


def euclidean_b_algebra():
    arrows = [
        {"name": "ab", "from": "a", "to": "b"},
        {"name": "ca", "from": "c", "to": "a"},
        {"name": "da", "from": "d", "to": "a"},
        {"name": "ea", "from": "e", "to": "a"},
    ]
    return build_algebra(AlgebraSpec(2, ["a", "b", "c", "d", "e"], arrows, []))


def test_universe_semisimple_saturates(semisimple3):
    uni = generate_universe(semisimple3, 4)
    assert uni.is_saturated and not uni.is_clipped
    assert len(uni.members) == 3
    assert all(c.total_dim == 1 for c in uni.members)


def test_universe_fivevertex_matches_ar_quiver(five_universe):
    assert five_universe.is_saturated and not five_universe.is_clipped
    assert len(five_universe.members) == FIVEVERTEX_AR_COUNT


def test_universe_kron_clips(kron_universe):
    assert kron_universe.is_clipped
    assert any(c.total_dim >= 5 for c in kron_universe.members)


def test_universe_members_indecomposable_and_valid(five_universe):
    from syzex.rep import decompose

    for cls in five_universe.members:
        assert cls.rep.validate() == []
        dec = decompose(cls.rep)
        assert len(dec.factors) == 1 and dec.factors[0][1] == 1


def test_bullet_kron_projective_then_injective_order(kron_universe, kron2):
    s0 = kron_universe.member_named("S0")
    s1 = kron_universe.member_named("S1")
    got = bullet(kron_universe, frozenset([s0]), frozenset([s1]))
    assert got == frozenset([s0, s1])


def test_bullet_kron_covers_window(kron_universe):
    s0 = kron_universe.member_named("S0")
    s1 = kron_universe.member_named("S1")
    got = bullet(kron_universe, frozenset([s1]), frozenset([s0]), mult_bound=3)
    for cls in kron_universe.members:
        assert cls in got


def test_bullet_empty_side(kron_universe):
    s0 = kron_universe.member_named("S0")
    assert bullet(kron_universe, frozenset([s0]), frozenset()) == frozenset([s0])
    assert bullet(kron_universe, frozenset(), frozenset([s0])) == frozenset([s0])


def test_layer_examples(kron_universe):
    s0 = kron_universe.member_named("S0")
    s1 = kron_universe.member_named("S1")
    both = frozenset([s0, s1])
    assert layer(kron_universe, both, 1) == both
    assert layer(kron_universe, frozenset(), 3) == frozenset()
    full = layer(kron_universe, both, 2, mult_bound=3)
    for cls in kron_universe.members:
        assert cls in full


def test_bounded_containment(kron_universe):
    s0 = kron_universe.member_named("S0")
    s1 = kron_universe.member_named("S1")
    both = frozenset([s0, s1])
    assert bounded_containment(kron_universe, both, both, 1) is None
    missing = bounded_containment(
        kron_universe, frozenset(kron_universe.members), frozenset([s0]), 2
    )
    assert missing is s1


def test_syzygy_category_gldim_one():
    b = euclidean_b_algebra()
    cat = syzygy_category(b, 1, 6)
    projectives = {tuple(b.projective(v).dim) for v in range(b.n_vertices)}
    assert {c.dim for c in cat.members} == projectives
    for c in cat.members:
        assert is_projective(c.rep)


def test_syzygy_category_zero_is_window(kron_universe, kron2):
    cat = syzygy_category(kron2, 0, 6, universe=kron_universe)
    assert set(cat.members) == set(kron_universe.members)


def test_syzygy_category_beilinson_second(beilinson2):
    cat = syzygy_category(beilinson2, 2, 2)
    for c in cat.members:
        assert is_projective(c.rep)


def test_tits_classification_examples(kron2, beilinson2):
    assert tits_classification(linear_an_algebra()) == "Dynkin"
    assert tits_classification(kron2) == "Euclidean"
    assert tits_classification(euclidean_b_algebra()) == "Euclidean"
    assert tits_classification(beilinson2) == "not-hereditary"


def test_tits_wild():
    spec = AlgebraSpec(
        2,
        ["1", "2"],
        [
            {"name": "a", "from": "1", "to": "2"},
            {"name": "b", "from": "1", "to": "2"},
            {"name": "c", "from": "1", "to": "2"},
        ],
        [],
    )
    assert tits_classification(build_algebra(spec)) == "wild-indefinite"


def test_rep_type_kron_infinite(kron2):
    cert = rep_type_certificate(kron2, 6)
    assert cert.verdict == "infinite" and cert.method == "tits_form" and cert.certified


def test_rep_type_fivevertex_finite(fivevertex, five_universe):
    cert = rep_type_certificate(fivevertex, 8, universe=five_universe)
    assert cert.verdict == "finite" and cert.certified
    assert len(cert.members) == FIVEVERTEX_AR_COUNT


def test_rep_type_dynkin_finite():
    a4 = linear_an_algebra()
    cert = rep_type_certificate(a4, 8)
    assert cert.verdict == "finite" and cert.method == "tits_form" and cert.certified
    assert len(cert.members) == 10  # positive roots of A4


def test_ed_kron(kron2):
    intervals = ed_report(kron2, [0, 1, 2], options=EdReportOptions(dim_bound=6), algebra_id="kron2")
    by_i = {iv.i: iv for iv in intervals}
    assert by_i[0].exact and by_i[0].lower == 1
    assert by_i[1].exact and by_i[1].upper == 0
    assert by_i[2].exact and by_i[2].upper == 0


def test_ed_fivevertex(fivevertex):
    intervals = ed_report(fivevertex, [0, 1, 3], options=EdReportOptions(dim_bound=8))
    for iv in intervals:
        assert iv.exact and iv.upper == 0


def test_ed_semisimple(semisimple3):
    intervals = ed_report(semisimple3, [0, 1], options=EdReportOptions(dim_bound=3))
    for iv in intervals:
        assert iv.exact and iv.upper == 0


def test_ed_beilinson_without_facts(beilinson2):
    intervals = ed_report(beilinson2, [0], options=EdReportOptions(dim_bound=2), algebra_id="beilinson2")
    iv = intervals[0]
    assert (iv.lower, iv.upper) == (0, 2)
    assert not iv.exact


def test_ed_beilinson_with_external_fact(beilinson2):
    facts = [{"i": 0, "kind": "exact", "value": 2, "citation": "known value"}]
    intervals = ed_report(
        beilinson2, [0, 1, 2], external_facts=facts, options=EdReportOptions(dim_bound=2)
    )
    by_i = {iv.i: iv for iv in intervals}
    for i in (0, 1, 2):
        assert by_i[i].exact
        assert by_i[i].lower == 2 - i


def test_ed_contradictory_facts(kron2):
    facts = [{"i": 0, "kind": "upper", "value": 0, "citation": "bogus"}]
    with pytest.raises(ContradictoryFacts):
        ed_report(kron2, [0], external_facts=facts, options=EdReportOptions(dim_bound=6))


def test_ed_euclidean_b():
    b = euclidean_b_algebra()
    intervals = ed_report(b, [0, 1, 2], options=EdReportOptions(dim_bound=6))
    by_i = {iv.i: iv for iv in intervals}
    assert by_i[0].exact and by_i[0].lower == 1
    assert by_i[1].exact and by_i[1].upper == 0
    assert by_i[2].exact and by_i[2].upper == 0


def test_probe_gldim_one_certified():
    b = euclidean_b_algebra()
    probe = syzygy_finiteness_probe(b, 1, 6)
    assert probe.certified


def test_orbit_reduction_matches_full_enumeration(kron_universe, five_universe):
    """The per-block RREF representatives must reach exactly the summand
    classes that enumerating every extension class reaches."""
    import itertools

    from syzex.extdim import _local_blocks, _assemble_middle, _pair_middles

    checked = 0
    for uni in (kron_universe, five_universe):
        members = uni.sorted_members()
        for sub in members[:6]:
            for quot in members[:6]:
                for j, k in ((1, 2), (2, 1), (2, 2)):
                    sub_ms = ((sub, j),)
                    quot_ms = ((quot, k),)
                    ylist, xlist, slots, total_exp = _local_blocks(uni, sub_ms, quot_ms, uni.params)
                    if total_exp == 0 or 2 ** total_exp > 256:
                        continue
                    full = set()
                    spaces = [range(len(slots[yi][xi])) for yi in range(j) for xi in range(k)]
                    for flat in itertools.product(*spaces):
                        choice = tuple(tuple(flat[yi * k + xi] for xi in range(k)) for yi in range(j))
                        middle = _assemble_middle(uni.algebra, ylist, xlist, slots, choice)
                        for cls, _ in uni._middle_summands(middle):
                            full.add(id(cls))
                    reduced = {id(cls) for cls, _ in _pair_middles(uni, sub_ms, quot_ms, uni.params)}
                    # the full run also contains split pieces from degenerate
                    # classes; those are exactly the sides and smaller pairs
                    smaller = set()
                    for jj in range(0, j + 1):
                        for kk in range(0, k + 1):
                            if (jj, kk) in ((j, k), (0, 0)):
                                continue
                            if jj == 0 or kk == 0:
                                smaller |= {id(sub), id(quot)}
                                continue
                            smaller |= {
                                id(cls) for cls, _ in _pair_middles(uni, ((sub, jj),), ((quot, kk),), uni.params)
                            }
                    assert full <= reduced | smaller | {id(sub), id(quot)}
                    assert reduced <= full
                    checked += 1
    assert checked >= 20


def test_rep_type_euclidean_b_infinite():
    cert = rep_type_certificate(euclidean_b_algebra(), 5)
    assert cert.verdict == "infinite" and cert.certified and cert.method == "tits_form"


def test_kron_universe_matches_known_classification(kron_universe):
    """Indecomposables of the two-arrow quiver over GF(2), total dim <= 6.

    Closed form: preprojectives (n, n+1) and preinjectives (n+1, n) once
    each; regular tubes indexed by the projective line over GF(2) (three
    rational points plus one closed point of degree 2 and two of degree 3),
    giving per dimension (k, k): k=1: 3, k=2: 3 rational + 1 quadratic = 4,
    k=3: 3 rational + 2 cubic = 5.
    """
    expected = sorted(
        [(0, 1), (1, 2), (2, 3), (1, 0), (2, 1), (3, 2)]
        + [(1, 1)] * 3
        + [(2, 2)] * 4
        + [(3, 3)] * 5
    )
    assert sorted(c.dim for c in kron_universe.members) == expected


def test_universe_over_gf3():
    from syzex.corpus import corpus_algebra

    algebra = corpus_algebra("kron2", field_p=3)
    uni = generate_universe(algebra, 4)
    # same shape over GF(3): P^1(F_3) has four rational points and three
    # quadratic ones, so (1,1) has multiplicity 4 and (2,2) has 4 + 3
    counts = {}
    for c in uni.members:
        counts[c.dim] = counts.get(c.dim, 0) + 1
    assert counts[(1, 1)] == 4
    assert counts[(2, 2)] == 7
    assert counts[(1, 2)] == 1 and counts[(2, 1)] == 1
