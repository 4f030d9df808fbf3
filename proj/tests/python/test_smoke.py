"""Smoke tests for the python module: one pass over every subsystem."""

import pytest

import omegalab as ol


def evens():
    return ol.EPSet.residues(2, [0])


def test_epset_algebra():
    e = evens()
    odds = ol.EPSet.residues(2, [1])
    assert e.member(4) and not e.member(3)
    assert 4 in e
    assert ol.union(e, odds) == ol.EPSet.naturals()
    assert ol.intersect(e, ol.EPSet.residues(3, [0])) == ol.EPSet.residues(6, [0])
    assert ol.complement(e) == odds
    assert ol.almost_subset(e, ol.EPSet.naturals())
    assert repr(e) == "ep(prefix=[],start=0,period=2,pattern=[0])"
    assert ol.parse_epset(repr(e)) == e


def test_epset_errors():
    with pytest.raises(ol.FiniteSetError):
        ol.EPSet.finite([1, 2]).tail_gap_bound()
    with pytest.raises(ol.ParseError):
        ol.parse_epset("ep(prefix=[],start=0,period=0,pattern=[])")


def test_qafun_and_bridges():
    f = ol.QAFun.linear(2, 0)
    assert f(5) == 10
    assert ol.image_set(f) == evens()
    assert ol.enumeration(evens()) == f
    assert ol.le_star(f, ol.QAFun.linear(3, 0))
    assert ol.le_set(ol.QAFun.identity(), f, True) == ol.EPSet([], 1, 1, [0])
    assert ol.compose(ol.QAFun.linear(3, 1), f) == ol.QAFun.linear(6, 1)
    stream = ol.baire_to_roth(ol.QAFun.constant(1))
    assert stream.truncate(10) == [1, 3, 5, 7, 9]


def test_compression_and_trichotomy():
    h = ol.build_slalom([evens()])
    assert h == ol.QAFun.linear(2, 0)
    assert ol.compress_set(evens(), h) == ol.EPSet.naturals()
    assert ol.is_slalom(h, [evens()])
    verdict = ol.classify_trichotomy([evens()], ol.QAFun.identity(),
                                     [evens(), ol.EPSet.residues(2, [1])])
    assert verdict.tag == ol.TrichotomyVerdict.Tag.UltraLike
    assert verdict.reverify([evens()], [evens(), ol.EPSet.residues(2, [1])])


def test_families():
    fam = ol.FamilySpec([evens(), ol.EPSet.residues(3, [0])])
    assert ol.subbase_check(fam)
    assert not ol.is_filter_base(fam)
    closed = ol.psi_k(fam, 2)
    assert len(closed.generators) == 3
    with pytest.raises(ol.FiniteIntersectionError):
        ol.psi_k(ol.FamilySpec([evens(), ol.EPSet.residues(2, [1])]), 2)


def test_constructions():
    splitter = ol.splitter_from_slalom(ol.QAFun.linear(2, 0))
    assert splitter == ol.EPSet.residues(4, [0, 1])
    assert ol.split_witness_check([evens()], splitter)
    I, J = ol.ij_from_guesser(ol.rothberger_guesser([evens()]))
    assert I.truncate(13) == [0, 4, 8, 12]
    assert J.truncate(11) == [2, 6, 10]
    report = ol.bounding_reduction([ol.QAFun.identity()], ol.QAFun.linear(3, 0),
                                   ol.QAFun.linear(2, 0))
    assert report.verifies() and report.recheck()
    esc = ol.escape_function([ol.QAFun.linear(2, 0), ol.QAFun.linear(1, 10)])
    for m in ol.maxfin_closure([ol.QAFun.linear(2, 0), ol.QAFun.linear(1, 10)]):
        assert not ol.le_star(esc, m)


def test_covers_and_games():
    cover = ol.CoverTrace([("x", evens()), ("y", ol.EPSet.residues(2, [1]))])
    tags = ol.classify_cover(cover)
    assert tags.large and not tags.gamma
    glued = ol.glue_cover(cover, ol.QAFun.linear(2, 0))
    assert ol.classify_cover(glued).gamma
    part = ol.gamma_glueable(cover)
    assert part.mode == ol.GluePartition.Mode.Case2 and part.reverify(cover)
    seq = ol.CoverSequence([cover])
    verdict = ol.evaluate_selection(
        seq, ol.PickSchedule.windows(ol.build_slalom([evens(), ol.EPSet.residues(2, [1])])),
        ol.SelectionMode.Ufin)
    assert verdict.tags.gamma


def test_harness():
    params = ol.GenParams()
    params.seed = 5
    params.cases = 10
    a = ol.gen_epset(params, 0)
    assert a == ol.gen_epset(params, 0)
    assert a.infinite()
    report = ol.run_suite("split1", params)
    assert report.passed()
    assert report.cases == 10
    again = ol.run_suite("split1", params)
    assert report.text() == again.text()
    with pytest.raises(ol.UnknownSuiteError):
        ol.run_suite("nope", params)
