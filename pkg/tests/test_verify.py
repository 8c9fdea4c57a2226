from dataclasses import replace
from fractions import Fraction as F

import pytest

from models import Pt, Rect, SimDrawing, Subdivision
from simdraw.checks import create_default_registry
from simdraw.checks.containment import ContainmentCheck
from simdraw.subdivision import adjacencies
from simdraw.verify import naive_crossing_oracle, verify


def _moved(drawing: SimDrawing, vid: str, p: Pt) -> SimDrawing:
    return replace(drawing, positions={**drawing.positions, vid: p})


def test_centres_of_pin5_form_a_drawing(pin5, pin5_centres):
    report = verify(pin5, pin5_centres)
    assert report.passed, report.violations


def test_vertex_outside_rect(pin5, pin5_centres):
    report = verify(pin5, _moved(pin5_centres, "e", Pt.of(8, 5)))
    [v] = report.for_check("containment")
    assert v.ids == ("e",) and v.point == Pt.of(8, 5)
    assert report.checks["containment"] is False
    assert report.checks["scaling"] is True


def test_edge_crossing_outside_shared_segment(pin5, pin5_centres):
    drawing = _moved(pin5_centres, "a", Pt(F(13, 2), F(1, 2)))
    report = verify(pin5, drawing)
    bad = report.for_check("crossing")
    assert [v.ids for v in bad] == [("a", "d")]
    assert report.checks["containment"]


def test_missing_rect_breaks_subdivision_and_scaling(pin5, pin5_centres):
    rects = [r for r in pin5_centres.rects if r.id != "c"]
    positions = {k: p for k, p in pin5_centres.positions.items() if k != "c"}
    report = verify(pin5, SimDrawing(rects=rects, positions=positions))
    assert report.for_check("subdivision")
    assert report.for_check("scaling")


def test_swapped_ids_break_scaling(pin5, pin5_centres):
    swap = {"e": "c", "c": "e"}
    rects = [r.moved(id=swap.get(r.id, r.id)) for r in pin5_centres.rects]
    drawing = SimDrawing(rects=rects, positions={r.id: r.center for r in rects})
    report = verify(pin5, drawing)
    assert report.for_check("scaling")
    assert not report.for_check("containment")


def _four_rects():
    rects = (
        Rect.of("A", 0, 0, 1, 2),
        Rect.of("B", 1, 0, 2, 1),
        Rect.of("C", 1, 1, 2, 2),
        Rect.of("D", 2, 0, 3, 2),
    )
    return Subdivision(Rect.of("bounds", 0, 0, 3, 2), rects)


def test_crossing_edges_break_planarity():
    sub = _four_rects()
    positions = {
        "A": Pt(F(9, 10), F(1, 10)),
        "B": Pt(F(11, 10), F(9, 10)),
        "C": Pt(F(19, 10), F(19, 10)),
        "D": Pt(F(21, 10), F(19, 10)),
    }
    report = verify(sub, SimDrawing(rects=list(sub.rects), positions=positions))
    crossings = report.for_check("planarity")
    assert [v.ids for v in crossings] == [("A", "C", "B", "D")]


def test_skipped_check_does_not_run(pin5, pin5_centres):
    registry = create_default_registry()
    registry.disable("containment")
    report = verify(pin5, _moved(pin5_centres, "e", Pt.of(8, 5)), registry)
    assert "containment" not in report.checks
    assert not report.for_check("containment")


def test_reenabled_check_runs_again(pin5, pin5_centres):
    registry = create_default_registry()
    registry.disable("containment")
    registry.enable("containment")
    assert registry.is_enabled("containment")
    report = verify(pin5, _moved(pin5_centres, "e", Pt.of(8, 5)), registry)
    assert report.for_check("containment")


def test_unknown_check_name():
    registry = create_default_registry()
    with pytest.raises(KeyError):
        registry.disable("symmetry")
    with pytest.raises(KeyError):
        registry.enable("symmetry")


def test_check_names_are_unique():
    with pytest.raises(ValueError):
        create_default_registry().register(ContainmentCheck())


def test_every_check_describes_itself():
    about = create_default_registry().descriptions()
    assert list(about) == ["subdivision", "containment", "crossing", "planarity", "scaling"]
    assert all(about.values())


def test_oracle_counts_one_crossing_per_edge(pin5_centres):
    counts = naive_crossing_oracle(pin5_centres)
    assert len(counts) == 8
    assert set(counts.values()) == {1}


def test_oracle_sees_double_crossing(pin5_centres):
    counts = naive_crossing_oracle(_moved(pin5_centres, "a", Pt(F(13, 2), F(1, 2))))
    assert counts[("a", "d")] == 2


def test_oracle_agrees_with_verifier(small_corpus):
    from simdraw.engine import run

    for _, sub in small_corpus[:6]:
        drawing = run(sub)
        counts = naive_crossing_oracle(drawing)
        assert len(counts) == len(adjacencies(sub.rects))
        assert set(counts.values()) == {1}
