import pytest

from schroder_lab import (DEFAULT_INTERPRETATION, Interpretation, PathSpec, StatisticUndefined, area,
                          area_lines, dinv, enumerate_paths, gen_poly, stat_record)
from schroder_lab.statistics import (applicable_variant, dinv_haiman, dinv_proposed_d1,
                                     dinv_schroder_r1, haiman_weight)

LEFT = Interpretation.LEFT_AREA
LINE = Interpretation.LINE_AREA


def test_default_interpretation_is_line_area():
    assert DEFAULT_INTERPRETATION is LINE


def test_area_lines_of_one_diagonal_figure(path_of):
    p = path_of("0,1,1~,6,8", n=5, d=4, r=2)
    assert area_lines(p) == (0, 1, 3, 0, 0)
    assert area(p) == 4


def test_area_lines_of_code_figure(path_of):
    p = path_of("0,0~,2,3,5~", n=5, d=3, r=2)
    assert area_lines(p) == (0, 2, 2, 3, 3)
    assert area(p) == 10


def test_area_geometric_oracle():
    # count unit cells between the path and the boundary, line by line
    for spec in (PathSpec(3, 2, 2), PathSpec(4, 3, 1), PathSpec(3, 1, 3)):
        for p in enumerate_paths(spec):
            lines = []
            x = 0
            for s in p.steps:
                if s == "R":
                    x += 1
                else:
                    line = len(lines)
                    lines.append(spec.r * line - x)
                    if s == "G":
                        x += spec.r
            assert tuple(lines) == area_lines(p)


def test_boundary_hugging_path_has_zero_area(path_of):
    assert area_lines(path_of("0,2,4,6", n=4, d=4, r=2)) == (0, 0, 0, 0)


def test_unitfrac_has_no_statistics(path_of):
    p = path_of("0,0,0~,0~", n=2, d=2, r=2, mode="unitfrac")
    with pytest.raises(StatisticUndefined):
        area(p)


def test_schroder_dinv(path_of):
    assert dinv_schroder_r1(path_of("0", n=1, d=1)) == 0
    assert dinv_schroder_r1(path_of("0,0", n=2, d=2), LEFT) == 1
    # under line areas the code 0,0 is the path DDRR: area 1, dinv 0
    assert dinv_schroder_r1(path_of("0,0", n=2, d=2), LINE) == 0
    with pytest.raises(StatisticUndefined):
        dinv_schroder_r1(path_of("0,0~", n=2, d=1, r=2))


def test_area_minus_dinv_multiset_on_sch_2_1():
    vals = sorted(area(p) - dinv_schroder_r1(p) for p in enumerate_paths(PathSpec(2, 1, 1)))
    assert vals == [-1, 0, 1]


def test_catalan_q_t_symmetry():
    # the q,t-Catalan polynomial is symmetric; a sharp check of the line-area reading
    for n in range(1, 6):
        poly = gen_poly(PathSpec(n, n, 1), "schroder")
        assert poly == poly.swap()


def test_haiman_weights():
    assert [haiman_weight(k, 2) for k in range(-2, 4)] == [0, 1, 2, 2, 1, 0]


def test_haiman_dinv(path_of):
    assert dinv_haiman(path_of("0", n=1, d=1, r=2)) == 0
    assert dinv_haiman(path_of("0,0", n=2, d=2), LEFT) == 1
    with pytest.raises(StatisticUndefined):
        dinv_haiman(path_of("0,0~", n=2, d=1))


def test_haiman_equals_schroder_dinv_for_dyck():
    for p in enumerate_paths(PathSpec(4, 4, 1)):
        assert dinv_haiman(p) == dinv_schroder_r1(p)


def test_proposed_dinv_examples(path_of):
    assert dinv_proposed_d1(path_of("0", n=1, d=1, r=2)) == 0
    assert dinv_proposed_d1(path_of("0,0~", n=2, d=1, r=2), LEFT) == 1
    assert dinv_proposed_d1(path_of("0,2~", n=2, d=1, r=2), LEFT) == 0
    with pytest.raises(StatisticUndefined):
        dinv_proposed_d1(path_of("0,0", n=2, d=2, r=2))


def test_applicable_variant():
    assert applicable_variant(PathSpec(3, 3, 2)).value == "haiman"
    assert applicable_variant(PathSpec(3, 1, 1)).value == "schroder"
    assert applicable_variant(PathSpec(3, 1, 2)).value == "proposed"
    with pytest.raises(StatisticUndefined):
        applicable_variant(PathSpec(3, 2, 2))


def test_stat_record_json(path_of):
    rec = stat_record(path_of("0,0~", n=2, d=1, r=2))
    assert rec.to_json() == {"area": 2, "dinv": 0, "variant": "proposed", "interpretation": "linearea"}
    assert dinv(path_of("0,0", n=2, d=2), "haiman") == 0
