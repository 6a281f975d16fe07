import pytest

from tcox.cox import delpezzo
from tcox.cox.orlik_wagreich import SINK, SOURCE, resolution_cox
from tcox.cox.presentation import rename


RECONSTRUCTIBLE = [row for row in delpezzo.ROWS if row.reconstructible]


@pytest.mark.parametrize("row", RECONSTRUCTIBLE, ids=lambda row: row.name)
def test_row_is_reproduced(row):
    assert delpezzo.verify_row(row) == []


def test_row_names_are_unique():
    names = [row.name for row in delpezzo.ROWS]
    assert len(names) == len(set(names))


def test_output_only_row():
    row = delpezzo.get_row("delpezzo-deg2-D43A1")
    assert not row.reconstructible
    with pytest.raises(ValueError):
        delpezzo.graph(row)


def test_get_row_unknown():
    with pytest.raises(KeyError):
        delpezzo.get_row("delpezzo-deg9-none")


def test_2d4_row():
    row = delpezzo.get_row("delpezzo-deg1-2D4")
    assert row.s_names == ("S1", "S2")
    assert set(row.exceptional) == {"S1", "S2", "T6", "T7", "T8", "T9", "T10", "T11"}
    names = delpezzo.table_names(row)
    assert names[SOURCE] == "S1" and names[SINK] == "S2"
    assert names["T1_2"] == "T3"
    P = rename(resolution_cox(delpezzo.graph(row)), names)
    assert sorted(P.labels) == sorted(row.resolution_variables)


def test_single_s_rows_keep_sink_in_graph():
    row = delpezzo.get_row("delpezzo-deg1-E8")
    assert row.s_names == ("S",)
    assert SINK not in delpezzo.table_names(row)


def test_broken_row_is_reported():
    row = delpezzo.get_row("delpezzo-deg6-A2")
    broken = delpezzo.DelPezzoRow(row.degree, row.singularity, row.singular_variables,
                                  ("T1*T2 + T3*T4 + T5^3",), row.resolution_variables,
                                  row.resolution_relations, row.arms)
    problems = delpezzo.verify_row(broken)
    assert len(problems) == 1
    assert problems[0].startswith("contracted relations")
