"""Report planning, content structure, and determinism."""

import re

import pytest

from qegs import Bimatrix, generate_report, plan_report, render_report
from qegs.errors import NoReportError, ParamError
from qegs.report import (
    EXTENSIONS_ONLY,
    FULL_2X2,
    NO_REPORT,
    PROPERTIES_ONLY,
    PROPERTY_SECTIONS,
)

from conftest import G23_GRID, PD_GRID

EXTENSION_SECTIONS = ("A0", "B0", "C0", "A1", "A2", "B1", "C1", "D1", "D2", "E1", "E2")


def _parametric_2x2() -> Bimatrix:
    return Bimatrix.of([[([1, -2], [1, -2]), (0, 5)], [(5, 0), ([0, 1], [0, 1])]], param="x")


def _parametric_2x3() -> Bimatrix:
    return Bimatrix.of(
        [[([1, -2], 0), (0, 5), (1, 1)], [(5, 0), ([0, 1], 2), (2, 2)]], param="x"
    )


def test_plan_taxonomy(pd, g23):
    assert plan_report(pd, "pd") == plan_report(pd, "pd")
    plan = plan_report(pd, "pd")
    assert plan.kind == FULL_2X2 and plan.file_name == "Report_pd.md"
    plan = plan_report(_parametric_2x2(), "sym")
    assert plan.kind == EXTENSIONS_ONLY and plan.file_name == "Report_sym_extensions.md"
    plan = plan_report(g23, "g23")
    assert plan.kind == PROPERTIES_ONLY and plan.file_name == "Report_g23_properties.md"
    assert plan_report(_parametric_2x3(), "x").kind == NO_REPORT


def _sections(text: str):
    return re.findall(r"^## (.+)$", text, re.MULTILINE)


def test_full_report_structure(pd, tmp_path):
    path = generate_report(pd, "pd", tmp_path)
    assert path.name == "Report_pd.md"
    text = path.read_text()
    sections = _sections(text)
    assert tuple(sections) == EXTENSION_SECTIONS + PROPERTY_SECTIONS
    assert len([s for s in sections if s in EXTENSION_SECTIONS]) == 11
    assert len([s for s in sections if s in PROPERTY_SECTIONS]) == 3
    assert "- (2, 2) with payoff (1, 1)" in text
    # the A0 section embeds the derived matrix
    a0 = text.split("## A0")[1].split("## B0")[0]
    assert "(3/2, 4)" in a0 and "(9/4, 9/4)" in a0 and "(4, 3/2)" in a0


def test_report_has_no_floats(pd, tmp_path):
    text = generate_report(pd, "pd", tmp_path).read_text()
    body = "\n".join(line for line in text.splitlines() if not line.startswith("Generated by"))
    assert not re.search(r"\d\.\d", body)


def test_extensions_only_report(tmp_path):
    g = _parametric_2x2()
    path = generate_report(g, "sym", tmp_path)
    assert path.name == "Report_sym_extensions.md"
    text = path.read_text()
    assert tuple(_sections(text)) == EXTENSION_SECTIONS
    # four-strategy sections render entries in both the game parameter and
    # the class parameter
    d1 = text.split("## D1")[1].split("## D2")[0]
    assert "t" in d1 and "x" in d1


def test_properties_only_report(g23, tmp_path):
    path = generate_report(g23, "g23", tmp_path)
    assert path.name == "Report_g23_properties.md"
    text = path.read_text()
    assert tuple(_sections(text)) == PROPERTY_SECTIONS
    assert "- (2, 3) with payoff (3, 3)" in text
    assert "Player 1 rows: {1} (security level 2)" in text
    assert "Player 2 columns: {2} (security level 2)" in text
    assert "Player 2 columns: {1}" in text  # dominated column L


def test_no_report_for_parametric_nxm(tmp_path):
    with pytest.raises(NoReportError) as err:
        generate_report(_parametric_2x3(), "x", tmp_path)
    assert "numerical or 2x2" in str(err.value)
    assert list(tmp_path.iterdir()) == []


def test_bad_name_rejected(pd, tmp_path):
    with pytest.raises(ParamError):
        generate_report(pd, "bad name!", tmp_path)


def test_regeneration_is_byte_identical(pd, g23, tmp_path):
    for g, name in ((pd, "pd"), (g23, "g23"), (_parametric_2x2(), "sym")):
        first = generate_report(g, name, tmp_path).read_bytes()
        second = generate_report(g, name, tmp_path).read_bytes()
        assert first == second
        assert render_report(g, name)[1].encode() == first


def test_version_header_present(pd, tmp_path):
    from qegs import __version__

    text = generate_report(pd, "pd", tmp_path).read_text()
    assert f"Generated by qegs {__version__}." in text
