import numpy as np
import pytest

from mandarincs.domain.aggs import ConfusionMatrix, Violation, VowelSummary
from mandarincs.domain.classifier import report_from_means
from mandarincs.domain.inventory import final_allocation
from mandarincs.lib.ports import PlainTextInterface, RichTextInterface
from mandarincs.lib.theme import (
    CLEAN_STYLE,
    CONFUSION_STYLE,
    REFERENCE_STYLE,
    REPORT_STYLE,
    SEARCH_STYLE,
    VIOLATION_STYLE,
)

REPORT = report_from_means([90.0, 80.0, 70.0, 100.0, 60.0])
VIOLATIONS = [Violation("co_occurrence", "sh can precede [w] but shares handshape 6 with it", ("sh", "[w]"))]


def interfaces():
    yield PlainTextInterface()
    if RichTextInterface.is_available():
        yield RichTextInterface()


@pytest.mark.parametrize("style", [REPORT_STYLE, REFERENCE_STYLE])
def test_report_styles_leave_the_title_to_the_caller(capsys, style):
    for interface in interfaces():
        interface.display_report("speaker 1, final", REPORT, final_allocation(), **style)
    out = capsys.readouterr().out
    assert "speaker 1, final" in out
    assert "80.00" in out


def test_violation_style_leaves_the_title_to_the_caller(capsys):
    for interface in interfaces():
        interface.display_violations("Consonant table", VIOLATIONS, **VIOLATION_STYLE)
        interface.display_violations("Vowel allocation", [], **VIOLATION_STYLE)
    out = capsys.readouterr().out
    assert "Consonant table" in out
    assert "co_occurrence" in out
    assert "no violations" in out


@pytest.mark.parametrize("style", [REPORT_STYLE, REFERENCE_STYLE, VIOLATION_STYLE])
def test_positional_title_styles_carry_no_title(style):
    assert "title" not in style


def test_plain_report_rows(capsys):
    PlainTextInterface().display_report("r", REPORT, final_allocation(), **REPORT_STYLE)
    lines = capsys.readouterr().out.splitlines()
    assert any(line.startswith("| P2") and "a ou eng er" in line for line in lines)
    assert any("average" in line and "80.00" in line for line in lines)


def test_titled_styles(capsys):
    PlainTextInterface().display("clean", **CLEAN_STYLE)
    assert CLEAN_STYLE["title"] in capsys.readouterr().out
    assert "title" in SEARCH_STYLE


def test_confusion_table_rows(capsys):
    matrix = ConfusionMatrix(vowels=("i", "ang", "ong"), counts=np.array([[8, 0, 2], [0, 10, 0], [5, 0, 5]]))
    summary = VowelSummary(vowel="i", frames=80, mu=np.array([30.0, 15.0]), sigma=np.eye(2) * 0.25)
    for interface in interfaces():
        interface.display_confusion("speaker 1, P3 mouth", matrix, [summary], **CONFUSION_STYLE)
    out = capsys.readouterr().out
    assert "speaker 1, P3 mouth" in out
    assert "80.0" in out and "50.0" in out
    assert "30.00" in out
    assert "accuracy 76.67% over 30 test frames" in out
