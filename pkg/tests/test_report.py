import json

import numpy as np
import pytest

from cleanring.report import ROW_FIELDS, ReportDocument, Row, emit_human, emit_machine, parse_machine


def _doc():
    doc = ReportDocument("census", "Zn(6)", {"size": 36}, format="machine")
    doc.add("census", "Zn(6)", "is_clean", "true", None, 120)
    doc.add("element", "Zn(6) @ 3", "clean", "true", {"u": "5", "e": "4"}, np.int64(7))
    doc.add("check", "ring=Zn(4)", "C10", "not-applicable", {"reason": "is_regular_ideal", "element": "2"}, 0)
    doc.add("witness", "M(Zn(2),2)", "q", "found", {"pair": (1, 2), "ids": {3, 1}}, 5)
    doc.notes.append("no witness in corpus")
    return doc


def test_machine_round_trip():
    doc = _doc()
    text = emit_machine(doc)
    back = parse_machine(text)
    assert back == doc
    assert emit_machine(back) == text


def test_machine_layout():
    lines = emit_machine(_doc()).splitlines()
    meta = json.loads(lines[0])
    assert meta["kind"] == "meta" and meta["command"] == "census" and meta["caps"] == {"size": 36}
    for line in lines[1:]:
        assert set(json.loads(line)) == set(ROW_FIELDS)
    assert len(lines) == 5


def test_witness_normalization():
    row = Row("witness", "r", "q", "found", {"pair": (1, 2), "ids": {3, 1}}, np.int32(4))
    assert row.witness == {"pair": [1, 2], "ids": [1, 3]}
    assert type(row.nanos) is int


def test_parse_rejects_bad_input():
    with pytest.raises(ValueError):
        parse_machine("")
    with pytest.raises(ValueError):
        parse_machine('{"kind": "census"}\n')
    head = emit_machine(ReportDocument("x")).splitlines()[0]
    with pytest.raises(ValueError):
        parse_machine(head + '\n{"kind": "census", "ring": "Zn(2)"}\n')


def test_human_table():
    doc = _doc()
    text = emit_human(doc)
    lines = text.splitlines()
    assert lines[0] == "# census Zn(6)"
    assert lines[1].split() == ["kind", "ring", "flag/check", "status", "witness"]
    for row in doc.rows:
        assert any(row.flag_or_check in ln and row.ring in ln for ln in lines)
    assert "u=5, e=4" in text and "reason=is_regular_ideal, element=2" in text
    assert lines[-1] == "note: no witness in corpus"
    # the status column starts at the same offset on every table line
    starts = {ln.index(row.status) for ln, row in zip(lines[2:], doc.rows)}
    assert len(starts) == 1


def test_render_dispatch():
    doc = _doc()
    assert doc.render("human") == emit_human(doc)
    assert doc.render() == emit_machine(doc)
    with pytest.raises(ValueError):
        doc.render("xml")
