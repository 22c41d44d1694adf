from __future__ import annotations

import json

import jsonschema

from gaussmaps.report import load_schema

from conftest import GOLDEN


def test_verify_json_matches_golden_bytes(verify_run):
    assert verify_run.stdout == GOLDEN.read_text()


def test_verify_json_validates_against_schema(verify_run):
    jsonschema.validate(json.loads(verify_run.stdout), load_schema("verify"))


def test_golden_has_no_floats():
    def walk(v):
        assert not isinstance(v, float)
        if isinstance(v, dict):
            for x in v.values():
                walk(x)
        elif isinstance(v, list):
            for x in v:
                walk(x)

    walk(json.loads(GOLDEN.read_text()))
