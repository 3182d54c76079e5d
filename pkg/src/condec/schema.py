"""Versioned JSON schema for command-line verdict reports.

Every CLI command prints one report object on stdout.  The envelope is
fixed; the ``result`` payload depends on the command, and witness words
are rendered as space-separated event lists (tagged events as ``~e``).
Reports are byte-stable across runs except for ``elapsed_ms``.
"""

SCHEMA_ID = "condec-report/1"

_WORD = {"type": ["string", "null"]}

_CD_VERDICT = {
    "type": "object",
    "required": ["decomposable", "witness"],
    "properties": {
        "decomposable": {"type": "boolean"},
        "witness": _WORD,
        "failing_index": {"type": ["integer", "null"], "minimum": 1},
    },
    "additionalProperties": False,
}

_GENERATOR_RESULT = {
    "type": "object",
    "required": ["generator", "states"],
    "properties": {
        "generator": {"type": "string"},
        "states": {"type": "integer", "minimum": 1},
        "marked": {"type": "integer", "minimum": 0},
        "out_path": {"type": ["string", "null"]},
        "dot_path": {"type": ["string", "null"]},
        "figure_path": {"type": ["string", "null"]},
    },
    "additionalProperties": False,
}

_RESULTS = {
    "is-cd": {
        "type": "object",
        "required": ["decomposable", "witness"],
        "properties": {
            "decomposable": {"type": "boolean"},
            "witness": _WORD,
            "failing_index": {"type": ["integer", "null"]},
            "oracle": {
                "type": ["object", "null"],
                "required": ["decomposable", "agrees"],
                "properties": {
                    "decomposable": {"type": "boolean"},
                    "witness": _WORD,
                    "agrees": {"type": "boolean"},
                },
                "additionalProperties": False,
            },
        },
        "additionalProperties": False,
    },
    "extend": {
        "type": "object",
        "required": ["added", "restarts", "final_ek", "verified"],
        "properties": {
            "added": {"type": "array", "items": {"type": "string"}},
            "restarts": {"type": "integer", "minimum": 0},
            "final_ek": {"type": "array", "items": {"type": "string"}},
            "verified": {"type": "boolean"},
        },
        "additionalProperties": False,
    },
    "nonblocking": {
        "type": "object",
        "required": ["mode", "condition1", "condition2", "overall"],
        "properties": {
            "mode": {"enum": ["theorem", "supplied", "intersection"]},
            "condition1": {"type": "array", "items": {"type": "boolean"}},
            "condition1_witnesses": {"type": "array", "items": _WORD},
            "condition2": _CD_VERDICT,
            "overall": {"type": "boolean"},
            "direct": {"type": ["boolean", "null"]},
            "direct_witness": _WORD,
        },
        "additionalProperties": False,
    },
    "observer": {
        "type": "object",
        "required": ["observer"],
        "properties": {
            "observer": {"type": "boolean"},
            "counterexample": {
                "type": ["object", "null"],
                "required": ["s", "t"],
                "properties": {"s": {"type": "string"}, "t": {"type": "string"}},
                "additionalProperties": False,
            },
        },
        "additionalProperties": False,
    },
    "project": _GENERATOR_RESULT,
    "compose": _GENERATOR_RESULT,
    "trim": _GENERATOR_RESULT,
    "minimize": _GENERATOR_RESULT,
    "complement": _GENERATOR_RESULT,
    "draw": _GENERATOR_RESULT,
    "bench": {
        "type": "object",
        "required": ["workload", "rows"],
        "properties": {
            "workload": {"enum": ["scaling", "nlinear"]},
            "rows": {"type": "array"},
            "slope": {"type": ["number", "null"]},
            "ratio": {"type": ["number", "null"]},
            "csv_path": {"type": ["string", "null"]},
            "figure_path": {"type": ["string", "null"]},
        },
        "additionalProperties": False,
    },
}

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "$id": SCHEMA_ID,
    "type": "object",
    "required": ["schema", "command", "inputs", "options", "result", "elapsed_ms"],
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "command": {"enum": sorted(_RESULTS)},
        "inputs": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["path", "sha256"],
                "properties": {
                    "path": {"type": "string"},
                    "sha256": {"type": "string", "pattern": "^[0-9a-f]{64}$"},
                },
                "additionalProperties": False,
            },
        },
        "options": {"type": "object"},
        "result": {"type": "object"},
        "elapsed_ms": {"type": "number", "minimum": 0},
    },
    "additionalProperties": False,
    "allOf": [
        {
            "if": {"properties": {"command": {"const": cmd}}},
            "then": {"properties": {"result": result}},
        }
        for cmd, result in sorted(_RESULTS.items())
    ],
}
