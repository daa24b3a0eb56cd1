#!/usr/bin/env python3
"""Writes schemas/*.schema.json, one per CLI command plus the error document."""
import json
import pathlib
import sys

DRAFT = "https://json-schema.org/draft/2020-12/schema"

strs = {"type": "array", "items": {"type": "string"}}
ints = {"type": "array", "items": {"type": "integer"}}
pos = {"type": "integer", "minimum": 1}
nat = {"type": "integer", "minimum": 0}

ring = {"type": "object", "required": ["field", "vars", "relations"],
        "properties": {"field": {"type": "string"}, "vars": strs, "relations": strs}}
verdict = {
    "type": "object", "required": ["status", "certificate"],
    "properties": {
        "status": {"enum": ["Member", "NonMemberCertified", "UndecidedAtCap"]},
        "bound": nat,
        "certificate": {
            "type": "object", "required": ["kind"],
            "properties": {
                "kind": {"enum": ["none", "power", "reduction", "newton"]},
                "s": pos, "N": nat, "weights": strs,
                "via": {"type": "array", "items": {
                    "type": "object", "required": ["generator", "verdict"],
                    "properties": {"generator": {"type": "string"}, "verdict": {"$ref": "#/$defs/verdict"}}}},
            },
        },
    },
}
witness = {
    "type": "object", "required": ["stages"],
    "properties": {"stages": {"type": "array", "items": {
        "type": "object", "required": ["degree", "cells"],
        "properties": {"degree": nat, "cells": {"type": "array", "items": {
            "type": "object", "required": ["charts", "vector"],
            "properties": {"charts": ints, "vector": strs}}}}}}},
}
DEFS = {"ring": ring, "verdict": verdict, "witness": witness}
R = {"$ref": "#/$defs/ring"}
V = {"$ref": "#/$defs/verdict"}
W = {"oneOf": [{"$ref": "#/$defs/witness"}, {"type": "null"}]}


def command(name, props, required):
    return {"$schema": DRAFT, "$id": f"skoda/{name}.schema.json", "title": f"skoda {name}",
            "type": "object", "required": ["command", *required],
            "properties": {"command": {"const": name}, **props}, "$defs": DEFS}


matrix = {"type": "object", "required": ["rows", "cols", "entries"],
          "properties": {"rows": nat, "cols": nat, "entries": {"type": "array", "items": strs}}}
report = {
    "type": "object", "required": ["ring", "J", "n", "k", "generators", "verdict", "failing"],
    "properties": {
        "ring": R, "J": strs, "n": pos, "k": pos, "verdict": {"enum": ["HOLDS", "FAILS"]},
        "failing": strs, "seconds": {"type": "number"},
        "generators": {"type": "array", "items": {
            "type": "object", "required": ["generator", "certificate", "in_Jk"],
            "properties": {"generator": {"type": "string"}, "certificate": V, "in_Jk": {"type": "boolean"}}}},
    },
}
model_summary = {"type": "object", "required": ["center", "chart_generators", "charts", "power"],
                 "properties": {"center": strs, "chart_generators": strs, "charts": nat, "power": pos}}
model = {
    "type": "object",
    "required": ["base", "center", "chart_generators", "power", "charts", "overlaps", "restrictions"],
    "properties": {
        "base": R, "center": strs, "chart_generators": strs, "power": pos,
        "charts": {"type": "array", "items": {
            "type": "object", "required": ["index", "generator", "ring", "center_images"],
            "properties": {"index": nat, "generator": {"type": "string"}, "ring": R, "center_images": strs}}},
        "overlaps": {"type": "array", "items": {
            "type": "object", "required": ["charts", "ring"], "properties": {"charts": ints, "ring": R}}},
        "restrictions": {"type": "array", "items": {
            "type": "object", "required": ["from", "to", "images"],
            "properties": {"from": ints, "to": ints, "images": strs}}},
    },
}

SCHEMAS = {
    "gb": command("gb", {"ring": R, "gb": strs}, ["ring", "gb"]),
    "member": command("member", {"h": {"type": "string"}, "ideal": strs, "member": {"type": "boolean"}},
                      ["h", "ideal", "member"]),
    "icl": command("icl", {"h": {"type": "string"}, "J": strs, "m": pos, "verdict": V}, ["h", "J", "m", "verdict"]),
    "lcomplex": command("lcomplex", {
        "k": pos, "d_squared_zero": {"type": "boolean"},
        "complex": {"type": "object", "required": ["ranks", "differentials", "vars", "relations"],
                    "properties": {"ranks": {"type": "array", "items": nat},
                                   "differentials": {"type": "array", "items": matrix},
                                   "labels": {"type": "array", "items": strs}, "vars": strs, "relations": strs}},
    }, ["k", "complex", "d_squared_zero"]),
    "blowup": command("blowup", {
        "delta_squared_zero": {"type": "boolean"},
        "check": {"type": "object", "required": ["ok", "problems"],
                  "properties": {"ok": {"type": "boolean"}, "problems": strs}},
        "model": model,
    }, ["model", "check", "delta_squared_zero"]),
    "bs-check": command("bs-check", {
        "instance": {"type": "string"}, "report": report,
        "expected": {"enum": ["HOLDS", "FAILS"]}, "as_expected": {"type": "boolean"},
    }, ["instance", "report"]),
    "verify-main": command("verify-main", {
        "instance": {"type": "string"}, "k": pos, "alarms": nat,
        "results": {"type": "array", "items": {
            "type": "object", "required": ["h", "alarm", "certificate", "method", "witness"],
            "properties": {"h": {"type": "string"}, "alarm": {"type": "boolean"}, "certificate": V,
                           "method": {"enum": ["twisted", "direct"]}, "witness": W, "model": model_summary,
                           "failed_stage": nat, "note": {"type": "string"}, "seconds": {"type": "number"}}}},
    }, ["instance", "k", "results", "alarms"]),
    "bir-member": command("bir-member", {
        "instance": {"type": "string"}, "k": pos, "alarms": nat,
        "results": {"type": "array", "items": {
            "type": "object", "required": ["h", "member", "route", "certified_in_closure"],
            "properties": {"h": {"type": "string"}, "member": {"type": "boolean"},
                           "route": {"enum": ["base", "twisted", "direct", "none"]},
                           "certified_in_closure": {"type": "boolean"}, "note": {"type": "string"}, "witness": W}}},
    }, ["instance", "k", "results", "alarms"]),
    # Each "result" is additionally validated against the schema named by its "command".
    "corpus": command("corpus", {
        "results": {"type": "array", "items": {
            "type": "object", "required": ["file", "command", "status"],
            "properties": {"file": {"type": "string"},
                           "command": {"enum": ["bs-check", "verify-main", "bir-member"]},
                           "status": {"enum": ["ok", "alarm", "cap", "error"]},
                           "message": {"type": "string"},
                           "result": {"type": "object", "required": ["command"]}}}},
        "summary": {"type": "object", "required": ["total", "alarms", "caps", "errors", "message"],
                    "properties": {"total": nat, "alarms": nat, "caps": nat, "errors": nat,
                                   "message": {"type": "string"}}},
    }, ["results", "summary"]),
    "error": {"$schema": DRAFT, "$id": "skoda/error.schema.json", "title": "skoda error", "type": "object",
              "required": ["error", "message"], "additionalProperties": False,
              "properties": {"error": {"enum": ["input", "resource cap"]}, "message": {"type": "string"}}},
}

if __name__ == "__main__":
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "schemas")
    out.mkdir(parents=True, exist_ok=True)
    for name, schema in SCHEMAS.items():
        (out / f"{name}.schema.json").write_text(json.dumps(schema, indent=2) + "\n")
