"""JSON Schema documents for every serialized type."""

INT_STRING = {"type": "string", "pattern": "^-?[0-9]+$"}

RATFUNC = {
    "type": "object",
    "properties": {
        "num": {"type": "array", "items": INT_STRING},
        "den": {"type": "array", "items": INT_STRING, "minItems": 1},
    },
    "required": ["num", "den"],
    "additionalProperties": False,
}

TORUS_ELEMENT = {
    "type": "object",
    "properties": {
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"x": {"type": "integer"}, "y": {"type": "integer"},
                               "coeff": RATFUNC},
                "required": ["x", "y", "coeff"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["terms"],
    "additionalProperties": False,
}

SERIES = {
    "type": "object",
    "properties": {
        "order": {"type": "integer", "minimum": 0},
        "coeffs": {"type": "array", "items": {"anyOf": [RATFUNC, TORUS_ELEMENT]}, "minItems": 1},
    },
    "required": ["order", "coeffs"],
    "additionalProperties": False,
}

BI_SERIES = {
    "type": "object",
    "properties": {
        "order": {"type": "array", "items": {"type": "integer", "minimum": 0},
                  "minItems": 2, "maxItems": 2},
        "coeffs": {"type": "array", "items": {"type": "array", "items": TORUS_ELEMENT}},
    },
    "required": ["order", "coeffs"],
    "additionalProperties": False,
}

REPORT = {
    "type": "object",
    "properties": {
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "name": {"type": "string"},
                    "truncation": {"type": "array", "items": {"type": "integer"}},
                    "status": {"enum": ["pass", "fail"]},
                    "witness": {
                        "anyOf": [
                            {"type": "null"},
                            {
                                "type": "object",
                                "properties": {
                                    "degree": {"anyOf": [
                                        {"type": "null"},
                                        {"type": "array", "items": {"type": "integer"}}]},
                                    "identity": {"type": "string"},
                                    "value": {"anyOf": [{"type": "number"}, RATFUNC,
                                                        TORUS_ELEMENT]},
                                },
                                "required": ["degree", "identity", "value"],
                            },
                        ],
                    },
                    "residual": {"type": "number"},
                },
                "required": ["name", "truncation", "status", "witness"],
                "if": {"properties": {"status": {"const": "fail"}}},
                "then": {"properties": {"witness": {"type": "object"}}},
            },
        },
    },
    "required": ["checks"],
    "additionalProperties": False,
}
