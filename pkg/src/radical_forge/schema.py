"""JSON Schemas for ``radical-forge --format json`` output.

Exact rationals are always strings ``"num/den"``; intervals are objects with
a decimal midpoint string, a radius and the count of guaranteed decimals.
"""

RATIONAL = {"type": "string", "pattern": r"^-?\d+/\d+$"}

INTERVAL = {
    "type": "object",
    "required": ["mid", "radius", "digits"],
    "properties": {
        "mid": {"type": "string", "pattern": r"^-?\d+(\.\d+)?$"},
        "radius": {"type": "string"},
        "digits": {"type": ["integer", "null"]},
    },
    "additionalProperties": False,
}

SIGN_WORD = {"type": "string", "pattern": r"^[+-]*\|[+-]*$"}

KIND = {"enum": ["finite", "totally_periodic", "eventually_periodic"]}

ERROR = {
    "type": "object",
    "required": ["error", "kind", "exit_code"],
    "properties": {
        "error": {"type": "string"},
        "kind": {"enum": ["parse", "domain", "precision"]},
        "exit_code": {"enum": [1, 2, 3]},
    },
}

SCHEMAS = {
    "classify": {
        "type": "object",
        "required": ["command", "q", "word", "kind", "preamble_length", "period", "delta_p", "depth"],
        "properties": {
            "command": {"const": "classify"},
            "q": RATIONAL,
            "word": SIGN_WORD,
            "kind": KIND,
            "preamble_length": {"type": "integer", "minimum": 0},
            "period": {"type": ["integer", "null"], "minimum": 1},
            "delta_p": {"enum": [1, -1, None]},
            "depth": {"type": ["integer", "null"], "minimum": 0},
            "roots": {"type": ["integer", "null"], "minimum": 1},
        },
    },
    "encode": {
        "type": "object",
        "required": ["command", "q", "word", "kind", "preamble", "block"],
        "properties": {
            "command": {"const": "encode"},
            "q": RATIONAL,
            "word": SIGN_WORD,
            "kind": KIND,
            "preamble": {"type": "string", "pattern": r"^[+-]*$"},
            "block": {"type": "string", "pattern": r"^[+-]*$"},
        },
    },
    "decode": {
        "type": "object",
        "required": ["command", "word", "q", "value"],
        "properties": {
            "command": {"const": "decode"},
            "word": SIGN_WORD,
            "q": RATIONAL,
            "value": INTERVAL,
        },
    },
    "eval": {
        "type": "object",
        "required": ["command", "word", "depth", "value", "q", "limit"],
        "properties": {
            "command": {"const": "eval"},
            "word": SIGN_WORD,
            "depth": {"type": "integer", "minimum": 0},
            "value": INTERVAL,
            "q": RATIONAL,
            "limit": INTERVAL,
        },
    },
    "limits": {
        "type": "object",
        "required": ["command", "word", "q", "delta_p", "points"],
        "properties": {
            "command": {"const": "limits"},
            "word": SIGN_WORD,
            "q": RATIONAL,
            "delta_p": {"enum": [1, -1]},
            "points": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["j", "coef", "value"],
                    "properties": {
                        "j": {"type": "integer", "minimum": 0},
                        "coef": RATIONAL,
                        "value": INTERVAL,
                    },
                },
            },
        },
    },
    "vieta": {
        "type": "object",
        "required": [
            "command", "q", "period", "factor_count", "target", "partials",
            "distances", "block_distances", "tolerance", "exhausted", "certified",
        ],
        "properties": {
            "command": {"const": "vieta"},
            "q": RATIONAL,
            "period": {"type": "integer", "minimum": 1},
            "factor_count": {"type": "integer", "minimum": 0},
            "target": INTERVAL,
            "partials": {"type": "array", "items": INTERVAL, "minItems": 1},
            "distances": {"type": "array", "items": {"type": "number"}},
            "block_distances": {"type": "array", "items": {"type": "number"}},
            "tolerance": {"type": "number"},
            "exhausted": {"type": "boolean"},
            "certified": {"type": "boolean"},
        },
    },
    "verify": {
        "type": "object",
        "required": ["command", "suite", "passed", "results"],
        "properties": {
            "command": {"const": "verify"},
            "suite": {"enum": ["roundtrip", "theorem3", "limits", "vieta", "all"]},
            "passed": {"type": "boolean"},
            "results": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["name", "suite", "passed", "seconds", "details"],
                    "properties": {
                        "name": {"type": "string"},
                        "suite": {"type": "string"},
                        "passed": {"type": "boolean"},
                        "seconds": {"type": "number"},
                        "details": {"type": "object"},
                    },
                },
            },
        },
    },
    "error": ERROR,
}
