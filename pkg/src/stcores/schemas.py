"""JSON Schemas for every ``--format json`` output of the CLI.

All integers are emitted as decimal strings so that arbitrarily large
values survive any JSON parser.  ``verify`` prints JSON Lines: one CHECK
object per line.
"""

INTEGER = {"type": "string", "pattern": "^-?[0-9]+$"}
RATIONAL = {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"}
PARTITION = {"type": "string", "pattern": "^(-|[1-9][0-9]*(,[1-9][0-9]*)*)$"}

STATS = {
    "type": "object",
    "required": ["s", "t", "count", "sum_sizes", "max_size", "average"],
    "properties": {
        "s": INTEGER,
        "t": INTEGER,
        "count": INTEGER,
        "sum_sizes": INTEGER,
        "max_size": INTEGER,
        "average": {
            "type": "object",
            "required": ["numerator", "denominator"],
            "properties": {"numerator": INTEGER, "denominator": INTEGER},
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}

CORE_ROW = {
    "type": "object",
    "required": ["ideal", "partition", "size"],
    "properties": {
        "ideal": {"type": "array", "items": INTEGER},
        "partition": PARTITION,
        "size": INTEGER,
    },
    "additionalProperties": False,
}

LISTING = {
    "type": "object",
    "required": ["s", "t", "cores", "stats"],
    "properties": {
        "s": INTEGER,
        "t": INTEGER,
        "cores": {"type": "array", "items": CORE_ROW},
        "stats": STATS,
    },
    "additionalProperties": False,
}

CHECK = {
    "type": "object",
    "required": ["claim", "params", "lhs", "rhs", "equal"],
    "properties": {
        "claim": {"type": "string"},
        "params": {"type": "object", "additionalProperties": INTEGER},
        "lhs": RATIONAL,
        "rhs": RATIONAL,
        "equal": {"type": "boolean"},
    },
    "additionalProperties": False,
}

BIJECTION = {
    "type": "object",
    "required": ["s", "t", "ideal", "partition", "size"],
    "properties": {
        "s": INTEGER,
        "t": INTEGER,
        "ideal": {"type": "array", "items": INTEGER},
        "partition": PARTITION,
        "size": INTEGER,
    },
    "additionalProperties": False,
}

POSET = {
    "type": "object",
    "required": ["s", "t", "gaps", "covers"],
    "properties": {
        "s": INTEGER,
        "t": INTEGER,
        "gaps": {"type": "array", "items": INTEGER},
        "covers": {"type": "object", "additionalProperties": {"type": "array", "items": INTEGER}},
    },
    "additionalProperties": False,
}

YOUNG = {
    "type": "object",
    "required": ["partition", "size", "hooks"],
    "properties": {
        "partition": PARTITION,
        "size": INTEGER,
        "hooks": {"type": "array", "items": {"type": "array", "items": INTEGER}},
    },
    "additionalProperties": False,
}
