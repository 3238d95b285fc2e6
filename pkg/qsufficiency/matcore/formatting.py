"""Matrix and report serialization."""

import json
import re

import numpy as np

FLOAT_MARKER = "@@float:%s@@"
FLOAT_MARKER_REGEX = re.compile(r'"@@float:([^@]+)@@"')


def matrix_to_json(matrix):
    """Return a complex matrix as row-major nested lists of [re, im]."""
    matrix = np.asarray(matrix, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in matrix]


def matrix_from_json(data, name="matrix"):
    """Parse nested lists of [re, im] pairs (or plain reals) into an array."""
    try:
        rows = [
            [
                complex(entry[0], entry[1])
                if isinstance(entry, (list, tuple))
                else complex(entry)
                for entry in row
            ]
            for row in data
        ]
        matrix = np.array(rows, dtype=complex)
    except (TypeError, ValueError, IndexError) as err:
        raise ValueError("%s is not a valid matrix: %s" % (name, err))
    if matrix.ndim != 2:
        raise ValueError("%s should be a list of rows of equal length" % name)
    return matrix


def format_float(value, significant_digits=17):
    """Return a float as a JSON number string with fixed significant digits.

    Non-finite values are returned as the JSON strings "nan", "inf", "-inf".
    """
    value = float(value)
    if not np.isfinite(value):
        return json.dumps(str(value))
    text = "%.*g" % (significant_digits, value)
    if ("e" not in text) and ("." not in text):
        text += ".0"
    return text


def _mark_floats(data):
    if isinstance(data, dict):
        return {str(k): _mark_floats(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [_mark_floats(v) for v in data]
    if isinstance(data, (bool, np.bool_)):
        return bool(data)
    if isinstance(data, (int, np.integer)):
        return int(data)
    if isinstance(data, (float, np.floating)):
        if not np.isfinite(data):
            return str(float(data))
        return FLOAT_MARKER % format_float(data)
    if isinstance(data, np.ndarray):
        return _mark_floats(data.tolist())
    return data


def to_canonical_json(data, indent=2):
    """Return a deterministic JSON string: sorted keys, floats with 17
    significant digits, numpy scalars and arrays converted."""
    text = json.dumps(_mark_floats(data), sort_keys=True, indent=indent)
    return FLOAT_MARKER_REGEX.sub(lambda match: match.group(1), text)


def score_to_formatted_string(score, characters=9):
    """Transform a residual into a short string (int, float, or engineering
    format, whichever is shortest), left-padded to ``characters``."""
    if not np.isfinite(score):
        return str(score).rjust(characters)
    raw = str(int(score) if (int(score) == score) else score)
    as_float = "%.02f" % score
    as_eng = "%.02E" % score
    return min([raw, as_float, as_eng], key=len).rjust(characters)
