"""Exact universality types for sequences of points, lines and k-flats.

Thin wrapper over the C++ core. Rationals cross the boundary as "p/q"
strings; heavier payloads (matrices, constructed sequences, census results)
cross as canonical JSON and are decoded here.
"""

import json

from seqtype._core import (  # noqa: F401
    GeneralPositionError,
    GuardrailError,
    VerificationError,
    det,
    det_A,
    elem_symmetric,
    enumerate_stacked,
    homogeneous_sign,
    hyperboloid_line,
    is_two_sided_stacked,
    moment,
    moment_star,
    orientation_sign,
    radon_partition,
    rational_str,
    secondary_vandermonde,
    sequence_type,
    stacked_permutation,
    tuple_type,
    unoriented_tuple_type,
    flats_tuple_type,
    vandermonde,
)

from seqtype import _core


def build_ri(D, m, epsilon, max_entry_bits=10_000_000):
    """Build an exact-inductive RI matrix; entries come back as strings."""
    return json.loads(_core.build_ri_json(D, m, epsilon, max_entry_bits))


def verify_ri(matrix, epsilon=""):
    """Check RI conditions on a matrix dict produced by build_ri."""
    return json.loads(_core.verify_ri_json(json.dumps(matrix), epsilon))


def construct(d, n, spec, mode="tuned", margin=8):
    """Build a verified universal line sequence realizing a stacked spec."""
    raw = _core.construct_json(d, n, spec, mode, margin)
    return {
        "lines": json.loads(raw["lines"]),
        "manifest": json.loads(raw["manifest"]),
    }


def classify_lines(line_file):
    """Sequence type of a line-file dict, or None when not homogeneous."""
    return _core.classify_lines_json(json.dumps(line_file))


def census(object_class, d, N, n, trials, k=1, seed=1, bound=10, jobs=1):
    """Random homogeneous-subsequence census; deterministic per seed."""
    return json.loads(
        _core.census_json(object_class, d, k, N, n, trials, seed, bound, jobs)
    )


__all__ = [
    "GeneralPositionError",
    "GuardrailError",
    "VerificationError",
    "build_ri",
    "census",
    "classify_lines",
    "construct",
    "det",
    "det_A",
    "elem_symmetric",
    "enumerate_stacked",
    "flats_tuple_type",
    "homogeneous_sign",
    "hyperboloid_line",
    "is_two_sided_stacked",
    "moment",
    "moment_star",
    "orientation_sign",
    "radon_partition",
    "rational_str",
    "secondary_vandermonde",
    "sequence_type",
    "stacked_permutation",
    "tuple_type",
    "unoriented_tuple_type",
    "vandermonde",
    "verify_ri",
]
