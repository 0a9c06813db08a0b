"""Exact cohomology engine for modules over cyclic p-groups.

Thin wrapper over the C++ core. Matrices are lists of rows of Python ints;
they cross the boundary as decimal strings so nothing ever overflows.
"""

import json as _json

from ._ztower import (
    analyze as _analyze,
    cyclotomic_chi_closed_form,
    dual_euler_char as _dual_euler_char,
    generate_spec as _generate_spec,
    kernel_rank as _kernel_rank,
    oracle_cross_check as _oracle_cross_check,
    rank_sequence as _rank_sequence,
    snf_divisors as _snf_divisors,
    tate_orders as _tate_orders,
)

__all__ = [
    "analyze",
    "cyclotomic_chi_closed_form",
    "dual_euler_char",
    "generate_spec",
    "kernel_rank",
    "oracle_cross_check",
    "rank_sequence",
    "snf_divisors",
    "tate_orders",
]


def _rows_to_strings(matrix):
    return [[str(int(x)) for x in row] for row in matrix]


def snf_divisors(matrix):
    """Smith normal form divisors of an integer matrix, as Python ints."""
    return [int(d) for d in _snf_divisors(_rows_to_strings(matrix))]


def kernel_rank(matrix):
    return _kernel_rank(_rows_to_strings(matrix))


def generate_spec(seed, p, n, **kwargs):
    """Seed-deterministic module spec, returned as a dict."""
    return _json.loads(_generate_spec(seed, p, n, **kwargs))


def analyze(spec):
    """Full analysis of a module spec (dict in, dict out)."""
    return _json.loads(_analyze(_json.dumps(spec)))


def tate_orders(spec, i):
    """(v1, v2, chi) for the subgroup N_i acting on the module of `spec`."""
    return _tate_orders(_json.dumps(spec), i)


def rank_sequence(spec):
    return _rank_sequence(_json.dumps(spec))


def dual_euler_char(spec, i, k_cap=64):
    return _dual_euler_char(_json.dumps(spec), i, k_cap)


def oracle_cross_check(spec, rank_cap=8):
    """True when the brute-force oracle agrees with the main pipeline."""
    return _oracle_cross_check(_json.dumps(spec), rank_cap)
