"""Python front end for the srtrace engines."""

import json

from . import _core
from ._core import (
    ENGINE_VERSION,
    REPORT_SCHEMA,
    ParseError,
    PreconditionError,
    VoidComplexError,
    corpus_names,
    count_complexes,
    reduced_betti,
    trace_class,
)

__all__ = [
    "ENGINE_VERSION",
    "REPORT_SCHEMA",
    "ParseError",
    "PreconditionError",
    "VoidComplexError",
    "classify",
    "corpus",
    "corpus_names",
    "count_complexes",
    "homology",
    "reduced_betti",
    "sweep",
    "trace",
    "trace_class",
]


def corpus(name):
    """(ground size, 1-indexed facets) of a named corpus complex."""
    return _core.corpus_facets(name)


def classify(n, facets, fields=("q",), oracle=False, id="python"):
    return json.loads(_core.classify_json(n, list(facets), list(fields), oracle, id))


def homology(n, facets, fields=("q",)):
    return json.loads(_core.homology_json(n, list(facets), list(fields)))


def trace(n, facets, field="q"):
    return json.loads(_core.trace_json(n, list(facets), field))


def sweep(max_n, fields=("gf:2", "gf:3", "q"), oracle=True):
    return json.loads(_core.sweep_json(max_n, list(fields), oracle))
