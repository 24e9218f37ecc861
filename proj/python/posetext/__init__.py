"""Finite posets: classification, isotone map extension and exhaustive checks.

Posets and maps are plain dicts in the same JSON layout the command-line tool reads.
"""

import json
import os

from . import _posetext
from ._posetext import PosetError

__all__ = ["PosetError", "classify", "normalise", "extend", "enumerate_extensions", "verify",
           "theorem_ids", "count_posets", "generate"]


def _dump(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def classify(poset):
    return json.loads(_posetext.classify(_dump(poset)))


def normalise(poset):
    return json.loads(_posetext.normalise(_dump(poset)))


def extend(mapping, mode="any", base_dir="."):
    """Total extension in the same shape as the input, or None when there is none."""
    out = _posetext.extend(_dump(mapping), mode, os.fspath(base_dir))
    return None if out is None else json.loads(out)


def enumerate_extensions(mapping, base_dir=".", cap=1_000_000):
    return json.loads(_posetext.enumerate(_dump(mapping), os.fspath(base_dir), cap))


def verify(theorem, max_size=None, cap=None):
    return json.loads(_posetext.verify(theorem, max_size, cap))


def theorem_ids():
    return list(_posetext.theorem_ids())


def count_posets(n, labeled=True):
    return _posetext.count_posets(n, labeled)


def generate(n, labeled=True):
    return [json.loads(doc) for doc in _posetext.generate(n, labeled)]
