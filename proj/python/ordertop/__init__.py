"""Finite ordered spaces, topologies and lattices."""

import json as _json

from . import _core
from ._core import OrdertopError, __version__, fixture_names, predicate_tags, suite_faults, suite_ids

OrdertopError.code = property(lambda self: self.args[0])
OrdertopError.witness = property(lambda self: list(self.args[1]))


def _text(record):
    return record if isinstance(record, str) else _json.dumps(record)


def encode(record):
    return _core.encode(_text(record))


def kind_of(record):
    return _core.kind_of(_text(record))


def check(tag, record):
    return _core.check(tag, _text(record))


def derive(op, record):
    return _json.loads(_core.derive(op, _text(record)))


def invariants(record):
    return _json.loads(_core.invariants(_text(record)))


def run_suite(suite, n, seed=None, samples=1000, workers=1, fault="", allow_large=False):
    return _json.loads(_core.run_suite(suite, n, seed, samples, workers, fault, allow_large))


def evaluate_instance(suite, instance, fault=""):
    return _json.loads(_core.evaluate_instance(suite, _text(instance), fault))


def hunt(refute, assume=(), kind="ordered-space", n=3, allow_large=False):
    return _json.loads(_core.hunt(list(assume), refute, kind, n, allow_large))


def fixture(name):
    return _json.loads(_core.fixture(name))
