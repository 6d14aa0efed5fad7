"""Scoped tallies of complex multiplications performed by the numerical kernels.

Every complex-by-complex product in the transforms and correlation kernels
goes through :func:`cmul`, which adds the number of elementwise products to
the active :class:`OpCounter`. One complex multiplication is booked as four
real ones. Scaling by a real constant (the ``1/N`` of the inverse DFT) and
precomputed twiddle/chirp tables are not tallied.

Counting is strictly single-threaded: a scope belongs to the thread that
opened it, and a tally arriving from any other thread while a scope is open
raises :class:`CountingError`.
"""
from __future__ import annotations

import threading
from collections import defaultdict
from contextlib import contextmanager
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "OpCounter",
    "CountingError",
    "counting",
    "counting_scope",
    "stage",
    "suspended",
    "cmul",
    "is_counting",
]

REAL_PER_COMPLEX = 4


class CountingError(RuntimeError):
    """Misuse of a counting scope (nesting or cross-thread tallies)."""


@dataclass
class OpCounter:
    complex_multiplications: int = 0
    real_multiplications: int = 0
    by_stage: dict[str, int] = field(default_factory=lambda: defaultdict(int))

    def add_complex(self, n: int, stage_name: str | None = None) -> None:
        self.complex_multiplications += n
        self.real_multiplications += REAL_PER_COMPLEX * n
        if stage_name is not None:
            self.by_stage[stage_name] += n

    def stage_real(self, name: str) -> int:
        """Real multiplications booked under stage `name`."""
        return REAL_PER_COMPLEX * self.by_stage.get(name, 0)


class _State:
    lock = threading.Lock()
    counter: OpCounter | None = None
    owner: int | None = None
    stages: list[str] = []
    suspended: int = 0


@contextmanager
def counting():
    """Open a counting scope and yield its :class:`OpCounter`."""
    with _State.lock:
        if _State.counter is not None:
            raise CountingError("counting scopes cannot be nested or run concurrently")
        counter = OpCounter()
        _State.counter = counter
        _State.owner = threading.get_ident()
        _State.stages = []
        _State.suspended = 0
    try:
        yield counter
    finally:
        with _State.lock:
            _State.counter = None
            _State.owner = None
            _State.stages = []
            _State.suspended = 0


def counting_scope(fn, *args, **kwargs):
    """Run ``fn(*args, **kwargs)`` inside a counting scope.

    Returns
    -------
    (result, OpCounter)
    """
    with counting() as counter:
        result = fn(*args, **kwargs)
    return result, counter


def is_counting() -> bool:
    return _State.counter is not None


@contextmanager
def stage(name: str):
    """Label tallies made inside the block with `name` (innermost wins)."""
    if _State.counter is None or _State.owner != threading.get_ident():
        yield
        return
    _State.stages.append(name)
    try:
        yield
    finally:
        _State.stages.pop()


@contextmanager
def suspended():
    """Stop tallying inside the block, e.g. while building lookup tables."""
    if _State.counter is None or _State.owner != threading.get_ident():
        yield
        return
    _State.suspended += 1
    try:
        yield
    finally:
        _State.suspended -= 1


def tally(n: int) -> None:
    counter = _State.counter
    if counter is None:
        return
    if _State.owner != threading.get_ident():
        raise CountingError("complex multiplication from a second thread inside a counting scope")
    if _State.suspended:
        return
    counter.add_complex(int(n), _State.stages[-1] if _State.stages else None)


def cmul(a, b):
    """Elementwise complex product ``a * b``, tallied when counting."""
    out = np.multiply(a, b)
    if _State.counter is not None:
        tally(np.size(out))
    return out
