"""Instances, overlaps and superstring results."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Sequence

from superstring.errors import (
    DuplicateString,
    EmptyInput,
    InstanceError,
    UnequalLengths,
)

if TYPE_CHECKING:
    from superstring.hierarchy import HierarchyTrace


@dataclass(frozen=True)
class Instance:
    """A set of ``n`` distinct byte strings, all of length ``r``."""

    strings: tuple[bytes, ...]
    r: int

    @property
    def n(self) -> int:
        return len(self.strings)

    def __len__(self) -> int:
        return len(self.strings)

    def __iter__(self):
        return iter(self.strings)


@dataclass(frozen=True)
class SuperstringSolution:
    text: bytes
    algorithm: str
    n: int
    r: int
    trace: HierarchyTrace | None = field(default=None, compare=False, repr=False)

    @property
    def length(self) -> int:
        return len(self.text)

    @property
    def compression(self) -> int:
        return self.r * self.n - len(self.text)


def _failure_function(pattern: bytes) -> list[int]:
    fail = [0] * len(pattern)
    k = 0
    for i in range(1, len(pattern)):
        while k and pattern[i] != pattern[k]:
            k = fail[k - 1]
        if pattern[i] == pattern[k]:
            k += 1
        fail[i] = k
    return fail


def max_overlap(u: bytes, v: bytes) -> int:
    """Length of the longest suffix of ``u`` that is a prefix of ``v``.

    The result is capped at ``min(len(u), len(v)) - 1`` so that containment is
    never reported as an overlap. Runs in ``O(len(u) + len(v))`` by streaming
    ``u`` through the KMP automaton of ``v``.
    """
    cap = min(len(u), len(v)) - 1
    if cap <= 0:
        return 0
    fail = _failure_function(v)
    # only the last len(v) bytes of u can take part in an overlap
    state = 0
    for c in u[len(u) - min(len(u), len(v)):]:
        if state == len(v):
            state = fail[state - 1]
        while state and c != v[state]:
            state = fail[state - 1]
        if c == v[state]:
            state += 1
    while state > cap:
        state = fail[state - 1]
    return state


def merge(u: bytes, v: bytes) -> bytes:
    return u + v[max_overlap(u, v):]


def validate_instance(raw: Sequence[bytes | str]) -> Instance:
    """Check that ``raw`` is a non-empty list of distinct equal-length strings."""
    if not raw:
        raise EmptyInput("instance is empty")
    strings = tuple(s.encode() if isinstance(s, str) else bytes(s) for s in raw)
    r = len(strings[0])
    if r == 0:
        raise EmptyInput("string 0 is empty", index=0)
    if r < 2:
        raise InstanceError("strings must have length >= 2", index=0)
    seen: dict[bytes, int] = {}
    for i, s in enumerate(strings):
        if len(s) != r:
            raise UnequalLengths(
                f"string {i} has length {len(s)}, expected {r}", index=i)
        if s in seen:
            raise DuplicateString(
                f"string {i} duplicates string {seen[s]}", index=i)
        seen[s] = i
    return Instance(strings=strings, r=r)


def is_superstring(text: bytes, strings: Iterable[bytes]) -> bool:
    return all(s in text for s in strings)


def naive_concat(inst: Instance) -> SuperstringSolution:
    return SuperstringSolution(b"".join(inst.strings), "naive", inst.n, inst.r)


def merge_in_order(strings: Sequence[bytes]) -> bytes:
    """Merge consecutive strings with their maximum overlap."""
    if not strings:
        return b""
    out = bytearray(strings[0])
    for prev, cur in zip(strings, strings[1:]):
        out += cur[max_overlap(prev, cur):]
    return bytes(out)
