"""Small immutable helpers shared across the package."""

from __future__ import annotations

from collections.abc import Mapping


class FrozenTable(Mapping):
    """A hashable mapping with deterministic iteration order."""

    __slots__ = ("_items", "_lookup", "_hash")

    def __init__(self, data=()):
        if isinstance(data, Mapping):
            items = tuple(sorted(data.items(), key=lambda kv: repr(kv[0])))
        else:
            items = tuple(sorted(data, key=lambda kv: repr(kv[0])))
        self._items = items
        self._lookup = dict(items)
        self._hash = None

    def __getitem__(self, key):
        return self._lookup[key]

    def __iter__(self):
        return iter(k for k, _ in self._items)

    def __len__(self):
        return len(self._items)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._items)
        return self._hash

    def __eq__(self, other):
        if isinstance(other, FrozenTable):
            return self._items == other._items
        if isinstance(other, Mapping):
            return dict(self._items) == dict(other)
        return NotImplemented

    def __repr__(self):
        inner = ", ".join(f"{k!r}: {v!r}" for k, v in self._items)
        return "{" + inner + "}"

    def set(self, key, value):
        d = dict(self._items)
        d[key] = value
        return FrozenTable(d)
