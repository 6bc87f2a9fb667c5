"""Built-in named monoids.

``T``  trivial monoid
``M``  two-element idempotent monoid {0, 1} with 1+1 = 1
``G``  two-element group
``Z3`` cyclic group of order 3
``Z4`` cyclic group of order 4
``K4`` Klein four-group, encoded as G x G
"""

from .errors import UnknownName
from .monoid import make_monoid


def _cyclic(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


_TABLES = {
    "T": [[0]],
    "M": [[0, 1], [1, 1]],
    "G": [[0, 1], [1, 0]],
    "Z3": _cyclic(3),
    "Z4": _cyclic(4),
    "K4": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
}

BUILTIN = {name: make_monoid(t, name=name) for name, t in _TABLES.items()}

T, M, G, Z3, Z4, K4 = (BUILTIN[k] for k in ("T", "M", "G", "Z3", "Z4", "K4"))
GROUPS_UP_TO_4 = (T, G, Z3, Z4, K4)


class Registry:
    """Name -> monoid lookup, seeded with the built-ins."""

    def __init__(self, extra=None):
        self._by_name = dict(BUILTIN)
        for name, mon in (extra or {}).items():
            self.add(name, mon)

    def add(self, name, mon):
        self._by_name[name] = make_monoid(mon.table, mon.labels, name=name)

    def get(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownName(f"unknown monoid name {name!r}", name=name,
                              known=sorted(self._by_name)) from None

    def __contains__(self, name):
        return name in self._by_name

    def names(self):
        return sorted(self._by_name)

    def name_of(self, mon):
        """Registry name whose table equals ``mon``'s, preferring its own name."""
        if mon.name in self._by_name and self._by_name[mon.name] == mon:
            return mon.name
        for name in sorted(self._by_name):
            if self._by_name[name] == mon:
                return name
        return None


DEFAULT = Registry()
