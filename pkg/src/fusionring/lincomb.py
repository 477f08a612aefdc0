"""Finitely supported integer combinations of weights."""
from __future__ import annotations


class LinComb(dict):
    """``dict`` from weight tuples to nonzero integers.

    Zero coefficients are dropped on insertion, so two combinations are equal
    exactly when the dicts are equal.
    """

    def add(self, key, coeff: int = 1):
        if not coeff:
            return
        v = self.get(key, 0) + coeff
        if v:
            self[key] = v
        else:
            del self[key]

    def _meta(self) -> dict:
        return {}

    def _new(self):
        return type(self)(**self._meta())

    def copy(self):
        out = self._new()
        out.update(self)
        return out

    def __add__(self, other):
        out = self.copy()
        for k, v in other.items():
            out.add(k, v)
        return out

    def __sub__(self, other):
        out = self.copy()
        for k, v in other.items():
            out.add(k, -v)
        return out

    def __neg__(self):
        out = self._new()
        for k, v in self.items():
            out[k] = -v
        return out

    def scale(self, c: int):
        out = self._new()
        if c:
            for k, v in self.items():
                out[k] = c * v
        return out

    def sorted_items(self):
        return sorted(self.items())

    def __repr__(self):
        if not self:
            return f"{type(self).__name__}(0)"
        terms = " + ".join(f"{v}*[{','.join(map(str, k))}]" for k, v in self.sorted_items())
        return f"{type(self).__name__}({terms})"
