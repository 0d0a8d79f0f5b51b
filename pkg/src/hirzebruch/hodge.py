"""Virtual Hodge number tables.

A ``HodgeDiamond`` is a finitely supported integer table h(p, q), standing
for a class in the Grothendieck group of (graded polarizable) mixed Hodge
structures: h(p, q) is the virtual dimension of the (p, q) graded piece.
Only these graded dimensions are modeled; actual filtrations, morphisms and
polarizations never enter any formula computed here.

The two genera attached to a table are the E-polynomial (in u, v, seeing
both gradings) and chi_y (in y, seeing only the first grading).  Both are
ring homomorphisms for the tensor product.
"""

from __future__ import annotations

from .errors import InvalidParameter
from .rings import LaurentY, PolyUV


class HodgeDiamond:
    """Finitely supported map (p, q) -> integer, optionally flagged pure.

    When ``pure_weight`` is set to n, entries are required to sit on the
    anti-diagonal p + q = n and to satisfy the symmetry h(p, q) = h(q, p).
    """

    __slots__ = ("_h", "pure_weight")

    def __init__(self, entries=None, pure_weight=None):
        h = {}
        if entries:
            for (p, q), v in entries.items():
                v = int(v)
                if v:
                    h[(int(p), int(q))] = v
        if pure_weight is not None:
            for (p, q), v in h.items():
                if p + q != pure_weight:
                    raise InvalidParameter(
                        f"entry at ({p},{q}) violates pure weight {pure_weight}"
                    )
                if h.get((q, p)) != v:
                    raise InvalidParameter(
                        f"pure table is not symmetric at ({p},{q})"
                    )
        self._h = h
        self.pure_weight = pure_weight

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def point(cls):
        return cls.tate(0)

    @classmethod
    def tate(cls, n):
        """The rank-one class of type (-n, -n) (weight -2n)."""
        return cls({(-n, -n): 1}, pure_weight=-2 * n)

    @classmethod
    def from_triples(cls, triples, pure_weight=None):
        entries = {}
        for p, q, v in triples:
            entries[(p, q)] = entries.get((p, q), 0) + v
        return cls(entries, pure_weight=pure_weight)

    # -- basic structure ---------------------------------------------------

    def entries(self):
        """Nonzero entries as ((p, q), h) sorted lexicographically."""
        return sorted(self._h.items())

    def triples(self):
        """Entries as [p, q, h] lists (the text/JSON interchange form)."""
        return [[p, q, v] for (p, q), v in self.entries()]

    def to_json(self):
        import json

        return json.dumps(self.triples())

    def entry(self, p, q):
        return self._h.get((p, q), 0)

    def total_dimension(self):
        """Sum of all entries; equals chi_y evaluated at y = -1."""
        return sum(self._h.values())

    def is_zero(self):
        return not self._h

    def __bool__(self):
        return bool(self._h)

    def __eq__(self, other):
        if not isinstance(other, HodgeDiamond):
            return NotImplemented
        return self._h == other._h

    def __hash__(self):
        return hash(tuple(sorted(self._h.items())))

    # -- group and ring operations ------------------------------------------

    def __add__(self, other):
        if not isinstance(other, HodgeDiamond):
            return NotImplemented
        h = dict(self._h)
        for k, v in other._h.items():
            w = h.get(k, 0) + v
            if w:
                h[k] = w
            else:
                h.pop(k, None)
        out = HodgeDiamond()
        out._h = h
        out.pure_weight = self.pure_weight if self.pure_weight == other.pure_weight else None
        return out

    def __neg__(self):
        out = HodgeDiamond()
        out._h = {k: -v for k, v in self._h.items()}
        out.pure_weight = self.pure_weight
        return out

    def __sub__(self, other):
        if not isinstance(other, HodgeDiamond):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            out = HodgeDiamond()
            out._h = {} if other == 0 else {k: other * v for k, v in self._h.items()}
            out.pure_weight = self.pure_weight
            return out
        if isinstance(other, HodgeDiamond):
            return self.tensor(other)
        return NotImplemented

    __rmul__ = __mul__

    def tensor(self, other):
        """Tensor product: convolution of tables, weights add."""
        h = {}
        for (p1, q1), v1 in self._h.items():
            for (p2, q2), v2 in other._h.items():
                k = (p1 + p2, q1 + q2)
                w = h.get(k, 0) + v1 * v2
                if w:
                    h[k] = w
                else:
                    h.pop(k, None)
        out = HodgeDiamond()
        out._h = h
        if self.pure_weight is not None and other.pure_weight is not None:
            out.pure_weight = self.pure_weight + other.pure_weight
        else:
            out.pure_weight = None
        return out

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise InvalidParameter("negative tensor power")
        out = HodgeDiamond.point()
        for _ in range(n):
            out = out.tensor(self)
        return out

    def dual(self):
        """h'(p, q) = h(-p, -q); inverts the weight."""
        out = HodgeDiamond()
        out._h = {(-p, -q): v for (p, q), v in self._h.items()}
        out.pure_weight = None if self.pure_weight is None else -self.pure_weight
        return out

    def tate_twist(self, n):
        """Tensor with the rank-one type (-n, -n) class: shift by (-n, -n)."""
        out = HodgeDiamond()
        out._h = {(p - n, q - n): v for (p, q), v in self._h.items()}
        out.pure_weight = None if self.pure_weight is None else self.pure_weight - 2 * n
        return out

    # -- genera --------------------------------------------------------------

    def e_polynomial(self):
        """E = sum of h(p, q) u^p v^q."""
        return PolyUV({(p, q): v for (p, q), v in self._h.items()})

    def chi_y(self):
        """chi_y = sum over p of (sum over q of h(p, q)) (-y)^p."""
        cols = {}
        for (p, _q), v in self._h.items():
            cols[p] = cols.get(p, 0) + v
        return LaurentY({p: (v if p % 2 == 0 else -v) for p, v in cols.items()})

    # -- rendering -------------------------------------------------------------

    def __str__(self):
        if not self._h:
            return "0"
        return " + ".join(
            f"{v}@({p},{q})" for (p, q), v in self.entries()
        ).replace("+ -", "- ")

    def __repr__(self):
        return f"HodgeDiamond({dict(self.entries())!r})"
