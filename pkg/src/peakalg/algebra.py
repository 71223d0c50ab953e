"""Sparse exact linear algebra over the group algebras QS_n, QB_n, QD_n.

Elements are stored as dictionaries from one-line signed permutations to
exact rational coefficients (Python ints and fractions.Fraction mix
freely; zero coefficients are never stored).  No floating point is used
anywhere.

Span and membership questions are answered by exact sparse Gaussian
elimination with a fixed pivot rule: the pivot of a reduced vector is its
lexicographically least support key, and candidate vectors are processed
in the order given.  This makes every coordinate vector reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .perms import GROUPS, Perm, compose, identity, in_group


class NotInSpan:
    """Falsy sentinel returned by express_in_span for non-members."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self):
        return False

    def __repr__(self):
        return "NotInSpan"


NOT_IN_SPAN = NotInSpan()


class AlgElem:
    """A finitely supported rational linear combination of group elements
    of one fixed group and rank."""

    __slots__ = ("group", "n", "terms")

    def __init__(self, group: str, n: int, terms=None, *, validate: bool = True):
        if group not in GROUPS:
            raise ValueError(f"unknown group {group!r}")
        self.group = group
        self.n = n
        clean = {}
        for w, c in dict(terms or {}).items():
            if c == 0:
                continue
            w = tuple(w)
            if validate and not (len(w) == n and in_group(w, group)):
                raise ValueError(f"{w} is not in {group}_{n}")
            clean[w] = c
        self.terms = clean

    @classmethod
    def _raw(cls, group: str, n: int, terms: dict) -> "AlgElem":
        """Construct without validation; terms must already be clean."""
        self = object.__new__(cls)
        self.group = group
        self.n = n
        self.terms = terms
        return self

    @classmethod
    def zero(cls, group: str, n: int) -> "AlgElem":
        return cls._raw(group, n, {})

    @classmethod
    def unit(cls, group: str, n: int) -> "AlgElem":
        return cls._raw(group, n, {identity(n): 1})

    @classmethod
    def monomial(cls, group: str, n: int, w: Perm, coeff=1) -> "AlgElem":
        return cls(group, n, {tuple(w): coeff})

    @classmethod
    def class_sum(cls, group: str, n: int, elems) -> "AlgElem":
        return cls._raw(group, n, {tuple(w): 1 for w in elems})

    # -- ring/vector structure ------------------------------------------

    def _same_frame(self, other: "AlgElem"):
        if (self.group, self.n) != (other.group, other.n):
            raise ValueError(
                f"mixed ambient groups: {self.group}_{self.n} vs {other.group}_{other.n}"
            )

    def __add__(self, other: "AlgElem") -> "AlgElem":
        self._same_frame(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s == 0:
                out.pop(w, None)
            else:
                out[w] = s
        return AlgElem._raw(self.group, self.n, out)

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        return self + (-other)

    def __neg__(self) -> "AlgElem":
        return AlgElem._raw(self.group, self.n, {w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "AlgElem":
        if c == 0:
            return AlgElem.zero(self.group, self.n)
        return AlgElem._raw(self.group, self.n, {w: c * x for w, x in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, AlgElem):
            return internal_product(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgElem)
            and (self.group, self.n) == (other.group, other.n)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.group, self.n, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def support(self):
        return self.terms.keys()

    def coeff(self, w: Perm):
        return self.terms.get(tuple(w), 0)

    def map_support(self, f, *, group=None, n=None) -> "AlgElem":
        """Linear pushforward along an element map; collisions accumulate."""
        out_group = group or self.group
        out_n = self.n if n is None else n
        out = {}
        for w, c in self.terms.items():
            fw = f(w)
            s = out.get(fw, 0) + c
            if s == 0:
                out.pop(fw, None)
            else:
                out[fw] = s
        for fw in out:
            if not (len(fw) == out_n and in_group(fw, out_group)):
                raise ValueError(f"image {fw} is not in {out_group}_{out_n}")
        return AlgElem._raw(out_group, out_n, out)

    def __repr__(self):
        if not self.terms:
            return f"AlgElem({self.group}_{self.n}: 0)"
        bits = []
        for w in sorted(self.terms):
            c = self.terms[w]
            word = ",".join(map(str, w)) if w else "()"
            bits.append(f"{c}*({word})")
        return f"AlgElem({self.group}_{self.n}: " + " + ".join(bits) + ")"


def linear_combine(pairs) -> AlgElem:
    """Sum of coeff * elem over (coeff, elem) pairs sharing one group."""
    pairs = list(pairs)
    if not pairs:
        raise ValueError("linear_combine of nothing: ambient group unknown")
    first = pairs[0][1]
    out = {}
    for c, elem in pairs:
        first._same_frame(elem)
        if c == 0:
            continue
        for w, x in elem.terms.items():
            s = out.get(w, 0) + c * x
            if s == 0:
                out.pop(w, None)
            else:
                out[w] = s
    return AlgElem._raw(first.group, first.n, out)


def internal_product(a: AlgElem, b: AlgElem) -> AlgElem:
    """Bilinear extension of the group product (convolution)."""
    a._same_frame(b)
    out = {}
    # convolve the smaller support against the larger
    if len(a.terms) <= len(b.terms):
        for v, cv in b.terms.items():
            for w, cw in a.terms.items():
                key = compose(w, v)
                s = out.get(key, 0) + cw * cv
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
    else:
        for w, cw in a.terms.items():
            for v, cv in b.terms.items():
                key = compose(w, v)
                s = out.get(key, 0) + cw * cv
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
    return AlgElem._raw(a.group, a.n, out)


def push_forward(f, a: AlgElem, *, group: str | None = None, n: int | None = None) -> AlgElem:
    """Apply the linear extension of an element map w -> f(w)."""
    return a.map_support(f, group=group, n=n)


# ---------------------------------------------------------------------------
# spans


@dataclass(frozen=True)
class CoordVector:
    """Exact coordinates of a vector against an ordered list of basis
    labels (one Fraction-compatible number per label)."""

    labels: tuple
    coords: tuple

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def nonzero(self):
        return {lab: c for lab, c in zip(self.labels, self.coords) if c != 0}


class SpanSolver:
    """Incremental echelon form of a list of AlgElems, with bookkeeping to
    express members of the span in the original list."""

    def __init__(self, basis, labels=None):
        basis = list(basis)
        if labels is None:
            labels = tuple(range(len(basis)))
        self.labels = tuple(labels)
        if basis:
            frame = (basis[0].group, basis[0].n)
            for b in basis:
                if (b.group, b.n) != frame:
                    raise ValueError("mixed ambient groups in span")
        self.size = len(basis)
        self.pivots = []  # (pivot key, reduced vector, combination over basis)
        for idx, b in enumerate(basis):
            vec = dict(b.terms)
            combo = {idx: Fraction(1)}
            self._reduce(vec, combo)
            if vec:
                self._install(vec, combo)

    def _reduce(self, vec: dict, combo: dict):
        for key, pvec, pcombo in self.pivots:
            c = vec.get(key)
            if not c:
                continue
            for w, x in pvec.items():
                s = vec.get(w, 0) - c * x
                if s == 0:
                    vec.pop(w, None)
                else:
                    vec[w] = s
            for i, x in pcombo.items():
                s = combo.get(i, 0) - c * x
                if s == 0:
                    combo.pop(i, None)
                else:
                    combo[i] = s

    def _install(self, vec: dict, combo: dict):
        key = min(vec)
        inv = Fraction(1) / Fraction(vec[key])
        vec = {w: inv * c for w, c in vec.items()}
        combo = {i: inv * c for i, c in combo.items()}
        self.pivots.append((key, vec, combo))

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def coords(self, target: AlgElem):
        """CoordVector of target over the original basis, or NOT_IN_SPAN."""
        vec = dict(target.terms)
        combo: dict = {}
        self._reduce(vec, combo)
        if vec:
            return NOT_IN_SPAN
        out = [Fraction(0)] * self.size
        for i, c in combo.items():
            out[i] = -c
        return CoordVector(self.labels, tuple(out))

    def contains(self, target: AlgElem) -> bool:
        return self.coords(target) is not NOT_IN_SPAN


def express_in_span(target: AlgElem, basis, labels=None):
    """Solve target = sum of coords * basis exactly over the rationals.
    Returns a CoordVector, or the NOT_IN_SPAN sentinel."""
    return SpanSolver(basis, labels).coords(target)


def span_rank(elems) -> int:
    elems = list(elems)
    if not elems:
        return 0
    return SpanSolver(elems).rank


def spans_match(first, second) -> bool:
    """Exact equality of two spans (mutual containment by rank)."""
    first, second = list(first), list(second)
    r1 = span_rank(first)
    r2 = span_rank(second)
    return r1 == r2 == span_rank(first + second)


def exact_det(rows) -> Fraction:
    """Determinant of a square matrix of rationals, by exact elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    size = len(m)
    if any(len(row) != size for row in m):
        raise ValueError("matrix is not square")
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, size):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


# ---------------------------------------------------------------------------
# serialization

def coeff_to_str(c) -> str:
    return str(Fraction(c))


def coeff_from_str(s: str):
    frac = Fraction(s)
    return int(frac) if frac.denominator == 1 else frac


def elem_to_json(a: AlgElem) -> dict:
    return {
        "group": a.group,
        "n": a.n,
        "terms": [
            {"perm": list(w), "coeff": coeff_to_str(a.terms[w])}
            for w in sorted(a.terms)
        ],
    }


def elem_from_json(data) -> AlgElem:
    if isinstance(data, str):
        data = json.loads(data)
    terms = {}
    for item in data["terms"]:
        w = tuple(item["perm"])
        if w in terms:
            raise ValueError(f"duplicate term {w}")
        terms[w] = coeff_from_str(item["coeff"])
    return AlgElem(data["group"], int(data["n"]), terms)


def elem_to_json_str(a: AlgElem) -> str:
    return json.dumps(elem_to_json(a), separators=(",", ":"))
