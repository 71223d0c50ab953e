"""Descent-class bases of the descent algebras of types A, B, D.

Y_J is the sum of the group elements with descent set exactly J; X_J sums
the elements with descent set contained in J.  Subsets are encoded by the
generator-label bitmasks of peakalg.perms, and are interchangeable with
(ordinary or pseudo) compositions through partial sums.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import NOT_IN_SPAN, AlgElem, SpanSolver
from .perms import (
    GROUP_OF_TYPE,
    GeneratorSet,
    _label_token,
    _valid_label_mask,
    descent_mask,
    group_elements,
)


@lru_cache(maxsize=None)
def descent_classes(ctype: str, n: int) -> dict:
    """Bitmask -> tuple of group elements with that descent set.  Every
    subset of the generators occurs as a key (possibly empty for no
    subset: descent classes partition the whole group)."""
    classes: dict = {m: [] for m in _all_masks(ctype, n)}
    for w in group_elements(GROUP_OF_TYPE[ctype], n):
        classes[descent_mask(w, ctype)].append(w)
    return {m: tuple(ws) for m, ws in classes.items()}


def _all_masks(ctype: str, n: int) -> tuple:
    full = _valid_label_mask(ctype, n)
    return tuple(m for m in range(full + 1) if m | full == full)


def _as_mask(ctype: str, n: int, J) -> int:
    if isinstance(J, GeneratorSet):
        if (J.ctype, J.n) != (ctype, n):
            raise ValueError(f"label {J} does not match type {ctype} rank {n}")
        return J.mask
    if isinstance(J, int):
        mask = J
    else:
        mask = 0
        for i in J:
            mask |= 1 << i
    if mask & ~_valid_label_mask(ctype, n):
        raise ValueError(f"subset {bin(mask)} invalid for type {ctype} rank {n}")
    return mask


def y_basis(ctype: str, n: int, J) -> AlgElem:
    """Y_J: sum over the descent class of J."""
    mask = _as_mask(ctype, n, J)
    group = GROUP_OF_TYPE[ctype]
    return AlgElem.class_sum(group, n, descent_classes(ctype, n)[mask])


def x_basis(ctype: str, n: int, J) -> AlgElem:
    """X_J: sum over elements whose descent set is contained in J."""
    mask = _as_mask(ctype, n, J)
    group = GROUP_OF_TYPE[ctype]
    classes = descent_classes(ctype, n)
    terms = {}
    for m, ws in classes.items():
        if m | mask == mask:
            for w in ws:
                terms[w] = 1
    return AlgElem._raw(group, n, terms)


def y_label_elements(ctype: str, n: int) -> list:
    """Ordered (mask, Y_J) pairs, masks ascending."""
    group = GROUP_OF_TYPE[ctype]
    return [
        (m, AlgElem.class_sum(group, n, ws))
        for m, ws in sorted(descent_classes(ctype, n).items())
    ]


def x_label_elements(ctype: str, n: int) -> list:
    return [(m, x_basis(ctype, n, m)) for m in _all_masks(ctype, n)]


def descent_coordinates(a: AlgElem, ctype: str):
    """Coordinates of a in the Y-basis (mask -> coefficient), or None if a
    is not constant on some descent class, i.e. lies outside the descent
    algebra.  Exact, by direct class binning."""
    if a.group != GROUP_OF_TYPE[ctype]:
        raise ValueError(f"element of {a.group}_{a.n} has no type-{ctype} descents")
    classes = descent_classes(ctype, a.n)
    seen: dict = {}
    for w, c in a.terms.items():
        m = descent_mask(w, ctype)
        prev = seen.get(m)
        if prev is None:
            seen[m] = [c, 1]
        elif prev[0] == c:
            prev[1] += 1
        else:
            return None
    for m, (c, count) in seen.items():
        if count != len(classes[m]):
            return None
    return {m: c for m, (c, _) in seen.items()}


def from_descent_coordinates(ctype: str, n: int, coords: dict) -> AlgElem:
    group = GROUP_OF_TYPE[ctype]
    classes = descent_classes(ctype, n)
    terms = {}
    for m, c in coords.items():
        if c == 0:
            continue
        for w in classes[m]:
            terms[w] = c
    return AlgElem._raw(group, n, terms)


def x_to_y_coords(coords: dict) -> dict:
    """Rewrite X-label coordinates as Y-label coordinates."""
    out: dict = {}
    for jm, c in coords.items():
        if c == 0:
            continue
        sub = jm
        while True:  # iterate submasks of jm
            out[sub] = out.get(sub, 0) + c
            if sub == 0:
                break
            sub = (sub - 1) & jm
    return {m: c for m, c in out.items() if c != 0}


def y_to_x_coords(coords: dict) -> dict:
    """Inverse rewriting, via Y_J = sum over I<=J of (-1)^(#J-#I) X_I."""
    out: dict = {}
    for jm, c in coords.items():
        if c == 0:
            continue
        nj = bin(jm).count("1")
        sub = jm
        while True:
            sign = -1 if (nj - bin(sub).count("1")) % 2 else 1
            out[sub] = out.get(sub, 0) + sign * c
            if sub == 0:
                break
            sub = (sub - 1) & jm
    return {m: c for m, c in out.items() if c != 0}


def descent_span_rank(elems, ctype: str) -> int:
    """Rank of a family known to lie in the descent algebra, computed on
    exact Y-coordinates (raises if some element falls outside)."""
    rows = []
    for a in elems:
        coords = descent_coordinates(a, ctype)
        if coords is None:
            raise ValueError("element outside the descent algebra")
        rows.append(coords)
    return coord_rank(rows)


def coord_rank(rows) -> int:
    """Rank of sparse coordinate dictionaries over the rationals."""
    pivots = []  # (key, normalized row)
    rank = 0
    for row in rows:
        vec = {k: v for k, v in row.items() if v != 0}
        for key, pvec in pivots:
            c = vec.get(key)
            if not c:
                continue
            for k, x in pvec.items():
                s = vec.get(k, 0) - c * x
                if s == 0:
                    vec.pop(k, None)
                else:
                    vec[k] = s
        if vec:
            key = min(vec)
            inv = Fraction(1) / Fraction(vec[key])
            pivots.append((key, {k: inv * v for k, v in vec.items()}))
            rank += 1
    return rank


# ---------------------------------------------------------------------------
# subset <-> composition codecs

def comp_to_subset(parts, n: int | None = None) -> frozenset:
    """(a_1,...,a_k) -> {a_1, a_1+a_2, ...}; ordinary parts are >= 1, a
    pseudo composition may lead with a_0 = 0 (putting 0 in the subset)."""
    parts = tuple(parts)
    if not parts:
        raise ValueError("empty composition")
    if parts[0] < 0 or any(p <= 0 for p in parts[1:]):
        raise ValueError(f"malformed composition {parts}")
    total = sum(parts)
    if n is not None and total != n:
        raise ValueError(f"composition {parts} does not sum to {n}")
    acc, out = 0, []
    for p in parts[:-1]:
        acc += p
        out.append(acc)
    if parts[0] == 0 and len(parts) == 1:
        raise ValueError("pseudo composition (0) of a positive total is malformed")
    return frozenset(out)


def subset_to_comp(J, n: int) -> tuple:
    """Subset of [n-1] -> ordinary composition of n."""
    ms = sorted(J)
    if any(not 1 <= j <= n - 1 for j in ms):
        raise ValueError(f"{J} is not a subset of [{n - 1}]")
    return _partial_sum_parts(ms, n)


def subset_to_pseudo_comp(J, n: int) -> tuple:
    """Subset of {0} u [n-1] -> pseudo composition of n (first part >= 0)."""
    ms = sorted(J)
    if any(not 0 <= j <= n - 1 for j in ms):
        raise ValueError(f"{J} is not a subset of {{0}} u [{n - 1}]")
    return _partial_sum_parts(ms, n)


def _partial_sum_parts(ms, n: int) -> tuple:
    prev = 0
    parts = []
    for m in ms:
        parts.append(m - prev)
        prev = m
    parts.append(n - prev)
    return tuple(parts)


def comp_complement(parts, n: int | None = None) -> tuple:
    """Complementary ordinary composition: complement the subset in [n-1]."""
    parts = tuple(parts)
    total = sum(parts)
    if n is not None and total != n:
        raise ValueError(f"composition {parts} does not sum to {n}")
    inside = comp_to_subset(parts)
    return subset_to_comp(set(range(1, total)) - inside, total)


def comp_refines(alpha, beta) -> bool:
    """alpha refines beta iff beta's subset is contained in alpha's."""
    if sum(alpha) != sum(beta):
        raise ValueError("compositions of different totals")
    return comp_to_subset(beta) <= comp_to_subset(alpha)


# ---------------------------------------------------------------------------
# structure constants

@dataclass
class StructureTable:
    """Multiplication table of a finite-dimensional algebra on an ordered
    spanning set: cell (i, j) holds the coordinates of basis_i * basis_j."""

    name: str
    labels: list
    cells: list  # cells[i][j] = tuple of coordinates, same order as labels
    blocks: tuple = field(default=())  # optional display partition of labels

    def cell(self, i: int, j: int) -> tuple:
        return self.cells[i][j]

    def to_csv(self) -> str:
        import csv
        import io

        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow([self.name] + list(self.labels))
        for lab, row in zip(self.labels, self.cells):
            writer.writerow([lab] + ["(" + ",".join(map(str, c)) + ")" for c in row])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "labels": list(self.labels),
            "cells": [[[str(Fraction(x)) for x in cell] for cell in row] for row in self.cells],
        }

    def pretty(self) -> str:
        cols = [self.name] + list(self.labels)
        rows = [cols]
        for lab, row in zip(self.labels, self.cells):
            rows.append([lab] + ["(" + ",".join(map(str, c)) + ")" for c in row])
        widths = [max(len(str(r[i])) for r in rows) for i in range(len(cols))]
        lines = []
        for r in rows:
            lines.append("  ".join(str(x).ljust(w) for x, w in zip(r, widths)))
        return "\n".join(lines)


def _normalize_coord(c):
    frac = Fraction(c)
    return int(frac) if frac.denominator == 1 else frac


def structure_constants(
    ctype: str, n: int, basis_kind: str = "Y", *, deep: bool = False
) -> StructureTable:
    """Full multiplication table of the descent algebra on the Y- or
    X-basis.  Raises if any product leaves the span: running this *is* the
    closure check for the descent algebra.  Exhaustive caps: type A up to
    rank 6, types B and D up to 4 (5 with deep=True)."""
    from .perms import CapExceeded

    cap = 6 if ctype == "A" else (5 if deep else 4)
    if n > cap:
        raise CapExceeded(
            f"structure constants for type {ctype} capped at rank {cap}"
        )
    if basis_kind == "Y":
        elems = y_label_elements(ctype, n)
    elif basis_kind == "X":
        elems = x_label_elements(ctype, n)
    else:
        raise ValueError(f"unknown basis kind {basis_kind!r}")
    labels = [_subset_text(ctype, m) for m, _ in elems]
    solver = SpanSolver([e for _, e in elems], labels=tuple(labels))
    cells = []
    for mi, yi in elems:
        row = []
        for mj, yj in elems:
            coords = solver.coords(yi * yj)
            if coords is NOT_IN_SPAN:
                raise ArithmeticError(
                    f"product {labels[_index_of(elems, mi)]} * "
                    f"{labels[_index_of(elems, mj)]} left the span: "
                    f"descent algebra closure fails"
                )
            row.append(tuple(_normalize_coord(c) for c in coords))
        cells.append(row)
    return StructureTable(name=f"Sigma({ctype}_{n})[{basis_kind}]", labels=labels, cells=cells)


def _index_of(elems, mask):
    for i, (m, _) in enumerate(elems):
        if m == mask:
            return i
    raise KeyError(mask)


def _subset_text(ctype: str, mask: int) -> str:
    toks = [_label_token(ctype, i) for i in range(mask.bit_length()) if (mask >> i) & 1]
    return "{" + ",".join(toks) + "}"


@lru_cache(maxsize=None)
def structure_cube(ctype: str, n: int) -> dict:
    """(mask_J, mask_K) -> Y-coordinates of Y_J * Y_K.  Computing the cube
    doubles as the closure check: the product must be constant on every
    descent class."""
    from .perms import compose

    classes = sorted(descent_classes(ctype, n).items())
    mask_of = {}
    for m, ws in classes:
        for w in ws:
            mask_of[w] = m
    sizes = {m: len(ws) for m, ws in classes}
    cube = {}
    for m1, c1 in classes:
        for m2, c2 in classes:
            counts: dict = {}
            for v in c2:
                for w in c1:
                    key = compose(w, v)
                    counts[key] = counts.get(key, 0) + 1
            out: dict = {}
            tally: dict = {}
            for w, c in counts.items():
                m = mask_of[w]
                if m in out:
                    if out[m] != c:
                        raise ArithmeticError(
                            f"Sigma({ctype}_{n}) closure fails at ({bin(m1)}, {bin(m2)})"
                        )
                    tally[m] += 1
                else:
                    out[m] = c
                    tally[m] = 1
            for m, seen in tally.items():
                if seen != sizes[m]:
                    raise ArithmeticError(
                        f"Sigma({ctype}_{n}) closure fails at ({bin(m1)}, {bin(m2)})"
                    )
            cube[(m1, m2)] = out
    return cube


def descent_coord_product(ctype: str, n: int, c1: dict, c2: dict) -> dict:
    """Product of two descent-algebra elements given by Y-coordinates."""
    cube = structure_cube(ctype, n)
    out: dict = {}
    for m1, a in c1.items():
        if a == 0:
            continue
        for m2, b in c2.items():
            if b == 0:
                continue
            ab = a * b
            for m, c in cube[(m1, m2)].items():
                s = out.get(m, 0) + ab * c
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
    return out


class CoordSpan:
    """Incremental rank tracking for sparse coordinate dictionaries."""

    def __init__(self):
        self.pivots = []

    def add(self, row: dict) -> bool:
        """Reduce row against the span; returns True if the rank grew."""
        vec = {k: v for k, v in row.items() if v != 0}
        for key, pvec in self.pivots:
            c = vec.get(key)
            if not c:
                continue
            for k, x in pvec.items():
                s = vec.get(k, 0) - c * x
                if s == 0:
                    vec.pop(k, None)
                else:
                    vec[k] = s
        if not vec:
            return False
        key = min(vec)
        inv = Fraction(1) / Fraction(vec[key])
        self.pivots.append((key, {k: inv * v for k, v in vec.items()}))
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)
