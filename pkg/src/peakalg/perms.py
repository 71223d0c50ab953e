"""Signed permutations and Coxeter combinatorics for types A, B and D.

A signed permutation of rank n is a tuple (w_1, ..., w_n) of nonzero
integers whose absolute values form a permutation of {1, ..., n}; negative
entries are "barred".  S_n sits inside B_n as the sign-free tuples and D_n
as the tuples with an even number of bars.  Values compare in ordinary
integer order, so ... < -2 < -1 < 1 < 2 < ...

Composition is (u * v)_i = sgn(v_i) * u_{|v_i|}, i.e. u after v, extended
to negative indices by w(-i) = -w(i).  With this convention the action of
permutations on tensor words (see peakalg.words) is a right action.

Groups are tagged "S", "B", "D"; descent statistics by Coxeter type "A",
"B", "D".  Generator labels are small integers: type A uses 1..n-1, type B
uses 0..n-1 (0 is the sign flip s_0), and type D uses 0..n-1 where label 0
stands for the fork generator 1' (rendered "1'" in text form; the shifted
position 1'+1 is position 2, the same as 1+1).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache

Perm = tuple  # tuple[int, ...], one-line signed permutation

GROUPS = ("S", "B", "D")
COXETER_TYPES = ("A", "B", "D")

#: group tag of the ambient group carrying each Coxeter type's descent algebra
GROUP_OF_TYPE = {"A": "S", "B": "B", "D": "D"}
TYPE_OF_GROUP = {"S": "A", "B": "B", "D": "D"}

_DEFAULT_ENUM_CAPS = {"S": 8, "B": 7, "D": 7}
_DEFAULT_BFS_CAP = 6


class CapExceeded(ValueError):
    """Requested rank is above the configured enumeration/BFS cap."""


def _parse_cap_env() -> dict:
    """PEAKALG_CAP is either a bare integer (all enumeration caps) or a
    comma list like "S=8,B=6,BFS=7"."""
    raw = os.environ.get("PEAKALG_CAP", "").strip()
    out = {}
    if not raw:
        return out
    if raw.isdigit():
        for g in GROUPS:
            out[g] = int(raw)
        return out
    for item in raw.split(","):
        key, _, val = item.partition("=")
        key = key.strip().upper()
        if key in (*GROUPS, "BFS") and val.strip().lstrip("-").isdigit():
            out[key] = int(val)
    return out


def enum_cap(group: str) -> int:
    return _parse_cap_env().get(group, _DEFAULT_ENUM_CAPS[group])


def bfs_cap() -> int:
    return _parse_cap_env().get("BFS", _DEFAULT_BFS_CAP)


# ---------------------------------------------------------------------------
# elements


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_signed_perm(values) -> bool:
    vals = tuple(values)
    return all(isinstance(v, int) and v != 0 for v in vals) and sorted(
        abs(v) for v in vals
    ) == list(range(1, len(vals) + 1))


def bar_count(w: Perm) -> int:
    return sum(1 for v in w if v < 0)


def in_group(w: Perm, group: str) -> bool:
    if not is_signed_perm(w):
        return False
    if group == "S":
        return all(v > 0 for v in w)
    if group == "D":
        return bar_count(w) % 2 == 0
    if group == "B":
        return True
    raise ValueError(f"unknown group {group!r}")


def compose(u: Perm, v: Perm) -> Perm:
    """(u * v)_i = sgn(v_i) * u_{|v_i|}; apply v first, then u."""
    if len(u) != len(v):
        raise ValueError(f"rank mismatch: {len(u)} vs {len(v)}")
    return tuple(u[j - 1] if j > 0 else -u[-j - 1] for j in v)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, v in enumerate(w, start=1):
        if v > 0:
            out[v - 1] = i
        else:
            out[-v - 1] = -i
    return tuple(out)


def forget_signs(w: Perm) -> Perm:
    return tuple(abs(v) for v in w)


def sigma(w: Perm) -> Perm:
    """Reverse the sign of every entry (multiplication by the all-barred
    element, on either side)."""
    return tuple(-v for v in w)


def chi_element(w: Perm) -> Perm:
    """Fold B_n onto D_n: flip the sign of the first entry if the number of
    bars is odd.  Not a group homomorphism."""
    if bar_count(w) % 2 == 0:
        return w
    return (-w[0],) + w[1:]


def rho_element(w: Perm) -> Perm:
    """Reverse the signs of the first two entries (an involution on D_n)."""
    if len(w) < 2:
        raise ValueError("rho needs rank >= 2")
    return (-w[0], -w[1]) + w[2:]


# ---------------------------------------------------------------------------
# generators

def s_gen(n: int, i: int) -> Perm:
    """The adjacent transposition s_i = (i, i+1), 1 <= i <= n-1."""
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def s0_gen(n: int) -> Perm:
    """s_0 = bar(1) 2 ... n."""
    return (-1,) + tuple(range(2, n + 1))


def s1p_gen(n: int) -> Perm:
    """s_1' = bar(2) bar(1) 3 ... n."""
    if n < 2:
        raise ValueError("s_1' needs rank >= 2")
    return (-2, -1) + tuple(range(3, n + 1))


def coxeter_generators(ctype: str, n: int) -> list:
    """Ordered list of (label, element); labels as documented above."""
    gens = []
    if ctype == "B" and n >= 1:
        gens.append((0, s0_gen(n)))
    if ctype == "D" and n >= 2:
        gens.append((0, s1p_gen(n)))
    gens.extend((i, s_gen(n, i)) for i in range(1, n))
    if ctype not in COXETER_TYPES:
        raise ValueError(f"unknown Coxeter type {ctype!r}")
    return gens


def generator_labels(ctype: str, n: int) -> tuple:
    return tuple(label for label, _ in coxeter_generators(ctype, n))


# ---------------------------------------------------------------------------
# enumeration

def group_order(group: str, n: int) -> int:
    import math

    if n == 0:
        return 1
    fact = math.factorial(n)
    if group == "S":
        return fact
    if group == "B":
        return fact << n
    if group == "D":
        return fact << (n - 1)
    raise ValueError(f"unknown group {group!r}")


def iter_group(group: str, n: int, *, cap: int | None = None):
    """Yield each element exactly once: base permutations in lexicographic
    order, then sign masks in increasing binary order (bit i = bar at
    position i+1)."""
    if cap is None:
        cap = enum_cap(group)
    if n > cap:
        raise CapExceeded(f"{group}_{n} exceeds enumeration cap {cap}")
    if group == "S":
        yield from itertools.permutations(range(1, n + 1))
        return
    if group not in ("B", "D"):
        raise ValueError(f"unknown group {group!r}")
    even_only = group == "D"
    for base in itertools.permutations(range(1, n + 1)):
        for mask in range(1 << n):
            if even_only and bin(mask).count("1") % 2:
                continue
            yield tuple(-v if (mask >> i) & 1 else v for i, v in enumerate(base))


@lru_cache(maxsize=None)
def group_elements(group: str, n: int) -> tuple:
    return tuple(iter_group(group, n))


# ---------------------------------------------------------------------------
# descent and peak statistics

def descent_mask(w: Perm, ctype: str) -> int:
    """Bitmask of descent positions of w under the stated type's rules."""
    n = len(w)
    mask = 0
    if ctype == "A":
        pass
    elif ctype == "B":
        if n >= 1 and w[0] < 0:  # w_0 = 0 > w_1
            mask |= 1
    elif ctype == "D":
        if n >= 2 and -w[0] > w[1]:
            mask |= 1  # bit 0 encodes the fork generator 1'
    else:
        raise ValueError(f"unknown Coxeter type {ctype!r}")
    for i in range(1, n):
        if w[i - 1] > w[i]:
            mask |= 1 << i
    return mask


def peak_mask(u: Perm) -> int:
    """Peaks of an unsigned permutation, with the convention u_0 = 0;
    position 1 may be a peak."""
    n = len(u)
    mask = 0
    prev = 0
    for i in range(1, n):
        if prev < u[i - 1] > u[i]:
            mask |= 1 << i
        prev = u[i - 1]
    return mask


def interior_peak_mask(u: Perm) -> int:
    return peak_mask(u) & ~2


def lambda_mask(jmask: int) -> int:
    """{i in J : i-1 not in J} on bitmask-encoded subsets of [n-1]."""
    return jmask & ~(jmask << 1)


def lambda_interior_mask(jmask: int) -> int:
    return lambda_mask(jmask) & ~2


# ---------------------------------------------------------------------------
# GeneratorSet / PeakIndex value types

def _valid_label_mask(ctype: str, n: int) -> int:
    if ctype == "A":
        return ((1 << n) - 1) & ~1 if n >= 1 else 0
    if ctype == "B":
        return (1 << n) - 1
    if ctype == "D":
        return (1 << n) - 1 if n >= 2 else 0
    raise ValueError(f"unknown Coxeter type {ctype!r}")


def _label_token(ctype: str, i: int) -> str:
    return "1'" if (ctype == "D" and i == 0) else str(i)


@dataclass(frozen=True)
class GeneratorSet:
    """Subset of the Coxeter generators of one type, encoded as a bitmask.

    Type A masks live in {1..n-1}, type B in {0..n-1}, type D in {0..n-1}
    with bit 0 standing for the fork generator 1'.  Text form is the sorted
    token list, e.g. "{0,2}" or "{1',1,3}".
    """

    ctype: str
    n: int
    mask: int

    def __post_init__(self):
        if self.ctype not in COXETER_TYPES:
            raise ValueError(f"unknown Coxeter type {self.ctype!r}")
        if self.mask & ~_valid_label_mask(self.ctype, self.n):
            raise ValueError(
                f"mask {bin(self.mask)} has bits outside type {self.ctype} rank {self.n}"
            )

    @classmethod
    def from_labels(cls, ctype: str, n: int, labels) -> "GeneratorSet":
        mask = 0
        for i in labels:
            mask |= 1 << i
        return cls(ctype, n, mask)

    @classmethod
    def parse(cls, ctype: str, n: int, text: str) -> "GeneratorSet":
        body = text.strip()
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        labels = []
        for tok in filter(None, (t.strip() for t in body.split(","))):
            if tok == "1'":
                if ctype != "D":
                    raise ValueError("token 1' only valid for type D")
                labels.append(0)
            else:
                labels.append(int(tok))
        return cls.from_labels(ctype, n, labels)

    def labels(self) -> tuple:
        return tuple(i for i in range(self.n) if (self.mask >> i) & 1)

    def text(self) -> str:
        return "{" + ",".join(_label_token(self.ctype, i) for i in self.labels()) + "}"

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, label: int) -> bool:
        return bool((self.mask >> label) & 1)

    def union(self, other: "GeneratorSet") -> "GeneratorSet":
        self._same_frame(other)
        return GeneratorSet(self.ctype, self.n, self.mask | other.mask)

    def complement(self) -> "GeneratorSet":
        full = _valid_label_mask(self.ctype, self.n)
        return GeneratorSet(self.ctype, self.n, full & ~self.mask)

    def _same_frame(self, other: "GeneratorSet"):
        if (self.ctype, self.n) != (other.ctype, other.n):
            raise ValueError("mixed generator-set frames")


def descent_set(w: Perm, ctype: str) -> GeneratorSet:
    group = GROUP_OF_TYPE[ctype]
    if not in_group(w, group):
        raise ValueError(f"{w} is not in group {group}_{len(w)}")
    return GeneratorSet(ctype, len(w), descent_mask(w, ctype))


def fibonacci(n: int) -> int:
    """f_0 = f_1 = 1, f_2 = 2, f_n = f_{n-1} + f_{n-2}."""
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def sparse_masks(n: int) -> tuple:
    """All bitmasks F of subsets of [n-1] with no two consecutive elements,
    ordered by (cardinality, lexicographic member list).  #sparse_masks(n)
    is the Fibonacci number f_n."""
    masks = [
        m
        for m in range(1 << max(n, 1))
        if not (m & 1) and not (m & (m << 1)) and m < (1 << n)
    ]
    masks.sort(key=lambda m: (bin(m).count("1"), _mask_members(m)))
    return tuple(masks)


@lru_cache(maxsize=None)
def interior_sparse_masks(n: int) -> tuple:
    return tuple(m for m in sparse_masks(n) if not (m & 2))


def _mask_members(mask: int) -> tuple:
    return tuple(i for i in range(mask.bit_length()) if (mask >> i) & 1)


@dataclass(frozen=True)
class PeakIndex:
    """Sparse subset of [n-1]: if i is in F then i+1 is not.  Interior peak
    sets additionally avoid 1."""

    n: int
    mask: int

    def __post_init__(self):
        if self.mask & 1 or self.mask >= (1 << self.n) or self.mask < 0:
            raise ValueError(f"mask {bin(self.mask)} out of range for rank {self.n}")
        if self.mask & (self.mask << 1):
            raise ValueError(f"mask {bin(self.mask)} has adjacent members")

    @classmethod
    def from_members(cls, n: int, members) -> "PeakIndex":
        mask = 0
        for i in members:
            mask |= 1 << i
        return cls(n, mask)

    def members(self) -> tuple:
        return _mask_members(self.mask)

    def text(self) -> str:
        return "{" + ",".join(map(str, self.members())) + "}"

    def is_interior(self) -> bool:
        return not (self.mask & 2)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, i: int) -> bool:
        return bool((self.mask >> i) & 1)


def peak_set(u: Perm) -> PeakIndex:
    if not in_group(u, "S"):
        raise ValueError(f"{u} is not an unsigned permutation")
    return PeakIndex(len(u), peak_mask(u))


def interior_peak_set(u: Perm) -> PeakIndex:
    if not in_group(u, "S"):
        raise ValueError(f"{u} is not an unsigned permutation")
    return PeakIndex(len(u), interior_peak_mask(u))


def lambda_op(J: GeneratorSet) -> PeakIndex:
    if J.ctype != "A":
        raise ValueError("lambda_op is defined on type-A generator sets")
    return PeakIndex(J.n, lambda_mask(J.mask))


def lambda_interior(J: GeneratorSet) -> PeakIndex:
    if J.ctype != "A":
        raise ValueError("lambda_interior is defined on type-A generator sets")
    return PeakIndex(J.n, lambda_interior_mask(J.mask))


# ---------------------------------------------------------------------------
# Cayley-graph length oracle

@lru_cache(maxsize=None)
def coxeter_length_table(group: str, n: int) -> dict:
    """Length of every element of the group, by breadth-first search from
    the identity along right multiplication by the standard generators."""
    if n > bfs_cap():
        raise CapExceeded(f"BFS cap is {bfs_cap()}, got rank {n}")
    gens = [g for _, g in coxeter_generators(TYPE_OF_GROUP[group], n)]
    start = identity(n)
    table = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            lw = table[w]
            for g in gens:
                wg = compose(w, g)
                if wg not in table:
                    table[wg] = lw + 1
                    nxt.append(wg)
        frontier = nxt
    if len(table) != group_order(group, n):
        raise AssertionError(f"BFS did not reach all of {group}_{n}")
    return table


def length_descent_mask(w: Perm, ctype: str) -> int:
    """Descents read off the length function: labels s with l(ws) < l(w)."""
    table = coxeter_length_table(GROUP_OF_TYPE[ctype], len(w))
    lw = table[w]
    mask = 0
    for label, g in coxeter_generators(ctype, len(w)):
        if table[compose(w, g)] < lw:
            mask |= 1 << label
    return mask


def perm_to_text(w: Perm) -> str:
    """Comma-separated one-line text form, e.g. "2,-4,1,3"."""
    return ",".join(str(v) for v in w)


def perm_from_text(text: str) -> Perm:
    w = tuple(int(t) for t in text.split(",") if t.strip())
    if not is_signed_perm(w):
        raise ValueError(f"{text!r} is not a signed permutation")
    return w
