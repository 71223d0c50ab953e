"""The peak algebra of the symmetric group and its interior-peak ideal.

P_F sums the permutations whose peak set is exactly F (peaks may occur at
position 1, with the convention w_0 = 0); the span of the P_F over the
sparse sets F is a unital subalgebra of the descent algebra of dimension
the Fibonacci number f_n.  The interior-peak sums (peaks at 1 excluded)
span a two-sided ideal of dimension f_{n-1}, which is the kernel of the
degree-lowering projection onto the peak algebra two ranks down.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import NOT_IN_SPAN, AlgElem, SpanSolver
from .bases import StructureTable, _normalize_coord, y_label_elements
from .perms import (
    PeakIndex,
    group_elements,
    interior_peak_mask,
    interior_sparse_masks,
    lambda_interior_mask,
    lambda_mask,
    peak_mask,
    sparse_masks,
)
from .reporting import CheckFailure, run_check


@lru_cache(maxsize=None)
def peak_classes(n: int) -> dict:
    classes: dict = {m: [] for m in sparse_masks(n)}
    for u in group_elements("S", n):
        classes[peak_mask(u)].append(u)
    return {m: tuple(us) for m, us in classes.items()}


@lru_cache(maxsize=None)
def interior_peak_classes(n: int) -> dict:
    classes: dict = {m: [] for m in interior_sparse_masks(n)}
    for u in group_elements("S", n):
        classes[interior_peak_mask(u)].append(u)
    return {m: tuple(us) for m, us in classes.items()}


def _as_peak_mask(n: int, F, *, interior: bool = False) -> int:
    if isinstance(F, PeakIndex):
        if F.n != n:
            raise ValueError(f"peak index rank {F.n} != {n}")
        mask = F.mask
    elif isinstance(F, int):
        mask = F
    else:
        mask = 0
        for i in F:
            mask |= 1 << i
    universe = interior_sparse_masks(n) if interior else sparse_masks(n)
    if mask not in universe:
        kind = "interior peak" if interior else "peak"
        raise ValueError(f"{bin(mask)} is not a valid {kind} set for rank {n}")
    return mask


@lru_cache(maxsize=None)
def _forms_agree(n: int) -> bool:
    """The class-sum and descent-class-sum forms of every P_F and every
    interior P_F coincide (binning by Peak vs summing Y_J over the fibers
    of the lambda operators)."""
    y_elems = dict(y_label_elements("A", n))
    for masks, classes, lam in (
        (sparse_masks(n), peak_classes(n), lambda_mask),
        (interior_sparse_masks(n), interior_peak_classes(n), lambda_interior_mask),
    ):
        by_fiber: dict = {m: AlgElem.zero("S", n) for m in masks}
        for jm, yj in y_elems.items():
            by_fiber[lam(jm)] += yj
        for m in masks:
            if by_fiber[m] != AlgElem.class_sum("S", n, classes[m]):
                raise AssertionError(f"peak-basis forms disagree at n={n}, F mask {bin(m)}")
    return True


def peak_basis(n: int, F) -> AlgElem:
    """P_F: sum of the permutations with peak set F."""
    mask = _as_peak_mask(n, F)
    _forms_agree(n)
    return AlgElem.class_sum("S", n, peak_classes(n)[mask])


def interior_peak_basis(n: int, F) -> AlgElem:
    """Interior P_F: sum of the permutations with interior peak set F."""
    mask = _as_peak_mask(n, F, interior=True)
    _forms_agree(n)
    return AlgElem.class_sum("S", n, interior_peak_classes(n)[mask])


def peak_elements(n: int) -> list:
    """(mask, P_F) pairs in table order: by cardinality, then members."""
    return [(m, AlgElem.class_sum("S", n, peak_classes(n)[m])) for m in sparse_masks(n)]


def interior_peak_elements(n: int) -> list:
    return [
        (m, AlgElem.class_sum("S", n, interior_peak_classes(n)[m]))
        for m in interior_sparse_masks(n)
    ]


@lru_cache(maxsize=None)
def peak_solver(n: int) -> SpanSolver:
    elems = peak_elements(n)
    return SpanSolver([e for _, e in elems], labels=tuple(m for m, _ in elems))


@lru_cache(maxsize=None)
def interior_peak_solver(n: int) -> SpanSolver:
    elems = interior_peak_elements(n)
    return SpanSolver([e for _, e in elems], labels=tuple(m for m, _ in elems))


def peak_coordinates(a: AlgElem):
    """P-basis coordinates by class binning, or None outside the span."""
    if a.group != "S":
        raise ValueError("peak coordinates require an element of QS_n")
    seen: dict = {}
    for w, c in a.terms.items():
        m = peak_mask(w)
        prev = seen.get(m)
        if prev is None:
            seen[m] = [c, 1]
        elif prev[0] == c:
            prev[1] += 1
        else:
            return None
    classes = peak_classes(a.n)
    for m, (c, count) in seen.items():
        if count != len(classes[m]):
            return None
    return {m: c for m, (c, _) in seen.items()}


def interior_peak_coordinates(a: AlgElem):
    if a.group != "S":
        raise ValueError("peak coordinates require an element of QS_n")
    seen: dict = {}
    for w, c in a.terms.items():
        m = interior_peak_mask(w)
        prev = seen.get(m)
        if prev is None:
            seen[m] = [c, 1]
        elif prev[0] == c:
            prev[1] += 1
        else:
            return None
    classes = interior_peak_classes(a.n)
    for m, (c, count) in seen.items():
        if count != len(classes[m]):
            return None
    return {m: c for m, (c, _) in seen.items()}


def from_peak_coordinates(n: int, coords: dict) -> AlgElem:
    terms = {}
    classes = peak_classes(n)
    for m, c in coords.items():
        if c == 0:
            continue
        for u in classes[m]:
            terms[u] = c
    return AlgElem._raw("S", n, terms)


# ---------------------------------------------------------------------------
# the projection two ranks down

def pi_label(mask: int):
    """Image of the label F under the projection: (new mask, sign), or
    None when the image vanishes (2 in F)."""
    if mask & 4:  # 2 in F
        return None
    if mask & 2:  # 1 in F
        return ((mask & ~2) >> 2, -1)
    return (mask >> 2, 1)


def pi_map(a: AlgElem, *, coords=None) -> AlgElem:
    """Project the peak algebra in rank n onto rank n-2: P_F goes to
    P_{F-2}, to -P_{(F-1)-2} when 1 is in F, and to 0 when 2 is in F.
    Inputs outside span{P_F} are rejected."""
    n = a.n
    if n < 2:
        raise ValueError("projection needs rank >= 2")
    if coords is None:
        cv = peak_solver(n).coords(a)
        if cv is NOT_IN_SPAN:
            raise ValueError("element is not in the peak algebra")
        coords = dict(zip(cv.labels, cv.coords))
    out: dict = {}
    for m, c in coords.items():
        if c == 0:
            continue
        image = pi_label(m)
        if image is None:
            continue
        m2, sign = image
        out[m2] = out.get(m2, 0) + sign * c
    return from_peak_coordinates(n - 2, out)


# ---------------------------------------------------------------------------
# tables and theorem checks

def peak_mask_text(mask: int) -> str:
    return "{" + ",".join(str(i) for i in range(mask.bit_length()) if (mask >> i) & 1) + "}"


def peak_table(n: int) -> StructureTable:
    """Multiplication table of the peak algebra on the P-basis."""
    elems = peak_elements(n)
    labels = [peak_mask_text(m) for m, _ in elems]
    solver = peak_solver(n)
    cells = []
    for _, pf in elems:
        row = []
        for _, pg in elems:
            cv = solver.coords(pf * pg)
            if cv is NOT_IN_SPAN:
                raise ArithmeticError("peak algebra closure fails")
            row.append(tuple(_normalize_coord(c) for c in cv))
        cells.append(row)
    return StructureTable(name=f"P_{n}", labels=labels, cells=cells)


def check_closure(n: int):
    """Every product P_F * P_G lies in span{P_F}; names the failing pair."""
    elems = peak_elements(n)
    solver = peak_solver(n)
    for mf, pf in elems:
        for mg, pg in elems:
            if solver.coords(pf * pg) is NOT_IN_SPAN:
                raise CheckFailure(
                    f"P_{peak_mask_text(mf)} * P_{peak_mask_text(mg)} not in P_{n}"
                )


def check_two_sided_ideal(n: int):
    """P * interior-P and interior-P * P land in the interior span."""
    solver = interior_peak_solver(n)
    for mf, pf in peak_elements(n):
        for mg, pg in interior_peak_elements(n):
            for name, prod in (("left", pf * pg), ("right", pg * pf)):
                if solver.coords(prod) is NOT_IN_SPAN:
                    raise CheckFailure(
                        f"{name} product P_{peak_mask_text(mf)} with interior "
                        f"P_{peak_mask_text(mg)} leaves the ideal at n={n}"
                    )


def check_quotient(n: int):
    """The projection is onto rank n-2 with kernel exactly the ideal."""
    from .perms import fibonacci

    elems = peak_elements(n)
    images = [pi_map(p) for _, p in elems]
    img_rank = SpanSolver([a for a in images if a]).rank
    if img_rank != fibonacci(n - 2):
        raise CheckFailure(f"image rank {img_rank} != f_{n - 2}")
    # the ideal sits in the kernel, and by dimensions fills it
    for mg, pg in interior_peak_elements(n):
        if pi_map(pg):
            raise CheckFailure(f"interior P_{peak_mask_text(mg)} not killed")
    if fibonacci(n) - img_rank != len(interior_sparse_masks(n)):
        raise CheckFailure("kernel dimension is not f_{n-1}")


def check_unitriangular(n: int):
    """The sign-forgetting images of X_{F-1} expand in the P-basis with a
    nonzero coefficient on P_F and zero on every P_G with G above F in the
    max-of-symmetric-difference total order (= integer order on masks)."""
    from .maps import phi_on_x  # late import; maps builds on this module

    solver = peak_solver(n)
    for fm in sparse_masks(n):
        cv = solver.coords(phi_on_x(n, fm >> 1))
        if cv is NOT_IN_SPAN:
            raise CheckFailure(f"image of X at F={peak_mask_text(fm)} outside P_{n}")
        coords = dict(zip(cv.labels, cv.coords))
        if not coords.get(fm):
            raise CheckFailure(f"diagonal coefficient vanishes at F={peak_mask_text(fm)}")
        above = [peak_mask_text(g) for g, c in coords.items() if g > fm and c]
        if above:
            raise CheckFailure(
                f"F={peak_mask_text(fm)}: nonzero above-diagonal terms at {above}"
            )


def verify_peak_theorems(n: int, *, closure_cap: int = 6, ideal_cap: int = 5) -> list:
    """The peak-algebra theorem suite at one rank: basis forms, closure,
    image of the type-B descent algebra, the two-sided ideal, and the
    rank-(n-2) quotient."""
    checks = [run_check(f"peaks/forms-agree/n={n}", lambda: _forms_agree(n))]
    if n <= closure_cap:
        checks.append(run_check(f"peaks/closure/n={n}", lambda: check_closure(n)))
    checks.append(run_check(f"peaks/unitriangular-image/n={n}", lambda: check_unitriangular(n)))
    if n <= ideal_cap:
        checks.append(run_check(f"peaks/two-sided-ideal/n={n}", lambda: check_two_sided_ideal(n)))
    if n >= 2:
        checks.append(run_check(f"peaks/quotient/n={n}", lambda: check_quotient(n)))
    return checks
