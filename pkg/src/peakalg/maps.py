"""Maps between the descent algebras of types A, B, D and the peak algebra.

Element-level maps (forget signs, fold B onto D, flip leading signs) are
pushed forward linearly; each also has a closed form on the Y- or X-basis,
implemented separately so the two routes can be checked against each other
exhaustively.  The degree-lowering maps live on basis coordinates: the
type-B map drops generator 0, its square and the type-D map drop the two
leftmost generators, and both descend to the projection of the peak
algebra two ranks down.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import AlgElem, exact_det, push_forward
from .bases import (
    coord_rank,
    descent_coordinates,
    from_descent_coordinates,
    x_basis,
    x_to_y_coords,
    y_basis,
    y_to_x_coords,
)
from .peak import (
    from_peak_coordinates,
    interior_peak_basis,
    interior_peak_coordinates,
    peak_coordinates,
    pi_map,
)
from .perms import (
    chi_element,
    forget_signs,
    interior_sparse_masks,
    rho_element,
    sigma,
    sparse_masks,
)
from .reporting import CheckFailure, run_check

# ---------------------------------------------------------------------------
# element-level linear maps


def phi(a: AlgElem) -> AlgElem:
    """Forget the signs: QB_n (or QD_n) -> QS_n."""
    return push_forward(forget_signs, a, group="S")


def psi(a: AlgElem) -> AlgElem:
    if a.group != "D":
        raise ValueError("psi acts on elements of QD_n")
    return push_forward(forget_signs, a, group="S")


def chi(a: AlgElem) -> AlgElem:
    """Fold QB_n onto QD_n along w -> w (even bars) / w s_0 (odd bars)."""
    if a.group != "B":
        raise ValueError("chi acts on elements of QB_n")
    return push_forward(chi_element, a, group="D")


def sigma_map(a: AlgElem) -> AlgElem:
    return push_forward(sigma, a)


def rho_map(a: AlgElem) -> AlgElem:
    if a.group != "D":
        raise ValueError("rho acts on elements of QD_n")
    return push_forward(rho_element, a)


# ---------------------------------------------------------------------------
# closed forms on bases
#
# Type-B subset masks use bit 0 for the sign generator; type-D masks use
# bit 0 for the fork generator 1'.  In the four-case formulas the residual
# subset J sits in {2,...,n-1}, i.e. occupies bits >= 2.


def _popcount(m: int) -> int:
    return bin(m).count("1")


def chi_on_y(n: int, jmask: int) -> AlgElem:
    """Image in the type-D descent algebra of the type-B basis element
    Y_J, by the four-case closed form."""
    j = jmask & ~3
    flags = jmask & 3
    if flags == 0:
        parts = [j]
    elif flags == 2:  # 1 in J
        parts = [j | 1, j | 2, j | 3]
    elif flags == 1:  # 0 in J
        parts = [j, j | 1, j | 2]
    else:  # 0 and 1 in J
        parts = [j | 3]
    out = AlgElem.zero("D", n)
    for m in parts:
        out += y_basis("D", n, m)
    return out


def chi_on_x(n: int, jmask: int) -> AlgElem:
    j = jmask & ~3
    flags = jmask & 3
    if flags == 0:
        return x_basis("D", n, j)
    if flags == 2:
        return x_basis("D", n, j | 3)
    if flags == 1:
        return x_basis("D", n, j | 1) + x_basis("D", n, j | 2)
    return x_basis("D", n, j | 3).scale(2)


def phi_on_y(n: int, jmask: int) -> AlgElem:
    """Sum of 2^{#F} P_F over sparse F contained in the symmetric
    difference of J and J+1 (type-B label J)."""
    window = jmask ^ (jmask << 1)
    coords = {
        fm: 1 << _popcount(fm) for fm in sparse_masks(n) if fm & ~window == 0
    }
    return from_peak_coordinates(n, coords)


def phi_on_x(n: int, jmask: int) -> AlgElem:
    """2^{#J} times the sum of P_F over sparse F inside J u (J+1)."""
    window = jmask | (jmask << 1)
    scale = 1 << _popcount(jmask)
    coords = {fm: scale for fm in sparse_masks(n) if fm & ~window == 0}
    return from_peak_coordinates(n, coords)


def phi_on_x0(n: int, jmask: int) -> AlgElem:
    """Image of X_{{0} u J}, J inside [n-1]: lands in the interior-peak
    ideal with a global factor 2^{1+#J}."""
    if jmask & 1:
        raise ValueError("label J must avoid 0; the 0 is implicit")
    window = jmask | (jmask << 1)
    scale = 1 << (1 + _popcount(jmask))
    out: dict = {}
    for fm in interior_sparse_masks(n):
        if fm & ~window == 0:
            out[fm] = scale
    return _from_interior_coords(n, out)


def phi_on_y0(n: int, jmask: int) -> AlgElem:
    """Image of Y_{{0} u J} + Y_J, J inside [n-1]."""
    if jmask & 1:
        raise ValueError("label J must avoid 0; the 0 is implicit")
    window = jmask ^ (jmask << 1)
    out: dict = {}
    for fm in interior_sparse_masks(n):
        if fm & ~window == 0:
            out[fm] = 1 << (1 + _popcount(fm))
    return _from_interior_coords(n, out)


def _from_interior_coords(n: int, coords: dict) -> AlgElem:
    out = AlgElem.zero("S", n)
    for fm, c in coords.items():
        if c:
            out += interior_peak_basis(n, fm).scale(c)
    return out


PSI_CASES = ("plain", "one", "oneprime", "both")


def _psi_case_mask(jmask: int, case: str) -> int:
    if jmask & 3:
        raise ValueError("residual subset J must sit inside {2,...,n-1}")
    bits = {"plain": 0, "one": 2, "oneprime": 1, "both": 3}[case]
    return jmask | bits


def psi_on_y(n: int, jmask: int, case: str) -> AlgElem:
    """Image of the type-D basis element Y with residual subset J in
    {2,...,n-1} and case tag: plain / one (1 in the label) / oneprime
    (1' in the label) / both."""
    if case not in PSI_CASES:
        raise ValueError(f"unknown case {case!r}")
    if jmask & 3:
        raise ValueError("residual subset J must sit inside {2,...,n-1}")
    if case == "plain":
        window = jmask ^ (jmask << 1)
        coords = {fm: 1 << _popcount(fm) for fm in sparse_masks(n) if fm & ~window == 0}
        return from_peak_coordinates(n, coords)
    if case in ("one", "oneprime"):
        window = jmask ^ (jmask << 1)
        coords = {}
        for fm in sparse_masks(n):
            if fm & 2 and (fm & ~2) & ~window == 0 and not fm & 4:
                # fm = {1} u F with F sparse avoiding 1 and 2, F inside window
                coords[fm] = 1 << _popcount(fm & ~2)
        return from_peak_coordinates(n, coords)
    window = jmask ^ (4 | (jmask << 1))
    coords = {fm: 1 << _popcount(fm) for fm in sparse_masks(n) if fm & ~window == 0}
    return from_peak_coordinates(n, coords)


def psi_on_x(n: int, jmask: int, case: str) -> AlgElem:
    if case not in PSI_CASES:
        raise ValueError(f"unknown case {case!r}")
    if jmask & 3:
        raise ValueError("residual subset J must sit inside {2,...,n-1}")
    if case == "plain":
        window = jmask | (jmask << 1)
        scale = 1 << _popcount(jmask)
    elif case in ("one", "oneprime"):
        window = jmask | (jmask << 1) | 2
        scale = 1 << _popcount(jmask)
    else:
        window = jmask | (jmask << 1) | 6
        scale = 1 << (_popcount(jmask) + 1)
    coords = {fm: scale for fm in sparse_masks(n) if fm & ~window == 0}
    return from_peak_coordinates(n, coords)


# ---------------------------------------------------------------------------
# degree-lowering maps on coordinates


def beta_y_label(jmask: int):
    """(sign, new label) of the type-B Y_J image one rank down."""
    if jmask & 1:
        return (-1, (jmask & ~1) >> 1)
    return (1, jmask >> 1)


def beta_x_label(jmask: int):
    """New label of X_J one rank down, or None when the image is 0."""
    return None if jmask & 1 else jmask >> 1


def gamma_x_label(jmask: int):
    """Type D: X_J two ranks down into type B, or None (1' or 1 in J)."""
    return None if jmask & 3 else jmask >> 2


def _descent_coords_or_raise(a: AlgElem, ctype: str) -> dict:
    coords = descent_coordinates(a, ctype)
    if coords is None:
        raise ValueError(f"element is not in the type-{ctype} descent algebra")
    return coords


def beta_map(a: AlgElem) -> AlgElem:
    """Drop generator 0: the type-B descent algebra onto rank n-1."""
    if a.group != "B":
        raise ValueError("beta acts on the type-B descent algebra")
    coords = _descent_coords_or_raise(a, "B")
    out: dict = {}
    for m, c in coords.items():
        sign, m2 = beta_y_label(m)
        out[m2] = out.get(m2, 0) + sign * c
    return from_descent_coordinates("B", a.n - 1, out)


def beta2_map(a: AlgElem) -> AlgElem:
    return beta_map(beta_map(a))


def gamma_map(a: AlgElem) -> AlgElem:
    """Drop generators 1' and 1: the type-D descent algebra onto the
    type-B one two ranks down."""
    if a.group != "D":
        raise ValueError("gamma acts on the type-D descent algebra")
    xcoords = y_to_x_coords(_descent_coords_or_raise(a, "D"))
    out: dict = {}
    for m, c in xcoords.items():
        m2 = gamma_x_label(m)
        if m2 is not None:
            out[m2] = out.get(m2, 0) + c
    return from_descent_coordinates("B", a.n - 2, x_to_y_coords(out))


# ---------------------------------------------------------------------------
# descents-to-peaks transforms


def x0_generator(n: int) -> AlgElem:
    """X_{{0}} in rank n: the sum of the 2^n signed permutations whose
    entries increase."""
    if n == 0:
        return AlgElem.unit("B", 0)
    return x_basis("B", n, 1)


def interior_peak_generator(n: int) -> AlgElem:
    """The sum of the permutations that decrease then increase (empty
    interior peak set)."""
    if n == 0:
        return AlgElem.unit("S", 0)
    return interior_peak_basis(n, 0)


def theta(a: AlgElem) -> AlgElem:
    """Descents-to-peaks transform: right multiplication by twice the
    interior-peak generator.  In degree 0 the factor 2 degenerates (it
    counts the sign choices of a nonempty block) and the transform is the
    identity, matching its type-B analog whose degree-0 generator is 1."""
    if a.group != "S":
        raise ValueError("theta acts on QS_n")
    if a.n == 0:
        return a
    return interior_peak_generator(a.n).scale(2) * a


def theta_pm(a: AlgElem) -> AlgElem:
    """Type-B analog: right multiplication by the increasing-class sum."""
    if a.group != "B":
        raise ValueError("theta_pm acts on QB_n")
    return x0_generator(a.n) * a


# ---------------------------------------------------------------------------
# distinguished subspaces


def canonical_ideal_labels(n: int) -> list:
    """J inside [n-1] (bits >= 1) indexing X_{{0} u J}."""
    return [m << 1 for m in range(1 << (n - 1))] if n >= 1 else [0]


def x0_basis(n: int, jmask: int) -> AlgElem:
    return x_basis("B", n, jmask | 1)


def y0_basis(n: int, jmask: int) -> AlgElem:
    return y_basis("B", n, jmask | 1) + y_basis("B", n, jmask)


def canonical_ideal_basis(n: int) -> list:
    return [(m, x0_basis(n, m)) for m in canonical_ideal_labels(n)]


def ker_beta2_basis(n: int) -> list:
    """X_J with 0 or 1 in J: the kernel of the double degree drop."""
    return [
        (m, x_basis("B", n, m)) for m in range(1 << n) if m & 3
    ]


def d_ideal_basis(n: int) -> list:
    """Type D: X_J with 1' or 1 in J."""
    return [
        (m, x_basis("D", n, m)) for m in range(1 << n) if m & 3
    ]


def imchi_basis(n: int, jmask: int, i: int) -> AlgElem:
    """Spanning elements of the image of the B-to-D fold: for J inside
    {2,...,n-1}, the classes with no leftmost descents, with exactly one
    of 1', 1, and with both."""
    if jmask & 3:
        raise ValueError("residual subset J must sit inside {2,...,n-1}")
    if i == 1:
        return y_basis("D", n, jmask)
    if i == 2:
        return y_basis("D", n, jmask | 1) + y_basis("D", n, jmask | 2)
    if i == 3:
        return y_basis("D", n, jmask | 3)
    raise ValueError("class index must be 1, 2 or 3")


# ---------------------------------------------------------------------------
# commutative diagrams and exact rows


@dataclass
class Node:
    """A subspace given by a spanning family and an exact coordinatizer
    (returns None outside the subspace)."""

    name: str
    family: list  # (label, AlgElem)
    coords: object  # callable AlgElem -> dict | None

    def rank(self) -> int:
        return coord_rank([self._coords_or_fail(e) for _, e in self.family])

    def _coords_or_fail(self, elem: AlgElem) -> dict:
        c = self.coords(elem)
        if c is None:
            raise CheckFailure(f"element falls outside node {self.name}")
        return c


@dataclass
class DiagramSpec:
    """A finite diagram of linear maps with asserted path equalities and
    exact rows.  Arrows are (source node, target node, map)."""

    name: str
    nodes: dict
    arrows: dict
    path_equalities: list = field(default_factory=list)  # (path_a, path_b)
    exact_rows: list = field(default_factory=list)  # (inclusion arrow, projection arrow)
    surjections: list = field(default_factory=list)  # arrow names

    def arrow_src(self, path):
        return self.arrows[path[0]][0]

    def apply_path(self, path, elem: AlgElem) -> AlgElem:
        for name in path:
            elem = self.arrows[name][2](elem)
        return elem


def verify_diagram(spec: DiagramSpec) -> list:
    checks = []

    def check_membership():
        for name, (src, dst, f) in spec.arrows.items():
            for label, elem in spec.nodes[src].family:
                image = f(elem)
                if spec.nodes[dst].coords(image) is None:
                    raise CheckFailure(
                        f"arrow {name} sends {label} outside {dst}"
                    )

    checks.append(run_check(f"diagram/{spec.name}/arrows-land-in-nodes", check_membership))

    for path_a, path_b in spec.path_equalities:
        src = spec.arrow_src(path_a)
        if src != spec.arrow_src(path_b):
            raise ValueError("paths start at different nodes")

        def check_paths(path_a=path_a, path_b=path_b, src=src):
            for label, elem in spec.nodes[src].family:
                if spec.apply_path(path_a, elem) != spec.apply_path(path_b, elem):
                    raise CheckFailure(
                        f"paths {'*'.join(path_a)} and {'*'.join(path_b)} "
                        f"differ on {label}"
                    )

        checks.append(
            run_check(
                f"diagram/{spec.name}/path[{'*'.join(path_a)}=={'*'.join(path_b)}]",
                check_paths,
            )
        )

    for inc_name, proj_name in spec.exact_rows:

        def check_exact(inc_name=inc_name, proj_name=proj_name):
            inc_src, mid, f = spec.arrows[inc_name]
            mid2, out, g = spec.arrows[proj_name]
            if mid != mid2:
                raise ValueError("exact row arrows do not compose")
            mid_node, out_node = spec.nodes[mid], spec.nodes[out]
            src_node = spec.nodes[inc_src]
            # composite vanishes
            for label, elem in src_node.family:
                if g(f(elem)):
                    raise CheckFailure(f"{proj_name}({inc_name}({label})) != 0")
            # ranks: injective inclusion, surjective projection, and
            # ker(projection) = im(inclusion) by rank-nullity
            r_src = src_node.rank()
            r_mid = mid_node.rank()
            r_out = out_node.rank()
            r_in = coord_rank(
                [mid_node._coords_or_fail(f(e)) for _, e in src_node.family]
            )
            r_img = coord_rank(
                [out_node._coords_or_fail(g(e)) for _, e in mid_node.family]
            )
            if r_in != r_src:
                raise CheckFailure(f"{inc_name} is not injective ({r_in} < {r_src})")
            if r_img != r_out:
                raise CheckFailure(f"{proj_name} is not onto ({r_img} < {r_out})")
            if r_in + r_img != r_mid:
                raise CheckFailure(
                    f"row not exact at {mid}: {r_in} + {r_img} != {r_mid}"
                )

        checks.append(
            run_check(f"diagram/{spec.name}/exact-row[{inc_name},{proj_name}]", check_exact)
        )

    for name in spec.surjections:

        def check_surjective(name=name):
            src, dst, f = spec.arrows[name]
            dst_node = spec.nodes[dst]
            rank = coord_rank(
                [dst_node._coords_or_fail(f(e)) for _, e in spec.nodes[src].family]
            )
            if rank != dst_node.rank():
                raise CheckFailure(f"{name} is not onto {dst}")

        checks.append(run_check(f"diagram/{spec.name}/onto[{name}]", check_surjective))

    return checks

# ---------------------------------------------------------------------------
# node coordinatizers and the standard diagrams


def descent_node_coords(ctype: str):
    return lambda a: descent_coordinates(a, ctype)


def x_support_coords(ctype: str, allowed: frozenset):
    """Coordinates on the X-basis restricted to an allowed label set;
    None outside the corresponding span."""

    def coords(a: AlgElem):
        y = descent_coordinates(a, ctype)
        if y is None:
            return None
        x = y_to_x_coords(y)
        if any(m not in allowed for m in x):
            return None
        return x

    return coords


def bexact_diagram(n: int) -> DiagramSpec:
    """Rows 0 -> ker(beta^2) -> Sol(B_n) -> Sol(B_{n-2}) -> 0 over
    0 -> interior peaks -> peaks_n -> peaks_{n-2} -> 0, with the
    sign-forgetting map as the vertical arrows."""
    from .peak import interior_peak_elements, peak_elements

    i01 = ker_beta2_basis(n)
    allowed = frozenset(m for m, _ in i01)
    nodes = {
        "I01": Node("I01", i01, x_support_coords("B", allowed)),
        "SolB": Node("SolB", _y_family("B", n), descent_node_coords("B")),
        "SolB2": Node("SolB2", _y_family("B", n - 2), descent_node_coords("B")),
        "Pint": Node("Pint", interior_peak_elements(n), interior_peak_coordinates),
        "P": Node("P", peak_elements(n), peak_coordinates),
        "P2": Node("P2", peak_elements(n - 2), peak_coordinates),
    }
    arrows = {
        "inc": ("I01", "SolB", lambda a: a),
        "beta2": ("SolB", "SolB2", beta2_map),
        "phi_top": ("I01", "Pint", phi),
        "phi_mid": ("SolB", "P", phi),
        "phi_bot": ("SolB2", "P2", phi),
        "inc_low": ("Pint", "P", lambda a: a),
        "pi": ("P", "P2", pi_map),
    }
    return DiagramSpec(
        name=f"bexact/n={n}",
        nodes=nodes,
        arrows=arrows,
        path_equalities=[
            (("inc", "phi_mid"), ("phi_top", "inc_low")),
            (("beta2", "phi_bot"), ("phi_mid", "pi")),
        ],
        exact_rows=[("inc", "beta2"), ("inc_low", "pi")],
        surjections=["phi_top", "phi_mid", "phi_bot"],
    )


def dexact_diagram(n: int) -> DiagramSpec:
    """The type-D analog, with the two leftmost generators dropped."""
    from .peak import interior_peak_elements, peak_elements

    ideal = d_ideal_basis(n)
    allowed = frozenset(m for m, _ in ideal)
    nodes = {
        "Iprime": Node("Iprime", ideal, x_support_coords("D", allowed)),
        "SolD": Node("SolD", _y_family("D", n), descent_node_coords("D")),
        "SolB2": Node("SolB2", _y_family("B", n - 2), descent_node_coords("B")),
        "Pint": Node("Pint", interior_peak_elements(n), interior_peak_coordinates),
        "P": Node("P", peak_elements(n), peak_coordinates),
        "P2": Node("P2", peak_elements(n - 2), peak_coordinates),
    }
    arrows = {
        "inc": ("Iprime", "SolD", lambda a: a),
        "gamma": ("SolD", "SolB2", gamma_map),
        "psi_top": ("Iprime", "Pint", psi),
        "psi_mid": ("SolD", "P", psi),
        "phi_bot": ("SolB2", "P2", phi),
        "inc_low": ("Pint", "P", lambda a: a),
        "pi": ("P", "P2", pi_map),
    }
    return DiagramSpec(
        name=f"dexact/n={n}",
        nodes=nodes,
        arrows=arrows,
        path_equalities=[
            (("inc", "psi_mid"), ("psi_top", "inc_low")),
            (("gamma", "phi_bot"), ("psi_mid", "pi")),
        ],
        exact_rows=[("inc", "gamma"), ("inc_low", "pi")],
        surjections=["psi_top", "psi_mid", "phi_bot"],
    )


def bd_triangles(n: int) -> DiagramSpec:
    """The fold through type D composed with the projections: psi after
    chi is phi, and gamma after chi is the double degree drop."""
    from .peak import peak_elements

    nodes = {
        "SolB": Node("SolB", _y_family("B", n), descent_node_coords("B")),
        "SolD": Node("SolD", _y_family("D", n), descent_node_coords("D")),
        "SolB2": Node("SolB2", _y_family("B", n - 2), descent_node_coords("B")),
        "P": Node("P", peak_elements(n), peak_coordinates),
    }
    arrows = {
        "chi": ("SolB", "SolD", chi),
        "psi": ("SolD", "P", psi),
        "phi": ("SolB", "P", phi),
        "gamma": ("SolD", "SolB2", gamma_map),
        "beta2": ("SolB", "SolB2", beta2_map),
    }
    return DiagramSpec(
        name=f"bd-triangles/n={n}",
        nodes=nodes,
        arrows=arrows,
        path_equalities=[
            (("chi", "psi"), ("phi",)),
            (("chi", "gamma"), ("beta2",)),
        ],
    )


def _y_family(ctype: str, n: int) -> list:
    from .bases import y_label_elements

    return y_label_elements(ctype, n)


# ---------------------------------------------------------------------------
# principal right ideals


def right_ideal_check(generator: AlgElem, algebra_family, ideal_family, coordizer, what: str):
    """generator * algebra spans exactly the ideal: both spans coordinate
    to equal rank and their union adds nothing."""
    products = []
    for label, b in algebra_family:
        prod = generator * b
        c = coordizer(prod)
        if c is None:
            raise CheckFailure(f"{what}: generator * {label} leaves the ideal")
        products.append(c)
    ideal_rows = []
    for label, b in ideal_family:
        c = coordizer(b)
        if c is None:
            raise CheckFailure(f"{what}: ideal family member {label} rejected")
        ideal_rows.append(c)
    r_prod = coord_rank(products)
    r_ideal = coord_rank(ideal_rows)
    r_union = coord_rank(products + ideal_rows)
    if not (r_prod == r_ideal == r_union):
        raise CheckFailure(
            f"{what}: span ranks differ (products {r_prod}, ideal {r_ideal}, union {r_union})"
        )


def theta_pm_ideal_matrix(n: int):
    """Rows of the type-B transform restricted to the canonical ideal, in
    X0 coordinates: entry [alpha][beta] is the coefficient of X0_beta in
    the image of X0_alpha.  Returns (labels, matrix)."""
    labels = canonical_ideal_labels(n)
    index = {m: i for i, m in enumerate(labels)}
    rows = []
    for m in labels:
        image = theta_pm(x0_basis(n, m))
        ycoords = descent_coordinates(image, "B")
        if ycoords is None:
            raise CheckFailure("transform image left the descent algebra")
        xcoords = y_to_x_coords(ycoords)
        row = [Fraction(0)] * len(labels)
        for xm, c in xcoords.items():
            if not xm & 1:
                raise CheckFailure("transform image left the canonical ideal")
            row[index[xm & ~1]] = Fraction(c)
        rows.append(row)
    return labels, rows


def check_theta_pm_bijective(n: int):
    """Triangularity with diagonal 2^(number of parts), support only on
    refinements, and a nonzero exact determinant."""
    labels, rows = theta_pm_ideal_matrix(n)
    for i, m in enumerate(labels):
        parts = _popcount(m) + 1
        if rows[i][i] != (1 << parts):
            raise CheckFailure(
                f"diagonal at label {bin(m)} is {rows[i][i]}, expected 2^{parts}"
            )
        for j, m2 in enumerate(labels):
            c = rows[i][j]
            if c and (m & ~m2):
                raise CheckFailure(
                    f"entry at ({bin(m)}, {bin(m2)}) is nonzero but not a refinement"
                )
            if c and not (c.denominator == 1 and c >= 0):
                raise CheckFailure(f"entry at ({bin(m)}, {bin(m2)}) is not a nonnegative integer")
    det = exact_det(rows)
    if det == 0:
        raise CheckFailure("determinant vanishes")
    return det
