"""Named verification suites behind the command-line front end.

Each suite bundles the executable theorem checks of one area into
CheckResults.  Suites take the rank ceiling n_max and a deep flag; checks
whose spec-level cap is lower than n_max stop at their own cap, and the
handful of cheap counting checks (Fibonacci dimensions, peak-set
realization) always run to their stated caps.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from .reporting import CheckFailure, VerifyReport, run_check

BFS_SUITE_CAP = 6
ELEMENT_CAP = 5  # element-level exhaustive closed-form checks
CUBE_CAP = 4  # full structure-constant level for types B and D
CUBE_CAP_DEEP = 5


def _cap(n_max: int, hard: int) -> int:
    return min(n_max, hard)


# ---------------------------------------------------------------------------


def suite_descents(n_max: int, deep: bool = False) -> list:
    from . import bases, perms

    checks = []

    def counts():
        import math

        for n in range(0, _cap(n_max, 7) + 1):
            for group, want in (
                ("S", math.factorial(n)),
                ("B", math.factorial(n) << n if n else 1),
                ("D", math.factorial(n) << (n - 1) if n else 1),
            ):
                if n > perms.enum_cap(group):
                    continue
                got = len(perms.group_elements(group, n))
                if got != want:
                    raise CheckFailure(f"{group}_{n} has {got} elements, wanted {want}")

    checks.append(run_check("descents/enumeration-counts", counts))

    def fib_counts():
        for n in range(0, 21):
            if len(perms.sparse_masks(n)) != perms.fibonacci(n):
                raise CheckFailure(f"sparse-set count wrong at n={n}")
            if n >= 1 and len(perms.interior_sparse_masks(n)) != perms.fibonacci(n - 1):
                raise CheckFailure(f"interior sparse-set count wrong at n={n}")

    checks.append(run_check("descents/fibonacci-counts", fib_counts))

    def oracle():
        for ctype in ("A", "B", "D"):
            group = perms.GROUP_OF_TYPE[ctype]
            lo = 2 if ctype == "D" else 1
            for n in range(lo, _cap(n_max, BFS_SUITE_CAP) + 1):
                for w in perms.group_elements(group, n):
                    if perms.descent_mask(w, ctype) != perms.length_descent_mask(w, ctype):
                        raise CheckFailure(f"descents disagree with lengths at {ctype}, {w}")

    checks.append(run_check("descents/length-oracle", oracle))

    def associativity():
        group = perms.group_elements("B", 3)
        for u in group:
            for v in group:
                uv = perms.compose(u, v)
                for w in group:
                    if perms.compose(uv, w) != perms.compose(u, perms.compose(v, w)):
                        raise CheckFailure(f"associativity fails at {u}, {v}, {w}")

    checks.append(run_check("descents/composition-associative-B3", associativity))

    def involutions():
        for n in range(1, _cap(n_max, 4) + 1):
            full = (1 << n) - 1
            for w in perms.group_elements("B", n):
                if perms.descent_mask(perms.sigma(w), "B") != full ^ perms.descent_mask(w, "B"):
                    raise CheckFailure(f"sign reversal fails to complement descents at {w}")
                if perms.forget_signs(perms.chi_element(w)) != perms.forget_signs(w):
                    raise CheckFailure(f"fold changes the underlying permutation at {w}")
            if n >= 2:
                for w in perms.group_elements("D", n):
                    if perms.rho_element(perms.rho_element(w)) != w:
                        raise CheckFailure(f"leading flip is not an involution at {w}")

    checks.append(run_check("descents/sign-maps", involutions))

    def peak_realization():
        for n in range(1, 9):
            classes = {
                m: 0 for m in perms.sparse_masks(n)
            }
            for u in perms.group_elements("S", n):
                classes[perms.peak_mask(u)] += 1
            empty = [bin(m) for m, c in classes.items() if c == 0]
            if empty:
                raise CheckFailure(f"unrealized peak sets at n={n}: {empty}")
            for u in perms.group_elements("S", n):
                if perms.lambda_mask(perms.descent_mask(u, "A")) != perms.peak_mask(u):
                    raise CheckFailure(f"peaks differ from collapsed descents at {u}")

    checks.append(run_check("descents/peak-sets-realized", peak_realization))

    def partition_and_inverse():
        for ctype in ("A", "B", "D"):
            lo = 2 if ctype == "D" else 1
            for n in range(lo, _cap(n_max, BFS_SUITE_CAP) + 1):
                if perms.GROUP_OF_TYPE[ctype] in ("B", "D") and n > 5:
                    continue
                classes = bases.descent_classes(ctype, n)
                total = sum(len(ws) for ws in classes.values())
                if total != len(perms.group_elements(perms.GROUP_OF_TYPE[ctype], n)):
                    raise CheckFailure(f"descent classes do not partition {ctype}_{n}")
                for m, ws in classes.items():
                    if not ws:  # an empty class would degrade the Y-basis
                        raise CheckFailure(f"unrealized descent set {bin(m)} in {ctype}_{n}")
                    back = bases.y_to_x_coords(bases.x_to_y_coords({m: 1}))
                    if back != {m: 1}:
                        raise CheckFailure(f"X/Y inversion fails at {ctype}, {bin(m)}")

    checks.append(run_check("descents/partition-and-xy-inverse", partition_and_inverse))

    def closure_tables():
        for n in range(1, _cap(n_max, 6) + 1):
            bases.structure_constants("A", n, "Y")
        cube_cap = CUBE_CAP_DEEP if deep else CUBE_CAP
        for ctype, lo in (("B", 1), ("D", 2)):
            for n in range(lo, _cap(n_max, cube_cap) + 1):
                table = bases.structure_constants(ctype, n, "Y", deep=deep)
                for row in table.cells:
                    for cell in row:
                        for c in cell:
                            if not (isinstance(c, int) and c >= 0):
                                raise CheckFailure(
                                    f"non-integer or negative constant in {table.name}"
                                )

    checks.append(run_check("descents/structure-closure", closure_tables))
    return checks


def suite_peaks(n_max: int, deep: bool = False) -> list:
    from . import peak as peakmod
    from .perms import fibonacci
    from .algebra import SpanSolver

    checks = []
    for n in range(1, _cap(n_max, 6) + 1):
        checks.extend(peakmod.verify_peak_theorems(n, closure_cap=6, ideal_cap=5))

    def dims():
        for n in range(1, 9):
            if peakmod.peak_solver(n).rank != fibonacci(n):
                raise CheckFailure(f"peak span rank != f_{n}")
            if peakmod.interior_peak_solver(n).rank != fibonacci(n - 1):
                raise CheckFailure(f"interior span rank != f_{n - 1}")

    checks.append(run_check("peaks/dimensions-to-8", dims))

    def pi_multiplicative():
        from .peak import peak_elements, pi_map

        for n in range(2, _cap(n_max, 4) + 1):
            elems = peak_elements(n)
            imgs = {m: pi_map(p) for m, p in elems}
            for m1, a in elems:
                for m2, b in elems:
                    if pi_map(a * b) != imgs[m1] * imgs[m2]:
                        raise CheckFailure(
                            f"projection not multiplicative at n={n}, ({bin(m1)}, {bin(m2)})"
                        )

    checks.append(run_check("peaks/projection-multiplicative", pi_multiplicative))

    def noncommutative():
        t = peakmod.peak_table(4)
        if t.cell(1, 3) == t.cell(3, 1):
            raise CheckFailure("expected noncommutativity witness missing in rank 4")

    checks.append(run_check("peaks/noncommutative-witness", noncommutative))

    def tables():
        for n in range(2, _cap(n_max, 4) + 1):
            peakmod.peak_table(n)

    checks.append(run_check("peaks/tables-build", tables))
    return checks


def suite_chi(n_max: int, deep: bool = False) -> list:
    from . import maps
    from .bases import descent_span_rank, x_label_elements, y_label_elements

    checks = []

    def closed_forms():
        for n in range(2, _cap(n_max, ELEMENT_CAP) + 1):
            for m, yj in y_label_elements("B", n):
                if maps.chi(yj) != maps.chi_on_y(n, m):
                    raise CheckFailure(f"fold Y closed form fails at n={n}, {bin(m)}")
            for m, xj in x_label_elements("B", n):
                if maps.chi(xj) != maps.chi_on_x(n, m):
                    raise CheckFailure(f"fold X closed form fails at n={n}, {bin(m)}")

    checks.append(run_check("chi/closed-forms", closed_forms))

    def image():
        for n in range(2, _cap(n_max, ELEMENT_CAP) + 1):
            fams = [
                maps.imchi_basis(n, m, i)
                for m in range(0, 1 << n, 4)
                for i in (1, 2, 3)
            ]
            r = descent_span_rank(fams, "D")
            if r != 3 << (n - 2):
                raise CheckFailure(f"three-class span rank wrong at n={n}")
            img = [maps.chi(yj) for _, yj in y_label_elements("B", n)]
            if descent_span_rank(img, "D") != r or descent_span_rank(fams + img, "D") != r:
                raise CheckFailure(f"fold image mismatch at n={n}")
            if (1 << n) - r != 1 << (n - 2):
                raise CheckFailure(f"fold image codimension wrong at n={n}")

    checks.append(run_check("chi/image-three-classes", image))

    def multiplicative():
        for n in range(2, _cap(n_max, 4) + 1):
            elems = y_label_elements("B", n)
            imgs = {m: maps.chi(yj) for m, yj in elems}
            for m1, a in elems:
                for m2, b in elems:
                    if maps.chi(a * b) != imgs[m1] * imgs[m2]:
                        raise CheckFailure(
                            f"fold not multiplicative at n={n}, ({bin(m1)}, {bin(m2)})"
                        )

    checks.append(run_check("chi/multiplicative", multiplicative))

    def support_counts():
        from .perms import descent_mask, group_elements

        for n in range(2, _cap(n_max, 4) + 1):
            count = sum(
                1
                for w in group_elements("D", n)
                if abs(w[0]) > abs(w[1]) and descent_mask(w, "D") & ~3 == 0
            )
            if len(maps.imchi_basis(n, 0, 2)) != count:
                raise CheckFailure(f"middle-class support count wrong at n={n}")

    checks.append(run_check("chi/class-support-counts", support_counts))

    for n in range(3, _cap(n_max, ELEMENT_CAP) + 1):
        checks.extend(maps.verify_diagram(maps.bd_triangles(n)))
    return checks


def suite_phi(n_max: int, deep: bool = False) -> list:
    from . import maps
    from .bases import x_label_elements, y_label_elements

    checks = []

    def closed_forms():
        for n in range(1, _cap(n_max, ELEMENT_CAP) + 1):
            for m, yj in y_label_elements("B", n):
                if maps.phi(yj) != maps.phi_on_y(n, m):
                    raise CheckFailure(f"sign-forgetting Y form fails at n={n}, {bin(m)}")
            for m, xj in x_label_elements("B", n):
                if maps.phi(xj) != maps.phi_on_x(n, m):
                    raise CheckFailure(f"sign-forgetting X form fails at n={n}, {bin(m)}")

    checks.append(run_check("phi/closed-forms", closed_forms))

    def ideal_forms():
        for n in range(1, _cap(n_max, ELEMENT_CAP) + 1):
            for m in maps.canonical_ideal_labels(n):
                if maps.phi(maps.x0_basis(n, m)) != maps.phi_on_x0(n, m):
                    raise CheckFailure(f"ideal X form fails at n={n}, {bin(m)}")
                if maps.phi(maps.y0_basis(n, m)) != maps.phi_on_y0(n, m):
                    raise CheckFailure(f"ideal Y form fails at n={n}, {bin(m)}")

    checks.append(run_check("phi/ideal-closed-forms", ideal_forms))

    def kernel_symmetry():
        for n in range(1, _cap(n_max, ELEMENT_CAP) + 1):
            full = (1 << n) - 1
            for m in range(1 << n):
                if maps.phi_on_y(n, m) != maps.phi_on_y(n, full ^ m):
                    raise CheckFailure(f"complement symmetry fails at n={n}, {bin(m)}")

    checks.append(run_check("phi/complement-symmetry", kernel_symmetry))

    def generator_image():
        for n in range(1, _cap(n_max, ELEMENT_CAP) + 1):
            if maps.phi(maps.x0_generator(n)) != maps.interior_peak_generator(n).scale(2):
                raise CheckFailure(f"increasing-class image wrong at n={n}")

    checks.append(run_check("phi/increasing-class-image", generator_image))

    def multiplicative():
        from .bases import y_label_elements

        for ctype, mapper, lo in (("B", maps.phi, 1), ("D", maps.psi, 2)):
            for n in range(lo, _cap(n_max, 4) + 1):
                elems = y_label_elements(ctype, n)
                images = {m: mapper(yj) for m, yj in elems}
                for m1, a in elems:
                    for m2, b in elems:
                        if mapper(a * b) != images[m1] * images[m2]:
                            raise CheckFailure(
                                f"not multiplicative at {ctype}, n={n}, "
                                f"({bin(m1)}, {bin(m2)})"
                            )

    checks.append(run_check("phi/multiplicative", multiplicative))
    return checks


def suite_psi(n_max: int, deep: bool = False) -> list:
    from . import maps
    from .bases import x_label_elements, y_label_elements

    CASE = {0: "plain", 1: "oneprime", 2: "one", 3: "both"}
    checks = []

    def closed_forms():
        for n in range(2, _cap(n_max, ELEMENT_CAP) + 1):
            for m, yj in y_label_elements("D", n):
                if maps.psi(yj) != maps.psi_on_y(n, m & ~3, CASE[m & 3]):
                    raise CheckFailure(f"type-D Y form fails at n={n}, {bin(m)}")
            for m, xj in x_label_elements("D", n):
                if maps.psi(xj) != maps.psi_on_x(n, m & ~3, CASE[m & 3]):
                    raise CheckFailure(f"type-D X form fails at n={n}, {bin(m)}")

    checks.append(run_check("psi/closed-forms", closed_forms))

    def fork_equality():
        for n in range(2, _cap(n_max, ELEMENT_CAP) + 1):
            for m in range(0, 1 << n, 4):
                if maps.psi_on_y(n, m, "one") != maps.psi_on_y(n, m, "oneprime"):
                    raise CheckFailure(f"fork images differ at n={n}, {bin(m)}")

    checks.append(run_check("psi/fork-equality", fork_equality))

    def rho_invariance():
        from .perms import group_elements

        for n in range(2, _cap(n_max, 4) + 1):
            for w in group_elements("D", n):
                if maps.psi(maps.rho_map(maps.AlgElem.monomial("D", n, w))) != maps.psi(
                    maps.AlgElem.monomial("D", n, w)
                ):
                    raise CheckFailure(f"leading flip changes the image at {w}")

    checks.append(run_check("psi/flip-invariance", rho_invariance))
    return checks


def suite_ideals(n_max: int, deep: bool = False) -> list:
    from . import maps
    from .algebra import NOT_IN_SPAN, express_in_span
    from .bases import y_basis, y_label_elements, descent_span_rank
    from .peak import interior_peak_basis, interior_peak_coordinates, interior_peak_elements
    from .perms import fibonacci

    checks = []

    def beta_gamma_multiplicative():
        for n in range(2, _cap(n_max, 4) + 1):
            elems = y_label_elements("B", n)
            imgs = {m: maps.beta_map(yj) for m, yj in elems}
            for m1, a in elems:
                for m2, b in elems:
                    if maps.beta_map(a * b) != imgs[m1] * imgs[m2]:
                        raise CheckFailure(f"degree drop not multiplicative at n={n}")
        for n in range(3, _cap(n_max, 4) + 1):
            elems = y_label_elements("D", n)
            imgs = {m: maps.gamma_map(yj) for m, yj in elems}
            for m1, a in elems:
                for m2, b in elems:
                    if maps.gamma_map(a * b) != imgs[m1] * imgs[m2]:
                        raise CheckFailure(f"type-D drop not multiplicative at n={n}")

    checks.append(run_check("ideals/drops-multiplicative", beta_gamma_multiplicative))

    def canonical_two_sided():
        from .maps import x_support_coords

        for n in range(1, _cap(n_max, 4 if not deep else 5) + 1):
            allowed = frozenset((m | 1) for m in maps.canonical_ideal_labels(n))
            coords = x_support_coords("B", allowed)
            ideal = [e for _, e in maps.canonical_ideal_basis(n)]
            algebra = [yj for _, yj in y_label_elements("B", n)]
            for a in algebra:
                for x0 in ideal:
                    if coords(a * x0) is None or coords(x0 * a) is None:
                        raise CheckFailure(f"canonical ideal not two-sided at n={n}")

    checks.append(run_check("ideals/canonical-two-sided", canonical_two_sided))

    def kernel_spans():
        for n in range(2, _cap(n_max, ELEMENT_CAP) + 1):
            for m in maps.canonical_ideal_labels(n):
                if maps.beta_map(maps.x0_basis(n, m)):
                    raise CheckFailure(f"ideal element survives the drop at n={n}")
            imgs = [maps.beta_map(yj) for _, yj in y_label_elements("B", n)]
            if descent_span_rank(imgs, "B") != 1 << (n - 1):
                raise CheckFailure(f"drop is not onto at n={n}")

    checks.append(run_check("ideals/kernel-of-drop", kernel_spans))

    def images_onto_interior():
        for n in range(2, _cap(n_max, ELEMENT_CAP) + 1):
            interior = [e for _, e in interior_peak_elements(n)]
            for family in (maps.canonical_ideal_basis(n), maps.ker_beta2_basis(n)):
                rows = []
                for _, b in family:
                    img = maps.phi(b)
                    c = interior_peak_coordinates(img)
                    if c is None:
                        raise CheckFailure(f"image leaves the interior ideal at n={n}")
                    rows.append(c)
                from .bases import coord_rank

                if coord_rank(rows) != fibonacci(n - 1):
                    raise CheckFailure(f"image is not all of the interior ideal at n={n}")

    checks.append(run_check("ideals/images-onto-interior", images_onto_interior))

    def no_intermediate_morphism():
        for n in range(3, 21):
            if not fibonacci(n - 1) > fibonacci(n - 2):
                raise CheckFailure(f"dimension obstruction fails at n={n}")

    checks.append(run_check("ideals/dimension-obstruction", no_intermediate_morphism))

    def left_ideal_failure():
        w = y_basis("A", 3, 0b10) * interior_peak_basis(3, 0b100)
        if (
            express_in_span(w, [e for _, e in interior_peak_elements(3)])
            is not NOT_IN_SPAN
        ):
            raise CheckFailure("expected left-ideal failure witness is in the span")
        # the canonical ideal is likewise not a left ideal upstairs
        from .maps import x0_basis, x_support_coords
        from .mr import t_basis

        coordz = x_support_coords(
            "B", frozenset((m | 1) for m in maps.canonical_ideal_labels(3))
        )
        if coordz(t_basis(3, (1, 1, 1)) * x0_basis(3, 0)) is not None:
            raise CheckFailure("expected type-B left-ideal failure witness is in the span")

    checks.append(run_check("ideals/left-ideal-failure-witness", left_ideal_failure))
    return checks


def suite_exactseq(n_max: int, deep: bool = False) -> list:
    from . import maps
    from .commutative import sbexact_diagram

    checks = []
    for n in range(3, _cap(n_max, 5) + 1):
        checks.extend(maps.verify_diagram(maps.bexact_diagram(n)))
        checks.extend(maps.verify_diagram(maps.dexact_diagram(n)))
    for n in range(4, _cap(n_max, 6) + 1):
        checks.extend(maps.verify_diagram(sbexact_diagram(n)))
    return checks


def suite_commutative(n_max: int, deep: bool = False) -> list:
    from . import commutative as comm

    checks = []
    for n in range(2, _cap(n_max, 6) + 1):
        checks.append(
            run_check(f"commutative/builders/n={n}", lambda n=n: comm.check_builder_relations(n))
        )
        checks.append(
            run_check(f"commutative/phi-forms/n={n}", lambda n=n: comm.check_phi_number_forms(n))
        )
        checks.append(
            run_check(f"commutative/beta-forms/n={n}", lambda n=n: comm.check_beta_number_forms(n))
        )
        checks.append(
            run_check(f"commutative/pi-forms/n={n}", lambda n=n: comm.check_pi_number_forms(n))
        )
        checks.append(
            run_check(f"commutative/ker-beta2/n={n}", lambda n=n: comm.check_ker_beta2_on_sol(n))
        )
        checks.append(
            run_check(f"commutative/dimensions/n={n}", lambda n=n: comm.check_graded_dimensions(n))
        )
    for n in range(2, _cap(n_max, 6) + 1):
        checks.append(
            run_check(f"commutative/whp-closure/n={n}", lambda n=n: comm.check_whp_closure(n))
        )
        checks.append(
            run_check(f"commutative/whp-table/n={n}", lambda n=n: comm.whp_table(n))
        )
    cube_cap = CUBE_CAP_DEEP if deep else CUBE_CAP
    for n in range(2, _cap(n_max, cube_cap) + 1):
        checks.append(
            run_check(
                f"commutative/solhat-closure/n={n}", lambda n=n: comm.check_solhat_closure(n)
            )
        )
    for n in range(2, _cap(n_max, ELEMENT_CAP) + 1):
        checks.append(
            run_check(f"commutative/type-d-images/n={n}", lambda n=n: comm.check_type_d_numbers(n))
        )

    def wp_dims_high():
        from .commutative import check_wp_dimensions

        for n in range(2, 9):
            check_wp_dimensions(n)

    checks.append(run_check("commutative/peak-side-dimensions-to-8", wp_dims_high))

    def loday():
        if comm.loday_witness("p") != (4, "p_1"):
            raise CheckFailure("peak-count non-containment witness moved")
        if comm.loday_witness("pint") != (3, "p0_1"):
            raise CheckFailure("interior non-containment witness moved")

    checks.append(run_check("commutative/not-in-descent-count-span", loday))
    return checks


def suite_mr(n_max: int, deep: bool = False) -> list:
    from . import mr

    checks = []

    def counts():
        for n in range(1, 9):
            if len(mr.signed_compositions(n)) != 2 * 3 ** (n - 1):
                raise CheckFailure(f"signed composition count wrong at n={n}")

    checks.append(run_check("mr/signed-composition-counts", counts))

    def operators():
        a = (-2, 1, -1, -2, 2, 2, 3)
        if mr.segments(a) != [(-2,), (1,), (-1, -2), (2, 2, 3)]:
            raise CheckFailure("segment decomposition is wrong")
        if mr.underline(a) != (4, 4, 2, 3) or mr.o_comp(a) != (1, 1, 1, 1, 1, 1, 2, 2, 3):
            raise CheckFailure("alternation/flatten operators are wrong")
        if mr.u_comp(a) != (1, 4, 8):
            raise CheckFailure("complement-merge operator is wrong")
        b = (3, -2, -1, -2, 4, 2, -3, 1)
        if mr.tilde(b) != (3, -1, -3, -1, 4, 2, -1, -1, -1, 1):
            raise CheckFailure("segment complement operator is wrong")
        for n in range(1, _cap(n_max, 6) + 1):
            for alpha in mr.signed_compositions(n):
                if mr.tilde(mr.tilde(alpha)) != alpha:
                    raise CheckFailure(f"segment complement is not an involution at {alpha}")

    checks.append(run_check("mr/operators", operators))

    def orders():
        if not mr.leq((-2, 1, -3, 2, 5), (-2, 1, -1, -2, 2, 2, 3)):
            raise CheckFailure("refinement order example fails")
        if not mr.preceq((-2, 1, -1, -2, 2, 2, 3), (-2, 1, -3, 2, 1, 1, 3)):
            raise CheckFailure("flipped order example fails")
        for n in range(1, _cap(n_max, 4) + 1):
            comps = mr.signed_compositions(n)
            for rel in (mr.leq, mr.preceq):
                for a in comps:
                    if not rel(a, a):
                        raise CheckFailure(f"order not reflexive at {a}")
                ups = {a: [b for b in comps if rel(a, b)] for a in comps}
                for a in comps:
                    for b in ups[a]:
                        if a != b and rel(b, a):
                            raise CheckFailure(f"order not antisymmetric at {a}, {b}")
                        for c in ups[b]:
                            if not rel(a, c):
                                raise CheckFailure(f"order not transitive at {a}, {b}, {c}")

    checks.append(run_check("mr/order-axioms", orders))

    def recovery():
        if mr.mr_class_of((-3, 4, 6, 1, 7, -5, -2, -8)) != (-1, 2, 2, -1, -2):
            raise CheckFailure("class recovery example fails")

    checks.append(run_check("mr/class-recovery", recovery))

    for n in range(1, _cap(n_max, ELEMENT_CAP) + 1):
        checks.append(run_check(f"mr/partition/n={n}", lambda n=n: mr.check_t_partition(n)))
    for n in range(1, _cap(n_max, 4) + 1):
        checks.append(run_check(f"mr/order-sums/n={n}", lambda n=n: mr.check_order_sums(n)))
    for n in range(1, _cap(n_max, 4 if deep else 3) + 1):
        checks.append(run_check(f"mr/closure/n={n}", lambda n=n: mr.check_omega_closure(n)))
    for n in range(1, _cap(n_max, ELEMENT_CAP) + 1):
        checks.append(run_check(f"mr/phi-images/n={n}", lambda n=n: mr.check_phi_images(n)))
        checks.append(
            run_check(f"mr/phi-onto/n={n}", lambda n=n: mr.check_phi_onto_descent_algebra(n))
        )

    def key_products():
        for n in range(1, _cap(n_max, ELEMENT_CAP) + 1):
            for alpha in mr.signed_compositions(n):
                mr.bstilde_product(n, alpha)

    checks.append(run_check("mr/increasing-class-products", key_products))
    return checks


def suite_theta(n_max: int, deep: bool = False) -> list:
    from . import maps, mr
    from .bases import comp_to_subset, x_basis, y_label_elements
    from .peak import (
        interior_peak_basis,
        interior_peak_coordinates,
        interior_peak_elements,
        peak_elements,
    )
    from .perms import interior_sparse_masks
    from .algebra import AlgElem

    checks = []

    def type_b_form():
        for n in range(1, _cap(n_max, ELEMENT_CAP) + 1):
            for alpha in mr.signed_compositions(n):
                mask = 0
                for j in comp_to_subset(mr.abs_comp(alpha), n):
                    mask |= 1 << j
                if maps.theta_pm(mr.stilde_basis(n, alpha)) != maps.x0_basis(n, mask):
                    raise CheckFailure(f"type-B transform value wrong at {alpha}")

    checks.append(run_check("theta/type-b-values", type_b_form))

    def type_a_form():
        for n in range(1, _cap(n_max, ELEMENT_CAP) + 1):
            for mm in range(1 << (n - 1)):
                mask = mm << 1
                window = mask | (mask << 1)
                want = AlgElem.zero("S", n)
                for fm in interior_sparse_masks(n):
                    if fm & ~window == 0:
                        want += interior_peak_basis(n, fm).scale(
                            1 << (1 + bin(mask).count("1"))
                        )
                if maps.theta(x_basis("A", n, mask)) != want:
                    raise CheckFailure(f"transform value wrong at mask {bin(mask)}")

    checks.append(run_check("theta/type-a-values", type_a_form))

    def square():
        for n in range(1, _cap(n_max, ELEMENT_CAP) + 1):
            for alpha in mr.signed_compositions(n):
                a = mr.stilde_basis(n, alpha)
                if maps.phi(maps.theta_pm(a)) != maps.theta(maps.phi(a)):
                    raise CheckFailure(f"transform square fails at {alpha}")

    checks.append(run_check("theta/square-with-sign-forgetting", square))

    def bijective():
        for n in range(1, _cap(n_max, ELEMENT_CAP) + 1):
            maps.check_theta_pm_bijective(n)

    checks.append(run_check("theta/bijective-on-ideal", bijective))

    def bijective_downstairs():
        from .algebra import span_rank
        from .perms import fibonacci

        for n in range(2, _cap(n_max, ELEMENT_CAP) + 1):
            imgs = [maps.theta(p) for _, p in interior_peak_elements(n)]
            if span_rank(imgs) != fibonacci(n - 1):
                raise CheckFailure(
                    f"restricted transform is not bijective on the interior ideal at n={n}"
                )

    checks.append(run_check("theta/bijective-on-interior", bijective_downstairs))

    def images():
        from .algebra import span_rank
        from .perms import fibonacci

        for n in range(2, _cap(n_max, ELEMENT_CAP) + 1):
            imgs = [maps.theta(yj) for _, yj in y_label_elements("A", n)]
            ideal = [e for _, e in interior_peak_elements(n)]
            if span_rank(imgs) != fibonacci(n - 1) or span_rank(imgs + ideal) != fibonacci(n - 1):
                raise CheckFailure(f"transform image is not the interior ideal at n={n}")

    checks.append(run_check("theta/image-is-interior-ideal", images))

    def principal():
        from .maps import x_support_coords

        top = _cap(n_max, 5) if deep else _cap(n_max, 4)
        for n in range(3, top + 1):
            gen_p = maps.interior_peak_generator(n)
            maps.right_ideal_check(
                gen_p,
                y_label_elements("A", n),
                interior_peak_elements(n),
                interior_peak_coordinates,
                f"interior ideal of the descent algebra, n={n}",
            )
            maps.right_ideal_check(
                gen_p,
                peak_elements(n),
                interior_peak_elements(n),
                interior_peak_coordinates,
                f"interior ideal of the peak algebra, n={n}",
            )
            gen_b = maps.x0_generator(n)
            coordz = x_support_coords(
                "B", frozenset((m | 1) for m in maps.canonical_ideal_labels(n))
            )
            maps.right_ideal_check(
                gen_b,
                y_label_elements("B", n),
                maps.canonical_ideal_basis(n),
                coordz,
                f"canonical ideal of the type-B descent algebra, n={n}",
            )
            maps.right_ideal_check(
                gen_b,
                [(a, mr.t_basis(n, a)) for a in mr.signed_compositions(n)],
                maps.canonical_ideal_basis(n),
                coordz,
                f"canonical ideal of the Mantaci-Reutenauer algebra, n={n}",
            )

    checks.append(run_check("theta/principal-right-ideals", principal))
    return checks


def suite_hopf(n_max: int, deep: bool = False) -> list:
    from . import hopf
    from .perms import group_elements

    checks = []
    dmax = _cap(n_max, 6)

    def singles():
        for n in range(0, dmax + 1):
            for w in group_elements("B", n):
                hopf.check_split_reassembly(w)
                hopf.check_coassociative(w)
                hopf.check_counit(w)

    checks.append(run_check("hopf/coassociative-counit-singles", singles))
    checks.append(run_check("hopf/concat-type-a", lambda: hopf.check_sola_star(dmax)))
    checks.append(run_check("hopf/concat-ideal", lambda: hopf.check_i0_star(dmax)))
    checks.append(
        run_check("hopf/concat-type-b-module", lambda: hopf.check_solb_module_star(dmax))
    )
    checks.append(run_check("hopf/concat-mr", lambda: hopf.check_omega_star(dmax)))
    checks.append(
        run_check(
            "hopf/generator-coproducts", lambda: hopf.check_coproduct_generators(dmax)
        )
    )
    checks.append(
        run_check(
            "hopf/coproduct-closures",
            lambda: hopf.check_delta_closures(_cap(dmax, 5)),
        )
    )
    checks.append(
        run_check(
            "hopf/interior-shuffle-closure", lambda: hopf.check_pint_star_closure(dmax)
        )
    )
    checks.append(
        run_check("hopf/peak-module-closure", lambda: hopf.check_peak_module_star(dmax))
    )
    checks.append(
        run_check(
            "hopf/peak-not-closed-witness", hopf.check_peak_not_closed_witness
        )
    )
    checks.append(
        run_check(
            "hopf/shuffle-coefficients-distinct",
            lambda: hopf.check_shuffle_coefficients(_cap(n_max, 6)),
        )
    )
    theta_cap = _cap(n_max, 5)
    checks.append(
        run_check("hopf/transform-morphisms", lambda: hopf.check_theta_hopf(theta_cap))
    )
    checks.append(
        run_check(
            "hopf/drop-via-coproduct", lambda: hopf.check_beta_via_coproduct(theta_cap)
        )
    )
    checks.append(
        run_check(
            "hopf/module-morphisms", lambda: hopf.check_module_morphisms(theta_cap)
        )
    )
    checks.append(
        run_check(
            "hopf/internal-coproduct-compat",
            lambda: hopf.check_delta_internal_compat(theta_cap),
        )
    )
    checks.append(run_check("hopf/free-module", lambda: hopf.check_free_module(theta_cap)))
    checks.append(
        run_check(
            "hopf/ideal-type-a-isomorphism",
            lambda: hopf.check_i0_sola_isomorphism(_cap(n_max, 5)),
        )
    )
    return checks


def suite_words(n_max: int, deep: bool = False) -> list:
    from . import words

    nontrivial = words.Alphabet(("a", "b", "c"), {"a": "b", "b": "a", "c": "c"})
    trivial = words.Alphabet(("a", "b", "c"))
    checks = []

    def symmetrizers():
        for n in range(1, _cap(n_max, 4) + 1):
            words.check_symmetrizer_identity(n, nontrivial)
            words.check_symmetrizer_identity(n, trivial)

    checks.append(run_check("words/symmetrizer-identity", symmetrizers))

    def brackets():
        for n in range(1, _cap(n_max + 1, 5) + 1):
            words.check_bracket_identity(n, trivial)

    checks.append(run_check("words/bracket-identity", brackets))
    checks.append(
        run_check(
            "words/right-action-law",
            lambda: words.check_right_action(_cap(n_max, 3), nontrivial),
        )
    )
    checks.append(
        run_check(
            "words/algebra-morphism",
            lambda: words.check_action_algebra_morphism(2, nontrivial),
        )
    )

    def convolution():
        for p, q in ((1, 1), (1, 2), (2, 1)):
            if p + q <= _cap(n_max + 1, 3):
                words.check_convolution(p, q, nontrivial)

    checks.append(run_check("words/convolution", convolution))
    return checks


SUITES = {
    "descents": suite_descents,
    "peaks": suite_peaks,
    "chi": suite_chi,
    "phi": suite_phi,
    "psi": suite_psi,
    "ideals": suite_ideals,
    "exactseq": suite_exactseq,
    "commutative": suite_commutative,
    "mr": suite_mr,
    "theta": suite_theta,
    "hopf": suite_hopf,
    "words": suite_words,
}


def _run_one(args) -> list:
    name, n_max, deep = args
    return SUITES[name](n_max, deep)


def run_suite(name: str, n_max: int, *, deep: bool = False, jobs: int = 1) -> VerifyReport:
    if name != "all" and name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    names = list(SUITES) if name == "all" else [name]
    report = VerifyReport(suite=name)
    if len(names) > 1 and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for result in pool.map(_run_one, [(s, n_max, deep) for s in names]):
                report.checks.extend(result)
    else:
        for s in names:
            report.checks.extend(SUITES[s](n_max, deep))
    report.checks.sort(key=lambda c: c.check_id)
    return report
