"""Exit criteria. Every check is exact; each test records one PASS/FAIL line
that is printed in the pytest terminal summary."""
import itertools

from tetrahedral import fourier_motzkin as fm
from tetrahedral import tetra
from tetrahedral.fourier_motzkin import LinearSystem, eq, ge
from tetrahedral.monomial_ideal import max_exponents, tetra_ideal
from tetrahedral.s_module import beg_end_diam, enumerate_s, in_s, k_direct
from tetrahedral.simplicial import SimplicialComplex, reduced_euler_characteristic, reduced_homology_dim
from tetrahedral.takayama import delta_alpha, delta_alpha_via_localization, h1_table

from conftest import tuples
from test_simplicial import all_complexes


def brute_s_degree(a, d):
    return [y for y in itertools.product(range(d + 1), repeat=4) if sum(y) == d and in_s(a, y)]


def test_oracle_equivalence_sweep(criterion):
    failures = []
    for a in tuples(3):
        b, _ = tetra.normalize_star(a)
        table = h1_table(tetra_ideal(b))
        acm = tetra.is_acm(b)
        if (not table) != acm:
            failures.append((a, "acm"))
        if not acm and table.degrees() != list(range(tetra.script_a(b), b[0] + b[5] - 1)):
            failures.append((a, "support"))
        if any(d != 1 for d in table.entries.values()):
            failures.append((a, "dim"))
        if table.support() != set(enumerate_s(b).points):
            failures.append((a, "S"))
    criterion("1 oracle equivalence sweep, 4095 tuples a_i <= 3", not failures, f"{len(failures)} failures")
    assert not failures, failures[:10]


def test_k_equals_diameter(criterion):
    failures, checked = [], 0
    for a in tuples(4):
        b, _ = tetra.normalize_star(a)
        if tetra.is_acm(b):
            continue
        checked += 1
        s = enumerate_s(b)
        formula = b[0] + b[5] - tetra.script_a(b) - 1
        if not k_direct(s) == beg_end_diam(s)[2] == formula:
            failures.append(a)
    criterion("2 k_direct = diam(S) = a1+a6-A-1, non-ACM a_i <= 4", not failures, f"{checked} tuples")
    assert checked and not failures, failures[:10]


def test_francisco_equivalence(criterion):
    checked = [a for a in tuples(6) if tetra.satisfies_star(a)]
    failures = [a for a in checked if tetra.is_acm(a) != tetra.is_acm_francisco(a)]
    criterion("3 is_acm == is_acm_francisco, a_i <= 6 normalized", not failures, f"{len(checked)} tuples")
    assert not failures, failures[:10]


def test_feasible_degrees_three_ways(criterion):
    failures, cases = [], 0
    for a in tuples(3):
        b, _ = tetra.normalize_star(a)
        degrees = tetra.feasible_degrees(b)
        for d in range(b[0] + b[5] + 1):
            cases += 1
            point = fm.integer_point(fm.tetra_system(b, d))
            brute = brute_s_degree(b, d)
            if point is not None and point not in brute:
                failures.append((a, d, "bad point"))
            if not (d in degrees) == (point is not None) == bool(brute):
                failures.append((a, d))
    criterion("4 feasible degrees: closed form = integer_point = brute force", not failures, f"{cases} (tuple, d) cases")
    assert not failures, failures[:10]


def test_worked_elimination_example(criterion):
    system = LinearSystem(("y1", "y2", "y3"), (
        ge({"y1": 1, "y2": 2, "y3": -1}, -4),
        ge({"y1": -2, "y2": 1, "y3": 3}, 2),
        ge({"y2": 2, "y3": -1}, 0),
        eq({"y1": 1, "y2": -1, "y3": -1}, 0),
    ))
    target = LinearSystem(("y2", "y3"), (
        ge({"y2": fm.Fraction(-1, 2), "y3": fm.Fraction(1, 2)}, 1),
        ge({"y2": 3}, -4),
        ge({"y2": 2, "y3": -1}, 0),
    ))
    pruned = fm.remove_redundant(fm.eliminate(fm.normalize(system), "y1"))
    ok = fm.implies(pruned, target) and fm.implies(target, pruned)
    criterion("5 eliminating y1 and pruning matches the reference projection", ok)
    assert ok


def test_reference_point_values(criterion):
    s = enumerate_s((1, 0, 0, 0, 0, 1))
    checks = [
        s.points == ((0, 0, 0, 0),),
        tetra.diameter((1, 0, 0, 0, 0, 1)) == 1,
        tetra.is_buchsbaum((1, 0, 0, 0, 0, 1)),
        tetra.is_buchsbaum((2, 0, 1, 1, 0, 2)) and tetra.diameter((2, 0, 1, 1, 0, 2)) == 1,
    ]
    checks += [tetra.diameter((k, k - 1, 0, 0, k - 1, k + 1)) == 2 for k in range(1, 11)]
    checks += [tetra.diameter((k, k - 2, 0, 0, k - 1, k)) == 2 for k in range(2, 11)]
    criterion("6 point values and diameter-two families k <= 10", all(checks))
    assert all(checks)


def test_minimal_curves(criterion):
    minimal = [a for a in tuples(5) if a[5] == max(a) and tetra.is_minimal(a)]
    failures = [
        a for a in minimal
        if tetra.is_acm(a) or tetra.is_buchsbaum(a) != tetra.buchsbaum_minimal_pattern(a)
    ]
    criterion("7 minimal curves a_i <= 5: never ACM, Buchsbaum iff pattern", not failures, f"{len(minimal)} curves")
    assert minimal and not failures, failures[:10]


def test_degree_complex_two_ways(criterion):
    failures, cases = [], 0
    for a in tuples(3):
        ideal = tetra_ideal(a)
        rho = max_exponents(ideal)
        for alpha in itertools.product(*(range(-1, r + 1) for r in rho)):
            cases += 1
            if delta_alpha(ideal, alpha) != delta_alpha_via_localization(ideal, alpha):
                failures.append((a, alpha))
    criterion("8 degree complex by quantifier == by localization", not failures, f"{cases} (tuple, alpha) cases")
    assert not failures, failures[:10]


def test_homology_engine(criterion):
    complexes = all_complexes(4)
    euler = all(
        sum((-1) ** q * reduced_homology_dim(c, q) for q in range(-1, 4)) == reduced_euler_characteristic(c)
        for c in complexes
    )
    empty = reduced_homology_dim(SimplicialComplex.empty_face(), -1) == 1
    matching = reduced_homology_dim(SimplicialComplex.from_faces([{1, 2}, {3, 4}]), 0) == 1
    ok = euler and empty and matching and len(complexes) == 168
    criterion("9 homology engine: Euler identity on all 168 complexes, base cases", ok)
    assert ok


def test_floor_ceiling_parity(criterion):
    failures, cases = [], 0
    for a in tuples(4):
        lo, hi = max(a[1] + a[4], a[2] + a[3]), a[0] + a[5] - 2
        for d in range(lo, hi + 1):
            cases += 1
            if tetra.parity_obstruction(a, d) != tetra.parity_characterization(a):
                failures.append((a, d))
    criterion("10 floor/ceiling test == parity characterization, a_i <= 4", not failures, f"{cases} cases")
    assert cases and not failures, failures[:10]
