"""One test per acceptance criterion; the summary lists a PASS/FAIL line for each."""

import itertools
import random

from vslinks.algebra import DualInt, FgAbelianGroup, GroupRingElement, LaurentPoly, Matrix, dual_matrix
from vslinks.algebra.snf import IntegerSolver
from vslinks.bowling import burau, matrix_invariant, matrix_invariant_oracle, permutation_rep_fvb3, rho
from vslinks.diagram import (
    BraidWord,
    CrossingKind,
    Letter,
    closure,
    from_braid_word,
    insert_kink,
    parse_word,
    remove_kink,
    structurally_equal,
)
from vslinks.homology import (
    Cochain2,
    apply_linear,
    basis,
    boundary_sf,
    boundary_vf,
    coboundary,
    degenerate_generators,
    enumerate_cocycles,
    is_state_sum_cocycle,
)
from vslinks.linking import a_i, lk, lk_v, virtual_between_count
from vslinks.rewriting import random_rewrite, random_word
from vslinks.statesum import state_sum, verify_coboundary_invariance
from vslinks.vfb import constant_action_vfb, count_colorings, shipped_vfbs, trivial_vfb

Z = FgAbelianGroup.integers()
PHI = Cochain2("Z", [[0, 1], [-1, 0]])
H = closure("n=2 f1 t1")
T = closure("n=2")


def criterion(label):
    def mark(fn):
        fn.criterion = label
        return fn
    return mark


def report(label, ok):
    print(f"{'PASS' if ok else 'FAIL'}  {label}")
    assert ok


def s(i):
    return Letter("s", i, False)


def S_(i):
    return Letter("s", i, True)


def t(i):
    return Letter("t", i, False)


def relation_instances(n):
    """Both sides of every defining relation of VB_n, for every valid index."""
    idx = range(1, n)
    for i, j in itertools.product(idx, repeat=2):
        if abs(i - j) > 1:
            yield "sigma_far", [s(i), s(j)], [s(j), s(i)]
            yield "tau_far", [t(i), t(j)], [t(j), t(i)]
            yield "mixed_far", [s(i), t(j)], [t(j), s(i)]
    for i in idx:
        yield "tau_square", [t(i), t(i)], []
        yield "inverse_pair", [s(i), S_(i)], []
        if i + 1 < n:
            yield "sigma_braid", [s(i), s(i + 1), s(i)], [s(i + 1), s(i), s(i + 1)]
            yield "tau_braid", [t(i), t(i + 1), t(i)], [t(i + 1), t(i), t(i + 1)]
            yield "mixed", [s(i), t(i + 1), t(i)], [t(i + 1), t(i), s(i + 1)]


def random_diagrams(seed, count, max_n=4, max_len=20, kinks=True):
    rng = random.Random(seed)
    for _ in range(count):
        w = random_word(rng, rng.randint(1, max_n), rng.randint(0, max_len))
        d = from_braid_word(w)
        if kinks and rng.random() < 0.3:
            path = rng.randrange(d.n)
            kind = rng.choice([CrossingKind.VIRTUAL, CrossingKind.POSITIVE, CrossingKind.NEGATIVE])
            d = insert_kink(d, path, rng.randint(0, len(d.strands[path])), kind, rng.choice([1, -1]))
        yield w, d


@criterion("1. generator matrices and VB_n relations under rho")
def test_criterion_01():
    ok = True
    for n in range(2, 6):
        for i in range(1, n):
            sigma = Matrix.block(n, i - 1, ((0, 1), (1, 0)))
            tau = Matrix.block(n, i - 1, ((DualInt(0, 1), DualInt(1, 1)), (DualInt(1, -1), DualInt(0, -1))))
            ok &= rho(BraidWord(n, (s(i),))) == sigma
            ok &= rho(BraidWord(n, (S_(i),))) == sigma
            ok &= rho(BraidWord(n, (t(i),))) == tau
        names = set()
        for name, lhs, rhs in relation_instances(n):
            names.add(name)
            ok &= rho(BraidWord(n, tuple(lhs))) == rho(BraidWord(n, tuple(rhs)))
        if n >= 4:
            ok &= len(names) == 8
    report("1. generator matrices and VB_n relations under rho", ok)


@criterion("2. rho((s1 t1)^m) and rho((t1 s1)^m)")
def test_criterion_02():
    ok = True
    for m in range(1, 11):
        a = rho(parse_word("n=2 " + "s1 t1 " * m))
        b = rho(parse_word("n=2 " + "t1 s1 " * m))
        ok &= a == Matrix([[DualInt(1, -m), DualInt(0, -m)], [DualInt(0, m), DualInt(1, m)]])
        ok &= b == Matrix([[DualInt(1, m), DualInt(0, m)], [DualInt(0, -m), DualInt(1, -m)]])
    report("2. rho((s1 t1)^m) and rho((t1 s1)^m)", ok)


@criterion("3. kernel element of rho with nontrivial flat image")
def test_criterion_03():
    ok = rho("s2 t1 s1 t2 s2 s1 t1 s2 t2 s2") == Matrix.identity(3)
    r = permutation_rep_fvb3("f2 t1 f1 t2 f2 f1 t1 f2 t2 f2")
    ok &= r == (3, 1, 2) and r != (1, 2, 3)
    report("3. kernel element of rho with nontrivial flat image", ok)


@criterion("4. reference 2-string matrices")
def test_criterion_04():
    reference = {
        "s1": [["0", "1"], ["1", "0"]],
        "t1": [["s", "1-s"], ["1+s", "-s"]],
        "t1 s1 t1": [["2s", "1-2s"], ["1+2s", "-2s"]],
        "s1 t1 s1": [["-s", "1+s"], ["1-s", "s"]],
        "t1 s1": [["1+s", "-s"], ["s", "1-s"]],
    }
    ok = True
    for word, rows in reference.items():
        w = parse_word(word, 2)
        m = matrix_invariant(from_braid_word(w))
        ok &= m == dual_matrix(rows)
        ok &= m.T == rho(w)
    report("4. reference 2-string matrices", ok)


@criterion("5. transpose law on 1000 random words")
def test_criterion_05():
    rng = random.Random(1005)
    bad = 0
    for _ in range(1000):
        w = random_word(rng, rng.randint(1, 4), rng.randint(0, 20))
        bad += matrix_invariant(from_braid_word(w)).T != rho(w)
    report("5. transpose law on 1000 random words", bad == 0)


@criterion("6. row sums and unit-part structure")
def test_criterion_06():
    ok = True
    for _, d in random_diagrams(1006, 1000):
        m = matrix_invariant(d)
        ok &= all(x == 1 for x in m.row_sums())
        for i, j in itertools.product(range(d.n), repeat=2):
            ok &= m[i, j].real == (1 if j == d.perm[i] else 0)
        if not d.virtual_crossings():
            ok &= all(x.eps == 0 for row in m.rows for x in row)
    report("6. row sums and unit-part structure", ok)


@criterion("7. M, lk, lk_v unchanged by rewrites and kink cycles")
def test_criterion_07():
    rng = random.Random(1007)
    failures = 0
    for trial in range(1000):
        n = 2 if trial % 2 == 0 else rng.randint(1, 4)
        w = random_word(rng, n, rng.randint(0, 12))
        d = from_braid_word(w)
        base = (matrix_invariant(d), lk(d) if n == 2 else None, lk_v(d) if n == 2 else None)
        w2, _ = random_rewrite(w, rng.randint(1, 15), trial)
        d2 = from_braid_word(w2)
        failures += (matrix_invariant(d2), lk(d2) if n == 2 else None, lk_v(d2) if n == 2 else None) != base
        path = rng.randrange(n)
        pos = rng.randint(0, len(d.strands[path]))
        kind = rng.choice([CrossingKind.VIRTUAL, CrossingKind.POSITIVE, CrossingKind.NEGATIVE])
        k = insert_kink(d, path, pos, kind, rng.choice([1, -1]))
        failures += (matrix_invariant(k), lk(k) if n == 2 else None, lk_v(k) if n == 2 else None) != base
        failures += not structurally_equal(remove_kink(k, path, pos), d)
    report("7. M, lk, lk_v unchanged by rewrites and kink cycles", failures == 0)


@criterion("8. ball propagation equals full path enumeration")
def test_criterion_08():
    ok = True
    count = 0
    for n in (1, 2, 3):
        letters = [Letter(k, i, inv) for k, inv in (("s", False), ("s", True), ("t", False)) for i in range(1, n)]
        for length in range(7):
            for combo in itertools.product(letters, repeat=length):
                d = from_braid_word(BraidWord(n, combo))
                ok &= matrix_invariant_oracle(d) == matrix_invariant(d)
                count += 1
    rng = random.Random(1008)
    for _ in range(100):
        d = from_braid_word(random_word(rng, rng.randint(1, 3), rng.randint(0, 6)))
        for _ in range(rng.randint(1, 3)):
            path = rng.randrange(d.n)
            kind = rng.choice([CrossingKind.VIRTUAL, CrossingKind.POSITIVE, CrossingKind.NEGATIVE])
            d = insert_kink(d, path, rng.randint(0, len(d.strands[path])), kind, rng.choice([1, -1]))
        ok &= matrix_invariant_oracle(d) == matrix_invariant(d)
    report(f"8. ball propagation equals full path enumeration ({count} words + 100 kinked)", ok)


@criterion("9. a_i bounded by virtual crossings with other strands")
def test_criterion_09():
    violations = 0
    for _, d in random_diagrams(1009, 500):
        m = matrix_invariant(d)
        violations += sum(a_i(m, i) > virtual_between_count(d, i) for i in range(d.n))
    report("9. a_i bounded by virtual crossings with other strands", violations == 0)


@criterion("10. counting invariant values")
def test_criterion_10():
    swap = constant_action_vfb([1, 0])
    two = trivial_vfb(2)
    ok = (count_colorings(H, swap), count_colorings(T, swap)) == (0, 4)
    ok &= (count_colorings(H, two), count_colorings(T, two)) == (4, 4)
    report("10. counting invariant values", ok)


@criterion("11. state-sum values and invariance")
def test_criterion_11():
    two = trivial_vfb(2)
    ok = state_sum(H, two, PHI).value == GroupRingElement(Z, {1: 1, -1: 1, 0: 2})
    ok &= state_sum(T, two, PHI).value == GroupRingElement(Z, {0: 4})
    rng = random.Random(1011)
    for trial in range(500):
        w = random_word(rng, rng.randint(2, 3), rng.randint(0, 6), "ft")
        base = state_sum(closure(w), two, PHI).value
        w2, _ = random_rewrite(w.rotate(rng.randint(0, 6)), rng.randint(1, 10), trial, flat=True)
        ok &= state_sum(closure(w2), two, PHI).value == base
    report("11. state-sum values and invariance", ok)


def _in_span(solver, idx, chain):
    rhs = [0] * len(idx)
    for key, c in chain.items():
        rhs[idx[key]] = c
    return solver.solve(rhs) is not None


@criterion("12. homological laws")
def test_criterion_12():
    ok = True
    for _, S in shipped_vfbs(3):
        for n in range(2, 5):
            for a in basis(S, n):
                ok &= apply_linear(boundary_vf, S, n - 1, boundary_vf(S, n, a)) == {}
                ok &= apply_linear(boundary_sf, S, n - 1, boundary_sf(S, n, a)) == {}
        for a in basis(S, 3):
            ok &= apply_linear(boundary_vf, S, 2, boundary_sf(S, 3, a)) == {}
        for n in range(3, 5):
            below = degenerate_generators(S, n - 1)
            idx = {key: k for k, key in enumerate(basis(S, n - 1))}
            mat = [[0] * len(below) for _ in idx]
            for j, g in enumerate(below):
                for key, c in g.items():
                    mat[idx[key]][j] = c
            solver = IntegerSolver(mat, len(idx), len(below))
            for g in degenerate_generators(S, n):
                ok &= _in_span(solver, idx, apply_linear(boundary_vf, S, n, g))
        # degree 2 generators map into C'_1 = 0
        for g in degenerate_generators(S, 2):
            ok &= apply_linear(boundary_vf, S, 2, g) == {}
    report("12. homological laws", ok)


@criterion("13. cocycle conditions, enumeration and ramifications")
def test_criterion_13():
    ok = is_state_sum_cocycle(trivial_vfb(2), PHI)
    for _, S in shipped_vfbs(3):
        for coeff in ("Z", "Z3", "Z5"):
            found = enumerate_cocycles(S, coeff)
            if S == trivial_vfb(2) and coeff == "Z":
                found = found + [PHI]
            for phi in found:
                ok &= is_state_sum_cocycle(S, phi)
                g = phi.group
                for a in S.elements:
                    ok &= phi(a, S.star[a][a]) == g.zero()
                    ok &= phi(S.circ[a][a], a) == g.zero()
                for a, b in itertools.product(S.elements, repeat=2):
                    ok &= g.add(phi(b, S.star[a][b]), phi(a, S.star[b][a])) == g.zero()
                    ok &= g.add(phi(S.circ[b][a], a), phi(S.circ[a][b], b)) == g.zero()
    report("13. cocycle conditions, enumeration and ramifications", ok)


@criterion("14. coboundary invariance of the state sum")
def test_criterion_14():
    rng = random.Random(1014)
    tt = closure("n=2 t1 t1")
    cases = []
    for S in (trivial_vfb(2), trivial_vfb(3), constant_action_vfb([1, 0]), constant_action_vfb([1, 2, 0])):
        phis = enumerate_cocycles(S) + [Cochain2.zero("Z", S.order)]
        if S == trivial_vfb(2):
            phis.append(PHI)
        cases.append((S, phis))
    ok = True
    for _ in range(100):
        for S, phis in cases:
            eta = [rng.randint(-20, 20) for _ in range(S.order)]
            for phi in phis:
                for d in (H, tt):
                    ok &= verify_coboundary_invariance(d, S, phi, eta).ok
    report("14. coboundary invariance of the state sum", ok)


@criterion("15. Burau sanity")
def test_criterion_15():
    ok = True
    for n in range(2, 5):
        for _, lhs, rhs in relation_instances(n):
            ok &= burau(BraidWord(n, tuple(lhs))) == burau(BraidWord(n, tuple(rhs)))
    rng = random.Random(1015)
    for _ in range(200):
        n = rng.randint(2, 4)
        w = random_word(rng, n, rng.randint(0, 12))
        ok &= burau(w) @ burau(w.inverse()) == Matrix.identity(n, LaurentPoly)
        perm = w.permutation()
        at_one = [[int(p(1)) for p in row] for row in burau(w).T.rows]
        ok &= at_one == [[int(perm[i] == j) for j in range(n)] for i in range(n)]
    report("15. Burau sanity", ok)
