import itertools
import random

import pytest

from profint import (
    InputError,
    IntMatrix,
    ext_gcd,
    omega_power,
    parse_int_matrix,
    parse_supernatural,
    smith_normal_form,
    solvable_in_completion,
    solve_congruences,
)
from conftest import sample_moduli


def brute_ext_gcd(a, b):
    best = None
    for s in range(-40, 41):
        for t in range(-40, 41):
            g = s * a + t * b
            if g > 0 and a % g == 0 and b % g == 0:
                best = g if best is None else min(best, g)
    return best


def test_ext_gcd_examples():
    assert ext_gcd(4, 3) == (1, 1, -1)
    assert ext_gcd(0, 0) == (0, 0, 0)
    g, s, t = ext_gcd(12, 18)
    assert g == brute_ext_gcd(12, 18) == 6
    assert 12 * s + 18 * t == 6


def test_ext_gcd_properties():
    rng = random.Random(31)
    for _ in range(300):
        a, b = rng.randint(-99, 99), rng.randint(-99, 99)
        g, s, t = ext_gcd(a, b)
        assert g >= 0
        assert s * a + t * b == g
        if a or b:
            assert a % g == 0 and b % g == 0


def check_snf(matrix):
    res = smith_normal_form(matrix)
    assert (res.left @ matrix @ res.right) == res.diag
    assert abs(res.left.determinant()) == 1
    assert abs(res.right.determinant()) == 1
    diag = res.diagonal()
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (a == 0 and b == 0) or (a != 0 and b % a == 0)
    for i in range(res.diag.rows):
        for j in range(res.diag.cols):
            if i != j:
                assert res.diag.entries[i][j] == 0
    return res


def test_snf_examples():
    res = check_snf(IntMatrix([[2, 4], [6, 8]]))
    assert res.diagonal() == [2, 4]
    res = check_snf(IntMatrix([[1]]))
    assert res.diagonal() == [1]
    assert res.left == IntMatrix([[1]]) and res.right == IntMatrix([[1]])
    res = check_snf(IntMatrix([[0, 0], [0, 0]]))
    assert res.diagonal() == [0, 0]
    assert res.left == IntMatrix.identity(2) and res.right == IntMatrix.identity(2)


def test_snf_random_matrices():
    rng = random.Random(32)
    for _ in range(120):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        matrix = IntMatrix(
            [[rng.randint(-20, 20) for _ in range(cols)] for _ in range(rows)]
        )
        check_snf(matrix)


def test_snf_deterministic():
    matrix = IntMatrix([[6, 4, 2], [2, 8, 10]])
    first = smith_normal_form(matrix)
    second = smith_normal_form(matrix)
    assert first.left == second.left and first.right == second.right


def test_solve_congruences_examples():
    assert solve_congruences(IntMatrix([[2]]), [0], 3) == [0]
    assert solve_congruences(IntMatrix([[2]]), [1], 4) is None
    assert solve_congruences(IntMatrix([[1, 1], [0, 1]]), [5, 2], 7) == [3, 2]


def brute_congruence_solvable(matrix, rhs, modulus):
    for x in itertools.product(range(modulus), repeat=matrix.cols):
        if all(
            sum(a * v for a, v in zip(row, x)) % modulus == b % modulus
            for row, b in zip(matrix.entries, rhs)
        ):
            return True
    return False


def test_solve_congruences_against_exhaustion():
    rng = random.Random(33)
    for _ in range(150):
        rows = rng.randint(1, 3)
        cols = rng.randint(1, 3)
        modulus = rng.randint(1, 30)
        matrix = IntMatrix(
            [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        )
        rhs = [rng.randint(-9, 9) for _ in range(rows)]
        found = solve_congruences(matrix, rhs, modulus)
        if found is None:
            assert not brute_congruence_solvable(matrix, rhs, modulus)
        else:
            assert all(0 <= x < modulus for x in found)
            for row, b in zip(matrix.entries, rhs):
                assert sum(a * v for a, v in zip(row, found)) % modulus == b % modulus


def test_solvable_in_completion_examples():
    pi = parse_supernatural("2^2,3^inf;default=0")
    assert not solvable_in_completion(pi, 4, 6)  # gcd(4, pi) = 4 does not divide 6
    assert solvable_in_completion(pi, 4, 8)
    assert solvable_in_completion(pi, 0, 0)


def test_solvable_agrees_with_quotient_exhaustion():
    rng = random.Random(34)
    from conftest import random_supernatural

    for _ in range(80):
        pi = random_supernatural(rng)
        a = rng.randint(-30, 30)
        b = rng.randint(-30, 30)
        verdict = solvable_in_completion(pi, a, b)
        moduli = sample_moduli(pi, 5, bound=10**4, seed=rng.randint(0, 99))
        per_quotient = [
            any((a * x - b) % n == 0 for x in range(n)) for n in moduli
        ]
        if verdict:
            assert all(per_quotient)
        elif a != 0:
            witness = pi.gcd(abs(a))
            assert not any((a * x - b) % witness == 0 for x in range(witness))


def test_pseudonumber_right_side():
    pi = parse_supernatural("2^2,3^inf;default=0")
    b = 4 * omega_power(pi, 5, 1)  # unit times 4: divisible by gcd(4, pi) = 4
    assert solvable_in_completion(pi, 4, b)
    assert not solvable_in_completion(pi, 4, b + 2)


def test_matrix_parsing_and_validation():
    m = parse_int_matrix("2,4;6,8")
    assert m.entries == ((2, 4), (6, 8))
    assert parse_int_matrix(str(m)) == m
    with pytest.raises(InputError):
        parse_int_matrix("2,4;6")
    with pytest.raises(InputError):
        parse_int_matrix("a,b")
    with pytest.raises(InputError):
        IntMatrix([])
    with pytest.raises(InputError):
        IntMatrix([[1], [2, 3]])
    with pytest.raises(InputError):
        IntMatrix([[1, 2]]) @ IntMatrix([[1, 2]])


def test_determinant_matches_permutation_expansion():
    rng = random.Random(35)
    for _ in range(40):
        n = rng.randint(1, 4)
        m = IntMatrix([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        expected = 0
        for perm in itertools.permutations(range(n)):
            sign = 1
            for i in range(n):
                for j in range(i + 1, n):
                    if perm[i] > perm[j]:
                        sign = -sign
            prod = sign
            for i in range(n):
                prod *= m.entries[i][perm[i]]
            expected += prod
        assert m.determinant() == expected
