"""End-to-end decision for systems of sigma-term equations with semilinear
constraints: solvable across every admissible finite quotient or refuted in
one of them, with checkable witnesses either way.

Per combination of constraint branches (one per variable) the procedure
substitutes x = base + sum_j period_j * y_j with fresh ring unknowns y_j,
abelianizes every equation to a linear form, assembles one scalar equation
per (equation, letter) pair, and hands the linear system to the solver.  The
first solvable combination (lexicographic order) yields the witness; if all
fail, each contributes one refuting quotient, and their lcm refutes the whole
system at once.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import lcm

from .errors import InputError
from .pseudonumber import from_integer
from .semilinear import SemilinearSet, closure, member_of_closure
from .solver import SigmaMatrix, solve_system
from .supernatural import Supernatural
from .terms import SigmaTerm, abelianize, parse_term
from .word_problem import Verdict, is_zero


@dataclass(frozen=True)
class EquationSystem:
    """Equations lhs = rhs between sigma-terms over the variables, with one
    semilinear constraint per variable over the alphabet."""

    alphabet: tuple[str, ...]
    variables: tuple[str, ...]
    equations: tuple[tuple[SigmaTerm, SigmaTerm], ...]
    constraints: dict

    def __post_init__(self):
        alphabet = tuple(self.alphabet)
        variables = tuple(self.variables)
        if not alphabet or len(set(alphabet)) != len(alphabet):
            raise InputError("alphabet must be nonempty with distinct letters")
        if not variables or len(set(variables)) != len(variables):
            raise InputError("variables must be nonempty and distinct")
        for lhs, rhs in self.equations:
            used = lhs.variables() | rhs.variables()
            extra = used - set(variables)
            if extra:
                raise InputError(f"equation uses undeclared variables {sorted(extra)}")
        missing = set(variables) - set(self.constraints)
        if missing:
            raise InputError(f"unconstrained variables: {sorted(missing)}")
        for x in variables:
            sls = self.constraints[x]
            if not isinstance(sls, SemilinearSet) or sls.alphabet != alphabet:
                raise InputError(f"constraint of {x!r} is not over the alphabet")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "equations", tuple(self.equations))

    @classmethod
    def from_document(cls, doc: dict) -> "EquationSystem":
        """Build from the structured document used by the CLI: fields
        alphabet, variables, equations (strings "lhs = rhs") and constraints
        (variable -> semilinear string)."""
        from .semilinear import parse_semilinear

        try:
            alphabet = tuple(doc["alphabet"])
            variables = tuple(doc["variables"])
            equation_texts = list(doc["equations"])
            constraint_texts = dict(doc["constraints"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad system document: {exc}") from None
        equations = []
        for text in equation_texts:
            lhs, sep, rhs = text.partition("=")
            if not sep:
                raise InputError(f"equation {text!r} needs '='")
            equations.append(
                (parse_term(lhs.strip(), variables), parse_term(rhs.strip(), variables))
            )
        constraints = {
            x: parse_semilinear(constraint_texts[x], alphabet)
            for x in variables
            if x in constraint_texts
        }
        return cls(alphabet, variables, tuple(equations), constraints)


@dataclass(frozen=True)
class Witness:
    """A solution in commutative image form: per variable, a vector over the
    alphabet, plus the branch index and period coefficients that produced it."""

    assignment: dict
    branches: dict
    coefficients: dict

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Refutation:
    """One refuting finite quotient per constraint branch combination."""

    quotients: tuple

    def __bool__(self):
        return False

    def combined_modulus(self) -> int:
        """A single finite quotient refuting every branch at once."""
        return lcm(*(n for _, n in self.quotients)) if self.quotients else 1


def _linear_forms(pi, system):
    """Abelianized lhs - rhs of every equation, as variable -> coefficient."""
    forms = []
    for lhs, rhs in system.equations:
        left = abelianize(pi, lhs, system.variables)
        right = abelianize(pi, rhs, system.variables)
        forms.append({x: left[x] - right[x] for x in system.variables})
    return forms


def decide_and_witness(pi: Supernatural, system: EquationSystem):
    """A verified :class:`Witness`, or a :class:`Refutation` listing one
    finite quotient per branch combination (falsy)."""
    forms = _linear_forms(pi, system)
    branch_lists = [
        range(len(system.constraints[x].branches)) for x in system.variables
    ]
    failures = []
    for combo in itertools.product(*branch_lists):
        chosen = {
            x: system.constraints[x].branches[combo[i]]
            for i, x in enumerate(system.variables)
        }
        outcome = _try_branches(pi, system, forms, chosen)
        if isinstance(outcome, int):
            failures.append((combo, outcome))
            continue
        coefficients, assignment = outcome
        witness = Witness(
            assignment=assignment,
            branches={x: combo[i] for i, x in enumerate(system.variables)},
            coefficients=coefficients,
        )
        check = verify_witness(pi, system, witness)
        if not check:
            raise AssertionError(
                f"internal error: produced witness fails at modulus {check.witness_modulus}"
            )
        return witness
    return Refutation(tuple(failures))


def _try_branches(pi, system, forms, chosen):
    """Solve one branch combination.  Returns (coefficients, assignment) on
    success or a refuting modulus (int) on failure."""
    unknowns = [
        (x, j)
        for x in system.variables
        for j in range(len(chosen[x].periods))
    ]
    rows = []
    rhs = []
    for form in forms:
        for a in range(len(system.alphabet)):
            row = [
                form[x] * chosen[x].periods[j][a] for (x, j) in unknowns
            ]
            total = from_integer(0)
            for x in system.variables:
                total = total + form[x] * chosen[x].base[a]
            rows.append(row)
            rhs.append(-total)
    if not unknowns or not rows:
        # nothing to solve: every right side must already vanish
        solution = []
        for value in rhs:
            vanishes = is_zero(pi, value)
            if not vanishes:
                return vanishes.witness_modulus
        if unknowns:
            solution = [from_integer(0)] * len(unknowns)
    else:
        outcome = solve_system(pi, SigmaMatrix(rows, pi), rhs)
        if not outcome:
            return outcome.modulus
        solution = list(outcome)
    coefficients = {}
    position = 0
    for x in system.variables:
        count = len(chosen[x].periods)
        coefficients[x] = tuple(solution[position:position + count])
        position += count
    assignment = {}
    for x in system.variables:
        branch = chosen[x]
        vec = []
        for a in range(len(system.alphabet)):
            component = from_integer(branch.base[a])
            for j, coeff in enumerate(coefficients[x]):
                component = component + coeff * branch.periods[j][a]
            vec.append(component)
        assignment[x] = tuple(vec)
    return coefficients, assignment


def verify_witness(pi: Supernatural, system: EquationSystem, witness: Witness) -> Verdict:
    """Equal iff every equation's abelianized difference vanishes under the
    witness and every assigned vector lies in the closure of its constraint."""
    for x in system.variables:
        if x not in witness.assignment:
            raise InputError(f"witness misses variable {x!r}")
        if len(witness.assignment[x]) != len(system.alphabet):
            raise InputError(f"witness vector of {x!r} has the wrong width")
    for form in _linear_forms(pi, system):
        for a in range(len(system.alphabet)):
            total = from_integer(0)
            for x in system.variables:
                total = total + form[x] * witness.assignment[x][a]
            vanishes = is_zero(pi, total)
            if not vanishes:
                return vanishes
    for x in system.variables:
        if member_of_closure(
            pi, witness.assignment[x], closure(pi, system.constraints[x])
        ) is None:
            return Verdict.no(None, None, None, component=x)
    return Verdict.yes()
