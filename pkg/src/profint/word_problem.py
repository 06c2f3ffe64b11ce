"""Decide whether two sigma-expressible profinite integers coincide across
every finite abelian group whose exponent divides the ambient supernatural
number.

The decision splits the ambient at the primes of the combined clearing
factor c = c_u * c_v: on the extracted finite part M both sides are compared
as residues, and on the remaining part c is a unit, so c*u and c*v (which
clear to integers) decide the rest, with c cancelled.  Every NotEqual verdict
carries a finite witness modulus whose residues separate u and v.
"""
from __future__ import annotations

from dataclasses import dataclass

from ._numutil import primes_from, valuation
from .errors import InputError
from .pseudonumber import Pseudonumber, clearing_factor, eval_mod, from_integer
from .supernatural import Supernatural


@dataclass(frozen=True)
class Verdict:
    """Outcome of an equality test, with a refuting quotient on failure."""

    equal: bool
    witness_modulus: int | None = None
    residue_u: int | None = None
    residue_v: int | None = None
    component: object = None

    def __bool__(self):
        return self.equal

    @classmethod
    def yes(cls):
        return cls(True)

    @classmethod
    def no(cls, modulus, residue_u, residue_v, component=None):
        return cls(False, modulus, residue_u, residue_v, component)


def _coerce(value) -> Pseudonumber:
    if isinstance(value, Pseudonumber):
        return value
    if isinstance(value, int):
        return from_integer(value)
    raise InputError(f"expected a pseudonumber or integer, got {value!r}")


def refuting_modulus(rest: Supernatural, delta: int, unit: int) -> int:
    """A finite divisor of `rest`, coprime to `unit`, where the nonzero
    integer discrepancy `delta` survives reduction.

    Preference order: a power q^k of the least prime q of infinite exponent
    with k > v_q(delta); failing that, a prime of positive exponent dividing
    neither delta nor unit; for a finite `rest`, its integer value.
    """
    if rest.is_finite():
        return rest.as_integer()
    q = rest.smallest_infinite_prime()
    if q is not None:
        return q ** (valuation(delta, q) + 1)
    # unreachable with the table-plus-default representation, kept for safety
    for p in primes_from(2):
        if rest.exponent_of(p) >= 1 and delta % p and unit % p:
            return p
    raise AssertionError("no refuting modulus found")


def equal_in_ab(pi: Supernatural, u, v) -> Verdict:
    """Decide whether u = v holds in every finite quotient allowed by pi."""
    u, v = _coerce(u), _coerce(v)
    c_u, value_u = clearing_factor(pi, u)
    c_v, value_v = clearing_factor(pi, v)
    c = c_u * c_v
    # primes of c with exponent 0 change neither side of the split
    finite_part, rest = pi.split(pi.positive_finite_primes_of(c))
    residue_u = eval_mod(u, finite_part, pi)
    residue_v = eval_mod(v, finite_part, pi)
    if residue_u != residue_v:
        return Verdict.no(finite_part, residue_u, residue_v)
    lhs, rhs = c_v * value_u, c_u * value_v
    if rest.congruent(lhs, rhs):
        return Verdict.yes()
    n = refuting_modulus(rest, lhs - rhs, c)
    return Verdict.no(n, eval_mod(u, n, pi), eval_mod(v, n, pi))


def is_zero(pi: Supernatural, u) -> Verdict:
    return equal_in_ab(pi, u, from_integer(0))


def equal_vectors(pi: Supernatural, us, vs, labels=None) -> Verdict:
    """Componentwise equality; reports the first failing component."""
    us, vs = list(us), list(vs)
    if len(us) != len(vs):
        raise InputError(f"vector lengths differ: {len(us)} vs {len(vs)}")
    if labels is not None and len(labels) != len(us):
        raise InputError("labels do not match the vectors")
    for index, (u, v) in enumerate(zip(us, vs)):
        verdict = equal_in_ab(pi, u, v)
        if not verdict:
            label = labels[index] if labels is not None else index
            return Verdict.no(
                verdict.witness_modulus,
                verdict.residue_u,
                verdict.residue_v,
                component=label,
            )
    return Verdict.yes()


__all__ = [
    "Verdict",
    "equal_in_ab",
    "is_zero",
    "equal_vectors",
    "refuting_modulus",
]
