"""Exact arithmetic on sigma-expressible profinite integers.

A value is a finite sum ``a0 + a1*[n1^(w-k1)] + ... + am*[nm^(w-km)]``: an
integer constant plus terms ``coeff*[base^(w-offset)]``.  The bracket
``[n^(w-k)]`` denotes the limit of ``n^(m!-k)``; its image in Z/qZ is 0 on the
part of q sharing primes with n and ``n^(-k)`` on the coprime part.  Every
prime of every base must have a finite exponent in the ambient supernatural
number, which is what makes the clearing identities below work.

Normalization (applied on construction) collapses prime-power bases via
``(p^e)^(w-k) = p^(w-e*k)``, folds base-1 terms into the constant, merges
duplicate (base, offset) keys and drops zero coefficients.  The resulting
form is canonical only structurally: two distinct normal forms may denote the
same profinite integer.  Semantic equality must go through
:mod:`profint.word_problem`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from ._numutil import perfect_root
from .errors import InputError, SignatureError
from .supernatural import INFINITY, Supernatural


@dataclass(frozen=True, order=True)
class Term:
    """One summand ``coeff * [base^(w-offset)]``."""

    base: int
    offset: int
    coeff: int


def _merge_ambient(a: Supernatural | None, b: Supernatural | None):
    if a is None:
        return b
    if b is None or a == b:
        return a
    raise InputError(f"mixed ambient supernatural numbers: {a} vs {b}")


def _check_signature(base: int, pi: Supernatural):
    """Every prime of the base must have finite ambient exponent.  Decided
    against the stored table only, so the base is never factored."""
    if pi.default == 0:
        for p, e in pi.table:
            if e == INFINITY and base % p == 0:
                raise SignatureError(
                    f"base {base} has prime {p} of infinite exponent in {pi}"
                )
        return
    rest = base
    for p, _ in pi.table:  # stored exponents are finite when the default is inf
        while rest % p == 0:
            rest //= p
    if rest != 1:
        raise SignatureError(
            f"base {base} has a factor {rest} of infinite exponent in {pi}"
        )


class Pseudonumber:
    """Immutable normal form; supports +, -, * and integer mixing.

    `pi` is the ambient supernatural number; it is None exactly when the
    value is a plain integer (no terms), which is compatible with any
    ambient.
    """

    __slots__ = ("const", "terms", "pi")

    def __init__(self, const=0, terms=(), pi: Supernatural | None = None):
        if not isinstance(const, int):
            raise InputError(f"constant must be an integer, got {const!r}")
        merged: dict[tuple[int, int], int] = {}
        for t in terms:
            base, offset, coeff = (t.base, t.offset, t.coeff) if isinstance(t, Term) else t
            if coeff == 0:
                continue
            if base < 1 or offset < 1:
                raise InputError(f"term needs base >= 1 and offset >= 1, got ({base}, {offset})")
            if base == 1:
                const += coeff
                continue
            root, power = perfect_root(base)
            if power > 1:
                # (n^e)^(w-k) = n^(w-e*k); in particular prime powers collapse
                base, offset = root, power * offset
            key = (base, offset)
            merged[key] = merged.get(key, 0) + coeff
        cleaned = tuple(
            Term(base, offset, coeff)
            for (base, offset), coeff in sorted(merged.items())
            if coeff
        )
        if cleaned:
            if pi is None:
                raise InputError("terms require an ambient supernatural number")
            for t in cleaned:
                _check_signature(t.base, pi)
        object.__setattr__(self, "const", const)
        object.__setattr__(self, "terms", cleaned)
        object.__setattr__(self, "pi", pi if cleaned else None)

    def __setattr__(self, name, value):
        raise AttributeError("Pseudonumber is immutable")

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Pseudonumber):
            return other
        if isinstance(other, int):
            return Pseudonumber(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Pseudonumber(
            self.const + other.const,
            self.terms + other.terms,
            _merge_ambient(self.pi, other.pi),
        )

    __radd__ = __add__

    def __neg__(self):
        return Pseudonumber(
            -self.const,
            tuple(Term(t.base, t.offset, -t.coeff) for t in self.terms),
            self.pi,
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        raw = []
        for t in self.terms:
            raw.append((t.base, t.offset, t.coeff * other.const))
        for s in other.terms:
            raw.append((s.base, s.offset, s.coeff * self.const))
        for t in self.terms:
            for s in other.terms:
                if t.base == s.base:
                    raw.append((t.base, t.offset + s.offset, t.coeff * s.coeff))
                else:
                    hi, lo = (t, s) if t.offset >= s.offset else (s, t)
                    # n1^(w-k1) n2^(w-k2) = n2^(k1-k2) (n1 n2)^(w-k1), k1 >= k2
                    raw.append((
                        t.base * s.base,
                        hi.offset,
                        t.coeff * s.coeff * lo.base ** (hi.offset - lo.offset),
                    ))
        return Pseudonumber(
            self.const * other.const, raw, _merge_ambient(self.pi, other.pi)
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        out = Pseudonumber(1)
        for _ in range(exponent):
            out = out * self
        return out

    # -- structure ----------------------------------------------------------

    def is_integer(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (
            self.const == other.const
            and self.terms == other.terms
            and self.pi == other.pi
        )

    def __hash__(self):
        if not self.terms:
            return hash(self.const)  # consistent with __eq__ against plain ints
        return hash((self.const, self.terms, self.pi))

    def __bool__(self):
        return bool(self.const or self.terms)

    def __str__(self):
        parts = []
        if self.const or not self.terms:
            parts.append(str(self.const))
        for t in self.terms:
            body = f"[{t.base}^(w-{t.offset})]"
            mag = abs(t.coeff)
            if mag != 1:
                body = f"{mag}*{body}"
            if not parts:
                parts.append(body if t.coeff > 0 else f"-{body}")
            else:
                parts.append(("+ " if t.coeff > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Pseudonumber({str(self)!r})"


def from_integer(a: int) -> Pseudonumber:
    return Pseudonumber(a)


def omega_power(pi: Supernatural, base: int, offset: int = 1) -> Pseudonumber:
    """The value ``[base^(w-offset)]``; every prime of base must have finite
    exponent in pi.  base = 1 collapses to the integer 1."""
    if base < 1 or offset < 1:
        raise InputError(f"need base >= 1 and offset >= 1, got ({base}, {offset})")
    return Pseudonumber(0, ((base, offset, 1),), pi)


def omega_closure(pi: Supernatural, base: int) -> Pseudonumber:
    """The idempotent ``base^w``, materialized as ``base * [base^(w-1)]``."""
    if base == 1:
        return Pseudonumber(1)
    return from_integer(base) * omega_power(pi, base, 1)


def normalize(u: Pseudonumber) -> Pseudonumber:
    """Rebuild the normal form (idempotent; construction already applies it)."""
    return Pseudonumber(u.const, u.terms, u.pi)


def _resolve_ambient(pi: Supernatural | None, u: Pseudonumber) -> Supernatural:
    pi = _merge_ambient(pi, u.pi)
    if pi is None:
        raise InputError("an ambient supernatural number is required")
    return pi


def check_modulus(n: int, pi: Supernatural):
    if n < 1:
        raise InputError(f"modulus must be positive, got {n}")
    if not pi.divisible_by(n):
        raise InputError(f"modulus {n} does not divide {pi}")


def _term_residue(base: int, offset: int, n: int) -> int:
    """Image of [base^(w-offset)] in Z/nZ: 0 on the part of n sharing primes
    with base, base^(-offset) on the coprime part, glued by CRT."""
    rest = n
    g = gcd(rest, base)
    while g > 1:
        rest //= g
        g = gcd(rest, base)
    shared = n // rest
    if rest == 1:
        return 0
    inv = pow(base, -offset, rest)
    if shared == 1:
        return inv
    return inv * shared * pow(shared, -1, rest) % n


def eval_mod(u: Pseudonumber, n: int, pi: Supernatural | None = None) -> int:
    """Ring-homomorphic image of u in Z/nZ, for n dividing the ambient."""
    pi = _resolve_ambient(pi, u) if (u.terms or pi is not None) else None
    if pi is not None:
        check_modulus(n, pi)
    elif n < 1:
        raise InputError(f"modulus must be positive, got {n}")
    total = u.const % n
    for t in u.terms:
        total = (total + t.coeff * _term_residue(t.base, t.offset, n)) % n
    return total


def clearing_factor(pi: Supernatural, u: Pseudonumber) -> tuple[int, int]:
    """A positive integer c with c*u equal to an integer across the whole
    family of groups, and that integer value.

    c is the product of base^(offset+slack) over the terms, where slack is
    the largest (finite) ambient exponent among the primes of the bases.
    Multiplying term by term, base^(w+slack) collapses to base^slack, which
    yields the returned integer.  Every prime of c has finite exponent.
    """
    if not u.terms:
        return 1, u.const
    _resolve_ambient(pi, u)
    # the largest stored exponent among the primes of the bases; unlisted
    # primes contribute the default, which is 0 on any admissible base
    slack = max(
        (
            e
            for p, e in pi.table
            if e != INFINITY and any(t.base % p == 0 for t in u.terms)
        ),
        default=0,
    )
    c = 1
    for t in u.terms:
        c *= t.base ** (t.offset + slack)
    value = c * u.const
    for t in u.terms:
        value += t.coeff * (c // t.base ** (t.offset + slack)) * t.base ** slack
    return c, value


# -- text form ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|\[|\]|\^|\(|\)|w|\+|\-|\*)")


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise InputError(f"bad character at position {pos} in {text!r}")
        out.append((m.group(1), m.start(1)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, pi: Supernatural | None):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.pi = pi

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        if self.pos >= len(self.tokens):
            raise InputError(f"unexpected end of input in {self.text!r}")
        tok, where = self.tokens[self.pos]
        if expected is not None and tok != expected:
            raise InputError(
                f"expected {expected!r} at position {where} in {self.text!r}, got {tok!r}"
            )
        self.pos += 1
        return tok

    def parse(self) -> Pseudonumber:
        value = self.product(self.sign())
        while self.peek() in ("+", "-"):
            op = self.take()
            value = value + self.product(1 if op == "+" else -1)
        if self.pos != len(self.tokens):
            tok, where = self.tokens[self.pos]
            raise InputError(f"trailing {tok!r} at position {where} in {self.text!r}")
        return value

    def sign(self) -> int:
        if self.peek() in ("+", "-"):
            return 1 if self.take() == "+" else -1
        return 1

    def product(self, sign: int) -> Pseudonumber:
        value = from_integer(sign) * self.atom()
        while self.peek() == "*":
            self.take()
            value = value * self.atom()
        return value

    def atom(self) -> Pseudonumber:
        tok = self.peek()
        if tok == "[":
            return self.bracket()
        if tok is not None and tok.isdigit():
            return from_integer(int(self.take()))
        raise InputError(
            f"expected an integer or [base^(w-k)] in {self.text!r}, got {tok!r}"
        )

    def bracket(self) -> Pseudonumber:
        self.take("[")
        tok = self.take()
        if not tok.isdigit():
            raise InputError(f"expected a base inside [...] in {self.text!r}")
        base = int(tok)
        self.take("^")
        self.take("(")
        self.take("w")
        self.take("-")
        tok = self.take()
        if not tok.isdigit():
            raise InputError(f"expected an offset after w- in {self.text!r}")
        offset = int(tok)
        self.take(")")
        self.take("]")
        if self.pi is None:
            raise InputError("a supernatural number is required to parse terms")
        return omega_power(self.pi, base, offset)


def parse_pseudonumber(text: str, pi: Supernatural | None = None) -> Pseudonumber:
    """Parse ``3 + 2*[6^(w-2)] - [5^(w-1)]``; bases are validated against pi."""
    return _Parser(text, pi).parse()
