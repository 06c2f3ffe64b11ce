"""Sigma-term syntax over a finite variable set, with abelianization.

Grammar (products left-associative, postfix powers bind tighter):

    term   := factor {('*' | ' ') factor}
    factor := atom ['^' '(' power ')']
    atom   := varname | '(' term ')'
    power  := 'w-1' | prime '^' '(' 'w-1' ')'

In the commutative image a term becomes a linear form over the variables:
a variable contributes a unit coefficient, products add, the (w-1) power
negates, and the prime power scales by [p^(w-1)].
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ._numutil import is_prime
from .errors import InputError, SignatureError
from .pseudonumber import Pseudonumber, from_integer, omega_power
from .supernatural import Supernatural


class SigmaTerm:
    """Abstract syntax tree node."""

    __slots__ = ()

    def variables(self) -> set[str]:
        raise NotImplementedError


@dataclass(frozen=True)
class Var(SigmaTerm):
    name: str

    def variables(self):
        return {self.name}

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Product(SigmaTerm):
    left: SigmaTerm
    right: SigmaTerm

    def variables(self):
        return self.left.variables() | self.right.variables()

    def __str__(self):
        return f"{self.left}*{self.right}"


@dataclass(frozen=True)
class OmegaInv(SigmaTerm):
    child: SigmaTerm

    def variables(self):
        return self.child.variables()

    def __str__(self):
        return f"({self.child})^(w-1)"


@dataclass(frozen=True)
class PrimePower(SigmaTerm):
    child: SigmaTerm
    prime: int

    def variables(self):
        return self.child.variables()

    def __str__(self):
        return f"({self.child})^({self.prime}^(w-1))"


_TERM_TOKEN = re.compile(r"([A-Za-z_][A-Za-z_0-9]*|\d+|\^|\(|\)|\*|\-)")


def _is_name(tok):
    return tok is not None and re.fullmatch(r"[A-Za-z_]\w*", tok) is not None


def _tokenize(text: str):
    out, pos = [], 0
    while pos < len(text):
        if text[pos].isspace():
            out.append((" ", pos))
            while pos < len(text) and text[pos].isspace():
                pos += 1
            continue
        m = _TERM_TOKEN.match(text, pos)
        if not m:
            raise InputError(f"bad character at position {pos} in {text!r}")
        out.append((m.group(1), pos))
        pos = m.end()
    # keep whitespace only where it separates two factors (implicit product)
    cleaned = []
    for idx, (tok, where) in enumerate(out):
        if tok == " ":
            prev = cleaned[-1][0] if cleaned else None
            nxt = next((t for t, _ in out[idx + 1:] if t != " "), None)
            separates = (prev == ")" or _is_name(prev)) and (nxt == "(" or _is_name(nxt))
            if not separates:
                continue
        cleaned.append((tok, where))
    return cleaned


class _TermParser:
    def __init__(self, text: str, variables):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variables = tuple(variables)
        if "w" in self.variables:
            raise InputError("'w' is reserved and cannot be a variable name")

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

    def parse(self) -> SigmaTerm:
        node = self.term()
        if self.pos != len(self.tokens):
            tok, where = self.tokens[self.pos]
            raise InputError(f"trailing {tok!r} at position {where} in {self.text!r}")
        return node

    def term(self) -> SigmaTerm:
        node = self.factor()
        while self.peek() in ("*", " ") or self._starts_factor():
            if self.peek() in ("*", " "):
                self.take()
            node = Product(node, self.factor())
        return node

    def _starts_factor(self):
        tok = self.peek()
        return tok == "(" or (tok is not None and re.fullmatch(r"[A-Za-z_]\w*", tok) and tok != "w")

    def factor(self) -> SigmaTerm:
        node = self.atom()
        if self.peek() == "^":
            self.take("^")
            self.take("(")
            node = self.power(node)
            self.take(")")
        return node

    def atom(self) -> SigmaTerm:
        tok = self.peek()
        if tok == "(":
            self.take("(")
            node = self.term()
            self.take(")")
            return node
        if tok is not None and re.fullmatch(r"[A-Za-z_]\w*", tok):
            self.take()
            if tok not in self.variables:
                raise InputError(f"unknown variable {tok!r} (declared: {', '.join(self.variables)})")
            return Var(tok)
        raise InputError(f"expected a variable or '(' in {self.text!r}, got {tok!r}")

    def power(self, node: SigmaTerm) -> SigmaTerm:
        tok = self.peek()
        if tok == "w":
            self.take("w")
            self.take("-")
            if self.take() != "1":
                raise InputError(f"only the power w-1 is allowed in {self.text!r}")
            return OmegaInv(node)
        if tok is not None and tok.isdigit():
            p = int(self.take())
            if not is_prime(p):
                raise InputError(f"{p} is not prime in power of {self.text!r}")
            self.take("^")
            self.take("(")
            self.take("w")
            self.take("-")
            if self.take() != "1":
                raise InputError(f"only the power w-1 is allowed in {self.text!r}")
            self.take(")")
            return PrimePower(node, p)
        raise InputError(f"expected w-1 or p^(w-1) in {self.text!r}, got {tok!r}")


def parse_term(text: str, variables) -> SigmaTerm:
    """Parse a sigma-term over the declared variable names."""
    return _TermParser(text, variables).parse()


def abelianize(pi: Supernatural, term: SigmaTerm, variables) -> dict[str, Pseudonumber]:
    """Coefficient vector of the term in the commutative image, indexed by
    the declared variables.

    Var -> unit vector; Product -> componentwise sum; the (w-1) power negates
    every coefficient; the p^(w-1) power scales by [p^(w-1)] and requires p
    to have finite ambient exponent.
    """
    variables = tuple(variables)
    unknown = term.variables() - set(variables)
    if unknown:
        raise InputError(f"term uses undeclared variables: {sorted(unknown)}")

    def walk(node) -> dict[str, Pseudonumber]:
        if isinstance(node, Var):
            return {node.name: from_integer(1)}
        if isinstance(node, Product):
            left, right = walk(node.left), walk(node.right)
            for name, coeff in right.items():
                left[name] = left.get(name, from_integer(0)) + coeff
            return left
        if isinstance(node, OmegaInv):
            return {name: -coeff for name, coeff in walk(node.child).items()}
        if isinstance(node, PrimePower):
            if not pi.is_finite_at(node.prime):
                raise SignatureError(
                    f"power {node.prime}^(w-1) is outside the signature for {pi}"
                )
            scale = omega_power(pi, node.prime, 1)
            return {name: scale * coeff for name, coeff in walk(node.child).items()}
        raise InputError(f"unknown node {node!r}")

    sparse = walk(term)
    return {name: sparse.get(name, from_integer(0)) for name in variables}
