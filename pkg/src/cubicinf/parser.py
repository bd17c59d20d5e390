"""Parser for expanded polynomials with rational coefficients.

Grammar (whitespace ignored)::

    poly     := ['+'|'-'] term (('+'|'-') term)*
    term     := rational ['*'] monomial | rational | monomial
    rational := INT ['/' INT]
    monomial := factor (['*'] factor)*
    factor   := VAR ['^' INT]

No parentheses.  Variables must come from the supplied generator list.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .poly import DEFAULT_GENS, DegreeError, Poly


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z_]*\d*)|(.))")


def _tokens(text: str):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            out.append(("var", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            if m.group(3).strip():
                out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, gens):
        self.toks = _tokens(text)
        self.i = 0
        self.gens = tuple(gens)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_int(self):
        kind, val, pos = self.take()
        if kind != "int":
            raise ParseError("expected an integer", pos)
        return val

    def parse(self) -> Poly:
        terms: dict = {}
        sign = 1
        kind, val, pos = self.peek()
        if kind == "end":
            raise ParseError("empty input", pos)
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        while True:
            coeff, mono = self.term()
            terms[mono] = terms.get(mono, 0) + sign * coeff
            kind, val, pos = self.take()
            if kind == "end":
                break
            if kind == "op" and val in "+-":
                sign = -1 if val == "-" else 1
                continue
            raise ParseError(f"unexpected {val!r}", pos)
        return Poly(terms, self.gens)

    def term(self):
        coeff = Fraction(1)
        kind, val, pos = self.peek()
        have_coeff = False
        if kind == "int":
            self.take()
            num = val
            if self.peek()[:2] == ("op", "/"):
                self.take()
                den = self.expect_int()
                if den == 0:
                    raise ParseError("zero denominator", self.toks[self.i - 1][2])
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            have_coeff = True
            if self.peek()[:2] == ("op", "*"):
                self.take()
                if self.peek()[0] != "var":
                    raise ParseError("expected a variable after '*'", self.peek()[2])
        exps = [0] * len(self.gens)
        nfac = 0
        while self.peek()[0] == "var":
            _, name, vpos = self.take()
            if name not in self.gens:
                raise ParseError(f"unknown variable {name!r}", vpos)
            e = 1
            if self.peek()[:2] == ("op", "^"):
                self.take()
                e = self.expect_int()
            exps[self.gens.index(name)] += e
            nfac += 1
            if self.peek()[:2] == ("op", "*"):
                self.take()
                if self.peek()[0] != "var":
                    raise ParseError("expected a variable after '*'", self.peek()[2])
        if not have_coeff and nfac == 0:
            kind, val, pos = self.peek()
            raise ParseError(f"expected a term, found {val!r}" if val else "expected a term", pos)
        return coeff, tuple(exps)


def parse_poly(text: str, gens=DEFAULT_GENS, max_degree: int | None = 3) -> Poly:
    """Parse ``text`` into an exact Poly over ``gens``.

    >>> str(parse_poly("1/2*x0^2*x1 - x2 + 3"))
    '1/2*x0^2*x1 - x2 + 3'
    """
    p = _Parser(text, gens).parse()
    if max_degree is not None and p.degree() > max_degree:
        raise DegreeError(f"degree {p.degree()} exceeds {max_degree}")
    return p
