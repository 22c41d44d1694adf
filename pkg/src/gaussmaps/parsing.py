"""Text syntax for polynomials in x.

    expr  := term (('+' | '-') term)*
    term  := coeff ('*'? 'x' ('^' uint)?)? | 'x' ('^' uint)?
    coeff := int ('/' uint)?

Whitespace is ignored and the first term may carry a sign.
"""
from __future__ import annotations

from .exact import UniPoly
from .exact.rational import Q


class PolySyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class _Scanner:
    def __init__(self, text: str, var: str):
        self.text = text
        self.pos = 0
        self.var = var

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def uint(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise PolySyntaxError("expected unsigned integer", start)
        return int(self.text[start:self.pos])


def _term(sc: _Scanner, sign: int) -> tuple[int, Q]:
    ch = sc.peek()
    coeff = Q(1)
    has_coeff = False
    if ch.isdigit():
        num = sc.uint()
        if sc.take("/"):
            at = sc.pos
            den = sc.uint()
            if den == 0:
                raise PolySyntaxError("zero denominator", at)
            coeff = Q(num, den)
        else:
            coeff = Q(num)
        has_coeff = True
    starred = has_coeff and sc.take("*")
    if sc.peek() == sc.var:
        sc.pos += 1
        exp = 1
        if sc.take("^"):
            exp = sc.uint()
        return exp, sign * coeff
    if starred or not has_coeff:
        sc.skip()
        raise PolySyntaxError(f"expected '{sc.var}'", sc.pos)
    return 0, sign * coeff


def parse_poly(text: str, var: str = "x") -> UniPoly:
    """Parse an exact polynomial; raises PolySyntaxError with a byte offset."""
    sc = _Scanner(text, var)
    terms: dict[int, Q] = {}
    sign = 1
    if sc.take("-"):
        sign = -1
    elif sc.take("+"):
        pass
    while True:
        if sc.peek() == "":
            raise PolySyntaxError("unexpected end of input", sc.pos)
        exp, c = _term(sc, sign)
        terms[exp] = terms.get(exp, Q(0)) + c
        ch = sc.peek()
        if ch == "":
            break
        if ch == "+":
            sign = 1
        elif ch == "-":
            sign = -1
        else:
            raise PolySyntaxError(f"unexpected character {ch!r}", sc.pos)
        sc.pos += 1
    top = max(terms)
    return UniPoly([terms.get(k, 0) for k in range(top + 1)])


__all__ = ["PolySyntaxError", "parse_poly"]
