"""Parser and printer for univariate integer polynomials in ``x``.

Grammar (whitespace ignored)::

    poly  := ['-'] term (('+' | '-') term)*
    term  := coeff | [coeff ['*']] 'x' ['^' nat]
    coeff := nat

Coefficients are plain integers; reducing them into a ring is the caller's
business.
"""

from __future__ import annotations

from .errors import ParseError


def parse_polynomial(text):
    """Return the coefficient list of ``text``, constant term first.

    >>> parse_polynomial("x^2+x+1")
    [1, 1, 1]
    >>> parse_polynomial("3x^2 - x")
    [0, -1, 3]
    """
    pos = 0
    n = len(text)

    def skip():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def nat():
        nonlocal pos
        skip()
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if start == pos:
            return None
        return int(text[start:pos])

    coeffs = {}
    sign = 1
    skip()
    if pos < n and text[pos] == "-":
        sign = -1
        pos += 1
    if pos >= n or not text.strip():
        raise ParseError("empty polynomial", pos, text)
    while True:
        skip()
        term_start = pos
        coeff = nat()
        skip()
        if pos < n and text[pos] == "*":
            if coeff is None:
                raise ParseError("'*' without a coefficient", pos, text)
            pos += 1
            skip()
            if pos >= n or text[pos] != "x":
                raise ParseError("expected 'x' after '*'", pos, text)
        degree = 0
        if pos < n and text[pos] == "x":
            pos += 1
            degree = 1
            skip()
            if pos < n and text[pos] == "^":
                pos += 1
                degree = nat()
                if degree is None:
                    raise ParseError("expected exponent after '^'", pos, text)
        elif coeff is None:
            raise ParseError("expected a coefficient or 'x'", term_start, text)
        if coeff is None:
            coeff = 1
        coeffs[degree] = coeffs.get(degree, 0) + sign * coeff
        skip()
        if pos >= n:
            break
        if text[pos] == "+":
            sign = 1
        elif text[pos] == "-":
            sign = -1
        else:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        pos += 1
        skip()
        if pos >= n:
            raise ParseError("dangling operator", pos, text)

    top = max(coeffs)
    return [coeffs.get(i, 0) for i in range(top + 1)]


def trim(coeffs):
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def format_polynomial(coeffs, var="x"):
    """Canonical text for an integer coefficient list (highest degree first)."""
    parts = []
    for degree in range(len(coeffs) - 1, -1, -1):
        c = coeffs[degree]
        if c == 0:
            continue
        mag = abs(c)
        if degree == 0:
            body = str(mag)
        else:
            mono = var if degree == 1 else f"{var}^{degree}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+" if c > 0 else "-") + body)
    return "".join(parts) or "0"
