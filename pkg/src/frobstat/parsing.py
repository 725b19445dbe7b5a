"""Polynomial expression parsing for the CLI and service layer.

Grammar: sums and differences of terms `c*t^a*x^b` where the coefficient
and either power are optional, `*` may be omitted, `^` denotes powers, and
whitespace is ignored.  Coefficients are integers; reduction into a field
happens at binding time, so one expression serves every q in a scan.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .ff import Field
from .mpoly import BiPoly
from .poly import Poly


@dataclass(frozen=True)
class PolyExpr:
    source: str
    variables: tuple[str, ...]
    terms: dict  # exponent tuple (aligned with `variables`) -> int coefficient

    def bind_bipoly(self, field: Field) -> BiPoly:
        if self.variables != ("t", "x"):
            raise ParseError("expression is not bivariate in t, x", 0)
        return BiPoly.from_int_terms(field, self.terms)

    def bind_poly(self, field: Field) -> Poly:
        if self.variables != ("t",):
            raise ParseError("expression is not univariate in t", 0)
        if not self.terms:
            return Poly.zero(field)
        size = max(e[0] for e in self.terms) + 1
        coeffs = [0] * size
        for (a,), c in self.terms.items():
            coeffs[a] = c
        return Poly.from_ints(field, coeffs)

    def canonical(self) -> str:
        """Canonical rendering; parse(canonical(...)) reproduces the terms."""
        if not self.terms:
            return "0"
        keys = sorted(
            self.terms, key=lambda e: (-sum(e),) + tuple(-v for v in reversed(e))
        )
        out = []
        for i, exps in enumerate(keys):
            c = self.terms[exps]
            mon = ""
            for var, e in zip(self.variables, exps):
                if e == 1:
                    mon += var
                elif e > 1:
                    mon += f"{var}^{e}"
            mag = abs(c)
            body = mon if (mag == 1 and mon) else f"{mag}{mon}"
            if i == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(out)


_TOKEN_INT = "int"
_TOKEN_VAR = "var"
_TOKEN_OP = "op"


def _tokenize(src: str, variables: tuple[str, ...]) -> list[tuple[str, object, int]]:
    tokens = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append((_TOKEN_INT, int(src[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            if ch not in variables:
                raise ParseError(
                    f"unknown variable {ch!r}; expected one of {', '.join(variables)}",
                    i,
                )
            tokens.append((_TOKEN_VAR, ch, i))
            i += 1
            continue
        if ch in "+-*^":
            tokens.append((_TOKEN_OP, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


def parse_poly(src: str, variables: tuple[str, ...] = ("t", "x")) -> PolyExpr:
    """Parse an integer-coefficient polynomial expression."""
    if not src.strip():
        raise ParseError("empty expression", 0)
    tokens = _tokenize(src, variables)
    terms: dict = {}
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None, len(src))

    while pos < len(tokens):
        sign = 1
        kind, value, at = peek()
        if kind == _TOKEN_OP and value in "+-":
            sign = -1 if value == "-" else 1
            pos += 1
        # one term: a nonempty product of factors
        coeff = sign
        exps = [0] * len(variables)
        saw_factor = False
        while True:
            kind, value, at = peek()
            if kind == _TOKEN_INT:
                coeff *= value
                pos += 1
                kind2, value2, at2 = peek()
                if kind2 == _TOKEN_OP and value2 == "^":
                    raise ParseError("expected a variable before '^'", at2)
            elif kind == _TOKEN_VAR:
                var_index = variables.index(value)
                pos += 1
                power = 1
                kind2, value2, at2 = peek()
                if kind2 == _TOKEN_OP and value2 == "^":
                    pos += 1
                    kind3, value3, at3 = peek()
                    if kind3 != _TOKEN_INT:
                        raise ParseError("expected an integer exponent after '^'", at3)
                    power = value3
                    pos += 1
                exps[var_index] += power
            else:
                break
            saw_factor = True
            kind, value, at = peek()
            if kind == _TOKEN_OP and value == "*":
                pos += 1
                kind, value, at = peek()
                if kind not in (_TOKEN_INT, _TOKEN_VAR):
                    raise ParseError("expected a coefficient or variable after '*'", at)
        if not saw_factor:
            raise ParseError("expected a coefficient or variable", at)
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
        kind, value, at = peek()
        if kind is None:
            break
        if not (kind == _TOKEN_OP and value in "+-"):
            raise ParseError("expected '+' or '-' between terms", at)

    return PolyExpr(
        source=src,
        variables=variables,
        terms={e: c for e, c in terms.items() if c != 0},
    )


def parse_poly_list(src: str, variables: tuple[str, ...] = ("t",)) -> list[PolyExpr]:
    """Comma-separated list of expressions, e.g. "t^5,t,1"."""
    parts = src.split(",")
    return [parse_poly(part, variables) for part in parts]
