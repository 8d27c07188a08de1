"""
Reading polynomial system files.

A system file declares a variable order, optionally a coefficient field, and
one generator per line::

    # Example
    vars: x1 < x2 < x3
    field: q
    polys:
    x1*x2 - 1
    x3 - x2

Expressions use integer and rational literals, declared variables, ``+``,
``-``, ``*``, ``^`` with nonnegative integer exponents and parentheses.
Multiplication is always explicit.
"""

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple, Union

from .constants import RATIONAL_FIELD_SPEC
from .errors import AlgebraError, SystemParseError
from .polyring import CoefficientField, Polynomial, VariableOrder

logger = logging.getLogger(__name__)

TOKEN_PATTERN = re.compile(r"(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()])")
IDENTIFIER_PATTERN = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int


@dataclass(frozen=True)
class SystemFile:
    order: VariableOrder
    generators: Tuple[Polynomial, ...]
    field: CoefficientField

    @property
    def field_spec(self) -> str:
        return str(self.field)


def _tokenize(text: str, line: int) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position].isspace():
            position += 1
            continue
        match = TOKEN_PATTERN.match(text, position)
        if not match:
            raise SystemParseError("unexpected character", line, position + 1, text[position])
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), position + 1))
        position = match.end()
    return tokens


class _ExpressionParser:
    """Recursive descent over the tokens of one generator line."""

    def __init__(self, tokens: List[Token], order: VariableOrder, line: int):
        self.tokens = tokens
        self.order = order
        self.line = line
        self.index = 0

    def _peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _error(self, message: str, token: Optional[Token]) -> SystemParseError:
        if token is None:
            end = self.tokens[-1].column + len(self.tokens[-1].text) if self.tokens else 1
            return SystemParseError(message, self.line, end, None)
        return SystemParseError(message, self.line, token.column, token.text)

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise self._error("empty expression", None)
        result = self._expression()
        token = self._peek()
        if token is not None:
            if token.kind in ("number", "name") or token.text == "(":
                raise self._error("implicit multiplication is not allowed", token)
            raise self._error("unexpected token", token)
        return result

    def _expression(self) -> Polynomial:
        result = self._term()
        while self._peek() is not None and self._peek().text in ("+", "-"):
            op = self._advance().text
            right = self._term()
            result = result + right if op == "+" else result - right
        return result

    def _term(self) -> Polynomial:
        result = self._unary()
        while self._peek() is not None and self._peek().text == "*":
            self._advance()
            result = result * self._unary()
        return result

    def _unary(self) -> Polynomial:
        token = self._peek()
        if token is not None and token.text in ("+", "-"):
            self._advance()
            value = self._unary()
            return -value if token.text == "-" else value
        return self._power()

    def _power(self) -> Polynomial:
        base = self._atom()
        if self._peek() is not None and self._peek().text == "^":
            self._advance()
            token = self._peek()
            if token is None or token.kind != "number":
                raise self._error("malformed exponent", token)
            self._advance()
            base = base ** int(token.text)
        return base

    def _atom(self) -> Polynomial:
        token = self._peek()
        if token is None:
            raise self._error("unexpected end of expression", None)
        if token.kind == "number":
            self._advance()
            numerator, denominator = int(token.text), 1
            if self._peek() is not None and self._peek().text == "/":
                self._advance()
                following = self._peek()
                if following is None or following.kind != "number":
                    raise self._error("division is only allowed between integer literals", following)
                self._advance()
                denominator = int(following.text)
            try:
                return self.order.constant(numerator, denominator)
            except AlgebraError as error:
                raise self._error(str(error), token) from None
        if token.kind == "name":
            self._advance()
            if token.text not in self.order.names:
                raise self._error("unknown variable", token)
            return self.order.variable(token.text)
        if token.text == "(":
            self._advance()
            inner = self._expression()
            closing = self._peek()
            if closing is None or closing.text != ")":
                raise self._error("expected ')'", closing)
            self._advance()
            return inner
        raise self._error("unexpected token", token)


def parse_polynomial(text: str, order: VariableOrder, line: int = 0) -> Polynomial:
    """Parse one expression under ``order``; ``line`` only labels errors."""
    return _ExpressionParser(_tokenize(text, line), order, line).parse()


def _parse_order(value: str, line: int, column: int) -> Tuple[str, ...]:
    names = tuple(part.strip() for part in value.split("<"))
    for name in names:
        if not IDENTIFIER_PATTERN.match(name):
            raise SystemParseError("malformed variable name", line, column, name or None)
    if len(set(names)) != len(names):
        duplicate = next(name for name in names if names.count(name) > 1)
        raise SystemParseError("duplicate variable", line, column, duplicate)
    return names


def parse_system(text: str, field_override: Optional[str] = None) -> SystemFile:
    """
    Parse the text of a system file.

    Args:
        text: File contents; LF or CRLF line endings, ``#`` comments
        field_override: A field spec that wins over the file's ``field:`` line

    Returns:
        SystemFile: The order, the canonical generators and the field
    """
    names: Optional[Tuple[str, ...]] = None
    field_spec, field_line = RATIONAL_FIELD_SPEC, 0
    polys_line = 0
    generator_lines: List[Tuple[int, str]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].rstrip("\r")
        if not content.strip():
            continue
        if polys_line:
            generator_lines.append((number, content))
            continue
        key, separator, value = content.partition(":")
        key = key.strip().lower()
        if not separator:
            raise SystemParseError("expected 'vars:', 'field:' or 'polys:'", number, 1, content.split()[0])
        column = len(key) + 2
        if key == "vars":
            names = _parse_order(value, number, column)
        elif key == "field":
            field_spec, field_line = value.strip(), number
        elif key == "polys":
            polys_line = number
            if value.strip():
                generator_lines.append((number, " " * (len(content) - len(value)) + value))
        else:
            raise SystemParseError("unknown section", number, 1, key)

    if names is None:
        raise SystemParseError("missing 'vars:' declaration")
    if not polys_line:
        raise SystemParseError("missing 'polys:' section")

    spec = field_override if field_override is not None else field_spec
    try:
        field = CoefficientField.parse(spec)
    except SystemParseError as error:
        if field_override is None and field_line:
            raise SystemParseError(str(error).split(": ", 1)[1], field_line, 1, field_spec) from None
        raise

    order = VariableOrder(names, field)
    generators = tuple(
        _ExpressionParser(_tokenize(line_text, number), order, number).parse()
        for number, line_text in generator_lines
    )
    if not generators:
        raise SystemParseError("empty generator list", polys_line, 1, None)
    logger.debug(f"[parse_system]: variables={len(names)}, generators={len(generators)}, field={field}")
    return SystemFile(order, generators, field)


def load_system(path: Union[str, Path], field_override: Optional[str] = None) -> SystemFile:
    """Read and parse a system file; OSError propagates for unreadable paths."""
    text = Path(path).read_text(encoding="utf-8")
    return parse_system(text, field_override)
