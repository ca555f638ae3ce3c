"""Concrete syntax for expressions.

Grammar, loosest binding first::

    imply := or ( "->" imply )?          right associative, chain-collected
    or    := iand ( "|" iand )*
    iand  := and ( "@" and )*            left associative, chain-collected
    and   := not ( "&" not )*
    not   := "!" not | atom
    atom  := "0" | "1" | name | "(" imply ")"

``@`` binds tighter than ``|``, which binds tighter than ``->``.  Mixing
``@`` and ``->`` inside the same pair of parentheses is rejected with a
fix-it hint: the two chain operators pair in opposite directions, so an
unparenthesized mix has no reading that respects both.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .expr import (
    FALSE,
    TRUE,
    And,
    Expr,
    Not,
    Or,
    Var,
    iand_chain,
    imply_chain,
)

_MIX_HINT = (
    "cannot mix '@' and '->' at the same nesting level; "
    "add parentheses, e.g. (A @ B) -> C or A @ (B -> C)"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    position: int


_SINGLE = {
    "!": "NOT",
    "&": "AND",
    "@": "IAND",
    "|": "OR",
    "(": "LPAREN",
    ")": "RPAREN",
    "0": "ZERO",
    "1": "ONE",
}


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "-":
            if i + 1 < n and text[i + 1] == ">":
                tokens.append(_Token("IMPLY", "->", i))
                i += 2
                continue
            raise ParseError("expected '->' after '-'", i)
        if ch in _SINGLE and not (ch in "01" and _ident_tail(text, i)):
            tokens.append(_Token(_SINGLE[ch], ch, i))
            i += 1
            continue
        if ch.isalpha() or ch == "_" or ch.isdigit():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word[0].isdigit():
                raise ParseError(f"name cannot start with a digit: {word!r}", i)
            tokens.append(_Token("NAME", word, i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("EOF", "", n))
    return tokens


def _ident_tail(text: str, i: int) -> bool:
    """True when the digit at ``i`` starts a longer word (an invalid name)."""
    return i + 1 < len(text) and (text[i + 1].isalnum() or text[i + 1] == "_")


class _Parser:
    def __init__(self, tokens: list[_Token]) -> None:
        self.tokens = tokens
        self.index = 0

    @property
    def head(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    # Every level returns (expression, naked_iand): the flag records an
    # '@' consumed inside the current parentheses, and parentheses clear it.

    def parse_imply(self) -> tuple[Expr, bool]:
        left, left_naked = self.parse_or()
        if self.head.kind != "IMPLY":
            return left, left_naked
        if left_naked:
            raise ParseError(_MIX_HINT, self.head.position)
        operands = [left]
        while self.head.kind == "IMPLY":
            arrow = self.advance()
            right, right_naked = self.parse_or()
            if right_naked:
                raise ParseError(_MIX_HINT, arrow.position)
            operands.append(right)
        return imply_chain(operands), False

    def parse_or(self) -> tuple[Expr, bool]:
        first, naked = self.parse_iand()
        operands = [first]
        while self.head.kind == "OR":
            self.advance()
            nxt, nxt_naked = self.parse_iand()
            naked = naked or nxt_naked
            operands.append(nxt)
        if len(operands) == 1:
            return first, naked
        return Or(tuple(operands)), naked

    def parse_iand(self) -> tuple[Expr, bool]:
        first = self.parse_and()
        operands = [first]
        while self.head.kind == "IAND":
            self.advance()
            operands.append(self.parse_and())
        if len(operands) == 1:
            return first, False
        return iand_chain(operands), True

    def parse_and(self) -> Expr:
        first = self.parse_not()
        operands = [first]
        while self.head.kind == "AND":
            self.advance()
            operands.append(self.parse_not())
        if len(operands) == 1:
            return first
        return And(tuple(operands))

    def parse_not(self) -> Expr:
        if self.head.kind == "NOT":
            self.advance()
            return Not(self.parse_not())
        return self.parse_atom()

    def parse_atom(self) -> Expr:
        tok = self.advance()
        match tok.kind:
            case "ZERO":
                return FALSE
            case "ONE":
                return TRUE
            case "NAME":
                return Var(tok.text)
            case "LPAREN":
                inner, _ = self.parse_imply()
                closing = self.advance()
                if closing.kind != "RPAREN":
                    raise ParseError("expected ')'", closing.position)
                return inner
            case "RPAREN":
                raise ParseError("unmatched ')'", tok.position)
            case "EOF":
                raise ParseError("unexpected end of input", tok.position)
        raise ParseError(f"unexpected token {tok.text!r}", tok.position)


def parse(text: str) -> Expr:
    """Parse concrete syntax into an expression tree."""
    parser = _Parser(_tokenize(text))
    expr, _ = parser.parse_imply()
    if parser.head.kind != "EOF":
        raise ParseError(
            f"trailing input {parser.head.text!r}", parser.head.position
        )
    return expr
