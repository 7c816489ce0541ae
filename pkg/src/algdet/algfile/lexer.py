"""Tokenizer for the .alg / .hom text formats."""

from __future__ import annotations

import re
from dataclasses import dataclass


class AlgfileError(ValueError):
    """Any parse or semantic error in an input file; carries a source position."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message, self.line, self.col = message, line, col
        super().__init__(f"{line}:{col}: {message}" if line else message)


@dataclass(frozen=True)
class Token:
    kind: str  # ID INT STRING SYM EOF
    text: str
    line: int
    col: int


_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<ID>[A-Za-z][A-Za-z0-9_]*)
  | (?P<INT>[0-9]+)
  | (?P<STRING>"[^"\n]*")
  | (?P<SYM>->|[{}\[\]()=,+\-*^/])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise AlgfileError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind in ("ID", "INT", "SYM"):
            tokens.append(Token(kind, chunk, line, col))
        elif kind == "STRING":
            tokens.append(Token(kind, chunk[1:-1], line, col))
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens


class TokenStream:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self, k: int = 0) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def next(self) -> Token:
        t = self.peek()
        self.i = min(self.i + 1, len(self.toks) - 1)
        return t

    def at(self, text: str, k: int = 0) -> bool:
        t = self.peek(k)
        return t.kind == "SYM" and t.text == text

    def error(self, msg: str, tok: Token | None = None) -> AlgfileError:
        tok = tok or self.peek()
        return AlgfileError(msg, tok.line, tok.col)

    def expect(self, text: str) -> Token:
        t = self.peek()
        if t.kind == "SYM" and t.text == text:
            return self.next()
        raise self.error(f"expected {text!r}, found {t.text or 'end of input'!r}")

    def expect_kind(self, kind: str, what: str) -> Token:
        t = self.peek()
        if t.kind != kind:
            raise self.error(f"expected {what}, found {t.text or 'end of input'!r}")
        return self.next()
