"""Lossless lexer for Java source files.

Every character of the input ends up in exactly one token, so joining the
``text`` of all tokens reproduces the source. Unicode escapes are left as-is
and text blocks are not recognised.
"""
from __future__ import annotations

import enum
import re
import warnings
from collections import Counter
from dataclasses import dataclass


class LexerWarning(UserWarning):
    pass


class TokenKind(enum.Enum):
    IDENTIFIER = "Identifier"
    KEYWORD = "Keyword"
    NUMBER = "NumberLiteral"
    STRING = "StringLiteral"
    CHAR = "CharLiteral"
    COMMENT = "Comment"
    WHITESPACE = "Whitespace"
    OPERATOR = "Operator"
    PUNCTUATION = "Punctuation"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class Token:
    text: str
    kind: TokenKind
    line: int
    column: int


KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while true false null""".split()
)

# longest first so the regex alternation picks maximal munch
_OPERATORS = sorted(
    """>>>= <<= >>= >>> -> ++ -- && || == != <= >= += -= *= /= &= |= ^= %=
    << >> = > < ! ~ ? : + - * / & | ^ %""".split(),
    key=len,
    reverse=True,
)
_PUNCTUATION = sorted("... :: ( ) { } [ ] ; , . @".split(), key=len, reverse=True)

_NUMBER = r"""
    0[xX][0-9a-fA-F_]*(?:\.[0-9a-fA-F_]*)?(?:[pP][+-]?[0-9_]+)?[fFdDlL]?
  | 0[bB][01_]+[lL]?
  | (?:[0-9][0-9_]*(?:\.[0-9_]*)?|\.[0-9][0-9_]*)(?:[eE][+-]?[0-9_]+)?[fFdDlL]?
"""

_MASTER = re.compile(
    "|".join(
        [
            r"(?P<comment>//[^\r\n]*|/\*[\s\S]*?\*/)",
            r"(?P<open_comment>/\*[\s\S]*)",
            r"(?P<newline>\r\n|\r|\n)",
            r"(?P<spaces> +)",
            r"(?P<tab>\t)",
            r"(?P<formfeed>\f+)",
            r'(?P<string>"(?:[^"\\]|\\[\s\S])*")',
            r'(?P<open_string>"[\s\S]*)',
            r"(?P<char>'(?:[^'\\]|\\[\s\S])*')",
            r"(?P<open_char>'[\s\S]*)",
            r"(?P<number>" + re.sub(r"\s+", "", _NUMBER) + ")",
            r"(?P<word>(?:[^\W\d]|\$)(?:\w|\$)*)",
            # punctuation first so that :: wins over the : operator
            "(?P<punctuation>" + "|".join(re.escape(p) for p in _PUNCTUATION) + ")",
            "(?P<operator>" + "|".join(re.escape(op) for op in _OPERATORS) + ")",
            r"(?P<other>[\s\S])",
        ]
    )
)

_GROUP_KIND = {
    "comment": TokenKind.COMMENT,
    "open_comment": TokenKind.COMMENT,
    "newline": TokenKind.WHITESPACE,
    "spaces": TokenKind.WHITESPACE,
    "tab": TokenKind.WHITESPACE,
    "formfeed": TokenKind.WHITESPACE,
    "string": TokenKind.STRING,
    "open_string": TokenKind.STRING,
    "char": TokenKind.CHAR,
    "open_char": TokenKind.CHAR,
    "number": TokenKind.NUMBER,
    "operator": TokenKind.OPERATOR,
    "punctuation": TokenKind.PUNCTUATION,
    "other": TokenKind.PUNCTUATION,
}

_LINE_BREAK = re.compile(r"\r\n|\r|\n")


def lex(source: str) -> list[Token]:
    """Split ``source`` into typed tokens.

    Unterminated strings, char literals and block comments swallow the rest
    of the input as one token of the open kind and emit a `LexerWarning`.
    """
    tokens: list[Token] = []
    line, col = 1, 1
    pos, end = 0, len(source)
    while pos < end:
        m = _MASTER.match(source, pos)
        group = m.lastgroup
        text = m.group()
        if group == "word":
            kind = TokenKind.KEYWORD if text in KEYWORDS else TokenKind.IDENTIFIER
        else:
            kind = _GROUP_KIND[group]
            if group.startswith("open_"):
                warnings.warn(
                    f"unterminated {kind.value} at line {line}, column {col}",
                    LexerWarning,
                    stacklevel=2,
                )
        tokens.append(Token(text, kind, line, col))
        breaks = list(_LINE_BREAK.finditer(text)) if kind in _MULTILINE else ()
        if breaks:
            line += len(breaks)
            col = len(text) - breaks[-1].end() + 1
        else:
            col += len(text)
        pos = m.end()
    return tokens


_MULTILINE = frozenset(
    {TokenKind.WHITESPACE, TokenKind.COMMENT, TokenKind.STRING, TokenKind.CHAR}
)


def count_kinds(tokens: list[Token]) -> dict[TokenKind, int]:
    return dict(Counter(tok.kind for tok in tokens))


def _escape(text: str) -> str:
    return (
        text.replace("\\", "\\\\")
        .replace("\t", "\\t")
        .replace("\n", "\\n")
        .replace("\r", "\\r")
    )


def dump(tokens: list[Token]) -> str:
    """Debug listing: one ``<kind>\\t<escaped text>`` line per token."""
    return "".join(f"{tok.kind.value}\t{_escape(tok.text)}\n" for tok in tokens)
