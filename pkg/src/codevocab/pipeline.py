"""Vocabulary modeling choices applied to a lexed Java file.

The output of :func:`apply` is a flat list of :class:`CorpusWord`. Structural
words (case markers, placeholders, whitespace markers) carry ``is_marker`` and
are written unescaped in corpus files; anything derived from source text is
escaped so it can never be confused with a marker.
"""
from __future__ import annotations

import enum
import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field, fields
from pathlib import Path

from .lexer import Token, TokenKind

WORD_START = "<w>"
WORD_END = "</w>"
UPPER = "<Upper>"
ALLCAPS = "<UPPER>"
UNDERSCORE = "<_>"
COMMENT = "<comment>"
STRING = "<string>"
NON_ENGLISH = "<non-en>"
NUMBER = "<num>"
UNKNOWN = "<unk>"
TAB = "<tab>"
NEWLINE = "<nl>"
SPACE = "<sp>"

CASE_MARKERS = frozenset({UPPER, ALLCAPS})
MAX_RUN = 8

_WS_NAMES = {" ": "sp", "\t": "tab", "\n": "nl"}


def _run_markers() -> dict[str, tuple[str, int | None]]:
    table: dict[str, tuple[str, int | None]] = {}
    for char, name in _WS_NAMES.items():
        table[f"<{name}>"] = (char, 1)
        for n in range(2, MAX_RUN + 1):
            table[f"<{name}{n}>"] = (char, n)
        table[f"<{name}{MAX_RUN}+>"] = (char, None)
    return table


# marker -> (whitespace char, run length); None length means "more than MAX_RUN"
WHITESPACE_MARKERS = _run_markers()
NEWLINE_MARKERS = frozenset(m for m, (c, _) in WHITESPACE_MARKERS.items() if c == "\n")
MARKERS = frozenset(
    {WORD_START, WORD_END, UPPER, ALLCAPS, UNDERSCORE, COMMENT, STRING,
     NON_ENGLISH, NUMBER, UNKNOWN}
) | frozenset(WHITESPACE_MARKERS)


class ConfigError(ValueError):
    """Invalid pipeline configuration; ``key`` names the offending entry."""

    def __init__(self, key: str, message: str):
        super().__init__(f"{key}: {message}")
        self.key = key


class DecodeError(ValueError):
    pass


class WhitespacePolicy(enum.Enum):
    KEEP_EACH = "KeepEach"
    MERGE_RUNS = "MergeRuns"
    DROP = "Drop"


class ContentPolicy(enum.Enum):
    KEEP_AS_WORDS = "KeepAsWords"
    PLACEHOLDER = "Placeholder"


class NumberPolicy(enum.Enum):
    KEEP = "Keep"
    PLACEHOLDER_ALL = "PlaceholderAll"
    KEEP_SMALL = "KeepSmall"
    SPLIT_DIGITS = "SplitDigits"


class NonEnglishPolicy(enum.Enum):
    KEEP = "Keep"
    REPLACE_TOKEN = "ReplaceToken"
    REPLACE_AND_FILTER_FILES = "ReplaceTokenAndFilterFiles"


class SplitPolicy(enum.Enum):
    UNSPLIT = "Unsplit"
    SPLIT_CASE_ENCODED = "SplitCaseEncoded"
    SPLIT_KEEP_CASE = "SplitKeepCase"


@dataclass(frozen=True)
class PipelineConfig:
    whitespace_policy: WhitespacePolicy = WhitespacePolicy.KEEP_EACH
    comment_policy: ContentPolicy = ContentPolicy.KEEP_AS_WORDS
    string_policy: ContentPolicy = ContentPolicy.KEEP_AS_WORDS
    number_policy: NumberPolicy = NumberPolicy.KEEP
    small_number_threshold: int = 100
    nonenglish_policy: NonEnglishPolicy = NonEnglishPolicy.KEEP
    code_threshold: float = 0.006
    code_and_strings_threshold: float = 0.019
    split_policy: SplitPolicy = SplitPolicy.UNSPLIT
    # kind name (or "*" for every kind) -> minimum training frequency
    min_frequency: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        for key, k in self.min_frequency.items():
            if key != "*" and key not in _KIND_BY_NAME:
                raise ConfigError("min_frequency", f"unknown token kind {key!r}")
            if k < 1:
                raise ConfigError("min_frequency", f"threshold for {key} must be >= 1")
        if self.small_number_threshold < 0:
            raise ConfigError("number_policy", "threshold must be >= 0")

    def min_frequency_for(self, kind: TokenKind | None) -> int:
        default = self.min_frequency.get("*", 1)
        if kind is None:
            return default
        return self.min_frequency.get(kind.value, default)

    @property
    def filters_infrequent(self) -> bool:
        return any(k > 1 for k in self.min_frequency.values())

    def dumps(self) -> str:
        """Flat ``key = value`` text; parameterised policies carry their arguments inline."""
        number = self.number_policy.value
        if self.number_policy is NumberPolicy.KEEP_SMALL:
            number += f"({self.small_number_threshold})"
        nonenglish = self.nonenglish_policy.value
        if self.nonenglish_policy is NonEnglishPolicy.REPLACE_AND_FILTER_FILES:
            nonenglish += f"({self.code_threshold!r},{self.code_and_strings_threshold!r})"
        min_freq = ",".join(f"{k}:{v}" for k, v in sorted(self.min_frequency.items()))
        lines = [
            ("whitespace_policy", self.whitespace_policy.value),
            ("comment_policy", self.comment_policy.value),
            ("string_policy", self.string_policy.value),
            ("number_policy", number),
            ("nonenglish_policy", nonenglish),
            ("split_policy", self.split_policy.value),
            ("min_frequency", min_freq),
        ]
        return "".join(f"{k} = {v}\n" for k, v in lines)

    @classmethod
    def loads(cls, text: str) -> "PipelineConfig":
        kwargs: dict = {}
        for lineno, raw in enumerate(text.split("\n"), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not sep:
                raise ConfigError(key or f"line {lineno}", "expected 'key = value'")
            if key not in _PARSERS:
                raise ConfigError(key, "unknown configuration key")
            if key in kwargs or any(k in kwargs for k in _ALIASES.get(key, ())):
                raise ConfigError(key, "duplicate key")
            kwargs.update(_PARSERS[key](key, value))
        return cls(**kwargs)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8", newline="\n")

    @classmethod
    def load(cls, path: str | Path) -> "PipelineConfig":
        return cls.loads(Path(path).read_text(encoding="utf-8"))


_KIND_BY_NAME = {k.value: k for k in TokenKind}
_CALL = re.compile(r"^(\w+)(?:\((.*)\))?$")


def _enum_value(enum_cls, key: str, value: str):
    try:
        return enum_cls(value)
    except ValueError:
        choices = ", ".join(e.value for e in enum_cls)
        raise ConfigError(key, f"invalid value {value!r} (expected one of {choices})") from None


def _parse_call(key: str, value: str) -> tuple[str, list[str]]:
    m = _CALL.match(value)
    if not m:
        raise ConfigError(key, f"invalid value {value!r}")
    args = [a.strip() for a in m.group(2).split(",")] if m.group(2) else []
    return m.group(1), args


def _parse_number_policy(key: str, value: str) -> dict:
    name, args = _parse_call(key, value)
    policy = _enum_value(NumberPolicy, key, name)
    out: dict = {"number_policy": policy}
    if args:
        if policy is not NumberPolicy.KEEP_SMALL or len(args) != 1:
            raise ConfigError(key, f"unexpected arguments in {value!r}")
        try:
            out["small_number_threshold"] = int(args[0])
        except ValueError:
            raise ConfigError(key, f"threshold must be an integer: {args[0]!r}") from None
    return out


def _parse_nonenglish_policy(key: str, value: str) -> dict:
    name, args = _parse_call(key, value)
    policy = _enum_value(NonEnglishPolicy, key, name)
    out: dict = {"nonenglish_policy": policy}
    if args:
        if policy is not NonEnglishPolicy.REPLACE_AND_FILTER_FILES or len(args) != 2:
            raise ConfigError(key, f"unexpected arguments in {value!r}")
        try:
            out["code_threshold"], out["code_and_strings_threshold"] = map(float, args)
        except ValueError:
            raise ConfigError(key, f"thresholds must be numbers: {value!r}") from None
    return out


def _parse_min_frequency(key: str, value: str) -> dict:
    table: dict[str, int] = {}
    for item in filter(None, (v.strip() for v in value.split(","))):
        kind, sep, k = item.partition(":")
        try:
            table[kind.strip()] = int(k)
        except ValueError:
            raise ConfigError(key, f"invalid entry {item!r} (expected Kind:count)") from None
    return {"min_frequency": table}


_PARSERS = {
    "whitespace_policy": lambda k, v: {"whitespace_policy": _enum_value(WhitespacePolicy, k, v)},
    "comment_policy": lambda k, v: {"comment_policy": _enum_value(ContentPolicy, k, v)},
    "string_policy": lambda k, v: {"string_policy": _enum_value(ContentPolicy, k, v)},
    "number_policy": _parse_number_policy,
    "nonenglish_policy": _parse_nonenglish_policy,
    "split_policy": lambda k, v: {"split_policy": _enum_value(SplitPolicy, k, v)},
    "min_frequency": _parse_min_frequency,
}
_ALIASES = {
    "number_policy": ("small_number_threshold",),
    "nonenglish_policy": ("code_threshold", "code_and_strings_threshold"),
}
assert {f.name for f in fields(PipelineConfig)} == set(_PARSERS) | {
    a for names in _ALIASES.values() for a in names
}


@dataclass(frozen=True, slots=True)
class CorpusWord:
    text: str
    is_marker: bool = False
    # kind of the source token the word came from; None for markers
    kind: TokenKind | None = None


def marker(text: str) -> CorpusWord:
    return CorpusWord(text, True, None)


@dataclass(frozen=True)
class FileFiltered:
    """Outcome of :func:`apply` for a file dropped by the non-English filter."""

    code_ratio: float
    code_and_strings_ratio: float


# --- non-English detection -------------------------------------------------

def is_nonenglish(word: str) -> bool:
    return not word.isascii()


_WS_SPLIT = re.compile(r"((?:\r\n|\r|\n)+| +|\t+|\f+)")


def _body_words(text: str) -> list[str]:
    return [p for p in _WS_SPLIT.split(text) if p and not _WS_SPLIT.fullmatch(p)]


def file_nonenglish_ratio(tokens: list[Token]) -> tuple[float, float]:
    """Fraction of non-English identifiers, and of identifiers plus string words."""
    n_ident = bad_ident = n_str = bad_str = 0
    for tok in tokens:
        if tok.kind is TokenKind.IDENTIFIER:
            n_ident += 1
            bad_ident += is_nonenglish(tok.text)
        elif tok.kind is TokenKind.STRING:
            for w in _body_words(_string_parts(tok.text)[1]):
                n_str += 1
                bad_str += is_nonenglish(w)
    code = bad_ident / n_ident if n_ident else 0.0
    total = n_ident + n_str
    both = (bad_ident + bad_str) / total if total else 0.0
    return code, both


# --- identifier splitting ----------------------------------------------------

def _segments(word: str) -> list[str]:
    """camelCase / snake_case segmentation; concatenating the result gives ``word``.

    Digits and uncased characters never start a segment, so ``utf8Decoder``
    splits as ``utf8 | Decoder``.
    """
    segs: list[str] = []
    cur = ""
    for c in word:
        if c == "_":
            if cur:
                segs.append(cur)
            segs.append("_")
            cur = ""
        elif c.isupper():
            if cur and not cur[-1].isupper():
                segs.append(cur)
                cur = ""
            cur += c
        elif c.islower() and len(cur) >= 2 and cur[-1].isupper() and cur[-2].isupper():
            # URLException -> URL | Exception: the last capital starts the word
            segs.append(cur[:-1])
            cur = cur[-1] + c
        elif c.islower() and cur and not cur[-1].isalpha() and any(ch.isupper() for ch in cur[1:]):
            # HTTP2server -> HTTP2 | server keeps every segment case-encodable
            segs.append(cur)
            cur = c
        else:
            cur += c
    if cur:
        segs.append(cur)
    return segs


def _case_encode(seg: str) -> list[str]:
    lower = seg.lower()
    if lower == seg:
        return [seg]
    if lower[:1].upper() + lower[1:] == seg:
        return [UPPER, lower]
    if lower.upper() == seg:
        return [ALLCAPS, lower]
    # case mapping that cannot be undone (rare Unicode); keep verbatim
    return [seg]


def split_identifier(word: str, keep_case: bool) -> list[CorpusWord]:
    """Split an identifier at underscores and case changes.

    With ``keep_case`` false the pieces are lowercased and preceded by
    ``<Upper>``/``<UPPER>`` markers. Underscores become ``<_>`` in both modes.
    More than one resulting word is wrapped in ``<w> ... </w>``.
    """
    out: list[CorpusWord] = []
    n_segments = 0
    for seg in _segments(word):
        n_segments += 1
        if seg == "_":
            out.append(marker(UNDERSCORE))
        elif keep_case:
            out.append(CorpusWord(seg, False, TokenKind.IDENTIFIER))
        else:
            for piece in _case_encode(seg):
                if piece in CASE_MARKERS:
                    out.append(marker(piece))
                else:
                    out.append(CorpusWord(piece, False, TokenKind.IDENTIFIER))
    if n_segments > 1:
        out = [marker(WORD_START), *out, marker(WORD_END)]
    return out


def _apply_case(case: str | None, text: str) -> str:
    if case == UPPER:
        return text[:1].upper() + text[1:]
    if case == ALLCAPS:
        return text.upper()
    return text


def unsplit_identifier(words: list[CorpusWord]) -> str:
    """Invert :func:`split_identifier`."""
    texts = [(w.text, w.is_marker) for w in words]
    if not texts:
        raise DecodeError("empty word sequence")
    if texts[0] == (WORD_START, True):
        if texts[-1] != (WORD_END, True) or len(texts) < 2:
            raise DecodeError(f"{WORD_START} without matching {WORD_END}")
        inner = texts[1:-1]
    else:
        inner = texts
    parts: list[str] = []
    case: str | None = None
    for text, is_marker in inner:
        if is_marker:
            if case is not None:
                raise DecodeError(f"{case} followed by marker {text}")
            if text in CASE_MARKERS:
                case = text
            elif text == UNDERSCORE:
                parts.append("_")
            else:
                raise DecodeError(f"unexpected marker {text} inside identifier")
        else:
            parts.append(_apply_case(case, text))
            case = None
    if case is not None:
        raise DecodeError(f"dangling case marker {case}")
    return "".join(parts)


def split_number(literal: str) -> list[CorpusWord]:
    out = [CorpusWord(c, False, TokenKind.NUMBER) for c in literal]
    if len(out) > 1:
        out = [marker(WORD_START), *out, marker(WORD_END)]
    return out


# --- whole-file application ---------------------------------------------------

def _string_parts(text: str) -> tuple[str, str, str]:
    """(opening quote, body, closing quote); an unterminated literal has no closing quote."""
    quote = text[0]
    if len(text) >= 2 and text.endswith(quote) and not _escaped_end(text):
        return quote, text[1:-1], quote
    return quote, text[1:], ""


def _escaped_end(text: str) -> bool:
    # a trailing quote preceded by an odd run of backslashes belongs to the body
    body = text[1:-1]
    n = len(body) - len(body.rstrip("\\"))
    return n % 2 == 1


def _whitespace_words(text: str, policy: WhitespacePolicy) -> list[CorpusWord]:
    """Markers for one run of whitespace characters produced by the lexer."""
    if policy is WhitespacePolicy.DROP:
        return []
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    char = text[0]
    name = _WS_NAMES.get(char)
    if name is None:
        # form feeds have no marker; keep them as literal words
        return [CorpusWord(text, False, TokenKind.WHITESPACE)]
    n = len(text)
    if policy is WhitespacePolicy.KEEP_EACH:
        return [marker(f"<{name}>")] * n
    if n == 1:
        return [marker(f"<{name}>")]
    if n <= MAX_RUN:
        return [marker(f"<{name}{n}>")]
    return [marker(f"<{name}{MAX_RUN}+>")]


def _merge_whitespace(tokens: list[Token]) -> list[Token]:
    """Join consecutive single-character whitespace tokens of the same character."""
    out: list[Token] = []
    for tok in tokens:
        if (
            out
            and tok.kind is TokenKind.WHITESPACE
            and out[-1].kind is TokenKind.WHITESPACE
            and _norm_ws(tok.text)[0] == _norm_ws(out[-1].text)[0]
        ):
            prev = out[-1]
            out[-1] = Token(_norm_ws(prev.text) + _norm_ws(tok.text), prev.kind, prev.line, prev.column)
        else:
            out.append(tok)
    return out


def _norm_ws(text: str) -> str:
    return "\n" if text in ("\r\n", "\r") else text


class _Emitter:
    def __init__(self, config: PipelineConfig):
        self.config = config
        self.replace_nonenglish = config.nonenglish_policy is not NonEnglishPolicy.KEEP

    def word(self, text: str, kind: TokenKind) -> CorpusWord:
        if self.replace_nonenglish and is_nonenglish(text):
            return marker(NON_ENGLISH)
        return CorpusWord(text, False, kind)

    def body(self, text: str, kind: TokenKind) -> list[CorpusWord]:
        out: list[CorpusWord] = []
        for part in _WS_SPLIT.split(text):
            if not part:
                continue
            if _WS_SPLIT.fullmatch(part):
                out.extend(_whitespace_words(part, self.config.whitespace_policy))
            else:
                out.append(self.word(part, kind))
        return out

    def comment(self, tok: Token) -> list[CorpusWord]:
        if self.config.comment_policy is ContentPolicy.PLACEHOLDER:
            return [marker(COMMENT)]
        return _wrap(self.body(tok.text, TokenKind.COMMENT))

    def string(self, tok: Token) -> list[CorpusWord]:
        if self.config.string_policy is ContentPolicy.PLACEHOLDER:
            return [marker(STRING)]
        if tok.kind is TokenKind.CHAR and not _WS_SPLIT.search(tok.text):
            return [self.word(tok.text, tok.kind)]
        open_q, body, close_q = _string_parts(tok.text)
        words = [CorpusWord(open_q, False, tok.kind), *self.body(body, tok.kind)]
        if close_q:
            words.append(CorpusWord(close_q, False, tok.kind))
        return _wrap(words)

    def number(self, tok: Token) -> list[CorpusWord]:
        policy = self.config.number_policy
        if policy is NumberPolicy.KEEP:
            return [CorpusWord(tok.text, False, tok.kind)]
        if policy is NumberPolicy.PLACEHOLDER_ALL:
            return [marker(NUMBER)]
        if policy is NumberPolicy.KEEP_SMALL:
            value = number_value(tok.text)
            if value is not None and value < self.config.small_number_threshold:
                return [CorpusWord(tok.text, False, tok.kind)]
            return [marker(NUMBER)]
        return split_number(tok.text)

    def identifier(self, tok: Token) -> list[CorpusWord]:
        policy = self.config.split_policy
        if policy is SplitPolicy.UNSPLIT:
            return [self.word(tok.text, tok.kind)]
        words = split_identifier(tok.text, keep_case=policy is SplitPolicy.SPLIT_KEEP_CASE)
        if tok.kind is TokenKind.KEYWORD:
            words = [CorpusWord(w.text, w.is_marker, None if w.is_marker else tok.kind) for w in words]
        if self.replace_nonenglish:
            words = [marker(NON_ENGLISH) if not w.is_marker and is_nonenglish(w.text) else w for w in words]
        return words


def _wrap(words: list[CorpusWord]) -> list[CorpusWord]:
    if len(words) > 1:
        return [marker(WORD_START), *words, marker(WORD_END)]
    return words


def number_value(literal: str) -> int | None:
    """Integral value of a Java numeric literal, or None if it is not integral."""
    text = literal.replace("_", "")
    lower = text.lower()
    try:
        if lower.startswith("0x") and "p" in lower:
            value = float.fromhex(lower.rstrip("fd"))
        elif lower.startswith(("0x", "0b")):
            return int(lower.rstrip("l"), 0)
        elif lower.endswith("l"):
            body = lower[:-1]
            return int(body, 8) if len(body) > 1 and body.startswith("0") else int(body)
        elif any(c in lower for c in ".efd"):
            value = float(lower.rstrip("fd"))
        else:
            return int(lower, 8) if len(lower) > 1 and lower.startswith("0") else int(lower)
    except ValueError:
        return None
    return int(value) if value.is_integer() else None


def apply(tokens: list[Token], config: PipelineConfig) -> list[CorpusWord] | FileFiltered:
    """Turn one file's tokens into corpus words under ``config``."""
    if config.nonenglish_policy is NonEnglishPolicy.REPLACE_AND_FILTER_FILES:
        code, both = file_nonenglish_ratio(tokens)
        if code > config.code_threshold or both > config.code_and_strings_threshold:
            return FileFiltered(code, both)
    emit = _Emitter(config)
    if config.whitespace_policy is WhitespacePolicy.MERGE_RUNS:
        tokens = _merge_whitespace(tokens)
    out: list[CorpusWord] = []
    for tok in tokens:
        kind = tok.kind
        if kind is TokenKind.COMMENT:
            out.extend(emit.comment(tok))
        elif kind is TokenKind.STRING or kind is TokenKind.CHAR:
            out.extend(emit.string(tok))
        elif kind is TokenKind.NUMBER:
            out.extend(emit.number(tok))
        elif kind is TokenKind.WHITESPACE:
            out.extend(_whitespace_words(tok.text, config.whitespace_policy))
        elif kind is TokenKind.IDENTIFIER or kind is TokenKind.KEYWORD:
            out.extend(emit.identifier(tok))
        else:
            out.append(emit.word(tok.text, kind))
    return out


def filter_infrequent(
    words: Iterable[CorpusWord],
    counts: Mapping[str, int],
    k: int = 1,
    per_kind: Mapping[TokenKind, int] | None = None,
) -> list[CorpusWord]:
    """Replace words seen fewer than their kind's threshold in ``counts`` by ``<unk>``.

    ``counts`` must come from the training split; markers are never replaced.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    per_kind = per_kind or {}
    out = []
    for w in words:
        threshold = per_kind.get(w.kind, k) if w.kind is not None else k
        if not w.is_marker and counts.get(w.text, 0) < threshold:
            out.append(marker(UNKNOWN))
        else:
            out.append(w)
    return out


def decode_words(words: list[CorpusWord]) -> str:
    """Rebuild source text from a lossless word stream.

    Raises `DecodeError` on placeholders or merged whitespace runs that no
    longer record their exact length.
    """
    parts: list[str] = []
    case: str | None = None
    depth = 0
    for w in words:
        if not w.is_marker:
            parts.append(_apply_case(case, w.text))
            case = None
            continue
        text = w.text
        if case is not None:
            raise DecodeError(f"{case} followed by marker {text}")
        if text in CASE_MARKERS:
            case = text
        elif text == UNDERSCORE:
            parts.append("_")
        elif text == WORD_START:
            if depth:
                raise DecodeError(f"nested {WORD_START}")
            depth = 1
        elif text == WORD_END:
            if not depth:
                raise DecodeError(f"{WORD_END} without {WORD_START}")
            depth = 0
        elif text in WHITESPACE_MARKERS:
            char, n = WHITESPACE_MARKERS[text]
            if n is None:
                raise DecodeError(f"{text} does not record the run length")
            parts.append(char * n)
        else:
            raise DecodeError(f"placeholder {text} cannot be decoded")
    if case is not None or depth:
        raise DecodeError("truncated word sequence")
    return "".join(parts)


# --- corpus file format -------------------------------------------------------

def escape_word(text: str) -> str:
    text = text.replace("\\", "\\\\")
    if text.startswith("<") and text.endswith(">"):
        text = "\\" + text
    return text


def unescape_word(token: str) -> CorpusWord:
    """Parse one space-separated token of a corpus file."""
    if "\\" not in token:
        if token.startswith("<") and token.endswith(">"):
            return CorpusWord(token, True)
        return CorpusWord(token)
    out = []
    i = 0
    if token.startswith("\\<"):
        if not token.endswith(">"):
            raise DecodeError(f"malformed escape in {token!r}")
        out.append("<")
        i = 2
    while i < len(token):
        c = token[i]
        if c == "\\":
            if token[i + 1 : i + 2] != "\\":
                raise DecodeError(f"malformed escape in {token!r}")
            out.append("\\")
            i += 2
        else:
            out.append(c)
            i += 1
    return CorpusWord("".join(out))


def format_words(words: Iterable[CorpusWord]) -> str:
    """Serialize one file's words: space-separated, a line break after each newline marker."""
    parts: list[str] = []
    for w in words:
        if w.is_marker:
            parts.append(w.text)
            parts.append("\n" if w.text in NEWLINE_MARKERS else " ")
        else:
            parts.append(escape_word(w.text))
            parts.append(" ")
    if not parts:
        return ""
    parts[-1] = "\n"
    return "".join(parts)


def split_tokens(text: str) -> list[str]:
    """Raw (still escaped) tokens of a corpus file; only space and LF separate words."""
    return [t for line in text.split("\n") for t in line.split(" ") if t]


def parse_words(text: str) -> list[CorpusWord]:
    return [unescape_word(t) for t in split_tokens(text)]


def read_source(path: str | Path) -> str:
    """Read a Java file as UTF-8 with line endings normalised to LF."""
    data = Path(path).read_bytes()
    text = data.decode("utf-8", errors="replace")
    return text.replace("\r\n", "\n").replace("\r", "\n")
