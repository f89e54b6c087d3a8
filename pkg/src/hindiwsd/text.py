"""Normalization and tokenization of Devanagari (and general UTF-8) text."""

from __future__ import annotations

import re
import unicodedata

DANDA = "।"
DOUBLE_DANDA = "॥"

# Discarded delimiters. Typographic quotes are included alongside their ASCII forms.
PUNCTUATION = DANDA + DOUBLE_DANDA + ".,;:!?\"'()-" + "‘’“”"

_DELIMITERS = re.compile("[" + re.escape(PUNCTUATION) + r"\s]+")


def normalize(raw: str | bytes) -> str:
    """Return ``raw`` in NFC with surrounding whitespace removed.

    Byte input is decoded strictly as UTF-8, so malformed input raises
    :class:`UnicodeDecodeError`.
    """
    if isinstance(raw, bytes):
        raw = raw.decode("utf-8")
    return unicodedata.normalize("NFC", raw).strip()


def tokenize(text: str) -> tuple[str, ...]:
    """Split normalized text on whitespace and punctuation.

    Punctuation never becomes a token; words and digits are kept.

    >>> tokenize("नीलाम हुई है।")
    ('नीलाम', 'हुई', 'है')
    """
    return tuple(tok for tok in _DELIMITERS.split(text) if tok)


def find_target(tokens, target: str) -> list[int]:
    return [i for i, tok in enumerate(tokens) if tok == target]


def is_valid_token(token) -> bool:
    return (
        isinstance(token, str)
        and token != ""
        and not any(ch.isspace() for ch in token)
        and unicodedata.is_normalized("NFC", token)
    )
