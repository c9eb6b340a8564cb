"""Text cleansing and conversion of pre-segmented, pre-tagged input to CoNLL-U.

Input arrives as JSON lines, one raw EDU per line:

    {"edu_id": "doc1-3", "tokens": [{"form": "...", "upos": "...", "head": 0}, ...]}

``head`` may be null or absent on every token (a parse request). Cleansing
removes control and zero-width characters plus all whitespace inside forms,
drops tokens that become empty, and re-joins number fragments split by
upstream word segmentation.
"""

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .conllu import Edu, Token
from .errors import CleansingError, ConversionError

# Default removable set: control characters and zero-width code points.
DEFAULT_REMOVABLE = frozenset(
    {chr(c) for c in range(0x00, 0x20)}
    | {chr(c) for c in range(0x200B, 0x200E)}
    | {"﻿"}
)


@dataclass(frozen=True)
class RawToken:
    form: str
    upos: str = "_"
    head: Optional[int] = None


@dataclass(frozen=True)
class RawEdu:
    edu_id: str
    tokens: tuple[RawToken, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))


def read_raw_jsonl(lines: Iterable[str]) -> list[RawEdu]:
    """Parse JSON-lines raw EDUs; blank lines are skipped."""
    edus = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ConversionError(f"line {lineno}: invalid JSON: {exc}") from None
        try:
            tokens = tuple(
                RawToken(
                    form=str(t["form"]),
                    upos=str(t.get("upos", "_")),
                    head=None if t.get("head") is None else int(t["head"]),
                )
                for t in obj["tokens"]
            )
            edus.append(RawEdu(edu_id=str(obj.get("edu_id", lineno)), tokens=tokens))
        except (KeyError, TypeError) as exc:
            raise ConversionError(f"line {lineno}: malformed raw EDU: {exc}") from None
    return edus


def _clean_form(form: str, removable: frozenset) -> str:
    return "".join(c for c in form if c not in removable and not c.isspace())


def clean_tokens(raw: RawEdu, removable: frozenset = DEFAULT_REMOVABLE) -> RawEdu:
    """Cleanse forms, drop emptied tokens, and merge split number fragments.

    Heads of surviving tokens are reindexed. A surviving token whose head
    was dropped raises CleansingError. When adjacent digits-only tokens are
    merged, the merged token keeps the leftmost POS and the leftmost head
    that points outside the merged group.
    """
    cleaned = [
        RawToken(_clean_form(t.form, removable), t.upos, t.head) for t in raw.tokens
    ]

    # Drop emptied tokens and reindex heads into the surviving numbering.
    new_index: dict[int, int] = {}
    survivors: list[RawToken] = []
    for old, tok in enumerate(cleaned, start=1):
        if tok.form:
            survivors.append(tok)
            new_index[old] = len(survivors)
    remapped: list[RawToken] = []
    for tok in survivors:
        if tok.head is None or tok.head == 0:
            remapped.append(tok)
        elif tok.head in new_index:
            remapped.append(RawToken(tok.form, tok.upos, new_index[tok.head]))
        else:
            raise CleansingError(
                f"EDU {raw.edu_id}: token {tok.form!r} heads a dropped token "
                f"(old index {tok.head})")

    # Merge adjacent digits-only tokens; heads here refer to the pre-merge
    # numbering and are remapped afterwards.
    groups: list[list[int]] = []  # pre-merge indices per output token
    merged: list[RawToken] = []
    for idx, tok in enumerate(remapped, start=1):
        if merged and merged[-1].form.isdigit() and tok.form.isdigit():
            prev = merged[-1]
            group = groups[-1]
            head = prev.head
            if head in group or head == idx:
                head = tok.head
            merged[-1] = RawToken(prev.form + tok.form, prev.upos, head)
            group.append(idx)
        else:
            merged.append(tok)
            groups.append([idx])
    merge_index: dict[int, int] = {}
    for out, group in enumerate(groups, start=1):
        for idx in group:
            merge_index[idx] = out
    final: list[RawToken] = []
    for out, tok in enumerate(merged, start=1):
        if tok.head is None or tok.head == 0:
            final.append(tok)
        elif merge_index.get(tok.head) == out:
            raise CleansingError(
                f"EDU {raw.edu_id}: merged token {tok.form!r} would head itself")
        else:
            final.append(RawToken(tok.form, tok.upos, merge_index[tok.head]))
    return RawEdu(edu_id=raw.edu_id, tokens=tuple(final))


def to_conllu(raw: RawEdu) -> Edu:
    """Convert a cleansed raw EDU to a CoNLL-U EDU (ids 1..n, "_" elsewhere)."""
    n = len(raw.tokens)
    if n == 0:
        raise ConversionError(f"EDU {raw.edu_id}: no tokens after cleansing")
    with_head = sum(1 for t in raw.tokens if t.head is not None)
    if with_head not in (0, n):
        raise ConversionError(
            f"EDU {raw.edu_id}: {with_head} of {n} tokens have heads; "
            "heads must be all present or all absent")
    for i, tok in enumerate(raw.tokens, start=1):
        if tok.head is not None and not 0 <= tok.head <= n:
            raise ConversionError(
                f"EDU {raw.edu_id}: head {tok.head} of token {i} out of range [0, {n}]")
        if tok.head == i:
            raise ConversionError(f"EDU {raw.edu_id}: token {i} is its own head")
    comments = (f"# sent_id = {raw.edu_id}",) if raw.edu_id else ()
    tokens = tuple(
        Token(id=i, form=t.form, upos=t.upos or "_", head=t.head)
        for i, t in enumerate(raw.tokens, start=1)
    )
    return Edu(tokens=tokens, comments=comments)
