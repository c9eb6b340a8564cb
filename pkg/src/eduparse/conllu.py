"""CoNLL-U data model, reading/writing, and dependency-tree validation.

The on-disk format is UTF-8 with LF line endings, ten tab-separated
columns per token line, "#"-prefixed comment lines attached to the
following EDU, and a blank line after every EDU. Unused columns are
preserved verbatim; the toolkit never synthesizes lemmas or deprels.
An underscore in the head column marks an unannotated token (a parse
request); everywhere else heads are integers in [0, n] with 0 = ROOT.
"""

from dataclasses import dataclass, field, replace
from typing import Iterable, Optional

from . import treebank
from .errors import ConlluError, SerializationError

N_COLUMNS = 10


@dataclass(frozen=True)
class Token:
    """One CoNLL-U row. ``head`` is None for unannotated input."""

    id: int
    form: str
    lemma: str = "_"
    upos: str = "_"
    xpos: str = "_"
    feats: str = "_"
    head: Optional[int] = None
    deprel: str = "_"
    deps: str = "_"
    misc: str = "_"

    def __post_init__(self):
        if self.id < 1:
            raise ConlluError(f"token id must be >= 1, got {self.id}")
        if not self.form or "\t" in self.form or "\n" in self.form:
            raise ConlluError(f"bad form for token {self.id}: {self.form!r}")
        if self.head is not None and self.head == self.id:
            raise ConlluError(f"token {self.id} is its own head")


@dataclass(frozen=True)
class Edu:
    """One parsing unit: a token sequence with an implicit ROOT at index 0."""

    tokens: tuple[Token, ...]
    comments: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "comments", tuple(self.comments))
        n = len(self.tokens)
        if n == 0:
            raise ConlluError("EDU has no tokens")
        for i, tok in enumerate(self.tokens, start=1):
            if tok.id != i:
                raise ConlluError(f"token ids not contiguous: expected {i}, got {tok.id}")
            if tok.head is not None and not 0 <= tok.head <= n:
                raise ConlluError(f"head {tok.head} of token {i} out of range [0, {n}]")

    def __len__(self) -> int:
        return len(self.tokens)

    def heads(self) -> list[Optional[int]]:
        return [tok.head for tok in self.tokens]

    def forms(self) -> list[str]:
        return [tok.form for tok in self.tokens]

    def upos_tags(self) -> list[str]:
        return [tok.upos for tok in self.tokens]


@dataclass(frozen=True)
class ValidationReport:
    format_ok: bool
    is_tree: bool
    root_count: int
    is_projective: bool
    messages: tuple[str, ...]


def gold_heads(edu: Edu) -> list[int]:
    """The EDU's head vector; raises when any head is unannotated."""
    heads = edu.heads()
    if any(h is None for h in heads):
        raise ConlluError("EDU has unannotated heads")
    return heads


def with_heads(edu: Edu, heads) -> Edu:
    """Copy of the EDU with column 7 replaced; all other columns untouched."""
    if len(heads) != len(edu):
        raise SerializationError(f"{len(heads)} heads for {len(edu)} tokens")
    tokens = tuple(replace(tok, head=int(h)) for tok, h in zip(edu.tokens, heads))
    return Edu(tokens=tokens, comments=edu.comments)


def _parse_token_line(line: str, lineno: int, position: int) -> Token:
    cols = line.split("\t")
    if len(cols) != N_COLUMNS:
        raise ConlluError(f"expected {N_COLUMNS} tab-separated columns, got {len(cols)}", lineno)
    raw_id = cols[0]
    if "-" in raw_id or "." in raw_id:
        raise ConlluError(f"multiword-token/empty-node ids are rejected: {raw_id!r}", lineno)
    try:
        tok_id = int(raw_id)
    except ValueError:
        raise ConlluError(f"non-integer token id: {raw_id!r}", lineno) from None
    if tok_id != position:
        raise ConlluError(f"token ids not contiguous: expected {position}, got {tok_id}", lineno)
    head: Optional[int]
    if cols[6] == "_":
        head = None
    else:
        try:
            head = int(cols[6])
        except ValueError:
            raise ConlluError(f"non-integer head: {cols[6]!r}", lineno) from None
    if not cols[1]:
        raise ConlluError("empty form", lineno)
    if head == tok_id:
        raise ConlluError(f"token {tok_id} is its own head", lineno)
    return Token(
        id=tok_id, form=cols[1], lemma=cols[2], upos=cols[3], xpos=cols[4],
        feats=cols[5], head=head, deprel=cols[7], deps=cols[8], misc=cols[9],
    )


def read_conllu(lines: Iterable[str]) -> list[Edu]:
    """Parse CoNLL-U text (an open file or any iterable of lines) into EDUs."""
    edus: list[Edu] = []
    comments: list[str] = []
    tokens: list[Token] = []
    first_line = 0

    def flush(lineno):
        nonlocal comments, tokens
        if not tokens and not comments:
            return
        if not tokens:
            raise ConlluError("comments without any token lines", first_line)
        n = len(tokens)
        for tok in tokens:
            if tok.head is not None and tok.head > n:
                raise ConlluError(
                    f"head {tok.head} of token {tok.id} out of range [0, {n}]", lineno)
        edus.append(Edu(tokens=tuple(tokens), comments=tuple(comments)))
        comments = []
        tokens = []

    lineno = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if line == "":
            flush(lineno)
            continue
        if not tokens and not comments:
            first_line = lineno
        if line.startswith("#"):
            if tokens:
                raise ConlluError("comment line after token lines", lineno)
            comments.append(line)
        else:
            tokens.append(_parse_token_line(line, lineno, len(tokens) + 1))
    flush(lineno)
    return edus


def write_conllu(edus: Iterable[Edu]) -> str:
    """Serialize EDUs; inverse of read_conllu on canonical input."""
    chunks = []
    for edu in edus:
        n = len(edu)
        for tok in edu.tokens:
            if tok.head is not None and not 0 <= tok.head <= n:
                raise SerializationError(
                    f"head {tok.head} of token {tok.id} out of range [0, {n}]")
        for comment in edu.comments:
            chunks.append(comment + "\n")
        for tok in edu.tokens:
            head = "_" if tok.head is None else str(tok.head)
            chunks.append("\t".join((
                str(tok.id), tok.form, tok.lemma, tok.upos, tok.xpos,
                tok.feats, head, tok.deprel, tok.deps, tok.misc,
            )) + "\n")
        chunks.append("\n")
    return "".join(chunks)


def load_conllu(path) -> list[Edu]:
    with open(path, encoding="utf-8") as f:
        return read_conllu(f)


def dump_conllu(edus: Iterable[Edu], path) -> None:
    text = write_conllu(edus)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def validate(edu: Edu, strict_single_root: bool = False) -> ValidationReport:
    """Check tree-ness, root count, and projectivity; findings go in messages."""
    messages: list[str] = []
    heads = edu.heads()
    format_ok = True
    if any(h is None for h in heads):
        messages.append("unannotated heads present")
        tree = False
        root_count = sum(1 for h in heads if h == 0)
    else:
        tree = treebank.is_tree(heads)
        root_count = sum(1 for h in heads if h == 0)
        if not tree:
            messages.append("head map is not a tree (cycle or unreachable token)")
    projective = False
    if tree:
        projective = treebank.is_projective(heads)
        if not projective:
            messages.append("tree is non-projective")
    if root_count != 1:
        messages.append(f"root count is {root_count}, expected 1")
        if strict_single_root:
            format_ok = False
    return ValidationReport(
        format_ok=format_ok,
        is_tree=tree,
        root_count=root_count,
        is_projective=projective,
        messages=tuple(messages),
    )
