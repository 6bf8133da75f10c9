"""Difficulty-leveled word lists: loading, validation, level lookup.

A catalog is an immutable value built once from a JSON document and then
shared read-only by any number of sessions. Words are plain lowercase
a-z strings; anything the on-screen keyboard cannot type is rejected.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Mapping

MAX_WORD_LENGTH = 24

_WORD_RE = re.compile(r"^[a-z]{1,24}$")
_LIST_ID_RE = re.compile(r"^[A-Za-z0-9_-]+$")


class CatalogError(Exception):
    """Base class for word-list document problems."""


class NonAlphabetic(CatalogError):
    pass


class LengthOutOfRange(CatalogError):
    pass


class ParseError(CatalogError):
    pass


class DuplicateWordInList(CatalogError):
    pass


class DuplicateLevel(CatalogError):
    pass


class EmptyList(CatalogError):
    pass


class NonContiguousLevels(CatalogError):
    pass


class LevelNotFound(CatalogError):
    pass


@dataclass(frozen=True)
class WordList:
    """One difficulty level's ordered, duplicate-free words."""

    id: str
    name: str
    level: int
    words: tuple[str, ...]


@dataclass(frozen=True)
class Catalog:
    """Word lists ordered by ascending level; levels are contiguous from 1."""

    lists: tuple[WordList, ...]

    @property
    def max_level(self) -> int:
        return len(self.lists)


def normalize_word(raw: str) -> str:
    """Lowercase ``raw`` and validate it as a playable word.

    Raises NonAlphabetic for any character outside a-z after folding,
    LengthOutOfRange for empty or >24-letter results.
    """
    folded = raw.lower()
    if not all("a" <= ch <= "z" for ch in folded):
        raise NonAlphabetic(f"word {raw!r} contains characters outside a-z")
    if not 1 <= len(folded) <= MAX_WORD_LENGTH:
        raise LengthOutOfRange(
            f"word {raw!r} has length {len(folded)}, allowed 1..{MAX_WORD_LENGTH}"
        )
    return folded


def load_catalog(document: str | bytes | Mapping[str, Any]) -> Catalog:
    """Parse and validate a word-list document into a Catalog.

    ``document`` may be raw JSON text/bytes or an already-parsed mapping.
    Raises the first problem found as a typed CatalogError; use
    collect_diagnostics() to gather all of them at once.
    """
    catalog, problems = _scan_document(document)
    if problems:
        raise problems[0]
    assert catalog is not None
    return catalog


def load_catalog_file(path: str | Path) -> Catalog:
    return load_catalog(Path(path).read_bytes())


def load_sample_catalog() -> Catalog:
    """The word lists shipped with the package (three levels)."""
    data = resources.files("molespell").joinpath("data/sample_words.json").read_bytes()
    return load_catalog(data)


def collect_diagnostics(document: str | bytes | Mapping[str, Any]) -> list[str]:
    """All validation problems in the document, one message per entry.

    Empty list means the document is a valid catalog.
    """
    _, problems = _scan_document(document)
    return [str(p) for p in problems]


def list_at_level(catalog: Catalog, level: int) -> WordList:
    """The unique list with the given level; raises LevelNotFound."""
    for wl in catalog.lists:
        if wl.level == level:
            return wl
    raise LevelNotFound(f"no word list at level {level}, have 1..{catalog.max_level}")


def _scan_document(
    document: str | bytes | Mapping[str, Any],
) -> tuple[Catalog | None, list[CatalogError]]:
    problems: list[CatalogError] = []

    if isinstance(document, (str, bytes)):
        try:
            parsed = json.loads(document)
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            return None, [ParseError(f"not valid UTF-8 JSON: {exc}")]
    else:
        parsed = document

    if not isinstance(parsed, dict) or not isinstance(parsed.get("lists"), list):
        return None, [ParseError('top level must be an object with a "lists" array')]

    lists: list[WordList] = []
    seen_levels: dict[int, str] = {}
    for pos, entry in enumerate(parsed["lists"]):
        wl = _scan_list(entry, pos, problems)
        if wl is None:
            continue
        if wl.level in seen_levels:
            problems.append(
                DuplicateLevel(
                    f"list {wl.id!r} repeats level {wl.level} "
                    f"already used by {seen_levels[wl.level]!r}"
                )
            )
            continue
        seen_levels[wl.level] = wl.id
        lists.append(wl)

    if not lists and not problems:
        problems.append(EmptyList("document contains no word lists"))
    if lists:
        levels = sorted(wl.level for wl in lists)
        if levels != list(range(1, len(levels) + 1)):
            problems.append(
                NonContiguousLevels(f"levels must be 1..{len(levels)}, got {levels}")
            )

    if problems:
        return None, problems
    lists.sort(key=lambda wl: wl.level)
    return Catalog(lists=tuple(lists)), problems


def _scan_list(entry: Any, pos: int, problems: list[CatalogError]) -> WordList | None:
    where = f"lists[{pos}]"
    if not isinstance(entry, dict):
        problems.append(ParseError(f"{where}: expected an object"))
        return None

    list_id = entry.get("id")
    if not isinstance(list_id, str) or not _LIST_ID_RE.match(list_id):
        problems.append(ParseError(f"{where}: id must be a nonempty [A-Za-z0-9_-]+ token"))
        return None
    name = entry.get("name")
    if not isinstance(name, str) or not name:
        problems.append(ParseError(f"{where} ({list_id!r}): name must be a nonempty string"))
        return None
    level = entry.get("level")
    if not isinstance(level, int) or isinstance(level, bool) or level < 1:
        problems.append(ParseError(f"{where} ({list_id!r}): level must be an integer >= 1"))
        return None
    raw_words = entry.get("words")
    if not isinstance(raw_words, list):
        problems.append(ParseError(f"{where} ({list_id!r}): words must be an array"))
        return None

    words: list[str] = []
    seen: set[str] = set()
    ok = True
    for i, raw in enumerate(raw_words):
        if not isinstance(raw, str):
            problems.append(ParseError(f"list {list_id!r} word {i}: expected a string"))
            ok = False
            continue
        try:
            word = normalize_word(raw)
        except CatalogError as exc:
            exc.args = (f"list {list_id!r} word {i}: {exc}",)
            problems.append(exc)
            ok = False
            continue
        if word in seen:
            problems.append(
                DuplicateWordInList(f"list {list_id!r} word {i}: {word!r} already present")
            )
            ok = False
            continue
        seen.add(word)
        words.append(word)

    if not words and ok:
        problems.append(EmptyList(f"list {list_id!r} has no words"))
        ok = False
    if not ok:
        return None
    return WordList(id=list_id, name=name, level=level, words=tuple(words))
