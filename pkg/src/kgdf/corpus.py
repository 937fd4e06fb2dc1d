"""Knot corpus files and Gauss codes of braid closures."""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from .diagram import BasedKnotDiagram, GaussCodeError, parse_gauss_code


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    code: str
    expected: Dict[str, str] = field(default_factory=dict)

    @property
    def diagram(self) -> BasedKnotDiagram:
        return parse_gauss_code(self.code)


def parse_corpus(text: str) -> List[CorpusEntry]:
    """Parse ``name: code [| key=value; ...]`` lines; ``#`` starts a comment."""
    out: List[CorpusEntry] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise GaussCodeError(f"line {lineno}: expected 'name: code'")
        name, rest = (s.strip() for s in line.split(":", 1))
        if not name or name in seen:
            raise GaussCodeError(f"line {lineno}: missing or duplicate name {name!r}")
        code, _, tail = rest.partition("|")
        expected = {}
        for item in filter(None, (s.strip() for s in tail.split(";"))):
            key, eq, val = item.partition("=")
            if not eq:
                raise GaussCodeError(f"line {lineno}: bad expectation {item!r}")
            expected[key.strip()] = val.strip()
        try:
            parse_gauss_code(code)
        except GaussCodeError as exc:
            raise GaussCodeError(f"line {lineno} ({name}): {exc}") from None
        seen.add(name)
        out.append(CorpusEntry(name, " ".join(code.split()), expected))
    return out


def load_corpus(path: Optional[str | Path] = None) -> List[CorpusEntry]:
    """Read a corpus file; ``None`` loads the bundled corpus."""
    if path is None:
        text = resources.files("kgdf").joinpath("data/corpus.txt").read_text()
    else:
        text = Path(path).read_text()
    return parse_corpus(text)


def format_corpus(entries: Sequence[CorpusEntry]) -> str:
    lines = []
    for e in entries:
        line = f"{e.name}: {e.code}"
        if e.expected:
            line += " | " + "; ".join(f"{k}={v}" for k, v in e.expected.items())
        lines.append(line)
    return "\n".join(lines) + "\n"


def braid_to_gauss(word: Sequence[int], strands: Optional[int] = None) -> str:
    """Gauss code of the closure of a braid word.

    ``i`` stands for the generator crossing strands ``i`` and ``i+1`` with the
    left strand over (a positive crossing), ``-i`` for its inverse. The base
    point sits at the top of strand 1. Raises if the closure has more than one
    component.
    """
    n = strands or (max((abs(g) for g in word), default=0) + 1)
    if any(g == 0 or abs(g) >= n for g in word):
        raise ValueError(f"generator out of range for {n} strands")
    tokens: List[str] = []
    visits = [0] * len(word)
    pos = 0
    while True:
        for t, g in enumerate(word):
            i = abs(g) - 1
            if pos not in (i, i + 1):
                continue
            from_left = pos == i
            over = from_left == (g > 0)
            sign = "+" if g > 0 else "-"
            tokens.append(f"{'O' if over else 'U'}{t + 1}{sign}")
            visits[t] += 1
            pos = i + 1 if from_left else i
        if pos == 0:
            break
    if any(v != 2 for v in visits):
        raise ValueError("braid closure is not a knot")
    # renumber by first occurrence
    relabel: Dict[str, int] = {}
    out = []
    for tok in tokens:
        k = relabel.setdefault(tok[1:-1], len(relabel) + 1)
        out.append(f"{tok[0]}{k}{tok[-1]}")
    return " ".join(out)
