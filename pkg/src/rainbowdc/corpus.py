"""Bundled graph6 corpora (regenerate with scripts/make_corpus.py)."""

from __future__ import annotations

from importlib import resources

from .graph import Graph
from .io import from_graph6

NAMES = tuple([f"connected_n{n}" for n in range(2, 8)] + ["cubic_3ec_le10"])


def corpus_lines(name: str) -> list[str]:
    if name not in NAMES:
        raise KeyError(f"unknown corpus {name!r}; known: {', '.join(NAMES)}")
    text = resources.files("rainbowdc").joinpath("data", f"{name}.g6").read_text()
    return [ln.strip() for ln in text.splitlines() if ln.strip()]


def load(name: str) -> list[Graph]:
    return [from_graph6(s) for s in corpus_lines(name)]


def connected_upto(n_max: int, n_min: int = 2) -> list[Graph]:
    out = []
    for n in range(n_min, n_max + 1):
        out += load(f"connected_n{n}")
    return out
