"""Word-embedding table: loading, phrase vectors, cosine similarity.

The table backs phrase clustering and the fast pair prefilter. Only the
plain-text vector format is supported: an optional ``count dim`` header
line followed by one ``word f1 ... fd`` row per word, space separated.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .errors import EmbeddingError

_TOKEN_RE = re.compile(r"[a-z0-9]+(?:'[a-z]+)?")


@dataclass(frozen=True)
class EmbeddingTable:
    """Immutable word → vector lookup; every vector has the same dimension."""

    dimension: int
    vectors: dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        if self.dimension <= 0:
            raise EmbeddingError("dimension must be positive")

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.vectors

    def __len__(self) -> int:
        return len(self.vectors)

    def get(self, word: str) -> np.ndarray | None:
        return self.vectors.get(word.lower())


def load_embeddings(path) -> EmbeddingTable:
    """Read a text vector file into an :class:`EmbeddingTable`.

    Duplicate words keep their first occurrence. A row whose float count
    disagrees with the table dimension raises :class:`EmbeddingError`
    naming the line.
    """
    vectors: dict[str, np.ndarray] = {}
    dimension = 0
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.split()
            if not parts:
                continue
            # optional header: "<count> <dim>"
            if lineno == 1 and len(parts) == 2:
                try:
                    dimension = int(parts[1])
                    continue
                except ValueError:
                    pass
            word = parts[0]
            try:
                values = [float(x) for x in parts[1:]]
            except ValueError as exc:
                raise EmbeddingError(f"line {lineno}: bad float value ({exc})") from None
            if not values:
                raise EmbeddingError(f"line {lineno}: no vector components")
            if dimension == 0:
                dimension = len(values)
            if len(values) != dimension:
                raise EmbeddingError(
                    f"line {lineno}: expected {dimension} components, got {len(values)}"
                )
            key = word.lower()
            if key not in vectors:
                vectors[key] = np.asarray(values, dtype=np.float64)
    if not vectors:
        raise EmbeddingError(f"no vectors in {path}")
    return EmbeddingTable(dimension=dimension, vectors=vectors)


def tokenize(phrase: str) -> list[str]:
    """Lowercased word tokens of a phrase (letters, digits, inner apostrophe)."""
    return _TOKEN_RE.findall(phrase.lower())


def phrase_vector(phrase: str, table: EmbeddingTable) -> tuple[np.ndarray, bool]:
    """Componentwise mean over in-vocabulary tokens.

    Returns ``(vector, oov_flag)``; an all-out-of-vocabulary phrase yields
    the zero vector with the flag set.
    """
    hits = [table.vectors[t] for t in tokenize(phrase) if t in table.vectors]
    if not hits:
        return np.zeros(table.dimension, dtype=np.float64), True
    return np.mean(hits, axis=0), False


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    """dot(u,v) / (|u||v|); 0.0 when either norm is zero."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(np.dot(u, v) / (nu * nv))


def similarity(phrase_a: str, phrase_b: str, table: EmbeddingTable) -> float:
    """Clamped-to-[0,1] cosine between two phrase vectors."""
    va, _ = phrase_vector(phrase_a, table)
    vb, _ = phrase_vector(phrase_b, table)
    return max(0.0, min(1.0, cosine(va, vb)))
