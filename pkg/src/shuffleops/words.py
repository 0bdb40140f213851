"""Words over small integer alphabets, and shuffle/unshuffle operations on them.

A word is an immutable sequence of symbols, each an integer in ``[0, k)`` for
its alphabet size ``k``.  For parsing and display, symbol ``i`` maps to the
character ``SYMBOL_CHARS[i]`` ('0'-'9' then 'a'-'z'), which caps printable
alphabets at k = 36.

Two interleaving operations are central: the perfect shuffle (strict
alternation of two words of equal, or off-by-one, length) and the ordinary
shuffle (the set of all order-preserving merges).  On top of these sit the
self-shuffle set operations and the four decimation/"unshuffling" operations
(bd, bdr, bdi, bdir).  Everything here is pure and total on the empty word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import AlphabetError, LengthContractError

SYMBOL_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"
CHAR_TO_SYMBOL = {c: i for i, c in enumerate(SYMBOL_CHARS)}


@dataclass(frozen=True, order=True)
class Word:
    """An immutable word: a tuple of symbol indices plus its alphabet size."""

    symbols: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise AlphabetError(f"alphabet size must be positive, got {self.k}")
        for s in self.symbols:
            if not 0 <= s < self.k:
                raise AlphabetError(
                    f"symbol {s} out of range for alphabet size {self.k}"
                )

    @classmethod
    def from_text(cls, text: str, k: int | None = None) -> "Word":
        """Parse a word from its character form.

        With ``k=None`` the alphabet size is inferred as one more than the
        largest symbol index present (1 for the empty string).
        """
        try:
            syms = tuple(CHAR_TO_SYMBOL[c] for c in text)
        except KeyError as exc:
            raise AlphabetError(
                f"character {exc.args[0]!r} is not in the symbol table"
            ) from None
        if k is None:
            k = max(syms, default=0) + 1
        return cls(syms, k)

    @property
    def text(self) -> str:
        if self.k > len(SYMBOL_CHARS):
            raise AlphabetError(
                f"alphabet size {self.k} exceeds the printable table of "
                f"{len(SYMBOL_CHARS)} characters"
            )
        return "".join(SYMBOL_CHARS[s] for s in self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __repr__(self) -> str:
        if self.k <= len(SYMBOL_CHARS):
            return f"Word({self.text!r}, k={self.k})"
        return f"Word({self.symbols!r}, k={self.k})"


class WordSet:
    """A deduplicated set of words over one alphabet.

    Iteration is lexicographic (a proper prefix precedes its extensions), so
    printed output and test fixtures are reproducible.
    """

    __slots__ = ("_elements", "k")

    def __init__(self, words: Iterable[Word] = (), k: int | None = None):
        elements = frozenset(words)
        sizes = {w.k for w in elements}
        if len(sizes) > 1:
            raise AlphabetError(f"mixed alphabet sizes in word set: {sorted(sizes)}")
        if k is None:
            if not sizes:
                raise AlphabetError("an empty WordSet needs an explicit alphabet size")
            k = next(iter(sizes))
        elif sizes and next(iter(sizes)) != k:
            raise AlphabetError(
                f"words have alphabet size {next(iter(sizes))}, expected {k}"
            )
        self._elements = elements
        self.k = k

    def __iter__(self) -> Iterator[Word]:
        return iter(sorted(self._elements, key=lambda w: w.symbols))

    def __len__(self) -> int:
        return len(self._elements)

    def __contains__(self, w: object) -> bool:
        return w in self._elements

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WordSet):
            return NotImplemented
        return self.k == other.k and self._elements == other._elements

    def __hash__(self) -> int:
        return hash((self.k, self._elements))

    def __or__(self, other: "WordSet") -> "WordSet":
        if self.k != other.k:
            raise AlphabetError("cannot union word sets over different alphabets")
        return WordSet(self._elements | other._elements, self.k)

    def __repr__(self) -> str:
        return f"WordSet({sorted(w.text for w in self._elements)!r}, k={self.k})"

    def texts(self) -> list[str]:
        """Character forms, sorted."""
        return [w.text for w in self]


def _interleavings(x: Sequence, y: Sequence) -> set:
    """All order-preserving merges of two sequences (str in, str out; same for
    tuples).

    Computed by a suffix-pair merge with deduplication at every cell, so the
    cost tracks the number of *distinct* partial results rather than the raw
    count of interleavings.
    """
    m, n = len(x), len(y)
    # row[j] holds the merges of x[i:] with y[j:]; start at i = m.
    row: list[set] = [set() for _ in range(n + 1)]
    row[n] = {y[n:]}
    for j in range(n - 1, -1, -1):
        row[j] = {y[j:]}
    for i in range(m - 1, -1, -1):
        above = row
        row = [set()] * (n + 1)
        row[n] = {x[i:]}
        a = x[i : i + 1]
        for j in range(n - 1, -1, -1):
            b = y[j : j + 1]
            if a == b:
                row[j] = {a + s for s in above[j] | row[j + 1]}
            else:
                row[j] = {a + s for s in above[j]} | {b + s for s in row[j + 1]}
    return row[0]


def _common_k(x: Word, y: Word) -> int:
    return max(x.k, y.k)


def reverse(w: Word) -> Word:
    """The word written backwards."""
    return Word(w.symbols[::-1], w.k)


def perfect_shuffle(x: Word, y: Word) -> Word:
    """Strictly alternating interleave, x's symbol first.

    y may be exactly one symbol longer than x, in which case its last symbol
    closes the result.  Any other length gap is rejected.
    """
    if len(y) - len(x) not in (0, 1):
        raise LengthContractError(
            f"perfect shuffle needs |y| - |x| in {{0, 1}}, got |x|={len(x)}, |y|={len(y)}"
        )
    out: list[int] = []
    for a, b in zip(x.symbols, y.symbols):
        out.append(a)
        out.append(b)
    if len(y) > len(x):
        out.append(y.symbols[-1])
    return Word(tuple(out), _common_k(x, y))


def shuffle_set(x: Word, y: Word) -> WordSet:
    """The set of all order-preserving merges of x and y."""
    k = _common_k(x, y)
    return WordSet((Word(s, k) for s in _interleavings(x.symbols, y.symbols)), k)


def shuffle_many(ws: Sequence[Word]) -> WordSet:
    """Left fold of the shuffle set over a nonempty list of words."""
    if not ws:
        raise LengthContractError("shuffle_many needs at least one word")
    k = max(w.k for w in ws)
    acc: set[tuple[int, ...]] = {ws[0].symbols}
    for w in ws[1:]:
        acc = set().union(*(_interleavings(s, w.symbols) for s in acc))
    return WordSet((Word(s, k) for s in acc), k)


def odd(w: Word) -> Word:
    """Subsequence at odd positions (1-based): first, third, fifth, ..."""
    return Word(w.symbols[0::2], w.k)


def even(w: Word) -> Word:
    """Subsequence at even positions (1-based)."""
    return Word(w.symbols[1::2], w.k)


def fh(w: Word) -> Word:
    """First half: the first floor(n/2) symbols."""
    return Word(w.symbols[: len(w) // 2], w.k)


def lh(w: Word) -> Word:
    """Last half: everything after the first floor(n/2) symbols."""
    return Word(w.symbols[len(w) // 2 :], w.k)


def bd(w: Word) -> Word:
    """Binary decimation: odd-indexed subsequence followed by even-indexed."""
    return Word(w.symbols[0::2] + w.symbols[1::2], w.k)


def bdr(w: Word) -> Word:
    """Binary decimation with the even part reversed."""
    return Word(w.symbols[0::2] + w.symbols[1::2][::-1], w.k)


def bdi(w: Word) -> Word:
    """Inverse decimation: perfect shuffle of the first half with the last.

    On odd lengths the last half is one symbol longer, handled by the
    extended perfect shuffle.  On even lengths this inverts ``bd``.
    """
    return perfect_shuffle(fh(w), lh(w))


def bdir(w: Word) -> Word:
    """The "twist": perfect shuffle of the first half with the reversed last half."""
    return perfect_shuffle(fh(w), reverse(lh(w)))


def pss(w: Word) -> Word:
    """Perfect self-shuffle: every symbol doubled."""
    out: list[int] = []
    for s in w.symbols:
        out.append(s)
        out.append(s)
    return Word(tuple(out), w.k)


def pssr(w: Word) -> Word:
    """Perfect shuffle of a word with its own reverse."""
    return perfect_shuffle(w, reverse(w))


def ss_set(w: Word) -> WordSet:
    """All merges of a word with itself."""
    return shuffle_set(w, w)


def ssr_set(w: Word) -> WordSet:
    """All merges of a word with its own reverse."""
    return shuffle_set(w, reverse(w))
