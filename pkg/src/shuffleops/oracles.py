"""Membership deciders with replayable witnesses.

Each "present" answer comes with a :class:`ShuffleCertificate`: an assignment
of every position of the tested word to the operand copy that supplied it.
Replaying the assignment reconstructs the operands, so a caller never has to
trust the search that produced it.

The self-shuffle searches assign positions to copies depth-first (lower copy
number preferred, which makes the returned witness deterministic) and
memoize failed states.  For copies of the same word the state is the pair
(processed prefix length, copy lengths) plus the stretch of the common word
written by the front copy but not yet re-walked by the others; for the
word-with-its-reverse search it is the two stretches still awaiting their
mirrored partner.  Both searches are exponential in the worst case.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ResourceLimitError
from .words import Word, reverse

TRIPLE_LENGTH_LIMIT = 15


@dataclass(frozen=True)
class ShuffleCertificate:
    """Which operand copy supplied each position of the tested word.

    Entries are 1-based copy numbers; entry i names the copy that produced
    position i of the word.
    """

    assignment: tuple[int, ...]

    def extract(self, w: Word, copy: int) -> Word:
        """The subsequence of w assigned to the given copy."""
        syms = tuple(s for s, c in zip(w.symbols, self.assignment) if c == copy)
        return Word(syms, w.k)

    def verify(self, w: Word, operands: Sequence[Word]) -> bool:
        """Replay the assignment: every copy's subsequence must equal its operand."""
        if len(self.assignment) != len(w):
            return False
        if any(not 1 <= c <= len(operands) for c in self.assignment):
            return False
        return all(
            self.extract(w, i + 1) == op for i, op in enumerate(operands)
        )


def is_interleaving(w: Word, x: Word, y: Word) -> Optional[ShuffleCertificate]:
    """Decide whether w is an order-preserving merge of x and y.

    Dynamic program over prefix-length pairs, O(|x|*|y|) cells.  Returns the
    certificate whose assignment is lexicographically least (copy 1, i.e. x,
    preferred at every position), or None.
    """
    ws, xs, ys = w.symbols, x.symbols, y.symbols
    m, n = len(xs), len(ys)
    if len(ws) != m + n:
        return None
    feasible = [[False] * (n + 1) for _ in range(m + 1)]
    feasible[m][n] = True
    for i in range(m, -1, -1):
        for j in range(n, -1, -1):
            if i == m and j == n:
                continue
            c = ws[i + j]
            feasible[i][j] = (
                i < m and xs[i] == c and feasible[i + 1][j]
            ) or (j < n and ys[j] == c and feasible[i][j + 1])
    if not feasible[0][0]:
        return None
    assignment = []
    i = j = 0
    while i + j < m + n:
        c = ws[i + j]
        if i < m and xs[i] == c and feasible[i + 1][j]:
            assignment.append(1)
            i += 1
        else:
            assignment.append(2)
            j += 1
    return ShuffleCertificate(tuple(assignment))


def is_interleaving_many(
    w: Word, ws: Sequence[Word]
) -> Optional[ShuffleCertificate]:
    """Decide whether w merges the given list of words, in any interleaving.

    Memoized search over the tuple of per-operand prefix lengths; the list
    length is expected to be small (the problem is NP-complete in it).
    """
    if not ws:
        return None
    target = w.symbols
    ops = [x.symbols for x in ws]
    if len(target) != sum(len(o) for o in ops):
        return None
    failed: set[tuple[int, ...]] = set()
    assignment: list[int] = []

    def search(ptrs: tuple[int, ...]) -> bool:
        pos = sum(ptrs)
        if pos == len(target):
            return True
        if ptrs in failed:
            return False
        c = target[pos]
        for idx, op in enumerate(ops):
            p = ptrs[idx]
            if p < len(op) and op[p] == c:
                assignment.append(idx + 1)
                if search(ptrs[:idx] + (p + 1,) + ptrs[idx + 1 :]):
                    return True
                assignment.pop()
        failed.add(ptrs)
        return False

    if not search((0,) * len(ops)):
        return None
    return ShuffleCertificate(tuple(assignment))


def _equal_copies_assignment(
    symbols: tuple[int, ...], copies: int
) -> Optional[tuple[int, ...]]:
    """Assignment splitting ``symbols`` into ``copies`` identical subsequences.

    All partial copies are prefixes of the same unknown word, so the search
    state is the copy lengths plus the window of that word between the
    shortest and longest prefix; a copy behind the front must match the
    window, the front copy extends it.
    """
    total = len(symbols)
    if total % copies:
        return None
    target = total // copies
    failed: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    assignment: list[int] = []

    def search(lens: tuple[int, ...], window: tuple[int, ...]) -> bool:
        pos = sum(lens)
        if pos == total:
            return True
        key = (lens, window)
        if key in failed:
            return False
        c = symbols[pos]
        front = max(lens)
        base = min(lens)
        for idx in range(copies):
            ln = lens[idx]
            if ln >= target:
                continue
            # first use of copy idx only after all earlier copies started
            if ln == 0 and idx > 0 and lens[idx - 1] == 0:
                break
            if ln < front:
                if window[ln - base] != c:
                    continue
                new_window = window
            else:
                new_window = window + (c,)
            new_lens = lens[:idx] + (ln + 1,) + lens[idx + 1 :]
            new_base = min(new_lens)
            if new_base > base:
                new_window = new_window[new_base - base :]
            assignment.append(idx + 1)
            if search(new_lens, new_window):
                return True
            assignment.pop()
        failed.add(key)
        return False

    if not search((0,) * copies, ()):
        return None
    return tuple(assignment)


def _reverse_pair_assignment(
    symbols: tuple[int, ...],
) -> Optional[tuple[int, ...]]:
    """Assignment splitting ``symbols`` into a subsequence and its mirror.

    Copy 1 spells some word x left to right, copy 2 spells x reversed, so
    position i of copy 1 must equal position n-1-i of copy 2.  The state
    keeps, for each copy, the prefix whose mirrored partner has not been
    written yet; writing into an already-mirrored position consumes the tail
    of the other copy's pending prefix.
    """
    total = len(symbols)
    if total % 2:
        return None
    n = total // 2
    failed: set[tuple[int, int, tuple[int, ...], tuple[int, ...]]] = set()
    assignment: list[int] = []

    def search(
        pos: int, la: int, ap: tuple[int, ...], bp: tuple[int, ...]
    ) -> bool:
        if pos == total:
            return True
        key = (pos, la, ap, bp)
        if key in failed:
            return False
        c = symbols[pos]
        lb = pos - la
        if la < n:
            if lb >= n - la:  # partner position already written by copy 2
                if bp and bp[-1] == c:
                    assignment.append(1)
                    if search(pos + 1, la + 1, ap, bp[:-1]):
                        return True
                    assignment.pop()
            else:
                assignment.append(1)
                if search(pos + 1, la + 1, ap + (c,), bp):
                    return True
                assignment.pop()
        if lb < n:
            if la >= n - lb:
                if ap and ap[-1] == c:
                    assignment.append(2)
                    if search(pos + 1, la, ap[:-1], bp):
                        return True
                    assignment.pop()
            else:
                assignment.append(2)
                if search(pos + 1, la, ap, bp + (c,)):
                    return True
                assignment.pop()
        failed.add(key)
        return False

    if not search(0, 0, (), ()):
        return None
    return tuple(assignment)


def exists_self_shuffle(w: Word) -> Optional[tuple[Word, ShuffleCertificate]]:
    """Find x with w a merge of two copies of x, if any.

    Always absent for odd |w|.  The witness is deterministic: the returned
    certificate is the lexicographically least assignment (copy 1 preferred).
    """
    assignment = _equal_copies_assignment(w.symbols, 2)
    if assignment is None:
        return None
    cert = ShuffleCertificate(assignment)
    x = cert.extract(w, 1)
    assert cert.verify(w, [x, x])
    return x, cert


def exists_triple_self_shuffle(
    w: Word, max_len: int = TRIPLE_LENGTH_LIMIT
) -> Optional[tuple[Word, ShuffleCertificate]]:
    """Find x with w a merge of three copies of x, if any.

    Absent when |w| is not divisible by 3.  Words longer than ``max_len``
    are rejected with a resource-limit error rather than searched.
    """
    if len(w) > max_len:
        raise ResourceLimitError(
            f"triple self-shuffle search capped at length {max_len}, got {len(w)}"
        )
    assignment = _equal_copies_assignment(w.symbols, 3)
    if assignment is None:
        return None
    cert = ShuffleCertificate(assignment)
    x = cert.extract(w, 1)
    assert cert.verify(w, [x, x, x])
    return x, cert


def is_abelian_square(w: Word) -> bool:
    """True iff the two halves carry the same multiset of symbols."""
    if len(w) % 2:
        return False
    half = len(w) // 2
    return Counter(w.symbols[:half]) == Counter(w.symbols[half:])


def exists_self_shuffle_reverse(
    w: Word,
) -> Optional[tuple[Word, ShuffleCertificate]]:
    """Find x with w a merge of x and reverse(x), if any.

    Any such merge pairs the two halves' symbol multisets, so words that are
    not abelian squares are rejected up front.  For binary alphabets an
    abelian square with j zeros per half always admits the sorted witness
    0^j 1^(n-j); that witness is validated by certificate replay rather than
    trusted, falling back to the general search if replay fails.
    """
    if not is_abelian_square(w):
        return None
    if w.k <= 2:
        n = len(w) // 2
        j = sum(1 for s in w.symbols[:n] if s == 0)
        x = Word((0,) * j + (1,) * (n - j) if w.k == 2 else (0,) * n, w.k)
        cert = is_interleaving(w, x, reverse(x))
        if cert is not None:
            return x, cert
    assignment = _reverse_pair_assignment(w.symbols)
    if assignment is None:
        return None
    cert = ShuffleCertificate(assignment)
    x = cert.extract(w, 1)
    assert cert.verify(w, [x, reverse(x)])
    return x, cert
