"""NFAs with epsilon transitions and language-level closure constructions.

The constructions mirror the word-level operations in :mod:`shuffleops.words`:
shuffle and perfect shuffle of two languages (each buildable two ways, by a
direct product or by the classic morphism/inverse-morphism encoding over a
primed copy of the alphabet), symbol doubling, and the image constructions
for the two half-shuffling decimations (one tracking a guessed splice state,
one running a reversed copy of the automaton and meeting in the middle).

There is no general equivalence checking here; languages are compared by
exact bounded-length enumeration, which is what the test suites rely on.

States are integers below ``state_count``; a transition label is a symbol
index or ``None`` for epsilon.  The JSON wire format and the DOT export use
the character table from :mod:`shuffleops.words`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .errors import AlphabetError, ResourceLimitError
from .words import CHAR_TO_SYMBOL, SYMBOL_CHARS, Word, WordSet

Label = Optional[int]
Transition = "tuple[int, Label, int]"

LANGUAGE_CARDINALITY_CAP = 10**6


class NfaFormatError(ValueError):
    """An NFA JSON document is malformed; the message names the bad field."""


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic finite automaton with epsilon transitions."""

    k: int
    state_count: int
    transitions: frozenset
    initial: frozenset
    final: frozenset

    def __post_init__(self) -> None:
        if self.k < 1:
            raise AlphabetError(f"alphabet size must be positive, got {self.k}")
        if self.state_count < 0:
            raise ValueError(f"state count must be >= 0, got {self.state_count}")
        for src, label, dst in self.transitions:
            if not (0 <= src < self.state_count and 0 <= dst < self.state_count):
                raise ValueError(f"transition ({src}, {label}, {dst}) leaves the state range")
            if label is not None and not 0 <= label < self.k:
                raise AlphabetError(f"transition label {label} outside alphabet of size {self.k}")
        for name, states in (("initial", self.initial), ("final", self.final)):
            for q in states:
                if not 0 <= q < self.state_count:
                    raise ValueError(f"{name} state {q} outside the state range")

    @classmethod
    def make(
        cls,
        k: int,
        state_count: int,
        transitions: Iterable = (),
        initial: Iterable[int] = (),
        final: Iterable[int] = (),
    ) -> "Nfa":
        return cls(
            k,
            state_count,
            frozenset((s, l, d) for s, l, d in transitions),
            frozenset(initial),
            frozenset(final),
        )


def empty_nfa(k: int) -> Nfa:
    """Automaton of the empty language."""
    return Nfa.make(k, 0)


# ---------------------------------------------------------------------------
# simulation helpers


def _maps(a: Nfa):
    """Per-state epsilon successors and (state, symbol) successors."""
    eps: dict[int, set[int]] = {}
    sym: dict[tuple[int, int], set[int]] = {}
    for src, label, dst in a.transitions:
        if label is None:
            eps.setdefault(src, set()).add(dst)
        else:
            sym.setdefault((src, label), set()).add(dst)
    return eps, sym


def _closure(states: Iterable[int], eps: dict[int, set[int]]) -> frozenset:
    seen = set(states)
    work = list(seen)
    while work:
        q = work.pop()
        for nxt in eps.get(q, ()):
            if nxt not in seen:
                seen.add(nxt)
                work.append(nxt)
    return frozenset(seen)


def _step(states: Iterable[int], symbol: int, sym, eps) -> frozenset:
    out: set[int] = set()
    for q in states:
        out |= sym.get((q, symbol), set())
    return _closure(out, eps)


def nfa_member(a: Nfa, w: Word) -> bool:
    """Subset simulation with epsilon closures."""
    eps, sym = _maps(a)
    current = _closure(a.initial, eps)
    for s in w.symbols:
        if not current:
            return False
        current = _step(current, s, sym, eps)
    return bool(current & a.final)


def remove_epsilons(a: Nfa) -> Nfa:
    """Equivalent NFA without epsilon transitions."""
    eps, sym = _maps(a)
    closures = {q: _closure([q], eps) for q in range(a.state_count)}
    transitions = set()
    for q in range(a.state_count):
        targets: dict[int, set[int]] = {}
        for p in closures[q]:
            for s in range(a.k):
                hit = sym.get((p, s))
                if hit:
                    targets.setdefault(s, set()).update(hit)
        for s, dsts in targets.items():
            for d in _closure(dsts, eps):
                transitions.add((q, s, d))
    final = {q for q in range(a.state_count) if closures[q] & a.final}
    return Nfa.make(a.k, a.state_count, transitions, a.initial, final)


def trim(a: Nfa) -> Nfa:
    """Restrict to states both reachable and co-reachable, renumbering stably."""
    fwd: dict[int, set[int]] = {}
    bwd: dict[int, set[int]] = {}
    for src, _label, dst in a.transitions:
        fwd.setdefault(src, set()).add(dst)
        bwd.setdefault(dst, set()).add(src)

    def explore(start: Iterable[int], adj) -> set[int]:
        seen = set(start)
        work = list(seen)
        while work:
            q = work.pop()
            for nxt in adj.get(q, ()):
                if nxt not in seen:
                    seen.add(nxt)
                    work.append(nxt)
        return seen

    keep = explore(a.initial, fwd) & explore(a.final, bwd)
    number = {q: i for i, q in enumerate(sorted(keep))}
    return Nfa.make(
        a.k,
        len(keep),
        (
            (number[s], l, number[d])
            for s, l, d in a.transitions
            if s in keep and d in keep
        ),
        (number[q] for q in a.initial if q in keep),
        (number[q] for q in a.final if q in keep),
    )


# ---------------------------------------------------------------------------
# boolean-algebra style constructions


def _require_same_alphabet(a: Nfa, b: Nfa) -> None:
    if a.k != b.k:
        raise AlphabetError(f"alphabet sizes differ: {a.k} vs {b.k}")


def reverse_nfa(a: Nfa) -> Nfa:
    """Transition reversal with initial and final sets swapped."""
    return Nfa.make(
        a.k,
        a.state_count,
        ((d, l, s) for s, l, d in a.transitions),
        a.final,
        a.initial,
    )


def intersect(a: Nfa, b: Nfa) -> Nfa:
    """Product construction; epsilon moves advance one side at a time."""
    _require_same_alphabet(a, b)
    eps_a, sym_a = _maps(a)
    eps_b, sym_b = _maps(b)
    index: dict[tuple[int, int], int] = {}
    transitions = []

    def state(pq: tuple[int, int]) -> int:
        if pq not in index:
            index[pq] = len(index)
            work.append(pq)
        return index[pq]

    work: list[tuple[int, int]] = []
    initial = [state((p, q)) for p in sorted(a.initial) for q in sorted(b.initial)]
    while work:
        p, q = pq = work.pop()
        src = index[pq]
        for p2 in eps_a.get(p, ()):
            transitions.append((src, None, state((p2, q))))
        for q2 in eps_b.get(q, ()):
            transitions.append((src, None, state((p, q2))))
        for s in range(a.k):
            for p2 in sym_a.get((p, s), ()):
                for q2 in sym_b.get((q, s), ()):
                    transitions.append((src, s, state((p2, q2))))
    final = (
        index[(p, q)]
        for p in a.final
        for q in b.final
        if (p, q) in index
    )
    return trim(Nfa.make(a.k, len(index), transitions, initial, final))


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True)
class Morphism:
    """Per-symbol substitution; images may be empty (erasing)."""

    k_source: int
    k_target: int
    image: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.image) != self.k_source:
            raise AlphabetError(
                f"morphism needs {self.k_source} images, got {len(self.image)}"
            )
        for u in self.image:
            for s in u:
                if not 0 <= s < self.k_target:
                    raise AlphabetError(
                        f"image symbol {s} outside target alphabet of size {self.k_target}"
                    )

    def apply_word(self, w: Word) -> Word:
        if w.k != self.k_source:
            raise AlphabetError(f"word alphabet {w.k} does not match source {self.k_source}")
        out: list[int] = []
        for s in w.symbols:
            out.extend(self.image[s])
        return Word(tuple(out), self.k_target)


def doubling_morphism(k: int) -> Morphism:
    """Each symbol maps to itself twice."""
    return Morphism(k, k, tuple((s, s) for s in range(k)))


def apply_morphism(a: Nfa, h: Morphism) -> Nfa:
    """Image automaton: each labeled edge becomes a path spelling the image."""
    if a.k != h.k_source:
        raise AlphabetError(f"automaton alphabet {a.k} does not match source {h.k_source}")
    transitions = []
    fresh = a.state_count
    for src, label, dst in a.transitions:
        if label is None:
            transitions.append((src, None, dst))
            continue
        u = h.image[label]
        if not u:
            transitions.append((src, None, dst))
        elif len(u) == 1:
            transitions.append((src, u[0], dst))
        else:
            chain = [src] + list(range(fresh, fresh + len(u) - 1)) + [dst]
            fresh += len(u) - 1
            for c, (p, q) in zip(u, zip(chain, chain[1:])):
                transitions.append((p, c, q))
    return Nfa.make(h.k_target, fresh, transitions, a.initial, a.final)


def inverse_morphism(a: Nfa, h: Morphism) -> Nfa:
    """Preimage automaton: reading a source symbol walks its image in ``a``."""
    if a.k != h.k_target:
        raise AlphabetError(f"automaton alphabet {a.k} does not match target {h.k_target}")
    eps, sym = _maps(a)
    closures = {q: _closure([q], eps) for q in range(a.state_count)}
    transitions = []
    for p in range(a.state_count):
        for s in range(h.k_source):
            states = closures[p]
            for c in h.image[s]:
                states = _step(states, c, sym, eps)
                if not states:
                    break
            for q in states:
                transitions.append((p, s, q))
    final = {q for q in range(a.state_count) if closures[q] & a.final}
    return Nfa.make(h.k_source, a.state_count, transitions, a.initial, final)


def _primed_alphabet_pieces(k: int) -> tuple[Morphism, Morphism, Morphism]:
    """The unprime/erase morphisms over an alphabet doubled with primed copies.

    Symbol a' is encoded as a + k.  h1 keeps plain symbols and erases primed
    ones, h2 the other way around, and h forgets the priming.
    """
    h1 = Morphism(2 * k, k, tuple((s,) if s < k else () for s in range(2 * k)))
    h2 = Morphism(2 * k, k, tuple(() if s < k else (s - k,) for s in range(2 * k)))
    h = Morphism(2 * k, k, tuple((s % k,) for s in range(2 * k)))
    return h1, h2, h


def _alternation_filter(k: int) -> Nfa:
    """Words over the doubled alphabet alternating plain, primed, plain, ..."""
    transitions = [(0, s, 1) for s in range(k)] + [(1, s + k, 0) for s in range(k)]
    return Nfa.make(2 * k, 2, transitions, [0], [0])


def shuffle_nfa(a: Nfa, b: Nfa, route: str = "product") -> Nfa:
    """Automaton for all interleavings of a word of each language.

    route="product": pair states, every symbol advances exactly one side.
    route="morphism": unprime the intersection of the two erased preimages
    over a primed double alphabet.  Both recognize the same language; having
    two genuinely different routes is what the cross-checks exploit.
    """
    _require_same_alphabet(a, b)
    if route == "morphism":
        h1, h2, h = _primed_alphabet_pieces(a.k)
        return trim(apply_morphism(intersect(inverse_morphism(a, h1), inverse_morphism(b, h2)), h))
    if route != "product":
        raise ValueError(f"unknown route {route!r}")
    eps_a, sym_a = _maps(a)
    eps_b, sym_b = _maps(b)
    states_a = a.state_count
    transitions = []
    for p in range(a.state_count):
        for q in range(b.state_count):
            src = p * b.state_count + q
            for p2 in eps_a.get(p, ()):
                transitions.append((src, None, p2 * b.state_count + q))
            for q2 in eps_b.get(q, ()):
                transitions.append((src, None, p * b.state_count + q2))
            for s in range(a.k):
                for p2 in sym_a.get((p, s), ()):
                    transitions.append((src, s, p2 * b.state_count + q))
                for q2 in sym_b.get((q, s), ()):
                    transitions.append((src, s, p * b.state_count + q2))
    return trim(
        Nfa.make(
            a.k,
            a.state_count * b.state_count,
            transitions,
            (p * b.state_count + q for p in a.initial for q in b.initial),
            (p * b.state_count + q for p in a.final for q in b.final),
        )
    )


def perfect_shuffle_nfa(a: Nfa, b: Nfa, route: str = "product") -> Nfa:
    """Automaton for the strict alternations of equal-length word pairs.

    route="product" carries a turn bit; route="morphism" intersects the
    shuffle encoding with the alternating-pattern filter before unpriming.
    """
    _require_same_alphabet(a, b)
    if route == "morphism":
        h1, h2, h = _primed_alphabet_pieces(a.k)
        core = intersect(
            intersect(inverse_morphism(a, h1), inverse_morphism(b, h2)),
            _alternation_filter(a.k),
        )
        return trim(apply_morphism(core, h))
    if route != "product":
        raise ValueError(f"unknown route {route!r}")
    eps_a, sym_a = _maps(a)
    eps_b, sym_b = _maps(b)

    def sid(p: int, q: int, turn: int) -> int:
        return (p * b.state_count + q) * 2 + turn

    transitions = []
    for p in range(a.state_count):
        for q in range(b.state_count):
            for turn in (0, 1):
                src = sid(p, q, turn)
                for p2 in eps_a.get(p, ()):
                    transitions.append((src, None, sid(p2, q, turn)))
                for q2 in eps_b.get(q, ()):
                    transitions.append((src, None, sid(p, q2, turn)))
                for s in range(a.k):
                    if turn == 0:
                        for p2 in sym_a.get((p, s), ()):
                            transitions.append((src, s, sid(p2, q, 1)))
                    else:
                        for q2 in sym_b.get((q, s), ()):
                            transitions.append((src, s, sid(p, q2, 0)))
    return trim(
        Nfa.make(
            a.k,
            a.state_count * b.state_count * 2,
            transitions,
            (sid(p, q, 0) for p in a.initial for q in b.initial),
            (sid(p, q, 0) for p in a.final for q in b.final),
        )
    )


def pss_nfa(a: Nfa) -> Nfa:
    """Automaton for the language with every symbol doubled."""
    return apply_morphism(a, doubling_morphism(a.k))


def bdi_nfa(a: Nfa) -> Nfa:
    """Image under the first-half/last-half perfect shuffle.

    One track runs the automaton on the odd-indexed input letters from the
    start states; a second track runs it on the even-indexed letters from a
    guessed splice state, remembered so acceptance can check the guess: the
    first track must end exactly where the second began.  An odd-length
    input ends with an extra letter for the second track, handled by a
    nondeterministic jump to a dedicated accepting state on the last symbol.
    """
    a = remove_epsilons(a)
    _eps, sym = _maps(a)
    index: dict[tuple, int] = {}
    work: list[tuple] = []
    transitions = []

    def state(t: tuple) -> int:
        if t not in index:
            index[t] = len(index)
            work.append(t)
        return index[t]

    accept = state(("accept",))
    initial = [
        state((i, g, g, 0)) for i in sorted(a.initial) for g in range(a.state_count)
    ]
    while work:
        t = work.pop()
        if t == ("accept",):
            continue
        s, e, g, parity = t
        src = index[t]
        for c in range(a.k):
            if parity == 0:
                for s2 in sym.get((s, c), ()):
                    transitions.append((src, c, state((s2, e, g, 1))))
                # the guessed splice checked out and this is the final letter
                if s == g and sym.get((e, c), set()) & a.final:
                    transitions.append((src, c, accept))
            else:
                for e2 in sym.get((e, c), ()):
                    transitions.append((src, c, state((s, e2, g, 0))))
    final = [accept] + [
        i
        for t, i in index.items()
        if len(t) == 4 and t[3] == 0 and t[0] == t[2] and t[1] in a.final
    ]
    return trim(Nfa.make(a.k, len(index), transitions, initial, final))


def bdir_nfa(a: Nfa) -> Nfa:
    """Image under the first-half/reversed-last-half perfect shuffle.

    A forward track runs the automaton on odd-indexed letters from the start
    states while a backward track walks transitions in reverse on the
    even-indexed letters, starting from the accepting states; the two must
    meet in the middle.  For odd-length inputs the final letter belongs to
    the backward track and must close the gap to the forward track in one
    reversed step.
    """
    a = remove_epsilons(a)
    _eps, sym = _maps(a)
    rev: dict[tuple[int, int], set[int]] = {}
    edge_set = set()
    for src, label, dst in a.transitions:
        rev.setdefault((dst, label), set()).add(src)
        edge_set.add((src, label, dst))
    index: dict[tuple, int] = {}
    work: list[tuple] = []
    transitions = []

    def state(t: tuple) -> int:
        if t not in index:
            index[t] = len(index)
            work.append(t)
        return index[t]

    accept = state(("accept",))
    initial = [state((i, f, 0)) for i in sorted(a.initial) for f in sorted(a.final)]
    while work:
        t = work.pop()
        if t == ("accept",):
            continue
        s, e, parity = t
        src = index[t]
        for c in range(a.k):
            if parity == 0:
                for s2 in sym.get((s, c), ()):
                    transitions.append((src, c, state((s2, e, 1))))
                # odd-length close: the middle letter steps the backward
                # track from e straight onto the forward track's state
                if (s, c, e) in edge_set:
                    transitions.append((src, c, accept))
            else:
                for e2 in rev.get((e, c), ()):
                    transitions.append((src, c, state((s, e2, 0))))
    final = [accept] + [
        i for t, i in index.items() if len(t) == 3 and t[2] == 0 and t[0] == t[1]
    ]
    return trim(Nfa.make(a.k, len(index), transitions, initial, final))


# ---------------------------------------------------------------------------
# bounded enumeration


def enumerate_language(
    a: Nfa, max_len: int, cap: int = LANGUAGE_CARDINALITY_CAP
) -> WordSet:
    """Exactly the language's words of length at most ``max_len``.

    Breadth-first over (word, reachable state set) pairs, one level per
    length.  Raises a resource-limit error if the result or the set of live
    prefixes outgrows ``cap``.
    """
    eps, sym = _maps(a)
    start = _closure(a.initial, eps)
    frontier: dict[tuple[int, ...], frozenset] = {(): start} if start else {}
    found: list[tuple[int, ...]] = []
    for length in range(max_len + 1):
        for word, states in frontier.items():
            if states & a.final:
                found.append(word)
                if len(found) > cap:
                    raise ResourceLimitError(
                        f"bounded language exceeds cap of {cap} words"
                    )
        if length == max_len:
            break
        nxt: dict[tuple[int, ...], frozenset] = {}
        for word, states in frontier.items():
            for s in range(a.k):
                after = _step(states, s, sym, eps)
                if after:
                    nxt[word + (s,)] = after
            if len(nxt) > cap:
                raise ResourceLimitError(
                    f"live prefix count exceeds cap of {cap} words"
                )
        frontier = nxt
    return WordSet((Word(t, a.k) for t in found), a.k)


def image_under(
    f: Callable[[Word], Word], a: Nfa, max_len: int, cap: int = LANGUAGE_CARDINALITY_CAP
) -> WordSet:
    """Apply a word operation to every language word up to ``max_len``."""
    source = enumerate_language(a, max_len, cap)
    return WordSet({f(w) for w in source}, a.k)


# ---------------------------------------------------------------------------
# regexes

REGEX_OPERATORS = "|*+()"


class Regex:
    """Abstract syntax for the harness regexes; see :func:`parse_regex`."""


@dataclass(frozen=True)
class Lit(Regex):
    symbol: int


@dataclass(frozen=True)
class Epsilon(Regex):
    pass


@dataclass(frozen=True)
class Concat(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Union(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Star(Regex):
    inner: Regex


@dataclass(frozen=True)
class Plus(Regex):
    inner: Regex


def parse_regex(text: str) -> Regex:
    """Parse symbol literals with ``|``, juxtaposition, ``*``, ``+``, parens.

    The empty string (or empty group) denotes the empty word.
    """
    pos = 0

    def peek() -> str:
        return text[pos] if pos < len(text) else ""

    def parse_union() -> Regex:
        nonlocal pos
        node = parse_concat()
        while peek() == "|":
            pos += 1
            node = Union(node, parse_concat())
        return node

    def parse_concat() -> Regex:
        nonlocal pos
        parts = []
        while peek() and peek() not in "|)":
            parts.append(parse_repeat())
        if not parts:
            return Epsilon()
        node = parts[0]
        for p in parts[1:]:
            node = Concat(node, p)
        return node

    def parse_repeat() -> Regex:
        nonlocal pos
        node = parse_atom()
        while peek() in "*+":
            node = Star(node) if peek() == "*" else Plus(node)
            pos += 1
        return node

    def parse_atom() -> Regex:
        nonlocal pos
        c = peek()
        if c == "(":
            pos += 1
            node = parse_union()
            if peek() != ")":
                raise ValueError(f"unbalanced parenthesis in regex {text!r}")
            pos += 1
            return node
        if c in CHAR_TO_SYMBOL:
            pos += 1
            return Lit(CHAR_TO_SYMBOL[c])
        raise ValueError(f"unexpected character {c!r} in regex {text!r}")

    node = parse_union()
    if pos != len(text):
        raise ValueError(f"trailing input in regex {text!r}")
    return node


def _max_literal(r: Regex) -> int:
    if isinstance(r, Lit):
        return r.symbol
    if isinstance(r, (Concat, Union)):
        return max(_max_literal(r.left), _max_literal(r.right))
    if isinstance(r, (Star, Plus)):
        return _max_literal(r.inner)
    return -1


def regex_to_nfa(r: Regex, k: int | None = None) -> Nfa:
    """Thompson-style construction; one initial and one final state."""
    if k is None:
        k = max(_max_literal(r), 0) + 1
    transitions = []
    counter = [0]

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    def build(node: Regex) -> tuple[int, int]:
        if isinstance(node, Lit):
            s, e = fresh(), fresh()
            transitions.append((s, node.symbol, e))
            return s, e
        if isinstance(node, Epsilon):
            s = fresh()
            return s, s
        if isinstance(node, Concat):
            s1, e1 = build(node.left)
            s2, e2 = build(node.right)
            transitions.append((e1, None, s2))
            return s1, e2
        if isinstance(node, Union):
            s, e = fresh(), fresh()
            s1, e1 = build(node.left)
            s2, e2 = build(node.right)
            transitions.extend(
                [(s, None, s1), (s, None, s2), (e1, None, e), (e2, None, e)]
            )
            return s, e
        if isinstance(node, (Star, Plus)):
            s, e = fresh(), fresh()
            s1, e1 = build(node.inner)
            transitions.extend([(s, None, s1), (e1, None, s1), (e1, None, e)])
            if isinstance(node, Star):
                transitions.append((s, None, e))
            return s, e
        raise TypeError(f"not a regex node: {node!r}")

    start, end = build(r)
    return Nfa.make(k, counter[0], transitions, [start], [end])


def regex_nfa(text: str, k: int | None = None) -> Nfa:
    """Parse and compile in one step."""
    return regex_to_nfa(parse_regex(text), k)


# ---------------------------------------------------------------------------
# JSON and DOT


def nfa_to_json(a: Nfa) -> str:
    if a.k > len(SYMBOL_CHARS):
        raise AlphabetError(
            f"alphabet size {a.k} exceeds the printable table of {len(SYMBOL_CHARS)}"
        )
    obj = {
        "k": a.k,
        "states": a.state_count,
        "initial": sorted(a.initial),
        "final": sorted(a.final),
        "transitions": [
            [s, "" if l is None else SYMBOL_CHARS[l], d]
            for s, l, d in sorted(
                a.transitions, key=lambda t: (t[0], -1 if t[1] is None else t[1], t[2])
            )
        ],
    }
    return json.dumps(obj, indent=2)


def nfa_from_json(text: str) -> Nfa:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise NfaFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise NfaFormatError("top level must be an object")
    for field in ("k", "states", "initial", "final", "transitions"):
        if field not in obj:
            raise NfaFormatError(f"missing field {field!r}")
    k, states = obj["k"], obj["states"]
    if not isinstance(k, int) or k < 1:
        raise NfaFormatError(f"field 'k' must be a positive integer, got {k!r}")
    if not isinstance(states, int) or states < 0:
        raise NfaFormatError(f"field 'states' must be a non-negative integer, got {states!r}")
    for field in ("initial", "final"):
        if not isinstance(obj[field], list) or not all(
            isinstance(q, int) and 0 <= q < states for q in obj[field]
        ):
            raise NfaFormatError(
                f"field {field!r} must be a list of state indices below {states}"
            )
    if not isinstance(obj["transitions"], list):
        raise NfaFormatError("field 'transitions' must be a list")
    transitions = []
    for i, item in enumerate(obj["transitions"]):
        if not (isinstance(item, list) and len(item) == 3):
            raise NfaFormatError(
                f"field 'transitions'[{i}] must be a [source, label, target] triple"
            )
        src, label, dst = item
        if not (isinstance(src, int) and 0 <= src < states) or not (
            isinstance(dst, int) and 0 <= dst < states
        ):
            raise NfaFormatError(
                f"field 'transitions'[{i}] has a state outside 0..{states - 1}"
            )
        if label == "":
            sym = None
        elif isinstance(label, str) and label in CHAR_TO_SYMBOL and CHAR_TO_SYMBOL[label] < k:
            sym = CHAR_TO_SYMBOL[label]
        else:
            raise NfaFormatError(
                f"field 'transitions'[{i}] has label {label!r}, "
                f"expected a symbol character below alphabet size {k} or \"\""
            )
        transitions.append((src, sym, dst))
    return Nfa.make(k, states, transitions, obj["initial"], obj["final"])


def to_dot(a: Nfa) -> str:
    """Graphviz rendering: circles, doubled finals, labeled edges."""
    lines = [
        "digraph nfa {",
        "  rankdir=LR;",
        '  node [shape=circle];',
    ]
    for q in sorted(a.final):
        lines.append(f"  {q} [shape=doublecircle];")
    for i, q in enumerate(sorted(a.initial)):
        lines.append(f"  __start{i} [shape=point];")
        lines.append(f"  __start{i} -> {q};")
    for s, l, d in sorted(
        a.transitions, key=lambda t: (t[0], -1 if t[1] is None else t[1], t[2])
    ):
        label = "ε" if l is None else SYMBOL_CHARS[l]
        lines.append(f'  {s} -> {d} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines)
