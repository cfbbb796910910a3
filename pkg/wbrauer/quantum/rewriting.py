"""
Rewriting completion for the quantized presentation.

A rule rewrites a leading word to a combination of smaller words in the
degree-lexicographic order. Completion turns the defining relations into a
confluent rule set: every overlap of two leading words is resolved, every
nonzero residue becomes a new rule, and rules whose leading word becomes
reducible are retired and re-queued. The irreducible words then form a
linear basis, which must have (r+s)! elements.

Example:
    >>> system = complete(Presentation.build(Wall(2, 1), ScalarMode.generic_q(3)))
    >>> system.dimension
    6
"""

from __future__ import annotations

import heapq
import itertools
import logging
import math
import typing as t

from ..common.config import Limits, get_limits
from ..common.exceptions import CompletionBudgetExceededError, DimensionMismatchError
from ..scalars import Scalar
from .presentation import EMPTY_WORD, FreePoly, Presentation, Word, free_add, free_mul, word_key

logger = logging.getLogger(__name__)


class RewriteSystem:
    """
    An oriented rule set over a presentation, with cached normal forms.

    Rules map a leading word to the free polynomial it rewrites to. Normal
    forms are memoized per word; the cache is dropped whenever the rule set
    changes.
    """

    __slots__ = ("presentation", "rules", "_lengths", "_cache", "_normal_words")

    def __init__(self, presentation: Presentation, rules: t.Mapping[Word, FreePoly] | None = None) -> None:
        self.presentation = presentation
        self.rules: dict[Word, FreePoly] = dict(rules or {})
        self._lengths: list[int] = sorted({len(w) for w in self.rules})
        self._cache: dict[Word, FreePoly] = {}
        self._normal_words: tuple[Word, ...] | None = None

    # -------------------------------------------------------------------------
    # Rule set
    # -------------------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.rules)

    def _changed(self) -> None:
        self._lengths = sorted({len(w) for w in self.rules})
        self._cache.clear()
        self._normal_words = None

    def add_rule(self, poly: FreePoly) -> tuple[Word, list[FreePoly]]:
        """
        Orient a nonzero, fully reduced polynomial into a rule.

        Returns:
            ``(lead, retired)``: the new leading word and the polynomials of
            the rules whose leading words it made reducible.
        """
        lead = max(poly, key=word_key)
        inverse = 1 / poly[lead]
        rhs = {w: -c * inverse for w, c in poly.items() if w != lead}
        retired: list[FreePoly] = []
        for old in [w for w in self.rules if _contains(w, lead)]:
            retired.append(free_add({old: self.one}, self.rules.pop(old), -1))
        self.rules[lead] = rhs
        self._changed()
        return lead, retired

    @property
    def one(self) -> Scalar:
        return self.presentation.mode.one

    # -------------------------------------------------------------------------
    # Reduction
    # -------------------------------------------------------------------------

    def _match(self, word: Word, start: int = 0) -> tuple[int, Word] | None:
        """Leftmost occurrence of a leading word at or after ``start``."""
        rules = self.rules
        for i in range(start, len(word)):
            for length in self._lengths:
                if i + length > len(word):
                    break
                candidate = word[i : i + length]
                if candidate in rules:
                    return i, candidate
        return None

    def _rewrite_once(self, word: Word) -> FreePoly | None:
        found = self._match(word)
        if found is None:
            return None
        i, lead = found
        prefix, suffix = word[:i], word[i + len(lead) :]
        out: FreePoly = {}
        for middle, coeff in self.rules[lead].items():
            target = prefix + middle + suffix
            current = out.get(target)
            out[target] = coeff if current is None else current + coeff
        return {w: c for w, c in out.items() if c}

    def normal_form_word(self, word: Word) -> FreePoly:
        """Normal form of a single word, memoized."""
        cache = self._cache
        if word in cache:
            return cache[word]
        stack = [word]
        expansions: dict[Word, FreePoly | None] = {}
        while stack:
            current = stack[-1]
            if current in cache:
                stack.pop()
                continue
            if current not in expansions:
                expansions[current] = self._rewrite_once(current)
            expansion = expansions[current]
            if expansion is None:
                cache[current] = {current: self.one}
                stack.pop()
                continue
            pending = [w for w in expansion if w not in cache]
            if pending:
                stack.extend(pending)
                continue
            result: FreePoly = {}
            for target, coeff in expansion.items():
                for w, c in cache[target].items():
                    current_value = result.get(w)
                    value = coeff * c if current_value is None else current_value + coeff * c
                    result[w] = value
            cache[current] = {w: c for w, c in result.items() if c}
            stack.pop()
        return cache[word]

    def normal_form(self, poly: t.Mapping[Word, Scalar]) -> FreePoly:
        out: FreePoly = {}
        for word, coeff in poly.items():
            if not coeff:
                continue
            for w, c in self.normal_form_word(word).items():
                current = out.get(w)
                out[w] = coeff * c if current is None else current + coeff * c
        return {w: c for w, c in out.items() if c}

    def is_normal(self, word: Word) -> bool:
        return self._match(word) is None

    # -------------------------------------------------------------------------
    # Overlaps
    # -------------------------------------------------------------------------

    def overlaps(self, first: Word, second: Word) -> t.Iterator[tuple[Word, FreePoly]]:
        """
        Overlap ambiguities of two leading words and their residues.

        A proper suffix of ``first`` equal to a proper prefix of ``second``
        gives the word ``first + second[k:]``; its residue is the difference
        of the two one-step rewrites.
        """
        rhs_first, rhs_second = self.rules[first], self.rules[second]
        for k in range(1, min(len(first), len(second))):
            if first[-k:] != second[:k]:
                continue
            left = free_mul(rhs_first, {second[k:]: self.one})
            right = free_mul({first[:-k]: self.one}, rhs_second)
            yield first + second[k:], free_add(left, right, -1)

    def unresolved(self) -> list[FreePoly]:
        """Residues of all overlaps that do not reduce to zero."""
        out = []
        for first, second in itertools.product(sorted(self.rules, key=word_key), repeat=2):
            for _, residue in self.overlaps(first, second):
                reduced = self.normal_form(residue)
                if reduced:
                    out.append(reduced)
        return out

    def is_confluent(self) -> bool:
        return not self.unresolved()

    def interreduce(self) -> None:
        """Replace every right-hand side by its normal form."""
        for lead in sorted(self.rules, key=word_key):
            self.rules[lead] = self.normal_form(self.rules[lead])
        self._cache.clear()

    # -------------------------------------------------------------------------
    # Basis
    # -------------------------------------------------------------------------

    def normal_words(self, bound: int | None = None) -> tuple[Word, ...]:
        """
        The irreducible words in degree-lexicographic order.

        Raises:
            DimensionMismatchError: If more than ``bound`` words are found
                (the default bound is (r+s)!).
        """
        if self._normal_words is not None:
            return self._normal_words
        expected = self.presentation.wall.dimension
        bound = expected if bound is None else bound
        letters = range(len(self.presentation.letters))
        found: list[Word] = [EMPTY_WORD]
        frontier = [EMPTY_WORD]
        while frontier:
            grown = []
            for word in frontier:
                for letter in letters:
                    candidate = word + (letter,)
                    if self._suffix_reducible(candidate):
                        continue
                    grown.append(candidate)
            found.extend(grown)
            if len(found) > bound:
                raise DimensionMismatchError("Too many irreducible words", expected, len(found))
            frontier = grown
        self._normal_words = tuple(sorted(found, key=word_key))
        return self._normal_words

    def _suffix_reducible(self, word: Word) -> bool:
        return any(length <= len(word) and word[len(word) - length :] in self.rules for length in self._lengths)

    @property
    def dimension(self) -> int:
        return len(self.normal_words())

    def to_dict(self) -> dict[str, t.Any]:
        fmt = self.presentation.format_word
        return {
            "presentation": self.presentation.to_dict(),
            "rule_count": len(self.rules),
            "dimension": self.dimension,
            "normal_words": [fmt(w) for w in self.normal_words()],
        }


def _contains(word: Word, sub: Word) -> bool:
    n = len(sub)
    return any(word[i : i + n] == sub for i in range(len(word) - n + 1))


# =============================================================================
# Completion
# =============================================================================


def complete(presentation: Presentation, limits: Limits | None = None) -> RewriteSystem:
    """
    Complete the defining relations into a confluent rewriting system.

    Residues are processed smallest leading word first. After the queue
    drains, every overlap of the final rules is re-checked; stragglers are
    queued again until none remain.

    Raises:
        SizeLimitExceededError: If r + s exceeds the quantized size cap.
        CompletionBudgetExceededError: If the rule count passes the budget.
        DimensionMismatchError: If the irreducible words do not number (r+s)!.
    """
    limits = limits or get_limits()
    wall = presentation.wall
    limits.check_quantum_wall(wall)
    system = RewriteSystem(presentation)
    counter = itertools.count()
    queue: list[tuple[tuple[int, Word], int, FreePoly]] = []

    def push(poly: FreePoly) -> None:
        if poly:
            heapq.heappush(queue, (word_key(max(poly, key=word_key)), next(counter), poly))

    for relation in presentation.relations:
        push(relation.poly)

    rounds = 0
    while queue:
        rounds += 1
        while queue:
            _, _, poly = heapq.heappop(queue)
            reduced = system.normal_form(poly)
            if not reduced:
                continue
            lead, retired = system.add_rule(reduced)
            if len(system) > limits.completion_budget:
                raise CompletionBudgetExceededError(len(system), limits.completion_budget)
            for old in retired:
                push(old)
            for other in list(system.rules):
                for _, residue in system.overlaps(lead, other):
                    push(residue)
                if other != lead:
                    for _, residue in system.overlaps(other, lead):
                        push(residue)
        for residue in system.unresolved():
            push(residue)

    system.interreduce()
    words = system.normal_words()
    if len(words) != math.factorial(wall.n):
        raise DimensionMismatchError(f"Irreducible words of H{wall}", math.factorial(wall.n), len(words))
    logger.info(
        "completed H%s over %s: %d rules, %d normal words, %d rounds",
        wall,
        presentation.mode.label,
        len(system),
        len(words),
        rounds,
    )
    return system
