"""Monomial-to-monomial rewriting of factor sequences by adjacent-pair rules.

A rule is a callable ``rule(x, y)`` returning ``None`` when the adjacent pair
``x y`` is already in order, and otherwise the replacement tuple (one or two
factors). Both normalisers below produce the same result whenever the rule
system is confluent; the randomised one exists to test exactly that.
"""

from __future__ import annotations

import random
from typing import Callable, Optional, Sequence


class FuelExhausted(RuntimeError):
    """Too many rule applications: a rewriting system failed to terminate."""


Rule = Callable[[tuple, tuple], Optional[tuple]]


def stack_normalize(factors: Sequence[tuple], rule: Rule, fuel: int = 10**6,
                    check: Callable[[tuple, tuple], None] | None = None) -> list[tuple]:
    """Leftmost-innermost normalisation with a stack.

    The stack always holds a normal word; each incoming factor is pushed and
    the pair at the top is rewritten until it is in order.
    """
    stack: list[tuple] = []
    budget = [fuel]

    def push(f):
        while stack:
            top = stack[-1]
            repl = rule(top, f)
            if repl is None:
                break
            budget[0] -= 1
            if budget[0] < 0:
                raise FuelExhausted(f"rewriting exceeded {fuel} steps")
            if check is not None:
                check((top, f), repl)
            stack.pop()
            if len(repl) == 1:
                f = repl[0]
                continue
            # re-insert all but the last factor, then keep pushing the last
            for g in repl[:-1]:
                push(g)
            f = repl[-1]
        stack.append(f)

    for f in factors:
        push(f)
    return stack


def random_normalize(factors: Sequence[tuple], rule: Rule, rng: random.Random,
                     fuel: int = 10**6,
                     check: Callable[[tuple, tuple], None] | None = None) -> list[tuple]:
    """Apply rules at uniformly random reducible positions until none remain."""
    word = list(factors)
    steps = 0
    while True:
        bad = [k for k in range(len(word) - 1) if rule(word[k], word[k + 1]) is not None]
        if not bad:
            return word
        steps += 1
        if steps > fuel:
            raise FuelExhausted(f"rewriting exceeded {fuel} steps")
        k = rng.choice(bad)
        repl = rule(word[k], word[k + 1])
        if check is not None:
            check((word[k], word[k + 1]), repl)
        word[k:k + 2] = repl
