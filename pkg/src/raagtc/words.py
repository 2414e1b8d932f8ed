"""Words in the right-angled Artin group of a graph.

A word is a tuple of ``(generator, sign)`` letters with ``sign`` in {+1, -1}.
Two generators commute exactly when they are adjacent in the graph.
Normal forms are freely reduced (no letter cancels against an inverse that
can be shuffled next to it) and then the lexicographically least linear
order of the letters, comparing by generator index and then +1 before -1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .cliques import all_cliques
from .graph import Graph, GraphError, members
from .solver import z_r_exact

Letter = tuple[int, int]
Word = tuple[Letter, ...]

EMPTY: Word = ()


def check_word(g: Graph, w: Word) -> None:
    for gen, sign in w:
        if not 0 <= gen < g.n:
            raise GraphError(f"generator {gen} out of range for {g.n} vertices")
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")


def _reduce(g: Graph, w: Word) -> list[Letter]:
    out: list[Letter] = []
    adj = g.adj
    for gen, sign in w:
        cancelled = False
        # look back past letters that commute with gen for a cancelling partner
        for i in range(len(out) - 1, -1, -1):
            other, s = out[i]
            if other == gen:
                if s == -sign:
                    del out[i]
                    cancelled = True
                break
            if not adj[gen] >> other & 1:
                break
        if not cancelled:
            out.append((gen, sign))
    return out


def _letter_key(letter: Letter) -> tuple[int, int]:
    return letter[0], 0 if letter[1] == 1 else 1


def _lex_least(g: Graph, letters: list[Letter]) -> Word:
    rest = list(letters)
    out = []
    adj = g.adj
    while rest:
        seen = 0
        best = None
        for i, (gen, sign) in enumerate(rest):
            # movable to the front iff everything before it commutes with it
            if not seen & ~adj[gen]:
                if best is None or _letter_key(rest[i]) < _letter_key(rest[best]):
                    best = i
            seen |= 1 << gen
        out.append(rest.pop(best))
    return tuple(out)


def normal_form(g: Graph, w: Word) -> Word:
    """Canonical representative of ``w``; equal group elements share it."""
    check_word(g, w)
    return _lex_least(g, _reduce(g, w))


def inverse(w: Word) -> Word:
    return tuple((gen, -sign) for gen, sign in reversed(w))


def multiply(g: Graph, u: Word, v: Word) -> Word:
    return normal_form(g, tuple(u) + tuple(v))


def project_fA(g: Graph, A: int, w: Word) -> Word:
    """Image of ``w`` under the endomorphism fixing generators in ``A`` and killing the rest."""
    g.check_mask(A)
    check_word(g, w)
    return normal_form(g, tuple(x for x in w if A >> x[0] & 1))


def is_in_special_subgroup(g: Graph, A: int, w: Word) -> bool:
    """Membership of ``w`` in the subgroup generated by ``A``.

    Uses that f_A restricts to the identity on that subgroup and maps onto it.
    """
    return project_fA(g, A, w) == normal_form(g, w)


def parse_word(g: Graph, text: str) -> Word:
    """Parse whitespace-separated tokens ``a`` or ``a^-1`` over vertex labels."""
    out = []
    for tok in text.split():
        if tok.endswith("^-1"):
            out.append((g.index(tok[:-3]), -1))
        elif tok.endswith("^1"):
            out.append((g.index(tok[:-2]), 1))
        else:
            out.append((g.index(tok), 1))
    return tuple(out)


def format_word(g: Graph, w: Word) -> str:
    return " ".join(g.labels[gen] + ("" if sign == 1 else "^-1") for gen, sign in w)


def random_word(g: Graph, rng: random.Random, max_len: int = 12) -> Word:
    if g.n == 0:
        return EMPTY
    length = rng.randint(0, max_len)
    return tuple((rng.randrange(g.n), rng.choice((1, -1))) for _ in range(length))


def random_word_over(g: Graph, A: int, rng: random.Random, max_len: int = 12) -> Word:
    gens = members(A)
    if not gens:
        return EMPTY
    length = rng.randint(0, max_len)
    return tuple((rng.choice(gens), rng.choice((1, -1))) for _ in range(length))


def all_words(n: int, max_len: int) -> Iterator[Word]:
    letters = [(gen, sign) for gen in range(n) for sign in (1, -1)]
    for length in range(max_len + 1):
        yield from product(letters, repeat=length)


@dataclass
class CheckTally:
    passed: int = 0
    failed: int = 0
    counterexamples: list[str] = field(default_factory=list)

    def record(self, ok: bool, describe) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.counterexamples) < 5:
                self.counterexamples.append(describe())


@dataclass
class LemmaReport:
    """Pass/fail tallies for the projection identities.

    L1: f_A f_B = f_{A&B} = f_B f_A.
    L2: membership in [A] and [B] iff membership in [A&B].
    L3: f_{C_1} ... f_{C_r} kills every word when the cliques C_i share no vertex.
    """

    samples: int
    seed: int | None
    l1: CheckTally = field(default_factory=CheckTally)
    l2: CheckTally = field(default_factory=CheckTally)
    l3: CheckTally = field(default_factory=CheckTally)
    l3_vacuous: bool = False

    @property
    def ok(self) -> bool:
        return not (self.l1.failed or self.l2.failed or self.l3.failed)

    def to_json(self) -> dict:
        def tally(t: CheckTally) -> dict:
            return {"passed": t.passed, "failed": t.failed, "counterexamples": t.counterexamples}

        return {
            "samples": self.samples,
            "seed": self.seed,
            "ok": self.ok,
            "L1": tally(self.l1),
            "L2": tally(self.l2),
            "L3": {**tally(self.l3), "vacuous": self.l3_vacuous},
        }

    def lines(self) -> list[str]:
        out = []
        for name, t in (("L1", self.l1), ("L2", self.l2), ("L3", self.l3)):
            note = " (vacuous: only sequences containing the empty clique)" if name == "L3" and self.l3_vacuous else ""
            out.append(f"{name}: {t.passed} passed, {t.failed} failed{note}")
            out += [f"  counterexample: {c}" for c in t.counterexamples]
        out.append("all checks passed" if self.ok else "FAILURES")
        return out


def _fmt_set(g: Graph, A: int) -> str:
    return "{" + ",".join(g.labels[v] for v in members(A)) + "}"


def _check_l1(g: Graph, A: int, B: int, w: Word, tally: CheckTally) -> None:
    ab = project_fA(g, A, project_fA(g, B, w))
    ba = project_fA(g, B, project_fA(g, A, w))
    both = project_fA(g, A & B, w)
    tally.record(
        ab == both == ba,
        lambda: f"A={_fmt_set(g, A)} B={_fmt_set(g, B)} w={format_word(g, w)!r}",
    )


def _check_l2(g: Graph, A: int, B: int, w: Word, tally: CheckTally) -> None:
    lhs = is_in_special_subgroup(g, A, w) and is_in_special_subgroup(g, B, w)
    rhs = is_in_special_subgroup(g, A & B, w)
    tally.record(lhs == rhs, lambda: f"A={_fmt_set(g, A)} B={_fmt_set(g, B)} w={format_word(g, w)!r}")


def _clique_sequences(g: Graph, rng: random.Random, extra: int = 64) -> list[tuple[int, ...]]:
    """Clique sequences with empty total intersection.

    Optimal witnesses for r = 2..max(3, n), then random sequences of
    nonempty cliques found by rejection sampling.
    """
    pool = [z_r_exact(g, r).witness for r in range(2, max(3, g.n) + 1)]
    nonempty = [c for c in all_cliques(g) if c]
    if nonempty:
        for _ in range(extra * 8):
            if len(pool) >= extra:
                break
            seq = tuple(rng.choice(nonempty) for _ in range(rng.randint(2, 4)))
            common = -1
            for c in seq:
                common &= c
            if common == 0:
                pool.append(seq)
    return pool


def verify_lemmas(g: Graph, samples: int, seed: int, max_len: int = 12) -> LemmaReport:
    """Check the projection identities on seeded random subsets and words."""
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = random.Random(seed)
    report = LemmaReport(samples, seed)
    seqs = _clique_sequences(g, rng)
    report.l3_vacuous = not any(all(seq) for seq in seqs)
    full = g.vertex_mask

    def subset() -> int:
        return rng.getrandbits(g.n) & full if g.n else 0

    for _ in range(samples):
        A, B = subset(), subset()
        w = random_word(g, rng, max_len)
        _check_l1(g, A, B, w, report.l1)

        # random words almost never land in a proper special subgroup, so
        # half of the L2 probes are drawn from inside one
        pick = rng.random()
        if pick < 0.25:
            probe = random_word_over(g, A & B, rng, max_len)
        elif pick < 0.5:
            probe = random_word_over(g, rng.choice((A, B)), rng, max_len)
        else:
            probe = w
        _check_l2(g, A, B, probe, report.l2)

        seq = rng.choice(seqs)
        image = w
        for c in reversed(seq):
            image = project_fA(g, c, image)
        report.l3.record(
            image == EMPTY,
            lambda: f"cliques={[_fmt_set(g, c) for c in seq]} w={format_word(g, w)!r}",
        )
    return report


def exhaustive_sweep(g: Graph, max_len: int = 4) -> LemmaReport:
    """L1 and L2 over every word up to ``max_len`` and every pair of vertex subsets."""
    report = LemmaReport(0, None)
    subsets = range(1 << g.n)
    cache: dict[tuple[int, Word], Word] = {}

    def f(A: int, w: Word) -> Word:
        key = (A, w)
        if key not in cache:
            cache[key] = project_fA(g, A, w)
        return cache[key]

    for w in all_words(g.n, max_len):
        report.samples += 1
        nf = normal_form(g, w)
        images = {A: f(A, w) for A in subsets}
        member = {A: images[A] == nf for A in subsets}
        for A in subsets:
            for B in subsets:
                ab, ba, both = f(A, images[B]), f(B, images[A]), images[A & B]
                report.l1.record(
                    ab == both == ba,
                    lambda: f"A={_fmt_set(g, A)} B={_fmt_set(g, B)} w={format_word(g, w)!r}",
                )
                report.l2.record(
                    (member[A] and member[B]) == member[A & B],
                    lambda: f"A={_fmt_set(g, A)} B={_fmt_set(g, B)} w={format_word(g, w)!r}",
                )
    return report

