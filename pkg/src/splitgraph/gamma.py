"""The word-support graph on a split-extension group.

Vertices are the group elements, named by their canonical words.  Three
adjacency rules decide edges between distinct vertices:

  I     the empty word (the identity) is adjacent to every other vertex;
  II-ii two single-generator powers are adjacent when their generators
        differ, or when the generator is shared and the exponents differ;
  II-i  any other pair is adjacent exactly when the supports of the two
        words are disjoint, subject to a length gate.

Each knob of InterpretationPolicy resolves one genuine ambiguity in that
rule set, so a policy plus a realization fully determines the graph:

  allow_zero_exponents
      forbidden (default): supports are read off the reduced words.
      allowed: every word is treated as if padded with exponent-0
      factors of every generator, so no two supports are disjoint and
      rule II-i never fires.  Single-generator adjacency (II-ii) is
      still decided on the reduced names, which never carry zeros.
  rule2i_length_gate
      at-least-one (default): II-i applies when at least one word has
      two or more factors.  both: II-i needs two or more factors on
      both sides, which silences single-against-multi pairs.  none: no
      gate; identical to at-least-one here because single-against-single
      pairs are always resolved by II-ii first.
  same_generator_exponent_edges
      reduced (default): exponents of same-generator powers are compared
      as the reduced canonical values.  raw: exponents are compared as
      written.  On canonical (reduced) names the two readings decide
      identically; they would only diverge if vertices were unreduced
      words rather than group elements.
  support_comparison
      disjoint: supports disjoint means adjacent (the only reading that
      reproduces both reference degree sequences).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .presentation import Realization, Word

__all__ = [
    "LengthGate",
    "SameGeneratorEdges",
    "SupportComparison",
    "InterpretationPolicy",
    "DEFAULT_POLICY",
    "Rule",
    "EdgeTrace",
    "GammaGraph",
    "support",
    "edge_decision",
    "build_gamma",
]


class LengthGate(Enum):
    AT_LEAST_ONE = "at-least-one"
    BOTH = "both"
    NONE = "none"


class SameGeneratorEdges(Enum):
    REDUCED = "reduced"
    RAW = "raw"


class SupportComparison(Enum):
    DISJOINT = "disjoint"


_POLICY_FIELDS = ("zeros", "gate", "samegen", "support")


@dataclass(frozen=True)
class InterpretationPolicy:
    """A serializable resolution of every ambiguity in the edge rules."""

    allow_zero_exponents: bool = False
    rule2i_length_gate: LengthGate = LengthGate.AT_LEAST_ONE
    same_generator_exponent_edges: SameGeneratorEdges = SameGeneratorEdges.REDUCED
    support_comparison: SupportComparison = SupportComparison.DISJOINT

    def to_string(self) -> str:
        """Canonical key=value form, stable across runs."""
        zeros = "allowed" if self.allow_zero_exponents else "forbidden"
        return (
            f"zeros={zeros},gate={self.rule2i_length_gate.value},"
            f"samegen={self.same_generator_exponent_edges.value},"
            f"support={self.support_comparison.value}"
        )

    @classmethod
    def from_string(cls, text: str) -> InterpretationPolicy:
        """Parse the canonical form; omitted keys keep their defaults."""
        kwargs: dict[str, object] = {}
        text = text.strip()
        if not text:
            return cls()
        for part in text.split(","):
            key, sep, value = part.strip().partition("=")
            if not sep:
                raise ValueError(f"policy entry {part!r} is not of the form key=value")
            if key == "zeros":
                if value not in ("allowed", "forbidden"):
                    raise ValueError(f"zeros must be 'allowed' or 'forbidden', got {value!r}")
                kwargs["allow_zero_exponents"] = value == "allowed"
            elif key == "gate":
                kwargs["rule2i_length_gate"] = _enum_value(LengthGate, value, key)
            elif key == "samegen":
                kwargs["same_generator_exponent_edges"] = _enum_value(SameGeneratorEdges, value, key)
            elif key == "support":
                kwargs["support_comparison"] = _enum_value(SupportComparison, value, key)
            else:
                raise ValueError(f"unknown policy key {key!r} (expected one of {_POLICY_FIELDS})")
        return cls(**kwargs)  # type: ignore[arg-type]

    @classmethod
    def all_policies(cls) -> list[InterpretationPolicy]:
        """The full finite policy space, in a fixed order."""
        return [
            cls(zeros, gate, samegen, supp)
            for zeros, gate, samegen, supp in itertools.product(
                (False, True), LengthGate, SameGeneratorEdges, SupportComparison
            )
        ]


def _enum_value(enum_cls, value: str, key: str):
    for member in enum_cls:
        if member.value == value:
            return member
    options = ", ".join(m.value for m in enum_cls)
    raise ValueError(f"{key} must be one of: {options}; got {value!r}")


DEFAULT_POLICY = InterpretationPolicy()


class Rule(Enum):
    IDENTITY = "I"
    DISJOINT_SUPPORT = "II-i"
    SINGLE_GENERATOR = "II-ii"
    NONE = "none"


@dataclass(frozen=True)
class EdgeTrace:
    """One adjacency decision with the rule that produced it."""

    left: Word
    right: Word
    adjacent: bool
    rule: Rule


def support(w: Word) -> frozenset[str]:
    """Distinct generators appearing in a word."""
    return w.support()


def edge_decision(w1: Word, w2: Word, policy: InterpretationPolicy = DEFAULT_POLICY) -> EdgeTrace:
    """Decide adjacency between two distinct canonical words."""
    if w1 == w2:
        raise ValueError("edge decisions require two distinct words")
    if w1.is_empty or w2.is_empty:
        return EdgeTrace(w1, w2, True, Rule.IDENTITY)
    if len(w1) == 1 and len(w2) == 1:
        (g1, e1), (g2, e2) = w1.factors[0], w2.factors[0]
        # On reduced names the 'reduced' and 'raw' exponent readings agree.
        adjacent = g1 != g2 or e1 != e2
        return EdgeTrace(w1, w2, adjacent, Rule.SINGLE_GENERATOR if adjacent else Rule.NONE)
    gate = policy.rule2i_length_gate
    if gate is LengthGate.BOTH and min(len(w1), len(w2)) < 2:
        return EdgeTrace(w1, w2, False, Rule.NONE)
    if gate is LengthGate.AT_LEAST_ONE and max(len(w1), len(w2)) < 2:
        return EdgeTrace(w1, w2, False, Rule.NONE)
    if policy.allow_zero_exponents:
        # Zero-padding puts every generator in every support.
        disjoint = False
    else:
        disjoint = not (w1.support() & w2.support())
    return EdgeTrace(w1, w2, disjoint, Rule.DISJOINT_SUPPORT if disjoint else Rule.NONE)


@dataclass(frozen=True, eq=False)
class GammaGraph:
    """A simple graph on the elements of one realized group."""

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]  # pairs (i, j) with i < j
    labels: tuple[Word, ...]
    policy: InterpretationPolicy

    def adjacent(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbours(self, v: int) -> list[int]:
        out = [u if w == v else w for u, w in self.edges if v in (u, w)]
        return sorted(out)


def build_gamma(r: Realization, policy: InterpretationPolicy = DEFAULT_POLICY) -> GammaGraph:
    """Apply the edge rules to every pair of distinct elements."""
    n = r.group.order
    edges = set()
    for i, j in itertools.combinations(range(n), 2):
        if edge_decision(r.canonical[i], r.canonical[j], policy).adjacent:
            edges.add((i, j))
    return GammaGraph(
        vertices=tuple(range(n)),
        edges=frozenset(edges),
        labels=r.canonical,
        policy=policy,
    )
