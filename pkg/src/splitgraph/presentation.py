"""Presentation DSL, split-extension descriptions, and canonical words.

The DSL (UTF-8 text, whitespace-insensitive):

    group  := "<" gens "|" rels ">"
    gens   := name ("," name)*
    rels   := word ("," word)*
    word   := term+        term := name ("^" integer)?

A split description file has three stanzas, in order:

    K: <presentation>
    A: <presentation>
    action: <a-gen> ":" <k-gen> "->" <word over K gens> (";" more mappings)*

with one ``action:`` line per complement generator; omitted kernel
generators are fixed, and a wholly omitted complement generator acts
trivially.  Blank lines and ``#`` comments are ignored.

Supported presentation shapes are cyclic groups and direct products of
cyclics: every generator needs a power relation, and every generator
pair of a multi-generator presentation needs a commutator relation.
Anything else raises UnsupportedPresentationError.

Each element of the realized group K x| A factors uniquely as a kernel
part times a complement part.  Its canonical word lists the kernel
generators in declaration order, then the complement generators, with
exponents reduced into [1, order-of-generator); the identity gets the
empty word.  This split normal form is the naming scheme used by the
graph modules.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field

from .groups import (
    GenerationError,
    GroupTable,
    InvalidActionError,
    NotAHomomorphismError,
    NotBijectiveError,
    compose_automorphisms,
    complement_embedding,
    automorphism_from_generator_images,
    direct_product,
    element_order,
    identity_automorphism,
    kernel_embedding,
    make_cyclic,
    semidirect_product,
)

__all__ = [
    "ParseError",
    "UnsupportedPresentationError",
    "UnknownGeneratorError",
    "Word",
    "EMPTY_WORD",
    "Presentation",
    "SplitDescription",
    "Realization",
    "GeneratorConditionReport",
    "parse_presentation",
    "parse_split_description",
    "presentation_to_text",
    "realize",
    "canonical_words",
    "evaluate_word",
    "check_generator_condition",
    "generator_condition",
]

DEFAULT_CONDITION_BOUND = 4


class ParseError(ValueError):
    """Syntax or validation error in DSL text, with 1-based position."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class UnsupportedPresentationError(ValueError):
    """Presentation is not a recognized cyclic / direct-product shape."""


class UnknownGeneratorError(KeyError):
    """A word references a generator the realization does not know."""


@dataclass(frozen=True)
class Word:
    """A reduced product of generator powers; the empty word is the identity.

    Factors are (generator name, nonzero exponent) pairs; adjacent
    factors must use distinct generators.
    """

    factors: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for name, exp in self.factors:
            if exp == 0:
                raise ValueError(f"zero exponent on generator {name!r}")
            if name == prev:
                raise ValueError(f"adjacent factors repeat generator {name!r}")
            prev = name

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " ".join(
            name if exp == 1 else f"{name}^{exp}" for name, exp in self.factors
        )

    @property
    def is_empty(self) -> bool:
        return not self.factors

    def support(self) -> frozenset[str]:
        """Distinct generators appearing in the word."""
        return frozenset(name for name, _ in self.factors)

    @classmethod
    def single(cls, name: str, exp: int = 1) -> Word:
        return cls(((name, exp),))


EMPTY_WORD = Word()


@dataclass(frozen=True)
class Presentation:
    """Ordered generators plus relation words that equal the identity."""

    generators: tuple[str, ...]
    relations: tuple[Word, ...]

    def __post_init__(self) -> None:
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be unique")
        declared = set(self.generators)
        for rel in self.relations:
            stray = rel.support() - declared
            if stray:
                raise ValueError(f"relation references undeclared generator {sorted(stray)[0]!r}")


@dataclass(frozen=True, eq=False)
class SplitDescription:
    """Kernel and complement presentations plus the complement's action.

    ``action[c][k]`` is the word over kernel generators to which the
    complement generator c sends the kernel generator k; missing entries
    mean the generator is fixed.
    """

    kernel: Presentation
    complement: Presentation
    action: dict[str, dict[str, Word]]
    label: str = ""

    def __post_init__(self) -> None:
        overlap = set(self.kernel.generators) & set(self.complement.generators)
        if overlap:
            raise ValueError(f"kernel and complement share generator {sorted(overlap)[0]!r}")
        kgens = set(self.kernel.generators)
        for agen, maps in self.action.items():
            if agen not in self.complement.generators:
                raise ValueError(f"action names unknown complement generator {agen!r}")
            for kgen, word in maps.items():
                if kgen not in kgens:
                    raise ValueError(f"action of {agen!r} names unknown kernel generator {kgen!r}")
                stray = word.support() - kgens
                if stray:
                    raise ValueError(
                        f"action word for {agen!r} uses non-kernel generator {sorted(stray)[0]!r}"
                    )


@dataclass(frozen=True, eq=False)
class Realization:
    """A split description realized as a concrete group.

    ``generator_map`` sends each generator name to its element index in
    ``group`` (kernel generators first, in declaration order).
    ``canonical[e]`` is the canonical word of element e.
    """

    description: SplitDescription
    group: GroupTable
    generator_map: dict[str, int]
    canonical: tuple[Word, ...]
    kernel: GroupTable
    complement: GroupTable
    kernel_orders: tuple[int, ...]
    complement_orders: tuple[int, ...]


# ---------------------------------------------------------------------------
# tokenizer / parsers

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT_RE = re.compile(r"-?\d+")
_SINGLE_PUNCT = "<>|,^;:"


@dataclass(frozen=True)
class _Token:
    kind: str  # "name" | "int" | "punct" | "end"
    text: str
    line: int
    column: int


def _tokenize(text: str, line: int = 1, column: int = 1) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch.isspace():
            column += 1
            i += 1
            continue
        if text.startswith("->", i):
            tokens.append(_Token("punct", "->", line, column))
            i += 2
            column += 2
            continue
        m = _INT_RE.match(text, i)
        if m:
            tokens.append(_Token("int", m.group(), line, column))
            column += m.end() - i
            i = m.end()
            continue
        m = _NAME_RE.match(text, i)
        if m:
            tokens.append(_Token("name", m.group(), line, column))
            column += m.end() - i
            i = m.end()
            continue
        if ch in _SINGLE_PUNCT:
            tokens.append(_Token("punct", ch, line, column))
            i += 1
            column += 1
            continue
        raise ParseError(line, column, f"unexpected character {ch!r}")
    tokens.append(_Token("end", "", line, column))
    return tokens


class _TokenStream:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def expect_punct(self, text: str) -> _Token:
        tok = self.peek()
        if tok.kind != "punct" or tok.text != text:
            raise ParseError(tok.line, tok.column, f"expected {text!r}, found {tok.text or 'end of input'!r}")
        return self.next()

    def expect_name(self, what: str = "generator name") -> _Token:
        tok = self.peek()
        if tok.kind != "name":
            raise ParseError(tok.line, tok.column, f"expected {what}, found {tok.text or 'end of input'!r}")
        return self.next()


def _parse_word(stream: _TokenStream, declared: set[str] | None) -> Word:
    factors: list[tuple[str, int]] = []
    prev_name = None
    while stream.peek().kind == "name":
        tok = stream.next()
        name = tok.text
        if declared is not None and name not in declared:
            raise ParseError(tok.line, tok.column, f"unknown generator {name!r}")
        if name == prev_name:
            raise ParseError(tok.line, tok.column, f"adjacent factors repeat generator {name!r}; merge exponents")
        exp = 1
        if stream.peek().kind == "punct" and stream.peek().text == "^":
            stream.next()
            etok = stream.peek()
            if etok.kind != "int":
                raise ParseError(etok.line, etok.column, "expected an integer exponent after '^'")
            stream.next()
            exp = int(etok.text)
            if exp == 0:
                raise ParseError(etok.line, etok.column, "zero exponents are not allowed")
        factors.append((name, exp))
        prev_name = name
    if not factors:
        tok = stream.peek()
        raise ParseError(tok.line, tok.column, "expected a word (at least one generator factor)")
    return Word(tuple(factors))


def _parse_presentation_tokens(stream: _TokenStream) -> Presentation:
    stream.expect_punct("<")
    names: list[str] = []
    seen: set[str] = set()
    while True:
        tok = stream.expect_name()
        if tok.text in seen:
            raise ParseError(tok.line, tok.column, f"duplicate generator {tok.text!r}")
        seen.add(tok.text)
        names.append(tok.text)
        if stream.peek().kind == "punct" and stream.peek().text == ",":
            stream.next()
            continue
        break
    stream.expect_punct("|")
    relations: list[Word] = []
    while True:
        relations.append(_parse_word(stream, seen))
        if stream.peek().kind == "punct" and stream.peek().text == ",":
            stream.next()
            continue
        break
    stream.expect_punct(">")
    return Presentation(tuple(names), tuple(relations))


def parse_presentation(text: str, *, _line: int = 1, _column: int = 1) -> Presentation:
    """Parse one ``< gens | relations >`` presentation."""
    stream = _TokenStream(_tokenize(text, _line, _column))
    pres = _parse_presentation_tokens(stream)
    tail = stream.peek()
    if tail.kind != "end":
        raise ParseError(tail.line, tail.column, f"unexpected trailing input {tail.text!r}")
    return pres


def presentation_to_text(p: Presentation) -> str:
    """Canonical rendering; parsing it back reproduces the presentation."""
    gens = ", ".join(p.generators)
    rels = ", ".join(str(w) for w in p.relations)
    return f"< {gens} | {rels} >"


def _parse_action_line(
    line_no: int, column: int, rest: str, complement: Presentation, kernel: Presentation
) -> tuple[str, dict[str, Word]]:
    stream = _TokenStream(_tokenize(rest, line_no, column))
    agen_tok = stream.expect_name("complement generator")
    if agen_tok.text not in complement.generators:
        raise ParseError(
            agen_tok.line, agen_tok.column, f"unknown complement generator {agen_tok.text!r}"
        )
    stream.expect_punct(":")
    kgens = set(kernel.generators)
    maps: dict[str, Word] = {}
    while True:
        kgen_tok = stream.expect_name("kernel generator")
        if kgen_tok.text not in kgens:
            raise ParseError(kgen_tok.line, kgen_tok.column, f"unknown kernel generator {kgen_tok.text!r}")
        if kgen_tok.text in maps:
            raise ParseError(kgen_tok.line, kgen_tok.column, f"duplicate mapping for {kgen_tok.text!r}")
        stream.expect_punct("->")
        maps[kgen_tok.text] = _parse_word(stream, kgens)
        if stream.peek().kind == "punct" and stream.peek().text == ";":
            stream.next()
            continue
        break
    tail = stream.peek()
    if tail.kind != "end":
        raise ParseError(tail.line, tail.column, f"unexpected trailing input {tail.text!r}")
    return agen_tok.text, maps


def parse_split_description(text: str, label: str = "") -> SplitDescription:
    """Parse a three-stanza split description (K, A, then action lines)."""
    kernel: Presentation | None = None
    complement: Presentation | None = None
    action: dict[str, dict[str, Word]] = {}
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        if stripped.startswith("K:"):
            if kernel is not None:
                raise ParseError(line_no, indent + 1, "duplicate 'K:' stanza")
            kernel = parse_presentation(stripped[2:], _line=line_no, _column=indent + 3)
        elif stripped.startswith("A:"):
            if complement is not None:
                raise ParseError(line_no, indent + 1, "duplicate 'A:' stanza")
            complement = parse_presentation(stripped[2:], _line=line_no, _column=indent + 3)
        elif stripped.startswith("action:"):
            if kernel is None or complement is None:
                raise ParseError(line_no, indent + 1, "'action:' lines must follow the K: and A: stanzas")
            agen, maps = _parse_action_line(
                line_no, indent + 8, stripped[7:], complement, kernel
            )
            if agen in action:
                raise ParseError(line_no, indent + 1, f"duplicate action line for generator {agen!r}")
            action[agen] = maps
        else:
            raise ParseError(line_no, indent + 1, "expected a 'K:', 'A:', or 'action:' stanza")
    if kernel is None:
        raise ParseError(1, 1, "missing 'K:' stanza")
    if complement is None:
        raise ParseError(1, 1, "missing 'A:' stanza")
    return SplitDescription(kernel, complement, action, label=label)


# ---------------------------------------------------------------------------
# realization

def _commuting_pair(w: Word) -> tuple[str, str] | None:
    """The generator pair of a unit-exponent commutator word, else None."""
    if len(w.factors) != 4:
        return None
    (g1, e1), (g2, e2), (g3, e3), (g4, e4) = w.factors
    if g1 == g3 and g2 == g4 and g1 != g2 and abs(e1) == 1 and abs(e2) == 1:
        if e3 == -e1 and e4 == -e2:
            return (g1, g2)
    return None


def _realize_abelian(p: Presentation, role: str) -> tuple[GroupTable, tuple[int, ...], tuple[int, ...]]:
    """Realize a cyclic / direct-product-of-cyclics presentation.

    Returns the table, each generator's element index, and each
    generator's cyclic order.
    """
    power_exps: dict[str, list[int]] = {name: [] for name in p.generators}
    commuting: set[frozenset[str]] = set()
    for rel in p.relations:
        if len(rel.factors) == 1:
            name, exp = rel.factors[0]
            power_exps[name].append(abs(exp))
            continue
        pair = _commuting_pair(rel)
        if pair is not None:
            commuting.add(frozenset(pair))
            continue
        raise UnsupportedPresentationError(
            f"{role} relation '{rel}' is neither a generator power nor a commutator; "
            "only cyclic groups and direct products of cyclics are supported"
        )
    orders = []
    for name in p.generators:
        exps = power_exps[name]
        if not exps:
            raise UnsupportedPresentationError(
                f"{role} generator {name!r} has no power relation, so the group is not finite cyclic-by-parts"
            )
        orders.append(math.gcd(*exps))
    if len(p.generators) > 1:
        for a, b in itertools.combinations(p.generators, 2):
            if frozenset((a, b)) not in commuting:
                raise UnsupportedPresentationError(
                    f"{role} generators {a!r} and {b!r} have no commutator relation; "
                    "only direct products of cyclics are supported"
                )
    table = make_cyclic(orders[0])
    for n in orders[1:]:
        table = direct_product(table, make_cyclic(n))
    strides = []
    acc = 1
    for n in reversed(orders):
        strides.append(acc)
        acc *= n
    strides.reverse()
    gen_elements = tuple(s if n > 1 else table.identity for s, n in zip(strides, orders))
    return table, gen_elements, tuple(orders)


def _decode_exponents(index: int, orders: tuple[int, ...]) -> tuple[int, ...]:
    exps = []
    for n in reversed(orders):
        index, r = divmod(index, n)
        exps.append(r)
    return tuple(reversed(exps))


def _evaluate_in(table: GroupTable, gen_map: dict[str, int], w: Word) -> int:
    acc = table.identity
    for name, exp in w.factors:
        if name not in gen_map:
            raise UnknownGeneratorError(name)
        acc = table.mul(acc, table.power(gen_map[name], exp))
    return acc


def realize(d: SplitDescription) -> Realization:
    """Build the split-extension group and canonical words for a description."""
    k_table, k_gen_elts, k_orders = _realize_abelian(d.kernel, "kernel")
    a_table, a_gen_elts, a_orders = _realize_abelian(d.complement, "complement")
    if k_table.order > 64 or a_table.order > 64:
        raise UnsupportedPresentationError("realized factor groups must have order at most 64")

    k_gen_map = dict(zip(d.kernel.generators, k_gen_elts))
    gen_autos = []
    for agen in d.complement.generators:
        maps = d.action.get(agen, {})
        images = []
        for kgen, kelt in zip(d.kernel.generators, k_gen_elts):
            w = maps.get(kgen)
            images.append(kelt if w is None else _evaluate_in(k_table, k_gen_map, w))
        try:
            gen_autos.append(
                automorphism_from_generator_images(k_table, list(k_gen_elts), images)
            )
        except (NotAHomomorphismError, NotBijectiveError, GenerationError) as exc:
            raise InvalidActionError(f"action of {agen!r} is not an automorphism of the kernel: {exc}") from exc

    action = []
    for a_elt in range(a_table.order):
        phi = identity_automorphism(k_table)
        for auto, e in zip(gen_autos, _decode_exponents(a_elt, a_orders)):
            for _ in range(e):
                phi = compose_automorphisms(phi, auto)
        action.append(phi)

    group = semidirect_product(k_table, a_table, action)
    k_embed = kernel_embedding(k_table, a_table)
    a_embed = complement_embedding(k_table, a_table)
    generator_map = {
        name: k_embed[elt] for name, elt in zip(d.kernel.generators, k_gen_elts)
    }
    generator_map.update(
        {name: a_embed[elt] for name, elt in zip(d.complement.generators, a_gen_elts)}
    )
    canonical = _split_canonical_words(
        d.kernel.generators, k_orders, d.complement.generators, a_orders, a_table.order, group.order
    )
    return Realization(
        description=d,
        group=group,
        generator_map=generator_map,
        canonical=canonical,
        kernel=k_table,
        complement=a_table,
        kernel_orders=k_orders,
        complement_orders=a_orders,
    )


def _split_canonical_words(
    k_gens: tuple[str, ...],
    k_orders: tuple[int, ...],
    a_gens: tuple[str, ...],
    a_orders: tuple[int, ...],
    a_order: int,
    group_order: int,
) -> tuple[Word, ...]:
    words = []
    for e in range(group_order):
        k_idx, a_idx = divmod(e, a_order)
        factors = [
            (name, exp)
            for name, exp in zip(k_gens, _decode_exponents(k_idx, k_orders))
            if exp
        ]
        factors += [
            (name, exp)
            for name, exp in zip(a_gens, _decode_exponents(a_idx, a_orders))
            if exp
        ]
        words.append(Word(tuple(factors)))
    return tuple(words)


def canonical_words(r: Realization) -> dict[int, Word]:
    """Element index -> canonical word, for every element of the group."""
    return {e: r.canonical[e] for e in range(r.group.order)}


def evaluate_word(r: Realization, w: Word) -> int:
    """Left-to-right product of generator images raised to their exponents."""
    return _evaluate_in(r.group, r.generator_map, w)


# ---------------------------------------------------------------------------
# generating-set condition

@dataclass(frozen=True)
class GeneratorConditionReport:
    """Outcome of the redundant-generator search, valid up to max_len."""

    max_len: int
    generators: tuple[str, ...]
    checked: int
    violations: tuple[tuple[str, Word], ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def generator_condition(
    group: GroupTable, generator_map: dict[str, int], max_len: int = DEFAULT_CONDITION_BOUND
) -> GeneratorConditionReport:
    """Search for a generator expressible as an ordered product of the others.

    Candidate words take the other generators in declaration order, each
    at most once, with exponents in [1, order-of-generator), and use at
    least two factors.  Violations are reported with witness words; a
    clean pass only certifies the search space up to max_len factors.
    """
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    names = list(generator_map)
    orders = {name: element_order(group, generator_map[name]) for name in names}
    checked = 0
    violations: list[tuple[str, Word]] = []
    for target_name in names:
        target = generator_map[target_name]
        others = [n for n in names if n != target_name]
        for length in range(2, min(max_len, len(others)) + 1):
            for combo in itertools.combinations(others, length):
                ranges = [range(1, orders[n]) for n in combo]
                for exps in itertools.product(*ranges):
                    word = Word(tuple(zip(combo, exps)))
                    checked += 1
                    if _evaluate_in(group, generator_map, word) == target:
                        violations.append((target_name, word))
    return GeneratorConditionReport(
        max_len=max_len,
        generators=tuple(names),
        checked=checked,
        violations=tuple(violations),
    )


def check_generator_condition(
    r: Realization, max_len: int = DEFAULT_CONDITION_BOUND
) -> GeneratorConditionReport:
    """Run the redundant-generator search on a realization's generating set."""
    return generator_condition(r.group, r.generator_map, max_len)
