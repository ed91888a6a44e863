"""Finite 2-group engine over polycyclic presentations.

Groups are given by a triangular power/conjugation presentation in which
every relative order is 2, so a group on n generators has order 2^n and
every element has a unique normal form g1^e1 ... gn^en with ei in {0,1}.

Elements are handled as canonical indices: the integer whose binary digits
are the exponent vector, g1 most significant.  The identity is 0 and the
integer order on indices is the lexicographic order on exponent vectors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import reduce


class PcError(Exception):
    """Base class for presentation loading failures."""


class ParseError(PcError):
    """Malformed presentation source."""


class ConstraintError(PcError):
    """A relation word violates the triangular index constraints."""


class ConsistencyError(PcError):
    """Collection over the presentation does not realize a group of order 2^n."""


# Materialize the full multiplication table up to this order; collection
# remains the ground truth and the table is checked against it at build time.
CAYLEY_LIMIT = 512

WORD_SEP = "·"  # interpunct, used when printing element words


@dataclass(frozen=True)
class PcPresentation:
    """Power/conjugation data for a 2-group on n generators.

    Words are tuples of 1-based generator indices.  Missing power entries
    mean gi^2 = 1; missing conjugation entries mean the pair commutes.
    """

    name: str
    gens: tuple[str, ...]
    powers: dict[int, tuple[int, ...]] = field(default_factory=dict)
    conjugations: dict[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.gens)

    def validate(self) -> None:
        n = self.n
        if n < 1:
            raise ParseError(f"{self.name}: no generators declared")
        if len(set(self.gens)) != n:
            raise ParseError(f"{self.name}: duplicate generator names")
        for i, word in self.powers.items():
            if not 1 <= i <= n:
                raise ConstraintError(f"{self.name}: pow index {i} out of range")
            if any(not i < j <= n for j in word):
                raise ConstraintError(
                    f"{self.name}: power word of g{i} must use indices > {i}"
                )
        for (i, j), word in self.conjugations.items():
            if not (1 <= i < j <= n):
                raise ConstraintError(
                    f"{self.name}: conjugation pair ({i},{j}) requires i < j"
                )
            if not word or word[0] != j:
                raise ConstraintError(
                    f"{self.name}: conjugation word for ({i},{j}) must begin with g{j}"
                )
            # tail indices only need to exceed the conjugating index i:
            # collection moving gi past gj then only emits letters > i,
            # which is what termination needs
            if any(not k > i for k in word[1:]):
                raise ConstraintError(
                    f"{self.name}: conjugation word tail for ({i},{j}) must use indices > {i}"
                )


def parse_presentation(text: str, name_hint: str = "<input>") -> PcPresentation:
    """Parse the line-oriented presentation format.

    Syntax (UTF-8, '#' starts a comment):
        group <name>
        gens <g1> <g2> ... <gN>
        pow <gi> = <word>
        conj <gj> <gi> = <word>
    where <word> is a space-separated list of generator names, or "1".
    """
    name = None
    gens: list[str] = []
    gen_index: dict[str, int] = {}
    powers: dict[int, tuple[int, ...]] = {}
    conjugations: dict[tuple[int, int], tuple[int, ...]] = {}

    def parse_word(tokens: list[str], where: str) -> tuple[int, ...]:
        if tokens == ["1"]:
            return ()
        out = []
        for tok in tokens:
            if tok not in gen_index:
                raise ParseError(f"{name_hint}:{where}: unknown generator {tok!r}")
            out.append(gen_index[tok])
        return tuple(out)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"line {lineno}"
        parts = line.split()
        kw = parts[0]
        if kw == "group":
            if name is not None:
                raise ParseError(f"{name_hint}:{where}: duplicate group line")
            if len(parts) != 2:
                raise ParseError(f"{name_hint}:{where}: expected 'group <name>'")
            name = parts[1]
        elif kw == "gens":
            if gens:
                raise ParseError(f"{name_hint}:{where}: duplicate gens line")
            if len(parts) < 2:
                raise ParseError(f"{name_hint}:{where}: expected generator names")
            gens = parts[1:]
            if len(set(gens)) != len(gens):
                raise ParseError(f"{name_hint}:{where}: duplicate generator names")
            gen_index = {g: i for i, g in enumerate(gens, start=1)}
        elif kw == "pow":
            if not gens:
                raise ParseError(f"{name_hint}:{where}: pow before gens")
            m = re.match(r"pow\s+(\S+)\s*=\s*(.*)$", line)
            if not m:
                raise ParseError(f"{name_hint}:{where}: expected 'pow <g> = <word>'")
            g, rhs = m.group(1), m.group(2).split()
            if g not in gen_index:
                raise ParseError(f"{name_hint}:{where}: unknown generator {g!r}")
            i = gen_index[g]
            if i in powers:
                raise ParseError(f"{name_hint}:{where}: duplicate pow for {g}")
            if not rhs:
                raise ParseError(f"{name_hint}:{where}: empty right-hand side")
            powers[i] = parse_word(rhs, where)
        elif kw == "conj":
            if not gens:
                raise ParseError(f"{name_hint}:{where}: conj before gens")
            m = re.match(r"conj\s+(\S+)\s+(\S+)\s*=\s*(.*)$", line)
            if not m:
                raise ParseError(f"{name_hint}:{where}: expected 'conj <gj> <gi> = <word>'")
            gj, gi, rhs = m.group(1), m.group(2), m.group(3).split()
            for g in (gj, gi):
                if g not in gen_index:
                    raise ParseError(f"{name_hint}:{where}: unknown generator {g!r}")
            j, i = gen_index[gj], gen_index[gi]
            if not i < j:
                raise ConstraintError(
                    f"{name_hint}:{where}: conj {gj} {gi} requires {gi} before {gj} in gens order"
                )
            if (i, j) in conjugations:
                raise ParseError(f"{name_hint}:{where}: duplicate conj for ({gj},{gi})")
            if not rhs:
                raise ParseError(f"{name_hint}:{where}: empty right-hand side")
            conjugations[(i, j)] = parse_word(rhs, where)
        else:
            raise ParseError(f"{name_hint}:{where}: unknown keyword {kw!r}")

    if not gens:
        raise ParseError(f"{name_hint}: missing gens line")
    if name is None:
        raise ParseError(f"{name_hint}: missing group line")

    pres = PcPresentation(name=name, gens=tuple(gens), powers=powers,
                          conjugations=conjugations)
    pres.validate()
    return pres


def serialize_presentation(pres: PcPresentation) -> str:
    """Inverse of parse_presentation, up to comments and whitespace."""
    lines = [f"group {pres.name}", "gens " + " ".join(pres.gens)]

    def word_str(word: tuple[int, ...]) -> str:
        return " ".join(pres.gens[i - 1] for i in word) if word else "1"

    for i in sorted(pres.powers):
        lines.append(f"pow {pres.gens[i - 1]} = {word_str(pres.powers[i])}")
    for (i, j) in sorted(pres.conjugations):
        lines.append(
            f"conj {pres.gens[j - 1]} {pres.gens[i - 1]} = "
            f"{word_str(pres.conjugations[(i, j)])}"
        )
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as a sorted tuple of element indices plus its generators."""

    elements: tuple[int, ...]
    gens: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in set(self.elements)


class FiniteGroup:
    """A finite 2-group realized by collection over a pc presentation.

    Immutable after construction; all operations are pure.  For orders up
    to CAYLEY_LIMIT the full multiplication table is materialized and every
    entry comes from collection, so table and collection agree by build.
    """

    def __init__(self, pres: PcPresentation):
        pres.validate()
        self.pres = pres
        self.name = pres.name
        self.n = pres.n
        self.order = 1 << pres.n
        self._elem_set = None
        self.cayley: list[list[int]] | None = None
        if self.order <= CAYLEY_LIMIT:
            self.cayley = self._build_cayley_checked()
        else:
            self._spot_check()
        self._inverse = [self._inverse_by_order(x) for x in range(self.order)]

    # --- collection ---------------------------------------------------

    def _times_gen(self, x: int, j: int) -> int:
        """Normal form of x * gj, by collection from the left."""
        n = self.n
        pos = n - j
        low = x & ((1 << pos) - 1)
        high = x >> pos << pos
        word: list[int] = []
        if (high >> pos) & 1:
            new = high ^ (1 << pos)
            word.extend(self.pres.powers.get(j, ()))
        else:
            new = high | (1 << pos)
        for k in range(j + 1, n + 1):
            if (low >> (n - k)) & 1:
                word.extend(self.pres.conjugations.get((j, k), (k,)))
        for g in word:
            new = self._times_gen(new, g)
        return new

    def word_of_index(self, x: int) -> tuple[int, ...]:
        """Generator indices of the normal form of x, in increasing order."""
        n = self.n
        return tuple(i for i in range(1, n + 1) if (x >> (n - i)) & 1)

    def _collect(self, x: int, y: int) -> int:
        for j in self.word_of_index(y):
            x = self._times_gen(x, j)
        return x

    # --- construction checks -------------------------------------------

    def _build_cayley_checked(self) -> list[list[int]]:
        order, n = self.order, self.n
        table = []
        for x in range(order):
            row = [0] * order
            row[0] = x
            for y in range(1, order):
                j = n - (y & -y).bit_length() + 1
                row[y] = self._times_gen(row[y & (y - 1)], j)
            table.append(row)
        full = set(range(order))
        for x in range(order):
            if set(table[x]) != full:
                raise ConsistencyError(
                    f"{self.name}: left translation by element {x} is not a bijection"
                )
        for y in range(order):
            if {table[x][y] for x in range(order)} != full:
                raise ConsistencyError(
                    f"{self.name}: right translation by element {y} is not a bijection"
                )
        # associativity on (x, y, generator) triples implies it everywhere
        gens = [1 << (n - j) for j in range(1, n + 1)]
        for x in range(order):
            row_x = table[x]
            for y in range(order):
                t = table[row_x[y]]
                row_y = table[y]
                for g in gens:
                    if t[g] != row_x[row_y[g]]:
                        raise ConsistencyError(
                            f"{self.name}: associativity fails on "
                            f"({x}, {y}, generator index {g})"
                        )
        return table

    def _spot_check(self) -> None:
        # beyond the table limit, only sanity-check generator involutions
        for j in range(1, self.n + 1):
            g = 1 << (self.n - j)
            sq = self._collect(g, g)
            if sq == g:
                raise ConsistencyError(f"{self.name}: g{j}^2 = g{j}")

    # --- core operations ------------------------------------------------

    @property
    def identity(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.order)

    def multiply(self, x: int, y: int) -> int:
        if self.cayley is not None:
            return self.cayley[x][y]
        return self._collect(x, y)

    def _inverse_by_order(self, x: int) -> int:
        acc, p = 0, x
        m = self.element_order(x)
        for _ in range(m - 1):
            acc = self.multiply(acc, x)
        return acc

    def inverse(self, x: int) -> int:
        return self._inverse[x]

    def conjugate(self, x: int, g: int) -> int:
        """g^-1 x g."""
        return self.multiply(self.multiply(self.inverse(g), x), g)

    def commutator(self, x: int, y: int) -> int:
        """(x, y) = x^-1 y^-1 x y."""
        xy = self.multiply(x, y)
        yx = self.multiply(y, x)
        return self.multiply(self.inverse(yx), xy)

    def power(self, x: int, m: int) -> int:
        acc = 0
        base = x
        m %= 1 << self.n  # exponent only matters mod the group exponent
        while m:
            if m & 1:
                acc = self.multiply(acc, base)
            base = self.multiply(base, base)
            m >>= 1
        return acc

    def element_order(self, x: int) -> int:
        order = 1
        while x != 0:
            x = self.multiply(x, x)
            order <<= 1
        return order

    # --- subgroups -------------------------------------------------------

    def subgroup_closure(self, gens) -> Subgroup:
        gens = tuple(gens)
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.multiply(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return Subgroup(elements=tuple(sorted(seen)), gens=gens)

    def derived_subgroup(self) -> Subgroup:
        gens = [1 << (self.n - j) for j in range(1, self.n + 1)]
        comms = sorted({self.commutator(x, y) for x in gens for y in gens} - {0})
        return self.subgroup_closure(comms)

    def center(self) -> Subgroup:
        gens = [1 << (self.n - j) for j in range(1, self.n + 1)]
        central = [x for x in self.elements()
                   if all(self.multiply(x, g) == self.multiply(g, x) for g in gens)]
        return Subgroup(elements=tuple(central), gens=tuple(central))

    def is_abelian(self) -> bool:
        gens = [1 << (self.n - j) for j in range(1, self.n + 1)]
        return all(self.multiply(x, y) == self.multiply(y, x)
                   for x in gens for y in gens)

    def is_cyclic(self, sub: Subgroup) -> tuple[bool, int | None]:
        """Whether the subgroup is cyclic, with a generator witness."""
        target = sub.order
        for x in sub.elements:
            if self.element_order(x) == target:
                return True, x
        return False, None

    # --- names and words ---------------------------------------------------

    def word_str(self, x: int) -> str:
        if x == 0:
            return "1"
        return WORD_SEP.join(self.pres.gens[i - 1] for i in self.word_of_index(x))

    def parse_word(self, text: str) -> int:
        """Element from a word like "b*c" or "b·c"; "1" is the identity."""
        text = text.strip()
        if text == "1":
            return 0
        names = {g: i for i, g in enumerate(self.pres.gens, start=1)}
        acc = 0
        for tok in re.split(r"[\s*·]+", text):
            if not tok:
                continue
            if tok not in names:
                raise ParseError(f"unknown generator {tok!r} in word {text!r}")
            acc = self._times_gen(acc, names[tok])
        return acc


def load(text: str, name_hint: str = "<input>") -> FiniteGroup:
    """Parse, validate, and realize a presentation; raises PcError subclasses."""
    return FiniteGroup(parse_presentation(text, name_hint))


def load_file(path) -> FiniteGroup:
    from pathlib import Path

    p = Path(path)
    return load(p.read_text(encoding="utf-8"), name_hint=str(p))


def reduce_word(group: FiniteGroup, indices) -> int:
    """Normal form of an arbitrary word given as generator indices."""
    return reduce(group._times_gen, indices, 0)
