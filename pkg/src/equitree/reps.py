"""Virtual orthogonal representations of odd cyclic groups.

A :class:`VirtualRep` over ``C_m`` is ``t + sum_k n_k * l^k`` where ``t`` counts
real trivial summands and ``l^k`` is the realified rotation character on which
the generator acts by ``exp(2 pi i k / m)``.  ``l^0`` is folded into the
trivial part as two real dimensions.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True, order=True)
class VirtualRep:
    order: int
    trivial: int = 0
    chars: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"order must be positive, got {self.order}")
        folded: dict[int, int] = {}
        triv = self.trivial
        for k, n in self.chars:
            k %= self.order
            if k == 0:
                triv += 2 * n
            else:
                folded[k] = folded.get(k, 0) + n
        object.__setattr__(self, "trivial", triv)
        object.__setattr__(
            self, "chars", tuple(sorted((k, n) for k, n in folded.items() if n))
        )

    @classmethod
    def make(cls, order: int, trivial: int = 0,
             chars: Mapping[int, int] | Iterable[tuple[int, int]] = ()) -> "VirtualRep":
        items = chars.items() if isinstance(chars, Mapping) else chars
        return cls(order, trivial, tuple(items))

    @classmethod
    def lam(cls, order: int, *exponents: int) -> "VirtualRep":
        """Sum of ``l^k`` over the given exponents (repeats allowed)."""
        return cls(order, 0, tuple((k, 1) for k in exponents))

    @classmethod
    def zero(cls, order: int) -> "VirtualRep":
        return cls(order)

    @property
    def char_map(self) -> dict[int, int]:
        return dict(self.chars)

    def _check(self, other: "VirtualRep"):
        if not isinstance(other, VirtualRep):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        return None

    def __add__(self, other):
        if isinstance(other, int):
            return VirtualRep(self.order, self.trivial + other, self.chars)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return VirtualRep(self.order, self.trivial + other.trivial, self.chars + other.chars)

    __radd__ = __add__

    def __neg__(self):
        return VirtualRep(self.order, -self.trivial, tuple((k, -n) for k, n in self.chars))

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, c: int):
        if not isinstance(c, int):
            return NotImplemented
        return VirtualRep(self.order, c * self.trivial, tuple((k, c * n) for k, n in self.chars))

    __rmul__ = __mul__

    def is_actual(self) -> bool:
        """True when every multiplicity (trivial part included) is nonnegative."""
        return self.trivial >= 0 and all(n > 0 for _, n in self.chars)

    def restrict(self, d: int) -> "VirtualRep":
        """Restrict to the subgroup ``C_d``; exponents are read mod ``d``."""
        if self.order % d:
            raise ValueError(f"{d} does not divide {self.order}")
        return VirtualRep(d, self.trivial, self.chars)

    def __str__(self) -> str:
        return format_rep(self)


def dim(alpha: VirtualRep) -> int:
    return alpha.trivial + 2 * sum(n for _, n in alpha.chars)


def fixed_dim(alpha: VirtualRep, d: int) -> int:
    """Dimension of the ``C_d``-fixed part; ``l^k`` is ``C_d``-fixed iff ``d | k``."""
    if d < 1 or alpha.order % d:
        raise ValueError(f"{d} is not a divisor of {alpha.order}")
    return alpha.trivial + 2 * sum(n for k, n in alpha.chars if k % d == 0)


def hz_canonical(alpha: VirtualRep) -> VirtualRep:
    """Replace each exponent ``k`` by ``gcd(k, m)``.

    Two exponents with the same gcd against ``m`` differ by a unit of
    ``Z/m``, and smashing with ``HZ`` cannot tell such spheres apart.
    """
    m = alpha.order
    return VirtualRep(m, alpha.trivial, tuple((math.gcd(k, m), n) for k, n in alpha.chars))


def format_rep(alpha: VirtualRep) -> str:
    """Canonical text: characters by increasing exponent, then the trivial part."""
    parts: list[str] = []
    for k, n in alpha.chars:
        term = f"l^{k}" if abs(n) == 1 else f"{abs(n)}*l^{k}"
        parts.append(("-" if n < 0 else "+") + term)
    if alpha.trivial or not parts:
        parts.append(("-" if alpha.trivial < 0 else "+") + str(abs(alpha.trivial)))
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


class RepSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<op>[+\-*^])|(?P<l>l))")


def parse_rep(text: str, order: int) -> VirtualRep:
    """Parse ``l^1 + l^2 - 3*l^14 - 1`` style expressions.

    Terms are ``[n*]l^k`` or a bare integer; whitespace is ignored.  Errors
    carry the byte offset of the offending token.
    """
    raw = text.encode()
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if not mt:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise RepSyntaxError(f"unexpected character {text[start]!r}",
                                 len(text[:start].encode()))
        kind = mt.lastgroup
        start = mt.start(kind)
        tokens.append((kind, mt.group(kind), len(text[:start].encode())))
        pos = mt.end()
    end = len(raw)

    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else ("eof", "", end)

    trivial = 0
    chars: list[tuple[int, int]] = []
    first = True
    while True:
        kind, val, off = peek()
        sign = 1
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            if kind == "eof":
                break
            raise RepSyntaxError(f"expected '+' or '-', got {val!r}", off)
        elif kind == "eof":
            raise RepSyntaxError("empty expression", off)
        first = False

        kind, val, off = peek()
        coeff = None
        if kind == "int":
            coeff = int(val)
            i += 1
            kind, val, off = peek()
            if kind == "op" and val == "*":
                i += 1
                kind, val, off = peek()
            else:
                trivial += sign * coeff
                continue
        if kind != "l":
            raise RepSyntaxError(f"expected 'l' or integer, got {val or 'end of input'!r}", off)
        i += 1
        kind, val, off = peek()
        if not (kind == "op" and val == "^"):
            raise RepSyntaxError("expected '^' after 'l'", off)
        i += 1
        kind, val, off = peek()
        if kind != "int":
            raise RepSyntaxError("expected exponent", off)
        i += 1
        chars.append((int(val), sign * (1 if coeff is None else coeff)))
    return VirtualRep(order, trivial, tuple(chars))
