"""Symbolic expansion of the nth derivative of exp(f(x)).

The nth derivative factors as e^f times a polynomial in the derivative
symbols f', f'', ...; each monomial corresponds to one partition of n and
its exponent vector is the partition's multiplicity tuple.  ``expand``
builds that polynomial from the closed coefficient formula.

``oracle_expand`` builds the same polynomial without any coefficient
formula: it literally differentiates the term list n times (chain rule
plus product rule) and combines like monomials.  It is deliberately slow
and direct, existing only as ground truth for the fast path.

The e^f prefactor is implicit in the data; renderers print it and the
evaluation module multiplies it back in.
"""

import json
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .coeff import coeff_closed
from .errors import DomainError
from .partition import (
    Mults,
    canonical_mults,
    iter_partitions,
    order,
    partition_count,
)

# Each differentiation pass touches every term; beyond this the oracle
# stops being a convenient ground truth and just burns time.
ORACLE_LIMIT = 12


class Term(NamedTuple):
    coeff: int
    mults: Mults


@dataclass(frozen=True)
class Expansion:
    """Ordered terms of one derivative order, e^f prefactor implied."""

    order: int
    terms: tuple[Term, ...]

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def validate(self) -> None:
        """Raise DomainError unless this is a complete, ordered expansion."""
        if len(self.terms) != partition_count(self.order):
            raise DomainError(
                f"expected {partition_count(self.order)} terms for order "
                f"{self.order}, got {len(self.terms)}"
            )
        prev_key = None
        for coeff, mults in self.terms:
            if coeff < 1:
                raise DomainError(f"coefficient {coeff} is not positive")
            if canonical_mults(mults) != tuple(mults):
                raise DomainError(f"monomial {mults} is not canonical")
            if order(mults) != self.order:
                raise DomainError(
                    f"monomial {mults} has order {order(mults)}, not {self.order}"
                )
            key = _part_list(mults)
            if prev_key is not None and key >= prev_key:
                raise DomainError("terms out of canonical order")
            prev_key = key


def _part_list(mults: Sequence[int]) -> tuple[int, ...]:
    """Weakly decreasing part list of a multiplicity tuple."""
    parts: list[int] = []
    for size in range(len(mults), 0, -1):
        parts.extend((size,) * mults[size - 1])
    return tuple(parts)


def expand(n: int) -> Expansion:
    """Full expansion of order ``n``: one term per partition of n."""
    return Expansion(n, tuple(Term(coeff_closed(k), k) for k in iter_partitions(n)))


def oracle_expand(n: int) -> Expansion:
    """Order-n expansion by n literal differentiation passes.

    Shares no coefficient logic with ``expand``: it only rewrites term
    lists.  One pass maps each term c * prod (f^(i))^{k_i} to the chain
    rule term (multiplicity of f' goes up by one) plus, for every factor
    present, the product rule term (one unit of multiplicity moves from
    part size i to i+1, picking up a factor of k_i).
    """
    if n < 0:
        raise DomainError(f"order must be nonnegative, got {n}")
    if n > ORACLE_LIMIT:
        raise DomainError(f"oracle expansion is limited to order {ORACLE_LIMIT}")
    acc: dict[Mults, int] = {(): 1}
    for _ in range(n):
        nxt: dict[Mults, int] = {}
        for k, c in acc.items():
            bumped = (k[0] + 1,) + k[1:] if k else (1,)
            nxt[bumped] = nxt.get(bumped, 0) + c
            for pos, m in enumerate(k):
                if m:
                    moved = list(k)
                    moved[pos] -= 1
                    if pos + 1 < len(moved):
                        moved[pos + 1] += 1
                    else:
                        moved.append(1)
                    key = tuple(moved)
                    nxt[key] = nxt.get(key, 0) + c * m
        acc = nxt
    ordered = sorted(acc.items(), key=lambda item: _part_list(item[0]), reverse=True)
    return Expansion(n, tuple(Term(c, k) for k, c in ordered))


def _text_term(coeff: int, mults: Mults) -> str:
    factors = []
    for i, m in enumerate(mults, start=1):
        if m == 1:
            factors.append(f"f{i}")
        elif m > 1:
            factors.append(f"f{i}^{m}")
    if not factors:
        return str(coeff)
    if coeff != 1:
        factors.insert(0, str(coeff))
    return " ".join(factors)


def _latex_symbol(i: int) -> str:
    return "f" + "'" * i if i <= 3 else f"f^{{({i})}}"


def _latex_term(coeff: int, mults: Mults) -> str:
    factors = []
    for i, m in enumerate(mults, start=1):
        if m == 1:
            factors.append(_latex_symbol(i))
        elif m > 1:
            factors.append(f"({_latex_symbol(i)})^{{{m}}}")
    if not factors:
        return str(coeff)
    if coeff != 1:
        factors.insert(0, str(coeff))
    return " ".join(factors)


def render(expansion: Expansion, fmt: str = "text") -> str:
    """Deterministic text, LaTeX, or JSON form of an expansion.

    Unit coefficients are elided in text and LaTeX but kept in JSON,
    where they are decimal strings so arbitrary precision survives the
    round trip.
    """
    if fmt == "text":
        body = " + ".join(_text_term(c, k) for c, k in expansion.terms)
        return f"e^f * ({body})"
    if fmt == "latex":
        body = " + ".join(_latex_term(c, k) for c, k in expansion.terms)
        return f"e^{{f(x)}}\\left( {body} \\right)"
    if fmt == "json":
        payload = {
            "order": expansion.order,
            "terms": [
                {"coeff": str(c), "mult": list(k)} for c, k in expansion.terms
            ],
        }
        return json.dumps(payload, separators=(",", ":"))
    raise ValueError(f"unknown format {fmt!r}")


def expansion_from_json(text: str) -> Expansion:
    """Parse the JSON rendering back into a validated Expansion."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid expansion JSON: {exc}") from None
    if not isinstance(payload, dict) or set(payload) != {"order", "terms"}:
        raise DomainError("expansion JSON must have exactly 'order' and 'terms'")
    n = payload["order"]
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"bad expansion order {n!r}")
    terms = []
    for entry in payload["terms"]:
        if not isinstance(entry, dict) or set(entry) != {"coeff", "mult"}:
            raise DomainError(f"bad term entry {entry!r}")
        coeff, mult = entry["coeff"], entry["mult"]
        if not isinstance(coeff, str) or not coeff.isdigit():
            raise DomainError(f"coefficient must be a decimal string, got {coeff!r}")
        if not isinstance(mult, list):
            raise DomainError(f"mult must be a list, got {mult!r}")
        k = canonical_mults(mult)
        if len(k) != len(mult):
            raise DomainError(f"mult {mult!r} has trailing zeros")
        terms.append(Term(int(coeff), k))
    expansion = Expansion(n, tuple(terms))
    expansion.validate()
    return expansion
