"""Term-by-term parser for the closed-form six-variable polynomials.

The polynomials f1..f4, g1..g3, r1..r3 live in ``data/appendix.tex`` as
verbatim LaTeX.  Each is parsed into a list of :class:`Term` objects whose
exponents on ``a``, ``b`` and ``gamma`` are stored as Frobenius weight vectors:
the exponent ``q^3+q+1`` becomes ``(1, 1, 0, 1, 0, 0)``, i.e. the product
``a * a^q * a^{q^3}``.

Known typesetting defects are repaired by :data:`CORRECTIONS` before parsing.
Every entry keeps the verbatim fragment it replaces so that the repair can be
audited (see ``docs/corrections.md``).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

POLY_IDS = ("f1", "f2", "f3", "f4", "g1", "g2", "g3", "r1", "r2", "r3")
# coefficients of the two-variable cubic on the F_{q^2}-slope branch
CUBIC_IDS = ("B", "C", "D", "E", "F")
# constant parts of the two factors in the C = 0 case
FACTOR_IDS = ("h1c", "h2c")
_SOURCES = {**{k: "appendix.tex" for k in POLY_IDS}, **{k: "subfield.tex" for k in CUBIC_IDS + FACTOR_IDS}}

# r1..r3 are exposed as evaluators only; nothing downstream ties them to an
# independent oracle.
UNVERIFIED = frozenset({"r1", "r2", "r3"})


class UnknownPolyId(KeyError):
    pass


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class Correction:
    poly: str
    original: str
    replacement: str
    reason: str


# Each entry must match exactly once in the named polynomial's source.
CORRECTIONS: tuple[Correction, ...] = (
    Correction(
        "f2", r"y_0 y_2 y_3 a^{q^3q^2+1}", r"y_0 y_2 y_3 a^{q^3+q^2+1}",
        "missing '+' between q^3 and q^2; the weight-6 grading and the chain "
        "reconciliation both require the exponent q^3+q^2+1",
    ),
    Correction(
        "f2", r"a^q\gamma^{q^4}\- y_1 y_4 y_5", r"a^q\gamma^{q^4} - y_1 y_4 y_5",
        "stray backslash before a minus sign (a LaTeX discretionary hyphen)",
    ),
    Correction(
        "f2", r"y_0 y_3 a^{q^3+1}b^q", r"y_0 y_3 a^{q^3+1}\gamma^q",
        "the only occurrence of b in the f-block; every other term is written in "
        "gamma, and the reconciliation holds only with gamma^q here",
    ),
    Correction(
        "g3", r"a^q \gamma^{q^4+q^+12}", r"a^q \gamma^{q^4+q^2+1}",
        "unparseable exponent; the pure a^q gamma-terms of g3 come in pairs "
        "gamma^{e+q^3} / -gamma^{e+q^4}, and the partner of +a^q gamma^{q^3+q^2+1} "
        "is -a^q gamma^{q^4+q^2+1}",
    ),
    Correction(
        "B", r"+b^{q^4+q^4+q}", r"+b^{q^5+q^4+q}",
        "repeated q^4; of all 56 exponents q^i+q^j+q^k only q^5+q^4+q makes B "
        "agree with the coefficient interpolated from the Frobenius chain",
    ),
)


@dataclass(frozen=True)
class Term:
    coeff: int
    y: tuple[int, ...]       # exponent of y_0..y_5
    a: tuple[int, ...]       # a^{sum a[k] q^k}
    b: tuple[int, ...]
    g: tuple[int, ...]       # gamma
    index: int               # 0-based position in the source
    source: str              # verbatim fragment

    def weight(self) -> int:
        """Grading with y, a of weight 1 and gamma, b of weight 2."""
        return sum(self.y) + sum(self.a) + 2 * (sum(self.b) + sum(self.g))


@dataclass(frozen=True)
class AppendixPoly:
    ident: str
    terms: tuple[Term, ...]
    corrections: tuple[Correction, ...]

    @property
    def verified(self) -> bool:
        return self.ident not in UNVERIFIED


def raw_sources() -> dict[str, str]:
    out = {}
    for fname in sorted(set(_SOURCES.values())):
        text = resources.files("arcgeom.data").joinpath(fname).read_text()
        for block in text.split("@")[1:]:
            name, _, body = block.partition("\n")
            out[name.strip()] = body.strip()
    return out


def _clean(src: str) -> str:
    src = src.replace("\\displaybreak", " ").replace("\\\\", " ").replace("&", " ")
    src = src.replace("\n", " ")
    return src.rstrip(" ;.")


_EXP_TERM = re.compile(r"^(\d*)(q(?:\^(\d))?)?$")


def parse_exponent(text: str) -> tuple[int, ...]:
    """``'q^3+q+1'`` -> ``(1, 1, 0, 1, 0, 0)``; ``'2q^5'`` -> ``(0,0,0,0,0,2)``."""
    vec = [0] * 6
    for part in text.replace(" ", "").split("+"):
        m = _EXP_TERM.match(part)
        if not part or not m or (not m.group(1) and not m.group(2)):
            raise ParseError(f"bad exponent {text!r}")
        mult = int(m.group(1)) if m.group(1) else 1
        if m.group(2):
            vec[int(m.group(3)) if m.group(3) else 1] += mult
        else:
            vec[0] += mult
    return tuple(vec)


_FACTOR = re.compile(
    r"\s*(?:y_(?P<y>\d)|(?P<sym>a|b|\\gamma|n))"
    r"(?:\s*\^(?:\{(?P<braced>[^{}]*)\}|(?P<bare>[0-9q])))?\s*"
)


def _split_terms(src: str) -> list[tuple[int, str]]:
    terms = []
    depth = 0
    cur = ""
    sign = 1
    for ch in src:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if depth == 0 and ch in "+-":
            if cur.strip():
                terms.append((sign, cur.strip()))
            sign = 1 if ch == "+" else -1
            cur = ""
            continue
        cur += ch
    if cur.strip():
        terms.append((sign, cur.strip()))
    return terms


def parse_terms(src: str) -> list[Term]:
    out = []
    for idx, (sign, body) in enumerate(_split_terms(_clean(src))):
        m = re.match(r"\s*(\d+)\s*", body)
        coeff = sign
        pos = 0
        if m:
            coeff *= int(m.group(1))
            pos = m.end()
        y = [0] * 6
        vecs = {"a": [0] * 6, "b": [0] * 6, "g": [0] * 6}
        while pos < len(body):
            fm = _FACTOR.match(body, pos)
            if not fm or fm.end() == pos:
                raise ParseError(f"cannot parse term {idx}: {body!r} at {body[pos:]!r}")
            pos = fm.end()
            exp_txt = fm.group("braced") if fm.group("braced") is not None else fm.group("bare")
            if fm.group("y") is not None:
                y[int(fm.group("y"))] += int(exp_txt) if exp_txt else 1
                continue
            sym = fm.group("sym")
            if sym == "n":
                raise ParseError(f"stray symbol 'n' in term {idx}: {body!r}")
            key = {"a": "a", "b": "b", "\\gamma": "g"}[sym]
            ev = parse_exponent(exp_txt) if exp_txt else (1, 0, 0, 0, 0, 0)
            for k in range(6):
                vecs[key][k] += ev[k]
        out.append(Term(coeff, tuple(y), tuple(vecs["a"]), tuple(vecs["b"]),
                        tuple(vecs["g"]), idx, body))
    return out


def apply_corrections(ident: str, src: str, table=None) -> tuple[str, tuple[Correction, ...]]:
    table = CORRECTIONS if table is None else table
    used = []
    for c in table:
        if c.poly != ident:
            continue
        n = src.count(c.original)
        if n != 1:
            raise ParseError(f"correction {c.original!r} matches {n} times in {ident}")
        src = src.replace(c.original, c.replacement)
        used.append(c)
    return src, tuple(used)


@lru_cache(maxsize=None)
def load(ident: str, corrected: bool = True) -> AppendixPoly:
    if ident not in _SOURCES:
        raise UnknownPolyId(ident)
    src = raw_sources()[ident]
    used: tuple[Correction, ...] = ()
    if corrected:
        src, used = apply_corrections(ident, src)
    return AppendixPoly(ident, tuple(parse_terms(src)), used)
