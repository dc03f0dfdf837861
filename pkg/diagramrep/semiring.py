"""Exact commutative semirings used as matrix coefficients.

Elements are plain Python values (ints, Fractions, or `NEG_INF`); a semiring
instance carries the arithmetic and the structural flags that decide which
representation theorems apply.
"""

import itertools
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Any, Iterable, List, Union

Characteristic = Union[int, str]
IDEMPOTENT = "idempotent"


class _NegativeInfinity:
    """The tropical zero; smaller than every natural number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "-inf"

    def __lt__(self, other: Any) -> bool:
        return other is not self

    def __gt__(self, other: Any) -> bool:
        return False

    def __reduce__(self) -> str:
        return "NEG_INF"


NEG_INF = _NegativeInfinity()


class Semiring:
    name: str = ""
    is_idempotent: bool = False
    characteristic: Characteristic = 0
    supports_negation: bool = False
    zero: Any = 0
    one: Any = 1

    def add(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def mul(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def neg(self, x: Any) -> Any:
        raise ValueError(f"{self.name} has no additive inverses")

    def sum(self, xs: Iterable[Any]) -> Any:
        return reduce(self.add, xs, self.zero)

    def product(self, xs: Iterable[Any]) -> Any:
        return reduce(self.mul, xs, self.one)

    def embed_natural(self, k: int) -> Any:
        """The k-fold sum 1 + ... + 1, by doubling."""
        if k < 0:
            raise ValueError(f"Cannot embed negative integer {k}")
        out, step = self.zero, self.one
        while k:
            if k & 1:
                out = self.add(out, step)
            step = self.add(step, step)
            k >>= 1
        return out

    def coerce(self, value: Any) -> Any:
        """Accept an int/Fraction and return the element it denotes."""
        raise NotImplementedError

    def sample(self, rng: random.Random) -> Any:
        raise NotImplementedError

    def elements(self) -> List[Any]:
        """All elements, for finite semirings; empty otherwise."""
        return []

    def to_json(self, x: Any) -> Any:
        return x

    def from_json(self, value: Any) -> Any:
        return self.coerce(value)

    def format(self, x: Any) -> str:
        return str(x)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, eq=True)
class BooleanSemiring(Semiring):
    name: str = "boolean"
    is_idempotent: bool = True
    characteristic: Characteristic = IDEMPOTENT

    def add(self, x: int, y: int) -> int:
        return x | y

    def mul(self, x: int, y: int) -> int:
        return x & y

    def embed_natural(self, k: int) -> int:
        return 1 if k > 0 else 0

    def coerce(self, value: Any) -> int:
        if value in (0, 1, True, False):
            return int(value)
        raise ValueError(f"Not a Boolean value: {value!r}")

    def sample(self, rng: random.Random) -> int:
        return rng.randint(0, 1)

    def elements(self) -> List[int]:
        return [0, 1]


@dataclass(frozen=True, eq=True)
class NaturalSemiring(Semiring):
    name: str = "nat"

    def add(self, x: int, y: int) -> int:
        return x + y

    def mul(self, x: int, y: int) -> int:
        return x * y

    def embed_natural(self, k: int) -> int:
        return k

    def coerce(self, value: Any) -> int:
        if isinstance(value, Fraction) and value.denominator == 1:
            value = value.numerator
        if isinstance(value, int) and value >= 0:
            return int(value)
        raise ValueError(f"Not a natural number: {value!r}")

    def sample(self, rng: random.Random) -> int:
        return rng.randint(0, 50)


@dataclass(frozen=True, eq=True)
class IntegerRing(Semiring):
    name: str = "int"
    supports_negation: bool = True

    def add(self, x: int, y: int) -> int:
        return x + y

    def mul(self, x: int, y: int) -> int:
        return x * y

    def neg(self, x: int) -> int:
        return -x

    def embed_natural(self, k: int) -> int:
        return k

    def coerce(self, value: Any) -> int:
        if isinstance(value, Fraction) and value.denominator == 1:
            value = value.numerator
        if isinstance(value, int):
            return int(value)
        raise ValueError(f"Not an integer: {value!r}")

    def sample(self, rng: random.Random) -> int:
        return rng.randint(-50, 50)


@dataclass(frozen=True, eq=True)
class RationalField(Semiring):
    name: str = "rational"
    supports_negation: bool = True
    zero: Any = field(default=Fraction(0))
    one: Any = field(default=Fraction(1))

    def add(self, x: Fraction, y: Fraction) -> Fraction:
        return x + y

    def mul(self, x: Fraction, y: Fraction) -> Fraction:
        return x * y

    def neg(self, x: Fraction) -> Fraction:
        return -x

    def embed_natural(self, k: int) -> Fraction:
        return Fraction(k)

    def coerce(self, value: Any) -> Fraction:
        try:
            return Fraction(value)
        except (TypeError, ValueError) as e:
            raise ValueError(f"Not a rational number: {value!r}") from e

    def sample(self, rng: random.Random) -> Fraction:
        return Fraction(rng.randint(-20, 20), rng.randint(1, 12))

    def to_json(self, x: Fraction) -> Any:
        return x.numerator if x.denominator == 1 else str(x)


@dataclass(frozen=True, eq=True)
class IntegerModRing(Semiring):
    """Z/2^k Z, the coefficient rings of the d-truncated twisted categories (2^k = 2^(d+1))."""

    modulus: int = 4
    supports_negation: bool = True

    def __post_init__(self):
        if self.modulus < 2 or self.modulus & (self.modulus - 1):
            raise ValueError(f"Modulus must be a power of two >= 2, got {self.modulus}")

    @property
    def name(self) -> str:
        return f"mod:{self.modulus}"

    @property
    def characteristic(self) -> int:
        return self.modulus

    @property
    def truncation_depth(self) -> int:
        """The d with modulus 2^(d+1)."""
        return self.modulus.bit_length() - 2

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.modulus

    def mul(self, x: int, y: int) -> int:
        return (x * y) % self.modulus

    def neg(self, x: int) -> int:
        return (-x) % self.modulus

    def embed_natural(self, k: int) -> int:
        return k % self.modulus

    def coerce(self, value: Any) -> int:
        if isinstance(value, Fraction) and value.denominator == 1:
            value = value.numerator
        if isinstance(value, int):
            return int(value) % self.modulus
        raise ValueError(f"Not an integer: {value!r}")

    def sample(self, rng: random.Random) -> int:
        return rng.randrange(self.modulus)

    def elements(self) -> List[int]:
        return list(range(self.modulus)) if self.modulus <= 16 else []


@dataclass(frozen=True, eq=True)
class TropicalSemiring(Semiring):
    """Max-plus over the naturals: zero is NEG_INF and one is 0."""

    name: str = "tropical"
    is_idempotent: bool = True
    characteristic: Characteristic = IDEMPOTENT
    zero: Any = field(default=NEG_INF)
    one: Any = 0

    def add(self, x: Any, y: Any) -> Any:
        if x is NEG_INF:
            return y
        if y is NEG_INF:
            return x
        return max(x, y)

    def mul(self, x: Any, y: Any) -> Any:
        if x is NEG_INF or y is NEG_INF:
            return NEG_INF
        return x + y

    def embed_natural(self, k: int) -> Any:
        return 0 if k > 0 else NEG_INF

    def coerce(self, value: Any) -> Any:
        if value is NEG_INF or value in ("-inf", None):
            return NEG_INF
        if isinstance(value, int) and value >= 0:
            return int(value)
        raise ValueError(f"Not a tropical value: {value!r}")

    def sample(self, rng: random.Random) -> Any:
        return NEG_INF if rng.random() < 0.2 else rng.randint(0, 20)

    def to_json(self, x: Any) -> Any:
        return None if x is NEG_INF else x

    def format(self, x: Any) -> str:
        return "-inf" if x is NEG_INF else str(x)


BOOLEAN = BooleanSemiring()
NATURAL = NaturalSemiring()
INTEGER = IntegerRing()
RATIONAL = RationalField()
TROPICAL = TropicalSemiring()

SELECTORS = ("boolean", "nat", "int", "rational", "tropical", "mod:2^k")

_MOD_PATTERN = re.compile(r"^mod:(?:2\^(\d+)|(\d+))$")


def integer_mod(modulus: int) -> IntegerModRing:
    return IntegerModRing(modulus=modulus)


def get_semiring(selector: str) -> Semiring:
    """Resolve a selector such as `boolean`, `tropical`, `mod:2^3` or `mod:8`."""
    key = selector.strip().lower()
    fixed = {
        "boolean": BOOLEAN,
        "bool": BOOLEAN,
        "nat": NATURAL,
        "natural": NATURAL,
        "int": INTEGER,
        "integer": INTEGER,
        "rational": RATIONAL,
        "tropical": TROPICAL,
    }
    if key in fixed:
        return fixed[key]
    match = _MOD_PATTERN.match(key)
    if match:
        modulus = 2 ** int(match.group(1)) if match.group(1) else int(match.group(2))
        return integer_mod(modulus)
    raise ValueError(
        f"Unknown semiring '{selector}'. Choose one of: {', '.join(SELECTORS)}"
    )


def embed_natural(k: int, semiring: Semiring) -> Any:
    return semiring.embed_natural(k)


@dataclass
class LawReport:
    semiring: str
    cases: int = 0
    violations: List[str] = field(default_factory=list)
    idempotent_confirmed: bool = False
    characteristic_confirmed: bool = False

    @property
    def passed(self) -> bool:
        return not self.violations


def semiring_laws_check(semiring: Semiring, samples: int = 100, seed: int = 0) -> LawReport:
    """Check the semiring axioms and the declared flags on sampled triples.

    Finite semirings are checked exhaustively; the others on `samples`
    random triples (with zero and one always included).
    """
    S = semiring
    report = LawReport(semiring=S.name)
    rng = random.Random(seed)
    finite = S.elements()
    if finite:
        triples = itertools.product(finite, repeat=3)
    else:
        pool = [S.zero, S.one] + [S.sample(rng) for _ in range(8)]
        specials = list(itertools.product([S.zero, S.one], repeat=3))
        triples = itertools.chain(
            specials,
            ((S.sample(rng), S.sample(rng), rng.choice(pool)) for _ in range(samples)),
        )

    def fail(law: str, *values: Any) -> None:
        if len(report.violations) < 20:
            report.violations.append(f"{law} fails at {', '.join(S.format(v) for v in values)}")

    for a, b, c in triples:
        report.cases += 1
        add, mul = S.add, S.mul
        if add(add(a, b), c) != add(a, add(b, c)):
            fail("additive associativity", a, b, c)
        if add(a, b) != add(b, a):
            fail("additive commutativity", a, b)
        if add(S.zero, a) != a:
            fail("additive identity", a)
        if mul(mul(a, b), c) != mul(a, mul(b, c)):
            fail("multiplicative associativity", a, b, c)
        if mul(S.one, a) != a or mul(a, S.one) != a:
            fail("multiplicative identity", a)
        if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)):
            fail("left distributivity", a, b, c)
        if mul(add(a, b), c) != add(mul(a, c), mul(b, c)):
            fail("right distributivity", a, b, c)
        if mul(S.zero, a) != S.zero or mul(a, S.zero) != S.zero:
            fail("annihilation", a)
        if mul(a, b) != mul(b, a):
            fail("multiplicative commutativity", a, b)
        if S.supports_negation and add(a, S.neg(a)) != S.zero:
            fail("additive inverse", a)

    if S.zero == S.one:
        report.violations.append("trivial semiring: 0 = 1")

    two = S.add(S.one, S.one)
    report.idempotent_confirmed = two == S.one
    if report.idempotent_confirmed != S.is_idempotent:
        report.violations.append(
            f"is_idempotent declared {S.is_idempotent} but 1+1=1 is {report.idempotent_confirmed}"
        )

    folds = [S.zero]
    for _ in range(64):
        folds.append(S.add(folds[-1], S.one))
    if S.characteristic == 0:
        report.characteristic_confirmed = len(set(map(repr, folds))) == len(folds)
    elif S.characteristic == IDEMPOTENT:
        report.characteristic_confirmed = report.idempotent_confirmed
    else:
        c = int(S.characteristic)
        report.characteristic_confirmed = S.embed_natural(c) == S.zero and all(
            S.embed_natural(k) != S.zero for k in range(1, c)
        )
    if not report.characteristic_confirmed:
        report.violations.append(f"declared characteristic {S.characteristic} not confirmed")
    return report
