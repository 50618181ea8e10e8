"""
Exact integer polynomials in x_1, x_2, ...
"""
import typing
from fractions import Fraction

Exponents = typing.Tuple[int, ...]


def _trim(exponents: typing.Iterable[int]) -> Exponents:
    exponents = list(exponents)
    while exponents and exponents[-1] == 0:
        exponents.pop()
    return tuple(exponents)


def _add(a: Exponents, b: Exponents) -> Exponents:
    n = max(len(a), len(b))
    a, b = a + (0,) * (n - len(a)), b + (0,) * (n - len(b))
    return _trim(x + y for x, y in zip(a, b))


class IntPolynomial:
    """
    A finite map from exponent vectors to nonzero integer coefficients.
    Exponent vectors carry no trailing zeros, so x_1 is (1,) and 1 is ().
    """

    terms_: typing.Dict[Exponents, int]

    def __init__(self, terms: typing.Mapping[typing.Iterable[int], int] = None):
        self.terms_ = {}
        for exponents, coefficient in (terms or {}).items():
            if coefficient:
                key = _trim(exponents)
                total = self.terms_.get(key, 0) + int(coefficient)
                if total:
                    self.terms_[key] = total
                else:
                    self.terms_.pop(key, None)

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls({(): c})

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls.constant(1)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls()

    @classmethod
    def variable(cls, i: int) -> "IntPolynomial":
        return cls.monomial((0,) * (i - 1) + (1,))

    @classmethod
    def monomial(cls, exponents: typing.Iterable[int], coefficient: int = 1) -> "IntPolynomial":
        return cls({tuple(exponents): coefficient})

    def terms(self) -> typing.List[typing.Tuple[Exponents, int]]:
        return sorted(self.terms_.items(), reverse=True)

    def coefficient(self, exponents: typing.Iterable[int]) -> int:
        return self.terms_.get(_trim(exponents), 0)

    def __bool__(self):
        return bool(self.terms_)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return isinstance(other, IntPolynomial) and self.terms_ == other.terms_

    def __hash__(self):
        return hash(frozenset(self.terms_.items()))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        terms = dict(self.terms_)
        for exponents, coefficient in other.terms_.items():
            terms[exponents] = terms.get(exponents, 0) + coefficient
        return IntPolynomial(terms)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial({e: -c for e, c in self.terms_.items()})

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial({e: c * other for e, c in self.terms_.items()})
        terms: typing.Dict[Exponents, int] = {}
        for a, ca in self.terms_.items():
            for b, cb in other.terms_.items():
                key = _add(a, b)
                terms[key] = terms.get(key, 0) + ca * cb
        return IntPolynomial(terms)

    __rmul__ = __mul__

    @property
    def nvars(self) -> int:
        """Largest variable index that occurs"""
        return max((len(e) for e in self.terms_), default=0)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms_), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms_}) <= 1

    def __str__(self):
        if not self.terms_:
            return "0"
        parts = []
        for exponents, coefficient in self.terms():
            factors = [
                f"x{i}" if power == 1 else f"x{i}^{power}"
                for i, power in enumerate(exponents, start=1)
                if power
            ]
            monomial = "*".join(factors)
            if not monomial:
                parts.append(str(coefficient))
            elif coefficient == 1:
                parts.append(monomial)
            elif coefficient == -1:
                parts.append(f"-{monomial}")
            else:
                parts.append(f"{coefficient}*{monomial}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"IntPolynomial({self})"

    def to_list(self) -> list:
        return [[list(e), c] for e, c in self.terms()]


def divided_difference(f: IntPolynomial, i: int) -> IntPolynomial:
    """
    (f - s_i f) / (x_i - x_{i+1}), computed one x_{i+1}-free slice at a time.

    Grouping terms by their other exponents, each slice is a binary form in
    (x_i, x_{i+1}) whose quotient by x_i - x_{i+1} has a closed form.
    """
    slices: typing.Dict[tuple, typing.Dict[typing.Tuple[int, int], Fraction]] = {}
    for exponents, coefficient in f.terms_.items():
        padded = list(exponents) + [0] * max(0, i + 1 - len(exponents))
        a, b = padded[i - 1], padded[i]
        rest = tuple(padded[: i - 1]) + (None, None) + tuple(padded[i + 1 :])
        slices.setdefault(rest, {})
        slices[rest][(a, b)] = slices[rest].get((a, b), 0) + Fraction(coefficient)

    result: typing.Dict[Exponents, int] = {}
    for rest, binary in slices.items():
        for (a, b), coefficient in binary.items():
            # (x^a y^b - x^b y^a) / (x - y) = sign * sum of x^p y^q over p + q = a + b - 1, min(a, b) <= p, q
            if a == b:
                continue
            sign = 1 if a > b else -1
            low, high = min(a, b), max(a, b)
            for p in range(low, high):
                q = a + b - 1 - p
                exponents = list(rest)
                exponents[i - 1], exponents[i] = p, q
                key = _trim(exponents)
                result[key] = result.get(key, 0) + sign * coefficient

    terms = {}
    for key, value in result.items():
        if value.denominator != 1:
            raise ArithmeticError(f"Divided difference left a non-integral coefficient {value}")
        terms[key] = int(value)
    return IntPolynomial(terms)
