import json
import typing

from django.core.serializers.json import DjangoJSONEncoder

from .bpd import BPD
from .exceptions import ParseError
from .insertion import Biletter, PlacticBiword
from .knuth import VerificationReport
from .permutation import CoverData, DecoratedChain, Permutation, cover_up
from .polynomial import IntPolynomial
from .tableau import SSYT, Shape


class PipeDreamsEncoder(DjangoJSONEncoder):
    """
    Extends the encoder to include sets and the package's value types
    """

    def default(self, obj):
        if isinstance(obj, (set, frozenset)):
            return sorted(obj)
        if isinstance(obj, Permutation):
            return obj.to_list()
        if isinstance(obj, BPD):
            return obj.to_list()
        if isinstance(obj, SSYT):
            return obj.to_list()
        if isinstance(obj, Shape):
            return list(obj)
        if isinstance(obj, IntPolynomial):
            return obj.to_list()
        if isinstance(obj, Biletter):
            return [obj.a, obj.k]
        if isinstance(obj, (PlacticBiword, DecoratedChain, CoverData, VerificationReport)):
            return obj.as_dict()
        return DjangoJSONEncoder.default(self, obj)


def dumps(obj, **kwargs) -> str:
    return json.dumps(obj, cls=PipeDreamsEncoder, **kwargs)


def _load(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as ex:
        raise ParseError(error=f"Cannot read {what} JSON", context=str(ex))


def parse_permutation(text) -> Permutation:
    return Permutation.parse(text)


def parse_bpd(text: str) -> BPD:
    """Either the tile text format or a JSON list of row strings"""
    text = text.strip()
    if text.startswith("["):
        return BPD(_load(text, "BPD"))
    return BPD.parse(text)


def parse_biword(text: str) -> PlacticBiword:
    data = _load(text, "biword")
    try:
        return PlacticBiword.from_rows(data["top"], data["bottom"])
    except (KeyError, TypeError) as ex:
        raise ParseError(error="A biword needs 'top' and 'bottom' lists", context=str(ex))


def parse_chain(text: str) -> DecoratedChain:
    data = _load(text, "chain")
    try:
        perm = Permutation(data.get("start", []))
        steps = []
        for step in data["steps"]:
            steps.append(cover_up(perm, step["alpha"], step["beta"], label=step.get("label")))
            perm = perm.t(step["alpha"], step["beta"])
        return DecoratedChain(Permutation(data.get("start", [])), tuple(steps))
    except (KeyError, TypeError, AttributeError) as ex:
        raise ParseError(error="A chain needs 'start' and 'steps'", context=str(ex))


def parse_tableau(text: str) -> SSYT:
    return SSYT(_load(text, "tableau"))


def parse_polynomial(text: str) -> IntPolynomial:
    data = _load(text, "polynomial")
    try:
        return IntPolynomial({tuple(exponents): coefficient for exponents, coefficient in data})
    except (TypeError, ValueError) as ex:
        raise ParseError(error="A polynomial is a list of [exponents, coefficient]", context=str(ex))


def parse_labels(text: str) -> typing.Tuple[int, ...]:
    try:
        return tuple(int(part) for part in str(text).replace(" ", "").split(",") if part)
    except ValueError as ex:
        raise ParseError(error=f"Cannot read labels {text!r}", context=str(ex))
