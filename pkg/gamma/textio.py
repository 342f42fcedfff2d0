"""Text and JSON encodings shared by the CLI, the reports and the q-cache."""

from fractions import Fraction

from gamma.combinat import Partition
from gamma.errors import PartitionError

MINUS = "−"
DOT = "·"


def format_rational(value):
    """'num/den' in lowest terms, integers without '/1'."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError, AttributeError):
        raise PartitionError(f"Cannot read rational from '{text}'")


def format_parts(parts):
    return ",".join(str(p) for p in parts)


def render_terms(terms, symbol="p"):
    """Render a {partition: coefficient} map as '8/3·p[1,1,1] − 2/3·p[3]'.

    Terms are listed in ascending lexicographic order of their partitions.
    """
    if not terms:
        return "0"
    pieces = []
    for key in sorted(terms):
        coef = Fraction(terms[key])
        negative = coef < 0
        magnitude = -coef if negative else coef
        if not key:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = f"{symbol}[{format_parts(key)}]"
        else:
            body = f"{format_rational(magnitude)}{DOT}{symbol}[{format_parts(key)}]"
        if not pieces:
            pieces.append(f"{MINUS}{body}" if negative else body)
        else:
            pieces.append(f"{MINUS if negative else '+'} {body}")
    return " ".join(pieces)


def terms_to_json(terms):
    """{partition text: 'num/den'} in canonical descending order."""
    return {format_parts(key): format_rational(terms[key]) for key in sorted(terms, reverse=True)}


def terms_from_json(data):
    return {Partition.parse(key): parse_rational(value) for key, value in data.items()}
