from zetafrac.arith.bigratio import (
    Rational,
    RationalPower,
    as_rational,
    decimal_from_parts,
    frac_lt,
    frac_part,
    int_from_text,
    int_text,
    json_text,
    pow_decompose,
    rat,
    rational_text,
    to_decimal,
)
from zetafrac.arith.enclosure import (
    Enclosure,
    FloorCertificate,
    LevelRefiner,
    certified_floor,
    enc_add,
    enc_frac,
    enc_mul,
    enc_neg,
    enc_recip,
    enc_sub,
)

__all__ = [
    "Enclosure",
    "FloorCertificate",
    "LevelRefiner",
    "Rational",
    "RationalPower",
    "as_rational",
    "certified_floor",
    "decimal_from_parts",
    "enc_add",
    "enc_frac",
    "enc_mul",
    "enc_neg",
    "enc_recip",
    "enc_sub",
    "frac_lt",
    "frac_part",
    "int_from_text",
    "int_text",
    "json_text",
    "pow_decompose",
    "rat",
    "rational_text",
    "to_decimal",
]
