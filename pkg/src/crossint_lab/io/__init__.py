"""Text formats for families and pairs."""

from .fam_format import (
    decode_family,
    decode_pair,
    encode_family,
    encode_pair,
    read_family,
    read_pair,
    write_family,
    write_pair,
)

__all__ = [
    "decode_family",
    "decode_pair",
    "encode_family",
    "encode_pair",
    "read_family",
    "read_pair",
    "write_family",
    "write_pair",
]
