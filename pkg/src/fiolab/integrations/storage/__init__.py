"""Field binary codec and CSV export."""

from .field_codec import (
    decode_field,
    decode_mask,
    encode_field,
    encode_mask,
    export_field_csv,
    read_field,
    write_field,
)

__all__ = [
    "decode_field",
    "decode_mask",
    "encode_field",
    "encode_mask",
    "export_field_csv",
    "read_field",
    "write_field",
]
