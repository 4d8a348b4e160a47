"""Binary and CSV persistence of lattice fields and support masks."""

import csv
import struct
from pathlib import Path

import numpy as np

from fiolab.exceptions import InvalidGridError, ReportFormatError
from fiolab.lattice.field import Field
from fiolab.lattice.grid import GridSpec, make_grid
from fiolab.lattice.types import BoolArray, DomainTag

HEADER = struct.Struct("<4sIIdI8x")
MAGIC = b"FLD1"
SPACE_TAG = 0
FREQUENCY_TAG = 1
MASK_TAG = 2
MAX_CSV_POINTS = 65536

DOMAIN_TAGS: dict[DomainTag, int] = {"space": SPACE_TAG, "frequency": FREQUENCY_TAG}
SAMPLE_DTYPE = np.dtype("<c16")


def _header(grid: GridSpec, tag: int) -> bytes:
    return HEADER.pack(MAGIC, grid.dim, grid.points_per_axis, grid.box_length, tag)


def _parse_header(data: bytes) -> tuple[GridSpec, int]:
    if len(data) < HEADER.size:
        raise ReportFormatError.truncated()
    magic, dim, points, length, tag = HEADER.unpack_from(data)
    if magic != MAGIC or tag not in {SPACE_TAG, FREQUENCY_TAG, MASK_TAG}:
        raise ReportFormatError.bad_header()
    try:
        grid = make_grid(dim, points, length)
    except InvalidGridError as exc:
        raise ReportFormatError.bad_header() from exc
    return grid, tag


def encode_field(field: Field) -> bytes:
    """
    Serialize a field as a 32-byte header followed by complex128 samples.

    Args:
        field: Field to encode.

    Returns:
        bytes: Little-endian payload.

    """
    samples = np.ascontiguousarray(field.samples, dtype=SAMPLE_DTYPE)
    return _header(field.grid, DOMAIN_TAGS[field.domain]) + samples.tobytes()


def decode_field(data: bytes) -> Field:
    """
    Rebuild a field written by ``encode_field``.

    Args:
        data: Encoded payload.

    Returns:
        Field: Field with the stored grid, domain and samples.

    Raises:
        ReportFormatError: If the header is malformed, names a mask, or the
            payload is shorter than the grid requires.

    """
    grid, tag = _parse_header(data)
    if tag == MASK_TAG:
        raise ReportFormatError.bad_header()
    size = grid.point_count * SAMPLE_DTYPE.itemsize
    payload = data[HEADER.size : HEADER.size + size]
    if len(payload) < size:
        raise ReportFormatError.truncated()
    samples = np.frombuffer(payload, dtype=SAMPLE_DTYPE).reshape(grid.shape)
    domain: DomainTag = "space" if tag == SPACE_TAG else "frequency"
    return Field(grid=grid, samples=samples.astype(np.complex128), domain=domain)


def encode_mask(grid: GridSpec, mask: BoolArray) -> bytes:
    """
    Serialize a boolean mask as a header followed by packed bits.

    Args:
        grid: Lattice the mask lives on.
        mask: Boolean array of shape ``grid.shape``.

    Returns:
        bytes: Little-endian payload.

    Raises:
        InvalidGridError: If the mask does not match the lattice.

    """
    array = np.asarray(mask, dtype=bool)
    if array.shape != grid.shape:
        raise InvalidGridError.wrong_shape(grid.shape, array.shape)
    return _header(grid, MASK_TAG) + np.packbits(array.ravel()).tobytes()


def decode_mask(data: bytes) -> tuple[GridSpec, BoolArray]:
    """
    Rebuild a mask written by ``encode_mask``.

    Args:
        data: Encoded payload.

    Returns:
        tuple[GridSpec, BoolArray]: Lattice and mask.

    Raises:
        ReportFormatError: If the header is malformed or the bits are truncated.

    """
    grid, tag = _parse_header(data)
    if tag != MASK_TAG:
        raise ReportFormatError.bad_header()
    size = -(-grid.point_count // 8)
    payload = data[HEADER.size : HEADER.size + size]
    if len(payload) < size:
        raise ReportFormatError.truncated()
    bits = np.unpackbits(np.frombuffer(payload, dtype=np.uint8))
    return grid, bits[: grid.point_count].astype(bool).reshape(grid.shape)


def write_field(field: Field, path: Path) -> Path:
    """
    Write a field binary to disk.

    Args:
        field: Field to store.
        path: Target file; parent directories are created.

    Returns:
        Path: Location of the file.

    """
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(encode_field(field))
    return path


def read_field(path: Path) -> Field:
    """
    Read a field binary from disk.

    Args:
        path: File written by ``write_field``.

    Returns:
        Field: Decoded field.

    """
    return decode_field(path.read_bytes())


def export_field_csv(field: Field, path: Path) -> Path:
    """
    Write one row per lattice point: indices, coordinates, real and imaginary part.

    Args:
        field: Field to export.
        path: Target CSV.

    Returns:
        Path: Location of the file.

    Raises:
        InvalidGridError: If the grid has more than 65536 points.

    """
    grid = field.grid
    if grid.point_count > MAX_CSV_POINTS:
        raise InvalidGridError.too_large_for_csv(grid.point_count)
    axes = range(grid.dim)
    columns = [f"j{axis}" for axis in axes] + [f"x{axis}" for axis in axes]
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as stream:
        writer = csv.writer(stream)
        writer.writerow([*columns, "re", "im"])
        for index in np.ndindex(*grid.shape):
            value = complex(field.samples[index])
            writer.writerow(
                [
                    *index,
                    *(repr(j * grid.spacing) for j in index),
                    repr(value.real),
                    repr(value.imag),
                ],
            )
    return path
