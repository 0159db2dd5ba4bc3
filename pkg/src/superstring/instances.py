"""Reading instance files and generating random instances."""

from __future__ import annotations

import random
from pathlib import Path

from superstring.core import Instance, validate_instance
from superstring.errors import InfeasibleGeneration, ParseError

ALPHABET = b"ACGTBDEFHIJKLMNOPQRSUVWXYZ"
DEFAULT_SEED = 20170612


def parse_lines(data: bytes) -> Instance:
    strings = [line.rstrip() for line in data.splitlines()]
    return validate_instance([s for s in strings if s])


def parse_fasta(data: bytes) -> Instance:
    records: list[bytearray] = []
    header_line = 0
    for lineno, line in enumerate(data.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith(b">"):
            if records and not records[-1]:
                raise ParseError("record has no sequence", header_line)
            records.append(bytearray())
            header_line = lineno
        elif line.startswith(b";"):
            continue
        elif not records:
            raise ParseError("sequence data before the first '>' header", lineno)
        else:
            records[-1] += line.upper()
    if records and not records[-1]:
        raise ParseError("record has no sequence", header_line)
    return validate_instance([bytes(r) for r in records])


def parse_input(path: str | Path, fmt: str = "lines") -> Instance:
    """Read an instance; raises ``OSError`` when the file cannot be read."""
    data = Path(path).read_bytes()
    if fmt == "lines":
        return parse_lines(data)
    if fmt == "fasta":
        return parse_fasta(data)
    raise ValueError(f"unknown input format {fmt!r}")


def format_lines(inst: Instance) -> bytes:
    return b"".join(s + b"\n" for s in inst.strings)


def generate_uniform(n: int, r: int, alphabet_size: int, seed: int = DEFAULT_SEED) -> Instance:
    """``n`` distinct uniform random strings of length ``r``."""
    if not 1 <= alphabet_size <= len(ALPHABET):
        raise InfeasibleGeneration(f"alphabet size must be in [1, {len(ALPHABET)}]")
    if alphabet_size ** r < n:
        raise InfeasibleGeneration(
            f"only {alphabet_size}^{r} = {alphabet_size ** r} distinct strings, need {n}")
    rng = random.Random(seed)
    sigma = ALPHABET[:alphabet_size]
    seen: dict[bytes, None] = {}
    while len(seen) < n:
        seen.setdefault(bytes(rng.choices(sigma, k=r)))
    return validate_instance(list(seen))


def generate_reads(n: int, r: int, alphabet_size: int, reference_length: int,
                   seed: int = DEFAULT_SEED) -> Instance:
    """``n`` distinct length-``r`` substrings of one random reference string."""
    return sample_reference(n, r, alphabet_size, reference_length, seed)[0]


def sample_reference(n: int, r: int, alphabet_size: int, reference_length: int,
                     seed: int = DEFAULT_SEED, attempts: int = 100) -> tuple[Instance, bytes]:
    """Like :func:`generate_reads`, also returning the reference string."""
    if not 1 <= alphabet_size <= len(ALPHABET):
        raise InfeasibleGeneration(f"alphabet size must be in [1, {len(ALPHABET)}]")
    if alphabet_size ** r < n or reference_length - r + 1 < n:
        raise InfeasibleGeneration(
            f"a reference of length {reference_length} cannot hold {n} distinct {r}-mers")
    rng = random.Random(seed)
    sigma = ALPHABET[:alphabet_size]
    for _ in range(attempts):
        ref = bytes(rng.choices(sigma, k=reference_length))
        kmers = list(dict.fromkeys(ref[i:i + r] for i in range(reference_length - r + 1)))
        if len(kmers) >= n:
            return validate_instance(rng.sample(kmers, n)), ref
    raise InfeasibleGeneration(
        f"no reference with {n} distinct {r}-mers found in {attempts} attempts")
