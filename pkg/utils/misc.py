import json
from typing import Any, Iterator, List, Union

import mmh3
import numpy as np


def checksum(data: Union[bytes, str]) -> int:
    """Unsigned 32-bit MurmurHash3 of a dataset's raw bytes"""
    return mmh3.hash(data, signed=False)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_list(mask: int) -> List[int]:
    return list(iter_bits(mask))


def popcount(mask: int) -> int:
    return bin(mask).count('1')


def complex_to_json(array: np.ndarray) -> Any:
    """Nested lists with every complex entry as a [re, im] pair"""
    array = np.asarray(array, dtype=complex)
    return np.stack([array.real, array.imag], axis=-1).tolist()


def complex_from_json(data: Any) -> np.ndarray:
    pairs = np.asarray(data, dtype=float)
    if pairs.ndim == 0 or pairs.shape[-1] != 2:
        raise ValueError('complex entries must be [re, im] pairs')
    return pairs[..., 0] + 1j * pairs[..., 1]


def dump_json(obj: Any) -> str:
    return json.dumps(obj, separators=(',', ':'), sort_keys=True)
