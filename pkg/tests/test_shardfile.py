import numpy as np
import pytest

from binfec.shardfile import (
    HEADER_SIZE,
    InsufficientShardsError,
    ShardFormatError,
    ShardHeader,
    bytes_to_stripes,
    read_shards,
    shard_filename,
    stripes_to_bytes,
    write_shards,
)


def _header(**kw):
    base = dict(r=8, log2_k=7, shard_index=0, original_length=1000,
                reduction_poly=0x11D)
    base.update(kw)
    return ShardHeader(**base)


def test_header_pack_unpack_round_trip():
    h = _header(shard_index=42, original_length=(1 << 40) + 3)
    raw = h.pack()
    assert len(raw) == HEADER_SIZE == 21
    assert ShardHeader.unpack(raw) == h


def test_header_rejects_garbage():
    with pytest.raises(ShardFormatError):
        ShardHeader.unpack(b"nope" + b"\0" * 17)
    with pytest.raises(ShardFormatError):
        ShardHeader.unpack(b"LCHS" + b"\xff" * 17)
    with pytest.raises(ShardFormatError):
        ShardHeader.unpack(b"LCHS\x01")  # truncated


def test_header_fields_little_endian():
    raw = _header(shard_index=0x0102, original_length=0x0A0B0C0D).pack()
    assert raw[:4] == b"LCHS"
    assert raw[4] == 1          # version
    assert raw[5] == 8          # r
    assert raw[6] == 7          # log2_k
    assert raw[7:9] == bytes([0x02, 0x01])
    assert raw[9:17] == bytes([0x0D, 0x0C, 0x0B, 0x0A, 0, 0, 0, 0])
    assert raw[17:21] == bytes([0x1D, 0x01, 0, 0])


def test_stripe_packing_r8_is_verbatim_bytes():
    data = bytes(range(200))
    mat = bytes_to_stripes(data, k=128, r=8)
    assert mat.shape == (2, 128)
    assert mat[0, 5] == 5
    assert mat[1, 200 - 128] == 0  # zero padding
    assert stripes_to_bytes(mat, 8, len(data)) == data


def test_stripe_packing_r16_little_endian():
    data = bytes([0x01, 0x02, 0x03, 0x04])
    mat = bytes_to_stripes(data, k=2, r=16)
    assert mat.shape == (1, 2)
    assert mat[0, 0] == 0x0201
    assert mat[0, 1] == 0x0403
    assert stripes_to_bytes(mat, 16, 4) == data


def test_write_and_read_shards_round_trip(tmp_path):
    rng = np.random.default_rng(91)
    header = _header(log2_k=2, original_length=12)  # k=4, 3 stripes
    codewords = rng.integers(0, 256, (3, 256), dtype=np.uint16)
    paths = write_shards(str(tmp_path), header, codewords)
    assert len(paths) == 256
    consensus, columns, skipped = read_shards(paths)
    assert skipped == []
    assert consensus.same_file(header)
    assert set(columns) == set(range(256))
    for j in (0, 17, 255):
        assert (columns[j] == codewords[:, j]).all()


def test_read_shards_skips_mismatched_headers(tmp_path):
    header = _header(log2_k=2, original_length=12)
    codewords = np.zeros((3, 256), dtype=np.uint16)
    paths = write_shards(str(tmp_path), header, codewords)
    # rewrite one shard with a different geometry: treated as missing
    alien = _header(log2_k=3, original_length=12, shard_index=7)
    with open(paths[7], "wb") as fh:
        fh.write(alien.pack() + b"\0" * 24)
    consensus, columns, skipped = read_shards(paths)
    assert 7 not in columns
    assert len(skipped) == 1 and "disagrees" in skipped[0]


def test_read_shards_skips_short_payloads(tmp_path):
    header = _header(log2_k=2, original_length=12)
    paths = write_shards(str(tmp_path), header, np.zeros((3, 256), dtype=np.uint16))
    with open(paths[3], "ab") as fh:
        fh.write(b"\0")  # payload now one byte too long
    _, columns, skipped = read_shards(paths)
    assert 3 not in columns and len(skipped) == 1


def test_read_shards_empty_dir():
    with pytest.raises(InsufficientShardsError):
        read_shards([])


def test_shard_filenames_sort_numerically():
    names = [shard_filename(i) for i in (0, 9, 10, 255, 65535)]
    assert names == sorted(names)
