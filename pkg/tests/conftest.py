import pytest

from binfec.basis import build_basis_tables
from binfec.field import tables_for


@pytest.fixture(scope="session")
def ft8():
    return tables_for(8)


@pytest.fixture(scope="session")
def bt8(ft8):
    return build_basis_tables(ft8, 256)


@pytest.fixture(scope="session")
def ft16():
    return tables_for(16)


@pytest.fixture(scope="session")
def bt16(ft16):
    return build_basis_tables(ft16, 1 << 16)
