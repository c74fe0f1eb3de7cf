"""
Shared fixtures; puts src/ on the import path the way the scripts do
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from config import FIXTURES_DIR
from terms import enumerate_terms, load_signature, parse_term
from theta_embedding import build_context


@pytest.fixture(scope='session')
def fixtures_dir():
    return FIXTURES_DIR


@pytest.fixture(scope='session')
def ctx0():
    return build_context(0)


@pytest.fixture(scope='session')
def ctx1():
    return build_context(1)


@pytest.fixture(scope='session')
def ctx2():
    return build_context(2)


@pytest.fixture(scope='session')
def sig_ag():
    return load_signature(FIXTURES_DIR / 'sig_ag.json')


@pytest.fixture(scope='session')
def f1_terms(ctx1):
    """Every F_1 term with at most 4 nodes"""
    return list(enumerate_terms(ctx1.signature, 4))


@pytest.fixture
def term1(ctx1):
    """Parse over F_1"""
    return lambda text: parse_term(text, ctx1.signature)
