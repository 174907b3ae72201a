import pytest

from sigmastar.canonical import Alphabet
from sigmastar.samples import all_samples


@pytest.fixture(scope="session")
def ab() -> Alphabet:
    return Alphabet.from_text("ab")


@pytest.fixture(scope="session")
def corpus():
    return all_samples()
