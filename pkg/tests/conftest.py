import pytest

from colorkeys import Alphabet, KeySpace, SessionConfig, train

TINY_CORPUS = [
    "hello world how are you",
    "hello there world",
    "how is the weather today",
    "the world says hello",
    "are you there",
]


@pytest.fixture(scope="session")
def tiny_model():
    return train(TINY_CORPUS, order=3)


@pytest.fixture(scope="session")
def ab_model():
    # two-symbol alphabet keeps belief dynamics easy to reason about
    return train(["abababab", "aabb", "abba"], order=2, alphabet=Alphabet("ab"))


@pytest.fixture()
def tiny_config(tiny_model):
    return SessionConfig(lm=tiny_model)


@pytest.fixture(scope="session")
def keyspace():
    return KeySpace(Alphabet())
