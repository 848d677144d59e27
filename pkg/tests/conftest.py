import pytest

from fibrun.graph_oracle import build_index

EX21_BETA = "100110001110000011100"
EX21_GAMMA = "111111111110000000000"
EX28_ALPHA = "1001111111000000001100011100"
EX28_BETA = "1110000100111000011111100000"


@pytest.fixture(scope="session")
def index_cache():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = build_index(n)
        return cache[n]

    return get
