import pytest
from hypothesis import strategies as st

from optbwt import StringCollection

FIVE = ("TCGA", "GGAA", "TCCT", "TTCT", "GCCT")
SEVEN = ("TGA", "CACAA", "AGAGT", "TAA", "CGAGT", "CCA", "TA")


@pytest.fixture
def five():
    return StringCollection.of(*FIVE)


@pytest.fixture
def seven():
    return StringCollection.of(*SEVEN)


def collections(max_k=6, max_len=6, alphabet="ACGT"):
    strings = st.text(alphabet=alphabet, min_size=1, max_size=max_len)
    return st.lists(strings, min_size=1, max_size=max_k).map(lambda xs: StringCollection.of(*xs))
