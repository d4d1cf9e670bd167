import pytest
from hypothesis import settings

from wonderkit import build_root_system, weyl_group

settings.register_profile("repo", max_examples=60, deadline=None)
settings.load_profile("repo")

SMALL_TYPES = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2", "A1xA1", "A2xB2"]


@pytest.fixture(params=SMALL_TYPES)
def small_rs(request):
    return build_root_system(request.param)


def element_from_word(rs, word):
    return weyl_group(rs).from_word([i % rs.rank + 1 for i in word])
