import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def adS_images():
    """Shared so(2,3) images of the sig(0,3) sign + deformation."""
    from lieembed.embedding import AntiDeSitterImages, build_deformed
    ctx = build_deformed(0, 3, 1)
    return ctx, AntiDeSitterImages(ctx)
