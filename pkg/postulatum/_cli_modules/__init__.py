from .classify import Classify  # noqa: F401
from .explore_finite import ExploreFinite  # noqa: F401
from .sdenied import SDenied  # noqa: F401
from .verify import Verify  # noqa: F401
from .zones import Zones  # noqa: F401
