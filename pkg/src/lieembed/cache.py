"""On-disk memo of normal-ordered elements.

Purely a performance feature: entries are keyed by configuration, element
name and engine version, and a cached value is byte-for-byte the data the
builder would produce.
"""

import hashlib
import json
import os
import tempfile

from . import __version__
from .algebra.central_fraction import CentralFraction
from .algebra.polynomial import NCPolynomial


class PolynomialCache:
    def __init__(self, directory):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)
        self.hits = 0
        self.misses = 0

    def _path(self, key):
        text = json.dumps([__version__] + [str(k) for k in key])
        digest = hashlib.sha256(text.encode()).hexdigest()[:32]
        return os.path.join(self.directory, f"{digest}.json")

    def fetch(self, key, algebra, builder, root=None):
        """Return the cached element for ``key`` or build, store and return it.

        Values may be NCPolynomial or CentralFraction (pass ``root`` for
        the latter so it can be rebuilt on load).
        """
        path = self._path(key)
        if os.path.exists(path):
            with open(path) as fh:
                data = json.load(fh)
            if data.get("algebra") == algebra.name:
                self.hits += 1
                poly = NCPolynomial.from_data(algebra, data["value"])
                if data.get("power") is None:
                    return poly
                return CentralFraction(poly, data["power"], data["root"])
        self.misses += 1
        value = builder()
        if isinstance(value, CentralFraction):
            payload = {"algebra": algebra.name, "value": value.numerator.to_data(),
                       "power": value.power, "root": value.root}
        else:
            payload = {"algebra": algebra.name, "value": value.to_data(), "power": None}
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, sort_keys=True)
        os.replace(tmp, path)
        return value


def cached(cache, key, algebra, builder, root=None):
    if cache is None:
        return builder()
    return cache.fetch(key, algebra, builder, root)
