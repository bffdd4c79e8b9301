"""On-disk cache for expensive computed objects.

One file per key.  Each file holds a version tag, the JSON payload and a
content hash of the payload, so corruption is detected without any
database dependency.  A corrupt or stale entry is treated as a miss (the
caller recomputes and overwrites) with a warning.
"""

import hashlib
import json
import os
import warnings

CACHE_VERSION = '1'


def _canonical(obj):
    return json.dumps(obj, sort_keys=True, separators=(',', ':'))


def cache_key(parts):
    """Deterministic file-name key from a tuple describing the object
    (kind, ranks, degree, ...)."""
    return hashlib.sha256(_canonical(list(parts)).encode()).hexdigest()


class DiskCache:

    def __init__(self, directory):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    def _path(self, parts):
        return os.path.join(self.directory, cache_key(parts) + '.json')

    def load(self, parts):
        """The stored payload, or None on miss/corruption (with warning)."""
        path = self._path(parts)
        if not os.path.exists(path):
            return None
        try:
            with open(path) as fh:
                data = json.load(fh)
            if data.get('version') != CACHE_VERSION:
                return None
            payload = data['payload']
            digest = hashlib.sha256(_canonical(payload).encode()).hexdigest()
            if digest != data['hash']:
                raise ValueError('content hash mismatch')
            return payload
        except Exception as exc:
            warnings.warn('corrupt cache entry %s (%s); recomputing'
                          % (os.path.basename(path), exc))
            return None

    def store(self, parts, payload):
        digest = hashlib.sha256(_canonical(payload).encode()).hexdigest()
        data = {'version': CACHE_VERSION, 'key': list(parts),
                'payload': payload, 'hash': digest}
        tmp = self._path(parts) + '.tmp'
        with open(tmp, 'w') as fh:
            json.dump(data, fh)
        os.replace(tmp, self._path(parts))


def default_cache(cache_dir=None):
    """DiskCache from an explicit directory or the SUPERCAPELLI_CACHE
    environment variable; None when neither is set (caching disabled)."""
    directory = cache_dir or os.environ.get('SUPERCAPELLI_CACHE')
    return DiskCache(directory) if directory else None
