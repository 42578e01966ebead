import hashlib
import json
import logging
import os
import pathlib
import tempfile
from typing import Dict, Sequence

from tenacity import retry, retry_if_exception_type, stop_after_attempt, wait_fixed

from errors import MalformedInput
from hook_tableaux import HookLabel
from superpoly import SuperPoly


def content_hash(poly_json: Dict) -> str:
    canonical = json.dumps(poly_json, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


class MemoStore:
    """
    MemoStore class
    Keeps built nonsymmetric polynomials on disk, one JSON file per node.
    File names are <N>_<m>_<family>_<E bitmask>_<alpha joined by '-'>.json.
    JSON example:
    {
        "node": {"N": 2, "m": 0, "family": 0, "E": [2], "alpha": [1, 0]},
        "sha256": "5f1c...",
        "poly": {
            "N": 2,
            "m": 0,
            "terms": [
                {"alpha": [1, 0], "set": [], "coeff": {"num": ["1/1"], "den": ["1/1"]}},
                ...
            ]
        }
    }
    """

    def __init__(self, cache_dir: str):
        """
        :param cache_dir: directory of the store, created on first save
        """
        self.cache_dir = pathlib.Path(cache_dir)
        self.hits = 0
        self.rejected = 0

    def path_of(self, alpha: Sequence[int], label: HookLabel) -> pathlib.Path:
        name = f"{label.N}_{label.m}_{label.family}_{label.E}_{'-'.join(map(str, alpha))}.json"
        return self.cache_dir / name

    @retry(retry=retry_if_exception_type(json.JSONDecodeError), stop=stop_after_attempt(3),
           wait=wait_fixed(0.05), reraise=True)
    def _read(self, path: pathlib.Path) -> Dict:
        with open(path, 'r') as file:
            return json.load(file)

    def load(self, alpha: Sequence[int], label: HookLabel) -> SuperPoly | None:
        path = self.path_of(alpha, label)
        if not path.is_file():
            return None
        try:
            entry = self._read(path)
            poly_json = entry['poly']
            if content_hash(poly_json) != entry.get('sha256'):
                logging.warning(f'Ignoring {path.name}: content hash mismatch')
                self.rejected += 1
                return None
            poly = SuperPoly.from_json(poly_json)
        except (json.JSONDecodeError, KeyError, TypeError, MalformedInput) as e:
            logging.warning(f'Ignoring unreadable memo entry {path.name}: {e}')
            self.rejected += 1
            return None
        if (poly.N, poly.m) != (label.N, label.m):
            logging.warning(f'Ignoring {path.name}: stored for N={poly.N}, m={poly.m}')
            self.rejected += 1
            return None
        self.hits += 1
        return poly

    def save(self, alpha: Sequence[int], label: HookLabel, poly: SuperPoly):
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        poly_json = poly.to_json()
        entry = {
            'node': {**label.to_json(), 'alpha': list(alpha)},
            'sha256': content_hash(poly_json),
            'poly': poly_json,
        }
        path = self.path_of(alpha, label)
        # sibling temp file, then an atomic replace
        fd, tmp = tempfile.mkstemp(dir=self.cache_dir, suffix='.tmp')
        try:
            with os.fdopen(fd, 'w') as file:
                json.dump(entry, file, sort_keys=True)
            os.replace(tmp, path)
        except OSError:
            pathlib.Path(tmp).unlink(missing_ok=True)
            raise
        logging.debug(f'Saved {path.name}')

    def info(self) -> Dict:
        entries = len(list(self.cache_dir.glob('*.json'))) if self.cache_dir.is_dir() else 0
        return {'dir': str(self.cache_dir), 'entries': entries, 'hits': self.hits, 'rejected': self.rejected}
