import json

from hook_tableaux import HookLabel
from jack_graph import build_jack, clear_memo, set_store
from memo_store import MemoStore, content_hash

ALPHA = (0, 1, 1, 0)
LABEL = HookLabel.of(4, 2, 0, [2, 3, 4])


class TestMemoStore:
    def test_missing_entry(self, tmp_path):
        store = MemoStore(str(tmp_path / 'cache'))
        assert store.load(ALPHA, LABEL) is None
        assert store.info()['entries'] == 0

    def test_save_and_load(self, tmp_path):
        store = MemoStore(str(tmp_path / 'cache'))
        J = build_jack(ALPHA, LABEL)
        store.save(ALPHA, LABEL, J)
        assert store.path_of(ALPHA, LABEL).name == f'4_2_0_{LABEL.E}_0-1-1-0.json'
        assert store.load(ALPHA, LABEL) == J
        assert store.info() == {'dir': str(tmp_path / 'cache'), 'entries': 1, 'hits': 1, 'rejected': 0}
        assert not list((tmp_path / 'cache').glob('*.tmp'))

    def test_hash_mismatch_is_rejected(self, tmp_path):
        store = MemoStore(str(tmp_path))
        store.save(ALPHA, LABEL, build_jack(ALPHA, LABEL))
        path = store.path_of(ALPHA, LABEL)
        entry = json.loads(path.read_text())
        entry['poly']['terms'] = entry['poly']['terms'][1:]
        path.write_text(json.dumps(entry))
        assert store.load(ALPHA, LABEL) is None
        assert store.rejected == 1

    def test_unreadable_entry_is_rejected(self, tmp_path):
        store = MemoStore(str(tmp_path))
        store.path_of(ALPHA, LABEL).write_text('{"poly": ')
        assert store.load(ALPHA, LABEL) is None
        assert store.rejected == 1

    def test_wrong_degree_is_rejected(self, tmp_path):
        store = MemoStore(str(tmp_path))
        other = HookLabel.of(4, 1, 0, [3, 4])
        store.save(ALPHA, LABEL, build_jack((0, 1, 1, 0), other))
        assert store.load(ALPHA, LABEL) is None

    def test_hash_ignores_key_order(self):
        assert content_hash({'a': 1, 'b': [1, 2]}) == content_hash({'b': [1, 2], 'a': 1})

    def test_builder_reads_the_store(self, tmp_path):
        store = MemoStore(str(tmp_path))
        set_store(store)
        J = build_jack(ALPHA, LABEL)
        assert store.path_of(ALPHA, LABEL).is_file()
        clear_memo()
        assert build_jack(ALPHA, LABEL) == J
        assert store.hits == 1
